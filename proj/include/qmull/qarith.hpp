#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qmull/laurent.hpp"

namespace qmull {

// A positive integer or infinity.  Used for l' (order of q) and l (order of q^2).
class Order {
 public:
  static Order infinite() { return Order(); }
  static Order finite(int n);

  bool is_infinite() const { return !value_.has_value(); }
  int value() const;  // throws on infinity
  // "l | x": for infinity this means x == 0
  bool divides(std::int64_t x) const;
  // x mod l, x div l for finite l (floor semantics); infinity: (x, 0)
  std::int64_t mod(std::int64_t x) const;
  std::int64_t div(std::int64_t x) const;

  std::string to_string() const;
  static Order parse(const std::string& s);  // integer or "inf"

  friend bool operator==(const Order&, const Order&) = default;

 private:
  Order() = default;
  explicit Order(int n) : value_(n) {}
  std::optional<int> value_;
};

// Specialisation data: q has multiplicative order l' in a field of
// characteristic p (0 or odd prime).
class CycloContext {
 public:
  CycloContext(Order lprime, int field_char = 0);

  const Order& lprime() const { return lprime_; }
  const Order& l() const { return l_; }
  int field_char() const { return char_; }

  // l'-th cyclotomic polynomial in v (ascending coefficients); empty for infinity
  const std::vector<std::int64_t>& cyclotomic() const { return *phi_; }
  const std::shared_ptr<const std::vector<std::int64_t>>& cyclotomic_shared() const { return phi_; }

  std::string to_string() const;

 private:
  Order lprime_;
  Order l_;
  int char_;
  std::shared_ptr<const std::vector<std::int64_t>> phi_;
};

// n-th cyclotomic polynomial, ascending coefficients
std::vector<std::int64_t> cyclotomic_polynomial(int n);

// Value of a Laurent polynomial at q, in char 0.  For finite l' the residue is
// canonical: exponents folded mod l' and reduced mod Phi_{l'}(v).
class CycloElt {
 public:
  CycloElt(const CycloContext& ctx, const LaurentPoly& p);

  bool is_zero() const { return residue_.is_zero(); }
  const LaurentPoly& residue() const { return residue_; }
  std::string to_string() const { return residue_.to_string(); }

  CycloElt operator+(const CycloElt& o) const;
  CycloElt operator*(const CycloElt& o) const;
  friend bool operator==(const CycloElt& a, const CycloElt& b) {
    return a.lprime_ == b.lprime_ && a.residue_ == b.residue_;
  }

 private:
  CycloElt(Order lp, std::shared_ptr<const std::vector<std::int64_t>> phi, LaurentPoly r)
      : lprime_(lp), phi_(std::move(phi)), residue_(std::move(r)) {}
  Order lprime_;
  std::shared_ptr<const std::vector<std::int64_t>> phi_;
  LaurentPoly residue_;
  friend CycloElt eval_at_q(const LaurentPoly&, const CycloContext&);
};

LaurentPoly quantum_int(int i);
LaurentPoly quantum_factorial(int n);
// symmetric Gaussian binomial [s choose t], t >= 0, any integer s
LaurentPoly gauss_binom(int s, int t);

// v_a^e for the (m|n) split: v^e if a <= m, v^{-e} otherwise
LaurentPoly q_a_power(int a, int e, int m, int n);

CycloElt eval_at_q(const LaurentPoly& p, const CycloContext& ctx);
// char 0 only; in characteristic p use gauss_is_zero_at_q / lucas_nonzero
bool is_zero_at_q(const LaurentPoly& p, const CycloContext& ctx);
// [s choose t]_q == 0, any characteristic, 0 <= t <= s
bool gauss_is_zero_at_q(int s, int t, const CycloContext& ctx);
bool lucas_nonzero(int s, int t, const CycloContext& ctx);

}  // namespace qmull
