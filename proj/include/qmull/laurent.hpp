#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qmull {

// Laurent polynomial in v with int64 coefficients, stored densely from the
// lowest nonzero exponent.  Arithmetic throws std::overflow_error rather than
// wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c);  // NOLINT: constants convert implicitly

  static LaurentPoly monomial(std::int64_t c, int e);
  static LaurentPoly v(int e = 1) { return monomial(1, e); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return is_zero() || (lo_ == 0 && c_.size() == 1); }
  int low_degree() const { return lo_; }
  int high_degree() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int e) const;
  std::size_t num_terms() const;

  // (exponent, coefficient) pairs with nonzero coefficient, ascending
  std::vector<std::pair<int, std::int64_t>> terms() const;

  // v -> v^{-1}
  LaurentPoly bar() const;
  // multiply by v^e
  LaurentPoly shifted(int e) const;
  // v -> v^k (k != 0)
  LaurentPoly substitute_power(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }

  // Exact division; returns false if b does not divide *this in Z[v,v^-1].
  bool divide_exact(const LaurentPoly& b, LaurentPoly& quotient) const;

  LaurentPoly pow(int k) const;

  std::string to_string() const;

  // dense view: coefficient of v^{low_degree()+i}
  const std::vector<std::int64_t>& dense() const { return c_; }
  static LaurentPoly from_dense(int lo, std::vector<std::int64_t> c);

 private:
  int lo_ = 0;
  std::vector<std::int64_t> c_;
  void normalize();
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace qmull
