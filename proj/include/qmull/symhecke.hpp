#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qmull/laurent.hpp"
#include "qmull/weights.hpp"

namespace qmull {

// Permutation of {1..r} in one-line notation; (x*y)(i) = x(y(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line);  // validates
  static Perm identity(int r);
  static Perm simple(int i, int r);  // s_i = (i, i+1)
  static Perm from_word(const std::vector<int>& word, int r);

  int degree() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  int length() const;  // inversion count
  Perm inverse() const;
  // s_{i_1} ... s_{i_k} = *this with k = length()
  std::vector<int> reduced_word() const;
  // conjugation by the longest element: s_i -> s_{r-i}
  Perm dagger() const;
  bool right_ascent(int i) const { return (*this)(i) < (*this)(i + 1); }

  friend Perm operator*(const Perm& x, const Perm& y);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.w_ <=> b.w_; }

  std::string to_string() const;

 private:
  std::vector<int> w_;
};

std::vector<Perm> all_perms(int r);

// Element of the Hecke algebra H_r in the T_w basis, coefficients in v
// (the Hecke parameter is q^2 = v^2).
class HeckeElt {
 public:
  explicit HeckeElt(int r = 0) : r_(r) {}
  static HeckeElt T(const Perm& w);
  static HeckeElt Ti(int i, int r) { return T(Perm::simple(i, r)); }
  static HeckeElt one(int r) { return T(Perm::identity(r)); }

  int degree() const { return r_; }
  const std::map<Perm, LaurentPoly>& terms() const { return t_; }
  LaurentPoly coeff(const Perm& w) const;
  bool is_zero() const { return t_.empty(); }

  void add_term(const Perm& w, const LaurentPoly& c);
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& x);
  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

  // right multiplication by T_{s_i}
  HeckeElt times_simple(int i) const;

  std::string to_string() const;

 private:
  int r_;
  std::map<Perm, LaurentPoly> t_;
};

HeckeElt hecke_mul(const HeckeElt& x, const HeckeElt& y);
// T_i -> (v^2 - 1) - T_i
HeckeElt sharp(const HeckeElt& x);
// T_w -> T_{w dagger}
HeckeElt dagger_hecke(const HeckeElt& x);

struct ParabolicData {
  std::vector<int> generators;           // j with s_j in the parabolic
  std::vector<std::vector<int>> blocks;  // R^lambda_i, consecutive
};
ParabolicData parabolic_data(const std::vector<int>& lambda);
// elements of the parabolic subgroup S_lambda
std::vector<Perm> parabolic_subgroup(const std::vector<int>& lambda);

// minimal length representatives of S_lambda \ S_r / S_mu
std::vector<Perm> min_double_cosets(const std::vector<int>& lambda, const std::vector<int>& mu);
bool is_min_double_coset_rep(const std::vector<int>& lambda, const Perm& d, const std::vector<int>& mu);

// (m+n) x (m+n) nonnegative integer matrix with a parity split
class SuperMatrix {
 public:
  SuperMatrix() = default;
  explicit SuperMatrix(Split split);
  SuperMatrix(Split split, std::vector<int> row_major);

  const Split& split() const { return split_; }
  int dim() const { return split_.size(); }
  int at(int i, int j) const;  // 1-based
  int& at(int i, int j);
  bool odd_entry(int i, int j) const { return split_.parity(i) != split_.parity(j); }

  std::vector<int> ro() const;
  std::vector<int> co() const;
  int total() const;
  bool in_M() const;  // M(m|n, total())
  bool in_P() const;  // zero diagonal, odd entries in {0,1}

  friend bool operator==(const SuperMatrix&, const SuperMatrix&) = default;
  friend auto operator<=>(const SuperMatrix& a, const SuperMatrix& b) { return a.a_ <=> b.a_; }

  // rows separated by ';', entries by ','
  std::string to_string() const;
  static SuperMatrix parse(const std::string& s, Split split);
  const std::vector<int>& data() const { return a_; }

 private:
  Split split_;
  std::vector<int> a_;
};

SuperMatrix iota(const Weight& lambda, const Perm& d, const Weight& mu);
std::tuple<Weight, Perm, Weight> iota_inverse(const SuperMatrix& A);
// D°: odd blocks of iota have entries <= 1
std::vector<Perm> super_double_cosets(const Weight& lambda, const Weight& mu);
SuperMatrix matrix_dagger(const SuperMatrix& A);
std::vector<int> content(const SuperMatrix& A);
std::vector<SuperMatrix> enumerate_M(int m, int n, int r);
// off-diagonal P(m|n) matrices with entry sum <= max_total
std::vector<SuperMatrix> enumerate_P(int m, int n, int max_total);
std::vector<std::pair<SuperMatrix, Weight>> enumerate_Y(int m, int n, int r);

// x_{lambda^(0)} y_{lambda^(1)}
HeckeElt xy_element(const Weight& lambda);

}  // namespace qmull
