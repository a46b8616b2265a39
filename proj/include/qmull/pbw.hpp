#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmull/laurent.hpp"
#include "qmull/weights.hpp"

namespace qmull {

// One letter of a word.  Root: E_{a,b}^{(M)}.  KPow: K_{a,b}^e, with b = 0
// meaning K_a^e.  KBinom: [K_{a,b}; c choose t], b = 0 meaning K_a.
struct GenSymbol {
  enum class Kind { Root, KPow, KBinom };
  Kind kind = Kind::Root;
  int a = 0;
  int b = 0;
  int x = 0;  // M for Root, e for KPow, c for KBinom
  int t = 0;  // KBinom only

  static GenSymbol root(int a, int b, int M = 1) { return {Kind::Root, a, b, M, 0}; }
  static GenSymbol kpow(int a, int b, int e) { return {Kind::KPow, a, b, e, 0}; }
  static GenSymbol kbinom(int a, int b, int c, int t) { return {Kind::KBinom, a, b, c, t}; }

  bool is_root() const { return kind == Kind::Root; }
  bool is_cartan() const { return kind != Kind::Root; }
  bool raising() const { return is_root() && a < b; }
  bool lowering() const { return is_root() && a > b; }
  int power() const { return x; }
  bool odd(const Split& s) const { return is_root() && (s.parity(a) + s.parity(b)) % 2 == 1; }

  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;
  friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
  std::string to_string() const;
};

using Word = std::vector<GenSymbol>;

struct Monomial {
  LaurentPoly coeff;
  Word word;
};

// Finite formal sum of words; identical words are merged and zero
// coefficients dropped.
class UElement {
 public:
  UElement() = default;
  UElement(Word w, LaurentPoly c = LaurentPoly(1)) { add(std::move(w), std::move(c)); }  // NOLINT
  static UElement scalar(const LaurentPoly& c) { return UElement(Word{}, c); }

  void add(Word w, const LaurentPoly& c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, LaurentPoly>& terms() const { return terms_; }
  std::vector<Monomial> monomials() const;
  LaurentPoly coeff(const Word& w) const;

  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator*(const UElement& a, const UElement& b);
  friend UElement operator*(const LaurentPoly& c, const UElement& a);
  friend bool operator==(const UElement&, const UElement&) = default;

  std::string to_string() const;

 private:
  std::map<Word, LaurentPoly> terms_;
};

// Element of the span of F_B m_lambda.  Keys are exponent vectors over the
// engine's lowering order.
struct HWVector {
  Weight lambda;
  std::map<std::vector<int>, LaurentPoly> terms;

  bool is_zero() const { return terms.empty(); }
  LaurentPoly coeff(const std::vector<int>& key) const;
  void add(const std::vector<int>& key, const LaurentPoly& c);
  HWVector& operator+=(const HWVector& o);
  friend bool operator==(const HWVector&, const HWVector&) = default;
};

class PbwEngine {
 public:
  explicit PbwEngine(Split split);

  const Split& split() const { return split_; }
  // positive roots (a,b); F index E_{b,a}.  Sorted by a, then b.
  const std::vector<Root>& lowering_order() const { return order_; }
  int lowering_index(int a, int b) const;  // of E_{b,a}, a < b
  std::vector<int> zero_key() const { return std::vector<int>(order_.size(), 0); }
  // the ordered word F_B
  Word lowering_word(const std::vector<int>& key) const;
  Weight key_weight(const Weight& lambda, const std::vector<int>& key) const;
  Weight symbol_weight(const GenSymbol& s) const;

  // generator expansion, c = b-1 for a < b and c = b+1 for a > b
  UElement root_vector(int a, int b) const;

  // Rewrites x*y for two root powers that are not already in normal order.
  UElement commute(const GenSymbol& x, const GenSymbol& y) const;
  // Cartan * root  ->  root * Cartan'   or   root * Cartan  ->  Cartan'' * root
  UElement move_cartan(const GenSymbol& x, const GenSymbol& y) const;
  // lowering * Cartan * raising, with lowering and raising parts in PBW order
  UElement normalize(const UElement& u) const;
  bool is_normal(const Word& w) const;

  LaurentPoly cartan_value(const GenSymbol& s, const Weight& mu) const;

  HWVector highest(const Weight& lambda) const;
  HWVector act_on_hw(const UElement& u, const Weight& lambda) const;
  HWVector apply(const UElement& u, const HWVector& vec) const;

  // rewrite budget per top-level call
  void set_step_limit(std::int64_t n) { step_limit_ = n; }

 private:
  Split split_;
  std::vector<Root> order_;
  std::vector<int> index_;  // (a,b) -> position
  std::int64_t step_limit_ = 50'000'000;

  int sgn(int a) const { return split_.parity(a) ? -1 : 1; }
  LaurentPoly qpow(int a, int e) const { return LaurentPoly::v(sgn(a) * e); }
  bool odd_root(int a, int b) const { return (split_.parity(a) + split_.parity(b)) % 2 == 1; }

  UElement positive_rule(const GenSymbol& x, const GenSymbol& y) const;
  UElement mixed_rule(const GenSymbol& x, const GenSymbol& y) const;
  bool mixed_direct(int a, int b, int c, int d) const;
  UElement merge_same(const GenSymbol& x, const GenSymbol& y) const;
  bool positive_in_order(const GenSymbol& x, const GenSymbol& y) const;
  bool lowering_in_order(const GenSymbol& x, const GenSymbol& y) const;

  friend struct ApplyState;
};

// anti-automorphism: reverse, E_{a,b} -> E_{b,a}, K^e -> K^{-e}, v -> v^{-1}
UElement upsilon(const UElement& u);
GenSymbol upsilon(const GenSymbol& s);

}  // namespace qmull
