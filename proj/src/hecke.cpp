#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qmull/symhecke.hpp"

namespace qmull {

HeckeElt HeckeElt::T(const Perm& w) {
  HeckeElt h(w.degree());
  h.t_.emplace(w, LaurentPoly(1));
  return h;
}

LaurentPoly HeckeElt::coeff(const Perm& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add_term(const Perm& w, const LaurentPoly& c) {
  if (w.degree() != r_) throw std::invalid_argument("HeckeElt: permutation of wrong degree");
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (o.r_ != r_) throw std::invalid_argument("HeckeElt: degree mismatch");
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (o.r_ != r_) throw std::invalid_argument("HeckeElt: degree mismatch");
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& x) {
  HeckeElt h(x.r_);
  for (const auto& [w, a] : x.t_) h.add_term(w, c * a);
  return h;
}

HeckeElt HeckeElt::times_simple(int i) const {
  HeckeElt h(r_);
  const Perm s = Perm::simple(i, r_);
  const LaurentPoly v2 = LaurentPoly::v(2);
  const LaurentPoly v2m1 = v2 - LaurentPoly(1);
  for (const auto& [w, c] : t_) {
    Perm ws = w * s;
    if (w.right_ascent(i)) {
      h.add_term(ws, c);
    } else {
      h.add_term(w, v2m1 * c);
      h.add_term(ws, v2 * c);
    }
  }
  return h;
}

std::string HeckeElt::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*T[" << w.to_string() << "]";
  }
  return os.str();
}

HeckeElt hecke_mul(const HeckeElt& x, const HeckeElt& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("hecke_mul: degree mismatch");
  HeckeElt out(x.degree());
  for (const auto& [w, c] : y.terms()) {
    HeckeElt part = c * x;
    for (int i : w.reduced_word()) part = part.times_simple(i);
    out += part;
  }
  return out;
}

HeckeElt sharp(const HeckeElt& x) {
  const int r = x.degree();
  HeckeElt out(r);
  const LaurentPoly v2m1 = LaurentPoly::v(2) - LaurentPoly(1);
  for (const auto& [w, c] : x.terms()) {
    HeckeElt img = HeckeElt::one(r);
    for (int i : w.reduced_word()) {
      HeckeElt gen = v2m1 * HeckeElt::one(r) - HeckeElt::Ti(i, r);
      img = hecke_mul(img, gen);
    }
    out += c * img;
  }
  return out;
}

HeckeElt dagger_hecke(const HeckeElt& x) {
  HeckeElt out(x.degree());
  for (const auto& [w, c] : x.terms()) out.add_term(w.dagger(), c);
  return out;
}

HeckeElt xy_element(const Weight& lambda) {
  if (!lambda.is_composition()) throw std::invalid_argument("xy_element: weight must be a composition");
  const int r = lambda.degree();
  const auto even = lambda.even_block();
  const auto odd = lambda.odd_block();
  const int shift = std::accumulate(even.begin(), even.end(), 0);
  // pad with singleton blocks so both parabolics live in S_r
  std::vector<int> even_comp = even, odd_comp(static_cast<std::size_t>(shift), 1);
  even_comp.insert(even_comp.end(), static_cast<std::size_t>(r - shift), 1);
  odd_comp.insert(odd_comp.end(), odd.begin(), odd.end());

  HeckeElt x(r), y(r);
  for (const auto& w : parabolic_subgroup(even_comp)) x.add_term(w, LaurentPoly(1));
  for (const auto& w : parabolic_subgroup(odd_comp)) {
    const int len = w.length();
    y.add_term(w, LaurentPoly::monomial(len % 2 ? -1 : 1, -2 * len));
  }
  return hecke_mul(x, y);
}

}  // namespace qmull
