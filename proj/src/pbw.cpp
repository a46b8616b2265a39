#include "qmull/pbw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qmull/qarith.hpp"

namespace qmull {

std::string GenSymbol::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Root:
      os << "E(" << a << "," << b << "," << x << ")";
      break;
    case Kind::KPow:
      if (b == 0)
        os << "K(" << a << "," << (x > 0 ? "+" : "") << x << ")";
      else
        os << "K2(" << a << "," << b << "," << (x > 0 ? "+" : "") << x << ")";
      break;
    case Kind::KBinom:
      if (b == 0)
        os << "KB(" << a << "," << x << "," << t << ")";
      else
        os << "KB2(" << a << "," << b << "," << x << "," << t << ")";
      break;
  }
  return os.str();
}

// ---- UElement

void UElement::add(Word w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<Monomial> UElement::monomials() const {
  std::vector<Monomial> out;
  for (const auto& [w, c] : terms_) out.push_back({c, w});
  return out;
}

LaurentPoly UElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

UElement& UElement::operator+=(const UElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

UElement operator*(const UElement& a, const UElement& b) {
  UElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(std::move(w), ca * cb);
    }
  return out;
}

UElement operator*(const LaurentPoly& c, const UElement& a) {
  UElement out;
  for (const auto& [w, x] : a.terms_) out.add(w, c * x);
  return out;
}

std::string UElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (const auto& s : w) os << " " << s.to_string();
  }
  return os.str();
}

// ---- HWVector

LaurentPoly HWVector::coeff(const std::vector<int>& key) const {
  auto it = terms.find(key);
  return it == terms.end() ? LaurentPoly() : it->second;
}

void HWVector::add(const std::vector<int>& key, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(key, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

HWVector& HWVector::operator+=(const HWVector& o) {
  for (const auto& [k, c] : o.terms) add(k, c);
  return *this;
}

// ---- upsilon

GenSymbol upsilon(const GenSymbol& s) {
  switch (s.kind) {
    case GenSymbol::Kind::Root:
      return GenSymbol::root(s.b, s.a, s.x);
    case GenSymbol::Kind::KPow:
      return GenSymbol::kpow(s.a, s.b, -s.x);
    case GenSymbol::Kind::KBinom:
      break;
  }
  return s;
}

UElement upsilon(const UElement& u) {
  UElement out;
  for (const auto& [w, c] : u.terms()) {
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(upsilon(*it));
    out.add(std::move(r), c.bar());
  }
  return out;
}

// ---- engine

namespace {

// drops trivial letters: E^(0), K^0, [K; c choose 0]
Word word(std::initializer_list<GenSymbol> letters) {
  Word w;
  for (const auto& s : letters) {
    if (s.kind == GenSymbol::Kind::KBinom ? s.t == 0 : s.x == 0) continue;
    w.push_back(s);
  }
  return w;
}

GenSymbol E(int a, int b, int M) { return GenSymbol::root(a, b, M); }
GenSymbol K(int a, int b, int e) { return GenSymbol::kpow(a, b, e); }

void require_root(const GenSymbol& s, const Split& sp, const char* who) {
  if (!s.is_root()) throw std::invalid_argument(std::string(who) + ": " + s.to_string() + " is not a root power");
  if (s.a == s.b || s.a < 1 || s.b < 1 || s.a > sp.size() || s.b > sp.size())
    throw std::invalid_argument(std::string(who) + ": bad root indices in " + s.to_string());
  if (s.x < 1) throw std::invalid_argument(std::string(who) + ": exponent must be positive in " + s.to_string());
}

}  // namespace

PbwEngine::PbwEngine(Split split) : split_(split) {
  const int N = split.size();
  if (split.m < 0 || split.n < 0 || N < 1) throw std::invalid_argument("PbwEngine: bad split");
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) order_.push_back(Root{a, b});
  index_.assign(static_cast<std::size_t>((N + 1) * (N + 1)), -1);
  for (std::size_t k = 0; k < order_.size(); ++k)
    index_[static_cast<std::size_t>(order_[k].i * (N + 1) + order_[k].j)] = static_cast<int>(k);
}

int PbwEngine::lowering_index(int a, int b) const {
  const int N = split_.size();
  if (a < 1 || b > N || a >= b) throw std::out_of_range("lowering_index");
  return index_[static_cast<std::size_t>(a * (N + 1) + b)];
}

Word PbwEngine::lowering_word(const std::vector<int>& key) const {
  Word w;
  for (std::size_t k = 0; k < order_.size(); ++k)
    if (key[k] > 0) w.push_back(E(order_[k].j, order_[k].i, key[k]));
  return w;
}

Weight PbwEngine::symbol_weight(const GenSymbol& s) const {
  Weight w = Weight::zero(split_);
  if (s.is_root()) {
    w.at(s.a) += s.x;
    w.at(s.b) -= s.x;
  }
  return w;
}

Weight PbwEngine::key_weight(const Weight& lambda, const std::vector<int>& key) const {
  Weight w = lambda;
  for (std::size_t k = 0; k < order_.size(); ++k) {
    w.at(order_[k].i) -= key[k];
    w.at(order_[k].j) += key[k];
  }
  return w;
}

UElement PbwEngine::root_vector(int a, int b) const {
  const int N = split_.size();
  if (a == b || a < 1 || b < 1 || a > N || b > N)
    throw std::invalid_argument("root_vector: bad indices " + std::to_string(a) + "," + std::to_string(b));
  if (std::abs(a - b) == 1) return UElement(Word{E(a, b, 1)});
  if (a < b) {
    const int c = b - 1;
    return root_vector(a, c) * root_vector(c, b) - qpow(c, -1) * (root_vector(c, b) * root_vector(a, c));
  }
  const int c = b + 1;
  return root_vector(a, c) * root_vector(c, b) - qpow(c, 1) * (root_vector(c, b) * root_vector(a, c));
}

bool PbwEngine::positive_in_order(const GenSymbol& x, const GenSymbol& y) const {
  return x.a > y.a || (x.a == y.a && x.b > y.b);
}

bool PbwEngine::lowering_in_order(const GenSymbol& x, const GenSymbol& y) const {
  // positive roots (x.b, x.a), (y.b, y.a)
  return x.b < y.b || (x.b == y.b && x.a < y.a);
}

UElement PbwEngine::merge_same(const GenSymbol& x, const GenSymbol& y) const {
  const int tot = x.x + y.x;
  if (odd_root(x.a, x.b) && tot > 1) return {};
  return UElement(Word{E(x.a, x.b, tot)}, gauss_binom(tot, x.x));
}

// x = E_{a,b}^(M), y = E_{c,d}^(N), a < b, c < d, y precedes x
UElement PbwEngine::positive_rule(const GenSymbol& x, const GenSymbol& y) const {
  const int a = x.a, b = x.b, M = x.x, c = y.a, d = y.b, N = y.x;
  const bool both_odd = odd_root(a, b) && odd_root(c, d);
  const LaurentPoly sg(both_odd ? -1 : 1);
  UElement out;
  if (c > b) {
    out.add(Word{y, x}, sg);
  } else if (c == b) {
    if (both_odd) {
      out.add(Word{E(a, d, 1)}, 1);
      out.add(Word{y, x}, qpow(c, -1));
    } else {
      for (int t = 0; t <= std::min(M, N); ++t)
        out.add(word({E(c, d, N - t), E(a, d, t), E(a, b, M - t)}), qpow(b, -(N - t) * (M - t)));
    }
  } else if (c > a) {
    if (d > b) {
      const LaurentPoly gap = qpow(b, 1) - qpow(b, -1);
      if (both_odd) {
        out.add(Word{y, x}, sg);
        out.add(Word{E(a, d, 1), E(c, b, 1)}, gap);
      } else {
        LaurentPoly g(1);
        for (int t = 0; t <= std::min(M, N); ++t) {
          out.add(word({E(c, b, t), E(c, d, N - t), E(a, b, M - t), E(a, d, t)}),
                  qpow(b, t * (t - 1) / 2) * g * quantum_factorial(t));
          g *= gap;
        }
      }
    } else if (d == b) {
      out.add(Word{y, x}, both_odd ? sg * qpow(b, 1) : qpow(b, M * N));
    } else {
      out.add(Word{y, x}, sg);
    }
  } else {
    // c == a, d > b
    out.add(Word{y, x}, both_odd ? sg * qpow(a, 1) : qpow(b, M * N));
  }
  return out;
}

bool PbwEngine::mixed_direct(int a, int b, int c, int d) const {
  return b <= c || (c < a && b < d) || (a < c && c < b && b == d) || (a == c && b < d) || (a == c && b == d) ||
         (a < c && c < b && b < d);
}

// x = E_{a,b}^(M) raising, y = E_{d,c}^(N) lowering
UElement PbwEngine::mixed_rule(const GenSymbol& x, const GenSymbol& y) const {
  const int a = x.a, b = x.b, M = x.x, d = y.a, c = y.b, N = y.x;
  if (!mixed_direct(a, b, c, d)) return upsilon(mixed_rule(upsilon(y), upsilon(x)));
  const bool both_odd = odd_root(a, b) && odd_root(c, d);
  const LaurentPoly sg(both_odd ? -1 : 1);
  const int T = std::min(M, N);
  UElement out;
  if (b <= c || (c < a && b < d)) {
    out.add(Word{y, x}, sg);
  } else if (a < c && c < b && b == d) {
    if (both_odd) {
      out.add(Word{y, x}, sg);
      out.add(Word{K(c, d, 1), E(a, c, 1)}, 1);
    } else {
      for (int t = 0; t <= T; ++t)
        out.add(word({E(d, c, N - t), K(c, d, t), E(a, b, M - t), E(a, c, t)}), qpow(b, -t * (N - t)));
    }
  } else if (a == c && b < d) {
    if (both_odd) {
      out.add(Word{y, x}, sg);
      out.add(Word{K(a, b, 1), E(d, b, 1)}, -sg);
    } else {
      for (int t = 0; t <= T; ++t)
        out.add(word({E(d, b, t), E(d, c, N - t), K(a, b, t), E(a, b, M - t)}),
                LaurentPoly(t % 2 ? -1 : 1) * qpow(b, -t * (M - 1 - t)));
    }
  } else if (a == c && b == d) {
    if (both_odd) {
      out.add(Word{y, x}, sg);
      out.add(Word{GenSymbol::kbinom(a, b, 0, 1)}, 1);
    } else {
      for (int t = 0; t <= T; ++t)
        out.add(word({E(b, a, N - t), GenSymbol::kbinom(a, b, 2 * t - M - N, t), E(a, b, M - t)}), 1);
    }
  } else {
    // a < c < b < d
    const LaurentPoly gap = qpow(b, 1) - qpow(b, -1);
    if (both_odd) {
      out.add(Word{y, x}, sg);
      out.add(Word{E(d, b, 1), K(c, b, 1), E(a, c, 1)}, -qpow(b, 1) * gap);
    } else {
      LaurentPoly g(1);
      for (int t = 0; t <= T; ++t) {
        out.add(word({E(d, c, N - t), E(d, b, t), K(c, b, t), E(a, b, M - t), E(a, c, t)}),
                LaurentPoly(t % 2 ? -1 : 1) * qpow(b, -t * (2 * N - 3 * t - 1) / 2) * g * quantum_factorial(t));
        g *= gap;
      }
    }
  }
  return out;
}

UElement PbwEngine::commute(const GenSymbol& x, const GenSymbol& y) const {
  require_root(x, split_, "commute");
  require_root(y, split_, "commute");
  if (x.a == y.a && x.b == y.b) return merge_same(x, y);
  if (x.raising() && y.raising()) {
    if (positive_in_order(x, y)) throw std::logic_error("commute: " + x.to_string() + y.to_string() + " already ordered");
    return positive_rule(x, y);
  }
  if (x.lowering() && y.lowering()) {
    if (lowering_in_order(x, y)) throw std::logic_error("commute: " + x.to_string() + y.to_string() + " already ordered");
    return upsilon(positive_rule(upsilon(y), upsilon(x)));
  }
  if (x.raising()) return mixed_rule(x, y);
  throw std::logic_error("commute: " + x.to_string() + y.to_string() + " already ordered");
}

namespace {

struct Shifted {
  LaurentPoly coeff;
  GenSymbol sym;
};

}  // namespace

UElement PbwEngine::move_cartan(const GenSymbol& x, const GenSymbol& y) const {
  // X(mu + delta) as coefficient times a shifted symbol
  auto shift = [this](const GenSymbol& k, const Weight& delta) -> Shifted {
    const int da = delta[k.a];
    const int db = k.b ? delta[k.b] : 0;
    if (k.kind == GenSymbol::Kind::KPow) {
      const int sb = k.b ? sgn(k.b) : 0;
      return {LaurentPoly::v(k.x * (sgn(k.a) * da - sb * db)), k};
    }
    GenSymbol s = k;
    s.x += da - (k.b ? sgn(k.a) * sgn(k.b) * db : 0);
    return {LaurentPoly(1), s};
  };
  if (x.is_cartan() && y.is_root()) {
    require_root(y, split_, "move_cartan");
    auto sh = shift(x, symbol_weight(y));
    return UElement(Word{y, sh.sym}, sh.coeff);
  }
  if (x.is_root() && y.is_cartan()) {
    require_root(x, split_, "move_cartan");
    auto sh = shift(y, Weight::zero(split_) - symbol_weight(x));
    return UElement(Word{sh.sym, x}, sh.coeff);
  }
  throw std::invalid_argument("move_cartan: need one Cartan symbol and one root power");
}

LaurentPoly PbwEngine::cartan_value(const GenSymbol& s, const Weight& mu) const {
  if (s.kind == GenSymbol::Kind::KPow) {
    const int e = sgn(s.a) * mu[s.a] - (s.b ? sgn(s.b) * mu[s.b] : 0);
    return LaurentPoly::v(s.x * e);
  }
  if (s.kind == GenSymbol::Kind::KBinom)
    return gauss_binom(mu[s.a] - (s.b ? sgn(s.a) * sgn(s.b) * mu[s.b] : 0) + s.x, s.t);
  throw std::invalid_argument("cartan_value: " + s.to_string() + " is not a Cartan symbol");
}

namespace {

int klass(const GenSymbol& s) { return s.lowering() ? 0 : s.is_cartan() ? 1 : 2; }

}  // namespace

// ---- normal form

namespace {

struct Rewrite {
  std::size_t pos = 0;
  UElement out;
  bool found = false;
};

}  // namespace

bool PbwEngine::is_normal(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const auto &x = w[i], &y = w[i + 1];
    const int kx = klass(x), ky = klass(y);
    if (kx > ky) return false;
    if (kx != ky) continue;
    if (kx == 1) {
      if (y < x) return false;
      if (x.kind == GenSymbol::Kind::KPow && y.kind == GenSymbol::Kind::KPow && x.a == y.a && x.b == y.b) return false;
      continue;
    }
    if (x.a == y.a && x.b == y.b) return false;
    if (kx == 0 ? !lowering_in_order(x, y) : !positive_in_order(x, y)) return false;
  }
  return true;
}

UElement PbwEngine::normalize(const UElement& u) const {
  UElement done;
  std::vector<std::pair<Word, LaurentPoly>> work(u.terms().begin(), u.terms().end());
  std::int64_t steps = 0;
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (++steps > step_limit_) throw std::runtime_error("normalize: step limit exceeded");
    Rewrite rw;
    for (std::size_t i = 0; i + 1 < w.size() && !rw.found; ++i) {
      const auto &x = w[i], &y = w[i + 1];
      const int kx = klass(x), ky = klass(y);
      rw.pos = i;
      rw.found = true;
      if (kx == 1 && ky == 1) {
        if (x.kind == GenSymbol::Kind::KPow && y.kind == GenSymbol::Kind::KPow && x.a == y.a && x.b == y.b)
          rw.out = UElement(word({K(x.a, x.b, x.x + y.x)}));
        else if (y < x)
          rw.out = UElement(Word{y, x});
        else
          rw.found = false;
      } else if (kx == 1 || ky == 1) {
        if (kx > ky)
          rw.out = move_cartan(x, y);
        else
          rw.found = false;
      } else if (kx > ky || (x.a == y.a && x.b == y.b) ||
                 (kx == ky && (kx == 0 ? !lowering_in_order(x, y) : !positive_in_order(x, y)))) {
        rw.out = commute(x, y);
      } else {
        rw.found = false;
      }
    }
    if (!rw.found) {
      done.add(std::move(w), c);
      continue;
    }
    for (const auto& [mid, mc] : rw.out.terms()) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(rw.pos));
      nw.insert(nw.end(), mid.begin(), mid.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(rw.pos) + 2, w.end());
      work.emplace_back(std::move(nw), c * mc);
    }
  }
  return done;
}

// ---- action on m_lambda

using Terms = std::map<std::vector<int>, LaurentPoly>;

struct ApplyState {
  const PbwEngine& eng;
  Weight lambda;
  std::int64_t steps = 0;
  std::map<std::pair<GenSymbol, std::vector<int>>, Terms> memo;

  static void add(Terms& t, const std::vector<int>& k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }

  Terms apply_word(const Word& w, Terms v) {
    for (auto it = w.rbegin(); it != w.rend() && !v.empty(); ++it) v = apply_symbol(*it, v);
    return v;
  }

  Terms apply_symbol(const GenSymbol& s, const Terms& v) {
    Terms out;
    for (const auto& [k, c] : v)
      for (const auto& [k2, c2] : basis(s, k)) add(out, k2, c * c2);
    return out;
  }

  // splits off the first factor of F_key
  std::pair<GenSymbol, std::vector<int>> first_factor(const std::vector<int>& key) const {
    for (std::size_t i = 0; i < key.size(); ++i)
      if (key[i] > 0) {
        std::vector<int> rest = key;
        rest[i] = 0;
        const Root& r = eng.order_[i];
        return {GenSymbol::root(r.j, r.i, key[i]), rest};
      }
    throw std::logic_error("first_factor of empty key");
  }

  Terms expand(const UElement& u, const std::vector<int>& rest) {
    Terms out;
    for (const auto& [w, c] : u.terms())
      for (const auto& [k, x] : apply_word(w, Terms{{rest, LaurentPoly(1)}})) add(out, k, c * x);
    return out;
  }

  const Terms& basis(const GenSymbol& s, const std::vector<int>& key) {
    auto mk = std::make_pair(s, key);
    if (auto it = memo.find(mk); it != memo.end()) return it->second;
    if (++steps > eng.step_limit_) throw std::runtime_error("act_on_hw: step limit exceeded");
    Terms out;
    const bool empty = std::all_of(key.begin(), key.end(), [](int e) { return e == 0; });
    if (s.is_cartan()) {
      add(out, key, eng.cartan_value(s, eng.key_weight(lambda, key)));
    } else if (s.raising()) {
      if (!empty) {
        auto [f1, rest] = first_factor(key);
        out = expand(eng.commute(s, f1), rest);
      }
    } else {
      const int p = eng.lowering_index(s.b, s.a);
      int i = 0;
      while (i < static_cast<int>(key.size()) && key[static_cast<std::size_t>(i)] == 0) ++i;
      if (p < i) {
        std::vector<int> k2 = key;
        k2[static_cast<std::size_t>(p)] = s.x;
        add(out, k2, LaurentPoly(1));
      } else if (p == i) {
        const int tot = key[static_cast<std::size_t>(i)] + s.x;
        if (!(eng.odd_root(s.a, s.b) && tot > 1)) {
          std::vector<int> k2 = key;
          k2[static_cast<std::size_t>(i)] = tot;
          add(out, k2, gauss_binom(tot, s.x));
        }
      } else {
        auto [f1, rest] = first_factor(key);
        out = expand(eng.commute(s, f1), rest);
      }
    }
    return memo.emplace(std::move(mk), std::move(out)).first->second;
  }
};

HWVector PbwEngine::highest(const Weight& lambda) const {
  if (!(lambda.split() == split_)) throw std::invalid_argument("highest: split mismatch");
  HWVector h;
  h.lambda = lambda;
  h.terms.emplace(zero_key(), LaurentPoly(1));
  return h;
}

HWVector PbwEngine::apply(const UElement& u, const HWVector& vec) const {
  if (!(vec.lambda.split() == split_)) throw std::invalid_argument("apply: split mismatch");
  for (const auto& [w, c] : u.terms())
    for (const auto& s : w)
      if (s.is_root()) require_root(s, split_, "apply");
  ApplyState st{*this, vec.lambda, 0, {}};
  HWVector out;
  out.lambda = vec.lambda;
  for (const auto& [w, c] : u.terms())
    for (const auto& [k, x] : st.apply_word(w, vec.terms)) out.add(k, c * x);
  return out;
}

HWVector PbwEngine::act_on_hw(const UElement& u, const Weight& lambda) const { return apply(u, highest(lambda)); }

}  // namespace qmull
