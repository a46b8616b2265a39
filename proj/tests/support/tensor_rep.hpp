#pragma once

// V^{(x)k} for the natural module of U_v(gl(m|n)) over F_p with v a fixed
// unit.  Used as an independent model of the algebra: generators act through
// the coproduct, root vectors are built with c = a+1 / c = a-1 (the engine
// uses b-1 / b+1), divided powers divide by [M]! evaluated in F_p.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qmull/laurent.hpp"
#include "qmull/pbw.hpp"

namespace oracle {

using u64 = std::uint64_t;
constexpr u64 P = 2147483647ULL;

inline u64 mulm(u64 a, u64 b) { return a * b % P; }
inline u64 addm(u64 a, u64 b) { return (a + b) % P; }
inline u64 subm(u64 a, u64 b) { return (a + P - b) % P; }
inline u64 powm(u64 a, std::int64_t e) {
  if (e < 0) {
    a = powm(a, static_cast<std::int64_t>(P - 2));
    e = -e;
  }
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a);
    a = mulm(a, a);
    e >>= 1;
  }
  return r;
}
inline u64 inv(u64 a) {
  if (a % P == 0) throw std::domain_error("inverse of 0 mod p");
  return powm(a, static_cast<std::int64_t>(P - 2));
}

using Vec = std::vector<u64>;

class TensorRep {
 public:
  TensorRep(int m, int n, int k, u64 v) : m_(m), n_(n), N_(m + n), k_(k), v_(v) {
    dim_ = 1;
    for (int i = 0; i < k; ++i) dim_ *= static_cast<std::size_t>(N_);
  }

  std::size_t dim() const { return dim_; }
  int tensor_factors() const { return k_; }
  u64 v() const { return v_; }
  int parity(int i) const { return i > m_ ? 1 : 0; }
  int sgn(int i) const { return parity(i) ? -1 : 1; }

  u64 eval(const qmull::LaurentPoly& f) const {
    u64 r = 0;
    for (auto [e, c] : f.terms()) {
      u64 cc = c >= 0 ? static_cast<u64>(c) % P : (P - static_cast<u64>(-c) % P) % P;
      r = addm(r, mulm(cc, powm(v_, e)));
    }
    return r;
  }

  // 1-based index tuple of a basis vector
  std::vector<int> digits(std::size_t x) const {
    std::vector<int> d(static_cast<std::size_t>(k_));
    for (int i = k_ - 1; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::size_t>(N_)) + 1;
      x /= static_cast<std::size_t>(N_);
    }
    return d;
  }
  std::size_t index(const std::vector<int>& d) const {
    std::size_t x = 0;
    for (int i : d) x = x * static_cast<std::size_t>(N_) + static_cast<std::size_t>(i - 1);
    return x;
  }
  std::vector<int> weight(std::size_t x) const {
    std::vector<int> w(static_cast<std::size_t>(N_), 0);
    for (int i : digits(x)) ++w[static_cast<std::size_t>(i - 1)];
    return w;
  }

  // (eps_a, eps_j) power of v
  u64 k_on(int a, int j) const { return a == j ? powm(v_, sgn(a)) : 1; }
  u64 ktilde_on(int i, int j) const { return mulm(k_on(i, j), inv(k_on(i + 1, j))); }

  Vec E(int i, const Vec& x) const { return raise_lower(i, x, true); }
  Vec F(int i, const Vec& x) const { return raise_lower(i, x, false); }
  Vec K(int a, int e, const Vec& x) const {
    Vec out(dim_, 0);
    for (std::size_t s = 0; s < dim_; ++s) {
      if (!x[s]) continue;
      u64 f = 1;
      for (int j : digits(s)) f = mulm(f, k_on(a, j));
      out[s] = mulm(x[s], powm(f, e));
    }
    return out;
  }

  // E_{a,b} built from generators, c = a+1 (a<b) or a-1 (a>b), or a custom c
  Vec root(int a, int b, const Vec& x, int c = 0) const {
    if (b == a + 1) return E(a, x);
    if (a == b + 1) return F(b, x);
    if (c == 0) c = a < b ? a + 1 : a - 1;
    const u64 vc = powm(v_, a < b ? -sgn(c) : sgn(c));
    Vec l = root(a, c, root(c, b, x));
    Vec r = root(c, b, root(a, c, x));
    for (std::size_t s = 0; s < dim_; ++s) l[s] = subm(l[s], mulm(vc, r[s]));
    return l;
  }

  u64 qint(int i) const {
    // [i] = (v^i - v^-i)/(v - v^-1)
    return mulm(subm(powm(v_, i), powm(v_, -i)), inv(subm(v_, powm(v_, -1))));
  }
  u64 qfact(int n) const {
    u64 r = 1;
    for (int i = 1; i <= n; ++i) r = mulm(r, qint(i));
    return r;
  }

  Vec symbol(const qmull::GenSymbol& s, const Vec& x) const {
    using K_ = qmull::GenSymbol::Kind;
    if (s.kind == K_::Root) {
      Vec y = x;
      for (int i = 0; i < s.x; ++i) y = root(s.a, s.b, y);
      const u64 d = inv(qfact(s.x));
      for (auto& c : y) c = mulm(c, d);
      return y;
    }
    Vec out(dim_, 0);
    for (std::size_t st = 0; st < dim_; ++st) {
      if (!x[st]) continue;
      // K_{a,b} eigenvalue, and v_a
      u64 kab = 1;
      for (int j : digits(st)) {
        kab = mulm(kab, k_on(s.a, j));
        if (s.b) kab = mulm(kab, inv(k_on(s.b, j)));
      }
      if (s.kind == K_::KPow) {
        out[st] = mulm(x[st], powm(kab, s.x));
        continue;
      }
      // product formula for [K; c choose t] with v_a
      const u64 va = powm(v_, sgn(s.a));
      u64 val = 1;
      for (int r = 1; r <= s.t; ++r) {
        u64 num = subm(mulm(kab, powm(va, s.x - r + 1)), mulm(inv(kab), powm(va, -s.x + r - 1)));
        u64 den = subm(powm(va, r), powm(va, -r));
        val = mulm(val, mulm(num, inv(den)));
      }
      out[st] = mulm(x[st], val);
    }
    return out;
  }

  Vec word(const qmull::Word& w, Vec x) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = symbol(*it, x);
    return x;
  }

  Vec element(const qmull::UElement& u, const Vec& x) const {
    Vec out(dim_, 0);
    for (const auto& [w, c] : u.terms()) {
      Vec y = word(w, x);
      const u64 cc = eval(c);
      for (std::size_t s = 0; s < dim_; ++s) out[s] = addm(out[s], mulm(cc, y[s]));
    }
    return out;
  }

  Vec basis(std::size_t s) const {
    Vec x(dim_, 0);
    x[s] = 1;
    return x;
  }

  // apply f to every basis vector and compare with g
  bool same_operator(const std::function<Vec(const Vec&)>& f, const std::function<Vec(const Vec&)>& g) const {
    for (std::size_t s = 0; s < dim_; ++s)
      if (f(basis(s)) != g(basis(s))) return false;
    return true;
  }
  bool same(const qmull::UElement& a, const qmull::UElement& b) const {
    return same_operator([&](const Vec& x) { return element(a, x); }, [&](const Vec& x) { return element(b, x); });
  }

  // basis vectors of a given weight
  std::vector<std::size_t> weight_space(const std::vector<int>& wt) const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < dim_; ++s)
      if (weight(s) == wt) out.push_back(s);
    return out;
  }

  // vectors of weight wt killed by every E_i (nullspace by elimination)
  std::vector<Vec> maximal_vectors(const std::vector<int>& wt) const {
    const auto ws = weight_space(wt);
    const std::size_t cols = ws.size();
    std::vector<Vec> images;  // image of each basis vector under all E_i, concatenated
    for (std::size_t s : ws) {
      Vec img;
      for (int i = 1; i < N_; ++i) {
        Vec y = E(i, basis(s));
        img.insert(img.end(), y.begin(), y.end());
      }
      images.push_back(std::move(img));
    }
    if (cols == 0) return {};
    const std::size_t rows = images[0].size();
    // matrix rows x cols, column c = images[c]
    std::vector<Vec> a(rows, Vec(cols, 0));
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r) a[r][c] = images[c][r];
    std::vector<int> pivcol;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
      std::size_t piv = rk;
      while (piv < rows && a[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[rk]);
      const u64 iv = inv(a[rk][c]);
      for (auto& e : a[rk]) e = mulm(e, iv);
      for (std::size_t r = 0; r < rows; ++r)
        if (r != rk && a[r][c]) {
          const u64 f = a[r][c];
          for (std::size_t cc = 0; cc < cols; ++cc) a[r][cc] = subm(a[r][cc], mulm(f, a[rk][cc]));
        }
      pivcol.push_back(static_cast<int>(c));
      ++rk;
    }
    std::vector<Vec> out;
    for (std::size_t fc = 0; fc < cols; ++fc) {
      if (std::find(pivcol.begin(), pivcol.end(), static_cast<int>(fc)) != pivcol.end()) continue;
      Vec sol(cols, 0);
      sol[fc] = 1;
      for (std::size_t r = 0; r < rk; ++r) sol[static_cast<std::size_t>(pivcol[r])] = subm(0, a[r][fc]);
      Vec full(dim_, 0);
      for (std::size_t c = 0; c < cols; ++c) full[ws[c]] = sol[c];
      out.push_back(std::move(full));
    }
    return out;
  }

 private:
  int m_, n_, N_, k_;
  u64 v_;
  std::size_t dim_ = 1;

  Vec raise_lower(int i, const Vec& x, bool raise) const {
    Vec out(dim_, 0);
    const int odd = (parity(i) + parity(i + 1)) % 2;
    for (std::size_t s = 0; s < dim_; ++s) {
      if (!x[s]) continue;
      auto d = digits(s);
      int before = 0;  // parity sum of earlier factors
      for (int pos = 0; pos < k_; ++pos) {
        const int j = d[static_cast<std::size_t>(pos)];
        if (j == (raise ? i + 1 : i)) {
          u64 f = (odd && before % 2) ? P - 1 : 1;
          if (raise) {
            for (int q = pos + 1; q < k_; ++q) f = mulm(f, ktilde_on(i, d[static_cast<std::size_t>(q)]));
          } else {
            for (int q = 0; q < pos; ++q) f = mulm(f, inv(ktilde_on(i, d[static_cast<std::size_t>(q)])));
          }
          auto d2 = d;
          d2[static_cast<std::size_t>(pos)] = raise ? i : i + 1;
          const std::size_t t = index(d2);
          out[t] = addm(out[t], mulm(x[s], f));
        }
        before += parity(j);
      }
    }
    return out;
  }
};

}  // namespace oracle
