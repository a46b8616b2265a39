#include "qmull/qarith.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qmull {

Order Order::finite(int n) {
  if (n < 1) throw std::invalid_argument("order must be a positive integer, got " + std::to_string(n));
  return Order(n);
}

int Order::value() const {
  if (!value_) throw std::logic_error("Order::value() on infinity");
  return *value_;
}

bool Order::divides(std::int64_t x) const {
  if (!value_) return x == 0;
  return x % *value_ == 0;
}

std::int64_t Order::mod(std::int64_t x) const {
  if (!value_) return x;
  std::int64_t r = x % *value_;
  return r < 0 ? r + *value_ : r;
}

std::int64_t Order::div(std::int64_t x) const {
  if (!value_) return 0;
  return (x - mod(x)) / *value_;
}

std::string Order::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

Order Order::parse(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "INF") return infinite();
  std::size_t pos = 0;
  int n = 0;
  try {
    n = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a positive integer or 'inf', got '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("expected a positive integer or 'inf', got '" + s + "'");
  return finite(n);
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// exact division by a monic polynomial
std::vector<std::int64_t> poly_div_monic(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t nb = b.size();
  std::vector<std::int64_t> q(a.size() - nb + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::int64_t f = a[k + nb - 1];
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) a[k + j] = checked_add(a[k + j], checked_mul(-f, b[j]));
  }
  for (auto x : a)
    if (x != 0) throw std::logic_error("cyclotomic division not exact");
  return q;
}

// remainder modulo a monic polynomial, in place
void poly_rem_monic(std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const std::size_t nb = b.size();
  while (a.size() >= nb) {
    std::int64_t f = a.back();
    std::size_t k = a.size() - nb;
    if (f != 0)
      for (std::size_t j = 0; j < nb; ++j) a[k + j] = checked_add(a[k + j], checked_mul(-f, b[j]));
    a.pop_back();
  }
}

std::shared_ptr<const std::vector<std::int64_t>> cached_cyclotomic(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<std::int64_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto p = std::make_shared<const std::vector<std::int64_t>>(cyclotomic_polynomial(n));
  cache.emplace(n, p);
  return p;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // v^n - 1 divided by Phi_d for every proper divisor d
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_monic(p, cyclotomic_polynomial(d));
  return p;
}

CycloContext::CycloContext(Order lprime, int field_char) : lprime_(lprime), l_(Order::infinite()), char_(field_char) {
  if (field_char != 0 && (field_char == 2 || !is_prime(field_char)))
    throw std::invalid_argument("field characteristic must be 0 or an odd prime, got " + std::to_string(field_char));
  if (!lprime.is_infinite()) {
    int lp = lprime.value();
    if (lp < 3) throw std::invalid_argument("l' must be >= 3 or inf, got " + std::to_string(lp));
    l_ = Order::finite(lp % 2 == 1 ? lp : lp / 2);
    phi_ = cached_cyclotomic(lp);
  } else {
    phi_ = std::make_shared<const std::vector<std::int64_t>>();
  }
}

std::string CycloContext::to_string() const {
  return "l'=" + lprime_.to_string() + ",l=" + l_.to_string() + ",char=" + std::to_string(char_);
}

CycloElt::CycloElt(const CycloContext& ctx, const LaurentPoly& p) : CycloElt(eval_at_q(p, ctx)) {}

CycloElt CycloElt::operator+(const CycloElt& o) const {
  if (!(lprime_ == o.lprime_)) throw std::invalid_argument("CycloElt: mismatched contexts");
  return CycloElt(lprime_, phi_, residue_ + o.residue_);
}

CycloElt CycloElt::operator*(const CycloElt& o) const {
  if (!(lprime_ == o.lprime_)) throw std::invalid_argument("CycloElt: mismatched contexts");
  LaurentPoly prod = residue_ * o.residue_;
  if (lprime_.is_infinite()) return CycloElt(lprime_, phi_, prod);
  std::vector<std::int64_t> a(prod.is_zero() ? 0 : static_cast<std::size_t>(prod.high_degree()) + 1, 0);
  for (auto [e, c] : prod.terms()) a[static_cast<std::size_t>(e)] = c;
  poly_rem_monic(a, *phi_);
  return CycloElt(lprime_, phi_, LaurentPoly::from_dense(0, std::move(a)));
}

LaurentPoly quantum_int(int i) {
  if (i == 0) return {};
  if (i < 0) return -quantum_int(-i);
  LaurentPoly p;
  for (int e = i - 1; e >= 1 - i; e -= 2) p += LaurentPoly::v(e);
  return p;
}

LaurentPoly quantum_factorial(int n) {
  if (n < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  LaurentPoly p(1);
  for (int i = 2; i <= n; ++i) p *= quantum_int(i);
  return p;
}

namespace {

LaurentPoly gauss_binom_nonneg(int s, int t) {
  // symmetric q-Pascal: [s,t] = v^t [s-1,t] + v^{-(s-t)} [s-1,t-1]
  thread_local std::map<std::pair<int, int>, LaurentPoly> cache;
  if (t == 0 || t == s) return LaurentPoly(1);
  if (t > s) return {};
  auto key = std::make_pair(s, t);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  LaurentPoly r = gauss_binom_nonneg(s - 1, t).shifted(t) + gauss_binom_nonneg(s - 1, t - 1).shifted(t - s);
  cache.emplace(key, r);
  return r;
}

}  // namespace

LaurentPoly gauss_binom(int s, int t) {
  if (t < 0) throw std::invalid_argument("gauss_binom: t must be nonnegative, got " + std::to_string(t));
  if (s >= 0) return gauss_binom_nonneg(s, t);
  LaurentPoly r = gauss_binom_nonneg(t - s - 1, t);
  return t % 2 == 0 ? r : -r;
}

LaurentPoly q_a_power(int a, int e, int m, int n) {
  if (a < 1 || a > m + n)
    throw std::out_of_range("q_a_power: index " + std::to_string(a) + " outside 1.." + std::to_string(m + n));
  return LaurentPoly::v(a <= m ? e : -e);
}

CycloElt eval_at_q(const LaurentPoly& p, const CycloContext& ctx) {
  if (ctx.field_char() != 0)
    throw std::domain_error("eval_at_q needs characteristic 0; use lucas_nonzero in characteristic " +
                            std::to_string(ctx.field_char()));
  const auto& phi = ctx.cyclotomic_shared();
  if (ctx.lprime().is_infinite()) return CycloElt(ctx.lprime(), phi, p);
  const int lp = ctx.lprime().value();
  std::vector<std::int64_t> a(static_cast<std::size_t>(lp), 0);
  for (auto [e, c] : p.terms()) {
    auto k = static_cast<std::size_t>(ctx.lprime().mod(e));
    a[k] = checked_add(a[k], c);
  }
  poly_rem_monic(a, ctx.cyclotomic());
  return CycloElt(ctx.lprime(), phi, LaurentPoly::from_dense(0, std::move(a)));
}

bool is_zero_at_q(const LaurentPoly& p, const CycloContext& ctx) { return eval_at_q(p, ctx).is_zero(); }

bool lucas_nonzero(int s, int t, const CycloContext& ctx) {
  if (t < 0 || t > s)
    throw std::invalid_argument("lucas_nonzero: need 0 <= t <= s, got s=" + std::to_string(s) + ", t=" + std::to_string(t));
  const Order& l = ctx.l();
  if (l.is_infinite()) return true;
  if (l.mod(t) > l.mod(s)) return false;
  std::int64_t s1 = l.div(s), t1 = l.div(t);
  if (t1 > s1) return false;
  if (ctx.field_char() == 0) return true;
  const int p = ctx.field_char();
  while (t1 > 0 || s1 > 0) {
    if (t1 % p > s1 % p) return false;
    t1 /= p;
    s1 /= p;
  }
  return true;
}

bool gauss_is_zero_at_q(int s, int t, const CycloContext& ctx) {
  if (t < 0) throw std::invalid_argument("gauss_is_zero_at_q: t must be nonnegative");
  if (ctx.field_char() == 0) return is_zero_at_q(gauss_binom(s, t), ctx);
  if (s >= 0) return t > s || !lucas_nonzero(s, t, ctx);
  return !lucas_nonzero(t - s - 1, t, ctx);
}

}  // namespace qmull
