#include "qmull/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmull {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly coefficient overflow");
  return r;
}

LaurentPoly::LaurentPoly(std::int64_t c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, int e) {
  LaurentPoly p;
  if (c != 0) {
    p.lo_ = e;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_dense(int lo, std::vector<std::int64_t> c) {
  LaurentPoly p;
  p.lo_ = lo;
  p.c_ = std::move(c);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::size_t b = 0;
  while (b < c_.size() && c_[b] == 0) ++b;
  if (b == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t e = c_.size();
  while (c_[e - 1] == 0) --e;
  if (b > 0 || e < c_.size()) {
    c_ = std::vector<std::int64_t>(c_.begin() + static_cast<std::ptrdiff_t>(b),
                                   c_.begin() + static_cast<std::ptrdiff_t>(e));
    lo_ += static_cast<int>(b);
  }
}

std::int64_t LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < lo_ || e > high_degree()) return 0;
  return c_[static_cast<std::size_t>(e - lo_)];
}

std::size_t LaurentPoly::num_terms() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](std::int64_t x) { return x != 0; }));
}

std::vector<std::pair<int, std::int64_t>> LaurentPoly::terms() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(lo_ + static_cast<int>(i), c_[i]);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  LaurentPoly p;
  p.lo_ = -high_degree();
  p.c_.assign(c_.rbegin(), c_.rend());
  return p;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.lo_ += e;
  return p;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be nonzero");
  LaurentPoly p;
  for (auto [e, c] : terms()) p += monomial(c, e * k);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(lo_, o.lo_);
  int hi = std::max(high_degree(), o.high_degree());
  std::vector<std::int64_t> r(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(lo_ - lo) + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    auto& slot = r[static_cast<std::size_t>(o.lo_ - lo) + i];
    slot = checked_add(slot, o.c_[i]);
  }
  lo_ = lo;
  c_ = std::move(r);
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& x : p.c_) x = checked_mul(x, -1);
  return p;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  return LaurentPoly::from_dense(a.lo_ + b.lo_, std::move(r));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool LaurentPoly::divide_exact(const LaurentPoly& b, LaurentPoly& quotient) const {
  if (b.is_zero()) throw std::domain_error("LaurentPoly division by zero");
  if (is_zero()) {
    quotient = {};
    return true;
  }
  // long division from the top; b's leading coefficient must divide each step
  std::vector<std::int64_t> rem = c_;
  const std::size_t nb = b.c_.size();
  if (rem.size() < nb) return false;
  std::vector<std::int64_t> q(rem.size() - nb + 1, 0);
  const std::int64_t lead = b.c_.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    std::int64_t top = rem[k + nb - 1];
    if (top == 0) continue;
    if (top % lead != 0) return false;
    std::int64_t f = top / lead;
    q[k] = f;
    for (std::size_t j = 0; j < nb; ++j) rem[k + j] = checked_add(rem[k + j], checked_mul(-f, b.c_[j]));
  }
  for (auto x : rem)
    if (x != 0) return false;
  quotient = from_dense(lo_ - b.lo_, std::move(q));
  return true;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
  LaurentPoly r(1), base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto ts = terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    auto [e, c] = *it;
    std::int64_t a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace qmull
