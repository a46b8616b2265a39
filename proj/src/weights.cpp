#include "qmull/weights.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qmull {

Weight::Weight(Split split, std::vector<int> entries) : split_(split), e_(std::move(entries)) {
  if (split.m < 0 || split.n < 0) throw std::invalid_argument("negative split");
  if (static_cast<int>(e_.size()) != split.size())
    throw std::invalid_argument("weight has " + std::to_string(e_.size()) + " entries, split needs " +
                                std::to_string(split.size()));
}

Weight Weight::unit(Split split, int i) {
  Weight w = zero(split);
  w.at(i) = 1;
  return w;
}

int Weight::operator[](int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("weight index " + std::to_string(i));
  return e_[static_cast<std::size_t>(i - 1)];
}

int& Weight::at(int i) {
  if (i < 1 || i > size()) throw std::out_of_range("weight index " + std::to_string(i));
  return e_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> Weight::even_block() const { return {e_.begin(), e_.begin() + split_.m}; }
std::vector<int> Weight::odd_block() const { return {e_.begin() + split_.m, e_.end()}; }
int Weight::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

bool Weight::is_nonnegative() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x >= 0; });
}

bool Weight::is_dominant() const {
  for (int i = 1; i < size(); ++i)
    if (i != split_.m && (*this)[i] < (*this)[i + 1]) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  if (!(split_ == o.split_)) throw std::invalid_argument("weight split mismatch");
  Weight r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  if (!(split_ == o.split_)) throw std::invalid_argument("weight split mismatch");
  Weight r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

std::string Weight::to_string() const {
  return format_int_list(even_block()) + "|" + format_int_list(odd_block());
}

Weight Weight::parse(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos)
    throw std::invalid_argument("weight '" + s + "' must contain exactly one '|'");
  auto a = parse_int_list(s.substr(0, bar));
  auto b = parse_int_list(s.substr(bar + 1));
  Split sp{static_cast<int>(a.size()), static_cast<int>(b.size())};
  a.insert(a.end(), b.begin(), b.end());
  return Weight(sp, std::move(a));
}

Weight Root::as_weight(const Split& s) const {
  Weight w = Weight::zero(s);
  w.at(i) += 1;
  w.at(j) -= 1;
  return w;
}

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i + 1 < p_.size() && p_[i] < p_[i + 1]) throw std::invalid_argument("partition parts must weakly decrease");
  }
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

int Partition::operator[](int i) const {
  if (i < 1) throw std::out_of_range("partition index " + std::to_string(i));
  return i <= length() ? p_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  if (!p_.empty()) {
    t.assign(static_cast<std::size_t>(p_[0]), 0);
    for (int part : p_)
      for (int c = 0; c < part; ++c) ++t[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(t));
}

bool Partition::is_restricted(const Order& l) const {
  for (int i = 1; i <= length(); ++i)
    if (!l.is_infinite() && (*this)[i] - (*this)[i + 1] >= l.value()) return false;
  return true;
}

bool Partition::is_regular(const Order& l) const { return transpose().is_restricted(l); }

std::string Partition::to_string() const { return format_int_list(p_); }

Partition Partition::parse(const std::string& s) { return Partition(parse_int_list(s)); }

int super_dot(const Weight& mu, const Weight& nu) {
  if (!(mu.split() == nu.split())) throw std::invalid_argument("super_dot: split mismatch");
  int s = 0;
  for (int i = 1; i <= mu.size(); ++i) s += (mu.parity(i) ? -1 : 1) * mu[i] * nu[i];
  return s;
}

bool root_order_leq(const Weight& mu, const Weight& lambda) {
  if (!(mu.split() == lambda.split())) throw std::invalid_argument("root_order_leq: split mismatch");
  long prefix = 0;
  for (int i = 1; i <= mu.size(); ++i) {
    prefix += lambda[i] - mu[i];
    if (prefix < 0) return false;
  }
  return prefix == 0;
}

bool componentwise_leq(const std::vector<int>& mu, const std::vector<int>& lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("componentwise_leq: length mismatch");
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > lambda[i]) return false;
  return true;
}

std::vector<int> dagger(const std::vector<int>& v) { return {v.rbegin(), v.rend()}; }

Weight super_dagger(const Weight& lambda) { return Weight(lambda.split().swapped(), dagger(lambda.entries())); }

namespace {

void compositions_rec(std::vector<int>& cur, std::size_t pos, int left, std::vector<std::vector<int>>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int x = left; x >= 0; --x) {
    cur[pos] = x;
    compositions_rec(cur, pos + 1, left - x, out);
  }
}

void partitions_rec(int left, int max_part, int parts_left, std::vector<int>& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(cur);
    return;
  }
  if (parts_left == 0) return;
  for (int x = std::min(left, max_part); x >= 1; --x) {
    cur.push_back(x);
    partitions_rec(left - x, x, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Weight> enumerate_compositions(int m, int n, int r) {
  if (m < 0 || n < 0 || r < 0) throw std::invalid_argument("enumerate_compositions: negative argument");
  Split sp{m, n};
  std::vector<Weight> out;
  if (m + n == 0) {
    if (r == 0) out.push_back(Weight::zero(sp));
    return out;
  }
  std::vector<std::vector<int>> raw;
  std::vector<int> cur(static_cast<std::size_t>(m + n), 0);
  compositions_rec(cur, 0, r, raw);
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(sp, std::move(v));
  return out;
}

std::vector<Partition> partitions_bounded(int r, int max_parts) {
  if (r < 0) throw std::invalid_argument("partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(r, r, max_parts, cur, out);
  return out;
}

std::vector<Partition> partitions(int r) { return partitions_bounded(r, r); }

std::vector<Weight> enumerate_dominant(int m, int n, int r) {
  if (m < 0 || n < 0 || r < 0) throw std::invalid_argument("enumerate_dominant: negative argument");
  Split sp{m, n};
  std::vector<Weight> out;
  for (int k = r; k >= 0; --k) {
    for (const auto& a : partitions_bounded(k, m)) {
      for (const auto& b : partitions_bounded(r - k, n)) {
        std::vector<int> e(static_cast<std::size_t>(m + n), 0);
        for (int i = 1; i <= a.length(); ++i) e[static_cast<std::size_t>(i - 1)] = a[i];
        for (int i = 1; i <= b.length(); ++i) e[static_cast<std::size_t>(m + i - 1)] = b[i];
        out.emplace_back(sp, std::move(e));
      }
    }
  }
  return out;
}

std::vector<Partition> l_restricted_partitions(int r, const Order& l) {
  std::vector<Partition> out;
  for (auto& p : partitions(r))
    if (p.is_restricted(l)) out.push_back(std::move(p));
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = t.find(',', start);
    std::string tok = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t pos = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + tok + "' in list '" + s + "'");
    }
    if (pos != tok.size()) throw std::invalid_argument("bad integer '" + tok + "' in list '" + s + "'");
    out.push_back(x);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_int_list(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace qmull
