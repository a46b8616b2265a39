#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qmull/symhecke.hpp"

namespace qmull {

Perm::Perm(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<char> seen(w_.size() + 1, 0);
  for (int x : w_) {
    if (x < 1 || x > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation in one-line notation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Perm Perm::identity(int r) {
  std::vector<int> w(static_cast<std::size_t>(r));
  std::iota(w.begin(), w.end(), 1);
  Perm p;
  p.w_ = std::move(w);
  return p;
}

Perm Perm::simple(int i, int r) {
  if (i < 1 || i >= r) throw std::out_of_range("s_" + std::to_string(i) + " not in S_" + std::to_string(r));
  Perm p = identity(r);
  std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
  return p;
}

Perm Perm::from_word(const std::vector<int>& word, int r) {
  Perm p = identity(r);
  for (int i : word) {
    if (i < 1 || i >= r) throw std::out_of_range("s_" + std::to_string(i) + " not in S_" + std::to_string(r));
    std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);  // right multiply
  }
  return p;
}

int Perm::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

Perm Perm::inverse() const {
  Perm p;
  p.w_.assign(w_.size(), 0);
  for (std::size_t i = 0; i < w_.size(); ++i) p.w_[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
  return p;
}

std::vector<int> Perm::reduced_word() const {
  // peel right descents: w = w' s_i with l(w') = l(w) - 1
  std::vector<int> rev;
  std::vector<int> w = w_;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        rev.push_back(static_cast<int>(i) + 1);
        found = true;
        break;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

Perm Perm::dagger() const {
  const int r = degree();
  Perm p;
  p.w_.assign(w_.size(), 0);
  for (int i = 1; i <= r; ++i) p.w_[static_cast<std::size_t>(i - 1)] = r + 1 - (*this)(r + 1 - i);
  return p;
}

Perm operator*(const Perm& x, const Perm& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("Perm product: degree mismatch");
  Perm p;
  p.w_.resize(x.w_.size());
  for (std::size_t i = 0; i < x.w_.size(); ++i) p.w_[i] = x.w_[static_cast<std::size_t>(y.w_[i] - 1)];
  return p;
}

std::string Perm::to_string() const { return format_int_list(w_); }

std::vector<Perm> all_perms(int r) {
  std::vector<Perm> out;
  std::vector<int> w(static_cast<std::size_t>(r));
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

ParabolicData parabolic_data(const std::vector<int>& lambda) {
  ParabolicData pd;
  int start = 1;
  for (int part : lambda) {
    if (part < 0) throw std::invalid_argument("parabolic_data: negative part");
    std::vector<int> block;
    for (int k = 0; k < part; ++k) block.push_back(start + k);
    for (int k = 0; k + 1 < part; ++k) pd.generators.push_back(start + k);
    pd.blocks.push_back(std::move(block));
    start += part;
  }
  return pd;
}

std::vector<Perm> parabolic_subgroup(const std::vector<int>& lambda) {
  const int r = std::accumulate(lambda.begin(), lambda.end(), 0);
  std::vector<Perm> out{Perm::identity(r)};
  for (const auto& block : parabolic_data(lambda).blocks) {
    if (block.size() < 2) continue;
    std::vector<Perm> next;
    std::vector<int> imgs = block;
    do {
      std::vector<int> base = Perm::identity(r).one_line();
      for (std::size_t k = 0; k < block.size(); ++k) base[static_cast<std::size_t>(block[k] - 1)] = imgs[k];
      Perm blockperm(base);
      for (const auto& p : out) next.push_back(p * blockperm);
    } while (std::next_permutation(imgs.begin(), imgs.end()));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> block_of(const std::vector<int>& comp, int r) {
  std::vector<int> b(static_cast<std::size_t>(r) + 1, -1);
  int pos = 1;
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (int k = 0; k < comp[i]; ++k) b[static_cast<std::size_t>(pos++)] = static_cast<int>(i);
  return b;
}

}  // namespace

bool is_min_double_coset_rep(const std::vector<int>& lambda, const Perm& d, const std::vector<int>& mu) {
  const int r = d.degree();
  if (std::accumulate(lambda.begin(), lambda.end(), 0) != r || std::accumulate(mu.begin(), mu.end(), 0) != r)
    return false;
  auto bl = block_of(lambda, r), bm = block_of(mu, r);
  Perm dinv = d.inverse();
  for (int j = 1; j < r; ++j) {
    if (bm[static_cast<std::size_t>(j)] == bm[static_cast<std::size_t>(j + 1)] && d(j) > d(j + 1)) return false;
    if (bl[static_cast<std::size_t>(j)] == bl[static_cast<std::size_t>(j + 1)] && dinv(j) > dinv(j + 1)) return false;
  }
  return true;
}

std::vector<Perm> min_double_cosets(const std::vector<int>& lambda, const std::vector<int>& mu) {
  const int r = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (std::accumulate(mu.begin(), mu.end(), 0) != r)
    throw std::invalid_argument("min_double_cosets: compositions of different degrees");
  std::vector<Perm> out;
  for (auto& p : all_perms(r))
    if (is_min_double_coset_rep(lambda, p, mu)) out.push_back(std::move(p));
  return out;
}

}  // namespace qmull
