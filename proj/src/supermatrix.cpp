#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qmull/symhecke.hpp"

namespace qmull {

SuperMatrix::SuperMatrix(Split split)
    : split_(split), a_(static_cast<std::size_t>(split.size() * split.size()), 0) {}

SuperMatrix::SuperMatrix(Split split, std::vector<int> row_major) : split_(split), a_(std::move(row_major)) {
  if (static_cast<int>(a_.size()) != split.size() * split.size())
    throw std::invalid_argument("SuperMatrix: expected " + std::to_string(split.size() * split.size()) + " entries");
  for (int x : a_)
    if (x < 0) throw std::invalid_argument("SuperMatrix: negative entry");
}

int SuperMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > dim() || j > dim()) throw std::out_of_range("SuperMatrix index");
  return a_[static_cast<std::size_t>((i - 1) * dim() + (j - 1))];
}

int& SuperMatrix::at(int i, int j) {
  if (i < 1 || j < 1 || i > dim() || j > dim()) throw std::out_of_range("SuperMatrix index");
  return a_[static_cast<std::size_t>((i - 1) * dim() + (j - 1))];
}

std::vector<int> SuperMatrix::ro() const {
  std::vector<int> r(static_cast<std::size_t>(dim()), 0);
  for (int i = 1; i <= dim(); ++i)
    for (int j = 1; j <= dim(); ++j) r[static_cast<std::size_t>(i - 1)] += at(i, j);
  return r;
}

std::vector<int> SuperMatrix::co() const {
  std::vector<int> c(static_cast<std::size_t>(dim()), 0);
  for (int i = 1; i <= dim(); ++i)
    for (int j = 1; j <= dim(); ++j) c[static_cast<std::size_t>(j - 1)] += at(i, j);
  return c;
}

int SuperMatrix::total() const { return std::accumulate(a_.begin(), a_.end(), 0); }

bool SuperMatrix::in_M() const {
  for (int i = 1; i <= dim(); ++i)
    for (int j = 1; j <= dim(); ++j)
      if (at(i, j) < 0 || (odd_entry(i, j) && at(i, j) > 1)) return false;
  return true;
}

bool SuperMatrix::in_P() const {
  for (int i = 1; i <= dim(); ++i)
    if (at(i, i) != 0) return false;
  return in_M();
}

std::string SuperMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 1; i <= dim(); ++i) {
    if (i > 1) os << ";";
    for (int j = 1; j <= dim(); ++j) os << (j > 1 ? "," : "") << at(i, j);
  }
  return os.str();
}

SuperMatrix SuperMatrix::parse(const std::string& s, Split split) {
  std::vector<int> all;
  int rows = 0;
  std::size_t start = 0;
  if (!s.empty()) {
    while (true) {
      auto semi = s.find(';', start);
      auto row = parse_int_list(s.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
      if (static_cast<int>(row.size()) != split.size())
        throw std::invalid_argument("matrix row " + std::to_string(rows + 1) + " has " + std::to_string(row.size()) +
                                    " entries, expected " + std::to_string(split.size()));
      all.insert(all.end(), row.begin(), row.end());
      ++rows;
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  }
  if (rows != split.size())
    throw std::invalid_argument("matrix has " + std::to_string(rows) + " rows, expected " + std::to_string(split.size()));
  return SuperMatrix(split, std::move(all));
}

SuperMatrix iota(const Weight& lambda, const Perm& d, const Weight& mu) {
  if (!(lambda.split() == mu.split())) throw std::invalid_argument("iota: split mismatch");
  if (!lambda.is_composition() || !mu.is_composition()) throw std::invalid_argument("iota: weights must be compositions");
  if (!is_min_double_coset_rep(lambda.entries(), d, mu.entries()))
    throw std::invalid_argument("iota: d = [" + d.to_string() + "] is not a minimal double coset representative");
  const auto bl = parabolic_data(lambda.entries()).blocks;
  const auto bm = parabolic_data(mu.entries()).blocks;
  std::vector<int> row_block(static_cast<std::size_t>(d.degree()) + 1, 0);
  for (std::size_t i = 0; i < bl.size(); ++i)
    for (int k : bl[i]) row_block[static_cast<std::size_t>(k)] = static_cast<int>(i) + 1;
  SuperMatrix A(lambda.split());
  for (std::size_t j = 0; j < bm.size(); ++j)
    for (int k : bm[j]) ++A.at(row_block[static_cast<std::size_t>(d(k))], static_cast<int>(j) + 1);
  return A;
}

std::tuple<Weight, Perm, Weight> iota_inverse(const SuperMatrix& A) {
  const Split sp = A.split();
  Weight lambda(sp, A.ro()), mu(sp, A.co());
  const int r = A.total();
  const auto bl = parabolic_data(lambda.entries()).blocks;
  const auto bm = parabolic_data(mu.entries()).blocks;
  // column block j sends its first a_{1j} elements into row block 1, the next
  // a_{2j} into row block 2, ...; row blocks fill from the left
  std::vector<std::size_t> next_free(bl.size(), 0);
  std::vector<int> w(static_cast<std::size_t>(r), 0);
  for (std::size_t j = 0; j < bm.size(); ++j) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < bl.size(); ++i) {
      for (int c = 0; c < A.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1); ++c) {
        w[static_cast<std::size_t>(bm[j][pos] - 1)] = bl[i][next_free[i]];
        ++pos;
        ++next_free[i];
      }
    }
  }
  return {lambda, Perm(w), mu};
}

std::vector<Perm> super_double_cosets(const Weight& lambda, const Weight& mu) {
  std::vector<Perm> out;
  for (auto& d : min_double_cosets(lambda.entries(), mu.entries()))
    if (iota(lambda, d, mu).in_M()) out.push_back(std::move(d));
  return out;
}

SuperMatrix matrix_dagger(const SuperMatrix& A) {
  const int N = A.dim();
  SuperMatrix B(A.split().swapped());
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) B.at(i, j) = A.at(N - j + 1, N - i + 1);
  return B;
}

std::vector<int> content(const SuperMatrix& A) {
  const int N = A.dim();
  std::vector<int> chi(static_cast<std::size_t>(N), 0);
  for (int h = 1; h <= N; ++h)
    for (int i = 1; i < h; ++i) chi[static_cast<std::size_t>(h - 1)] += A.at(i, h) + A.at(h, i);
  return chi;
}

namespace {

// cells: which (i,j) to fill; fills with bounded entries summing to exactly
// `target` (exact) or at most `target`
void fill_cells(SuperMatrix& A, const std::vector<std::pair<int, int>>& cells, std::size_t k, int left, bool exact,
                std::vector<SuperMatrix>& out) {
  if (k == cells.size()) {
    if (!exact || left == 0) out.push_back(A);
    return;
  }
  auto [i, j] = cells[k];
  const int cap = A.odd_entry(i, j) ? std::min(1, left) : left;
  for (int x = 0; x <= cap; ++x) {
    A.at(i, j) = x;
    fill_cells(A, cells, k + 1, left - x, exact, out);
  }
  A.at(i, j) = 0;
}

}  // namespace

std::vector<SuperMatrix> enumerate_M(int m, int n, int r) {
  if (m < 0 || n < 0 || r < 0) throw std::invalid_argument("enumerate_M: negative argument");
  Split sp{m, n};
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= sp.size(); ++i)
    for (int j = 1; j <= sp.size(); ++j) cells.emplace_back(i, j);
  SuperMatrix A(sp);
  std::vector<SuperMatrix> out;
  fill_cells(A, cells, 0, r, true, out);
  return out;
}

std::vector<SuperMatrix> enumerate_P(int m, int n, int max_total) {
  if (m < 0 || n < 0 || max_total < 0) throw std::invalid_argument("enumerate_P: negative argument");
  Split sp{m, n};
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= sp.size(); ++i)
    for (int j = 1; j <= sp.size(); ++j)
      if (i != j) cells.emplace_back(i, j);
  SuperMatrix A(sp);
  std::vector<SuperMatrix> out;
  fill_cells(A, cells, 0, max_total, false, out);
  return out;
}

std::vector<std::pair<SuperMatrix, Weight>> enumerate_Y(int m, int n, int r) {
  std::vector<std::pair<SuperMatrix, Weight>> out;
  const Split sp{m, n};
  for (const auto& A : enumerate_P(m, n, r)) {
    const auto chi = content(A);
    const int rest = r - std::accumulate(chi.begin(), chi.end(), 0);
    if (rest < 0) continue;
    for (const auto& c : enumerate_compositions(m, n, rest)) out.emplace_back(A, c + Weight(sp, chi));
  }
  return out;
}

}  // namespace qmull
