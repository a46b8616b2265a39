#include "qmull/mullclass.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qmull {

JlTrace jl(const std::vector<int>& lambda, const Order& l) {
  JlTrace tr;
  for (int p : lambda) {
    if (p < 0) throw std::invalid_argument("jl: negative part");
    if (p > 0) tr.lambda.push_back(p);
  }
  const std::size_t d = tr.lambda.size();
  tr.x.assign(d, 0);
  int tail = 0;
  for (std::size_t i = d; i-- > 0;) {
    tr.x[i] = l.divides(tr.lambda[i] + tail) ? 0 : 1;
    tail += tr.x[i];
  }
  tr.j = tail;
  return tr;
}

SubsequenceCheck jl_subsequence_check(const Partition& lambda, const std::vector<int>& indices,
                                      const CycloContext& ctx) {
  std::vector<int> sub;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    int i = indices[k];
    if (i < 1 || i > lambda.length())
      throw std::out_of_range("jl_subsequence_check: index " + std::to_string(i) + " outside 1.." +
                              std::to_string(lambda.length()));
    if (k > 0 && indices[k - 1] >= i) throw std::invalid_argument("jl_subsequence_check: indices must increase");
    sub.push_back(lambda[i]);
  }
  const int t = static_cast<int>(sub.size());
  SubsequenceCheck out;
  out.jl_full = jl(sub, ctx.l()).j == t;
  if (ctx.field_char() == 0) {
    CycloElt prod = eval_at_q(LaurentPoly(1), ctx);
    for (int s = 1; s <= t; ++s) prod = prod * eval_at_q(quantum_int(sub[static_cast<std::size_t>(s - 1)] + t - s), ctx);
    out.product_nonzero = !prod.is_zero();
  } else {
    out.product_nonzero = true;
    for (int s = 1; s <= t; ++s)
      if (gauss_is_zero_at_q(sub[static_cast<std::size_t>(s - 1)] + t - s, 1, ctx)) out.product_nonzero = false;
  }
  return out;
}

namespace {

void require_dominant_polynomial(const Weight& lambda, const char* who) {
  if (!lambda.is_nonnegative() || !lambda.is_dominant())
    throw std::invalid_argument(std::string(who) + ": weight " + lambda.to_string() +
                                " is not a dominant polynomial weight");
}

}  // namespace

bool is_polynomial_hw(const Weight& lambda, const Order& l) {
  require_dominant_polynomial(lambda, "is_polynomial_hw");
  const int m = lambda.split().m;
  if (m == 0) return true;
  return jl(lambda.odd_block(), l).j <= lambda[m];
}

NonpolyWitness nonpoly_witness(const Weight& lambda, const CycloContext& ctx) {
  require_dominant_polynomial(lambda, "nonpoly_witness");
  if (is_polynomial_hw(lambda, ctx.l()))
    throw std::invalid_argument("nonpoly_witness: " + lambda.to_string() + " is polynomial for l=" +
                                ctx.l().to_string());
  const int m = lambda.split().m;
  const int lm = lambda[m];
  const JlTrace tr = jl(lambda.odd_block(), ctx.l());
  NonpolyWitness w;
  for (std::size_t i = tr.x.size(); i-- > 0 && static_cast<int>(w.indices.size()) < lm + 1;)
    if (tr.x[i]) w.indices.insert(w.indices.begin(), static_cast<int>(i) + 1);
  w.witness = lambda;
  w.product = LaurentPoly(1);
  bool zero = false;
  for (std::size_t t = 1; t <= w.indices.size(); ++t) {
    const int i = w.indices[t - 1];
    const int top = lm + lambda[m + i] - static_cast<int>(t) + 1;
    w.product *= quantum_int(top);
    if (ctx.field_char() != 0 && gauss_is_zero_at_q(top, 1, ctx)) zero = true;
    w.witness = w.witness - Root{m, m + i}.as_weight(lambda.split());
  }
  if (ctx.field_char() == 0) zero = is_zero_at_q(w.product, ctx);
  if (zero)
    throw std::logic_error("nonpoly_witness: product vanishes at q for " + lambda.to_string() + ", " +
                           ctx.to_string());
  return w;
}

std::vector<Weight> enumerate_classification(int m, int n, int r, const Order& l) {
  std::vector<Weight> out;
  for (auto& w : enumerate_dominant(m, n, r))
    if (is_polynomial_hw(w, l)) out.push_back(std::move(w));
  return out;
}

Partition hook_concatenation(const Weight& lambda) {
  std::vector<int> parts = lambda.even_block();
  const Partition t = Partition(lambda.odd_block()).transpose();
  parts.insert(parts.end(), t.parts().begin(), t.parts().end());
  return Partition(parts);
}

namespace {

// boxes of the l-rim of mu as (row, col), 1-based
std::vector<std::pair<int, int>> l_rim(const Partition& mu, int l) {
  const int d = mu.length();
  // rim traversal rows top to bottom, right to left within a row
  std::vector<std::pair<int, int>> rim;
  std::vector<std::size_t> row_start(static_cast<std::size_t>(d) + 2, 0);
  for (int i = 1; i <= d; ++i) {
    row_start[static_cast<std::size_t>(i)] = rim.size();
    const int lo = std::max(1, mu[i + 1]);
    for (int j = mu[i]; j >= lo; --j) rim.emplace_back(i, j);
  }
  std::vector<std::pair<int, int>> out;
  int row = 1;
  while (row <= d) {
    std::size_t k = row_start[static_cast<std::size_t>(row)];
    int last_row = row;
    for (int c = 0; c < l && k < rim.size(); ++c, ++k) {
      out.push_back(rim[k]);
      last_row = rim[k].first;
    }
    row = last_row + 1;
  }
  return out;
}

Partition remove_boxes(const Partition& mu, const std::vector<std::pair<int, int>>& boxes) {
  std::vector<int> parts = mu.parts();
  for (auto [i, j] : boxes) {
    (void)j;
    --parts[static_cast<std::size_t>(i - 1)];
  }
  // removing an l-rim leaves a partition; Partition() re-validates
  return Partition(parts);
}

using Symbol = std::vector<std::pair<int, int>>;

const std::map<Symbol, Partition>& symbol_table(int size, int l) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::map<Symbol, Partition>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(size, l);
  auto it = tables.find(key);
  if (it != tables.end()) return it->second;
  std::map<Symbol, Partition> t;
  const Order ol = Order::finite(l);
  for (const auto& p : partitions(size))
    if (p.is_regular(ol)) t.emplace(mullineux_symbol_columns(p, l), p);
  return tables.emplace(key, std::move(t)).first->second;
}

}  // namespace

std::vector<std::pair<int, int>> mullineux_symbol_columns(const Partition& mu, int l) {
  if (l < 2) throw std::invalid_argument("mullineux symbol needs l >= 2");
  if (!mu.is_regular(Order::finite(l)))
    throw std::invalid_argument("partition " + mu.to_string() + " is not " + std::to_string(l) + "-regular");
  std::vector<std::pair<int, int>> cols;
  Partition cur = mu;
  while (!cur.empty()) {
    auto rim = l_rim(cur, l);
    cols.emplace_back(static_cast<int>(rim.size()), cur.length());
    cur = remove_boxes(cur, rim);
  }
  return cols;
}

Partition classical_mullineux(const Partition& mu, int l) {
  auto cols = mullineux_symbol_columns(mu, l);
  for (auto& [a, r] : cols) r = a - r + (a % l == 0 ? 0 : 1);
  const auto& table = symbol_table(mu.size(), l);
  auto it = table.find(cols);
  if (it == table.end()) throw std::logic_error("classical_mullineux: transformed symbol has no partition");
  return it->second;
}

Partition mullineux_symbol(const Partition& lambda, const Order& l) {
  if (!lambda.is_restricted(l))
    throw std::invalid_argument("partition " + lambda.to_string() + " is not " + l.to_string() + "-restricted");
  if (l.is_infinite()) return lambda.transpose();
  return classical_mullineux(lambda.transpose(), l.value()).transpose();
}

}  // namespace qmull
