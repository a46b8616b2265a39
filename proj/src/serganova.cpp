#include "qmull/serganova.hpp"

#include <stdexcept>

namespace qmull {

std::vector<Root> odd_schedule(int m, int n) {
  std::vector<Root> out;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= m; ++k) out.push_back(Root{m - k + 1, m + j});
  return out;
}

SerganovaTrace serganova_tilde(const Weight& lambda, const Order& l) {
  if (!lambda.is_dominant()) throw std::invalid_argument("serganova_tilde: " + lambda.to_string() + " is not dominant");
  SerganovaTrace tr;
  tr.start = lambda;
  Weight wt = lambda;
  const auto sched = odd_schedule(lambda.split().m, lambda.split().n);
  for (std::size_t k = 0; k < sched.size(); ++k) {
    const Root& b = sched[k];
    SerganovaStep st;
    st.k = static_cast<int>(k) + 1;
    st.beta = b;
    st.pairing = wt[b.i] + wt[b.j];
    st.applied = !l.divides(st.pairing);
    if (st.applied) {
      --wt.at(b.i);
      ++wt.at(b.j);
    }
    st.after = wt;
    tr.steps.push_back(std::move(st));
  }
  tr.result = wt;
  return tr;
}

Weight sigma_weight(const Weight& lambda, const Order& l) {
  if (lambda.split().m != lambda.split().n)
    throw std::invalid_argument("sigma_weight needs m = n, got split (" + std::to_string(lambda.split().m) + "|" +
                                std::to_string(lambda.split().n) + ")");
  const Weight t = serganova_tilde(lambda, l).result;
  std::vector<int> e = t.odd_block();
  for (int x : t.even_block()) e.push_back(x);
  return Weight(lambda.split(), std::move(e));
}

Weight embed_x(const Partition& lambda, int m, int n) {
  if (lambda.length() > m) throw std::invalid_argument("embed_x: partition longer than m");
  Weight w = Weight::zero(Split{m, n});
  for (int i = 1; i <= lambda.length(); ++i) w.at(i) = lambda[i];
  return w;
}

Weight embed_y(const Partition& lambda, int m, int n) {
  if (lambda.length() > n) throw std::invalid_argument("embed_y: partition longer than n");
  Weight w = Weight::zero(Split{m, n});
  for (int i = 1; i <= lambda.length(); ++i) w.at(m + i) = lambda[i];
  return w;
}

Partition mull_via_serganova(const Partition& lambda, const Order& l) {
  if (!lambda.is_restricted(l))
    throw std::invalid_argument("partition " + lambda.to_string() + " is not " + l.to_string() + "-restricted");
  const int r = lambda.size();
  if (r == 0) return Partition();
  const Weight t = serganova_tilde(embed_x(lambda, r, r), l).result;
  for (int x : t.even_block())
    if (x != 0) throw std::logic_error("mull_via_serganova: nonzero even block in " + t.to_string());
  std::vector<int> odd = t.odd_block();
  for (std::size_t i = 0; i < odd.size(); ++i)
    if (odd[i] < 0 || (i + 1 < odd.size() && odd[i] < odd[i + 1]))
      throw std::logic_error("mull_via_serganova: odd block of " + t.to_string() + " is not a partition");
  return Partition(odd);
}

}  // namespace qmull
