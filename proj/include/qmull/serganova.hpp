#pragma once

#include <vector>

#include "qmull/qarith.hpp"
#include "qmull/weights.hpp"

namespace qmull {

// beta_{(j-1)m+k} = alpha_{m-k+1, m+j}
std::vector<Root> odd_schedule(int m, int n);

struct SerganovaStep {
  int k = 0;  // 1-based position in the schedule
  Root beta;
  int pairing = 0;
  bool applied = false;
  Weight after;
};

struct SerganovaTrace {
  Weight start;
  std::vector<SerganovaStep> steps;
  Weight result;
};

SerganovaTrace serganova_tilde(const Weight& lambda, const Order& l);
// (tilde^(1) | tilde^(0)), m = n
Weight sigma_weight(const Weight& lambda, const Order& l);
Weight embed_x(const Partition& lambda, int m, int n);
Weight embed_y(const Partition& lambda, int m, int n);
Partition mull_via_serganova(const Partition& lambda, const Order& l);

}  // namespace qmull
