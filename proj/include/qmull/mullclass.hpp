#pragma once

#include <utility>
#include <vector>

#include "qmull/qarith.hpp"
#include "qmull/weights.hpp"

namespace qmull {

struct JlTrace {
  std::vector<int> lambda;  // nonzero parts
  std::vector<int> x;       // x_1..x_d
  int j = 0;
};

// the descending 0/1 recursion; zero parts are ignored
JlTrace jl(const std::vector<int>& lambda, const Order& l);
inline JlTrace jl(const Partition& lambda, const Order& l) { return jl(lambda.parts(), l); }

struct SubsequenceCheck {
  bool jl_full = false;          // j_l of the subsequence equals its length
  bool product_nonzero = false;  // prod_s [lambda_{i_s} + t - s]_q != 0
};
// indices are 1-based, strictly increasing, within 1..l(lambda); l is ctx.l()
SubsequenceCheck jl_subsequence_check(const Partition& lambda, const std::vector<int>& indices,
                                      const CycloContext& ctx);

// j_l(lambda^(1)) <= lambda_m.  For m = 0 every dominant polynomial weight
// qualifies.
bool is_polynomial_hw(const Weight& lambda, const Order& l);

struct NonpolyWitness {
  std::vector<int> indices;  // i_1 < ... < i_{lambda_m + 1}, positions in the odd block
  Weight witness;            // lambda - sum_t alpha_{m, m+i_t}
  LaurentPoly product;       // prod_t [lambda_m + lambda_{m+i_t} - t + 1]
};
NonpolyWitness nonpoly_witness(const Weight& lambda, const CycloContext& ctx);

std::vector<Weight> enumerate_classification(int m, int n, int r, const Order& l);
// lambda^(0) followed by the transpose of lambda^(1)
Partition hook_concatenation(const Weight& lambda);

// classical Mullineux symbol of an l-regular partition: columns (a_i, r_i)
std::vector<std::pair<int, int>> mullineux_symbol_columns(const Partition& mu, int l);
// classical Mullineux map on l-regular partitions
Partition classical_mullineux(const Partition& mu, int l);
// M(lambda) = m(lambda')' on l-restricted partitions
Partition mullineux_symbol(const Partition& lambda, const Order& l);

}  // namespace qmull
