#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmull/pbw.hpp"
#include "qmull/qarith.hpp"
#include "qmull/weights.hpp"

namespace qmull {

struct CompResult {
  LaurentPoly engine;  // coefficient of m_lambda
  LaurentPoly closed;  // Gaussian product
  bool equal = false;
  bool equal_at_q = false;
};

// E_{h,i_1}^(a_1)...E_{h,i_s}^(a_s) E_{i_s,h}^(a_s)...E_{i_1,h}^(a_1) m_lambda
CompResult verify_comp(int h, const std::vector<int>& indices, const std::vector<int>& exps, const Weight& lambda,
                       const CycloContext& ctx);

struct NonResult {
  std::vector<int> indices;
  LaurentPoly engine;
  LaurentPoly product;
  bool equal = false;
  bool nonzero_at_q = false;
  bool ok() const { return equal && nonzero_at_q; }
};

// lambda must be dominant, polynomial as a weight, and outside the classification
NonResult verify_non(const Weight& lambda, const CycloContext& ctx);

struct Lowe2Stage {
  int k = 0;
  Word fword;
  Word eword;
  std::vector<int> weight;
  std::vector<int> expected_weight;
  std::size_t terms = 0;
  bool homogeneous = false;
  bool chain_to_top = false;  // E-words back to m_lambda give exactly 1
  bool recovers_previous = false;  // modulo the maximal submodule
};

struct Lowe2Trace {
  std::vector<int> lambda;
  std::vector<Lowe2Stage> stages;
  std::vector<int> final_weight;
  bool ok = false;
  std::string failure;  // names the offending k
};

Lowe2Trace verify_lowe2(const std::vector<int>& lambda);

// whether vec lies in the maximal proper submodule of the Verma module:
// every raising PBW monomial of the right weight kills its m_lambda coefficient
bool in_maximal_submodule(const PbwEngine& eng, const HWVector& vec);

// ---- sweeps

struct CheckReport {
  std::string name;
  bool passed = true;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::string first_failure;
  double seconds = 0;
};

struct SweepOptions {
  std::uint64_t seed = 1;
  int samples = 200;
};

// QMULL_THREADS if set, else hardware concurrency; at least 1
int worker_count();

CheckReport check_jl_infinity(int max_r = 12);
CheckReport check_mull_lemma(int max_len = 6, int max_part = 8);
CheckReport check_lucas(int max_s = 40);
CheckReport check_mullineux(int max_r = 8);
CheckReport check_serganova_shape(int max_r = 8);
CheckReport check_sigma(int max_n = 4, int max_r = 4);
CheckReport check_comp(const SweepOptions& opt);
CheckReport check_nonpoly(const SweepOptions& opt, int max_mnr = 5);
CheckReport check_lowe2(int max_m = 4, int max_entry = 4);
CheckReport check_index_combinatorics();
CheckReport check_hecke(const SweepOptions& opt);
CheckReport check_odd_nilpotency(const SweepOptions& opt);

}  // namespace qmull
