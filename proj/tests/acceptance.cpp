// One line per acceptance criterion; exit status 1 if any fails.
// Optional arguments select criteria by number.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qmull/verify.hpp"

using namespace qmull;

namespace {

struct Criterion {
  int id;
  double budget;  // seconds
  std::function<CheckReport()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  SweepOptions opt;
  const std::vector<Criterion> all = {
      {1, 1, [] { return check_jl_infinity(12); }},
      {2, 120, [] { return check_mull_lemma(6, 8); }},
      {3, 30, [] { return check_lucas(40); }},
      {4, 300, [] { return check_mullineux(8); }},
      {5, 300, [] { return check_serganova_shape(8); }},
      {6, 60, [] { return check_sigma(4, 4); }},
      {7, 300, [&] { return check_comp({opt.seed, 200}); }},
      {8, 300, [&] { return check_nonpoly({opt.seed, 50}, 5); }},
      {9, 300, [] { return check_lowe2(4, 4); }},
      {10, 120, [] { return check_index_combinatorics(); }},
      {11, 120, [&] { return check_hecke({opt.seed, 500}); }},
      {12, 60, [&] { return check_odd_nilpotency({opt.seed, 200}); }},
  };
  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    const CheckReport r = c.run();
    const bool slow = r.seconds > c.budget;
    const bool ok = r.passed && r.checks > 0 && !slow;
    failed += !ok;
    std::printf("%s criterion %2d %-20s checks=%lld failures=%lld time=%.2fs (budget %.0fs)", ok ? "PASS" : "FAIL",
                c.id, r.name.c_str(), static_cast<long long>(r.checks), static_cast<long long>(r.failures),
                r.seconds, c.budget);
    if (slow) std::printf(" over budget");
    if (!r.first_failure.empty()) std::printf(" first: %s", r.first_failure.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
