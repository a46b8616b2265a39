#include "qmull/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qmull/mullclass.hpp"
#include "qmull/serganova.hpp"
#include "qmull/symhecke.hpp"

namespace qmull {

namespace {

GenSymbol E(int a, int b, int M) { return GenSymbol::root(a, b, M); }

int sign_between(const Split& sp, int a, int b) { return (sp.parity(a) + sp.parity(b)) % 2 ? -1 : 1; }

bool nonzero_product_at_q(const std::vector<int>& tops, const LaurentPoly& product, const CycloContext& ctx) {
  if (ctx.field_char() == 0) return !is_zero_at_q(product, ctx);
  for (int s : tops)
    if (s < 0 ? gauss_is_zero_at_q(-s, 1, ctx) : gauss_is_zero_at_q(s, 1, ctx)) return false;
  return true;
}

std::string fmt(const std::vector<int>& v) { return "[" + format_int_list(v) + "]"; }

// l' with the given l, odd l' when possible
CycloContext context_for_l(int l) { return CycloContext(Order::finite(l % 2 ? l : 2 * l)); }

CheckReport named_report(const char* name) {
  CheckReport r;
  r.name = name;
  return r;
}

class Timer {
 public:
  Timer() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

// Runs fn(i) for i < n on the worker pool; an empty string means pass.
// Results are folded in index order, so reports do not depend on scheduling.
void run_indexed(CheckReport& rep, std::size_t n, const std::function<std::string(std::size_t)>& fn) {
  std::vector<std::string> out(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        out[i] = fn(i);
      } catch (const std::exception& e) {
        out[i] = std::string("exception: ") + e.what();
      }
    }
  };
  const int w = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(worker_count()), n));
  if (w <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < w; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& s : out) {
    ++rep.checks;
    if (s.empty()) continue;
    ++rep.failures;
    rep.passed = false;
    if (rep.first_failure.empty()) rep.first_failure = std::move(s);
  }
}

void expect(CheckReport& rep, bool ok, const std::string& what) {
  ++rep.checks;
  if (ok) return;
  ++rep.failures;
  rep.passed = false;
  if (rep.first_failure.empty()) rep.first_failure = what;
}

// partitions with at most max_len parts, each at most max_part
void bounded_partitions(int max_len, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == max_len) return;
  const int top = cur.empty() ? max_part : cur.back();
  for (int p = 1; p <= top; ++p) {
    cur.push_back(p);
    bounded_partitions(max_len, max_part, cur, out);
    cur.pop_back();
  }
}

// all l-restricted partitions of r <= max_r for l = 2..7
std::vector<std::pair<Partition, int>> restricted_inputs(int max_r) {
  std::vector<std::pair<Partition, int>> out;
  for (int l = 2; l <= 7; ++l)
    for (int r = 0; r <= max_r; ++r)
      for (auto& p : l_restricted_partitions(r, Order::finite(l))) out.emplace_back(std::move(p), l);
  return out;
}

std::vector<int> random_block(std::mt19937_64& rng, int len, int max_entry) {
  std::uniform_int_distribution<int> d(0, max_entry);
  std::vector<int> v(static_cast<std::size_t>(len));
  for (auto& x : v) x = d(rng);
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("QMULL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---- single verifications

CompResult verify_comp(int h, const std::vector<int>& indices, const std::vector<int>& exps, const Weight& lambda,
                       const CycloContext& ctx) {
  const Split sp = lambda.split();
  const int N = sp.size();
  if (indices.size() != exps.size()) throw std::invalid_argument("verify_comp: indices and exponents differ in length");
  if (h < 1 || h > N) throw std::invalid_argument("verify_comp: h out of range");
  for (std::size_t t = 0; t < indices.size(); ++t) {
    const int i = indices[t];
    if (i <= (t ? indices[t - 1] : h) || i > N)
      throw std::invalid_argument("verify_comp: need h < i_1 < ... <= m+n, got h=" + std::to_string(h) +
                                  " indices " + fmt(indices));
    if (exps[t] < 1) throw std::invalid_argument("verify_comp: exponents must be positive");
    if (sign_between(sp, h, i) < 0 && exps[t] != 1)
      throw std::invalid_argument("verify_comp: odd root alpha_{" + std::to_string(h) + "," + std::to_string(i) +
                                  "} needs exponent 1");
  }
  Word w;
  for (std::size_t t = 0; t < indices.size(); ++t) w.push_back(E(h, indices[t], exps[t]));
  for (std::size_t t = indices.size(); t-- > 0;) w.push_back(E(indices[t], h, exps[t]));
  PbwEngine eng(sp);
  const HWVector hv = eng.act_on_hw(UElement(w), lambda);
  for (const auto& [k, c] : hv.terms)
    if (k != eng.zero_key()) throw std::logic_error("verify_comp: result left the highest weight space");
  CompResult r;
  r.engine = hv.coeff(eng.zero_key());
  r.closed = LaurentPoly(1);
  int used = 0;
  for (std::size_t t = 0; t < indices.size(); ++t) {
    const int i = indices[t];
    r.closed *= gauss_binom(lambda[h] - sign_between(sp, h, i) * lambda[i] - used, exps[t]);
    used += exps[t];
  }
  r.equal = r.engine == r.closed;
  r.equal_at_q = ctx.field_char() == 0 ? eval_at_q(r.engine, ctx) == eval_at_q(r.closed, ctx) : r.equal;
  return r;
}

NonResult verify_non(const Weight& lambda, const CycloContext& ctx) {
  if (is_polynomial_hw(lambda, ctx.l()))
    throw std::invalid_argument("verify_non: " + lambda.to_string() + " is polynomial for l=" + ctx.l().to_string());
  const NonpolyWitness w = nonpoly_witness(lambda, ctx);
  const int m = lambda.split().m;
  Word word;
  for (int i : w.indices) word.push_back(E(m, m + i, 1));
  for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it) word.push_back(E(m + *it, m, 1));
  PbwEngine eng(lambda.split());
  const HWVector hv = eng.act_on_hw(UElement(word), lambda);
  NonResult r;
  r.indices = w.indices;
  r.engine = hv.coeff(eng.zero_key());
  r.product = w.product;
  r.equal = r.engine == r.product && hv.terms.size() <= 1;
  std::vector<int> tops;
  for (std::size_t t = 1; t <= w.indices.size(); ++t)
    tops.push_back(lambda[m] + lambda[m + w.indices[t - 1]] - static_cast<int>(t) + 1);
  r.nonzero_at_q = nonzero_product_at_q(tops, r.product, ctx);
  return r;
}

namespace {

// multiplicity vectors over the positive roots of eng, summing to beta
void kostant(const PbwEngine& eng, const std::vector<Root>& roots, std::size_t k, std::vector<int>& simple,
             std::vector<int>& mult, std::vector<std::vector<int>>& out) {
  if (k == roots.size()) {
    if (std::all_of(simple.begin(), simple.end(), [](int c) { return c == 0; })) out.push_back(mult);
    return;
  }
  const Root& r = roots[k];
  const int cap = r.odd(eng.split()) ? 1 : 1 << 20;
  for (int e = 0; e <= cap; ++e) {
    bool fits = true;
    for (int j = r.i; j < r.j; ++j)
      if (simple[static_cast<std::size_t>(j - 1)] < e) fits = false;
    if (!fits) break;
    mult[k] = e;
    for (int j = r.i; j < r.j; ++j) simple[static_cast<std::size_t>(j - 1)] -= e;
    kostant(eng, roots, k + 1, simple, mult, out);
    for (int j = r.i; j < r.j; ++j) simple[static_cast<std::size_t>(j - 1)] += e;
  }
  mult[k] = 0;
}

}  // namespace

bool in_maximal_submodule(const PbwEngine& eng, const HWVector& vec) {
  std::map<Weight, HWVector> by_weight;
  for (const auto& [k, c] : vec.terms) {
    auto& part = by_weight[eng.key_weight(vec.lambda, k)];
    part.lambda = vec.lambda;
    part.add(k, c);
  }
  const int N = eng.split().size();
  std::vector<Root> roots = eng.lowering_order();
  for (const auto& [mu, part] : by_weight) {
    const Weight beta = vec.lambda - mu;
    std::vector<int> simple(static_cast<std::size_t>(std::max(N - 1, 0)), 0);
    int acc = 0;
    for (int j = 1; j < N; ++j) {
      acc += beta[j];
      simple[static_cast<std::size_t>(j - 1)] = acc;
      if (acc < 0) return false;  // not below lambda: cannot happen for F_B m_lambda
    }
    std::vector<int> mult(roots.size(), 0);
    std::vector<std::vector<int>> all;
    kostant(eng, roots, 0, simple, mult, all);
    for (const auto& A : all) {
      Word w;
      for (std::size_t k = 0; k < roots.size(); ++k)
        if (A[k] > 0) w.push_back(E(roots[k].i, roots[k].j, A[k]));
      if (!eng.apply(UElement(w), part).coeff(eng.zero_key()).is_zero()) return false;
    }
  }
  return true;
}

Lowe2Trace verify_lowe2(const std::vector<int>& lambda) {
  const int m = static_cast<int>(lambda.size());
  if (m < 1) throw std::invalid_argument("verify_lowe2: empty weight");
  for (int i = 0; i + 1 < m; ++i)
    if (lambda[static_cast<std::size_t>(i)] < lambda[static_cast<std::size_t>(i + 1)])
      throw std::invalid_argument("verify_lowe2: " + fmt(lambda) + " is not weakly decreasing");
  const Split sp{m, 0};
  const PbwEngine eng(sp);
  const Weight la(sp, lambda);
  auto L = [&](int i) { return lambda[static_cast<std::size_t>(i - 1)]; };
  Lowe2Trace tr;
  tr.lambda = lambda;
  std::vector<HWVector> n{eng.highest(la)};
  std::vector<Word> ewords;
  for (int k = 1; k <= m - 1; ++k) {
    Lowe2Stage st;
    st.k = k;
    for (int j = m - k; j >= 1; --j)
      if (L(k) - L(k + j) > 0) st.fword.push_back(E(j + 1, j, L(k) - L(k + j)));
    for (int j = 1; j <= m - k; ++j)
      if (L(k) - L(k + j) > 0) st.eword.push_back(E(j, j + 1, L(k) - L(k + j)));
    n.push_back(eng.apply(UElement(st.fword), n.back()));
    const HWVector& cur = n.back();
    st.terms = cur.terms.size();
    for (int i = k + 1; i <= m; ++i) st.expected_weight.push_back(L(i));
    for (int i = k; i >= 1; --i) st.expected_weight.push_back(L(i));
    std::set<Weight> wts;
    for (const auto& [key, c] : cur.terms) wts.insert(eng.key_weight(la, key));
    st.homogeneous = wts.size() == 1;
    if (st.homogeneous) st.weight = wts.begin()->entries();
    ewords.push_back(st.eword);
    // back to the top through every earlier stage
    HWVector back = cur;
    for (int j = k; j >= 1; --j) back = eng.apply(UElement(ewords[static_cast<std::size_t>(j - 1)]), back);
    st.chain_to_top = back.terms.size() == 1 && back.coeff(eng.zero_key()) == LaurentPoly(1);
    HWVector diff = eng.apply(UElement(st.eword), cur);
    for (const auto& [key, c] : n[static_cast<std::size_t>(k - 1)].terms) diff.add(key, -c);
    st.recovers_previous = in_maximal_submodule(eng, diff);
    tr.stages.push_back(std::move(st));
  }
  tr.final_weight = m == 1 ? lambda : tr.stages.back().weight;
  std::vector<int> dag(lambda.rbegin(), lambda.rend());
  tr.ok = true;
  for (const auto& st : tr.stages) {
    std::string why;
    if (st.terms == 0)
      why = "vector vanished";
    else if (!st.homogeneous)
      why = "vector is not a weight vector";
    else if (st.weight != st.expected_weight)
      why = "weight " + fmt(st.weight) + " expected " + fmt(st.expected_weight);
    else if (!st.chain_to_top)
      why = "E-words do not return to m_lambda";
    else if (!st.recovers_previous)
      why = "E-word does not recover the previous stage";
    if (!why.empty()) {
      tr.ok = false;
      tr.failure = "lambda=" + fmt(lambda) + " k=" + std::to_string(st.k) + ": " + why;
      return tr;
    }
  }
  if (tr.final_weight != dag) {
    tr.ok = false;
    tr.failure = "lambda=" + fmt(lambda) + ": final weight " + fmt(tr.final_weight) + " expected " + fmt(dag);
  }
  return tr;
}

// ---- sweeps

CheckReport check_jl_infinity(int max_r) {
  Timer tm;
  CheckReport rep = named_report("jl_infinity");
  for (int r = 0; r <= max_r; ++r)
    for (const auto& p : partitions(r))
      expect(rep, jl(p, Order::infinite()).j == p.length(), "j_inf(" + p.to_string() + ") != length");
  rep.seconds = tm.seconds();
  return rep;
}

CheckReport check_mull_lemma(int max_len, int max_part) {
  Timer tm;
  CheckReport rep = named_report("mull_lemma");
  std::vector<Partition> parts;
  std::vector<int> cur;
  bounded_partitions(max_len, max_part, cur, parts);
  std::vector<CycloContext> ctxs;
  for (int l = 2; l <= 7; ++l) {
    ctxs.emplace_back(Order::finite(2 * l));
    if (l % 2) ctxs.emplace_back(Order::finite(l));
  }
  run_indexed(rep, parts.size(), [&](std::size_t k) -> std::string {
    const Partition& p = parts[k];
    const int d = p.length();
    for (const auto& ctx : ctxs)
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < d; ++i)
          if (mask >> i & 1u) idx.push_back(i + 1);
        const auto c = jl_subsequence_check(p, idx, ctx);
        if (c.jl_full != c.product_nonzero)
          return "lambda=" + p.to_string() + " indices " + fmt(idx) + " " + ctx.to_string();
      }
    return {};
  });
  rep.seconds = tm.seconds();
  return rep;
}

CheckReport check_lucas(int max_s) {
  Timer tm;
  CheckReport rep = named_report("lucas");
  std::vector<int> lps;
  for (int lp = 3; lp <= 12; ++lp) lps.push_back(lp);
  run_indexed(rep, lps.size(), [&](std::size_t k) -> std::string {
    const CycloContext ctx(Order::finite(lps[k]));
    for (int s = 0; s <= max_s; ++s)
      for (int t = 0; t <= s; ++t)
        if (lucas_nonzero(s, t, ctx) == is_zero_at_q(gauss_binom(s, t), ctx))
          return "s=" + std::to_string(s) + " t=" + std::to_string(t) + " " + ctx.to_string();
    return {};
  });
  rep.seconds = tm.seconds();
  return rep;
}

CheckReport check_mullineux(int max_r) {
  Timer tm;
  CheckReport rep = named_report("mullineux");
  expect(rep, mull_via_serganova(Partition({2, 1}), Order::finite(3)) == Partition({1, 1, 1}),
         "anchor M_3((2,1)) != (1,1,1)");
  const auto in = restricted_inputs(max_r);
  run_indexed(rep, in.size(), [&](std::size_t k) -> std::string {
    const auto& [p, l] = in[k];
    const Order ol = Order::finite(l);
    const Partition a = mull_via_serganova(p, ol), b = mullineux_symbol(p, ol);
    const std::string tag = "lambda=" + p.to_string() + " l=" + std::to_string(l) + ": ";
    if (a != b) return tag + "serganova " + a.to_string() + " vs symbol " + b.to_string();
    if (a.size() != p.size()) return tag + "size changed";
    if (!a.is_restricted(ol)) return tag + "image not restricted";
    if (mull_via_serganova(a, ol) != p) return tag + "not an involution";
    return {};
  });
  rep.seconds = tm.seconds();
  return rep;
}

CheckReport check_serganova_shape(int max_r) {
  Timer tm;
  CheckReport rep = named_report("serganova_shape");
  const auto in = restricted_inputs(max_r);
  run_indexed(rep, in.size(), [&](std::size_t k) -> std::string {
    const auto& [p, l] = in[k];
    const int r = std::max(p.size(), 1);
    const auto tr = serganova_tilde(embed_x(p, r, r), Order::finite(l));
    const std::string tag = "lambda=" + p.to_string() + " l=" + std::to_string(l) + ": ";
    for (const auto& st : tr.steps)
      if (st.after.degree() != tr.start.degree()) return tag + "sum changed at step " + std::to_string(st.k);
    for (int x : tr.result.even_block())
      if (x != 0) return tag + "nonzero even block " + tr.result.to_string();
    const auto odd = tr.result.odd_block();
    for (std::size_t i = 0; i < odd.size(); ++i)
      if (odd[i] < 0 || (i + 1 < odd.size() && odd[i] < odd[i + 1])) return tag + "odd block not a partition";
    return {};
  });
  rep.seconds = tm.seconds();
  return rep;
}

CheckReport check_sigma(int max_n, int max_r) {
  Timer tm;
  CheckReport rep = named_report("sigma_involution");
  for (int n = 1; n <= max_n; ++n)
    for (int r = 0; r <= max_r; ++r)
      for (const auto& la : enumerate_dominant(n, n, r))
        for (int l : {2, 3, 5}) {
          const Order ol = Order::finite(l);
          expect(rep, sigma_weight(sigma_weight(la, ol), ol) == la,
                 "lambda=" + la.to_string() + " l=" + std::to_string(l));
        }
  rep.seconds = tm.seconds();
  return rep;
}

CheckReport check_comp(const SweepOptions& opt) {
  Timer tm;
  CheckReport rep = named_report("comp");
  struct Inst {
    int h;
    std::vector<int> idx, exps;
    Weight la;
  };
  std::mt19937_64 rng(opt.seed);
  std::vector<Inst> insts;
  while (static_cast<int>(insts.size()) < opt.samples) {
    const int N = 2 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(rng() % static_cast<unsigned>(N + 1));
    const Split sp{m, N - m};
    Inst in;
    in.h = 1 + static_cast<int>(rng() % static_cast<unsigned>(N - 1));
    // a nonempty random subset of h+1..N, exponents sharing a budget of 5
    std::vector<int> cand;
    for (int i = in.h + 1; i <= N; ++i) cand.push_back(i);
    std::shuffle(cand.begin(), cand.end(), rng);
    cand.resize(1 + rng() % cand.size());
    std::sort(cand.begin(), cand.end());
    int budget = 5 - static_cast<int>(cand.size());
    for (int i : cand) {
      int a = 1;
      if (sign_between(sp, in.h, i) > 0 && budget > 0) {
        const int extra = static_cast<int>(rng() % static_cast<unsigned>(budget + 1));
        a += extra;
        budget -= extra;
      }
      in.idx.push_back(i);
      in.exps.push_back(a);
    }
    auto ev = random_block(rng, sp.m, 6), od = random_block(rng, sp.n, 6);
    ev.insert(ev.end(), od.begin(), od.end());
    in.la = Weight(sp, ev);
    insts.push_back(std::move(in));
  }
  std::vector<CycloContext> ctxs;
  for (int lp : {3, 4, 5, 7}) ctxs.emplace_back(Order::finite(lp));
  run_indexed(rep, insts.size(), [&](std::size_t k) -> std::string {
    const Inst& in = insts[k];
    const std::string tag = "h=" + std::to_string(in.h) + " i=" + fmt(in.idx) + " a=" + fmt(in.exps) +
                            " lambda=" + in.la.to_string();
    const auto r = verify_comp(in.h, in.idx, in.exps, in.la, ctxs[0]);
    if (!r.equal) return tag + ": engine " + r.engine.to_string() + " closed " + r.closed.to_string();
    for (const auto& ctx : ctxs)
      if (!(eval_at_q(r.engine, ctx) == eval_at_q(r.closed, ctx))) return tag + ": differ at q, " + ctx.to_string();
    return {};
  });
  rep.seconds = tm.seconds();
  return rep;
}

CheckReport check_nonpoly(const SweepOptions& opt, int max_mnr) {
  Timer tm;
  CheckReport rep = named_report("nonpoly");
  struct Case {
    Weight la;
    int l;
  };
  std::vector<Case> cases;
  for (int m = 1; m <= max_mnr; ++m)
    for (int n = 1; n <= max_mnr; ++n)
      for (int r = 0; r <= max_mnr; ++r)
        for (int l = 2; l <= 5; ++l)
          for (auto& la : enumerate_dominant(m, n, r))
            if (!is_polynomial_hw(la, Order::finite(l))) cases.push_back({std::move(la), l});
  run_indexed(rep, cases.size(), [&](std::size_t k) -> std::string {
    const auto& [la, l] = cases[k];
    const CycloContext ctx = context_for_l(l);
    const auto w = nonpoly_witness(la, ctx);
    const std::string tag = "lambda=" + la.to_string() + " l=" + std::to_string(l) + ": ";
    if (w.witness[la.split().m] != -1) return tag + "witness entry m is not -1";
    if (static_cast<int>(w.indices.size()) != la[la.split().m] + 1) return tag + "wrong number of indices";
    if (is_zero_at_q(w.product, ctx)) return tag + "product vanishes at q";
    return {};
  });
  // engine confirmation on a seeded subsample
  std::vector<std::size_t> pick(cases.size());
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  std::mt19937_64 rng(opt.seed);
  std::shuffle(pick.begin(), pick.end(), rng);
  pick.resize(std::min<std::size_t>(pick.size(), static_cast<std::size_t>(std::max(opt.samples, 0))));
  run_indexed(rep, pick.size(), [&](std::size_t k) -> std::string {
    const auto& [la, l] = cases[pick[k]];
    const auto r = verify_non(la, context_for_l(l));
    if (!r.ok())
      return "lambda=" + la.to_string() + " l=" + std::to_string(l) + ": engine " + r.engine.to_string() +
             " product " + r.product.to_string();
    return {};
  });
  rep.seconds = tm.seconds();
  return rep;
}

CheckReport check_lowe2(int max_m, int max_entry) {
  Timer tm;
  CheckReport rep = named_report("lowe2");
  std::vector<std::vector<int>> inputs;
  for (int m = 1; m <= max_m; ++m) {
    std::vector<int> cur;
    std::function<void()> rec = [&] {
      if (static_cast<int>(cur.size()) == m) {
        inputs.push_back(cur);
        return;
      }
      const int top = cur.empty() ? max_entry : cur.back();
      for (int x = 0; x <= top; ++x) {
        cur.push_back(x);
        rec();
        cur.pop_back();
      }
    };
    rec();
  }
  run_indexed(rep, inputs.size(), [&](std::size_t k) -> std::string {
    const auto tr = verify_lowe2(inputs[k]);
    return tr.ok ? std::string() : tr.failure;
  });
  rep.seconds = tm.seconds();
  return rep;
}

CheckReport check_index_combinatorics() {
  Timer tm;
  CheckReport rep = named_report("index_combinatorics");
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      if (m + n == 0) continue;
      for (int r = 0; r <= 4; ++r) {
        const std::string tag = "(" + std::to_string(m) + "|" + std::to_string(n) + "), r=" + std::to_string(r);
        std::set<SuperMatrix> images;
        std::size_t triples = 0;
        for (const auto& la : enumerate_compositions(m, n, r))
          for (const auto& mu : enumerate_compositions(m, n, r))
            for (const auto& d : super_double_cosets(la, mu)) {
              const SuperMatrix A = iota(la, d, mu);
              expect(rep, A.ro() == la.entries() && A.co() == mu.entries(), tag + ": ro/co mismatch");
              images.insert(A);
              ++triples;
              const auto [l2, d2, m2] = iota_inverse(A);
              expect(rep, l2 == la && d2 == d && m2 == mu, tag + ": iota inverse");
            }
        const auto all = enumerate_M(m, n, r);
        expect(rep, triples == images.size(), tag + ": iota not injective");
        expect(rep, std::set<SuperMatrix>(all.begin(), all.end()) == images, tag + ": iota not onto M(m|n,r)");
        expect(rep, enumerate_Y(m, n, r).size() == all.size(), tag + ": |Y| != |M|");
        for (const auto& A : all) {
          const SuperMatrix D = matrix_dagger(A);
          expect(rep, matrix_dagger(D) == A, tag + ": dagger not involutive on " + A.to_string());
          expect(rep, D.ro() == dagger(A.co()), tag + ": ro(A dagger) on " + A.to_string());
        }
      }
    }
  for (int m = 1; m <= 3; ++m)
    for (int r = 0; r <= 5; ++r) {
      // C(m^2 + r - 1, r)
      long long c = 1;
      for (int i = 1; i <= r; ++i) c = c * (m * m + r - 1 - r + i) / i;
      expect(rep, static_cast<long long>(enumerate_M(m, 0, r).size()) == c,
             "|M(" + std::to_string(m) + "|0," + std::to_string(r) + ")|");
    }
  rep.seconds = tm.seconds();
  return rep;
}

namespace {

HeckeElt random_hecke(std::mt19937_64& rng, int r) {
  const auto perms = all_perms(r);
  HeckeElt x(r);
  for (int k = 0; k < 3; ++k) {
    const auto& w = perms[rng() % perms.size()];
    const int c = static_cast<int>(rng() % 5) - 2;
    const int e = static_cast<int>(rng() % 5) - 2;
    x.add_term(w, LaurentPoly::monomial(c == 0 ? 1 : c, e));
  }
  return x;
}

}  // namespace

CheckReport check_hecke(const SweepOptions& opt) {
  Timer tm;
  CheckReport rep = named_report("hecke");
  const LaurentPoly q2 = LaurentPoly::v(2);
  using Map = HeckeElt (*)(const HeckeElt&);
  const std::vector<std::pair<std::string, Map>> maps = {{"sharp", &sharp}, {"dagger", &dagger_hecke}};
  for (int r = 1; r <= 5; ++r)
    for (int i = 1; i < r; ++i) {
      const HeckeElt T = HeckeElt::Ti(i, r);
      expect(rep, hecke_mul(T, T) == (q2 - 1) * T + q2 * HeckeElt::one(r),
             "quadratic relation r=" + std::to_string(r) + " i=" + std::to_string(i));
    }
  for (int r = 1; r <= 4; ++r) {
    for (const auto& [name, f] : maps) {
      for (const auto& w : all_perms(r)) {
        const HeckeElt T = HeckeElt::T(w);
        expect(rep, f(f(T)) == T, name + " not involutive on T_" + w.to_string());
      }
      for (int i = 1; i < r; ++i) {
        const HeckeElt a = f(HeckeElt::Ti(i, r));
        expect(rep, hecke_mul(a, a) == (q2 - 1) * a + q2 * HeckeElt::one(r), name + ": quadratic image");
        for (int j = 1; j < r; ++j) {
          const HeckeElt b = f(HeckeElt::Ti(j, r));
          if (std::abs(i - j) > 1) expect(rep, hecke_mul(a, b) == hecke_mul(b, a), name + ": commuting image");
          if (std::abs(i - j) == 1)
            expect(rep, hecke_mul(hecke_mul(a, b), a) == hecke_mul(hecke_mul(b, a), b), name + ": braid image");
        }
      }
    }
  }
  std::mt19937_64 rng(opt.seed);
  std::vector<std::pair<HeckeElt, HeckeElt>> pairs;
  for (int k = 0; k < opt.samples; ++k) {
    HeckeElt a = random_hecke(rng, 5);
    pairs.emplace_back(std::move(a), random_hecke(rng, 5));
  }
  run_indexed(rep, pairs.size(), [&](std::size_t k) -> std::string {
    const auto& [a, b] = pairs[k];
    for (const auto& [name, f] : maps)
      if (!(f(hecke_mul(a, b)) == hecke_mul(f(a), f(b)))) return name + " not multiplicative on pair " + std::to_string(k);
    return {};
  });
  rep.seconds = tm.seconds();
  return rep;
}

CheckReport check_odd_nilpotency(const SweepOptions& opt) {
  Timer tm;
  CheckReport rep = named_report("odd_nilpotency");
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; m + n <= 6; ++n) {
      const Split sp{m, n};
      const PbwEngine eng(sp);
      for (int a = 1; a <= m + n; ++a)
        for (int b = 1; b <= m + n; ++b)
          if (a != b && sign_between(sp, a, b) < 0)
            expect(rep, eng.normalize(UElement(Word{E(a, b, 1), E(a, b, 1)})).is_zero(),
                   "E_{" + std::to_string(a) + "," + std::to_string(b) + "}^2 in (" + std::to_string(m) + "|" +
                       std::to_string(n) + ")");
    }
  const std::vector<Split> splits = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}};
  struct Fuzz {
    Split sp;
    Word w;
    Weight la;
  };
  std::mt19937_64 rng(opt.seed);
  std::vector<Fuzz> fz;
  for (int k = 0; k < opt.samples; ++k) {
    const Split sp = splits[rng() % splits.size()];
    const int N = sp.size();
    auto letter = [&]() -> GenSymbol {
      const int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(N));
      switch (rng() % 4) {
        case 0:
          return GenSymbol::kpow(a, 0, rng() % 2 ? 1 : -1);
        case 1:
          return GenSymbol::kbinom(a, 0, static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 3));
        default: {
          int b = 1 + static_cast<int>(rng() % static_cast<unsigned>(N));
          while (b == a) b = 1 + static_cast<int>(rng() % static_cast<unsigned>(N));
          return E(a, b, sign_between(sp, a, b) < 0 ? 1 : 1 + static_cast<int>(rng() % 2));
        }
      }
    };
    Word w;
    for (int i = static_cast<int>(rng() % 4); i > 0; --i) w.push_back(letter());
    int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(sp.m));
    int b = sp.m + 1 + static_cast<int>(rng() % static_cast<unsigned>(sp.n));
    if (rng() % 2) std::swap(a, b);
    w.push_back(E(a, b, 1));
    w.push_back(E(a, b, 1));
    for (int i = static_cast<int>(rng() % 3); i > 0; --i) w.push_back(letter());
    std::vector<int> la;
    for (int i = 0; i < N; ++i) la.push_back(static_cast<int>(rng() % 5));
    fz.push_back({sp, std::move(w), Weight(sp, la)});
  }
  run_indexed(rep, fz.size(), [&](std::size_t k) -> std::string {
    const PbwEngine eng(fz[k].sp);
    if (!eng.act_on_hw(UElement(fz[k].w), fz[k].la).is_zero())
      return "word " + UElement(fz[k].w).to_string() + " on " + fz[k].la.to_string();
    return {};
  });
  rep.seconds = tm.seconds();
  return rep;
}

}  // namespace qmull
