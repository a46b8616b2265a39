#include "qmull/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "qmull/mullclass.hpp"
#include "qmull/pbw.hpp"
#include "qmull/serganova.hpp"
#include "qmull/symhecke.hpp"
#include "qmull/verify.hpp"
#include "qmull/word_parser.hpp"

namespace qmull::cli {

namespace {

// ---- argument access

class Args {
 public:
  explicit Args(const Json& j) : j_(j) {
    if (!j_.is_object()) throw UsageError("args must be a JSON object");
  }

  bool has(const std::string& k) const { return j_.contains(k) && !j_.at(k).is_null(); }

  std::string str(const std::string& k) const {
    const Json& v = get(k);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw UsageError("--" + k + ": expected a string");
  }

  int integer(const std::string& k) const {
    const Json& v = get(k);
    if (v.is_number_integer()) return checked(k, v.get<long long>());
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      std::size_t pos = 0;
      long long x = 0;
      try {
        x = std::stoll(s, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != s.size()) throw UsageError("--" + k + ": expected an integer, got '" + s + "'");
      return checked(k, x);
    }
    throw UsageError("--" + k + ": expected an integer");
  }
  int integer(const std::string& k, int dflt) const { return has(k) ? integer(k) : dflt; }

  std::uint64_t seed(const std::string& k, std::uint64_t dflt) const {
    if (!has(k)) return dflt;
    const Json& v = get(k);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    const std::string s = str(k);
    std::size_t pos = 0;
    std::uint64_t x = 0;
    try {
      x = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size() || s[0] == '-') throw UsageError("--" + k + ": expected a 64-bit seed");
    return x;
  }

  bool flag(const std::string& k) const {
    if (!has(k)) return false;
    const Json& v = get(k);
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_string() && (v == "true" || v == "1")) return true;
    if (v.is_string() && (v == "false" || v == "0")) return false;
    throw UsageError("--" + k + ": expected a boolean");
  }

  std::vector<int> ints(const std::string& k) const {
    const Json& v = get(k);
    if (v.is_array()) {
      std::vector<int> out;
      for (const auto& x : v) {
        if (!x.is_number_integer()) throw UsageError("--" + k + ": expected integers");
        out.push_back(checked(k, x.get<long long>()));
      }
      return out;
    }
    return wrap(k, [&] { return parse_int_list(str(k)); });
  }

  Partition partition(const std::string& k) const {
    return wrap(k, [&] { return Partition(ints(k)); });
  }
  Weight weight(const std::string& k) const {
    return wrap(k, [&] { return Weight::parse(str(k)); });
  }
  Order order(const std::string& k) const {
    const Json& v = get(k);
    if (v.is_number_integer()) return wrap(k, [&] { return Order::finite(integer(k)); });
    return wrap(k, [&] { return Order::parse(str(k)); });
  }

  // --lprime wins; otherwise l' = l for odd l and 2l for even l
  CycloContext context() const {
    const int ch = integer("char", 0);
    if (has("lprime")) return wrap("lprime", [&] { return CycloContext(order("lprime"), ch); });
    if (has("l")) {
      const Order l = order("l");
      if (l.is_infinite()) return CycloContext(l, ch);
      if (l.value() < 2) throw UsageError("--l: expected l >= 2");
      return wrap("l", [&] { return CycloContext(Order::finite(l.value() % 2 ? l.value() : 2 * l.value()), ch); });
    }
    throw UsageError("one of --l or --lprime is required");
  }

 private:
  const Json& j_;

  const Json& get(const std::string& k) const {
    if (!has(k)) throw UsageError("missing --" + k);
    return j_.at(k);
  }

  static int checked(const std::string& k, long long x) {
    if (x < -1000000000LL || x > 1000000000LL) throw UsageError("--" + k + ": integer out of range");
    return static_cast<int>(x);
  }

  template <class F>
  static auto wrap(const std::string& k, F f) -> decltype(f()) {
    try {
      return f();
    } catch (const UsageError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError("--" + k + ": " + e.what());
    }
  }
};

Json ints_json(const std::vector<int>& v) { return Json(v); }

std::string weight_text(const Weight& w) { return w.to_string(); }

// ---- hecke expressions: sums and products of T1, T[2,1,3], integers, v^k, parentheses

class HeckeReader {
 public:
  HeckeReader(const std::string& s, int r) : s_(s), r_(r) {}

  HeckeElt parse() {
    HeckeElt x = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  const std::string& s_;
  int r_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("--expr: column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) fail("number too large");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  HeckeElt expr() {
    HeckeElt x = term();
    for (;;) {
      if (eat('+'))
        x += term();
      else if (eat('-'))
        x -= term();
      else
        return x;
    }
  }
  HeckeElt term() {
    HeckeElt x = unary();
    while (eat('*')) x = hecke_mul(x, unary());
    return x;
  }
  HeckeElt unary() {
    if (eat('-')) return LaurentPoly(-1) * unary();
    return atom();
  }
  HeckeElt atom() {
    skip();
    if (eat('(')) {
      HeckeElt x = expr();
      if (!eat(')')) fail("expected ')'");
      return x;
    }
    if (eat('T')) {
      if (eat('[')) {
        std::vector<int> w{number()};
        while (eat(',')) w.push_back(number());
        if (!eat(']')) fail("expected ']'");
        if (static_cast<int>(w.size()) != r_) fail("permutation must have " + std::to_string(r_) + " entries");
        try {
          return HeckeElt::T(Perm(w));
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      }
      const int i = number();
      if (i < 1 || i >= r_) fail("T" + std::to_string(i) + " needs 1 <= i < r");
      return HeckeElt::Ti(i, r_);
    }
    if (eat('v') || eat('q')) {
      int e = 1;
      if (eat('^')) {
        const bool neg = eat('-');
        e = number() * (neg ? -1 : 1);
      }
      return LaurentPoly::v(e) * HeckeElt::one(r_);
    }
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      return LaurentPoly(number()) * HeckeElt::one(r_);
    fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end of expression");
  }
};

Json hecke_json(const HeckeElt& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back({{"w", ints_json(w.one_line())}, {"coeff", c.to_string()}});
  return {{"result", x.to_string()}, {"terms", terms}};
}

// ---- commands

Json cmd_qbinom(const Args& a) {
  const int s = a.integer("s"), t = a.integer("t");
  Json out;
  if (a.has("lprime") || a.has("l")) {
    const CycloContext ctx = a.context();
    out["zero"] = gauss_is_zero_at_q(s, t, ctx);
    out["lucas_nonzero"] = lucas_nonzero(s, t, ctx);
    out["context"] = ctx.to_string();
  }
  if (a.integer("char", 0) == 0) out["value"] = gauss_binom(s, t).to_string();
  return out;
}

Json cmd_jl(const Args& a) {
  const JlTrace tr = jl(a.partition("partition"), a.order("l"));
  return {{"x", ints_json(tr.x)}, {"j", tr.j}};
}

Json cmd_classify(const Args& a) {
  const int m = a.integer("m"), n = a.integer("n"), r = a.integer("r");
  if (m < 0 || n < 0 || r < 0) throw UsageError("--m, --n and --r must be nonnegative");
  const Order l = a.order("l");
  const auto members = enumerate_classification(m, n, r, l);
  Json out{{"count", members.size()}};
  if (a.flag("count")) return out;
  if (a.flag("witnesses")) {
    const CycloContext ctx = a.context();
    Json ws = Json::array();
    for (const auto& la : enumerate_dominant(m, n, r)) {
      if (is_polynomial_hw(la, l)) continue;
      const auto w = nonpoly_witness(la, ctx);
      ws.push_back({{"weight", weight_text(la)},
                    {"indices", ints_json(w.indices)},
                    {"witness", weight_text(w.witness)},
                    {"product", w.product.to_string()}});
    }
    out["witnesses"] = ws;
    return out;
  }
  Json list = Json::array();
  for (const auto& la : members) list.push_back(weight_text(la));
  out["weights"] = list;
  return out;
}

Json cmd_mull(const Args& a) {
  const Partition p = a.partition("partition");
  const Order l = a.order("l");
  const std::string method = a.has("method") ? a.str("method") : "both";
  if (method == "serganova") return {{"M", ints_json(mull_via_serganova(p, l).parts())}};
  if (method == "symbol") return {{"M", ints_json(mullineux_symbol(p, l).parts())}};
  if (method != "both") throw UsageError("--method must be serganova, symbol or both");
  const Partition x = mull_via_serganova(p, l), y = mullineux_symbol(p, l);
  Json out{{"M", ints_json(x.parts())}, {"agree", x == y}};
  if (x != y) out["M_symbol"] = ints_json(y.parts());
  return out;
}

Json cmd_serganova(const Args& a) {
  const auto tr = serganova_tilde(a.weight("weight"), a.order("l"));
  Json out{{"result", weight_text(tr.result)}};
  if (a.flag("trace")) {
    Json steps = Json::array();
    for (const auto& st : tr.steps)
      steps.push_back({{"k", st.k},
                       {"beta", {st.beta.i, st.beta.j}},
                       {"pairing", st.pairing},
                       {"applied", st.applied},
                       {"after", weight_text(st.after)}});
    out["steps"] = steps;
  }
  return out;
}

Json cmd_sigma(const Args& a) { return {{"sigma", weight_text(sigma_weight(a.weight("weight"), a.order("l")))}}; }

Json cmd_cosets(const Args& a) {
  std::vector<Perm> ds;
  if (a.flag("super"))
    ds = super_double_cosets(a.weight("lambda"), a.weight("mu"));
  else
    ds = min_double_cosets(a.ints("lambda"), a.ints("mu"));
  Json list = Json::array();
  for (const auto& d : ds) list.push_back(ints_json(d.one_line()));
  return {{"count", ds.size()}, {"cosets", list}};
}

Json cmd_iota(const Args& a) {
  const std::vector<int> d = a.ints("d");
  const SuperMatrix A = iota(a.weight("lambda"), Perm(d), a.weight("mu"));
  return {{"matrix", A.to_string()}, {"ro", ints_json(A.ro())}, {"co", ints_json(A.co())}};
}

Json cmd_matrices(const Args& a) {
  const int m = a.integer("m"), n = a.integer("n"), r = a.integer("r");
  if (m < 0 || n < 0 || r < 0) throw UsageError("--m, --n and --r must be nonnegative");
  const auto all = enumerate_M(m, n, r);
  Json out{{"count", all.size()}};
  if (a.flag("count")) return out;
  Json list = Json::array();
  for (const auto& A : all) list.push_back(A.to_string());
  out["matrices"] = list;
  return out;
}

Json cmd_daggermat(const Args& a) {
  const Split sp{a.integer("m"), a.integer("n")};
  if (sp.m < 0 || sp.n < 0) throw UsageError("--m and --n must be nonnegative");
  const SuperMatrix A = SuperMatrix::parse(a.str("matrix"), sp);
  const SuperMatrix D = matrix_dagger(A);
  return {{"dagger", D.to_string()}, {"ro", ints_json(D.ro())}, {"co", ints_json(D.co())}};
}

Json cmd_hecke(const Args& a) {
  const int r = a.integer("r");
  if (r < 1 || r > 8) throw UsageError("--r must be in 1..8");
  HeckeElt x = HeckeReader(a.str("expr"), r).parse();
  if (a.flag("sharp") && a.flag("dagger")) throw UsageError("--sharp and --dagger are exclusive");
  if (a.flag("sharp")) x = sharp(x);
  if (a.flag("dagger")) x = dagger_hecke(x);
  return hecke_json(x);
}

Json cmd_pbw(const Args& a) {
  const Split sp{a.integer("m"), a.integer("n")};
  if (sp.m < 0 || sp.n < 0 || sp.size() < 1) throw UsageError("--m and --n must be nonnegative with m+n >= 1");
  const Word w = parse_word(a.has("word") ? a.str("word") : "", sp);
  PbwEngine eng(sp);
  if (a.has("steps")) eng.set_step_limit(std::max(1, a.integer("steps")));
  if (!a.has("lambda")) {
    Json terms = Json::array();
    const UElement nf = eng.normalize(UElement(w));
    for (const auto& [word, c] : nf.terms())
      terms.push_back({{"word", format_word(word)}, {"coeff", c.to_string()}});
    return {{"normal_form", terms}};
  }
  const Weight la = a.weight("lambda");
  if (!(la.split() == sp)) throw UsageError("--lambda does not match --m/--n");
  const HWVector v = eng.act_on_hw(UElement(w), la);
  const bool at_q = a.flag("at-q");
  std::optional<CycloContext> ctx;
  if (at_q) ctx = a.context();
  Json terms = Json::array();
  bool all_zero_at_q = true;
  for (const auto& [key, c] : v.terms) {
    Json t{{"vector", format_word(eng.lowering_word(key))},
           {"weight", weight_text(eng.key_weight(la, key))},
           {"coeff", c.to_string()}};
    if (at_q) {
      const CycloElt e = eval_at_q(c, *ctx);
      t["coeff_at_q"] = e.to_string();
      all_zero_at_q = all_zero_at_q && e.is_zero();
    }
    terms.push_back(std::move(t));
  }
  Json out{{"terms", terms}, {"zero", v.is_zero()}};
  if (at_q) out["zero_at_q"] = all_zero_at_q;
  return out;
}

struct VerifyEntry {
  int criterion;
  std::function<CheckReport(const SweepOptions&, bool)> run;  // bool: samples given
};

const std::map<std::string, VerifyEntry>& verify_table() {
  static const std::map<std::string, VerifyEntry> t = {
      {"jl-infinity", {1, [](const SweepOptions&, bool) { return check_jl_infinity(); }}},
      {"mull-lemma", {2, [](const SweepOptions&, bool) { return check_mull_lemma(); }}},
      {"lucas", {3, [](const SweepOptions&, bool) { return check_lucas(); }}},
      {"mullineux", {4, [](const SweepOptions&, bool) { return check_mullineux(); }}},
      {"serganova", {5, [](const SweepOptions&, bool) { return check_serganova_shape(); }}},
      {"involution", {6, [](const SweepOptions&, bool) { return check_sigma(); }}},
      {"comp", {7, [](const SweepOptions& o, bool) { return check_comp(o); }}},
      {"non",
       {8,
        [](SweepOptions o, bool given) {
          if (!given) o.samples = 50;
          return check_nonpoly(o);
        }}},
      {"lowe2", {9, [](const SweepOptions&, bool) { return check_lowe2(); }}},
      {"index", {10, [](const SweepOptions&, bool) { return check_index_combinatorics(); }}},
      {"hecke",
       {11,
        [](SweepOptions o, bool given) {
          if (!given) o.samples = 500;
          return check_hecke(o);
        }}},
      {"nilpotency", {12, [](const SweepOptions& o, bool) { return check_odd_nilpotency(o); }}},
  };
  return t;
}

Json report_json(const CheckReport& r, int criterion, bool timing) {
  Json j{{"check", r.name},     {"criterion", criterion},      {"passed", r.passed},
         {"checks", r.checks},  {"failures", r.failures}};
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

Outcome cmd_verify(const Args& a) {
  const std::string which = a.str("check");
  SweepOptions opt;
  opt.seed = a.seed("seed", 1);
  const bool given = a.has("samples");
  opt.samples = a.integer("samples", opt.samples);
  if (opt.samples < 1) throw UsageError("--samples must be positive");
  const bool timing = a.flag("timing");
  const auto& table = verify_table();
  std::vector<std::pair<std::string, const VerifyEntry*>> todo;
  if (which == "all") {
    for (const auto& [k, v] : table) todo.emplace_back(k, &v);
    std::sort(todo.begin(), todo.end(),
              [](const auto& x, const auto& y) { return x.second->criterion < y.second->criterion; });
  } else {
    auto it = table.find(which);
    if (it == table.end()) {
      std::string names = "all";
      for (const auto& [k, v] : table) names += ", " + k;
      throw UsageError("unknown check '" + which + "'; expected one of " + names);
    }
    todo.emplace_back(it->first, &it->second);
  }
  Outcome o;
  Json reports = Json::array();
  bool ok = true;
  for (const auto& [name, e] : todo) {
    const CheckReport r = e->run(opt, given);
    ok = ok && r.passed;
    reports.push_back(report_json(r, e->criterion, timing));
  }
  o.result = todo.size() == 1 ? reports[0] : Json{{"passed", ok}, {"reports", reports}};
  o.exit_code = ok ? 0 : 1;
  return o;
}

// ---- command table

const OptionSpec kL{"l", "l (integer >= 2 or inf)"};
const OptionSpec kLReq{"l", "l (integer >= 2 or inf)", false, true};
const OptionSpec kLprime{"lprime", "order l' of q (integer >= 3 or inf)"};
const OptionSpec kChar{"char", "field characteristic (0 or an odd prime)"};

std::vector<CommandSpec> build_commands() {
  return {
      {"qbinom",
       "Gaussian binomial [s choose t], and whether it vanishes at q",
       {{"s", "top", false, true}, {"t", "bottom", false, true}, kLprime, kL, kChar}},
      {"jl", "the 0/1 sequence x and j_l of a partition", {{"partition", "e.g. 3,3", false, true}, kLReq}},
      {"classify",
       "dominant polynomial weights of degree r that are polynomial for l",
       {{"m", "even rank", false, true},
        {"n", "odd rank", false, true},
        {"r", "degree", false, true},
        kLReq,
        kLprime,
        {"list", "list members (default)", true},
        {"count", "only the count", true},
        {"witnesses", "witness data for every non-member", true}}},
      {"mull",
       "Mullineux image of an l-restricted partition",
       {{"partition", "e.g. 2,1", false, true}, kLReq, {"method", "serganova, symbol or both (default)"}}},
      {"serganova",
       "odd reflection sequence applied to a weight",
       {{"weight", "e.g. 2,1|0,0", false, true}, kLReq, {"trace", "print every step", true}}},
      {"sigma", "sigma twist of a weight with m = n", {{"weight", "e.g. 2,1|0,0", false, true}, kLReq}},
      {"cosets",
       "minimal double coset representatives",
       {{"lambda", "composition, or a|b with --super", false, true},
        {"mu", "composition, or a|b with --super", false, true},
        {"super", "restrict to the super double cosets", true}}},
      {"iota",
       "matrix of a double coset triple",
       {{"lambda", "a|b", false, true}, {"mu", "a|b", false, true}, {"d", "one-line permutation", false, true}}},
      {"matrices",
       "matrices in M(m|n, r)",
       {{"m", "even rank", false, true},
        {"n", "odd rank", false, true},
        {"r", "entry sum", false, true},
        {"count", "only the count", true}}},
      {"daggermat",
       "dagger of a matrix",
       {{"matrix", "rows ';', entries ','", false, true},
        {"m", "even rank", false, true},
        {"n", "odd rank", false, true}}},
      {"hecke",
       "evaluate an expression in the Hecke algebra H_r",
       {{"r", "degree", false, true},
        {"expr", "e.g. T1*T1 - (v^2-1)*T1", false, true},
        {"sharp", "apply the sharp involution", true},
        {"dagger", "apply the dagger involution", true}}},
      {"pbw",
       "apply a word to m_lambda, or normalize it when --lambda is absent",
       {{"m", "even rank", false, true},
        {"n", "odd rank", false, true},
        {"lambda", "a|b"},
        {"word", "e.g. \"E(1,2,1) E(2,1,1)\""},
        {"at-q", "also evaluate coefficients at q", true},
        kLprime,
        kL,
        {"steps", "rewriting step limit"}}},
      {"verify",
       "run an acceptance sweep: all, jl-infinity, mull-lemma, lucas, mullineux, serganova, involution, comp, non, "
       "lowe2, index, hecke, nilpotency",
       {{"samples", "random samples where the sweep is sampled"},
        {"seed", "64-bit seed"},
        {"timing", "report seconds", true}},
       "check"},
  };
}

}  // namespace

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> c = build_commands();
  return c;
}

Outcome run_command(const std::string& cmd, const Json& args) {
  const auto& cs = commands();
  auto it = std::find_if(cs.begin(), cs.end(), [&](const CommandSpec& c) { return c.name == cmd; });
  if (it == cs.end()) throw UsageError("unknown command '" + cmd + "'");
  const Args a(args);
  std::set<std::string> known;
  for (const auto& o : it->options) known.insert(o.name);
  if (!it->positional.empty()) known.insert(it->positional);
  for (const auto& [k, v] : args.items())
    if (!known.count(k)) throw UsageError(cmd + ": unknown argument '" + k + "'");
  for (const auto& o : it->options)
    if (o.required && !a.has(o.name)) throw UsageError(cmd + ": missing --" + o.name);
  if (!it->positional.empty() && !a.has(it->positional)) throw UsageError(cmd + ": missing " + it->positional);

  static const std::map<std::string, Json (*)(const Args&)> plain = {
      {"qbinom", cmd_qbinom}, {"jl", cmd_jl},       {"classify", cmd_classify}, {"mull", cmd_mull},
      {"serganova", cmd_serganova}, {"sigma", cmd_sigma}, {"cosets", cmd_cosets}, {"iota", cmd_iota},
      {"matrices", cmd_matrices},   {"daggermat", cmd_daggermat}, {"hecke", cmd_hecke}, {"pbw", cmd_pbw},
  };
  try {
    if (cmd == "verify") return cmd_verify(a);
    return Outcome{plain.at(cmd)(a), 0};
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

int run_batch(std::istream& in, std::ostream& out) {
  int worst = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    Json resp{{"schema", kSchemaVersion}};
    try {
      const Json req = Json::parse(line);
      if (!req.is_object() || !req.contains("cmd") || !req["cmd"].is_string())
        throw UsageError("request needs a string field \"cmd\"");
      const Json args = req.contains("args") ? req["args"] : Json::object();
      const Outcome o = run_command(req["cmd"].get<std::string>(), args);
      resp["ok"] = true;
      resp["result"] = o.result;
      worst = std::max(worst, o.exit_code);
    } catch (const Json::exception& e) {
      resp["ok"] = false;
      resp["error"] = std::string("bad JSON: ") + e.what();
      worst = 2;
    } catch (const UsageError& e) {
      resp["ok"] = false;
      resp["error"] = e.what();
      worst = 2;
    }
    out << resp.dump() << "\n" << std::flush;
  }
  return worst;
}

namespace {

void print_text(const Json& j, std::ostream& out, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_object()))
        print_text(v, out, prefix + k + ".");
      else
        out << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], out, prefix + std::to_string(i) + ".");
  } else {
    out << prefix << j.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Mullineux conjecture toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "json";
  app.add_option("--output", output, "json (default) or text")->check(CLI::IsMember({"json", "text"}));
  bool version = false;
  app.add_flag("--schema-version", version, "print the JSON schema version and exit");

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    subs[c.name] = sub;
    for (const auto& o : c.options) {
      if (o.flag) {
        sub->add_flag("--" + o.name, flags[c.name][o.name], o.help);
      } else {
        auto* opt = sub->add_option("--" + o.name, values[c.name][o.name], o.help);
        if (o.required) opt->required();
      }
    }
    if (!c.positional.empty()) sub->add_option(c.positional, values[c.name][c.positional], "which check")->required();
  }
  app.add_subcommand("batch", "read JSONL requests from stdin, write JSONL responses");

  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--schema-version") {
      out << Json{{"schema", kSchemaVersion}}.dump() << "\n";
      return 0;
    }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (app.got_subcommand("batch")) return run_batch(in, out);
  for (const auto& c : commands()) {
    CLI::App* sub = subs[c.name];
    if (!sub->parsed()) continue;
    Json args = Json::object();
    for (const auto& o : c.options) {
      if (sub->count("--" + o.name) == 0) continue;
      if (o.flag)
        args[o.name] = flags[c.name][o.name];
      else
        args[o.name] = values[c.name][o.name];
    }
    if (!c.positional.empty()) args[c.positional] = values[c.name][c.positional];
    try {
      const Outcome o = run_command(c.name, args);
      if (output == "text")
        print_text(o.result, out);
      else
        out << o.result.dump() << "\n";
      if (o.exit_code == 1) {
        const Json& r = o.result;
        const Json* fail = nullptr;
        if (r.contains("first_failure")) fail = &r["first_failure"];
        if (r.contains("reports"))
          for (const auto& x : r["reports"])
            if (!fail && x.contains("first_failure")) fail = &x["first_failure"];
        err << "verification failed" << (fail ? ": " + fail->get<std::string>() : std::string()) << "\n";
      }
      return o.exit_code;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return 2;
}

}  // namespace qmull::cli
