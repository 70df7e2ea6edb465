// crosspart: command line front end over the library.  Subcommands:
//   stirling, threshold, enumerate, tau, construct, sizes, audit, search,
//   verify, compare-regimes
// Exit codes: 0 success, 1 a verification failed, 2 budget refusal,
// 3 invalid input.  Every report starts with a header echoing the resolved
// configuration, so a run is reproducible from its own output.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crosspart/audit.hpp"
#include "crosspart/constructions.hpp"
#include "crosspart/covers.hpp"
#include "crosspart/dual.hpp"
#include "crosspart/enumerate.hpp"
#include "crosspart/family.hpp"
#include "crosspart/partition.hpp"
#include "crosspart/rng.hpp"
#include "crosspart/stirling.hpp"
#include "crosspart/tuples.hpp"
#include "crosspart/verify.hpp"
#include "crosspart/version.hpp"

namespace {

using crosspart::BigCount;
using crosspart::Family;
using crosspart::Partition;
using json = nlohmann::ordered_json;

// ---- output plumbing ------------------------------------------------------

struct IoOpts {
  std::string format = "text";  // text | json | csv
  std::string out;              // empty -> stdout
};

void add_io_opts(CLI::App* sub, IoOpts& io) {
  sub->add_option("--format", io.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", io.out, "Write the report to this file instead of stdout");
}

class Emitter {
 public:
  void open(const IoOpts& io) {
    format_ = io.format;
    if (!io.out.empty()) {
      file_.open(io.out);
      if (!file_) throw std::invalid_argument("cannot open output file: " + io.out);
      os_ = &file_;
    }
  }

  const std::string& format() const { return format_; }
  std::ostream& os() { return *os_; }

  // Header first line: full resolved config, machine-readable in every format.
  void header(const std::string& command, const json& config) {
    json h;
    h["tool"] = "crosspart";
    h["version"] = crosspart::kVersion;
    h["command"] = command;
    h["config"] = config;
    if (format_ == "json")
      *os_ << h.dump() << "\n";
    else
      *os_ << "# " << h.dump() << "\n";
  }

  void obj(const json& j) {
    if (format_ == "json") *os_ << j.dump() << "\n";
  }

  void text(const std::string& line) {
    if (format_ != "json") *os_ << line << "\n";
  }

  // One record, all formats: json object line / csv row / readable line.
  void record(const json& j, const std::vector<std::string>& csv_row,
              const std::string& text_line) {
    if (format_ == "json") {
      *os_ << j.dump() << "\n";
    } else if (format_ == "csv") {
      *os_ << csv_line(csv_row) << "\n";
    } else {
      *os_ << text_line << "\n";
    }
  }

  static std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); i++) {
      if (i) out += ',';
      out += csv_escape(cells[i]);
    }
    return out;
  }

 private:
  static std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += "\"\"";
      else out += c;
    }
    out += '"';
    return out;
  }

  std::string format_ = "text";
  std::ostream* os_ = &std::cout;
  std::ofstream file_;
};

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); i++) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

// ---- stirling -------------------------------------------------------------

struct StirlingArgs {
  int n = 0, k = 0;
  bool closed_form = false;
  IoOpts io;
};

int run_stirling(const StirlingArgs& a) {
  Emitter em;
  em.open(a.io);
  BigCount v = a.closed_form ? crosspart::stirling_closed_form(a.n, a.k)
                             : crosspart::stirling(a.n, a.k);
  em.header("stirling", {{"n", a.n},
                         {"k", a.k},
                         {"closed_form", a.closed_form},
                         {"format", a.io.format}});
  if (a.io.format == "csv") em.text("n,k,value");
  em.record({{"n", a.n}, {"k", a.k}, {"value", v.str()}},
            {std::to_string(a.n), std::to_string(a.k), v.str()}, v.str());
  return 0;
}

// ---- threshold ------------------------------------------------------------

struct ThresholdArgs {
  int k = 0, t = 0;
  bool doubled = false;
  IoOpts io;
};

int run_threshold(const ThresholdArgs& a) {
  Emitter em;
  em.open(a.io);
  long min_n = a.doubled ? crosspart::min_n_for_2L(a.k, a.t) : crosspart::min_n_for_L(a.k, a.t);
  // The integer test that decides n >= L (or 2L) without floating point.
  std::string test = a.doubled ? crosspart::threshold_2L_inequality(a.k, a.t)
                               : crosspart::threshold_L_inequality(a.k, a.t);
  em.header("threshold", {{"k", a.k},
                          {"t", a.t},
                          {"double", a.doubled},
                          {"format", a.io.format}});
  if (a.io.format == "csv") em.text("k,t,double,min_n,test");
  em.record({{"k", a.k},
             {"t", a.t},
             {"double", a.doubled},
             {"min_n", min_n},
             {"test", test}},
            {std::to_string(a.k), std::to_string(a.t), a.doubled ? "1" : "0",
             std::to_string(min_n), test},
            "min n = " + std::to_string(min_n) + "   (exact test: " + test + ")");
  return 0;
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateArgs {
  int n = 0, k = 0;
  std::uint64_t budget = 0;
  IoOpts io;
};

int run_enumerate(const EnumerateArgs& a) {
  Emitter em;
  em.open(a.io);
  std::uint64_t budget = crosspart::resolved_budget(a.budget);
  em.header("enumerate",
            {{"n", a.n}, {"k", a.k}, {"budget", budget}, {"format", a.io.format}});
  try {
    crosspart::check_enumeration_budget(a.n, a.k, budget, "enumerate");
  } catch (const crosspart::BudgetError& e) {
    em.record({{"refused", true},
               {"exact_count", e.exact_count().str()},
               {"budget", e.budget()},
               {"reason", e.what()}},
              {"refused", e.exact_count().str()},
              std::string("refused: ") + e.what());
    return 2;
  }
  if (a.io.format == "csv") em.text("partition");
  std::uint64_t count = 0;
  crosspart::for_each_partition(a.n, a.k, [&](const std::vector<crosspart::Mask>& blocks) {
    Partition p = Partition::from_blocks(blocks);
    em.record({{"partition", p.str()}}, {p.str()}, p.str());
    count++;
    return true;
  });
  em.obj(json{{"count", count}});
  if (a.io.format == "text") em.text("# count = " + std::to_string(count));
  return 0;
}

// ---- tau ------------------------------------------------------------------

struct TauArgs {
  std::string family_path;
  int t = 1;
  bool witnesses = false;
  std::uint64_t budget = 0;
  IoOpts io;
};

int run_tau(const TauArgs& a) {
  Emitter em;
  em.open(a.io);
  Family fam = Family::load_file(a.family_path);
  em.header("tau", {{"family", a.family_path},
                    {"n", fam.ground_n()},
                    {"k", fam.block_count_k()},
                    {"members", fam.size()},
                    {"t", a.t},
                    {"witnesses", a.witnesses},
                    {"format", a.io.format}});
  crosspart::CoverResult res = crosspart::tau_t(fam, a.t, a.witnesses, a.budget);
  json j = {{"tau", res.tau}};
  if (a.witnesses) {
    json w = json::array();
    for (const Partition& p : res.witnesses) w.push_back(p.str());
    j["witnesses"] = w;
  }
  if (a.io.format == "csv") em.text("tau");
  em.record(j, {std::to_string(res.tau)}, "tau = " + std::to_string(res.tau));
  if (a.witnesses && a.io.format != "json")
    for (const Partition& p : res.witnesses) em.text(p.str());
  return 0;
}

// ---- construct ------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  int n = 0, k = 0, l = 0, t = 1;
  std::string anchors;
  std::uint64_t budget = 0;
  IoOpts io;
};

std::optional<BigCount> construct_closed_form(crosspart::ConstructionKind kind, int n, int k,
                                              int l, int t) {
  using crosspart::ConstructionKind;
  switch (kind) {
    case ConstructionKind::A: return crosspart::size_A(n, k, l, t);
    case ConstructionKind::B: return crosspart::size_B(n, k, t);
    case ConstructionKind::C: return crosspart::size_C(n, k, t);
    case ConstructionKind::D: return crosspart::size_D(n, k, t);
    case ConstructionKind::HM1: return crosspart::hm_bound(n, k, t, 1);
    case ConstructionKind::HM2: return crosspart::hm_bound(n, k, t, 2);
    default: return std::nullopt;  // anchor-dependent families have no single closed form here
  }
}

int run_construct(const ConstructArgs& a) {
  Emitter em;
  em.open(a.io);
  auto kind = crosspart::kind_from_name(a.kind);
  if (!kind) throw std::invalid_argument("unknown construction kind: " + a.kind);
  crosspart::ConstructionSpec spec =
      crosspart::ConstructionSpec::make(*kind, a.n, a.k, a.l, a.t);
  if (!a.anchors.empty()) spec.anchor = Partition::parse(a.anchors);
  Family fam = crosspart::build_family(spec, a.budget);
  std::optional<BigCount> closed;
  if (a.anchors.empty()) closed = construct_closed_form(*kind, a.n, a.k, a.l, a.t);
  em.header("construct", {{"kind", a.kind},
                          {"n", a.n},
                          {"k", a.k},
                          {"l", a.l},
                          {"t", a.t},
                          {"anchors", a.anchors},
                          {"budget", crosspart::resolved_budget(a.budget)},
                          {"format", a.io.format}});
  json j = {{"kind", a.kind}, {"size", std::to_string(fam.size())}};
  if (closed) j["closed_form"] = closed->str();
  std::string text_line = "size = " + std::to_string(fam.size());
  if (closed) text_line += "   closed form = " + closed->str();
  if (a.io.format == "csv") em.text("kind,size,closed_form");
  em.record(j,
            {a.kind, std::to_string(fam.size()), closed ? closed->str() : ""},
            text_line);
  if (closed && BigCount(static_cast<unsigned long>(fam.size())) != *closed) {
    em.text("MISMATCH: enumerated size differs from the closed form");
    return 1;
  }
  if (a.io.format == "json") {
    for (std::size_t i = 0; i < fam.members().size(); i++)
      em.obj(json{{"partition", fam.members()[i].str()}});
  } else {
    em.text("n=" + std::to_string(fam.ground_n()) + " k=" + std::to_string(fam.block_count_k()));
    for (const Partition& p : fam.members()) em.text(p.str());
  }
  return 0;
}

// ---- sizes ----------------------------------------------------------------

struct SizesArgs {
  int n = 0, k = 0, l = 0, t = 1;
  IoOpts io;
};

int run_sizes(const SizesArgs& a) {
  Emitter em;
  em.open(a.io);
  em.header("sizes",
            {{"n", a.n}, {"k", a.k}, {"l", a.l}, {"t", a.t}, {"format", a.io.format}});
  if (a.io.format == "csv") em.text("quantity,value");
  auto row = [&](const std::string& name, const BigCount& v) {
    em.record({{"quantity", name}, {"value", v.str()}}, {name, v.str()},
              name + " = " + v.str());
  };
  row("r1", crosspart::size_r1(a.n, a.k, a.l, a.t));
  row("r2", crosspart::size_r2(a.n, a.k, a.l, a.t));
  row("r", crosspart::size_r(a.n, a.k, a.l, a.t));
  row("h_k", crosspart::size_h(a.t + 1, a.k, a.t, a.n));
  row("h_l", crosspart::size_h(a.t + 1, a.l, a.t, a.n));
  row("phi", crosspart::size_phi(a.t + 1, 2, {a.k, a.l}, a.t, a.n));
  return 0;
}

// ---- audit ----------------------------------------------------------------

struct AuditArgs {
  std::string lemma = "all";
  int t_max = 3, k_max = 8, n_extra = 10;
  std::uint64_t enum_budget = 12'000'000;
  IoOpts io;
};

int run_audit(const AuditArgs& a) {
  Emitter em;
  em.open(a.io);
  crosspart::AuditOptions opts;
  opts.t_max = a.t_max;
  opts.k_max = a.k_max;
  opts.n_extra = a.n_extra;
  opts.enum_budget = a.enum_budget;
  opts.keep_passes = (a.io.format != "text");  // machine formats carry the full grid
  em.header("audit", {{"lemma", a.lemma},
                      {"t_max", opts.t_max},
                      {"k_max", opts.k_max},
                      {"n_extra", opts.n_extra},
                      {"enum_budget", opts.enum_budget},
                      {"format", a.io.format}});
  std::vector<crosspart::AuditReport> reports;
  if (a.lemma == "all") {
    reports = crosspart::audit_all(opts);
  } else {
    reports.push_back(crosspart::audit(crosspart::lemma_from_name(a.lemma), opts));
  }
  if (a.io.format == "csv") em.text("lemma,params,verdict,lhs,rhs");
  std::uint64_t fails = 0, hard_inconclusive = 0;
  for (const auto& rep : reports) {
    fails += rep.fail;
    if (rep.polynomial) hard_inconclusive += rep.inconclusive;
    const char* name = crosspart::lemma_name(rep.lemma);
    em.obj(json{{"lemma", name},
                {"grid", rep.grid},
                {"polynomial", rep.polynomial},
                {"pass", rep.pass},
                {"fail", rep.fail},
                {"inconclusive", rep.inconclusive},
                {"skipped_hypothesis", rep.skipped_hypothesis},
                {"skipped_budget", rep.skipped_budget}});
    if (a.io.format == "text") {
      std::ostringstream line;
      line << name << ": pass=" << rep.pass << " fail=" << rep.fail
           << " inconclusive=" << rep.inconclusive
           << " skipped(hypothesis)=" << rep.skipped_hypothesis
           << " skipped(budget)=" << rep.skipped_budget;
      em.text(line.str());
      em.text("  grid: " + rep.grid);
    }
    for (const auto& pt : rep.points) {
      const char* verdict = crosspart::verdict_label(pt.verdict);
      if (a.io.format == "text" && pt.verdict == crosspart::PointVerdict::Pass) continue;
      em.record({{"lemma", name},
                 {"params", pt.params},
                 {"verdict", verdict},
                 {"lhs", pt.lhs},
                 {"rhs", pt.rhs}},
                {name, pt.params, verdict, pt.lhs, pt.rhs},
                std::string("  [") + verdict + "] " + pt.params +
                    (pt.lhs.empty() ? "" : " lhs=" + pt.lhs + " rhs=" + pt.rhs));
    }
  }
  if (a.io.format == "text")
    em.text(fails == 0 ? "audit: no fail verdicts"
                       : "audit: " + std::to_string(fails) + " FAIL verdicts");
  return (fails == 0 && hard_inconclusive == 0) ? 0 : 1;
}

// ---- search ---------------------------------------------------------------

struct SearchArgs {
  int n = 0, k = 0, l = 0, t = 1, r = 0;
  std::vector<int> ks;
  bool nontrivial = false;
  std::string mode = "seeded";
  int gen_max = 2;
  std::uint64_t draws = 10000;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  std::string checkpoint;
  int threads = 1;
  IoOpts io;
};

void emit_witnesses(Emitter& em, const std::vector<Family>& witnesses) {
  constexpr std::size_t kMemberPrintCap = 200;
  for (std::size_t i = 0; i < witnesses.size(); i++) {
    const Family& f = witnesses[i];
    json j = {{"witness", i + 1},
              {"k", f.block_count_k()},
              {"size", f.size()}};
    bool full = f.size() <= kMemberPrintCap;
    if (full) {
      json members = json::array();
      for (const Partition& p : f.members()) members.push_back(p.str());
      j["members"] = members;
    }
    em.obj(j);
    if (em.format() != "json") {
      em.text("witness " + std::to_string(i + 1) + ": k=" + std::to_string(f.block_count_k()) +
              " size=" + std::to_string(f.size()));
      if (full)
        for (const Partition& p : f.members()) em.text("  " + p.str());
      else
        em.text("  (members omitted; family larger than " +
                std::to_string(kMemberPrintCap) + ")");
    }
  }
}

int run_pair_search(const SearchArgs& a, Emitter& em) {
  crosspart::DualContext ctx;
  ctx.n = a.n;
  ctx.k = a.k;
  ctx.l = a.l;
  ctx.t = a.t;
  ctx.budget = a.budget;
  crosspart::DualEngine eng(ctx, a.threads);
  crosspart::SearchResult res;
  if (a.mode == "exhaustive") {
    res = crosspart::exhaustive_pair_search(eng, a.nontrivial);
  } else {
    crosspart::SeededSearchOptions so;
    so.generator_size_max = a.gen_max;
    so.random_draws = a.draws;
    so.seed = a.seed;
    so.nontrivial = a.nontrivial;
    so.threads = a.threads;
    so.checkpoint_path = a.checkpoint;
    res = crosspart::seeded_search(eng, so);
  }
  em.record({{"best_product", res.best_product.str()},
             {"mode", a.mode},
             {"nontrivial", res.nontrivial_constraint},
             {"exhaustive", res.exhaustive},
             {"evaluations", res.evaluations},
             {"certificate", res.certificate}},
            {res.best_product.str(), a.mode, res.exhaustive ? "1" : "0",
             std::to_string(res.evaluations)},
            "best product = " + res.best_product.str() + "   mode = " + a.mode +
                (res.nontrivial_constraint ? " (non-trivial only)" : "") +
                (res.exhaustive ? "   EXHAUSTIVE" : "   NOT exhaustive") +
                "   evaluations = " + std::to_string(res.evaluations));
  if (em.format() == "text") em.text("certificate: " + res.certificate);
  emit_witnesses(em, res.witnesses);
  return 0;
}

int run_tuple_search(const SearchArgs& a, Emitter& em) {
  std::map<int, std::vector<Partition>> universes;
  for (int k : a.ks)
    if (!universes.count(k)) {
      crosspart::check_enumeration_budget(a.n, k, crosspart::resolved_budget(a.budget),
                                          "tuple search universe");
      std::vector<Partition> u;
      crosspart::for_each_partition(a.n, k, [&](const std::vector<crosspart::Mask>& b) {
        u.push_back(Partition::from_blocks(b));
        return true;
      });
      universes[k] = std::move(u);
    }
  BigCount best;
  std::vector<Family> best_tuple;
  bool found = false;
  std::uint64_t fixed_points = 0;
  for (std::uint64_t d = 0; d < a.draws; d++) {
    std::vector<Family> fams;
    for (std::size_t i = 0; i < a.ks.size(); i++) {
      const auto& u = universes[a.ks[i]];
      std::uint64_t idx = crosspart::uniform_below(
          crosspart::counter_rng(a.seed, 7, d * a.ks.size() + i), u.size());
      Family f(a.n, a.ks[i]);
      f.add(u[idx]);
      fams.push_back(std::move(f));
    }
    crosspart::TupleSweepResult sw =
        crosspart::tuple_fixed_point(std::move(fams), a.t, 32, a.budget);
    if (!sw.fixed_point_reached) continue;
    fixed_points++;
    bool empty_side = false;
    for (const Family& f : sw.families)
      if (f.empty()) empty_side = true;
    if (empty_side) continue;
    if (a.nontrivial) {
      std::vector<const Family*> ptrs;
      for (const Family& f : sw.families) ptrs.push_back(&f);
      if (crosspart::is_trivial_tuple(ptrs, a.t)) continue;
    }
    BigCount p(1ul);
    for (const Family& f : sw.families) p *= BigCount(static_cast<unsigned long>(f.size()));
    if (!found || p > best) {
      best = p;
      best_tuple = sw.families;
    }
    found = true;
  }
  em.record({{"best_product", found ? best.str() : "0"},
             {"mode", "seeded"},
             {"nontrivial", a.nontrivial},
             {"exhaustive", false},
             {"draws", a.draws},
             {"fixed_points", fixed_points}},
            {found ? best.str() : "0", "seeded", "0", std::to_string(a.draws)},
            "best product = " + (found ? best.str() : std::string("0")) +
                "   mode = seeded (tuple sweeps)" +
                (a.nontrivial ? " (non-trivial only)" : "") + "   NOT exhaustive   draws = " +
                std::to_string(a.draws) + "   fixed points = " + std::to_string(fixed_points));
  emit_witnesses(em, best_tuple);
  return 0;
}

int run_search(const SearchArgs& a0) {
  SearchArgs a = a0;
  if (!a.ks.empty()) {
    if (a.r != 0 && a.r != static_cast<int>(a.ks.size()))
      throw std::invalid_argument("--r disagrees with the number of --ks entries");
    if (a.ks.size() == 2 && a.k == 0 && a.l == 0) {
      a.k = a.ks[0];
      a.l = a.ks[1];
    }
  }
  bool tuple_mode = a.ks.size() >= 3;
  if (!tuple_mode && (a.k == 0 || a.l == 0))
    throw std::invalid_argument("need --k and --l (or --ks with at least two entries)");
  Emitter em;
  em.open(a.io);
  em.header("search", {{"n", a.n},
                       {"k", a.k},
                       {"l", a.l},
                       {"t", a.t},
                       {"ks", join_ints(a.ks)},
                       {"nontrivial", a.nontrivial},
                       {"mode", tuple_mode ? "seeded" : a.mode},
                       {"gen_max", a.gen_max},
                       {"draws", a.draws},
                       {"seed", a.seed},
                       {"budget", crosspart::resolved_budget(a.budget)},
                       {"checkpoint", a.checkpoint},
                       {"threads", a.threads},
                       {"format", a.io.format}});
  if (a.io.format == "csv") em.text("best_product,mode,exhaustive,evaluations");
  return tuple_mode ? run_tuple_search(a, em) : run_pair_search(a, em);
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  int n = 0, t = 1, k = 0, l = 0;
  std::vector<int> ks;
  int gen_max = 2;
  std::uint64_t draws = 2000;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  std::uint64_t universe_cap = 20000;
  int threads = 1;
  IoOpts io;
};

int run_verify(const VerifyArgs& a) {
  crosspart::VerifyParams params;
  params.n = a.n;
  params.t = a.t;
  params.ks = a.ks;
  if (params.ks.empty() && a.k != 0) {
    params.ks.push_back(a.k);
    if (a.l != 0) params.ks.push_back(a.l);
  }
  crosspart::VerifyOptions opts;
  opts.budget = a.budget;
  opts.threads = a.threads;
  opts.gen_max = a.gen_max;
  opts.random_draws = a.draws;
  opts.seed = a.seed;
  opts.structural_universe_cap = a.universe_cap;
  Emitter em;
  em.open(a.io);
  em.header("verify", {{"theorem", a.theorem},
                       {"n", params.n},
                       {"t", params.t},
                       {"ks", join_ints(params.ks)},
                       {"gen_max", opts.gen_max},
                       {"draws", opts.random_draws},
                       {"seed", opts.seed},
                       {"budget", crosspart::resolved_budget(opts.budget)},
                       {"universe_cap", opts.structural_universe_cap},
                       {"threads", opts.threads},
                       {"format", a.io.format}});
  crosspart::VerifyReport rep = crosspart::verify_scenario(a.theorem, params, opts);
  if (a.io.format == "csv") em.text("tier,status,exhaustive,note");
  if (rep.refused) {
    em.record({{"scenario", rep.scenario}, {"refused", true}, {"refusal", rep.refusal}},
              {"-", "refused", "0", rep.refusal}, "refused: " + rep.refusal);
    return 3;
  }
  for (const auto& tier : rep.tiers) {
    const char* status = crosspart::tier_status_label(tier.status);
    json j = {{"tier", tier.name},
              {"status", status},
              {"exhaustive", tier.exhaustive},
              {"notes", tier.notes}};
    em.obj(j);
    if (a.io.format != "json") {
      em.text("tier " + tier.name + ": " + status +
              (tier.exhaustive ? " (exhaustive)" : ""));
      for (const std::string& note : tier.notes) {
        if (a.io.format == "csv")
          em.text(Emitter::csv_line({tier.name, status, tier.exhaustive ? "1" : "0", note}));
        else
          em.text("  " + note);
      }
    }
  }
  if (a.io.format == "text")
    em.text(rep.ok() ? "verify: all asserted tiers passed" : "verify: FAILURE");
  return rep.ok() ? 0 : 1;
}

// ---- compare-regimes ------------------------------------------------------

struct CompareArgs {
  int n = 0, k = 0, t = 0;
  IoOpts io;
};

int run_compare(const CompareArgs& a) {
  Emitter em;
  em.open(a.io);
  em.header("compare-regimes",
            {{"n", a.n}, {"k", a.k}, {"t", a.t}, {"format", a.io.format}});
  crosspart::RegimeReport rep = crosspart::compare_regimes(a.n, a.k, a.t);
  if (a.io.format == "csv") em.text("n,k,t,in_scope,r1,r2,sign,expectation,consistent,note");
  em.record({{"n", rep.n},
             {"k", rep.k},
             {"t", rep.t},
             {"in_scope", rep.in_scope},
             {"r1", rep.r1.str()},
             {"r2", rep.r2.str()},
             {"sign", rep.sign},
             {"expectation", rep.expectation},
             {"consistent", rep.consistent},
             {"note", rep.note}},
            {std::to_string(rep.n), std::to_string(rep.k), std::to_string(rep.t),
             rep.in_scope ? "1" : "0", rep.r1.str(), rep.r2.str(), std::to_string(rep.sign),
             rep.expectation, rep.consistent ? "1" : "0", rep.note},
            "r1 = " + rep.r1.str() + "   r2 = " + rep.r2.str() + "   expectation = " +
                rep.expectation + (rep.consistent ? " (consistent)" : " (INCONSISTENT)") +
                "   " + rep.note);
  return (rep.in_scope && !rep.consistent) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics for cross-intersecting families of set partitions"};
  app.set_version_flag("--version", crosspart::kVersion);
  app.require_subcommand(1);

  StirlingArgs st;
  auto* sub_st = app.add_subcommand("stirling", "Partition count S(n,k), exact");
  sub_st->add_option("--n", st.n, "Ground set size")->required();
  sub_st->add_option("--k", st.k, "Block count")->required();
  sub_st->add_flag("--closed-form", st.closed_form,
                   "Evaluate via the alternating-sum closed form instead of the recurrence");
  add_io_opts(sub_st, st.io);

  ThresholdArgs th;
  auto* sub_th = app.add_subcommand("threshold", "Least n reaching the logarithmic threshold");
  sub_th->add_option("--k", th.k, "Block count")->required();
  sub_th->add_option("--t", th.t, "Intersection size")->required();
  sub_th->add_flag("--double", th.doubled, "Use the doubled threshold");
  add_io_opts(sub_th, th.io);

  EnumerateArgs en;
  auto* sub_en = app.add_subcommand("enumerate", "Stream all k-partitions of [n]");
  sub_en->add_option("--n", en.n, "Ground set size")->required();
  sub_en->add_option("--k", en.k, "Block count")->required();
  sub_en->add_option("--budget", en.budget, "Enumeration budget (0 = env/default)");
  add_io_opts(sub_en, en.io);

  TauArgs ta;
  auto* sub_ta = app.add_subcommand("tau", "Covering number of a family file");
  sub_ta->add_option("--family", ta.family_path, "Family file (text format)")->required();
  sub_ta->add_option("--t", ta.t, "Intersection size")->required();
  sub_ta->add_flag("--witnesses", ta.witnesses, "Also list all minimum covers");
  sub_ta->add_option("--budget", ta.budget, "Search node budget (0 = env/default)");
  add_io_opts(sub_ta, ta.io);

  ConstructArgs co;
  auto* sub_co = app.add_subcommand("construct", "Build a named extremal family");
  sub_co->add_option("--kind", co.kind, "A|B|C|D|HM1|HM2|P28i|P28ii|W")->required();
  sub_co->add_option("--n", co.n, "Ground set size")->required();
  sub_co->add_option("--k", co.k, "Block count of the family")->required();
  sub_co->add_option("--l", co.l, "Partner block count (kinds that use one)");
  sub_co->add_option("--t", co.t, "Intersection size")->required();
  sub_co->add_option("--anchors", co.anchors,
                     "Anchor partition, e.g. {1|2|3,4}; overrides the default anchor");
  sub_co->add_option("--budget", co.budget, "Enumeration budget (0 = env/default)");
  add_io_opts(sub_co, co.io);

  SizesArgs si;
  auto* sub_si = app.add_subcommand("sizes", "Closed-form extremal products for a pair");
  sub_si->add_option("--n", si.n, "Ground set size")->required();
  sub_si->add_option("--k", si.k, "First block count")->required();
  sub_si->add_option("--l", si.l, "Second block count")->required();
  sub_si->add_option("--t", si.t, "Intersection size")->required();
  add_io_opts(sub_si, si.io);

  AuditArgs au;
  auto* sub_au = app.add_subcommand("audit", "Certify the supporting inequalities on a grid");
  sub_au->add_option("--lemma", au.lemma, "Inequality id, or 'all'")->capture_default_str();
  sub_au->add_option("--t-max", au.t_max, "Largest t audited")->capture_default_str();
  sub_au->add_option("--k-max", au.k_max, "Largest k (and l, j) audited")->capture_default_str();
  sub_au->add_option("--n-extra", au.n_extra, "How far n runs past each threshold")
      ->capture_default_str();
  sub_au->add_option("--enum-budget", au.enum_budget,
                     "Cap for enumeration-backed checks")->capture_default_str();
  add_io_opts(sub_au, au.io);

  SearchArgs se;
  auto* sub_se = app.add_subcommand("search", "Extremal search over maximal families");
  sub_se->add_option("--n", se.n, "Ground set size")->required();
  sub_se->add_option("--k", se.k, "First block count (pair search)");
  sub_se->add_option("--l", se.l, "Second block count (pair search)");
  sub_se->add_option("--t", se.t, "Intersection size")->required();
  sub_se->add_option("--r", se.r, "Family count (must match --ks)");
  sub_se->add_option("--ks", se.ks, "Block counts, e.g. 4,3,3")->delimiter(',');
  sub_se->add_flag("--nontrivial", se.nontrivial, "Only tuples with < t common blocks");
  sub_se->add_option("--mode", se.mode, "exhaustive | seeded")
      ->check(CLI::IsMember({"exhaustive", "seeded"}))
      ->capture_default_str();
  sub_se->add_option("--gen-max", se.gen_max, "Largest random generator set")
      ->capture_default_str();
  sub_se->add_option("--draws", se.draws, "Randomized draws after the deterministic stages")
      ->capture_default_str();
  sub_se->add_option("--seed", se.seed, "Random seed")->capture_default_str();
  sub_se->add_option("--budget", se.budget, "Enumeration budget (0 = env/default)");
  sub_se->add_option("--checkpoint", se.checkpoint, "Checkpoint file (seeded pair mode)");
  sub_se->add_option("--threads", se.threads, "Worker threads")->capture_default_str();
  add_io_opts(sub_se, se.io);

  VerifyArgs ve;
  auto* sub_ve = app.add_subcommand("verify", "Tiered desk-scale check of a stated result");
  {
    std::string scenarios;
    for (const auto& s : crosspart::verify_scenarios())
      scenarios += (scenarios.empty() ? "" : ", ") + s;
    sub_ve->add_option("--theorem", ve.theorem, "Scenario id: " + scenarios)->required();
  }
  sub_ve->add_option("--n", ve.n, "Ground set size")->required();
  sub_ve->add_option("--t", ve.t, "Intersection size")->required();
  sub_ve->add_option("--ks", ve.ks, "Block counts, e.g. 4,3,3")->delimiter(',');
  sub_ve->add_option("--k", ve.k, "First block count (pairs; alternative to --ks)");
  sub_ve->add_option("--l", ve.l, "Second block count (pairs; alternative to --ks)");
  sub_ve->add_option("--gen-max", ve.gen_max, "Largest random generator set")
      ->capture_default_str();
  sub_ve->add_option("--draws", ve.draws, "Randomized draws in search tiers")
      ->capture_default_str();
  sub_ve->add_option("--seed", ve.seed, "Random seed")->capture_default_str();
  sub_ve->add_option("--budget", ve.budget, "Enumeration budget (0 = env/default)");
  sub_ve->add_option("--universe-cap", ve.universe_cap,
                     "Largest per-side universe for structural/search tiers")
      ->capture_default_str();
  sub_ve->add_option("--threads", ve.threads, "Worker threads")->capture_default_str();
  add_io_opts(sub_ve, ve.io);

  CompareArgs cm;
  auto* sub_cm = app.add_subcommand("compare-regimes",
                                    "Exact r1 vs r2 at the regime boundary k = 2t+1");
  sub_cm->add_option("--n", cm.n, "Ground set size")->required();
  sub_cm->add_option("--k", cm.k, "Block count")->required();
  sub_cm->add_option("--t", cm.t, "Intersection size")->required();
  add_io_opts(sub_cm, cm.io);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*sub_st) return run_stirling(st);
    if (*sub_th) return run_threshold(th);
    if (*sub_en) return run_enumerate(en);
    if (*sub_ta) return run_tau(ta);
    if (*sub_co) return run_construct(co);
    if (*sub_si) return run_sizes(si);
    if (*sub_au) return run_audit(au);
    if (*sub_se) return run_search(se);
    if (*sub_ve) return run_verify(ve);
    if (*sub_cm) return run_compare(cm);
  } catch (const crosspart::BudgetError& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}
