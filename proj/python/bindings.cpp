// Python bindings for the crosspart core: exact partition counts, threshold
// tests, extremal constructions, dual/closure machinery, covering numbers,
// the inequality audit, and the scenario verifier.  Values that can exceed
// 64 bits cross the boundary as arbitrary-precision Python integers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crosspart/audit.hpp"
#include "crosspart/bigint.hpp"
#include "crosspart/constructions.hpp"
#include "crosspart/covers.hpp"
#include "crosspart/dual.hpp"
#include "crosspart/family.hpp"
#include "crosspart/partition.hpp"
#include "crosspart/stirling.hpp"
#include "crosspart/verify.hpp"
#include "crosspart/version.hpp"

namespace py = pybind11;

namespace {

using crosspart::BigCount;
using crosspart::Family;
using crosspart::Partition;

py::int_ to_py_int(const BigCount& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Family make_family(int n, int k, const std::vector<std::string>& members) {
  Family f(n, k);
  for (const std::string& s : members) f.add(Partition::parse(s));
  return f;
}

std::vector<std::string> member_strings(const Family& f) {
  std::vector<std::string> out;
  out.reserve(f.members().size());
  for (const Partition& p : f.members()) out.push_back(p.str());
  return out;
}

crosspart::ConstructionKind parse_kind(const std::string& kind) {
  auto k = crosspart::kind_from_name(kind);
  if (!k) throw std::invalid_argument("unknown construction kind: " + kind);
  return *k;
}

py::dict search_result_dict(const crosspart::SearchResult& res, const std::string& mode) {
  py::dict d;
  d["best_product"] = to_py_int(res.best_product);
  d["mode"] = mode;
  d["nontrivial"] = res.nontrivial_constraint;
  d["exhaustive"] = res.exhaustive;
  d["evaluations"] = res.evaluations;
  d["certificate"] = res.certificate;
  py::list wit;
  for (const Family& f : res.witnesses) {
    py::dict w;
    w["k"] = f.block_count_k();
    w["size"] = f.size();
    w["members"] = member_strings(f);
    wit.append(w);
  }
  d["witnesses"] = wit;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact combinatorics for cross-intersecting families of set partitions: "
      "partition counts, threshold tests, extremal constructions, duals, "
      "covering numbers, the inequality audit, and the scenario verifier.";

  m.attr("__version__") = crosspart::kVersion;

  // ---- counts and thresholds ---------------------------------------------

  m.def(
      "stirling",
      [](long n, long k, bool closed_form) {
        BigCount v = closed_form ? crosspart::stirling_closed_form(n, k)
                                 : crosspart::stirling(n, k);
        return to_py_int(v);
      },
      py::arg("n"), py::arg("k"), py::arg("closed_form") = false,
      "Partition count S(n, k), exact.  closed_form=True evaluates the "
      "alternating-sum formula instead of the recurrence.");

  m.def(
      "threshold_min_n",
      [](long k, long t, bool doubled) {
        return doubled ? crosspart::min_n_for_2L(k, t) : crosspart::min_n_for_L(k, t);
      },
      py::arg("k"), py::arg("t"), py::arg("doubled") = false,
      "Least n reaching the logarithmic threshold (or the doubled one).");

  m.def(
      "threshold_holds",
      [](long n, long k, long t, bool doubled) {
        return doubled ? crosspart::threshold_2L_holds(n, k, t)
                       : crosspart::threshold_L_holds(n, k, t);
      },
      py::arg("n"), py::arg("k"), py::arg("t"), py::arg("doubled") = false,
      "Exact integer test for n against the logarithmic threshold.");

  // ---- closed-form extremal sizes ----------------------------------------

  m.def(
      "construction_size",
      [](const std::string& kind, long n, long k, long l, long t) -> py::int_ {
        using crosspart::ConstructionKind;
        switch (parse_kind(kind)) {
          case ConstructionKind::A: return to_py_int(crosspart::size_A(n, k, l, t));
          case ConstructionKind::B: return to_py_int(crosspart::size_B(n, k, t));
          case ConstructionKind::C: return to_py_int(crosspart::size_C(n, k, t));
          case ConstructionKind::D: return to_py_int(crosspart::size_D(n, k, t));
          case ConstructionKind::HM1: return to_py_int(crosspart::hm_bound(n, k, t, 1));
          case ConstructionKind::HM2: return to_py_int(crosspart::hm_bound(n, k, t, 2));
          default:
            throw std::invalid_argument(
                "construction_size: kind '" + kind +
                "' depends on its anchor and has no single closed form");
        }
      },
      py::arg("kind"), py::arg("n"), py::arg("k"), py::arg("l") = 0, py::arg("t") = 1,
      "Closed-form size of a named extremal family (A, B, C, D, HM1, HM2).");

  m.def(
      "r1",
      [](long n, long k, long l, long t) { return to_py_int(crosspart::size_r1(n, k, l, t)); },
      py::arg("n"), py::arg("k"), py::arg("l"), py::arg("t"),
      "Extremal pair product in the wide regime.");
  m.def(
      "r2",
      [](long n, long k, long l, long t) { return to_py_int(crosspart::size_r2(n, k, l, t)); },
      py::arg("n"), py::arg("k"), py::arg("l"), py::arg("t"),
      "Extremal pair product in the narrow regime.");
  m.def(
      "r_bound",
      [](long n, long k, long l, long t) { return to_py_int(crosspart::size_r(n, k, l, t)); },
      py::arg("n"), py::arg("k"), py::arg("l"), py::arg("t"),
      "Overall extremal pair product bound.");
  m.def(
      "h",
      [](long m, long k, long t, long n) { return to_py_int(crosspart::size_h(m, k, t, n)); },
      py::arg("m"), py::arg("k"), py::arg("t"), py::arg("n"),
      "Count of k-partitions sharing at least t blocks with a fixed "
      "singleton partition of [m].");
  m.def(
      "phi",
      [](long m, long a, const std::vector<long>& ks, long t, long n) {
        return to_py_int(crosspart::size_phi(m, a, ks, t, n));
      },
      py::arg("m"), py::arg("a"), py::arg("ks"), py::arg("t"), py::arg("n"),
      "Product bound for a tuple anchored at the singleton partition of [m], "
      "with the a-th family (1-based) distinguished.");

  // ---- families and constructions ----------------------------------------

  m.def(
      "build_construction",
      [](const std::string& kind, int n, int k, int l, int t, const std::string& anchors,
         std::uint64_t budget) {
        crosspart::ConstructionSpec spec =
            crosspart::ConstructionSpec::make(parse_kind(kind), n, k, l, t);
        if (!anchors.empty()) spec.anchor = Partition::parse(anchors);
        Family fam = crosspart::build_family(spec, budget);
        return member_strings(fam);
      },
      py::arg("kind"), py::arg("n"), py::arg("k"), py::arg("l") = 0, py::arg("t") = 1,
      py::arg("anchors") = std::string(), py::arg("budget") = std::uint64_t{0},
      "Enumerate a named extremal family; returns its members as partition "
      "strings.  anchors overrides the default anchor partition.");

  m.def(
      "dual",
      [](const std::vector<std::string>& members, int n, int k, int target_l, int t,
         std::uint64_t budget) {
        Family fam = make_family(n, k, members);
        Family d = [&] {
          py::gil_scoped_release release;
          return crosspart::dual_family(fam, target_l, t, budget);
        }();
        return member_strings(d);
      },
      py::arg("members"), py::arg("n"), py::arg("k"), py::arg("target_l"), py::arg("t") = 1,
      py::arg("budget") = std::uint64_t{0},
      "All target_l-partitions sharing at least t blocks with every member of "
      "the given family.");

  m.def(
      "tau",
      [](const std::vector<std::string>& members, int n, int k, int t, bool witnesses,
         std::uint64_t budget) -> py::object {
        Family fam = make_family(n, k, members);
        crosspart::CoverResult res = [&] {
          py::gil_scoped_release release;
          return crosspart::tau_t(fam, t, witnesses, budget);
        }();
        if (!witnesses) return py::int_(res.tau);
        py::list ws;
        for (const Partition& p : res.witnesses) ws.append(p.str());
        return py::make_tuple(res.tau, ws);
      },
      py::arg("members"), py::arg("n"), py::arg("k"), py::arg("t") = 1,
      py::arg("witnesses") = false, py::arg("budget") = std::uint64_t{0},
      "Covering number of a family; with witnesses=True also returns every "
      "minimum cover.");

  // ---- searches -----------------------------------------------------------

  m.def(
      "pair_search",
      [](int n, int k, int l, int t, const std::string& mode, bool nontrivial, int gen_max,
         std::uint64_t draws, std::uint64_t seed, int threads, std::uint64_t budget) {
        if (mode != "seeded" && mode != "exhaustive")
          throw std::invalid_argument("pair_search: mode must be 'seeded' or 'exhaustive'");
        crosspart::SearchResult res = [&] {
          py::gil_scoped_release release;
          crosspart::DualContext ctx;
          ctx.n = n;
          ctx.k = k;
          ctx.l = l;
          ctx.t = t;
          ctx.budget = budget;
          crosspart::DualEngine eng(ctx, threads);
          if (mode == "exhaustive") return crosspart::exhaustive_pair_search(eng, nontrivial);
          crosspart::SeededSearchOptions so;
          so.generator_size_max = gen_max;
          so.random_draws = draws;
          so.seed = seed;
          so.nontrivial = nontrivial;
          so.threads = threads;
          return crosspart::seeded_search(eng, so);
        }();
        return search_result_dict(res, mode);
      },
      py::arg("n"), py::arg("k"), py::arg("l"), py::arg("t") = 1,
      py::arg("mode") = std::string("seeded"), py::arg("nontrivial") = false,
      py::arg("gen_max") = 2, py::arg("draws") = std::uint64_t{10000},
      py::arg("seed") = std::uint64_t{1}, py::arg("threads") = 1,
      py::arg("budget") = std::uint64_t{0},
      "Search over maximal cross-intersecting pairs: exhaustive closure "
      "catalog, or the seeded generator schedule.");

  // ---- audit and verification --------------------------------------------

  m.def("lemma_names", [] {
    std::vector<std::string> out;
    for (crosspart::LemmaId id : crosspart::all_lemmas())
      out.emplace_back(crosspart::lemma_name(id));
    return out;
  });

  m.def(
      "audit_lemma",
      [](const std::string& name, int t_max, int k_max, int n_extra,
         std::uint64_t enum_budget) {
        crosspart::AuditOptions opts;
        opts.t_max = t_max;
        opts.k_max = k_max;
        opts.n_extra = n_extra;
        opts.enum_budget = enum_budget;
        crosspart::LemmaId id = crosspart::lemma_from_name(name);
        crosspart::AuditReport rep = [&] {
          py::gil_scoped_release release;
          return crosspart::audit(id, opts);
        }();
        py::dict d;
        d["lemma"] = std::string(crosspart::lemma_name(rep.lemma));
        d["grid"] = rep.grid;
        d["polynomial"] = rep.polynomial;
        d["pass"] = rep.pass;
        d["fail"] = rep.fail;
        d["inconclusive"] = rep.inconclusive;
        d["skipped_hypothesis"] = rep.skipped_hypothesis;
        d["skipped_budget"] = rep.skipped_budget;
        d["total"] = rep.total();
        d["ok"] = rep.ok();
        return d;
      },
      py::arg("name"), py::arg("t_max") = 3, py::arg("k_max") = 8, py::arg("n_extra") = 10,
      py::arg("enum_budget") = std::uint64_t{12'000'000},
      "Certify one supporting inequality over its parameter grid.");

  m.def(
      "verify",
      [](const std::string& theorem, int n, int t, const std::vector<int>& ks, int gen_max,
         std::uint64_t draws, std::uint64_t seed, std::uint64_t budget,
         std::uint64_t universe_cap, int threads) {
        crosspart::VerifyParams params;
        params.n = n;
        params.t = t;
        params.ks = ks;
        crosspart::VerifyOptions opts;
        opts.budget = budget;
        opts.threads = threads;
        opts.gen_max = gen_max;
        opts.random_draws = draws;
        opts.seed = seed;
        opts.structural_universe_cap = universe_cap;
        crosspart::VerifyReport rep = [&] {
          py::gil_scoped_release release;
          return crosspart::verify_scenario(theorem, params, opts);
        }();
        py::dict d;
        d["scenario"] = rep.scenario;
        d["params"] = rep.params;
        d["refused"] = rep.refused;
        d["refusal"] = rep.refusal;
        py::list tiers;
        for (const crosspart::TierResult& tier : rep.tiers) {
          py::dict td;
          td["name"] = tier.name;
          td["status"] = std::string(crosspart::tier_status_label(tier.status));
          td["exhaustive"] = tier.exhaustive;
          td["notes"] = tier.notes;
          tiers.append(td);
        }
        d["tiers"] = tiers;
        d["ok"] = rep.ok();
        return d;
      },
      py::arg("theorem"), py::arg("n"), py::arg("t") = 1,
      py::arg("ks") = std::vector<int>{}, py::arg("gen_max") = 2,
      py::arg("draws") = std::uint64_t{2000}, py::arg("seed") = std::uint64_t{1},
      py::arg("budget") = std::uint64_t{0}, py::arg("universe_cap") = std::uint64_t{20000},
      py::arg("threads") = 1,
      "Tiered desk-scale check of a stated result; returns the full report.");

  m.def("verify_scenarios", [] { return crosspart::verify_scenarios(); });
}
