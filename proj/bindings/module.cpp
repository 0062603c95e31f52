#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "poolkit/bounds.hpp"
#include "poolkit/constructions.hpp"
#include "poolkit/cover_check.hpp"
#include "poolkit/decoder.hpp"
#include "poolkit/design.hpp"
#include "poolkit/io.hpp"
#include "poolkit/search.hpp"

namespace py = pybind11;
using namespace poolkit;

namespace {

// external convention everywhere: 1-based element lists
std::vector<int> to_list(const Bitset& b) {
    std::vector<int> out;
    for (int i : b.indices()) out.push_back(i + 1);
    return out;
}

std::vector<std::vector<int>> family_lists(const SubsetFamily& f) {
    std::vector<std::vector<int>> out;
    for (const Bitset& m : f.members) out.push_back(to_list(m));
    return out;
}

py::object big_to_py(const BigInt& x) {
    return py::module_::import("builtins").attr("int")(x.str());
}

py::dict witness_dict(const SolutionWitness& w) {
    py::dict d;
    d["solution"] = w.ok;
    if (w.counterexample) {
        py::dict c;
        c["a"] = to_list(w.counterexample->bad_objects);
        c["i"] = w.counterexample->object + 1;
        c["deficit"] = to_list(w.counterexample->deficit);
        d["counterexample"] = c;
    }
    if (w.oracle_pair) {
        py::dict c;
        c["a"] = to_list(w.oracle_pair->a);
        c["a_prime"] = to_list(w.oracle_pair->a_prime);
        d["counterexample_pair"] = c;
    }
    return d;
}

py::dict decode_dict(const DecodeResult& r) {
    py::dict d;
    switch (r.kind) {
        case DecodeResult::Kind::Identified:
            d["result"] = "identified";
            d["identified"] = to_list(r.identified);
            break;
        case DecodeResult::Kind::ExceedsP: d["result"] = "exceeds_p"; break;
        case DecodeResult::Kind::Anomaly: {
            d["result"] = "anomaly";
            py::list near;
            for (const auto& [a, dist] : r.nearest)
                near.append(py::make_tuple(to_list(a), dist));
            d["nearest"] = near;
            break;
        }
        case DecodeResult::Kind::AmbiguousDesign: {
            d["result"] = "ambiguous";
            py::list cands;
            for (const Bitset& a : r.candidates) cands.append(to_list(a));
            d["candidates"] = cands;
            break;
        }
    }
    return d;
}

SubsetFamily family_arg(int v, const std::vector<std::vector<int>>& members) {
    return SubsetFamily::from_lists(v, members);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "failure-tolerant pooling designs: verification, bounds, decoding, search";

    m.def("dualize",
          [](int n, const std::vector<std::vector<int>>& pools) {
              return family_lists(dualize(Design::from_lists(n, pools)));
          },
          py::arg("n"), py::arg("pools"),
          "Transpose a design (list of pools over objects 1..n) into the per-object dual.");

    m.def("phi",
          [](int v, const std::vector<std::vector<int>>& dual, const std::vector<int>& a) {
              return to_list(phi(family_arg(v, dual), a));
          },
          py::arg("v"), py::arg("dual"), py::arg("a"),
          "Bad-pool pattern for bad set a (1-based) under the given dual family.");

    m.def("verify_solution",
          [](int v, const std::vector<std::vector<int>>& dual, int p, int q) {
              return witness_dict(verify_solution(family_arg(v, dual), p, q));
          },
          py::arg("v"), py::arg("dual"), py::arg("p"), py::arg("q"));

    m.def("verify_solution_oracle",
          [](int v, const std::vector<std::vector<int>>& dual, int p, int q) {
              return witness_dict(verify_solution_oracle(family_arg(v, dual), p, q));
          },
          py::arg("v"), py::arg("dual"), py::arg("p"), py::arg("q"));

    m.def("verify_p1",
          [](int v, const std::vector<std::vector<int>>& dual, int q) {
              return witness_dict(verify_p1(family_arg(v, dual), q));
          },
          py::arg("v"), py::arg("dual"), py::arg("q"));

    m.def("verify_via_lemma1",
          [](int v, const std::vector<std::vector<int>>& dual, int q) {
              return witness_dict(verify_via_lemma1(family_arg(v, dual), q));
          },
          py::arg("v"), py::arg("dual"), py::arg("q"));

    m.def("decode_failures",
          [](int v, const std::vector<std::vector<int>>& dual, const std::string& outcome,
             int p, int q) {
              return decode_dict(decode_failures(family_arg(v, dual), Outcome::parse(outcome), p, q));
          },
          py::arg("v"), py::arg("dual"), py::arg("outcome"), py::arg("p"), py::arg("q"));

    m.def("decode_errors",
          [](int v, const std::vector<std::vector<int>>& dual, const std::string& outcome,
             int p, int q) {
              return decode_dict(decode_errors(family_arg(v, dual), Outcome::parse(outcome), p, q));
          },
          py::arg("v"), py::arg("dual"), py::arg("outcome"), py::arg("p"), py::arg("q"));

    m.def("simulate_trials",
          [](int v, const std::vector<std::vector<int>>& dual, int p, int q,
             const std::string& mode, uint64_t trials, uint64_t seed, const std::string& profile,
             int fixed_size, bool force) {
              TruthProfile tp = profile == "uniform"  ? TruthProfile::uniform()
                                : profile == "fixed"  ? TruthProfile::fixed(fixed_size)
                                                      : TruthProfile::adversarial();
              SimMode sm = mode == "failures" ? SimMode::Failures : SimMode::Errors;
              SimulationReport r =
                  simulate_trials(family_arg(v, dual), p, q, sm, trials, seed, tp, force);
              py::dict d;
              d["trials"] = r.trials;
              d["identified_correct"] = r.identified_correct;
              d["exceeds_p_reported"] = r.exceeds_p_reported;
              d["anomalies"] = r.anomalies;
              d["misidentifications"] = r.misidentifications;
              d["seed"] = r.seed;
              return d;
          },
          py::arg("v"), py::arg("dual"), py::arg("p"), py::arg("q"), py::arg("mode"),
          py::arg("trials") = 1000, py::arg("seed") = 0, py::arg("profile") = "uniform",
          py::arg("fixed_size") = 0, py::arg("force") = false);

    m.def("binom", [](long long a, long long b) { return big_to_py(binom(a, b)); });

    m.def("upper_bound_p1", [](int v, int q) {
        BoundReport r = upper_bound_p1(v, q);
        py::dict d;
        d["v"] = r.v;
        d["p"] = 1;
        d["q"] = r.q;
        d["n_max"] = big_to_py(r.n_max);
        std::ostringstream ss;
        ss << *r.kq;
        d["K_q"] = ss.str();
        if (r.t_span) d["T"] = *r.t_span;
        return d;
    });

    m.def("upper_bound_p2", [](int v, int q) {
        BoundReport r = upper_bound_p2(v, q);
        py::dict d;
        d["v"] = r.v;
        d["p"] = 2;
        d["q"] = r.q;
        d["n_max"] = big_to_py(r.n_max);
        d["t_star"] = *r.tstar;
        d["t_star_clamped"] = r.tstar_clamped;
        return d;
    });

    m.def("tstar", [](int v, int q) {
        TStar t = tstar(v, q);
        return py::make_tuple(t.value, t.clamped);
    });

    m.def("min_pools_estimate", &min_pools_estimate, py::arg("n"), py::arg("p"));

    m.def("sperner_family",
          [](int v) {
              SubsetFamily f = sperner_family(v);
              return py::make_tuple(f.ground_size, family_lists(f));
          },
          py::arg("v"));

    m.def("steiner_catalog",
          [](const std::string& name) {
              Packing pk = steiner_catalog(name);
              py::dict d;
              d["v"] = pk.v;
              d["t"] = pk.t;
              d["k"] = pk.k;
              d["blocks"] = family_lists(pk.blocks);
              return d;
          },
          py::arg("name"));

    m.def("steiner_catalog_names", &steiner_catalog_names);

    m.def("bose_sts",
          [](int v) { return family_lists(bose_sts(v).blocks); },
          py::arg("v"));

    m.def("greedy_packing",
          [](int v, int k, int t) { return family_lists(greedy_packing(v, k, t).blocks); },
          py::arg("v"), py::arg("k"), py::arg("t"));

    m.def("verify_packing",
          [](int v, const std::vector<std::vector<int>>& blocks, int t, int k) {
              PackingCheck c = verify_packing(family_arg(v, blocks), t, k, v);
              py::dict d;
              d["ok"] = c.ok;
              if (!c.ok) {
                  d["reason"] = c.reason;
                  d["block_a"] = c.block_a;
                  d["block_b"] = c.block_b;
              }
              return d;
          },
          py::arg("v"), py::arg("blocks"), py::arg("t"), py::arg("k"));

    m.def("is_steiner",
          [](int v, const std::vector<std::vector<int>>& blocks, int t, int k) {
              return is_steiner(family_arg(v, blocks), t, k, v);
          },
          py::arg("v"), py::arg("blocks"), py::arg("t"), py::arg("k"));

    m.def("max_design_search",
          [](int v, int p, int q, uint64_t budget) {
              SearchResult r = max_design_search(v, p, q, budget);
              py::dict d;
              d["n_max"] = r.n_max;
              d["certified"] = r.certified;
              d["nodes"] = r.nodes;
              d["witness"] = family_lists(r.witness);
              return d;
          },
          py::arg("v"), py::arg("p"), py::arg("q"), py::arg("budget") = kDefaultNodeBudget);

    m.def("parse_design",
          [](const std::string& text) {
              std::istringstream in(text);
              DesignInput d = parse_design_text(in);
              py::dict out;
              out["v"] = d.dual.ground_size;
              out["n"] = d.dual.size();
              out["dual"] = family_lists(d.dual);
              out["was_dual"] = d.was_dual;
              return out;
          },
          py::arg("text"));

    m.def("format_dual",
          [](int v, const std::vector<std::vector<int>>& dual) {
              return format_dual(family_arg(v, dual));
          },
          py::arg("v"), py::arg("dual"));
}
