#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "poolkit/bounds.hpp"
#include "poolkit/constructions.hpp"
#include "poolkit/cover_check.hpp"
#include "poolkit/decoder.hpp"
#include "poolkit/design.hpp"
#include "poolkit/io.hpp"
#include "poolkit/search.hpp"

using json = nlohmann::ordered_json;
using namespace poolkit;

namespace {

std::string set_str(const Bitset& b) {
    std::string s;
    for (int i : b.indices()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(i + 1);
    }
    return s.empty() ? "-" : s;
}

json set_json(const Bitset& b) {
    json arr = json::array();
    for (int i : b.indices()) arr.push_back(i + 1);
    return arr;
}

json bigint_json(const BigInt& x) {
    if (x <= BigInt(std::numeric_limits<int64_t>::max())) return (int64_t)x;
    return x.str();
}

void emit_witness(const SolutionWitness& w, bool as_json, json& doc, std::ostream& out) {
    if (as_json) {
        doc["solution"] = w.ok;
        if (w.counterexample) {
            doc["counterexample"] = {{"a", set_json(w.counterexample->bad_objects)},
                                     {"i", w.counterexample->object + 1},
                                     {"deficit", set_json(w.counterexample->deficit)}};
        }
        if (w.oracle_pair) {
            doc["counterexample_pair"] = {{"a", set_json(w.oracle_pair->a)},
                                          {"a_prime", set_json(w.oracle_pair->a_prime)}};
        }
    } else {
        out << "solution " << (w.ok ? "true" : "false") << "\n";
        if (w.counterexample) {
            out << "counterexample_a " << set_str(w.counterexample->bad_objects) << "\n";
            out << "counterexample_i " << w.counterexample->object + 1 << "\n";
            out << "deficit " << set_str(w.counterexample->deficit) << "\n";
        }
        if (w.oracle_pair) {
            out << "counterexample_a " << set_str(w.oracle_pair->a) << "\n";
            out << "counterexample_a_prime " << set_str(w.oracle_pair->a_prime) << "\n";
        }
    }
}

int threads_from_env() {
    const char* env = std::getenv("POOLKIT_THREADS");
    if (!env) return 0;
    try {
        int t = std::stoi(env);
        if (t < 0) throw std::invalid_argument("negative");
        return t;
    } catch (const std::exception&) {
        throw std::runtime_error("POOLKIT_THREADS must be a nonnegative integer");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"poolkit: build, verify, bound and decode failure-tolerant pooling designs"};
    app.require_subcommand(1);

    std::string design_path, method = "direct", mode, outcome_str, family, name, out_path = "-";
    std::string profile = "uniform";
    int p = -1, q = 0, v = 0, k = 0, t = 0, fixed_size = 0;
    long long estimate_n = 0;
    uint64_t trials = 1000, seed = 0, budget = kDefaultNodeBudget;
    bool as_json = false, strict = false, force = false;

    auto* verify = app.add_subcommand("verify", "check the (p,q)-solution property");
    verify->add_option("--design", design_path, "design file")->required();
    verify->add_option("--p", p, "max bad-object count");
    verify->add_option("--q", q, "failure budget")->required();
    verify->add_option("--method", method, "direct|oracle|p1|lemma1")
        ->check(CLI::IsMember({"direct", "oracle", "p1", "lemma1"}));
    verify->add_flag("--json", as_json);

    auto* decode = app.add_subcommand("decode", "infer object statuses from pool outcomes");
    decode->add_option("--design", design_path)->required();
    decode->add_option("--p", p)->required();
    decode->add_option("--q", q)->required();
    decode->add_option("--mode", mode, "failures|errors")
        ->required()
        ->check(CLI::IsMember({"failures", "errors"}));
    decode->add_option("--outcome", outcome_str, "one char per pool: 0 good, 1 bad, x failed")
        ->required();
    decode->add_flag("--strict", strict, "exit 1 on any non-identified result");
    decode->add_flag("--json", as_json);

    auto* bound = app.add_subcommand("bound", "exact upper bounds on n");
    bound->add_option("--v", v)->required();
    bound->add_option("--p", p)->required()->check(CLI::IsMember({1, 2}));
    bound->add_option("--q", q)->required();
    bound->add_option("--min-pools-for", estimate_n,
                      "print the asymptotic minimum-pool estimate for this n instead");
    bound->add_flag("--json", as_json);

    auto* construct = app.add_subcommand("construct", "emit a design in dual text format");
    construct->add_option("--family", family, "sperner|steiner|bose|greedy")
        ->required()
        ->check(CLI::IsMember({"sperner", "steiner", "bose", "greedy"}));
    construct->add_option("--v", v);
    construct->add_option("--k", k);
    construct->add_option("--t", t);
    construct->add_option("--name", name, "catalog name, e.g. S(3,4,8)");
    construct->add_option("-o,--output", out_path, "output file (- = stdout)");

    auto* search = app.add_subcommand("search", "exhaustive maximum-n search at desk scale");
    search->add_option("--v", v)->required();
    search->add_option("--p", p)->required();
    search->add_option("--q", q)->required();
    search->add_option("--budget", budget, "DFS node budget");
    search->add_flag("--json", as_json);

    auto* simulate = app.add_subcommand("simulate", "seeded Monte Carlo decode trials");
    simulate->add_option("--design", design_path)->required();
    simulate->add_option("--p", p)->required();
    simulate->add_option("--q", q)->required();
    simulate->add_option("--mode", mode)->required()->check(CLI::IsMember({"failures", "errors"}));
    simulate->add_option("--trials", trials);
    simulate->add_option("--seed", seed);
    simulate->add_option("--profile", profile)
        ->check(CLI::IsMember({"uniform", "fixed", "adversarial"}));
    simulate->add_option("--size", fixed_size, "truth size for --profile fixed");
    simulate->add_flag("--force", force, "simulate even if verification fails");
    simulate->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        threads_from_env();  // validated; execution is single-threaded
        json doc;
        std::ostream& out = std::cout;

        if (*verify) {
            DesignInput in = parse_design_file(design_path);
            SolutionWitness w;
            if (method == "p1") {
                if (p >= 0 && p != 1) throw std::runtime_error("--method p1 fixes p = 1");
                w = verify_p1(in.dual, q);
            } else if (method == "lemma1") {
                if (p >= 0 && p != 2) throw std::runtime_error("--method lemma1 fixes p = 2");
                w = verify_via_lemma1(in.dual, q);
            } else {
                if (p < 0) throw std::runtime_error("--p is required for this method");
                w = method == "oracle" ? verify_solution_oracle(in.dual, p, q)
                                       : verify_solution(in.dual, p, q);
            }
            emit_witness(w, as_json, doc, out);
            if (as_json) out << doc.dump(2) << "\n";
            return w.ok ? 0 : 1;
        }

        if (*decode) {
            DesignInput in = parse_design_file(design_path);
            Outcome o = Outcome::parse(outcome_str);
            DecodeResult r = mode == "failures" ? decode_failures(in.dual, o, p, q)
                                                : decode_errors(in.dual, o, p, q);
            const char* kind = r.kind == DecodeResult::Kind::Identified      ? "identified"
                               : r.kind == DecodeResult::Kind::ExceedsP      ? "exceeds_p"
                               : r.kind == DecodeResult::Kind::Anomaly       ? "anomaly"
                                                                             : "ambiguous";
            if (as_json) {
                doc["result"] = kind;
                if (r.kind == DecodeResult::Kind::Identified)
                    doc["identified"] = set_json(r.identified);
                if (r.kind == DecodeResult::Kind::Anomaly) {
                    doc["nearest"] = json::array();
                    for (const auto& [a, d] : r.nearest)
                        doc["nearest"].push_back({{"a", set_json(a)}, {"distance", d}});
                }
                if (r.kind == DecodeResult::Kind::AmbiguousDesign) {
                    doc["candidates"] = json::array();
                    for (const Bitset& a : r.candidates) doc["candidates"].push_back(set_json(a));
                }
                out << doc.dump(2) << "\n";
            } else {
                out << "result " << kind << "\n";
                if (r.kind == DecodeResult::Kind::Identified)
                    out << "identified " << set_str(r.identified) << "\n";
                for (const auto& [a, d] : r.nearest)
                    out << "candidate " << d << " " << set_str(a) << "\n";
                for (const Bitset& a : r.candidates) out << "candidate " << set_str(a) << "\n";
            }
            bool negative = r.kind != DecodeResult::Kind::Identified;
            return strict && negative ? 1 : 0;
        }

        if (*bound) {
            if (estimate_n > 0) {
                double est = min_pools_estimate(estimate_n, p);
                if (as_json) {
                    doc["n"] = estimate_n;
                    doc["p"] = p;
                    doc["min_pools_estimate"] = est;
                    out << doc.dump(2) << "\n";
                } else {
                    out << "min_pools_estimate " << est << "\n";
                }
                return 0;
            }
            BoundReport r = p == 1 ? upper_bound_p1(v, q) : upper_bound_p2(v, q);
            if (as_json) {
                doc["v"] = v;
                doc["p"] = p;
                doc["q"] = q;
                doc["n_max"] = bigint_json(r.n_max);
                if (r.kq) {
                    std::ostringstream ss;
                    ss << *r.kq;
                    doc["K_q"] = ss.str();
                }
                if (r.t_span) doc["T"] = *r.t_span;
                if (r.tstar) doc["t_star"] = *r.tstar;
                if (r.tstar_clamped) doc["t_star_clamped"] = true;
                out << doc.dump(2) << "\n";
            } else {
                out << "n_max " << r.n_max << "\n";
                if (r.kq) out << "K_q " << *r.kq << "\n";
                if (r.t_span) out << "T " << *r.t_span << "\n";
                if (r.tstar) out << "t_star " << *r.tstar << "\n";
                if (r.tstar_clamped) out << "t_star_clamped true\n";
            }
            return 0;
        }

        if (*construct) {
            SubsetFamily fam;
            if (family == "sperner") {
                if (v < 1) throw std::runtime_error("--v required for sperner");
                fam = sperner_family(v);
            } else if (family == "steiner") {
                if (name.empty()) throw std::runtime_error("--name required for steiner");
                fam = steiner_catalog(name).blocks;
            } else if (family == "bose") {
                fam = bose_sts(v).blocks;
            } else {
                fam = greedy_packing(v, k, t).blocks;
            }
            std::string text = format_dual(fam);
            if (out_path == "-") {
                out << text;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot write " + out_path);
                f << text;
            }
            return 0;
        }

        if (*search) {
            SearchResult r = max_design_search(v, p, q, budget);
            if (as_json) {
                doc["n_max"] = r.n_max;
                doc["certified"] = r.certified;
                doc["nodes"] = r.nodes;
                doc["witness"] = json::array();
                for (const Bitset& m : r.witness.members) doc["witness"].push_back(set_json(m));
                out << doc.dump(2) << "\n";
            } else {
                out << "n_max " << r.n_max << "\n";
                out << "certified " << (r.certified ? "true" : "false") << "\n";
                out << "nodes " << r.nodes << "\n";
                out << format_dual(r.witness);
            }
            return 0;
        }

        if (*simulate) {
            DesignInput in = parse_design_file(design_path);
            TruthProfile tp = profile == "uniform"      ? TruthProfile::uniform()
                              : profile == "fixed"      ? TruthProfile::fixed(fixed_size)
                                                        : TruthProfile::adversarial();
            SimMode sm = mode == "failures" ? SimMode::Failures : SimMode::Errors;
            SimulationReport rep = simulate_trials(in.dual, p, q, sm, trials, seed, tp, force);
            if (as_json) {
                doc["trials"] = rep.trials;
                doc["identified_correct"] = rep.identified_correct;
                doc["exceeds_p_reported"] = rep.exceeds_p_reported;
                doc["anomalies"] = rep.anomalies;
                doc["misidentifications"] = rep.misidentifications;
                doc["seed"] = rep.seed;
                out << doc.dump(2) << "\n";
            } else {
                out << "trials " << rep.trials << "\n";
                out << "identified_correct " << rep.identified_correct << "\n";
                out << "exceeds_p_reported " << rep.exceeds_p_reported << "\n";
                out << "anomalies " << rep.anomalies << "\n";
                out << "misidentifications " << rep.misidentifications << "\n";
                out << "seed " << rep.seed << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
