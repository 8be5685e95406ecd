// Command-line front end: check states for full separability, generate test
// states, run operation-count benchmarks, and query the reference oracle.
//
// Exit codes: 0 separable, 1 entangled, 2 usage or input error, 3 numerical
// failure (criteria conflict, non-convergence, route disagreement).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "puresep/bench.hpp"
#include "puresep/criteria.hpp"
#include "puresep/errors.hpp"
#include "puresep/generators.hpp"
#include "puresep/io.hpp"
#include "puresep/oracle.hpp"
#include "puresep/state.hpp"

namespace {

using nlohmann::ordered_json;
using namespace puresep;

constexpr int kExitSeparable = 0;
constexpr int kExitEntangled = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string sci(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

PureState load_state(const std::string& input) {
    if (input == "-") return read_state(std::cin);
    return read_state_file(input);
}

void emit_state(const std::string& out, const PureState& state) {
    if (out == "-")
        write_state(std::cout, state);
    else
        write_state_file(out, state);
}

std::vector<Criterion> parse_criteria_list(const std::vector<std::string>& tokens) {
    std::vector<Criterion> result;
    for (const std::string& token : tokens) {
        std::size_t start = 0;
        while (start <= token.size()) {
            const std::size_t comma = token.find(',', start);
            const std::string name =
                token.substr(start, comma == std::string::npos ? comma : comma - start);
            if (!name.empty()) {
                if (name == "all") {
                    for (Criterion c : all_criteria()) result.push_back(c);
                } else if (auto c = criterion_from_name(name)) {
                    result.push_back(*c);
                } else {
                    throw ArgumentError("unknown criterion '" + name +
                                        "' (expected det|rank|minors|prop|all)");
                }
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (result.empty()) throw ArgumentError("no criterion selected");
    return result;
}

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    j["criterion"] = std::string(criterion_name(w.criterion));
    j["party"] = w.party;
    j["violation"] = w.violation;
    j["threshold"] = w.threshold;
    if (w.minor) {
        j["minor"] = {{"row_a", w.minor->row_a},
                      {"row_b", w.minor->row_b},
                      {"col_a", w.minor->col_a},
                      {"col_b", w.minor->col_b}};
    }
    if (w.prop) {
        j["prop"] = {{"pivot_row", w.prop->pivot_row},
                     {"pivot_col", w.prop->pivot_col},
                     {"row", w.prop->row},
                     {"col", w.prop->col}};
    }
    return j;
}

ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    j["record"] = "verdict";
    j["criterion"] = std::string(criterion_name(v.criterion));
    j["separable"] = v.separable;
    ordered_json values = ordered_json::array();
    for (const PartyValue& pv : v.values) values.push_back({{"party", pv.party}, {"value", pv.value}});
    j["values"] = std::move(values);
    j["witness"] = v.witness ? witness_json(*v.witness) : ordered_json(nullptr);
    j["ops"] = {{"cmul", v.ops.cmul}, {"cadd", v.ops.cadd}, {"cmp", v.ops.cmp}};
    return j;
}

void print_verdict_human(const Verdict& v) {
    std::printf("%-6s %s\n", std::string(criterion_name(v.criterion)).c_str(),
                v.separable ? "separable" : "entangled");
    for (const PartyValue& pv : v.values)
        std::printf("  party %d: value %s\n", pv.party, sci(pv.value).c_str());
    if (v.witness) {
        const Witness& w = *v.witness;
        std::printf("  witness: party %d, violation %s > threshold %s", w.party,
                    sci(w.violation).c_str(), sci(w.threshold).c_str());
        if (w.minor)
            std::printf(", rows (%zu,%zu) cols (%d,%d)", w.minor->row_a, w.minor->row_b,
                        w.minor->col_a, w.minor->col_b);
        if (w.prop)
            std::printf(", pivot (%zu,%d) vs (%zu,%d)", w.prop->pivot_row, w.prop->pivot_col,
                        w.prop->row, w.prop->col);
        std::printf("\n");
    }
}

struct CheckOptions {
    std::string input = "-";
    std::string criterion = "all";
    double tol_rank = ToleranceConfig{}.rank;
    double tol_det = ToleranceConfig{}.det;
    double tol_zero = ToleranceConfig{}.zero;
    bool machine = false;
    bool exhaustive = false;
};

int run_check(const CheckOptions& o) {
    const std::vector<Criterion> criteria = parse_criteria_list({o.criterion});
    CriteriaOptions opts;
    opts.tol.rank = o.tol_rank;
    opts.tol.det = o.tol_det;
    opts.tol.zero = o.tol_zero;
    opts.tol.validate();
    opts.exhaustive = o.exhaustive;

    const PureState state = load_state(o.input);
    const ClassifyResult result = classify(state, criteria, opts);

    if (o.machine) {
        for (const Verdict& v : result.verdicts) std::cout << verdict_json(v).dump() << "\n";
        ordered_json j;
        j["record"] = "result";
        j["separable"] = result.separable;
        if (result.conflict) {
            j["conflict"] = {{"first", std::string(criterion_name(result.conflict->first))},
                             {"second", std::string(criterion_name(result.conflict->second))},
                             {"detail", result.conflict->detail}};
        } else {
            j["conflict"] = nullptr;
        }
        if (result.decomposition) {
            j["fidelity"] = result.decomposition->fidelity;
            ordered_json factors = ordered_json::array();
            for (const PureState& f : result.decomposition->factors) {
                ordered_json amps = ordered_json::array();
                for (const Complex& a : f.amplitudes()) amps.push_back({a.real(), a.imag()});
                factors.push_back(std::move(amps));
            }
            j["factors"] = std::move(factors);
        }
        std::cout << j.dump() << "\n";
    } else {
        for (const Verdict& v : result.verdicts) print_verdict_human(v);
        if (result.conflict) {
            std::printf("verdict: conflict (%s vs %s): %s\n",
                        std::string(criterion_name(result.conflict->first)).c_str(),
                        std::string(criterion_name(result.conflict->second)).c_str(),
                        result.conflict->detail.c_str());
        } else if (result.separable) {
            std::printf("verdict: separable\n");
            if (result.decomposition) {
                std::printf("fidelity: %.17g\n", result.decomposition->fidelity);
                for (std::size_t k = 0; k < result.decomposition->factors.size(); ++k) {
                    const PureState& f = result.decomposition->factors[k];
                    std::printf("factor %zu:", k);
                    for (const Complex& a : f.amplitudes())
                        std::printf(" (%.6g%+.6gi)", a.real(), a.imag());
                    std::printf("\n");
                }
            }
        } else {
            std::printf("verdict: entangled\n");
        }
    }

    if (result.conflict) return kExitNumerical;
    return result.separable ? kExitSeparable : kExitEntangled;
}

struct GenOptions {
    std::string kind;
    int parties = 0;
    std::vector<int> dims;
    std::uint64_t seed = 0;
    std::string out = "-";
};

int run_gen(const GenOptions& o) {
    std::optional<PureState> state;
    const bool have_dims = !o.dims.empty();
    const auto uniform_level = [&]() -> int {
        for (int d : o.dims)
            if (d != o.dims.front())
                throw ArgumentError("'" + o.kind + "' needs uniform dimensions");
        return o.dims.front();
    };
    const auto parties_arg = [&]() -> int {
        if (o.parties > 0) {
            if (have_dims && static_cast<int>(o.dims.size()) != o.parties)
                throw ArgumentError("--n and --dims disagree on the party count");
            return o.parties;
        }
        if (have_dims) return static_cast<int>(o.dims.size());
        throw ArgumentError("'" + o.kind + "' needs --n or --dims");
    };
    const auto profile_arg = [&]() -> DimensionProfile {
        if (!have_dims) throw ArgumentError("'" + o.kind + "' needs --dims");
        if (o.parties > 0 && static_cast<int>(o.dims.size()) != o.parties)
            throw ArgumentError("--n and --dims disagree on the party count");
        return DimensionProfile(o.dims);
    };

    if (o.kind == "cat") {
        state = cat_state(parties_arg(), have_dims ? uniform_level() : 2);
    } else if (o.kind == "w") {
        if (have_dims && uniform_level() != 2)
            throw ArgumentError("'w' states are defined on two-level parties");
        state = w_state(parties_arg());
    } else if (o.kind == "product") {
        // Basis product state: every party in its lowest level.
        const DimensionProfile profile = profile_arg();
        std::vector<Complex> amps(profile.total(), Complex{0.0, 0.0});
        amps[0] = Complex{1.0, 0.0};
        state = PureState(profile, std::move(amps));
    } else if (o.kind == "random") {
        state = random_state(profile_arg(), o.seed);
    } else if (o.kind == "random-product") {
        state = random_product_state(profile_arg(), o.seed);
    } else {
        throw ArgumentError("unknown state kind '" + o.kind +
                            "' (expected cat|w|product|random|random-product)");
    }

    emit_state(o.out, *state);
    return kExitSeparable;
}

struct BenchOptions {
    std::string family = "qubit";
    int n_min = 5;
    int n_max = 10;
    int fixed_n = 0;  // 0 = family sweep; otherwise sweep dk at this n
    int dk_min = 3;
    int dk_max = 8;
    int reps = 3;
    std::vector<std::string> criteria{"prop", "minors", "det"};
    std::size_t mem_limit_mb = 512;
    bool machine = false;
};

// Claimed per-cut cost exponent in the total dimension, used to normalize
// the party-count fit.
double claimed_exponent(Criterion c) {
    switch (c) {
        case Criterion::kProportionality: return 1.0;
        case Criterion::kMinors: return 2.0;
        case Criterion::kDeterminant: return 3.0;
        case Criterion::kRank: return 2.0;
    }
    throw ArgumentError("unknown criterion value");
}

int run_bench(const BenchOptions& o) {
    const std::vector<Criterion> criteria = parse_criteria_list(o.criteria);

    std::vector<CriterionSweep> sweeps;
    const bool family_mode = o.fixed_n == 0;
    if (family_mode) {
        FamilySweepSpec spec;
        if (o.family == "qubit") {
            spec.level = 2;
        } else if (o.family == "qutrit") {
            spec.level = 3;
        } else {
            throw ArgumentError("unknown dims family '" + o.family + "' (expected qubit|qutrit)");
        }
        spec.n_min = o.n_min;
        spec.n_max = o.n_max;
        spec.reps = o.reps;
        spec.criteria = criteria;
        spec.mem_limit_mb = o.mem_limit_mb;
        sweeps = run_family_sweep(spec);
    } else {
        FixedNSweepSpec spec;
        spec.parties = o.fixed_n;
        spec.dk_min = o.dk_min;
        spec.dk_max = o.dk_max;
        spec.reps = o.reps;
        spec.criteria = criteria;
        spec.mem_limit_mb = o.mem_limit_mb;
        sweeps = run_fixed_n_sweep(spec);
    }

    for (const CriterionSweep& sweep : sweeps) {
        const std::string name(criterion_name(sweep.criterion));
        for (const SweepPoint& p : sweep.points) {
            if (o.machine) {
                ordered_json j;
                j["record"] = "bench-point";
                j["criterion"] = name;
                j["parties"] = p.parties;
                j["dk"] = p.dk;
                j["total"] = p.total;
                j["complement"] = p.complement;
                j["ops"] = p.ops;
                j["seconds"] = p.seconds;
                std::cout << j.dump() << "\n";
            } else {
                std::printf("%-6s n=%-2d dk=%-2d d=%-8zu r=%-6zu ops=%-12llu t=%ss\n",
                            name.c_str(), p.parties, p.dk, p.total, p.complement,
                            static_cast<unsigned long long>(p.ops), sci(p.seconds).c_str());
            }
        }

        const bool multi = sweep.points.size() >= 2;
        const double slope_d = multi ? slope_vs_total(sweep) : 0.0;
        if (o.machine) {
            ordered_json j;
            j["record"] = "bench-fit";
            j["criterion"] = name;
            if (multi) {
                j["slope_total"] = slope_d;
                if (family_mode) {
                    const double p = claimed_exponent(sweep.criterion);
                    j["party_exponent"] = p;
                    j["party_slope"] = normalized_party_slope(sweep, p);
                } else {
                    j["slope_complement"] = slope_vs_complement(sweep);
                }
            }
            std::cout << j.dump() << "\n";
        } else if (multi) {
            std::printf("%-6s slope vs d: %.3f", name.c_str(), slope_d);
            if (family_mode) {
                const double p = claimed_exponent(sweep.criterion);
                std::printf(" | party slope (ops/d^%.0f): %.3f", p,
                            normalized_party_slope(sweep, p));
            } else {
                std::printf(" | slope vs r: %.3f", slope_vs_complement(sweep));
            }
            std::printf("\n");
        }
    }
    return kExitSeparable;
}

struct OracleOptions {
    std::string input = "-";
    bool machine = false;
};

int run_oracle(const OracleOptions& o) {
    const PureState state = load_state(o.input);
    const OracleReport rep = oracle_schmidt(state);

    if (o.machine) {
        for (const CutSpectrum& cut : rep.cuts) {
            ordered_json j;
            j["record"] = "oracle-cut";
            j["party"] = cut.party;
            j["singular_values"] = cut.singular_values;
            j["residual_ratio"] = cut.residual_ratio;
            j["schmidt_rank"] = cut.schmidt_rank;
            j["converged"] = cut.converged;
            std::cout << j.dump() << "\n";
        }
        ordered_json j;
        j["record"] = "oracle";
        j["separable"] = rep.separable;
        j["cutoff"] = rep.cutoff;
        j["min_margin"] = rep.min_margin;
        std::cout << j.dump() << "\n";
    } else {
        for (const CutSpectrum& cut : rep.cuts) {
            std::printf("party %d: rank %d, residual ratio %s, values", cut.party,
                        cut.schmidt_rank, sci(cut.residual_ratio).c_str());
            for (double s : cut.singular_values) std::printf(" %s", sci(s).c_str());
            std::printf("%s\n", cut.converged ? "" : " (fit not converged)");
        }
        std::printf("oracle: %s (margin %.3g)\n", rep.separable ? "separable" : "entangled",
                    rep.min_margin);
    }
    return rep.separable ? kExitSeparable : kExitEntangled;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Full-separability analysis of n-partite pure states"};
    app.require_subcommand(1);

    CheckOptions check;
    CLI::App* check_cmd = app.add_subcommand("check", "Decide separability of a state file");
    check_cmd->add_option("--input", check.input, "State file, or - for stdin");
    check_cmd->add_option("--criterion", check.criterion, "det|rank|minors|prop|all");
    check_cmd->add_option("--tol-rank", check.tol_rank, "Singular value ratio tolerance");
    check_cmd->add_option("--tol-det", check.tol_det, "Determinant magnitude tolerance");
    check_cmd->add_option("--tol-zero", check.tol_zero, "Entry magnitude treated as zero");
    check_cmd->add_flag("--machine", check.machine, "Emit NDJSON records");
    check_cmd->add_flag("--exhaustive", check.exhaustive,
                        "Scan every cut and entry instead of stopping at the first violation");

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a state file");
    gen_cmd->add_option("kind", gen.kind, "cat|w|product|random|random-product")->required();
    gen_cmd->add_option("--n", gen.parties, "Party count");
    gen_cmd->add_option("--dims", gen.dims, "Per-party dimensions");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--out", gen.out, "Output path, or - for stdout");

    BenchOptions bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Operation-count scaling sweeps");
    bench_cmd->add_option("--dims-family", bench.family, "qubit|qutrit");
    bench_cmd->add_option("--n-min", bench.n_min, "Smallest party count");
    bench_cmd->add_option("--n-max", bench.n_max, "Largest party count");
    bench_cmd->add_option("--fixed-n", bench.fixed_n,
                          "Sweep the per-party dimension at this party count instead");
    bench_cmd->add_option("--dk-min", bench.dk_min, "Smallest per-party dimension");
    bench_cmd->add_option("--dk-max", bench.dk_max, "Largest per-party dimension");
    bench_cmd->add_option("--reps", bench.reps, "Timing repetitions per point");
    bench_cmd->add_option("--criteria", bench.criteria, "Criteria to sweep");
    bench_cmd->add_option("--mem-limit-mb", bench.mem_limit_mb, "Working-set cap per point");
    bench_cmd->add_flag("--machine", bench.machine, "Emit NDJSON records");

    OracleOptions oracle;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Reference spectra for every cut");
    oracle_cmd->add_option("--input", oracle.input, "State file, or - for stdin");
    oracle_cmd->add_flag("--machine", oracle.machine, "Emit NDJSON records");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (check_cmd->parsed()) return run_check(check);
        if (gen_cmd->parsed()) return run_gen(gen);
        if (bench_cmd->parsed()) return run_bench(bench);
        if (oracle_cmd->parsed()) return run_oracle(oracle);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
