// Command-line front end: verification suites, scod tables, orbit posets,
// K-group basis labels, and the torus-model oracle check.
//
// Exit codes: 0 all checks pass, 1 at least one violation, 2 usage/guard
// errors.  Reports are deterministic for a fixed (config, seed); JSON output
// is byte-identical across thread counts (wall times appear in text only).

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "stag/checks.hpp"
#include "stag/export.hpp"

using namespace stag;
using nlohmann::json;

namespace {

const std::vector<std::string> kAllSuites = {
    "refl", "prod", "neg", "order", "codim", "torus", "identities", "ideal-degree"};

const std::vector<std::string> kDefaultTypes = {"A1", "A2", "A3", "A4",
                                                "B2", "B3", "B4", "C3",
                                                "C4", "D4", "F4", "G2"};

struct RunConfig {
    std::vector<std::string> types;
    std::string parabolic = "all"; // "all", "none", or "1,3"
    std::string suites = "all";
    std::string mode = "exhaustive";
    std::uint64_t sample_size = 100'000;
    std::optional<std::uint64_t> seed;
    int threads = 0; // 0 = auto
    std::string format = "text";
    std::string output;
    std::string element; // rerun filter, e.g. "1,2,1"
    std::uint64_t cap = kDefaultGroupCap;
    std::uint64_t torus_trials = 200;
};

std::vector<int> parse_index_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            const int v = std::stoi(tok);
            if (v < 1) throw std::out_of_range("");
            out.push_back(v - 1);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": bad index '" + tok + "'");
        }
    }
    return out;
}

std::vector<std::string> parse_suites(const std::string& s) {
    if (s == "all") return kAllSuites;
    std::vector<std::string> requested;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (std::find(kAllSuites.begin(), kAllSuites.end(), tok) == kAllSuites.end())
            throw UsageError("unknown suite '" + tok + "'");
        requested.push_back(tok);
    }
    if (requested.empty()) throw UsageError("--suite: empty suite list");
    // Canonical order regardless of how the user listed them.
    std::vector<std::string> ordered;
    for (const std::string& name : kAllSuites)
        if (std::find(requested.begin(), requested.end(), name) != requested.end())
            ordered.push_back(name);
    return ordered;
}

std::vector<std::vector<int>> parabolic_subsets(const RunConfig& cfg, int rank) {
    std::vector<std::vector<int>> out;
    if (cfg.parabolic == "all") {
        std::vector<unsigned> masks;
        for (unsigned m = 0; m < (1u << rank); ++m) masks.push_back(m);
        std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
            const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
            if (pa != pb) return pa < pb;
            return a < b;
        });
        for (const unsigned m : masks) {
            std::vector<int> subset;
            for (int j = 0; j < rank; ++j)
                if (m & (1u << j)) subset.push_back(j);
            out.push_back(std::move(subset));
        }
    } else if (cfg.parabolic == "none") {
        out.push_back({});
    } else {
        std::vector<int> subset = parse_index_list(cfg.parabolic, "--parabolic");
        for (const int j : subset)
            if (j >= rank)
                throw UsageError("--parabolic index " + std::to_string(j + 1) +
                                 " out of range for rank " + std::to_string(rank));
        out.push_back(std::move(subset));
    }
    return out;
}

std::string parabolic_label(const std::vector<int>& subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(subset[i] + 1);
    }
    return s + "}";
}

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("STAG_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream of(cfg.output, std::ios::binary);
    if (!of) throw UsageError("cannot open output file '" + cfg.output + "'");
    of << text;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteRun {
    std::string suite;
    std::string type;      // "-" for global suites
    std::string parabolic; // "-" when not applicable
    std::uint64_t instances = 0;
    std::vector<std::string> violations;
    std::map<std::string, std::string> extras;
    double wall = 0.0;
};

struct TypeContext {
    std::unique_ptr<RootSystem> rs;
    GroupEnumeration en;
    std::vector<std::vector<int>> parabolics;
};

std::string join_counts(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

std::string join_gaps(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

// Seeded random-walk pool for sampling mode; groups over the cap cannot be
// enumerated, so properties are smoke-checked on random elements instead.
std::vector<WeylElement> random_element_pool(const RootSystem& rs, std::uint64_t count,
                                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<WeylElement> pool;
    pool.reserve(count);
    const auto max_len = static_cast<std::uint64_t>(rs.positive_count());
    for (std::uint64_t i = 0; i < count; ++i) {
        WeylElement w = WeylElement::identity(rs);
        const std::uint64_t steps = rng() % (max_len + 1);
        for (std::uint64_t s = 0; s < steps; ++s) {
            std::vector<int> ascents;
            for (int j = 0; j < rs.rank(); ++j)
                if (w.right_ascent(j)) ascents.push_back(j);
            if (ascents.empty()) break;
            w = w.times_simple(ascents[rng() % ascents.size()]);
        }
        pool.push_back(std::move(w));
    }
    return pool;
}

int cmd_verify(RunConfig cfg) {
    if (cfg.types.empty()) cfg.types = kDefaultTypes;
    const std::vector<std::string> suites = parse_suites(cfg.suites);
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv")
        throw UsageError("--format must be text, json or csv");
    if (cfg.mode != "exhaustive" && cfg.mode != "sample")
        throw UsageError("--mode must be 'exhaustive' or 'sample'");
    const bool sample_mode = cfg.mode == "sample";
    if (sample_mode && !cfg.seed)
        throw UsageError("--mode sample requires an explicit --seed");
    const std::uint64_t seed = cfg.seed.value_or(42);
    checks::ElementFilter only;
    if (!cfg.element.empty()) only = parse_index_list(cfg.element, "--element");

    // Per-type context up front, so guard errors surface before any output.
    std::vector<TypeContext> ctx;
    for (const std::string& label : cfg.types) {
        TypeContext t;
        t.rs = std::make_unique<RootSystem>(RootSystem::build(label));
        if (sample_mode)
            t.en.elements = random_element_pool(*t.rs, cfg.sample_size, seed);
        else
            t.en = enumerate_group(*t.rs, cfg.cap);
        t.parabolics = parabolic_subsets(cfg, t.rs->rank());
        ctx.push_back(std::move(t));
    }

    // Deterministic task list; workers fill indexed slots, so the report is
    // identical for any thread count.
    std::vector<std::function<SuiteRun()>> tasks;
    for (std::size_t ti = 0; ti < ctx.size(); ++ti) {
        const TypeContext& t = ctx[ti];
        const RootSystem& rs = *t.rs;
        for (const std::string& suite : suites) {
            if (suite == "torus") continue; // global, appended once below
            if (suite == "order") {
                tasks.push_back([&rs, &t, suite, &cfg, seed, only] {
                    SuiteRun run{suite, rs.label(), "-", 0, {}, {}, 0};
                    auto res = checks::order_identity_sweep(rs, t.en, cfg.sample_size,
                                                            seed, only);
                    run.instances = res.instances;
                    run.violations = std::move(res.violations);
                    run.extras["sampled"] = res.sampled ? "true" : "false";
                    return run;
                });
                continue;
            }
            for (const std::vector<int>& subset : t.parabolics) {
                tasks.push_back([&rs, &t, suite, subset, &cfg, only] {
                    SuiteRun run{suite, rs.label(), parabolic_label(subset),
                                 0,     {},         {},
                                 0};
                    const ParabolicData p = make_parabolic(rs, subset);
                    if (suite == "refl") {
                        auto res = checks::tau_reflection_sweep(rs, t.en, p, only);
                        run.instances = res.instances;
                        run.violations = std::move(res.violations);
                    } else if (suite == "prod") {
                        auto res = checks::tau_orthogonality_sweep(rs, t.en, p, only);
                        run.instances = res.instances;
                        run.violations = std::move(res.violations);
                    } else if (suite == "neg") {
                        auto res =
                            checks::simple_root_negativity_sweep(rs, t.en, p, only);
                        run.instances = res.instances;
                        run.violations = std::move(res.violations);
                        run.extras["visited_by_length"] =
                            join_counts(res.visited_by_length);
                        run.extras["checks_by_length"] =
                            join_counts(res.checks_by_length);
                        run.extras["case_counts"] =
                            "base=" + std::to_string(res.case_counts[0]) +
                            " c1=" + std::to_string(res.case_counts[1]) +
                            " c2=" + std::to_string(res.case_counts[2]) +
                            " c3=" + std::to_string(res.case_counts[3]) +
                            " c4=" + std::to_string(res.case_counts[4]);
                    } else if (suite == "identities") {
                        auto res = checks::structural_identity_sweep(rs, t.en, p, only);
                        run.instances = res.instances;
                        run.violations = std::move(res.violations);
                    } else if (suite == "ideal-degree") {
                        auto res = checks::ideal_degree_sweep(rs, t.en, p, only);
                        run.instances = res.instances;
                        run.violations = std::move(res.violations);
                    } else if (suite == "codim") {
                        auto res = checks::scod_gap_suite(rs, p, cfg.cap);
                        run.instances = res.instances;
                        run.violations = std::move(res.violations);
                        run.extras["nodes"] = std::to_string(res.nodes);
                        run.extras["cover_gaps"] = join_gaps(res.cover_gaps);
                        run.extras["perversity"] = res.perversity_ok ? "ok" : "failed";
                    }
                    return run;
                });
            }
        }
    }
    if (std::find(suites.begin(), suites.end(), "torus") != suites.end()) {
        tasks.push_back([&cfg, seed] {
            SuiteRun run{"torus", "-", "-", 0, {}, {}, 0};
            auto res = checks::torus_equivalence_sweep(cfg.torus_trials, 5, 4, seed);
            run.instances = res.instances;
            run.violations = std::move(res.violations);
            return run;
        });
    }

    std::vector<SuiteRun> runs(tasks.size());
    const int threads = std::max(
        1, std::min<int>(resolve_threads(cfg.threads), static_cast<int>(tasks.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const auto t0 = std::chrono::steady_clock::now();
            runs[i] = tasks[i]();
            runs[i].wall =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
        }
    };
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    std::uint64_t total_violations = 0;
    for (const SuiteRun& run : runs) total_violations += run.violations.size();

    if (cfg.format == "json") {
        json jsuites = json::array();
        for (const SuiteRun& run : runs) {
            json j{{"suite", run.suite},
                   {"type", run.type},
                   {"parabolic", run.parabolic},
                   {"instances", run.instances},
                   {"violations", run.violations}};
            if (!run.extras.empty()) j["extras"] = run.extras;
            jsuites.push_back(std::move(j));
        }
        json cfg_echo{{"types", cfg.types},
                      {"parabolic", cfg.parabolic},
                      {"suites", cfg.suites},
                      {"mode", cfg.mode},
                      {"seed", seed},
                      {"sample_size", cfg.sample_size},
                      {"cap", cfg.cap}};
        // No wall-clock or thread-count fields: JSON reports are
        // byte-identical across runs and thread counts.
        json report{{"schema", 1},
                    {"command", "verify"},
                    {"config", cfg_echo},
                    {"suites", jsuites},
                    {"pass", total_violations == 0}};
        emit(cfg, report.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "suite,type,parabolic,instances,violations,witnesses\n";
        for (const SuiteRun& run : runs) {
            os << run.suite << ',' << run.type << ',' << run.parabolic << ','
               << run.instances << ',' << run.violations.size() << ',' << '"';
            for (std::size_t i = 0; i < run.violations.size(); ++i) {
                if (i) os << "; ";
                os << run.violations[i];
            }
            os << '"' << '\n';
        }
        emit(cfg, os.str());
    } else if (cfg.format == "text") {
        std::ostringstream os;
        os << std::left << std::setw(14) << "suite" << std::setw(6) << "type"
           << std::setw(14) << "parabolic" << std::right << std::setw(12)
           << "instances" << std::setw(12) << "violations" << std::setw(12)
           << "wall(s)" << '\n';
        double total_wall = 0;
        for (const SuiteRun& run : runs) {
            total_wall += run.wall;
            os << std::left << std::setw(14) << run.suite << std::setw(6) << run.type
               << std::setw(14) << run.parabolic << std::right << std::setw(12)
               << run.instances << std::setw(12) << run.violations.size()
               << std::setw(12) << std::fixed << std::setprecision(3) << run.wall
               << '\n';
        }
        for (const SuiteRun& run : runs)
            for (const auto& [key, value] : run.extras)
                if (key == "cover_gaps" || key == "case_counts")
                    os << "  # " << run.type << ' ' << run.parabolic << ' '
                       << run.suite << ' ' << key << ": " << value << '\n';
        if (total_violations) {
            os << "\nviolations:\n";
            for (const SuiteRun& run : runs)
                for (const std::string& v : run.violations)
                    os << "  [" << run.suite << "] " << v << '\n';
        }
        os << (total_violations == 0 ? "PASS" : "FAIL") << " (" << runs.size()
           << " suites, " << std::fixed << std::setprecision(3) << total_wall
           << "s)\n";
        emit(cfg, os.str());
    } else {
        throw UsageError("--format must be text, json or csv");
    }
    return total_violations == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// scod / poset / basis / torus-check

std::string dynkin_diagram(const RootSystem& rs) {
    std::ostringstream os;
    os << rs.label() << " simple roots (1-based, Bourbaki numbering):\n  ";
    const auto& a = rs.cartan();
    const int n = rs.rank();
    if (rs.lie_type() == LieType::D) {
        for (int i = 0; i < n - 1; ++i) os << (i + 1) << (i + 2 < n ? " - " : "");
        os << "\n  (node " << n << " also attached to node " << (n - 2) << ")";
    } else if (rs.lie_type() == LieType::E) {
        os << "1 - 3 - 4 - 5 - 6";
        if (n >= 7) os << " - 7";
        if (n >= 8) os << " - 8";
        os << "\n  (node 2 attached to node 4)";
    } else {
        for (int i = 0; i < n; ++i) {
            if (i) {
                const std::int64_t bond = a[i][i - 1] * a[i - 1][i];
                if (bond == 1) os << " - ";
                else {
                    const bool left_long = rs.symmetrizers()[i - 1] > rs.symmetrizers()[i];
                    if (bond == 2) os << (left_long ? " => " : " <= ");
                    else os << (left_long ? " =>> " : " <<= ");
                }
            }
            os << (i + 1);
        }
    }
    os << "\n  long roots: {";
    bool first = true;
    for (int i = 0; i < n; ++i)
        if (rs.symmetrizers()[i] > 1) {
            if (!first) os << ' ';
            os << (i + 1);
            first = false;
        }
    os << "}  (arrows point from long roots to short roots)\n";
    return os.str();
}

int cmd_scod(const RunConfig& cfg, bool show_diagram) {
    if (cfg.types.size() != 1)
        throw UsageError("scod: exactly one --type is required");
    RootSystem rs = RootSystem::build(cfg.types[0]);
    const auto subsets = parabolic_subsets(cfg, rs.rank());
    if (subsets.size() != 1)
        throw UsageError(
            "scod: one parabolic subset required (use --parabolic none or 1,2)");
    const ParabolicData p = make_parabolic(rs, subsets[0]);
    if (show_diagram) {
        if (cfg.format == "text" && cfg.output.empty())
            std::cout << dynkin_diagram(rs);
        else
            std::cerr << dynkin_diagram(rs);
    }
    const std::vector<ScodRow> rows = scod_table(rs, p, cfg.cap);
    if (cfg.format == "json") {
        emit(cfg, scod_table_json(rs, p, rows).dump(2) + "\n");
    } else if (cfg.format == "csv") {
        emit(cfg, scod_table_csv(rows));
    } else {
        std::ostringstream os;
        os << std::left << std::setw(20) << "min_word" << std::setw(26) << "max_word"
           << std::right << std::setw(8) << "length" << std::setw(8) << "codim"
           << std::setw(12) << "tauL.2rho" << std::setw(8) << "scod" << '\n';
        for (const ScodRow& r : rows)
            os << std::left << std::setw(20) << word_str(r.min_word) << std::setw(26)
               << word_str(r.max_word) << std::right << std::setw(8) << r.length
               << std::setw(8) << r.codim << std::setw(12) << r.tau_same_L_two_rho
               << std::setw(8) << r.scod << '\n';
        emit(cfg, os.str());
    }
    return 0;
}

int cmd_poset(const RunConfig& cfg) {
    if (cfg.types.size() != 1)
        throw UsageError("poset: exactly one --type is required");
    RootSystem rs = RootSystem::build(cfg.types[0]);
    const auto subsets = parabolic_subsets(cfg, rs.rank());
    if (subsets.size() != 1) throw UsageError("poset: one parabolic subset required");
    const ParabolicData p = make_parabolic(rs, subsets[0]);
    const OrbitPoset poset = OrbitPoset::build(rs, p, cfg.cap);
    const Perversity perv = build_perversity(poset);
    if (cfg.format == "json")
        emit(cfg, poset_json(poset, &perv).dump(2) + "\n");
    else
        emit(cfg, poset_dot(poset, &perv));
    return 0;
}

int cmd_basis(const RunConfig& cfg, const std::string& box_spec) {
    if (cfg.types.size() != 1)
        throw UsageError("basis: exactly one --type is required");
    RootSystem rs = RootSystem::build(cfg.types[0]);
    const auto subsets = parabolic_subsets(cfg, rs.rank());
    if (subsets.size() != 1) throw UsageError("basis: one parabolic subset required");
    const ParabolicData p = make_parabolic(rs, subsets[0]);

    std::int64_t lo = 0, hi = 0;
    try {
        const auto colon = box_spec.find(':');
        if (colon == std::string::npos) {
            lo = hi = std::stoll(box_spec);
        } else {
            lo = std::stoll(box_spec.substr(0, colon));
            hi = std::stoll(box_spec.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw UsageError("--box: expected 'lo:hi' or a single integer");
    }
    if (hi < lo) throw UsageError("--box: hi < lo");

    const OrbitPoset poset = OrbitPoset::build(rs, p, cfg.cap);
    const WeightBox box = WeightBox::cube(rs.rank(), lo, hi);
    const std::vector<BasisLabel> labels = enumerate_basis_labels(poset, box);
    if (cfg.format == "json")
        emit(cfg, basis_labels_json(poset, labels).dump(2) + "\n");
    else
        emit(cfg, basis_labels_csv(poset, labels));
    return 0;
}

int cmd_torus_check(const RunConfig& cfg, int n, int m, int rank) {
    const std::uint64_t seed = cfg.seed.value_or(42);
    const auto res =
        checks::torus_fixed_model_sweep(n, m, rank, cfg.torus_trials, seed);
    if (cfg.format == "json") {
        json report{{"schema", 1},
                    {"command", "torus-check"},
                    {"n", n},
                    {"m", m},
                    {"rank", rank},
                    {"trials", res.instances},
                    {"seed", seed},
                    {"violations", res.violations},
                    {"records", torus_trials_json(res)},
                    {"pass", res.ok()}};
        emit(cfg, report.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "torus-check n=" << n << " m=" << m << " rank=" << rank
           << " trials=" << res.instances << " seed=" << seed << '\n';
        for (const std::string& v : res.violations) os << "  violation: " << v << '\n';
        os << (res.ok() ? "PASS" : "FAIL") << " ("
           << (res.instances - res.violations.size()) << '/' << res.instances
           << " trials)\n";
        emit(cfg, os.str());
    }
    return res.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert-stratum staggered-codimension toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    int torus_n = 1, torus_m = 0, torus_rank = 3;
    bool show_diagram = false;
    std::string box_spec = "0:0";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--type", cfg.types, "Type labels like A2, F4");
        sub->add_option("--parabolic", cfg.parabolic,
                        "'all', 'none', or 1-based simple-root indices like 1,3");
        sub->add_option("--format", cfg.format, "text | json | csv");
        sub->add_option("--output", cfg.output, "Write the report to a file");
        sub->add_option("--cap", cfg.cap, "Group enumeration cap");
    };

    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    add_common(verify);
    verify->add_option("--suite", cfg.suites,
                       "'all' or comma list of refl,prod,neg,order,codim,torus,"
                       "identities,ideal-degree");
    verify->add_option("--mode", cfg.mode, "exhaustive | sample");
    verify->add_option("--sample-size", cfg.sample_size,
                       "Accepted samples per sampled sweep");
    verify->add_option("--seed", cfg.seed, "RNG seed (required in sample mode)");
    verify->add_option("--threads", cfg.threads,
                       "Worker threads (default: STAG_THREADS or hardware)");
    verify->add_option("--element", cfg.element,
                       "Rerun a single element, word like 1,2,1");
    verify->add_option("--torus-trials", cfg.torus_trials,
                       "Trial count for the torus suite");

    CLI::App* scod_cmd = app.add_subcommand("scod", "Staggered codimension table");
    add_common(scod_cmd);
    scod_cmd->add_flag("--show-diagram", show_diagram,
                       "Print the Dynkin diagram with the node numbering");

    CLI::App* poset_cmd =
        app.add_subcommand("poset", "Orbit-closure poset (DOT or JSON)");
    add_common(poset_cmd);

    CLI::App* basis_cmd = app.add_subcommand("basis", "K-group basis labels");
    add_common(basis_cmd);
    basis_cmd->add_option("--box", box_spec,
                          "Weight box in fundamental-weight coordinates, 'lo:hi'");

    CLI::App* torus_cmd =
        app.add_subcommand("torus-check", "Torus-model oracle equivalence");
    torus_cmd->add_option("--n", torus_n, "Ambient dimension")->required();
    torus_cmd->add_option("--m", torus_m, "Subspace dimension")->required();
    torus_cmd->add_option("--rank", torus_rank, "Weight lattice rank");
    torus_cmd->add_option("--trials", cfg.torus_trials, "Number of random models");
    torus_cmd->add_option("--seed", cfg.seed, "RNG seed");
    torus_cmd->add_option("--format", cfg.format, "text | json");
    torus_cmd->add_option("--output", cfg.output, "Write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    // Table-style commands describe a single quotient; default to the Borel
    // case when no parabolic is named.
    auto default_to_borel = [&cfg](CLI::App* sub) {
        if (sub->count("--parabolic") == 0) cfg.parabolic = "none";
    };

    try {
        if (verify->parsed()) return cmd_verify(cfg);
        if (scod_cmd->parsed()) {
            default_to_borel(scod_cmd);
            return cmd_scod(cfg, show_diagram);
        }
        if (poset_cmd->parsed()) {
            default_to_borel(poset_cmd);
            return cmd_poset(cfg);
        }
        if (basis_cmd->parsed()) {
            default_to_borel(basis_cmd);
            return cmd_basis(cfg, box_spec);
        }
        if (torus_cmd->parsed())
            return cmd_torus_check(cfg, torus_n, torus_m, torus_rank);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
