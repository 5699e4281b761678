// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: warpbench_acceptance [--only 1,3,7] [--out DIR] [--parallel N]

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <Eigen/LU>

#include <warpbench/format.hpp>
#include <warpbench/harness.hpp>

#include "oracles.hpp"

namespace {

using namespace warpbench;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double pi = std::numbers::pi;
constexpr std::array<double, 5> ab_grid{0.2, 0.5, 1.0, 2.0, 5.0};

struct Outcome
{
    bool pass = false;
    std::vector<std::string> details;
};

struct Context
{
    fs::path out;
    int parallel = 1;
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v)
{
    std::ostringstream s;
    s.precision(4);
    s << v;
    return s.str();
}

Point random_point(std::mt19937_64& gen, int dim)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Point p(dim);
    for (int i = 0; i < dim; ++i) p[i] = u(gen);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentConfig config_file(const std::string& name)
{
    return load_config(fs::path(WARPBENCH_CONFIG_DIR) / name);
}

/// Runs a config through the streaming pipeline and returns its rows.
std::vector<RunRow> run_pipeline(const ExperimentConfig& cfg, const fs::path& dir, int parallel)
{
    fs::remove_all(dir);
    fs::create_directories(dir);
    NormalizationAccumulator norms;
    execute_to_file(expand_matrix(cfg), ExecuteOptions{parallel, {}, {}}, dir / "runs.jsonl", [&](const RunRecord& r) {
        norms.add(r);
    });
    auto rows = compute_rows(dir / "runs.jsonl", norms.finish());
    emit_runs_csv(rows, dir / "runs.csv");
    return rows;
}

/// Mean final archive HV per (instance, algorithm).
std::map<std::pair<std::string, std::string>, double> mean_archive_hv(const std::vector<RunRow>& rows)
{
    std::map<std::pair<std::string, std::string>, std::pair<double, int>> acc;
    for (const auto& r : rows) {
        if (!r.ok()) continue;
        auto& [sum, n] = acc[{r.search, r.algorithm}];
        sum += r.final_archive_hv;
        ++n;
    }
    std::map<std::pair<std::string, std::string>, double> out;
    for (const auto& [k, v] : acc) out[k] = v.first / v.second;
    return out;
}

std::size_t error_rows(const std::vector<RunRow>& rows)
{
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RunRow& r) { return !r.ok(); }));
}

// 1. forward(inverse(y)) == y within 1e-9 per coordinate.
Outcome bijection(const Context&)
{
    const auto t0 = Clock::now();
    Outcome o;
    std::mt19937_64 gen(1);
    long checked = 0;
    long misses = 0;
    double worst = 0;
    std::string worst_where;
    long reverse_misses = 0;

    auto check = [&](const TransformSpec& t, int dim) {
        for (int k = 0; k < 1000; ++k) {
            const Point y = random_point(gen, dim);
            const Point err = (apply_forward(t, apply_inverse(t, y)) - y).cwiseAbs();
            for (int i = 0; i < dim; ++i) {
                ++checked;
                if (err[i] > 1e-9) ++misses;
                if (err[i] > worst) {
                    worst = err[i];
                    worst_where = t.descriptor() + " d=" + std::to_string(dim);
                }
            }
            const Point back = (apply_inverse(t, apply_forward(t, y)) - y).cwiseAbs();
            reverse_misses += (back.array() > 1e-9).count();
        }
    };
    for (int dim : {2, 10}) {
        for (double a : ab_grid)
            for (double b : ab_grid) check(TransformSpec::beta_cdf(a, b), dim);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) check(TransformSpec::sphered_rotation_seeded(dim, seed), dim);
    }
    const double elapsed = seconds_since(t0);
    o.pass = misses == 0 && elapsed < 10;
    o.details.push_back(std::to_string(misses) + " of " + std::to_string(checked) +
                        " coordinates exceed 1e-9; worst " + fmt(worst) + " at " + worst_where);
    o.details.push_back("inverse(forward(x)) misses (diagnostic): " + std::to_string(reverse_misses));
    o.details.push_back("runtime " + fmt(elapsed) + " s (limit 10 s)");
    return o;
}

// 2. Closed forms within 1e-12; inverse roundtrip within 1e-9.
Outcome special_functions(const Context&)
{
    Outcome o;
    double worst_closed = 0;
    for (double s : ab_grid) {
        for (int i = 1; i < 100; ++i) {
            const double x = i / 100.0;
            worst_closed = std::max(worst_closed, std::abs(reg_inc_beta(x, s, 1.0) - std::pow(x, s)));
            worst_closed = std::max(worst_closed, std::abs(reg_inc_beta(x, 1.0, s) - (1 - std::pow(1 - x, s))));
        }
        worst_closed = std::max(worst_closed, std::abs(reg_inc_beta(0.5, s, s) - 0.5));
    }
    for (int i = 1; i < 200; ++i) {
        const double x = i / 200.0;
        worst_closed = std::max(worst_closed, std::abs(reg_inc_beta(x, 0.5, 0.5) - 2 / pi * std::asin(std::sqrt(x))));
    }

    auto roundtrip_misses = [](int samples, std::uint64_t seed, double& worst) {
        std::mt19937_64 gen(seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_real_distribution<double> shape(0.2, 5.0);
        int misses = 0;
        for (int k = 0; k < samples; ++k) {
            const double x = unit(gen);
            const double a = shape(gen);
            const double b = shape(gen);
            const double err = std::abs(inv_reg_inc_beta(reg_inc_beta(x, a, b), a, b) - x);
            worst = std::max(worst, err);
            if (err > 1e-9) ++misses;
        }
        return misses;
    };
    double worst_rt = 0;
    const int misses = roundtrip_misses(1000, 2, worst_rt);
    double worst_large = 0;
    const int misses_large = roundtrip_misses(100000, 3, worst_large);

    o.pass = worst_closed <= 1e-12 && misses == 0;
    o.details.push_back("closed forms: max error " + fmt(worst_closed) + " (tolerance 1e-12)");
    o.details.push_back("roundtrip, 1000 random (x, alpha, beta): " + std::to_string(misses) + " exceed 1e-9, worst " +
                        fmt(worst_rt));
    o.details.push_back("roundtrip, 1e5 random (diagnostic): " + std::to_string(misses_large) +
                        " exceed 1e-9, worst " + fmt(worst_large));
    return o;
}

// 3. Shell preservation, signed permutations at right angles, density change.
Outcome rotation_structure(const Context&)
{
    Outcome o;
    std::mt19937_64 gen(3);
    double worst_shell = 0;
    auto shell = [](const Point& x) { return (2 * x.array() - 1).abs().maxCoeff(); };
    for (int dim : {2, 10}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const auto t = TransformSpec::sphered_rotation_seeded(dim, seed);
            for (int k = 0; k < 1000; ++k) {
                const Point x = random_point(gen, dim);
                worst_shell = std::max(worst_shell, std::abs(shell(apply_forward(t, x)) - shell(x)));
            }
        }
    }

    double worst_perm = 0;
    auto check_permutation = [&](const Matrix& exact, const TransformSpec& t) {
        for (int k = 0; k < 1000; ++k) {
            const Point x = random_point(gen, static_cast<int>(exact.rows()));
            const Point expected = (exact * (2 * x.array() - 1).matrix()).array().matrix();
            const Point got = (2 * apply_forward(t, x).array() - 1).matrix();
            worst_perm = std::max(worst_perm, (got - expected).cwiseAbs().maxCoeff());
        }
    };
    for (int q = 0; q < 4; ++q) {
        const auto t = TransformSpec::sphered_rotation_angle(q * pi / 2);
        check_permutation(t.rotation().matrix().array().round().matrix(), t);
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        std::mt19937_64 pg(seed);
        std::vector<int> perm(10);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), pg);
        Matrix p = Matrix::Zero(10, 10);
        for (int i = 0; i < 10; ++i) p(i, perm[i]) = (pg() & 1) ? 1.0 : -1.0;
        if (p.determinant() < 0) p.row(0) *= -1;
        check_permutation(p, TransformSpec::sphered_rotation(RotationMatrix(p)));
    }

    double worst_right = 0;
    for (int q = 0; q <= 4; ++q) {
        worst_right = std::max(worst_right, density_change(TransformSpec::sphered_rotation_angle(q * pi / 2), 500, 2, 0));
    }
    const auto eighth = TransformSpec::sphered_rotation_angle(pi / 4);
    const double at_eighth = density_change(eighth, 500, 2, 0);
    double mean_eighth = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) mean_eighth += density_change(eighth, 500, 2, seed) / 20;

    o.pass = worst_shell <= 1e-12 && worst_perm <= 1e-12 && worst_right <= 1e-12 && at_eighth > 0.01;
    o.details.push_back("shell preservation: max error " + fmt(worst_shell));
    o.details.push_back("right-angle signed permutation: max error " + fmt(worst_perm));
    o.details.push_back("density change at k*pi/2: max " + fmt(worst_right) + "; at pi/4: " + fmt(at_eighth) +
                        " (seed 0, n=500), 20-seed mean " + fmt(mean_eighth));
    return o;
}

// 4. Beta-CDF objective warps preserve every dominance relation.
Outcome dominance_preservation(const Context&)
{
    Outcome o;
    std::mt19937_64 gen(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::pair<Objectives, Objectives>> pairs;
    for (int k = 0; k < 100000; ++k) pairs.emplace_back(Objectives(u(gen), u(gen)), Objectives(u(gen), u(gen)));
    auto relation = [](const Objectives& a, const Objectives& b) {
        return (dominates(a, b) ? 1 : 0) | (dominates(b, a) ? 2 : 0) | (a == b ? 4 : 0);
    };
    long changed = 0;
    for (double a : ab_grid) {
        for (double b : ab_grid) {
            const auto t = TransformSpec::beta_cdf(a, b);
            for (const auto& [p, q] : pairs) {
                if (relation(p, q) != relation(warp_objectives(t, p), warp_objectives(t, q))) ++changed;
            }
        }
    }
    o.pass = changed == 0;
    o.details.push_back(std::to_string(changed) + " of " + std::to_string(25 * pairs.size()) + " relations changed");
    return o;
}

// 5. Hypervolume and non-dominated sorting against oracles.
Outcome indicator_oracles(const Context&)
{
    Outcome o;
    const Objectives ref(2, 2);
    const bool hand = hypervolume_2d<double>({Objectives(1, 1)}, ref) == 1.0 &&
                      hypervolume_2d<double>({Objectives(0, 1), Objectives(1, 0)}, ref) == 3.0 &&
                      hypervolume_2d<double>({Objectives(0, 1), Objectives(0.5, 0.5), Objectives(1, 0)}, ref) == 3.25;

    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int mc_fail = 0;
    double worst_z = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Objectives> pts;
        for (int i = 0; i < 3 + 2 * trial; ++i) pts.emplace_back(u(gen), u(gen));
        const Objectives r(1.1, 1.1);
        constexpr int samples = 1'000'000;
        long hits = 0;
        for (int s = 0; s < samples; ++s) {
            const Objectives q(r[0] * u(gen), r[1] * u(gen));
            hits += std::any_of(pts.begin(), pts.end(), [&](const Objectives& p) { return p[0] <= q[0] && p[1] <= q[1]; });
        }
        const double p = static_cast<double>(hits) / samples;
        const double se = r.prod() * std::sqrt(p * (1 - p) / samples);
        const double z = std::abs(hypervolume_2d<double>(pts, r) - r.prod() * p) / se;
        worst_z = std::max(worst_z, z);
        if (z > 3) ++mc_fail;
    }

    int nds_fail = 0;
    std::uniform_int_distribution<int> lattice(0, 15);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Objectives> pts;
        for (int i = 0; i < 200; ++i) {
            if (trial % 2 == 0) pts.emplace_back(u(gen), u(gen));
            else pts.emplace_back(lattice(gen), lattice(gen));
        }
        auto fronts = fast_nondominated_sort(pts);
        for (auto& f : fronts) std::sort(f.begin(), f.end());
        if (fronts != oracle::brute_force_fronts(pts)) ++nds_fail;
    }
    o.pass = hand && mc_fail == 0 && nds_fail == 0;
    o.details.push_back(std::string("hand-computed sets: ") + (hand ? "exact" : "MISMATCH"));
    o.details.push_back("Monte-Carlo: " + std::to_string(mc_fail) + "/20 fronts beyond 3 SE (max " + fmt(worst_z) + " SE)");
    o.details.push_back("non-dominated sort vs O(n^3) oracle: " + std::to_string(nds_fail) + "/20 sets differ");
    return o;
}

// 6. Random search ignores objective transforms; rotations barely move its HV.
Outcome random_search_invariance(const Context& ctx)
{
    const auto t0 = Clock::now();
    Outcome o;
    const ProblemId dtlz1{Suite::dtlz, 1, 2};
    const AlgoConfig cfg{Algorithm::random_search, 100, 5000, 12345};
    const auto base = run_random_search(ProblemInstance(dtlz1, TransformSpec::identity(), TransformSpec::identity()), cfg);
    int differing = 0;
    for (double a : ab_grid) {
        for (double b : ab_grid) {
            const auto r = run_random_search(ProblemInstance(dtlz1, TransformSpec::identity(), TransformSpec::beta_cdf(a, b)), cfg);
            bool same = r.log.size() == base.log.size();
            for (std::size_t i = 0; same && i < r.log.size(); ++i) same = r.log[i].f_original == base.log[i].f_original;
            if (!same) ++differing;
        }
    }

    ExperimentConfig exp = config_file("rotation-dtlz1.json");
    exp.algorithms = {AlgoTemplate{Algorithm::random_search, 100, 5000}};
    const auto rows = run_pipeline(exp, ctx.out / "c6", ctx.parallel);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0;
    std::string per_instance;
    for (const auto& [key, hv] : mean_archive_hv(rows)) {
        lo = std::min(lo, hv);
        hi = std::max(hi, hv);
        per_instance += " " + key.first + "=" + fmt(hv);
    }
    const double spread = (hi - lo) / hi;
    const double elapsed = seconds_since(t0);
    o.pass = differing == 0 && spread < 0.03 && error_rows(rows) == 0 && elapsed < 120;
    o.details.push_back("objective transforms with a different f_original log: " + std::to_string(differing) + "/25");
    o.details.push_back("rotation instances mean archive HV:" + per_instance);
    o.details.push_back("relative spread (max-min)/max = " + fmt(spread) + " (limit 0.03)");
    o.details.push_back("runtime " + fmt(elapsed) + " s (limit 120 s)");
    return o;
}

// 7. Rotated dtlz1-d2: MOEA/D below random search; every EA below its identity instance.
Outcome rotation_trend(const Context& ctx)
{
    const auto t0 = Clock::now();
    Outcome o;
    const auto rows = run_pipeline(config_file("rotation-dtlz1.json"), ctx.out / "c7", ctx.parallel);
    const auto hv = mean_archive_hv(rows);
    bool moead_below = true;
    bool all_lose = true;
    for (int seed = 1; seed <= 4; ++seed) {
        const std::string s = "rot-seed" + std::to_string(seed);
        const double moead = hv.at({s, "moead"});
        const double random = hv.at({s, "random_search"});
        moead_below = moead_below && moead < random;
        std::string line = s + ": random_search " + fmt(random);
        for (const std::string a : {"nsga2", "smsemoa", "moead"}) {
            const double rot = hv.at({s, a});
            const double id = hv.at({"id", a});
            all_lose = all_lose && rot < id;
            line += ", " + a + " " + fmt(rot) + " (id " + fmt(id) + ")";
        }
        o.details.push_back(line);
    }
    const double elapsed = seconds_since(t0);
    o.pass = moead_below && all_lose && error_rows(rows) == 0 && elapsed < 15 * 60;
    o.details.push_back(std::string("MOEA/D below random search on every rotation: ") + (moead_below ? "yes" : "no"));
    o.details.push_back(std::string("every EA below its identity instance on every rotation: ") + (all_lose ? "yes" : "no"));
    o.details.push_back("runtime " + fmt(elapsed) + " s (limit 900 s)");
    return o;
}

// 8. zdt3-d2 Beta-CDF grid: random search drops >= 10% at (0.2, 5); NSGA-II drops less.
Outcome beta_trend(const Context& ctx)
{
    const auto t0 = Clock::now();
    Outcome o;
    const auto rows = run_pipeline(config_file("beta-zdt3.json"), ctx.out / "c8", ctx.parallel);
    auto drop = [&](const std::string& algo) {
        const Table t = report_ab_heatmap(rows, "zdt3-d2", algo);
        const double base = std::stod(t.rows[2][3]);
        const double cell = std::stod(t.rows[0][5]);
        o.details.push_back(algo + ": cell(0.2,5) " + fmt(cell) + " vs cell(1,1) " + fmt(base));
        return (base - cell) / base;
    };
    const double random = drop("random_search");
    const double nsga2 = drop("nsga2");
    const double elapsed = seconds_since(t0);
    o.pass = random >= 0.10 && nsga2 < random && error_rows(rows) == 0 && elapsed < 30 * 60;
    o.details.push_back("relative drop: random_search " + fmt(random) + " (need >= 0.1), nsga2 " + fmt(nsga2));
    o.details.push_back("runtime " + fmt(elapsed) + " s (limit 1800 s)");
    return o;
}

// 9. Identity-only relative HV is 1; parallelism does not change any output byte.
Outcome aggregation_consistency(const Context& ctx)
{
    Outcome o;
    ExperimentConfig identity = config_file("matrix-d2.json");
    identity.search_transforms = {nlohmann::json{{"kind", "identity"}}};
    identity.objective_transforms = {nlohmann::json{{"kind", "identity"}}};
    identity.repetitions = 3;
    const auto rows = run_pipeline(identity, ctx.out / "c9-identity", ctx.parallel);
    const Table rel = report_relative_hv(rows);
    double worst = 0;
    bool gaps = rel.rows.empty();
    for (const auto& row : rel.rows) {
        if (row[6] == missing_cell) {
            gaps = true;
            continue;
        }
        worst = std::max(worst, std::abs(std::stod(row[6]) - 1.0));
    }

    const ExperimentConfig batch = config_file("quick.json");
    std::vector<std::string> outputs[2];
    int slot = 0;
    for (int parallel : {1, 8}) {
        const fs::path dir = ctx.out / ("c9-parallel-" + std::to_string(parallel));
        const auto r = run_pipeline(batch, dir, parallel);
        outputs[slot].push_back(slurp(dir / "runs.jsonl"));
        outputs[slot].push_back(slurp(dir / "runs.csv"));
        outputs[slot].push_back(report_relative_hv(r).to_csv());
        outputs[slot].push_back(report_ab_heatmap(r, "zdt1-d2", "nsga2").to_csv());
        outputs[slot].push_back(report_hv_over_time(r, "dtlz2-d2").to_csv());
        ++slot;
    }
    const bool identical = outputs[0] == outputs[1];
    o.pass = !gaps && worst <= 1e-12 && identical;
    o.details.push_back("identity-only relative HV: max |value - 1| = " + fmt(worst) + " over " +
                        std::to_string(rel.rows.size()) + " rows" + (gaps ? ", with gaps" : ""));
    o.details.push_back(std::string("parallelism 1 vs 8 (runs.jsonl, runs.csv, three reports): ") +
                        (identical ? "byte-identical" : "DIFFERENT"));
    return o;
}

// 10. Full d=2 matrix under 4 hours with gap-free reports.
Outcome full_matrix(const Context& ctx)
{
    const auto t0 = Clock::now();
    Outcome o;
    const ExperimentConfig cfg = config_file("matrix-d2.json");
    const auto jobs = expand_matrix(cfg);
    const fs::path dir = ctx.out / "c10";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::size_t step = std::max<std::size_t>(1, jobs.size() / 10);
    ExecuteOptions exec{ctx.parallel, {}, [&](std::size_t done, std::size_t total) {
                            if (done % step == 0) {
                                std::cout << "    [10] " << done << "/" << total << " runs, " << fmt(seconds_since(t0))
                                          << " s" << std::endl;
                            }
                        }};
    NormalizationAccumulator norms;
    execute_to_file(jobs, exec, dir / "runs.jsonl", [&](const RunRecord& r) { norms.add(r); });
    const auto rows = compute_rows(dir / "runs.jsonl", norms.finish());
    emit_runs_csv(rows, dir / "runs.csv");
    fs::remove(dir / "runs.jsonl");

    std::size_t heatmaps = 0;
    std::size_t heatmap_gaps = 0;
    std::set<std::tuple<std::string, std::string, int>> configs;
    for (const auto& r : rows) configs.insert({r.problem, r.algorithm, r.population});
    fs::create_directories(dir / "reports");
    for (const auto& [problem, algo, pop] : configs) {
        for (auto space : {TransformSpace::search, TransformSpace::objective}) {
            const Table t = report_ab_heatmap(rows, problem, algo, pop, space);
            ++heatmaps;
            for (const auto& row : t.rows) heatmap_gaps += static_cast<std::size_t>(std::count(row.begin(), row.end(), missing_cell));
            std::ofstream(dir / "reports" /
                          ("heatmap-" + problem + "-" + algo + "-p" + std::to_string(pop) +
                           (space == TransformSpace::search ? "-search" : "-objective") + ".csv"))
                << t.to_csv();
        }
    }

    const Table rel = report_relative_hv(rows);
    std::ofstream(dir / "reports" / "relative.csv") << rel.to_csv();
    std::size_t rel_gaps = 0;
    std::set<std::string> families;
    for (const auto& row : rel.rows) {
        rel_gaps += static_cast<std::size_t>(std::count(row.begin(), row.end(), missing_cell));
        families.insert(row[5]);
    }

    std::size_t series_gaps = 0;
    std::set<std::string> problems;
    for (const auto& r : rows) problems.insert(r.problem);
    for (const auto& p : problems) {
        const Table t = report_hv_over_time(rows, p);
        std::ofstream(dir / "reports" / ("over-time-" + p + ".csv")) << t.to_csv();
        std::set<std::tuple<std::string, std::string, std::string>> curves;
        for (const auto& row : t.rows) {
            if (row[3] == "mean") curves.insert({row[0], row[1], row[2]});
        }
        std::set<std::tuple<std::string, std::string, std::string>> expected;
        for (const auto& r : rows) {
            if (r.problem == p) expected.insert({r.instance, r.algorithm, std::to_string(r.population)});
        }
        if (curves != expected) ++series_gaps;
    }

    const double elapsed = seconds_since(t0);
    const std::size_t errors = error_rows(rows);
    o.pass = errors == 0 && heatmap_gaps == 0 && rel_gaps == 0 && families.size() == 4 && series_gaps == 0 &&
             elapsed < 4 * 3600;
    o.details.push_back(std::to_string(rows.size()) + " runs, " + std::to_string(errors) + " error rows, " +
                        std::to_string(ctx.parallel) + " worker(s)");
    o.details.push_back("ab-heatmap: " + std::to_string(heatmaps) + " tables, " + std::to_string(heatmap_gaps) + " gap cells");
    o.details.push_back("relative: " + std::to_string(rel.rows.size()) + " rows, " + std::to_string(rel_gaps) +
                        " gap cells, " + std::to_string(families.size()) + " families");
    o.details.push_back("over-time: " + std::to_string(problems.size()) + " problems, " + std::to_string(series_gaps) +
                        " with missing curves");
    o.details.push_back("runtime " + fmt(elapsed) + " s (limit 14400 s); reports in " + (dir / "reports").string());
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"warpbench acceptance suite"};
    std::vector<int> only;
    Context ctx;
    std::string out;
    ctx.parallel = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    app.add_option("--only", only, "Criteria to run (default: all)")->delimiter(',');
    app.add_option("--out", out, "Scratch directory for run outputs");
    app.add_option("--parallel", ctx.parallel, "Worker threads for experiment runs");
    CLI11_PARSE(app, argc, argv);

    if (out.empty()) {
        const char* env = std::getenv(output_dir_env);
        ctx.out = env && *env ? fs::path(env) / "acceptance" : fs::temp_directory_path() / "warpbench-acceptance";
    } else {
        ctx.out = out;
    }
    fs::create_directories(ctx.out);

    const std::vector<std::pair<std::string, std::function<Outcome(const Context&)>>> criteria{
        {"bijection suite", bijection},
        {"special-function suite", special_functions},
        {"sphered-rotation structure", rotation_structure},
        {"dominance preservation", dominance_preservation},
        {"indicator oracles", indicator_oracles},
        {"random-search invariances", random_search_invariance},
        {"rotation trend on dtlz1-d2", rotation_trend},
        {"beta-cdf trend on zdt3-d2", beta_trend},
        {"aggregation consistency", aggregation_consistency},
        {"full d=2 matrix", full_matrix},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        const auto t0 = Clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second(ctx);
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.details.push_back(std::string("exception: ") + e.what());
        }
        failed += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << criteria[i].first << " ("
                  << fmt(seconds_since(t0)) << " s)\n";
        for (const auto& d : outcome.details) std::cout << "      " << d << "\n";
        std::cout.flush();
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
