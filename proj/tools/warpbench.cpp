#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <warpbench/format.hpp>
#include <warpbench/harness.hpp>

namespace {

namespace fs = std::filesystem;
using namespace warpbench;

constexpr int exit_config = 1;
constexpr int exit_runtime = 2;

struct RunOptions
{
    std::string config;
    int parallel = 1;
    std::string out;
    std::optional<int> repetitions;
    std::optional<std::uint64_t> base_seed;
    bool no_raw_logs = false;
};

struct ReportOptions
{
    std::string in;
    std::string kind;
    std::string problem;
    std::string algo;
    std::string transform;
    std::optional<int> population;
    std::string space = "search";
    std::string out;
};

struct DensityOptions
{
    std::string transform;
    int n = 500;
    int dim = 2;
    std::uint64_t seed = 0;
};

fs::path default_output_dir(const ExperimentConfig& cfg)
{
    if (!cfg.output_dir.empty()) return cfg.output_dir;
    if (const char* env = std::getenv(output_dir_env); env && *env) return env;
    return "warpbench-out";
}

std::vector<RunRow> rows_from_records(const fs::path& records, const NormalizationSet& norms)
{
    for (const auto& [problem, why] : norms.failures) {
        std::cerr << "warning: no normalization for " << problem << ": " << why << '\n';
    }
    return compute_rows(records, norms);
}

std::vector<RunRow> rows_from_records(const fs::path& records)
{
    return rows_from_records(records, compute_normalizations(records));
}

int cmd_run(const RunOptions& o)
{
    ExperimentConfig cfg = load_config(o.config);
    if (!o.out.empty()) cfg.output_dir = o.out;
    if (o.repetitions) {
        if (*o.repetitions < 1) throw config_error("--repetitions must be at least 1");
        cfg.repetitions = *o.repetitions;
    }
    if (o.base_seed) cfg.base_seed = *o.base_seed;
    if (o.parallel < 1) throw config_error("--parallel must be at least 1");

    const fs::path out = default_output_dir(cfg);
    const auto jobs = expand_matrix(cfg);
    std::cerr << jobs.size() << " jobs -> " << out.string() << '\n';

    fs::create_directories(out);
    ExecuteOptions exec{o.parallel, {}, {}};
    if (!o.no_raw_logs) exec.log_dir = out / "logs";
    const std::size_t step = std::max<std::size_t>(1, jobs.size() / 20);
    exec.progress = [step](std::size_t done, std::size_t total) {
        if (done % step == 0 || done == total) std::cerr << "  " << done << "/" << total << " runs\n";
    };
    NormalizationAccumulator norms;
    execute_to_file(jobs, exec, out / "runs.jsonl", [&](const RunRecord& r) { norms.add(r); });

    const auto rows = rows_from_records(out / "runs.jsonl", norms.finish());
    emit_runs_csv(rows, out / "runs.csv");

    std::size_t failed = 0;
    for (const auto& r : rows) failed += r.ok() ? 0 : 1;
    if (failed > 0) std::cerr << "warning: " << failed << " of " << rows.size() << " runs recorded an error\n";
    std::cerr << "wrote " << (out / "runs.csv").string() << '\n';
    return 0;
}

int cmd_report(const ReportOptions& o)
{
    const auto rows = rows_from_records(fs::path(o.in) / "runs.jsonl");
    auto require = [&](const std::string& v, const char* flag) {
        if (v.empty()) throw config_error("--kind " + o.kind + " needs " + flag);
    };

    Table t;
    if (o.kind == "ab-heatmap") {
        require(o.problem, "--problem");
        require(o.algo, "--algo");
        if (o.space != "search" && o.space != "objective") throw config_error("--space must be search or objective");
        t = report_ab_heatmap(
            rows, o.problem, o.algo, o.population,
            o.space == "search" ? TransformSpace::search : TransformSpace::objective
        );
    } else if (o.kind == "relative") {
        t = report_relative_hv(rows);
    } else if (o.kind == "over-time") {
        require(o.problem, "--problem");
        t = report_hv_over_time(rows, o.problem, o.transform.empty() ? std::nullopt : std::optional(o.transform));
    } else {
        throw config_error("unknown report kind \"" + o.kind + "\"");
    }

    if (o.out.empty()) {
        std::cout << t.to_csv();
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f || !(f << t.to_csv())) throw error("cannot write " + o.out);
    }
    return 0;
}

int cmd_density(const DensityOptions& o)
{
    TransformSpec t = TransformSpec::identity();
    try {
        if (!o.transform.empty() && o.transform.front() == '{') {
            t = transform_from_json(nlohmann::json::parse(o.transform), o.dim);
        } else {
            t = transform_from_descriptor(o.transform, o.dim);
        }
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("malformed transform: ") + e.what());
    } catch (const parameter_error& e) {
        throw config_error(e.what());
    }
    std::cout << shortest(density_change(t, o.n, o.dim, o.seed)) << '\n';
    return 0;
}

int cmd_list(const std::string& what)
{
    if (what == "problems") {
        for (const auto& id : list_problems()) std::cout << id.name() << '\n';
    } else {
        std::cout << "id\n"
                     "beta-a<alpha>-b<beta>   e.g. beta-a0.2-b5\n"
                     "rot-seed<seed>          Haar-random rotation of the problem dimension\n"
                     "rot-angle<radians>      planar rotation, 2-D only\n"
                     "grid shorthands: {\"kind\":\"beta_cdf\",\"grid\":[...]}, "
                     "{\"kind\":\"sphered_rotation\",\"seeds\":[...]}\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Benchmark multi-objective optimizers on warped problem instances"};
    app.set_version_flag("--version", std::string(version_string));
    app.require_subcommand(1);

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Execute an experiment config");
    run_cmd->add_option("--config", run.config, "JSON experiment config")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--parallel", run.parallel, "Worker threads");
    run_cmd->add_option("--out", run.out, "Output directory");
    run_cmd->add_option("--repetitions", run.repetitions, "Override repetitions");
    run_cmd->add_option("--base-seed", run.base_seed, "Override base seed");
    run_cmd->add_flag("--no-raw-logs", run.no_raw_logs, "Skip per-run evaluation logs");

    ReportOptions rep;
    auto* rep_cmd = app.add_subcommand("report", "Summary tables from a finished run directory");
    rep_cmd->add_option("--in", rep.in, "Run output directory")->required();
    rep_cmd->add_option("--kind", rep.kind, "ab-heatmap | relative | over-time")->required();
    rep_cmd->add_option("--problem", rep.problem, "Problem name, e.g. zdt3-d2");
    rep_cmd->add_option("--algo", rep.algo, "random_search | nsga2 | smsemoa | moead");
    rep_cmd->add_option("--transform", rep.transform, "Instance or transform descriptor (over-time)");
    rep_cmd->add_option("--population", rep.population, "Population size (ab-heatmap)");
    rep_cmd->add_option("--space", rep.space, "search | objective (ab-heatmap)");
    rep_cmd->add_option("--output", rep.out, "Write CSV here instead of stdout");

    DensityOptions den;
    auto* den_cmd = app.add_subcommand("density", "Pairwise-distance Wasserstein change of a transform");
    den_cmd->add_option("--transform", den.transform, "Descriptor or JSON transform")->required();
    den_cmd->add_option("--n", den.n, "Sample size");
    den_cmd->add_option("--dim", den.dim, "Dimension");
    den_cmd->add_option("--seed", den.seed, "Sample seed");

    std::string what;
    auto* list_cmd = app.add_subcommand("list", "List problems or transform descriptors");
    list_cmd->add_option("what", what, "problems | transforms")->required()->check(CLI::IsMember({"problems", "transforms"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    try {
        if (*run_cmd) return cmd_run(run);
        if (*rep_cmd) return cmd_report(rep);
        if (*den_cmd) return cmd_density(den);
        return cmd_list(what);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_runtime;
    }
}
