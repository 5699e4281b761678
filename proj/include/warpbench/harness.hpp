#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <warpbench/algorithms.hpp>
#include <warpbench/indicators.hpp>

namespace warpbench {

inline constexpr const char* version_string = "warpbench 0.1.0";

/// Environment variable naming the default output directory.
inline constexpr const char* output_dir_env = "WARPBENCH_OUTPUT_DIR";

struct AlgoTemplate
{
    Algorithm algorithm = Algorithm::random_search;
    int population = 100;
    long budget = 5000;
};

/// One experiment. Transform entries are kept as JSON because seeded
/// rotations take their dimension from the problem they are paired with.
struct ExperimentConfig
{
    std::vector<std::string> problems;
    std::vector<nlohmann::json> search_transforms;
    std::vector<nlohmann::json> objective_transforms;
    std::vector<AlgoTemplate> algorithms;
    int repetitions = 10;
    std::uint64_t base_seed = 0;
    std::filesystem::path output_dir;
    /// Pair every search transform with every objective transform instead
    /// of varying one space at a time.
    bool combined_grid = false;
};

/// Parses the JSON config format documented in the README. Throws config_error.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Problem selectors: exact names (`zdt1-d2`), `*` wildcards (`dtlz*-d2`, `*-d10`) or `all`.
std::vector<ProblemId> select_problems(const std::vector<std::string>& selectors);

/// Expands grid shorthands (`"grid":[...]` for beta_cdf, `"seeds":[...]` for
/// sphered_rotation) into single-transform entries.
std::vector<nlohmann::json> expand_transform_entries(const std::vector<nlohmann::json>& entries);

struct Job
{
    std::size_t id = 0;
    ProblemInstance instance;
    AlgoConfig config;
    int repetition = 0;
};

/// Problems x instances x algorithms x repetitions, in that nesting order.
/// Search and objective lists vary one space at a time (the other held at
/// identity) unless combined_grid is set; BetaCdf(1,1) collapses onto the
/// identity instance. The per-job seed depends on base seed, problem,
/// algorithm, population, budget and repetition but not on the transform.
std::vector<Job> expand_matrix(const ExperimentConfig& cfg);

std::uint64_t job_seed(std::uint64_t base_seed, const std::string& problem, const AlgoTemplate& algo, int repetition);

/// Compact outcome of one run: what the indicators need, without the log.
struct RunRecord
{
    std::size_t job_id = 0;
    std::string problem;
    std::string search;
    std::string objective;
    std::string instance;
    AlgoConfig config;
    int repetition = 0;
    /// Archive insertions still present at some checkpoint; replaying them
    /// reproduces the archive at every checkpoint and at the end of the run.
    std::vector<ParetoArchive::Entry> archive_history;
    std::vector<Objectives> final_population;
    std::string error;

    bool ok() const { return error.empty(); }
};

/// Checkpoint-visible archive history and final population (original
/// objectives) of a finished run.
RunRecord summarize_run(const Job& job, const RunResult& result);

struct ExecuteOptions
{
    int parallelism = 1;
    /// When set, one raw evaluation log per run is written here.
    std::optional<std::filesystem::path> log_dir;
    /// Called after each job with (finished, total), serialized.
    std::function<void(std::size_t, std::size_t)> progress;
};

/// Runs every job. Results are ordered by job id and independent of the
/// degree of parallelism. A job that throws yields a record carrying the error.
std::vector<RunRecord> execute(const std::vector<Job>& jobs, const ExecuteOptions& options = {});

/// Like execute, but streams records to a runs.jsonl file in job order so
/// memory holds only the records that finished ahead of the oldest running job.
/// `on_write` sees each record in job order right after it is written.
/// I/O errors abort the batch.
void execute_to_file(
    const std::vector<Job>& jobs, const ExecuteOptions& options, const std::filesystem::path& path,
    const std::function<void(const RunRecord&)>& on_write = {}
);

/// `eval_index,x_seen...,f_seen1,f_seen2,f_orig1,f_orig2` per line.
void write_run_log(const RunResult& result, const std::filesystem::path& path);

/// Normalization box per base problem name, pooled over every successful run.
/// Problems whose pooled front is degenerate map to an error message instead.
struct NormalizationSet
{
    std::map<std::string, NormalizationBox> boxes;
    std::map<std::string, std::string> failures;
};

/// Streaming form: pools the non-dominated union per problem one run at a time.
/// Only the two extreme points of each pooled front are kept; they fix the
/// ideal and nadir of the whole union.
class NormalizationAccumulator
{
public:
    void add(const RunRecord& record);
    NormalizationSet finish() const;

private:
    std::map<std::string, std::vector<Objectives>> m_extremes;
};

NormalizationSet compute_normalizations(const std::vector<RunRecord>& records);
NormalizationSet compute_normalizations(const std::filesystem::path& records_path);

/// 50 log-spaced evaluation indices from the population size to the budget.
std::vector<long> checkpoint_grid(long population, long budget, int points = 50);

/// Normalized archive hypervolume at each checkpoint, by replaying the
/// archive insertion history.
std::vector<double> archive_hv_series(
    const std::vector<ParetoArchive::Entry>& history, const std::vector<long>& checkpoints, const NormalizationBox& box
);

struct RunRow
{
    std::string problem;
    std::string search;
    std::string objective;
    std::string instance;
    std::string algorithm;
    int population = 0;
    long budget = 0;
    int repetition = 0;
    std::uint64_t seed = 0;
    double final_archive_hv = 0;
    double final_pop_hv = 0;
    std::vector<long> checkpoint_evals;
    std::vector<double> checkpoint_hvs;
    std::string error;

    bool ok() const { return error.empty(); }
};

RunRow compute_row(const RunRecord& record, const NormalizationSet& norms);
std::vector<RunRow> compute_rows(const std::vector<RunRecord>& records, const NormalizationSet& norms);
std::vector<RunRow> compute_rows(const std::filesystem::path& records_path, const NormalizationSet& norms);

/// Columns: instance,algorithm,population,seed,final_archive_hv,final_pop_hv,
/// checkpoint_evals,checkpoint_hvs,version,error. Checkpoint lists are
/// ';'-separated. Throws error with the path on I/O failure.
void emit_runs_csv(const std::vector<RunRow>& rows, const std::filesystem::path& path);
std::string runs_csv(const std::vector<RunRow>& rows);

/// Plain table rendered as CSV.
struct Table
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    /// Lines written before the header, prefixed with '#'.
    std::vector<std::string> notes;

    std::string to_csv() const;
};

inline constexpr const char* missing_cell = "NA";

enum class TransformSpace
{
    search,
    objective
};

/// 5x5 mean final archive HV over the Beta-CDF grid; rows alpha ascending,
/// columns beta ascending. Cells without runs hold `NA`.
Table report_ab_heatmap(
    const std::vector<RunRow>& rows, const std::string& problem, const std::string& algorithm,
    std::optional<int> population = {}, TransformSpace space = TransformSpace::search
);

/// Transform family of an instance: identity, beta-cdf-search,
/// beta-cdf-objective, sphered-rotation or combined.
std::string transform_family(const std::string& search, const std::string& objective);

/// Final-population HV relative to the mean identity-instance HV of the same
/// (problem, algorithm, population, budget), averaged per instantiation, then
/// per problem, then per (suite, dim). Throws report_error when a base is missing.
Table report_relative_hv(const std::vector<RunRow>& rows);

/// Long format: instance,algorithm,population,series,eval,hv where series is
/// the run seed or `mean`.
Table report_hv_over_time(
    const std::vector<RunRow>& rows, const std::string& problem, const std::optional<std::string>& transform = {}
);

/// runs.jsonl: one JSON object per run record.
void save_records(const std::vector<RunRecord>& records, const std::filesystem::path& path);
std::vector<RunRecord> load_records(const std::filesystem::path& path);
/// Calls fn on each stored record in file order without holding the others.
void for_each_record(const std::filesystem::path& path, const std::function<void(RunRecord&&)>& fn);

} // namespace warpbench
