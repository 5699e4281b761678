#include <warpbench/harness.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include <warpbench/format.hpp>

namespace warpbench {

namespace {

/// Accepted archive insertions that are still present at one or more
/// checkpoints. Replaying them rebuilds the archive exactly at every checkpoint.
std::vector<ParetoArchive::Entry> checkpoint_visible_history(const RunResult& result)
{
    struct Live
    {
        Objectives f;
        std::size_t slot;
    };
    std::vector<ParetoArchive::Entry> accepted;
    std::vector<long> removed_at;
    std::vector<Live> live;
    for (const auto& e : result.log) {
        const Objectives& f = e.f_original;
        if (!f.allFinite()) throw numeric_error("non-finite objective at evaluation " + std::to_string(e.eval_index));
        const bool covered = std::any_of(live.begin(), live.end(), [&](const Live& m) {
            return m.f == f || dominates(m.f, f);
        });
        if (covered) continue;
        std::erase_if(live, [&](const Live& m) {
            if (!dominates(f, m.f)) return false;
            removed_at[m.slot] = e.eval_index;
            return true;
        });
        live.push_back({f, accepted.size()});
        accepted.push_back({f, e.eval_index});
        removed_at.push_back(std::numeric_limits<long>::max());
    }

    const auto grid = checkpoint_grid(result.config.population, result.config.budget);
    std::vector<ParetoArchive::Entry> kept;
    for (std::size_t i = 0; i < accepted.size(); ++i) {
        const auto c = std::lower_bound(grid.begin(), grid.end(), accepted[i].eval_index);
        if (c != grid.end() && *c < removed_at[i]) kept.push_back(accepted[i]);
    }
    kept.shrink_to_fit();
    return kept;
}

} // namespace

RunRecord summarize_run(const Job& job, const RunResult& result)
{
    RunRecord rec;
    rec.job_id = job.id;
    rec.problem = job.instance.problem().name();
    rec.search = job.instance.search_transform().descriptor();
    rec.objective = job.instance.objective_transform().descriptor();
    rec.instance = job.instance.descriptor();
    rec.config = job.config;
    rec.repetition = job.repetition;

    rec.archive_history = checkpoint_visible_history(result);
    rec.final_population.reserve(result.final_population.size());
    for (const auto& ind : result.final_population) rec.final_population.push_back(ind.f_original);
    return rec;
}

void write_run_log(const RunResult& result, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write run log " + path.string());
    std::string line;
    for (const auto& e : result.log) {
        line = std::to_string(e.eval_index);
        for (Eigen::Index i = 0; i < e.x_seen.size(); ++i) line += "," + shortest(e.x_seen[i]);
        line += "," + shortest(e.f_seen[0]) + "," + shortest(e.f_seen[1]);
        line += "," + shortest(e.f_original[0]) + "," + shortest(e.f_original[1]) + "\n";
        out << line;
    }
    if (!out) throw error("failed writing run log " + path.string());
}

namespace {

RunRecord failed_record(const Job& job, std::string what)
{
    RunRecord failed;
    failed.job_id = job.id;
    failed.problem = job.instance.problem().name();
    failed.search = job.instance.search_transform().descriptor();
    failed.objective = job.instance.objective_transform().descriptor();
    failed.instance = job.instance.descriptor();
    failed.config = job.config;
    failed.repetition = job.repetition;
    failed.error = what.empty() ? "unknown error" : std::move(what);
    return failed;
}

/// Runs every job on `parallelism` threads and hands each record to `sink`
/// under a lock, in completion order.
void run_jobs(
    const std::vector<Job>& jobs, const ExecuteOptions& options,
    const std::function<void(std::size_t, RunRecord&&)>& sink
)
{
    std::atomic<std::size_t> next{0};
    std::mutex io;
    std::size_t done = 0;
    std::exception_ptr io_failure;
    if (options.log_dir) std::filesystem::create_directories(*options.log_dir);

    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            const Job& job = jobs[k];
            RunRecord rec;
            std::optional<RunResult> result;
            try {
                result = run_algorithm(job.instance, job.config);
                rec = summarize_run(job, *result);
            } catch (const std::exception& e) {
                rec = failed_record(job, e.what());
                result.reset();
            }
            std::lock_guard lock(io);
            try {
                if (result && options.log_dir) {
                    write_run_log(*result, *options.log_dir / ("run-" + std::to_string(job.id) + ".csv"));
                }
                sink(k, std::move(rec));
            } catch (...) {
                // I/O failures abort the batch: stop handing out jobs.
                if (!io_failure) io_failure = std::current_exception();
                next = jobs.size();
                return;
            }
            ++done;
            if (options.progress) options.progress(done, jobs.size());
        }
    };

    const int threads = std::max(1, options.parallelism);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (io_failure) std::rethrow_exception(io_failure);
}

} // namespace

std::vector<RunRecord> execute(const std::vector<Job>& jobs, const ExecuteOptions& options)
{
    std::vector<RunRecord> records(jobs.size());
    run_jobs(jobs, options, [&](std::size_t k, RunRecord&& rec) { records[k] = std::move(rec); });
    return records;
}

namespace {

nlohmann::json record_to_json(const RunRecord& r)
{
    nlohmann::json history = nlohmann::json::array();
    for (const auto& e : r.archive_history) history.push_back({e.f[0], e.f[1], e.eval_index});
    nlohmann::json final_pop = nlohmann::json::array();
    for (const auto& f : r.final_population) final_pop.push_back({f[0], f[1]});
    return {
        {"job", r.job_id},
        {"problem", r.problem},
        {"search", r.search},
        {"objective", r.objective},
        {"instance", r.instance},
        {"algorithm", algorithm_name(r.config.algorithm)},
        {"population", r.config.population},
        {"budget", r.config.budget},
        {"seed", r.config.seed},
        {"repetition", r.repetition},
        {"archive_history", std::move(history)},
        {"final_population", std::move(final_pop)},
        {"error", r.error},
        {"version", version_string},
    };
}

RunRecord record_from_json(const nlohmann::json& j)
{
    RunRecord r;
    r.job_id = j.at("job").get<std::size_t>();
    r.problem = j.at("problem").get<std::string>();
    r.search = j.at("search").get<std::string>();
    r.objective = j.at("objective").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    r.config.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    r.config.population = j.at("population").get<int>();
    r.config.budget = j.at("budget").get<long>();
    r.config.seed = j.at("seed").get<std::uint64_t>();
    r.repetition = j.at("repetition").get<int>();
    for (const auto& h : j.at("archive_history")) {
        r.archive_history.push_back({Objectives(h[0].get<double>(), h[1].get<double>()), h[2].get<long>()});
    }
    for (const auto& f : j.at("final_population")) {
        r.final_population.emplace_back(f[0].get<double>(), f[1].get<double>());
    }
    r.error = j.at("error").get<std::string>();
    return r;
}

} // namespace

void save_records(const std::vector<RunRecord>& records, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path.string());
    for (const auto& r : records) out << record_to_json(r).dump() << "\n";
    if (!out) throw error("failed writing " + path.string());
}

void execute_to_file(
    const std::vector<Job>& jobs, const ExecuteOptions& options, const std::filesystem::path& path,
    const std::function<void(const RunRecord&)>& on_write
)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path.string());
    std::map<std::size_t, RunRecord> pending;
    std::size_t next_to_write = 0;
    run_jobs(jobs, options, [&](std::size_t k, RunRecord&& rec) {
        pending.emplace(k, std::move(rec));
        for (auto it = pending.begin(); it != pending.end() && it->first == next_to_write; it = pending.erase(it)) {
            out << record_to_json(it->second).dump() << "\n";
            if (on_write) on_write(it->second);
            ++next_to_write;
        }
    });
    out.flush();
    if (!out) throw error("failed writing " + path.string());
}

void for_each_record(const std::filesystem::path& path, const std::function<void(RunRecord&&)>& fn)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot read " + path.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        RunRecord rec;
        try {
            rec = record_from_json(nlohmann::json::parse(line));
        } catch (const std::exception& e) {
            throw error(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
        fn(std::move(rec));
    }
}

std::vector<RunRecord> load_records(const std::filesystem::path& path)
{
    std::vector<RunRecord> out;
    for_each_record(path, [&](RunRecord&& r) { out.push_back(std::move(r)); });
    return out;
}

} // namespace warpbench
