#include <warpbench/harness.hpp>

#include <cmath>
#include <fstream>

#include <warpbench/format.hpp>

namespace warpbench {

namespace {

std::vector<Objectives> final_archive(const std::vector<ParetoArchive::Entry>& history)
{
    ParetoArchive archive;
    for (const auto& e : history) archive.insert(e.f, e.eval_index);
    return archive.points();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

template <class T, class Fn>
std::string joined(const std::vector<T>& values, Fn&& fmt)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ';';
        out += fmt(values[i]);
    }
    return out;
}

} // namespace

void NormalizationAccumulator::add(const RunRecord& record)
{
    if (!record.ok()) return;
    auto& extremes = m_extremes[record.problem];
    const auto archive = final_archive(record.archive_history);
    extremes.insert(extremes.end(), archive.begin(), archive.end());
    if (extremes.empty()) return;
    // Sorted by f1 then f2: front() is the lexicographic minimum on (f1, f2),
    // back() the one on (f2, f1). Extremes of a union are extremes of its parts.
    const auto front = nondominated_2d(extremes);
    extremes = {front.front(), front.back()};
    if (front.size() == 1) extremes.pop_back();
}

NormalizationSet NormalizationAccumulator::finish() const
{
    NormalizationSet out;
    for (const auto& [problem, front] : m_extremes) {
        try {
            out.boxes.emplace(problem, compute_normalization(std::vector<std::vector<Objectives>>{front}));
        } catch (const error& e) {
            out.failures.emplace(problem, e.what());
        }
    }
    return out;
}

NormalizationSet compute_normalizations(const std::vector<RunRecord>& records)
{
    NormalizationAccumulator acc;
    for (const auto& r : records) acc.add(r);
    return acc.finish();
}

NormalizationSet compute_normalizations(const std::filesystem::path& records_path)
{
    NormalizationAccumulator acc;
    for_each_record(records_path, [&](RunRecord&& r) { acc.add(r); });
    return acc.finish();
}

std::vector<long> checkpoint_grid(long population, long budget, int points)
{
    population = std::clamp(population, 1L, budget);
    std::vector<long> grid;
    if (points <= 1 || population == budget) return {budget};
    const double lo = std::log(static_cast<double>(population));
    const double hi = std::log(static_cast<double>(budget));
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        const long v = std::clamp(std::lround(std::exp(lo + t * (hi - lo))), population, budget);
        if (grid.empty() || v > grid.back()) grid.push_back(v);
    }
    if (grid.back() != budget) grid.push_back(budget);
    return grid;
}

std::vector<double> archive_hv_series(
    const std::vector<ParetoArchive::Entry>& history, const std::vector<long>& checkpoints, const NormalizationBox& box
)
{
    ParetoArchive archive;
    std::vector<double> series;
    series.reserve(checkpoints.size());
    std::size_t next = 0;
    for (long c : checkpoints) {
        while (next < history.size() && history[next].eval_index <= c) {
            archive.insert(history[next].f, history[next].eval_index);
            ++next;
        }
        series.push_back(normalized_hv(archive.points(), box));
    }
    return series;
}

RunRow compute_row(const RunRecord& r, const NormalizationSet& norms)
{
    RunRow row;
    row.problem = r.problem;
    row.search = r.search;
    row.objective = r.objective;
    row.instance = r.instance;
    row.algorithm = algorithm_name(r.config.algorithm);
    row.population = r.config.population;
    row.budget = r.config.budget;
    row.repetition = r.repetition;
    row.seed = r.config.seed;
    row.error = r.error;
    if (!row.ok()) return row;
    const auto box = norms.boxes.find(r.problem);
    if (box == norms.boxes.end()) {
        const auto why = norms.failures.find(r.problem);
        row.error = "normalization: " + (why == norms.failures.end() ? std::string("no box") : why->second);
        return row;
    }
    row.checkpoint_evals = checkpoint_grid(r.config.population, r.config.budget);
    row.checkpoint_hvs = archive_hv_series(r.archive_history, row.checkpoint_evals, box->second);
    row.final_archive_hv = row.checkpoint_hvs.back();
    row.final_pop_hv = normalized_hv(r.final_population, box->second);
    return row;
}

std::vector<RunRow> compute_rows(const std::vector<RunRecord>& records, const NormalizationSet& norms)
{
    std::vector<RunRow> rows;
    rows.reserve(records.size());
    for (const auto& r : records) rows.push_back(compute_row(r, norms));
    return rows;
}

std::vector<RunRow> compute_rows(const std::filesystem::path& records_path, const NormalizationSet& norms)
{
    std::vector<RunRow> rows;
    for_each_record(records_path, [&](RunRecord&& r) { rows.push_back(compute_row(r, norms)); });
    return rows;
}

std::string runs_csv(const std::vector<RunRow>& rows)
{
    std::string out =
        "instance,algorithm,population,seed,final_archive_hv,final_pop_hv,checkpoint_evals,checkpoint_hvs,version,error\n";
    for (const auto& r : rows) {
        out += csv_field(r.instance) + "," + r.algorithm + "," + std::to_string(r.population) + "," +
               std::to_string(r.seed) + ",";
        if (r.ok()) {
            out += shortest(r.final_archive_hv) + "," + shortest(r.final_pop_hv) + ",";
            out += joined(r.checkpoint_evals, [](long v) { return std::to_string(v); }) + ",";
            out += joined(r.checkpoint_hvs, [](double v) { return shortest(v); }) + ",";
        } else {
            out += ",,,,";
        }
        out += std::string(version_string) + "," + csv_field(r.error) + "\n";
    }
    return out;
}

void emit_runs_csv(const std::vector<RunRow>& rows, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path.string());
    out << runs_csv(rows);
    if (!out) throw error("failed writing " + path.string());
}

std::string Table::to_csv() const
{
    std::string out;
    for (const auto& n : notes) out += "# " + n + "\n";
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_field(cells[i]);
        }
        out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
}

} // namespace warpbench
