#include <warpbench/harness.hpp>

#include <array>
#include <numeric>
#include <set>
#include <tuple>

#include <warpbench/format.hpp>

namespace warpbench {

namespace {

constexpr std::array<double, 5> ab_grid{0.2, 0.5, 1.0, 2.0, 5.0};

double mean(const std::vector<double>& v)
{
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

bool is_evolutionary(const std::string& algorithm)
{
    return algorithm != algorithm_name(Algorithm::random_search);
}

} // namespace

Table report_ab_heatmap(
    const std::vector<RunRow>& rows, const std::string& problem, const std::string& algorithm,
    std::optional<int> population, TransformSpace space
)
{
    std::set<int> pops;
    for (const auto& r : rows) {
        if (r.problem == problem && r.algorithm == algorithm) pops.insert(r.population);
    }
    if (pops.empty()) throw report_error("no runs of " + algorithm + " on " + problem);
    if (!population) {
        if (pops.size() > 1) throw report_error("several population sizes for " + algorithm + " on " + problem + "; pick one");
        population = *pops.begin();
    }

    Table t;
    t.notes.push_back("mean final archive HV; problem=" + problem + " algorithm=" + algorithm +
                      " population=" + std::to_string(*population) +
                      " space=" + (space == TransformSpace::search ? "search" : "objective"));
    t.notes.push_back("rows: alpha ascending; columns: beta ascending; " + std::string(missing_cell) + " = no runs");
    t.header.push_back("alpha\\beta");
    for (double b : ab_grid) t.header.push_back(shortest(b));

    for (double a : ab_grid) {
        std::vector<std::string> line{shortest(a)};
        for (double b : ab_grid) {
            const std::string d = TransformSpec::beta_cdf(a, b).canonical().descriptor();
            std::vector<double> hv;
            for (const auto& r : rows) {
                if (!r.ok() || r.problem != problem || r.algorithm != algorithm || r.population != *population) continue;
                const bool match = space == TransformSpace::search ? (r.search == d && r.objective == "id")
                                                                   : (r.search == "id" && r.objective == d);
                if (match) hv.push_back(r.final_archive_hv);
            }
            line.push_back(hv.empty() ? std::string(missing_cell) : shortest(mean(hv)));
        }
        t.rows.push_back(std::move(line));
    }
    return t;
}

std::string transform_family(const std::string& search, const std::string& objective)
{
    const bool s_id = search == "id";
    const bool o_id = objective == "id";
    if (s_id && o_id) return "identity";
    if (!s_id && !o_id) return "combined";
    if (!o_id) return "beta-cdf-objective";
    if (search.rfind("rot-", 0) == 0) return "sphered-rotation";
    return "beta-cdf-search";
}

Table report_relative_hv(const std::vector<RunRow>& rows)
{
    // (problem, algorithm, population, budget)
    using Config = std::tuple<std::string, std::string, int, long>;
    std::map<Config, std::vector<double>> base;
    for (const auto& r : rows) {
        if (r.ok() && r.search == "id" && r.objective == "id") {
            base[{r.problem, r.algorithm, r.population, r.budget}].push_back(r.final_pop_hv);
        }
    }

    std::map<std::tuple<Config, std::string, std::string>, std::vector<double>> per_instance;
    std::set<Config> degenerate;
    for (const auto& r : rows) {
        if (!r.ok()) continue;
        const Config key{r.problem, r.algorithm, r.population, r.budget};
        const auto b = base.find(key);
        if (b == base.end()) {
            throw report_error("no identity-instance runs for problem=" + r.problem + " algorithm=" + r.algorithm +
                               " population=" + std::to_string(r.population) + " budget=" + std::to_string(r.budget));
        }
        const double base_mean = mean(b->second);
        if (!(base_mean > 0.0)) {
            degenerate.insert(key);
            continue;
        }
        per_instance[{key, transform_family(r.search, r.objective), r.instance}].push_back(
            relative_hv(r.final_pop_hv, base_mean)
        );
    }

    // Equal weight per instantiation within a problem.
    std::map<std::tuple<Config, std::string>, std::vector<double>> per_problem;
    for (const auto& [k, ratios] : per_instance) {
        per_problem[{std::get<0>(k), std::get<1>(k)}].push_back(mean(ratios));
    }

    // (suite, dim, algorithm, population, budget, family)
    using Group = std::tuple<std::string, int, std::string, int, long, std::string>;
    struct Acc
    {
        std::vector<double> values;
        std::size_t instantiations = 0;
    };
    std::map<Group, Acc> per_suite;
    for (const auto& [k, inst_means] : per_problem) {
        const auto& [problem, algorithm, pop, budget] = std::get<0>(k);
        const ProblemId id = parse_problem(problem);
        auto& acc = per_suite[{id.suite_name(), id.dim, algorithm, pop, budget, std::get<1>(k)}];
        acc.values.push_back(mean(inst_means));
        acc.instantiations += inst_means.size();
    }

    std::map<std::tuple<std::string, int, long, int, std::string>, std::size_t> skipped;
    for (const auto& [problem, algorithm, pop, budget] : degenerate) {
        const ProblemId id = parse_problem(problem);
        ++skipped[{id.suite_name(), id.dim, budget, pop, algorithm}];
    }

    Table t;
    t.notes.push_back("relative HV = final-population HV / mean identity-instance HV of the same configuration");
    t.notes.push_back("averaged per run ratio within an instantiation, equal weight per instantiation, then per problem");
    t.notes.push_back("algorithm ea-mean averages nsga2, smsemoa and moead; random_search is reported on its own");
    t.header = {"suite", "dim", "algorithm", "population", "budget", "family", "relative_hv", "problems",
                "instantiations", "skipped_degenerate_base"};

    std::map<std::tuple<std::string, int, int, long, std::string>, std::vector<double>> ea;
    for (const auto& [g, acc] : per_suite) {
        const auto& [suite, dim, algorithm, pop, budget, family] = g;
        const auto sk = skipped.find({suite, dim, budget, pop, algorithm});
        t.rows.push_back({suite, std::to_string(dim), algorithm, std::to_string(pop), std::to_string(budget), family,
                          shortest(mean(acc.values)), std::to_string(acc.values.size()),
                          std::to_string(acc.instantiations), std::to_string(sk == skipped.end() ? 0 : sk->second)});
        if (is_evolutionary(algorithm)) ea[{suite, dim, pop, budget, family}].push_back(mean(acc.values));
    }
    for (const auto& [k, values] : ea) {
        const auto& [suite, dim, pop, budget, family] = k;
        t.rows.push_back({suite, std::to_string(dim), "ea-mean", std::to_string(pop), std::to_string(budget), family,
                          shortest(mean(values)), "", "", ""});
    }
    return t;
}

Table report_hv_over_time(
    const std::vector<RunRow>& rows, const std::string& problem, const std::optional<std::string>& transform
)
{
    auto selected = [&](const RunRow& r) {
        if (!r.ok() || r.problem != problem) return false;
        if (!transform) return true;
        return r.instance == *transform || (r.search == *transform && r.objective == "id") ||
               (r.search == "id" && "o:" + r.objective == *transform);
    };

    using Key = std::tuple<std::string, std::string, int, long>;
    std::vector<Key> order;
    std::map<Key, std::vector<const RunRow*>> groups;
    for (const auto& r : rows) {
        if (!selected(r)) continue;
        const Key k{r.instance, r.algorithm, r.population, r.budget};
        if (!groups.contains(k)) order.push_back(k);
        groups[k].push_back(&r);
    }

    Table t;
    t.notes.push_back("normalized archive HV over evaluations; problem=" + problem +
                      (transform ? " transform=" + *transform : std::string()));
    t.header = {"instance", "algorithm", "population", "series", "eval", "hv"};
    for (const auto& k : order) {
        const auto& runs = groups[k];
        const auto& evals = runs.front()->checkpoint_evals;
        for (std::size_t c = 0; c < evals.size(); ++c) {
            double sum = 0.0;
            for (const RunRow* r : runs) sum += r->checkpoint_hvs[c];
            t.rows.push_back({std::get<0>(k), std::get<1>(k), std::to_string(std::get<2>(k)), "mean",
                              std::to_string(evals[c]), shortest(sum / static_cast<double>(runs.size()))});
        }
        for (const RunRow* r : runs) {
            for (std::size_t c = 0; c < evals.size(); ++c) {
                t.rows.push_back({std::get<0>(k), std::get<1>(k), std::to_string(std::get<2>(k)),
                                  std::to_string(r->seed), std::to_string(evals[c]), shortest(r->checkpoint_hvs[c])});
            }
        }
    }
    return t;
}

} // namespace warpbench
