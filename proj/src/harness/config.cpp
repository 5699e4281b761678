#include <warpbench/harness.hpp>

#include <fnmatch.h>

#include <fstream>
#include <set>

namespace warpbench {

namespace {

const std::set<std::string> config_keys{
    "problems", "search_transforms", "objective_transforms", "algorithms",
    "repetitions", "base_seed", "output_dir", "combined_grid",
};

std::vector<nlohmann::json> transform_list(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key)) return {nlohmann::json{{"kind", "identity"}}};
    const auto& list = j[key];
    if (!list.is_array()) throw config_error(std::string(key) + " must be a list");
    if (list.empty()) throw config_error(std::string(key) + " must not be empty");
    return {list.begin(), list.end()};
}

std::vector<AlgoTemplate> algorithm_list(const nlohmann::json& j)
{
    if (!j.contains("algorithms") || !j["algorithms"].is_array() || j["algorithms"].empty()) {
        throw config_error("\"algorithms\" must be a non-empty list");
    }
    std::vector<AlgoTemplate> out;
    for (const auto& a : j["algorithms"]) {
        if (!a.is_object() || !a.contains("name")) throw config_error("algorithm entry needs a \"name\": " + a.dump());
        try {
            const Algorithm algo = parse_algorithm(a["name"].get<std::string>());
            const long budget = a.value("budget", 5000L);
            std::vector<int> pops;
            if (a.contains("populations")) pops = a["populations"].get<std::vector<int>>();
            else pops.push_back(a.value("population", 100));
            if (pops.empty()) throw config_error("\"populations\" must not be empty");
            for (int p : pops) {
                AlgoTemplate t{algo, p, budget};
                AlgoConfig{t.algorithm, t.population, t.budget, 0}.validate();
                out.push_back(t);
            }
        } catch (const nlohmann::json::exception& e) {
            throw config_error("malformed algorithm entry " + a.dump() + ": " + e.what());
        } catch (const parameter_error& e) {
            throw config_error("invalid algorithm entry " + a.dump() + ": " + e.what());
        }
    }
    return out;
}

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

ExperimentConfig parse_config(const nlohmann::json& j)
{
    if (!j.is_object()) throw config_error("config must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        if (!config_keys.contains(key)) throw config_error("unknown config key \"" + key + "\"");
    }
    ExperimentConfig cfg;
    try {
        if (!j.contains("problems") || !j["problems"].is_array() || j["problems"].empty()) {
            throw config_error("\"problems\" must be a non-empty list");
        }
        cfg.problems = j["problems"].get<std::vector<std::string>>();
        cfg.search_transforms = transform_list(j, "search_transforms");
        cfg.objective_transforms = transform_list(j, "objective_transforms");
        cfg.algorithms = algorithm_list(j);
        cfg.repetitions = j.value("repetitions", 10);
        cfg.base_seed = j.value("base_seed", std::uint64_t{0});
        cfg.output_dir = j.value("output_dir", std::string{});
        cfg.combined_grid = j.value("combined_grid", false);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("malformed config: ") + e.what());
    }
    if (cfg.repetitions < 1) throw config_error("repetitions must be at least 1");
    select_problems(cfg.problems);
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config " + path.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in, nullptr, true, true);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(path.string() + ": " + e.what());
    }
    return parse_config(j);
}

std::vector<ProblemId> select_problems(const std::vector<std::string>& selectors)
{
    const auto all = list_problems();
    std::vector<ProblemId> out;
    auto add = [&](const ProblemId& id) {
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    };
    for (const auto& sel : selectors) {
        if (sel == "all") {
            for (const auto& id : all) add(id);
        } else if (sel.find_first_of("*?[") != std::string::npos) {
            bool any = false;
            for (const auto& id : all) {
                if (fnmatch(sel.c_str(), id.name().c_str(), 0) == 0) {
                    add(id);
                    any = true;
                }
            }
            if (!any) throw config_error("problem selector \"" + sel + "\" matches nothing");
        } else {
            try {
                add(parse_problem(sel));
            } catch (const unknown_problem_error& e) {
                throw config_error(e.what());
            }
        }
    }
    return out;
}

std::vector<nlohmann::json> expand_transform_entries(const std::vector<nlohmann::json>& entries)
{
    std::vector<nlohmann::json> out;
    for (const auto& e : entries) {
        if (e.is_string()) {
            out.push_back(e);
            continue;
        }
        if (e.is_object() && e.value("kind", "") == "beta_cdf" && e.contains("grid")) {
            const auto grid = e["grid"].get<std::vector<double>>();
            if (grid.empty()) throw config_error("beta_cdf grid must not be empty");
            for (double a : grid)
                for (double b : grid) out.push_back({{"kind", "beta_cdf"}, {"alpha", a}, {"beta", b}});
        } else if (e.is_object() && e.value("kind", "") == "sphered_rotation" && e.contains("seeds")) {
            for (auto s : e["seeds"].get<std::vector<std::uint64_t>>()) {
                nlohmann::json one = e;
                one.erase("seeds");
                one["seed"] = s;
                out.push_back(std::move(one));
            }
        } else {
            out.push_back(e);
        }
    }
    return out;
}

std::uint64_t job_seed(std::uint64_t base_seed, const std::string& problem, const AlgoTemplate& algo, int repetition)
{
    const std::string key = problem + "|" + algorithm_name(algo.algorithm) + "|" + std::to_string(algo.population) +
                            "|" + std::to_string(algo.budget) + "|" + std::to_string(repetition);
    return splitmix64(base_seed ^ fnv1a(key));
}

std::vector<Job> expand_matrix(const ExperimentConfig& cfg)
{
    if (cfg.repetitions < 1) throw config_error("repetitions must be at least 1");
    if (cfg.algorithms.empty()) throw config_error("no algorithms configured");
    const auto problems = select_problems(cfg.problems);
    if (problems.empty()) throw config_error("no problems selected");
    const auto search = expand_transform_entries(cfg.search_transforms);
    const auto objective = expand_transform_entries(cfg.objective_transforms);
    if (search.empty() || objective.empty()) throw config_error("transform lists must not be empty");

    const nlohmann::json identity = {{"kind", "identity"}};
    std::vector<Job> jobs;
    for (const auto& problem : problems) {
        auto parse = [&](const nlohmann::json& j) {
            if (j.is_string()) return transform_from_descriptor(j.get<std::string>(), problem.dim);
            return transform_from_json(j, problem.dim);
        };
        std::vector<ProblemInstance> instances;
        std::set<std::string> seen;
        auto add = [&](const nlohmann::json& s, const nlohmann::json& o) {
            try {
                ProblemInstance inst(problem, parse(s).canonical(), parse(o).canonical());
                if (seen.insert(inst.descriptor()).second) instances.push_back(std::move(inst));
            } catch (const config_error&) {
                throw;
            } catch (const error& e) {
                throw config_error("invalid instance for " + problem.name() + " (" + s.dump() + ", " + o.dump() +
                                   "): " + e.what());
            }
        };
        if (cfg.combined_grid) {
            for (const auto& s : search)
                for (const auto& o : objective) add(s, o);
        } else {
            for (const auto& s : search) add(s, identity);
            for (const auto& o : objective) add(identity, o);
        }

        for (const auto& inst : instances) {
            for (const auto& algo : cfg.algorithms) {
                for (int rep = 0; rep < cfg.repetitions; ++rep) {
                    AlgoConfig ac{algo.algorithm, algo.population, algo.budget, job_seed(cfg.base_seed, problem.name(), algo, rep)};
                    jobs.push_back(Job{jobs.size(), inst, ac, rep});
                }
            }
        }
    }
    return jobs;
}

} // namespace warpbench
