#include <warpbench/algorithms.hpp>

namespace warpbench {

std::string algorithm_name(Algorithm a)
{
    switch (a) {
    case Algorithm::random_search:
        return "random_search";
    case Algorithm::nsga2:
        return "nsga2";
    case Algorithm::smsemoa:
        return "smsemoa";
    case Algorithm::moead:
        return "moead";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& name)
{
    for (Algorithm a : {Algorithm::random_search, Algorithm::nsga2, Algorithm::smsemoa, Algorithm::moead}) {
        if (algorithm_name(a) == name) return a;
    }
    throw config_error("unknown algorithm \"" + name + "\"");
}

void AlgoConfig::validate() const
{
    if (budget < 1) throw parameter_error("budget must be positive");
    if (population < 1) throw parameter_error("population must be positive");
    if (population > budget) throw parameter_error("population exceeds budget");
    if (algorithm != Algorithm::random_search && population < 2) {
        throw parameter_error(algorithm_name(algorithm) + " needs a population of at least 2");
    }
}

RunResult run_algorithm(const ProblemInstance& inst, const AlgoConfig& cfg)
{
    switch (cfg.algorithm) {
    case Algorithm::random_search:
        return run_random_search(inst, cfg);
    case Algorithm::nsga2:
        return run_nsga2(inst, cfg);
    case Algorithm::smsemoa:
        return run_smsemoa(inst, cfg);
    case Algorithm::moead:
        return run_moead(inst, cfg);
    }
    throw parameter_error("unknown algorithm");
}

} // namespace warpbench
