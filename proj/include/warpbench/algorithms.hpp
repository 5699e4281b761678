#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <warpbench/instance.hpp>

namespace warpbench {

enum class Algorithm
{
    random_search,
    nsga2,
    smsemoa,
    moead
};

std::string algorithm_name(Algorithm a);
/// Accepts `random_search`, `nsga2`, `smsemoa`, `moead`.
Algorithm parse_algorithm(const std::string& name);

struct AlgoConfig
{
    Algorithm algorithm = Algorithm::random_search;
    int population = 100;
    long budget = 5000;
    std::uint64_t seed = 0;

    /// Throws parameter_error on population > budget, population < 1, or
    /// population < 2 for the evolutionary algorithms.
    void validate() const;
};

struct Individual
{
    Point x;
    Objectives f_seen;
    Objectives f_original;
    long eval_index = 0;
};

struct RunResult
{
    AlgoConfig config;
    std::string instance;
    std::vector<EvaluationRecord> log;
    std::vector<Individual> final_population;
};

/// Per-run random stream. Every draw goes through one of these methods, in
/// the order documented at each operator, so a run is a pure function of
/// (instance, config).
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : m_gen(seed) {}

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(m_gen); }
    bool coin(double p) { return uniform() < p; }
    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(m_gen); }
    std::vector<std::size_t> permutation(std::size_t n);

    std::mt19937_64& engine() { return m_gen; }

private:
    std::mt19937_64 m_gen;
};

struct VariationParams
{
    double eta_c = 15.0;
    double p_c = 0.9;
    double eta_m = 20.0;
    /// Per-coordinate mutation probability; 1/d when unset.
    std::optional<double> p_m;
};

/// SBX spread factor for a uniform draw u.
double sbx_spread_factor(double u, double eta);

/// Simulated binary crossover on the unit cube, children clipped to [0,1].
/// Draws: coin(p_c); then per coordinate coin(0.5) and, if taken, one uniform.
std::pair<Point, Point> sbx_crossover(const Point& p1, const Point& p2, double eta_c, double p_c, Rng& rng);

/// Bounded polynomial-mutation perturbation of a [0,1] coordinate for draw u.
double polynomial_delta(double y, double u, double eta);

/// Draws per coordinate: coin(p_m) and, if taken, one uniform.
Point polynomial_mutation(const Point& p, double eta_m, double p_m, Rng& rng);

/// Fronts of indices, front 0 non-dominated; minimization.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<const Objectives> points);

/// Crowding distance within one front; boundary members get +inf.
std::vector<double> crowding_distance(std::span<const Objectives> front);

/// max_i lambda_i |f_i - z_i|
double tchebycheff(const Objectives& f, const Objectives& lambda, const Objectives& ideal);

/// n evenly spaced weights on the 2-simplex, from (1,0) to (0,1).
std::vector<Objectives> uniform_weights(int n);

/// Called with the survivor set after every complete generation.
using GenerationObserver = std::function<void(std::span<const Individual>)>;

RunResult run_random_search(const ProblemInstance& inst, const AlgoConfig& cfg);
RunResult run_nsga2(const ProblemInstance& inst, const AlgoConfig& cfg, const GenerationObserver& observer = {});
RunResult run_smsemoa(const ProblemInstance& inst, const AlgoConfig& cfg, const GenerationObserver& observer = {});
RunResult run_moead(const ProblemInstance& inst, const AlgoConfig& cfg, const GenerationObserver& observer = {});

RunResult run_algorithm(const ProblemInstance& inst, const AlgoConfig& cfg);

} // namespace warpbench
