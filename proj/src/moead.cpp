#include <warpbench/algorithms.hpp>

#include <algorithm>
#include <numeric>

#include "run_context.hpp"

namespace warpbench {

namespace {

constexpr int max_neighbours = 20;
constexpr double neighbour_mating_probability = 0.9;
constexpr int max_replacements = 2;

// Indices of the T weights closest to each weight (self included), nearest first.
std::vector<std::vector<std::size_t>> neighbourhoods(const std::vector<Objectives>& weights, std::size_t t)
{
    const std::size_t n = weights.size();
    std::vector<std::vector<std::size_t>> nb(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return (weights[a] - weights[i]).squaredNorm() < (weights[b] - weights[i]).squaredNorm();
        });
        order.resize(t);
        nb[i] = std::move(order);
    }
    return nb;
}

} // namespace

RunResult run_moead(const ProblemInstance& inst, const AlgoConfig& cfg, const GenerationObserver& observer)
{
    detail::RunContext ctx(inst, cfg);
    const VariationParams var;
    const double p_m = ctx.mutation_probability(var);
    const auto n = static_cast<std::size_t>(cfg.population);

    const auto weights = uniform_weights(cfg.population);
    const auto nb = neighbourhoods(weights, std::min<std::size_t>(max_neighbours, n));

    std::vector<Individual> pop;
    for (std::size_t i = 0; i < n; ++i) pop.push_back(ctx.evaluate(ctx.random_point()));
    Objectives ideal = pop.front().f_seen;
    for (const auto& ind : pop) ideal = ideal.cwiseMin(ind.f_seen);
    if (observer) observer(pop);

    while (ctx.remaining() > 0) {
        for (std::size_t i : ctx.rng.permutation(n)) {
            if (ctx.remaining() == 0) break;

            // Mating pool: the neighbourhood, occasionally the whole population.
            std::vector<std::size_t> pool;
            if (ctx.rng.coin(neighbour_mating_probability)) {
                pool = nb[i];
            } else {
                pool.resize(n);
                std::iota(pool.begin(), pool.end(), std::size_t{0});
            }
            const std::size_t a = ctx.rng.below(pool.size());
            std::size_t b = ctx.rng.below(pool.size() - 1);
            if (b >= a) ++b;

            auto children = sbx_crossover(pop[pool[a]].x, pop[pool[b]].x, var.eta_c, var.p_c, ctx.rng);
            Individual child = ctx.evaluate(polynomial_mutation(children.first, var.eta_m, p_m, ctx.rng));
            ideal = ideal.cwiseMin(child.f_seen);

            int replaced = 0;
            for (std::size_t k : ctx.rng.permutation(nb[i].size())) {
                if (replaced == max_replacements) break;
                const std::size_t j = nb[i][k];
                if (tchebycheff(child.f_seen, weights[j], ideal) < tchebycheff(pop[j].f_seen, weights[j], ideal)) {
                    pop[j] = child;
                    ++replaced;
                }
            }
        }
        if (observer) observer(pop);
    }

    ctx.result.final_population = std::move(pop);
    return std::move(ctx.result);
}

} // namespace warpbench
