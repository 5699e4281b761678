#include <warpbench/algorithms.hpp>

#include <algorithm>
#include <numeric>

#include "run_context.hpp"

namespace warpbench {

namespace {

struct RankedPopulation
{
    std::vector<Individual> members;
    std::vector<std::size_t> rank;
    std::vector<double> crowding;
};

// Non-dominated rank plus crowding within each front, for the given set.
void assign_rank_and_crowding(std::span<const Individual> pop, std::vector<std::size_t>& rank, std::vector<double>& crowd)
{
    const auto f = detail::seen_objectives(pop);
    const auto fronts = fast_nondominated_sort(f);
    rank.assign(pop.size(), 0);
    crowd.assign(pop.size(), 0.0);
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        std::vector<Objectives> ff;
        for (std::size_t i : fronts[r]) ff.push_back(f[i]);
        const auto cd = crowding_distance(ff);
        for (std::size_t k = 0; k < fronts[r].size(); ++k) {
            rank[fronts[r][k]] = r;
            crowd[fronts[r][k]] = cd[k];
        }
    }
}

// Binary tournament: lower rank wins, then larger crowding, then the first draw.
std::size_t tournament(const RankedPopulation& pop, Rng& rng)
{
    const std::size_t a = rng.below(pop.members.size());
    const std::size_t b = rng.below(pop.members.size());
    if (pop.rank[a] != pop.rank[b]) return pop.rank[a] < pop.rank[b] ? a : b;
    if (pop.crowding[a] != pop.crowding[b]) return pop.crowding[a] > pop.crowding[b] ? a : b;
    return a;
}

// (mu + mu) survival: whole fronts while they fit, then the most crowded-apart
// members of the splitting front.
RankedPopulation survive(std::vector<Individual> merged, std::size_t mu)
{
    const auto f = detail::seen_objectives(merged);
    const auto fronts = fast_nondominated_sort(f);
    RankedPopulation next;
    for (std::size_t r = 0; r < fronts.size() && next.members.size() < mu; ++r) {
        std::vector<Objectives> ff;
        for (std::size_t i : fronts[r]) ff.push_back(f[i]);
        const auto cd = crowding_distance(ff);
        std::vector<std::size_t> order(fronts[r].size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        if (next.members.size() + order.size() > mu) {
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cd[a] > cd[b]; });
            order.resize(mu - next.members.size());
        }
        for (std::size_t k : order) {
            next.members.push_back(std::move(merged[fronts[r][k]]));
        }
    }
    // Crowding for tournaments is recomputed on the survivors.
    assign_rank_and_crowding(next.members, next.rank, next.crowding);
    return next;
}

} // namespace

RunResult run_nsga2(const ProblemInstance& inst, const AlgoConfig& cfg, const GenerationObserver& observer)
{
    detail::RunContext ctx(inst, cfg);
    const VariationParams var;
    const double p_m = ctx.mutation_probability(var);
    const auto mu = static_cast<std::size_t>(cfg.population);

    RankedPopulation pop;
    for (std::size_t i = 0; i < mu; ++i) pop.members.push_back(ctx.evaluate(ctx.random_point()));
    assign_rank_and_crowding(pop.members, pop.rank, pop.crowding);
    if (observer) observer(pop.members);

    while (ctx.remaining() > 0) {
        std::vector<Point> children;
        while (children.size() < mu) {
            const Point& p1 = pop.members[tournament(pop, ctx.rng)].x;
            const Point& p2 = pop.members[tournament(pop, ctx.rng)].x;
            auto [c1, c2] = sbx_crossover(p1, p2, var.eta_c, var.p_c, ctx.rng);
            children.push_back(polynomial_mutation(c1, var.eta_m, p_m, ctx.rng));
            if (children.size() < mu) children.push_back(polynomial_mutation(c2, var.eta_m, p_m, ctx.rng));
        }

        std::vector<Individual> merged = pop.members;
        bool complete = true;
        for (const Point& c : children) {
            if (ctx.remaining() == 0) {
                complete = false;
                break;
            }
            merged.push_back(ctx.evaluate(c));
        }
        // A truncated last generation is logged but not selected from.
        if (!complete || merged.size() < 2 * mu) break;

        pop = survive(std::move(merged), mu);
        if (observer) observer(pop.members);
    }

    ctx.result.final_population = std::move(pop.members);
    return std::move(ctx.result);
}

} // namespace warpbench
