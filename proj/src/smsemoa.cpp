#include <warpbench/algorithms.hpp>

#include <warpbench/indicators.hpp>

#include "run_context.hpp"

namespace warpbench {

namespace {

std::size_t rank_tournament(const std::vector<std::size_t>& rank, Rng& rng)
{
    const std::size_t a = rng.below(rank.size());
    const std::size_t b = rng.below(rank.size());
    return rank[b] < rank[a] ? b : a;
}

} // namespace

RunResult run_smsemoa(const ProblemInstance& inst, const AlgoConfig& cfg, const GenerationObserver& observer)
{
    detail::RunContext ctx(inst, cfg);
    const VariationParams var;
    const double p_m = ctx.mutation_probability(var);

    std::vector<Individual> pop;
    for (int i = 0; i < cfg.population; ++i) pop.push_back(ctx.evaluate(ctx.random_point()));

    std::vector<std::size_t> rank(pop.size(), 0);
    {
        const auto fronts = fast_nondominated_sort(detail::seen_objectives(pop));
        for (std::size_t r = 0; r < fronts.size(); ++r)
            for (std::size_t i : fronts[r]) rank[i] = r;
    }
    if (observer) observer(pop);

    while (ctx.remaining() > 0) {
        const Point& p1 = pop[rank_tournament(rank, ctx.rng)].x;
        const Point& p2 = pop[rank_tournament(rank, ctx.rng)].x;
        auto children = sbx_crossover(p1, p2, var.eta_c, var.p_c, ctx.rng);
        pop.push_back(ctx.evaluate(polynomial_mutation(children.first, var.eta_m, p_m, ctx.rng)));

        const auto f = detail::seen_objectives(pop);
        const auto fronts = fast_nondominated_sort(f);
        const auto& worst = fronts.back();

        std::size_t victim = worst.front();
        if (worst.size() > 1) {
            std::vector<Objectives> wf;
            for (std::size_t i : worst) wf.push_back(f[i]);
            Objectives ref = wf.front();
            for (const auto& p : wf) ref = ref.cwiseMax(p);
            ref.array() += 1.0;
            const auto contrib = hv_contributions_2d<double>(wf, ref);
            std::size_t best = 0;
            for (std::size_t k = 1; k < contrib.size(); ++k) {
                if (contrib[k] < contrib[best]) best = k;
            }
            victim = worst[best];
        }

        rank.assign(pop.size(), 0);
        for (std::size_t r = 0; r < fronts.size(); ++r)
            for (std::size_t i : fronts[r]) rank[i] = r;
        pop.erase(pop.begin() + static_cast<std::ptrdiff_t>(victim));
        rank.erase(rank.begin() + static_cast<std::ptrdiff_t>(victim));
        if (observer) observer(pop);
    }

    ctx.result.final_population = std::move(pop);
    return std::move(ctx.result);
}

} // namespace warpbench
