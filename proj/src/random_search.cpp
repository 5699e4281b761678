#include <warpbench/algorithms.hpp>

#include <warpbench/indicators.hpp>

#include "run_context.hpp"

namespace warpbench {

RunResult run_random_search(const ProblemInstance& inst, const AlgoConfig& cfg)
{
    detail::RunContext ctx(inst, cfg);
    ParetoArchive archive;
    std::vector<Individual> kept;
    while (ctx.remaining() > 0) {
        Individual ind = ctx.evaluate(ctx.random_point());
        if (archive.insert(ind.f_original, ind.eval_index)) {
            std::erase_if(kept, [&](const Individual& k) { return dominates(ind.f_original, k.f_original); });
            kept.push_back(std::move(ind));
        }
    }
    // The non-dominated evaluations stand in for a final population.
    ctx.result.final_population = std::move(kept);
    return std::move(ctx.result);
}

} // namespace warpbench
