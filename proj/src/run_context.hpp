#pragma once

#include <warpbench/algorithms.hpp>

namespace warpbench::detail {

/// Evaluation bookkeeping shared by the optimizers: owns the run log and
/// the evaluation counter.
class RunContext
{
public:
    RunContext(const ProblemInstance& inst, const AlgoConfig& cfg) : m_inst(inst), rng(cfg.seed)
    {
        cfg.validate();
        result.config = cfg;
        result.instance = inst.descriptor();
        result.log.reserve(static_cast<std::size_t>(cfg.budget));
    }

    long evaluations() const { return static_cast<long>(result.log.size()); }
    long remaining() const { return result.config.budget - evaluations(); }
    int dim() const { return m_inst.dim(); }

    Individual evaluate(const Point& x)
    {
        const long index = evaluations() + 1;
        EvaluationRecord rec = evaluate_instance(m_inst, x, index);
        Individual ind{rec.x_seen, rec.f_seen, rec.f_original, index};
        result.log.push_back(std::move(rec));
        return ind;
    }

    Point random_point()
    {
        Point x(dim());
        for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.uniform();
        return x;
    }

    double mutation_probability(const VariationParams& v) const { return v.p_m.value_or(1.0 / dim()); }

    RunResult result;

private:
    const ProblemInstance& m_inst;

public:
    Rng rng;
};

inline std::vector<Objectives> seen_objectives(std::span<const Individual> pop)
{
    std::vector<Objectives> f;
    f.reserve(pop.size());
    for (const auto& ind : pop) f.push_back(ind.f_seen);
    return f;
}

} // namespace warpbench::detail
