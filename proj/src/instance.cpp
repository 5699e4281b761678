#include <warpbench/instance.hpp>

#include <cmath>

#include <warpbench/format.hpp>

namespace warpbench {

namespace {

void check_objective_transform(const TransformSpec& t)
{
    if (t.kind() == TransformKind::sphered_rotation) {
        throw parameter_error("sphered rotation cannot be applied to the objective space");
    }
}

void check_finite(const Objectives& f)
{
    if (!f.allFinite()) {
        throw numeric_error("non-finite objective (" + shortest(f[0]) + ", " + shortest(f[1]) + ")");
    }
}

template <class Fn>
Objectives map_unit_components(const TransformSpec& t, const Objectives& f, Fn&& fn)
{
    check_objective_transform(t);
    check_finite(f);
    if (t.kind() == TransformKind::identity) return f;
    Objectives out = f;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (out[i] >= 0.0 && out[i] <= 1.0) out[i] = fn(out[i]);
    }
    return out;
}

} // namespace

ProblemInstance::ProblemInstance(ProblemId problem, TransformSpec search, TransformSpec objective)
    : m_problem(problem), m_search(std::move(search)), m_objective(std::move(objective))
{
    if (!m_problem.valid()) throw unknown_problem_error("unknown problem " + m_problem.name());
    check_objective_transform(m_objective);
    if (m_search.kind() == TransformKind::sphered_rotation && m_search.rotation().dim() != m_problem.dim) {
        throw shape_error("search rotation dimension does not match " + m_problem.name());
    }
}

std::string ProblemInstance::descriptor() const
{
    return m_problem.name() + "__s:" + m_search.descriptor() + "__o:" + m_objective.descriptor();
}

EvaluationRecord evaluate_instance(const ProblemInstance& inst, const Eigen::Ref<const Point>& x_seen, long eval_index)
{
    EvaluationRecord rec;
    rec.eval_index = eval_index;
    rec.x_seen = x_seen;
    const Point x_inner = apply_forward(inst.search_transform(), x_seen);
    rec.f_original = evaluate(inst.problem(), x_inner);
    rec.f_seen = warp_objectives(inst.objective_transform(), rec.f_original);
    return rec;
}

Objectives warp_objectives(const TransformSpec& t, const Objectives& f)
{
    return map_unit_components(t, f, [&](double v) { return reg_inc_beta(v, t.shape()); });
}

Objectives unwarp_objectives(const TransformSpec& t, const Objectives& f_seen)
{
    return map_unit_components(t, f_seen, [&](double v) { return inv_reg_inc_beta(v, t.shape()); });
}

} // namespace warpbench
