#pragma once

#include <string>

#include <warpbench/problems.hpp>
#include <warpbench/transforms.hpp>

namespace warpbench {

/// A base problem seen through one search-space and one objective-space transform.
class ProblemInstance
{
public:
    /// Throws parameter_error when the objective transform is a rotation and
    /// shape_error when a search rotation does not match the problem dimension.
    ProblemInstance(ProblemId problem, TransformSpec search, TransformSpec objective);

    const ProblemId& problem() const { return m_problem; }
    const TransformSpec& search_transform() const { return m_search; }
    const TransformSpec& objective_transform() const { return m_objective; }
    int dim() const { return m_problem.dim; }

    /// `<problem>__s:<search>__o:<objective>`, e.g. `dtlz1-d2__s:rot-seed3__o:id`.
    std::string descriptor() const;

private:
    ProblemId m_problem;
    TransformSpec m_search;
    TransformSpec m_objective;
};

struct EvaluationRecord
{
    long eval_index = 0;
    Point x_seen;
    Objectives f_seen;
    Objectives f_original;
};

EvaluationRecord evaluate_instance(const ProblemInstance& inst, const Eigen::Ref<const Point>& x_seen, long eval_index);

/// Beta-CDF on objective components inside [0,1]; others pass through.
Objectives warp_objectives(const TransformSpec& t, const Objectives& f);
Objectives unwarp_objectives(const TransformSpec& t, const Objectives& f_seen);

} // namespace warpbench
