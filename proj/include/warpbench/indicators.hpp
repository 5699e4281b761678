#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include <warpbench/transforms.hpp>
#include <warpbench/types.hpp>

namespace warpbench {

/// Exact hypervolume of a bi-objective point set (minimization) against
/// `ref`, by sorting on the first objective and sweeping the second.
/// Points not strictly better than `ref` in both objectives add nothing.
template <class Scalar>
Scalar hypervolume_2d(std::span<const vec_type<Scalar, 2>> points, const vec_type<Scalar, 2>& ref)
{
    std::vector<vec_type<Scalar, 2>> pts;
    pts.reserve(points.size());
    for (const auto& p : points) {
        if (p[0] < ref[0] && p[1] < ref[1]) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    Scalar hv = 0;
    Scalar level = ref[1];
    for (const auto& p : pts) {
        if (p[1] < level) {
            hv += (ref[0] - p[0]) * (level - p[1]);
            level = p[1];
        }
    }
    return hv;
}

template <class Scalar>
Scalar hypervolume_2d(const std::vector<vec_type<Scalar, 2>>& points, const vec_type<Scalar, 2>& ref)
{
    return hypervolume_2d<Scalar>(std::span<const vec_type<Scalar, 2>>(points), ref);
}

/// Exclusive hypervolume contribution of each member of a mutually
/// non-dominated set. Exact duplicates contribute zero.
template <class Scalar>
std::vector<Scalar> hv_contributions_2d(std::span<const vec_type<Scalar, 2>> front, const vec_type<Scalar, 2>& ref)
{
    const std::size_t n = front.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return front[a][0] < front[b][0] || (front[a][0] == front[b][0] && front[a][1] < front[b][1]);
    });
    std::vector<Scalar> contrib(n, Scalar(0));
    for (std::size_t k = 0; k < n; ++k) {
        const auto& p = front[order[k]];
        const Scalar right = k + 1 < n ? front[order[k + 1]][0] : ref[0];
        const Scalar upper = k > 0 ? front[order[k - 1]][1] : ref[1];
        contrib[order[k]] = std::max<Scalar>(0, right - p[0]) * std::max<Scalar>(0, upper - p[1]);
    }
    return contrib;
}

/// Non-dominated subset of a point set, sorted by the first objective.
/// Duplicate vectors are kept once.
std::vector<Objectives> nondominated_2d(std::span<const Objectives> points);

/// Unbounded archive of mutually non-dominated objective vectors.
class ParetoArchive
{
public:
    struct Entry
    {
        Objectives f;
        long eval_index = 0;
    };

    /// Adds `f` unless some entry weakly dominates it; entries that `f`
    /// dominates are dropped. Throws numeric_error on non-finite input.
    bool insert(const Objectives& f, long eval_index);

    const std::vector<Entry>& entries() const { return m_entries; }
    std::vector<Objectives> points() const;

    /// Every accepted insertion in order. Replaying it reproduces the
    /// archive at any earlier evaluation index.
    const std::vector<Entry>& history() const { return m_history; }

    std::size_t size() const { return m_entries.size(); }
    bool empty() const { return m_entries.empty(); }

private:
    std::vector<Entry> m_entries;
    std::vector<Entry> m_history;
};

struct NormalizationBox
{
    Objectives ideal;
    Objectives nadir;
};

/// Ideal and nadir of the non-dominated union of the given per-run fronts.
/// Throws degenerate_error when the pooled front has zero extent in an
/// objective, and parameter_error when no points are given.
NormalizationBox compute_normalization(std::span<const std::vector<Objectives>> run_fronts);

/// Hypervolume in the normalized frame with reference (1,1). Points beyond
/// the nadir in any objective are dropped.
double normalized_hv(std::span<const Objectives> points, const NormalizationBox& box);

/// transformed_hv / base_hv. Throws degenerate_error when base_hv <= 0.
double relative_hv(double transformed_hv, double base_hv);

/// 1-Wasserstein distance of two equal-size empirical samples.
double wasserstein_1d(std::span<const double> a, std::span<const double> b);

/// Wasserstein distance between the pairwise Euclidean distances of n
/// uniform points before and after the transform.
double density_change(const TransformSpec& t, int n, int dim, std::uint64_t seed);

} // namespace warpbench
