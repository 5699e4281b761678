#include <warpbench/indicators.hpp>

#include <cmath>
#include <random>

#include <warpbench/format.hpp>

namespace warpbench {

std::vector<Objectives> nondominated_2d(std::span<const Objectives> points)
{
    std::vector<Objectives> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](const Objectives& a, const Objectives& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    std::vector<Objectives> out;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : sorted) {
        if (p[1] < best) {
            out.push_back(p);
            best = p[1];
        }
    }
    return out;
}

bool ParetoArchive::insert(const Objectives& f, long eval_index)
{
    if (!f.allFinite()) {
        throw numeric_error("archive insert of non-finite objective (" + shortest(f[0]) + ", " + shortest(f[1]) + ")");
    }
    for (const auto& e : m_entries) {
        if (e.f == f || dominates(e.f, f)) return false;
    }
    std::erase_if(m_entries, [&](const Entry& e) { return dominates(f, e.f); });
    m_entries.push_back({f, eval_index});
    m_history.push_back({f, eval_index});
    return true;
}

std::vector<Objectives> ParetoArchive::points() const
{
    std::vector<Objectives> out;
    out.reserve(m_entries.size());
    for (const auto& e : m_entries) out.push_back(e.f);
    return out;
}

NormalizationBox compute_normalization(std::span<const std::vector<Objectives>> run_fronts)
{
    std::vector<Objectives> pooled;
    for (const auto& front : run_fronts) pooled.insert(pooled.end(), front.begin(), front.end());
    if (pooled.empty()) throw parameter_error("normalization needs at least one point");

    const std::vector<Objectives> front = nondominated_2d(pooled);
    NormalizationBox box{front.front(), front.front()};
    for (const auto& p : front) {
        box.ideal = box.ideal.cwiseMin(p);
        box.nadir = box.nadir.cwiseMax(p);
    }
    for (int i = 0; i < 2; ++i) {
        if (!(box.ideal[i] < box.nadir[i])) {
            throw degenerate_error(
                "pooled front has zero extent in objective " + std::to_string(i + 1) + " (" + shortest(box.ideal[i]) +
                ")"
            );
        }
    }
    return box;
}

double normalized_hv(std::span<const Objectives> points, const NormalizationBox& box)
{
    if (!((box.ideal.array() < box.nadir.array()).all())) {
        throw degenerate_error("normalization box has zero or negative extent");
    }
    const Objectives extent = box.nadir - box.ideal;
    std::vector<Objectives> scaled;
    scaled.reserve(points.size());
    for (const auto& p : points) {
        const Objectives q = (p - box.ideal).cwiseQuotient(extent);
        if (q[0] <= 1.0 && q[1] <= 1.0) scaled.push_back(q);
    }
    const double hv = hypervolume_2d<double>(scaled, Objectives(1.0, 1.0));
    return std::clamp(hv, 0.0, 1.0);
}

double relative_hv(double transformed_hv, double base_hv)
{
    if (!(base_hv > 0.0)) throw degenerate_error("base hypervolume must be positive, got " + shortest(base_hv));
    return transformed_hv / base_hv;
}

double wasserstein_1d(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size() || a.empty()) {
        throw shape_error(
            "wasserstein_1d needs equal non-empty samples, got " + std::to_string(a.size()) + " and " +
            std::to_string(b.size())
        );
    }
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    double total = 0.0;
    for (std::size_t i = 0; i < sa.size(); ++i) total += std::abs(sa[i] - sb[i]);
    return total / static_cast<double>(sa.size());
}

namespace {

std::vector<double> pairwise_distances(const std::vector<Point>& pts)
{
    std::vector<double> d;
    d.reserve(pts.size() * (pts.size() - 1) / 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) d.push_back((pts[i] - pts[j]).norm());
    return d;
}

} // namespace

double density_change(const TransformSpec& t, int n, int dim, std::uint64_t seed)
{
    if (n < 2) throw parameter_error("density_change needs n >= 2");
    if (dim < 1) throw parameter_error("density_change needs dim >= 1");
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    std::vector<Point> before(n);
    std::vector<Point> after(n);
    for (int i = 0; i < n; ++i) {
        before[i].resize(dim);
        for (int k = 0; k < dim; ++k) before[i][k] = unif(gen);
        after[i] = apply_forward(t, before[i]);
    }
    return wasserstein_1d(pairwise_distances(before), pairwise_distances(after));
}

} // namespace warpbench
