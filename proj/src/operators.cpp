#include <warpbench/algorithms.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace warpbench {

std::vector<std::size_t> Rng::permutation(std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    // Explicit Fisher-Yates so the stream order does not depend on std::shuffle.
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    return p;
}

double sbx_spread_factor(double u, double eta)
{
    const double e = 1.0 / (eta + 1.0);
    if (u <= 0.5) return std::pow(2.0 * u, e);
    return std::pow(1.0 / (2.0 * (1.0 - u)), e);
}

std::pair<Point, Point> sbx_crossover(const Point& p1, const Point& p2, double eta_c, double p_c, Rng& rng)
{
    Point c1 = p1;
    Point c2 = p2;
    if (!rng.coin(p_c)) return {c1, c2};
    for (Eigen::Index i = 0; i < p1.size(); ++i) {
        if (!rng.coin(0.5)) continue;
        const double u = rng.uniform();
        if (std::abs(p1[i] - p2[i]) <= 1e-14) continue;
        const double b = sbx_spread_factor(u, eta_c);
        c1[i] = std::clamp(0.5 * ((1.0 + b) * p1[i] + (1.0 - b) * p2[i]), 0.0, 1.0);
        c2[i] = std::clamp(0.5 * ((1.0 - b) * p1[i] + (1.0 + b) * p2[i]), 0.0, 1.0);
    }
    return {c1, c2};
}

double polynomial_delta(double y, double u, double eta)
{
    const double power = 1.0 / (eta + 1.0);
    if (u <= 0.5) {
        const double xy = 1.0 - y;
        const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
        return std::pow(val, power) - 1.0;
    }
    const double xy = y;
    const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
    return 1.0 - std::pow(val, power);
}

Point polynomial_mutation(const Point& p, double eta_m, double p_m, Rng& rng)
{
    Point out = p;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (!rng.coin(p_m)) continue;
        const double u = rng.uniform();
        out[i] = std::clamp(p[i] + polynomial_delta(p[i], u, eta_m), 0.0, 1.0);
    }
    return out;
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<const Objectives> points)
{
    const std::size_t n = points.size();
    std::vector<std::vector<std::size_t>> dominated_by_me(n);
    std::vector<std::size_t> domination_count(n, 0);
    std::vector<std::vector<std::size_t>> fronts(1);

    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (dominates(points[p], points[q])) {
                dominated_by_me[p].push_back(q);
                ++domination_count[q];
            } else if (dominates(points[q], points[p])) {
                dominated_by_me[q].push_back(p);
                ++domination_count[p];
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (domination_count[p] == 0) fronts[0].push_back(p);
    }
    while (!fronts.back().empty()) {
        std::vector<std::size_t> next;
        for (std::size_t p : fronts.back()) {
            for (std::size_t q : dominated_by_me[p]) {
                if (--domination_count[q] == 0) next.push_back(q);
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(next));
    }
    fronts.pop_back();
    return fronts;
}

std::vector<double> crowding_distance(std::span<const Objectives> front)
{
    const std::size_t n = front.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, 0.0);
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), inf);
        return dist;
    }
    std::vector<std::size_t> order(n);
    for (int m = 0; m < 2; ++m) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return front[a][m] < front[b][m];
        });
        const double range = front[order.back()][m] - front[order.front()][m];
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        if (range <= 0.0) continue;
        for (std::size_t k = 1; k + 1 < n; ++k) {
            dist[order[k]] += (front[order[k + 1]][m] - front[order[k - 1]][m]) / range;
        }
    }
    return dist;
}

double tchebycheff(const Objectives& f, const Objectives& lambda, const Objectives& ideal)
{
    return (lambda.array() * (f - ideal).array().abs()).maxCoeff();
}

std::vector<Objectives> uniform_weights(int n)
{
    if (n < 1) throw parameter_error("uniform_weights needs n >= 1");
    if (n == 1) return {Objectives(0.5, 0.5)};
    std::vector<Objectives> w;
    w.reserve(n);
    for (int j = 0; j < n; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(n - 1);
        w.emplace_back(1.0 - t, t);
    }
    return w;
}

} // namespace warpbench
