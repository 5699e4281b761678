#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Core>

#include <warpbench/types.hpp>

namespace warpbench {

enum class Suite
{
    zdt,
    dtlz,
    mmf
};

/// Base benchmark problem: suite, index within the suite, search dimension.
struct ProblemId
{
    Suite suite = Suite::zdt;
    int index = 1;
    int dim = 2;

    bool valid() const;

    /// `zdt1-d2`, `dtlz3-d10`, `mmf4-d2`.
    std::string name() const;
    std::string suite_name() const;

    friend bool operator==(const ProblemId&, const ProblemId&) = default;
};

/// Throws unknown_problem_error for anything outside the supported set.
ProblemId parse_problem(const std::string& name);

/// Every valid problem, ZDT then DTLZ then MMF, ascending index, d=2 before d=10.
std::vector<ProblemId> list_problems();

struct NativeBounds
{
    Point lower;
    Point upper;
};

NativeBounds native_bounds(const ProblemId& id);

/// Evaluates the problem at a unit-cube point (mapped affinely to the native
/// box before the suite formula is applied).
Objectives evaluate(const ProblemId& id, const Eigen::Ref<const Point>& x_unit);

/// Suite formulas on native coordinates, bi-objective, minimization.
namespace formulas {

template <class Derived>
auto zdt(int index, const Eigen::MatrixBase<Derived>& x)
{
    using Scalar = typename Derived::Scalar;
    using std::numbers::pi_v;
    const auto n = x.size();
    const auto tail = x.tail(n - 1);
    vec_type<Scalar, 2> f;

    switch (index) {
    case 1:
    case 2:
    case 3: {
        const Scalar g = 1 + 9 * tail.sum() / Scalar(n - 1);
        const Scalar r = x[0] / g;
        f[0] = x[0];
        if (index == 1) f[1] = g * (1 - std::sqrt(r));
        else if (index == 2) f[1] = g * (1 - r * r);
        else f[1] = g * (1 - std::sqrt(r) - r * std::sin(10 * pi_v<Scalar> * x[0]));
        break;
    }
    case 4: {
        Scalar g = 1 + 10 * Scalar(n - 1);
        for (Eigen::Index i = 1; i < n; ++i) g += x[i] * x[i] - 10 * std::cos(4 * pi_v<Scalar> * x[i]);
        f[0] = x[0];
        f[1] = g * (1 - std::sqrt(x[0] / g));
        break;
    }
    case 6: {
        const Scalar s = std::sin(6 * pi_v<Scalar> * x[0]);
        f[0] = 1 - std::exp(-4 * x[0]) * std::pow(s, 6);
        const Scalar g = 1 + 9 * std::pow(tail.sum() / Scalar(n - 1), Scalar(0.25));
        const Scalar r = f[0] / g;
        f[1] = g * (1 - r * r);
        break;
    }
    default:
        f.setConstant(std::numeric_limits<Scalar>::quiet_NaN());
    }
    return f;
}

/// DTLZ with two objectives: x[0] is the position variable, the remaining
/// k = n - 1 variables feed the distance function g.
template <class Derived>
auto dtlz(int index, const Eigen::MatrixBase<Derived>& x)
{
    using Scalar = typename Derived::Scalar;
    using std::numbers::pi_v;
    const auto n = x.size();
    const auto k = n - 1;
    const auto xm = x.tail(k);
    vec_type<Scalar, 2> f;

    auto rastrigin_g = [&] {
        Scalar s = 0;
        for (Eigen::Index i = 0; i < k; ++i) {
            const Scalar d = xm[i] - Scalar(0.5);
            s += d * d - std::cos(20 * pi_v<Scalar> * d);
        }
        return 100 * (Scalar(k) + s);
    };
    auto sphere_g = [&] { return (xm.array() - Scalar(0.5)).square().sum(); };
    auto circle = [&](Scalar theta, Scalar g) {
        f[0] = (1 + g) * std::cos(theta * pi_v<Scalar> / 2);
        f[1] = (1 + g) * std::sin(theta * pi_v<Scalar> / 2);
    };

    switch (index) {
    case 1: {
        const Scalar g = rastrigin_g();
        f[0] = Scalar(0.5) * x[0] * (1 + g);
        f[1] = Scalar(0.5) * (1 - x[0]) * (1 + g);
        break;
    }
    case 2:
        circle(x[0], sphere_g());
        break;
    case 3:
        circle(x[0], rastrigin_g());
        break;
    case 4:
        circle(std::pow(x[0], Scalar(100)), sphere_g());
        break;
    case 5:
        // With two objectives the only angle is x[0] itself.
        circle(x[0], sphere_g());
        break;
    case 6:
        circle(x[0], xm.array().pow(Scalar(0.1)).sum());
        break;
    case 7: {
        const Scalar g = 1 + 9 * xm.sum() / Scalar(k);
        f[0] = x[0];
        const Scalar h = 2 - f[0] / (1 + g) * (1 + std::sin(3 * pi_v<Scalar> * f[0]));
        f[1] = (1 + g) * h;
        break;
    }
    default:
        f.setConstant(std::numeric_limits<Scalar>::quiet_NaN());
    }
    return f;
}

/// CEC 2019 multimodal multi-objective problems (two variables).
template <class Derived>
auto mmf(int index, const Eigen::MatrixBase<Derived>& x)
{
    using Scalar = typename Derived::Scalar;
    using std::numbers::pi_v;
    const Scalar pi = pi_v<Scalar>;
    vec_type<Scalar, 2> f;
    const Scalar x1 = x[0];
    Scalar x2 = x[1];

    switch (index) {
    case 1: {
        const Scalar a = std::abs(x1 - 2);
        const Scalar t = x2 - std::sin(6 * pi * a + pi);
        f << a, 1 - std::sqrt(a) + 2 * t * t;
        break;
    }
    case 2: {
        const Scalar y = x2 <= 1 ? x2 - std::sqrt(x1) : x2 - 1 - std::sqrt(x1);
        f << x1, 1 - std::sqrt(x1) + 2 * (4 * y * y - 2 * std::cos(20 * y * pi / std::sqrt(Scalar(2))) + 2);
        break;
    }
    case 4: {
        const Scalar a = std::abs(x1);
        const Scalar t = x2 < 1 ? x2 - std::sin(pi * a) : x2 - 1 - std::sin(pi * a);
        f << a, 1 - x1 * x1 + 2 * t * t;
        break;
    }
    case 5: {
        const Scalar a = std::abs(x1 - 2);
        const Scalar shift = x2 <= 1 ? Scalar(0) : Scalar(2);
        const Scalar t = x2 - shift - std::sin(6 * pi * a + pi);
        f << a, 1 - std::sqrt(a) + 2 * t * t;
        break;
    }
    case 7: {
        const Scalar a = std::abs(x1 - 2);
        const Scalar t = x2 - (Scalar(0.3) * a * a * std::cos(24 * pi * a + 4 * pi) + Scalar(0.6) * a) *
                                  std::sin(6 * pi * a + pi);
        f << a, 1 - std::sqrt(a) + t * t;
        break;
    }
    case 8: {
        if (x2 > 4) x2 -= 4;
        const Scalar s = std::sin(std::abs(x1));
        const Scalar t = x2 - (s + std::abs(x1));
        f << s, std::sqrt(1 - s * s) + 2 * t * t;
        break;
    }
    default:
        f.setConstant(std::numeric_limits<Scalar>::quiet_NaN());
    }
    return f;
}

} // namespace formulas

} // namespace warpbench
