#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <string>

#include <warpbench/errors.hpp>

namespace warpbench {

/// Shape pair of a Beta distribution.
template <std::floating_point Scalar>
struct ShapeParams
{
    Scalar alpha{1};
    Scalar beta{1};

    bool valid() const
    {
        return std::isfinite(alpha) && std::isfinite(beta) && alpha > 0 && beta > 0;
    }
};

namespace detail {

inline constexpr double cdf_rel_tolerance = 1e-14;
inline constexpr double inverse_abs_tolerance = 1e-12;
inline constexpr int max_iterations = 200;

template <class Scalar>
void check_shape(const ShapeParams<Scalar>& p)
{
    if (!p.valid()) {
        throw parameter_error(
            "Beta shape parameters must be finite and positive (alpha=" +
            std::to_string(double(p.alpha)) + ", beta=" + std::to_string(double(p.beta)) + ")"
        );
    }
}

template <class Scalar>
void check_unit(Scalar x, const char* what)
{
    if (!std::isfinite(x) || x < 0 || x > 1) {
        throw domain_error(std::string(what) + " must lie in [0,1], got " + std::to_string(double(x)));
    }
}

template <class Scalar>
Scalar log_beta(Scalar a, Scalar b)
{
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for I_x(a,b), evaluated by modified Lentz.
// Converges fast for x < (a+1)/(a+b+2).
template <class Scalar>
Scalar beta_continued_fraction(Scalar x, Scalar a, Scalar b)
{
    constexpr Scalar tiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
    const Scalar eps = std::max<Scalar>(Scalar(cdf_rel_tolerance), 4 * std::numeric_limits<Scalar>::epsilon());

    const Scalar qab = a + b;
    const Scalar qap = a + 1;
    const Scalar qam = a - 1;
    Scalar c = 1;
    Scalar d = 1 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1 / d;
    Scalar h = d;
    for (int m = 1; m <= max_iterations; ++m) {
        const Scalar m2 = Scalar(2 * m);
        Scalar aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1 / d;
        const Scalar del = d * c;
        h *= del;
        if (std::abs(del - 1) <= eps) return h;
    }
    throw numeric_error("incomplete beta continued fraction did not converge");
}

// Beta density, used as the Newton derivative.
template <class Scalar>
Scalar beta_density(Scalar x, Scalar a, Scalar b, Scalar lbeta)
{
    return std::exp((a - 1) * std::log(x) + (b - 1) * std::log1p(-x) - lbeta);
}

} // namespace detail

/// Regularized incomplete beta function I_x(alpha, beta), i.e. the Beta CDF.
/// Exact at the endpoints; clamped to [0,1].
template <std::floating_point Scalar>
Scalar reg_inc_beta(Scalar x, const ShapeParams<Scalar>& p)
{
    detail::check_unit(x, "x");
    detail::check_shape(p);
    if (x == 0) return 0;
    if (x == 1) return 1;

    const Scalar a = p.alpha;
    const Scalar b = p.beta;
    const Scalar lbeta = detail::log_beta(a, b);
    const Scalar front = std::exp(a * std::log(x) + b * std::log1p(-x) - lbeta);

    Scalar value;
    if (x < (a + 1) / (a + b + 2)) {
        value = front * detail::beta_continued_fraction(x, a, b) / a;
    } else {
        value = 1 - front * detail::beta_continued_fraction(Scalar(1) - x, b, a) / b;
    }
    return std::clamp<Scalar>(value, 0, 1);
}

template <std::floating_point Scalar>
Scalar reg_inc_beta(Scalar x, Scalar alpha, Scalar beta)
{
    return reg_inc_beta(x, ShapeParams<Scalar>{alpha, beta});
}

/// Inverse of reg_inc_beta in x (the Beta percent point function).
///
/// Safeguarded Newton: the bracket [lo, hi] is tightened on every step and
/// a step leaving it is replaced by bisection. Starts from the usual
/// tail/normal approximations of the quantile.
template <std::floating_point Scalar>
Scalar inv_reg_inc_beta(Scalar q, const ShapeParams<Scalar>& p)
{
    detail::check_unit(q, "q");
    detail::check_shape(p);
    if (q == 0) return 0;
    if (q == 1) return 1;

    const Scalar a = p.alpha;
    const Scalar b = p.beta;
    const Scalar lbeta = detail::log_beta(a, b);

    Scalar x;
    if (a >= 1 && b >= 1) {
        const Scalar pp = q < Scalar(0.5) ? q : 1 - q;
        const Scalar t = std::sqrt(-2 * std::log(pp));
        Scalar z = (Scalar(2.30753) + t * Scalar(0.27061)) / (1 + t * (Scalar(0.99229) + t * Scalar(0.04481))) - t;
        if (q < Scalar(0.5)) z = -z;
        const Scalar al = (z * z - 3) / 6;
        const Scalar h = 2 / (1 / (2 * a - 1) + 1 / (2 * b - 1));
        const Scalar w = (z * std::sqrt(al + h) / h) -
                         (1 / (2 * b - 1) - 1 / (2 * a - 1)) * (al + Scalar(5) / 6 - 2 / (3 * h));
        x = a / (a + b * std::exp(2 * w));
    } else {
        const Scalar t = std::exp(a * std::log(a / (a + b))) / a;
        const Scalar u = std::exp(b * std::log(b / (a + b))) / b;
        const Scalar w = t + u;
        if (q < t / w) x = std::pow(a * w * q, 1 / a);
        else x = 1 - std::pow(b * w * (1 - q), 1 / b);
    }

    Scalar lo = 0;
    Scalar hi = 1;
    if (!(x > 0 && x < 1)) x = Scalar(0.5);

    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    bool converged = false;
    for (int it = 0; it < detail::max_iterations; ++it) {
        const Scalar f = reg_inc_beta(x, p) - q;
        if (f == 0) {
            converged = true;
            break;
        }
        if (f < 0) lo = x;
        else hi = x;

        const Scalar dens = detail::beta_density(x, a, b, lbeta);
        const Scalar newton = f / dens;
        if (std::isfinite(newton) && std::abs(newton) <= 2 * eps * x) {
            converged = true;
            break;
        }
        Scalar next = x - newton;
        if (!std::isfinite(next) || next <= lo || next >= hi) {
            next = (lo + hi) / 2;
        }
        x = next;
        if (hi - lo <= 2 * eps * x) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw numeric_error("inverse incomplete beta did not converge");
    }
    x = std::clamp<Scalar>(x, 0, 1);

    // Polish to the best representable neighbour.
    Scalar f = reg_inc_beta(x, p) - q;
    for (int k = 0; k < 8 && f != 0; ++k) {
        const Scalar cand = std::nextafter(x, f > 0 ? Scalar(0) : Scalar(1));
        const Scalar fc = reg_inc_beta(cand, p) - q;
        if (std::abs(fc) >= std::abs(f)) break;
        x = cand;
        f = fc;
    }
    if (std::abs(f) > Scalar(detail::inverse_abs_tolerance)) {
        // One ulp of x moves the CDF by more than the tolerance here; the
        // root must still be bracketed by the neighbours of x.
        const Scalar f_below = x > 0 ? reg_inc_beta(std::nextafter(x, Scalar(0)), p) - q : -q;
        const Scalar f_above = x < 1 ? reg_inc_beta(std::nextafter(x, Scalar(1)), p) - q : 1 - q;
        if (!(f_below <= 0 && f_above >= 0)) {
            throw numeric_error("inverse incomplete beta residual exceeds tolerance");
        }
    }
    return x;
}

template <std::floating_point Scalar>
Scalar inv_reg_inc_beta(Scalar q, Scalar alpha, Scalar beta)
{
    return inv_reg_inc_beta(q, ShapeParams<Scalar>{alpha, beta});
}

} // namespace warpbench
