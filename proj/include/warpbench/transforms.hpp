#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>
#include <json.hpp>

#include <warpbench/errors.hpp>
#include <warpbench/specfun.hpp>
#include <warpbench/types.hpp>

namespace warpbench {

/// Cube-to-cube maps. The free templates work on any Eigen expression;
/// TransformSpec below bundles one of them with its parameters.

/// Component-wise Beta-CDF warp, one shared (alpha, beta) pair.
template <class Derived>
auto beta_cdf_forward(const Eigen::MatrixBase<Derived>& x, const ShapeParams<typename Derived::Scalar>& shape)
{
    using Scalar = typename Derived::Scalar;
    vec_type<Scalar> out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = reg_inc_beta(x[i], shape);
    return out;
}

template <class Derived>
auto beta_cdf_inverse(const Eigen::MatrixBase<Derived>& y, const ShapeParams<typename Derived::Scalar>& shape)
{
    using Scalar = typename Derived::Scalar;
    vec_type<Scalar> out(y.size());
    for (Eigen::Index i = 0; i < y.size(); ++i) out[i] = inv_reg_inc_beta(y[i], shape);
    return out;
}

/// Sphered rotation of a unit-cube point.
///
/// The centred point z = 2x-1 is carried radially from its infinity-norm
/// shell onto the Euclidean sphere of the same radius, rotated, and carried
/// back: u = z |z|_inf / |z|_2, v = R u, z' = v |v|_2 / |v|_inf.
/// The centre is a fixed point. Pass R^T to invert.
template <class DerivedX, class DerivedR>
auto sphered_rotate(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedR>& rotation)
{
    using Scalar = typename DerivedX::Scalar;
    vec_type<Scalar> z = Scalar(2) * x - vec_type<Scalar>::Ones(x.size());
    const Scalar z_inf = z.template lpNorm<Eigen::Infinity>();
    if (z_inf == 0) return vec_type<Scalar>(x);

    const vec_type<Scalar> u = z * (z_inf / z.norm());
    const vec_type<Scalar> v = rotation * u;
    const vec_type<Scalar> z_out = v * (v.norm() / v.template lpNorm<Eigen::Infinity>());
    return vec_type<Scalar>((z_out.array() + Scalar(1)) / Scalar(2));
}

/// Element of SO(n), validated on construction.
class RotationMatrix
{
public:
    /// Throws parameter_error unless R^T R = I within 1e-12 per entry and det R = +1 within 1e-10.
    explicit RotationMatrix(Matrix entries);

    /// Planar rotation by `angle` radians.
    static RotationMatrix planar(double angle);

    Eigen::Index dim() const { return m_entries.rows(); }
    const Matrix& matrix() const { return m_entries; }

private:
    Matrix m_entries;
};

/// Haar-uniform draw from SO(dim), deterministic in seed.
RotationMatrix random_rotation(int dim, std::uint64_t seed);

enum class TransformKind
{
    identity,
    beta_cdf,
    sphered_rotation
};

/// Immutable description of a single search- or objective-space transform.
class TransformSpec
{
public:
    TransformSpec() = default;

    static TransformSpec identity();
    static TransformSpec beta_cdf(double alpha, double beta);
    static TransformSpec sphered_rotation(RotationMatrix rotation);
    static TransformSpec sphered_rotation_seeded(int dim, std::uint64_t seed);
    static TransformSpec sphered_rotation_angle(double angle);

    TransformKind kind() const { return m_kind; }
    const ShapeParams<double>& shape() const;
    const RotationMatrix& rotation() const;
    std::optional<std::uint64_t> seed() const { return m_seed; }

    /// Short label used in instance descriptors: `id`, `beta-a0.5-b2`,
    /// `rot-seed3`, `rot-angle0.785`, `rot-custom`.
    std::string descriptor() const;

    /// BetaCdf(1,1) and rotation-free specs collapse to identity for
    /// descriptor purposes; rotations are kept as given.
    TransformSpec canonical() const;

    nlohmann::json to_json() const;

private:
    TransformKind m_kind = TransformKind::identity;
    ShapeParams<double> m_shape{};
    std::optional<RotationMatrix> m_rotation;
    std::optional<std::uint64_t> m_seed;
    std::optional<double> m_angle;
};

/// Parses `{"kind":"identity"}`, `{"kind":"beta_cdf","alpha":a,"beta":b}`,
/// `{"kind":"sphered_rotation","dim":d,"seed":s}` or `{..., "angle":t}`.
/// `default_dim` supplies the dimension when a seeded rotation omits it.
TransformSpec transform_from_json(const nlohmann::json& j, std::optional<int> default_dim = {});

/// Inverse of TransformSpec::descriptor (rot-custom excepted).
TransformSpec transform_from_descriptor(const std::string& text, std::optional<int> default_dim = {});

/// Applies the transform; the result is clamped to the cube after checking
/// that rounding pushed it out by no more than 1e-12.
Point apply_forward(const TransformSpec& t, const Eigen::Ref<const Point>& x);
Point apply_inverse(const TransformSpec& t, const Eigen::Ref<const Point>& y);

} // namespace warpbench
