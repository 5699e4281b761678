#include <warpbench/transforms.hpp>

#include <cmath>
#include <random>

#include <Eigen/LU>
#include <Eigen/QR>

#include <warpbench/format.hpp>

namespace warpbench {

namespace {

constexpr double orthogonality_tolerance = 1e-12;
constexpr double determinant_tolerance = 1e-10;
constexpr double clamp_tolerance = 1e-12;

Point check_and_clamp(Point x)
{
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double excess = std::max(-x[i], x[i] - 1.0);
        if (!(excess <= clamp_tolerance)) {
            throw numeric_error("transform left the unit cube by " + shortest(excess));
        }
        x[i] = std::clamp(x[i], 0.0, 1.0);
    }
    return x;
}

void check_cube(const Eigen::Ref<const Point>& x)
{
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || x[i] < 0.0 || x[i] > 1.0) {
            throw domain_error("coordinate " + std::to_string(i) + " = " + shortest(x[i]) + " outside [0,1]");
        }
    }
}

void check_rotation_dim(const RotationMatrix& r, Eigen::Index n)
{
    if (r.dim() != n) {
        throw shape_error(
            "rotation of dimension " + std::to_string(r.dim()) + " applied to a point of dimension " + std::to_string(n)
        );
    }
}

} // namespace

RotationMatrix::RotationMatrix(Matrix entries) : m_entries(std::move(entries))
{
    if (m_entries.rows() != m_entries.cols() || m_entries.rows() < 1) {
        throw shape_error("rotation matrix must be square and non-empty");
    }
    const Matrix gram = m_entries.transpose() * m_entries;
    const double off = (gram - Matrix::Identity(m_entries.rows(), m_entries.cols())).cwiseAbs().maxCoeff();
    if (!(off <= orthogonality_tolerance)) {
        throw parameter_error("rotation matrix is not orthogonal (max |R^T R - I| = " + shortest(off) + ")");
    }
    const double det = m_entries.determinant();
    if (!(std::abs(det - 1.0) <= determinant_tolerance)) {
        throw parameter_error("rotation matrix has determinant " + shortest(det) + ", expected +1");
    }
}

RotationMatrix RotationMatrix::planar(double angle)
{
    Matrix r(2, 2);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    r << c, -s, s, c;
    return RotationMatrix(std::move(r));
}

RotationMatrix random_rotation(int dim, std::uint64_t seed)
{
    if (dim < 2) {
        throw parameter_error("random_rotation requires dim >= 2, got " + std::to_string(dim));
    }
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix gauss(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) gauss(i, j) = normal(gen);

    const Eigen::HouseholderQR<Matrix> qr(gauss);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the QR sign ambiguity so Q is Haar distributed on O(n).
    for (Eigen::Index j = 0; j < dim; ++j) {
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    }
    if (q.determinant() < 0) q.col(0) = -q.col(0);
    return RotationMatrix(std::move(q));
}

TransformSpec TransformSpec::identity()
{
    return TransformSpec{};
}

TransformSpec TransformSpec::beta_cdf(double alpha, double beta)
{
    ShapeParams<double> shape{alpha, beta};
    if (!shape.valid()) {
        throw parameter_error("beta_cdf shape must be positive, got (" + shortest(alpha) + ", " + shortest(beta) + ")");
    }
    TransformSpec t;
    t.m_kind = TransformKind::beta_cdf;
    t.m_shape = shape;
    return t;
}

TransformSpec TransformSpec::sphered_rotation(RotationMatrix rotation)
{
    TransformSpec t;
    t.m_kind = TransformKind::sphered_rotation;
    t.m_rotation = std::move(rotation);
    return t;
}

TransformSpec TransformSpec::sphered_rotation_seeded(int dim, std::uint64_t seed)
{
    TransformSpec t = sphered_rotation(random_rotation(dim, seed));
    t.m_seed = seed;
    return t;
}

TransformSpec TransformSpec::sphered_rotation_angle(double angle)
{
    TransformSpec t = sphered_rotation(RotationMatrix::planar(angle));
    t.m_angle = angle;
    return t;
}

const ShapeParams<double>& TransformSpec::shape() const
{
    if (m_kind != TransformKind::beta_cdf) throw parameter_error("transform has no Beta shape");
    return m_shape;
}

const RotationMatrix& TransformSpec::rotation() const
{
    if (m_kind != TransformKind::sphered_rotation) throw parameter_error("transform has no rotation matrix");
    return *m_rotation;
}

std::string TransformSpec::descriptor() const
{
    switch (m_kind) {
    case TransformKind::identity:
        return "id";
    case TransformKind::beta_cdf:
        return "beta-a" + shortest(m_shape.alpha) + "-b" + shortest(m_shape.beta);
    case TransformKind::sphered_rotation:
        if (m_seed) return "rot-seed" + std::to_string(*m_seed);
        if (m_angle) return "rot-angle" + shortest(*m_angle);
        return "rot-custom";
    }
    return "id";
}

TransformSpec TransformSpec::canonical() const
{
    if (m_kind == TransformKind::beta_cdf && m_shape.alpha == 1.0 && m_shape.beta == 1.0) return identity();
    return *this;
}

nlohmann::json TransformSpec::to_json() const
{
    switch (m_kind) {
    case TransformKind::identity:
        return {{"kind", "identity"}};
    case TransformKind::beta_cdf:
        return {{"kind", "beta_cdf"}, {"alpha", m_shape.alpha}, {"beta", m_shape.beta}};
    case TransformKind::sphered_rotation: {
        nlohmann::json j = {{"kind", "sphered_rotation"}, {"dim", m_rotation->dim()}};
        if (m_seed) j["seed"] = *m_seed;
        else if (m_angle) j["angle"] = *m_angle;
        else {
            nlohmann::json rows = nlohmann::json::array();
            for (Eigen::Index i = 0; i < m_rotation->dim(); ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (Eigen::Index k = 0; k < m_rotation->dim(); ++k) row.push_back(m_rotation->matrix()(i, k));
                rows.push_back(std::move(row));
            }
            j["matrix"] = std::move(rows);
        }
        return j;
    }
    }
    return {};
}

TransformSpec transform_from_json(const nlohmann::json& j, std::optional<int> default_dim)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw config_error("transform must be an object with a string \"kind\": " + j.dump());
    }
    const std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "identity") return TransformSpec::identity();
        if (kind == "beta_cdf") {
            return TransformSpec::beta_cdf(j.at("alpha").get<double>(), j.at("beta").get<double>());
        }
        if (kind == "sphered_rotation") {
            if (j.contains("angle")) return TransformSpec::sphered_rotation_angle(j["angle"].get<double>());
            if (j.contains("matrix")) {
                const auto& rows = j["matrix"];
                const auto n = static_cast<Eigen::Index>(rows.size());
                Matrix m(n, n);
                for (Eigen::Index i = 0; i < n; ++i) {
                    if (static_cast<Eigen::Index>(rows[i].size()) != n) throw config_error("rotation matrix must be square");
                    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = rows[i][k].get<double>();
                }
                return TransformSpec::sphered_rotation(RotationMatrix(std::move(m)));
            }
            std::optional<int> dim = default_dim;
            if (j.contains("dim")) {
                const int given = j["dim"].get<int>();
                if (default_dim && *default_dim != given) {
                    throw shape_error(
                        "rotation dim " + std::to_string(given) + " does not match problem dim " +
                        std::to_string(*default_dim)
                    );
                }
                dim = given;
            }
            if (!dim) throw config_error("sphered_rotation needs \"dim\": " + j.dump());
            return TransformSpec::sphered_rotation_seeded(*dim, j.at("seed").get<std::uint64_t>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw config_error("malformed transform " + j.dump() + ": " + e.what());
    }
    throw config_error("unknown transform kind \"" + kind + "\"");
}

TransformSpec transform_from_descriptor(const std::string& text, std::optional<int> default_dim)
{
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) throw config_error("bad number in transform descriptor \"" + text + "\"");
        return v;
    };

    if (text == "id" || text == "identity") return TransformSpec::identity();
    if (text.rfind("beta-a", 0) == 0) {
        const auto sep = text.find("-b", 6);
        if (sep == std::string::npos) throw config_error("bad beta descriptor \"" + text + "\"");
        return TransformSpec::beta_cdf(number(text.substr(6, sep - 6)), number(text.substr(sep + 2)));
    }
    if (text.rfind("rot-seed", 0) == 0) {
        if (!default_dim) throw config_error("rotation descriptor \"" + text + "\" needs a dimension");
        return TransformSpec::sphered_rotation_seeded(*default_dim, static_cast<std::uint64_t>(number(text.substr(8))));
    }
    if (text.rfind("rot-angle", 0) == 0) return TransformSpec::sphered_rotation_angle(number(text.substr(9)));
    throw config_error("unrecognised transform descriptor \"" + text + "\"");
}

Point apply_forward(const TransformSpec& t, const Eigen::Ref<const Point>& x)
{
    check_cube(x);
    switch (t.kind()) {
    case TransformKind::identity:
        return x;
    case TransformKind::beta_cdf:
        return beta_cdf_forward(x, t.shape());
    case TransformKind::sphered_rotation:
        check_rotation_dim(t.rotation(), x.size());
        return check_and_clamp(sphered_rotate(x, t.rotation().matrix()));
    }
    return x;
}

Point apply_inverse(const TransformSpec& t, const Eigen::Ref<const Point>& y)
{
    check_cube(y);
    switch (t.kind()) {
    case TransformKind::identity:
        return y;
    case TransformKind::beta_cdf:
        return beta_cdf_inverse(y, t.shape());
    case TransformKind::sphered_rotation:
        check_rotation_dim(t.rotation(), y.size());
        return check_and_clamp(sphered_rotate(y, t.rotation().matrix().transpose()));
    }
    return y;
}

} // namespace warpbench
