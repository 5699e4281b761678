#include <warpbench/problems.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <numbers>

#include <warpbench/errors.hpp>

namespace warpbench {

namespace {

constexpr std::array zdt_indices{1, 2, 3, 4, 6};
constexpr std::array dtlz_indices{1, 2, 3, 4, 5, 6, 7};
constexpr std::array mmf_indices{1, 2, 4, 5, 7, 8};

template <std::size_t N>
bool contains(const std::array<int, N>& a, int v)
{
    return std::find(a.begin(), a.end(), v) != a.end();
}

void require_valid(const ProblemId& id)
{
    if (!id.valid()) {
        throw unknown_problem_error("unknown problem " + id.name());
    }
}

} // namespace

bool ProblemId::valid() const
{
    switch (suite) {
    case Suite::zdt:
        return contains(zdt_indices, index) && (dim == 2 || dim == 10);
    case Suite::dtlz:
        return contains(dtlz_indices, index) && (dim == 2 || dim == 10);
    case Suite::mmf:
        return contains(mmf_indices, index) && dim == 2;
    }
    return false;
}

std::string ProblemId::suite_name() const
{
    switch (suite) {
    case Suite::zdt:
        return "zdt";
    case Suite::dtlz:
        return "dtlz";
    case Suite::mmf:
        return "mmf";
    }
    return "?";
}

std::string ProblemId::name() const
{
    return suite_name() + std::to_string(index) + "-d" + std::to_string(dim);
}

ProblemId parse_problem(const std::string& name)
{
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

    ProblemId id;
    std::size_t pos = 0;
    if (s.rfind("zdt", 0) == 0) {
        id.suite = Suite::zdt;
        pos = 3;
    } else if (s.rfind("dtlz", 0) == 0) {
        id.suite = Suite::dtlz;
        pos = 4;
    } else if (s.rfind("mmf", 0) == 0) {
        id.suite = Suite::mmf;
        pos = 3;
    } else {
        throw unknown_problem_error("unknown problem \"" + name + "\"");
    }

    const auto dash = s.find("-d", pos);
    try {
        std::size_t used = 0;
        const std::string idx = s.substr(pos, dash == std::string::npos ? std::string::npos : dash - pos);
        id.index = std::stoi(idx, &used);
        if (used != idx.size()) throw std::invalid_argument(idx);
        if (dash == std::string::npos) {
            id.dim = 2;
        } else {
            const std::string d = s.substr(dash + 2);
            id.dim = std::stoi(d, &used);
            if (used != d.size()) throw std::invalid_argument(d);
        }
    } catch (const std::logic_error&) {
        throw unknown_problem_error("unknown problem \"" + name + "\"");
    }
    if (!id.valid()) throw unknown_problem_error("unknown problem \"" + name + "\"");
    return id;
}

std::vector<ProblemId> list_problems()
{
    std::vector<ProblemId> out;
    for (int i : zdt_indices)
        for (int d : {2, 10}) out.push_back({Suite::zdt, i, d});
    for (int i : dtlz_indices)
        for (int d : {2, 10}) out.push_back({Suite::dtlz, i, d});
    for (int i : mmf_indices) out.push_back({Suite::mmf, i, 2});
    return out;
}

NativeBounds native_bounds(const ProblemId& id)
{
    require_valid(id);
    NativeBounds b{Point::Zero(id.dim), Point::Ones(id.dim)};
    if (id.suite == Suite::zdt && id.index == 4) {
        b.lower.tail(id.dim - 1).setConstant(-5.0);
        b.upper.tail(id.dim - 1).setConstant(5.0);
    } else if (id.suite == Suite::mmf) {
        switch (id.index) {
        case 1:
        case 7:
            b.lower << 1, -1;
            b.upper << 3, 1;
            break;
        case 2:
            b.lower << 0, 0;
            b.upper << 1, 2;
            break;
        case 4:
            b.lower << -1, 0;
            b.upper << 1, 2;
            break;
        case 5:
            b.lower << 1, -1;
            b.upper << 3, 3;
            break;
        case 8:
            b.lower << -std::numbers::pi, 0;
            b.upper << std::numbers::pi, 9;
            break;
        }
    }
    return b;
}

Objectives evaluate(const ProblemId& id, const Eigen::Ref<const Point>& x_unit)
{
    require_valid(id);
    if (x_unit.size() != id.dim) {
        throw shape_error(
            id.name() + " expects " + std::to_string(id.dim) + " variables, got " + std::to_string(x_unit.size())
        );
    }
    const NativeBounds b = native_bounds(id);
    const Point x = b.lower + (b.upper - b.lower).cwiseProduct(x_unit);

    switch (id.suite) {
    case Suite::zdt:
        return formulas::zdt(id.index, x);
    case Suite::dtlz:
        return formulas::dtlz(id.index, x);
    case Suite::mmf:
        return formulas::mmf(id.index, x);
    }
    return Objectives::Constant(std::numeric_limits<double>::quiet_NaN());
}

} // namespace warpbench
