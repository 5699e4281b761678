#pragma once

#include <stdexcept>
#include <string>

namespace warpbench {

/// Base of every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Input coordinate or objective outside the admissible domain.
class domain_error : public error { public: using error::error; };

/// Invalid shape parameter, dimension request or algorithm setting.
class parameter_error : public error { public: using error::error; };

/// Vector or matrix sizes do not agree.
class shape_error : public error { public: using error::error; };

/// Iteration failed to converge, or a floating-point guard tripped.
class numeric_error : public error { public: using error::error; };

class unknown_problem_error : public error { public: using error::error; };

/// Normalization box with zero extent in some objective.
class degenerate_error : public error { public: using error::error; };

/// Malformed experiment configuration or CLI selector.
class config_error : public error { public: using error::error; };

/// A report could not be assembled from the available runs.
class report_error : public error { public: using error::error; };

} // namespace warpbench
