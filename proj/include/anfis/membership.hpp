#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace anfis {

/// Width-like membership parameters (Gaussian sigma, bell a/b) are kept
/// at or above this floor to avoid division blow-up.
inline constexpr double kMinWidth = 1e-9;

enum class MfType { gaussian, bell, triangular, trapezoidal };

std::size_t parameter_count(MfType type);
const char* mf_type_name(MfType type);
MfType mf_type_from_name(std::string_view name);

/// A parameterized unimodal fuzzy set over one input dimension.
///
/// Parameter layout per variant:
///   gaussian:    {center, sigma}           sigma >= kMinWidth
///   bell:        {a, b, center}            a, b >= kMinWidth
///   triangular:  {left, peak, right}       left <= peak <= right
///   trapezoidal: {a, b, c, d}              a <= b <= c <= d
struct MembershipFunction {
    MfType type = MfType::gaussian;
    std::vector<double> params;

    static MembershipFunction gaussian(double center, double sigma);
    static MembershipFunction bell(double a, double b, double center);
    static MembershipFunction triangular(double left, double peak, double right);
    static MembershipFunction trapezoidal(double a, double b, double c, double d);

    bool operator==(const MembershipFunction&) const = default;
};

/// Throws ConfigError if the parameter vector violates the variant's
/// ordering or positivity constraints.
void validate(const MembershipFunction& mf);

/// Restores the invariants after a raw parameter update: re-sorts
/// triangular/trapezoidal tuples and clamps widths to kMinWidth.
void project_parameters(MembershipFunction& mf);

/// Membership degree in [0, 1]. Throws NumericError for non-finite x
/// and ConfigError for invalid parameters.
double evaluate(const MembershipFunction& mf, double x);

/// Partial derivatives of the membership degree with respect to each
/// parameter, in parameter order. At non-differentiable points of the
/// piecewise-linear variants the subgradient 0 is returned.
std::vector<double> parameter_gradient(const MembershipFunction& mf, double x);

} // namespace anfis
