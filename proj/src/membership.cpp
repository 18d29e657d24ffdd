#include "anfis/membership.hpp"
#include "anfis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace anfis {

std::size_t parameter_count(MfType type) {
    switch (type) {
        case MfType::gaussian: return 2;
        case MfType::bell: return 3;
        case MfType::triangular: return 3;
        case MfType::trapezoidal: return 4;
    }
    throw ConfigError("membership: unknown MF type tag");
}

const char* mf_type_name(MfType type) {
    switch (type) {
        case MfType::gaussian: return "gaussian";
        case MfType::bell: return "bell";
        case MfType::triangular: return "triangular";
        case MfType::trapezoidal: return "trapezoidal";
    }
    throw ConfigError("membership: unknown MF type tag");
}

MfType mf_type_from_name(std::string_view name) {
    if (name == "gaussian") return MfType::gaussian;
    if (name == "bell") return MfType::bell;
    if (name == "triangular") return MfType::triangular;
    if (name == "trapezoidal") return MfType::trapezoidal;
    throw ConfigError("membership: unknown MF type name '" + std::string(name) + "'");
}

MembershipFunction MembershipFunction::gaussian(double center, double sigma) {
    MembershipFunction mf{MfType::gaussian, {center, sigma}};
    validate(mf);
    return mf;
}

MembershipFunction MembershipFunction::bell(double a, double b, double center) {
    MembershipFunction mf{MfType::bell, {a, b, center}};
    validate(mf);
    return mf;
}

MembershipFunction MembershipFunction::triangular(double left, double peak, double right) {
    MembershipFunction mf{MfType::triangular, {left, peak, right}};
    validate(mf);
    return mf;
}

MembershipFunction MembershipFunction::trapezoidal(double a, double b, double c, double d) {
    MembershipFunction mf{MfType::trapezoidal, {a, b, c, d}};
    validate(mf);
    return mf;
}

void validate(const MembershipFunction& mf) {
    if (mf.params.size() != parameter_count(mf.type)) {
        throw ConfigError("membership: " + std::string(mf_type_name(mf.type)) +
                          " expects " + std::to_string(parameter_count(mf.type)) +
                          " parameters, got " + std::to_string(mf.params.size()));
    }
    for (double p : mf.params) {
        if (!std::isfinite(p)) {
            throw ConfigError("membership: non-finite parameter");
        }
    }
    const auto& p = mf.params;
    switch (mf.type) {
        case MfType::gaussian:
            if (p[1] < kMinWidth) throw ConfigError("membership: gaussian sigma must be >= 1e-9");
            break;
        case MfType::bell:
            if (p[0] < kMinWidth) throw ConfigError("membership: bell width a must be >= 1e-9");
            if (p[1] < kMinWidth) throw ConfigError("membership: bell slope b must be >= 1e-9");
            break;
        case MfType::triangular:
            if (!(p[0] <= p[1] && p[1] <= p[2]))
                throw ConfigError("membership: triangular parameters must satisfy left <= peak <= right");
            break;
        case MfType::trapezoidal:
            if (!(p[0] <= p[1] && p[1] <= p[2] && p[2] <= p[3]))
                throw ConfigError("membership: trapezoidal parameters must be non-decreasing");
            break;
    }
}

void project_parameters(MembershipFunction& mf) {
    auto& p = mf.params;
    switch (mf.type) {
        case MfType::gaussian:
            p[1] = std::max(p[1], kMinWidth);
            break;
        case MfType::bell:
            p[0] = std::max(p[0], kMinWidth);
            p[1] = std::max(p[1], kMinWidth);
            break;
        case MfType::triangular:
        case MfType::trapezoidal:
            // Cheapest projection back to a valid shape.
            std::sort(p.begin(), p.end());
            break;
    }
}

namespace {

double eval_gaussian(double c, double sigma, double x) {
    const double t = (x - c) / sigma;
    return std::exp(-0.5 * t * t);
}

double eval_bell(double a, double b, double c, double x) {
    if (x == c) return 1.0;
    const double t = std::abs((x - c) / a);
    return 1.0 / (1.0 + std::pow(t, 2.0 * b));
}

double eval_triangular(double l, double p, double r, double x) {
    if (x == p) return 1.0;
    if (x <= l || x >= r) return 0.0;
    if (x < p) return (x - l) / (p - l);
    return (r - x) / (r - p);
}

double eval_trapezoidal(double a, double b, double c, double d, double x) {
    if (x >= b && x <= c) return 1.0;
    if (x <= a || x >= d) return 0.0;
    if (x < b) return (x - a) / (b - a);
    return (d - x) / (d - c);
}

} // namespace

double evaluate(const MembershipFunction& mf, double x) {
    if (!std::isfinite(x)) throw NumericError("membership: non-finite input");
    validate(mf);
    const auto& p = mf.params;
    double degree = 0.0;
    switch (mf.type) {
        case MfType::gaussian: degree = eval_gaussian(p[0], p[1], x); break;
        case MfType::bell: degree = eval_bell(p[0], p[1], p[2], x); break;
        case MfType::triangular: degree = eval_triangular(p[0], p[1], p[2], x); break;
        case MfType::trapezoidal: degree = eval_trapezoidal(p[0], p[1], p[2], p[3], x); break;
    }
    return std::clamp(degree, 0.0, 1.0);
}

std::vector<double> parameter_gradient(const MembershipFunction& mf, double x) {
    if (!std::isfinite(x)) throw NumericError("membership: non-finite input");
    validate(mf);
    const auto& p = mf.params;
    std::vector<double> g(p.size(), 0.0);

    switch (mf.type) {
        case MfType::gaussian: {
            const double c = p[0], sigma = p[1];
            const double mu = eval_gaussian(c, sigma, x);
            const double d = x - c;
            g[0] = mu * d / (sigma * sigma);
            g[1] = mu * d * d / (sigma * sigma * sigma);
            break;
        }
        case MfType::bell: {
            const double a = p[0], b = p[1], c = p[2];
            if (x == c) break; // zero gradient at the peak
            const double t = std::abs((x - c) / a);
            const double u = std::pow(t, 2.0 * b);
            const double mu = 1.0 / (1.0 + u);
            const double mu2u = mu * mu * u;
            g[0] = 2.0 * b * mu2u / a;
            g[1] = -2.0 * std::log(t) * mu2u;
            g[2] = 2.0 * b * mu2u / (x - c);
            break;
        }
        case MfType::triangular: {
            const double l = p[0], pk = p[1], r = p[2];
            // Zero subgradient at kinks and outside the support.
            if (x <= l || x >= r || x == pk) break;
            if (x < pk) {
                const double w = pk - l;
                g[0] = (x - pk) / (w * w);
                g[1] = -(x - l) / (w * w);
            } else {
                const double w = r - pk;
                g[1] = (r - x) / (w * w);
                g[2] = (x - pk) / (w * w);
            }
            break;
        }
        case MfType::trapezoidal: {
            const double a = p[0], b = p[1], c = p[2], d = p[3];
            if (x <= a || x >= d || (x >= b && x <= c)) break;
            if (x < b) {
                const double w = b - a;
                g[0] = (x - b) / (w * w);
                g[1] = -(x - a) / (w * w);
            } else {
                const double w = d - c;
                g[2] = (d - x) / (w * w);
                g[3] = (x - c) / (w * w);
            }
            break;
        }
    }
    return g;
}

} // namespace anfis
