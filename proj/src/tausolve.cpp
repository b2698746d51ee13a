#include "mintime/tausolve.hpp"

#include <algorithm>
#include <cmath>

#include "mintime/errors.hpp"

namespace mintime {

namespace {

// Residual of the tau1 equation, written in product form:
//   sqrt(1+tau2^2) - sqrt(1+tau1^2) - mu_v
//     = cosh(s + mu_u) - cosh(s) - mu_v          with s = asinh(tau1)
//     = 2 sinh(mu_u/2) sinh(s + mu_u/2) - mu_v.
// The product form avoids the cancellation the direct difference suffers
// for large |tau|.
struct TauResidual {
    double mu_v;
    double half_mu;
    double two_sinh_half;  // 2 sinh(mu_u/2)

    explicit TauResidual(const MuPair& mu)
        : mu_v(mu.mu_v), half_mu(0.5 * mu.mu_u), two_sinh_half(2.0 * std::sinh(0.5 * mu.mu_u)) {}

    double value(double tau1) const {
        return two_sinh_half * std::sinh(std::asinh(tau1) + half_mu) - mu_v;
    }
    // d/dtau1 = (tau2 - tau1) / sqrt(1 + tau1^2), strictly positive.
    double derivative(double tau1) const {
        return two_sinh_half * std::cosh(std::asinh(tau1) + half_mu) / std::sqrt(1.0 + tau1 * tau1);
    }
};

}  // namespace

TauBracket tau_bracket(const MuPair& mu) {
    if (!(mu.mu_u > 0.0)) {
        throw InvalidMuError("tau_bracket: mu_u must be > 0");
    }
    TauBracket b;
    b.t_lo = -std::exp(mu.mu_u) * std::max(0.5, (1.0 - mu.mu_v) / mu.mu_u);
    b.t_hi = std::max(0.0, (1.0 + mu.mu_v) / mu.mu_u);
    return b;
}

TauPair solve_tau(const MuPair& mu, double tol) {
    if (!(mu.mu_u > 0.0)) {
        throw InvalidMuError("solve_tau: mu_u must be > 0");
    }
    const TauBracket bracket = tau_bracket(mu);
    const TauResidual res(mu);

    double lo = bracket.t_lo;
    double hi = bracket.t_hi;
    if (!(res.value(lo) < 0.0) || !(res.value(hi) > 0.0)) {
        throw BracketFailureError("solve_tau: bracket endpoints do not straddle the root");
    }

    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (res.value(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double tau1 = 0.5 * (lo + hi);

    // Two Newton polish steps; the residual is smooth and strictly increasing,
    // and bisection already localized the root, so these land near machine
    // precision. Clamp to the bracket in case a step overshoots.
    for (int i = 0; i < 2; ++i) {
        const double d = res.derivative(tau1);
        if (d <= 0.0 || !std::isfinite(d)) break;
        const double step = res.value(tau1) / d;
        tau1 = std::clamp(tau1 - step, bracket.t_lo, bracket.t_hi);
    }

    TauPair out;
    out.tau1 = tau1;
    out.tau2 = std::sinh(std::asinh(tau1) + mu.mu_u);
    return out;
}

double lambda_max(double T, double theta, double tol) {
    if (!(T > 1.0)) {
        throw OutOfDomainError("lambda_max: requires T > 1");
    }
    const double c = std::cos(theta);
    if (!(c > 0.0)) {
        throw OutOfDomainError("lambda_max: requires |theta| < pi/2");
    }
    // Membership in { alpha : alpha T > exp(alpha c / 2) - 1 }. The boundary
    // function is concave with a single positive root, so the set is an
    // interval (0, lambda).
    const auto member = [&](double a) { return a * T > std::expm1(0.5 * a * c); };

    double lo = std::min(tol, 0.5);
    double hi = 1.0;
    for (int i = 0; i < 4000 && member(hi); ++i) {
        lo = hi;
        hi *= 2.0;
    }
    while (hi - lo > tol * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (member(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double time_upper_bound(double u1, double v1, double u2, double v2, double dx, double dy) {
    const double mu1 = std::hypot(u1, v1);
    const double mu2 = std::hypot(u2, v2);
    const double wx = 2.0 * dx - mu1 * u1 - mu2 * u2;
    const double wy = 2.0 * dy - mu1 * v1 - mu2 * v2;
    // Middle leg: straight rest-to-rest bang-bang over half the leftover
    // displacement, taking 2 sqrt(len) time units.
    return mu1 + mu2 + std::sqrt(2.0) * std::sqrt(std::hypot(wx, wy));
}

}  // namespace mintime
