#pragma once

namespace mintime {

/// Right-hand side of the dilated velocity-difference constraints
///   asinh(tau2) - asinh(tau1)         = mu_u
///   sqrt(1+tau2^2) - sqrt(1+tau1^2)   = mu_v
/// with mu_u = alpha cos(theta) > 0 and mu_v = -eta alpha sin(theta).
/// The vertical reflection is folded into mu_v so the solver itself is
/// reflection-agnostic.
struct MuPair {
    double mu_u = 0.0;
    double mu_v = 0.0;
};

/// Analytic bisection bracket for tau1. The unique root lies strictly inside.
struct TauBracket {
    double t_lo = 0.0;
    double t_hi = 0.0;
};

struct TauPair {
    double tau1 = 0.0;
    double tau2 = 0.0;  // always > tau1
};

/// Closed-form bracket
///   t_lo = -e^{mu_u} max{1/2, (1 - mu_v)/mu_u}
///   t_hi = max{0, (1 + mu_v)/mu_u}.
/// Throws InvalidMuError when mu_u <= 0.
TauBracket tau_bracket(const MuPair& mu);

/// Solves the velocity-difference constraints for (tau1, tau2) by bisection
/// of the monotone residual over tau_bracket, then two Newton polish steps
/// with the analytic derivative. tau2 = sinh(asinh(tau1) + mu_u) exactly.
/// Throws InvalidMuError (mu_u <= 0) or BracketFailureError (bracket does
/// not straddle, which indicates a bug).
TauPair solve_tau(const MuPair& mu, double tol);

/// Supremum of { alpha > 0 : alpha T > exp(alpha cos(theta)/2) - 1 },
/// computed by doubling bracket plus bisection to tol. Depends on theta only
/// through cos(theta), hence symmetric in theta. Requires T > 1 and
/// |theta| < pi/2; throws OutOfDomainError otherwise.
double lambda_max(double T, double theta, double tol);

/// A-priori upper bound on minimum time from a three-leg construction:
/// brake to rest, straight bang-bang leg, accelerate to the final velocity.
/// Valid for the unit acceleration bound.
double time_upper_bound(double u1, double v1, double u2, double v2, double dx, double dy);

}  // namespace mintime
