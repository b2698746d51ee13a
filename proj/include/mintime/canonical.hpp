#pragma once

#include "mintime/geometry.hpp"

namespace mintime {

/// Values of the two canonical antiderivative chains at one argument:
///   f'' = 1/sqrt(1+t^2)   g'' = t/sqrt(1+t^2)
///   f'  = asinh(t)        g'  = sqrt(1+t^2)
///   f   = t asinh(t) - sqrt(1+t^2)
///   g   = (t sqrt(1+t^2) + asinh(t)) / 2
/// f is even, g is odd, and f''^2 + g''^2 = 1 identically.
struct FgValues {
    double f, g;
    double fp, gp;
    double fpp, gpp;
};

/// Total function: finite for every finite t.
FgValues eval_fg(double t);

/// Parameters of one continuously-turning unit-acceleration arc in the
/// normalized frame. The arc lives on dilated time tau = alpha * t with
/// tau in [tau1, tau2]; theta rotates the plane, eta = +-1 flips the
/// vertical axis of the (f, g) pair. The horizontal reflection is fixed
/// at +1 and the time shift is absorbed so the arc is evaluated on
/// t in [tau1/alpha, tau2/alpha].
struct CanonicalParams {
    double alpha = 1.0;   // spatiotemporal dilation, > 0
    double theta = 0.0;   // rotation angle, in (-pi/2, pi/2)
    int eta = +1;         // vertical reflection
    double tau1 = 0.0;    // dilated start time
    double tau2 = 0.0;    // dilated end time, > tau1
    double u0 = 0.0;      // horizontal velocity integration constant
    double v0 = 0.0;      // vertical velocity integration constant

    double start_time() const { return tau1 / alpha; }
    double end_time() const { return tau2 / alpha; }
    double duration() const { return (tau2 - tau1) / alpha; }
};

/// Kinematic state at one instant.
struct State {
    Vec2 position;
    Vec2 velocity;
    Vec2 acceleration;
};

/// Evaluates the arc
///   p(t) = (1/alpha^2) R_theta (f(tau) + u0 tau, eta g(tau) + v0 tau),
/// tau = alpha t, together with its exact first and second derivatives.
/// The acceleration has unit magnitude for every t in the domain.
/// Throws OutOfDomainError when t lies outside [tau1, tau2]/alpha beyond
/// a small roundoff slack.
State eval_canonical_state(const CanonicalParams& params, double t);

}  // namespace mintime
