#include "mintime/canonical.hpp"

#include <cmath>

#include "mintime/errors.hpp"

namespace mintime {

FgValues eval_fg(double t) {
    // std::asinh is the stable branch-symmetric form of ln(t + sqrt(1+t^2)).
    const double root = std::sqrt(1.0 + t * t);
    const double as = std::asinh(t);
    FgValues v;
    v.f = t * as - root;
    v.g = 0.5 * (t * root + as);
    v.fp = as;
    v.gp = root;
    v.fpp = 1.0 / root;
    v.gpp = t / root;
    return v;
}

State eval_canonical_state(const CanonicalParams& params, double t) {
    const double t_start = params.start_time();
    const double t_end = params.end_time();
    // Absorb endpoint roundoff from callers that sample t = T exactly.
    const double slack = 1e-9 * (1.0 + t_end - t_start);
    if (t < t_start - slack || t > t_end + slack) {
        throw OutOfDomainError("eval_canonical_state: t outside [tau1, tau2]/alpha");
    }
    t = std::fmin(std::fmax(t, t_start), t_end);

    const double tau = params.alpha * t;
    const FgValues fg = eval_fg(tau);
    const double eta = static_cast<double>(params.eta);
    const Rot2 rot{params.theta};
    const double inv_a = 1.0 / params.alpha;

    State s;
    s.position = rot.apply({fg.f + params.u0 * tau, eta * fg.g + params.v0 * tau}) * (inv_a * inv_a);
    s.velocity = rot.apply({fg.fp + params.u0, eta * fg.gp + params.v0}) * inv_a;
    s.acceleration = rot.apply({fg.fpp, eta * fg.gpp});
    return s;
}

}  // namespace mintime
