#include "mintime/trajectory.hpp"

#include <cmath>

#include "mintime/errors.hpp"

namespace mintime {

Trajectory Trajectory::zero() {
    return Trajectory{};
}

Trajectory Trajectory::chain(ConstantChain c) {
    Trajectory t;
    t.kind_ = Kind::Chain;
    t.chain_ = std::move(c);
    return t;
}

Trajectory Trajectory::arc(CanonicalParams params, NormalizationRecord frame) {
    Trajectory t;
    t.kind_ = Kind::Arc;
    t.arc_ = CanonicalArc{params, frame};
    return t;
}

double Trajectory::total_time() const {
    switch (kind_) {
        case Kind::Zero:
            return 0.0;
        case Kind::Chain: {
            double sum = 0.0;
            for (const Segment& s : chain_.segments) sum += s.duration;
            return sum;
        }
        case Kind::Arc:
            return arc_.frame.from_normalized_time(arc_.params.duration());
    }
    return 0.0;
}

State Trajectory::state(double t) const {
    const double T = total_time();
    const double slack = 1e-9 * (1.0 + T);
    if (t < -slack || t > T + slack) {
        throw OutOfDomainError("Trajectory::state: t outside [0, total_time]");
    }
    t = std::fmin(std::fmax(t, 0.0), T);

    switch (kind_) {
        case Kind::Zero: {
            return State{};
        }
        case Kind::Chain: {
            Vec2 p = chain_.initial_position;
            Vec2 v = chain_.initial_velocity;
            double remaining = t;
            for (const Segment& s : chain_.segments) {
                if (remaining <= s.duration) {
                    const double h = remaining;
                    return State{p + v * h + s.accel * (0.5 * h * h), v + s.accel * h, s.accel};
                }
                p = p + v * s.duration + s.accel * (0.5 * s.duration * s.duration);
                v = v + s.accel * s.duration;
                remaining -= s.duration;
            }
            // Past the last switch by roundoff: hold the final state with the
            // last segment's acceleration.
            Vec2 a = chain_.segments.empty() ? Vec2{} : chain_.segments.back().accel;
            return State{p, v, a};
        }
        case Kind::Arc: {
            const CanonicalParams& cp = arc_.params;
            const NormalizationRecord& fr = arc_.frame;
            // Normalized-frame clock starts at tau1/alpha; user clock at 0.
            const double tn = cp.start_time() + t / fr.beta;
            const State sn = eval_canonical_state(cp, tn);
            const State s0 = eval_canonical_state(cp, cp.start_time());
            State out;
            out.position = fr.from_normalized_position(sn.position - s0.position);
            out.velocity = fr.from_normalized_velocity(sn.velocity);
            out.acceleration = fr.from_normalized_accel(sn.acceleration);
            return out;
        }
    }
    return State{};
}

}  // namespace mintime
