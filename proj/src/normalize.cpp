#include "mintime/normalize.hpp"

#include <cmath>

#include "mintime/errors.hpp"
#include "mintime/trajectory.hpp"

namespace mintime {

bool BoundaryConditions::finite() const {
    return std::isfinite(u1) && std::isfinite(v1) && std::isfinite(u2) && std::isfinite(v2) &&
           std::isfinite(dx) && std::isfinite(dy) && std::isfinite(accel_bound);
}

Vec2 NormalizationRecord::to_normalized_velocity(const Vec2& v) const {
    const Vec2 r = reflect_x(v * (1.0 / accel_scale), sigma);
    return Rot2{phi}.apply_inverse(r) * (1.0 / beta);
}

Vec2 NormalizationRecord::to_normalized_position(const Vec2& p) const {
    const Vec2 r = reflect_x(p * (1.0 / accel_scale), sigma);
    return Rot2{phi}.apply_inverse(r) * (1.0 / (beta * beta));
}

Vec2 NormalizationRecord::from_normalized_velocity(const Vec2& v) const {
    return reflect_x(Rot2{phi}.apply(v), sigma) * (beta * accel_scale);
}

Vec2 NormalizationRecord::from_normalized_position(const Vec2& p) const {
    return reflect_x(Rot2{phi}.apply(p), sigma) * (beta * beta * accel_scale);
}

Vec2 NormalizationRecord::from_normalized_accel(const Vec2& a) const {
    return reflect_x(Rot2{phi}.apply(a), sigma) * accel_scale;
}

NormalizationResult normalize(const BoundaryConditions& bc) {
    if (!bc.finite()) {
        throw NonFiniteError("normalize: boundary conditions must be finite");
    }
    if (!(bc.accel_bound > 0.0)) {
        throw OutOfDomainError("normalize: accel_bound must be > 0");
    }
    // Fold the acceleration bound out first; this rescales space only.
    const double inv_a = 1.0 / bc.accel_bound;
    const double du = (bc.u2 - bc.u1) * inv_a;
    const double dv = (bc.v2 - bc.v1) * inv_a;
    const double beta = std::hypot(du, dv);
    if (beta == 0.0) {
        throw DegenerateEqualVelocitiesError("normalize: endpoint velocities are equal");
    }

    NormalizationRecord rec;
    rec.beta = beta;
    rec.sigma = du < 0.0 ? -1.0 : 1.0;  // sgn(0) resolved to +1
    // Polar angle of the reflected difference (|du|, dv); lands on +-pi/2
    // only in the du = 0 limit.
    rec.phi = std::atan2(dv, rec.sigma * du);
    rec.eta_norm = 1.0;
    rec.accel_scale = bc.accel_bound;

    NormalizedProblem np;
    const Vec2 vel = rec.to_normalized_velocity(bc.initial_velocity());
    const Vec2 disp = rec.to_normalized_position(bc.displacement());
    np.u = vel.x;
    np.v = vel.y;
    np.dx = disp.x;
    np.dy = disp.y;
    return {np, rec};
}

DenormalizedSolution denormalize_solution(const Trajectory& traj, TimeSpan span,
                                          const NormalizationRecord& record) {
    DenormalizedSolution out;
    out.span = {record.from_normalized_time(span.t1), record.from_normalized_time(span.t2)};

    switch (traj.kind()) {
        case Trajectory::Kind::Zero:
            out.trajectory = Trajectory::zero();
            break;
        case Trajectory::Kind::Chain: {
            const ConstantChain& c = traj.as_chain();
            ConstantChain mapped;
            mapped.initial_position = record.from_normalized_position(c.initial_position);
            mapped.initial_velocity = record.from_normalized_velocity(c.initial_velocity);
            mapped.segments.reserve(c.segments.size());
            for (const Segment& s : c.segments) {
                mapped.segments.push_back(
                    {record.from_normalized_accel(s.accel), record.from_normalized_time(s.duration)});
            }
            out.trajectory = Trajectory::chain(std::move(mapped));
            break;
        }
        case Trajectory::Kind::Arc: {
            if (!traj.as_arc().frame.is_identity()) {
                throw Error("denormalize_solution: arc already carries a non-identity frame");
            }
            out.trajectory = Trajectory::arc(traj.as_arc().params, record);
            break;
        }
    }

    const State end = out.trajectory.state(out.trajectory.total_time());
    if (!end.position.finite() || !end.velocity.finite()) {
        throw NonFiniteError("denormalize_solution: transformed trajectory is not finite");
    }
    return out;
}

}  // namespace mintime
