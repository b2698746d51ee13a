#pragma once

#include "mintime/geometry.hpp"

namespace mintime {

class Trajectory;

/// Raw endpoint data in user units: velocity at both ends, displacement
/// between them, and the acceleration magnitude bound.
struct BoundaryConditions {
    double u1 = 0.0, v1 = 0.0;  // initial velocity
    double u2 = 0.0, v2 = 0.0;  // final velocity
    double dx = 0.0, dy = 0.0;  // displacement
    double accel_bound = 1.0;   // > 0

    Vec2 initial_velocity() const { return {u1, v1}; }
    Vec2 final_velocity() const { return {u2, v2}; }
    Vec2 displacement() const { return {dx, dy}; }
    bool finite() const;
};

/// The invertible similarity that maps a unit-bound problem onto the frame
/// where the endpoint velocity difference is exactly (1, 0).
///
/// Forward transform (original -> normalized), applied after dividing all
/// velocities and displacements by accel_scale:
///   velocities  v_n = (1/beta)   R_{-phi} diag(sigma,1) v
///   positions   p_n = (1/beta^2) R_{-phi} diag(sigma,1) p
///   times       t_n = t / beta
/// The rotation is applied with angle -phi so that the reflected velocity
/// difference, whose polar angle is phi, lands on the positive x-axis; the
/// binding contract is "transformed velocity difference = (1, 0)".
struct NormalizationRecord {
    double beta = 1.0;         // dilation, = |velocity difference| after rescaling
    double phi = 0.0;          // rotation angle in [-pi/2, pi/2]
    double sigma = 1.0;        // horizontal reflection, +-1
    double eta_norm = 1.0;     // vertical reflection, fixed at +1
    double accel_scale = 1.0;  // accel_bound folded out before normalization

    static NormalizationRecord identity() { return {}; }
    bool is_identity() const {
        return beta == 1.0 && phi == 0.0 && sigma == 1.0 && accel_scale == 1.0;
    }

    // Forward maps (original frame -> normalized frame).
    Vec2 to_normalized_velocity(const Vec2& v) const;
    Vec2 to_normalized_position(const Vec2& p) const;

    // Inverse maps (normalized frame -> original frame).
    Vec2 from_normalized_velocity(const Vec2& v) const;
    Vec2 from_normalized_position(const Vec2& p) const;
    Vec2 from_normalized_accel(const Vec2& a) const;
    double from_normalized_time(double t) const { return beta * t; }
};

/// Boundary data in the normalized frame: unit acceleration bound, initial
/// velocity (u, v), final velocity (u + 1, v), displacement (dx, dy).
struct NormalizedProblem {
    double u = 0.0, v = 0.0;
    double dx = 0.0, dy = 0.0;
};

struct TimeSpan {
    double t1 = 0.0;
    double t2 = 0.0;
};

/// Builds the normalized problem and the record of the transform used.
/// Throws DegenerateEqualVelocitiesError when the endpoint velocities agree
/// (the velocity difference cannot be scaled to (1, 0)), and NonFiniteError
/// for invalid inputs.
struct NormalizationResult {
    NormalizedProblem problem;
    NormalizationRecord record;
};
NormalizationResult normalize(const BoundaryConditions& bc);

/// Maps a trajectory solving the normalized problem back to the original
/// frame, rescaling times by beta and folding accel_scale back in.
struct DenormalizedSolution {
    Trajectory trajectory;
    TimeSpan span;
};
DenormalizedSolution denormalize_solution(const Trajectory& traj, TimeSpan span,
                                          const NormalizationRecord& record);

}  // namespace mintime
