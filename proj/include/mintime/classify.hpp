#pragma once

#include "mintime/normalize.hpp"
#include "mintime/trajectory.hpp"

namespace mintime {

enum class CaseKind {
    ZeroTime,        // equal velocities, zero displacement
    EqualVelocities, // equal velocities, nonzero displacement: midpoint-reversal bang-bang
    OneDimensional,  // v = dy = 0 in the classification frame: 1-D double integrator
    BangBang,        // horizontal two-segment bang-bang (the dx-manifold case)
    Continuous,      // none of the above: continuously turning acceleration
};

const char* case_kind_name(CaseKind kind);

/// Outcome of the constant-acceleration characterization. For BangBang,
/// `order` is the sign of the first acceleration and T1, T2 the two
/// durations (T1 + T2 = dy/v, |T1 - T2| = |u2 - u1|).
struct ClassificationResult {
    CaseKind kind = CaseKind::Continuous;
    int order = +1;
    double T1 = 0.0;
    double T2 = 0.0;
};

/// Decides which constant-acceleration case (if any) the problem admits.
/// The data must be expressed in a frame where both endpoint velocities have
/// the same vertical component v; `tol` is the relative tolerance used for
/// every equality test. Throws NonFiniteError on non-finite inputs.
ClassificationResult classify(double u1, double u2, double v, double dx, double dy, double tol);
ClassificationResult classify(const NormalizedProblem& np, double tol);

/// Equal endpoint velocities, nonzero displacement: unit acceleration w for
/// T/2, then -w for T/2, where |delta - v T| = T^2/4 and T is the smallest
/// positive root. The chain starts at the origin with velocity v.
Trajectory solve_case1(const Vec2& v, const Vec2& delta);

/// Minimum-time 1-D double integrator (v = dy = 0 frame): tries both switch
/// orders, returns the feasible profile with the smaller total time; collapses
/// to one constant-acceleration segment when a switch duration vanishes.
Trajectory solve_case2_1d(double u1, double u2, double dx);

/// Horizontal bang-bang on the dx-manifold: accelerations (+-1, 0) with
/// durations determined by T1 + T2 = dy/v and T1 - T2 = +-(u2 - u1). Throws
/// ClassificationMismatchError when a duration is negative beyond tolerance.
Trajectory solve_case3(double u1, double u2, double v, double dx, double dy);

}  // namespace mintime
