#pragma once

#include <vector>

#include "mintime/canonical.hpp"
#include "mintime/normalize.hpp"

namespace mintime {

/// One constant-acceleration piece.
struct Segment {
    Vec2 accel;
    double duration = 0.0;
};

/// Chain of constant-acceleration segments, self-contained: carries its own
/// initial state so it can be evaluated without the originating problem.
struct ConstantChain {
    Vec2 initial_position;
    Vec2 initial_velocity;
    std::vector<Segment> segments;
};

/// Canonical arc plus the frame that maps it into user coordinates.
struct CanonicalArc {
    CanonicalParams params;
    NormalizationRecord frame;  // identity when the arc is already in user units
};

/// A solved trajectory: the zero-time point, a constant-acceleration chain,
/// or a canonical arc. Evaluable at any t in [0, total_time()]; positions are
/// anchored so that state(0).position == (0, 0) for arcs, while chains start
/// at their stored initial position.
class Trajectory {
  public:
    enum class Kind { Zero, Chain, Arc };

    static Trajectory zero();
    static Trajectory chain(ConstantChain c);
    static Trajectory arc(CanonicalParams params,
                          NormalizationRecord frame = NormalizationRecord::identity());

    Kind kind() const { return kind_; }
    const ConstantChain& as_chain() const { return chain_; }
    const CanonicalArc& as_arc() const { return arc_; }

    double total_time() const;

    /// State at t in [0, total_time()] (small roundoff slack at the ends).
    /// Throws OutOfDomainError outside that span.
    State state(double t) const;

    /// Convenience endpoints.
    State start() const { return state(0.0); }
    State end() const { return state(total_time()); }

  private:
    Kind kind_ = Kind::Zero;
    ConstantChain chain_;
    CanonicalArc arc_;
};

}  // namespace mintime
