#ifndef CSF_FLOW_HPP
#define CSF_FLOW_HPP

#include "csf/geometry.hpp"

#include <limits>
#include <vector>

namespace csf {

enum class FlowMode { physical, rescaled };

/// A curve plus its flow clock: t in physical mode, tau in rescaled mode.
struct FlowState {
    DiscreteCurve curve;
    double clock = 0.0;
    FlowMode mode = FlowMode::physical;
    long steps_accepted = 0;
};

struct StepControl {
    double safety = 0.5;
    double dt_min = 1e-12;
    int redistribute_every = 0; // 0 disables tangential redistribution
    double fixed_dt = 0.0;      // > 0 bypasses stable_dt
    DiffScheme scheme = DiffScheme::spectral;
};

struct StopRule {
    double clock_limit = std::numeric_limits<double>::infinity();
    double max_curvature = std::numeric_limits<double>::infinity();
    long max_steps = std::numeric_limits<long>::max();
};

enum class StopReason { clock_limit, curvature_threshold, max_steps, blow_up };

const char* to_string(StopReason r);

/// Snapshot schedule. dclock > 0 records at exact clock multiples
/// clock0 + k*dclock (steps are capped to land on them); otherwise every
/// stride-th accepted step. Initial and final states are always recorded.
struct Sampling {
    double dclock = 0.0;
    long stride = 1;
};

struct Trajectory {
    std::vector<FlowState> snapshots;
    StopReason stop_reason = StopReason::max_steps;
    long steps = 0;
};

/// Velocity of the physical flow: u' x (u'' x u') / |u'|^4. Equals H*nu
/// wherever the frame exists and vanishes smoothly at inflection nodes.
std::vector<Vec3> rhs_physical(const DiscreteCurve& curve,
                               DiffScheme scheme = DiffScheme::spectral);

/// Velocity of the rescaled flow: v/2 + v' x (v'' x v') / |v'|^4.
std::vector<Vec3> rhs_rescaled(const DiscreteCurve& curve,
                               DiffScheme scheme = DiffScheme::spectral);

std::vector<Vec3> flow_rhs(const DiscreteCurve& curve, FlowMode mode,
                           DiffScheme scheme = DiffScheme::spectral);

/// Parabolic stability bound for the explicit RK4 scheme, clamped below by
/// control.dt_min.
double stable_dt(const DiscreteCurve& curve, FlowMode mode, const StepControl& control);

/// One classical RK4 step of the mode's velocity field. Throws
/// StepFailureError if the updated curve is non-finite or irregular;
/// callers halve dt. Applies tangential redistribution when the accepted
/// step counter hits control.redistribute_every.
FlowState step(const FlowState& state, double dt, const StepControl& control);

/// March until the stop rule triggers, recording snapshots per sampling.
/// Failed steps are retried with halved dt up to 20 times; underflowing
/// dt_min terminates with StopReason::blow_up.
Trajectory run(const FlowState& initial, const StopRule& stop, const StepControl& control,
               const Sampling& sampling = {});

} // namespace csf

#endif
