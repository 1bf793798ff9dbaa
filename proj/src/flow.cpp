#include "csf/flow.hpp"

#include "csf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace csf {

namespace {

// RK4 stability interval on the negative real axis is ~2.785; the stiffest
// Fourier mode of the curvature operator has |lambda| ~ (pi/ds)^2, so the
// parabolic step bound carries a 2.785/pi^2 factor.
constexpr double kParabolicStability = 2.785 / (std::numbers::pi * std::numbers::pi);

std::vector<Vec3> rhs_from_derivatives(const DiscreteCurve& curve,
                                       const std::vector<Vec3>& d1,
                                       const std::vector<Vec3>& d2) {
    const size_t n = curve.nodes.size();
    std::vector<Vec3> out(n);
    for (size_t i = 0; i < n; ++i) {
        const double s2 = norm2(d1[i]);
        if (s2 < kSpeedFloor * kSpeedFloor)
            throw DegenerateParametrizationError("speed below threshold at node " +
                                                 std::to_string(i));
        out[i] = cross(d1[i], cross(d2[i], d1[i])) / (s2 * s2);
    }
    return out;
}

} // namespace

const char* to_string(StopReason r) {
    switch (r) {
    case StopReason::clock_limit: return "clock-limit";
    case StopReason::curvature_threshold: return "curvature-threshold";
    case StopReason::max_steps: return "max-steps";
    case StopReason::blow_up: return "blow-up-reached";
    }
    return "unknown";
}

std::vector<Vec3> rhs_physical(const DiscreteCurve& curve, DiffScheme scheme) {
    auto [d1, d2] = derivatives12(curve, scheme);
    return rhs_from_derivatives(curve, d1, d2);
}

std::vector<Vec3> rhs_rescaled(const DiscreteCurve& curve, DiffScheme scheme) {
    auto out = rhs_physical(curve, scheme);
    for (size_t i = 0; i < out.size(); ++i) out[i] += 0.5 * curve.nodes[i];
    return out;
}

std::vector<Vec3> flow_rhs(const DiscreteCurve& curve, FlowMode mode, DiffScheme scheme) {
    return mode == FlowMode::physical ? rhs_physical(curve, scheme) : rhs_rescaled(curve, scheme);
}

double stable_dt(const DiscreteCurve& curve, FlowMode mode, const StepControl& control) {
    auto sp = node_speeds(curve, control.scheme);
    const double ds = *std::min_element(sp.begin(), sp.end()) * 2.0 * std::numbers::pi / curve.n();
    auto rhs = flow_rhs(curve, mode, control.scheme);
    double rmax = 0.0;
    for (const Vec3& v : rhs) rmax = std::max(rmax, norm(v));
    const double dt = control.safety * kParabolicStability * ds * ds / (1.0 + ds * rmax);
    return std::max(dt, control.dt_min);
}

FlowState step(const FlowState& state, double dt, const StepControl& control) {
    if (dt < 0.0) throw std::invalid_argument("step: dt must be nonnegative");
    if (dt == 0.0) return state;

    const size_t n = state.curve.nodes.size();
    auto advance = [&](const std::vector<Vec3>& k, double f) {
        DiscreteCurve c;
        c.nodes.resize(n);
        for (size_t i = 0; i < n; ++i) c.nodes[i] = state.curve.nodes[i] + f * k[i];
        return c;
    };

    FlowState next = state;
    try {
        auto k1 = flow_rhs(state.curve, state.mode, control.scheme);
        auto k2 = flow_rhs(advance(k1, dt / 2.0), state.mode, control.scheme);
        auto k3 = flow_rhs(advance(k2, dt / 2.0), state.mode, control.scheme);
        auto k4 = flow_rhs(advance(k3, dt), state.mode, control.scheme);
        for (size_t i = 0; i < n; ++i)
            next.curve.nodes[i] = state.curve.nodes[i] +
                                  dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    } catch (const DegenerateParametrizationError& e) {
        throw StepFailureError(std::string("stage velocity undefined: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw StepFailureError(std::string("stage produced invalid curve: ") + e.what());
    }

    for (size_t i = 0; i < n; ++i)
        if (!is_finite(next.curve.nodes[i]))
            throw StepFailureError("non-finite node after step at index " + std::to_string(i));
    try {
        node_speeds(next.curve, control.scheme);
    } catch (const DegenerateParametrizationError& e) {
        throw StepFailureError(std::string("irregular curve after step: ") + e.what());
    }

    next.clock = state.clock + dt;
    next.steps_accepted = state.steps_accepted + 1;
    if (control.redistribute_every > 0 &&
        next.steps_accepted % control.redistribute_every == 0)
        next.curve = resample_uniform_arclength(next.curve);
    return next;
}

Trajectory run(const FlowState& initial, const StopRule& stop, const StepControl& control,
               const Sampling& sampling) {
    Trajectory traj;
    FlowState state = initial;
    const double clock0 = initial.clock;
    long boundary = 0; // snapshot boundaries passed (dclock mode)
    bool last_recorded = false;

    auto record = [&](const FlowState& s) {
        traj.snapshots.push_back(s);
        last_recorded = true;
    };
    auto max_curv = [&](const DiscreteCurve& c) {
        auto h = curvature(c, control.scheme);
        return *std::max_element(h.begin(), h.end());
    };

    record(state);
    while (true) {
        if (state.clock >= stop.clock_limit - 1e-15 * std::max(1.0, std::abs(stop.clock_limit))) {
            traj.stop_reason = StopReason::clock_limit;
            break;
        }
        if (std::isfinite(stop.max_curvature) && max_curv(state.curve) >= stop.max_curvature) {
            traj.stop_reason = StopReason::curvature_threshold;
            break;
        }
        if (traj.steps >= stop.max_steps) {
            traj.stop_reason = StopReason::max_steps;
            break;
        }

        double dt = control.fixed_dt > 0.0 ? control.fixed_dt
                                           : stable_dt(state.curve, state.mode, control);
        bool on_boundary = false;
        if (sampling.dclock > 0.0) {
            const double next_boundary = clock0 + (boundary + 1) * sampling.dclock;
            if (state.clock + dt >= next_boundary - 1e-12 * sampling.dclock) {
                dt = next_boundary - state.clock;
                on_boundary = true;
            }
        }
        if (std::isfinite(stop.clock_limit) && state.clock + dt > stop.clock_limit)
            dt = stop.clock_limit - state.clock;

        bool accepted = false;
        for (int attempt = 0; attempt < 20; ++attempt) {
            try {
                state = step(state, dt, control);
                accepted = true;
                break;
            } catch (const StepFailureError&) {
                dt *= 0.5;
                on_boundary = false;
                if (dt < control.dt_min) break;
            }
        }
        if (!accepted) {
            traj.stop_reason = StopReason::blow_up;
            break;
        }
        ++traj.steps;
        last_recorded = false;

        if (sampling.dclock > 0.0) {
            if (on_boundary) {
                ++boundary;
                state.clock = clock0 + boundary * sampling.dclock; // absorb roundoff drift
                record(state);
            }
        } else if (sampling.stride > 0 && state.steps_accepted % sampling.stride == 0) {
            record(state);
        }
    }
    if (!last_recorded) record(state);
    return traj;
}

} // namespace csf
