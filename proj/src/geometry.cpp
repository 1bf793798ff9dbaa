#include "csf/geometry.hpp"

#include "csf/errors.hpp"
#include "csf/spectral.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace csf {

namespace {

using spectral::Spectrum;

std::array<std::vector<double>, 3> split_components(const DiscreteCurve& curve) {
    const size_t n = curve.nodes.size();
    std::array<std::vector<double>, 3> comp;
    for (auto& c : comp) c.resize(n);
    for (size_t i = 0; i < n; ++i) {
        comp[0][i] = curve.nodes[i].x;
        comp[1][i] = curve.nodes[i].y;
        comp[2][i] = curve.nodes[i].z;
    }
    return comp;
}

std::vector<Vec3> join_components(const std::array<std::vector<double>, 3>& comp) {
    const size_t n = comp[0].size();
    std::vector<Vec3> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = {comp[0][i], comp[1][i], comp[2][i]};
    return out;
}

} // namespace

void validate_curve(const DiscreteCurve& curve) {
    const int n = curve.n();
    if (n < 16 || !spectral::is_pow2(n))
        throw std::invalid_argument("curve node count must be a power of two >= 16, got " +
                                    std::to_string(n));
    for (int i = 0; i < n; ++i)
        if (!is_finite(curve.nodes[i]))
            throw std::invalid_argument("curve node " + std::to_string(i) + " is not finite");
}

std::vector<Vec3> derivative(const DiscreteCurve& curve, int order, DiffScheme scheme) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("derivative: order must be 1 or 2, got " +
                                    std::to_string(order));
    validate_curve(curve);
    auto comp = split_components(curve);
    for (auto& c : comp)
        c = scheme == DiffScheme::spectral ? spectral::derivative_values(c, order)
                                           : spectral::fd4_derivative_values(c, order);
    return join_components(comp);
}

std::pair<std::vector<Vec3>, std::vector<Vec3>> derivatives12(const DiscreteCurve& curve,
                                                              DiffScheme scheme) {
    if (scheme == DiffScheme::fd4) return {derivative(curve, 1, scheme), derivative(curve, 2, scheme)};
    validate_curve(curve);
    auto comp = split_components(curve);
    std::array<std::vector<double>, 3> c1, c2;
    for (int j = 0; j < 3; ++j) {
        const Spectrum s = spectral::analyze(comp[j]);
        c1[j] = spectral::synthesize(spectral::derivative(s, 1));
        c2[j] = spectral::synthesize(spectral::derivative(s, 2));
    }
    return {join_components(c1), join_components(c2)};
}

std::vector<double> node_speeds(const DiscreteCurve& curve, DiffScheme scheme) {
    auto d1 = derivative(curve, 1, scheme);
    std::vector<double> sp(d1.size());
    for (size_t i = 0; i < d1.size(); ++i) {
        sp[i] = norm(d1[i]);
        if (sp[i] < kSpeedFloor)
            throw DegenerateParametrizationError("speed " + std::to_string(sp[i]) +
                                                 " below threshold at node " + std::to_string(i));
    }
    return sp;
}

std::vector<double> curvature(const DiscreteCurve& curve, DiffScheme scheme) {
    auto [d1, d2] = derivatives12(curve, scheme);
    std::vector<double> h(d1.size());
    for (size_t i = 0; i < d1.size(); ++i) {
        const double sp = norm(d1[i]);
        if (sp < kSpeedFloor)
            throw DegenerateParametrizationError("speed " + std::to_string(sp) +
                                                 " below threshold at node " + std::to_string(i));
        h[i] = norm(cross(d2[i], d1[i])) / (sp * sp * sp);
    }
    return h;
}

FrenetData frenet_frame(const DiscreteCurve& curve, DiffScheme scheme) {
    auto [d1, d2] = derivatives12(curve, scheme);
    const size_t n = d1.size();
    FrenetData f;
    f.speed.resize(n);
    f.curvature.resize(n);
    f.tangent.resize(n);
    f.normal.resize(n);
    f.binormal.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const double sp = norm(d1[i]);
        if (sp < kSpeedFloor)
            throw DegenerateParametrizationError("speed " + std::to_string(sp) +
                                                 " below threshold at node " + std::to_string(i));
        const Vec3 b = cross(d2[i], d1[i]);
        const double nb = norm(b);
        if (nb < kFrameEps * sp * sp * sp)
            throw InflectionDegeneracyError(
                "u'' x u' vanishes at node " + std::to_string(i) + " (|u'' x u'| = " +
                    std::to_string(nb) + "); Frenet frame undefined",
                static_cast<int>(i));
        f.speed[i] = sp;
        f.curvature[i] = nb / (sp * sp * sp);
        f.tangent[i] = d1[i] / sp;
        f.binormal[i] = b / nb;
        f.normal[i] = cross(d1[i], b) / (sp * nb);
    }
    return f;
}

double length(const DiscreteCurve& curve, DiffScheme scheme) {
    auto sp = node_speeds(curve, scheme);
    double acc = 0.0;
    for (double s : sp) acc += s;
    return acc * 2.0 * std::numbers::pi / curve.n();
}

DiscreteCurve resample_uniform_arclength(const DiscreteCurve& curve) {
    validate_curve(curve);
    const int n = curve.n();
    auto comp = split_components(curve);
    std::array<Spectrum, 3> pos, vel;
    for (int j = 0; j < 3; ++j) {
        pos[j] = spectral::analyze(comp[j]);
        vel[j] = spectral::derivative(pos[j], 1);
    }

    // Speed sampled on a 4x refined grid, then represented spectrally so the
    // arclength function s(x) has a closed-form antiderivative.
    const int m = 4 * n;
    std::array<std::vector<double>, 3> fine;
    for (int j = 0; j < 3; ++j) fine[j] = spectral::refine(vel[j], m);
    std::vector<double> sp(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        const Vec3 v = {fine[0][i], fine[1][i], fine[2][i]};
        const double s = norm(v);
        if (s < kSpeedFloor)
            throw DegenerateParametrizationError("refined speed vanishes during resampling");
        sp[static_cast<size_t>(i)] = s;
    }
    const Spectrum speed_spec = spectral::analyze(sp);
    auto arclen = [&](double x) { return speed_spec.eval_antiderivative(x); };
    auto speed_at = [&](double x) { return speed_spec.eval(x); };
    const double total = speed_spec.c[0].real() / m * 2.0 * std::numbers::pi;

    DiscreteCurve out;
    out.nodes.resize(static_cast<size_t>(n));
    double x = 0.0;
    for (int k = 0; k < n; ++k) {
        const double target = total * k / n;
        // Newton with bisection safeguard; s is strictly increasing.
        double lo = x, hi = 2.0 * std::numbers::pi;
        for (int it = 0; it < 60; ++it) {
            const double err = arclen(x) - target;
            if (std::abs(err) < 1e-14 * total) break;
            if (err > 0.0)
                hi = x;
            else
                lo = x;
            double next = x - err / speed_at(x);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            x = next;
        }
        out.nodes[static_cast<size_t>(k)] = {pos[0].eval(x), pos[1].eval(x), pos[2].eval(x)};
    }
    return out;
}

} // namespace csf
