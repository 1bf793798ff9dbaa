#ifndef CSF_GEOMETRY_HPP
#define CSF_GEOMETRY_HPP

#include "csf/vec3.hpp"

#include <utility>
#include <vector>

namespace csf {

/// Uniform periodic samples of a closed curve at x_i = 2*pi*i/n.
/// n must be a power of two >= 16 (Fourier differentiation grid).
struct DiscreteCurve {
    std::vector<Vec3> nodes;

    int n() const { return static_cast<int>(nodes.size()); }
};

/// Differentiation backend. Fourier is the default and is exact for
/// band-limited curves; fd4 is a robustness fallback.
enum class DiffScheme { spectral, fd4 };

/// Per-node speed, curvature, and orthonormal frame along the curve.
struct FrenetData {
    std::vector<double> speed;
    std::vector<double> curvature;
    std::vector<Vec3> tangent;
    std::vector<Vec3> normal;
    std::vector<Vec3> binormal;
};

/// Speed below this is treated as a degenerate parametrization.
inline constexpr double kSpeedFloor = 1e-12;

/// Frame refusal threshold: |u'' x u'| < kFrameEps * |u'|^3 counts as an
/// inflection node (curvature below kFrameEps).
inline constexpr double kFrameEps = 1e-10;

/// Grid and finiteness validation; throws std::invalid_argument.
void validate_curve(const DiscreteCurve& curve);

/// order-th derivative with respect to the parameter x (order in {1,2}).
std::vector<Vec3> derivative(const DiscreteCurve& curve, int order,
                             DiffScheme scheme = DiffScheme::spectral);

/// First and second derivatives in one pass (shares the forward transform).
std::pair<std::vector<Vec3>, std::vector<Vec3>> derivatives12(
    const DiscreteCurve& curve, DiffScheme scheme = DiffScheme::spectral);

/// Per-node |u'|; throws DegenerateParametrizationError below kSpeedFloor.
std::vector<double> node_speeds(const DiscreteCurve& curve,
                                DiffScheme scheme = DiffScheme::spectral);

/// H = |u'' x u'| / |u'|^3, nonnegative.
std::vector<double> curvature(const DiscreteCurve& curve,
                              DiffScheme scheme = DiffScheme::spectral);

/// Tangent, normal nu = u' x (u'' x u') / (|u'||u'' x u'|) and binormal
/// gamma = u'' x u' / |u'' x u'|. Throws InflectionDegeneracyError naming
/// the first offending node when the frame is undefined.
FrenetData frenet_frame(const DiscreteCurve& curve,
                        DiffScheme scheme = DiffScheme::spectral);

/// Redistribute the n nodes equispaced in arclength along the trigonometric
/// interpolant of the curve. Node 0 stays anchored at parameter x = 0.
DiscreteCurve resample_uniform_arclength(const DiscreteCurve& curve);

/// Total arclength by periodic trapezoid quadrature of |u'|.
double length(const DiscreteCurve& curve, DiffScheme scheme = DiffScheme::spectral);

} // namespace csf

#endif
