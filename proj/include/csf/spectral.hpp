#ifndef CSF_SPECTRAL_HPP
#define CSF_SPECTRAL_HPP

#include <complex>
#include <span>
#include <vector>

namespace csf::spectral {

/// Fourier coefficients of a real periodic grid function on x_j = 2*pi*j/n.
/// Layout follows the real-input DFT: c[k], k = 0..n/2, unnormalized
/// (divide by n to get trigonometric-series coefficients).
struct Spectrum {
    int n = 0;
    std::vector<std::complex<double>> c;

    /// Trigonometric interpolant evaluated at arbitrary x.
    double eval(double x) const;

    /// Antiderivative of the interpolant, normalized so that S(0) = 0.
    /// The mean value contributes the linear term (c[0].real()/n) * x.
    double eval_antiderivative(double x) const;
};

Spectrum analyze(std::span<const double> f);
std::vector<double> synthesize(const Spectrum& s);

/// Coefficient-space differentiation. Order 1 zeroes the Nyquist mode
/// (the standard choice keeping the derivative real); order 2 keeps it.
Spectrum derivative(const Spectrum& s, int order);

/// Fourier differentiation of grid values: analyze, scale, synthesize.
std::vector<double> derivative_values(std::span<const double> f, int order);

/// 4th-order central finite differences on the periodic grid.
std::vector<double> fd4_derivative_values(std::span<const double> f, int order);

/// Pad a spectrum to a finer grid of m >= n points (m power of two) and
/// synthesize; exact for the trigonometric interpolant.
std::vector<double> refine(const Spectrum& s, int m);

/// true if n is a power of two
bool is_pow2(int n);

} // namespace csf::spectral

#endif
