#include "csf/spectral.hpp"
#include "csf/errors.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace csf::spectral {

namespace {

// Cached FFTW plans per grid size. Plan creation is not thread safe;
// execution through the new-array interface is.
struct PlanPair {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
};

PlanPair& plans_for(int n) {
    static std::mutex mtx;
    static std::map<int, PlanPair> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> re(static_cast<size_t>(n));
    std::vector<std::complex<double>> co(static_cast<size_t>(n) / 2 + 1);
    PlanPair p;
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    p.r2c = fftw_plan_dft_r2c_1d(n, re.data(), reinterpret_cast<fftw_complex*>(co.data()), flags);
    p.c2r = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(co.data()), re.data(), flags);
    return cache.emplace(n, p).first->second;
}

void require_grid(int n) {
    if (n < 16 || !is_pow2(n))
        throw std::invalid_argument("spectral: grid size must be a power of two >= 16, got " +
                                    std::to_string(n));
}

} // namespace

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

Spectrum analyze(std::span<const double> f) {
    const int n = static_cast<int>(f.size());
    require_grid(n);
    Spectrum s;
    s.n = n;
    s.c.resize(static_cast<size_t>(n) / 2 + 1);
    std::vector<double> in(f.begin(), f.end());
    fftw_execute_dft_r2c(plans_for(n).r2c, in.data(),
                         reinterpret_cast<fftw_complex*>(s.c.data()));
    return s;
}

std::vector<double> synthesize(const Spectrum& s) {
    require_grid(s.n);
    std::vector<std::complex<double>> co(s.c); // c2r scrambles its input
    std::vector<double> out(static_cast<size_t>(s.n));
    fftw_execute_dft_c2r(plans_for(s.n).c2r,
                         reinterpret_cast<fftw_complex*>(co.data()), out.data());
    const double inv = 1.0 / s.n;
    for (double& v : out) v *= inv;
    return out;
}

Spectrum derivative(const Spectrum& s, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("spectral::derivative: order must be 1 or 2");
    Spectrum d = s;
    const int half = s.n / 2;
    for (int k = 0; k <= half; ++k) {
        if (order == 1) {
            d.c[k] *= std::complex<double>(0.0, k);
            if (k == half) d.c[k] = 0.0;
        } else {
            d.c[k] *= -static_cast<double>(k) * k;
        }
    }
    return d;
}

std::vector<double> derivative_values(std::span<const double> f, int order) {
    return synthesize(derivative(analyze(f), order));
}

std::vector<double> fd4_derivative_values(std::span<const double> f, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("spectral::fd4_derivative_values: order must be 1 or 2");
    const int n = static_cast<int>(f.size());
    require_grid(n);
    const double h = 2.0 * std::numbers::pi / n;
    std::vector<double> out(static_cast<size_t>(n));
    auto at = [&](int i) { return f[static_cast<size_t>(((i % n) + n) % n)]; };
    for (int i = 0; i < n; ++i) {
        if (order == 1)
            out[i] = (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) / (12.0 * h);
        else
            out[i] = (-at(i + 2) + 16.0 * at(i + 1) - 30.0 * at(i) + 16.0 * at(i - 1) - at(i - 2)) /
                     (12.0 * h * h);
    }
    return out;
}

std::vector<double> refine(const Spectrum& s, int m) {
    require_grid(s.n);
    if (m < s.n || !is_pow2(m))
        throw std::invalid_argument("spectral::refine: target grid must be a power of two >= n");
    Spectrum fine;
    fine.n = m;
    fine.c.assign(static_cast<size_t>(m) / 2 + 1, {0.0, 0.0});
    const int half = s.n / 2;
    for (int k = 0; k < half; ++k) fine.c[k] = s.c[k];
    // Nyquist energy of the coarse grid splits across +-n/2 on the fine one.
    if (m > s.n)
        fine.c[half] = 0.5 * s.c[half];
    else
        fine.c[half] = s.c[half];
    return synthesize(fine);
}

double Spectrum::eval(double x) const {
    const int half = n / 2;
    const std::complex<double> rot(std::cos(x), std::sin(x));
    std::complex<double> e = rot; // e^{ikx}, starting at k=1
    double acc = c[0].real();
    for (int k = 1; k < half; ++k) {
        acc += 2.0 * (c[k] * e).real();
        e *= rot;
    }
    acc += c[half].real() * std::cos(half * x);
    return acc / n;
}

double Spectrum::eval_antiderivative(double x) const {
    const int half = n / 2;
    const std::complex<double> rot(std::cos(x), std::sin(x));
    std::complex<double> e = rot;
    double acc = c[0].real() * x;
    for (int k = 1; k < half; ++k) {
        const std::complex<double> ik(0.0, k);
        acc += 2.0 * (c[k] * (e - 1.0) / ik).real();
        e *= rot;
    }
    acc += c[half].real() * std::sin(half * x) / half;
    return acc / n;
}

} // namespace csf::spectral
