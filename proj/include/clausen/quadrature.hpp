#pragma once

// Two quadrature workhorses: adaptive Gauss-Kronrod 15(7) for smooth real
// integrands, and tanh-sinh level doubling for segments with an integrable
// endpoint singularity (the log z endpoint of the base-point integrals).

#include <cmath>
#include <complex>
#include <vector>

#include "clausen/errors.hpp"
#include "clausen/theta.hpp"

namespace clausen {
namespace detail {

// Gauss-Kronrod 15-point nodes/weights on [-1,1] (positive half).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double kGK15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
// Gauss-7 weights for nodes with odd index above (plus the center).
inline constexpr double kG7Weights[4] = {0.129484966168870, 0.279705391489277,
                                         0.381830050505119, 0.417959183673469};

} // namespace detail

/// Adaptive Gauss-Kronrod 15(7) for a smooth real-valued integrand on [a,b].
template <class F>
double adaptive_gk(F&& f, double a, double b, double tol, int depth = 0) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double ik = 0.0, ig = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double x = detail::kGK15Nodes[i];
        const double fsum = (i == 7) ? f(c) : f(c - h * x) + f(c + h * x);
        ik += detail::kGK15Weights[i] * fsum;
        if (i % 2 == 1) ig += detail::kG7Weights[i / 2] * fsum; // Gauss nodes sit at odd slots
    }
    ik *= h;
    ig *= h;
    const double err = std::abs(ik - ig);
    // second condition: rounding floor, splitting further cannot help
    if (err <= tol || err <= 4e-16 * std::abs(ik)) return ik;
    if (depth >= 30)
        throw QuadratureError("adaptive_gk: tolerance not reached at maximum depth");
    return adaptive_gk(f, a, c, 0.5 * tol, depth + 1) + adaptive_gk(f, c, b, 0.5 * tol, depth + 1);
}

/// tanh-sinh quadrature of g over (-1, 1) with level doubling; handles
/// integrable endpoint singularities since no node touches +-1.
template <class F>
Complex tanh_sinh(F&& g, double tol, int max_level = 12) {
    Complex prev = 0.0;
    const double t_max = 4.3; // tanh((pi/2) sinh(4.3)) saturates in double
    for (int level = 2; level <= max_level; ++level) {
        const double h = std::ldexp(1.0, -level);
        Complex acc = 0.0;
        const long kmax = static_cast<long>(t_max / h);
        for (long k = -kmax; k <= kmax; ++k) {
            const double t = k * h;
            const double s = 0.5 * kPi * std::sinh(t);
            const double x = std::tanh(s);
            if (std::abs(x) >= 1.0) continue;
            const double w = 0.5 * kPi * std::cosh(t) / (std::cosh(s) * std::cosh(s));
            if (w < 1e-300) continue;
            acc += w * g(x);
        }
        acc *= h;
        if (level >= 4 && std::abs(acc - prev) <= tol * std::max(1.0, std::abs(acc)))
            return acc;
        prev = acc;
    }
    throw QuadratureError("tanh_sinh: tolerance not reached at maximum level");
}

/// Integral of g along the straight segment from A to B (complex endpoints).
template <class F>
Complex integrate_segment(F&& g, Complex A, Complex B, double tol) {
    const Complex half = 0.5 * (B - A);
    auto mapped = [&](double x) { return g(A + half * (x + 1.0)); };
    return half * tanh_sinh(mapped, tol);
}

} // namespace clausen
