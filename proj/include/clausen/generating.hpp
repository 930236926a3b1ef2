#pragma once

// Truncated generating series over a tower,
//   F_N(w; lambda) = sum_{n=1}^N F_n(w) lambda^{n-1},
// with its CL/SL projections and the residual of the generating ODE.  The
// termwise backbone gives the exact truncation identity
//   d/dw F_N = F_1' + lambda F_N - lambda^N F_N(w),
// whose F_1' term the closed-form ODE omits; the uncorrected residual is kept
// as a negative control.

#include <cmath>
#include <complex>

#include "clausen/errors.hpp"
#include "clausen/hierarchy.hpp"

namespace clausen {

struct GeneratingSlice {
    const Tower* tower;
    int truncation; // N
    Complex lambda; // formal deformation parameter

    GeneratingSlice(const Tower& tower_, int truncation_, Complex lambda_)
        : tower(&tower_), truncation(truncation_), lambda(lambda_) {
        if (truncation < 1 || truncation > tower->max_order)
            throw DomainError("GeneratingSlice: truncation outside 1..tower.max_order");
    }
};

/// F_N(w; lambda) as the explicit finite sum (Horner in lambda).
inline Complex eval_generating(const GeneratingSlice& slice, double w) {
    Complex acc = slice.tower->eval(slice.truncation, w);
    for (int n = slice.truncation - 1; n >= 1; --n)
        acc = slice.tower->eval(n, w) + slice.lambda * acc;
    return acc;
}

/// F_1'(w) = S'(w)/S(w) in closed form for the slice's seed.
inline Complex generating_seed_derivative(const GeneratingSlice& slice, double w) {
    return slice.tower->seed.log_derivative(Complex(w, 0.0));
}

namespace detail {

inline Complex int_pow(Complex base, int exponent) {
    Complex p = 1.0;
    for (int k = 0; k < exponent; ++k) p *= base;
    return p;
}

inline Complex generating_fd(const GeneratingSlice& slice, double w, double h) {
    if (!(h > 0.0)) throw DomainError("generating residual: FD step must be positive");
    if (!(w - h > 0.0 && w + h <= slice.tower->x_hi))
        throw DomainError("generating residual: w +- h must stay inside the tower domain");
    return (eval_generating(slice, w + h) - eval_generating(slice, w - h)) / (2.0 * h);
}

} // namespace detail

/// Residual of the exact truncation identity,
///   d/dw F_N - F_1' - lambda F_N + lambda^N F_N(w)  ->  O(h^2).
inline Complex generating_residual(const GeneratingSlice& slice, double w, double h = 1e-4) {
    const Complex fd = detail::generating_fd(slice, w, h);
    const Complex lam_pow = detail::int_pow(slice.lambda, slice.truncation);
    return fd - generating_seed_derivative(slice, w) - slice.lambda * eval_generating(slice, w) +
           lam_pow * slice.tower->eval(slice.truncation, w);
}

/// Residual of the ODE as printed, d/dw F_N - lambda F_N; approximately
/// F_1' - lambda^N F_N, i.e. not small.  Negative control.
inline Complex generating_residual_paper_form(const GeneratingSlice& slice, double w,
                                              double h = 1e-4) {
    const Complex fd = detail::generating_fd(slice, w, h);
    return fd - slice.lambda * eval_generating(slice, w);
}

/// CL/SL projections of the generating series at real lambda:
///   A(w;lambda) = sum A(n;w) lambda^{n-1},  B likewise.
struct GeneratingClSl {
    double A_series;
    double B_series;
};

inline GeneratingClSl generating_clsl(const GeneratingSlice& slice, double w) {
    if (slice.lambda.imag() != 0.0)
        throw DomainError("generating_clsl: lambda must be real for the CL/SL split");
    const double lam = slice.lambda.real();
    double a = 2.0 * slice.tower->eval(slice.truncation, w).real();
    double b = -2.0 * slice.tower->eval(slice.truncation, w).imag();
    for (int n = slice.truncation - 1; n >= 1; --n) {
        const Complex f = slice.tower->eval(n, w);
        a = 2.0 * f.real() + lam * a;
        b = -2.0 * f.imag() + lam * b;
    }
    return {a, b};
}

} // namespace clausen
