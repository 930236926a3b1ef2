#pragma once

// Circular regime: unit-circle polylogarithms Li_n(e^{i theta}), the
// phase-normalized master i^{-n} Li_n, its CL/SL projections, Cl_2, and the
// boundary constants at theta = 0.

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "clausen/errors.hpp"
#include "clausen/theta.hpp"

namespace clausen {

/// Guard around the n=1 log singularity at theta in 2*pi*Z.
inline constexpr double kThetaGuard = 1e-8;

namespace detail {

/// Compensated complex accumulator.
struct KahanComplex {
    double sr = 0.0, si = 0.0; // sums
    double cr = 0.0, ci = 0.0; // compensations

    void add(Complex t) {
        const double yr = t.real() - cr;
        const double tr = sr + yr;
        cr = (tr - sr) - yr;
        sr = tr;
        const double yi = t.imag() - ci;
        const double ti = si + yi;
        ci = (ti - si) - yi;
        si = ti;
    }
    Complex value() const { return {sr, si}; }
};

/// 1 - e^{i theta} without cancellation:  (2 sin^2(theta/2), -sin(theta)).
inline Complex one_minus_exp_i(double theta) {
    const double s = std::sin(0.5 * theta);
    return {2.0 * s * s, -std::sin(theta)};
}

/// zeta(n) by direct summation plus Euler-Maclaurin tail,
///   sum_{k>K} k^{-n} = K^{1-n}/(n-1) - K^{-n}/2 + (n/12) K^{-n-1}
///                      - n(n+1)(n+2)/720 K^{-n-3} + ...
inline double zeta_em(int n) {
    const int K = 10000;
    double sum = 0.0, comp = 0.0;
    for (int k = K; k >= 1; --k) {
        const double term = std::pow(static_cast<double>(k), -n);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    const double Kd = K;
    const double Kn = std::pow(Kd, -n);
    double tail = Kd * Kn / (n - 1.0) - 0.5 * Kn + (n / 12.0) * Kn / Kd;
    tail -= (static_cast<double>(n) * (n + 1.0) * (n + 2.0) / 720.0) * Kn / (Kd * Kd * Kd);
    return sum + tail;
}

/// Oscillatory tail sum_{k>K} e^{ik theta}/k^n by iterated summation by parts.
/// Writes the best achievable bound into `bound`; the returned value drops a
/// remainder of at most that size.
inline Complex sbp_tail(double theta_reduced, long K, int m_steps, Complex one_minus_E,
                        const double* diffs) {
    const Complex factor =
        std::polar(1.0, static_cast<double>(K + 1) * theta_reduced) / one_minus_E;
    const Complex ratio = -std::polar(1.0, theta_reduced) / one_minus_E;
    Complex s = 0.0, rp = 1.0;
    for (int j = 0; j < m_steps; ++j) {
        s += rp * diffs[j];
        rp *= ratio;
    }
    return factor * s;
}

} // namespace detail

/// i^{-n} for integer n >= 0.
inline Complex i_pow_minus(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

/// Li_n(e^{i theta}) = sum_k e^{ik theta}/k^n on the unit circle.
///
/// n = 1 is the closed form -log(1 - e^{i theta}) (principal branch) and
/// requires theta in (theta_guard, 2 pi - theta_guard).  For n >= 2 the series
/// is summed directly with Kahan compensation and the tail is completed by
/// Euler-Maclaurin (theta = 0) or summation-by-parts acceleration (theta != 0)
/// to absolute accuracy <= tol.
inline Complex polylog_unit_circle(int n, double theta, double tol = 1e-12) {
    if (n < 1) throw DomainError("polylog_unit_circle: order must be >= 1");
    if (!(tol > 0.0)) throw DomainError("polylog_unit_circle: tol must be positive");

    if (n == 1) {
        if (!(theta > kThetaGuard && theta < kTwoPi - kThetaGuard)) {
            std::ostringstream os;
            os << "polylog_unit_circle: n=1 needs theta in (theta_guard, 2*pi - theta_guard), "
                  "theta_guard = "
               << kThetaGuard;
            throw DomainError(os.str());
        }
        return -std::log(detail::one_minus_exp_i(theta));
    }

    double tr = theta - kTwoPi * std::floor(theta / kTwoPi);
    if (tr >= kTwoPi) tr = 0.0;
    if (tr < 1e-13 || kTwoPi - tr < 1e-13)
        return {detail::zeta_em(n), 0.0};

    const Complex one_minus_E = detail::one_minus_exp_i(tr);
    const double gap = std::abs(one_minus_E);

    detail::KahanComplex acc;
    long k = 1;
    long K = 4096;
    const long K_cap = 1L << 22;
    for (;;) {
        for (; k <= K; ++k) {
            const double r = std::pow(static_cast<double>(k), -n);
            acc.add(std::polar(r, k * tr));
        }
        // Forward differences of k^{-n} at K+1; completely monotone, so all
        // entries are nonnegative and bound the dropped remainder.
        constexpr int J = 9;
        double p[J + 1];
        for (int i = 0; i <= J; ++i)
            p[i] = std::pow(static_cast<double>(K + 1 + i), -n);
        double d[J];
        for (int j = 0; j < J; ++j) {
            d[j] = std::max(p[0], 0.0);
            for (int i = 0; i + j < J; ++i) p[i] -= p[i + 1];
        }
        int best_m = 0;
        double best = std::numeric_limits<double>::infinity();
        double gp = 1.0;
        for (int m = 1; m <= J; ++m) {
            gp *= gap;
            const double err = d[m - 1] / gp;
            if (err < best) {
                best = err;
                best_m = m;
            }
        }
        if (best <= 0.5 * tol)
            return acc.value() + detail::sbp_tail(tr, K, best_m, one_minus_E, d);
        if (K >= K_cap) {
            std::ostringstream os;
            os << "polylog_unit_circle: tail bound " << best << " > tol " << tol
               << " at term cap (theta too close to a multiple of 2*pi?)";
            throw TruncationError(os.str());
        }
        K *= 2;
    }
}

/// zeta(n) = Li_n(1), n >= 2, from the same series machinery at theta = 0.
inline double zeta_value(int n, double tol = 1e-12) {
    if (n < 2) throw DomainError("zeta_value: order must be >= 2");
    (void)tol; // Euler-Maclaurin tail is exact far below any requested tol
    return detail::zeta_em(n);
}

/// Phase-normalized master F_n(theta) = i^{-n} Li_n(e^{i theta}).
inline Complex circular_master(int n, double theta, double tol = 1e-12) {
    return i_pow_minus(n) * polylog_unit_circle(n, theta, tol);
}

/// CL-type component A(n;theta) = 2 Re F_n.
inline double cl_component(int n, double theta, double tol = 1e-12) {
    return 2.0 * circular_master(n, theta, tol).real();
}

/// SL-type component B(n;theta) = -2 Im F_n.
inline double sl_component(int n, double theta, double tol = 1e-12) {
    return -2.0 * circular_master(n, theta, tol).imag();
}

/// Cl_2(theta) = sum_k sin(k theta)/k^2.
inline double clausen_cl2(double theta, double tol = 1e-12) {
    return polylog_unit_circle(2, theta, tol).imag();
}

/// Order, phase and value of the master function, bundled.
struct CircularMasterValue {
    int order;
    double theta;
    Complex value;
};

inline CircularMasterValue circular_master_value(int n, double theta, double tol = 1e-12) {
    return {n, theta, circular_master(n, theta, tol)};
}

/// Boundary constants C_n = A(n;0), S_n = B(n;0), i.e. the CL/SL values at the
/// base point: C_n = 2 Re(i^{-n} zeta(n)), S_n = -2 Im(i^{-n} zeta(n)).
struct BoundaryConstants {
    int order;
    double C;
    double S;
};

inline BoundaryConstants boundary_constants(int n, double tol = 1e-12) {
    if (n < 2) throw DomainError("boundary_constants: order must be >= 2");
    const Complex f = i_pow_minus(n) * zeta_value(n, tol);
    return {n, 2.0 * f.real(), -2.0 * f.imag()};
}

} // namespace clausen
