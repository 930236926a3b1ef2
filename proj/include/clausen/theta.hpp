#pragma once

// Jacobi theta_1 in the period-1 convention: zeros on the lattice Z + tau*Z,
// nome q = exp(i*pi*tau).  Two independent evaluation paths (sine q-series and
// the infinite product) are both first-class so that each can serve as the
// other's oracle.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <sstream>
#include <vector>

#include "clausen/errors.hpp"

namespace clausen {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Smallest accepted Im(tau); below this the q-series would need more than
/// the default term budget and modular fallback is out of scope.
inline constexpr double kTauMin = 0.05;

/// Lattice-distance guard for operations singular on the zero set.
inline constexpr double kZeroGuard = 1e-6;

/// A half-period ratio in the upper half-plane together with its nome.
struct TauParameter {
    Complex tau;
    Complex q;      // e^{i pi tau}
    double q_abs;   // |q| = e^{-pi Im tau}

    explicit TauParameter(Complex tau_value) : tau(tau_value) {
        if (!(tau.imag() >= kTauMin)) {
            std::ostringstream os;
            os << "TauParameter: Im(tau) = " << tau.imag()
               << " is below tau_min = " << kTauMin;
            throw DomainError(os.str());
        }
        q = std::exp(Complex(0.0, kPi) * tau);
        q_abs = std::exp(-kPi * tau.imag());
    }

    /// q^s for real s, computed from tau directly so fractional powers are
    /// branch-free.
    Complex q_pow(double s) const { return std::exp(Complex(0.0, kPi * s) * tau); }

    /// |q|^s.
    double q_abs_pow(double s) const { return std::exp(-kPi * tau.imag() * s); }
};

struct ThetaSettings {
    double truncation_eps = 1e-16; // tail bound relative to the largest retained term
    int max_terms = 64;
};

namespace detail {

inline void check_theta_settings(const ThetaSettings& s) {
    if (!(s.truncation_eps > 0.0) || s.max_terms < 4)
        throw DomainError("ThetaSettings: need truncation_eps > 0 and max_terms >= 4");
}

/// Series evaluation lives in the strip |Im z| <= 2 Im tau; beyond it the
/// largest term overflows before cancellation.
inline void check_strip(Complex z, const TauParameter& tau) {
    if (std::abs(z.imag()) > 2.0 * tau.tau.imag()) {
        std::ostringstream os;
        os << "theta: |Im z| = " << std::abs(z.imag())
           << " outside the strip bound 2*Im(tau) = " << 2.0 * tau.tau.imag();
        throw DomainError(os.str());
    }
}

} // namespace detail

/// Distance from z to the nearest point of Z + tau*Z, measured after reducing
/// the lattice coordinates of z.
inline double lattice_distance(Complex z, const TauParameter& tau) {
    const double b = z.imag() / tau.tau.imag();
    const double a = z.real() - b * tau.tau.real();
    const double da = a - std::round(a);
    const double db = b - std::round(b);
    return std::abs(da + db * tau.tau);
}

/// theta_1(z|tau) from the sine q-series
///   2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) pi z).
inline Complex theta1_series(Complex z, const TauParameter& tau,
                             const ThetaSettings& settings = {}) {
    detail::check_theta_settings(settings);
    detail::check_strip(z, tau);

    const double y = std::abs(z.imag());
    Complex sum = 0.0;
    double largest = 0.0;
    for (int n = 0; n < settings.max_terms; ++n) {
        const double half = n + 0.5;
        const Complex qn = tau.q_pow(half * half);
        Complex term = 2.0 * qn * std::sin((2.0 * n + 1.0) * kPi * z);
        if (n % 2 == 1) term = -term;
        sum += term;

        // |sin w| <= e^{|Im w|}; bound the next term and the geometric ratio
        // of successive bounds.
        const double bound_n = 2.0 * tau.q_abs_pow(half * half) * std::exp((2.0 * n + 1.0) * kPi * y);
        largest = std::max(largest, bound_n);
        const double next_half = n + 1.5;
        const double bound_next =
            2.0 * tau.q_abs_pow(next_half * next_half) * std::exp((2.0 * n + 3.0) * kPi * y);
        const double ratio = tau.q_abs_pow(2.0 * n + 4.0) * std::exp(2.0 * kPi * y);
        if (ratio <= 0.5 && bound_next <= 0.5 * settings.truncation_eps * largest)
            return sum;
    }
    throw TruncationError("theta1_series: max_terms reached before tail bound");
}

/// theta_1(z|tau) from the product
///   2 q^{1/4} sin(pi z) prod_m (1-q^{2m}) (1 - 2 q^{2m} cos(2 pi z) + q^{4m}).
inline Complex theta1_product(Complex z, const TauParameter& tau,
                              const ThetaSettings& settings = {}) {
    detail::check_theta_settings(settings);
    detail::check_strip(z, tau);

    const Complex prefactor = 2.0 * tau.q_pow(0.25) * std::sin(kPi * z);
    const double cos_bound = std::exp(2.0 * kPi * std::abs(z.imag()));
    Complex prod = 1.0;
    for (int m = 1; m <= settings.max_terms; ++m) {
        const Complex q2m = tau.q_pow(2.0 * m);
        const Complex c = std::cos(2.0 * kPi * z);
        prod *= (1.0 - q2m) * (1.0 - 2.0 * q2m * c + q2m * q2m);
        // The next factor deviates from 1 by at most this much.
        const double q2next = tau.q_abs_pow(2.0 * (m + 1));
        const double deviation = q2next * (1.0 + 2.0 * cos_bound + q2next * (1.0 + cos_bound));
        if (deviation <= 0.5 * settings.truncation_eps)
            return prefactor * prod;
    }
    throw TruncationError("theta1_product: max_terms reached before tail bound");
}

/// theta_1'(0|tau) from the product 2 pi q^{1/4} prod_m (1-q^{2m})^3.
inline Complex theta1_prime_zero_product(const TauParameter& tau,
                                         const ThetaSettings& settings = {}) {
    detail::check_theta_settings(settings);
    Complex prod = 1.0;
    for (int m = 1; m <= settings.max_terms; ++m) {
        const Complex q2m = tau.q_pow(2.0 * m);
        const Complex f = 1.0 - q2m;
        prod *= f * f * f;
        const double deviation = 4.0 * tau.q_abs_pow(2.0 * (m + 1));
        if (deviation <= 0.5 * settings.truncation_eps)
            return 2.0 * kPi * tau.q_pow(0.25) * prod;
    }
    throw TruncationError("theta1_prime_zero_product: max_terms reached before tail bound");
}

/// theta_1'(0|tau) from the term-wise differentiated sine series
///   2 pi sum_{n>=0} (-1)^n (2n+1) q^{(n+1/2)^2}.
inline Complex theta1_prime_zero_series(const TauParameter& tau,
                                        const ThetaSettings& settings = {}) {
    detail::check_theta_settings(settings);
    Complex sum = 0.0;
    double largest = 0.0;
    for (int n = 0; n < settings.max_terms; ++n) {
        const double half = n + 0.5;
        Complex term = (2.0 * n + 1.0) * tau.q_pow(half * half);
        if (n % 2 == 1) term = -term;
        sum += term;

        const double bound_n = (2.0 * n + 1.0) * tau.q_abs_pow(half * half);
        largest = std::max(largest, bound_n);
        const double next_half = n + 1.5;
        const double bound_next = (2.0 * n + 3.0) * tau.q_abs_pow(next_half * next_half);
        const double ratio = 2.0 * tau.q_abs_pow(2.0 * n + 4.0);
        if (ratio <= 0.5 && bound_next <= 0.5 * settings.truncation_eps * largest)
            return 2.0 * kPi * sum;
    }
    throw TruncationError("theta1_prime_zero_series: max_terms reached before tail bound");
}

/// theta_1'(0|tau); the product form of the displayed formula.
inline Complex theta1_prime_zero(const TauParameter& tau, const ThetaSettings& settings = {}) {
    return theta1_prime_zero_product(tau, settings);
}

/// Normalized theta  theta~_1 = theta_1 / theta_1'(0), so theta~_1(z) ~ z at 0.
/// All-series path; theta1_product / theta1_prime_zero_product stay independent.
inline Complex theta1_normalized(Complex z, const TauParameter& tau,
                                 const ThetaSettings& settings = {}) {
    return theta1_series(z, tau, settings) / theta1_prime_zero_series(tau, settings);
}

/// theta_1'(z|tau) from the term-wise differentiated sine series.
inline Complex theta1_prime(Complex z, const TauParameter& tau,
                            const ThetaSettings& settings = {}) {
    detail::check_theta_settings(settings);
    detail::check_strip(z, tau);

    const double y = std::abs(z.imag());
    Complex sum = 0.0;
    double largest = 0.0;
    for (int n = 0; n < settings.max_terms; ++n) {
        const double half = n + 0.5;
        const Complex qn = tau.q_pow(half * half);
        Complex term = 2.0 * kPi * (2.0 * n + 1.0) * qn * std::cos((2.0 * n + 1.0) * kPi * z);
        if (n % 2 == 1) term = -term;
        sum += term;

        const double bound_n = 2.0 * kPi * (2.0 * n + 1.0) * tau.q_abs_pow(half * half) *
                               std::exp((2.0 * n + 1.0) * kPi * y);
        largest = std::max(largest, bound_n);
        const double next_half = n + 1.5;
        const double bound_next = 2.0 * kPi * (2.0 * n + 3.0) *
                                  tau.q_abs_pow(next_half * next_half) *
                                  std::exp((2.0 * n + 3.0) * kPi * y);
        const double ratio = 2.0 * tau.q_abs_pow(2.0 * n + 4.0) * std::exp(2.0 * kPi * y);
        if (ratio <= 0.5 && bound_next <= 0.5 * settings.truncation_eps * largest)
            return sum;
    }
    throw TruncationError("theta1_prime: max_terms reached before tail bound");
}

/// Logarithmic derivative theta~_1'(z)/theta~_1(z) = theta_1'(z)/theta_1(z).
inline Complex theta1_log_derivative(Complex z, const TauParameter& tau,
                                     const ThetaSettings& settings = {}) {
    detail::check_strip(z, tau);
    if (lattice_distance(z, tau) < kZeroGuard) {
        std::ostringstream os;
        os << "theta1_log_derivative: z within zero_guard = " << kZeroGuard
           << " of a lattice point";
        throw NearZeroError(os.str());
    }
    return theta1_prime(z, tau, settings) / theta1_series(z, tau, settings);
}

/// Sup over a real grid in (0,1) of |theta~_1(x|tau) - sin(pi x)/pi|.
inline double degeneration_error(std::span<const double> z_grid, const TauParameter& tau,
                                 const ThetaSettings& settings = {}) {
    const Complex dtheta = theta1_prime_zero_series(tau, settings);
    double sup = 0.0;
    for (double x : z_grid) {
        if (!(x > 0.0 && x < 1.0))
            throw DomainError("degeneration_error: grid point outside (0,1)");
        const Complex val = theta1_series(Complex(x, 0.0), tau, settings) / dtheta;
        sup = std::max(sup, std::abs(val - std::sin(kPi * x) / kPi));
    }
    return sup;
}

} // namespace clausen
