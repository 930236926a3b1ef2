#pragma once

// Branch-continuous argument tracking for the normalized theta function:
// unwrapped phase profiles along paths, the SL seed -2 Arg(theta~_1), its
// order-2 quadrature, nodal-line jumps and lattice winding numbers.

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "clausen/branch.hpp"
#include "clausen/errors.hpp"
#include "clausen/hierarchy.hpp"
#include "clausen/quadrature.hpp"
#include "clausen/theta.hpp"

namespace clausen {

struct PhaseSample {
    Complex position;
    double unwrapped_arg;
};

struct PhaseProfile {
    TauParameter tau;
    std::vector<PhaseSample> samples;
    double max_step_phase = 0.0;
    bool refined = false;

    double total_increment() const {
        return samples.back().unwrapped_arg - samples.front().unwrapped_arg;
    }
};

namespace detail {

/// theta~_1 evaluator with the normalization cached.
struct NormalizedTheta {
    TauParameter tau;
    ThetaSettings settings;
    Complex norm;

    NormalizedTheta(const TauParameter& tau_, const ThetaSettings& s)
        : tau(tau_), settings(s), norm(theta1_prime_zero_series(tau_, s)) {}

    Complex operator()(Complex z) const { return theta1_series(z, tau, settings) / norm; }
};

} // namespace detail

/// Adaptively refined unwrapped argument of theta~_1 along the polyline; the
/// anchor sample carries its principal argument, and every stored consecutive
/// increment is below pi/2.
inline PhaseProfile unwrap_phase(const TauParameter& tau, const PathSpec& path,
                                 const ThetaSettings& settings = {}) {
    if (path.waypoints.size() < 2)
        throw DomainError("unwrap_phase: need at least two waypoints");

    double total_len = 0.0;
    for (std::size_t s = 0; s + 1 < path.waypoints.size(); ++s)
        total_len += std::abs(path.waypoints[s + 1] - path.waypoints[s]);
    if (total_len == 0.0) throw DomainError("unwrap_phase: degenerate path");

    const int hint = std::max(2, path.samples_hint);
    std::vector<Complex> pts;
    pts.push_back(path.waypoints.front());
    for (std::size_t s = 0; s + 1 < path.waypoints.size(); ++s) {
        const Complex a = path.waypoints[s];
        const Complex b = path.waypoints[s + 1];
        const int m = std::max(1, static_cast<int>(std::lround(hint * std::abs(b - a) / total_len)));
        for (int j = 1; j <= m; ++j) pts.push_back(a + (b - a) * (static_cast<double>(j) / m));
    }
    for (const Complex& p : pts)
        if (lattice_distance(p, tau) < kZeroGuard)
            throw NearZeroError("unwrap_phase: path within zero_guard of a lattice point");

    const detail::NormalizedTheta f(tau, settings);
    PhaseProfile profile{tau, {}, 0.0, false};
    const auto chain = unwrap_chain(f, pts, &profile.refined);
    profile.samples.reserve(chain.size());
    for (const auto& [pos, arg] : chain) profile.samples.push_back({pos, arg});
    for (std::size_t j = 1; j < profile.samples.size(); ++j)
        profile.max_step_phase =
            std::max(profile.max_step_phase, std::abs(profile.samples[j].unwrapped_arg -
                                                      profile.samples[j - 1].unwrapped_arg));
    return profile;
}

/// Unwrapped argument of theta~_1 at each point of a real-axis grid,
/// continued from the principal argument at the first point.
inline std::vector<double> unwrap_at_points(const TauParameter& tau, std::span<const double> xs,
                                            const ThetaSettings& settings = {}) {
    std::vector<Complex> pts;
    pts.reserve(xs.size());
    for (double x : xs) {
        if (lattice_distance(Complex(x, 0.0), tau) < kZeroGuard)
            throw NearZeroError("unwrap_at_points: point within zero_guard of a lattice point");
        pts.emplace_back(x, 0.0);
    }
    const detail::NormalizedTheta f(tau, settings);
    return unwrap_args(f, pts);
}

/// SL seed B(1;x) = -2 Arg(theta~_1(x|tau)), branch continued from 0+ where
/// the argument vanishes with theta~_1 ~ x.
inline double sl_seed(const TauParameter& tau, double x, const ThetaSettings& settings = {}) {
    if (!(x > kZeroGuard && x < 1.0 - kZeroGuard))
        throw NearZeroError("sl_seed: x within zero_guard of 0 or 1");
    const detail::NormalizedTheta f(tau, settings);
    const double x0 = 1e-4;
    if (x <= x0) return -2.0 * std::arg(f(Complex(x, 0.0)));
    const std::vector<Complex> pts{Complex(x0, 0.0), Complex(x, 0.0)};
    return -2.0 * unwrap_args(f, pts).back();
}

/// B(2;x) = -2 int_0^x Arg(theta~_1(t|tau)) dt by adaptive quadrature of the
/// unwrapped phase.
inline double sl_order2(const TauParameter& tau, double x, double tol,
                        const ThetaSettings& settings = {}) {
    if (!(x > 0.0 && x <= 1.0 - kDomainMargin))
        throw DomainError("sl_order2: x must lie in (0, 1 - margin]");
    if (!(tol > 0.0)) throw DomainError("sl_order2: tol must be positive");
    const double x0 = 1e-5;
    if (x <= x0) return 0.0; // |Arg| = O(t^2) there; the integral is below any tol
    const detail::NormalizedTheta f(tau, settings);

    std::vector<Complex> pts;
    const int m = 32;
    for (int j = 0; j <= m; ++j)
        pts.emplace_back(x0 + (x - x0) * (static_cast<double>(j) / m), 0.0);
    const auto chain = unwrap_chain(f, pts);

    auto integrand = [&](double t) {
        const Complex v = f(Complex(t, 0.0));
        return snap_to_chain(chain, Complex(t, 0.0), std::arg(v));
    };
    return -2.0 * adaptive_gk(integrand, x0, x, tol);
}

/// Phase increment across a horizontal crossing of the real axis at height
/// +offset, centered at `crossing` with the given half-width.  Near an integer
/// lattice point the magnitude approaches pi as the offset shrinks.
inline double nodal_jump(const TauParameter& tau, double crossing, double offset,
                         double half_width = 0.1, const ThetaSettings& settings = {}) {
    if (!(offset > kZeroGuard))
        throw NearZeroError("nodal_jump: offset must exceed zero_guard");
    if (!(half_width > 0.0)) throw DomainError("nodal_jump: half_width must be positive");
    PathSpec path{{Complex(crossing - half_width, offset), Complex(crossing + half_width, offset)},
                  64};
    return unwrap_phase(tau, path, settings).total_increment();
}

/// Total unwrapped-argument increment around the circle |z - center| = radius.
inline double winding_increment(const TauParameter& tau, Complex center, double radius,
                                const ThetaSettings& settings = {}) {
    if (!(radius > 10.0 * kZeroGuard))
        throw NearZeroError("winding_increment: radius must exceed 10*zero_guard");
    // Radius must stay under half the distance to every lattice point other
    // than an enclosed one at the center.
    double d_other = std::numeric_limits<double>::infinity();
    for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
            const Complex p = static_cast<double>(a) + static_cast<double>(b) * tau.tau;
            const double d = std::abs(center - p);
            if (d < kZeroGuard) continue; // the enclosed zero itself
            d_other = std::min(d_other, d);
        }
    }
    if (!(radius < 0.5 * d_other))
        throw DomainError("winding_increment: radius reaches toward another lattice point");

    const int segments = 64;
    std::vector<Complex> pts;
    pts.reserve(segments + 1);
    for (int j = 0; j < segments; ++j) {
        const double ang = kTwoPi * j / segments;
        pts.push_back(center + radius * Complex(std::cos(ang), std::sin(ang)));
    }
    pts.push_back(pts.front()); // exact closure
    for (const Complex& p : pts)
        if (lattice_distance(p, tau) < kZeroGuard)
            throw NearZeroError("winding_increment: circle within zero_guard of a lattice point");

    const detail::NormalizedTheta f(tau, settings);
    const auto args = unwrap_args(f, pts);
    return args.back() - args.front();
}

/// Winding number of theta~_1 around the circle; exactly 1 around each simple
/// lattice zero, 0 when no zero is enclosed.
inline int winding_number(const TauParameter& tau, Complex center, double radius,
                          const ThetaSettings& settings = {}) {
    return static_cast<int>(
        std::lround(winding_increment(tau, center, radius, settings) / kTwoPi));
}

} // namespace clausen
