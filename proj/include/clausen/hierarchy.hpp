#pragma once

// The seed-parametrized recursion engine.  A tower stores the hierarchy
// F_{n+1}(z) = int_0^z F_n in singularity-split form
//
//   F_n(z) = L_n(z) + R_n(z),
//   L_n(z) = z^{n-1}/(n-1)! (log z - H_{n-1}),   H_0 = 0,
//
// where L_n is the exact iterated base-point integral of log z and the
// analytic remainders R_n are Chebyshev interpolants integrated exactly in
// coefficient space (R_1 = log(S(z)/z) on a continuous branch).

#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "clausen/branch.hpp"
#include "clausen/chebyshev.hpp"
#include "clausen/circular.hpp"
#include "clausen/errors.hpp"
#include "clausen/quadrature.hpp"
#include "clausen/theta.hpp"

namespace clausen {

/// Towers stop short of z = 1, the next zero of the circular/elliptic seeds.
inline constexpr double kDomainMargin = 0.01;

/// Target sup-error for the R_1 interpolant.
inline constexpr double kInterpTol = 1e-10;

/// Adaptive degree-doubling cap (2^13 nodes).
inline constexpr int kMaxInterpDegree = 8192;

namespace detail {

/// exp(w) - 1 without cancellation for small |w|.
inline Complex cexpm1(Complex w) {
    if (std::abs(w) < 0.5) {
        Complex term = w, sum = w;
        for (int k = 2; k <= 24; ++k) {
            term *= w / static_cast<double>(k);
            sum += term;
        }
        return sum;
    }
    return std::exp(w) - 1.0;
}

} // namespace detail

enum class SeedKind { polylog, circular, elliptic };

inline const char* seed_kind_name(SeedKind k) {
    switch (k) {
        case SeedKind::polylog: return "polylog";
        case SeedKind::circular: return "circular";
        default: return "elliptic";
    }
}

/// A choice of seed function S(z) with S(z) = S'(0) z + O(z^2), S'(0) != 0:
///   polylog   S(z) = 1 - e^{iz},          S'(0) = -i
///   circular  S(z) = 2 sin(pi z),         S'(0) = 2 pi
///   elliptic  S(z) = theta~_1(z|tau),     S'(0) = 1
struct Seed {
    SeedKind kind;
    std::optional<TauParameter> tau;
    ThetaSettings theta_settings{};
    Complex s_prime0;
    Complex elliptic_norm; // cached theta_1'(0|tau)

    static Seed polylog() {
        Seed s{SeedKind::polylog, std::nullopt, {}, Complex(0.0, -1.0), 1.0};
        return s;
    }
    static Seed circular() {
        Seed s{SeedKind::circular, std::nullopt, {}, Complex(kTwoPi, 0.0), 1.0};
        return s;
    }
    static Seed elliptic(const TauParameter& tau, const ThetaSettings& settings = {}) {
        Seed s{SeedKind::elliptic, tau, settings, Complex(1.0, 0.0),
               theta1_prime_zero_series(tau, settings)};
        return s;
    }

    Complex value(Complex z) const {
        switch (kind) {
            case SeedKind::polylog: return -detail::cexpm1(Complex(0.0, 1.0) * z);
            case SeedKind::circular: return 2.0 * std::sin(kPi * z);
            default: return theta1_series(z, *tau, theta_settings) / elliptic_norm;
        }
    }

    /// S(z)/z with the removable limit S'(0) at z = 0.
    Complex ratio(Complex z) const {
        if (z == Complex(0.0, 0.0)) return s_prime0;
        return value(z) / z;
    }

    /// Distance from z to the zero set of S.
    double zero_distance(Complex z) const {
        switch (kind) {
            case SeedKind::polylog: {
                const Complex w = z - kTwoPi * std::round(z.real() / kTwoPi);
                return std::abs(w);
            }
            case SeedKind::circular: {
                const Complex w = z - std::round(z.real());
                return std::abs(w);
            }
            default: return lattice_distance(z, *tau);
        }
    }

    /// S'(z)/S(z) in closed form.
    Complex log_derivative(Complex z) const {
        if (zero_distance(z) < kZeroGuard)
            throw NearZeroError("Seed::log_derivative: z within zero_guard of a seed zero");
        switch (kind) {
            case SeedKind::polylog: {
                const Complex e = std::exp(Complex(0.0, 1.0) * z);
                return Complex(0.0, -1.0) * e / (1.0 - e);
            }
            case SeedKind::circular: return kPi * std::cos(kPi * z) / std::sin(kPi * z);
            default: return theta1_log_derivative(z, *tau, theta_settings);
        }
    }
};

/// log S(z) on the branch continued from the principal value at z_ref.
inline Complex seed_log(const Seed& seed, Complex z, Complex z_ref = Complex(0.5, 0.0)) {
    if (seed.zero_distance(z) < kZeroGuard)
        throw NearZeroError("seed_log: z within zero_guard of a seed zero");
    if (seed.zero_distance(z_ref) < kZeroGuard)
        throw NearZeroError("seed_log: reference point within zero_guard of a seed zero");
    auto f = [&](Complex w) { return seed.value(w); };
    const std::vector<Complex> pts{z_ref, z};
    const std::vector<double> args = unwrap_args(f, pts);
    return {std::log(std::abs(seed.value(z))), args.back()};
}

/// Polyline integration path.
struct PathSpec {
    std::vector<Complex> waypoints;
    int samples_hint = 64;
};

struct Tower {
    Seed seed;
    int max_order = 0;
    double x_lo = 0.0, x_hi = 0.0;
    std::vector<double> harmonic;     // H_0 .. H_{N-1}
    std::vector<ChebSeries> analytic; // analytic[n-1] = R_n on [0, x_hi]

    /// L_n(z), the exact iterated base-point integral of log z.
    Complex log_singular(int n, double z) const {
        if (n == 1) return {std::log(z), 0.0};
        if (z == 0.0) return 0.0;
        double fact = 1.0;
        double zp = 1.0;
        for (int k = 1; k < n; ++k) {
            fact *= k;
            zp *= z;
        }
        return zp / fact * Complex(std::log(z) - harmonic[static_cast<std::size_t>(n - 1)], 0.0);
    }

    Complex analytic_part(int n, double z) const {
        return analytic[static_cast<std::size_t>(n - 1)].eval(z);
    }

    Complex eval(int n, double z) const {
        if (n < 1 || n > max_order) {
            std::ostringstream os;
            os << "Tower::eval: order " << n << " outside 1.." << max_order;
            throw DomainError(os.str());
        }
        if (!(z >= 0.0 && z <= x_hi))
            throw DomainError("Tower::eval: z outside [0, x_hi]");
        if (n == 1 && z == 0.0)
            throw DomainError("Tower::eval: F_1 is singular at z = 0");
        return log_singular(n, z) + analytic_part(n, z);
    }
};

/// Builds the tower on [x_lo, x_hi] (representation always anchored at 0):
/// the R_1 interpolant is refined by degree doubling until its probed
/// sup-error is below 1e-10, then every higher order is its exact
/// coefficient-space integral.
inline Tower build_tower(const Seed& seed, int order_count, double x_lo, double x_hi,
                         int resolution = 32) {
    if (order_count < 2) throw DomainError("build_tower: need N >= 2");
    if (resolution < 16) throw DomainError("build_tower: need resolution >= 16");
    if (!(x_lo >= 0.0 && x_lo < x_hi && x_hi <= 1.0 - kDomainMargin))
        throw DomainError("build_tower: domain must satisfy 0 <= x_lo < x_hi <= 1 - margin");

    auto ratio_fn = [&](Complex w) { return seed.ratio(w); };

    Tower tower;
    tower.seed = seed;
    tower.max_order = order_count;
    tower.x_lo = x_lo;
    tower.x_hi = x_hi;

    bool fitted = false;
    for (int degree = resolution; degree <= kMaxInterpDegree; degree *= 2) {
        const std::vector<double> nodes = cheb_nodes(0.0, x_hi, degree);
        const std::vector<double> probes = cheb_probe_points(0.0, x_hi, degree + 1);

        // One branch chain over the merged ascending points keeps the
        // continuation consistent between nodes and probes.
        std::vector<Complex> merged;
        merged.reserve(nodes.size() + probes.size());
        std::vector<int> tags; // 0 = node, 1 = probe
        std::size_t ni = 0;
        // probes from cheb_probe_points are descending in z; walk them backward
        std::vector<double> probes_asc(probes.rbegin(), probes.rend());
        std::size_t qi = 0;
        while (ni < nodes.size() || qi < probes_asc.size()) {
            const bool take_node =
                qi >= probes_asc.size() || (ni < nodes.size() && nodes[ni] <= probes_asc[qi]);
            if (take_node) {
                merged.emplace_back(nodes[ni++], 0.0);
                tags.push_back(0);
            } else {
                merged.emplace_back(probes_asc[qi++], 0.0);
                tags.push_back(1);
            }
        }

        const std::vector<double> args = unwrap_args(ratio_fn, merged);
        std::vector<Complex> node_values;
        node_values.reserve(nodes.size());
        std::vector<Complex> probe_values;
        probe_values.reserve(probes_asc.size());
        std::vector<double> probe_pos;
        for (std::size_t j = 0; j < merged.size(); ++j) {
            const Complex r = ratio_fn(merged[j]);
            const Complex val(std::log(std::abs(r)), args[j]);
            if (tags[j] == 0) {
                node_values.push_back(val);
            } else {
                probe_values.push_back(val);
                probe_pos.push_back(merged[j].real());
            }
        }

        ChebSeries fit = cheb_fit(0.0, x_hi, node_values);
        double err = 0.0;
        for (std::size_t j = 0; j < probe_values.size(); ++j)
            err = std::max(err, std::abs(fit.eval(probe_pos[j]) - probe_values[j]));
        if (err <= kInterpTol) {
            tower.analytic.push_back(std::move(fit));
            fitted = true;
            break;
        }
    }
    if (!fitted)
        throw ResolutionError("build_tower: interpolation cap reached before 1e-10 target");

    for (int n = 2; n <= order_count; ++n)
        tower.analytic.push_back(tower.analytic.back().antiderivative());

    tower.harmonic.resize(static_cast<std::size_t>(order_count));
    tower.harmonic[0] = 0.0;
    for (int m = 1; m < order_count; ++m)
        tower.harmonic[static_cast<std::size_t>(m)] =
            tower.harmonic[static_cast<std::size_t>(m - 1)] + 1.0 / m;

    return tower;
}

inline Complex eval_tower(const Tower& tower, int n, double z) { return tower.eval(n, z); }

/// CL projection A(n;z) = 2 Re F_n.
inline double cl_tower(const Tower& tower, int n, double z) {
    return 2.0 * tower.eval(n, z).real();
}

/// SL projection B(n;z) = -2 Im F_n.
inline double sl_tower(const Tower& tower, int n, double z) {
    return -2.0 * tower.eval(n, z).imag();
}

/// Verifies that the quadrature tower plus boundary constants reproduces the
/// direct series master:
///   i^{-n} Li_n(e^{i theta}) = i G_n(theta) + sum_{k=2}^n c_k theta^{n-k}/(n-k)!,
/// with c_k = i^{-k} zeta(k).  The factor i lifts the tower of log(1-e^{iz})
/// to the phase-normalized master, whose level 1 is i log(1-e^{i theta}).
/// Returns the maximum absolute discrepancy over orders 2..N and the grid.
inline double reconcile_polylog_tower(const Tower& tower, int top_order,
                                      std::span<const double> theta_grid) {
    if (tower.seed.kind != SeedKind::polylog)
        throw DomainError("reconcile_polylog_tower: tower must use the polylog seed");
    if (top_order < 2 || top_order > tower.max_order)
        throw DomainError("reconcile_polylog_tower: order outside 2..max_order");

    std::vector<Complex> constants(static_cast<std::size_t>(top_order) + 1, Complex(0.0));
    for (int k = 2; k <= top_order; ++k)
        constants[static_cast<std::size_t>(k)] = i_pow_minus(k) * zeta_value(k);

    double max_err = 0.0;
    for (int n = 2; n <= top_order; ++n) {
        for (double theta : theta_grid) {
            const Complex direct = circular_master(n, theta, 1e-12);
            Complex model = Complex(0.0, 1.0) * tower.eval(n, theta);
            double fact = 1.0;
            double tp = 1.0; // theta^{n-k}/(n-k)! built from k = n downward
            for (int k = n; k >= 2; --k) {
                model += constants[static_cast<std::size_t>(k)] * tp / fact;
                fact *= (n - k + 1);
                tp *= theta;
            }
            max_err = std::max(max_err, std::abs(direct - model));
        }
    }
    return max_err;
}

namespace detail {

/// Branch-continuous F_1 = log S(w) sampler along one straight segment,
/// split as log|w| + i arg(w) + log(ratio(w)) so the base-point log
/// singularity stays explicit.
struct SegmentSampler {
    const Seed* seed;
    Complex a, b;
    double arg_dir;                                  // continued arg(w) at parameter t
    std::vector<std::pair<Complex, double>> chain_w; // continued arg of w itself
    std::vector<std::pair<Complex, double>> chain_r; // continued arg of ratio
    bool from_origin;

    Complex position(double t) const { return a + (b - a) * t; }

    Complex f1(Complex w) const {
        const Complex r = seed->ratio(w);
        const double ar = snap_to_chain(chain_r, w, std::arg(r));
        const double az = from_origin ? arg_dir : snap_to_chain(chain_w, w, std::arg(w));
        return {std::log(std::abs(r)) + std::log(std::abs(w)), ar + az};
    }
};

} // namespace detail

/// n-fold iterated base-point integral of F_1 = log S along the polyline,
/// via the repeated-integration kernel
///   (1/(n-1)!) int (z_end - w)^{n-1} F_1(w) dw .
/// This is the slow reference route: an oracle for build_tower on the real
/// axis and the only route for complex endpoints.
inline Complex path_integrate(const Seed& seed, const PathSpec& path, int fold_count,
                              double tol = 1e-10) {
    if (fold_count < 1) throw DomainError("path_integrate: fold count must be >= 1");
    if (path.waypoints.size() < 2)
        throw DomainError("path_integrate: need at least two waypoints");
    for (std::size_t j = 1; j < path.waypoints.size(); ++j)
        if (path.waypoints[j] == path.waypoints[j - 1])
            throw DomainError("path_integrate: consecutive waypoints must be distinct");

    const Complex z_end = path.waypoints.back();
    const int coarse = std::max(8, path.samples_hint / 4);

    // Running continued branch across segment boundaries.
    double run_r = 0.0, run_z = 0.0;
    bool have_run = false;

    Complex total = 0.0;
    const double seg_tol = tol / static_cast<double>(path.waypoints.size());

    double factorial = 1.0;
    for (int k = 2; k < fold_count; ++k) factorial *= k;

    for (std::size_t s = 0; s + 1 < path.waypoints.size(); ++s) {
        detail::SegmentSampler sampler;
        sampler.seed = &seed;
        sampler.a = path.waypoints[s];
        sampler.b = path.waypoints[s + 1];
        sampler.from_origin = (sampler.a == Complex(0.0, 0.0));
        if (sampler.from_origin && s != 0)
            throw NearZeroError("path_integrate: interior waypoint at the base point");

        // Coarse positions for the reference chains (skip the origin itself).
        std::vector<Complex> pts;
        for (int j = sampler.from_origin ? 1 : 0; j <= coarse; ++j)
            pts.push_back(sampler.position(static_cast<double>(j) / coarse));
        for (const Complex& p : pts)
            if (p != Complex(0.0, 0.0) && seed.zero_distance(p) < kZeroGuard)
                throw NearZeroError("path_integrate: path within zero_guard of a seed zero");

        auto ratio_fn = [&](Complex w) { return seed.ratio(w); };
        sampler.chain_r = unwrap_chain(ratio_fn, pts);
        if (!sampler.from_origin) {
            auto ident = [](Complex w) { return w; };
            sampler.chain_w = unwrap_chain(ident, pts);
        } else {
            sampler.arg_dir = std::arg(sampler.b - sampler.a);
        }

        // Align with the running branch carried from the previous segment.
        if (have_run) {
            const double off_r =
                kTwoPi * std::round((run_r - sampler.chain_r.front().second) / kTwoPi);
            for (auto& e : sampler.chain_r) e.second += off_r;
            if (!sampler.from_origin) {
                const double off_z =
                    kTwoPi * std::round((run_z - sampler.chain_w.front().second) / kTwoPi);
                for (auto& e : sampler.chain_w) e.second += off_z;
            }
        }

        auto integrand = [&](Complex w) -> Complex {
            Complex kernel = 1.0;
            if (fold_count > 1) {
                Complex p = 1.0;
                for (int k = 1; k < fold_count; ++k) p *= (z_end - w);
                kernel = p / factorial;
            }
            return kernel * sampler.f1(w);
        };
        total += integrate_segment(integrand, sampler.a, sampler.b, seg_tol);

        run_r = sampler.chain_r.back().second;
        run_z = sampler.from_origin ? sampler.arg_dir : sampler.chain_w.back().second;
        have_run = true;
    }
    return total;
}

/// JSON form of a tower: orders, domain, harmonic numbers, and the analytic
/// parts' Chebyshev coefficients as real/imag arrays.
inline nlohmann::json tower_to_json(const Tower& tower) {
    nlohmann::json j;
    j["seed"] = seed_kind_name(tower.seed.kind);
    if (tower.seed.kind == SeedKind::elliptic) {
        j["tau"] = {{"re", tower.seed.tau->tau.real()}, {"im", tower.seed.tau->tau.imag()}};
    }
    j["max_order"] = tower.max_order;
    j["domain"] = {tower.x_lo, tower.x_hi};
    j["harmonic"] = tower.harmonic;
    nlohmann::json parts = nlohmann::json::array();
    for (int n = 1; n <= tower.max_order; ++n) {
        const ChebSeries& s = tower.analytic[static_cast<std::size_t>(n - 1)];
        nlohmann::json p;
        p["order"] = n;
        p["interval"] = {s.lo, s.hi};
        std::vector<double> re, im;
        re.reserve(s.coef.size());
        im.reserve(s.coef.size());
        for (const Complex& c : s.coef) {
            re.push_back(c.real());
            im.push_back(c.imag());
        }
        p["coef_re"] = re;
        p["coef_im"] = im;
        parts.push_back(std::move(p));
    }
    j["analytic_parts"] = std::move(parts);
    return j;
}

} // namespace clausen
