#pragma once

// Continuous-branch argument tracking along paths: adjacent principal-argument
// increments are wrapped into (-pi, pi] and the step is bisected until every
// increment is below pi/2.

#include <cmath>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "clausen/errors.hpp"
#include "clausen/theta.hpp"

namespace clausen {

inline constexpr int kBranchMaxDepth = 40;

/// Largest per-step phase increment accepted without refinement.
inline constexpr double kBranchMaxStep = 0.5 * kPi;

namespace detail {

/// x wrapped into (-pi, pi].
inline double wrap_angle(double x) {
    double r = std::remainder(x, kTwoPi);
    if (r <= -kPi) r += kTwoPi;
    return r;
}

inline double principal_arg_nonzero(Complex v) {
    if (v == Complex(0.0, 0.0))
        throw NearZeroError("branch continuation hit an exact zero of the tracked function");
    return std::arg(v);
}

/// Refined samples strictly after p1 up to and including p2; `out` receives
/// (position, unwrapped argument) pairs given the unwrapped value a1 at p1.
template <class F>
void unwrap_refine(F&& f, Complex p1, double a1, Complex p2, double arg2_principal, int depth,
                   std::vector<std::pair<Complex, double>>& out) {
    const double delta = wrap_angle(arg2_principal - wrap_angle(a1));
    if (std::abs(delta) < kBranchMaxStep) {
        out.emplace_back(p2, a1 + delta);
        return;
    }
    if (depth >= kBranchMaxDepth)
        throw BranchError("branch continuation: refinement depth exhausted "
                          "(path too close to a zero?)");
    const Complex pm = 0.5 * (p1 + p2);
    const double am_principal = principal_arg_nonzero(f(pm));
    unwrap_refine(f, p1, a1, pm, am_principal, depth + 1, out);
    unwrap_refine(f, pm, out.back().second, p2, arg2_principal, depth + 1, out);
}

} // namespace detail

/// Unwrapped arguments of f at the given points, continued from the principal
/// argument at points.front(); refinement samples are evaluated between points
/// as needed but not returned.
template <class F>
std::vector<double> unwrap_args(F&& f, const std::vector<Complex>& points) {
    if (points.empty()) return {};
    std::vector<double> out;
    out.reserve(points.size());
    double prev = detail::principal_arg_nonzero(f(points.front()));
    out.push_back(prev);
    std::vector<std::pair<Complex, double>> scratch;
    for (std::size_t j = 1; j < points.size(); ++j) {
        scratch.clear();
        const double ap = detail::principal_arg_nonzero(f(points[j]));
        detail::unwrap_refine(f, points[j - 1], prev, points[j], ap, 0, scratch);
        prev = scratch.back().second;
        out.push_back(prev);
    }
    return out;
}

/// Lifts a principal argument at `pos` onto the branch recorded by a chain of
/// (position, unwrapped) samples, using the nearest chain entry as reference.
inline double snap_to_chain(const std::vector<std::pair<Complex, double>>& chain, Complex pos,
                            double principal) {
    double best = std::numeric_limits<double>::infinity();
    double ref = chain.front().second;
    for (const auto& [p, v] : chain) {
        const double d = std::abs(p - pos);
        if (d < best) {
            best = d;
            ref = v;
        }
    }
    return principal + kTwoPi * std::round((ref - principal) / kTwoPi);
}

/// Full refined chain through the given points (positions and unwrapped
/// arguments, every consecutive increment below pi/2).  `refined` reports
/// whether any extra samples were inserted.
template <class F>
std::vector<std::pair<Complex, double>> unwrap_chain(F&& f, const std::vector<Complex>& points,
                                                     bool* refined = nullptr) {
    std::vector<std::pair<Complex, double>> chain;
    if (points.empty()) return chain;
    chain.emplace_back(points.front(), detail::principal_arg_nonzero(f(points.front())));
    std::vector<std::pair<Complex, double>> scratch;
    for (std::size_t j = 1; j < points.size(); ++j) {
        scratch.clear();
        const double ap = detail::principal_arg_nonzero(f(points[j]));
        detail::unwrap_refine(f, chain.back().first, chain.back().second, points[j], ap, 0,
                              scratch);
        if (refined && scratch.size() > 1) *refined = true;
        chain.insert(chain.end(), scratch.begin(), scratch.end());
    }
    return chain;
}

} // namespace clausen
