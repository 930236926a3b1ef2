#pragma once

// Chebyshev interpolants with complex coefficients on a real interval,
// evaluated by Clenshaw recurrence and integrated exactly in coefficient
// space.  Used for the analytic parts R_n of the towers.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "clausen/errors.hpp"
#include "clausen/theta.hpp"

namespace clausen {

struct ChebSeries {
    double lo = -1.0;
    double hi = 1.0;
    std::vector<Complex> coef; // f(z) = sum_k coef[k] T_k(t), t = (2z-lo-hi)/(hi-lo)

    int degree() const { return static_cast<int>(coef.size()) - 1; }

    Complex eval(double z) const {
        const double t = (2.0 * z - lo - hi) / (hi - lo);
        Complex b1 = 0.0, b2 = 0.0;
        for (int k = degree(); k >= 1; --k) {
            const Complex b0 = 2.0 * t * b1 - b2 + coef[static_cast<std::size_t>(k)];
            b2 = b1;
            b1 = b0;
        }
        return t * b1 - b2 + coef[0];
    }

    /// Antiderivative anchored at the left endpoint: P(lo) = 0, P' = this.
    ChebSeries antiderivative() const {
        const int n = degree();
        ChebSeries out;
        out.lo = lo;
        out.hi = hi;
        out.coef.assign(static_cast<std::size_t>(n) + 2, Complex(0.0));
        const double scale = 0.5 * (hi - lo);
        auto c = [&](int k) -> Complex {
            if (k < 0 || k > n) return 0.0;
            Complex v = coef[static_cast<std::size_t>(k)];
            if (k == 0) v *= 2.0; // integration formula wants the halved-c0 convention
            return v;
        };
        for (int k = 1; k <= n + 1; ++k)
            out.coef[static_cast<std::size_t>(k)] = scale * (c(k - 1) - c(k + 1)) / (2.0 * k);
        Complex at_lo = 0.0;
        for (int k = 1; k <= n + 1; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0; // T_k(-1) = (-1)^k
            at_lo += sign * out.coef[static_cast<std::size_t>(k)];
        }
        out.coef[0] = -at_lo;
        return out;
    }
};

/// Chebyshev points of the second kind mapped to [lo, hi], ascending in z.
/// n_nodes = degree + 1... the returned vector has `degree + 1` entries.
inline std::vector<double> cheb_nodes(double lo, double hi, int degree) {
    std::vector<double> z(static_cast<std::size_t>(degree) + 1);
    for (int j = 0; j <= degree; ++j) {
        // t = cos(pi j / N) descending; reverse so z ascends from lo.
        const double t = std::cos(kPi * (degree - j) / degree);
        z[static_cast<std::size_t>(j)] = lo + (hi - lo) * 0.5 * (t + 1.0);
    }
    z.front() = lo;
    z.back() = hi;
    return z;
}

/// Interpolant through values at cheb_nodes(lo, hi, degree), same ordering.
inline ChebSeries cheb_fit(double lo, double hi, const std::vector<Complex>& values_ascending) {
    const int N = static_cast<int>(values_ascending.size()) - 1;
    if (N < 1) throw DomainError("cheb_fit: need at least two nodes");
    ChebSeries s;
    s.lo = lo;
    s.hi = hi;
    s.coef.assign(static_cast<std::size_t>(N) + 1, Complex(0.0));
    // values_ascending[j] corresponds to t_j = cos(pi (N-j)/N); re-index so
    // v[i] = f(cos(pi i/N)).
    for (int k = 0; k <= N; ++k) {
        Complex acc = 0.0;
        for (int i = 0; i <= N; ++i) {
            Complex v = values_ascending[static_cast<std::size_t>(N - i)];
            if (i == 0 || i == N) v *= 0.5;
            acc += v * std::cos(kPi * i * k / N);
        }
        acc *= 2.0 / N;
        if (k == 0 || k == N) acc *= 0.5;
        s.coef[static_cast<std::size_t>(k)] = acc;
    }
    return s;
}

/// Probe points (first-kind nodes) that never coincide with the fit nodes.
inline std::vector<double> cheb_probe_points(double lo, double hi, int count) {
    std::vector<double> z(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        const double t = std::cos(kPi * (j + 0.5) / count);
        z[static_cast<std::size_t>(j)] = lo + (hi - lo) * 0.5 * (t + 1.0);
    }
    return z;
}

} // namespace clausen
