#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "clausen/generating.hpp"

using namespace clausen;

TEST_CASE("generating sum reduces to its terms") {
    const Tower tower = build_tower(Seed::circular(), 4, 0.0, 0.95, 32);

    // lambda = 0 keeps only the seed level
    const GeneratingSlice zero(tower, 4, Complex(0.0));
    CHECK(std::abs(eval_generating(zero, 0.3) - tower.eval(1, 0.3)) == 0.0);

    // N = 1 is the seed level for every lambda
    const GeneratingSlice one(tower, 1, Complex(2.7, -0.4));
    CHECK(std::abs(eval_generating(one, 0.3) - tower.eval(1, 0.3)) == 0.0);

    // explicit finite sum, term by term
    const Complex lam(0.5, 0.0);
    const GeneratingSlice slice(tower, 3, lam);
    const Complex manual = tower.eval(1, 0.3) + lam * tower.eval(2, 0.3) +
                           lam * lam * tower.eval(3, 0.3);
    CHECK(std::abs(eval_generating(slice, 0.3) - manual) <= 1e-15);

    REQUIRE_THROWS_AS(GeneratingSlice(tower, 5, lam), DomainError);
    REQUIRE_THROWS_AS(GeneratingSlice(tower, 0, lam), DomainError);
}

TEST_CASE("corrected truncation identity holds to FD accuracy") {
    const std::vector<Seed> seeds = {Seed::polylog(), Seed::circular(),
                                     Seed::elliptic(TauParameter(Complex(0.3, 1.5)))};
    for (const Seed& seed : seeds) {
        const Tower tower = build_tower(seed, 5, 0.0, 0.95, 32);
        for (const Complex lam : {Complex(0.0), Complex(1.0), Complex(-1.0), Complex(0.5),
                                  Complex(0.3, 0.4)}) {
            for (int trunc : {2, 5}) {
                const GeneratingSlice slice(tower, trunc, lam);
                for (double w : {0.25, 0.5, 0.75})
                    CHECK(std::abs(generating_residual(slice, w)) <= 1e-6);
            }
        }
    }
}

TEST_CASE("lambda = 0 residual isolates the FD error of the seed derivative") {
    const Tower tower = build_tower(Seed::circular(), 3, 0.0, 0.95, 32);
    const GeneratingSlice slice(tower, 3, Complex(0.0));
    const double w = 0.4;
    const Complex fd = (tower.eval(1, w + 1e-4) - tower.eval(1, w - 1e-4)) / 2e-4;
    const Complex expected = fd - tower.seed.log_derivative(Complex(w, 0.0));
    CHECK(std::abs(generating_residual(slice, w) - expected) <= 1e-14);
    CHECK(std::abs(generating_residual(slice, w)) <= 1e-6);
}

TEST_CASE("uncorrected form leaves the seed-derivative term exposed") {
    const Tower tower = build_tower(Seed::circular(), 4, 0.0, 0.95, 32);
    const GeneratingSlice slice(tower, 4, Complex(0.5));
    const double w = 0.4;
    const Complex residual = generating_residual_paper_form(slice, w);
    CHECK(std::abs(residual) >= 0.1);
    // and it equals F_1' - lambda^N F_N up to the FD error
    const Complex predicted = tower.seed.log_derivative(Complex(w, 0.0)) -
                              std::pow(0.5, 4) * tower.eval(4, w);
    CHECK(std::abs(residual - predicted) <= 1e-6);
}

TEST_CASE("FD step and domain are validated") {
    const Tower tower = build_tower(Seed::circular(), 3, 0.0, 0.9, 32);
    const GeneratingSlice slice(tower, 3, Complex(0.5));
    REQUIRE_THROWS_AS(generating_residual(slice, 0.9, 1e-4), DomainError);
    REQUIRE_THROWS_AS(generating_residual(slice, 5e-5, 1e-4), DomainError);
    REQUIRE_THROWS_AS(generating_residual(slice, 0.5, 0.0), DomainError);
}

TEST_CASE("CL/SL projections of the generating series") {
    const Tower tower = build_tower(Seed::polylog(), 4, 0.0, 0.95, 32);

    // lambda = 0 projects the seed level
    const GeneratingSlice zero(tower, 4, Complex(0.0));
    const GeneratingClSl at_zero = generating_clsl(zero, 0.5);
    CHECK(at_zero.A_series == Catch::Approx(2.0 * tower.eval(1, 0.5).real()).margin(1e-15));
    CHECK(at_zero.B_series == Catch::Approx(-2.0 * tower.eval(1, 0.5).imag()).margin(1e-15));

    // reconstruction identity F = A/2 - i B/2 at real lambda
    for (double lam : {0.0, 0.5, -1.0}) {
        const GeneratingSlice slice(tower, 4, Complex(lam));
        for (double w : {0.3, 0.6}) {
            const GeneratingClSl split = generating_clsl(slice, w);
            const Complex recon = 0.5 * split.A_series - Complex(0.0, 0.5) * split.B_series;
            CHECK(std::abs(eval_generating(slice, w) - recon) <= 1e-12);
        }
    }

    const GeneratingSlice complex_lam(tower, 4, Complex(0.3, 0.4));
    REQUIRE_THROWS_AS(generating_clsl(complex_lam, 0.5), DomainError);

    // purely imaginary tau: the order-1 contribution to B vanishes
    const Tower real_tower = build_tower(Seed::elliptic(TauParameter(Complex(0.0, 2.0))), 2, 0.0,
                                         0.9, 32);
    const GeneratingSlice rslice(real_tower, 1, Complex(0.7));
    CHECK(std::abs(generating_clsl(rslice, 0.5).B_series) <= 1e-12);
}
