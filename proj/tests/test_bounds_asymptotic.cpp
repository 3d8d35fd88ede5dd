#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lrc/bounds_asymptotic.hpp"
#include "lrc/bounds_finite.hpp"

using namespace lrc;

TEST_CASE("q-ary entropy examples") {
    CHECK(entropy_q(0.5, 2) == doctest::Approx(1.0));
    CHECK(entropy_q(0.75, 4) == doctest::Approx(1.0)); // maximum at 1 - 1/q
    CHECK(entropy_q(0.11, 2) == doctest::Approx(0.499916).epsilon(1e-5));
    CHECK(entropy_q(0.0, 5) == doctest::Approx(0.0));
    CHECK(entropy_q(1.0, 2) == doctest::Approx(0.0));
    CHECK_THROWS_AS((void)entropy_q(-0.1, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)entropy_q(1.1, 2), std::invalid_argument);
}

TEST_CASE("inverse entropy examples") {
    CHECK(inv_entropy_q(1.0, 2) == doctest::Approx(0.5));
    CHECK(inv_entropy_q(0.0, 3) == doctest::Approx(0.0));
    double x = inv_entropy_q(2.0 / 3.0, 2);
    CHECK(std::abs(x - 0.1740) <= 0.0005);
    CHECK_THROWS_AS((void)inv_entropy_q(1.5, 2), std::invalid_argument);
}

TEST_CASE("entropy and inverse are mutual inverses") {
    for (int q : {2, 3, 4, 8}) {
        for (int i = 0; i <= 40; ++i) {
            double y = i / 40.0;
            double x = inv_entropy_q(y, q);
            CHECK(entropy_q(x, q) == doctest::Approx(y).epsilon(1e-9));
        }
        // H is flat at its maximum, so recovering x to 1e-9 is only
        // conditioned away from the right endpoint.
        for (int i = 0; i <= 39; ++i) {
            double x = (1.0 - 1.0 / q) * i / 41.0;
            CHECK(inv_entropy_q(entropy_q(x, q), q) == doctest::Approx(x).epsilon(1e-9));
        }
        CHECK(inv_entropy_q(1.0, q) == 1.0 - 1.0 / q);
    }
}

TEST_CASE("rate provider examples") {
    CHECK(ropt_eval(RoptProvider::mrrw2(), 0.0, 2) == doctest::Approx(1.0));
    CHECK(ropt_eval(RoptProvider::mrrw2(), 0.5, 2) == doctest::Approx(0.0));
    CHECK(ropt_eval(RoptProvider::mrrw2(), 0.7, 2) == doctest::Approx(0.0));
    CHECK(ropt_eval(RoptProvider::gv(), 0.11, 2) == doctest::Approx(0.500084).epsilon(1e-5));
    CHECK(ropt_eval(RoptProvider::plotkin(), 0.5, 2) == doctest::Approx(0.0));
    CHECK(ropt_eval(RoptProvider::gv(), 0.6, 2) == doctest::Approx(0.0));
    CHECK(ropt_eval(RoptProvider::singleton(), 0.0, 2) == doctest::Approx(1.0));
    CHECK_THROWS_AS((void)ropt_eval(RoptProvider::mrrw2(), 0.1, 4), std::invalid_argument);
}

TEST_CASE("converse endpoints") {
    for (int r : {1, 2, 3})
        for (auto provider : {RoptProvider::gv(), RoptProvider::mrrw2(), RoptProvider::singleton()})
            CHECK(converse_rate(0.0, r, 2, provider) ==
                  doctest::Approx((double)r / (r + 1)).epsilon(1e-9));

    // past the Plotkin radius the x = 0 term already gives zero for
    // providers whose formulas vanish there
    for (auto provider : {RoptProvider::gv(), RoptProvider::mrrw2(), RoptProvider::plotkin()}) {
        CHECK(converse_rate(0.5, 2, 2, provider) == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(converse_rate(0.7, 2, 2, provider) == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("converse with the singleton ingredient recovers the locality singleton line") {
    for (int r : {1, 2, 4})
        for (int i = 0; i <= 20; ++i) {
            double delta = i / 20.0;
            double expect = (double)r / (r + 1) * (1.0 - delta);
            CHECK(converse_rate(delta, r, 2, RoptProvider::singleton()) ==
                  doctest::Approx(expect).epsilon(1e-6));
        }
    CHECK(converse_rate(0.2, 2, 2, RoptProvider::singleton()) == doctest::Approx(0.5333333).epsilon(1e-5));
}

TEST_CASE("achievable rate endpoints and samples") {
    for (int q : {2, 3, 4})
        for (int r : {1, 2, 3}) {
            CHECK(achievable_rate(0.0, r, q, AchievableMode::optimize) ==
                  doctest::Approx((double)r / (r + 1)).epsilon(1e-6));
            CHECK(achievable_rate(0.0, r, q, AchievableMode::substitute) ==
                  doctest::Approx((double)r / (r + 1)).epsilon(1e-9));
            double limit = 1.0 - 1.0 / q;
            CHECK(achievable_rate(limit, r, q, AchievableMode::optimize) == doctest::Approx(0.0));
            CHECK(achievable_rate(limit, r, q, AchievableMode::substitute) == doctest::Approx(0.0));
        }
    CHECK(achievable_rate(0.11, 2, 2, AchievableMode::substitute) ==
          doctest::Approx(0.31332).epsilon(2e-5));
}

TEST_CASE("optimize mode dominates the substitution point") {
    for (int q : {2, 3})
        for (int r : {1, 2, 3})
            for (int i = 0; i <= 40; ++i) {
                double delta = (1.0 - 1.0 / q) * i / 40.0;
                double opt = achievable_rate(delta, r, q, AchievableMode::optimize);
                double sub = achievable_rate(delta, r, q, AchievableMode::substitute);
                CHECK(opt >= sub - 1e-9);
            }
}

TEST_CASE("gv parity rate") {
    CHECK(gv_parity_rate(0.0, 2, 2) == doctest::Approx(2.0 / 3.0));
    double zero_at = inv_entropy_q(2.0 / 3.0, 2);
    CHECK(gv_parity_rate(zero_at, 2, 2) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(gv_parity_rate(zero_at + 0.01, 2, 2) == doctest::Approx(0.0));
    CHECK(gv_parity_rate(zero_at - 0.01, 2, 2) > 0.0);
    // r -> infinity approaches the GV rate
    CHECK(gv_parity_rate(0.1, 1000000, 2) ==
          doctest::Approx(1.0 - entropy_q(0.1, 2)).epsilon(1e-5));
}

TEST_CASE("list-decoding converse") {
    for (int r : {1, 2, 3}) {
        CHECK(list_converse_rate(0.0, r, 2) == doctest::Approx((double)r / (r + 1)).epsilon(1e-9));
        CHECK(list_converse_rate(0.5, r, 2) == doctest::Approx(0.0).epsilon(1e-9));
    }
    CHECK(list_converse_rate(1.0 - 1.0 / 3.0, 2, 3) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(list_converse_rate(0.2, 1000000, 2) ==
          doctest::Approx(1.0 - entropy_q(0.2, 2)).epsilon(1e-5));
}

TEST_CASE("curve sampling") {
    std::vector<double> grid = make_delta_grid(0.0, 0.5, 0.1);
    CHECK(grid.size() == 6);

    std::vector<CurvePoint> points = sample_curves({"converse-mrrw", "eq1-singleton"}, 2, 2, grid);
    CHECK(points.size() == 12);
    CHECK(points[0].series == "converse-mrrw");
    CHECK(points[0].delta == doctest::Approx(0.0));
    CHECK(points[0].rate == doctest::Approx(2.0 / 3.0).epsilon(1e-6));

    // every series is zero from the Plotkin radius on (binary: delta >= 1/2)
    for (const std::string& name : curve_series_names()) {
        CHECK(curve_value(name, 0.5, 2, 2) == doctest::Approx(0.0));
        CHECK(curve_value(name, 0.75, 2, 2) == doctest::Approx(0.0));
    }

    CHECK_THROWS_AS((void)sample_curves({"no-such-series"}, 2, 2, grid), std::invalid_argument);
}

TEST_CASE("pointwise curve ordering") {
    for (int i = 0; i <= 25; ++i) {
        double delta = 0.02 * i;
        double ach = curve_value("achievable-eq5", delta, 2, 2);
        double conv = curve_value("converse-mrrw", delta, 2, 2);
        double eq1 = curve_value("eq1-singleton", delta, 2, 2);
        double mrrw = ropt_eval(RoptProvider::mrrw2(), delta, 2);
        CHECK(ach <= conv + 1e-9);
        CHECK(conv <= std::min(eq1, mrrw) + 1e-9);
    }
}

TEST_CASE("the achievable rate sits below the converses") {
    for (int q : {2, 3})
        for (int r : {1, 2})
            for (int i = 0; i <= 50; ++i) {
                double delta = (1.0 - 1.0 / q) * i / 50.0;
                double ach = achievable_rate(delta, r, q, AchievableMode::optimize);
                CHECK(ach <= converse_rate(delta, r, q, RoptProvider::singleton()) + 1e-7);
                CHECK(ach <= converse_rate(delta, r, q, RoptProvider::plotkin()) + 1e-7);
            }
}

TEST_CASE("finite bound per symbol converges to the asymptotic converse") {
    // two independent routes: the integer minimization at large n against
    // the continuous optimization
    lrc::KOptProvider singleton = lrc::KOptProvider::singleton(2);
    const int n = 30000;
    for (int r : {1, 2, 3})
        for (double delta : {0.1, 0.2, 0.35}) {
            double finite =
                lrc::locality_dimension_bound({n, (int)(delta * n), 2, r}, singleton).k_bound / n;
            double asymptotic = converse_rate(delta, r, 2, RoptProvider::singleton());
            CHECK(finite == doctest::Approx(asymptotic).epsilon(1e-3));
        }
}

TEST_CASE("optimizers are deterministic") {
    for (double delta : {0.05, 0.17, 0.33}) {
        double a1 = achievable_rate(delta, 2, 2, AchievableMode::optimize);
        double a2 = achievable_rate(delta, 2, 2, AchievableMode::optimize);
        CHECK(a1 == a2);
        double c1 = converse_rate(delta, 2, 2, RoptProvider::mrrw2());
        double c2 = converse_rate(delta, 2, 2, RoptProvider::mrrw2());
        CHECK(c1 == c2);
    }
}

TEST_CASE("converse never exceeds its ingredients") {
    for (auto provider : {RoptProvider::singleton(), RoptProvider::gv(), RoptProvider::mrrw2()})
        for (int r : {1, 2, 3})
            for (int i = 0; i <= 20; ++i) {
                double delta = i / 40.0;
                double v = converse_rate(delta, r, 2, provider);
                // optimizer polish stops at 1e-8 in x
                CHECK(v <= ropt_eval(provider, delta, 2) + 1e-7);
                CHECK(v <= (double)r / (r + 1) * (1.0 - delta) + 1e-7);
            }
}
