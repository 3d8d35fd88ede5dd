#include <doctest.h>

#include <cmath>
#include <climits>

#include "lrc/bounds_finite.hpp"
#include "lrc/oracle.hpp"

using namespace lrc;

namespace {

// Integer evaluation of the bound with the Singleton ingredient, for exact
// grid checks.
int singleton_bound_int(int n, int d, int r) {
    int best = INT_MAX;
    const int t_max = (n + r) / (r + 1);
    for (int t = 0; t <= t_max; ++t) {
        int residual = n - t * (r + 1);
        int tail = residual >= d ? residual - d + 1 : 0;
        best = std::min(best, t * r + tail);
    }
    return best;
}

} // namespace

TEST_CASE("kopt singleton and plotkin examples") {
    KOptProvider singleton = KOptProvider::singleton(2);
    CHECK(kopt_upper(singleton, 7, 4, 2) == doctest::Approx(4.0));
    CHECK(kopt_upper(singleton, 3, 4, 2) == doctest::Approx(0.0)); // n < d

    // At n = 2^m - 1 - 2(r+1), d = 2^(m-1) the binary Plotkin value is
    // m - log2(2r + 3).
    KOptProvider plotkin = KOptProvider::plotkin(2);
    for (int m = 3; m <= 6; ++m)
        for (int r = 1; r <= 3; ++r) {
            int n = (1 << m) - 1 - 2 * (r + 1);
            if (n < (1 << (m - 1))) continue; // the n < d rule returns 0 below this
            double expect = m - std::log2(2.0 * r + 3.0);
            CHECK(kopt_upper(plotkin, n, 1 << (m - 1), 2) == doctest::Approx(expect).epsilon(1e-12));
        }
}

TEST_CASE("plotkin provider is monotone in n at integer arguments") {
    for (int q : {2, 3, 4}) {
        KOptProvider plotkin = KOptProvider::plotkin(q);
        for (int d = 1; d <= 10; ++d) {
            double prev = 0.0;
            for (int n = 0; n <= 40; ++n) {
                double v = kopt_upper(plotkin, n, d, q);
                CHECK(v >= prev - 1e-12);
                prev = v;
            }
        }
    }
}

TEST_CASE("exact table provider") {
    KOptProvider table = KOptProvider::exact_table(2, {{{7, 4}, 3.0}, {{4, 4}, 1.0}, {{1, 4}, 0.0}});
    CHECK(kopt_upper(table, 7, 4, 2) == doctest::Approx(3.0));
    CHECK(kopt_upper(table, 1, 4, 2) == doctest::Approx(0.0)); // n < d rule fires first
    CHECK_THROWS_AS((void)kopt_upper(table, 6, 4, 2), std::out_of_range);
    CHECK_THROWS_AS((void)kopt_upper(table, 7, 4, 3), std::invalid_argument);
}

TEST_CASE("locality dimension bound examples") {
    KOptProvider table = KOptProvider::exact_table(2, {{{7, 4}, 3.0}, {{4, 4}, 1.0}, {{1, 4}, 0.0}});
    BoundResult r1 = locality_dimension_bound({7, 4, 2, 2}, table);
    CHECK(r1.k_bound == doctest::Approx(3.0));
    CHECK(r1.argmin_t == 0);

    BoundResult r2 = locality_dimension_bound({6, 1, 2, 2}, KOptProvider::singleton(2));
    CHECK(r2.k_bound == doctest::Approx(4.0));
    CHECK(r2.argmin_t == 2);

    // r >= n-1: no locality constraint binds, bound equals kopt at t = 0
    for (int n : {5, 8}) {
        BoundResult r3 = locality_dimension_bound({n, 2, 2, n - 1}, KOptProvider::singleton(2));
        CHECK(r3.k_bound == doctest::Approx(n - 1.0));
        CHECK(r3.argmin_t == 0);
    }

    CHECK_THROWS_AS((void)locality_dimension_bound({7, 0, 2, 2}, table), std::invalid_argument);
    CHECK_THROWS_AS((void)locality_dimension_bound({7, 4, 2, 7}, table), std::invalid_argument);
}

TEST_CASE("singleton locality distance bound examples") {
    CHECK(singleton_locality_distance_bound(7, 3, 2) == 4);
    CHECK(singleton_locality_distance_bound(14, 6, 3) == 8);
    for (int n = 4; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(singleton_locality_distance_bound(n, k, k) == n - k + 1);
}

TEST_CASE("plotkin locality dimension bound examples") {
    CHECK(plotkin_locality_dimension_bound(15, 8, 2, 2) == doctest::Approx(16.0 / 3.0));
    // asymptotic slope: value/n -> r/(r+1) (1 - delta/(1-1/q))
    const int n = 4'000'000;
    const double delta = 0.2;
    double v = plotkin_locality_dimension_bound(n, (int)(delta * n), 2, 2);
    CHECK(v / n == doctest::Approx((2.0 / 3.0) * (1.0 - delta / 0.5)).epsilon(1e-4));
    // large q approaches the Singleton-locality scaling r/(r+1)(n-d) up to
    // the log tail
    double vq = plotkin_locality_dimension_bound(60, 20, 1 << 14, 2);
    CHECK(std::abs(vq - (2.0 / 3.0) * (60.0 - 20.0)) < 2.0);
}

TEST_CASE("minimum feasible locality") {
    KOptProvider plotkin = KOptProvider::plotkin(2);
    for (int m = 3; m <= 5; ++m)
        CHECK(min_feasible_locality((1 << m) - 1, m, 1 << (m - 1), 2, plotkin) == 2);
    CHECK(min_feasible_locality(3, 1, 3, 2, KOptProvider::singleton(2)) == 1);

    // MDS parameters: the smallest unrefuted locality is k itself
    for (int n = 6; n <= 12; ++n)
        for (int d = 2; d < n; ++d) {
            int k = n - d + 1;
            if (k < 2) continue;
            CHECK(min_feasible_locality(n, k, d, 64, KOptProvider::singleton(64)) == k);
        }
}

TEST_CASE("min feasible locality caps at n-1 when everything is refuted") {
    // no (6,6,4) code exists; every locality is refuted and the cap signals it
    CHECK(min_feasible_locality(6, 6, 4, 2, KOptProvider::singleton(2)) == 5);
}

TEST_CASE("list variant examples") {
    auto f = [](int n, int s) { return (double)(n - s); };
    BoundResult r1 = list_locality_dimension_bound(10, 2, 2, 2, 4, f);
    CHECK(r1.k_bound == doctest::Approx(6.0));
    CHECK(r1.argmin_t == 2);

    // s = 0 with the whole-space provider: n - floor(n/(r+1)) at the largest
    // useful t (equal to n - ceil when r+1 divides n)
    BoundResult r2 = list_locality_dimension_bound(9, 0, 2, 2, 4, f);
    CHECK(r2.k_bound == doctest::Approx(9 - 3));

    BoundResult r3 = list_locality_dimension_bound(10, 2, 2, 2, 4, [](int, int) { return 0.0; });
    CHECK(r3.k_bound == doctest::Approx(0.0));
    CHECK(r3.argmin_t == 0);
}

TEST_CASE("dominance over the singleton-locality bound on a grid") {
    // Every tuple violating d <= n-k-ceil(k/r)+2 is also refuted by the
    // bound with the Singleton ingredient; exact integers, paper chain at
    // t = floor((k-1)/r).
    for (int n = 1; n <= 14; ++n)
        for (int k = 1; k <= n; ++k)
            for (int d = 1; d <= n; ++d)
                for (int r = 1; r <= k; ++r) {
                    int ceil_kr = (k + r - 1) / r;
                    if (d <= n - k - ceil_kr + 2) continue;
                    int bound = singleton_bound_int(n, d, r);
                    CHECK(bound < k);
                    // the real-valued path agrees
                    if (r <= n - 1) {
                        double v = locality_dimension_bound({n, d, 2, r}, KOptProvider::singleton(2))
                                       .k_bound;
                        CHECK((int)std::llround(v) == bound);
                    }
                }
}

TEST_CASE("bound is monotone in locality for slope-bounded providers") {
    // Tightening r can only lower the bound when the provider gains at most
    // one dimension per extra coordinate.  True kopt values and the
    // Singleton form have that property; the piecewise Plotkin form jumps by
    // two crossing its regime boundary and genuinely violates this.
    KOptProvider singleton = KOptProvider::singleton(2);
    for (int n = 4; n <= 16; ++n)
        for (int d = 1; d <= n; ++d) {
            double prev_s = 0.0;
            for (int r = 1; r <= n - 1; ++r) {
                double vs = locality_dimension_bound({n, d, 2, r}, singleton).k_bound;
                if (r > 1) CHECK(vs >= prev_s - 1e-9);
                prev_s = vs;
            }
        }
    // the documented violation for the Plotkin form
    KOptProvider plotkin = KOptProvider::plotkin(2);
    double at13 = locality_dimension_bound({16, 1, 2, 13}, plotkin).k_bound;
    double at14 = locality_dimension_bound({16, 1, 2, 14}, plotkin).k_bound;
    CHECK(at14 < at13);
}
