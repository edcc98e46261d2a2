#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pratio/kite.hpp"
#include "pratio/spectral.hpp"
#include "test_util.hpp"

using namespace pratio;
using doctest::Approx;

TEST_CASE("paw") {
    const double root = test_util::cubic_root(1, -1, -3, 1, 2.0, 3.0);
    CHECK(std::abs(kite_lambda1({2, 3}) - root) <= 1e-12);
    CHECK(std::abs(kite_lambda1({2, 3}) - 2.17009) <= 1e-5);
    CHECK(std::abs(kite_log_gamma({2, 3}) - std::log(root)) <= 1e-12);
}

TEST_CASE("r = 2 reduces to a cubic") {
    for (int s = 3; s <= 40; ++s) {
        const double root = test_util::cubic_root(1, -(s - 2), -s, s - 2, s - 1 + 1e-12, s);
        CHECK(std::abs(kite_lambda1({2, s}) - root) <= 1e-11 * s);
    }
}

TEST_CASE("degenerate and invalid specs") {
    CHECK(kite_lambda1({1, 6}) == 5.0);
    CHECK(kite_log_gamma({1, 6}) == 0.0);
    CHECK_THROWS_AS(kite_lambda1({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(kite_log_gamma({3, 2}), std::domain_error);
    CHECK_THROWS_AS(kite_lambda1({0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(kite_lambda1({3, 4}, 0.0), std::invalid_argument);
}

TEST_CASE("secular function vanishes at the root and changes sign") {
    for (auto spec : {KiteSpec{2, 3}, KiteSpec{5, 7}, KiteSpec{30, 4}, KiteSpec{200, 60}}) {
        const double l = kite_lambda1(spec);
        CHECK(l > spec.s - 1);
        CHECK(l < spec.s);
        CHECK(kite_secular(spec, l - 1e-7) * kite_secular(spec, l + 1e-7) < 0);
    }
}

TEST_CASE("agrees with the dense eigensolver") {
    // the dense vector resolves x_min only to ~1e-16 absolute, so keep gamma small
    for (int r = 2; r <= 6; r += 2)
        for (int s = 3; s <= 15; s += 4) {
            const auto ref = test_util::dense_perron(kite({r, s}));
            const KiteSolution sol = solve_kite({r, s});
            CHECK(sol.lambda1 == Approx(ref.lambda1).epsilon(1e-11));
            CHECK(sol.log_gamma == Approx(ref.log_gamma).epsilon(1e-9));
            REQUIRE(sol.path_profile.size() == static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) CHECK(std::abs(sol.path_profile[i] - ref.x[i]) <= 1e-9);
            REQUIRE(sol.sigma);
            CHECK(*sol.sigma == Approx(sigma_of(ref.lambda1)).epsilon(1e-10));
        }
}

TEST_CASE("monotone in both parameters") {
    for (int s = 3; s <= 12; ++s)
        for (int r = 2; r <= 20; ++r) {
            // supergraph: lambda cannot drop
            CHECK(kite_lambda1({r + 1, s}) >= kite_lambda1({r, s}));
            CHECK(kite_log_gamma({r + 1, s}) > kite_log_gamma({r, s}));
            CHECK(kite_lambda1({r, s + 1}) > kite_lambda1({r, s}));
        }
}

TEST_CASE("best kite matches exhaustive dense sweep") {
    CHECK(best_kite(4).spec == KiteSpec{2, 3});
    for (int n = 5; n <= 14; ++n) {
        int best_r = 0;
        double best = -1;
        for (int r = 2; r <= n - 2; ++r) {
            const double lg = test_util::dense_perron(kite({r, n - r + 1})).log_gamma;
            if (lg > best + 1e-12) {
                best = lg;
                best_r = r;
            }
        }
        const KiteSolution sol = best_kite(n);
        CHECK(sol.spec.r == best_r);
        CHECK(sol.spec.order() == n);
        CHECK(sol.log_gamma == Approx(best).epsilon(1e-9));
    }
    CHECK_THROWS_AS(best_kite(3), std::invalid_argument);
}

TEST_CASE("best kite matches a sweep of the spectral solver") {
    for (int n : {20, 35, 60}) {
        int best_r = 0;
        double best = -1;
        for (int r = 2; r <= n - 2; ++r) {
            const double lg = perron(kite({r, n - r + 1}), 1e-13).log_gamma;
            if (lg > best) {
                best = lg;
                best_r = r;
            }
        }
        const KiteSolution sol = best_kite(n);
        CHECK(sol.spec.r == best_r);
        CHECK(sol.log_gamma == Approx(best).epsilon(1e-9));
    }
}

TEST_CASE("threaded profile equals serial") {
    CHECK(kite_log_gamma_profile(300, 1) == kite_log_gamma_profile(300, 4));
    CHECK(best_kite(500, 3).spec == best_kite(500, 1).spec);
}

TEST_CASE("large kite stays finite in log space") {
    const KiteSolution sol = solve_kite({4334, 667});
    CHECK(std::isfinite(sol.log_gamma));
    CHECK(sol.log_gamma > 20000);
    CHECK_FALSE(sol.gamma().has_value());
    CHECK(sol.path_profile.empty());
}
