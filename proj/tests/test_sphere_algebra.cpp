#include <doctest.h>

#include <random>

#include "mac/sphere_algebra.hpp"
#include "test_helpers.hpp"

using namespace mac;

namespace {

PoincarePolynomial poly(std::initializer_list<std::pair<int, long long>> terms) {
    PoincarePolynomial p;
    for (auto [d, c] : terms) p.add(d, c);
    return p;
}

/// Euler characteristic of a connected sum computed from sphere-factor
/// characteristics, independent of the coefficient arithmetic.
long long euler_oracle(const ConnectedSumSpec& spec) {
    long long total = 0, n = 0;
    for (const auto& [product, mult] : spec.summands) {
        long long chi = 1;
        for (int d : product.dims) chi *= (d % 2 == 0 ? 2 : 0);
        total += mult * chi;
        n += mult;
    }
    const int d = spec.total_dimension();
    return total - (n - 1) * (d % 2 == 0 ? 2 : 0);
}

}  // namespace

TEST_SUITE("sphere_algebra") {

TEST_CASE("product Poincare polynomials") {
    CHECK(product_poincare(SphereProduct({3, 3, 6})) ==
          poly({{0, 1}, {3, 2}, {6, 2}, {9, 2}, {12, 1}}));
    CHECK(product_poincare(SphereProduct({5, 7})) == poly({{0, 1}, {5, 1}, {7, 1}, {12, 1}}));
    CHECK(product_poincare(SphereProduct({3})) == poly({{0, 1}, {3, 1}}));
    CHECK_THROWS_AS(SphereProduct({0}), std::invalid_argument);
    CHECK_THROWS_AS(SphereProduct({}), std::invalid_argument);
}

TEST_CASE("connected sums of sphere products") {
    ConnectedSumSpec headline;
    headline.summands.emplace_back(SphereProduct({3, 3, 6}), 1);
    headline.summands.emplace_back(SphereProduct({5, 7}), 8);
    headline.summands.emplace_back(SphereProduct({6, 6}), 8);
    CHECK(connected_sum_poincare(headline) ==
          poly({{0, 1}, {3, 2}, {5, 8}, {6, 18}, {7, 8}, {9, 2}, {12, 1}}));

    ConnectedSumSpec single;
    single.summands.emplace_back(SphereProduct({5, 7}), 1);
    CHECK(connected_sum_poincare(single) == product_poincare(SphereProduct({5, 7})));

    ConnectedSumSpec doubled;
    doubled.summands.emplace_back(SphereProduct({5, 5}), 2);
    CHECK(connected_sum_poincare(doubled) == poly({{0, 1}, {5, 4}, {10, 1}}));

    ConnectedSumSpec mismatch;
    mismatch.summands.emplace_back(SphereProduct({5, 7}), 1);
    mismatch.summands.emplace_back(SphereProduct({5, 5}), 1);
    CHECK_THROWS_AS(connected_sum_poincare(mismatch), std::invalid_argument);

    ConnectedSumSpec circle_factor;
    circle_factor.summands.emplace_back(SphereProduct({1, 3}), 1);
    CHECK_THROWS_AS(connected_sum_poincare(circle_factor), std::invalid_argument);

    CHECK_THROWS_AS(connected_sum_poincare(ConnectedSumSpec{}), std::invalid_argument);
}

TEST_CASE("the stacked closed form") {
    auto spec = stacked_connected_sum(3, 3);
    REQUIRE(spec.summands.size() == 3);
    CHECK(spec.summands[0].first.dims == std::vector<int>{3, 7});
    CHECK(spec.summands[0].second == 6);
    CHECK(spec.summands[1].first.dims == std::vector<int>{4, 6});
    CHECK(spec.summands[1].second == 8);
    CHECK(spec.summands[2].first.dims == std::vector<int>{5, 5});
    CHECK(spec.summands[2].second == 3);
    CHECK(spec.summand_count() == 17);

    auto one_cut = stacked_connected_sum(4, 1);
    REQUIRE(one_cut.summands.size() == 1);
    CHECK(one_cut.summands[0].first.dims == std::vector<int>{3, 7});
    CHECK(one_cut.summands[0].second == 1);

    // one cut of the 2-simplex: the square, whose moment-angle manifold is S^3 x S^3
    CHECK(connected_sum_poincare(stacked_connected_sum(2, 1)) ==
          poly({{0, 1}, {3, 2}, {6, 1}}));

    CHECK_THROWS_AS(stacked_connected_sum(3, 0), std::domain_error);
    CHECK_THROWS_AS(stacked_connected_sum(1, 2), std::invalid_argument);
}

TEST_CASE("summand count formula") {
    auto binom = [](long long n, long long r) {
        long long v = 1;
        for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
        return v;
    };
    for (int k = 2; k <= 5; ++k)
        for (int ell = 1; ell <= 5; ++ell) {
            long long expected = 0;
            for (int j = 1; j <= ell; ++j) expected += j * binom(ell + 1, j + 1);
            CHECK(stacked_connected_sum(k, ell).summand_count() == expected);
        }
}

TEST_CASE("wedge census arithmetic") {
    std::vector<std::pair<PoincarePolynomial, long long>> census;
    census.emplace_back(product_poincare(SphereProduct({3, 3})), 1);
    census.emplace_back(poly({{0, 1}, {5, 1}}), 4);
    census.emplace_back(poly({{0, 1}, {6, 1}}), 8);
    census.emplace_back(poly({{0, 1}, {7, 1}}), 4);
    CHECK(wedge_poincare(census) == poly({{0, 1}, {3, 2}, {5, 4}, {6, 9}, {7, 4}}));

    CHECK(wedge_poincare({}) == PoincarePolynomial::one());
    CHECK(wedge_poincare({{poly({{0, 1}, {5, 1}}), 2}}) == poly({{0, 1}, {5, 2}}));
    CHECK_THROWS_AS(wedge_poincare({{poly({{5, 1}}), 1}}), std::invalid_argument);
}

TEST_CASE("connected sums satisfy duality and Euler bookkeeping") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> factor_count(1, 3), summand_count(1, 3), mult(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const int total_dim = std::uniform_int_distribution<int>(6, 12)(rng);
        ConnectedSumSpec spec;
        const int summands = summand_count(rng);
        for (int s = 0; s < summands; ++s) {
            // split total_dim into factors of size >= 2
            std::vector<int> dims;
            int remaining = total_dim;
            int factors = factor_count(rng);
            for (int f = 1; f < factors && remaining >= 4; ++f) {
                int d = std::uniform_int_distribution<int>(2, remaining - 2)(rng);
                dims.push_back(d);
                remaining -= d;
            }
            dims.push_back(remaining);
            spec.summands.emplace_back(SphereProduct(dims), mult(rng));
        }
        auto p = connected_sum_poincare(spec);
        CHECK(p.is_palindromic(total_dim));
        CHECK(p.coeff(0) == 1);
        CHECK(p.coeff(total_dim) == 1);
        CHECK(p.evaluate(-1) == euler_oracle(spec));
    }
}

TEST_CASE("stacked closed forms are palindromic of the right degree") {
    for (int k = 2; k <= 5; ++k)
        for (int ell = 1; ell <= 4; ++ell) {
            auto p = connected_sum_poincare(stacked_connected_sum(k, ell));
            const int d = 2 * k + ell + 1;
            CHECK(p.degree() == d);
            CHECK(p.is_palindromic(d));
            if (d % 2 == 1) CHECK(p.evaluate(-1) == 0);
        }
}

}  // TEST_SUITE
