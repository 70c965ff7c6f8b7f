#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "qneuron/amplitude.hpp"
#include "qneuron/rng.hpp"

using namespace qneuron;

TEST_SUITE("amplitude") {

TEST_CASE("two_pi matches the library constant") {
    CHECK(two_pi == doctest::Approx(2.0 * std::acos(-1.0)).epsilon(1e-16));
}

TEST_CASE("probability is the squared modulus") {
    CHECK(probability({3.0, 4.0}) == 25.0);
    CHECK(probability({0.0, 0.0}) == 0.0);
    CHECK(probability({-1.0, 1.0}) == 2.0);
}

TEST_CASE("amplitude_sum folds left to right") {
    CHECK(amplitude_sum({}) == Amplitude{0.0, 0.0});
    const std::vector<Amplitude> terms{{1.0, 2.0}, {3.0, -1.0}};
    CHECK(amplitude_sum(terms) == Amplitude{4.0, 1.0});
}

TEST_CASE("modsq_gap_bound: exact cases") {
    CHECK(modsq_gap_bound({1.0, 1.0}, {1.0, 1.0}) == 0.0);
    // z = 1, z1 = 0: gap = 1, bound = 1 (tight).
    CHECK(modsq_gap_bound({1.0, 0.0}, {0.0, 0.0}) == 1.0);
    // symmetry in the two arguments
    const Amplitude a{0.3, -1.7}, b{-2.1, 0.4};
    CHECK(modsq_gap_bound(a, b) == modsq_gap_bound(b, a));
}

TEST_CASE("modsq_gap_bound dominates the squared-modulus gap") {
    std::mt19937_64 gen(101);
    for (int i = 0; i < 1000; ++i) {
        const Amplitude z{uniform_range(gen, -10.0, 10.0), uniform_range(gen, -10.0, 10.0)};
        const Amplitude z1{uniform_range(gen, -10.0, 10.0), uniform_range(gen, -10.0, 10.0)};
        const double gap = std::abs(probability(z) - probability(z1));
        const double bound = modsq_gap_bound(z, z1);
        CHECK(gap <= bound + 1e-12 * (probability(z) + probability(z1) + 1.0));
    }
}

TEST_CASE("rng helpers are deterministic and in range") {
    std::mt19937_64 a(7), b(7);
    for (int i = 0; i < 100; ++i) {
        const double u = uniform_unit(a);
        CHECK(u == uniform_unit(b));
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    std::mt19937_64 c(7);
    for (int i = 0; i < 100; ++i) {
        const double v = uniform_range(c, -2.0, 3.0);
        CHECK(v >= -2.0);
        CHECK(v < 3.0);
        const std::size_t idx = uniform_index(c, 5);
        CHECK(idx < 5);
    }
    CHECK(split_seed(1, 0) != split_seed(1, 1));
    CHECK(split_seed(1, 0) != split_seed(2, 0));
    CHECK(split_seed(42, 3) == split_seed(42, 3));
}

}  // TEST_SUITE
