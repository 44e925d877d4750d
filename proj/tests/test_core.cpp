#include "gsemo/core.hpp"
#include "gsemo/rng.hpp"

#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>

using namespace gsemo;

TEST_CASE("bitstring construction and text round trip")
{
    CHECK_THROWS_AS(Bitstring(1), std::invalid_argument);
    CHECK_THROWS_AS(Bitstring(0), std::invalid_argument);
    CHECK_THROWS_AS(Bitstring::from_string("0120"), std::invalid_argument);

    const auto x = Bitstring::from_string("1101000");
    CHECK(x.size() == 7);
    CHECK(x.to_string() == "1101000");
    CHECK(x.count() == 3);
    CHECK(x.leading_ones() == 2);
    CHECK(x.trailing_zeros() == 3);
    CHECK(x.count(0, 2) == 2);
    CHECK(x.count(2, 7) == 1);

    std::ostringstream os;
    os << x;
    CHECK(os.str() == "1101000");
}

TEST_CASE("bitstring edge runs")
{
    CHECK(Bitstring::from_string("11111").leading_ones() == 5);
    CHECK(Bitstring::from_string("11111").trailing_zeros() == 0);
    CHECK(Bitstring::from_string("00000").leading_ones() == 0);
    CHECK(Bitstring::from_string("00000").trailing_zeros() == 5);
}

TEST_CASE("bitstring across word boundaries")
{
    for (std::size_t n : { 63, 64, 65, 127, 128, 130 }) {
        Bitstring x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x.set(i, true);
        }
        CHECK(x.count() == n);
        CHECK(x.leading_ones() == n);
        CHECK(x.trailing_zeros() == 0);
        x.set(n - 1, false);
        x.set(n - 2, false);
        CHECK(x.leading_ones() == n - 2);
        CHECK(x.trailing_zeros() == 2);
        CHECK(x.count(n - 3, n) == 1);
        x.toggle(0);
        CHECK(x.leading_ones() == 0);
        CHECK(x.count() == n - 3);
    }
}

TEST_CASE("random bitstrings keep tail bits clear")
{
    Rng rng(17);
    for (int rep = 0; rep < 200; ++rep) {
        const auto x = Bitstring::random(70, rng);
        CHECK(x.count() == x.count(0, 70));
        CHECK(x.count() <= 70);
        CHECK(Bitstring::from_string(x.to_string()) == x);
    }
}

TEST_CASE("xor and hamming distance")
{
    auto a = Bitstring::from_string("1100");
    const auto b = Bitstring::from_string("1010");
    CHECK(hamming_distance(a, b) == 2);
    CHECK(hamming_distance(a, a) == 0);
    a ^= b;
    CHECK(a.to_string() == "0110");
    CHECK_THROWS_AS(hamming_distance(a, Bitstring(5)), std::invalid_argument);
    CHECK_THROWS_AS(a ^= Bitstring(5), std::invalid_argument);
}

TEST_CASE("dominance relations")
{
    const ObjectiveVector a { 3, 2 };
    const ObjectiveVector b { 2, 2 };
    const ObjectiveVector c { 1, 5 };
    CHECK(weakly_dominates(a, a));
    CHECK_FALSE(strictly_dominates(a, a));
    CHECK(strictly_dominates(a, b));
    CHECK_FALSE(weakly_dominates(b, a));
    CHECK(incomparable(a, c));
    CHECK(incomparable(c, b));
    CHECK_FALSE(incomparable(a, b));
}

TEST_CASE("dominance properties on a grid")
{
    std::vector<ObjectiveVector> pts;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            pts.push_back({ i, j });
        }
    }
    for (auto const& a : pts) {
        CHECK(weakly_dominates(a, a));
        for (auto const& b : pts) {
            // exactly one of: equal, a > b, b > a, incomparable
            const int cases = (a == b) + strictly_dominates(a, b) + strictly_dominates(b, a) + incomparable(a, b);
            CHECK(cases == 1);
            for (auto const& c : pts) {
                if (weakly_dominates(a, b) && weakly_dominates(b, c)) {
                    CHECK(weakly_dominates(a, c));
                }
            }
        }
    }
}

TEST_CASE("seed derivation")
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        seen.insert(derive_seed(42, i));
    }
    CHECK(seen.size() == 10000);
    for (std::uint64_t i = 0; i < 100; ++i) {
        CHECK(derive_seed(42, i) != derive_seed(43, i));
    }
    // Reference value of the SplitMix64 finalizer.
    CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("rng variates")
{
    Rng rng(5);
    double sum = 0;
    double sq = 0;
    const int draws = 200000;
    for (int i = 0; i < draws; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double z = rng.standard_normal();
        sum += z;
        sq += z * z;
    }
    CHECK(sum / draws == doctest::Approx(0.0).epsilon(0.01).scale(1.0));
    CHECK(sq / draws == doctest::Approx(1.0).epsilon(0.02));

    std::vector<int> counts(7, 0);
    for (int i = 0; i < 70000; ++i) {
        ++counts[rng.uniform_index(7)];
    }
    for (int c : counts) {
        CHECK(c > 9500);
        CHECK(c < 10500);
    }

    Rng a(9);
    Rng b(9);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next() == b.next());
    }
}
