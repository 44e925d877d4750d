#include "gsemo/problems.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace gsemo;

TEST_CASE("problem validation and tokens")
{
    CHECK_THROWS_AS(make_problem(ProblemKind::OneMinMax, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_problem(ProblemKind::Cocz, 7), std::invalid_argument);
    CHECK_NOTHROW(make_problem(ProblemKind::Cocz, 8));
    CHECK_NOTHROW(make_problem(ProblemKind::Lotz, 7));
    for (auto k : { ProblemKind::OneMinMax, ProblemKind::Lotz, ProblemKind::Cocz }) {
        CHECK(parse_problem_kind(to_token(k)) == k);
    }
    CHECK_THROWS_AS(parse_problem_kind("onemax"), std::invalid_argument);
}

TEST_CASE("objective values on fixed strings")
{
    const auto omm = make_problem(ProblemKind::OneMinMax, 6);
    const auto lotz = make_problem(ProblemKind::Lotz, 6);
    const auto cocz = make_problem(ProblemKind::Cocz, 6);

    const auto x = Bitstring::from_string("110100");
    CHECK(evaluate(omm, x) == ObjectiveVector { 3, 3 });
    CHECK(evaluate(lotz, x) == ObjectiveVector { 2, 2 });
    // first half 110 -> 2 ones, second half 100 -> 2 zeros
    CHECK(evaluate(cocz, x) == ObjectiveVector { 3, 4 });

    const auto ones = Bitstring::from_string("111111");
    CHECK(evaluate(omm, ones) == ObjectiveVector { 6, 0 });
    CHECK(evaluate(lotz, ones) == ObjectiveVector { 6, 0 });
    CHECK(evaluate(cocz, ones) == ObjectiveVector { 6, 3 });

    CHECK_THROWS_AS(evaluate(omm, Bitstring(5)), std::invalid_argument);
}

TEST_CASE("pareto_front matches brute force for n <= 12")
{
    for (std::size_t n = 2; n <= 12; ++n) {
        for (auto k : { ProblemKind::OneMinMax, ProblemKind::Lotz, ProblemKind::Cocz }) {
            if (k == ProblemKind::Cocz && n % 2 != 0) {
                continue;
            }
            const auto p = make_problem(k, n);
            const auto expected = oracle::brute_force_front(p);
            const auto front = pareto_front(p);
            CAPTURE(n);
            CAPTURE(to_token(k));
            CHECK(front == expected);
            CHECK(pareto_front_size(p) == expected.size());

            // membership test agrees with the front on every attainable vector
            for (auto const& y : oracle::all_evaluations(p)) {
                const bool in_front = std::binary_search(expected.begin(), expected.end(), y);
                CHECK(is_pareto_optimal(p, y) == in_front);
            }
        }
    }
}

TEST_CASE("front sizes at n = 100")
{
    CHECK(pareto_front_size(make_problem(ProblemKind::OneMinMax, 100)) == 101);
    CHECK(pareto_front_size(make_problem(ProblemKind::Lotz, 100)) == 101);
    CHECK(pareto_front_size(make_problem(ProblemKind::Cocz, 100)) == 51);
    const auto front = pareto_front(make_problem(ProblemKind::Cocz, 100));
    CHECK(front.front() == ObjectiveVector { 50, 100 });
    CHECK(front.back() == ObjectiveVector { 100, 50 });
}
