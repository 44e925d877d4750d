#pragma once

#include "gsemo/core.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gsemo {

enum class ProblemKind { OneMinMax, Lotz, Cocz };

struct Problem {
    ProblemKind kind { ProblemKind::OneMinMax };
    std::size_t n { 2 };
};

/// Validates n >= 2 and, for COCZ, even n. Throws std::invalid_argument.
Problem make_problem(ProblemKind kind, std::size_t n);

/// "oneminmax" | "lotz" | "cocz".
ProblemKind parse_problem_kind(std::string_view token);
std::string_view to_token(ProblemKind kind);

/// OneMinMax: (|x|, n - |x|).
/// LOTZ: (leading ones, trailing zeros).
/// COCZ: (|x|, ones in the first half + zeros in the second half).
ObjectiveVector evaluate(Problem const& p, Bitstring const& x);

/// The Pareto front, sorted by y1 ascending.
std::vector<ObjectiveVector> pareto_front(Problem const& p);

std::size_t pareto_front_size(Problem const& p);

/// Constant-time membership test against pareto_front(p).
bool is_pareto_optimal(Problem const& p, ObjectiveVector const& y);

} // namespace gsemo
