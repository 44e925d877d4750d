#include "gsemo/problems.hpp"

#include <stdexcept>

namespace gsemo {

Problem make_problem(ProblemKind kind, std::size_t n)
{
    if (n < 2) {
        throw std::invalid_argument("problem dimension must be at least 2");
    }
    if (kind == ProblemKind::Cocz && n % 2 != 0) {
        throw std::invalid_argument("COCZ requires an even dimension");
    }
    return { kind, n };
}

ProblemKind parse_problem_kind(std::string_view token)
{
    if (token == "oneminmax") {
        return ProblemKind::OneMinMax;
    }
    if (token == "lotz") {
        return ProblemKind::Lotz;
    }
    if (token == "cocz") {
        return ProblemKind::Cocz;
    }
    throw std::invalid_argument("unknown problem: " + std::string(token));
}

std::string_view to_token(ProblemKind kind)
{
    switch (kind) {
    case ProblemKind::OneMinMax:
        return "oneminmax";
    case ProblemKind::Lotz:
        return "lotz";
    case ProblemKind::Cocz:
        return "cocz";
    }
    return "unknown";
}

ObjectiveVector evaluate(Problem const& p, Bitstring const& x)
{
    if (x.size() != p.n) {
        throw std::invalid_argument("evaluate: bitstring length does not match problem dimension");
    }
    const auto n = static_cast<std::int64_t>(p.n);
    switch (p.kind) {
    case ProblemKind::OneMinMax: {
        const auto ones = static_cast<std::int64_t>(x.count());
        return { ones, n - ones };
    }
    case ProblemKind::Lotz:
        return { static_cast<std::int64_t>(x.leading_ones()), static_cast<std::int64_t>(x.trailing_zeros()) };
    case ProblemKind::Cocz: {
        if (p.n % 2 != 0) {
            throw std::invalid_argument("COCZ requires an even dimension");
        }
        const auto half = p.n / 2;
        const auto first = static_cast<std::int64_t>(x.count(0, half));
        const auto second = static_cast<std::int64_t>(x.count(half, p.n));
        return { first + second, first + (n / 2 - second) };
    }
    }
    throw std::logic_error("evaluate: unhandled problem kind");
}

std::size_t pareto_front_size(Problem const& p)
{
    return p.kind == ProblemKind::Cocz ? p.n / 2 + 1 : p.n + 1;
}

std::vector<ObjectiveVector> pareto_front(Problem const& p)
{
    const auto n = static_cast<std::int64_t>(p.n);
    std::vector<ObjectiveVector> front;
    front.reserve(pareto_front_size(p));
    if (p.kind == ProblemKind::Cocz) {
        // all-ones first half, k ones in the second half
        for (std::int64_t k = 0; k <= n / 2; ++k) {
            front.push_back({ n / 2 + k, n - k });
        }
    } else {
        for (std::int64_t i = 0; i <= n; ++i) {
            front.push_back({ i, n - i });
        }
    }
    return front;
}

bool is_pareto_optimal(Problem const& p, ObjectiveVector const& y)
{
    const auto n = static_cast<std::int64_t>(p.n);
    if (y.y1 < 0 || y.y2 < 0) {
        return false;
    }
    if (p.kind == ProblemKind::Cocz) {
        return y.y1 >= n / 2 && y.y1 <= n && y.y1 + y.y2 == n + n / 2;
    }
    return y.y1 <= n && y.y1 + y.y2 == n;
}

} // namespace gsemo
