#include "gsemo/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace gsemo {

std::size_t Rng::uniform_index(std::size_t bound)
{
    const auto range = static_cast<std::uint64_t>(bound);
    const auto limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t v = engine_();
    while (v >= limit) {
        v = engine_();
    }
    return static_cast<std::size_t>(v % range);
}

double Rng::standard_normal()
{
    const double u1 = uniform_open0();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace gsemo
