#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsemo {

class Rng;

/// Fixed-length binary genotype, packed 64 positions per word.
/// Position 0 is the first character of the textual form.
class Bitstring {
public:
    /// All-zero string of length n (n >= 2).
    explicit Bitstring(std::size_t n);

    /// Parses a compact "0"/"1" string.
    static Bitstring from_string(std::string_view text);
    static Bitstring random(std::size_t n, Rng& rng);

    std::size_t size() const noexcept { return size_; }
    bool operator[](std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }

    void toggle(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    void set(std::size_t i, bool value) noexcept;

    /// XOR with a string of equal length.
    Bitstring& operator^=(Bitstring const& other);

    std::size_t count() const noexcept;
    /// Ones in positions [first, last).
    std::size_t count(std::size_t first, std::size_t last) const noexcept;
    /// Length of the run of ones starting at position 0.
    std::size_t leading_ones() const noexcept;
    /// Length of the run of zeros ending at position n-1.
    std::size_t trailing_zeros() const noexcept;

    std::span<std::uint64_t const> words() const noexcept { return words_; }
    std::string to_string() const;

    friend bool operator==(Bitstring const&, Bitstring const&) = default;

private:
    std::size_t size_;
    std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, Bitstring const& x);

/// Pair of integer objective values, both maximized.
struct ObjectiveVector {
    std::int64_t y1 { 0 };
    std::int64_t y2 { 0 };

    friend constexpr auto operator<=>(ObjectiveVector const&, ObjectiveVector const&) = default;
};

std::ostream& operator<<(std::ostream& os, ObjectiveVector const& y);

/// a is at least as good as b in both objectives.
constexpr bool weakly_dominates(ObjectiveVector const& a, ObjectiveVector const& b) noexcept
{
    return b.y1 <= a.y1 && b.y2 <= a.y2;
}

constexpr bool strictly_dominates(ObjectiveVector const& a, ObjectiveVector const& b) noexcept
{
    return weakly_dominates(a, b) && a != b;
}

constexpr bool incomparable(ObjectiveVector const& a, ObjectiveVector const& b) noexcept
{
    return !weakly_dominates(a, b) && !weakly_dominates(b, a);
}

/// Throws std::invalid_argument on length mismatch.
std::size_t hamming_distance(Bitstring const& a, Bitstring const& b);

} // namespace gsemo
