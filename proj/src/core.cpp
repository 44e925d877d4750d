#include "gsemo/core.hpp"

#include "gsemo/rng.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gsemo {

namespace {
    std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

    // Mask of the valid bits in the last word.
    std::uint64_t tail_mask(std::size_t n)
    {
        const auto r = n % 64;
        return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
    }
} // namespace

Bitstring::Bitstring(std::size_t n)
    : size_(n)
    , words_(word_count(n), 0)
{
    if (n < 2) {
        throw std::invalid_argument("bitstring length must be at least 2");
    }
}

Bitstring Bitstring::from_string(std::string_view text)
{
    Bitstring x(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            x.toggle(i);
        } else if (text[i] != '0') {
            throw std::invalid_argument("bitstring text may only contain '0' and '1'");
        }
    }
    return x;
}

Bitstring Bitstring::random(std::size_t n, Rng& rng)
{
    Bitstring x(n);
    for (auto& w : x.words_) {
        w = rng.next();
    }
    x.words_.back() &= tail_mask(n);
    return x;
}

void Bitstring::set(std::size_t i, bool value) noexcept
{
    if ((*this)[i] != value) {
        toggle(i);
    }
}

Bitstring& Bitstring::operator^=(Bitstring const& other)
{
    if (other.size_ != size_) {
        throw std::invalid_argument("bitstring length mismatch");
    }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

std::size_t Bitstring::count() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::size_t Bitstring::count(std::size_t first, std::size_t last) const noexcept
{
    std::size_t total = 0;
    for (std::size_t i = first; i < last;) {
        const auto k = i / 64;
        const auto lo = i % 64;
        const auto hi = std::min<std::size_t>(64, lo + (last - i));
        auto w = words_[k] >> lo;
        if (hi - lo < 64) {
            w &= (std::uint64_t{1} << (hi - lo)) - 1;
        }
        total += static_cast<std::size_t>(std::popcount(w));
        i += hi - lo;
    }
    return total;
}

std::size_t Bitstring::leading_ones() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_) {
        const auto run = static_cast<std::size_t>(std::countr_one(w));
        total += run;
        if (run < 64) {
            break;
        }
    }
    return std::min(total, size_);
}

std::size_t Bitstring::trailing_zeros() const noexcept
{
    const auto tail_bits = size_ - 64 * (words_.size() - 1);
    std::size_t total = 0;
    for (std::size_t k = words_.size(); k-- > 0;) {
        const auto valid = k + 1 == words_.size() ? tail_bits : 64;
        const auto w = words_[k];
        if (w == 0) {
            total += valid;
            continue;
        }
        total += valid - static_cast<std::size_t>(std::bit_width(w));
        break;
    }
    return total;
}

std::string Bitstring::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) {
            s[i] = '1';
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, Bitstring const& x) { return os << x.to_string(); }

std::ostream& operator<<(std::ostream& os, ObjectiveVector const& y)
{
    return os << '(' << y.y1 << ',' << y.y2 << ')';
}

std::size_t hamming_distance(Bitstring const& a, Bitstring const& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("hamming_distance: length mismatch");
    }
    std::size_t d = 0;
    auto wa = a.words();
    auto wb = b.words();
    for (std::size_t k = 0; k < wa.size(); ++k) {
        d += static_cast<std::size_t>(std::popcount(wa[k] ^ wb[k]));
    }
    return d;
}

} // namespace gsemo
