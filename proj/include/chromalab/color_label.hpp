#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace chromalab {

/// A color is a short tuple of integers, e.g. (n mod N, k mod 4) for a
/// checkerboard tile or (a, b) for an unbounded square tiling.
class ColorLabel {
public:
    static constexpr std::size_t kMaxParts = 4;

    ColorLabel() = default;
    ColorLabel(std::initializer_list<std::int64_t> parts);

    std::size_t size() const { return size_; }
    std::int64_t operator[](std::size_t i) const { return parts_[i]; }

    /// Concatenation, used by product colorings. Throws std::length_error
    /// past kMaxParts components.
    ColorLabel concat(const ColorLabel& other) const;

    /// "a" for a single component, "(a,b,...)" otherwise.
    std::string to_string() const;

    friend bool operator==(const ColorLabel&, const ColorLabel&) = default;
    friend auto operator<=>(const ColorLabel&, const ColorLabel&) = default;

private:
    std::array<std::int64_t, kMaxParts> parts_{};
    std::size_t size_ = 0;
};

/// Mathematical modulus, always in [0, m).
inline std::int64_t floor_mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace chromalab
