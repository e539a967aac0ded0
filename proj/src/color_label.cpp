#include "chromalab/color_label.hpp"

#include <stdexcept>

namespace chromalab {

ColorLabel::ColorLabel(std::initializer_list<std::int64_t> parts)
{
    if (parts.size() > kMaxParts)
        throw std::length_error("color label has too many components");
    for (auto v : parts)
        parts_[size_++] = v;
}

ColorLabel ColorLabel::concat(const ColorLabel& other) const
{
    if (size_ + other.size_ > kMaxParts)
        throw std::length_error("color label has too many components");
    ColorLabel out = *this;
    for (std::size_t i = 0; i < other.size_; ++i)
        out.parts_[out.size_++] = other.parts_[i];
    return out;
}

std::string ColorLabel::to_string() const
{
    if (size_ == 1)
        return std::to_string(parts_[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < size_; ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

} // namespace chromalab
