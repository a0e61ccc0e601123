#pragma once

#include <cstdint>

namespace rankcpd::lds::detail {

struct DirectionRow {
    std::uint32_t poly;  // primitive polynomial, encoded with all coefficient bits
    int degree;          // polynomial degree s
    std::uint32_t m[8];  // initial direction values m_1..m_s (trailing zeros unused)
};

inline constexpr int kDirectionTableSize = 49;
extern const DirectionRow kDirectionTable[kDirectionTableSize];

}  // namespace rankcpd::lds::detail
