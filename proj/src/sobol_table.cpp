#include "sobol_table.hpp"

namespace rankcpd::lds::detail {

// Primitive polynomials and initial direction values for coordinates
// 2..50 of the Sobol sequence (coordinate 1 is the van der Corput
// sequence in base 2 and needs no table entry). Each row holds the
// polynomial encoded as an integer, its degree s, and the s initial
// odd values m_1..m_s; the remaining m values follow from the
// recurrence m_k = m_{k-s} XOR (m_{k-s} << s) XOR sum of a_i (m_{k-i} << i).
const DirectionRow kDirectionTable[kDirectionTableSize] = {
    {3u, 1, {1, 0, 0, 0, 0, 0, 0, 0}},
    {7u, 2, {1, 3, 0, 0, 0, 0, 0, 0}},
    {11u, 3, {1, 3, 1, 0, 0, 0, 0, 0}},
    {13u, 3, {1, 1, 1, 0, 0, 0, 0, 0}},
    {19u, 4, {1, 1, 3, 3, 0, 0, 0, 0}},
    {25u, 4, {1, 3, 5, 13, 0, 0, 0, 0}},
    {37u, 5, {1, 1, 5, 5, 17, 0, 0, 0}},
    {41u, 5, {1, 1, 5, 5, 5, 0, 0, 0}},
    {47u, 5, {1, 1, 7, 11, 19, 0, 0, 0}},
    {55u, 5, {1, 1, 5, 1, 1, 0, 0, 0}},
    {59u, 5, {1, 1, 1, 3, 11, 0, 0, 0}},
    {61u, 5, {1, 3, 5, 5, 31, 0, 0, 0}},
    {67u, 6, {1, 3, 3, 9, 7, 49, 0, 0}},
    {91u, 6, {1, 1, 1, 15, 21, 21, 0, 0}},
    {97u, 6, {1, 3, 1, 13, 27, 49, 0, 0}},
    {103u, 6, {1, 1, 1, 15, 7, 5, 0, 0}},
    {109u, 6, {1, 3, 1, 15, 13, 25, 0, 0}},
    {115u, 6, {1, 1, 5, 5, 19, 61, 0, 0}},
    {131u, 7, {1, 3, 7, 11, 23, 15, 103, 0}},
    {137u, 7, {1, 3, 7, 13, 13, 15, 69, 0}},
    {143u, 7, {1, 1, 3, 13, 7, 35, 63, 0}},
    {145u, 7, {1, 3, 5, 9, 1, 25, 53, 0}},
    {157u, 7, {1, 3, 1, 13, 9, 35, 107, 0}},
    {167u, 7, {1, 3, 1, 5, 27, 61, 31, 0}},
    {171u, 7, {1, 1, 5, 11, 19, 41, 61, 0}},
    {185u, 7, {1, 3, 5, 3, 3, 13, 69, 0}},
    {191u, 7, {1, 1, 7, 13, 1, 19, 1, 0}},
    {193u, 7, {1, 3, 7, 5, 13, 19, 59, 0}},
    {203u, 7, {1, 1, 3, 9, 25, 29, 41, 0}},
    {211u, 7, {1, 3, 5, 13, 23, 1, 55, 0}},
    {213u, 7, {1, 3, 7, 3, 13, 59, 17, 0}},
    {229u, 7, {1, 3, 1, 3, 5, 53, 69, 0}},
    {239u, 7, {1, 1, 5, 5, 23, 33, 13, 0}},
    {241u, 7, {1, 1, 7, 7, 1, 61, 123, 0}},
    {247u, 7, {1, 1, 7, 9, 13, 61, 49, 0}},
    {253u, 7, {1, 3, 3, 5, 3, 55, 33, 0}},
    {285u, 8, {1, 3, 1, 15, 31, 13, 49, 245}},
    {299u, 8, {1, 3, 5, 15, 31, 59, 63, 97}},
    {301u, 8, {1, 3, 1, 11, 11, 11, 77, 249}},
    {333u, 8, {1, 3, 1, 11, 27, 43, 71, 9}},
    {351u, 8, {1, 1, 7, 15, 21, 11, 81, 45}},
    {355u, 8, {1, 3, 7, 3, 25, 31, 65, 79}},
    {357u, 8, {1, 3, 1, 1, 19, 11, 3, 205}},
    {361u, 8, {1, 1, 5, 9, 19, 21, 29, 157}},
    {369u, 8, {1, 3, 7, 11, 1, 33, 89, 185}},
    {391u, 8, {1, 3, 3, 3, 15, 9, 79, 71}},
    {397u, 8, {1, 3, 7, 11, 15, 39, 119, 27}},
    {425u, 8, {1, 1, 3, 1, 11, 31, 97, 225}},
    {451u, 8, {1, 1, 1, 3, 23, 43, 57, 177}},
};

}  // namespace rankcpd::lds::detail
