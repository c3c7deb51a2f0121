#pragma once

// Basis bookkeeping for exterior algebras. A basis element e_{i1} ^ ... ^ e_{ik}
// with i1 < ... < ik is stored as the bitmask with bits i1..ik set.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ptk {

using Mask = std::uint32_t;

inline constexpr int kMaxDim = 24;

inline int degree_of(Mask m) { return std::popcount(m); }

inline Mask full_mask(int dim) { return dim >= 32 ? ~Mask{0} : (Mask{1} << dim) - 1; }

/// Sign of e_a ^ e_b relative to e_{a|b}; 0 when a and b overlap.
inline int wedge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    // count pairs (i in a, j in b) with i > j
    int inversions = 0;
    for (Mask rest = b; rest; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        inversions += std::popcount(a & ~full_mask(j + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

/// Sign of iota_{e_i} applied to e_J (contraction into the first slot);
/// 0 when i is not in J.
inline int contraction_sign(int i, Mask j) {
    if (!(j & (Mask{1} << i))) return 0;
    return (std::popcount(j & full_mask(i)) & 1) ? -1 : 1;
}

/// Sign of iota_{e_I} e_J with iota_{u^v} = iota_u o iota_v; 0 unless I is a subset of J.
/// The result basis element is J \ I.
inline int interior_sign(Mask i, Mask j) {
    if ((i & j) != i) return 0;
    int sign = 1;
    Mask current = j;
    // innermost operator is the largest index
    for (Mask rest = i; rest;) {
        const int k = 31 - std::countl_zero(rest);
        sign *= contraction_sign(k, current);
        current &= ~(Mask{1} << k);
        rest &= ~(Mask{1} << k);
    }
    return sign;
}

inline std::vector<int> indices_of(Mask m) {
    std::vector<int> out;
    for (Mask rest = m; rest; rest &= rest - 1) out.push_back(std::countr_zero(rest));
    return out;
}

inline Mask mask_of(const std::vector<int>& indices) {
    Mask m = 0;
    for (int i : indices) m |= Mask{1} << i;
    return m;
}

/// Lexicographic order on increasing index tuples (used for printing).
inline bool tuple_less(Mask a, Mask b) {
    if (degree_of(a) != degree_of(b)) return degree_of(a) < degree_of(b);
    return indices_of(a) < indices_of(b);
}

/// All masks of the given degree in `dim` slots, in lexicographic tuple order.
std::vector<Mask> masks_of_degree(int dim, int degree);

}  // namespace ptk
