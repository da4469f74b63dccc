#pragma once

#include <array>
#include <cstdint>

namespace mutarate::alphabet {

// Bit set over {A,C,G,T}: A=1, C=2, G=4, T=8.
using BaseMask = std::uint8_t;

inline constexpr char kBases[4] = {'A', 'C', 'G', 'T'};
inline constexpr char kGap = '-';

// Index of a strict nucleotide in ACGT order, or -1.
constexpr int base_index(char c) {
    switch (c) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        case 'T': return 3;
        default: return -1;
    }
}

constexpr bool is_base(char c) { return base_index(c) >= 0; }

// IUPAC expansion; 0 for anything that is not a nucleotide code.
constexpr BaseMask iupac_mask(char c) {
    switch (c) {
        case 'A': return 1;
        case 'C': return 2;
        case 'G': return 4;
        case 'T': return 8;
        case 'R': return 1 | 4;
        case 'Y': return 2 | 8;
        case 'S': return 2 | 4;
        case 'W': return 1 | 8;
        case 'K': return 4 | 8;
        case 'M': return 1 | 2;
        case 'B': return 2 | 4 | 8;
        case 'D': return 1 | 4 | 8;
        case 'H': return 1 | 2 | 8;
        case 'V': return 1 | 2 | 4;
        case 'N': return 1 | 2 | 4 | 8;
        default: return 0;
    }
}

constexpr bool is_ambiguity(char c) { return iupac_mask(c) != 0 && !is_base(c); }

constexpr bool is_residue(char c) { return iupac_mask(c) != 0; }

constexpr bool is_purine(char c) { return c == 'A' || c == 'G'; }

// A<->G and C<->T.
constexpr bool is_transition(char a, char b) {
    return a != b && is_base(a) && is_base(b) && (is_purine(a) == is_purine(b));
}

}  // namespace mutarate::alphabet
