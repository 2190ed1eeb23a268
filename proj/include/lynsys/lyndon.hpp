#pragma once

// Alternate Lyndon words (words preceding all of their shifts in the
// alternate order), the d*/r*/min/max constructions around a weak periodic
// companion, entropy classification against phi^inf(1), and the full
// admissibility decision for "is this word the (-beta)-expansion of
// -beta/(beta+1) for some beta > 1".

#include <cstdint>
#include <optional>

#include "lynsys/numeric.hpp"
#include "lynsys/order.hpp"
#include "lynsys/word.hpp"

namespace lynsys {

struct LyndonClass {
    enum class Kind { NotLyndon, Weak, Strong };
    Kind kind = Kind::Strong;
    // Weak: the (minimal) period length witnessing equality with a shift.
    // NotLyndon: the first shift that precedes the word.
    std::uint64_t index = 0;

    bool is_lyndon() const { return kind != Kind::NotLyndon; }
};

// Checks w against every distinct shift (finitely many for an eventually
// periodic word; finite words are read through their zero padding).
LyndonClass classify_lyndon(const Word& w);

// If w begins with uu for a word u of odd length, a Lyndon w must equal
// the periodic repetition of u; returns that repetition, or nothing when no
// odd square prefix exists within the searched bound.
std::optional<Word> uu_prefix_collapse(const Word& w);

// The largest Lyndon word attached to the same base: purely periodic words
// of minimal odd period 2p+1 map to period (d_1 .. d_2p, d_{2p+1}-1, 0),
// everything else is returned unchanged. Requires a Lyndon input; an odd
// minimal period ending in 0 is rejected (it cannot occur for Lyndon input).
Word dstar(const Word& d);

// 0 . dstar(d): the strict upper bound for shifts of a valid expansion.
Word rstar(const Word& d);

// Interval of Lyndon words attached to the same base as the weak periodic
// companion a (minimal period k, last letter nonzero):
//   k even:  min = a_1..a_{k-1}(a_k-1)0 . rep(a_1..a_k),   max = rep(a_1..a_k)
//   k odd:   min = a_1..a_k . rep(a_1..a_{k-1}(a_k-1)0),   max = rep(a_1..a_{k-1}(a_k-1)0)
struct LynBounds {
    Word min;
    Word max;
};
LynBounds lyn_bounds(const Word& a);

// Search for a weak periodic companion word whose interval [min_k, max_k]
// contains d with max_k < phi^inf(1) and d itself not the companion. Any
// companion must share d's first k-1 letters and have a_k in {d_k, d_k+1},
// so the search is a small scan over k. A found witness is cross-checked:
// both words must attach to overlapping base enclosures.
struct LynSearch {
    enum class Status { Witness, None, Unknown };
    Status status = Status::None;
    std::optional<Word> witness;
    std::uint64_t searched_to = 0;
};
LynSearch in_lyn(const Word& d);
LynSearch in_lyn(const Word& d, std::uint64_t max_period);
std::uint64_t in_lyn_default_bound(const Word& d);

// Entropy classification: positive iff d precedes phi^inf(1). A zero
// verdict is verified to be the all-zero word or the periodic repetition of
// some phi^n(1); anything else signals a bug.
struct EntropySign {
    bool positive = false;
    enum class ZeroFamily { NotZero, AllZero, PhiPower } family = ZeroFamily::NotZero;
    unsigned phi_index = 0;  // n with period phi^n(1), when family == PhiPower
};
EntropySign entropy_sign(const Word& d);

// The three conditions of the expansion characterization:
//   (a) every shift s of d satisfies d <= s < rstar(d) (strict right),
//   (b) d has no weak companion interval containing it (not in Lyn),
//   (c) d precedes phi^inf(1) (positive entropy).
// beta is attached whenever d is Lyndon with positive entropy, even if (a)
// or (b) fails.
struct AdmissibilityReport {
    bool cond_a = false;
    std::optional<std::uint64_t> failing_shift;  // first n with a violated (a)
    bool cond_b = false;
    std::optional<Word> lyn_witness;             // companion word when (b) fails
    bool cond_c = false;
    bool lyn_unknown = false;                    // companion search hit its bound
    std::optional<BetaCertificate> beta;

    bool admissible() const { return cond_a && cond_b && cond_c; }
};
AdmissibilityReport admissible(const Word& d, unsigned bits = kDefaultPrecisionBits);

}  // namespace lynsys
