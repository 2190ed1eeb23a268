#pragma once

// The alternate (Ito-Sadahiro) order on words: x precedes y when the first
// index k with x_k != y_k satisfies (-1)^k (x_k - y_k) < 0. Even positions
// compare like the usual order, odd positions reversed. Finite words are
// compared through their zero-padded streams.

#include <cstdint>
#include <optional>

#include "lynsys/word.hpp"

namespace lynsys {

enum class Rel { Less, Equal, Greater };

struct OrderOutcome {
    Rel relation = Rel::Equal;
    // First index where the words differ; empty iff relation == Equal.
    std::optional<std::uint64_t> witness_index;
};

// Exact comparison of two (zero-padded) eventually periodic streams.
//
// Termination: let P = max(|pre_x|, |pre_y|) and L = lcm(|per_x|, |per_y|)
// (a finite word counts as period 1, all zeros). Past position P both
// streams are periodic with period L, so if they agree on [1, P + L] then
// x_{i+L} = x_i and y_{i+L} = y_i for i > P gives agreement everywhere by
// induction. Hence scanning P + L letters decides the order.
OrderOutcome alt_compare(const Word& x, const Word& y);

// Compares x against phi^inf(1) by streaming letters until the first
// difference. phi^inf(1) is aperiodic while x is eventually periodic, so a
// difference always exists; the cap is an engineering failsafe and running
// into it signals a bug, not a mathematical possibility.
OrderOutcome alt_compare_vs_phi_limit(const Word& x, std::uint64_t letter_cap = 1000000);

// +1 when a common prefix of this length preserves the order of the tails,
// -1 when it reverses it.
inline int prefix_context_flip(std::uint64_t prefix_length) {
    return prefix_length % 2 == 0 ? +1 : -1;
}

// Order outcome from a raw first-difference record.
inline OrderOutcome outcome_at(std::uint64_t k, Letter xk, Letter yk) {
    if (xk == yk) return {Rel::Equal, std::nullopt};
    bool less = k % 2 == 1 ? xk > yk : xk < yk;  // (-1)^k (x_k - y_k) < 0
    return {less ? Rel::Less : Rel::Greater, k};
}

inline Rel reverse(Rel r) {
    if (r == Rel::Less) return Rel::Greater;
    if (r == Rel::Greater) return Rel::Less;
    return Rel::Equal;
}

}  // namespace lynsys
