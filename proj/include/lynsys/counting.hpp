#pragma once

// Exact counting for the language of a Lyndon system: the H_n recurrence,
// interval cardinals, and a brute-force enumerator that doubles as the
// oracle for both.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "lynsys/word.hpp"

namespace lynsys {

enum class CountSource { Recurrence, Enumeration };

struct CountTable {
    Word d;
    std::vector<mpz_class> values;  // H_0 .. H_n
    CountSource source = CountSource::Recurrence;
};

// H_0 = 1 and H_n = sum_{k=1}^n (-1)^k (d_{k-1} - d_k) H_{n-k} + 1 with
// d_0 = 0. Requires a Lyndon generator.
CountTable count_recurrence(const Word& d, std::uint64_t n);

// Every suffix of a language word sits between the matching prefix of d and
// of 0.d (compared as equal-length finite words).
bool in_language(const Word& x, const Word& d);

// Cardinal of [A, B] among length-n language words, A <= B, |A| = |B| = n:
// sum_{i=1}^n (-1)^i (b_i - a_i) H_{n-i} + 1.
mpz_class count_interval(const Word& A, const Word& B, const Word& d);

inline constexpr std::uint64_t kEnumerationCap = 10000000;

// All length-n language words over {0, .., d_1}, sorted by the alternate
// order; the oracle behind H_n and the interval counts.
std::vector<Word> enumerate_language(const Word& d, std::uint64_t n,
                                     std::uint64_t cap = kEnumerationCap);
CountTable count_by_enumeration(const Word& d, std::uint64_t n,
                                std::uint64_t cap = kEnumerationCap);

// The alternate-order-consecutive pair straddling a first-letter boundary:
// (a d_1 .. d_{n-1}, (a-1) 0 d_1 .. d_{n-2}); requires 1 <= a <= d_1.
std::pair<Word, Word> extremal_neighbors(Letter a, const Word& d, std::uint64_t n);

}  // namespace lynsys
