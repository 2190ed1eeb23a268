#include "lynsys/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "lynsys/lyndon.hpp"
#include "lynsys/order.hpp"

namespace lynsys {

CountTable count_recurrence(const Word& d, std::uint64_t n) {
    if (!classify_lyndon(d).is_lyndon())
        throw std::domain_error("count_recurrence: generator must be an alternate Lyndon word");
    CountTable table{d, {}, CountSource::Recurrence};
    table.values.assign(n + 1, mpz_class(0));
    table.values[0] = 1;
    for (std::uint64_t m = 1; m <= n; ++m) {
        mpz_class acc = 1;
        for (std::uint64_t k = 1; k <= m; ++k) {
            long diff = static_cast<long>(k == 1 ? 0 : d.letter_at(k - 1)) -
                        static_cast<long>(d.letter_at(k));
            if (diff == 0) continue;
            if (k % 2 == 1) diff = -diff;
            acc += diff * table.values[m - k];
        }
        if (acc < table.values[m - 1])
            throw std::logic_error("count_recurrence: counts must be nondecreasing");
        table.values[m] = acc;
    }
    return table;
}

namespace {

// Alternate-order comparison of two equal-length finite letter ranges.
Rel compare_range(auto&& xs, auto&& ys, std::uint64_t len) {
    for (std::uint64_t k = 1; k <= len; ++k) {
        Letter a = xs(k), b = ys(k);
        if (a == b) continue;
        bool less = k % 2 == 1 ? a > b : a < b;
        return less ? Rel::Less : Rel::Greater;
    }
    return Rel::Equal;
}

}  // namespace

bool in_language(const Word& x, const Word& d) {
    if (!x.is_finite()) throw std::invalid_argument("in_language: word must be finite");
    std::uint64_t n = x.preperiod().size();
    for (std::uint64_t j = 1; j <= n; ++j) {
        std::uint64_t m = n - j + 1;
        auto suffix = [&](std::uint64_t k) { return x.letter_at(j + k - 1); };
        auto lower = [&](std::uint64_t k) { return d.letter_at(k); };
        auto upper = [&](std::uint64_t k) { return k == 1 ? Letter(0) : d.letter_at(k - 1); };
        if (compare_range(lower, suffix, m) == Rel::Greater) return false;
        if (compare_range(suffix, upper, m) == Rel::Greater) return false;
    }
    return true;
}

mpz_class count_interval(const Word& A, const Word& B, const Word& d) {
    if (!A.is_finite() || !B.is_finite())
        throw std::invalid_argument("count_interval: endpoints must be finite words");
    std::uint64_t n = A.preperiod().size();
    if (B.preperiod().size() != n)
        throw std::invalid_argument("count_interval: endpoints must have equal length");
    if (!in_language(A, d) || !in_language(B, d))
        throw std::domain_error("count_interval: endpoint not in the language");
    auto letter = [](const Word& w, std::uint64_t k) { return w.letter_at(k); };
    if (compare_range([&](std::uint64_t k) { return letter(A, k); },
                      [&](std::uint64_t k) { return letter(B, k); }, n) == Rel::Greater)
        throw std::domain_error("count_interval: A must not exceed B");
    if (n == 0) return 1;
    CountTable table = count_recurrence(d, n - 1);
    mpz_class acc = 1;
    for (std::uint64_t i = 1; i <= n; ++i) {
        long diff = static_cast<long>(B.letter_at(i)) - static_cast<long>(A.letter_at(i));
        if (diff == 0) continue;
        if (i % 2 == 1) diff = -diff;
        acc += diff * table.values[n - i];
    }
    return acc;
}

namespace {

struct Enumerator {
    const Word& d;
    std::uint64_t n;
    std::vector<Letter> current;
    // Matched lengths of suffixes still equal to a prefix of d (lower
    // boundary) respectively of 0.d (upper boundary). Once a suffix moves
    // strictly inside, its constraint is settled for good.
    std::vector<std::uint64_t> tight_low, tight_high;
    std::vector<Word>* out;

    void run() {
        if (current.size() == n) {
            out->push_back(Word::finite(current));
            return;
        }
        Letter d1 = d.letter_at(1);
        for (Letter c = 0; c <= d1; ++c) extend(c);
    }

    void extend(Letter c) {
        std::vector<std::uint64_t> lows, highs;
        for (std::uint64_t m : tight_low) {
            std::uint64_t L = m + 1;
            Letter dl = d.letter_at(L);
            if (dl == c) {
                lows.push_back(L);
                continue;
            }
            bool lower_ok = L % 2 == 1 ? dl > c : dl < c;  // prefix of d < extended suffix
            if (!lower_ok) return;
        }
        for (std::uint64_t m : tight_high) {
            std::uint64_t L = m + 1;
            Letter ul = L == 1 ? 0 : d.letter_at(L - 1);
            if (ul == c) {
                highs.push_back(L);
                continue;
            }
            bool upper_ok = L % 2 == 1 ? c > ul : c < ul;  // extended suffix < prefix of 0.d
            if (!upper_ok) return;
        }
        if (c == d.letter_at(1)) lows.push_back(1);
        if (c == 0) highs.push_back(1);
        current.push_back(c);
        std::swap(lows, tight_low);
        std::swap(highs, tight_high);
        run();
        std::swap(lows, tight_low);
        std::swap(highs, tight_high);
        current.pop_back();
    }
};

}  // namespace

std::vector<Word> enumerate_language(const Word& d, std::uint64_t n, std::uint64_t cap) {
    if (!classify_lyndon(d).is_lyndon())
        throw std::domain_error("enumerate_language: generator must be an alternate Lyndon word");
    mpz_class states;
    mpz_ui_pow_ui(states.get_mpz_t(), d.letter_at(1) + 1, static_cast<unsigned long>(n));
    if (states > cap) throw std::domain_error("enumerate_language: enumeration cap exceeded");
    std::vector<Word> out;
    Enumerator e{d, n, {}, {}, {}, &out};
    e.run();
    std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
        return compare_range([&](std::uint64_t k) { return a.letter_at(k); },
                             [&](std::uint64_t k) { return b.letter_at(k); }, n) == Rel::Less;
    });
    return out;
}

CountTable count_by_enumeration(const Word& d, std::uint64_t n, std::uint64_t cap) {
    CountTable table{d, {}, CountSource::Enumeration};
    for (std::uint64_t k = 0; k <= n; ++k)
        table.values.emplace_back(enumerate_language(d, k, cap).size());
    return table;
}

std::pair<Word, Word> extremal_neighbors(Letter a, const Word& d, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("extremal_neighbors: n must be positive");
    if (a == 0 || a > d.letter_at(1))
        throw std::domain_error("extremal_neighbors: a must be in [1, d_1]");
    std::vector<Letter> top{a};
    for (std::uint64_t k = 1; k + 1 <= n; ++k) top.push_back(d.letter_at(k));
    std::vector<Letter> bottom{static_cast<Letter>(a - 1)};
    if (n >= 2) bottom.push_back(0);
    for (std::uint64_t k = 1; k + 2 <= n; ++k) bottom.push_back(d.letter_at(k));
    return {Word::finite(std::move(top)), Word::finite(std::move(bottom))};
}

}  // namespace lynsys
