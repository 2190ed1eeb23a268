#include <doctest.h>

#include <random>
#include <set>

#include "lynsys/counting.hpp"
#include "lynsys/lyndon.hpp"
#include "lynsys/order.hpp"

using namespace lynsys;

TEST_CASE("count recurrence") {
    CountTable t = count_recurrence(Word::parse("(10)"), 3);
    CHECK(t.values == std::vector<mpz_class>{1, 2, 4, 8});

    CHECK(count_recurrence(Word::parse("(2)"), 2).values[1] == 3);
    CHECK(count_recurrence(Word::parse("100(11)"), 0).values == std::vector<mpz_class>{1});
    CHECK(count_recurrence(Word::parse("(0)"), 5).values ==
          std::vector<mpz_class>{1, 1, 1, 1, 1, 1});

    CHECK_THROWS_AS(count_recurrence(Word::parse("(01)"), 3), std::domain_error);
}

TEST_CASE("interval counts") {
    Word d = Word::parse("(10)");
    CHECK(count_interval(Word::parse("10"), Word::parse("10"), d) == 1);
    CHECK(count_interval(Word::parse("10"), Word::parse("01"), d) == 4);
    CHECK(count_interval(Word::parse("2"), Word::parse("0"), Word::parse("(2)")) == 3);

    CHECK_THROWS_AS(count_interval(Word::parse("01"), Word::parse("10"), d), std::domain_error);
    CHECK_THROWS_AS(count_interval(Word::parse("21"), Word::parse("22"), Word::parse("(2)")),
                    std::domain_error);
}

TEST_CASE("enumeration") {
    std::vector<Word> one = enumerate_language(Word::parse("(10)"), 1);
    CHECK(one == std::vector<Word>{Word::parse("1"), Word::parse("0")});

    std::vector<Word> three = enumerate_language(Word::parse("(2)"), 1);
    CHECK(three == std::vector<Word>{Word::parse("2"), Word::parse("1"), Word::parse("0")});

    std::vector<Word> empty_word = enumerate_language(Word::parse("100(11)"), 0);
    CHECK(empty_word.size() == 1);
    CHECK(empty_word[0] == Word());

    CHECK_THROWS_AS(enumerate_language(Word::parse("(2)"), 20), std::domain_error);
}

TEST_CASE("extremal neighbor pairs") {
    auto [a1, b1] = extremal_neighbors(1, Word::parse("(10)"), 3);
    CHECK(a1 == Word::parse("110"));
    CHECK(b1 == Word::parse("001"));

    auto [a2, b2] = extremal_neighbors(2, Word::parse("(2)"), 2);
    CHECK(a2 == Word::parse("22"));
    CHECK(b2 == Word::parse("10"));

    auto [a3, b3] = extremal_neighbors(1, Word::parse("(2)"), 1);
    CHECK(a3 == Word::parse("1"));
    CHECK(b3 == Word::parse("0"));

    CHECK_THROWS_AS(extremal_neighbors(0, Word::parse("(10)"), 3), std::domain_error);
    CHECK_THROWS_AS(extremal_neighbors(2, Word::parse("(10)"), 3), std::domain_error);
}

namespace {

std::vector<Word> lyndon_generators(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pre_len(0, 2), per_len(1, 3), letter(0, 2);
    std::vector<Word> out;
    while (out.size() < count) {
        std::vector<Letter> pre(static_cast<std::size_t>(pre_len(rng)));
        std::vector<Letter> per(static_cast<std::size_t>(per_len(rng)));
        for (Letter& a : pre) a = static_cast<Letter>(letter(rng));
        for (Letter& a : per) a = static_cast<Letter>(letter(rng));
        Word w = Word::eventually_periodic(pre, per);
        if (classify_lyndon(w).is_lyndon()) out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

TEST_CASE("recurrence equals enumeration") {
    for (const Word& d : lyndon_generators(77, 12)) {
        CountTable fast = count_recurrence(d, 12);
        CountTable slow = count_by_enumeration(d, 12);
        CHECK(fast.values == slow.values);
        CHECK(slow.source == CountSource::Enumeration);
    }
}

TEST_CASE("language structure") {
    for (const Word& d : lyndon_generators(78, 6)) {
        std::vector<Word> at5 = enumerate_language(d, 5);
        std::vector<Word> at4 = enumerate_language(d, 4);
        std::set<std::vector<Letter>> at4_set, at5_set;
        for (const Word& w : at4) at4_set.insert(w.preperiod());
        for (const Word& w : at5) at5_set.insert(w.preperiod());

        for (const Word& w : at5) {
            // factorial: both length-4 factors occur
            std::vector<Letter> head(w.preperiod().begin(), w.preperiod().end() - 1);
            std::vector<Letter> tail(w.preperiod().begin() + 1, w.preperiod().end());
            CHECK(at4_set.count(head) == 1);
            CHECK(at4_set.count(tail) == 1);
        }
        for (const Word& w : at4) {
            // extendable on the right, and 0w is always admissible
            bool extends = false;
            for (Letter c = 0; c <= d.letter_at(1) && !extends; ++c) {
                std::vector<Letter> v = w.preperiod();
                v.push_back(c);
                extends = at5_set.count(v) == 1;
            }
            CHECK(extends);
            std::vector<Letter> zw{0};
            zw.insert(zw.end(), w.preperiod().begin(), w.preperiod().end());
            CHECK(at5_set.count(zw) == 1);
        }
    }
}

TEST_CASE("interval counts match sorted positions") {
    std::mt19937_64 rng(79);
    for (const Word& d : lyndon_generators(80, 8)) {
        std::vector<Word> words = enumerate_language(d, 5);
        std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
        for (int t = 0; t < 12; ++t) {
            std::size_t i = pick(rng), j = pick(rng);
            if (i > j) std::swap(i, j);
            CHECK(count_interval(words[i], words[j], d) ==
                  mpz_class(static_cast<unsigned long>(j - i + 1)));
        }
    }
}

TEST_CASE("extremal pairs are consecutive in the sorted language") {
    for (const Word& d : lyndon_generators(81, 8)) {
        if (d.letter_at(1) == 0) continue;
        std::vector<Word> words = enumerate_language(d, 4);
        for (Letter a = 1; a <= d.letter_at(1); ++a) {
            auto [top, bottom] = extremal_neighbors(a, d, 4);
            auto at = [&](const Word& w) {
                return std::find(words.begin(), words.end(), w) - words.begin();
            };
            std::ptrdiff_t i = at(top), j = at(bottom);
            CHECK(i + 1 == j);
        }
    }
}
