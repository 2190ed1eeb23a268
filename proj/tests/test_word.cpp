#include <doctest.h>

#include <random>

#include "lynsys/word.hpp"

using namespace lynsys;

namespace {

std::string letters_string(const std::vector<Letter>& v) {
    std::string s;
    for (Letter a : v) s += static_cast<char>('0' + a);
    return s;
}

// Independent reading of a word's letter stream, for normal-form checks.
std::vector<Letter> stream_prefix(const std::vector<Letter>& pre, const std::vector<Letter>& per,
                                  std::size_t n) {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < pre.size())
            out.push_back(pre[i]);
        else if (per.empty())
            out.push_back(0);
        else
            out.push_back(per[(i - pre.size()) % per.size()]);
    }
    return out;
}

Word random_word(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pre_len(0, 4), per_len(0, 4), letter(0, 3);
    std::vector<Letter> pre(static_cast<std::size_t>(pre_len(rng)));
    std::vector<Letter> per(static_cast<std::size_t>(per_len(rng)));
    for (Letter& a : pre) a = static_cast<Letter>(letter(rng));
    for (Letter& a : per) a = static_cast<Letter>(letter(rng));
    if (per.empty()) return Word::finite(pre);
    return Word::eventually_periodic(pre, per);
}

}  // namespace

TEST_CASE("parsing the word grammar") {
    Word w = Word::parse("(10)");
    CHECK(w.preperiod().empty());
    CHECK(w.period() == std::vector<Letter>{1, 0});

    // The period of 100(11) collapses to its primitive root.
    Word u = Word::parse("100(11)");
    CHECK(u.preperiod() == std::vector<Letter>{1, 0, 0});
    CHECK(u.period() == std::vector<Letter>{1});

    CHECK(Word::parse("2") == Word::finite({2}));
    CHECK(Word::parse("(2)") == Word::eventually_periodic({}, {2}));
    CHECK(Word::parse("10,2,3") == Word::finite({10, 2, 3}));
    CHECK(Word::parse("") == Word());
}

TEST_CASE("normalization agrees with the letter-stream oracle") {
    // 1(0101) and (10) spell the same stream
    Word a = Word::parse("1(0101)");
    Word b = Word::parse("(10)");
    auto sa = stream_prefix({1}, {0, 1, 0, 1}, 10);
    auto sb = stream_prefix({}, {1, 0}, 10);
    CHECK(sa == sb);
    CHECK(a == b);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        std::uniform_int_distribution<int> pre_len(0, 4), per_len(1, 4), letter(0, 2);
        std::vector<Letter> pre(static_cast<std::size_t>(pre_len(rng)));
        std::vector<Letter> per(static_cast<std::size_t>(per_len(rng)));
        for (Letter& x : pre) x = static_cast<Letter>(letter(rng));
        for (Letter& x : per) x = static_cast<Letter>(letter(rng));
        Word w = Word::eventually_periodic(pre, per);
        // same stream as the raw presentation
        std::size_t n = pre.size() + 2 * per.size() + 4;
        auto raw = stream_prefix(pre, per, n);
        for (std::size_t i = 0; i < n; ++i) CHECK(w.letter_at(i + 1) == raw[i]);
        // normalizing twice changes nothing, and render round-trips
        CHECK(Word::eventually_periodic(w.preperiod(), w.period()) == w);
        CHECK(Word::parse(w.render()) == w);
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(Word::parse("1(2"), parse_error);
    CHECK_THROWS_AS(Word::parse("()"), parse_error);
    CHECK_THROWS_AS(Word::parse("1x2"), parse_error);
    CHECK_THROWS_AS(Word::parse("(1)2"), parse_error);
    CHECK_THROWS_AS(Word::parse("70000,1"), parse_error);  // beyond the letter cap
    try {
        Word::parse("12x4");
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("letter_at pads finite words with zeros") {
    CHECK(Word::parse("(10)").letter_at(3) == 1);
    CHECK(Word::parse("2").letter_at(5) == 0);
    CHECK(Word::parse("100(11)").letter_at(4) == 1);
}

TEST_CASE("shift renormalizes") {
    CHECK(Word::parse("(10)").shifted(1) == Word::parse("(01)"));
    CHECK(Word::parse("100(11)").shifted(3) == Word::parse("(1)"));
    CHECK(Word::parse("(10)").shifted(2) == Word::parse("(10)"));
    CHECK(Word::parse("21").shifted(5) == Word());

    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        Word w = random_word(rng);
        std::uniform_int_distribution<std::uint64_t> k_dist(0, 9);
        std::uint64_t k = k_dist(rng);
        Word s = w.shifted(k);
        for (std::uint64_t i = 1; i <= 12; ++i) CHECK(s.letter_at(i) == w.letter_at(i + k));
    }
}

TEST_CASE("phi powers") {
    CHECK(phi_power(0) == Word::parse("1"));
    CHECK(phi_power(1) == Word::parse("100"));

    // apply the morphism letterwise as an oracle
    auto apply_phi = [](const std::vector<Letter>& v) {
        std::vector<Letter> out;
        for (Letter a : v) {
            if (a == 1) {
                out.insert(out.end(), {1, 0, 0});
            } else {
                out.push_back(1);
            }
        }
        return out;
    };
    std::vector<Letter> u{1};
    for (unsigned n = 1; n <= 10; ++n) {
        u = apply_phi(u);
        CHECK(phi_power(n).preperiod() == u);
    }
    CHECK(letters_string(phi_power(2).preperiod()) == "10011");

    CHECK_THROWS_AS(phi_power(5, 4), std::domain_error);
    CHECK(phi_v(0) == Word::parse("00"));
    CHECK(phi_v(1) == Word::parse("11"));
    CHECK(phi_v(2) == Word::parse("100100"));
}

TEST_CASE("phi power structure") {
    for (unsigned n = 2; n <= 12; ++n) {
        Word a = phi_power(n - 1), b = phi_power(n - 2);
        Word expected = a.concat(b).concat(b);
        CHECK(phi_power(n) == expected);
    }
    // every u_n is a prefix of the fixed point
    for (unsigned n = 0; n <= 12; ++n) {
        auto u = phi_power(n).preperiod();
        auto prefix = phi_limit_prefix(u.size());
        CHECK(u == prefix);
    }
}

TEST_CASE("fixed point prefix") {
    CHECK(letters_string(phi_limit_prefix(6)) == "100111");
    CHECK(letters_string(phi_limit_prefix(43)) == "1001110010010011100111001110010010011100100");
    CHECK(letters_string(phi_limit_prefix(1)) == "1");
    // prefix property under extension
    auto p20 = phi_limit_prefix(20);
    auto p200 = phi_limit_prefix(200);
    CHECK(std::equal(p20.begin(), p20.end(), p200.begin()));
}

TEST_CASE("run lengths of the Thue-Morse word") {
    // independent oracle: build Thue-Morse by the morphism 0 -> 01, 1 -> 10
    std::vector<int> tm{0};
    for (int it = 0; it < 12; ++it) {
        std::vector<int> next;
        for (int b : tm) {
            next.push_back(b);
            next.push_back(1 - b);
        }
        tm = std::move(next);
    }
    std::vector<Letter> runs;
    for (std::size_t i = 0; i < tm.size() && runs.size() < 64;) {
        std::size_t j = i;
        while (j < tm.size() && tm[j] == tm[i]) ++j;
        runs.push_back(static_cast<Letter>(j - i));
        i = j;
    }
    auto got = thue_morse_runlengths(64);
    CHECK(got == runs);
    CHECK(thue_morse_runlengths(5) == std::vector<Letter>{1, 2, 1, 1, 2});
    CHECK(thue_morse_runlengths(1) == std::vector<Letter>{1});

    // dropping the leading 1 and recoding 2 -> 1, 1 -> 0 recovers the fixed point
    auto w = thue_morse_runlengths(40);
    auto prefix = phi_limit_prefix(39);
    CHECK(w[0] == 1);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(w[i + 1] == prefix[i] + 1);
}

TEST_CASE("alphabet and stream equality") {
    CHECK(Word::parse("102(3)").alphabet_max() == 3);
    CHECK(Word::parse("2").same_stream(Word::parse("2(0)")));
    CHECK(Word::parse("2").same_stream(Word::parse("20")));
    CHECK_FALSE(Word::parse("2") == Word::parse("2(0)"));
    CHECK_FALSE(Word::parse("2").same_stream(Word::parse("(2)")));
}
