#pragma once

// Finite and eventually periodic words over a small nonnegative-integer
// alphabet, plus the morphic machinery around phi (0 -> 1, 1 -> 100).
//
// A Word is immutable and always kept in normal form:
//   * the period is primitive (not a power of a shorter word),
//   * the preperiod is as short as possible (a trailing preperiod letter
//     equal to the last period letter is absorbed by rotating the period).
// With those two rules the representation of a letter stream is unique, so
// structural equality of normalized Words is equality of streams -- except
// that finiteness stays explicit: the finite word "2" and the eventually
// periodic "2(0)" are distinct Words describing the same padded stream.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lynsys {

using Letter = std::uint32_t;

// Letters are digits of an expansion; realistic bases are tiny, the cap
// guards against pathological memory use.
inline constexpr Letter kLetterCap = 65535;

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class Word {
public:
    Word() = default;  // the empty finite word

    static Word finite(std::vector<Letter> letters);
    static Word eventually_periodic(std::vector<Letter> preperiod, std::vector<Letter> period);

    // Grammar:  word := block? ( '(' block ')' )?
    //           block := letter (',' letter)* | digitrun
    // A digitrun is a string of single digits 0-9, one letter per digit; the
    // comma form admits multi-digit letters. The parenthesized block is the
    // period, repeated forever. The empty string denotes the empty word.
    static Word parse(std::string_view text, Letter max_letter = kLetterCap);

    const std::vector<Letter>& preperiod() const { return preperiod_; }
    const std::vector<Letter>& period() const { return period_; }

    bool is_finite() const { return period_.empty(); }
    bool is_purely_periodic() const { return preperiod_.empty() && !period_.empty(); }
    bool empty() const { return preperiod_.empty() && period_.empty(); }

    // Number of explicitly stored letters (|preperiod| + |period|).
    std::size_t stored_size() const { return preperiod_.size() + period_.size(); }

    // 1-based letter of the infinite stream; a finite word is padded with
    // zeros on the right.
    Letter letter_at(std::uint64_t i) const;

    // Largest letter value (0 for the empty word). For a Lyndon generator
    // this coincides with the first letter, which bounds the alphabet.
    Letter alphabet_max() const;

    // The word (x_{i+k})_{i>=1}, renormalized. Shifting a finite word past
    // its end yields the empty word.
    Word shifted(std::uint64_t k) const;

    // this must be finite; the result is this . tail.
    Word concat(const Word& tail) const;

    std::string render() const;

    // Structural equality of normal forms.
    bool operator==(const Word&) const = default;

    // Zero-padded letter-stream equality (so "2" and "2(0)" compare equal).
    bool same_stream(const Word& other) const;

private:
    std::vector<Letter> preperiod_;
    std::vector<Letter> period_;

    void normalize();
};

// ---- morphic words -------------------------------------------------------
//
// phi(0) = 1, phi(1) = 100; u_n = phi^n(1), v_0 = 00, v_n = u_{n-1}u_{n-1}.
// |u_n| = 2|u_{n-1}| - (-1)^n is always odd, and u_n is a prefix of u_{n+1},
// so the fixed point phi^inf(1) is approximated by any u_n prefix.
//
// The cache behind these functions is guarded by a mutex; concurrent readers
// always observe a consistent prefix.

inline constexpr unsigned kPhiPowerCap = 40;
inline constexpr std::uint64_t kPhiPrefixCap = 1u << 26;

// u_n as a finite word.
Word phi_power(unsigned n, unsigned cap = kPhiPowerCap);
// v_n as a finite word.
Word phi_v(unsigned n, unsigned cap = kPhiPowerCap);
// |u_n| without materializing the word (n <= 63).
std::uint64_t phi_power_length(unsigned n);

// First L letters of phi^inf(1); consistent under extension.
std::vector<Letter> phi_limit_prefix(std::uint64_t L);
// 1-based letter of phi^inf(1).
Letter phi_limit_letter(std::uint64_t i);

// First L terms of the run-length sequence of the Thue-Morse word
// t = 0110100110010110...; test utility for the run-length identity
// w = 1 s, where s is phi^inf(1) recoded by 1 -> 2, 0 -> 1.
std::vector<Letter> thue_morse_runlengths(std::uint64_t L);

}  // namespace lynsys
