#include "lynsys/word.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <mutex>
#include <numeric>

namespace lynsys {

namespace {

bool is_power_of_prefix(const std::vector<Letter>& v, std::size_t d) {
    if (v.size() % d != 0) return false;
    for (std::size_t i = d; i < v.size(); ++i)
        if (v[i] != v[i - d]) return false;
    return true;
}

}  // namespace

void Word::normalize() {
    if (!period_.empty()) {
        for (std::size_t d = 1; d < period_.size(); ++d) {
            if (is_power_of_prefix(period_, d)) {
                period_.resize(d);
                break;
            }
        }
        while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
            // absorb the trailing preperiod letter by rotating the period
            std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
            preperiod_.pop_back();
        }
    }
}

Word Word::finite(std::vector<Letter> letters) {
    Word w;
    w.preperiod_ = std::move(letters);
    return w;
}

Word Word::eventually_periodic(std::vector<Letter> preperiod, std::vector<Letter> period) {
    Word w;
    w.preperiod_ = std::move(preperiod);
    w.period_ = std::move(period);
    w.normalize();
    return w;
}

Letter Word::letter_at(std::uint64_t i) const {
    if (i == 0) throw std::invalid_argument("letter_at: indices are 1-based");
    std::uint64_t k = i - 1;
    if (k < preperiod_.size()) return preperiod_[k];
    if (period_.empty()) return 0;
    return period_[(k - preperiod_.size()) % period_.size()];
}

Letter Word::alphabet_max() const {
    Letter m = 0;
    for (Letter a : preperiod_) m = std::max(m, a);
    for (Letter a : period_) m = std::max(m, a);
    return m;
}

Word Word::shifted(std::uint64_t k) const {
    if (k == 0) return *this;
    if (period_.empty()) {
        if (k >= preperiod_.size()) return Word();
        return finite({preperiod_.begin() + static_cast<std::ptrdiff_t>(k), preperiod_.end()});
    }
    std::vector<Letter> pre;
    std::vector<Letter> per = period_;
    if (k < preperiod_.size()) {
        pre.assign(preperiod_.begin() + static_cast<std::ptrdiff_t>(k), preperiod_.end());
    } else {
        std::uint64_t r = (k - preperiod_.size()) % period_.size();
        std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(r), per.end());
    }
    return eventually_periodic(std::move(pre), std::move(per));
}

Word Word::concat(const Word& tail) const {
    if (!is_finite()) throw std::invalid_argument("concat: prefix must be finite");
    std::vector<Letter> pre = preperiod_;
    pre.insert(pre.end(), tail.preperiod_.begin(), tail.preperiod_.end());
    if (tail.is_finite()) return finite(std::move(pre));
    return eventually_periodic(std::move(pre), tail.period_);
}

bool Word::same_stream(const Word& other) const {
    // Beyond the longer preperiod both streams are periodic (a finite word
    // is periodic with period 1, all zeros), so agreement up to
    // max(preperiods) + lcm(periods) letters forces equality.
    std::uint64_t p = std::max(preperiod_.size(), other.preperiod_.size());
    std::uint64_t qa = period_.empty() ? 1 : period_.size();
    std::uint64_t qb = other.period_.empty() ? 1 : other.period_.size();
    std::uint64_t n = p + std::lcm(qa, qb);
    for (std::uint64_t i = 1; i <= n; ++i)
        if (letter_at(i) != other.letter_at(i)) return false;
    return true;
}

namespace {

std::vector<Letter> parse_block(std::string_view text, std::size_t begin, std::size_t end,
                                Letter max_letter) {
    std::vector<Letter> out;
    std::size_t i = begin;
    while (i < end && text[i] == ' ') ++i;
    std::size_t j = end;
    while (j > i && text[j - 1] == ' ') --j;
    if (i == j) return out;
    std::string_view body = text.substr(i, j - i);
    bool comma_form = body.find(',') != std::string_view::npos;
    if (comma_form) {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = body.find(',', pos);
            std::size_t stop = comma == std::string_view::npos ? body.size() : comma;
            std::size_t a = pos, b = stop;
            while (a < b && body[a] == ' ') ++a;
            while (b > a && body[b - 1] == ' ') --b;
            if (a == b) throw parse_error("empty letter", i + pos);
            unsigned long value = 0;
            auto [ptr, ec] = std::from_chars(body.data() + a, body.data() + b, value);
            if (ec != std::errc() || ptr != body.data() + b)
                throw parse_error("malformed letter", i + a);
            if (value > max_letter) throw parse_error("letter exceeds maximum", i + a);
            out.push_back(static_cast<Letter>(value));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    } else {
        for (std::size_t k = 0; k < body.size(); ++k) {
            char c = body[k];
            if (c == ' ') continue;
            if (c < '0' || c > '9') throw parse_error("expected digit", i + k);
            Letter value = static_cast<Letter>(c - '0');
            if (value > max_letter) throw parse_error("letter exceeds maximum", i + k);
            out.push_back(value);
        }
    }
    return out;
}

}  // namespace

Word Word::parse(std::string_view text, Letter max_letter) {
    max_letter = std::min(max_letter, kLetterCap);
    std::size_t open = text.find('(');
    if (open == std::string_view::npos) {
        if (text.find(')') != std::string_view::npos)
            throw parse_error("unmatched ')'", text.find(')'));
        return finite(parse_block(text, 0, text.size(), max_letter));
    }
    std::size_t close = text.find(')', open + 1);
    if (close == std::string_view::npos) throw parse_error("missing ')'", text.size());
    for (std::size_t k = close + 1; k < text.size(); ++k)
        if (text[k] != ' ') throw parse_error("trailing characters after period", k);
    if (text.find('(', open + 1) != std::string_view::npos)
        throw parse_error("nested '('", text.find('(', open + 1));
    std::vector<Letter> pre = parse_block(text, 0, open, max_letter);
    std::vector<Letter> per = parse_block(text, open + 1, close, max_letter);
    if (per.empty()) throw parse_error("empty period", open + 1);
    return eventually_periodic(std::move(pre), std::move(per));
}

std::string Word::render() const {
    bool comma_form = alphabet_max() > 9;
    auto emit = [&](const std::vector<Letter>& block, std::string& out) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (comma_form && i > 0) out += ',';
            out += std::to_string(block[i]);
        }
    };
    std::string out;
    emit(preperiod_, out);
    if (!period_.empty()) {
        out += '(';
        emit(period_, out);
        out += ')';
    }
    return out;
}

// ---- morphic words -------------------------------------------------------

namespace {

// u_0, u_1, ... materialized so far; u_{n+1} = u_n u_{n-1} u_{n-1}.
struct PhiCache {
    std::mutex mutex;
    std::vector<std::vector<Letter>> u{{1}, {1, 0, 0}};

    // Extends the cache until |u_n| >= want or n == max_index.
    void extend(std::uint64_t want, std::size_t max_index) {
        while (u.back().size() < want && u.size() - 1 < max_index) {
            const std::vector<Letter>& a = u[u.size() - 1];
            const std::vector<Letter>& b = u[u.size() - 2];
            std::vector<Letter> next;
            next.reserve(a.size() + 2 * b.size());
            next.insert(next.end(), a.begin(), a.end());
            next.insert(next.end(), b.begin(), b.end());
            next.insert(next.end(), b.begin(), b.end());
            u.push_back(std::move(next));
        }
    }
};

PhiCache& phi_cache() {
    static PhiCache cache;
    return cache;
}

}  // namespace

std::uint64_t phi_power_length(unsigned n) {
    if (n > 63) throw std::domain_error("phi_power_length: n too large");
    std::uint64_t len = 1;
    for (unsigned k = 1; k <= n; ++k) len = 2 * len - (k % 2 == 0 ? 1 : -1);
    return len;
}

Word phi_power(unsigned n, unsigned cap) {
    if (n > cap) throw std::domain_error("phi_power: n exceeds configured cap");
    if (n > 63 || phi_power_length(n) > kPhiPrefixCap)
        throw std::domain_error("phi_power: refusing to materialize a word this long");
    PhiCache& cache = phi_cache();
    std::scoped_lock lock(cache.mutex);
    cache.extend(phi_power_length(n), n);
    return Word::finite(cache.u[n]);
}

Word phi_v(unsigned n, unsigned cap) {
    if (n == 0) return Word::finite({0, 0});
    Word u = phi_power(n - 1, cap);
    return u.concat(u);
}

std::vector<Letter> phi_limit_prefix(std::uint64_t L) {
    if (L > kPhiPrefixCap) throw std::domain_error("phi_limit_prefix: length cap exceeded");
    PhiCache& cache = phi_cache();
    std::scoped_lock lock(cache.mutex);
    cache.extend(L, 200);
    const std::vector<Letter>& u = cache.u.back();
    if (u.size() < L) throw std::domain_error("phi_limit_prefix: length cap exceeded");
    return {u.begin(), u.begin() + static_cast<std::ptrdiff_t>(L)};
}

Letter phi_limit_letter(std::uint64_t i) {
    if (i == 0) throw std::invalid_argument("phi_limit_letter: indices are 1-based");
    PhiCache& cache = phi_cache();
    std::scoped_lock lock(cache.mutex);
    cache.extend(i, 200);
    return cache.u.back()[i - 1];
}

std::vector<Letter> thue_morse_runlengths(std::uint64_t L) {
    // t_n = parity of the binary weight of n; runs of equal symbols.
    std::vector<Letter> out;
    out.reserve(L);
    std::uint64_t n = 0;
    auto t = [](std::uint64_t k) { return std::popcount(k) & 1u; };
    while (out.size() < L) {
        std::uint64_t m = n + 1;
        while (t(m) == t(n)) ++m;
        out.push_back(static_cast<Letter>(m - n));
        n = m;
    }
    return out;
}

}  // namespace lynsys
