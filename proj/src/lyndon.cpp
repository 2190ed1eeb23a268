#include "lynsys/lyndon.hpp"

#include <stdexcept>

namespace lynsys {

namespace {

// Finite words are read through their zero padding when used as generators.
Word as_generator(const Word& w) {
    if (!w.is_finite()) return w;
    return Word::eventually_periodic(w.preperiod(), {0});
}

// The d* construction without Lyndon validation, with the all-zero word
// passed through unchanged; admissible() needs the formula on inputs the
// public dstar rejects.
Word dstar_formula(const Word& v) {
    if (!v.is_purely_periodic()) return v;
    const std::vector<Letter>& per = v.period();
    if (per.size() % 2 == 0) return v;
    if (per.back() == 0) return v;
    std::vector<Letter> lowered = per;
    --lowered.back();
    lowered.push_back(0);
    return Word::eventually_periodic({}, std::move(lowered));
}

}  // namespace

LyndonClass classify_lyndon(const Word& w) {
    Word v = as_generator(w);
    std::uint64_t total = v.preperiod().size() + v.period().size();
    std::uint64_t weak_period = 0;
    for (std::uint64_t k = 1; k <= total; ++k) {
        OrderOutcome o = alt_compare(v, v.shifted(k));
        if (o.relation == Rel::Greater) return {LyndonClass::Kind::NotLyndon, k};
        if (o.relation == Rel::Equal && weak_period == 0) weak_period = k;
    }
    if (weak_period != 0) return {LyndonClass::Kind::Weak, weak_period};
    return {LyndonClass::Kind::Strong, 0};
}

std::optional<Word> uu_prefix_collapse(const Word& w) {
    Word v = as_generator(w);
    std::uint64_t checked = 2 * (v.preperiod().size() + v.period().size()) + 8;
    for (std::uint64_t len = 1; 2 * len <= checked; len += 2) {
        bool square = true;
        for (std::uint64_t i = 1; i <= len && square; ++i)
            square = v.letter_at(i) == v.letter_at(i + len);
        if (!square) continue;
        std::vector<Letter> u(len);
        for (std::uint64_t i = 0; i < len; ++i) u[i] = v.letter_at(i + 1);
        return Word::eventually_periodic({}, std::move(u));
    }
    return std::nullopt;
}

Word dstar(const Word& d) {
    Word v = as_generator(d);
    if (!classify_lyndon(v).is_lyndon())
        throw std::domain_error("dstar: input is not an alternate Lyndon word");
    if (v.is_purely_periodic() && v.period().size() % 2 == 1 && v.period().back() == 0)
        throw std::domain_error(
            "dstar: odd minimal period ending in 0 (a zero-entropy word, no base attached)");
    return dstar_formula(v);
}

Word rstar(const Word& d) { return Word::finite({0}).concat(dstar(d)); }

LynBounds lyn_bounds(const Word& a) {
    LyndonClass cls = classify_lyndon(a);
    if (cls.kind != LyndonClass::Kind::Weak || !a.is_purely_periodic())
        throw std::domain_error("lyn_bounds: companion must be a purely periodic weak Lyndon word");
    const std::vector<Letter>& base = a.period();
    std::uint64_t k = base.size();
    if (base.back() == 0)
        throw std::domain_error("lyn_bounds: last period letter must be nonzero");
    std::vector<Letter> lowered = base;
    --lowered.back();
    lowered.push_back(0);
    if (k % 2 == 0) {
        Word min = Word::finite(lowered).concat(a);
        return {std::move(min), a};
    }
    Word max = Word::eventually_periodic({}, lowered);
    Word min = Word::finite(base).concat(max);
    return {std::move(min), std::move(max)};
}

std::uint64_t in_lyn_default_bound(const Word& d) {
    Word v = as_generator(d);
    return v.preperiod().size() + 2 * v.period().size() + 8;
}

LynSearch in_lyn(const Word& d) { return in_lyn(d, in_lyn_default_bound(d)); }

LynSearch in_lyn(const Word& d, std::uint64_t max_period) {
    Word v = as_generator(d);
    LynSearch result;
    result.searched_to = max_period;
    for (std::uint64_t k = 1; k <= max_period; ++k) {
        for (Letter delta = 0; delta <= 1; ++delta) {
            // Any companion shares the first k-1 letters of d, and its k-th
            // letter can exceed d_k by at most one.
            Letter ak = v.letter_at(k) + delta;
            if (ak == 0 || ak > kLetterCap) continue;
            std::vector<Letter> letters(k);
            for (std::uint64_t i = 0; i + 1 < k; ++i) letters[i] = v.letter_at(i + 1);
            letters[k - 1] = ak;
            Word cand = Word::eventually_periodic({}, std::move(letters));
            if (cand.period().size() != k) continue;  // minimal period must be k
            if (classify_lyndon(cand).kind != LyndonClass::Kind::Weak) continue;
            LynBounds bounds = lyn_bounds(cand);
            if (alt_compare_vs_phi_limit(bounds.max).relation != Rel::Less) continue;
            if (alt_compare(bounds.min, v).relation == Rel::Greater) continue;
            if (alt_compare(v, bounds.max).relation == Rel::Greater) continue;
            if (alt_compare(v, cand).relation == Rel::Equal) continue;
            if (classify_lyndon(v).is_lyndon() &&
                alt_compare_vs_phi_limit(v).relation == Rel::Less) {
                // Both words attach to the same base; disjoint enclosures
                // would mean the interval characterization broke down.
                BetaCertificate bd = compute_beta(v);
                BetaCertificate bw = compute_beta(cand);
                if (!bd.enclosure().intersects(bw.enclosure()))
                    throw std::logic_error("in_lyn: witness attaches to a different base");
            }
            result.status = LynSearch::Status::Witness;
            result.witness = std::move(cand);
            return result;
        }
    }
    result.status = max_period >= in_lyn_default_bound(d) ? LynSearch::Status::None
                                                          : LynSearch::Status::Unknown;
    return result;
}

EntropySign entropy_sign(const Word& d) {
    Word v = as_generator(d);
    if (!classify_lyndon(v).is_lyndon())
        throw std::domain_error("entropy_sign: input is not an alternate Lyndon word");
    EntropySign sign;
    if (alt_compare_vs_phi_limit(v).relation == Rel::Less) {
        sign.positive = true;
        return sign;
    }
    if (alt_compare(v, Word::eventually_periodic({}, {0})).relation == Rel::Equal) {
        sign.family = EntropySign::ZeroFamily::AllZero;
        return sign;
    }
    if (v.is_purely_periodic()) {
        std::uint64_t q = v.period().size();
        for (unsigned n = 0; phi_power_length(n) <= q; ++n) {
            if (phi_power_length(n) == q && v.period() == phi_power(n).preperiod()) {
                sign.family = EntropySign::ZeroFamily::PhiPower;
                sign.phi_index = n;
                return sign;
            }
        }
    }
    throw std::logic_error("entropy_sign: zero-entropy verdict outside the known family");
}

AdmissibilityReport admissible(const Word& d, unsigned bits) {
    Word v = as_generator(d);
    AdmissibilityReport report;

    Word upper = Word::finite({0}).concat(dstar_formula(v));
    std::uint64_t total = v.preperiod().size() + v.period().size();
    report.cond_a = true;
    for (std::uint64_t k = 0; k < total; ++k) {
        Word s = v.shifted(k);
        if (alt_compare(v, s).relation == Rel::Greater ||
            alt_compare(s, upper).relation != Rel::Less) {
            report.cond_a = false;
            report.failing_shift = k + 1;
            break;
        }
    }

    LynSearch search = in_lyn(v);
    if (search.status == LynSearch::Status::Witness) {
        report.cond_b = false;
        report.lyn_witness = search.witness;
    } else if (search.status == LynSearch::Status::None) {
        report.cond_b = true;
    } else {
        report.cond_b = false;
        report.lyn_unknown = true;
    }

    report.cond_c = alt_compare_vs_phi_limit(v).relation == Rel::Less;

    if (report.cond_c && classify_lyndon(v).is_lyndon()) report.beta = compute_beta(v, bits);
    return report;
}

}  // namespace lynsys
