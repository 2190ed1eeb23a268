#include <map>

#include "lynsys/algebraic.hpp"
#include "lynsys/numeric.hpp"

// The (-beta)-transformation T(x) = -beta x - floor(-beta x - l) on
// [l, r) with l = -beta/(beta+1), r = 1/(beta+1). Orbits are tracked in one
// of three representations: exact rationals (rational beta), ring elements
// modulo the certificate polynomial (small-degree algebraic beta), or plain
// enclosures (fallback, no certified period detection).

namespace lynsys {

namespace {

mpz_class floor_q(const mpq_class& q) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Letter digit_from_integer(const mpz_class& t) {
    if (t < 0 || t > kLetterCap)
        throw std::domain_error("expansion digit out of range; point not in [l, r)");
    return static_cast<Letter>(t.get_ui());
}

Word word_from_cycle(const std::vector<Letter>& digits, std::size_t cycle_start) {
    std::vector<Letter> pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(cycle_start));
    std::vector<Letter> per(digits.begin() + static_cast<std::ptrdiff_t>(cycle_start), digits.end());
    return Word::eventually_periodic(std::move(pre), std::move(per));
}

Expansion expand_rational(const ExpansionStart& start, const mpq_class& b,
                          std::uint64_t max_digits) {
    mpq_class r = 1 / (b + 1);
    mpq_class l = r - 1;
    mpq_class x;
    if (std::holds_alternative<EndpointKeyword>(start))
        x = std::get<EndpointKeyword>(start) == EndpointKeyword::Left ? l : r;
    else
        x = std::get<mpq_class>(start);

    Expansion out;
    while (!(l <= x && x < r)) {
        x /= -b;
        if (++out.integer_digits > 100000)
            throw std::domain_error("expand: rescaling into [l, r) did not terminate");
    }
    std::map<mpq_class, std::size_t> seen;
    while (true) {
        auto it = seen.find(x);
        if (it != seen.end()) {
            out.word = word_from_cycle(out.digits, it->second);
            out.period_certified = true;
            return out;
        }
        if (out.digits.size() >= max_digits) return out;
        seen.emplace(x, out.digits.size());
        mpz_class t = floor_q(-b * x - l);
        out.digits.push_back(digit_from_integer(t));
        x = -b * x - mpq_class(t);
    }
}

Expansion expand_algebraic(const ExpansionStart& start, const BetaCertificate& cert,
                           std::uint64_t max_digits) {
    AlgebraicContext ctx(cert);
    RatPoly beta = ctx.root();
    RatPoly minus_beta = scale(beta, -1);
    RatPoly r = ctx.inverse(add(beta, ctx.constant(1)));  // 1/(beta+1)
    RatPoly l = sub(r, ctx.constant(1));
    RatPoly inv_minus_beta = ctx.inverse(minus_beta);

    RatPoly x;
    if (std::holds_alternative<EndpointKeyword>(start))
        x = std::get<EndpointKeyword>(start) == EndpointKeyword::Left ? l : r;
    else
        x = ctx.constant(std::get<mpq_class>(start));

    Expansion out;
    while (!(ctx.sign(sub(x, l)) >= 0 && ctx.sign(sub(x, r)) < 0)) {
        x = ctx.mul(x, inv_minus_beta);
        if (++out.integer_digits > 100000)
            throw std::domain_error("expand: rescaling into [l, r) did not terminate");
    }

    std::vector<RatPoly> states;
    while (true) {
        for (std::size_t j = 0; j < states.size(); ++j) {
            if (ctx.is_zero(sub(x, states[j]))) {
                out.word = word_from_cycle(out.digits, j);
                out.period_certified = true;
                return out;
            }
        }
        if (out.digits.size() >= max_digits) return out;
        states.push_back(x);
        // digit = floor(-beta x - l): locate the integer step with exact
        // sign tests, steered by a coarse enclosure first.
        RatPoly v = sub(ctx.mul(minus_beta, x), l);
        mpz_class t = floor_q(ctx.to_interval(v, 16).lo);
        while (ctx.sign(sub(v, ctx.constant(mpq_class(t)))) < 0) --t;
        while (ctx.sign(sub(v, ctx.constant(mpq_class(t + 1)))) >= 0) ++t;
        out.digits.push_back(digit_from_integer(t));
        x = sub(ctx.mul(minus_beta, x), ctx.constant(mpq_class(t)));
    }
}

Expansion expand_interval(const ExpansionStart& start, BetaCertificate& cert,
                          std::uint64_t max_digits) {
    Expansion out;
    PrecisionReal x;
    bool start_is_left = false;
    if (std::holds_alternative<EndpointKeyword>(start)) {
        if (std::get<EndpointKeyword>(start) == EndpointKeyword::Left) {
            x = left_endpoint(cert);
            start_is_left = true;
        } else {
            x = right_endpoint(cert);
        }
    } else {
        x = PrecisionReal(std::get<mpq_class>(start));
    }
    if (!start_is_left) {
        // Certified membership needs the enclosure endpoints to clear the
        // interval boundary; refine until they do, rescaling when the point
        // is certified outside.
        unsigned bits = 96;
        std::uint64_t rescales = 0;
        while (true) {
            PrecisionReal l = left_endpoint(cert);
            PrecisionReal r = right_endpoint(cert);
            if (x.lo >= l.hi && x.hi < r.lo) break;
            if (x.hi < l.lo || x.lo >= r.hi) {
                x = x * (-cert.enclosure()).reciprocal();
                ++out.integer_digits;
                if (++rescales > 100000)
                    throw std::domain_error("expand: rescaling into [l, r) did not terminate");
                continue;
            }
            if (bits > 4096)
                throw boundary_ambiguity("expand: cannot certify membership in [l, r)");
            cert.refine(bits);
            bits *= 2;
        }
    }
    std::vector<PrecisionReal> states;
    mpq_class coincidence = pow2_inverse(24);
    while (out.digits.size() < max_digits) {
        for (std::size_t j = 0; j < states.size(); ++j) {
            if (states[j].width() <= coincidence && x.width() <= coincidence &&
                states[j].intersects(x)) {
                // Enclosure coincidence only; reported as an unverified cycle.
                out.word = word_from_cycle(out.digits, j);
                out.period_certified = false;
                return out;
            }
        }
        states.push_back(x);
        StepResult step = negabeta_step(x, cert);
        out.digits.push_back(step.digit);
        x = step.next;
    }
    return out;
}

}  // namespace

StepResult negabeta_step(const PrecisionReal& x, BetaCertificate& beta, unsigned budget_bits) {
    PrecisionReal l = left_endpoint(beta);
    PrecisionReal r = right_endpoint(beta);
    if (x.hi < l.lo || x.lo >= r.hi)
        throw std::domain_error("negabeta_step: point outside [l_beta, r_beta)");
    unsigned bits = 128;
    while (true) {
        PrecisionReal b = beta.enclosure();
        PrecisionReal t = -(b * x) - left_endpoint(beta);
        mpz_class fl = floor_q(t.lo), fh = floor_q(t.hi);
        if (fl == fh) {
            Letter digit = digit_from_integer(fl);
            return {digit, -(b * x) - PrecisionReal(mpq_class(fl))};
        }
        // An exact beta with a point x gives a point t, so ambiguity here
        // means refinement can still help -- until the budget runs out.
        if (bits > budget_bits)
            throw boundary_ambiguity(
                "negabeta_step: orbit point sits on the digit boundary " + fh.get_str() +
                " for a root of " + poly_string(beta.polynomial()));
        beta.refine(bits);
        bits *= 2;
    }
}

Expansion expand(const ExpansionStart& start, BetaCertificate& beta, std::uint64_t max_digits,
                 unsigned symbolic_degree_cap) {
    if (beta.exact()) return expand_rational(start, beta.exact_value(), max_digits);
    if (degree(beta.polynomial()) <= static_cast<int>(symbolic_degree_cap)) {
        // The symbolic path may discover that the root is rational after all.
        AlgebraicContext probe(beta);
        if (probe.collapsed()) return expand_rational(start, probe.collapsed_value(), max_digits);
        return expand_algebraic(start, beta, max_digits);
    }
    return expand_interval(start, beta, max_digits);
}

}  // namespace lynsys
