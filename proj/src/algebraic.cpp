#include "lynsys/algebraic.hpp"

#include <stdexcept>

namespace lynsys {

AlgebraicContext::AlgebraicContext(const BetaCertificate& cert) {
    if (cert.exact()) {
        collapsed_ = cert.exact_value();
        bracket_ = cert.enclosure();
        modulus_ = {-*collapsed_, mpq_class(1)};
        int_modulus_ = to_integer_primitive(modulus_);
        return;
    }
    bracket_ = cert.enclosure();
    RatPoly m = to_rational(squarefree_part(cert.polynomial()));
    set_modulus(std::move(m));
    isolate_root();
}

void AlgebraicContext::set_modulus(RatPoly m) {
    if (degree(m) < 1) throw std::logic_error("AlgebraicContext: constant modulus");
    if (m.back() != 1) {
        mpq_class inv = 1 / m.back();
        for (mpq_class& c : m) c *= inv;
    }
    modulus_ = std::move(m);
    int_modulus_ = to_integer_primitive(modulus_);
    sturm_.emplace(int_modulus_);
}

void AlgebraicContext::refine_bracket() {
    if (collapsed_) return;
    mpq_class mid = bracket_.midpoint();
    int sm = sign_at(int_modulus_, mid);
    if (sm == 0) {
        collapsed_ = mid;
        bracket_ = PrecisionReal(mid);
        return;
    }
    // After isolation the modulus has exactly one (simple) root inside, so
    // the endpoint signs differ and bisection keeps a valid bracket.
    int slo = sign_at(int_modulus_, bracket_.lo);
    if (sm == slo)
        bracket_ = PrecisionReal(mid, bracket_.hi);
    else
        bracket_ = PrecisionReal(bracket_.lo, mid);
}

void AlgebraicContext::isolate_root() {
    if (collapsed_) return;
    if (sign_at(int_modulus_, bracket_.lo) == 0 || sign_at(int_modulus_, bracket_.hi) == 0)
        throw std::logic_error("AlgebraicContext: bracket endpoint is a root");
    while (true) {
        int count = sturm_->count_roots(bracket_.lo, bracket_.hi);
        if (count == 1) return;
        if (count < 1) throw std::logic_error("AlgebraicContext: lost the root while isolating");
        // Narrow from the top: the certified root is the largest in the
        // bracket, so keep the upper half whenever it still holds a root.
        mpq_class mid = bracket_.midpoint();
        if (sign_at(int_modulus_, mid) == 0) {
            collapsed_ = mid;
            bracket_ = PrecisionReal(mid);
            return;
        }
        int upper = sturm_->count_roots(mid, bracket_.hi);
        bracket_ = upper >= 1 ? PrecisionReal(mid, bracket_.hi) : PrecisionReal(bracket_.lo, mid);
    }
}

RatPoly AlgebraicContext::reduce(RatPoly p) const {
    trim(p);
    if (collapsed_) {
        mpq_class v = eval(p, *collapsed_);
        if (v == 0) return {};
        return {v};
    }
    if (degree(p) < degree(modulus_)) return p;
    return divmod(p, modulus_).remainder;
}

RatPoly AlgebraicContext::root() const { return reduce(RatPoly{mpq_class(0), mpq_class(1)}); }

RatPoly AlgebraicContext::constant(const mpq_class& q) const {
    if (q == 0) return {};
    return {q};
}

bool AlgebraicContext::is_zero(const RatPoly& e) {
    RatPoly r = reduce(e);
    if (r.empty()) return true;
    if (collapsed_) return false;  // reduce() already evaluated
    if (degree(r) == 0) return false;
    RatPoly g = poly_gcd(r, modulus_);
    if (degree(g) < 1) return false;
    // g divides the modulus, whose only root in the bracket is ours.
    SturmChain chain(to_integer_primitive(g));
    return chain.count_roots(bracket_.lo, bracket_.hi) >= 1;
}

int AlgebraicContext::sign(const RatPoly& e) {
    RatPoly r = reduce(e);
    if (r.empty()) return 0;
    if (collapsed_) return sgn(r[0]);
    if (degree(r) == 0) return sgn(r[0]);
    if (is_zero(r)) return 0;
    for (int guard = 0; guard < 100000; ++guard) {
        PrecisionReal v = eval(r, bracket_);
        if (!v.contains_zero()) return sgn(v.lo);
        refine_bracket();
        if (collapsed_) return sgn(eval(r, *collapsed_));
    }
    throw std::logic_error("AlgebraicContext::sign: refinement failed to separate from zero");
}

RatPoly AlgebraicContext::inverse(const RatPoly& e) {
    RatPoly r = reduce(e);
    if (r.empty() || is_zero(r)) throw std::domain_error("AlgebraicContext: inverse of zero");
    if (collapsed_) return {1 / r[0]};
    if (degree(r) == 0) return {1 / r[0]};
    RatPoly g = poly_gcd(r, modulus_);
    if (degree(g) >= 1) {
        // Shared factors cannot vanish at the root (e does not); strip them.
        set_modulus(divmod(modulus_, g).quotient);
        isolate_root();
        r = reduce(r);
        if (collapsed_) return {1 / r[0]};
        if (degree(r) == 0) return {1 / r[0]};
    }
    ExtGcd eg = poly_ext_gcd(r, modulus_);
    if (degree(eg.g) != 0)
        throw std::logic_error("AlgebraicContext: inverse failed after stripping");
    return reduce(scale(eg.s, 1 / eg.g[0]));
}

PrecisionReal AlgebraicContext::to_interval(const RatPoly& e, unsigned bits) {
    RatPoly r = reduce(e);
    if (r.empty()) return PrecisionReal(mpq_class(0));
    if (collapsed_ || degree(r) == 0) return PrecisionReal(r.empty() ? mpq_class(0) : r[0]);
    mpq_class target = pow2_inverse(bits);
    for (int guard = 0; guard < 100000; ++guard) {
        PrecisionReal v = eval(r, bracket_);
        if (v.width() <= target) return v;
        refine_bracket();
        if (collapsed_) return PrecisionReal(eval(r, *collapsed_));
    }
    throw std::logic_error("AlgebraicContext::to_interval: refinement stalled");
}

}  // namespace lynsys
