#pragma once

// Ring arithmetic for expressions in a bracketed algebraic number: elements
// are polynomials reduced modulo the (squarefree) certificate polynomial.
// The modulus need not be irreducible; whenever an inverse meets a shared
// factor, that factor -- which cannot vanish at the bracketed root -- is
// stripped from the modulus. Signs are decided exactly: a candidate zero is
// certified through gcd + Sturm root counting inside the isolating bracket,
// anything else by interval refinement.

#include <optional>

#include "lynsys/numeric.hpp"
#include "lynsys/polynomial.hpp"

namespace lynsys {

class AlgebraicContext {
public:
    explicit AlgebraicContext(const BetaCertificate& cert);

    // The bracketed root as an element ({0,1} reduced mod the modulus).
    RatPoly root() const;
    RatPoly constant(const mpq_class& q) const;

    RatPoly reduce(RatPoly p) const;
    RatPoly mul(const RatPoly& a, const RatPoly& b) const { return reduce(lynsys::mul(a, b)); }

    // Exact sign of e evaluated at the bracketed root.
    int sign(const RatPoly& e);
    bool is_zero(const RatPoly& e);

    // Multiplicative inverse; throws std::domain_error when e vanishes at
    // the root. May strip modulus factors.
    RatPoly inverse(const RatPoly& e);

    PrecisionReal to_interval(const RatPoly& e, unsigned bits);

    // When a refinement lands exactly on the root the context degenerates to
    // a rational number; callers should switch to exact rational arithmetic.
    bool collapsed() const { return collapsed_.has_value(); }
    const mpq_class& collapsed_value() const { return *collapsed_; }

    int modulus_degree() const { return degree(modulus_); }

private:
    RatPoly modulus_;          // monic
    IntPoly int_modulus_;
    PrecisionReal bracket_;
    std::optional<SturmChain> sturm_;
    std::optional<mpq_class> collapsed_;

    void set_modulus(RatPoly m);
    void isolate_root();
    void refine_bracket();
};

}  // namespace lynsys
