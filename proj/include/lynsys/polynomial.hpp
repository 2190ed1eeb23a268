#pragma once

// Dense univariate polynomials with exact coefficients, ascending order.
// Just enough machinery for root bracketing and number-field style
// arithmetic: sign evaluation, Euclidean division, gcd, Sturm chains.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "lynsys/interval.hpp"

namespace lynsys {

using IntPoly = std::vector<mpz_class>;  // a_0 + a_1 x + ... ; no trailing zeros
using RatPoly = std::vector<mpq_class>;

void trim(IntPoly& p);
void trim(RatPoly& p);
inline int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }
inline int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_zero(const RatPoly& p) { return p.empty(); }

std::string poly_string(const IntPoly& p);

// Exact sign of p(num/den), den > 0, via the homogeneous form
// sum a_k num^k den^(deg-k).
int sign_at(const IntPoly& p, const mpq_class& x);
mpq_class eval(const RatPoly& p, const mpq_class& x);
// Interval Horner evaluation.
PrecisionReal eval(const IntPoly& p, const PrecisionReal& x);
PrecisionReal eval(const RatPoly& p, const PrecisionReal& x);

IntPoly derivative(const IntPoly& p);
RatPoly to_rational(const IntPoly& p);
// Clears denominators and divides by integer content; sign normalized so the
// leading coefficient is positive.
IntPoly to_integer_primitive(const RatPoly& p);

RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);
RatPoly scale(const RatPoly& a, const mpq_class& c);
// Quotient and remainder of a by b (b != 0).
struct DivMod {
    RatPoly quotient;
    RatPoly remainder;
};
DivMod divmod(const RatPoly& a, const RatPoly& b);
// Monic gcd.
RatPoly poly_gcd(RatPoly a, RatPoly b);
// p / gcd(p, p'): same roots, all simple.
IntPoly squarefree_part(const IntPoly& p);

// Extended gcd: returns g (monic) with g = s*a + t*b.
struct ExtGcd {
    RatPoly g, s, t;
};
ExtGcd poly_ext_gcd(const RatPoly& a, const RatPoly& b);

// Sturm chain of a squarefree polynomial; counts distinct real roots in
// (a, b] for p(a) != 0.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);
    int count_roots(const mpq_class& a, const mpq_class& b) const;

private:
    std::vector<RatPoly> chain_;
    int variations(const mpq_class& x) const;
};

}  // namespace lynsys
