#pragma once

// Exact-enclosure analysis of a Lyndon system: the base beta attached to a
// generator word (largest real solution of  -x/(x+1) = sum d_n (-x)^-n ),
// evaluation of f_beta, the (-beta)-transformation and its expansions, and
// exact generating-function / substitution-polynomial checks.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "lynsys/interval.hpp"
#include "lynsys/polynomial.hpp"
#include "lynsys/word.hpp"

namespace lynsys {

class boundary_ambiguity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// sum_{n>=1} d_n (-x)^{-n} written as num/den with integer coefficients, the
// preperiod contributing a polynomial part and the period a geometric tail.
struct RationalFunction {
    IntPoly num;
    IntPoly den;
};
RationalFunction series_closed_form(const Word& d);

// A bracketed root: polynomial() vanishes at the enclosed real, and either
// the enclosure is an exact rational root or the endpoint signs differ.
class BetaCertificate {
public:
    const IntPoly& polynomial() const { return poly_; }
    const PrecisionReal& enclosure() const { return beta_; }
    bool exact() const { return exact_; }
    mpq_class exact_value() const { return beta_.lo; }
    int sign_lo() const { return sign_lo_; }
    int sign_hi() const { return sign_hi_; }

    // Shrinks the enclosure to width <= 2^-bits by bisection.
    void refine(unsigned bits);

    static BetaCertificate from_root_bracket(IntPoly poly, PrecisionReal bracket, unsigned bits);
    static BetaCertificate from_exact_root(IntPoly poly, const mpq_class& root);
    static BetaCertificate from_rational(const mpq_class& value);

private:
    BetaCertificate() = default;
    IntPoly poly_;
    PrecisionReal beta_;
    bool exact_ = false;
    int sign_lo_ = 0, sign_hi_ = 0;
    void bisect_to(unsigned bits);
};

inline constexpr unsigned kDefaultPrecisionBits = 64;

// The base attached to d: validates that d is an alternate Lyndon word with
// positive entropy, then isolates the largest real root of
// G(x) = x*den(x) + (x+1)*num(x) in (1, d_1 + 1] by a descending sign scan
// (step 2^-8) followed by bisection.
BetaCertificate compute_beta(const Word& d, unsigned bits = kDefaultPrecisionBits);

// H_n^(1/n) as an enclosure of width <= 2^-bits; convergence diagnostic
// against compute_beta.
PrecisionReal entropy_limit_estimate(const Word& d, std::uint64_t n, unsigned bits = 32);

// Interval endpoints of the value set: l = -beta/(beta+1), r = 1/(beta+1).
PrecisionReal left_endpoint(const BetaCertificate& beta);
PrecisionReal right_endpoint(const BetaCertificate& beta);

// f_beta(w) = sum w_n (-beta)^-n. Finite words are exact partial sums (the
// zero padding contributes nothing); eventually periodic words use the
// closed-form geometric tail. Requires beta.lo > 1.
PrecisionReal f_beta(const Word& w, const PrecisionReal& beta);
PrecisionReal f_beta(const Word& w, const BetaCertificate& beta);

// Image of the cylinder of a finite word x in the system of d: the valid
// tails form an order interval whose endpoints are shifts of d (or 0.d),
// determined by which suffixes of x sit exactly on the boundary word.
struct CylinderImage {
    Word min_word;  // x . min_tail
    Word max_word;  // x . max_tail
    PrecisionReal min_value;
    PrecisionReal max_value;
};
CylinderImage cylinder_image(const Word& x, const Word& d, const BetaCertificate& beta);

// One step of T_{-beta}(x) = -beta x - floor(-beta x - l_beta) in enclosure
// arithmetic. The certificate is refined on demand; if the floor stays
// ambiguous down to 2^-budget_bits the orbit point sits (to within budget)
// exactly on a digit boundary and boundary_ambiguity is thrown with the
// candidate relation.
struct StepResult {
    Letter digit;
    PrecisionReal next;
};
StepResult negabeta_step(const PrecisionReal& x, BetaCertificate& beta,
                         unsigned budget_bits = 4096);

// Starting point of an expansion: an exact rational or one of the interval
// endpoints l_beta / r_beta.
enum class EndpointKeyword { Left, Right };
using ExpansionStart = std::variant<mpq_class, EndpointKeyword>;

struct Expansion {
    std::vector<Letter> digits;       // x_1 x_2 ... (after rescaling)
    std::uint64_t integer_digits = 0; // digits left of the point after rescale
    std::optional<Word> word;         // set when eventual periodicity was detected
    bool period_certified = false;    // exact-orbit certificate vs enclosure heuristic
};

// First max_digits digits of d(x, -beta); stops early when the orbit
// provably cycles (exact rational orbit, or algebraic orbit equality in the
// number ring defined by the certificate polynomial when its degree is small
// enough for symbolic work).
Expansion expand(const ExpansionStart& x, BetaCertificate& beta, std::uint64_t max_digits,
                 unsigned symbolic_degree_cap = 16);

// |sum_{n<=N} H_n z^n - 1/((1-z)(1+(1+z) sum d_n (-z)^n))| as an exact
// residual; requires |z| < 1/beta.
PrecisionReal check_generating_identity(const Word& d, const mpq_class& z, std::uint64_t N);

// Substitution check for psi(1) = 2, psi(2) = 211, omega_n = psi^n(2):
// the signed coefficient polynomial of 1.omega_n equals
// prod_{k=-1}^{n-1} (1 - z^|u_k|) - z^|u_n| with |u_{-1}| = 1.
bool check_omega_polynomial(unsigned n);

}  // namespace lynsys
