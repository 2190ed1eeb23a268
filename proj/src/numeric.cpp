#include "lynsys/numeric.hpp"

#include <algorithm>

#include "lynsys/counting.hpp"
#include "lynsys/lyndon.hpp"
#include "lynsys/order.hpp"

namespace lynsys {

namespace {

IntPoly iadd(const IntPoly& a, const IntPoly& b) {
    IntPoly out(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    trim(out);
    return out;
}

IntPoly imul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

// y = -x substitution: flips the sign of odd coefficients.
IntPoly substitute_minus_x(IntPoly p) {
    for (std::size_t k = 1; k < p.size(); k += 2) p[k] = -p[k];
    return p;
}

void normalize_fraction(IntPoly& num, IntPoly& den) {
    mpz_class content = 0;
    for (const mpz_class& a : num) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a.get_mpz_t());
    for (const mpz_class& a : den) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a.get_mpz_t());
    if (content > 1) {
        for (mpz_class& a : num) a /= content;
        for (mpz_class& a : den) a /= content;
    }
    if (!den.empty() && den.back() < 0) {
        for (mpz_class& a : num) a = -a;
        for (mpz_class& a : den) a = -a;
    }
}

// Rational-gcd reduction is only worthwhile (and only affordable) at small
// degrees; the unreduced fraction is just as correct.
constexpr int kReduceDegreeCap = 32;

}  // namespace

RationalFunction series_closed_form(const Word& d) {
    const std::vector<Letter>& pre = d.preperiod();
    const std::vector<Letter>& per = d.period();
    std::size_t p = pre.size(), q = per.size();

    // In y = -x:  sum d_n y^-n = [A(y)(y^q - 1) + B(y)] / [y^p (y^q - 1)]
    // with A(y) = sum_{n<=p} d_n y^{p-n}, B(y) = sum_{m<=q} d_{p+m} y^{q-m};
    // a finite word keeps only the A(y)/y^p part.
    IntPoly A(p == 0 ? 0 : p, mpz_class(0));
    for (std::size_t n = 1; n <= p; ++n) A[p - n] = pre[n - 1];
    trim(A);
    IntPoly P, Q;
    if (q == 0) {
        P = A;
        Q.assign(p + 1, mpz_class(0));
        Q[p] = 1;
    } else {
        IntPoly B(q, mpz_class(0));
        for (std::size_t m = 1; m <= q; ++m) B[q - m] = per[m - 1];
        trim(B);
        IntPoly geom(q + 1, mpz_class(0));  // y^q - 1
        geom[q] = 1;
        geom[0] = -1;
        P = iadd(imul(A, geom), B);
        IntPoly yp(p + 1, mpz_class(0));
        yp[p] = 1;
        Q = imul(yp, geom);
    }
    P = substitute_minus_x(std::move(P));
    Q = substitute_minus_x(std::move(Q));

    if (!P.empty() && std::min(degree(P), degree(Q)) <= kReduceDegreeCap) {
        RatPoly g = poly_gcd(to_rational(P), to_rational(Q));
        if (degree(g) >= 1) {
            RatPoly pr = divmod(to_rational(P), g).quotient;
            RatPoly qr = divmod(to_rational(Q), g).quotient;
            mpz_class lcm_den = 1;
            for (const mpq_class& c : pr)
                mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
            for (const mpq_class& c : qr)
                mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
            P.assign(pr.size(), mpz_class(0));
            Q.assign(qr.size(), mpz_class(0));
            for (std::size_t k = 0; k < pr.size(); ++k) P[k] = mpq_class(pr[k] * lcm_den).get_num();
            for (std::size_t k = 0; k < qr.size(); ++k) Q[k] = mpq_class(qr[k] * lcm_den).get_num();
        }
    }
    normalize_fraction(P, Q);
    return {std::move(P), std::move(Q)};
}

// ---- beta ------------------------------------------------------------

void BetaCertificate::bisect_to(unsigned bits) {
    mpq_class target = pow2_inverse(bits);
    while (!exact_ && beta_.width() > target) {
        mpq_class mid = beta_.midpoint();
        int s = sign_at(poly_, mid);
        if (s == 0) {
            beta_ = PrecisionReal(mid);
            exact_ = true;
            sign_lo_ = sign_hi_ = 0;
            return;
        }
        if (s == sign_lo_)
            beta_ = PrecisionReal(mid, beta_.hi);
        else
            beta_ = PrecisionReal(beta_.lo, mid);
    }
}

void BetaCertificate::refine(unsigned bits) { bisect_to(bits); }

BetaCertificate BetaCertificate::from_root_bracket(IntPoly poly, PrecisionReal bracket,
                                                   unsigned bits) {
    BetaCertificate cert;
    cert.poly_ = std::move(poly);
    cert.beta_ = std::move(bracket);
    cert.sign_lo_ = sign_at(cert.poly_, cert.beta_.lo);
    cert.sign_hi_ = sign_at(cert.poly_, cert.beta_.hi);
    if (cert.sign_lo_ == 0 || cert.sign_hi_ == 0 || cert.sign_lo_ == cert.sign_hi_)
        throw std::invalid_argument("from_root_bracket: endpoint signs do not bracket a root");
    cert.bisect_to(bits);
    return cert;
}

BetaCertificate BetaCertificate::from_exact_root(IntPoly poly, const mpq_class& root) {
    if (sign_at(poly, root) != 0)
        throw std::invalid_argument("from_exact_root: polynomial does not vanish there");
    BetaCertificate cert;
    cert.poly_ = std::move(poly);
    cert.beta_ = PrecisionReal(root);
    cert.exact_ = true;
    return cert;
}

BetaCertificate BetaCertificate::from_rational(const mpq_class& value) {
    if (value <= 1) throw std::domain_error("beta must exceed 1");
    BetaCertificate cert;
    cert.poly_ = {mpz_class(-value.get_num()), mpz_class(value.get_den())};
    cert.beta_ = PrecisionReal(value);
    cert.exact_ = true;
    return cert;
}

BetaCertificate compute_beta(const Word& d, unsigned bits) {
    LyndonClass cls = classify_lyndon(d);
    if (!cls.is_lyndon())
        throw std::domain_error("compute_beta: not an alternate Lyndon word (shift " +
                                std::to_string(cls.index) + " precedes it)");
    if (alt_compare_vs_phi_limit(d).relation != Rel::Less)
        throw std::domain_error("zero-entropy word: no beta > 1 exists");

    RationalFunction s = series_closed_form(d);
    IntPoly xq = imul({mpz_class(0), mpz_class(1)}, s.den);              // x * den
    IntPoly G = iadd(xq, imul({mpz_class(1), mpz_class(1)}, s.num));     // + (x+1) * num
    trim(G);
    if (G.empty()) throw std::logic_error("compute_beta: degenerate characteristic polynomial");
    if (G.back() < 0)
        for (mpz_class& a : G) a = -a;
    bool small = degree(G) <= kReduceDegreeCap;
    if (small) G = squarefree_part(G);

    Letter d1 = d.letter_at(1);
    mpq_class top = static_cast<unsigned long>(d1) + 1;
    mpq_class step(1, 256);
    const mpq_class step_floor = pow2_inverse(64);
    mpq_class hi = top;
    int sign_hi = sign_at(G, hi);
    if (sign_hi == 0)  // root exactly at the upper bound (the full shift)
        return BetaCertificate::from_exact_root(std::move(G), hi);
    while (step >= step_floor) {
        mpq_class x = hi - step;
        if (x <= 1) {
            // The remaining window (1, hi] is narrower than the step; keep
            // descending geometrically, roots pile up only at 1 itself.
            step /= 2;
            continue;
        }
        int sx = sign_at(G, x);
        if (sx == 0) return BetaCertificate::from_exact_root(std::move(G), x);
        if (sx != sign_hi) {
            BetaCertificate cert =
                BetaCertificate::from_root_bracket(std::move(G), PrecisionReal(x, hi), bits);
            if (small && !cert.exact()) {
                // The scan came from the top of a squarefree polynomial, so
                // there is exactly one root above the bracket floor.
                SturmChain chain(cert.polynomial());
                if (chain.count_roots(cert.enclosure().lo, top) != 1)
                    throw std::logic_error("compute_beta: root isolation ambiguity");
            }
            return cert;
        }
        hi = x;
        sign_hi = sx;
    }
    throw std::domain_error("compute_beta: no sign change found in (1, d_1+1]");
}

PrecisionReal entropy_limit_estimate(const Word& d, std::uint64_t n, unsigned bits) {
    if (n == 0) throw std::invalid_argument("entropy_limit_estimate: n must be positive");
    CountTable table = count_recurrence(d, n);
    const mpz_class& H = table.values[n];
    // Dyadic bisection for H^(1/n): maintain lo^n <= H <= hi^n.
    mpq_class lo = 1;
    mpq_class hi = static_cast<unsigned long>(d.letter_at(1)) + 2;
    mpq_class target = pow2_inverse(bits);
    auto pow_le = [&](const mpq_class& r) {
        mpz_class num_pow, den_pow;
        mpz_pow_ui(num_pow.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(n));
        mpz_pow_ui(den_pow.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(n));
        return num_pow <= H * den_pow;
    };
    while (hi - lo > target) {
        mpq_class mid = (lo + hi) / 2;
        if (pow_le(mid))
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

PrecisionReal right_endpoint(const BetaCertificate& beta) {
    PrecisionReal b = beta.enclosure();
    return (b + PrecisionReal(mpq_class(1))).reciprocal();
}

PrecisionReal left_endpoint(const BetaCertificate& beta) {
    return right_endpoint(beta) - PrecisionReal(mpq_class(1));
}

PrecisionReal f_beta(const Word& w, const PrecisionReal& beta) {
    if (!(beta.lo > 1)) throw std::domain_error("f_beta: requires beta > 1");
    PrecisionReal t = -beta.reciprocal();  // (-beta)^-1
    const std::vector<Letter>& pre = w.preperiod();
    const std::vector<Letter>& per = w.period();
    // Horner for sum_{n=1}^p c_n t^n = t(c_1 + t(c_2 + ...)).
    auto horner = [&](const std::vector<Letter>& c) {
        PrecisionReal acc{mpq_class(0)};
        for (std::size_t k = c.size(); k-- > 0;)
            acc = t * (PrecisionReal(mpq_class(c[k])) + acc);
        return acc;
    };
    PrecisionReal head = horner(pre);
    if (per.empty()) return head;
    PrecisionReal tail = horner(per);
    PrecisionReal geom = PrecisionReal(mpq_class(1)) - t.pow(per.size());
    return head + t.pow(pre.size()) * tail / geom;
}

PrecisionReal f_beta(const Word& w, const BetaCertificate& beta) {
    return f_beta(w, beta.enclosure());
}

CylinderImage cylinder_image(const Word& x, const Word& d, const BetaCertificate& beta) {
    if (!x.is_finite()) throw std::invalid_argument("cylinder_image: x must be finite");
    if (!in_language(x, d)) throw std::domain_error("cylinder_image: x not in the language");
    std::size_t n = x.preperiod().size();
    // A suffix of x that equals the matching prefix of d keeps constraining
    // the tail; the constraint direction flips with the matched length.
    Word zero_d = Word::finite({0}).concat(d);
    Word low = d, high = zero_d;
    for (std::size_t m = 1; m <= n; ++m) {
        bool tight = true;
        for (std::size_t i = 0; i < m && tight; ++i)
            tight = x.letter_at(n - m + 1 + i) == d.letter_at(i + 1);
        if (!tight) continue;
        Word bound = d.shifted(m);
        if (m % 2 == 0) {
            if (alt_compare(bound, low).relation == Rel::Greater) low = bound;
        } else {
            if (alt_compare(bound, high).relation == Rel::Less) high = bound;
        }
    }
    if (alt_compare(low, high).relation == Rel::Greater)
        throw std::logic_error("cylinder_image: empty tail interval for a language word");
    Word min_word = n % 2 == 0 ? x.concat(low) : x.concat(high);
    Word max_word = n % 2 == 0 ? x.concat(high) : x.concat(low);
    return {min_word, max_word, f_beta(min_word, beta), f_beta(max_word, beta)};
}

// ---- generating function and substitution checks ---------------------

namespace {

mpq_class qpow_int(const mpq_class& q, std::uint64_t e) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
}

}  // namespace

PrecisionReal check_generating_identity(const Word& d, const mpq_class& z, std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("check_generating_identity: N must be positive");
    BetaCertificate beta = compute_beta(d, 16);
    mpq_class abs_z = z < 0 ? mpq_class(-z) : z;
    if (!(abs_z * beta.enclosure().hi < 1))
        throw std::domain_error("check_generating_identity: z outside the convergence disk");

    CountTable table = count_recurrence(d, N);
    mpq_class lhs = 0;
    for (std::size_t k = table.values.size(); k-- > 0;) lhs = lhs * z + table.values[k];

    // sum_{n>=1} d_n (-z)^n in closed form
    mpq_class mz = -z;
    const std::vector<Letter>& pre = d.preperiod();
    const std::vector<Letter>& per = d.period();
    auto horner = [&](const std::vector<Letter>& c) {
        mpq_class acc = 0;
        for (std::size_t k = c.size(); k-- > 0;) acc = mz * (acc + c[k]);
        return acc;
    };
    mpq_class S = horner(pre);
    if (!per.empty())
        S += qpow_int(mz, pre.size()) * horner(per) / (1 - qpow_int(mz, per.size()));

    mpq_class rhs = 1 / ((1 - z) * (1 + (1 + z) * S));
    mpq_class residual = lhs - rhs;
    if (residual < 0) residual = -residual;
    return PrecisionReal(residual);
}

bool check_omega_polynomial(unsigned n) {
    if (n > 8) throw std::domain_error("check_omega_polynomial: n exceeds the supported cap");
    std::vector<int> omega{2};
    for (unsigned k = 0; k < n; ++k) {
        std::vector<int> next;
        next.reserve(3 * omega.size());
        for (int a : omega) {
            if (a == 1) {
                next.push_back(2);
            } else {
                next.push_back(2);
                next.push_back(1);
                next.push_back(1);
            }
        }
        omega = std::move(next);
    }
    // (1 omega)(z) = 1 + sum a_k (-z)^k
    IntPoly lhs(omega.size() + 1, mpz_class(0));
    lhs[0] = 1;
    for (std::size_t k = 1; k <= omega.size(); ++k)
        lhs[k] = k % 2 == 0 ? omega[k - 1] : -omega[k - 1];

    IntPoly rhs{mpz_class(1)};
    auto times_one_minus_zpow = [&](std::uint64_t len) {
        IntPoly factor(len + 1, mpz_class(0));
        factor[0] = 1;
        factor[len] = -1;
        rhs = imul(rhs, factor);
    };
    times_one_minus_zpow(1);  // |u_{-1}| = 1
    for (unsigned k = 0; k < n; ++k) times_one_minus_zpow(phi_power_length(k));
    std::uint64_t un = phi_power_length(n);
    if (rhs.size() <= un) rhs.resize(un + 1, mpz_class(0));
    rhs[un] -= 1;
    trim(lhs);
    trim(rhs);
    return lhs == rhs;
}

}  // namespace lynsys
