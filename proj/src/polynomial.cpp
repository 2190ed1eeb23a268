#include "lynsys/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lynsys {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::string poly_string(const IntPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (int k = degree(p); k >= 0; --k) {
        const mpz_class& a = p[static_cast<std::size_t>(k)];
        if (a == 0) continue;
        if (!out.empty()) out += a > 0 ? " + " : " - ";
        else if (a < 0) out += "-";
        mpz_class mag = abs(a);
        bool unit = mag == 1 && k > 0;
        if (!unit) out += mag.get_str();
        if (k > 0) {
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

int sign_at(const IntPoly& p, const mpq_class& x) {
    if (p.empty()) return 0;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    // Horner on the homogenized form sum a_k num^k den^(deg-k), which is the
    // value scaled by den^deg > 0 and therefore has the same sign.
    mpz_class acc = p.back();
    mpz_class den_pow = 1;
    for (std::size_t k = p.size() - 1; k-- > 0;) {
        den_pow *= den;
        acc = acc * num + p[k] * den_pow;
    }
    return sgn(acc);
}

mpq_class eval(const RatPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

PrecisionReal eval(const IntPoly& p, const PrecisionReal& x) {
    PrecisionReal acc{mpq_class(0)};
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + PrecisionReal(mpq_class(p[k]));
    return acc;
}

PrecisionReal eval(const RatPoly& p, const PrecisionReal& x) {
    PrecisionReal acc{mpq_class(0)};
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + PrecisionReal(p[k]);
    return acc;
}

IntPoly derivative(const IntPoly& p) {
    IntPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
    trim(d);
    return d;
}

RatPoly to_rational(const IntPoly& p) {
    RatPoly r;
    r.reserve(p.size());
    for (const mpz_class& a : p) r.emplace_back(a);
    return r;
}

IntPoly to_integer_primitive(const RatPoly& p) {
    if (p.empty()) return {};
    mpz_class lcm_den = 1;
    for (const mpq_class& a : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), a.get_den_mpz_t());
    IntPoly out(p.size());
    mpz_class content = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        mpq_class scaled = p[k] * lcm_den;
        out[k] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[k].get_mpz_t());
    }
    if (content > 1)
        for (mpz_class& a : out) a /= content;
    if (out.back() < 0)
        for (mpz_class& a : out) a = -a;
    return out;
}

RatPoly add(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    trim(out);
    return out;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    trim(out);
    return out;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

RatPoly scale(const RatPoly& a, const mpq_class& c) {
    if (c == 0) return {};
    RatPoly out = a;
    for (mpq_class& x : out) x *= c;
    return out;
}

DivMod divmod(const RatPoly& a, const RatPoly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    RatPoly r = a;
    RatPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
    const mpq_class& lead = b.back();
    while (r.size() >= b.size() && !r.empty()) {
        mpq_class c = r.back() / lead;
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= c * b[k];
        trim(r);
    }
    trim(q);
    return {std::move(q), std::move(r)};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        mpq_class inv = 1 / a.back();
        for (mpq_class& c : a) c *= inv;
    }
    return a;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (degree(p) <= 1) return p;
    RatPoly g = poly_gcd(to_rational(p), to_rational(derivative(p)));
    if (degree(g) == 0) return p;
    return to_integer_primitive(divmod(to_rational(p), g).quotient);
}

ExtGcd poly_ext_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = {mpq_class(1)}, s1 = {};
    RatPoly t0 = {}, t1 = {mpq_class(1)};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        DivMod d = divmod(r0, r1);
        RatPoly r2 = d.remainder;
        RatPoly s2 = sub(s0, mul(d.quotient, s1));
        RatPoly t2 = sub(t0, mul(d.quotient, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty() && r0.back() != 1) {
        mpq_class inv = 1 / r0.back();
        r0 = scale(r0, inv);
        s0 = scale(s0, inv);
        t0 = scale(t0, inv);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

SturmChain::SturmChain(const IntPoly& p) {
    RatPoly p0 = to_rational(p);
    RatPoly p1 = to_rational(derivative(p));
    trim(p0);
    chain_.push_back(p0);
    if (!p1.empty()) chain_.push_back(p1);
    while (chain_.size() >= 2 && !chain_.back().empty()) {
        RatPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
        if (r.empty()) break;
        for (mpq_class& c : r) c = -c;
        chain_.push_back(std::move(r));
    }
}

int SturmChain::variations(const mpq_class& x) const {
    int count = 0;
    int prev = 0;
    for (const RatPoly& p : chain_) {
        int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::count_roots(const mpq_class& a, const mpq_class& b) const {
    if (a > b) throw std::invalid_argument("SturmChain::count_roots: empty interval");
    return variations(a) - variations(b);
}

}  // namespace lynsys
