#include "lynsys/interval.hpp"

#include <algorithm>

namespace lynsys {

PrecisionReal PrecisionReal::operator*(const PrecisionReal& o) const {
    mpq_class a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

PrecisionReal PrecisionReal::reciprocal() const {
    if (contains_zero()) throw std::domain_error("PrecisionReal: reciprocal of interval containing 0");
    return {1 / hi, 1 / lo};
}

PrecisionReal PrecisionReal::operator/(const PrecisionReal& o) const {
    return *this * o.reciprocal();
}

namespace {

mpq_class qpow(const mpq_class& q, std::uint64_t e) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
}

}  // namespace

PrecisionReal PrecisionReal::pow(std::uint64_t n) const {
    if (n == 0) return PrecisionReal(mpq_class(1));
    if (n % 2 == 0 && contains_zero()) {
        mpq_class m = std::max(mpq_class(-lo), hi);
        return {mpq_class(0), qpow(m, n)};
    }
    // On sign-constant intervals (and for odd powers generally) x^n is
    // monotone, so the endpoint powers bound the image.
    mpq_class a = qpow(lo, n), b = qpow(hi, n);
    if (a <= b) return {a, b};
    return {b, a};
}

mpq_class pow2_inverse(unsigned bits) {
    mpq_class q(1);
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), bits);
    return q;
}

std::string decimal_string(const mpq_class& q, unsigned digits, bool round_down) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpq_class scaled = q * scale;
    mpz_class n;
    if (round_down)
        mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    else
        mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    bool negative = n < 0;
    mpz_class mag = negative ? mpz_class(-n) : n;
    std::string body = mag.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    // trim trailing zeros but keep at least one fractional digit
    std::size_t last = body.find_last_not_of('0');
    if (body[last] == '.') ++last;
    body.erase(last + 1);
    return negative ? "-" + body : body;
}

std::string enclosure_string(const PrecisionReal& x, unsigned digits) {
    return "[" + decimal_string(x.lo, digits, true) + "," + decimal_string(x.hi, digits, false) + "]";
}

}  // namespace lynsys
