#pragma once

// Exact rational enclosures. A PrecisionReal carries a real number as an
// interval [lo, hi] of exact rationals; arithmetic is outward-rounded (here:
// exact endpoint arithmetic, so no rounding slop at all) and refinement only
// ever shrinks the interval.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lynsys {

struct PrecisionReal {
    mpq_class lo;
    mpq_class hi;

    PrecisionReal() : lo(0), hi(0) {}
    PrecisionReal(mpq_class point) : lo(point), hi(std::move(point)) {}
    PrecisionReal(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("PrecisionReal: lo > hi");
    }

    bool is_point() const { return lo == hi; }
    mpq_class width() const { return hi - lo; }
    mpq_class midpoint() const { return (lo + hi) / 2; }
    bool contains(const mpq_class& q) const { return lo <= q && q <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool intersects(const PrecisionReal& o) const { return lo <= o.hi && o.lo <= hi; }
    // Entirely below / above a rational, certified.
    bool certainly_less(const mpq_class& q) const { return hi < q; }
    bool certainly_greater(const mpq_class& q) const { return lo > q; }

    PrecisionReal operator-() const { return {-hi, -lo}; }
    PrecisionReal operator+(const PrecisionReal& o) const { return {lo + o.lo, hi + o.hi}; }
    PrecisionReal operator-(const PrecisionReal& o) const { return {lo - o.hi, hi - o.lo}; }
    PrecisionReal operator*(const PrecisionReal& o) const;
    // Throws when the divisor encloses zero.
    PrecisionReal operator/(const PrecisionReal& o) const;
    PrecisionReal pow(std::uint64_t n) const;
    PrecisionReal reciprocal() const;

    friend PrecisionReal operator+(const mpq_class& q, const PrecisionReal& x) {
        return PrecisionReal(q) + x;
    }
    friend PrecisionReal operator*(const mpq_class& q, const PrecisionReal& x) {
        return PrecisionReal(q) * x;
    }
};

// 2^-bits as a rational.
mpq_class pow2_inverse(unsigned bits);

// Decimal rendering with outward rounding: the returned string, read back as
// an exact decimal fraction, is <= q (round_down) or >= q (round up).
std::string decimal_string(const mpq_class& q, unsigned digits, bool round_down);

// [lo, hi] printed as outward-rounded decimals.
std::string enclosure_string(const PrecisionReal& x, unsigned digits = 20);

}  // namespace lynsys
