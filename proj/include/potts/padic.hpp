#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "potts/errors.hpp"

namespace potts {

/// Prime and working precision shared by a family of values.
///
/// N is the number of significant base-p digits carried through
/// multiplicative operations ("relative precision" model). Values are
/// compared with eq_at_precision, never by ideal equality.
class PadicContext {
public:
    PadicContext(std::uint64_t prime, int precision);

    std::uint64_t prime() const { return prime_; }
    int precision() const { return precision_; }

    // Smallest valuation inside the convergence ball of exp_p:
    // v >= 1 for odd p, v >= 2 for p = 2.
    int exp_min_valuation() const { return prime_ == 2 ? 2 : 1; }

    friend bool operator==(const PadicContext& a, const PadicContext& b) {
        return a.prime_ == b.prime_ && a.precision_ == b.precision_;
    }
    friend bool operator!=(const PadicContext& a, const PadicContext& b) { return !(a == b); }

private:
    std::uint64_t prime_;
    int precision_;
};

/// The p-adic absolute value p^{-exponent}, or zero.
/// Bigger exponent means a smaller number; comparisons follow that order.
class Norm {
public:
    static Norm zero(std::uint64_t prime) { return Norm(prime, 0, true); }
    static Norm of(std::uint64_t prime, std::int64_t exponent) { return Norm(prime, exponent, false); }

    bool is_zero() const { return zero_; }
    std::uint64_t prime() const { return prime_; }
    std::int64_t exponent() const;

    std::string str() const;

    friend bool operator==(const Norm& a, const Norm& b) {
        return a.zero_ == b.zero_ && (a.zero_ || a.exponent_ == b.exponent_);
    }
    friend bool operator!=(const Norm& a, const Norm& b) { return !(a == b); }
    friend bool operator<(const Norm& a, const Norm& b) {
        if (a.zero_) return !b.zero_;
        if (b.zero_) return false;
        return a.exponent_ > b.exponent_;
    }
    friend bool operator<=(const Norm& a, const Norm& b) { return a < b || a == b; }
    friend bool operator>(const Norm& a, const Norm& b) { return b < a; }
    friend bool operator>=(const Norm& a, const Norm& b) { return b <= a; }

    friend Norm operator*(const Norm& a, const Norm& b) {
        if (a.zero_ || b.zero_) return zero(a.prime_);
        return of(a.prime_, a.exponent_ + b.exponent_);
    }

    static Norm max(const Norm& a, const Norm& b) { return a < b ? b : a; }

    // Integer power; exponent >= 0.
    Norm pow(std::int64_t e) const {
        if (zero_) return *this;
        return of(prime_, exponent_ * e);
    }

private:
    Norm(std::uint64_t prime, std::int64_t exponent, bool zero)
        : prime_(prime), exponent_(exponent), zero_(zero) {}

    std::uint64_t prime_;
    std::int64_t exponent_;
    bool zero_;
};

/// A capped-precision element of Q_p.
///
/// Nonzero values are p^v * (d0 + d1 p + ...) with d0 != 0 and at most N
/// significant digits; abs_precision() = m means the value is known modulo
/// p^m. Zero values carry only the bound |x| <= p^{-m}. Values are
/// immutable and freely shareable across threads.
class PadicNumber {
public:
    static PadicNumber zero(const PadicContext& ctx);
    static PadicNumber zero(const PadicContext& ctx, std::int64_t abs_precision);
    static PadicNumber from_integer(const PadicContext& ctx, long long value);
    static PadicNumber from_rational(const PadicContext& ctx, long long num, long long den);
    // Unit digits (d0 != 0, all < p), little-endian; trailing zeros allowed.
    static PadicNumber from_unit_digits(const PadicContext& ctx, std::int64_t valuation,
                                        std::vector<std::uint64_t> digits,
                                        std::int64_t abs_precision);

    const PadicContext& context() const { return ctx_; }
    bool is_zero() const { return zero_; }

    // Valuation of a nonzero value; an inexact zero has no readable
    // valuation (cancellation left no significant digits).
    std::int64_t valuation() const;
    std::int64_t abs_precision() const { return abs_precision_; }
    const std::vector<std::uint64_t>& digits() const { return digits_; }

    Norm norm() const;
    bool is_unit() const { return !zero_ && valuation_ == 0; }

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

    PadicNumber pow(std::uint64_t e) const;

    // Exact division by a small positive machine integer.
    PadicNumber div_small(std::uint64_t n) const;

    // Discard knowledge beyond p^m.
    PadicNumber truncated(std::int64_t abs_precision) const;

    /// Canonical text form, bit-exact:
    ///   p^<v> * [d0,d1,...] + O(p^<m>)   or   0 + O(p^<m>)
    std::string str() const;
    /// Accepts the canonical form plus rational literals "a" and "a/b".
    static PadicNumber parse(const PadicContext& ctx, const std::string& text);

private:
    PadicNumber(const PadicContext& ctx) : ctx_(ctx) {}

    PadicContext ctx_;
    bool zero_ = true;
    std::int64_t valuation_ = 0;
    std::int64_t abs_precision_ = 0;
    std::vector<std::uint64_t> digits_;  // significant window, size = m - v when nonzero
};

/// |x - y|_p <= p^{-m}; the library-wide meaning of "equal at precision m".
bool eq_at_precision(const PadicNumber& x, const PadicNumber& y, std::int64_t m);

/// Power series sum x^n/n!, term-valuation stopping rule.
/// Requires |x|_p < p^{-1/(p-1)} (v >= 1 for odd p, v >= 2 for p = 2).
PadicNumber exp_p(const PadicNumber& x);

/// Power series sum (-1)^{n+1} (x-1)^n / n; requires |x - 1|_p < 1.
PadicNumber log_p(const PadicNumber& x);

}  // namespace potts
