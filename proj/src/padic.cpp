#include "potts/padic.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace potts {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;
using i128 = __int128;

constexpr u64 kMaxPrime = (1ULL << 31);

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Inverse of a modulo m (m prime, 0 < a < m), extended Euclid.
u64 word_inverse(u64 a, u64 m) {
    i64 t = 0, new_t = 1;
    i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
    while (new_r != 0) {
        i64 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    assert(r == 1);
    if (t < 0) t += static_cast<i64>(m);
    return static_cast<u64>(t);
}

u64 digit_at(const std::vector<u64>& d, std::size_t i) { return i < d.size() ? d[i] : 0; }

std::vector<u64> vec_add(const std::vector<u64>& a, const std::vector<u64>& b, std::size_t len, u64 p) {
    std::vector<u64> out(len);
    u64 carry = 0;
    for (std::size_t i = 0; i < len; ++i) {
        u64 s = digit_at(a, i) + digit_at(b, i) + carry;
        out[i] = s % p;
        carry = s / p;
    }
    return out;
}

// p^len - a for a != 0 (mod p^len); a has d0 != 0.
std::vector<u64> vec_complement(const std::vector<u64>& a, std::size_t len, u64 p) {
    std::vector<u64> out(len);
    assert(!a.empty() && a[0] != 0);
    out[0] = p - a[0];
    for (std::size_t i = 1; i < len; ++i) out[i] = p - 1 - digit_at(a, i);
    return out;
}

std::vector<u64> vec_mul(const std::vector<u64>& a, const std::vector<u64>& b, std::size_t len, u64 p) {
    std::vector<u128> acc(len, 0);
    const std::size_t na = std::min(a.size(), len);
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        const u128 ai = a[i];
        const std::size_t nb = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < nb; ++j) acc[i + j] += ai * b[j];
    }
    std::vector<u64> out(len);
    u128 carry = 0;
    for (std::size_t i = 0; i < len; ++i) {
        u128 s = acc[i] + carry;
        out[i] = static_cast<u64>(s % p);
        carry = s / p;
    }
    return out;
}

// Newton lifting of the inverse of a unit digit window.
std::vector<u64> vec_inv(const std::vector<u64>& a, std::size_t len, u64 p) {
    assert(!a.empty() && a[0] % p != 0);
    std::vector<u64> z{word_inverse(a[0], p)};
    std::size_t cur = 1;
    while (cur < len) {
        cur = std::min(cur * 2, len);
        std::vector<u64> t = vec_mul(a, z, cur, p);
        // w = 2 - t (mod p^cur)
        std::vector<u64> w(cur, 0);
        i128 borrow = 0;
        for (std::size_t i = 0; i < cur; ++i) {
            i128 v = (i == 0 ? 2 : 0) - static_cast<i128>(t[i]) - borrow;
            borrow = 0;
            while (v < 0) {
                v += p;
                ++borrow;
            }
            w[i] = static_cast<u64>(v);
        }
        z = vec_mul(z, w, cur, p);
    }
    return z;
}

// Digit division of a unit window by a small unit u (u % p != 0).
std::vector<u64> vec_smalldiv(const std::vector<u64>& d, std::size_t len, u64 u, u64 p) {
    std::vector<u64> r(d.begin(), d.begin() + std::min(d.size(), len));
    r.resize(len, 0);
    std::vector<u64> y(len);
    const u64 inv0 = word_inverse(u % p, p);
    for (std::size_t i = 0; i < len; ++i) {
        const u64 yi = (static_cast<u128>(r[i]) * inv0) % p;
        y[i] = yi;
        if (yi == 0) continue;
        u128 t = static_cast<u128>(u) * yi;
        u64 borrow = 0;
        for (std::size_t j = i; j < len && (t != 0 || borrow != 0); ++j) {
            const u64 tj = static_cast<u64>(t % p);
            t /= p;
            i128 cur = static_cast<i128>(r[j]) - tj - borrow;
            borrow = cur < 0 ? 1 : 0;
            if (cur < 0) cur += p;
            r[j] = static_cast<u64>(cur);
        }
        assert(r[i] == 0);
    }
    return y;
}

std::vector<u64> base_p_digits(u64 value, u64 p) {
    std::vector<u64> d;
    while (value != 0) {
        d.push_back(value % p);
        value /= p;
    }
    return d;
}

i64 ilog_base(u64 p, u64 n) {
    i64 e = 0;
    while (n >= p) {
        n /= p;
        ++e;
    }
    return e;
}

}  // namespace

PadicContext::PadicContext(std::uint64_t prime, int precision) : prime_(prime), precision_(precision) {
    if (prime < 2 || prime >= kMaxPrime || !is_prime_u64(prime))
        throw DomainError("context prime must be a prime below 2^31");
    if (precision < 1) throw DomainError("context precision must be at least 1");
}

std::int64_t Norm::exponent() const {
    if (zero_) throw Error("zero norm has no exponent");
    return exponent_;
}

std::string Norm::str() const {
    if (zero_) return "0";
    std::ostringstream os;
    os << prime_ << "^" << -exponent_;
    return os.str();
}

namespace {

// Canonical constructor: clips the digit window to the knowledge bound m,
// strips low zeros into the valuation, caps at N significant digits.
PadicNumber make_value(const PadicContext& ctx, i64 v, std::vector<u64> digits, i64 m) {
    std::size_t nz = 0;
    while (nz < digits.size() && digits[nz] == 0) ++nz;
    if (nz == digits.size()) return PadicNumber::zero(ctx, m);
    v += static_cast<i64>(nz);
    digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(nz));
    i64 len = std::min<i64>(m - v, ctx.precision());
    if (len <= 0) return PadicNumber::zero(ctx, m);
    digits.resize(static_cast<std::size_t>(len), 0);
    return PadicNumber::from_unit_digits(ctx, v, std::move(digits), v + len);
}

i64 factor_out_prime(u64& value, u64 p) {
    i64 v = 0;
    while (value % p == 0) {
        value /= p;
        ++v;
    }
    return v;
}

}  // namespace

PadicNumber PadicNumber::zero(const PadicContext& ctx) { return zero(ctx, ctx.precision()); }

PadicNumber PadicNumber::zero(const PadicContext& ctx, std::int64_t abs_precision) {
    PadicNumber x(ctx);
    x.zero_ = true;
    x.abs_precision_ = abs_precision;
    return x;
}

PadicNumber PadicNumber::from_unit_digits(const PadicContext& ctx, std::int64_t valuation,
                                          std::vector<std::uint64_t> digits, std::int64_t abs_precision) {
    if (digits.empty() || digits[0] == 0)
        throw DomainError("unit digit window must start with a nonzero digit");
    for (u64 d : digits)
        if (d >= ctx.prime()) throw DomainError("digit out of range");
    if (abs_precision != valuation + static_cast<i64>(digits.size()) ||
        static_cast<int>(digits.size()) > ctx.precision())
        throw DomainError("digit window inconsistent with precision bounds");
    PadicNumber x(ctx);
    x.zero_ = false;
    x.valuation_ = valuation;
    x.abs_precision_ = abs_precision;
    x.digits_ = std::move(digits);
    return x;
}

PadicNumber PadicNumber::from_integer(const PadicContext& ctx, long long value) {
    if (value == 0) return zero(ctx);
    const u64 p = ctx.prime();
    u64 mag = value < 0 ? 0ULL - static_cast<u64>(value) : static_cast<u64>(value);
    const i64 v = factor_out_prime(mag, p);
    std::vector<u64> d = base_p_digits(mag, p);
    d.resize(static_cast<std::size_t>(ctx.precision()), 0);
    if (value < 0) d = vec_complement(d, d.size(), p);
    return make_value(ctx, v, std::move(d), v + ctx.precision());
}

PadicNumber PadicNumber::from_rational(const PadicContext& ctx, long long num, long long den) {
    if (den == 0) throw DivisionByZero();
    if (num == 0) return zero(ctx);
    const u64 p = ctx.prime();
    const std::size_t n = static_cast<std::size_t>(ctx.precision());
    u64 a = num < 0 ? 0ULL - static_cast<u64>(num) : static_cast<u64>(num);
    u64 b = den < 0 ? 0ULL - static_cast<u64>(den) : static_cast<u64>(den);
    const i64 v = factor_out_prime(a, p) - factor_out_prime(b, p);
    std::vector<u64> da = base_p_digits(a, p);
    da.resize(n, 0);
    std::vector<u64> db = base_p_digits(b, p);
    db.resize(n, 0);
    std::vector<u64> d = vec_mul(da, vec_inv(db, n, p), n, p);
    if ((num < 0) != (den < 0)) d = vec_complement(d, n, p);
    return make_value(ctx, v, std::move(d), v + ctx.precision());
}

std::int64_t PadicNumber::valuation() const {
    if (zero_)
        throw PrecisionExhausted("no significant digits: value is zero at precision " +
                                 std::to_string(abs_precision_));
    return valuation_;
}

Norm PadicNumber::norm() const {
    return zero_ ? Norm::zero(ctx_.prime()) : Norm::of(ctx_.prime(), valuation_);
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    return from_unit_digits(ctx_, valuation_, vec_complement(digits_, digits_.size(), ctx_.prime()),
                            abs_precision_);
}

PadicNumber PadicNumber::truncated(std::int64_t m) const {
    if (zero_) return zero(ctx_, std::min(m, abs_precision_));
    if (m >= abs_precision_) return *this;
    if (m <= valuation_) return zero(ctx_, m);
    std::vector<u64> d(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(m - valuation_));
    return make_value(ctx_, valuation_, std::move(d), m);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    if (a.ctx_ != b.ctx_) throw ContextMismatch();
    if (a.zero_ && b.zero_) return PadicNumber::zero(a.ctx_, std::min(a.abs_precision_, b.abs_precision_));
    if (a.zero_) return b.truncated(std::min(a.abs_precision_, b.abs_precision_));
    if (b.zero_) return a.truncated(std::min(a.abs_precision_, b.abs_precision_));
    const u64 p = a.ctx_.prime();
    const i64 m = std::min(a.abs_precision_, b.abs_precision_);
    const i64 base = std::min(a.valuation_, b.valuation_);
    const i64 len = m - base;
    if (len <= 0) return PadicNumber::zero(a.ctx_, m);
    std::vector<u64> da(static_cast<std::size_t>(len), 0);
    std::vector<u64> db(static_cast<std::size_t>(len), 0);
    for (i64 i = 0; i < len; ++i) {
        const i64 ia = i - (a.valuation_ - base);
        const i64 ib = i - (b.valuation_ - base);
        if (ia >= 0 && ia < static_cast<i64>(a.digits_.size())) da[static_cast<std::size_t>(i)] = a.digits_[static_cast<std::size_t>(ia)];
        if (ib >= 0 && ib < static_cast<i64>(b.digits_.size())) db[static_cast<std::size_t>(i)] = b.digits_[static_cast<std::size_t>(ib)];
    }
    return make_value(a.ctx_, base, vec_add(da, db, static_cast<std::size_t>(len), p), m);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    if (a.ctx_ != b.ctx_) throw ContextMismatch();
    if (a.zero_ && b.zero_) return PadicNumber::zero(a.ctx_, a.abs_precision_ + b.abs_precision_);
    if (a.zero_) return PadicNumber::zero(a.ctx_, a.abs_precision_ + b.valuation_);
    if (b.zero_) return PadicNumber::zero(a.ctx_, b.abs_precision_ + a.valuation_);
    const std::size_t s = std::min(a.digits_.size(), b.digits_.size());
    const i64 v = a.valuation_ + b.valuation_;
    return make_value(a.ctx_, v, vec_mul(a.digits_, b.digits_, s, a.ctx_.prime()), v + static_cast<i64>(s));
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    if (a.ctx_ != b.ctx_) throw ContextMismatch();
    if (b.zero_) throw DivisionByZero();
    if (a.zero_) return PadicNumber::zero(a.ctx_, a.abs_precision_ - b.valuation_);
    const u64 p = a.ctx_.prime();
    const std::size_t s = std::min(a.digits_.size(), b.digits_.size());
    const i64 v = a.valuation_ - b.valuation_;
    std::vector<u64> db(b.digits_.begin(), b.digits_.begin() + static_cast<std::ptrdiff_t>(s));
    return make_value(a.ctx_, v, vec_mul(a.digits_, vec_inv(db, s, p), s, p), v + static_cast<i64>(s));
}

PadicNumber PadicNumber::pow(std::uint64_t e) const {
    if (e == 0) return from_integer(ctx_, 1);
    if (zero_) return zero(ctx_, abs_precision_ * static_cast<i64>(e));
    PadicNumber acc = from_integer(ctx_, 1);
    PadicNumber base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

PadicNumber PadicNumber::div_small(std::uint64_t n) const {
    if (n == 0) throw DivisionByZero();
    const u64 p = ctx_.prime();
    u64 u = n;
    const i64 e = factor_out_prime(u, p);
    if (zero_) return zero(ctx_, abs_precision_ - e);
    if (u == 1) {
        std::vector<u64> d = digits_;
        return make_value(ctx_, valuation_ - e, std::move(d), abs_precision_ - e);
    }
    std::vector<u64> d = vec_smalldiv(digits_, digits_.size(), u, p);
    return make_value(ctx_, valuation_ - e, std::move(d), abs_precision_ - e);
}

bool eq_at_precision(const PadicNumber& x, const PadicNumber& y, std::int64_t m) {
    if (x.context() != y.context()) throw ContextMismatch();
    const PadicNumber d = x - y;
    if (d.is_zero()) return m <= d.abs_precision();
    return d.valuation() >= m;
}

PadicNumber exp_p(const PadicNumber& x) {
    const PadicContext& ctx = x.context();
    const PadicNumber one = PadicNumber::from_integer(ctx, 1);
    if (x.is_zero()) return one.truncated(x.abs_precision());
    const i64 v = x.valuation();
    if (v < ctx.exp_min_valuation())
        throw DomainError("exp argument outside the convergence ball |x| < p^(-1/(p-1))");
    const i64 p = static_cast<i64>(ctx.prime());
    const i64 target = ctx.precision();
    PadicNumber sum = one;
    PadicNumber term = one;
    for (i64 n = 1;; ++n) {
        // Legendre bound: val(x^k/k!) >= k v - (k-1)/(p-1), increasing in k.
        if (n * v * (p - 1) - (n - 1) >= target * (p - 1)) break;
        term = (term * x).div_small(static_cast<u64>(n));
        sum = sum + term;
    }
    return sum;
}

PadicNumber log_p(const PadicNumber& x) {
    const PadicContext& ctx = x.context();
    const PadicNumber y = x - PadicNumber::from_integer(ctx, 1);
    if (y.is_zero()) return PadicNumber::zero(ctx, y.abs_precision());
    const i64 v = y.valuation();
    if (v < 1) throw DomainError("log argument outside the ball |x - 1| < 1");
    const i64 target = y.abs_precision();
    PadicNumber sum = y;
    PadicNumber pw = y;
    for (i64 n = 2;; ++n) {
        // val(y^k/k) >= k v - floor(log_p k), non-decreasing in k.
        if (n * v - ilog_base(ctx.prime(), static_cast<u64>(n)) >= target) break;
        pw = pw * y;
        const PadicNumber term = pw.div_small(static_cast<u64>(n));
        sum = (n % 2 == 1) ? sum + term : sum - term;
    }
    return sum;
}

std::string PadicNumber::str() const {
    std::ostringstream os;
    if (zero_) {
        os << "0 + O(" << ctx_.prime() << "^" << abs_precision_ << ")";
        return os.str();
    }
    os << ctx_.prime() << "^" << valuation_ << " * [";
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i) os << ",";
        os << digits_[i];
    }
    os << "] + O(" << ctx_.prime() << "^" << abs_precision_ << ")";
    return os.str();
}

namespace {

struct Scanner {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError("expected '" + std::string(1, c) + "' in p-adic literal");
    }
    long long integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected integer in p-adic literal");
        long long val = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            val = val * 10 + (s[i] - '0');
            ++i;
        }
        return neg ? -val : val;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
};

}  // namespace

PadicNumber PadicNumber::parse(const PadicContext& ctx, const std::string& text) {
    Scanner sc{text};
    if (text.find('[') != std::string::npos) {
        const long long base = sc.integer();
        if (base < 0 || static_cast<u64>(base) != ctx.prime())
            throw ParseError("literal prime does not match the context");
        sc.expect('^');
        const long long v = sc.integer();
        sc.expect('*');
        sc.expect('[');
        std::vector<u64> digits;
        if (!sc.eat(']')) {
            for (;;) {
                const long long d = sc.integer();
                if (d < 0 || static_cast<u64>(d) >= ctx.prime()) throw ParseError("digit out of range");
                digits.push_back(static_cast<u64>(d));
                if (sc.eat(']')) break;
                sc.expect(',');
            }
        }
        sc.expect('+');
        sc.expect('O');
        sc.expect('(');
        sc.integer();
        sc.expect('^');
        const long long m = sc.integer();
        sc.expect(')');
        if (!sc.done()) throw ParseError("trailing characters in p-adic literal");
        return make_value(ctx, v, std::move(digits), m);
    }
    if (text.find('O') != std::string::npos) {
        const long long z = sc.integer();
        if (z != 0) throw ParseError("malformed p-adic literal");
        sc.expect('+');
        sc.expect('O');
        sc.expect('(');
        sc.integer();
        sc.expect('^');
        const long long m = sc.integer();
        sc.expect(')');
        if (!sc.done()) throw ParseError("trailing characters in p-adic literal");
        return zero(ctx, m);
    }
    const long long num = sc.integer();
    long long den = 1;
    if (sc.eat('/')) den = sc.integer();
    if (!sc.done()) throw ParseError("trailing characters in rational literal");
    return from_rational(ctx, num, den);
}

}  // namespace potts
