#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "potts/padic.hpp"

using namespace potts;

TEST_CASE("context validation") {
    CHECK_THROWS_AS(PadicContext(4, 32), DomainError);
    CHECK_THROWS_AS(PadicContext(1, 32), DomainError);
    CHECK_THROWS_AS(PadicContext(5, 0), DomainError);
    const PadicContext ctx(5, 32);
    CHECK(ctx.prime() == 5);
    CHECK(ctx.precision() == 32);
    CHECK(PadicContext(2, 8).exp_min_valuation() == 2);
    CHECK(ctx.exp_min_valuation() == 1);
}

TEST_CASE("norms of integers and rationals") {
    const PadicContext ctx(5, 32);
    CHECK(PadicNumber::from_integer(ctx, 0).norm().is_zero());
    CHECK(PadicNumber::from_integer(ctx, 50).norm() == Norm::of(5, 2));  // 50 = 2*5^2
    CHECK(PadicNumber::from_rational(ctx, 1, 15).norm() == Norm::of(5, -1));
    CHECK(PadicNumber::from_rational(ctx, 1, 15).norm().str() == "5^1");
    CHECK(Norm::of(5, 2).str() == "5^-2");
    CHECK(Norm::zero(5).str() == "0");
    CHECK(Norm::of(5, 2) < Norm::of(5, 1));
    CHECK(Norm::zero(5) < Norm::of(5, 30));
}

TEST_CASE("rational digits against the modular-inverse oracle") {
    const PadicContext ctx(5, 2);
    const PadicNumber x = PadicNumber::from_rational(ctx, 1, 6);
    CHECK(oracle::value_mod(x, 2) == 21);  // 6 * 21 = 126 = 1 (mod 25)
    CHECK(oracle::value_mod(x, 2) == oracle::rational_mod(1, 6, 5, 2));

    const PadicContext big(7, 12);
    std::mt19937_64 rng(7001);
    std::uniform_int_distribution<long long> num(-80, 80);
    std::uniform_int_distribution<long long> den(1, 80);
    for (int i = 0; i < 300; ++i) {
        const long long a = num(rng);
        long long b = den(rng);
        while (b % 7 == 0) b = den(rng);
        if (a == 0) continue;
        const PadicNumber v = PadicNumber::from_rational(big, a, b);
        if (v.valuation() < 0) continue;
        CHECK(oracle::value_mod(v, 8) == oracle::rational_mod(a, b, 7, 8));
    }
}

TEST_CASE("field axioms and exactness on random rationals") {
    const PadicContext ctx(5, 20);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> num(-60, 60);
    std::uniform_int_distribution<long long> den(1, 60);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        const long long a = num(rng), c = num(rng);
        long long b = den(rng), d = den(rng);
        while (b % 5 == 0) b = den(rng);
        while (d % 5 == 0) d = den(rng);
        const PadicNumber x = PadicNumber::from_rational(ctx, a, b);
        const PadicNumber y = PadicNumber::from_rational(ctx, c, d);

        // oracle on the exact rationals, read modulo 5^8
        const auto check = [&](const PadicNumber& got, long long rn, long long rd) {
            if (got.is_zero()) {
                CHECK(oracle::rational_mod(rn, rd, 5, 8) == 0);
                return;
            }
            if (got.valuation() < 0) return;
            CHECK(oracle::value_mod(got, 8) == oracle::rational_mod(rn, rd, 5, 8));
            ++checked;
        };
        check(x + y, a * d + c * b, b * d);
        check(x - y, a * d - c * b, b * d);
        check(x * y, a * c, b * d);
        if (c != 0 && c % 5 != 0) check(x / y, a * d, b * c);
    }
    CHECK(checked > 600);
}

TEST_CASE("x/x is one, cancellation raises valuation") {
    const PadicContext ctx(5, 32);
    std::mt19937_64 rng(11);
    const PadicNumber one = PadicNumber::from_integer(ctx, 1);
    for (int i = 0; i < 50; ++i) {
        const PadicNumber x = oracle::random_padic(ctx, rng, -3, 6);
        CHECK(eq_at_precision(x / x, one, ctx.precision()));
    }

    const PadicNumber s = PadicNumber::from_integer(ctx, 3) + PadicNumber::from_integer(ctx, 22);
    CHECK(s.valuation() == 2);  // 25 = 5^2
    CHECK(s.norm() == Norm::of(5, 2));

    const PadicNumber z = PadicNumber::from_integer(ctx, 3) - PadicNumber::from_integer(ctx, 3);
    CHECK(z.is_zero());
    CHECK(z.abs_precision() == 32);
    CHECK_THROWS_AS(z.valuation(), PrecisionExhausted);
}

TEST_CASE("division guards") {
    const PadicContext ctx(5, 32);
    const PadicNumber one = PadicNumber::from_integer(ctx, 1);
    CHECK_THROWS_AS(one / PadicNumber::zero(ctx), DivisionByZero);
    CHECK_THROWS_AS(PadicNumber::from_rational(ctx, 1, 0), DivisionByZero);
    const PadicContext other(7, 32);
    CHECK_THROWS_AS(one + PadicNumber::from_integer(other, 1), ContextMismatch);
}

TEST_CASE("ultrametric inequality with equality at distinct norms") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        const PadicContext ctx(p, 24);
        std::mt19937_64 rng(100 + p);
        for (int i = 0; i < 400; ++i) {
            const PadicNumber x = oracle::random_padic(ctx, rng, -4, 8);
            const PadicNumber y = oracle::random_padic(ctx, rng, -4, 8);
            const Norm nx = x.norm(), ny = y.norm(), ns = (x + y).norm();
            CHECK(ns <= Norm::max(nx, ny));
            if (nx != ny) CHECK(ns == Norm::max(nx, ny));
            CHECK((x * y).norm() == nx * ny);
        }
    }
}

TEST_CASE("exp examples and domain guard") {
    const PadicContext ctx(5, 32);
    const PadicNumber one = PadicNumber::from_integer(ctx, 1);
    CHECK(eq_at_precision(exp_p(PadicNumber::zero(ctx)), one, 32));

    const PadicNumber e5 = exp_p(PadicNumber::from_integer(ctx, 5));
    CHECK(oracle::value_mod(e5, 2) == 6);  // rational partial-sum oracle below
    CHECK(oracle::value_mod(e5, 2) == oracle::exp_partial_mod(5, 5, 2));
    CHECK(oracle::value_mod(e5, 6) == oracle::exp_partial_mod(5, 5, 6));

    CHECK_THROWS_AS(exp_p(one), DomainError);
    const PadicContext two(2, 24);
    CHECK_THROWS_AS(exp_p(PadicNumber::from_integer(two, 2)), DomainError);
    CHECK_NOTHROW(exp_p(PadicNumber::from_integer(two, 4)));
}

TEST_CASE("log examples and domain guard") {
    const PadicContext ctx(5, 32);
    CHECK(log_p(PadicNumber::from_integer(ctx, 1)).is_zero());

    const PadicNumber l6 = log_p(PadicNumber::from_integer(ctx, 6));
    CHECK(oracle::value_mod(l6, 2) == 5);
    CHECK(oracle::value_mod(l6, 2) == oracle::log_partial_mod(5, 5, 2));
    CHECK(oracle::value_mod(l6, 7) == oracle::log_partial_mod(5, 5, 7));

    CHECK_THROWS_AS(log_p(PadicNumber::from_integer(ctx, 2)), DomainError);

    // round trip at full working precision
    const PadicNumber x = PadicNumber::from_integer(ctx, 5);
    CHECK(eq_at_precision(log_p(exp_p(x)), x, 32));
}

TEST_CASE("exp/log identity suite, randomized") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        const PadicContext ctx(p, 32);
        const PadicNumber one = PadicNumber::from_integer(ctx, 1);
        std::mt19937_64 rng(900 + p);
        for (int i = 0; i < 200; ++i) {
            const PadicNumber x = oracle::random_padic(ctx, rng, 1, 5);
            const PadicNumber ex = exp_p(x);
            CHECK(ex.norm() == Norm::of(p, 0));
            CHECK((ex - one).norm() == x.norm());
            const PadicNumber lx = log_p(one + x);
            CHECK(lx.norm() == x.norm());
            CHECK(eq_at_precision(log_p(ex), x, 28));
            CHECK(eq_at_precision(exp_p(lx), one + x, 28));
        }
    }
}

TEST_CASE("product difference stays within max coordinate distance") {
    const PadicContext ctx(5, 24);
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> len(1, 8);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = len(rng);
        PadicNumber pa = PadicNumber::from_integer(ctx, 1);
        PadicNumber pb = PadicNumber::from_integer(ctx, 1);
        Norm max = Norm::zero(5);
        for (int i = 0; i < n; ++i) {
            const PadicNumber a = oracle::random_padic(ctx, rng, 0, 4);
            const PadicNumber b = oracle::random_padic(ctx, rng, 0, 4);
            pa = pa * a;
            pb = pb * b;
            max = Norm::max(max, (a - b).norm());
        }
        CHECK((pa - pb).norm() <= max);
    }
}

TEST_CASE("eq_at_precision boundary") {
    const PadicContext ctx(5, 32);
    const PadicNumber a = PadicNumber::from_integer(ctx, 6);
    const PadicNumber b = PadicNumber::from_integer(ctx, 31);
    CHECK(eq_at_precision(a, b, 2));   // 31 - 6 = 25
    CHECK(!eq_at_precision(a, b, 3));  // valuation exactly 2
    CHECK(eq_at_precision(a, a, 32));
}

TEST_CASE("serialization round trip and parsing") {
    const PadicContext ctx(5, 8);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const PadicNumber x = oracle::random_padic(ctx, rng, -3, 5);
        const PadicNumber y = PadicNumber::parse(ctx, x.str());
        CHECK(x.str() == y.str());
        CHECK(eq_at_precision(x, y, x.abs_precision()));
    }
    const PadicNumber z = PadicNumber::zero(ctx, 6);
    CHECK(z.str() == "0 + O(5^6)");
    CHECK(PadicNumber::parse(ctx, z.str()).str() == z.str());

    CHECK(eq_at_precision(PadicNumber::parse(ctx, "3/4"), PadicNumber::from_rational(ctx, 3, 4), 8));
    CHECK(eq_at_precision(PadicNumber::parse(ctx, "-12"), PadicNumber::from_integer(ctx, -12), 8));
    CHECK_THROWS_AS(PadicNumber::parse(ctx, "7^0 * [1] + O(7^8)"), ParseError);
    CHECK_THROWS_AS(PadicNumber::parse(ctx, "junk"), ParseError);
}

TEST_CASE("truncation tracks knowledge honestly") {
    const PadicContext ctx(5, 32);
    const PadicNumber x = PadicNumber::from_integer(ctx, 7);
    const PadicNumber t = x.truncated(3);
    CHECK(t.abs_precision() == 3);
    CHECK(eq_at_precision(t, x, 3));
    CHECK(x.truncated(0).is_zero());
    // multiplying limited-precision values keeps the weaker window
    const PadicNumber p1 = t * x;
    CHECK(p1.abs_precision() == 3);
}
