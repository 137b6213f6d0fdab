#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "unicol/padic.hpp"

using namespace unicol;

// Long-division oracle: base-p digits of num/den, little-endian, n digits.
static std::vector<long> long_division_digits(long p, long num, long den, long n) {
    std::vector<long> ds;
    mpz_class m = pow_p(p, n);
    mpz_class d = den, inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    mpz_class x = (mpz_class(num) * inv) % m;
    if (x < 0) x += m;
    for (long i = 0; i < n; ++i) {
        mpz_class q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p);
        ds.push_back(r.get_si());
        x = q;
    }
    return ds;
}

TEST_CASE("field arithmetic basics") {
    long p = 5, N = 12;
    Padic a = Padic::from_int(p, 7, N);
    Padic z = Padic::zero(p);
    CHECK((a + z).equals_mod_precision(a));            // a + 0 = a
    CHECK((a * z).is_zero());
    Padic ten = Padic::from_int(p, 10, N);
    Padic fifteen = Padic::from_int(p, 15, N);
    CHECK((ten * fifteen).valuation() == 2);           // v(10*15) = 2 at p=5
    Padic b = Padic::from_int(p, 3, N);
    CHECK(((a + b) - b).equals_mod_precision(a));
    CHECK(((a * b) / b).equals_mod_precision(a));
    CHECK_THROWS_AS(a / z, DomainError);
    Padic q7 = Padic::from_int(7, 1, N);
    CHECK_THROWS_AS(a + q7, DomainError);
}

TEST_CASE("geometric series digits of 1/(1-5)") {
    // 1/(1-5) = -1/4 has 5-adic digits 1,1,1,1,... (long-division oracle)
    long p = 5, N = 10;
    Padic x = Padic::from_int(p, 1, N) / Padic::from_int(p, -4, N);
    auto digits = x.unit_digits();
    auto oracle = long_division_digits(p, 1, -4, N);
    REQUIRE(digits.size() == oracle.size());
    for (size_t i = 0; i < digits.size(); ++i) CHECK(digits[i] == oracle[i]);
    for (long d : digits) CHECK(d == 1);
}

TEST_CASE("valuation rules") {
    long p = 5, N = 12;
    Padic a = Padic::from_int(p, 50, N);   // v = 2
    Padic b = Padic::from_int(p, 15, N);   // v = 1
    CHECK((a * b).valuation() == 3);
    CHECK((a / b).valuation() == 1);
    CHECK((a + b).valuation() == 1);
    // cancellation raises valuation and is tracked
    Padic c = Padic::from_int(p, 7, N) - Padic::from_int(p, 7, N);
    CHECK(c.is_zero());
    CHECK(c.abs_precision() == N);
}

TEST_CASE("teichmueller") {
    long p = 5, N = 4;
    CHECK(teichmueller(p, 1, N).lift(N) == 1);
    CHECK(teichmueller(p, 4, N).lift(N) == 624); // -1 mod 5^4
    // derived oracle: iterate x -> x^p to stabilization
    mpz_class x = 2, m = pow_p(p, N);
    for (int i = 0; i < 10; ++i) mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), p, m.get_mpz_t());
    CHECK(teichmueller(p, 2, N).lift(N) == x);
    CHECK(teichmueller(p, 0, N).is_zero());

    // idempotence under x -> x^p at full working precision
    for (long cls = 1; cls < p; ++cls) {
        Padic t = teichmueller(p, cls, 20);
        CHECK(t.pow(p).equals_mod_precision(t));
    }
}

TEST_CASE("log_unit") {
    long p = 5, N = 12;
    CHECK(log_unit(Padic::from_int(p, 1, N)).is_zero());
    for (long cls = 1; cls < p; ++cls)
        CHECK(log_unit(teichmueller(p, cls, N)).is_zero()); // torsion units
    // direct series oracle for log(1+5): sum (-1)^(n+1) 5^n / n
    Padic x = Padic::from_int(p, 5, N + 4);
    Padic acc = Padic::zero(p, N + 4);
    Padic xp = x;
    for (long n = 1; n <= N + 6; ++n) {
        Padic term = xp / Padic::from_int(p, n, N + 8);
        if (n % 2 == 0) term = -term;
        acc += term;
        xp *= x;
    }
    Padic got = log_unit(Padic::from_int(p, 6, N + 4));
    CHECK(got.agreement_valuation(acc) >= N);
    CHECK_THROWS_AS(log_unit(Padic::from_int(p, 10, N)), DomainError);
}

TEST_CASE("log homomorphism property") {
    long p = 7, N = 14;
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 25; ++i) {
        long a = 1 + static_cast<long>(rng() % 1000000);
        long b = 1 + static_cast<long>(rng() % 1000000);
        while (a % p == 0) ++a;
        while (b % p == 0) ++b;
        Padic ua = Padic::from_int(p, a, N);
        Padic ub = Padic::from_int(p, b, N);
        Padic lhs = log_unit(ua * ub);
        Padic rhs = log_unit(ua) + log_unit(ub);
        CHECK(lhs.agreement_valuation(rhs) >= N - 2);
    }
}

TEST_CASE("serialization round trip is bit exact") {
    std::mt19937_64 rng(999);
    for (int i = 0; i < 50; ++i) {
        long p = (i % 2) ? 5 : 7;
        long val = static_cast<long>(rng() % 2000000) - 1000000;
        Padic x = Padic::from_int(p, val, 10 + (i % 5));
        Padic y = Padic::from_json(x.to_json());
        CHECK(x.to_json() == y.to_json());
        CHECK(x.equals_mod_precision(y));
        CHECK(x.valuation() == y.valuation());
        CHECK(x.abs_precision() == y.abs_precision());
    }
    Padic z = Padic::zero(5, 8);
    CHECK(Padic::from_json(z.to_json()).to_json() == z.to_json());
    Padic ez = Padic::zero(5);
    CHECK(Padic::from_json(ez.to_json()).to_json() == ez.to_json());
}

TEST_CASE("precision is a lower bound against 2x-precision oracle") {
    long p = 5, N = 10;
    std::mt19937_64 rng(777);
    for (int i = 0; i < 40; ++i) {
        long a = static_cast<long>(rng() % 100000) + 1;
        long b = static_cast<long>(rng() % 100000) + 1;
        Padic xa = Padic::from_int(p, a, N), xb = Padic::from_int(p, b, N);
        Padic ya = Padic::from_int(p, a, 2 * N), yb = Padic::from_int(p, b, 2 * N);
        Padic lo = (xa * xb + xa) / xb - xa;
        Padic hi = (ya * yb + ya) / yb - ya;
        CHECK(lo.agreement_valuation(hi) >= lo.abs_precision());
    }
}
