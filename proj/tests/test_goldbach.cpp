#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldosc/error.hpp"
#include "goldosc/goldbach.hpp"
#include "support.hpp"

#include <cmath>
#include <sstream>

using namespace goldosc;

namespace {

long double ld(const Real& r) { return mpfr_get_ld(r.get(), MPFR_RNDN); }

// Lambda(n) by trial division in long double.
long double lambda_oracle(unsigned n) {
    for (unsigned p = 2; p <= n; ++p) {
        if (n % p) continue;
        unsigned m = n;
        while (m % p == 0) m /= p;
        return m == 1 ? std::log(static_cast<long double>(p)) : 0.0L;
    }
    return 0.0L;
}

}  // namespace

TEST_CASE("von Mangoldt") {
    CHECK(von_mangoldt(1).is_zero());
    CHECK(von_mangoldt(6).is_zero());
    CHECK(std::fabs(ld(von_mangoldt(8)) - std::log(2.0L)) < 1e-18L);
    CHECK(std::fabs(ld(von_mangoldt(49)) - std::log(7.0L)) < 1e-18L);
    CHECK(std::fabs(ld(von_mangoldt(9973)) - std::log(9973.0L)) < 1e-18L);
    CHECK_THROWS_AS(von_mangoldt(0), PreconditionError);
    const MangoldtSieve sieve(2000);
    for (unsigned n = 1; n <= 2000; ++n) {
        CAPTURE(n);
        CHECK(std::fabs(ld(sieve.lambda(n)) - lambda_oracle(n)) < 1e-17L);
        CHECK(sieve.lambda(n) == von_mangoldt(n));
    }
    CHECK(sieve.primes().size() == 303);
}

TEST_CASE("R(n) small values") {
    CHECK(r_of_n(4).to_fixed(6) == "0.480453");  // log(2)^2
    CHECK(r_of_n(5).to_fixed(6) == "1.523000");  // 2 log 2 log 3 = 1.5230000208...
    CHECK(r_of_n(2).is_zero());
    CHECK(r_of_n(3).is_zero());
    const long double l2 = std::log(2.0L), l3 = std::log(3.0L), l5 = std::log(5.0L);
    // 10 = 3+7 = 5+5 = 7+3 = 2+8 = 8+2
    const long double l7 = std::log(7.0L);
    CHECK(std::fabs(ld(r_of_n(10)) - (2 * l3 * l7 + l5 * l5 + 2 * l2 * l2)) < 1e-17L);
    CHECK_THROWS_AS(r_of_n(1), PreconditionError);
}

TEST_CASE("singular series") {
    for (std::uint64_t n : {3u, 5u, 99u, 1001u}) CHECK(singular_series(n, 1000).value.is_zero());
    const SingularSeries s4 = singular_series(4, 100000);
    const SingularSeries s6 = singular_series(6, 100000);
    CHECK(abs(s6.value / s4.value - Real(2L, 128)) < Real::parse("1e-30", 128));
    // 2 C_2, twice the twin prime constant 0.66016181584686957...
    CHECK(abs(s4.value - Real::parse("1.32032363169373914", 128)) <= s4.truncation_bound);
    CHECK(s4.value.to_fixed(5) == "1.32032");
    CHECK(s4.truncation_bound < Real::parse("2e-5", 64));
    // only the prime divisors matter
    CHECK(singular_series(1024, 5000).value == singular_series(2, 5000).value);
    CHECK_THROWS_AS(singular_series(1, 100), PreconditionError);
    CHECK_THROWS_AS(singular_series(10, 2), PreconditionError);
}

TEST_CASE("sum of R: sieve against direct double loop") {
    for (std::uint64_t x : {10u, 100u, 997u, 4096u, 10000u}) {
        CAPTURE(x);
        const Real a = sum_r_sieve(x), b = sum_r_direct(x);
        CHECK(abs(a - b) <= abs(b) * Real::parse("1e-20", 128));
    }
    long double by_n = 0;
    for (unsigned n = 2; n <= 60; ++n)
        for (unsigned a = 1; a < n; ++a) by_n += lambda_oracle(a) * lambda_oracle(n - a);
    CHECK(std::fabs(ld(sum_r_sieve(60)) - by_n) < 1e-15L);
}

TEST_CASE("explicit formula comparison") {
    const ZeroTable& t = testsupport::zeros_2k();
    const Real T = Real::parse("1420", 128);
    const RSummary r = compare_explicit_formula(20000, t, T);
    CHECK(r.x == 20000);
    CHECK(r.main_term == Real(200000000L, 128));
    CHECK(abs(r.residual) / r.main_term < Real::parse("0.02", 64));
    CHECK(r.residual == r.sum_R - r.main_term - r.zero_term);
    CHECK_THROWS_AS(compare_explicit_formula(99, t, T), PreconditionError);
    CHECK_THROWS_AS(compare_explicit_formula(2000, t, T, 1000), PreconditionError);

    std::ostringstream csv;
    const RSummary rows[] = {r};
    write_csv(csv, rows);
    const std::string text = csv.str();
    CHECK(text.rfind("x,sum_R,main_term,zero_term,residual\n", 0) == 0);
    CHECK(text.find("\n20000,") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}
