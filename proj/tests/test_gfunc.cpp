#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goldosc/error.hpp"
#include "goldosc/gfunc.hpp"
#include "support.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace goldosc;
using testsupport::zeros_2k;

namespace {

using cld = std::complex<long double>;

// Re x^{i gamma} / ((1/2 + i gamma)(3/2 + i gamma)) straight from the complex form.
long double term_oracle(long double gamma, long double log_x) {
    const cld num = std::exp(cld(0.0L, gamma * log_x));
    const cld den = cld(0.5L, gamma) * cld(1.5L, gamma);
    return (num / den).real();
}

long double ld(const Real& r) { return mpfr_get_ld(r.get(), MPFR_RNDN); }

Real R(const char* s, mpfr_prec_t p = 256) { return Real::parse(s, p); }

}  // namespace

TEST_CASE("zero-sum identity constant") {
    const long double oracle =
        1.0L + std::numbers::egamma_v<long double> / 2 - std::log(4 * std::numbers::pi_v<long double>) / 2;
    const Real e = euler_zero_sum_identity();
    CHECK(std::fabs(ld(e) - oracle) < 1e-17L);
    CHECK(e.to_fixed(7) == "0.0230957");
}

TEST_CASE("partial sums of 1/(gamma^2+1/4) increase towards the identity") {
    const ZeroTable& t = zeros_2k();
    const Real target = euler_zero_sum_identity();
    Real s(256), prev(256);
    const Real T = R("1420");
    for (std::size_t k = 1; k <= t.count() && t.gamma(k) <= T; ++k) {
        const Real g(t.gamma(k), 256);
        s += Real(1L, 256) / (g * g + R("0.25"));
        CHECK(s > prev);
        prev = s;
    }
    CHECK(s < target);
    CHECK(target - s < R("1e-3"));
}

TEST_CASE("h envelope equals the max over x of one term") {
    const ZeroTable& t = zeros_2k();
    for (std::size_t k : {1u, 2u, 7u, 100u, 1000u}) {
        const long double g = ld(t.gamma(k));
        long double best = 0;
        // The term is A cos(theta) + B sin(theta); scan theta over a fine grid.
        for (int i = 0; i < 200000; ++i) {
            const long double theta = 2 * std::numbers::pi_v<long double> * i / 200000;
            best = std::max(best, std::fabs(term_oracle(g, theta / g)));
        }
        const long double h = ld(h_envelope(t.gamma(k)));
        CHECK(h >= best);
        CHECK(h - best < 1e-9L * h);
        CHECK(std::fabs(h - 1 / std::abs(cld(0.5L, g) * cld(1.5L, g))) < 1e-18L * h + 1e-30L);
    }
    CHECK_THROWS_AS(h_envelope(Real(0L, 64)), PreconditionError);
}

TEST_CASE("h lies between 1/(g^2+1/4) - g^-4 and that plus 2 g^-6") {
    const ZeroTable& t = zeros_2k();
    for (std::size_t k = 1; k <= t.count(); ++k) {
        const Real g(t.gamma(k), 256);
        const Real base = Real(1L, 256) / (g * g + R("0.25")) - pow(g, -4);
        const Real h = h_envelope(g);
        CHECK(h > base);
        Real two6 = pow(g, -6);
        mpfr_mul_2ui(two6.get(), two6.get(), 1, MPFR_RNDN);
        CHECK(h < base + two6);
    }
}

TEST_CASE("Lehman tail") {
    const Real T = R("1420.41");
    const Real v = lehman_tail(T, 6);
    CHECK(v.to_scientific(3) == "1.26e-15");
    // log T / T^5 by hand
    const long double oracle = std::log(1420.41L) / std::pow(1420.41L, 5);
    CHECK(std::fabs(ld(v) - oracle) < 1e-30L);
    // dominates the tabulated part of the tail
    const ZeroTable& t = zeros_2k();
    Real seen(256);
    for (std::size_t k = 1; k <= t.count(); ++k)
        if (t.gamma(k) > T) seen += pow(Real(t.gamma(k), 256), -6);
    CHECK(seen < v);
    CHECK_THROWS_AS(lehman_tail(Real(17L, 64), 6), PreconditionError);
    CHECK_THROWS_AS(lehman_tail(T, 1), PreconditionError);
}

TEST_CASE("B3 tail formula") {
    const long double T = 1420.41L, pi2 = 2 * std::numbers::pi_v<long double>;
    const long double oracle = (std::log(T) + 1 - std::log(pi2) + (pi2 / T) * (1 + 4 * std::log(T))) / (pi2 * T);
    CHECK(std::fabs(ld(b3_tail(R("1420.41"))) - oracle) < 1e-20L);
    CHECK_THROWS_AS(b3_tail(two_pi_e(256)), PreconditionError);
}

TEST_CASE("evaluate_G matches the complex form") {
    const ZeroTable& t = zeros_2k();
    const Real T = R("500");
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> dist(1 << 10, 60 << 10);
    for (int trial = 0; trial < 20; ++trial) {
        const long num = dist(rng);
        const long double lx = std::ldexp(static_cast<long double>(num), -10);
        const GValue v = evaluate_G_at_log(t, Real(mpq_class(num, 1024), 256), T);
        long double oracle = 0;
        for (std::size_t k = 1; k <= v.zeros_used; ++k)
            oracle += term_oracle(ld(t.gamma(k)), lx);
        CHECK(std::fabs(ld(v.partial) - oracle) < 1e-14L);
        CHECK(v.partial == v.g1 + v.g2);
        CHECK(v.zeros_used == zero_count_below(t, T));
    }
}

TEST_CASE("|partial| stays inside the envelope") {
    const ZeroTable& t = zeros_2k();
    const Real T = R("300");
    Real env(256);
    const std::size_t n = zero_count_below(t, T);
    for (std::size_t k = 1; k <= n; ++k) env += h_envelope(Real(t.gamma(k), 256));
    for (long y : {3L, 17L, 1000L, 123456L}) {
        const GValue v = evaluate_G_at_log(t, Real(y, 256), T);
        CHECK(abs(v.partial) <= env);
    }
}

TEST_CASE("evaluate_G at x agrees with evaluate_G_at_log") {
    const ZeroTable& t = zeros_2k();
    const Real T = R("100");
    const GValue a = evaluate_G(t, Real(100000L, 256), T);
    const GValue b = evaluate_G_at_log(t, log(Real(100000L, 256)), T);
    CHECK(abs(a.partial - b.partial) < R("1e-70"));
    CHECK_THROWS_AS(evaluate_G(t, Real(-1L, 64), T), PreconditionError);
    CHECK_THROWS_AS(evaluate_G(t, Real(2L, 64), R("3000")), PreconditionError);
}

TEST_CASE("huge log x needs table precision") {
    const ZeroTable& t = zeros_2k();
    Real big(1L, 64);
    mpfr_mul_2si(big.get(), big.get(), t.precision_bits(), MPFR_RNDN);
    CHECK_THROWS_AS(evaluate_G_at_log(t, big, R("100")), PrecisionError);
}

TEST_CASE("Table 1 at eps = 0.01 (truncated to 6 places)") {
    const ZeroTable& t = zeros_2k();
    const std::pair<std::size_t, const char*> rows[] = {
        {70, "0.014756"},  {100, "0.016352"}, {150, "0.017837"}, {200, "0.018692"},
        {250, "0.019269"}, {300, "0.019684"}, {350, "0.020001"}, {400, "0.020254"},
        {450, "0.020459"}, {500, "0.020630"}, {600, "0.020902"}, {700, "0.021109"},
        {800, "0.021272"}, {900, "0.021404"}, {1000, "0.021515"}, {2000, "0.022079"},
    };
    const Real eps = R("0.01");
    for (const auto& [N, printed] : rows) {
        CAPTURE(N);
        const BoundReport r = conditional_bound(t, N, eps, Direction::positive);
        CHECK(r.value.to_fixed(6, MPFR_RNDZ) == printed);
        CHECK(r.complete());
        CHECK(r.kind == BoundKind::conditional_positive);
    }
}

TEST_CASE("conditional bound against an independent recomputation") {
    const ZeroTable& t = zeros_2k();
    for (std::size_t N : {70u, 333u, 1500u}) {
        const long double eps = 0.0173L;
        long double s1 = 0, s2 = 0;
        for (std::size_t k = 1; k <= N; ++k) {
            const long double g = ld(t.gamma(k));
            s1 += 1 / (g * g + 0.25L);
            s2 += (3 * std::cos(eps) + 2 * g * std::sin(eps)) / ((g * g + 0.25L) * (g * g + 2.25L));
        }
        const long double gn = ld(t.gamma(N)), gn1 = ld(t.gamma(N + 1));
        const long double T = gn1 - (gn1 - gn) / 100, pi2 = 2 * std::numbers::pi_v<long double>;
        const long double b3 = (std::log(T) + 1 - std::log(pi2) + (pi2 / T) * (1 + 4 * std::log(T))) / (pi2 * T);
        const long double oracle = (1 - eps * eps / 2) * s1 - s2 - b3;
        const BoundReport r = conditional_bound(t, N, R("0.0173"), Direction::positive);
        CHECK(std::fabs(ld(r.value) - oracle) < 1e-15L);
    }
}

TEST_CASE("negative direction is the exact negation") {
    const ZeroTable& t = zeros_2k();
    const Real eps = R("0.02");
    const BoundReport p = conditional_bound(t, 150, eps, Direction::positive);
    const BoundReport n = conditional_bound(t, 150, eps, Direction::negative);
    CHECK(n.value == -p.value);
    CHECK(n.kind == BoundKind::conditional_negative);
}

TEST_CASE("conditional bound is stable in the working precision") {
    const ZeroTable& t = zeros_2k();
    const Real lo = conditional_bound(t, 400, R("0.01", 512), Direction::positive, 128).value;
    const Real hi = conditional_bound(t, 400, R("0.01", 512), Direction::positive, 512).value;
    CHECK(abs(lo - hi) < R("1e-30"));
}

TEST_CASE("conditional bound preconditions") {
    const ZeroTable& t = zeros_2k();
    CHECK_THROWS_AS(conditional_bound(t, 100, R("0"), Direction::positive), PreconditionError);
    CHECK_THROWS_AS(conditional_bound(t, 100, R("1"), Direction::positive), PreconditionError);
    CHECK_THROWS_AS(conditional_bound(t, t.count(), R("0.01"), Direction::positive), PreconditionError);
}

TEST_CASE("upper bound") {
    const ZeroTable& t = zeros_2k();
    const Real T = R("1420.41");
    const BoundReport r = upper_bound_G(t, T, T);
    CHECK(r.kind == BoundKind::unconditional_upper);
    CHECK(r.complete());
    // Sound bound: at least sum_{gamma<=T} h(gamma), at most the Theorem's 0.023059.
    Real hs(256);
    for (std::size_t k = 1; k <= 1000; ++k) hs += h_envelope(Real(t.gamma(k), 256));
    CHECK(r.value > hs);
    CHECK(r.value < R("0.023059"));
    CHECK(r.value.to_fixed(10) == "0.0230588248");
    // more zeros in the g^-4 sum only lowers the bound
    CHECK(upper_bound_G(t, R("2000"), T).value < r.value);
    CHECK_THROWS_AS(upper_bound_G(t, T, R("3000")), PreconditionError);
}
