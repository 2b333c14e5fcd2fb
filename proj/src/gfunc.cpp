#include "goldosc/gfunc.hpp"

#include "goldosc/error.hpp"

#include <algorithm>

namespace goldosc {

namespace {

Real quarter_plus_square(const Real& g) {  // gamma^2 + 1/4
    Real r = g * g;
    mpfr_add_d(r.get(), r.get(), 0.25, MPFR_RNDN);
    return r;
}

Real nine_quarters_plus_square(const Real& g) {  // gamma^2 + 9/4
    Real r = g * g;
    mpfr_add_d(r.get(), r.get(), 2.25, MPFR_RNDN);
    return r;
}

// Number of ordinates gamma <= T; requires the table to reach T.
std::size_t count_at_most(const ZeroTable& table, const Real& T, const char* what) {
    const auto ords = table.ordinates();
    if (T > ords.back())
        throw PreconditionError(std::string(what) + " = " + T.to_scientific(10) +
                                " lies beyond the last tabulated ordinate");
    return static_cast<std::size_t>(
        std::upper_bound(ords.begin(), ords.end(), T, [](const Real& t, const Real& g) { return t < g; }) -
        ords.begin());
}

void require_above_two_pi_e(const Real& T, const char* what, bool strict) {
    const Real limit = two_pi_e(std::max<mpfr_prec_t>(T.precision(), 64));
    if (strict ? !(T > limit) : !(T >= limit))
        throw PreconditionError(std::string(what) + " must be " + (strict ? "> " : ">= ") + "2*pi*e");
}

}  // namespace

std::string_view to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::unconditional_upper: return "unconditional_upper";
        case BoundKind::conditional_positive: return "conditional_positive";
        case BoundKind::conditional_negative: return "conditional_negative";
        case BoundKind::witness_positive: return "witness_positive";
        case BoundKind::witness_negative: return "witness_negative";
    }
    return "unknown";
}

bool BoundReport::complete() const {
    if (!value.is_finite()) return false;
    switch (kind) {
        case BoundKind::unconditional_upper: return params.T1 && params.T2;
        case BoundKind::conditional_positive:
        case BoundKind::conditional_negative: return params.N && params.T && params.eps;
        case BoundKind::witness_positive:
        case BoundKind::witness_negative:
            return params.N && params.T && params.eps && params.b && params.c && params.d;
    }
    return false;
}

Real two_pi_e(mpfr_prec_t prec) {
    Real e(1L, prec);
    e = exp(e);
    Real r = pi(prec) * e;
    mpfr_mul_2ui(r.get(), r.get(), 1, MPFR_RNDN);
    return r;
}

Real euler_zero_sum_identity(mpfr_prec_t prec) {
    Real four_pi = pi(prec);
    mpfr_mul_2ui(four_pi.get(), four_pi.get(), 2, MPFR_RNDN);
    Real r = euler_gamma(prec) - log(four_pi);
    mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDN);
    mpfr_add_ui(r.get(), r.get(), 1, MPFR_RNDN);
    return r;
}

Real h_envelope(const Real& gamma) {
    if (gamma.sign() <= 0) throw PreconditionError("h_envelope needs gamma > 0");
    const Real g2 = gamma * gamma;
    // gamma^4 + (5/2) gamma^2 + 9/16
    Real num = g2 * g2;
    Real t(g2);
    mpfr_mul_d(t.get(), t.get(), 2.5, MPFR_RNDN);
    num += t;
    mpfr_add_d(num.get(), num.get(), 0.5625, MPFR_RNDN);
    return sqrt(num) / (quarter_plus_square(gamma) * nine_quarters_plus_square(gamma));
}

Real lehman_tail(const Real& T, long n) {
    if (n < 2) throw PreconditionError("lehman_tail needs n >= 2");
    require_above_two_pi_e(T, "T", false);
    return log(T) / pow(T, n - 1);
}

Real b3_tail(const Real& T) {
    require_above_two_pi_e(T, "T", true);
    const mpfr_prec_t prec = T.precision();
    const Real logT = log(T);
    Real two_pi = pi(prec);
    mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);

    Real inner = logT;
    mpfr_mul_ui(inner.get(), inner.get(), 4, MPFR_RNDN);
    mpfr_add_ui(inner.get(), inner.get(), 1, MPFR_RNDN);
    inner = inner * two_pi / T;

    Real bracket = logT - log(two_pi) + inner;
    mpfr_add_ui(bracket.get(), bracket.get(), 1, MPFR_RNDN);
    return bracket / (two_pi * T);
}

BoundReport upper_bound_G(const ZeroTable& table, const Real& T1, const Real& T2, mpfr_prec_t prec) {
    if (T1.sign() <= 0) throw PreconditionError("T1 must be positive");
    require_above_two_pi_e(T2, "T2", false);
    const std::size_t n1 = count_at_most(table, T1, "T1");
    const std::size_t n2 = count_at_most(table, T2, "T2");

    Real inv4(prec), inv6(prec);
    for (std::size_t k = 1; k <= std::max(n1, n2); ++k) {
        const Real g(table.gamma(k), prec);
        if (k <= n1) inv4 += pow(g, -4);
        if (k <= n2) inv6 += pow(g, -6);
    }
    mpfr_mul_2ui(inv6.get(), inv6.get(), 1, MPFR_RNDN);

    const Real t2(T2, prec);
    Real value = euler_zero_sum_identity(prec) - inv4 + inv6 + lehman_tail(t2, 6);

    BoundReport report{BoundKind::unconditional_upper, std::move(value), {}, table.id(), prec};
    report.params.T1 = Real(T1, prec);
    report.params.T2 = t2;
    return report;
}

BoundReport conditional_bound(const ZeroTable& table, std::size_t N, const Real& eps, Direction sign,
                              mpfr_prec_t prec) {
    const Real e(eps, prec);
    if (!(e.sign() > 0 && e < Real(1L, prec))) throw PreconditionError("eps must lie in (0, 1)");
    const Real T = t_star(table, N, prec);
    require_above_two_pi_e(T, "T*(N)", true);
    if (zero_count_below(table, T) != N)
        throw PreconditionError("internal consistency: zero_count_below(T*(N)) != N");

    const Real cos_e = cos(e), sin_e = sin(e);
    Real three_cos = cos_e;
    mpfr_mul_ui(three_cos.get(), three_cos.get(), 3, MPFR_RNDN);

    Real s1(prec), s2(prec);
    for (std::size_t k = 1; k <= N; ++k) {
        const Real g(table.gamma(k), prec);
        const Real a = quarter_plus_square(g);
        s1 += Real(1L, prec) / a;
        Real two_g_sin = g * sin_e;
        mpfr_mul_2ui(two_g_sin.get(), two_g_sin.get(), 1, MPFR_RNDN);
        s2 += (three_cos + two_g_sin) / (a * nine_quarters_plus_square(g));
    }
    Real factor = e * e;
    mpfr_div_2ui(factor.get(), factor.get(), 1, MPFR_RNDN);
    factor = Real(1L, prec) - factor;

    Real value = factor * s1 - s2 - b3_tail(T);
    BoundKind kind = BoundKind::conditional_positive;
    if (sign == Direction::negative) {
        value = -value;
        kind = BoundKind::conditional_negative;
    }
    BoundReport report{kind, std::move(value), {}, table.id(), prec};
    report.params.N = static_cast<long>(N);
    report.params.T = T;
    report.params.eps = e;
    return report;
}

GValue evaluate_G_first(const ZeroTable& table, const Real& log_x, std::size_t count, const Real& T,
                        mpfr_prec_t prec) {
    const auto zeros = table.first(count);
    const Real t(T, prec);

    // Phase precision: enough integer bits for gamma*log_x plus prec fractional bits.
    long phase_bits = prec + 32;
    if (!zeros.empty() && !log_x.is_zero()) {
        const long magnitude = log_x.exponent() + zeros.back().exponent();
        if (magnitude > 0) phase_bits += magnitude;
        if (log_x.exponent() + 64 > table.precision_bits())
            throw PrecisionError("ordinates carry " + std::to_string(table.precision_bits()) +
                                 " bits; |log x| ~ 2^" + std::to_string(log_x.exponent()) + " needs more");
    }
    const Real lx(log_x, phase_bits);

    GValue out{Real(log_x, std::max(log_x.precision(), prec)), t, Real(prec), Real(prec), Real(prec), b3_tail(t), count};
    for (const Real& gamma : zeros) {
        const Real phase = Real(gamma, phase_bits) * lx;
        const Real c(cos(phase), prec), s(sin(phase), prec);
        const Real g(gamma, prec);
        const Real a = quarter_plus_square(g);
        const Real b = nine_quarters_plus_square(g);
        out.g1 -= c / a;
        Real three_c = c;
        mpfr_mul_ui(three_c.get(), three_c.get(), 3, MPFR_RNDN);
        Real two_g_s = g * s;
        mpfr_mul_2ui(two_g_s.get(), two_g_s.get(), 1, MPFR_RNDN);
        out.g2 += (three_c + two_g_s) / (a * b);
    }
    out.partial = out.g1 + out.g2;
    return out;
}

GValue evaluate_G_at_log(const ZeroTable& table, const Real& log_x, const Real& T, mpfr_prec_t prec) {
    require_above_two_pi_e(T, "T", true);
    const std::size_t n = count_at_most(table, T, "T");
    return evaluate_G_first(table, log_x, n, T, prec);
}

GValue evaluate_G(const ZeroTable& table, const Real& x, const Real& T, mpfr_prec_t prec) {
    if (x.sign() <= 0) throw PreconditionError("x must be positive");
    return evaluate_G_at_log(table, log(Real(x, std::max(prec, x.precision()))), T, prec);
}

}  // namespace goldosc
