#include "goldosc/goldbach.hpp"

#include "goldosc/error.hpp"
#include "goldosc/gfunc.hpp"

#include <ostream>

namespace goldosc {

MangoldtSieve::MangoldtSieve(std::uint64_t limit) : base_(limit + 1, 0) {
    // smallest prime factor via a linear sieve, then prime-power detection
    std::vector<std::uint64_t> spf(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            spf[i] = i;
            primes_.push_back(i);
        }
        for (std::uint64_t p : primes_) {
            if (p > spf[i] || i * p > limit) break;
            spf[i * p] = p;
        }
    }
    for (std::uint64_t n = 2; n <= limit; ++n) {
        const std::uint64_t p = spf[n];
        const std::uint64_t rest = n / p;
        if (rest == 1 || base_[rest] == p) base_[n] = p;
    }
}

Real MangoldtSieve::lambda(std::uint64_t n, mpfr_prec_t prec) const {
    const std::uint64_t p = prime_base(n);
    if (p == 0) return Real(prec);
    return log(Real(static_cast<long>(p), prec));
}

Real von_mangoldt(std::uint64_t n, mpfr_prec_t prec) {
    if (n == 0) throw PreconditionError("von_mangoldt needs n >= 1");
    std::uint64_t m = n, p = 0;
    for (std::uint64_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            p = q;
            break;
        }
    }
    if (p == 0) p = m;  // m is prime or 1
    if (p == 1) return Real(prec);
    while (m % p == 0) m /= p;
    if (m != 1) return Real(prec);
    return log(Real(static_cast<long>(p), prec));
}

Real r_of_n(std::uint64_t n, mpfr_prec_t prec) {
    if (n < 2) throw PreconditionError("r_of_n needs n >= 2");
    const MangoldtSieve sieve(n);
    Real sum(prec);
    for (std::uint64_t a = 1; a < n; ++a) {
        if (sieve.prime_base(a) == 0 || sieve.prime_base(n - a) == 0) continue;
        sum += sieve.lambda(a, prec) * sieve.lambda(n - a, prec);
    }
    return sum;
}

SingularSeries singular_series(std::uint64_t n, std::uint64_t prime_cutoff, mpfr_prec_t prec) {
    if (n < 2) throw PreconditionError("singular_series needs n >= 2");
    if (prime_cutoff < 3) throw PreconditionError("singular_series needs prime_cutoff >= 3");
    Real value(1L, prec);
    // Factor n completely: every p | n contributes regardless of the cutoff.
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        value *= Real(mpq_class(static_cast<unsigned long>(p), static_cast<unsigned long>(p - 1)), prec);
    }
    if (m > 1) value *= Real(mpq_class(static_cast<unsigned long>(m), static_cast<unsigned long>(m - 1)), prec);

    const MangoldtSieve sieve(prime_cutoff);
    for (std::uint64_t p : sieve.primes()) {
        if (n % p == 0) continue;
        const mpz_class q = p - 1;
        const mpz_class q2 = q * q;
        value *= Real(mpq_class(q2 - 1, q2), prec);
    }
    // Remaining factors lie in (0,1]; their product is >= 1 - sum_{m>=cutoff} 1/m^2 >= 1 - 1/(cutoff-1).
    Real bound = value / Real(static_cast<long>(prime_cutoff - 1), prec);
    return {std::move(value), std::move(bound)};
}

Real sum_r_sieve(std::uint64_t x, mpfr_prec_t prec) {
    const MangoldtSieve sieve(x);
    std::vector<Real> psi(x + 1, Real(prec));
    for (std::uint64_t n = 1; n <= x; ++n) {
        psi[n] = psi[n - 1];
        if (sieve.prime_base(n) != 0) psi[n] += sieve.lambda(n, prec);
    }
    Real sum(prec);
    for (std::uint64_t a = 2; a < x; ++a) {
        if (sieve.prime_base(a) == 0) continue;
        sum += sieve.lambda(a, prec) * psi[x - a];
    }
    return sum;
}

Real sum_r_direct(std::uint64_t x, mpfr_prec_t prec) {
    const MangoldtSieve sieve(x);
    std::vector<std::uint64_t> support;
    for (std::uint64_t n = 2; n <= x; ++n)
        if (sieve.prime_base(n) != 0) support.push_back(n);
    Real sum(prec);
    for (std::uint64_t a : support) {
        const Real la = sieve.lambda(a, prec);
        for (std::uint64_t b : support) {
            if (a + b > x) break;
            sum += la * sieve.lambda(b, prec);
        }
    }
    return sum;
}

RSummary compare_explicit_formula(std::uint64_t x, const ZeroTable& table, const Real& T, std::uint64_t x_cap,
                                  mpfr_prec_t prec) {
    if (x < 100) throw PreconditionError("compare_explicit_formula needs x >= 100");
    if (x > x_cap) throw PreconditionError("x exceeds the configured cap of " + std::to_string(x_cap));
    RSummary out{x, sum_r_sieve(x, prec), Real(prec), Real(prec), Real(prec)};

    const Real xr(mpz_class(static_cast<unsigned long>(x)), prec);
    out.main_term = xr * xr;
    mpfr_div_2ui(out.main_term.get(), out.main_term.get(), 1, MPFR_RNDN);

    const GValue g = evaluate_G(table, xr, T, prec);
    Real x32 = xr * sqrt(xr);
    mpfr_mul_si(x32.get(), x32.get(), -4, MPFR_RNDN);
    out.zero_term = x32 * g.partial;
    out.residual = out.sum_R - out.main_term - out.zero_term;
    return out;
}

void write_csv(std::ostream& out, std::span<const RSummary> rows) {
    out << "x,sum_R,main_term,zero_term,residual\n";
    for (const auto& r : rows) {
        out << r.x << ',' << r.sum_R.to_scientific(20) << ',' << r.main_term.to_scientific(20) << ','
            << r.zero_term.to_scientific(20) << ',' << r.residual.to_scientific(20) << '\n';
    }
}

}  // namespace goldosc
