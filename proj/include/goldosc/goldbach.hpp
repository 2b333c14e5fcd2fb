#ifndef GOLDOSC_GOLDBACH_HPP
#define GOLDOSC_GOLDBACH_HPP

#include "goldosc/real.hpp"
#include "goldosc/zeros.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace goldosc {

/// Empirical harness for sum_{n<=x} R(n) with R(n) = sum_{a+b=n} Lambda(a) Lambda(b).
/// Nothing here is certified; it cross-checks the explicit formula at
/// desk scale.

inline constexpr mpfr_prec_t kGoldbachPrecision = 128;
inline constexpr std::uint64_t kGoldbachDefaultCap = 1'000'000;

/// Linear sieve recording, for every n <= limit, the prime p with
/// n = p^k (or 0 when n is not a prime power).
class MangoldtSieve {
public:
    explicit MangoldtSieve(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return base_.size() - 1; }
    /// p if n is a power of the prime p, else 0.
    std::uint64_t prime_base(std::uint64_t n) const { return base_.at(n); }
    Real lambda(std::uint64_t n, mpfr_prec_t prec = kGoldbachPrecision) const;
    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

private:
    std::vector<std::uint64_t> base_;
    std::vector<std::uint64_t> primes_;
};

Real von_mangoldt(std::uint64_t n, mpfr_prec_t prec = kGoldbachPrecision);

/// R(n) by direct convolution, n >= 2.
Real r_of_n(std::uint64_t n, mpfr_prec_t prec = kGoldbachPrecision);

struct SingularSeries {
    Real value;              // truncated product
    Real truncation_bound;   // |S(n) - value| <= truncation_bound
};

/// Product over p | n of (1 + 1/(p-1)) times product over p not dividing
/// n, p <= prime_cutoff, of (1 - 1/(p-1)^2).
SingularSeries singular_series(std::uint64_t n, std::uint64_t prime_cutoff, mpfr_prec_t prec = kGoldbachPrecision);

/// sum_{n<=x} R(n) = sum_a Lambda(a) psi(x - a), using prefix sums of Lambda.
Real sum_r_sieve(std::uint64_t x, mpfr_prec_t prec = kGoldbachPrecision);
/// Same quantity by the double loop over pairs a + b <= x.
Real sum_r_direct(std::uint64_t x, mpfr_prec_t prec = kGoldbachPrecision);

struct RSummary {
    std::uint64_t x;
    Real sum_R;
    Real main_term;  // x^2 / 2
    Real zero_term;  // -4 x^{3/2} G_partial(x, T)
    Real residual;   // sum_R - main_term - zero_term
};

RSummary compare_explicit_formula(std::uint64_t x, const ZeroTable& table, const Real& T,
                                  std::uint64_t x_cap = kGoldbachDefaultCap, mpfr_prec_t prec = kGoldbachPrecision);

void write_csv(std::ostream& out, std::span<const RSummary> rows);

}  // namespace goldosc

#endif
