#ifndef GOLDOSC_REAL_HPP
#define GOLDOSC_REAL_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace goldosc {

/// Owning wrapper around an mpfr_t with value semantics.
///
/// Arithmetic operators round to nearest and produce a result whose
/// precision is the larger of the operand precisions. Copies carry the
/// precision of the source.
class Real {
public:
    static constexpr mpfr_prec_t kDefaultPrecision = 256;

    explicit Real(mpfr_prec_t prec = kDefaultPrecision);
    Real(long value, mpfr_prec_t prec);
    Real(const mpz_class& value, mpfr_prec_t prec);
    Real(const mpq_class& value, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

    Real(const Real& other);
    Real(const Real& other, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    /// Parses a decimal literal; throws std::invalid_argument on junk.
    static Real parse(std::string_view text, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

    bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
    int sign() const noexcept { return mpfr_sgn(value_); }
    /// Binary exponent e with 2^(e-1) <= |x| < 2^e; 0 for zero.
    long exponent() const noexcept;

    double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
    mpz_class round_to_integer() const;  // half away from zero

    /// Fixed-point decimal with `decimals` digits after the point.
    std::string to_fixed(int decimals, mpfr_rnd_t rnd = MPFR_RNDN) const;
    /// Scientific notation with `digits` significant digits.
    std::string to_scientific(int digits) const;

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real operator-() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

private:
    mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real pow(const Real& x, long n);
Real max(const Real& a, const Real& b);

/// pi at the requested precision, cached per precision.
const Real& pi(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
/// Euler's constant at the requested precision, cached per precision.
const Real& euler_gamma(mpfr_prec_t prec);

/// Closed interval with directed-rounding endpoints, used where a value
/// must be bounded rather than approximated.
struct Interval {
    Real lo;
    Real hi;

    static Interval point(const Real& x);
    static Interval ball(const Real& mid, const Real& radius, mpfr_prec_t prec);
    static Interval pi(mpfr_prec_t prec);

    Real magnitude_upper() const;  // max(|lo|, |hi|), rounded up
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const mpz_class& k);

}  // namespace goldosc

#endif
