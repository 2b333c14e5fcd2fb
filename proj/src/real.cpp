#include "goldosc/real.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace goldosc {

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    mpfr_init2(value_, prec);
    mpfr_set_q(value_, value.get_mpq_t(), rnd);
}

Real::Real(const Real& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(const Real& other, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    mpfr_init2(value_, prec);
    mpfr_set(value_, other.value_, rnd);
}

Real::Real(Real&& other) noexcept {
    // Leave the moved-from object valid with minimal precision.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(std::string_view text, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    std::string buf(text);
    Real out(prec);
    char* end = nullptr;
    if (!buf.empty()) mpfr_strtofr(out.value_, buf.c_str(), &end, 10, rnd);
    if (buf.empty() || end != buf.c_str() + buf.size() || !out.is_finite())
        throw std::invalid_argument("not a decimal literal: '" + buf.substr(0, 40) + "'");
    return out;
}

long Real::exponent() const noexcept {
    if (!mpfr_regular_p(value_)) return 0;
    return mpfr_get_exp(value_);
}

mpz_class Real::round_to_integer() const {
    if (!is_finite()) throw std::domain_error("cannot round a non-finite value");
    Real r(std::max<mpfr_prec_t>(precision(), MPFR_PREC_MIN));
    mpfr_round(r.value_, value_);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), r.value_, MPFR_RNDN);
    return z;
}

std::string Real::to_fixed(int decimals, mpfr_rnd_t rnd) const {
    char* s = nullptr;
    std::string fmt = "%." + std::to_string(decimals) + "R*f";
    if (mpfr_asprintf(&s, fmt.c_str(), rnd, value_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Real::to_scientific(int digits) const {
    char* s = nullptr;
    std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
    if (mpfr_asprintf(&s, fmt.c_str(), value_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

namespace {

mpfr_prec_t joint(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real& Real::operator+=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.get(), b.get());
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

#define GOLDOSC_UNARY(name, fn)                     \
    Real name(const Real& x) {                      \
        Real r(x.precision());                      \
        fn(r.get(), x.get(), MPFR_RNDN);            \
        return r;                                   \
    }

GOLDOSC_UNARY(abs, mpfr_abs)
GOLDOSC_UNARY(sqrt, mpfr_sqrt)
GOLDOSC_UNARY(log, mpfr_log)
GOLDOSC_UNARY(exp, mpfr_exp)
GOLDOSC_UNARY(cos, mpfr_cos)
GOLDOSC_UNARY(sin, mpfr_sin)

#undef GOLDOSC_UNARY

Real pow(const Real& x, long n) {
    Real r(x.precision());
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

namespace {

struct ConstantCache {
    std::mutex mutex;
    std::map<std::pair<mpfr_prec_t, int>, std::unique_ptr<Real>> values;

    template <class Fn>
    const Real& get(mpfr_prec_t prec, int tag, Fn&& compute) {
        std::lock_guard lock(mutex);
        auto& slot = values[{prec, tag}];
        if (!slot) {
            slot = std::make_unique<Real>(prec);
            compute(slot->get());
        }
        return *slot;
    }
};

ConstantCache& cache() {
    static ConstantCache c;
    return c;
}

}  // namespace

const Real& pi(mpfr_prec_t prec, mpfr_rnd_t rnd) {
    return cache().get(prec, static_cast<int>(rnd), [rnd](mpfr_ptr v) { mpfr_const_pi(v, rnd); });
}

const Real& euler_gamma(mpfr_prec_t prec) {
    return cache().get(prec, -1, [](mpfr_ptr v) { mpfr_const_euler(v, MPFR_RNDN); });
}

Interval Interval::point(const Real& x) { return {x, x}; }

Interval Interval::ball(const Real& mid, const Real& radius, mpfr_prec_t prec) {
    Interval out{Real(prec), Real(prec)};
    mpfr_sub(out.lo.get(), mid.get(), radius.get(), MPFR_RNDD);
    mpfr_add(out.hi.get(), mid.get(), radius.get(), MPFR_RNDU);
    return out;
}

Interval Interval::pi(mpfr_prec_t prec) { return {goldosc::pi(prec, MPFR_RNDD), goldosc::pi(prec, MPFR_RNDU)}; }

Real Interval::magnitude_upper() const {
    Real a(lo.precision()), b(hi.precision());
    mpfr_abs(a.get(), lo.get(), MPFR_RNDU);
    mpfr_abs(b.get(), hi.get(), MPFR_RNDU);
    return max(a, b);
}

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) {
    return std::max({a.lo.precision(), a.hi.precision(), b.lo.precision(), b.hi.precision()});
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
    mpfr_prec_t p = joint(a, b);
    Interval out{Real(p), Real(p)};
    mpfr_add(out.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
    mpfr_add(out.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
    return out;
}

Interval operator-(const Interval& a, const Interval& b) {
    mpfr_prec_t p = joint(a, b);
    Interval out{Real(p), Real(p)};
    mpfr_sub(out.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
    mpfr_sub(out.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
    return out;
}

Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t p = joint(a, b);
    const Real* xs[2] = {&a.lo, &a.hi};
    const Real* ys[2] = {&b.lo, &b.hi};
    Interval out{Real(p), Real(p)};
    bool first = true;
    Real down(p), up(p);
    for (const Real* x : xs) {
        for (const Real* y : ys) {
            mpfr_mul(down.get(), x->get(), y->get(), MPFR_RNDD);
            mpfr_mul(up.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || down < out.lo) out.lo = down;
            if (first || up > out.hi) out.hi = up;
            first = false;
        }
    }
    return out;
}

Interval operator*(const Interval& a, const mpz_class& k) {
    mpfr_prec_t p = std::max(a.lo.precision(), a.hi.precision());
    Interval out{Real(p), Real(p)};
    if (k >= 0) {
        mpfr_mul_z(out.lo.get(), a.lo.get(), k.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(out.hi.get(), a.hi.get(), k.get_mpz_t(), MPFR_RNDU);
    } else {
        mpfr_mul_z(out.lo.get(), a.hi.get(), k.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(out.hi.get(), a.lo.get(), k.get_mpz_t(), MPFR_RNDU);
    }
    return out;
}

}  // namespace goldosc
