#ifndef GOLDOSC_GFUNC_HPP
#define GOLDOSC_GFUNC_HPP

#include "goldosc/real.hpp"
#include "goldosc/zeros.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace goldosc {

/// Truncated evaluation of
///   G(x) = Re sum_{gamma>0} x^{i gamma} / ((1/2 + i gamma)(3/2 + i gamma)).
/// The point is stored as log x so that x = e^y with enormous y (the
/// witnesses) can be represented.
struct GValue {
    Real log_x;
    Real T;
    Real g1;           // -sum_{gamma<=T} cos(gamma log x)/(gamma^2 + 1/4)
    Real g2;           // sum_{gamma<=T} (3cos + 2 gamma sin)/((gamma^2+1/4)(gamma^2+9/4))
    Real partial;      // g1 + g2
    Real tail_radius;  // B3(T) >= |G3(x, T)|
    std::size_t zeros_used = 0;
};

enum class BoundKind {
    unconditional_upper,
    conditional_positive,
    conditional_negative,
    witness_positive,
    witness_negative,
};

std::string_view to_string(BoundKind kind);

enum class Direction { positive, negative };

struct BoundParams {
    std::optional<long> N;
    std::optional<Real> T;
    std::optional<Real> eps;
    std::optional<Real> T1;
    std::optional<Real> T2;
    std::optional<long> b;
    std::optional<long> c;
    std::optional<long> d;
};

/// A certified (on RH) numeric bound together with everything needed to
/// reproduce it.
struct BoundReport {
    BoundKind kind;
    Real value;
    BoundParams params;
    std::string zero_table_id;
    mpfr_prec_t precision_bits = Real::kDefaultPrecision;

    /// True when value is finite and the parameters required by `kind` are present.
    bool complete() const;
};

/// 2*pi*e, the smallest T for which the Lehman tail estimates apply.
Real two_pi_e(mpfr_prec_t prec);

/// sum_{gamma>0} 1/(gamma^2 + 1/4) = 1 + euler/2 - log(4 pi)/2 = 0.02309...
Real euler_zero_sum_identity(mpfr_prec_t prec = Real::kDefaultPrecision);

/// Maximum over x of the absolute value of the gamma-term of G.
Real h_envelope(const Real& gamma);

/// log(T)/T^(n-1), an upper bound for sum_{gamma>T} gamma^-n (T >= 2 pi e, n >= 2).
Real lehman_tail(const Real& T, long n);

/// B3(T) = (log T + 1 - log 2pi + (2pi/T)(1 + 4 log T)) / (2 pi T) > |G3(x,T)|.
Real b3_tail(const Real& T);

/// Unconditional bound on sup |G(x)| using zeros up to T1 and T2.
BoundReport upper_bound_G(const ZeroTable& table, const Real& T1, const Real& T2,
                          mpfr_prec_t prec = Real::kDefaultPrecision);

/// Lower bound on the oscillation of G in the given direction, assuming
/// the (in)homogeneous approximation problem over the first N zeros has a
/// solution with error eps. Uses T = T*(N).
BoundReport conditional_bound(const ZeroTable& table, std::size_t N, const Real& eps, Direction sign,
                              mpfr_prec_t prec = Real::kDefaultPrecision);

/// Evaluates the truncated sum for the zeros gamma <= T.
GValue evaluate_G(const ZeroTable& table, const Real& x, const Real& T, mpfr_prec_t prec = Real::kDefaultPrecision);

/// As evaluate_G, at x = e^log_x. Phases gamma * log_x are formed at
/// enough precision to stay accurate for very large log_x; throws
/// PrecisionError when the table cannot support that.
GValue evaluate_G_at_log(const ZeroTable& table, const Real& log_x, const Real& T,
                         mpfr_prec_t prec = Real::kDefaultPrecision);

/// As evaluate_G_at_log, but over exactly the first `count` zeros.
GValue evaluate_G_first(const ZeroTable& table, const Real& log_x, std::size_t count, const Real& T,
                        mpfr_prec_t prec = Real::kDefaultPrecision);

}  // namespace goldosc

#endif
