#ifndef GOLDOSC_OTR_HPP
#define GOLDOSC_OTR_HPP

#include "goldosc/gfunc.hpp"
#include "goldosc/lll.hpp"
#include "goldosc/real.hpp"
#include "goldosc/zeros.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace goldosc {

/// One simultaneous-approximation instance over the first N ordinates:
/// b bits of precision, scale 2^c for the recovered multiplier and weight
/// N^d on the inhomogeneous column.
struct ApproxProblem {
    std::size_t N = 0;
    long b = 0;
    long c = 10;
    long d = 4;
    std::string table_id;

    /// Checks the parameter invariants and that the table can support them.
    void validate(const ZeroTable& table) const;
    /// 2^b N^d, the weight carried by the inhomogeneous column.
    mpz_class weight() const;
};

enum class WitnessKind { inhomogeneous, homogeneous };

std::string_view to_string(WitnessKind kind);
WitnessKind parse_witness_kind(std::string_view text);

/// A candidate multiplier y = numerator / 2^c together with its certified
/// approximation error over the first N ordinates and the resulting bound.
///
/// inhomogeneous: eps >= max_k |gamma_k y - (2 m_k + 1) pi|, bound is a
///   value G(e^y) exceeds.
/// homogeneous:   eps >= max_k |gamma_k y - 2 m_k pi|, bound is a value
///   G(e^y) stays below.
struct Witness {
    WitnessKind kind = WitnessKind::inhomogeneous;
    std::size_t N = 0;
    mpz_class numerator;
    long c = 0;
    Real value;
    std::vector<mpz_class> m;
    Real eps;
    Real bound;
    Real T;  // truncation height T*(N) used for the bound
};

/// The (N+2)x(N+2) matrix whose columns are
///   round(2^{b+1} pi) e_k                                 (k = 1..N)
///   e_{N+1} - sum_k round(2^{b-c} gamma_k) e_k
///   2^b N^d e_{N+2} + round(2^b pi) sum_k e_k
Basis build_matrix(const ApproxProblem& problem, const ZeroTable& table);

Witness extract_inhomogeneous(const Basis& reduced, const ApproxProblem& problem, const ZeroTable& table,
                              mpfr_prec_t prec = Real::kDefaultPrecision);

/// Scores every reduced vector of the form (r_1..r_N, t, 0), t != 0, and
/// returns the one giving the most negative bound. `candidate_bounds`, if
/// given, receives the bound of every candidate in basis order.
Witness extract_homogeneous(const Basis& reduced, const ApproxProblem& problem, const ZeroTable& table,
                            mpfr_prec_t prec = Real::kDefaultPrecision,
                            std::vector<Real>* candidate_bounds = nullptr);

/// Recomputes m_k, eps (directed rounding, upper bound) and the bound for
/// y = numerator / 2^c over the first N ordinates. Throws PrecisionError
/// when the table cannot certify that many bits of gamma_k * y.
Witness verify_witness(const mpz_class& numerator, long c, WitnessKind kind, std::size_t N, const ZeroTable& table,
                       mpfr_prec_t prec = Real::kDefaultPrecision);

struct PipelineOptions {
    ReductionParams reduction;
    /// An eps above this produces an advisory to retry with larger b.
    double eps_threshold = 0.05;
    mpfr_prec_t precision = Real::kDefaultPrecision;
    std::function<void(std::string_view)> log;
};

struct PipelineResult {
    Witness positive;
    Witness negative;
    BoundReport upper;  // witness_positive
    BoundReport lower;  // witness_negative
    ReductionStats stats;
    std::vector<std::string> advisories;
};

/// build_matrix -> lll_reduce -> both extractions -> reports. Never loops on b.
PipelineResult run_pipeline(const ApproxProblem& problem, const ZeroTable& table, const PipelineOptions& options = {});

BoundReport witness_report(const Witness& w, const ApproxProblem& problem, const std::string& table_id,
                           mpfr_prec_t prec);

/// Lowercase base 36, most significant digit first.
std::string to_base36(const mpz_class& value);
/// Strict inverse of to_base36 (digits 0-9a-z only); throws std::invalid_argument.
mpz_class from_base36(std::string_view text);

/// Text record, one "key value" pair per line: kind, N, c, numerator
/// (base 36), eps (rounded up), bound (rounded toward zero).
void write_witness(std::ostream& out, const Witness& w);

struct WitnessRecord {
    WitnessKind kind;
    std::size_t N;
    long c;
    mpz_class numerator;
    std::string eps;
    std::string bound;
};
WitnessRecord read_witness(std::istream& in);

}  // namespace goldosc

#endif
