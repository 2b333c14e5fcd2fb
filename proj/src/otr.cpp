#include "goldosc/otr.hpp"

#include "goldosc/error.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <optional>
#include <sstream>

namespace goldosc {

namespace {

long bit_length(const mpz_class& z) {
    return sgn(z) == 0 ? 0 : static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

// round(x * 2^shift) for a real x held to enough bits.
mpz_class round_scaled(const Real& x, long shift, mpfr_prec_t prec) {
    Real t(x, prec);
    mpfr_mul_2si(t.get(), t.get(), shift, MPFR_RNDN);
    return t.round_to_integer();
}

Real exact_dyadic(const mpz_class& numerator, long c) {
    Real y(numerator, std::max<mpfr_prec_t>(bit_length(numerator) + 1, 64));
    mpfr_div_2si(y.get(), y.get(), c, MPFR_RNDN);  // exact: power-of-two scaling
    return y;
}

// bound = partial -/+ B3 over the first N zeros at log x = y.
Real witness_bound(WitnessKind kind, const Real& y, std::size_t N, const Real& T, const ZeroTable& table,
                   mpfr_prec_t prec) {
    const GValue g = evaluate_G_first(table, y, N, T, prec);
    return kind == WitnessKind::inhomogeneous ? g.partial - g.tail_radius : g.partial + g.tail_radius;
}

void check_table_for(const mpz_class& numerator, long c, std::size_t N, const ZeroTable& table) {
    if (N == 0) throw PreconditionError("witness depth must be >= 1");
    if (N + 1 > table.count())
        throw PreconditionError("witness depth " + std::to_string(N) + " needs " + std::to_string(N + 1) +
                                " ordinates, table has " + std::to_string(table.count()));
    const long value_bits = std::max<long>(bit_length(numerator) - c, 0);
    if (table.precision_bits() < value_bits + 64)
        throw PrecisionError("certifying a " + std::to_string(value_bits) + "-bit multiplier needs ordinates with " +
                             std::to_string(value_bits + 64) + " bits; table has " +
                             std::to_string(table.precision_bits()));
}

}  // namespace

void ApproxProblem::validate(const ZeroTable& table) const {
    if (N < 1) throw PreconditionError("N must be >= 1");
    if (b < 64) throw PreconditionError("b must be >= 64");
    if (c < 1) throw PreconditionError("c must be >= 1");
    if (d < 1) throw PreconditionError("d must be >= 1");
    if (c >= b) throw PreconditionError("c must be smaller than b");
    if (N + 1 > table.count())
        throw PreconditionError("N = " + std::to_string(N) + " needs " + std::to_string(N + 1) + " ordinates");
    if (table.precision_bits() < b + 64)
        throw PrecisionError("b = " + std::to_string(b) + " needs ordinates with >= " + std::to_string(b + 64) +
                             " bits; table has " + std::to_string(table.precision_bits()));
}

mpz_class ApproxProblem::weight() const {
    mpz_class w;
    mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(d));
    w <<= static_cast<mp_bitcnt_t>(b);
    return w;
}

std::string_view to_string(WitnessKind kind) {
    return kind == WitnessKind::inhomogeneous ? "inhomogeneous" : "homogeneous";
}

WitnessKind parse_witness_kind(std::string_view text) {
    if (text == "inhomogeneous") return WitnessKind::inhomogeneous;
    if (text == "homogeneous") return WitnessKind::homogeneous;
    throw std::invalid_argument("unknown witness kind '" + std::string(text) + "'");
}

Basis build_matrix(const ApproxProblem& problem, const ZeroTable& table) {
    // Only the structural checks: small b is fine for building the matrix.
    if (problem.N < 1 || problem.c < 1 || problem.d < 1 || problem.c >= problem.b)
        throw PreconditionError("build_matrix needs N, c, d >= 1 and c < b");
    if (problem.N + 1 > table.count())
        throw PreconditionError("N = " + std::to_string(problem.N) + " needs " + std::to_string(problem.N + 1) +
                                " ordinates");
    if (table.precision_bits() < problem.b + 64)
        throw PrecisionError("b = " + std::to_string(problem.b) + " needs ordinates with >= " +
                             std::to_string(problem.b + 64) + " bits");
    const std::size_t N = problem.N;
    const mpfr_prec_t prec = problem.b + 96;
    const mpz_class two_pi = round_scaled(pi(prec), problem.b + 1, prec);
    const mpz_class one_pi = round_scaled(pi(prec), problem.b, prec);

    std::vector<IntVector> cols(N + 2, IntVector(N + 2));
    for (std::size_t k = 0; k < N; ++k) {
        cols[k][k] = two_pi;
        cols[N][k] = -round_scaled(table.gamma(k + 1), problem.b - problem.c, prec + 16);
        cols[N + 1][k] = one_pi;
    }
    cols[N][N] = 1;
    cols[N + 1][N + 1] = problem.weight();
    return Basis(std::move(cols));
}

Witness verify_witness(const mpz_class& numerator, long c, WitnessKind kind, std::size_t N, const ZeroTable& table,
                       mpfr_prec_t prec) {
    if (sgn(numerator) <= 0) throw PreconditionError("witness numerator must be positive");
    check_table_for(numerator, c, N, table);

    const Real y = exact_dyadic(numerator, c);
    // integer bits of gamma_N * y, then prec + 32 fractional bits
    const mpfr_prec_t wp = bit_length(numerator) + std::max<long>(table.gamma(N).exponent(), 0) + prec + 32;
    const Interval pi_iv = Interval::pi(wp);
    const Interval y_iv = Interval::point(y);
    const Real radius = table.entry_radius(64);
    Real two_pi = pi(wp);
    mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);

    Witness w;
    w.kind = kind;
    w.N = N;
    w.numerator = numerator;
    w.c = c;
    w.value = y;
    w.m.reserve(N);
    w.eps = Real(prec);
    for (std::size_t k = 1; k <= N; ++k) {
        const Real g(table.gamma(k), wp);
        const Real gy = g * y;
        Real q = kind == WitnessKind::inhomogeneous ? (gy - pi(wp)) / two_pi : gy / two_pi;
        const mpz_class mk = q.round_to_integer();

        const Interval product = Interval::ball(g, radius, wp) * y_iv;
        mpz_class multiple = 2 * mk;
        if (kind == WitnessKind::inhomogeneous) multiple += 1;
        const Real err = (product - pi_iv * multiple).magnitude_upper();
        Real err_up(prec);
        mpfr_set(err_up.get(), err.get(), MPFR_RNDU);
        if (err_up > w.eps) w.eps = err_up;
        w.m.push_back(mk);
    }
    w.T = t_star(table, N, prec);
    w.bound = witness_bound(kind, y, N, w.T, table, prec);
    return w;
}

Witness extract_inhomogeneous(const Basis& reduced, const ApproxProblem& problem, const ZeroTable& table,
                              mpfr_prec_t prec) {
    const std::size_t N = problem.N;
    if (reduced.dim() != N + 2) throw PreconditionError("reduced basis has the wrong dimension");
    const mpz_class weight = problem.weight();
    bool saw_weight = false;
    std::optional<Witness> best;
    for (const auto& col : reduced.columns()) {
        if (mpz_cmpabs(col[N + 1].get_mpz_t(), weight.get_mpz_t()) != 0) continue;
        saw_weight = true;
        // Negating to make the last entry +weight, and again when s < 0,
        // both leave |s| unchanged.
        const mpz_class s = abs(col[N]);
        if (sgn(s) == 0) continue;
        Witness w = verify_witness(s, problem.c, WitnessKind::inhomogeneous, N, table, prec);
        if (!best || w.bound > best->bound) best = std::move(w);
    }
    if (!saw_weight)
        throw ExtractionError("no reduced vector has last coordinate +-2^b N^d; retry with larger b");
    if (!best) throw ExtractionError("inhomogeneous candidate has s = 0");
    return std::move(*best);
}

Witness extract_homogeneous(const Basis& reduced, const ApproxProblem& problem, const ZeroTable& table,
                            mpfr_prec_t prec, std::vector<Real>* candidate_bounds) {
    const std::size_t N = problem.N;
    if (reduced.dim() != N + 2) throw PreconditionError("reduced basis has the wrong dimension");
    if (candidate_bounds) candidate_bounds->clear();
    const Real T = t_star(table, N, prec);
    std::optional<std::pair<mpz_class, Real>> best;
    for (const auto& col : reduced.columns()) {
        if (sgn(col[N + 1]) != 0 || sgn(col[N]) == 0) continue;
        const mpz_class t = abs(col[N]);
        check_table_for(t, problem.c, N, table);
        Real bound = witness_bound(WitnessKind::homogeneous, exact_dyadic(t, problem.c), N, T, table, prec);
        if (candidate_bounds) candidate_bounds->push_back(bound);
        if (!best || bound < best->second) best.emplace(t, std::move(bound));
    }
    if (!best) throw ExtractionError("no reduced vector of the form (r, t, 0) with t != 0");
    return verify_witness(best->first, problem.c, WitnessKind::homogeneous, N, table, prec);
}

BoundReport witness_report(const Witness& w, const ApproxProblem& problem, const std::string& table_id,
                           mpfr_prec_t prec) {
    BoundReport r{w.kind == WitnessKind::inhomogeneous ? BoundKind::witness_positive : BoundKind::witness_negative,
                  w.bound, {}, table_id, prec};
    r.params.N = static_cast<long>(w.N);
    r.params.T = w.T;
    r.params.eps = w.eps;
    r.params.b = problem.b;
    r.params.c = problem.c;
    r.params.d = problem.d;
    return r;
}

PipelineResult run_pipeline(const ApproxProblem& problem, const ZeroTable& table, const PipelineOptions& options) {
    auto log = [&](const std::string& msg) {
        if (options.log) options.log(msg);
    };
    problem.validate(table);
    log("building " + std::to_string(problem.N + 2) + "x" + std::to_string(problem.N + 2) + " matrix, b = " +
        std::to_string(problem.b));
    Basis basis = build_matrix(problem, table);

    PipelineResult out;
    ReductionParams reduction = options.reduction;
    log("reducing lattice");
    Basis reduced = lll_reduce(std::move(basis), reduction, &out.stats);
    log("reduction done: " + std::to_string(out.stats.swaps) + " swaps, float precision " +
        std::to_string(out.stats.float_precision) + (out.stats.verified ? ", verified" : ""));

    out.positive = extract_inhomogeneous(reduced, problem, table, options.precision);
    out.negative = extract_homogeneous(reduced, problem, table, options.precision);
    out.upper = witness_report(out.positive, problem, table.id(), options.precision);
    out.lower = witness_report(out.negative, problem, table.id(), options.precision);

    const Real threshold(mpq_class(options.eps_threshold), options.precision);
    for (const Witness* w : {&out.positive, &out.negative}) {
        if (w->eps > threshold)
            out.advisories.push_back(std::string(to_string(w->kind)) + " eps " + w->eps.to_scientific(6) +
                                     " exceeds threshold; insufficient precision likely, retry with larger b");
    }
    return out;
}

std::string to_base36(const mpz_class& value) { return value.get_str(36); }

mpz_class from_base36(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty base-36 string");
    std::size_t start = text.front() == '-' ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("empty base-36 string");
    for (std::size_t i = start; i < text.size(); ++i) {
        const char ch = text[i];
        if (!((ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'z')))
            throw std::invalid_argument("invalid base-36 digit '" + std::string(1, ch) + "' at position " +
                                        std::to_string(i));
    }
    return mpz_class(std::string(text), 36);
}

void write_witness(std::ostream& out, const Witness& w) {
    out << "kind " << to_string(w.kind) << '\n'
        << "N " << w.N << '\n'
        << "c " << w.c << '\n'
        << "numerator " << to_base36(w.numerator) << '\n'
        << "eps " << w.eps.to_fixed(30, MPFR_RNDU) << '\n'
        << "bound " << w.bound.to_fixed(30, MPFR_RNDZ) << '\n';
}

WitnessRecord read_witness(std::istream& in) {
    std::map<std::string, std::string> fields;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto sp = line.find(' ');
        if (sp == std::string::npos) throw std::invalid_argument("malformed witness line: '" + line + "'");
        if (!fields.emplace(line.substr(0, sp), line.substr(sp + 1)).second)
            throw std::invalid_argument("duplicate witness field '" + line.substr(0, sp) + "'");
    }
    auto need = [&](const char* key) -> const std::string& {
        auto it = fields.find(key);
        if (it == fields.end()) throw std::invalid_argument(std::string("witness record lacks '") + key + "'");
        return it->second;
    };
    WitnessRecord r{parse_witness_kind(need("kind")), std::stoul(need("N")), std::stol(need("c")),
                    from_base36(need("numerator")), need("eps"), need("bound")};
    return r;
}

}  // namespace goldosc
