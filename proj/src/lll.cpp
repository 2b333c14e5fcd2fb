#include "goldosc/lll.hpp"

#include "goldosc/error.hpp"
#include "goldosc/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

namespace goldosc {

Basis::Basis(std::vector<IntVector> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) return;
    const std::size_t n = columns_.front().size();
    if (n == 0) throw PreconditionError("basis vectors must have dimension >= 1");
    for (const auto& c : columns_)
        if (c.size() != n) throw PreconditionError("basis columns differ in length");
}

Basis Basis::identity(std::size_t n) {
    std::vector<IntVector> cols(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i) cols[i][i] = 1;
    return Basis(std::move(cols));
}

Basis Basis::from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty()) return {};
    const std::size_t m = rows.size(), n = rows.front().size();
    std::vector<IntVector> cols(n, IntVector(m));
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n) throw PreconditionError("ragged row-major matrix");
        for (std::size_t j = 0; j < n; ++j) cols[j][i] = rows[i][j];
    }
    return Basis(std::move(cols));
}

long Basis::max_bits() const {
    std::size_t bits = 0;
    for (const auto& c : columns_)
        for (const auto& x : c)
            if (sgn(x) != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    return static_cast<long>(bits);
}

void ReductionParams::validate() const {
    if (!(delta > mpq_class(1, 4) && delta < 1)) throw PreconditionError("delta must lie in (1/4, 1)");
    if (!(eta >= mpq_class(1, 2) && eta * eta < delta)) throw PreconditionError("eta must lie in [1/2, sqrt(delta))");
}

namespace {

// ---------------------------------------------------------------------------
// Floating-point back ends for the Gram-Schmidt data. The integer basis and
// Gram matrix are always exact, so these only steer the reduction.

struct LongDoubleOps {
    using T = long double;
    static constexpr mpfr_prec_t precision = 64;

    T zero() const { return 0.0L; }

    T from_mpz(const mpz_class& z) const {
        const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
        if (bits <= 64) {
            mpz_class a; mpz_abs(a.get_mpz_t(), z.get_mpz_t());
            const auto u = static_cast<long double>(mpz_get_ui(a.get_mpz_t()));
            return sgn(z) < 0 ? -u : u;
        }
        mpz_class top;
        mpz_tdiv_q_2exp(top.get_mpz_t(), z.get_mpz_t(), bits - 64);
        mpz_abs(top.get_mpz_t(), top.get_mpz_t());
        long double v = std::ldexp(static_cast<long double>(mpz_get_ui(top.get_mpz_t())), static_cast<int>(bits - 64));
        return sgn(z) < 0 ? -v : v;
    }

    T from_mpq(const mpq_class& q) const { return from_mpz(q.get_num()) / from_mpz(q.get_den()); }
    static T abs(const T& x) { return std::fabs(x); }
    static T round(const T& x) { return std::round(x); }
    static bool is_zero(const T& x) { return x == 0.0L; }
    static bool fits_long(const T& x) { return std::fabs(x) < 4.0e18L; }
    static long to_long(const T& x) { return static_cast<long>(x); }

    static void to_mpz(mpz_class& out, const T& x) {
        int e = 0;
        const long double m = std::frexp(std::fabs(x), &e);
        const auto u = static_cast<std::uint64_t>(std::ldexp(m, 64));
        out = static_cast<unsigned long>(u);
        if (e >= 64)
            out <<= static_cast<mp_bitcnt_t>(e - 64);
        else
            out >>= static_cast<mp_bitcnt_t>(64 - e);
        if (x < 0) out = -out;
    }

    // acc -= a * b
    void sub_mul(T& acc, const T& a, const T& b) { acc -= a * b; }
    void div(T& out, const T& a, const T& b) { out = a / b; }
    void mul(T& out, const T& a, const T& b) { out = a * b; }
};

struct MpfrOps {
    using T = Real;
    mpfr_prec_t precision;
    Real scratch;

    explicit MpfrOps(mpfr_prec_t p) : precision(p), scratch(p) {}

    T zero() const { return Real(precision); }
    T from_mpz(const mpz_class& z) const { return Real(z, precision); }
    T from_mpq(const mpq_class& q) const { return Real(q, precision); }
    static T abs(const T& x) { return goldosc::abs(x); }
    static T round(const T& x) {
        Real r(x.precision());
        mpfr_round(r.get(), x.get());
        return r;
    }
    static bool is_zero(const T& x) { return x.is_zero(); }
    static bool fits_long(const T& x) { return mpfr_fits_slong_p(x.get(), MPFR_RNDN) && x.exponent() < 62; }
    static long to_long(const T& x) { return mpfr_get_si(x.get(), MPFR_RNDN); }
    static void to_mpz(mpz_class& out, const T& x) { mpfr_get_z(out.get_mpz_t(), x.get(), MPFR_RNDN); }

    void sub_mul(T& acc, const T& a, const T& b) {
        mpfr_mul(scratch.get(), a.get(), b.get(), MPFR_RNDN);
        mpfr_sub(acc.get(), acc.get(), scratch.get(), MPFR_RNDN);
    }
    void div(T& out, const T& a, const T& b) { mpfr_div(out.get(), a.get(), b.get(), MPFR_RNDN); }
    void mul(T& out, const T& a, const T& b) { mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDN); }
};

enum class Outcome { done, precision_lost };

// L^2-style reduction (Nguyen-Stehle): exact Gram matrix, floating-point
// Cholesky factorisation recomputed from it, lazy size reduction, and a
// Lovasz walk that inserts each vector at its final position.
template <class Ops>
class Reducer {
public:
    using FT = typename Ops::T;

    Reducer(std::vector<IntVector>& b, const ReductionParams& params, ReductionStats& stats, Ops ops)
        : b_(b), params_(params), stats_(stats), ops_(std::move(ops)), n_(b.size()) {
        // Internal thresholds are slightly stricter than the targets so that
        // floating-point noise still leaves a (delta, eta)-reduced output.
        const mpq_class delta_int = (params.delta + 1) / 2 - (1 - params.delta) / 4;
        const mpq_class eta_int = (params.eta + mpq_class(1, 2)) / 2;
        delta_ = ops_.from_mpq(delta_int);
        eta_ = ops_.from_mpq(eta_int);
        r_.assign(n_, std::vector<FT>(n_, ops_.zero()));
        mu_.assign(n_, std::vector<FT>(n_, ops_.zero()));
        s_.assign(n_ + 1, ops_.zero());
    }

    Outcome run() {
        init_gram();
        if (sgn(g_[0][0]) == 0) throw ReductionError("dependent columns: zero vector in basis");
        r_[0][0] = ops_.from_mpz(g_[0][0]);
        std::size_t k = 1;
        std::size_t next_report = stats_.swaps + 20000;
        while (k < n_) {
            if (!size_reduce(k)) return Outcome::precision_lost;
            std::size_t kp = k;
            while (kp > 0) {
                FT lhs = ops_.zero();
                ops_.mul(lhs, delta_, r_[kp - 1][kp - 1]);
                if (!(lhs > s_[kp - 1])) break;
                --kp;
            }
            if (!(s_[kp] > ops_.zero())) return Outcome::precision_lost;
            if (kp == k) {
                ++k;
                continue;
            }
            insert(k, kp);
            stats_.swaps += k - kp;
            if (stats_.swaps > params_.max_swaps)
                throw ReductionError("swap budget exhausted after " + std::to_string(stats_.swaps) + " swaps");
            if (params_.progress && stats_.swaps >= next_report) {
                params_.progress(stats_);
                next_report = stats_.swaps + 20000;
            }
            k = kp + 1;
        }
        return Outcome::done;
    }

private:
    mpz_class& gram(std::size_t i, std::size_t j) { return i >= j ? g_[i][j] : g_[j][i]; }

    void init_gram() {
        g_.assign(n_, {});
        const std::size_t dim = b_.front().size();
        mpz_class acc;
        for (std::size_t i = 0; i < n_; ++i) {
            g_[i].resize(i + 1);
            for (std::size_t j = 0; j <= i; ++j) {
                acc = 0;
                for (std::size_t t = 0; t < dim; ++t) mpz_addmul(acc.get_mpz_t(), b_[i][t].get_mpz_t(), b_[j][t].get_mpz_t());
                g_[i][j] = acc;
            }
        }
    }

    // Rows 0..k-1 of r/mu are valid; fills row k and the projections s_j
    // of b_k orthogonally to b_0..b_{j-1}.
    void compute_row(std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            FT acc = ops_.from_mpz(gram(k, j));
            for (std::size_t i = 0; i < j; ++i) ops_.sub_mul(acc, mu_[j][i], r_[k][i]);
            r_[k][j] = acc;
            ops_.div(mu_[k][j], acc, r_[j][j]);
        }
        s_[0] = ops_.from_mpz(gram(k, k));
        for (std::size_t j = 0; j < k; ++j) {
            s_[j + 1] = s_[j];
            ops_.sub_mul(s_[j + 1], mu_[k][j], r_[k][j]);
        }
        r_[k][k] = s_[k];
    }

    bool size_reduce(std::size_t k) {
        FT prev_max = ops_.zero();
        mpz_class big;
        for (int iter = 0;; ++iter) {
            compute_row(k);
            FT max_mu = ops_.zero();
            for (std::size_t j = 0; j < k; ++j) {
                FT a = Ops::abs(mu_[k][j]);
                if (a > max_mu) max_mu = a;
            }
            if (!(max_mu > eta_)) return true;
            if (iter >= 1000 || (iter >= 8 && !(max_mu < prev_max))) return false;
            prev_max = max_mu;

            for (std::size_t j = k; j-- > 0;) {
                FT x = Ops::round(mu_[k][j]);
                if (Ops::is_zero(x)) continue;
                for (std::size_t i = 0; i < j; ++i) ops_.sub_mul(mu_[k][i], x, mu_[j][i]);
                if (Ops::fits_long(x)) {
                    reduce_by(k, j, Ops::to_long(x));
                } else {
                    Ops::to_mpz(big, x);
                    reduce_by(k, j, big);
                }
                ++stats_.size_reductions;
            }
            if (sgn(g_[k][k]) == 0) throw ReductionError("dependent columns: basis vector reduced to zero");
        }
    }

    // b_k -= x b_j with the matching exact Gram update.
    void reduce_by(std::size_t k, std::size_t j, const mpz_class& x) {
        tmp_ = x * gram(j, j);
        tmp_ -= 2 * gram(k, j);
        tmp_ *= x;
        g_[k][k] += tmp_;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == k) continue;
            mpz_submul(gram(k, i).get_mpz_t(), x.get_mpz_t(), gram(j, i).get_mpz_t());
        }
        auto& bk = b_[k];
        const auto& bj = b_[j];
        for (std::size_t t = 0; t < bk.size(); ++t) mpz_submul(bk[t].get_mpz_t(), x.get_mpz_t(), bj[t].get_mpz_t());
    }

    void reduce_by(std::size_t k, std::size_t j, long x) {
        const unsigned long ax = static_cast<unsigned long>(x < 0 ? -x : x);
        auto submul = [&](mpz_class& acc, const mpz_class& v) {
            if (x > 0)
                mpz_submul_ui(acc.get_mpz_t(), v.get_mpz_t(), ax);
            else
                mpz_addmul_ui(acc.get_mpz_t(), v.get_mpz_t(), ax);
        };
        // G_kk += x (x G_jj - 2 G_kj)
        mpz_mul_si(tmp_.get_mpz_t(), gram(j, j).get_mpz_t(), x);
        mpz_submul_ui(tmp_.get_mpz_t(), gram(k, j).get_mpz_t(), 2);
        mpz_mul_si(tmp_.get_mpz_t(), tmp_.get_mpz_t(), x);
        g_[k][k] += tmp_;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == k) continue;
            submul(gram(k, i), gram(j, i));
        }
        auto& bk = b_[k];
        const auto& bj = b_[j];
        for (std::size_t t = 0; t < bk.size(); ++t) submul(bk[t], bj[t]);
    }

    // Moves basis vector `from` to position `to` < from, shifting the ones
    // in between up by one.
    void insert(std::size_t from, std::size_t to) {
        std::rotate(b_.begin() + static_cast<long>(to), b_.begin() + static_cast<long>(from),
                    b_.begin() + static_cast<long>(from) + 1);

        for (std::size_t i = from + 1; i < n_; ++i)
            std::rotate(g_[i].begin() + static_cast<long>(to), g_[i].begin() + static_cast<long>(from),
                        g_[i].begin() + static_cast<long>(from) + 1);
        const std::size_t span = from - to + 1;
        std::vector<std::vector<mpz_class>> old(span);
        for (std::size_t t = 0; t < span; ++t) old[t] = std::move(g_[to + t]);
        auto& moved = old[span - 1];  // row of the vector being inserted
        {
            auto& row = g_[to];
            row.resize(to + 1);
            for (std::size_t j = 0; j < to; ++j) mpz_swap(row[j].get_mpz_t(), moved[j].get_mpz_t());
            mpz_swap(row[to].get_mpz_t(), moved[from].get_mpz_t());
        }
        for (std::size_t i = to + 1; i <= from; ++i) {
            auto& src = old[i - 1 - to];
            auto& row = g_[i];
            row.resize(i + 1);
            for (std::size_t j = 0; j < to; ++j) mpz_swap(row[j].get_mpz_t(), src[j].get_mpz_t());
            mpz_swap(row[to].get_mpz_t(), moved[i - 1].get_mpz_t());
            for (std::size_t j = to + 1; j < i; ++j) mpz_swap(row[j].get_mpz_t(), src[j - 1].get_mpz_t());
            mpz_swap(row[i].get_mpz_t(), src[i - 1].get_mpz_t());
        }

        for (std::size_t j = 0; j < to; ++j) {
            s_tmp_ = r_[from][j];
            r_[to][j] = s_tmp_;
            s_tmp_ = mu_[from][j];
            mu_[to][j] = s_tmp_;
        }
        r_[to][to] = s_[to];
    }

    std::vector<IntVector>& b_;
    const ReductionParams& params_;
    ReductionStats& stats_;
    Ops ops_;
    std::size_t n_;
    std::vector<std::vector<mpz_class>> g_;
    std::vector<std::vector<FT>> r_, mu_;
    std::vector<FT> s_;
    FT delta_{}, eta_{};
    FT s_tmp_{};
    mpz_class tmp_;
};

mpz_class dot(const IntVector& a, const IntVector& b) {
    mpz_class acc;
    for (std::size_t t = 0; t < a.size(); ++t) mpz_addmul(acc.get_mpz_t(), a[t].get_mpz_t(), b[t].get_mpz_t());
    return acc;
}

}  // namespace

Basis lll_reduce(Basis basis, const ReductionParams& params, ReductionStats* stats_out) {
    params.validate();
    ReductionStats local;
    ReductionStats& stats = stats_out ? *stats_out : local;
    stats = {};
    auto& cols = basis.columns();
    if (cols.size() <= 1) {
        if (!cols.empty() && std::all_of(cols[0].begin(), cols[0].end(), [](const mpz_class& x) { return sgn(x) == 0; }))
            throw ReductionError("dependent columns: zero vector in basis");
        stats.verified = true;
        return basis;
    }

    // long double carries a 15-bit exponent; Gram entries must stay inside it.
    const bool long_double_ok = 2 * basis.max_bits() + 64 < 16000;
    int attempt = long_double_ok ? 0 : 1;
    for (; attempt <= params.max_escalations; ++attempt) {
        Outcome outcome;
        if (attempt == 0) {
            stats.float_precision = LongDoubleOps::precision;
            outcome = Reducer<LongDoubleOps>(cols, params, stats, LongDoubleOps{}).run();
        } else {
            const mpfr_prec_t prec = static_cast<mpfr_prec_t>(64) << attempt;
            stats.float_precision = prec;
            outcome = Reducer<MpfrOps>(cols, params, stats, MpfrOps(prec)).run();
        }
        if (outcome == Outcome::done) {
            if (!params.verify) return basis;
            if (is_lll_reduced(basis, params.delta, params.eta)) {
                stats.verified = true;
                return basis;
            }
        }
        ++stats.escalations;
    }
    throw ReductionError("precision escalations exhausted without a verified reduction");
}

IntegralGramSchmidt integral_gram_schmidt(const Basis& basis) {
    const auto& b = basis.columns();
    const std::size_t n = b.size();
    IntegralGramSchmidt out;
    out.d.assign(n + 1, 0);
    out.d[0] = 1;
    out.lambda.assign(n, {});
    mpz_class u, t;
    for (std::size_t i = 0; i < n; ++i) {
        out.lambda[i].resize(i);
        for (std::size_t j = 0; j <= i; ++j) {
            u = dot(b[i], b[j]);
            for (std::size_t k = 0; k < j; ++k) {
                u *= out.d[k + 1];
                mpz_submul(u.get_mpz_t(), out.lambda[i][k].get_mpz_t(), out.lambda[j][k].get_mpz_t());
                mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), out.d[k].get_mpz_t());
            }
            if (j < i) {
                out.lambda[i][j] = u;
            } else {
                if (sgn(u) == 0) throw ReductionError("dependent columns detected in Gram-Schmidt");
                out.d[i + 1] = u;
            }
        }
    }
    return out;
}

bool is_lll_reduced(const Basis& basis, const mpq_class& delta, const mpq_class& eta) {
    const auto gs = integral_gram_schmidt(basis);
    const std::size_t n = basis.size();
    mpz_class lhs, rhs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            // |lambda_ij| / d_{j+1} <= eta
            lhs = abs(gs.lambda[i][j]) * eta.get_den();
            rhs = gs.d[j + 1] * eta.get_num();
            if (lhs > rhs) return false;
        }
        if (i == 0) continue;
        // delta d_i^2 <= d_{i+1} d_{i-1} + lambda_{i,i-1}^2
        lhs = gs.d[i] * gs.d[i] * delta.get_num();
        rhs = (gs.d[i + 1] * gs.d[i - 1] + gs.lambda[i][i - 1] * gs.lambda[i][i - 1]) * delta.get_den();
        if (lhs > rhs) return false;
    }
    return true;
}

mpz_class determinant(const Basis& basis) {
    if (!basis.square()) throw PreconditionError("determinant needs a square basis");
    const std::size_t n = basis.size();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination on the row-major copy.
    std::vector<IntVector> a(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = basis.at(i, j);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k][k]) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a[p][k]) == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] *= a[k][k];
                mpz_submul(a[i][j].get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

// Extended gcd with u*a + v*b = g >= 0.
void xgcd(mpz_class& g, mpz_class& u, mpz_class& v, const mpz_class& a, const mpz_class& b) {
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

void mod_column(IntVector& col, const mpz_class& r) {
    for (auto& x : col) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), r.get_mpz_t());
}

// HNF modulo a multiple D of the lattice determinant; rows processed from
// the bottom, output columns W_1..W_m upper triangular.
Basis hnf_modular(const Basis& basis, const mpz_class& det_multiple) {
    const std::size_t m = basis.dim();
    std::vector<IntVector> a = basis.columns();
    const std::size_t n = a.size();
    std::vector<IntVector> w(m, IntVector(m));
    mpz_class r = det_multiple;
    for (auto& col : a) mod_column(col, r);

    mpz_class g, u, v, p, q;
    std::size_t k = n - 1;
    for (std::size_t ii = m; ii-- > 0;) {
        // Eliminate row ii from columns 0..k-1 into column k.
        for (std::size_t j = k; j-- > 0;) {
            if (sgn(a[j][ii]) == 0) continue;
            xgcd(g, u, v, a[k][ii], a[j][ii]);
            p = a[k][ii] / g;
            q = a[j][ii] / g;
            IntVector bcol(m);
            for (std::size_t t = 0; t < m; ++t) {
                bcol[t] = u * a[k][t] + v * a[j][t];
                a[j][t] = p * a[j][t] - q * a[k][t];
            }
            a[k] = std::move(bcol);
            mod_column(a[j], r);
            mod_column(a[k], r);
        }
        xgcd(g, u, v, a[k][ii], r);
        IntVector col(m);
        for (std::size_t t = 0; t < m; ++t) col[t] = u * a[k][t];
        mod_column(col, r);
        if (sgn(col[ii]) == 0) col[ii] = r;
        w[ii] = std::move(col);
        for (std::size_t j = ii + 1; j < m; ++j) {
            mpz_fdiv_q(q.get_mpz_t(), w[j][ii].get_mpz_t(), w[ii][ii].get_mpz_t());
            for (std::size_t t = 0; t <= ii; ++t) mpz_submul(w[j][t].get_mpz_t(), q.get_mpz_t(), w[ii][t].get_mpz_t());
        }
        if (ii == 0) break;
        r /= g;
        --k;
        if (sgn(a[k][ii - 1]) == 0) a[k][ii - 1] = r;
    }
    return Basis(std::move(w));
}

// Plain column-operation HNF, no modulus; used for non-square bases. Rows
// without a pivot are skipped, so any rank is accepted and the result is
// the canonical column echelon form of the lattice.
Basis hnf_plain(const Basis& basis) {
    const std::size_t m = basis.dim();
    std::vector<IntVector> a = basis.columns();
    const std::size_t n = a.size();
    mpz_class q;
    std::size_t k = n;  // columns [k, n) are finished pivots
    for (std::size_t ii = m; ii-- > 0 && k > 0;) {
        const std::size_t piv = k - 1;
        bool found = false;
        for (;;) {
            // Smallest nonzero entry of row ii among columns 0..piv becomes the pivot.
            std::size_t best = n;
            for (std::size_t j = 0; j <= piv; ++j)
                if (sgn(a[j][ii]) != 0 &&
                    (best == n || mpz_cmpabs(a[j][ii].get_mpz_t(), a[best][ii].get_mpz_t()) < 0))
                    best = j;
            if (best == n) break;
            found = true;
            std::swap(a[best], a[piv]);
            if (sgn(a[piv][ii]) < 0)
                for (auto& x : a[piv]) x = -x;
            bool clean = true;
            for (std::size_t j = 0; j < piv; ++j) {
                if (sgn(a[j][ii]) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), a[j][ii].get_mpz_t(), a[piv][ii].get_mpz_t());
                for (std::size_t t = 0; t < m; ++t) mpz_submul(a[j][t].get_mpz_t(), q.get_mpz_t(), a[piv][t].get_mpz_t());
                if (sgn(a[j][ii]) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!found) continue;
        for (std::size_t j = piv + 1; j < n; ++j) {
            mpz_fdiv_q(q.get_mpz_t(), a[j][ii].get_mpz_t(), a[piv][ii].get_mpz_t());
            for (std::size_t t = 0; t < m; ++t) mpz_submul(a[j][t].get_mpz_t(), q.get_mpz_t(), a[piv][t].get_mpz_t());
        }
        k = piv;
    }
    // Columns left of k are zero: every row has been used or had no pivot.
    return Basis(std::vector<IntVector>(a.begin() + static_cast<long>(k), a.end()));
}

}  // namespace

Basis hermite_normal_form(const Basis& basis) {
    if (basis.size() == 0) return basis;
    if (basis.square()) {
        mpz_class det = abs(determinant(basis));
        if (sgn(det) == 0) throw PreconditionError("hermite_normal_form: singular basis");
        return hnf_modular(basis, det);
    }
    return hnf_plain(basis);
}

bool same_lattice(const Basis& a, const Basis& b) {
    if (a.dim() != b.dim()) throw PreconditionError("same_lattice: dimension mismatch");
    if (a.size() != b.size()) return false;
    if (a.square()) {
        const mpz_class da = abs(determinant(a)), db = abs(determinant(b));
        if (da != db) return false;
        if (sgn(da) == 0) throw PreconditionError("same_lattice: dependent columns");
        return hnf_modular(a, da) == hnf_modular(b, da);
    }
    return hnf_plain(a) == hnf_plain(b);
}

}  // namespace goldosc
