#ifndef GOLDOSC_LLL_HPP
#define GOLDOSC_LLL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <cstddef>
#include <functional>
#include <vector>

namespace goldosc {

using IntVector = std::vector<mpz_class>;

/// Integer lattice basis stored column by column; every column has
/// length dim().
class Basis {
public:
    Basis() = default;
    explicit Basis(std::vector<IntVector> columns);

    static Basis identity(std::size_t n);
    /// Builds a basis from a row-major matrix; columns become basis vectors.
    static Basis from_rows(const std::vector<IntVector>& rows);

    std::size_t dim() const noexcept { return columns_.empty() ? 0 : columns_.front().size(); }
    std::size_t size() const noexcept { return columns_.size(); }
    bool square() const noexcept { return dim() == size(); }
    /// Bit length of the largest entry magnitude.
    long max_bits() const;

    const IntVector& column(std::size_t j) const { return columns_.at(j); }
    const mpz_class& at(std::size_t row, std::size_t col) const { return columns_.at(col).at(row); }
    std::vector<IntVector>& columns() noexcept { return columns_; }
    const std::vector<IntVector>& columns() const noexcept { return columns_; }

    friend bool operator==(const Basis&, const Basis&) = default;

private:
    std::vector<IntVector> columns_;
};

struct ReductionStats {
    std::size_t swaps = 0;
    std::size_t size_reductions = 0;
    int escalations = 0;
    mpfr_prec_t float_precision = 64;
    bool verified = false;
};

struct ReductionParams {
    mpq_class delta{99, 100};
    mpq_class eta{501, 1000};
    /// Resource guards; exceeding either raises ReductionError.
    std::size_t max_swaps = 200'000'000;
    int max_escalations = 6;
    /// Exact post-hoc check of the output; escalates precision on failure.
    bool verify = true;
    /// Called from time to time during long reductions.
    std::function<void(const ReductionStats&)> progress;

    /// Throws PreconditionError unless 1/4 < delta < 1 and 1/2 <= eta < sqrt(delta).
    void validate() const;
};

/// (delta, eta)-LLL reduction. The result spans the same lattice as the
/// input; when params.verify is set it has been checked in exact
/// arithmetic to satisfy size reduction and the Lovasz condition.
Basis lll_reduce(Basis basis, const ReductionParams& params = {}, ReductionStats* stats = nullptr);

/// Exact rational check of size reduction |mu_ij| <= eta and
/// delta |b*_{i-1}|^2 <= |b*_i|^2 + mu_{i,i-1}^2 |b*_{i-1}|^2.
/// Throws ReductionError if the columns are dependent.
bool is_lll_reduced(const Basis& basis, const mpq_class& delta, const mpq_class& eta);

/// Integral Gram-Schmidt data: d[0] = 1, d[i+1] = Gram determinant of the
/// first i+1 columns, lambda[i][j] = d[j+1] * mu_ij.
struct IntegralGramSchmidt {
    std::vector<mpz_class> d;
    std::vector<std::vector<mpz_class>> lambda;
};
IntegralGramSchmidt integral_gram_schmidt(const Basis& basis);

/// Exact determinant of a square basis matrix (fraction-free elimination).
mpz_class determinant(const Basis& basis);

/// Hermite normal form of the lattice spanned by the columns. For a
/// nonsingular square basis this is upper triangular with positive
/// diagonal and 0 <= w_ij < w_ii for j > i; otherwise the column echelon
/// form with the same normalization on pivot rows (zero columns dropped).
Basis hermite_normal_form(const Basis& basis);

/// True iff both bases generate the same lattice. Throws PreconditionError
/// on a dimension mismatch.
bool same_lattice(const Basis& a, const Basis& b);

}  // namespace goldosc

#endif
