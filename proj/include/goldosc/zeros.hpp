#ifndef GOLDOSC_ZEROS_HPP
#define GOLDOSC_ZEROS_HPP

#include "goldosc/real.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace goldosc {

/// First ordinate to 50 decimals, used to spot-check loaded tables.
inline constexpr const char* kFirstOrdinate50 = "14.13472514173469379045725198356247027078425711569924";

/// Immutable, validated table of ordinates gamma_1 < gamma_2 < ... of
/// nontrivial zeta zeros. Indices are 1-based in the accessors that take
/// a zero index, matching the usual gamma_k numbering.
class ZeroTable {
public:
    ZeroTable(std::vector<Real> ordinates, int decimal_digits, std::string id);

    std::size_t count() const noexcept { return ordinates_.size(); }
    int decimal_digits() const noexcept { return decimal_digits_; }
    /// floor(decimal_digits * log2(10)): the guaranteed correct bits per entry.
    long precision_bits() const noexcept { return precision_bits_; }
    const std::string& id() const noexcept { return id_; }

    /// gamma_k, 1 <= k <= count().
    const Real& gamma(std::size_t k) const;
    std::span<const Real> ordinates() const noexcept { return ordinates_; }
    /// First n ordinates.
    std::span<const Real> first(std::size_t n) const;

    /// Upper bound on |stored - true| for every entry: 2^-precision_bits.
    Real entry_radius(mpfr_prec_t prec) const;

private:
    std::vector<Real> ordinates_;
    int decimal_digits_;
    long precision_bits_;
    std::string id_;
};

/// Exact floor(digits * log2(10)).
long decimal_digits_to_bits(int digits);

ZeroTable parse_zero_table(std::istream& in, long min_precision_bits, std::string id);
ZeroTable load_zero_table(const std::filesystem::path& path, long min_precision_bits = 64);

/// Canonical text form; reproduces a canonical input file byte for byte.
void write_zero_table(std::ostream& out, const ZeroTable& table);

/// #{k : gamma_k < T}. Throws PreconditionError if T exceeds the last
/// ordinate, since the count above the table cannot be certified.
std::size_t zero_count_below(const ZeroTable& table, const Real& T);

/// gamma_{N+1} - (gamma_{N+1} - gamma_N)/100.
Real t_star(const ZeroTable& table, std::size_t N, mpfr_prec_t prec = Real::kDefaultPrecision);

}  // namespace goldosc

#endif
