#include "goldosc/zeros.hpp"

#include "goldosc/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace goldosc {

namespace {

// Extra bits carried beyond the certified precision so that printing the
// stored value back at `decimal_digits` reproduces the file exactly.
constexpr long kStorageGuardBits = 64;

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

long parse_positive(std::string_view field, const char* what) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || v <= 0)
        throw FormatError(std::string("malformed header: bad ") + what);
    return v;
}

}  // namespace

long decimal_digits_to_bits(int digits) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2)) - 1;
}

ZeroTable::ZeroTable(std::vector<Real> ordinates, int decimal_digits, std::string id)
    : ordinates_(std::move(ordinates)),
      decimal_digits_(decimal_digits),
      precision_bits_(decimal_digits_to_bits(decimal_digits)),
      id_(std::move(id)) {
    if (ordinates_.empty()) throw FormatError("zero table is empty");
    if (precision_bits_ < 64) throw FormatError("zero table precision below 64 bits");
    const Real lo = Real::parse("14.13", 64), hi = Real::parse("14.14", 64);
    if (!(ordinates_.front() > lo && ordinates_.front() < hi))
        throw FormatError("first ordinate outside (14.13, 14.14)");
    for (std::size_t k = 0; k + 1 < ordinates_.size(); ++k) {
        if (!(ordinates_[k] < ordinates_[k + 1]))
            throw FormatError("non-monotone ordinates at line " + std::to_string(k + 3));
    }
}

const Real& ZeroTable::gamma(std::size_t k) const {
    if (k == 0 || k > ordinates_.size())
        throw PreconditionError("zero index " + std::to_string(k) + " outside table of " +
                                std::to_string(ordinates_.size()));
    return ordinates_[k - 1];
}

std::span<const Real> ZeroTable::first(std::size_t n) const {
    if (n > ordinates_.size())
        throw PreconditionError("table holds " + std::to_string(ordinates_.size()) + " zeros, " +
                                std::to_string(n) + " requested");
    return std::span<const Real>(ordinates_).first(n);
}

Real ZeroTable::entry_radius(mpfr_prec_t prec) const {
    Real r(1L, prec);
    mpfr_mul_2si(r.get(), r.get(), -precision_bits_, MPFR_RNDU);
    return r;
}

ZeroTable parse_zero_table(std::istream& in, long min_precision_bits, std::string id) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("malformed header: empty file");
    std::istringstream header(line);
    std::string magic, count_field, digits_field, extra;
    header >> magic >> count_field >> digits_field;
    if (magic != "ZEROS" || count_field.empty() || digits_field.empty() || (header >> extra))
        throw FormatError("malformed header: expected 'ZEROS <count> <decimal_digits>'");
    const long count = parse_positive(count_field, "count");
    const long digits = parse_positive(digits_field, "decimal_digits");
    if (count > 1'000'000) throw FormatError("malformed header: more than 10^6 entries");
    const long bits = decimal_digits_to_bits(static_cast<int>(digits));
    if (bits < min_precision_bits)
        throw FormatError("declared precision " + std::to_string(bits) + " bits below required " +
                          std::to_string(min_precision_bits));

    const mpfr_prec_t storage = bits + kStorageGuardBits;
    std::vector<Real> ordinates;
    ordinates.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) {
        if (!std::getline(in, line)) throw FormatError("parse failure: file ends after " + std::to_string(k) + " entries");
        const auto dot = line.find('.');
        const std::string_view view(line);
        if (dot == std::string::npos || !all_digits(view.substr(0, dot)) || !all_digits(view.substr(dot + 1)) ||
            static_cast<long>(line.size() - dot - 1) != digits)
            throw FormatError("parse failure on line " + std::to_string(k + 2));
        ordinates.push_back(Real::parse(line, storage));
    }
    if (std::getline(in, line) && !line.empty()) throw FormatError("parse failure: trailing data after entries");

    ZeroTable table(std::move(ordinates), static_cast<int>(digits), std::move(id));
    const int check_digits = static_cast<int>(std::min<long>(digits, 50));
    Real expected = Real::parse(kFirstOrdinate50, storage);
    // entries are rounded to D places; the reference carries 50
    Real tolerance = Real::parse("5e-" + std::to_string(check_digits + 1), 128) + Real::parse("1e-50", 128);
    if (abs(table.gamma(1) - expected) > tolerance)
        throw FormatError("first ordinate disagrees with the reference value");
    return table;
}

ZeroTable load_zero_table(const std::filesystem::path& path, long min_precision_bits) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open zero table '" + path.string() + "'");
    return parse_zero_table(in, min_precision_bits, path.filename().string());
}

void write_zero_table(std::ostream& out, const ZeroTable& table) {
    out << "ZEROS " << table.count() << ' ' << table.decimal_digits() << '\n';
    for (const Real& g : table.ordinates()) out << g.to_fixed(table.decimal_digits()) << '\n';
}

std::size_t zero_count_below(const ZeroTable& table, const Real& T) {
    const auto ords = table.ordinates();
    if (T > ords.back())
        throw PreconditionError("T = " + T.to_scientific(12) + " exceeds the table range; count cannot be certified");
    return static_cast<std::size_t>(
        std::lower_bound(ords.begin(), ords.end(), T, [](const Real& g, const Real& t) { return g < t; }) -
        ords.begin());
}

Real t_star(const ZeroTable& table, std::size_t N, mpfr_prec_t prec) {
    if (N == 0 || N + 1 > table.count())
        throw PreconditionError("t_star(" + std::to_string(N) + ") needs " + std::to_string(N + 1) +
                                " zeros, table has " + std::to_string(table.count()));
    Real next(table.gamma(N + 1), prec);
    Real gap = next - Real(table.gamma(N), prec);
    mpfr_div_ui(gap.get(), gap.get(), 100, MPFR_RNDN);
    return next - gap;
}

}  // namespace goldosc
