#include "cli.hpp"

#include "goldosc/error.hpp"
#include "goldosc/gfunc.hpp"
#include "goldosc/goldbach.hpp"
#include "goldosc/otr.hpp"
#include "goldosc/zeros.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace goldosc::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::string kDataDir = GOLDOSC_DATA_DIR;
const char* const kDefaultTable = "zeros-2k.txt";
const char* const kDefaultHpTable = "zeros-650-hp.txt";
const char* const kTable1 = "70,100,150,200,250,300,350,400,450,500,600,700,800,900,1000,2000";

std::string default_path(const char* name) { return kDataDir + "/" + name; }

// Decimal rendering on the safe side of each kind of bound.
mpfr_rnd_t safe_rounding(BoundKind kind) {
    switch (kind) {
        case BoundKind::conditional_positive:
        case BoundKind::witness_positive: return MPFR_RNDD;
        default: return MPFR_RNDU;
    }
}

constexpr int kDecimals = 20;

std::string dec(const Real& x, mpfr_rnd_t rnd = MPFR_RNDN) { return x.to_fixed(kDecimals, rnd); }

Json table_json(const ZeroTable& t) {
    return Json{{"id", t.id()},
                {"count", t.count()},
                {"decimal_digits", t.decimal_digits()},
                {"precision_bits", t.precision_bits()}};
}

Json report_json(const BoundReport& r) {
    Json params = Json::object();
    if (r.params.N) params["N"] = *r.params.N;
    if (r.params.b) params["b"] = *r.params.b;
    if (r.params.c) params["c"] = *r.params.c;
    if (r.params.d) params["d"] = *r.params.d;
    if (r.params.eps) params["eps"] = r.params.eps->to_fixed(kDecimals, MPFR_RNDU);
    if (r.params.T) params["T"] = dec(*r.params.T);
    if (r.params.T1) params["T1"] = dec(*r.params.T1);
    if (r.params.T2) params["T2"] = dec(*r.params.T2);
    return Json{{"kind", std::string(to_string(r.kind))},
                {"value", dec(r.value, safe_rounding(r.kind))},
                {"params", params},
                {"zero_table_id", r.zero_table_id},
                {"precision_bits", r.precision_bits}};
}

Json envelope(const std::string& command, const ZeroTable* table, mpfr_prec_t prec) {
    Json j{{"schema", 1}, {"command", command}};
    if (table) j["zero_table"] = table_json(*table);
    j["precision_bits"] = prec;
    return j;
}

std::vector<std::uint64_t> parse_list(const std::string& text, const char* what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.front() == '-')
            throw PreconditionError(std::string("bad ") + what + " list entry '" + item + "'");
        out.push_back(v);
    }
    return out;
}

Real parse_real(const std::string& text, mpfr_prec_t prec, const char* what) {
    try {
        return Real::parse(text, prec);
    } catch (const std::invalid_argument&) {
        throw PreconditionError(std::string("bad value for ") + what + ": '" + text + "'");
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

struct Common {
    std::string table;
    std::string out;
    std::string format = "json";
    long precision = Real::kDefaultPrecision;
};

// Writes the rendered report to --out or to the given stream.
void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out.empty() || c.out == "-") {
        out << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw FormatError("cannot write '" + c.out + "'");
    f << text;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

int cmd_upper_bound(const Common& c, const std::string& t1s, const std::string& t2s, std::ostream& out) {
    const auto prec = static_cast<mpfr_prec_t>(c.precision);
    const ZeroTable table = load_zero_table(c.table);
    const BoundReport r =
        upper_bound_G(table, parse_real(t1s, prec, "--T1"), parse_real(t2s, prec, "--T2"), prec);
    if (c.format == "text") {
        emit(c, "|G(x)| < " + dec(r.value, MPFR_RNDU) + "\n", out);
        return 0;
    }
    Json j = envelope("upper-bound", &table, prec);
    j["report"] = report_json(r);
    emit(c, render_json(j), out);
    return 0;
}

int cmd_conditional_table(const Common& c, const std::string& ns, const std::string& eps_s,
                          const std::string& direction, std::ostream& out) {
    const auto prec = static_cast<mpfr_prec_t>(c.precision);
    const std::vector<std::uint64_t> list = parse_list(ns, "--n");
    const ZeroTable table = load_zero_table(c.table);
    const Real eps = parse_real(eps_s, prec, "--eps");
    std::vector<Direction> dirs;
    if (direction == "positive" || direction == "both") dirs.push_back(Direction::positive);
    if (direction == "negative" || direction == "both") dirs.push_back(Direction::negative);

    std::vector<BoundReport> rows;
    for (std::uint64_t N : list)
        for (Direction d : dirs) rows.push_back(conditional_bound(table, N, eps, d, prec));

    std::ostringstream text;
    if (c.format == "csv") {
        text << "N,direction,eps,T,bound\n";
        for (const auto& r : rows)
            text << *r.params.N << ',' << (r.kind == BoundKind::conditional_positive ? "positive" : "negative") << ','
                 << r.params.eps->to_fixed(kDecimals, MPFR_RNDU) << ',' << dec(*r.params.T) << ','
                 << dec(r.value, safe_rounding(r.kind)) << '\n';
    } else if (c.format == "text") {
        // Six decimals, truncated, as in the printed table.
        for (const auto& r : rows) text << *r.params.N << ' ' << r.value.to_fixed(6, MPFR_RNDZ) << '\n';
    } else {
        Json j = envelope("conditional-table", &table, prec);
        j["eps"] = eps.to_fixed(kDecimals, MPFR_RNDU);
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(report_json(r));
        j["rows"] = arr;
        text << render_json(j);
    }
    emit(c, text.str(), out);
    return 0;
}

Json witness_json(const Witness& w) {
    return Json{{"kind", std::string(to_string(w.kind))},
                {"N", w.N},
                {"c", w.c},
                {"numerator_base36", to_base36(w.numerator)},
                {"numerator_bits", mpz_sizeinbase(w.numerator.get_mpz_t(), 2)},
                {"eps", w.eps.to_fixed(kDecimals, MPFR_RNDU)},
                {"bound", dec(w.bound, w.kind == WitnessKind::inhomogeneous ? MPFR_RNDD : MPFR_RNDU)},
                {"T", dec(w.T)}};
}

void write_witness_file(const std::string& path, const Witness& w) {
    std::ofstream f(path);
    if (!f) throw FormatError("cannot write '" + path + "'");
    write_witness(f, w);
}

int cmd_otr(const Common& c, long n, long b, long cc, long d, double threshold, int retries,
            const std::string& witness_prefix, std::ostream& out, std::ostream& err) {
    const auto prec = static_cast<mpfr_prec_t>(c.precision);
    const ZeroTable table = load_zero_table(c.table);
    if (n < 1) throw PreconditionError("--n must be >= 1");
    ApproxProblem problem{static_cast<std::size_t>(n), b, cc, d, table.id()};

    PipelineOptions options;
    options.eps_threshold = threshold;
    options.precision = prec;
    options.log = [&](std::string_view s) { err << "[otr] " << s << '\n' << std::flush; };
    options.reduction.progress = [&](const ReductionStats& s) {
        err << "[lll] " << s.swaps << " swaps\n" << std::flush;
    };

    // Escalate b by a quarter on an extraction failure or an eps advisory.
    std::optional<PipelineResult> result;
    std::vector<std::string> notes;
    for (int attempt = 0;; ++attempt) {
        try {
            result = run_pipeline(problem, table, options);
            if (result->advisories.empty() || attempt >= retries) break;
            for (const auto& a : result->advisories) notes.push_back("b = " + std::to_string(problem.b) + ": " + a);
        } catch (const ExtractionError& e) {
            if (attempt >= retries) throw;
            notes.push_back("b = " + std::to_string(problem.b) + ": " + e.what());
        }
        const long next = problem.b + std::max(1L, problem.b / 4);
        if (next + 64 > table.precision_bits()) {
            err << "[otr] cannot raise b beyond " << problem.b << " with this table\n";
            if (!result) throw ExtractionError("no witness and b cannot be raised further");
            break;
        }
        err << "[otr] retrying with b = " << next << '\n';
        problem.b = next;
        result.reset();
    }
    const PipelineResult& r = *result;
    for (const auto& a : r.advisories) err << "[otr] advisory: " << a << '\n';

    if (!witness_prefix.empty()) {
        write_witness_file(witness_prefix + "-positive.txt", r.positive);
        write_witness_file(witness_prefix + "-negative.txt", r.negative);
    }

    if (c.format == "text") {
        std::ostringstream t;
        t << "N " << problem.N << " b " << problem.b << " c " << problem.c << " d " << problem.d << '\n'
          << "eps1 " << r.positive.eps.to_fixed(5, MPFR_RNDU) << "  upper " << r.positive.bound.to_fixed(7, MPFR_RNDZ)
          << '\n'
          << "eps2 " << r.negative.eps.to_fixed(5, MPFR_RNDU) << "  lower " << r.negative.bound.to_fixed(7, MPFR_RNDZ)
          << '\n';
        for (const auto& a : r.advisories) t << "advisory: " << a << '\n';
        emit(c, t.str(), out);
        return 0;
    }
    Json j = envelope("otr", &table, prec);
    j["problem"] = Json{{"N", problem.N}, {"b", problem.b}, {"c", problem.c}, {"d", problem.d}};
    j["reduction"] = Json{{"delta", options.reduction.delta.get_str()},
                          {"eta", options.reduction.eta.get_str()},
                          {"swaps", r.stats.swaps},
                          {"float_precision", r.stats.float_precision},
                          {"escalations", r.stats.escalations},
                          {"verified", r.stats.verified}};
    j["witnesses"] = Json::array({witness_json(r.positive), witness_json(r.negative)});
    j["reports"] = Json::array({report_json(r.upper), report_json(r.lower)});
    j["advisories"] = r.advisories;
    j["retries"] = notes;
    emit(c, render_json(j), out);
    return 0;
}

int cmd_verify_figure1(const Common& c, long depth, const std::string& y_file, const std::string& z_file,
                       std::ostream& out) {
    const auto prec = static_cast<mpfr_prec_t>(c.precision);
    if (depth < 1) throw PreconditionError("--depth must be >= 1");
    const mpz_class y = from_base36(trim(read_text_file(y_file)));
    const mpz_class z = from_base36(trim(read_text_file(z_file)));
    const ZeroTable table = load_zero_table(c.table);
    const auto K = static_cast<std::size_t>(depth);
    const Witness wy = verify_witness(y, 10, WitnessKind::inhomogeneous, K, table, prec);
    const Witness wz = verify_witness(z, 10, WitnessKind::homogeneous, K, table, prec);

    if (c.format == "text") {
        std::ostringstream t;
        t << "depth " << K << '\n'
          << "eps1 " << wy.eps.to_fixed(kDecimals, MPFR_RNDU) << "  bound " << dec(wy.bound, MPFR_RNDD) << '\n'
          << "eps2 " << wz.eps.to_fixed(kDecimals, MPFR_RNDU) << "  bound " << dec(wz.bound, MPFR_RNDU) << '\n';
        emit(c, t.str(), out);
        return 0;
    }
    Json j = envelope("verify-figure1", &table, prec);
    j["depth"] = K;
    j["witnesses"] = Json::array({witness_json(wy), witness_json(wz)});
    emit(c, render_json(j), out);
    return 0;
}

int cmd_goldbach(const Common& c, const std::string& xs, const std::string& Ts, std::uint64_t cap,
                 std::ostream& out) {
    const auto prec = static_cast<mpfr_prec_t>(c.precision);
    const std::vector<std::uint64_t> list = parse_list(xs, "--x");
    const ZeroTable table = load_zero_table(c.table);
    const Real T = parse_real(Ts, prec, "--T");
    std::vector<RSummary> rows;
    for (std::uint64_t x : list) rows.push_back(compare_explicit_formula(x, table, T, cap, prec));

    if (c.format == "json") {
        Json j = envelope("goldbach", &table, prec);
        j["T"] = dec(T);
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(Json{{"x", r.x},
                               {"sum_R", r.sum_R.to_scientific(20)},
                               {"main_term", r.main_term.to_scientific(20)},
                               {"zero_term", r.zero_term.to_scientific(20)},
                               {"residual", r.residual.to_scientific(20)},
                               {"relative_residual", (abs(r.residual) / r.main_term).to_scientific(6)}});
        j["rows"] = arr;
        emit(c, render_json(j), out);
        return 0;
    }
    std::ostringstream t;
    write_csv(t, rows);
    emit(c, t.str(), out);
    return 0;
}

int cmd_gen_fixtures_check(const std::vector<std::string>& tables, std::size_t min_count, long min_bits,
                           const Common& c, std::ostream& out, std::ostream& err) {
    std::vector<ZeroTable> loaded;
    for (const auto& path : tables) loaded.push_back(load_zero_table(path));
    Json j{{"schema", 1}, {"command", "gen-fixtures-check"}};
    Json arr = Json::array();
    bool ok = true;
    for (const auto& t : loaded) {
        Json e = table_json(t);
        e["first"] = t.gamma(1).to_fixed(20);
        e["last"] = t.ordinates().back().to_fixed(20);
        const bool enough = t.count() >= min_count && t.precision_bits() >= min_bits;
        e["meets_minimum"] = enough;
        ok = ok && enough;
        arr.push_back(e);
    }
    j["tables"] = arr;
    // Overlapping prefixes must agree to the coarser table's precision.
    Json cross = Json::array();
    for (std::size_t a = 0; a < loaded.size(); ++a)
        for (std::size_t b = a + 1; b < loaded.size(); ++b) {
            const std::size_t n = std::min(loaded[a].count(), loaded[b].count());
            const long bits = std::min(loaded[a].precision_bits(), loaded[b].precision_bits());
            Real tol(1L, 64);
            mpfr_mul_2si(tol.get(), tol.get(), 1 - bits, MPFR_RNDU);
            std::size_t bad = 0;
            for (std::size_t k = 1; k <= n; ++k)
                if (abs(loaded[a].gamma(k) - loaded[b].gamma(k)) > tol) ++bad;
            cross.push_back(Json{{"tables", Json::array({loaded[a].id(), loaded[b].id()})},
                                 {"overlap", n},
                                 {"disagreements", bad}});
            ok = ok && bad == 0;
        }
    j["cross_checks"] = cross;
    j["ok"] = ok;
    emit(c, render_json(j), out);
    if (!ok) err << "fixture check failed\n";
    return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Oscillation bounds for the Goldbach summatory term G(x)"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub, const char* table_default) {
        sub->add_option("--table", common.table, std::string("zero table file (default data/") + table_default + ")");
        sub->add_option("--out", common.out, "report destination (default standard output)");
        sub->add_option("--precision", common.precision, "working precision in bits")
            ->check(CLI::Range(64L, 1L << 20));
        sub->add_option("--format", common.format, "json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    std::string t1 = "1420.41", t2 = "1420.41";
    auto* ub = app.add_subcommand("upper-bound", "unconditional bound on |G(x)|");
    ub->add_option("--T1", t1, "height for the gamma^-4 sum");
    ub->add_option("--T2", t2, "height for the gamma^-6 sum and the tail");

    std::string n_list = kTable1, eps = "0.01", direction = "positive";
    auto* ct = app.add_subcommand("conditional-table", "conditional bounds for a list of N");
    ct->add_option("--n", n_list, "comma-separated N values (may be empty)");
    ct->add_option("--eps", eps, "approximation error");
    ct->add_option("--direction", direction, "positive, negative or both")
        ->check(CLI::IsMember({"positive", "negative", "both"}));

    long on = 70, ob = 930, oc = 10, od = 4;
    double threshold = 0.05;
    int retries = 0;
    std::string witness_prefix;
    auto* ot = app.add_subcommand("otr", "lattice construction of explicit witnesses");
    ot->add_option("--n", on, "zeros used");
    ot->add_option("--bits", ob, "bits of precision b");
    ot->add_option("--c", oc, "scale exponent c");
    ot->add_option("--d", od, "weight exponent d");
    ot->add_option("--eps-threshold", threshold, "eps above this triggers an advisory");
    ot->add_option("--retries", retries, "times to raise b by a quarter after an advisory or failed extraction")
        ->check(CLI::Range(0, 20));
    ot->add_option("--witness-prefix", witness_prefix, "write <prefix>-positive.txt and <prefix>-negative.txt");

    long depth = 70;
    std::string y_file = default_path("figure1_y.b36"), z_file = default_path("figure1_z.b36");
    auto* vf = app.add_subcommand("verify-figure1", "certify the published witnesses over the first K zeros");
    vf->add_option("--depth", depth, "number of zeros K");
    vf->add_option("--y-file", y_file, "base-36 2^10 y");
    vf->add_option("--z-file", z_file, "base-36 2^10 z");

    std::string x_list = "100000", T = "1420";
    std::uint64_t cap = kGoldbachDefaultCap;
    auto* gb = app.add_subcommand("goldbach", "compare sum R(n) with the explicit formula");
    gb->add_option("--x", x_list, "comma-separated x values");
    gb->add_option("--T", T, "zero cutoff");
    gb->add_option("--cap", cap, "largest x accepted");

    std::vector<std::string> fixture_tables = {default_path(kDefaultTable), default_path(kDefaultHpTable)};
    std::size_t min_count = 650;
    long min_bits = 10000;
    auto* gf = app.add_subcommand("gen-fixtures-check", "validate zero tables and cross-check their overlap");
    gf->add_option("--tables", fixture_tables, "tables to check");
    gf->add_option("--min-count", min_count, "required entries per table");
    gf->add_option("--min-bits", min_bits, "required precision per table");
    gf->add_option("--out", common.out, "report destination");

    add_common(ub, kDefaultTable);
    add_common(ct, kDefaultTable);
    add_common(ot, kDefaultTable);
    add_common(vf, kDefaultHpTable);
    add_common(gb, kDefaultTable);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    auto table_default = [&](CLI::App* sub, const char* name) {
        if (sub->count("--table") == 0) common.table = default_path(name);
    };

    try {
        if (*ub) {
            table_default(ub, kDefaultTable);
            return cmd_upper_bound(common, t1, t2, out);
        }
        if (*ct) {
            table_default(ct, kDefaultTable);
            return cmd_conditional_table(common, n_list, eps, direction, out);
        }
        if (*ot) {
            table_default(ot, kDefaultTable);
            return cmd_otr(common, on, ob, oc, od, threshold, retries, witness_prefix, out, err);
        }
        if (*vf) {
            table_default(vf, kDefaultHpTable);
            return cmd_verify_figure1(common, depth, y_file, z_file, out);
        }
        if (*gb) {
            table_default(gb, kDefaultTable);
            if (gb->count("--format") == 0) common.format = "csv";
            return cmd_goldbach(common, x_list, T, cap, out);
        }
        if (*gf) return cmd_gen_fixtures_check(fixture_tables, min_count, min_bits, common, out, err);
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << '\n';
        return 3;
    } catch (const ExtractionError& e) {
        err << "extraction error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

}  // namespace goldosc::cli
