#include "gtj/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "gtj/errata.hpp"
#include "gtj/errors.hpp"
#include "gtj/format.hpp"
#include "gtj/genfunc.hpp"
#include "gtj/identities.hpp"
#include "gtj/q_family.hpp"

namespace gtj {
namespace {

enum class OutFormat { Table, Json, Csv };

OutFormat parse_format(const std::string& f) {
    if (f == "table") {
        return OutFormat::Table;
    }
    if (f == "json") {
        return OutFormat::Json;
    }
    if (f == "csv") {
        return OutFormat::Csv;
    }
    throw ParseError("unknown format '" + f + "'");
}

struct SeedOptions {
    std::string seed_text;
    std::string preset_text;
};

void add_seed_options(CLI::App* cmd, SeedOptions& opts) {
    auto* seed =
        cmd->add_option("--seed", opts.seed_text, "seed a,b,c as comma-separated fractions");
    auto* preset =
        cmd->add_option("--preset", opts.preset_text, "named seed: jg=(0,1,1), kg=(3,1,3)")
            ->check(CLI::IsMember({"jg", "kg"}));
    seed->excludes(preset);
    preset->excludes(seed);
}

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
}

SeedTriple resolve_seed(const SeedOptions& opts) {
    if (!opts.preset_text.empty()) {
        return preset_seed(opts.preset_text == "jg" ? Preset::Jg : Preset::Kg);
    }
    if (opts.seed_text.empty()) {
        throw ParseError("exactly one of --seed or --preset is required");
    }
    std::vector<std::string> parts;
    std::string current;
    for (char ch : opts.seed_text) {
        if (ch == ',') {
            parts.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(std::move(current));
    if (parts.size() != 3) {
        throw ParseError("seed must have exactly three comma-separated components");
    }
    return SeedTriple(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
}

struct Range {
    std::int64_t lo;
    std::int64_t hi;
};

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (ec != std::errc{} || ptr != last) {
        throw BadRange("bad integer '" + std::string(text) + "'");
    }
    return value;
}

// "A..B" or a single integer.
Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::int64_t v = parse_int(text);
        return {v, v};
    }
    const Range r{parse_int(std::string_view(text).substr(0, dots)),
                  parse_int(std::string_view(text).substr(dots + 2))};
    if (r.lo > r.hi) {
        throw BadRange("inverted range '" + text + "'");
    }
    return r;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') {
            quoted += "\"\"";
        } else {
            quoted += ch;
        }
    }
    quoted += '"';
    return quoted;
}

void print_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    const auto emit = [&out](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c != 0) {
                out << ',';
            }
            out << csv_field(row[c]);
        }
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows) {
        emit(row);
    }
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
    }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    const auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c != 0) {
                out << "  ";
            }
            out << row[c];
            if (c + 1 < row.size()) {
                out << std::string(width[c] - row[c].size(), ' ');
            }
        }
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows) {
        emit(row);
    }
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

GaussianRational eval_method(const SeedTriple& seed, std::int64_t n, const std::string& method) {
    if (method == "binet") {
        return term_binet(seed, n);
    }
    if (method == "fast") {
        return term_fast(seed, n);
    }
    return term_recurrence(seed, n);
}

int cmd_terms(std::ostream& out, const SeedTriple& seed, std::int64_t from, std::int64_t to,
              const std::string& method, OutFormat fmt) {
    if (from > to) {
        throw BadRange("--from must not exceed --to");
    }
    const auto recurrence = term_range(seed, from, to);
    const bool all = method == "all";

    if (fmt == OutFormat::Json) {
        Json arr = Json::array();
        for (std::int64_t n = from; n <= to; ++n) {
            const auto& rec = recurrence[static_cast<std::size_t>(n - from)];
            Json row;
            row["n"] = n;
            if (all) {
                const GaussianRational bin = term_binet(seed, n);
                const GaussianRational fas = term_fast(seed, n);
                row["recurrence"] = {{"re", to_string(rec.re)}, {"im", to_string(rec.im)}};
                row["binet"] = {{"re", to_string(bin.re)}, {"im", to_string(bin.im)}};
                row["fast"] = {{"re", to_string(fas.re)}, {"im", to_string(fas.im)}};
                row["match"] = rec == bin && rec == fas;
            } else {
                const GaussianRational v = all ? rec : eval_method(seed, n, method);
                row["re"] = to_string(v.re);
                row["im"] = to_string(v.im);
            }
            arr.push_back(std::move(row));
        }
        print_json(out, arr);
        return 0;
    }

    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    if (all) {
        header = fmt == OutFormat::Csv
                     ? std::vector<std::string>{"n", "recurrence_re", "recurrence_im", "binet_re",
                                                "binet_im", "fast_re", "fast_im", "match"}
                     : std::vector<std::string>{"n", "recurrence", "binet", "fast", "match"};
        for (std::int64_t n = from; n <= to; ++n) {
            const auto& rec = recurrence[static_cast<std::size_t>(n - from)];
            const GaussianRational bin = term_binet(seed, n);
            const GaussianRational fas = term_fast(seed, n);
            const bool match = rec == bin && rec == fas;
            if (fmt == OutFormat::Csv) {
                rows.push_back({std::to_string(n), to_string(rec.re), to_string(rec.im),
                                to_string(bin.re), to_string(bin.im), to_string(fas.re),
                                to_string(fas.im), match ? "true" : "false"});
            } else {
                rows.push_back({std::to_string(n), to_string(rec), to_string(bin), to_string(fas),
                                match ? "yes" : "NO"});
            }
        }
    } else {
        header = fmt == OutFormat::Csv ? std::vector<std::string>{"n", "re", "im"}
                                       : std::vector<std::string>{"n", "value"};
        for (std::int64_t n = from; n <= to; ++n) {
            const GaussianRational v = method == "recurrence"
                                           ? recurrence[static_cast<std::size_t>(n - from)]
                                           : eval_method(seed, n, method);
            if (fmt == OutFormat::Csv) {
                rows.push_back({std::to_string(n), to_string(v.re), to_string(v.im)});
            } else {
                rows.push_back({std::to_string(n), to_string(v)});
            }
        }
    }
    if (fmt == OutFormat::Csv) {
        print_csv(out, header, rows);
    } else {
        print_table(out, header, rows);
    }
    return 0;
}

int cmd_qterms(std::ostream& out, const SeedTriple& seed, std::int64_t q, std::int64_t from,
               std::int64_t to, OutFormat fmt) {
    if (from > to) {
        throw BadRange("--from must not exceed --to");
    }
    if (fmt == OutFormat::Json) {
        Json arr = Json::array();
        for (std::int64_t n = from; n <= to; ++n) {
            const GaussianRational v = q_term(seed, q, n);
            arr.push_back({{"n", n}, {"re", to_string(v.re)}, {"im", to_string(v.im)}});
        }
        print_json(out, arr);
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::int64_t n = from; n <= to; ++n) {
        const GaussianRational v = q_term(seed, q, n);
        if (fmt == OutFormat::Csv) {
            rows.push_back({std::to_string(n), to_string(v.re), to_string(v.im)});
        } else {
            rows.push_back({std::to_string(n), to_string(v)});
        }
    }
    if (fmt == OutFormat::Csv) {
        print_csv(out, {"n", "re", "im"}, rows);
    } else {
        print_table(out, {"n", "value"}, rows);
    }
    return 0;
}

int cmd_series(std::ostream& out, const SeedTriple& seed, std::int64_t count, OutFormat fmt) {
    if (count < 1) {
        throw BadRange("--count must be at least 1");
    }
    const SeriesExpansion series = expand(seed, static_cast<std::size_t>(count));
    const auto oracle = term_range(seed, 0, count - 1);

    if (fmt == OutFormat::Json) {
        Json arr = Json::array();
        for (std::size_t k = 0; k < series.coefficients.size(); ++k) {
            const auto& v = series.coefficients[k];
            arr.push_back({{"k", k},
                           {"re", to_string(v.re)},
                           {"im", to_string(v.im)},
                           {"match", v == oracle[k]}});
        }
        print_json(out, arr);
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < series.coefficients.size(); ++k) {
        const auto& v = series.coefficients[k];
        const bool match = v == oracle[k];
        if (fmt == OutFormat::Csv) {
            rows.push_back({std::to_string(k), to_string(v.re), to_string(v.im),
                            match ? "true" : "false"});
        } else {
            rows.push_back({std::to_string(k), to_string(v), match ? "yes" : "NO"});
        }
    }
    if (fmt == OutFormat::Csv) {
        print_csv(out, {"k", "re", "im", "match"}, rows);
    } else {
        print_table(out, {"k", "value", "match"}, rows);
    }
    return 0;
}

struct CheckRow {
    IdentityReport report;
    std::string detail;  // table-only extra, e.g. "lhs=rhs=-2+i"
};

std::string indices_string(const IdentityReport& rep, const std::vector<std::int64_t>& tuple) {
    std::string s;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (k != 0) {
            s += ';';
        }
        s += rep.index_names[k] + "=" + std::to_string(tuple[k]);
    }
    return s;
}

std::vector<CheckRow> run_checks(const SeedTriple& seed, const std::string& identity,
                                 const std::string& n_text, const std::string& m_text,
                                 const std::string& q_text, bool want_detail) {
    const auto pick = [](const std::string& text, Range def) {
        return text.empty() ? def : parse_range(text);
    };
    std::vector<CheckRow> rows;
    const auto value_detail = [&](const GaussianRational& v) {
        return want_detail ? "lhs=rhs=" + to_string(v) : std::string();
    };

    if (identity == "cassini") {
        const Range nr = pick(n_text, {1, 30});
        for (std::int64_t n = nr.lo; n <= nr.hi; ++n) {
            CheckRow row{check_cassini(seed, n), ""};
            if (row.report.holds() && want_detail) {
                row.detail = value_detail(cassini(seed, n).lhs);
            }
            rows.push_back(std::move(row));
        }
    } else if (identity == "docagne") {
        const Range mr = pick(m_text, {0, 20});
        const Range nr = pick(n_text, {0, 20});
        for (std::int64_t m = mr.lo; m <= mr.hi; ++m) {
            for (std::int64_t n = nr.lo; n <= nr.hi; ++n) {
                CheckRow row{check_docagne(seed, m, n), ""};
                if (row.report.holds() && want_detail) {
                    row.detail = value_detail(docagne(seed, m, n).first);
                }
                rows.push_back(std::move(row));
            }
        }
    } else if (identity == "sum") {
        const Range nr = pick(n_text, {0, 50});
        for (std::int64_t n = nr.lo; n <= nr.hi; ++n) {
            CheckRow row{check_partial_sum(seed, n), ""};
            if (row.report.holds() && want_detail) {
                row.detail = value_detail(partial_sum(seed, n).first);
            }
            rows.push_back(std::move(row));
        }
    } else if (identity == "step" || identity == "jump3" || identity == "window3") {
        const Range nr = pick(n_text, {0, 30});
        for (std::int64_t n = nr.lo; n <= nr.hi; ++n) {
            IdentityReport rep = identity == "step"    ? check_step(seed, n)
                                 : identity == "jump3" ? check_jump3(seed, n)
                                                       : check_window3(seed, n);
            rows.push_back({std::move(rep), ""});
        }
    } else if (identity == "qstep" || identity == "qbinom" || identity == "qgeom") {
        const Range qr = pick(q_text, identity == "qstep" ? Range{2, 5} : Range{1, 5});
        const Range mr = pick(m_text, identity == "qstep" ? Range{0, 10} : Range{0, 15});
        for (std::int64_t q = qr.lo; q <= qr.hi; ++q) {
            for (std::int64_t m = mr.lo; m <= mr.hi; ++m) {
                IdentityReport rep = identity == "qstep"    ? q_step_check(seed, q, m)
                                     : identity == "qbinom" ? binomial_sum_check(seed, q, m)
                                                            : geometric_sum_check(seed, q, m);
                rows.push_back({std::move(rep), ""});
            }
        }
    } else {
        throw UnknownIdentity("unknown identity '" + identity + "'");
    }
    return rows;
}

int cmd_check(std::ostream& out, std::ostream& err, const SeedTriple& seed,
              const std::string& identity, const std::string& n_text, const std::string& m_text,
              const std::string& q_text, OutFormat fmt) {
    const auto rows =
        run_checks(seed, identity, n_text, m_text, q_text, fmt == OutFormat::Table);
    const std::size_t failed = static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(),
                      [](const CheckRow& r) { return !r.report.holds(); }));

    if (fmt == OutFormat::Json) {
        Json arr = Json::array();
        for (const auto& row : rows) {
            arr.push_back(report_to_json(row.report));
        }
        print_json(out, arr);
        err << rows.size() << " checked, " << failed << " failed\n";
    } else if (fmt == OutFormat::Csv) {
        std::vector<std::vector<std::string>> lines;
        for (const auto& row : rows) {
            const auto& rep = row.report;
            std::string lhs;
            std::string rhs;
            if (rep.counterexample) {
                lhs = to_string(rep.counterexample->lhs);
                rhs = to_string(rep.counterexample->rhs);
            }
            lines.push_back({rep.identity, indices_string(rep, rep.indices.front()),
                             rep.holds() ? "holds" : "fails", lhs, rhs});
        }
        print_csv(out, {"identity", "indices", "status", "lhs", "rhs"}, lines);
        err << rows.size() << " checked, " << failed << " failed\n";
    } else {
        std::vector<std::vector<std::string>> lines;
        for (const auto& row : rows) {
            const auto& rep = row.report;
            std::string detail = row.detail;
            if (rep.counterexample) {
                detail = "lhs=" + to_string(rep.counterexample->lhs) +
                         " rhs=" + to_string(rep.counterexample->rhs);
            }
            lines.push_back({rep.identity, indices_string(rep, rep.indices.front()),
                             rep.holds() ? "holds" : "FAILS", detail});
        }
        print_table(out, {"identity", "indices", "status", "detail"}, lines);
        out << rows.size() << " checked, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : 1;
}

int cmd_errata(std::ostream& out, OutFormat fmt) {
    const auto entries = errata_audit();

    if (fmt == OutFormat::Json) {
        Json arr = Json::array();
        for (const auto& entry : entries) {
            arr.push_back(audit_to_json(entry));
        }
        print_json(out, arr);
        return 0;
    }
    if (fmt == OutFormat::Csv) {
        std::vector<std::vector<std::string>> lines;
        for (const auto& entry : entries) {
            const auto push = [&](const char* form, const std::string& formula,
                                  const IdentityReport& rep) {
                std::string indices;
                std::string lhs;
                std::string rhs;
                if (rep.counterexample) {
                    indices = indices_string(rep, rep.counterexample->indices);
                    lhs = to_string(rep.counterexample->lhs);
                    rhs = to_string(rep.counterexample->rhs);
                }
                lines.push_back({entry.name, form, formula, rep.holds() ? "holds" : "fails",
                                 indices, lhs, rhs});
            };
            push("printed", entry.printed_formula, entry.printed);
            push("derived", entry.derived_formula, entry.derived);
        }
        print_csv(out, {"entry", "form", "formula", "status", "indices", "lhs", "rhs"}, lines);
        return 0;
    }
    for (const auto& entry : entries) {
        out << '[' << entry.name << "]\n";
        const auto block = [&](const char* label, const std::string& formula,
                               const IdentityReport& rep) {
            out << "  " << label << ": " << formula << '\n';
            if (rep.counterexample) {
                out << "           fails at " << indices_string(rep, rep.counterexample->indices)
                    << ": lhs=" << to_string(rep.counterexample->lhs)
                    << " rhs=" << to_string(rep.counterexample->rhs) << '\n';
            } else {
                out << "           holds\n";
            }
        };
        block("printed", entry.printed_formula, entry.printed);
        block("derived", entry.derived_formula, entry.derived);
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculator and identity checker for Gaussian third-order Jacobsthal "
                 "sequences",
                 "gtj"};
    app.require_subcommand(1);
    int exit_code = 0;

    SeedOptions terms_seed;
    std::int64_t terms_from = 0;
    std::int64_t terms_to = 0;
    std::string terms_method = "recurrence";
    std::string terms_format = "table";
    auto* terms = app.add_subcommand("terms", "print sequence terms over an index range");
    add_seed_options(terms, terms_seed);
    terms->add_option("--from", terms_from, "first index (may be negative)")->required();
    terms->add_option("--to", terms_to, "last index, inclusive")->required();
    terms->add_option("--method", terms_method, "evaluator: recurrence, binet, fast or all")
        ->check(CLI::IsMember({"recurrence", "binet", "fast", "all"}))
        ->capture_default_str();
    add_format_option(terms, terms_format);
    terms->callback([&] {
        exit_code = cmd_terms(out, resolve_seed(terms_seed), terms_from, terms_to, terms_method,
                              parse_format(terms_format));
    });

    SeedOptions qterms_seed;
    std::int64_t qterms_q = 1;
    std::int64_t qterms_from = 0;
    std::int64_t qterms_to = 0;
    std::string qterms_format = "table";
    auto* qterms = app.add_subcommand("q-terms", "print q-family terms over an index range");
    add_seed_options(qterms, qterms_seed);
    qterms->add_option("--q", qterms_q, "block length q >= 1")->required();
    qterms->add_option("--from", qterms_from, "first index (non-negative)")->required();
    qterms->add_option("--to", qterms_to, "last index, inclusive")->required();
    add_format_option(qterms, qterms_format);
    qterms->callback([&] {
        exit_code = cmd_qterms(out, resolve_seed(qterms_seed), qterms_q, qterms_from, qterms_to,
                               parse_format(qterms_format));
    });

    SeedOptions series_seed;
    std::int64_t series_count = 0;
    std::string series_format = "table";
    auto* series =
        app.add_subcommand("series", "expand the generating function into its coefficients");
    add_seed_options(series, series_seed);
    series->add_option("--count", series_count, "number of coefficients (>= 1)")->required();
    add_format_option(series, series_format);
    series->callback([&] {
        exit_code =
            cmd_series(out, resolve_seed(series_seed), series_count, parse_format(series_format));
    });

    SeedOptions check_seed;
    std::string check_identity;
    std::string check_n;
    std::string check_m;
    std::string check_q;
    std::string check_format = "table";
    auto* check = app.add_subcommand("check", "verify an identity exactly over index ranges");
    add_seed_options(check, check_seed);
    check
        ->add_option("--identity", check_identity,
                     "one of: cassini, docagne, sum, step, jump3, window3, qstep, qbinom, qgeom")
        ->required();
    check->add_option("--n", check_n, "index or range A..B (default depends on identity)");
    check->add_option("--m", check_m, "second index or range A..B");
    check->add_option("--q", check_q, "q value or range A..B (q-family identities)");
    add_format_option(check, check_format);
    check->callback([&] {
        exit_code = cmd_check(out, err, resolve_seed(check_seed), check_identity, check_n, check_m,
                              check_q, parse_format(check_format));
    });

    std::string errata_format = "table";
    auto* errata = app.add_subcommand(
        "errata", "audit the printed specialized constants against recurrence ground truth");
    add_format_option(errata, errata_format);
    errata->callback([&] { exit_code = cmd_errata(out, parse_format(errata_format)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const BadRange& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnknownIdentity& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const AllZeroSeed& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidQ& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DivisionByZero& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

}  // namespace gtj
