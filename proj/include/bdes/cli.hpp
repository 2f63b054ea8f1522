#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end. run() parses argv, dispatches to the
 * subcommand and writes to the given streams, returning the exit status.
 */

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bdes/bijections.hpp"
#include "bdes/config.hpp"
#include "bdes/conjectures.hpp"
#include "bdes/genfun.hpp"
#include "bdes/symfunc.hpp"
#include "bdes/verify.hpp"

namespace bdes::cli {

using nlohmann::json;

enum class Format { text, json, tsv, bfile };

inline Format parse_format(std::string_view s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "tsv") return Format::tsv;
    if (s == "bfile") return Format::bfile;
    throw InvalidInput("unknown format '" + std::string(s) + "'");
}

namespace detail {

inline json big(const mpz_class& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

inline std::string join(const std::vector<mpz_class>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].get_str();
    return s;
}

template <class Row>
std::vector<mpz_class> as_mpz(const Row& row) {
    std::vector<mpz_class> out;
    for (const auto& x : row) out.emplace_back(x);
    return out;
}

inline std::vector<mpz_class> as_mpz(const std::vector<std::uint64_t>& row) {
    std::vector<mpz_class> out;
    for (auto x : row) out.emplace_back(static_cast<unsigned long>(x));
    return out;
}

/// "index value" lines over the rows flattened in order, each row cut after its
/// last nonzero entry (an all-zero row keeps its first entry).
inline void write_bfile(std::ostream& out, const std::vector<std::vector<mpz_class>>& rows, long offset) {
    long index = offset;
    for (const auto& row : rows) {
        std::size_t len = row.size();
        while (len > 1 && row[len - 1] == 0) --len;
        for (std::size_t k = 0; k < len; ++k) out << index++ << ' ' << row[k].get_str() << '\n';
    }
}

inline json report_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json rec{{"name", c.name}, {"n", c.n}, {"population", c.population}, {"pass", c.pass}};
        if (!c.witness.empty()) rec["witness"] = c.witness;
        checks.push_back(std::move(rec));
    }
    return json{{"checks", std::move(checks)}};
}

}  // namespace detail

struct Options {
    std::string config_path;
    std::string format = "text";
    std::string precision;
    int max_n_unrestricted = -1;
    int max_n_restricted = -1;
    int qsym_max_n = -1;
    int parallelism = -1;

    // subcommand arguments
    std::string patterns, stat = "bdes", scope = "all", id, route = "closed", input, basis = "schur", which;
    int n = -1, max_n = -1, order = -1, r = -1, k = -1, j = -1;
    long offset = 0;
    bool inverse = false;
};

class Runner {
public:
    Runner(Options opt, std::ostream& out, std::ostream& err) : o_(std::move(opt)), out_(out), err_(err) {
        if (!o_.config_path.empty()) cfg_ = Config::load(o_.config_path);
        if (o_.max_n_unrestricted >= 0) cfg_.guards.max_n_unrestricted = o_.max_n_unrestricted;
        if (o_.max_n_restricted >= 0) cfg_.guards.max_n_restricted = o_.max_n_restricted;
        if (o_.qsym_max_n >= 0) cfg_.qsym_max_n = o_.qsym_max_n;
        if (o_.parallelism >= 0) cfg_.parallelism = o_.parallelism;
        if (!o_.precision.empty()) cfg_.precision = o_.precision;
        cfg_.validate();
        fmt_ = parse_format(o_.format);
    }

    int table() {
        const auto ps = PatternSet::parse(o_.patterns);
        const auto stat = StatName::parse(o_.stat);
        const auto t = distribution_table(o_.n, ps, stat, cfg_.guards);
        const auto counts = detail::as_mpz(t.counts);
        switch (fmt_) {
            case Format::text: out_ << detail::join(counts) << '\n'; break;
            case Format::json: {
                json c = json::array();
                for (const auto& x : counts) c.push_back(detail::big(x));
                out_ << json{{"patterns", ps.to_string()}, {"n", o_.n}, {"stat", stat.to_string()}, {"counts", c}}.dump()
                     << '\n';
                break;
            }
            case Format::tsv:
                out_ << "k\tcount\n";
                for (std::size_t k = 0; k < counts.size(); ++k) out_ << k << '\t' << counts[k].get_str() << '\n';
                break;
            case Format::bfile: {
                std::vector<std::vector<mpz_class>> rows;
                for (int m = 0; m <= o_.n; ++m) rows.push_back(detail::as_mpz(distribution_table(m, ps, stat, cfg_.guards).counts));
                detail::write_bfile(out_, rows, o_.offset);
                break;
            }
        }
        return 0;
    }

    int verify() {
        const auto scope = parse_scope(o_.scope);
        const int max_n = o_.max_n < 0 ? 8 : o_.max_n;
        const auto report = verify_scope(scope, max_n, cfg_.guards);
        std::size_t passed = 0;
        for (const auto& c : report.checks) passed += c.pass;
        switch (fmt_) {
            case Format::text:
                for (const auto& c : report.checks) {
                    out_ << (c.pass ? "PASS " : "FAIL ") << c.name << " n=" << c.n << " population=" << c.population;
                    if (!c.witness.empty()) out_ << " witness: " << c.witness;
                    out_ << '\n';
                }
                out_ << passed << '/' << report.checks.size() << " checks passed\n";
                break;
            case Format::json: out_ << detail::report_json(report).dump() << '\n'; break;
            case Format::tsv:
                out_ << "name\tn\tpopulation\tpass\twitness\n";
                for (const auto& c : report.checks)
                    out_ << c.name << '\t' << c.n << '\t' << c.population << '\t' << (c.pass ? "true" : "false") << '\t'
                         << c.witness << '\n';
                break;
            case Format::bfile: throw InvalidInput("verify: bfile format is not available");
        }
        return report.all_pass() ? 0 : 1;
    }

    int series() {
        const GfId id = GfId::parse(o_.id, o_.r < 0 ? 2 : o_.r);
        const int N = o_.order < 0 ? cfg_.order : o_.order;
        Series s;
        if (o_.route == "closed") {
            s = expand(id, N);
        } else if (o_.route == "functional") {
            s = expand_functional(id, N);
        } else if (o_.route == "both") {
            s = expand(id, N);
            const Series f = expand_functional(id, N);
            for (int n = 0; n <= N; ++n)
                if (!(s[n] == f[n])) {
                    err_ << "error: routes disagree at n=" << n << ": " << s[n].to_string() << " vs " << f[n].to_string()
                         << '\n';
                    return 1;
                }
        } else {
            throw InvalidInput("unknown route '" + o_.route + "'");
        }
        switch (fmt_) {
            case Format::text: out_ << s.to_string(); break;
            case Format::json: {
                json rows = json::array();
                for (int n = 0; n <= s.order(); ++n) rows.push_back({{"n", n}, {"poly", s[n].to_string()}});
                out_ << json{{"id", id.to_string()}, {"order", N}, {"rows", rows}}.dump() << '\n';
                break;
            }
            case Format::tsv:
                out_ << "n\tpoly\n";
                for (int n = 0; n <= s.order(); ++n) out_ << n << '\t' << s[n].to_string() << '\n';
                break;
            case Format::bfile: {
                std::vector<std::vector<mpz_class>> rows;
                for (int n = 0; n <= s.order(); ++n) rows.push_back(t_coefficients(s, n));
                detail::write_bfile(out_, rows, o_.offset);
                break;
            }
        }
        return 0;
    }

    int bijection() {
        const auto id = parse_bijection(o_.id);
        const auto x = parse_object(id, o_.input, o_.inverse);
        const auto y = o_.inverse ? invert(id, x) : bdes::apply(id, x);
        switch (fmt_) {
            case Format::text: out_ << to_string(y) << '\n'; break;
            case Format::json:
                out_ << json{{"id", to_string(id)}, {"inverse", o_.inverse}, {"input", to_string(x)}, {"output", to_string(y)}}
                            .dump()
                     << '\n';
                break;
            case Format::tsv: out_ << "input\toutput\n" << to_string(x) << '\t' << to_string(y) << '\n'; break;
            case Format::bfile: throw InvalidInput("bijection: bfile format is not available");
        }
        return 0;
    }

    int qsym() {
        const auto ps = PatternSet::parse(o_.patterns);
        const int r = o_.r < 0 ? 1 : o_.r;
        if (o_.n > cfg_.qsym_max_n)
            throw ResourceGuard("n=" + std::to_string(o_.n) + " exceeds guard qsym_max_n=" + std::to_string(cfg_.qsym_max_n));
        if (o_.basis != "schur" && o_.basis != "monomial" && o_.basis != "fundamental")
            throw InvalidInput("unknown basis '" + o_.basis + "'");
        std::string text;
        bool symmetric = true;
        if (o_.basis == "fundamental") {
            text = to_string(qsym_sum_fundamental(o_.n, ps, r, cfg_.guards));
        } else {
            const auto q = qsym_sum(o_.n, ps, r, cfg_.guards);
            const auto sym = is_symmetric(q);
            symmetric = sym.symmetric;
            if (o_.basis == "schur") {
                if (!symmetric) {
                    err_ << "error: not symmetric, M" << sym.witness->first.to_string() << " and M"
                         << sym.witness->second.to_string() << " have different coefficients\n";
                    return 1;
                }
                text = schur_expand(q).to_string();
            } else {
                text = to_string(q);
            }
        }
        switch (fmt_) {
            case Format::text:
                if (o_.basis == "monomial") out_ << "symmetry=" << (symmetric ? "true" : "false") << '\n';
                out_ << text << '\n';
                break;
            case Format::json:
                out_ << json{{"patterns", ps.to_string()}, {"n", o_.n}, {"r", r}, {"basis", o_.basis},
                             {"symmetric", symmetric}, {"expansion", text}}
                            .dump()
                     << '\n';
                break;
            case Format::tsv: out_ << "basis\tsymmetric\texpansion\n" << o_.basis << '\t' << symmetric << '\t' << text << '\n'; break;
            case Format::bfile: throw InvalidInput("qsym: bfile format is not available");
        }
        return 0;
    }

    int conjecture() {
        const auto which = parse_property(o_.which);
        const int max_n = o_.max_n < 0 ? 10 : o_.max_n;
        const auto report = conjecture_scan(which, max_n, cfg_.guards);
        auto name = [&](const ScanEntry& e) { return to_string(e.property) + " " + e.pattern_set; };
        switch (fmt_) {
            case Format::text:
                for (const auto& e : report.entries) {
                    out_ << (e.pass ? "PASS " : "FAIL ") << name(e) << " n=" << e.n << " population=" << e.population;
                    if (!e.witness.empty()) out_ << " witness: " << e.witness;
                    out_ << '\n';
                }
                for (const auto& d : report.deviations) out_ << "DEVIATION " << d << '\n';
                out_ << (report.prediction_holds() ? "predicted outcomes observed" : "predicted outcomes NOT observed") << '\n';
                break;
            case Format::json: {
                json checks = json::array();
                for (const auto& e : report.entries) {
                    json rec{{"name", name(e)},       {"property", to_string(e.property)}, {"pattern_set", e.pattern_set},
                             {"n", e.n},              {"population", e.population},       {"pass", e.pass}};
                    if (!e.witness.empty()) rec["witness"] = e.witness;
                    checks.push_back(std::move(rec));
                }
                out_ << json{{"property", to_string(which)}, {"max_n", max_n}, {"prediction_holds", report.prediction_holds()},
                             {"deviations", report.deviations}, {"checks", checks}}
                            .dump()
                     << '\n';
                break;
            }
            case Format::tsv:
                out_ << "property\tpattern_set\tn\tpopulation\tpass\twitness\n";
                for (const auto& e : report.entries)
                    out_ << to_string(e.property) << '\t' << e.pattern_set << '\t' << e.n << '\t' << e.population << '\t'
                         << (e.pass ? "true" : "false") << '\t' << e.witness << '\n';
                break;
            case Format::bfile: throw InvalidInput("conjecture: bfile format is not available");
        }
        return report.prediction_holds() ? 0 : 1;
    }

    int formula() {
        const auto f = parse_formula(o_.id);
        if (o_.n < 0) throw InvalidInput("formula: --n is required");
        if (f == FormulaId::carlitz_lhs_coeff) {
            if (o_.k < 0) throw InvalidInput("carlitz_lhs_coeff needs --k");
            const auto v = carlitz_lhs_coeff(o_.n, o_.r < 0 ? 1 : o_.r, o_.k, cfg_.guards);
            return scalar(v.get_str());
        }
        if (f == FormulaId::b231_joint) {
            if (o_.k >= 0 && o_.j >= 0) return scalar(b231_joint(o_.n, o_.j, o_.k).get_str());
            std::vector<std::vector<mpz_class>> m;
            for (int k = 0; k <= o_.n; ++k) {
                m.emplace_back();
                for (int j = 0; j <= o_.n; ++j) m.back().push_back(b231_joint(o_.n, j, k));
            }
            return rows_out(m, "matrix");
        }
        std::vector<mpz_class> row;
        if (f == FormulaId::eulerian_r) {
            for (const auto& c : eulerian_r(o_.n, o_.r < 0 ? 1 : o_.r, cfg_.guards).coefficients(Var::t)) row.push_back(c.get_num());
        } else {
            row = formula_row(f, o_.n);
        }
        if (o_.k >= 0) return scalar(o_.k < static_cast<int>(row.size()) ? row[o_.k].get_str() : "0");
        if (fmt_ == Format::bfile) {
            std::vector<std::vector<mpz_class>> rows;
            for (int m = 0; m <= o_.n; ++m) {
                if (f == FormulaId::eulerian_r) {
                    rows.emplace_back();
                    for (const auto& c : eulerian_r(m, o_.r < 0 ? 1 : o_.r, cfg_.guards).coefficients(Var::t))
                        rows.back().push_back(c.get_num());
                } else {
                    rows.push_back(formula_row(f, m));
                }
            }
            detail::write_bfile(out_, rows, o_.offset);
            return 0;
        }
        return rows_out({row}, "values");
    }

private:
    int scalar(const std::string& v) {
        switch (fmt_) {
            case Format::json: out_ << json{{"id", o_.id}, {"n", o_.n}, {"value", v}}.dump() << '\n'; break;
            case Format::bfile: throw InvalidInput("formula: bfile needs a whole row");
            default: out_ << v << '\n'; break;
        }
        return 0;
    }

    int rows_out(const std::vector<std::vector<mpz_class>>& rows, const char* key) {
        switch (fmt_) {
            case Format::text:
                for (const auto& r : rows) out_ << detail::join(r) << '\n';
                break;
            case Format::tsv:
                for (const auto& r : rows) out_ << detail::join(r, "\t") << '\n';
                break;
            case Format::json: {
                json arr = json::array();
                for (const auto& r : rows) {
                    json a = json::array();
                    for (const auto& x : r) a.push_back(detail::big(x));
                    arr.push_back(std::move(a));
                }
                out_ << json{{"id", o_.id}, {"n", o_.n}, {key, rows.size() == 1 ? arr[0] : arr}}.dump() << '\n';
                break;
            }
            case Format::bfile: throw InvalidInput("formula: bfile is not available for this id");
        }
        return 0;
    }

    Options o_;
    std::ostream& out_;
    std::ostream& err_;
    Config cfg_;
    Format fmt_ = Format::text;
};

/// Parses argv and runs one subcommand. Exit codes: 0 success, 1 check
/// failure, 2 invalid input, 3 resource guard.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Options o;
    CLI::App app{"Big-descent statistics over pattern-avoiding permutations", "bdes"};
    app.require_subcommand(1);
    app.add_option("--config", o.config_path, "JSON config file");
    app.add_option("--format", o.format, "text, json, tsv or bfile")->check(CLI::IsMember({"text", "json", "tsv", "bfile"}));
    app.add_option("--precision", o.precision, "must be 'exact'");
    app.add_option("--max-n-unrestricted", o.max_n_unrestricted, "guard for S_n");
    app.add_option("--max-n-restricted", o.max_n_restricted, "guard for S_n(Pi)");
    app.add_option("--qsym-max-n", o.qsym_max_n, "guard for qsym");
    app.add_option("--parallelism", o.parallelism, "worker threads");

    auto* table = app.add_subcommand("table", "distribution of a statistic over S_n(Pi)");
    table->add_option("--patterns", o.patterns, "comma separated, \"\" for none")->required();
    table->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
    table->add_option("--stat", o.stat, "des, bdes, des_r(3), pk, ...");
    table->add_option("--offset", o.offset, "first bfile index");

    auto* verify = app.add_subcommand("verify", "run exhaustive cross-checks");
    verify->add_option("--scope", o.scope)->check(
        CLI::IsMember({"class-equalities", "formulas", "bijections", "genfun-crossroutes", "all"}));
    verify->add_option("--max-n", o.max_n)->check(CLI::NonNegativeNumber);

    auto* series = app.add_subcommand("series", "expand a generating function");
    series->add_option("--id", o.id)->required();
    series->add_option("--order", o.order)->check(CLI::NonNegativeNumber);
    series->add_option("--r", o.r, "r for R_run");
    series->add_option("--route", o.route)->check(CLI::IsMember({"closed", "functional", "both"}));
    series->add_option("--offset", o.offset, "first bfile index");

    auto* bij = app.add_subcommand("bijection", "apply a bijection or its inverse");
    bij->add_option("--id", o.id)->required();
    bij->add_option("--input", o.input)->required();
    bij->add_flag("--inverse", o.inverse);

    auto* qsym = app.add_subcommand("qsym", "quasisymmetric generating function of S_n(Pi)");
    qsym->add_option("--patterns", o.patterns)->required();
    qsym->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
    qsym->add_option("--r", o.r)->check(CLI::NonNegativeNumber);
    qsym->add_option("--basis", o.basis)->check(CLI::IsMember({"schur", "monomial", "fundamental"}));

    auto* conj = app.add_subcommand("conjecture", "scan a conjectured property");
    conj->add_option("--which", o.which)->required()->check(
        CLI::IsMember({"real-rooted", "log-concave", "unimodal", "schur-positive"}));
    conj->add_option("--max-n", o.max_n)->check(CLI::NonNegativeNumber);

    auto* formula = app.add_subcommand("formula", "evaluate a closed formula");
    formula->add_option("--id", o.id)->required();
    formula->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
    formula->add_option("--k", o.k)->check(CLI::NonNegativeNumber);
    formula->add_option("--j", o.j)->check(CLI::NonNegativeNumber);
    formula->add_option("--r", o.r)->check(CLI::NonNegativeNumber);
    formula->add_option("--offset", o.offset, "first bfile index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::invalid_input);
    }

    try {
        Runner runner(o, out, err);
        if (*table) return runner.table();
        if (*verify) return runner.verify();
        if (*series) return runner.series();
        if (*bij) return runner.bijection();
        if (*qsym) return runner.qsym();
        if (*conj) return runner.conjecture();
        if (*formula) return runner.formula();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(e.exit_code());
    }
    return static_cast<int>(ExitCode::invalid_input);
}

}  // namespace bdes::cli
