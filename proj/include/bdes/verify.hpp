#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive cross-checks grouped by scope, collected into a flat report.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bdes/bijections.hpp"
#include "bdes/conjectures.hpp"
#include "bdes/genfun.hpp"
#include "bdes/permutation.hpp"

namespace bdes {

struct CheckRecord {
    std::string name;
    int n = 0;
    std::uint64_t population = 0;
    bool pass = true;
    std::string witness;
};

struct Report {
    std::vector<CheckRecord> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
    }
    void add(std::string name, int n, std::uint64_t population, bool pass, std::string witness = {}) {
        checks.push_back({std::move(name), n, population, pass, std::move(witness)});
    }
    void add(const std::string& prefix, const IdentityCheck& c) {
        add(prefix + ": " + c.name, c.n, c.population, c.pass(), c.witness);
    }
    void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

enum class Scope { class_equalities, formulas, bijections, genfun_crossroutes, all };

inline Scope parse_scope(std::string_view s) {
    if (s == "class-equalities") return Scope::class_equalities;
    if (s == "formulas") return Scope::formulas;
    if (s == "bijections") return Scope::bijections;
    if (s == "genfun-crossroutes") return Scope::genfun_crossroutes;
    if (s == "all") return Scope::all;
    throw InvalidInput("unknown scope '" + std::string(s) + "'");
}

/// bdes-Wilf classes among the single patterns and the pairs of patterns of length 3.
inline std::vector<std::vector<PatternSet>> expected_bdes_classes() {
    auto cls = [](std::initializer_list<const char*> sets) {
        std::vector<PatternSet> out;
        for (auto s : sets) out.push_back(PatternSet::parse(s));
        return out;
    };
    return {
        cls({"231", "312"}),
        cls({"132", "213"}),
        cls({"123"}),
        cls({"321"}),
        cls({"213,231", "132,312", "213,312", "132,231"}),
        cls({"231,321", "312,321"}),
        cls({"123,231", "123,312"}),
        cls({"132,321", "213,321"}),
        cls({"123,132", "123,213", "132,213"}),
        cls({"123,321"}),
        cls({"231,312"}),
    };
}

namespace detail {

inline std::string row_string(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

template <class A, class B>
bool same_row(const std::vector<A>& a, const std::vector<B>& b) {
    const std::size_t m = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < m; ++k) {
        mpz_class x = k < a.size() ? mpz_class(a[k]) : mpz_class(0);
        mpz_class y = k < b.size() ? mpz_class(b[k]) : mpz_class(0);
        if (x != y) return false;
    }
    return true;
}

inline std::string mpz_row(const std::vector<mpz_class>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
    return s;
}

}  // namespace detail

/// Equal bdes distributions inside every class for all n <= max_n, and a
/// distinguishing n <= max_n between any two classes of the same size.
inline Report verify_class_equalities(int max_n, const Guards& guards = {}) {
    Report report;
    const auto classes = expected_bdes_classes();
    const StatName bdes_stat = StatName::Kind::bdes;
    std::map<std::string, std::vector<std::vector<std::uint64_t>>> rows;
    for (const auto& cls : classes)
        for (const auto& ps : cls)
            for (int n = 0; n <= max_n; ++n) rows[ps.to_string()].push_back(distribution_table(n, ps, bdes_stat, guards).counts);

    auto label = [](const std::vector<PatternSet>& cls) { return "[" + cls.front().to_string() + "]"; };
    for (const auto& cls : classes) {
        if (cls.size() < 2) continue;
        const auto& ref = rows[cls.front().to_string()];
        for (int n = 0; n <= max_n; ++n) {
            std::string witness;
            std::uint64_t population = 0;
            for (const auto& ps : cls) {
                const auto& row = rows[ps.to_string()][n];
                population += std::accumulate(row.begin(), row.end(), std::uint64_t{0});
                if (witness.empty() && row != ref[n])
                    witness = "{" + ps.to_string() + "}: " + detail::row_string(row) + " vs " + detail::row_string(ref[n]);
            }
            report.add("class " + label(cls) + " equidistributed", n, population, witness.empty(), witness);
        }
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            const auto& a = classes[i].front();
            const auto& b = classes[j].front();
            if (a.patterns().size() != b.patterns().size()) continue;
            int found = -1;
            for (int n = 0; n <= max_n && found < 0; ++n)
                if (rows[a.to_string()][n] != rows[b.to_string()][n]) found = n;
            std::string witness = found < 0 ? "no distinguishing n <= " + std::to_string(max_n)
                                            : detail::row_string(rows[a.to_string()][found]) + " vs " +
                                                  detail::row_string(rows[b.to_string()][found]);
            const int at = found < 0 ? max_n : found;
            const auto& ra = rows[a.to_string()][at];
            const auto& rb = rows[b.to_string()][at];
            const auto population = std::accumulate(ra.begin(), ra.end(), std::uint64_t{0}) +
                                    std::accumulate(rb.begin(), rb.end(), std::uint64_t{0});
            report.add("classes " + label(classes[i]) + " and " + label(classes[j]) + " differ", at, population,
                       found >= 0, witness);
        }
    return report;
}

/// Closed formulas and generating functions against brute force.
inline Report verify_formulas(int max_n, const Guards& guards = {}) {
    Report report;
    using K = StatName::Kind;
    for (auto f : {FormulaId::b231, FormulaId::b123, FormulaId::b213_231, FormulaId::b213_312, FormulaId::b123_231,
                   FormulaId::b132_321, FormulaId::b231_312, FormulaId::narayana}) {
        const PatternSet ps = f == FormulaId::narayana ? PatternSet::parse("123") : *formula_pattern_set(f);
        const StatName stat = f == FormulaId::narayana ? K::rbdes : K::bdes;
        for (int n = 0; n <= max_n; ++n) {
            auto table = distribution_table(n, ps, stat, guards);
            auto row = formula_row(f, n);
            const bool ok = detail::same_row(row, table.counts);
            report.add(to_string(f) + " = " + stat.to_string() + " over S_n(" + ps.to_string() + ")", n, table.total(), ok,
                       ok ? "" : detail::mpz_row(row) + " vs " + detail::row_string(table.counts));
        }
    }

    // (bdes,des) and (pk,des) over S_n(231) against the joint formula
    const auto p231 = PatternSet::parse("231");
    for (int n = 0; n <= max_n; ++n) {
        auto bd = joint_table(n, p231, K::bdes, K::des, guards);
        auto pd = joint_table(n, p231, K::pk, K::des, guards);
        std::string witness;
        std::uint64_t population = 0;
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j) {
                population += bd[k][j];
                const mpz_class f = b231_joint(n, j, k);
                if (witness.empty() && (mpz_class(static_cast<unsigned long>(bd[k][j])) != f ||
                                        mpz_class(static_cast<unsigned long>(pd[k][j])) != f))
                    witness = "bdes/pk=" + std::to_string(k) + " des=" + std::to_string(j);
            }
        report.add("joint (bdes,des) = (pk,des) = b231_joint over S_n(231)", n, population, witness.empty(), witness);
    }

    // b123 and b231 beyond max_n, and the Narayana row sums
    const int far = std::max(max_n, 12);
    {
        auto gf = expand(GfKind::B123, far);
        for (int n = max_n + 1; n <= far; ++n) {
            auto row = formula_row(FormulaId::b123, n);
            const bool ok = detail::same_row(row, t_coefficients(gf, n));
            report.add("b123 = [x^n] B(t,x;123)", n, 0, ok, ok ? "" : detail::mpz_row(row));
        }
        for (int n = max_n + 1; n <= far; ++n) {
            auto table = distribution_table(n, p231, K::bdes, guards);
            auto row = formula_row(FormulaId::b231, n);
            const bool ok = detail::same_row(row, table.counts);
            report.add("b231 = bdes over S_n(231)", n, table.total(), ok, ok ? "" : detail::mpz_row(row));
        }
        for (int n = 0; n <= far; ++n) {
            mpz_class sum = 0;
            for (const auto& x : formula_row(FormulaId::narayana, n)) sum += x;
            report.add("sum_k N(n,k) = Catalan(n)", n, 0, sum == catalan(n), sum == catalan(n) ? "" : sum.get_str());
        }
    }

    // every generating function against its defining sum
    std::vector<GfId> ids;
    for (int i = 0; i <= static_cast<int>(GfKind::W1_words); ++i) {
        const auto k = static_cast<GfKind>(i);
        if (k == GfKind::R_run) {
            ids.emplace_back(k, 2);
            ids.emplace_back(k, 3);
        } else {
            ids.emplace_back(k);
        }
    }
    for (const auto& id : ids) {
        const int N = id.kind == GfKind::F ? std::min(max_n, 8) : max_n;
        auto closed = expand(id, N);
        auto brute = enumerate_series(id, N, guards);
        for (int n = 0; n <= N; ++n) {
            const bool ok = closed[n] == brute[n];
            report.add(id.to_string() + " closed form = defining sum", n, 0, ok,
                       ok ? "" : closed[n].to_string() + " vs " + brute[n].to_string());
        }
    }

    // r-Eulerian recurrence and the truncated Carlitz identity
    for (int r = 0; r <= 2; ++r) {
        for (int n = 0; n <= std::min(max_n, 8); ++n) {
            auto table = distribution_table(n, PatternSet{}, StatName::des_r(r), guards);
            std::vector<mpz_class> rec;
            for (const auto& c : eulerian_r(n, r, guards).coefficients(Var::t)) rec.push_back(c.get_num());
            const bool ok = detail::same_row(rec, table.counts);
            report.add("r-Eulerian recurrence r=" + std::to_string(r), n, table.total(), ok,
                       ok ? "" : detail::mpz_row(rec) + " vs " + detail::row_string(table.counts));
        }
        for (int n = 1; n <= std::min(max_n, 7); ++n)
            report.add("Carlitz identity r=" + std::to_string(r) + ", 6 coefficients", n, 0, carlitz_verify(n, r, 6, guards));
    }

    // descent and peak polynomials over S_n(231)
    for (int n = 1; n <= max_n; ++n) {
        const auto population = distribution_table(n, p231, K::des, guards).total();
        report.add("2^(n-1) A_n(t;231) = sum_k p_k (4t)^k (1+t)^(n-1-2k)", n, population, branden_check(n, guards));
        report.add("A_n(t;231) real-rooted iff P_n(t;231) real-rooted", n, population, stembridge_consistency(n, guards));
    }
    return report;
}

inline Report verify_bijections(int max_n, const Guards& guards = {}) {
    Report report;
    for (auto id : kAllBijections)
        for (int n = 0; n <= max_n; ++n) {
            for (const auto& c : verify_round_trip(id, n, guards).checks) report.add(to_string(id), c);
            for (const auto& c : verify_transfer(id, n, guards).checks) report.add(to_string(id), c);
        }
    for (int n = 0; n <= max_n; ++n)
        for (const auto& c : verify_composites(n)) report.add("composite", c);
    return report;
}

/// expand vs expand_functional through `order`, and B(t,x;123), Bgrave(t,x;123)
/// against the specialisations of F.
inline Report verify_genfun_crossroutes(int order) {
    Report report;
    for (int i = 0; i <= static_cast<int>(GfKind::W1_words); ++i) {
        const GfId id = static_cast<GfKind>(i) == GfKind::R_run ? GfId(GfKind::R_run, 2) : GfId(static_cast<GfKind>(i));
        if (!id.has_functional_route()) continue;
        auto a = expand(id, order);
        auto b = expand_functional(id, order);
        for (int n = 0; n <= order; ++n)
            report.add(id.to_string() + " closed = functional", n, 0, a[n] == b[n],
                       a[n] == b[n] ? "" : a[n].to_string() + " vs " + b[n].to_string());
    }
    const MultiPoly t = MultiPoly::var(Var::t), one(1L);
    const auto b123 = expand(GfKind::B123, order), f1 = expand_f_specialized(order, t, t, one);
    const auto bg = expand(GfKind::Bgrave123, order), ft = expand_f_specialized(order, t, t, t);
    for (int n = 0; n <= order; ++n) {
        report.add("B123 closed = F(t,t,1,x)", n, 0, b123[n] == f1[n], b123[n] == f1[n] ? "" : f1[n].to_string());
        report.add("Bgrave123 closed = F(t,t,t,x)", n, 0, bg[n] == ft[n], bg[n] == ft[n] ? "" : ft[n].to_string());
    }
    return report;
}

inline Report verify_scope(Scope scope, int max_n, const Guards& guards = {}) {
    Report report;
    if (scope == Scope::class_equalities || scope == Scope::all) report.append(verify_class_equalities(max_n, guards));
    if (scope == Scope::formulas || scope == Scope::all) report.append(verify_formulas(max_n, guards));
    if (scope == Scope::bijections || scope == Scope::all) report.append(verify_bijections(max_n, guards));
    if (scope == Scope::genfun_crossroutes || scope == Scope::all) report.append(verify_genfun_crossroutes(max_n));
    return report;
}

}  // namespace bdes
