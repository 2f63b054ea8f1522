#pragma once

/**
 * @file conjectures.hpp
 * @brief Exact real-rootedness (Sturm), log-concavity and unimodality checks,
 * the peak-polynomial identity for 231-avoiders, and scans of these
 * properties across the avoider classes of length-3 patterns.
 */

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "bdes/multipoly.hpp"
#include "bdes/permutation.hpp"
#include "bdes/symfunc.hpp"

namespace bdes {

/// Dense univariate polynomial in t over the rationals.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    template <class Int>
    static UniPoly from_integers(const std::vector<Int>& v) {
        std::vector<Rational> c;
        for (const auto& x : v) c.emplace_back(Rational(x));
        return UniPoly(std::move(c));
    }

    static UniPoly from_multipoly(const MultiPoly& p) { return UniPoly(p.coefficients(Var::t)); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& lead() const { return c_.back(); }
    Rational operator[](int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a) {
        auto c = a.c_;
        for (auto& x : c) x = -x;
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly derivative() const {
        std::vector<Rational> c;
        for (std::size_t k = 1; k < c_.size(); ++k) c.push_back(c_[k] * static_cast<long>(k));
        return UniPoly(std::move(c));
    }

    /// (quotient, remainder)
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw NonInvertible("polynomial division by zero");
        std::vector<Rational> rem = c_;
        const int dd = d.degree();
        std::vector<Rational> quo(std::max(0, degree() - dd + 1));
        for (int k = degree(); k >= dd; --k) {
            const Rational f = rem[k] / d.lead();
            quo[k - dd] = f;
            for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
        }
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        auto c = c_;
        const Rational l = lead();
        for (auto& x : c) x /= l;
        return UniPoly(std::move(c));
    }

    std::string to_string() const {
        std::vector<Rational> c = c_;
        return MultiPoly::univariate(Var::t, c).to_string();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace detail {

inline int sign(const Rational& q) { return sgn(q); }

/// Sign variations of the Sturm chain at -inf (at_plus = false) or +inf.
inline int sturm_variations(const std::vector<UniPoly>& chain, bool at_plus) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sign(p.lead());
        if (!at_plus && p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace detail

/// Distinct real roots, by a Sturm sequence on the square-free part.
inline int real_root_count(const UniPoly& p) {
    if (p.is_zero()) throw InvalidInput("real_root_count: zero polynomial");
    if (p.degree() == 0) return 0;
    const UniPoly sq = p.divmod(gcd(p, p.derivative())).first;
    std::vector<UniPoly> chain{sq, sq.derivative()};
    while (!chain.back().is_zero()) {
        auto r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return detail::sturm_variations(chain, false) - detail::sturm_variations(chain, true);
}

/// Yun's algorithm: p = c * prod a_i^i with the a_i square-free and coprime.
inline std::vector<std::pair<UniPoly, int>> square_free_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw InvalidInput("square_free_decomposition: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() == 0) return out;
    UniPoly a = gcd(p, p.derivative());
    UniPoly b = p.divmod(a).first;
    UniPoly c = p.derivative().divmod(a).first;
    UniPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UniPoly f = gcd(b, d);
        if (f.degree() > 0) out.emplace_back(f, i);
        b = b.divmod(f).first;
        c = d.divmod(f).first;
        d = c - b.derivative();
    }
    return out;
}

/// Real roots counted with multiplicity.
inline int real_root_count_with_multiplicity(const UniPoly& p) {
    int total = 0;
    for (const auto& [f, m] : square_free_decomposition(p)) total += m * real_root_count(f);
    return total;
}

/// Constants and linear polynomials count as real-rooted.
inline bool is_real_rooted(const UniPoly& p) {
    if (p.is_zero()) throw InvalidInput("is_real_rooted: zero polynomial");
    if (p.degree() <= 1) return true;
    return real_root_count_with_multiplicity(p) == p.degree();
}

/// c_k^2 >= c_{k-1} c_{k+1} at every interior index, read literally.
template <class Int>
bool is_log_concave(const std::vector<Int>& c, int* violating_index = nullptr) {
    for (std::size_t k = 1; k + 1 < c.size(); ++k)
        if (c[k] * c[k] < c[k - 1] * c[k + 1]) {
            if (violating_index) *violating_index = static_cast<int>(k);
            return false;
        }
    return true;
}

template <class Int>
bool is_unimodal(const std::vector<Int>& c) {
    std::size_t k = 0;
    while (k + 1 < c.size() && c[k] <= c[k + 1]) ++k;
    while (k + 1 < c.size() && c[k] >= c[k + 1]) ++k;
    return k + 1 >= c.size();
}

// ---------------------------------------------------------------------------
// Descent and peak polynomials over S_n(231)

inline UniPoly distribution_poly(int n, const PatternSet& patterns, StatName stat, const Guards& guards = {}) {
    return UniPoly::from_integers(distribution_table(n, patterns, stat, guards).counts);
}

/// 2^{n-1} A_n(t;231) = sum_k p_k (4t)^k (1+t)^{n-1-2k}, with A the descent and
/// P the peak polynomial, i.e. A_n(t) = ((1+t)/2)^{n-1} P_n(4t/(1+t)^2).
inline bool branden_check(int n, const Guards& guards = {}) {
    if (n < 1) throw InvalidInput("branden_check needs n >= 1");
    const auto pats = PatternSet::parse("231");
    const UniPoly A = distribution_poly(n, pats, StatName::Kind::des, guards);
    const UniPoly P = distribution_poly(n, pats, StatName::Kind::pk, guards);
    const UniPoly one_plus_t(std::vector<Rational>{1, 1});
    const UniPoly four_t(std::vector<Rational>{0, 4});
    auto power = [](UniPoly base, int e) {
        UniPoly r(std::vector<Rational>{1});
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
    };
    UniPoly rhs;
    for (int k = 0; k <= P.degree(); ++k) {
        if (P[k] == 0) continue;
        if (n - 1 - 2 * k < 0) return false;
        rhs = rhs + UniPoly(std::vector<Rational>{P[k]}) * power(four_t, k) * power(one_plus_t, n - 1 - 2 * k);
    }
    mpz_class scale = 1;
    scale <<= static_cast<mp_bitcnt_t>(n - 1);
    return UniPoly(std::vector<Rational>{Rational(scale)}) * A == rhs;
}

/// A_n(t;231) is real-rooted exactly when P_n(t;231) is.
inline bool stembridge_consistency(int n, const Guards& guards = {}) {
    const auto pats = PatternSet::parse("231");
    const UniPoly A = distribution_poly(n, pats, StatName::Kind::des, guards);
    const UniPoly P = distribution_poly(n, pats, StatName::Kind::pk, guards);
    return is_real_rooted(A) == is_real_rooted(P);
}

// ---------------------------------------------------------------------------
// Scans

enum class Property { real_rooted, log_concave, unimodal, schur_positive };

inline std::string to_string(Property p) {
    switch (p) {
        case Property::real_rooted: return "real-rooted";
        case Property::log_concave: return "log-concave";
        case Property::unimodal: return "unimodal";
        case Property::schur_positive: return "schur-positive";
    }
    return "?";
}

inline Property parse_property(std::string_view s) {
    for (auto p : {Property::real_rooted, Property::log_concave, Property::unimodal, Property::schur_positive})
        if (to_string(p) == s) return p;
    throw InvalidInput("unknown property '" + std::string(s) + "'");
}

/// The 6 single patterns of length 3 followed by the 15 pairs.
inline std::vector<PatternSet> length3_classes() {
    static const char* perms[] = {"123", "132", "213", "231", "312", "321"};
    std::vector<PatternSet> out;
    for (auto p : perms) out.push_back(PatternSet::parse(p));
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) out.push_back(PatternSet::parse(std::string(perms[i]) + "," + perms[j]));
    return out;
}

/// Pattern sets bdes-Wilf equivalent to {123,132}; excluded from the real-rootedness conjecture.
inline bool in_123_132_class(const PatternSet& p) {
    return p == PatternSet::parse("123,132") || p == PatternSet::parse("123,213") || p == PatternSet::parse("132,213");
}

struct ScanEntry {
    Property property;
    std::string pattern_set;
    int n = 0;
    std::uint64_t population = 0;
    bool pass = true;
    std::string witness;
};

struct ScanReport {
    Property property;
    int max_n = 0;
    std::vector<ScanEntry> entries;
    std::vector<std::string> deviations;  // outcomes contradicting the stated predictions

    bool prediction_holds() const { return deviations.empty(); }
};

inline ScanReport conjecture_scan(Property which, int max_n, const Guards& guards = {}) {
    ScanReport report{which, max_n, {}, {}};
    if (which == Property::schur_positive) {
        for (const char* pats : {"", "123", "1234", "12345"}) {
            const auto ps = PatternSet::parse(pats);
            for (int n = 0; n <= max_n; ++n) {
                ScanEntry e{which, "{" + ps.to_string() + "}", n, 0, true, {}};
                auto q = qsym_sum(n, ps, 1, guards);
                for (const auto& [alpha, c] : qsym_sum_fundamental(n, ps, 1, guards).coeffs) e.population += c.get_ui();
                auto sym = is_symmetric(q);
                if (!sym.symmetric) {
                    e.pass = false;
                    e.witness = "not symmetric: " + sym.witness->first.to_string() + " vs " + sym.witness->second.to_string();
                } else {
                    auto s = schur_expand(q);
                    for (const auto& [lambda, c] : s.coeffs)
                        if (c < 0) {
                            e.pass = false;
                            e.witness = "coefficient " + c.get_str() + " at s" + lambda.to_string();
                            break;
                        }
                }
                if (!e.pass) report.deviations.push_back(e.pattern_set + " n=" + std::to_string(n) + ": " + e.witness);
                report.entries.push_back(std::move(e));
            }
        }
        return report;
    }
    for (const auto& ps : length3_classes()) {
        const bool excluded = which == Property::real_rooted && in_123_132_class(ps);
        bool any_fail = false;
        for (int n = 0; n <= max_n; ++n) {
            const auto table = distribution_table(n, ps, StatName::Kind::bdes, guards);
            const auto& counts = table.counts;
            ScanEntry e{which, "{" + ps.to_string() + "}", n, table.total(), true, {}};
            switch (which) {
                case Property::real_rooted: {
                    auto p = UniPoly::from_integers(counts);
                    if (p.is_zero()) {
                        e.witness = "empty class";
                        break;
                    }
                    const int roots = p.degree() <= 1 ? p.degree() : real_root_count_with_multiplicity(p);
                    e.pass = roots == p.degree();
                    if (!e.pass)
                        e.witness = std::to_string(roots) + " real roots of degree " + std::to_string(p.degree()) + " " +
                                    p.to_string();
                    break;
                }
                case Property::log_concave: {
                    int k = -1;
                    e.pass = is_log_concave(counts, &k);
                    if (!e.pass) e.witness = "index " + std::to_string(k);
                    break;
                }
                case Property::unimodal: e.pass = is_unimodal(counts); break;
                default: break;
            }
            any_fail = any_fail || !e.pass;
            if (!e.pass && !excluded)
                report.deviations.push_back(e.pattern_set + " n=" + std::to_string(n) + ": " + e.witness);
            report.entries.push_back(std::move(e));
        }
        if (excluded && !any_fail)
            report.deviations.push_back("{" + ps.to_string() + "}: expected a non-real-rooted polynomial for some n <= " +
                                        std::to_string(max_n));
    }
    return report;
}

}  // namespace bdes
