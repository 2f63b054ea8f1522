#pragma once

/**
 * @file genfun.hpp
 * @brief Named generating functions (closed-form and functional-equation
 * routes, plus the defining combinatorial sums) and the closed counting
 * formulas for big descents.
 *
 * All series are in x, except G and Gtilde whose series variable is z.
 * Coefficients are polynomials in t (and s, u, v, w where the function
 * carries those markers).
 */

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "bdes/paths.hpp"
#include "bdes/permutation.hpp"
#include "bdes/series.hpp"

namespace bdes {

enum class GfKind {
    B132, B321, B123, Bgrave123, B123_132, B132_213, B231_321, B123_321,
    V, What, W, G, Gtilde, F, R_run, W1_words,
};

struct GfId {
    GfKind kind = GfKind::B132;
    int r = 0;  // R_run only

    GfId() = default;
    GfId(GfKind k, int r_ = 0) : kind(k), r(r_) {  // NOLINT(google-explicit-constructor)
        if (kind == GfKind::R_run && r < 2) throw InvalidInput("R_run(r) is defined for r >= 2 only");
    }

    std::string name() const {
        static const char* names[] = {"B132", "B321", "B123", "Bgrave123", "B123_132", "B132_213", "B231_321", "B123_321",
                                      "V",    "What", "W",    "G",         "Gtilde",   "F",        "R_run",    "W1_words"};
        return names[static_cast<int>(kind)];
    }

    std::string to_string() const { return kind == GfKind::R_run ? "R_run(" + std::to_string(r) + ")" : name(); }

    /// Accepts a plain name, or "R_run(3)"; `r` is used for a bare "R_run".
    static GfId parse(std::string_view text, int r = 2) {
        if (text.starts_with("R_run(") && text.ends_with(")")) {
            auto inner = std::string(text.substr(6, text.size() - 7));
            if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
                throw InvalidInput("bad R_run argument '" + inner + "'");
            return {GfKind::R_run, std::stoi(inner)};
        }
        for (int i = 0; i <= static_cast<int>(GfKind::W1_words); ++i) {
            GfId id;
            id.kind = static_cast<GfKind>(i);
            if (id.name() == text) return id.kind == GfKind::R_run ? GfId(GfKind::R_run, r) : id;
        }
        throw InvalidInput("unknown generating function '" + std::string(text) + "'");
    }

    bool has_functional_route() const {
        switch (kind) {
            case GfKind::B132:
            case GfKind::V:
            case GfKind::What:
            case GfKind::W:
            case GfKind::Gtilde:
            case GfKind::G:
            case GfKind::W1_words: return true;
            default: return false;
        }
    }

    friend bool operator==(const GfId&, const GfId&) = default;
};

/// Avoider class whose bdes (rbdes for Bgrave123) distribution a B-function counts.
inline std::optional<PatternSet> gf_pattern_set(GfKind k) {
    switch (k) {
        case GfKind::B132: return PatternSet::parse("132");
        case GfKind::B321: return PatternSet::parse("321");
        case GfKind::B123:
        case GfKind::Bgrave123: return PatternSet::parse("123");
        case GfKind::B123_132: return PatternSet::parse("123,132");
        case GfKind::B132_213: return PatternSet::parse("132,213");
        case GfKind::B231_321: return PatternSet::parse("231,321");
        case GfKind::B123_321: return PatternSet::parse("123,321");
        default: return std::nullopt;
    }
}

namespace detail {

inline MultiPoly var_t() { return MultiPoly::var(Var::t); }
inline MultiPoly var_s() { return MultiPoly::var(Var::s); }
inline MultiPoly one_minus_t() { return MultiPoly(1L) - var_t(); }

/// sum_k c[k] x^k as a series of order N.
inline Series poly_in_x(const std::vector<MultiPoly>& c, int N) {
    Series s(N);
    for (int k = 0; k < static_cast<int>(c.size()) && k <= N; ++k) s[k] = c[k];
    return s;
}

/// sqrt(1 - 4x + 4(1-t)x^2), shared by V, What, W and B321.
inline Series catalan_radical(int N) {
    const auto omt = one_minus_t();
    return sqrt(poly_in_x({1L, -4L, 4L * omt}, N));
}

/// Iterate a system x <- step(x) until every coefficient through the order
/// is stable. Each right-hand side gains at least one power of the series
/// variable, so order+2 sweeps always suffice for a correct system.
inline std::vector<Series> fixed_point(std::vector<Series> state, const std::function<void(std::vector<Series>&)>& sweep,
                                       const std::string& what) {
    const int N = state.front().order();
    for (int it = 0; it <= N + 2; ++it) {
        auto prev = state;
        sweep(state);
        bool same = true;
        for (std::size_t i = 0; i < state.size() && same; ++i) same = state[i] == prev[i];
        if (same) return state;
    }
    throw Divergence(what + ": fixed-point iteration did not stabilise");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Closed-form route

/// Closed-form expansion through x^N (z^N for G, Gtilde).
inline Series expand(GfId id, int N) {
    using namespace detail;
    if (N < 0) throw InvalidInput("order must be non-negative");
    const MultiPoly t = var_t(), s = var_s(), omt = one_minus_t();
    const MultiPoly one(1L), two(2L);
    switch (id.kind) {
        case GfKind::B132: {
            const int M = N + 1;
            auto num = poly_in_x({one, -two * omt, omt * (one - two * t)}, M) -
                       sqrt(poly_in_x({one, -4L, 6L * omt, -4L * omt * omt, omt * omt}, M));
            return exact_div(num, 1, two * t) / poly_in_x({one, -omt}, N);
        }
        case GfKind::B321:
            return poly_in_x({two}, N) / (poly_in_x({one, 0L, -two * omt}, N) + catalan_radical(N));
        case GfKind::B123: {
            const int M = N + 1;
            const MultiPoly omt2 = one - t * t;
            auto root = sqrt(poly_in_x({one, -two * (one + t), omt * omt}, M));
            auto num = poly_in_x({one, -two * omt2, omt * omt}, M) - poly_in_x({one, -omt}, M) * root;
            return exact_div(num, 1, two * t * t);
        }
        case GfKind::Bgrave123: {
            const int M = N + 1;
            auto num = poly_in_x({one, -omt}, M) - sqrt(poly_in_x({one, -two * (one + t), omt * omt}, M));
            return exact_div(num, 1, two * t);
        }
        case GfKind::B123_132:
        case GfKind::B132_213:
            return poly_in_x({one, -1L, omt, -omt * omt}, N) / poly_in_x({one, -2L, omt, t * omt}, N);
        case GfKind::B231_321: return poly_in_x({one, -1L}, N) / poly_in_x({one, -2L, 0L, omt}, N);
        case GfKind::B123_321: return poly_in_x({one, one, two, two + two * t, one + two * t + t * t}, N);
        case GfKind::V: {
            const int M = N + 1;
            auto num = poly_in_x({one}, M) - catalan_radical(M);
            return exact_div(num, 1, two) / poly_in_x({one, -omt}, N);
        }
        case GfKind::What: {
            auto half = MultiPoly(Rational(1, 2));
            return (poly_in_x({one}, N) - catalan_radical(N)) * half + poly_in_x({0L, 0L, t * (s - one)}, N);
        }
        case GfKind::W:
            return poly_in_x({two}, N) / (poly_in_x({one, 0L, two * (one - s) * t}, N) + catalan_radical(N));
        case GfKind::G: {
            const int M = N + 1;
            const MultiPoly ops = one + s;
            auto num = poly_in_x({one, -(ops - two * t)}, M) -
                       sqrt(poly_in_x({one, -two * ops, ops * ops - 4L * s * t}, M));
            return exact_div(num, 1, two * t);
        }
        case GfKind::Gtilde: {
            auto g = expand(GfKind::G, N + 1);
            return exact_div(g - poly_in_x({one}, N + 1), 1, s);
        }
        case GfKind::F: {
            // F(u,v,w,x) = (w + X)(G(s,t,z) - 1)/u + 1/(1-x), X = ux/(1-x),
            // a = 1 + X(1+v+X), s = X(1+X)/a, t = (1+X)(v+X)/a, z = a x
            const MultiPoly u = MultiPoly::var(Var::u), v = MultiPoly::var(Var::v), w = MultiPoly::var(Var::w);
            const Series X = poly_in_x({0L, u}, N) / poly_in_x({one, -1L}, N);
            const Series unit = poly_in_x({one}, N);
            const Series a = unit + X * (unit + poly_in_x({v}, N) + X);
            const Series ss = X * (unit + X) / a;
            const Series tt = (unit + X) * (poly_in_x({v}, N) + X) / a;
            const Series zz = a.shift(1);
            const Series g = compose(expand(GfKind::G, N), {{Var::s, ss}, {Var::t, tt}}, zz);
            const Series body = (poly_in_x({w}, N) + X) * (g - unit);
            return exact_div(body, 0, u) + unit / poly_in_x({one, -1L}, N);
        }
        case GfKind::R_run: {
            const auto head = poly_in_x({one}, N) - Series::monomial(omt, id.r, N);
            const auto q = head / poly_in_x({one, -1L}, N);
            return q / (poly_in_x({one}, N) - q.shift(1));
        }
        case GfKind::W1_words:
            return poly_in_x({0L, one, 0L, -omt}, N) / poly_in_x({one, -2L, omt, t * omt}, N);
    }
    throw InvalidInput("unknown generating function");
}

// ---------------------------------------------------------------------------
// Functional-equation route

inline Series expand_functional(GfId id, int N) {
    using namespace detail;
    if (N < 0) throw InvalidInput("order must be non-negative");
    const MultiPoly t = var_t(), s = var_s(), one(1L);
    const Series unit = poly_in_x({one}, N), x = Series::x(N), zero(N);
    switch (id.kind) {
        case GfKind::B132: {
            // Bbar = x(1 + Bbar + t(B - Bbar - 1)),  B = 1 + Bbar + x(B-1) + tx(B-1)^2
            auto st = fixed_point({unit, zero},
                                  [&](std::vector<Series>& v) {
                                      auto& B = v[0];
                                      auto& Bb = v[1];
                                      Bb = x * (unit + Bb + t * (B - Bb - unit));
                                      B = unit + Bb + x * (B - unit) + t * x * (B - unit) * (B - unit);
                                  },
                                  "B132");
            return st[0];
        }
        case GfKind::V: {
            // V = 1 + x(1 + (t-1)x) V^2
            const Series c = x * poly_in_x({one, t - one}, N);
            return fixed_point({unit}, [&](std::vector<Series>& v) { v[0] = unit + c * v[0] * v[0]; }, "V")[0];
        }
        case GfKind::What: {
            const Series V = expand_functional(GfKind::V, N);
            return x + poly_in_x({0L, 0L, s * t}, N) + t * x * x * (V - unit) + x * (V - unit - x * V);
        }
        case GfKind::W: {
            const Series Wh = expand_functional(GfKind::What, N);
            return fixed_point({unit}, [&](std::vector<Series>& v) { v[0] = unit + Wh * v[0]; }, "W")[0];
        }
        case GfKind::Gtilde:
        case GfKind::G: {
            // Gt = 1 + (1+s)z Gt + ts z^2 Gt^2,  G = 1 + s z Gt
            const Series z = x;
            auto gt = fixed_point({unit},
                                  [&](std::vector<Series>& v) {
                                      v[0] = unit + (one + s) * z * v[0] + t * s * z * z * v[0] * v[0];
                                  },
                                  "Gtilde")[0];
            if (id.kind == GfKind::Gtilde) return gt;
            return unit + s * z * gt;
        }
        case GfKind::W1_words: {
            // W0 = (1 + W0 + tW1)x, W01 = W0 x, W11 = (x + tW01 + W11)x, W1 = x + W01 + W11
            auto st = fixed_point({zero, zero, zero, zero},
                                  [&](std::vector<Series>& v) {
                                      auto& W0 = v[0];
                                      auto& W01 = v[1];
                                      auto& W11 = v[2];
                                      auto& W1 = v[3];
                                      W0 = (unit + W0 + t * W1) * x;
                                      W01 = W0 * x;
                                      W11 = (x + t * W01 + W11) * x;
                                      W1 = x + W01 + W11;
                                  },
                                  "W1_words");
            return st[3];
        }
        default: break;
    }
    throw InvalidInput(id.to_string() + " has no functional-equation route");
}

/// F(u,v,w,x) with u, v, w replaced by polynomials (typically in t).
/// B(t,x;123) = F(t,t,1,x) and Bgrave(t,x;123) = F(t,t,t,x).
inline Series expand_f_specialized(int N, const MultiPoly& u, const MultiPoly& v, const MultiPoly& w) {
    return expand(GfKind::F, N).map_coeffs([&](const MultiPoly& p) {
        return p.substitute(Var::u, u).substitute(Var::v, v).substitute(Var::w, w);
    });
}

// ---------------------------------------------------------------------------
// Combinatorial route: the defining sums, by exhaustive enumeration

inline Series enumerate_series(GfId id, int N, const Guards& guards = {}) {
    using detail::var_t;
    if (N < 0) throw InvalidInput("order must be non-negative");
    auto monomial = [](std::initializer_list<std::pair<Var, int>> powers) {
        Exponents e{};
        for (auto [v, k] : powers) e[static_cast<int>(v)] = static_cast<std::uint16_t>(k);
        return e;
    };
    Series out(N);
    if (auto pats = gf_pattern_set(id.kind)) {
        const StatName stat = id.kind == GfKind::Bgrave123 ? StatName::Kind::rbdes : StatName::Kind::bdes;
        for (int n = 0; n <= N; ++n) {
            auto table = distribution_table(n, *pats, stat, guards);
            for (int k = 0; k <= n; ++k) out[n].add_term(monomial({{Var::t, k}}), Rational(table.counts[k]));
        }
        return out;
    }
    auto path_guard = [&](int n) {
        if (n > guards.max_n_restricted)
            throw ResourceGuard("n=" + std::to_string(n) + " exceeds guard max_n_restricted=" +
                                std::to_string(guards.max_n_restricted));
    };
    switch (id.kind) {
        case GfKind::V:
        case GfKind::W:
        case GfKind::What:
            for (int n = 0; n <= N; ++n) {
                path_guard(n);
                for (const auto& p : all_dyck_paths(n)) {
                    if (id.kind == GfKind::What && path_statistic(p, PathStat::returns) != 1) continue;
                    const int tk = occ_factor(p, "UDD");
                    const int sk = id.kind == GfKind::V ? 0 : occ_factor(p, "UUDD", true);
                    out[n].add_term(monomial({{Var::t, tk}, {Var::s, sk}}), 1);
                }
            }
            return out;
        case GfKind::G:
        case GfKind::Gtilde:
            for (int m = 0; m <= N + 1; ++m) {
                path_guard(m);
                for (const auto& p : all_dyck_paths(m)) {
                    const int pk = path_statistic(p, PathStat::pk), con = path_statistic(p, PathStat::con);
                    if (id.kind == GfKind::G && m <= N) out[m].add_term(monomial({{Var::s, pk}, {Var::t, con}}), 1);
                    if (id.kind == GfKind::Gtilde && m >= 1)
                        out[m - 1].add_term(monomial({{Var::s, pk - 1}, {Var::t, con}}), 1);
                }
            }
            return out;
        case GfKind::F:
            for (int n = 0; n <= N; ++n) {
                path_guard(n);
                for (const auto& p : all_dyck_paths(n))
                    out[n].add_term(monomial({{Var::u, path_statistic(p, PathStat::hibasc)},
                                              {Var::v, path_statistic(p, PathStat::lobasc)},
                                              {Var::w, path_statistic(p, PathStat::ini_UU)}}),
                                    1);
            }
            return out;
        case GfKind::R_run:
            for (int n = 0; n <= N; ++n) {
                path_guard(n);
                for (const auto& w : all_binary_words(n)) out[n].add_term(monomial({{Var::t, run_count(w, id.r)}}), 1);
            }
            return out;
        case GfKind::W1_words:
            for (int n = 1; n <= N; ++n) {
                path_guard(n);
                for (const auto& w : all_binary_words(n))
                    if (w.bits.back() == '1')
                        out[n].add_term(monomial({{Var::t, occ_factor(w, "10") + occ_factor(w, "011")}}), 1);
            }
            return out;
        default: break;
    }
    throw InvalidInput("no combinatorial definition for " + id.to_string());
}

/// Coefficient of x^n of a series whose coefficients are polynomials in t alone,
/// as a dense list indexed by the power of t, padded with zeros to length n+1.
inline std::vector<mpz_class> t_coefficients(const Series& series, int n) {
    std::vector<mpz_class> out(n + 1);
    for (const auto& [e, c] : series[n].terms()) {
        for (int i = 1; i < kNumVars; ++i)
            if (e[i]) throw InvalidInput("t_coefficients: coefficient involves variables other than t");
        if (c.get_den() != 1) throw InternalConsistency("t_coefficients: non-integral coefficient");
        if (e[0] >= static_cast<int>(out.size())) out.resize(e[0] + 1);
        out[e[0]] = c.get_num();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed formulas

/// C(n, k), zero when k < 0, k > n or n < 0.
inline mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline mpz_class catalan(long n) { return binomial(2 * n, n) / (n + 1); }

inline mpz_class pow2(long e) {
    mpz_class out = 1;
    if (e > 0) out <<= static_cast<mp_bitcnt_t>(e);
    return out;
}

/// Number of pi in S_n(231) with bdes(pi) = k.
inline mpz_class b231(long n, long k) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 0 || n - 2 * k - 1 < 0) return 0;
    return pow2(n - 2 * k - 1) * binomial(n - 1, 2 * k) * catalan(k);
}

/// Number of pi in S_n(231) with des(pi) = j and bdes(pi) = k.
inline mpz_class b231_joint(long n, long j, long k) {
    if (n == 0) return (j == 0 && k == 0) ? 1 : 0;
    if (k < 0) return 0;
    return catalan(k) * binomial(n - 1, 2 * k) * binomial(n - 2 * k - 1, j - k);
}

inline mpz_class b123(long n, long k) {
    if (n < 2) return k == 0 ? 1 : 0;
    mpz_class v = 2 * binomial(n + 1, k + 2) * binomial(n - 2, k);
    return v / (n + 1);
}

inline mpz_class narayana(long n, long k) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 0) return 0;
    return binomial(n - 1, k) * binomial(n, k) / (k + 1);
}

inline mpz_class b213_231(long n, long k) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 0) return 0;
    return binomial(n, 2 * k + 1);
}

inline mpz_class b213_312(long n, long k) { return b213_231(n, k); }

inline mpz_class b123_231(long n, long k) {
    if (n == 0) return k == 0 ? 1 : 0;
    if (k == 0) return n;
    if (k == 1) return binomial(n - 1, 2);
    return 0;
}

inline mpz_class b132_321(long n, long k) {
    if (n < 2) return k == 0 ? 1 : 0;
    if (k == 0) return 2;
    if (k == 1) return binomial(n, 2) - 1;
    return 0;
}

inline mpz_class b231_312(long n, long k) {
    if (n == 0) return k == 0 ? 1 : 0;
    return k == 0 ? pow2(n - 1) : mpz_class(0);
}

enum class FormulaId {
    b231, b231_joint, b123, narayana, b213_231, b213_312, b123_231, b132_321, b231_312, eulerian_r, carlitz_lhs_coeff,
};

inline std::string to_string(FormulaId f) {
    static const char* names[] = {"b231",     "b231_joint", "b123",     "narayana",   "b213_231",         "b213_312",
                                  "b123_231", "b132_321",   "b231_312", "eulerian_r", "carlitz_lhs_coeff"};
    return names[static_cast<int>(f)];
}

inline FormulaId parse_formula(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(FormulaId::carlitz_lhs_coeff); ++i)
        if (to_string(static_cast<FormulaId>(i)) == name) return static_cast<FormulaId>(i);
    throw InvalidInput("unknown formula '" + std::string(name) + "'");
}

/// The avoider class a one-row formula b(n,k) counts by bdes.
inline std::optional<PatternSet> formula_pattern_set(FormulaId f) {
    switch (f) {
        case FormulaId::b231: return PatternSet::parse("231");
        case FormulaId::b123: return PatternSet::parse("123");
        case FormulaId::b213_231: return PatternSet::parse("213,231");
        case FormulaId::b213_312: return PatternSet::parse("213,312");
        case FormulaId::b123_231: return PatternSet::parse("123,231");
        case FormulaId::b132_321: return PatternSet::parse("132,321");
        case FormulaId::b231_312: return PatternSet::parse("231,312");
        default: return std::nullopt;
    }
}

/// Row k = 0..n of a two-argument formula.
inline std::vector<mpz_class> formula_row(FormulaId f, long n) {
    std::vector<mpz_class> row(n + 1);
    for (long k = 0; k <= n; ++k) {
        switch (f) {
            case FormulaId::b231: row[k] = b231(n, k); break;
            case FormulaId::b123: row[k] = b123(n, k); break;
            case FormulaId::narayana: row[k] = narayana(n, k); break;
            case FormulaId::b213_231: row[k] = b213_231(n, k); break;
            case FormulaId::b213_312: row[k] = b213_312(n, k); break;
            case FormulaId::b123_231: row[k] = b123_231(n, k); break;
            case FormulaId::b132_321: row[k] = b132_321(n, k); break;
            case FormulaId::b231_312: row[k] = b231_312(n, k); break;
            default: throw InvalidInput(to_string(f) + " is not a row formula b(n,k)");
        }
    }
    return row;
}

/// r-Eulerian polynomial sum over S_n of t^{des_r}: brute force for n <= r,
/// then (r+1+(n-r-1)t) A_{n-1} + t(1-t) A'_{n-1}.
inline MultiPoly eulerian_r(int n, int r, const Guards& guards = {}) {
    if (n < 0 || r < 0) throw InvalidInput("eulerian_r needs n, r >= 0");
    const int base = std::min(n, r);
    auto table = distribution_table(base, PatternSet{}, StatName::des_r(r), guards);
    std::vector<Rational> coeffs;
    for (auto c : table.counts) coeffs.emplace_back(Rational(static_cast<unsigned long>(c)));
    MultiPoly A = MultiPoly::univariate(Var::t, coeffs);
    const MultiPoly t = MultiPoly::var(Var::t), one(1L);
    for (int m = base + 1; m <= n; ++m)
        A = (MultiPoly(static_cast<long>(r + 1)) + MultiPoly(static_cast<long>(m - r - 1)) * t) * A +
            t * (one - t) * A.derivative(Var::t);
    return A;
}

/// Coefficient of t^k in rA_{n+r}(t) / ((r+1)! (1-t)^{n+1+r}).
inline Rational carlitz_lhs_coeff(int n, int r, int k, const Guards& guards = {}) {
    if (n < 1 || r < 0 || k < 0) throw InvalidInput("carlitz_lhs_coeff needs n >= 1, r >= 0, k >= 0");
    const auto a = eulerian_r(n + r, r, guards).coefficients(Var::t);
    const long m = n + 1 + r;
    Rational sum = 0;
    for (int j = 0; j <= k && j < static_cast<int>(a.size()); ++j)
        sum += a[j] * Rational(binomial(k - j + m - 1, m - 1));
    mpz_class fact = 1;
    for (int i = 2; i <= r + 1; ++i) fact *= i;
    return sum / Rational(fact);
}

/// First K coefficients of the Carlitz left side equal (k+1+r)^{n-1} C(k+1+r, r+1).
inline bool carlitz_verify(int n, int r, int K, const Guards& guards = {}) {
    if (n < 1 || K < 1) throw InvalidInput("carlitz_verify needs n >= 1 and K >= 1");
    for (int k = 0; k < K; ++k) {
        mpz_class rhs;
        mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(k + 1 + r), static_cast<unsigned long>(n - 1));
        rhs *= binomial(k + 1 + r, r + 1);
        if (carlitz_lhs_coeff(n, r, k, guards) != Rational(rhs)) return false;
    }
    return true;
}

}  // namespace bdes
