#pragma once

/**
 * @file symfunc.hpp
 * @brief Quasisymmetric generating functions of descent-type sets over
 * avoider classes, symmetry detection, and Schur expansion through Kostka
 * numbers.
 *
 * Functions are stored as coefficient maps on a basis, never as polynomials
 * in concrete variables.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdes/permutation.hpp"

namespace bdes {

struct Composition {
    std::vector<int> parts;

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        if (!parts.empty() && parts.back() <= 0) throw InvalidInput("partition parts must be positive");
    }

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    int length() const { return static_cast<int>(parts.size()); }
    int operator[](int i) const { return i < length() ? parts[i] : 0; }
    std::string to_string() const { return Composition{parts}.to_string(); }
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// alpha(S) for S a subset of [n-1].
inline Composition composition_of_set(int n, const std::vector<int>& S) {
    Composition c;
    int prev = 0;
    for (int s : S) {
        if (s <= prev || s >= n) throw InvalidInput("set must be an increasing subset of [n-1]");
        c.parts.push_back(s - prev);
        prev = s;
    }
    if (n > 0) c.parts.push_back(n - prev);
    return c;
}

inline std::vector<int> set_of_composition(const Composition& c) {
    std::vector<int> S;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < c.parts.size(); ++i) S.push_back(acc += c.parts[i]);
    return S;
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            Partition p;
            p.parts = cur;
            out.push_back(p);
            return;
        }
        for (int k = std::min(left, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

/// Distinct rearrangements of a partition's parts, in lexicographic order.
inline std::vector<Composition> rearrangements(const Partition& p) {
    std::vector<int> v(p.parts.rbegin(), p.parts.rend());
    std::vector<Composition> out;
    do {
        out.push_back(Composition{v});
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

enum class QsymBasis { fundamental, monomial };
enum class SymBasis { monomial, schur };

struct QsymExpansion {
    int n = 0;
    QsymBasis basis = QsymBasis::monomial;
    std::map<Composition, mpz_class> coeffs;

    void add(const Composition& c, const mpz_class& k) {
        if (k == 0) return;
        auto& slot = coeffs[c];
        slot += k;
        if (slot == 0) coeffs.erase(c);
    }
};

struct SymExpansion {
    int n = 0;
    SymBasis basis = SymBasis::schur;
    std::map<Partition, mpz_class> coeffs;

    /// Lex-ascending partitions, e.g. "s(2,2,1)+4s(3,2)+3s(4,1)+5s(5)".
    std::string to_string() const {
        if (coeffs.empty()) return "0";
        const char* sym = basis == SymBasis::schur ? "s" : "m";
        std::string out;
        bool first = true;
        for (const auto& [lambda, c] : coeffs) {
            if (c < 0) out += '-';
            else if (!first) out += '+';
            first = false;
            mpz_class mag = abs(c);
            if (mag != 1) out += mag.get_str();
            out += sym + lambda.to_string();
        }
        return out;
    }
};

inline std::string to_string(const QsymExpansion& q) {
    if (q.coeffs.empty()) return "0";
    const char* sym = q.basis == QsymBasis::monomial ? "M" : "F";
    std::string out;
    bool first = true;
    for (const auto& [alpha, c] : q.coeffs) {
        if (c < 0) out += '-';
        else if (!first) out += '+';
        first = false;
        mpz_class mag = abs(c);
        if (mag != 1) out += mag.get_str();
        out += sym + alpha.to_string();
    }
    return out;
}

namespace detail {

inline Composition composition_of_mask(int n, std::uint32_t mask) {
    std::vector<int> S;
    for (int i = 1; i < n; ++i)
        if (mask >> (i - 1) & 1u) S.push_back(i);
    return composition_of_set(n, S);
}

inline std::uint32_t mask_of_set(int n, const std::vector<int>& S) {
    std::uint32_t m = 0;
    int prev = 0;
    for (int s : S) {
        if (s <= prev || s >= n) throw InvalidInput("set must be an increasing subset of [n-1]");
        m |= 1u << (s - 1);
        prev = s;
    }
    return m;
}

/// Adds c * F_{n,S} to q (monomial basis): one M_{alpha(T)} per T containing S.
inline void add_fundamental(QsymExpansion& q, int n, std::uint32_t S, const mpz_class& c) {
    const std::uint32_t full = n > 1 ? (1u << (n - 1)) - 1 : 0;
    const std::uint32_t free_bits = full & ~S;
    std::uint32_t sub = free_bits;
    while (true) {
        q.add(composition_of_mask(n, S | sub), c);
        if (sub == 0) break;
        sub = (sub - 1) & free_bits;
    }
}

}  // namespace detail

/// F_{n,S} in the monomial quasisymmetric basis.
inline QsymExpansion fundamental_to_monomial(int n, const std::vector<int>& S) {
    if (n < 0) throw InvalidInput("weight must be non-negative");
    QsymExpansion q{n, QsymBasis::monomial, {}};
    detail::add_fundamental(q, n, detail::mask_of_set(n, S), 1);
    return q;
}

/// Q_n^{(r)}(Pi) = sum over S_n(Pi) of F_{n, Des_r(pi)}, in the fundamental basis.
inline QsymExpansion qsym_sum_fundamental(int n, const PatternSet& patterns, int r, const Guards& guards = {}) {
    if (r < 0) throw InvalidInput("r must be non-negative");
    guards.check(n, patterns);
    std::map<std::uint32_t, std::uint64_t> tally;
    for_each_avoider(n, patterns, [&](const Permutation& p) {
        std::uint32_t m = 0;
        for (int k = 0; k + 1 < n; ++k)
            if (p[k] > p[k + 1] + r) m |= 1u << k;
        ++tally[m];
    });
    QsymExpansion q{n, QsymBasis::fundamental, {}};
    for (auto [mask, count] : tally) q.add(detail::composition_of_mask(n, mask), mpz_class(static_cast<unsigned long>(count)));
    return q;
}

/// Q_n^{(r)}(Pi) in the monomial quasisymmetric basis.
inline QsymExpansion qsym_sum(int n, const PatternSet& patterns, int r, const Guards& guards = {}) {
    auto f = qsym_sum_fundamental(n, patterns, r, guards);
    QsymExpansion q{n, QsymBasis::monomial, {}};
    for (const auto& [alpha, c] : f.coeffs) {
        std::vector<int> S = set_of_composition(alpha);
        detail::add_fundamental(q, n, detail::mask_of_set(n, S), c);
    }
    return q;
}

struct SymmetryResult {
    bool symmetric = true;
    std::optional<std::pair<Composition, Composition>> witness;  // two rearrangements with different coefficients
};

inline SymmetryResult is_symmetric(const QsymExpansion& q) {
    if (q.basis != QsymBasis::monomial) throw InvalidInput("is_symmetric expects the monomial basis");
    std::vector<Partition> shapes;
    for (const auto& [alpha, c] : q.coeffs) shapes.push_back(Partition(alpha.parts));
    std::sort(shapes.begin(), shapes.end());
    shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
    auto coeff = [&](const Composition& a) {
        auto it = q.coeffs.find(a);
        return it == q.coeffs.end() ? mpz_class(0) : it->second;
    };
    for (const auto& lambda : shapes) {
        auto comps = rearrangements(lambda);
        const mpz_class ref = coeff(comps.front());
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (coeff(comps[i]) != ref) return {false, std::make_pair(comps.front(), comps[i])};
    }
    return {};
}

/// Number of semistandard tableaux of shape lambda and content mu.
inline mpz_class kostka(const Partition& lambda, const Partition& mu) {
    static thread_local std::map<std::pair<Partition, Partition>, mpz_class> memo;
    if (lambda.weight() != mu.weight()) return 0;
    auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Strip the largest entry as a horizontal strip of size mu.last and recurse.
    mpz_class total = 0;
    if (mu.parts.empty()) {
        total = lambda.parts.empty() ? 1 : 0;
    } else {
        const int k = mu.parts.back();
        Partition rest_mu;
        rest_mu.parts.assign(mu.parts.begin(), mu.parts.end() - 1);
        const int rows = lambda.length();
        std::vector<int> inner(lambda.parts);
        auto rec = [&](auto&& self, int row, int left) -> void {
            if (row == rows) {
                if (left != 0) return;
                Partition nu;
                for (int x : inner)
                    if (x > 0) nu.parts.push_back(x);
                total += kostka(nu, rest_mu);
                return;
            }
            // removing up to lambda[row] - lambda[row+1] cells keeps a horizontal strip
            const int cap = std::min(left, lambda[row] - lambda[row + 1]);
            for (int take = 0; take <= cap; ++take) {
                inner[row] = lambda[row] - take;
                self(self, row + 1, left - take);
            }
            inner[row] = lambda[row];
        };
        rec(rec, 0, k);
    }
    memo.emplace(key, total);
    return total;
}

/// Collapse a symmetric monomial-qsym expansion to the m_lambda basis.
inline SymExpansion to_monomial_symmetric(const QsymExpansion& q) {
    auto sym = is_symmetric(q);
    if (!sym.symmetric)
        throw InvalidInput("not symmetric: " + sym.witness->first.to_string() + " vs " + sym.witness->second.to_string());
    SymExpansion m{q.n, SymBasis::monomial, {}};
    for (const auto& [alpha, c] : q.coeffs) {
        Partition lambda(alpha.parts);
        if (Composition{std::vector<int>(lambda.parts)} == alpha) m.coeffs[lambda] = c;
    }
    return m;
}

/// Schur expansion of a symmetric function given in the monomial-qsym basis.
inline SymExpansion schur_expand(const QsymExpansion& q) {
    auto m = to_monomial_symmetric(q);
    SymExpansion s{q.n, SymBasis::schur, {}};
    auto remaining = m.coeffs;
    // Lex-largest first: s_lambda only reaches m_mu for mu dominated by lambda.
    auto shapes = partitions_of(q.n);
    for (auto it = shapes.rbegin(); it != shapes.rend(); ++it) {
        const auto& lambda = *it;
        auto found = remaining.find(lambda);
        if (found == remaining.end() || found->second == 0) continue;
        const mpz_class c = found->second;
        if (kostka(lambda, lambda) != 1) throw InternalConsistency("Kostka matrix is not unitriangular");
        s.coeffs[lambda] = c;
        for (const auto& mu : shapes) {
            const mpz_class k = kostka(lambda, mu);
            if (k == 0) continue;
            auto& slot = remaining[mu];
            slot -= c * k;
        }
    }
    for (const auto& [mu, c] : remaining)
        if (c != 0) throw InternalConsistency("Schur expansion left a residue at m" + mu.to_string());
    return s;
}

/// Re-expand a Schur expansion in the monomial quasisymmetric basis.
inline QsymExpansion schur_to_monomial_qsym(const SymExpansion& s) {
    if (s.basis != SymBasis::schur) throw InvalidInput("expected a Schur expansion");
    QsymExpansion q{s.n, QsymBasis::monomial, {}};
    for (const auto& mu : partitions_of(s.n)) {
        mpz_class coeff = 0;
        for (const auto& [lambda, c] : s.coeffs) coeff += c * kostka(lambda, mu);
        if (coeff == 0) continue;
        for (const auto& alpha : rearrangements(mu)) q.add(alpha, coeff);
    }
    return q;
}

inline bool is_schur_positive(const SymExpansion& e) {
    if (e.basis != SymBasis::schur) throw InvalidInput("expected a Schur expansion");
    return std::all_of(e.coeffs.begin(), e.coeffs.end(), [](const auto& kv) { return kv.second >= 0; });
}

/// Parses "s(2,2,1)+4s(3,2)+3s(4,1)+5s(5)" (and "s()" for weight zero).
inline SymExpansion parse_schur(std::string_view text) {
    SymExpansion e;
    std::size_t i = 0;
    auto fail = [&] { throw InvalidInput("cannot parse Schur expansion '" + std::string(text) + "'"); };
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail();
        }
        first = false;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        mpz_class c = start == i ? mpz_class(1) : mpz_class(std::string(text.substr(start, i - start)));
        if (i + 1 >= text.size() || text[i] != 's' || text[i + 1] != '(') fail();
        auto close = text.find(')', i);
        if (close == std::string_view::npos) fail();
        std::vector<int> parts;
        auto inner = text.substr(i + 2, close - i - 2);
        std::size_t j = 0;
        while (j < inner.size()) {
            auto comma = inner.find(',', j);
            if (comma == std::string_view::npos) comma = inner.size();
            parts.push_back(std::stoi(std::string(inner.substr(j, comma - j))));
            j = comma + 1;
        }
        Partition lambda(parts);
        e.n = lambda.weight();
        e.coeffs[lambda] += sign * c;
        i = close + 1;
    }
    return e;
}

}  // namespace bdes
