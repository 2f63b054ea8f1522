#pragma once

/**
 * @file multipoly.hpp
 * @brief Exact rationals and sparse multivariate polynomials over the
 * marker variables t, s, u, v, w, z.
 */

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bdes/error.hpp"

namespace bdes {

/// Arbitrary-precision rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

enum class Var : int { t = 0, s, u, v, w, z };
inline constexpr int kNumVars = 6;
inline constexpr char kVarNames[kNumVars] = {'t', 's', 'u', 'v', 'w', 'z'};

inline Var parse_var(char c) {
    for (int i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == c) return static_cast<Var>(i);
    throw InvalidInput(std::string("unknown variable '") + c + "'");
}

using Exponents = std::array<std::uint16_t, kNumVars>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

/// Graded lexicographic order (t > s > u > v > w > z within a degree).
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

class MultiPoly {
public:
    using Terms = std::map<Exponents, Rational, GradedLex>;

    MultiPoly() = default;
    MultiPoly(long c) { add_term({}, Rational(c)); }                 // NOLINT(google-explicit-constructor)
    MultiPoly(const Rational& c) { add_term({}, c); }                // NOLINT(google-explicit-constructor)

    static MultiPoly monomial(const Exponents& e, const Rational& c = 1) {
        MultiPoly p;
        p.add_term(e, c);
        return p;
    }

    static MultiPoly var(Var v, int power = 1) {
        Exponents e{};
        e[static_cast<int>(v)] = static_cast<std::uint16_t>(power);
        return monomial(e);
    }

    /// sum_k coeffs[k] * v^k
    static MultiPoly univariate(Var v, const std::vector<Rational>& coeffs) {
        MultiPoly p;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            Exponents e{};
            e[static_cast<int>(v)] = static_cast<std::uint16_t>(k);
            p.add_term(e, coeffs[k]);
        }
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && bdes::total_degree(terms_.begin()->first) == 0); }

    Rational constant_term() const {
        auto it = terms_.find(Exponents{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree(Var v) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max<int>(d, e[static_cast<int>(v)]);
        return d;
    }

    int total_degree() const { return terms_.empty() ? -1 : bdes::total_degree(terms_.rbegin()->first); }

    /// Coefficient list in v; only valid for polynomials in v alone.
    std::vector<Rational> coefficients(Var v) const {
        std::vector<Rational> out(std::max(0, degree(v) + 1));
        for (const auto& [e, c] : terms_) {
            for (int i = 0; i < kNumVars; ++i)
                if (i != static_cast<int>(v) && e[i] != 0)
                    throw InvalidInput("coefficients(): polynomial involves more than one variable");
            out[e[static_cast<int>(v)]] = c;
        }
        return out;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const Rational& q) {
        if (q == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= q;
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
    friend MultiPoly operator*(MultiPoly a, const Rational& q) { return a *= q; }
    friend MultiPoly operator*(const Rational& q, MultiPoly a) { return a *= q; }
    friend MultiPoly operator*(MultiPoly a, long q) { return a *= Rational(q); }
    friend MultiPoly operator*(long q, MultiPoly a) { return a *= Rational(q); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        if (a.is_zero() || b.is_zero()) return out;
        Rational prod;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (int i = 0; i < kNumVars; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
                prod = ca * cb;
                out.add_term(e, prod);
            }
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    MultiPoly pow(int k) const {
        MultiPoly r(1L), base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) r *= base;
            if (k > 1) base = base * base;
        }
        return r;
    }

    MultiPoly derivative(Var v) const {
        MultiPoly out;
        const int i = static_cast<int>(v);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents f = e;
            --f[i];
            out.add_term(f, c * e[i]);
        }
        return out;
    }

    MultiPoly substitute(Var v, const Rational& value) const {
        MultiPoly out;
        const int i = static_cast<int>(v);
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            f[i] = 0;
            Rational p = 1;
            for (int k = 0; k < e[i]; ++k) p *= value;
            out.add_term(f, c * p);
        }
        return out;
    }

    MultiPoly substitute(Var v, const MultiPoly& value) const {
        const int i = static_cast<int>(v);
        std::vector<MultiPoly> powers{MultiPoly(1L)};
        MultiPoly out;
        for (const auto& [e, c] : terms_) {
            while (static_cast<int>(powers.size()) <= e[i]) powers.push_back(powers.back() * value);
            Exponents f = e;
            f[i] = 0;
            out += monomial(f, c) * powers[e[i]];
        }
        return out;
    }

    /// Every variable occurring in the polynomial must be assigned.
    Rational evaluate(const std::map<Var, Rational>& values) const {
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (int i = 0; i < kNumVars; ++i) {
                if (e[i] == 0) continue;
                auto it = values.find(static_cast<Var>(i));
                if (it == values.end())
                    throw InvalidInput(std::string("evaluate: no value for ") + kVarNames[i]);
                for (int k = 0; k < e[i]; ++k) term *= it->second;
            }
            total += term;
        }
        return total;
    }

    Rational evaluate(Var v, const Rational& value) const { return evaluate(std::map<Var, Rational>{{v, value}}); }

    /// Quotient if `d` divides this polynomial exactly, nullopt otherwise.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const {
        if (d.is_zero()) throw NonInvertible("division by the zero polynomial");
        const auto& [lead_e, lead_c] = *d.terms_.rbegin();
        MultiPoly rem = *this, quot;
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.rbegin();
            Exponents q;
            for (int i = 0; i < kNumVars; ++i) {
                if (re[i] < lead_e[i]) return std::nullopt;
                q[i] = static_cast<std::uint16_t>(re[i] - lead_e[i]);
            }
            auto m = monomial(q, rc / lead_c);
            rem -= m * d;
            quot += m;
        }
        return quot;
    }

    /// Ascending graded order, e.g. "5+25t+12t^2", "1-s+2t^2s".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool constant = bdes::total_degree(e) == 0;
            Rational mag = abs(c);
            if (c < 0) out += '-';
            else if (!first) out += '+';
            first = false;
            if (constant || mag != 1) {
                if (mag.get_den() == 1 || constant) out += mag.get_str();
                else out += "(" + mag.get_str() + ")";
            }
            for (int i = 0; i < kNumVars; ++i) {
                if (e[i] == 0) continue;
                out += kVarNames[i];
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

    /// Inverse of to_string for polynomials with integer or "(p/q)" coefficients.
    static MultiPoly parse(std::string_view text);

private:
    Terms terms_;
};

inline MultiPoly MultiPoly::parse(std::string_view text) {
    MultiPoly out;
    std::size_t i = 0;
    auto fail = [&] { throw InvalidInput("cannot parse polynomial '" + std::string(text) + "'"); };
    auto read_int = [&]() {
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        return std::string(text.substr(start, i - start));
    };
    if (text.empty()) fail();
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        }
        Rational coeff = 1;
        bool have_coeff = false;
        if (i < text.size() && text[i] == '(') {
            auto close = text.find(')', i);
            if (close == std::string_view::npos) fail();
            coeff = Rational(std::string(text.substr(i + 1, close - i - 1)));
            coeff.canonicalize();
            i = close + 1;
            have_coeff = true;
        } else if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            auto digits = read_int();
            if (i < text.size() && text[i] == '/') {
                ++i;
                digits += "/" + read_int();
            }
            coeff = Rational(digits);
            coeff.canonicalize();
            have_coeff = true;
        }
        Exponents e{};
        bool have_var = false;
        while (i < text.size() && text[i] != '+' && text[i] != '-') {
            if (text[i] == '*') {
                ++i;
                continue;
            }
            const int v = static_cast<int>(parse_var(text[i++]));
            int power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                auto digits = read_int();
                if (digits.empty()) fail();
                power = std::stoi(digits);
            }
            e[v] = static_cast<std::uint16_t>(e[v] + power);
            have_var = true;
        }
        if (!have_coeff && !have_var) fail();
        out.add_term(e, sign * coeff);
    }
    return out;
}

}  // namespace bdes
