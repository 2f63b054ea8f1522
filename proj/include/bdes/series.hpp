#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series in one variable (x, or z for the 2-Motzkin
 * generating functions) with MultiPoly coefficients.
 *
 * A series of order N stores coefficients 0..N. Binary operations return the
 * smaller of the two orders.
 */

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "bdes/multipoly.hpp"

namespace bdes {

inline constexpr int kDefaultOrder = 12;

class Series {
public:
    Series() : Series(kDefaultOrder) {}
    explicit Series(int order) : coeffs_(check_order(order) + 1) {}
    Series(int order, std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(check_order(order) + 1);
    }

    static Series constant(const MultiPoly& c, int order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// c * x^k
    static Series monomial(const MultiPoly& c, int k, int order) {
        Series s(order);
        if (k <= order) s.coeffs_[k] = c;
        return s;
    }

    static Series x(int order) { return monomial(MultiPoly(1L), 1, order); }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const MultiPoly& operator[](int n) const { return coeffs_.at(n); }
    MultiPoly& operator[](int n) { return coeffs_.at(n); }
    const std::vector<MultiPoly>& coeffs() const noexcept { return coeffs_; }

    /// Lowest index with a nonzero coefficient, or order()+1 if none.
    int valuation() const {
        for (int n = 0; n <= order(); ++n)
            if (!coeffs_[n].is_zero()) return n;
        return order() + 1;
    }

    Series truncate(int order) const {
        Series s(std::min(order, this->order()));
        for (int n = 0; n <= s.order(); ++n) s.coeffs_[n] = coeffs_[n];
        return s;
    }

    Series& operator+=(const Series& o) {
        coeffs_.resize(std::min(order(), o.order()) + 1);
        for (int n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
        return *this;
    }
    Series& operator-=(const Series& o) {
        coeffs_.resize(std::min(order(), o.order()) + 1);
        for (int n = 0; n <= order(); ++n) coeffs_[n] -= o.coeffs_[n];
        return *this;
    }
    Series& operator*=(const MultiPoly& c) {
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a) { return a *= MultiPoly(-1L); }
    friend Series operator*(Series a, const MultiPoly& c) { return a *= c; }
    friend Series operator*(const MultiPoly& c, Series a) { return a *= c; }

    friend Series operator*(const Series& a, const Series& b) {
        const int N = std::min(a.order(), b.order());
        Series out(N);
        for (int i = 0; i <= N; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= N; ++j)
                if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    /// Unit division: b's constant term must be a nonzero rational.
    friend Series operator/(const Series& a, const Series& b) {
        const MultiPoly& b0 = b.coeffs_[0];
        if (!b0.is_constant() || b0.is_zero()) throw NonInvertible("series division by a non-unit");
        const Rational inv = 1 / b0.constant_term();
        const int N = std::min(a.order(), b.order());
        Series q(N);
        for (int n = 0; n <= N; ++n) {
            MultiPoly acc = a.coeffs_[n];
            for (int k = 1; k <= n; ++k)
                if (!b.coeffs_[k].is_zero() && !q.coeffs_[n - k].is_zero()) acc -= b.coeffs_[k] * q.coeffs_[n - k];
            q.coeffs_[n] = acc * inv;
        }
        return q;
    }

    /// Equal through the smaller order.
    friend bool operator==(const Series& a, const Series& b) {
        const int N = std::min(a.order(), b.order());
        for (int n = 0; n <= N; ++n)
            if (!(a.coeffs_[n] == b.coeffs_[n])) return false;
        return true;
    }

    Series pow(int k) const {
        Series r = constant(MultiPoly(1L), order()), base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) r = r * base;
            if (k > 1) base = base * base;
        }
        return r;
    }

    /// Multiply by x^k, keeping the order.
    Series shift(int k) const {
        Series s(order());
        for (int n = 0; n + k <= order(); ++n) s.coeffs_[n + k] = coeffs_[n];
        return s;
    }

    template <class F>
    Series map_coeffs(F&& f) const {
        Series s(order());
        for (int n = 0; n <= order(); ++n) s.coeffs_[n] = f(coeffs_[n]);
        return s;
    }

    Series substitute(Var v, const Rational& value) const {
        return map_coeffs([&](const MultiPoly& p) { return p.substitute(v, value); });
    }
    Series substitute(Var v, const MultiPoly& value) const {
        return map_coeffs([&](const MultiPoly& p) { return p.substitute(v, value); });
    }

    /// One "n: <polynomial>" line per coefficient.
    std::string to_string() const {
        std::string out;
        for (int n = 0; n <= order(); ++n) out += std::to_string(n) + ": " + coeffs_[n].to_string() + "\n";
        return out;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw InvalidInput("series order must be non-negative");
        return order;
    }

    std::vector<MultiPoly> coeffs_;
};

/// Square root of a series with constant term exactly 1.
inline Series sqrt(const Series& a) {
    if (!(a[0] == MultiPoly(1L))) throw InvalidInput("sqrt: constant term must be 1");
    const int N = a.order();
    Series b(N);
    b[0] = MultiPoly(1L);
    const Rational half(1, 2);
    for (int n = 1; n <= N; ++n) {
        MultiPoly acc = a[n];
        for (int k = 1; k < n; ++k)
            if (!b[k].is_zero() && !b[n - k].is_zero()) acc -= b[k] * b[n - k];
        b[n] = acc * half;
    }
    return b;
}

/// a / (c x^k), checked term by term. The result has order a.order() - k.
inline Series exact_div(const Series& a, int k, const MultiPoly& c) {
    if (k < 0) throw InvalidInput("exact_div: negative x-power");
    if (k > a.order()) throw InvalidInput("exact_div: x-power exceeds the series order");
    for (int n = 0; n < k; ++n)
        if (!a[n].is_zero())
            throw InexactDivision("exact_div: nonzero coefficient below x^" + std::to_string(k), n);
    Series out(a.order() - k);
    for (int n = k; n <= a.order(); ++n) {
        auto q = a[n].divide_exact(c);
        if (!q) throw InexactDivision("exact_div: coefficient of x^" + std::to_string(n) + " not divisible by " + c.to_string(), n);
        out[n - k] = std::move(*q);
    }
    return out;
}

/**
 * Substitute series for the variables of `outer`'s coefficients and `inner`
 * for `outer`'s own series variable:  sum_n outer_n(subs) * inner^n.
 * Variables not in `subs` stay as coefficients.
 */
inline Series compose(const Series& outer, const std::map<Var, Series>& subs, const Series& inner) {
    if (!inner[0].is_zero()) throw DivergentComposition("compose: inner series has a nonzero constant term");
    int N = std::min(outer.order(), inner.order());
    for (const auto& [v, s] : subs) N = std::min(N, s.order());

    std::map<Var, std::vector<Series>> powers;
    for (const auto& [v, s] : subs) powers[v].push_back(Series::constant(MultiPoly(1L), N));
    auto power_of = [&](Var v, int k) -> const Series& {
        auto& list = powers.at(v);
        while (static_cast<int>(list.size()) <= k) list.push_back((list.back() * subs.at(v)).truncate(N));
        return list[k];
    };

    // products of powers of the substituted series, keyed by their exponents
    std::map<Exponents, Series> products;
    auto product_of = [&](const Exponents& key) -> const Series& {
        auto it = products.find(key);
        if (it != products.end()) return it->second;
        Series term = Series::constant(MultiPoly(1L), N);
        bool first = true;
        for (const auto& [v, s] : subs) {
            const int i = static_cast<int>(v);
            if (key[i] == 0) continue;
            term = first ? power_of(v, key[i]) : term * power_of(v, key[i]);
            first = false;
        }
        return products.emplace(key, std::move(term)).first->second;
    };

    Series result(N), inner_pow = Series::constant(MultiPoly(1L), N);
    const Series inner_n = inner.truncate(N);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) inner_pow = inner_pow * inner_n;
        if (outer[n].is_zero()) continue;
        Series value(N);
        for (const auto& [e, c] : outer[n].terms()) {
            Exponents key{}, rest = e;
            for (const auto& [v, s] : subs) {
                const int i = static_cast<int>(v);
                key[i] = e[i];
                rest[i] = 0;
            }
            value += product_of(key) * MultiPoly::monomial(rest, c);
        }
        result += value * inner_pow;
    }
    return result;
}

}  // namespace bdes
