#pragma once

/**
 * @file bijections.hpp
 * @brief Constructive bijections between avoider classes, Dyck paths,
 * 2-Motzkin paths and binary words, with their inverses and exhaustive
 * statistic-transfer verification.
 *
 *   omega_f, omega_l : S_n(231)      -> D_n
 *   chi              : S_n(321)      -> D_n      (north = U, east = D)
 *   psi              : D_m           -> M2_{m-1} (m >= 1)
 *   phi_213_231      : S_n(213,231)  -> W_{n-1}  (n >= 1)
 *   phi_213_312      : S_n(213,312)  -> W_{n-1}  (n >= 1)
 *   phi_123_132      : S_n(123,132)  -> W_n^(1)  (n >= 1)
 *   phi_132_213      : S_n(132,213)  -> W_n^(1)  (n >= 1)
 *   phi_231_321      : S_n(231,321)  -> W_n^(1)  (n >= 1)
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "bdes/paths.hpp"
#include "bdes/permutation.hpp"

namespace bdes {

enum class BijectionId { omega_f, omega_l, chi, psi, phi_213_231, phi_213_312, phi_123_132, phi_132_213, phi_231_321 };

inline constexpr BijectionId kAllBijections[] = {
    BijectionId::omega_f,     BijectionId::omega_l,     BijectionId::chi,
    BijectionId::psi,         BijectionId::phi_213_231, BijectionId::phi_213_312,
    BijectionId::phi_123_132, BijectionId::phi_132_213, BijectionId::phi_231_321,
};

inline std::string to_string(BijectionId id) {
    switch (id) {
        case BijectionId::omega_f: return "omega_f";
        case BijectionId::omega_l: return "omega_l";
        case BijectionId::chi: return "chi";
        case BijectionId::psi: return "psi";
        case BijectionId::phi_213_231: return "phi_213_231";
        case BijectionId::phi_213_312: return "phi_213_312";
        case BijectionId::phi_123_132: return "phi_123_132";
        case BijectionId::phi_132_213: return "phi_132_213";
        case BijectionId::phi_231_321: return "phi_231_321";
    }
    return "?";
}

inline BijectionId parse_bijection(std::string_view name) {
    for (auto id : kAllBijections)
        if (to_string(id) == name) return id;
    throw InvalidInput("unknown bijection '" + std::string(name) + "'");
}

/// The avoider class a bijection's permutation side lives in.
inline PatternSet domain_patterns(BijectionId id) {
    switch (id) {
        case BijectionId::omega_f:
        case BijectionId::omega_l: return PatternSet::parse("231");
        case BijectionId::chi: return PatternSet::parse("321");
        case BijectionId::psi: return {};
        case BijectionId::phi_213_231: return PatternSet::parse("213,231");
        case BijectionId::phi_213_312: return PatternSet::parse("213,312");
        case BijectionId::phi_123_132: return PatternSet::parse("123,132");
        case BijectionId::phi_132_213: return PatternSet::parse("132,213");
        case BijectionId::phi_231_321: return PatternSet::parse("231,321");
    }
    return {};
}

namespace detail {

inline void require_domain(BijectionId id, const Permutation& p) {
    const auto patterns = domain_patterns(id);
    for (const auto& s : patterns.patterns())
        if (contains(p, s))
            throw DomainViolation(to_string(id) + ": " + p.to_string() + " contains the pattern " + s.to_string());
}

inline void omega_rec(std::span<const int> w, bool first_return, std::string& out) {
    if (w.empty()) return;
    const auto top = std::max_element(w.begin(), w.end()) - w.begin();
    auto left = w.subspan(0, top);
    auto right = w.subspan(top + 1);
    if (first_return) {
        out += 'U';
        omega_rec(left, true, out);
        out += 'D';
        omega_rec(right, true, out);
    } else {
        omega_rec(right, false, out);
        out += 'U';
        omega_rec(left, false, out);
        out += 'D';
    }
}

// Writes the permutation encoded by `p` using values base+1 .. base+|p|.
inline void omega_inv_rec(std::string_view p, bool first_return, int base, std::vector<int>& out) {
    if (p.empty()) return;
    auto [a, b] = return_decompose(DyckPath{std::string(p)}, first_return ? ReturnKind::first : ReturnKind::last);
    // sigma (left of the maximum) has the smaller letters
    const auto& sigma = first_return ? a : b;
    const auto& tau = first_return ? b : a;
    const int ls = sigma.semilength(), lt = tau.semilength();
    omega_inv_rec(sigma.steps, first_return, base, out);
    out.push_back(base + ls + lt + 1);
    omega_inv_rec(tau.steps, first_return, base + ls, out);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// omega_f, omega_l

inline DyckPath omega_f(const Permutation& p, bool check_domain = true) {
    if (check_domain) detail::require_domain(BijectionId::omega_f, p);
    DyckPath out;
    detail::omega_rec(p.letters(), true, out.steps);
    return out;
}

inline DyckPath omega_l(const Permutation& p, bool check_domain = true) {
    if (check_domain) detail::require_domain(BijectionId::omega_l, p);
    DyckPath out;
    detail::omega_rec(p.letters(), false, out.steps);
    return out;
}

inline Permutation omega_f_inverse(const DyckPath& p) {
    if (!validate(p)) throw InvalidInput("omega_f^-1: not a Dyck path");
    std::vector<int> out;
    detail::omega_inv_rec(p.steps, true, 0, out);
    return Permutation(std::move(out));
}

inline Permutation omega_l_inverse(const DyckPath& p) {
    if (!validate(p)) throw InvalidInput("omega_l^-1: not a Dyck path");
    std::vector<int> out;
    detail::omega_inv_rec(p.steps, false, 0, out);
    return Permutation(std::move(out));
}

// ---------------------------------------------------------------------------
// chi

/// Path hugging the diagonal that keeps every point (k, pi_k) to its right:
/// before the k-th east step the path has climbed to max(pi_1..pi_k).
inline DyckPath chi(const Permutation& p, bool check_domain = true) {
    if (check_domain) detail::require_domain(BijectionId::chi, p);
    DyckPath out;
    int height = 0;
    for (int k = 0; k < p.size(); ++k) {
        while (height < p[k]) {
            out.steps += 'U';
            ++height;
        }
        out.steps += 'D';
    }
    return out;
}

/// Peaks give the weak excedances; the remaining columns take the remaining
/// rows in increasing order.
inline Permutation chi_inverse(const DyckPath& path) {
    if (!validate(path)) throw InvalidInput("chi^-1: not a Dyck path");
    const int n = path.semilength();
    std::vector<int> value(n + 1, 0);
    std::vector<bool> row_used(n + 1, false);
    int ups = 0, downs = 0;
    const auto& s = path.steps;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'U') {
            ++ups;
            if (i + 1 < s.size() && s[i + 1] == 'D') {
                value[downs + 1] = ups;
                row_used[ups] = true;
            }
        } else {
            ++downs;
        }
    }
    int row = 1;
    for (int col = 1; col <= n; ++col) {
        if (value[col]) continue;
        while (row_used[row]) ++row;
        value[col] = row++;
    }
    return Permutation(std::vector<int>(value.begin() + 1, value.end()));
}

// ---------------------------------------------------------------------------
// psi

/// Step i (1 <= i < m) is read off the colours of U_i and D_{i+1}.
inline TwoMotzkinPath psi(const DyckPath& path) {
    if (!validate(path)) throw InvalidInput("psi: not a Dyck path");
    if (path.empty()) throw InvalidInput("psi: defined for semilength >= 1 only");
    const auto c = color_peaks(path);
    const auto ups = detail::step_positions(path.steps, 'U');
    const auto downs = detail::step_positions(path.steps, 'D');
    TwoMotzkinPath out;
    for (std::size_t i = 0; i + 1 < ups.size(); ++i) {
        const bool u_red = c.colors[ups[i]] == StepColor::red;
        const bool d_red = c.colors[downs[i + 1]] == StepColor::red;
        if (!u_red && d_red) out.steps.push_back(MotzkinStep::u);
        else if (u_red && !d_red) out.steps.push_back(MotzkinStep::d);
        else if (!u_red) out.steps.push_back(MotzkinStep::h0);
        else out.steps.push_back(MotzkinStep::h1);
    }
    return out;
}

/**
 * Inverse of psi. The word fixes the colour of every U_i and D_i (U_m and
 * D_1 are always red). The k-th red U and the k-th red D form the k-th peak,
 * and the blue steps strictly between two peaks must read D...DU...U, since
 * a blue U directly followed by a blue D would itself be a peak.
 */
inline DyckPath psi_inverse(const TwoMotzkinPath& alpha) {
    if (!validate(alpha)) throw InvalidInput("psi^-1: not a 2-Motzkin path");
    const int m = alpha.length() + 1;
    std::vector<bool> u_red(m + 1, false), d_red(m + 1, false);
    d_red[1] = true;
    u_red[m] = true;
    for (int i = 1; i < m; ++i) {
        auto s = alpha.steps[i - 1];
        u_red[i] = s == MotzkinStep::d || s == MotzkinStep::h1;
        d_red[i + 1] = s == MotzkinStep::u || s == MotzkinStep::h1;
    }
    std::vector<int> red_u, red_d;
    for (int i = 1; i <= m; ++i) {
        if (u_red[i]) red_u.push_back(i);
        if (d_red[i]) red_d.push_back(i);
    }
    if (red_u.size() != red_d.size()) throw InvalidInput("psi^-1: unbalanced colouring");
    DyckPath out;
    int next_u = 1, next_d = 1;
    for (std::size_t k = 0; k < red_u.size(); ++k) {
        for (; next_d < red_d[k]; ++next_d) out.steps += 'D';
        for (; next_u < red_u[k]; ++next_u) out.steps += 'U';
        out.steps += "UD";
        next_u = red_u[k] + 1;
        next_d = red_d[k] + 1;
    }
    for (; next_d <= m; ++next_d) out.steps += 'D';
    if (!validate(out) || psi(out) != alpha) throw InvalidInput("psi^-1: word is not in the image of psi");
    return out;
}

// ---------------------------------------------------------------------------
// Binary-word bijections

enum class MaximaVariant { rlmax_decreasing, rlmax_increasing, lrmax_increasing };

/**
 * The unique permutation with right-to-left (resp. left-to-right) maxima S,
 * where n = max(S). Blocks between consecutive maxima s_{i-1} < s_i hold the
 * letters s_{i-1}+1 .. s_i-1.
 *   rlmax_decreasing:  dec(s_{m-1},n) n ... dec(s_1,s_2) s_2 dec(0,s_1) s_1
 *   rlmax_increasing:  same with increasing blocks
 *   lrmax_increasing:  s_1 inc(0,s_1) s_2 inc(s_1,s_2) ... n inc(s_{m-1},n)
 */
inline Permutation reconstruct_from_maxima(std::vector<int> maxima, int n, MaximaVariant variant) {
    std::sort(maxima.begin(), maxima.end());
    if (std::adjacent_find(maxima.begin(), maxima.end()) != maxima.end())
        throw InvalidInput("reconstruct_from_maxima: repeated element");
    if (n == 0 && maxima.empty()) return Permutation{};
    if (maxima.empty() || maxima.back() != n)
        throw InvalidInput("reconstruct_from_maxima: n=" + std::to_string(n) + " must belong to the set");
    if (maxima.front() < 1) throw InvalidInput("reconstruct_from_maxima: elements must be positive");
    std::vector<int> out;
    auto block = [&](int lo, int hi, bool increasing) {
        if (increasing)
            for (int a = lo + 1; a < hi; ++a) out.push_back(a);
        else
            for (int a = hi - 1; a > lo; --a) out.push_back(a);
    };
    const int m = static_cast<int>(maxima.size());
    if (variant == MaximaVariant::lrmax_increasing) {
        for (int i = 0; i < m; ++i) {
            out.push_back(maxima[i]);
            block(i ? maxima[i - 1] : 0, maxima[i], true);
        }
    } else {
        const bool inc = variant == MaximaVariant::rlmax_increasing;
        for (int i = m - 1; i >= 0; --i) {
            block(i ? maxima[i - 1] : 0, maxima[i], inc);
            out.push_back(maxima[i]);
        }
    }
    return Permutation(std::move(out));
}

inline Permutation reconstruct_from_maxima(const std::vector<int>& maxima, MaximaVariant variant) {
    const int n = maxima.empty() ? 0 : *std::max_element(maxima.begin(), maxima.end());
    return reconstruct_from_maxima(maxima, n, variant);
}

namespace detail {

inline void require_nonempty(BijectionId id, int n) {
    if (n < 1) throw InvalidInput(to_string(id) + ": defined for n >= 1 only");
}

inline BinaryWord indicator_word(const std::vector<int>& letters, int n) {
    std::string bits(n, '0');
    for (int a : letters) bits[a - 1] = '1';
    return BinaryWord{std::move(bits)};
}

inline std::vector<int> ones_of(const BinaryWord& w) {
    std::vector<int> s;
    for (int k = 0; k < w.length(); ++k)
        if (w.bits[k] == '1') s.push_back(k + 1);
    return s;
}

}  // namespace detail

/// w_k = 1 if pi_k is the minimum of pi_k..pi_n, 0 if it is the maximum.
inline BinaryWord phi_213_231(const Permutation& p, bool check_domain = true) {
    detail::require_nonempty(BijectionId::phi_213_231, p.size());
    if (check_domain) detail::require_domain(BijectionId::phi_213_231, p);
    const int n = p.size();
    std::string bits(n - 1, '0');
    int lo = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (p[k] == lo) {
            bits[k] = '1';
            ++lo;
        }
    }
    return BinaryWord{std::move(bits)};
}

inline Permutation phi_213_231_inverse(const BinaryWord& w) {
    if (!validate(w)) throw InvalidInput("phi_213_231^-1: not a binary word");
    const int n = w.length() + 1;
    int lo = 1, hi = n;
    std::vector<int> out;
    for (char c : w.bits) out.push_back(c == '1' ? lo++ : hi--);
    out.push_back(lo);
    return Permutation(std::move(out));
}

/// w_k = 1 if the letter k appears before n.
inline BinaryWord phi_213_312(const Permutation& p, bool check_domain = true) {
    detail::require_nonempty(BijectionId::phi_213_312, p.size());
    if (check_domain) detail::require_domain(BijectionId::phi_213_312, p);
    const int n = p.size();
    std::string bits(n - 1, '0');
    for (int k = 0; p[k] != n; ++k) bits[p[k] - 1] = '1';
    return BinaryWord{std::move(bits)};
}

inline Permutation phi_213_312_inverse(const BinaryWord& w) {
    if (!validate(w)) throw InvalidInput("phi_213_312^-1: not a binary word");
    const int n = w.length() + 1;
    std::vector<int> out;
    for (int k = 1; k < n; ++k)
        if (w.bits[k - 1] == '1') out.push_back(k);
    out.push_back(n);
    for (int k = n - 1; k >= 1; --k)
        if (w.bits[k - 1] == '0') out.push_back(k);
    return Permutation(std::move(out));
}

inline BinaryWord phi_123_132(const Permutation& p, bool check_domain = true) {
    detail::require_nonempty(BijectionId::phi_123_132, p.size());
    if (check_domain) detail::require_domain(BijectionId::phi_123_132, p);
    return detail::indicator_word(statistic_set(p, StatSet::rlmax), p.size());
}

inline BinaryWord phi_132_213(const Permutation& p, bool check_domain = true) {
    detail::require_nonempty(BijectionId::phi_132_213, p.size());
    if (check_domain) detail::require_domain(BijectionId::phi_132_213, p);
    return detail::indicator_word(statistic_set(p, StatSet::rlmax), p.size());
}

inline BinaryWord phi_231_321(const Permutation& p, bool check_domain = true) {
    detail::require_nonempty(BijectionId::phi_231_321, p.size());
    if (check_domain) detail::require_domain(BijectionId::phi_231_321, p);
    return detail::indicator_word(statistic_set(p, StatSet::lrmax), p.size());
}

inline Permutation phi_123_132_inverse(const BinaryWord& w) {
    if (!validate(w)) throw InvalidInput("phi_123_132^-1: not a binary word");
    return reconstruct_from_maxima(detail::ones_of(w), w.length(), MaximaVariant::rlmax_decreasing);
}

inline Permutation phi_132_213_inverse(const BinaryWord& w) {
    if (!validate(w)) throw InvalidInput("phi_132_213^-1: not a binary word");
    return reconstruct_from_maxima(detail::ones_of(w), w.length(), MaximaVariant::rlmax_increasing);
}

inline Permutation phi_231_321_inverse(const BinaryWord& w) {
    if (!validate(w)) throw InvalidInput("phi_231_321^-1: not a binary word");
    return reconstruct_from_maxima(detail::ones_of(w), w.length(), MaximaVariant::lrmax_increasing);
}

// ---------------------------------------------------------------------------
// Uniform interface

using CombinatorialObject = std::variant<Permutation, DyckPath, TwoMotzkinPath, BinaryWord>;

inline std::string to_string(const CombinatorialObject& obj) {
    struct V {
        std::string operator()(const Permutation& p) const { return p.to_string(); }
        std::string operator()(const DyckPath& p) const { return p.steps; }
        std::string operator()(const TwoMotzkinPath& p) const { return bdes::to_string(p); }
        std::string operator()(const BinaryWord& w) const { return w.bits; }
    };
    return std::visit(V{}, obj);
}

namespace detail {

template <class T>
const T& expect(const CombinatorialObject& obj, BijectionId id, const char* what) {
    if (auto p = std::get_if<T>(&obj)) return *p;
    throw InvalidInput(to_string(id) + ": expected " + what);
}

}  // namespace detail

inline CombinatorialObject apply(BijectionId id, const CombinatorialObject& x, bool check_domain = true) {
    using detail::expect;
    switch (id) {
        case BijectionId::omega_f: return omega_f(expect<Permutation>(x, id, "a permutation"), check_domain);
        case BijectionId::omega_l: return omega_l(expect<Permutation>(x, id, "a permutation"), check_domain);
        case BijectionId::chi: return chi(expect<Permutation>(x, id, "a permutation"), check_domain);
        case BijectionId::psi: return psi(expect<DyckPath>(x, id, "a Dyck path"));
        case BijectionId::phi_213_231: return phi_213_231(expect<Permutation>(x, id, "a permutation"), check_domain);
        case BijectionId::phi_213_312: return phi_213_312(expect<Permutation>(x, id, "a permutation"), check_domain);
        case BijectionId::phi_123_132: return phi_123_132(expect<Permutation>(x, id, "a permutation"), check_domain);
        case BijectionId::phi_132_213: return phi_132_213(expect<Permutation>(x, id, "a permutation"), check_domain);
        case BijectionId::phi_231_321: return phi_231_321(expect<Permutation>(x, id, "a permutation"), check_domain);
    }
    throw InvalidInput("unknown bijection");
}

inline void require_codomain(BijectionId id, const BinaryWord& w) {
    switch (id) {
        case BijectionId::phi_123_132:
        case BijectionId::phi_132_213:
        case BijectionId::phi_231_321:
            if (w.bits.empty() || w.bits.back() != '1')
                throw InvalidInput(to_string(id) + "^-1: word must be nonempty and end in 1");
            break;
        default: break;
    }
}

inline CombinatorialObject invert(BijectionId id, const CombinatorialObject& y) {
    using detail::expect;
    switch (id) {
        case BijectionId::omega_f: return omega_f_inverse(expect<DyckPath>(y, id, "a Dyck path"));
        case BijectionId::omega_l: return omega_l_inverse(expect<DyckPath>(y, id, "a Dyck path"));
        case BijectionId::chi: return chi_inverse(expect<DyckPath>(y, id, "a Dyck path"));
        case BijectionId::psi: return psi_inverse(expect<TwoMotzkinPath>(y, id, "a 2-Motzkin path"));
        default: break;
    }
    const auto& w = expect<BinaryWord>(y, id, "a binary word");
    require_codomain(id, w);
    switch (id) {
        case BijectionId::phi_213_231: return phi_213_231_inverse(w);
        case BijectionId::phi_213_312: return phi_213_312_inverse(w);
        case BijectionId::phi_123_132: return phi_123_132_inverse(w);
        case BijectionId::phi_132_213: return phi_132_213_inverse(w);
        case BijectionId::phi_231_321: return phi_231_321_inverse(w);
        default: break;
    }
    throw InvalidInput("unknown bijection");
}

/// Parse text as the domain type (apply) or codomain type (invert) of `id`.
inline CombinatorialObject parse_object(BijectionId id, std::string_view text, bool codomain) {
    if (id == BijectionId::psi) {
        if (codomain) return parse_motzkin(text);
        return parse_dyck(text);
    }
    if (!codomain) return Permutation::parse(text);
    switch (id) {
        case BijectionId::omega_f:
        case BijectionId::omega_l:
        case BijectionId::chi: return parse_dyck(text);
        default: return parse_binary(text);
    }
}

// ---------------------------------------------------------------------------
// Exhaustive verification

struct IdentityCheck {
    std::string name;
    int n = 0;
    std::uint64_t population = 0;
    std::uint64_t failures = 0;
    std::string witness;  // first failing object, if any

    bool pass() const { return failures == 0; }
};

struct TransferReport {
    BijectionId id;
    int n;
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass(); });
    }
};

/// Size index n -> domain objects (S_n(Pi), or D_n for psi).
inline std::vector<CombinatorialObject> domain_objects(BijectionId id, int n) {
    std::vector<CombinatorialObject> out;
    if (id == BijectionId::psi) {
        if (n >= 1)
            for (auto& p : all_dyck_paths(n)) out.emplace_back(std::move(p));
        return out;
    }
    const bool words = id != BijectionId::omega_f && id != BijectionId::omega_l && id != BijectionId::chi;
    if (words && n < 1) return out;
    for (auto& p : enumerate_avoiders(n, domain_patterns(id))) out.emplace_back(std::move(p));
    return out;
}

inline std::vector<CombinatorialObject> codomain_objects(BijectionId id, int n) {
    std::vector<CombinatorialObject> out;
    switch (id) {
        case BijectionId::omega_f:
        case BijectionId::omega_l:
        case BijectionId::chi:
            for (auto& p : all_dyck_paths(n)) out.emplace_back(std::move(p));
            break;
        case BijectionId::psi:
            if (n >= 1)
                for (auto& p : all_two_motzkin_paths(n - 1)) out.emplace_back(std::move(p));
            break;
        case BijectionId::phi_213_231:
        case BijectionId::phi_213_312:
            if (n >= 1)
                for (auto& w : all_binary_words(n - 1)) out.emplace_back(std::move(w));
            break;
        default:
            if (n >= 1)
                for (auto& w : all_binary_words(n))
                    if (w.bits.back() == '1') out.emplace_back(std::move(w));
            break;
    }
    return out;
}

namespace detail {

using ObjectStat = std::function<int(const CombinatorialObject&)>;

struct TransferIdentity {
    std::string name;
    ObjectStat on_domain;
    ObjectStat on_image;
};

inline ObjectStat perm_stat(StatName s) {
    return [s](const CombinatorialObject& o) { return statistic(std::get<Permutation>(o), s); };
}

inline ObjectStat reversed_perm_stat(StatName s) {
    return [s](const CombinatorialObject& o) {
        return statistic(symmetry(std::get<Permutation>(o), Symmetry::reverse), s);
    };
}

inline ObjectStat dyck_occ(std::string factor, bool level0 = false) {
    return [factor, level0](const CombinatorialObject& o) { return occ_factor(std::get<DyckPath>(o), factor, level0); };
}

inline ObjectStat dyck_stats(std::vector<PathStat> stats) {
    return [stats](const CombinatorialObject& o) {
        int total = 0;
        for (auto s : stats) total += path_statistic(std::get<DyckPath>(o), s);
        return total;
    };
}

inline ObjectStat word_occ(std::vector<std::string> factors) {
    return [factors](const CombinatorialObject& o) {
        int total = 0;
        for (const auto& f : factors) total += occ_factor(std::get<BinaryWord>(o), f);
        return total;
    };
}

inline std::vector<TransferIdentity> transfer_identities(BijectionId id) {
    using K = StatName::Kind;
    switch (id) {
        case BijectionId::omega_f:
            return {{"bdes = occ_DUU", perm_stat(K::bdes), dyck_occ("DUU")},
                    {"des = occ_DU", perm_stat(K::des), dyck_occ("DU")}};
        case BijectionId::omega_l:
            return {{"pk = occ_DUU", perm_stat(K::pk), dyck_occ("DUU")},
                    {"des = occ_DU", perm_stat(K::des), dyck_occ("DU")}};
        case BijectionId::chi:
            return {
                {"des = occ_UDD", perm_stat(K::des), dyck_occ("UDD")},
                {"sdes = occ0_UUDD", perm_stat(K::sdes), dyck_occ("UUDD", true)},
                {"hibasc = hibasc(path)", perm_stat(K::hibasc), dyck_stats({PathStat::hibasc})},
                {"lobasc = lobasc(path)", perm_stat(K::lobasc), dyck_stats({PathStat::lobasc})},
                {"lbasc = hibasc+lobasc+ini_UU", perm_stat(K::lbasc),
                 dyck_stats({PathStat::hibasc, PathStat::lobasc, PathStat::ini_UU})},
                {"bdes(pi^r) = hibasc+lobasc", reversed_perm_stat(K::bdes),
                 dyck_stats({PathStat::hibasc, PathStat::lobasc})},
                {"rbdes(pi^r) = hibasc+lobasc+ini_UU", reversed_perm_stat(K::rbdes),
                 dyck_stats({PathStat::hibasc, PathStat::lobasc, PathStat::ini_UU})},
            };
        case BijectionId::psi:
            return {
                {"pk = d + h1 + 1", [](const CombinatorialObject& o) { return path_statistic(std::get<DyckPath>(o), PathStat::pk); },
                 [](const CombinatorialObject& o) {
                     const auto& a = std::get<TwoMotzkinPath>(o);
                     return count_step(a, MotzkinStep::d) + count_step(a, MotzkinStep::h1) + 1;
                 }},
                {"con = d", [](const CombinatorialObject& o) { return path_statistic(std::get<DyckPath>(o), PathStat::con); },
                 [](const CombinatorialObject& o) { return count_step(std::get<TwoMotzkinPath>(o), MotzkinStep::d); }},
            };
        case BijectionId::phi_213_231:
        case BijectionId::phi_213_312: return {{"bdes = occ_01", perm_stat(K::bdes), word_occ({"01"})}};
        case BijectionId::phi_123_132:
        case BijectionId::phi_132_213: return {{"bdes = occ_10 + occ_011", perm_stat(K::bdes), word_occ({"10", "011"})}};
        case BijectionId::phi_231_321: return {{"bdes = occ_001", perm_stat(K::bdes), word_occ({"001"})}};
    }
    return {};
}

inline bool in_codomain(BijectionId id, const CombinatorialObject& y, int n) {
    switch (id) {
        case BijectionId::omega_f:
        case BijectionId::omega_l:
        case BijectionId::chi: {
            auto p = std::get_if<DyckPath>(&y);
            return p && validate(*p) && p->semilength() == n;
        }
        case BijectionId::psi: {
            auto p = std::get_if<TwoMotzkinPath>(&y);
            return p && validate(*p) && p->length() == n - 1;
        }
        case BijectionId::phi_213_231:
        case BijectionId::phi_213_312: {
            auto w = std::get_if<BinaryWord>(&y);
            return w && validate(*w) && w->length() == n - 1;
        }
        default: {
            auto w = std::get_if<BinaryWord>(&y);
            return w && validate(*w) && w->length() == n && !w->bits.empty() && w->bits.back() == '1';
        }
    }
}

}  // namespace detail

/// Checks every statistic identity attached to `id` over the whole domain at size n.
inline TransferReport verify_transfer(BijectionId id, int n, const Guards& guards = {}) {
    guards.check(n, domain_patterns(id).empty() ? PatternSet::parse("1") : domain_patterns(id));
    auto domain = domain_objects(id, n);
    auto identities = detail::transfer_identities(id);
    TransferReport report{id, n, {}};
    for (const auto& ident : identities) report.checks.push_back({ident.name, n, domain.size(), 0, {}});
    for (const auto& x : domain) {
        const auto y = bdes::apply(id, x, false);
        for (std::size_t i = 0; i < identities.size(); ++i) {
            if (identities[i].on_domain(x) != identities[i].on_image(y)) {
                auto& c = report.checks[i];
                if (c.failures++ == 0) c.witness = to_string(x);
            }
        }
    }
    return report;
}

/// Round trips in both directions, codomain membership, and equal cardinalities.
inline TransferReport verify_round_trip(BijectionId id, int n, const Guards& guards = {}) {
    guards.check(n, domain_patterns(id).empty() ? PatternSet::parse("1") : domain_patterns(id));
    auto domain = domain_objects(id, n);
    auto codomain = codomain_objects(id, n);
    IdentityCheck fwd{"invert(apply(x)) = x, apply(x) in codomain", n, domain.size(), 0, {}};
    IdentityCheck bwd{"apply(invert(y)) = y", n, codomain.size(), 0, {}};
    IdentityCheck card{"|domain| = |codomain|", n, domain.size(), domain.size() == codomain.size() ? 0u : 1u, {}};
    if (!card.pass()) card.witness = std::to_string(domain.size()) + " vs " + std::to_string(codomain.size());
    for (const auto& x : domain) {
        bool ok = false;
        try {
            auto y = bdes::apply(id, x);
            ok = detail::in_codomain(id, y, n) && invert(id, y) == x;
        } catch (const Error&) {
            ok = false;
        }
        if (!ok && fwd.failures++ == 0) fwd.witness = to_string(x);
    }
    for (const auto& y : codomain) {
        bool ok = false;
        try {
            ok = bdes::apply(id, invert(id, y)) == y;
        } catch (const Error&) {
            ok = false;
        }
        if (!ok && bwd.failures++ == 0) bwd.witness = to_string(y);
    }
    return {id, n, {fwd, bwd, card}};
}

/// bdes-preserving composites between avoider classes, and the
/// omega_l^-1 o omega_f map sending bdes to pk while keeping des.
inline std::vector<IdentityCheck> verify_composites(int n) {
    using K = StatName::Kind;
    std::vector<IdentityCheck> out;
    auto run = [&](const std::string& name, const PatternSet& from, auto&& map, std::vector<std::pair<StatName, StatName>> stats) {
        IdentityCheck c{name, n, 0, 0, {}};
        for_each_avoider(n, from, [&](const Permutation& p) {
            ++c.population;
            const Permutation q = map(p);
            bool ok = true;
            for (auto [a, b] : stats) ok = ok && statistic(p, a) == statistic(q, b);
            if (!ok && c.failures++ == 0) c.witness = p.to_string();
        });
        out.push_back(std::move(c));
    };
    run("omega_l^-1 o omega_f: bdes->pk, des->des", PatternSet::parse("231"),
        [](const Permutation& p) { return omega_l_inverse(omega_f(p)); },
        {{K::bdes, K::pk}, {K::des, K::des}});
    if (n >= 1) {
        run("phi_213_312^-1 o phi_213_231 preserves bdes", PatternSet::parse("213,231"),
            [](const Permutation& p) {
                auto q = phi_213_312_inverse(phi_213_231(p));
                if (!PatternSet::parse("213,312").avoided_by(q)) throw InternalConsistency("composite left S_n(213,312)");
                return q;
            },
            {{K::bdes, K::bdes}});
        run("phi_132_213^-1 o phi_123_132 preserves bdes", PatternSet::parse("123,132"),
            [](const Permutation& p) {
                auto q = phi_132_213_inverse(phi_123_132(p));
                if (!PatternSet::parse("132,213").avoided_by(q)) throw InternalConsistency("composite left S_n(132,213)");
                return q;
            },
            {{K::bdes, K::bdes}});
    }
    return out;
}

}  // namespace bdes
