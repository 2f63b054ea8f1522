#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations in one-line notation, classical pattern containment,
 * avoider enumeration and every descent/ascent-type statistic used by the
 * rest of the library.
 *
 * Positions are 1-based in all documentation (matching one-line notation)
 * and 0-based in code.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bdes/error.hpp"

namespace bdes {

class Permutation {
public:
    Permutation() = default;

    /// Throws InvalidInput unless `letters` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
        std::vector<bool> seen(letters_.size() + 1, false);
        for (int a : letters_) {
            if (a < 1 || a > static_cast<int>(letters_.size()) || seen[a])
                throw InvalidInput("not a permutation of 1.." + std::to_string(letters_.size()) + ": " +
                                   join(letters_));
            seen[a] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v), Trusted{});
    }

    /// Accepts "2413756" (one digit per letter) or "10,2,1,...".
    static Permutation parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(letters_.size()); }
    bool empty() const noexcept { return letters_.empty(); }
    int operator[](std::size_t i) const noexcept { return letters_[i]; }
    const std::vector<int>& letters() const noexcept { return letters_; }

    /// Digit string for n <= 9, comma-separated otherwise.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    friend Permutation standardize(std::span<const int> word);
    friend class AvoiderEnumerator;
    struct Trusted {};
    Permutation(std::vector<int> letters, Trusted) : letters_(std::move(letters)) {}

    static std::string join(const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s;
    }

    std::vector<int> letters_;
};

inline std::string Permutation::to_string() const {
    if (size() <= 9) {
        std::string s;
        for (int a : letters_) s += static_cast<char>('0' + a);
        return s;
    }
    return join(letters_);
}

inline Permutation Permutation::parse(std::string_view text) {
    std::vector<int> v;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            auto tok = text.substr(start, end - start);
            if (tok.empty()) throw InvalidInput("empty letter in permutation '" + std::string(text) + "'");
            int value = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') throw InvalidInput("bad letter in permutation '" + std::string(text) + "'");
                value = value * 10 + (c - '0');
            }
            v.push_back(value);
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw InvalidInput("bad letter in permutation '" + std::string(text) + "'");
            v.push_back(c - '0');
        }
    }
    return Permutation(std::move(v));
}

/// Replace the i-th smallest letter by i. Letters must be distinct.
inline Permutation standardize(std::span<const int> word) {
    std::vector<int> order(word.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
    std::vector<int> out(word.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        if (rank > 0 && word[order[rank]] == word[order[rank - 1]])
            throw InvalidInput("standardize: duplicate letter " + std::to_string(word[order[rank]]));
        out[order[rank]] = static_cast<int>(rank) + 1;
    }
    return Permutation(std::move(out), Permutation::Trusted{});
}

enum class Symmetry { reverse, complement, reverse_complement };

inline Permutation symmetry(const Permutation& p, Symmetry kind) {
    const int n = p.size();
    std::vector<int> v = p.letters();
    if (kind != Symmetry::complement) std::reverse(v.begin(), v.end());
    if (kind != Symmetry::reverse)
        for (int& a : v) a = n + 1 - a;
    return Permutation(std::move(v));
}

namespace detail {

// Backtracking occurrence search. When forced_index >= 0 the pattern letter
// at that index must sit at text position forced_pos.
inline bool match_from(const std::vector<int>& text, const std::vector<int>& pat, std::vector<int>& chosen,
                       int next_pos, int forced_index, int forced_pos) {
    const int j = static_cast<int>(chosen.size());
    const int k = static_cast<int>(pat.size());
    const int n = static_cast<int>(text.size());
    if (j == k) return true;
    int lo = next_pos;
    int hi = n - (k - j);
    if (j == forced_index) {
        if (forced_pos < lo || forced_pos > hi) return false;
        lo = hi = forced_pos;
    } else if (forced_index > j) {
        hi = std::min(hi, forced_pos - (forced_index - j));
    }
    for (int p = lo; p <= hi; ++p) {
        bool ok = true;
        for (int i = 0; i < j && ok; ++i)
            ok = (text[chosen[i]] < text[p]) == (pat[i] < pat[j]);
        if (!ok) continue;
        chosen.push_back(p);
        if (match_from(text, pat, chosen, p + 1, forced_index, forced_pos)) return true;
        chosen.pop_back();
    }
    return false;
}

/// Occurrence of `pat` whose largest letter lands on text position `pos`.
inline bool contains_through_max(const std::vector<int>& text, const std::vector<int>& pat, int pos) {
    if (pat.size() > text.size()) return false;
    const int max_index = static_cast<int>(std::max_element(pat.begin(), pat.end()) - pat.begin());
    std::vector<int> chosen;
    chosen.reserve(pat.size());
    return match_from(text, pat, chosen, 0, max_index, pos);
}

}  // namespace detail

/// True iff some subsequence of `pi` standardizes to `sigma`.
inline bool contains(const Permutation& pi, const Permutation& sigma) {
    const auto& a = pi.letters();
    const auto& s = sigma.letters();
    const int n = pi.size();
    if (sigma.size() > n) return false;
    if (sigma.size() == 0) return true;
    if (sigma.size() == 3) {
        const bool r01 = s[0] < s[1], r02 = s[0] < s[2], r12 = s[1] < s[2];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if ((a[i] < a[j]) != r01) continue;
                for (int k = j + 1; k < n; ++k)
                    if ((a[i] < a[k]) == r02 && (a[j] < a[k]) == r12) return true;
            }
        return false;
    }
    std::vector<int> chosen;
    return detail::match_from(a, s, chosen, 0, -1, -1);
}

/// A set of classical patterns, kept sorted and duplicate-free.
class PatternSet {
public:
    PatternSet() = default;
    explicit PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
        std::sort(patterns_.begin(), patterns_.end());
        patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
    }

    /// "" is the empty set; otherwise comma-separated patterns, e.g. "213,231".
    static PatternSet parse(std::string_view text) {
        std::vector<Permutation> pats;
        std::size_t start = 0;
        while (start < text.size()) {
            auto end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            auto tok = text.substr(start, end - start);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            if (tok.empty()) throw InvalidInput("empty pattern in '" + std::string(text) + "'");
            pats.push_back(Permutation::parse(tok));
            start = end + 1;
        }
        return PatternSet(std::move(pats));
    }

    const std::vector<Permutation>& patterns() const noexcept { return patterns_; }
    bool empty() const noexcept { return patterns_.empty(); }
    std::size_t size() const noexcept { return patterns_.size(); }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < patterns_.size(); ++i) {
            if (i) s += ',';
            s += patterns_[i].to_string();
        }
        return s;
    }

    PatternSet reverse_complement() const {
        std::vector<Permutation> v;
        for (const auto& p : patterns_) v.push_back(symmetry(p, Symmetry::reverse_complement));
        return PatternSet(std::move(v));
    }

    /// Same value for a set and its reverse-complement.
    std::string canonical_id() const {
        auto a = to_string();
        auto b = reverse_complement().to_string();
        return "{" + std::min(a, b) + "}";
    }

    bool avoided_by(const Permutation& pi) const {
        return std::none_of(patterns_.begin(), patterns_.end(),
                            [&](const Permutation& s) { return contains(pi, s); });
    }

    friend bool operator==(const PatternSet&, const PatternSet&) = default;
    friend auto operator<=>(const PatternSet&, const PatternSet&) = default;

private:
    std::vector<Permutation> patterns_;
};

// ---------------------------------------------------------------------------
// Statistics

struct StatName {
    enum class Kind { des, des_r, bdes, sdes, lddes, pk, rbdes, basc, lbasc, hibasc, lobasc };

    Kind kind = Kind::bdes;
    int r = 0;  // only meaningful for des_r

    StatName() = default;
    StatName(Kind k, int r_ = 0) : kind(k), r(r_) {  // NOLINT(google-explicit-constructor)
        if (kind == Kind::des_r && r < 0) throw InvalidInput("des_r needs r >= 0");
        if (kind == Kind::des_r && r == 0) kind = Kind::des;
        if (kind == Kind::des_r && r == 1) kind = Kind::bdes;
        if (kind != Kind::des_r) r = (kind == Kind::bdes) ? 1 : 0;
    }

    static StatName des_r(int r) { return {Kind::des_r, r}; }

    /// Descent threshold for the des/bdes/des_r family, -1 otherwise.
    int descent_threshold() const {
        switch (kind) {
            case Kind::des: return 0;
            case Kind::bdes: return 1;
            case Kind::des_r: return r;
            default: return -1;
        }
    }

    static StatName parse(std::string_view text) {
        static const std::pair<std::string_view, Kind> names[] = {
            {"des", Kind::des},       {"bdes", Kind::bdes},   {"sdes", Kind::sdes},     {"lddes", Kind::lddes},
            {"pk", Kind::pk},         {"rbdes", Kind::rbdes}, {"basc", Kind::basc},     {"lbasc", Kind::lbasc},
            {"hibasc", Kind::hibasc}, {"lobasc", Kind::lobasc},
        };
        for (auto [name, kind] : names)
            if (text == name) return {kind};
        if (text.starts_with("des_r(") && text.ends_with(")")) {
            auto inner = text.substr(6, text.size() - 7);
            if (!inner.empty() && std::all_of(inner.begin(), inner.end(), [](char c) { return c >= '0' && c <= '9'; }))
                return des_r(std::stoi(std::string(inner)));
        }
        throw InvalidInput("unknown statistic '" + std::string(text) + "'");
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::des: return "des";
            case Kind::des_r: return "des_r(" + std::to_string(r) + ")";
            case Kind::bdes: return "bdes";
            case Kind::sdes: return "sdes";
            case Kind::lddes: return "lddes";
            case Kind::pk: return "pk";
            case Kind::rbdes: return "rbdes";
            case Kind::basc: return "basc";
            case Kind::lbasc: return "lbasc";
            case Kind::hibasc: return "hibasc";
            case Kind::lobasc: return "lobasc";
        }
        return "?";
    }

    friend bool operator==(const StatName&, const StatName&) = default;
};

inline int des_r(const Permutation& p, int r) {
    int count = 0;
    for (int k = 0; k + 1 < p.size(); ++k)
        if (p[k] > p[k + 1] + r) ++count;
    return count;
}

inline int statistic(const Permutation& p, StatName stat) {
    using K = StatName::Kind;
    const int n = p.size();
    int count = 0;
    switch (stat.kind) {
        case K::des:
        case K::bdes:
        case K::des_r: return des_r(p, stat.descent_threshold());
        case K::sdes:
            for (int k = 0; k + 1 < n; ++k) count += (p[k] == p[k + 1] + 1);
            return count;
        case K::lddes:
            if (n >= 2 && p[0] > p[1]) ++count;
            for (int k = 1; k + 1 < n; ++k) count += (p[k - 1] > p[k] && p[k] > p[k + 1]);
            return count;
        case K::pk:
            for (int k = 1; k + 1 < n; ++k) count += (p[k - 1] < p[k] && p[k] > p[k + 1]);
            return count;
        case K::rbdes:
            // big descents of the word p0
            return des_r(p, 1) + (n > 0 && p[n - 1] > 1 ? 1 : 0);
        case K::basc:
            for (int k = 0; k + 1 < n; ++k) count += (p[k] + 1 < p[k + 1]);
            return count;
        case K::lbasc:
            for (int k = 0; k + 1 < n; ++k) count += (p[k] + 1 < p[k + 1]);
            return count + (n > 0 && p[0] > 1 ? 1 : 0);
        case K::hibasc:
        case K::lobasc: {
            const bool high = stat.kind == K::hibasc;
            // big ascent at 1-based k; high iff k+1 is a weak excedance
            for (int k = 0; k + 1 < n; ++k) {
                if (p[k] + 1 >= p[k + 1]) continue;
                const bool weak_exc = p[k + 1] >= k + 2;
                count += (weak_exc == high);
            }
            return count;
        }
    }
    throw InvalidInput("unknown statistic");
}

enum class StatSet { des_r, bdes, rlmax, lrmax, weak_excedances };

/// Positions (des_r, bdes, weak_excedances) or letter values (rlmax, lrmax),
/// in increasing order.
inline std::vector<int> statistic_set(const Permutation& p, StatSet which, int r = 0) {
    const int n = p.size();
    std::vector<int> out;
    switch (which) {
        case StatSet::bdes: r = 1; [[fallthrough]];
        case StatSet::des_r:
            for (int k = 0; k + 1 < n; ++k)
                if (p[k] > p[k + 1] + r) out.push_back(k + 1);
            break;
        case StatSet::rlmax: {
            int best = 0;
            for (int k = n - 1; k >= 0; --k)
                if (p[k] > best) {
                    best = p[k];
                    out.push_back(p[k]);
                }
            std::sort(out.begin(), out.end());
            break;
        }
        case StatSet::lrmax: {
            int best = 0;
            for (int k = 0; k < n; ++k)
                if (p[k] > best) {
                    best = p[k];
                    out.push_back(p[k]);
                }
            break;
        }
        case StatSet::weak_excedances:
            for (int k = 0; k < n; ++k)
                if (p[k] >= k + 1) out.push_back(k + 1);
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

/// Largest n for which exhaustive enumeration is allowed.
struct Guards {
    int max_n_unrestricted = 11;  // for the empty pattern set
    int max_n_restricted = 14;    // for any nonempty pattern set

    void check(int n, const PatternSet& patterns) const {
        if (n < 0) throw InvalidInput("n must be non-negative");
        if (patterns.empty() && n > max_n_unrestricted)
            throw ResourceGuard("n=" + std::to_string(n) + " exceeds guard max_n_unrestricted=" +
                                std::to_string(max_n_unrestricted));
        if (!patterns.empty() && n > max_n_restricted)
            throw ResourceGuard("n=" + std::to_string(n) + " exceeds guard max_n_restricted=" +
                                std::to_string(max_n_restricted));
    }
};

class AvoiderEnumerator {
public:
    /// Calls visit(pi) for every pi in S_n(patterns), in lexicographic order.
    template <class Visit>
    static void run(int n, const PatternSet& patterns, Visit&& visit) {
        if (n < 0) throw InvalidInput("n must be non-negative");
        if (patterns.empty()) {
            std::vector<int> v(n);
            std::iota(v.begin(), v.end(), 1);
            do {
                visit(Permutation(v, Permutation::Trusted{}));
            } while (std::next_permutation(v.begin(), v.end()));
            return;
        }
        // S_m(patterns) is closed under deleting the largest letter, so grow
        // level by level by inserting m and rejecting new occurrences.
        std::vector<std::vector<int>> level{{}};
        for (int m = 1; m <= n; ++m) {
            std::vector<std::vector<int>> next;
            for (const auto& base : level) {
                for (int pos = 0; pos < m; ++pos) {
                    std::vector<int> cand;
                    cand.reserve(m);
                    cand.insert(cand.end(), base.begin(), base.begin() + pos);
                    cand.push_back(m);
                    cand.insert(cand.end(), base.begin() + pos, base.end());
                    bool ok = true;
                    for (const auto& s : patterns.patterns())
                        if (detail::contains_through_max(cand, s.letters(), pos)) {
                            ok = false;
                            break;
                        }
                    if (ok) next.push_back(std::move(cand));
                }
            }
            level = std::move(next);
        }
        std::sort(level.begin(), level.end());
        for (auto& v : level) visit(Permutation(std::move(v), Permutation::Trusted{}));
    }
};

template <class Visit>
void for_each_avoider(int n, const PatternSet& patterns, Visit&& visit) {
    AvoiderEnumerator::run(n, patterns, std::forward<Visit>(visit));
}

inline std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& patterns) {
    std::vector<Permutation> out;
    for_each_avoider(n, patterns, [&](Permutation p) { out.push_back(std::move(p)); });
    return out;
}

struct DistributionTable {
    int n = 0;
    StatName stat;
    PatternSet pattern_set;
    std::vector<std::uint64_t> counts;  // counts[k] = #{pi : stat(pi) = k}, k = 0..n

    std::uint64_t total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }
};

inline DistributionTable distribution_table(int n, const PatternSet& patterns, StatName stat,
                                            const Guards& guards = {}) {
    guards.check(n, patterns);
    DistributionTable table{n, stat, patterns, std::vector<std::uint64_t>(n + 1, 0)};
    for_each_avoider(n, patterns, [&](const Permutation& p) { ++table.counts[statistic(p, stat)]; });
    return table;
}

/// joint[a][b] = #{pi : first(pi) = a, second(pi) = b}.
inline std::vector<std::vector<std::uint64_t>> joint_table(int n, const PatternSet& patterns, StatName first,
                                                           StatName second, const Guards& guards = {}) {
    guards.check(n, patterns);
    std::vector<std::vector<std::uint64_t>> joint(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for_each_avoider(n, patterns, [&](const Permutation& p) { ++joint[statistic(p, first)][statistic(p, second)]; });
    return joint;
}

}  // namespace bdes
