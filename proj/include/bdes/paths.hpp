#pragma once

/**
 * @file paths.hpp
 * @brief Dyck paths, 2-Motzkin paths and binary words, with the factor, run
 * and peak-colouring statistics the bijections translate into.
 *
 * Heights: U = +1, D = -1, starting at 0. Factor occurrences are counted
 * with a sliding window, so overlapping occurrences all count.
 */

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bdes/error.hpp"

namespace bdes {

struct DyckPath {
    std::string steps;  // word over {U, D}

    int semilength() const { return static_cast<int>(steps.size() / 2); }
    bool empty() const { return steps.empty(); }
    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;
};

enum class MotzkinStep { u, d, h0, h1 };

struct TwoMotzkinPath {
    std::vector<MotzkinStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
    friend bool operator==(const TwoMotzkinPath&, const TwoMotzkinPath&) = default;
    friend auto operator<=>(const TwoMotzkinPath&, const TwoMotzkinPath&) = default;
};

struct BinaryWord {
    std::string bits;  // most significant first, as written

    int length() const { return static_cast<int>(bits.size()); }
    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;
};

inline bool validate(const DyckPath& p) {
    int h = 0;
    for (char c : p.steps) {
        if (c == 'U') ++h;
        else if (c == 'D') --h;
        else return false;
        if (h < 0) return false;
    }
    return h == 0;
}

inline bool validate(const TwoMotzkinPath& p) {
    int h = 0;
    for (auto s : p.steps) {
        if (s == MotzkinStep::u) ++h;
        if (s == MotzkinStep::d) --h;
        if (h < 0) return false;
    }
    return h == 0;
}

inline bool validate(const BinaryWord& w) {
    return w.bits.find_first_not_of("01") == std::string::npos;
}

inline DyckPath parse_dyck(std::string_view text) {
    DyckPath p{std::string(text)};
    if (!validate(p)) throw InvalidInput("not a Dyck path: '" + std::string(text) + "'");
    return p;
}

inline BinaryWord parse_binary(std::string_view text) {
    BinaryWord w{std::string(text)};
    if (!validate(w)) throw InvalidInput("not a binary word: '" + std::string(text) + "'");
    return w;
}

inline std::string to_string(MotzkinStep s) {
    switch (s) {
        case MotzkinStep::u: return "u";
        case MotzkinStep::d: return "d";
        case MotzkinStep::h0: return "h0";
        case MotzkinStep::h1: return "h1";
    }
    return "?";
}

/// Space-separated tokens, e.g. "h1 u h1 h0 u d d".
inline std::string to_string(const TwoMotzkinPath& p) {
    std::string s;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (i) s += ' ';
        s += to_string(p.steps[i]);
    }
    return s;
}

inline TwoMotzkinPath parse_motzkin(std::string_view text) {
    TwoMotzkinPath p;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == ',') {
            ++i;
            continue;
        }
        auto end = text.find_first_of(" ,", i);
        if (end == std::string_view::npos) end = text.size();
        auto tok = text.substr(i, end - i);
        if (tok == "u") p.steps.push_back(MotzkinStep::u);
        else if (tok == "d") p.steps.push_back(MotzkinStep::d);
        else if (tok == "h0") p.steps.push_back(MotzkinStep::h0);
        else if (tok == "h1") p.steps.push_back(MotzkinStep::h1);
        else throw InvalidInput("bad 2-Motzkin step '" + std::string(tok) + "'");
        i = end;
    }
    if (!validate(p)) throw InvalidInput("not a 2-Motzkin path: '" + std::string(text) + "'");
    return p;
}

// ---------------------------------------------------------------------------
// Factor statistics

/// Occurrences of `factor` in `word`, overlapping ones included.
inline int occ_factor(std::string_view word, std::string_view factor) {
    if (factor.empty() || factor.size() > word.size()) return 0;
    int count = 0;
    for (std::size_t i = 0; i + factor.size() <= word.size(); ++i)
        count += word.substr(i, factor.size()) == factor;
    return count;
}

inline int occ_factor(const BinaryWord& w, std::string_view factor) { return occ_factor(w.bits, factor); }

/// With level0_only, only occurrences whose first step starts at height 0.
inline int occ_factor(const DyckPath& p, std::string_view factor, bool level0_only = false) {
    if (!level0_only) return occ_factor(p.steps, factor);
    if (factor.empty() || factor.size() > p.steps.size()) return 0;
    int count = 0;
    int h = 0;
    const std::string_view word = p.steps;
    for (std::size_t i = 0; i + factor.size() <= word.size(); ++i) {
        if (h == 0 && word.substr(i, factor.size()) == factor) ++count;
        h += word[i] == 'U' ? 1 : -1;
    }
    return count;
}

enum class ReturnKind { first, last };

/// first: p = U a D b.  last: p = a U b D.  Returns (a, b).
inline std::pair<DyckPath, DyckPath> return_decompose(const DyckPath& p, ReturnKind which) {
    if (p.empty()) throw InvalidInput("return_decompose: empty path");
    const auto& s = p.steps;
    if (which == ReturnKind::first) {
        int h = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            h += s[i] == 'U' ? 1 : -1;
            if (h == 0) return {DyckPath{s.substr(1, i - 1)}, DyckPath{s.substr(i + 1)}};
        }
    } else {
        int h = 0;
        std::size_t last_zero = 0;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            h += s[i] == 'U' ? 1 : -1;
            if (h == 0) last_zero = i + 1;
        }
        return {DyckPath{s.substr(0, last_zero)}, DyckPath{s.substr(last_zero + 1, s.size() - last_zero - 2)}};
    }
    throw InvalidInput("return_decompose: not a Dyck path");
}

// ---------------------------------------------------------------------------
// Peak colouring: steps of UD factors are red, everything else blue.

enum class StepColor { red, blue };

struct PeakColoring {
    DyckPath path;
    std::vector<StepColor> colors;
};

inline PeakColoring color_peaks(const DyckPath& p) {
    PeakColoring c{p, std::vector<StepColor>(p.steps.size(), StepColor::blue)};
    for (std::size_t i = 0; i + 1 < p.steps.size(); ++i)
        if (p.steps[i] == 'U' && p.steps[i + 1] == 'D') c.colors[i] = c.colors[i + 1] = StepColor::red;
    return c;
}

namespace detail {

/// Positions in `steps` of the U (resp. D) steps, optionally restricted to one colour.
inline std::vector<int> step_positions(const std::string& steps, char kind, const std::vector<StepColor>* colors = nullptr,
                                       StepColor want = StepColor::blue) {
    std::vector<int> out;
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (steps[i] == kind && (!colors || (*colors)[i] == want)) out.push_back(static_cast<int>(i));
    return out;
}

/// #{l : d[l], d[l+1] adjacent and u[l], u[l+1] not}.
inline int consecutive_d_not_u(const std::vector<int>& u, const std::vector<int>& d) {
    int count = 0;
    for (std::size_t l = 0; l + 1 < d.size() && l + 1 < u.size(); ++l)
        count += (d[l + 1] == d[l] + 1) && (u[l + 1] != u[l] + 1);
    return count;
}

}  // namespace detail

enum class PathStat { pk, con, hibasc, lobasc, ini_UU, returns };

inline int path_statistic(const DyckPath& p, PathStat s) {
    const auto& w = p.steps;
    switch (s) {
        case PathStat::pk: return occ_factor(w, "UD");
        case PathStat::con:
            return detail::consecutive_d_not_u(detail::step_positions(w, 'U'), detail::step_positions(w, 'D'));
        case PathStat::hibasc: {
            // peaks other than the first that are not directly preceded by a peak
            int count = 0;
            bool first = true;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                if (w[i] != 'U' || w[i + 1] != 'D') continue;
                if (!first && !(i >= 2 && w[i - 2] == 'U' && w[i - 1] == 'D')) ++count;
                first = false;
            }
            return count;
        }
        case PathStat::lobasc: {
            auto c = color_peaks(p);
            return detail::consecutive_d_not_u(detail::step_positions(w, 'U', &c.colors),
                                               detail::step_positions(w, 'D', &c.colors));
        }
        case PathStat::ini_UU: return w.size() >= 2 && w[0] == 'U' && w[1] == 'U';
        case PathStat::returns: {
            int h = 0, count = 0;
            for (char c : w) {
                h += c == 'U' ? 1 : -1;
                count += h == 0;
            }
            return count;
        }
    }
    return 0;
}

/// Maximal runs of 0's of length at least r.
inline int run_count(const BinaryWord& w, int r) {
    if (r < 1) throw InvalidInput("run_count needs r >= 1");
    int count = 0, run = 0;
    for (char c : w.bits + "1") {
        if (c == '0') {
            ++run;
        } else {
            count += run >= r;
            run = 0;
        }
    }
    return count;
}

inline int count_step(const TwoMotzkinPath& a, MotzkinStep s) {
    int count = 0;
    for (auto x : a.steps) count += x == s;
    return count;
}

// ---------------------------------------------------------------------------
// Exhaustive generators (lexicographic by the step alphabet order shown)

/// All Dyck paths of semilength n, ordered with D < U.
inline std::vector<DyckPath> all_dyck_paths(int n) {
    std::vector<DyckPath> out;
    std::string cur;
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (ups == n && downs == n) {
            out.push_back(DyckPath{cur});
            return;
        }
        if (downs < ups) {
            cur.push_back('D');
            self(self, ups, downs + 1);
            cur.pop_back();
        }
        if (ups < n) {
            cur.push_back('U');
            self(self, ups + 1, downs);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline std::vector<TwoMotzkinPath> all_two_motzkin_paths(int length) {
    std::vector<TwoMotzkinPath> out;
    TwoMotzkinPath cur;
    auto rec = [&](auto&& self, int h) -> void {
        const int left = length - cur.length();
        if (left == 0) {
            if (h == 0) out.push_back(cur);
            return;
        }
        for (auto s : {MotzkinStep::u, MotzkinStep::d, MotzkinStep::h0, MotzkinStep::h1}) {
            int nh = h + (s == MotzkinStep::u) - (s == MotzkinStep::d);
            if (nh < 0 || nh > left - 1) continue;
            cur.steps.push_back(s);
            self(self, nh);
            cur.steps.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<BinaryWord> all_binary_words(int length) {
    std::vector<BinaryWord> out;
    for (unsigned long long m = 0; m < (1ULL << length); ++m) {
        std::string s(length, '0');
        for (int i = 0; i < length; ++i)
            if (m >> (length - 1 - i) & 1ULL) s[i] = '1';
        out.push_back(BinaryWord{std::move(s)});
    }
    return out;
}

}  // namespace bdes
