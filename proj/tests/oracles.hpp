#pragma once

// Brute-force reference implementations used to freeze expected values.
// Everything here works on plain display strings and stays independent of
// the library's indexing and solving paths.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::map<std::string, long> factor_counts(const std::string& word, size_t n) {
    std::map<std::string, long> counts;
    if (word.size() < n) return counts;
    for (size_t i = 0; i + n <= word.size(); ++i) ++counts[word.substr(i, n)];
    return counts;
}

inline std::set<std::string> factor_set(const std::string& word, size_t n) {
    std::set<std::string> out;
    for (const auto& [w, c] : factor_counts(word, n)) out.insert(w);
    return out;
}

inline size_t complexity(const std::string& word, size_t n) {
    return factor_set(word, n).size();
}

inline std::set<char> right_extensions(const std::string& word, const std::string& factor) {
    std::set<char> out;
    for (size_t i = 0; i + factor.size() < word.size(); ++i)
        if (word.compare(i, factor.size(), factor) == 0) out.insert(word[i + factor.size()]);
    return out;
}

inline std::set<char> left_extensions(const std::string& word, const std::string& factor) {
    std::set<char> out;
    for (size_t i = 1; i + factor.size() <= word.size(); ++i)
        if (word.compare(i, factor.size(), factor) == 0) out.insert(word[i - 1]);
    return out;
}

inline bool palindrome(const std::string& w) {
    return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
}

inline size_t palindrome_count(const std::string& word, size_t n) {
    size_t count = 0;
    for (const auto& f : factor_set(word, n))
        if (palindrome(f)) ++count;
    return count;
}

inline std::set<std::string> reversal_defects(const std::string& word, size_t n) {
    std::set<std::string> out;
    auto level = factor_set(word, n);
    for (const auto& f : level) {
        std::string rev(f.rbegin(), f.rend());
        if (!level.count(rev)) out.insert(f);
    }
    return out;
}

struct SpecialCounts {
    std::set<std::string> rs, ls, bs;
    size_t x = 0, y = 0, z = 0;
};

inline SpecialCounts specials(const std::string& word, size_t n) {
    SpecialCounts out;
    for (const auto& f : factor_set(word, n)) {
        bool r = right_extensions(word, f).size() >= 2;
        bool l = left_extensions(word, f).size() >= 2;
        if (r) out.rs.insert(f);
        if (l) out.ls.insert(f);
        if (r && l) {
            out.bs.insert(f);
            if (palindrome(f)) ++out.y;
        }
    }
    out.x = out.bs.size();
    out.z = out.rs.size();
    return out;
}

/// Thue-Morse prefix by the bit-count rule (independent of any morphism
/// machinery).
inline std::string thue_morse(size_t n) {
    std::string out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i)
        out += static_cast<char>('0' + (__builtin_popcountll(i) & 1));
    return out;
}

/// Fibonacci word by direct Zeckendorf-style concatenation: s1 = "0",
/// s2 = "01", s_{k+1} = s_k s_{k-1}.
inline std::string fibonacci_word(size_t n) {
    std::string prev = "0", cur = "01";
    while (cur.size() < n) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur.substr(0, n);
}

}  // namespace oracle
