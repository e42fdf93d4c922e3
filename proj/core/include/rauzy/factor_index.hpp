#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rauzy/alphabet.hpp"

namespace rauzy {

/// Per-factor statistics at one length. Occurrences are starting positions
/// i with i + n <= N; extension sets come from occurrences lying fully
/// inside the prefix, so the final length-n suffix counts but does not
/// contribute a right extension (and the leading prefix none on the left).
struct FactorInfo {
    uint32_t position = 0;  // first occurrence; identifies the content
    uint32_t count = 0;
    uint64_t rext_mask = 0;
    uint64_t lext_mask = 0;
    bool palindrome = false;
};

struct ComplexityPair {
    size_t c_n = 0;       // C(n)
    long delta_c = 0;     // C(n+1) - C(n)
};

struct SpecialFactorReport {
    size_t order = 0;
    std::vector<uint32_t> right_special;  // factor ids at this order
    std::vector<uint32_t> left_special;
    std::vector<uint32_t> bispecial;
    size_t x = 0;  // #BS
    size_t y = 0;  // #BS palindromes
    size_t z = 0;  // #RS
    size_t ls_count = 0;
};

/// Index of all factors of a finite word up to a length cap n_max.
/// Immutable after construction; factor ids at each length are assigned in
/// lexicographic order of the factor content.
class FactorIndex {
public:
    FactorIndex(Word word, size_t n_max, Alphabet alphabet);

    const Word& word() const { return word_; }
    const Alphabet& alphabet() const { return alphabet_; }
    size_t prefix_length() const { return word_.size(); }
    size_t length_cap() const { return n_max_; }

    const std::vector<FactorInfo>& factors(size_t n) const;
    std::string_view factor_view(size_t n, uint32_t id) const {
        const FactorInfo& f = factors(n)[id];
        return std::string_view(word_.data() + f.position, n);
    }
    Word factor_word(size_t n, uint32_t id) const { return Word(factor_view(n, id)); }

    /// Lexicographic lookup; returns -1 when absent.
    long find(size_t n, std::string_view content) const;
    bool contains(size_t n, std::string_view content) const { return find(n, content) >= 0; }

    size_t count_extensions(uint64_t mask) const { return countbits(mask); }

    /// Id of the factor occurring at position 0 / position N-n.
    uint32_t prefix_factor_id(size_t n) const;
    uint32_t suffix_factor_id(size_t n) const;

    static size_t countbits(uint64_t mask);

private:
    void require_in_window(size_t n) const;

    Word word_;
    Alphabet alphabet_;
    size_t n_max_;
    std::vector<std::vector<FactorInfo>> levels_;   // levels_[n-1] = factors of length n
    std::vector<uint32_t> prefix_ids_;
    std::vector<uint32_t> suffix_ids_;
};

/// (C(n), C(n+1) - C(n)); needs n + 1 <= n_max.
ComplexityPair complexity(const FactorIndex& index, size_t n);

/// RS/LS/BS factors of length n with the counts X, Y, Z; needs n + 1 <= n_max.
SpecialFactorReport special_factors(const FactorIndex& index, size_t n);

/// Palindromic factors of length n (ids, lexicographic).
std::vector<uint32_t> palindrome_factors(const FactorIndex& index, size_t n);
size_t palindrome_complexity(const FactorIndex& index, size_t n);

/// Factors of length n whose reversal is not a factor; empty certifies
/// window-level reversal closure at this length.
std::vector<uint32_t> reversal_closure_defect(const FactorIndex& index, size_t n);

}  // namespace rauzy
