#pragma once

#include <vector>

#include "rauzy/alphabet.hpp"

namespace rauzy {

/// Substitution on a finite alphabet: every letter maps to a nonempty word
/// over the same alphabet.
class Morphism {
public:
    Morphism(Alphabet alphabet, std::vector<Word> images);

    const Alphabet& alphabet() const { return alphabet_; }
    size_t alphabet_size() const { return alphabet_.size(); }
    const Word& image(Letter a) const { return images_.at(a); }
    const std::vector<Word>& images() const { return images_; }

    Word apply(const Word& w) const;

    /// Incidence matrix: entry (x, y) = occurrences of letter x in image(y).
    std::vector<std::vector<long>> incidence_matrix() const;

    /// Rule text "0->01;1->0"; requires single-character symbols.
    std::string to_text() const;
    static Morphism from_text(const std::string& text);

    friend bool operator==(const Morphism& x, const Morphism& y) {
        return x.alphabet_ == y.alphabet_ && x.images_ == y.images_;
    }

private:
    Alphabet alphabet_;
    std::vector<Word> images_;
};

/// Some power of the incidence matrix (at most |alphabet|^2, via the
/// Wielandt exponent) is entrywise positive.
bool is_primitive(const Morphism& m);

/// First N letters of the fixed point of m starting with seed. Requires
/// image(seed) to begin with seed and have length >= 2.
Word fixed_point_prefix(const Morphism& m, Letter seed, size_t n_letters);

}  // namespace rauzy
