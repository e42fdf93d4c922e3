#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "rauzy/generators.hpp"

namespace rauzy {

struct MorphismSource {
    Morphism morphism;
    Letter seed;
};

struct MechanicalSource {
    Quadratic slope;
    Quadratic intercept;
};

struct IetSource {
    std::vector<Quadratic> lengths;
    std::vector<int> permutation;
    Quadratic start;
    unsigned precision_bits = 128;
};

struct PeriodicSource {
    Alphabet alphabet;
    Word pattern;
};

struct ExplicitSource {
    Alphabet alphabet;
    Word word;
};

/// A recipe for a finite prefix of one of the studied infinite words.
class WordSource {
public:
    using Variant =
        std::variant<MorphismSource, MechanicalSource, IetSource, PeriodicSource, ExplicitSource>;

    explicit WordSource(Variant v);

    static WordSource morphism(const std::string& rules, char seed);
    static WordSource mechanical(Quadratic slope, Quadratic intercept);
    static WordSource interval_exchange(std::vector<Quadratic> lengths, std::vector<int> permutation,
                                        Quadratic start, unsigned precision_bits = 128);
    static WordSource periodic(const std::string& pattern);
    static WordSource explicit_prefix(const std::string& text);

    const Variant& variant() const { return v_; }
    const Alphabet& alphabet() const { return alphabet_; }

    Word prefix(size_t n_letters) const;

    /// Substitution generating the word, when one exists: the declared
    /// morphism, or for periodic sources the uniform substitution sending
    /// every letter to the pattern. This is the exact-engine route.
    std::optional<std::pair<Morphism, Letter>> substitution() const;

    /// One-line provenance description.
    std::string describe() const;

    std::string to_json() const;
    static WordSource from_json(const std::string& text);

private:
    Variant v_;
    Alphabet alphabet_;
};

}  // namespace rauzy
