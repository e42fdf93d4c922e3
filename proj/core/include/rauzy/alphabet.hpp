#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rauzy/errors.hpp"

namespace rauzy {

/// Letters are small integer ids; a word is a byte string of ids, not of
/// display characters. This keeps k-letter alphabets and block alphabets
/// (whose "letters" are factors) uniform.
using Letter = unsigned char;
using Word = std::string;

inline constexpr size_t kMaxIndexAlphabet = 64;  // Rext/Lext are 64-bit masks

/// Ordered set of letters with display symbols. Symbols are single
/// characters for user-declared alphabets and factor strings for block
/// alphabets.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    /// Alphabet of single-character symbols, e.g. from_characters("01").
    static Alphabet from_characters(const std::string& chars);

    size_t size() const { return symbols_.size(); }
    const std::string& symbol(Letter id) const { return symbols_.at(id); }
    const std::vector<std::string>& symbols() const { return symbols_; }

    bool single_character() const;
    Letter id_of_char(char c) const;

    /// Renders letter ids as concatenated symbols.
    std::string render(const Word& word) const;
    std::string render_letter(Letter id) const { return symbol(id); }

    /// Parses a display string of single-character symbols.
    Word parse(const std::string& text) const;

    friend bool operator==(const Alphabet& x, const Alphabet& y) {
        return x.symbols_ == y.symbols_;
    }

private:
    std::vector<std::string> symbols_;
};

inline Word reversed(const Word& w) {
    return Word(w.rbegin(), w.rend());
}

inline bool is_palindrome(const char* data, size_t n) {
    for (size_t i = 0; n >= 1 && i < n - 1 - i; ++i)
        if (data[i] != data[n - 1 - i]) return false;
    return true;
}

}  // namespace rauzy
