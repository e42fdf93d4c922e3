#include "rauzy/alphabet.hpp"

#include <algorithm>

namespace rauzy {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw Error("alphabet must be nonempty");
    if (symbols_.size() > 255) throw Error("alphabet too large (max 255 letters)");
    for (const auto& s : symbols_) {
        if (s.empty()) throw Error("alphabet symbol must be nonempty");
        if (std::count(symbols_.begin(), symbols_.end(), s) != 1)
            throw Error("duplicate alphabet symbol: " + s);
    }
}

Alphabet Alphabet::from_characters(const std::string& chars) {
    std::vector<std::string> symbols;
    symbols.reserve(chars.size());
    for (char c : chars) symbols.emplace_back(1, c);
    return Alphabet(std::move(symbols));
}

bool Alphabet::single_character() const {
    return std::all_of(symbols_.begin(), symbols_.end(),
                       [](const std::string& s) { return s.size() == 1; });
}

Letter Alphabet::id_of_char(char c) const {
    for (size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].size() == 1 && symbols_[i][0] == c) return static_cast<Letter>(i);
    throw Error(std::string("letter not in alphabet: '") + c + "'");
}

std::string Alphabet::render(const Word& word) const {
    std::string out;
    out.reserve(word.size());
    for (unsigned char id : word) out += symbol(id);
    return out;
}

Word Alphabet::parse(const std::string& text) const {
    if (!single_character()) throw Error("alphabet has multi-character symbols; cannot parse text");
    Word w;
    w.reserve(text.size());
    for (char c : text) w.push_back(static_cast<char>(id_of_char(c)));
    return w;
}

}  // namespace rauzy
