#include "rauzy/word_source.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rauzy {

namespace {

const char* kIetSymbols = "0123456789abcdefghijklmnopqrstuvwxyz";

Alphabet alphabet_of(const WordSource::Variant& v) {
    return std::visit(
        [](const auto& s) -> Alphabet {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MorphismSource>) {
                return s.morphism.alphabet();
            } else if constexpr (std::is_same_v<T, MechanicalSource>) {
                return Alphabet::from_characters("01");
            } else if constexpr (std::is_same_v<T, IetSource>) {
                size_t k = s.lengths.size();
                if (k > 36) throw Error("interval exchange supports at most 36 intervals");
                return Alphabet::from_characters(std::string(kIetSymbols, k));
            } else if constexpr (std::is_same_v<T, PeriodicSource>) {
                return s.alphabet;
            } else {
                return s.alphabet;
            }
        },
        v);
}

Alphabet distinct_chars_in_order(const std::string& text, bool sorted) {
    if (text.empty()) throw Error("cannot infer an alphabet from an empty word");
    std::string chars;
    for (char c : text)
        if (chars.find(c) == std::string::npos) chars += c;
    if (sorted) std::sort(chars.begin(), chars.end());
    return Alphabet::from_characters(chars);
}

}  // namespace

WordSource::WordSource(Variant v) : v_(std::move(v)), alphabet_(alphabet_of(v_)) {
    if (const auto* p = std::get_if<PeriodicSource>(&v_)) {
        if (p->pattern.empty()) throw EmptyPattern("periodic pattern must be nonempty");
    }
}

WordSource WordSource::morphism(const std::string& rules, char seed) {
    Morphism m = Morphism::from_text(rules);
    Letter s = m.alphabet().id_of_char(seed);
    return WordSource(MorphismSource{std::move(m), s});
}

WordSource WordSource::mechanical(Quadratic slope, Quadratic intercept) {
    return WordSource(MechanicalSource{std::move(slope), std::move(intercept)});
}

WordSource WordSource::interval_exchange(std::vector<Quadratic> lengths,
                                         std::vector<int> permutation, Quadratic start,
                                         unsigned precision_bits) {
    return WordSource(IetSource{std::move(lengths), std::move(permutation), std::move(start),
                                precision_bits});
}

WordSource WordSource::periodic(const std::string& pattern) {
    if (pattern.empty()) throw EmptyPattern("periodic pattern must be nonempty");
    Alphabet a = distinct_chars_in_order(pattern, /*sorted=*/false);
    Word w = a.parse(pattern);
    return WordSource(PeriodicSource{std::move(a), std::move(w)});
}

WordSource WordSource::explicit_prefix(const std::string& text) {
    Alphabet a = distinct_chars_in_order(text, /*sorted=*/true);
    Word w = a.parse(text);
    return WordSource(ExplicitSource{std::move(a), std::move(w)});
}

Word WordSource::prefix(size_t n_letters) const {
    return std::visit(
        [n_letters](const auto& s) -> Word {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MorphismSource>) {
                return fixed_point_prefix(s.morphism, s.seed, n_letters);
            } else if constexpr (std::is_same_v<T, MechanicalSource>) {
                return mechanical_word_prefix(s.slope, s.intercept, n_letters);
            } else if constexpr (std::is_same_v<T, IetSource>) {
                return iet_coding_prefix(s.lengths, s.permutation, s.start, n_letters,
                                         s.precision_bits);
            } else if constexpr (std::is_same_v<T, PeriodicSource>) {
                return periodic_prefix(s.pattern, n_letters);
            } else {
                if (n_letters > s.word.size())
                    throw Error("explicit prefix has only " + std::to_string(s.word.size()) +
                                " letters");
                return s.word.substr(0, n_letters);
            }
        },
        v_);
}

std::optional<std::pair<Morphism, Letter>> WordSource::substitution() const {
    if (const auto* m = std::get_if<MorphismSource>(&v_))
        return std::make_pair(m->morphism, m->seed);
    if (const auto* p = std::get_if<PeriodicSource>(&v_)) {
        // Uniform substitution x -> pattern for every x; its fixed point
        // from the pattern's first letter is the periodic word itself, and
        // it is primitive because every alphabet letter occurs in the
        // pattern. Length-1 patterns double up to stay prolongable.
        Word image = p->pattern.size() >= 2 ? p->pattern : p->pattern + p->pattern;
        std::vector<Word> images(p->alphabet.size(), image);
        return std::make_pair(Morphism(p->alphabet, std::move(images)),
                              static_cast<Letter>(static_cast<unsigned char>(p->pattern[0])));
    }
    return std::nullopt;
}

std::string WordSource::describe() const {
    std::ostringstream out;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MorphismSource>) {
                out << "morphism " << s.morphism.to_text() << " seed "
                    << s.morphism.alphabet().symbol(s.seed);
            } else if constexpr (std::is_same_v<T, MechanicalSource>) {
                out << "mechanical slope=" << s.slope.triple()
                    << " intercept=" << s.intercept.triple();
            } else if constexpr (std::is_same_v<T, IetSource>) {
                out << "iet lengths=";
                for (size_t i = 0; i < s.lengths.size(); ++i)
                    out << (i ? "," : "") << s.lengths[i].triple();
                out << " perm=";
                for (size_t i = 0; i < s.permutation.size(); ++i)
                    out << (i ? "," : "") << s.permutation[i];
                out << " start=" << s.start.triple() << " precision=" << s.precision_bits;
            } else if constexpr (std::is_same_v<T, PeriodicSource>) {
                out << "periodic pattern=" << s.alphabet.render(s.pattern);
            } else {
                out << "explicit prefix (" << s.word.size() << " letters)";
            }
        },
        v_);
    return out.str();
}

std::string WordSource::to_json() const {
    nlohmann::json j;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MorphismSource>) {
                j["variant"] = "morphism";
                j["rules"] = s.morphism.to_text();
                j["seed"] = s.morphism.alphabet().symbol(s.seed);
            } else if constexpr (std::is_same_v<T, MechanicalSource>) {
                j["variant"] = "mechanical";
                j["slope"] = s.slope.triple();
                j["intercept"] = s.intercept.triple();
            } else if constexpr (std::is_same_v<T, IetSource>) {
                j["variant"] = "iet";
                std::vector<std::string> lengths;
                for (const Quadratic& l : s.lengths) lengths.push_back(l.triple());
                j["lengths"] = lengths;
                j["permutation"] = s.permutation;
                j["start"] = s.start.triple();
                j["precision_bits"] = s.precision_bits;
            } else if constexpr (std::is_same_v<T, PeriodicSource>) {
                j["variant"] = "periodic";
                j["pattern"] = s.alphabet.render(s.pattern);
            } else {
                j["variant"] = "explicit";
                j["word"] = s.alphabet.render(s.word);
                j["alphabet"] = [&] {
                    std::string chars;
                    for (const auto& sym : s.alphabet.symbols()) chars += sym;
                    return chars;
                }();
            }
        },
        v_);
    return j.dump();
}

WordSource WordSource::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad source JSON: ") + e.what());
    }
    if (!j.contains("variant")) throw ParseError("source JSON needs a 'variant' field");
    std::string variant = j.at("variant").get<std::string>();
    try {
        if (variant == "morphism") {
            std::string seed = j.at("seed").get<std::string>();
            if (seed.size() != 1) throw ParseError("seed must be a single letter");
            return morphism(j.at("rules").get<std::string>(), seed[0]);
        }
        if (variant == "mechanical") {
            return mechanical(parse_quadratic(j.at("slope").get<std::string>()),
                              parse_quadratic(j.at("intercept").get<std::string>()));
        }
        if (variant == "iet") {
            std::vector<Quadratic> lengths;
            for (const auto& l : j.at("lengths")) lengths.push_back(parse_quadratic(l.get<std::string>()));
            std::vector<int> permutation = j.at("permutation").get<std::vector<int>>();
            Quadratic start = parse_quadratic(j.at("start").get<std::string>());
            unsigned bits = j.value("precision_bits", 128u);
            return interval_exchange(std::move(lengths), std::move(permutation), std::move(start),
                                     bits);
        }
        if (variant == "periodic") return periodic(j.at("pattern").get<std::string>());
        if (variant == "explicit") {
            std::string word = j.at("word").get<std::string>();
            if (j.contains("alphabet")) {
                Alphabet a = Alphabet::from_characters(j.at("alphabet").get<std::string>());
                return WordSource(ExplicitSource{a, a.parse(word)});
            }
            return explicit_prefix(word);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad source JSON: ") + e.what());
    }
    throw ParseError("unknown source variant: " + variant);
}

}  // namespace rauzy
