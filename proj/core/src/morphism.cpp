#include "rauzy/morphism.hpp"

#include <algorithm>
#include <cctype>

namespace rauzy {

Morphism::Morphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (images_.size() != alphabet_.size())
        throw Error("morphism needs one image per letter");
    for (const Word& img : images_) {
        if (img.empty()) throw Error("morphism image must be nonempty");
        for (unsigned char id : img)
            if (id >= alphabet_.size()) throw Error("morphism image uses letter outside alphabet");
    }
}

Word Morphism::apply(const Word& w) const {
    Word out;
    size_t total = 0;
    for (unsigned char id : w) total += image(id).size();
    out.reserve(total);
    for (unsigned char id : w) out += image(id);
    return out;
}

std::vector<std::vector<long>> Morphism::incidence_matrix() const {
    size_t k = alphabet_.size();
    std::vector<std::vector<long>> m(k, std::vector<long>(k, 0));
    for (size_t y = 0; y < k; ++y)
        for (unsigned char x : images_[y]) ++m[x][y];
    return m;
}

std::string Morphism::to_text() const {
    if (!alphabet_.single_character())
        throw Error("rule text requires single-character symbols");
    std::string out;
    for (size_t a = 0; a < alphabet_.size(); ++a) {
        if (a > 0) out += ';';
        out += alphabet_.symbol(static_cast<Letter>(a));
        out += "->";
        out += alphabet_.render(images_[a]);
    }
    return out;
}

Morphism Morphism::from_text(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;

    // Alphabet order = order of rule left-hand sides.
    std::vector<char> letters;
    std::vector<std::string> raw_images;
    size_t pos = 0;
    while (pos < s.size()) {
        auto end = s.find(';', pos);
        std::string rule = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end + 1;
        auto arrow = rule.find("->");
        if (arrow != 1) throw ParseError("morphism rule must be 'x->image': " + rule);
        char lhs = rule[0];
        if (std::find(letters.begin(), letters.end(), lhs) != letters.end())
            throw ParseError(std::string("duplicate rule for letter '") + lhs + "'");
        letters.push_back(lhs);
        raw_images.push_back(rule.substr(arrow + 2));
    }
    if (letters.empty()) throw ParseError("morphism text has no rules");

    Alphabet alphabet = Alphabet::from_characters(std::string(letters.begin(), letters.end()));
    std::vector<Word> images;
    images.reserve(raw_images.size());
    for (const std::string& img : raw_images) images.push_back(alphabet.parse(img));
    return Morphism(std::move(alphabet), std::move(images));
}

bool is_primitive(const Morphism& m) {
    size_t k = m.alphabet_size();
    // Zero/nonzero pattern is all that matters; work with bitset rows.
    std::vector<uint64_t> rows(k, 0);
    auto mat = m.incidence_matrix();
    if (k > 64) {
        // Wide alphabets (block morphisms) use the structural route:
        // strong connectivity plus cycle-length gcd 1 is equivalent, but
        // a plain boolean power with vector<bool> rows stays simple.
        std::vector<std::vector<bool>> b(k, std::vector<bool>(k));
        for (size_t x = 0; x < k; ++x)
            for (size_t y = 0; y < k; ++y) b[x][y] = mat[x][y] != 0;
        auto mul = [k](const std::vector<std::vector<bool>>& p,
                       const std::vector<std::vector<bool>>& q) {
            std::vector<std::vector<bool>> r(k, std::vector<bool>(k, false));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) {
                    if (!p[i][j]) continue;
                    for (size_t l = 0; l < k; ++l)
                        if (q[j][l]) r[i][l] = true;
                }
            return r;
        };
        size_t exponent = (k - 1) * (k - 1) + 1;  // Wielandt
        std::vector<std::vector<bool>> acc;
        std::vector<std::vector<bool>> base = b;
        bool first = true;
        while (exponent > 0) {
            if (exponent & 1) {
                acc = first ? base : mul(acc, base);
                first = false;
            }
            base = mul(base, base);
            exponent >>= 1;
        }
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                if (!acc[i][j]) return false;
        return true;
    }

    for (size_t x = 0; x < k; ++x)
        for (size_t y = 0; y < k; ++y)
            if (mat[x][y] != 0) rows[x] |= uint64_t{1} << y;
    auto mul = [k](const std::vector<uint64_t>& p, const std::vector<uint64_t>& q) {
        std::vector<uint64_t> r(k, 0);
        for (size_t i = 0; i < k; ++i) {
            uint64_t bits = p[i];
            while (bits) {
                size_t j = static_cast<size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                r[i] |= q[j];
            }
        }
        return r;
    };
    uint64_t full = k == 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
    size_t exponent = (k - 1) * (k - 1) + 1;
    std::vector<uint64_t> acc;
    std::vector<uint64_t> base = rows;
    bool first = true;
    while (exponent > 0) {
        if (exponent & 1) {
            acc = first ? base : mul(acc, base);
            first = false;
        }
        base = mul(base, base);
        exponent >>= 1;
    }
    return std::all_of(acc.begin(), acc.end(), [full](uint64_t r) { return r == full; });
}

Word fixed_point_prefix(const Morphism& m, Letter seed, size_t n_letters) {
    if (seed >= m.alphabet_size()) throw Error("seed letter outside alphabet");
    const Word& seed_image = m.image(seed);
    if (seed_image.size() < 2 || static_cast<unsigned char>(seed_image[0]) != seed)
        throw NotProlongable("image of seed must start with seed and have length >= 2");

    // u = sigma(u), so u = sigma(u_0) sigma(u_1) ... ; emit images of the
    // already-known letters. The expansion cursor can never catch up with
    // the output because |sigma(seed)| >= 2.
    Word out = seed_image;
    size_t cursor = 1;
    while (out.size() < n_letters) {
        if (cursor >= out.size())
            throw Stagnation("fixed point cannot reach requested length");
        out += m.image(static_cast<Letter>(static_cast<unsigned char>(out[cursor])));
        ++cursor;
    }
    out.resize(n_letters);
    return out;
}

}  // namespace rauzy
