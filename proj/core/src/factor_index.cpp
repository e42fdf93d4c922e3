#include "rauzy/factor_index.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>

namespace rauzy {

size_t FactorIndex::countbits(uint64_t mask) {
    return static_cast<size_t>(std::popcount(mask));
}

FactorIndex::FactorIndex(Word word, size_t n_max, Alphabet alphabet)
    : word_(std::move(word)), alphabet_(std::move(alphabet)), n_max_(n_max) {
    const size_t n = word_.size();
    if (n_max_ < 1) throw Error("length cap must be at least 1");
    if (n_max_ > 255) throw Error("length cap exceeds 255");
    if (n_max_ > n) throw CapExceedsWord("length cap exceeds word length");
    for (unsigned char id : word_)
        if (id >= alphabet_.size()) throw Error("word uses letter outside alphabet");
    if (alphabet_.size() > kMaxIndexAlphabet)
        throw Error("factor index supports at most 64 letters");

    // Sort positions by their length-capped forward content; shorter
    // suffixes order first on ties so they always sit at group starts.
    std::vector<uint32_t> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    const char* data = word_.data();
    const size_t cap = n_max_;
    std::sort(pos.begin(), pos.end(), [data, n, cap](uint32_t a, uint32_t b) {
        size_t la = std::min(cap, n - a);
        size_t lb = std::min(cap, n - b);
        int c = std::memcmp(data + a, data + b, std::min(la, lb));
        if (c != 0) return c < 0;
        if (la != lb) return la < lb;
        return a < b;
    });

    // lcp[i] = common prefix of pos[i] and pos[i+1], capped at n_max.
    std::vector<uint8_t> lcp(n > 0 ? n - 1 : 0, 0);
    for (size_t i = 0; i + 1 < n; ++i) {
        size_t limit = std::min({cap, n - pos[i], n - pos[i + 1]});
        size_t l = 0;
        while (l < limit && data[pos[i] + l] == data[pos[i + 1] + l]) ++l;
        lcp[i] = static_cast<uint8_t>(l);
    }

    levels_.resize(n_max_);
    prefix_ids_.assign(n_max_, 0);
    suffix_ids_.assign(n_max_, 0);
    for (size_t len = 1; len <= n_max_; ++len) {
        auto& level = levels_[len - 1];
        size_t chain_min = cap;  // min lcp since the previous kept position
        bool open = false;
        for (size_t i = 0; i < n; ++i) {
            uint32_t p = pos[i];
            if (i > 0) chain_min = std::min(chain_min, static_cast<size_t>(lcp[i - 1]));
            if (p + len > n) continue;  // suffix too short at this length
            if (!open || chain_min < len) {
                FactorInfo info;
                info.position = p;
                info.palindrome = is_palindrome(data + p, len);
                level.push_back(info);
                open = true;
            }
            FactorInfo& f = level.back();
            f.position = std::min(f.position, p);
            ++f.count;
            if (p + len < n) f.rext_mask |= uint64_t{1} << static_cast<unsigned char>(data[p + len]);
            if (p > 0) f.lext_mask |= uint64_t{1} << static_cast<unsigned char>(data[p - 1]);
            chain_min = cap;
        }
        for (uint32_t id = 0; id < level.size(); ++id)
            if (level[id].position == 0) prefix_ids_[len - 1] = id;
        long sid = find(len, std::string_view(data + (n - len), len));
        suffix_ids_[len - 1] = static_cast<uint32_t>(sid);
    }
}

const std::vector<FactorInfo>& FactorIndex::factors(size_t n) const {
    require_in_window(n);
    return levels_[n - 1];
}

void FactorIndex::require_in_window(size_t n) const {
    if (n < 1 || n > n_max_) throw OutOfWindow("length " + std::to_string(n) + " outside window cap " +
                                               std::to_string(n_max_));
}

long FactorIndex::find(size_t n, std::string_view content) const {
    require_in_window(n);
    if (content.size() != n) return -1;
    const auto& level = levels_[n - 1];
    const char* data = word_.data();
    auto it = std::lower_bound(level.begin(), level.end(), content,
                               [data, n](const FactorInfo& f, std::string_view c) {
                                   return std::string_view(data + f.position, n) < c;
                               });
    if (it == level.end() || std::string_view(data + it->position, n) != content) return -1;
    return it - level.begin();
}

uint32_t FactorIndex::prefix_factor_id(size_t n) const {
    require_in_window(n);
    return prefix_ids_[n - 1];
}

uint32_t FactorIndex::suffix_factor_id(size_t n) const {
    require_in_window(n);
    return suffix_ids_[n - 1];
}

ComplexityPair complexity(const FactorIndex& index, size_t n) {
    if (n + 1 > index.length_cap())
        throw OutOfWindow("complexity at " + std::to_string(n) + " needs cap >= " +
                          std::to_string(n + 1));
    ComplexityPair out;
    out.c_n = index.factors(n).size();
    out.delta_c = static_cast<long>(index.factors(n + 1).size()) - static_cast<long>(out.c_n);
    return out;
}

SpecialFactorReport special_factors(const FactorIndex& index, size_t n) {
    if (n + 1 > index.length_cap())
        throw OutOfWindow("special factors at " + std::to_string(n) + " need cap >= " +
                          std::to_string(n + 1));
    SpecialFactorReport rep;
    rep.order = n;
    const auto& level = index.factors(n);
    for (uint32_t id = 0; id < level.size(); ++id) {
        const FactorInfo& f = level[id];
        bool rs = FactorIndex::countbits(f.rext_mask) >= 2;
        bool ls = FactorIndex::countbits(f.lext_mask) >= 2;
        if (rs) rep.right_special.push_back(id);
        if (ls) rep.left_special.push_back(id);
        if (rs && ls) {
            rep.bispecial.push_back(id);
            if (f.palindrome) ++rep.y;
        }
    }
    rep.x = rep.bispecial.size();
    rep.z = rep.right_special.size();
    rep.ls_count = rep.left_special.size();
    return rep;
}

std::vector<uint32_t> palindrome_factors(const FactorIndex& index, size_t n) {
    std::vector<uint32_t> out;
    const auto& level = index.factors(n);
    for (uint32_t id = 0; id < level.size(); ++id)
        if (level[id].palindrome) out.push_back(id);
    return out;
}

size_t palindrome_complexity(const FactorIndex& index, size_t n) {
    return palindrome_factors(index, n).size();
}

std::vector<uint32_t> reversal_closure_defect(const FactorIndex& index, size_t n) {
    std::vector<uint32_t> out;
    const auto& level = index.factors(n);
    for (uint32_t id = 0; id < level.size(); ++id) {
        Word rev = reversed(index.factor_word(n, id));
        if (!index.contains(n, rev)) out.push_back(id);
    }
    return out;
}

}  // namespace rauzy
