#include "rauzy/block_morphism.hpp"

#include <algorithm>

namespace rauzy {

namespace {

std::set<Word> factors_of(const Word& w, size_t n) {
    std::set<Word> out;
    if (w.size() < n) return out;
    for (size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
    return out;
}

void require_prolongable(const Morphism& m, Letter seed) {
    if (seed >= m.alphabet_size()) throw Error("seed letter outside alphabet");
    const Word& img = m.image(seed);
    if (img.size() < 2 || static_cast<unsigned char>(img[0]) != seed)
        throw NotProlongable("image of seed must start with seed and have length >= 2");
}

}  // namespace

std::set<Word> fixed_point_factors(const Morphism& m, Letter seed, size_t n) {
    require_prolongable(m, seed);
    constexpr size_t kLengthCap = 100'000'000;
    Word w = m.image(seed);
    std::set<Word> current = factors_of(w, n);
    while (true) {
        if (w.size() > kLengthCap)
            throw Stagnation("factor set did not stabilize within the length cap");
        Word next = m.apply(w);
        std::set<Word> next_factors = factors_of(next, n);
        if (next.size() >= n && next_factors == current) return current;
        w = std::move(next);
        current = std::move(next_factors);
    }
}

BlockMorphism block_morphism(const Morphism& m, Letter seed, size_t n) {
    if (n == 0) throw Error("block order must be at least 1");
    if (!is_primitive(m)) throw NotPrimitive("block recoding requires a primitive substitution");
    require_prolongable(m, seed);

    std::set<Word> factor_set = fixed_point_factors(m, seed, n);
    std::vector<Word> blocks(factor_set.begin(), factor_set.end());  // lexicographic
    if (blocks.size() > 255) throw Error("block alphabet too large (over 255 factors)");

    auto block_id = [&blocks](const Word& w) -> Letter {
        auto it = std::lower_bound(blocks.begin(), blocks.end(), w);
        if (it == blocks.end() || *it != w) throw Error("internal: block image outside factor set");
        return static_cast<Letter>(it - blocks.begin());
    };

    // Smallest power p with sum_{i>=1} |m^p(w_i)| >= n-1 for every block w.
    // Nonempty images make p = 1 sufficient whenever n <= |w|, but the
    // general search keeps the construction honest about its precondition.
    const size_t k = m.alphabet_size();
    std::vector<Integer> image_length(k, 1);
    int power = 0;
    auto lengths_admit = [&]() {
        for (const Word& w : blocks) {
            Integer tail(0);
            for (size_t i = 1; i < w.size(); ++i)
                tail += image_length[static_cast<unsigned char>(w[i])];
            if (tail < static_cast<long>(n) - 1) return false;
        }
        return true;
    };
    do {
        ++power;
        if (power > 64) throw Error("block power search did not terminate");
        std::vector<Integer> next(k, 0);
        for (size_t a = 0; a < k; ++a) {
            if (power == 1) {
                next[a] = static_cast<long>(m.image(static_cast<Letter>(a)).size());
            } else {
                for (unsigned char b : m.image(static_cast<Letter>(a)))
                    next[a] += image_length[b];
            }
        }
        image_length = std::move(next);
    } while (!lengths_admit());

    // Images under m^power, as plain words (block lengths stay desk-scale).
    auto apply_power = [&m](Word w, int p) {
        for (int i = 0; i < p; ++i) w = m.apply(w);
        return w;
    };

    std::vector<Word> images;
    images.reserve(blocks.size());
    for (const Word& w : blocks) {
        Word expanded = apply_power(w, power);
        size_t head_length = apply_power(Word(1, w[0]), power).size();
        Word image;
        image.reserve(head_length);
        for (size_t offset = 0; offset < head_length; ++offset)
            image.push_back(static_cast<char>(block_id(expanded.substr(offset, n))));
        images.push_back(std::move(image));
    }

    std::vector<std::string> symbols;
    symbols.reserve(blocks.size());
    for (const Word& w : blocks) symbols.push_back(m.alphabet().render(w));
    Letter seed_block = block_id(fixed_point_prefix(m, seed, n));

    return BlockMorphism{Morphism(Alphabet(std::move(symbols)), std::move(images)),
                         std::move(blocks), n, power, seed_block};
}

FrequencyAssignment exact_frequencies(const Morphism& m, Letter seed, size_t n) {
    PerronResult base = perron_frequencies(m);

    auto solve_level = [&](size_t len) {
        BlockMorphism block = block_morphism(m, seed, len);
        Quadratic eigenvalue = base.eigenvalue;
        for (int i = 1; i < block.power; ++i) eigenvalue *= base.eigenvalue;
        PerronResult solved = perron_frequencies(block.morphism, eigenvalue);
        std::map<Word, Frequency> out;
        for (size_t id = 0; id < block.block_factors.size(); ++id)
            out[block.block_factors[id]] = solved.frequencies[id];
        return std::make_pair(std::move(out), block.power);
    };

    FrequencyAssignment a;
    a.order = n;
    a.engine = Engine::BlockPerron;
    auto [vertex, p_n] = solve_level(n);
    auto [edge, p_n1] = solve_level(n + 1);
    a.vertex = std::move(vertex);
    a.edge = std::move(edge);
    a.provenance = "morphism " + (m.alphabet().single_character() ? m.to_text() : std::string("(block)")) +
                   " power p=" + std::to_string(p_n) + "/" + std::to_string(p_n1);
    verify_exact_telescoping(a);
    return a;
}

void verify_exact_telescoping(const FrequencyAssignment& assignment) {
    Quadratic vertex_sum(0), edge_sum(0);
    for (const auto& [w, f] : assignment.vertex) vertex_sum += f.quadratic();
    for (const auto& [e, f] : assignment.edge) edge_sum += f.quadratic();
    if (vertex_sum != Quadratic(1) || edge_sum != Quadratic(1))
        throw Error("internal: exact frequencies are not normalized");

    for (const auto& [w, f] : assignment.vertex) {
        Quadratic right(0), left(0);
        bool any_right = false, any_left = false;
        for (const auto& [e, g] : assignment.edge) {
            if (e.compare(0, w.size(), w) == 0) {
                right += g.quadratic();
                any_right = true;
            }
            if (e.compare(1, w.size(), w) == 0) {
                left += g.quadratic();
                any_left = true;
            }
        }
        if (!any_right || !any_left || Frequency::exact(right).compare_exact(f) != 0 ||
            Frequency::exact(left).compare_exact(f) != 0)
            throw Error("internal: exact frequencies do not telescope");
    }
}

}  // namespace rauzy
