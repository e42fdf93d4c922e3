#include "rauzy/rauzy_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <functional>

namespace rauzy {

long RauzyGraph::find_vertex(const Word& w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || *it != w) return -1;
    return it - vertices.begin();
}

bool RauzyGraph::strongly_connected() const {
    if (vertices.empty()) return false;
    auto reach = [this](bool forward) {
        std::vector<bool> seen(vertices.size(), false);
        std::deque<uint32_t> queue{0};
        seen[0] = true;
        size_t visited = 1;
        while (!queue.empty()) {
            uint32_t v = queue.front();
            queue.pop_front();
            for (uint32_t e : forward ? out_edges[v] : in_edges[v]) {
                uint32_t next = forward ? edges[e].target : edges[e].source;
                if (!seen[next]) {
                    seen[next] = true;
                    ++visited;
                    queue.push_back(next);
                }
            }
        }
        return visited == vertices.size();
    };
    return reach(true) && reach(false);
}

RauzyGraph build_rauzy_graph(const FactorIndex& index, size_t n,
                             const FrequencyAssignment& freqs) {
    if (n + 1 > index.length_cap())
        throw OutOfWindow("graph of order " + std::to_string(n) + " needs cap >= " +
                          std::to_string(n + 1));
    if (freqs.order != n) throw Error("frequency assignment is for a different order");

    RauzyGraph g;
    g.order = n;
    g.engine = freqs.engine;
    g.prefix_length = index.prefix_length();

    const auto& vertex_level = index.factors(n);
    g.vertices.reserve(vertex_level.size());
    for (uint32_t id = 0; id < vertex_level.size(); ++id)
        g.vertices.push_back(index.factor_word(n, id));

    const auto& edge_level = index.factors(n + 1);
    g.out_edges.assign(g.vertices.size(), {});
    g.in_edges.assign(g.vertices.size(), {});
    g.edges.reserve(edge_level.size());
    for (uint32_t id = 0; id < edge_level.size(); ++id) {
        Word factor = index.factor_word(n + 1, id);
        GraphEdge e;
        e.factor = factor;
        e.label = freqs.at_edge(factor);
        long src = index.find(n, std::string_view(factor.data(), n));
        long tgt = index.find(n, std::string_view(factor.data() + 1, n));
        if (src < 0 || tgt < 0) throw Error("internal: edge endpoints missing from the index");
        e.source = static_cast<uint32_t>(src);
        e.target = static_cast<uint32_t>(tgt);
        g.out_edges[e.source].push_back(id);
        g.in_edges[e.target].push_back(id);
        g.edges.push_back(std::move(e));
    }
    // vertex frequencies must exist too (assignment covers both levels)
    for (const Word& v : g.vertices) freqs.at_vertex(v);
    return g;
}

Frequency kirchhoff_residual(const RauzyGraph& g) {
    Quadratic best(0);
    for (uint32_t v = 0; v < g.vertices.size(); ++v) {
        Quadratic balance(0);
        for (uint32_t e : g.in_edges[v]) balance += g.edges[e].label.quadratic();
        for (uint32_t e : g.out_edges[v]) balance -= g.edges[e].label.quadratic();
        if (balance.sign() < 0) balance = -balance;
        if (balance > best) best = balance;
    }
    return Frequency::exact(best);
}

namespace {

std::vector<bool> special_mask(const RauzyGraph& g, const SpecialFactorReport& specials) {
    if (specials.order != g.order) throw Error("special report is for a different order");
    std::vector<bool> mask(g.vertices.size(), false);
    for (uint32_t id : specials.right_special) mask.at(id) = true;
    for (uint32_t id : specials.left_special) mask.at(id) = true;
    return mask;
}

Frequency path_label(const RauzyGraph& g, const std::vector<uint32_t>& edge_ids,
                     Rational& spread_out) {
    if (g.engine != Engine::Empirical) {
        const Frequency& first = g.edges[edge_ids.front()].label;
        for (uint32_t e : edge_ids)
            if (g.edges[e].label.compare_exact(first) != 0)
                throw Error("internal: simple path edges carry unequal exact frequencies");
        spread_out = Rational(0);
        return first;
    }
    Rational sum(0), lo, hi;
    for (size_t i = 0; i < edge_ids.size(); ++i) {
        const Rational& v = g.edges[edge_ids[i]].label.rational();
        sum += v;
        if (i == 0) {
            lo = v;
            hi = v;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    spread_out = hi - lo;
    return Frequency::exact(sum / make_rational(static_cast<long>(edge_ids.size())));
}

}  // namespace

std::vector<SimplePath> decompose_simple_paths(const RauzyGraph& g,
                                               const SpecialFactorReport& specials) {
    std::vector<bool> special = special_mask(g, specials);
    if (std::none_of(special.begin(), special.end(), [](bool b) { return b; }))
        throw Degenerate("no special vertex at this order");
    if (!g.strongly_connected())
        throw NonRecurrentWindow("the window graph is not strongly connected");

    std::vector<SimplePath> paths;
    std::vector<bool> edge_used(g.edges.size(), false);
    for (uint32_t start = 0; start < g.vertices.size(); ++start) {
        if (!special[start]) continue;
        for (uint32_t first : g.out_edges[start]) {
            SimplePath p;
            p.vertices.push_back(start);
            uint32_t edge = first;
            while (true) {
                if (edge_used[edge]) throw Error("internal: edge visited twice in decomposition");
                edge_used[edge] = true;
                p.edges.push_back(edge);
                uint32_t v = g.edges[edge].target;
                p.vertices.push_back(v);
                if (special[v]) break;
                if (g.out_edges[v].size() != 1 || g.in_edges[v].size() != 1)
                    throw NonRecurrentWindow("non-special vertex without unit degrees");
                edge = g.out_edges[v].front();
            }
            p.label = path_label(g, p.edges, p.spread);
            paths.push_back(std::move(p));
        }
    }
    if (!std::all_of(edge_used.begin(), edge_used.end(), [](bool b) { return b; }))
        throw NonRecurrentWindow("decomposition left uncovered edges");
    return paths;
}

ReducedRauzyGraph reduce(const RauzyGraph& g, const SpecialFactorReport& specials) {
    ReducedRauzyGraph r;
    r.order = g.order;
    std::vector<bool> special = special_mask(g, specials);
    bool any = std::any_of(special.begin(), special.end(), [](bool b) { return b; });

    if (!any) {
        // Periodic-type window: the graph is a single cycle carrying one
        // frequency; keep it as a synthetic loop.
        if (!g.strongly_connected())
            throw NonRecurrentWindow("the window graph is not strongly connected");
        r.degenerate = true;
        std::vector<uint32_t> all_edges(g.edges.size());
        for (uint32_t e = 0; e < g.edges.size(); ++e) all_edges[e] = e;
        SimplePath loop;
        loop.vertices = {0, 0};
        loop.edges = all_edges;
        loop.label = path_label(g, all_edges, loop.spread);
        r.degenerate_label = loop.label;
        r.vertices = {0};
        r.edges.push_back(std::move(loop));
        return r;
    }

    for (uint32_t v = 0; v < g.vertices.size(); ++v)
        if (special[v]) r.vertices.push_back(v);
    r.edges = decompose_simple_paths(g, specials);

    size_t ls_not_rs = 0;
    {
        std::vector<bool> rs(g.vertices.size(), false);
        for (uint32_t id : specials.right_special) rs[id] = true;
        for (uint32_t id : specials.left_special)
            if (!rs[id]) ++ls_not_rs;
    }
    r.ls_not_rs = ls_not_rs;

    // Edge-count identity of the contraction, exact on recurrent windows:
    // #edges = dC(n) + #RS + #(LS not RS).
    long expected = static_cast<long>(g.edges.size()) - static_cast<long>(g.vertices.size()) +
                    static_cast<long>(specials.z) + static_cast<long>(ls_not_rs);
    if (static_cast<long>(r.edges.size()) != expected)
        throw Error("internal: reduced edge count violates the contraction identity");
    return r;
}

namespace {

long find_edge(const RauzyGraph& g, const Word& factor) {
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), factor,
                               [](const GraphEdge& e, const Word& w) { return e.factor < w; });
    if (it == g.edges.end() || it->factor != factor) return -1;
    return it - g.edges.begin();
}

GraphSymmetry build_symmetry(const RauzyGraph& g, GraphSymmetry::Kind kind,
                             bool reverses_orientation,
                             const std::function<Word(const Word&)>& map_factor,
                             const char* closure_error) {
    GraphSymmetry sym;
    sym.kind = kind;
    sym.reverses_orientation = reverses_orientation;
    sym.vertex_map.resize(g.vertices.size());
    sym.edge_map.resize(g.edges.size());

    // On failure the mirror names the factor whose reversal is missing,
    // the permutation names the missing image.
    for (uint32_t v = 0; v < g.vertices.size(); ++v) {
        Word image = map_factor(g.vertices[v]);
        long target = g.find_vertex(image);
        if (target < 0) {
            if (kind == GraphSymmetry::Kind::Mirror)
                throw NotReversalClosed(closure_error, g.vertices[v]);
            throw NotClosedUnderPermutation(closure_error, image);
        }
        sym.vertex_map[v] = static_cast<uint32_t>(target);
    }
    for (uint32_t e = 0; e < g.edges.size(); ++e) {
        Word image = map_factor(g.edges[e].factor);
        long target = find_edge(g, image);
        if (target < 0) {
            if (kind == GraphSymmetry::Kind::Mirror)
                throw NotReversalClosed(closure_error, g.edges[e].factor);
            throw NotClosedUnderPermutation(closure_error, image);
        }
        sym.edge_map[e] = static_cast<uint32_t>(target);
    }

    // Automorphism: endpoints must map consistently (swapped for the
    // orientation-reversing mirror).
    for (uint32_t e = 0; e < g.edges.size(); ++e) {
        const GraphEdge& src = g.edges[e];
        const GraphEdge& dst = g.edges[sym.edge_map[e]];
        uint32_t expect_source = reverses_orientation ? sym.vertex_map[src.target]
                                                      : sym.vertex_map[src.source];
        uint32_t expect_target = reverses_orientation ? sym.vertex_map[src.source]
                                                      : sym.vertex_map[src.target];
        if (dst.source != expect_source || dst.target != expect_target)
            throw Error("internal: symmetry does not respect incidence");
    }

    sym.involution = true;
    for (uint32_t v = 0; v < g.vertices.size() && sym.involution; ++v)
        if (sym.vertex_map[sym.vertex_map[v]] != v) sym.involution = false;
    for (uint32_t e = 0; e < g.edges.size() && sym.involution; ++e)
        if (sym.edge_map[sym.edge_map[e]] != e) sym.involution = false;

    sym.label_preserving = true;
    for (uint32_t e = 0; e < g.edges.size(); ++e) {
        const Frequency& a = g.edges[e].label;
        const Frequency& b = g.edges[sym.edge_map[e]].label;
        if (g.engine != Engine::Empirical) {
            if (a.compare_exact(b) != 0) sym.label_preserving = false;
        } else if (!a.equals(b)) {
            sym.label_preserving = false;
        }
    }
    return sym;
}

}  // namespace

GraphSymmetry mirror_automorphism(const RauzyGraph& g, const FactorIndex& index) {
    for (size_t len : {g.order, g.order + 1}) {
        auto defects = reversal_closure_defect(index, len);
        if (!defects.empty())
            throw NotReversalClosed("window is not closed under reversal at length " +
                                        std::to_string(len),
                                    index.factor_word(len, defects.front()));
    }
    GraphSymmetry sym = build_symmetry(g, GraphSymmetry::Kind::Mirror, true,
                                       [](const Word& w) { return reversed(w); },
                                       "window is not closed under reversal");
    if (!sym.involution) throw Error("internal: mirror map is not an involution");
    if (g.engine != Engine::Empirical && !sym.label_preserving)
        throw Error("internal: exact frequencies are not mirror symmetric");
    return sym;
}

GraphSymmetry permutation_symmetry(const RauzyGraph& g, const std::vector<Letter>& pi) {
    // validate bijection over the letters the window actually uses
    std::vector<bool> seen(pi.size(), false);
    for (Letter v : pi) {
        if (v >= pi.size() || seen[v]) throw Error("letter permutation must be a bijection");
        seen[v] = true;
    }
    auto map_factor = [&pi](const Word& w) {
        Word out = w;
        for (char& c : out) {
            auto id = static_cast<unsigned char>(c);
            if (id >= pi.size()) throw Error("letter permutation smaller than the alphabet");
            c = static_cast<char>(pi[id]);
        }
        return out;
    };
    GraphSymmetry sym = build_symmetry(g, GraphSymmetry::Kind::LetterPermutation, false,
                                       map_factor, "window language not closed under the permutation");
    sym.letter_permutation = pi;
    return sym;
}

PathClassification classify_symmetric_paths(const RauzyGraph& g, const ReducedRauzyGraph& r,
                                            const GraphSymmetry& sym) {
    if (r.degenerate) throw Degenerate("path classification needs a non-degenerate reduced graph");

    // first edge -> path id; a simple path is determined by its first edge
    std::vector<long> path_of_first_edge(g.edges.size(), -1);
    for (size_t p = 0; p < r.edges.size(); ++p)
        path_of_first_edge[r.edges[p].edges.front()] = static_cast<long>(p);

    PathClassification out;
    out.fixed_tags.resize(r.edges.size(), false);
    out.image_of.resize(r.edges.size(), 0);
    for (size_t p = 0; p < r.edges.size(); ++p) {
        const SimplePath& path = r.edges[p];
        std::vector<uint32_t> image_edges;
        image_edges.reserve(path.edges.size());
        if (sym.reverses_orientation) {
            for (auto it = path.edges.rbegin(); it != path.edges.rend(); ++it)
                image_edges.push_back(sym.edge_map[*it]);
        } else {
            for (uint32_t e : path.edges) image_edges.push_back(sym.edge_map[e]);
        }
        long q = path_of_first_edge[image_edges.front()];
        if (q < 0 || r.edges[q].edges != image_edges)
            throw Error("internal: symmetry image of a simple path is not a simple path");
        out.image_of[p] = static_cast<uint32_t>(q);
        if (static_cast<size_t>(q) == p) {
            out.fixed_tags[p] = true;
            ++out.fixed;
        } else {
            ++out.moved;
        }
    }
    return out;
}

PathClassification classify_mu_paths(const RauzyGraph& g, const ReducedRauzyGraph& r,
                                     const GraphSymmetry& mu, const FactorIndex& index) {
    if (mu.kind != GraphSymmetry::Kind::Mirror) throw Error("classification expects the mirror map");
    PathClassification out = classify_symmetric_paths(g, r, mu);

    // Counting identities behind the frequency bound; exact on recurrent
    // reversal-closed windows, so a mismatch is a real defect.
    SpecialFactorReport specials = special_factors(index, g.order);
    size_t p_n = palindrome_complexity(index, g.order);
    size_t p_n1 = palindrome_complexity(index, g.order + 1);
    long a_expected = static_cast<long>(p_n) + static_cast<long>(p_n1) -
                      static_cast<long>(specials.y);
    if (static_cast<long>(out.fixed) != a_expected)
        throw Error("internal: fixed-path count disagrees with the palindrome identity");

    ComplexityPair c = complexity(index, g.order);
    long ab_expected = c.delta_c + 2 * static_cast<long>(specials.z) -
                       static_cast<long>(specials.x);
    if (static_cast<long>(out.fixed + out.moved) != ab_expected)
        throw Error("internal: path count disagrees with the contraction identity");

    // mu-fixed paths pin palindromes at their centre: even edge count gives
    // a palindromic central vertex, odd a palindromic central edge. The
    // converse holds too: every palindromic edge is such a centre, and every
    // palindromic vertex is either a centre or bispecial.
    std::set<uint32_t> central_vertices, central_edges;
    for (size_t p = 0; p < r.edges.size(); ++p) {
        if (!out.fixed_tags[p]) continue;
        const SimplePath& path = r.edges[p];
        size_t m = path.edges.size();
        if (m % 2 == 0) {
            uint32_t centre = path.vertices[m / 2];
            if (reversed(g.vertices[centre]) != g.vertices[centre])
                throw Error("internal: fixed even path without a palindromic centre vertex");
            central_vertices.insert(centre);
        } else {
            uint32_t centre = path.edges[m / 2];
            if (reversed(g.edges[centre].factor) != g.edges[centre].factor)
                throw Error("internal: fixed odd path without a palindromic centre edge");
            central_edges.insert(centre);
        }
    }
    std::set<uint32_t> palindromic_edges;
    for (uint32_t e = 0; e < g.edges.size(); ++e)
        if (reversed(g.edges[e].factor) == g.edges[e].factor) palindromic_edges.insert(e);
    if (central_edges != palindromic_edges)
        throw Error("internal: palindromic edges and fixed-path centres differ");
    std::set<uint32_t> expected_vertices;
    {
        std::set<uint32_t> bispecial(specials.bispecial.begin(), specials.bispecial.end());
        for (uint32_t v = 0; v < g.vertices.size(); ++v)
            if (reversed(g.vertices[v]) == g.vertices[v] && !bispecial.count(v))
                expected_vertices.insert(v);
    }
    if (central_vertices != expected_vertices)
        throw Error("internal: palindromic vertices and fixed-path centres differ");
    return out;
}

}  // namespace rauzy
