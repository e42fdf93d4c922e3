#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rauzy/export.hpp"

using namespace rauzy;

namespace {

struct Setup {
    WordSource source;
    FactorIndex index;
    FrequencyAssignment freqs;
    RauzyGraph graph;
    SpecialFactorReport specials;

    Setup(WordSource src, size_t n, size_t window, bool exact)
        : source(std::move(src)),
          index(source.prefix(window), n + 1, source.alphabet()),
          freqs(exact ? exact_frequencies(source.substitution()->first,
                                          source.substitution()->second, n)
                      : empirical_frequencies(index, n)),
          graph(build_rauzy_graph(index, n, freqs)),
          specials(special_factors(index, n)) {}
};

Setup fib_setup(size_t n, bool exact = true) {
    return Setup(WordSource::morphism("0->01;1->0", '0'), n, 20000, exact);
}
Setup thue_setup(size_t n, bool exact = true) {
    return Setup(WordSource::morphism("0->01;1->10", '0'), n, 20000, exact);
}
Setup periodic_setup(const std::string& pattern, size_t n, bool exact = true) {
    return Setup(WordSource::periodic(pattern), n, 400, exact);
}

std::string show(const Setup& s, const Word& w) { return s.source.alphabet().render(w); }

}  // namespace

TEST_CASE("graph shape at order 1") {
    Setup fib = fib_setup(1);
    CHECK(fib.graph.vertices.size() == 2);
    CHECK(fib.graph.edges.size() == 3);
    // edge labels: 00 -> sqrt5-2, 01 and 10 -> (3-sqrt5)/2
    Quadratic small(make_rational(-2), make_rational(1), 5);
    Quadratic big(make_rational(3, 2), make_rational(-1, 2), 5);
    CHECK(fib.graph.edges[0].label.quadratic() == small);
    CHECK(fib.graph.edges[1].label.quadratic() == big);
    CHECK(fib.graph.edges[2].label.quadratic() == big);

    Setup tm = thue_setup(1);
    CHECK(tm.graph.vertices.size() == 2);
    CHECK(tm.graph.edges.size() == 4);
    CHECK(tm.graph.edges[0].label.rational() == make_rational(1, 6));   // 00
    CHECK(tm.graph.edges[1].label.rational() == make_rational(1, 3));   // 01
    CHECK(tm.graph.edges[2].label.rational() == make_rational(1, 3));   // 10
    CHECK(tm.graph.edges[3].label.rational() == make_rational(1, 6));   // 11

    Setup per = periodic_setup("01", 1);
    CHECK(per.graph.vertices.size() == 2);
    CHECK(per.graph.edges.size() == 2);  // the two-cycle 01, 10
}

TEST_CASE("vertex and edge counts match the complexity") {
    for (size_t n : {1u, 2u, 5u, 9u}) {
        Setup s = thue_setup(n);
        ComplexityPair c = complexity(s.index, n);
        CHECK(s.graph.vertices.size() == c.c_n);
        CHECK(s.graph.edges.size() == c.c_n + c.delta_c);
        // endpoint consistency: source/target are prefix/suffix
        for (const GraphEdge& e : s.graph.edges) {
            CHECK(Word(e.factor.begin(), e.factor.end() - 1) == s.graph.vertices[e.source]);
            CHECK(Word(e.factor.begin() + 1, e.factor.end()) == s.graph.vertices[e.target]);
        }
    }
}

TEST_CASE("missing frequencies are rejected") {
    Setup s = fib_setup(2);
    FrequencyAssignment broken = s.freqs;
    broken.edge.erase(broken.edge.begin());
    CHECK_THROWS_AS(build_rauzy_graph(s.index, 2, broken), MissingFrequency);
}

TEST_CASE("flow balance is exactly zero for exact labels") {
    for (size_t n : {1u, 2u, 6u}) {
        CHECK(kirchhoff_residual(fib_setup(n).graph).quadratic().sign() == 0);
        CHECK(kirchhoff_residual(thue_setup(n).graph).quadratic().sign() == 0);
    }
}

TEST_CASE("flow balance of windowed labels stays within the boundary effect") {
    WordSource src = WordSource::morphism("0->01;1->0", '0');
    const size_t window = 100000;
    FactorIndex ix(src.prefix(window), 6, src.alphabet());
    FrequencyAssignment freqs = empirical_frequencies(ix, 5);
    RauzyGraph g = build_rauzy_graph(ix, 5, freqs);
    Frequency residual = kirchhoff_residual(g);
    Rational tolerance = make_rational(6, static_cast<long>(window) - 5);
    CHECK(residual.compare_exact(Frequency::exact(tolerance)) <= 0);
}

TEST_CASE("simple path decomposition of the golden graph at order 1") {
    Setup s = fib_setup(1);
    auto paths = decompose_simple_paths(s.graph, s.specials);
    REQUIRE(paths.size() == 2);
    // [0,0] with label sqrt5-2 and [0,1,0] with label (3-sqrt5)/2
    CHECK(show(s, s.graph.vertices[paths[0].vertices[0]]) == "0");
    CHECK(paths[0].vertices.size() == 2);
    CHECK(paths[0].label.quadratic() == Quadratic(make_rational(-2), make_rational(1), 5));
    CHECK(paths[1].vertices.size() == 3);
    CHECK(show(s, s.graph.vertices[paths[1].vertices[1]]) == "1");
    CHECK(paths[1].label.quadratic() == Quadratic(make_rational(3, 2), make_rational(-1, 2), 5));
}

TEST_CASE("simple path decomposition of the uniform binary graph at order 1") {
    Setup s = thue_setup(1);
    auto paths = decompose_simple_paths(s.graph, s.specials);
    REQUIRE(paths.size() == 4);
    for (const SimplePath& p : paths) CHECK(p.edges.size() == 1);
}

TEST_CASE("degenerate decomposition throws") {
    Setup s = periodic_setup("01", 1);
    CHECK_THROWS_AS(decompose_simple_paths(s.graph, s.specials), Degenerate);
}

TEST_CASE("every edge lies on exactly one simple path") {
    for (size_t n : {2u, 4u, 8u}) {
        Setup s = thue_setup(n);
        auto paths = decompose_simple_paths(s.graph, s.specials);
        std::set<uint32_t> covered;
        size_t total = 0;
        for (const SimplePath& p : paths) {
            for (uint32_t e : p.edges) covered.insert(e);
            total += p.edges.size();
            // interior vertices are not special, endpoints are
            std::set<uint32_t> special(s.specials.right_special.begin(),
                                       s.specials.right_special.end());
            special.insert(s.specials.left_special.begin(), s.specials.left_special.end());
            CHECK(special.count(p.vertices.front()) == 1);
            CHECK(special.count(p.vertices.back()) == 1);
            for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
                CHECK(special.count(p.vertices[i]) == 0);
        }
        CHECK(total == s.graph.edges.size());
        CHECK(covered.size() == s.graph.edges.size());
    }
}

TEST_CASE("reduction counts") {
    Setup fib = fib_setup(1);
    ReducedRauzyGraph r = reduce(fib.graph, fib.specials);
    CHECK_FALSE(r.degenerate);
    CHECK(r.vertices.size() == 1);
    CHECK(r.edges.size() == 2);  // dC + Z + #(LS not RS) = 1 + 1 + 0

    Setup tm = thue_setup(1);
    ReducedRauzyGraph t = reduce(tm.graph, tm.specials);
    CHECK(t.vertices.size() == 2);
    CHECK(t.edges.size() == 4);  // 2 + 2 + 0
}

TEST_CASE("degenerate reduction keeps the common label") {
    Setup s = periodic_setup("01", 2);
    ReducedRauzyGraph r = reduce(s.graph, s.specials);
    CHECK(r.degenerate);
    REQUIRE(r.degenerate_label);
    CHECK(r.degenerate_label->rational() == make_rational(1, 2));
    REQUIRE(r.edges.size() == 1);
    CHECK(r.edges[0].edges.size() == s.graph.edges.size());

    GraphSymmetry mu = mirror_automorphism(s.graph, s.index);
    CHECK_THROWS_AS(classify_symmetric_paths(s.graph, r, mu), Degenerate);
}

TEST_CASE("no label is lost by the reduction") {
    for (size_t n : {1u, 3u, 6u}) {
        Setup s = thue_setup(n);
        ReducedRauzyGraph r = reduce(s.graph, s.specials);
        auto key = [](const Frequency& f) { return f.str(); };
        std::set<std::string> graph_labels, path_labels;
        for (const GraphEdge& e : s.graph.edges) graph_labels.insert(key(e.label));
        for (const SimplePath& p : r.edges) path_labels.insert(key(p.label));
        CHECK(graph_labels == path_labels);
    }
}

TEST_CASE("mirror map on the golden graph at order 1") {
    Setup s = fib_setup(1);
    GraphSymmetry mu = mirror_automorphism(s.graph, s.index);
    CHECK(mu.involution);
    CHECK(mu.label_preserving);
    CHECK(mu.reverses_orientation);
    // fixes 0, 1, 00; swaps 01 <-> 10
    CHECK(mu.vertex_map[0] == 0);
    CHECK(mu.vertex_map[1] == 1);
    long e00 = 0, e01 = 1, e10 = 2;  // lexicographic edge order
    CHECK(mu.edge_map[e00] == static_cast<uint32_t>(e00));
    CHECK(mu.edge_map[e01] == static_cast<uint32_t>(e10));
    CHECK(mu.edge_map[e10] == static_cast<uint32_t>(e01));
}

TEST_CASE("mirror map requires reversal closure") {
    WordSource bad = WordSource::explicit_prefix("0111111111");
    FactorIndex ix(bad.prefix(10), 2, bad.alphabet());
    FrequencyAssignment freqs = empirical_frequencies(ix, 1);
    RauzyGraph g = build_rauzy_graph(ix, 1, freqs);
    bool threw = false;
    try {
        mirror_automorphism(g, ix);
    } catch (const NotReversalClosed& e) {
        threw = true;
        CHECK(ix.alphabet().render(e.witness) == "01");
    }
    CHECK(threw);
}

TEST_CASE("mirror map squares to the identity across orders") {
    for (size_t n = 1; n <= 10; ++n) {
        Setup s = thue_setup(n);
        GraphSymmetry mu = mirror_automorphism(s.graph, s.index);
        CHECK(mu.involution);
        CHECK(mu.label_preserving);
    }
}

TEST_CASE("mirror path classification at order 1") {
    Setup fib = fib_setup(1);
    ReducedRauzyGraph r = reduce(fib.graph, fib.specials);
    GraphSymmetry mu = mirror_automorphism(fib.graph, fib.index);
    PathClassification cls = classify_mu_paths(fib.graph, r, mu, fib.index);
    CHECK(cls.fixed == 2);
    CHECK(cls.moved == 0);

    Setup tm = thue_setup(1);
    ReducedRauzyGraph tr = reduce(tm.graph, tm.specials);
    GraphSymmetry tmu = mirror_automorphism(tm.graph, tm.index);
    PathClassification tcls = classify_mu_paths(tm.graph, tr, tmu, tm.index);
    CHECK(tcls.fixed == 2);  // the palindromic loops 00 and 11
    CHECK(tcls.moved == 2);  // 01 <-> 10
}

TEST_CASE("mirror classification identities across orders") {
    for (size_t n = 1; n <= 9; ++n) {
        for (Setup s : {fib_setup(n), thue_setup(n)}) {
            ReducedRauzyGraph r = reduce(s.graph, s.specials);
            GraphSymmetry mu = mirror_automorphism(s.graph, s.index);
            // classify_mu_paths itself checks A = P(n)+P(n+1)-Y and
            // A+B = dC+2Z-X, throwing on any mismatch
            PathClassification cls = classify_mu_paths(s.graph, r, mu, s.index);
            CHECK(cls.fixed + cls.moved == r.edges.size());
            // the mirror image of each path is a path with the same label
            for (size_t p = 0; p < r.edges.size(); ++p)
                CHECK(r.edges[p].label.compare_exact(r.edges[cls.image_of[p]].label) == 0);
        }
    }
}

TEST_CASE("letter exchange on the uniform binary word") {
    for (size_t n = 1; n <= 8; ++n) {
        Setup s = thue_setup(n);
        GraphSymmetry pi = permutation_symmetry(s.graph, {1, 0});
        CHECK(pi.involution);
        CHECK(pi.label_preserving);
        CHECK_FALSE(pi.reverses_orientation);
        ReducedRauzyGraph r = reduce(s.graph, s.specials);
        PathClassification cls = classify_symmetric_paths(s.graph, r, pi);
        CHECK(cls.fixed == 0);  // letter exchange fixes no factor
        CHECK(cls.moved == r.edges.size());
    }
}

TEST_CASE("letter exchange is rejected for the golden word") {
    Setup s = fib_setup(1);
    try {
        permutation_symmetry(s.graph, {1, 0});
        FAIL("expected NotClosedUnderPermutation");
    } catch (const NotClosedUnderPermutation& e) {
        CHECK(e.witness == Word("\x01\x01", 2));  // 11 is not a factor
    }
}

TEST_CASE("identity permutation fixes everything") {
    Setup s = thue_setup(2);
    GraphSymmetry id = permutation_symmetry(s.graph, {0, 1});
    for (uint32_t v = 0; v < s.graph.vertices.size(); ++v) CHECK(id.vertex_map[v] == v);
    ReducedRauzyGraph r = reduce(s.graph, s.specials);
    PathClassification cls = classify_symmetric_paths(s.graph, r, id);
    CHECK(cls.moved == 0);
}

TEST_CASE("non-recurrent windows are rejected") {
    WordSource bad = WordSource::explicit_prefix("0111111111");
    FactorIndex ix(bad.prefix(10), 2, bad.alphabet());
    FrequencyAssignment freqs = empirical_frequencies(ix, 1);
    RauzyGraph g = build_rauzy_graph(ix, 1, freqs);
    CHECK_FALSE(g.strongly_connected());
    SpecialFactorReport specials = special_factors(ix, 1);
    CHECK_THROWS_AS(decompose_simple_paths(g, specials), NonRecurrentWindow);
}

TEST_CASE("dot export is deterministic and carries the conventions") {
    Setup s = fib_setup(1);
    std::string dot = to_dot(s.graph, s.source.alphabet());
    CHECK(dot == to_dot(fib_setup(1).graph, s.source.alphabet()));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"0\" -> \"1\"") != std::string::npos);
    CHECK(dot.find("(3/2-1/2√5)") != std::string::npos);

    ReducedRauzyGraph r = reduce(s.graph, s.specials);
    GraphSymmetry mu = mirror_automorphism(s.graph, s.index);
    PathClassification cls = classify_mu_paths(s.graph, r, mu, s.index);
    std::string reduced_dot = to_dot_reduced(s.graph, r, s.source.alphabet(), &cls);
    CHECK(reduced_dot.find("style=dashed") != std::string::npos);

    Setup per = periodic_setup("01", 2);
    ReducedRauzyGraph pr = reduce(per.graph, per.specials);
    std::string deg = to_dot_reduced(per.graph, pr, per.source.alphabet());
    CHECK(deg.find("degenerate=true") != std::string::npos);
}
