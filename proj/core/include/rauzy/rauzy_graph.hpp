#pragma once

#include <optional>

#include "rauzy/frequency.hpp"

namespace rauzy {

struct GraphEdge {
    Word factor;      // length n+1
    uint32_t source;  // vertex ids at order n
    uint32_t target;
    Frequency label;
};

/// Labeled graph of order n: vertices are the length-n factors, edges the
/// length-(n+1) factors, each edge labeled by its factor frequency.
/// Vertices and edges are stored in lexicographic factor order; vertex ids
/// coincide with the factor ids of the index the graph was built from.
struct RauzyGraph {
    size_t order = 0;
    Engine engine = Engine::Empirical;
    size_t prefix_length = 0;  // window size behind the statistics
    std::vector<Word> vertices;
    std::vector<GraphEdge> edges;
    std::vector<std::vector<uint32_t>> out_edges;  // per vertex, ascending
    std::vector<std::vector<uint32_t>> in_edges;

    long find_vertex(const Word& w) const;
    bool strongly_connected() const;
};

RauzyGraph build_rauzy_graph(const FactorIndex& index, size_t n,
                             const FrequencyAssignment& freqs);

/// max over vertices of |sum of in-labels - sum of out-labels|, exact.
/// Zero for exact engines; bounded by (n+1)/(N-n) for windowed estimates.
Frequency kirchhoff_residual(const RauzyGraph& g);

/// A path whose endpoints are special (LS or RS) and whose interior
/// vertices are not. With exact labels every edge carries the same
/// frequency; windowed labels get their exact rational mean, with the
/// largest in-path deviation kept as a quality metric.
struct SimplePath {
    std::vector<uint32_t> vertices;  // m+1 ids into the parent graph
    std::vector<uint32_t> edges;     // m ids
    Frequency label;
    Rational spread = Rational(0);
};

/// Every edge lies on exactly one simple path (requires a recurrent
/// window: the graph must be strongly connected). Throws Degenerate when
/// no special vertex exists.
std::vector<SimplePath> decompose_simple_paths(const RauzyGraph& g,
                                               const SpecialFactorReport& specials);

/// Contraction whose vertices are the special factors and whose edges are
/// the simple paths. The no-special-vertex case (periodic window) becomes
/// one synthetic vertex with a single loop, flagged degenerate.
struct ReducedRauzyGraph {
    size_t order = 0;
    bool degenerate = false;
    std::vector<uint32_t> vertices;  // special vertex ids of the parent graph
    std::vector<SimplePath> edges;
    std::optional<Frequency> degenerate_label;
    size_t ls_not_rs = 0;  // for the edge-count identity
};

ReducedRauzyGraph reduce(const RauzyGraph& g, const SpecialFactorReport& specials);

/// A symmetry of the labeled graph: the mirror map (orientation-reversing)
/// or a letter permutation (orientation-preserving).
struct GraphSymmetry {
    enum class Kind { Mirror, LetterPermutation };
    Kind kind = Kind::Mirror;
    bool reverses_orientation = true;
    std::vector<uint32_t> vertex_map;
    std::vector<uint32_t> edge_map;
    bool involution = false;
    bool label_preserving = false;  // exact equality; only asserted for exact engines
    std::vector<Letter> letter_permutation;
};

/// w -> reverse(w) on vertices and edges. Requires the window closed under
/// reversal at lengths n and n+1 (throws NotReversalClosed with a witness).
GraphSymmetry mirror_automorphism(const RauzyGraph& g, const FactorIndex& index);

/// Letterwise permutation T_pi. Throws NotClosedUnderPermutation with a
/// witness factor when T_pi leaves the window language.
GraphSymmetry permutation_symmetry(const RauzyGraph& g, const std::vector<Letter>& pi);

/// Simple paths fixed by a symmetry (as edges of the reduced graph).
struct PathClassification {
    size_t fixed = 0;  // A
    size_t moved = 0;  // B
    std::vector<bool> fixed_tags;   // per reduced edge
    std::vector<uint32_t> image_of;  // reduced edge id -> its symmetric image
};

PathClassification classify_symmetric_paths(const RauzyGraph& g, const ReducedRauzyGraph& r,
                                            const GraphSymmetry& sym);

/// Mirror classification with the counting identities checked:
/// A = P(n) + P(n+1) - Y and A + B = dC(n) + 2Z - X.
PathClassification classify_mu_paths(const RauzyGraph& g, const ReducedRauzyGraph& r,
                                     const GraphSymmetry& mu, const FactorIndex& index);

}  // namespace rauzy
