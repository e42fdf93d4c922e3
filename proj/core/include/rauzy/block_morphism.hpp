#pragma once

#include <set>

#include "rauzy/frequency.hpp"
#include "rauzy/morphism.hpp"

namespace rauzy {

/// Recoding of a substitution on the alphabet of its length-n factors.
/// Block letter ids follow the lexicographic order of the factors; symbols
/// are the rendered factor strings.
struct BlockMorphism {
    Morphism morphism;               // acts on block letters
    std::vector<Word> block_factors;  // block id -> length-n factor
    size_t order = 1;
    int power = 1;                   // p with images built from m^p
    Letter seed_block = 0;           // block of the fixed point's first n letters
};

/// All length-n factors of the fixed point of m from seed, computed by
/// iterating until the factor set of the growing prefix stabilizes (one
/// stable step suffices: any length-n factor of an image lies inside the
/// image of a factor of length <= n).
std::set<Word> fixed_point_factors(const Morphism& m, Letter seed, size_t n);

/// The n-block recoding: m is replaced by its smallest power m^p with
/// |m^p(w)| >= |m^p(w_0)| + n - 1 for every length-n factor w; the image of
/// block w is the sequence of |m^p(w_0)| consecutive length-n windows of
/// m^p(w). Requires m primitive and prolongable from seed.
BlockMorphism block_morphism(const Morphism& m, Letter seed, size_t n);

/// Exact letter frequencies: the right Perron eigenvector of the incidence
/// matrix, normalized to sum 1. Integer dominant eigenvalues solve over the
/// rationals, degree-2 ones over the quadratic field; anything else throws
/// UnsupportedEigenvalueDegree. The returned vector is certified by the
/// positivity of the eigenvector.
struct PerronResult {
    Quadratic eigenvalue;
    std::vector<Frequency> frequencies;  // per letter
};

PerronResult perron_frequencies(const Morphism& m);

/// Same, with a known exact eigenvalue (skips the numeric search).
PerronResult perron_frequencies(const Morphism& m, const Quadratic& eigenvalue);

/// Exact frequencies of the length-n and length-(n+1) factors of the fixed
/// point, via the n- and (n+1)-block recodings. The result telescopes
/// exactly: rho(w) equals the sum of rho(wa) over right extensions.
FrequencyAssignment exact_frequencies(const Morphism& m, Letter seed, size_t n);

/// Both levels of an exact assignment must telescope on each side and sum
/// to one; a failure indicates a solver defect, not bad input.
void verify_exact_telescoping(const FrequencyAssignment& assignment);

}  // namespace rauzy
