#pragma once

#include "rauzy/bounds.hpp"

namespace rauzy {

/// DOT document for the full graph; vertices and edges in lexicographic
/// factor order, so identical inputs give byte-identical output.
std::string to_dot(const RauzyGraph& g, const Alphabet& alphabet);

/// DOT document for the contraction. With a mirror classification the
/// mirror-fixed paths render dashed and mirror-paired paths share a color;
/// the synthetic vertex of a degenerate contraction carries
/// degenerate=true.
std::string to_dot_reduced(const RauzyGraph& g, const ReducedRauzyGraph& r,
                           const Alphabet& alphabet,
                           const PathClassification* mirror_classes = nullptr);

/// Per-order statistics table: n,C,dC,P_n,X,Y,Z,F,defect_count.
std::string analyze_csv(const std::vector<BoundReport>& reports);
std::string analyze_json(const std::vector<BoundReport>& reports);

/// Verification table:
/// n,C,dC,P_n,P_n1,X,Y,Z,A,B,F,lemma,finer,thm1,bosh,three_halves
/// followed by one verdict column per bound.
std::string verify_csv(const RangeResult& result);
std::string verify_json(const RangeResult& result);

std::string report_json(const BoundReport& report);

/// JSON rendering of one frequency, mirroring the three variants.
std::string frequency_json(const Frequency& f);

}  // namespace rauzy
