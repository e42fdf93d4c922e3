#pragma once

#include <optional>
#include <vector>

#include "rauzy/morphism.hpp"
#include "rauzy/quadratic.hpp"

namespace rauzy {

/// Letter at position n is floor((n+1)a + r) - floor(na + r), exact.
/// Requires 0 <= a <= 1 and 0 <= r < 1. Output letters are ids 0/1.
Word mechanical_word_prefix(const Quadratic& slope, const Quadratic& intercept, size_t n_letters);

/// Coding of the forward orbit of `start` under the interval exchange with
/// the given lengths (positive, summing to 1) and permutation (a bijection
/// of 1..k giving each interval's rank after the exchange). The symbol at
/// step t is the id of the subinterval containing the t-th iterate.
///
/// When all data lie in one quadratic field the orbit is exact. Otherwise
/// iteration runs at `precision_bits` and throws PrecisionExhausted if an
/// iterate falls within 2^(-precision_bits/2) of a discontinuity.
Word iet_coding_prefix(const std::vector<Quadratic>& lengths, const std::vector<int>& permutation,
                       const Quadratic& start, size_t n_letters,
                       unsigned precision_bits = 128);

/// Pattern repeated and truncated to n letters.
Word periodic_prefix(const Word& pattern, size_t n_letters);

}  // namespace rauzy
