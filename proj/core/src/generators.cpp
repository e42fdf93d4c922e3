#include "rauzy/generators.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace rauzy {

Word mechanical_word_prefix(const Quadratic& slope, const Quadratic& intercept, size_t n_letters) {
    const Quadratic zero(0), one(1);
    if (slope < zero || slope > one) throw Error("mechanical slope must lie in [0,1]");
    if (intercept < zero || intercept >= one) throw Error("mechanical intercept must lie in [0,1)");

    // letter(n) = floor((n+1)a+r) - floor(na+r); tracked via the fractional
    // part so every step is one addition and one comparison.
    Word out;
    out.reserve(n_letters);
    Quadratic frac = intercept;
    for (size_t i = 0; i < n_letters; ++i) {
        frac += slope;
        if (frac >= one) {
            out.push_back(1);
            frac -= one;
        } else {
            out.push_back(0);
        }
    }
    return out;
}

namespace {

void validate_permutation(const std::vector<int>& permutation, size_t k) {
    if (permutation.size() != k) throw Error("permutation size must match interval count");
    std::vector<bool> seen(k, false);
    for (int v : permutation) {
        if (v < 1 || static_cast<size_t>(v) > k || seen[v - 1])
            throw Error("permutation must be a bijection of 1..k");
        seen[v - 1] = true;
    }
}

bool single_field(const std::vector<Quadratic>& values) {
    long d = 1;
    for (const Quadratic& v : values) {
        if (v.is_rational()) continue;
        if (d == 1)
            d = v.radicand();
        else if (d != v.radicand())
            return false;
    }
    return true;
}

// Translation of interval j: lengths placed before it after the exchange
// minus lengths before it now. Generic over the arithmetic type.
template <typename Num>
std::vector<Num> exchange_offsets(const std::vector<Num>& lengths,
                                  const std::vector<int>& permutation) {
    const size_t k = lengths.size();
    const Num zero = lengths[0] - lengths[0];  // keeps mpf precision
    std::vector<Num> offsets;
    offsets.reserve(k);
    Num before_now = zero;
    for (size_t j = 0; j < k; ++j) {
        Num before_after = zero;
        for (size_t i = 0; i < k; ++i)
            if (permutation[i] < permutation[j]) before_after += lengths[i];
        offsets.push_back(before_after - before_now);
        before_now += lengths[j];
    }
    return offsets;
}

Word iet_exact(const std::vector<Quadratic>& lengths, const std::vector<int>& permutation,
               const Quadratic& start, size_t n_letters) {
    const size_t k = lengths.size();
    Quadratic sum(0);
    for (const Quadratic& l : lengths) {
        if (l.sign() <= 0) throw Error("interval lengths must be positive");
        sum += l;
    }
    if (sum != Quadratic(1)) throw Error("interval lengths must sum to 1");
    if (start.sign() < 0 || start >= Quadratic(1)) throw Error("start point must lie in [0,1)");

    std::vector<Quadratic> boundaries(k + 1, Quadratic(0));
    for (size_t j = 1; j <= k; ++j) boundaries[j] = boundaries[j - 1] + lengths[j - 1];
    std::vector<Quadratic> offsets = exchange_offsets(lengths, permutation);

    Quadratic x = start;
    Word out;
    out.reserve(n_letters);
    for (size_t t = 0; t < n_letters; ++t) {
        size_t j = 0;
        while (j + 1 < k && x >= boundaries[j + 1]) ++j;
        out.push_back(static_cast<char>(j));
        x += offsets[j];
    }
    return out;
}

mpf_class to_mpf(const Quadratic& q, unsigned bits) {
    mpf_class v(0, bits);
    v = q.rational_part().get_num();
    v /= q.rational_part().get_den();
    if (!q.is_rational()) {
        mpf_class root(q.radicand(), bits);
        mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
        mpf_class coeff(0, bits);
        coeff = q.radical_coefficient().get_num();
        coeff /= q.radical_coefficient().get_den();
        v += coeff * root;
    }
    return v;
}

Word iet_approx(const std::vector<Quadratic>& exact_lengths, const std::vector<int>& permutation,
                const Quadratic& start, size_t n_letters, unsigned precision_bits) {
    const size_t k = exact_lengths.size();
    if (precision_bits < 8) throw Error("precision must be at least 8 bits");

    mpf_class guard(1, precision_bits);
    mpf_div_2exp(guard.get_mpf_t(), guard.get_mpf_t(), precision_bits / 2);

    std::vector<mpf_class> lengths;
    lengths.reserve(k);
    for (const Quadratic& l : exact_lengths) {
        if (l.sign() <= 0) throw Error("interval lengths must be positive");
        lengths.push_back(to_mpf(l, precision_bits));
    }
    std::vector<mpf_class> boundaries;
    boundaries.emplace_back(0, precision_bits);
    for (size_t j = 0; j < k; ++j) boundaries.push_back(boundaries.back() + lengths[j]);
    if (abs(boundaries.back() - 1) > guard) throw Error("interval lengths must sum to 1");
    std::vector<mpf_class> offsets = exchange_offsets(lengths, permutation);

    mpf_class x = to_mpf(start, precision_bits);
    if (x < 0 || x >= 1) throw Error("start point must lie in [0,1)");
    Word out;
    out.reserve(n_letters);
    for (size_t t = 0; t < n_letters; ++t) {
        for (size_t j = 0; j <= k; ++j) {
            if (abs(x - boundaries[j]) < guard)
                throw PrecisionExhausted("iterate " + std::to_string(t) +
                                         " indistinguishable from an interval endpoint at " +
                                         std::to_string(precision_bits) + " bits");
        }
        size_t j = 0;
        while (j + 1 < k && x >= boundaries[j + 1]) ++j;
        out.push_back(static_cast<char>(j));
        x += offsets[j];
    }
    return out;
}

}  // namespace

Word iet_coding_prefix(const std::vector<Quadratic>& lengths, const std::vector<int>& permutation,
                       const Quadratic& start, size_t n_letters, unsigned precision_bits) {
    if (lengths.empty()) throw Error("interval exchange needs at least one interval");
    validate_permutation(permutation, lengths.size());

    std::vector<Quadratic> all = lengths;
    all.push_back(start);
    if (single_field(all)) return iet_exact(lengths, permutation, start, n_letters);
    return iet_approx(lengths, permutation, start, n_letters, precision_bits);
}

Word periodic_prefix(const Word& pattern, size_t n_letters) {
    if (pattern.empty()) throw EmptyPattern("periodic pattern must be nonempty");
    Word out;
    out.reserve(n_letters);
    while (out.size() < n_letters)
        out.append(pattern, 0, std::min(pattern.size(), n_letters - out.size()));
    return out;
}

}  // namespace rauzy
