#include <cmath>
#include <numeric>
#include <optional>

#include "rauzy/block_morphism.hpp"

namespace rauzy {

namespace {

// Row-reduce (M - lambda I) over the quadratic field and return the kernel
// vector normalized to sum 1, or nothing if the kernel is not a line or the
// vector is not strictly positive. A strictly positive eigenvector of a
// nonnegative irreducible matrix certifies lambda as the Perron root, so a
// successful solve is self-verifying.
std::optional<std::vector<Quadratic>> positive_kernel_vector(
    const std::vector<std::vector<long>>& matrix, const Quadratic& lambda) {
    const size_t k = matrix.size();
    std::vector<std::vector<Quadratic>> a(k, std::vector<Quadratic>(k, Quadratic(0)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            a[i][j] = Quadratic(make_rational(matrix[i][j]));
            if (i == j) a[i][j] -= lambda;
        }

    std::vector<long> pivot_of_row(k, -1);
    size_t rank = 0;
    for (size_t col = 0; col < k && rank < k; ++col) {
        size_t pivot = rank;
        while (pivot < k && a[pivot][col].sign() == 0) ++pivot;
        if (pivot == k) continue;
        std::swap(a[pivot], a[rank]);
        Quadratic inv = Quadratic(1) / a[rank][col];
        for (size_t j = col; j < k; ++j) a[rank][j] *= inv;
        for (size_t i = 0; i < k; ++i) {
            if (i == rank || a[i][col].sign() == 0) continue;
            Quadratic factor = a[i][col];
            for (size_t j = col; j < k; ++j) a[i][j] -= factor * a[rank][j];
        }
        pivot_of_row[rank] = static_cast<long>(col);
        ++rank;
    }
    if (rank + 1 != k) return std::nullopt;  // kernel is not one-dimensional

    std::vector<bool> is_pivot(k, false);
    for (size_t r = 0; r < rank; ++r) is_pivot[pivot_of_row[r]] = true;
    size_t free_col = 0;
    while (free_col < k && is_pivot[free_col]) ++free_col;

    std::vector<Quadratic> v(k, Quadratic(0));
    v[free_col] = Quadratic(1);
    for (size_t r = 0; r < rank; ++r)
        v[pivot_of_row[r]] = -a[r][free_col];

    Quadratic sum(0);
    for (const Quadratic& c : v) sum += c;
    if (sum.sign() == 0) return std::nullopt;
    for (Quadratic& c : v) c /= sum;
    for (const Quadratic& c : v)
        if (c.sign() <= 0) return std::nullopt;
    return v;
}

double dominant_eigenvalue_estimate(const std::vector<std::vector<long>>& matrix) {
    const size_t k = matrix.size();
    std::vector<double> v(k, 1.0);
    double lambda = 1.0;
    for (int iter = 0; iter < 200000; ++iter) {
        std::vector<double> w(k, 0.0);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) w[i] += static_cast<double>(matrix[i][j]) * v[j];
        double sum = std::accumulate(w.begin(), w.end(), 0.0);
        if (sum <= 0) throw Error("power iteration collapsed");
        double next = sum / std::accumulate(v.begin(), v.end(), 0.0);
        for (size_t i = 0; i < k; ++i) v[i] = w[i] / sum;
        if (iter > 10 && std::abs(next - lambda) < 1e-14 * std::max(1.0, std::abs(next)))
            return next;
        lambda = next;
    }
    return lambda;
}

long squarefree_split(long value, long& square_root_part) {
    long s = 1;
    for (long p = 2; p * p <= value; ++p) {
        while (value % (p * p) == 0) {
            value /= p * p;
            s *= p;
        }
    }
    square_root_part = s;
    return value;
}

PerronResult solve_with(const std::vector<std::vector<long>>& matrix, const Quadratic& lambda) {
    auto v = positive_kernel_vector(matrix, lambda);
    if (!v) throw Error("eigenvalue does not admit a positive unit eigenvector");
    PerronResult out;
    out.eigenvalue = lambda;
    out.frequencies.reserve(v->size());
    for (const Quadratic& c : *v) out.frequencies.push_back(Frequency::exact(c));
    return out;
}

}  // namespace

PerronResult perron_frequencies(const Morphism& m, const Quadratic& eigenvalue) {
    if (!is_primitive(m)) throw NotPrimitive("Perron frequencies require a primitive substitution");
    return solve_with(m.incidence_matrix(), eigenvalue);
}

PerronResult perron_frequencies(const Morphism& m) {
    if (!is_primitive(m)) throw NotPrimitive("Perron frequencies require a primitive substitution");
    auto matrix = m.incidence_matrix();
    const double lambda_num = dominant_eigenvalue_estimate(matrix);

    // Degree 1: the dominant root of a monic integer polynomial is an
    // integer when rational.
    for (long r : {std::llround(lambda_num), static_cast<long long>(std::floor(lambda_num)),
                   static_cast<long long>(std::ceil(lambda_num))}) {
        if (r < 1 || std::abs(lambda_num - static_cast<double>(r)) > 0.1) continue;
        if (auto v = positive_kernel_vector(matrix, Quadratic(make_rational(r)))) {
            PerronResult out;
            out.eigenvalue = Quadratic(make_rational(r));
            for (const Quadratic& c : *v) out.frequencies.push_back(Frequency::exact(c));
            return out;
        }
    }

    // Degree 2: lambda satisfies x^2 - t x + s with integer t = lambda + mu,
    // s = lambda * mu and |mu| < lambda, so t ranges over (0, 2 lambda).
    long t_max = static_cast<long>(std::ceil(2 * lambda_num)) + 1;
    for (long t = 1; t <= t_max; ++t) {
        double s_real = static_cast<double>(t) * lambda_num - lambda_num * lambda_num;
        double s_rounded = std::round(s_real);
        if (std::abs(s_real - s_rounded) > 1e-5) continue;
        long s = static_cast<long>(s_rounded);
        long discriminant = t * t - 4 * s;
        if (discriminant <= 0) continue;
        long root_part = 1;
        long d = squarefree_split(discriminant, root_part);
        if (d == 1) continue;  // perfect square: rational root, handled above
        Quadratic candidate(make_rational(t, 2), make_rational(root_part, 2), d);
        if (std::abs(candidate.to_double() - lambda_num) > 1e-5) continue;
        if (auto v = positive_kernel_vector(matrix, candidate)) {
            PerronResult out;
            out.eigenvalue = candidate;
            for (const Quadratic& c : *v) out.frequencies.push_back(Frequency::exact(c));
            return out;
        }
    }

    throw UnsupportedEigenvalueDegree(
        "dominant eigenvalue is not rational or quadratic; use the empirical engine");
}

}  // namespace rauzy
