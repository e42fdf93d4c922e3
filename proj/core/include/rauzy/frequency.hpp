#pragma once

#include <map>
#include <string>
#include <vector>

#include "rauzy/factor_index.hpp"
#include "rauzy/quadratic.hpp"

namespace rauzy {

struct ApproxValue {
    double value = 0;
    double error = 0;
};

/// A factor frequency: exact rational, exact quadratic-field element, or an
/// approximation with an error bound. Exact quadratics with zero radical
/// coefficient canonicalize to the rational variant, so exact equality is
/// value equality.
class Frequency {
public:
    enum class Kind { Rational, Quadratic, Approx };

    Frequency() : kind_(Kind::Rational), rational_(0) {}
    static Frequency exact(const Rational& q) { return Frequency(q); }
    static Frequency exact(const Quadratic& q);
    static Frequency approx(double value, double error);

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ != Kind::Approx; }

    const Rational& rational() const;
    Quadratic quadratic() const;  // rational variant promotes
    const ApproxValue& approx_value() const;

    double to_double() const;

    /// Value equality. Exact variants compare exactly; an Approx compares
    /// equal to x iff |value - x| <= error (+ x's error).
    bool equals(const Frequency& other) const;

    /// Exact three-way comparison; both sides must be exact.
    int compare_exact(const Frequency& other) const;

    /// "p/q", "(a+b√d)", or "v±e".
    std::string str() const;

    /// Total order for deterministic output (exact where possible).
    bool before(const Frequency& other) const;

private:
    explicit Frequency(Rational q) : kind_(Kind::Rational), rational_(std::move(q)) {}

    Kind kind_;
    Rational rational_;
    Quadratic quadratic_;
    ApproxValue approx_{};
};

enum class Engine { Empirical, BlockPerron };

std::string engine_name(Engine e);

/// Frequencies for every factor of lengths n and n+1 (the vertex and edge
/// labels of the order-n graph).
struct FrequencyAssignment {
    size_t order = 0;
    Engine engine = Engine::Empirical;
    std::string provenance;
    size_t prefix_length = 0;  // empirical engine only
    std::map<Word, Frequency> vertex;  // factors of length n
    std::map<Word, Frequency> edge;    // factors of length n+1

    const Frequency& at_vertex(const Word& w) const;
    const Frequency& at_edge(const Word& w) const;
};

/// Windowed estimates count(w)/(N-n+1), exact rationals by construction.
FrequencyAssignment empirical_frequencies(const FactorIndex& index, size_t n);

struct FrequencyClass {
    Frequency representative;
    std::vector<Word> members;  // lexicographic
};

struct Clustering {
    std::vector<FrequencyClass> classes;  // ascending by representative
    size_t raw_distinct = 0;              // distinct raw values before merging
};

enum class ClusterLevel { Vertex, Edge };

/// Groups factors by frequency. Exact engines group by exact equality;
/// the empirical engine merges values closer than slack/(N - n)
/// (single-linkage), reporting the raw distinct count alongside so that
/// over-merging stays visible.
Clustering cluster_frequencies(const FrequencyAssignment& assignment,
                               ClusterLevel level = ClusterLevel::Edge,
                               const Rational& slack = Rational(4));

}  // namespace rauzy
