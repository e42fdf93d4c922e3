#include "rauzy/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rauzy {

Frequency Frequency::exact(const Quadratic& q) {
    if (q.is_rational()) return Frequency(q.rational_part());
    Frequency f;
    f.kind_ = Kind::Quadratic;
    f.quadratic_ = q;
    return f;
}

Frequency Frequency::approx(double value, double error) {
    if (error < 0) throw Error("negative error bound");
    Frequency f;
    f.kind_ = Kind::Approx;
    f.approx_ = ApproxValue{value, error};
    return f;
}

const Rational& Frequency::rational() const {
    if (kind_ != Kind::Rational) throw Error("frequency is not rational");
    return rational_;
}

Quadratic Frequency::quadratic() const {
    if (kind_ == Kind::Approx) throw Error("frequency is not exact");
    if (kind_ == Kind::Rational) return Quadratic(rational_);
    return quadratic_;
}

const ApproxValue& Frequency::approx_value() const {
    if (kind_ != Kind::Approx) throw Error("frequency is not approximate");
    return approx_;
}

double Frequency::to_double() const {
    switch (kind_) {
        case Kind::Rational: return rational_.get_d();
        case Kind::Quadratic: return quadratic_.to_double();
        default: return approx_.value;
    }
}

bool Frequency::equals(const Frequency& other) const {
    if (is_exact() && other.is_exact()) return compare_exact(other) == 0;
    double tolerance = 0;
    if (kind_ == Kind::Approx) tolerance += approx_.error;
    if (other.kind_ == Kind::Approx) tolerance += other.approx_.error;
    return std::abs(to_double() - other.to_double()) <= tolerance;
}

int Frequency::compare_exact(const Frequency& other) const {
    if (!is_exact() || !other.is_exact()) throw Error("exact comparison on approximate frequency");
    if (kind_ == Kind::Rational && other.kind_ == Kind::Rational)
        return cmp(rational_, other.rational_);
    Quadratic lhs = kind_ == Kind::Rational ? Quadratic(rational_) : quadratic_;
    Quadratic rhs = other.kind_ == Kind::Rational ? Quadratic(other.rational_) : other.quadratic_;
    if (!lhs.is_rational() && !rhs.is_rational() && lhs.radicand() != rhs.radicand()) {
        // Distinct square-free radicands: equal is impossible; order by value.
        double diff = lhs.to_double() - rhs.to_double();
        return diff < 0 ? -1 : 1;
    }
    return (lhs - rhs).sign();
}

std::string Frequency::str() const {
    switch (kind_) {
        case Kind::Rational: return to_string(rational_);
        case Kind::Quadratic: return quadratic_.str();
        default: {
            std::ostringstream out;
            out.precision(12);
            out << approx_.value << "±" << approx_.error;
            return out.str();
        }
    }
}

bool Frequency::before(const Frequency& other) const {
    if (is_exact() && other.is_exact()) return compare_exact(other) < 0;
    double a = to_double();
    double b = other.to_double();
    if (a != b) return a < b;
    return kind_ < other.kind_;
}

std::string engine_name(Engine e) {
    return e == Engine::Empirical ? "empirical" : "block-perron";
}

const Frequency& FrequencyAssignment::at_vertex(const Word& w) const {
    auto it = vertex.find(w);
    if (it == vertex.end()) throw MissingFrequency("no frequency for a length-" +
                                                   std::to_string(order) + " factor");
    return it->second;
}

const Frequency& FrequencyAssignment::at_edge(const Word& w) const {
    auto it = edge.find(w);
    if (it == edge.end()) throw MissingFrequency("no frequency for a length-" +
                                                 std::to_string(order + 1) + " factor");
    return it->second;
}

FrequencyAssignment empirical_frequencies(const FactorIndex& index, size_t n) {
    if (n + 1 > index.length_cap())
        throw OutOfWindow("empirical frequencies at " + std::to_string(n) + " need cap >= " +
                          std::to_string(n + 1));
    const size_t N = index.prefix_length();
    FrequencyAssignment a;
    a.order = n;
    a.engine = Engine::Empirical;
    a.prefix_length = N;
    a.provenance = "prefix N=" + std::to_string(N);
    for (size_t len : {n, n + 1}) {
        auto& target = len == n ? a.vertex : a.edge;
        const Rational total = make_rational(static_cast<long>(N - len + 1));
        for (uint32_t id = 0; id < index.factors(len).size(); ++id) {
            const FactorInfo& f = index.factors(len)[id];
            target[index.factor_word(len, id)] =
                Frequency::exact(make_rational(static_cast<long>(f.count)) / total);
        }
    }
    return a;
}

Clustering cluster_frequencies(const FrequencyAssignment& assignment, ClusterLevel level,
                               const Rational& slack) {
    const auto& values = level == ClusterLevel::Edge ? assignment.edge : assignment.vertex;
    std::vector<std::pair<Frequency, Word>> items;
    items.reserve(values.size());
    for (const auto& [w, f] : values) items.emplace_back(f, w);
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& a, const auto& b) { return a.first.before(b.first); });

    Clustering out;
    if (items.empty()) return out;

    out.raw_distinct = 1;
    for (size_t i = 1; i < items.size(); ++i)
        if (!items[i].first.equals(items[i - 1].first)) ++out.raw_distinct;

    const bool empirical = assignment.engine == Engine::Empirical;
    Rational threshold(0);
    if (empirical) {
        if (assignment.prefix_length <= assignment.order)
            throw Error("empirical assignment without a usable prefix length");
        threshold = slack / make_rational(static_cast<long>(assignment.prefix_length) -
                                          static_cast<long>(assignment.order));
    }

    auto same_class = [&](const Frequency& a, const Frequency& b) {
        if (!empirical) return a.equals(b);
        return abs(a.rational() - b.rational()) <= threshold;
    };

    std::vector<std::vector<size_t>> groups;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i == 0 || !same_class(items[i].first, items[i - 1].first))
            groups.emplace_back();
        groups.back().push_back(i);
    }

    for (const auto& g : groups) {
        FrequencyClass cls;
        if (empirical) {
            Rational sum(0);
            for (size_t i : g) sum += items[i].first.rational();
            cls.representative = Frequency::exact(sum / make_rational(static_cast<long>(g.size())));
        } else {
            cls.representative = items[g.front()].first;
        }
        for (size_t i : g) cls.members.push_back(items[i].second);
        std::sort(cls.members.begin(), cls.members.end());
        out.classes.push_back(std::move(cls));
    }
    return out;
}

}  // namespace rauzy
