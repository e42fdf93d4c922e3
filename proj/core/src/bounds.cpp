#include "rauzy/bounds.hpp"

#include <algorithm>
#include <sstream>

namespace rauzy {

std::string verdict_name(Verdict v, bool exact_engine) {
    switch (v) {
        case Verdict::HoldsStrict: return "holds-strict";
        case Verdict::HoldsEquality:
            return exact_engine ? "holds-equality-exact" : "holds-equality-tol";
        case Verdict::Violated: return "violated";
        default: return "not-applicable";
    }
}

bool BoundReport::any_violation() const {
    for (Verdict v : {lemma_verdict, finer_verdict, theorem1_verdict, boshernitzan_verdict,
                      palindromic_verdict, three_halves_verdict})
        if (v == Verdict::Violated) return true;
    return false;
}

namespace {

Verdict compare_bound(const Rational& lhs, const Rational& bound) {
    int c = cmp(lhs, bound);
    if (c < 0) return Verdict::HoldsStrict;
    if (c == 0) return Verdict::HoldsEquality;
    return Verdict::Violated;
}

Engine select_engine(const std::optional<std::pair<Morphism, Letter>>& substitution,
                     AnalysisConfig::EnginePreference preference,
                     std::optional<Quadratic>& eigenvalue_out) {
    if (preference == AnalysisConfig::EnginePreference::Empirical) return Engine::Empirical;
    if (!substitution) {
        if (preference == AnalysisConfig::EnginePreference::Exact)
            throw Error("exact engine unavailable: the source has no generating substitution");
        return Engine::Empirical;
    }
    try {
        PerronResult base = perron_frequencies(substitution->first);
        eigenvalue_out = base.eigenvalue;
        return Engine::BlockPerron;
    } catch (const NotPrimitive&) {
        if (preference == AnalysisConfig::EnginePreference::Exact) throw;
    } catch (const UnsupportedEigenvalueDegree&) {
        if (preference == AnalysisConfig::EnginePreference::Exact) throw;
    }
    return Engine::Empirical;
}

}  // namespace

AnalysisSession::AnalysisSession(WordSource source, AnalysisConfig config, size_t max_order)
    : source_(std::move(source)), config_(std::move(config)), max_order_(max_order) {
    if (max_order_ < 1) throw Error("order must be at least 1");
    substitution_ = source_.substitution();
    engine_ = select_engine(substitution_, config_.engine, base_eigenvalue_);
    Word prefix = source_.prefix(config_.prefix_length);
    index_ = std::make_unique<FactorIndex>(std::move(prefix), max_order_ + 1, source_.alphabet());
}

const std::map<Word, Frequency>& AnalysisSession::exact_level(size_t len) {
    auto it = exact_levels_.find(len);
    if (it != exact_levels_.end()) return it->second;

    BlockMorphism block = block_morphism(substitution_->first, substitution_->second, len);
    Quadratic eigenvalue = *base_eigenvalue_;
    for (int i = 1; i < block.power; ++i) eigenvalue *= *base_eigenvalue_;
    PerronResult solved = perron_frequencies(block.morphism, eigenvalue);
    std::map<Word, Frequency> level;
    for (size_t id = 0; id < block.block_factors.size(); ++id)
        level[block.block_factors[id]] = solved.frequencies[id];
    return exact_levels_.emplace(len, std::move(level)).first->second;
}

const FrequencyAssignment& AnalysisSession::frequencies(size_t n) {
    auto it = assignments_.find(n);
    if (it != assignments_.end()) return it->second;

    FrequencyAssignment a;
    if (engine_ == Engine::Empirical) {
        a = empirical_frequencies(*index_, n);
    } else {
        a.order = n;
        a.engine = Engine::BlockPerron;
        a.provenance = "block-perron over " + source_.describe();
        a.vertex = exact_level(n);
        a.edge = exact_level(n + 1);
        verify_exact_telescoping(a);
    }
    return assignments_.emplace(n, std::move(a)).first->second;
}

BoundReport AnalysisSession::report(size_t n) {
    if (n < 1 || n > max_order_)
        throw OutOfWindow("order " + std::to_string(n) + " outside the session range");
    const FactorIndex& index = *index_;
    const size_t N = index.prefix_length();

    BoundReport rep;
    rep.source_description = source_.describe();
    rep.order = n;
    rep.engine = engine_;
    rep.prefix_length = N;
    rep.window_adequate = N >= 200 * (n + 1);

    ComplexityPair c = complexity(index, n);
    rep.c_n = c.c_n;
    rep.c_n1 = index.factors(n + 1).size();
    rep.delta_c = c.delta_c;

    // First difference via the extension sets; exact on every window.
    long by_rext = 0, by_lext = 0;
    for (const FactorInfo& f : index.factors(n)) {
        by_rext += static_cast<long>(FactorIndex::countbits(f.rext_mask)) - 1;
        by_lext += static_cast<long>(FactorIndex::countbits(f.lext_mask)) - 1;
    }
    if (by_rext != rep.delta_c || by_lext != rep.delta_c)
        throw Error("internal: extension sums disagree with the complexity difference");

    rep.p_n = palindrome_complexity(index, n);
    rep.p_n1 = palindrome_complexity(index, n + 1);

    SpecialFactorReport specials = special_factors(index, n);
    rep.x = specials.x;
    rep.y = specials.y;
    rep.z = specials.z;
    rep.ls_count = specials.ls_count;
    rep.degenerate = specials.z == 0 && specials.ls_count == 0;

    rep.defect_count = reversal_closure_defect(index, n).size();
    rep.reversal_closed =
        rep.defect_count == 0 && reversal_closure_defect(index, n + 1).empty();

    const FrequencyAssignment& freqs = frequencies(n);
    if (engine_ == Engine::BlockPerron) {
        // The window must have saturated the true factor sets, otherwise
        // graph statistics and exact frequencies would describe different
        // languages.
        if (freqs.vertex.size() != rep.c_n || freqs.edge.size() != rep.c_n1)
            throw WindowIncomplete("window missed factors the substitution generates; increase N");
    }

    RauzyGraph graph = build_rauzy_graph(index, n, freqs);
    if (!graph.strongly_connected())
        throw NonRecurrentWindow("the order-" + std::to_string(n) +
                                 " window graph is not strongly connected");

    // Z <= dC and #LS <= dC; exact on recurrent windows.
    if (static_cast<long>(rep.z) > rep.delta_c || static_cast<long>(rep.ls_count) > rep.delta_c)
        throw Error("internal: special-factor counts exceed the complexity difference");

    rep.kirchhoff_residual = kirchhoff_residual(graph);
    if (engine_ == Engine::BlockPerron) {
        rep.kirchhoff_tolerance = Rational(0);
        if (rep.kirchhoff_residual.quadratic().sign() != 0)
            throw Error("internal: exact labels violate the flow balance");
    } else {
        rep.kirchhoff_tolerance =
            make_rational(static_cast<long>(n) + 1) /
            make_rational(static_cast<long>(N) - static_cast<long>(n));
        if (Frequency::exact(rep.kirchhoff_tolerance).compare_exact(rep.kirchhoff_residual) < 0)
            throw Error("internal: windowed labels exceed the flow-balance tolerance");
    }

    if (source_.alphabet().size() == 2) {
        try {
            permutation_symmetry(graph, {1, 0});
            rep.complementation_symmetric = true;
        } catch (const NotClosedUnderPermutation&) {
            rep.complementation_symmetric = false;
        }
    }

    ReducedRauzyGraph reduced = reduce(graph, specials);

    // No label may be lost by the contraction (exact labels only; windowed
    // path labels are means of their edges).
    if (engine_ == Engine::BlockPerron) {
        auto collect = [](auto begin, auto end, auto&& get) {
            std::vector<Frequency> out;
            for (auto it = begin; it != end; ++it) out.push_back(get(*it));
            std::sort(out.begin(), out.end(),
                      [](const Frequency& a, const Frequency& b) { return a.before(b); });
            out.erase(std::unique(out.begin(), out.end(),
                                  [](const Frequency& a, const Frequency& b) {
                                      return a.compare_exact(b) == 0;
                                  }),
                      out.end());
            return out;
        };
        auto graph_labels = collect(graph.edges.begin(), graph.edges.end(),
                                    [](const GraphEdge& e) { return e.label; });
        auto path_labels = collect(reduced.edges.begin(), reduced.edges.end(),
                                   [](const SimplePath& p) { return p.label; });
        if (graph_labels.size() != path_labels.size())
            throw Error("internal: contraction changed the label set");
        for (size_t i = 0; i < graph_labels.size(); ++i)
            if (graph_labels[i].compare_exact(path_labels[i]) != 0)
                throw Error("internal: contraction changed the label set");
    }

    if (!rep.degenerate) {
        // Contraction edge count, the vertex-sum form: sum over RS of
        // #Rext plus one per LS-not-RS vertex.
        size_t rext_sum = 0;
        for (uint32_t id : specials.right_special)
            rext_sum += FactorIndex::countbits(index.factors(n)[id].rext_mask);
        if (reduced.edges.size() != rext_sum + reduced.ls_not_rs)
            throw Error("internal: contraction edge count violates the vertex-sum identity");
    }

    if (rep.reversal_closed && !rep.degenerate) {
        GraphSymmetry mu = mirror_automorphism(graph, index);
        PathClassification cls = classify_mu_paths(graph, reduced, mu, index);
        rep.a = cls.fixed;
        rep.b = cls.moved;
    }

    Clustering clusters = cluster_frequencies(freqs, ClusterLevel::Edge, config_.slack);
    rep.f = clusters.classes.size();
    rep.f_raw = clusters.raw_distinct;

    const Rational f_value = make_rational(static_cast<long>(rep.f));
    const Rational dc = make_rational(rep.delta_c);
    rep.lemma_bound = (make_rational(static_cast<long>(rep.p_n + rep.p_n1)) + dc -
                       make_rational(static_cast<long>(rep.x + rep.y))) /
                          make_rational(2) +
                      make_rational(static_cast<long>(rep.z));
    rep.finer_bound = 2 * dc + 1 - make_rational(static_cast<long>(rep.x)) / 2 -
                      make_rational(static_cast<long>(rep.y)) / 2;
    rep.theorem1_bound = 2 * dc + 1;
    rep.boshernitzan_bound = 3 * dc;
    rep.three_halves_bound = 3 * dc / 2;
    rep.palindromic_lhs = rep.p_n + rep.p_n1;
    rep.palindromic_rhs = dc + 2;

    if (rep.reversal_closed) {
        rep.lemma_verdict = compare_bound(f_value, rep.lemma_bound);
        rep.finer_verdict = compare_bound(f_value, rep.finer_bound);
        rep.theorem1_verdict = compare_bound(f_value, rep.theorem1_bound);
        rep.palindromic_verdict =
            compare_bound(make_rational(static_cast<long>(rep.palindromic_lhs)), rep.palindromic_rhs);
    }
    // The contraction arguments presume special vertices; a periodic-type
    // window (dC = 0) has none, so those bounds do not apply there.
    if (!rep.degenerate) {
        rep.boshernitzan_verdict = compare_bound(f_value, rep.boshernitzan_bound);
        bool palindrome_poor = rep.reversal_closed && rep.p_n == 0 && rep.p_n1 == 0;
        if (rep.complementation_symmetric || palindrome_poor)
            rep.three_halves_verdict = compare_bound(f_value, rep.three_halves_bound);
    }
    return rep;
}

BoundReport bound_report(const WordSource& source, size_t n, const AnalysisConfig& config) {
    AnalysisSession session(source, config, n);
    return session.report(n);
}

RangeResult verify_range(const WordSource& source, size_t n_from, size_t n_to,
                         const AnalysisConfig& config) {
    if (n_from < 1 || n_to < n_from) throw Error("bad order range");
    AnalysisSession session(source, config, n_to);
    RangeResult out;
    out.source_json = source.to_json();
    out.n_from = n_from;
    out.n_to = n_to;
    out.prefix_length = config.prefix_length;
    out.slack = to_string(config.slack);
    out.summary.exact_engine = session.engine() == Engine::BlockPerron;
    for (size_t n = n_from; n <= n_to; ++n) {
        BoundReport rep = session.report(n);
        if (rep.any_violation()) ++out.summary.violations;
        if (rep.lemma_verdict == Verdict::HoldsEquality) out.summary.lemma_equalities.push_back(n);
        if (rep.finer_verdict == Verdict::HoldsEquality) out.summary.finer_equalities.push_back(n);
        if (rep.theorem1_verdict == Verdict::HoldsEquality)
            out.summary.theorem1_equalities.push_back(n);
        if (rep.boshernitzan_verdict == Verdict::HoldsEquality)
            out.summary.boshernitzan_equalities.push_back(n);
        out.reports.push_back(std::move(rep));
    }
    return out;
}

std::vector<BertheRow> berthe_check(const WordSource& source, size_t n_from, size_t n_to,
                                    const AnalysisConfig& config) {
    if (n_from < 1 || n_to < n_from) throw Error("bad order range");
    AnalysisSession session(source, config, n_to);
    for (size_t m = 1; m <= n_to + 1; ++m) {
        if (session.index().factors(m).size() != m + 1)
            throw NotSturmianWindow("window complexity is not n+1 at length " + std::to_string(m));
    }
    std::vector<BertheRow> rows;
    for (size_t n = n_from; n <= n_to; ++n) {
        BertheRow row;
        row.order = n;
        Clustering clusters =
            cluster_frequencies(session.frequencies(n), ClusterLevel::Edge, config.slack);
        row.f = clusters.classes.size();
        row.has_bispecial = special_factors(session.index(), n).x >= 1;
        row.consistent = row.f == (row.has_bispecial ? 2u : 3u);
        rows.push_back(row);
    }
    return rows;
}

PeriodicityScan periodicity_equality_scan(const WordSource& source, size_t n_to,
                                          const AnalysisConfig& config) {
    if (n_to < 1) throw Error("scan needs at least order 1");
    AnalysisSession session(source, config, n_to);
    std::vector<BoundReport> reports;
    for (size_t n = 1; n <= n_to; ++n) reports.push_back(session.report(n));

    PeriodicityScan out;
    auto flat = std::find_if(reports.begin(), reports.end(),
                             [](const BoundReport& r) { return r.delta_c == 0; });
    if (flat != reports.end()) {
        size_t from = flat->order;
        for (auto it = flat; it != reports.end(); ++it) {
            if (it->delta_c != 0)
                throw Inconclusive("complexity difference returned to nonzero after " +
                                   std::to_string(from));
            if (it->theorem1_verdict != Verdict::HoldsEquality)
                throw Inconclusive("flat window without the tight frequency-count bound at " +
                                   std::to_string(it->order));
        }
        out.classification = PeriodicityClass::PeriodicLike;
        out.equality_from = from;
        out.evidence = "dC = 0 and 2dC+1 attained from order " + std::to_string(from) +
                       " through " + std::to_string(n_to) + " (window-certified)";
        return out;
    }

    for (const BoundReport& r : reports)
        if (r.x >= 1) out.bispecial_orders.push_back(r.order);
    bool strict_at_bispecials = true;
    for (const BoundReport& r : reports) {
        if (r.x >= 1 && r.reversal_closed && r.theorem1_verdict == Verdict::HoldsEquality)
            strict_at_bispecials = false;
    }
    if (out.bispecial_orders.size() >= 2 && strict_at_bispecials) {
        out.classification = PeriodicityClass::AperiodicLike;
        std::ostringstream ev;
        ev << "bispecial factors at " << out.bispecial_orders.size()
           << " orders with the frequency-count bound strict there (window-certified)";
        out.evidence = ev.str();
        return out;
    }
    throw Inconclusive("window shows neither the periodic nor the aperiodic pattern");
}

}  // namespace rauzy
