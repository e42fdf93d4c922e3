#pragma once

#include <memory>
#include <optional>

#include "rauzy/block_morphism.hpp"
#include "rauzy/rauzy_graph.hpp"
#include "rauzy/word_source.hpp"

namespace rauzy {

enum class Verdict { HoldsStrict, HoldsEquality, Violated, NotApplicable };

std::string verdict_name(Verdict v, bool exact_engine);

struct AnalysisConfig {
    enum class EnginePreference { Auto, Exact, Empirical };
    size_t prefix_length = 100'000;  // window size N
    EnginePreference engine = EnginePreference::Auto;
    Rational slack = Rational(4);    // empirical merge slack tau
};

/// Everything measured at one order n: the window statistics, the path
/// classification, the frequency-class count F over the length-(n+1)
/// factors, and the verdict of every bound. Half-integer bounds stay exact
/// rationals. Reversal-dependent bounds are marked not-applicable when the
/// window is not closed under reversal; contraction-based bounds are marked
/// not-applicable on degenerate (dC = 0) windows, whose reduced graph has
/// no special vertices.
struct BoundReport {
    std::string source_description;
    size_t order = 0;
    Engine engine = Engine::Empirical;
    size_t prefix_length = 0;
    bool window_adequate = true;
    bool reversal_closed = false;
    bool complementation_symmetric = false;
    bool degenerate = false;

    size_t c_n = 0, c_n1 = 0;
    long delta_c = 0;
    size_t p_n = 0, p_n1 = 0;
    size_t x = 0, y = 0, z = 0, ls_count = 0;
    size_t defect_count = 0;  // length-n factors whose reversal is absent
    std::optional<size_t> a, b;  // mirror-fixed and moved simple paths
    size_t f = 0;                // frequency classes of the length-(n+1) factors
    size_t f_raw = 0;            // distinct raw values before tolerance merging

    Frequency kirchhoff_residual;
    Rational kirchhoff_tolerance = Rational(0);

    Rational lemma_bound, finer_bound, theorem1_bound, boshernitzan_bound, three_halves_bound;
    size_t palindromic_lhs = 0;
    Rational palindromic_rhs;

    Verdict lemma_verdict = Verdict::NotApplicable;
    Verdict finer_verdict = Verdict::NotApplicable;
    Verdict theorem1_verdict = Verdict::NotApplicable;
    Verdict boshernitzan_verdict = Verdict::NotApplicable;
    Verdict palindromic_verdict = Verdict::NotApplicable;
    Verdict three_halves_verdict = Verdict::NotApplicable;

    bool exact_engine() const { return engine == Engine::BlockPerron; }
    bool any_violation() const;
};

/// Shared per-source state: the factor index is built once and the exact
/// engine caches one Perron solve per factor length. Pure apart from the
/// caches; reports are independent per order.
class AnalysisSession {
public:
    AnalysisSession(WordSource source, AnalysisConfig config, size_t max_order);

    const FactorIndex& index() const { return *index_; }
    Engine engine() const { return engine_; }
    const WordSource& source() const { return source_; }
    const AnalysisConfig& config() const { return config_; }

    const FrequencyAssignment& frequencies(size_t n);
    BoundReport report(size_t n);

private:
    const std::map<Word, Frequency>& exact_level(size_t len);

    WordSource source_;
    AnalysisConfig config_;
    size_t max_order_;
    Engine engine_;
    std::unique_ptr<FactorIndex> index_;
    std::optional<std::pair<Morphism, Letter>> substitution_;
    std::optional<Quadratic> base_eigenvalue_;
    std::map<size_t, std::map<Word, Frequency>> exact_levels_;
    std::map<size_t, FrequencyAssignment> assignments_;
};

/// Full report at one order.
BoundReport bound_report(const WordSource& source, size_t n, const AnalysisConfig& config);

struct RangeSummary {
    size_t violations = 0;
    std::vector<size_t> lemma_equalities;  // orders where the bound is attained
    std::vector<size_t> finer_equalities;
    std::vector<size_t> theorem1_equalities;
    std::vector<size_t> boshernitzan_equalities;
    bool exact_engine = false;  // equality lists authoritative only when true
};

struct RangeResult {
    std::vector<BoundReport> reports;
    RangeSummary summary;
    // run configuration, for reproducibility in exports
    std::string source_json;
    size_t n_from = 0, n_to = 0;
    size_t prefix_length = 0;
    std::string slack;
};

RangeResult verify_range(const WordSource& source, size_t n_from, size_t n_to,
                         const AnalysisConfig& config);

/// Sturmian frequency-count dichotomy checked per report order n: the
/// number of frequency classes of the length-(n+1) factors is 2 when a
/// bispecial factor of length n exists and 3 otherwise. (The classes of
/// length-n factors are the previous row, so rows cover "frequencies of
/// length m" for m = n_from+1 .. n_to+1.) Throws NotSturmianWindow unless
/// C(m) = m+1 across the window.
struct BertheRow {
    size_t order = 0;
    size_t f = 0;
    bool has_bispecial = false;
    bool consistent = false;
};

std::vector<BertheRow> berthe_check(const WordSource& source, size_t n_from, size_t n_to,
                                    const AnalysisConfig& config);

/// Window classification for the periodicity dichotomy: periodic-like
/// windows reach dC = 0 and keep the frequency-count bound 2*dC+1 = 1 tight
/// from there on; aperiodic-like windows keep producing bispecial factors
/// (with the bound strict there). Anything else throws Inconclusive.
enum class PeriodicityClass { PeriodicLike, AperiodicLike };

struct PeriodicityScan {
    PeriodicityClass classification = PeriodicityClass::PeriodicLike;
    std::optional<size_t> equality_from;
    std::vector<size_t> bispecial_orders;
    std::string evidence;
};

PeriodicityScan periodicity_equality_scan(const WordSource& source, size_t n_to,
                                          const AnalysisConfig& config);

}  // namespace rauzy
