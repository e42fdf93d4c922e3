#include "rauzy/export.hpp"

#include <sstream>

#include "json.hpp"

namespace rauzy {

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

const char* kPalette[] = {"black", "red",    "blue",   "darkgreen", "orange",
                          "purple", "brown", "cyan3",  "magenta",   "gold3"};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

}  // namespace

std::string to_dot(const RauzyGraph& g, const Alphabet& alphabet) {
    std::ostringstream out;
    out << "digraph rauzy_" << g.order << " {\n";
    out << "  rankdir=LR;\n";
    for (const Word& v : g.vertices)
        out << "  " << dot_quote(alphabet.render(v)) << ";\n";
    for (const GraphEdge& e : g.edges) {
        out << "  " << dot_quote(alphabet.render(g.vertices[e.source])) << " -> "
            << dot_quote(alphabet.render(g.vertices[e.target]))
            << " [label=" << dot_quote(e.label.str()) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot_reduced(const RauzyGraph& g, const ReducedRauzyGraph& r,
                           const Alphabet& alphabet, const PathClassification* mirror_classes) {
    std::ostringstream out;
    out << "digraph reduced_rauzy_" << r.order << " {\n";
    out << "  rankdir=LR;\n";
    if (r.degenerate) {
        out << "  \"(cycle)\" [degenerate=true];\n";
        out << "  \"(cycle)\" -> \"(cycle)\" [label="
            << dot_quote(r.degenerate_label ? r.degenerate_label->str() : std::string("?"))
            << "];\n";
        out << "}\n";
        return out.str();
    }

    for (uint32_t v : r.vertices)
        out << "  " << dot_quote(alphabet.render(g.vertices[v])) << ";\n";

    // Deterministic pair colors: a pair is keyed by its smaller path id.
    std::vector<std::string> color(r.edges.size(), "black");
    std::vector<bool> dashed(r.edges.size(), false);
    if (mirror_classes != nullptr) {
        size_t next_color = 0;
        for (size_t p = 0; p < r.edges.size(); ++p) {
            if (mirror_classes->fixed_tags[p]) {
                dashed[p] = true;
                continue;
            }
            uint32_t q = mirror_classes->image_of[p];
            if (p < q) {
                color[p] = kPalette[next_color % kPaletteSize];
                color[q] = color[p];
                ++next_color;
            }
        }
    }

    for (size_t p = 0; p < r.edges.size(); ++p) {
        const SimplePath& path = r.edges[p];
        out << "  " << dot_quote(alphabet.render(g.vertices[path.vertices.front()])) << " -> "
            << dot_quote(alphabet.render(g.vertices[path.vertices.back()]))
            << " [label=" << dot_quote(path.label.str());
        if (mirror_classes != nullptr) {
            out << ", color=" << dot_quote(color[p]);
            if (dashed[p]) out << ", style=dashed";
        }
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

nlohmann::json frequency_to_json(const Frequency& f) {
    nlohmann::json j;
    switch (f.kind()) {
        case Frequency::Kind::Rational:
            j["type"] = "rational";
            j["value"] = to_string(f.rational());
            break;
        case Frequency::Kind::Quadratic: {
            const Quadratic q = f.quadratic();
            j["type"] = "quadratic";
            j["a"] = to_string(q.rational_part());
            j["b"] = to_string(q.radical_coefficient());
            j["d"] = q.radicand();
            j["rendered"] = q.str();
            break;
        }
        default:
            j["type"] = "approx";
            j["value"] = f.approx_value().value;
            j["error"] = f.approx_value().error;
    }
    return j;
}

nlohmann::json report_to_json(const BoundReport& r) {
    nlohmann::json j;
    j["source"] = r.source_description;
    j["n"] = r.order;
    j["engine"] = engine_name(r.engine);
    j["prefix_length"] = r.prefix_length;
    j["window_adequate"] = r.window_adequate;
    j["window_certified"] = true;  // all statements are about the window only
    j["reversal_closed"] = r.reversal_closed;
    j["complementation_symmetric"] = r.complementation_symmetric;
    j["degenerate"] = r.degenerate;
    j["C"] = r.c_n;
    j["C_next"] = r.c_n1;
    j["dC"] = r.delta_c;
    j["P_n"] = r.p_n;
    j["P_n1"] = r.p_n1;
    j["X"] = r.x;
    j["Y"] = r.y;
    j["Z"] = r.z;
    j["LS"] = r.ls_count;
    j["defect_count"] = r.defect_count;
    if (r.a) j["A"] = *r.a;
    if (r.b) j["B"] = *r.b;
    j["F"] = r.f;
    j["F_raw"] = r.f_raw;
    j["kirchhoff_residual"] = r.kirchhoff_residual.str();
    j["kirchhoff_tolerance"] = to_string(r.kirchhoff_tolerance);
    j["bounds"] = {
        {"lemma", to_string(r.lemma_bound)},
        {"finer", to_string(r.finer_bound)},
        {"theorem1", to_string(r.theorem1_bound)},
        {"boshernitzan", to_string(r.boshernitzan_bound)},
        {"three_halves", to_string(r.three_halves_bound)},
        {"palindromic_lhs", r.palindromic_lhs},
        {"palindromic_rhs", to_string(r.palindromic_rhs)},
    };
    const bool exact = r.exact_engine();
    j["verdicts"] = {
        {"lemma", verdict_name(r.lemma_verdict, exact)},
        {"finer", verdict_name(r.finer_verdict, exact)},
        {"theorem1", verdict_name(r.theorem1_verdict, exact)},
        {"boshernitzan", verdict_name(r.boshernitzan_verdict, exact)},
        {"palindromic", verdict_name(r.palindromic_verdict, exact)},
        {"three_halves", verdict_name(r.three_halves_verdict, exact)},
    };
    return j;
}

}  // namespace

std::string analyze_csv(const std::vector<BoundReport>& reports) {
    std::ostringstream out;
    out << "n,C,dC,P_n,X,Y,Z,F,defect_count\n";
    for (const BoundReport& r : reports) {
        out << r.order << ',' << r.c_n << ',' << r.delta_c << ',' << r.p_n << ',' << r.x << ','
            << r.y << ',' << r.z << ',' << r.f << ',' << r.defect_count << '\n';
    }
    return out.str();
}

std::string analyze_json(const std::vector<BoundReport>& reports) {
    nlohmann::json rows = nlohmann::json::array();
    for (const BoundReport& r : reports) {
        rows.push_back({{"n", r.order},
                        {"C", r.c_n},
                        {"dC", r.delta_c},
                        {"P_n", r.p_n},
                        {"X", r.x},
                        {"Y", r.y},
                        {"Z", r.z},
                        {"F", r.f},
                        {"defect_count", r.defect_count}});
    }
    return rows.dump(2) + "\n";
}

std::string verify_csv(const RangeResult& result) {
    std::ostringstream out;
    out << "n,C,dC,P_n,P_n1,X,Y,Z,A,B,F,lemma,finer,thm1,bosh,three_halves,"
           "v_lemma,v_finer,v_thm1,v_bosh,v_pal,v_three_halves\n";
    for (const BoundReport& r : result.reports) {
        const bool exact = r.exact_engine();
        out << r.order << ',' << r.c_n << ',' << r.delta_c << ',' << r.p_n << ',' << r.p_n1 << ','
            << r.x << ',' << r.y << ',' << r.z << ',';
        if (r.a)
            out << *r.a;
        else
            out << '-';
        out << ',';
        if (r.b)
            out << *r.b;
        else
            out << '-';
        out << ',' << r.f << ',' << to_string(r.lemma_bound) << ',' << to_string(r.finer_bound)
            << ',' << to_string(r.theorem1_bound) << ',' << to_string(r.boshernitzan_bound) << ','
            << to_string(r.three_halves_bound) << ',' << verdict_name(r.lemma_verdict, exact) << ','
            << verdict_name(r.finer_verdict, exact) << ',' << verdict_name(r.theorem1_verdict, exact)
            << ',' << verdict_name(r.boshernitzan_verdict, exact) << ','
            << verdict_name(r.palindromic_verdict, exact) << ','
            << verdict_name(r.three_halves_verdict, exact) << '\n';
    }
    return out.str();
}

std::string verify_json(const RangeResult& result) {
    nlohmann::json j;
    if (!result.source_json.empty()) {
        j["config"] = {
            {"source", nlohmann::json::parse(result.source_json)},
            {"n_from", result.n_from},
            {"n_to", result.n_to},
            {"N", result.prefix_length},
            {"slack", result.slack},
        };
    }
    j["reports"] = nlohmann::json::array();
    for (const BoundReport& r : result.reports) j["reports"].push_back(report_to_json(r));
    j["summary"] = {
        {"violations", result.summary.violations},
        {"window_certified", true},
        {"asymptotic_claims", "none: observations cover the scanned window only"},
        {"equality_orders",
         {{"lemma", result.summary.lemma_equalities},
          {"finer", result.summary.finer_equalities},
          {"theorem1", result.summary.theorem1_equalities},
          {"boshernitzan", result.summary.boshernitzan_equalities}}},
        {"equality_authoritative", result.summary.exact_engine},
    };
    return j.dump(2) + "\n";
}

std::string report_json(const BoundReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string frequency_json(const Frequency& f) {
    return frequency_to_json(f).dump();
}

}  // namespace rauzy
