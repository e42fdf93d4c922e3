#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rauzy/export.hpp"

namespace {

using namespace rauzy;

struct SourceFlags {
    std::string morphism_rules;
    std::string seed;
    std::string mechanical;
    std::string iet;
    std::string periodic;
    std::string prefix_file;
    std::string source_json;
    unsigned precision_bits = 128;
};

void add_source_flags(CLI::App* cmd, SourceFlags& flags) {
    cmd->add_option("--morphism", flags.morphism_rules,
                    "substitution rules, e.g. \"0->01;1->0\" (needs --seed)");
    cmd->add_option("--seed", flags.seed, "seed letter for the fixed point");
    cmd->add_option("--mechanical", flags.mechanical,
                    "slope[;intercept], each p/q or a quadratic triple (a,b,d)");
    cmd->add_option("--iet", flags.iet,
                    "interval exchange: lengths=...;perm=...;start=... "
                    "(lengths are p/q or (a,b,d), comma separated)");
    cmd->add_option("--periodic", flags.periodic, "repeating pattern, e.g. 01");
    cmd->add_option("--prefix-file", flags.prefix_file,
                    "file holding an explicit word ('#' lines ignored)");
    cmd->add_option("--source", flags.source_json, "word source as a JSON file");
    cmd->add_option("--precision", flags.precision_bits,
                    "precision bits for approximate interval-exchange orbits");
}

// Splits on commas that are not inside parentheses.
std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

WordSource build_source(const SourceFlags& flags) {
    int given = !flags.morphism_rules.empty() + !flags.mechanical.empty() + !flags.iet.empty() +
                !flags.periodic.empty() + !flags.prefix_file.empty() + !flags.source_json.empty();
    if (given != 1)
        throw Error("exactly one of --morphism/--mechanical/--iet/--periodic/--prefix-file/"
                    "--source is required");

    if (!flags.morphism_rules.empty()) {
        if (flags.seed.size() != 1)
            throw Error("--morphism requires --seed with a single letter");
        return WordSource::morphism(flags.morphism_rules, flags.seed[0]);
    }
    if (!flags.mechanical.empty()) {
        auto parts = split_top_level(flags.mechanical, ';');
        if (parts.empty() || parts.size() > 2) throw Error("--mechanical wants slope[;intercept]");
        Quadratic slope = parse_quadratic(parts[0]);
        Quadratic intercept = parts.size() == 2 ? parse_quadratic(parts[1]) : Quadratic(0);
        return WordSource::mechanical(std::move(slope), std::move(intercept));
    }
    if (!flags.iet.empty()) {
        std::vector<Quadratic> lengths;
        std::vector<int> permutation;
        Quadratic start(0);
        for (const std::string& segment : split_top_level(flags.iet, ';')) {
            auto eq = segment.find('=');
            if (eq == std::string::npos) throw Error("--iet segments must be key=value");
            std::string key = segment.substr(0, eq);
            std::string value = segment.substr(eq + 1);
            if (key == "lengths") {
                for (const std::string& item : split_top_level(value, ','))
                    lengths.push_back(parse_quadratic(item));
            } else if (key == "perm") {
                for (const std::string& item : split_top_level(value, ','))
                    permutation.push_back(std::stoi(item));
            } else if (key == "start") {
                start = parse_quadratic(value);
            } else {
                throw Error("unknown --iet key: " + key);
            }
        }
        return WordSource::interval_exchange(std::move(lengths), std::move(permutation),
                                             std::move(start), flags.precision_bits);
    }
    if (!flags.periodic.empty()) return WordSource::periodic(flags.periodic);
    if (!flags.prefix_file.empty()) {
        std::ifstream in(flags.prefix_file);
        if (!in) throw Error("cannot open " + flags.prefix_file);
        std::string text, line;
        while (std::getline(in, line)) {
            if (!line.empty() && line[0] == '#') continue;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) text += c;
        }
        if (text.empty()) throw Error("no word found in " + flags.prefix_file);
        return WordSource::explicit_prefix(text);
    }
    std::ifstream in(flags.source_json);
    if (!in) throw Error("cannot open " + flags.source_json);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return WordSource::from_json(buffer.str());
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write " + out_path);
    out << content;
}

void warn_window(const std::vector<BoundReport>& reports) {
    for (const BoundReport& r : reports) {
        if (!r.window_adequate) {
            std::cerr << "warning: window N=" << r.prefix_length
                      << " is below the 200*(n+1) adequacy heuristic at n=" << r.order << "\n";
            return;
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"factor frequencies, Rauzy graphs and frequency-count bounds"};
    app.require_subcommand(1);

    SourceFlags flags;
    size_t n_letters = 100'000;
    size_t n_from = 1, n_to = 15, n_single = 1;
    std::string engine = "auto";
    std::string format = "csv";
    std::string slack = "4";
    std::string out_path;
    bool reduced = false;

    auto add_common = [&](CLI::App* cmd, bool range) {
        add_source_flags(cmd, flags);
        cmd->add_option("-N,--length", n_letters, "prefix length (window size)");
        cmd->add_option("--engine", engine, "exact | empirical | auto")
            ->check(CLI::IsMember({"exact", "empirical", "auto"}));
        cmd->add_option("--slack", slack, "empirical merge slack tau");
        cmd->add_option("--out", out_path, "output path (default stdout)");
        if (range) {
            cmd->add_option("--n-from", n_from, "first order");
            cmd->add_option("--n-to", n_to, "last order");
            cmd->add_option("--format", format, "csv | json")
                ->check(CLI::IsMember({"csv", "json"}));
        }
    };

    CLI::App* generate = app.add_subcommand("generate", "emit a word prefix");
    add_source_flags(generate, flags);
    generate->add_option("-N,--length", n_letters, "prefix length");
    generate->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* analyze = app.add_subcommand("analyze", "per-order statistics table");
    add_common(analyze, true);

    CLI::App* graph = app.add_subcommand("graph", "DOT export of the order-n graph");
    add_common(graph, false);
    graph->add_option("-n,--order", n_single, "graph order");
    graph->add_flag("--reduced", reduced, "export the contraction instead");
    graph->add_option("--format", format, "dot")->check(CLI::IsMember({"dot"}));

    CLI::App* verify = app.add_subcommand("verify", "bound reports over an order range");
    add_common(verify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        AnalysisConfig config;
        config.prefix_length = n_letters;
        config.slack = parse_rational(slack);
        if (engine == "exact") config.engine = AnalysisConfig::EnginePreference::Exact;
        if (engine == "empirical") config.engine = AnalysisConfig::EnginePreference::Empirical;

        if (generate->parsed()) {
            WordSource source = build_source(flags);
            Word word = source.prefix(n_letters);
            std::ostringstream out;
            out << "# source: " << source.describe() << "\n";
            out << "# N=" << n_letters << "\n";
            out << source.alphabet().render(word) << "\n";
            write_output(out_path, out.str());
            return 0;
        }

        if (analyze->parsed()) {
            WordSource source = build_source(flags);
            RangeResult result = verify_range(source, n_from, n_to, config);
            warn_window(result.reports);
            write_output(out_path,
                         format == "json" ? analyze_json(result.reports)
                                          : analyze_csv(result.reports));
            return 0;
        }

        if (graph->parsed()) {
            WordSource source = build_source(flags);
            AnalysisSession session(source, config, n_single);
            const FactorIndex& index = session.index();
            const FrequencyAssignment& freqs = session.frequencies(n_single);
            RauzyGraph g = build_rauzy_graph(index, n_single, freqs);
            std::string dot;
            if (reduced) {
                SpecialFactorReport specials = special_factors(index, n_single);
                ReducedRauzyGraph r = reduce(g, specials);
                bool closed = reversal_closure_defect(index, n_single).empty() &&
                              reversal_closure_defect(index, n_single + 1).empty();
                if (!r.degenerate && closed) {
                    GraphSymmetry mu = mirror_automorphism(g, index);
                    PathClassification cls = classify_mu_paths(g, r, mu, index);
                    dot = to_dot_reduced(g, r, source.alphabet(), &cls);
                } else {
                    dot = to_dot_reduced(g, r, source.alphabet());
                }
            } else {
                dot = to_dot(g, source.alphabet());
            }
            write_output(out_path, dot);
            return 0;
        }

        if (verify->parsed()) {
            WordSource source = build_source(flags);
            RangeResult result = verify_range(source, n_from, n_to, config);
            warn_window(result.reports);
            write_output(out_path,
                         format == "json" ? verify_json(result) : verify_csv(result));
            return result.summary.violations == 0 ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
