#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "evoalg/families.hpp"
#include "evoalg/hom_search.hpp"
#include "evoalg/iso_engine.hpp"
#include "evoalg/json_io.hpp"
#include "evoalg/survey.hpp"
#include "evoalg/worked_examples.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitSizeBound = 2;
constexpr int kExitRegression = 3;

struct Bounds {
    int exact = evoalg::kDefaultExactSizeBound;
    int numeric = evoalg::kDefaultNumericSizeBound;
};

Bounds resolve_bounds(bool unsafe_size) {
    Bounds b;
    if (const char* env = std::getenv("EVOALG_SIZE_BOUND")) {
        try {
            b.exact = b.numeric = std::stoi(env);
        } catch (const std::exception&) {
            throw evoalg::Error("EVOALG_SIZE_BOUND is not an integer: " + std::string(env));
        }
    }
    if (unsafe_size) b.exact = b.numeric = 62;  // graph6 short-form ceiling
    return b;
}

std::string read_all(const std::string& file) {
    std::ostringstream ss;
    if (file == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(file);
        if (!in) throw evoalg::Error("cannot open " + file);
        ss << in.rdbuf();
    }
    return ss.str();
}

// Graph6 lines never contain blanks; edge lists always do ("u v").
evoalg::Graph parse_graph_text(const std::string& text, const std::string& format) {
    std::string first;
    std::istringstream lines(text);
    while (std::getline(lines, first)) {
        while (!first.empty() && (first.back() == '\r' || first.back() == ' ')) first.pop_back();
        if (!first.empty()) break;
    }
    if (first.empty()) throw evoalg::Error("empty input");
    const bool g6 = format == "graph6" ||
                    (format == "auto" && first.find(' ') == std::string::npos);
    return g6 ? evoalg::parse_graph6(first) : evoalg::parse_edge_list(text);
}

std::string class_text(const evoalg::RegularityClass& cls) {
    using Kind = evoalg::RegularityClass::Kind;
    std::string s = evoalg::regularity_string(cls.kind);
    if (cls.kind == Kind::Regular) s += " (d = " + std::to_string(cls.d1) + ")";
    if (cls.kind == Kind::Biregular)
        s += " (d1 = " + std::to_string(cls.d1) + ", d2 = " + std::to_string(cls.d2) + ")";
    if (cls.bipartition)
        s += ", split " + std::to_string(cls.bipartition->v1.size()) + "+" +
             std::to_string(cls.bipartition->v2.size());
    return s;
}

// 1-based disjoint cycle notation, fixed points omitted.
std::string cycle_text(const std::vector<int>& pi) {
    const int n = static_cast<int>(pi.size());
    std::vector<bool> seen(n, false);
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || pi[i] == i) continue;
        s += "(";
        for (int j = i; !seen[j]; j = pi[j]) {
            seen[j] = true;
            s += std::to_string(j + 1) + " ";
        }
        s.back() = ')';
    }
    return s.empty() ? "id" : s;
}

void print_map(std::ostream& os, const evoalg::LinearMap& f, const std::string& indent) {
    for (int i = 0; i < f.n(); ++i) {
        os << indent << "f(e" << i + 1 << ") =";
        bool any = false;
        for (int k = 0; k < f.n(); ++k) {
            if (f.entry(i, k).is_zero()) continue;
            os << (any ? " + " : " ") << f.entry(i, k).str() << " e" << k + 1;
            any = true;
        }
        if (!any) os << " 0";
        os << '\n';
    }
}

int cmd_classify(const std::string& file, const std::string& format, bool json) {
    const evoalg::Graph g = parse_graph_text(read_all(file), format);
    const evoalg::RegularityClass cls = evoalg::classify(g);
    const evoalg::IntMatrix a = g.adjacency_matrix();
    const evoalg::BigInt d = evoalg::det(a);
    const int r = evoalg::rank(a);
    if (json) {
        std::cout << "{\"graph_id\":\"" << evoalg::encode_graph6(g) << "\",\"n\":" << g.n()
                  << ",\"edge_count\":" << g.edge_count() << ",\"class\":"
                  << evoalg::to_json(cls) << ",\"det\":\"" << evoalg::int_string(d)
                  << "\",\"rank\":" << r << ",\"singular\":" << (d == 0 ? "true" : "false")
                  << "}\n";
        return 0;
    }
    std::cout << "graph: " << evoalg::encode_graph6(g) << "\n"
              << "n: " << g.n() << ", edges: " << g.edge_count() << "\n"
              << "degrees:";
    for (int v = 0; v < g.n(); ++v) std::cout << ' ' << g.degree(v);
    std::cout << "\nclass: " << class_text(cls) << "\n"
              << "det(A): " << evoalg::int_string(d) << "\n"
              << "rank(A): " << r << " of " << g.n() << "\n"
              << "singular: " << (d == 0 ? "yes" : "no") << "\n";
    return 0;
}

int cmd_decide(const std::string& file, const std::string& format, bool json, int restarts,
               std::uint64_t seed, double tol, const Bounds& bounds) {
    const evoalg::Graph g = parse_graph_text(read_all(file), format);
    evoalg::DecideOptions opts;
    opts.exact_bound = bounds.exact;
    opts.numeric_bound = bounds.numeric;
    opts.evidence_restarts = restarts;
    opts.evidence_tol = tol;
    opts.seed = seed;
    const evoalg::IsoVerdict v = evoalg::decide_iso(g, opts);
    const std::string id = evoalg::encode_graph6(g);
    if (json) {
        std::cout << evoalg::to_json(v, id) << '\n';
        return 0;
    }
    std::cout << "graph: " << id << "\n"
              << "det(A): " << evoalg::int_string(v.det)
              << ", class: " << class_text(v.cls) << "\n"
              << "verdict: " << evoalg::kind_string(v.kind);
    if (v.mechanism) std::cout << " via " << evoalg::mechanism_string(*v.mechanism) << " witness";
    std::cout << '\n';
    if (v.witness) {
        std::cout << "witness " << v.witness->source().name() << " -> "
                  << v.witness->target().name() << ":\n";
        print_map(std::cout, *v.witness, "  ");
    }
    if (v.evidence) {
        const auto& e = *v.evidence;
        std::cout << "evidence: " << e.restarts << " restarts, tol " << e.tol << ", seed "
                  << e.seed << ", candidates " << e.candidates.size() << ", conclusion "
                  << e.conclusion << '\n';
    }
    return 0;
}

int cmd_aut(const std::string& file, const std::string& format, bool json, const Bounds& bounds) {
    const evoalg::Graph g = parse_graph_text(read_all(file), format);
    const evoalg::EvolutionAlgebra a = evoalg::from_graph(g);
    const auto group = evoalg::aut_group(a, bounds.exact);
    if (json) {
        std::cout << "{\"graph_id\":\"" << evoalg::encode_graph6(g)
                  << "\",\"order\":" << group.size() << ",\"elements\":[";
        for (std::size_t i = 0; i < group.size(); ++i) {
            if (i) std::cout << ',';
            std::cout << "{\"pi\":[";
            for (std::size_t j = 0; j < group[i].pi.size(); ++j)
                std::cout << (j ? "," : "") << group[i].pi[j] + 1;
            std::cout << "],\"alphas\":[";
            for (std::size_t j = 0; j < group[i].alphas.size(); ++j)
                std::cout << (j ? "," : "") << evoalg::to_json(group[i].alphas[j]);
            std::cout << "]}";
        }
        std::cout << "]}\n";
        return 0;
    }
    std::cout << "graph: " << evoalg::encode_graph6(g) << "\n"
              << "automorphism group of " << a.name() << ": order " << group.size() << "\n";
    for (const auto& s : group) {
        std::cout << "  " << cycle_text(s.pi) << "  alpha = [";
        for (std::size_t j = 0; j < s.alphas.size(); ++j)
            std::cout << (j ? ", " : "") << s.alphas[j].str();
        std::cout << "]\n";
    }
    return 0;
}

int cmd_survey(const std::string& file, int jobs, std::uint64_t seed, int restarts, double tol,
               const Bounds& bounds) {
    evoalg::SurveyOptions opts;
    opts.jobs = jobs;
    opts.seed = seed;
    opts.evidence_restarts = restarts;
    opts.tol = tol;
    opts.exact_bound = bounds.exact;
    opts.numeric_bound = bounds.numeric;
    if (file == "-") {
        evoalg::run_survey(std::cin, std::cout, std::cerr, opts);
    } else {
        std::ifstream in(file);
        if (!in) throw evoalg::Error("cannot open " + file);
        evoalg::run_survey(in, std::cout, std::cerr, opts);
    }
    return 0;
}

int cmd_paper_examples(bool json) {
    const auto results = evoalg::run_worked_examples();
    bool all = true;
    if (json) {
        std::cout << '[';
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            all = all && r.passed;
            nlohmann::ordered_json j;
            j["name"] = r.name;
            j["passed"] = r.passed;
            j["expected"] = r.expected;
            j["actual"] = r.actual;
            std::cout << (i ? "," : "") << j.dump();
        }
        std::cout << "]\n";
    } else {
        for (const auto& r : results) {
            all = all && r.passed;
            if (r.passed)
                std::cout << "PASS " << r.name << ": " << r.actual << '\n';
            else
                std::cout << "FAIL " << r.name << ": expected \"" << r.expected << "\", got \""
                          << r.actual << "\"\n";
        }
        std::cout << (all ? "all checks passed" : "CHECKS FAILED") << '\n';
    }
    return all ? 0 : kExitRegression;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evolution algebras of finite graphs: construction, isomorphism "
                 "decision, and conjecture survey"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string format = "auto";
    bool json = false;
    bool unsafe_size = false;
    int jobs = 1;
    std::uint64_t seed = 1;
    int restarts = 200;
    double tol = 1e-9;

    auto add_input = [&](CLI::App* c) {
        c->add_option("file", file, "input file, or - for stdin")->default_str("-");
        c->add_option("--format", format, "auto|edgelist|graph6")
            ->check(CLI::IsMember({"auto", "edgelist", "graph6"}))
            ->default_str("auto");
        c->add_flag("--unsafe-size", unsafe_size, "lift the default size bounds");
    };

    CLI::App* classify = app.add_subcommand("classify", "degrees, regularity class, det, rank");
    add_input(classify);
    classify->add_flag("--json", json, "single-line JSON output");

    CLI::App* decide = app.add_subcommand(
        "decide", "decide whether A_RW(G) and A(G) are isomorphic, with witness or evidence");
    add_input(decide);
    decide->add_flag("--json", json, "single-line JSON output");
    decide->add_option("--evidence-restarts", restarts, "numeric restarts on Undecided graphs");
    decide->add_option("--seed", seed, "numeric search seed");
    decide->add_option("--tol", tol, "numeric candidate tolerance");

    CLI::App* aut = app.add_subcommand("aut", "automorphism group of A(G)");
    add_input(aut);
    aut->add_flag("--json", json, "single-line JSON output");

    CLI::App* survey = app.add_subcommand(
        "survey", "graph6 stream -> JSON-lines verdicts plus summary (conjecture evidence)");
    add_input(survey);
    survey->add_option("--jobs", jobs, "worker threads");
    survey->add_option("--seed", seed, "base seed; per-graph seeds derive from it");
    survey->add_option("--evidence-restarts", restarts, "numeric restarts per singular graph");
    survey->add_option("--tol", tol, "numeric candidate tolerance");

    CLI::App* examples =
        app.add_subcommand("paper-examples", "rerun the worked-example regression checks");
    examples->add_flag("--json", json, "JSON array output");

    // Normalize CLI11's per-error exit codes: help/version exit 0, any parse
    // failure exits kExitUsage instead of CLI11's own numbering.
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Bounds bounds = resolve_bounds(unsafe_size);
        if (app.got_subcommand(classify)) return cmd_classify(file, format, json);
        if (app.got_subcommand(decide))
            return cmd_decide(file, format, json, restarts, seed, tol, bounds);
        if (app.got_subcommand(aut)) return cmd_aut(file, format, json, bounds);
        if (app.got_subcommand(survey))
            return cmd_survey(file, jobs, seed, restarts, tol, bounds);
        if (app.got_subcommand(examples)) return cmd_paper_examples(json);
    } catch (const evoalg::SizeBound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeBound;
    } catch (const evoalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
