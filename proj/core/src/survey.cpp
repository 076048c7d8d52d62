#include "evoalg/survey.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

#include "evoalg/json_io.hpp"

namespace evoalg {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step over seed advanced by the line index.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Outcome {
    std::optional<SurveyRecord> record;
    std::string log_line;  // nonempty on skip or flag
};

Outcome process_line(const std::string& line, std::size_t index, const SurveyOptions& options) {
    Outcome out;
    Graph g(2, {{0, 1}});
    try {
        g = parse_graph6(line);
    } catch (const Error& e) {
        out.log_line = "line " + std::to_string(index + 1) + ": skipped (" + e.what() + ")";
        return out;
    }
    if (g.n() > options.exact_bound) {
        out.log_line = "line " + std::to_string(index + 1) + ": skipped (n=" +
                       std::to_string(g.n()) + " exceeds bound " +
                       std::to_string(options.exact_bound) + ")";
        return out;
    }

    DecideOptions opts;
    opts.exact_bound = options.exact_bound;
    opts.numeric_bound = options.numeric_bound;
    opts.evidence_restarts = options.evidence_restarts;
    opts.evidence_tol = options.tol;
    opts.seed = mix_seed(options.seed, index);

    const auto start = std::chrono::steady_clock::now();
    SurveyRecord rec;
    rec.verdict = decide_iso(g, opts);
    rec.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    rec.graph_id = encode_graph6(g);
    rec.n = g.n();
    rec.edge_count = g.edge_count();
    rec.det = rec.verdict.det;
    rec.cls = rec.verdict.cls;
    rec.counterexample_candidate = rec.verdict.singular && !rec.cls.regular_or_biregular() &&
                                   rec.verdict.evidence &&
                                   rec.verdict.evidence->found_nonzero();
    if (rec.counterexample_candidate)
        out.log_line = "line " + std::to_string(index + 1) + " " + rec.graph_id +
                       ": CONJECTURE-COUNTEREXAMPLE-CANDIDATE";
    out.record = std::move(rec);
    return out;
}

// The dichotomy the verdicts must respect; a violation is a library bug, not
// an input problem, so it aborts the survey.
void assert_consistent(const SurveyRecord& rec) {
    const bool iso = rec.verdict.kind == IsoVerdict::Kind::Isomorphic;
    if (rec.cls.regular_or_biregular() && !iso)
        throw Error("survey consistency: regular/biregular graph " + rec.graph_id +
                    " not Isomorphic");
    if (!rec.verdict.singular && !rec.cls.regular_or_biregular() &&
        rec.verdict.kind != IsoVerdict::Kind::OnlyNullHomomorphism)
        throw Error("survey consistency: non-singular Neither graph " + rec.graph_id +
                    " not OnlyNullHomomorphism");
}

}  // namespace

SurveySummary run_survey(std::istream& in, std::ostream& out, std::ostream& log,
                         const SurveyOptions& options) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }

    SurveySummary summary;
    summary.total_lines = static_cast<int>(lines.size());

    auto emit = [&](Outcome&& o) {
        if (!o.log_line.empty()) log << o.log_line << '\n';
        if (!o.record) {
            ++summary.skipped;
            return;
        }
        assert_consistent(*o.record);
        ++summary.emitted;
        if (o.record->counterexample_candidate) ++summary.counterexample_candidates;
        ++summary.cells[{o.record->verdict.singular, regularity_string(o.record->cls.kind),
                         kind_string(o.record->verdict.kind)}];
        out << to_json(*o.record) << '\n';
        out.flush();
    };

    if (options.jobs <= 1) {
        for (std::size_t i = 0; i < lines.size(); ++i) emit(process_line(lines[i], i, options));
    } else {
        std::atomic<std::size_t> next{0};
        std::map<std::size_t, Outcome> done;
        std::mutex mu;
        std::condition_variable cv;
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= lines.size()) return;
                Outcome o = process_line(lines[i], i, options);
                {
                    std::lock_guard<std::mutex> lock(mu);
                    done.emplace(i, std::move(o));
                }
                cv.notify_all();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < options.jobs; ++t) pool.emplace_back(worker);
        try {
            for (std::size_t want = 0; want < lines.size(); ++want) {
                std::unique_lock<std::mutex> lock(mu);
                cv.wait(lock, [&] { return done.count(want) != 0; });
                Outcome o = std::move(done.at(want));
                done.erase(want);
                lock.unlock();
                emit(std::move(o));
            }
        } catch (...) {
            next.store(lines.size());
            for (auto& t : pool) t.join();
            throw;
        }
        for (auto& t : pool) t.join();
    }

    out << to_json(summary) << '\n';
    out.flush();
    return summary;
}

}  // namespace evoalg
