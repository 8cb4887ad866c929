#include "lapdiam/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "lapdiam/canonical.hpp"
#include "lapdiam/families.hpp"
#include "lapdiam/graph6.hpp"

namespace lapdiam {
namespace {

constexpr std::array<std::string_view, 10> kNames{"T1_1", "T1_2", "T1_3", "T1_4", "T1_5",
                                                 "T3_3", "L2_6", "TRIV_A", "TRIV_B", "CONJ"};

CheckReport base_report(const GraphAnalysis& a, TheoremId id) {
    CheckReport r;
    r.graph6 = a.graph6();
    r.n = a.order();
    r.d = a.diameter();
    r.theorem = id;
    return r;
}

CheckReport not_applicable(CheckReport r, std::string reason) {
    r.applicable = false;
    r.reason = std::move(reason);
    return r;
}

CheckReport measured(CheckReport r, const GraphAnalysis& a, IntervalQuery interval, long bound) {
    r.applicable = true;
    r.count = a.counter().count(interval);
    r.interval = std::move(interval);
    r.bound = bound;
    r.holds = static_cast<long>(r.count) <= bound;
    r.tight = r.holds && static_cast<long>(r.count) == bound;
    return r;
}

Rational whole(long v) { return Rational(v); }

std::string range_text(long lo, const std::string& expr, long hi) {
    return "requires " + std::to_string(lo) + " <= d <= " + expr + " = " + std::to_string(hi);
}

struct FamilyCatalog {
    std::mutex mutex;
    std::map<std::pair<long, long>, std::map<std::string, std::string>> forms;  // (n,d) -> canonical -> spec
};

FamilyCatalog& catalog() {
    static FamilyCatalog c;
    return c;
}

const std::map<std::string, std::string>& family_forms(long n, long d) {
    auto& c = catalog();
    std::lock_guard lock(c.mutex);
    auto [it, inserted] = c.forms.try_emplace({n, d});
    if (inserted) {
        auto& forms = it->second;
        for (long t = 2; t <= d; ++t) {
            const auto f = g_ndt(n, d, t);
            forms.try_emplace(canonical_form(f.graph), f.specifier());
        }
        if (d >= 3) {
            for (long r = 2; r <= d - 1; ++r) {
                for (long s = 1; s <= n - d - 2; ++s) {
                    const auto f = g_ndra(n, d, r, s);
                    forms.try_emplace(canonical_form(f.graph), f.specifier());
                }
            }
        }
    }
    return it->second;
}

CheckReport check_three_outside(const GraphAnalysis& a, CheckReport r) {
    const auto n = static_cast<long>(a.order());
    const auto d = static_cast<long>(*a.diameter());
    const auto& paths = a.diametral_paths();
    const bool truncated = paths.size() > a.path_cap();
    const auto searched = std::min(paths.size(), a.path_cap());
    const auto& g = a.graph();

    for (std::size_t k = 0; k < searched; ++k) {
        const auto& path = paths[k];
        VertexSet on_path(g.order());
        for (auto v : path.vertices) on_path.insert(v);
        std::vector<Vertex> outside;
        std::vector<VertexSet> hits;
        for (Vertex z = 0; z < g.order(); ++z) {
            if (on_path.contains(z)) continue;
            outside.push_back(z);
            hits.push_back(g.neighbors(z) & on_path);
        }
        const auto m = outside.size();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                if (hits[i].intersects(hits[j])) continue;
                for (std::size_t l = j + 1; l < m; ++l) {
                    if (hits[i].intersects(hits[l]) || hits[j].intersects(hits[l])) continue;
                    auto report = measured(std::move(r), a, IntervalQuery::closed(whole(n - d), whole(n)), n - d + 1);
                    report.witness = {{"path", path.vertices},
                                      {"vertices", {outside[i], outside[j], outside[l]}},
                                      {"gammas", {hits[i].members(), hits[j].members(), hits[l].members()}}};
                    return report;
                }
            }
        }
    }
    if (truncated) return not_applicable(std::move(r), "hypothesis not established: diametral path cap reached");
    return not_applicable(std::move(r), "hypothesis false: no diametral path has three outside vertices with disjoint path neighbourhoods");
}

}  // namespace

std::string_view to_string(TheoremId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) return kAllTheorems[i];
    }
    return std::nullopt;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["d"] = r.d ? nlohmann::ordered_json(*r.d) : nlohmann::ordered_json(nullptr);
    j["theorem"] = std::string(to_string(r.theorem));
    j["applicable"] = r.applicable;
    if (r.applicable) {
        j["interval"] = {{"lo", format_rational(r.interval->lo)},
                         {"lo_closed", r.interval->lo_closed},
                         {"hi", format_rational(r.interval->hi)},
                         {"hi_closed", r.interval->hi_closed}};
        j["count"] = r.count;
        j["bound"] = r.bound;
        j["holds"] = r.holds;
        j["tight"] = r.tight;
    } else {
        j["reason"] = r.reason;
        j["interval"] = nullptr;
        j["count"] = nullptr;
        j["bound"] = nullptr;
        j["holds"] = nullptr;
        j["tight"] = nullptr;
    }
    j["witness"] = r.witness;
    return j;
}

GraphAnalysis::GraphAnalysis(Graph g, std::size_t path_cap)
    : graph_(std::move(g)), path_cap_(path_cap), diameter_(lapdiam::diameter(graph_)), graph6_(write_graph6(graph_)) {}

const ExactCounter& GraphAnalysis::counter() const {
    if (!counter_) counter_ = std::make_unique<ExactCounter>(graph_);
    return *counter_;
}

const std::vector<PathInGraph>& GraphAnalysis::diametral_paths() const {
    if (!paths_) paths_ = find_diametral_paths(graph_, path_cap_ + 1);
    return *paths_;
}

bool is_extremal_family_member(const Graph& g, std::size_t diam, std::string* match) {
    const auto n = static_cast<long>(g.order());
    const auto d = static_cast<long>(diam);
    if (d < 2 || d > n - 2) return false;
    const auto k = n - d - 1;
    if (static_cast<long>(g.size()) != d + k * (k - 1) / 2 + 3 * k) return false;
    const auto& forms = family_forms(n, d);
    const auto it = forms.find(canonical_form(g));
    if (it == forms.end()) return false;
    if (match) *match = it->second;
    return true;
}

CheckReport check(const GraphAnalysis& a, TheoremId id) {
    auto r = base_report(a, id);
    if (id == TheoremId::CONJ) return not_applicable(std::move(r), "use check_conjecture for conjecture rows");
    if (!a.connected()) return not_applicable(std::move(r), "disconnected");
    const auto n = static_cast<long>(a.order());
    const auto d = static_cast<long>(*a.diameter());

    switch (id) {
        case TheoremId::T1_1:
            if (d < 4) return not_applicable(std::move(r), "requires d >= 4");
            return measured(std::move(r), a, IntervalQuery::open_closed(whole(n - d + 3), whole(n)), n - d - 1);
        case TheoremId::T1_2:
            if (d < 2 || d > n - 2) return not_applicable(std::move(r), range_text(2, "n-2", n - 2));
            return measured(std::move(r), a, IntervalQuery::closed(whole(n - d + 2), whole(n)), n - d);
        case TheoremId::T1_3:
            if (d < 1 || d > n - 3) return not_applicable(std::move(r), range_text(1, "n-3", n - 3));
            return measured(std::move(r), a, IntervalQuery::closed(whole(n - d + 1), whole(n)), n - d + 1);
        case TheoremId::T1_4: {
            if (d < 2 || d > n - 4) return not_applicable(std::move(r), range_text(2, "n-4", n - 4));
            const bool small = d <= 4;
            auto out = measured(std::move(r), a, IntervalQuery::closed(whole(n - d), whole(n)), small ? n - d + 1 : n - d + 2);
            out.witness = {{"clause", small ? "d<=4: n-d+1" : "d>=5: n-d+2"}};
            return out;
        }
        case TheoremId::T1_5: {
            const long upper = (n + 3) / 2;
            if (d < 2 || d > upper) return not_applicable(std::move(r), range_text(2, "floor((n+3)/2)", upper));
            const bool sharpened = d >= 3 && d <= (n + 1) / 2;
            const bool boundary = d == 2 || 2 * d == n + 2 || 2 * d == n + 3;
            auto out = measured(std::move(r), a, IntervalQuery::closed(whole(n - 2 * d + 4), whole(n)),
                                sharpened ? n - 3 : n - 2);
            out.witness = {{"clause", sharpened ? "3<=d<=floor((n+1)/2): n-3" : "2<=d<=floor((n+3)/2): n-2"},
                           {"boundary_case", boundary}};
            return out;
        }
        case TheoremId::T3_3:
            if (d > n - 5) return not_applicable(std::move(r), "requires d <= n-5");
            return check_three_outside(a, std::move(r));
        case TheoremId::L2_6: {
            if (d < 2 || d > n - 2) return not_applicable(std::move(r), range_text(2, "n-2", n - 2));
            std::string match;
            if (is_extremal_family_member(a.graph(), static_cast<std::size_t>(d), &match)) {
                return not_applicable(std::move(r), "isomorphic to " + match);
            }
            return measured(std::move(r), a, IntervalQuery::closed(whole(n - d + 2), whole(n)), n - d - 1);
        }
        case TheoremId::TRIV_A:
            if (d < 2 || d > (n - 1) / 2) return not_applicable(std::move(r), range_text(2, "floor((n-1)/2)", (n - 1) / 2));
            return measured(std::move(r), a, IntervalQuery::closed(whole(n - 2 * d + 3), whole(n)), n - 1);
        case TheoremId::TRIV_B:
            if (d < 2 || d > (n - 2) / 2) return not_applicable(std::move(r), range_text(2, "floor((n-2)/2)", (n - 2) / 2));
            return measured(std::move(r), a, IntervalQuery::closed(whole(n - 2 * d + 2), whole(n)), n);
        case TheoremId::CONJ:
            break;
    }
    return r;
}

CheckReport check(const Graph& g, TheoremId id) { return check(GraphAnalysis(g), id); }

std::vector<CheckReport> check_conjecture(const GraphAnalysis& a) {
    std::vector<CheckReport> rows;
    if (!a.connected()) return rows;
    const auto n = static_cast<long>(a.order());
    const auto d = static_cast<long>(*a.diameter());
    for (long c = 0; c <= d - 2; ++c) {
        if (std::max(2L, c) > d || d > n - 2 - c) continue;
        auto row = measured(base_report(a, TheoremId::CONJ), a,
                            IntervalQuery::closed(whole(n - d + 2 - c), whole(n)), n - d + c);
        row.witness = {{"c", c}};
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CheckReport> check_conjecture(const Graph& g) { return check_conjecture(GraphAnalysis(g)); }

std::vector<CheckReport> evaluate(const GraphAnalysis& a, std::span<const TheoremId> ids) {
    std::vector<CheckReport> out;
    for (auto id : ids) {
        if (id != TheoremId::CONJ) {
            out.push_back(check(a, id));
            continue;
        }
        auto rows = check_conjecture(a);
        if (rows.empty()) {
            out.push_back(not_applicable(base_report(a, id), a.connected() ? "no c satisfies max{2,c} <= d <= n-2-c"
                                                                           : "disconnected"));
        }
        for (auto& row : rows) out.push_back(std::move(row));
    }
    return out;
}

TheoremTally& TheoremTally::operator+=(const TheoremTally& o) {
    evaluated += o.evaluated;
    applicable += o.applicable;
    holds += o.holds;
    tight += o.tight;
    violations += o.violations;
    return *this;
}

std::size_t ScanSummary::theorem_violations() const {
    std::size_t total = 0;
    for (const auto& [id, t] : tallies) {
        if (id != TheoremId::CONJ) total += t.violations;
    }
    return total;
}

std::size_t ScanSummary::conjecture_counterexamples() const {
    const auto it = tallies.find(TheoremId::CONJ);
    return it == tallies.end() ? 0 : it->second.violations;
}

nlohmann::ordered_json to_json(const ScanSummary& s) {
    nlohmann::ordered_json j;
    j["graphs"] = s.graphs;
    j["corpus_errors"] = s.corpus_errors;
    j["theorem_violations"] = s.theorem_violations();
    j["conjecture_counterexamples"] = s.conjecture_counterexamples();
    auto& per = j["theorems"] = nlohmann::ordered_json::object();
    for (const auto& [id, t] : s.tallies) {
        nlohmann::ordered_json entry;
        entry["evaluated"] = t.evaluated;
        entry["applicable"] = t.applicable;
        entry["holds"] = t.holds;
        entry["tight"] = t.tight;
        entry["violations"] = t.violations;
        const auto v = s.violating.find(id);
        entry["violating_graphs"] = v == s.violating.end() ? std::vector<std::string>{} : v->second;
        const auto tt = s.tight.find(id);
        entry["tight_graphs"] = tt == s.tight.end() ? std::vector<std::string>{} : tt->second;
        per[std::string(to_string(id))] = std::move(entry);
    }
    j["exit_status"] = exit_status(s);
    return j;
}

int exit_status(const ScanSummary& s) {
    if (s.theorem_violations() > 0) return kExitViolation;
    if (s.conjecture_counterexamples() > 0) return kExitCounterexample;
    if (s.corpus_errors > 0) return kExitCorpusError;
    return kExitClean;
}

ScanSummary scan(std::span<const Graph> corpus, std::span<const TheoremId> ids, const ReportSink& sink,
                 std::size_t jobs, std::size_t path_cap) {
    ScanSummary summary;
    for (auto id : ids) summary.tallies[id];
    std::map<TheoremId, std::set<std::string>> violating;
    std::map<TheoremId, std::set<std::string>> tight;

    constexpr std::size_t kChunk = 2048;
    jobs = std::max<std::size_t>(jobs, 1);
    for (std::size_t begin = 0; begin < corpus.size(); begin += kChunk) {
        const auto end = std::min(corpus.size(), begin + kChunk);
        std::vector<std::vector<CheckReport>> results(end - begin);
        std::atomic<std::size_t> next{begin};
        auto work = [&] {
            for (auto i = next++; i < end; i = next++) results[i - begin] = evaluate(GraphAnalysis(corpus[i], path_cap), ids);
        };
        if (jobs == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(work);
        }
        for (const auto& reports : results) {
            ++summary.graphs;
            for (const auto& r : reports) {
                auto& t = summary.tallies[r.theorem];
                ++t.evaluated;
                if (r.applicable) {
                    ++t.applicable;
                    if (r.holds) ++t.holds;
                    if (r.tight) {
                        ++t.tight;
                        tight[r.theorem].insert(r.graph6);
                    }
                    if (!r.holds) {
                        ++t.violations;
                        violating[r.theorem].insert(r.graph6);
                    }
                }
                if (sink) sink(r);
            }
        }
    }

    auto sorted_by_canonical = [](const std::set<std::string>& g6s) {
        std::vector<std::pair<std::string, std::string>> keyed;
        for (const auto& s : g6s) keyed.emplace_back(canonical_form(parse_graph6(s)), s);
        std::sort(keyed.begin(), keyed.end());
        std::vector<std::string> out;
        for (auto& [key, s] : keyed) out.push_back(std::move(s));
        return out;
    };
    for (const auto& [id, set] : violating) summary.violating[id] = sorted_by_canonical(set);
    for (const auto& [id, set] : tight) summary.tight[id] = sorted_by_canonical(set);
    return summary;
}

}  // namespace lapdiam
