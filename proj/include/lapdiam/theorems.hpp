#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lapdiam/graph.hpp"
#include "lapdiam/spectra.hpp"

namespace lapdiam {

/// The checkable statements. T1_5 covers the 4.1/4.2 pair; CONJ is the open conjecture.
enum class TheoremId { T1_1, T1_2, T1_3, T1_4, T1_5, T3_3, L2_6, TRIV_A, TRIV_B, CONJ };

inline constexpr std::array<TheoremId, 10> kAllTheorems{TheoremId::T1_1, TheoremId::T1_2, TheoremId::T1_3,
                                                         TheoremId::T1_4, TheoremId::T1_5, TheoremId::T3_3,
                                                         TheoremId::L2_6, TheoremId::TRIV_A, TheoremId::TRIV_B,
                                                         TheoremId::CONJ};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

/// Outcome of one check on one graph. When applicable, holds == (count <= bound)
/// and tight == (holds && count == bound); the remaining fields are unset otherwise.
struct CheckReport {
    std::string graph6;
    std::size_t n = 0;
    std::optional<std::size_t> d;
    TheoremId theorem = TheoremId::T1_1;
    bool applicable = false;
    std::string reason;
    std::optional<IntervalQuery> interval;
    std::size_t count = 0;
    long bound = 0;
    bool holds = false;
    bool tight = false;
    nlohmann::json witness;  // null when there is nothing to record
};

nlohmann::ordered_json to_json(const CheckReport& r);

/// Per-graph data shared by all checks: diameter, exact counter, lazily the
/// diametral paths. Not thread-safe; use one per worker.
class GraphAnalysis {
public:
    explicit GraphAnalysis(Graph g, std::size_t path_cap = kDefaultPathCap);

    const Graph& graph() const { return graph_; }
    std::size_t order() const { return graph_.order(); }
    bool connected() const { return diameter_.has_value(); }
    std::optional<std::size_t> diameter() const { return diameter_; }
    const std::string& graph6() const { return graph6_; }
    std::size_t path_cap() const { return path_cap_; }

    const ExactCounter& counter() const;
    /// Up to path_cap() + 1 diametral paths; more than path_cap() means truncated.
    const std::vector<PathInGraph>& diametral_paths() const;

private:
    Graph graph_;
    std::size_t path_cap_;
    std::optional<std::size_t> diameter_;
    std::string graph6_;
    mutable std::unique_ptr<ExactCounter> counter_;
    mutable std::optional<std::vector<PathInGraph>> paths_;
};

/// True when g is isomorphic to some g_ndt(n,d,t) or g_ndra(n,d,r,a) with legal
/// parameters; the matching specifier is written to `match`. Family canonical forms
/// are cached process-wide behind a mutex.
bool is_extremal_family_member(const Graph& g, std::size_t d, std::string* match = nullptr);

/// Evaluates one non-conjecture theorem.
CheckReport check(const GraphAnalysis& a, TheoremId id);
CheckReport check(const Graph& g, TheoremId id);

/// One report per c in 0..d-2 with max{2,c} <= d <= n-2-c; empty when none qualifies
/// or g is disconnected.
std::vector<CheckReport> check_conjecture(const GraphAnalysis& a);
std::vector<CheckReport> check_conjecture(const Graph& g);

/// All reports for the given ids. CONJ contributes its rows, or a single
/// inapplicable report when no row qualifies.
std::vector<CheckReport> evaluate(const GraphAnalysis& a, std::span<const TheoremId> ids);

struct TheoremTally {
    std::size_t evaluated = 0;
    std::size_t applicable = 0;
    std::size_t holds = 0;
    std::size_t tight = 0;
    std::size_t violations = 0;

    TheoremTally& operator+=(const TheoremTally& o);
};

struct ScanSummary {
    std::size_t graphs = 0;
    std::size_t corpus_errors = 0;
    std::map<TheoremId, TheoremTally> tallies;
    /// graph6 strings, sorted by canonical form.
    std::map<TheoremId, std::vector<std::string>> violating;
    std::map<TheoremId, std::vector<std::string>> tight;

    std::size_t theorem_violations() const;
    std::size_t conjecture_counterexamples() const;
};

nlohmann::ordered_json to_json(const ScanSummary& s);

enum ExitStatus : int { kExitClean = 0, kExitUsage = 1, kExitViolation = 2, kExitCorpusError = 3, kExitCounterexample = 4 };

/// 2 beats 4 beats 3; 0 when everything held.
int exit_status(const ScanSummary& s);

using ReportSink = std::function<void(const CheckReport&)>;

/// Runs every id on every graph with `jobs` worker threads. Reports reach `sink`
/// in corpus order (then id order), so output does not depend on `jobs`.
ScanSummary scan(std::span<const Graph> corpus, std::span<const TheoremId> ids, const ReportSink& sink,
                 std::size_t jobs = 1, std::size_t path_cap = kDefaultPathCap);

}  // namespace lapdiam
