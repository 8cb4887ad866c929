#include "lapdiam/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lapdiam/enumeration.hpp"
#include "lapdiam/families.hpp"
#include "lapdiam/graph6.hpp"
#include "lapdiam/spectra.hpp"
#include "lapdiam/theorems.hpp"

namespace lapdiam {
namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SingleSource {
    std::string family;
    std::string graph6;
};

void add_single_source(CLI::App& cmd, SingleSource& src) {
    auto* f = cmd.add_option("--family", src.family, "family specifier, e.g. g_ndt:7,3,2 or r1");
    auto* g = cmd.add_option("--graph6", src.graph6, "graph6 literal");
    f->excludes(g);
}

Graph resolve(const SingleSource& src) {
    if (!src.family.empty()) {
        try {
            return make_family(src.family).graph;
        } catch (const FamilyError& e) {
            throw UsageError(e.what());
        }
    }
    if (!src.graph6.empty()) {
        try {
            return parse_graph6(src.graph6);
        } catch (const Graph6Error& e) {
            throw UsageError(e.what());
        }
    }
    throw UsageError("no graph source: pass --family or --graph6");
}

double rounded(double x, double tolerance) {
    if (std::abs(x) <= tolerance) return 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

ordered_json edges_json(const Graph& g) {
    auto arr = ordered_json::array();
    for (auto [u, v] : g.edges()) arr.push_back({u, v});
    return arr;
}

int cmd_spectrum(const SingleSource& src, std::ostream& out) {
    const auto g = resolve(src);
    const auto spec = spectrum_float(g);
    const auto poly = char_poly(g);
    ordered_json j;
    j["n"] = g.order();
    j["edges"] = edges_json(g);
    const auto d = diameter(g);
    j["diameter"] = d ? ordered_json(*d) : ordered_json(nullptr);
    auto values = ordered_json::array();
    for (double x : spec.values) values.push_back(rounded(x, spec.tolerance));
    j["spectrum"] = std::move(values);
    auto coeffs = ordered_json::array();
    for (const auto& c : poly.coefficients()) coeffs.push_back(c.get_str());
    j["char_poly"] = std::move(coeffs);
    out << j.dump() << '\n';
    return kExitClean;
}

int cmd_count(const SingleSource& src, const std::string& lo, const std::string& hi, bool lo_open, bool hi_open,
              std::ostream& out) {
    const auto g = resolve(src);
    Rational lo_r;
    Rational hi_r;
    try {
        lo_r = parse_rational(lo);
        hi_r = parse_rational(hi);
    } catch (const RationalParseError& e) {
        throw UsageError(e.what());
    }
    if (lo_r > hi_r) throw UsageError("--lo " + lo + " exceeds --hi " + hi);
    const IntervalQuery q(lo_r, !lo_open, hi_r, !hi_open);
    ordered_json j;
    j["n"] = g.order();
    j["interval"] = q.to_string();
    j["count"] = count_interval_exact(g, q);
    out << j.dump() << '\n';
    return kExitClean;
}

std::vector<TheoremId> parse_checks(const std::string& list) {
    if (list == "all") return {kAllTheorems.begin(), kAllTheorems.end()};
    std::vector<TheoremId> ids;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto id = parse_theorem_id(token);
        if (!id) {
            std::string valid;
            for (auto t : kAllTheorems) valid += std::string(valid.empty() ? "" : ", ") + std::string(to_string(t));
            throw UsageError("unknown check '" + token + "'; valid names: " + valid + ", or all");
        }
        if (std::find(ids.begin(), ids.end(), *id) == ids.end()) ids.push_back(*id);
    }
    if (ids.empty()) throw UsageError("--checks is empty");
    return ids;
}

struct VerifyOptions {
    SingleSource single;
    std::optional<std::size_t> builtin;
    bool include_disconnected = false;
    std::string graph6_file;
    std::optional<std::size_t> random_n;
    double prob = 0.5;
    std::size_t count = 100;
    std::uint64_t seed = 1;
    std::string checks = "all";
    std::string out_path;
    std::string summary_path;
    std::size_t jobs = 1;
    std::size_t path_cap = kDefaultPathCap;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    const int sources = (o.single.family.empty() ? 0 : 1) + (o.single.graph6.empty() ? 0 : 1) +
                        (o.builtin ? 1 : 0) + (o.graph6_file.empty() ? 0 : 1) + (o.random_n ? 1 : 0);
    if (sources != 1) throw UsageError("verify needs exactly one of --family, --graph6, --builtin, --graph6-file, --random");
    if (o.jobs < 1) throw UsageError("--jobs must be at least 1");
    const auto ids = parse_checks(o.checks);

    Corpus corpus;
    try {
        if (o.builtin) {
            corpus = load_corpus(BuiltinCorpus{*o.builtin, !o.include_disconnected});
        } else if (!o.graph6_file.empty()) {
            corpus = load_corpus(Graph6FileCorpus{o.graph6_file});
        } else if (o.random_n) {
            corpus = load_corpus(RandomCorpus{*o.random_n, o.prob, o.count, o.seed});
        } else {
            corpus.graphs.push_back(resolve(o.single));
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const UsageError*>(&e)) throw;
        err << "corpus error: " << e.what() << '\n';
        return kExitCorpusError;
    }
    for (const auto& e : corpus.errors) err << "corpus line " << e.line_number << ": " << e.message << '\n';

    std::ofstream file;
    std::ostream* sink_stream = &out;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) throw UsageError("cannot write '" + o.out_path + "'");
        sink_stream = &file;
    }
    auto summary = scan(corpus.graphs, ids, [&](const CheckReport& r) { *sink_stream << to_json(r).dump() << '\n'; },
                        o.jobs, o.path_cap);
    summary.corpus_errors = corpus.errors.size();
    sink_stream->flush();

    const auto summary_text = to_json(summary).dump();
    if (!o.summary_path.empty()) {
        std::ofstream s(o.summary_path);
        s << summary_text << '\n';
    } else {
        err << summary_text << '\n';
    }
    if (summary.theorem_violations() > 0) {
        err << "THEOREM VIOLATION: " << summary.theorem_violations() << " failing check(s); this indicates a bug\n";
    }
    if (const auto it = summary.violating.find(TheoremId::CONJ); it != summary.violating.end()) {
        err << "CONJECTURE COUNTEREXAMPLE FOUND:\n";
        for (const auto& g6 : it->second) err << "  " << g6 << '\n';
    }
    return exit_status(summary);
}

int cmd_family(const std::string& name, const std::string& params, const std::string& emit, std::ostream& out) {
    std::string spec = name;
    if (!params.empty()) spec += ":" + params;
    FamilyInstance f = [&] {
        try {
            return make_family(spec);
        } catch (const FamilyError& e) {
            throw UsageError(e.what());
        }
    }();
    if (emit == "graph6") {
        out << write_graph6(f.graph) << '\n';
        return kExitClean;
    }
    ordered_json j;
    j["family"] = f.specifier();
    j["n"] = f.graph.order();
    j["edges"] = edges_json(f.graph);
    auto labels = ordered_json::object();
    std::vector<std::pair<Vertex, std::string>> by_vertex;
    for (const auto& [label, v] : f.labels) by_vertex.emplace_back(v, label);
    std::sort(by_vertex.begin(), by_vertex.end());
    for (const auto& [v, label] : by_vertex) labels[label] = v;
    j["labels"] = std::move(labels);
    out << j.dump() << '\n';
    return kExitClean;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laplacian eigenvalue distribution vs. diameter: constructions, exact counts, verification scans",
                 "lapdiam"};
    app.require_subcommand(1);

    SingleSource spectrum_src;
    auto* spectrum = app.add_subcommand("spectrum", "float spectrum and exact characteristic polynomial of one graph");
    add_single_source(*spectrum, spectrum_src);

    SingleSource count_src;
    std::string lo;
    std::string hi;
    bool lo_open = false;
    bool hi_open = false;
    auto* count = app.add_subcommand("count", "exact number of Laplacian eigenvalues in an interval");
    add_single_source(*count, count_src);
    count->add_option("--lo", lo, "lower endpoint (integer or p/q)")->required();
    count->add_option("--hi", hi, "upper endpoint (integer or p/q)")->required();
    count->add_flag("--lo-open", lo_open, "exclude the lower endpoint");
    count->add_flag("--hi-open", hi_open, "exclude the upper endpoint");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "check theorems and the conjecture over a graph source");
    add_single_source(*verify, vo.single);
    verify->add_option("--builtin", vo.builtin, "all connected graphs of this order (1..7)");
    verify->add_flag("--include-disconnected", vo.include_disconnected, "with --builtin, keep disconnected graphs too");
    verify->add_option("--graph6-file", vo.graph6_file, "graph6 corpus, one graph per line");
    verify->add_option("--random", vo.random_n, "random connected graphs of this order");
    verify->add_option("--prob", vo.prob, "edge probability for --random")->capture_default_str();
    verify->add_option("--count", vo.count, "number of graphs for --random")->capture_default_str();
    verify->add_option("--seed", vo.seed, "seed for --random")->capture_default_str();
    verify->add_option("--checks", vo.checks, "comma list of T1_1,T1_2,T1_3,T1_4,T1_5,T3_3,L2_6,TRIV_A,TRIV_B,CONJ or all")
        ->capture_default_str();
    verify->add_option("--out", vo.out_path, "write JSONL reports here instead of stdout");
    verify->add_option("--summary", vo.summary_path, "write the summary JSON here instead of stderr");
    verify->add_option("--jobs", vo.jobs, "worker threads")->capture_default_str();
    verify->add_option("--path-cap", vo.path_cap, "diametral path enumeration cap")->capture_default_str();

    std::string fam_name;
    std::string fam_params;
    std::string emit = "graph6";
    auto* family = app.add_subcommand("family", "construct a named graph");
    family->add_option("--name", fam_name, "family name")->required();
    family->add_option("--params", fam_params, "comma-separated integer parameters");
    family->add_option("--emit", emit, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}))->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitClean : kExitUsage;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(spectrum_src, out);
        if (count->parsed()) return cmd_count(count_src, lo, hi, lo_open, hi_open, out);
        if (verify->parsed()) return cmd_verify(vo, out, err);
        if (family->parsed()) return cmd_family(fam_name, fam_params, emit, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace lapdiam
