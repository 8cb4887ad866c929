#include "lapdiam/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "lapdiam/canonical.hpp"

namespace lapdiam {

std::vector<Graph> extend_by_vertex(const std::vector<Graph>& classes) {
    std::map<std::string, Graph> seen;
    for (const auto& g : classes) {
        const auto k = g.order();
        const auto edges = g.edges();
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << k); ++subset) {
            GraphBuilder b(k + 1);
            for (auto [u, v] : edges) b.add_edge(u, v);
            for (Vertex v = 0; v < k; ++v) {
                if ((subset >> v) & 1) b.add_edge(v, k);
            }
            auto h = b.build();
            auto key = canonical_form(h);
            seen.try_emplace(std::move(key), std::move(h));
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [key, g] : seen) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> enumerate_all(std::size_t n) {
    if (n == 0) throw std::invalid_argument("graph order must be at least 1");
    std::vector<Graph> classes{Graph::empty(1)};
    for (std::size_t k = 1; k < n; ++k) classes = extend_by_vertex(classes);
    return classes;
}

std::vector<Graph> enumerate_connected(std::size_t n) {
    if (n == 0 || n > kMaxBuiltinOrder) {
        throw std::invalid_argument("built-in enumeration covers 1 <= n <= 7; ingest a graph6 census file for larger orders");
    }
    auto all = enumerate_all(n);
    std::vector<Graph> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const Graph& g) { return is_connected(g); });
    return out;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    if (n == 0) throw std::invalid_argument("graph order must be at least 1");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("edge probability must lie in (0,1)");
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const double x = static_cast<double>(rng() >> 11) * kScale;
            if (x < p) b.add_edge(i, j);
        }
    }
    return b.build();
}

Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
    constexpr int kMaxRejections = 10'000;
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        auto g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("no connected sample after 10000 attempts; use a larger edge probability");
}

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_connected(n, p, rng);
}

Corpus load_corpus(const CorpusSource& source) {
    Corpus corpus;
    if (const auto* b = std::get_if<BuiltinCorpus>(&source)) {
        if (b->connected_only) {
            corpus.graphs = enumerate_connected(b->n);
        } else {
            if (b->n == 0 || b->n > kMaxBuiltinOrder) throw std::invalid_argument("built-in enumeration covers 1 <= n <= 7");
            corpus.graphs = enumerate_all(b->n);
        }
    } else if (const auto* f = std::get_if<Graph6FileCorpus>(&source)) {
        std::ifstream in(f->path);
        if (!in) throw std::runtime_error("cannot open graph6 file '" + f->path + "'");
        corpus.graphs = read_graph6_stream(in, corpus.errors);
    } else {
        const auto& r = std::get<RandomCorpus>(source);
        std::mt19937_64 rng(r.seed);
        corpus.graphs.reserve(r.count);
        for (std::size_t i = 0; i < r.count; ++i) corpus.graphs.push_back(random_connected(r.n, r.p, rng));
    }
    return corpus;
}

}  // namespace lapdiam
