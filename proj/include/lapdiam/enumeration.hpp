#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lapdiam/graph.hpp"
#include "lapdiam/graph6.hpp"

namespace lapdiam {

inline constexpr std::size_t kMaxBuiltinOrder = 7;

/// One representative per isomorphism class of all graphs of order n, sorted by canonical form.
/// Built by extending every class of order n-1 with a new vertex in all 2^(n-1) ways.
std::vector<Graph> enumerate_all(std::size_t n);

/// Connected classes of order n in canonical-form order; 1 <= n <= 7.
std::vector<Graph> enumerate_connected(std::size_t n);

/// Classes of order k+1 obtained by adding one vertex to each of `classes` (all of order k).
/// When `classes` holds every class of order k, the result holds every class of order k+1.
std::vector<Graph> extend_by_vertex(const std::vector<Graph>& classes);

/// Edge-independent G(n, p) sampling, resampled until connected.
///
/// PRNG: std::mt19937_64 (fully specified by the C++ standard). For each attempt the
/// pairs (i, j), i < j, are visited in lexicographic order; each takes one 64-bit draw x
/// and the edge is present iff (x >> 11) * 2^-53 < p. Throws std::runtime_error after
/// 10,000 consecutive disconnected samples.
Graph random_connected(std::size_t n, double p, std::mt19937_64& rng);
Graph random_connected(std::size_t n, double p, std::uint64_t seed);

/// Same sampler without the connectivity requirement.
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

struct BuiltinCorpus {
    std::size_t n;
    bool connected_only = true;
};
struct Graph6FileCorpus {
    std::string path;
};
struct RandomCorpus {
    std::size_t n;
    double p;
    std::size_t count;
    std::uint64_t seed;
};
using CorpusSource = std::variant<BuiltinCorpus, Graph6FileCorpus, RandomCorpus>;

struct Corpus {
    std::vector<Graph> graphs;
    std::vector<Graph6ReadError> errors;
};

/// Materialises a corpus. Random corpora draw `count` graphs from a single generator
/// seeded once with `seed`. Invalid source parameters throw std::invalid_argument;
/// an unreadable file throws std::runtime_error; malformed lines land in `errors`.
Corpus load_corpus(const CorpusSource& source);

}  // namespace lapdiam
