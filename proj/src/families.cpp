#include "lapdiam/families.hpp"

#include <charconv>

namespace lapdiam {
namespace {

void require(bool ok, const std::string& family, const std::string& constraint) {
    if (!ok) throw FamilyError(family + " requires " + constraint);
}

std::string u(long i) { return "u" + std::to_string(i); }

void label_path(FamilyInstance& f, std::size_t length) {
    for (std::size_t i = 0; i < length; ++i) f.labels[u(static_cast<long>(i + 1))] = i;
}

void label_plain(FamilyInstance& f) {
    for (std::size_t i = 0; i < f.graph.order(); ++i) f.labels["v" + std::to_string(i + 1)] = i;
}

FamilyInstance from_one_based(std::string name, std::size_t n, std::initializer_list<Edge> one_based) {
    GraphBuilder b(n);
    for (auto [x, y] : one_based) b.add_edge(x - 1, y - 1);
    FamilyInstance f{b.build(), std::move(name), {}, {}, std::nullopt};
    label_plain(f);
    return f;
}

}  // namespace

std::string FamilyInstance::specifier() const {
    std::string out = family;
    for (std::size_t i = 0; i < params.size(); ++i) out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
    return out;
}

FamilyInstance path(std::size_t n) {
    require(n >= 1, "path", "n >= 1");
    GraphBuilder b(n);
    for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    FamilyInstance f{b.build(), "path", {static_cast<long>(n)}, {}, n - 1};
    label_path(f, n);
    return f;
}

FamilyInstance complete(std::size_t n) {
    require(n >= 1, "complete", "n >= 1");
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
    }
    FamilyInstance f{b.build(), "complete", {static_cast<long>(n)}, {}, n == 1 ? 0 : 1};
    label_plain(f);
    return f;
}

FamilyInstance cycle(std::size_t n) {
    require(n >= 3, "cycle", "n >= 3");
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    FamilyInstance f{b.build(), "cycle", {static_cast<long>(n)}, {}, n / 2};
    label_plain(f);
    return f;
}

FamilyInstance complete_minus_edge(std::size_t n) {
    require(n >= 2, "complete_minus_edge", "n >= 2");
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (!(i == 0 && j == 1)) b.add_edge(i, j);
        }
    }
    std::optional<std::size_t> diam;
    if (n >= 3) diam = 2;
    FamilyInstance f{b.build(), "complete_minus_edge", {static_cast<long>(n)}, {}, diam};
    label_plain(f);
    return f;
}

FamilyInstance g_ndt(long n, long d, long t) {
    require(2 <= d && d <= n - 2, "g_ndt", "2 <= d <= n-2");
    require(2 <= t && t <= d, "g_ndt", "2 <= t <= d");
    const auto order = static_cast<std::size_t>(n);
    const auto path_len = static_cast<std::size_t>(d + 1);
    GraphBuilder b(order);
    for (Vertex i = 0; i + 1 < path_len; ++i) b.add_edge(i, i + 1);
    for (Vertex w = path_len; w < order; ++w) {
        for (Vertex x = w + 1; x < order; ++x) b.add_edge(w, x);
        for (long i = t - 1; i <= t + 1; ++i) b.add_edge(w, static_cast<Vertex>(i - 1));
    }
    FamilyInstance f{b.build(), "g_ndt", {n, d, t}, {}, static_cast<std::size_t>(d)};
    label_path(f, path_len);
    for (Vertex w = path_len; w < order; ++w) f.labels["clique_" + std::to_string(w - path_len)] = w;
    return f;
}

FamilyInstance g_ndra(long n, long d, long r, long a) {
    require(3 <= d && d <= n - 2, "g_ndra", "3 <= d <= n-2");
    require(2 <= r && r <= d - 1, "g_ndra", "2 <= r <= d-1");
    require(1 <= a && a <= n - d - 2, "g_ndra", "1 <= a <= n-d-2");
    const auto order = static_cast<std::size_t>(n);
    const auto path_len = static_cast<std::size_t>(d + 1);
    const auto v2_start = path_len + static_cast<std::size_t>(a);
    GraphBuilder b(order);
    for (Vertex i = 0; i + 1 < path_len; ++i) b.add_edge(i, i + 1);
    for (Vertex w = path_len; w < order; ++w) {
        for (Vertex x = w + 1; x < order; ++x) b.add_edge(w, x);
        const long first = w < v2_start ? r - 1 : r;
        for (long i = first; i <= first + 2; ++i) b.add_edge(w, static_cast<Vertex>(i - 1));
    }
    FamilyInstance f{b.build(), "g_ndra", {n, d, r, a}, {}, static_cast<std::size_t>(d)};
    label_path(f, path_len);
    for (Vertex w = path_len; w < v2_start; ++w) f.labels["V1_" + std::to_string(w - path_len)] = w;
    for (Vertex w = v2_start; w < order; ++w) f.labels["V2_" + std::to_string(w - v2_start)] = w;
    return f;
}

FamilyInstance h_npq(long n, long p, long q) {
    require(2 <= p && p <= q && q <= n - 3, "h_npq", "2 <= p <= q <= n-3");
    const auto base = g_ndt(n - 1, n - 3, p);
    const auto order = static_cast<std::size_t>(n);
    const Vertex u_vertex = order - 2;
    const Vertex v_vertex = order - 1;
    GraphBuilder b(order);
    for (auto [x, y] : base.graph.edges()) b.add_edge(x, y);
    for (long i = q - 1; i <= q + 1; ++i) b.add_edge(v_vertex, static_cast<Vertex>(i - 1));
    if (q == p || q == p + 1) b.add_edge(u_vertex, v_vertex);
    FamilyInstance f{b.build(), "h_npq", {n, p, q}, {}, static_cast<std::size_t>(n - 3)};
    label_path(f, static_cast<std::size_t>(n - 2));
    f.labels["u"] = u_vertex;
    f.labels["v"] = v_vertex;
    return f;
}

FamilyInstance r1() {
    auto f = from_one_based("r1", 8, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 8}, {7, 8}});
    f.declared_diameter = 5;
    return f;
}

FamilyInstance r2() {
    auto f = from_one_based("r2", 7, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    f.declared_diameter = 5;
    return f;
}

FamilyInstance h0() {
    FamilyInstance f{complement(path(5).graph), "h0", {}, {}, std::nullopt};
    label_plain(f);
    return f;
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"path", "complete", "cycle", "complete_minus_edge", "g_ndt",
                                                "g_ndra", "h_npq", "h0", "r1", "r2"};
    return names;
}

FamilyInstance make_family(std::string_view name, const std::vector<long>& params) {
    auto arity = [&](std::size_t k) {
        if (params.size() != k) {
            throw FamilyError("family '" + std::string(name) + "' takes " + std::to_string(k) + " parameter(s), got " +
                              std::to_string(params.size()));
        }
    };
    auto count = [&](long v) {
        if (v < 1) throw FamilyError("family '" + std::string(name) + "' requires n >= 1");
        return static_cast<std::size_t>(v);
    };
    if (name == "path") return arity(1), path(count(params[0]));
    if (name == "complete") return arity(1), complete(count(params[0]));
    if (name == "cycle") return arity(1), cycle(count(params[0]));
    if (name == "complete_minus_edge") return arity(1), complete_minus_edge(count(params[0]));
    if (name == "g_ndt") return arity(3), g_ndt(params[0], params[1], params[2]);
    if (name == "g_ndra") return arity(4), g_ndra(params[0], params[1], params[2], params[3]);
    if (name == "h_npq") return arity(3), h_npq(params[0], params[1], params[2]);
    if (name == "h0") return arity(0), h0();
    if (name == "r1") return arity(0), r1();
    if (name == "r2") return arity(0), r2();
    throw FamilyError("unknown family '" + std::string(name) + "'");
}

FamilyInstance make_family(std::string_view specifier) {
    const auto colon = specifier.find(':');
    const auto name = specifier.substr(0, colon);
    if (name.empty()) throw FamilyError("empty family name in '" + std::string(specifier) + "'");
    std::vector<long> params;
    if (colon != std::string_view::npos) {
        auto rest = specifier.substr(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            const auto token = rest.substr(0, comma);
            long value = 0;
            const auto* end = token.data() + token.size();
            const auto [ptr, ec] = std::from_chars(token.data(), end, value);
            if (token.empty() || ec != std::errc() || ptr != end) {
                throw FamilyError("bad parameter token '" + std::string(token) + "' in '" + std::string(specifier) + "'");
            }
            params.push_back(value);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    return make_family(name, params);
}

}  // namespace lapdiam
