#include "lapdiam/graph6.hpp"

#include <cstdint>

namespace lapdiam {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

void encode_size(std::string& out, std::uint64_t n) {
    auto push_groups = [&](int groups) {
        for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 0x3f) + kBias));
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        push_groups(3);
    } else {
        out.append("~~");
        push_groups(6);
    }
}

int sextet(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw Graph6Error(pos, "truncated input");
    const auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw Graph6Error(pos, "byte value " + std::to_string(c) + " outside 63..126");
    return c - kBias;
}

}  // namespace

std::string write_graph6(const Graph& g) {
    const auto n = g.order();
    std::string out;
    encode_size(out, n);
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_graph6(std::string_view line) {
    if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
    if (line.ends_with('\r')) line.remove_suffix(1);

    std::size_t pos = 0;
    std::uint64_t n = 0;
    const int first = sextet(line, 0);
    if (first != 63) {
        n = static_cast<std::uint64_t>(first);
        pos = 1;
    } else {
        int groups = 3;
        pos = 1;
        if (pos < line.size() && line[pos] == '~') {
            groups = 6;
            pos = 2;
        }
        for (int k = 0; k < groups; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(line, pos++));
    }
    if (n == 0) throw Graph6Error(0, "graph must have at least one vertex");
    if (n > 100'000) throw Graph6Error(0, "order " + std::to_string(n) + " too large");

    const std::uint64_t bits = n * (n - 1) / 2;
    const std::uint64_t body = (bits + 5) / 6;
    GraphBuilder b(static_cast<std::size_t>(n));
    std::uint64_t bit = 0;
    for (std::uint64_t k = 0; k < body; ++k) {
        const auto at = pos + static_cast<std::size_t>(k);
        const int value = sextet(line, at);
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            const bool set = (value >> shift) & 1;
            if (bit >= bits) {
                if (set) throw Graph6Error(at, "nonzero padding bits");
                continue;
            }
            if (set) {
                // Column-major upper triangle: bit index enumerates (0,1),(0,2),(1,2),(0,3),...
                std::uint64_t j = 1;
                while (j * (j + 1) / 2 <= bit) ++j;
                const auto i = bit - j * (j - 1) / 2;
                b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    const auto end = pos + static_cast<std::size_t>(body);
    if (end < line.size()) throw Graph6Error(end, "trailing bytes after adjacency field");
    return b.build();
}

std::vector<Graph> read_graph6_stream(std::istream& in, std::vector<Graph6ReadError>& errors) {
    std::vector<Graph> graphs;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view(line);
        if (view.ends_with('\r')) view.remove_suffix(1);
        if (view.starts_with(kHeader)) view.remove_prefix(kHeader.size());
        if (view.empty()) continue;
        try {
            graphs.push_back(parse_graph6(view));
        } catch (const Graph6Error& e) {
            errors.push_back({number, e.what()});
        }
    }
    return graphs;
}

}  // namespace lapdiam
