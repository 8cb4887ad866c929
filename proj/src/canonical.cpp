#include "lapdiam/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "lapdiam/graph6.hpp"

namespace lapdiam {
namespace {

using Mask = std::uint64_t;
using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(static_cast<int>(g.order())), rows_(g.order(), 0) {
        if (g.order() > 64) throw GraphError("canonical form supports at most 64 vertices");
        for (auto [u, v] : g.edges()) {
            rows_[u] |= Mask{1} << v;
            rows_[v] |= Mask{1} << u;
        }
    }

    std::vector<Vertex> run() {
        Partition root{Cell(n_)};
        for (int v = 0; v < n_; ++v) root[0][v] = v;
        refine(root);
        search(root);
        return best_perm_;
    }

private:
    bool twins(int u, int v) const {
        const Mask strip = ~((Mask{1} << u) | (Mask{1} << v));
        return (rows_[u] & strip) == (rows_[v] & strip);
    }

    // Splits cells by neighbour counts into every cell until the partition is equitable.
    // Sub-cells are ordered by their count signature, which keeps the result label-free.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Mask> cell_mask(p.size(), 0);
            for (std::size_t c = 0; c < p.size(); ++c) {
                for (int v : p[c]) cell_mask[c] |= Mask{1} << v;
            }
            Partition next;
            next.reserve(p.size());
            for (const auto& cell : p) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<std::vector<int>, Cell> groups;
                for (int v : cell) {
                    std::vector<int> sig(p.size());
                    for (std::size_t c = 0; c < p.size(); ++c) {
                        sig[c] = __builtin_popcountll(rows_[v] & cell_mask[c]);
                    }
                    groups[std::move(sig)].push_back(v);
                }
                if (groups.size() > 1) changed = true;
                for (auto& [sig, members] : groups) next.push_back(std::move(members));
            }
            p = std::move(next);
        }
    }

    void search(const Partition& p) {
        std::size_t target = p.size();
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (p[c].size() > 1 && (target == p.size() || p[c].size() < p[target].size())) target = c;
        }
        if (target == p.size()) {
            leaf(p);
            return;
        }
        std::vector<int> tried;
        for (int v : p[target]) {
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
            tried.push_back(v);
            Partition child;
            child.reserve(p.size() + 1);
            for (std::size_t c = 0; c < p.size(); ++c) {
                if (c != target) {
                    child.push_back(p[c]);
                    continue;
                }
                child.push_back(Cell{v});
                Cell rest;
                for (int w : p[c]) {
                    if (w != v) rest.push_back(w);
                }
                child.push_back(std::move(rest));
            }
            refine(child);
            search(child);
        }
    }

    void leaf(const Partition& p) {
        std::vector<Vertex> perm(n_);
        for (std::size_t pos = 0; pos < p.size(); ++pos) perm[p[pos][0]] = pos;
        std::vector<Mask> form(n_, 0);
        for (int v = 0; v < n_; ++v) {
            Mask row = 0;
            for (Mask w = rows_[v]; w != 0; w &= w - 1) row |= Mask{1} << perm[__builtin_ctzll(w)];
            form[perm[v]] = row;
        }
        if (best_perm_.empty() || form > best_form_) {
            best_form_ = std::move(form);
            best_perm_ = std::move(perm);
        }
    }

    int n_;
    std::vector<Mask> rows_;
    std::vector<Mask> best_form_;
    std::vector<Vertex> best_perm_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) { return CanonicalSearch(g).run(); }

std::string canonical_form(const Graph& g) { return write_graph6(permute(g, canonical_labeling(g))); }

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (degree_sequence(g) != degree_sequence(h)) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace lapdiam
