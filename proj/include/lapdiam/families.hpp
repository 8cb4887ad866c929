#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lapdiam/graph.hpp"

namespace lapdiam {

/// Rejected family name, parameter list or parameter constraint.
class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A constructed named graph with its parameters and distinguished vertices.
///
/// Numbering: path vertices u1, u2, ... come first, then the clique (or V_1 then
/// V_2 for g_ndra), then appended vertices (u, v for h_npq).
struct FamilyInstance {
    Graph graph;
    std::string family;
    std::vector<long> params;
    std::map<std::string, Vertex> labels;
    std::optional<std::size_t> declared_diameter;

    Vertex label(const std::string& name) const { return labels.at(name); }
    /// "g_ndt:7,3,2" style specifier.
    std::string specifier() const;
};

FamilyInstance path(std::size_t n);
FamilyInstance complete(std::size_t n);
FamilyInstance cycle(std::size_t n);
/// K_n minus the edge (0,1).
FamilyInstance complete_minus_edge(std::size_t n);

/// Path u_1..u_{d+1} plus a clique K_{n-d-1} joined to u_{t-1}, u_t, u_{t+1}.
/// Requires 2 <= d <= n-2 and 2 <= t <= d.
FamilyInstance g_ndt(long n, long d, long t);

/// Path u_1..u_{d+1}, clique split into V_1 (size a) joined to u_{r-1}, u_r, u_{r+1}
/// and V_2 joined to u_r, u_{r+1}, u_{r+2}.
/// Requires 3 <= d <= n-2, 2 <= r <= d-1 and 1 <= a <= n-d-2.
FamilyInstance g_ndra(long n, long d, long r, long a);

/// g_ndt(n-1, n-3, p) with its clique vertex u, plus v joined to u_{q-1}, u_q, u_{q+1},
/// and to u as well when q is p or p+1. Requires 2 <= p <= q <= n-3.
FamilyInstance h_npq(long n, long p, long q);

/// Two 4-cycles joined by a bridge; 8 vertices, diameter 5.
FamilyInstance r1();
/// Triangle with a pendant path; 7 vertices, diameter 5.
FamilyInstance r2();
/// Complement of P_5.
FamilyInstance h0();

/// Builds a family from `name` and integer parameters.
FamilyInstance make_family(std::string_view name, const std::vector<long>& params);

/// Parses "name:p1,p2,..." (or a bare name) and builds the family.
/// Errors name the offending token.
FamilyInstance make_family(std::string_view specifier);

const std::vector<std::string>& family_names();

}  // namespace lapdiam
