#ifndef PET_PETERSEN_HPP
#define PET_PETERSEN_HPP

#include "pet/graph.hpp"

#include <span>
#include <string>

namespace pet {

// Validated (n, k) pair naming a generalized Petersen graph, 2 < 2k <= n.
struct GPParams {
    int n;
    int k;
    GPParams(int n_, int k_);
    std::string str() const { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }
};

// Vertex convention shared by every module: indices 0..n-1 are the outer
// vertices u_0..u_{n-1}, indices n..2n-1 are the inner vertices v_0..v_{n-1}.
inline int outer_index(const GPParams&, int i) { return i; }
inline int inner_index(const GPParams& p, int i) { return p.n + i; }

SimpleGraph build_petersen(GPParams params);
// The circulant obtained by identifying u_i with v_i: edges i~i+1, i~i+k.
SimpleGraph build_pb(GPParams params);
// The k-th walk power of the n-cycle.
SimpleGraph build_cycle_power_k(GPParams params);

// True iff m == +-k (mod n) or m*k == +-1 (mod n); both pairs must be valid.
bool iso_congruence(int n, int k, int m);

struct PropertyFlags {
    bool bipartite;
    bool vertex_transitive;
    bool cayley;
    bool edge_transitive;
};
PropertyFlags property_flags(GPParams params);

// Oriented edge-class counts of a cycle in Pet(n,k).
struct CycleSignature {
    int length;
    int u_plus;
    int u_minus;
    int v_plus;
    int v_minus;
    int b;
};

// cycle lists distinct vertices of a closed walk (the closing edge back to
// cycle.front() is implicit); throws std::invalid_argument if not a cycle.
CycleSignature cycle_signature(GPParams params, std::span<const int> cycle);

}  // namespace pet

#endif
