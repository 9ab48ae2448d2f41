#ifndef PET_HOMOMORPHISM_HPP
#define PET_HOMOMORPHISM_HPP

#include "pet/graph.hpp"
#include "pet/odd_girth.hpp"
#include "pet/petersen.hpp"
#include "pet/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pet {

// Thrown when a construction backed by a theorem fails its own verifier.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by chi_c_exact when the candidate budget is exhausted before a
// colouring is found; carries the partial knowledge in the message.
struct partial_result_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EdgeViolation {
    int u;
    int v;
};

struct VertexMap {
    SimpleGraph source;
    SimpleGraph target;
    std::vector<int> assignment;
    bool verified = false;
};

// First source edge whose image is not a target edge; nullopt when the
// assignment is a homomorphism.  Throws on size/range mismatch.
std::optional<EdgeViolation> find_hom_violation(const SimpleGraph& source,
                                                const SimpleGraph& target,
                                                std::span<const int> assignment);
// Runs the check above and records the outcome in map.verified.
bool verify_hom(VertexMap& map);

// Z_n-valued colouring with a rational separation threshold; certifies
// chi_c <= modulus / threshold when every edge keeps circular distance
// >= threshold.
struct CircularColoring {
    int modulus;
    Rational threshold;
    std::vector<int> values;
};
std::optional<EdgeViolation> find_coloring_violation(const SimpleGraph& g,
                                                     const CircularColoring& coloring);

enum class SearchOutcome { found, none, budget_exhausted };

struct SearchOptions {
    std::uint64_t node_budget = UINT64_C(4'000'000'000);
    // Pin the first branching vertex to target vertex 0.  Sound only for
    // vertex-transitive targets (circular complete graphs, cycles).
    bool fix_first_vertex = false;
};

struct SearchResult {
    SearchOutcome outcome;
    std::optional<VertexMap> witness;
    std::uint64_t nodes = 0;
};

// Complete backtracking search for a homomorphism g -> h with
// forward-checking; "none" is only reported after exhausting the space
// (or refuting via the odd-girth/edge preflight obstructions).
SearchResult search_hom(const SimpleGraph& g, const SimpleGraph& h, SearchOptions opts = {});

// Explicit constructions.  Each verifies its output and throws
// verification_error if the check fails (which would falsify the
// corresponding statement).
VertexMap collapse_pet_to_pb(GPParams params);          // v_i, u_{i+1} -> x_i
VertexMap pet_to_cycle_power(GPParams params);          // n, k odd, n > 2k+1
CircularColoring pb_circular_coloring(GPParams params); // k even >= 4, n odd, n = +-2 (mod k-1)
CircularColoring eta_cycle_power_coloring(GPParams params);  // n, k odd, n > 2k+1

// Verified map K_{p/q} -> K_{p2/q2}, requiring p/q <= p2/q2.  Tries the
// floor construction first and falls back to search.
VertexMap circular_clique_hom(int p, int q, int p2, int q2);

// Verified homomorphism Pet(n,k) -> K_{5/2} (a 5-cycle) for the
// odd-pentagonal subclasses.
VertexMap c5_coloring(GPParams params);

struct CliqueWitness {
    SimpleGraph host;
    int power = 0;
    std::vector<int> vertices;
    std::string description;
    bool verified = false;
    std::vector<std::pair<int, int>> failures;  // non-adjacent pairs, if any
};

// The 4r+2 clique of Pet(n,k)^{2r+1} built from an optimal nontrivial
// t != 0 solution; requires that no trivial point attains the optimum.
CliqueWitness clique_embedding(GPParams params, const IpSolution& sol);

struct InterleaveReport {
    int power = 0;
    int requested_q = 0;
    bool requested_ok = false;
    int max_verified_offset = 0;
    std::vector<std::pair<int, int>> failures;  // (i, offset) pairs that failed
};

// Interleaved ordering x_{2i} = u_i, x_{2i+1} = v_i of Pet(n,k) with k
// even; checks x_i ~ x_{i+l} in Pet(n,k)^{k+1} for 1 <= l <= q-1.
// q = -1 selects the default 2k+2 (offsets up to 2k+1).
InterleaveReport interleave_embedding(GPParams params, int q = -1);

// Exact circular chromatic number: minimum p/q with p <= p_max admitting
// a homomorphism, scanning reduced ratios in increasing order.
Rational chi_c_exact(const SimpleGraph& g, int p_max);

}  // namespace pet

#endif
