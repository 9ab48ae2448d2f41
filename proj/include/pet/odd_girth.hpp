#ifndef PET_ODD_GIRTH_HPP
#define PET_ODD_GIRTH_HPP

#include "pet/petersen.hpp"
#include "pet/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pet {

// A feasible point (u, v, r, t) of the odd-cycle integer program for
// Pet(n,k): u + k*v = t*n with u >= 0 and odd objective u + |v| = 2r+1.
// v is the signed inner-step count v_plus - v_minus.
struct IpSolution {
    long long u;
    long long v;
    long long t;
    long long objective() const { return u + (v < 0 ? -v : v); }
    long long r() const { return (objective() - 1) / 2; }
    bool trivial() const { return u == 0 || v == 0; }
    friend bool operator==(const IpSolution&, const IpSolution&) = default;
};

// Full optimum description: the representative (ties broken by smaller u,
// then smaller |v|, then smaller t), every optimal point, and whether any
// trivial point attains the optimum.
struct IpOptimum {
    IpSolution best;
    std::vector<IpSolution> optima;
    bool trivial_attains_optimum;
};

// Exhaustive scan over u in [0,n], |v| <= n; nullopt iff infeasible.
std::optional<IpOptimum> ip_enumerate(GPParams params);

// The unique candidate for a given t != 0 (not checked for optimality;
// its objective need not be odd).
struct IpCandidate {
    long long u;
    long long v;
    long long t;
    long long objective() const { return u + (v < 0 ? -v : v); }
};
IpCandidate unique_solution_for_t(GPParams params, long long t);

// Index set and candidate set of the closed-form odd-girth formula.
// Both require a non-bipartite Pet(n,k) (throws std::domain_error).
std::vector<long long> ind_set(GPParams params);
std::vector<long long> candidate_g_set(GPParams params);

struct FormulaTrace {
    std::vector<long long> ind;
    std::vector<long long> g_set;
    std::vector<long long> trivial_candidates;  // {n/gcd(n,k), k+3}
    long long chosen = 0;
    int par_k = 0;
};

// Closed-form odd girth; nullopt iff bipartite (n even, k odd).
std::optional<int> odd_girth_formula(GPParams params);
std::optional<int> odd_girth_formula_traced(GPParams params, FormulaTrace& trace);

// Odd girth through the integer program: the optimum 2r+1 when some
// trivial point attains it, 2r+3 when every optimal point is nontrivial.
std::optional<int> odd_girth_from_ip(GPParams params);

// Odd-girth sandwich for non-bipartite instances; exempt_k_plus_3 marks
// instances whose odd girth equals k+3 (the case the bounds exclude).
struct OddGirthBounds {
    Rational lower;
    Rational upper;
    bool exempt_k_plus_3;
};
OddGirthBounds girth_bounds(GPParams params);

// Grid cross-validation of formula vs integer program vs BFS oracle.
struct ScanRow {
    int n;
    int k;
    std::optional<int> formula;
    std::optional<int> ip;
    std::optional<int> bfs;
    bool match;
    bool bounds_ok;  // odd-girth sandwich, when it applies
    FormulaTrace trace;
};

struct ScanReport {
    std::vector<ScanRow> rows;
    int mismatches = 0;
};

// threads = 0 picks hardware concurrency.  Rows are sorted by (n, k)
// regardless of scheduling.
ScanReport cross_validate(int n_max, int threads = 0);

std::string scan_tsv(const ScanReport& report);
std::string scan_json(const ScanReport& report);

}  // namespace pet

#endif
