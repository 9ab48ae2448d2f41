#ifndef PET_BOUNDS_HPP
#define PET_BOUNDS_HPP

#include "pet/odd_girth.hpp"
#include "pet/petersen.hpp"
#include "pet/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pet {

// Lower bound 2 + 4r/(4r^2+2r+1) from the optimal nontrivial solution;
// applicable when n, k are odd and no trivial point attains the optimum.
std::optional<Rational> lower_compk_a(GPParams params);

// Lower bound 2n(k+1)/(kn + floor(2n/(2k+2))) for even inner step k,
// applicable when the odd girth equals k+3.
std::optional<Rational> lower_compk_b(GPParams params);
// The same expression without the odd-girth gate (pure arithmetic).
Rational lower_compk_b_value(GPParams params);

// Prior lower bound 2 + 2/(k+1) for even inner step k.
Rational lower_ghebleh(GPParams params);

// Residue condition under which lower_compk_b strictly beats
// lower_ghebleh: 0 < y <= (k+1) - n/(k+2) with y = n mod (k+2).
bool proposition_condition(GPParams params);

// Upper bound 2n(k-1)/((n-4)(k-2)); k even >= 4, n odd, n = +-2 (mod k-1).
std::optional<Rational> upper_even(GPParams params);
// Upper bound 2n/(n-k); n, k odd, n > 2k+1.
std::optional<Rational> upper_odd(GPParams params);

// chi_c of the (2s+1)-subdivision of a graph with chi_c = chi.
Rational chi_c_subdivision_formula(const Rational& chi, long long s);

// chi_c of the complement of K_{p/q}: p / floor(p/q), for p/q >= 2, q >= 2.
Rational chi_c_complement_circular(int p, int q);

struct BoundEntry {
    std::string name;
    bool is_lower;
    std::optional<Rational> value;  // present iff applicable
    bool applicable;
    std::string reason;  // why the bound does or does not apply
};

struct BoundReport {
    int n;
    int k;
    int odd_girth;
    std::vector<BoundEntry> entries;
    std::optional<Rational> best_lower;
    std::optional<Rational> best_upper;
};

// Every bound above evaluated with applicability tags, plus the trivial
// upper bound 3 (non-bipartite generalized Petersen graphs are
// 3-chromatic).  Throws std::domain_error on bipartite input.
BoundReport bound_report(GPParams params);

std::string bound_report_json(const BoundReport& report);
std::string bound_report_table(const BoundReport& report, bool decimal);

}  // namespace pet

#endif
