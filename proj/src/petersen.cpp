#include "pet/petersen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace pet {

GPParams::GPParams(int n_, int k_) : n(n_), k(k_) {
    if (k < 2 || 2 * k > n)
        throw std::invalid_argument("GPParams: need 2 < 2k <= n, got (" + std::to_string(n_) +
                                    "," + std::to_string(k_) + ")");
}

SimpleGraph build_petersen(GPParams params) {
    int n = params.n, k = params.k;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * static_cast<std::size_t>(n));
    std::vector<std::string> labels(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);          // outer cycle
        edges.emplace_back(i, n + i);                // spoke
        edges.emplace_back(n + i, n + (i + k) % n);  // inner chord (dedup handles n = 2k)
        labels[i] = "u" + std::to_string(i);
        labels[n + i] = "v" + std::to_string(i);
    }
    return SimpleGraph(2 * n, std::move(edges), std::move(labels),
                       "Pet" + params.str());
}

SimpleGraph build_pb(GPParams params) {
    int n = params.n, k = params.k;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, (i + k) % n);
    }
    return SimpleGraph(n, std::move(edges), {}, "Pb" + params.str());
}

SimpleGraph build_cycle_power_k(GPParams params) {
    return walk_power(make_cycle(params.n), params.k);
}

bool iso_congruence(int n, int k, int m) {
    GPParams validated(n, k);
    (void)validated;
    // m is a chord-step residue: step m and step n-m give the same chords,
    // so any m in (0, n) names a graph in the family.
    if (m <= 0 || m >= n)
        throw std::invalid_argument("iso_congruence: m must lie in (0, n)");
    auto modn = [n](long long x) { return static_cast<int>(((x % n) + n) % n); };
    if (modn(m - k) == 0 || modn(m + k) == 0) return true;
    long long mk = static_cast<long long>(m) * k;
    return modn(mk - 1) == 0 || modn(mk + 1) == 0;
}

PropertyFlags property_flags(GPParams params) {
    int n = params.n, k = params.k;
    auto modn = [n](long long x) { return static_cast<int>(((x % n) + n) % n); };
    long long k2 = static_cast<long long>(k) * k;
    PropertyFlags flags{};
    flags.bipartite = (n % 2 == 0) && (k % 2 == 1);
    flags.vertex_transitive = (n == 10 && k == 2) || modn(k2 - 1) == 0 || modn(k2 + 1) == 0;
    flags.cayley = modn(k2 - 1) == 0;
    static const std::pair<int, int> edge_transitive_list[] = {
        {4, 1}, {5, 2}, {8, 3}, {10, 2}, {10, 3}, {12, 5}, {24, 5}};
    flags.edge_transitive = false;
    for (auto [en, ek] : edge_transitive_list)
        if (en == n && ek == k) flags.edge_transitive = true;
    return flags;
}

CycleSignature cycle_signature(GPParams params, std::span<const int> cycle) {
    int n = params.n, k = params.k;
    std::size_t len = cycle.size();
    if (len < 3) throw std::invalid_argument("cycle_signature: fewer than 3 vertices");
    std::unordered_set<int> seen;
    for (int v : cycle) {
        if (v < 0 || v >= 2 * n) throw std::invalid_argument("cycle_signature: vertex out of range");
        if (!seen.insert(v).second) throw std::invalid_argument("cycle_signature: repeated vertex");
    }
    SimpleGraph g = build_petersen(params);
    CycleSignature sig{static_cast<int>(len), 0, 0, 0, 0, 0};
    for (std::size_t j = 0; j < len; ++j) {
        int a = cycle[j];
        int b = cycle[(j + 1) % len];
        if (!g.adjacent(a, b))
            throw std::invalid_argument("cycle_signature: consecutive vertices not adjacent");
        bool a_outer = a < n, b_outer = b < n;
        if (a_outer != b_outer) {
            ++sig.b;
        } else if (a_outer) {
            if ((a + 1) % n == b)
                ++sig.u_plus;
            else
                ++sig.u_minus;
        } else {
            int ai = a - n, bi = b - n;
            if ((ai + k) % n == bi)
                ++sig.v_plus;
            else
                ++sig.v_minus;
        }
    }
    return sig;
}

}  // namespace pet
