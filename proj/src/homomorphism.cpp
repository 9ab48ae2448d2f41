#include "pet/homomorphism.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace pet {

std::optional<EdgeViolation> find_hom_violation(const SimpleGraph& source,
                                                const SimpleGraph& target,
                                                std::span<const int> assignment) {
    if (static_cast<int>(assignment.size()) != source.vertex_count())
        throw std::invalid_argument("find_hom_violation: assignment size mismatch");
    for (int a : assignment)
        if (a < 0 || a >= target.vertex_count())
            throw std::invalid_argument("find_hom_violation: image out of range");
    for (auto [u, v] : source.edges()) {
        int fu = assignment[u], fv = assignment[v];
        if (fu == fv || !target.adjacent(fu, fv)) return EdgeViolation{u, v};
    }
    return std::nullopt;
}

bool verify_hom(VertexMap& map) {
    map.verified = !find_hom_violation(map.source, map.target, map.assignment).has_value();
    return map.verified;
}

std::optional<EdgeViolation> find_coloring_violation(const SimpleGraph& g,
                                                     const CircularColoring& coloring) {
    if (static_cast<int>(coloring.values.size()) != g.vertex_count())
        throw std::invalid_argument("find_coloring_violation: value count mismatch");
    int n = coloring.modulus;
    for (int c : coloring.values)
        if (c < 0 || c >= n) throw std::invalid_argument("find_coloring_violation: bad residue");
    for (auto [u, v] : g.edges()) {
        int diff = coloring.values[u] - coloring.values[v];
        if (diff < 0) diff = -diff;
        int dist = std::min(diff, n - diff);
        if (Rational(dist) < coloring.threshold) return EdgeViolation{u, v};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Backtracking homomorphism search with forward checking.

namespace {

class HomSearcher {
public:
    HomSearcher(const SimpleGraph& g, const SimpleGraph& h, const SearchOptions& opts)
        : g_(g), h_(h), opts_(opts), ng_(g.vertex_count()), nh_(h.vertex_count()),
          words_((nh_ + 63) / 64) {
        full_.assign(words_, 0);
        for (int a = 0; a < nh_; ++a) full_[a >> 6] |= std::uint64_t(1) << (a & 63);
        nbr_mask_.assign(static_cast<std::size_t>(nh_) * words_, 0);
        for (auto [a, b] : h.edges()) {
            nbr_mask_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |= std::uint64_t(1)
                                                                         << (b & 63);
            nbr_mask_[static_cast<std::size_t>(b) * words_ + (a >> 6)] |= std::uint64_t(1)
                                                                         << (a & 63);
        }
        order_.resize(ng_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&g](int a, int b) { return g.degree(a) > g.degree(b); });
        depth_of_.assign(ng_, 0);
        for (int d = 0; d < ng_; ++d) depth_of_[order_[d]] = d;
        cand_.assign(static_cast<std::size_t>(ng_ + 1) * ng_ * words_, 0);
        assignment_.assign(ng_, -1);
    }

    SearchResult run() {
        // Level 0 candidate sets: everything (or pinned first vertex).
        for (int v = 0; v < ng_; ++v)
            std::copy(full_.begin(), full_.end(), level(0) + static_cast<std::size_t>(v) * words_);
        if (opts_.fix_first_vertex && ng_ > 0 && nh_ > 0) {
            std::uint64_t* c = level(0) + static_cast<std::size_t>(order_[0]) * words_;
            std::fill(c, c + words_, 0);
            c[0] = 1;
        }
        bool found = dfs(0);
        SearchResult result;
        result.nodes = nodes_;
        if (found) {
            result.outcome = SearchOutcome::found;
            VertexMap map{g_, h_, assignment_, false};
            if (!verify_hom(map))
                throw verification_error("search_hom: produced map failed verification");
            result.witness = std::move(map);
        } else if (exhausted_) {
            result.outcome = SearchOutcome::budget_exhausted;
        } else {
            result.outcome = SearchOutcome::none;
        }
        return result;
    }

private:
    std::uint64_t* level(int depth) {
        return cand_.data() + static_cast<std::size_t>(depth) * ng_ * words_;
    }

    bool dfs(int depth) {
        if (depth == ng_) return true;
        int v = order_[depth];
        std::uint64_t* cur = level(depth);
        const std::uint64_t* mine = cur + static_cast<std::size_t>(v) * words_;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = mine[w];
            while (bits) {
                int a = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                if (++nodes_ > opts_.node_budget) {
                    exhausted_ = true;
                    return false;
                }
                assignment_[v] = a;
                if (propagate(depth, v, a)) {
                    if (dfs(depth + 1)) return true;
                    if (exhausted_) return false;
                }
            }
        }
        assignment_[v] = -1;
        return false;
    }

    // Copy candidate sets one level down, restricting unassigned
    // neighbours of v to the neighbourhood of a.  False on a wipe-out.
    bool propagate(int depth, int v, int a) {
        const std::uint64_t* cur = level(depth);
        std::uint64_t* nxt = level(depth + 1);
        std::copy(cur, cur + static_cast<std::size_t>(ng_) * words_, nxt);
        const std::uint64_t* mask = nbr_mask_.data() + static_cast<std::size_t>(a) * words_;
        for (int w : g_.neighbors(v)) {
            if (depth_of_[w] <= depth) continue;  // already assigned
            std::uint64_t* cw = nxt + static_cast<std::size_t>(w) * words_;
            std::uint64_t any = 0;
            for (int i = 0; i < words_; ++i) {
                cw[i] &= mask[i];
                any |= cw[i];
            }
            if (!any) return false;
        }
        return true;
    }

    const SimpleGraph& g_;
    const SimpleGraph& h_;
    SearchOptions opts_;
    int ng_;
    int nh_;
    int words_;
    std::vector<std::uint64_t> full_;
    std::vector<std::uint64_t> nbr_mask_;
    std::vector<int> order_;
    std::vector<int> depth_of_;
    std::vector<std::uint64_t> cand_;
    std::vector<int> assignment_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

SearchResult search_hom(const SimpleGraph& g, const SimpleGraph& h, SearchOptions opts) {
    if (g.vertex_count() == 0) {
        VertexMap map{g, h, {}, true};
        return SearchResult{SearchOutcome::found, std::move(map), 0};
    }
    if (h.vertex_count() == 0) return SearchResult{SearchOutcome::none, std::nullopt, 0};
    if (g.edge_count() > 0 && h.edge_count() == 0)
        return SearchResult{SearchOutcome::none, std::nullopt, 0};
    // Odd-girth obstruction: a homomorphism maps the shortest odd cycle
    // of g onto an odd closed walk of the same length in h.
    if (auto og_g = odd_girth_bfs(g)) {
        auto og_h = odd_girth_bfs(h);
        if (!og_h || *og_h > *og_g) return SearchResult{SearchOutcome::none, std::nullopt, 0};
    }
    HomSearcher searcher(g, h, opts);
    return searcher.run();
}

// ---------------------------------------------------------------------------
// Explicit constructions.

namespace {

long long mod_inverse(long long a, long long n) {
    long long t = 0, new_t = 1, r = n, new_r = ((a % n) + n) % n;
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("mod_inverse: not invertible");
    return ((t % n) + n) % n;
}

VertexMap make_verified(SimpleGraph source, SimpleGraph target, std::vector<int> assignment,
                        const std::string& what) {
    VertexMap map{std::move(source), std::move(target), std::move(assignment), false};
    if (!verify_hom(map)) {
        auto bad = find_hom_violation(map.source, map.target, map.assignment);
        std::ostringstream oss;
        oss << what << ": verification failed on edge (" << bad->u << "," << bad->v << ")";
        throw verification_error(oss.str());
    }
    return map;
}

std::vector<int> shift_collapse_assignment(GPParams params) {
    int n = params.n;
    std::vector<int> assignment(2 * static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) assignment[j] = (j - 1 + n) % n;  // u_{i+1} -> x_i
    for (int i = 0; i < n; ++i) assignment[n + i] = i;            // v_i -> x_i
    return assignment;
}

}  // namespace

VertexMap collapse_pet_to_pb(GPParams params) {
    return make_verified(build_petersen(params), build_pb(params),
                         shift_collapse_assignment(params), "collapse_pet_to_pb" + params.str());
}

VertexMap pet_to_cycle_power(GPParams params) {
    if (params.n % 2 == 0 || params.k % 2 == 0)
        throw std::domain_error("pet_to_cycle_power: requires n and k odd");
    if (params.n <= 2 * params.k + 1)
        throw std::domain_error("pet_to_cycle_power: requires n > 2k+1");
    return make_verified(build_petersen(params), build_cycle_power_k(params),
                         shift_collapse_assignment(params), "pet_to_cycle_power" + params.str());
}

CircularColoring pb_circular_coloring(GPParams params) {
    long long n = params.n, k = params.k;
    if (k % 2 != 0 || n % 2 == 0)
        throw std::domain_error("pb_circular_coloring: requires k even and n odd");
    if (k < 4) throw std::domain_error("pb_circular_coloring: requires k >= 4 (threshold degenerates)");
    bool plus2 = (n - 2) % (k - 1) == 0;
    bool minus2 = (n + 2) % (k - 1) == 0;
    if (!plus2 && !minus2)
        throw std::domain_error("pb_circular_coloring: requires n == +-2 (mod k-1)");
    Rational threshold(BigInt((n - 4) * (k - 2)), BigInt(2 * (k - 1)));
    long long inv = mod_inverse(k - 1, n);
    std::vector<int> values(static_cast<std::size_t>(n));
    for (long long j = 0; j < n; ++j) {
        long long c = inv * j % n;
        if (plus2) c = (n - c) % n;  // reversed orientation for the +2 residue
        values[static_cast<std::size_t>(j)] = static_cast<int>(c);
    }
    CircularColoring coloring{params.n, threshold, std::move(values)};
    if (auto bad = find_coloring_violation(build_pb(params), coloring)) {
        std::ostringstream oss;
        oss << "pb_circular_coloring" << params.str() << ": edge (" << bad->u << "," << bad->v
            << ") below threshold " << threshold.str();
        throw verification_error(oss.str());
    }
    return coloring;
}

CircularColoring eta_cycle_power_coloring(GPParams params) {
    long long n = params.n, k = params.k;
    if (n % 2 == 0 || k % 2 == 0)
        throw std::domain_error("eta_cycle_power_coloring: requires n and k odd");
    if (n <= 2 * k + 1) throw std::domain_error("eta_cycle_power_coloring: requires n > 2k+1");
    std::vector<int> values(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
        values[static_cast<std::size_t>(i)] = static_cast<int>(i % 2 == 0 ? i / 2 : (n + i) / 2);
    CircularColoring coloring{params.n, Rational((n - k) / 2), std::move(values)};
    if (auto bad = find_coloring_violation(build_cycle_power_k(params), coloring)) {
        std::ostringstream oss;
        oss << "eta_cycle_power_coloring" << params.str() << ": edge (" << bad->u << "," << bad->v
            << ") below threshold";
        throw verification_error(oss.str());
    }
    return coloring;
}

VertexMap circular_clique_hom(int p, int q, int p2, int q2) {
    if (q < 1 || p < 2 * q || q2 < 1 || p2 < 2 * q2)
        throw std::invalid_argument("circular_clique_hom: invalid circular clique parameters");
    if (Rational(p2, q2) < Rational(p, q))
        throw std::invalid_argument("circular_clique_hom: requires p/q <= p2/q2");
    SimpleGraph source = make_circular_complete(p, q);
    SimpleGraph target = make_circular_complete(p2, q2);
    std::vector<int> assignment(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        assignment[static_cast<std::size_t>(i)] =
            static_cast<int>(static_cast<long long>(i) * p2 / p);
    VertexMap map{source, target, std::move(assignment), false};
    if (verify_hom(map)) return map;
    SearchOptions opts;
    opts.fix_first_vertex = true;  // circular complete graphs are vertex-transitive
    auto result = search_hom(source, target, opts);
    if (result.outcome != SearchOutcome::found)
        throw verification_error("circular_clique_hom: no map found although p/q <= p2/q2");
    return *result.witness;
}

namespace {

VertexMap compose(const VertexMap& first, const VertexMap& second, const std::string& what) {
    std::vector<int> assignment(first.assignment.size());
    for (std::size_t i = 0; i < assignment.size(); ++i)
        assignment[i] = second.assignment[static_cast<std::size_t>(first.assignment[i])];
    return make_verified(first.source, second.target, std::move(assignment), what);
}

}  // namespace

VertexMap c5_coloring(GPParams params) {
    long long n = params.n, k = params.k;
    const std::string what = "c5_coloring" + params.str();
    if (n % 2 == 1 && k % 2 == 1) {
        if (n < 5 * k) throw std::domain_error(what + ": requires n >= 5k for odd n, k");
        VertexMap into_power = pet_to_cycle_power(params);
        CircularColoring eta = eta_cycle_power_coloring(params);
        int s = static_cast<int>((n - k) / 2);
        VertexMap eta_map{into_power.target, make_circular_complete(params.n, s), eta.values,
                          false};
        if (!verify_hom(eta_map)) throw verification_error(what + ": eta stage failed");
        VertexMap tail = circular_clique_hom(params.n, s, 5, 2);
        return compose(compose(into_power, eta_map, what + " (partial)"), tail, what);
    }
    if (k % 2 == 0 && n % 2 == 1) {
        CircularColoring pb = pb_circular_coloring(params);  // checks the residue condition
        Rational bound(BigInt(2 * n * (k - 1)), BigInt((n - 4) * (k - 2)));
        if (Rational(5, 2) < bound)
            throw std::domain_error(what + ": requires 2n(k-1)/((n-4)(k-2)) <= 5/2");
        long long den = static_cast<long long>(pb.threshold.den());
        long long num = static_cast<long long>(pb.threshold.num());
        VertexMap collapse = collapse_pet_to_pb(params);
        std::vector<int> scaled(pb.values.size());
        for (std::size_t i = 0; i < scaled.size(); ++i)
            scaled[i] = static_cast<int>(pb.values[i] * den);
        VertexMap mid{collapse.target,
                      make_circular_complete(static_cast<int>(n * den), static_cast<int>(num)),
                      std::move(scaled), false};
        if (!verify_hom(mid)) throw verification_error(what + ": scaled colouring stage failed");
        VertexMap tail =
            circular_clique_hom(static_cast<int>(n * den), static_cast<int>(num), 5, 2);
        return compose(compose(collapse, mid, what + " (partial)"), tail, what);
    }
    throw std::domain_error(what + ": no applicable construction (need n,k odd or k even, n odd)");
}

CliqueWitness clique_embedding(GPParams params, const IpSolution& sol) {
    long long n = params.n, k = params.k;
    if (sol.u < 0 || sol.u + k * sol.v != sol.t * n || sol.objective() % 2 != 1)
        throw std::invalid_argument("clique_embedding: solution is not feasible");
    auto opt = ip_enumerate(params);
    if (!opt) throw std::domain_error("clique_embedding: integer program infeasible (bipartite)");
    if (opt->trivial_attains_optimum)
        throw std::domain_error("clique_embedding: a trivial solution attains the optimum");
    if (sol.objective() != opt->best.objective())
        throw std::domain_error("clique_embedding: solution is not optimal");
    if (sol.t == 0)
        throw std::domain_error("clique_embedding: t = 0 solution has no t-form construction");
    IpCandidate form = unique_solution_for_t(params, sol.t);
    if (form.u != sol.u || form.v != sol.v)
        throw std::domain_error("clique_embedding: solution does not match the t-form");

    long long u = sol.u;
    long long w = sol.v < 0 ? -sol.v : sol.v;
    long long step = sol.t > 0 ? k : -k;
    std::vector<int> vertices;
    for (long long i = 0; i <= u; ++i) vertices.push_back(static_cast<int>(i));
    for (long long i = 0; i <= u; ++i) vertices.push_back(static_cast<int>(n + i));
    for (long long j = 1; j < w; ++j) {
        long long idx = ((u + j * step) % n + n) % n;
        vertices.push_back(static_cast<int>(idx));
        vertices.push_back(static_cast<int>(n + idx));
    }

    int power = static_cast<int>(sol.objective());
    SimpleGraph pet = build_petersen(params);
    SimpleGraph host = walk_power(pet, power);

    CliqueWitness witness;
    witness.host = host;
    witness.power = power;
    witness.vertices = vertices;
    std::ostringstream oss;
    oss << "P-set of (u=" << sol.u << ",v=" << sol.v << ",t=" << sol.t << ") in Pet"
        << params.str() << "^" << power;
    witness.description = oss.str();
    witness.verified = true;
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (vertices[a] == vertices[b] || !host.adjacent(vertices[a], vertices[b])) {
                witness.verified = false;
                witness.failures.emplace_back(vertices[a], vertices[b]);
            }
        }
    return witness;
}

InterleaveReport interleave_embedding(GPParams params, int q) {
    if (params.k % 2 != 0)
        throw std::domain_error("interleave_embedding: requires an even inner step");
    int n = params.n;
    if (q < 0) q = 2 * params.k + 2;  // 4k+2 in terms of the paper's half-step k
    if (q < 2) throw std::invalid_argument("interleave_embedding: q must be >= 2");

    InterleaveReport report;
    report.power = params.k + 1;
    report.requested_q = q;
    SimpleGraph host = walk_power(build_petersen(params), report.power);

    auto x_vertex = [n](int i) {
        int slot = ((i % (2 * n)) + 2 * n) % (2 * n);
        return slot % 2 == 0 ? slot / 2 : n + slot / 2;
    };

    int max_all_pass = 0;
    for (int offset = 1; offset < 2 * n; ++offset) {
        bool all = true;
        for (int i = 0; i < 2 * n; ++i) {
            int a = x_vertex(i), b = x_vertex(i + offset);
            if (a == b || !host.adjacent(a, b)) {
                all = false;
                if (offset <= q - 1) report.failures.emplace_back(i, offset);
            }
        }
        if (all && max_all_pass == offset - 1) max_all_pass = offset;
        if (!all && offset >= q) break;
    }
    report.max_verified_offset = max_all_pass;
    report.requested_ok = report.failures.empty();
    return report;
}

// ---------------------------------------------------------------------------
// Exact circular chromatic number.

Rational chi_c_exact(const SimpleGraph& g, int p_max) {
    if (g.edge_count() == 0 || is_bipartite(g))
        throw std::domain_error("chi_c_exact: requires a non-bipartite graph with an edge");
    if (p_max < 3) throw std::invalid_argument("chi_c_exact: p_max too small");

    struct Candidate {
        int p, q;
    };
    std::vector<Candidate> candidates;
    long long n = g.vertex_count();
    for (int p = 3; p <= p_max; ++p)
        for (int q = 1; 2 * q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            if (static_cast<long long>(p) > n * q) continue;  // p/q > |V|: never minimal
            candidates.push_back({p, q});
        }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        return static_cast<long long>(a.p) * b.q < static_cast<long long>(b.p) * a.q;
    });

    for (const auto& c : candidates) {
        SearchOptions opts;
        opts.fix_first_vertex = true;  // K_{p/q} is vertex-transitive
        auto result = search_hom(g, make_circular_complete(c.p, c.q), opts);
        if (result.outcome == SearchOutcome::found) return Rational(c.p, c.q);
        if (result.outcome == SearchOutcome::budget_exhausted) {
            std::ostringstream oss;
            oss << "chi_c_exact: budget exhausted at K_{" << c.p << "/" << c.q
                << "}; chi_c > ratios searched so far but minimality is uncertified";
            throw partial_result_error(oss.str());
        }
    }
    std::ostringstream oss;
    oss << "chi_c_exact: no homomorphism found with p <= " << p_max;
    throw partial_result_error(oss.str());
}

}  // namespace pet
