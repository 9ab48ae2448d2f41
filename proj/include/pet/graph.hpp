#ifndef PET_GRAPH_HPP
#define PET_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pet {

// Immutable undirected simple graph with dense vertex indexing.
// Adjacency is kept both as bit rows (O(1) queries) and as flat
// neighbour lists (fast BFS).  Intended scale is <= ~10^4 vertices.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list,
                std::vector<std::string> labels = {}, std::string name = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Canonical edge list: u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }
    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

    const std::string& name() const { return name_; }
    std::string label(int v) const;
    bool has_labels() const { return !labels_.empty(); }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> bits_;
    std::vector<int> adj_;
    std::vector<int> offsets_ = {0};
    std::vector<std::string> labels_;
    std::string name_;
};

// Standard builders.
SimpleGraph make_cycle(int n);
SimpleGraph make_complete(int n);
SimpleGraph make_circular_complete(int p, int q);
SimpleGraph complement(const SimpleGraph& g);

// Transforms.  walk_power follows the exact-r-walk semantics: distinct
// u, v become adjacent iff some walk of length exactly r joins them.
SimpleGraph walk_power(const SimpleGraph& g, int r);
// distance_power (adjacent iff 1 <= dist <= r) is kept as a cross-check
// of the two power semantics found in the literature.
SimpleGraph distance_power(const SimpleGraph& g, int r);
SimpleGraph subdivide(const SimpleGraph& g, int d);
SimpleGraph fractional_power(const SimpleGraph& g, int r, int d);

// Exact cycle oracles.
std::optional<int> odd_girth_bfs(const SimpleGraph& g);
std::optional<int> girth_bfs(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);

// Parity-layered single-source distances: result[v] = {even, odd}
// minimum walk lengths from src (-1 when no such walk exists).
std::vector<std::pair<int, int>> parity_distances(const SimpleGraph& g, int src);

// Edge-list text format: "p <nvertices> <nedges>" then one sorted
// "e <u> <v>" line per edge, 0-based.  Deterministic bytes.
void write_edge_list(const SimpleGraph& g, std::ostream& out);
std::string to_edge_list(const SimpleGraph& g);
SimpleGraph read_edge_list(std::istream& in);

}  // namespace pet

#endif
