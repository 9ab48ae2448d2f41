#include "pet/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pet {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list,
                         std::vector<std::string> labels, std::string name)
    : n_(vertex_count), labels_(std::move(labels)), name_(std::move(name)) {
    if (n_ < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw std::invalid_argument("SimpleGraph: label count mismatch");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("SimpleGraph: endpoint out of range");
        if (u == v) throw std::invalid_argument("SimpleGraph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);

    words_ = static_cast<std::size_t>((n_ + 63) / 64);
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    std::vector<int> deg(n_, 0);
    for (auto [u, v] : edges_) {
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adj_.resize(static_cast<std::size_t>(offsets_[n_]));
    std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
    // Neighbour lists come out ascending per vertex because edges_ is sorted
    // on the first endpoint only; fix up the second-endpoint contributions.
    for (int v = 0; v < n_; ++v)
        std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
}

std::string SimpleGraph::label(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("label: bad vertex");
    if (labels_.empty()) return std::to_string(v);
    return labels_[v];
}

SimpleGraph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return SimpleGraph(n, std::move(edges), {}, "C_" + std::to_string(n));
}

SimpleGraph make_complete(int n) {
    if (n < 0) throw std::invalid_argument("make_complete: negative n");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return SimpleGraph(n, std::move(edges), {}, "K_" + std::to_string(n));
}

SimpleGraph make_circular_complete(int p, int q) {
    if (q < 1 || p < 2 * q)
        throw std::invalid_argument("make_circular_complete: need p >= 2q >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            int d = j - i;
            if (d >= q && d <= p - q) edges.emplace_back(i, j);
        }
    return SimpleGraph(p, std::move(edges), {},
                       "K_{" + std::to_string(p) + "/" + std::to_string(q) + "}");
}

SimpleGraph complement(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    return SimpleGraph(n, std::move(edges), {}, "~" + g.name());
}

std::vector<std::pair<int, int>> parity_distances(const SimpleGraph& g, int src) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> dist(n, {-1, -1});
    dist[src].first = 0;
    std::deque<std::pair<int, int>> queue{{src, 0}};
    while (!queue.empty()) {
        auto [v, parity] = queue.front();
        queue.pop_front();
        int d = parity == 0 ? dist[v].first : dist[v].second;
        for (int w : g.neighbors(v)) {
            int& slot = parity == 0 ? dist[w].second : dist[w].first;
            if (slot < 0) {
                slot = d + 1;
                queue.emplace_back(w, 1 - parity);
            }
        }
    }
    return dist;
}

std::optional<int> odd_girth_bfs(const SimpleGraph& g) {
    int n = g.vertex_count();
    int best = -1;
    // Stamped double-cover BFS buffers shared across roots.
    std::vector<int> dist(static_cast<std::size_t>(n) * 2);
    std::vector<int> stamp(static_cast<std::size_t>(n) * 2, -1);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n) * 2);
    for (int src = 0; src < n; ++src) {
        queue.clear();
        int found = -1;
        dist[src * 2] = 0;
        stamp[src * 2] = src;
        queue.push_back(src * 2);
        for (std::size_t head = 0; head < queue.size() && found < 0; ++head) {
            int node = queue[head];
            int v = node >> 1;
            int parity = node & 1;
            int d = dist[node];
            // No improvement can come from depth >= best.
            if (best >= 0 && d + 1 >= best) break;
            for (int w : g.neighbors(v)) {
                int next = w * 2 + (1 - parity);
                if (stamp[next] != src) {
                    stamp[next] = src;
                    dist[next] = d + 1;
                    if (next == src * 2 + 1) {
                        found = d + 1;
                        break;
                    }
                    queue.push_back(next);
                }
            }
        }
        if (found > 0 && (best < 0 || found < best)) best = found;
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::optional<int> girth_bfs(const SimpleGraph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n), stamp(n, -1), queue;
    queue.reserve(n);
    for (int root = 0; root < n; ++root) {
        queue.clear();
        dist[root] = 0;
        parent[root] = -1;
        stamp[root] = root;
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            // Any candidate seen from depth d onward has length >= 2d.
            if (best >= 0 && 2 * dist[v] >= best) break;
            for (int w : g.neighbors(v)) {
                if (stamp[w] != root) {
                    stamp[w] = root;
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (parent[v] != w && parent[w] != v) {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool is_bipartite(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

SimpleGraph walk_power(const SimpleGraph& g, int r) {
    if (r < 1) throw std::invalid_argument("walk_power: need r >= 1");
    if (r == 1) return g;
    int n = g.vertex_count();
    int want = r & 1;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        auto dist = parity_distances(g, u);
        for (int v = u + 1; v < n; ++v) {
            // A walk of length L == r (mod 2), L <= r, extends to length
            // exactly r by traversing one edge back and forth.
            int d = want == 0 ? dist[v].first : dist[v].second;
            if (d >= 1 && d <= r) edges.emplace_back(u, v);
        }
    }
    return SimpleGraph(n, std::move(edges), {}, g.name() + "^" + std::to_string(r));
}

SimpleGraph distance_power(const SimpleGraph& g, int r) {
    if (r < 1) throw std::invalid_argument("distance_power: need r >= 1");
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        auto dist = parity_distances(g, u);
        for (int v = u + 1; v < n; ++v) {
            int de = dist[v].first;
            int dodd = dist[v].second;
            int d = de >= 1 ? de : -1;
            if (dodd >= 1 && (d < 0 || dodd < d)) d = dodd;
            if (d >= 1 && d <= r) edges.emplace_back(u, v);
        }
    }
    return SimpleGraph(n, std::move(edges), {}, g.name() + "<=" + std::to_string(r));
}

SimpleGraph subdivide(const SimpleGraph& g, int d) {
    if (d < 1) throw std::invalid_argument("subdivide: need d >= 1");
    if (d == 1) return g;
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    int next = n;
    for (auto [u, v] : g.edges()) {
        int prev = u;
        for (int j = 1; j < d; ++j) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return SimpleGraph(next, std::move(edges), {}, g.name() + "^{1/" + std::to_string(d) + "}");
}

SimpleGraph fractional_power(const SimpleGraph& g, int r, int d) {
    return walk_power(subdivide(g, d), r);
}

void write_edge_list(const SimpleGraph& g, std::ostream& out) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

std::string to_edge_list(const SimpleGraph& g) {
    std::ostringstream oss;
    write_edge_list(g, oss);
    return oss.str();
}

SimpleGraph read_edge_list(std::istream& in) {
    std::string tag;
    int n = -1, m = -1;
    if (!(in >> tag >> n >> m) || tag != "p")
        throw std::invalid_argument("read_edge_list: missing 'p' header");
    if (n < 0 || m < 0) throw std::invalid_argument("read_edge_list: bad header counts");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> tag >> u >> v) || tag != "e")
            throw std::invalid_argument("read_edge_list: bad edge line");
        edges.emplace_back(u, v);
    }
    return SimpleGraph(n, std::move(edges));
}

}  // namespace pet
