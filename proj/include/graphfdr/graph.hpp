#ifndef GRAPHFDR_GRAPH_HPP
#define GRAPHFDR_GRAPH_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphfdr {

struct GeoPoint {
    double lat_deg = 0.0;
    double lon_deg = 0.0;
};

// Undirected simple graph: symmetric 0/1 adjacency, zero diagonal.
// `connected` is a warning state, never an error; disconnected graphs are
// legal inputs everywhere downstream.
struct Graph {
    int n_vertices = 0;
    Eigen::MatrixXd adjacency;
    std::vector<std::string> vertex_ids;
    bool connected = true;
};

namespace detail {

inline bool compute_connected(const Eigen::MatrixXd& adj) {
    const int n = static_cast<int>(adj.rows());
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u) {
            if (adj(v, u) != 0.0 && !seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
                ++visited;
            }
        }
    }
    return visited == n;
}

inline std::vector<std::string> default_vertex_ids(int n) {
    std::vector<std::string> ids;
    ids.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
    return ids;
}

} // namespace detail

// Builds a Graph from an adjacency matrix, enforcing the structural
// invariants (square, symmetric, 0/1 entries, zero diagonal).
inline Graph make_graph(Eigen::MatrixXd adjacency, std::vector<std::string> vertex_ids = {}) {
    const int n = static_cast<int>(adjacency.rows());
    if (n < 1 || adjacency.cols() != n) {
        throw std::invalid_argument("make_graph: adjacency must be a nonempty square matrix");
    }
    for (int i = 0; i < n; ++i) {
        if (adjacency(i, i) != 0.0) {
            throw std::invalid_argument("make_graph: self-loop at vertex " + std::to_string(i));
        }
        for (int j = 0; j < n; ++j) {
            const double w = adjacency(i, j);
            if (w != 0.0 && w != 1.0) {
                throw std::invalid_argument("make_graph: adjacency entries must be 0 or 1");
            }
            if (w != adjacency(j, i)) {
                throw std::invalid_argument("make_graph: adjacency must be symmetric");
            }
        }
    }
    if (vertex_ids.empty()) {
        vertex_ids = detail::default_vertex_ids(n);
    } else if (static_cast<int>(vertex_ids.size()) != n) {
        throw std::invalid_argument("make_graph: vertex_ids size mismatch");
    }
    Graph g;
    g.n_vertices = n;
    g.connected = detail::compute_connected(adjacency);
    g.adjacency = std::move(adjacency);
    g.vertex_ids = std::move(vertex_ids);
    return g;
}

// Great-circle distance in km between two (lat, lon) points in degrees.
inline double haversine_km(const GeoPoint& a, const GeoPoint& b) {
    constexpr double earth_radius_km = 6371.0088;
    constexpr double to_rad = std::numbers::pi / 180.0;
    const double lat1 = a.lat_deg * to_rad;
    const double lat2 = b.lat_deg * to_rad;
    const double dlat = (b.lat_deg - a.lat_deg) * to_rad;
    const double dlon = (b.lon_deg - a.lon_deg) * to_rad;
    const double s1 = std::sin(0.5 * dlat);
    const double s2 = std::sin(0.5 * dlon);
    const double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
    return 2.0 * earth_radius_km * std::asin(std::min(1.0, std::sqrt(h)));
}

// k-nearest-neighbor graph under haversine distance, symmetrized by union
// of directed k-NN edges, binary weights. Distance ties are broken by input
// order, so duplicate coordinates are allowed and results are deterministic.
inline Graph build_knn_graph(const std::vector<GeoPoint>& coords, int k,
                             std::vector<std::string> vertex_ids = {}) {
    const int n = static_cast<int>(coords.size());
    if (k < 1) throw std::invalid_argument("build_knn_graph: k must be positive");
    if (n < k + 1) {
        throw std::invalid_argument("build_knn_graph: need at least k+1 points, got " +
                                    std::to_string(n));
    }
    for (const auto& c : coords) {
        if (!std::isfinite(c.lat_deg) || !std::isfinite(c.lon_deg)) {
            throw std::invalid_argument("build_knn_graph: coordinates must be finite");
        }
    }
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    std::vector<std::pair<double, int>> order;
    order.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        order.clear();
        for (int j = 0; j < n; ++j) {
            if (j != i) order.emplace_back(haversine_km(coords[static_cast<std::size_t>(i)],
                                                        coords[static_cast<std::size_t>(j)]), j);
        }
        std::sort(order.begin(), order.end());
        for (int r = 0; r < k; ++r) {
            const int j = order[static_cast<std::size_t>(r)].second;
            adj(i, j) = 1.0;
            adj(j, i) = 1.0;
        }
    }
    return make_graph(std::move(adj), std::move(vertex_ids));
}

// Cycle graph on n vertices; the built-in synthetic scenario topology.
inline Graph build_ring_graph(int n) {
    if (n < 3) throw std::invalid_argument("build_ring_graph: need at least 3 vertices");
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        adj(i, j) = 1.0;
        adj(j, i) = 1.0;
    }
    return make_graph(std::move(adj));
}

// Graph from an explicit undirected edge list over n vertices.
// Self-loops and duplicate edges (in either orientation) are rejected.
inline Graph build_graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                    std::vector<std::string> vertex_ids = {}) {
    if (n < 1) throw std::invalid_argument("build_graph_from_edges: need at least one vertex");
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("build_graph_from_edges: vertex index out of range");
        }
        if (u == v) {
            throw std::invalid_argument("build_graph_from_edges: self-loop at vertex " +
                                        std::to_string(u));
        }
        if (adj(u, v) != 0.0) {
            throw std::invalid_argument("build_graph_from_edges: duplicate edge (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        }
        adj(u, v) = 1.0;
        adj(v, u) = 1.0;
    }
    return make_graph(std::move(adj), std::move(vertex_ids));
}

// Combinatorial Laplacian L = D - A. Row sums are exactly zero: the degree
// is accumulated from the same adjacency entries the row subtracts.
inline Eigen::MatrixXd laplacian(const Graph& g) {
    const int n = g.n_vertices;
    Eigen::MatrixXd lap = -g.adjacency;
    for (int i = 0; i < n; ++i) {
        double degree = 0.0;
        for (int j = 0; j < n; ++j) degree += g.adjacency(i, j);
        lap(i, i) = degree;
    }
    return lap;
}

} // namespace graphfdr

#endif // GRAPHFDR_GRAPH_HPP
