#include "magiclab/graphs.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace magiclab {

HypercubeModel::HypercubeModel(int n) : dim(n) {
    if (n < 1 || n > 62) throw std::invalid_argument("hypercube dimension out of supported range");
    order = std::uint64_t(1) << n;
}

void for_each_at_distance(const HypercubeModel& model, const BitVector& u, int i,
                          const std::function<void(const BitVector&)>& fn) {
    int n = model.dim;
    if (u.dim() != n) throw std::invalid_argument("vertex dimension mismatch");
    if (i < 0 || i > n) throw std::invalid_argument("distance out of range");
    if (i == 0) {
        fn(u);
        return;
    }
    std::vector<int> pos(i);
    for (int k = 0; k < i; ++k) pos[k] = k;
    for (;;) {
        BitVector v = u;
        for (int k = 0; k < i; ++k) v.set(pos[k], !v.get(pos[k]));
        fn(v);
        // next combination in lexicographic order
        int k = i - 1;
        while (k >= 0 && pos[k] == n - i + k) --k;
        if (k < 0) break;
        ++pos[k];
        for (int t = k + 1; t < i; ++t) pos[t] = pos[t - 1] + 1;
    }
}

std::vector<BitVector> hamming_sphere(const HypercubeModel& model, const BitVector& u, int i) {
    std::vector<BitVector> out;
    for_each_at_distance(model, u, i, [&](const BitVector& v) { out.push_back(v); });
    return out;
}

ExplicitGraph::ExplicitGraph(int order, std::string name) : adj_(order), name_(std::move(name)) {
    if (order < 1) throw std::invalid_argument("graph order must be positive");
}

void ExplicitGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (adjacent(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool ExplicitGraph::adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

ExplicitGraph ExplicitGraph::hypercube(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("explicit hypercubes are limited to n <= 8; use HypercubeModel");
    int N = 1 << n;
    ExplicitGraph g(N, "Q_" + std::to_string(n));
    for (int v = 0; v < N; ++v)
        for (int b = 0; b < n; ++b)
            if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
    return g;
}

ExplicitGraph ExplicitGraph::cycle(int len) {
    if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    ExplicitGraph g(len, "C_" + std::to_string(len));
    for (int v = 0; v < len; ++v) g.add_edge(v, (v + 1) % len);
    return g;
}

ExplicitGraph ExplicitGraph::petersen() {
    ExplicitGraph g(10, "Petersen");
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

ExplicitGraph ExplicitGraph::parse_edge_list(const std::string& text, std::string name) {
    std::istringstream in(text);
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'N M' header");
    if (n < 1) throw std::invalid_argument("edge list: order must be positive");
    ExplicitGraph g((int)n, std::move(name));
    for (long long e = 0; e < m; ++e) {
        long long u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, found " + std::to_string(e));
        g.add_edge((int)u, (int)v);
    }
    return g;
}

std::string ExplicitGraph::to_edge_list() const {
    std::ostringstream out;
    long long m = 0;
    for (int v = 0; v < order(); ++v)
        for (int w : adj_[v])
            if (v < w) ++m;
    out << order() << " " << m << "\n";
    for (int v = 0; v < order(); ++v)
        for (int w : adj_[v])
            if (v < w) out << v << " " << w << "\n";
    return out.str();
}

DistancePartition distance_partition(const ExplicitGraph& g, int x) {
    if (x < 0 || x >= g.order()) throw std::out_of_range("source vertex out of range");
    DistancePartition p;
    p.source = x;
    p.dist.assign(g.order(), -1);
    p.dist[x] = 0;
    std::deque<int> queue{x};
    int maxd = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        maxd = std::max(maxd, p.dist[v]);
        for (int w : g.neighbors(v))
            if (p.dist[w] < 0) {
                p.dist[w] = p.dist[v] + 1;
                queue.push_back(w);
            }
    }
    for (int v = 0; v < g.order(); ++v)
        if (p.dist[v] < 0)
            throw std::runtime_error("graph is disconnected: vertex " + std::to_string(v) +
                                     " unreachable from " + std::to_string(x));
    p.cells.assign(maxd + 1, {});
    for (int v = 0; v < g.order(); ++v) p.cells[p.dist[v]].push_back(v);
    return p;
}

ArrayCheckResult intersection_array_of(const ExplicitGraph& g) {
    ArrayCheckResult res;
    DistancePartition base = distance_partition(g, 0);
    int d = base.eccentricity();
    std::vector<long long> b(d + 1, -1), c(d + 1, -1);

    for (int x = 0; x < g.order(); ++x) {
        DistancePartition p = x == 0 ? base : distance_partition(g, x);
        if (p.eccentricity() != d) {
            res.failure = "eccentricity of vertex " + std::to_string(x) + " is " +
                          std::to_string(p.eccentricity()) + ", expected " + std::to_string(d);
            res.x = x;
            return res;
        }
        for (int y = 0; y < g.order(); ++y) {
            int i = p.dist[y];
            long long up = 0, down = 0;
            for (int z : g.neighbors(y)) {
                if (p.dist[z] == i + 1) ++up;
                if (p.dist[z] == i - 1) ++down;
            }
            if (b[i] < 0) b[i] = up;
            if (c[i] < 0) c[i] = down;
            if (b[i] != up || c[i] != down) {
                res.failure = "pair (" + std::to_string(x) + "," + std::to_string(y) +
                              ") at distance " + std::to_string(i) + " sees (b,c)=(" +
                              std::to_string(up) + "," + std::to_string(down) + "), expected (" +
                              std::to_string(b[i]) + "," + std::to_string(c[i]) + ")";
                res.x = x;
                res.y = y;
                res.dist = i;
                return res;
            }
        }
    }
    res.array = IntersectionArray(std::vector<long long>(b.begin(), b.begin() + d),
                                  std::vector<long long>(c.begin() + 1, c.end()));
    return res;
}

void HadamardMatrix::validate() const {
    int m = order();
    if (m < 2) throw std::invalid_argument("Hadamard matrix needs order >= 2");
    for (auto& row : h) {
        if ((int)row.size() != m) throw std::invalid_argument("Hadamard matrix must be square");
        for (int v : row)
            if (v != 1 && v != -1) throw std::invalid_argument("Hadamard entries must be +-1");
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            long long dot = 0;
            for (int k = 0; k < m; ++k) dot += (long long)h[i][k] * h[j][k];
            if (dot != 0)
                throw std::invalid_argument("not a Hadamard matrix: rows " + std::to_string(i) +
                                            " and " + std::to_string(j) + " have inner product " +
                                            std::to_string(dot));
        }
}

HadamardMatrix HadamardMatrix::sylvester(int m) {
    if (m < 1 || (m & (m - 1)) != 0) throw std::invalid_argument("sylvester order must be a power of two");
    HadamardMatrix H;
    H.h = {{1}};
    while (H.order() < m) {
        int k = H.order();
        std::vector<std::vector<int>> next(2 * k, std::vector<int>(2 * k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                next[i][j] = H.h[i][j];
                next[i][j + k] = H.h[i][j];
                next[i + k][j] = H.h[i][j];
                next[i + k][j + k] = -H.h[i][j];
            }
        H.h = std::move(next);
    }
    return H;
}

HadamardMatrix HadamardMatrix::parse(const std::string& text) {
    HadamardMatrix H;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<int> row;
        for (char ch : line) {
            if (ch == '+')
                row.push_back(1);
            else if (ch == '-')
                row.push_back(-1);
            else if (!isspace((unsigned char)ch))
                throw std::invalid_argument("Hadamard matrix lines may contain only '+' and '-'");
        }
        if (!row.empty()) H.h.push_back(std::move(row));
    }
    return H;
}

ExplicitGraph hadamard_graph(const HadamardMatrix& H) {
    H.validate();
    int m = H.order();
    ExplicitGraph g(4 * m, "Hadamard_" + std::to_string(4 * m));
    auto id = [m](int side, int index, int sign) { return side * 2 * m + 2 * index + sign; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int s = 0; s < 2; ++s)
                for (int t = 0; t < 2; ++t) {
                    int prod = (s ? -1 : 1) * (t ? -1 : 1) * H.h[i][j];
                    if (prod == 1) g.add_edge(id(0, i, s), id(1, j, t));
                }
    return g;
}

ExplicitGraph disjoint_union(const ExplicitGraph& g1, const ExplicitGraph& g2) {
    ExplicitGraph g(g1.order() + g2.order(), g1.name().empty() ? "" : g1.name() + "+" + g2.name());
    for (int v = 0; v < g1.order(); ++v)
        for (int w : g1.neighbors(v))
            if (v < w) g.add_edge(v, w);
    int off = g1.order();
    for (int v = 0; v < g2.order(); ++v)
        for (int w : g2.neighbors(v))
            if (v < w) g.add_edge(v + off, w + off);
    return g;
}

TwoCubes::TwoCubes(int d) : dim(d) {
    if (d < 1 || d > 61) throw std::invalid_argument("TwoCubes dimension out of supported range");
    order = std::uint64_t(2) << d;
}

}  // namespace magiclab
