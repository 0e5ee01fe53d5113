#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "magiclab/gf2.hpp"
#include "magiclab/spectral.hpp"

namespace magiclab {

// Graph models. Hypercubes are implicit (vertices are bit-vectors, spheres
// enumerated combinatorially, adjacency never materialized); everything
// else is an explicit adjacency-list graph small enough for BFS checks.

struct HypercubeModel {
    int dim = 0;
    std::uint64_t order = 0;

    explicit HypercubeModel(int n);

    BitVector antipode(const BitVector& u) const { return u ^ BitVector::ones(dim); }
};

// Calls fn once for every vector at Hamming distance i from u, in
// lexicographic order of the flipped-position sets. Throws if i is out of
// range.
void for_each_at_distance(const HypercubeModel& model, const BitVector& u, int i,
                          const std::function<void(const BitVector&)>& fn);

// Collecting form of the sphere enumeration; sizes are C(n, i).
std::vector<BitVector> hamming_sphere(const HypercubeModel& model, const BitVector& u, int i);

class ExplicitGraph {
public:
    ExplicitGraph(int order, std::string name = "");

    static ExplicitGraph hypercube(int n);  // n <= 8; larger cubes stay implicit
    static ExplicitGraph cycle(int len);
    static ExplicitGraph petersen();
    // Edge-list text format: first line "N M", then M lines "u v", 0-based.
    static ExplicitGraph parse_edge_list(const std::string& text, std::string name = "");

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    int order() const { return (int)adj_.size(); }
    int degree(int v) const { return (int)adj_[v].size(); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::string& name() const { return name_; }

    std::string to_edge_list() const;

private:
    std::vector<std::vector<int>> adj_;
    std::string name_;
};

struct DistancePartition {
    int source = 0;
    std::vector<int> dist;                // per-vertex BFS distance
    std::vector<std::vector<int>> cells;  // cells[i] = G_i(source)

    int eccentricity() const { return (int)cells.size() - 1; }
};

// BFS layering from x. Throws on a disconnected graph, naming an
// unreachable vertex.
DistancePartition distance_partition(const ExplicitGraph& g, int x);

// Result of the exhaustive distance-regularity check: either the array or
// a structured report naming the first violating vertex pair.
struct ArrayCheckResult {
    std::optional<IntersectionArray> array;
    std::string failure;  // empty iff array is set
    int x = -1, y = -1, dist = -1;

    bool ok() const { return array.has_value(); }
};

// Verifies the b_i / c_i counts over all ordered vertex pairs; this full
// check is the trust anchor for the spectral certificates, so it never
// samples.
ArrayCheckResult intersection_array_of(const ExplicitGraph& g);

// A +-1 matrix of order m with H H^T = m I.
struct HadamardMatrix {
    std::vector<std::vector<int>> h;

    int order() const { return (int)h.size(); }
    // Throws, citing the violated orthogonality pair, if not Hadamard.
    void validate() const;

    static HadamardMatrix sylvester(int m);  // m a power of two
    // Lines of '+'/'-' characters.
    static HadamardMatrix parse(const std::string& text);
};

// The 4m-vertex Hadamard graph: vertices (side, index, sign), with
// (row,i,s) adjacent to (col,j,t) iff s*t*H_ij = +1.
// Vertex id = side*2m + 2*index + (sign < 0).
ExplicitGraph hadamard_graph(const HadamardMatrix& H);

// Block-diagonal union; vertices of g2 are offset by |g1|.
ExplicitGraph disjoint_union(const ExplicitGraph& g1, const ExplicitGraph& g2);

// Disjoint union of two implicit hypercubes Q_dim; the second copy
// occupies vertex indices 2^dim .. 2^{dim+1}-1.
struct TwoCubes {
    int dim = 0;
    std::uint64_t order = 0;

    explicit TwoCubes(int d);
};

}  // namespace magiclab
