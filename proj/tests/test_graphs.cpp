#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "magiclab/graphs.hpp"
#include "magiclab/spectral.hpp"

using namespace magiclab;

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long acc = 1;
    for (int t = 1; t <= k; ++t) acc = acc * (n - k + t) / t;
    return acc;
}

std::vector<int> cell_sizes(const DistancePartition& p) {
    std::vector<int> out;
    for (auto& c : p.cells) out.push_back((int)c.size());
    return out;
}

ExplicitGraph k4_minus_edge() {
    ExplicitGraph g(4, "K4-e");
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(1, 3);
    return g;
}

}  // namespace

TEST_CASE("hamming sphere enumeration") {
    HypercubeModel q5(5);
    BitVector u = BitVector::parse("01101");
    auto s0 = hamming_sphere(q5, u, 0);
    REQUIRE(s0.size() == 1);
    CHECK(s0[0] == u);

    auto top = hamming_sphere(q5, BitVector(5), 5);
    REQUIRE(top.size() == 1);
    CHECK(top[0] == BitVector::ones(5));

    HypercubeModel q6(6);
    auto mid = hamming_sphere(q6, BitVector::parse("101010"), 3);
    CHECK(mid.size() == 20);
    std::set<std::uint64_t> uniq;
    for (auto& v : mid) uniq.insert(zeta(v));
    CHECK(uniq.size() == 20);

    CHECK_THROWS_AS(hamming_sphere(q5, u, 6), std::invalid_argument);
    CHECK_THROWS_AS(hamming_sphere(q5, u, -1), std::invalid_argument);
}

TEST_CASE("hamming sphere order is lexicographic in flipped positions") {
    HypercubeModel q4(4);
    auto s = hamming_sphere(q4, BitVector(4), 2);
    std::vector<std::uint64_t> zetas;
    for (auto& v : s) zetas.push_back(zeta(v));
    CHECK(zetas == std::vector<std::uint64_t>({3, 5, 9, 6, 10, 12}));
}

TEST_CASE("sphere sizes partition the cube") {
    for (int n = 1; n <= 8; ++n) {
        HypercubeModel m(n);
        BitVector u = BitVector::from_index(n, (std::uint64_t)(0x5a5a5a5a & ((1u << n) - 1)));
        std::uint64_t total = 0;
        for (int i = 0; i <= n; ++i) {
            auto s = hamming_sphere(m, u, i);
            CHECK((long long)s.size() == binomial(n, i));
            total += s.size();
        }
        CHECK(total == m.order);
    }
    for (int n = 9; n <= 14; ++n) {
        long long total = 0;
        for (int i = 0; i <= n; ++i) total += binomial(n, i);
        CHECK(total == (long long)(std::uint64_t(1) << n));
    }
}

TEST_CASE("distance partitions") {
    CHECK(cell_sizes(distance_partition(ExplicitGraph::cycle(4), 2)) == std::vector<int>({1, 2, 1}));
    CHECK(cell_sizes(distance_partition(ExplicitGraph::hypercube(3), 5)) ==
          std::vector<int>({1, 3, 3, 1}));
    ExplicitGraph had = hadamard_graph(HadamardMatrix::sylvester(4));
    for (int x : {0, 7, 15})
        CHECK(cell_sizes(distance_partition(had, x)) == std::vector<int>({1, 4, 6, 4, 1}));
}

TEST_CASE("distance partition on a disconnected graph names an unreachable vertex") {
    ExplicitGraph g = disjoint_union(ExplicitGraph(1), ExplicitGraph(1));
    CHECK(g.order() == 2);
    CHECK_THROWS_WITH_AS(distance_partition(g, 0),
                         "graph is disconnected: vertex 1 unreachable from 0", std::runtime_error);
}

TEST_CASE("intersection arrays of the test instances") {
    auto q3 = intersection_array_of(ExplicitGraph::hypercube(3));
    REQUIRE(q3.ok());
    CHECK(q3.array->format() == "{3,2,1;1,2,3}");

    auto c4 = intersection_array_of(ExplicitGraph::cycle(4));
    REQUIRE(c4.ok());
    CHECK(c4.array->format() == "{2,1;1,2}");

    auto pet = intersection_array_of(ExplicitGraph::petersen());
    REQUIRE(pet.ok());
    CHECK(pet.array->format() == "{3,2;1,1}");

    for (int n = 1; n <= 6; ++n) {
        auto chk = intersection_array_of(ExplicitGraph::hypercube(n));
        REQUIRE(chk.ok());
        CHECK(*chk.array == IntersectionArray::hypercube(n));
    }
}

TEST_CASE("non-distance-regular graphs produce a violation report") {
    auto res = intersection_array_of(k4_minus_edge());
    CHECK_FALSE(res.ok());
    CHECK_FALSE(res.failure.empty());
    CHECK(res.x >= 0);
}

TEST_CASE("hadamard graphs") {
    ExplicitGraph h16 = hadamard_graph(HadamardMatrix::sylvester(4));
    CHECK(h16.order() == 16);
    for (int v = 0; v < 16; ++v) CHECK(h16.degree(v) == 4);
    auto arr = intersection_array_of(h16);
    REQUIRE(arr.ok());
    CHECK(arr.array->format() == "{4,3,2,1;1,2,3,4}");
    CHECK(arr.array->bipartite());
    CHECK(arr.array->antipodal_double_cover());

    // antipodal double cover: a unique vertex at distance 4, and the
    // antipode map is an involution
    std::vector<int> anti(16, -1);
    for (int x = 0; x < 16; ++x) {
        DistancePartition p = distance_partition(h16, x);
        REQUIRE(p.cells[4].size() == 1);
        anti[x] = p.cells[4][0];
    }
    for (int x = 0; x < 16; ++x) CHECK(anti[anti[x]] == x);

    ExplicitGraph h8 = hadamard_graph(HadamardMatrix::sylvester(2));
    auto arr8 = intersection_array_of(h8);
    REQUIRE(arr8.ok());
    CHECK(arr8.array->format() == "{2,1,1,1;1,1,1,2}");
}

TEST_CASE("non-Hadamard input is rejected citing the violated pair") {
    HadamardMatrix bad;
    bad.h = {{1, 1}, {1, 1}};
    CHECK_THROWS_WITH_AS(hadamard_graph(bad),
                         "not a Hadamard matrix: rows 0 and 1 have inner product 2",
                         std::invalid_argument);
}

TEST_CASE("hadamard matrix text parsing") {
    HadamardMatrix H = HadamardMatrix::parse("++\n+-\n");
    H.validate();
    CHECK(H.order() == 2);
    CHECK(H.h[1][1] == -1);
    CHECK_THROWS_AS(HadamardMatrix::parse("+x\n--\n"), std::invalid_argument);
}

TEST_CASE("hypercube antipodes") {
    HypercubeModel q6(6);
    BitVector u = BitVector::parse("110010");
    BitVector a = q6.antipode(u);
    CHECK((u ^ a).weight() == 6);  // distance = diameter
    CHECK(q6.antipode(a) == u);    // involution
}

TEST_CASE("disjoint unions") {
    ExplicitGraph two = disjoint_union(ExplicitGraph(1), ExplicitGraph(1));
    CHECK(two.order() == 2);
    CHECK(two.degree(0) == 0);

    ExplicitGraph q2 = ExplicitGraph::hypercube(2);
    ExplicitGraph dbl = disjoint_union(q2, q2);
    CHECK(dbl.order() == 8);
    for (int v = 0; v < 8; ++v) CHECK(dbl.degree(v) == 2);
    CHECK(dbl.adjacent(0, 1));
    CHECK(dbl.adjacent(4, 5));
    CHECK_FALSE(dbl.adjacent(0, 4));

    // 2 Q_5: each component has 32 vertices and diameter 5
    ExplicitGraph q5 = ExplicitGraph::hypercube(5);
    ExplicitGraph u2q5 = disjoint_union(q5, q5);
    CHECK(u2q5.order() == 64);
    for (int side = 0; side < 2; ++side) {
        int src = side * 32;
        std::vector<int> dist(64, -1);
        dist[src] = 0;
        std::vector<int> queue{src};
        int reached = 0, maxd = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            ++reached;
            maxd = std::max(maxd, dist[v]);
            for (int w : u2q5.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        CHECK(reached == 32);
        CHECK(maxd == 5);
    }
}

TEST_CASE("edge list round trip") {
    ExplicitGraph pet = ExplicitGraph::petersen();
    ExplicitGraph back = ExplicitGraph::parse_edge_list(pet.to_edge_list());
    REQUIRE(back.order() == pet.order());
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v) CHECK(back.adjacent(u, v) == pet.adjacent(u, v));

    CHECK_THROWS_AS(ExplicitGraph::parse_edge_list("3 2\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(ExplicitGraph::parse_edge_list("2 1\n0 5\n"), std::out_of_range);
    CHECK_THROWS_AS(ExplicitGraph::hypercube(9), std::invalid_argument);
}
