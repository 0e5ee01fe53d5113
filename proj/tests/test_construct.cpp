#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "magiclab/construct.hpp"
#include "magiclab/oracle.hpp"

using namespace magiclab;

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long acc = 1;
    for (int t = 1; t <= k; ++t) acc = acc * (n - k + t) / t;
    return acc;
}

long long family_constant(int n, const DistanceSet& D) {
    long long spheres = 0;
    for (int i : D.elems()) spheres += binomial(n, i);
    return spheres * (((long long)1 << n) + 1) / 2;
}

}  // namespace

TEST_CASE("closed magic matrix: block form, row sums, nonsingularity") {
    LinearBijection f5 = closed_magic_matrix(5);
    CHECK(f5.m.to_lines() ==
          std::vector<std::string>({"10011", "01011", "00111", "01110", "01101"}));
    CHECK(f5.m.is_nonsingular());

    LinearBijection f9 = closed_magic_matrix(9);
    for (int s : f9.m.row_sums()) CHECK(s == 5);

    LinearBijection f1 = closed_magic_matrix(1);
    CHECK(f1.m.to_lines() == std::vector<std::string>({"1"}));

    CHECK_THROWS_AS(closed_magic_matrix(4), std::invalid_argument);
    CHECK_THROWS_AS(closed_magic_matrix(7), std::invalid_argument);
}

TEST_CASE("closed magic labelings hit the predicted constants") {
    CHECK(closed_magic_labeling(1).verdict.k == 3);
    CHECK(closed_magic_labeling(5).verdict.k == 99);
    CHECK(closed_magic_labeling(9).verdict.k == 2565);
    CHECK_THROWS_AS(closed_magic_labeling(6), std::invalid_argument);
}

TEST_CASE("open magic matrix search") {
    LinearBijection f2 = open_magic_matrix(2);
    CHECK(f2.m == BitMatrix::identity(2));

    LinearBijection f6 = open_magic_matrix(6);
    CHECK(f6.m == BitMatrix::circulant(BitVector::parse("110100")));

    LinearBijection f10 = open_magic_matrix(10);
    for (int s : f10.m.row_sums()) CHECK(s == 5);
    CHECK(f10.m.is_nonsingular());

    CHECK_THROWS_AS(open_magic_matrix(5), std::invalid_argument);
    CHECK_THROWS_AS(open_magic_matrix(8), std::invalid_argument);
}

TEST_CASE("distance magic labelings hit the predicted constants") {
    CHECK(distance_magic_labeling(2).verdict.k == 5);
    CHECK(distance_magic_labeling(6).verdict.k == 195);
    CHECK_THROWS_AS(distance_magic_labeling(4), std::invalid_argument);

    // n=2 cross-check on the explicit 4-cycle (Q_2 under cube indexing)
    ConstructResult res = distance_magic_labeling(2);
    Verdict v = verify(res.labeling, ExplicitGraph::hypercube(2), DistanceSet({1}));
    CHECK(v.is_magic());
    CHECK(v.k == 5);
}

TEST_CASE("antipode labels are complementary on constructed labelings") {
    for (int n : {5, 6, 9, 10}) {
        ConstructResult res = n % 4 == 1 ? closed_magic_labeling(n) : distance_magic_labeling(n);
        std::uint64_t N = std::uint64_t(1) << n;
        for (std::uint64_t x = 0; x < N; ++x)
            CHECK(res.labeling.label(x) + res.labeling.label(~x & (N - 1)) == (long long)N + 1);
    }
}

TEST_CASE("sphere sums pair up: S_j + S_{d-j} = (N+1) k_j on constructed labelings") {
    for (int n : {5, 6}) {
        ConstructResult res = n % 4 == 1 ? closed_magic_labeling(n) : distance_magic_labeling(n);
        HypercubeModel m(n);
        SphereSums s = sphere_sums(res.labeling, m);
        for (std::uint64_t x = 0; x < m.order; ++x)
            for (int j = 0; j <= n; ++j)
                CHECK(s.s[x][j] + s.s[x][n - j] == ((long long)m.order + 1) * binomial(n, j));
    }
}

TEST_CASE("admissible_D materializes the families and rejects clashes") {
    DFamilySpec base{DFamilySpec::Kind::OddPlusPairs, {1}, {}, {}, {}};
    CHECK(admissible_D(6, base) == DistanceSet({1}));

    DFamilySpec mix{DFamilySpec::Kind::OddPlusPairs, {3, 5}, {0}, {}, {}};
    CHECK(admissible_D(6, mix) == DistanceSet({0, 3, 5, 6}));

    DFamilySpec clash{DFamilySpec::Kind::OddPlusPairs, {3}, {3}, {}, {}};
    CHECK_THROWS_WITH_AS(admissible_D(6, clash),
                         "constraint violated: E meets the pair {3,3} for i=3",
                         std::invalid_argument);
    DFamilySpec evens{DFamilySpec::Kind::OddPlusPairs, {2}, {}, {}, {}};
    CHECK_THROWS_AS(admissible_D(6, evens), std::invalid_argument);
    CHECK_THROWS_AS(admissible_D(5, base), std::invalid_argument);  // wrong congruence

    DFamilySpec pp{DFamilySpec::Kind::PairsPlusPairs, {}, {}, {1}, {0}};
    CHECK(admissible_D(5, pp) == DistanceSet({0, 2, 3, 5}));
    DFamilySpec ppclash{DFamilySpec::Kind::PairsPlusPairs, {}, {}, {1}, {2}};
    CHECK_THROWS_AS(admissible_D(5, ppclash), std::invalid_argument);
    DFamilySpec empty{DFamilySpec::Kind::PairsPlusPairs, {}, {}, {}, {}};
    CHECK_THROWS_AS(admissible_D(5, empty), std::invalid_argument);
}

TEST_CASE("family sets verify magic with the sphere-size constant") {
    // n = 6: every well-formed (E, I) spec, exhaustively.
    ConstructResult q6 = distance_magic_labeling(6);
    std::vector<DistanceSet> fam6 = generate_family_sets(6);
    CHECK(std::find(fam6.begin(), fam6.end(), DistanceSet({1})) != fam6.end());
    CHECK(std::find(fam6.begin(), fam6.end(), DistanceSet::full(6)) != fam6.end());
    HypercubeModel m6(6);
    for (auto& D : fam6) {
        Verdict v = verify(q6.labeling, m6, D);
        CHECK(v.is_magic());
        CHECK(v.k == family_constant(6, D));
    }

    // n = 5: every well-formed (I_1, I_2) spec.
    ConstructResult q5 = closed_magic_labeling(5);
    std::vector<DistanceSet> fam5 = generate_family_sets(5);
    CHECK(fam5.size() == 11);  // distinct D sets over the 20 non-empty well-formed pairs
    HypercubeModel m5(5);
    for (auto& D : fam5) {
        Verdict v = verify(q5.labeling, m5, D);
        CHECK(v.is_magic());
        CHECK(v.k == family_constant(5, D));
    }

    // spot values from the two families
    CHECK(verify(q6.labeling, m6, admissible_D(6, {DFamilySpec::Kind::OddPlusPairs, {3, 5}, {0}, {}, {}}))
              .k == 910);
    CHECK(verify(q5.labeling, m5, admissible_D(5, {DFamilySpec::Kind::PairsPlusPairs, {}, {}, {1}, {0}}))
              .k == 363);
}

TEST_CASE("family sets verify magic at the larger base dimensions") {
    ConstructResult q9 = closed_magic_labeling(9);
    HypercubeModel m9(9);
    std::vector<DistanceSet> fam9 = generate_family_sets(9);
    CHECK(fam9.size() > 20);
    for (auto& D : fam9) {
        Verdict v = verify(q9.labeling, m9, D);
        CHECK(v.is_magic());
        CHECK(v.k == family_constant(9, D));
    }

    ConstructResult q10 = distance_magic_labeling(10);
    HypercubeModel m10(10);
    std::vector<DistanceSet> fam10 = generate_family_sets(10);
    CHECK(fam10.size() > 30);
    for (auto& D : fam10) {
        Verdict v = verify(q10.labeling, m10, D);
        CHECK(v.is_magic());
        CHECK(v.k == family_constant(10, D));
    }
}

TEST_CASE("theorem-family magic sets on Q_9") {
    ConstructResult q9 = closed_magic_labeling(9);
    HypercubeModel m(9);
    CHECK(verify(q9.labeling, m, DistanceSet({2, 3})).k == 30780);
    CHECK(verify(q9.labeling, m, DistanceSet({0, 9})).k == 513);
    CHECK(verify(q9.labeling, m, DistanceSet({0, 4, 5, 9})).k == 65151);
}

TEST_CASE("odd singleton sets are magic on the n = 2 (mod 4) labelings") {
    for (int n : {6, 10}) {
        ConstructResult res = distance_magic_labeling(n);
        HypercubeModel m(n);
        for (int j = 1; j <= n; j += 2) {
            Verdict v = verify(res.labeling, m, DistanceSet({j}));
            CHECK(v.is_magic());
            CHECK(v.k == family_constant(n, DistanceSet({j})));
        }
    }
}

TEST_CASE("{j, n-j} sets are magic on both congruence classes") {
    for (int n : {5, 6, 9, 10}) {
        ConstructResult res = n % 4 == 1 ? closed_magic_labeling(n) : distance_magic_labeling(n);
        HypercubeModel m(n);
        for (int j = 0; j <= n; ++j) {
            DistanceSet D({j, n - j});
            Verdict v = verify(res.labeling, m, D);
            CHECK(v.is_magic());
            CHECK(v.k == family_constant(n, D));
        }
    }
}

TEST_CASE("splits to 2Q_{n-1}") {
    SplitResult s6 = split_to_2Q(6);
    CHECK(s6.family == "open");
    CHECK(s6.half_dim == 5);
    CHECK(s6.verdict.kind == VerdictKind::ArithmeticAntimagic);
    CHECK(s6.verdict.alpha == 131);
    CHECK(s6.verdict.delta == 1);

    // weights are exactly {131, ..., 194}
    Verdict detailed = verify(s6.labeling, TwoCubes(5), s6.D, true);
    REQUIRE(detailed.weight_histogram.has_value());
    CHECK(detailed.weight_histogram->size() == 64);
    CHECK(detailed.weight_histogram->begin()->first == 131);
    CHECK(detailed.weight_histogram->rbegin()->first == 194);
    for (auto& [w, c] : *detailed.weight_histogram) CHECK(c == 1);

    SplitResult s5 = split_to_2Q(5);
    CHECK(s5.family == "closed");
    CHECK(s5.verdict.alpha == 67);
    Verdict d5 = verify(s5.labeling, TwoCubes(4), s5.D, true);
    REQUIRE(d5.weight_histogram.has_value());
    CHECK(d5.weight_histogram->begin()->first == 67);
    CHECK(d5.weight_histogram->rbegin()->first == 98);

    CHECK_THROWS_AS(split_to_2Q(4), std::invalid_argument);
    CHECK_THROWS_AS(split_to_2Q(7), std::invalid_argument);
}

TEST_CASE("randomized matrix search is reproducible by seed") {
    // Force the randomized phase by asking for a seed-dependent matrix on a
    // dimension where circulants exist anyway; instead exercise the phase
    // directly through a deterministic comparison of two runs.
    LinearBijection a = open_magic_matrix(6, 123);
    LinearBijection b = open_magic_matrix(6, 123);
    CHECK(a.m == b.m);
}

TEST_CASE("open-neighbor row-sum criterion is backed by the exhaustive oracle") {
    for (int n : {2, 4}) {
        RowSumReport rep = validate_row_sum_criteria(n);
        CHECK(rep.open_equivalence);
        CHECK(rep.closed_equivalence);
    }
}
