#include "magiclab/construct.hpp"

#include <bit>
#include <numeric>
#include <random>

namespace magiclab {

LinearBijection::LinearBijection(BitMatrix mat) : m(std::move(mat)), inverse(1) {
    auto inv = m.inverse();
    if (!inv) throw std::invalid_argument("linear bijection requires a nonsingular matrix");
    inverse = std::move(*inv);
}

LinearBijection closed_magic_matrix(int n) {
    if (n < 1 || n % 4 != 1)
        throw std::invalid_argument("closed magic matrix requires n = 1 (mod 4)");
    int m = (n - 1) / 4;  // m = 0 degenerates to the 1x1 identity
    int blk = 2 * m;
    BitMatrix M(n);
    // [[1, 0, 1_{2m}], [0, I_{2m}, J_{2m}], [0, J_{2m}, I_{2m}]]
    M.set(0, 0, true);
    for (int j = 0; j < blk; ++j) M.set(0, 1 + blk + j, true);
    for (int i = 0; i < blk; ++i) {
        M.set(1 + i, 1 + i, true);
        for (int j = 0; j < blk; ++j) M.set(1 + i, 1 + blk + j, true);
    }
    for (int i = 0; i < blk; ++i) {
        for (int j = 0; j < blk; ++j) M.set(1 + blk + i, 1 + j, true);
        M.set(1 + blk + i, 1 + blk + i, true);
    }
    for (int s : M.row_sums())
        if (s != (n + 1) / 2) throw std::logic_error("closed magic matrix row sum is off");
    return LinearBijection(std::move(M));  // ctor asserts nonsingularity
}

namespace {

// Polynomials over GF(2) as bitmasks, coefficient of x^i in bit i.
int poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    int db = poly_degree(b);
    while (a != 0) {
        int da = poly_degree(a);
        if (da < db) break;
        a ^= b << (da - db);
    }
    return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = poly_mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

// Weight-w subsets of {0..n-1} in lexicographic order of position sets.
bool next_combination(std::vector<int>& pos, int n) {
    int w = (int)pos.size();
    int k = w - 1;
    while (k >= 0 && pos[k] == n - w + k) --k;
    if (k < 0) return false;
    ++pos[k];
    for (int t = k + 1; t < w; ++t) pos[t] = pos[t - 1] + 1;
    return true;
}

BitVector row_from_positions(int n, const std::vector<int>& pos) {
    BitVector r(n);
    for (int p : pos) r.set(p, true);
    return r;
}

}  // namespace

LinearBijection open_magic_matrix(int n, std::uint64_t seed, std::uint64_t budget) {
    if (n % 4 != 2) throw std::invalid_argument("open magic matrix requires n = 2 (mod 4)");
    int w = n / 2;

    // Phase 1: circulants. Nonsingular iff the first-row polynomial is
    // coprime to x^n + 1 in GF(2)[x].
    std::uint64_t modulus = (std::uint64_t(1) << n) | 1;
    std::vector<int> pos(w);
    std::iota(pos.begin(), pos.end(), 0);
    do {
        std::uint64_t poly = 0;
        for (int p : pos) poly |= std::uint64_t(1) << p;
        if (poly_gcd(modulus, poly) == 1) {
            BitMatrix M = BitMatrix::circulant(row_from_positions(n, pos));
            if (!M.is_nonsingular())
                throw std::logic_error("circulant coprimality and elimination disagree");
            return LinearBijection(std::move(M));
        }
    } while (next_combination(pos, n));

    // Phase 2: seeded randomized search with rejection; fully reproducible
    // and deterministic given the seed.
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n);
    for (std::uint64_t tried = 0; tried < budget; ++tried) {
        std::vector<BitVector> rows;
        rows.reserve(n);
        for (int i = 0; i < n; ++i) {
            std::iota(perm.begin(), perm.end(), 0);
            for (int k = 0; k < w; ++k) {
                int j = k + (int)(rng() % (std::uint64_t)(n - k));
                std::swap(perm[k], perm[j]);
            }
            BitVector r(n);
            for (int k = 0; k < w; ++k) r.set(perm[k], true);
            rows.push_back(std::move(r));
        }
        BitMatrix M = BitMatrix::from_rows(std::move(rows));
        if (M.is_nonsingular()) return LinearBijection(std::move(M));
    }
    throw SearchExhausted(seed, "no nonsingular matrix with row sums " + std::to_string(w) +
                                    " found within " + std::to_string(budget) +
                                    " candidates (seed " + std::to_string(seed) + ")");
}

namespace {

Labeling zeta_labeling(const BitMatrix& M, int n) {
    std::uint64_t N = std::uint64_t(1) << n;
    std::vector<long long> values(N);
    for (std::uint64_t x = 0; x < N; ++x) {
        BitVector u = BitVector::from_index(n, x);
        values[x] = (long long)zeta(M.apply(u)) + 1;
    }
    return Labeling::from_values(std::move(values));
}

}  // namespace

ConstructResult closed_magic_labeling(int n) {
    LinearBijection f = closed_magic_matrix(n);
    ConstructResult res{n, "closed", f.m, zeta_labeling(f.m, n), DistanceSet({0, 1}), {}};
    res.verdict = verify(res.labeling, HypercubeModel(n), res.magic_D);
    long long expect = (long long)(n + 1) * (((long long)1 << n) + 1) / 2;
    if (!res.verdict.is_magic() || res.verdict.k != expect)
        throw std::logic_error("closed magic construction failed verification for n=" +
                               std::to_string(n));
    return res;
}

ConstructResult distance_magic_labeling(int n, std::uint64_t seed, std::uint64_t budget) {
    LinearBijection f = open_magic_matrix(n, seed, budget);
    ConstructResult res{n, "open", f.m, zeta_labeling(f.m, n), DistanceSet({1}), {}};
    res.verdict = verify(res.labeling, HypercubeModel(n), res.magic_D);
    long long expect = (long long)n * (((long long)1 << n) + 1) / 2;
    if (!res.verdict.is_magic() || res.verdict.k != expect)
        throw std::logic_error("distance magic construction failed verification for n=" +
                               std::to_string(n));
    return res;
}

DistanceSet admissible_D(int n, const DFamilySpec& spec) {
    std::vector<int> elems;
    if (spec.kind == DFamilySpec::Kind::OddPlusPairs) {
        if (n % 4 != 2) throw std::invalid_argument("family E u {i,n-i} requires n = 2 (mod 4)");
        if (spec.E.empty()) throw std::invalid_argument("E must be a non-empty set of odd distances");
        for (int e : spec.E) {
            if (e < 1 || e > n - 1 || e % 2 == 0)
                throw std::invalid_argument("E element " + std::to_string(e) +
                                            " is not an odd distance in {1,...," + std::to_string(n - 1) + "}");
            elems.push_back(e);
        }
        for (int i : spec.I) {
            if (i < 0 || i > n / 2)
                throw std::invalid_argument("I element " + std::to_string(i) + " outside {0,...," +
                                            std::to_string(n / 2) + "}");
            if (spec.E.count(i) || spec.E.count(n - i))
                throw std::invalid_argument("constraint violated: E meets the pair {" +
                                            std::to_string(i) + "," + std::to_string(n - i) +
                                            "} for i=" + std::to_string(i));
            elems.push_back(i);
            elems.push_back(n - i);
        }
    } else {
        if (n % 4 != 1) throw std::invalid_argument("family {2i,2i+1} u {j,n-j} requires n = 1 (mod 4)");
        int hi = (n - 1) / 2;
        for (int i : spec.I1)
            if (i < 0 || i > hi)
                throw std::invalid_argument("I1 element " + std::to_string(i) + " outside {0,...," +
                                            std::to_string(hi) + "}");
        for (int j : spec.I2)
            if (j < 0 || j > hi)
                throw std::invalid_argument("I2 element " + std::to_string(j) + " outside {0,...," +
                                            std::to_string(hi) + "}");
        for (int i : spec.I1)
            for (int j : spec.I2) {
                bool clash = (2 * i == j || 2 * i == n - j || 2 * i + 1 == j || 2 * i + 1 == n - j);
                if (clash)
                    throw std::invalid_argument("constraint violated: {" + std::to_string(2 * i) + "," +
                                                std::to_string(2 * i + 1) + "} meets {" +
                                                std::to_string(j) + "," + std::to_string(n - j) +
                                                "} for i=" + std::to_string(i) + ", j=" +
                                                std::to_string(j));
            }
        for (int i : spec.I1) {
            elems.push_back(2 * i);
            elems.push_back(2 * i + 1);
        }
        for (int j : spec.I2) {
            elems.push_back(j);
            elems.push_back(n - j);
        }
    }
    if (elems.empty()) throw std::invalid_argument("the spec produces an empty distance set");
    return DistanceSet(std::move(elems));
}

std::vector<DistanceSet> generate_family_sets(int n) {
    std::set<DistanceSet> acc;
    if (n % 4 == 2) {
        std::vector<int> odds;
        for (int e = 1; e < n; e += 2) odds.push_back(e);
        int half = n / 2;
        for (std::uint32_t em = 1; em < (1u << odds.size()); ++em) {
            DFamilySpec spec{DFamilySpec::Kind::OddPlusPairs, {}, {}, {}, {}};
            for (size_t t = 0; t < odds.size(); ++t)
                if (em & (1u << t)) spec.E.insert(odds[t]);
            for (std::uint32_t im = 0; im < (1u << (half + 1)); ++im) {
                spec.I.clear();
                for (int t = 0; t <= half; ++t)
                    if (im & (1u << t)) spec.I.insert(t);
                try {
                    acc.insert(admissible_D(n, spec));
                } catch (const std::invalid_argument&) {
                    // ill-formed combination; skip
                }
            }
        }
    } else if (n % 4 == 1) {
        int hi = (n - 1) / 2;
        for (std::uint32_t m1 = 0; m1 < (1u << (hi + 1)); ++m1)
            for (std::uint32_t m2 = 0; m2 < (1u << (hi + 1)); ++m2) {
                if (m1 == 0 && m2 == 0) continue;
                DFamilySpec spec{DFamilySpec::Kind::PairsPlusPairs, {}, {}, {}, {}};
                for (int t = 0; t <= hi; ++t) {
                    if (m1 & (1u << t)) spec.I1.insert(t);
                    if (m2 & (1u << t)) spec.I2.insert(t);
                }
                try {
                    acc.insert(admissible_D(n, spec));
                } catch (const std::invalid_argument&) {
                }
            }
    }
    return std::vector<DistanceSet>(acc.begin(), acc.end());
}

SplitResult split_to_2Q(int n, std::uint64_t seed) {
    SplitResult res;
    long long k;
    if (n % 4 == 2) {
        ConstructResult base = distance_magic_labeling(n, seed);
        k = base.verdict.k;
        res.family = "open";
        res.matrix = std::move(base.matrix);
        res.labeling = std::move(base.labeling);
        res.D = DistanceSet({1});
    } else if (n % 4 == 1) {
        ConstructResult base = closed_magic_labeling(n);
        k = base.verdict.k;
        res.family = "closed";
        res.matrix = std::move(base.matrix);
        res.labeling = std::move(base.labeling);
        res.D = DistanceSet({0, 1});
    } else {
        throw std::invalid_argument("split requires n = 1 or 2 (mod 4)");
    }
    res.half_dim = n - 1;
    res.predicted_alpha = k - ((long long)1 << n);
    res.verdict = verify(res.labeling, TwoCubes(n - 1), res.D);
    if (res.verdict.kind != VerdictKind::ArithmeticAntimagic ||
        res.verdict.alpha != res.predicted_alpha || res.verdict.delta != 1)
        throw std::logic_error("2Q split verdict does not match the predicted progression");
    return res;
}

}  // namespace magiclab
