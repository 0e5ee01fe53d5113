#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "magiclab/gf2.hpp"
#include "magiclab/labeling.hpp"

namespace magiclab {

// Constructors realizing the existence results: closed distance magic
// labelings for n = 1 (mod 4), distance magic labelings for n = 2 (mod 4),
// the composite distance families, and the antimagic reinterpretation on
// the union of two subcubes.
//
// Every constructor verifies its own output before returning and throws
// if the predicted verdict is not reproduced.

struct LinearBijection {
    BitMatrix m;
    BitMatrix inverse;

    explicit LinearBijection(BitMatrix mat);

    BitVector operator()(const BitVector& u) const { return m.apply(u); }
};

struct SearchExhausted : std::runtime_error {
    std::uint64_t seed;
    SearchExhausted(std::uint64_t s, const std::string& what) : std::runtime_error(what), seed(s) {}
};

// The block matrix [[1, 0, 1],[0, I, J],[0, J, I]] with 2m-sized blocks,
// n = 4m+1; nonsingular with constant row sum (n+1)/2, which is exactly
// the closed-neighbor-balance criterion.
LinearBijection closed_magic_matrix(int n);

// A nonsingular matrix with every row sum n/2 for n = 2 (mod 4): first a
// deterministic circulant search (first rows of weight n/2 in lexicographic
// position order, accepted when the row polynomial is coprime to x^n + 1),
// then a seeded randomized search. The open-neighbor row-sum criterion is
// validated exhaustively at tiny n by the oracle module; every produced
// labeling is audited by the verifier regardless.
LinearBijection open_magic_matrix(int n, std::uint64_t seed = 0,
                                  std::uint64_t budget = 1000000);

struct ConstructResult {
    int n = 0;
    std::string family;  // "closed" or "open"
    BitMatrix matrix;
    Labeling labeling;
    DistanceSet magic_D;
    Verdict verdict;
};

// label(u) = zeta(M u) + 1, verified Magic((n+1)(2^n+1)/2) with D = {0,1}.
ConstructResult closed_magic_labeling(int n);

// label(u) = zeta(M u) + 1, verified Magic(n(2^n+1)/2) with D = {1}.
ConstructResult distance_magic_labeling(int n, std::uint64_t seed = 0,
                                        std::uint64_t budget = 1000000);

// The two composite distance-set families.
struct DFamilySpec {
    enum class Kind {
        OddPlusPairs,    // n = 2 (mod 4): E u union over I of {i, n-i}
        PairsPlusPairs,  // n = 1 (mod 4): union over I_1 of {2i,2i+1} u over I_2 of {j, n-j}
    };
    Kind kind;
    std::set<int> E, I;     // OddPlusPairs
    std::set<int> I1, I2;   // PairsPlusPairs
};

// Materializes D after checking the congruence class, the index ranges and
// the disjointness constraints; violations name the clashing indices.
DistanceSet admissible_D(int n, const DFamilySpec& spec);

// All distinct non-empty D sets produced by the family that applies to
// n's congruence class (used to cross-check enumerated magic sets).
std::vector<DistanceSet> generate_family_sets(int n);

struct SplitResult {
    int half_dim = 0;       // the union is 2 Q_{half_dim}
    std::string family;     // "open" (D={1}) or "closed" (D={0,1})
    BitMatrix matrix;       // the base Q_n construction matrix
    Labeling labeling;      // on 2 Q_{half_dim}, second copy offset by 2^half_dim
    DistanceSet D;
    long long predicted_alpha = 0;  // delta is 1 in both cases
    Verdict verdict;
};

// Reinterprets the Q_n labeling on the disjoint union of the two subcubes
// obtained by fixing coordinate n-1; verified against the predicted
// arithmetic progression before returning.
SplitResult split_to_2Q(int n, std::uint64_t seed = 0);

}  // namespace magiclab
