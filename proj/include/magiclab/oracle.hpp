#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "magiclab/construct.hpp"
#include "magiclab/graphs.hpp"
#include "magiclab/labeling.hpp"

namespace magiclab {

// Brute-force ground truth at tiny scale: exhaustive labeling search,
// exhaustive validation of the row-sum criteria, and explicit-matrix
// kernel checks backing the derived results.

struct SearchReport {
    std::string graph_name;
    DistanceSet D;
    std::uint64_t tried = 0;        // completed labelings examined
    long long magic_count = 0;      // D-magic labelings found
    std::vector<Labeling> found;    // up to the cap
    bool exhaustive = false;
    double seconds = 0.0;
};

// Backtracking over partial labelings with weight-feasibility pruning;
// finds every D-magic labeling (stores up to cap). Exhaustive mode is
// limited to 10 vertices; larger orders raise an error advising the
// spectral certifier. Worker threads split the search on the first
// vertex's label; the merged report does not depend on the thread count.
SearchReport brute_force_magic(const ExplicitGraph& g, const DistanceSet& D,
                               std::size_t cap = 16, int threads = 1);

// Exhaustively enumerates the nonsingular matrices over GF(2) for n <= 4
// and confirms that closed (resp. open) neighbor-balance of the induced
// linear map is equivalent to constant row sum (n+1)/2 (resp. n/2).
struct RowSumReport {
    int n = 0;
    long long nonsingular_total = 0;
    long long closed_balanced = 0, closed_row_sum = 0;
    long long open_balanced = 0, open_row_sum = 0;
    bool closed_equivalence = true;
    bool open_equivalence = true;
    std::string first_mismatch;  // matrix lines, when a criterion disagrees
};

RowSumReport validate_row_sum_criteria(int n);

// Builds the 2^n x 2^n distance matrices explicitly, computes an exact
// rational basis of ker(A_0 + A_1) and verifies its inclusion in each
// ker(A_{2i} + A_{2i+1}) and ker(A_i + A_{n-i}); also reports whether the
// inclusions are equalities. Requires n = 1 (mod 4), n <= 8.
struct KernelInclusionReport {
    int n = 0;
    int kernel_dim = 0;
    struct Pair {
        std::string what;
        bool included = true;
        bool equality = true;
        int pair_kernel_dim = 0;
    };
    std::vector<Pair> pairs;
    bool all_included = true;
};

KernelInclusionReport explicit_kernel_inclusion(int n = 5);

// Exercises each link of the balanced-set chain separately on the
// constructed closed-magic map: f(N[u]) balanced for every u, the 0-based
// weight equals (n+1)/2 (2^n - 1), and the shifted labeling verifies
// Magic((n+1)(2^n+1)/2). Requires n = 1 (mod 4), n <= 9.
struct Chain146Report {
    int n = 0;
    bool all_balanced = true;
    long long zero_based_weight = 0;
    Verdict final_verdict;
};

Chain146Report validate_146_chain(int n = 5);

}  // namespace magiclab
