#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magiclab/rational.hpp"
#include "magiclab/spectral.hpp"

namespace magiclab {

// Machine-checkable nonexistence certificates built from the necessary
// conditions: degree parity, diameter congruence for bipartite antipodal
// double covers, and exact kernel computations on the tridiagonal matrix.
//
// "No obstruction found" deliberately does not mean "a labeling exists";
// the conditions are necessary, not sufficient, except where the hypercube
// theorems close the loop.

struct FiredRule {
    // One of: odd-degree-parity, diameter-congruence, kernel-trivial,
    // kernel-sign, closed-parity.
    std::string rule;

    // Witness data; which fields are meaningful depends on the rule.
    long long degree = 0;
    long long order = 0;
    int diameter = 0;
    int shift = 0;                     // 0 for ker B, 1 for ker(I+B)
    std::vector<Rational> kernel;      // kernel-sign / closed-parity
    std::vector<long long> eigenvalues;  // kernel-trivial on hypercubes
    int p = 0;                         // closed-parity: n = 2p-1
};

struct Certificate {
    std::string claim;
    std::string mode;  // "distance-magic" or "closed-distance-magic"
    IntersectionArray array;
    std::vector<FiredRule> rules;  // first entry is the deciding rule

    std::string json() const;
    static Certificate parse(const std::string& text);
};

// Tries, in order: (a) odd degree parity, (b) bipartite antipodal double
// cover with d != 2 (mod 4), (c) kernel of B trivial or of the wrong sign
// (antipodal double covers only). Returns the first firing rule, or all of
// them with all_rules.
std::optional<Certificate> certify_not_distance_magic(const IntersectionArray& arr,
                                                      bool all_rules = false);

// Closed analog for arbitrary antipodal double cover arrays: kernel of
// I + B trivial or of the wrong sign.
std::optional<Certificate> certify_not_closed_magic_array(const IntersectionArray& arr,
                                                          bool all_rules = false);

// Closed analog specialized to Q_n, with the Krawtchouk parity witness:
// for even n, -1 is not an eigenvalue; for n = 2p-1 with p even, the
// kernel vector ends in K_n(p) = +1. No obstruction iff n = 1 (mod 4).
std::optional<Certificate> certify_not_closed_magic(int n, bool all_rules = false);

// Independently re-validates a certificate's witnesses: kernel vectors are
// re-substituted, parities re-derived, nothing re-searched. A tampered
// witness yields ok = false and a diff naming the first mismatch.
struct RecheckResult {
    bool ok = true;
    std::string diff;
};

RecheckResult recheck(const Certificate& cert);

}  // namespace magiclab
