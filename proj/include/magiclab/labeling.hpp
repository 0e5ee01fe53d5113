#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "magiclab/gf2.hpp"
#include "magiclab/graphs.hpp"
#include "magiclab/spectral.hpp"

namespace magiclab {

// Labelings, weights, magic/antimagic verdicts, sphere sums, balanced-set
// checks, the exact Walsh-Hadamard weight evaluator and magic-set
// enumeration.
//
// Labels are 1-based: a labeling of an order-N graph is a bijection onto
// {1, ..., N}. The zeta-composed labelings of the construct module are
// 0-based in the source material; the +1 shift changes every weight by the
// constant |N_D(x)| and no verdict.

class Labeling {
public:
    // Validates that values is a bijection onto {1, ..., N}.
    static Labeling from_values(std::vector<long long> values);
    // File format: line k (0-based vertex index) holds the label of vertex
    // k; blank lines and '#' comments are ignored. Errors carry 1-based
    // line numbers.
    static Labeling parse(const std::string& text);

    std::uint64_t order() const { return values_.size(); }
    long long label(std::uint64_t v) const { return values_[v]; }
    const std::vector<long long>& values() const { return values_; }

    std::string to_file_text() const;

private:
    std::vector<long long> values_;
};

// A subset of {0, ..., d}, kept sorted and duplicate-free.
class DistanceSet {
public:
    DistanceSet() = default;
    DistanceSet(std::initializer_list<int> xs) : DistanceSet(std::vector<int>(xs)) {}
    explicit DistanceSet(std::vector<int> elems);
    static DistanceSet full(int d);  // {0, ..., d}
    // Grammar: comma list with ranges, e.g. "0,2-3,5".
    static DistanceSet parse(const std::string& spec);
    static DistanceSet from_mask(std::uint64_t mask);

    const std::vector<int>& elems() const { return elems_; }
    bool empty() const { return elems_.empty(); }
    bool contains(int i) const;
    int max() const { return elems_.back(); }
    std::uint64_t mask() const;
    bool disjoint_with(const DistanceSet& o) const;
    DistanceSet unite(const DistanceSet& o) const;

    std::string str() const;  // "0,2,3,5"

    friend bool operator==(const DistanceSet& a, const DistanceSet& b) {
        return a.elems_ == b.elems_;
    }
    friend bool operator<(const DistanceSet& a, const DistanceSet& b);

private:
    std::vector<int> elems_;
};

// S_i(x) = sum of labels over G_i(x), for every vertex and distance.
struct SphereSums {
    // s[x][i]; rows sum to N(N+1)/2 and column 0 is the label vector.
    std::vector<std::vector<long long>> s;
};

enum class VerdictKind { Magic, ArithmeticAntimagic, Antimagic, Neither };

struct Verdict {
    VerdictKind kind = VerdictKind::Neither;
    long long k = 0;      // Magic
    long long alpha = 0;  // ArithmeticAntimagic
    long long delta = 0;
    // Weight multiset, kept for Neither verdicts and on request.
    std::optional<std::map<long long, long long>> weight_histogram;

    bool is_magic() const { return kind == VerdictKind::Magic; }
    std::string json() const;
};

// Classifies a weight vector: constant -> Magic(k); all distinct forming an
// arithmetic progression with delta > 0 -> ArithmeticAntimagic(alpha,
// delta); all distinct otherwise -> Antimagic; duplicates -> Neither.
Verdict classify_weights(const std::vector<long long>& weights, bool keep_histogram = false);

// --- single-vertex weights (naive evaluation paths) ---

long long weight(const Labeling& l, const ExplicitGraph& g, int x, const DistanceSet& D);
long long weight(const Labeling& l, const HypercubeModel& model, const BitVector& u,
                 const DistanceSet& D);

// --- transform evaluator ---

// In-place +-1 Walsh-Hadamard transform; size must be a power of two.
void fwht(std::vector<long long>& data);

// Weights of all 2^n vertices at once: transform the label vector, scale
// coordinate-class j by lambda_D(j) = sum_{i in D} K_i(j), transform back,
// divide by 2^n. All arithmetic exact with 128-bit intermediates; an
// inexact final division is a hard internal error.
std::vector<long long> weights_all_fast(const Labeling& l, const HypercubeModel& model,
                                        const DistanceSet& D);

// --- full-graph verdicts ---

Verdict verify(const Labeling& l, const ExplicitGraph& g, const DistanceSet& D,
               bool keep_histogram = false);
Verdict verify(const Labeling& l, const HypercubeModel& model, const DistanceSet& D,
               bool keep_histogram = false);
Verdict verify(const Labeling& l, const TwoCubes& model, const DistanceSet& D,
               bool keep_histogram = false);

SphereSums sphere_sums(const Labeling& l, const ExplicitGraph& g);
SphereSums sphere_sums(const Labeling& l, const HypercubeModel& model);

// The counting identity behind the kernel lemma, valid for an arbitrary
// labeling on a distance-regular graph:
//   sum_{y in G_i(x)} w_{1}(y) = b_{i-1} S_{i-1}(x) + a_i S_i(x) + c_{i+1} S_{i+1}(x).
struct KerB0Report {
    bool ok = true;
    std::string detail;  // first failing (x, i) when not ok
};

KerB0Report check_kerB0_identity(const Labeling& l, const ExplicitGraph& g,
                                 const IntersectionArray& arr, const SphereSums& sums);

// --- balanced sets ---

// True iff every coordinate equals 1 on exactly half of A.
bool is_balanced(const std::vector<BitVector>& A);

// The zeta-sum of a balanced set; asserts it equals |A|/2 * (2^n - 1).
std::uint64_t balanced_sum_check(const std::vector<BitVector>& A);

// --- magic-set enumeration ---

struct EnumerateOptions {
    bool confirm = true;        // audit the spectral screen with full evaluation
    int confirm_all_up_to = 9;  // below this n every reported set is re-evaluated
    int confirm_samples = 8;    // above, this many sets re-evaluated (seeded)
    std::uint64_t seed = 0;
};

// Decides, for every non-empty D in {0..n}, whether D is magic for l via
// the transform spectrum: D is magic iff lambda_D(j) = 0 for every
// distance class j >= 1 carrying a nonzero transform coefficient. The
// screen is exact; the audit recomputes full weight vectors and any
// disagreement is a hard failure.
std::vector<DistanceSet> enumerate_magic_sets(const Labeling& l, const HypercubeModel& model,
                                              const EnumerateOptions& opts = {});

}  // namespace magiclab
