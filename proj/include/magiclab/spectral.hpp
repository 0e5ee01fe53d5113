#pragma once

#include <string>
#include <vector>

#include "magiclab/rational.hpp"

namespace magiclab {

// Intersection arrays of distance-regular graphs, the associated
// tridiagonal matrix B, exact kernel computations, Krawtchouk tables
// and distance polynomials. Everything here is exact integer or
// rational arithmetic; there is no floating point in this module.

// The sequence {r, b_1, ..., b_{d-1}; 1, c_2, ..., c_d} together with the
// derived intersection numbers a_i = r - b_i - c_i and sphere sizes k_i.
class IntersectionArray {
public:
    // b holds b_0..b_{d-1}, c holds c_1..c_d. Validates c_1 = 1, positivity,
    // a_i >= 0 and exact divisibility of every k_i on construction.
    IntersectionArray(std::vector<long long> b, std::vector<long long> c);

    static IntersectionArray hypercube(int n);
    // Parses the literature notation "{4,3,2,1;1,2,3,4}" (braces optional).
    static IntersectionArray parse(const std::string& s);

    int diameter() const { return d_; }
    long long degree() const { return b_[0]; }
    long long bi(int i) const { return i < d_ ? b_[i] : 0; }   // b_d = 0
    long long ci(int i) const { return i > 0 ? c_[i - 1] : 0; }  // c_0 = 0
    long long ai(int i) const { return degree() - bi(i) - ci(i); }

    // k_0 = 1, k_{i+1} = k_i b_i / c_{i+1}; all exact integers.
    const std::vector<long long>& sphere_sizes() const { return k_; }
    long long order() const;  // sum of the k_i

    bool bipartite() const;               // all a_i = 0
    bool antipodal_double_cover() const;  // k_d = 1

    std::string format() const;  // "{4,3,2,1;1,2,3,4}"

    friend bool operator==(const IntersectionArray& a, const IntersectionArray& b) {
        return a.b_ == b.b_ && a.c_ == b.c_;
    }

private:
    int d_;
    std::vector<long long> b_, c_, k_;
};

// The (d+1)x(d+1) tridiagonal matrix with subdiagonal (b_{i-1}),
// diagonal (a_i) and superdiagonal (c_{i+1}); its eigenvalues are the
// distinct eigenvalues of any graph realizing the array.
struct TridiagonalB {
    int size = 0;                 // d + 1
    std::vector<long long> sub;   // sub[i]  = B[i+1][i]   = b_i,     i = 0..d-1
    std::vector<long long> diag;  // diag[i] = B[i][i]     = a_i,     i = 0..d
    std::vector<long long> sup;   // sup[i]  = B[i][i+1]   = c_{i+1}, i = 0..d-1

    std::vector<std::vector<long long>> dense() const;
};

TridiagonalB build_B(const IntersectionArray& arr);

// det(B - theta*I), exact, via the tridiagonal three-term recurrence.
// Throws std::overflow_error if the value leaves 128-bit range.
__int128 char_poly_at(const TridiagonalB& B, long long theta);

// Kernel of B (shift = 0) or of I + B (shift = 1). The kernel is at most
// one-dimensional because every c_i is positive; when nontrivial it is
// returned normalized to u_0 = 1.
struct KernelVector {
    bool trivial = true;
    std::vector<Rational> u;  // empty when trivial
};

KernelVector kernel_of(const TridiagonalB& B, int shift);

// Exact integer table of Krawtchouk values K_i(j) for one dimension n,
// built by the three-term recurrence from K_0(j) = 1, K_1(j) = n - 2j and
// cross-validated against the closed-form binomial sum; a mismatch or an
// inexact division aborts with a diagnostic.
class KrawtchoukTable {
public:
    static KrawtchoukTable build(int n);

    int n() const { return n_; }
    long long at(int i, int j) const { return k_[i][j]; }
    long long eigenvalue(int j) const { return n_ - 2 * (long long)j; }  // theta_j

    // lambda_D(j) = sum over i in D of K_i(j).
    long long lambda(const std::vector<int>& D, int j) const;

private:
    int n_ = 0;
    std::vector<std::vector<long long>> k_;
};

// Rational coefficient lists of the distance polynomials v_0..v_d of an
// intersection array; v_i(A_1) = A_i on any graph realizing the array.
struct DistancePolynomials {
    // coeffs[i][e] is the coefficient of x^e in v_i.
    std::vector<std::vector<Rational>> coeffs;

    Rational eval(int i, long long x) const;
};

DistancePolynomials distance_polynomials(const IntersectionArray& arr);

// For n = 1 (mod 4) and p = (n+1)/2, evaluates the Krawtchouk pair sums
// K_{2i}(p) + K_{2i+1}(p) and K_i(p) + K_{n-i}(p); all are expected to
// vanish, which is what makes the closed magic labeling also magic for
// the composite distance families.
struct KernelInclusionSums {
    int n = 0;
    int p = 0;
    struct Entry {
        std::string what;
        long long value;
    };
    std::vector<Entry> sums;
    bool all_zero = true;
};

KernelInclusionSums kernel_inclusion_sums(int n);

}  // namespace magiclab
