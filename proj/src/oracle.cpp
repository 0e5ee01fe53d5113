#include "magiclab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace magiclab {

namespace {

struct SearchState {
    int N;
    const std::vector<std::vector<int>>& nbhd;        // N_D(x)
    const std::vector<std::vector<int>>& containing;  // x with v in N_D(x)
    std::size_t cap;

    std::vector<long long> assigned;  // 0 = unlabeled
    std::vector<long long> partial;   // partial weight sums
    std::vector<int> remaining;       // unlabeled members of N_D(x)
    std::uint32_t used = 0;           // label bitmask, bit lab-1
    long long k = 0;
    bool k_known = false;

    std::uint64_t tried = 0;
    long long magic_count = 0;
    std::vector<Labeling> found;

    SearchState(int n, const std::vector<std::vector<int>>& nb,
                const std::vector<std::vector<int>>& ct, std::size_t cp)
        : N(n), nbhd(nb), containing(ct), cap(cp), assigned(n, 0), partial(n, 0) {
        remaining.resize(n);
        for (int x = 0; x < n; ++x) remaining[x] = (int)nbhd[x].size();
    }

    // Feasibility: every vertex with open slots must still be able to
    // reach k between its smallest and largest completions.
    bool feasible() const {
        if (!k_known) return true;
        for (int x = 0; x < N; ++x) {
            int r = remaining[x];
            if (r == 0) continue;
            long long lo = 0, hi = 0;
            int got = 0;
            for (int lab = 1; lab <= N && got < r; ++lab)
                if (!(used & (1u << (lab - 1)))) { lo += lab; ++got; }
            got = 0;
            for (int lab = N; lab >= 1 && got < r; --lab)
                if (!(used & (1u << (lab - 1)))) { hi += lab; ++got; }
            if (partial[x] + lo > k || partial[x] + hi < k) return false;
        }
        return true;
    }

    bool place(int v, long long lab, bool& set_k) {
        assigned[v] = lab;
        used |= 1u << (lab - 1);
        set_k = false;
        bool ok = true;
        for (int x : containing[v]) {
            partial[x] += lab;
            if (--remaining[x] == 0) {
                if (!k_known) {
                    k = partial[x];
                    k_known = true;
                    set_k = true;
                } else if (partial[x] != k) {
                    ok = false;
                }
            }
        }
        return ok;
    }

    void unplace(int v, long long lab, bool set_k) {
        for (int x : containing[v]) {
            partial[x] -= lab;
            ++remaining[x];
        }
        if (set_k) k_known = false;
        used &= ~(1u << (lab - 1));
        assigned[v] = 0;
    }

    void search(int v) {
        if (v == N) {
            ++tried;
            ++magic_count;
            if (found.size() < cap) found.push_back(Labeling::from_values(assigned));
            return;
        }
        for (long long lab = 1; lab <= N; ++lab) {
            if (used & (1u << (lab - 1))) continue;
            bool set_k = false;
            bool ok = place(v, lab, set_k);
            if (ok && feasible()) search(v + 1);
            unplace(v, lab, set_k);
        }
    }
};

}  // namespace

SearchReport brute_force_magic(const ExplicitGraph& g, const DistanceSet& D, std::size_t cap,
                               int threads) {
    if (g.order() > 10)
        throw std::invalid_argument("order " + std::to_string(g.order()) +
                                    " is too large for exhaustive search; use the spectral "
                                    "certifier instead");
    if (D.empty()) throw std::invalid_argument("distance set must be non-empty");
    int N = g.order();

    std::vector<std::vector<int>> nbhd(N), containing(N);
    int diameter = 0;
    for (int x = 0; x < N; ++x) {
        DistancePartition p = distance_partition(g, x);
        diameter = std::max(diameter, p.eccentricity());
        for (int i : D.elems())
            if (i <= p.eccentricity())
                for (int y : p.cells[i]) nbhd[x].push_back(y);
    }
    if (D.max() > diameter) throw std::invalid_argument("distance exceeds graph diameter");
    for (int x = 0; x < N; ++x)
        for (int y : nbhd[x]) containing[y].push_back(x);

    auto t0 = std::chrono::steady_clock::now();

    // Split the search on vertex 0's label; merging in label order keeps
    // the report independent of the thread count.
    std::vector<SearchState> states;
    states.reserve(N);
    for (int first = 1; first <= N; ++first) states.emplace_back(N, nbhd, containing, cap);

    auto run_one = [&](int idx) {
        SearchState& st = states[idx];
        long long lab = idx + 1;
        bool set_k = false;
        bool ok = st.place(0, lab, set_k);
        if (ok && st.feasible()) st.search(1);
        st.unplace(0, lab, set_k);
    };

    int workers = std::max(1, threads);
    if (workers == 1) {
        for (int i = 0; i < N; ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic_int next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < N; i = next.fetch_add(1)) run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    SearchReport rep;
    rep.graph_name = g.name();
    rep.D = D;
    rep.exhaustive = true;
    for (auto& st : states) {
        rep.tried += st.tried;
        rep.magic_count += st.magic_count;
        for (auto& l : st.found)
            if (rep.found.size() < cap) rep.found.push_back(l);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

// Tiny dense GF(2) helpers on rows packed into one word each (n <= 4).
bool tiny_nonsingular(std::uint32_t rows[], int n) {
    std::uint32_t w[4];
    for (int i = 0; i < n; ++i) w[i] = rows[i];
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = rank; i < n; ++i)
            if (w[i] & (1u << col)) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(w[rank], w[pivot]);
        for (int i = 0; i < n; ++i)
            if (i != rank && (w[i] & (1u << col))) w[i] ^= w[rank];
        ++rank;
    }
    return rank == n;
}

std::uint32_t tiny_apply(const std::uint32_t rows[], int n, std::uint32_t u) {
    std::uint32_t v = 0;
    for (int i = 0; i < n; ++i) v |= (std::uint32_t)(std::popcount(rows[i] & u) & 1) << i;
    return v;
}

// Is {f(u)} u {f(u + e_j)} (closed) or {f(u + e_j)} (open) balanced for
// every u? Direct coordinate counting over all 2^n inputs.
bool tiny_balanced(const std::uint32_t rows[], int n, bool closed) {
    std::uint32_t cols[4];
    for (int j = 0; j < n; ++j) {
        cols[j] = 0;
        for (int i = 0; i < n; ++i) cols[j] |= ((rows[i] >> j) & 1u) << i;
    }
    int size = closed ? n + 1 : n;
    if (size % 2 != 0) return false;
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
        std::uint32_t v = tiny_apply(rows, n, u);
        for (int coord = 0; coord < n; ++coord) {
            int cnt = 0;
            if (closed) cnt += (v >> coord) & 1;
            for (int j = 0; j < n; ++j) cnt += ((v ^ cols[j]) >> coord) & 1;
            if (2 * cnt != size) return false;
        }
    }
    return true;
}

std::string tiny_lines(const std::uint32_t rows[], int n) {
    std::string out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out += (rows[i] >> j) & 1 ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace

RowSumReport validate_row_sum_criteria(int n) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("row-sum criteria validation enumerates n in {2,3,4} only");
    RowSumReport rep;
    rep.n = n;
    std::uint64_t total = std::uint64_t(1) << (n * n);
    std::uint32_t rows[4];
    for (std::uint64_t code = 0; code < total; ++code) {
        for (int i = 0; i < n; ++i) rows[i] = (std::uint32_t)((code >> (i * n)) & ((1u << n) - 1));
        if (!tiny_nonsingular(rows, n)) continue;
        ++rep.nonsingular_total;

        bool closed_rs = (n + 1) % 2 == 0;
        bool open_rs = n % 2 == 0;
        for (int i = 0; i < n; ++i) {
            if (std::popcount(rows[i]) != (n + 1) / 2 || (n + 1) % 2 != 0) closed_rs = false;
            if (std::popcount(rows[i]) != n / 2 || n % 2 != 0) open_rs = false;
        }
        bool closed_bal = tiny_balanced(rows, n, true);
        bool open_bal = tiny_balanced(rows, n, false);

        rep.closed_balanced += closed_bal;
        rep.closed_row_sum += closed_rs;
        rep.open_balanced += open_bal;
        rep.open_row_sum += open_rs;
        if (closed_bal != closed_rs) {
            rep.closed_equivalence = false;
            if (rep.first_mismatch.empty()) rep.first_mismatch = tiny_lines(rows, n);
        }
        if (open_bal != open_rs) {
            rep.open_equivalence = false;
            if (rep.first_mismatch.empty()) rep.first_mismatch = tiny_lines(rows, n);
        }
    }
    return rep;
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(RationalMatrix& m) {
    int rows = (int)m.size();
    int cols = rows == 0 ? 0 : (int)m[0].size();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        Rational inv = Rational(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m) {
    int cols = (int)m[0].size();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> w(cols, Rational(0));
        w[f] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r) w[pivots[r]] = -m[r][f];
        basis.push_back(std::move(w));
    }
    return basis;
}

RationalMatrix distance_pair_matrix(int n, int a, int b) {
    int N = 1 << n;
    RationalMatrix m(N, std::vector<Rational>(N, Rational(0)));
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v) {
            int d = std::popcount((unsigned)(u ^ v));
            if (d == a || d == b) m[u][v] = Rational(1);
        }
    return m;
}

bool annihilates(const RationalMatrix& m, const std::vector<Rational>& w) {
    for (auto& row : m) {
        Rational acc(0);
        for (size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero() && !w[j].is_zero()) acc += row[j] * w[j];
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace

KernelInclusionReport explicit_kernel_inclusion(int n) {
    if (n % 4 != 1) throw std::invalid_argument("explicit kernel inclusion requires n = 1 (mod 4)");
    if (n > 8) throw std::invalid_argument("explicit distance matrices are limited to n <= 8");
    KernelInclusionReport rep;
    rep.n = n;

    RationalMatrix base = distance_pair_matrix(n, 0, 1);
    std::vector<std::vector<Rational>> basis = kernel_basis(base);
    rep.kernel_dim = (int)basis.size();

    auto check_pair = [&](int a, int b, const std::string& what) {
        RationalMatrix pm = distance_pair_matrix(n, a, b);
        KernelInclusionReport::Pair p;
        p.what = what;
        for (auto& w : basis)
            if (!annihilates(pm, w)) { p.included = false; break; }
        RationalMatrix copy = pm;
        int rank = (int)rref(copy).size();
        p.pair_kernel_dim = (1 << n) - rank;
        p.equality = p.included && p.pair_kernel_dim == rep.kernel_dim;
        if (!p.included) rep.all_included = false;
        rep.pairs.push_back(std::move(p));
    };

    for (int i = 0; 2 * i + 1 <= n; ++i)
        check_pair(2 * i, 2 * i + 1,
                   "A_" + std::to_string(2 * i) + "+A_" + std::to_string(2 * i + 1));
    for (int i = 0; i <= (n - 1) / 2; ++i)
        check_pair(i, n - i, "A_" + std::to_string(i) + "+A_" + std::to_string(n - i));
    return rep;
}

Chain146Report validate_146_chain(int n) {
    if (n % 4 != 1) throw std::invalid_argument("the balanced-set chain requires n = 1 (mod 4)");
    if (n > 9) throw std::invalid_argument("the balanced-set chain enumerates all of F_2^n; n <= 9");
    Chain146Report rep;
    rep.n = n;

    LinearBijection f = closed_magic_matrix(n);
    std::uint64_t N = std::uint64_t(1) << n;
    for (std::uint64_t x = 0; x < N; ++x) {
        BitVector u = BitVector::from_index(n, x);
        std::vector<BitVector> image;
        image.push_back(f.m.apply(u));
        for (int j = 0; j < n; ++j) image.push_back(f.m.apply(u ^ BitVector::unit(n, j)));
        if (!is_balanced(image)) {
            rep.all_balanced = false;
            break;
        }
        long long w0 = (long long)balanced_sum_check(image);
        if (x == 0)
            rep.zero_based_weight = w0;
        else if (rep.zero_based_weight != w0)
            throw std::logic_error("0-based closed weight is not constant across vertices");
    }
    rep.final_verdict = closed_magic_labeling(n).verdict;
    return rep;
}

}  // namespace magiclab
