#include "magiclab/spectral.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace magiclab {

IntersectionArray::IntersectionArray(std::vector<long long> b, std::vector<long long> c)
    : d_((int)b.size()), b_(std::move(b)), c_(std::move(c)) {
    if (d_ < 1) throw std::invalid_argument("intersection array needs diameter >= 1");
    if ((int)c_.size() != d_)
        throw std::invalid_argument("intersection array: b and c sequences must have equal length");
    if (c_[0] != 1) throw std::invalid_argument("intersection array requires c_1 = 1");
    for (int i = 0; i < d_; ++i) {
        if (b_[i] <= 0) throw std::invalid_argument("intersection array requires b_i > 0 for i < d");
        if (c_[i] <= 0) throw std::invalid_argument("intersection array requires c_i > 0");
    }
    for (int i = 0; i <= d_; ++i)
        if (ai(i) < 0) throw std::invalid_argument("intersection array has a_i < 0");
    k_.assign(d_ + 1, 1);
    for (int i = 0; i < d_; ++i) {
        long long num = k_[i] * b_[i];
        if (num % c_[i] != 0)
            throw std::invalid_argument("intersection array: sphere size k_" + std::to_string(i + 1) +
                                        " is not an integer");
        k_[i + 1] = num / c_[i];
    }
}

IntersectionArray IntersectionArray::hypercube(int n) {
    if (n < 1) throw std::invalid_argument("hypercube dimension must be positive");
    std::vector<long long> b(n), c(n);
    for (int i = 0; i < n; ++i) {
        b[i] = n - i;
        c[i] = i + 1;
    }
    return IntersectionArray(std::move(b), std::move(c));
}

IntersectionArray IntersectionArray::parse(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!isspace((unsigned char)ch) && ch != '{' && ch != '}') t += ch;
    auto semi = t.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("intersection array must contain ';' between b and c parts");
    auto split = [](const std::string& part) {
        std::vector<long long> out;
        std::stringstream ss(part);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::invalid_argument("empty entry in intersection array");
            size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("bad entry in intersection array: " + item);
            out.push_back(v);
        }
        return out;
    };
    return IntersectionArray(split(t.substr(0, semi)), split(t.substr(semi + 1)));
}

long long IntersectionArray::order() const {
    long long n = 0;
    for (auto k : k_) n += k;
    return n;
}

bool IntersectionArray::bipartite() const {
    for (int i = 0; i <= d_; ++i)
        if (ai(i) != 0) return false;
    return true;
}

bool IntersectionArray::antipodal_double_cover() const { return k_[d_] == 1; }

std::string IntersectionArray::format() const {
    std::string s = "{";
    for (int i = 0; i < d_; ++i) s += (i ? "," : "") + std::to_string(b_[i]);
    s += ";";
    for (int i = 0; i < d_; ++i) s += (i ? "," : "") + std::to_string(c_[i]);
    return s + "}";
}

std::vector<std::vector<long long>> TridiagonalB::dense() const {
    std::vector<std::vector<long long>> m(size, std::vector<long long>(size, 0));
    for (int i = 0; i < size; ++i) {
        m[i][i] = diag[i];
        if (i + 1 < size) {
            m[i][i + 1] = sup[i];
            m[i + 1][i] = sub[i];
        }
    }
    return m;
}

TridiagonalB build_B(const IntersectionArray& arr) {
    int d = arr.diameter();
    TridiagonalB B;
    B.size = d + 1;
    B.sub.resize(d);
    B.diag.resize(d + 1);
    B.sup.resize(d);
    for (int i = 0; i <= d; ++i) B.diag[i] = arr.ai(i);
    for (int i = 0; i < d; ++i) {
        B.sub[i] = arr.bi(i);
        B.sup[i] = arr.ci(i + 1);
    }
    return B;
}

__int128 char_poly_at(const TridiagonalB& B, long long theta) {
    // D_k = (diag_k - theta) D_{k-1} - sub_{k-1} sup_{k-1} D_{k-2}
    __int128 prev2 = 1, prev1 = 1;
    constexpr __int128 limit = (__int128)1 << 120;
    for (int k = 0; k < B.size; ++k) {
        __int128 dk = ((__int128)B.diag[k] - theta) * prev1;
        if (k > 0) dk -= (__int128)B.sub[k - 1] * B.sup[k - 1] * prev2;
        if (dk > limit || dk < -limit) throw std::overflow_error("char_poly_at out of range");
        prev2 = prev1;
        prev1 = dk;
    }
    return prev1;
}

KernelVector kernel_of(const TridiagonalB& B, int shift) {
    if (shift != 0 && shift != 1) throw std::invalid_argument("kernel shift must be 0 or 1");
    int d = B.size - 1;
    std::vector<Rational> u(d + 1);
    u[0] = Rational(1);
    // Row i of (B + shift*I) determines u_{i+1}; the last row is the
    // consistency check deciding existence.
    for (int i = 0; i < d; ++i) {
        Rational acc = Rational(B.diag[i] + shift) * u[i];
        if (i > 0) acc += Rational(B.sub[i - 1]) * u[i - 1];
        u[i + 1] = -acc / Rational(B.sup[i]);
    }
    Rational last = Rational(B.diag[d] + shift) * u[d] + Rational(B.sub[d - 1]) * u[d - 1];
    KernelVector kv;
    if (!last.is_zero()) return kv;  // trivial kernel
    kv.trivial = false;
    kv.u = std::move(u);
    return kv;
}

namespace {

// Independent closed form: K_i(j) = sum_t (-1)^t C(j,t) C(n-j, i-t).
long long krawtchouk_binomial_sum(int n, int i, int j) {
    std::vector<std::vector<long long>> C(n + 1, std::vector<long long>(n + 1, 0));
    for (int a = 0; a <= n; ++a) {
        C[a][0] = 1;
        for (int b = 1; b <= a; ++b) C[a][b] = C[a - 1][b - 1] + (b <= a - 1 ? C[a - 1][b] : 0);
    }
    long long acc = 0;
    for (int t = 0; t <= i; ++t) {
        if (t > j || i - t > n - j) continue;
        long long term = C[j][t] * C[n - j][i - t];
        acc += (t & 1) ? -term : term;
    }
    return acc;
}

}  // namespace

KrawtchoukTable KrawtchoukTable::build(int n) {
    if (n < 1) throw std::invalid_argument("Krawtchouk table needs n >= 1");
    static std::mutex cache_mutex;
    static std::map<int, KrawtchoukTable> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    KrawtchoukTable t;
    t.n_ = n;
    t.k_.assign(n + 1, std::vector<long long>(n + 1, 0));
    for (int j = 0; j <= n; ++j) {
        t.k_[0][j] = 1;
        t.k_[1][j] = n - 2LL * j;
    }
    // (n-2j) K_i(j) = (i+1) K_{i+1}(j) + (n-i+1) K_{i-1}(j)
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j <= n; ++j) {
            long long num = (n - 2LL * j) * t.k_[i][j] - (n - i + 1LL) * t.k_[i - 1][j];
            if (num % (i + 1) != 0)
                throw std::logic_error("Krawtchouk recurrence produced non-integer K_" +
                                       std::to_string(i + 1) + "(" + std::to_string(j) + ") for n=" +
                                       std::to_string(n));
            t.k_[i + 1][j] = num / (i + 1);
        }
    }
    // Cross-validate the whole table against the binomial sum once per n.
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            long long expect = krawtchouk_binomial_sum(n, i, j);
            if (t.k_[i][j] != expect)
                throw std::logic_error("Krawtchouk recurrence/binomial mismatch at n=" +
                                       std::to_string(n) + " i=" + std::to_string(i) + " j=" +
                                       std::to_string(j) + ": " + std::to_string(t.k_[i][j]) +
                                       " vs " + std::to_string(expect));
        }

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, t);
    return t;
}

long long KrawtchoukTable::lambda(const std::vector<int>& D, int j) const {
    long long acc = 0;
    for (int i : D) acc += k_[i][j];
    return acc;
}

Rational DistancePolynomials::eval(int i, long long x) const {
    Rational acc(0), pw(1);
    for (auto& ce : coeffs[i]) {
        acc += ce * pw;
        pw *= Rational(x);
    }
    return acc;
}

DistancePolynomials distance_polynomials(const IntersectionArray& arr) {
    int d = arr.diameter();
    DistancePolynomials p;
    p.coeffs.resize(d + 1);
    p.coeffs[0] = {Rational(1)};
    if (d >= 1) p.coeffs[1] = {Rational(0), Rational(1)};
    // x v_i = c_{i+1} v_{i+1} + a_i v_i + b_{i-1} v_{i-1}
    for (int i = 1; i < d; ++i) {
        std::vector<Rational> next(i + 2, Rational(0));
        for (int e = 0; e <= i; ++e) next[e + 1] += p.coeffs[i][e];  // x v_i
        for (int e = 0; e <= i; ++e) next[e] -= Rational(arr.ai(i)) * p.coeffs[i][e];
        for (int e = 0; e < i; ++e) next[e] -= Rational(arr.bi(i - 1)) * p.coeffs[i - 1][e];
        Rational inv = Rational(1) / Rational(arr.ci(i + 1));
        for (auto& ce : next) ce *= inv;
        p.coeffs[i + 1] = std::move(next);
    }
    if (arr.bipartite()) {
        // Parity structure underpinning the odd-distance-set results: v_i
        // may only contain terms of the same parity as i.
        for (int i = 0; i <= d; ++i)
            for (int e = 0; e <= i; ++e)
                if ((e ^ i) & 1 && !p.coeffs[i][e].is_zero())
                    throw std::logic_error("bipartite distance polynomial parity violated at v_" +
                                           std::to_string(i));
    }
    return p;
}

KernelInclusionSums kernel_inclusion_sums(int n) {
    if (n % 4 != 1) throw std::invalid_argument("kernel_inclusion_sums requires n = 1 (mod 4)");
    KernelInclusionSums report;
    report.n = n;
    report.p = (n + 1) / 2;
    auto table = KrawtchoukTable::build(n);
    for (int i = 0; 2 * i + 1 <= n; ++i) {
        long long v = table.at(2 * i, report.p) + table.at(2 * i + 1, report.p);
        report.sums.push_back({"K_" + std::to_string(2 * i) + "(p)+K_" + std::to_string(2 * i + 1) + "(p)", v});
        if (v != 0) report.all_zero = false;
    }
    for (int i = 0; i <= (n - 1) / 2; ++i) {
        long long v = table.at(i, report.p) + table.at(n - i, report.p);
        report.sums.push_back({"K_" + std::to_string(i) + "(p)+K_" + std::to_string(n - i) + "(p)", v});
        if (v != 0) report.all_zero = false;
    }
    return report;
}

}  // namespace magiclab
