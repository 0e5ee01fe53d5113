#include "magiclab/labeling.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace magiclab {

Labeling Labeling::from_values(std::vector<long long> values) {
    if (values.empty()) throw std::invalid_argument("labeling must not be empty");
    long long N = (long long)values.size();
    std::vector<bool> seen(values.size(), false);
    for (size_t v = 0; v < values.size(); ++v) {
        long long lab = values[v];
        if (lab < 1 || lab > N)
            throw std::invalid_argument("label " + std::to_string(lab) + " of vertex " +
                                        std::to_string(v) + " is outside {1,...," +
                                        std::to_string(N) + "}");
        if (seen[lab - 1])
            throw std::invalid_argument("duplicate label " + std::to_string(lab) + " at vertex " +
                                        std::to_string(v));
        seen[lab - 1] = true;
    }
    Labeling l;
    l.values_ = std::move(values);
    return l;
}

Labeling Labeling::parse(const std::string& text) {
    std::vector<long long> values;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(a, b - a + 1);
        try {
            size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("trailing junk");
            values.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected an integer label, got '" + tok + "'");
        }
    }
    try {
        return from_values(std::move(values));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("labeling file invalid: ") + e.what());
    }
}

std::string Labeling::to_file_text() const {
    std::string out;
    for (auto v : values_) out += std::to_string(v) + "\n";
    return out;
}

DistanceSet::DistanceSet(std::vector<int> elems) : elems_(std::move(elems)) {
    for (int e : elems_)
        if (e < 0) throw std::invalid_argument("distances must be nonnegative");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

DistanceSet DistanceSet::full(int d) {
    std::vector<int> v(d + 1);
    for (int i = 0; i <= d; ++i) v[i] = i;
    return DistanceSet(std::move(v));
}

DistanceSet DistanceSet::parse(const std::string& spec) {
    std::vector<int> elems;
    std::stringstream ss(spec);
    std::string item;
    bool any = false;
    while (std::getline(ss, item, ',')) {
        any = true;
        auto dash = item.find('-');
        try {
            if (dash == std::string::npos) {
                elems.push_back(std::stoi(item));
            } else {
                int lo = std::stoi(item.substr(0, dash));
                int hi = std::stoi(item.substr(dash + 1));
                if (hi < lo) throw std::invalid_argument("descending range");
                for (int i = lo; i <= hi; ++i) elems.push_back(i);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad distance-set item '" + item + "' (grammar: 0,2-3,5)");
        }
    }
    if (!any) throw std::invalid_argument("empty distance-set spec");
    return DistanceSet(std::move(elems));
}

DistanceSet DistanceSet::from_mask(std::uint64_t mask) {
    std::vector<int> elems;
    for (int i = 0; i < 64; ++i)
        if (mask & (std::uint64_t(1) << i)) elems.push_back(i);
    return DistanceSet(std::move(elems));
}

bool DistanceSet::contains(int i) const {
    return std::binary_search(elems_.begin(), elems_.end(), i);
}

std::uint64_t DistanceSet::mask() const {
    std::uint64_t m = 0;
    for (int e : elems_) {
        if (e > 63) throw std::overflow_error("distance too large for mask form");
        m |= std::uint64_t(1) << e;
    }
    return m;
}

bool DistanceSet::disjoint_with(const DistanceSet& o) const {
    for (int e : elems_)
        if (o.contains(e)) return false;
    return true;
}

DistanceSet DistanceSet::unite(const DistanceSet& o) const {
    std::vector<int> v = elems_;
    v.insert(v.end(), o.elems_.begin(), o.elems_.end());
    return DistanceSet(std::move(v));
}

std::string DistanceSet::str() const {
    std::string s;
    for (int e : elems_) s += (s.empty() ? "" : ",") + std::to_string(e);
    return s;
}

bool operator<(const DistanceSet& a, const DistanceSet& b) { return a.elems_ < b.elems_; }

std::string Verdict::json() const {
    nlohmann::ordered_json j;
    switch (kind) {
        case VerdictKind::Magic:
            j["verdict"] = "magic";
            j["k"] = k;
            break;
        case VerdictKind::ArithmeticAntimagic:
            j["verdict"] = "ap_antimagic";
            j["alpha"] = alpha;
            j["delta"] = delta;
            break;
        case VerdictKind::Antimagic:
            j["verdict"] = "antimagic";
            break;
        case VerdictKind::Neither:
            j["verdict"] = "neither";
            break;
    }
    if (weight_histogram) {
        nlohmann::ordered_json h;
        for (auto& [w, c] : *weight_histogram) h[std::to_string(w)] = c;
        j["weight_histogram"] = std::move(h);
    }
    return j.dump();
}

Verdict classify_weights(const std::vector<long long>& weights, bool keep_histogram) {
    if (weights.empty()) throw std::invalid_argument("empty weight vector");
    Verdict v;
    std::vector<long long> sorted(weights);
    std::sort(sorted.begin(), sorted.end());

    bool constant = sorted.front() == sorted.back();
    bool distinct = true;
    bool ap = true;
    for (size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) distinct = false;
        if (sorted[i] - sorted[i - 1] != sorted[1] - sorted[0]) ap = false;
    }

    if (constant) {
        v.kind = VerdictKind::Magic;
        v.k = sorted.front();
    } else if (distinct && ap) {
        v.kind = VerdictKind::ArithmeticAntimagic;
        v.alpha = sorted.front();
        v.delta = sorted[1] - sorted[0];
    } else if (distinct) {
        v.kind = VerdictKind::Antimagic;
    } else {
        v.kind = VerdictKind::Neither;
    }
    if (keep_histogram || v.kind == VerdictKind::Neither) {
        std::map<long long, long long> h;
        for (auto w : weights) ++h[w];
        v.weight_histogram = std::move(h);
    }
    return v;
}

long long weight(const Labeling& l, const ExplicitGraph& g, int x, const DistanceSet& D) {
    if (D.empty()) throw std::invalid_argument("distance set must be non-empty");
    if ((std::uint64_t)g.order() != l.order()) throw std::invalid_argument("labeling/graph order mismatch");
    DistancePartition p = distance_partition(g, x);
    long long acc = 0;
    for (int i : D.elems())
        if (i <= p.eccentricity())
            for (int y : p.cells[i]) acc += l.label(y);
    return acc;
}

long long weight(const Labeling& l, const HypercubeModel& model, const BitVector& u,
                 const DistanceSet& D) {
    if (D.empty()) throw std::invalid_argument("distance set must be non-empty");
    if (model.order != l.order()) throw std::invalid_argument("labeling/model order mismatch");
    if (D.max() > model.dim) throw std::invalid_argument("distance exceeds hypercube diameter");
    long long acc = 0;
    for (int i : D.elems())
        for_each_at_distance(model, u, i, [&](const BitVector& v) { acc += l.label(zeta(v)); });
    return acc;
}

namespace {

template <typename T>
void fwht_impl(std::vector<T>& a) {
    size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("transform size must be a power of two");
    for (size_t len = 1; len < n; len <<= 1)
        for (size_t blk = 0; blk < n; blk += len << 1)
            for (size_t i = blk; i < blk + len; ++i) {
                T x = a[i], y = a[i + len];
                a[i] = x + y;
                a[i + len] = x - y;
            }
}

// Shared by weights_all_fast and the per-copy evaluation on unions, where
// a slice of a labeling is not itself a bijection.
std::vector<long long> transform_weights(const std::vector<long long>& vals, int n,
                                         const DistanceSet& D) {
    if (D.empty()) throw std::invalid_argument("distance set must be non-empty");
    if (D.max() > n) throw std::invalid_argument("distance exceeds hypercube diameter");
    if (n > 20) throw std::invalid_argument("transform evaluator supports n <= 20");
    auto table = KrawtchoukTable::build(n);
    std::vector<long long> lam(n + 1);
    for (int j = 0; j <= n; ++j) lam[j] = table.lambda(D.elems(), j);

    std::vector<long long> t(vals);
    fwht_impl(t);
    std::uint64_t N = std::uint64_t(1) << n;
    std::vector<__int128> big(N);
    for (std::uint64_t u = 0; u < N; ++u)
        big[u] = (__int128)t[u] * lam[std::popcount(u)];
    fwht_impl(big);

    std::vector<long long> w(N);
    for (std::uint64_t u = 0; u < N; ++u) {
        if (big[u] % (__int128)N != 0)
            throw std::logic_error("transform weight evaluation: inexact division (internal error)");
        __int128 q = big[u] / (__int128)N;
        if (q > (__int128)0x7fffffffffffffffLL || q < -((__int128)0x7fffffffffffffffLL + 1))
            throw std::overflow_error("transform weight out of 64-bit range");
        w[u] = (long long)q;
    }
    return w;
}

}  // namespace

void fwht(std::vector<long long>& data) { fwht_impl(data); }

std::vector<long long> weights_all_fast(const Labeling& l, const HypercubeModel& model,
                                        const DistanceSet& D) {
    if (model.order != l.order()) throw std::invalid_argument("labeling/model order mismatch");
    return transform_weights(l.values(), model.dim, D);
}

Verdict verify(const Labeling& l, const ExplicitGraph& g, const DistanceSet& D,
               bool keep_histogram) {
    if (D.empty()) throw std::invalid_argument("distance set must be non-empty");
    if ((std::uint64_t)g.order() != l.order()) throw std::invalid_argument("labeling/graph order mismatch");
    std::vector<long long> w(g.order(), 0);
    int diameter = 0;
    for (int x = 0; x < g.order(); ++x) {
        DistancePartition p = distance_partition(g, x);
        diameter = std::max(diameter, p.eccentricity());
        for (int i : D.elems())
            if (i <= p.eccentricity())
                for (int y : p.cells[i]) w[x] += l.label(y);
    }
    if (D.max() > diameter) throw std::invalid_argument("distance exceeds graph diameter");
    return classify_weights(w, keep_histogram);
}

Verdict verify(const Labeling& l, const HypercubeModel& model, const DistanceSet& D,
               bool keep_histogram) {
    std::vector<long long> w = weights_all_fast(l, model, D);
    Verdict v = classify_weights(w, keep_histogram);
    if (v.is_magic()) {
        // Averaging over all vertices pins the magic constant to
        // (sum of sphere sizes over D) * (N+1) / 2; a mismatch would mean
        // the evaluator miscounted.
        auto table = KrawtchoukTable::build(model.dim);
        __int128 expect2 = (__int128)table.lambda(D.elems(), 0) * ((__int128)model.order + 1);
        if (expect2 % 2 != 0 || (__int128)v.k * 2 != expect2)
            throw std::logic_error("magic constant disagrees with the averaging formula");
    }
    return v;
}

Verdict verify(const Labeling& l, const TwoCubes& model, const DistanceSet& D,
               bool keep_histogram) {
    if (model.order != l.order()) throw std::invalid_argument("labeling/model order mismatch");
    std::uint64_t half = model.order / 2;
    std::vector<long long> lo(l.values().begin(), l.values().begin() + half);
    std::vector<long long> hi(l.values().begin() + half, l.values().end());
    std::vector<long long> w = transform_weights(lo, model.dim, D);
    std::vector<long long> w2 = transform_weights(hi, model.dim, D);
    w.insert(w.end(), w2.begin(), w2.end());
    return classify_weights(w, keep_histogram);
}

SphereSums sphere_sums(const Labeling& l, const ExplicitGraph& g) {
    if ((std::uint64_t)g.order() != l.order()) throw std::invalid_argument("labeling/graph order mismatch");
    int diameter = 0;
    std::vector<DistancePartition> parts;
    parts.reserve(g.order());
    for (int x = 0; x < g.order(); ++x) {
        parts.push_back(distance_partition(g, x));
        diameter = std::max(diameter, parts.back().eccentricity());
    }
    SphereSums out;
    out.s.assign(g.order(), std::vector<long long>(diameter + 1, 0));
    for (int x = 0; x < g.order(); ++x)
        for (int i = 0; i <= parts[x].eccentricity(); ++i)
            for (int y : parts[x].cells[i]) out.s[x][i] += l.label(y);
    return out;
}

SphereSums sphere_sums(const Labeling& l, const HypercubeModel& model) {
    if (model.order != l.order()) throw std::invalid_argument("labeling/model order mismatch");
    SphereSums out;
    out.s.assign(model.order, std::vector<long long>(model.dim + 1, 0));
    for (int i = 0; i <= model.dim; ++i) {
        std::vector<long long> col = weights_all_fast(l, model, DistanceSet({i}));
        for (std::uint64_t u = 0; u < model.order; ++u) out.s[u][i] = col[u];
    }
    return out;
}

KerB0Report check_kerB0_identity(const Labeling& l, const ExplicitGraph& g,
                                 const IntersectionArray& arr, const SphereSums& sums) {
    KerB0Report rep;
    if ((std::uint64_t)g.order() != l.order() || arr.order() != g.order()) {
        rep.ok = false;
        rep.detail = "order mismatch between labeling, graph and array";
        return rep;
    }
    int d = arr.diameter();
    std::vector<long long> w1(g.order(), 0);
    for (int y = 0; y < g.order(); ++y)
        for (int z : g.neighbors(y)) w1[y] += l.label(z);

    for (int x = 0; x < g.order(); ++x) {
        DistancePartition p = distance_partition(g, x);
        for (int i = 0; i <= d; ++i) {
            long long lhs = 0;
            if (i <= p.eccentricity())
                for (int y : p.cells[i]) lhs += w1[y];
            long long rhs = arr.ai(i) * sums.s[x][i];
            if (i > 0) rhs += arr.bi(i - 1) * sums.s[x][i - 1];
            if (i < d) rhs += arr.ci(i + 1) * sums.s[x][i + 1];
            if (lhs != rhs) {
                rep.ok = false;
                rep.detail = "identity fails at x=" + std::to_string(x) + ", i=" + std::to_string(i) +
                             ": lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
                return rep;
            }
        }
    }
    return rep;
}

bool is_balanced(const std::vector<BitVector>& A) {
    if (A.empty()) return true;
    int n = A[0].dim();
    for (auto& a : A)
        if (a.dim() != n) throw std::invalid_argument("balanced-set vectors must share a dimension");
    if (A.size() % 2 != 0) return false;
    for (int i = 0; i < n; ++i) {
        size_t count = 0;
        for (auto& a : A)
            if (a.get(i)) ++count;
        if (count * 2 != A.size()) return false;
    }
    return true;
}

std::uint64_t balanced_sum_check(const std::vector<BitVector>& A) {
    if (!is_balanced(A)) throw std::invalid_argument("balanced_sum_check requires a balanced set");
    if (A.empty()) return 0;
    std::uint64_t acc = 0;
    for (auto& a : A) acc += zeta(a);
    std::uint64_t expect = (std::uint64_t)(A.size() / 2) * ((std::uint64_t(1) << A[0].dim()) - 1);
    if (acc != expect) throw std::logic_error("balanced zeta-sum disagrees with |A|/2 (2^n - 1)");
    return acc;
}

std::vector<DistanceSet> enumerate_magic_sets(const Labeling& l, const HypercubeModel& model,
                                              const EnumerateOptions& opts) {
    int n = model.dim;
    if (n > 20) throw std::invalid_argument("magic-set enumeration supports n <= 20");
    if (model.order != l.order()) throw std::invalid_argument("labeling/model order mismatch");

    std::vector<long long> t(l.values().begin(), l.values().end());
    fwht(t);
    // Distance classes (by coefficient weight) carrying any nonzero
    // transform coefficient; D is magic iff lambda_D vanishes on them all.
    std::vector<int> support;
    {
        std::vector<char> nonzero(n + 1, 0);
        for (std::uint64_t u = 1; u < model.order; ++u)
            if (t[u] != 0) nonzero[std::popcount(u)] = 1;
        for (int j = 1; j <= n; ++j)
            if (nonzero[j]) support.push_back(j);
    }
    auto table = KrawtchoukTable::build(n);

    std::vector<std::uint64_t> passing;
    std::vector<long long> lam(support.size(), 0);
    std::uint64_t mask = 0;
    std::uint64_t total = (std::uint64_t(1) << (n + 1)) - 1;
    // Reflected Gray code visits every non-empty subset of {0..n} once
    // with one element toggled per step.
    for (std::uint64_t step = 1; step <= total; ++step) {
        int bit = std::countr_zero(step);
        std::uint64_t flip = std::uint64_t(1) << bit;
        bool entering = !(mask & flip);
        mask ^= flip;
        for (size_t s = 0; s < support.size(); ++s) {
            long long k = table.at(bit, support[s]);
            lam[s] += entering ? k : -k;
        }
        if (mask == 0) continue;
        bool zero = true;
        for (auto v : lam)
            if (v != 0) { zero = false; break; }
        if (zero) passing.push_back(mask);
    }
    std::sort(passing.begin(), passing.end());

    std::vector<DistanceSet> out;
    out.reserve(passing.size());
    for (auto m : passing) out.push_back(DistanceSet::from_mask(m));

    if (opts.confirm && n <= 14 && !out.empty()) {
        std::vector<size_t> audit;
        if (n <= opts.confirm_all_up_to) {
            audit.resize(out.size());
            for (size_t i = 0; i < audit.size(); ++i) audit[i] = i;
        } else {
            std::mt19937_64 rng(opts.seed);
            audit.push_back(0);
            audit.push_back(out.size() - 1);
            for (int s = 0; s < opts.confirm_samples; ++s)
                audit.push_back((size_t)(rng() % out.size()));
            std::sort(audit.begin(), audit.end());
            audit.erase(std::unique(audit.begin(), audit.end()), audit.end());
        }
        for (size_t idx : audit) {
            Verdict v = verify(l, model, out[idx]);
            if (!v.is_magic())
                throw std::logic_error("spectral screen and weight evaluation disagree on D={" +
                                       out[idx].str() + "}");
        }
    }
    return out;
}

}  // namespace magiclab
