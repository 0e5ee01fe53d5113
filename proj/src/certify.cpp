#include "magiclab/certify.hpp"

#include <stdexcept>

#include "json.hpp"

namespace magiclab {

namespace {

// Row-by-row re-substitution of (B + shift*I) u = 0; returns the first
// failing row or -1.
int substitute_fails_at(const TridiagonalB& B, int shift, const std::vector<Rational>& u) {
    int d = B.size - 1;
    if ((int)u.size() != d + 1) return 0;
    for (int i = 0; i <= d; ++i) {
        Rational acc = Rational(B.diag[i] + shift) * u[i];
        if (i > 0) acc += Rational(B.sub[i - 1]) * u[i - 1];
        if (i < d) acc += Rational(B.sup[i]) * u[i + 1];
        if (!acc.is_zero()) return i;
    }
    return -1;
}

bool is_hypercube_array(const IntersectionArray& arr) {
    int n = arr.diameter();
    for (int i = 0; i < n; ++i)
        if (arr.bi(i) != n - i || arr.ci(i + 1) != i + 1) return false;
    return true;
}

FiredRule odd_degree_rule(const IntersectionArray& arr) {
    FiredRule r;
    r.rule = "odd-degree-parity";
    r.degree = arr.degree();
    r.order = arr.order();
    return r;
}

FiredRule diameter_rule(const IntersectionArray& arr) {
    FiredRule r;
    r.rule = "diameter-congruence";
    r.diameter = arr.diameter();
    return r;
}

}  // namespace

std::optional<Certificate> certify_not_distance_magic(const IntersectionArray& arr,
                                                      bool all_rules) {
    std::vector<FiredRule> rules;
    // (a) odd degree: the magic constant r(N+1)/2 cannot be an integer.
    if (arr.degree() % 2 != 0) rules.push_back(odd_degree_rule(arr));
    // (b) bipartite antipodal double cover needs d = 2 (mod 4).
    if ((all_rules || rules.empty()) && arr.bipartite() && arr.antipodal_double_cover() &&
        arr.diameter() % 4 != 2)
        rules.push_back(diameter_rule(arr));
    // (c) antipodal double cover: ker B must have a basis ending in -1.
    if ((all_rules || rules.empty()) && arr.antipodal_double_cover()) {
        KernelVector kv = kernel_of(build_B(arr), 0);
        if (kv.trivial) {
            FiredRule r;
            r.rule = "kernel-trivial";
            r.shift = 0;
            rules.push_back(std::move(r));
        } else if (kv.u.back() != Rational(-1)) {
            FiredRule r;
            r.rule = "kernel-sign";
            r.shift = 0;
            r.kernel = kv.u;
            rules.push_back(std::move(r));
        }
    }
    if (rules.empty()) return std::nullopt;
    if (!all_rules) rules.resize(1);
    Certificate cert{"no graph with intersection array " + arr.format() +
                         " admits a distance magic labeling",
                     "distance-magic", arr, std::move(rules)};
    return cert;
}

std::optional<Certificate> certify_not_closed_magic_array(const IntersectionArray& arr,
                                                          bool all_rules) {
    std::vector<FiredRule> rules;
    if (arr.antipodal_double_cover()) {
        KernelVector kv = kernel_of(build_B(arr), 1);
        if (kv.trivial) {
            FiredRule r;
            r.rule = "kernel-trivial";
            r.shift = 1;
            rules.push_back(std::move(r));
        } else if (kv.u.back() != Rational(-1)) {
            FiredRule r;
            r.rule = "kernel-sign";
            r.shift = 1;
            r.kernel = kv.u;
            rules.push_back(std::move(r));
        }
    }
    if (rules.empty()) return std::nullopt;
    if (!all_rules) rules.resize(1);
    Certificate cert{"no graph with intersection array " + arr.format() +
                         " admits a closed distance magic labeling",
                     "closed-distance-magic", arr, std::move(rules)};
    return cert;
}

std::optional<Certificate> certify_not_closed_magic(int n, bool all_rules) {
    IntersectionArray arr = IntersectionArray::hypercube(n);
    TridiagonalB B = build_B(arr);
    std::vector<FiredRule> rules;
    if (n % 2 == 0) {
        // Every eigenvalue n - 2j is even, so -1 is not among them and
        // ker(I + B) is trivial.
        KernelVector kv = kernel_of(B, 1);
        if (!kv.trivial) throw std::logic_error("ker(I+B) unexpectedly nontrivial for even n");
        FiredRule r;
        r.rule = "kernel-trivial";
        r.shift = 1;
        for (int j = 0; j <= n; ++j) r.eigenvalues.push_back(n - 2LL * j);
        rules.push_back(std::move(r));
    } else {
        int p = (n + 1) / 2;
        KernelVector kv = kernel_of(B, 1);
        if (kv.trivial) throw std::logic_error("ker(I+B) unexpectedly trivial for odd n");
        auto table = KrawtchoukTable::build(n);
        for (int i = 0; i <= n; ++i)
            if (kv.u[i] != Rational(table.at(i, p)))
                throw std::logic_error("kernel vector disagrees with the Krawtchouk column");
        if (p % 2 == 0) {
            FiredRule r;
            r.rule = "closed-parity";
            r.shift = 1;
            r.p = p;
            r.kernel = kv.u;
            rules.push_back(std::move(r));
            if (all_rules) {
                FiredRule s;
                s.rule = "kernel-sign";
                s.shift = 1;
                s.kernel = kv.u;
                rules.push_back(std::move(s));
            }
        }
    }
    if (rules.empty()) return std::nullopt;
    if (!all_rules) rules.resize(1);
    Certificate cert{"Q_" + std::to_string(n) + " admits no closed distance magic labeling",
                     "closed-distance-magic", arr, std::move(rules)};
    return cert;
}

std::string Certificate::json() const {
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["mode"] = mode;
    j["array"] = array.format();
    nlohmann::ordered_json jr = nlohmann::ordered_json::array();
    for (auto& r : rules) {
        nlohmann::ordered_json one;
        one["rule"] = r.rule;
        if (r.rule == "odd-degree-parity") {
            one["degree"] = r.degree;
            one["order"] = r.order;
        } else if (r.rule == "diameter-congruence") {
            one["diameter"] = r.diameter;
        } else if (r.rule == "kernel-trivial") {
            one["shift"] = r.shift;
            if (!r.eigenvalues.empty()) one["eigenvalues"] = r.eigenvalues;
        } else if (r.rule == "kernel-sign" || r.rule == "closed-parity") {
            one["shift"] = r.shift;
            if (r.rule == "closed-parity") one["p"] = r.p;
            nlohmann::ordered_json kern = nlohmann::ordered_json::array();
            for (auto& q : r.kernel) kern.push_back(q.str());
            one["kernel"] = std::move(kern);
        }
        jr.push_back(std::move(one));
    }
    j["rules"] = std::move(jr);
    return j.dump(2);
}

Certificate Certificate::parse(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Certificate cert{j.at("claim").get<std::string>(), j.at("mode").get<std::string>(),
                     IntersectionArray::parse(j.at("array").get<std::string>()), {}};
    for (auto& one : j.at("rules")) {
        FiredRule r;
        r.rule = one.at("rule").get<std::string>();
        if (one.contains("degree")) r.degree = one["degree"].get<long long>();
        if (one.contains("order")) r.order = one["order"].get<long long>();
        if (one.contains("diameter")) r.diameter = one["diameter"].get<int>();
        if (one.contains("shift")) r.shift = one["shift"].get<int>();
        if (one.contains("p")) r.p = one["p"].get<int>();
        if (one.contains("eigenvalues"))
            for (auto& e : one["eigenvalues"]) r.eigenvalues.push_back(e.get<long long>());
        if (one.contains("kernel"))
            for (auto& e : one["kernel"]) r.kernel.push_back(Rational::parse(e.get<std::string>()));
        cert.rules.push_back(std::move(r));
    }
    return cert;
}

RecheckResult recheck(const Certificate& cert) {
    RecheckResult res;
    auto fail = [&](const std::string& why) {
        res.ok = false;
        res.diff = why;
        return res;
    };
    bool closed = cert.mode == "closed-distance-magic";
    if (!closed && cert.mode != "distance-magic") return fail("unknown mode '" + cert.mode + "'");
    if (cert.rules.empty()) return fail("certificate carries no rules");

    const IntersectionArray& arr = cert.array;
    TridiagonalB B = build_B(arr);
    int d = arr.diameter();

    for (auto& r : cert.rules) {
        if (r.rule == "odd-degree-parity") {
            if (closed) return fail("odd-degree-parity does not apply to closed distance magic");
            if (r.degree != arr.degree())
                return fail("witness degree " + std::to_string(r.degree) + " != array degree " +
                            std::to_string(arr.degree()));
            if (r.order != arr.order())
                return fail("witness order " + std::to_string(r.order) + " != array order " +
                            std::to_string(arr.order()));
            if (r.degree % 2 == 0) return fail("degree is even; parity rule cannot fire");
            if (r.order % 2 != 0) return fail("odd-degree graph with odd order is impossible");
            // r odd and N even make r(N+1)/2 a non-integer, as claimed.
        } else if (r.rule == "diameter-congruence") {
            if (closed) return fail("diameter-congruence does not apply to closed distance magic");
            if (!arr.bipartite()) return fail("array is not bipartite");
            if (!arr.antipodal_double_cover()) return fail("array is not an antipodal double cover");
            if (r.diameter != d)
                return fail("witness diameter " + std::to_string(r.diameter) + " != array diameter " +
                            std::to_string(d));
            if (d % 4 == 2) return fail("diameter is 2 (mod 4); congruence rule cannot fire");
        } else if (r.rule == "kernel-trivial") {
            int shift = closed ? 1 : 0;
            if (r.shift != shift) return fail("kernel shift does not match certificate mode");
            if (!arr.antipodal_double_cover()) return fail("array is not an antipodal double cover");
            KernelVector kv = kernel_of(B, shift);
            if (!kv.trivial) return fail("kernel is nontrivial; kernel-trivial rule cannot fire");
            if (!r.eigenvalues.empty()) {
                if ((int)r.eigenvalues.size() != d + 1)
                    return fail("eigenvalue list must contain all d+1 distinct eigenvalues");
                long long target = shift == 1 ? -1 : 0;
                for (size_t a = 0; a < r.eigenvalues.size(); ++a) {
                    if (char_poly_at(B, r.eigenvalues[a]) != 0)
                        return fail(std::to_string(r.eigenvalues[a]) + " is not an eigenvalue of B");
                    if (r.eigenvalues[a] == target)
                        return fail("listed eigenvalues contain the obstructed value " +
                                    std::to_string(target));
                    for (size_t b = a + 1; b < r.eigenvalues.size(); ++b)
                        if (r.eigenvalues[a] == r.eigenvalues[b]) return fail("duplicate eigenvalue listed");
                }
            }
        } else if (r.rule == "kernel-sign" || r.rule == "closed-parity") {
            int shift = closed ? 1 : 0;
            if (r.shift != shift) return fail("kernel shift does not match certificate mode");
            if (!arr.antipodal_double_cover()) return fail("array is not an antipodal double cover");
            if ((int)r.kernel.size() != d + 1)
                return fail("kernel witness has length " + std::to_string(r.kernel.size()) +
                            ", expected " + std::to_string(d + 1));
            if (r.kernel[0] != Rational(1)) return fail("kernel witness is not normalized to u_0 = 1");
            int row = substitute_fails_at(B, shift, r.kernel);
            if (row >= 0)
                return fail("kernel witness fails re-substitution at row " + std::to_string(row));
            if (r.kernel.back() == Rational(-1))
                return fail("kernel witness ends in -1; the sign rule cannot fire");
            if (r.rule == "closed-parity") {
                if (!closed) return fail("closed-parity applies only to closed distance magic");
                if (!is_hypercube_array(arr)) return fail("closed-parity requires the Q_n array");
                int n = d;
                if (n % 2 == 0) return fail("closed-parity requires odd n");
                if (r.p != (n + 1) / 2)
                    return fail("witness p=" + std::to_string(r.p) + " != (n+1)/2");
                if (r.p % 2 != 0) return fail("p is odd; no parity obstruction");
                auto table = KrawtchoukTable::build(n);
                for (int i = 0; i <= n; ++i)
                    if (r.kernel[i] != Rational(table.at(i, r.p)))
                        return fail("kernel witness differs from the Krawtchouk column at index " +
                                    std::to_string(i));
            }
        } else {
            return fail("unknown rule '" + r.rule + "'");
        }
    }
    return res;
}

}  // namespace magiclab
