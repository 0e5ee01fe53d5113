// magiclab - construct, verify, certify and enumerate D-magic labelings
// of hypercubes and small distance-regular graphs.
//
// Conventions shared by all commands:
//   * vertex v of Q_n is the bit-vector with zeta(v) = v; bit index 0 is
//     the least significant bit, so matrix rows and bit strings print
//     with the most significant index last;
//   * labeling files carry one label per line, vertex 0 first; '#'
//     comments and blank lines are ignored;
//   * all randomness flows from --seed (default 0, never entropy);
//   * every run emits a JSON manifest on stderr (and next to --out).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "magiclab/certify.hpp"
#include "magiclab/construct.hpp"
#include "magiclab/graphs.hpp"
#include "magiclab/labeling.hpp"
#include "magiclab/oracle.hpp"
#include "magiclab/spectral.hpp"

using json = nlohmann::ordered_json;
using namespace magiclab;

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitMagic = 0;
constexpr int kExitNotMagic = 1;
constexpr int kExitCongruence = 2;
constexpr int kExitSearchExhausted = 3;
constexpr int kExitMalformed = 4;
constexpr int kExitInternal = 5;

struct Manifest {
    std::string command;
    std::vector<std::string> args;
    std::uint64_t seed = 0;
    int threads = 1;
    std::vector<std::pair<std::string, std::string>> inputs;  // path, fnv1a64
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    json to_json() const {
        json j;
        j["tool"] = "magiclab";
        j["version"] = kVersion;
        j["command"] = command;
        j["args"] = args;
        j["seed"] = seed;
        j["threads"] = threads;
        json in = json::array();
        for (auto& [p, h] : inputs) in.push_back(json{{"path", p}, {"fnv1a64", h}});
        j["inputs"] = std::move(in);
        j["outputs"] = outputs;
        j["wall_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                .count();
        return j;
    }
};

std::string fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::string slurp(const std::string& path, Manifest& man) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string data = ss.str();
    man.inputs.emplace_back(path, fnv1a64(data));
    return data;
}

void spit(const std::string& path, const std::string& data, Manifest& man) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    out << data;
    man.outputs.push_back(path);
}

// Primary output goes to --out when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& data, Manifest& man) {
    if (out_path.empty())
        std::cout << data << "\n";
    else
        spit(out_path, data + "\n", man);
}

json matrix_json(const BitMatrix& m) {
    json rows = json::array();
    for (auto& line : m.to_lines()) rows.push_back(line);
    return rows;
}

json verdict_json(const Verdict& v) { return json::parse(v.json()); }

json distance_set_json(const DistanceSet& D) {
    json a = json::array();
    for (int e : D.elems()) a.push_back(e);
    return a;
}

int threads_from(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("MAGICLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (int)hw;
}

int run_construct(const std::string& kind, int n, std::uint64_t seed, std::string out_path,
                  Manifest& man) {
    if (out_path.empty()) out_path = "q" + std::to_string(n) + "-" + kind + ".lbl";
    json sidecar;
    std::string labeling_text;
    try {
        if (kind == "closed") {
            if (n < 1 || n % 4 != 1) {
                std::cerr << "construct closed: n must be 1 (mod 4); got " << n << "\n";
                return kExitCongruence;
            }
            ConstructResult res = closed_magic_labeling(n);
            labeling_text = res.labeling.to_file_text();
            sidecar = {{"n", n},
                       {"family", "closed"},
                       {"matrix", matrix_json(res.matrix)},
                       {"seed", seed},
                       {"D", distance_set_json(res.magic_D)},
                       {"verdict", verdict_json(res.verdict)}};
        } else if (kind == "open") {
            if (n % 4 != 2) {
                std::cerr << "construct open: n must be 2 (mod 4); got " << n << "\n";
                return kExitCongruence;
            }
            ConstructResult res = distance_magic_labeling(n, seed);
            labeling_text = res.labeling.to_file_text();
            sidecar = {{"n", n},
                       {"family", "open"},
                       {"matrix", matrix_json(res.matrix)},
                       {"seed", seed},
                       {"D", distance_set_json(res.magic_D)},
                       {"verdict", verdict_json(res.verdict)}};
        } else {  // split
            if (n % 4 != 1 && n % 4 != 2) {
                std::cerr << "construct split: n must be 1 or 2 (mod 4); got " << n << "\n";
                return kExitCongruence;
            }
            SplitResult res = split_to_2Q(n, seed);
            labeling_text = res.labeling.to_file_text();
            sidecar = {{"n", n},
                       {"family", "split-" + res.family},
                       {"half_dim", res.half_dim},
                       {"matrix", matrix_json(res.matrix)},
                       {"seed", seed},
                       {"D", distance_set_json(res.D)},
                       {"predicted_alpha", res.predicted_alpha},
                       {"verdict", verdict_json(res.verdict)}};
        }
    } catch (const SearchExhausted& e) {
        std::cerr << "construct: " << e.what() << "\n";
        return kExitSearchExhausted;
    }
    spit(out_path, labeling_text, man);
    spit(out_path + ".json", sidecar.dump(2) + "\n", man);
    std::cout << sidecar["verdict"].dump() << "\n";
    return 0;
}

int run_verify(const std::string& labeling_path, int hypercube_n, int two_cubes_n,
               const std::string& graph_path, const std::string& d_spec, std::string out_path,
               Manifest& man) {
    Labeling l;
    DistanceSet D;
    try {
        l = Labeling::parse(slurp(labeling_path, man));
        D = DistanceSet::parse(d_spec);
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitMalformed;
    }
    Verdict v;
    try {
        if (hypercube_n > 0)
            v = verify(l, HypercubeModel(hypercube_n), D);
        else if (two_cubes_n > 0)
            v = verify(l, TwoCubes(two_cubes_n), D);
        else if (!graph_path.empty())
            v = verify(l, ExplicitGraph::parse_edge_list(slurp(graph_path, man)), D);
        else {
            std::cerr << "verify: pass one of --hypercube, --two-cubes or --graph\n";
            return kExitMalformed;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitMalformed;
    }
    emit(out_path, v.json(), man);
    return v.is_magic() ? kExitMagic : kExitNotMagic;
}

int run_certify(const std::string& array_str, int hypercube_n, const std::string& mode,
                bool all_rules, std::string out_path, Manifest& man) {
    std::optional<Certificate> cert;
    try {
        if (hypercube_n > 0) {
            if (mode == "open") {
                cert = certify_not_distance_magic(IntersectionArray::hypercube(hypercube_n),
                                                  all_rules);
                if (cert)
                    cert->claim = "Q_" + std::to_string(hypercube_n) +
                                  " admits no distance magic labeling";
            } else {
                cert = certify_not_closed_magic(hypercube_n, all_rules);
            }
        } else if (!array_str.empty()) {
            IntersectionArray arr = IntersectionArray::parse(array_str);
            cert = mode == "open" ? certify_not_distance_magic(arr, all_rules)
                                  : certify_not_closed_magic_array(arr, all_rules);
        } else {
            std::cerr << "certify: pass an intersection array or --hypercube n\n";
            return kExitMalformed;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "certify: " << e.what() << "\n";
        return kExitMalformed;
    }
    if (!cert) {
        json j{{"result", "no obstruction found"},
               {"note", "the tested conditions are necessary only; this is not an existence claim"}};
        emit(out_path, j.dump(2), man);
        return 0;
    }
    RecheckResult rc = recheck(*cert);
    if (!rc.ok) {
        std::cerr << "certify: internal error, emitted certificate fails recheck: " << rc.diff << "\n";
        return kExitInternal;
    }
    emit(out_path, cert->json(), man);
    return 0;
}

int run_enumerate(const std::string& labeling_path, int n, std::uint64_t seed,
                  std::string out_path, Manifest& man) {
    if (n < 1 || n > 14) {
        std::cerr << "enumerate: n must be in 1..14 (full confirmation range)\n";
        return kExitMalformed;
    }
    Labeling l;
    try {
        l = Labeling::parse(slurp(labeling_path, man));
    } catch (const std::invalid_argument& e) {
        std::cerr << "enumerate: " << e.what() << "\n";
        return kExitMalformed;
    }
    EnumerateOptions opts;
    opts.seed = seed;
    std::vector<DistanceSet> sets;
    try {
        sets = enumerate_magic_sets(l, HypercubeModel(n), opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "enumerate: " << e.what() << "\n";
        return kExitMalformed;
    }

    std::vector<DistanceSet> family = generate_family_sets(n);
    std::vector<DistanceSet> extras, missing;
    for (auto& d : sets)
        if (!std::binary_search(family.begin(), family.end(), d)) extras.push_back(d);
    for (auto& d : family)
        if (std::find(sets.begin(), sets.end(), d) == sets.end()) missing.push_back(d);

    std::ostringstream out;
    for (auto& d : sets) out << json{{"D", distance_set_json(d)}}.dump() << "\n";
    json summary{{"summary", true},
                 {"n", n},
                 {"magic_set_count", sets.size()},
                 {"family_count", family.size()},
                 {"family_missing", json::array()},
                 {"extras_beyond_family", json::array()}};
    for (auto& d : missing) summary["family_missing"].push_back(distance_set_json(d));
    for (auto& d : extras) summary["extras_beyond_family"].push_back(distance_set_json(d));
    out << summary.dump();
    emit(out_path, out.str(), man);
    return 0;
}

ExplicitGraph builder_graph(const std::string& name) {
    if (name == "q2") return ExplicitGraph::hypercube(2);
    if (name == "q3") return ExplicitGraph::hypercube(3);
    if (name == "q4") return ExplicitGraph::hypercube(4);
    if (name == "c4") return ExplicitGraph::cycle(4);
    if (name == "petersen") return ExplicitGraph::petersen();
    if (name == "hadamard16") return hadamard_graph(HadamardMatrix::sylvester(4));
    throw std::invalid_argument("unknown builder '" + name +
                                "' (q2, q3, q4, c4, petersen, hadamard16)");
}

int run_oracle_search(const std::string& builder, const std::string& graph_path,
                      const std::string& d_spec, std::size_t cap, int threads,
                      std::string out_path, Manifest& man) {
    try {
        ExplicitGraph g = graph_path.empty()
                              ? builder_graph(builder)
                              : ExplicitGraph::parse_edge_list(slurp(graph_path, man));
        SearchReport rep = brute_force_magic(g, DistanceSet::parse(d_spec), cap, threads);
        json j{{"graph", rep.graph_name},
               {"D", distance_set_json(rep.D)},
               {"tried", rep.tried},
               {"magic_count", rep.magic_count},
               {"exhaustive", rep.exhaustive},
               {"seconds", rep.seconds}};
        json found = json::array();
        for (auto& l : rep.found) found.push_back(l.values());
        j["found"] = std::move(found);
        emit(out_path, j.dump(2), man);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "oracle search: " << e.what() << "\n";
        return kExitMalformed;
    }
}

int run_oracle_rowsum(int n, std::string out_path, Manifest& man) {
    try {
        RowSumReport rep = validate_row_sum_criteria(n);
        json j{{"n", rep.n},
               {"nonsingular_total", rep.nonsingular_total},
               {"closed_balanced", rep.closed_balanced},
               {"closed_row_sum", rep.closed_row_sum},
               {"open_balanced", rep.open_balanced},
               {"open_row_sum", rep.open_row_sum},
               {"closed_equivalence", rep.closed_equivalence},
               {"open_equivalence", rep.open_equivalence}};
        if (!rep.first_mismatch.empty()) j["first_mismatch"] = rep.first_mismatch;
        emit(out_path, j.dump(2), man);
        return rep.closed_equivalence && rep.open_equivalence ? 0 : kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "oracle rowsum: " << e.what() << "\n";
        return kExitMalformed;
    }
}

int run_oracle_kernel_inclusion(int n, std::string out_path, Manifest& man) {
    try {
        KernelInclusionReport rep = explicit_kernel_inclusion(n);
        json pairs = json::array();
        for (auto& p : rep.pairs)
            pairs.push_back(json{{"pair", p.what},
                                 {"included", p.included},
                                 {"equality", p.equality},
                                 {"pair_kernel_dim", p.pair_kernel_dim}});
        json j{{"n", rep.n},
               {"kernel_dim", rep.kernel_dim},
               {"all_included", rep.all_included},
               {"pairs", std::move(pairs)}};
        emit(out_path, j.dump(2), man);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "oracle kernel-inclusion: " << e.what() << "\n";
        return kExitMalformed;
    }
}

int run_oracle_chain146(int n, std::string out_path, Manifest& man) {
    try {
        Chain146Report rep = validate_146_chain(n);
        json j{{"n", rep.n},
               {"all_balanced", rep.all_balanced},
               {"zero_based_weight", rep.zero_based_weight},
               {"verdict", verdict_json(rep.final_verdict)}};
        emit(out_path, j.dump(2), man);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "oracle chain146: " << e.what() << "\n";
        return kExitMalformed;
    }
}

int run_spectra(const std::string& array_str, int hypercube_n, std::string out_path,
                Manifest& man) {
    try {
        IntersectionArray arr = hypercube_n > 0 ? IntersectionArray::hypercube(hypercube_n)
                                                : IntersectionArray::parse(array_str);
        TridiagonalB B = build_B(arr);
        json j;
        j["array"] = arr.format();
        j["diameter"] = arr.diameter();
        j["degree"] = arr.degree();
        j["order"] = arr.order();
        j["sphere_sizes"] = arr.sphere_sizes();
        j["bipartite"] = arr.bipartite();
        j["antipodal_double_cover"] = arr.antipodal_double_cover();
        j["B"] = B.dense();
        for (int shift : {0, 1}) {
            KernelVector kv = kernel_of(B, shift);
            json k{{"trivial", kv.trivial}};
            if (!kv.trivial) {
                json u = json::array();
                for (auto& q : kv.u) u.push_back(q.str());
                k["u"] = std::move(u);
            }
            j[shift == 0 ? "kernel_B" : "kernel_I_plus_B"] = std::move(k);
        }
        DistancePolynomials poly = distance_polynomials(arr);
        json vp = json::array();
        for (auto& coeffs : poly.coeffs) {
            json one = json::array();
            for (auto& c : coeffs) one.push_back(c.str());
            vp.push_back(std::move(one));
        }
        j["distance_polynomials"] = std::move(vp);
        if (hypercube_n > 0) {
            auto table = KrawtchoukTable::build(hypercube_n);
            json theta = json::array(), rows = json::array();
            for (int jj = 0; jj <= hypercube_n; ++jj) theta.push_back(table.eigenvalue(jj));
            for (int i = 0; i <= hypercube_n; ++i) {
                json row = json::array();
                for (int jj = 0; jj <= hypercube_n; ++jj) row.push_back(table.at(i, jj));
                rows.push_back(std::move(row));
            }
            j["eigenvalues"] = std::move(theta);
            j["krawtchouk"] = std::move(rows);
            if (hypercube_n % 4 == 1) {
                KernelInclusionSums sums = kernel_inclusion_sums(hypercube_n);
                json s = json::array();
                for (auto& e : sums.sums) s.push_back(json{{"sum", e.what}, {"value", e.value}});
                j["kernel_inclusion_sums"] = json{{"p", sums.p}, {"all_zero", sums.all_zero},
                                                  {"entries", std::move(s)}};
            }
        }
        emit(out_path, j.dump(2), man);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "spectra: " << e.what() << "\n";
        return kExitMalformed;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"magiclab: D-magic labelings of hypercubes via GF(2) linear bijections,\n"
                 "exact transform verification, and spectral nonexistence certificates.\n"
                 "\n"
                 "Conventions: vertex v of Q_n is the bit-vector with zeta(v) = v, where bit\n"
                 "index 0 is the least significant bit of zeta. Matrices and bit strings\n"
                 "serialize as '0'/'1' rows with index 0 first, most significant index last.\n"
                 "Labeling files carry one label per line (vertex 0 first); blank lines and\n"
                 "'#' comments are ignored. Labels are 1-based. Intersection arrays use the\n"
                 "literature notation \"{b0,b1,...;c1,c2,...}\"."};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    int threads_flag = 0;
    bool json_only = false;
    std::string out_path;
    app.add_option("--seed", seed, "seed for all randomized search (default 0, never entropy)");
    app.add_option("--threads", threads_flag,
                   "worker threads (default: MAGICLAB_THREADS or available cores)");
    app.add_flag("--json", json_only, "suppress non-JSON chatter on stderr");
    app.add_option("--out", out_path, "write the primary output to this file instead of stdout");

    auto* c_construct = app.add_subcommand(
        "construct", "construct a verified labeling (closed: n=1 mod 4; open: n=2 mod 4; split)");
    std::string kind;
    int n = 0;
    c_construct->add_option("kind", kind, "closed | open | split")
        ->required()
        ->check(CLI::IsMember({"closed", "open", "split"}));
    c_construct->add_option("n", n, "hypercube dimension")->required();

    auto* c_verify = app.add_subcommand("verify", "verify a labeling file against a graph and D");
    std::string labeling_path, graph_path, d_spec;
    int hyper_n = 0, two_n = 0;
    c_verify->add_option("labeling", labeling_path, "labeling file")->required();
    c_verify->add_option("--hypercube", hyper_n, "implicit hypercube Q_n");
    c_verify->add_option("--two-cubes", two_n, "disjoint union of two Q_m");
    c_verify->add_option("--graph", graph_path, "edge-list graph file (first line: N M)");
    c_verify->add_option("--D", d_spec, "distance set, e.g. \"0,2-3,5\"")->required();

    auto* c_certify =
        app.add_subcommand("certify", "emit a nonexistence certificate or report no obstruction");
    std::string array_str, mode = "open";
    int cert_hyper_n = 0;
    bool all_rules = false;
    c_certify->add_option("array", array_str, "intersection array, e.g. \"{4,3,2,1;1,2,3,4}\"");
    c_certify->add_option("--hypercube", cert_hyper_n, "target Q_n instead of an array");
    c_certify->add_option("--mode", mode, "open (distance magic) | closed")
        ->check(CLI::IsMember({"open", "closed"}));
    c_certify->add_flag("--all-rules", all_rules, "report every firing rule, not just the first");

    auto* c_enum = app.add_subcommand(
        "enumerate", "enumerate all magic distance sets of a labeling (n <= 14)");
    std::string enum_labeling;
    int enum_n = 0;
    c_enum->add_option("labeling", enum_labeling, "labeling file")->required();
    c_enum->add_option("--hypercube", enum_n, "hypercube dimension")->required();

    auto* c_oracle = app.add_subcommand("oracle", "brute-force ground truth at tiny scale");
    c_oracle->require_subcommand(1);
    auto* o_search = c_oracle->add_subcommand("search", "exhaustive D-magic labeling search (<= 10 vertices)");
    std::string builder = "q3", oracle_graph_path, oracle_d = "1";
    std::size_t cap = 16;
    o_search->add_option("--builder", builder, "q2 | q3 | q4 | c4 | petersen | hadamard16");
    o_search->add_option("--graph", oracle_graph_path, "edge-list graph file");
    o_search->add_option("--D", oracle_d, "distance set");
    o_search->add_option("--cap", cap, "max labelings to store");
    auto* o_rowsum = c_oracle->add_subcommand(
        "rowsum", "exhaustively validate the closed/open row-sum criteria (n <= 4)");
    int rowsum_n = 3;
    o_rowsum->add_option("--n", rowsum_n, "dimension (2..4)");
    auto* o_kernel = c_oracle->add_subcommand(
        "kernel-inclusion", "explicit distance-matrix kernel inclusions (n = 1 mod 4)");
    int kernel_n = 5;
    o_kernel->add_option("--n", kernel_n, "dimension");
    auto* o_chain = c_oracle->add_subcommand("chain146", "balanced-set chain validation (n = 1 mod 4)");
    int chain_n = 5;
    o_chain->add_option("--n", chain_n, "dimension");

    auto* c_spectra = app.add_subcommand("spectra", "intersection-array spectra: B, kernels, polynomials");
    std::string spectra_array;
    int spectra_n = 0;
    c_spectra->add_option("array", spectra_array, "intersection array string");
    c_spectra->add_option("--hypercube", spectra_n, "hypercube dimension");

    CLI11_PARSE(app, argc, argv);

    Manifest man;
    man.seed = seed;
    man.threads = threads_from(threads_flag);
    for (int i = 0; i < argc; ++i) man.args.push_back(argv[i]);

    int rc = kExitInternal;
    try {
        if (*c_construct) {
            man.command = "construct";
            rc = run_construct(kind, n, seed, out_path, man);
        } else if (*c_verify) {
            man.command = "verify";
            rc = run_verify(labeling_path, hyper_n, two_n, graph_path, d_spec, out_path, man);
        } else if (*c_certify) {
            man.command = "certify";
            rc = run_certify(array_str, cert_hyper_n, mode, all_rules, out_path, man);
        } else if (*c_enum) {
            man.command = "enumerate";
            rc = run_enumerate(enum_labeling, enum_n, seed, out_path, man);
        } else if (*c_oracle) {
            man.command = "oracle";
            if (*o_search)
                rc = run_oracle_search(builder, oracle_graph_path, oracle_d, cap, man.threads,
                                       out_path, man);
            else if (*o_rowsum)
                rc = run_oracle_rowsum(rowsum_n, out_path, man);
            else if (*o_kernel)
                rc = run_oracle_kernel_inclusion(kernel_n, out_path, man);
            else
                rc = run_oracle_chain146(chain_n, out_path, man);
        } else if (*c_spectra) {
            man.command = "spectra";
            rc = run_spectra(spectra_array, spectra_n, out_path, man);
        }
    } catch (const std::exception& e) {
        std::cerr << "magiclab: " << e.what() << "\n";
        rc = kExitInternal;
    }

    if (!out_path.empty()) {
        try {
            std::ofstream mf(out_path + ".manifest.json");
            mf << man.to_json().dump(2) << "\n";
        } catch (...) {
        }
    }
    if (!json_only) std::cerr << man.to_json().dump() << "\n";
    return rc;
}
