// Command-line front end: decomposition pipelines and verifiers with JSON
// certificate I/O. Exit codes: 0 = verified success, 1 = mathematical
// counterexample / verification failure, 2 = invalid input.

#include "cgt/json_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

using namespace cgt;

namespace {

struct Options {
    std::vector<std::string> in;
    std::string out;
    std::uint64_t seed = 0;
    std::size_t max_size = FiniteGroup::kSizeGuard;
};

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        Json j;
        in >> j;
        return j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

// Atomic write: stage next to the target, then rename over it.
void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + tmp);
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return j[key];
}

ElementSet parse_set(const FiniteGroup& G, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("\"set\" must be an array");
    std::vector<Perm> v;
    for (const auto& p : j) {
        Perm q = perm_from_json(p, G.degree());
        if (!G.contains(q))
            throw std::invalid_argument("set element " + q.cycle_string() +
                                        " is not in the group");
        v.push_back(q);
    }
    return make_set(std::move(v));
}

int run_thompson_decompose(const Options& opt) {
    if (opt.in.size() != 2)
        throw std::invalid_argument(
            "thompson decompose needs two --in files: the base map and the "
            "commutator list");
    PL2Map f = pl2_from_json(read_json(opt.in[0]));
    CommutatorList<PL2Map> cs = pl2_commutators_from_json(read_json(opt.in[1]));
    auto cert = six_conjugates(cs, f);
    Pl2Group G;
    if (!verify_certificate(G, cert)) {
        std::cerr << "internal error: certificate failed re-verification\n";
        return 1;
    }
    write_out(opt.out, dump_json(pl2_certificate_to_json(cert)));
    std::cout << "factors: " << cert.factors.size() << "\n";
    return 0;
}

int run_thompson_verify(const Options& opt) {
    if (opt.in.size() != 1) throw std::invalid_argument("thompson verify needs one --in file");
    auto cert = pl2_certificate_from_json(read_json(opt.in[0]));
    Pl2Group G;
    if (!verify_certificate(G, cert)) {
        std::cout << "verification failed\n";
        return 1;
    }
    std::cout << "verified: " << cert.factors.size() << " factors\n";
    return 0;
}

int run_sl_decompose(const Options& opt) {
    if (opt.in.size() != 1) throw std::invalid_argument("sl decompose needs one --in file");
    IntMatrix m = intmatrix_from_json(read_json(opt.in[0]));
    auto cert = matrix_as_T_conjugates(m);
    MatGroupOps G{m.dim()};
    if (!verify_certificate(G, cert)) {
        std::cerr << "internal error: certificate failed re-verification\n";
        return 1;
    }
    write_out(opt.out, dump_json(mat_certificate_to_json(cert)));
    std::cout << "factors: " << cert.factors.size() << "\n";
    return 0;
}

int run_sl_width(const Options& opt) {
    if (opt.in.size() != 1) throw std::invalid_argument("sl width needs one --in file");
    Json j = read_json(opt.in[0]);
    int n = field(j, "n").get<int>();
    int p = field(j, "p").get<int>();
    auto report = bfs_width_fp(n, p);
    write_out(opt.out, dump_json(fp_width_report_to_json(report)));
    return 0;
}

int run_freeprod_decompose(const Options& opt) {
    if (opt.in.size() != 1) throw std::invalid_argument("freeprod decompose needs one --in file");
    Json j = read_json(opt.in[0]);
    FactorSpec spec = factor_spec_from_json(field(j, "spec"));
    if (spec.count() != 2 || !spec.all_order_two())
        throw std::invalid_argument("decompose supports only the order-2, order-2 spec");
    FPWord w = fpword_from_json(spec, field(j, "word"));
    auto dec = z2z2_decompose(spec, w);
    if (!verify_decomposition(spec, dec)) {
        std::cerr << "internal error: decomposition failed re-verification\n";
        return 1;
    }
    write_out(opt.out, dump_json(z2z2_decomposition_to_json(spec, dec)));
    std::cout << "factors: " << dec.factors.size() << "\n";
    return 0;
}

int run_freeprod_palindrome_check(const Options& opt) {
    if (opt.in.size() != 1)
        throw std::invalid_argument("freeprod palindrome-check needs one --in file");
    Json j = read_json(opt.in[0]);
    FactorSpec spec = factor_spec_from_json(field(j, "spec"));
    int word_len = field(j, "word_len").get<int>();
    int conj_len = field(j, "conj_len").get<int>();
    if (word_len < 1 || conj_len < 1) throw std::invalid_argument("bounds must be positive");
    auto cex = palindrome_closure_counterexample(spec, word_len, conj_len);
    Json report{{"word_len", word_len}, {"conj_len", conj_len}, {"closed", !cex.has_value()}};
    if (cex) {
        report["palindrome"] = fpword_to_json(cex->first);
        report["conjugator"] = fpword_to_json(cex->second);
    }
    write_out(opt.out, dump_json(report));
    if (cex) {
        std::cout << "counterexample found\n";
        return 1;
    }
    return 0;
}

int run_finite_width(const Options& opt) {
    if (opt.in.size() != 1) throw std::invalid_argument("finite width needs one --in file");
    Json j = read_json(opt.in[0]);
    FiniteGroup G = group_from_json(field(j, "group"));
    if (G.size() > opt.max_size) throw std::invalid_argument("group size exceeds --max-size");
    ElementSet S = class_closure(G, parse_set(G, field(j, "set")));
    auto report = width(G, S);
    write_out(opt.out, dump_json(width_report_to_json(report)));
    return 0;
}

int run_finite_bergman(const Options& opt) {
    if (opt.in.size() != 1) throw std::invalid_argument("finite bergman needs one --in file");
    Json j = read_json(opt.in[0]);
    FiniteGroup G = group_from_json(field(j, "group"));
    if (G.size() > opt.max_size) throw std::invalid_argument("group size exceeds --max-size");
    FiniteGroup H = group_from_json(field(j, "subgroup"));
    if (!G.is_subgroup(H)) throw std::invalid_argument("\"subgroup\" is not a subgroup");
    ElementSet U = parse_set(G, field(j, "set"));
    int n = field(j, "n").get<int>();
    bool ok = bergman_lemma_check(G, H, U, n);
    write_out(opt.out, dump_json(Json{{"n", n}, {"holds", ok}}));
    if (!ok) {
        std::cout << "counterexample: the ball intersection does not generate\n";
        return 1;
    }
    return 0;
}

int run_finite_extension(const Options& opt) {
    if (opt.in.size() != 1) throw std::invalid_argument("finite extension needs one --in file");
    Json j = read_json(opt.in[0]);
    FiniteGroup G = group_from_json(field(j, "group"));
    if (G.size() > opt.max_size) throw std::invalid_argument("group size exceeds --max-size");
    FiniteGroup H = group_from_json(field(j, "subgroup"));
    ElementSet U = class_closure(G, parse_set(G, field(j, "set")));
    auto r = extension_bound_check(G, H, U);
    Json report{{"quotient_width", r.quotient_width},
                {"subgroup_width", r.subgroup_width},
                {"group_width", r.group_width},
                {"bound_holds", r.bound_holds},
                {"intersection_class_closed_in_subgroup", r.intersection_class_closed_in_h}};
    write_out(opt.out, dump_json(report));
    if (!r.bound_holds || !r.intersection_class_closed_in_h) {
        std::cout << "counterexample: extension bound violated\n";
        return 1;
    }
    return 0;
}

int run_finite_norms(const Options& opt) {
    if (opt.in.size() != 1) throw std::invalid_argument("finite norms needs one --in file");
    Json j = read_json(opt.in[0]);
    FiniteGroup G = group_from_json(field(j, "group"));
    if (G.size() > opt.max_size) throw std::invalid_argument("group size exceeds --max-size");
    ElementSet S = class_closure(G, parse_set(G, field(j, "set")));
    NormTable L = word_norm(G, S);
    if (auto w = audit_norm_axioms(L)) {
        std::cout << "counterexample: " << *w << "\n";
        return 1;
    }
    auto d = induced_metric(L);
    if (auto w = audit_metric(L, d)) {
        std::cout << "counterexample: " << *w << "\n";
        return 1;
    }
    auto chain = chain_from_action(G, left_action_on_self(G, L),
                                   static_cast<int>(G.index_of(G.identity())));
    Json report{{"group_order", G.size()},
                {"set_size", S.size()},
                {"norm_axioms", "ok"},
                {"metric_identities", "ok"},
                {"chain_terminal_index", chain.terminal_index},
                {"orbit_diameter", chain.orbit_diameter}};
    write_out(opt.out, dump_json(report));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified decompositions and width reports"};
    app.require_subcommand(1);

    Options opt;
    std::function<int(const Options&)> action;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--in", opt.in, "input JSON file(s)");
        cmd->add_option("--out", opt.out, "output file (stdout when omitted)");
        cmd->add_option("--seed", opt.seed, "PRNG seed")->capture_default_str();
        cmd->add_option("--max-size", opt.max_size, "group size guard")->capture_default_str();
    };
    auto verb = [&](CLI::App* parent, const char* name, const char* help,
                    int (*fn)(const Options&)) {
        CLI::App* cmd = parent->add_subcommand(name, help);
        add_common(cmd);
        cmd->callback([&action, fn] { action = fn; });
        return cmd;
    };

    CLI::App* thompson = app.add_subcommand("thompson", "piecewise-linear decompositions");
    thompson->require_subcommand(1);
    verb(thompson, "decompose", "write a six-conjugate certificate", run_thompson_decompose);
    verb(thompson, "verify", "re-verify a certificate file", run_thompson_verify);

    CLI::App* sl = app.add_subcommand("sl", "integer and mod-p special linear groups");
    sl->require_subcommand(1);
    verb(sl, "decompose", "write a transvection-conjugate certificate", run_sl_decompose);
    verb(sl, "width", "exhaustive width over all transvections", run_sl_width);

    CLI::App* freeprod = app.add_subcommand("freeprod", "free products of cyclic groups");
    freeprod->require_subcommand(1);
    verb(freeprod, "decompose", "two-conjugate decomposition over Z2 * Z2",
         run_freeprod_decompose);
    verb(freeprod, "palindrome-check", "exhaustive palindrome conjugation check",
         run_freeprod_palindrome_check);

    CLI::App* finite = app.add_subcommand("finite", "finite permutation groups");
    finite->require_subcommand(1);
    verb(finite, "width", "exact width over a class-closed set", run_finite_width);
    verb(finite, "bergman", "coset-ball subgroup generation check", run_finite_bergman);
    verb(finite, "extension", "extension width bound check", run_finite_extension);
    verb(finite, "norms", "norm, metric and chain audits", run_finite_norms);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
