#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "padlat/checks.hpp"
#include "padlat/oracle.hpp"

using namespace padlat;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Lattice load_lattice(const std::string& path) {
    return lattice_from_json(parse_document(read_file(path), path), path);
}

Relation load_relation(const std::string& path) {
    return relation_from_json(parse_document(read_file(path), path), path);
}

std::vector<Scalar> load_vector(const std::string& path) {
    return vector_from_json(parse_document(read_file(path), path), path);
}

int emit(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw ParseError(out_path + ": cannot open output file");
        out << text;
    }
    return 0;
}

Json params_json(const CheckParams& par, bool with_bound, bool with_window) {
    Json j;
    j["p"] = par.p;
    j["n"] = par.n;
    if (with_bound)
        j["bound"] = par.bound;
    if (with_window)
        j["window"] = par.window;
    j["trials"] = par.trials;
    j["seed"] = par.seed;
    return j;
}

Json merge_into(Json base, const Json& extra) {
    for (auto it = extra.begin(); it != extra.end(); ++it)
        base[it.key()] = it.value();
    return base;
}

void add_check_flags(CLI::App* cmd, CheckParams& par, bool with_bound, bool with_window) {
    cmd->add_option("--p", par.p, "prime");
    cmd->add_option("--n", par.n, "ambient dimension");
    if (with_bound)
        cmd->add_option("--bound", par.bound, "exponent bound B");
    if (with_window)
        cmd->add_option("--window", par.window, "window radius a");
    cmd->add_option("--trials", par.trials, "number of random trials");
    cmd->add_option("--seed", par.seed, "master seed");
    cmd->add_option("--threads", par.threads, "worker threads (0 = auto)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic lattice calculator and property checker"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write JSON output to this file instead of stdout")
        ->configurable(false);

    std::function<int()> action;

    // ---- object commands ------------------------------------------------
    std::string in1, in2;
    auto one_input = [&](CLI::App* cmd, const char* what) {
        cmd->add_option("input", in1, what);
        cmd->add_option("--json", in1, std::string("path to ") + what)->configurable(false);
        cmd->final_callback([cmd, &in1]() {
            if (in1.empty())
                throw CLI::RequiredError(cmd->get_name() + ": input file");
        });
    };
    auto two_inputs = [&](CLI::App* cmd, const char* a, const char* b) {
        cmd->add_option("first", in1, a)->required();
        cmd->add_option("second", in2, b)->required();
    };

    CLI::App* canon = app.add_subcommand("canon", "canonical basis of a lattice");
    one_input(canon, "lattice JSON file");
    canon->callback([&]() { action = [&]() { return emit(lattice_to_json(load_lattice(in1)), out_path); }; });

    CLI::App* dist = app.add_subcommand("dist", "complex distance of a lattice pair");
    two_inputs(dist, "lattice R", "lattice S");
    dist->callback([&]() {
        action = [&]() {
            return emit(complex_distance_to_json(
                            complex_distance(load_lattice(in1), load_lattice(in2))),
                        out_path);
        };
    });

    CLI::App* sum_cmd = app.add_subcommand("sum", "smallest lattice containing both inputs");
    two_inputs(sum_cmd, "lattice L", "lattice M");
    sum_cmd->callback([&]() {
        action = [&]() {
            return emit(lattice_to_json(sum(load_lattice(in1), load_lattice(in2))), out_path);
        };
    });

    CLI::App* meet_cmd = app.add_subcommand("meet", "largest lattice inside both inputs");
    two_inputs(meet_cmd, "lattice L", "lattice M");
    meet_cmd->callback([&]() {
        action = [&]() {
            return emit(lattice_to_json(meet(load_lattice(in1), load_lattice(in2))), out_path);
        };
    });

    CLI::App* dual_cmd = app.add_subcommand("dual", "dual lattice");
    one_input(dual_cmd, "lattice JSON file");
    dual_cmd->callback(
        [&]() { action = [&]() { return emit(lattice_to_json(dual(load_lattice(in1))), out_path); }; });

    CLI::App* norm_cmd = app.add_subcommand("norm", "norm exponent of a vector");
    two_inputs(norm_cmd, "lattice L", "vector file (JSON array of scalars)");
    norm_cmd->callback([&]() {
        action = [&]() {
            std::optional<long> e = norm_exponent(load_lattice(in1), load_vector(in2));
            Json j;
            j["exponent"] = e ? Json(*e) : Json(nullptr); // null = zero vector
            return emit(j, out_path);
        };
    });

    CLI::App* member_cmd = app.add_subcommand("member", "lattice membership of a vector");
    two_inputs(member_cmd, "lattice L", "vector file (JSON array of scalars)");
    member_cmd->callback([&]() {
        action = [&]() {
            Json j;
            j["member"] = member(load_lattice(in1), load_vector(in2));
            return emit(j, out_path);
        };
    });

    CLI::App* parts = app.add_subcommand("rel-parts", "domain, image, kernel, indefiniteness");
    one_input(parts, "relation JSON file");
    parts->callback([&]() {
        action = [&]() {
            Relation h = load_relation(in1);
            Json j;
            j["dom"] = lattice_to_json(dom(h));
            j["im"] = lattice_to_json(im(h));
            j["ker"] = lattice_to_json(ker(h));
            j["indef"] = lattice_to_json(indef(h));
            return emit(j, out_path);
        };
    });

    CLI::App* ract = app.add_subcommand("rel-act", "apply a relation to a lattice");
    two_inputs(ract, "relation H", "lattice R");
    ract->callback([&]() {
        action = [&]() {
            return emit(lattice_to_json(act(load_relation(in1), load_lattice(in2))), out_path);
        };
    });

    CLI::App* rcomp = app.add_subcommand("rel-compose", "relation product (second applied first)");
    two_inputs(rcomp, "relation G", "relation H");
    rcomp->callback([&]() {
        action = [&]() {
            return emit(relation_to_json(compose(load_relation(in1), load_relation(in2))),
                        out_path);
        };
    });

    CLI::App* rstruct = app.add_subcommand("rel-structure", "structure map of a relation");
    one_input(rstruct, "relation JSON file");
    rstruct->callback([&]() {
        action = [&]() {
            Relation h = load_relation(in1);
            return emit(matrix_to_json(h.context(), structure_map(h)), out_path);
        };
    });

    CLI::App* gapprox = app.add_subcommand("graph-approx", "lattice approximation of a matrix graph");
    long approx_j = 0;
    std::string lattice_path;
    one_input(gapprox, "matrix JSON file");
    gapprox->add_option("--j", approx_j, "approximation index")->required();
    gapprox->add_option("--lattice", lattice_path,
                        "also report the stabilization threshold and action on this lattice");
    gapprox->callback([&]() {
        action = [&]() {
            PadicContext ctx(2);
            Matrix g = matrix_from_json(parse_document(read_file(in1), in1), in1, &ctx);
            Relation z = graph_approx(ctx, g, approx_j);
            Json j;
            if (!lattice_path.empty()) {
                Lattice l = load_lattice(lattice_path);
                j["threshold"] = graph_approx_threshold(ctx, g, l);
                j["act"] = lattice_to_json(act(z, l));
            }
            j["relation"] = relation_to_json(z);
            return emit(j, out_path);
        };
    });

    // ---- check commands --------------------------------------------------
    CheckParams par;

    CLI::App* ctheorem = app.add_subcommand("check-theorem", "compression theorem harness");
    add_check_flags(ctheorem, par, true, false);
    ctheorem->callback([&]() {
        action = [&]() {
            CheckReport rep = check_theorem(par);
            Json j = merge_into(params_json(par, true, false), rep.to_json());
            j["command"] = "check-theorem";
            emit(j, out_path);
            return rep.violations == 0 ? 0 : 1;
        };
    });

    CLI::App* clemmas = app.add_subcommand("check-lemmas", "lemma and semigroup-law harnesses");
    add_check_flags(clemmas, par, true, true);
    clemmas->callback([&]() {
        action = [&]() {
            std::vector<CheckReport> reps = check_lemma_suite(par);
            Json j = params_json(par, true, true);
            j["command"] = "check-lemmas";
            j["violations"] = total_violations(reps);
            Json arr = Json::array();
            for (const CheckReport& r : reps)
                arr.push_back(r.to_json());
            j["checks"] = std::move(arr);
            emit(j, out_path);
            return total_violations(reps) == 0 ? 0 : 1;
        };
    });

    CLI::App* odiff = app.add_subcommand("oracle-diff", "exact vs brute-force oracle comparison");
    add_check_flags(odiff, par, false, true);
    odiff->callback([&]() {
        action = [&]() {
            std::vector<CheckReport> reps = check_oracle_ops(par);
            Json j = params_json(par, false, true);
            j["command"] = "oracle-diff";
            j["violations"] = total_violations(reps);
            Json arr = Json::array();
            for (const CheckReport& r : reps)
                arr.push_back(r.to_json());
            j["checks"] = std::move(arr);
            emit(j, out_path);
            return total_violations(reps) == 0 ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
