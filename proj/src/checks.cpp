#include "padlat/checks.hpp"

#include <numeric>
#include <thread>

#include "padlat/oracle.hpp"

namespace padlat {

void CheckReport::record_violation(long index, Json cx) {
    ++violations;
    if (first_index < 0 || index < first_index) {
        first_index = index;
        first_counterexample = std::move(cx);
    }
}

void CheckReport::merge(const CheckReport& shard) {
    violations += shard.violations;
    strict += shard.strict;
    if (shard.first_index >= 0 &&
        (first_index < 0 || shard.first_index < first_index)) {
        first_index = shard.first_index;
        first_counterexample = shard.first_counterexample;
    }
}

Json CheckReport::to_json() const {
    Json j;
    j["name"] = name;
    j["trials"] = trials;
    j["violations"] = violations;
    if (name == "theorem-compression")
        j["strict_compression_trials"] = strict;
    j["first_counterexample"] = first_counterexample;
    if (!note.empty())
        j["note"] = note;
    return j;
}

long total_violations(const std::vector<CheckReport>& reports) {
    long total = 0;
    for (const CheckReport& r : reports)
        total += r.violations;
    return total;
}

namespace {

// Runs trial bodies across shards with deterministic aggregation: per-trial
// seeds make every trial self-contained, and merge() keeps the lowest-index
// counterexample no matter how trials were distributed.
template <typename Fn>
CheckReport run_trials(const std::string& name, long trials, int threads, Fn body) {
    CheckReport total;
    total.name = name;
    total.trials = trials;
    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1)
        nthreads = 1;
    if (trials > 0 && nthreads > trials)
        nthreads = static_cast<int>(trials);

    std::vector<CheckReport> shards(static_cast<std::size_t>(nthreads));
    auto run_shard = [&](int s) {
        for (long i = s; i < trials; i += nthreads) {
            try {
                body(i, shards[s]);
            } catch (const std::exception& e) {
                shards[s].record_violation(i, Json{{"trial", i}, {"error", e.what()}});
            }
        }
    };
    if (nthreads == 1) {
        run_shard(0);
    } else {
        std::vector<std::thread> pool;
        for (int s = 0; s < nthreads; ++s)
            pool.emplace_back(run_shard, s);
        for (std::thread& t : pool)
            t.join();
    }
    for (const CheckReport& s : shards)
        total.merge(s);
    return total;
}

// Is b inside the closed interval between 0 and a?
bool between_zero_and(long a, long b) {
    return a >= 0 ? (0 <= b && b <= a) : (a <= b && b <= 0);
}

bool strictly_between_zero_and(long a, long b) {
    return a > 0 ? (0 < b && b < a) : (a < 0 && a < b && b < 0);
}

Matrix take_columns(const Matrix& m, int begin, int count) {
    Matrix out(m.rows(), count);
    for (int j = 0; j < count; ++j)
        for (int i = 0; i < m.rows(); ++i)
            out(i, j) = m(i, begin + j);
    return out;
}

std::vector<long> reconstruct_distance(const QuotientInvariants& q, int n) {
    std::vector<long> k(q.pos.begin(), q.pos.end());
    for (long z = n - static_cast<long>(q.pos.size()) - static_cast<long>(q.neg.size());
         z > 0; --z)
        k.push_back(0);
    for (auto it = q.neg.rbegin(); it != q.neg.rend(); ++it)
        k.push_back(-*it);
    return k;
}

} // namespace

CheckReport check_theorem(const CheckParams& par) {
    PadicContext ctx(par.p);
    return run_trials("theorem-compression", par.trials, par.threads,
                      [&](long i, CheckReport& shard) {
        Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
        Lattice r = random_lattice(ctx, par.n, par.bound, rng);
        Lattice s = random_lattice(ctx, par.n, par.bound, rng);
        Relation h = random_relation(ctx, par.n, par.bound, rng);
        std::vector<long> krs = complex_distance(r, s).k;
        std::vector<long> kh = complex_distance(act(h, r), act(h, s)).k;
        bool ok = true, strict_any = false;
        for (int j = 0; j < par.n; ++j) {
            if (!between_zero_and(krs[j], kh[j]))
                ok = false;
            if (strictly_between_zero_and(krs[j], kh[j]))
                strict_any = true;
        }
        if (strict_any)
            ++shard.strict;
        if (!ok)
            shard.record_violation(i, Json{{"trial", i},
                                           {"H", relation_to_json(h)},
                                           {"R", lattice_to_json(r)},
                                           {"S", lattice_to_json(s)},
                                           {"k_RS", krs},
                                           {"k_HR_HS", kh}});
    });
}

CheckReport check_duality(const CheckParams& par) {
    PadicContext ctx(par.p);
    return run_trials("lemma3-duality", par.trials, par.threads,
                      [&](long i, CheckReport& shard) {
        Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
        Lattice l = random_lattice(ctx, par.n, par.bound, rng);
        Lattice m = random_lattice(ctx, par.n, par.bound, rng);
        bool ok = dual(dual(l)) == l &&
                  complex_distance(l, m) == complex_distance(dual(m), dual(l)) &&
                  dual(sum(l, m)) == meet(dual(l), dual(m)) &&
                  dual(meet(l, m)) == sum(dual(l), dual(m));
        if (!ok)
            shard.record_violation(
                i, Json{{"trial", i}, {"L", lattice_to_json(l)}, {"M", lattice_to_json(m)}});
    });
}

CheckReport check_lemma1(const CheckParams& par) {
    PadicContext ctx(par.p);
    const int n = par.n;
    return run_trials("lemma1-minimax", par.trials, par.threads,
                      [&, n](long i, CheckReport& shard) {
        Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
        Lattice r = random_lattice(ctx, n, par.bound, rng);
        Lattice s = random_lattice(ctx, n, par.bound, rng);
        std::vector<long> ks = complex_distance(r, s).k;
        Matrix f = adapted_basis(r, s);
        auto fail = [&](const char* stage, int j, const Subspace& w) {
            shard.record_violation(i, Json{{"trial", i},
                                           {"stage", stage},
                                           {"j", j},
                                           {"W", matrix_to_json(ctx, w.basis())},
                                           {"R", lattice_to_json(r)},
                                           {"S", lattice_to_json(s)}});
        };
        for (int t = 0; t < 10; ++t) {
            int j = static_cast<int>(rng.range(1, n));
            Subspace w(ctx, take_columns(random_invertible(ctx, n, par.bound, rng), 0, j));
            if (!(minimax_value(r, s, w) <= ks[j - 1])) {
                fail("sampled-min", j, w);
                return;
            }
            int cod = n - j + 1;
            Subspace w2(ctx, take_columns(random_invertible(ctx, n, par.bound, rng), 0, cod));
            long top = complex_distance(restrict_to_subspace(r, w2),
                                        restrict_to_subspace(s, w2)).k.front();
            if (!(top >= ks[j - 1])) {
                fail("sampled-max", j, w2);
                return;
            }
        }
        for (int j = 1; j <= n; ++j) {
            Subspace w(ctx, take_columns(f, 0, j));
            if (minimax_value(r, s, w) != ks[j - 1]) {
                fail("attainment-min", j, w);
                return;
            }
            Subspace w2(ctx, take_columns(f, j - 1, n - j + 1));
            long top = complex_distance(restrict_to_subspace(r, w2),
                                        restrict_to_subspace(s, w2)).k.front();
            if (top != ks[j - 1]) {
                fail("attainment-max", j, w2);
                return;
            }
        }
    });
}

CheckReport check_lemma2(const CheckParams& par) {
    PadicContext ctx(par.p);
    Window w(ctx, par.window);
    if (window_group_size(w, par.n) > kWindowBudget) {
        CheckReport rep;
        rep.name = "lemma2-oracle";
        rep.note = "skipped: window enumeration budget exceeded";
        return rep;
    }
    return run_trials("lemma2-oracle", par.trials, par.threads,
                      [&](long i, CheckReport& shard) {
        Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
        Lattice l = random_lattice(ctx, par.n, par.window, rng);
        Lattice m = random_lattice(ctx, par.n, par.window, rng);
        QuotientInvariants exact = quotient_invariants(l, m);
        QuotientInvariants counted =
            oracle_group_invariants(project_to_window(l, w), project_to_window(m, w));
        bool ok = exact == counted &&
                  reconstruct_distance(counted, par.n) == complex_distance(l, m).k;
        if (!ok)
            shard.record_violation(i, Json{{"trial", i},
                                           {"L", lattice_to_json(l)},
                                           {"M", lattice_to_json(m)},
                                           {"exact", quotient_invariants_to_json(exact)},
                                           {"oracle", quotient_invariants_to_json(counted)}});
    });
}

namespace {

CheckReport check_pair_compression(const CheckParams& par, const std::string& name,
                                   bool use_meet) {
    PadicContext ctx(par.p);
    return run_trials(name, par.trials, par.threads, [&, use_meet](long i, CheckReport& shard) {
        Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
        Lattice l = random_lattice(ctx, par.n, par.bound, rng);
        Lattice m = random_lattice(ctx, par.n, par.bound, rng);
        Lattice nn = random_lattice(ctx, par.n, par.bound, rng);
        std::vector<long> target = complex_distance(m, nn).k;
        std::vector<long> got = use_meet
            ? complex_distance(meet(l, m), meet(l, nn)).k
            : complex_distance(sum(l, m), sum(l, nn)).k;
        for (int j = 0; j < par.n; ++j)
            if (!between_zero_and(target[j], got[j])) {
                shard.record_violation(i, Json{{"trial", i},
                                               {"L", lattice_to_json(l)},
                                               {"M", lattice_to_json(m)},
                                               {"N", lattice_to_json(nn)},
                                               {"k_MN", target},
                                               {"k_compressed", got}});
                return;
            }
    });
}

} // namespace

CheckReport check_lemma4(const CheckParams& par) {
    return check_pair_compression(par, "lemma4-meet-compression", true);
}

CheckReport check_lemma5(const CheckParams& par) {
    PadicContext ctx(par.p);
    return run_trials("lemma5-norm-ratio", par.trials, par.threads,
                      [&](long i, CheckReport& shard) {
        Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
        Lattice l = random_lattice(ctx, par.n, par.bound, rng);
        Lattice m = random_lattice(ctx, par.n, par.bound, rng);
        Lattice nn = random_lattice(ctx, par.n, par.bound, rng);
        std::vector<Scalar> v = random_vector(ctx, par.n, par.bound, rng);
        long target = *norm_exponent(m, v) - *norm_exponent(nn, v);
        long got = *norm_exponent(meet(l, m), v) - *norm_exponent(meet(l, nn), v);
        if (!between_zero_and(target, got))
            shard.record_violation(i, Json{{"trial", i},
                                           {"L", lattice_to_json(l)},
                                           {"M", lattice_to_json(m)},
                                           {"N", lattice_to_json(nn)},
                                           {"v", vector_to_json(v)},
                                           {"target_exponent", target},
                                           {"meet_exponent", got}});
    });
}

CheckReport check_lemma6(const CheckParams& par) {
    return check_pair_compression(par, "lemma6-sum-compression", false);
}

CheckReport check_decomposition(const CheckParams& par) {
    PadicContext ctx(par.p);
    return run_trials("decomposition", par.trials, par.threads,
                      [&](long i, CheckReport& shard) {
        Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
        Relation h = random_relation(ctx, par.n, par.bound, rng);
        Lattice l = random_lattice(ctx, par.n, par.bound, rng);
        bool exponents_match =
            complex_distance(dom(h), ker(h)) == complex_distance(im(h), indef(h));
        bool ok = exponents_match && decomposition_identity(h, l);
        if (!ok)
            shard.record_violation(i, Json{{"trial", i},
                                           {"H", relation_to_json(h)},
                                           {"L", lattice_to_json(l)},
                                           {"exponents_match", exponents_match}});
    });
}

CheckReport check_associativity(const CheckParams& par) {
    PadicContext ctx(par.p);
    return run_trials("associativity", par.trials, par.threads,
                      [&](long i, CheckReport& shard) {
        Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
        Relation f = random_relation(ctx, par.n, par.bound, rng);
        Relation g = random_relation(ctx, par.n, par.bound, rng);
        Relation h = random_relation(ctx, par.n, par.bound, rng);
        if (compose(f, compose(g, h)) != compose(compose(f, g), h))
            shard.record_violation(i, Json{{"trial", i},
                                           {"F", relation_to_json(f)},
                                           {"G", relation_to_json(g)},
                                           {"H", relation_to_json(h)}});
    });
}

CheckReport check_action_compat(const CheckParams& par) {
    PadicContext ctx(par.p);
    return run_trials("action-compatibility", par.trials, par.threads,
                      [&](long i, CheckReport& shard) {
        Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
        Relation g = random_relation(ctx, par.n, par.bound, rng);
        Relation h = random_relation(ctx, par.n, par.bound, rng);
        Lattice r = random_lattice(ctx, par.n, par.bound, rng);
        if (act(compose(g, h), r) != act(g, act(h, r)))
            shard.record_violation(i, Json{{"trial", i},
                                           {"G", relation_to_json(g)},
                                           {"H", relation_to_json(h)},
                                           {"R", lattice_to_json(r)}});
    });
}

CheckReport check_graph_stabilization(const CheckParams& par) {
    PadicContext ctx(par.p);
    return run_trials("graph-stabilization", par.trials, par.threads,
                      [&](long i, CheckReport& shard) {
        Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
        Matrix g = random_invertible(ctx, par.n, par.bound, rng);
        Lattice l = random_lattice(ctx, par.n, par.bound, rng);
        long t = graph_approx_threshold(ctx, g, l);
        Lattice expect = transform(g, l);
        Lattice first = act(graph_approx(ctx, g, t + 1), l);
        Lattice second = act(graph_approx(ctx, g, t + 2), l);
        if (first != expect || second != expect)
            shard.record_violation(i, Json{{"trial", i},
                                           {"g", matrix_to_json(ctx, g)},
                                           {"L", lattice_to_json(l)},
                                           {"threshold", t},
                                           {"expected", lattice_to_json(expect)},
                                           {"at_threshold_plus_1", lattice_to_json(first)},
                                           {"at_threshold_plus_2", lattice_to_json(second)}});
    });
}

CheckReport check_canonicalization(const CheckParams& par) {
    PadicContext ctx(par.p);
    return run_trials("canonicalization", par.trials, par.threads,
                      [&](long i, CheckReport& shard) {
        Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
        Matrix m = random_invertible(ctx, par.n, par.bound, rng);
        Matrix h = hnf_canonical(ctx, m);
        Matrix u = random_unimodular(ctx, par.n, par.bound, rng);
        Matrix u2 = random_unimodular(ctx, par.n, par.bound, rng);
        // extra integral-combination columns must not change the module
        Matrix x(par.n, 1);
        for (int r2 = 0; r2 < par.n; ++r2)
            x(r2, 0) = rng.range(0, 7);
        std::vector<long> e = snf_exponents(ctx, m);
        long esum = std::accumulate(e.begin(), e.end(), 0L);
        bool ok = hnf_canonical(ctx, h) == h && hnf_canonical(ctx, m * u) == h &&
                  hnf_canonical(ctx, hconcat(m, m * x)) == h &&
                  esum == valuation_nonzero(ctx, determinant(m)) &&
                  snf_exponents(ctx, u * m * u2) == e;
        if (!ok)
            shard.record_violation(
                i, Json{{"trial", i}, {"M", matrix_to_json(ctx, m)},
                        {"U", matrix_to_json(ctx, u)}, {"U2", matrix_to_json(ctx, u2)}});
    });
}

std::vector<CheckReport> check_lemma_suite(const CheckParams& par) {
    std::vector<CheckReport> out;
    out.push_back(check_lemma1(par));
    out.push_back(check_lemma2(par));
    out.push_back(check_duality(par));
    out.push_back(check_lemma4(par));
    out.push_back(check_lemma5(par));
    out.push_back(check_lemma6(par));
    out.push_back(check_decomposition(par));
    out.push_back(check_associativity(par));
    out.push_back(check_action_compat(par));
    out.push_back(check_graph_stabilization(par));
    return out;
}

std::vector<CheckReport> check_oracle_ops(const CheckParams& par) {
    PadicContext ctx(par.p);
    Window w(ctx, par.window);
    const int n = par.n;
    bool lattice_ok = window_group_size(w, n) <= kWindowBudget;
    bool relation_ok = window_group_size(w, 2 * n) <= kWindowBudget;

    auto skipped = [&](const char* name) {
        CheckReport rep;
        rep.name = name;
        rep.note = "skipped: window enumeration budget exceeded";
        return rep;
    };

    std::vector<CheckReport> out;

    if (!lattice_ok) {
        out.push_back(skipped("oracle-sum"));
        out.push_back(skipped("oracle-meet"));
        out.push_back(skipped("oracle-distance"));
    } else {
        auto pair_case = [&](const char* name, auto exact_fn, auto oracle_fn) {
            return run_trials(name, par.trials, par.threads,
                              [&, exact_fn, oracle_fn](long i, CheckReport& shard) {
                Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
                Lattice l = random_lattice(ctx, n, par.window, rng);
                Lattice m = random_lattice(ctx, n, par.window, rng);
                FiniteLattice fl = project_to_window(l, w);
                FiniteLattice fm = project_to_window(m, w);
                if (project_to_window(exact_fn(l, m), w) != oracle_fn(fl, fm))
                    shard.record_violation(i, Json{{"trial", i},
                                                   {"L", lattice_to_json(l)},
                                                   {"M", lattice_to_json(m)}});
            });
        };
        out.push_back(pair_case(
            "oracle-sum", [](const Lattice& a, const Lattice& b) { return sum(a, b); },
            [](const FiniteLattice& a, const FiniteLattice& b) { return oracle_sum(a, b); }));
        out.push_back(pair_case(
            "oracle-meet", [](const Lattice& a, const Lattice& b) { return meet(a, b); },
            [](const FiniteLattice& a, const FiniteLattice& b) { return oracle_meet(a, b); }));

        CheckParams dist_par = par;
        CheckReport dist = check_lemma2(dist_par);
        dist.name = "oracle-distance";
        out.push_back(std::move(dist));
    }

    if (!relation_ok) {
        out.push_back(skipped("oracle-act"));
        out.push_back(skipped("oracle-compose"));
    } else {
        out.push_back(run_trials("oracle-act", par.trials, par.threads,
                                 [&](long i, CheckReport& shard) {
            Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
            Relation h = random_relation(ctx, n, par.window, rng);
            Lattice r = random_lattice(ctx, n, par.window, rng);
            FiniteLattice fh = project_to_window(h.carrier(), w);
            FiniteLattice fr = project_to_window(r, w);
            if (project_to_window(act(h, r), w) != oracle_act(fh, fr))
                shard.record_violation(i, Json{{"trial", i},
                                               {"H", relation_to_json(h)},
                                               {"R", lattice_to_json(r)}});
        }));
        out.push_back(run_trials("oracle-compose", par.trials, par.threads,
                                 [&](long i, CheckReport& shard) {
            Rng rng(trial_seed(par.seed, static_cast<std::uint64_t>(i)));
            Relation g = random_relation(ctx, n, par.window, rng);
            Relation h = random_relation(ctx, n, par.window, rng);
            FiniteLattice fg = project_to_window(g.carrier(), w);
            FiniteLattice fh = project_to_window(h.carrier(), w);
            if (project_to_window(compose(g, h).carrier(), w) != oracle_compose(fg, fh))
                shard.record_violation(i, Json{{"trial", i},
                                               {"G", relation_to_json(g)},
                                               {"H", relation_to_json(h)}});
        }));
    }
    return out;
}

} // namespace padlat
