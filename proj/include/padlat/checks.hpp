#pragma once

#include "padlat/json_io.hpp"
#include "padlat/random.hpp"

namespace padlat {

/// Outcome of one randomized property check.  Violations carry the smallest
/// failing trial index and a full JSON counterexample for replay.
struct CheckReport {
    std::string name;
    long trials = 0;
    long violations = 0;
    long strict = 0; // theorem harness: trials showing strict compression
    long first_index = -1;
    Json first_counterexample = nullptr;
    std::string note; // e.g. why a check was skipped

    void record_violation(long index, Json cx);
    void merge(const CheckReport& shard);
    Json to_json() const;
};

struct CheckParams {
    long p = 2;
    int n = 2;
    long bound = 3;
    long trials = 1000;
    std::uint64_t seed = 7;
    long window = 1;
    int threads = 0; // 0 = use hardware concurrency
};

/// Main compression theorem: for random (H, R, S), every k_j(HR, HS) lies
/// between 0 and k_j(R, S), sign-aware.
CheckReport check_theorem(const CheckParams& par);

/// dual(dual) = id, k(L,M) = k(dual M, dual L), and both De Morgan identities.
CheckReport check_duality(const CheckParams& par);

/// Minimax: sampled subspaces never exceed k_j, adapted subspaces attain it;
/// same for the dual codimension form.
CheckReport check_lemma1(const CheckParams& par);

/// quotient_invariants against oracle element counting, plus reconstruction
/// of the full distance vector from the two partitions.
CheckReport check_lemma2(const CheckParams& par);

/// Meet compression: k_j(L meet M, L meet N) between 0 and k_j(M, N).
CheckReport check_lemma4(const CheckParams& par);

/// Norm-ratio compression along meets, for random nonzero vectors.
CheckReport check_lemma5(const CheckParams& par);

/// Sum compression: k_j(L + M, L + N) between 0 and k_j(M, N).
CheckReport check_lemma6(const CheckParams& par);

/// act(h, l) = g(l meet dom h) + indef h, and the dom/ker vs im/indef
/// exponent match that makes g exist.
CheckReport check_decomposition(const CheckParams& par);

/// compose is associative.
CheckReport check_associativity(const CheckParams& par);

/// act(compose(g, h), r) = act(g, act(h, r)).
CheckReport check_action_compat(const CheckParams& par);

/// act(graph_approx(g, j), l) equals g l at j = threshold+1 and threshold+2.
CheckReport check_graph_stabilization(const CheckParams& par);

/// Hermite idempotence & unimodular invariance; Smith exponent sum = det
/// valuation; Smith invariance under two-sided unimodular factors.
CheckReport check_canonicalization(const CheckParams& par);

/// The ten checks behind the `check-lemmas` command, in a fixed order.
std::vector<CheckReport> check_lemma_suite(const CheckParams& par);

/// Exact-vs-oracle agreement for sum, meet, complex distance, act, compose on
/// one (p, n, window) combination.  Operations whose doubled dimension blows
/// the enumeration budget are reported as skipped (trials = 0).
std::vector<CheckReport> check_oracle_ops(const CheckParams& par);

long total_violations(const std::vector<CheckReport>& reports);

} // namespace padlat
