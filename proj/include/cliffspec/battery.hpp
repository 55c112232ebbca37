#pragma once

#include "cliffspec/mult_model.hpp"
#include "cliffspec/rng.hpp"

// The theorem-verification battery behind `verify`: random operators over
// d in {1,2,3}, n in {1,2,3,4}, a fixed per-group derivation of the master
// seed, and one pass/fail line per theorem group.  Identical options must
// yield a byte-identical report.

namespace cliffspec {

struct VerifyOptions {
    std::uint64_t seed = 42;
    int ops_per_cell = 50;
    std::vector<int> dims{1, 2, 3};
    std::vector<int> sizes{1, 2, 3, 4};
    std::string group;     // empty = run every group
    bool flip_dsj = false; // fault injection: reversed contour orientation
};

struct GroupResult {
    std::string name;
    bool pass = false;
    int checks = 0;
    double worst = 0.0;     // worst residual (or count, per group semantics)
    double threshold = 0.0; // the bound `worst` is held against
    std::string note;
};

struct VerifyReport {
    VerifyOptions opts;
    std::vector<GroupResult> groups;

    bool all_pass() const;
    /// Deterministic plain-text rendering (one line per group).
    std::string render() const;
};

/// All group names in execution order.
const std::vector<std::string>& verify_group_names();

VerifyReport run_verify(const VerifyOptions& opts);

// Shared fixture helpers (also used by the unit tests).

/// Random symbol with values in the closed double sector of angle omega and
/// moduli in [0.5, 2], so M_h is bisectorial and injective.
MeasurableFn sector_symbol(Rng& rng, int d, int n, double omega);

/// R M R^T for a random real orthogonal scalar matrix R: preserves the
/// spectrum and every operator norm exactly while hiding the diagonal.
CliffordMatrix orthogonal_conjugate(const CliffordMatrix& m, Rng& rng);

} // namespace cliffspec
