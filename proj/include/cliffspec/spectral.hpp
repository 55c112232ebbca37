#pragma once

#include "cliffspec/module_linalg.hpp"

// S-spectrum and S-resolvents.  Two independent membership routes: the
// second-order pencil Q_s[T] = T^2 - 2 s0 T + |s|^2 and the first-order
// R-linear operator T - I^R s.  The exact spectrum uses the complex
// structure given by right multiplication with e_1.

namespace cliffspec {

struct PencilEvaluation {
    Paravector s;
    CliffordMatrix q;
    double sigma_min;
};

PencilEvaluation q_pencil(const CliffordMatrix& t, const Paravector& s);

/// Q_s[T] as a Clifford matrix (no singular-value work).
CliffordMatrix q_pencil_matrix(const CliffordMatrix& t, const Paravector& s);

/// true iff sigma_min(realify(Q_s[T])) > tol.  tol < 0 selects the default
/// 1e-10 * sigma_max (scale invariant).
bool in_resolvent_svd(const CliffordMatrix& t, const Paravector& s, double tol = -1.0);

/// realify_left(T) - realify_right_mult(s); invertible iff s in rho_S(T).
RealifiedMatrix first_order_realified(const CliffordMatrix& t, const Paravector& s);

/// Spectral-norm residual of Q_s[T]^{-1} = (T - I^R conj(s))^{-1} (T - I^R s)^{-1}.
double resolvent_factorization_check(const CliffordMatrix& t, const Paravector& s);

// ---------------------------------------------------------------------------

struct SpectralSet {
    std::vector<SpectralSphere> spheres; // sorted by (x, r)
    double tol = 0.0;                    // merge tolerance used

    /// Euclidean distance of (x, r) to the nearest sphere in the (x, r) metric.
    double distance(double x, double r) const;
    double distance(const Paravector& s) const;

    int total_multiplicity() const;
};

/// Hausdorff distance between sphere sets in the (x, r) metric.
double hausdorff(const SpectralSet& a, const SpectralSet& b);

/// Exact S-spectrum via the complex eigenvalues of realify_left(T):
/// T commutes with the right multiplication M = I^R e_1, M^2 = -Id, so the
/// realified matrix is complex-linear and s = x + J y lies in sigma_S(T)
/// iff x + i y is one of its eigenvalues.  Conjugate pairs collapse onto one
/// sphere; multiplicities are halved accordingly.
SpectralSet spectrum_exact(const CliffordMatrix& t, double merge_tol_rel = 1e-8);

/// Q_s[T]^{-1} reconstructed as a Clifford matrix from realified solves.
CliffordMatrix pencil_inverse(const CliffordMatrix& t, const Paravector& s);

/// S_L^{-1}(s,T) = Q^{-1} conj(s) - T Q^{-1}.
CliffordMatrix s_resolvent_left(const CliffordMatrix& t, const Paravector& s);
/// S_R^{-1}(s,T) = (conj(s) Id - T) Q^{-1}.
CliffordMatrix s_resolvent_right(const CliffordMatrix& t, const Paravector& s);

// ---------------------------------------------------------------------------

struct AdjointSpectrumReport {
    double hausdorff_distance = 0.0;
    double max_left_identity_residual = 0.0;  // || S_L^{-1}(s,T*) - S_R^{-1}(conj(s),T)* ||
    double max_right_identity_residual = 0.0; // || S_R^{-1}(s,T*) - S_L^{-1}(conj(s),T)* ||
    int points_checked = 0;
};

/// Compares sigma_S(T*) with sigma_S(T) and verifies both resolvent adjoint
/// identities at random points of the resolvent set (seeded, deterministic).
AdjointSpectrumReport adjoint_spectrum_check(const CliffordMatrix& t,
                                             std::uint64_t seed = 1,
                                             int points = 20);

} // namespace cliffspec
