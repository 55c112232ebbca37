#pragma once

#include "cliffspec/calculus.hpp"

// Multiplication operators M_h over a discrete measure space: the worked
// model whose spectrum, adjoint, resolvents and functional calculi all have
// closed forms, used as the oracle layer for the quadrature machinery.

namespace cliffspec {

struct DiscreteMeasureSpace {
    std::vector<double> weights; // mu(x_i) > 0, points labelled by index

    int size() const { return int(weights.size()); }
    void validate() const;
};

enum class RangeType { paravector, n_rd, general };

std::string to_string(RangeType r);

struct MeasurableFn {
    std::vector<CliffordNum> values; // h(x_1)..h(x_N), all same algebra dim
    RangeType range = RangeType::general;

    int d() const { return values.empty() ? 0 : values.front().dim(); }
    /// Throws if the range flag overstates the values (paravector / N(R_d)).
    void validate() const;

    /// sup-norm max_x ||h(x)||.
    double sup_norm() const;
};

/// diag(h(x_1) .. h(x_N)) acting by left multiplication.
CliffordMatrix build_mult(const DiscreteMeasureSpace& space, const MeasurableFn& h);

/// Essential range: for positive weights, the distinct values of h
/// (first-occurrence order, dedup within 1e-12).
std::vector<CliffordNum> essran(const DiscreteMeasureSpace& space, const MeasurableFn& h);

/// sigma_S(M_h) = [essran(h)]: spheres (v_0, |Im v|), multiplicities matching
/// the realified eigenvalue count (2^{d-1} per point).  Paravector h only.
SpectralSet spectrum_mult(const DiscreteMeasureSpace& space, const MeasurableFn& h);

/// Pointwise product (g h)(x); the symbol of M_g M_h.
MeasurableFn pointwise_product(const MeasurableFn& g, const MeasurableFn& h);

/// Pointwise conjugate; the symbol of (M_h)*.
MeasurableFn pointwise_conjugate(const MeasurableFn& h);

/// M_h^{-1} = M_{h^{-1}} for h valued in N(R_d) (or paravectors) with
/// min |h(x)| > 0; throws otherwise.
CliffordMatrix mult_inverse(const DiscreteMeasureSpace& space, const MeasurableFn& h);

struct MultAdjointReport {
    double entry_residual = 0.0; // max entry norm of adjoint(M_h) - M_{conj h}
    bool exact = false;          // residual == 0
};

MultAdjointReport mult_adjoint_check(const DiscreteMeasureSpace& space, const MeasurableFn& h);

struct MultResolventReport {
    double left_residual = 0.0;  // max entry norm vs diag S_L^{-1}(s, h(x))
    double right_residual = 0.0;
};

/// Compares the matrix S-resolvents against the diagonal closed form
/// S_L^{-1}(s, h(x)) = q^{-1} conj(s) - h(x) q^{-1}, q = h^2 - 2 s_0 h + |s|^2.
MultResolventReport mult_resolvent_check(const DiscreteMeasureSpace& space, const MeasurableFn& h,
                                         const Paravector& s);

/// eps_s = sqrt(|Im s|^2 + eps^2) - |Im s|, the radius for which the pencil
/// sublevel set {|q^2 - 2 s_0 q + |s|^2| < eps^2} equals [s] + U_{eps_s}(0).
double sector_eps(const Paravector& s, double eps);

struct SectorEpsReport {
    int samples = 0;
    int forward_violations = 0;  // point in [s]+U_{eps_s}, pencil value >= eps^2
    int backward_violations = 0; // pencil value < eps^2, point outside [s]+U_eps
    bool pass() const { return forward_violations == 0 && backward_violations == 0; }
};

SectorEpsReport sector_eps_inclusion_check(const Paravector& s, double eps, int samples,
                                           std::uint64_t seed);

struct MultBisectorialReport {
    bool sector_ok = false;       // essran(h) inside the closed double sector
    double max_bound_ratio = 0.0; // ||S_L^{-1}(s, M_h)|| / closed-form bound
    double c_phi = 0.0;           // sampled sup ||S_L^{-1}|| |s| outside D_phi
    double worst_right_ratio = 0.0; // ||S_R^{-1}|| |s| / (2 c_phi)
    bool pass() const {
        return sector_ok && max_bound_ratio <= 1.0 + 1e-9 && worst_right_ratio <= 1.0 + 1e-9;
    }
};

/// Verifies the closed-form resolvent bound
/// ||S_L^{-1}(s, M_h)|| <= 2^{d/2-1} / (|s| sqrt(1+cos(phi-omega))
///                          (sqrt(2) - sqrt(1+cos(phi-omega))))
/// on 200 log-spaced radii x 8 arguments outside D_phi.
MultBisectorialReport mult_bisectorial_bound(const DiscreteMeasureSpace& space,
                                             const MeasurableFn& h, double omega, double phi);

struct MultOracleReport {
    double residual = 0.0; // || calculus(f, M_h) - M_{f o h} ||
    double estimate = 0.0; // quadrature error estimate of the calculus result
};

/// f(M_h) = M_{f o h}: runs the selected calculus on M_h and compares against
/// the diagonal of pointwise evaluations.
MultOracleReport mult_calculus_oracle(const DiscreteMeasureSpace& space, const MeasurableFn& h,
                                      const SliceFunction& f, CalcKind kind,
                                      const CalculusParams& p);

} // namespace cliffspec
