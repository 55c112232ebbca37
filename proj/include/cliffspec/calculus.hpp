#pragma once

#include "cliffspec/slice_functions.hpp"
#include "cliffspec/spectral.hpp"

// The four S-functional calculi as contour quadrature over slice planes.
//
// ds_J convention: ds_J = s'(t) (-J) dt.  The sign and unit are pinned by the
// Cauchy normalization f == 1 -> Id; composite trapezoid on circles, graded
// Gauss-Legendre panels on sector rays.

namespace cliffspec {

struct Contour {
    enum class Kind { circle, sector_rays };
    Kind kind = Kind::circle;

    // circle
    double center = 0.0;
    double radius = 1.0;
    int nodes = 512;

    // sector rays t e^{+-J phi}, t e^{J (pi -+ phi)}, t in [r_in, r_out]
    double phi = 0.7853981633974483;
    double r_in = 1e-9;
    double r_out = 1e9;
    int panels_per_ray = 64;
    int nodes_per_panel = 8;

    static ImaginaryUnit default_unit(int d);

    ImaginaryUnit J = default_unit(1);
    int orientation = +1; // +1 positive w.r.t. the enclosed region; -1 only
                          // exists for fault injection in the verify battery

    static Contour circle(double center, double radius, ImaginaryUnit j, int nodes = 512);
    /// Conjugation-symmetric circle enclosing sigma_S(T) with >= 0.05 r margin.
    static Contour circle_for(const CliffordMatrix& t, int nodes = 512);
    static Contour circle_for(const SpectralSet& spectrum, int d, int nodes = 512);
    /// Circle around a compact axially symmetric sphere set K.
    static Contour circle_around(const SpectralSet& k, int d, int nodes = 512);

    static Contour sector(double phi, ImaginaryUnit j, double r_in = 1e-9, double r_out = 1e9,
                          int panels_per_ray = 64, int nodes_per_panel = 8);

    Contour refined() const; // doubled resolution, same path
};

enum class CalcKind {
    bounded_l,
    bounded_r,
    unbounded_l,
    unbounded_r,
    omega_l,
    omega_r,
    hinf_l,
    hinf_r
};

bool calc_is_left(CalcKind k);
CalcKind calc_for(Chirality chi, CalcKind left_kind);
std::string to_string(CalcKind k);
CalcKind calc_kind_from_string(const std::string& s);

struct CalculusResult {
    CliffordMatrix op;
    CalcKind kind;
    double error_estimate = 0.0;        // || result(N) - result(2N) ||
    double regularizer_residual = 0.0;  // H-infinity only: quadrature e(T) vs direct rational
};

/// (1/2pi) sum_k S_L^{-1}(s_k,T) ds_J(s_k) f(s_k)  (left; right mirrored).
CalculusResult bounded_calc(const SliceFunction& f, const CliffordMatrix& t,
                            const Contour& contour, bool with_estimate = true);

/// f_inf Id - (1/2pi) contour integral around K (spectrum outside the path).
CalculusResult unbounded_calc(const SliceFunction& f, const CliffordMatrix& t,
                              const SpectralSet& k, const Contour& contour,
                              bool with_estimate = true);

/// Quadrature over the four sector-boundary rays for SH0 functions of a
/// bisectorial operator.
CalculusResult omega_calc(const SliceFunction& f, const CliffordMatrix& t,
                          const Contour& contour, bool with_estimate = true);

/// Regularized calculus: left e(T)^{-1} (ef)(T), right (fe)(T) e(T)^{-1}
/// (finite dimension: the closure is the plain product).  m defaults to
/// floor(alpha) + 1 from the declared growth class.
CalculusResult hinf_calc(const SliceFunction& f, const CliffordMatrix& t, const Contour& contour,
                         int m = -1, bool with_estimate = true);

// ---------------------------------------------------------------------------

/// Extra inputs per calculus kind, bundled so one dispatcher serves the CLI
/// and the transport checks.
struct CalculusParams {
    Contour contour;
    SpectralSet k;      // unbounded only
    int m = -1;         // hinf only
    bool with_estimate = true;
};

CalculusResult apply_calculus(const SliceFunction& f, const CliffordMatrix& t, CalcKind kind,
                              const CalculusParams& p);

struct TransportReport {
    double relative_residual = 0.0;   // || f(T*) - f#(T)* || / max(1, ||f(T*)||)
    double intrinsic_residual = -1.0; // || f(T*) - f(T)* ||, intrinsic f only
    double combined_estimate = 0.0;
};

/// Verifies f(T*) = f#(T)* (and f(T*) = f(T)* for intrinsic f) for the
/// calculus selected by left_kind and the chirality of f.
TransportReport adjoint_transport(const SliceFunction& f, const CliffordMatrix& t,
                                  CalcKind left_kind, const CalculusParams& p);

// ---------------------------------------------------------------------------

struct BisectorialReport {
    bool spectrum_in_sector = false;
    double max_sector_arg = 0.0; // max Arg over spectral spheres, folded to [0, pi/2]
    std::vector<std::pair<double, double>> c_table; // (phi, C_phi)
    bool right_bound_ok = false;
    double worst_right_ratio = 0.0; // max ||S_R^{-1}|| |s| / (2 C_phi)
    bool pass() const { return spectrum_in_sector && right_bound_ok; }
};

/// Checks sigma_S(T) within the closed double sector of angle omega and
/// samples the resolvent decay C_phi = sup ||S_L^{-1}(s,T)|| |s| outside
/// D_phi, then verifies the 2 C_phi bound for the right resolvent.
BisectorialReport bisectorial_check(const CliffordMatrix& t, double omega);

} // namespace cliffspec
