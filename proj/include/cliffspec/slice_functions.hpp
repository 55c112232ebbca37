#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <utility>

#include "cliffspec/clifford.hpp"

// Slice hyperholomorphic functions represented through their stem pair
// (f0, f1).  The function universe is finite sums of intrinsic rational
// functions times constant Clifford coefficients: left functions carry the
// coefficient on the right of the rational factor, right functions on the
// left.  This guarantees slice hyperholomorphy by construction and keeps
// f o h computable in closed form.

namespace cliffspec {

enum class Chirality { left, right, intrinsic };

/// Real-coefficient rational function p/q in one variable, evaluated on the
/// slice complex variable and split into even/odd stem components.
struct RationalIntrinsic {
    std::vector<double> num{0.0}; // ascending coefficients
    std::vector<double> den{1.0};

    static RationalIntrinsic polynomial(std::vector<double> coeffs);
    static RationalIntrinsic rational(std::vector<double> num, std::vector<double> den);

    std::complex<double> eval(std::complex<double> z) const;

    /// Evaluation at a paravector (stays in the slice plane of s).
    CliffordNum eval(const Paravector& s) const;

    int num_degree() const;
    int den_degree() const;

    RationalIntrinsic operator*(const RationalIntrinsic& o) const;
};

/// The H-infinity regularizer e(s) = s^m / (1+s^2)^m.
RationalIntrinsic regularizer(int m);

struct GrowthClass {
    enum class Kind { SH0, SHpoly };
    Kind kind = Kind::SHpoly;
    double C = 1.0;
    double alpha = 0.0;
};

struct FunctionDomain {
    enum class Kind { full, punctured_sector, complement_of_spheres };
    Kind kind = Kind::full;
    double theta = 0.0;                    // sector half-angle, punctured_sector only
    std::vector<SpectralSphere> excluded;  // complement_of_spheres only

    bool contains(double x, double y) const;
    bool contains(const Paravector& s) const;
};

class SliceFunction {
public:
    struct Term {
        CliffordNum coef;
        RationalIntrinsic g;
    };

    SliceFunction(Chirality chi, std::vector<Term> terms, FunctionDomain dom = {},
                  std::optional<GrowthClass> growth = std::nullopt);

    static SliceFunction intrinsic(RationalIntrinsic g, FunctionDomain dom = {},
                                   std::optional<GrowthClass> growth = std::nullopt);
    static SliceFunction constant(const CliffordNum& c, Chirality chi);

    Chirality chirality() const { return chi_; }
    int d() const { return d_; }
    const std::vector<Term>& terms() const { return terms_; }
    const FunctionDomain& domain() const { return dom_; }
    const std::optional<GrowthClass>& growth() const { return growth_; }
    void set_growth(GrowthClass g) { growth_ = g; }

    bool is_intrinsic() const;

    /// Stem components at (x, y); both are even/odd in y by construction.
    std::pair<CliffordNum, CliffordNum> stem(double x, double y) const;

    /// f(x + Jy) = f0 + J f1 (left) or f0 + f1 J (right); f0(x, 0) for real s.
    CliffordNum eval(const Paravector& s) const;

    /// f#(s) = conjugate(f(conjugate(s))): coefficients conjugated, chirality
    /// flipped, intrinsic functions fixed.
    SliceFunction sharp() const;

    /// Pointwise product with an intrinsic rational factor (e f = f e).
    SliceFunction times_intrinsic(const RationalIntrinsic& e) const;

    /// Degree-matched limit at |s| -> infinity; throws if the function grows.
    CliffordNum f_infinity() const;

private:
    Chirality chi_;
    int d_;
    std::vector<Term> terms_;
    FunctionDomain dom_;
    std::optional<GrowthClass> growth_;
};

// ---------------------------------------------------------------------------

struct HolomorphyReport {
    double max_symmetry_residual = 0.0;
    double max_cr_residual = 0.0;
    bool pass = false;
};

/// Finite-difference check of the compatibility and Cauchy-Riemann conditions
/// on a sample grid (central differences, h = 1e-5).
HolomorphyReport check_holomorphic(const SliceFunction& f,
                                   const std::vector<std::pair<double, double>>& grid,
                                   double cr_threshold = 1e-6);

/// Generic stem-pair variant, used to exercise deliberately broken pairs.
HolomorphyReport check_holomorphic_stems(
    const std::function<std::pair<double, double>(double, double)>& stem,
    const std::vector<std::pair<double, double>>& grid, double cr_threshold = 1e-6);

/// Heuristic growth classification by sampling log-spaced radii along rays
/// just inside the double sector D_theta.  Advisory only, never gating.
GrowthClass classify_growth(const SliceFunction& f, double theta);

} // namespace cliffspec
