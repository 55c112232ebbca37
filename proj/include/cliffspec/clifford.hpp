#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic in the real Clifford algebra R_d (e_i^2 = -1,
// e_i e_j = -e_j e_i).  Blades are indexed by bitmasks over {1..d};
// the coefficient array position equals the bitmask value.

namespace cliffspec {

using BladeIndex = std::uint32_t;

/// Hard cap on the algebra dimension (2^d coefficient blowup).
/// Overridable at runtime through the CLIFFSPEC_DLIMIT environment variable.
int dim_limit();

void check_dim(int d);

struct BladeProduct {
    double sign;      // +1 or -1
    BladeIndex blade; // a XOR b
};

/// e_A * e_B = sign * e_C with C = A xor B.  Sign counts the transpositions
/// needed to interleave the factors plus one -1 per e_i^2 contraction.
BladeProduct blade_product(BladeIndex a, BladeIndex b);

class CliffordNum {
public:
    CliffordNum() : d_(0), c_(1, 0.0) {}
    explicit CliffordNum(int d) : d_(check_ctor(d)), c_(std::size_t(1) << d, 0.0) {}
    CliffordNum(int d, double scalar) : CliffordNum(d) { c_[0] = scalar; }

    static CliffordNum blade(int d, BladeIndex a, double coeff = 1.0);

    int dim() const { return d_; }
    std::size_t size() const { return c_.size(); }

    double operator[](BladeIndex a) const { return c_[a]; }
    double& operator[](BladeIndex a) { return c_[a]; }

    double scalar() const { return c_[0]; }

    CliffordNum& operator+=(const CliffordNum& o);
    CliffordNum& operator-=(const CliffordNum& o);
    CliffordNum& operator*=(double t);

    friend CliffordNum operator+(CliffordNum a, const CliffordNum& b) { return a += b; }
    friend CliffordNum operator-(CliffordNum a, const CliffordNum& b) { return a -= b; }
    friend CliffordNum operator*(CliffordNum a, double t) { return a *= t; }
    friend CliffordNum operator*(double t, CliffordNum a) { return a *= t; }
    friend CliffordNum operator-(CliffordNum a) { return a *= -1.0; }

    const std::vector<double>& coeffs() const { return c_; }

private:
    static int check_ctor(int d) { check_dim(d); return d; }
    int d_;
    std::vector<double> c_;
};

/// Bilinear extension of blade_product.  Hot kernel: uses a per-dimension
/// precomputed sign table.
CliffordNum mul(const CliffordNum& a, const CliffordNum& b);
inline CliffordNum operator*(const CliffordNum& a, const CliffordNum& b) { return mul(a, b); }

/// Per-blade sign flip (-1)^{|A|(|A|+1)/2}; anti-automorphism.
CliffordNum conjugate(const CliffordNum& a);

/// Euclidean norm of the coefficient array.
double abs(const CliffordNum& a);

/// true iff ||s*conj(s) - |s|^2|| <= tol and ||conj(s)*s - |s|^2|| <= tol.
bool in_N_Rd(const CliffordNum& s, double tol = 1e-12);

// ---------------------------------------------------------------------------

/// Element s_0 + s_1 e_1 + ... + s_d e_d of R^{d+1}.
struct Paravector {
    double s0 = 0.0;
    std::vector<double> vec; // s_1..s_d

    Paravector() = default;
    Paravector(double s0_, std::vector<double> v) : s0(s0_), vec(std::move(v)) {}
    explicit Paravector(int d, double s0_ = 0.0) : s0(s0_), vec(std::size_t(d), 0.0) {}

    int dim() const { return int(vec.size()); }
    double im_norm() const;
    double norm() const;

    CliffordNum to_clifford() const;
    Paravector conj() const;

    friend Paravector operator-(Paravector s) {
        s.s0 = -s.s0;
        for (double& v : s.vec) v = -v;
        return s;
    }
};

/// Extract the paravector part; throws if higher-grade coefficients exceed tol.
Paravector to_paravector(const CliffordNum& a, double tol = 1e-12);

bool is_paravector(const CliffordNum& a, double tol = 1e-12);

/// s^{-1} = conj(s)/|s|^2.  Throws on zero input.
Paravector paravector_inverse(const Paravector& s);

/// Element of the sphere S: paravector with zero real part and unit modulus.
struct ImaginaryUnit {
    explicit ImaginaryUnit(Paravector j);
    const Paravector& para() const { return j_; }
    CliffordNum to_clifford() const { return j_.to_clifford(); }
    int dim() const { return j_.dim(); }

private:
    Paravector j_;
};

/// Deterministic unit I in S with I*J = -J*I.  Requires d >= 2.
ImaginaryUnit anticommuting_unit(const ImaginaryUnit& j);

// ---------------------------------------------------------------------------

/// Associated sphere [s] = {s0 + J*r : J in S}, stored as (x, r).
struct SpectralSphere {
    double x = 0.0;
    double r = 0.0;
    int multiplicity = 1;
};

std::string to_string(const CliffordNum& a);

} // namespace cliffspec
