#pragma once

#include <Eigen/Dense>

#include "cliffspec/clifford.hpp"

// Finite-dimensional Hilbert module V = R^n (x) R_d: module vectors,
// right-linear operators as n x n Clifford matrices, adjoints, and the
// realification to dense real matrices on R^{n * 2^d}.
//
// Realified coordinate order: (module index j, blade A) -> j * 2^d + A.

namespace cliffspec {

class ModuleVector {
public:
    ModuleVector(int n, int d) : n_(n), d_(d), e_(std::size_t(n), CliffordNum(d)) {
        if (n < 1) throw std::invalid_argument("module dimension must be >= 1");
    }

    int n() const { return n_; }
    int d() const { return d_; }

    const CliffordNum& operator[](int j) const { return e_[std::size_t(j)]; }
    CliffordNum& operator[](int j) { return e_[std::size_t(j)]; }

    double norm() const;

    /// Component-wise right multiplication v * s.
    ModuleVector right_mul(const CliffordNum& s) const;
    /// Component-wise left multiplication s * v.
    ModuleVector left_mul(const CliffordNum& s) const;

    Eigen::VectorXd realify() const;
    static ModuleVector from_realified(const Eigen::VectorXd& x, int n, int d);

    ModuleVector& operator+=(const ModuleVector& o);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }

private:
    int n_, d_;
    std::vector<CliffordNum> e_;
};

/// <v,w> = sum_j conj(v_j) * w_j; right-linear in w, right-antilinear in v.
CliffordNum inner_product(const ModuleVector& v, const ModuleVector& w);

/// Scalar part of inner_product; the Euclidean dot product of realified
/// coordinates.
double sc_inner(const ModuleVector& v, const ModuleVector& w);

// ---------------------------------------------------------------------------

class CliffordMatrix {
public:
    CliffordMatrix(int n, int d)
        : n_(n), d_(d), a_(std::size_t(n) * std::size_t(n), CliffordNum(d)) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    }

    static CliffordMatrix identity(int n, int d);
    /// Constant c embedded as c * Id.
    static CliffordMatrix scalar(int n, const CliffordNum& c);

    int n() const { return n_; }
    int d() const { return d_; }

    const CliffordNum& operator()(int i, int j) const { return a_[idx(i, j)]; }
    CliffordNum& operator()(int i, int j) { return a_[idx(i, j)]; }

    ModuleVector apply(const ModuleVector& v) const;

    CliffordMatrix& operator+=(const CliffordMatrix& o);
    CliffordMatrix& operator-=(const CliffordMatrix& o);
    CliffordMatrix& operator*=(double t);
    friend CliffordMatrix operator+(CliffordMatrix a, const CliffordMatrix& b) { return a += b; }
    friend CliffordMatrix operator-(CliffordMatrix a, const CliffordMatrix& b) { return a -= b; }
    friend CliffordMatrix operator*(CliffordMatrix a, double t) { return a *= t; }
    friend CliffordMatrix operator*(double t, CliffordMatrix a) { return a *= t; }
    friend CliffordMatrix operator*(const CliffordMatrix& a, const CliffordMatrix& b);

    /// Every entry right-multiplied by c, i.e. the matrix product A * (c Id).
    CliffordMatrix right_scaled(const CliffordNum& c) const;
    /// The matrix product (c Id) * A.
    CliffordMatrix left_scaled(const CliffordNum& c) const;

private:
    std::size_t idx(int i, int j) const { return std::size_t(i) * std::size_t(n_) + std::size_t(j); }
    int n_, d_;
    std::vector<CliffordNum> a_;
};

/// (T*)_ij = conjugate(T_ji).
CliffordMatrix adjoint(const CliffordMatrix& t);

// ---------------------------------------------------------------------------

struct RealifiedMatrix {
    enum class Source { left_action, right_mult, derived };
    Eigen::MatrixXd mat;
    Source source = Source::derived;
    int n = 0, d = 0;
};

/// 2^d x 2^d matrix of x -> c * x in blade coordinates.
Eigen::MatrixXd lmul_matrix(const CliffordNum& c);
/// 2^d x 2^d matrix of x -> x * c in blade coordinates.
Eigen::MatrixXd rmul_matrix(const CliffordNum& c);

/// Real matrix of v -> T v; an algebra homomorphism.
RealifiedMatrix realify_left(const CliffordMatrix& t);

/// Real matrix of v -> v * s; commutes with every realify_left(T).
RealifiedMatrix realify_right_mult(const CliffordNum& s, int n);

/// Block-diagonal real matrix of v -> c * v (left multiplication per entry);
/// the realification of the embedded scalar c * Id.
Eigen::MatrixXd realify_left_scalar(const CliffordNum& c, int n);

/// Reads the Clifford entries of a right-linear realified operator back off
/// its action on the scalar-blade module basis.
CliffordMatrix from_realified(const Eigen::MatrixXd& m, int n, int d);

/// Largest singular value of realify_left(T).
double operator_norm(const CliffordMatrix& t);

double spectral_norm(const Eigen::MatrixXd& m);

} // namespace cliffspec
