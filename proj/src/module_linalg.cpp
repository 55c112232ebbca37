#include "cliffspec/module_linalg.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace cliffspec {

namespace {

void check_same(int n1, int d1, int n2, int d2) {
    if (n1 != n2 || d1 != d2) throw std::invalid_argument("shape mismatch");
}

} // namespace

double ModuleVector::norm() const {
    double s = 0.0;
    for (const auto& c : e_)
        for (double v : c.coeffs()) s += v * v;
    return std::sqrt(s);
}

ModuleVector ModuleVector::right_mul(const CliffordNum& s) const {
    ModuleVector r(n_, d_);
    for (int j = 0; j < n_; ++j) r[j] = mul((*this)[j], s);
    return r;
}

ModuleVector ModuleVector::left_mul(const CliffordNum& s) const {
    ModuleVector r(n_, d_);
    for (int j = 0; j < n_; ++j) r[j] = mul(s, (*this)[j]);
    return r;
}

Eigen::VectorXd ModuleVector::realify() const {
    const std::size_t blades = std::size_t(1) << d_;
    Eigen::VectorXd x(Eigen::Index(std::size_t(n_) * blades));
    for (int j = 0; j < n_; ++j)
        for (std::size_t a = 0; a < blades; ++a)
            x[Eigen::Index(std::size_t(j) * blades + a)] = (*this)[j][BladeIndex(a)];
    return x;
}

ModuleVector ModuleVector::from_realified(const Eigen::VectorXd& x, int n, int d) {
    const std::size_t blades = std::size_t(1) << d;
    if (std::size_t(x.size()) != std::size_t(n) * blades)
        throw std::invalid_argument("realified vector size mismatch");
    ModuleVector v(n, d);
    for (int j = 0; j < n; ++j)
        for (std::size_t a = 0; a < blades; ++a)
            v[j][BladeIndex(a)] = x[Eigen::Index(std::size_t(j) * blades + a)];
    return v;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
    check_same(n_, d_, o.n_, o.d_);
    for (int j = 0; j < n_; ++j) (*this)[j] += o[j];
    return *this;
}

CliffordNum inner_product(const ModuleVector& v, const ModuleVector& w) {
    check_same(v.n(), v.d(), w.n(), w.d());
    CliffordNum acc(v.d());
    for (int j = 0; j < v.n(); ++j) acc += mul(conjugate(v[j]), w[j]);
    return acc;
}

double sc_inner(const ModuleVector& v, const ModuleVector& w) {
    check_same(v.n(), v.d(), w.n(), w.d());
    double s = 0.0;
    for (int j = 0; j < v.n(); ++j) {
        const auto& a = v[j].coeffs();
        const auto& b = w[j].coeffs();
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    }
    return s;
}

// ---------------------------------------------------------------------------

CliffordMatrix CliffordMatrix::identity(int n, int d) {
    CliffordMatrix t(n, d);
    for (int i = 0; i < n; ++i) t(i, i)[0] = 1.0;
    return t;
}

CliffordMatrix CliffordMatrix::scalar(int n, const CliffordNum& c) {
    CliffordMatrix t(n, c.dim());
    for (int i = 0; i < n; ++i) t(i, i) = c;
    return t;
}

ModuleVector CliffordMatrix::apply(const ModuleVector& v) const {
    check_same(n_, d_, v.n(), v.d());
    ModuleVector r(n_, d_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i] += mul((*this)(i, j), v[j]);
    return r;
}

CliffordMatrix& CliffordMatrix::operator+=(const CliffordMatrix& o) {
    check_same(n_, d_, o.n_, o.d_);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CliffordMatrix& CliffordMatrix::operator-=(const CliffordMatrix& o) {
    check_same(n_, d_, o.n_, o.d_);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CliffordMatrix& CliffordMatrix::operator*=(double t) {
    for (auto& c : a_) c *= t;
    return *this;
}

CliffordMatrix operator*(const CliffordMatrix& a, const CliffordMatrix& b) {
    check_same(a.n_, a.d_, b.n_, b.d_);
    CliffordMatrix r(a.n_, a.d_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            const CliffordNum& aik = a(i, k);
            for (int j = 0; j < a.n_; ++j) r(i, j) += mul(aik, b(k, j));
        }
    return r;
}

CliffordMatrix CliffordMatrix::right_scaled(const CliffordNum& c) const {
    CliffordMatrix r(n_, d_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(i, j) = mul((*this)(i, j), c);
    return r;
}

CliffordMatrix CliffordMatrix::left_scaled(const CliffordNum& c) const {
    CliffordMatrix r(n_, d_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(i, j) = mul(c, (*this)(i, j));
    return r;
}

CliffordMatrix adjoint(const CliffordMatrix& t) {
    CliffordMatrix r(t.n(), t.d());
    for (int i = 0; i < t.n(); ++i)
        for (int j = 0; j < t.n(); ++j) r(i, j) = conjugate(t(j, i));
    return r;
}

// ---------------------------------------------------------------------------

Eigen::MatrixXd lmul_matrix(const CliffordNum& c) {
    const std::size_t m = c.size();
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(Eigen::Index(m), Eigen::Index(m));
    for (std::size_t b = 0; b < m; ++b) {
        if (c[BladeIndex(b)] == 0.0) continue;
        for (std::size_t a = 0; a < m; ++a) {
            auto p = blade_product(BladeIndex(b), BladeIndex(a));
            r(Eigen::Index(p.blade), Eigen::Index(a)) += p.sign * c[BladeIndex(b)];
        }
    }
    return r;
}

Eigen::MatrixXd rmul_matrix(const CliffordNum& c) {
    const std::size_t m = c.size();
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(Eigen::Index(m), Eigen::Index(m));
    for (std::size_t b = 0; b < m; ++b) {
        if (c[BladeIndex(b)] == 0.0) continue;
        for (std::size_t a = 0; a < m; ++a) {
            auto p = blade_product(BladeIndex(a), BladeIndex(b));
            r(Eigen::Index(p.blade), Eigen::Index(a)) += p.sign * c[BladeIndex(b)];
        }
    }
    return r;
}

RealifiedMatrix realify_left(const CliffordMatrix& t) {
    const int n = t.n(), d = t.d();
    const Eigen::Index m = Eigen::Index(1) << d;
    RealifiedMatrix r{Eigen::MatrixXd::Zero(n * m, n * m), RealifiedMatrix::Source::left_action, n, d};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.mat.block(i * m, j * m, m, m) = lmul_matrix(t(i, j));
    return r;
}

RealifiedMatrix realify_right_mult(const CliffordNum& s, int n) {
    const int d = s.dim();
    const Eigen::Index m = Eigen::Index(1) << d;
    RealifiedMatrix r{Eigen::MatrixXd::Zero(n * m, n * m), RealifiedMatrix::Source::right_mult, n, d};
    Eigen::MatrixXd blk = rmul_matrix(s);
    for (int j = 0; j < n; ++j) r.mat.block(j * m, j * m, m, m) = blk;
    return r;
}

Eigen::MatrixXd realify_left_scalar(const CliffordNum& c, int n) {
    const Eigen::Index m = Eigen::Index(1) << c.dim();
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n * m, n * m);
    Eigen::MatrixXd blk = lmul_matrix(c);
    for (int j = 0; j < n; ++j) r.block(j * m, j * m, m, m) = blk;
    return r;
}

CliffordMatrix from_realified(const Eigen::MatrixXd& mat, int n, int d) {
    const Eigen::Index m = Eigen::Index(1) << d;
    if (mat.rows() != n * m || mat.cols() != n * m)
        throw std::invalid_argument("realified matrix size mismatch");
    // Column j*2^d is the image of the basis vector delta_j (x) 1, whose
    // block coordinates are exactly the Clifford entries T_ij.
    CliffordMatrix t(n, d);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            for (Eigen::Index a = 0; a < m; ++a)
                t(i, j)[BladeIndex(a)] = mat(i * m + a, j * m);
    return t;
}

double operator_norm(const CliffordMatrix& t) {
    return spectral_norm(realify_left(t).mat);
}

double spectral_norm(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues()(0);
}

} // namespace cliffspec
