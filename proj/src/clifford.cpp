#include "cliffspec/clifford.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>

namespace cliffspec {

int dim_limit() {
    static const int limit = [] {
        if (const char* env = std::getenv("CLIFFSPEC_DLIMIT")) {
            int v = std::atoi(env);
            if (v >= 1) return v > 12 ? 12 : v;
        }
        return 6;
    }();
    return limit;
}

void check_dim(int d) {
    if (d < 0 || d > dim_limit())
        throw std::invalid_argument("algebra dimension " + std::to_string(d) +
                                    " outside [0, " + std::to_string(dim_limit()) + "]");
}

BladeProduct blade_product(BladeIndex a, BladeIndex b) {
    // Transpositions: pairs (i in a, j in b) with i > j.
    int swaps = 0;
    for (BladeIndex t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
    // Contractions: each shared index contributes e_i^2 = -1.
    swaps += std::popcount(a & b);
    return {(swaps & 1) ? -1.0 : 1.0, a ^ b};
}

namespace {

// Dense 2^d x 2^d sign table, built lazily per dimension.
const std::vector<float>& sign_table(int d) {
    static std::array<std::vector<float>, 13> tables;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& tab = tables[std::size_t(d)];
    if (tab.empty()) {
        std::size_t n = std::size_t(1) << d;
        tab.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                tab[a * n + b] = float(blade_product(BladeIndex(a), BladeIndex(b)).sign);
    }
    return tab;
}

} // namespace

CliffordNum CliffordNum::blade(int d, BladeIndex a, double coeff) {
    CliffordNum r(d);
    if (a >= r.size()) throw std::invalid_argument("blade index out of range");
    r[a] = coeff;
    return r;
}

CliffordNum& CliffordNum::operator+=(const CliffordNum& o) {
    if (d_ != o.d_) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CliffordNum& CliffordNum::operator-=(const CliffordNum& o) {
    if (d_ != o.d_) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CliffordNum& CliffordNum::operator*=(double t) {
    for (double& v : c_) v *= t;
    return *this;
}

CliffordNum mul(const CliffordNum& a, const CliffordNum& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    const int d = a.dim();
    const std::size_t n = a.size();
    const auto& tab = sign_table(d);
    CliffordNum r(d);
    for (std::size_t i = 0; i < n; ++i) {
        double ai = a[BladeIndex(i)];
        if (ai == 0.0) continue;
        const float* row = tab.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            double bj = b[BladeIndex(j)];
            if (bj == 0.0) continue;
            r[BladeIndex(i ^ j)] += double(row[j]) * ai * bj;
        }
    }
    return r;
}

CliffordNum conjugate(const CliffordNum& a) {
    CliffordNum r(a.dim());
    for (std::size_t i = 0; i < a.size(); ++i) {
        int g = std::popcount(unsigned(i));
        double sign = ((g * (g + 1) / 2) & 1) ? -1.0 : 1.0;
        r[BladeIndex(i)] = sign * a[BladeIndex(i)];
    }
    return r;
}

double abs(const CliffordNum& a) {
    double s = 0.0;
    for (double v : a.coeffs()) s += v * v;
    return std::sqrt(s);
}

bool in_N_Rd(const CliffordNum& s, double tol) {
    const double n2 = abs(s) * abs(s);
    CliffordNum sc = conjugate(s);
    CliffordNum p = mul(s, sc);
    CliffordNum q = mul(sc, s);
    p[0] -= n2;
    q[0] -= n2;
    return abs(p) <= tol && abs(q) <= tol;
}

// ---------------------------------------------------------------------------

double Paravector::im_norm() const {
    double s = 0.0;
    for (double v : vec) s += v * v;
    return std::sqrt(s);
}

double Paravector::norm() const {
    double im = im_norm();
    return std::sqrt(s0 * s0 + im * im);
}

CliffordNum Paravector::to_clifford() const {
    CliffordNum r(dim());
    r[0] = s0;
    for (int i = 0; i < dim(); ++i) r[BladeIndex(1) << i] = vec[std::size_t(i)];
    return r;
}

Paravector Paravector::conj() const {
    Paravector r = *this;
    for (double& v : r.vec) v = -v;
    return r;
}

Paravector to_paravector(const CliffordNum& a, double tol) {
    if (!is_paravector(a, tol))
        throw std::invalid_argument("value has higher-grade components");
    Paravector r(a.dim(), a.scalar());
    for (int i = 0; i < a.dim(); ++i) r.vec[std::size_t(i)] = a[BladeIndex(1) << i];
    return r;
}

bool is_paravector(const CliffordNum& a, double tol) {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (std::popcount(unsigned(i)) > 1 && std::fabs(a[BladeIndex(i)]) > tol) return false;
    return true;
}

Paravector paravector_inverse(const Paravector& s) {
    double n = s.norm();
    if (n == 0.0) throw std::domain_error("paravector_inverse of zero");
    double n2 = n * n;
    Paravector r = s.conj();
    r.s0 /= n2;
    for (double& v : r.vec) v /= n2;
    return r;
}

ImaginaryUnit::ImaginaryUnit(Paravector j) : j_(std::move(j)) {
    if (std::fabs(j_.s0) > 1e-12 || std::fabs(j_.im_norm() - 1.0) > 1e-12)
        throw std::invalid_argument("imaginary unit must have J0 = 0 and |J| = 1");
    j_.s0 = 0.0;
}

ImaginaryUnit anticommuting_unit(const ImaginaryUnit& j) {
    const Paravector& J = j.para();
    const int d = J.dim();
    if (d < 2) throw std::domain_error("anticommuting unit requires d >= 2");
    int k = -1;
    for (int i = 0; i < d; ++i)
        if (J.vec[std::size_t(i)] != 0.0) { k = i; break; }
    if (k < 0) throw std::invalid_argument("zero unit");
    int m = (k == 0) ? 1 : 0;
    // J_k e_m - J_m e_k is orthogonal to J inside span{e_k, e_m}, hence
    // anticommutes with J.
    Paravector I(d);
    I.vec[std::size_t(m)] = J.vec[std::size_t(k)];
    I.vec[std::size_t(k)] = -J.vec[std::size_t(m)];
    double n = I.im_norm();
    for (double& v : I.vec) v /= n;
    ImaginaryUnit out{I};
    CliffordNum anti = mul(out.to_clifford(), j.to_clifford()) +
                       mul(j.to_clifford(), out.to_clifford());
    if (abs(anti) > 1e-12)
        throw std::runtime_error("anticommuting_unit construction failed");
    return out;
}

std::string to_string(const CliffordNum& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double v = a[BladeIndex(i)];
        if (v == 0.0) continue;
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        os << std::fabs(v);
        if (i != 0) {
            os << "*e";
            for (int b = 0; b < a.dim(); ++b)
                if (i & (std::size_t(1) << b)) os << (b + 1);
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace cliffspec
