#include "cliffspec/slice_functions.hpp"

#include <cmath>

namespace cliffspec {

namespace {

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> r = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * z + c[i];
    return r;
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

int degree(const std::vector<double>& c) {
    for (std::size_t i = c.size(); i-- > 0;)
        if (c[i] != 0.0) return int(i);
    return -1;
}

double arg_of(double x, double y) { return std::atan2(y, x); }

bool in_double_sector(double x, double y, double theta) {
    double a = std::fabs(arg_of(x, y));
    return a < theta || a > 3.14159265358979323846 - theta;
}

} // namespace

RationalIntrinsic RationalIntrinsic::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    return RationalIntrinsic{std::move(coeffs), {1.0}};
}

RationalIntrinsic RationalIntrinsic::rational(std::vector<double> num, std::vector<double> den) {
    if (num.empty()) num.push_back(0.0);
    if (degree(den) < 0) throw std::invalid_argument("zero denominator polynomial");
    return RationalIntrinsic{std::move(num), std::move(den)};
}

std::complex<double> RationalIntrinsic::eval(std::complex<double> z) const {
    return horner(num, z) / horner(den, z);
}

CliffordNum RationalIntrinsic::eval(const Paravector& s) const {
    const double y = s.im_norm();
    std::complex<double> w = eval(std::complex<double>(s.s0, y));
    CliffordNum r(s.dim(), w.real());
    if (y > 0.0) {
        for (int i = 0; i < s.dim(); ++i)
            r[BladeIndex(1) << i] = w.imag() * s.vec[std::size_t(i)] / y;
    }
    return r;
}

int RationalIntrinsic::num_degree() const { return degree(num); }
int RationalIntrinsic::den_degree() const { return degree(den); }

RationalIntrinsic RationalIntrinsic::operator*(const RationalIntrinsic& o) const {
    return RationalIntrinsic{poly_mul(num, o.num), poly_mul(den, o.den)};
}

RationalIntrinsic regularizer(int m) {
    if (m < 1) throw std::invalid_argument("regularizer order must be >= 1");
    std::vector<double> num(std::size_t(m) + 1, 0.0);
    num[std::size_t(m)] = 1.0;
    std::vector<double> den{1.0};
    const std::vector<double> base{1.0, 0.0, 1.0}; // 1 + s^2
    for (int i = 0; i < m; ++i) den = poly_mul(den, base);
    return RationalIntrinsic{std::move(num), std::move(den)};
}

bool FunctionDomain::contains(double x, double y) const {
    switch (kind) {
        case Kind::full:
            return true;
        case Kind::punctured_sector:
            return (x != 0.0 || y != 0.0) && in_double_sector(x, y, theta);
        case Kind::complement_of_spheres: {
            for (const auto& sp : excluded)
                if (std::hypot(x - sp.x, std::fabs(y) - sp.r) <= 0.0) return false;
            return true;
        }
    }
    return false;
}

bool FunctionDomain::contains(const Paravector& s) const { return contains(s.s0, s.im_norm()); }

// ---------------------------------------------------------------------------

SliceFunction::SliceFunction(Chirality chi, std::vector<Term> terms, FunctionDomain dom,
                             std::optional<GrowthClass> growth)
    : chi_(chi), d_(0), terms_(std::move(terms)), dom_(dom), growth_(growth) {
    if (terms_.empty()) throw std::invalid_argument("slice function needs at least one term");
    d_ = terms_.front().coef.dim();
    for (const auto& t : terms_)
        if (t.coef.dim() != d_) throw std::invalid_argument("mixed algebra dimensions");
    if (chi_ == Chirality::intrinsic && !is_intrinsic())
        throw std::invalid_argument("intrinsic chirality requires real scalar coefficients");
}

SliceFunction SliceFunction::intrinsic(RationalIntrinsic g, FunctionDomain dom,
                                       std::optional<GrowthClass> growth) {
    // Intrinsic functions do not depend on the ambient algebra; keep them at
    // d = 0 until combined, the coefficient is promoted on demand in eval.
    std::vector<Term> t{{CliffordNum(0, 1.0), std::move(g)}};
    return SliceFunction(Chirality::intrinsic, std::move(t), dom, growth);
}

SliceFunction SliceFunction::constant(const CliffordNum& c, Chirality chi) {
    return SliceFunction(chi, {Term{c, RationalIntrinsic::polynomial({1.0})}});
}

bool SliceFunction::is_intrinsic() const {
    for (const auto& t : terms_)
        for (std::size_t i = 1; i < t.coef.size(); ++i)
            if (t.coef[BladeIndex(i)] != 0.0) return false;
    return true;
}

std::pair<CliffordNum, CliffordNum> SliceFunction::stem(double x, double y) const {
    CliffordNum f0(d_), f1(d_);
    for (const auto& t : terms_) {
        std::complex<double> w = t.g.eval(std::complex<double>(x, y));
        f0 += w.real() * t.coef;
        f1 += w.imag() * t.coef;
    }
    return {f0, f1};
}

CliffordNum SliceFunction::eval(const Paravector& s) const {
    if (!dom_.contains(s))
        throw std::domain_error("evaluation point outside declared domain");
    const int ds = s.dim();
    const double y = s.im_norm();
    auto [f0, f1] = stem(s.s0, y);
    auto promote = [&](const CliffordNum& c) {
        if (c.dim() == ds) return c;
        if (c.dim() != 0) throw std::invalid_argument("algebra dimension mismatch");
        return CliffordNum(ds, c.scalar());
    };
    CliffordNum F0 = promote(f0), F1 = promote(f1);
    if (y == 0.0) {
        if (abs(F1) > 1e-10)
            throw std::domain_error("stem incompatible at y = 0: f1(x,0) != 0");
        return F0;
    }
    Paravector jp(ds);
    for (int i = 0; i < ds; ++i) jp.vec[std::size_t(i)] = s.vec[std::size_t(i)] / y;
    CliffordNum J = jp.to_clifford();
    if (chi_ == Chirality::right) return F0 + mul(F1, J);
    return F0 + mul(J, F1);
}

SliceFunction SliceFunction::sharp() const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& tm : terms_) t.push_back({conjugate(tm.coef), tm.g});
    Chirality chi = chi_;
    if (chi == Chirality::left) chi = Chirality::right;
    else if (chi == Chirality::right) chi = Chirality::left;
    return SliceFunction(chi, std::move(t), dom_, growth_);
}

SliceFunction SliceFunction::times_intrinsic(const RationalIntrinsic& e) const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& tm : terms_) t.push_back({tm.coef, tm.g * e});
    return SliceFunction(chi_, std::move(t), dom_, std::nullopt);
}

CliffordNum SliceFunction::f_infinity() const {
    CliffordNum acc(d_);
    for (const auto& t : terms_) {
        int dn = t.g.num_degree(), dd = t.g.den_degree();
        if (dn > dd) throw std::domain_error("function grows at infinity; f_infinity undefined");
        if (dn == dd && dn >= 0)
            acc += (t.g.num[std::size_t(dn)] / t.g.den[std::size_t(dd)]) * t.coef;
    }
    return acc;
}

// ---------------------------------------------------------------------------

HolomorphyReport check_holomorphic(const SliceFunction& f,
                                   const std::vector<std::pair<double, double>>& grid,
                                   double cr_threshold) {
    HolomorphyReport rep;
    const double h = 1e-5;
    for (auto [x, y] : grid) {
        auto [f0, f1] = f.stem(x, y);
        auto [g0, g1] = f.stem(x, -y);
        rep.max_symmetry_residual =
            std::max({rep.max_symmetry_residual, abs(g0 - f0), abs(g1 + f1)});

        auto [f0xp, f1xp] = f.stem(x + h, y);
        auto [f0xm, f1xm] = f.stem(x - h, y);
        auto [f0yp, f1yp] = f.stem(x, y + h);
        auto [f0ym, f1ym] = f.stem(x, y - h);
        CliffordNum dxf0 = (1.0 / (2 * h)) * (f0xp - f0xm);
        CliffordNum dyf0 = (1.0 / (2 * h)) * (f0yp - f0ym);
        CliffordNum dxf1 = (1.0 / (2 * h)) * (f1xp - f1xm);
        CliffordNum dyf1 = (1.0 / (2 * h)) * (f1yp - f1ym);
        rep.max_cr_residual =
            std::max({rep.max_cr_residual, abs(dxf0 - dyf1), abs(dyf0 + dxf1)});
    }
    rep.pass = rep.max_symmetry_residual <= 1e-10 && rep.max_cr_residual <= cr_threshold;
    return rep;
}

HolomorphyReport check_holomorphic_stems(
    const std::function<std::pair<double, double>(double, double)>& stem,
    const std::vector<std::pair<double, double>>& grid, double cr_threshold) {
    HolomorphyReport rep;
    const double h = 1e-5;
    for (auto [x, y] : grid) {
        auto [f0, f1] = stem(x, y);
        auto [g0, g1] = stem(x, -y);
        rep.max_symmetry_residual =
            std::max({rep.max_symmetry_residual, std::fabs(g0 - f0), std::fabs(g1 + f1)});
        double dxf0 = (stem(x + h, y).first - stem(x - h, y).first) / (2 * h);
        double dyf0 = (stem(x, y + h).first - stem(x, y - h).first) / (2 * h);
        double dxf1 = (stem(x + h, y).second - stem(x - h, y).second) / (2 * h);
        double dyf1 = (stem(x, y + h).second - stem(x, y - h).second) / (2 * h);
        rep.max_cr_residual =
            std::max({rep.max_cr_residual, std::fabs(dxf0 - dyf1), std::fabs(dyf0 + dxf1)});
    }
    rep.pass = rep.max_symmetry_residual <= 1e-10 && rep.max_cr_residual <= cr_threshold;
    return rep;
}

GrowthClass classify_growth(const SliceFunction& f, double theta) {
    const double pi = 3.14159265358979323846;
    const double delta = 0.02;
    std::vector<double> angles{theta - delta, -(theta - delta), pi - theta + delta,
                               pi + theta - delta};
    const int nt = 49;
    std::vector<double> logt(nt), logf(nt);
    double max_abs = 0.0;
    for (int i = 0; i < nt; ++i) {
        double t = std::pow(10.0, -6.0 + 12.0 * i / (nt - 1));
        double worst = 0.0;
        for (double phi : angles) {
            auto [f0, f1] = f.stem(t * std::cos(phi), t * std::sin(phi));
            worst = std::max(worst, std::hypot(abs(f0), abs(f1)));
        }
        logt[std::size_t(i)] = std::log10(t);
        logf[std::size_t(i)] = std::log10(std::max(worst, 1e-300));
        max_abs = std::max(max_abs, worst);
    }
    // Slopes at the two ends give the local power behavior.
    double alpha0 = (logf[4] - logf[0]) / (logt[4] - logt[0]);
    double alpha_inf = (logf[nt - 1] - logf[nt - 5]) / (logt[nt - 1] - logt[nt - 5]);

    GrowthClass g;
    if (max_abs < 1e12 && alpha0 > 0.1 && alpha_inf < -0.1) {
        g.kind = GrowthClass::Kind::SH0;
        g.alpha = 0.0;
        g.C = max_abs;
        return g;
    }
    g.kind = GrowthClass::Kind::SHpoly;
    g.alpha = std::max({alpha_inf, -alpha0, 0.0});
    double c = 0.0;
    for (int i = 0; i < nt; ++i) {
        double t = std::pow(10.0, logt[std::size_t(i)]);
        double bound = std::pow(t, g.alpha) + std::pow(t, -g.alpha);
        c = std::max(c, std::pow(10.0, logf[std::size_t(i)]) / bound);
    }
    g.C = c;
    return g;
}

} // namespace cliffspec
