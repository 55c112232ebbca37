#include "cliffspec/calculus.hpp"

#include <Eigen/LU>
#include <cmath>

namespace cliffspec {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 8-point Gauss-Legendre rule on (-1, 1).
constexpr double kGlX[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                            -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                            0.7966664774136267,  0.9602898564975363};
constexpr double kGlW[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                            0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};

struct Node {
    Paravector s;
    std::complex<double> w; // ds_J in slice coordinates (real + imag * J)
};

Paravector slice_point(const ImaginaryUnit& j, std::complex<double> z) {
    Paravector s(j.dim(), z.real());
    for (int i = 0; i < j.dim(); ++i) s.vec[std::size_t(i)] = z.imag() * j.para().vec[std::size_t(i)];
    return s;
}

std::vector<Node> contour_nodes(const Contour& c) {
    std::vector<Node> nodes;
    const std::complex<double> mi(0.0, -1.0); // the -J of ds_J = s'(t)(-J)dt
    if (c.kind == Contour::Kind::circle) {
        if (c.nodes < 4) throw std::invalid_argument("circle contour needs >= 4 nodes");
        nodes.reserve(std::size_t(c.nodes));
        const double dt = 2.0 * kPi / c.nodes;
        for (int k = 0; k < c.nodes; ++k) {
            double t = dt * k;
            std::complex<double> e(std::cos(t), std::sin(t));
            std::complex<double> z = c.center + c.radius * e;
            // s'(t) = i r e^{it}; trapezoid weights are uniform on the circle.
            std::complex<double> ds = std::complex<double>(0.0, 1.0) * (c.radius * e) * mi * dt;
            nodes.push_back({slice_point(c.J, z), double(c.orientation) * ds});
        }
        return nodes;
    }

    if (c.nodes_per_panel != 8)
        throw std::invalid_argument("sector contour supports 8-node panels only");
    if (c.r_in <= 0.0 || c.r_out <= c.r_in)
        throw std::invalid_argument("sector contour needs 0 < r_in < r_out");
    if (!(c.phi > 0.0 && c.phi < kPi / 2))
        throw std::invalid_argument("sector half-angle must lie in (0, pi/2)");

    // Boundary of the double sector, positively oriented around both lobes:
    // inward along arg = phi, outward along arg = -phi, outward along
    // arg = pi - phi, inward along arg = pi + phi.
    struct Ray {
        double theta;
        double dir; // +1 outgoing (t increasing), -1 incoming
    };
    const Ray rays[4] = {{c.phi, -1.0}, {-c.phi, +1.0}, {kPi - c.phi, +1.0}, {kPi + c.phi, -1.0}};

    nodes.reserve(std::size_t(4 * c.panels_per_ray * 8));
    const double g = std::pow(c.r_out / c.r_in, 1.0 / c.panels_per_ray);
    for (const Ray& ray : rays) {
        std::complex<double> e(std::cos(ray.theta), std::sin(ray.theta));
        for (int p = 0; p < c.panels_per_ray; ++p) {
            double a = c.r_in * std::pow(g, p);
            double b = a * g;
            for (int q = 0; q < 8; ++q) {
                double t = 0.5 * (a + b) + 0.5 * (b - a) * kGlX[q];
                double dt = 0.5 * (b - a) * kGlW[q];
                std::complex<double> ds = ray.dir * e * mi * dt;
                nodes.push_back({slice_point(c.J, t * e), double(c.orientation) * ds});
            }
        }
    }
    return nodes;
}

/// (1/2pi) sum over nodes of the resolvent kernel, accumulated on the
/// realified operator.  Left:  S_L^{-1}(s,T) ds_J f(s);  the constants act by
/// left multiplication, i.e. block-diagonal factors on the right of the
/// matrix product.  Right: f(s) ds_J S_R^{-1}(s,T).
Eigen::MatrixXd quad_realified(const SliceFunction& f, const CliffordMatrix& t, const Contour& c,
                               bool left) {
    const int n = t.n(), d = t.d();
    if (c.J.dim() != d) throw std::invalid_argument("contour unit has wrong algebra dimension");

    const Eigen::MatrixXd rt = realify_left(t).mat;
    const Eigen::MatrixXd rt2 = rt * rt;
    const Eigen::Index nr = rt.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(nr, nr);
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(nr, nr);

    for (const Node& node : contour_nodes(c)) {
        const Paravector& s = node.s;
        CliffordNum fs = f.eval(s);
        CliffordNum dsj(d, node.w.real());
        dsj += node.w.imag() * c.J.to_clifford();

        Eigen::MatrixXd q = rt2 - (2.0 * s.s0) * rt;
        q.diagonal().array() += s.norm() * s.norm();
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(q);
        Eigen::MatrixXd qinv = lu.solve(id);
        if (!qinv.allFinite())
            throw std::domain_error("contour passes through sigma_S(T)");

        CliffordNum sbar = s.conj().to_clifford();
        if (left) {
            CliffordNum w1 = mul(dsj, fs);
            acc.noalias() += qinv * realify_left_scalar(mul(sbar, w1), n);
            acc.noalias() -= rt * (qinv * realify_left_scalar(w1, n));
        } else {
            CliffordNum w1 = mul(fs, dsj);
            acc.noalias() += realify_left_scalar(mul(w1, sbar), n) * qinv;
            acc.noalias() -= realify_left_scalar(w1, n) * (rt * qinv);
        }
    }
    return acc / (2.0 * kPi);
}

CliffordNum promote(const CliffordNum& c, int d) {
    if (c.dim() == d) return c;
    if (c.dim() != 0) throw std::invalid_argument("algebra dimension mismatch");
    return CliffordNum(d, c.scalar());
}

/// e(T) = T^m (Id + T^2)^{-m} evaluated directly on the realification.
Eigen::MatrixXd regularizer_direct(const Eigen::MatrixXd& rt, int m) {
    const Eigen::Index nr = rt.rows();
    Eigen::MatrixXd b = rt * rt;
    b.diagonal().array() += 1.0;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(b);
    Eigen::MatrixXd x = Eigen::MatrixXd::Identity(nr, nr);
    for (int i = 0; i < m; ++i) x = lu.solve(x);
    for (int i = 0; i < m; ++i) x = rt * x;
    if (!x.allFinite()) throw std::domain_error("regularizer of T is not finite");
    return x;
}

bool kind_left(CalcKind k) {
    return k == CalcKind::bounded_l || k == CalcKind::unbounded_l || k == CalcKind::omega_l ||
           k == CalcKind::hinf_l;
}

CalcKind mirror(CalcKind k) {
    switch (k) {
        case CalcKind::bounded_l: return CalcKind::bounded_r;
        case CalcKind::bounded_r: return CalcKind::bounded_l;
        case CalcKind::unbounded_l: return CalcKind::unbounded_r;
        case CalcKind::unbounded_r: return CalcKind::unbounded_l;
        case CalcKind::omega_l: return CalcKind::omega_r;
        case CalcKind::omega_r: return CalcKind::omega_l;
        case CalcKind::hinf_l: return CalcKind::hinf_r;
        case CalcKind::hinf_r: return CalcKind::hinf_l;
    }
    throw std::logic_error("unreachable");
}

/// One pass of the selected calculus at the given contour resolution,
/// realified result plus the H-infinity regularizer residual.
std::pair<Eigen::MatrixXd, double> calc_pass(const SliceFunction& f, const CliffordMatrix& t,
                                             CalcKind kind, const Contour& contour,
                                             const SpectralSet& k, int m) {
    const bool left = kind_left(kind);
    switch (kind) {
        case CalcKind::bounded_l:
        case CalcKind::bounded_r:
        case CalcKind::omega_l:
        case CalcKind::omega_r:
            return {quad_realified(f, t, contour, left), 0.0};
        case CalcKind::unbounded_l:
        case CalcKind::unbounded_r: {
            (void)k;
            CliffordNum cinf = promote(f.f_infinity(), t.d());
            Eigen::MatrixXd r = realify_left_scalar(cinf, t.n()) - quad_realified(f, t, contour, left);
            return {r, 0.0};
        }
        case CalcKind::hinf_l:
        case CalcKind::hinf_r: {
            RationalIntrinsic e = regularizer(m);
            SliceFunction ef = f.times_intrinsic(e);
            Eigen::MatrixXd eft = quad_realified(ef, t, contour, left);
            Eigen::MatrixXd rt = realify_left(t).mat;
            Eigen::MatrixXd et = regularizer_direct(rt, m);
            Eigen::PartialPivLU<Eigen::MatrixXd> lu(et);
            Eigen::MatrixXd r = left ? Eigen::MatrixXd(lu.solve(eft))
                                     : Eigen::MatrixXd(eft * lu.inverse());
            if (!r.allFinite()) throw std::domain_error("regularizer of T is not invertible");
            Eigen::MatrixXd equad = quad_realified(SliceFunction::intrinsic(e), t, contour, left);
            return {r, spectral_norm(equad - et)};
        }
    }
    throw std::logic_error("unreachable");
}

int default_regularizer_order(const SliceFunction& f) {
    if (f.growth() && f.growth()->kind == GrowthClass::Kind::SHpoly)
        return int(std::floor(f.growth()->alpha)) + 1;
    return 1;
}

CalculusResult run_calc(const SliceFunction& f, const CliffordMatrix& t, CalcKind kind,
                        const CalculusParams& p) {
    int m = p.m >= 1 ? p.m : default_regularizer_order(f);
    auto [a, reg] = calc_pass(f, t, kind, p.contour, p.k, m);
    double est = 0.0;
    if (p.with_estimate) {
        auto [b, reg2] = calc_pass(f, t, kind, p.contour.refined(), p.k, m);
        (void)reg2;
        est = spectral_norm(a - b);
    }
    return {from_realified(a, t.n(), t.d()), kind, est, reg};
}

} // namespace

// ---------------------------------------------------------------------------

ImaginaryUnit Contour::default_unit(int d) {
    if (d < 1) throw std::invalid_argument("slice geometry needs d >= 1");
    Paravector j(d);
    j.vec[0] = 1.0;
    return ImaginaryUnit(j);
}

Contour Contour::circle(double center, double radius, ImaginaryUnit j, int nodes) {
    if (radius <= 0.0) throw std::invalid_argument("circle radius must be positive");
    Contour c;
    c.kind = Kind::circle;
    c.center = center;
    c.radius = radius;
    c.nodes = nodes;
    c.J = j;
    return c;
}

Contour Contour::circle_for(const SpectralSet& spectrum, int d, int nodes) {
    double lo = 0.0, hi = 0.0;
    if (!spectrum.spheres.empty()) {
        lo = hi = spectrum.spheres.front().x;
        for (const auto& sp : spectrum.spheres) {
            lo = std::min(lo, sp.x);
            hi = std::max(hi, sp.x);
        }
    }
    double center = 0.5 * (lo + hi);
    double maxdist = 0.0;
    for (const auto& sp : spectrum.spheres)
        maxdist = std::max(maxdist, std::hypot(sp.x - center, sp.r));
    double radius = 1.5 * maxdist + 0.05 * std::max(1.0, maxdist);
    return circle(center, radius, default_unit(d), nodes);
}

Contour Contour::circle_for(const CliffordMatrix& t, int nodes) {
    return circle_for(spectrum_exact(t), t.d(), nodes);
}

Contour Contour::circle_around(const SpectralSet& k, int d, int nodes) {
    return circle_for(k, d, nodes);
}

Contour Contour::sector(double phi, ImaginaryUnit j, double r_in, double r_out, int panels_per_ray,
                        int nodes_per_panel) {
    Contour c;
    c.kind = Kind::sector_rays;
    c.phi = phi;
    c.J = j;
    c.r_in = r_in;
    c.r_out = r_out;
    c.panels_per_ray = panels_per_ray;
    c.nodes_per_panel = nodes_per_panel;
    return c;
}

Contour Contour::refined() const {
    Contour c = *this;
    if (kind == Kind::circle)
        c.nodes *= 2;
    else
        c.panels_per_ray *= 2;
    return c;
}

bool calc_is_left(CalcKind k) { return kind_left(k); }

CalcKind calc_for(Chirality chi, CalcKind left_kind) {
    if (!kind_left(left_kind)) throw std::invalid_argument("calc_for expects a left kind");
    return chi == Chirality::right ? mirror(left_kind) : left_kind;
}

std::string to_string(CalcKind k) {
    switch (k) {
        case CalcKind::bounded_l: return "bounded-left";
        case CalcKind::bounded_r: return "bounded-right";
        case CalcKind::unbounded_l: return "unbounded-left";
        case CalcKind::unbounded_r: return "unbounded-right";
        case CalcKind::omega_l: return "omega-left";
        case CalcKind::omega_r: return "omega-right";
        case CalcKind::hinf_l: return "hinf-left";
        case CalcKind::hinf_r: return "hinf-right";
    }
    throw std::logic_error("unreachable");
}

CalcKind calc_kind_from_string(const std::string& s) {
    for (CalcKind k : {CalcKind::bounded_l, CalcKind::bounded_r, CalcKind::unbounded_l,
                       CalcKind::unbounded_r, CalcKind::omega_l, CalcKind::omega_r,
                       CalcKind::hinf_l, CalcKind::hinf_r})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown calculus kind: " + s);
}

// ---------------------------------------------------------------------------

CalculusResult bounded_calc(const SliceFunction& f, const CliffordMatrix& t, const Contour& contour,
                            bool with_estimate) {
    CalcKind k = calc_for(f.chirality(), CalcKind::bounded_l);
    return run_calc(f, t, k, {contour, {}, -1, with_estimate});
}

CalculusResult unbounded_calc(const SliceFunction& f, const CliffordMatrix& t, const SpectralSet& k,
                              const Contour& contour, bool with_estimate) {
    CalcKind kk = calc_for(f.chirality(), CalcKind::unbounded_l);
    return run_calc(f, t, kk, {contour, k, -1, with_estimate});
}

CalculusResult omega_calc(const SliceFunction& f, const CliffordMatrix& t, const Contour& contour,
                          bool with_estimate) {
    CalcKind k = calc_for(f.chirality(), CalcKind::omega_l);
    return run_calc(f, t, k, {contour, {}, -1, with_estimate});
}

CalculusResult hinf_calc(const SliceFunction& f, const CliffordMatrix& t, const Contour& contour,
                         int m, bool with_estimate) {
    CalcKind k = calc_for(f.chirality(), CalcKind::hinf_l);
    return run_calc(f, t, k, {contour, {}, m, with_estimate});
}

CalculusResult apply_calculus(const SliceFunction& f, const CliffordMatrix& t, CalcKind kind,
                              const CalculusParams& p) {
    if (f.chirality() == Chirality::left && !kind_left(kind))
        throw std::domain_error("right calculus is undefined for left slice functions");
    if (f.chirality() == Chirality::right && kind_left(kind))
        throw std::domain_error("left calculus is undefined for right slice functions");
    return run_calc(f, t, kind, p);
}

TransportReport adjoint_transport(const SliceFunction& f, const CliffordMatrix& t,
                                  CalcKind left_kind, const CalculusParams& p) {
    CalcKind kf = calc_for(f.chirality(), left_kind);
    SliceFunction fs = f.sharp();
    CalcKind ks = calc_for(fs.chirality(), left_kind);

    CliffordMatrix tstar = adjoint(t);
    CalculusResult a = apply_calculus(f, tstar, kf, p);
    CalculusResult b = apply_calculus(fs, t, ks, p);

    TransportReport rep;
    double scale = std::max(1.0, operator_norm(a.op));
    rep.relative_residual = operator_norm(a.op - adjoint(b.op)) / scale;
    rep.combined_estimate = std::max(a.error_estimate, b.error_estimate);
    if (f.is_intrinsic()) {
        CalculusResult c = apply_calculus(f, t, kf, p);
        rep.intrinsic_residual = operator_norm(a.op - adjoint(c.op)) / scale;
        rep.combined_estimate = std::max(rep.combined_estimate, c.error_estimate);
    }
    return rep;
}

// ---------------------------------------------------------------------------

BisectorialReport bisectorialize_impl(const CliffordMatrix& t, double omega) {
    if (!(omega > 0.0 && omega < kPi / 2))
        throw std::invalid_argument("sector angle must lie in (0, pi/2)");
    BisectorialReport rep;

    SpectralSet sig = spectrum_exact(t);
    rep.max_sector_arg = 0.0;
    for (const auto& sp : sig.spheres)
        rep.max_sector_arg = std::max(rep.max_sector_arg, std::atan2(sp.r, std::fabs(sp.x)));
    rep.spectrum_in_sector = rep.max_sector_arg <= omega + 1e-9;

    const ImaginaryUnit j = Contour::default_unit(t.d());
    const double scale = std::max(operator_norm(t), 1e-6);
    rep.worst_right_ratio = 0.0;
    rep.right_bound_ok = true;

    for (int pi_idx = 1; pi_idx <= 3; ++pi_idx) {
        double phi = omega + pi_idx * (kPi / 2 - omega) / 4.0;
        double cphi = 0.0;
        std::vector<std::pair<Paravector, double>> pts; // (s, |s|)
        for (int ri = 0; ri < 13; ++ri) {
            double r = scale * std::pow(10.0, -2.0 + 4.0 * ri / 12.0);
            for (int ai = 0; ai < 6; ++ai) {
                // Arguments strictly between phi and pi - phi: outside D_phi.
                double psi = phi + (ai + 0.5) * (kPi - 2.0 * phi) / 6.0;
                Paravector s = Paravector(t.d(), r * std::cos(psi));
                for (int i = 0; i < t.d(); ++i)
                    s.vec[std::size_t(i)] = r * std::sin(psi) * j.para().vec[std::size_t(i)];
                pts.emplace_back(s, r);
            }
        }
        for (const auto& [s, r] : pts)
            cphi = std::max(cphi, operator_norm(s_resolvent_left(t, s)) * r);
        double worst = 0.0;
        for (const auto& [s, r] : pts)
            worst = std::max(worst, operator_norm(s_resolvent_right(t, s)) * r / (2.0 * cphi));
        rep.c_table.emplace_back(phi, cphi);
        rep.worst_right_ratio = std::max(rep.worst_right_ratio, worst);
        if (worst > 1.0 + 1e-9) rep.right_bound_ok = false;
    }
    return rep;
}

BisectorialReport bisectorial_check(const CliffordMatrix& t, double omega) {
    return bisectorialize_impl(t, omega);
}

} // namespace cliffspec
