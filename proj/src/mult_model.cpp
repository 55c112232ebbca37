#include "cliffspec/mult_model.hpp"

#include <cmath>

#include "cliffspec/rng.hpp"

namespace cliffspec {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool in_grade_01(const CliffordNum& c, double tol) {
    for (std::size_t a = 1; a < c.size(); ++a)
        if ((a & (a - 1)) != 0 && std::fabs(c[BladeIndex(a)]) > tol) return false;
    return true;
}

CliffordNum n_rd_inverse(const CliffordNum& c) {
    double n2 = abs(c) * abs(c);
    if (n2 == 0.0) throw std::domain_error("inverse of zero");
    return conjugate(c) * (1.0 / n2);
}
} // namespace

void DiscreteMeasureSpace::validate() const {
    if (weights.empty()) throw std::invalid_argument("measure space needs at least one point");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("measure weights must be positive");
}

std::string to_string(RangeType r) {
    switch (r) {
        case RangeType::paravector: return "paravector";
        case RangeType::n_rd: return "N_Rd";
        case RangeType::general: return "general";
    }
    throw std::logic_error("unreachable");
}

void MeasurableFn::validate() const {
    if (values.empty()) throw std::invalid_argument("measurable function needs values");
    int dd = values.front().dim();
    for (const auto& v : values)
        if (v.dim() != dd) throw std::invalid_argument("mixed algebra dimensions in h");
    if (range == RangeType::paravector) {
        for (const auto& v : values)
            if (!in_grade_01(v, 1e-12))
                throw std::invalid_argument("h flagged paravector but has higher-grade parts");
    } else if (range == RangeType::n_rd) {
        for (const auto& v : values)
            if (!in_N_Rd(v, 1e-9))
                throw std::invalid_argument("h flagged N(R_d) but s*conj(s) != |s|^2");
    }
}

double MeasurableFn::sup_norm() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, abs(v));
    return m;
}

CliffordMatrix build_mult(const DiscreteMeasureSpace& space, const MeasurableFn& h) {
    space.validate();
    h.validate();
    if (space.size() != int(h.values.size()))
        throw std::invalid_argument("space and h sizes differ");
    CliffordMatrix m(space.size(), h.d());
    for (int i = 0; i < space.size(); ++i) m(i, i) = h.values[std::size_t(i)];
    return m;
}

std::vector<CliffordNum> essran(const DiscreteMeasureSpace& space, const MeasurableFn& h) {
    space.validate();
    std::vector<CliffordNum> out;
    for (const auto& v : h.values) {
        bool seen = false;
        for (const auto& u : out)
            if (abs(v - u) <= 1e-12) { seen = true; break; }
        if (!seen) out.push_back(v);
    }
    return out;
}

SpectralSet spectrum_mult(const DiscreteMeasureSpace& space, const MeasurableFn& h) {
    if (h.range != RangeType::paravector)
        throw std::invalid_argument("spectrum_mult needs paravector-valued h");
    space.validate();
    h.validate();
    const int d = h.d();
    const int per_point = std::max(1, (1 << d) / 2); // realified count per value
    SpectralSet out;
    out.tol = 1e-12;
    for (const auto& v : h.values) {
        Paravector p = to_paravector(v);
        double x = p.s0, r = p.im_norm();
        bool merged = false;
        for (auto& sp : out.spheres) {
            if (std::hypot(sp.x - x, sp.r - r) <= out.tol) {
                sp.multiplicity += per_point;
                merged = true;
                break;
            }
        }
        if (!merged) out.spheres.push_back({x, r, per_point});
    }
    std::sort(out.spheres.begin(), out.spheres.end(),
              [](const SpectralSphere& a, const SpectralSphere& b) {
                  return a.x != b.x ? a.x < b.x : a.r < b.r;
              });
    return out;
}

MeasurableFn pointwise_product(const MeasurableFn& g, const MeasurableFn& h) {
    if (g.values.size() != h.values.size())
        throw std::invalid_argument("pointwise product needs equal sizes");
    MeasurableFn out;
    out.range = RangeType::general;
    out.values.reserve(g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i)
        out.values.push_back(mul(g.values[i], h.values[i]));
    return out;
}

MeasurableFn pointwise_conjugate(const MeasurableFn& h) {
    MeasurableFn out = h;
    for (auto& v : out.values) v = conjugate(v);
    return out;
}

CliffordMatrix mult_inverse(const DiscreteMeasureSpace& space, const MeasurableFn& h) {
    h.validate();
    if (h.range == RangeType::general)
        throw std::invalid_argument("mult_inverse needs paravector or N(R_d) values");
    MeasurableFn inv = h;
    for (auto& v : inv.values) {
        if (abs(v) <= 0.0) throw std::domain_error("h vanishes: M_h not injective");
        v = n_rd_inverse(v);
    }
    inv.range = RangeType::general;
    return build_mult(space, inv);
}

MultAdjointReport mult_adjoint_check(const DiscreteMeasureSpace& space, const MeasurableFn& h) {
    CliffordMatrix a = adjoint(build_mult(space, h));
    CliffordMatrix b = build_mult(space, pointwise_conjugate(h));
    MultAdjointReport rep;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            rep.entry_residual = std::max(rep.entry_residual, abs(a(i, j) - b(i, j)));
    rep.exact = rep.entry_residual == 0.0;
    return rep;
}

MultResolventReport mult_resolvent_check(const DiscreteMeasureSpace& space, const MeasurableFn& h,
                                         const Paravector& s) {
    if (h.range != RangeType::paravector)
        throw std::invalid_argument("resolvent closed form needs paravector h");
    CliffordMatrix m = build_mult(space, h);
    CliffordMatrix left = s_resolvent_left(m, s);
    CliffordMatrix right = s_resolvent_right(m, s);

    const int d = h.d();
    CliffordNum sbar = s.conj().to_clifford();
    const double n2 = s.norm() * s.norm();
    MultResolventReport rep;
    for (int i = 0; i < m.n(); ++i) {
        const CliffordNum& hv = h.values[std::size_t(i)];
        CliffordNum q = mul(hv, hv) - (2.0 * s.s0) * hv + CliffordNum(d, n2);
        // q = h^2 - 2 s_0 h + |s|^2 is itself a paravector; invert in closed form.
        CliffordNum qinv = paravector_inverse(to_paravector(q)).to_clifford();
        CliffordNum le = mul(qinv, sbar) - mul(hv, qinv);
        CliffordNum re = mul(sbar - hv, qinv);
        rep.left_residual = std::max(rep.left_residual, abs(left(i, i) - le));
        rep.right_residual = std::max(rep.right_residual, abs(right(i, i) - re));
        for (int j = 0; j < m.n(); ++j)
            if (j != i) {
                rep.left_residual = std::max(rep.left_residual, abs(left(i, j)));
                rep.right_residual = std::max(rep.right_residual, abs(right(i, j)));
            }
    }
    return rep;
}

double sector_eps(const Paravector& s, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    double y = s.im_norm();
    return std::sqrt(y * y + eps * eps) - y;
}

SectorEpsReport sector_eps_inclusion_check(const Paravector& s, double eps, int samples,
                                           std::uint64_t seed) {
    SectorEpsReport rep;
    rep.samples = samples;
    const int d = s.dim();
    if (d < 1) throw std::invalid_argument("need d >= 1");
    const double y = s.im_norm();
    const double es = sector_eps(s, eps);
    const double e2 = eps * eps;
    Rng rng(seed);

    auto pencil_abs = [&](const Paravector& q) {
        CliffordNum qc = q.to_clifford();
        CliffordNum val =
            mul(qc, qc) - (2.0 * s.s0) * qc + CliffordNum(d, s.norm() * s.norm());
        return abs(val);
    };
    auto sphere_dist = [&](const Paravector& q) {
        return std::hypot(q.s0 - s.s0, q.im_norm() - y);
    };

    for (int k = 0; k < samples; ++k) {
        // Forward: a point of [s] + U_{eps_s}(0) must satisfy the inequality.
        Paravector on(d, s.s0);
        ImaginaryUnit j = rng.unit(d);
        for (int i = 0; i < d; ++i) on.vec[std::size_t(i)] = y * j.para().vec[std::size_t(i)];
        Paravector q = on;
        // Strictly interior offset (open ball).
        double rr = es * std::pow(rng.uniform(), 1.0 / (d + 1)) * (1.0 - 1e-9);
        ImaginaryUnit dir = rng.unit(d);
        double ds0 = rng.uniform(-1.0, 1.0);
        double nn = std::sqrt(1.0 + ds0 * ds0); // not uniform on the ball; coverage only
        q.s0 += rr * ds0 / nn;
        for (int i = 0; i < d; ++i)
            q.vec[std::size_t(i)] += rr * dir.para().vec[std::size_t(i)] / nn;
        if (!(pencil_abs(q) < e2 + 1e-12)) ++rep.forward_violations;

        // Backward: a point satisfying the inequality must lie in [s] + U_eps(0).
        Paravector b(d, s.s0 + rng.uniform(-(y + 2 * eps), y + 2 * eps));
        for (int i = 0; i < d; ++i)
            b.vec[std::size_t(i)] = rng.uniform(-(y + 2 * eps), y + 2 * eps);
        if (pencil_abs(b) < e2 && sphere_dist(b) > eps + 1e-12) ++rep.backward_violations;
    }
    return rep;
}

MultBisectorialReport mult_bisectorial_bound(const DiscreteMeasureSpace& space,
                                             const MeasurableFn& h, double omega, double phi) {
    if (!(omega > 0.0 && omega < phi && phi < kPi / 2))
        throw std::invalid_argument("need 0 < omega < phi < pi/2");
    if (h.range != RangeType::paravector)
        throw std::invalid_argument("bisectorial bound needs paravector h");
    MultBisectorialReport rep;

    rep.sector_ok = true;
    for (const auto& v : essran(space, h)) {
        Paravector p = to_paravector(v);
        if (std::atan2(p.im_norm(), std::fabs(p.s0)) > omega + 1e-12) rep.sector_ok = false;
    }
    if (!rep.sector_ok) return rep;

    CliffordMatrix m = build_mult(space, h);
    const int d = h.d();
    const ImaginaryUnit j = Contour::default_unit(d);
    const double c = std::sqrt(1.0 + std::cos(phi - omega));
    const double denom_const = c * (std::sqrt(2.0) - c);
    const double numer = std::pow(2.0, d / 2.0 - 1.0);

    std::vector<std::pair<Paravector, double>> pts;
    for (int ri = 0; ri < 200; ++ri) {
        double r = std::pow(10.0, -3.0 + 6.0 * ri / 199.0);
        for (int ai = 0; ai < 8; ++ai) {
            double psi = phi + (ai + 0.5) * (kPi - 2.0 * phi) / 8.0;
            Paravector s(d, r * std::cos(psi));
            for (int i = 0; i < d; ++i)
                s.vec[std::size_t(i)] = r * std::sin(psi) * j.para().vec[std::size_t(i)];
            pts.emplace_back(s, r);
        }
    }
    for (const auto& [s, r] : pts) {
        double nl = operator_norm(s_resolvent_left(m, s));
        rep.max_bound_ratio = std::max(rep.max_bound_ratio, nl * r * denom_const / numer);
        rep.c_phi = std::max(rep.c_phi, nl * r);
    }
    for (const auto& [s, r] : pts) {
        double nr = operator_norm(s_resolvent_right(m, s));
        rep.worst_right_ratio = std::max(rep.worst_right_ratio, nr * r / (2.0 * rep.c_phi));
    }
    return rep;
}

MultOracleReport mult_calculus_oracle(const DiscreteMeasureSpace& space, const MeasurableFn& h,
                                      const SliceFunction& f, CalcKind kind,
                                      const CalculusParams& p) {
    if (h.range != RangeType::paravector)
        throw std::invalid_argument("calculus oracle needs paravector h");
    CliffordMatrix m = build_mult(space, h);
    CalculusResult r = apply_calculus(f, m, kind, p);

    MeasurableFn fh;
    fh.range = RangeType::general;
    fh.values.reserve(h.values.size());
    for (const auto& v : h.values) fh.values.push_back(f.eval(to_paravector(v)));
    CliffordMatrix oracle = build_mult(space, fh);

    MultOracleReport rep;
    rep.residual = operator_norm(r.op - oracle);
    rep.estimate = r.error_estimate;
    return rep;
}

} // namespace cliffspec
