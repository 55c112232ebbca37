#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cliffspec/battery.hpp"
#include "cliffspec/mult_model.hpp"
#include "cliffspec/rng.hpp"

using namespace cliffspec;

namespace {

DiscreteMeasureSpace uniform_space(int n) { return DiscreteMeasureSpace{std::vector<double>(std::size_t(n), 1.0)}; }

MeasurableFn paravector_symbol(std::vector<Paravector> vals) {
    MeasurableFn h;
    for (const auto& v : vals) h.values.push_back(v.to_clifford());
    h.range = RangeType::paravector;
    return h;
}

double mat_diff(const CliffordMatrix& a, const CliffordMatrix& b) {
    return operator_norm(a - b);
}

Paravector pv(int d, double s0, double v1, double v2 = 0.0) {
    Paravector s(d, s0);
    s.vec[0] = v1;
    if (d > 1) s.vec[1] = v2;
    return s;
}

} // namespace

TEST_CASE("measure space and symbol validation") {
    DiscreteMeasureSpace good = uniform_space(3);
    CHECK_NOTHROW(good.validate());
    DiscreteMeasureSpace bad{{1.0, 0.0}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    MeasurableFn h = paravector_symbol({pv(2, 1.0, 2.0)});
    CHECK_NOTHROW(h.validate());
    h.values[0] = CliffordNum::blade(2, 3); // e12 is not a paravector
    CHECK_THROWS_AS(h.validate(), std::invalid_argument);
    h.range = RangeType::n_rd; // but it does multiply norms
    CHECK_NOTHROW(h.validate());
    CHECK(h.sup_norm() == doctest::Approx(1.0));
}

TEST_CASE("diagonal construction") {
    MeasurableFn h = paravector_symbol({pv(2, 0.0, 1.0), pv(2, 0.0, 0.0, 2.0)});
    CliffordMatrix m = build_mult(uniform_space(2), h);
    CHECK(abs(m(0, 0) - CliffordNum::blade(2, 1)) == 0.0);
    CHECK(abs(m(1, 1) - CliffordNum::blade(2, 2) * 2.0) == 0.0);
    CHECK(abs(m(0, 1)) == 0.0);

    // For paravector symbols the operator norm equals the sup norm.
    CHECK(operator_norm(m) == doctest::Approx(h.sup_norm()).epsilon(1e-12));

    // The operator acts by pointwise left multiplication.
    Rng rng(61);
    ModuleVector v(2, 2);
    v[0] = rng.clifford(2);
    v[1] = rng.clifford(2);
    ModuleVector mv = m.apply(v);
    CHECK(abs(mv[0] - mul(h.values[0], v[0])) <= 1e-13);
    CHECK(abs(mv[1] - mul(h.values[1], v[1])) <= 1e-13);
}

TEST_CASE("essential range") {
    MeasurableFn h = paravector_symbol({pv(1, 0.0, 1.0), pv(1, 0.0, 1.0), pv(1, 3.0, 0.0)});
    std::vector<CliffordNum> er = essran(uniform_space(3), h);
    REQUIRE(er.size() == 2);
    CHECK(abs(er[0] - CliffordNum::blade(1, 1)) == 0.0);
    CHECK(abs(er[1] - CliffordNum(1, 3.0)) == 0.0);

    MeasurableFn c = paravector_symbol({pv(1, 2.0, 0.0), pv(1, 2.0, 0.0)});
    CHECK(essran(uniform_space(2), c).size() == 1);
}

TEST_CASE("spectrum of a multiplication operator") {
    MeasurableFn h = paravector_symbol({pv(2, 0.0, 1.0), pv(2, 0.0, 0.0, 2.0)});
    DiscreteMeasureSpace space = uniform_space(2);
    SpectralSet spec = spectrum_mult(space, h);
    REQUIRE(spec.spheres.size() == 2);
    CHECK(spec.spheres[0].x == 0.0);
    CHECK(spec.spheres[0].r == doctest::Approx(1.0));
    CHECK(spec.spheres[1].r == doctest::Approx(2.0));
    CHECK(spec.spheres[0].multiplicity == 2); // 2^{d-1} per point, d = 2

    // Closed form matches the eigenvalue route exactly.
    CHECK(hausdorff(spec, spectrum_exact(build_mult(space, h))) <= 1e-12);

    Rng rng(62);
    for (int k = 0; k < 20; ++k) {
        int d = 1 + k % 3, n = 1 + k % 4;
        MeasurableFn hr;
        hr.range = RangeType::paravector;
        for (int i = 0; i < n; ++i) hr.values.push_back(rng.paravector(d, 2.0).to_clifford());
        DiscreteMeasureSpace sp = uniform_space(n);
        SpectralSet a = spectrum_mult(sp, hr);
        SpectralSet b = spectrum_exact(build_mult(sp, hr));
        CHECK(hausdorff(a, b) <= 1e-9);
        CHECK(a.total_multiplicity() == b.total_multiplicity());
    }
}

TEST_CASE("pointwise algebra") {
    Rng rng(63);
    for (int k = 0; k < 20; ++k) {
        int d = 1 + k % 3, n = 1 + k % 3;
        MeasurableFn g, h;
        for (int i = 0; i < n; ++i) {
            g.values.push_back(rng.clifford(d));
            h.values.push_back(rng.clifford(d));
        }
        DiscreteMeasureSpace sp = uniform_space(n);
        // M_g M_h = M_{gh} and (M_h)* = M_{conj h}.
        CHECK(mat_diff(build_mult(sp, g) * build_mult(sp, h),
                       build_mult(sp, pointwise_product(g, h))) <= 1e-12);
        CHECK(mat_diff(adjoint(build_mult(sp, h)),
                       build_mult(sp, pointwise_conjugate(h))) == 0.0);
        MultAdjointReport rep = mult_adjoint_check(sp, h);
        CHECK(rep.exact);
        CHECK(rep.entry_residual == 0.0);
    }
}

TEST_CASE("inverses") {
    MeasurableFn h = paravector_symbol({pv(2, 3.0, 4.0), pv(2, 0.0, 0.0, 2.0)});
    DiscreteMeasureSpace sp = uniform_space(2);
    CliffordMatrix inv = mult_inverse(sp, h);
    CHECK(mat_diff(build_mult(sp, h) * inv, CliffordMatrix::identity(2, 2)) <= 1e-13);
    CHECK(mat_diff(inv * build_mult(sp, h), CliffordMatrix::identity(2, 2)) <= 1e-13);

    MeasurableFn zero = paravector_symbol({pv(2, 0.0, 0.0)});
    CHECK_THROWS_AS(mult_inverse(uniform_space(1), zero), std::domain_error);

    MeasurableFn general;
    general.values = {CliffordNum(3, 1.0) + CliffordNum::blade(3, 7)};
    general.range = RangeType::general;
    CHECK_THROWS_AS(mult_inverse(uniform_space(1), general), std::invalid_argument);
}

TEST_CASE("resolvents against the scalar closed form") {
    // h = e1, s = 3: q = 8 - 6 e1, S_L^{-1}(s, M_h) = diag((3 + e1)/10).
    MeasurableFn h = paravector_symbol({pv(2, 0.0, 1.0)});
    DiscreteMeasureSpace sp = uniform_space(1);
    MultResolventReport rep = mult_resolvent_check(sp, h, Paravector(2, 3.0));
    CHECK(rep.left_residual <= 1e-12);
    CHECK(rep.right_residual <= 1e-12);
    CliffordMatrix sl = s_resolvent_left(build_mult(sp, h), Paravector(2, 3.0));
    CliffordNum want = CliffordNum(2, 0.3) + CliffordNum::blade(2, 1, 0.1);
    CHECK(abs(sl(0, 0) - want) <= 1e-12);

    Rng rng(64);
    int tried = 0;
    for (int k = 0; tried < 30 && k < 300; ++k) {
        int d = 1 + k % 3, n = 1 + k % 3;
        MeasurableFn hr;
        hr.range = RangeType::paravector;
        for (int i = 0; i < n; ++i) hr.values.push_back(rng.paravector(d, 1.5).to_clifford());
        DiscreteMeasureSpace spr = uniform_space(n);
        Paravector s = rng.paravector(d, 4.0);
        if (spectrum_mult(spr, hr).distance(s) < 0.3) continue;
        ++tried;
        MultResolventReport r = mult_resolvent_check(spr, hr, s);
        CHECK(r.left_residual <= 1e-10);
        CHECK(r.right_residual <= 1e-10);
    }
    CHECK(tried == 30);
}

TEST_CASE("pencil sublevel radius") {
    Paravector real_s(2, 2.0);
    CHECK(sector_eps(real_s, 0.5) == doctest::Approx(0.5).epsilon(1e-14));

    Paravector s = pv(2, 0.7, 1.0); // |Im s| = 1
    CHECK(sector_eps(s, 1.0) == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
    // Monotone in eps, vanishing with it.
    CHECK(sector_eps(s, 0.1) < sector_eps(s, 0.2));
    CHECK(sector_eps(s, 1e-8) <= 1e-8);

    for (int k = 0; k < 6; ++k) {
        Paravector sp = pv(2, 0.3 * k, 0.4 + 0.2 * k);
        SectorEpsReport rep = sector_eps_inclusion_check(sp, 0.3, 4000, 77 + k);
        CHECK(rep.samples == 4000);
        CHECK(rep.pass());
    }
}

TEST_CASE("bisectorial resolvent bound") {
    Rng rng(65);
    double omega = 0.3, phi = 0.6;
    for (int d = 1; d <= 3; ++d) {
        MeasurableFn h = sector_symbol(rng, d, 4, omega);
        DiscreteMeasureSpace sp = uniform_space(4);
        MultBisectorialReport rep = mult_bisectorial_bound(sp, h, omega, phi);
        CHECK(rep.sector_ok);
        CHECK(rep.max_bound_ratio <= 1.0 + 1e-9);
        CHECK(rep.worst_right_ratio <= 1.0 + 1e-9);
        CHECK(rep.pass());
    }

    // A symbol outside the sector is flagged.
    MeasurableFn off = paravector_symbol({pv(1, 0.1, 1.0)}); // arg ~ 84 degrees
    MultBisectorialReport bad = mult_bisectorial_bound(uniform_space(1), off, omega, phi);
    CHECK_FALSE(bad.sector_ok);
}

TEST_CASE("calculus oracle") {
    Rng rng(66);
    MeasurableFn h;
    h.range = RangeType::paravector;
    for (int i = 0; i < 3; ++i) h.values.push_back(rng.paravector(2, 1.5).to_clifford());
    DiscreteMeasureSpace sp = uniform_space(3);
    CliffordMatrix m = build_mult(sp, h);

    SliceFunction sq = SliceFunction::intrinsic(RationalIntrinsic::polynomial({0.0, 0.0, 1.0}));
    CalculusParams p{Contour::circle_for(m), {}, -1, true};
    MultOracleReport r = mult_calculus_oracle(sp, h, sq, CalcKind::bounded_l, p);
    CHECK(r.residual <= std::max(1e-7, 2.0 * r.estimate));

    // Sector symbols through the sector and regularized routes.
    MeasurableFn hs = sector_symbol(rng, 2, 3, 0.3);
    CalculusParams ps{Contour::sector(0.9, Contour::default_unit(2), 1e-8, 1e8, 48, 8), {}, -1,
                      true};
    MultOracleReport ro = mult_calculus_oracle(sp, hs,
                                               SliceFunction::intrinsic(regularizer(1)),
                                               CalcKind::omega_l, ps);
    CHECK(ro.residual <= std::max(1e-6, 2.0 * ro.estimate));

    SliceFunction id_fn = SliceFunction::intrinsic(RationalIntrinsic::polynomial({0.0, 1.0}));
    id_fn.set_growth({GrowthClass::Kind::SHpoly, 1.0, 1.0});
    CalculusParams ph = ps;
    ph.m = 2;
    MultOracleReport rh = mult_calculus_oracle(sp, hs, id_fn, CalcKind::hinf_l, ph);
    CHECK(rh.residual <= std::max(1e-6, 2.0 * rh.estimate));
}
