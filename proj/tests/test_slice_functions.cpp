#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cliffspec/rng.hpp"
#include "cliffspec/slice_functions.hpp"

using namespace cliffspec;

namespace {

std::vector<std::pair<double, double>> sample_grid() {
    std::vector<std::pair<double, double>> g;
    for (double x : {-1.5, -0.3, 0.2, 1.1, 2.0})
        for (double y : {0.1, 0.7, 1.3, 2.1}) g.emplace_back(x, y);
    return g;
}

Paravector pv(int d, double s0, double v1, double v2 = 0.0) {
    Paravector s(d, s0);
    s.vec[0] = v1;
    if (d > 1) s.vec[1] = v2;
    return s;
}

} // namespace

TEST_CASE("rational intrinsic evaluation") {
    RationalIntrinsic sq = RationalIntrinsic::polynomial({0.0, 0.0, 1.0}); // s^2
    CHECK(sq.eval(std::complex<double>(2.0, 0.0)) == std::complex<double>(4.0, 0.0));

    // s^2 at s = e1 is -1.
    CliffordNum v = sq.eval(pv(2, 0.0, 1.0));
    CHECK(abs(v + CliffordNum(2, 1.0)) <= 1e-14);

    // Evaluation agrees with direct Clifford multiplication on paravectors.
    Rng rng(41);
    for (int k = 0; k < 100; ++k) {
        int d = 1 + k % 3;
        Paravector s = rng.paravector(d, 2.0);
        CliffordNum direct = mul(s.to_clifford(), s.to_clifford());
        CHECK(abs(sq.eval(s) - direct) <= 1e-12);
    }

    RationalIntrinsic cauchy = RationalIntrinsic::rational({1.0}, {1.0, 0.0, 1.0}); // 1/(1+s^2)
    CHECK(cauchy.eval(std::complex<double>(1.0, 0.0)).real() == doctest::Approx(0.5));
    CHECK(cauchy.num_degree() == 0);
    CHECK(cauchy.den_degree() == 2);

    RationalIntrinsic prod = sq * cauchy; // s^2/(1+s^2)
    CHECK(prod.eval(std::complex<double>(1.0, 0.0)).real() == doctest::Approx(0.5));
}

TEST_CASE("regularizer values") {
    RationalIntrinsic e1 = regularizer(1);
    CHECK(e1.eval(std::complex<double>(1.0, 0.0)).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(e1.eval(std::complex<double>(-2.0, 0.0)).real() ==
          doctest::Approx(-0.4).epsilon(1e-14));
    // Vanishes at 0 and at infinity like s and 1/s.
    CHECK(std::abs(e1.eval(std::complex<double>(1e-8, 0.0))) <= 2e-8);
    CHECK(std::abs(e1.eval(std::complex<double>(1e8, 0.0))) <= 2e-8);

    RationalIntrinsic e2 = regularizer(2);
    CHECK(e2.eval(std::complex<double>(1.0, 0.0)).real() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(e2.num_degree() == 2);
    CHECK(e2.den_degree() == 4);
}

TEST_CASE("stems and evaluation chirality") {
    CliffordNum a = CliffordNum::blade(2, 2); // e2
    RationalIntrinsic id_fn = RationalIntrinsic::polynomial({0.0, 1.0});

    SliceFunction left(Chirality::left, {SliceFunction::Term{a, id_fn}});
    SliceFunction right(Chirality::right, {SliceFunction::Term{a, id_fn}});

    // f(s) = s * a for the left version, a * s for the right.
    Rng rng(42);
    for (int k = 0; k < 100; ++k) {
        Paravector s = rng.paravector(2, 2.0);
        CHECK(abs(left.eval(s) - mul(s.to_clifford(), a)) <= 1e-12);
        CHECK(abs(right.eval(s) - mul(a, s.to_clifford())) <= 1e-12);
    }

    // Stems are even/odd in y.
    auto [f0p, f1p] = left.stem(0.4, 0.9);
    auto [f0m, f1m] = left.stem(0.4, -0.9);
    CHECK(abs(f0p - f0m) <= 1e-13);
    CHECK(abs(f1p + f1m) <= 1e-13);

    // Intrinsic values stay in the slice plane: components only at 1, J.
    SliceFunction intr = SliceFunction::intrinsic(RationalIntrinsic::polynomial({1.0, 0.0, 1.0}));
    Paravector s = pv(2, 0.3, 0.0, 1.2); // slice plane of e2
    CliffordNum val = intr.eval(s);
    for (BladeIndex b = 0; b < 4; ++b)
        if (b != 0 && b != 2) CHECK(std::fabs(val[b]) <= 1e-13);
}

TEST_CASE("evaluation at real points") {
    SliceFunction f = SliceFunction::intrinsic(RationalIntrinsic::polynomial({1.0, 2.0, 3.0}));
    CliffordNum v = f.eval(Paravector(2, 2.0));
    CHECK(v.scalar() == doctest::Approx(1.0 + 4.0 + 12.0).epsilon(1e-14));
    CHECK(abs(v - CliffordNum(2, v.scalar())) <= 1e-14);
}

TEST_CASE("sharp involution") {
    CliffordNum a = CliffordNum::blade(2, 1) + CliffordNum(2, 0.5); // 0.5 + e1
    RationalIntrinsic id_fn = RationalIntrinsic::polynomial({0.0, 1.0});
    SliceFunction f(Chirality::left, {SliceFunction::Term{a, id_fn}});

    SliceFunction fs = f.sharp();
    CHECK(fs.chirality() == Chirality::right);
    CHECK(f.sharp().sharp().chirality() == Chirality::left);

    Rng rng(43);
    for (int k = 0; k < 100; ++k) {
        Paravector s = rng.paravector(2, 2.0);
        // Defining relation f#(s) = conjugate(f(conjugate(s))).
        CHECK(abs(fs.eval(s) - conjugate(f.eval(s.conj()))) <= 1e-12);
        CHECK(abs(f.sharp().sharp().eval(s) - f.eval(s)) <= 1e-12);
    }

    // Intrinsic functions are fixed points.
    SliceFunction intr = SliceFunction::intrinsic(regularizer(1));
    CHECK(intr.sharp().chirality() == Chirality::intrinsic);
    for (int k = 0; k < 50; ++k) {
        Paravector s = rng.paravector(2, 2.0);
        CHECK(abs(intr.sharp().eval(s) - intr.eval(s)) <= 1e-13);
    }
}

TEST_CASE("representation formula") {
    // A left function is recovered on the whole sphere [x + y S] from its
    // values at two slice points.
    CliffordNum a = CliffordNum::blade(3, 2) * 0.8 + CliffordNum(3, 0.3);
    SliceFunction f(Chirality::left,
                    {SliceFunction::Term{a, RationalIntrinsic::polynomial({0.5, 0.0, 1.0})}});

    Rng rng(44);
    for (int k = 0; k < 50; ++k) {
        double x = rng.uniform(-2.0, 2.0), y = rng.uniform(0.1, 2.0);
        ImaginaryUnit J1 = rng.unit(3), J2 = rng.unit(3);
        auto value_at = [&](const ImaginaryUnit& j) {
            Paravector s(3, x);
            for (int i = 0; i < 3; ++i) s.vec[i] = y * j.para().vec[i];
            return f.eval(s);
        };
        auto value_conj = [&](const ImaginaryUnit& j) {
            Paravector s(3, x);
            for (int i = 0; i < 3; ++i) s.vec[i] = -y * j.para().vec[i];
            return f.eval(s);
        };
        // Stems extracted through J1 reproduce the value at J2.
        CliffordNum f0 = (value_at(J1) + value_conj(J1)) * 0.5;
        CliffordNum f1 = mul(-J1.to_clifford(), (value_at(J1) - value_conj(J1)) * 0.5);
        CliffordNum rebuilt = f0 + mul(J2.to_clifford(), f1);
        CHECK(abs(rebuilt - value_at(J2)) <= 1e-11);
    }
}

TEST_CASE("holomorphy checks") {
    SliceFunction sq = SliceFunction::intrinsic(RationalIntrinsic::polynomial({0.0, 0.0, 1.0}));
    HolomorphyReport good = check_holomorphic(sq, sample_grid());
    CHECK(good.pass);
    CHECK(good.max_cr_residual <= 1e-8);
    CHECK(good.max_symmetry_residual <= 1e-10);

    SliceFunction cauchy = SliceFunction::intrinsic(
        RationalIntrinsic::rational({1.0}, {2.0, 0.0, 1.0})); // poles off the grid
    CHECK(check_holomorphic(cauchy, sample_grid()).pass);

    // Anti-holomorphic stem pair (x, -y) satisfies the symmetry conditions
    // but breaks Cauchy-Riemann.
    HolomorphyReport bad = check_holomorphic_stems(
        [](double x, double y) { return std::make_pair(x, -y); }, sample_grid());
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_cr_residual >= 1.0);
    CHECK(bad.max_symmetry_residual <= 1e-10);

    // A pair that is not even/odd in y fails the symmetry condition.
    HolomorphyReport asym = check_holomorphic_stems(
        [](double x, double y) { return std::make_pair(x + y, y); }, sample_grid());
    CHECK_FALSE(asym.pass);
}

TEST_CASE("growth classification") {
    double theta = 0.7;
    SliceFunction e1 = SliceFunction::intrinsic(regularizer(1));
    GrowthClass g = classify_growth(e1, theta);
    CHECK(g.kind == GrowthClass::Kind::SH0);

    SliceFunction lin = SliceFunction::intrinsic(RationalIntrinsic::polynomial({0.0, 1.0}));
    GrowthClass gl = classify_growth(lin, theta);
    CHECK(gl.kind == GrowthClass::Kind::SHpoly);
    CHECK(gl.alpha == doctest::Approx(1.0).epsilon(0.05));

    SliceFunction one = SliceFunction::intrinsic(RationalIntrinsic::polynomial({1.0}));
    GrowthClass gc = classify_growth(one, theta);
    CHECK(gc.kind == GrowthClass::Kind::SHpoly);
    CHECK(gc.alpha <= 0.05);
}

TEST_CASE("limit at infinity") {
    SliceFunction decaying = SliceFunction::intrinsic(
        RationalIntrinsic::rational({1.0}, {1.0, 0.0, 1.0}));
    CHECK(abs(decaying.f_infinity()) <= 1e-14);

    SliceFunction levelled = SliceFunction::intrinsic(
        RationalIntrinsic::rational({1.0, 0.0, 3.0}, {2.0, 0.0, 1.0}));
    CHECK(levelled.f_infinity().scalar() == doctest::Approx(3.0).epsilon(1e-14));

    SliceFunction growing = SliceFunction::intrinsic(RationalIntrinsic::polynomial({0.0, 1.0}));
    CHECK_THROWS_AS(growing.f_infinity(), std::domain_error);
}

TEST_CASE("product with intrinsic factor") {
    CliffordNum a = CliffordNum::blade(2, 1);
    SliceFunction f(Chirality::left,
                    {SliceFunction::Term{a, RationalIntrinsic::polynomial({0.0, 1.0})}});
    SliceFunction ef = f.times_intrinsic(regularizer(1));
    CHECK(ef.chirality() == Chirality::left);
    Rng rng(45);
    for (int k = 0; k < 50; ++k) {
        Paravector s = rng.paravector(2, 2.0);
        CliffordNum es = SliceFunction::intrinsic(regularizer(1)).eval(s);
        // For a left function the intrinsic factor acts by left multiplication.
        CHECK(abs(ef.eval(s) - mul(es, f.eval(s))) <= 1e-11);
    }
}

TEST_CASE("domains") {
    FunctionDomain full;
    CHECK(full.contains(100.0, 100.0));

    FunctionDomain sector;
    sector.kind = FunctionDomain::Kind::punctured_sector;
    sector.theta = 0.5;
    CHECK(sector.contains(1.0, 0.1));
    CHECK(sector.contains(-1.0, 0.1));
    CHECK_FALSE(sector.contains(0.0, 0.0));
    CHECK_FALSE(sector.contains(0.0, 1.0)); // the imaginary axis is outside

    FunctionDomain compl_sph;
    compl_sph.kind = FunctionDomain::Kind::complement_of_spheres;
    compl_sph.excluded = {{0.0, 1.0, 1}};
    CHECK(compl_sph.contains(3.0, 0.0));
    CHECK_FALSE(compl_sph.contains(0.0, 1.0));
}
