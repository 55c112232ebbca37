#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cliffspec/module_linalg.hpp"
#include "cliffspec/rng.hpp"

using namespace cliffspec;

namespace {

CliffordMatrix random_matrix(Rng& rng, int n, int d, double scale = 1.0) {
    CliffordMatrix t(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = rng.clifford(d, scale);
    return t;
}

ModuleVector random_vector(Rng& rng, int n, int d, double scale = 1.0) {
    ModuleVector v(n, d);
    for (int j = 0; j < n; ++j) v[j] = rng.clifford(d, scale);
    return v;
}

double mat_diff(const CliffordMatrix& a, const CliffordMatrix& b) {
    return operator_norm(a - b);
}

} // namespace

TEST_CASE("inner product basics") {
    ModuleVector v(1, 2), w(1, 2);
    v[0] = CliffordNum(2, 1.0);
    w[0] = CliffordNum(2, 1.0);
    CHECK(abs(inner_product(v, w) - CliffordNum(2, 1.0)) == 0.0);

    // <(e1), (e2)> = conj(e1) e2 = -e1 e2 = -e12
    v[0] = CliffordNum::blade(2, 1);
    w[0] = CliffordNum::blade(2, 2);
    CHECK(abs(inner_product(v, w) + CliffordNum::blade(2, 3)) == 0.0);
    CHECK(sc_inner(v, w) == 0.0);

    Rng rng(21);
    for (int k = 0; k < 100; ++k) {
        int d = 1 + k % 3, n = 1 + k % 4;
        ModuleVector a = random_vector(rng, n, d), b = random_vector(rng, n, d);
        // Sc<a,a> = ||a||^2, symmetry of the scalar part, conjugate symmetry.
        CHECK(sc_inner(a, a) == doctest::Approx(a.norm() * a.norm()).epsilon(1e-12));
        CHECK(sc_inner(a, b) == doctest::Approx(sc_inner(b, a)).epsilon(1e-12));
        CHECK(abs(conjugate(inner_product(a, b)) - inner_product(b, a)) <= 1e-12);
        // Right-linearity in the second slot.
        CliffordNum s = rng.clifford(d);
        CHECK(abs(inner_product(a, b.right_mul(s)) - mul(inner_product(a, b), s)) <= 1e-12);
        // Scalar part equals the realified dot product.
        CHECK(sc_inner(a, b) == doctest::Approx(a.realify().dot(b.realify())).epsilon(1e-12));
    }
}

TEST_CASE("vector norms under Clifford scaling") {
    Rng rng(22);
    for (int k = 0; k < 200; ++k) {
        int d = 1 + k % 3, n = 1 + k % 4;
        ModuleVector v = random_vector(rng, n, d);
        Paravector s = rng.paravector(d, 2.0);
        // Paravectors scale norms exactly.
        CHECK(v.right_mul(s.to_clifford()).norm() ==
              doctest::Approx(s.norm() * v.norm()).epsilon(1e-12));
        // General elements only satisfy the 2^{d/2} bound, on both sides.
        CliffordNum a = rng.clifford(d, 2.0);
        double cap = std::pow(2.0, d / 2.0) * abs(a) * v.norm() + 1e-12;
        CHECK(v.right_mul(a).norm() <= cap);
        CHECK(v.left_mul(a).norm() <= cap);
    }
}

TEST_CASE("adjoint") {
    CliffordMatrix id = CliffordMatrix::identity(2, 2);
    CHECK(mat_diff(adjoint(id), id) == 0.0);

    CliffordMatrix t(1, 2);
    t(0, 0) = CliffordNum::blade(2, 1);
    CHECK(abs(adjoint(t)(0, 0) + CliffordNum::blade(2, 1)) == 0.0);

    Rng rng(23);
    for (int k = 0; k < 60; ++k) {
        int d = 1 + k % 3, n = 1 + k % 4;
        CliffordMatrix a = random_matrix(rng, n, d), b = random_matrix(rng, n, d);
        CHECK(mat_diff(adjoint(adjoint(a)), a) == 0.0);
        CHECK(mat_diff(adjoint(a * b), adjoint(b) * adjoint(a)) <= 1e-11);
        // Defining property: Sc<T*v, w> = Sc<v, T w>.
        ModuleVector v = random_vector(rng, n, d), w = random_vector(rng, n, d);
        CHECK(sc_inner(adjoint(a).apply(v), w) ==
              doctest::Approx(sc_inner(v, a.apply(w))).epsilon(1e-10));
        CHECK(operator_norm(adjoint(a)) == doctest::Approx(operator_norm(a)).epsilon(1e-10));
    }
}

TEST_CASE("realification is a homomorphism") {
    Rng rng(24);
    for (int k = 0; k < 40; ++k) {
        int d = 1 + k % 3, n = 1 + k % 3;
        CliffordMatrix a = random_matrix(rng, n, d), b = random_matrix(rng, n, d);
        Eigen::MatrixXd ra = realify_left(a).mat, rb = realify_left(b).mat;

        CHECK((realify_left(a + b).mat - (ra + rb)).norm() <= 1e-12);
        CHECK((realify_left(a * b).mat - ra * rb).norm() <= 1e-10 * (1.0 + ra.norm() * rb.norm()));
        // Action agreement on vectors.
        ModuleVector v = random_vector(rng, n, d);
        CHECK((realify_left(a).mat * v.realify() - a.apply(v).realify()).norm() <= 1e-11);
        // Adjoint realifies to the transpose.
        CHECK((realify_left(adjoint(a)).mat - ra.transpose()).norm() <= 1e-13);
    }
    CHECK((realify_left(CliffordMatrix::identity(3, 2)).mat -
           Eigen::MatrixXd::Identity(12, 12)).norm() == 0.0);
}

TEST_CASE("right multiplication commutes with every operator") {
    Rng rng(25);
    for (int k = 0; k < 40; ++k) {
        int d = 1 + k % 3, n = 1 + k % 3;
        CliffordMatrix t = random_matrix(rng, n, d);
        CliffordNum s = rng.clifford(d, 2.0);
        Eigen::MatrixXd rt = realify_left(t).mat;
        Eigen::MatrixXd ms = realify_right_mult(s, n).mat;
        CHECK((rt * ms - ms * rt).norm() <= 1e-11 * (1.0 + rt.norm() * ms.norm()));
        // Agreement with the vector-level definition.
        ModuleVector v = random_vector(rng, n, d);
        CHECK((ms * v.realify() - v.right_mul(s).realify()).norm() <= 1e-12);
    }

    // Right multiplication by a sphere unit is a complex structure.
    Paravector j(3);
    j.vec[1] = 1.0;
    Eigen::MatrixXd m = realify_right_mult(ImaginaryUnit(j).to_clifford(), 2).mat;
    CHECK((m * m + Eigen::MatrixXd::Identity(16, 16)).norm() <= 1e-13);
    CHECK((realify_right_mult(CliffordNum(2, 1.0), 3).mat -
           Eigen::MatrixXd::Identity(12, 12)).norm() == 0.0);
}

TEST_CASE("scalar embedding") {
    Rng rng(26);
    for (int k = 0; k < 30; ++k) {
        int d = 1 + k % 3, n = 1 + k % 3;
        CliffordNum c = rng.clifford(d);
        CliffordMatrix t = random_matrix(rng, n, d);
        CHECK(mat_diff(CliffordMatrix::scalar(n, c) * t, t.left_scaled(c)) <= 1e-12);
        CHECK(mat_diff(t * CliffordMatrix::scalar(n, c), t.right_scaled(c)) <= 1e-12);
        // Left-scalar realification is the block-diagonal lmul.
        CHECK((realify_left(CliffordMatrix::scalar(n, c)).mat -
               realify_left_scalar(c, n)).norm() <= 1e-13);
    }
}

TEST_CASE("round trips through realified coordinates") {
    Rng rng(27);
    for (int k = 0; k < 30; ++k) {
        int d = 1 + k % 3, n = 1 + k % 3;
        CliffordMatrix t = random_matrix(rng, n, d);
        CHECK(mat_diff(from_realified(realify_left(t).mat, n, d), t) <= 1e-13);
        ModuleVector v = random_vector(rng, n, d);
        ModuleVector back = ModuleVector::from_realified(v.realify(), n, d);
        CHECK((back.realify() - v.realify()).norm() == 0.0);
    }
}

TEST_CASE("lmul and rmul matrices") {
    Rng rng(28);
    for (int k = 0; k < 60; ++k) {
        int d = 1 + k % 3;
        CliffordNum a = rng.clifford(d), x = rng.clifford(d);
        Eigen::VectorXd xv = Eigen::Map<const Eigen::VectorXd>(x.coeffs().data(),
                                                               long(x.size()));
        Eigen::VectorXd lx = lmul_matrix(a) * xv, rx = rmul_matrix(a) * xv;
        CliffordNum ax = mul(a, x), xa = mul(x, a);
        for (std::size_t i = 0; i < x.size(); ++i) {
            CHECK(lx[long(i)] == doctest::Approx(ax[BladeIndex(i)]).epsilon(1e-13));
            CHECK(rx[long(i)] == doctest::Approx(xa[BladeIndex(i)]).epsilon(1e-13));
        }
    }
}

TEST_CASE("operator norm") {
    CHECK(operator_norm(CliffordMatrix::identity(3, 2)) == doctest::Approx(1.0).epsilon(1e-13));

    // Scaling a diagonal real matrix scales the norm.
    CliffordMatrix t(2, 1);
    t(0, 0) = CliffordNum(1, 3.0);
    t(1, 1) = CliffordNum(1, -7.0);
    CHECK(operator_norm(t) == doctest::Approx(7.0).epsilon(1e-13));

    Rng rng(29);
    for (int k = 0; k < 30; ++k) {
        int d = 1 + k % 3, n = 1 + k % 3;
        CliffordMatrix a = random_matrix(rng, n, d);
        ModuleVector v = random_vector(rng, n, d);
        if (v.norm() < 1e-9) continue;
        CHECK(a.apply(v).norm() <= operator_norm(a) * v.norm() * (1.0 + 1e-12));
    }
}
