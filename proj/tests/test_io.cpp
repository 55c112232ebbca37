#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cliffspec/dsl.hpp"
#include "cliffspec/rng.hpp"
#include "cliffspec/serialization.hpp"

using namespace cliffspec;

namespace {

double mat_diff(const CliffordMatrix& a, const CliffordMatrix& b) {
    return operator_norm(a - b);
}

} // namespace

TEST_CASE("clifford number json round trip") {
    CliffordNum c(2, 1.5);
    c[3] = -0.25;
    json j = to_json(c);
    CHECK(j.at("d") == 2);
    CHECK(j.at("coeffs").size() == 2); // zero entries omitted
    CHECK(j.at("coeffs").at("0") == 1.5);
    CHECK(j.at("coeffs").at("3") == -0.25);

    CliffordNum back = clifford_from_json(j);
    CHECK(abs(back - c) == 0.0);

    CHECK_THROWS_AS(clifford_from_json(json{{"d", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(clifford_from_json(json{{"d", 1}, {"coeffs", {{"7", 1.0}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(clifford_from_json(json{{"d", 1}, {"coeffs", {{"x", 1.0}}}}),
                    std::invalid_argument);
}

TEST_CASE("matrix json round trip") {
    Rng rng(71);
    for (int k = 0; k < 10; ++k) {
        int d = 1 + k % 3, n = 1 + k % 3;
        CliffordMatrix t(n, d);
        for (int i = 0; i < n; ++i)
            for (int j2 = 0; j2 < n; ++j2) t(i, j2) = rng.clifford(d);
        CliffordMatrix back = matrix_from_json(to_json(t));
        CHECK(mat_diff(back, t) == 0.0);
    }
    // Serialization is byte-deterministic (sorted keys).
    CliffordMatrix t(2, 1);
    t(0, 1) = CliffordNum::blade(1, 1, 0.5);
    CHECK(to_json(t).dump() == to_json(t).dump());

    CHECK_THROWS_AS(matrix_from_json(json{{"d", 1}, {"n", 2}, {"rows", json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(json{{"d", dim_limit() + 1}, {"n", 1}, {"rows", json::array()}}),
                    std::invalid_argument);
}

TEST_CASE("spectral set json") {
    SpectralSet s;
    s.spheres = {{0.5, 1.25, 2}, {3.0, 0.0, 1}};
    s.tol = 1e-8;
    SpectralSet back = spectral_from_json(to_json(s));
    REQUIRE(back.spheres.size() == 2);
    CHECK(back.spheres[0].x == 0.5);
    CHECK(back.spheres[0].r == 1.25);
    CHECK(back.spheres[0].multiplicity == 2);
    CHECK(back.tol == 1e-8);
}

TEST_CASE("multiplication model json") {
    DiscreteMeasureSpace space{{1.0, 2.0}};
    MeasurableFn h;
    Paravector a(2, 1.0);
    a.vec[0] = 0.5;
    h.values = {a.to_clifford(), CliffordNum(2, -3.0)};
    h.range = RangeType::paravector;

    auto [space2, h2] = mult_from_json(to_json(space, h));
    CHECK(space2.weights == space.weights);
    CHECK(h2.range == RangeType::paravector);
    CHECK(abs(h2.values[0] - h.values[0]) == 0.0);

    // Range inference when the flag is absent.
    json j = to_json(space, h);
    j.erase("range");
    CHECK(mult_from_json(j).second.range == RangeType::paravector);

    json jb = j;
    jb["h"][0] = to_json(CliffordNum::blade(2, 3)); // e12: in N(R_d), not a paravector
    CHECK(mult_from_json(jb).second.range == RangeType::n_rd);

    // 1 + e123 fails the norm-product identity, so inference falls to general.
    json jg{{"weights", {1.0}},
            {"h", {to_json(CliffordNum(3, 1.0) + CliffordNum::blade(3, 7))}}};
    CHECK(mult_from_json(jg).second.range == RangeType::general);

    json bad = j;
    bad["weights"] = {1.0};
    CHECK_THROWS_AS(mult_from_json(bad), std::invalid_argument);
}

TEST_CASE("file io") {
    const std::string path = "io_test_scratch.json";
    write_file_atomic(path, "{\"d\": 1, \"coeffs\": {\"1\": 2.0}}");
    json j = parse_json_file(path);
    CHECK(abs(clifford_from_json(j) - CliffordNum::blade(1, 1, 2.0)) == 0.0);
    // No temp file left behind.
    std::ifstream tmp(path + ".tmp");
    CHECK_FALSE(tmp.good());
    std::remove(path.c_str());

    CHECK_THROWS_AS(parse_json_file("does_not_exist.json"), std::invalid_argument);

    write_file_atomic(path, "{not json");
    CHECK_THROWS_AS(parse_json_file(path), std::invalid_argument);
    std::remove(path.c_str());
}

// ---------------------------------------------------------------------------

TEST_CASE("function expressions: rationals") {
    Rng rng(72);
    SliceFunction sq = parse_function("poly:[0,0,1]");
    CHECK(sq.chirality() == Chirality::intrinsic);
    for (int k = 0; k < 20; ++k) {
        Paravector s = rng.paravector(2, 2.0);
        CliffordNum direct = mul(s.to_clifford(), s.to_clifford());
        CHECK(abs(sq.eval(s) - direct) <= 1e-12);
    }

    SliceFunction cauchy = parse_function("poly:[1]/[1,0,1]");
    CHECK(cauchy.eval(Paravector(1, 1.0)).scalar() == doctest::Approx(0.5));

    SliceFunction reg = parse_function("reg:2");
    SliceFunction want = SliceFunction::intrinsic(regularizer(2));
    for (int k = 0; k < 20; ++k) {
        Paravector s = rng.paravector(2, 2.0);
        CHECK(abs(reg.eval(s) - want.eval(s)) <= 1e-13);
    }
}

TEST_CASE("function expressions: coefficients and sums") {
    Rng rng(73);
    SliceFunction f = parse_function("coef-left:{2:1}*(poly:[0,1])"); // s * e2
    CHECK(f.chirality() == Chirality::left);
    CHECK(f.d() == 2);
    CliffordNum e2 = CliffordNum::blade(2, 2);
    for (int k = 0; k < 20; ++k) {
        Paravector s = rng.paravector(2, 2.0);
        CHECK(abs(f.eval(s) - mul(s.to_clifford(), e2)) <= 1e-12);
    }

    SliceFunction fr = parse_function("coef-right:{2:1}*(poly:[0,1])"); // e2 * s
    for (int k = 0; k < 20; ++k) {
        Paravector s = rng.paravector(2, 2.0);
        CHECK(abs(fr.eval(s) - mul(e2, s.to_clifford())) <= 1e-12);
    }

    // Constant coefficient without a rational factor.
    SliceFunction fc = parse_function("coef-left:{0:2,1:-1}");
    CHECK(abs(fc.eval(Paravector(1, 0.3)) -
              (CliffordNum(1, 2.0) - CliffordNum::blade(1, 1))) <= 1e-13);

    // Sums promote intrinsic parts into the surrounding chirality and algebra.
    SliceFunction sum = parse_function("sum:[poly:[0,0,1]; coef-left:{2:1}*(poly:[0,1])]");
    CHECK(sum.chirality() == Chirality::left);
    CHECK(sum.d() == 2);
    for (int k = 0; k < 20; ++k) {
        Paravector s = rng.paravector(2, 2.0);
        CliffordNum sc = s.to_clifford();
        CHECK(abs(sum.eval(s) - (mul(sc, sc) + mul(sc, e2))) <= 1e-12);
    }

    SliceFunction sharped = parse_function("sharp:(coef-left:{2:1}*(poly:[0,1]))");
    CHECK(sharped.chirality() == Chirality::right);
    SliceFunction direct = f.sharp();
    for (int k = 0; k < 20; ++k) {
        Paravector s = rng.paravector(2, 2.0);
        CHECK(abs(sharped.eval(s) - direct.eval(s)) <= 1e-13);
    }
}

TEST_CASE("function expression errors") {
    CHECK_THROWS_AS(parse_function(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("poly:[1] trailing"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("poly:[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("reg:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("coef-left:{-1:1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("sum:[coef-left:{1:1}; coef-right:{1:1}]"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_function("sine:[1]"), std::invalid_argument);

    // Error messages carry the failure position.
    try {
        parse_function("poly:[1] trailing");
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("DSL error at position") != std::string::npos);
    }
}
