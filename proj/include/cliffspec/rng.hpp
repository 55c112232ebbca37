#pragma once

#include <cstdint>
#include <random>

#include "cliffspec/clifford.hpp"

namespace cliffspec {

/// Deterministic sampling helpers.  All randomness in the toolkit flows
/// through this wrapper so a seed pins every report byte-for-byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        // Box-Muller on the raw uniform; avoids distribution objects whose
        // output is implementation defined.
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    CliffordNum clifford(int d, double scale = 1.0) {
        CliffordNum c(d);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[BladeIndex(i)] = uniform(-scale, scale);
        return c;
    }

    Paravector paravector(int d, double scale = 1.0) {
        Paravector s(d, uniform(-scale, scale));
        for (double& v : s.vec) v = uniform(-scale, scale);
        return s;
    }

    ImaginaryUnit unit(int d) {
        while (true) {
            Paravector j(d);
            for (double& v : j.vec) v = normal();
            double n = j.im_norm();
            if (n < 1e-6) continue;
            for (double& v : j.vec) v /= n;
            return ImaginaryUnit{j};
        }
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace cliffspec
