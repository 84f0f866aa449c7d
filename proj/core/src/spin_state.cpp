#include "fbopt/spin_state.hpp"

#include <cmath>
#include <numbers>

#include "fbopt/rng.hpp"

namespace fbopt {

ClassicalSpinState init_fixed(int n) {
    ClassicalSpinState s;
    s.resize(n);
    for (int i = 0; i < n; ++i) s.x[static_cast<std::size_t>(i)] = 1.0;
    return s;
}

ClassicalSpinState init_random(int n, std::uint64_t seed, bool planar) {
    Rng rng(seed);
    ClassicalSpinState s;
    s.resize(n);
    for (int i = 0; i < n; ++i) {
        const double theta = std::numbers::pi * rng.uniform01();
        const double phi_draw = 2.0 * std::numbers::pi * rng.uniform01();
        const double phi = planar ? 0.0 : phi_draw;
        const std::size_t idx = static_cast<std::size_t>(i);
        s.x[idx] = std::sin(theta) * std::cos(phi);
        s.y[idx] = std::sin(theta) * std::sin(phi);
        s.z[idx] = std::cos(theta);
    }
    return s;
}

SpinAssignment round_solution(const ClassicalSpinState& spins) {
    SpinAssignment a;
    a.values.reserve(spins.z.size());
    for (double mz : spins.z) a.values.push_back(mz < 0.0 ? -1 : +1);
    return a;
}

} // namespace fbopt
