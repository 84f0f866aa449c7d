#pragma once

#include <cstdint>
#include <vector>

#include "fbopt/cnf.hpp"

namespace fbopt {

// N classical unit spins, component-major for tight integrator loops.
// The integrator renormalizes after every step; the struct itself does
// not enforce unit norm so it can also carry Bloch-vector snapshots.
struct ClassicalSpinState {
    std::vector<double> x, y, z;

    int size() const { return static_cast<int>(z.size()); }
    void resize(int n) {
        x.assign(static_cast<std::size_t>(n), 0.0);
        y.assign(static_cast<std::size_t>(n), 0.0);
        z.assign(static_cast<std::size_t>(n), 0.0);
    }
};

// All spins at (1, 0, 0), the minimizer of -sum_i m_i^X.
ClassicalSpinState init_fixed(int n);

// Spin i = (sin t cos f, sin t sin f, cos t) with t ~ U[0,pi], f ~ U[0,2pi);
// planar forces f = 0 so the state lies in the X-Z plane.
ClassicalSpinState init_random(int n, std::uint64_t seed, bool planar);

// Sign-rounding of the Z components; m^Z == 0 rounds to +1.
SpinAssignment round_solution(const ClassicalSpinState& spins);

} // namespace fbopt
