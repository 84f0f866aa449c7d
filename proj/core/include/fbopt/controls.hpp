#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <tuple>
#include <vector>

#include "fbopt/hubo.hpp"
#include "fbopt/spin_state.hpp"

namespace fbopt {

enum class AlgorithmKind {
    CcFalqon,     // single shared X control
    CcIFalqon,    // per-site X controls
    Cacao,        // per-site Y controls
    HotCacao,     // Y controls + YZ+ZY pair controls
    HotCacaoPlus, // problem term + X, Y and pair controls
};

// Which ordered pairs (i, j) carry pair controls in the HOT variants.
enum class PairScope {
    GraphRestricted, // only pairs coupled by the interaction graph
    Full,            // all ordered pairs i != j
};

const char* to_string(AlgorithmKind kind);
std::optional<AlgorithmKind> parse_algorithm_kind(std::string_view name);

inline bool uses_pair_controls(AlgorithmKind kind) {
    return kind == AlgorithmKind::HotCacao || kind == AlgorithmKind::HotCacaoPlus;
}

// CACAO and HOT-CACAO have no X controls, so they cannot move spins out of
// the X-Z plane; random initial states must be planar for them.
inline bool requires_planar_init(AlgorithmKind kind) {
    return kind == AlgorithmKind::Cacao || kind == AlgorithmKind::HotCacao;
}

// Whether the driving Hamiltonian includes the problem term itself (its
// gradient then appears in the effective Z field).
inline bool drives_with_problem_term(AlgorithmKind kind) {
    return kind == AlgorithmKind::CcFalqon || kind == AlgorithmKind::CcIFalqon ||
           kind == AlgorithmKind::HotCacaoPlus;
}

// Feedback parameters frozen at one instant. Pair controls are stored in
// factored form, beta_pair(i, j) = pair_gen[i] * pair_ref_z[j] with
// pair_gen_i = 2 m_i^X dH/dm_i^Z and pair_ref_z_j = m_j^Z at the snapshot
// state; materializing all O(N^2) entries is never needed to evolve.
struct ControlSnapshot {
    AlgorithmKind kind = AlgorithmKind::Cacao;
    PairScope scope = PairScope::GraphRestricted;
    double time = 0.0;
    int n_sites = 0;

    std::optional<double> beta_x_shared; // CC-FALQON only
    std::vector<double> beta_x;          // CC-iFALQON, HOT-CACAO+
    std::vector<double> beta_y;          // CACAO, HOT-CACAO, HOT-CACAO+
    std::vector<double> pair_gen;        // HOT variants
    std::vector<double> pair_ref_z;      // HOT variants

    bool has_pairs() const { return !pair_gen.empty(); }
    double beta_pair(int i, int j) const {
        return pair_gen[static_cast<std::size_t>(i)] * pair_ref_z[static_cast<std::size_t>(j)];
    }
};

// Evaluates the feedback laws at the given state. grad must be the problem
// gradient at the same state.
ControlSnapshot compute_controls(AlgorithmKind kind, PairScope scope,
                                 const ClassicalSpinState& spins,
                                 std::span<const double> grad);

struct SpinField {
    std::vector<double> x, y, z;
    void resize(int n) {
        x.assign(static_cast<std::size_t>(n), 0.0);
        y.assign(static_cast<std::size_t>(n), 0.0);
        z.assign(static_cast<std::size_t>(n), 0.0);
    }
};

// h_i = -dH_t/dm_i with the control parameters frozen at their snapshot
// values; state and grad are the (possibly different) evaluation point.
// graph is required for pair controls under GraphRestricted scope.
void effective_field(const ControlSnapshot& controls, const ClassicalSpinState& state,
                     std::span<const double> grad, const InteractionGraph* graph,
                     SpinField& out);

// dm_i/dt = 2 m_i x h_i, written component-wise into a state-shaped buffer.
void eom_rhs(const ClassicalSpinState& state, const SpinField& field, ClassicalSpinState& out);

struct ControlNorms {
    double x = 0.0;    // sum_i |beta_i^X| (CC-FALQON: N |beta^X|)
    double y = 0.0;    // sum_i |beta_i^Y|
    double pair = 0.0; // sum_{i != j} |beta_ij| over the pair scope
};

ControlNorms control_strengths(const ControlSnapshot& controls, const InteractionGraph* graph);

// Instantaneous dE_P/dt under continuous feedback at the snapshot state:
// minus the sum of squared control amplitudes, pair terms entering as
// (beta_ij + beta_ji)^2 per unordered pair. Always <= 0.
double descent_rate(const ControlSnapshot& controls, const InteractionGraph* graph);

} // namespace fbopt
