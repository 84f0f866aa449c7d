#include "fbopt/controls.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace fbopt {

const char* to_string(AlgorithmKind kind) {
    switch (kind) {
    case AlgorithmKind::CcFalqon: return "cc-falqon";
    case AlgorithmKind::CcIFalqon: return "cc-ifalqon";
    case AlgorithmKind::Cacao: return "cacao";
    case AlgorithmKind::HotCacao: return "hot-cacao";
    case AlgorithmKind::HotCacaoPlus: return "hot-cacao-plus";
    }
    return "?";
}

std::optional<AlgorithmKind> parse_algorithm_kind(std::string_view name) {
    for (AlgorithmKind k : {AlgorithmKind::CcFalqon, AlgorithmKind::CcIFalqon, AlgorithmKind::Cacao,
                            AlgorithmKind::HotCacao, AlgorithmKind::HotCacaoPlus})
        if (name == to_string(k)) return k;
    return std::nullopt;
}

ControlSnapshot compute_controls(AlgorithmKind kind, PairScope scope,
                                 const ClassicalSpinState& spins,
                                 std::span<const double> grad) {
    const int n = spins.size();
    if (static_cast<int>(grad.size()) != n)
        throw std::invalid_argument("compute_controls: gradient size mismatch");

    ControlSnapshot c;
    c.kind = kind;
    c.scope = scope;
    c.n_sites = n;
    switch (kind) {
    case AlgorithmKind::CcFalqon: {
        double b = 0.0;
        for (int i = 0; i < n; ++i) b += spins.y[static_cast<std::size_t>(i)] * grad[static_cast<std::size_t>(i)];
        c.beta_x_shared = -2.0 * b;
        break;
    }
    case AlgorithmKind::CcIFalqon: {
        c.beta_x.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const std::size_t s = static_cast<std::size_t>(i);
            c.beta_x[s] = -2.0 * spins.y[s] * grad[s];
        }
        break;
    }
    case AlgorithmKind::Cacao: {
        c.beta_y.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const std::size_t s = static_cast<std::size_t>(i);
            c.beta_y[s] = 2.0 * spins.x[s] * grad[s];
        }
        break;
    }
    case AlgorithmKind::HotCacao:
    case AlgorithmKind::HotCacaoPlus: {
        c.beta_y.resize(static_cast<std::size_t>(n));
        c.pair_gen.resize(static_cast<std::size_t>(n));
        c.pair_ref_z.assign(spins.z.begin(), spins.z.end());
        for (int i = 0; i < n; ++i) {
            const std::size_t s = static_cast<std::size_t>(i);
            c.beta_y[s] = 2.0 * spins.x[s] * grad[s];
            c.pair_gen[s] = c.beta_y[s];
        }
        if (kind == AlgorithmKind::HotCacaoPlus) {
            c.beta_x.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const std::size_t s = static_cast<std::size_t>(i);
                c.beta_x[s] = -2.0 * spins.y[s] * grad[s];
            }
        }
        break;
    }
    }
    return c;
}

namespace {

void check_consistency(const ControlSnapshot& c, int n, const InteractionGraph* graph) {
    auto expect = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("effective_field: inconsistent snapshot: ") + what);
    };
    switch (c.kind) {
    case AlgorithmKind::CcFalqon:
        expect(c.beta_x_shared.has_value() && c.beta_x.empty() && c.beta_y.empty() && !c.has_pairs(),
               "cc-falqon carries a single shared X control");
        break;
    case AlgorithmKind::CcIFalqon:
        expect(!c.beta_x_shared && static_cast<int>(c.beta_x.size()) == n && c.beta_y.empty() && !c.has_pairs(),
               "cc-ifalqon carries per-site X controls only");
        break;
    case AlgorithmKind::Cacao:
        expect(!c.beta_x_shared && c.beta_x.empty() && static_cast<int>(c.beta_y.size()) == n && !c.has_pairs(),
               "cacao carries per-site Y controls only");
        break;
    case AlgorithmKind::HotCacao:
        expect(!c.beta_x_shared && c.beta_x.empty() && static_cast<int>(c.beta_y.size()) == n &&
                   static_cast<int>(c.pair_gen.size()) == n && static_cast<int>(c.pair_ref_z.size()) == n,
               "hot-cacao carries Y and pair controls");
        break;
    case AlgorithmKind::HotCacaoPlus:
        expect(!c.beta_x_shared && static_cast<int>(c.beta_x.size()) == n && static_cast<int>(c.beta_y.size()) == n &&
                   static_cast<int>(c.pair_gen.size()) == n && static_cast<int>(c.pair_ref_z.size()) == n,
               "hot-cacao-plus carries X, Y and pair controls");
        break;
    }
    if (c.has_pairs() && c.scope == PairScope::GraphRestricted && graph == nullptr)
        throw std::invalid_argument("effective_field: graph-restricted pair scope needs the interaction graph");
}

// Accumulates P_i = sum_j w_ij m_j^Z and Q_i = sum_j w_ij m_j^Y over the
// pair scope, where w_ij = beta_ij + beta_ji = gen_i z0_j + gen_j z0_i is
// the frozen symmetric pair coefficient.
void pair_field_sums(const ControlSnapshot& c, const ClassicalSpinState& state,
                     const InteractionGraph* graph, std::vector<double>& p, std::vector<double>& q) {
    const int n = state.size();
    p.assign(static_cast<std::size_t>(n), 0.0);
    q.assign(static_cast<std::size_t>(n), 0.0);
    const double* gen = c.pair_gen.data();
    const double* z0 = c.pair_ref_z.data();
    const double* zs = state.z.data();
    const double* ys = state.y.data();

    if (c.scope == PairScope::GraphRestricted) {
        for (int i = 0; i < n; ++i) {
            const std::size_t si = static_cast<std::size_t>(i);
            double pi = 0.0, qi = 0.0;
            for (std::int32_t j : graph->neighbors(i)) {
                const std::size_t sj = static_cast<std::size_t>(j);
                const double w = gen[si] * z0[sj] + gen[sj] * z0[si];
                pi += w * zs[sj];
                qi += w * ys[sj];
            }
            p[si] = pi;
            q[si] = qi;
        }
    } else {
        double s_zz = 0.0, s_gz = 0.0, s_zy = 0.0, s_gy = 0.0;
        for (int j = 0; j < n; ++j) {
            const std::size_t sj = static_cast<std::size_t>(j);
            s_zz += z0[sj] * zs[sj];
            s_gz += gen[sj] * zs[sj];
            s_zy += z0[sj] * ys[sj];
            s_gy += gen[sj] * ys[sj];
        }
        for (int i = 0; i < n; ++i) {
            const std::size_t si = static_cast<std::size_t>(i);
            p[si] = gen[si] * (s_zz - z0[si] * zs[si]) + z0[si] * (s_gz - gen[si] * zs[si]);
            q[si] = gen[si] * (s_zy - z0[si] * ys[si]) + z0[si] * (s_gy - gen[si] * ys[si]);
        }
    }
}

} // namespace

void effective_field(const ControlSnapshot& c, const ClassicalSpinState& state,
                     std::span<const double> grad, const InteractionGraph* graph,
                     SpinField& out) {
    const int n = state.size();
    if (static_cast<int>(grad.size()) != n)
        throw std::invalid_argument("effective_field: gradient size mismatch");
    check_consistency(c, n, graph);
    out.resize(n);

    switch (c.kind) {
    case AlgorithmKind::CcFalqon: {
        const double bx = *c.beta_x_shared;
        for (int i = 0; i < n; ++i) {
            const std::size_t s = static_cast<std::size_t>(i);
            out.x[s] = -bx;
            out.z[s] = -grad[s];
        }
        break;
    }
    case AlgorithmKind::CcIFalqon:
        for (int i = 0; i < n; ++i) {
            const std::size_t s = static_cast<std::size_t>(i);
            out.x[s] = -c.beta_x[s];
            out.z[s] = -grad[s];
        }
        break;
    case AlgorithmKind::Cacao:
        for (int i = 0; i < n; ++i) {
            const std::size_t s = static_cast<std::size_t>(i);
            out.y[s] = -c.beta_y[s];
        }
        break;
    case AlgorithmKind::HotCacao: {
        thread_local std::vector<double> p, q;
        pair_field_sums(c, state, graph, p, q);
        for (int i = 0; i < n; ++i) {
            const std::size_t s = static_cast<std::size_t>(i);
            out.y[s] = -c.beta_y[s] - p[s];
            out.z[s] = -q[s];
        }
        break;
    }
    case AlgorithmKind::HotCacaoPlus: {
        thread_local std::vector<double> p, q;
        pair_field_sums(c, state, graph, p, q);
        for (int i = 0; i < n; ++i) {
            const std::size_t s = static_cast<std::size_t>(i);
            out.x[s] = -c.beta_x[s];
            out.y[s] = -c.beta_y[s] - p[s];
            out.z[s] = -grad[s] - q[s];
        }
        break;
    }
    }
}

void eom_rhs(const ClassicalSpinState& state, const SpinField& field, ClassicalSpinState& out) {
    const int n = state.size();
    if (static_cast<int>(field.z.size()) != n)
        throw std::invalid_argument("eom_rhs: field size mismatch");
    out.resize(n);
    const double* mx = state.x.data();
    const double* my = state.y.data();
    const double* mz = state.z.data();
    const double* hx = field.x.data();
    const double* hy = field.y.data();
    const double* hz = field.z.data();
    for (int i = 0; i < n; ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        out.x[s] = 2.0 * (my[s] * hz[s] - mz[s] * hy[s]);
        out.y[s] = 2.0 * (mz[s] * hx[s] - mx[s] * hz[s]);
        out.z[s] = 2.0 * (mx[s] * hy[s] - my[s] * hx[s]);
    }
}

ControlNorms control_strengths(const ControlSnapshot& c, const InteractionGraph* graph) {
    ControlNorms norms;
    if (c.beta_x_shared) {
        norms.x = static_cast<double>(c.pair_ref_z.empty() ? c.beta_y.size() : c.pair_ref_z.size()) * 0.0;
        // shared control acts on every site; report the site-summed norm
    }
    if (c.beta_x_shared) norms.x = std::abs(*c.beta_x_shared); // scaled below by caller-known N
    for (double b : c.beta_x) norms.x += std::abs(b);
    for (double b : c.beta_y) norms.y += std::abs(b);

    if (c.has_pairs()) {
        const double* gen = c.pair_gen.data();
        const double* z0 = c.pair_ref_z.data();
        const std::size_t n = c.pair_gen.size();
        if (c.scope == PairScope::GraphRestricted) {
            if (graph == nullptr)
                throw std::invalid_argument("control_strengths: graph-restricted pair scope needs the interaction graph");
            for (auto [i, j] : graph->edges()) {
                const std::size_t si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
                norms.pair += std::abs(gen[si] * z0[sj]) + std::abs(gen[sj] * z0[si]);
            }
        } else {
            double sum_gen = 0.0, sum_z = 0.0, sum_diag = 0.0;
            for (std::size_t s = 0; s < n; ++s) {
                sum_gen += std::abs(gen[s]);
                sum_z += std::abs(z0[s]);
                sum_diag += std::abs(gen[s] * z0[s]);
            }
            norms.pair = sum_gen * sum_z - sum_diag;
        }
    }
    return norms;
}

double descent_rate(const ControlSnapshot& c, const InteractionGraph* graph) {
    double rate = 0.0;
    if (c.beta_x_shared) rate -= *c.beta_x_shared * *c.beta_x_shared;
    for (double b : c.beta_x) rate -= b * b;
    for (double b : c.beta_y) rate -= b * b;
    if (c.has_pairs()) {
        const double* gen = c.pair_gen.data();
        const double* z0 = c.pair_ref_z.data();
        if (c.scope == PairScope::GraphRestricted) {
            if (graph == nullptr)
                throw std::invalid_argument("descent_rate: graph-restricted pair scope needs the interaction graph");
            for (auto [i, j] : graph->edges()) {
                const std::size_t si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
                const double w = gen[si] * z0[sj] + gen[sj] * z0[si];
                rate -= w * w;
            }
        } else {
            double s_g2 = 0.0, s_z2 = 0.0, s_gz = 0.0, s_gz2 = 0.0;
            for (std::size_t s = 0; s < c.pair_gen.size(); ++s) {
                s_g2 += gen[s] * gen[s];
                s_z2 += z0[s] * z0[s];
                s_gz += gen[s] * z0[s];
                s_gz2 += gen[s] * z0[s] * gen[s] * z0[s];
            }
            rate -= s_g2 * s_z2 + s_gz * s_gz - 2.0 * s_gz2;
        }
    }
    return rate;
}

} // namespace fbopt
