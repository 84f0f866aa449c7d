#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fbopt/cnf.hpp"

namespace fbopt {

// One multilinear monomial: coefficient * prod_{i in variables} z_i.
// An empty variable set is the constant term.
struct HuboTerm {
    double coefficient = 0.0;
    std::vector<std::int32_t> variables; // sorted, distinct
};

// Expanded multilinear polynomial over +-1 (relaxed to [-1,1]) variables,
// stored flat with a variable -> term incidence index. Terms are merged
// and canonically ordered at construction; instances are immutable after
// that and safe to share across threads.
class HuboPolynomial {
public:
    HuboPolynomial() = default;
    HuboPolynomial(int n_vars, std::vector<HuboTerm> terms);

    int n_vars() const { return n_vars_; }
    std::size_t n_terms() const { return coeff_.size(); }

    double coefficient(std::size_t term) const { return coeff_[term]; }
    std::span<const std::int32_t> term_variables(std::size_t term) const {
        return {term_vars_.data() + term_offset_[term], term_vars_.data() + term_offset_[term + 1]};
    }
    // Terms containing variable i.
    std::span<const std::int32_t> incident_terms(int i) const {
        return {inc_terms_.data() + inc_offset_[static_cast<std::size_t>(i)],
                inc_terms_.data() + inc_offset_[static_cast<std::size_t>(i) + 1]};
    }
    // Largest term cardinality (0 for an empty or constant polynomial).
    int max_order() const { return max_order_; }

    // sum_S c_S prod_{i in S} z_i
    double energy(std::span<const double> z) const;
    double energy(const SpinAssignment& assignment) const;

    // Full gradient in one pass over terms (cost ~ sum of term sizes).
    void gradient(std::span<const double> z, std::span<double> out) const;
    std::vector<double> gradient(std::span<const double> z) const;

    // Single component via the incidence index (cost ~ incident terms).
    double gradient_component(std::span<const double> z, int i) const;

private:
    int n_vars_ = 0;
    int max_order_ = 0;
    std::vector<double> coeff_;
    std::vector<std::size_t> term_offset_; // n_terms + 1
    std::vector<std::int32_t> term_vars_;
    std::vector<std::size_t> inc_offset_; // n_vars + 1
    std::vector<std::int32_t> inc_terms_;
};

// Multilinear expansion of the clause-product Hamiltonian: each clause a
// contributes 2^-k prod_m (1 - s_{a,m} z_{a,m}), so evaluation on any +-1
// assignment equals the unsatisfied-clause count exactly.
HuboPolynomial cnf_to_hubo(const CnfFormula& formula);

// Undirected co-occurrence graph of the polynomial: {i,j} is an edge iff
// some term contains both variables.
class InteractionGraph {
public:
    InteractionGraph() = default;
    static InteractionGraph from_polynomial(const HuboPolynomial& poly);

    int n_vars() const { return n_vars_; }
    std::size_t n_edges() const { return edges_.size(); }
    const std::vector<std::pair<std::int32_t, std::int32_t>>& edges() const { return edges_; }
    std::span<const std::int32_t> neighbors(int i) const {
        return {adj_.data() + adj_offset_[static_cast<std::size_t>(i)],
                adj_.data() + adj_offset_[static_cast<std::size_t>(i) + 1]};
    }
    int degree(int i) const {
        return static_cast<int>(adj_offset_[static_cast<std::size_t>(i) + 1] - adj_offset_[static_cast<std::size_t>(i)]);
    }

private:
    int n_vars_ = 0;
    std::vector<std::pair<std::int32_t, std::int32_t>> edges_; // i < j, sorted
    std::vector<std::size_t> adj_offset_;
    std::vector<std::int32_t> adj_;
};

} // namespace fbopt
