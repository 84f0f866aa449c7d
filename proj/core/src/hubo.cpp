#include "fbopt/hubo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fbopt {

HuboPolynomial::HuboPolynomial(int n_vars, std::vector<HuboTerm> terms) : n_vars_(n_vars) {
    for (HuboTerm& t : terms) {
        std::sort(t.variables.begin(), t.variables.end());
        if (std::adjacent_find(t.variables.begin(), t.variables.end()) != t.variables.end())
            throw std::invalid_argument("HuboPolynomial: repeated variable in term");
        if (!t.variables.empty() && (t.variables.front() < 0 || t.variables.back() >= n_vars))
            throw std::invalid_argument("HuboPolynomial: variable index out of range");
        if (!std::isfinite(t.coefficient))
            throw std::invalid_argument("HuboPolynomial: non-finite coefficient");
    }
    // Canonical order: by variable set, lexicographic with shorter sets first
    // on common prefixes. Stable sort keeps same-set terms in input order so
    // coefficient merging happens in generation order.
    std::stable_sort(terms.begin(), terms.end(), [](const HuboTerm& a, const HuboTerm& b) {
        return std::lexicographical_compare(a.variables.begin(), a.variables.end(),
                                            b.variables.begin(), b.variables.end());
    });

    term_offset_.push_back(0);
    for (std::size_t i = 0; i < terms.size();) {
        double c = terms[i].coefficient;
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].variables == terms[i].variables) {
            c += terms[j].coefficient;
            ++j;
        }
        if (c != 0.0) {
            coeff_.push_back(c);
            term_vars_.insert(term_vars_.end(), terms[i].variables.begin(), terms[i].variables.end());
            term_offset_.push_back(term_vars_.size());
            max_order_ = std::max(max_order_, static_cast<int>(terms[i].variables.size()));
        }
        i = j;
    }

    // Incidence index.
    inc_offset_.assign(static_cast<std::size_t>(n_vars_) + 1, 0);
    for (std::int32_t v : term_vars_) ++inc_offset_[static_cast<std::size_t>(v) + 1];
    for (std::size_t i = 1; i < inc_offset_.size(); ++i) inc_offset_[i] += inc_offset_[i - 1];
    inc_terms_.resize(term_vars_.size());
    std::vector<std::size_t> cursor(inc_offset_.begin(), inc_offset_.end() - 1);
    for (std::size_t t = 0; t + 1 < term_offset_.size(); ++t) {
        for (std::size_t p = term_offset_[t]; p < term_offset_[t + 1]; ++p) {
            std::int32_t v = term_vars_[p];
            inc_terms_[cursor[static_cast<std::size_t>(v)]++] = static_cast<std::int32_t>(t);
        }
    }
}

double HuboPolynomial::energy(std::span<const double> z) const {
    if (static_cast<int>(z.size()) != n_vars_)
        throw std::invalid_argument("HuboPolynomial::energy: dimension mismatch");
    double total = 0.0;
    const std::size_t nt = n_terms();
    for (std::size_t t = 0; t < nt; ++t) {
        double prod = coeff_[t];
        for (std::size_t p = term_offset_[t]; p < term_offset_[t + 1]; ++p)
            prod *= z[static_cast<std::size_t>(term_vars_[p])];
        total += prod;
    }
    return total;
}

double HuboPolynomial::energy(const SpinAssignment& assignment) const {
    std::vector<double> z(assignment.values.begin(), assignment.values.end());
    return energy(z);
}

void HuboPolynomial::gradient(std::span<const double> z, std::span<double> out) const {
    if (static_cast<int>(z.size()) != n_vars_ || out.size() != z.size())
        throw std::invalid_argument("HuboPolynomial::gradient: dimension mismatch");
    std::fill(out.begin(), out.end(), 0.0);
    const std::size_t nt = n_terms();
    for (std::size_t t = 0; t < nt; ++t) {
        const double c = coeff_[t];
        const std::int32_t* vars = term_vars_.data() + term_offset_[t];
        const std::size_t size = term_offset_[t + 1] - term_offset_[t];
        switch (size) {
        case 0:
            break;
        case 1:
            out[static_cast<std::size_t>(vars[0])] += c;
            break;
        case 2: {
            const double z0 = z[static_cast<std::size_t>(vars[0])];
            const double z1 = z[static_cast<std::size_t>(vars[1])];
            out[static_cast<std::size_t>(vars[0])] += c * z1;
            out[static_cast<std::size_t>(vars[1])] += c * z0;
            break;
        }
        case 3: {
            const double z0 = z[static_cast<std::size_t>(vars[0])];
            const double z1 = z[static_cast<std::size_t>(vars[1])];
            const double z2 = z[static_cast<std::size_t>(vars[2])];
            out[static_cast<std::size_t>(vars[0])] += c * z1 * z2;
            out[static_cast<std::size_t>(vars[1])] += c * z0 * z2;
            out[static_cast<std::size_t>(vars[2])] += c * z0 * z1;
            break;
        }
        default: {
            // Leave-one-out products via prefix/suffix sweeps.
            thread_local std::vector<double> prefix, suffix;
            prefix.resize(size);
            suffix.resize(size);
            prefix[0] = 1.0;
            for (std::size_t p = 1; p < size; ++p)
                prefix[p] = prefix[p - 1] * z[static_cast<std::size_t>(vars[p - 1])];
            suffix[size - 1] = 1.0;
            for (std::size_t p = size - 1; p > 0; --p)
                suffix[p - 1] = suffix[p] * z[static_cast<std::size_t>(vars[p])];
            for (std::size_t p = 0; p < size; ++p)
                out[static_cast<std::size_t>(vars[p])] += c * prefix[p] * suffix[p];
            break;
        }
        }
    }
}

std::vector<double> HuboPolynomial::gradient(std::span<const double> z) const {
    std::vector<double> out(z.size());
    gradient(z, out);
    return out;
}

double HuboPolynomial::gradient_component(std::span<const double> z, int i) const {
    if (static_cast<int>(z.size()) != n_vars_)
        throw std::invalid_argument("HuboPolynomial::gradient_component: dimension mismatch");
    if (i < 0 || i >= n_vars_)
        throw std::invalid_argument("HuboPolynomial::gradient_component: index out of range");
    double total = 0.0;
    for (std::int32_t t : incident_terms(i)) {
        double prod = coeff_[static_cast<std::size_t>(t)];
        for (std::size_t p = term_offset_[static_cast<std::size_t>(t)]; p < term_offset_[static_cast<std::size_t>(t) + 1]; ++p) {
            std::int32_t v = term_vars_[p];
            if (v != i) prod *= z[static_cast<std::size_t>(v)];
        }
        total += prod;
    }
    return total;
}

HuboPolynomial cnf_to_hubo(const CnfFormula& formula) {
    std::vector<HuboTerm> terms;
    for (const Clause& clause : formula.clauses) {
        const std::size_t k = clause.literals.size();
        const double scale = std::ldexp(1.0, -static_cast<int>(k));
        // Expand prod_m (1 - s_m z_m): one monomial per literal subset,
        // with sign prod_{m in subset} (-s_m).
        for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
            HuboTerm term;
            term.coefficient = scale;
            for (std::size_t m = 0; m < k; ++m) {
                if (subset >> m & 1) {
                    term.coefficient *= -clause.literals[m].sign;
                    term.variables.push_back(clause.literals[m].variable);
                }
            }
            terms.push_back(std::move(term));
        }
    }
    return HuboPolynomial(formula.n_vars, std::move(terms));
}

InteractionGraph InteractionGraph::from_polynomial(const HuboPolynomial& poly) {
    InteractionGraph g;
    g.n_vars_ = poly.n_vars();
    for (std::size_t t = 0; t < poly.n_terms(); ++t) {
        auto vars = poly.term_variables(t);
        for (std::size_t a = 0; a < vars.size(); ++a)
            for (std::size_t b = a + 1; b < vars.size(); ++b)
                g.edges_.emplace_back(vars[a], vars[b]);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adj_offset_.assign(static_cast<std::size_t>(g.n_vars_) + 1, 0);
    for (auto [i, j] : g.edges_) {
        ++g.adj_offset_[static_cast<std::size_t>(i) + 1];
        ++g.adj_offset_[static_cast<std::size_t>(j) + 1];
    }
    for (std::size_t i = 1; i < g.adj_offset_.size(); ++i) g.adj_offset_[i] += g.adj_offset_[i - 1];
    g.adj_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.adj_offset_.begin(), g.adj_offset_.end() - 1);
    for (auto [i, j] : g.edges_) {
        g.adj_[cursor[static_cast<std::size_t>(i)]++] = j;
        g.adj_[cursor[static_cast<std::size_t>(j)]++] = i;
    }
    return g;
}

} // namespace fbopt
