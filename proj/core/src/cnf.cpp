#include "fbopt/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "fbopt/rng.hpp"

namespace fbopt {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("dimacs: " + msg);
}

struct TokenStream {
    std::string_view text;
    std::size_t pos = 0;

    // Returns next whitespace-delimited token, skipping comment lines.
    // Empty view at end of input.
    std::string_view next() {
        for (;;) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos >= text.size()) return {};
            if (text[pos] == 'c' && (pos == 0 || text[pos - 1] == '\n')) {
                while (pos < text.size() && text[pos] != '\n') ++pos;
                continue;
            }
            std::size_t start = pos;
            while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            return text.substr(start, pos - start);
        }
    }
};

long parse_int(std::string_view tok, const char* what) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail(std::string("bad ") + what + " '" + std::string(tok) + "'");
    return value;
}

} // namespace

CnfFormula parse_dimacs(std::string_view text) {
    TokenStream ts{text};

    std::string_view tok = ts.next();
    if (tok != "p") fail("missing 'p cnf' header");
    if (ts.next() != "cnf") fail("missing 'p cnf' header");
    long n = parse_int(ts.next(), "variable count");
    long m = parse_int(ts.next(), "clause count");
    if (n < 0 || m < 0) fail("negative header counts");

    CnfFormula formula;
    formula.n_vars = static_cast<std::int32_t>(n);
    formula.clauses.reserve(static_cast<std::size_t>(m));

    std::vector<std::int32_t> seen;
    for (long a = 0; a < m; ++a) {
        Clause clause;
        for (;;) {
            tok = ts.next();
            if (tok.empty()) fail("clause count mismatch: expected " + std::to_string(m) + " clauses");
            long lit = parse_int(tok, "literal");
            if (lit == 0) break;
            long var = (lit > 0 ? lit : -lit) - 1;
            if (var >= n) fail("variable index out of range in clause " + std::to_string(a + 1));
            clause.literals.push_back({static_cast<std::int32_t>(var), static_cast<std::int8_t>(lit > 0 ? +1 : -1)});
        }
        if (clause.literals.empty()) fail("empty clause " + std::to_string(a + 1));
        seen.clear();
        for (const Literal& l : clause.literals) seen.push_back(l.variable);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            fail("repeated variable in clause " + std::to_string(a + 1));
        formula.clauses.push_back(std::move(clause));
    }
    if (!ts.next().empty()) fail("clause count mismatch: trailing clauses beyond header count");

    formula.k = formula.clauses.empty() ? 0 : static_cast<std::int32_t>(formula.clauses.front().literals.size());
    for (std::size_t a = 0; a < formula.clauses.size(); ++a) {
        if (static_cast<std::int32_t>(formula.clauses[a].literals.size()) != formula.k)
            fail("mixed clause lengths: clause " + std::to_string(a + 1) + " has " +
                 std::to_string(formula.clauses[a].literals.size()) + " literals, expected " + std::to_string(formula.k));
    }
    return formula;
}

std::string emit_dimacs(const CnfFormula& formula) {
    std::ostringstream out;
    out << "p cnf " << formula.n_vars << ' ' << formula.clauses.size() << '\n';
    for (const Clause& clause : formula.clauses) {
        for (const Literal& lit : clause.literals) {
            long v = static_cast<long>(lit.variable) + 1;
            out << (lit.sign > 0 ? v : -v) << ' ';
        }
        out << "0\n";
    }
    return out.str();
}

CnfFormula generate_random_ksat(int n_vars, int k, int n_clauses, std::uint64_t seed) {
    if (k > n_vars) throw std::invalid_argument("generate_random_ksat: k exceeds variable count");
    if (k < 1) throw std::invalid_argument("generate_random_ksat: k must be positive");
    if (n_clauses < 0) throw std::invalid_argument("generate_random_ksat: negative clause count");

    Rng rng(seed);
    CnfFormula formula;
    formula.n_vars = n_vars;
    formula.k = n_clauses > 0 ? k : 0;
    formula.clauses.reserve(static_cast<std::size_t>(n_clauses));

    std::vector<std::int32_t> chosen;
    for (int a = 0; a < n_clauses; ++a) {
        chosen.clear();
        while (static_cast<int>(chosen.size()) < k) {
            std::int32_t v = static_cast<std::int32_t>(rng.uniform_below(static_cast<std::uint32_t>(n_vars)));
            if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) chosen.push_back(v);
        }
        Clause clause;
        clause.literals.reserve(static_cast<std::size_t>(k));
        for (std::int32_t v : chosen) clause.literals.push_back({v, static_cast<std::int8_t>(rng.sign())});
        formula.clauses.push_back(std::move(clause));
    }
    return formula;
}

int count_unsatisfied(const CnfFormula& formula, const SpinAssignment& assignment) {
    if (static_cast<std::int32_t>(assignment.values.size()) != formula.n_vars)
        throw std::invalid_argument("count_unsatisfied: assignment size mismatch");
    int unsat = 0;
    for (const Clause& clause : formula.clauses) {
        bool satisfied = false;
        for (const Literal& lit : clause.literals) {
            if (assignment.values[static_cast<std::size_t>(lit.variable)] == lit.sign) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) ++unsat;
    }
    return unsat;
}

GroundState brute_force_ground(const CnfFormula& formula) {
    const int n = formula.n_vars;
    if (n > 24) throw std::invalid_argument("brute_force_ground: N too large (max 24)");

    SpinAssignment candidate;
    candidate.values.resize(static_cast<std::size_t>(n));
    GroundState best;
    best.energy = static_cast<int>(formula.clauses.size()) + 1;

    const std::uint64_t total = 1ull << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (int i = 0; i < n; ++i)
            candidate.values[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? -1 : +1;
        int e = count_unsatisfied(formula, candidate);
        if (e < best.energy ||
            (e == best.energy && std::lexicographical_compare(candidate.values.begin(), candidate.values.end(),
                                                              best.assignment.values.begin(), best.assignment.values.end()))) {
            best.energy = e;
            best.assignment = candidate;
        }
    }
    return best;
}

} // namespace fbopt
