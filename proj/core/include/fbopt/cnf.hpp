#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fbopt {

// One literal of a clause. sign = +1 means the literal is satisfied by
// spin value +1, sign = -1 by spin value -1.
struct Literal {
    std::int32_t variable = 0; // in [0, n_vars)
    std::int8_t sign = +1;     // +1 or -1

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
    std::vector<Literal> literals;

    friend bool operator==(const Clause&, const Clause&) = default;
};

// k-SAT instance in clause form. Every clause carries exactly k literals
// over distinct variables; k == 0 only for the empty formula.
struct CnfFormula {
    std::int32_t n_vars = 0;
    std::int32_t k = 0;
    std::vector<Clause> clauses;

    std::int32_t n_clauses() const { return static_cast<std::int32_t>(clauses.size()); }

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// A full +-1 assignment of the variables.
struct SpinAssignment {
    std::vector<std::int8_t> values; // each +1 or -1

    friend bool operator==(const SpinAssignment&, const SpinAssignment&) = default;
};

// Parses DIMACS CNF text: optional 'c' comment lines, one 'p cnf N M'
// header, then M zero-terminated clause lines. Throws std::runtime_error
// on malformed input, out-of-range variables, repeated variables inside
// a clause, clause count mismatch, or mixed clause lengths.
CnfFormula parse_dimacs(std::string_view text);

// Inverse of parse_dimacs: parse_dimacs(emit_dimacs(f)) == f.
std::string emit_dimacs(const CnfFormula& formula);

// Random k-SAT: each clause picks k distinct variables uniformly and
// negates each independently with probability 1/2. Deterministic per seed.
CnfFormula generate_random_ksat(int n_vars, int k, int n_clauses, std::uint64_t seed);

// Number of clauses in which every literal evaluates false.
int count_unsatisfied(const CnfFormula& formula, const SpinAssignment& assignment);

struct GroundState {
    int energy = 0; // unsatisfied-clause count at the optimum
    SpinAssignment assignment;
};

// Exhaustive minimum over all 2^N assignments (N <= 24). Ties resolve to
// the lexicographically smallest value vector (-1 sorts before +1).
GroundState brute_force_ground(const CnfFormula& formula);

} // namespace fbopt
