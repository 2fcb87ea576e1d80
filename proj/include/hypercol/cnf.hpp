#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hypercol/certify.hpp"
#include "hypercol/errors.hpp"
#include "hypercol/hypergraph.hpp"

namespace hypercol {

using Clause = std::vector<std::int64_t>;

struct CnfFormula {
    std::size_t num_vars = 0;
    std::vector<Clause> clauses;

    /// Throws InputError on an empty clause, an out-of-range literal, a zero
    /// literal, or a clause containing both x and -x.
    void validate() const;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// 1-based DIMACS variable for "vertex v has colour c".
inline std::int64_t color_var(VertexId v, std::size_t c, std::size_t k) {
    return static_cast<std::int64_t>(v * k + c + 1);
}

/// At-least-one colour per vertex, and per edge and colour a clause forbidding
/// that colour on the whole edge. With `symmetry_break`, also the unit x(0,0).
CnfFormula encode_k_coloring(const Hypergraph& h, std::size_t k, bool symmetry_break = false);

/// Picks, per vertex, the smallest colour whose variable is true.
/// `assignment[i]` is the value of variable i+1; missing variables are false.
Coloring decode(const std::vector<bool>& assignment, const Hypergraph& h, std::size_t k);

void write_dimacs(std::ostream& out, const CnfFormula& f);
CnfFormula parse_dimacs(std::istream& in);

struct SolverOutcome {
    enum class Status { kSat, kUnsat, kUnknown };
    Status status = Status::kUnknown;
    std::vector<bool> model;  // model[i] is variable i+1
};

/// Reads competition-format solver output: `c` comments, one `s` status line,
/// `v` model lines terminated by 0. Missing status means UNKNOWN.
SolverOutcome parse_solver_output(std::string_view text);

/// Writes `f` to a temporary DIMACS file, substitutes its path for every
/// `{cnf}` in `command_template`, runs the command through the shell and
/// parses its standard output.
SolverOutcome run_external_solver(const CnfFormula& f, const std::string& command_template);

/// Decides k-colourability with an external solver. A SAT answer is decoded
/// and rejected with DecodeError unless it yields a proper colouring.
ColorSearch k_colorable_external(const Hypergraph& h, std::size_t k,
                                 const std::string& command_template, bool symmetry_break = true);

}  // namespace hypercol
