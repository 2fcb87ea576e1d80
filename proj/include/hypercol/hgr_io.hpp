#pragma once

#include <iosfwd>
#include <string>

#include "hypercol/errors.hpp"
#include "hypercol/hypergraph.hpp"

namespace hypercol {

/// Canonical text form: `p hgr <n> <m> <r>` followed by one line of 1-based,
/// ascending vertex ids per edge, edges in lexicographic order.
void write_hgr(std::ostream& out, const Hypergraph& h);
std::string to_hgr(const Hypergraph& h);

/// Accepts `c` comment lines and blank lines anywhere. Throws ParseError with
/// the offending line number.
Hypergraph parse_hgr(std::istream& in);
Hypergraph parse_hgr(const std::string& text);

}  // namespace hypercol
