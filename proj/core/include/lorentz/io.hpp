#ifndef LORENTZ_IO_HPP
#define LORENTZ_IO_HPP

#include <string>
#include <string_view>

#include "lorentz/errors.hpp"
#include "lorentz/graph.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/sym_matrix.hpp"

namespace lorentz {

// Polynomial text format:
//
//   vars 3
//   # comment
//   1/2 ; x0^2 x1^1
//   -3 ;
//
// One term per line, `<rational> ; <var>^<exp> ...` with variables x0..x{n-1};
// an empty right-hand side is the constant term and a bare `x3` means `x3^1`.
// Repeated monomials are summed. Throws ParseError with the offending
// line and column.
Polynomial parse_polynomial(std::string_view text);

// Canonical text: header line then terms in descending graded lex order.
std::string format_polynomial(const Polynomial& f);

// Graph format: `n <count>` then one `e i j` line per edge, 0-indexed.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

// Matrix format: `n <size>` then one whitespace-separated row per line.
SymMatrix parse_matrix(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace lorentz

#endif  // LORENTZ_IO_HPP
