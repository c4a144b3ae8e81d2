#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "heis/cocycle.hpp"
#include "heis/fab.hpp"
#include "heis/finite_group.hpp"
#include "heis/heisenberg.hpp"
#include "heis/pairing.hpp"
#include "heis/qz.hpp"

namespace heis::textio {

// Parse failure with 1-based position; the message carries both.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

// Group syntax: `Z/n1 x Z/n2 x ...`, spaces around the x optional.
FinAbGroup parse_group(const std::string& text);
std::string fmt_group(const FinAbGroup& a);

// Coefficient syntax: `QZ` or `QZ^k` for the divisible group, group
// syntax for finite moduli.
CoeffContext parse_context(const std::string& text);
std::string fmt_context(const CoeffContext& ctx);

// Scalars as fractions `p/q` (a bare integer means its class, i.e. 0);
// vectors as `(p/q, p/q, ...)`.
QZ parse_scalar(const std::string& text);
CoeffVec parse_vector(const std::string& text);
std::string fmt_scalar(const QZ& q);
// Rank-one values print as a bare scalar, higher ranks in parentheses.
std::string fmt_value(const CoeffVec& v);

// Pairing file: header `pairing on <group> coeff <ctx>` followed by
// lines `(i,j) = value` with 1-based generator indices; omitted entries
// are zero.  An entry whose order does not divide gcd(n_i, n_j) is
// rejected with the position of the offending line.
Pairing parse_pairing_file(const std::string& text);
std::string fmt_pairing_file(const Pairing& p);

// Cocycle file: either a pairing file, or
//   `cocycle bimult on <group> coeff <ctx>` with pairing entry lines, or
//   `cocycle table on <group> coeff <ctx>` with lines
//   `(x-coords | y-coords) = value`.
// Table values are not themselves checked against the cocycle laws here;
// callers run verify_cocycle.
Cocycle parse_cocycle_file(const std::string& text);
std::string fmt_cocycle_file(const Cocycle& c);

// Extension description: line `heisenberg`, then `group <group>`,
// `coeff <ctx>`, then `cocycle table` or `cocycle bimult` with entry
// lines as in the cocycle file.
Cocycle parse_heisenberg_file(const std::string& text);

// Refinement lines `f(coords) = value`, every element in enumeration
// (lexicographic) order.
std::string fmt_refinement(const CochainFunction& f);
CochainFunction parse_refinement(const std::string& text, const FinAbGroup& a,
                                 const CoeffContext& ctx);

// Cayley table file: line 1 the order n, line 2 the identity index, then
// n rows of n space-separated 0-based product indices.
FiniteGroup parse_cayley_file(const std::string& text);
std::string fmt_cayley_file(const FiniteGroup& g);

// One line of space-separated element indices.
std::vector<std::uint32_t> parse_subgroup_line(const std::string& text);
std::string fmt_subgroup_line(const std::vector<std::uint32_t>& idx);

}  // namespace heis::textio
