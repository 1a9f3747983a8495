#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "macaulay/grading.hpp"
#include "macaulay/polymod.hpp"
#include "macaulay/symmetry.hpp"

namespace macaulay {

// A module shift as written: a plain integer or a degree vector "(a,b,...)".
using ShiftSpec = std::variant<std::int64_t, DegreeVector>;

// One problem per file:
//
//   # comment
//   field q                      (or: field fp 32003)
//   vars x1 x2
//   grading total                (order degrevlex | order lex | order matrix [[..]] | elim <k> | elim keep <vars>)
//   module rank 2 shifts [0, 1] tie pot
//   group c4.group
//   generators
//   x1^2 + x2^2 - 1
//   [x1, x2]
struct ProblemFile {
  Field field = Field::rationals();
  std::vector<std::string> variables;
  std::string grading = "total";
  std::size_t rank = 1;
  std::vector<ShiftSpec> shifts;
  TieOrder tie = TieOrder::None;
  std::optional<std::string> group;
  std::vector<ModuleElement> generators;

  RingContext ring() const { return RingContext(field, variables); }
  RingGrading ring_grading() const;
  ModuleGrading module_grading() const;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

struct ProblemOverrides {
  std::optional<Field> field;
  std::optional<std::string> grading;
};

// Throws SyntaxError with the line and column of the offending token.
ProblemFile parse_problem(std::string_view text, const ProblemOverrides& overrides = {});
std::string print_problem(const ProblemFile& problem);

// Grading keywords as in the `grading` line. Throws UsageError on unknown keywords or a
// weight matrix that fails the monoid-order check.
RingGrading parse_grading(std::string_view text, const std::vector<std::string>& variables);

// Resolves shifts against a ring grading: an integer a becomes a on the first coordinate.
std::vector<DegreeVector> resolve_shifts(const std::vector<ShiftSpec>& shifts, std::size_t rank,
                                         const RingGrading& ring);

// Group files list one generator per line:
//   perm (1 2)(3 4)          cycle notation on variable indices
//   signed-perm (-2 1)       x_j -> sign * x_|entry j|, listed for j = 1..d
//   matrix [[0,1],[-1,0]]    column j holds the image of x_j
// A leading "group generators:" line is allowed.
std::vector<Substitution> parse_group(std::string_view text, std::size_t nvars, const Field& field);

}  // namespace macaulay
