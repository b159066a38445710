#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latgb/polynomial.hpp"
#include "latgb/ring.hpp"

namespace latgb {

// Grammar:  poly  := ['+'|'-'] term (('+'|'-') term)*
//           term  := integer ['*' varpow ('*' varpow)*] | varpow ('*' varpow)*
//           varpow:= name ['^' posint]
// Names match [a-zA-Z][a-zA-Z0-9_]* and must belong to ctx; exponents are
// capped at 2^31 - 1.  `line` seeds the position reported in errors.
Polynomial parse_polynomial(const std::string& text, const RingContext& ctx,
                            int line = 1);

// A parsed problem file: ring declaration, generators, optional tensor shape.
struct ProblemFile {
    std::vector<std::string> variables;
    MonomialOrder order;
    std::vector<Polynomial> generators;
    std::optional<std::vector<std::int64_t>> shape;

    RingContext ring() const { return RingContext(variables, order); }
};

// Line-oriented format.  '#' starts a comment; blank lines are skipped.
//   ring x, y order grevlex
//   gen 3*x^2
//   gen y
//   shape 2,2,3
// The ring line must come first; `order` defaults to grevlex; generators
// must be nonzero.
ProblemFile parse_problem_file(const std::string& text);
ProblemFile load_problem_file(const std::string& path);

}  // namespace latgb
