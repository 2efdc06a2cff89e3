#pragma once

#include <string>
#include <string_view>

#include "multinet/limits.hpp"
#include "multinet/program.hpp"

namespace multinet {

/// Parses program text:
///
///   F: a :- (b | c), (d).        method: head atoms, then clauses
///   Bf: b, c.                    fact
///   #use G(2,2) as Pick.         bind a Girard link (G or Gdual)
///   D: c :- Pick(r1,r2,r3,r4).   bound G link as a generalized body
///   S: c1, c2 :- (r1), (r2) by Sync.   bound Gdual(u,2) as synchronizer
///   ?- a.                        goal
///
/// `%` starts a comment. Throws ParseError with the 1-based position.
Program parse_program(std::string_view text, const Limits& limits = {});

/// Renders a method back to program text; with `unicode`, disjunctions use ⅋
/// and heads are joined with ⊗.
std::string format_method(const Method& m, bool unicode = false);

}  // namespace multinet
