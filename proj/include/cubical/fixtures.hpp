#pragma once

// Small named systems used by the tests, the acceptance suite and the CLI
// examples.

#include <string>
#include <vector>

#include "cubical/core.hpp"
#include "cubical/gsystem.hpp"

namespace cubical::fixtures {

/// The path S - T - Q - P with tau: S>T, P>Q and mu: T>Q, plus reverses.
TokenSystem cub4();
/// theta = (0.1, 0.2, 0.3, 0.4) for tau, tau~, mu, mu~.
std::vector<double> cub4_theta();

/// tau: S>T only; T has no effective token.
TokenSystem figure_2_1();
/// Two states, one self-reverse token.
TokenSystem swap();
/// Two states, one mutual-reverse pair.
TokenSystem single_edge();
/// Three states, three reverse pairs around a cycle.
TokenSystem triangle();
/// Two copies of CUB4 sharing token names.
TokenSystem double_cub4();

/// Full 4-cycle G-system over {x, y}.
GSystem square();
/// Full 3-cube G-system over {x, y, z}.
GSystem cube3();

// Systems failing one of C1-C4.

/// Fails C2 only.
TokenSystem c2_witness();
/// Fails C3 only: an 8-cycle labelled tau sigma tau~ sigma~ twice, so
/// tau sigma tau~ sigma~ is vacuous without being closed.
TokenSystem c3_witness();
/// Fails C4 only: a path on which tau is effective twice in a row.
TokenSystem c4_witness();
/// Closest available to a C1-only failure: fails C1 and C4. A system failing
/// C1 alone does not exist, since C2 with a reverse-less token breaks C3 and
/// a self-reverse token breaks C4.
TokenSystem c1_candidate();

struct Named {
  std::string name;
  TokenSystem system;
};

/// Every fixture above, by name.
std::vector<Named> all();

}  // namespace cubical::fixtures
