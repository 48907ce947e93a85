#pragma once

#include <string>

#include "edmn/oel/theory.hpp"

namespace edmn::oel {

// Textual form used by the `compile` command: one block per definition,
// rules as `head <- body.` in rule order.
std::string render_theory(const Theory& theory);
std::string render_sequence(const TheorySequence& sequence);

}  // namespace edmn::oel
