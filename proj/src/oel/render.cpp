#include "edmn/oel/render.hpp"

namespace edmn::oel {

std::string render_theory(const Theory& theory) {
  std::string out = "theory " + theory.id + " {\n";
  for (const auto& c : theory.constraints) out += "  " + c.to_string() + ".\n";
  for (const auto& d : theory.definitions) {
    out += "  definition {\n";
    for (const auto& r : d.rules()) out += "    " + r.head.to_string() + " <- " + r.body.to_string() + ".\n";
    out += "  }\n";
  }
  return out + "}\n";
}

std::string render_sequence(const TheorySequence& sequence) {
  std::string out;
  for (const auto& t : sequence.theories()) out += render_theory(t);
  return out;
}

}  // namespace edmn::oel
