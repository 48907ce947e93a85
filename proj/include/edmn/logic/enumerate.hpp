#pragma once

#include <span>
#include <vector>

#include "edmn/error.hpp"
#include "edmn/logic/formula.hpp"
#include "edmn/logic/structure.hpp"

namespace edmn::logic {

// All total structures of the vocabulary, lexicographic with the first
// declared symbol most significant. Throws CapExceeded past `cap`.
std::vector<Structure> enumerate_structures(const VocabularyPtr& vocabulary,
                                            std::size_t cap = kDefaultEnumerationCap);

// All structures satisfying every formula; empty when unsatisfiable.
EpistemicState models_of(std::span<const Formula> formulas, const VocabularyPtr& vocabulary,
                         std::size_t cap = kDefaultEnumerationCap);

}  // namespace edmn::logic
