#include "edmn/logic/enumerate.hpp"

namespace edmn::logic {

std::vector<Structure> enumerate_structures(const VocabularyPtr& vocabulary, std::size_t cap) {
  const std::size_t count = vocabulary->structure_count();
  if (count > cap) throw CapExceeded("structure enumeration", count, cap);
  const std::size_t n = vocabulary->symbols().size();
  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) sizes[i] = vocabulary->domain_size(i);

  std::vector<Structure> out;
  out.reserve(count);
  std::vector<ValueIndex> current(n, 0);
  for (std::size_t k = 0; k < count; ++k) {
    out.emplace_back(vocabulary, current);
    // odometer, last symbol fastest
    for (std::size_t i = n; i-- > 0;) {
      if (++current[i] < sizes[i]) break;
      current[i] = 0;
    }
  }
  return out;
}

EpistemicState models_of(std::span<const Formula> formulas, const VocabularyPtr& vocabulary,
                         std::size_t cap) {
  std::vector<BoundFormula> bound;
  bound.reserve(formulas.size());
  for (const auto& f : formulas) bound.emplace_back(f, *vocabulary);
  std::vector<Structure> worlds;
  for (auto& s : enumerate_structures(vocabulary, cap)) {
    bool ok = true;
    for (const auto& b : bound) {
      if (!b.eval(s.values())) {
        ok = false;
        break;
      }
    }
    if (ok) worlds.push_back(std::move(s));
  }
  return EpistemicState(vocabulary, std::move(worlds));
}

}  // namespace edmn::logic
