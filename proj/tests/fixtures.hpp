#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "edmn/dmn/parser.hpp"
#include "edmn/logic/vocabulary.hpp"

namespace fixtures {

inline std::string models_dir() { return EDMN_MODELS_DIR; }

inline std::string read(const std::string& name) {
  std::ifstream in(models_dir() + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline edmn::dmn::Model load(const std::string& name) { return edmn::dmn::parse_model(read(name)); }

// gen : {Male, Female}, mar : {Single, Married}
inline edmn::logic::VocabularyPtr greeting_env() {
  using namespace edmn::logic;
  std::vector<SortDecl> sorts{{"Gender", {"Male", "Female"}, std::nullopt},
                              {"Marital", {"Single", "Married"}, std::nullopt}};
  std::vector<SymbolDecl> symbols{{"gen", SymbolKind::Constant, "Gender"},
                                  {"mar", SymbolKind::Constant, "Marital"}};
  return Vocabulary::build(sorts, symbols);
}

inline edmn::logic::Structure world(const edmn::logic::VocabularyPtr& v,
                                    std::vector<std::string> values) {
  std::vector<edmn::logic::ValueIndex> idx;
  for (std::size_t i = 0; i < values.size(); ++i)
    idx.push_back(*v->sort_of(i).index_of(values[i]));
  return edmn::logic::Structure(v, idx);
}

}  // namespace fixtures
