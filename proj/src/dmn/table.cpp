#include "edmn/dmn/table.hpp"

#include <algorithm>

#include "edmn/error.hpp"

namespace edmn::dmn {

using logic::SymbolKind;

std::string to_string(HitPolicy policy) { return policy == HitPolicy::Any ? "A" : "U"; }

namespace {

std::size_t constant_index(const logic::Vocabulary& vocabulary, const std::string& name,
                           const std::string& table) {
  auto i = vocabulary.find_symbol(name);
  if (!i) throw ModelError("table " + table + ": unknown variable " + name);
  if (vocabulary.symbol(*i).kind != SymbolKind::Constant)
    throw ModelError("table " + table + ": " + name + " is not a variable");
  return *i;
}

}  // namespace

DecisionTable::DecisionTable(logic::VocabularyPtr vocabulary, std::string name,
                             HitPolicy hit_policy, std::vector<std::string> inputs,
                             std::string output, std::vector<Row> rows)
    : vocabulary_(std::move(vocabulary)),
      name_(std::move(name)),
      hit_policy_(hit_policy),
      inputs_(std::move(inputs)),
      output_(std::move(output)),
      rows_(std::move(rows)) {
  if (name_.empty()) throw ModelError("table without name");
  for (const auto& in : inputs_) {
    constant_index(*vocabulary_, in, name_);
    if (in == output_) throw ModelError("table " + name_ + ": output " + output_ + " is also an input");
  }
  constant_index(*vocabulary_, output_, name_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    std::string where = "table " + name_ + " row " + std::to_string(r + 1);
    if (row.cells.size() != inputs_.size())
      throw ModelError(where + ": row arity " + std::to_string(row.cells.size()) + ", expected " +
                       std::to_string(inputs_.size()));
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      try {
        row.cells[c].validate(input_sort(c));
      } catch (const ModelError& e) {
        throw ModelError(where + ": " + e.what());
      }
    }
    if (!output_sort().index_of(row.output))
      throw ModelError(where + ": output " + row.output + " is not in sort " + output_sort().name());
  }
}

std::vector<std::string> DecisionTable::input_variables() const {
  std::vector<std::string> out;
  for (const auto& in : inputs_)
    if (std::find(out.begin(), out.end(), in) == out.end()) out.push_back(in);
  return out;
}

const logic::Sort& DecisionTable::input_sort(std::size_t column) const {
  return vocabulary_->sort_of(*vocabulary_->find_symbol(inputs_.at(column)));
}

const logic::Sort& DecisionTable::output_sort() const {
  return vocabulary_->sort_of(*vocabulary_->find_symbol(output_));
}

std::string render_table(const DecisionTable& table) {
  std::string out = "table " + table.name() + " hit " + to_string(table.hit_policy()) + "\n";
  out += "  inputs ";
  for (std::size_t i = 0; i < table.inputs().size(); ++i) out += (i ? ", " : "") + table.inputs()[i];
  out += "\n  output " + table.output() + " : " + table.output_sort().name() + "\n";
  for (const auto& row : table.rows()) {
    out += "  row ";
    for (const auto& c : row.cells) out += c.to_string() + ", ";
    out += row.output + "\n";
  }
  return out;
}

}  // namespace edmn::dmn
