#pragma once

#include <string>
#include <vector>

#include "edmn/dmn/cell.hpp"
#include "edmn/logic/vocabulary.hpp"

namespace edmn::dmn {

enum class HitPolicy { Any, Unique };

std::string to_string(HitPolicy policy);

struct Row {
  std::vector<Cell> cells;
  std::string output;
  std::size_t line = 0;  // source line, 0 when built in code
};

// An eDMN decision table over a model vocabulary. Input columns name
// constants of the vocabulary; a variable may head more than one column.
class DecisionTable {
 public:
  DecisionTable(logic::VocabularyPtr vocabulary, std::string name, HitPolicy hit_policy,
                std::vector<std::string> inputs, std::string output, std::vector<Row> rows);

  const logic::VocabularyPtr& vocabulary() const noexcept { return vocabulary_; }
  const std::string& name() const noexcept { return name_; }
  HitPolicy hit_policy() const noexcept { return hit_policy_; }
  const std::vector<std::string>& inputs() const noexcept { return inputs_; }
  const std::string& output() const noexcept { return output_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  // Distinct input variables in first-column order.
  std::vector<std::string> input_variables() const;
  const logic::Sort& input_sort(std::size_t column) const;
  const logic::Sort& output_sort() const;

 private:
  logic::VocabularyPtr vocabulary_;
  std::string name_;
  HitPolicy hit_policy_;
  std::vector<std::string> inputs_;
  std::string output_;
  std::vector<Row> rows_;
};

// Model-file text for one table (without sort/var declarations).
std::string render_table(const DecisionTable& table);

}  // namespace edmn::dmn
