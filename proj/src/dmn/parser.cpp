#include "edmn/dmn/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "edmn/error.hpp"

namespace edmn::dmn {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_identifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), ident_char);
}

// Recursive-descent parser for a single cell.
class CellParser {
 public:
  CellParser(std::string_view text, const logic::Sort& sort) : text_(text), sort_(sort) {}

  Cell parse() {
    skip_ws();
    if (at_end()) fail("empty cell");
    if (peek() == '-' && (pos_ + 1 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      skip_ws();
      if (!at_end()) fail("unexpected input after '-'");
      return Cell::any();
    }
    Cell cell = parse_alternatives();
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(text_.substr(pos_, 1)) + "'");
    try {
      cell.validate(sort_);
    } catch (const ModelError& e) {
      throw ParseError(1, 1, e.what());
    }
    return cell;
  }

 private:
  Cell parse_alternatives() {
    std::size_t start = pos_;
    Cell cell = parse_unit();
    while (true) {
      skip_ws();
      if (!accept("|") && !accept("\xE2\x88\xA8")) break;  // '|' or '∨'
      Cell rhs = parse_unit();
      try {
        cell = Cell::either(std::move(cell), std::move(rhs));
      } catch (const ModelError& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    return cell;
  }

  Cell parse_unit() {
    skip_ws();
    if (accept("!K") || accept("\xC2\xACK")) {  // '!K' or '¬K'
      if (!at_end() && ident_char(peek())) fail("expected '!K' or '!K[...]'");
      skip_ws();
      if (accept("[")) {
        std::size_t start = pos_;
        Cell inner = parse_alternatives();
        skip_ws();
        if (!accept("]")) fail("expected ']'");
        try {
          return Cell::not_known_that(std::move(inner));
        } catch (const ModelError& e) {
          pos_ = start;
          fail(e.what());
        }
      }
      return Cell::not_known();
    }
    if (accept("!=") || accept("\xE2\x89\xA0")) return Cell::test(CompareOp::Ne, value());
    if (accept("<=") || accept("\xE2\x89\xA4")) return Cell::test(CompareOp::Le, value());
    if (accept(">=") || accept("\xE2\x89\xA5")) return Cell::test(CompareOp::Ge, value());
    if (accept("<")) return Cell::test(CompareOp::Lt, value());
    if (accept(">")) return Cell::test(CompareOp::Gt, value());
    if (accept("=")) return Cell::test(CompareOp::Eq, value());
    if (accept("{")) {
      std::vector<std::string> values;
      do {
        values.push_back(value());
        skip_ws();
      } while (accept(","));
      if (!accept("}")) fail("expected '}'");
      return Cell::enumeration(std::move(values));
    }
    if (peek() == '[' || peek() == '(') {
      bool lo_inclusive = peek() == '[';
      ++pos_;
      std::string lo = value();
      skip_ws();
      if (!accept("..")) fail("expected '..' in range");
      std::string hi = value();
      skip_ws();
      bool hi_inclusive;
      if (accept("]"))
        hi_inclusive = true;
      else if (accept(")"))
        hi_inclusive = false;
      else
        fail("expected ']' or ')' closing range");
      return Cell::range(std::move(lo), std::move(hi), lo_inclusive, hi_inclusive);
    }
    std::string v = value();
    skip_ws();
    if (accept("..")) return Cell::range(std::move(v), value());
    return Cell::test(CompareOp::Eq, std::move(v));
  }

  std::string value() {
    skip_ws();
    std::size_t start = pos_;
    if (!at_end() && peek() == '-') ++pos_;
    while (!at_end() && ident_char(peek())) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) {
      pos_ = start;
      fail("expected a value");
    }
    // "1..5": identifier scan stops at '.', so ranges split correctly.
    return std::string(text_.substr(start, pos_ - start));
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(1, pos_ + 1, message); }

  std::string_view text_;
  const logic::Sort& sort_;
  std::size_t pos_ = 0;
};

struct Piece {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits on commas outside brackets; columns are 1-based within the line.
std::vector<Piece> split_cells(std::string_view line, std::size_t offset) {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = offset;
  for (std::size_t i = offset; i <= line.size(); ++i) {
    char c = i < line.size() ? line[i] : ',';
    if (c == '{' || c == '[' || c == '(') ++depth;
    if (c == '}' || c == ']' || c == ')') --depth;
    if (c == ',' && depth <= 0) {
      std::string_view piece = line.substr(start, i - start);
      std::size_t lead = 0;
      while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
      piece.remove_prefix(lead);
      while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
      out.push_back({piece, start + lead + 1});
      start = i + 1;
      depth = 0;
    }
  }
  return out;
}

struct PendingRow {
  std::vector<Piece> cells;
  Piece output;
  std::size_t line;
};

struct PendingTable {
  std::string name;
  HitPolicy policy = HitPolicy::Any;
  std::size_t line = 0;
  std::optional<std::vector<Piece>> inputs;
  std::size_t inputs_line = 0;
  std::optional<std::string> output;
  std::string output_sort;
  std::size_t output_line = 0;
  std::vector<PendingRow> rows;
  // Lines are kept alive by the caller's text buffer.
};

class ModelParser {
 public:
  explicit ModelParser(std::string_view text) : text_(text) {}

  Model parse() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos, end - pos);
      ++line_;
      pos = end + 1;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      parse_line(line);
    }
    return finish();
  }

 private:
  void parse_line(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) return;
    std::size_t kw_end = i;
    while (kw_end < line.size() && ident_char(line[kw_end])) ++kw_end;
    std::string_view keyword = line.substr(i, kw_end - i);
    line_text_ = line;
    pos_ = kw_end;
    if (keyword == "sort") return parse_sort();
    if (keyword == "var") return parse_var();
    if (keyword == "table") return parse_table();
    if (keyword == "inputs") return parse_inputs();
    if (keyword == "output") return parse_output();
    if (keyword == "row") return parse_row();
    if (keyword == "fact") return parse_fact();
    throw ParseError(line_, i + 1, "unknown statement '" + std::string(keyword) + "'");
  }

  void parse_sort() {
    close_table();
    std::size_t col = column();
    std::string name = identifier("sort name");
    if (sort_lines_.count(name)) fail(col, "duplicate sort " + name);
    expect("=");
    skip_ws();
    logic::SortDecl decl{name, {}, std::nullopt};
    if (accept("{")) {
      skip_ws();
      if (accept("}")) fail(col, "sort " + name + ": empty domain");
      do {
        std::size_t vcol = column();
        std::string v = token("value");
        if (std::find(decl.values.begin(), decl.values.end(), v) != decl.values.end())
          fail(vcol, "duplicate value " + v + " in sort " + name);
        decl.values.push_back(std::move(v));
        skip_ws();
      } while (accept(","));
      if (!accept("}")) fail(column(), "expected '}'");
    } else {
      std::size_t lo_col = column();
      std::string lo = token("interval bound");
      expect("..");
      std::string hi = token("interval bound");
      try {
        decl.interval = {std::stoll(lo), std::stoll(hi)};
      } catch (const std::exception&) {
        fail(lo_col, "integer sort bounds expected");
      }
      if (decl.interval->second < decl.interval->first) fail(lo_col, "sort " + name + ": empty domain");
    }
    expect_end();
    if (!decl.interval && decl.values.empty()) fail(col, "sort " + name + ": empty domain");
    try {
      if (decl.interval)
        sorts_.push_back(logic::Sort::interval(decl.name, decl.interval->first, decl.interval->second));
      else
        sorts_.emplace_back(decl.name, decl.values);
    } catch (const VocabularyError& e) {
      fail(col, e.what());
    }
    sort_lines_[name] = line_;
  }

  void parse_var() {
    close_table();
    std::size_t col = column();
    std::string name = identifier("variable name");
    expect(":");
    std::size_t sort_col = column();
    std::string sort = identifier("sort name");
    expect_end();
    if (!sort_lines_.count(sort)) fail(sort_col, "unknown sort " + sort);
    declare_symbol(name, col);
    environment_.push_back(name);
    symbols_.push_back({name, logic::SymbolKind::Constant, sort});
  }

  void parse_table() {
    close_table();
    PendingTable t;
    t.line = line_;
    t.name = identifier("table name");
    for (const auto& other : tables_)
      if (other.name == t.name) fail(1, "duplicate table " + t.name);
    skip_ws();
    if (!accept_word("hit")) fail(column(), "expected 'hit <policy>'");
    std::size_t pcol = column();
    std::string policy = identifier("hit policy");
    if (policy == "A" || policy == "Any" || policy == "ANY")
      t.policy = HitPolicy::Any;
    else if (policy == "U" || policy == "Unique" || policy == "UNIQUE")
      t.policy = HitPolicy::Unique;
    else
      fail(pcol, "unsupported hit policy " + policy + " (supported: A, U)");
    expect_end();
    current_ = std::move(t);
  }

  void parse_inputs() {
    auto& t = table("inputs");
    if (t.inputs) fail(1, "table " + t.name + " already has inputs");
    t.inputs_line = line_;
    skip_ws();
    std::vector<Piece> names;
    if (pos_ < line_text_.size()) names = split_cells(line_text_, pos_);
    for (const auto& p : names)
      if (!is_identifier(p.text)) throw ParseError(line_, p.column, "expected variable name");
    t.inputs = std::move(names);
  }

  void parse_output() {
    auto& t = table("output");
    if (t.output) fail(1, "table " + t.name + " already has an output");
    std::size_t col = column();
    std::string name = identifier("output variable");
    expect(":");
    std::size_t sort_col = column();
    std::string sort = identifier("sort name");
    expect_end();
    if (!sort_lines_.count(sort)) fail(sort_col, "unknown sort " + sort);
    declare_symbol(name, col);
    symbols_.push_back({name, logic::SymbolKind::Constant, sort});
    t.output = name;
    t.output_sort = sort;
    t.output_line = line_;
  }

  void parse_row() {
    auto& t = table("row");
    if (!t.inputs || !t.output) fail(1, "row before 'inputs' and 'output' of table " + t.name);
    auto pieces = split_cells(line_text_, pos_);
    std::size_t expected = t.inputs->size() + 1;
    if (pieces.size() != expected)
      fail(pieces.empty() ? 1 : pieces.front().column,
           "row arity: expected " + std::to_string(expected) + " cells (" +
               std::to_string(t.inputs->size()) + " inputs + output), got " +
               std::to_string(pieces.size()));
    Piece out = pieces.back();
    pieces.pop_back();
    t.rows.push_back({std::move(pieces), out, line_});
  }

  void parse_fact() {
    close_table();
    skip_ws();
    facts_.push_back({line_text_.substr(pos_), line_, pos_ + 1});
  }

  Model finish() {
    close_table();
    logic::VocabularyPtr vocabulary;
    try {
      vocabulary = logic::Vocabulary::build(sorts_, symbols_);
    } catch (const VocabularyError& e) {
      throw ParseError(1, 1, e.what());
    }

    std::vector<DecisionTable> tables;
    for (const auto& t : tables_) tables.push_back(build_table(t, vocabulary));

    Model model{vocabulary, environment_, Drd(), std::nullopt};
    try {
      auto edges = derive_edges(tables);
      model.drd = compose_drd(std::move(tables), std::move(edges), environment_);
    } catch (const ModelError& e) {
      throw ParseError(tables_.empty() ? 1 : tables_.front().line, 1, e.what());
    }

    if (!facts_.empty()) {
      FactSet facts;
      for (const auto& f : facts_) {
        try {
          auto one = parse_facts(f.text, *vocabulary, environment_);
          for (const auto& [var, values] : one.restrictions()) facts.know(*vocabulary, var, values);
        } catch (const ParseError& e) {
          throw ParseError(f.line, f.column + e.column() - 1, e.message());
        }
      }
      model.facts = std::move(facts);
    }
    return model;
  }

  DecisionTable build_table(const PendingTable& t, const logic::VocabularyPtr& vocabulary) {
    if (!t.inputs) throw ParseError(t.line, 1, "table " + t.name + " has no 'inputs' line");
    if (!t.output) throw ParseError(t.line, 1, "table " + t.name + " has no 'output' line");
    std::vector<std::string> inputs;
    for (const auto& p : *t.inputs) {
      auto i = vocabulary->find_symbol(p.text);
      if (!i) throw ParseError(t.inputs_line, p.column, "unknown variable " + std::string(p.text));
      if (p.text == *t.output)
        throw ParseError(t.inputs_line, p.column, "output " + *t.output + " is also an input");
      inputs.emplace_back(p.text);
    }
    const auto& out_sort = vocabulary->sort(*vocabulary->find_sort(t.output_sort));
    std::vector<Row> rows;
    for (const auto& r : t.rows) {
      Row row;
      row.line = r.line;
      for (std::size_t c = 0; c < r.cells.size(); ++c) {
        const auto& sort = vocabulary->sort_of(*vocabulary->find_symbol(inputs[c]));
        try {
          row.cells.push_back(parse_cell(r.cells[c].text, sort));
        } catch (const ParseError& e) {
          throw ParseError(r.line, r.cells[c].column + e.column() - 1,
                           "column " + inputs[c] + ": " + e.message());
        }
      }
      if (!out_sort.index_of(r.output.text))
        throw ParseError(r.line, r.output.column,
                         "value " + std::string(r.output.text) + " is not in sort " + out_sort.name());
      row.output = std::string(r.output.text);
      rows.push_back(std::move(row));
    }
    try {
      return DecisionTable(vocabulary, t.name, t.policy, std::move(inputs), *t.output, std::move(rows));
    } catch (const ModelError& e) {
      throw ParseError(t.line, 1, e.what());
    }
  }

  void declare_symbol(const std::string& name, std::size_t col) {
    if (!declared_.insert(name).second) fail(col, "duplicate variable " + name);
    if (sort_lines_.count(name)) fail(col, name + " is already a sort name");
  }

  PendingTable& table(const char* what) {
    if (!current_) fail(1, std::string("'") + what + "' outside a table");
    return *current_;
  }

  void close_table() {
    if (current_) tables_.push_back(std::move(*current_));
    current_.reset();
  }

  std::string identifier(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < line_text_.size() && ident_char(line_text_[pos_])) ++pos_;
    std::string_view id = line_text_.substr(start, pos_ - start);
    if (!is_identifier(id)) fail(start + 1, std::string("expected ") + what);
    return std::string(id);
  }

  std::string token(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < line_text_.size() && line_text_[pos_] == '-') ++pos_;
    while (pos_ < line_text_.size() && ident_char(line_text_[pos_])) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && line_text_[start] == '-'))
      fail(start + 1, std::string("expected ") + what);
    return std::string(line_text_.substr(start, pos_ - start));
  }

  void expect(std::string_view tok) {
    skip_ws();
    if (!accept(tok)) fail(column(), "expected '" + std::string(tok) + "'");
  }

  void expect_end() {
    skip_ws();
    if (pos_ < line_text_.size()) fail(column(), "unexpected input");
  }

  bool accept(std::string_view tok) {
    if (line_text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view word) {
    if (line_text_.substr(pos_, word.size()) == word &&
        (pos_ + word.size() >= line_text_.size() || !ident_char(line_text_[pos_ + word.size()]))) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < line_text_.size() && std::isspace(static_cast<unsigned char>(line_text_[pos_]))) ++pos_;
  }

  std::size_t column() {
    skip_ws();
    return pos_ + 1;
  }

  [[noreturn]] void fail(std::size_t col, const std::string& message) const {
    throw ParseError(line_, col, message);
  }

  struct PendingFact {
    std::string_view text;
    std::size_t line;
    std::size_t column;
  };

  std::string_view text_;
  std::string_view line_text_;
  std::size_t line_ = 0;
  std::size_t pos_ = 0;

  std::vector<logic::Sort> sorts_;
  std::map<std::string, std::size_t> sort_lines_;
  std::vector<logic::SymbolDecl> symbols_;
  std::set<std::string> declared_;
  std::vector<std::string> environment_;
  std::optional<PendingTable> current_;
  std::vector<PendingTable> tables_;
  std::vector<PendingFact> facts_;
};

}  // namespace

Cell parse_cell(std::string_view text, const logic::Sort& sort) {
  return CellParser(text, sort).parse();
}

Model parse_model(std::string_view text) { return ModelParser(text).parse(); }

}  // namespace edmn::dmn
