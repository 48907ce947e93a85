#include "edmn/decision/utility.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "edmn/logic/enumerate.hpp"

namespace edmn::decision {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits one CSV record. Double quotes group (with "" as an escaped quote);
// commas inside parentheses do not split, so unquoted tuple labels work.
std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  int depth = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == '(') {
      ++depth;
      current += c;
    } else if (c == ')') {
      --depth;
      current += c;
    } else if (c == ',' && depth <= 0) {
      fields.emplace_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.emplace_back(trim(current));
  return fields;
}

std::size_t find_structure(const std::vector<Structure>& sorted, const Structure& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  return (it != sorted.end() && *it == s) ? static_cast<std::size_t>(it - sorted.begin())
                                          : sorted.size();
}

}  // namespace

UtilityFunction::UtilityFunction(VocabularyPtr environment, VocabularyPtr decisions_vocabulary,
                                 std::vector<Structure> decisions, const Scorer& score,
                                 std::size_t cap)
    : env_(std::move(environment)), dec_(std::move(decisions_vocabulary)) {
  worlds_ = logic::enumerate_structures(env_, cap);
  std::sort(decisions.begin(), decisions.end());
  decisions.erase(std::unique(decisions.begin(), decisions.end()), decisions.end());
  for (const auto& d : decisions)
    if (!logic::same_vocabulary(d.vocabulary_ptr(), dec_))
      throw UtilityError("decision " + d.to_string() + " is not over the decision vocabulary");
  if (decisions.empty()) throw UtilityError("empty decision set");
  decisions_ = std::move(decisions);
  scores_.reserve(worlds_.size() * decisions_.size());
  for (const auto& d : decisions_)
    for (const auto& w : worlds_) scores_.push_back(score(w, d));
}

UtilityFunction::UtilityFunction(VocabularyPtr environment, VocabularyPtr decisions_vocabulary,
                                 const Scorer& score, std::size_t cap)
    : UtilityFunction(environment, decisions_vocabulary,
                      logic::enumerate_structures(decisions_vocabulary, cap), score, cap) {}

std::optional<std::size_t> UtilityFunction::world_index(const Structure& world) const {
  auto i = find_structure(worlds_, world);
  if (i == worlds_.size()) return std::nullopt;
  return i;
}

std::optional<std::size_t> UtilityFunction::decision_index(const Structure& decision) const {
  auto i = find_structure(decisions_, decision);
  if (i == decisions_.size()) return std::nullopt;
  return i;
}

const Rational& UtilityFunction::score(const Structure& world, const Structure& decision) const {
  auto w = world_index(world);
  if (!w) throw UtilityError("world " + world.label() + " is outside the utility grid");
  auto d = decision_index(decision);
  if (!d) throw UtilityError("decision " + decision.label() + " is outside the utility grid");
  return score(*w, *d);
}

UtilityFunction UtilityFunction::transformed(
    const std::function<Rational(const Rational&)>& f) const {
  UtilityFunction out;
  out.env_ = env_;
  out.dec_ = dec_;
  out.worlds_ = worlds_;
  out.decisions_ = decisions_;
  out.scores_.reserve(scores_.size());
  for (const auto& s : scores_) out.scores_.push_back(f(s));
  return out;
}

std::optional<Structure> parse_label(std::string_view label, const VocabularyPtr& vocabulary) {
  label = trim(label);
  if (label.size() >= 2 && label.front() == '(' && label.back() == ')')
    label = label.substr(1, label.size() - 2);
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= label.size(); ++i) {
    if (i == label.size() || label[i] == ',') {
      parts.push_back(trim(label.substr(start, i - start)));
      start = i + 1;
    }
  }
  const auto& symbols = vocabulary->symbols();
  if (parts.size() != symbols.size()) return std::nullopt;
  std::vector<logic::ValueIndex> values;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i].kind == logic::SymbolKind::Proposition) {
      if (parts[i] == "true")
        values.push_back(1);
      else if (parts[i] == "false")
        values.push_back(0);
      else
        return std::nullopt;
    } else {
      auto v = vocabulary->sort(symbols[i].sort).index_of(parts[i]);
      if (!v) return std::nullopt;
      values.push_back(*v);
    }
  }
  return Structure(vocabulary, std::move(values));
}

UtilityFunction load_utility(std::string_view csv, const VocabularyPtr& environment,
                             const VocabularyPtr& decisions, DecisionSet mode, std::size_t cap) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto end = csv.find('\n', pos);
    if (end == std::string_view::npos) end = csv.size();
    auto line = trim(csv.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    records.emplace_back(line_no, split_record(line));
  }
  if (records.empty()) throw UtilityError("empty utility file");

  auto worlds = logic::enumerate_structures(environment, cap);
  const auto& header = records.front().second;
  std::vector<std::size_t> column_world;  // header column -> world index
  std::vector<bool> seen(worlds.size(), false);
  for (std::size_t c = 1; c < header.size(); ++c) {
    auto w = parse_label(header[c], environment);
    if (!w) throw UtilityError("unknown world label '" + header[c] + "' in header");
    auto i = find_structure(worlds, *w);
    if (seen[i]) throw UtilityError("duplicate world column " + w->label());
    seen[i] = true;
    column_world.push_back(i);
  }
  for (std::size_t i = 0; i < worlds.size(); ++i)
    if (!seen[i]) throw UtilityError("incomplete utility: missing world column " + worlds[i].label());

  std::vector<Structure> rows;
  std::vector<std::vector<Rational>> grid;  // row -> world index -> score
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& [line, fields] = records[r];
    auto where = "line " + std::to_string(line);
    if (fields.size() != header.size())
      throw UtilityError(where + ": expected " + std::to_string(header.size()) + " cells, got " +
                         std::to_string(fields.size()));
    auto d = parse_label(fields[0], decisions);
    if (!d) throw UtilityError(where + ": unknown decision '" + fields[0] + "'");
    if (std::find(rows.begin(), rows.end(), *d) != rows.end())
      throw UtilityError(where + ": duplicate decision row " + fields[0]);
    std::vector<Rational> scores(worlds.size());
    for (std::size_t c = 1; c < fields.size(); ++c) {
      try {
        scores[column_world[c - 1]] = parse_rational(fields[c]);
      } catch (const UtilityError&) {
        throw UtilityError(where + ": non-numeric cell '" + fields[c] + "' in column " +
                           header[c]);
      }
    }
    rows.push_back(*d);
    grid.push_back(std::move(scores));
  }
  if (rows.empty()) throw UtilityError("utility has no decision rows");
  if (mode == DecisionSet::Complete) {
    for (const auto& d : logic::enumerate_structures(decisions, cap))
      if (std::find(rows.begin(), rows.end(), d) == rows.end())
        throw UtilityError("missing decision row " + d.label());
  }

  return UtilityFunction(
      environment, decisions, rows,
      [&](const Structure& w, const Structure& d) {
        auto r = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), d) - rows.begin());
        return grid[r][find_structure(worlds, w)];
      },
      cap);
}

std::string render_utility(const UtilityFunction& u) {
  std::string out = "decision";
  for (const auto& w : u.worlds()) out += ",\"" + w.label() + "\"";
  out += '\n';
  for (std::size_t d = 0; d < u.decisions().size(); ++d) {
    auto label = u.decisions()[d].label();
    if (u.decision_vocabulary()->symbols().size() == 1) label = label.substr(1, label.size() - 2);
    out += label;
    for (std::size_t w = 0; w < u.worlds().size(); ++w) out += "," + to_string(u.score(w, d));
    out += '\n';
  }
  return out;
}

}  // namespace edmn::decision
