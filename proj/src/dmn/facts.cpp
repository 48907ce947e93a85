#include "edmn/dmn/facts.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "edmn/logic/enumerate.hpp"

namespace edmn::dmn {

using logic::Formula;

namespace {

std::size_t constant_of(const logic::Vocabulary& vocabulary, const std::string& variable) {
  auto i = vocabulary.find_symbol(variable);
  if (!i || vocabulary.symbol(*i).kind != logic::SymbolKind::Constant)
    throw ModelError("unknown variable " + variable);
  return *i;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

void FactSet::know(const logic::Vocabulary& vocabulary, const std::string& variable,
                   std::vector<ValueIndex> values) {
  auto i = constant_of(vocabulary, variable);
  for (auto v : values)
    if (v >= vocabulary.domain_size(i)) throw ModelError("value out of range for " + variable);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto it = restrictions_.find(variable);
  if (it == restrictions_.end()) {
    restrictions_.emplace(variable, std::move(values));
    return;
  }
  std::vector<ValueIndex> both;
  std::set_intersection(it->second.begin(), it->second.end(), values.begin(), values.end(),
                        std::back_inserter(both));
  it->second = std::move(both);
}

void FactSet::know_value(const logic::Vocabulary& vocabulary, const std::string& variable,
                         std::string_view value) {
  auto i = constant_of(vocabulary, variable);
  const auto& sort = vocabulary.sort_of(i);
  auto v = sort.index_of(value);
  if (!v) throw ModelError("value " + std::string(value) + " is not in sort " + sort.name());
  know(vocabulary, variable, {*v});
}

const std::vector<ValueIndex>* FactSet::restriction(const std::string& variable) const {
  auto it = restrictions_.find(variable);
  return it == restrictions_.end() ? nullptr : &it->second;
}

bool FactSet::consistent() const {
  return std::none_of(restrictions_.begin(), restrictions_.end(),
                      [](const auto& kv) { return kv.second.empty(); });
}

std::string FactSet::to_string(const logic::Vocabulary& vocabulary) const {
  std::string out;
  for (const auto& sym : vocabulary.symbols()) {
    auto it = restrictions_.find(sym.name);
    if (it == restrictions_.end()) continue;
    if (!out.empty()) out += "; ";
    const auto& sort = vocabulary.sort(sym.sort);
    if (it->second.size() == 1) {
      out += sym.name + " = " + sort.value(it->second[0]);
      continue;
    }
    out += sym.name + " in {";
    for (std::size_t k = 0; k < it->second.size(); ++k)
      out += (k ? ", " : "") + sort.value(it->second[k]);
    out += "}";
  }
  return out;
}

FactSet parse_facts(std::string_view text, const logic::Vocabulary& vocabulary,
                    std::span<const std::string> allowed) {
  FactSet facts;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t stmt_start = 0;
    while (stmt_start <= line.size()) {
      std::size_t semi = line.find(';', stmt_start);
      if (semi == std::string_view::npos) semi = line.size();
      std::string_view raw = line.substr(stmt_start, semi - stmt_start);
      std::size_t column = stmt_start + 1;
      stmt_start = semi + 1;
      std::string_view stmt = trim(raw);
      if (stmt.empty()) continue;
      column += static_cast<std::size_t>(stmt.data() - raw.data());

      std::string variable;
      std::string_view rest;
      if (auto eq = stmt.find('='); eq != std::string_view::npos) {
        variable = std::string(trim(stmt.substr(0, eq)));
        rest = trim(stmt.substr(eq + 1));
        if (variable.empty() || rest.empty())
          throw ParseError(line_no, column, "expected 'variable = value'");
        if (std::find(allowed.begin(), allowed.end(), variable) == allowed.end())
          throw ParseError(line_no, column, "unknown environment variable " + variable);
        auto i = constant_of(vocabulary, variable);
        auto v = vocabulary.sort_of(i).index_of(rest);
        if (!v)
          throw ParseError(line_no, column, "value " + std::string(rest) + " is not in sort " +
                                                vocabulary.sort_of(i).name());
        facts.know(vocabulary, variable, {*v});
        continue;
      }
      auto space = stmt.find_first_of(" \t");
      if (space == std::string_view::npos)
        throw ParseError(line_no, column, "expected 'variable = value' or 'variable in {...}'");
      variable = std::string(stmt.substr(0, space));
      rest = trim(stmt.substr(space));
      if (rest.substr(0, 2) != "in")
        throw ParseError(line_no, column, "expected 'in' after " + variable);
      rest = trim(rest.substr(2));
      if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
        throw ParseError(line_no, column, "expected '{...}' value set");
      if (std::find(allowed.begin(), allowed.end(), variable) == allowed.end())
        throw ParseError(line_no, column, "unknown environment variable " + variable);
      auto i = constant_of(vocabulary, variable);
      const auto& sort = vocabulary.sort_of(i);
      std::vector<ValueIndex> values;
      std::string_view inner = rest.substr(1, rest.size() - 2);
      std::size_t p = 0;
      while (p <= inner.size()) {
        std::size_t comma = inner.find(',', p);
        if (comma == std::string_view::npos) comma = inner.size();
        std::string_view item = trim(inner.substr(p, comma - p));
        p = comma + 1;
        if (item.empty()) throw ParseError(line_no, column, "empty value in set");
        auto v = sort.index_of(item);
        if (!v)
          throw ParseError(line_no, column,
                           "value " + std::string(item) + " is not in sort " + sort.name());
        values.push_back(*v);
      }
      facts.know(vocabulary, variable, std::move(values));
    }
  }
  return facts;
}

logic::EpistemicState facts_to_state(const FactSet& facts, const logic::VocabularyPtr& vocabulary,
                                     std::size_t cap) {
  const std::size_t n = vocabulary->symbols().size();
  std::vector<std::vector<ValueIndex>> choices(n);
  std::size_t count = 1;
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& name = vocabulary->symbol(i).name;
    if (const auto* r = facts.restriction(name)) {
      choices[i] = *r;
    } else {
      for (ValueIndex v = 0; v < vocabulary->domain_size(i); ++v) choices[i].push_back(v);
    }
    if (choices[i].empty()) return logic::EpistemicState(vocabulary);
    count = count > kMax / choices[i].size() ? kMax : count * choices[i].size();
  }
  if (count > cap) throw CapExceeded("epistemic state", count, cap);

  std::vector<logic::Structure> worlds;
  worlds.reserve(count);
  std::vector<std::size_t> at(n, 0);
  std::vector<ValueIndex> values(n);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < n; ++i) values[i] = choices[i][at[i]];
    worlds.emplace_back(vocabulary, values);
    for (std::size_t i = n; i-- > 0;) {
      if (++at[i] < choices[i].size()) break;
      at[i] = 0;
    }
  }
  return logic::EpistemicState(vocabulary, std::move(worlds));
}

std::vector<Formula> facts_to_formulas(const FactSet& facts, const logic::Vocabulary& vocabulary) {
  std::vector<Formula> out;
  for (const auto& sym : vocabulary.symbols()) {
    if (const auto* r = facts.restriction(sym.name))
      out.push_back(Formula::member(vocabulary, sym.name, *r));
  }
  return out;
}

std::size_t rectangular_count(const logic::Vocabulary& vocabulary,
                              std::span<const std::string> variables) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t count = 1;
  for (const auto& v : variables) {
    auto d = vocabulary.domain_size(constant_of(vocabulary, v));
    if (d >= 63) return kMax;
    std::size_t subsets = (std::size_t{1} << d) - 1;
    if (count > kMax / subsets) return kMax;
    count *= subsets;
  }
  return count;
}

void for_each_rectangular(const logic::Vocabulary& vocabulary,
                          std::span<const std::string> variables, std::size_t cap,
                          const std::function<void(const FactSet&)>& visit) {
  const std::size_t count = rectangular_count(vocabulary, variables);
  if (count > cap) throw CapExceeded("rectangular state enumeration", count, cap);
  const std::size_t n = variables.size();
  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) sizes[i] = vocabulary.domain_size(constant_of(vocabulary, variables[i]));
  std::vector<std::uint64_t> mask(n, 1);
  for (std::size_t k = 0; k < count; ++k) {
    FactSet facts;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<ValueIndex> values;
      for (std::size_t v = 0; v < sizes[i]; ++v)
        if (mask[i] >> v & 1U) values.push_back(static_cast<ValueIndex>(v));
      facts.know(vocabulary, variables[i], std::move(values));
    }
    visit(facts);
    for (std::size_t i = n; i-- > 0;) {
      if (++mask[i] < (std::uint64_t{1} << sizes[i])) break;
      mask[i] = 1;
    }
  }
}

}  // namespace edmn::dmn
