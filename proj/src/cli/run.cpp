#include "edmn/cli/run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "edmn/cli/json_output.hpp"
#include "edmn/cli/repl.hpp"
#include "text.hpp"
#include "edmn/decision/compile.hpp"
#include "edmn/dmn/parser.hpp"
#include "edmn/oel/render.hpp"

namespace edmn::cli {

namespace {

using dmn::DecisionResult;
using dmn::DecisionTable;
using dmn::FactSet;
using dmn::Model;

class UsageError : public Error {
 public:
  using Error::Error;
};

// Parse errors in a named input file, reported as path:line:col.
class FileParseError : public Error {
 public:
  FileParseError(const std::string& path, const ParseError& e) : Error(path + ":" + e.what()) {}
};

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

Model load_model(const std::string& path) {
  auto text = read_file(path);
  try {
    return dmn::parse_model(text);
  } catch (const ParseError& e) {
    throw FileParseError(path, e);
  }
}

// Command-line facts replace facts embedded in the model.
FactSet load_facts(const Invocation& inv, const Model& model) {
  std::string text;
  std::string source = "--facts";
  if (inv.facts_file) {
    text = read_file(*inv.facts_file);
    source = *inv.facts_file;
  } else if (inv.facts) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(*inv.facts, ec)) {
      text = read_file(*inv.facts);
      source = *inv.facts;
    } else {
      text = *inv.facts;
    }
  } else {
    return model.facts.value_or(FactSet{});
  }
  try {
    return dmn::parse_facts(text, *model.vocabulary, model.environment);
  } catch (const ParseError& e) {
    throw FileParseError(source, e);
  }
}

const DecisionTable& pick_table(const Model& model, const Invocation& inv) {
  const auto& drd = model.drd;
  if (inv.table) {
    const auto* t = drd.find(*inv.table);
    if (!t) throw UsageError("no table named " + *inv.table);
    return *t;
  }
  if (drd.tables().empty()) throw UsageError("model has no decision table");
  return drd.tables()[drd.order().back()];
}

std::string render_declarations(const logic::Vocabulary& vocabulary,
                                const std::vector<std::string>& environment) {
  std::string out;
  for (const auto& sort : vocabulary.sorts()) {
    out += "sort " + sort.name() + " = ";
    if (sort.is_integer()) {
      out += std::to_string(sort.integer_value(0)) + ".." +
             std::to_string(sort.integer_value(static_cast<logic::ValueIndex>(sort.size() - 1)));
    } else {
      out += "{";
      for (std::size_t i = 0; i < sort.size(); ++i) out += (i ? ", " : "") + sort.values()[i];
      out += "}";
    }
    out += "\n";
  }
  for (const auto& var : environment)
    out += "var " + var + " : " + vocabulary.sort_of(*vocabulary.find_symbol(var)).name() + "\n";
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_decide(const Invocation& inv, const Model& model, std::ostream& out) {
  auto facts = load_facts(inv, model);
  auto decisions = dmn::decide_drd(model.drd, facts, inv.cap);
  if (inv.table) {
    pick_table(model, inv);
    std::erase_if(decisions, [&](const auto& d) { return d.table != *inv.table; });
  }
  int code = kExitOk;
  Json list = Json::array();
  for (const auto& d : decisions) {
    code = std::max(code, exit_code(d.result.kind));
    if (inv.json) {
      Json j = {{"table", d.table}, {"variable", d.variable}};
      j.update(to_json(d.result));
      list.push_back(j);
    } else {
      out << decision_line(d.variable, d.result) << "\n";
    }
  }
  if (inv.json) {
    auto j = envelope("decide");
    j["decisions"] = list;
    emit(out, j);
  }
  return code;
}

int cmd_check(const Invocation& inv, const Model& model, std::ostream& out) {
  std::vector<const DecisionTable*> tables;
  if (inv.table)
    tables.push_back(&pick_table(model, inv));
  else
    for (auto i : model.drd.order()) tables.push_back(&model.drd.tables()[i]);

  int code = kExitOk;
  Json list = Json::array();
  for (const auto* table : tables) {
    auto entries = dmn::check_table(*table, inv.cap);
    auto variables = table->input_variables();
    const auto& vocabulary = *table->vocabulary();
    Json issues = Json::array();
    if (!inv.json) {
      if (entries.empty())
        out << table->name() << ": complete, no conflicts\n";
      else
        out << table->name() << ": " << entries.size() << " knowledge state"
            << (entries.size() == 1 ? "" : "s") << " without a decision\n";
    }
    for (const auto& e : entries) {
      code = std::max(code, exit_code(e.result.kind));
      auto profile = query::KnowledgeProfile::from_facts(vocabulary, variables, e.facts);
      if (inv.json) {
        Json j = {{"profile", to_json(profile, vocabulary)}};
        j.update(to_json(e.result));
        issues.push_back(j);
      } else {
        out << "  " << profile.to_string(vocabulary) << " -> " << describe(e.result) << "\n";
      }
    }
    list.push_back({{"table", table->name()}, {"complete", entries.empty()}, {"issues", issues}});
  }
  if (inv.json) {
    auto j = envelope("check");
    j["tables"] = list;
    emit(out, j);
  }
  return code;
}

decision::UtilityFunction load_utility_for(const Invocation& inv, const Model& model,
                                           const DecisionTable& table) {
  std::vector<std::string> output{table.output()};
  auto text = read_file(*inv.utility);
  try {
    return decision::load_utility(text, model.environment_vocabulary(),
                                  model.vocabulary->restrict_to(output),
                                  decision::DecisionSet::Rows, inv.cap);
  } catch (const UtilityError& e) {
    throw UtilityError(*inv.utility + ": " + e.what());
  }
}

int cmd_compile(const Invocation& inv, const Model& model, std::ostream& out) {
  std::string text;
  if (inv.utility) {
    const auto& table = pick_table(model, inv);
    auto u = load_utility_for(inv, model, table);
    auto edf = decision::induced_edf(u, decision::parse_criterion(*inv.criterion), inv.cap);
    if (inv.to == "oel") {
      text = oel::render_sequence(decision::compile_edf_to_oel(edf, inv.cap));
    } else {
      text = render_declarations(*model.vocabulary, model.environment) + "\n" +
             dmn::render_table(decision::compile_edf_to_edmn(edf, table.name(), inv.cap));
    }
  } else if (inv.to == "oel") {
    text = oel::render_sequence(dmn::translate_drd(model.drd));
  } else {
    // Normal form of a table's epistemic decision map.
    const auto& table = pick_table(model, inv);
    auto variables = table.input_variables();
    auto env = table.vocabulary()->restrict_to(variables);
    std::vector<std::string> output{table.output()};
    auto dec = table.vocabulary()->restrict_to(output);
    decision::EpistemicDecisionFunction edf(env, dec);
    for (const auto& entry : query::enumerate_decision_map(table, inv.cap)) {
      if (!entry.result.is_value()) continue;
      auto state = dmn::facts_to_state(entry.profile.to_facts(*env), env, inv.cap);
      edf.set(std::move(state),
              logic::Structure(dec, {*table.output_sort().index_of(entry.result.value)}));
    }
    text = render_declarations(*table.vocabulary(), variables) + "\n" +
           dmn::render_table(decision::compile_edf_to_edmn(edf, table.name(), inv.cap));
  }
  if (inv.json) {
    auto j = envelope("compile");
    j["to"] = inv.to;
    j["text"] = text;
    emit(out, j);
  } else {
    out << text;
  }
  return kExitOk;
}

int cmd_optimal(const Invocation& inv, const Model& model, std::ostream& out) {
  const auto& table = pick_table(model, inv);
  auto criterion = decision::parse_criterion(*inv.criterion);
  auto u = load_utility_for(inv, model, table);
  auto facts = load_facts(inv, model);
  auto state = dmn::facts_to_state(facts, u.environment(), inv.cap);
  if (state.empty()) {
    if (inv.json) {
      auto j = envelope("optimal");
      j["criterion"] = criterion.to_string();
      j["status"] = "inconsistent";
      emit(out, j);
    } else {
      out << table.output() << ": inconsistent knowledge\n";
    }
    return kExitConflict;
  }
  auto result = decision::optimal_decision(u, criterion, state);
  if (inv.json) {
    auto j = envelope("optimal");
    j["criterion"] = criterion.to_string();
    j["variable"] = table.output();
    j["stateSize"] = state.size();
    j.update(to_json(result, u));
    emit(out, j);
  } else {
    out << result.to_string() << "\n";
  }
  return result.is_value() ? kExitOk : kExitNoDecision;
}

int cmd_minimal(const Invocation& inv, const Model& model, std::ostream& out) {
  const auto& table = pick_table(model, inv);
  auto profiles = query::minimal_knowledge(table, *inv.target, inv.cap);
  const auto& vocabulary = *table.vocabulary();
  if (inv.json) {
    auto j = envelope("minimal");
    j["table"] = table.name();
    j["variable"] = table.output();
    j["target"] = *inv.target;
    Json list = Json::array();
    for (const auto& p : profiles) list.push_back(to_json(p, vocabulary));
    j["profiles"] = list;
    emit(out, j);
  } else {
    print_profiles(out, table, *inv.target, profiles);
  }
  return profiles.empty() ? kExitNoDecision : kExitOk;
}

int cmd_explain(const Invocation& inv, const Model& model, std::ostream& out) {
  const auto& table = pick_table(model, inv);
  FactSet facts;
  auto blocked = table_facts(model, table, load_facts(inv, model), inv.cap, facts);
  DecisionResult result;
  query::Explanation explanation;
  if (blocked)
    result = *blocked;
  else
    std::tie(result, explanation) = query::explain(table, facts, inv.cap);

  if (inv.json) {
    auto j = envelope("explain");
    j["table"] = table.name();
    j["variable"] = table.output();
    j.update(to_json(result));
    j.update(to_json(explanation));
    emit(out, j);
    return exit_code(result.kind);
  }
  print_explanation(out, table, result, explanation);
  return exit_code(result.kind);
}

int cmd_map(const Invocation& inv, const Model& model, std::ostream& out) {
  const auto& table = pick_table(model, inv);
  auto entries = query::enumerate_decision_map(table, inv.cap);
  const auto& vocabulary = *table.vocabulary();
  if (inv.json) {
    auto j = envelope("map");
    j["table"] = table.name();
    j["variable"] = table.output();
    Json list = Json::array();
    for (const auto& e : entries) {
      Json item = {{"profile", to_json(e.profile, vocabulary)}};
      item.update(to_json(e.result));
      list.push_back(item);
    }
    j["entries"] = list;
    emit(out, j);
  } else {
    for (const auto& e : entries)
      out << e.profile.to_string(vocabulary) << " -> " << describe(e.result) << "\n";
  }
  return kExitOk;
}

void validate(const Invocation& inv) {
  static const std::vector<std::string> commands{"decide",  "check",   "compile", "optimal",
                                                 "minimal", "explain", "map",     "repl"};
  if (std::find(commands.begin(), commands.end(), inv.subcommand) == commands.end())
    throw UsageError("unknown subcommand '" + inv.subcommand + "'");
  if (inv.model_path.empty()) throw UsageError("missing model file");
  if (inv.facts && inv.facts_file) throw UsageError("use either --facts or --facts-file");
  if (inv.cap == 0) throw UsageError("--cap must be positive");
  if (inv.subcommand == "optimal") {
    if (!inv.utility) throw UsageError("optimal requires --utility");
    if (!inv.criterion) throw UsageError("optimal requires --criterion");
  }
  if (inv.subcommand == "minimal" && !inv.target) throw UsageError("minimal requires --target");
  if (inv.subcommand == "compile") {
    if (inv.to != "oel" && inv.to != "edmn") throw UsageError("--to must be oel or edmn");
    if (inv.utility && !inv.criterion) throw UsageError("compile --utility requires --criterion");
  }
  if (inv.criterion) decision::parse_criterion(*inv.criterion);
}

}  // namespace

int exit_code(dmn::DecisionResult::Kind kind) {
  switch (kind) {
    case DecisionResult::Kind::Value: return kExitOk;
    case DecisionResult::Kind::Undefined: return kExitNoDecision;
    case DecisionResult::Kind::Inconsistent:
    case DecisionResult::Kind::HitPolicyViolation: return kExitConflict;
  }
  return kExitError;
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err, std::istream& in) {
  try {
    validate(inv);
    auto model = load_model(inv.model_path);
    const auto& c = inv.subcommand;
    if (c == "decide") return cmd_decide(inv, model, out);
    if (c == "check") return cmd_check(inv, model, out);
    if (c == "compile") return cmd_compile(inv, model, out);
    if (c == "optimal") return cmd_optimal(inv, model, out);
    if (c == "minimal") return cmd_minimal(inv, model, out);
    if (c == "explain") return cmd_explain(inv, model, out);
    if (c == "map") return cmd_map(inv, model, out);
    const auto& table = pick_table(model, inv);
    bool interactive = &in == &std::cin && isatty(STDIN_FILENO);
    return repl(model, table.name(), inv.cap, in, out, interactive);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                     std::istream& in) {
  CLI::App app{"Epistemic decision tables: decide, verify, compile and query eDMN models"};
  app.require_subcommand(1);
  Invocation inv;
  std::string criterion, target, utility, table, facts, facts_file;

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"decide", "Decide every table of the model under the given facts"},
      {"check", "List knowledge states that yield no decision"},
      {"compile", "Print the OEL theories or an eDMN normal form"},
      {"optimal", "Optimal decision under a utility grid and criterion"},
      {"minimal", "Least knowledge needed for a target decision"},
      {"explain", "Per-row explanation of a decision"},
      {"map", "Decision for every rectangular knowledge state"},
      {"repl", "Interactive session"},
  };
  for (const auto& spec : specs) {
    auto* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("model", inv.model_path, "Model file")->required();
    sub->add_option("--facts", facts, "Facts text or a facts file");
    sub->add_option("--facts-file", facts_file, "Facts file");
    sub->add_option("--table", table, "Table to use (default: the last decision)");
    sub->add_option("--cap", inv.cap, "Enumeration cap")->capture_default_str();
    sub->add_flag("--json", inv.json, "JSON output");
    if (std::string_view(spec.name) == "optimal" || std::string_view(spec.name) == "compile") {
      sub->add_option("--utility", utility, "Utility CSV");
      sub->add_option("--criterion", criterion,
                      "maximin | maximax | leximin | hurwicz:ALPHA | minimax-regret");
    }
    if (std::string_view(spec.name) == "compile")
      sub->add_option("--to", inv.to, "oel | edmn")->capture_default_str();
    if (std::string_view(spec.name) == "minimal")
      sub->add_option("--target", target, "Target decision value");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }
  inv.subcommand = app.get_subcommands().front()->get_name();
  auto set = [](std::optional<std::string>& field, const std::string& v) {
    if (!v.empty()) field = v;
  };
  set(inv.criterion, criterion);
  set(inv.target, target);
  set(inv.utility, utility);
  set(inv.table, table);
  set(inv.facts, facts);
  set(inv.facts_file, facts_file);
  return run(inv, out, err, in);
}

}  // namespace edmn::cli
