#include "edmn/cli/repl.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <limits>

#include "text.hpp"

namespace edmn::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

constexpr const char* kHelp =
    "commands:\n"
    "  know VAR = VALUE | know VAR in {V1, V2}\n"
    "  forget VAR\n"
    "  decide | explain | minimal VALUE\n"
    "  facts | reset | help | quit\n";

}  // namespace

Session::Session(const dmn::Model& model, std::string table, std::size_t cap)
    : model_(&model), table_(std::move(table)), cap_(cap) {}

void Session::echo_state(std::ostream& out) const {
  if (!facts_.consistent()) {
    out << "warning: inconsistent knowledge\n";
    out << "state: 0 worlds\n";
    return;
  }
  const auto& vocabulary = *model_->vocabulary;
  std::size_t count = 1;
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  for (const auto& var : model_->environment) {
    const auto* r = facts_.restriction(var);
    std::size_t n = r ? r->size() : vocabulary.domain_size(*vocabulary.find_symbol(var));
    count = count > kMax / n ? kMax : count * n;
  }
  out << "state: " << count << (count == 1 ? " world" : " worlds") << "\n";
}

bool Session::execute(std::string_view line, std::ostream& out) {
  line = trim(line);
  if (line.empty() || line.front() == '#') return true;
  auto space = line.find_first_of(" \t");
  auto command = line.substr(0, space);
  auto rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
  const auto& table = *model_->drd.find(table_);

  try {
    if (command == "quit" || command == "exit") return false;
    if (command == "help") {
      out << kHelp;
    } else if (command == "know") {
      auto learned = dmn::parse_facts(rest, *model_->vocabulary, model_->environment);
      for (const auto& [var, values] : learned.restrictions())
        facts_.know(*model_->vocabulary, var, values);
      echo_state(out);
    } else if (command == "forget") {
      std::string var(rest);
      if (std::find(model_->environment.begin(), model_->environment.end(), var) ==
          model_->environment.end()) {
        out << "error: unknown variable '" << var << "'\n";
        return true;
      }
      facts_.forget(var);
      echo_state(out);
    } else if (command == "reset") {
      facts_.clear();
      echo_state(out);
    } else if (command == "facts") {
      out << (facts_.empty() ? "(nothing known)" : facts_.to_string(*model_->vocabulary)) << "\n";
    } else if (command == "decide") {
      print_decisions(out, dmn::decide_drd(model_->drd, facts_, cap_));
    } else if (command == "explain") {
      dmn::FactSet facts;
      auto blocked = table_facts(*model_, table, facts_, cap_, facts);
      if (blocked) {
        print_explanation(out, table, *blocked, {});
      } else {
        auto [result, explanation] = query::explain(table, facts, cap_);
        print_explanation(out, table, result, explanation);
      }
    } else if (command == "minimal") {
      if (rest.empty()) {
        out << "error: minimal needs a target value\n";
        return true;
      }
      std::string target(rest);
      print_profiles(out, table, target, query::minimal_knowledge(table, target, cap_));
    } else {
      out << "error: unknown command '" << command << "' (try help)\n";
    }
  } catch (const ParseError& e) {
    out << "error: " << e.message() << "\n";
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
  }
  return true;
}

int repl(const dmn::Model& model, const std::string& table, std::size_t cap, std::istream& in,
         std::ostream& out, bool prompt) {
  Session session(model, table, cap);
  std::string line;
  while (true) {
    if (prompt) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    if (!session.execute(line, out)) break;
  }
  return 0;
}

}  // namespace edmn::cli
