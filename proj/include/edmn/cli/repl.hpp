#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "edmn/dmn/parser.hpp"

namespace edmn::cli {

// Interactive session over one model; the state is a FactSet over the
// model's environment variables.
class Session {
 public:
  Session(const dmn::Model& model, std::string table, std::size_t cap);

  // Runs one command line and writes its reply. Returns false on `quit`.
  bool execute(std::string_view line, std::ostream& out);

  const dmn::FactSet& facts() const noexcept { return facts_; }

 private:
  void echo_state(std::ostream& out) const;

  const dmn::Model* model_;
  std::string table_;
  std::size_t cap_;
  dmn::FactSet facts_;
};

// Reads commands until EOF or `quit`. Returns the exit code.
int repl(const dmn::Model& model, const std::string& table, std::size_t cap, std::istream& in,
         std::ostream& out, bool prompt);

}  // namespace edmn::cli
