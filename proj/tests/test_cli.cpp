#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "edmn/cli/repl.hpp"
#include "edmn/cli/run.hpp"
#include "edmn/dmn/decide.hpp"
#include "fixtures.hpp"

using namespace edmn;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "edmn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = cli::run_command_line(static_cast<int>(argv.size()), argv.data(), out, err, in);
  return {code, out.str(), err.str()};
}

std::string model(const std::string& name) { return fixtures::models_dir() + "/" + name; }

}  // namespace

TEST_CASE("decide") {
  auto r = run_cli({"decide", model("greeting.edmn"), "--facts", "gen=Male"});
  CHECK(r.code == 0);
  CHECK(r.out == "sal = Mr\n");
  CHECK(run_cli({"decide", model("greeting.edmn"), "--facts", model("female.facts")}).out == "sal = Lady\n");
  CHECK(run_cli({"decide", model("greeting.edmn"), "--facts-file", model("female.facts")}).out ==
        "sal = Lady\n");
  CHECK(run_cli({"decide", model("greeting.edmn")}).out == "sal = Customer\n");

  auto undefined = run_cli({"decide", model("classical.edmn"), "--facts", "gen=Female"});
  CHECK(undefined.code == 2);
  CHECK(undefined.out == "sal: undefined (no row fired)\n");
  auto inconsistent = run_cli({"decide", model("greeting.edmn"), "--facts", "gen=Male; gen=Female"});
  CHECK(inconsistent.code == 3);
  CHECK(inconsistent.out == "sal: inconsistent knowledge\n");

  auto letter = run_cli({"decide", model("letter.edmn"), "--facts", "gen=Male; tone=Formal"});
  CHECK(letter.out == "sal = Mr\nheading = Personal\n");
  CHECK(run_cli({"decide", model("letter.edmn"), "--table", "Salutation"}).out == "sal = Customer\n");
}

TEST_CASE("decide json") {
  auto r = run_cli({"decide", model("greeting.edmn"), "--facts", "gen=Female", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["version"] == 1);
  CHECK(j["command"] == "decide");
  CHECK(j["decisions"][0]["status"] == "value");
  CHECK(j["decisions"][0]["decision"] == "Lady");
  CHECK(j["decisions"][0]["firedRows"] == nlohmann::json::array({4}));
  CHECK(j["decisions"][0]["stateSize"] == 2);
}

TEST_CASE("check") {
  auto r = run_cli({"check", model("classical.edmn")});
  CHECK(r.code == 2);
  CHECK(r.out.find("gen={Female}, mar={Single,Married} -> undefined") != std::string::npos);
  auto ok = run_cli({"check", model("greeting.edmn")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "Salutation: complete, no conflicts\n");
  auto j = nlohmann::json::parse(run_cli({"check", model("classical.edmn"), "--json"}).out);
  CHECK(j["tables"][0]["issues"].size() == 4);
  CHECK(j["tables"][0]["issues"][0]["profile"]["gen"] == nlohmann::json::array({"Female"}));
  CHECK(run_cli({"check", model("age.edmn")}).code == 1);  // cap exceeded
}

TEST_CASE("optimal") {
  auto r = run_cli({"optimal", model("greeting.edmn"), "--utility", model("salutation_utility.csv"), "--criterion",
                "maximin", "--facts", "gen=Male"});
  CHECK(r.code == 0);
  CHECK(r.out == "Mr\n");
  auto tie = run_cli({"optimal", model("greeting.edmn"), "--utility", model("salutation_utility.csv"),
                  "--criterion", "maximin"});
  CHECK(tie.code == 2);
  CHECK(tie.out == "tie: Mr, Ms, Mrs\n");
  auto j = nlohmann::json::parse(run_cli({"optimal", model("greeting.edmn"), "--utility",
                                      model("salutation_utility.csv"), "--criterion", "minimax-regret",
                                      "--facts", "gen=Male", "--json"})
                                     .out);
  CHECK(j["decision"] == "Mr");
  CHECK(j["aggregates"]["Mrs"] == "1");
  CHECK(run_cli({"optimal", model("greeting.edmn"), "--criterion", "maximin"}).code == 1);
  CHECK(run_cli({"optimal", model("greeting.edmn"), "--utility", model("salutation_utility.csv"), "--criterion",
             "bogus"})
            .code == 1);
}

TEST_CASE("minimal, explain, map") {
  auto r = run_cli({"minimal", model("interview.edmn"), "--target", "Approve"});
  CHECK(r.code == 0);
  CHECK(r.out == "gpa={High}, min={Yes,No}\ngpa={Fair}, min={Yes}\n");
  CHECK(run_cli({"minimal", model("greeting.edmn")}).code == 1);

  auto e = run_cli({"explain", model("greeting.edmn"), "--facts", "gen=Female"});
  CHECK(e.out ==
        "sal = Lady\n"
        "fired: row 4 (gen: Female, mar: !K)\n"
        "blocked: row 1 at gen: Male\n"
        "blocked: row 2 at mar: Single\n"
        "blocked: row 3 at mar: Married\n"
        "blocked: row 5 at gen: !K\n");
  auto ej = nlohmann::json::parse(run_cli({"explain", model("greeting.edmn"), "--json"}).out);
  CHECK(ej["decision"] == "Customer");
  CHECK(ej["fired"][0]["row"] == 5);
  CHECK(ej["blocked"].size() == 4);

  auto m = run_cli({"map", model("greeting.edmn")});
  CHECK(m.code == 0);
  CHECK(std::count(m.out.begin(), m.out.end(), '\n') == 9);
  auto mj = nlohmann::json::parse(run_cli({"map", model("classical.edmn"), "--json"}).out);
  CHECK(mj["entries"].size() == 9);
}

TEST_CASE("compile") {
  auto r = run_cli({"compile", model("greeting.edmn")});
  CHECK(r.code == 0);
  CHECK(r.out.find("sal = Mr <- K[T_E][gen = Male].") != std::string::npos);

  // The eDMN normal form is itself a model that decides like the source.
  auto nf = run_cli({"compile", model("greeting.edmn"), "--to", "edmn"});
  REQUIRE(nf.code == 0);
  auto parsed = dmn::parse_model(nf.out);
  auto source = fixtures::load("greeting.edmn");
  for (const char* facts : {"", "gen = Male", "gen = Female", "mar = Single", "gen = Female; mar = Married"}) {
    auto f1 = dmn::parse_facts(facts, *source.vocabulary, source.environment);
    auto f2 = dmn::parse_facts(facts, *parsed.vocabulary, parsed.environment);
    CHECK(dmn::decide(source.drd.tables()[0], f1).value ==
          dmn::decide(parsed.drd.tables()[0], f2).value);
  }

  auto opt = run_cli({"compile", model("greeting.edmn"), "--utility", model("salutation_utility.csv"),
                  "--criterion", "maximin", "--to", "oel"});
  CHECK(opt.code == 0);
  CHECK(opt.out.find("theory T_d {") != std::string::npos);
  CHECK(run_cli({"compile", model("greeting.edmn"), "--to", "xml"}).code == 1);
}

TEST_CASE("errors") {
  auto bad = run_cli({"decide", model("greeting.edmn"), "--facts", "gen=Robot"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("not in sort Gender") != std::string::npos);
  CHECK(run_cli({"decide", "/nonexistent.edmn"}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"decide", model("greeting.edmn"), "--table", "Nope"}).code == 1);

  auto path = std::string("/tmp/edmn_test_broken.edmn");
  {
    std::ofstream f(path);
    f << "sort S = {a}\nvar s : S\ntable T hit A\n inputs s\n output o : S\n row a\n";
  }
  auto parse = run_cli({"decide", path});
  CHECK(parse.code == 1);
  CHECK(parse.err.find(path + ":6:") != std::string::npos);
  CHECK(parse.err.find("row arity") != std::string::npos);
}

TEST_CASE("repl transcripts") {
  auto r = run_cli({"repl", model("greeting.edmn")},
               "know gen = Female\ndecide\nreset\ndecide\nknow gen = Male\nknow gen = Female\n"
               "decide\nforget nobody\nknow gen = Robot\nquit\ndecide\n");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "state: 2 worlds\n"
        "sal = Lady\n"
        "state: 4 worlds\n"
        "sal = Customer\n"
        "state: 2 worlds\n"
        "warning: inconsistent knowledge\n"
        "state: 0 worlds\n"
        "sal: inconsistent knowledge\n"
        "error: unknown variable 'nobody'\n"
        "error: value Robot is not in sort Gender\n");

  auto q = run_cli({"repl", model("interview.edmn")},
               "know gpa in {High, Fair}\nexplain\nminimal Reject\nforget gpa\nfacts\n");
  CHECK(q.out.find("decision = Interview\nfired: row 6") != std::string::npos);
  CHECK(q.out.find("gpa={Low}, min={Yes,No}\n") != std::string::npos);
  CHECK(q.out.find("(nothing known)") != std::string::npos);
}

TEST_CASE("installed binary") {
  std::string cmd = std::string(EDMN_TOOL) + " decide " + model("greeting.edmn") +
                    " --facts gen=Male 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buffer[256];
  std::string out;
  while (fgets(buffer, sizeof buffer, pipe)) out += buffer;
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(out == "sal = Mr\n");

  std::string check = std::string(EDMN_TOOL) + " check " + model("classical.edmn") + " > /dev/null";
  CHECK(WEXITSTATUS(std::system(check.c_str())) == 2);
}
