#include <doctest.h>

#include "support.hpp"

using namespace folichar;
using nlohmann::json;

namespace {

bool subset(const json& want, const json& got) {
  if (want.is_object()) {
    if (!got.is_object()) return false;
    for (auto it = want.begin(); it != want.end(); ++it)
      if (!got.contains(it.key()) || !subset(it.value(), got[it.key()])) return false;
    return true;
  }
  return want == got;
}

CommandOptions options_from(const json& o) {
  CommandOptions opt;
  if (o.contains("xi")) opt.xi = o["xi"];
  if (o.contains("max_deg")) opt.max_deg = o["max_deg"];
  if (o.contains("max_cofactor")) opt.max_cofactor = o["max_cofactor"];
  if (o.contains("order")) opt.order = o["order"];
  if (o.contains("bernstein")) opt.bernstein = o["bernstein"];
  if (o.contains("prolonged")) opt.prolonged = o["prolonged"];
  return opt;
}

}  // namespace

TEST_CASE("golden command reports") {
  const std::string dir = FOLICHAR_GOLDEN_DIR;
  json cases = json::parse(fct::read_file(dir + "/cases.json"));
  REQUIRE(cases.size() > 30);
  for (const auto& k : cases) {
    std::string label = k["command"].get<std::string>() + " " + k["file"].get<std::string>() + " " + k["args"].dump();
    INFO(label);
    std::vector<std::string> args = k["args"];
    Report r = run_file_command(fct::read_file(dir + "/" + k["file"].get<std::string>()), k["command"], args,
                                options_from(k.value("options", json::object())));
    INFO(r.json.dump());
    CHECK(r.exit_code == k["exit"].get<int>());
    CHECK(r.json["schema"] == 1);
    CHECK(r.json["command"] == k["command"]);
    CHECK(r.json.contains("timings"));
    if (k.contains("expect")) CHECK(subset(k["expect"], r.json));
    if (k.contains("error")) {
      REQUIRE(r.json.contains("error"));
      CHECK(r.json["error"]["kind"] == k["error"]);
    }
    if (k.contains("expect_error")) CHECK(subset(k["expect_error"], r.json["error"]));
    if (r.exit_code == 1) CHECK(!r.json.contains("error"));
    if (r.json.contains("error")) CHECK(r.exit_code >= 2);
    std::string human = r.human();
    for (auto it = r.json.begin(); it != r.json.end(); ++it)
      if (it.value().is_boolean())
        CHECK(human.find(it.key() + ": " + (it.value().get<bool>() ? "true" : "false")) != std::string::npos);
  }
}

TEST_CASE("budget exhaustion maps to exit code 3") {
  CommandOptions opt;
  opt.budget = 2;
  Report r = run_file_command("vars: x1 x2 x3\nJ: (x1^2 + x2*x3 - 1, x2^2 + x1*x3 - 1, x3^2 + x1*x2 - 1)\n", "gb", {"J"}, opt);
  CHECK(r.exit_code == 3);
  CHECK(r.json["error"]["kind"] == "BudgetExceeded");
}

TEST_CASE("argument errors") {
  Report a = run_file_command("vars: x1 x2\nxi: x1*d1\n", "classify", {}, {});
  CHECK(a.exit_code == 2);
  Report b = run_file_command("vars: x1 x2\nxi: x1*d1\n", "no-such-command", {}, {});
  CHECK(b.exit_code == 2);
  Report c = run_file_command("vars: x1 x2\nxi: x1*d1\n", "bott", {"7"}, {});
  CHECK(c.exit_code == 2);
  CHECK(command_names().size() >= 24);
}
