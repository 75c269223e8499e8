#include "commtop/catalog.hpp"
#include "commtop/commands.hpp"
#include "commtop/error.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace commtop;

namespace {

CommandInputs inputs_for(const std::string& command) {
  CommandInputs in;
  in.group = catalog::group(command == "pi2-e2" ? "Z2xZ2" : "S3");
  in.extension = extension_catalog::extension("NT_SU2");
  in.cocycle = build_alpha_cocycle(*in.extension, 0, 0, {{BigInt(1)}, {BigInt(0)}, 1});
  return in;
}

}  // namespace

TEST_CASE("every row carries a reference and the machine document parses") {
  for (const auto& command : command_names()) {
    if (command == "verify-all") continue;
    auto r = run_command(command, inputs_for(command));
    CHECK_MESSAGE(r.ok, command);
    CHECK(!r.rows.empty());
    for (const auto& row : r.rows) CHECK_MESSAGE(!row.ref.empty(), command << ": " << row.key);
    auto doc = nlohmann::json::parse(r.to_json());
    CHECK(doc["version"] == kReportVersion);
    CHECK(doc["results"].size() == r.rows.size());
    CHECK(run_command(command, inputs_for(command)).to_json() == r.to_json());
  }
}

TEST_CASE("missing inputs are reported") {
  CommandInputs none;
  CHECK_THROWS_AS(run_command("moore-h2", none), InvalidArgument);
  CHECK_THROWS_AS(run_command("clutch", none), InvalidArgument);
  CHECK_THROWS_AS(run_command("frobnicate", none), InvalidArgument);
  CommandInputs nonabelian;
  nonabelian.group = catalog::group("Q8");
  CHECK_THROWS_AS(run_command("pi2-e2", nonabelian), InvalidArgument);
}

TEST_CASE("fixtures pin and flag rows") {
  CommandInputs in;
  in.group = catalog::group("Q8");
  in.fixtures = R"({"version": 1, "pins": {"coset-poset Q8": {"reduced H_1": {"free_rank": 3, "torsion": []}}}})";
  auto r = run_command("coset-poset", in);
  CHECK(r.ok);
  auto pinned = std::count_if(r.rows.begin(), r.rows.end(), [](const ReportRow& x) { return x.status == "pinned"; });
  CHECK(pinned == 1);
  in.fixtures = R"({"version": 1, "pins": {"coset-poset Q8": {"reduced H_1": {"free_rank": 2, "torsion": []},
                                                              "no such row": 1}}})";
  r = run_command("coset-poset", in);
  CHECK_FALSE(r.ok);
  in.fixtures = "{}";
  CHECK_THROWS_AS(run_command("coset-poset", in), ParseError);
}

TEST_CASE("single criteria run on their own") {
  auto c = run_criterion(12);
  CHECK(c.pass);
  CHECK(c.id == 12);
  CHECK_THROWS_AS(run_criterion(13), InvalidArgument);
}
