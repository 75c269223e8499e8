#include "commtop/catalog.hpp"
#include "commtop/error.hpp"
#include "commtop/spec_io.hpp"

#include <doctest.h>

#include <string>

using namespace commtop;

namespace {

std::string error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

bool same_table(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

const char* kO2 = R"({"rank": 1,
  "finite": {"format": "perm", "degree": 2, "generators": [[1, 0]], "generator_names": ["tau"]},
  "action": {"tau": [[-1]]}, "label": "O2"})";

}  // namespace

TEST_CASE("group specs") {
  auto q8 = parse_group_spec(R"({"format": "catalog", "name": "Q8"})");
  CHECK(same_table(q8, catalog::group("Q8")));
  auto s3 = parse_group_spec(R"({"format": "perm", "degree": 3, "generators": [[1,0,2],[1,2,0]]})");
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  auto z2 = parse_group_spec(R"({"format": "table", "order": 2, "table": [[0,1],[1,0]], "names": ["e","x"]})");
  CHECK(z2.name(1) == "x");
}

TEST_CASE("group specs round trip") {
  for (const auto& name : catalog::names()) {
    auto g = catalog::group(name);
    auto back = parse_group_spec(group_spec(g));
    CHECK(same_table(g, back));
    for (Element a = 0; a < g.order(); ++a) CHECK(back.name(a) == g.name(a));
    CHECK(group_spec(back) == group_spec(g));
  }
}

TEST_CASE("group spec errors name the field") {
  CHECK(error_of([] { parse_group_spec(R"({"format": "perm", "degree": 3, "generators": [[1,0,7]]})"); })
            .find("generators[0][2]") != std::string::npos);
  CHECK(error_of([] { parse_group_spec(R"({"format": "table", "order": 2, "table": [[0,1],[0,1]]})"); }) != "");
  CHECK(error_of([] { parse_group_spec(R"({"name": "Q8"})"); }).find("format") != std::string::npos);
  CHECK(error_of([] { parse_group_spec(R"({"format": "catalog", "name": "Q7"})"); }).find("name") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_group_spec("{"), ParseError);
}

TEST_CASE("extension specs") {
  auto o2 = parse_extension_spec(kO2);
  CHECK(o2.rank() == 1);
  CHECK(to_string(psi_star(o2, *o2.finite().find("tau"))) == "[[2]]");
  auto back = parse_extension_spec(extension_spec(o2));
  CHECK(extension_spec(back) == extension_spec(o2));
  for (const auto& name : extension_catalog::names()) {
    auto e = extension_catalog::extension(name);
    auto r = parse_extension_spec(extension_spec(e));
    CHECK(extension_spec(r) == extension_spec(e));
    CHECK(r.central_subgroup().size() == e.central_subgroup().size());
  }
  auto cat = parse_extension_spec(R"({"format": "catalog", "name": "NT_SU2"})");
  CHECK_FALSE(cat.is_split());
}

TEST_CASE("extension spec errors") {
  std::string bad = R"({"rank": 2, "finite": {"format": "catalog", "name": "Z4"},
    "action": {"a": [[0,-1],[1,0]], "a^2": [[1,0],[0,1]]}})";
  CHECK(error_of([&] { parse_extension_spec(bad); }).find("not a homomorphism") != std::string::npos);
  std::string shape = R"({"rank": 1, "finite": {"format": "catalog", "name": "Z2"}, "action": {"a": [[1,0]]}})";
  CHECK(error_of([&] { parse_extension_spec(shape); }).find("action.a[0]") != std::string::npos);
  std::string q = R"({"rank": 1, "finite": {"format": "catalog", "name": "Z2"}, "action": {"a": [[-1]]},
    "quotient": [{"t": ["1/x"], "f": "1"}]})";
  CHECK(error_of([&] { parse_extension_spec(q); }).find("quotient[0].t[0]") != std::string::npos);
}

TEST_CASE("cocycle specs") {
  auto o2 = parse_extension_spec(kO2);
  auto alpha = parse_cocycle_spec(R"({"construction": "alpha", "p": "1", "q": "tau", "u": [1], "v": [0]})", o2);
  CHECK(validate(o2, alpha).ok);
  auto arcs = parse_cocycle_spec(cocycle_spec(alpha, o2), o2);
  CHECK(arcs.a12 == alpha.a12);
  CHECK(arcs.a13 == alpha.a13);
  CHECK(arcs.a23 == alpha.a23);
  auto qx = parse_cocycle_spec(
      R"({"construction": "qx", "q": "tau", "x": [{"time": "0", "t": ["0"], "f": "1"}, {"time": "1", "t": ["1"], "f": "1"}]})",
      o2);
  CHECK(validate(o2, qx).ok);
  CHECK(error_of([&] {
          parse_cocycle_spec(R"({"a12": [{"time": "0", "t": ["0"], "f": "1"}, {"time": "1", "t": ["0"], "f": "tau"}],
                                 "a13": [], "a23": []})",
                             o2);
        }).find("a12[1].f") != std::string::npos);
  CHECK(error_of([&] { parse_cocycle_spec(R"({"construction": "alpha", "p": "1", "q": "tau", "u": [1], "v": [0],
                                              "end": "1/3"})", o2); })
            .find("x(end)") != std::string::npos);
}
