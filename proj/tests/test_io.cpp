// SPDX-License-Identifier: Apache-2.0

#include "toricdec/examples.hpp"
#include "toricdec/io.hpp"

#include <doctest.h>

#include <random>

using namespace toricdec;

namespace {

std::string data(const std::string& name) { return read_file(std::string(TORICDEC_DATA_DIR) + "/" + name); }

DecompositionReport random_report(std::mt19937_64& rng) {
  DecompositionReport r;
  r.title = "t" + std::to_string(rng() % 100);
  r.target = "quoted \"text\" and \\ backslash";
  r.box = static_cast<std::int64_t>(rng() % 10);
  r.k_max = 1 + static_cast<std::int64_t>(rng() % 30);
  for (int i = 0; i < static_cast<int>(rng() % 4); ++i)
    r.components.push_back({"c" + std::to_string(i), {static_cast<std::size_t>(i)}, rng() % 2 == 0, rng() % 2 == 1,
                            "note"});
  r.columns = {"a", "b"};
  for (int i = 0; i < static_cast<int>(rng() % 5); ++i)
    r.table.push_back({{i, -i, 1LL << 40}, {static_cast<std::int64_t>(rng() % 1000), -7}});
  r.verdicts.push_back(Verdict::verified("v", "detail"));
  r.verdicts.push_back(Verdict::failed("f", {1, -2}, "witness"));
  r.verdicts.push_back(Verdict::inconclusive("i"));
  return r;
}

}  // namespace

TEST_CASE("reports round-trip") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const DecompositionReport r = random_report(rng);
    const std::string doc = report_to_document(r);
    CHECK(parse_report(doc) == r);
    CHECK(report_to_document(parse_report(doc)) == doc);
  }
  const DecompositionReport p2 = p2_cubic_report({3, 20, 1});
  CHECK(parse_report(report_to_document(p2)) == p2);
}

TEST_CASE("integers are written as strings") {
  DecompositionReport r;
  r.box = 6;
  const std::string doc = report_to_document(r);
  CHECK(doc.find("\"box\": \"6\"") != std::string::npos);
  CHECK(doc.find("\"version\": \"1\"") != std::string::npos);
}

TEST_CASE("fan documents") {
  const auto fan = parse_fan(data("p2.json"));
  CHECK(fan->num_rays() == 3);
  CHECK(parse_fan(fan_to_document(*fan))->rays() == fan->rays());
  const GradingSetup s = parse_setup(data("quadric_cone.json"));
  CHECK(s.class_group().torsion == std::vector<Integer>{2});
}

TEST_CASE("module documents match the built-in examples") {
  const ModuleDocument q = parse_module(data("quadric_cone_torsion.json"));
  const TorsionExample ex = quadric_cone_example();
  for (const auto& a : degree_box({0, 0}, 5)) CHECK(evaluate(q.module, a) == evaluate(ex.e, a));
  REQUIRE(q.components.size() == 1);
  CHECK(q.components[0].prime == VarSet{0, 1});

  const ModuleDocument z = parse_module(data("z_graded_4var.json"));
  const TorsionExample zx = z_graded_4var_example();
  for (const auto& a : degree_box({0, 0, 0, 0}, 3)) CHECK(evaluate(z.module, a).dim() == evaluate(zx.e, a).dim());
  CHECK(z.setup.class_of({1, 0, 0, 0}) == zx.setup.class_of({1, 0, 0, 0}));
}

TEST_CASE("matrix documents") {
  const MatrixDocument m = parse_matrix(data("matrix_cubic.json"));
  CHECK(m.nvars == 3);
  CHECK(m.entries.size() == 2);
  CHECK_FALSE(m.matrix);
  CHECK(m.entries[1][1].is_zero());
}

TEST_CASE("input errors carry a location") {
  auto where = [](const std::string& text) -> std::string {
    try {
      (void)parse_module(text);
    } catch (const InputError& e) {
      return e.where();
    }
    return "no error";
  };
  CHECK(where("{") == "");
  CHECK(where(R"({"version": "2", "setup": {}, "module": {}})") == "/version");
  const std::string setup = R"("setup": {"num_vars": "1", "class_matrix": [["1"]], "irrelevant": [["1"]]})";
  CHECK(where(R"({"version": "1", )" + setup + R"(, "module": {"node": "bogus"}})") == "/module/node");
  CHECK(where(R"({"version": "1", )" + setup + R"(, "module": {"node": "free", "shifts": [["x"]]}})") ==
        "/module/shifts/0/0");
  CHECK(where(R"({"version": "1", )" + setup + R"(, "module": {"ref": "nope"}})") == "/module/ref");
  CHECK_THROWS_AS(read_file("/nonexistent/file.json"), InputError);
}
