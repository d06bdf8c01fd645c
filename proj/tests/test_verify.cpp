#include "doctest.h"
#include "hcizlab/error.hpp"
#include "hcizlab/verify.hpp"

#include <algorithm>
#include <set>

using namespace hcizlab;

TEST_CASE("registry names are unique and module-prefixed") {
  std::set<std::string> names;
  const std::set<std::string> modules{"combinatorics_core", "characters", "class_algebra", "monotone_hurwitz",
                                      "weingarten",         "genfun",     "hciz_model",    "zeros"};
  std::set<std::string> covered;
  for (const auto& inv : invariant_registry()) {
    CHECK(names.insert(inv.name).second);
    CHECK(inv.name.find('.') != std::string::npos);
    CHECK(modules.count(inv.module) == 1);
    CHECK(static_cast<bool>(inv.check));
    covered.insert(inv.module);
  }
  CHECK(covered == modules);
}

TEST_CASE("profile parsing") {
  CHECK(parse_profile("quick") == VerifyProfile::quick);
  CHECK(parse_profile("full") == VerifyProfile::full);
  CHECK(std::string(to_string(VerifyProfile::full)) == "full");
  CHECK_THROWS_AS(parse_profile("fast"), UsageError);
}

TEST_CASE("quick profile passes") {
  const auto report = run_verification(VerifyContext{});
  for (const auto& r : report.results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
  CHECK(report.passed());
  CHECK(report.failures().empty());
  // the full-only convergence study is skipped
  CHECK(std::none_of(report.results.begin(), report.results.end(), [](const auto& r) { return r.name == "hciz.convergence"; }));
  const auto json = report.to_json();
  CHECK(json["profile"] == "quick");
  CHECK(json["passed"] == true);
  CHECK(json["invariants"].size() == report.results.size());
}

TEST_CASE("module filter") {
  const auto report = run_verification(VerifyContext{}, {"zeros", "characters"});
  REQUIRE(!report.results.empty());
  for (const auto& r : report.results) CHECK((r.module == "zeros" || r.module == "characters"));
}

TEST_CASE("a corrupted character table is caught by name") {
  VerifyContext context;
  context.character_table = [](int d) { return d == 4 ? corrupted_character_table(4) : CharacterTable::get(d); };
  const auto report = run_verification(context, {"characters"});
  CHECK_FALSE(report.passed());
  const auto failed = report.failures();
  CHECK(std::find(failed.begin(), failed.end(), "characters.column_orthogonality") != failed.end());
  CHECK(std::find(failed.begin(), failed.end(), "characters.table_vs_direct") != failed.end());
  CHECK(report.to_text().find("FAIL characters.column_orthogonality") != std::string::npos);
  // the real table is untouched
  CHECK(run_verification(VerifyContext{}, {"characters"}).passed());
}

TEST_CASE("exceptions become failures") {
  VerifyContext context;
  context.character_table = [](int) -> std::shared_ptr<const CharacterTable> { throw NumericalError("characters", "boom"); };
  const auto report = run_verification(context, {"characters"});
  CHECK_FALSE(report.passed());
  bool found = false;
  for (const auto& r : report.results)
    if (r.detail.find("boom") != std::string::npos) found = true;
  CHECK(found);
}
