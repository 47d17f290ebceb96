#include <doctest.h>

#include "grouplat/automorphism.hpp"
#include "grouplat/catalog.hpp"
#include "grouplat/scan.hpp"

#include <json.hpp>

using namespace grouplat;

TEST_CASE("verify bundle passes on well-understood groups") {
  for (const char* spec : {"C1", "C6", "S3", "Q8", "C2xC2", "M16", "A4"}) {
    CAPTURE(spec);
    VerifyReport r = verify_group(parse_group_spec(spec));
    for (const CheckResult& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
    CHECK(r.checks.size() == 10);
  }
}

TEST_CASE("verify reports the M16 facts") {
  VerifyReport r = verify_group(parse_group_spec("M16"));
  CHECK(r.phi_hat == 0);
  CHECK(r.faithful_irrep);
  CHECK(r.all_pass());
}

TEST_CASE("scan kinds parse") {
  CHECK(scan_kind_from_name("verify") == ScanKind::verify);
  CHECK(scan_kind_from_name("remark_conv") == ScanKind::remark_conv);
  CHECK(scan_kind_from_name("all") == ScanKind::all);
  CHECK_FALSE(scan_kind_from_name("bogus").has_value());
  CHECK(scan_kind_name(ScanKind::boolean_phi) == "boolean_phi");
}

TEST_CASE("eulerian_boolean scan finds no catalog violation") {
  std::vector<std::string> specs{"C6", "C30", "C4", "S3", "Q8", "M16"};
  for (const ScanRecord& rec :
       conjecture_scan(specs, ScanKind::eulerian_boolean))
    CHECK(rec.status == "pass");
}

TEST_CASE("boolean_phi scan on S4 finds no Boolean interval with phi = 0") {
  std::vector<std::string> specs{"S4"};
  auto records = conjecture_scan(specs, ScanKind::boolean_phi);
  CHECK(!records.empty());
  for (const ScanRecord& rec : records) {
    CAPTURE(rec.detail);
    CHECK(rec.status == "pass");
  }
}

TEST_CASE("brown_chi scan: nonzero chi for solvable groups") {
  std::vector<std::string> specs{"C6", "S3", "S4", "A4", "Q8", "M16", "C2xC2"};
  auto records = conjecture_scan(specs, ScanKind::brown_chi);
  REQUIRE(records.size() == specs.size());
  for (const ScanRecord& rec : records) {
    CHECK(rec.status == "pass");
    CHECK(rec.values.chi != 0);
  }
  // A5 is not solvable: reported, not asserted.
  auto a5 = conjecture_scan({"A5"}, ScanKind::brown_chi);
  REQUIRE(a5.size() == 1);
  CHECK(a5[0].status == "report");
}

TEST_CASE("remark_conv scan on small groups finds no counterexample") {
  std::vector<std::string> specs{"S3", "C6", "Q8", "C2xC2"};
  for (const ScanRecord& rec : conjecture_scan(specs, ScanKind::remark_conv))
    CHECK(rec.status == "pass");
}

TEST_CASE("M16 is not an own-bottom-interval counterexample") {
  // M16 has a faithful irrep and phi_hat = 0, but its lattice is not its own
  // bottom interval (the atom join is the order-4 Klein subgroup).
  auto records = conjecture_scan({"M16"}, ScanKind::remark_conv);
  REQUIRE(records.size() == 1);
  CHECK(records[0].status == "pass");
  CHECK(records[0].detail.find("own bottom interval: no") != std::string::npos);
  CHECK(records[0].detail.find("faithful irrep: yes") != std::string::npos);
}

TEST_CASE("scan errors are recorded, not thrown") {
  auto records = conjecture_scan({"S3", "NOT_A_GROUP"}, ScanKind::verify);
  REQUIRE(records.size() == 2);
  CHECK(records[0].status == "pass");
  CHECK(records[1].status == "error");
  CHECK(records[1].group == "NOT_A_GROUP");
}

TEST_CASE("parallel scan preserves input order") {
  std::vector<std::string> specs{"C2", "C3", "C4", "C5", "C6", "C7"};
  ScanOptions opt;
  opt.jobs = 4;
  auto records = conjecture_scan(specs, ScanKind::eulerian_boolean, opt);
  REQUIRE(records.size() == specs.size());
  for (size_t i = 0; i < specs.size(); ++i) CHECK(records[i].group == specs[i]);
}

TEST_CASE("scan record serialization") {
  auto records = conjecture_scan({"S3"}, ScanKind::verify);
  std::string jsonl = scan_records_to_jsonl(records);
  // Every line parses back and carries the documented keys.
  std::istringstream lines(jsonl);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    ++count;
    nlohmann::json j = nlohmann::json::parse(line);
    for (const char* key :
         {"group", "order", "check", "phi", "phi_hat", "chi", "lattice",
          "status", "detail"})
      CHECK(j.contains(key));
    CHECK(j["lattice"].contains("boolean"));
  }
  CHECK(count == static_cast<int>(records.size()));

  std::string table = scan_records_to_table(records);
  CHECK(table.find("S3") != std::string::npos);
  CHECK(table.find("status") != std::string::npos);
}

TEST_CASE("catalog spec list") {
  std::vector<std::string> specs = catalog_group_specs();
  CHECK(specs.size() == 58);  // C1..C48 plus ten named groups
  CHECK(std::find(specs.begin(), specs.end(), "M16") != specs.end());
  CHECK(std::find(specs.begin(), specs.end(), "C48") != specs.end());
}
