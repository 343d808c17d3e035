#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "crosscap/cli.hpp"
#include "crosscap/verification.hpp"

using namespace crosscap;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("crosscap_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("verify passes with the standard catalog") {
  auto r = run_cli({"verify"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("PASS  (c)(2) alpha^3 coefficient = 5/32") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  auto low = run_cli({"verify", "--order", "4"});
  CHECK(low.code == cli::kOk);
  CHECK(low.out.find("(d+)(3)+ alpha^4 coefficient = 1/256*(-215*a^3+534*a^2-96*a-224)") != std::string::npos);
}

TEST_CASE("verify output is stable") {
  auto first = run_cli({"verify"});
  auto second = run_cli({"verify"});
  CHECK(first.out == second.out);
  auto lines = lines_of(first.out);
  REQUIRE(lines.size() > 50);
  CHECK(lines.back().find("rows passed") != std::string::npos);
}

TEST_CASE("a corrupted catalog fails verification with both values") {
  GermCatalog catalog = GermCatalog::standard();
  AXFamily fam = catalog.family(FamilyName::c);
  // flip the sign of the beta term of the second component
  fam.unfolding[1] = fam.unfolding[1] - 2 * kBeta * kW;
  catalog.set_family(fam);
  std::ostringstream out;
  CHECK(cli::verify(catalog, kDefaultOrder, out) == cli::kVerificationFailed);
  auto text = out.str();
  auto pos = text.find("FAIL  (c)(2) alpha^2 coefficient: expected 3/8, computed ");
  CHECK(pos != std::string::npos);

  // the other families are untouched
  auto rows = run_verification(catalog, kDefaultOrder);
  for (const auto& row : rows) {
    if (row.id.rfind("(d", 0) == 0) CHECK(row.pass);
  }
}

TEST_CASE("invalid configurations") {
  auto c0 = run_cli({"curves", "--family", "c", "--modulus", "0"});
  CHECK(c0.code == cli::kInvalidConfig);
  CHECK(c0.err.find("a != 0") != std::string::npos);
  for (const char* f : {"d+", "d-"}) {
    for (const char* a : {"2", "-2"}) {
      auto r = run_cli({"diagram", "--family", f, "--modulus", a});
      CHECK(r.code == cli::kInvalidConfig);
      CHECK(r.err.find("a^2 - 4 != 0") != std::string::npos);
    }
  }
  CHECK(run_cli({"curves", "--family", "e"}).code == cli::kInvalidConfig);
  CHECK(run_cli({"curves", "--order", "3"}).code == cli::kInvalidConfig);
  CHECK(run_cli({"verify", "--order", "2"}).code == cli::kInvalidConfig);
  CHECK(run_cli({"curves", "--modulus", "one"}).code == cli::kInvalidConfig);
  CHECK(run_cli({"bogus"}).code == cli::kInvalidConfig);
  CHECK(run_cli({}).code == cli::kInvalidConfig);
  CHECK(run_cli({"panels", "--grid", "2"}).code == cli::kInvalidConfig);
  CHECK(run_cli({"classify", "--point", "0.1"}).code == cli::kInvalidConfig);
}

TEST_CASE("record counts") {
  auto count = [](const char* family, const char* a) {
    auto r = run_cli({"curves", "--family", family, "--modulus", a, "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    return nlohmann::json::parse(r.out).at("curves").size();
  };
  CHECK(count("c", "1") == 7);
  CHECK(count("d+", "3") == 8);
  CHECK(count("d-", "1") == 2);
}

TEST_CASE("curve records") {
  auto r = run_cli({"curves", "--family", "c", "--modulus", "1", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  const auto& c5 = j.at("curves").at(4);
  CHECK(c5.at("id") == "c(5)");
  CHECK(c5.at("constraint") == "beta < 0");
  CHECK(c5.contains("exact_relation"));
  const auto& c2 = j.at("curves").at(1);
  CHECK(c2.at("series").at("main_var") == "alpha");
  CHECK(c2.at("series").at("coefficients").at(3) == "5/32");
  CHECK(c2.at("name") == "swallowtail");
}

TEST_CASE("files are written") {
  auto dir = scratch_dir("files");
  auto r = run_cli({"curves", "--family", "d+", "--modulus", "3", "--out", dir.string()});
  CHECK(r.code == cli::kOk);
  CHECK(fs::exists(dir / "curves.json"));
  CHECK(fs::exists(dir / "curves.csv"));
  std::ifstream csv(dir / "curves.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "curve_id,role,x,y");

  auto svg = dir / "diagram.svg";
  CHECK(run_cli({"diagram", "--family", "c", "--modulus", "-1", "--out", svg.string()}).code == cli::kOk);
  std::ifstream in(svg);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str().find("<svg") != std::string::npos);

  auto panels = dir / "panels.svg";
  CHECK(run_cli({"panels", "--family", "b", "--grid", "64", "--out", panels.string()}).code == cli::kOk);
  std::ifstream pin(panels);
  std::stringstream pbody;
  pbody << pin.rdbuf();
  std::string sheet = pbody.str();
  std::size_t nested = 0;
  for (std::size_t pos = sheet.find("<svg x="); pos != std::string::npos; pos = sheet.find("<svg x=", pos + 1)) ++nested;
  CHECK(nested == 3);
  fs::remove_all(dir);
}

TEST_CASE("unwritable output is an I/O error") {
  auto r = run_cli({"diagram", "--family", "c", "--out", "/nonexistent-dir/x/diagram.svg"});
  CHECK(r.code == cli::kIoError);
}

TEST_CASE("pointwise classification") {
  auto bc = run_cli({"classify", "--family", "c", "--modulus", "1", "--alpha", "-5", "--beta", "-2", "--point", "0,1"});
  CHECK(bc.code == cli::kOk);
  CHECK(bc.out == "boundary-cusp\n");
  auto fold = run_cli({"classify", "--family", "a", "--point", "0.3,0", "--format", "json"});
  CHECK(fold.code == cli::kOk);
  CHECK(nlohmann::json::parse(fold.out).at("class") == "fold");

  auto scan = run_cli({"classify", "--family", "c", "--alpha", "0", "--beta", "0", "--grid", "128"});
  CHECK(scan.code == cli::kOk);
  CHECK(scan.out.find("crosscap point") != std::string::npos);
}
