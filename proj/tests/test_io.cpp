#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hgw/errors.hpp"
#include "hgw/fixtures.hpp"
#include "hgw/io.hpp"
#include "hgw/zoo.hpp"

using namespace hgw;
namespace fs = std::filesystem;

namespace {

const fs::path fixture_dir = HGW_FIXTURE_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

io::Json h4_json() { return io::Json::parse(io::serialize(zoo::sweedler(FieldSpec::prime(3)))); }

void check_rejected(const io::Json& j) { CHECK_THROWS_AS(io::parse_document(j.dump()), ParseError); }

}  // namespace

TEST_CASE("shipped fixtures equal the builders byte for byte") {
  auto files = fixture_files();
  CHECK(files.size() > 20);
  for (const auto& f : files) {
    CAPTURE(f.path);
    auto p = fixture_dir / f.path;
    REQUIRE(fs::exists(p));
    CHECK(slurp(p) == f.content);
  }
}

TEST_CASE("documents round-trip") {
  for (const auto& f : fixture_files()) {
    if (f.path == "zoo-facts.json") continue;
    CAPTURE(f.path);
    auto d = io::parse_document(f.content);
    CHECK(io::serialize(d) == f.content);
  }
  auto zoo = zoo::hopf_zoo();
  for (const auto& e : zoo) {
    auto d = io::parse_document(io::serialize(e.hopf));
    CHECK(std::get<HopfAlgebraStructure>(d.value) == e.hopf);
    CHECK(std::get<HopfAlgebraStructure>(d.value).basis_names == e.hopf.basis_names);
  }
  auto tw = zoo::twisted_group_algebra();
  auto d = io::parse_document(io::serialize(tw));
  const auto& data = std::get<io::CrossedProductData>(d.value);
  CHECK(data.sigma == tw.cocycle.sigma);
  CHECK(data.action.action == tw.action.action);
  CHECK(build_crossed_product(data.action, make_cocycle(data.action, data.sigma)).algebra.algebra.mul ==
        tw.algebra.algebra.mul);
}

TEST_CASE("rational scalars are canonical strings") {
  auto q = FieldSpec::rationals();
  auto h = zoo::sweedler(q);
  auto text = io::serialize(h);
  CHECK(text.find("\"-1\"") != std::string::npos);
  auto j = io::Json::parse(text);
  j["antipode"][0]["coeff"] = "2/2";
  auto d = io::parse_document(j.dump());
  CHECK(std::get<HopfAlgebraStructure>(d.value) == h);
  CHECK(io::serialize(d) == text);
}

TEST_CASE("strict parsing") {
  auto base = h4_json();
  CHECK_NOTHROW(io::parse_document(base.dump()));

  auto j = base;
  j["extra"] = 1;
  check_rejected(j);

  j = base;
  j["mul"][0]["weight"] = 1;
  check_rejected(j);

  j = base;
  j["mul"][0]["coeff"] = "0";
  check_rejected(j);

  j = base;
  j["mul"][0]["coeff"] = "3";  // zero in GF(3)
  check_rejected(j);

  j = base;
  j["mul"][0]["coeff"] = 1;
  check_rejected(j);

  j = base;
  std::swap(j["mul"][0], j["mul"][1]);
  check_rejected(j);

  j = base;
  j["mul"].push_back(j["mul"].back());
  check_rejected(j);

  j = base;
  j["comul"][0]["right"] = 4;
  check_rejected(j);

  j = base;
  j["comul"][0]["right"] = -1;
  check_rejected(j);

  j = base;
  j["basis"].erase(0);
  check_rejected(j);

  j = base;
  j["format_version"] = "2";
  check_rejected(j);

  j = base;
  j["kind"] = "lie_algebra";
  check_rejected(j);

  j = base;
  j.erase("antipode");
  check_rejected(j);

  CHECK_THROWS_AS(io::parse_document("{\"format_version\": \"1\", \"format_version\": \"1\"}"), ParseError);
  CHECK_THROWS_AS(io::parse_document("[1, 2"), ParseError);

  j = base;
  j["field"]["p"] = 4;
  CHECK_THROWS_AS(io::parse_document(j.dump()), UnsupportedField);
}

TEST_CASE("nested documents") {
  auto smash = io::Json::parse(slurp(fixture_dir / "crossed/smash-GF3sq-kC2.json"));
  auto by_path = smash;
  by_path["hopf"] = "hopf/kC2-GF3.json";
  auto d = io::parse_document(by_path.dump(), fixture_dir);
  CHECK(io::serialize(d) == slurp(fixture_dir / "crossed/smash-GF3sq-kC2.json"));

  // B taken from another document
  auto b_path = smash;
  b_path["b_algebra"] = "hopf/kC2-GF3.json";
  auto db = io::parse_document(b_path.dump(), fixture_dir);
  CHECK(std::get<io::CrossedProductData>(db.value).action.b_algebra == zoo::group_algebra(FieldSpec::prime(3), zoo::cyclic_group(2)).algebra);

  auto wrong_field = smash;
  wrong_field["hopf"] = "hopf/kC2-GF5.json";
  CHECK_THROWS_AS(io::parse_document(wrong_field.dump(), fixture_dir), ParseError);

  auto wrong_kind = smash;
  wrong_kind["hopf"] = "comodule/regular-kC2-GF3.json";
  CHECK_THROWS_AS(io::parse_document(wrong_kind.dump(), fixture_dir), ParseError);

  auto missing = smash;
  missing["hopf"] = "hopf/none.json";
  CHECK_THROWS_AS(io::parse_document(missing.dump(), fixture_dir), ParseError);
}

TEST_CASE("layout of dumped json") {
  io::Json j = io::Json::object();
  j["a"] = 1;
  j["flat"] = {{"x", 1}, {"y", "2"}};
  j["rows"] = io::Json::array({io::Json::array({"1", "0"}), io::Json::array()});
  CHECK(io::dump(j) == "{\n  \"a\": 1,\n  \"flat\": {\"x\":1,\"y\":\"2\"},\n  \"rows\": [\n    [\"1\",\"0\"],\n    []\n  ]\n}\n");
}
