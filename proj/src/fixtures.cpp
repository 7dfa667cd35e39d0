#include "hgw/fixtures.hpp"

#include "hgw/io.hpp"
#include "hgw/zoo.hpp"

namespace hgw {

namespace {

io::Json facts_json(const zoo::ZooEntry& e) {
  io::Json j = io::Json::object();
  j["name"] = e.name;
  j["dim"] = e.facts.dim;
  j["commutative"] = e.facts.commutative;
  j["cocommutative"] = e.facts.cocommutative;
  j["antipode_order"] = e.facts.antipode_order;
  auto count = [](long v) { return v < 0 ? io::Json(nullptr) : io::Json(v); };
  j["generalized_ideals"] = count(e.facts.generalized_ideals);
  j["coideal_subalgebras"] = count(e.facts.coideal_subalgebras);
  j["lattice_counts"] = e.facts.generalized_ideals < 0 ? "not derived" : "derived by exhaustive enumeration";
  return j;
}

}  // namespace

std::vector<FixtureFile> fixture_files() {
  std::vector<FixtureFile> out;
  auto entries = zoo::hopf_zoo();
  io::Json facts = io::Json::object();
  facts["format_version"] = io::kFormatVersion;
  facts["entries"] = io::Json::array();
  for (const auto& e : entries) {
    out.push_back({"hopf/" + e.name + ".json", io::serialize(e.hopf, e.name)});
    facts["entries"].push_back(facts_json(e));
  }
  out.push_back({"zoo-facts.json", io::dump(facts)});

  for (const char* name : {"kC2-GF3", "H4-GF3"}) {
    const auto& h = zoo::find(entries, name).hopf;
    out.push_back({"comodule/regular-" + std::string(name) + ".json",
                   io::serialize(regular_comodule_algebra(h), "regular-" + std::string(name))});
    out.push_back({"module/regular-" + std::string(name) + ".json",
                   io::serialize(regular_module_coalgebra(h), "regular-" + std::string(name))});
    out.push_back({"module/trivial-" + std::string(name) + ".json",
                   io::serialize(trivial_module_coalgebra(h), "trivial-" + std::string(name))});
  }
  for (const auto& ext : zoo::standard_extensions()) {
    if (!ext.crossed) continue;
    out.push_back({"crossed/" + ext.name + ".json", io::serialize(*ext.crossed, ext.name)});
    out.push_back({"comodule/" + ext.name + ".json", io::serialize(ext.algebra, ext.name)});
  }
  return out;
}

}  // namespace hgw
