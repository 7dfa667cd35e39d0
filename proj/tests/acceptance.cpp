// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "hgw/crossed_product.hpp"
#include "hgw/fixtures.hpp"
#include "hgw/galois_engine.hpp"
#include "hgw/io.hpp"
#include "hgw/module_coalgebra.hpp"
#include "hgw/zoo.hpp"

using namespace hgw;
namespace fs = std::filesystem;

namespace {

struct Result {
  bool passed = true;
  std::string note;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

struct Criterion {
  const char* id;
  double budget_seconds;
  std::function<Result()> run;
};

bool bijective(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::vector<zoo::ZooEntry> zoo_entries() { return zoo::hopf_zoo(); }

const HopfAlgebraStructure& entry(const std::vector<zoo::ZooEntry>& z, const char* name) { return zoo::find(z, name).hopf; }

const char* const kConnectionCases[] = {"kC2-GF3", "kC2-GF2", "H4-GF3"};

Result ac1() {
  Result r;
  const char* required[] = {"kC2-GF2", "kC2-GF3", "kC2-GF5", "kC4-GF5", "kS3-GF2", "dual-kC2-GF2", "dual-kC2-GF3",
                            "dual-kC4-GF5", "dual-kS3-GF2", "H4-GF3", "H4-Q", "taft3-GF13", "taft4-GF5"};
  auto z = zoo_entries();
  for (const char* name : required) {
    const auto& e = zoo::find(z, name);
    auto v = validate_hopf(e.hopf);
    r.require(v.passed(), std::string(name) + ": " + v.summary());
    r.require(e.hopf.dim() == e.facts.dim, std::string(name) + ": dimension");
    r.require(zoo::is_commutative(e.hopf.algebra) == e.facts.commutative, std::string(name) + ": commutativity");
    r.require(zoo::is_cocommutative(e.hopf.coalgebra) == e.facts.cocommutative, std::string(name) + ": cocommutativity");
    r.require(antipode_order(e.hopf) == e.facts.antipode_order, std::string(name) + ": antipode order");
  }
  r.note = std::to_string(std::size(required)) + " Hopf algebras validated";
  return r;
}

Result ac2() {
  Result r;
  auto z = zoo_entries();
  std::size_t quotients = 0, subalgebras = 0;
  for (const char* name : kConnectionCases) {
    auto conn = comodule_connection(regular_comodule_algebra(entry(z, name)));
    for (const auto& v : conn.connection.law_violations) r.require(false, std::string(name) + ": " + v.law);
    r.require(conn.connection.bijection_on_closed, std::string(name) + ": closed sets not in bijection");
    r.require(conn.triple_composition, std::string(name) + ": triple composition");
    quotients += conn.ideals.size();
    subalgebras += conn.subalgebras.size();
  }
  r.note = std::to_string(quotients) + " quotients against " + std::to_string(subalgebras) + " intermediate subalgebras";
  return r;
}

Result ac3() {
  Result r;
  auto z = zoo_entries();
  std::size_t checked = 0;
  for (const char* name : kConnectionCases) {
    const auto& h = entry(z, name);
    auto a = regular_comodule_algebra(h);
    auto ideals = enumerate_generalized_ideals(h);
    for (const auto& i : ideals) {
      auto q = generalized_quotient(h, i);
      auto s = phi(a, q);
      r.require(psi(a, s, PsiStrategy::Formula) == q, std::string(name) + ": psi phi != id (formula)");
      r.require(psi_over(a, s, ideals) == q, std::string(name) + ": psi phi != id (enumeration)");
      ++checked;
    }
    for (const auto& k : enumerate_left_coideal_subalgebras(h)) {
      r.require(phi(a, psi(a, k.space, PsiStrategy::Formula)) == k.space, std::string(name) + ": phi psi != id");
      r.require(phi(a, psi_over(a, k.space, ideals)) == k.space, std::string(name) + ": phi psi != id (enumeration)");
      ++checked;
    }
  }
  r.note = std::to_string(checked) + " elements mapped back to themselves";
  return r;
}

Result ac4() {
  Result r;
  auto z = zoo_entries();
  std::size_t checked = 0;
  for (const char* name : kConnectionCases) {
    const auto& h = entry(z, name);
    auto a = regular_comodule_algebra(h);
    auto c = regular_module_coalgebra(h);
    for (const auto& i : enumerate_generalized_ideals(h)) {
      auto q = generalized_quotient(h, i);
      r.require(is_closed_quotient(a, q, PsiStrategy::Enumerate) == is_galois(a, q),
                std::string(name) + ": closed(Q) differs from full rank of can_Q");
      Matrix m = cocan(h, q), inv = cocan_inverse(h, q);
      r.require(inv * m == Matrix::identity(h.field(), m.cols()) && m * inv == Matrix::identity(h.field(), m.rows()),
                std::string(name) + ": cocan inverse formula");
      ++checked;
    }
    // closedness of every unital left coideal against its coextension
    auto conn = coext_connection(c);
    for (std::size_t k = 0; k < conn.coideals.size(); ++k) {
      bool closed = conn.report.backward[conn.report.forward[k]] == k;
      r.require(closed == is_coext_galois(c, conn.coideals[k]),
                std::string(name) + ": closed(K) differs from full rank of can_K coextension");
      ++checked;
    }
    for (const auto& k : enumerate_left_coideal_subalgebras(h)) {
      auto q = generalized_quotient(h, ideal_from_subalgebra(h, k.space));
      Matrix m = can_general(a, k.space, q), inv = can_k_inverse(h, k.space);
      r.require(inv * m == Matrix::identity(h.field(), m.cols()) && m * inv == Matrix::identity(h.field(), m.rows()),
                std::string(name) + ": canK inverse formula");
      r.require(is_closed_subalgebra(a, k.space, PsiStrategy::Formula) == is_coext_galois(c, k.space),
                std::string(name) + ": closed subalgebra differs from Galois coextension");
      ++checked;
    }
  }
  r.note = std::to_string(checked) + " closedness checks";
  return r;
}

Result ac5() {
  Result r;
  auto h = zoo::sweedler(FieldSpec::prime(3));
  auto a = regular_comodule_algebra(h);
  std::vector<GeneralizedQuotient> galois;
  for (const auto& i : enumerate_generalized_ideals(h)) {
    auto q = generalized_quotient(h, i);
    if (is_galois(a, q)) galois.push_back(q);
  }
  std::size_t pairs = 0;
  for (const auto& q1 : galois)
    for (const auto& q2 : galois) {
      if (phi(a, q1) == phi(a, q2)) r.require(q1 == q2, "two Galois quotients with the same coinvariants");
      ++pairs;
    }
  auto c = regular_module_coalgebra(h);
  std::vector<Subspace> coext;
  for (const auto& k : enumerate_unital_left_coideals(h))
    if (is_coext_galois(c, k)) coext.push_back(k);
  for (const auto& k1 : coext)
    for (const auto& k2 : coext) {
      if (invariant_quotient(c, k1).quotient.kernel == invariant_quotient(c, k2).quotient.kernel)
        r.require(k1 == k2, "two Galois coextensions with the same invariant coalgebra");
      ++pairs;
    }
  r.require(galois.size() > 1 && coext.size() > 1, "too few Galois objects for a meaningful check");
  r.note = std::to_string(galois.size()) + " Galois quotients, " + std::to_string(coext.size()) +
           " Galois coextensions, " + std::to_string(pairs) + " pairs";
  return r;
}

Result ac6() {
  Result r;
  auto h = zoo::sweedler(FieldSpec::prime(3));
  auto a = regular_comodule_algebra(h);
  r.require(is_galois(a, identity_quotient(h)), "H4 is not H-Galois over k");
  r.require(coinvariants(a) == Subspace::span(h.field(), 4, {h.unit()}), "coinvariants differ from k");
  auto ideals = enumerate_generalized_ideals(h);
  for (const auto& i : ideals) {
    auto q = generalized_quotient(h, i);
    r.require(is_closed_quotient(a, q, PsiStrategy::Enumerate), "quotient not closed");
    r.require(is_closed_quotient(a, q, PsiStrategy::Formula), "quotient not closed (formula)");
  }
  r.note = std::to_string(ideals.size()) + " quotients, all closed";
  return r;
}

Result ac7() {
  Result r;
  auto h = zoo::sweedler(FieldSpec::prime(3));
  auto hop = opposite(h);
  auto a = regular_comodule_algebra(h);
  auto ideals = enumerate_generalized_ideals(h);
  for (const auto& i : ideals) r.require(opposite_consistency(a, generalized_quotient(h, i)), "phi^op(Q^op) != phi(Q)^op");
  auto subs = enumerate_intermediate_subalgebras(a);
  for (const auto& s : subs) r.require(opposite_consistency_psi(a, s), "psi^op(S^op) != psi(S)^op");
  std::size_t pairs = 0;
  for (const auto& i : ideals)
    for (const auto& j : ideals) {
      std::vector<GeneralizedIdeal> both{i, j}, both_op{opposite_ideal(h, i), opposite_ideal(h, j)};
      r.require(opposite_ideal(h, meet_generalized_ideals(h, both)) == meet_generalized_ideals(hop, both_op),
                "meet does not commute with op");
      ++pairs;
    }
  r.note = std::to_string(ideals.size()) + " quotients, " + std::to_string(subs.size()) + " subalgebras, " +
           std::to_string(pairs) + " meet pairs";
  return r;
}

Result ac8() {
  Result r;
  auto z = zoo_entries();
  std::size_t checked = 0;
  for (const char* name : {"kC2-GF3", "H4-GF3"}) {
    const auto& h = entry(z, name);
    for (const auto& k : enumerate_left_coideal_subalgebras(h)) {
      auto d = duality_check(h, k.space);
      r.require(d.coinvariants_match, std::string(name) + ": dual coinvariants");
      r.require(d.relations_match, std::string(name) + ": balancing relations");
      r.require(d.matrices_match, std::string(name) + ": can_{K*} != (can_K)*");
      r.require(d.dual_bijective, std::string(name) + ": can_{K*} not bijective");
      ++checked;
    }
  }
  r.note = std::to_string(checked) + " coideal subalgebras";
  return r;
}

Result ac9() {
  Result r;
  std::size_t quotients = 0, subs = 0;
  for (auto cp : {zoo::swap_crossed_product(), zoo::trivial_over_sweedler()}) {
    const auto& h = cp.action.hopf;
    r.require(validate_algebra(cp.algebra.algebra).passed(), "built product is not associative and unital");
    r.require(validate_comodule_algebra(cp.algebra).passed(), "built product is not a comodule algebra");
    r.require(coinvariants(cp.algebra) == cp.base(), "coinvariants differ from B # 1");
    for (const auto& i : enumerate_generalized_ideals(h)) {
      auto c = crossed_closedness(cp, generalized_quotient(h, i));
      r.require(c.closed == c.galois, "closed(Q) differs from Q-Galois");
      ++quotients;
    }
    for (const auto& s : enumerate_intermediate_subalgebras(cp.algebra)) {
      auto q = psi(cp, s, PsiStrategy::Crossed);
      r.require(q == psi(cp, s, PsiStrategy::Enumerate), "psi strategies disagree");
      bool closed = phi(cp.algebra, q) == s;
      r.require(closed == bijective(can_s_cotensor(cp.algebra, s, q)), "closed(S) differs from bijective can_S");
      ++subs;
    }
    auto cm = cleaving_map(cp);
    r.require(convolve(cm.gamma, cm.inverse, h.coalgebra, cp.algebra.algebra) == convolution_unit(h.coalgebra, cp.algebra.algebra) &&
                  convolve(cm.inverse, cm.gamma, h.coalgebra, cp.algebra.algebra) == convolution_unit(h.coalgebra, cp.algebra.algebra),
              "cleaving map not convolution invertible");
  }
  r.note = std::to_string(quotients) + " quotients, " + std::to_string(subs) + " subalgebras";
  return r;
}

template <class Gen>
Vector random_vector(const FieldSpec& f, std::size_t n, Gen& rng) {
  Vector v;
  if (f.is_finite()) {
    std::uniform_int_distribution<std::uint64_t> d(0, f.characteristic() - 1);
    for (std::size_t i = 0; i < n; ++i) v.push_back(f.element(d(rng)));
  } else {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    for (std::size_t i = 0; i < n; ++i) v.push_back(f.from_int(num(rng)) / f.from_int(den(rng)));
  }
  return v;
}

template <class Gen>
Subspace random_subspace(const FieldSpec& f, std::size_t n, std::size_t gens, Gen& rng) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < gens; ++i) vs.push_back(random_vector(f, n, rng));
  return Subspace::span(f, n, vs);
}

Result ac10() {
  Result r;
  std::mt19937_64 rng(20260101);
  std::size_t families = 0, nontrivial = 0;
  for (const auto& f : {FieldSpec::prime(3), FieldSpec::rationals()}) {
    for (int t = 0; t < 1000; ++t) {
      std::uniform_int_distribution<std::size_t> dim(1, 5), members(1, 4), wdim(1, 4);
      std::size_t n = dim(rng), m = wdim(rng);
      // a shared core keeps many intersections nonzero
      Subspace core = random_subspace(f, n, std::uniform_int_distribution<std::size_t>(0, n)(rng), rng);
      std::vector<Subspace> family;
      std::size_t count = members(rng);
      for (std::size_t a = 0; a < count; ++a) {
        std::size_t extra = std::uniform_int_distribution<std::size_t>(0, n)(rng);
        family.push_back(sum(core, random_subspace(f, n, extra, rng)));
      }
      Subspace w = random_subspace(f, m, std::uniform_int_distribution<std::size_t>(0, m)(rng), rng);
      Subspace meet = intersect(family);
      std::vector<Subspace> tensored;
      for (const auto& v : family) tensored.push_back(subspace_tensor(v, w));
      Subspace lhs = subspace_tensor(meet, w), rhs = intersect(tensored);
      r.require(lhs == rhs, "intersection does not commute with (x) W over " + f.name());
      if (!lhs.is_zero()) ++nontrivial;
      ++families;
    }
  }
  r.note = std::to_string(families) + " families, " + std::to_string(nontrivial) + " with nonzero intersection";
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Result ac11() {
  Result r;
  fs::path dir = fs::temp_directory_path() / "hgw_acceptance";
  fs::create_directories(dir);
  std::string h4 = (fs::path(HGW_FIXTURE_DIR) / "hopf/H4-GF3.json").string();
  std::ostringstream out, err;
  for (const char* name : {"first.json", "second.json"})
    r.require(cli::run({"galois", h4, "--report", (dir / name).string()}, out, err) == cli::kPass, "galois run failed");
  std::string first = slurp(dir / "first.json");
  r.require(!first.empty() && first == slurp(dir / "second.json"), "galois reports differ between runs");

  std::size_t files = 0;
  for (const auto& f : fixture_files()) {
    fs::path p = fs::path(HGW_FIXTURE_DIR) / f.path;
    std::string text = slurp(p);
    r.require(text == f.content, f.path + " differs from its regenerated form");
    if (f.path != "zoo-facts.json") r.require(io::serialize(io::read_document(p)) == text, f.path + " does not round-trip");
    ++files;
  }
  r.note = "report " + std::to_string(first.size()) + " bytes, " + std::to_string(files) + " fixtures";
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", 5, ac1},  {"AC2", 30, ac2},  {"AC3", 60, ac3},   {"AC4", 60, ac4},
      {"AC5", 60, ac5}, {"AC6", 60, ac6},  {"AC7", 60, ac7},   {"AC8", 60, ac8},
      {"AC9", 120, ac9}, {"AC10", 30, ac10}, {"AC11", 60, ac11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.require(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char budget[64];
    std::snprintf(budget, sizeof budget, "over budget (%.3fs > %.0fs)", seconds, c.budget_seconds);
    r.require(seconds <= c.budget_seconds, budget);
    std::printf("%s %s %.3fs %s\n", c.id, r.passed ? "PASS" : "FAIL", seconds, r.note.c_str());
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) std::printf("  %s\n", r.failures[i].c_str());
    if (!r.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
