#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <thread>

#include "hgw/crossed_product.hpp"
#include "hgw/errors.hpp"
#include "hgw/fixtures.hpp"
#include "hgw/galois_engine.hpp"
#include "hgw/io.hpp"
#include "hgw/module_coalgebra.hpp"
#include "hgw/zoo.hpp"

namespace hgw::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

struct Options {
  std::string format = "text";
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned threads = 0;
};

bool bijective(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::string display_name(const io::Document& d, const std::string& path) {
  return d.name.empty() ? fs::path(path).stem().string() : d.name;
}

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

std::string subspace_text(const Subspace& s) {
  std::string out;
  for (const auto& v : s.basis_vectors()) out += " " + vector_text(v);
  return out.empty() ? " 0" : out;
}

void emit(std::ostream& out, const Options& opt, const Json& j, const std::string& text) {
  if (opt.format == "json")
    out << io::dump(j);
  else
    out << text;
}

// ---- validation of a parsed document

ValidationReport validate_document(const io::Document& d) {
  ValidationReport r = validate_hopf(d.hopf());
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ComoduleAlgebra>) {
          r.merge(validate_comodule_algebra(v));
        } else if constexpr (std::is_same_v<T, ModuleCoalgebra>) {
          r.merge(validate_module_coalgebra(v));
        } else if constexpr (std::is_same_v<T, io::CrossedProductData>) {
          r.merge(validate_algebra(v.action.b_algebra));
          r.merge(validate_measuring(v.action));
          if (!r.passed()) return;
          try {
            Cocycle c = make_cocycle(v.action, v.sigma);
            r.merge(validate_cocycle(v.action, c));
            if (!r.passed()) return;
            r.merge(validate_comodule_algebra(build_crossed_product(v.action, c).algebra));
          } catch (const NotConvolutionInvertible&) {
            r.violations.push_back({"sigma convolution invertible", {}, {}, {}});
          }
        }
      },
      d.value);
  return r;
}

CrossedProduct build(const io::CrossedProductData& d) {
  return build_crossed_product(d.action, make_cocycle(d.action, d.sigma));
}

// ---- verify suites

struct Outcome {
  bool passed = true;
  int code = kPass;
  Json detail = Json::object();
};

struct Job {
  std::string suite;
  std::string target;
  std::function<Outcome()> run;
};

Outcome fail(Json detail) { return {false, kAssertion, std::move(detail)}; }

Outcome require_valid(const ValidationReport& r) {
  if (r.passed()) return {};
  Json j = Json::object();
  j["validation"] = io::to_json(r);
  return fail(std::move(j));
}

Outcome axioms_job(const io::Document& d) { return require_valid(validate_document(d)); }

Outcome takeuchi_job(const HopfAlgebraStructure& h, const zoo::ExpectedFacts* facts, std::uint64_t cap) {
  if (auto v = require_valid(validate_hopf(h)); !v.passed) return v;
  auto r = takeuchi_report(h, cap);
  std::vector<std::string> failures = r.failures;
  if (!r.connection.bijection()) failures.push_back("phi and psi are not inverse bijections");
  if (!r.connection.triple_composition) failures.push_back("phi psi phi != phi or psi phi psi != psi");
  if (facts && facts->generalized_ideals >= 0) {
    if (r.connection.ideals.size() != static_cast<std::size_t>(facts->generalized_ideals))
      failures.push_back("generalized ideal count differs from the recorded fact");
    if (r.connection.subalgebras.size() != static_cast<std::size_t>(facts->coideal_subalgebras))
      failures.push_back("coideal subalgebra count differs from the recorded fact");
  }
  if (failures.empty()) return {};
  Json j = Json::object();
  j["failures"] = failures;
  j["connection"] = io::to_json(r.connection.connection);
  return fail(std::move(j));
}

Outcome closedness_job(const HopfAlgebraStructure& h, std::uint64_t cap) {
  if (auto v = require_valid(validate_hopf(h)); !v.passed) return v;
  auto r = takeuchi_report(h, cap);
  Json bad = Json::array();
  const auto& closed_left = r.connection.connection.closed_left;
  const auto& closed_right = r.connection.connection.closed_right;
  for (std::size_t i = 0; i < r.connection.ideals.size(); ++i) {
    bool closed = std::count(closed_left.begin(), closed_left.end(), i) > 0;
    // H is Galois over k, so every quotient has to be closed
    if (closed != r.quotient_galois[i] || !closed) bad.push_back({{"quotient", i}, {"closed", closed}, {"galois", bool(r.quotient_galois[i])}});
  }
  for (std::size_t k = 0; k < r.connection.subalgebras.size(); ++k) {
    bool closed = std::count(closed_right.begin(), closed_right.end(), k) > 0;
    if (closed != r.coext_galois[k]) bad.push_back({{"subalgebra", k}, {"closed", closed}, {"coext_galois", bool(r.coext_galois[k])}});
  }
  if (!r.explicit_inverses_exact) bad.push_back({{"explicit_inverses_exact", false}});
  if (bad.empty()) return {};
  Json j = Json::object();
  j["counterexamples"] = std::move(bad);
  return fail(std::move(j));
}

Outcome coextension_job(const ModuleCoalgebra& c, std::uint64_t cap) {
  if (auto v = require_valid(validate_module_coalgebra(c)); !v.passed) return v;
  auto conn = coext_connection(c, cap);
  Json bad = Json::array();
  for (const auto& v : conn.report.law_violations) bad.push_back({{"law", v.law}, {"witness", v.witness}});
  if (!conn.report.bijection_on_closed) bad.push_back({{"bijection_on_closed", false}});
  for (const auto& k : enumerate_left_coideal_subalgebras(c.hopf, cap))
    if (!is_coext_galois(c, k.space)) bad.push_back({{"not_coext_galois", io::to_json(k.space)}});
  if (bad.empty()) return {};
  Json j = Json::object();
  j["counterexamples"] = std::move(bad);
  return fail(std::move(j));
}

Outcome crossed_job(const io::CrossedProductData& d, std::uint64_t cap) {
  io::Document doc{{}, d};
  if (auto v = require_valid(validate_document(doc)); !v.passed) return v;
  CrossedProduct cp = build(d);
  Json bad = Json::array();
  if (!(coinvariants(cp.algebra) == cp.base())) bad.push_back({{"coinvariants", io::to_json(coinvariants(cp.algebra))}});
  auto cm = cleaving_map(cp);
  if (!(convolve(cm.gamma, cm.inverse, cp.action.hopf.coalgebra, cp.algebra.algebra) ==
        convolution_unit(cp.action.hopf.coalgebra, cp.algebra.algebra)))
    bad.push_back({{"cleaving_map", "not convolution invertible"}});
  for (const auto& i : enumerate_generalized_ideals(cp.action.hopf, cap)) {
    auto q = generalized_quotient(cp.action.hopf, i);
    auto r = crossed_closedness(cp, q);
    if (r.closed != r.galois || !r.splitting)
      bad.push_back({{"quotient_ideal", io::to_json(i.space)}, {"closed", r.closed}, {"galois", r.galois}, {"splitting", r.splitting}});
  }
  for (const auto& s : enumerate_intermediate_subalgebras(cp.algebra, cap)) {
    auto q = psi(cp, s, PsiStrategy::Crossed, cap);
    bool closed = phi(cp.algebra, q) == s;
    bool can = bijective(can_s_cotensor(cp.algebra, s, q));
    bool alpha = bijective(alpha_map(cp, s));
    if (closed != can || closed != alpha)
      bad.push_back({{"subalgebra", io::to_json(s)}, {"closed", closed}, {"can_bijective", can}, {"alpha_bijective", alpha}});
  }
  if (bad.empty()) return {};
  Json j = Json::object();
  j["counterexamples"] = std::move(bad);
  return fail(std::move(j));
}

Outcome guarded(const std::function<Outcome()>& f) {
  auto error = [](int code, const char* type, const std::exception& e) {
    Json j = Json::object();
    j["error"] = type;
    j["message"] = e.what();
    return Outcome{false, code, std::move(j)};
  };
  try {
    return f();
  } catch (const CapExceeded& e) {
    return error(kCap, "CapExceeded", e);
  } catch (const UnsupportedField& e) {
    return error(kUnsupportedField, "UnsupportedField", e);
  } catch (const Error& e) {
    return error(kAssertion, "Error", e);
  }
}

const std::vector<std::string> kSuites{"axioms", "takeuchi", "closedness", "coextension", "crossed"};

// Hopf algebras whose lattices are small enough for the exhaustive suites.
bool enumerable(const zoo::ZooEntry& e) { return e.facts.generalized_ideals >= 0; }

void add_default_jobs(std::vector<Job>& jobs, const std::string& suite, const Options& opt) {
  auto entries = std::make_shared<std::vector<zoo::ZooEntry>>(zoo::hopf_zoo());
  auto exts = std::make_shared<std::vector<zoo::StandardExtension>>(zoo::standard_extensions());
  std::uint64_t cap = opt.cap;
  if (suite == "axioms") {
    for (const auto& e : *entries)
      jobs.push_back({suite, "hopf " + e.name, [h = e.hopf] { return require_valid(validate_hopf(h)); }});
    for (const auto& x : *exts)
      jobs.push_back({suite, "comodule " + x.name, [a = x.algebra] { return axioms_job(io::Document{{}, a}); }});
    for (const char* name : {"kC2-GF3", "H4-GF3"}) {
      const auto& h = zoo::find(*entries, name).hopf;
      for (auto c : {regular_module_coalgebra(h), trivial_module_coalgebra(h)})
        jobs.push_back({suite, "module " + std::string(name), [c] { return axioms_job(io::Document{{}, c}); }});
    }
  } else if (suite == "takeuchi" || suite == "closedness" || suite == "coextension") {
    for (const auto& e : *entries) {
      if (!enumerable(e)) continue;
      if (suite == "takeuchi")
        jobs.push_back({suite, e.name, [e, cap] { return takeuchi_job(e.hopf, &e.facts, cap); }});
      else if (suite == "closedness")
        jobs.push_back({suite, e.name, [h = e.hopf, cap] { return closedness_job(h, cap); }});
      else
        jobs.push_back({suite, e.name, [h = e.hopf, cap] { return coextension_job(regular_module_coalgebra(h), cap); }});
    }
  } else if (suite == "crossed") {
    for (const auto& x : *exts)
      if (x.crossed)
        jobs.push_back({suite, x.name, [d = io::CrossedProductData{x.crossed->action, x.crossed->cocycle.sigma}, cap] {
                          return crossed_job(d, cap);
                        }});
  }
}

void add_document_jobs(std::vector<Job>& jobs, const std::string& suite, const std::string& label,
                       const std::shared_ptr<const io::Document>& d, std::uint64_t cap) {
  auto kind = d->kind();
  auto add = [&](std::function<Outcome()> f) { jobs.push_back({suite, label, std::move(f)}); };
  if (suite == "axioms") add([d] { return axioms_job(*d); });
  if (kind == io::DocumentKind::Hopf) {
    const auto& h = d->hopf();
    if (suite == "takeuchi") add([h, cap] { return takeuchi_job(h, nullptr, cap); });
    if (suite == "closedness") add([h, cap] { return closedness_job(h, cap); });
    if (suite == "coextension") add([h, cap] { return coextension_job(regular_module_coalgebra(h), cap); });
  } else if (kind == io::DocumentKind::ModuleCoalgebra && suite == "coextension") {
    add([d, cap] { return coextension_job(std::get<ModuleCoalgebra>(d->value), cap); });
  } else if (kind == io::DocumentKind::CrossedProduct && suite == "crossed") {
    add([d, cap] { return crossed_job(std::get<io::CrossedProductData>(d->value), cap); });
  }
}

// Results are stored by job index, so output order never depends on scheduling.
std::vector<Outcome> run_jobs(const std::vector<Job>& jobs, unsigned threads) {
  std::vector<Outcome> results(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, jobs.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) results[i] = guarded(jobs[i].run);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

// ---- commands

int cmd_validate(const std::string& path, const std::string& kind, const Options& opt, std::ostream& out) {
  auto d = io::read_document(path);
  if (!kind.empty() && io::parse_kind(kind) != d.kind())
    throw ParseError("document kind is " + std::string(io::to_string(d.kind())) + ", expected " + kind);
  auto r = validate_document(d);
  Json j = Json::object();
  j["kind"] = io::to_string(d.kind());
  j["name"] = display_name(d, path);
  j["report"] = io::to_json(r);
  emit(out, opt, j, std::string(io::to_string(d.kind())) + " " + display_name(d, path) + ": " + r.summary() + "\n");
  return r.passed() ? kPass : kAssertion;
}

int cmd_enumerate(const std::string& path, const std::string& what, const Options& opt, std::ostream& out) {
  auto d = io::read_document(path);
  const auto& h = d.hopf();
  if (!h.field().is_finite()) throw UnsupportedField("enumeration needs a finite field, got " + h.field().name());
  auto r = validate_hopf(h);
  if (!r.passed()) {
    emit(out, opt, io::to_json(r), "invalid Hopf algebra: " + r.summary() + "\n");
    return kAssertion;
  }
  std::vector<Subspace> spaces;
  if (what == "gen-ideals") {
    for (auto& i : enumerate_generalized_ideals(h, opt.cap)) spaces.push_back(std::move(i.space));
  } else {
    for (auto& k : enumerate_left_coideal_subalgebras(h, opt.cap)) spaces.push_back(std::move(k.space));
  }
  Json j = Json::object();
  j["what"] = what;
  j["name"] = display_name(d, path);
  j["count"] = spaces.size();
  Json entries = Json::array();
  std::string text = what + " of " + display_name(d, path) + ": " + std::to_string(spaces.size()) + "\n";
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    entries.push_back(io::to_json(spaces[i]));
    text += "[" + std::to_string(i) + "] dim " + std::to_string(spaces[i].dim()) + ":" + subspace_text(spaces[i]) + "\n";
  }
  j["entries"] = std::move(entries);
  emit(out, opt, j, text);
  return kPass;
}

int cmd_galois(const std::string& hopf_path, const std::string& comodule_path, const std::string& report_path,
               const Options& opt, std::ostream& out) {
  auto hd = io::read_document(hopf_path);
  if (hd.kind() != io::DocumentKind::Hopf) throw ParseError(hopf_path + " is not a hopf document");
  const auto& h = hd.hopf();
  auto valid = validate_hopf(h);
  Json j = Json::object();
  j["hopf"] = display_name(hd, hopf_path);
  std::string text;
  bool passed = false;
  if (!valid.passed()) {
    j["validation"] = io::to_json(valid);
    text = "invalid Hopf algebra: " + valid.summary() + "\n";
  } else if (comodule_path.empty()) {
    auto r = takeuchi_report(h, opt.cap);
    passed = r.passed() && r.connection.bijection();
    j["mode"] = "takeuchi";
    j["report"] = io::to_json(r);
    text = "quotients " + std::to_string(r.connection.ideals.size()) + ", coideal subalgebras " +
           std::to_string(r.connection.subalgebras.size()) + ", bijection " +
           (r.connection.bijection() ? "yes" : "no") + "\n";
    for (const auto& f : r.failures) text += "failure: " + f + "\n";
  } else {
    auto cd = io::read_document(comodule_path);
    std::optional<ComoduleAlgebra> a;
    if (auto* c = std::get_if<ComoduleAlgebra>(&cd.value)) a = *c;
    else if (auto* x = std::get_if<io::CrossedProductData>(&cd.value)) a = build(*x).algebra;
    else throw ParseError(comodule_path + " is not a comodule_algebra or crossed_product document");
    if (!(a->hopf == h)) throw ValidationFailure("the comodule algebra is over a different Hopf algebra");
    auto ca = validate_comodule_algebra(*a);
    j["comodule"] = display_name(cd, comodule_path);
    if (!ca.passed()) {
      j["validation"] = io::to_json(ca);
      text = "invalid comodule algebra: " + ca.summary() + "\n";
    } else {
      auto r = comodule_connection(*a, opt.cap);
      passed = r.connection.laws_hold() && r.triple_composition;
      j["mode"] = "comodule";
      j["report"] = io::to_json(r);
      text = "quotients " + std::to_string(r.ideals.size()) + ", subalgebras " + std::to_string(r.subalgebras.size()) +
             ", law violations " + std::to_string(r.connection.law_violations.size()) + ", closed " +
             std::to_string(r.connection.closed_left.size()) + "/" + std::to_string(r.connection.closed_right.size()) +
             ", bijection on closed " + (r.connection.bijection_on_closed ? "yes" : "no") + "\n";
    }
  }
  j["passed"] = passed;
  if (!report_path.empty()) {
    std::ofstream f(report_path, std::ios::binary);
    if (!f) throw Error("cannot write " + report_path);
    f << io::dump(j);
  }
  if (report_path.empty() || opt.format == "json")
    emit(out, opt, j, text);
  else
    out << text;
  return passed ? kPass : kAssertion;
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& paths, const Options& opt, std::ostream& out) {
  std::vector<std::string> suites = suite == "all" ? kSuites : std::vector<std::string>{suite};
  std::vector<Job> jobs;
  std::vector<std::pair<std::string, std::shared_ptr<const io::Document>>> docs;
  for (const auto& p : paths) {
    auto d = std::make_shared<const io::Document>(io::read_document(p));
    docs.emplace_back(display_name(*d, p), d);
  }
  for (const auto& s : suites) {
    if (docs.empty()) add_default_jobs(jobs, s, opt);
    for (const auto& [label, d] : docs) add_document_jobs(jobs, s, label, d, opt.cap);
  }
  if (jobs.empty()) throw ParseError("no checks apply to the given inputs for suite " + suite);
  auto results = run_jobs(jobs, opt.threads);

  int code = kPass;
  std::size_t passed = 0;
  Json list = Json::array();
  Json first = nullptr;
  std::string text;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& r = results[i];
    Json e = Json::object();
    e["suite"] = jobs[i].suite;
    e["target"] = jobs[i].target;
    e["passed"] = r.passed;
    if (!r.passed) e["detail"] = r.detail;
    list.push_back(e);
    text += std::string(r.passed ? "PASS " : "FAIL ") + jobs[i].suite + " " + jobs[i].target + "\n";
    if (r.passed) {
      ++passed;
    } else if (code == kPass) {
      code = r.code;
      first = e;
    }
  }
  text += std::to_string(passed) + "/" + std::to_string(jobs.size()) + " checks passed\n";
  if (!first.is_null()) text += "first counterexample:\n" + io::dump(first);
  Json j = Json::object();
  j["suite"] = suite;
  j["results"] = std::move(list);
  j["passed"] = code == kPass;
  j["first_counterexample"] = first;
  emit(out, opt, j, text);
  return code;
}

int cmd_zoo(const std::string& dir, const Options& opt, std::ostream& out) {
  Json written = Json::array();
  std::string text;
  for (const auto& f : fixture_files()) {
    fs::path p = fs::path(dir) / f.path;
    fs::create_directories(p.parent_path());
    std::ofstream o(p, std::ios::binary);
    if (!o) throw Error("cannot write " + p.string());
    o << f.content;
    written.push_back(f.path);
    text += "wrote " + p.string() + "\n";
  }
  Json j = Json::object();
  j["written"] = std::move(written);
  emit(out, opt, j, text);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf-Galois workbench: exact checks of Galois correspondences for finite-dimensional Hopf algebras",
               "hgw"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", opt.cap, "Largest number of subspaces an enumeration may visit");
  app.add_option("--threads", opt.threads, "Worker threads for verify (0 = all cores)");

  std::string path, kind, what, comodule, report, suite = "all", out_dir;
  std::vector<std::string> paths;

  auto* validate = app.add_subcommand("validate", "Parse a document and run its validator");
  validate->add_option("path", path, "Document")->required();
  validate->add_option("--kind", kind, "Expected document kind")
      ->check(CLI::IsMember({"hopf", "comodule_algebra", "module_coalgebra", "crossed_product"}));

  auto* enumerate = app.add_subcommand("enumerate", "List generalized ideals or left coideal subalgebras");
  enumerate->add_option("path", path, "Document; its Hopf algebra is enumerated")->required();
  enumerate->add_option("--what", what, "Lattice to list")
      ->required()
      ->check(CLI::IsMember({"gen-ideals", "coideal-subalgebras"}));

  auto* galois = app.add_subcommand("galois", "Galois connection report");
  galois->add_option("hopf", path, "Hopf algebra document")->required();
  galois->add_option("--comodule", comodule, "Comodule algebra or crossed product over the same Hopf algebra");
  galois->add_option("--report", report, "Write the JSON report here");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite")
      ->check(CLI::IsMember({"axioms", "takeuchi", "closedness", "coextension", "crossed", "all"}));
  verify->add_option("paths", paths, "Documents; the built-in zoo when omitted");

  auto* zoo_cmd = app.add_subcommand("zoo", "Write the fixture files");
  zoo_cmd->add_option("--out", out_dir, "Output directory")->required();

  std::vector<const char*> argv{"hgw"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, kind, opt, out);
    if (enumerate->parsed()) return cmd_enumerate(path, what, opt, out);
    if (galois->parsed()) return cmd_galois(path, comodule, report, opt, out);
    if (verify->parsed()) return cmd_verify(suite, paths, opt, out);
    if (zoo_cmd->parsed()) return cmd_zoo(out_dir, opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const UnsupportedField& e) {
    err << "unsupported field: " << e.what() << "\n";
    return kUnsupportedField;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kAssertion;
  }
  return kParse;
}

}  // namespace hgw::cli
