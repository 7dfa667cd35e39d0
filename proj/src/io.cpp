#include "hgw/io.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "hgw/errors.hpp"

namespace hgw::io {

namespace {

using Index = std::vector<std::size_t>;
using Place = std::function<std::pair<std::size_t, std::size_t>(const Index&)>;

// Sparse block: one entry per nonzero matrix coefficient, keyed by an index
// tuple in the sort order of keys.
struct BlockSpec {
  std::vector<std::string> keys;
  Index bounds;
  Place place;  // (row, column)
};

BlockSpec mul_block(std::size_t d) {
  return {{"a", "b", "to"}, {d, d, d}, [d](const Index& i) { return std::pair{i[2], i[0] * d + i[1]}; }};
}
BlockSpec unit_block(std::size_t d) {
  return {{"to"}, {d}, [](const Index& i) { return std::pair{i[0], std::size_t{0}}; }};
}
BlockSpec comul_block(std::size_t d) {
  return {{"from", "left", "right"}, {d, d, d}, [d](const Index& i) { return std::pair{i[1] * d + i[2], i[0]}; }};
}
BlockSpec counit_block(std::size_t d) {
  return {{"from"}, {d}, [](const Index& i) { return std::pair{std::size_t{0}, i[0]}; }};
}
BlockSpec antipode_block(std::size_t d) {
  return {{"from", "to"}, {d, d}, [](const Index& i) { return std::pair{i[1], i[0]}; }};
}
BlockSpec coaction_block(std::size_t m, std::size_t n) {
  return {{"from", "a", "h"}, {m, m, n}, [n](const Index& i) { return std::pair{i[1] * n + i[2], i[0]}; }};
}
BlockSpec module_action_block(std::size_t n, std::size_t c) {
  return {{"h", "c", "to"}, {n, c, c}, [c](const Index& i) { return std::pair{i[2], i[0] * c + i[1]}; }};
}
BlockSpec measuring_block(std::size_t n, std::size_t m) {
  return {{"h", "b", "to"}, {n, m, m}, [m](const Index& i) { return std::pair{i[2], i[0] * m + i[1]}; }};
}
BlockSpec sigma_block(std::size_t n, std::size_t m) {
  return {{"h", "k", "to"}, {n, n, m}, [n](const Index& i) { return std::pair{i[2], i[0] * n + i[1]}; }};
}

// ---- writing

Json write_block(const Matrix& m, const BlockSpec& spec) {
  Json out = Json::array();
  Index idx(spec.keys.size(), 0);
  std::size_t total = 1;
  for (auto b : spec.bounds) total *= b;
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t;
    for (std::size_t k = spec.keys.size(); k-- > 0;) {
      idx[k] = rest % spec.bounds[k];
      rest /= spec.bounds[k];
    }
    auto [r, c] = spec.place(idx);
    const Scalar& s = m(r, c);
    if (s.is_zero()) continue;
    Json e = Json::object();
    for (std::size_t k = 0; k < spec.keys.size(); ++k) e[spec.keys[k]] = idx[k];
    e["coeff"] = s.to_string();
    out.push_back(std::move(e));
  }
  return out;
}

Json field_json(const FieldSpec& f) {
  Json j = Json::object();
  if (f.is_finite()) {
    j["kind"] = "prime";
    j["p"] = f.characteristic();
  } else {
    j["kind"] = "rationals";
  }
  return j;
}

Json names_json(const std::vector<std::string>& names, std::size_t dim, const char* prefix) {
  Json j = Json::array();
  for (std::size_t i = 0; i < dim; ++i) j.push_back(i < names.size() ? names[i] : prefix + std::to_string(i));
  return j;
}

Json header(DocumentKind kind, const std::string& name, const FieldSpec& field) {
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  j["kind"] = to_string(kind);
  if (!name.empty()) j["name"] = name;
  j["field"] = field_json(field);
  return j;
}

void put_algebra(Json& j, const AlgebraStructure& a, const std::vector<std::string>& names, const char* prefix) {
  j["dim"] = a.dim;
  j["basis"] = names_json(names, a.dim, prefix);
  j["mul"] = write_block(a.mul, mul_block(a.dim));
  j["unit"] = write_block(Matrix::from_columns(a.field, a.dim, {a.unit}), unit_block(a.dim));
}

void put_coalgebra(Json& j, const CoalgebraStructure& c) {
  j["comul"] = write_block(c.comul, comul_block(c.dim));
  j["counit"] = write_block(c.counit, counit_block(c.dim));
}

Json hopf_json(const HopfAlgebraStructure& h, const std::string& name) {
  Json j = header(DocumentKind::Hopf, name, h.field());
  put_algebra(j, h.algebra, h.basis_names, "e");
  put_coalgebra(j, h.coalgebra);
  j["antipode"] = write_block(h.antipode, antipode_block(h.dim()));
  return j;
}

void write_compact_or_nested(std::string& out, const Json& j, std::size_t indent) {
  bool flat = true;
  for (const auto& v : j)
    if (v.is_structured()) flat = false;
  if (!j.is_structured() || j.empty() || flat) {
    out += j.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  bool first = true;
  if (j.is_object()) {
    out += "{\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(it.key()).dump() + ": ";
      write_compact_or_nested(out, it.value(), indent + 2);
    }
    out += "\n" + std::string(indent, ' ') + "}";
  } else {
    out += "[\n";
    for (const auto& v : j) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      write_compact_or_nested(out, v, indent + 2);
    }
    out += "\n" + std::string(indent, ' ') + "]";
  }
}

// ---- reading

// Tracks which keys of an object were consumed.
class Reader {
 public:
  Reader(const Json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j.is_object()) fail("expected an object");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(where_ + ": " + msg); }

  const Json& take(const std::string& key) {
    const Json* v = maybe(key);
    if (!v) fail("missing key \"" + key + "\"");
    return *v;
  }
  const Json* maybe(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    used_.insert(key);
    return &*it;
  }
  std::size_t index(const std::string& key) {
    const Json& v = take(key);
    if (!v.is_number_unsigned()) fail("\"" + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
  }
  std::string string(const std::string& key) {
    const Json& v = take(key);
    if (!v.is_string()) fail("\"" + key + "\" must be a string");
    return v.get<std::string>();
  }
  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!used_.count(it.key())) fail("unknown key \"" + it.key() + "\"");
  }
  const std::string& where() const { return where_; }

 private:
  const Json& j_;
  std::string where_;
  std::set<std::string> used_;
};

Json parse_json(const std::string& text) {
  std::vector<std::set<std::string>> seen;
  Json::parser_callback_t cb = [&](int, Json::parse_event_t ev, Json& parsed) {
    if (ev == Json::parse_event_t::object_start) {
      seen.emplace_back();
    } else if (ev == Json::parse_event_t::object_end) {
      seen.pop_back();
    } else if (ev == Json::parse_event_t::key) {
      auto key = parsed.get<std::string>();
      if (!seen.back().insert(key).second) throw ParseError("duplicate key \"" + key + "\"");
    }
    return true;
  };
  try {
    return Json::parse(text, cb);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

FieldSpec read_field(const Json& j, const std::string& where) {
  Reader r(j, where + ".field");
  auto kind = r.string("kind");
  FieldSpec f = FieldSpec::rationals();
  if (kind == "prime") {
    f = FieldSpec::prime(r.index("p"));
  } else if (kind != "rationals") {
    r.fail("unknown field kind \"" + kind + "\"");
  }
  r.finish();
  return f;
}

Scalar read_scalar(const Json& v, const FieldSpec& f, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": coefficients are strings");
  Scalar s;
  try {
    s = f.parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": bad scalar \"" + v.get<std::string>() + "\": " + e.what());
  }
  if (s.is_zero()) throw ParseError(where + ": zero coefficient");
  return s;
}

Matrix read_block(const Json& j, const BlockSpec& spec, const FieldSpec& f, std::size_t rows, std::size_t cols,
                  const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of entries");
  Matrix m(f, rows, cols);
  std::optional<Index> prev;
  for (std::size_t e = 0; e < j.size(); ++e) {
    Reader r(j[e], where + "[" + std::to_string(e) + "]");
    Index idx;
    for (std::size_t k = 0; k < spec.keys.size(); ++k) {
      std::size_t v = r.index(spec.keys[k]);
      if (v >= spec.bounds[k]) r.fail("\"" + spec.keys[k] + "\" out of range");
      idx.push_back(v);
    }
    Scalar s = read_scalar(r.take("coeff"), f, r.where());
    r.finish();
    if (prev && !(*prev < idx)) r.fail("entries must be strictly increasing by index tuple");
    prev = idx;
    auto [row, col] = spec.place(idx);
    m(row, col) = s;
  }
  return m;
}

std::vector<std::string> read_names(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim) throw ParseError(where + ": basis must list " + std::to_string(dim) + " names");
  std::vector<std::string> names;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError(where + ": basis names are strings");
    names.push_back(v.get<std::string>());
  }
  return names;
}

std::size_t read_dim(Reader& r) {
  std::size_t d = r.index("dim");
  if (d == 0) r.fail("dim must be positive");
  return d;
}

AlgebraStructure read_algebra(Reader& r, const FieldSpec& f, std::vector<std::string>& names) {
  std::size_t d = read_dim(r);
  names = read_names(r.take("basis"), d, r.where() + ".basis");
  Matrix mul = read_block(r.take("mul"), mul_block(d), f, d, d * d, r.where() + ".mul");
  Matrix unit = read_block(r.take("unit"), unit_block(d), f, d, 1, r.where() + ".unit");
  return AlgebraStructure{f, d, std::move(mul), unit.column(0)};
}

CoalgebraStructure read_coalgebra(Reader& r, const FieldSpec& f, std::size_t d) {
  Matrix comul = read_block(r.take("comul"), comul_block(d), f, d * d, d, r.where() + ".comul");
  Matrix counit = read_block(r.take("counit"), counit_block(d), f, 1, d, r.where() + ".counit");
  return CoalgebraStructure{f, d, std::move(comul), std::move(counit)};
}

Document parse_value(const Json& j, const std::filesystem::path& base_dir, const std::string& where);

// Inline document or a path relative to base_dir.
Document nested_document(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
  if (j.is_string()) {
    auto path = base_dir / j.get<std::string>();
    return parse_value(parse_json(read_file(path)), path.parent_path(), path.string());
  }
  return parse_value(j, base_dir, where);
}

HopfAlgebraStructure nested_hopf(Reader& r, const FieldSpec& f, const std::filesystem::path& base_dir) {
  Document d = nested_document(r.take("hopf"), base_dir, r.where() + ".hopf");
  if (d.kind() != DocumentKind::Hopf) r.fail("\"hopf\" must be a hopf document");
  if (!(d.field() == f)) r.fail("\"hopf\" is over a different field");
  return std::get<HopfAlgebraStructure>(std::move(d.value));
}

using Value = decltype(Document::value);

Value parse_body(Reader& r, DocumentKind kind, const FieldSpec& f, const std::filesystem::path& base_dir) {
  const std::string& where = r.where();
  switch (kind) {
    case DocumentKind::Hopf: {
      std::vector<std::string> names;
      auto algebra = read_algebra(r, f, names);
      std::size_t d = algebra.dim;
      auto coalgebra = read_coalgebra(r, f, d);
      auto antipode = read_block(r.take("antipode"), antipode_block(d), f, d, d, where + ".antipode");
      return HopfAlgebraStructure{std::move(algebra), std::move(coalgebra), std::move(antipode), std::move(names)};
    }
    case DocumentKind::ComoduleAlgebra: {
      std::vector<std::string> names;
      auto algebra = read_algebra(r, f, names);
      auto h = nested_hopf(r, f, base_dir);
      std::size_t m = algebra.dim, n = h.dim();
      auto coaction = read_block(r.take("coaction"), coaction_block(m, n), f, m * n, m, where + ".coaction");
      return ComoduleAlgebra{std::move(algebra), std::move(h), std::move(coaction), std::move(names)};
    }
    case DocumentKind::ModuleCoalgebra: {
      std::size_t d = read_dim(r);
      auto names = read_names(r.take("basis"), d, where + ".basis");
      auto coalgebra = read_coalgebra(r, f, d);
      auto h = nested_hopf(r, f, base_dir);
      std::size_t n = h.dim();
      auto action = read_block(r.take("action"), module_action_block(n, d), f, d, n * d, where + ".action");
      return ModuleCoalgebra{std::move(coalgebra), std::move(h), std::move(action), std::move(names)};
    }
    case DocumentKind::CrossedProduct: {
      std::vector<std::string> b_names;
      auto b_algebra = [&]() -> AlgebraStructure {
        const Json& bj = r.take("b_algebra");
        if (!bj.is_string()) {
          Reader br(bj, where + ".b_algebra");
          auto b = read_algebra(br, f, b_names);
          br.finish();
          return b;
        }
        Document bd = nested_document(bj, base_dir, where + ".b_algebra");
        if (!(bd.field() == f)) r.fail("\"b_algebra\" is over a different field");
        if (auto* h = std::get_if<HopfAlgebraStructure>(&bd.value)) {
          b_names = h->basis_names;
          return h->algebra;
        }
        if (auto* a = std::get_if<ComoduleAlgebra>(&bd.value)) {
          b_names = a->basis_names;
          return a->algebra;
        }
        r.fail("\"b_algebra\" must name a hopf or comodule_algebra document");
      }();
      auto h = nested_hopf(r, f, base_dir);
      std::size_t m = b_algebra.dim, n = h.dim();
      auto action = read_block(r.take("action"), measuring_block(n, m), f, m, n * m, where + ".action");
      auto sigma = read_block(r.take("sigma"), sigma_block(n, m), f, m, n * n, where + ".sigma");
      return CrossedProductData{MeasuringAction{std::move(b_algebra), std::move(h), std::move(action), std::move(b_names)},
                                std::move(sigma)};
    }
  }
  r.fail("unreachable document kind");
}

Document parse_value(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
  Reader r(j, where);
  if (r.string("format_version") != kFormatVersion) r.fail("unsupported format_version");
  DocumentKind kind = parse_kind(r.string("kind"));
  std::string name;
  if (r.maybe("name")) name = r.string("name");
  FieldSpec f = read_field(r.take("field"), where);
  Document doc{std::move(name), parse_body(r, kind, f, base_dir)};
  r.finish();
  return doc;
}

}  // namespace

const char* to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::Hopf: return "hopf";
    case DocumentKind::ComoduleAlgebra: return "comodule_algebra";
    case DocumentKind::ModuleCoalgebra: return "module_coalgebra";
    case DocumentKind::CrossedProduct: return "crossed_product";
  }
  return "?";
}

DocumentKind parse_kind(const std::string& name) {
  for (auto k : {DocumentKind::Hopf, DocumentKind::ComoduleAlgebra, DocumentKind::ModuleCoalgebra,
                 DocumentKind::CrossedProduct})
    if (name == to_string(k)) return k;
  throw ParseError("unknown document kind \"" + name + "\"");
}

const HopfAlgebraStructure& Document::hopf() const {
  return std::visit(
      [](const auto& v) -> const HopfAlgebraStructure& {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HopfAlgebraStructure>) return v;
        else if constexpr (std::is_same_v<T, CrossedProductData>) return v.action.hopf;
        else return v.hopf;
      },
      value);
}

const FieldSpec& Document::field() const { return hopf().field(); }

Document parse_document(const std::string& text, const std::filesystem::path& base_dir) {
  return parse_value(parse_json(text), base_dir, "document");
}

Document read_document(const std::filesystem::path& path) {
  return parse_value(parse_json(read_file(path)), path.parent_path(), path.filename().string());
}

std::string dump(const Json& j) {
  std::string out;
  write_compact_or_nested(out, j, 0);
  out += "\n";
  return out;
}

std::string serialize(const HopfAlgebraStructure& h, const std::string& name) { return dump(hopf_json(h, name)); }

std::string serialize(const ComoduleAlgebra& a, const std::string& name) {
  Json j = header(DocumentKind::ComoduleAlgebra, name, a.field());
  put_algebra(j, a.algebra, a.basis_names, "e");
  j["hopf"] = hopf_json(a.hopf, {});
  j["coaction"] = write_block(a.coaction, coaction_block(a.dim(), a.hopf.dim()));
  return dump(j);
}

std::string serialize(const ModuleCoalgebra& c, const std::string& name) {
  Json j = header(DocumentKind::ModuleCoalgebra, name, c.field());
  j["dim"] = c.dim();
  j["basis"] = names_json(c.basis_names, c.dim(), "c");
  put_coalgebra(j, c.coalgebra);
  j["hopf"] = hopf_json(c.hopf, {});
  j["action"] = write_block(c.action, module_action_block(c.hopf.dim(), c.dim()));
  return dump(j);
}

std::string serialize(const CrossedProductData& cp, const std::string& name) {
  const auto& act = cp.action;
  Json j = header(DocumentKind::CrossedProduct, name, act.field());
  Json b = Json::object();
  put_algebra(b, act.b_algebra, act.b_names, "b");
  j["b_algebra"] = std::move(b);
  j["hopf"] = hopf_json(act.hopf, {});
  j["action"] = write_block(act.action, measuring_block(act.h_dim(), act.b_dim()));
  j["sigma"] = write_block(cp.sigma, sigma_block(act.h_dim(), act.b_dim()));
  return dump(j);
}

std::string serialize(const CrossedProduct& cp, const std::string& name) {
  return serialize(CrossedProductData{cp.action, cp.cocycle.sigma}, name);
}

std::string serialize(const Document& d) {
  return std::visit([&](const auto& v) { return serialize(v, d.name); }, d.value);
}

// ---- reports

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

Json to_json(const Subspace& s) {
  Json j = Json::object();
  j["dim"] = s.dim();
  Json rows = Json::array();
  for (const auto& v : s.basis_vectors()) rows.push_back(to_json(v));
  j["basis"] = std::move(rows);
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j = Json::object();
  j["passed"] = r.passed();
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json e = Json::object();
    e["axiom"] = v.axiom;
    e["witness"] = v.witness;
    e["lhs"] = to_json(v.lhs);
    e["rhs"] = to_json(v.rhs);
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  return j;
}

Json to_json(const GaloisConnectionReport& r) {
  Json j = Json::object();
  j["forward"] = r.forward;
  j["backward"] = r.backward;
  Json vs = Json::array();
  for (const auto& v : r.law_violations) {
    Json e = Json::object();
    e["law"] = v.law;
    e["witness"] = v.witness;
    vs.push_back(std::move(e));
  }
  j["law_violations"] = std::move(vs);
  j["closed_left"] = r.closed_left;
  j["closed_right"] = r.closed_right;
  j["bijection_on_closed"] = r.bijection_on_closed;
  return j;
}

Json to_json(const ConnectionReport& r) {
  Json j = Json::object();
  Json qs = Json::array();
  for (const auto& i : r.ideals) qs.push_back(to_json(i.space));
  j["quotients"] = std::move(qs);
  Json ss = Json::array();
  for (const auto& s : r.subalgebras) ss.push_back(to_json(s));
  j["subalgebras"] = std::move(ss);
  j["connection"] = to_json(r.connection);
  j["triple_composition"] = r.triple_composition;
  j["bijection"] = r.bijection();
  return j;
}

Json to_json(const TakeuchiReport& r) {
  Json j = Json::object();
  j["connection"] = to_json(r.connection);
  j["strategies_agree"] = r.strategies_agree;
  j["quotient_galois"] = r.quotient_galois;
  j["coext_galois"] = r.coext_galois;
  j["closed_quotient_iff_galois"] = r.closed_quotient_iff_galois;
  j["closed_subalgebra_iff_coext"] = r.closed_subalgebra_iff_coext;
  j["explicit_inverses_exact"] = r.explicit_inverses_exact;
  j["duality"] = r.duality;
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  return j;
}

Json to_json(const CoextConnection& r) {
  Json j = Json::object();
  Json cs = Json::array();
  for (const auto& s : r.coideals) cs.push_back(to_json(s));
  j["coideals"] = std::move(cs);
  Json qs = Json::array();
  for (const auto& s : r.quotients) qs.push_back(to_json(s));
  j["quotients"] = std::move(qs);
  j["connection"] = to_json(r.report);
  return j;
}

}  // namespace hgw::io
