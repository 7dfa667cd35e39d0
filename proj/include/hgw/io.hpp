#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "hgw/comodule_algebra.hpp"
#include "hgw/crossed_product.hpp"
#include "hgw/galois_engine.hpp"
#include "hgw/module_coalgebra.hpp"

namespace hgw::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

enum class DocumentKind { Hopf, ComoduleAlgebra, ModuleCoalgebra, CrossedProduct };
const char* to_string(DocumentKind k);
// Throws ParseError for an unknown name.
DocumentKind parse_kind(const std::string& name);

// Crossed product data as read from disk; not yet validated or built.
struct CrossedProductData {
  MeasuringAction action;
  Matrix sigma;
};

struct Document {
  std::string name;
  std::variant<HopfAlgebraStructure, ComoduleAlgebra, ModuleCoalgebra, CrossedProductData> value;

  DocumentKind kind() const { return static_cast<DocumentKind>(value.index()); }
  const FieldSpec& field() const;
  // The Hopf algebra the document lives over (itself for kind hopf).
  const HopfAlgebraStructure& hopf() const;
};

// Strict parse: unknown or duplicate keys, out-of-range indices, zero
// coefficients and unsorted entries raise ParseError. "hopf" and "b_algebra"
// may be given inline or as a path relative to base_dir.
Document parse_document(const std::string& text, const std::filesystem::path& base_dir = {});
Document read_document(const std::filesystem::path& path);

// Canonical text; parse followed by serialize reproduces it byte for byte.
std::string serialize(const HopfAlgebraStructure& h, const std::string& name = {});
std::string serialize(const ComoduleAlgebra& a, const std::string& name = {});
std::string serialize(const ModuleCoalgebra& c, const std::string& name = {});
std::string serialize(const CrossedProduct& cp, const std::string& name = {});
std::string serialize(const CrossedProductData& cp, const std::string& name = {});
std::string serialize(const Document& d);

// Deterministic layout: flat objects and scalar arrays on one line, everything
// else one member per line.
std::string dump(const Json& j);

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Subspace& s);
Json to_json(const ValidationReport& r);
Json to_json(const GaloisConnectionReport& r);
Json to_json(const ConnectionReport& r);
Json to_json(const TakeuchiReport& r);
Json to_json(const CoextConnection& r);

}  // namespace hgw::io
