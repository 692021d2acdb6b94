#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "steklov/error.hpp"
#include "steklov/profile.hpp"

namespace steklov {

using nlohmann::json;

namespace {

double number(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number())
    throw Error(ErrorCode::Config, std::string("profile piece: missing numeric field '") + key + "'");
  const double v = it->get<double>();
  if (!std::isfinite(v)) throw Error(ErrorCode::Config, std::string("non-finite value for '") + key + "'");
  return v;
}

std::vector<double> number_array(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_array())
    throw Error(ErrorCode::Config, std::string("expression-table: missing array '") + key + "'");
  std::vector<double> out;
  for (const auto& v : *it) {
    if (!v.is_number()) throw Error(ErrorCode::Config, "expression-table: non-numeric entry");
    out.push_back(v.get<double>());
  }
  return out;
}

Piece parse_piece(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Config, "profile piece must be an object");
  Piece p;
  p.t_from = number(j, "t_from");
  p.t_to = number(j, "t_to");
  const auto kind = j.value("kind", std::string{});
  if (kind == "constant") {
    p.shape = ConstantPiece{number(j, "value")};
  } else if (kind == "cosine_rational") {
    p.shape = CosineRationalPiece{number(j, "a"), number(j, "b"), number(j, "c"), number(j, "d"),
                                  number(j, "e")};
  } else if (kind == "expression-table") {
    p.shape = TablePiece{number_array(j, "t"), number_array(j, "k")};
  } else {
    throw Error(ErrorCode::Config, "unknown profile piece kind '" + kind + "'");
  }
  return p;
}

}  // namespace

CurvatureProfile parse_profile_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Config, std::string("profile config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::Config, "profile config must be a JSON object");
  if (doc.value("schema", std::string{}) != kProfileSchemaName)
    throw Error(ErrorCode::Config, "profile config: schema must be \"steklov.curvature_profile\"");
  if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<int>() != kProfileSchemaVersion)
    throw Error(ErrorCode::Config, "profile config: unsupported schema_version");
  const auto pieces_it = doc.find("pieces");
  if (pieces_it == doc.end() || !pieces_it->is_array() || pieces_it->empty())
    throw Error(ErrorCode::Config, "profile config: 'pieces' must be a non-empty array");

  std::vector<Piece> pieces;
  for (const auto& j : *pieces_it) pieces.push_back(parse_piece(j));
  if (doc.contains("t_max")) {
    const double t_max = number(doc, "t_max");
    if (std::abs(t_max - pieces.back().t_to) > 1e-12 * std::max(1.0, std::abs(t_max)))
      throw Error(ErrorCode::Config, "profile config: t_max disagrees with the last piece");
  }
  try {
    return CurvatureProfile(std::move(pieces));
  } catch (const Error& e) {
    throw Error(ErrorCode::Config, std::string("profile config: ") + e.what());
  }
}

CurvatureProfile load_profile_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open profile config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile_config(buf.str());
}

std::string to_profile_config(const CurvatureProfile& profile) {
  if (!profile.serializable())
    throw Error(ErrorCode::Config, "profile has function pieces and cannot be written as config");
  json pieces = json::array();
  for (const auto& p : profile.pieces()) {
    json j{{"t_from", p.t_from}, {"t_to", p.t_to}};
    if (const auto* c = std::get_if<ConstantPiece>(&p.shape)) {
      j["kind"] = "constant";
      j["value"] = c->value;
    } else if (const auto* cr = std::get_if<CosineRationalPiece>(&p.shape)) {
      j["kind"] = "cosine_rational";
      j["a"] = cr->a;
      j["b"] = cr->b;
      j["c"] = cr->c;
      j["d"] = cr->d;
      j["e"] = cr->e;
    } else if (const auto* tb = std::get_if<TablePiece>(&p.shape)) {
      j["kind"] = "expression-table";
      j["t"] = tb->t;
      j["k"] = tb->k;
    }
    pieces.push_back(std::move(j));
  }
  json doc{{"schema", kProfileSchemaName},
           {"schema_version", kProfileSchemaVersion},
           {"t_max", profile.t_max()},
           {"pieces", std::move(pieces)}};
  return doc.dump(2) + "\n";
}

}  // namespace steklov
