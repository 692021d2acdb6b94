#include "steklov/records.hpp"

#include "format.hpp"
#include "json.hpp"
#include "steklov/error.hpp"

namespace steklov {

using nlohmann::ordered_json;

SteklovRecord make_record(const ModelBall& ball, const SteklovResult& result) {
  return {ball.n(), ball.r(), result.v1, result.mode, ball.f_at_r(), boundary_lambda1c(ball),
          std::nullopt};
}

SteklovRecord make_record(const ComparisonReport& report) {
  const double f = report.f_at_r_variable;
  return {report.n, report.r, report.v1_model_variable, report.mode, f, (report.n - 1) / (f * f),
          report.margin};
}

std::string to_json(const SteklovRecord& rec) {
  ordered_json j;
  j["n"] = rec.n;
  j["r"] = rec.r;
  j["v1"] = rec.v1;
  j["mode"] = rec.mode;
  j["f_at_r"] = rec.f_at_r;
  j["lambda1c_boundary"] = rec.lambda1c_boundary;
  j["margin"] = rec.margin ? ordered_json(*rec.margin) : ordered_json(nullptr);
  return j.dump();
}

SteklovRecord record_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorCode::Config, std::string("record is not valid JSON: ") + e.what());
  }
  auto num = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number())
      throw Error(ErrorCode::Config, std::string("record: missing numeric field '") + key + "'");
    return j[key].get<double>();
  };
  auto integer = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
      throw Error(ErrorCode::Config, std::string("record: missing integer field '") + key + "'");
    return j[key].get<int>();
  };
  SteklovRecord rec;
  rec.n = integer("n");
  rec.r = num("r");
  rec.v1 = num("v1");
  rec.mode = integer("mode");
  rec.f_at_r = num("f_at_r");
  rec.lambda1c_boundary = num("lambda1c_boundary");
  if (!j.contains("margin")) throw Error(ErrorCode::Config, "record: missing field 'margin'");
  if (!j["margin"].is_null()) rec.margin = num("margin");
  return rec;
}

std::string record_csv_header() { return "n,r,v1,mode,f_at_r,lambda1c_boundary,margin"; }

std::string to_csv_row(const SteklovRecord& rec) {
  using detail::format_double;
  return std::to_string(rec.n) + ',' + format_double(rec.r) + ',' + format_double(rec.v1) + ',' +
         std::to_string(rec.mode) + ',' + format_double(rec.f_at_r) + ',' +
         format_double(rec.lambda1c_boundary) + ',' + (rec.margin ? format_double(*rec.margin) : "");
}

}  // namespace steklov
