#include "splitorder/serialize.hpp"

#include <string>

#include "splitorder/error.hpp"

namespace splitorder {

using nlohmann::json;

namespace {

std::vector<std::vector<Exponent>> integer_rows(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, std::string(what) + " must be an array of arrays");
  std::vector<std::vector<Exponent>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error(ErrorCode::Parse, std::string(what) + " rows must be arrays");
    auto& row = rows.emplace_back();
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw Error(ErrorCode::Parse, std::string(what) + " entries must be integers");
      row.push_back(x.get<Exponent>());
    }
  }
  return rows;
}

std::vector<std::vector<Rational>> rational_rows(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "entries must be an array of arrays");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error(ErrorCode::Parse, "entry rows must be arrays");
    auto& row = rows.emplace_back();
    for (const auto& x : r) {
      if (x.is_string()) {
        row.push_back(rational_from_string(x.get<std::string>()));
      } else if (x.is_number_integer()) {
        row.emplace_back(static_cast<long>(x.get<std::int64_t>()));
      } else {
        throw Error(ErrorCode::Parse, "entries must be \"num/den\" strings");
      }
    }
  }
  return rows;
}

json rational_rows_json(const LocalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(rational_to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

unsigned long prime_field(const json& j) {
  if (!j.contains("prime") || !j["prime"].is_number_unsigned()) {
    throw Error(ErrorCode::Parse, "missing unsigned \"prime\"");
  }
  const auto p = j["prime"].get<unsigned long>();
  require_prime(p);
  return p;
}

}  // namespace

json to_json(const ExponentMatrix& nu) {
  return json{{"n", nu.size()}, {"nu", nu.rows()}};
}

ExponentMatrix exponent_matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("nu")) throw Error(ErrorCode::Parse, "expected {\"n\": int, \"nu\": [[int]]}");
  auto rows = integer_rows(j["nu"], "nu");
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() != static_cast<std::int64_t>(rows.size())) {
      throw Error(ErrorCode::Parse, "\"n\" does not match the number of rows");
    }
  }
  return ExponentMatrix(rows);
}

json to_json(const std::vector<LatticePoint>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(p.coords());
  return out;
}

std::vector<LatticePoint> points_from_json(const json& j) {
  std::vector<LatticePoint> out;
  for (auto& row : integer_rows(j, "vertex list")) {
    if (row.empty()) throw Error(ErrorCode::Parse, "empty vertex");
    out.emplace_back(std::move(row));
  }
  return out;
}

json to_json(const RoundtripReport& r) {
  return json{{"input", to_json(r.input)},
              {"hull", to_json(r.hull)},
              {"recovered", to_json(r.recovered)},
              {"vertices", to_json(r.vertices)},
              {"vertex_count", r.vertices.size()},
              {"input_reduced", r.input_reduced},
              {"hull_recovered", r.hull_recovered},
              {"reduced_is_fixed", r.reduced_is_fixed},
              {"input_fixed", r.input_fixed},
              {"ok", r.ok()}};
}

json to_json(const LocalMatrix& m) { return json{{"prime", m.prime()}, {"entries", rational_rows_json(m)}}; }

LocalMatrix local_matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries")) throw Error(ErrorCode::Parse, "expected {\"prime\", \"entries\"}");
  return LocalMatrix(rational_rows(j["entries"]), prime_field(j));
}

json to_json(const GeneralSplitOrder& s) {
  return json{{"gamma", rational_rows_json(s.apartment().gamma())},
              {"prime", s.apartment().prime()},
              {"nu", s.exponents().rows()}};
}

GeneralSplitOrder general_split_order_from_json(const json& j) {
  if (!j.is_object() || !j.contains("gamma") || !j.contains("nu")) {
    throw Error(ErrorCode::Parse, "expected {\"gamma\", \"prime\", \"nu\"}");
  }
  LocalMatrix gamma(rational_rows(j["gamma"]), prime_field(j));
  return GeneralSplitOrder(Apartment(std::move(gamma)), ExponentMatrix(integer_rows(j["nu"], "nu")));
}

}  // namespace splitorder
