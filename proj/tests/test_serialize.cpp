#include <doctest.h>

#include "splitorder/error.hpp"
#include "splitorder/serialize.hpp"

using namespace splitorder;
using nlohmann::json;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Overflow;
}

}  // namespace

TEST_CASE("exponent matrix JSON") {
  const ExponentMatrix nu({{0, 0, 1}, {3, 0, 1}, {3, 2, 0}});
  CHECK(to_json(nu).dump() == R"({"n":3,"nu":[[0,0,1],[3,0,1],[3,2,0]]})");
  CHECK(exponent_matrix_from_json(to_json(nu)) == nu);
  CHECK(exponent_matrix_from_json(json::parse(R"({"nu":[[0,2],[-1,0]]})")) == ExponentMatrix({{0, 2}, {-1, 0}}));
  CHECK(code_of([] { exponent_matrix_from_json(json::parse(R"({"n":2,"nu":[[1,0],[0,0]]})")); }) ==
        ErrorCode::NonZeroDiagonal);
  CHECK(code_of([] { exponent_matrix_from_json(json::parse(R"({"n":3,"nu":[[0,0],[0,0]]})")); }) ==
        ErrorCode::Parse);
  CHECK(code_of([] { exponent_matrix_from_json(json::parse(R"({"n":2,"nu":[[0,0.5],[0,0]]})")); }) ==
        ErrorCode::Parse);
  CHECK(code_of([] { exponent_matrix_from_json(json::parse(R"([[0,1],[1,0]])")); }) == ErrorCode::Parse);
}

TEST_CASE("lattice point lists") {
  const auto pts = points_from_json(json::parse("[[0,0,-1],[2,5,5]]"));
  REQUIRE(pts.size() == 2);
  CHECK(pts[1].coords() == std::vector<Exponent>{0, 3, 3});
  CHECK(to_json(pts).dump() == "[[0,0,-1],[0,3,3]]");
  CHECK(code_of([] { points_from_json(json::parse("[[]]")); }) == ErrorCode::Parse);
}

TEST_CASE("roundtrip report JSON") {
  const auto j = to_json(verify_roundtrip(ExponentMatrix({{0, 0, 2}, {3, 0, 1}, {3, 2, 0}})));
  CHECK(j["hull"]["nu"] == json::parse("[[0,0,1],[3,0,1],[3,2,0]]"));
  CHECK(j["hull_recovered"] == true);
  CHECK(j["input_fixed"] == false);
  CHECK(j["vertex_count"] == 13);
  CHECK(j["ok"] == true);
}

TEST_CASE("local matrices and general split orders") {
  LocalMatrix m({{1, Rational(-1, 2)}, {0, 3}}, 2);
  const auto j = to_json(m);
  CHECK(j.dump() == R"({"entries":[["1/1","-1/2"],["0/1","3/1"]],"prime":2})");
  CHECK(local_matrix_from_json(j) == m);
  CHECK(local_matrix_from_json(json::parse(R"({"prime":3,"entries":[["2/4",1],["0","1"]]})")) ==
        LocalMatrix({{Rational(1, 2), 1}, {0, 1}}, 3));
  CHECK(code_of([] { local_matrix_from_json(json::parse(R"({"prime":4,"entries":[["1"]]})")); }) ==
        ErrorCode::InvalidPrime);
  CHECK(code_of([] { local_matrix_from_json(json::parse(R"({"entries":[["1"]]})")); }) == ErrorCode::Parse);

  const GeneralSplitOrder s(Apartment(LocalMatrix({{1, 1, 0}, {0, 2, 0}, {0, 0, 1}}, 2)),
                            ExponentMatrix({{0, 0, 1}, {3, 0, 1}, {3, 2, 0}}));
  const auto sj = to_json(s);
  CHECK(sj["prime"] == 2);
  CHECK(sj["nu"] == json::parse("[[0,0,1],[3,0,1],[3,2,0]]"));
  CHECK(sj["gamma"][1][1] == "2/1");
  const auto back = general_split_order_from_json(sj);
  CHECK(back.exponents() == s.exponents());
  CHECK(back.apartment().gamma() == s.apartment().gamma());
}
