#include "doctest.h"
#include "steklov/error.hpp"
#include "steklov/records.hpp"
#include "steklov/torus.hpp"

using namespace steklov;

TEST_CASE("record from a result") {
  const ModelBall b(2, 0.5, space_form_warping(0.0));
  const auto rec = make_record(b, steklov_v1(b));
  CHECK(rec.n == 2);
  CHECK(rec.v1 == doctest::Approx(2.0));
  CHECK(rec.lambda1c_boundary == doctest::Approx(4.0));
  CHECK_FALSE(rec.margin);
  CHECK(to_json(rec) == R"({"n":2,"r":0.5,"v1":2.0,"mode":1,"f_at_r":0.5,"lambda1c_boundary":4.0,"margin":null})");
  CHECK(to_csv_row(rec) == "2,0.5,2,1,0.5,4,");
}

TEST_CASE("JSON round trip keeps every field bit-exact") {
  const double ref = torus::escobar_reference_constant(2, 0.9).k0;
  const auto rec = make_record(comparison_report(torus::case_profile(2), 3, 0.9, ref));
  REQUIRE(rec.margin);
  CHECK(record_from_json(to_json(rec)) == rec);
  const ModelBall b(4, 1.1, space_form_warping(1.0));
  const auto plain = make_record(b, steklov_v1(b));
  CHECK(record_from_json(to_json(plain)) == plain);
}

TEST_CASE("CSV column order is fixed") {
  CHECK(record_csv_header() == "n,r,v1,mode,f_at_r,lambda1c_boundary,margin");
  SteklovRecord rec{3, 0.25, 1.5, 1, 0.2, 50.0, 0.125};
  CHECK(to_csv_row(rec) == "3,0.25,1.5,1,0.20000000000000001,50,0.125");
}

TEST_CASE("malformed records") {
  CHECK_THROWS_AS(record_from_json("{"), Error);
  CHECK_THROWS_AS(record_from_json(R"({"n":2})"), Error);
  CHECK_THROWS_AS(record_from_json(R"({"n":2.5,"r":1,"v1":1,"mode":1,"f_at_r":1,"lambda1c_boundary":1,"margin":null})"),
                  Error);
  CHECK_THROWS_AS(record_from_json(R"({"n":2,"r":1,"v1":1,"mode":1,"f_at_r":1,"lambda1c_boundary":1})"), Error);
}
