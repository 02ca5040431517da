#include <doctest.h>

#include "delpezzo.h"

#include <json.hpp>

#include <string>

using nlohmann::json;

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { dpz_string_free(s); }
  json parse() const { return json::parse(std::string(s ? s : "null")); }
};

} // namespace

TEST_CASE("preset to theta through the C surface") {
  dpz_model* m = nullptr;
  REQUIRE(dpz_model_from_preset("X_7_2_3", &m) == DPZ_OK);
  dpz_lattice* l = nullptr;
  REQUIRE(dpz_model_lattice(m, &l) == DPZ_OK);
  Str out;
  REQUIRE(dpz_theta(l, 1, &out.s) == DPZ_OK);
  json j = out.parse();
  CHECK(j["count"] == 1);
  CHECK(j["elements"][0] == json::array({0, 1}));
  dpz_lattice_free(l);
  dpz_model_free(m);
}

TEST_CASE("lattice json round trip") {
  const char* text = R"({"rank":2,"gram":[[1,3],[3,7]],"labels":["G","A"],"a":[0,1]})";
  dpz_lattice* l = nullptr;
  REQUIRE(dpz_lattice_from_json(text, &l) == DPZ_OK);
  Str out;
  REQUIRE(dpz_lattice_to_json(l, &out.s) == DPZ_OK);
  json j = out.parse();
  CHECK(j["rank"] == 2);
  CHECK(j["d"] == 7);
  dpz_lattice_free(l);
}

TEST_CASE("bad input surfaces as domain errors with messages") {
  dpz_model* m = nullptr;
  CHECK(dpz_model_from_preset("X_9_9_9", &m) == DPZ_ERR_DOMAIN);
  CHECK(std::string(dpz_last_error()).size() > 0);
  dpz_lattice* l = nullptr;
  CHECK(dpz_lattice_from_json("{\"gram\":[[1,2],[3,4]],\"a\":[1,0]}", &l) ==
        DPZ_ERR_STRUCTURAL);
  CHECK(dpz_lattice_from_json("not json", &l) == DPZ_ERR_DOMAIN);
}

TEST_CASE("construction json") {
  dpz_model* m = nullptr;
  const char* text = R"({"op":"blowup","k":1,"of":{"op":"pbundle_p2","d":6,"n":4}})";
  REQUIRE(dpz_model_from_json(text, &m) == DPZ_OK);
  Str inv;
  REQUIRE(dpz_invariants(m, &inv.s) == DPZ_OK);
  json j = inv.parse();
  CHECK(j["d"] == 5);
  CHECK(j["r"] == 3);
  CHECK(j["xi_type"] == "A2");
  dpz_model_free(m);
}

TEST_CASE("bundle helpers") {
  int dual = 0;
  REQUIRE(dpz_bundle_dual_c2(9, 4, &dual) == DPZ_OK);
  CHECK(dual == 5);
  CHECK(dpz_bundle_dual_c2(9, 8, &dual) == DPZ_ERR_DOMAIN);
  Str out;
  REQUIRE(dpz_quadric_splitting(4, 5, &out.s) == DPZ_OK);
  CHECK(out.parse()["k"] == 0);
}

TEST_CASE("census and bounds") {
  Str out;
  REQUIRE(dpz_census(&out.s) == DPZ_OK);
  json j = out.parse();
  CHECK(j["entries"].size() > 40);
  Str bounds;
  CHECK(dpz_verify_bounds(&bounds.s) == DPZ_OK);
  CHECK(bounds.parse()["pass"] == true);
}

TEST_CASE("catalog lookup") {
  Str out;
  REQUIRE(dpz_catalog_lookup("X_3_6_3", &out.s) == DPZ_OK);
  CHECK(out.parse()["d"] == 3);
  Str miss;
  CHECK(dpz_catalog_lookup("X_9_9_9", &miss.s) == DPZ_ERR_DOMAIN);
}

TEST_CASE("dynkin of an explicit lattice") {
  Str out;
  const char* text = R"({"gram":[[-2,1],[1,-2]]})";
  REQUIRE(dpz_dynkin_of_json(text, &out.s) == DPZ_OK);
  json j = out.parse();
  CHECK(j["total"] == 6);
  CHECK(j["components"][0]["type"] == "A2");
}
