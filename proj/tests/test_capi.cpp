#include <doctest.h>
#include <json.hpp>

#include <string>

#include "dwlat/dwlat.h"

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  dwlat_string_free(s);
  return out;
}

struct Diagram {
  dwlat_diagram* d = nullptr;
  explicit Diagram(const char* id) { REQUIRE(dwlat_diagram_create(id, &d) == DWLAT_OK); }
  ~Diagram() { dwlat_diagram_destroy(d); }
};

struct W {
  dwlat_weight* w = nullptr;
  W(const Diagram& d, std::initializer_list<int64_t> k, const char* shift = nullptr) {
    const std::vector<int64_t> v(k);
    REQUIRE(dwlat_weight_create(d.d, v.data(), v.size(), shift, &w) == DWLAT_OK);
  }
  W() = default;
  ~W() { dwlat_weight_destroy(w); }
};

}  // namespace

TEST_CASE("diagram lifecycle and errors") {
  dwlat_diagram* d = nullptr;
  CHECK(dwlat_diagram_create("Z9-1", &d) == DWLAT_E_UNKNOWN_TYPE);
  CHECK(d == nullptr);
  CHECK(std::string(dwlat_last_error()).size() > 0);
  CHECK(dwlat_diagram_create("A2", &d) != DWLAT_OK);
  CHECK(dwlat_diagram_create(nullptr, &d) == DWLAT_E_NULL_ARGUMENT);
  CHECK(std::string(dwlat_status_name(DWLAT_E_PREDICTION_MISMATCH)) == "prediction-mismatch");
  dwlat_diagram_destroy(nullptr);
  dwlat_weight_destroy(nullptr);
  dwlat_string_free(nullptr);

  Diagram a2("A2-1");
  char* info = nullptr;
  REQUIRE(dwlat_diagram_info(a2.d, &info) == DWLAT_OK);
  CHECK(std::string(dwlat_last_error()).empty());
  const auto j = nlohmann::json::parse(take(info));
  CHECK(j["special_vertices"] == nlohmann::json::array({0, 1, 2}));

  char* types = nullptr;
  REQUIRE(dwlat_types(2, &types) == DWLAT_OK);
  const auto t = nlohmann::json::parse(take(types));
  CHECK(t.size() >= 5);
}

TEST_CASE("weights") {
  Diagram a1("A1-1");
  dwlat_weight* w = nullptr;
  const int64_t k[] = {2, 0};
  CHECK(dwlat_weight_create(a1.d, k, 3, nullptr, &w) == DWLAT_E_INDEX);
  CHECK(dwlat_weight_create(a1.d, k, 2, "1/0", &w) == DWLAT_E_PARSE);
  REQUIRE(dwlat_weight_create(a1.d, k, 2, "-1/2", &w) == DWLAT_OK);
  char* s = nullptr;
  REQUIRE(dwlat_weight_to_json(a1.d, w, &s) == DWLAT_OK);
  const std::string text = take(s);
  CHECK(nlohmann::json::parse(text)["delta_shift"] == "-1/2");
  dwlat_weight* back = nullptr;
  REQUIRE(dwlat_weight_from_json(a1.d, text.c_str(), &back) == DWLAT_OK);
  dwlat_weight_destroy(back);
  CHECK(dwlat_weight_from_json(a1.d, "{not json", &back) == DWLAT_E_PARSE);
  CHECK(dwlat_weight_from_json(a1.d, R"({"type":"A2-1","labels":[1,0,0]})", &back) == DWLAT_E_PARSE);
  dwlat_weight_destroy(w);
}

TEST_CASE("order queries") {
  Diagram a1("A1-1");
  W top(a1, {1, 0});
  W low(a1, {1, 0}, "-1");
  int yes = -1;
  REQUIRE(dwlat_is_delta_cocover(a1.d, top.w, &yes) == DWLAT_OK);
  CHECK(yes == 1);
  W zero(a1, {0, 0});
  CHECK(dwlat_is_delta_cocover(a1.d, zero.w, &yes) == DWLAT_E_NON_POSITIVE_LEVEL);

  char* s = nullptr;
  REQUIRE(dwlat_cocovers(a1.d, top.w, &s) == DWLAT_OK);
  auto j = nlohmann::json::parse(take(s));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["kind"] == "Delta");
  CHECK(j[0]["case"] == "f");
  REQUIRE(dwlat_covers(a1.d, low.w, &s) == DWLAT_OK);
  CHECK(nlohmann::json::parse(take(s))[0]["upper"]["delta_shift"] == "0/1");

  dwlat_weight* m = nullptr;
  REQUIRE(dwlat_meet(a1.d, top.w, low.w, &m) == DWLAT_OK);
  REQUIRE(dwlat_weight_to_json(a1.d, m, &s) == DWLAT_OK);
  CHECK(nlohmann::json::parse(take(s))["delta_shift"] == "-1/1");
  dwlat_weight_destroy(m);
  REQUIRE(dwlat_join(a1.d, top.w, low.w, &m) == DWLAT_OK);
  dwlat_weight_destroy(m);
  W other(a1, {1, 1});
  CHECK(dwlat_meet(a1.d, top.w, other.w, &m) == DWLAT_E_COMPONENT_MISMATCH);

  REQUIRE(dwlat_interval(a1.d, top.w, low.w, DWLAT_FORMAT_DOT, &s) == DWLAT_OK);
  CHECK(take(s).find("->") != std::string::npos);
  CHECK(dwlat_interval(a1.d, low.w, top.w, DWLAT_FORMAT_JSON, &s) == DWLAT_E_INCOMPARABLE);
  CHECK(dwlat_cocovers(nullptr, top.w, &s) == DWLAT_E_NULL_ARGUMENT);
  CHECK(dwlat_cocovers(a1.d, top.w, nullptr) == DWLAT_E_NULL_ARGUMENT);
}

TEST_CASE("cells") {
  Diagram a3("A3-1");
  W lambda(a3, {0, 2, 1, 1});
  W mu(a3, {1, 0, 2, 1});
  W mu2(a3, {1, 3, 0, 0});
  char* s = nullptr;
  REQUIRE(dwlat_cell(a3.d, lambda.w, mu.w, mu2.w, DWLAT_FORMAT_JSON, &s) == DWLAT_OK);
  auto j = nlohmann::json::parse(take(s));
  CHECK(j["shape"] == "Pentagon");
  CHECK(j["agrees"] == true);
  CHECK(j["graph"]["nodes"].size() == 5);

  Diagram a2("A2-1");
  W top(a2, {1, 1, 1});
  W m1(a2, {0, 0, 3}, "-1");
  W m2(a2, {0, 3, 0}, "-1");
  REQUIRE(dwlat_cell(a2.d, top.w, m1.w, m2.w, DWLAT_FORMAT_JSON, &s) == DWLAT_E_PREDICTION_MISMATCH);
  j = nlohmann::json::parse(take(s));
  CHECK(j["agrees"] == false);
  CHECK(j["graph"]["nodes"].size() == 5);
  CHECK(j["graph"]["edges"].size() == 6);

  Diagram c2("C2-1");
  W t(c2, {1, 1, 1});
  CHECK(dwlat_cell(c2.d, t.w, t.w, t.w, DWLAT_FORMAT_JSON, &s) == DWLAT_E_UNSUPPORTED_TYPE);
  CHECK(s == nullptr);
}

TEST_CASE("verification") {
  Diagram g2("G2-1");
  const int64_t levels[] = {1, 2};
  char* s = nullptr;
  int passed = -1;
  REQUIRE(dwlat_verify(g2.d, levels, 2, 30, 7, 5, &s, &passed) == DWLAT_OK);
  CHECK(passed == 1);
  const auto j = nlohmann::json::parse(take(s));
  CHECK(j["mismatches"].empty());
  CHECK(dwlat_verify(g2.d, nullptr, 1, 30, 7, 5, &s, &passed) == DWLAT_E_NULL_ARGUMENT);
}
