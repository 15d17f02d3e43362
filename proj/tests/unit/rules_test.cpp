#include "doctest.h"
#include "../support/helpers.hpp"
#include "../support/rule_goldens.hpp"

using namespace wtt;
using wtt::testing::check_source;
using wtt::testing::error_kind;

using namespace wtt::testing::rule_goldens;

namespace {

std::vector<Flags> all_flag_sets() {
  std::vector<Flags> out;
  for (int m = 0; m < 16; ++m) out.push_back({bool(m & 1), bool(m & 2), bool(m & 4), bool(m & 8)});
  return out;
}

}  // namespace

TEST_CASE("every rule checks under every flag setting") {
  for (const auto& g : goldens())
    for (const Flags& f : all_flag_sets()) {
      auto r = check_source(g.source, f);
      CHECK_MESSAGE(!r, (std::string(g.name) + " under " + f.to_string() + ": " + r.value_or("")));
    }
}

TEST_CASE("ill-formed eliminations are rejected with the expected kind") {
  for (const auto& n : negatives())
    for (const Flags& f : {Flags{}, Flags::all()}) {
      auto k = error_kind(n.source, f);
      INFO(std::string(n.name) << " under " << f.to_string());
      REQUIRE(k.has_value());
      CHECK(to_string(*k) == to_string(n.kind));
    }
}

TEST_CASE("rejections name the offending declaration and a location") {
  auto r = check_source(def("broken", TW + MW + "(w : W A B) -> M w", "fun A B M d w => elimW M d w"), Flags{});
  REQUIRE(r.has_value());
  CHECK(r->rfind("broken:2:", 0) == 0);
  CHECK(r->find("motive") != std::string::npos);
}
