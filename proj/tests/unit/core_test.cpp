#include "doctest.h"
#include "wtt/term.hpp"

using namespace wtt;
using namespace wtt::build;

TEST_CASE("weaken shifts free indices under a binder") {
  CHECK(structural_eq(weaken(lam(var(1)), 0, 2), lam(var(3))));
  CHECK(structural_eq(weaken(lam(var(0)), 0, 2), lam(var(0))));
}

TEST_CASE("subst replaces and lowers") {
  CHECK(structural_eq(subst(var(1), 0, star()), var(0)));
  CHECK(structural_eq(subst(var(0), 0, star()), star()));
  CHECK(structural_eq(subst(lam(var(1)), 0, var(0)), lam(var(1))));
}
