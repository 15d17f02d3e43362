#include "doctest.h"
#include "../support/cover_gen.hpp"
#include "../support/helpers.hpp"

#include "wtt/cover.hpp"

using namespace wtt::cover;

namespace {

const char* kTwoAtoms = R"(
carrier a b
axiom a i : b
subset V : b
query a V
)";

Subset of(const FiniteAxiomSet& ax, std::initializer_list<const char*> names) {
  Subset s(ax.size());
  for (const char* n : names) s.insert(*ax.atom(n));
  return s;
}

}  // namespace

TEST_CASE("loader reads the two-atom example") {
  auto ax = load_axiom_set(kTwoAtoms);
  REQUIRE(ax.size() == 2);
  REQUIRE(ax.axioms[0].size() == 1);
  CHECK(ax.axioms[0][0].label == "i");
  CHECK(ax.axioms[0][0].premises == of(ax, {"b"}));
  CHECK(ax.axioms[1].empty());
  REQUIRE(ax.queries.size() == 1);
  CHECK(ax.queries[0].atom == 0);
  CHECK(ax.show(ax.subsets[0].atoms) == "{b}");
}

TEST_CASE("loader accepts a carrier with no axioms") {
  auto ax = load_axiom_set("carrier a b c\n");
  CHECK(ax.size() == 3);
  for (const auto& list : ax.axioms) CHECK(list.empty());
}

TEST_CASE("loader reports bad input with a line number") {
  auto line_of = [](const char* text) {
    try {
      load_axiom_set(text);
    } catch (const FormatError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("carrier a b\naxiom c i :\n") == 2);
  CHECK(line_of("carrier a\naxiom a i :\naxiom a i : a\n") == 3);
  CHECK(line_of("carrier a\nsubset S : a z\n") == 2);
  CHECK(line_of("axiom a i :\n") == 1);
  CHECK(line_of("carrier a\ncarrier b\n") == 2);
  CHECK(line_of("carrier a\nquery a S\n") == 2);
  CHECK(line_of("carrier a a\n") == 1);
  CHECK(line_of("# nothing\n") == 1);
}

TEST_CASE("least cover of the two-atom example") {
  auto ax = load_axiom_set(kTwoAtoms);
  Subset V = of(ax, {"b"});
  CHECK(least_cover(ax, V) == of(ax, {"a", "b"}));
  CHECK(least_cover_parallel(ax, V) == of(ax, {"a", "b"}));
  // Hand trace: {} -> {b} -> {a, b} -> {a, b}.
  auto rounds = kleene_rounds(ax, V);
  REQUIRE(rounds.size() == 4);
  CHECK(rounds[1] == of(ax, {"b"}));
  CHECK(rounds[2] == of(ax, {"a", "b"}));
}

TEST_CASE("reflexivity saturates") {
  auto ax = load_axiom_set(kTwoAtoms);
  CHECK(least_cover(ax, Subset::full(2)) == Subset::full(2));
}

TEST_CASE("a self-supporting axiom never fires") {
  auto ax = load_axiom_set("carrier a\naxiom a i : a\n");
  CHECK(least_cover(ax, Subset(1)).empty());
  CHECK(brute_force_min_cover(ax, Subset(1)).empty());
  CHECK(!derivation(ax, Subset(1), 0));
}

TEST_CASE("a nullary axiom covers its atom") {
  auto ax = load_axiom_set("carrier a\naxiom a i :\n");
  CHECK(least_cover(ax, Subset(1)) == Subset::full(1));
  CHECK(brute_force_min_cover(ax, Subset(1)) == Subset::full(1));
}

TEST_CASE("brute force with no axioms and empty V") {
  auto ax = load_axiom_set("carrier a b c\n");
  CHECK(brute_force_min_cover(ax, Subset(3)).empty());
}

TEST_CASE("brute force refuses large carriers") {
  std::string text = "carrier";
  for (int k = 0; k <= static_cast<int>(kBruteForceLimit); ++k) text += " a" + std::to_string(k);
  auto ax = load_axiom_set(text);
  CHECK_THROWS_AS(brute_force_min_cover(ax, Subset(ax.size())), std::invalid_argument);
}

TEST_CASE("derivations replay the rounds") {
  auto ax = load_axiom_set(kTwoAtoms);
  Subset V = of(ax, {"b"});
  auto rf = derivation(ax, V, 1);
  REQUIRE(rf);
  CHECK(rf->rule == Derivation::Rule::Rf);
  auto tr = derivation(ax, V, 0);
  REQUIRE(tr);
  CHECK(tr->rule == Derivation::Rule::Tr);
  REQUIRE(tr->children.size() == 1);
  CHECK(tr->children[0].rule == Derivation::Rule::Rf);
  CHECK(tr->children[0].atom == 1);
  CHECK(render(ax, *tr) == "tr a i\n  rf b\n");
  CHECK(!derivation(ax, Subset(2), 0));
}

TEST_CASE("extracted proof terms check without flags") {
  auto ax = load_axiom_set(kTwoAtoms);
  Subset V = of(ax, {"b"});
  KernelInstance ki = kernel_instance(ax, V);
  for (std::size_t a = 0; a < 2; ++a) {
    auto d = derivation(ax, V, a);
    REQUIRE(d);
    std::string src = ki.declarations + "def goal : " + ki.goal_type(a) + " := " + extract_proof_term(ax, V, *d) + "\n";
    auto r = wtt::testing::check_source(src, {});
    CHECK_MESSAGE(!r, (r.value_or("") + "\n" + src));
  }
}

TEST_CASE("kernel instance with an atom lacking axioms and a nullary axiom") {
  auto ax = load_axiom_set("carrier a b c\naxiom a i : b c\naxiom a j :\naxiom c k : a\n");
  Subset V(3);
  KernelInstance ki = kernel_instance(ax, V);
  for (std::size_t a = 0; a < 3; ++a) {
    auto d = derivation(ax, V, a);
    if (!d) continue;
    std::string src = ki.declarations + "def goal : " + ki.goal_type(a) + " := " + extract_proof_term(ax, V, *d) + "\n";
    auto r = wtt::testing::check_source(src, {});
    CHECK_MESSAGE(!r, (r.value_or("") + "\n" + src));
  }
  CHECK(least_cover(ax, V) == of(ax, {"a", "c"}));
}

// ---- properties over generated instances ----------------------------------

namespace {

std::vector<std::pair<FiniteAxiomSet, Subset>> suite(std::uint32_t seed, int random_cases) {
  std::vector<std::pair<FiniteAxiomSet, Subset>> out;
  for (const auto& ax : wtt::testing::all_two_atom_sets())
    for (std::uint64_t v = 0; v < 4; ++v) out.push_back({ax, Subset::from_mask(2, v)});
  std::mt19937 rng(seed);
  for (int k = 0; k < random_cases; ++k) {
    std::size_t n = 3 + k % 2;
    auto ax = wtt::testing::random_axiom_set(rng, n);
    out.push_back({ax, wtt::testing::random_subset(rng, n)});
  }
  return out;
}

}  // namespace

TEST_CASE("least cover agrees with both minimality oracles") {
  for (const auto& [ax, V] : suite(5, 200)) {
    Subset lc = least_cover(ax, V);
    INFO(ax.show(V) << " -> " << ax.show(lc));
    CHECK(lc == brute_force_min_cover(ax, V));
    CHECK(lc.mask() == wtt::testing::oracle_least_cover(ax, V.mask()));
    CHECK(least_cover_parallel(ax, V) == lc);
    CHECK(wtt::testing::rule_closed(ax, lc.mask()));
  }
}

TEST_CASE("least cover is a closure operator") {
  std::mt19937 rng(6);
  for (const auto& [ax, V] : suite(6, 200)) {
    Subset lc = least_cover(ax, V);
    CHECK(V.subset_of(lc));
    CHECK(least_cover(ax, lc) == lc);
    Subset bigger = V | wtt::testing::random_subset(rng, ax.size());
    CHECK(lc.subset_of(least_cover(ax, bigger)));
  }
}

TEST_CASE("kleene rounds increase to the fixpoint") {
  for (const auto& [ax, V] : suite(7, 100)) {
    auto rounds = kleene_rounds(ax, V);
    REQUIRE(rounds.size() >= 2);
    CHECK(rounds.front() == Subset(ax.size()));
    for (std::size_t k = 1; k < rounds.size(); ++k) CHECK(rounds[k - 1].subset_of(rounds[k]));
    CHECK(rounds.back() == least_cover(ax, V));
    CHECK(rounds[rounds.size() - 2] == rounds.back());
  }
}

TEST_CASE("derivations exist exactly for covered atoms and are well formed") {
  for (const auto& [ax, V] : suite(8, 200)) {
    Subset lc = least_cover(ax, V);
    for (std::size_t a = 0; a < ax.size(); ++a) {
      auto d = derivation(ax, V, a);
      CHECK(d.has_value() == lc.contains(a));
      if (d) {
        CHECK(d->atom == a);
        CHECK(wtt::testing::valid_derivation(ax, V, *d));
      }
    }
  }
}
