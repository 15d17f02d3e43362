#pragma once

// Generators and independent oracles for finite axiom sets.

#include <random>
#include <string>
#include <vector>

#include "wtt/cover.hpp"

namespace wtt::testing {

using cover::Axiom;
using cover::Derivation;
using cover::FiniteAxiomSet;
using cover::Subset;

inline FiniteAxiomSet carrier_of(std::size_t n) {
  FiniteAxiomSet ax;
  for (std::size_t a = 0; a < n; ++a) ax.carrier.push_back(std::string(1, char('a' + a)));
  ax.axioms.resize(n);
  return ax;
}

/// Up to three axioms per atom, premises uniformly random.
inline FiniteAxiomSet random_axiom_set(std::mt19937& rng, std::size_t n) {
  FiniteAxiomSet ax = carrier_of(n);
  std::uniform_int_distribution<std::size_t> count(0, 3);
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t(1) << n) - 1);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) ax.axioms[a].push_back({"i" + std::to_string(i), Subset::from_mask(n, mask(rng))});
  }
  return ax;
}

inline Subset random_subset(std::mt19937& rng, std::size_t n) {
  return Subset::from_mask(n, std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t(1) << n) - 1)(rng));
}

/// Every axiom set on two atoms up to duplicate premises: each atom carries
/// a set of premise subsets, 16 choices per atom.
inline std::vector<FiniteAxiomSet> all_two_atom_sets() {
  std::vector<FiniteAxiomSet> out;
  for (unsigned ca = 0; ca < 16; ++ca)
    for (unsigned cb = 0; cb < 16; ++cb) {
      FiniteAxiomSet ax = carrier_of(2);
      unsigned choice[2] = {ca, cb};
      for (std::size_t a = 0; a < 2; ++a)
        for (unsigned m = 0; m < 4; ++m)
          if (choice[a] >> m & 1) ax.axioms[a].push_back({"p" + std::to_string(m), Subset::from_mask(2, m)});
      out.push_back(ax);
    }
  return out;
}

/// Whether X is closed under every axiom: premises inside X put the atom in X.
inline bool rule_closed(const FiniteAxiomSet& ax, std::uint64_t X) {
  for (std::size_t a = 0; a < ax.size(); ++a)
    for (const auto& r : ax.axioms[a])
      if ((r.premises.mask() & ~X) == 0 && !(X >> a & 1)) return false;
  return true;
}

/// Least cover as the meet of all rule-closed supersets of V, over bitmasks.
inline std::uint64_t oracle_least_cover(const FiniteAxiomSet& ax, std::uint64_t V) {
  const std::uint64_t full = (std::uint64_t(1) << ax.size()) - 1;
  std::uint64_t meet = full;
  for (std::uint64_t X = 0; X <= full; ++X)
    if ((V & ~X) == 0 && rule_closed(ax, X)) meet &= X;
  return meet;
}

/// A derivation is valid when every rf leaf is in V and every tr node uses an
/// existing axiom of its atom with one child per premise, in carrier order.
inline bool valid_derivation(const FiniteAxiomSet& ax, const Subset& V, const Derivation& d) {
  if (d.atom >= ax.size()) return false;
  if (d.rule == Derivation::Rule::Rf) return V.contains(d.atom) && d.children.empty();
  if (d.axiom >= ax.axioms[d.atom].size()) return false;
  const Subset& prem = ax.axioms[d.atom][d.axiom].premises;
  std::size_t c = 0;
  for (std::size_t b = 0; b < ax.size(); ++b) {
    if (!prem.contains(b)) continue;
    if (c >= d.children.size() || d.children[c].atom != b || !valid_derivation(ax, V, d.children[c])) return false;
    ++c;
  }
  return c == d.children.size();
}

}  // namespace wtt::testing
