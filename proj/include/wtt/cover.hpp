#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wtt/term.hpp"

namespace wtt::cover {

// Subset of a finite carrier, one bit per atom in carrier order.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t size) : bits_(size, false) {}
  static Subset full(std::size_t size) { return Subset(std::vector<bool>(size, true)); }
  static Subset from_mask(std::size_t size, std::uint64_t mask);

  std::size_t size() const { return bits_.size(); }
  bool contains(std::size_t atom) const { return bits_[atom]; }
  void insert(std::size_t atom) { bits_[atom] = true; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  bool subset_of(const Subset& other) const;
  Subset operator|(const Subset& other) const;
  Subset operator&(const Subset& other) const;
  bool operator==(const Subset&) const = default;

  std::uint64_t mask() const;

 private:
  explicit Subset(std::vector<bool> bits) : bits_(std::move(bits)) {}
  std::vector<bool> bits_;
};

struct Axiom {
  std::string label;
  Subset premises;  // C(a, i)
};

struct NamedSubset {
  std::string name;
  Subset atoms;
};

struct Query {
  std::size_t atom;
  std::size_t subset;  // index into FiniteAxiomSet::subsets
};

// Finite carrier with, for each atom, an ordered list of axioms a <| C(a, i).
struct FiniteAxiomSet {
  std::vector<std::string> carrier;
  std::vector<std::vector<Axiom>> axioms;  // indexed by atom
  std::vector<NamedSubset> subsets;
  std::vector<Query> queries;

  std::size_t size() const { return carrier.size(); }
  std::optional<std::size_t> atom(std::string_view name) const;
  std::string show(const Subset& s) const;  // "{a, b}"
};

struct FormatError : std::runtime_error {
  FormatError(int line, const std::string& message);
  int line;
};

FiniteAxiomSet load_axiom_set(std::string_view text);

/// Least fixpoint of X |-> V u { a | some C(a,i) <= X }, by Kleene iteration
/// from the empty set.
Subset least_cover(const FiniteAxiomSet& ax, const Subset& V);

/// Same result; each round evaluates atoms in parallel.
Subset least_cover_parallel(const FiniteAxiomSet& ax, const Subset& V);

/// Every Kleene iterate, starting with the empty set and ending at the
/// fixpoint (the last two entries are equal unless V is empty and no
/// axiom fires, in which case the list is {∅, ∅}).
std::vector<Subset> kleene_rounds(const FiniteAxiomSet& ax, const Subset& V);

/// Intersection of every rule-closed superset of V. Exponential; refuses
/// carriers larger than kBruteForceLimit.
constexpr std::size_t kBruteForceLimit = 12;
Subset brute_force_min_cover(const FiniteAxiomSet& ax, const Subset& V);

struct Derivation {
  enum class Rule { Rf, Tr } rule;
  std::size_t atom;
  std::size_t axiom = 0;  // index into ax.axioms[atom] for Tr
  std::vector<Derivation> children;  // one per premise atom, in carrier order, for Tr
};

/// A derivation of `atom` from V, or nothing when the atom is not covered.
std::optional<Derivation> derivation(const FiniteAxiomSet& ax, const Subset& V, std::size_t atom);

/// Indented tree text, one node per line.
std::string render(const FiniteAxiomSet& ax, const Derivation& d, int indent = 0);

// Kernel rendering of a finite instance: atoms as right-nested sums of N1,
// predicates by case analysis into U0.
struct KernelInstance {
  std::string declarations;  // surface text defining A, I, C, V
  std::string goal_type(std::size_t atom) const;  // "Cover A I C V <atom>"
  std::vector<std::string> atom_terms;
};

KernelInstance kernel_instance(const FiniteAxiomSet& ax, const Subset& V);

/// Surface proof term of type `Cover A I C V a` for the derivation.
std::string extract_proof_term(const FiniteAxiomSet& ax, const Subset& V, const Derivation& d);

}  // namespace wtt::cover
