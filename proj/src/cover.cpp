#include "wtt/cover.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <omp.h>

namespace wtt::cover {

Subset Subset::from_mask(std::size_t size, std::uint64_t mask) {
  Subset s(size);
  for (std::size_t i = 0; i < size; ++i)
    if ((mask >> i) & 1U) s.insert(i);
  return s;
}

std::size_t Subset::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

bool Subset::subset_of(const Subset& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

Subset Subset::operator|(const Subset& other) const {
  Subset out(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (bits_[i] || other.bits_[i]) out.insert(i);
  return out;
}

Subset Subset::operator&(const Subset& other) const {
  Subset out(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (bits_[i] && other.bits_[i]) out.insert(i);
  return out;
}

std::uint64_t Subset::mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits_.size() && i < 64; ++i)
    if (bits_[i]) m |= std::uint64_t{1} << i;
  return m;
}

std::optional<std::size_t> FiniteAxiomSet::atom(std::string_view name) const {
  auto it = std::find(carrier.begin(), carrier.end(), name);
  if (it == carrier.end()) return std::nullopt;
  return static_cast<std::size_t>(it - carrier.begin());
}

std::string FiniteAxiomSet::show(const Subset& s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s.contains(i)) continue;
    out += (first ? "" : ", ") + carrier[i];
    first = false;
  }
  return out + "}";
}

FormatError::FormatError(int l, const std::string& message)
    : std::runtime_error("line " + std::to_string(l) + ": " + message), line(l) {}

FiniteAxiomSet load_axiom_set(std::string_view text) {
  FiniteAxiomSet ax;
  bool have_carrier = false;
  struct PendingQuery {
    int line;
    std::size_t atom;
    std::string subset;
  };
  std::vector<PendingQuery> pending;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string spaced;
    for (char c : raw) {
      if (c == ':') {
        spaced += " : ";
      } else {
        spaced += c;
      }
    }
    std::istringstream words(spaced);
    std::vector<std::string> w;
    for (std::string tok; words >> tok;) w.push_back(tok);
    if (w.empty()) continue;

    auto atom_of = [&](const std::string& name) {
      auto a = ax.atom(name);
      if (!a) throw FormatError(lineno, "unknown atom '" + name + "'");
      return *a;
    };
    auto atoms_after_colon = [&](std::size_t colon) {
      Subset s(ax.size());
      for (std::size_t k = colon + 1; k < w.size(); ++k) s.insert(atom_of(w[k]));
      return s;
    };

    const std::string& head = w[0];
    if (head == "carrier") {
      if (have_carrier) throw FormatError(lineno, "carrier declared twice");
      if (w.size() < 2) throw FormatError(lineno, "carrier needs at least one atom");
      for (std::size_t k = 1; k < w.size(); ++k) {
        if (w[k] == ":") throw FormatError(lineno, "unexpected ':' in carrier");
        if (ax.atom(w[k])) throw FormatError(lineno, "duplicate atom '" + w[k] + "'");
        ax.carrier.push_back(w[k]);
      }
      if (ax.size() > 64) throw FormatError(lineno, "carrier larger than 64 atoms");
      ax.axioms.resize(ax.size());
      have_carrier = true;
      continue;
    }
    if (!have_carrier) throw FormatError(lineno, "expected 'carrier' first");
    if (head == "axiom") {
      if (w.size() < 4 || w[3] != ":") throw FormatError(lineno, "expected 'axiom <atom> <label> : <atom>*'");
      std::size_t a = atom_of(w[1]);
      for (const auto& existing : ax.axioms[a])
        if (existing.label == w[2]) throw FormatError(lineno, "duplicate label '" + w[2] + "' for atom " + w[1]);
      ax.axioms[a].push_back({w[2], atoms_after_colon(3)});
    } else if (head == "subset") {
      if (w.size() < 3 || w[2] != ":") throw FormatError(lineno, "expected 'subset <name> : <atom>*'");
      for (const auto& s : ax.subsets)
        if (s.name == w[1]) throw FormatError(lineno, "duplicate subset '" + w[1] + "'");
      ax.subsets.push_back({w[1], atoms_after_colon(2)});
    } else if (head == "query") {
      if (w.size() != 3) throw FormatError(lineno, "expected 'query <atom> <subset>'");
      pending.push_back({lineno, atom_of(w[1]), w[2]});
    } else {
      throw FormatError(lineno, "unknown directive '" + head + "'");
    }
  }
  if (!have_carrier) throw FormatError(lineno, "missing carrier");
  for (const auto& q : pending) {
    auto it = std::find_if(ax.subsets.begin(), ax.subsets.end(), [&](const NamedSubset& s) { return s.name == q.subset; });
    if (it == ax.subsets.end()) throw FormatError(q.line, "unknown subset '" + q.subset + "'");
    ax.queries.push_back({q.atom, static_cast<std::size_t>(it - ax.subsets.begin())});
  }
  return ax;
}

namespace {

bool fires(const FiniteAxiomSet& ax, std::size_t a, const Subset& X) {
  for (const auto& axiom : ax.axioms[a])
    if (axiom.premises.subset_of(X)) return true;
  return false;
}

Subset step(const FiniteAxiomSet& ax, const Subset& V, const Subset& X) {
  Subset next(ax.size());
  for (std::size_t a = 0; a < ax.size(); ++a)
    if (V.contains(a) || fires(ax, a, X)) next.insert(a);
  return next;
}

}  // namespace

std::vector<Subset> kleene_rounds(const FiniteAxiomSet& ax, const Subset& V) {
  std::vector<Subset> rounds{Subset(ax.size())};
  for (;;) {
    Subset next = step(ax, V, rounds.back());
    bool stable = next == rounds.back();
    rounds.push_back(std::move(next));
    if (stable) return rounds;
  }
}

Subset least_cover(const FiniteAxiomSet& ax, const Subset& V) {
  Subset X(ax.size());
  for (;;) {
    Subset next = step(ax, V, X);
    if (next == X) return X;
    X = std::move(next);
  }
}

Subset least_cover_parallel(const FiniteAxiomSet& ax, const Subset& V) {
  const auto n = static_cast<std::ptrdiff_t>(ax.size());
  std::vector<char> cur(ax.size(), 0), next(ax.size(), 0);
  for (bool changed = true; changed;) {
    Subset X(ax.size());
    for (std::size_t a = 0; a < ax.size(); ++a)
      if (cur[a]) X.insert(a);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t a = 0; a < n; ++a) {
      auto i = static_cast<std::size_t>(a);
      next[i] = (V.contains(i) || fires(ax, i, X)) ? 1 : 0;
    }
    changed = next != cur;
    cur.swap(next);
  }
  Subset out(ax.size());
  for (std::size_t a = 0; a < ax.size(); ++a)
    if (cur[a]) out.insert(a);
  return out;
}

Subset brute_force_min_cover(const FiniteAxiomSet& ax, const Subset& V) {
  const std::size_t n = ax.size();
  if (n > kBruteForceLimit)
    throw std::invalid_argument("brute_force_min_cover: carrier of " + std::to_string(n) + " atoms exceeds the bound of " +
                                std::to_string(kBruteForceLimit));
  Subset meet = Subset::full(n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Subset X = Subset::from_mask(n, m);
    if (!V.subset_of(X)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      if (!X.contains(a) && fires(ax, a, X)) closed = false;
    if (closed) meet = meet & X;
  }
  return meet;
}

namespace {

Derivation derive(const FiniteAxiomSet& ax, const Subset& V, const std::vector<Subset>& rounds, std::size_t a) {
  if (V.contains(a)) return {Derivation::Rule::Rf, a, 0, {}};
  std::size_t r = 1;
  while (!rounds[r].contains(a)) ++r;
  const Subset& earlier = rounds[r - 1];
  for (std::size_t i = 0; i < ax.axioms[a].size(); ++i) {
    const Subset& prem = ax.axioms[a][i].premises;
    if (!prem.subset_of(earlier)) continue;
    Derivation d{Derivation::Rule::Tr, a, i, {}};
    for (std::size_t b = 0; b < ax.size(); ++b)
      if (prem.contains(b)) d.children.push_back(derive(ax, V, rounds, b));
    return d;
  }
  throw std::logic_error("derivation: atom entered a round without a firing axiom");
}

}  // namespace

std::optional<Derivation> derivation(const FiniteAxiomSet& ax, const Subset& V, std::size_t atom) {
  auto rounds = kleene_rounds(ax, V);
  if (!rounds.back().contains(atom)) return std::nullopt;
  return derive(ax, V, rounds, atom);
}

std::string render(const FiniteAxiomSet& ax, const Derivation& d, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (d.rule == Derivation::Rule::Rf) return pad + "rf " + ax.carrier[d.atom] + "\n";
  std::string out = pad + "tr " + ax.carrier[d.atom] + " " + ax.axioms[d.atom][d.axiom].label + "\n";
  for (const auto& c : d.children) out += render(ax, c, indent + 2);
  return out;
}

// ---- kernel rendering -------------------------------------------------------

namespace {

// Element k of a right-nested sum of n copies of N1 (n >= 1).
std::string finite_element(std::size_t n, std::size_t k) {
  if (n == 1) return "star";
  if (k == 0) return "(inl star)";
  return "(inr " + finite_element(n - 1, k - 1) + ")";
}

std::string finite_type(std::size_t n) {
  if (n == 0) return "N0";
  if (n == 1) return "N1";
  return "(Sum N1 " + finite_type(n - 1) + ")";
}

std::string wrap_inr(std::size_t times, const std::string& x) {
  std::string out = x;
  for (std::size_t i = 0; i < times; ++i) out = "(inr " + out + ")";
  return out;
}

// A function (x : Fin n) -> M (inr^offset x) defined by cases, where
// `motive(e)` is the type at element expression e and `leaf(k)` inhabits
// motive(element k) for k counted from the start of the full type.
template <class Motive, class Leaf>
std::string by_cases(std::size_t n, std::size_t offset, const Motive& motive, const Leaf& leaf, int& fresh) {
  std::string x = "x" + std::to_string(fresh++);
  std::string u = "u" + std::to_string(fresh++);
  if (n == 1) {
    return "(fun " + x + " => unitElim (fun " + u + " => " + motive(wrap_inr(offset, u)) + ") " + leaf(offset) + " " +
           x + ")";
  }
  std::string y = "y" + std::to_string(fresh++);
  std::string v = "v" + std::to_string(fresh++);
  std::string left = "(fun " + u + " => unitElim (fun " + v + " => " + motive(wrap_inr(offset, "(inl " + v + ")")) +
                     ") " + leaf(offset) + " " + u + ")";
  std::string right = by_cases(n - 1, offset + 1, motive, leaf, fresh);
  return "(fun " + x + " => case (fun " + y + " => " + motive(wrap_inr(offset, y)) + ") " + left + " " + right + " " +
         x + ")";
}

// A function over a finite type of `n` elements (n may be 0) with a constant
// result type.
template <class Leaf>
std::string constant_cases(std::size_t n, const std::string& result, const Leaf& leaf, int& fresh) {
  if (n == 0) {
    std::string x = "x" + std::to_string(fresh++);
    return "(fun " + x + " => absurd (fun _ => " + result + ") " + x + ")";
  }
  return by_cases(n, 0, [&](const std::string&) { return result; }, leaf, fresh);
}

std::string predicate(const Subset& s, int& fresh) {
  return constant_cases(s.size(), "U0", [&](std::size_t k) { return s.contains(k) ? "N1" : "N0"; }, fresh);
}

}  // namespace

std::string KernelInstance::goal_type(std::size_t atom) const { return "Cover A I C V " + atom_terms[atom]; }

KernelInstance kernel_instance(const FiniteAxiomSet& ax, const Subset& V) {
  const std::size_t n = ax.size();
  KernelInstance ki;
  for (std::size_t k = 0; k < n; ++k) ki.atom_terms.push_back(finite_element(n, k));
  int fresh = 0;
  std::string labels = constant_cases(n, "U0", [&](std::size_t k) { return finite_type(ax.axioms[k].size()); }, fresh);
  auto premise_table = [&](std::size_t k) {
    const auto& axs = ax.axioms[k];
    return constant_cases(axs.size(), "A -> U0", [&](std::size_t i) { return predicate(axs[i].premises, fresh); },
                          fresh);
  };
  std::string axioms = by_cases(n, 0, [](const std::string& e) { return "I " + e + " -> A -> U0"; }, premise_table, fresh);
  ki.declarations = "def A : U0 := " + finite_type(n) + "\n" + "def I : A -> U0 := " + labels + "\n" +
                    "def C : (a : A) -> I a -> A -> U0 := " + axioms + "\n" + "def V : A -> U0 := " +
                    predicate(V, fresh) + "\n";
  return ki;
}

namespace {

std::string proof(const FiniteAxiomSet& ax, const KernelInstance& ki, const Derivation& d, int& fresh) {
  const std::string& a = ki.atom_terms[d.atom];
  if (d.rule == Derivation::Rule::Rf) return "(rf " + a + " star)";
  const Subset& prem = ax.axioms[d.atom][d.axiom].premises;
  std::string label = finite_element(ax.axioms[d.atom].size(), d.axiom);
  std::size_t child = 0;
  std::vector<std::string> children(ax.size());
  for (std::size_t b = 0; b < ax.size(); ++b)
    if (prem.contains(b)) children[b] = proof(ax, ki, d.children[child++], fresh);
  auto motive = [&](const std::string& e) { return "C " + a + " " + label + " " + e + " -> Cover A I C V " + e; };
  auto leaf = [&](std::size_t b) {
    std::string z = "z" + std::to_string(fresh++);
    if (prem.contains(b)) return "(fun " + z + " => " + children[b] + ")";
    return "(fun " + z + " => absurd (fun _ => Cover A I C V " + ki.atom_terms[b] + ") " + z + ")";
  };
  return "(tr " + a + " " + label + " " + by_cases(ax.size(), 0, motive, leaf, fresh) + ")";
}

}  // namespace

std::string extract_proof_term(const FiniteAxiomSet& ax, const Subset& V, const Derivation& d) {
  KernelInstance ki = kernel_instance(ax, V);
  int fresh = 0;
  return proof(ax, ki, d, fresh);
}

}  // namespace wtt::cover
