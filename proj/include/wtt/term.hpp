#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace wtt {

// Core syntax. Binding is nameless: Var(k) refers to the k-th enclosing
// binder. Only Pi (codomain), Sigma (second component) and Lam (body) bind,
// each exactly one variable. Eliminator motives are ordinary Lam chains.
enum class Kind : std::uint8_t {
  Var,
  Const,
  Ann,  // (t : T)
  U,
  Empty,
  EmptyElim,  // absurd M e
  Unit,
  Star,
  UnitElim,  // unitElim M c u
  Pi,
  Lam,
  App,
  Sigma,
  Pair,
  Fst,
  Snd,
  Split,  // split M c z
  Sum,
  Inl,
  Inr,
  Case,  // case M l r s
  Id,
  Refl,
  J,  // J M c a b p
  W,
  Sup,
  WElim,  // elimW M d w
  DW,     // DW I N Br ar i
  DSup,
  DWElim,  // elimDW M d i w
  WP,      // WP I N R i
  Ind,
  WPElim,  // elimWP M c i w
  Cover,   // Cover A I C V a
  Rf,
  Tr,
  CoverElim,  // elimCover M q1 q2 a p
};

struct Span {
  int line = 0;
  int col = 0;
};

struct Node;
using Term = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  std::size_t index = 0;  // Var only
  std::string name;       // Const name; source name of the bound variable for Lam, Pi, Sigma
  std::vector<Term> kids;
  Span span;
};

/// Number of children a node of this kind carries.
std::size_t arity(Kind k);

/// Number of variables bound around child `child` (0 or 1).
std::size_t binds(Kind k, std::size_t child);

/// Surface keyword for keyword-headed forms ("elimW", "sup", ...); empty for
/// binder and atom forms.
std::string_view keyword(Kind k);

/// Number of leading children of an eliminator that are motives and how many
/// variables the motive abstracts. Returns {0,0} for non-eliminators.
struct MotiveShape {
  std::size_t binders = 0;
  bool present = false;
};
MotiveShape motive_shape(Kind k);

namespace build {
Term make(Kind k, std::vector<Term> kids, Span span = {});
// Binder node carrying the source name of its variable (diagnostics only).
Term binder(Kind k, std::vector<Term> kids, std::string hint, Span span = {});
Term var(std::size_t index);
Term cnst(std::string name);
Term ann(Term t, Term ty);
Term univ();
Term empty();
Term unit();
Term star();
Term pi(Term dom, Term cod);
Term arrow(Term dom, Term cod);  // non-dependent: codomain is weakened
Term lam(Term body);
Term app(Term f, Term a);
Term app(Term f, std::initializer_list<Term> args);
Term sigma(Term fst, Term snd);
Term pair(Term a, Term b);
Term fst(Term z);
Term snd(Term z);
Term sum(Term l, Term r);
Term inl(Term a);
Term inr(Term b);
Term id(Term ty, Term lhs, Term rhs);
Term refl(Term a);
Term w(Term a, Term b);
Term sup(Term a, Term f);
}  // namespace build

/// Shift free indices >= cutoff up by amount.
Term weaken(const Term& t, std::size_t cutoff, std::size_t amount);

/// Replace index j by s, decrementing indices above j. `s` lives in the
/// context with j removed.
Term subst(const Term& t, std::size_t j, const Term& s);

/// Syntactic (alpha) equality; source spans are ignored.
bool structural_eq(const Term& a, const Term& b);

/// True if index `j` (relative to the root) occurs free in t.
bool occurs_free(const Term& t, std::size_t j);

}  // namespace wtt
