#include "wtt/term.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace wtt {

std::size_t arity(Kind k) {
  switch (k) {
    case Kind::Var:
    case Kind::Const:
    case Kind::U:
    case Kind::Empty:
    case Kind::Unit:
    case Kind::Star:
      return 0;
    case Kind::Lam:
    case Kind::Fst:
    case Kind::Snd:
    case Kind::Inl:
    case Kind::Inr:
    case Kind::Refl:
      return 1;
    case Kind::Ann:
    case Kind::EmptyElim:
    case Kind::Pi:
    case Kind::App:
    case Kind::Sigma:
    case Kind::Pair:
    case Kind::Sum:
    case Kind::W:
    case Kind::Sup:
    case Kind::Rf:
      return 2;
    case Kind::UnitElim:
    case Kind::Split:
    case Kind::Id:
    case Kind::WElim:
    case Kind::DSup:
    case Kind::Ind:
    case Kind::Tr:
      return 3;
    case Kind::Case:
    case Kind::DWElim:
    case Kind::WP:
    case Kind::WPElim:
      return 4;
    case Kind::J:
    case Kind::DW:
    case Kind::Cover:
    case Kind::CoverElim:
      return 5;
  }
  return 0;
}

std::size_t binds(Kind k, std::size_t child) {
  switch (k) {
    case Kind::Pi:
    case Kind::Sigma:
      return child == 1 ? 1 : 0;
    case Kind::Lam:
      return 1;
    default:
      return 0;
  }
}

std::string_view keyword(Kind k) {
  switch (k) {
    case Kind::U: return "U0";
    case Kind::Empty: return "N0";
    case Kind::Unit: return "N1";
    case Kind::Star: return "star";
    case Kind::EmptyElim: return "absurd";
    case Kind::UnitElim: return "unitElim";
    case Kind::Pair: return "pair";
    case Kind::Fst: return "fst";
    case Kind::Snd: return "snd";
    case Kind::Split: return "split";
    case Kind::Sum: return "Sum";
    case Kind::Inl: return "inl";
    case Kind::Inr: return "inr";
    case Kind::Case: return "case";
    case Kind::Id: return "Id";
    case Kind::Refl: return "refl";
    case Kind::J: return "J";
    case Kind::W: return "W";
    case Kind::Sup: return "sup";
    case Kind::WElim: return "elimW";
    case Kind::DW: return "DW";
    case Kind::DSup: return "dsup";
    case Kind::DWElim: return "elimDW";
    case Kind::WP: return "WP";
    case Kind::Ind: return "ind";
    case Kind::WPElim: return "elimWP";
    case Kind::Cover: return "Cover";
    case Kind::Rf: return "rf";
    case Kind::Tr: return "tr";
    case Kind::CoverElim: return "elimCover";
    default: return {};
  }
}

MotiveShape motive_shape(Kind k) {
  switch (k) {
    case Kind::EmptyElim:
    case Kind::UnitElim:
    case Kind::Split:
    case Kind::Case:
    case Kind::WElim:
      return {1, true};
    case Kind::J:
    case Kind::DWElim:
    case Kind::WPElim:
    case Kind::CoverElim:
      return {2, true};
    default:
      return {};
  }
}

namespace build {

Term make(Kind k, std::vector<Term> kids, Span span) {
  if (kids.size() != arity(k)) throw std::logic_error("wrong child count for term node");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->kids = std::move(kids);
  n->span = span;
  return n;
}

Term binder(Kind k, std::vector<Term> kids, std::string hint, Span span) {
  if (kids.size() != arity(k)) throw std::logic_error("wrong child count for term node");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(hint);
  n->kids = std::move(kids);
  n->span = span;
  return n;
}

Term var(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->index = index;
  return n;
}

Term cnst(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->name = std::move(name);
  return n;
}

Term ann(Term t, Term ty) { return make(Kind::Ann, {std::move(t), std::move(ty)}); }
Term univ() { return make(Kind::U, {}); }
Term empty() { return make(Kind::Empty, {}); }
Term unit() { return make(Kind::Unit, {}); }
Term star() { return make(Kind::Star, {}); }
Term pi(Term dom, Term cod) { return make(Kind::Pi, {std::move(dom), std::move(cod)}); }
Term arrow(Term dom, Term cod) { return pi(std::move(dom), weaken(cod, 0, 1)); }
Term lam(Term body) { return make(Kind::Lam, {std::move(body)}); }
Term app(Term f, Term a) { return make(Kind::App, {std::move(f), std::move(a)}); }
Term app(Term f, std::initializer_list<Term> args) {
  for (const auto& a : args) f = app(std::move(f), a);
  return f;
}
Term sigma(Term a, Term b) { return make(Kind::Sigma, {std::move(a), std::move(b)}); }
Term pair(Term a, Term b) { return make(Kind::Pair, {std::move(a), std::move(b)}); }
Term fst(Term z) { return make(Kind::Fst, {std::move(z)}); }
Term snd(Term z) { return make(Kind::Snd, {std::move(z)}); }
Term sum(Term l, Term r) { return make(Kind::Sum, {std::move(l), std::move(r)}); }
Term inl(Term a) { return make(Kind::Inl, {std::move(a)}); }
Term inr(Term b) { return make(Kind::Inr, {std::move(b)}); }
Term id(Term ty, Term l, Term r) { return make(Kind::Id, {std::move(ty), std::move(l), std::move(r)}); }
Term refl(Term a) { return make(Kind::Refl, {std::move(a)}); }
Term w(Term a, Term b) { return make(Kind::W, {std::move(a), std::move(b)}); }
Term sup(Term a, Term f) { return make(Kind::Sup, {std::move(a), std::move(f)}); }

}  // namespace build

namespace {

// Rebuild `t` with each child mapped through `f(child, extra_depth)`; shares
// the original node when nothing changed.
template <class F>
Term map_kids(const Term& t, std::size_t depth, F&& f) {
  bool changed = false;
  std::vector<Term> kids;
  kids.reserve(t->kids.size());
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    kids.push_back(f(t->kids[i], depth + binds(t->kind, i)));
    changed = changed || kids.back() != t->kids[i];
  }
  if (!changed) return t;
  auto n = std::make_shared<Node>(*t);
  n->kids = std::move(kids);
  return n;
}

Term weaken_at(const Term& t, std::size_t cutoff, std::size_t amount) {
  if (t->kind == Kind::Var) {
    if (t->index < cutoff) return t;
    auto n = std::make_shared<Node>(*t);
    n->index += amount;
    return n;
  }
  return map_kids(t, cutoff, [amount](const Term& k, std::size_t c) { return weaken_at(k, c, amount); });
}

Term subst_at(const Term& t, std::size_t j, const Term& s, std::size_t depth) {
  if (t->kind == Kind::Var) {
    if (t->index == j + depth) return depth == 0 ? s : weaken_at(s, 0, depth);
    if (t->index > j + depth) {
      auto n = std::make_shared<Node>(*t);
      n->index -= 1;
      return n;
    }
    return t;
  }
  return map_kids(t, depth, [&](const Term& k, std::size_t d) { return subst_at(k, j, s, d); });
}

bool occurs_at(const Term& t, std::size_t j) {
  if (t->kind == Kind::Var) return t->index == j;
  for (std::size_t i = 0; i < t->kids.size(); ++i)
    if (occurs_at(t->kids[i], j + binds(t->kind, i))) return true;
  return false;
}

}  // namespace

Term weaken(const Term& t, std::size_t cutoff, std::size_t amount) {
  if (amount == 0) return t;
  return weaken_at(t, cutoff, amount);
}

Term subst(const Term& t, std::size_t j, const Term& s) { return subst_at(t, j, s, 0); }

bool occurs_free(const Term& t, std::size_t j) { return occurs_at(t, j); }

bool structural_eq(const Term& a, const Term& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Var:
      return a->index == b->index;
    case Kind::Const:
      return a->name == b->name;
    default:
      break;
  }
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!structural_eq(a->kids[i], b->kids[i])) return false;
  return true;
}

}  // namespace wtt
