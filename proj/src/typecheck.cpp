#include "wtt/typecheck.hpp"

#include <algorithm>
#include <utility>

#include "wtt/normalize.hpp"

namespace wtt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Mismatch: return "mismatch";
    case ErrorKind::Unbound: return "unbound";
    case ErrorKind::NotAFunction: return "not-a-function";
    case ErrorKind::NotAUniverse: return "not-a-universe";
    case ErrorKind::MotiveShape: return "motive-shape";
    case ErrorKind::FlagRequired: return "flag-required";
  }
  return "unknown";
}

TypeError::TypeError(ErrorKind k, std::string d, Span where, Term exp, Term fnd, std::vector<std::string> sc)
    : std::runtime_error(d),
      kind(k),
      detail(std::move(d)),
      location(where),
      expected(std::move(exp)),
      found(std::move(fnd)),
      scope(std::move(sc)) {}

std::string TypeError::render() const {
  std::string out;
  if (!decl.empty()) out += decl + ":";
  out += std::to_string(location.line) + ":" + std::to_string(location.col) + ": ";
  out += std::string(to_string(kind)) + ": " + detail;
  // Shadowed names get a numeric suffix so that the printed terms stay unambiguous.
  std::vector<std::string> names;
  for (const auto& n : scope) {
    std::string unique = n;
    for (int k = 1; std::find(names.begin(), names.end(), unique) != names.end(); ++k) unique = n + std::to_string(k);
    names.push_back(unique);
  }
  if (expected) out += "; expected " + pretty(expected, names);
  if (found) out += "; found " + pretty(found, names);
  return out;
}

namespace {

using build::make;

std::string hint(const Term& binder) { return binder->name.empty() ? "_" : binder->name; }

const char* describe(Kind k) {
  switch (k) {
    case Kind::Lam: return "a lambda";
    case Kind::Pair: return "a pair";
    case Kind::Inl:
    case Kind::Inr: return "an injection";
    case Kind::Sup: return "sup";
    case Kind::DSup: return "dsup";
    case Kind::Ind: return "ind";
    case Kind::Rf: return "rf";
    case Kind::Tr: return "tr";
    default: return "this term";
  }
}

// Value of the innermost local of ctx (a fresh neutral for assumptions).
Val top(const Context& ctx) { return ctx.env().lookup(0); }

}  // namespace

Term Checker::show_type(const Context& ctx, const Val& ty) const {
  try {
    return readback_type(ty, flags_, ctx.depth());
  } catch (const EvalError&) {
    return build::cnst("<unprintable>");
  }
}

void Checker::fail(const Context& ctx, ErrorKind kind, const Term& at, std::string detail, Term expected,
                   Term found) {
  throw TypeError(kind, std::move(detail), at ? at->span : Span{}, std::move(expected), std::move(found), ctx.names());
}

void Checker::expect_conv(const Context& ctx, const Term& at, const Val& a, const Val& b, const Val& type) {
  if (conv_values(a, b, type, flags_, ctx.depth())) return;
  fail(ctx, ErrorKind::Mismatch, at, "terms are not convertible", readback(b, type, flags_, ctx.depth()),
       readback(a, type, flags_, ctx.depth()));
}

void Checker::expect_type_conv(const Context& ctx, const Term& at, const Val& found, const Val& expected) {
  if (conv_types(found, expected, flags_, ctx.depth())) return;
  fail(ctx, ErrorKind::Mismatch, at, "type mismatch", show_type(ctx, expected), show_type(ctx, found));
}

void Checker::check_family(const Context& ctx, const Term& motive, const Val& dom) {
  if (motive->kind != Kind::Lam) fail(ctx, ErrorKind::MotiveShape, motive, "motive must abstract 1 variable");
  const Term& body = motive->kids[0];
  if (body->kind == Kind::Lam) fail(ctx, ErrorKind::MotiveShape, motive, "motive abstracts too many variables");
  check_type(ctx.bind(hint(motive), dom), body);
}

void Checker::check_family(const Context& ctx, const Term& motive, const Val& dom,
                           const std::function<Val(const Val&)>& dom2) {
  if (motive->kind != Kind::Lam || motive->kids[0]->kind != Kind::Lam)
    fail(ctx, ErrorKind::MotiveShape, motive, "motive must abstract 2 variables");
  const Term& body = motive->kids[0]->kids[0];
  if (body->kind == Kind::Lam) fail(ctx, ErrorKind::MotiveShape, motive, "motive abstracts too many variables");
  Context c1 = ctx.bind(hint(motive), dom);
  Context c2 = c1.bind(hint(motive->kids[0]), dom2(top(c1)));
  check_type(c2, body);
}

Val Checker::check_type(const Context& ctx, const Term& t) {
  switch (t->kind) {
    case Kind::U:
      return vuniv();
    case Kind::Pi:
    case Kind::Sigma: {
      Val dom = check_type(ctx, t->kids[0]);
      check_type(ctx.bind(hint(t), dom), t->kids[1]);
      return eval(ctx, t);
    }
    case Kind::Sum:
      check_type(ctx, t->kids[0]);
      check_type(ctx, t->kids[1]);
      return eval(ctx, t);
    case Kind::Id: {
      Val a = check_type(ctx, t->kids[0]);
      check(ctx, t->kids[1], a);
      check(ctx, t->kids[2], a);
      return eval(ctx, t);
    }
    default: {
      Val ty = infer(ctx, t);
      if (as<VU>(ty) == nullptr)
        fail(ctx, ErrorKind::NotAUniverse, t, "expected a type", build::univ(), show_type(ctx, ty));
      return eval(ctx, t);
    }
  }
}

void Checker::check(const Context& ctx, const Term& t, const Val& ty) {
  const auto& k = t->kids;
  auto mismatch = [&]() {
    fail(ctx, ErrorKind::Mismatch, t, std::string(describe(t->kind)) + " cannot have this type", show_type(ctx, ty));
  };
  switch (t->kind) {
    case Kind::Lam: {
      const auto* pi = as<VPi>(ty);
      if (pi == nullptr) mismatch();
      Context inner = ctx.bind(hint(t), pi->dom);
      check(inner, k[0], pi->cod(top(inner)));
      return;
    }
    case Kind::Pair: {
      const auto* sg = as<VSigma>(ty);
      if (sg == nullptr) mismatch();
      check(ctx, k[0], sg->fst);
      check(ctx, k[1], sg->snd(eval(ctx, k[0])));
      return;
    }
    case Kind::Inl:
    case Kind::Inr: {
      const auto* sm = as<VSum>(ty);
      if (sm == nullptr) mismatch();
      check(ctx, k[0], t->kind == Kind::Inl ? sm->left : sm->right);
      return;
    }
    case Kind::Refl: {
      const auto* id = as<VId>(ty);
      if (id == nullptr) break;
      check(ctx, k[0], id->type);
      Val a = eval(ctx, k[0]);
      expect_conv(ctx, t, a, id->lhs, id->type);
      expect_conv(ctx, t, a, id->rhs, id->type);
      return;
    }
    case Kind::Sup: {
      const auto* w = as<VW>(ty);
      if (w == nullptr) break;
      check(ctx, k[0], w->label);
      check(ctx, k[1], sig::sup_fn(w->label, w->branch, eval(ctx, k[0])));
      return;
    }
    case Kind::DSup: {
      const auto* dw = as<VDW>(ty);
      if (dw == nullptr) mismatch();
      check(ctx, k[0], dw->index_type);
      Val i = eval(ctx, k[0]);
      expect_conv(ctx, k[0], i, dw->index, dw->index_type);
      check(ctx, k[1], vapply(dw->names, i));
      check(ctx, k[2], sig::dsup_fn(dw->index_type, dw->names, dw->branch, dw->arity, i, eval(ctx, k[1])));
      return;
    }
    case Kind::Ind: {
      const auto* wp = as<VWP>(ty);
      if (wp == nullptr) mismatch();
      check(ctx, k[0], wp->index_type);
      Val i = eval(ctx, k[0]);
      expect_conv(ctx, k[0], i, wp->index, wp->index_type);
      check(ctx, k[1], vapply(wp->names, i));
      check(ctx, k[2], sig::ind_fn(wp->index_type, wp->names, wp->premises, i, eval(ctx, k[1])));
      return;
    }
    case Kind::Rf:
    case Kind::Tr: {
      const auto* cv = as<VCover>(ty);
      if (cv == nullptr) mismatch();
      check(ctx, k[0], cv->carrier);
      Val a = eval(ctx, k[0]);
      expect_conv(ctx, k[0], a, cv->elem, cv->carrier);
      if (t->kind == Kind::Rf) {
        check(ctx, k[1], vapply(cv->subset, a));
      } else {
        check(ctx, k[1], vapply(cv->labels, a));
        check(ctx, k[2], sig::tr_fn(cv->carrier, cv->labels, cv->axioms, cv->subset, a, eval(ctx, k[1])));
      }
      return;
    }
    default:
      break;
  }
  Val found = infer(ctx, t);
  expect_type_conv(ctx, t, found, ty);
}

Val Checker::infer(const Context& ctx, const Term& t) {
  const auto& k = t->kids;
  auto small = [&](std::size_t i) { check(ctx, k[i], vuniv()); return eval(ctx, k[i]); };
  auto value = [&](std::size_t i) { return eval(ctx, k[i]); };
  switch (t->kind) {
    case Kind::Var:
      if (t->index >= ctx.depth()) fail(ctx, ErrorKind::Unbound, t, "variable out of scope");
      return ctx.type_of(t->index);
    case Kind::Const: {
      const auto* e = globals_.find(t->name);
      if (e == nullptr) fail(ctx, ErrorKind::Unbound, t, "unbound constant " + t->name);
      return e->type_value;
    }
    case Kind::Ann: {
      Val ty = check_type(ctx, k[1]);
      check(ctx, k[0], ty);
      return ty;
    }
    case Kind::U:
      fail(ctx, ErrorKind::NotAUniverse, t, "U0 is not an element of a universe");
    case Kind::Empty:
    case Kind::Unit:
      return vuniv();
    case Kind::Star:
      return mk(VUnit{});
    case Kind::Pi:
    case Kind::Sigma: {
      Val dom = small(0);
      check(ctx.bind(hint(t), dom), k[1], vuniv());
      return vuniv();
    }
    case Kind::Sum:
      small(0);
      small(1);
      return vuniv();
    case Kind::Id: {
      Val a = small(0);
      check(ctx, k[1], a);
      check(ctx, k[2], a);
      return vuniv();
    }
    case Kind::W: {
      Val A = small(0);
      check(ctx, k[1], sig::family(A));
      return vuniv();
    }
    case Kind::DW: {
      Val I = small(0);
      check(ctx, k[1], sig::family(I));
      Val N = value(1);
      check(ctx, k[2], sig::dw_branch(I, N));
      check(ctx, k[3], sig::dw_arity(I, N, value(2)));
      check(ctx, k[4], I);
      return vuniv();
    }
    case Kind::WP: {
      Val I = small(0);
      check(ctx, k[1], sig::family(I));
      check(ctx, k[2], sig::wp_premises(I, value(1)));
      check(ctx, k[3], I);
      return vuniv();
    }
    case Kind::Cover: {
      Val A = small(0);
      check(ctx, k[1], sig::family(A));
      check(ctx, k[2], sig::cover_axioms(A, value(1)));
      check(ctx, k[3], sig::family(A));
      check(ctx, k[4], A);
      return vuniv();
    }
    case Kind::App: {
      Val fty = infer(ctx, k[0]);
      const auto* pi = as<VPi>(fty);
      if (pi == nullptr)
        fail(ctx, ErrorKind::NotAFunction, k[0], "applied term is not a function", {}, show_type(ctx, fty));
      check(ctx, k[1], pi->dom);
      return pi->cod(value(1));
    }
    case Kind::Fst:
    case Kind::Snd: {
      Val zty = infer(ctx, k[0]);
      const auto* sg = as<VSigma>(zty);
      if (sg == nullptr)
        fail(ctx, ErrorKind::Mismatch, k[0], "projection from a non-Sigma type", {}, show_type(ctx, zty));
      if (t->kind == Kind::Fst) return sg->fst;
      return sg->snd(do_fst(value(0)));
    }
    case Kind::Refl: {
      Val a = infer(ctx, k[0]);
      Val v = value(0);
      return mk(VId{a, v, v});
    }
    case Kind::Sup: {
      Val fty = infer(ctx, k[1]);
      const auto* pi = as<VPi>(fty);
      const VW* w = nullptr;
      Val target;
      if (pi != nullptr) {
        target = pi->cod(fresh_var(ctx.depth(), pi->dom));
        w = as<VW>(target);
      }
      if (w == nullptr)
        fail(ctx, ErrorKind::Mismatch, k[1], "branch function of sup must return a W-type", {}, show_type(ctx, fty));
      check(ctx, k[0], w->label);
      expect_type_conv(ctx, k[1], pi->dom, vapply(w->branch, value(0)));
      return mk(VW{w->label, w->branch});
    }
    case Kind::EmptyElim: {
      Val dom = mk(VEmpty{});
      check(ctx, k[1], dom);
      check_family(ctx, k[0], dom);
      return vapply(value(0), value(1));
    }
    case Kind::UnitElim: {
      Val dom = mk(VUnit{});
      check(ctx, k[2], dom);
      check_family(ctx, k[0], dom);
      Val M = value(0);
      check(ctx, k[1], vapply(M, mk(VStar{})));
      return vapply(M, value(2));
    }
    case Kind::Split: {
      Val zty = infer(ctx, k[2]);
      const auto* sg = as<VSigma>(zty);
      if (sg == nullptr) fail(ctx, ErrorKind::Mismatch, k[2], "split on a non-Sigma type", {}, show_type(ctx, zty));
      check_family(ctx, k[0], zty);
      Val M = value(0);
      check(ctx, k[1], sig::split_case(sg->fst, mk(VLam{sg->snd}), M));
      return vapply(M, value(2));
    }
    case Kind::Case: {
      Val sty = infer(ctx, k[3]);
      const auto* sm = as<VSum>(sty);
      if (sm == nullptr) fail(ctx, ErrorKind::Mismatch, k[3], "case on a non-sum type", {}, show_type(ctx, sty));
      check_family(ctx, k[0], sty);
      Val M = value(0);
      check(ctx, k[1], sig::case_left(sm->left, M));
      check(ctx, k[2], sig::case_right(sm->right, M));
      return vapply(M, value(3));
    }
    case Kind::J: {
      Val pty = infer(ctx, k[4]);
      const auto* id = as<VId>(pty);
      if (id == nullptr) fail(ctx, ErrorKind::Mismatch, k[4], "J on a non-identity type", {}, show_type(ctx, pty));
      Val A = id->type;
      check(ctx, k[2], A);
      check(ctx, k[3], A);
      Val a = value(2), b = value(3);
      expect_conv(ctx, k[2], a, id->lhs, A);
      expect_conv(ctx, k[3], b, id->rhs, A);
      check_family(ctx, k[0], A, [A, a](const Val& y) { return mk(VId{A, a, y}); });
      Val M = value(0);
      check(ctx, k[1], sig::j_case(a, M));
      return vapply(M, {b, value(4)});
    }
    case Kind::WElim: {
      Val wty = infer(ctx, k[2]);
      const auto* w = as<VW>(wty);
      if (w == nullptr) fail(ctx, ErrorKind::Mismatch, k[2], "elimW on a non-W type", {}, show_type(ctx, wty));
      check_family(ctx, k[0], wty);
      Val M = value(0);
      check(ctx, k[1], sig::welim_step(w->label, w->branch, M));
      return vapply(M, value(2));
    }
    case Kind::DWElim: {
      Val wty = infer(ctx, k[3]);
      const auto* dw = as<VDW>(wty);
      if (dw == nullptr) fail(ctx, ErrorKind::Mismatch, k[3], "elimDW on a non-DW type", {}, show_type(ctx, wty));
      Val I = dw->index_type, N = dw->names, Br = dw->branch, ar = dw->arity;
      check(ctx, k[2], I);
      Val i = value(2);
      expect_conv(ctx, k[2], i, dw->index, I);
      check_family(ctx, k[0], I, [=](const Val& x) { return mk(VDW{I, N, Br, ar, x}); });
      Val M = value(0);
      check(ctx, k[1], sig::dwelim_step(I, N, Br, ar, M));
      return vapply(M, {i, value(3)});
    }
    case Kind::WPElim: {
      Val wty = infer(ctx, k[3]);
      const auto* wp = as<VWP>(wty);
      if (wp == nullptr) fail(ctx, ErrorKind::Mismatch, k[3], "elimWP on a non-WP type", {}, show_type(ctx, wty));
      Val I = wp->index_type, N = wp->names, R = wp->premises;
      check(ctx, k[2], I);
      Val i = value(2);
      expect_conv(ctx, k[2], i, wp->index, I);
      check_family(ctx, k[0], I, [=](const Val& x) { return mk(VWP{I, N, R, x}); });
      Val M = value(0);
      check(ctx, k[1], sig::wpelim_step(I, N, R, M));
      return vapply(M, {i, value(3)});
    }
    case Kind::CoverElim: {
      Val pty = infer(ctx, k[4]);
      const auto* cv = as<VCover>(pty);
      if (cv == nullptr)
        fail(ctx, ErrorKind::Mismatch, k[4], "elimCover on a non-Cover type", {}, show_type(ctx, pty));
      Val A = cv->carrier, I = cv->labels, C = cv->axioms, V = cv->subset;
      check(ctx, k[3], A);
      Val a = value(3);
      expect_conv(ctx, k[3], a, cv->elem, A);
      check_family(ctx, k[0], A, [=](const Val& x) { return mk(VCover{A, I, C, V, x}); });
      Val M = value(0);
      check(ctx, k[1], sig::cover_rf_case(A, V, M));
      check(ctx, k[2], sig::cover_tr_case(A, I, C, V, M));
      return vapply(M, {a, value(4)});
    }
    case Kind::Lam:
    case Kind::Pair:
    case Kind::Inl:
    case Kind::Inr:
    case Kind::DSup:
    case Kind::Ind:
    case Kind::Rf:
    case Kind::Tr:
      fail(ctx, ErrorKind::Mismatch, t,
           std::string("cannot infer the type of ") + describe(t->kind) + "; check it against a type or annotate it");
  }
  fail(ctx, ErrorKind::Mismatch, t, "unknown term");
}

Term infer(const Context& ctx, const Term& t, const Flags& flags) {
  Checker c(ctx.globals(), flags);
  return readback_type(c.infer(ctx, t), flags, ctx.depth());
}

void check(const Context& ctx, const Term& t, const Term& type, const Flags& flags) {
  Checker c(ctx.globals(), flags);
  Val ty = c.check_type(ctx, type);
  c.check(ctx, t, ty);
}

void install_builtins(Globals& globals, const Flags& flags) {
  if (flags.funext && !globals.contains("funext")) globals.postulate("funext", sig::funext_type());
}

void check_declaration(Globals& globals, const Declaration& decl, const Flags& flags) {
  try {
    Context ctx(globals);
    Checker checker(globals, flags);
    if (decl.is_postulate()) {
      if (decl.name != "funext")
        throw TypeError(ErrorKind::FlagRequired, "postulates are only permitted for funext", decl.span);
      if (!flags.funext)
        throw TypeError(ErrorKind::FlagRequired, "funext requires the funext flag", decl.span);
      install_builtins(globals, flags);
      Val declared = checker.check_type(ctx, decl.type);
      if (!conv_types(declared, globals.find("funext")->type_value, flags, 0))
        throw TypeError(ErrorKind::Mismatch, "funext declared with a non-standard type", decl.span,
                        normalize_type(ctx, sig::funext_type(), flags), normalize_type(ctx, decl.type, flags));
      return;
    }
    if (globals.contains(decl.name))
      throw TypeError(ErrorKind::Mismatch, "duplicate declaration of " + decl.name, decl.span);
    Val ty = checker.check_type(ctx, decl.type);
    checker.check(ctx, decl.body, ty);
    globals.define(decl.name, decl.type, decl.body);
  } catch (TypeError& e) {
    e.decl = decl.name;
    if (e.location.line == 0) e.location = decl.span;
    throw;
  } catch (const EvalError& e) {
    TypeError te(ErrorKind::Mismatch, std::string("evaluation failed: ") + e.what(), decl.span);
    te.decl = decl.name;
    throw te;
  }
}

void check_declarations(Globals& globals, const std::vector<Declaration>& decls, const Flags& flags) {
  install_builtins(globals, flags);
  for (const auto& d : decls) check_declaration(globals, d, flags);
}

}  // namespace wtt
