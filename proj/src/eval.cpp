#include <utility>

#include "wtt/normalize.hpp"

namespace wtt {

namespace {

thread_local std::size_t g_depth = 0;
thread_local std::size_t g_limit = 4000;

struct DepthGuard {
  DepthGuard() {
    if (++g_depth > g_limit) {
      g_depth = 0;
      throw EvalError("evaluation depth limit exceeded");
    }
  }
  ~DepthGuard() {
    if (g_depth > 0) --g_depth;
  }
};

Val neutral(Kind kind, std::vector<Val> args, Val type) {
  Neutral ne;
  ne.kind = kind;
  ne.args = std::move(args);
  return mk(VNeu{std::move(ne), std::move(type)});
}

const VNeu& expect_neutral(const Val& v, const char* what) {
  const auto* n = as<VNeu>(v);
  if (n == nullptr) throw EvalError(std::string("ill-typed scrutinee for ") + what);
  return *n;
}

}  // namespace

void set_eval_depth_limit(std::size_t limit) { g_limit = limit; }
std::size_t eval_depth_limit() { return g_limit; }

Val vuniv() {
  static const Val u = mk(VU{});
  return u;
}

Val vpi(Val dom, Closure::Native cod) { return mk(VPi{std::move(dom), Closure(std::move(cod))}); }

Val varrow(Val dom, Val cod) {
  return vpi(std::move(dom), [cod = std::move(cod)](const Val&) { return cod; });
}

Val fresh_var(std::size_t level, Val type) {
  Neutral ne;
  ne.kind = Kind::Var;
  ne.level = level;
  return mk(VNeu{std::move(ne), std::move(type)});
}

Val vapply(const Val& f, const Val& arg) {
  if (const auto* lam = as<VLam>(f)) return lam->body(arg);
  const auto& n = expect_neutral(f, "application");
  const auto* pi = as<VPi>(n.type);
  if (pi == nullptr) throw EvalError("applying a neutral whose type is not a Pi type");
  return neutral(Kind::App, {f, arg}, pi->cod(arg));
}

Val vapply(const Val& f, std::initializer_list<Val> args) {
  Val r = f;
  for (const auto& a : args) r = vapply(r, a);
  return r;
}

Val do_fst(const Val& z) {
  if (const auto* p = as<VPair>(z)) return p->fst;
  const auto& n = expect_neutral(z, "fst");
  const auto* s = as<VSigma>(n.type);
  if (s == nullptr) throw EvalError("fst of a neutral whose type is not a Sigma type");
  return neutral(Kind::Fst, {z}, s->fst);
}

Val do_snd(const Val& z) {
  if (const auto* p = as<VPair>(z)) return p->snd;
  const auto& n = expect_neutral(z, "snd");
  const auto* s = as<VSigma>(n.type);
  if (s == nullptr) throw EvalError("snd of a neutral whose type is not a Sigma type");
  return neutral(Kind::Snd, {z}, s->snd(do_fst(z)));
}

Val do_split(const Val& motive, const Val& on_pair, const Val& z) {
  if (const auto* p = as<VPair>(z)) return vapply(on_pair, {p->fst, p->snd});
  expect_neutral(z, "split");
  return neutral(Kind::Split, {motive, on_pair, z}, vapply(motive, z));
}

Val do_case(const Val& motive, const Val& on_left, const Val& on_right, const Val& s) {
  if (const auto* l = as<VInl>(s)) return vapply(on_left, l->value);
  if (const auto* r = as<VInr>(s)) return vapply(on_right, r->value);
  expect_neutral(s, "case");
  return neutral(Kind::Case, {motive, on_left, on_right, s}, vapply(motive, s));
}

Val do_absurd(const Val& motive, const Val& e) {
  expect_neutral(e, "absurd");
  return neutral(Kind::EmptyElim, {motive, e}, vapply(motive, e));
}

Val do_unit_elim(const Val& motive, const Val& on_star, const Val& u) {
  if (as<VStar>(u) != nullptr) return on_star;
  expect_neutral(u, "unitElim");
  return neutral(Kind::UnitElim, {motive, on_star, u}, vapply(motive, u));
}

// Endpoints are taken from the proof's type so that the neutral is
// self-describing for readback.
Val do_j(const Val& motive, const Val& on_refl, const Val& p) {
  if (as<VRefl>(p) != nullptr) return on_refl;
  const auto& n = expect_neutral(p, "J");
  const auto* id = as<VId>(n.type);
  if (id == nullptr) throw EvalError("J on a neutral whose type is not an identity type");
  return neutral(Kind::J, {motive, on_refl, id->lhs, id->rhs, p}, vapply(motive, {id->rhs, p}));
}

Val do_welim(const Val& motive, const Val& step, const Val& w) {
  if (const auto* s = as<VSup>(w)) {
    Val f = s->fn;
    Val rec = mk(VLam{Closure([motive, step, f](const Val& b) { return do_welim(motive, step, vapply(f, b)); })});
    return vapply(step, {s->label, f, rec});
  }
  expect_neutral(w, "elimW");
  return neutral(Kind::WElim, {motive, step, w}, vapply(motive, w));
}

Val do_dwelim(const Val& motive, const Val& step, const Val& w) {
  if (const auto* s = as<VDSup>(w)) {
    Val f = s->fn;
    Val rec = mk(VLam{Closure([motive, step, f](const Val& b) { return do_dwelim(motive, step, vapply(f, b)); })});
    return vapply(step, {s->index, s->name, f, rec});
  }
  const auto& n = expect_neutral(w, "elimDW");
  const auto* dw = as<VDW>(n.type);
  if (dw == nullptr) throw EvalError("elimDW on a neutral of non-DW type");
  return neutral(Kind::DWElim, {motive, step, dw->index, w}, vapply(motive, {dw->index, w}));
}

Val do_wpelim(const Val& motive, const Val& step, const Val& w) {
  if (const auto* s = as<VInd>(w)) {
    Val f = s->fn;
    Val rec = mk(VLam{Closure([motive, step, f](const Val& j) {
      return mk(VLam{Closure([motive, step, f, j](const Val& r) { return do_wpelim(motive, step, vapply(f, {j, r})); })});
    })});
    return vapply(step, {s->index, s->name, f, rec});
  }
  const auto& n = expect_neutral(w, "elimWP");
  const auto* wp = as<VWP>(n.type);
  if (wp == nullptr) throw EvalError("elimWP on a neutral of non-WP type");
  return neutral(Kind::WPElim, {motive, step, wp->index, w}, vapply(motive, {wp->index, w}));
}

Val do_cover_elim(const Val& motive, const Val& on_rf, const Val& on_tr, const Val& p) {
  if (const auto* rf = as<VRf>(p)) return vapply(on_rf, {rf->elem, rf->member});
  if (const auto* tr = as<VTr>(p)) {
    Val r = tr->premises;
    Val rec = mk(VLam{Closure([motive, on_rf, on_tr, r](const Val& b) {
      return mk(VLam{Closure([motive, on_rf, on_tr, r, b](const Val& s) {
        return do_cover_elim(motive, on_rf, on_tr, vapply(r, {b, s}));
      })});
    })});
    return vapply(on_tr, {tr->elem, tr->label, r, rec});
  }
  const auto& n = expect_neutral(p, "elimCover");
  const auto* cv = as<VCover>(n.type);
  if (cv == nullptr) throw EvalError("elimCover on a neutral of non-Cover type");
  return neutral(Kind::CoverElim, {motive, on_rf, on_tr, cv->elem, p}, vapply(motive, {cv->elem, p}));
}

Val eval(const Globals& globals, const Env& env, const Term& t) {
  DepthGuard guard;
  const auto& k = t->kids;
  auto ev = [&](std::size_t i) { return eval(globals, env, k[i]); };
  auto close = [&](std::size_t i) { return Closure(&globals, env, k[i]); };
  switch (t->kind) {
    case Kind::Var:
      return env.lookup(t->index);
    case Kind::Const: {
      const auto* e = globals.find(t->name);
      if (e == nullptr) throw EvalError("unbound constant " + t->name);
      if (e->body_value) return e->body_value;
      Neutral ne;
      ne.kind = Kind::Const;
      ne.name = t->name;
      return mk(VNeu{std::move(ne), e->type_value});
    }
    case Kind::Ann:
      return ev(0);
    case Kind::U:
      return vuniv();
    case Kind::Empty:
      return mk(VEmpty{});
    case Kind::Unit:
      return mk(VUnit{});
    case Kind::Star:
      return mk(VStar{});
    case Kind::EmptyElim:
      return do_absurd(ev(0), ev(1));
    case Kind::UnitElim:
      return do_unit_elim(ev(0), ev(1), ev(2));
    case Kind::Pi:
      return mk(VPi{ev(0), close(1)});
    case Kind::Lam:
      return mk(VLam{close(0)});
    case Kind::App:
      return vapply(ev(0), ev(1));
    case Kind::Sigma:
      return mk(VSigma{ev(0), close(1)});
    case Kind::Pair:
      return mk(VPair{ev(0), ev(1)});
    case Kind::Fst:
      return do_fst(ev(0));
    case Kind::Snd:
      return do_snd(ev(0));
    case Kind::Split:
      return do_split(ev(0), ev(1), ev(2));
    case Kind::Sum:
      return mk(VSum{ev(0), ev(1)});
    case Kind::Inl:
      return mk(VInl{ev(0)});
    case Kind::Inr:
      return mk(VInr{ev(0)});
    case Kind::Case:
      return do_case(ev(0), ev(1), ev(2), ev(3));
    case Kind::Id:
      return mk(VId{ev(0), ev(1), ev(2)});
    case Kind::Refl:
      return mk(VRefl{ev(0)});
    case Kind::J:
      return do_j(ev(0), ev(1), ev(4));
    case Kind::W:
      return mk(VW{ev(0), ev(1)});
    case Kind::Sup:
      return mk(VSup{ev(0), ev(1)});
    case Kind::WElim:
      return do_welim(ev(0), ev(1), ev(2));
    case Kind::DW:
      return mk(VDW{ev(0), ev(1), ev(2), ev(3), ev(4)});
    case Kind::DSup:
      return mk(VDSup{ev(0), ev(1), ev(2)});
    case Kind::DWElim:
      return do_dwelim(ev(0), ev(1), ev(3));
    case Kind::WP:
      return mk(VWP{ev(0), ev(1), ev(2), ev(3)});
    case Kind::Ind:
      return mk(VInd{ev(0), ev(1), ev(2)});
    case Kind::WPElim:
      return do_wpelim(ev(0), ev(1), ev(3));
    case Kind::Cover:
      return mk(VCover{ev(0), ev(1), ev(2), ev(3), ev(4)});
    case Kind::Rf:
      return mk(VRf{ev(0), ev(1)});
    case Kind::Tr:
      return mk(VTr{ev(0), ev(1), ev(2)});
    case Kind::CoverElim:
      return do_cover_elim(ev(0), ev(1), ev(2), ev(4));
  }
  throw EvalError("unknown term kind");
}

namespace sig {

Val family(const Val& dom) { return varrow(dom, vuniv()); }

Val dw_branch(const Val& I, const Val& N) {
  return vpi(I, [N](const Val& i) { return family(vapply(N, i)); });
}

Val dw_arity(const Val& I, const Val& N, const Val& Br) {
  return vpi(I, [I, N, Br](const Val& i) {
    return vpi(vapply(N, i), [I, Br, i](const Val& n) { return varrow(vapply(Br, {i, n}), I); });
  });
}

Val wp_premises(const Val& I, const Val& N) {
  return vpi(I, [I, N](const Val& i) { return varrow(vapply(N, i), family(I)); });
}

Val cover_axioms(const Val& A, const Val& I) {
  return vpi(A, [A, I](const Val& a) { return varrow(vapply(I, a), family(A)); });
}

Val sup_fn(const Val& A, const Val& B, const Val& a) { return varrow(vapply(B, a), mk(VW{A, B})); }

Val dsup_fn(const Val& I, const Val& N, const Val& Br, const Val& ar, const Val& i, const Val& n) {
  return vpi(vapply(Br, {i, n}), [=](const Val& b) { return mk(VDW{I, N, Br, ar, vapply(ar, {i, n, b})}); });
}

Val ind_fn(const Val& I, const Val& N, const Val& R, const Val& i, const Val& n) {
  return vpi(I, [=](const Val& j) { return varrow(vapply(R, {i, n, j}), mk(VWP{I, N, R, j})); });
}

Val tr_fn(const Val& A, const Val& I, const Val& C, const Val& V, const Val& a, const Val& i) {
  return vpi(A, [=](const Val& b) { return varrow(vapply(C, {a, i, b}), mk(VCover{A, I, C, V, b})); });
}

Val welim_step(const Val& A, const Val& B, const Val& M) {
  return vpi(A, [=](const Val& a) {
    return vpi(sup_fn(A, B, a), [=](const Val& f) {
      Val ih = vpi(vapply(B, a), [=](const Val& b) { return vapply(M, vapply(f, b)); });
      return varrow(ih, vapply(M, mk(VSup{a, f})));
    });
  });
}

Val dwelim_step(const Val& I, const Val& N, const Val& Br, const Val& ar, const Val& M) {
  return vpi(I, [=](const Val& i) {
    return vpi(vapply(N, i), [=](const Val& n) {
      return vpi(dsup_fn(I, N, Br, ar, i, n), [=](const Val& f) {
        Val ih = vpi(vapply(Br, {i, n}), [=](const Val& b) { return vapply(M, {vapply(ar, {i, n, b}), vapply(f, b)}); });
        return varrow(ih, vapply(M, {i, mk(VDSup{i, n, f})}));
      });
    });
  });
}

Val wpelim_step(const Val& I, const Val& N, const Val& R, const Val& M) {
  return vpi(I, [=](const Val& i) {
    return vpi(vapply(N, i), [=](const Val& n) {
      return vpi(ind_fn(I, N, R, i, n), [=](const Val& f) {
        Val ih = vpi(I, [=](const Val& j) {
          return vpi(vapply(R, {i, n, j}), [=](const Val& r) { return vapply(M, {j, vapply(f, {j, r})}); });
        });
        return varrow(ih, vapply(M, {i, mk(VInd{i, n, f})}));
      });
    });
  });
}

Val cover_rf_case(const Val& A, const Val& V, const Val& M) {
  return vpi(A, [=](const Val& a) {
    return vpi(vapply(V, a), [=](const Val& r) { return vapply(M, {a, mk(VRf{a, r})}); });
  });
}

Val cover_tr_case(const Val& A, const Val& I, const Val& C, const Val& V, const Val& M) {
  return vpi(A, [=](const Val& a) {
    return vpi(vapply(I, a), [=](const Val& i) {
      return vpi(tr_fn(A, I, C, V, a, i), [=](const Val& r) {
        Val ih = vpi(A, [=](const Val& b) {
          return vpi(vapply(C, {a, i, b}), [=](const Val& s) { return vapply(M, {b, vapply(r, {b, s})}); });
        });
        return varrow(ih, vapply(M, {a, mk(VTr{a, i, r})}));
      });
    });
  });
}

Val split_case(const Val& A, const Val& B, const Val& M) {
  return vpi(A, [=](const Val& x) {
    return vpi(vapply(B, x), [=](const Val& y) { return vapply(M, mk(VPair{x, y})); });
  });
}

Val case_left(const Val& A, const Val& M) {
  return vpi(A, [=](const Val& x) { return vapply(M, mk(VInl{x})); });
}

Val case_right(const Val& B, const Val& M) {
  return vpi(B, [=](const Val& y) { return vapply(M, mk(VInr{y})); });
}

Val j_case(const Val& a, const Val& M) { return vapply(M, {a, mk(VRefl{a})}); }

Term funext_type() {
  using namespace build;
  // Context grows A, B, f, g, p; indices below are relative to each binder.
  Term fn_type = pi(var(1), app(var(1), var(0)));  // in ctx [A, B]
  Term fn_type2 = pi(var(2), app(var(2), var(0)));  // in ctx [A, B, f]
  Term pointwise = pi(var(3), id(app(var(3), var(0)), app(var(2), var(0)), app(var(1), var(0))));
  Term result = id(pi(var(4), app(var(4), var(0))), var(2), var(1));
  return pi(univ(), pi(pi(var(0), univ()), pi(fn_type, pi(fn_type2, pi(pointwise, result)))));
}

}  // namespace sig

}  // namespace wtt
