#include <functional>

#include "wtt/normalize.hpp"

namespace wtt {

namespace {

using build::make;

class Reader {
 public:
  explicit Reader(const Flags& flags) : flags_(flags) {}

  Term value(const Val& v, const Val& ty, std::size_t d) const {
    if (const auto* pi = as<VPi>(ty)) {
      if (as<VLam>(v) != nullptr || flags_.eta_pi) {
        Val x = fresh_var(d, pi->dom);
        return build::lam(value(vapply(v, x), pi->cod(x), d + 1));
      }
      return stuck(v, d);
    }
    if (const auto* sg = as<VSigma>(ty)) {
      if (as<VPair>(v) != nullptr || flags_.eta_sigma) {
        Val a = do_fst(v);
        return build::pair(value(a, sg->fst, d), value(do_snd(v), sg->snd(a), d));
      }
      return stuck(v, d);
    }
    if (as<VUnit>(ty) != nullptr) {
      if (as<VStar>(v) != nullptr || flags_.eta_unit) return build::star();
      return stuck(v, d);
    }
    if (as<VU>(ty) != nullptr) return type(v, d);
    if (const auto* sm = as<VSum>(ty)) {
      if (const auto* l = as<VInl>(v)) return build::inl(value(l->value, sm->left, d));
      if (const auto* r = as<VInr>(v)) return build::inr(value(r->value, sm->right, d));
      return stuck(v, d);
    }
    if (const auto* id = as<VId>(ty)) {
      if (const auto* r = as<VRefl>(v)) return build::refl(value(r->value, id->type, d));
      return stuck(v, d);
    }
    if (const auto* w = as<VW>(ty)) {
      if (const auto* s = as<VSup>(v))
        return build::sup(value(s->label, w->label, d), value(s->fn, sig::sup_fn(w->label, w->branch, s->label), d));
      return stuck(v, d);
    }
    if (const auto* dw = as<VDW>(ty)) {
      if (const auto* s = as<VDSup>(v)) {
        Val fn_ty = sig::dsup_fn(dw->index_type, dw->names, dw->branch, dw->arity, s->index, s->name);
        return make(Kind::DSup, {value(s->index, dw->index_type, d), value(s->name, vapply(dw->names, s->index), d),
                                 value(s->fn, fn_ty, d)});
      }
      return stuck(v, d);
    }
    if (const auto* wp = as<VWP>(ty)) {
      if (const auto* s = as<VInd>(v)) {
        Val fn_ty = sig::ind_fn(wp->index_type, wp->names, wp->premises, s->index, s->name);
        return make(Kind::Ind, {value(s->index, wp->index_type, d), value(s->name, vapply(wp->names, s->index), d),
                                value(s->fn, fn_ty, d)});
      }
      return stuck(v, d);
    }
    if (const auto* cv = as<VCover>(ty)) {
      if (const auto* rf = as<VRf>(v))
        return make(Kind::Rf, {value(rf->elem, cv->carrier, d), value(rf->member, vapply(cv->subset, rf->elem), d)});
      if (const auto* tr = as<VTr>(v)) {
        Val fn_ty = sig::tr_fn(cv->carrier, cv->labels, cv->axioms, cv->subset, tr->elem, tr->label);
        return make(Kind::Tr, {value(tr->elem, cv->carrier, d), value(tr->label, vapply(cv->labels, tr->elem), d),
                               value(tr->premises, fn_ty, d)});
      }
      return stuck(v, d);
    }
    return stuck(v, d);
  }

  Term type(const Val& v, std::size_t d) const {
    if (as<VU>(v) != nullptr) return build::univ();
    if (as<VEmpty>(v) != nullptr) return build::empty();
    if (as<VUnit>(v) != nullptr) return build::unit();
    if (const auto* pi = as<VPi>(v)) {
      Val x = fresh_var(d, pi->dom);
      return build::pi(type(pi->dom, d), type(pi->cod(x), d + 1));
    }
    if (const auto* sg = as<VSigma>(v)) {
      Val x = fresh_var(d, sg->fst);
      return build::sigma(type(sg->fst, d), type(sg->snd(x), d + 1));
    }
    if (const auto* sm = as<VSum>(v)) return build::sum(type(sm->left, d), type(sm->right, d));
    if (const auto* id = as<VId>(v))
      return build::id(type(id->type, d), value(id->lhs, id->type, d), value(id->rhs, id->type, d));
    if (const auto* w = as<VW>(v)) return build::w(type(w->label, d), value(w->branch, sig::family(w->label), d));
    if (const auto* dw = as<VDW>(v)) {
      return make(Kind::DW, {type(dw->index_type, d), value(dw->names, sig::family(dw->index_type), d),
                             value(dw->branch, sig::dw_branch(dw->index_type, dw->names), d),
                             value(dw->arity, sig::dw_arity(dw->index_type, dw->names, dw->branch), d),
                             value(dw->index, dw->index_type, d)});
    }
    if (const auto* wp = as<VWP>(v)) {
      return make(Kind::WP, {type(wp->index_type, d), value(wp->names, sig::family(wp->index_type), d),
                             value(wp->premises, sig::wp_premises(wp->index_type, wp->names), d),
                             value(wp->index, wp->index_type, d)});
    }
    if (const auto* cv = as<VCover>(v)) {
      return make(Kind::Cover, {type(cv->carrier, d), value(cv->labels, sig::family(cv->carrier), d),
                                value(cv->axioms, sig::cover_axioms(cv->carrier, cv->labels), d),
                                value(cv->subset, sig::family(cv->carrier), d), value(cv->elem, cv->carrier, d)});
    }
    if (as<VNeu>(v) != nullptr) return stuck(v, d);
    throw EvalError("readback: value is not a type");
  }

 private:
  Term family1(const Val& motive, const Val& dom, std::size_t d) const {
    Val x = fresh_var(d, dom);
    return build::lam(type(vapply(motive, x), d + 1));
  }

  Term family2(const Val& motive, const Val& dom, const std::function<Val(const Val&)>& dom2, std::size_t d) const {
    Val x = fresh_var(d, dom);
    Val y = fresh_var(d + 1, dom2(x));
    return build::lam(build::lam(type(vapply(motive, {x, y}), d + 2)));
  }

  static const Val& type_of(const Val& v) {
    const auto* n = as<VNeu>(v);
    if (n == nullptr) throw EvalError("readback: expected a neutral");
    return n->type;
  }

  template <class T>
  static const T& typed(const Val& scrutinee) {
    const auto* t = as<T>(type_of(scrutinee));
    if (t == nullptr) throw EvalError("readback: neutral scrutinee has unexpected type");
    return *t;
  }

  Term stuck(const Val& v, std::size_t d) const {
    const auto* nv = as<VNeu>(v);
    if (nv == nullptr) throw EvalError("readback: canonical value at a type it does not inhabit");
    const Neutral& n = nv->ne;
    const auto& a = n.args;
    switch (n.kind) {
      case Kind::Var:
        if (n.level >= d) throw EvalError("readback: variable escapes its scope");
        return build::var(d - 1 - n.level);
      case Kind::Const:
        return build::cnst(n.name);
      case Kind::App: {
        const auto& pi = typed<VPi>(a[0]);
        return build::app(stuck(a[0], d), value(a[1], pi.dom, d));
      }
      case Kind::Fst:
        return build::fst(stuck(a[0], d));
      case Kind::Snd:
        return build::snd(stuck(a[0], d));
      case Kind::EmptyElim:
        return make(Kind::EmptyElim, {family1(a[0], mk(VEmpty{}), d), stuck(a[1], d)});
      case Kind::UnitElim:
        return make(Kind::UnitElim,
                    {family1(a[0], mk(VUnit{}), d), value(a[1], vapply(a[0], mk(VStar{})), d), stuck(a[2], d)});
      case Kind::Split: {
        const auto& sg = typed<VSigma>(a[2]);
        Val B = mk(VLam{sg.snd});
        return make(Kind::Split, {family1(a[0], type_of(a[2]), d), value(a[1], sig::split_case(sg.fst, B, a[0]), d),
                                  stuck(a[2], d)});
      }
      case Kind::Case: {
        const auto& sm = typed<VSum>(a[3]);
        return make(Kind::Case, {family1(a[0], type_of(a[3]), d), value(a[1], sig::case_left(sm.left, a[0]), d),
                                 value(a[2], sig::case_right(sm.right, a[0]), d), stuck(a[3], d)});
      }
      case Kind::J: {
        const auto& id = typed<VId>(a[4]);
        Val A = id.type, lhs = id.lhs;
        auto path = [A, lhs](const Val& y) { return mk(VId{A, lhs, y}); };
        return make(Kind::J, {family2(a[0], A, path, d), value(a[1], sig::j_case(lhs, a[0]), d), value(a[2], A, d),
                              value(a[3], A, d), stuck(a[4], d)});
      }
      case Kind::WElim: {
        const auto& w = typed<VW>(a[2]);
        return make(Kind::WElim, {family1(a[0], type_of(a[2]), d),
                                  value(a[1], sig::welim_step(w.label, w.branch, a[0]), d), stuck(a[2], d)});
      }
      case Kind::DWElim: {
        const auto& dw = typed<VDW>(a[3]);
        Val I = dw.index_type, N = dw.names, Br = dw.branch, ar = dw.arity;
        auto fam = [=](const Val& i) { return mk(VDW{I, N, Br, ar, i}); };
        return make(Kind::DWElim, {family2(a[0], I, fam, d), value(a[1], sig::dwelim_step(I, N, Br, ar, a[0]), d),
                                   value(a[2], I, d), stuck(a[3], d)});
      }
      case Kind::WPElim: {
        const auto& wp = typed<VWP>(a[3]);
        Val I = wp.index_type, N = wp.names, R = wp.premises;
        auto fam = [=](const Val& i) { return mk(VWP{I, N, R, i}); };
        return make(Kind::WPElim, {family2(a[0], I, fam, d), value(a[1], sig::wpelim_step(I, N, R, a[0]), d),
                                   value(a[2], I, d), stuck(a[3], d)});
      }
      case Kind::CoverElim: {
        const auto& cv = typed<VCover>(a[4]);
        Val A = cv.carrier, I = cv.labels, C = cv.axioms, V = cv.subset;
        auto fam = [=](const Val& x) { return mk(VCover{A, I, C, V, x}); };
        return make(Kind::CoverElim,
                    {family2(a[0], A, fam, d), value(a[1], sig::cover_rf_case(A, V, a[0]), d),
                     value(a[2], sig::cover_tr_case(A, I, C, V, a[0]), d), value(a[3], A, d), stuck(a[4], d)});
      }
      default:
        throw EvalError("readback: malformed neutral");
    }
  }

  const Flags& flags_;
};

}  // namespace

Term readback(const Val& v, const Val& type, const Flags& flags, std::size_t depth) {
  return Reader(flags).value(v, type, depth);
}

Term readback_type(const Val& v, const Flags& flags, std::size_t depth) { return Reader(flags).type(v, depth); }

bool conv_values(const Val& a, const Val& b, const Val& type, const Flags& flags, std::size_t depth) {
  Reader r(flags);
  return structural_eq(r.value(a, type, depth), r.value(b, type, depth));
}

bool conv_types(const Val& a, const Val& b, const Flags& flags, std::size_t depth) {
  Reader r(flags);
  return structural_eq(r.type(a, depth), r.type(b, depth));
}

bool convertible(const Context& ctx, const Term& type, const Term& t, const Term& u, const Flags& flags) {
  Val ty = eval(ctx, type);
  return conv_values(eval(ctx, t), eval(ctx, u), ty, flags, ctx.depth());
}

Term normalize(const Context& ctx, const Term& t, const Term& type, const Flags& flags) {
  return readback(eval(ctx, t), eval(ctx, type), flags, ctx.depth());
}

Term normalize_type(const Context& ctx, const Term& type, const Flags& flags) {
  return readback_type(eval(ctx, type), flags, ctx.depth());
}

}  // namespace wtt
