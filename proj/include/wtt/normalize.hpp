#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "wtt/context.hpp"
#include "wtt/flags.hpp"
#include "wtt/term.hpp"
#include "wtt/value.hpp"

namespace wtt {

// Raised when evaluation meets ill-typed input or exceeds the recursion
// guard. Well-typed input never triggers it.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Recursion guard for evaluation and readback (per thread).
void set_eval_depth_limit(std::size_t limit);
std::size_t eval_depth_limit();

Val eval(const Globals& globals, const Env& env, const Term& t);
inline Val eval(const Context& ctx, const Term& t) { return eval(ctx.globals(), ctx.env(), t); }

Val vapply(const Val& f, const Val& arg);
Val vapply(const Val& f, std::initializer_list<Val> args);

// Eliminators on values. Each fires its computation rule on a canonical
// scrutinee and otherwise builds a typed neutral.
Val do_fst(const Val& z);
Val do_snd(const Val& z);
Val do_split(const Val& motive, const Val& on_pair, const Val& z);
Val do_case(const Val& motive, const Val& on_left, const Val& on_right, const Val& s);
Val do_absurd(const Val& motive, const Val& e);
Val do_unit_elim(const Val& motive, const Val& on_star, const Val& u);
Val do_j(const Val& motive, const Val& on_refl, const Val& p);
Val do_welim(const Val& motive, const Val& step, const Val& w);
Val do_dwelim(const Val& motive, const Val& step, const Val& w);
Val do_wpelim(const Val& motive, const Val& step, const Val& w);
Val do_cover_elim(const Val& motive, const Val& on_rf, const Val& on_tr, const Val& p);

Val fresh_var(std::size_t level, Val type);

Val vuniv();
Val vpi(Val dom, Closure::Native cod);
Val varrow(Val dom, Val cod);

// Types of parameters, premise functions and eliminator cases, shared by the
// checker and by typed readback of neutral eliminations.
namespace sig {
Val family(const Val& dom);  // dom -> U0
Val dw_branch(const Val& I, const Val& N);
Val dw_arity(const Val& I, const Val& N, const Val& Br);
Val wp_premises(const Val& I, const Val& N);
Val cover_axioms(const Val& A, const Val& I);

Val sup_fn(const Val& A, const Val& B, const Val& a);
Val dsup_fn(const Val& I, const Val& N, const Val& Br, const Val& ar, const Val& i, const Val& n);
Val ind_fn(const Val& I, const Val& N, const Val& R, const Val& i, const Val& n);
Val tr_fn(const Val& A, const Val& I, const Val& C, const Val& V, const Val& a, const Val& i);

Val welim_step(const Val& A, const Val& B, const Val& M);
Val dwelim_step(const Val& I, const Val& N, const Val& Br, const Val& ar, const Val& M);
Val wpelim_step(const Val& I, const Val& N, const Val& R, const Val& M);
Val cover_rf_case(const Val& A, const Val& V, const Val& M);
Val cover_tr_case(const Val& A, const Val& I, const Val& C, const Val& V, const Val& M);
Val split_case(const Val& A, const Val& B, const Val& M);
Val case_left(const Val& A, const Val& M);
Val case_right(const Val& B, const Val& M);
Val j_case(const Val& a, const Val& M);

/// (A : U0) -> (B : A -> U0) -> (f g : (x : A) -> B x)
///   -> ((x : A) -> Id (B x) (f x) (g x)) -> Id ((x : A) -> B x) f g
Term funext_type();
}  // namespace sig

/// Type-directed readback to a beta-normal term, eta-expanding at Pi, Sigma
/// and N1 according to `flags`. `depth` is the number of locals in scope.
Term readback(const Val& v, const Val& type, const Flags& flags, std::size_t depth);
Term readback_type(const Val& v, const Flags& flags, std::size_t depth);

bool conv_values(const Val& a, const Val& b, const Val& type, const Flags& flags, std::size_t depth);
bool conv_types(const Val& a, const Val& b, const Flags& flags, std::size_t depth);

/// Definitional equality of two terms at `type` in `ctx`.
bool convertible(const Context& ctx, const Term& type, const Term& t, const Term& u, const Flags& flags);

/// Normal form of `t : type` in ctx.
Term normalize(const Context& ctx, const Term& t, const Term& type, const Flags& flags);
Term normalize_type(const Context& ctx, const Term& type, const Flags& flags);

}  // namespace wtt
