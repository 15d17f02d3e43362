#pragma once

// Formation, introduction, elimination and computation rules of the four
// inductive type formers, stated over a fully general parameter telescope,
// plus ill-formed eliminations with the error kind each must produce.

#include <string>
#include <vector>

#include "wtt/typecheck.hpp"

namespace wtt::testing::rule_goldens {


struct Golden {
  const char* name;
  std::string source;
};

struct Negative {
  const char* name;
  std::string source;
  ErrorKind kind;
};

inline const std::string TW = "(A : U0) -> (B : A -> U0) -> ";
inline const std::string MW =
    "(M : W A B -> U0) -> (d : (a : A) -> (f : B a -> W A B) -> ((b : B a) -> M (f b)) -> M (sup a f)) -> ";

inline const std::string TD =
    "(I : U0) -> (N : I -> U0) -> (Br : (i : I) -> N i -> U0) -> (ar : (i : I) -> (n : N i) -> Br i n -> I) -> ";
inline const std::string MD =
    "(M : (i : I) -> DW I N Br ar i -> U0) -> (d : (i : I) -> (n : N i) -> "
    "(f : (b : Br i n) -> DW I N Br ar (ar i n b)) -> ((b : Br i n) -> M (ar i n b) (f b)) -> M i (dsup i n f)) -> ";

inline const std::string TP = "(I : U0) -> (N : I -> U0) -> (R : (i : I) -> N i -> I -> U0) -> ";
inline const std::string MP =
    "(M : (i : I) -> WP I N R i -> U0) -> (c : (i : I) -> (n : N i) -> (f : (j : I) -> R i n j -> WP I N R j) -> "
    "((j : I) -> (r : R i n j) -> M j (f j r)) -> M i (ind i n f)) -> ";

inline const std::string TC = "(A : U0) -> (I : A -> U0) -> (C : (a : A) -> I a -> A -> U0) -> (V : A -> U0) -> ";
inline const std::string MC =
    "(M : (a : A) -> Cover A I C V a -> U0) -> (q1 : (a : A) -> (r : V a) -> M a (rf a r)) -> "
    "(q2 : (a : A) -> (i : I a) -> (r : (b : A) -> C a i b -> Cover A I C V b) -> "
    "((b : A) -> (s : C a i b) -> M b (r b s)) -> M a (tr a i r)) -> ";

inline std::string def(const std::string& name, const std::string& type, const std::string& body) {
  return "def " + name + " : " + type + "\n  := " + body + "\n";
}

inline std::vector<Golden> goldens() {
  const std::string elimW = "elimW (fun w => M w) d";
  const std::string elimDW = "elimDW (fun i w => M i w) d";
  const std::string elimWP = "elimWP (fun i w => M i w) c";
  const std::string elimC = "elimCover (fun a p => M a p) q1 q2";
  return {
      {"W formation", def("w_form", TW + "U0", "fun A B => W A B")},
      {"W introduction", def("w_intro", TW + "(a : A) -> (B a -> W A B) -> W A B", "fun A B a f => sup a f")},
      {"W elimination", def("w_elim", TW + MW + "(w : W A B) -> M w", "fun A B M d w => " + elimW + " w")},
      {"W large elimination",
       def("w_large", TW + "W A B -> U0", "fun A B w => elimW (fun _ => U0) (fun a f h => (b : B a) -> h b) w")},
      {"W computation",
       def("w_comp",
           TW + MW + "(a : A) -> (f : B a -> W A B) -> Id (M (sup a f)) (" + elimW + " (sup a f)) (d a f (fun b => " +
               elimW + " (f b)))",
           "fun A B M d a f => refl (d a f (fun b => " + elimW + " (f b)))")},

      {"DW formation", def("dw_form", TD + "I -> U0", "fun I N Br ar i => DW I N Br ar i")},
      {"DW introduction",
       def("dw_intro", TD + "(i : I) -> (n : N i) -> ((b : Br i n) -> DW I N Br ar (ar i n b)) -> DW I N Br ar i",
           "fun I N Br ar i n f => dsup i n f")},
      {"DW elimination",
       def("dw_elim", TD + MD + "(i : I) -> (w : DW I N Br ar i) -> M i w", "fun I N Br ar M d i w => " + elimDW + " i w")},
      {"DW computation",
       def("dw_comp",
           TD + MD + "(i : I) -> (n : N i) -> (f : (b : Br i n) -> DW I N Br ar (ar i n b)) -> Id (M i (dsup i n f)) (" +
               elimDW + " i (dsup i n f : DW I N Br ar i)) (d i n f (fun b => " + elimDW + " (ar i n b) (f b)))",
           "fun I N Br ar M d i n f => refl (d i n f (fun b => " + elimDW + " (ar i n b) (f b)))")},

      {"WP formation", def("wp_form", TP + "I -> U0", "fun I N R i => WP I N R i")},
      {"WP introduction",
       def("wp_intro", TP + "(i : I) -> (n : N i) -> ((j : I) -> R i n j -> WP I N R j) -> WP I N R i",
           "fun I N R i n f => ind i n f")},
      {"WP elimination",
       def("wp_elim", TP + MP + "(i : I) -> (w : WP I N R i) -> M i w", "fun I N R M c i w => " + elimWP + " i w")},
      {"WP computation",
       def("wp_comp",
           TP + MP + "(i : I) -> (n : N i) -> (f : (j : I) -> R i n j -> WP I N R j) -> Id (M i (ind i n f)) (" + elimWP +
               " i (ind i n f : WP I N R i)) (c i n f (fun j r => " + elimWP + " j (f j r)))",
           "fun I N R M c i n f => refl (c i n f (fun j r => " + elimWP + " j (f j r)))")},

      {"Cover formation", def("cov_form", TC + "A -> U0", "fun A I C V a => Cover A I C V a")},
      {"Cover reflexivity", def("cov_rf", TC + "(a : A) -> V a -> Cover A I C V a", "fun A I C V a r => rf a r")},
      {"Cover transitivity",
       def("cov_tr", TC + "(a : A) -> (i : I a) -> ((b : A) -> C a i b -> Cover A I C V b) -> Cover A I C V a",
           "fun A I C V a i r => tr a i r")},
      {"Cover elimination",
       def("cov_elim", TC + MC + "(a : A) -> (p : Cover A I C V a) -> M a p",
           "fun A I C V M q1 q2 a p => " + elimC + " a p")},
      {"Cover computation at rf",
       def("cov_comp_rf",
           TC + MC + "(a : A) -> (r : V a) -> Id (M a (rf a r)) (" + elimC + " a (rf a r : Cover A I C V a)) (q1 a r)",
           "fun A I C V M q1 q2 a r => refl (q1 a r)")},
      {"Cover computation at tr",
       def("cov_comp_tr",
           TC + MC + "(a : A) -> (i : I a) -> (r : (b : A) -> C a i b -> Cover A I C V b) -> Id (M a (tr a i r)) (" +
               elimC + " a (tr a i r : Cover A I C V a)) (q2 a i r (fun b s => " + elimC + " b (r b s)))",
           "fun A I C V M q1 q2 a i r => refl (q2 a i r (fun b s => " + elimC + " b (r b s)))")},
      {"Cover with a subset depending on the context",
       def("cov_ctx", "(A : U0) -> (I : A -> U0) -> (C : (a : A) -> I a -> A -> U0) -> (x : A) -> "
                      "(a : A) -> Id A x a -> Cover A I C (fun b => Id A x b) a",
           "fun A I C x a p => rf a p")},
  };
}

inline std::vector<Negative> negatives() {
  return {
      {"elimW with a bare motive", def("e", TW + MW + "(w : W A B) -> M w", "fun A B M d w => elimW M d w"),
       ErrorKind::MotiveShape},
      {"elimW with an ill-typed step",
       def("e", TW + MW + "(w : W A B) -> M w", "fun A B M d w => elimW (fun w => M w) (fun a f h => h) w"),
       ErrorKind::Mismatch},
      {"elimW on a unit value", def("e", TW + MW + "N1", "fun A B M d => elimW (fun w => N1) (fun a f h => star) star"),
       ErrorKind::Mismatch},

      {"elimDW with a bare motive",
       def("e", TD + MD + "(i : I) -> (w : DW I N Br ar i) -> M i w", "fun I N Br ar M d i w => elimDW M d i w"),
       ErrorKind::MotiveShape},
      {"elimDW with a motive of the wrong arity",
       def("e", TD + MD + "(i : I) -> (w : DW I N Br ar i) -> M i w",
           "fun I N Br ar M d i w => elimDW (fun w => M i w) d i w"),
       ErrorKind::MotiveShape},
      {"elimDW at the wrong index",
       def("e", TD + MD + "(i : I) -> (j : I) -> (w : DW I N Br ar i) -> M j w",
           "fun I N Br ar M d i j w => elimDW (fun i w => M i w) d j w"),
       ErrorKind::Mismatch},
      {"elimDW with a step returning its induction hypothesis",
       def("e", TD + MD + "(i : I) -> (w : DW I N Br ar i) -> M i w",
           "fun I N Br ar M d i w => elimDW (fun i w => M i w) (fun i n f h => h) i w"),
       ErrorKind::Mismatch},

      {"elimWP with a bare motive",
       def("e", TP + MP + "(i : I) -> (w : WP I N R i) -> M i w", "fun I N R M c i w => elimWP M c i w"),
       ErrorKind::MotiveShape},
      {"elimWP at the wrong index",
       def("e", TP + MP + "(i : I) -> (j : I) -> (w : WP I N R i) -> M j w",
           "fun I N R M c i j w => elimWP (fun i w => M i w) c j w"),
       ErrorKind::Mismatch},
      {"elimWP on a dependent W-type",
       def("e", TD + "(i : I) -> (w : DW I N Br ar i) -> N1",
           "fun I N Br ar i w => elimWP (fun i w => N1) (fun i n f h => star) i w"),
       ErrorKind::Mismatch},

      {"elimCover with a bare motive",
       def("e", TC + MC + "(a : A) -> (p : Cover A I C V a) -> M a p", "fun A I C V M q1 q2 a p => elimCover M q1 q2 a p"),
       ErrorKind::MotiveShape},
      {"elimCover with the cases swapped",
       def("e", TC + MC + "(a : A) -> (p : Cover A I C V a) -> M a p",
           "fun A I C V M q1 q2 a p => elimCover (fun a p => M a p) q2 q1 a p"),
       ErrorKind::Mismatch},
      {"elimCover at the wrong element",
       def("e", TC + MC + "(a : A) -> (b : A) -> (p : Cover A I C V a) -> M b p",
           "fun A I C V M q1 q2 a b p => elimCover (fun a p => M a p) q1 q2 b p"),
       ErrorKind::Mismatch},

      {"computation with the wrong right-hand side",
       def("e",
           TW + MW + "(a : A) -> (f : B a -> W A B) -> (h : (b : B a) -> M (f b)) -> Id (M (sup a f)) "
                     "(elimW (fun w => M w) d (sup a f)) (d a f h)",
           "fun A B M d a f h => refl (d a f h)"),
       ErrorKind::Mismatch},
      {"rf outside the subset", def("e", TC + "(a : A) -> I a -> Cover A I C V a", "fun A I C V a i => rf a i"),
       ErrorKind::Mismatch},
      {"dsup at a mismatched index",
       def("e", TD + "(i : I) -> (j : I) -> (n : N i) -> ((b : Br i n) -> DW I N Br ar (ar i n b)) -> DW I N Br ar j",
           "fun I N Br ar i j n f => dsup i n f"),
       ErrorKind::Mismatch},
  };
}

}  // namespace wtt::testing::rule_goldens
