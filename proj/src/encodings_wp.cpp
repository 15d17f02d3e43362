// Well-founded predicates through dependent W-types, and W-types through
// well-founded predicates over the unit index.

#include "templates.hpp"
#include "wtt/encodings.hpp"

namespace wtt::encodings {

using namespace detail;

namespace detail {

std::string wp_dw_common() {
  const Family& fam = wp_family();
  std::string out = header("Well-founded predicates as dependent W-types: shared definitions.",
                           {"prelude.mltt", "instances.mltt"});
  out += schema_defs(
      fam, {{"wp_Br", "(i : {I}) -> {N} i -> U0", "fun i n => (j : {I}) * {R} i n j"},
            {"wp_ar", "(i : {I}) -> (n : {N} i) -> wp_Br {P} i n -> {I}", "fun i n p => fst p"},
            {"WP_dw", "{I} -> U0", "fun i => DW {I} {N} (wp_Br {P}) (wp_ar {P}) i"},
            {"ind_dw", "(i : {I}) -> (n : {N} i) -> ((j : {I}) -> {R} i n j -> WP_dw {P} j) -> WP_dw {P} i",
             "fun i n f => dsup i n (fun p => f (fst p) (snd p))"}});
  return trim_end(out);
}

std::string w_wp_common() {
  const Family& fam = w_family();
  std::string out = header("W-types as well-founded predicates over the unit index: shared definitions.",
                           {"prelude.mltt", "instances.mltt"});
  out += schema_defs(fam, {{"W_wp_at", "N1 -> U0", "fun j => WP N1 (fun _ => {A}) (fun _ a _ => {B} a) j"},
                           {"W_wp", "U0", "W_wp_at {P} star"}});
  return trim_end(out);
}

}  // namespace detail

std::string build_wp_via_dw(bool iso) {
  const Family& fam = wp_family();
  if (!iso) {
    std::string out = header("Well-founded predicates through dependent W-types; rules hold definitionally.",
                             {"wp_dw_common.mltt"});
    const std::string motive = "(M : (i : {I}) -> WP_dw {P} i -> U0)";
    const std::string step =
        "(c : (i : {I}) -> (n : {N} i) -> (f : (j : {I}) -> {R} i n j -> WP_dw {P} j) -> "
        "((j : {I}) -> (r : {R} i n j) -> M j (f j r)) -> M i (ind_dw {P} i n f))";
    const std::string elim_type = motive + " -> " + step + " -> (i : {I}) -> (w : WP_dw {P} i) -> M i w";
    out += schema_defs(fam, {{"elimWP_dw", elim_type,
                              "fun M c i w => elimDW (fun i w => M i w) (fun i n f h => c i n (fun j r => f (pair j r)) "
                              "(fun j r => h (pair j r))) i w"}});
    out += rules(fam, "wpdw",
                 {{"form", "{I} -> U0", "WP_dw {P}"},
                  {"intro", "(i : {I}) -> (n : {N} i) -> ((j : {I}) -> {R} i n j -> WP_dw {P} j) -> WP_dw {P} i",
                   "ind_dw {P}"},
                  {"elim", elim_type, "elimWP_dw {P}"},
                  {"comp",
                   motive + " -> " + step +
                       " -> (i : {I}) -> (n : {N} i) -> (f : (j : {I}) -> {R} i n j -> WP_dw {P} j) -> "
                       "Id (M i (ind_dw {P} i n f)) (elimWP_dw {P} M c i (ind_dw {P} i n f)) "
                       "(c i n f (fun j r => elimWP_dw {P} M c j (f j r)))",
                   "fun M c i n f => refl (c i n f (fun j r => elimWP_dw {P} M c j (f j r)))"}});
    return trim_end(out);
  }

  std::string out = header("Well-founded predicates are isomorphic to their dependent W-type encoding, given extensionality.",
                           {"funext_lemmas.mltt", "wp_dw_common.mltt"});
  const std::string back = "fun p => wpdw_to {P} (fst p) (wpdw_from {P} (fst p) (f (pair (fst p) (snd p))))";
  out += schema_defs(
      fam,
      {{"wpdw_to", "(i : {I}) -> WP {P} i -> WP_dw {P} i",
        "fun i w => elimWP (fun i _ => WP_dw {P} i) (fun i n f h => ind_dw {P} i n h) i w"},
       {"wpdw_from", "(i : {I}) -> WP_dw {P} i -> WP {P} i",
        "fun i w => elimDW (fun i _ => WP {P} i) (fun i n f h => ind i n (fun j r => h (pair j r))) i w"},
       {"wpdw_from_to", "(i : {I}) -> (x : WP {P} i) -> Id (WP {P} i) (wpdw_from {P} i (wpdw_to {P} i x)) x",
        "fun i x => elimWP (fun i x => Id (WP {P} i) (wpdw_from {P} i (wpdw_to {P} i x)) x) (fun i n f h => "
        "ap ((j : {I}) -> {R} i n j -> WP {P} j) (WP {P} i) (fun F => ind i n F) "
        "(fun j r => wpdw_from {P} j (wpdw_to {P} j (f j r))) f (funext2 {I} (fun j => {R} i n j) (fun j r => WP {P} j) "
        "(fun j r => wpdw_from {P} j (wpdw_to {P} j (f j r))) f h)) i x"},
       {"wpdw_to_from", "(i : {I}) -> (x : WP_dw {P} i) -> Id (WP_dw {P} i) (wpdw_to {P} i (wpdw_from {P} i x)) x",
        "fun i x => elimDW (fun i x => Id (WP_dw {P} i) (wpdw_to {P} i (wpdw_from {P} i x)) x) (fun i n f h => "
        "ap ((p : wp_Br {P} i n) -> WP_dw {P} (fst p)) (WP_dw {P} i) (fun F => dsup i n F) (" + back + ") f "
        "(funext (wp_Br {P} i n) (fun p => WP_dw {P} (fst p)) (" + back + ") f "
        "(fun p => split (fun p => Id (WP_dw {P} (fst p)) (wpdw_to {P} (fst p) (wpdw_from {P} (fst p) "
        "(f (pair (fst p) (snd p))))) (f p)) (fun j r => h (pair j r)) p))) i x"}});
  out += rules(fam, "wpdw", {{"iso", "(i : {I}) -> Iso (WP {P} i) (WP_dw {P} i)",
                              "fun i => pair (wpdw_to {P} i) (pair (wpdw_from {P} i) (pair (wpdw_from_to {P} i) "
                              "(wpdw_to_from {P} i)))"}});
  return trim_end(out);
}

std::string build_w_via_wp(bool iso) {
  const Family& fam = w_family();
  if (!iso) {
    std::string out = header("W-types through well-founded predicates; rules hold definitionally.", {"w_wp_common.mltt"});
    const std::string motive = "(M : W_wp {P} -> U0)";
    const std::string step = "(d : (a : {A}) -> (f : {B} a -> W_wp {P}) -> ((b : {B} a) -> M (f b)) -> M (sup_wp {P} a f))";
    const std::string elim_type = motive + " -> " + step + " -> (w : W_wp {P}) -> M w";
    out += schema_defs(fam, {{"sup_wp", "(a : {A}) -> ({B} a -> W_wp {P}) -> W_wp {P}", "fun a f => ind star a (fun j => f)"},
                             {"elimW_wp", elim_type,
                              "fun M d w => elimWP (fun i w => M w) (fun i n f h => d n (f star) (h star)) star w"}});
    out += rules(fam, "wwp",
                 {{"form", "U0", "W_wp {P}"},
                  {"intro", "(a : {A}) -> ({B} a -> W_wp {P}) -> W_wp {P}", "sup_wp {P}"},
                  {"elim", elim_type, "elimW_wp {P}"},
                  {"comp",
                   motive + " -> " + step +
                       " -> (a : {A}) -> (f : {B} a -> W_wp {P}) -> Id (M (sup_wp {P} a f)) "
                       "(elimW_wp {P} M d (sup_wp {P} a f)) (d a f (fun b => elimW_wp {P} M d (f b)))",
                   "fun M d a f => refl (d a f (fun b => elimW_wp {P} M d (f b)))"}});
    return trim_end(out);
  }

  std::string out = header("W-types are isomorphic to their well-founded predicate encoding, given extensionality.",
                           {"funext_lemmas.mltt", "w_wp_common.mltt"});
  // The round trip through W is stated for every index; at star the cast is
  // the identity.
  const std::string G = "(fun j b => unitElim (fun j => W_wp_at {P} j) (wwp_to {P} (wwp_from_at {P} star (f star b))) j)";
  const std::string Q = "Id (W_wp_at {P} i) (W_cast {P} i (wwp_to {P} (wwp_from_at {P} i w))) w";
  out += schema_defs(
      fam,
      {{"wwp_to", "W {A} {B} -> W_wp {P}",
        "fun w => elimW (fun _ => W_wp {P}) (fun a f h => ind star a (fun j b => unitElim (fun j => W_wp_at {P} j) (h b) j)) w"},
       {"wwp_from_at", "(i : N1) -> W_wp_at {P} i -> W {A} {B}",
        "fun i w => elimWP (fun i _ => W {A} {B}) (fun i n f h => sup n (h star)) i w"},
       {"wwp_from", "W_wp {P} -> W {A} {B}", "wwp_from_at {P} star"},
       {"W_cast", "(i : N1) -> W_wp {P} -> W_wp_at {P} i", "fun i => unitElim (fun i => W_wp {P} -> W_wp_at {P} i) (fun x => x) i"},
       {"wwp_from_to", "(x : W {A} {B}) -> Id (W {A} {B}) (wwp_from {P} (wwp_to {P} x)) x",
        "fun x => elimW (fun x => Id (W {A} {B}) (wwp_from {P} (wwp_to {P} x)) x) (fun a f h => "
        "ap ({B} a -> W {A} {B}) (W {A} {B}) (fun F => sup a F) (fun b => wwp_from {P} (wwp_to {P} (f b))) f "
        "(funext ({B} a) (fun _ => W {A} {B}) (fun b => wwp_from {P} (wwp_to {P} (f b))) f h)) x"},
       {"wwp_to_from_at", "(i : N1) -> (w : W_wp_at {P} i) -> " + Q,
        "fun i w => elimWP (fun i w => " + Q + ") (fun i n f h => unitElim (fun i => Id (W_wp_at {P} i) "
        "(W_cast {P} i (wwp_to {P} (wwp_from_at {P} i (ind i n f)))) (ind i n f)) "
        "(ap ((j : N1) -> {B} n -> W_wp_at {P} j) (W_wp {P}) (fun F => ind star n F) " + G + " f "
        "(funext2 N1 (fun j => {B} n) (fun j b => W_wp_at {P} j) " + G + " f "
        "(fun j b => unitElim (fun j => Id (W_wp_at {P} j) (unitElim (fun j => W_wp_at {P} j) "
        "(wwp_to {P} (wwp_from_at {P} star (f star b))) j) (f j b)) (h star b) j))) i) i w"},
       {"wwp_to_from", "(w : W_wp {P}) -> Id (W_wp {P}) (wwp_to {P} (wwp_from {P} w)) w", "wwp_to_from_at {P} star"}});
  out += rules(fam, "wwp", {{"iso", "Iso (W {A} {B}) (W_wp {P})",
                             "pair (wwp_to {P}) (pair (wwp_from {P}) (pair (wwp_from_to {P}) (wwp_to_from {P})))"}});
  return trim_end(out);
}

}  // namespace wtt::encodings
