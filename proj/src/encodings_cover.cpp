// Covers and well-founded predicates: the two equivalences, the
// representation property, and the Canonical refinement in both directions.

#include "templates.hpp"
#include "wtt/encodings.hpp"

namespace wtt::encodings {

using namespace detail;

namespace {

// The predicate generated by (N, R) from an axiom set, as a surface type
// family over A.
const char* kWPR = "WP {A} (cov_N {P}) (cov_R {P})";

std::string wpr(const std::string& at) { return std::string(kWPR) + " " + at; }

}  // namespace

std::string build_cover_as_wp() {
  const Family& fam = cover_family();
  std::string out = header("A cover is the well-founded predicate with rules V a + I a.", {"prelude.mltt", "instances.mltt"});
  out += schema_defs(
      fam, {{"cov_N", "{A} -> U0", "fun a => Sum ({V} a) ({I} a)"},
            {"cov_R", "(a : {A}) -> cov_N {P} a -> {A} -> U0",
             "fun a n b => case (fun _ => U0) (fun _ => N0) (fun i => {C} a i b) n"},
            {"cover_to_wp", "(a : {A}) -> Cover {P} a -> " + wpr("a"),
             "fun a w => elimCover (fun a _ => " + wpr("a") + ") (fun a r => ind a (inl r) (fun j z => absurd (fun _ => " +
                 wpr("j") + ") z)) (fun a i r h => ind a (inr i) h) a w"},
            {"wp_to_cover", "(a : {A}) -> " + wpr("a") + " -> Cover {P} a",
             "fun a w => elimWP (fun a _ => Cover {P} a) (fun a n f h => case (fun n => ((j : {A}) -> cov_R {P} a n j -> "
             "Cover {P} j) -> Cover {P} a) (fun r h => rf a r) (fun i h => tr a i h) n h) a w"}});
  out += rules(fam, "cov",
               {{"equiv", "(a : {A}) -> Iff (Cover {P} a) (" + wpr("a") + ")",
                 "fun a => pair (cover_to_wp {P} a) (wp_to_cover {P} a)"}});
  return trim_end(out);
}

std::string build_wp_as_cover() {
  const Family& fam = wp_family();
  std::string out = header("A well-founded predicate is the cover of the empty subset by its own rules.",
                           {"prelude.mltt", "instances.mltt"});
  const char* cov = "Cover {I} {N} {R} (fun _ => N0)";
  out += schema_defs(
      fam, {{"wp_to_cov", "(i : {I}) -> WP {P} i -> " + std::string(cov) + " i",
             "fun i w => elimWP (fun i _ => " + std::string(cov) + " i) (fun i n f h => tr i n h) i w"},
            {"cov_to_wp", "(i : {I}) -> " + std::string(cov) + " i -> WP {P} i",
             "fun i w => elimCover (fun i _ => WP {P} i) (fun i r => absurd (fun _ => WP {P} i) r) "
             "(fun i n f h => ind i n h) i w"}});
  out += rules(fam, "wp", {{"cov_equiv", "(i : {I}) -> Iff (WP {P} i) (" + std::string(cov) + " i)",
                            "fun i => pair (wp_to_cov {P} i) (cov_to_wp {P} i)"}});
  return trim_end(out);
}

std::string build_representation_lemma() {
  const Family& fam = wp_family();
  std::string out = header("Representation property: a predicate holds exactly when some rule has all premises.",
                           {"prelude.mltt", "instances.mltt"});
  const char* rhs = "(n : {N} i) * ((j : {I}) -> {R} i n j -> WP {P} j)";
  out += schema_defs(fam, {{"rep_to", "(i : {I}) -> WP {P} i -> " + std::string(rhs),
                            "fun i w => elimWP (fun i _ => " + std::string(rhs) + ") (fun i n f h => pair n f) i w"},
                           {"rep_from", "(i : {I}) -> (" + std::string(rhs) + ") -> WP {P} i",
                            "fun i p => ind i (fst p) (snd p)"}});
  out += rules(fam, "wp", {{"rep", "(i : {I}) -> Iff (WP {P} i) (" + std::string(rhs) + ")",
                            "fun i => pair (rep_to {P} i) (rep_from {P} i)"}});
  return trim_end(out);
}

namespace detail {

std::string canonical_common() {
  const Family& cov = cover_family();
  std::string out = header("Covers as canonical well-founded proofs, and predicates as covers: shared definitions.",
                           {"cover_as_wp.mltt"});
  out += schema_defs(
      cov,
      {{"no_premises", "(j : {A}) -> N0 -> " + wpr("j"), "fun j z => absurd (fun _ => " + wpr("j") + ") z"},
       {"Canonical", "(a : {A}) -> " + wpr("a") + " -> U0",
        "fun a w => elimWP (fun a _ => U0) (fun a n f h => case (fun n => ((j : {A}) -> cov_R {P} a n j -> " + wpr("j") +
            ") -> ((j : {A}) -> cov_R {P} a n j -> U0) -> U0) (fun r f h => Id ((j : {A}) -> N0 -> " + wpr("j") +
            ") (no_premises {P}) f) (fun i f h => (b : {A}) -> (s : {C} a i b) -> h b s) n f h) a w"},
       {"Cover_wp", "{A} -> U0", "fun a => (w : " + wpr("a") + ") * Canonical {P} a w"},
       {"rf_wp", "(a : {A}) -> {V} a -> Cover_wp {P} a",
        "fun a r => pair (ind a (inl r) (no_premises {P})) (refl (no_premises {P}))"},
       {"tr_wp", "(a : {A}) -> (i : {I} a) -> ((b : {A}) -> {C} a i b -> Cover_wp {P} b) -> Cover_wp {P} a",
        "fun a i r => pair (ind a (inr i) (fun b s => fst (r b s))) (fun b s => snd (r b s))"}});
  const Family& wp = wp_family();
  out += schema_defs(wp, {{"WP_cov", "{I} -> U0", "fun i => Cover {I} {N} {R} (fun _ => N0) i"},
                          {"ind_cov", "(i : {I}) -> (n : {N} i) -> ((j : {I}) -> {R} i n j -> WP_cov {P} j) -> WP_cov {P} i",
                           "fun i n f => tr i n f"}});
  return trim_end(out);
}

}  // namespace detail

std::string build_canonical(bool iso) {
  const Family& cov = cover_family();
  const Family& wp = wp_family();
  std::string out;
  if (!iso) {
    out = header("Covers through well-founded predicates and back; rules hold definitionally.", {"canonical_common.mltt"});
    const std::string motive = "(M : (a : {A}) -> Cover_wp {P} a -> U0)";
    const std::string q1 = "(q1 : (a : {A}) -> (r : {V} a) -> M a (rf_wp {P} a r))";
    const std::string q2 =
        "(q2 : (a : {A}) -> (i : {I} a) -> (r : (b : {A}) -> {C} a i b -> Cover_wp {P} b) -> "
        "((b : {A}) -> (s : {C} a i b) -> M b (r b s)) -> M a (tr_wp {P} a i r))";
    const std::string elim_type = motive + " -> " + q1 + " -> " + q2 + " -> (a : {A}) -> (w : Cover_wp {P} a) -> M a w";
    out += schema_defs(
        cov,
        {{"elimCover_wp", elim_type,
          "fun M q1 q2 a w => elimWP (fun a t => (c : Canonical {P} a t) -> M a (pair t c)) (fun a n f h => "
          "case (fun n => (f : (j : {A}) -> cov_R {P} a n j -> " + wpr("j") +
              ") -> ((j : {A}) -> (s : cov_R {P} a n j) -> (c : Canonical {P} j (f j s)) -> M j (pair (f j s) c)) -> "
              "(c : Canonical {P} a (ind a n f)) -> M a (pair (ind a n f) c)) "
              "(fun r f h c => J (fun y q => M a (pair (ind a (inl r) y) q)) (q1 a r) (no_premises {P}) f c) "
              "(fun i f h c => q2 a i (fun b s => pair (f b s) (c b s)) (fun b s => h b s (c b s))) n f h) a (fst w) (snd w)"}});
    out += rules(cov, "covwp",
                 {{"form", "{A} -> U0", "Cover_wp {P}"},
                  {"rf", "(a : {A}) -> {V} a -> Cover_wp {P} a", "rf_wp {P}"},
                  {"tr", "(a : {A}) -> (i : {I} a) -> ((b : {A}) -> {C} a i b -> Cover_wp {P} b) -> Cover_wp {P} a",
                   "tr_wp {P}"},
                  {"elim", elim_type, "elimCover_wp {P}"},
                  {"comp_rf",
                   motive + " -> " + q1 + " -> " + q2 +
                       " -> (a : {A}) -> (r : {V} a) -> Id (M a (rf_wp {P} a r)) (elimCover_wp {P} M q1 q2 a (rf_wp {P} a r)) "
                       "(q1 a r)",
                   "fun M q1 q2 a r => refl (q1 a r)"},
                  {"comp_tr",
                   motive + " -> " + q1 + " -> " + q2 +
                       " -> (a : {A}) -> (i : {I} a) -> (r : (b : {A}) -> {C} a i b -> Cover_wp {P} b) -> "
                       "Id (M a (tr_wp {P} a i r)) (elimCover_wp {P} M q1 q2 a (tr_wp {P} a i r)) "
                       "(q2 a i r (fun b s => elimCover_wp {P} M q1 q2 b (r b s)))",
                   "fun M q1 q2 a i r => refl (q2 a i r (fun b s => elimCover_wp {P} M q1 q2 b (r b s)))"}});
    const std::string wmotive = "(M : (i : {I}) -> WP_cov {P} i -> U0)";
    const std::string step =
        "(c : (i : {I}) -> (n : {N} i) -> (f : (j : {I}) -> {R} i n j -> WP_cov {P} j) -> "
        "((j : {I}) -> (r : {R} i n j) -> M j (f j r)) -> M i (ind_cov {P} i n f))";
    const std::string welim_type = wmotive + " -> " + step + " -> (i : {I}) -> (w : WP_cov {P} i) -> M i w";
    out += schema_defs(wp, {{"elimWP_cov", welim_type,
                             "fun M c i w => elimCover (fun i w => M i w) (fun i r => absurd (fun z => M i (rf i z)) r) "
                             "(fun i n f h => c i n f h) i w"}});
    out += rules(wp, "wpcov",
                 {{"form", "{I} -> U0", "WP_cov {P}"},
                  {"intro", "(i : {I}) -> (n : {N} i) -> ((j : {I}) -> {R} i n j -> WP_cov {P} j) -> WP_cov {P} i",
                   "ind_cov {P}"},
                  {"elim", welim_type, "elimWP_cov {P}"},
                  {"comp",
                   wmotive + " -> " + step +
                       " -> (i : {I}) -> (n : {N} i) -> (f : (j : {I}) -> {R} i n j -> WP_cov {P} j) -> "
                       "Id (M i (ind_cov {P} i n f)) (elimWP_cov {P} M c i (ind_cov {P} i n f)) "
                       "(c i n f (fun j r => elimWP_cov {P} M c j (f j r)))",
                   "fun M c i n f => refl (c i n f (fun j r => elimWP_cov {P} M c j (f j r)))"}});
    return trim_end(out);
  }

  out = header("Covers and well-founded predicates are isomorphic to their mutual encodings, given extensionality.",
               {"funext_lemmas.mltt", "canonical_common.mltt"});
  auto qm = [](const std::string& a, const std::string& t) {
    return "(c : Canonical {P} " + a + " " + t + ") -> Id (Cover_wp {P} " + a + ") (cov_to {P} " + a + " (cov_from {P} " + a +
           " (pair " + t + " c))) (pair " + t + " c)";
  };
  out += schema_defs(
      cov,
      {{"cov_to", "(a : {A}) -> Cover {P} a -> Cover_wp {P} a",
        "fun a w => elimCover (fun a _ => Cover_wp {P} a) (fun a r => rf_wp {P} a r) (fun a i r h => tr_wp {P} a i h) a w"},
       {"cov_from", "(a : {A}) -> Cover_wp {P} a -> Cover {P} a",
        "fun a w => elimWP (fun a t => Canonical {P} a t -> Cover {P} a) (fun a n f h => case (fun n => "
        "(f : (j : {A}) -> cov_R {P} a n j -> " + wpr("j") +
            ") -> ((j : {A}) -> (s : cov_R {P} a n j) -> Canonical {P} j (f j s) -> Cover {P} j) -> "
            "Canonical {P} a (ind a n f) -> Cover {P} a) (fun r f h c => rf a r) "
            "(fun i f h c => tr a i (fun b s => h b s (c b s))) n f h) a (fst w) (snd w)"},
       {"cov_from_to", "(a : {A}) -> (x : Cover {P} a) -> Id (Cover {P} a) (cov_from {P} a (cov_to {P} a x)) x",
        "fun a x => elimCover (fun a x => Id (Cover {P} a) (cov_from {P} a (cov_to {P} a x)) x) (fun a r => refl (rf a r)) "
        "(fun a i r h => ap ((b : {A}) -> {C} a i b -> Cover {P} b) (Cover {P} a) (fun F => tr a i F) "
        "(fun b s => cov_from {P} b (cov_to {P} b (r b s))) r (funext2 {A} (fun b => {C} a i b) (fun b s => Cover {P} b) "
        "(fun b s => cov_from {P} b (cov_to {P} b (r b s))) r h)) a x"},
       {"cov_to_from", "(a : {A}) -> (w : Cover_wp {P} a) -> Id (Cover_wp {P} a) (cov_to {P} a (cov_from {P} a w)) w",
        "fun a w => split (fun w => Id (Cover_wp {P} a) (cov_to {P} a (cov_from {P} a w)) w) (fun t c => elimWP (fun a t => " +
            qm("a", "t") + ") (fun a n f h => case (fun n => (f : (j : {A}) -> cov_R {P} a n j -> " + wpr("j") +
            ") -> ((j : {A}) -> (s : cov_R {P} a n j) -> " + qm("j", "(f j s)") + ") -> " + qm("a", "(ind a n f)") +
            ") (fun r f h c => J (fun y q => Id (Cover_wp {P} a) (cov_to {P} a (cov_from {P} a (pair (ind a (inl r) y) q))) "
            "(pair (ind a (inl r) y) q)) (refl (rf_wp {P} a r)) (no_premises {P}) f c) "
            "(fun i f h c => trans (Cover_wp {P} a) "
            "(tr_wp {P} a i (fun b s => cov_to {P} b (cov_from {P} b (pair (f b s) (c b s))))) "
            "(tr_wp {P} a i (fun b s => pair (f b s) (c b s))) (pair (ind a (inr i) f) c) "
            "(ap ((b : {A}) -> {C} a i b -> Cover_wp {P} b) (Cover_wp {P} a) (tr_wp {P} a i) "
            "(fun b s => cov_to {P} b (cov_from {P} b (pair (f b s) (c b s)))) (fun b s => pair (f b s) (c b s)) "
            "(funext2 {A} (fun b => {C} a i b) (fun b s => Cover_wp {P} b) "
            "(fun b s => cov_to {P} b (cov_from {P} b (pair (f b s) (c b s)))) (fun b s => pair (f b s) (c b s)) "
            "(fun b s => h b s (c b s)))) "
            "(ap ((g : (b : {A}) -> (s : {C} a i b) -> " + wpr("b") +
            ") * ((b : {A}) -> (s : {C} a i b) -> Canonical {P} b (g b s))) (Cover_wp {P} a) "
            "(fun p => pair (ind a (inr i) (fst p)) (snd p)) (pair (fun b s => f b s) (fun b s => c b s)) (pair f c) "
            "(eta_pair2 {A} (fun b => {C} a i b) (fun b s => " + wpr("b") +
            ") (fun b s t => Canonical {P} b t) f c))) n f h) a t c) w"}});
  out += rules(cov, "cov", {{"iso", "(a : {A}) -> Iso (Cover {P} a) (Cover_wp {P} a)",
                             "fun a => pair (cov_to {P} a) (pair (cov_from {P} a) (pair (cov_from_to {P} a) (cov_to_from {P} a)))"}});
  out += schema_defs(
      wp,
      {{"wpc_to", "(i : {I}) -> WP {P} i -> WP_cov {P} i",
        "fun i w => elimWP (fun i _ => WP_cov {P} i) (fun i n f h => tr i n h) i w"},
       {"wpc_from", "(i : {I}) -> WP_cov {P} i -> WP {P} i",
        "fun i w => elimCover (fun i _ => WP {P} i) (fun i r => absurd (fun _ => WP {P} i) r) (fun i n f h => ind i n h) i w"},
       {"wpc_from_to", "(i : {I}) -> (x : WP {P} i) -> Id (WP {P} i) (wpc_from {P} i (wpc_to {P} i x)) x",
        "fun i x => elimWP (fun i x => Id (WP {P} i) (wpc_from {P} i (wpc_to {P} i x)) x) (fun i n f h => "
        "ap ((j : {I}) -> {R} i n j -> WP {P} j) (WP {P} i) (fun F => ind i n F) "
        "(fun j r => wpc_from {P} j (wpc_to {P} j (f j r))) f (funext2 {I} (fun j => {R} i n j) (fun j r => WP {P} j) "
        "(fun j r => wpc_from {P} j (wpc_to {P} j (f j r))) f h)) i x"},
       {"wpc_to_from", "(i : {I}) -> (x : WP_cov {P} i) -> Id (WP_cov {P} i) (wpc_to {P} i (wpc_from {P} i x)) x",
        "fun i x => elimCover (fun i x => Id (WP_cov {P} i) (wpc_to {P} i (wpc_from {P} i x)) x) "
        "(fun i r => absurd (fun z => Id (WP_cov {P} i) (wpc_to {P} i (wpc_from {P} i (rf i z))) (rf i z)) r) "
        "(fun i n f h => ap ((j : {I}) -> {R} i n j -> WP_cov {P} j) (WP_cov {P} i) (fun F => tr i n F) "
        "(fun j r => wpc_to {P} j (wpc_from {P} j (f j r))) f (funext2 {I} (fun j => {R} i n j) (fun j r => WP_cov {P} j) "
        "(fun j r => wpc_to {P} j (wpc_from {P} j (f j r))) f h)) i x"}});
  out += rules(wp, "wpcov", {{"iso", "(i : {I}) -> Iso (WP {P} i) (WP_cov {P} i)",
                              "fun i => pair (wpc_to {P} i) (pair (wpc_from {P} i) (pair (wpc_from_to {P} i) (wpc_to_from {P} i)))"}});
  return trim_end(out);
}

}  // namespace wtt::encodings
