#include "templates.hpp"
#include "wtt/encodings.hpp"

namespace wtt::encodings {

using namespace detail;

// Parameters of the empty, unit and two-element instances of every family.
std::string build_instances() {
  std::string out = header("Small parameter instances: empty, unit and two-element.", {});
  for (const Family* fam : {&w_family(), &dw_family(), &wp_family(), &cover_family()}) out += instance_params(*fam);
  return trim_end(out);
}

// ---- prelude ----------------------------------------------------------------

std::string build_prelude() {
  std::string out = header("Isomorphism, logical equivalence and identity-type combinators.", {});
  out += def("Iso", "U0 -> U0 -> U0",
             "fun A B => (f : A -> B) * (g : B -> A) * ((x : A) -> Id A (g (f x)) x) * ((y : B) -> Id B (f (g y)) y)");
  out += def("Iff", "U0 -> U0 -> U0", "fun A B => (A -> B) * (B -> A)");
  out += def("sym", "(A : U0) -> (a b : A) -> Id A a b -> Id A b a",
             "fun A a b p => J (fun y q => Id A y a) (refl a) a b p");
  out += def("trans", "(A : U0) -> (a b c : A) -> Id A a b -> Id A b c -> Id A a c",
             "fun A a b c p q => J (fun y r => Id A a y) p b c q");
  out += def("ap", "(A B : U0) -> (f : A -> B) -> (a b : A) -> Id A a b -> Id B (f a) (f b)",
             "fun A B f a b p => J (fun y q => Id B (f a) (f y)) (refl (f a)) a b p");
  out += def("transport", "(A : U0) -> (P : A -> U0) -> (a b : A) -> Id A a b -> P a -> P b",
             "fun A P a b p => J (fun y q => P a -> P y) (fun x => x) a b p");
  return trim_end(out);
}

// Consequences of the extensionality constant used by every isomorphism file.
std::string build_funext_lemmas() {
  std::string out = header("Consequences of function extensionality.", {"prelude.mltt"});
  out += def("funext2",
             "(A : U0) -> (B : A -> U0) -> (C : (x : A) -> B x -> U0) -> (f g : (x : A) -> (y : B x) -> C x y) -> "
             "((x : A) -> (y : B x) -> Id (C x y) (f x y) (g x y)) -> Id ((x : A) -> (y : B x) -> C x y) f g",
             "fun A B C f g p => funext A (fun x => (y : B x) -> C x y) f g (fun x => funext (B x) (C x) (f x) (g x) (p x))");
  out += def("eta_fun", "(A : U0) -> (B : A -> U0) -> (f : (x : A) -> B x) -> Id ((x : A) -> B x) (fun x => f x) f",
             "fun A B f => funext A B (fun x => f x) f (fun x => refl (f x))");
  out += def("eta_fun2",
             "(A : U0) -> (B : A -> U0) -> (C : (x : A) -> B x -> U0) -> (f : (x : A) -> (y : B x) -> C x y) -> "
             "Id ((x : A) -> (y : B x) -> C x y) (fun x y => f x y) f",
             "fun A B C f => funext2 A B C (fun x y => f x y) f (fun x y => refl (f x y))");
  // A pair of functions equals the pair of their eta-expansions. The proof
  // generalizes the second component before eliminating the path, so no
  // computation of transport along a funext path is needed.
  out += def("eta_pair",
             "(A : U0) -> (B : A -> U0) -> (D : (x : A) -> B x -> U0) -> (f : (x : A) -> B x) -> "
             "(k : (x : A) -> D x (f x)) -> "
             "Id ((g : (x : A) -> B x) * ((x : A) -> D x (g x))) (pair (fun x => f x) (fun x => k x)) (pair f k)",
             "fun A B D f k => J (fun y q => (m : (x : A) -> D x (y x)) -> "
             "Id ((g : (x : A) -> B x) * ((x : A) -> D x (g x))) (pair (fun x => y x) (fun x => m x)) (pair y m)) "
             "(fun m => ap ((x : A) -> D x (f x)) ((g : (x : A) -> B x) * ((x : A) -> D x (g x))) "
             "(fun m' => pair (fun x => f x) m') (fun x => m x) m (eta_fun A (fun x => D x (f x)) m)) "
             "(fun x => f x) f (eta_fun A B f) k");
  out += def("eta_pair2",
             "(A : U0) -> (B : A -> U0) -> (C : (x : A) -> B x -> U0) -> (D : (x : A) -> (y : B x) -> C x y -> U0) -> "
             "(f : (x : A) -> (y : B x) -> C x y) -> (k : (x : A) -> (y : B x) -> D x y (f x y)) -> "
             "Id ((g : (x : A) -> (y : B x) -> C x y) * ((x : A) -> (y : B x) -> D x y (g x y))) "
             "(pair (fun x y => f x y) (fun x y => k x y)) (pair f k)",
             "fun A B C D f k => J (fun z q => (m : (x : A) -> (y : B x) -> D x y (z x y)) -> "
             "Id ((g : (x : A) -> (y : B x) -> C x y) * ((x : A) -> (y : B x) -> D x y (g x y))) "
             "(pair (fun x y => z x y) (fun x y => m x y)) (pair z m)) "
             "(fun m => ap ((x : A) -> (y : B x) -> D x y (f x y)) "
             "((g : (x : A) -> (y : B x) -> C x y) * ((x : A) -> (y : B x) -> D x y (g x y))) "
             "(fun m' => pair (fun x y => f x y) m') (fun x y => m x y) m (eta_fun2 A B (fun x y => D x y (f x y)) m)) "
             "(fun x y => f x y) f (eta_fun2 A B C f) k");
  return trim_end(out);
}

// ---- dependent W-types through W-types ---------------------------------------

std::string build_free(const DWParams& p) {
  return fill("W ((i : {I}) * {N} i) (fun z => {Br} (fst z) (snd z))", {{"I", atom(p.I)}, {"N", atom(p.N)}, {"Br", atom(p.Br)}});
}

std::string build_legal(const DWParams& p) {
  Subst s{{"I", atom(p.I)}, {"N", atom(p.N)}, {"Br", atom(p.Br)}, {"ar", atom(p.ar)}};
  return fill(
      "fun i w => elimW (fun _ => {I} -> U0) (fun lab f h => fun k => "
      "((b : {Br} (fst lab) (snd lab)) -> h b ({ar} (fst lab) (snd lab) b)) * Id {I} (fst lab) k) w i",
      s);
}

namespace {

std::string dw_common() {
  const Family& fam = dw_family();
  std::string out = header("Dependent W-types as legal trees of a plain W-type: shared definitions.",
                           {"prelude.mltt", "instances.mltt"});
  out += schema_defs(fam, {{"Free", "U0", build_free({})},
                           {"Legal", "{I} -> Free {P} -> U0", build_legal({})},
                           {"DW_w", "{I} -> U0", "fun i => (w : Free {P}) * Legal {P} i w"},
                           {"dsup_w", "(i : {I}) -> (n : {N} i) -> ((b : {Br} i n) -> DW_w {P} ({ar} i n b)) -> DW_w {P} i",
                            "fun i n f => pair (sup (pair i n) (fun b => fst (f b))) (pair (fun b => snd (f b)) (refl i))"}});
  return trim_end(out);
}

}  // namespace

std::string build_dw_encoding() {
  const Family& fam = dw_family();
  std::string out = header("Dependent W-types through W-types; rules hold definitionally.", {"dw_common.mltt"});
  const char* motive = "(M : (i : {I}) -> DW_w {P} i -> U0)";
  const char* step =
      "(d : (i : {I}) -> (n : {N} i) -> (f : (b : {Br} i n) -> DW_w {P} ({ar} i n b)) -> "
      "((b : {Br} i n) -> M ({ar} i n b) (f b)) -> M i (dsup_w {P} i n f))";
  out += schema_defs(
      fam, {{"elimDW_w", std::string(motive) + " -> " + step + " -> (i : {I}) -> (w : DW_w {P} i) -> M i w",
             "fun M d i w => elimW (fun t => (k : {I}) -> (l : Legal {P} k t) -> M k (pair t l)) "
             "(fun lab f h => fun k l => J (fun y q => (l1 : (b : {Br} (fst lab) (snd lab)) -> "
             "Legal {P} ({ar} (fst lab) (snd lab) b) (f b)) -> M y (pair (sup lab f) (pair l1 q))) "
             "(fun l1 => d (fst lab) (snd lab) (fun b => pair (f b) (l1 b)) (fun b => h b ({ar} (fst lab) (snd lab) b) (l1 b))) "
             "(fst lab) k (snd l) (fst l)) (fst w) i (snd w)"}});
  out += rules(fam, "dw",
               {{"form", "{I} -> U0", "DW_w {P}"},
                {"intro", "(i : {I}) -> (n : {N} i) -> ((b : {Br} i n) -> DW_w {P} ({ar} i n b)) -> DW_w {P} i", "dsup_w {P}"},
                {"elim", std::string(motive) + " -> " + step + " -> (i : {I}) -> (w : DW_w {P} i) -> M i w", "elimDW_w {P}"},
                {"comp",
                 std::string(motive) + " -> " + step +
                     " -> (i : {I}) -> (n : {N} i) -> (f : (b : {Br} i n) -> DW_w {P} ({ar} i n b)) -> "
                     "Id (M i (dsup_w {P} i n f)) (elimDW_w {P} M d i (dsup_w {P} i n f)) "
                     "(d i n f (fun b => elimDW_w {P} M d ({ar} i n b) (f b)))",
                 "fun M d i n f => refl (d i n f (fun b => elimDW_w {P} M d ({ar} i n b) (f b)))"}});
  return trim_end(out);
}

std::string build_dw_iso() {
  const Family& fam = dw_family();
  std::string out = header("Dependent W-types are isomorphic to their encoding through W-types, given extensionality.",
                           {"funext_lemmas.mltt", "dw_common.mltt"});
  const char* motive_body =
      "(k : {I}) -> (l : Legal {P} k {t}) -> Id (DW_w {P} k) (dw_to {P} k (dw_from {P} k (pair {t} l))) (pair {t} l)";
  auto mot = [&](const std::string& t) { return fill(motive_body, {{"I", "{I}"}, {"P", "{P}"}, {"t", t}}); };
  out += schema_defs(
      fam,
      {{"dw_to", "(i : {I}) -> DW {P} i -> DW_w {P} i",
        "fun i w => elimDW (fun i _ => DW_w {P} i) (fun i n f h => dsup_w {P} i n h) i w"},
       {"dw_from", "(i : {I}) -> DW_w {P} i -> DW {P} i",
        "fun i w => elimW (fun t => (k : {I}) -> Legal {P} k t -> DW {P} k) (fun lab f h => fun k l => "
        "J (fun y q => ((b : {Br} (fst lab) (snd lab)) -> Legal {P} ({ar} (fst lab) (snd lab) b) (f b)) -> DW {P} y) "
        "(fun l1 => dsup (fst lab) (snd lab) (fun b => h b ({ar} (fst lab) (snd lab) b) (l1 b))) "
        "(fst lab) k (snd l) (fst l)) (fst w) i (snd w)"},
       {"dw_from_to", "(i : {I}) -> (x : DW {P} i) -> Id (DW {P} i) (dw_from {P} i (dw_to {P} i x)) x",
        "fun i x => elimDW (fun i x => Id (DW {P} i) (dw_from {P} i (dw_to {P} i x)) x) (fun i n f h => "
        "ap ((b : {Br} i n) -> DW {P} ({ar} i n b)) (DW {P} i) (fun F => dsup i n F) "
        "(fun b => dw_from {P} ({ar} i n b) (dw_to {P} ({ar} i n b) (f b))) f "
        "(funext ({Br} i n) (fun b => DW {P} ({ar} i n b)) "
        "(fun b => dw_from {P} ({ar} i n b) (dw_to {P} ({ar} i n b) (f b))) f h)) i x"},
       {"dw_to_from", "(i : {I}) -> (w : DW_w {P} i) -> Id (DW_w {P} i) (dw_to {P} i (dw_from {P} i w)) w",
        "fun i w => split (fun w => Id (DW_w {P} i) (dw_to {P} i (dw_from {P} i w)) w) (fun t l => elimW (fun t => " +
            mot("t") + ") (fun lab => split (fun lab => (f : {Br} (fst lab) (snd lab) -> Free {P}) -> ((b : {Br} (fst lab) (snd lab)) -> " +
            mot("(f b)") + ") -> " + mot("(sup lab f)") +
            ") (fun j n f h => fun k l => split (fun l => Id (DW_w {P} k) (dw_to {P} k (dw_from {P} k (pair (sup (pair j n) f) l))) "
            "(pair (sup (pair j n) f) l)) (fun l1 q => J (fun y q => Id (DW_w {P} y) "
            "(dw_to {P} y (dw_from {P} y (pair (sup (pair j n) f) (pair l1 q)))) (pair (sup (pair j n) f) (pair l1 q))) "
            "(trans (DW_w {P} j) (dsup_w {P} j n (fun b => dw_to {P} ({ar} j n b) (dw_from {P} ({ar} j n b) (pair (f b) (l1 b))))) "
            "(dsup_w {P} j n (fun b => pair (f b) (l1 b))) (pair (sup (pair j n) f) (pair l1 (refl j))) "
            "(ap ((b : {Br} j n) -> DW_w {P} ({ar} j n b)) (DW_w {P} j) (dsup_w {P} j n) "
            "(fun b => dw_to {P} ({ar} j n b) (dw_from {P} ({ar} j n b) (pair (f b) (l1 b)))) (fun b => pair (f b) (l1 b)) "
            "(funext ({Br} j n) (fun b => DW_w {P} ({ar} j n b)) "
            "(fun b => dw_to {P} ({ar} j n b) (dw_from {P} ({ar} j n b) (pair (f b) (l1 b)))) (fun b => pair (f b) (l1 b)) "
            "(fun b => h b ({ar} j n b) (l1 b)))) "
            "(ap ((g : (b : {Br} j n) -> Free {P}) * ((b : {Br} j n) -> Legal {P} ({ar} j n b) (g b))) (DW_w {P} j) "
            "(fun s => pair (sup (pair j n) (fst s)) (pair (snd s) (refl j))) (pair (fun b => f b) (fun b => l1 b)) (pair f l1) "
            "(eta_pair ({Br} j n) (fun _ => Free {P}) (fun b t => Legal {P} ({ar} j n b) t) f l1))) "
            "j k q) l) lab) t i l) w"}});
  out += rules(fam, "dw", {{"iso", "(i : {I}) -> Iso (DW {P} i) (DW_w {P} i)",
                            "fun i => pair (dw_to {P} i) (pair (dw_from {P} i) (pair (dw_from_to {P} i) (dw_to_from {P} i)))"}});
  return trim_end(out);
}

std::vector<CorpusFile> corpus_files() {
  struct Item {
    const char* tag;  // empty for helpers imported by other files
    const char* file;
    const char* flags;
    std::string (*build)();
  };
  static const Item items[] = {
      {"Prelude", "prelude.mltt", "", build_prelude},
      {"", "funext_lemmas.mltt", "", build_funext_lemmas},
      {"", "instances.mltt", "", build_instances},
      {"", "dw_common.mltt", "", dw_common},
      {"P4.1i", "p41i.mltt", "funext", build_dw_iso},
      {"P4.1ii", "p41ii.mltt", "eta-pi eta-sigma", build_dw_encoding},
      {"RepProp", "rep_prop.mltt", "", build_representation_lemma},
      {"CoverAsWP", "cover_as_wp.mltt", "", build_cover_as_wp},
      {"WPAsCover", "wp_as_cover.mltt", "", build_wp_as_cover},
      {"", "canonical_common.mltt", "", canonical_common},
      {"P5.1ii", "p51ii.mltt", "eta-pi eta-sigma", [] { return build_canonical(false); }},
      {"P5.1i", "p51i.mltt", "funext", [] { return build_canonical(true); }},
      {"", "wp_dw_common.mltt", "", wp_dw_common},
      {"P5.2ii", "p52ii.mltt", "eta-pi eta-sigma", [] { return build_wp_via_dw(false); }},
      {"P5.2i", "p52i.mltt", "funext", [] { return build_wp_via_dw(true); }},
      {"", "w_wp_common.mltt", "", w_wp_common},
      {"P5.2iv", "p52iv.mltt", "eta-pi eta-unit", [] { return build_w_via_wp(false); }},
      {"P5.2iii", "p52iii.mltt", "funext", [] { return build_w_via_wp(true); }},
  };
  std::vector<CorpusFile> out;
  std::string manifest = "# <tag> <file> <required flags>\n";
  for (const auto& it : items) {
    out.push_back({it.file, it.build()});
    if (*it.tag != '\0') manifest += std::string(it.tag) + " " + it.file + (*it.flags ? " " : "") + it.flags + "\n";
  }
  out.push_back({"manifest", manifest});
  return out;
}

}  // namespace wtt::encodings
