#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wtt/flags.hpp"

namespace wtt::encodings {

// ---- corpus -----------------------------------------------------------------

// One line of `corpus/manifest`: `<tag> <file> <required-flags>*`.
struct Entry {
  std::string tag;
  std::string file;
  Flags required;
};

struct ManifestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Entry> parse_manifest(const std::string& text);
std::vector<Entry> load_manifest(const std::filesystem::path& dir);

enum class Status { Pass, Skip, Fail };

struct EntryResult {
  Entry entry;
  Status status = Status::Skip;
  std::string detail;  // first error for Fail; for Skip, the outcome of checking anyway
};

struct Report {
  Flags flags;
  std::vector<EntryResult> results;  // manifest order

  bool ok() const;
  /// Stable line-oriented text: one line per entry and a summary line.
  std::string render() const;
};

/// Checks one file with its imports under `flags`. Returns the rendered first
/// error, or an empty string on success.
std::string check_file(const std::filesystem::path& file, const Flags& flags);

/// Runs every manifest entry. Entries whose requirements are not met are
/// skipped; they are still checked under `flags` so that the outcome can be
/// logged, but that outcome never counts as a failure. Entries run
/// concurrently.
Report check_corpus(const std::filesystem::path& dir, const Flags& flags);

// ---- builders ---------------------------------------------------------------
//
// Every builder emits surface syntax. Parameters are surface terms, applied in
// head position and parenthesized where needed, so they must be inferable
// (names of definitions, typically).

// Dependent W-type parameters: I : U0, N : I -> U0,
// Br : (i : I) -> N i -> U0, ar : (i : I) -> (n : N i) -> Br i n -> I.
struct DWParams {
  std::string I = "I", N = "N", Br = "Br", ar = "ar";
};

// Well-founded predicate parameters: I : U0, N : I -> U0,
// R : (i : I) -> N i -> I -> U0.
struct WPParams {
  std::string I = "I", N = "N", R = "R";
};

// Axiom-set parameters: A : U0, I : A -> U0, C : (a : A) -> I a -> A -> U0,
// V : A -> U0.
struct CoverParams {
  std::string A = "A", I = "I", C = "C", V = "V";
};

// W-type parameters: A : U0, B : A -> U0.
struct WParams {
  std::string A = "A", B = "B";
};

/// W over (i : I) * N i with branching Br applied to both projections.
std::string build_free(const DWParams& p);

/// Legal : I -> Free -> U0, by large elimination on the tree.
std::string build_legal(const DWParams& p);

/// Declarations of Free, Legal, DW', dsup', El' over the parameter
/// telescope, the rule schemas, and instances.
std::string build_dw_encoding();

/// g, its inverse and both round trips, assembled into an Iso for each index.
std::string build_dw_iso();

std::string build_cover_as_wp();
std::string build_wp_as_cover();

/// Canonical, the refined WP type, and either the rule validation (`iso`
/// false, definitional) or the isomorphism with the cover (`iso` true).
std::string build_canonical(bool iso);

/// WP through DW; definitional rule validation or isomorphism.
std::string build_wp_via_dw(bool iso);

/// W through WP at the unit index; definitional rule validation or isomorphism.
std::string build_w_via_wp(bool iso);

std::string build_representation_lemma();

std::string build_prelude();
std::string build_funext_lemmas();
std::string build_instances();

struct CorpusFile {
  std::string name;  // file name inside the corpus directory
  std::string text;
};

/// Every shipped corpus file, imported helpers included, followed by the
/// manifest.
std::vector<CorpusFile> corpus_files();

}  // namespace wtt::encodings
