#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "../support/helpers.hpp"
#include "wtt/encodings.hpp"

using namespace wtt;
using namespace wtt::encodings;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = fs::path(WTT_SOURCE_DIR) / "corpus";

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<Flags> all_flag_sets() {
  std::vector<Flags> out;
  for (int m = 0; m < 16; ++m) out.push_back({bool(m & 1), bool(m & 2), bool(m & 4), bool(m & 8)});
  return out;
}

// Required flags with one of them switched off, for each one that is on.
std::vector<Flags> one_less(const Flags& f) {
  std::vector<Flags> out;
  for (bool Flags::*field : {&Flags::eta_pi, &Flags::eta_sigma, &Flags::eta_unit, &Flags::funext}) {
    if (f.*field) {
      Flags g = f;
      g.*field = false;
      out.push_back(g);
    }
  }
  return out;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

}  // namespace

TEST_CASE("shipped corpus is exactly the builder output") {
  for (const auto& f : corpus_files()) {
    INFO(f.name);
    CHECK(slurp(kCorpus / f.name) == f.text);
  }
}

TEST_CASE("manifest lists every tag once, with minimal flag sets") {
  auto entries = load_manifest(kCorpus);
  std::vector<std::string> tags;
  for (const auto& e : entries) tags.push_back(e.tag + " " + e.required.to_string());
  CHECK(tags == std::vector<std::string>{"Prelude none", "P4.1i funext", "P4.1ii eta-pi eta-sigma", "RepProp none",
                                         "CoverAsWP none", "WPAsCover none", "P5.1ii eta-pi eta-sigma", "P5.1i funext",
                                         "P5.2ii eta-pi eta-sigma", "P5.2i funext", "P5.2iv eta-pi eta-unit",
                                         "P5.2iii funext"});
}

TEST_CASE("manifest parsing") {
  auto e = parse_manifest("# comment\n\nA a.mltt\nB b.mltt funext eta-pi  # trailing\n");
  REQUIRE(e.size() == 2);
  CHECK(e[0].required == Flags{});
  CHECK(e[1].required == Flags{true, false, false, true});
  CHECK_THROWS_AS(parse_manifest("A a.mltt\nA b.mltt\n"), ManifestError);
  CHECK_THROWS_AS(parse_manifest("A a.mltt eta-everything\n"), ManifestError);
  CHECK_THROWS_AS(parse_manifest("lonely\n"), ManifestError);
}

TEST_CASE("every entry checks under its flags and fails with any one removed") {
  for (const auto& e : load_manifest(kCorpus)) {
    INFO(e.tag);
    CHECK(check_file(kCorpus / e.file, e.required) == "");
    for (const Flags& weaker : one_less(e.required)) {
      INFO("without one flag: " << weaker.to_string());
      CHECK(check_file(kCorpus / e.file, weaker) != "");
    }
  }
}

TEST_CASE("adding flags never breaks an entry") {
  for (const auto& e : load_manifest(kCorpus))
    for (const Flags& f : all_flag_sets())
      if (e.required.subset_of(f)) {
        INFO(e.tag << " under " << f.to_string());
        CHECK(check_file(kCorpus / e.file, f) == "");
      }
}

TEST_CASE("with no flags the flag-free entries pass and the rest are skipped") {
  Report r = check_corpus(kCorpus, Flags{});
  CHECK(r.ok());
  for (const auto& res : r.results) {
    INFO(res.entry.tag);
    if (res.entry.required == Flags{}) {
      CHECK(res.status == Status::Pass);
    } else {
      CHECK(res.status == Status::Skip);
      CHECK(res.detail.rfind("rejected: ", 0) == 0);
    }
  }
  CHECK(r.render().find("summary: 4 pass, 8 skip, 0 fail\n") != std::string::npos);
}

TEST_CASE("a broken entry is reported as a failure") {
  TempDir dir("wtt_corpus_broken");
  dir.write("manifest", "Good good.mltt\nBad bad.mltt\nLater later.mltt funext\n");
  dir.write("good.mltt", "def u : N1 := star\n");
  dir.write("bad.mltt", "def u : N0 := star\n");
  dir.write("later.mltt", "def u : N1 := star\n");
  Report r = check_corpus(dir.path, Flags{});
  CHECK_FALSE(r.ok());
  REQUIRE(r.results.size() == 3);
  CHECK(r.results[0].status == Status::Pass);
  CHECK(r.results[1].status == Status::Fail);
  CHECK(r.results[1].detail.find("mismatch") != std::string::npos);
  CHECK(r.results[2].status == Status::Skip);
  CHECK(r.results[2].detail == "checks anyway");
  std::string text = r.render();
  CHECK(text.find("FAIL Bad bad.mltt [none]\n") != std::string::npos);
  CHECK(text.find("summary: 1 pass, 1 skip, 1 fail\n") != std::string::npos);
}

TEST_CASE("missing files surface as failures rather than exceptions") {
  TempDir dir("wtt_corpus_missing");
  dir.write("manifest", "Gone gone.mltt\n");
  Report r = check_corpus(dir.path, Flags{});
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].status == Status::Fail);
}

namespace {

// Parameters as named definitions; builders apply them in head position, so
// they must be inferable.
std::string params(const std::string& br, const std::string& ar) {
  return "def I : U0 := N1\n"
         "def N : I -> U0 := fun _ => N1\n"
         "def Br : (i : I) -> N i -> U0 := " + br + "\n"
         "def ar : (i : I) -> (n : N i) -> Br i n -> I := " + ar + "\n";
}

}  // namespace

TEST_CASE("free tree type and legality predicate check at concrete parameters") {
  DWParams p;
  std::string src = params("fun _ _ => Sum N1 N1", "fun _ _ b => star");
  src += "def Free : U0 := " + build_free(p) + "\n";
  src += "def Legal : I -> Free -> U0 := " + build_legal(p) + "\n";
  auto r = testing::check_source(src, Flags{});
  CHECK_MESSAGE(!r, (r.value_or("") + "\n" + src));
  r = testing::check_source(src + "def bad : Free := sup star (fun b => star)\n", Flags{});
  REQUIRE(r.has_value());
  CHECK(r->rfind("bad:", 0) == 0);
}

TEST_CASE("a leaf is legal at its own index") {
  DWParams p;
  std::string src = params("fun _ _ => N0", "fun _ _ b => absurd (fun _ => I) b");
  src += "def Free : U0 := " + build_free(p) + "\n";
  src += "def Legal : I -> Free -> U0 := " + build_legal(p) + "\n";
  src += "def leaf : Free := sup (pair star star) (fun b => absurd (fun _ => Free) b)\n";
  src += "def legal : Legal star leaf := pair (fun b => absurd (fun b => Legal (ar star star b) "
         "(absurd (fun _ => Free) b)) b) (refl star)\n";
  auto r = testing::check_source(src, Flags{});
  CHECK_MESSAGE(!r, (r.value_or("") + "\n" + src));
}

TEST_CASE("builder parameters are parenthesized when compound") {
  DWParams p{"I", "N", "Br", "ar"};
  CHECK(build_free(p) == "W ((i : I) * N i) (fun z => Br (fst z) (snd z))");
  p.N = "dw_two_N";
  p.Br = "Br' star";
  CHECK(build_free(p) == "W ((i : I) * dw_two_N i) (fun z => (Br' star) (fst z) (snd z))");
}
