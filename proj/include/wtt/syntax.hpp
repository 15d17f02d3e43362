#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wtt/term.hpp"

namespace wtt {

// A top-level item of a `.mltt` file: `def name : T := t` or
// `postulate name : T` (body null).
struct Declaration {
  std::string name;
  Term type;
  Term body;
  Span span;
  bool is_postulate() const { return body == nullptr; }
};

struct ParseError : std::runtime_error {
  ParseError(Span where, std::string message, std::vector<std::string> expected);
  Span location;
  std::vector<std::string> expected;  // token set that would have been accepted
};

struct ParsedFile {
  std::vector<std::string> imports;  // as written, in order
  std::vector<Declaration> decls;
};

/// Parses a whole file. Identifiers not bound locally become constants.
ParsedFile parse_file(std::string_view text);

/// Parses a single term. `scope` lists local names, outermost first; they
/// resolve to de Bruijn indices.
Term parse_term(std::string_view text, const std::vector<std::string>& scope = {});

/// Loads a file and its `import "path"` dependencies (relative to the
/// importing file), depth first, each file once. Cyclic imports are a
/// ParseError.
std::vector<Declaration> load_file(const std::filesystem::path& path);

bool is_keyword(std::string_view word);

/// Concrete syntax for `t`. Free variables are named from `scope`
/// (outermost first); bound variables are x<level>.
std::string pretty(const Term& t, const std::vector<std::string>& scope = {});
std::string pretty(const Declaration& d);
std::string pretty(const std::vector<Declaration>& decls);

}  // namespace wtt
