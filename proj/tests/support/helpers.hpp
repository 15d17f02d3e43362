#pragma once

#include <optional>
#include <string>

#include "wtt/context.hpp"
#include "wtt/flags.hpp"
#include "wtt/syntax.hpp"
#include "wtt/typecheck.hpp"

namespace wtt::testing {

// Parses and checks `text` on a fresh environment; returns the rendered
// error, or nothing on success.
inline std::optional<std::string> check_source(const std::string& text, const Flags& flags) {
  Globals g;
  install_builtins(g, flags);
  try {
    check_declarations(g, parse_file(text).decls, flags);
  } catch (const TypeError& e) {
    return e.render();
  } catch (const ParseError& e) {
    return std::string("parse: ") + e.what();
  }
  return std::nullopt;
}

inline std::optional<ErrorKind> error_kind(const std::string& text, const Flags& flags) {
  Globals g;
  install_builtins(g, flags);
  try {
    check_declarations(g, parse_file(text).decls, flags);
  } catch (const TypeError& e) {
    return e.kind;
  }
  return std::nullopt;
}

}  // namespace wtt::testing
