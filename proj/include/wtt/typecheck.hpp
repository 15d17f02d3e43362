#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wtt/context.hpp"
#include "wtt/flags.hpp"
#include "wtt/syntax.hpp"
#include "wtt/term.hpp"
#include "wtt/value.hpp"

namespace wtt {

enum class ErrorKind { Mismatch, Unbound, NotAFunction, NotAUniverse, MotiveShape, FlagRequired };

std::string_view to_string(ErrorKind kind);

struct TypeError : std::runtime_error {
  TypeError(ErrorKind kind, std::string detail, Span location, Term expected = {}, Term found = {},
            std::vector<std::string> scope = {});

  /// One-line report: "<decl>:<line>:<col>: <kind>: <detail> [expected/found]".
  std::string render() const;

  ErrorKind kind;
  std::string detail;
  Span location;
  Term expected;  // normal forms under the active flags, when applicable
  Term found;
  std::vector<std::string> scope;  // names for free variables of expected/found
  std::string decl;
};

// Bidirectional checker. Introduction forms check; variables, constants,
// type formers and eliminators infer.
class Checker {
 public:
  Checker(const Globals& globals, Flags flags) : globals_(globals), flags_(flags) {}

  Val infer(const Context& ctx, const Term& t);
  void check(const Context& ctx, const Term& t, const Val& type);

  /// Checks that `t` is a type (an element of U0, or built from U0 by the
  /// type formers) and returns its value.
  Val check_type(const Context& ctx, const Term& t);

  const Flags& flags() const { return flags_; }

 private:
  void check_family(const Context& ctx, const Term& motive, const Val& dom);
  void check_family(const Context& ctx, const Term& motive, const Val& dom,
                    const std::function<Val(const Val&)>& dom2);
  void expect_conv(const Context& ctx, const Term& at, const Val& a, const Val& b, const Val& type);
  void expect_type_conv(const Context& ctx, const Term& at, const Val& found, const Val& expected);
  [[noreturn]] void fail(const Context& ctx, ErrorKind kind, const Term& at, std::string detail,
                         Term expected = {}, Term found = {});
  Term show_type(const Context& ctx, const Val& ty) const;

  const Globals& globals_;
  Flags flags_;
};

/// Type of `t` in ctx, read back as a term.
Term infer(const Context& ctx, const Term& t, const Flags& flags);
/// Throws TypeError unless ctx |- t : type.
void check(const Context& ctx, const Term& t, const Term& type, const Flags& flags);

/// Adds the extensionality constant when flags.funext is set.
void install_builtins(Globals& globals, const Flags& flags);

/// Checks one declaration and extends `globals` with it.
void check_declaration(Globals& globals, const Declaration& decl, const Flags& flags);

/// Checks declarations in order. The first failure is thrown with its
/// declaration name filled in; earlier declarations remain in `globals`.
void check_declarations(Globals& globals, const std::vector<Declaration>& decls, const Flags& flags);

}  // namespace wtt
