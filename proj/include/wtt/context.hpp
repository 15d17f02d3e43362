#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wtt/term.hpp"
#include "wtt/value.hpp"

namespace wtt {

// Top-level constants. Definitions unfold transparently during evaluation;
// a constant without a body (only the extensionality postulate) evaluates to
// a neutral head.
class Globals {
 public:
  struct Entry {
    Term type;
    Term body;  // null for postulates
    Val type_value;
    Val body_value;  // null for postulates
  };

  const Entry* find(const std::string& name) const;
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }

  // Evaluates type and body in the empty environment and records them.
  const Entry& define(const std::string& name, Term type, Term body);
  const Entry& postulate(const std::string& name, Term type);

  /// Declaration order.
  const std::vector<std::string>& names() const { return order_; }

  Globals() = default;
  Globals(const Globals&) = delete;
  Globals& operator=(const Globals&) = delete;

 private:
  std::map<std::string, Entry> entries_;
  std::vector<std::string> order_;
};

// Local typing context: a telescope of assumptions over a set of globals.
// Each local is represented by a fresh neutral variable at its de Bruijn
// level, so the environment doubles as the identity substitution.
class Context {
 public:
  explicit Context(const Globals& globals) : globals_(&globals) {}

  /// Extend with an assumption `name : type`; returns the extended context.
  Context bind(std::string name, Val type) const;

  /// Extend with a local definition `name : type := value`.
  Context define(std::string name, Val type, Val value) const;

  std::size_t depth() const { return types_.size(); }
  const Globals& globals() const { return *globals_; }
  const Env& env() const { return env_; }

  /// Type of the variable with de Bruijn index `index`.
  const Val& type_of(std::size_t index) const { return types_[types_.size() - 1 - index]; }
  const std::string& name_of(std::size_t index) const { return names_[names_.size() - 1 - index]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of the innermost local called `name`, if any.
  std::optional<std::size_t> lookup(const std::string& name) const;

 private:
  const Globals* globals_;
  Env env_;
  std::vector<Val> types_;
  std::vector<std::string> names_;
};

}  // namespace wtt
