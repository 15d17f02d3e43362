#pragma once

#include <string>

namespace wtt {

// Extensions of the base theory. All off by default.
struct Flags {
  bool eta_pi = false;
  bool eta_sigma = false;
  bool eta_unit = false;
  bool funext = false;

  /// True when every flag set here is also set in `other`.
  bool subset_of(const Flags& other) const {
    return (!eta_pi || other.eta_pi) && (!eta_sigma || other.eta_sigma) &&
           (!eta_unit || other.eta_unit) && (!funext || other.funext);
  }

  bool operator==(const Flags&) const = default;

  /// Space separated flag names ("eta-pi eta-sigma"), or "none".
  std::string to_string() const;

  /// Parses one flag name as written in manifests ("eta-pi", "funext", ...).
  /// Returns false on an unknown name.
  bool set(const std::string& name);

  static Flags all() { return {true, true, true, true}; }
  static Flags eta() { return {true, true, true, false}; }
};

}  // namespace wtt
