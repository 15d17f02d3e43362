#pragma once

// Text templates shared by the corpus builders.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wtt::encodings::detail {

using Subst = std::map<std::string, std::string, std::less<>>;

// Replaces every `{key}` in `tmpl`.
inline std::string fill(std::string_view tmpl, const Subst& subst) {
  std::string out;
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    std::size_t open = tmpl.find('{', pos);
    if (open == std::string_view::npos) break;
    std::size_t close = tmpl.find('}', open);
    out.append(tmpl.substr(pos, open - pos));
    auto it = subst.find(tmpl.substr(open + 1, close - open - 1));
    if (it == subst.end()) throw std::logic_error("template key " + std::string(tmpl.substr(open, close - open + 1)));
    out += it->second;
    pos = close + 1;
  }
  out.append(tmpl.substr(pos));
  return out;
}

// Parenthesizes a parameter unless it is a single token or already wrapped.
inline std::string atom(const std::string& p) {
  if (p.find(' ') == std::string::npos) return p;
  if (p.front() == '(' && p.back() == ')') {
    int depth = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      depth += p[k] == '(' ? 1 : p[k] == ')' ? -1 : 0;
      if (depth == 0 && k + 1 < p.size()) return "(" + p + ")";
    }
    return p;
  }
  return "(" + p + ")";
}

struct Param {
  std::string name;
  std::string type;  // may mention earlier parameters as {Name}
};

// Parameter telescope of one type constructor together with three small
// instances (empty, unit, two-element).
struct Family {
  std::string prefix;
  std::vector<Param> params;
  std::vector<std::pair<std::string, std::vector<std::string>>> instances;

  // Placeholders: each parameter by name and {P} for all of them applied.
  Subst subst(const std::vector<std::string>& values) const {
    Subst s;
    std::string all;
    for (std::size_t k = 0; k < params.size(); ++k) {
      s[params[k].name] = atom(values[k]);
      all += (k ? " " : "") + atom(values[k]);
    }
    s["P"] = all;
    return s;
  }
  Subst schema() const {
    std::vector<std::string> names;
    for (const auto& p : params) names.push_back(p.name);
    return subst(names);
  }
  std::string telescope() const {
    Subst s = schema();
    std::string out;
    for (const auto& p : params) out += "(" + p.name + " : " + fill(p.type, s) + ") -> ";
    return out;
  }
  std::string binders() const {
    std::string out = "fun";
    for (const auto& p : params) out += " " + p.name;
    return out + " =>";
  }
  std::vector<std::string> instance_names(const std::string& inst) const {
    std::vector<std::string> out;
    for (const auto& p : params) out.push_back(prefix + "_" + inst + "_" + p.name);
    return out;
  }
};

inline const Family& dw_family() {
  static const Family f{
      "dw",
      {{"I", "U0"}, {"N", "{I} -> U0"}, {"Br", "(i : {I}) -> {N} i -> U0"}, {"ar", "(i : {I}) -> (n : {N} i) -> {Br} i n -> {I}"}},
      {{"empty", {"N1", "fun _ => N1", "fun _ _ => N0", "fun _ _ b => absurd (fun _ => N1) b"}},
       {"unit", {"N1", "fun _ => N1", "fun _ _ => N1", "fun _ _ _ => star"}},
       {"two", {"Sum N1 N1", "fun _ => N1", "fun _ _ => Sum N1 N1", "fun _ _ b => b"}}}};
  return f;
}

inline const Family& wp_family() {
  static const Family f{"wp",
                        {{"I", "U0"}, {"N", "{I} -> U0"}, {"R", "(i : {I}) -> {N} i -> {I} -> U0"}},
                        {{"empty", {"N1", "fun _ => N0", "fun _ n _ => absurd (fun _ => U0) n"}},
                         {"unit", {"N1", "fun _ => N1", "fun _ _ _ => N0"}},
                         {"two", {"Sum N1 N1", "fun _ => N1", "fun _ _ _ => N1"}}}};
  return f;
}

inline const Family& cover_family() {
  static const Family f{
      "cov",
      {{"A", "U0"}, {"I", "{A} -> U0"}, {"C", "(a : {A}) -> {I} a -> {A} -> U0"}, {"V", "{A} -> U0"}},
      {{"empty", {"N1", "fun _ => N0", "fun _ i _ => absurd (fun _ => U0) i", "fun _ => N0"}},
       {"unit", {"N1", "fun _ => N1", "fun _ _ _ => N0", "fun _ => N1"}},
       {"two", {"Sum N1 N1", "fun _ => N1", "fun _ _ _ => N1", "fun a => case (fun _ => U0) (fun _ => N1) (fun _ => N0) a"}}}};
  return f;
}

inline const Family& w_family() {
  static const Family f{"w",
                        {{"A", "U0"}, {"B", "{A} -> U0"}},
                        {{"empty", {"N1", "fun _ => N0"}},
                         {"unit", {"N1", "fun _ => N1"}},
                         {"two", {"Sum N1 N1", "fun a => case (fun _ => U0) (fun _ => N0) (fun _ => N1) a"}}}};
  return f;
}

// A declaration abstracted over a family's parameters. `type` and `body` use
// the family placeholders.
struct Schema {
  std::string name;
  std::string type;
  std::string body;
};

inline std::string def(const std::string& name, const std::string& type, const std::string& body) {
  return "def " + name + " : " + type + "\n  := " + body + "\n\n";
}

inline std::string schema_defs(const Family& fam, const std::vector<Schema>& defs) {
  Subst s = fam.schema();
  std::string out;
  for (const auto& d : defs) out += def(d.name, fam.telescope() + fill(d.type, s), fam.binders() + " " + fill(d.body, s));
  return out;
}

// Parameter definitions of every instance.
inline std::string instance_params(const Family& fam) {
  std::string out;
  for (const auto& [inst, values] : fam.instances) {
    auto names = fam.instance_names(inst);
    Subst s = fam.subst(names);
    for (std::size_t k = 0; k < fam.params.size(); ++k) out += def(names[k], fill(fam.params[k].type, s), values[k]);
  }
  return out;
}

// Each rule stated at the schema level (as `<prefix>_<rule>`) and again at
// every instance (as `<prefix>_<instance>_<rule>`), with the instance
// parameters substituted into both type and body.
inline std::string rules(const Family& fam, const std::string& prefix, const std::vector<Schema>& rs) {
  std::string out;
  std::vector<Schema> named;
  for (const auto& r : rs) named.push_back({prefix + "_" + r.name, r.type, r.body});
  out += schema_defs(fam, named);
  for (const auto& [inst, values] : fam.instances) {
    (void)values;
    Subst s = fam.subst(fam.instance_names(inst));
    for (const auto& r : rs) out += def(prefix + "_" + inst + "_" + r.name, fill(r.type, s), fill(r.body, s));
  }
  return out;
}

inline std::string header(const std::string& comment, const std::vector<std::string>& imports) {
  std::string out = "-- " + comment + "\n\n";
  for (const auto& i : imports) out += "import \"" + i + "\"\n";
  if (!imports.empty()) out += "\n";
  return out;
}

inline std::string trim_end(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s + "\n";
}

// Helper files shared by several corpus entries.
std::string canonical_common();
std::string wp_dw_common();
std::string w_wp_common();

}  // namespace wtt::encodings::detail
