#include <algorithm>
#include <set>
#include <string>

#include "wtt/syntax.hpp"

namespace wtt {

namespace {

// Precedence levels, loosest first.
enum Prec { kExpr = 0, kProd = 1, kApp = 2, kAtom = 3 };

class Printer {
 public:
  Printer(std::vector<std::string> scope, const Term& root) : names_(std::move(scope)) { collect(root); }

  std::string print(const Term& t, int need) {
    int own = kAtom;
    std::string s = render(t, own);
    return own < need ? "(" + s + ")" : s;
  }

 private:
  // x<depth>, bumped past any name it could capture.
  std::string fresh() const {
    for (std::size_t n = names_.size();; ++n) {
      std::string s = "x" + std::to_string(n);
      if (!taken_.count(s) && std::find(names_.begin(), names_.end(), s) == names_.end()) return s;
    }
  }

  void collect(const Term& t) {
    if (t->kind == Kind::Const) taken_.insert(t->name);
    for (const auto& k : t->kids) collect(k);
  }

  std::string under(const std::string& name, const Term& body, int need) {
    names_.push_back(name);
    std::string s = print(body, need);
    names_.pop_back();
    return s;
  }

  // A domain printed as `(t : T)` in front of `->`/`*` would read as a binder.
  std::string domain(const Term& dom, int need) {
    std::string s = print(dom, need);
    return dom->kind == Kind::Ann ? "(" + s + ")" : s;
  }

  std::string render(const Term& t, int& own) {
    const auto& k = t->kids;
    switch (t->kind) {
      case Kind::Var: {
        if (t->index < names_.size()) return names_[names_.size() - 1 - t->index];
        return "#" + std::to_string(t->index - names_.size());
      }
      case Kind::Const:
        return t->name;
      case Kind::Ann:
        return "(" + print(k[0], kExpr) + " : " + print(k[1], kExpr) + ")";
      case Kind::Lam: {
        own = kExpr;
        std::string head = "fun";
        Term body = t;
        std::size_t pushed = 0;
        while (body->kind == Kind::Lam) {
          std::string n = fresh();
          head += " " + n;
          names_.push_back(n);
          ++pushed;
          body = body->kids[0];
        }
        std::string s = head + " => " + print(body, kExpr);
        names_.resize(names_.size() - pushed);
        return s;
      }
      case Kind::Pi:
      case Kind::Sigma: {
        bool pi = t->kind == Kind::Pi;
        std::string op = pi ? " -> " : " * ";
        if (occurs_free(k[1], 0)) {
          own = kExpr;
          std::string n = fresh();
          return "(" + n + " : " + print(k[0], kExpr) + ")" + op + under(n, k[1], pi ? kExpr : kProd);
        }
        if (pi) {
          own = kExpr;
          return domain(k[0], kProd) + op + under("_", k[1], kExpr);
        }
        own = kProd;
        return domain(k[0], kApp) + op + under("_", k[1], kProd);
      }
      case Kind::App:
        own = kApp;
        return print(k[0], kApp) + " " + print(k[1], kAtom);
      default:
        break;
    }
    std::string s(keyword(t->kind));
    if (k.empty()) return s;
    own = kApp;
    for (const auto& kid : k) s += " " + print(kid, kAtom);
    return s;
  }

  std::vector<std::string> names_;
  std::set<std::string> taken_;  // constants of the printed term
};

}  // namespace

std::string pretty(const Term& t, const std::vector<std::string>& scope) { return Printer(scope, t).print(t, kExpr); }

std::string pretty(const Declaration& d) {
  if (d.is_postulate()) return "postulate " + d.name + " : " + pretty(d.type);
  return "def " + d.name + " : " + pretty(d.type) + "\n  := " + pretty(d.body);
}

std::string pretty(const std::vector<Declaration>& decls) {
  std::string out;
  for (const auto& d : decls) out += pretty(d) + "\n\n";
  return out;
}

}  // namespace wtt
