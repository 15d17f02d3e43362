// Command-line front end: check, norm, conv, corpus, cover.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wtt/context.hpp"
#include "wtt/cover.hpp"
#include "wtt/encodings.hpp"
#include "wtt/normalize.hpp"
#include "wtt/syntax.hpp"
#include "wtt/typecheck.hpp"

namespace {

using namespace wtt;

void add_flags(CLI::App* cmd, Flags& flags) {
  cmd->add_flag("--eta-pi", flags.eta_pi, "eta for functions");
  cmd->add_flag("--eta-sigma", flags.eta_sigma, "eta for pairs");
  cmd->add_flag("--eta-unit", flags.eta_unit, "eta for the unit type");
  cmd->add_flag("--funext", flags.funext, "function extensionality constant");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string parse_message(const ParseError& e) {
  return std::to_string(e.location.line) + ":" + std::to_string(e.location.col) + ": parse: " + e.what();
}

int run_check(const std::string& file, const Flags& flags) {
  std::vector<Declaration> decls;
  try {
    decls = load_file(file);
  } catch (const ParseError& e) {
    std::cout << "error " << parse_message(e) << "\n";
    return 1;
  }
  Globals globals;
  install_builtins(globals, flags);
  for (const auto& d : decls) {
    try {
      check_declaration(globals, d, flags);
    } catch (TypeError& e) {
      e.decl = d.name;
      std::cout << "error " << e.render() << "\n";
      return 1;
    }
    std::cout << "ok " << d.name << "\n";
  }
  return 0;
}

// A local context built from an optional file and `name : type` assumptions.
struct Scope {
  Globals globals;
  std::unique_ptr<Context> ctx;

  Scope(const std::string& file, const std::vector<std::string>& assumptions, const Flags& flags) {
    install_builtins(globals, flags);
    if (!file.empty()) check_declarations(globals, load_file(file), flags);
    ctx = std::make_unique<Context>(globals);
    Checker checker(globals, flags);
    for (const auto& a : assumptions) {
      auto colon = a.find(':');
      if (colon == std::string::npos) throw std::runtime_error("assumption '" + a + "' is not of the form 'x : T'");
      std::string name = a.substr(0, colon);
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      Term type = parse_term(a.substr(colon + 1), ctx->names());
      Val tv = checker.check_type(*ctx, type);
      *ctx = ctx->bind(name, tv);
    }
  }

  Term term(const std::string& text) const { return parse_term(text, ctx->names()); }
};

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const TypeError& e) {
    std::cout << "error " << e.render() << "\n";
  } catch (const ParseError& e) {
    std::cout << "error " << parse_message(e) << "\n";
  } catch (const EvalError& e) {
    std::cout << "error evaluation: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cout << "error " << e.what() << "\n";
  }
  return 1;
}

int run_norm(const std::string& file, const std::string& expr, const std::string& type,
             const std::vector<std::string>& assume, const Flags& flags) {
  return guarded([&] {
    Scope s(file, assume, flags);
    Term t = s.term(expr);
    Term ty;
    if (type.empty()) {
      ty = infer(*s.ctx, t, flags);
    } else {
      ty = s.term(type);
      Checker(s.globals, flags).check_type(*s.ctx, ty);
      check(*s.ctx, t, ty, flags);
    }
    std::cout << pretty(normalize(*s.ctx, t, ty, flags), s.ctx->names()) << "\n";
    return 0;
  });
}

int run_conv(const std::string& lhs, const std::string& rhs, const std::string& file, const std::string& type,
             const std::vector<std::string>& assume, const Flags& flags) {
  return guarded([&] {
    Scope s(file, assume, flags);
    Term ty = s.term(type);
    Checker(s.globals, flags).check_type(*s.ctx, ty);
    Term a = s.term(lhs), b = s.term(rhs);
    check(*s.ctx, a, ty, flags);
    check(*s.ctx, b, ty, flags);
    if (convertible(*s.ctx, ty, a, b, flags)) {
      std::cout << "convertible\n";
      return 0;
    }
    std::cout << "FAIL not convertible\n";
    std::cout << "  lhs: " << pretty(normalize(*s.ctx, a, ty, flags), s.ctx->names()) << "\n";
    std::cout << "  rhs: " << pretty(normalize(*s.ctx, b, ty, flags), s.ctx->names()) << "\n";
    return 1;
  });
}

int run_corpus(const std::string& dir, const Flags& flags) {
  return guarded([&] {
    auto report = encodings::check_corpus(dir, flags);
    std::cout << report.render();
    return report.ok() ? 0 : 1;
  });
}

int run_cover(const std::string& file, bool derivations) {
  return guarded([&] {
    auto ax = cover::load_axiom_set(read_text(file));
    for (const auto& q : ax.queries) {
      const auto& V = ax.subsets[q.subset];
      auto closure = cover::least_cover(ax, V.atoms);
      bool covered = closure.contains(q.atom);
      std::cout << ax.carrier[q.atom] << " " << V.name << " " << (covered ? "covered" : "uncovered") << "\n";
      if (derivations && covered) std::cout << cover::render(ax, *cover::derivation(ax, V.atoms, q.atom), 2);
    }
    return 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel for a dependent type theory with well-founded trees and inductive covers"};
  app.require_subcommand(1);

  Flags flags;
  std::string file, expr, type, dir = WTT_CORPUS_DIR;
  std::string lhs, rhs;
  std::vector<std::string> assume;
  bool derivations = false;

  auto* check_cmd = app.add_subcommand("check", "type-check a file");
  check_cmd->add_option("file", file, "source file")->required();
  add_flags(check_cmd, flags);

  auto* norm_cmd = app.add_subcommand("norm", "print the normal form of an expression");
  norm_cmd->add_option("file", file, "declarations in scope");
  norm_cmd->add_option("--expr", expr, "expression")->required();
  norm_cmd->add_option("--type", type, "type to check the expression against");
  norm_cmd->add_option("--assume", assume, "local assumption 'x : T', repeatable");
  add_flags(norm_cmd, flags);

  auto* conv_cmd = app.add_subcommand("conv", "decide definitional equality of two terms");
  conv_cmd->add_option("lhs", lhs, "first term")->required();
  conv_cmd->add_option("rhs", rhs, "second term")->required();
  conv_cmd->add_option("--type", type, "common type")->required();
  conv_cmd->add_option("--file", file, "declarations in scope");
  conv_cmd->add_option("--assume", assume, "local assumption 'x : T', repeatable");
  add_flags(conv_cmd, flags);

  auto* corpus_cmd = app.add_subcommand("corpus", "check the encoding corpus");
  corpus_cmd->add_option("--dir", dir, "corpus directory");
  add_flags(corpus_cmd, flags);

  auto* cover_cmd = app.add_subcommand("cover", "answer the queries of an axiom-set file");
  cover_cmd->add_option("file", file, "axiom-set file")->required();
  cover_cmd->add_flag("--derivations", derivations, "print a derivation for each covered query");

  CLI11_PARSE(app, argc, argv);

  if (*check_cmd) return run_check(file, flags);
  if (*norm_cmd) return run_norm(file, expr, type, assume, flags);
  if (*conv_cmd) return run_conv(lhs, rhs, file, type, assume, flags);
  if (*corpus_cmd) return run_corpus(dir, flags);
  return run_cover(file, derivations);
}
