#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "wtt/term.hpp"

namespace wtt {

struct Value;
using Val = std::shared_ptr<const Value>;
class Globals;

// Persistent cons list of values; index 0 is the innermost binder.
class Env {
 public:
  Env() = default;
  Env extend(Val v) const;
  const Val& lookup(std::size_t index) const;
  std::size_t size() const { return size_; }

 private:
  struct Cell {
    Val value;
    std::shared_ptr<const Cell> next;
  };
  std::shared_ptr<const Cell> head_;
  std::size_t size_ = 0;
};

// A one-variable binder body: either syntax paired with the environment it
// was created in, or a host function (used for computation-rule recursion
// and for eliminator signatures).
class Closure {
 public:
  using Native = std::function<Val(const Val&)>;

  Closure(const Globals* globals, Env env, Term body)
      : globals_(globals), env_(std::move(env)), body_(std::move(body)) {}
  explicit Closure(Native fn) : native_(std::move(fn)) {}

  Val operator()(const Val& arg) const;

 private:
  const Globals* globals_ = nullptr;
  Env env_;
  Term body_;
  Native native_;
};

// Stuck computation. `kind` reuses the term kinds: Var, Const, App, Fst, Snd
// and the eliminators. `args` follow the child order of the matching term
// node, with the scrutinee (or applied function) itself a neutral value.
struct Neutral {
  Kind kind;
  std::size_t level = 0;  // Var
  std::string name;       // Const
  std::vector<Val> args;
};

struct VU {};
struct VEmpty {};
struct VUnit {};
struct VStar {};
struct VPi { Val dom; Closure cod; };
struct VLam { Closure body; };
struct VSigma { Val fst; Closure snd; };
struct VPair { Val fst, snd; };
struct VSum { Val left, right; };
struct VInl { Val value; };
struct VInr { Val value; };
struct VId { Val type, lhs, rhs; };
struct VRefl { Val value; };
struct VW { Val label, branch; };
struct VSup { Val label, fn; };
struct VDW { Val index_type, names, branch, arity, index; };
struct VDSup { Val index, name, fn; };
struct VWP { Val index_type, names, premises, index; };
struct VInd { Val index, name, fn; };
struct VCover { Val carrier, labels, axioms, subset, elem; };
struct VRf { Val elem, member; };
struct VTr { Val elem, label, premises; };
struct VNeu { Neutral ne; Val type; };

struct Value {
  std::variant<VU, VEmpty, VUnit, VStar, VPi, VLam, VSigma, VPair, VSum, VInl, VInr, VId, VRefl, VW,
               VSup, VDW, VDSup, VWP, VInd, VCover, VRf, VTr, VNeu>
      v;
};

template <class T>
const T* as(const Val& v) {
  return std::get_if<T>(&v->v);
}

template <class T>
Val mk(T x) {
  return std::make_shared<const Value>(Value{std::move(x)});
}

}  // namespace wtt
