#include "wtt/context.hpp"

#include <stdexcept>

#include "wtt/flags.hpp"
#include "wtt/normalize.hpp"

namespace wtt {

std::string Flags::to_string() const {
  std::string out;
  auto add = [&out](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ' ';
    out += name;
  };
  add(eta_pi, "eta-pi");
  add(eta_sigma, "eta-sigma");
  add(eta_unit, "eta-unit");
  add(funext, "funext");
  return out.empty() ? "none" : out;
}

bool Flags::set(const std::string& name) {
  if (name == "eta-pi") eta_pi = true;
  else if (name == "eta-sigma") eta_sigma = true;
  else if (name == "eta-unit") eta_unit = true;
  else if (name == "funext") funext = true;
  else if (name == "none") {}
  else return false;
  return true;
}

Env Env::extend(Val v) const {
  Env e;
  e.head_ = std::make_shared<const Cell>(Cell{std::move(v), head_});
  e.size_ = size_ + 1;
  return e;
}

const Val& Env::lookup(std::size_t index) const {
  if (index >= size_) throw EvalError("variable index out of range");
  const Cell* c = head_.get();
  for (std::size_t i = 0; i < index; ++i) c = c->next.get();
  return c->value;
}

Val Closure::operator()(const Val& arg) const {
  if (native_) return native_(arg);
  return eval(*globals_, env_.extend(arg), body_);
}

const Globals::Entry* Globals::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

const Globals::Entry& Globals::define(const std::string& name, Term type, Term body) {
  if (contains(name)) throw std::logic_error("duplicate global " + name);
  Entry e;
  e.type_value = eval(*this, Env{}, type);
  e.body_value = eval(*this, Env{}, body);
  e.type = std::move(type);
  e.body = std::move(body);
  order_.push_back(name);
  return entries_.emplace(name, std::move(e)).first->second;
}

const Globals::Entry& Globals::postulate(const std::string& name, Term type) {
  if (contains(name)) throw std::logic_error("duplicate global " + name);
  Entry e;
  e.type_value = eval(*this, Env{}, type);
  e.type = std::move(type);
  order_.push_back(name);
  return entries_.emplace(name, std::move(e)).first->second;
}

Context Context::bind(std::string name, Val type) const {
  Context c = *this;
  c.env_ = env_.extend(fresh_var(depth(), type));
  c.types_.push_back(std::move(type));
  c.names_.push_back(std::move(name));
  return c;
}

Context Context::define(std::string name, Val type, Val value) const {
  Context c = *this;
  c.env_ = env_.extend(std::move(value));
  c.types_.push_back(std::move(type));
  c.names_.push_back(std::move(name));
  return c;
}

std::optional<std::size_t> Context::lookup(const std::string& name) const {
  for (std::size_t i = names_.size(); i-- > 0;)
    if (names_[i] == name) return names_.size() - 1 - i;
  return std::nullopt;
}

}  // namespace wtt
