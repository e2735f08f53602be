#include "ptlab/term.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ptlab/error.hpp"

namespace ptlab {

struct Term::Node {
  Kind kind;
  std::size_t index = 0;
  std::string name;
  Term a, b;  // Lam: body in a; App: fun in a, arg in b
  std::size_t loose = 0;
  std::size_t size = 1;
};

namespace {

std::size_t sat_add(std::size_t x, std::size_t y) {
  std::size_t s = x + y;
  return s < x ? static_cast<std::size_t>(-1) : s;
}

}  // namespace

Term Term::var(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->index = index;
  n->loose = index + 1;
  return Term(std::move(n));
}

Term Term::free(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Free;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::lam(std::string hint, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lam;
  n->name = std::move(hint);
  n->loose = body.node_->loose == 0 ? 0 : body.node_->loose - 1;
  n->size = sat_add(body.node_->size, 1);
  n->a = std::move(body);
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->loose = std::max(fun.node_->loose, arg.node_->loose);
  n->size = sat_add(sat_add(fun.node_->size, arg.node_->size), 1);
  n->a = std::move(fun);
  n->b = std::move(arg);
  return Term(std::move(n));
}

Term Term::lams(const std::vector<std::string>& hints, Term body) {
  for (auto it = hints.rbegin(); it != hints.rend(); ++it) body = lam(*it, std::move(body));
  return body;
}

Term Term::apps(Term head, const std::vector<Term>& args) {
  for (const auto& a : args) head = app(std::move(head), a);
  return head;
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
std::size_t Term::index() const noexcept { return node_->index; }
const std::string& Term::name() const noexcept { return node_->name; }

const Term& Term::body() const noexcept { return node_->a; }
const Term& Term::fun() const noexcept { return node_->a; }
const Term& Term::arg() const noexcept { return node_->b; }

std::size_t Term::loose() const noexcept { return node_->loose; }
std::size_t Term::size() const noexcept { return node_->size; }

bool alpha_eq(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind() || a.loose() != b.loose() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Var:
      return a.index() == b.index();
    case Term::Kind::Free:
      return a.name() == b.name();
    case Term::Kind::Lam:
      return alpha_eq(a.body(), b.body());
    case Term::Kind::App:
      return alpha_eq(a.fun(), b.fun()) && alpha_eq(a.arg(), b.arg());
  }
  return false;
}

std::vector<std::string> free_names(const Term& t) {
  std::set<std::string> names;
  std::function<void(const Term&)> go = [&](const Term& x) {
    switch (x.kind()) {
      case Term::Kind::Var:
        break;
      case Term::Kind::Free:
        names.insert(x.name());
        break;
      case Term::Kind::Lam:
        go(x.body());
        break;
      case Term::Kind::App:
        go(x.fun());
        go(x.arg());
        break;
    }
  };
  go(t);
  return {names.begin(), names.end()};
}

Term shift(const Term& t, long by, std::size_t cutoff) {
  if (by == 0 || t.loose() <= cutoff) return t;
  switch (t.kind()) {
    case Term::Kind::Var:
      return Term::var(static_cast<std::size_t>(static_cast<long>(t.index()) + by));
    case Term::Kind::Free:
      return t;
    case Term::Kind::Lam:
      return Term::lam(t.name(), shift(t.body(), by, cutoff + 1));
    case Term::Kind::App:
      return Term::app(shift(t.fun(), by, cutoff), shift(t.arg(), by, cutoff));
  }
  return t;
}

namespace {

Term subst_at(const Term& t, std::size_t depth, const Term& value) {
  if (t.loose() <= depth) return t;
  switch (t.kind()) {
    case Term::Kind::Var:
      if (t.index() == depth) return shift(value, static_cast<long>(depth));
      return Term::var(t.index() - 1);  // index > depth: one binder fewer
    case Term::Kind::Free:
      return t;
    case Term::Kind::Lam:
      return Term::lam(t.name(), subst_at(t.body(), depth + 1, value));
    case Term::Kind::App:
      return Term::app(subst_at(t.fun(), depth, value), subst_at(t.arg(), depth, value));
  }
  return t;
}

}  // namespace

Term instantiate(const Term& body, const Term& value) { return subst_at(body, 0, value); }

bool occurs(const Term& t, std::size_t i) {
  if (t.loose() <= i) return false;
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.index() == i;
    case Term::Kind::Free:
      return false;
    case Term::Kind::Lam:
      return occurs(t.body(), i + 1);
    case Term::Kind::App:
      return occurs(t.fun(), i) || occurs(t.arg(), i);
  }
  return false;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"I", "One", "B", "Y", "J"};
  return names;
}

Term builtin(std::string_view name) {
  if (name == "I") return Term::parse("\\x. x");
  if (name == "One") return Term::parse("\\x y. x y");
  if (name == "B") return Term::parse("\\f g x. f (g x)");
  if (name == "Y") return Term::parse("\\f. (\\x. f (x x)) (\\x. f (x x))");
  if (name == "J") return Term::app(builtin("Y"), Term::parse("\\f g x. g (f x)"));
  throw Error("unknown builtin: " + std::string(name));
}

Term compose(const Term& m, const Term& n) {
  return Term::app(Term::app(builtin("B"), m), n);
}

}  // namespace ptlab
