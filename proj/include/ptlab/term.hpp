#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ptlab {

// An immutable λ-term in locally nameless form: bound variables are de Bruijn
// indices (0 = innermost binder), free variables keep their names, and
// binders remember the user's name only as a printing hint. Structural
// equality of the nameless form is α-equivalence.
class Term {
 public:
  enum class Kind { Var, Free, Lam, App };

  static Term var(std::size_t index);
  static Term free(std::string name);
  static Term lam(std::string hint, Term body);
  static Term app(Term fun, Term arg);

  // Nested abstractions / left-associated applications.
  static Term lams(const std::vector<std::string>& hints, Term body);
  static Term apps(Term head, const std::vector<Term>& args);

  Kind kind() const noexcept;
  std::size_t index() const noexcept;      // Var
  const std::string& name() const noexcept;  // Free name or Lam hint
  const Term& body() const noexcept;       // Lam
  const Term& fun() const noexcept;        // App
  const Term& arg() const noexcept;        // App

  // One more than the largest dangling de Bruijn index; 0 for locally
  // closed terms.
  std::size_t loose() const noexcept;
  // Node count, saturating.
  std::size_t size() const noexcept;

  bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

  // term := '\' IDENT+ '.' term | app ; app := atom atom* ;
  // atom := IDENT | '(' term ')'. `λ` may replace `\`.
  static Term parse(std::string_view text);
  // Minimal parentheses, multi-binder sugar; clashing binders are renamed.
  std::string to_string() const;

 private:
  struct Node;
  Term() = default;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

bool alpha_eq(const Term& a, const Term& b);
inline bool operator==(const Term& a, const Term& b) { return alpha_eq(a, b); }

// Names of free variables, sorted and without duplicates.
std::vector<std::string> free_names(const Term& t);

// Adds `by` to every dangling index >= cutoff. A negative `by` must not move
// any such index below cutoff.
Term shift(const Term& t, long by, std::size_t cutoff = 0);

// body[0 := value]: the contractum of (λ. body) value.
Term instantiate(const Term& body, const Term& value);

// Index `i` occurs in t.
bool occurs(const Term& t, std::size_t i);

// Names accepted by builtin(): I, One, B, Y, J.
Term builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

// B m n, unreduced.
Term compose(const Term& m, const Term& n);

}  // namespace ptlab
