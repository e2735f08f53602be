#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptlab/perm.hpp"

namespace ptlab {

// A finite permutation tree <pi; t1, ..., tn>: an ordered tree whose n-ary
// nodes carry a permutation of {1..n}. The default value is the one-node
// tree (the monoid unit), written `*`.
class Fpt {
 public:
  Fpt() = default;

  static Fpt leaf() { return Fpt(); }

  // Throws ArityError if label.size() != children.size().
  static Fpt node(Perm label, std::vector<Fpt> children);

  const Perm& label() const noexcept { return label_; }
  const std::vector<Fpt>& children() const noexcept { return children_; }
  std::size_t arity() const noexcept { return children_.size(); }
  bool is_leaf() const noexcept { return children_.empty(); }

  // 1-based; positions past the arity read as the leaf.
  const Fpt& child_or_leaf(unsigned i) const noexcept;

  // Canonical text form: `*` or `([i1 ... in]; c1, ..., cn)`.
  std::string to_string() const;

  // Inverse of to_string; whitespace between tokens is ignored.
  static Fpt parse(std::string_view text);

 private:
  Perm label_;
  std::vector<Fpt> children_;
};

bool operator==(const Fpt& a, const Fpt& b);
// Structural order (label first, then children); only used for containers.
std::strong_ordering operator<=>(const Fpt& a, const Fpt& b);

// Enumeration order: node count first, then the canonical text.
bool canonical_less(const Fpt& a, const Fpt& b);

Fpt mk_node(Perm label, std::vector<Fpt> children);

Fpt product(const Fpt& t, const Fpt& u);
Fpt star(const Fpt& t);

bool is_idempotent(const Fpt& t);

// Natural order, decided structurally: equal root labels, u has no more
// children than t, shared children compare recursively and the surplus
// children of t are idempotent.
bool natural_leq(const Fpt& t, const Fpt& u);

// Greatest lower bound t u* u of two compatible elements, absent otherwise.
std::optional<Fpt> meet(const Fpt& t, const Fpt& u);

// The maximum of the up-set of t.
Fpt max_rep(const Fpt& t);

std::size_t norm(const Fpt& t);

// The all-identity tree with the same shape as t.
Fpt skeleton(const Fpt& t);

// t is covered by u: t < u with nothing strictly in between.
bool covers(const Fpt& t, const Fpt& u);

// {u : t <= u}, by enumerating every tree of norm <= norm(t) and filtering.
std::vector<Fpt> upset(const Fpt& t);

// Minimum group congruence via maximal representatives.
bool sigma_equiv(const Fpt& t, const Fpt& u);

// Every tree with exactly n nodes, in canonical order.
std::vector<Fpt> enumerate_fpt_exact(std::size_t n);

// Every tree with at most max_nodes nodes, in canonical order.
std::vector<Fpt> enumerate_fpt(std::size_t max_nodes);

// Pairs (v, w) with product(v, w) == t; both factors have norm <= norm(t).
std::vector<std::pair<Fpt, Fpt>> factorizations(const Fpt& t);

}  // namespace ptlab
