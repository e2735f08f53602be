#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptlab/fpt.hpp"
#include "ptlab/perm.hpp"

namespace ptlab {

// Which idempotents a coinductive order may drop: E is every all-identity
// tree, E' only the finite ones.
enum class IdemClass { E, EPrime };

std::string to_string(IdemClass cls);

// Finite observation of a possibly infinite permutation tree: nodes below the
// observation depth are replaced by a cut marker.
class PartialTree {
 public:
  static PartialTree cut() { return PartialTree(); }
  // Throws ArityError if label.size() != children.size().
  static PartialTree node(Perm label, std::vector<PartialTree> children);
  static PartialTree from_fpt(const Fpt& t);

  bool is_cut() const noexcept { return cut_; }
  const Perm& label() const noexcept { return label_; }
  const std::vector<PartialTree>& children() const noexcept { return children_; }

  // Fpt text syntax with `cut` standing for pruned subtrees.
  std::string to_string() const;

  friend bool operator==(const PartialTree&, const PartialTree&);

 private:
  PartialTree() = default;

  bool cut_ = true;
  Perm label_;
  std::vector<PartialTree> children_;
};

// A rational permutation tree: a finite rooted state system whose unfolding
// from the root is the (possibly infinite) tree it denotes. Every state is
// reachable from the root; the constructor trims the rest.
class Rpt {
 public:
  struct State {
    Perm label;
    std::vector<std::size_t> children;

    friend bool operator==(const State&, const State&) = default;
  };

  // Throws Error on out-of-range children, ArityError on label/child
  // count mismatch.
  Rpt(std::vector<State> states, std::size_t root);

  // The one-state machine for the unit tree.
  static Rpt leaf();

  const std::vector<State>& states() const noexcept { return states_; }
  const State& state(std::size_t s) const { return states_.at(s); }
  std::size_t root() const noexcept { return root_; }
  std::size_t size() const noexcept { return states_.size(); }

  // The same system with `s` as root (then trimmed).
  Rpt rooted_at(std::size_t s) const;

  // Bisimulation quotient with states numbered breadth-first from the root.
  // Bisimilar machines have identical minimized forms.
  Rpt minimized() const;

  // {"root": id, "states": {id: {"perm": [...], "children": [ids]}}}
  std::string to_json() const;
  // Rejects dangling ids and perm/children length mismatches.
  static Rpt from_json(std::string_view text);

  friend bool operator==(const Rpt&, const Rpt&) = default;

 private:
  std::vector<State> states_;
  std::size_t root_ = 0;
};

// The chain {1^n : n in N}: one state with label [1] whose only child is
// itself. Idempotent and infinite.
Rpt j_machine();

Rpt from_fpt(const Fpt& t);
// The finite tree, or absent when a cycle is reachable from the root.
std::optional<Fpt> to_fpt(const Rpt& r);

// No cycle is reachable from the root.
bool is_finite(const Rpt& r);

PartialTree unfold_to_depth(const Rpt& r, std::size_t depth);

// Product and star on observations; a cut in either factor yields a cut.
PartialTree partial_product(const PartialTree& t, const PartialTree& u);
PartialTree partial_star(const PartialTree& t);
// Replaces everything below `depth` by cuts.
PartialTree truncate(const PartialTree& t, std::size_t depth);

Rpt r_product(const Rpt& r, const Rpt& s);
Rpt r_star(const Rpt& r);

bool in_idem_class(const Rpt& r, IdemClass cls);

// Equality of unfoldings.
bool bisim_equal(const Rpt& r, const Rpt& s);

// <= (cls = E) or <=' (cls = E') between the unfoldings.
bool r_leq(const Rpt& r, const Rpt& s, IdemClass cls);

// t^m (cls = E) or t^m' (cls = E').
Rpt r_max_rep(const Rpt& r, IdemClass cls);

bool r_sigma_equiv(const Rpt& r, const Rpt& s, IdemClass cls);

// Given t <=' v and u <=' v, a common <='-lower bound of t and u built
// node by node: shared positions recurse, positions below v multiply the two
// finite idempotent children, and the longer node contributes its surplus.
// Throws PreconditionError when either order relation fails.
Rpt r_common_lower_bound(const Rpt& t, const Rpt& u, const Rpt& v);

// Every machine with 1..max_states states, arities <= 2 and root 0, modulo
// bisimulation, in minimized form and a deterministic order.
std::vector<Rpt> rational_corpus(std::size_t max_states);

}  // namespace ptlab
