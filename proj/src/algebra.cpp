#include "ptlab/algebra.hpp"

#include <algorithm>
#include <set>

#include "ptlab/error.hpp"

namespace ptlab {

std::vector<Fpt> green_class(GreenKind kind, const Fpt& t) {
  const Fpt left = product(star(t), t);
  const Fpt right = product(t, star(t));
  std::vector<Fpt> out;
  for (const auto& u : enumerate_fpt_exact(norm(t))) {
    bool l = kind == GreenKind::R || product(star(u), u) == left;
    bool r = kind == GreenKind::L || product(u, star(u)) == right;
    if (l && r) out.push_back(u);
  }
  return out;
}

std::vector<Fpt> max_subgroup(const Fpt& e) {
  if (!is_idempotent(e)) {
    throw PreconditionError("max_subgroup needs an idempotent, got " + e.to_string());
  }
  std::vector<Fpt> group;
  for (const auto& t : enumerate_fpt_exact(norm(e))) {
    if (product(product(e, t), e) == t && product(t, star(t)) == e && product(star(t), t) == e) {
      group.push_back(t);
    }
  }
  std::set<Fpt> members(group.begin(), group.end());
  if (!members.count(e)) throw Error("subgroup misses its identity " + e.to_string());
  for (const auto& a : group) {
    if (!members.count(star(a))) throw Error("subgroup not closed under star at " + a.to_string());
    if (product(a, e) != a || product(e, a) != a) {
      throw Error("identity fails at " + a.to_string());
    }
    for (const auto& b : group) {
      if (!members.count(product(a, b))) {
        throw Error("subgroup not closed under product at " + a.to_string() + ", " +
                    b.to_string());
      }
    }
  }
  return group;
}

Fpt group_product_max(const Fpt& t, const Fpt& u) {
  if (max_rep(t) != t || max_rep(u) != u) {
    throw PreconditionError("group_product_max needs maximal elements");
  }
  return max_rep(product(t, u));
}

bool brute_sigma(const Fpt& t, const Fpt& u) {
  Fpt w = product(t, product(star(u), u));
  return natural_leq(w, t) && natural_leq(w, u);
}

Fpt product_skipping_composition(const Fpt& t, const Fpt& u) {
  const Perm& rho = u.label();
  const std::size_t k = std::max(t.arity(), u.arity());
  std::vector<Fpt> kids;
  kids.reserve(k);
  for (unsigned i = 1; i <= k; ++i) {
    kids.push_back(product_skipping_composition(u.child_or_leaf(i), t.child_or_leaf(rho(i))));
  }
  return Fpt::node(Perm::identity(k), std::move(kids));
}

}  // namespace ptlab
