#include "ptlab/fpt.hpp"

#include <algorithm>

#include "ptlab/error.hpp"

namespace ptlab {

namespace {
const Fpt kLeaf{};
}  // namespace

Fpt Fpt::node(Perm label, std::vector<Fpt> children) {
  if (label.size() != children.size()) {
    throw ArityError("arity mismatch: label " + label.to_string() +
                     " expects " + std::to_string(label.size()) +
                     " children, got " + std::to_string(children.size()));
  }
  Fpt t;
  t.label_ = std::move(label);
  t.children_ = std::move(children);
  return t;
}

const Fpt& Fpt::child_or_leaf(unsigned i) const noexcept {
  return (i >= 1 && i <= children_.size()) ? children_[i - 1] : kLeaf;
}

bool operator==(const Fpt& a, const Fpt& b) {
  return a.label() == b.label() && a.children() == b.children();
}

std::strong_ordering operator<=>(const Fpt& a, const Fpt& b) {
  if (auto c = a.label() <=> b.label(); c != 0) return c;
  const auto& x = a.children();
  const auto& y = b.children();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return x.size() <=> y.size();
}

bool canonical_less(const Fpt& a, const Fpt& b) {
  const auto na = norm(a), nb = norm(b);
  if (na != nb) return na < nb;
  return a.to_string() < b.to_string();
}

Fpt mk_node(Perm label, std::vector<Fpt> children) {
  return Fpt::node(std::move(label), std::move(children));
}

Fpt product(const Fpt& t, const Fpt& u) {
  if (u.is_leaf()) return t;
  if (t.is_leaf()) return u;
  const Perm& rho = u.label();
  Perm label = compose(t.label(), rho);
  const std::size_t k = label.size();
  std::vector<Fpt> children;
  children.reserve(k);
  for (unsigned i = 1; i <= k; ++i) {
    children.push_back(product(u.child_or_leaf(i), t.child_or_leaf(rho(i))));
  }
  return Fpt::node(std::move(label), std::move(children));
}

Fpt star(const Fpt& t) {
  if (t.is_leaf()) return t;
  Perm inv = t.label().inverse();
  std::vector<Fpt> children;
  children.reserve(t.arity());
  for (unsigned i = 1; i <= t.arity(); ++i) {
    children.push_back(star(t.child_or_leaf(inv(i))));
  }
  return Fpt::node(std::move(inv), std::move(children));
}

bool is_idempotent(const Fpt& t) {
  if (!t.label().is_identity()) return false;
  return std::all_of(t.children().begin(), t.children().end(),
                     [](const Fpt& c) { return is_idempotent(c); });
}

bool natural_leq(const Fpt& t, const Fpt& u) {
  const std::size_t n = t.arity(), m = u.arity();
  if (m > n || !t.label().agrees_with(u.label())) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (!natural_leq(t.children()[i], u.children()[i])) return false;
  }
  for (std::size_t i = m; i < n; ++i) {
    if (!is_idempotent(t.children()[i])) return false;
  }
  return true;
}

std::optional<Fpt> meet(const Fpt& t, const Fpt& u) {
  const Fpt us = star(u);
  if (!is_idempotent(product(star(t), u)) || !is_idempotent(product(t, us))) {
    return std::nullopt;
  }
  return product(product(t, us), u);
}

Fpt max_rep(const Fpt& t) {
  const Perm& pi = t.label();
  std::size_t k = t.arity();
  while (k > 0 && pi(static_cast<unsigned>(k)) == k &&
         is_idempotent(t.children()[k - 1])) {
    --k;
  }
  std::vector<Fpt> children;
  children.reserve(k);
  for (std::size_t i = 0; i < k; ++i) children.push_back(max_rep(t.children()[i]));
  return Fpt::node(pi.restricted(k), std::move(children));
}

std::size_t norm(const Fpt& t) {
  std::size_t n = 1;
  for (const auto& c : t.children()) n += norm(c);
  return n;
}

Fpt skeleton(const Fpt& t) {
  std::vector<Fpt> children;
  children.reserve(t.arity());
  for (const auto& c : t.children()) children.push_back(skeleton(c));
  return Fpt::node(Perm::identity(t.arity()), std::move(children));
}

bool covers(const Fpt& t, const Fpt& u) {
  const std::size_t n = t.arity(), m = u.arity();
  if (n == m) {
    if (t.label() != u.label()) return false;
    std::size_t differing = 0, at = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(t.children()[i] == u.children()[i])) {
        ++differing;
        at = i;
      }
    }
    return differing == 1 && covers(t.children()[at], u.children()[at]);
  }
  if (n == m + 1) {
    if (!t.children().back().is_leaf()) return false;
    if (t.label()(static_cast<unsigned>(n)) != n) return false;
    if (!t.label().agrees_with(u.label())) return false;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(t.children()[i] == u.children()[i])) return false;
    }
    return true;
  }
  return false;
}

std::vector<Fpt> upset(const Fpt& t) {
  std::vector<Fpt> out;
  for (const auto& u : enumerate_fpt(norm(t))) {
    if (natural_leq(t, u)) out.push_back(u);
  }
  return out;
}

bool sigma_equiv(const Fpt& t, const Fpt& u) { return max_rep(t) == max_rep(u); }

std::vector<std::pair<Fpt, Fpt>> factorizations(const Fpt& t) {
  std::vector<std::pair<Fpt, Fpt>> out;
  const auto universe = enumerate_fpt(norm(t));
  for (const auto& v : universe) {
    for (const auto& w : universe) {
      if (product(v, w) == t) out.emplace_back(v, w);
    }
  }
  return out;
}

}  // namespace ptlab
