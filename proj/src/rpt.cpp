#include "ptlab/rpt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

#include "ptlab/error.hpp"

namespace ptlab {

std::string to_string(IdemClass cls) {
  return cls == IdemClass::E ? "E" : "E'";
}

// ---------------------------------------------------------------------------
// PartialTree

PartialTree PartialTree::node(Perm label, std::vector<PartialTree> children) {
  if (label.size() != children.size()) {
    throw ArityError("arity mismatch: label " + label.to_string() + " expects " +
                     std::to_string(label.size()) + " children, got " +
                     std::to_string(children.size()));
  }
  PartialTree p;
  p.cut_ = false;
  p.label_ = std::move(label);
  p.children_ = std::move(children);
  return p;
}

PartialTree PartialTree::from_fpt(const Fpt& t) {
  std::vector<PartialTree> kids;
  kids.reserve(t.arity());
  for (const auto& c : t.children()) kids.push_back(from_fpt(c));
  return node(t.label(), std::move(kids));
}

std::string PartialTree::to_string() const {
  if (cut_) return "cut";
  if (children_.empty()) return "*";
  std::string s = "(" + label_.to_string() + ";";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    s += (i == 0 ? " " : ", ");
    s += children_[i].to_string();
  }
  return s + ")";
}

bool operator==(const PartialTree& a, const PartialTree& b) {
  return a.cut_ == b.cut_ && a.label_ == b.label_ && a.children_ == b.children_;
}

// ---------------------------------------------------------------------------
// Rpt construction

namespace {

std::vector<std::size_t> reachable_order(const std::vector<Rpt::State>& states,
                                         std::size_t root) {
  std::vector<std::size_t> order;
  std::vector<bool> seen(states.size(), false);
  std::queue<std::size_t> q;
  q.push(root);
  seen[root] = true;
  while (!q.empty()) {
    std::size_t s = q.front();
    q.pop();
    order.push_back(s);
    for (std::size_t c : states[s].children) {
      if (!seen[c]) {
        seen[c] = true;
        q.push(c);
      }
    }
  }
  return order;
}

}  // namespace

Rpt::Rpt(std::vector<State> states, std::size_t root) {
  if (root >= states.size()) throw Error("root state out of range");
  for (const auto& st : states) {
    if (st.label.size() != st.children.size()) {
      throw ArityError("arity mismatch: label " + st.label.to_string() +
                       " expects " + std::to_string(st.label.size()) +
                       " children, got " + std::to_string(st.children.size()));
    }
    for (std::size_t c : st.children) {
      if (c >= states.size()) throw Error("child state out of range");
    }
  }
  // Breadth-first renumbering drops unreachable states and fixes root = 0.
  auto order = reachable_order(states, root);
  std::vector<std::size_t> index(states.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  states_.reserve(order.size());
  for (std::size_t old : order) {
    State st = std::move(states[old]);
    for (auto& c : st.children) c = index[c];
    states_.push_back(std::move(st));
  }
  root_ = 0;
}

Rpt Rpt::leaf() { return Rpt({State{}}, 0); }

Rpt j_machine() { return Rpt({Rpt::State{Perm({1}), {0}}}, 0); }

Rpt Rpt::rooted_at(std::size_t s) const { return Rpt(states_, s); }

Rpt Rpt::minimized() const {
  const std::size_t n = states_.size();
  // Partition refinement: start from label classes, split by child blocks.
  std::vector<std::size_t> block(n, 0);
  std::size_t blocks = 0;
  {
    std::map<Perm, std::size_t> ids;
    for (std::size_t s = 0; s < n; ++s) {
      auto [it, fresh] = ids.emplace(states_[s].label, ids.size());
      block[s] = it->second;
    }
    blocks = ids.size();
  }
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> sig;
      sig.reserve(states_[s].children.size());
      for (std::size_t c : states_[s].children) sig.push_back(block[c]);
      auto [it, fresh] = ids.emplace(std::make_pair(block[s], std::move(sig)), ids.size());
      next[s] = it->second;
    }
    block = std::move(next);
    if (ids.size() == blocks) break;
    blocks = ids.size();
  }
  std::vector<State> quotient(blocks);
  std::vector<bool> filled(blocks, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (filled[block[s]]) continue;
    filled[block[s]] = true;
    State st = states_[s];
    for (auto& c : st.children) c = block[c];
    quotient[block[s]] = std::move(st);
  }
  return Rpt(std::move(quotient), block[root_]);
}

// ---------------------------------------------------------------------------
// Finite trees

Rpt from_fpt(const Fpt& t) {
  std::vector<Rpt::State> states;
  std::function<std::size_t(const Fpt&)> visit = [&](const Fpt& x) {
    std::size_t id = states.size();
    states.push_back(Rpt::State{x.label(), {}});
    std::vector<std::size_t> kids;
    kids.reserve(x.arity());
    for (const auto& c : x.children()) kids.push_back(visit(c));
    states[id].children = std::move(kids);
    return id;
  };
  visit(t);
  return Rpt(std::move(states), 0);
}

namespace {

// finite[s]: no cycle is reachable from s (least fixpoint).
std::vector<bool> finite_states(const Rpt& r) {
  const auto& st = r.states();
  std::vector<bool> fin(st.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < st.size(); ++s) {
      if (fin[s]) continue;
      bool all = std::all_of(st[s].children.begin(), st[s].children.end(),
                             [&](std::size_t c) { return fin[c]; });
      if (all) {
        fin[s] = true;
        changed = true;
      }
    }
  }
  return fin;
}

// member[s]: the subtree at s lies in the class.
std::vector<bool> class_members(const Rpt& r, IdemClass cls) {
  const auto& st = r.states();
  std::vector<bool> in(st.size());
  for (std::size_t s = 0; s < st.size(); ++s) in[s] = st[s].label.is_identity();
  // Greatest fixpoint: drop states with a child outside the class.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < st.size(); ++s) {
      if (!in[s]) continue;
      for (std::size_t c : st[s].children) {
        if (!in[c]) {
          in[s] = false;
          changed = true;
          break;
        }
      }
    }
  }
  if (cls == IdemClass::EPrime) {
    auto fin = finite_states(r);
    for (std::size_t s = 0; s < st.size(); ++s) in[s] = in[s] && fin[s];
  }
  return in;
}

}  // namespace

bool is_finite(const Rpt& r) { return finite_states(r)[r.root()]; }

std::optional<Fpt> to_fpt(const Rpt& r) {
  if (!is_finite(r)) return std::nullopt;
  std::function<Fpt(std::size_t)> build = [&](std::size_t s) {
    const auto& st = r.state(s);
    std::vector<Fpt> kids;
    kids.reserve(st.children.size());
    for (std::size_t c : st.children) kids.push_back(build(c));
    return Fpt::node(st.label, std::move(kids));
  };
  return build(r.root());
}

PartialTree unfold_to_depth(const Rpt& r, std::size_t depth) {
  std::function<PartialTree(std::size_t, std::size_t)> go = [&](std::size_t s,
                                                                std::size_t d) {
    if (d == 0) return PartialTree::cut();
    const auto& st = r.state(s);
    std::vector<PartialTree> kids;
    kids.reserve(st.children.size());
    for (std::size_t c : st.children) kids.push_back(go(c, d - 1));
    return PartialTree::node(st.label, std::move(kids));
  };
  return go(r.root(), depth);
}

namespace {

const PartialTree& partial_leaf() {
  static const PartialTree leaf = PartialTree::node(Perm(), {});
  return leaf;
}

const PartialTree& partial_child(const PartialTree& t, unsigned i) {
  return i <= t.children().size() ? t.children()[i - 1] : partial_leaf();
}

}  // namespace

PartialTree partial_product(const PartialTree& t, const PartialTree& u) {
  if (t.is_cut() || u.is_cut()) return PartialTree::cut();
  const Perm& pi = t.label();
  const Perm& rho = u.label();
  const std::size_t k = std::max(pi.size(), rho.size());
  std::vector<PartialTree> kids;
  kids.reserve(k);
  for (unsigned i = 1; i <= k; ++i) {
    kids.push_back(partial_product(partial_child(u, i), partial_child(t, rho(i))));
  }
  return PartialTree::node(compose(pi, rho).extended(k), std::move(kids));
}

PartialTree partial_star(const PartialTree& t) {
  if (t.is_cut()) return t;
  Perm inv = t.label().inverse();
  std::vector<PartialTree> kids;
  kids.reserve(t.children().size());
  for (unsigned i = 1; i <= t.children().size(); ++i) {
    kids.push_back(partial_star(t.children()[inv(i) - 1]));
  }
  return PartialTree::node(std::move(inv), std::move(kids));
}

PartialTree truncate(const PartialTree& t, std::size_t depth) {
  if (depth == 0 || t.is_cut()) return PartialTree::cut();
  std::vector<PartialTree> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(truncate(c, depth - 1));
  return PartialTree::node(t.label(), std::move(kids));
}

// ---------------------------------------------------------------------------
// Inverse-monoid operations

Rpt r_product(const Rpt& r, const Rpt& s) {
  // Factor sides swap at every level, so pair states range over the disjoint
  // union of both machines plus a shared leaf state.
  const std::size_t R = r.size(), S = s.size(), LEAF = R + S;
  auto label_of = [&](std::size_t x) -> const Perm& {
    static const Perm empty;
    if (x < R) return r.state(x).label;
    if (x < LEAF) return s.state(x - R).label;
    return empty;
  };
  auto child_of = [&](std::size_t x, unsigned i) -> std::size_t {
    if (x < R) {
      const auto& ch = r.state(x).children;
      return i <= ch.size() ? ch[i - 1] : LEAF;
    }
    if (x < LEAF) {
      const auto& ch = s.state(x - R).children;
      return i <= ch.size() ? ch[i - 1] + R : LEAF;
    }
    return LEAF;
  };

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  auto intern = [&](std::size_t a, std::size_t b) {
    auto [it, fresh] = ids.emplace(std::make_pair(a, b), ids.size());
    if (fresh) pending.emplace_back(a, b);
    return it->second;
  };

  std::vector<Rpt::State> out;
  intern(r.root(), R + s.root());
  for (std::size_t next = 0; next < pending.size(); ++next) {
    auto [a, b] = pending[next];
    const Perm& pi = label_of(a);
    const Perm& rho = label_of(b);
    const std::size_t k = std::max(pi.size(), rho.size());
    Rpt::State st;
    st.label = compose(pi, rho).extended(k);
    st.children.reserve(k);
    for (unsigned i = 1; i <= k; ++i) {
      st.children.push_back(intern(child_of(b, i), child_of(a, rho(i))));
    }
    out.push_back(std::move(st));
  }
  return Rpt(std::move(out), 0).minimized();
}

Rpt r_star(const Rpt& r) {
  std::vector<Rpt::State> out;
  out.reserve(r.size());
  for (const auto& st : r.states()) {
    Perm inv = st.label.inverse();
    std::vector<std::size_t> kids;
    kids.reserve(st.children.size());
    for (unsigned i = 1; i <= st.children.size(); ++i) {
      kids.push_back(st.children[inv(i) - 1]);
    }
    out.push_back(Rpt::State{std::move(inv), std::move(kids)});
  }
  return Rpt(std::move(out), r.root()).minimized();
}

bool in_idem_class(const Rpt& r, IdemClass cls) {
  return class_members(r, cls)[r.root()];
}

bool bisim_equal(const Rpt& r, const Rpt& s) {
  // Union-find over the disjoint union; every merged pair must agree locally.
  const std::size_t R = r.size();
  std::vector<std::size_t> parent(R + s.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto state_of = [&](std::size_t x) -> const Rpt::State& {
    return x < R ? r.state(x) : s.state(x - R);
  };
  std::vector<std::pair<std::size_t, std::size_t>> work{{r.root(), R + s.root()}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    std::size_t fa = find(a), fb = find(b);
    if (fa == fb) continue;
    const auto& sa = state_of(a);
    const auto& sb = state_of(b);
    if (sa.label != sb.label) return false;
    parent[fa] = fb;
    const std::size_t oa = a < R ? 0 : R, ob = b < R ? 0 : R;
    for (std::size_t i = 0; i < sa.children.size(); ++i) {
      work.emplace_back(sa.children[i] + oa, sb.children[i] + ob);
    }
  }
  return true;
}

bool r_leq(const Rpt& r, const Rpt& s, IdemClass cls) {
  // The relation is the greatest fixpoint on state pairs; only pairs reachable
  // from the roots can matter, and each must satisfy the local condition.
  auto member = class_members(r, cls);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> work{{r.root(), s.root()}};
  while (!work.empty()) {
    auto pr = work.back();
    work.pop_back();
    if (!seen.insert(pr).second) continue;
    const auto& a = r.state(pr.first);
    const auto& b = s.state(pr.second);
    if (b.children.size() > a.children.size()) return false;
    if (!a.label.agrees_with(b.label)) return false;
    for (std::size_t i = b.children.size(); i < a.children.size(); ++i) {
      if (!member[a.children[i]]) return false;
    }
    for (std::size_t i = 0; i < b.children.size(); ++i) {
      work.emplace_back(a.children[i], b.children[i]);
    }
  }
  return true;
}

Rpt r_max_rep(const Rpt& r, IdemClass cls) {
  auto member = class_members(r, cls);
  std::vector<Rpt::State> out;
  out.reserve(r.size());
  for (const auto& st : r.states()) {
    std::size_t k = st.children.size();
    while (k > 0 && st.label(static_cast<unsigned>(k)) == k && member[st.children[k - 1]]) {
      --k;
    }
    Rpt::State ns;
    ns.label = st.label.restricted(k);
    ns.children.assign(st.children.begin(), st.children.begin() + k);
    out.push_back(std::move(ns));
  }
  return Rpt(std::move(out), r.root()).minimized();
}

bool r_sigma_equiv(const Rpt& r, const Rpt& s, IdemClass cls) {
  return bisim_equal(r_max_rep(r, cls), r_max_rep(s, cls));
}

// ---------------------------------------------------------------------------
// Common lower bound

Rpt r_common_lower_bound(const Rpt& t, const Rpt& u, const Rpt& v) {
  if (!r_leq(t, v, IdemClass::EPrime) || !r_leq(u, v, IdemClass::EPrime)) {
    throw PreconditionError("common lower bound needs t <=' v and u <=' v");
  }
  std::vector<Rpt::State> out;

  // Copies a whole machine into `out`; returns the new index of its root.
  auto embed = [&](const Rpt& m) {
    const std::size_t base = out.size();
    for (const auto& st : m.states()) {
      Rpt::State ns = st;
      for (auto& c : ns.children) c += base;
      out.push_back(std::move(ns));
    }
    return base + m.root();
  };

  std::map<std::size_t, std::size_t> t_copies, u_copies;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> products;
  auto copy_of = [&](const Rpt& m, std::size_t x, std::map<std::size_t, std::size_t>& memo) {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    std::size_t id = embed(m.rooted_at(x));
    memo[x] = id;
    return id;
  };
  auto product_of = [&](std::size_t a, std::size_t b) {
    auto it = products.find({a, b});
    if (it != products.end()) return it->second;
    std::size_t id = embed(r_product(t.rooted_at(a), u.rooted_at(b)));
    products[{a, b}] = id;
    return id;
  };

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> lb;
  std::function<std::size_t(std::size_t, std::size_t, std::size_t)> go =
      [&](std::size_t a, std::size_t b, std::size_t c) -> std::size_t {
    auto key = std::make_tuple(a, b, c);
    auto it = lb.find(key);
    if (it != lb.end()) return it->second;
    const std::size_t id = out.size();
    out.emplace_back();
    lb[key] = id;

    const auto& sa = t.state(a);
    const auto& sb = u.state(b);
    const auto& sc = v.state(c);
    const std::size_t n = sa.children.size(), m = sb.children.size();
    const std::size_t k = sc.children.size();
    const std::size_t lo = std::min(n, m), hi = std::max(n, m);
    Rpt::State st;
    st.label = n >= m ? sa.label : sb.label;
    for (std::size_t i = 0; i < hi; ++i) {
      std::size_t child;
      if (i < k) {
        child = go(sa.children[i], sb.children[i], sc.children[i]);
      } else if (i < lo) {
        child = product_of(sa.children[i], sb.children[i]);
      } else if (n > m) {
        child = copy_of(t, sa.children[i], t_copies);
      } else {
        child = copy_of(u, sb.children[i], u_copies);
      }
      st.children.push_back(child);
    }
    out[id] = std::move(st);
    return id;
  };
  go(t.root(), u.root(), v.root());
  return Rpt(std::move(out), 0).minimized();
}

// ---------------------------------------------------------------------------
// Corpus

std::vector<Rpt> rational_corpus(std::size_t max_states) {
  // Per-state choices: (label, children) with arity <= 2 over k states.
  std::set<std::string> seen;
  std::vector<Rpt> corpus;
  for (std::size_t k = 1; k <= max_states; ++k) {
    std::vector<Rpt::State> choices;
    choices.push_back(Rpt::State{});
    for (std::size_t c = 0; c < k; ++c) choices.push_back(Rpt::State{Perm({1}), {c}});
    for (std::size_t c1 = 0; c1 < k; ++c1) {
      for (std::size_t c2 = 0; c2 < k; ++c2) {
        choices.push_back(Rpt::State{Perm({1, 2}), {c1, c2}});
        choices.push_back(Rpt::State{Perm({2, 1}), {c1, c2}});
      }
    }
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
      std::vector<Rpt::State> states;
      states.reserve(k);
      for (std::size_t i = 0; i < k; ++i) states.push_back(choices[pick[i]]);
      Rpt m = Rpt(std::move(states), 0).minimized();
      if (seen.insert(m.to_json()).second) corpus.push_back(std::move(m));
      std::size_t i = 0;
      while (i < k && ++pick[i] == choices.size()) pick[i++] = 0;
      if (i == k) break;
    }
  }
  std::stable_sort(corpus.begin(), corpus.end(), [](const Rpt& a, const Rpt& b) {
    return a.size() < b.size();
  });
  return corpus;
}

}  // namespace ptlab
