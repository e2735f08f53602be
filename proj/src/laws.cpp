#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ptlab/algebra.hpp"
#include "ptlab/bridge.hpp"
#include "ptlab/error.hpp"
#include "ptlab/lambda.hpp"
#include "ptlab/rpt.hpp"
#include "ptlab/theories.hpp"

namespace ptlab {

namespace {

using Trees = std::vector<Fpt>;

class Check {
 public:
  Check(std::string name, std::string universe, std::size_t keep) : keep_(keep) {
    report_.name = std::move(name);
    report_.universe = std::move(universe);
  }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++report_.checked;
    if (ok) return;
    ++report_.failures;
    if (report_.counterexamples.size() < keep_) report_.counterexamples.push_back(describe());
  }

  LawReport done() { return std::move(report_); }

 private:
  LawReport report_;
  std::size_t keep_;
};

std::string universe(const std::string& what, std::size_t nodes, std::size_t count) {
  return what + " <= " + std::to_string(nodes) + " nodes (" + std::to_string(count) + ")";
}

Trees idempotents(const Trees& ts) {
  Trees out;
  std::copy_if(ts.begin(), ts.end(), std::back_inserter(out), is_idempotent);
  return out;
}

std::string show(const Fpt& t) { return t.to_string(); }
std::string show2(const Fpt& t, const Fpt& u) { return "t=" + show(t) + " u=" + show(u); }
std::string show3(const Fpt& t, const Fpt& u, const Fpt& v) {
  return show2(t, u) + " v=" + show(v);
}

std::string show_rpt(const Rpt& r) {
  if (auto t = to_fpt(r)) return t->to_string();
  return r.to_json();
}

using LawFn = std::function<LawReport()>;

// ---------------------------------------------------------------------------
// Inverse monoid laws; these use the injectable product and star.

void inverse_monoid_laws(const LawOptions& o, std::vector<LawFn>& laws) {
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.max_nodes);
    Check c("(t*)* = t", universe("trees", o.max_nodes, u.size()), o.keep_counterexamples);
    for (const auto& t : u) c.expect(o.star(o.star(t)) == t, [&] { return show(t); });
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.max_nodes);
    Check c("uu*u = u", universe("trees", o.max_nodes, u.size()), o.keep_counterexamples);
    for (const auto& t : u) {
      c.expect(o.product(o.product(t, o.star(t)), t) == t, [&] { return show(t); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.max_nodes);
    Check c("u*uu* = u*", universe("trees", o.max_nodes, u.size()), o.keep_counterexamples);
    for (const auto& t : u) {
      Fpt s = o.star(t);
      c.expect(o.product(o.product(s, t), s) == s, [&] { return show(t); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.max_nodes);
    Check c("uu* is idempotent", universe("trees", o.max_nodes, u.size()),
            o.keep_counterexamples);
    for (const auto& t : u) {
      Fpt e = o.product(t, o.star(t));
      c.expect(is_idempotent(e) && o.product(e, e) == e, [&] { return show(t); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.max_nodes);
    Check c("(tu)* = u*t*", universe("pairs of trees", o.max_nodes, u.size() * u.size()),
            o.keep_counterexamples);
    std::vector<Fpt> stars;
    for (const auto& t : u) stars.push_back(o.star(t));
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = 0; j < u.size(); ++j) {
        c.expect(o.star(o.product(u[i], u[j])) == o.product(stars[j], stars[i]),
                 [&] { return show2(u[i], u[j]); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    Trees es = idempotents(enumerate_fpt(o.max_nodes));
    Check c("ef = fe for idempotents",
            universe("pairs of idempotents", o.max_nodes, es.size() * es.size()),
            o.keep_counterexamples);
    for (const auto& e : es) {
      for (const auto& f : es) {
        c.expect(o.product(e, f) == o.product(f, e), [&] { return show2(e, f); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.ternary_nodes);
    Check c("(tu)v = t(uv)", universe("triples of trees", o.ternary_nodes,
                                      u.size() * u.size() * u.size()),
            o.keep_counterexamples);
    for (const auto& t : u) {
      for (const auto& v : u) {
        Fpt tv = o.product(t, v);
        for (const auto& w : u) {
          c.expect(o.product(tv, w) == o.product(t, o.product(v, w)),
                   [&] { return show3(t, v, w); });
        }
      }
    }
    return c.done();
  });
}

// ---------------------------------------------------------------------------
// Order, norm and E-unitarity.

void order_laws(const LawOptions& o, std::vector<LawFn>& laws) {
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.max_nodes);
    Check c("upset(t) has the unique maximum max_rep(t)",
            universe("trees", o.max_nodes, u.size()), o.keep_counterexamples);
    for (const auto& t : u) {
      const Fpt m = max_rep(t);
      const Trees up = upset(t);
      bool ok = std::find(up.begin(), up.end(), m) != up.end();
      for (const auto& v : up) ok = ok && natural_leq(v, m);
      c.expect(ok, [&] { return show(t) + " max_rep=" + show(m); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.max_nodes);
    Trees es = idempotents(u);
    Check c("e <= v with e idempotent forces v idempotent",
            universe("idempotent/tree pairs", o.max_nodes, es.size() * u.size()),
            o.keep_counterexamples);
    for (const auto& e : es) {
      for (const auto& v : u) {
        c.expect(!natural_leq(e, v) || is_idempotent(v), [&] { return show2(e, v); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.pair_nodes);
    const Trees es = idempotents(u);
    Check c("t <= u iff t = ue for some idempotent e",
            universe("pairs of trees", o.pair_nodes, u.size() * u.size()),
            o.keep_counterexamples);
    for (const auto& t : u) {
      for (const auto& v : u) {
        bool exists = std::any_of(es.begin(), es.end(),
                                  [&](const Fpt& e) { return product(v, e) == t; });
        c.expect(natural_leq(t, v) == exists, [&] { return show2(t, v); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.pair_nodes);
    Check c("t < u is joined by a covering chain inside upset(t)",
            universe("pairs of trees", o.pair_nodes, u.size() * u.size()),
            o.keep_counterexamples);
    for (const auto& t : u) {
      const Trees up = upset(t);
      for (const auto& v : up) {
        if (v == t) continue;
        // Breadth-first along covers within the up-set.
        std::set<Fpt> seen{t};
        std::vector<Fpt> frontier{t};
        while (!frontier.empty() && !seen.count(v)) {
          std::vector<Fpt> next;
          for (const auto& x : frontier) {
            for (const auto& y : up) {
              if (!seen.count(y) && covers(x, y)) {
                seen.insert(y);
                next.push_back(y);
              }
            }
          }
          frontier = std::move(next);
        }
        c.expect(seen.count(v) > 0, [&] { return show2(t, v); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.ternary_nodes);
    std::vector<std::pair<Fpt, Fpt>> related;
    for (const auto& a : u) {
      for (const auto& b : u) {
        if (natural_leq(a, b)) related.emplace_back(a, b);
      }
    }
    Check c("s <= t and u <= v imply s* <= t* and su <= tv",
            universe("pairs of related pairs", o.ternary_nodes, related.size() * related.size()),
            o.keep_counterexamples);
    for (const auto& [s1, t1] : related) {
      for (const auto& [u1, v1] : related) {
        bool ok = natural_leq(star(s1), star(t1)) && natural_leq(product(s1, u1), product(t1, v1));
        c.expect(ok, [&] { return show2(s1, t1) + " / " + show2(u1, v1); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.pair_nodes);
    Check c("t < u implies ||u|| < ||t||", universe("pairs of trees", o.pair_nodes,
                                                     u.size() * u.size()),
            o.keep_counterexamples);
    for (const auto& t : u) {
      for (const auto& v : u) {
        bool strict = t != v && natural_leq(t, v);
        c.expect(!strict || norm(v) < norm(t), [&] { return show2(t, v); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.max_nodes);
    Check c("||t|| = ||t*||", universe("trees", o.max_nodes, u.size()), o.keep_counterexamples);
    for (const auto& t : u) c.expect(norm(t) == norm(star(t)), [&] { return show(t); });
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.pair_nodes);
    Check c("max(||t||, ||u||) <= ||tu|| <= ||t|| + ||u||",
            universe("pairs of trees", o.pair_nodes, u.size() * u.size()),
            o.keep_counterexamples);
    for (const auto& t : u) {
      for (const auto& v : u) {
        std::size_t n = norm(product(t, v));
        c.expect(std::max(norm(t), norm(v)) <= n && n <= norm(t) + norm(v),
                 [&] { return show2(t, v); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.max_nodes);
    Check c("||sk t|| = ||tt*|| = ||t*t||", universe("trees", o.max_nodes, u.size()),
            o.keep_counterexamples);
    for (const auto& t : u) {
      std::size_t s = norm(skeleton(t));
      c.expect(s == norm(product(t, star(t))) && s == norm(product(star(t), t)),
               [&] { return show(t); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.pair_nodes);
    Check c("covers(t, u) iff t < u with nothing strictly between",
            universe("pairs of trees", o.pair_nodes, u.size() * u.size()),
            o.keep_counterexamples);
    for (const auto& t : u) {
      for (const auto& v : u) {
        bool brute = t != v && natural_leq(t, v);
        if (brute) {
          for (const auto& w : u) {
            if (w != t && w != v && natural_leq(t, w) && natural_leq(w, v)) {
              brute = false;
              break;
            }
          }
        }
        c.expect(covers(t, v) == brute, [&] { return show2(t, v); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.max_nodes);
    Check c("idempotents are sigma-related to *", universe("trees", o.max_nodes, u.size()),
            o.keep_counterexamples);
    for (const auto& e : idempotents(u)) {
      c.expect(sigma_equiv(e, Fpt::leaf()), [&] { return show(e); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const std::size_t n = std::min<std::size_t>(o.ternary_nodes, 3);
    const Trees& u = enumerate_fpt(n);
    Check c("factorizations lie within the norm bound", universe("trees", n, u.size()),
            o.keep_counterexamples);
    for (const auto& t : u) {
      // Search one norm beyond the bound: nothing may show up there.
      const Trees& wide = enumerate_fpt(norm(t) + 1);
      std::set<std::pair<Fpt, Fpt>> brute;
      for (const auto& v : wide) {
        for (const auto& w : wide) {
          if (product(v, w) == t) brute.emplace(v, w);
        }
      }
      auto f = factorizations(t);
      std::set<std::pair<Fpt, Fpt>> listed(f.begin(), f.end());
      c.expect(brute == listed && !listed.empty(), [&] { return show(t); });
    }
    return c.done();
  });
}

// ---------------------------------------------------------------------------
// Green's relations, sigma and the group of maximal elements.

void algebra_laws(const LawOptions& o, std::vector<LawFn>& laws) {
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.pair_nodes);
    Check c("H-classes contain at most one idempotent", universe("trees", o.pair_nodes, u.size()),
            o.keep_counterexamples);
    for (const auto& t : u) {
      Trees h = green_class(GreenKind::H, t);
      bool has_t = std::find(h.begin(), h.end(), t) != h.end();
      c.expect(has_t && idempotents(h).size() <= 1, [&] { return show(t); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.pair_nodes);
    Check c("L and R classes are exact", universe("trees", o.pair_nodes, u.size()),
            o.keep_counterexamples);
    // Brute force over all trees of the universe, not just equal norm.
    for (const auto& t : u) {
      Trees l = green_class(GreenKind::L, t), r = green_class(GreenKind::R, t);
      std::set<Fpt> ls(l.begin(), l.end()), rs(r.begin(), r.end());
      std::set<Fpt> lb, rb;
      for (const auto& v : u) {
        if (product(star(v), v) == product(star(t), t)) lb.insert(v);
        if (product(v, star(v)) == product(t, star(t))) rb.insert(v);
      }
      c.expect(ls == lb && rs == rb, [&] { return show(t); });
    }
    return c.done();
  });
  laws.push_back([o] {
    Trees es = idempotents(enumerate_fpt(o.pair_nodes));
    Check c("max_subgroup(e) = H_e, a group with identity e",
            universe("idempotents", o.pair_nodes, es.size()), o.keep_counterexamples);
    for (const auto& e : es) {
      bool ok = false;
      try {
        ok = max_subgroup(e) == green_class(GreenKind::H, e);
      } catch (const Error&) {
        ok = false;
      }
      c.expect(ok, [&] { return show(e); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.ternary_nodes);
    Check c("L is a right congruence and R a left congruence",
            universe("triples of trees", o.ternary_nodes, u.size() * u.size() * u.size()),
            o.keep_counterexamples);
    auto L = [](const Fpt& a, const Fpt& b) { return product(star(a), a) == product(star(b), b); };
    auto R = [](const Fpt& a, const Fpt& b) { return product(a, star(a)) == product(b, star(b)); };
    for (const auto& a : u) {
      for (const auto& b : u) {
        const bool l = L(a, b), r = R(a, b);
        if (!l && !r) continue;
        for (const auto& w : u) {
          bool ok = (!l || L(product(a, w), product(b, w))) &&
                    (!r || R(product(w, a), product(w, b)));
          c.expect(ok, [&] { return show3(a, b, w); });
        }
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.pair_nodes);
    Check c("brute_sigma agrees with sigma_equiv",
            universe("pairs of trees", o.pair_nodes, u.size() * u.size()),
            o.keep_counterexamples);
    for (const auto& t : u) {
      for (const auto& v : u) {
        c.expect(brute_sigma(t, v) == sigma_equiv(t, v), [&] { return show2(t, v); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.pair_nodes);
    Check c("max_rep(tu) = group_product_max(max_rep t, max_rep u)",
            universe("pairs of trees", o.pair_nodes, u.size() * u.size()),
            o.keep_counterexamples);
    for (const auto& t : u) {
      for (const auto& v : u) {
        c.expect(max_rep(product(t, v)) == group_product_max(max_rep(t), max_rep(v)),
                 [&] { return show2(t, v); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    Trees maxi;
    for (const auto& t : enumerate_fpt(o.pair_nodes)) {
      if (max_rep(t) == t) maxi.push_back(t);
    }
    Check c("maximal elements form a group", universe("maximal trees", o.pair_nodes, maxi.size()),
            o.keep_counterexamples);
    const Fpt one = Fpt::leaf();
    for (const auto& t : maxi) {
      bool ok = group_product_max(t, one) == t && group_product_max(one, t) == t &&
                group_product_max(t, max_rep(star(t))) == one &&
                group_product_max(max_rep(star(t)), t) == one;
      c.expect(ok, [&] { return show(t); });
    }
    for (const auto& t : maxi) {
      for (const auto& v : maxi) {
        Fpt tv = group_product_max(t, v);
        if (norm(tv) > o.pair_nodes) continue;
        for (const auto& w : maxi) {
          c.expect(group_product_max(tv, w) == group_product_max(t, group_product_max(v, w)),
                   [&] { return show3(t, v, w); });
        }
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(std::min<std::size_t>(o.ternary_nodes, 4));
    Check c("finitely generated submonoids are finite",
            "40 random generator pairs from " + universe("trees", 4, u.size()),
            o.keep_counterexamples);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
    constexpr std::size_t cap = 20000;
    for (int trial = 0; trial < 40; ++trial) {
      const Fpt a = u[pick(rng)], b = u[pick(rng)];
      std::set<Fpt> closure{Fpt::leaf(), a, b};
      std::vector<Fpt> frontier{a, b};
      const std::vector<Fpt> gens{a, b};
      while (!frontier.empty() && closure.size() <= cap) {
        std::vector<Fpt> next;
        for (const auto& x : frontier) {
          for (const auto& g : gens) {
            if (closure.insert(product(x, g)).second) next.push_back(product(x, g));
          }
        }
        frontier = std::move(next);
      }
      c.expect(closure.size() <= cap, [&] { return show2(a, b); });
    }
    return c.done();
  });
}

// ---------------------------------------------------------------------------
// The embedding into λ-terms and the theory oracles.

struct EmbeddedUniverse {
  Trees trees;
  std::vector<Term> terms;
};

EmbeddedUniverse embedded(std::size_t n) {
  EmbeddedUniverse e{enumerate_fpt(n), {}};
  for (const auto& t : e.trees) e.terms.push_back(fpt_to_term(t));
  return e;
}

std::vector<Term> eta_closure(const Term& t) {
  std::vector<Term> seen{t};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (auto& r : eta_reducts_one_step(seen[i])) {
      bool fresh = std::none_of(seen.begin(), seen.end(),
                                [&](const Term& s) { return alpha_eq(s, r); });
      if (fresh) seen.push_back(std::move(r));
    }
  }
  return seen;
}

bool contains(const std::vector<Term>& ts, const Term& t) {
  return std::any_of(ts.begin(), ts.end(), [&](const Term& s) { return alpha_eq(s, t); });
}

void bridge_laws(const LawOptions& o, std::vector<LawFn>& laws) {
  const Term I = builtin("I");
  laws.push_back([o] {
    auto u = embedded(o.pair_nodes);
    const std::size_t n = u.trees.size();
    Check c("t covered by u iff t+ ->eta u+", universe("pairs of trees", o.pair_nodes, n * n),
            o.keep_counterexamples);
    for (std::size_t i = 0; i < n; ++i) {
      auto steps = eta_reducts_one_step(u.terms[i]);
      for (std::size_t j = 0; j < n; ++j) {
        c.expect(covers(u.trees[i], u.trees[j]) == contains(steps, u.terms[j]),
                 [&] { return show2(u.trees[i], u.trees[j]); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    auto u = embedded(o.pair_nodes);
    const std::size_t n = u.trees.size();
    Check c("t <= u iff t+ ->>eta u+", universe("pairs of trees", o.pair_nodes, n * n),
            o.keep_counterexamples);
    for (std::size_t i = 0; i < n; ++i) {
      auto reach = eta_closure(u.terms[i]);
      for (std::size_t j = 0; j < n; ++j) {
        c.expect(natural_leq(u.trees[i], u.trees[j]) == contains(reach, u.terms[j]),
                 [&] { return show2(u.trees[i], u.trees[j]); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    auto u = embedded(o.pair_nodes);
    const std::size_t n = u.trees.size();
    Check c("(tu)+ = t+ o u+ modulo beta", universe("pairs of trees", o.pair_nodes, n * n),
            o.keep_counterexamples);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto nf = normalize(compose(u.terms[i], u.terms[j]), ReductionMode::Beta, kDefaultFuel);
        bool ok = nf && alpha_eq(*nf, fpt_to_term(product(u.trees[i], u.trees[j])));
        c.expect(ok, [&] { return show2(u.trees[i], u.trees[j]); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    auto u = embedded(o.pair_nodes);
    const std::size_t n = u.trees.size();
    Check c("sigma(t, u) iff beta-eta |- t+ = u+", universe("pairs of trees", o.pair_nodes, n * n),
            o.keep_counterexamples);
    const TheoryId be = TheoryId::parse("beta-eta");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Verdict v = equal(be, u.terms[i], u.terms[j]);
        bool ok = v.outcome != Verdict::Outcome::Unknown &&
                  v.yes() == sigma_equiv(u.trees[i], u.trees[j]);
        c.expect(ok, [&] { return show2(u.trees[i], u.trees[j]); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    auto u = embedded(o.max_nodes);
    Check c("term_to_fpt(t+) = t", universe("trees", o.max_nodes, u.trees.size()),
            o.keep_counterexamples);
    for (std::size_t i = 0; i < u.trees.size(); ++i) {
      auto v = term_to_fpt(u.terms[i], kDefaultFuel);
      c.expect(v.yes() && *v.tree == u.trees[i], [&] { return show(u.trees[i]); });
    }
    return c.done();
  });
  laws.push_back([o, I] {
    auto u = embedded(o.max_nodes);
    Check c("invert_fhp(t+) is a beta-eta inverse", universe("trees", o.max_nodes, u.trees.size()),
            o.keep_counterexamples);
    for (std::size_t i = 0; i < u.trees.size(); ++i) {
      const Term& m = u.terms[i];
      auto inv = invert_fhp(m, kDefaultFuel);
      bool ok = false;
      if (inv) {
        auto l = normalize(compose(m, *inv), ReductionMode::BetaEta, kDefaultFuel);
        auto r = normalize(compose(*inv, m), ReductionMode::BetaEta, kDefaultFuel);
        ok = l && r && alpha_eq(*l, I) && alpha_eq(*r, I);
      }
      c.expect(ok, [&] { return show(u.trees[i]); });
    }
    return c.done();
  });
  laws.push_back([o, I] {
    auto u = embedded(o.max_nodes);
    // The FHP corpus plus a few non-FHP terms with and without β-nfs.
    std::vector<Term> corpus = u.terms;
    for (const char* extra : {"\\x. x", "(\\x. x) (\\y. y)", "\\x y. x", "\\x y. y x",
                              "\\f g x. f (g x)", "(\\x. x x) (\\y. y)"}) {
      corpus.push_back(Term::parse(extra));
    }
    corpus.push_back(compose(I, I));
    Check c("beta-invertible iff the beta-nf is I", universe("FHP terms plus extras", o.max_nodes,
                                                             corpus.size()),
            o.keep_counterexamples);
    const TheoryId beta = TheoryId::parse("beta");
    for (const auto& m : corpus) {
      auto nf = normalize(m, ReductionMode::Beta, kDefaultFuel);
      bool is_i = nf && alpha_eq(*nf, I);
      c.expect(invertible_in(beta, m).yes() == is_i, [&] { return m.to_string(); });
    }
    return c.done();
  });
  laws.push_back([o, I] {
    auto u = embedded(o.max_nodes);
    Check c("t idempotent iff beta-eta-nf(t+) = I", universe("trees", o.max_nodes, u.trees.size()),
            o.keep_counterexamples);
    for (std::size_t i = 0; i < u.trees.size(); ++i) {
      auto nf = normalize(u.terms[i], ReductionMode::BetaEta, kDefaultFuel);
      c.expect(nf && alpha_eq(*nf, I) == is_idempotent(u.trees[i]),
               [&] { return show(u.trees[i]); });
    }
    return c.done();
  });
  laws.push_back([o] {
    auto u = embedded(o.max_nodes);
    Check c("beta-eta-nf(t+) = max_rep(t)+", universe("trees", o.max_nodes, u.trees.size()),
            o.keep_counterexamples);
    for (std::size_t i = 0; i < u.trees.size(); ++i) {
      auto nf = normalize(u.terms[i], ReductionMode::BetaEta, kDefaultFuel);
      c.expect(nf && alpha_eq(*nf, fpt_to_term(max_rep(u.trees[i]))),
               [&] { return show(u.trees[i]); });
    }
    return c.done();
  });
  laws.push_back([o] {
    auto u = embedded(o.max_nodes);
    Check c("beta-eta-invertible iff hplus-invertible",
            universe("trees", o.max_nodes, u.trees.size()), o.keep_counterexamples);
    const TheoryId be = TheoryId::parse("beta-eta"), hp = TheoryId::parse("hplus");
    std::vector<Term> corpus = u.terms;
    for (const char* extra : {"\\x y. x", "\\x y. y x", "\\x y. x y y", "\\x. x x"}) {
      corpus.push_back(Term::parse(extra));
    }
    for (const auto& m : corpus) {
      c.expect(invertible_in(be, m).yes() == invertible_in(hp, m).yes(),
               [&] { return m.to_string(); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const std::size_t n = std::min<std::size_t>(o.ternary_nodes, 4);
    auto u = embedded(n);
    const std::size_t k = u.trees.size();
    Check c("theories on FHPs: hplus = beta-eta, beta within beta-eta and bohm",
            universe("pairs of trees", n, k * k), o.keep_counterexamples);
    const TheoryId beta = TheoryId::parse("beta"), be = TheoryId::parse("beta-eta"),
                   hp = TheoryId::parse("hplus"), hs = TheoryId::parse("hstar"),
                   bohm = TheoryId::parse("bohm:8");
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const Term &a = u.terms[i], &b = u.terms[j];
        Verdict vb = equal(beta, a, b), vbe = equal(be, a, b), vhp = equal(hp, a, b),
                vhs = equal(hs, a, b), vbt = equal(bohm, a, b);
        bool ok = vbe.outcome == vhp.outcome && vbe.outcome == vhs.outcome &&
                  (!vb.yes() || (vbe.yes() && vbt.yes()));
        c.expect(ok, [&] { return show2(u.trees[i], u.trees[j]); });
      }
    }
    return c.done();
  });
  laws.push_back([o, I] {
    auto u = embedded(o.max_nodes);
    Check c("hstar equates idempotents with I", universe("trees", o.max_nodes, u.trees.size()),
            o.keep_counterexamples);
    const TheoryId hs = TheoryId::parse("hstar");
    for (std::size_t i = 0; i < u.trees.size(); ++i) {
      if (!is_idempotent(u.trees[i])) continue;
      c.expect(equal(hs, u.terms[i], I).yes(), [&] { return show(u.trees[i]); });
    }
    c.expect(equal(hs, builtin("J"), I).yes(), [] { return std::string("J"); });
    return c.done();
  });
  laws.push_back([o] {
    const std::size_t n = std::min<std::size_t>(o.ternary_nodes, 4);
    auto u = embedded(n);
    Check c("rpt_to_term(from_fpt t) =beta-eta t+", universe("trees", n, u.trees.size()),
            o.keep_counterexamples);
    for (std::size_t i = 0; i < u.trees.size(); ++i) {
      auto a = normalize(rpt_to_term(from_fpt(u.trees[i])), ReductionMode::BetaEta, kDefaultFuel);
      auto b = normalize(u.terms[i], ReductionMode::BetaEta, kDefaultFuel);
      c.expect(a && b && alpha_eq(*a, *b), [&] { return show(u.trees[i]); });
    }
    return c.done();
  });
  laws.push_back([o, I] {
    Check c("eta families are idempotent expansions of I", "wide and deep, n <= 5",
            o.keep_counterexamples);
    for (std::size_t n = 0; n <= 5; ++n) {
      for (EtaFamily k : {EtaFamily::Wide, EtaFamily::Deep}) {
        Fpt t = eta_family(k, n);
        auto nf = normalize(fpt_to_term(t), ReductionMode::BetaEta, kDefaultFuel);
        c.expect(is_idempotent(t) && nf && alpha_eq(*nf, I), [&] { return show(t); });
      }
    }
    return c.done();
  });
}

// ---------------------------------------------------------------------------
// Rational trees.

std::vector<std::pair<std::size_t, std::size_t>> corpus_pairs(std::size_t n, std::size_t limit,
                                                              std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n * n <= limit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out.emplace_back(i, j);
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < limit; ++k) out.emplace_back(pick(rng), pick(rng));
  return out;
}

std::string corpus_universe(const std::string& what, std::size_t states, std::size_t corpus,
                            std::size_t checked) {
  return what + " from the " + std::to_string(states) + "-state corpus (" +
         std::to_string(corpus) + " machines, " + std::to_string(checked) + " cases)";
}

void rational_laws(const LawOptions& o, std::vector<LawFn>& laws) {
  laws.push_back([o] {
    const std::size_t n = std::min<std::size_t>(o.ternary_nodes, 4);
    const Trees& u = enumerate_fpt(n);
    Check c("r_product, r_leq and r_leq' match the finite operations",
            universe("pairs of trees", n, u.size() * u.size()), o.keep_counterexamples);
    for (const auto& t : u) {
      for (const auto& v : u) {
        const bool leq = natural_leq(t, v);
        bool ok = bisim_equal(r_product(from_fpt(t), from_fpt(v)), from_fpt(product(t, v))) &&
                  r_leq(from_fpt(t), from_fpt(v), IdemClass::E) == leq &&
                  r_leq(from_fpt(t), from_fpt(v), IdemClass::EPrime) == leq;
        c.expect(ok, [&] { return show2(t, v); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    const std::size_t n = std::min<std::size_t>(o.pair_nodes, 5);
    const Trees& u = enumerate_fpt(n);
    Check c("r_star, r_max_rep and to_fpt match the finite operations",
            universe("trees", n, u.size()), o.keep_counterexamples);
    for (const auto& t : u) {
      Rpt r = from_fpt(t);
      bool ok = bisim_equal(r_star(r), from_fpt(star(t))) &&
                bisim_equal(r_max_rep(r, IdemClass::E), from_fpt(max_rep(t))) &&
                bisim_equal(r_max_rep(r, IdemClass::EPrime), from_fpt(max_rep(t))) &&
                to_fpt(r) == std::optional<Fpt>(t);
      c.expect(ok, [&] { return show(t); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const Trees& u = enumerate_fpt(o.pair_nodes);
    Check c("sigma and sigma' coincide on finite trees",
            universe("pairs of trees", o.pair_nodes, u.size() * u.size()),
            o.keep_counterexamples);
    std::vector<Rpt> me, mp;
    for (const auto& t : u) {
      me.push_back(r_max_rep(from_fpt(t), IdemClass::E));
      mp.push_back(r_max_rep(from_fpt(t), IdemClass::EPrime));
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = 0; j < u.size(); ++j) {
        c.expect(bisim_equal(me[i], me[j]) == bisim_equal(mp[i], mp[j]),
                 [&] { return show2(u[i], u[j]); });
      }
    }
    return c.done();
  });
  laws.push_back([o] {
    Check c("J presentations", "looped, unrolled and leaf machines", o.keep_counterexamples);
    Rpt j = j_machine();
    Rpt unrolled({Rpt::State{Perm({1}), {1}}, Rpt::State{Perm({1}), {0}}}, 0);
    c.expect(bisim_equal(j, unrolled), [] { return std::string("looped vs unrolled"); });
    c.expect(!bisim_equal(j, Rpt::leaf()), [] { return std::string("J vs leaf"); });
    c.expect(r_sigma_equiv(j, Rpt::leaf(), IdemClass::E), [] { return std::string("sigma"); });
    c.expect(!r_sigma_equiv(j, Rpt::leaf(), IdemClass::EPrime),
             [] { return std::string("sigma'"); });
    c.expect(r_leq(j, Rpt::leaf(), IdemClass::E) && !r_leq(j, Rpt::leaf(), IdemClass::EPrime),
             [] { return std::string("orders"); });
    return c.done();
  });

  // Unary corpus laws.
  laws.push_back([o] {
    const auto corpus = rational_corpus(o.rational_states);
    Check c("rational: (r*)* ~ r, rr*r ~ r, max_rep' keeps infinity",
            corpus_universe("machines", o.rational_states, corpus.size(), corpus.size()),
            o.keep_counterexamples);
    for (const auto& r : corpus) {
      Rpt s = r_star(r);
      bool ok = bisim_equal(r_star(s), r) && bisim_equal(r_product(r_product(r, s), r), r) &&
                bisim_equal(r_product(r_product(s, r), s), s) &&
                in_idem_class(r_product(r, s), IdemClass::E);
      if (!is_finite(r)) ok = ok && !is_finite(r_max_rep(r, IdemClass::EPrime));
      ok = ok && r_leq(r, r_max_rep(r, IdemClass::E), IdemClass::E) &&
           r_leq(r, r_max_rep(r, IdemClass::EPrime), IdemClass::EPrime);
      c.expect(ok, [&] { return show_rpt(r); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const auto corpus = rational_corpus(o.rational_states);
    auto pairs = corpus_pairs(corpus.size(), o.rational_pair_limit, o.seed);
    Check c("rational: (rs)* ~ s*r*",
            corpus_universe("pairs", o.rational_states, corpus.size(), pairs.size()),
            o.keep_counterexamples);
    std::vector<Rpt> stars;
    for (const auto& r : corpus) stars.push_back(r_star(r));
    for (auto [i, j] : pairs) {
      c.expect(bisim_equal(r_star(r_product(corpus[i], corpus[j])),
                           r_product(stars[j], stars[i])),
               [&] { return show_rpt(corpus[i]) + " / " + show_rpt(corpus[j]); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const auto corpus = rational_corpus(o.rational_states);
    std::vector<Rpt> idem;
    std::set<std::string> seen;
    for (const auto& r : corpus) {
      Rpt e = r_product(r, r_star(r));
      if (seen.insert(e.to_json()).second) idem.push_back(e);
    }
    auto pairs = corpus_pairs(idem.size(), o.rational_pair_limit, o.seed);
    Check c("rational: idempotents rr* commute",
            corpus_universe("pairs of idempotents", o.rational_states, corpus.size(),
                            pairs.size()),
            o.keep_counterexamples);
    for (auto [i, j] : pairs) {
      c.expect(bisim_equal(r_product(idem[i], idem[j]), r_product(idem[j], idem[i])),
               [&] { return show_rpt(idem[i]) + " / " + show_rpt(idem[j]); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const auto corpus = rational_corpus(o.rational_states);
    auto pairs = corpus_pairs(corpus.size(), o.rational_pair_limit, o.seed + 1);
    Check c("rational: order and sigma inclusions",
            corpus_universe("pairs", o.rational_states, corpus.size(), pairs.size()),
            o.keep_counterexamples);
    std::vector<Rpt> me, mp;
    std::vector<bool> in_ep;
    for (const auto& r : corpus) {
      me.push_back(r_max_rep(r, IdemClass::E));
      mp.push_back(r_max_rep(r, IdemClass::EPrime));
      in_ep.push_back(in_idem_class(r, IdemClass::EPrime));
    }
    for (auto [i, j] : pairs) {
      const Rpt &f = corpus[i], &r = corpus[j];
      const bool leq_p = r_leq(f, r, IdemClass::EPrime);
      bool ok = !leq_p || r_leq(f, r, IdemClass::E);                  // <=' within <=
      ok = ok && (!(in_ep[i] && leq_p) || in_ep[j]);                   // E'-unitarity
      ok = ok && (!bisim_equal(mp[i], mp[j]) || bisim_equal(me[i], me[j]));  // sigma' in sigma
      c.expect(ok, [&] { return show_rpt(f) + " / " + show_rpt(r); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const auto corpus = rational_corpus(o.rational_states);
    auto pairs = corpus_pairs(corpus.size(), o.rational_pair_limit / 4, o.seed + 2);
    Check c("rational: product commutes with observation",
            corpus_universe("pairs at depths 0..3", o.rational_states, corpus.size(),
                            pairs.size()),
            o.keep_counterexamples);
    for (auto [i, j] : pairs) {
      const Rpt &r = corpus[i], &s = corpus[j];
      Rpt rs = r_product(r, s);
      bool ok = true;
      for (std::size_t d = 0; d <= 3 && ok; ++d) {
        ok = unfold_to_depth(rs, d) ==
             truncate(partial_product(unfold_to_depth(r, d + 1), unfold_to_depth(s, d + 1)), d);
      }
      c.expect(ok, [&] { return show_rpt(r) + " / " + show_rpt(s); });
    }
    return c.done();
  });
  laws.push_back([o] {
    const auto corpus = rational_corpus(o.rational_states);
    Check c("rational: common lower bounds under <='", "", o.keep_counterexamples);
    // For each v, the corpus members below it; every pair of those has a
    // witness below both.
    std::size_t below_total = 0;
    std::mt19937_64 rng(o.seed + 3);
    const std::size_t per_v = 12;
    for (const auto& v : corpus) {
      std::vector<std::size_t> below;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (r_leq(corpus[i], v, IdemClass::EPrime)) below.push_back(i);
      }
      below_total += below.size();
      if (below.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, below.size() - 1);
      for (std::size_t k = 0; k < per_v; ++k) {
        const Rpt& t = corpus[below[pick(rng)]];
        const Rpt& u = corpus[below[pick(rng)]];
        Rpt w = r_common_lower_bound(t, u, v);
        c.expect(r_leq(w, t, IdemClass::EPrime) && r_leq(w, u, IdemClass::EPrime),
                 [&] { return show_rpt(t) + " / " + show_rpt(u) + " / " + show_rpt(v); });
      }
    }
    LawReport r = c.done();
    r.universe = corpus_universe("triples t, u <=' v", o.rational_states, corpus.size(),
                                 r.checked) +
                 ", " + std::to_string(below_total) + " related pairs";
    return r;
  });
  laws.push_back([o] {
    const auto all = rational_corpus(std::min<std::size_t>(o.rational_states, 2));
    Check c("rpt_to_term realizes the unfolding",
            corpus_universe("machines at depth 4", std::min<std::size_t>(o.rational_states, 2),
                            all.size(), all.size()),
            o.keep_counterexamples);
    for (const auto& r : all) {
      c.expect(approx_matches(bohm_approx(rpt_to_term(r), 4, kDefaultFuel),
                              unfold_to_depth(r, 4)),
               [&] { return show_rpt(r); });
    }
    return c.done();
  });
}

}  // namespace

std::vector<LawReport> law_suite(const LawOptions& opts) {
  if (opts.max_nodes == 0) throw PreconditionError("law_suite needs max_nodes >= 1");
  LawOptions o = opts;
  o.pair_nodes = std::min(o.pair_nodes, o.max_nodes);
  o.ternary_nodes = std::min(o.ternary_nodes, o.max_nodes);

  std::vector<LawFn> laws;
  inverse_monoid_laws(o, laws);
  order_laws(o, laws);
  algebra_laws(o, laws);
  if (o.bridge_laws) bridge_laws(o, laws);
  if (o.rational_laws) rational_laws(o, laws);

  std::vector<LawReport> reports(laws.size());
  const std::size_t jobs = std::max<std::size_t>(1, o.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < laws.size(); ++i) reports[i] = laws[i]();
  } else {
    // Static round-robin shards; each worker runs its laws in order.
    std::vector<std::future<void>> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < laws.size(); i += jobs) reports[i] = laws[i]();
      }));
    }
    for (auto& f : workers) f.get();
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const LawReport& a, const LawReport& b) { return a.name < b.name; });
  return reports;
}

bool all_passed(const std::vector<LawReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const LawReport& r) { return r.passed(); });
}

std::string reports_to_text(const std::vector<LawReport>& reports) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << "  [" << r.universe << ", "
        << r.checked << " checks";
    if (!r.passed()) out << ", " << r.failures << " counterexamples";
    out << "]\n";
    for (const auto& c : r.counterexamples) out << "    " << c << "\n";
    if (!r.passed()) ++failed;
  }
  out << (failed == 0 ? "all " + std::to_string(reports.size()) + " laws pass"
                      : std::to_string(failed) + " of " + std::to_string(reports.size()) +
                            " laws fail")
      << "\n";
  return out.str();
}

std::string reports_to_json(const std::vector<LawReport>& reports) {
  nlohmann::ordered_json doc;
  doc["passed"] = all_passed(reports);
  nlohmann::ordered_json laws = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    laws.push_back({{"name", r.name},
                    {"universe", r.universe},
                    {"checked", r.checked},
                    {"failures", r.failures},
                    {"passed", r.passed()},
                    {"counterexamples", r.counterexamples}});
  }
  doc["laws"] = std::move(laws);
  return doc.dump(2) + "\n";
}

}  // namespace ptlab
