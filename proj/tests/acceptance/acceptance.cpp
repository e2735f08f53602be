// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Each check recomputes its evidence here instead of trusting the law suite,
// except where the criterion is stated in terms of the law suite itself.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ptlab/algebra.hpp"
#include "ptlab/bridge.hpp"
#include "ptlab/error.hpp"
#include "ptlab/fpt.hpp"
#include "ptlab/lambda.hpp"
#include "ptlab/rpt.hpp"
#include "ptlab/theories.hpp"

using namespace ptlab;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // the first few

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 3) failures.push_back(what);
    if (!ok) ++failed;
  }
};

const std::vector<LawReport>& default_suite() {
  static const std::vector<LawReport> reports = law_suite(LawOptions{});
  return reports;
}

const LawReport* find_law(const std::vector<LawReport>& reports, const std::string& name) {
  for (const auto& r : reports) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

void expect_law(Outcome& o, const std::string& name, const std::string& universe_marker) {
  const LawReport* r = find_law(default_suite(), name);
  o.expect(r != nullptr, "law missing: " + name);
  if (!r) return;
  o.expect(r->universe.find(universe_marker) != std::string::npos, name + ": universe is " + r->universe);
  o.expect(r->passed() && r->checked > 0, name + ": " + std::to_string(r->failures) + " counterexamples");
}

std::vector<Fpt> idempotents(std::size_t n) {
  std::vector<Fpt> out;
  for (const auto& t : enumerate_fpt(n)) {
    if (is_idempotent(t)) out.push_back(t);
  }
  return out;
}

std::string pair_str(const Fpt& t, const Fpt& u) { return t.to_string() + " / " + u.to_string(); }

bool is_I_beta_eta(const Term& m) {
  return normalize(m, ReductionMode::BetaEta, 100000) == std::optional<Term>(builtin("I"));
}

// 1. Inverse-monoid axioms through the law suite.
Outcome inverse_monoid() {
  Outcome o;
  for (const char* law : {"(t*)* = t", "uu*u = u", "(tu)* = u*t*", "ef = fe for idempotents"}) {
    expect_law(o, law, "<= 6 nodes");
  }
  expect_law(o, "(tu)v = t(uv)", "triples of trees <= 4 nodes");
  o.expect(all_passed(default_suite()), "the full law suite has failures");
  return o;
}

// 2. E-unitarity and the unique maximum of each upset.
Outcome e_unitary() {
  Outcome o;
  const auto& u = enumerate_fpt(6);
  for (const auto& t : u) {
    const Fpt m = max_rep(t);
    const auto up = upset(t);
    o.expect(std::find(up.begin(), up.end(), m) != up.end(), "max_rep outside upset: " + t.to_string());
    for (const auto& v : up) o.expect(natural_leq(v, m), "upset element above max_rep: " + pair_str(t, v));
    std::size_t maximal = 0;
    for (const auto& v : up) {
      bool top = true;
      for (const auto& w : up) top = top && (w == v || !natural_leq(v, w));
      maximal += top;
    }
    o.expect(maximal == 1, "upset without a unique maximum: " + t.to_string());
  }
  for (const auto& e : idempotents(6)) {
    for (const auto& v : u) {
      if (natural_leq(e, v)) o.expect(is_idempotent(v), "non-idempotent above idempotent: " + pair_str(e, v));
    }
  }
  return o;
}

// 3. Norm bounds, all four clauses.
Outcome norm_bounds() {
  Outcome o;
  const auto& u = enumerate_fpt(5);
  for (const auto& t : u) {
    o.expect(norm(t) == norm(star(t)), "norm(t*) differs: " + t.to_string());
    const std::size_t sk = norm(skeleton(t));
    o.expect(sk == norm(product(t, star(t))) && sk == norm(product(star(t), t)), "skeleton norm: " + t.to_string());
    for (const auto& s : u) {
      if (natural_leq(t, s) && t != s) o.expect(norm(s) < norm(t), "t < u without norm drop: " + pair_str(t, s));
      const std::size_t n = norm(product(t, s));
      o.expect(std::max(norm(t), norm(s)) <= n && n <= norm(t) + norm(s), "product norm bounds: " + pair_str(t, s));
    }
  }
  return o;
}

// 4. Covering against an exhaustive one-step eta search.
Outcome covering_eta() {
  Outcome o;
  const auto& u = enumerate_fpt(5);
  for (const auto& t : u) {
    const auto reducts = eta_reducts_one_step(fpt_to_term(t));
    for (const auto& s : u) {
      const Term target = fpt_to_term(s);
      const bool step = std::any_of(reducts.begin(), reducts.end(), [&](const Term& r) { return alpha_eq(r, target); });
      o.expect(covers(t, s) == step, "covering vs eta: " + pair_str(t, s));
    }
  }
  return o;
}

// 5. The embedding is a homomorphism.
Outcome embedding() {
  Outcome o;
  const auto& u = enumerate_fpt(5);
  for (const auto& t : u) {
    for (const auto& s : u) {
      auto nf = normalize(compose(fpt_to_term(t), fpt_to_term(s)), ReductionMode::Beta, 100000);
      o.expect(nf && alpha_eq(*nf, fpt_to_term(product(t, s))), "homomorphism: " + pair_str(t, s));
    }
  }
  return o;
}

// 6. sigma against beta-eta equality and the brute-force witness.
Outcome lambda_eta_sigma() {
  Outcome o;
  const auto& u = enumerate_fpt(5);
  const TheoryId be = TheoryId::parse("beta-eta");
  for (const auto& t : u) {
    for (const auto& s : u) {
      const bool sigma = sigma_equiv(t, s);
      o.expect(sigma == equal(be, fpt_to_term(t), fpt_to_term(s)).yes(), "sigma vs beta-eta: " + pair_str(t, s));
      o.expect(sigma == brute_sigma(t, s), "sigma vs brute_sigma: " + pair_str(t, s));
    }
  }
  return o;
}

// 7. Inversion of every FHP, and beta-invertibility only for I.
Outcome inversion() {
  Outcome o;
  std::vector<Term> corpus;
  for (const auto& t : enumerate_fpt(6)) {
    const Term m = fpt_to_term(t);
    corpus.push_back(m);
    auto n = invert_fhp(m, 100000);
    o.expect(n.has_value(), "no inverse: " + t.to_string());
    if (!n) continue;
    o.expect(is_I_beta_eta(compose(m, *n)) && is_I_beta_eta(compose(*n, m)), "inverse fails: " + t.to_string());
  }
  for (const char* extra : {"\\x y. x", "\\x y. y x", "(\\x. x x) (\\x. x x)", "(\\x. x) (\\y. y)",
                            "\\x. (\\y. y) x", "\\f x. f (f x)"}) {
    corpus.push_back(Term::parse(extra));
  }
  corpus.push_back(builtin("J"));
  corpus.push_back(compose(builtin("I"), builtin("I")));
  const TheoryId beta = TheoryId::parse("beta");
  for (const auto& m : corpus) {
    const bool yes = invertible_in(beta, m).yes();
    const auto nf = normalize(m, ReductionMode::Beta, kDefaultFuel);
    const bool is_I = nf && alpha_eq(*nf, builtin("I"));
    o.expect(yes == is_I, "beta-invertible vs nf I: " + m.to_string());
  }
  return o;
}

// 8. The J separation between hstar and hplus.
Outcome j_separation() {
  Outcome o;
  const Rpt J = j_machine();
  const Term I = builtin("I");
  o.expect(equal(TheoryId::parse("hstar"), J, I).yes(), "hstar does not equate J with I");
  o.expect(equal(TheoryId::parse("hplus"), J, I).no(), "hplus does not separate J from I");
  o.expect(equal(TheoryId::parse("hstar"), J, Rpt::leaf()).yes(), "hstar: J machine vs leaf machine");
  o.expect(equal(TheoryId::parse("hplus"), J, Rpt::leaf()).no(), "hplus: J machine vs leaf machine");
  o.expect(hp_certificate(builtin("J"), 8, 100000).has_value(), "no depth-8 certificate for J");
  for (std::size_t d = 0; d <= 6; ++d) {
    o.expect(approx_matches(bohm_approx(builtin("J"), d, kDefaultFuel), unfold_to_depth(J, d)),
             "approximant mismatch at depth " + std::to_string(d));
  }
  return o;
}

// 9. sigma and sigma' agree on finite trees.
Outcome sigma_prime_finite() {
  Outcome o;
  const auto& u = enumerate_fpt(5);
  std::vector<Rpt> machines;
  for (const auto& t : u) machines.push_back(from_fpt(t));
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      o.expect(r_sigma_equiv(machines[i], machines[j], IdemClass::E) ==
                   r_sigma_equiv(machines[i], machines[j], IdemClass::EPrime),
               "sigma vs sigma': " + pair_str(u[i], u[j]));
    }
  }
  return o;
}

// 10. Green's relations and maximal subgroups.
Outcome green() {
  Outcome o;
  for (const auto& t : enumerate_fpt(5)) {
    const auto h = green_class(GreenKind::H, t);
    const auto l = green_class(GreenKind::L, t);
    const auto r = green_class(GreenKind::R, t);
    o.expect(std::find(h.begin(), h.end(), t) != h.end(), "t outside its H-class: " + t.to_string());
    o.expect(!l.empty() && !r.empty(), "empty class: " + t.to_string());
    o.expect(std::count_if(h.begin(), h.end(), [](const Fpt& x) { return is_idempotent(x); }) <= 1,
             "two idempotents in H-class of " + t.to_string());
  }
  for (const auto& e : idempotents(5)) {
    const auto g = max_subgroup(e);
    const std::set<Fpt> gs(g.begin(), g.end());
    const auto h = green_class(GreenKind::H, e);
    o.expect(gs == std::set<Fpt>(h.begin(), h.end()), "max_subgroup differs from H: " + e.to_string());
    o.expect(gs.count(e) == 1, "identity missing: " + e.to_string());
    for (const auto& a : g) {
      o.expect(product(a, e) == a && product(e, a) == a, "e is not the identity for " + a.to_string());
      o.expect(gs.count(star(a)) == 1 && product(a, star(a)) == e, "no inverse in group: " + a.to_string());
      for (const auto& b : g) o.expect(gs.count(product(a, b)) == 1, "not closed: " + pair_str(a, b));
    }
  }
  return o;
}

// 11. The group of maximal elements.
Outcome maximal_group() {
  Outcome o;
  std::vector<Fpt> maximal;
  for (const auto& t : enumerate_fpt(5)) {
    if (max_rep(t) == t) maximal.push_back(t);
  }
  for (const auto& t : maximal) {
    o.expect(group_product_max(t, Fpt::leaf()) == t && group_product_max(Fpt::leaf(), t) == t,
             "unit fails: " + t.to_string());
    o.expect(group_product_max(t, max_rep(star(t))) == Fpt::leaf(), "inverse fails: " + t.to_string());
  }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, maximal.size() - 1);
  for (int i = 0; i < 20000; ++i) {
    const Fpt &a = maximal[pick(rng)], &b = maximal[pick(rng)], &c = maximal[pick(rng)];
    o.expect(group_product_max(group_product_max(a, b), c) == group_product_max(a, group_product_max(b, c)),
             "associativity: " + a.to_string() + " / " + b.to_string() + " / " + c.to_string());
  }
  return o;
}

// 12. Rational engine against the finite one, corpus laws, and J presentations.
Outcome rational_engine() {
  Outcome o;
  const auto& u = enumerate_fpt(4);
  for (const auto& t : u) {
    o.expect(bisim_equal(r_star(from_fpt(t)), from_fpt(star(t))), "r_star: " + t.to_string());
    o.expect(bisim_equal(r_max_rep(from_fpt(t), IdemClass::E), from_fpt(max_rep(t))), "r_max_rep: " + t.to_string());
    for (const auto& s : u) {
      o.expect(bisim_equal(r_product(from_fpt(t), from_fpt(s)), from_fpt(product(t, s))), "r_product: " + pair_str(t, s));
    }
  }
  std::size_t rational = 0;
  for (const auto& r : default_suite()) {
    if (r.name.rfind("rational:", 0) != 0) continue;
    ++rational;
    o.expect(r.passed() && r.universe.find("3-state corpus") != std::string::npos, r.name);
  }
  o.expect(rational >= 5, "rational laws missing from the suite");
  const Rpt unrolled({{Perm({1}), {1}}, {Perm({1}), {0}}}, 0);
  o.expect(bisim_equal(j_machine(), unrolled), "looped and unrolled J differ");
  o.expect(!bisim_equal(j_machine(), Rpt::leaf()), "J equals the leaf machine");
  return o;
}

// 13. The suite notices a product that skips label composition.
Outcome mutation() {
  Outcome o;
  LawOptions opts;
  opts.max_nodes = opts.pair_nodes = opts.ternary_nodes = 3;
  opts.product = product_skipping_composition;
  const auto reports = law_suite(opts);
  const LawReport* r = find_law(reports, "uu*u = u");
  o.expect(r != nullptr, "law missing");
  o.expect(r && !r->passed() && !r->counterexamples.empty(), "uu*u = u survived the mutation");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"inverse-monoid axioms", inverse_monoid},
      {"E-unitarity and unique maxima", e_unitary},
      {"norm bounds", norm_bounds},
      {"covering iff one eta step", covering_eta},
      {"embedding homomorphism", embedding},
      {"sigma iff beta-eta equality", lambda_eta_sigma},
      {"FHP inversion", inversion},
      {"J separates hstar from hplus", j_separation},
      {"sigma and sigma' on finite trees", sigma_prime_finite},
      {"Green's structure", green},
      {"group of maximal elements", maximal_group},
      {"rational-tree engine", rational_engine},
      {"mutation sensitivity", mutation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.failed == 0 && o.checks > 0;
    failed += !pass;
    std::printf("%s %2zu %s (%zu checks, %.1fs)\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.checks, secs);
    for (const auto& f : o.failures) std::printf("     %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
