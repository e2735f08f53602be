#include <doctest.h>

#include "ptlab/bridge.hpp"
#include "ptlab/error.hpp"
#include "ptlab/fpt.hpp"
#include "ptlab/lambda.hpp"
#include "ptlab/term.hpp"

using namespace ptlab;

namespace {

Term P(const char* s) { return Term::parse(s); }

const Term kOmega = Term::parse("(\\x. x x) (\\x. x x)");

// Rightmost-innermost: contract a redex only once both sides are normal.
std::optional<Term> step_innermost(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Free:
      return std::nullopt;
    case Term::Kind::Lam:
      if (auto b = step_innermost(t.body())) return Term::lam(t.name(), *b);
      return std::nullopt;
    case Term::Kind::App:
      if (auto a = step_innermost(t.arg())) return Term::app(t.fun(), *a);
      if (auto f = step_innermost(t.fun())) return Term::app(*f, t.arg());
      if (t.fun().kind() == Term::Kind::Lam) return instantiate(t.fun().body(), t.arg());
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Term> innermost_nf(Term t, std::size_t fuel) {
  for (std::size_t i = 0; i < fuel; ++i) {
    auto next = step_innermost(t);
    if (!next) return t;
    t = *next;
  }
  return std::nullopt;
}

// Drops every Unknown subtree to a cut, so approximants from different fuel
// budgets can be compared on what both determined.
bool agrees_where_determined(const BohmApprox& a, const BohmApprox& b) {
  using K = BohmApprox::Kind;
  if (a.kind == K::Unknown || b.kind == K::Unknown || a.kind == K::Cut || b.kind == K::Cut) return true;
  if (a.kind != b.kind) return false;
  if (a.kind == K::Bottom) return true;
  if (a.binders.size() != b.binders.size() || a.head_bound != b.head_bound) return false;
  if (a.head_bound ? a.head_level != b.head_level : a.head_name != b.head_name) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!agrees_where_determined(a.children[i], b.children[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(P("\\x.x") == builtin("I"));
  CHECK(P("\\x y z. x y z") == P("\\x.(\\y.(\\z.(x y) z))"));
  CHECK(P("λx. x") == builtin("I"));
  CHECK(P("\\x y z. x y z").to_string() == "\\x y z. x y z");
  CHECK(P("f (g x) (\\y. y)").to_string() == "f (g x) (\\y. y)");
  CHECK(P("(\\x. x) (\\y. y) z").to_string() == "(\\x. x) (\\y. y) z");
  for (const char* s : {"\\x. x", "\\x y. y x", "f (\\x. x) y", "\\f. (\\x. f (x x)) (\\x. f (x x))"}) {
    CHECK(P(s).to_string() == s);
    CHECK(P(P(s).to_string().c_str()) == P(s));
  }
  try {
    P("\\x. x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(P("\\. x"), ParseError);
  CHECK_THROWS_AS(P("(x"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
}

TEST_CASE("printing avoids capture") {
  // The inner binder shadows a free name and must be renamed.
  Term t = Term::lam("x", Term::app(Term::free("x"), Term::var(0)));
  CHECK(t.to_string() == "\\x_0. x x_0");
  CHECK(P(t.to_string().c_str()) == t);
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(P("\\x.x"), P("\\y.y")));
  CHECK_FALSE(alpha_eq(P("\\x y.x"), P("\\x y.y")));
  CHECK(alpha_eq(builtin("J"), builtin("J")));
  CHECK_FALSE(alpha_eq(P("\\x. y"), P("\\x. z")));
}

TEST_CASE("builtins") {
  CHECK(builtin("I") == P("\\x.x"));
  CHECK(builtin("One") == P("\\x y. x y"));
  CHECK(builtin("J") == Term::app(builtin("Y"), P("\\f g x. g (f x)")));
  CHECK(builtin("B") == P("\\f g x. f (g x)"));
  CHECK_THROWS_AS(builtin("K"), Error);
}

TEST_CASE("normalize") {
  CHECK_FALSE(normalize(kOmega, ReductionMode::Beta, 1000).has_value());
  CHECK_FALSE(normalize(kOmega, ReductionMode::BetaEta, 1000).has_value());
  CHECK(normalize(P("\\x y. x y"), ReductionMode::BetaEta, 100) == std::optional<Term>(builtin("I")));
  CHECK(normalize(P("\\x y. x y"), ReductionMode::Beta, 100) == std::optional<Term>(P("\\x y. x y")));
  const Term flip = P("\\x y z. x z y");
  CHECK(normalize(compose(flip, flip), ReductionMode::Beta, 1000) == std::optional<Term>(P("\\x y z. x y z")));
  CHECK(normalize(compose(builtin("I"), builtin("I")), ReductionMode::Beta, 100) ==
        std::optional<Term>(builtin("I")));
  CHECK(normalize(compose(builtin("I"), builtin("I")), ReductionMode::BetaEta, 100) ==
        std::optional<Term>(builtin("I")));
  // Normal order reaches the nf even with a divergent argument.
  CHECK(normalize(Term::app(P("\\x y. y"), kOmega), ReductionMode::Beta, 100) ==
        std::optional<Term>(builtin("I")));
  // eta needs the variable to be absent from the function part.
  CHECK(normalize(P("\\x. x x"), ReductionMode::BetaEta, 100) == std::optional<Term>(P("\\x. x x")));
  CHECK(normalize(P("\\x y z. x y z"), ReductionMode::BetaEta, 100) == std::optional<Term>(builtin("I")));
}

TEST_CASE("fuel and size limits") {
  // Self-replicating growth stops at the size cap instead of exhausting memory.
  Term grow = P("(\\x. x x x) (\\x. x x x)");
  CHECK_FALSE(normalize(grow, ReductionMode::Beta, 1000000).has_value());
  CHECK_FALSE(normalize(compose(P("\\x y z. x z y"), P("\\x y z. x z y")), ReductionMode::Beta, 1).has_value());
}

TEST_CASE("head_reduce") {
  auto i = head_reduce(builtin("I"), 10);
  REQUIRE(i.has_value());
  CHECK(i->binders.size() == 1);
  CHECK(i->head == Term::var(0));
  CHECK(i->args.empty());
  CHECK_FALSE(head_reduce(kOmega, 1000).has_value());
  auto y = head_reduce(builtin("Y"), 100);
  REQUIRE(y.has_value());
  CHECK(y->binders.size() == 1);
  CHECK(y->head == Term::var(0));
  CHECK(y->args.size() == 1);
  CHECK(head_reduce(P("\\x. (\\y. y) x z"), 10)->to_term() == P("\\x. x z"));
}

TEST_CASE("bohm_approx") {
  CHECK(bohm_approx(builtin("I"), 3, 100).to_string() == "\\x. x");
  CHECK(bohm_approx(kOmega, 3, 1000).kind == BohmApprox::Kind::Unknown);
  CHECK(bohm_approx(builtin("I"), 0, 100).kind == BohmApprox::Kind::Cut);
  const BohmApprox j2 = bohm_approx(builtin("J"), 2, 10000);
  CHECK(j2.binders.size() == 2);
  CHECK(j2.head_bound);
  CHECK(j2.head_level == 0);
  REQUIRE(j2.children.size() == 1);
  CHECK(j2.children[0].binders.size() == 1);
  CHECK(j2.children[0].head_level == 1);
  REQUIRE(j2.children[0].children.size() == 1);
  CHECK(j2.children[0].children[0].kind == BohmApprox::Kind::Cut);
  CHECK(approx_matches(j2, unfold_to_depth(j_machine(), 2)));
  CHECK(bohm_approx(P("\\x. x (\\y. y)"), 5, 100).determined());
  CHECK_FALSE(bohm_approx(Term::app(P("\\x y. x"), kOmega), 3, 1000).determined());
}

TEST_CASE("confluence against a rightmost-innermost reducer") {
  std::vector<Term> sample;
  const auto& trees = enumerate_fpt(4);
  for (const auto& t : trees) {
    for (const auto& u : trees) sample.push_back(compose(fpt_to_term(t), fpt_to_term(u)));
  }
  const Term B = builtin("B"), flip = P("\\x y. y x");
  sample.push_back(Term::apps(B, {B, B}));
  sample.push_back(Term::apps(B, {flip, flip}));
  sample.push_back(P("(\\x. x x) (\\y. y)"));
  sample.push_back(P("(\\f x. f (f x)) (\\f x. f (f x))"));
  sample.push_back(P("(\\n f x. n f (f x)) (\\f x. f (f x))"));
  sample.push_back(P("(\\x y. y) ((\\x. x) (\\z. z z))"));
  std::size_t compared = 0;
  for (const auto& t : sample) {
    auto a = normalize(t, ReductionMode::Beta, 10000);
    auto b = innermost_nf(t, 10000);
    if (a && b) {
      CHECK(*a == *b);
      ++compared;
    }
  }
  CHECK(compared == sample.size());
}

TEST_CASE("fixed point") {
  const Term f = Term::free("f");
  const Term yf = Term::app(builtin("Y"), f);
  const Term fyf = Term::app(f, yf);
  for (std::size_t d = 0; d <= 4; ++d) CHECK(bohm_approx(yf, d, 10000) == bohm_approx(fyf, d, 10000));
}

TEST_CASE("eta steps on beta normal forms stay beta normal") {
  for (const auto& t : enumerate_fpt(4)) {
    const Term m = fpt_to_term(t);
    REQUIRE(is_beta_normal(m));
    for (const auto& r : eta_reducts_one_step(m)) CHECK(is_beta_normal(r));
  }
  CHECK(eta_reducts_one_step(P("\\x y. x y")).size() == 1);
  CHECK(eta_reducts_one_step(P("\\x. x x")).empty());
}

TEST_CASE("approximants are monotone in fuel and depth") {
  const std::vector<Term> terms = {builtin("J"), Term::app(builtin("Y"), Term::free("f")),
                                   Term::app(P("\\x y. y x"), kOmega), rpt_to_term(j_machine())};
  for (const auto& t : terms) {
    for (std::size_t fuel : {10, 100, 1000}) {
      const BohmApprox lo = bohm_approx(t, 5, fuel), hi = bohm_approx(t, 5, fuel * 10);
      CHECK(agrees_where_determined(lo, hi));
      if (lo.determined()) CHECK(lo == hi);
    }
    for (std::size_t d = 0; d < 5; ++d) {
      CHECK(agrees_where_determined(bohm_approx(t, d, 10000), bohm_approx(t, d + 1, 10000)));
    }
  }
}

TEST_CASE("composition is associative modulo beta") {
  const auto& trees = enumerate_fpt(3);
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      for (const auto& c : trees) {
        const Term x = fpt_to_term(a), y = fpt_to_term(b), z = fpt_to_term(c);
        CHECK(normalize(compose(compose(x, y), z), ReductionMode::Beta, 10000) ==
              normalize(compose(x, compose(y, z)), ReductionMode::Beta, 10000));
      }
    }
  }
}
