#include <doctest.h>

#include "ptlab/bridge.hpp"
#include "ptlab/error.hpp"
#include "ptlab/lambda.hpp"

using namespace ptlab;

namespace {

Term P(const char* s) { return Term::parse(s); }
Fpt T(const char* s) { return Fpt::parse(s); }

// The embedding written literally, with closed child terms applied to the
// permuted variables and no reduction performed.
Term literal_embedding(const Fpt& t) {
  const std::size_t n = t.arity();
  std::vector<Term> args;
  for (std::size_t i = 1; i <= n; ++i) {
    // x_j sits at de Bruijn index n - j under the n inner binders.
    args.push_back(Term::app(literal_embedding(t.children()[i - 1]), Term::var(n - t.label()(i))));
  }
  std::vector<std::string> hints{"x"};
  for (std::size_t i = 1; i <= n; ++i) hints.push_back("x" + std::to_string(i));
  return Term::lams(hints, Term::apps(Term::var(n), args));
}

bool beta_eta_is_identity(const Term& m) {
  return normalize(m, ReductionMode::BetaEta, 100000) == std::optional<Term>(builtin("I"));
}

}  // namespace

TEST_CASE("fpt_to_term") {
  CHECK(fpt_to_term(Fpt::leaf()) == builtin("I"));
  CHECK(fpt_to_term(T("([1]; *)")) == P("\\x x1. x x1"));
  CHECK(fpt_to_term(T("([2 1]; *, *)")) == P("\\x x1 x2. x x2 x1"));
  CHECK(fpt_to_term(T("([2 1]; *, *)")).to_string() == "\\x x1 x2. x x2 x1");
  for (const auto& t : enumerate_fpt(5)) {
    const Term m = fpt_to_term(t);
    CHECK(is_beta_normal(m));
    CHECK(normalize(literal_embedding(t), ReductionMode::Beta, 100000) == std::optional<Term>(m));
  }
}

TEST_CASE("term_to_fpt") {
  auto flip = term_to_fpt(P("\\x y z. x z y"), 1000);
  REQUIRE(flip.yes());
  CHECK(*flip.tree == T("([2 1]; *, *)"));
  auto k = term_to_fpt(P("\\x y. x"), 1000);
  CHECK(k.outcome == FhpVerdict::Outcome::No);
  CHECK_FALSE(k.reason.empty());
  CHECK(term_to_fpt(P("(\\x. x x) (\\x. x x)"), 1000).outcome == FhpVerdict::Outcome::Unknown);
  CHECK(term_to_fpt(P("\\x y. y x"), 1000).outcome == FhpVerdict::Outcome::No);
  CHECK(term_to_fpt(P("\\x y. x y y"), 1000).outcome == FhpVerdict::Outcome::No);
  // Redexes are fine as long as the normal form is in the grammar.
  auto redex = term_to_fpt(compose(P("\\x y z. x z y"), P("\\x y z. x z y")), 1000);
  REQUIRE(redex.yes());
  CHECK(*redex.tree == T("([1 2]; *, *)"));
  for (const auto& t : enumerate_fpt(6)) {
    auto v = term_to_fpt(fpt_to_term(t), 10000);
    REQUIRE(v.yes());
    CHECK(*v.tree == t);
  }
}

TEST_CASE("hp_certificate") {
  auto j = hp_certificate(builtin("J"), 6, 10000);
  REQUIRE(j.has_value());
  CHECK(j->depth == 6);
  CHECK(truncate(j->tree, 6) == unfold_to_depth(j_machine(), 6));
  CHECK_FALSE(hp_certificate(P("\\x y. y x"), 3, 1000).has_value());
  for (std::size_t d = 1; d <= 5; ++d) CHECK(hp_certificate(builtin("I"), d, 100).has_value());
  CHECK_THROWS_AS(hp_certificate(builtin("I"), 0, 100), PreconditionError);

  auto omega = hp_check(Term::app(P("\\x y. x y"), P("(\\x. x x) (\\x. x x)")), 3, 1000);
  CHECK_FALSE(omega.certificate.has_value());
  CHECK_FALSE(omega.determinate_violation);
  auto wrong = hp_check(P("\\x y. y x"), 3, 1000);
  CHECK(wrong.determinate_violation);
}

TEST_CASE("invert_fhp") {
  const Term flip = P("\\x y z. x z y");
  CHECK(invert_fhp(flip, 1000) == std::optional<Term>(flip));
  auto one = invert_fhp(builtin("One"), 1000);
  REQUIRE(one.has_value());
  CHECK(beta_eta_is_identity(compose(builtin("One"), *one)));
  CHECK(beta_eta_is_identity(compose(*one, builtin("One"))));
  CHECK_FALSE(invert_fhp(P("\\x y. x"), 1000).has_value());
  for (const auto& t : enumerate_fpt(5)) {
    const Term m = fpt_to_term(t);
    auto n = invert_fhp(m, 10000);
    REQUIRE(n.has_value());
    CHECK(beta_eta_is_identity(compose(m, *n)));
    CHECK(beta_eta_is_identity(compose(*n, m)));
  }
}

TEST_CASE("eta families") {
  CHECK(eta_family(EtaFamily::Wide, 0) == Fpt::leaf());
  CHECK(eta_family(EtaFamily::Deep, 0) == Fpt::leaf());
  CHECK(eta_family(EtaFamily::Deep, 2) == T("([1]; ([1]; *))"));
  CHECK(fpt_to_term(eta_family(EtaFamily::Deep, 2)) == P("\\x z. x (\\z2. z z2)"));
  CHECK(eta_family(EtaFamily::Wide, 2) == T("([1 2]; *, *)"));
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(beta_eta_is_identity(fpt_to_term(eta_family(EtaFamily::Wide, n))));
    CHECK(beta_eta_is_identity(fpt_to_term(eta_family(EtaFamily::Deep, n))));
  }
}

TEST_CASE("covering and eta") {
  const auto& u = enumerate_fpt(4);
  for (const auto& t : u) {
    const auto steps = eta_reducts_one_step(fpt_to_term(t));
    for (const auto& s : u) {
      const bool one_step = std::find(steps.begin(), steps.end(), fpt_to_term(s)) != steps.end();
      CHECK(covers(t, s) == one_step);
    }
  }
}

TEST_CASE("rpt_to_term") {
  for (std::size_t d = 0; d <= 3; ++d) {
    CHECK(bohm_approx(rpt_to_term(Rpt::leaf()), d, 10000) == bohm_approx(builtin("I"), d, 10000));
  }
  const Term j = rpt_to_term(j_machine());
  for (std::size_t d = 0; d <= 6; ++d) {
    const BohmApprox a = bohm_approx(j, d, 100000);
    CHECK(a == bohm_approx(builtin("J"), d, 100000));
    CHECK(approx_matches(a, unfold_to_depth(j_machine(), d)));
  }
  for (const auto& t : enumerate_fpt(4)) {
    CHECK(normalize(rpt_to_term(from_fpt(t)), ReductionMode::BetaEta, 100000) ==
          normalize(fpt_to_term(t), ReductionMode::BetaEta, 100000));
  }
  const Rpt mixed = Rpt::from_json(
      R"({"root":"a","states":{"a":{"perm":[2,1],"children":["b","a"]},"b":{"perm":[],"children":[]}}})");
  for (std::size_t d = 0; d <= 4; ++d) {
    CHECK(approx_matches(bohm_approx(rpt_to_term(mixed), d, 100000), unfold_to_depth(mixed, d)));
  }
  CHECK_FALSE(approx_matches(bohm_approx(rpt_to_term(mixed), 3, 100000), unfold_to_depth(j_machine(), 3)));
}
