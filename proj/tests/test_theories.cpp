#include <doctest.h>

#include "ptlab/bridge.hpp"
#include "ptlab/error.hpp"
#include "ptlab/theories.hpp"

using namespace ptlab;

namespace {

Term P(const char* s) { return Term::parse(s); }
TheoryId Th(const char* s) { return TheoryId::parse(s); }

const Term kI = builtin("I");
const Term kOne = builtin("One");
const Term kFlip = Term::parse("\\x y z. x z y");

}  // namespace

TEST_CASE("theory names") {
  CHECK(Th("bohm:4").kind == TheoryId::Kind::Bohm);
  CHECK(Th("bohm:4").depth == 4);
  CHECK(Th("beta-eta").to_string() == "beta-eta");
  CHECK(Th("bohm:3").to_string() == "bohm:3");
  CHECK_THROWS_AS(Th("bohm:0"), ParseError);
  CHECK_THROWS_AS(Th("bohm"), ParseError);
  CHECK_THROWS_AS(Th("eta"), ParseError);
}

TEST_CASE("equal") {
  CHECK(equal(Th("beta-eta"), kOne, kI).yes());
  CHECK(equal(Th("beta"), kOne, kI).no());
  CHECK(equal(Th("bohm:4"), kOne, kI).no());
  CHECK(equal(Th("hstar"), j_machine(), Rpt::leaf()).yes());
  CHECK(equal(Th("hplus"), j_machine(), Rpt::leaf()).no());
  CHECK(equal(Th("hstar"), kOne, kI).yes());
  CHECK(equal(Th("hplus"), kOne, kI).yes());
  CHECK(equal(Th("hstar"), kFlip, kI).no());

  const Term omega = P("(\\x. x x) (\\x. x x)");
  CHECK(equal(Th("beta"), omega, kI).outcome == Verdict::Outcome::Unknown);
  auto b = equal(Th("bohm:3"), builtin("J"), rpt_to_term(j_machine()));
  CHECK(b.yes());
  CHECK(b.depth == std::optional<std::size_t>(3));
}

TEST_CASE("hstar and hplus on certified terms") {
  auto hs = equal(Th("hstar"), builtin("J"), kI);
  CHECK(hs.yes());
  CHECK(hs.depth.has_value());
  // Finiteness of the tree cannot be observed from an approximant.
  CHECK(equal(Th("hplus"), builtin("J"), kI).outcome == Verdict::Outcome::Unknown);
  CHECK(equal(Th("hstar"), builtin("J"), kFlip).no());
}

TEST_CASE("outside the input class") {
  CHECK_THROWS_AS(equal(Th("hstar"), P("\\x y. x"), kI), OutsideInputClass);
  // Invertibility is a membership question, so a grammar violation is a no.
  CHECK(invertible_in(Th("hstar"), P("\\x y. y x")).no());
  // An unsolvable term is a fuel problem, not a class violation.
  CHECK(equal(Th("hstar"), Term::app(kOne, P("(\\x. x x) (\\x. x x)")), kI).outcome ==
        Verdict::Outcome::Unknown);
}

TEST_CASE("invertible_in") {
  CHECK(invertible_in(Th("beta"), kOne).no());
  CHECK(invertible_in(Th("beta"), kI).yes());
  CHECK(invertible_in(Th("hplus"), kFlip).yes());
  CHECK(invertible_in(Th("beta-eta"), kFlip).yes());
  CHECK(invertible_in(Th("beta-eta"), P("\\x y. x")).no());
  auto j = invertible_in(Th("hstar"), builtin("J"));
  CHECK(j.yes());
  CHECK(j.depth.has_value());
  CHECK(invertible_in(Th("hstar"), j_machine()).yes());
  CHECK(invertible_in(Th("hplus"), j_machine()).no());
}

TEST_CASE("inverse_in") {
  CHECK(inverse_in(Th("beta-eta"), kFlip) == std::optional<Term>(kFlip));
  CHECK_FALSE(inverse_in(Th("beta"), kOne).has_value());
  CHECK(inverse_in(Th("beta"), kI) == std::optional<Term>(kI));

  auto j = inverse_in(Th("hstar"), j_machine());
  REQUIRE(j.has_value());
  CHECK(*j == rpt_to_term(j_machine()));
  CHECK(equal(Th("hstar"), compose(rpt_to_term(j_machine()), *j), kI).yes());
}

TEST_CASE("verdicts agree across theories on finite trees") {
  const auto& u = enumerate_fpt(4);
  for (const auto& t : u) {
    for (const auto& s : u) {
      const Term m = fpt_to_term(t), n = fpt_to_term(s);
      const auto be = equal(Th("beta-eta"), m, n);
      CHECK(be.outcome == equal(Th("hplus"), m, n).outcome);
      CHECK(be.outcome == equal(Th("hstar"), m, n).outcome);
      CHECK(be.yes() == sigma_equiv(t, s));
      if (equal(Th("beta"), m, n).yes()) {
        CHECK(be.yes());
        CHECK(equal(Th("bohm:3"), m, n).yes());
      }
    }
  }
}
