#include <functional>

#include "ptlab/lambda.hpp"

namespace ptlab {

namespace {

// Remaining step budget; spend() also refuses oversized terms.
struct Budget {
  std::size_t steps;
  bool blown = false;

  bool spend(const Term& produced) {
    if (steps == 0 || produced.size() > kMaxTermSize) {
      blown = true;
      return false;
    }
    --steps;
    return true;
  }
};

// Head reduction to λ binders . head args; absent when the budget runs out.
std::optional<HeadNormalForm> hnf(Term t, Budget& budget) {
  std::vector<std::string> binders;
  std::vector<Term> spine;  // pending arguments, first argument last
  for (;;) {
    switch (t.kind()) {
      case Term::Kind::App:
        spine.push_back(t.arg());
        t = Term(t.fun());
        break;
      case Term::Kind::Lam:
        if (spine.empty()) {
          binders.push_back(t.name());
          t = Term(t.body());
        } else {
          Term next = instantiate(t.body(), spine.back());
          if (!budget.spend(next)) return std::nullopt;
          spine.pop_back();
          t = std::move(next);
        }
        break;
      case Term::Kind::Var:
      case Term::Kind::Free:
        return HeadNormalForm{std::move(binders), t, {spine.rbegin(), spine.rend()}};
    }
  }
}

std::optional<Term> beta_nf(const Term& t, Budget& budget) {
  auto h = hnf(t, budget);
  if (!h) return std::nullopt;
  for (auto& a : h->args) {
    auto n = beta_nf(a, budget);
    if (!n) return std::nullopt;
    a = std::move(*n);
  }
  return h->to_term();
}

// η-redex λ. M 0 with index 0 not occurring in M.
bool is_eta_redex(const Term& t) {
  if (t.kind() != Term::Kind::Lam) return false;
  const Term& b = t.body();
  return b.kind() == Term::Kind::App && b.arg().kind() == Term::Kind::Var &&
         b.arg().index() == 0 && !occurs(b.fun(), 0);
}

Term eta_contract(const Term& redex) { return shift(redex.body().fun(), -1); }

// Bottom-up: once the body is η-normal, at most one redex remains on top.
std::optional<Term> eta_nf(const Term& t, Budget& budget) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Free:
      return t;
    case Term::Kind::App: {
      auto f = eta_nf(t.fun(), budget);
      if (!f) return std::nullopt;
      auto a = eta_nf(t.arg(), budget);
      if (!a) return std::nullopt;
      return Term::app(std::move(*f), std::move(*a));
    }
    case Term::Kind::Lam: {
      auto b = eta_nf(t.body(), budget);
      if (!b) return std::nullopt;
      Term l = Term::lam(t.name(), std::move(*b));
      if (!is_eta_redex(l)) return l;
      Term r = eta_contract(l);
      if (!budget.spend(r)) return std::nullopt;
      return r;
    }
  }
  return t;
}

}  // namespace

Term HeadNormalForm::to_term() const { return Term::lams(binders, Term::apps(head, args)); }

std::optional<Term> normalize(const Term& t, ReductionMode mode, std::size_t fuel) {
  Budget budget{fuel};
  auto n = beta_nf(t, budget);
  if (!n || mode == ReductionMode::Beta) return n;
  return eta_nf(*n, budget);
}

std::optional<HeadNormalForm> head_reduce(const Term& t, std::size_t fuel) {
  Budget budget{fuel};
  return hnf(t, budget);
}

std::vector<Term> eta_reducts_one_step(const Term& t) {
  std::vector<Term> out;
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Free:
      break;
    case Term::Kind::Lam:
      if (is_eta_redex(t)) out.push_back(eta_contract(t));
      for (auto& b : eta_reducts_one_step(t.body())) out.push_back(Term::lam(t.name(), b));
      break;
    case Term::Kind::App:
      for (auto& f : eta_reducts_one_step(t.fun())) out.push_back(Term::app(f, t.arg()));
      for (auto& a : eta_reducts_one_step(t.arg())) out.push_back(Term::app(t.fun(), a));
      break;
  }
  return out;
}

bool is_beta_normal(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Free:
      return true;
    case Term::Kind::Lam:
      return is_beta_normal(t.body());
    case Term::Kind::App:
      return t.fun().kind() != Term::Kind::Lam && is_beta_normal(t.fun()) &&
             is_beta_normal(t.arg());
  }
  return true;
}

}  // namespace ptlab
