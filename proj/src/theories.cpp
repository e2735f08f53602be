#include "ptlab/theories.hpp"

#include <charconv>

#include "ptlab/bridge.hpp"
#include "ptlab/error.hpp"

namespace ptlab {

TheoryId TheoryId::parse(std::string_view token) {
  if (token == "beta") return {Kind::Beta, 0};
  if (token == "beta-eta") return {Kind::BetaEta, 0};
  if (token == "hstar") return {Kind::HStar, 0};
  if (token == "hplus") return {Kind::HPlus, 0};
  if (token.substr(0, 5) == "bohm:") {
    std::size_t d = 0;
    auto digits = token.substr(5);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("bad bohm depth '" + std::string(digits) + "'",
                       5 + static_cast<std::size_t>(end - digits.data()));
    }
    if (d == 0) throw ParseError("bohm depth must be at least 1", 5);
    return {Kind::Bohm, d};
  }
  throw ParseError("unknown theory '" + std::string(token) +
                       "' (expected beta, beta-eta, bohm:D, hstar or hplus)",
                   0);
}

std::string TheoryId::to_string() const {
  switch (kind) {
    case Kind::Beta:
      return "beta";
    case Kind::BetaEta:
      return "beta-eta";
    case Kind::Bohm:
      return "bohm:" + std::to_string(depth);
    case Kind::HStar:
      return "hstar";
    case Kind::HPlus:
      return "hplus";
  }
  return "?";
}

std::string to_string(Verdict::Outcome o) {
  switch (o) {
    case Verdict::Outcome::Yes:
      return "yes";
    case Verdict::Outcome::No:
      return "no";
    case Verdict::Outcome::Unknown:
      return "unknown";
  }
  return "?";
}

Term subject_term(const Subject& s) {
  if (const Term* t = std::get_if<Term>(&s)) return *t;
  return rpt_to_term(std::get<Rpt>(s));
}

namespace {

Verdict verdict(Verdict::Outcome o, std::string evidence,
                std::optional<std::size_t> depth = std::nullopt) {
  return Verdict{o, depth, std::move(evidence)};
}

// ---------------------------------------------------------------------------
// Partial trees: the observable part of an HP term.

enum class Tri { No, Maybe, Yes };

// All-identity membership: No on a visible non-identity label, Maybe when
// only cuts stand in the way.
Tri pt_idempotent(const PartialTree& t) {
  if (t.is_cut()) return Tri::Maybe;
  if (!t.label().is_identity()) return Tri::No;
  Tri acc = Tri::Yes;
  for (const auto& c : t.children()) {
    Tri r = pt_idempotent(c);
    if (r == Tri::No) return Tri::No;
    if (r == Tri::Maybe) acc = Tri::Maybe;
  }
  return acc;
}

bool has_cut(const PartialTree& t) {
  if (t.is_cut()) return true;
  for (const auto& c : t.children()) {
    if (has_cut(c)) return true;
  }
  return false;
}

Fpt partial_to_fpt(const PartialTree& t) {
  std::vector<Fpt> kids;
  for (const auto& c : t.children()) kids.push_back(partial_to_fpt(c));
  return Fpt::node(t.label(), std::move(kids));
}

// ---------------------------------------------------------------------------
// Tree presentations for the HP theories.

struct Presentation {
  std::optional<Rpt> full;
  std::optional<PartialTree> partial;  // certified to `depth`
  std::size_t depth = 0;
  std::string note;  // provenance, or why neither presentation exists
};

Presentation present(const Subject& s, const Limits& lim) {
  Presentation p;
  if (const Rpt* r = std::get_if<Rpt>(&s)) {
    p.full = *r;
    p.note = "rational tree";
    return p;
  }
  const Term& m = std::get<Term>(s);
  auto v = term_to_fpt(m, lim.fuel);
  if (v.yes()) {
    p.full = from_fpt(*v.tree);
    p.note = "FHP " + v.tree->to_string();
    return p;
  }
  if (v.outcome == FhpVerdict::Outcome::No) {
    throw OutsideInputClass(m.to_string() + " is not a hereditary permutation (" + v.reason + ")");
  }
  auto check = hp_check(m, lim.depth, lim.fuel);
  if (check.certificate) {
    const PartialTree& tree = check.certificate->tree;
    if (!has_cut(tree)) {
      Fpt t = partial_to_fpt(tree);
      p.full = from_fpt(t);
      p.note = "HP with finite Böhm tree " + t.to_string();
      return p;
    }
    p.partial = tree;
    p.depth = lim.depth;
    p.note = "HP certified to depth " + std::to_string(lim.depth) + ": " + tree.to_string();
    return p;
  }
  if (check.determinate_violation) {
    throw OutsideInputClass(m.to_string() + " is not a hereditary permutation (" +
                            check.violation + ")");
  }
  p.note = v.reason + "; certificate failed " + check.violation;
  return p;
}

std::string describe(const Rpt& r) {
  if (auto t = to_fpt(r)) return t->to_string();
  return r.to_json();
}

Verdict hp_equal(const TheoryId& th, const Subject& a, const Subject& b, const Limits& lim) {
  const IdemClass cls = th.kind == TheoryId::Kind::HStar ? IdemClass::E : IdemClass::EPrime;
  Presentation p = present(a, lim);
  Presentation q = present(b, lim);
  if (!p.full && !p.partial) return verdict(Verdict::Outcome::Unknown, "left: " + p.note);
  if (!q.full && !q.partial) return verdict(Verdict::Outcome::Unknown, "right: " + q.note);

  if (p.full && q.full) {
    Rpt mp = r_max_rep(*p.full, cls);
    Rpt mq = r_max_rep(*q.full, cls);
    bool same = bisim_equal(mp, mq);
    std::string ev = "left " + p.note + ", right " + q.note + "; maximal representatives (" +
                     to_string(cls) + "): " + describe(mp) + " and " + describe(mq);
    return verdict(same ? Verdict::Outcome::Yes : Verdict::Outcome::No, ev);
  }

  // Depth-qualified: compare the observable parts through the compatibility
  // test t* u, t u* idempotent.
  const std::size_t d = lim.depth;
  PartialTree l = p.partial ? *p.partial : unfold_to_depth(*p.full, d);
  PartialTree r = q.partial ? *q.partial : unfold_to_depth(*q.full, d);
  Tri x = pt_idempotent(partial_product(partial_star(l), r));
  Tri y = pt_idempotent(partial_product(l, partial_star(r)));
  std::string base = "left " + p.note + ", right " + q.note;
  if (x == Tri::No || y == Tri::No) {
    return verdict(Verdict::Outcome::No,
                   base + "; a product with the other's inverse shows a non-identity label", d);
  }
  if (cls == IdemClass::E) {
    return verdict(Verdict::Outcome::Yes,
                   base + "; compatible (only identity labels) down to depth " + std::to_string(d),
                   d);
  }
  return verdict(Verdict::Outcome::Unknown,
                 base + "; compatible down to depth " + std::to_string(d) +
                     ", but finiteness of the idempotent part is not observable",
                 d);
}

// Determinate mismatch wins over unknown nodes.
Tri approx_equal(const BohmApprox& a, const BohmApprox& b) {
  using K = BohmApprox::Kind;
  if (a.kind == K::Cut && b.kind == K::Cut) return Tri::Yes;
  if (a.kind == K::Unknown || b.kind == K::Unknown || a.kind == K::Bottom ||
      b.kind == K::Bottom) {
    return Tri::Maybe;
  }
  if (a.kind != b.kind) return Tri::No;
  if (a.binders.size() != b.binders.size() || a.head_bound != b.head_bound ||
      a.children.size() != b.children.size()) {
    return Tri::No;
  }
  if (a.head_bound ? a.head_level != b.head_level : a.head_name != b.head_name) return Tri::No;
  Tri acc = Tri::Yes;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    Tri r = approx_equal(a.children[i], b.children[i]);
    if (r == Tri::No) return Tri::No;
    if (r == Tri::Maybe) acc = Tri::Maybe;
  }
  return acc;
}

Verdict nf_equal(const Term& a, const Term& b, ReductionMode mode, const Limits& lim) {
  auto na = normalize(a, mode, lim.fuel);
  auto nb = normalize(b, mode, lim.fuel);
  if (!na || !nb) {
    return verdict(Verdict::Outcome::Unknown,
                   std::string(!na ? "left" : "right") + " has no normal form within " +
                       std::to_string(lim.fuel) + " steps");
  }
  bool same = alpha_eq(*na, *nb);
  return verdict(same ? Verdict::Outcome::Yes : Verdict::Outcome::No,
                 "normal forms " + na->to_string() + " and " + nb->to_string());
}

Verdict bohm_equal(const Term& a, const Term& b, std::size_t depth, const Limits& lim) {
  BohmApprox x = bohm_approx(a, depth, lim.fuel);
  BohmApprox y = bohm_approx(b, depth, lim.fuel);
  std::string ev = "approximants " + x.to_string() + " and " + y.to_string();
  switch (approx_equal(x, y)) {
    case Tri::Yes:
      return verdict(Verdict::Outcome::Yes, ev + " agree at depth " + std::to_string(depth),
                     depth);
    case Tri::No:
      return verdict(Verdict::Outcome::No, ev + " differ");
    case Tri::Maybe:
      break;
  }
  return verdict(Verdict::Outcome::Unknown, ev + " contain unknown nodes");
}

const Term& identity_term() {
  static const Term i = builtin("I");
  return i;
}

}  // namespace

Verdict equal(const TheoryId& th, const Subject& m, const Subject& n, const Limits& lim) {
  switch (th.kind) {
    case TheoryId::Kind::Beta:
      return nf_equal(subject_term(m), subject_term(n), ReductionMode::Beta, lim);
    case TheoryId::Kind::BetaEta:
      return nf_equal(subject_term(m), subject_term(n), ReductionMode::BetaEta, lim);
    case TheoryId::Kind::Bohm:
      return bohm_equal(subject_term(m), subject_term(n), th.depth, lim);
    case TheoryId::Kind::HStar:
    case TheoryId::Kind::HPlus:
      return hp_equal(th, m, n, lim);
  }
  return verdict(Verdict::Outcome::Unknown, "unsupported theory");
}

Verdict invertible_in(const TheoryId& th, const Subject& m, const Limits& lim) {
  switch (th.kind) {
    case TheoryId::Kind::Beta:
    case TheoryId::Kind::Bohm: {
      Verdict v = equal(th, m, identity_term(), lim);
      v.evidence = "equality with I: " + v.evidence;
      return v;
    }
    case TheoryId::Kind::BetaEta:
    case TheoryId::Kind::HPlus: {
      if (const Rpt* r = std::get_if<Rpt>(&m)) {
        if (auto t = to_fpt(*r)) return verdict(Verdict::Outcome::Yes, "FHP " + t->to_string());
        return verdict(Verdict::Outcome::No, "infinite tree, not a finite hereditary permutation");
      }
      auto f = term_to_fpt(std::get<Term>(m), lim.fuel);
      if (f.yes()) return verdict(Verdict::Outcome::Yes, "FHP " + f.tree->to_string());
      if (f.outcome == FhpVerdict::Outcome::No) {
        return verdict(Verdict::Outcome::No, "not a finite hereditary permutation: " + f.reason);
      }
      return verdict(Verdict::Outcome::Unknown, f.reason);
    }
    case TheoryId::Kind::HStar: {
      if (std::holds_alternative<Rpt>(m)) {
        return verdict(Verdict::Outcome::Yes, "rational tree: hereditary permutation");
      }
      const Term& t = std::get<Term>(m);
      auto f = term_to_fpt(t, lim.fuel);
      if (f.yes()) return verdict(Verdict::Outcome::Yes, "FHP " + f.tree->to_string());
      if (f.outcome == FhpVerdict::Outcome::No) {
        return verdict(Verdict::Outcome::No, "normal form is not a hereditary permutation: " +
                                                 f.reason);
      }
      auto c = hp_check(t, lim.depth, lim.fuel);
      if (c.certificate) {
        return verdict(Verdict::Outcome::Yes,
                       "HP certificate to depth " + std::to_string(lim.depth) + ": " +
                           c.certificate->tree.to_string(),
                       lim.depth);
      }
      if (c.determinate_violation) {
        return verdict(Verdict::Outcome::No, "not a hereditary permutation: " + c.violation);
      }
      return verdict(Verdict::Outcome::Unknown, c.violation);
    }
  }
  return verdict(Verdict::Outcome::Unknown, "unsupported theory");
}

std::optional<Term> inverse_in(const TheoryId& th, const Subject& m, const Limits& lim) {
  if (!invertible_in(th, m, lim).yes()) return std::nullopt;
  const Term mt = subject_term(m);

  std::optional<Term> candidate;
  switch (th.kind) {
    case TheoryId::Kind::Beta:
    case TheoryId::Kind::Bohm:
      candidate = identity_term();
      break;
    case TheoryId::Kind::BetaEta:
    case TheoryId::Kind::HPlus:
    case TheoryId::Kind::HStar:
      if (const Rpt* r = std::get_if<Rpt>(&m)) {
        Rpt inv = r_star(*r);
        if (th.kind == TheoryId::Kind::HStar) {
          // Both compositions must be sigma-related to the unit.
          if (!r_sigma_equiv(r_product(*r, inv), Rpt::leaf(), IdemClass::E) ||
              !r_sigma_equiv(r_product(inv, *r), Rpt::leaf(), IdemClass::E)) {
            return std::nullopt;
          }
        }
        auto fin = to_fpt(inv);
        candidate = fin ? fpt_to_term(*fin) : rpt_to_term(inv);
      } else {
        auto f = term_to_fpt(std::get<Term>(m), lim.fuel);
        if (!f.yes()) return std::nullopt;  // certified-only HP: nothing to invert
        candidate = fpt_to_term(star(*f.tree));
      }
      break;
  }
  if (!candidate) return std::nullopt;
  if (!equal(th, compose(mt, *candidate), identity_term(), lim).yes() ||
      !equal(th, compose(*candidate, mt), identity_term(), lim).yes()) {
    return std::nullopt;
  }
  return candidate;
}

}  // namespace ptlab
