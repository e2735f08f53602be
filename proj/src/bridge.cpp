#include "ptlab/bridge.hpp"

#include <functional>
#include <limits>

#include "ptlab/error.hpp"

namespace ptlab {

namespace {

std::string binder_prefix(std::size_t level) {
  static const std::string letters = "yzwvutsrqp";
  if (level == 0) return "x";
  if (level <= letters.size()) return std::string(1, letters[level - 1]);
  return "a" + std::to_string(level) + "_";
}

// [[t]](v) in a context of `depth` binders, v given as an absolute level.
Term embed(const Fpt& t, std::size_t head_level, std::size_t depth, std::size_t nesting) {
  const std::size_t n = t.arity();
  std::vector<std::string> hints;
  for (std::size_t i = 1; i <= n; ++i) hints.push_back(binder_prefix(nesting) + std::to_string(i));
  const std::size_t inner = depth + n;
  std::vector<Term> args;
  for (unsigned i = 1; i <= n; ++i) {
    args.push_back(embed(t.children()[i - 1], depth + t.label()(i) - 1, inner, nesting + 1));
  }
  return Term::lams(hints, Term::apps(Term::var(inner - 1 - head_level), args));
}

std::string child_path(const std::string& path, std::size_t i) {
  return (path == "root" ? std::string() : path + ".") + std::to_string(i);
}

struct Extraction {
  std::string violation;
  bool determinate = false;
  std::vector<std::string> witness;

  std::optional<PartialTree> fail(const std::string& path, const std::string& why, bool det) {
    violation = "at " + path + ": " + why;
    determinate = det;
    return std::nullopt;
  }

  // `b` must be the node for the variable at level `expected`, binding its
  // own variables from level `first`; at the root it also binds x itself.
  // Labels are read for `levels` tree levels; below that the node is only
  // checked shallowly and reported as a cut.
  std::optional<PartialTree> run(const BohmApprox& b, std::size_t expected, std::size_t first,
                                 bool root, std::size_t levels, const std::string& path) {
    switch (b.kind) {
      case BohmApprox::Kind::Unknown:
        return fail(path, "no head normal form within fuel", false);
      case BohmApprox::Kind::Bottom:
        return fail(path, "unsolvable subterm", true);
      case BohmApprox::Kind::Cut:
        if (levels == 0) return PartialTree::cut();
        return fail(path, "approximant too shallow", false);
      case BohmApprox::Kind::Head:
        break;
    }
    if (root && b.binders.empty()) return fail(path, "not an abstraction", true);
    const std::size_t n = b.binders.size() - (root ? 1 : 0);
    if (!b.head_bound) return fail(path, "free head variable " + b.head_name, true);
    if (b.head_level != expected) {
      return fail(path, "head variable is not the expected bound variable", true);
    }
    if (b.children.size() != n) {
      return fail(path, std::to_string(b.children.size()) + " argument(s) for " +
                            std::to_string(n) + " bound variable(s)", true);
    }
    if (levels == 0) return PartialTree::cut();

    std::vector<unsigned> images;
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const BohmApprox& c = b.children[i];
      const std::string cp = child_path(path, i + 1);
      if (c.kind == BohmApprox::Kind::Unknown) return fail(cp, "no head normal form within fuel", false);
      if (c.kind == BohmApprox::Kind::Bottom) return fail(cp, "unsolvable subterm", true);
      if (c.kind == BohmApprox::Kind::Cut) return fail(cp, "approximant too shallow", false);
      if (!c.head_bound || c.head_level < first || c.head_level >= first + n) {
        return fail(cp, "head is not one of the variables bound at " + path, true);
      }
      const std::size_t k = c.head_level - first;
      if (used[k]) return fail(cp, "bound variable used as head twice", true);
      used[k] = true;
      images.push_back(static_cast<unsigned>(k + 1));
    }
    Perm label(images);
    witness.push_back(path + ": arity " + std::to_string(n) + ", label " + label.to_string());
    std::vector<PartialTree> kids;
    for (std::size_t i = 0; i < n; ++i) {
      auto k = run(b.children[i], first + images[i] - 1, first + n, false,
                   levels == std::numeric_limits<std::size_t>::max() ? levels : levels - 1,
                   child_path(path, i + 1));
      if (!k) return std::nullopt;
      kids.push_back(std::move(*k));
    }
    return PartialTree::node(std::move(label), std::move(kids));
  }
};

Fpt to_fpt(const PartialTree& p) {
  if (p.is_cut()) throw Error("partial tree has a cut");
  std::vector<Fpt> kids;
  for (const auto& c : p.children()) kids.push_back(to_fpt(c));
  return Fpt::node(p.label(), std::move(kids));
}

bool matches(const BohmApprox& a, const PartialTree& p, std::size_t expected, std::size_t first,
             bool root) {
  if (p.is_cut()) return true;
  if (a.kind != BohmApprox::Kind::Head) return false;
  const std::size_t n = p.children().size();
  if (a.binders.size() != n + (root ? 1 : 0) || a.children.size() != n) return false;
  if (!a.head_bound || a.head_level != expected) return false;
  for (unsigned i = 1; i <= n; ++i) {
    if (!matches(a.children[i - 1], p.children()[i - 1], first + p.label()(i) - 1, first + n,
                 false)) {
      return false;
    }
  }
  return true;
}

}  // namespace

Term fpt_to_term(const Fpt& t) {
  // λx. [[t]](x), with the outer binder at level 0.
  return Term::lam("x", embed(t, 0, 1, 0));
}

FhpVerdict term_to_fpt(const Term& m, std::size_t fuel) {
  FhpVerdict v;
  auto nf = normalize(m, ReductionMode::Beta, fuel);
  if (!nf) {
    v.outcome = FhpVerdict::Outcome::Unknown;
    v.reason = "no beta-normal form within " + std::to_string(fuel) + " steps";
    return v;
  }
  const auto all = std::numeric_limits<std::size_t>::max();
  BohmApprox a = bohm_approx(*nf, all, fuel);
  Extraction ex;
  auto p = ex.run(a, 0, 1, true, all, "root");
  if (!p) {
    v.outcome = FhpVerdict::Outcome::No;
    v.reason = ex.violation;
    return v;
  }
  v.outcome = FhpVerdict::Outcome::Yes;
  v.tree = to_fpt(*p);
  return v;
}

HpCheck hp_check(const Term& m, std::size_t depth, std::size_t fuel) {
  if (depth == 0) throw PreconditionError("certificate depth must be at least 1");
  HpCheck out;
  BohmApprox a = bohm_approx(m, depth + 1, fuel);
  Extraction ex;
  auto p = ex.run(a, 0, 1, true, depth, "root");
  if (!p) {
    out.violation = ex.violation;
    out.determinate_violation = ex.determinate;
    return out;
  }
  out.certificate = HpCertificate{depth, std::move(*p), std::move(ex.witness)};
  return out;
}

std::optional<HpCertificate> hp_certificate(const Term& m, std::size_t depth, std::size_t fuel) {
  return hp_check(m, depth, fuel).certificate;
}

bool approx_matches(const BohmApprox& a, const PartialTree& p) { return matches(a, p, 0, 1, true); }

std::optional<Term> invert_fhp(const Term& m, std::size_t fuel) {
  auto v = term_to_fpt(m, fuel);
  if (!v.yes()) return std::nullopt;
  return fpt_to_term(star(*v.tree));
}

Fpt eta_family(EtaFamily kind, std::size_t n) {
  if (kind == EtaFamily::Wide) {
    return Fpt::node(Perm::identity(n), std::vector<Fpt>(n, Fpt::leaf()));
  }
  Fpt t = Fpt::leaf();
  for (std::size_t i = 0; i < n; ++i) t = Fpt::node(Perm::identity(1), {t});
  return t;
}

Term rpt_to_term(const Rpt& r) {
  const std::size_t k = r.size();
  auto selector = [&](std::size_t j) {
    std::string s = "(\\";
    for (std::size_t i = 0; i < k; ++i) s += (i ? " a" : "a") + std::to_string(i);
    return s + ". a" + std::to_string(j) + ")";
  };
  // G_s = \h x1..xn. h (p sel_{c1} x_{pi 1}) .. (p sel_{cn} x_{pi n})
  std::string tuple = "\\s. s";
  for (std::size_t s = 0; s < k; ++s) {
    const auto& st = r.state(s);
    std::string g = "(\\h";
    for (std::size_t i = 1; i <= st.children.size(); ++i) g += " x" + std::to_string(i);
    g += ". h";
    for (unsigned i = 1; i <= st.children.size(); ++i) {
      g += " (p " + selector(st.children[i - 1]) + " x" + std::to_string(st.label(i)) + ")";
    }
    tuple += " " + g + ")";
  }
  Term fix = Term::app(builtin("Y"), Term::parse("\\p. " + tuple));
  Term sel = Term::parse(selector(r.root()));
  // \x. fix sel_root x; fix and sel are closed, so no shifting is needed.
  return Term::lam("x", Term::apps(fix, {sel, Term::var(0)}));
}

}  // namespace ptlab
