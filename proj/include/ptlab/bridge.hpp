#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ptlab/fpt.hpp"
#include "ptlab/lambda.hpp"
#include "ptlab/rpt.hpp"
#include "ptlab/term.hpp"

namespace ptlab {

// The β-normal form of t+: the root binds x x1..xn and applies x to the
// children, child i being the image of t_i at variable x_{pi(i)}; a leaf at
// variable v is v itself.
Term fpt_to_term(const Fpt& t);

struct FhpVerdict {
  enum class Outcome { Yes, No, Unknown };

  Outcome outcome = Outcome::Unknown;
  std::optional<Fpt> tree;  // Yes only
  std::string reason;       // No: the first violation; Unknown: why

  bool yes() const { return outcome == Outcome::Yes; }
};

// β-normalizes within `fuel` and matches the finite hereditary permutation
// shape exactly (no η steps).
FhpVerdict term_to_fpt(const Term& m, std::size_t fuel);

struct HpCertificate {
  std::size_t depth = 0;
  // The tree read off the approximant; labels are exact down to `depth`
  // and cuts sit at depth + 1.
  PartialTree tree = PartialTree::cut();
  // One line per checked node: path, arity and label.
  std::vector<std::string> witness;
};

struct HpCheck {
  std::optional<HpCertificate> certificate;
  std::string violation;  // when absent: path and reason
  // The approximant itself violates the grammar, independently of fuel.
  bool determinate_violation = false;
};

// Checks the Böhm approximant of depth `depth` + 1 against the hereditary
// permutation grammar, so that every label down to `depth` is fixed by the
// heads one level below. Cuts pass; unknown nodes fail.
HpCheck hp_check(const Term& m, std::size_t depth, std::size_t fuel);

// hp_check(...).certificate. Requires depth >= 1 (PreconditionError).
std::optional<HpCertificate> hp_certificate(const Term& m, std::size_t depth,
                                            std::size_t fuel);

// The approximant is the image of the partial tree under t -> t+: heads
// follow the labels, binder and argument counts follow the arities. Cut
// positions of the tree constrain nothing.
bool approx_matches(const BohmApprox& a, const PartialTree& p);

std::optional<Term> invert_fhp(const Term& m, std::size_t fuel);

enum class EtaFamily { Wide, Deep };

// Wide n: ([1 .. n]; *, .., *). Deep n: the identity chain of length n.
Fpt eta_family(EtaFamily kind, std::size_t n);

// A closed term whose Böhm tree is the image of the unfolding of r: one
// function per state, tied together by a single Y over a Church tuple
// with positional selectors.
Term rpt_to_term(const Rpt& r);

}  // namespace ptlab
