#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ptlab/fpt.hpp"

namespace ptlab {

enum class GreenKind { L, R, H };

// u L t iff u*u = t*t; u R t iff uu* = tt*; H = L ∩ R. Candidates are the
// trees of norm ||t||, which is forced by ||sk t|| = ||tt*|| = ||t*t||.
std::vector<Fpt> green_class(GreenKind kind, const Fpt& t);

// H_e = {t : ete = t, tt* = t*t = e}; throws PreconditionError unless e is
// idempotent.
std::vector<Fpt> max_subgroup(const Fpt& e);

// max_rep(tu) on maximal elements; throws PreconditionError otherwise.
Fpt group_product_max(const Fpt& t, const Fpt& u);

// sigma via the witness w = t u* u: w <= t and w <= u.
bool brute_sigma(const Fpt& t, const Fpt& u);

// The product with the root composition dropped: the root label is the
// identity of the result arity. Children recurse the same way. Used to check
// that the law suite rejects a broken product.
Fpt product_skipping_composition(const Fpt& t, const Fpt& u);

struct LawReport {
  std::string name;
  std::string universe;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // the first few, serialized

  bool passed() const { return failures == 0; }
};

struct LawOptions {
  std::size_t max_nodes = 6;       // unary laws and the cheap binary ones
  std::size_t pair_nodes = 5;      // binary laws that normalize terms
  std::size_t ternary_nodes = 4;   // associativity and other triples
  std::size_t rational_states = 3;
  // Binary rational laws check every corpus pair when there are at most this
  // many, otherwise this many seeded samples.
  std::size_t rational_pair_limit = 60000;
  std::size_t jobs = 1;
  std::uint64_t seed = 20240601;
  std::size_t keep_counterexamples = 5;
  bool bridge_laws = true;
  bool rational_laws = true;
  std::function<Fpt(const Fpt&, const Fpt&)> product = ptlab::product;
  std::function<Fpt(const Fpt&)> star = ptlab::star;
};

// Every law, each over its universe clipped to opts; sorted by name.
std::vector<LawReport> law_suite(const LawOptions& opts);

bool all_passed(const std::vector<LawReport>& reports);

std::string reports_to_text(const std::vector<LawReport>& reports);
std::string reports_to_json(const std::vector<LawReport>& reports);

}  // namespace ptlab
