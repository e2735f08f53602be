#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ptlab/lambda.hpp"
#include "ptlab/rpt.hpp"
#include "ptlab/term.hpp"

namespace ptlab {

struct TheoryId {
  enum class Kind { Beta, BetaEta, Bohm, HStar, HPlus };

  Kind kind = Kind::Beta;
  std::size_t depth = 0;  // Bohm only, >= 1

  // `beta`, `beta-eta`, `bohm:D`, `hstar`, `hplus`.
  static TheoryId parse(std::string_view token);
  std::string to_string() const;

  friend bool operator==(const TheoryId&, const TheoryId&) = default;
};

struct Verdict {
  enum class Outcome { Yes, No, Unknown };

  Outcome outcome = Outcome::Unknown;
  // Set when the answer only covers observations down to this depth.
  std::optional<std::size_t> depth;
  std::string evidence;

  bool yes() const { return outcome == Outcome::Yes; }
  bool no() const { return outcome == Outcome::No; }
};

std::string to_string(Verdict::Outcome o);

// A λ-term or a rational tree standing for the term it realizes.
using Subject = std::variant<Term, Rpt>;

struct Limits {
  std::size_t fuel = kDefaultFuel;
  std::size_t depth = kDefaultDepth;
};

// hstar/hplus throw OutsideInputClass when an input term determinately fails
// the hereditary permutation grammar.
Verdict equal(const TheoryId& th, const Subject& m, const Subject& n, const Limits& lim = {});

Verdict invertible_in(const TheoryId& th, const Subject& m, const Limits& lim = {});

// The inverse, re-verified in the theory, or absent when m is not invertible
// or has no tree presentation to invert.
std::optional<Term> inverse_in(const TheoryId& th, const Subject& m, const Limits& lim = {});

// The term a subject denotes.
Term subject_term(const Subject& s);

}  // namespace ptlab
