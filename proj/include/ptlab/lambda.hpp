#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ptlab/term.hpp"

namespace ptlab {

inline constexpr std::size_t kDefaultFuel = 10000;
inline constexpr std::size_t kDefaultDepth = 8;

// Reductions also stop once an intermediate term outgrows this many nodes;
// the caller sees the same absent result as for fuel exhaustion.
inline constexpr std::size_t kMaxTermSize = 1u << 18;

enum class ReductionMode { Beta, BetaEta };

// Normal form by leftmost-outermost reduction; each β- or η-step costs one
// unit of fuel. The βη-normal form is the η-normal form of the β-normal form.
std::optional<Term> normalize(const Term& t, ReductionMode mode, std::size_t fuel);

// λ binders . head args, with head a Var (relative to all binders) or Free.
struct HeadNormalForm {
  std::vector<std::string> binders;
  Term head;
  std::vector<Term> args;

  Term to_term() const;
};

std::optional<HeadNormalForm> head_reduce(const Term& t, std::size_t fuel);

// Every term reachable by contracting exactly one η-redex.
std::vector<Term> eta_reducts_one_step(const Term& t);

bool is_beta_normal(const Term& t);

// Finite Böhm-tree observation.
struct BohmApprox {
  enum class Kind { Head, Bottom, Cut, Unknown };

  Kind kind = Kind::Cut;
  std::vector<std::string> binders;
  // Head variable: either bound, as an absolute level counted from the
  // outermost binder of the whole approximant, or a free name.
  bool head_bound = false;
  std::size_t head_level = 0;
  std::string head_name;
  std::vector<BohmApprox> children;

  static BohmApprox cut() { return BohmApprox{}; }
  static BohmApprox unknown();

  bool determined() const;  // no Unknown or Bottom node anywhere

  // Printed like a term, with <cut>, <unknown> and <bot> placeholders.
  std::string to_string() const;

  friend bool operator==(const BohmApprox&, const BohmApprox&);
};

// Head-reduces level by level down to `depth`; every head normal form search
// gets its own `fuel` budget and yields Unknown when that budget runs out.
BohmApprox bohm_approx(const Term& t, std::size_t depth, std::size_t fuel);

}  // namespace ptlab
