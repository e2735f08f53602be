#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ptlab {

// A permutation of {1..n}, stored as its image list [p(1), ..., p(n)].
// Points beyond n are fixed, so permutations of different sizes can be
// compared and composed as elements of the symmetric group on the positive
// integers. The empty permutation is the identity carried by leaves.
class Perm {
 public:
  Perm() = default;

  // Throws Error unless `images` is a permutation of {1..images.size()}.
  explicit Perm(std::vector<unsigned> images);

  static Perm identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  const std::vector<unsigned>& images() const noexcept { return images_; }

  // 1-based application; fixes every i > size().
  unsigned operator()(unsigned i) const noexcept {
    return (i >= 1 && i <= images_.size()) ? images_[i - 1] : i;
  }

  bool is_identity() const noexcept;
  Perm inverse() const;

  // Same permutation padded with fixed points up to n (n >= size()).
  Perm extended(std::size_t n) const;

  // Drops the trailing points n+1..size(); they must be fixed.
  Perm restricted(std::size_t n) const;

  // Equality as permutations of the positive integers (trailing fixed points
  // are ignored), e.g. [1 2] and [1] agree.
  bool agrees_with(const Perm& other) const noexcept;

  std::string to_string() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<unsigned> images_;
};

// (outer ∘ inner)(i) = outer(inner(i)); the result has size
// max(outer.size(), inner.size()).
Perm compose(const Perm& outer, const Perm& inner);

}  // namespace ptlab
