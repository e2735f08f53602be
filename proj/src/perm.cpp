#include "ptlab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ptlab/error.hpp"

namespace ptlab {

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (unsigned v : images_) {
    if (v == 0 || v > images_.size() || seen[v]) {
      throw Error("not a permutation of 1.." + std::to_string(images_.size()) +
                  ": " + to_string());
    }
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  Perm p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), 1u);
  return p;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    p.images_[images_[i] - 1] = static_cast<unsigned>(i + 1);
  }
  return p;
}

Perm Perm::extended(std::size_t n) const {
  Perm p = *this;
  for (std::size_t i = p.images_.size(); i < n; ++i) {
    p.images_.push_back(static_cast<unsigned>(i + 1));
  }
  return p;
}

Perm Perm::restricted(std::size_t n) const {
  for (std::size_t i = n; i < images_.size(); ++i) {
    if (images_[i] != i + 1) {
      throw Error("cannot restrict " + to_string() + " to " +
                  std::to_string(n) + " points");
    }
  }
  Perm p;
  p.images_.assign(images_.begin(),
                   images_.begin() + static_cast<std::ptrdiff_t>(
                                         std::min(n, images_.size())));
  return p;
}

bool Perm::agrees_with(const Perm& other) const noexcept {
  const std::size_t n = std::max(size(), other.size());
  for (unsigned i = 1; i <= n; ++i) {
    if ((*this)(i) != other(i)) return false;
  }
  return true;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ' ';
    os << images_[i];
  }
  os << ']';
  return os.str();
}

Perm compose(const Perm& outer, const Perm& inner) {
  const std::size_t n = std::max(outer.size(), inner.size());
  std::vector<unsigned> images(n);
  for (unsigned i = 1; i <= n; ++i) images[i - 1] = outer(inner(i));
  return Perm(std::move(images));
}

}  // namespace ptlab
