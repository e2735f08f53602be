#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "ptlab/fpt.hpp"

namespace ptlab {

namespace {

using TreeList = std::vector<Fpt>;

// Appends to `out` every tree whose root has the given child sizes.
void expand_children(const std::vector<std::size_t>& sizes,
                     const std::vector<std::shared_ptr<const TreeList>>& by_size,
                     std::vector<Fpt>& prefix, std::vector<Fpt>& out) {
  const std::size_t i = prefix.size();
  if (i == sizes.size()) {
    std::vector<unsigned> images(sizes.size());
    std::iota(images.begin(), images.end(), 1u);
    do {
      out.push_back(Fpt::node(Perm(images), prefix));
    } while (std::next_permutation(images.begin(), images.end()));
    return;
  }
  for (const auto& c : *by_size[sizes[i]]) {
    prefix.push_back(c);
    expand_children(sizes, by_size, prefix, out);
    prefix.pop_back();
  }
}

// Compositions of `total` into `parts` positive summands.
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& acc,
                  std::vector<std::vector<std::size_t>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(acc);
    return;
  }
  for (std::size_t s = 1; s + (parts - 1) <= total; ++s) {
    acc.push_back(s);
    compositions(total - s, parts - 1, acc, out);
    acc.pop_back();
  }
}

void sort_canonically(TreeList& trees) {
  std::vector<std::pair<std::string, Fpt>> keyed;
  keyed.reserve(trees.size());
  for (auto& t : trees) keyed.emplace_back(t.to_string(), std::move(t));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  trees.clear();
  for (auto& [key, t] : keyed) trees.push_back(std::move(t));
}

// Enumerations are pure functions of n; the table only avoids recomputation.
class EnumerationCache {
 public:
  std::shared_ptr<const TreeList> exact(std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    return exact_locked(n);
  }

 private:
  std::shared_ptr<const TreeList> exact_locked(std::size_t n) {
    if (auto it = table_.find(n); it != table_.end()) return it->second;
    auto trees = std::make_shared<TreeList>();
    if (n == 1) {
      trees->push_back(Fpt::leaf());
    } else if (n > 1) {
      std::vector<std::shared_ptr<const TreeList>> by_size(n);
      for (std::size_t s = 1; s < n; ++s) by_size[s] = exact_locked(s);
      for (std::size_t k = 1; k <= n - 1; ++k) {
        std::vector<std::vector<std::size_t>> comps;
        std::vector<std::size_t> acc;
        compositions(n - 1, k, acc, comps);
        for (const auto& sizes : comps) {
          std::vector<Fpt> prefix;
          expand_children(sizes, by_size, prefix, *trees);
        }
      }
      sort_canonically(*trees);
    }
    table_.emplace(n, trees);
    return trees;
  }

  std::mutex mutex_;
  std::map<std::size_t, std::shared_ptr<const TreeList>> table_;
};

EnumerationCache& cache() {
  static EnumerationCache instance;
  return instance;
}

}  // namespace

std::vector<Fpt> enumerate_fpt_exact(std::size_t n) { return *cache().exact(n); }

std::vector<Fpt> enumerate_fpt(std::size_t max_nodes) {
  std::vector<Fpt> out;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    auto trees = cache().exact(n);
    out.insert(out.end(), trees->begin(), trees->end());
  }
  return out;
}

}  // namespace ptlab
