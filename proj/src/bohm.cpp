#include <algorithm>
#include <functional>
#include <set>

#include "ptlab/lambda.hpp"

namespace ptlab {

BohmApprox BohmApprox::unknown() {
  BohmApprox b;
  b.kind = Kind::Unknown;
  return b;
}

bool BohmApprox::determined() const {
  if (kind == Kind::Unknown || kind == Kind::Bottom) return false;
  return std::all_of(children.begin(), children.end(),
                     [](const BohmApprox& c) { return c.determined(); });
}

bool operator==(const BohmApprox& a, const BohmApprox& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != BohmApprox::Kind::Head) return true;
  // Binder names are hints only.
  if (a.binders.size() != b.binders.size() || a.head_bound != b.head_bound) return false;
  if (a.head_bound ? a.head_level != b.head_level : a.head_name != b.head_name) return false;
  return a.children == b.children;
}

namespace {

void collect_free(const BohmApprox& b, std::set<std::string>& out) {
  if (b.kind != BohmApprox::Kind::Head) return;
  if (!b.head_bound) out.insert(b.head_name);
  for (const auto& c : b.children) collect_free(c, out);
}

class ApproxPrinter {
 public:
  explicit ApproxPrinter(const BohmApprox& b) { collect_free(b, taken_); }

  void node(const BohmApprox& b, std::string& out, bool as_atom) {
    switch (b.kind) {
      case BohmApprox::Kind::Cut:
        out += "<cut>";
        return;
      case BohmApprox::Kind::Unknown:
        out += "<unknown>";
        return;
      case BohmApprox::Kind::Bottom:
        out += "<bot>";
        return;
      case BohmApprox::Kind::Head:
        break;
    }
    const bool compound = !b.binders.empty() || !b.children.empty();
    if (as_atom && compound) out += '(';
    for (std::size_t i = 0; i < b.binders.size(); ++i) {
      std::string n = pick(b.binders[i]);
      out += (i == 0 ? "\\" : " ");
      out += n;
      levels_.push_back(std::move(n));
    }
    if (!b.binders.empty()) out += ". ";
    if (b.head_bound) {
      out += b.head_level < levels_.size() ? levels_[b.head_level] : "#?";
    } else {
      out += b.head_name;
    }
    for (const auto& c : b.children) {
      out += ' ';
      node(c, out, true);
    }
    levels_.resize(levels_.size() - b.binders.size());
    if (as_atom && compound) out += ')';
  }

 private:
  std::string pick(const std::string& hint) {
    auto used = [&](const std::string& n) {
      return taken_.count(n) || std::find(levels_.begin(), levels_.end(), n) != levels_.end();
    };
    if (!hint.empty() && !used(hint)) return hint;
    for (std::size_t k = 0;; ++k) {
      std::string n = "x_" + std::to_string(k);
      if (!used(n)) return n;
    }
  }

  std::set<std::string> taken_;
  std::vector<std::string> levels_;
};

BohmApprox approx(const Term& t, std::size_t depth, std::size_t fuel, std::size_t outer) {
  if (depth == 0) return BohmApprox::cut();
  auto h = head_reduce(t, fuel);
  if (!h) return BohmApprox::unknown();
  BohmApprox b;
  b.kind = BohmApprox::Kind::Head;
  b.binders = h->binders;
  const std::size_t levels = outer + h->binders.size();
  if (h->head.kind() == Term::Kind::Var) {
    b.head_bound = true;
    b.head_level = levels - 1 - h->head.index();
  } else {
    b.head_name = h->head.name();
  }
  b.children.reserve(h->args.size());
  for (const auto& a : h->args) b.children.push_back(approx(a, depth - 1, fuel, levels));
  return b;
}

}  // namespace

std::string BohmApprox::to_string() const {
  std::string out;
  ApproxPrinter(*this).node(*this, out, false);
  return out;
}

BohmApprox bohm_approx(const Term& t, std::size_t depth, std::size_t fuel) {
  return approx(t, depth, fuel, t.loose());
}

}  // namespace ptlab
