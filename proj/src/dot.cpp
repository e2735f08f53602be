#include "ptlab/dot.hpp"

#include <functional>
#include <sstream>

namespace ptlab {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_dot(const Fpt& t) {
  std::ostringstream out;
  out << "digraph fpt {\n  node [shape=box];\n";
  std::size_t next = 0;
  std::function<std::size_t(const Fpt&)> visit = [&](const Fpt& x) {
    const std::size_t id = next++;
    out << "  n" << id << " [label=" << quote(x.is_leaf() ? "*" : x.label().to_string()) << "];\n";
    for (std::size_t i = 0; i < x.arity(); ++i) {
      const std::size_t c = visit(x.children()[i]);
      out << "  n" << id << " -> n" << c << " [label=\"" << i + 1 << "\"];\n";
    }
    return id;
  };
  visit(t);
  out << "}\n";
  return out.str();
}

std::string render_dot(const Rpt& r) {
  std::ostringstream out;
  out << "digraph rpt {\n  node [shape=box];\n";
  for (std::size_t s = 0; s < r.size(); ++s) {
    const auto& st = r.state(s);
    out << "  n" << s << " [label=" << quote(st.children.empty() ? "*" : st.label.to_string());
    if (s == r.root()) out << ", peripheries=2";
    out << "];\n";
  }
  for (std::size_t s = 0; s < r.size(); ++s) {
    const auto& ch = r.state(s).children;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      out << "  n" << s << " -> n" << ch[i] << " [label=\"" << i + 1 << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string render_dot(const BohmApprox& b) {
  std::ostringstream out;
  out << "digraph bohm {\n  node [shape=box];\n";
  std::size_t next = 0;
  std::vector<std::string> names;  // binder names by level
  std::function<std::size_t(const BohmApprox&)> visit = [&](const BohmApprox& x) {
    const std::size_t id = next++;
    std::string label;
    switch (x.kind) {
      case BohmApprox::Kind::Cut:
        label = "cut";
        break;
      case BohmApprox::Kind::Unknown:
        label = "unknown";
        break;
      case BohmApprox::Kind::Bottom:
        label = "⊥";
        break;
      case BohmApprox::Kind::Head: {
        for (const auto& n : x.binders) names.push_back(n + std::to_string(names.size()));
        if (!x.binders.empty()) {
          label = "\\";
          for (std::size_t i = names.size() - x.binders.size(); i < names.size(); ++i) {
            label += (label.size() > 1 ? " " : "") + names[i];
          }
          label += ". ";
        }
        label += x.head_bound ? (x.head_level < names.size() ? names[x.head_level] : "?")
                              : x.head_name;
        break;
      }
    }
    out << "  n" << id << " [label=" << quote(label) << "];\n";
    for (std::size_t i = 0; i < x.children.size(); ++i) {
      const std::size_t c = visit(x.children[i]);
      out << "  n" << id << " -> n" << c << " [label=\"" << i + 1 << "\"];\n";
    }
    if (x.kind == BohmApprox::Kind::Head) names.resize(names.size() - x.binders.size());
    return id;
  };
  visit(b);
  out << "}\n";
  return out.str();
}

}  // namespace ptlab
