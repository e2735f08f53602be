#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "ptlab/error.hpp"
#include "ptlab/term.hpp"

namespace ptlab {

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse_all() {
    Term t = term();
    skip_ws();
    if (pos_ < text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_lambda() const {
    if (pos_ < text_.size() && text_[pos_] == '\\') return true;
    return text_.substr(pos_, 2) == "\xCE\xBB";  // UTF-8 λ
  }

  bool at_ident() const {
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Term term() {
    skip_ws();
    if (at_lambda()) {
      pos_ += text_[pos_] == '\\' ? 1 : 2;
      std::vector<std::string> names;
      for (;;) {
        skip_ws();
        if (!at_ident()) break;
        names.push_back(ident());
      }
      if (names.empty()) error("expected a binder name");
      if (pos_ >= text_.size() || text_[pos_] != '.') error("expected '.'");
      ++pos_;
      for (const auto& n : names) scope_.push_back(n);
      Term body = term();
      scope_.resize(scope_.size() - names.size());
      return Term::lams(names, std::move(body));
    }
    return application();
  }

  bool at_atom() {
    skip_ws();
    return at_ident() || (pos_ < text_.size() && text_[pos_] == '(');
  }

  Term application() {
    if (!at_atom()) {
      if (pos_ >= text_.size()) error("unexpected end of input");
      error("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    Term t = atom();
    while (at_atom()) t = Term::app(std::move(t), atom());
    return t;
  }

  Term atom() {
    if (text_[pos_] == '(') {
      ++pos_;
      Term t = term();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') error("expected ')'");
      ++pos_;
      return t;
    }
    std::string name = ident();
    for (std::size_t i = scope_.size(); i-- > 0;) {
      if (scope_[i] == name) return Term::var(scope_.size() - 1 - i);
    }
    return Term::free(std::move(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

bool valid_ident(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

class TermPrinter {
 public:
  explicit TermPrinter(const Term& t) {
    auto fv = free_names(t);
    taken_.insert(fv.begin(), fv.end());
  }

  std::string print(const Term& t) {
    std::string out;
    term(t, out);
    return out;
  }

 private:
  std::string pick(const std::string& hint) {
    auto in_scope = [&](const std::string& n) {
      return taken_.count(n) || std::find(scope_.begin(), scope_.end(), n) != scope_.end();
    };
    if (valid_ident(hint) && !in_scope(hint)) return hint;
    for (std::size_t k = 0;; ++k) {
      std::string n = "x_" + std::to_string(k);
      if (!in_scope(n)) return n;
    }
  }

  void term(const Term& t, std::string& out) {
    if (t.kind() == Term::Kind::Lam) {
      out += '\\';
      const Term* x = &t;
      std::size_t pushed = 0;
      while (x->kind() == Term::Kind::Lam) {
        std::string n = pick(x->name());
        if (pushed > 0) out += ' ';
        out += n;
        scope_.push_back(std::move(n));
        ++pushed;
        x = &x->body();
      }
      out += ". ";
      term(*x, out);
      scope_.resize(scope_.size() - pushed);
      return;
    }
    application(t, out);
  }

  void application(const Term& t, std::string& out) {
    if (t.kind() != Term::Kind::App) {
      atom(t, out);
      return;
    }
    application(t.fun(), out);
    out += ' ';
    atom(t.arg(), out);
  }

  void atom(const Term& t, std::string& out) {
    switch (t.kind()) {
      case Term::Kind::Var:
        if (t.index() >= scope_.size()) {
          // Dangling index in an open fragment; not produced by parse().
          out += "#" + std::to_string(t.index() - scope_.size());
        } else {
          out += scope_[scope_.size() - 1 - t.index()];
        }
        return;
      case Term::Kind::Free:
        out += t.name();
        return;
      default:
        out += '(';
        term(t, out);
        out += ')';
    }
  }

  std::set<std::string> taken_;
  std::vector<std::string> scope_;
};

}  // namespace

Term Term::parse(std::string_view text) { return TermParser(text).parse_all(); }

std::string Term::to_string() const { return TermPrinter(*this).print(*this); }

}  // namespace ptlab
