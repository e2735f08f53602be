#include <cctype>
#include <sstream>

#include "ptlab/error.hpp"
#include "ptlab/fpt.hpp"

namespace ptlab {

namespace {

void write(std::ostringstream& os, const Fpt& t) {
  if (t.is_leaf()) {
    os << '*';
    return;
  }
  os << '(' << t.label().to_string() << "; ";
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) os << ", ";
    write(os, t.children()[i]);
  }
  os << ')';
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  Fpt parse_all() {
    Fpt t = parse_tree();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  unsigned parse_nat() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a natural number");
    }
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 1'000'000) fail("permutation entry too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  Fpt parse_tree() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a tree");
    if (text_[pos_] == '*') {
      ++pos_;
      return Fpt::leaf();
    }
    const std::size_t start = pos_;
    expect('(');
    expect('[');
    std::vector<unsigned> images;
    images.push_back(parse_nat());
    while (true) {
      const std::size_t before = pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ']') break;
      if (pos_ == before) fail("expected ' ' or ']'");
      images.push_back(parse_nat());
    }
    ++pos_;
    expect(';');
    std::vector<Fpt> children;
    children.push_back(parse_tree());
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        children.push_back(parse_tree());
        continue;
      }
      break;
    }
    expect(')');
    try {
      return Fpt::node(Perm(std::move(images)), std::move(children));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Fpt::to_string() const {
  std::ostringstream os;
  write(os, *this);
  return os.str();
}

Fpt Fpt::parse(std::string_view text) { return TreeParser(text).parse_all(); }

}  // namespace ptlab
