#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptlab/algebra.hpp"
#include "ptlab/bridge.hpp"
#include "ptlab/dot.hpp"
#include "ptlab/error.hpp"
#include "ptlab/fpt.hpp"
#include "ptlab/lambda.hpp"
#include "ptlab/rpt.hpp"
#include "ptlab/term.hpp"
#include "ptlab/theories.hpp"

namespace ptlab {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Operands

// `@path` reads the file; anything else is the literal text.
std::string operand_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1), std::ios::binary);
  if (!in) throw IoError("cannot read " + arg.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

bool looks_like_document(const std::string& s) { return !s.empty() && s[0] == '{'; }

// Tree literals start with `*` or `(` `[`; no λ-term does.
bool looks_like_tree(const std::string& s) {
  if (s == "*") return true;
  if (s.empty() || s[0] != '(') return false;
  const auto k = s.find_first_not_of(" \t\r\n", 1);
  return k != std::string::npos && s[k] == '[';
}

Fpt read_tree(const std::string& arg) { return Fpt::parse(trimmed(operand_text(arg))); }

Term read_term(const std::string& arg) {
  const std::string s = trimmed(operand_text(arg));
  if (s.rfind("builtin:", 0) == 0) return builtin(s.substr(8));
  if (looks_like_tree(s)) return fpt_to_term(Fpt::parse(s));
  return Term::parse(s);
}

Rpt read_rpt(const std::string& arg) {
  const std::string s = trimmed(operand_text(arg));
  if (looks_like_document(s)) return Rpt::from_json(s);
  return from_fpt(Fpt::parse(s));
}

Subject read_subject(const std::string& arg) {
  const std::string s = trimmed(operand_text(arg));
  if (looks_like_document(s)) return Rpt::from_json(s);
  if (s.rfind("builtin:", 0) == 0) return builtin(s.substr(8));
  if (looks_like_tree(s)) return fpt_to_term(Fpt::parse(s));
  return Term::parse(s);
}

// ---------------------------------------------------------------------------
// Output

struct Settings {
  std::size_t fuel = kDefaultFuel;
  std::size_t depth = kDefaultDepth;
  std::string format = "text";
  bool explain = false;
};

class Printer {
 public:
  Printer(std::ostream& out, const Settings& s) : out_(out), s_(s) {}

  int result(const std::string& text) {
    if (json()) {
      out_ << nlohmann::ordered_json{{"result", text}}.dump() << "\n";
    } else {
      out_ << text << "\n";
    }
    return kExitYes;
  }

  int lines(const std::vector<std::string>& items) {
    if (json()) {
      out_ << nlohmann::ordered_json{{"result", items}}.dump() << "\n";
    } else {
      for (const auto& i : items) out_ << i << "\n";
    }
    return kExitYes;
  }

  int boolean(bool v, const std::string& evidence = "") {
    return verdict(Verdict{v ? Verdict::Outcome::Yes : Verdict::Outcome::No, std::nullopt,
                           evidence});
  }

  int verdict(const Verdict& v) {
    const std::string word = to_string(v.outcome);
    if (json()) {
      nlohmann::ordered_json j{{"verdict", word}};
      if (v.depth) j["depth"] = *v.depth;
      j["evidence"] = v.evidence;
      out_ << j.dump() << "\n";
    } else {
      out_ << word;
      if (v.depth) out_ << " at depth " << *v.depth;
      out_ << "\n";
      if (s_.explain && !v.evidence.empty()) out_ << v.evidence << "\n";
    }
    switch (v.outcome) {
      case Verdict::Outcome::Yes:
        return kExitYes;
      case Verdict::Outcome::No:
        return kExitNo;
      case Verdict::Outcome::Unknown:
        break;
    }
    return kExitUnknown;
  }

  int unknown(const std::string& why) {
    return verdict(Verdict{Verdict::Outcome::Unknown, std::nullopt, why});
  }

  int raw(const std::string& text) {
    out_ << text;
    return kExitYes;
  }

  bool json() const { return s_.format == "json"; }

 private:
  std::ostream& out_;
  const Settings& s_;
};

IdemClass parse_class(const std::string& s) {
  if (s == "E") return IdemClass::E;
  if (s == "E'" || s == "Eprime" || s == "E-prime") return IdemClass::EPrime;
  throw ParseError("unknown idempotent class '" + s + "' (expected E or E')", 0);
}

GreenKind parse_green(const std::string& s) {
  if (s == "L") return GreenKind::L;
  if (s == "R") return GreenKind::R;
  if (s == "H") return GreenKind::H;
  throw ParseError("unknown Green relation '" + s + "' (expected L, R or H)", 0);
}

std::vector<std::string> tree_lines(const std::vector<Fpt>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(t.to_string());
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"permutation tree and λ-theory toolkit", "ptlab"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--fuel", s.fuel, "reduction steps per normal-form search")
      ->default_val(kDefaultFuel)
      ->check(CLI::PositiveNumber);
  app.add_option("--depth", s.depth, "observation depth for Böhm trees and certificates")
      ->default_val(kDefaultDepth)
      ->check(CLI::PositiveNumber);
  app.add_option("--format", s.format, "output format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--explain", s.explain, "print verdict evidence");

  // Map nodes are stable, so CLI11 can bind straight into them.
  std::map<std::string, CLI::App*> commands;
  std::map<std::string, std::vector<std::string>> inputs;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help,
                  int arity, const std::string& what) {
    const std::string key = group->get_name() + " " + name;
    CLI::App* sub = group->add_subcommand(name, help);
    sub->add_option(what, inputs[key], what)->required()->expected(arity);
    commands[key] = sub;
    return sub;
  };

  // term
  auto* term = app.add_subcommand("term", "λ-terms")->require_subcommand(1);
  std::string mode = "beta";
  bool compose_normalize = false;
  leaf(term, "parse", "parse and print a term", 1, "TERM");
  leaf(term, "normalize", "normal form by leftmost-outermost reduction", 1, "TERM")
      ->add_option("--mode", mode, "beta or beta-eta")
      ->check(CLI::IsMember({"beta", "beta-eta"}));
  leaf(term, "hnf", "head normal form", 1, "TERM");
  leaf(term, "bt", "Böhm-tree approximant", 1, "TERM");
  leaf(term, "compose", "B M N", 2, "TERMS")
      ->add_flag("--normalize", compose_normalize, "print the beta-normal form");
  leaf(term, "invert", "inverse of a finite hereditary permutation", 1, "TERM");

  // tree
  auto* tree = app.add_subcommand("tree", "finite permutation trees")->require_subcommand(1);
  leaf(tree, "parse", "parse and print a tree", 1, "TREE");
  leaf(tree, "product", "t u", 2, "TREES");
  leaf(tree, "star", "t*", 1, "TREE");
  leaf(tree, "max", "maximum of the up-set", 1, "TREE");
  leaf(tree, "max-prime", "maximum of the up-set under <='", 1, "TREE");
  leaf(tree, "leq", "natural order t <= u", 2, "TREES");
  leaf(tree, "leq-prime", "t <=' u", 2, "TREES");
  leaf(tree, "meet", "greatest lower bound of compatible trees", 2, "TREES");
  leaf(tree, "covers", "t is covered by u", 2, "TREES");
  leaf(tree, "norm", "node count", 1, "TREE");
  leaf(tree, "upset", "all u >= t", 1, "TREE");
  leaf(tree, "to-term", "the β-normal λ-term of the tree", 1, "TREE");

  // rtree
  auto* rtree = app.add_subcommand("rtree", "rational trees (@file.json or tree literal)")
                    ->require_subcommand(1);
  std::string cls_name = "E";
  leaf(rtree, "product", "r s", 2, "RTREES");
  leaf(rtree, "star", "r*", 1, "RTREE");
  leaf(rtree, "max", "maximal representative", 1, "RTREE")
      ->add_option("--class", cls_name, "E or E'");
  leaf(rtree, "leq", "coinductive order", 2, "RTREES")->add_option("--class", cls_name, "E or E'");
  leaf(rtree, "equal", "bisimilarity", 2, "RTREES");
  leaf(rtree, "to-term", "a λ-term realizing the tree", 1, "RTREE");
  leaf(rtree, "unfold", "observation down to --depth", 1, "RTREE");

  // theory
  auto* theory = app.add_subcommand("theory", "λ-theory oracles")->require_subcommand(1);
  leaf(theory, "equal", "THEORY M N", 3, "ARGS");
  leaf(theory, "invertible", "THEORY M", 2, "ARGS");
  leaf(theory, "inverse", "THEORY M", 2, "ARGS");

  // algebra
  auto* algebra = app.add_subcommand("algebra", "Green's relations and sigma")
                      ->require_subcommand(1);
  std::string green_kind = "H";
  leaf(algebra, "green", "Green class of a tree", 1, "TREE")
      ->add_option("--kind", green_kind, "L, R or H");
  leaf(algebra, "subgroup", "maximal subgroup at an idempotent", 1, "TREE");
  leaf(algebra, "sigma", "minimum group congruence", 2, "TREES");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "law suite")->require_subcommand(1);
  auto* oracle_run = oracle->add_subcommand("run", "check every law");
  std::size_t max_nodes = 6, jobs = 1, states = 3;
  std::size_t pair_limit = LawOptions{}.rational_pair_limit;
  std::uint64_t seed = LawOptions{}.seed;
  oracle_run->add_option("--max-nodes", max_nodes, "largest tree size")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle_run->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  oracle_run->add_option("--rational-states", states, "rational corpus size bound")
      ->check(CLI::PositiveNumber);
  oracle_run->add_option("--rational-pairs", pair_limit, "cap on sampled rational pairs")
      ->check(CLI::PositiveNumber);
  oracle_run->add_option("--seed", seed, "seed for sampled universes");

  // render
  auto* render = app.add_subcommand("render", "graph output");
  std::string dot_input;
  render->add_option("--dot", dot_input, "tree literal, term, or @file")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "ptlab: " << e.what() << "\n";
    return kExitUsage;
  }

  Printer p(out, s);
  const Limits lim{s.fuel, s.depth};

  try {
    std::string key;
    for (const auto& [k, sub] : commands) {
      if (sub->parsed()) key = k;
    }
    const std::vector<std::string>& in = inputs[key];

    // term
    if (key == "term parse") return p.result(read_term(in[0]).to_string());
    if (key == "term normalize") {
      auto nf = normalize(read_term(in[0]),
                          mode == "beta" ? ReductionMode::Beta : ReductionMode::BetaEta, s.fuel);
      if (!nf) return p.unknown("no normal form within " + std::to_string(s.fuel) + " steps");
      return p.result(nf->to_string());
    }
    if (key == "term hnf") {
      auto h = head_reduce(read_term(in[0]), s.fuel);
      if (!h) return p.unknown("no head normal form within " + std::to_string(s.fuel) + " steps");
      return p.result(h->to_term().to_string());
    }
    if (key == "term bt") {
      BohmApprox b = bohm_approx(read_term(in[0]), s.depth, s.fuel);
      p.result(b.to_string());
      return b.determined() ? kExitYes : kExitUnknown;
    }
    if (key == "term compose") {
      Term c = compose(read_term(in[0]), read_term(in[1]));
      if (!compose_normalize) return p.result(c.to_string());
      auto nf = normalize(c, ReductionMode::Beta, s.fuel);
      if (!nf) return p.unknown("no beta-normal form within " + std::to_string(s.fuel) + " steps");
      return p.result(nf->to_string());
    }
    if (key == "term invert") {
      Term m = read_term(in[0]);
      auto v = term_to_fpt(m, s.fuel);
      if (v.outcome == FhpVerdict::Outcome::Unknown) return p.unknown(v.reason);
      if (!v.yes()) return p.boolean(false, "not a finite hereditary permutation: " + v.reason);
      return p.result(invert_fhp(m, s.fuel)->to_string());
    }

    // tree
    if (key == "tree parse") return p.result(read_tree(in[0]).to_string());
    if (key == "tree product") return p.result(product(read_tree(in[0]), read_tree(in[1])).to_string());
    if (key == "tree star") return p.result(star(read_tree(in[0])).to_string());
    if (key == "tree max") return p.result(max_rep(read_tree(in[0])).to_string());
    if (key == "tree max-prime") {
      // On finite trees every idempotent lies in E', so both maxima agree.
      auto r = r_max_rep(from_fpt(read_tree(in[0])), IdemClass::EPrime);
      return p.result(to_fpt(r)->to_string());
    }
    if (key == "tree leq") return p.boolean(natural_leq(read_tree(in[0]), read_tree(in[1])));
    if (key == "tree leq-prime") {
      return p.boolean(r_leq(from_fpt(read_tree(in[0])), from_fpt(read_tree(in[1])),
                             IdemClass::EPrime));
    }
    if (key == "tree meet") {
      auto m = meet(read_tree(in[0]), read_tree(in[1]));
      if (!m) return p.boolean(false, "the trees are not compatible");
      return p.result(m->to_string());
    }
    if (key == "tree covers") return p.boolean(covers(read_tree(in[0]), read_tree(in[1])));
    if (key == "tree norm") return p.result(std::to_string(norm(read_tree(in[0]))));
    if (key == "tree upset") return p.lines(tree_lines(upset(read_tree(in[0]))));
    if (key == "tree to-term") return p.result(fpt_to_term(read_tree(in[0])).to_string());

    // rtree
    if (key == "rtree product") return p.raw(r_product(read_rpt(in[0]), read_rpt(in[1])).to_json() + "\n");
    if (key == "rtree star") return p.raw(r_star(read_rpt(in[0])).to_json() + "\n");
    if (key == "rtree max") return p.raw(r_max_rep(read_rpt(in[0]), parse_class(cls_name)).to_json() + "\n");
    if (key == "rtree leq") {
      return p.boolean(r_leq(read_rpt(in[0]), read_rpt(in[1]), parse_class(cls_name)));
    }
    if (key == "rtree equal") return p.boolean(bisim_equal(read_rpt(in[0]), read_rpt(in[1])));
    if (key == "rtree to-term") return p.result(rpt_to_term(read_rpt(in[0])).to_string());
    if (key == "rtree unfold") return p.result(unfold_to_depth(read_rpt(in[0]), s.depth).to_string());

    // theory
    if (key == "theory equal") {
      return p.verdict(equal(TheoryId::parse(in[0]), read_subject(in[1]), read_subject(in[2]), lim));
    }
    if (key == "theory invertible") {
      return p.verdict(invertible_in(TheoryId::parse(in[0]), read_subject(in[1]), lim));
    }
    if (key == "theory inverse") {
      const TheoryId th = TheoryId::parse(in[0]);
      const Subject m = read_subject(in[1]);
      Verdict v = invertible_in(th, m, lim);
      if (!v.yes()) return p.verdict(v);
      auto inv = inverse_in(th, m, lim);
      if (!inv) return p.unknown("invertible, but no verified inverse could be built");
      return p.result(inv->to_string());
    }

    // algebra
    if (key == "algebra green") {
      return p.lines(tree_lines(green_class(parse_green(green_kind), read_tree(in[0]))));
    }
    if (key == "algebra subgroup") return p.lines(tree_lines(max_subgroup(read_tree(in[0]))));
    if (key == "algebra sigma") {
      Fpt t = read_tree(in[0]), u = read_tree(in[1]);
      bool a = sigma_equiv(t, u), b = brute_sigma(t, u);
      if (a != b) throw Error("sigma oracles disagree");
      return p.boolean(a, "max_rep: " + max_rep(t).to_string() + " and " + max_rep(u).to_string());
    }

    if (oracle_run->parsed()) {
      LawOptions o;
      o.max_nodes = max_nodes;
      o.jobs = jobs;
      o.rational_states = states;
      o.seed = seed;
      o.rational_pair_limit = pair_limit;
      auto reports = law_suite(o);
      out << (p.json() ? reports_to_json(reports) : reports_to_text(reports));
      return all_passed(reports) ? kExitYes : kExitNo;
    }

    if (render->parsed()) {
      const std::string src = trimmed(operand_text(dot_input));
      if (looks_like_document(src)) return p.raw(render_dot(Rpt::from_json(src)));
      if (looks_like_tree(src)) return p.raw(render_dot(Fpt::parse(src)));
      return p.raw(render_dot(bohm_approx(read_term(src), s.depth, s.fuel)));
    }
    err << "ptlab: no command\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "ptlab: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "ptlab: " << e.what() << "\n";
    return kExitIo;
  } catch (const OutsideInputClass& e) {
    err << "ptlab: outside supported input class: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "ptlab: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace ptlab
