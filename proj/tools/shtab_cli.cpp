// shtab: command-line front end for the shifted tableau crystal library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <shtab/selftest.hpp>
#include <shtab/shtab.hpp>

namespace {

using nlohmann::json;
using namespace shtab;

// Exit codes.
constexpr int kOk = 0;
constexpr int kRefuted = 1;  // e.g. operator undefined, verification failed
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct ShapeArgs {
  std::string outer;
  std::string inner;
  ShiftedShape get() const { return ShiftedShape(parse_partition(outer), parse_partition(inner)); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Inline JSON if it starts with '{', else a file path.
json read_json_arg(const std::string& arg) {
  const auto p = arg.find_first_not_of(" \t\n");
  const std::string text = p != std::string::npos && arg[p] == '{' ? arg : read_file(arg);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string partition_key(const StrictPartition& p) {
  std::string s;
  for (std::size_t r = 0; r < p.length(); ++r) s += (r ? "," : "") + std::to_string(p.parts()[r]);
  return s;
}

std::string walk_svg(const Walk& wk) {
  int mx = 1, my = 1;
  for (const WalkPoint p : wk.points) {
    mx = std::max(mx, p.x);
    my = std::max(my, p.y);
  }
  const int u = 40, pad = 20;
  const int width = mx * u + 2 * pad, height = my * u + 2 * pad;
  auto X = [&](int x) { return pad + x * u; };
  auto Y = [&](int y) { return height - pad - y * u; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (int x = 0; x <= mx; ++x)
    os << "  <line x1=\"" << X(x) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(x) << "\" y2=\"" << Y(my)
       << "\" stroke=\"#ddd\" stroke-dasharray=\"2,3\"/>\n";
  for (int y = 0; y <= my; ++y)
    os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(mx) << "\" y2=\"" << Y(y)
       << "\" stroke=\"#ddd\" stroke-dasharray=\"2,3\"/>\n";
  os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (const WalkPoint p : wk.points) os << X(p.x) << "," << Y(p.y) << " ";
  os << "\"/>\n";
  os << "  <circle cx=\"" << X(0) << "\" cy=\"" << Y(0) << "\" r=\"4\" fill=\"black\"/>\n";
  os << "  <circle cx=\"" << X(wk.end().x) << "\" cy=\"" << Y(wk.end().y)
     << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

void print_tableau(const Tableau& t, std::ostream& os) {
  const auto rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int indent = static_cast<int>(r) + t.shape().inner().part(r + 1);
    os << std::string(static_cast<std::size_t>(indent) * 3, ' ');
    for (Letter l : rows[r]) {
      std::string cell = to_string(l);
      cell.resize(3, ' ');
      os << cell;
    }
    os << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operators, jeu de taquin and crystals on shifted semistandard tableaux"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_option("--seed", seed, "Seed for randomized commands");

  // walk
  auto* walk_cmd = app.add_subcommand("walk", "Lattice walk of a two-class word (or of classes i, i+1)");
  std::string walk_word, svg_path;
  int walk_index = 1;
  walk_cmd->add_option("--word", walk_word, "Word, e.g. \"211'12'22'1'1'\"")->required();
  walk_cmd->add_option("--index", walk_index, "Use the letters i, i+1");
  walk_cmd->add_option("--svg", svg_path, "Write the walk as SVG to this file");

  // ballot
  auto* ballot_cmd = app.add_subcommand("ballot", "Is a word ballot?");
  std::string ballot_word;
  int ballot_n = 0;
  ballot_cmd->add_option("--word", ballot_word)->required();
  ballot_cmd->add_option("--n", ballot_n, "Alphabet bound (default: largest class)");

  // op
  auto* op_cmd = app.add_subcommand("op", "Apply F, F', E or E' of some index");
  std::string op_kind = "F", op_word, op_tableau;
  int op_index = 1;
  op_cmd->add_option("--kind", op_kind, "F, F', E or E'")->required();
  op_cmd->add_option("--index", op_index)->check(CLI::PositiveNumber);
  auto* op_w = op_cmd->add_option("--word", op_word);
  auto* op_t = op_cmd->add_option("--tableau", op_tableau, "Tableau JSON text or file");
  op_w->excludes(op_t);
  op_t->excludes(op_w);

  // rectify / lr-check
  auto* rect_cmd = app.add_subcommand("rectify", "Rectify a skew tableau by jeu de taquin");
  std::string rect_tableau;
  bool rect_random = false, rect_trace = false;
  rect_cmd->add_option("--tableau", rect_tableau, "Tableau JSON text or file")->required();
  rect_cmd->add_flag("--random", rect_random, "Choose slide corners at random (see --seed)");
  rect_cmd->add_flag("--trace", rect_trace, "Print every slide");
  auto* lr_cmd = app.add_subcommand("lr-check", "Is a tableau Littlewood-Richardson?");
  std::string lr_tableau;
  lr_cmd->add_option("--tableau", lr_tableau, "Tableau JSON text or file")->required();

  // enumerate / crystal / genfun
  ShapeArgs en_shape, cr_shape, gf_shape, lc_shape;
  int en_n = 2, cr_n = 2, gf_n = 2, lc_n = 2;
  auto shape_opts = [](CLI::App* cmd, ShapeArgs& s, int& n) {
    cmd->add_option("--shape,--outer", s.outer, "Outer strict partition, e.g. \"3,1\"")->required();
    cmd->add_option("--inner", s.inner, "Inner strict partition");
    cmd->add_option("--n", n, "Largest letter")->check(CLI::PositiveNumber);
  };
  auto* en_cmd = app.add_subcommand("enumerate", "List ShST(lambda/mu, n)");
  shape_opts(en_cmd, en_shape, en_n);
  bool en_count = false;
  en_cmd->add_flag("--count", en_count, "Only print the number of tableaux");
  auto* cr_cmd = app.add_subcommand("crystal", "Build and export the crystal on ShST(lambda/mu, n)");
  shape_opts(cr_cmd, cr_shape, cr_n);
  std::string cr_format = "dot", cr_output;
  cr_cmd->add_option("--format", cr_format)->check(CLI::IsMember({"dot", "json"}));
  cr_cmd->add_option("--output,-o", cr_output, "Write to this file instead of stdout");
  auto* lc_cmd = app.add_subcommand("lrcoef", "Shifted Littlewood-Richardson coefficients f^lambda_{nu,mu}");
  shape_opts(lc_cmd, lc_shape, lc_n);
  auto* gf_cmd = app.add_subcommand("genfun", "Generating function with weights 2^#nonzero x^wt");
  shape_opts(gf_cmd, gf_shape, gf_n);

  // verify
  auto* vf_cmd = app.add_subcommand("verify", "Check the local axioms and certify every component");
  std::string vf_input;
  long long vf_mutate = -1;
  vf_cmd->add_option("--input", vf_input, "Graph JSON file")->required();
  vf_cmd->add_option("--mutate", vf_mutate, "Apply single-edge mutation number k first");

  // selftest
  auto* st_cmd = app.add_subcommand("selftest", "Run the acceptance checks");
  bool st_full = false, st_quick = false;
  st_cmd->add_flag("--full", st_full, "Full ranges (minutes)");
  st_cmd->add_flag("--quick", st_quick, "Reduced ranges (seconds); the default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::ostream& out = std::cout;
  try {
    if (*walk_cmd) {
      const Word w = parse_word(walk_word);
      const Word r = restrict_to(w, walk_index).word;
      const Walk wk = walk(r);
      if (!svg_path.empty()) {
        std::ofstream f(svg_path);
        if (!f) throw ParseError("cannot write " + svg_path);
        f << walk_svg(wk);
      }
      const StrictPartition sh = rect_shape(r);
      if (as_json) {
        json steps = json::array();
        for (const auto& s : wk.steps) steps.push_back(std::string(1, direction_char(s.direction)));
        out << json{{"word", to_string(w)}, {"end", {wk.end().x, wk.end().y}}, {"steps", steps},
                    {"rect_shape", sh.parts()}}
                   .dump()
            << "\n";
      } else {
        std::string dirs;
        for (const auto& s : wk.steps) dirs += direction_char(s.direction);
        out << "word      " << to_string(w) << "\n"
            << "steps     " << dirs << "\n"
            << "endpoint  " << to_string(wk.end()) << "\n"
            << "rect      " << to_string(sh) << "\n";
      }
      return kOk;
    }
    if (*ballot_cmd) {
      const Word w = parse_word(ballot_word);
      const int n = ballot_n > 0 ? ballot_n : std::max(1, max_class(w.letters()));
      const bool b = is_ballot(w, n);
      if (as_json) out << json{{"word", to_string(w)}, {"n", n}, {"ballot", b}}.dump() << "\n";
      else out << (b ? "ballot" : "not ballot") << "\n";
      return kOk;
    }
    if (*op_cmd) {
      const OperatorKind k = parse_operator_kind(op_kind, op_index);
      if (!op_tableau.empty()) {
        const Tableau t = tableau_from_json(read_json_arg(op_tableau));
        const auto img = apply(t, k);
        if (as_json) out << (img ? to_json(*img) : json(nullptr)).dump() << "\n";
        else if (img) print_tableau(*img, out);
        else out << "undefined\n";
        return img ? kOk : kRefuted;
      }
      if (op_word.empty()) throw ParseError("op needs --word or --tableau");
      const auto img = apply(parse_word(op_word), k);
      if (as_json) out << (img ? json(to_string(*img)) : json(nullptr)).dump() << "\n";
      else out << (img ? to_string(*img) : "undefined") << "\n";
      return img ? kOk : kRefuted;
    }
    if (*rect_cmd) {
      const Tableau t = tableau_from_json(read_json_arg(rect_tableau));
      std::mt19937_64 rng(seed);
      std::vector<std::string> trace;
      const Tableau r = rectify(t, [&](const std::vector<Cell>& cs) {
        Cell c = cs.back();
        if (rect_random) c = cs[std::uniform_int_distribution<std::size_t>(0, cs.size() - 1)(rng)];
        trace.push_back(to_string(c));
        return c;
      });
      if (as_json) {
        json doc = to_json(r);
        if (rect_trace) doc["slides"] = trace;
        out << doc.dump() << "\n";
      } else {
        if (rect_trace) {
          out << "slides:";
          for (const auto& c : trace) out << " " << c;
          out << "\n";
        }
        print_tableau(r, out);
      }
      return kOk;
    }
    if (*lr_cmd) {
      const Tableau t = tableau_from_json(read_json_arg(lr_tableau));
      const bool lr = is_littlewood_richardson(t);
      if (as_json) out << json{{"lr", lr}}.dump() << "\n";
      else out << (lr ? "Littlewood-Richardson" : "not Littlewood-Richardson") << "\n";
      return kOk;
    }
    if (*en_cmd) {
      const ShiftedShape sh = en_shape.get();
      std::size_t count = 0;
      json list = json::array();
      for_each_filling(sh, en_n, [&](const Str& s) {
        ++count;
        if (en_count) return;
        const Tableau t(sh, s);
        if (as_json) {
          list.push_back(to_json(t));
        } else {
          out << to_string(s) << "\n";
        }
      });
      if (as_json) out << (en_count ? json{{"count", count}} : list).dump() << "\n";
      else if (en_count) out << count << "\n";
      return kOk;
    }
    if (*cr_cmd) {
      const CrystalGraph cg = build(cr_shape.get(), cr_n);
      const std::string text = cr_format == "json" ? to_json(cg).dump(1) + "\n" : to_dot(cg);
      if (cr_output.empty()) {
        out << text;
      } else {
        std::ofstream f(cr_output);
        if (!f) throw ParseError("cannot write " + cr_output);
        f << text;
      }
      return kOk;
    }
    if (*lc_cmd) {
      const auto coeffs = lr_coefficients(build(lc_shape.get(), lc_n));
      json doc = json::object();
      for (const auto& [nu, c] : coeffs) doc[partition_key(nu)] = c;
      out << doc.dump() << "\n";
      return kOk;
    }
    if (*gf_cmd) {
      const QPolynomial p = generating_function(gf_shape.get(), gf_n);
      if (as_json) {
        json terms = json::array();
        for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", c}});
        out << json{{"vars", p.variables()}, {"terms", terms}}.dump() << "\n";
      } else {
        out << p.to_string() << "\n";
      }
      return kOk;
    }
    if (*vf_cmd) {
      LabeledGraph g = load_graph(read_json_arg(vf_input));
      std::string mutation;
      if (vf_mutate >= 0) {
        auto ms = single_edge_mutations(g);
        if (static_cast<std::size_t>(vf_mutate) >= ms.size())
          throw ParseError("--mutate " + std::to_string(vf_mutate) + " out of range (" + std::to_string(ms.size()) +
                           " mutations)");
        mutation = ms[static_cast<std::size_t>(vf_mutate)].description;
        g = std::move(ms[static_cast<std::size_t>(vf_mutate)].graph);
      }
      const Verification v = verify(g);
      if (as_json) {
        json viol = json::array();
        for (const auto& x : v.report.violations)
          viol.push_back({{"axiom", x.axiom}, {"witness", x.witness}, {"detail", x.detail}});
        json certs = json::array();
        for (const auto& c : v.certificates) {
          json cj{{"ok", c.ok}, {"vertices", c.component}};
          if (c.ok) cj["lambda"] = c.lambda.parts();
          else cj["refutation"] = c.refutation;
          certs.push_back(cj);
        }
        json doc{{"certified", v.certified()}, {"checked", v.report.checked}, {"violations", viol},
                 {"components", certs}};
        if (!mutation.empty()) doc["mutation"] = mutation;
        out << doc.dump(1) << "\n";
      } else {
        if (!mutation.empty()) out << "mutation: " << mutation << "\n";
        for (const auto& [ax, n] : v.report.checked) out << "checked " << ax << ": " << n << "\n";
        for (const auto& x : v.report.violations)
          out << "VIOLATION " << x.axiom << " at " << g.display(x.witness) << ": " << x.detail << "\n";
        for (const auto& c : v.certificates) {
          if (c.ok) out << "component of " << c.component.size() << " vertices ~ ShST((" << partition_key(c.lambda)
                        << "), " << g.rank() << ")\n";
          else out << "component of " << c.component.size() << " vertices NOT certified: " << c.refutation << "\n";
        }
        out << (v.certified() ? "certified" : "not certified") << "\n";
      }
      return v.certified() ? kOk : kRefuted;
    }
    if (*st_cmd) {
      if (st_full && st_quick) throw ParseError("choose one of --quick and --full");
      const auto results = selftest::run_all(st_full ? selftest::Tier::full : selftest::Tier::quick, &out);
      std::size_t passed = 0;
      for (const auto& r : results) passed += r.passed;
      out << passed << "/" << results.size() << " criteria passed\n";
      return passed == results.size() ? kOk : kRefuted;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IntegrityError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
