// Command line front end: builds algebras from .alg files, runs the bundled
// example pipelines, and exposes the module calculus (decompositions, AR
// translates, almost split sequences, approximations, mutations).
//
// Exit codes: 0 success / accepted, 1 mathematical rejection, 2 bad usage or
// bad input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "argen/algfile.hpp"
#include "argen/examples.hpp"
#include "argen/report.hpp"

namespace {

using namespace argen;

constexpr const char* kGrammar = R"(Algebra file grammar (one directive per line, '#' comments):
  prime <p>                    coefficient field F_p (overridable with --field)
  vertices <n>                 vertex count; vertices are written 1..n
  arrow <label>: <i> -> <j>    arrow from vertex i to vertex j
  bound <L>                    all paths of length >= L vanish
  relation <t> [+|- <t>]...    each term t is [<int>*]<label>[*<label>]...
                               in a word x*y the arrow x is traversed first

Example (two vertices, two loops, radical cube zero):
  prime 2
  vertices 2
  arrow c: 1 -> 1
  arrow a: 1 -> 2
  arrow b: 2 -> 1
  arrow d: 2 -> 2
  bound 3
  relation c*c - a*b
  relation c*a
  relation a*d
  relation b*c
  relation d*b
  relation d*d - b*a

Module expressions (for --module): P1, S2, I1, P1/soc, P1/soc^2, r(P2),
r^2(P1), tau^-2(S1), tau^1(P1/soc), and sums like P1+S2+tau^-1(S1).)";

std::string trimmed(std::string s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

int parse_vertex(const AlgebraPtr& alg, const std::string& expr,
                 std::size_t pos) {
  int v = std::stoi(expr.substr(pos)) - 1;
  if (v < 0 || v >= alg->num_vertices())
    throw std::runtime_error("vertex out of range in '" + expr + "'");
  return v;
}

Rep parse_term(const AlgebraPtr& alg, std::string expr) {
  expr = trimmed(expr);
  if (expr.rfind("tau^", 0) == 0) {
    std::size_t open = expr.find('(');
    if (open == std::string::npos || expr.back() != ')')
      throw std::runtime_error("bad tau expression '" + expr + "'");
    int k = std::stoi(expr.substr(4, open - 4));
    Rep inner = parse_term(alg, expr.substr(open + 1,
                                            expr.size() - open - 2));
    for (int i = 0; i < (k > 0 ? k : -k); ++i)
      inner = k > 0 ? tau(inner) : tau_inverse(inner);
    return inner;
  }
  if (expr.rfind("r(P", 0) == 0 && expr.back() == ')') {
    Rep p = Rep::projective(alg, parse_vertex(alg, expr, 3));
    return sub_rep(p, radical_power_sub(p, 1)).first;
  }
  if (expr.rfind("r^2(P", 0) == 0 && expr.back() == ')') {
    Rep p = Rep::projective(alg, parse_vertex(alg, expr, 5));
    return sub_rep(p, radical_power_sub(p, 2)).first;
  }
  if (expr[0] == 'S') return Rep::simple(alg, parse_vertex(alg, expr, 1));
  if (expr[0] == 'I') return Rep::injective(alg, parse_vertex(alg, expr, 1));
  if (expr[0] == 'P') {
    std::size_t slash = expr.find('/');
    int v = parse_vertex(alg, expr.substr(0, slash), 1);
    Rep p = Rep::projective(alg, v);
    if (slash == std::string::npos) return p;
    std::string suffix = expr.substr(slash + 1);
    if (suffix == "soc") return quotient_rep(p, socle_power_sub(p, 1)).first;
    if (suffix == "soc^2")
      return quotient_rep(p, socle_power_sub(p, 2)).first;
  }
  throw std::runtime_error("cannot parse module expression '" + expr + "'");
}

Rep parse_module(const AlgebraPtr& alg, const std::string& expr) {
  std::vector<Rep> parts;
  std::string term;
  int depth = 0;
  for (char ch : expr) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0) {
      parts.push_back(parse_term(alg, term));
      term.clear();
    } else {
      term += ch;
    }
  }
  parts.push_back(parse_term(alg, term));
  return parts.size() == 1 ? parts[0] : direct_sum(parts).sum;
}

void emit_json(const std::string& path, const ordered_json& j) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string dims_str(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i)
    s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

void print_cert(const MutationCertificate& c) {
  std::cout << (c.accepted ? "accepted" : "rejected") << " [" << c.branch
            << "] " << c.reason << "\n";
  if (c.stable_hom_dim >= 0)
    std::cout << "  stable hom dimension onto the exchanged entry: "
              << c.stable_hom_dim << "\n";
}

ordered_json flow_json(const FlowResult& f) {
  ordered_json steps = ordered_json::array();
  for (const FlowStep& s : f.steps)
    steps.push_back(ordered_json{{"at", s.position}, {"cert", to_json(s.cert)}});
  ordered_json j{{"hypotheses", to_json(f.hyp)},
                 {"initial", to_json(f.stages.front())},
                 {"steps", std::move(steps)},
                 {"final", to_json(f.final_set())}};
  if (f.has_rejection) {
    j["rejection"] = to_json(f.rejection);
    j["rejected_candidate"] = to_json(f.rejected_candidate);
  }
  j["closure_matches_shift"] = f.closure_matches_shift;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Generator mutation calculus for bounded path algebras over prime "
      "fields"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  std::uint32_t field = 0;
  std::uint64_t seed = DecomposeOptions{}.seed;
  std::string json_out;
  app.add_option("--field", field, "prime p overriding the file's field");
  app.add_option("--seed", seed, "seed for randomized splitting");
  app.add_option("--json", json_out, "write a JSON report here ('-' = stdout)");

  int example_no = 1;
  auto* ex = app.add_subcommand("example", "run a bundled example pipeline");
  ex->add_option("number", example_no, "example number (1, 2 or 3)")
      ->required()
      ->check(CLI::Range(1, 3));

  std::string alg_path, at_name, module_expr, strategy = "all", side = "M";
  std::string set_name = "m0", dot_out;
  int set_shift = 0, budget = 12, radius = 3, power = -1;
  bool via_shift = false;

  auto add_alg = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", alg_path, "algebra description file")
        ->required()
        ->check(CLI::ExistingFile);
  };

  auto* chk = app.add_subcommand("check", "validate the standing hypotheses");
  add_alg(chk);

  auto* mut = app.add_subcommand("mutate", "exchange one generator entry");
  add_alg(mut);
  mut->add_option("--at", at_name, "entry to exchange (name or base)")
      ->required();
  mut->add_option("--set", set_name, "starting set: m0 or l0");
  mut->add_option("--set-shift", set_shift,
                  "translate the non-projective part first");
  mut->add_flag("--via-shift", via_shift,
                "exchange inside the translated set and translate back");

  auto* exp = app.add_subcommand("explore",
                                 "closure of the canonical set under "
                                 "accepted exchanges");
  add_alg(exp);
  exp->add_option("--budget", budget, "maximum number of generator sets");
  exp->add_option("--strategy", strategy, "all | simples-first");
  exp->add_option("--side", side, "M | L");
  exp->add_option("--dot", dot_out, "write the mutation graph here");

  auto* dec = app.add_subcommand("decompose", "split a module into "
                                              "indecomposables");
  add_alg(dec);
  dec->add_option("--module", module_expr, "module expression")->required();

  auto* tr = app.add_subcommand("tau", "AR translate of a module");
  add_alg(tr);
  tr->add_option("--module", module_expr, "module expression")->required();
  tr->add_option("--power", power, "tau power, negative for tau^-1 (default -1)");

  auto* ar = app.add_subcommand("ar", "almost split sequence starting at a "
                                      "module");
  add_alg(ar);
  ar->add_option("--module", module_expr, "module expression")->required();

  auto* win = app.add_subcommand("verify-window",
                                 "length-one resolutions across a tau "
                                 "window of the canonical set");
  add_alg(win);
  win->add_option("--radius", radius, "tau closure radius");
  win->add_option("--set", set_name, "starting set: m0 or l0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    DecomposeOptions opts;
    opts.seed = seed;

    if (ex->parsed()) {
      FlowResult f = run_example(example_no, field ? field : 2, opts);
      std::cout << "hypotheses: rad^3=0=" << f.hyp.rad_cube_zero
                << " selfinjective=" << f.hyp.selfinjective
                << " weakly symmetric=" << f.hyp.weakly_symmetric << "\n";
      std::cout << "start: " << f.stages.front().describe() << "\n";
      for (const FlowStep& s : f.steps) {
        std::cout << "exchange at " << s.position << ": ";
        print_cert(s.cert);
      }
      std::cout << "final: " << f.final_set().describe() << "\n";
      if (example_no == 1)
        std::cout << "closure matches translated start: "
                  << (f.closure_matches_shift ? "yes" : "no") << "\n";
      if (f.has_rejection) {
        std::cout << "candidate exchange: ";
        print_cert(f.rejection);
      }
      emit_json(json_out, flow_json(f));
      return 0;
    }

    AlgebraPtr alg = build_algebra(parse_alg_file(alg_path), field);

    if (chk->parsed()) {
      const HypothesesReport& h = validate_hypotheses(alg);
      std::cout << "rad^3 = 0:        " << (h.rad_cube_zero ? "yes" : "no")
                << "\nselfinjective:    " << (h.selfinjective ? "yes" : "no")
                << "\nweakly symmetric: " << (h.weakly_symmetric ? "yes" : "no")
                << "\n";
      emit_json(json_out, to_json(h));
      return h.fast_branch_ok() ? 0 : 1;
    }

    if (mut->parsed()) {
      GeneratorSet g = set_name == "l0" ? canonical_l0(alg, opts)
                                        : canonical_m0(alg, opts);
      if (set_shift) g = shift(g, set_shift, opts);
      std::size_t idx = g.entries.size();
      for (std::size_t i = 0; i < g.entries.size(); ++i)
        if (g.entries[i].name() == at_name || g.entries[i].base == at_name)
          idx = i;
      if (idx == g.entries.size())
        throw std::runtime_error("no entry named '" + at_name + "' in " +
                                 g.describe());
      MutationResult r = via_shift ? mutate_via_shift(g, idx, opts)
                                   : mutate(g, idx, opts);
      print_cert(r.cert);
      if (r.cert.accepted)
        std::cout << "new set: " << r.gens.describe() << "\n";
      emit_json(json_out, to_json(r.cert));
      return r.cert.accepted ? 0 : 1;
    }

    if (exp->parsed()) {
      if (side != "M" && side != "L")
        throw std::runtime_error("--side must be M or L");
      Family f = enumerate_family(alg, budget, strategy, side[0], opts);
      std::cout << f.nodes.size() << " generator sets (" << f.attempted
                << " exchanges attempted)\n";
      for (std::size_t i = 0; i < f.nodes.size(); ++i)
        std::cout << "  [" << i << "] " << f.nodes[i].gens.describe() << "\n";
      if (!dot_out.empty()) {
        std::ofstream out(dot_out);
        if (!out) throw std::runtime_error("cannot write " + dot_out);
        out << family_dot(f);
      }
      emit_json(json_out, to_json(f));
      return 0;
    }

    if (dec->parsed()) {
      Rep x = parse_module(alg, module_expr);
      Decomposition d = decompose(x, opts);
      std::cout << "dims " << dims_str(x.dims()) << " splits into "
                << d.total_indecomposables() << " indecomposables"
                << (d.certified ? "" : " (uncertified)") << ":\n";
      ordered_json parts = ordered_json::array();
      for (const Summand& s : d.summands) {
        std::string name = describe_module(alg, s.rep, 3, opts);
        std::cout << "  " << s.multiplicity << " x " << name << " "
                  << dims_str(s.rep.dims()) << "\n";
        parts.push_back(ordered_json{{"name", name},
                                     {"dims", s.rep.dims()},
                                     {"multiplicity", s.multiplicity}});
      }
      emit_json(json_out, ordered_json{{"certified", d.certified},
                                       {"summands", std::move(parts)}});
      return 0;
    }

    if (tr->parsed()) {
      Rep x = parse_module(alg, module_expr);
      for (int i = 0; i < (power > 0 ? power : -power); ++i)
        x = power > 0 ? tau(x) : tau_inverse(x);
      std::cout << describe_module(alg, x, 3, opts) << " " << dims_str(x.dims())
                << "\n";
      emit_json(json_out, to_json(x));
      return 0;
    }

    if (ar->parsed()) {
      Rep n = parse_module(alg, module_expr);
      ARSequence s = almost_split_starting_at(n, opts);
      std::cout << "0 -> " << describe_module(alg, s.seq.sub(), 3, opts)
                << " -> " << describe_module(alg, s.seq.mid(), 3, opts)
                << " -> " << describe_module(alg, s.seq.quot(), 3, opts)
                << " -> 0\n";
      Decomposition mid = decompose(s.seq.mid(), opts);
      std::cout << "middle term:";
      for (const Summand& su : mid.summands)
        std::cout << " " << su.multiplicity << "x"
                  << describe_module(alg, su.rep, 3, opts);
      std::cout << "\n";
      emit_json(json_out,
                ordered_json{{"sub", to_json(s.seq.sub())},
                             {"mid", to_json(s.seq.mid())},
                             {"quot", to_json(s.seq.quot())}});
      return 0;
    }

    if (win->parsed()) {
      GeneratorSet g = set_name == "l0" ? canonical_l0(alg, opts)
                                        : canonical_m0(alg, opts);
      WindowReport w = window_verify(g.reps(), radius, opts);
      for (const auto& e : w.entries)
        std::cout << (e.ok ? "  ok  " : " FAIL ") << e.name << " "
                  << dims_str(e.dims) << " relative pd "
                  << (e.rel_pd > 1 ? ">1" : std::to_string(e.rel_pd)) << "\n";
      std::cout << (w.all_ok ? "window verified" : "window has failures")
                << "\n";
      emit_json(json_out, to_json(w));
      return w.all_ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
