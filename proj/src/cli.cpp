#include "cubical/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cubical/axioms.hpp"
#include "cubical/content.hpp"
#include "cubical/families.hpp"
#include "cubical/representation.hpp"
#include "cubical/stochastic.hpp"
#include "cubical/text_format.hpp"

namespace cubical {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// A .tks document, or the G-system of a .fam family (no theta, no xi).
SystemDocument load(const std::string& path) {
  const std::string text = read_file(path);
  if (ends_with(path, ".fam")) {
    FamilyDocument fam = parse_fam(text);
    return SystemDocument{GSystem::build(std::move(fam.graph)).system(), std::nullopt, std::nullopt, false};
  }
  return parse_tks(text);
}

std::string fixed(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 12);
  return std::string(buf, ptr);
}

/// Prints the first failing cubical axiom; true when the system is cubical.
bool report_if_not_cubical(const TokenSystem& sys, std::ostream& out) {
  for (Axiom a : {Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4}) {
    const AxiomVerdict v = check_axiom(sys, a);
    if (!v.holds) {
      out << "not cubical: " << describe(sys, v) << '\n';
      return false;
    }
  }
  return true;
}

struct Options {
  std::string file;
  std::vector<std::string> axioms;
  std::size_t bound = 0;
  bool verbose = false;
  std::string base;
  std::string state;
  std::optional<std::size_t> steps;
  std::uint64_t seed = 42;
  std::size_t chains = 1;
  std::string family;
  std::size_t n = 3;
  std::size_t dims = 2;
  std::size_t extent = 2;
  std::size_t members = 16;
  double edge_p = 0.5;
  bool large = false;
  std::string name = "cubical";
};

int cmd_check(const Options& o, std::ostream& out) {
  const SystemDocument doc = load(o.file);
  std::vector<Axiom> axioms;
  if (o.axioms.empty()) axioms = {Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4};
  for (const auto& name : o.axioms) {
    auto a = parse_axiom(name);
    if (!a) throw Error(ErrorCode::InvalidArgument, "unknown axiom '" + name + "'");
    axioms.push_back(*a);
  }
  CheckOptions opts;
  opts.bound = o.bound;
  bool ok = true;
  for (Axiom a : axioms) {
    const AxiomVerdict v = check_axiom(doc.system, a, opts);
    out << describe(doc.system, v) << '\n';
    ok = ok && v.holds;
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const SystemDocument doc = load(o.file);
  CheckOptions opts;
  opts.bound = o.bound;
  const Classification c = classify(doc.system, opts);
  out << to_string(c.kind) << '\n';
  if (o.verbose)
    for (const auto& v : c.verdicts) out << describe(doc.system, v) << '\n';
  return kOk;
}

int cmd_embed(const Options& o, std::ostream& out) {
  const SystemDocument doc = load(o.file);
  const TokenSystem& sys = doc.system;
  if (!report_if_not_cubical(sys, out)) return kCheckFailed;
  std::optional<StateId> base;
  if (!o.base.empty()) base = sys.state(o.base);
  const Embedding e = embed(sys, base);
  auto set_name = [&](Subset s) {
    std::string r = "{";
    for (std::size_t i : s.elements()) r += (r.size() > 1 ? "," : "") + e.labels[i];
    return r + "}";
  };
  out << "base\t" << sys.state_name(e.base) << '\n';
  for (StateId s : sys.states()) out << "state\t" << sys.state_name(s) << '\t' << set_name(e.alpha[s.value]) << '\n';
  for (TokenId t : sys.tokens()) {
    const auto [label, adds] = e.beta[t.value];
    out << "token\t" << sys.token_name(t) << '\t' << (adds ? '+' : '-') << e.labels[label] << '\n';
  }
  const bool verified = verify_embedding(sys, e);
  out << "isomorphism\t" << (verified ? "verified" : "failed") << '\n';
  return verified ? kOk : kCheckFailed;
}

int cmd_content(const Options& o, std::ostream& out) {
  const SystemDocument doc = load(o.file);
  const TokenSystem& sys = doc.system;
  if (!report_if_not_cubical(sys, out)) return kCheckFailed;
  const StateContents contents(sys);
  std::vector<StateId> which = sys.states();
  if (!o.state.empty()) which = {sys.state(o.state)};
  for (StateId s : which) out << sys.state_name(s) << ": " << format_content(sys, contents.of(s)) << '\n';
  return kOk;
}

StochasticSystem chain_of(const SystemDocument& doc) {
  if (!doc.theta) throw Error(ErrorCode::DistributionError, "the document has no theta line");
  std::vector<double> xi = doc.xi.value_or(uniform_distribution(doc.system.num_states()));
  return StochasticSystem::build(doc.system, std::move(xi), *doc.theta);
}

int cmd_stationary(const Options& o, std::ostream& out) {
  const SystemDocument doc = load(o.file);
  if (!report_if_not_cubical(doc.system, out)) return kCheckFailed;
  const StochasticSystem chain = chain_of(doc);
  const auto closed = stationary_closed_form(chain);
  const auto solved = stationary_solve(chain);
  std::optional<std::vector<double>> empirical;
  if (o.steps) {
    const auto counts = simulate_counts(chain, o.seed, *o.steps, o.chains);
    Trajectory merged;
    merged.counts = counts;
    empirical = merged.frequencies();
  }
  out << "state\tclosed_form\tsolved" << (empirical ? "\tempirical" : "") << '\n';
  for (StateId s : doc.system.states()) {
    out << doc.system.state_name(s) << '\t' << fixed(closed[s.value]) << '\t' << fixed(solved[s.value]);
    if (empirical) out << '\t' << fixed((*empirical)[s.value]);
    out << '\n';
  }
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const SystemDocument doc = load(o.file);
  if (!report_if_not_cubical(doc.system, out)) return kCheckFailed;
  const StochasticSystem chain = chain_of(doc);
  if (o.chains == 0) throw Error(ErrorCode::InvalidArgument, "--chains must be at least 1");
  const auto counts = simulate_counts(chain, o.seed, o.steps.value_or(1'000'000), o.chains);
  Trajectory merged;
  merged.counts = counts;
  const auto freq = merged.frequencies();
  out << "state\tcount\tfrequency\n";
  for (StateId s : doc.system.states())
    out << doc.system.state_name(s) << '\t' << counts[s.value] << '\t' << fixed(freq[s.value]) << '\n';
  return kOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const EnumerationBudget budget{o.large};
  FamilyDocument doc;
  if (o.family == "comparability") {
    doc.graph.family = comparability_family(o.n, budget);
  } else if (o.family == "partial-orders") {
    doc.graph.family = partial_order_family(o.n, budget);
  } else if (o.family == "ac-orders") {
    doc.graph.family = ac_order_family(o.n, budget);
  } else if (o.family == "lattice") {
    doc.graph.family = lattice_window(o.dims, o.extent).family();
  } else if (o.family == "cube") {
    if (o.n == 0 || o.n > 12) throw Error(ErrorCode::InvalidArgument, "cube size must be in 1..12");
    for (std::size_t i = 0; i < o.n; ++i) doc.graph.family.ground.push_back(element_name(i));
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << o.n); ++b) doc.graph.family.members.emplace_back(b);
  } else if (o.family == "random") {
    std::mt19937_64 rng(o.seed);
    doc.graph = random_cube_graph(o.n, o.members, o.edge_p, rng);
    doc.explicit_edges = true;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + o.family + "'");
  }
  out << format_fam(doc);
  return kOk;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const SystemDocument doc = load(o.file);
  if (!report_if_not_cubical(doc.system, out)) return kCheckFailed;
  out << to_dot(doc.system, system_graph(doc.system), o.name);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cubical token systems: axioms, embeddings, contents and random walks.", "cubical"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Check axioms (default C1-C4); exit 1 on a failure");
  check->add_option("file", o.file, ".tks or .fam input")->required();
  check->add_option("--axiom", o.axioms, "C1, C2, C3, C4, Ma or Mb; repeatable");
  check->add_option("--bound", o.bound, "Message length for bounded checks (default 2|S|)");

  auto* cls = app.add_subcommand("classify", "Print medium, cubical_not_medium or not_cubical");
  cls->add_option("file", o.file)->required();
  cls->add_option("--bound", o.bound);
  cls->add_flag("--verbose", o.verbose, "Print every verdict");

  auto* emb = app.add_subcommand("embed", "Embed into a cube and verify the isomorphism");
  emb->add_option("file", o.file)->required();
  emb->add_option("--base", o.base, "State mapped to the empty set");

  auto* con = app.add_subcommand("content", "Print state contents");
  con->add_option("file", o.file)->required();
  con->add_option("--state", o.state);

  auto* sta = app.add_subcommand("stationary", "Stationary distribution: closed form, solved, empirical");
  sta->add_option("file", o.file)->required();
  sta->add_option("--steps", o.steps, "Also simulate this many steps");
  sta->add_option("--seed", o.seed);
  sta->add_option("--chains", o.chains);

  auto* sim = app.add_subcommand("simulate", "Visit counts of seeded random walks");
  sim->add_option("file", o.file)->required();
  sim->add_option("--steps", o.steps, "Steps per chain (default 1000000)");
  sim->add_option("--seed", o.seed, "Seed of the first chain; chain c uses seed + c");
  sim->add_option("--chains", o.chains, "Independent chains run concurrently");

  auto* gen = app.add_subcommand("generate", "Emit a family in .fam format");
  gen->add_option("family", o.family, "comparability, partial-orders, ac-orders, lattice, cube or random")
      ->required();
  gen->add_option("--n", o.n, "Ground size (relations: points; random: ground elements)");
  gen->add_option("--dims", o.dims);
  gen->add_option("--extent", o.extent);
  gen->add_option("--members", o.members, "Random: maximum number of members");
  gen->add_option("--edge-p", o.edge_p, "Random: probability of keeping a non-tree edge");
  gen->add_option("--seed", o.seed);
  gen->add_flag("--large", o.large, "Allow n = 5 for relation families");

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of the system graph");
  dot->add_option("file", o.file)->required();
  dot->add_option("--name", o.name);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (emb->parsed()) return cmd_embed(o, out);
    if (con->parsed()) return cmd_content(o, out);
    if (sta->parsed()) return cmd_stationary(o, out);
    if (sim->parsed()) return cmd_simulate(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
    if (dot->parsed()) return cmd_export_dot(o, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace cubical
