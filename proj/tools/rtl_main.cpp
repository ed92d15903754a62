// Command line front end: ring inspection, derived-graph export, topological
// invariants with certificates, book thickness, and the claim census.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rtl/anngraph.hpp"
#include "rtl/book.hpp"
#include "rtl/census.hpp"
#include "rtl/embed.hpp"
#include "rtl/errors.hpp"
#include "rtl/finring.hpp"
#include "rtl/graph.hpp"

namespace {

using namespace rtl;

// Literal file paths win; anything else must parse as a ring expression.
bool input_is_file(const std::string& input) {
  if (std::filesystem::exists(input)) return true;
  if (input.ends_with(".json"))
    throw IoError("no such file: " + input);
  return false;
}

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream ifs(path, std::ios::binary);
  if (!ifs) throw IoError("cannot open " + path);
  ordered_json j;
  try {
    j = ordered_json::parse(ifs);
  } catch (const std::exception& e) {
    throw IoError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return graph_from_json(j);
}

SimpleGraph ring_line_graph(const std::string& expr) {
  FiniteRing r = build_ring(parse_ring_expr(expr));
  return line_graph(annihilator_graph(r));
}

// topo/book inputs: a graph JSON file is taken as-is; a ring expression
// stands for the line graph of its annihilator graph.
SimpleGraph load_subject_graph(const std::string& input) {
  if (input_is_file(input)) return read_graph_file(input);
  return ring_line_graph(input);
}

void emit_json(const ordered_json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream ofs(out_path, std::ios::binary);
  if (!ofs) throw IoError("cannot open " + out_path + " for writing");
  ofs << text;
  if (!ofs) throw IoError("failed writing " + out_path);
}

std::string label_list(const FiniteRing& r, const std::vector<int>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ", ";
    s += r.labels[static_cast<std::size_t>(ids[i])];
  }
  return s;
}

int cmd_ring_info(const std::string& expr) {
  RingExpr e = parse_ring_expr(expr);
  FiniteRing r = build_ring(e);
  auto zd = zero_divisors(r);
  auto nil = nilpotents(r);
  auto un = units(r);
  auto loc = is_local(r);
  std::printf("expr: %s\n", expr.c_str());
  std::printf("canonical: %s\n", ring_expr_to_string(e).c_str());
  std::printf("order: %d\n", r.order);
  std::printf("characteristic: %d\n", characteristic(r));
  std::printf("local: %s\n", loc.local ? "yes" : "no");
  if (loc.local)
    std::printf("maximal ideal (%zu): %s\n", loc.maximal_ideal.size(),
                label_list(r, loc.maximal_ideal).c_str());
  std::printf("units (%zu): %s\n", un.size(), label_list(r, un).c_str());
  std::printf("zero-divisors (%zu): %s\n", zd.size(),
              label_list(r, zd).c_str());
  std::printf("nilpotents (%zu): %s\n", nil.size(),
              label_list(r, nil).c_str());
  return 0;
}

ordered_json witness_json(const std::string& obstruction,
                          const SubdivisionWitness& w) {
  ordered_json j;
  j["obstruction"] = obstruction;
  j["branch"] = w.branch;
  j["paths"] = w.paths;
  return j;
}

// Shared tail for topo: attach the certificate inline or to a file.
void attach_certificate(ordered_json* out, const ordered_json& cert,
                        const std::string& cert_path) {
  if (cert_path.empty()) {
    (*out)["certificate"] = cert;
    return;
  }
  emit_json(cert, cert_path);
  (*out)["certificate_path"] = cert_path;
}

int cmd_topo(const std::string& invariant, const std::string& input,
             const Budget& budget, const std::string& cert_path) {
  SimpleGraph g = load_subject_graph(input);
  ordered_json out;
  out["invariant"] = invariant;
  out["vertices"] = g.n;
  out["edges"] = g.edge_count();
  try {
    if (invariant == "planar") {
      PlanarityResult p = is_planar(g, budget);
      out["value"] = p.planar;
      if (p.planar && p.embedding)
        attach_certificate(&out, embedding_to_json(g, *p.embedding),
                           cert_path);
      if (!p.planar) {
        out["obstruction"] = p.obstruction;
        if (p.witness)
          attach_certificate(&out, witness_json(p.obstruction, *p.witness),
                             cert_path);
      }
    } else if (invariant == "outerplanar") {
      OuterplanarityResult o = is_outerplanar(g, budget);
      out["value"] = o.outerplanar;
      if (o.outerplanar) {
        out["outer_order"] = o.outer_order;
      } else {
        out["obstruction"] = o.obstruction;
        if (o.witness)
          attach_certificate(&out, witness_json(o.obstruction, *o.witness),
                             cert_path);
      }
    } else if (invariant == "genus" || invariant == "crosscap") {
      BoundedInvariant b = invariant == "genus" ? min_genus(g, budget)
                                                : min_crosscap(g, budget);
      out["lower"] = b.lower;
      out["upper"] = b.upper >= 0 ? ordered_json(b.upper)
                                  : ordered_json(nullptr);
      out["exact"] = b.exact;
      out["method"] = b.method;
      out["nodes"] = b.nodes_used;
      if (b.certificate)
        attach_certificate(&out, embedding_to_json(g, *b.certificate),
                           cert_path);
    } else {  // opindex | ivn
      LayerResult lr = invariant == "opindex"
                           ? outerplanarity_index(g, budget)
                           : inner_vertex_number(g, budget);
      out["value"] = lr.value;
      ordered_json cert;
      cert["embedding"] = embedding_to_json(g, lr.embedding);
      cert["outer_face"] = lr.outer_face;
      attach_certificate(&out, cert, cert_path);
    }
  } catch (const BudgetExhausted& e) {
    out["decided"] = false;
    out["reason"] = e.what();
  }
  emit_json(out, "");
  return 0;
}

int cmd_book(const std::string& input, const Budget& budget) {
  SimpleGraph g = load_subject_graph(input);
  BookResult b = book_thickness(g, budget);
  ordered_json out;
  out["invariant"] = "book";
  out["vertices"] = g.n;
  out["edges"] = g.edge_count();
  out["lower"] = b.lower;
  out["upper"] = b.upper >= 0 ? ordered_json(b.upper) : ordered_json(nullptr);
  out["exact"] = b.exact;
  out["method"] = b.method;
  out["nodes"] = b.nodes_used;
  if (b.witness) out["witness"] = book_embedding_to_json(*b.witness);
  emit_json(out, "");
  return 0;
}

int cmd_census(const std::string& suite, bool extended,
               const std::string& report_dir, int workers, bool strict) {
  auto s = suite_from_name(suite);
  if (!s) throw InvalidParameter("unknown suite: " + suite);
  SuiteOptions opt;
  opt.suite = *s;
  opt.budget = extended ? extended_budget() : default_budget();
  opt.profile = extended ? "extended" : "default";
  opt.workers = workers;
  opt.report_dir = report_dir;
  SuiteSummary sum = run_suite(opt);
  std::printf("suite: %s (profile %s)\n", suite_name(*s).c_str(),
              opt.profile.c_str());
  std::printf(
      "rings: %d  claims: %d  matches: %d  mismatches: %d (expected %d)  "
      "undecided: %d\n",
      sum.rings, sum.claims, sum.matches, sum.mismatches,
      sum.expected_mismatches, sum.undecided);
  for (const auto& f : sum.findings)
    std::printf("finding: %s\n", f.c_str());
  std::printf("report: %s/%s.json\n", report_dir.c_str(),
              suite_name(*s).c_str());
  if (sum.mismatches > sum.expected_mismatches) return 1;
  if (strict && sum.undecided > 0) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification toolkit for line graphs of annihilator graphs of "
      "finite commutative rings"};
  app.require_subcommand(1);

  // ring info
  auto* ring = app.add_subcommand("ring", "Ring-level queries");
  ring->require_subcommand(1);
  auto* info = ring->add_subcommand("info", "Order, units, zero-divisors, "
                                            "nilpotents, locality");
  std::string info_expr;
  info->add_option("expr", info_expr, "ring expression")->required();

  // ag build
  auto* ag = app.add_subcommand("ag", "Annihilator graph commands");
  ag->require_subcommand(1);
  auto* agb = ag->add_subcommand("build", "Emit AG(R) as graph JSON");
  std::string ag_expr, ag_out;
  agb->add_option("expr", ag_expr, "ring expression")->required();
  agb->add_option("--out", ag_out, "output file (default stdout)");

  // line
  auto* line = app.add_subcommand(
      "line", "Emit the line graph of a graph JSON file or of AG(R)");
  std::string line_input, line_out;
  line->add_option("input", line_input, "graph JSON file or ring expression")
      ->required();
  line->add_option("--out", line_out, "output file (default stdout)");

  // topo
  auto* topo = app.add_subcommand("topo",
                                  "Topological invariant with certificate");
  std::string topo_inv, topo_input, topo_cert;
  std::optional<std::uint64_t> topo_nodes;
  std::optional<double> topo_seconds;
  topo->add_option("invariant", topo_inv, "which invariant")
      ->required()
      ->check(CLI::IsMember(
          {"planar", "outerplanar", "genus", "crosscap", "opindex", "ivn"}));
  topo->add_option("input", topo_input, "graph JSON file or ring expression")
      ->required();
  topo->add_option("--budget-nodes", topo_nodes, "search node budget");
  topo->add_option("--budget-seconds", topo_seconds,
                   "wall clock budget (0 disables)");
  topo->add_option("--cert", topo_cert,
                   "write the certificate to this file instead of inline");

  // book
  auto* book = app.add_subcommand("book", "Book thickness with witness");
  std::string book_input;
  std::optional<std::uint64_t> book_nodes;
  std::optional<double> book_seconds;
  book->add_option("input", book_input, "graph JSON file or ring expression")
      ->required();
  book->add_option("--budget-nodes", book_nodes, "search node budget");
  book->add_option("--budget-seconds", book_seconds,
                   "wall clock budget (0 disables)");

  // census run
  auto* census = app.add_subcommand("census", "Claim census");
  census->require_subcommand(1);
  auto* run = census->add_subcommand("run", "Classify rings and verify the "
                                            "claim catalog");
  std::string suite, report_dir;
  bool extended = false, strict = false;
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  run->add_option("--suite", suite,
                  "planarity | genus | crosscap | book | all")
      ->required();
  run->add_option("--report-dir", report_dir, "report output directory")
      ->required();
  run->add_flag("--extended", extended,
                "use the extended search budget profile");
  run->add_option("--workers", workers, "parallel ring workers");
  run->add_flag("--strict", strict,
                "exit 3 when any claim is undecided at budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmd_ring_info(info_expr);
    if (*agb) {
      FiniteRing r = build_ring(parse_ring_expr(ag_expr));
      emit_json(graph_to_json(annihilator_graph(r)), ag_out);
      return 0;
    }
    if (*line) {
      SimpleGraph g = input_is_file(line_input)
                          ? read_graph_file(line_input)
                          : [&] {
                              FiniteRing r =
                                  build_ring(parse_ring_expr(line_input));
                              return annihilator_graph(r);
                            }();
      emit_json(graph_to_json(line_graph(g)), line_out);
      return 0;
    }
    if (*topo || *book) {
      Budget b = default_budget();
      auto nodes = *topo ? topo_nodes : book_nodes;
      auto seconds = *topo ? topo_seconds : book_seconds;
      if (nodes) b.nodes = *nodes;
      if (seconds) b.seconds = *seconds;
      if (*topo) return cmd_topo(topo_inv, topo_input, b, topo_cert);
      return cmd_book(book_input, b);
    }
    if (*run) return cmd_census(suite, extended, report_dir, workers, strict);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
