// Unit tests for the claim census: catalog integrity, ring-theoretic laws
// behind the claim table, suite determinism and report schema, and the
// stored book-embedding witnesses.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rtl/anngraph.hpp"
#include "rtl/book.hpp"
#include "rtl/census.hpp"
#include "rtl/embed.hpp"
#include "rtl/finring.hpp"
#include "rtl/graph.hpp"
#include "rtl/iso.hpp"

#ifndef RTL_TEST_DATA_DIR
#define RTL_TEST_DATA_DIR "tests/data"
#endif

using namespace rtl;

namespace {

std::vector<std::string> unique_exprs() {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& c : claim_catalog())
    if (seen.insert(c.expr).second) out.push_back(c.expr);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream ifs(p, std::ios::binary);
  REQUIRE(ifs.good());
  std::ostringstream ss;
  ss << ifs.rdbuf();
  return ss.str();
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("claim catalog shape") {
  const auto& cat = claim_catalog();
  CHECK(cat.size() == 107);
  CHECK(unique_exprs().size() == 36);

  int expected = 0;
  int at_least = 0;
  std::set<ClaimKind> kinds;
  for (const auto& c : cat) {
    CHECK(!c.expr.empty());
    CHECK(!c.source.empty());
    CHECK(c.value >= 0);
    kinds.insert(c.kind);
    if (c.expected_discrepancy) {
      ++expected;
      CHECK(!c.note.empty());
    }
    if (c.relation == ClaimRelation::kAtLeast) ++at_least;
    // Planarity and outerplanarity claims are boolean-coded.
    if (c.kind == ClaimKind::kPlanar || c.kind == ClaimKind::kOuterplanar)
      CHECK(c.value <= 1);
  }
  CHECK(expected == 8);
  CHECK(at_least == 4);
  CHECK(kinds.size() == 7);

  // Every expression parses, builds, and canonicalizes to itself, so report
  // rows can be matched back to catalog rows by string equality. The order
  // floor is 2: one transcribed-literally entry collapses to a field.
  for (const auto& e : unique_exprs()) {
    RingExpr ast = parse_ring_expr(e);
    CHECK(ring_expr_to_string(ast) == e);
    FiniteRing r = build_ring(ast);
    CHECK(r.order >= 2);
  }
}

TEST_CASE("claim kind names are unique and stable") {
  std::set<std::string> names;
  for (ClaimKind k :
       {ClaimKind::kPlanar, ClaimKind::kOuterplanar,
        ClaimKind::kOuterplanarityIndex, ClaimKind::kInnerVertexNumber,
        ClaimKind::kGenus, ClaimKind::kCrosscap, ClaimKind::kBookThickness})
    names.insert(claim_kind_name(k));
  CHECK(names.size() == 7);
  CHECK(names.count("planar") == 1);
  CHECK(names.count("book") == 1);
}

TEST_CASE("annihilator graph of a product of two fields is complete bipartite") {
  const std::vector<std::pair<std::string, std::pair<int, int>>> cases = {
      {"Z2 x Z3", {1, 2}},    {"Z2 x Z5", {1, 4}},
      {"Z3 x GF(4)", {2, 3}}, {"GF(4) x GF(4)", {3, 3}},
      {"Z3 x Z5", {2, 4}},    {"Z2 x GF(8)", {1, 7}},
      {"GF(4) x Z5", {3, 4}}, {"Z2 x GF(9)", {1, 8}},
  };
  for (const auto& [expr, side] : cases) {
    CAPTURE(expr);
    SimpleGraph ag = annihilator_graph(build_ring(parse_ring_expr(expr)));
    SimpleGraph kmn = complete_bipartite(side.first, side.second);
    CHECK(ag.n == kmn.n);
    CHECK(ag.edge_count() == kmn.edge_count());
    CHECK(is_isomorphic(ag, kmn).has_value());
  }
}

TEST_CASE("local catalog rings: line graph planarity matches the annihilator graph") {
  Budget b{2'000'000, 0.0};
  int locals = 0;
  for (const auto& e : unique_exprs()) {
    FiniteRing r = build_ring(parse_ring_expr(e));
    if (!is_local(r).local) continue;
    ++locals;
    CAPTURE(e);
    SimpleGraph ag = annihilator_graph(r);
    SimpleGraph lg = line_graph(ag);
    bool ag_planar = ag.n == 0 || is_planar(ag, b).planar;
    bool lg_planar = lg.n == 0 || is_planar(lg, b).planar;
    CHECK(ag_planar == lg_planar);
    // No local ring here has a line graph of genus or crosscap 1 or 2:
    // planar means both are 0, and the one nonplanar case clears 3 by the
    // Euler bound alone.
    if (!lg_planar) {
      CHECK(euler_genus_lower_bound(lg) >= 3);
      CHECK(euler_crosscap_lower_bound(lg) >= 3);
    }
  }
  CHECK(locals >= 15);
}

TEST_CASE("classify_ring fills the record and isolates failures") {
  Budget b{500'000, 0.0};
  InvariantRequest req;

  ClassificationRecord rec = classify_ring("Z2 x GF(9)", b, req);
  CHECK(rec.error.empty());
  CHECK(rec.canonical == "Z2 x GF(9)");
  CHECK(rec.order == 18);
  CHECK(!rec.local);
  CHECK(rec.ag_vertices == 9);
  CHECK(rec.ag_edges == 8);
  CHECK(rec.line_vertices == 8);
  CHECK(rec.line_edges == 28);  // L(K_{1,8}) = K8
  REQUIRE(rec.planar.has_value());
  CHECK(!*rec.planar);
  CHECK(!rec.planar_obstruction.empty());

  ClassificationRecord bad = classify_ring("Z6[y]/(y^", b, req);
  CHECK(!bad.error.empty());
  CHECK(!bad.planar.has_value());

  // Layers only apply to planar inputs.
  req.layers = true;
  ClassificationRecord planar_rec = classify_ring("Z2 x Z5", b, req);
  CHECK(planar_rec.error.empty());
  REQUIRE(planar_rec.planar.has_value());
  CHECK(*planar_rec.planar);
  REQUIRE(planar_rec.opindex.has_value());
  REQUIRE(planar_rec.ivn.has_value());
  CHECK(*planar_rec.opindex == 2);

  ClassificationRecord nonplanar_rec = classify_ring("Z2 x GF(9)", b, req);
  CHECK(!nonplanar_rec.opindex.has_value());
  CHECK(!nonplanar_rec.ivn.has_value());
}

TEST_CASE("zero budget leaves every solver-dependent claim undecided") {
  SuiteOptions opt;
  opt.suite = Suite::kAll;
  opt.budget = Budget{0, 0.0};
  opt.workers = 3;
  auto dir = fresh_dir("rtl_census_zb");
  opt.report_dir = dir.string();

  SuiteSummary s = run_suite(opt);
  CHECK(s.rings == 36);
  CHECK(s.claims == 107);
  CHECK(s.matches + s.mismatches + s.undecided == s.claims);
  // Only claims decided without search nodes survive a zero node budget
  // (empty graphs, Euler bounds meeting hill-climb uppers); everything else
  // reports undecided-at-budget.
  CHECK(s.undecided == 83);
  CHECK(s.matches == 21);
  CHECK(s.mismatches == 3);
  CHECK(s.mismatches == s.expected_mismatches);
  CHECK(std::filesystem::exists(dir / "all.json"));
  CHECK(std::filesystem::exists(dir / "all.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("suite reports are byte-identical across worker counts") {
  SuiteOptions opt;
  opt.suite = Suite::kAll;
  opt.budget = Budget{400'000, 0.0};

  auto dir1 = fresh_dir("rtl_census_w1");
  opt.workers = 1;
  opt.report_dir = dir1.string();
  SuiteSummary s1 = run_suite(opt);

  auto dir4 = fresh_dir("rtl_census_w4");
  opt.workers = 4;
  opt.report_dir = dir4.string();
  SuiteSummary s4 = run_suite(opt);

  CHECK(s1.claims == s4.claims);
  CHECK(s1.matches == s4.matches);
  CHECK(s1.undecided == s4.undecided);

  std::string json1 = slurp(dir1 / "all.json");
  std::string json4 = slurp(dir4 / "all.json");
  CHECK(json1 == json4);
  std::string csv1 = slurp(dir1 / "all.csv");
  std::string csv4 = slurp(dir4 / "all.csv");
  CHECK(csv1 == csv4);

  // Same certificate files from both runs.
  auto list = [](const std::filesystem::path& d) {
    std::set<std::string> names;
    for (const auto& e : std::filesystem::directory_iterator(d / "certificates"))
      names.insert(e.path().filename().string());
    return names;
  };
  CHECK(list(dir1) == list(dir4));
  CHECK(!list(dir1).empty());

  // Report schema: versioned JSON document plus a fixed-width CSV table.
  ordered_json doc = ordered_json::parse(json1);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["suite"] == "all");
  CHECK(doc["budget"]["nodes"] == 400'000);
  CHECK(doc["rings"].size() == 36);
  CHECK(doc["summary"]["claims"] == s1.claims);
  CHECK(doc["summary"]["matches"] == s1.matches);

  std::istringstream lines(csv1);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "expr,kind,relation,claimed,computed,verdict,expected_discrepancy,"
        "source,note");
  int rows = 0;
  for (std::string line; std::getline(lines, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == s1.claims);

  std::filesystem::remove_all(dir1);
  std::filesystem::remove_all(dir4);
}

TEST_CASE("stored book embeddings verify against their line graphs") {
  const std::vector<std::pair<std::string, std::size_t>> fixtures = {
      {"book2_z25.json", 2},     {"book2_z3xf4.json", 2},
      {"book2_z2z2z2.json", 2},  {"book3_z3xz5.json", 3},
      {"book3_f4xf4.json", 3},
  };
  for (const auto& [name, pages] : fixtures) {
    CAPTURE(name);
    auto path = std::filesystem::path(RTL_TEST_DATA_DIR) / name;
    REQUIRE(std::filesystem::exists(path));
    ordered_json j = ordered_json::parse(slurp(path));
    REQUIRE(j.contains("ring"));

    FiniteRing r = build_ring(parse_ring_expr(j["ring"].get<std::string>()));
    SimpleGraph lg = line_graph(annihilator_graph(r));
    BookEmbedding be = book_embedding_from_json(j);
    CHECK(be.spine.size() == static_cast<std::size_t>(lg.n));
    CHECK(be.pages.size() == pages);
    CHECK(verify_book_embedding(lg, be));
  }
}
