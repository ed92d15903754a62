// Census driver: per-ring classification against the claim catalog and the
// suite runner with deterministic JSON/CSV report output.
#include "rtl/census.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "rtl/anngraph.hpp"
#include "rtl/errors.hpp"
#include "rtl/finring.hpp"
#include "rtl/iso.hpp"

namespace rtl {

namespace {

bool suite_has_kind(Suite suite, ClaimKind kind) {
  switch (suite) {
    case Suite::kAll:
      return true;
    case Suite::kPlanarity:
      return kind == ClaimKind::kPlanar || kind == ClaimKind::kOuterplanar ||
             kind == ClaimKind::kOuterplanarityIndex ||
             kind == ClaimKind::kInnerVertexNumber;
    case Suite::kGenus:
      return kind == ClaimKind::kGenus;
    case Suite::kCrosscap:
      return kind == ClaimKind::kCrosscap;
    case Suite::kBook:
      return kind == ClaimKind::kBookThickness;
  }
  return false;
}

std::string bounds_string(int lower, int upper, bool exact) {
  if (exact) return std::to_string(lower);
  std::string s = std::to_string(lower) + "..";
  if (upper >= 0) s += std::to_string(upper);
  return s;
}

// match/mismatch/undecided for a bounded integer invariant against a claim.
void judge_bounds(ClaimVerdictRecord* v, const ClaimEntry& c, int lower,
                  int upper, bool exact) {
  v->computed = bounds_string(lower, upper, exact);
  if (c.relation == ClaimRelation::kAtLeast) {
    if (lower >= c.value)
      v->verdict = "match";
    else if (upper >= 0 && upper < c.value)
      v->verdict = "mismatch";
    return;
  }
  if (exact) {
    v->verdict = lower == c.value ? "match" : "mismatch";
    return;
  }
  if (lower > c.value || (upper >= 0 && upper < c.value))
    v->verdict = "mismatch";
}

ClaimVerdictRecord evaluate_claim(const ClassificationRecord& rec,
                                  const ClaimEntry& c) {
  ClaimVerdictRecord v;
  v.claim = c;
  v.verdict = "undecided-at-budget";
  v.computed = "unavailable";
  auto judge_bool = [&](const std::optional<bool>& got, const char* yes,
                        const char* no) {
    if (!got) return;
    v.computed = *got ? yes : no;
    v.verdict = (*got ? 1 : 0) == c.value ? "match" : "mismatch";
  };
  auto judge_layer = [&](const std::optional<int>& got) {
    if (got) {
      v.computed = std::to_string(*got);
      v.verdict = *got == c.value ? "match" : "mismatch";
    } else if (rec.planar && !*rec.planar) {
      // Peeling layers are undefined off the plane; any finite claim fails.
      v.computed = "undefined (nonplanar)";
      v.verdict = "mismatch";
    }
  };
  switch (c.kind) {
    case ClaimKind::kPlanar:
      judge_bool(rec.planar, "planar", "nonplanar");
      break;
    case ClaimKind::kOuterplanar:
      judge_bool(rec.outerplanar, "outerplanar", "not outerplanar");
      break;
    case ClaimKind::kOuterplanarityIndex:
      judge_layer(rec.opindex);
      break;
    case ClaimKind::kInnerVertexNumber:
      judge_layer(rec.ivn);
      break;
    case ClaimKind::kGenus:
      if (rec.genus)
        judge_bounds(&v, c, rec.genus->lower, rec.genus->upper,
                     rec.genus->exact);
      break;
    case ClaimKind::kCrosscap:
      if (rec.crosscap)
        judge_bounds(&v, c, rec.crosscap->lower, rec.crosscap->upper,
                     rec.crosscap->exact);
      break;
    case ClaimKind::kBookThickness:
      if (rec.book)
        judge_bounds(&v, c, rec.book->lower, rec.book->upper, rec.book->exact);
      break;
  }
  return v;
}

ordered_json witness_json(const std::string& obstruction,
                          const SubdivisionWitness& w) {
  ordered_json j;
  j["obstruction"] = obstruction;
  j["branch"] = w.branch;
  j["paths"] = w.paths;
  return j;
}

ordered_json layer_json(const SimpleGraph& g, const LayerResult& lr) {
  ordered_json j;
  j["value"] = lr.value;
  j["embedding"] = embedding_to_json(g, lr.embedding);
  j["outer_face"] = lr.outer_face;
  return j;
}

}  // namespace

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::kPlanarity: return "planarity";
    case Suite::kGenus: return "genus";
    case Suite::kCrosscap: return "crosscap";
    case Suite::kBook: return "book";
    case Suite::kAll: return "all";
  }
  return "?";
}

std::optional<Suite> suite_from_name(const std::string& name) {
  if (name == "planarity") return Suite::kPlanarity;
  if (name == "genus") return Suite::kGenus;
  if (name == "crosscap") return Suite::kCrosscap;
  if (name == "book") return Suite::kBook;
  if (name == "all") return Suite::kAll;
  return std::nullopt;
}

ClassificationRecord classify_ring(const std::string& expr,
                                   const Budget& budget,
                                   const InvariantRequest& request) {
  ClassificationRecord rec;
  rec.expr = expr;
  SimpleGraph ag, line;
  bool built = false;
  try {
    RingExpr e = parse_ring_expr(expr);
    rec.canonical = ring_expr_to_string(e);
    FiniteRing r = build_ring(e);
    rec.order = r.order;
    rec.local = is_local(r).local;
    ag = annihilator_graph(r);
    line = line_graph(ag);
    rec.ag_vertices = ag.n;
    rec.ag_edges = ag.edge_count();
    rec.line_vertices = line.n;
    rec.line_edges = line.edge_count();
    built = true;
  } catch (const Error& err) {
    rec.error = err.what();
  }
  auto fail = [&rec](const char* stage, const Error& err) {
    if (!rec.error.empty()) rec.error += "; ";
    rec.error += std::string(stage) + ": " + err.what();
  };
  if (built) {
    try {
      PlanarityResult p = is_planar(line, budget);
      rec.planar = p.planar;
      if (p.embedding)
        rec.certificate_payloads["planar-embedding"] =
            embedding_to_json(line, *p.embedding);
      if (!p.planar) {
        rec.planar_obstruction = p.obstruction;
        if (p.witness)
          rec.certificate_payloads["planar-obstruction"] =
              witness_json(p.obstruction, *p.witness);
      }
    } catch (const Error& err) {
      fail("planar", err);
    }
    try {
      OuterplanarityResult o = is_outerplanar(line, budget);
      rec.outerplanar = o.outerplanar;
      if (!o.outerplanar) {
        rec.outerplanar_obstruction = o.obstruction;
        if (o.witness)
          rec.certificate_payloads["outerplanar-obstruction"] =
              witness_json(o.obstruction, *o.witness);
      }
    } catch (const Error& err) {
      fail("outerplanar", err);
    }
    if (request.layers && rec.planar.value_or(false)) {
      try {
        LayerResult lr = outerplanarity_index(line, budget);
        rec.opindex = lr.value;
        rec.certificate_payloads["opindex-embedding"] = layer_json(line, lr);
      } catch (const Error& err) {
        fail("opindex", err);
      }
      try {
        LayerResult lr = inner_vertex_number(line, budget);
        rec.ivn = lr.value;
        rec.certificate_payloads["ivn-embedding"] = layer_json(line, lr);
      } catch (const Error& err) {
        fail("ivn", err);
      }
    }
    // The degree bound on the annihilator graph transfers to its line graph
    // and often exceeds what the line graph alone reveals.
    LineDegreeBound hint = line_genus_degree_bound(ag);
    if (request.genus) {
      try {
        if (line.n == 0) {
          BoundedInvariant b;
          b.exact = true;
          b.method = "empty graph";
          rec.genus = b;
        } else {
          rec.genus = min_genus(line, budget, hint.genus_lower,
                                hint.genus_lower > 0 ? "line degree bound" : "");
          if (rec.genus->certificate)
            rec.certificate_payloads["genus-embedding"] =
                embedding_to_json(line, *rec.genus->certificate);
        }
      } catch (const Error& err) {
        fail("genus", err);
      }
    }
    if (request.crosscap) {
      try {
        if (line.n == 0) {
          BoundedInvariant b;
          b.exact = true;
          b.method = "empty graph";
          rec.crosscap = b;
        } else {
          rec.crosscap =
              min_crosscap(line, budget, hint.crosscap_lower,
                           hint.crosscap_lower > 0 ? "line degree bound" : "");
          if (rec.crosscap->certificate)
            rec.certificate_payloads["crosscap-embedding"] =
                embedding_to_json(line, *rec.crosscap->certificate);
        }
      } catch (const Error& err) {
        fail("crosscap", err);
      }
    }
    if (request.book) {
      try {
        rec.book = book_thickness(line, budget);
        if (rec.book->witness)
          rec.certificate_payloads["book-embedding"] =
              book_embedding_to_json(*rec.book->witness);
      } catch (const Error& err) {
        fail("book", err);
      }
    }
  }
  for (const auto& c : claim_catalog())
    if (c.expr == expr) rec.verdicts.push_back(evaluate_claim(rec, c));
  return rec;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string relation_string(ClaimRelation r) {
  return r == ClaimRelation::kAtLeast ? ">=" : "=";
}

ordered_json bounded_json(const BoundedInvariant& b) {
  ordered_json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper >= 0 ? ordered_json(b.upper) : ordered_json(nullptr);
  j["exact"] = b.exact;
  j["method"] = b.method;
  j["nodes"] = b.nodes_used;
  return j;
}

ordered_json book_json(const BookResult& b) {
  ordered_json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper >= 0 ? ordered_json(b.upper) : ordered_json(nullptr);
  j["exact"] = b.exact;
  j["method"] = b.method;
  j["nodes"] = b.nodes_used;
  return j;
}

ordered_json claim_json(const ClaimVerdictRecord& v) {
  ordered_json j;
  j["kind"] = claim_kind_name(v.claim.kind);
  j["relation"] = relation_string(v.claim.relation);
  j["claimed"] = v.claim.value;
  j["computed"] = v.computed;
  j["verdict"] = v.verdict;
  j["expected_discrepancy"] = v.claim.expected_discrepancy;
  j["source"] = v.claim.source;
  if (!v.claim.note.empty()) j["note"] = v.claim.note;
  return j;
}

ordered_json record_json(const ClassificationRecord& rec) {
  ordered_json j;
  j["expr"] = rec.expr;
  j["canonical"] = rec.canonical;
  j["order"] = rec.order;
  j["local"] = rec.local;
  j["ag_vertices"] = rec.ag_vertices;
  j["ag_edges"] = rec.ag_edges;
  j["line_vertices"] = rec.line_vertices;
  j["line_edges"] = rec.line_edges;
  if (!rec.error.empty()) j["error"] = rec.error;
  if (rec.planar) j["planar"] = *rec.planar;
  if (!rec.planar_obstruction.empty())
    j["planar_obstruction"] = rec.planar_obstruction;
  if (rec.outerplanar) j["outerplanar"] = *rec.outerplanar;
  if (!rec.outerplanar_obstruction.empty())
    j["outerplanar_obstruction"] = rec.outerplanar_obstruction;
  if (rec.opindex) j["opindex"] = *rec.opindex;
  if (rec.ivn) j["ivn"] = *rec.ivn;
  if (rec.genus) j["genus"] = bounded_json(*rec.genus);
  if (rec.crosscap) j["crosscap"] = bounded_json(*rec.crosscap);
  if (rec.book) j["book"] = book_json(*rec.book);
  ordered_json claims = ordered_json::array();
  for (const auto& v : rec.verdicts) claims.push_back(claim_json(v));
  j["claims"] = claims;
  if (!rec.certificates.empty()) {
    ordered_json certs;
    for (const auto& [name, path] : rec.certificates) certs[name] = path;
    j["certificates"] = certs;
  }
  return j;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream ofs(path, std::ios::binary);
  if (!ofs) throw IoError("cannot open " + path.string() + " for writing");
  ofs << text;
  if (!ofs) throw IoError("failed writing " + path.string());
}

std::string finding_line(const std::string& expr, const ClaimVerdictRecord& v) {
  std::string s = expr + ": " + claim_kind_name(v.claim.kind) + " claimed " +
                  relation_string(v.claim.relation) +
                  std::to_string(v.claim.value) + ", " + v.verdict +
                  " (computed " + v.computed + ")";
  if (v.claim.expected_discrepancy) s += " [expected discrepancy]";
  if (!v.claim.note.empty()) s += "; note: " + v.claim.note;
  return s;
}

}  // namespace

SuiteSummary run_suite(const SuiteOptions& options,
                       std::vector<ClassificationRecord>* records) {
  const auto& catalog = claim_catalog();
  std::vector<std::string> exprs;
  for (const auto& c : catalog) {
    if (!suite_has_kind(options.suite, c.kind)) continue;
    bool seen = false;
    for (const auto& e : exprs) seen = seen || e == c.expr;
    if (!seen) exprs.push_back(c.expr);
  }

  bool layer_suite = options.suite == Suite::kPlanarity ||
                     options.suite == Suite::kAll;
  auto request_for = [&](const std::string& expr) {
    InvariantRequest rq;
    rq.layers = layer_suite;
    for (const auto& c : catalog) {
      if (c.expr != expr || !suite_has_kind(options.suite, c.kind)) continue;
      rq.genus = rq.genus || c.kind == ClaimKind::kGenus;
      rq.crosscap = rq.crosscap || c.kind == ClaimKind::kCrosscap;
      rq.book = rq.book || c.kind == ClaimKind::kBookThickness;
    }
    return rq;
  };

  std::vector<ClassificationRecord> recs(exprs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= exprs.size()) break;
      recs[i] = classify_ring(exprs[i], options.budget, request_for(exprs[i]));
    }
  };
  int workers = options.workers;
  if (workers > static_cast<int>(exprs.size()))
    workers = static_cast<int>(exprs.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  // Everything below is single-threaded and runs in catalog order, so the
  // report bytes do not depend on the worker count.
  for (auto& rec : recs) {
    std::vector<ClaimVerdictRecord> kept;
    for (auto& v : rec.verdicts)
      if (suite_has_kind(options.suite, v.claim.kind)) kept.push_back(v);
    rec.verdicts = std::move(kept);
  }

  SuiteSummary summary;
  summary.rings = static_cast<int>(recs.size());
  for (const auto& rec : recs) {
    for (const auto& v : rec.verdicts) {
      ++summary.claims;
      if (v.verdict == "match") ++summary.matches;
      if (v.verdict == "mismatch") {
        ++summary.mismatches;
        if (v.claim.expected_discrepancy) ++summary.expected_mismatches;
      }
      if (v.verdict == "undecided-at-budget") ++summary.undecided;
      if (v.verdict == "mismatch" || v.claim.expected_discrepancy ||
          !v.claim.note.empty())
        summary.findings.push_back(finding_line(rec.expr, v));
    }
  }

  if (!options.report_dir.empty()) {
    namespace fs = std::filesystem;
    fs::path dir(options.report_dir);
    fs::create_directories(dir / "certificates");
    for (std::size_t i = 0; i < recs.size(); ++i) {
      char prefix[16];
      std::snprintf(prefix, sizeof prefix, "r%02zu", i);
      for (const auto& [name, payload] : recs[i].certificate_payloads) {
        std::string rel = std::string("certificates/") + prefix + "-" + name +
                          ".json";
        write_text_file(dir / rel, payload.dump(2) + "\n");
        recs[i].certificates[name] = rel;
      }
    }
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["suite"] = suite_name(options.suite);
    doc["profile"] = options.profile;
    doc["budget"] = {{"nodes", options.budget.nodes},
                     {"seconds", options.budget.seconds}};
    ordered_json rings = ordered_json::array();
    for (const auto& rec : recs) rings.push_back(record_json(rec));
    doc["rings"] = rings;
    ordered_json sj;
    sj["rings"] = summary.rings;
    sj["claims"] = summary.claims;
    sj["matches"] = summary.matches;
    sj["mismatches"] = summary.mismatches;
    sj["expected_mismatches"] = summary.expected_mismatches;
    sj["undecided"] = summary.undecided;
    sj["findings"] = summary.findings;
    doc["summary"] = sj;
    write_text_file(dir / (suite_name(options.suite) + ".json"),
                    doc.dump(2) + "\n");

    std::string csv =
        "expr,kind,relation,claimed,computed,verdict,expected_discrepancy,"
        "source,note\n";
    for (const auto& rec : recs) {
      for (const auto& v : rec.verdicts) {
        csv += csv_field(rec.expr) + "," + claim_kind_name(v.claim.kind) +
               "," + relation_string(v.claim.relation) + "," +
               std::to_string(v.claim.value) + "," + csv_field(v.computed) +
               "," + v.verdict + "," +
               (v.claim.expected_discrepancy ? "true" : "false") + "," +
               csv_field(v.claim.source) + "," + csv_field(v.claim.note) +
               "\n";
      }
    }
    write_text_file(dir / (suite_name(options.suite) + ".csv"), csv);
  }

  if (records) *records = std::move(recs);
  return summary;
}

}  // namespace rtl
