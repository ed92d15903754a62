// The transcribed claim table behind the census: every ring named by the
// classification statements, with literal entries kept literal (suspected
// misprints carry notes and an expected_discrepancy flag) and conjectured
// corrections added as separate entries marked as such.
#include <vector>

#include "rtl/census.hpp"

namespace rtl {

std::string claim_kind_name(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::kPlanar: return "planar";
    case ClaimKind::kOuterplanar: return "outerplanar";
    case ClaimKind::kOuterplanarityIndex: return "opindex";
    case ClaimKind::kInnerVertexNumber: return "ivn";
    case ClaimKind::kGenus: return "genus";
    case ClaimKind::kCrosscap: return "crosscap";
    case ClaimKind::kBookThickness: return "book";
  }
  return "?";
}

namespace {

constexpr ClaimKind kPl = ClaimKind::kPlanar;
constexpr ClaimKind kOu = ClaimKind::kOuterplanar;
constexpr ClaimKind kOp = ClaimKind::kOuterplanarityIndex;
constexpr ClaimKind kIv = ClaimKind::kInnerVertexNumber;
constexpr ClaimKind kGe = ClaimKind::kGenus;
constexpr ClaimKind kCr = ClaimKind::kCrosscap;
constexpr ClaimKind kBt = ClaimKind::kBookThickness;

const char* kSrcPlanarNL = "planarity classification, non-local rings";
const char* kSrcPlanarL = "planarity classification, local rings";
const char* kSrcOuterNL = "outerplanarity classification, non-local rings";
const char* kSrcOuterL = "outerplanarity classification, local rings";
const char* kSrcOpIndex = "outerplanarity index two classification";
const char* kSrcIvn = "inner vertex number classification";
const char* kSrcGenus1 = "genus one classification";
const char* kSrcGenus2 = "genus two classification";
const char* kSrcCross1 = "crosscap one classification";
const char* kSrcCross2 = "crosscap two classification";
const char* kSrcSpot = "genus and crosscap spot bounds";
const char* kSrcBtPlanar = "book thickness of planar line graphs";
const char* kSrcBtTorus = "book thickness of toroidal line graphs";

// Recurring transcription notes.
const char* kNoteX3Literal =
    "transcribed literally; this order-27 ring has a complete annihilator "
    "graph on 8 vertices, far outside the classified range, and the order-9 "
    "ring Z3[x]/(x^2) fits the surrounding list";
const char* kNoteX3Fix =
    "conjectured intended entry for the literal Z3[x]/(x^3) in the same list";
const char* kNoteDupFix =
    "conjectured intended entry where the source repeats Z2[x]/(x^2)";
const char* kNoteCollapse =
    "transcribed literally; the relations collapse the quotient to the "
    "two-element field, whose annihilator graph is empty, so the claim holds "
    "vacuously; Z4[x]/(2x, x^2) fits the surrounding list";
const char* kNoteCollapseFix =
    "conjectured intended entry for the literal Z4[x]/(x, 2) in the same list";

void add(std::vector<ClaimEntry>& t, const char* expr, ClaimKind kind,
         int value, const char* source, const char* note = "",
         bool expected_discrepancy = false,
         ClaimRelation relation = ClaimRelation::kEqual) {
  ClaimEntry c;
  c.expr = expr;
  c.kind = kind;
  c.relation = relation;
  c.value = value;
  c.source = source;
  c.note = note;
  c.expected_discrepancy = expected_discrepancy;
  t.push_back(std::move(c));
}

std::vector<ClaimEntry> build_catalog() {
  std::vector<ClaimEntry> t;

  // Planarity, non-local rings: nine products with a planar line graph.
  add(t, "Z2 x Z2", kPl, 1, kSrcPlanarNL);
  add(t, "Z2 x Z3", kPl, 1, kSrcPlanarNL);
  add(t, "Z2 x GF(4)", kPl, 1, kSrcPlanarNL);
  add(t, "Z2 x Z5", kPl, 1, kSrcPlanarNL);
  add(t, "Z3 x Z3", kPl, 1, kSrcPlanarNL);
  add(t, "Z3 x GF(4)", kPl, 1, kSrcPlanarNL);
  add(t, "Z2 x Z4", kPl, 1, kSrcPlanarNL);
  add(t, "Z2[x]/(x^2) x Z2", kPl, 1, kSrcPlanarNL);
  add(t, "Z2 x Z2 x Z2", kPl, 1, kSrcPlanarNL);
  // Excluded cases argued alongside the classification.
  add(t, "Z3 x Z5", kPl, 0, kSrcPlanarNL,
      "excluded by the classification; the smallest toroidal case");
  add(t, "Z2 x Z2 x Z2 x Z2", kPl, 0, kSrcPlanarNL,
      "products of four or more factors are excluded by the supporting "
      "argument");

  // Planarity, local rings.
  add(t, "Z4", kPl, 1, kSrcPlanarL);
  add(t, "Z2[x]/(x^2)", kPl, 1, kSrcPlanarL);
  add(t, "Z9", kPl, 1, kSrcPlanarL);
  add(t, "Z3[x]/(x^3)", kPl, 1, kSrcPlanarL, kNoteX3Literal, true);
  add(t, "Z3[x]/(x^2)", kPl, 1, kSrcPlanarL, kNoteX3Fix);
  add(t, "Z8", kPl, 1, kSrcPlanarL);
  add(t, "Z2[x]/(x^3)", kPl, 1, kSrcPlanarL, kNoteDupFix);
  add(t, "Z4[x]/(2x, x^2+2)", kPl, 1, kSrcPlanarL);
  add(t, "GF(4)[x]/(x^2)", kPl, 1, kSrcPlanarL);
  add(t, "Z4[x]/(x^2+x+1)", kPl, 1, kSrcPlanarL);
  add(t, "Z4[x]/(x, 2)", kPl, 1, kSrcPlanarL, kNoteCollapse);
  add(t, "Z4[x]/(2x, x^2)", kPl, 1, kSrcPlanarL, kNoteCollapseFix);
  add(t, "Z2[x,y]/(x^2, xy, y^2)", kPl, 1, kSrcPlanarL);
  add(t, "Z25", kPl, 1, kSrcPlanarL);
  add(t, "Z5[x]/(x^2)", kPl, 1, kSrcPlanarL);

  // Outerplanarity, non-local rings: four products, one of them named only
  // in the converse direction of the statement.
  add(t, "Z2 x Z2", kOu, 1, kSrcOuterNL);
  add(t, "Z2 x Z3", kOu, 1, kSrcOuterNL,
      "the displayed list names this ring twice");
  add(t, "Z3 x Z3", kOu, 1, kSrcOuterNL,
      "absent from the displayed list but named in the converse direction "
      "of the same statement");
  add(t, "Z2 x GF(4)", kOu, 1, kSrcOuterNL);
  add(t, "Z2 x Z5", kOu, 0, kSrcOuterNL,
      "the unique minimally non-outerplanar case");

  // Outerplanarity, local rings: the planar local list without the two
  // order-25 rings.
  add(t, "Z4", kOu, 1, kSrcOuterL);
  add(t, "Z2[x]/(x^2)", kOu, 1, kSrcOuterL);
  add(t, "Z9", kOu, 1, kSrcOuterL);
  add(t, "Z3[x]/(x^3)", kOu, 1, kSrcOuterL, kNoteX3Literal, true);
  add(t, "Z3[x]/(x^2)", kOu, 1, kSrcOuterL, kNoteX3Fix);
  add(t, "Z8", kOu, 1, kSrcOuterL);
  add(t, "Z2[x]/(x^3)", kOu, 1, kSrcOuterL, kNoteDupFix);
  add(t, "Z4[x]/(2x, x^2+2)", kOu, 1, kSrcOuterL);
  add(t, "GF(4)[x]/(x^2)", kOu, 1, kSrcOuterL);
  add(t, "Z4[x]/(x^2+x+1)", kOu, 1, kSrcOuterL);
  add(t, "Z4[x]/(x, 2)", kOu, 1, kSrcOuterL, kNoteCollapse);
  add(t, "Z4[x]/(2x, x^2)", kOu, 1, kSrcOuterL, kNoteCollapseFix);
  add(t, "Z2[x,y]/(x^2, xy, y^2)", kOu, 1, kSrcOuterL);
  add(t, "Z25", kOu, 0, kSrcOuterL,
      "planar but excluded from the outerplanar list");
  add(t, "Z5[x]/(x^2)", kOu, 0, kSrcOuterL,
      "planar but excluded from the outerplanar list");

  // Outerplanarity index two: the seven rings whose planar line graph needs
  // a second peeling layer. The companion bound caps the index at two for
  // every ring with a planar line graph.
  add(t, "Z25", kOp, 2, kSrcOpIndex);
  add(t, "Z5[x]/(x^2)", kOp, 2, kSrcOpIndex);
  add(t, "Z2 x Z5", kOp, 2, kSrcOpIndex);
  add(t, "Z3 x GF(4)", kOp, 2, kSrcOpIndex);
  add(t, "Z2 x Z4", kOp, 2, kSrcOpIndex);
  add(t, "Z2 x Z2[x]/(x^2)", kOp, 2, kSrcOpIndex,
      "factor order follows the source; the planarity list writes "
      "Z2[x]/(x^2) x Z2");
  add(t, "Z2 x Z2 x Z2", kOp, 2, kSrcOpIndex);

  // Inner vertex number.
  add(t, "Z2 x Z2 x Z2", kIv, 3, kSrcIvn,
      "transcribed literally; exhaustive embedding enumeration puts at "
      "least five of the nine line graph vertices off the outer face (every "
      "face of this line graph is a triangle or a quadrilateral), and the "
      "drawing cited for the value 3 is not reproducible",
      true);
  add(t, "Z3 x GF(4)", kIv, 2, kSrcIvn);
  add(t, "Z2 x Z4", kIv, 2, kSrcIvn);
  add(t, "Z2 x Z2[x]/(x^2)", kIv, 2, kSrcIvn);
  add(t, "Z2 x Z5", kIv, 1, kSrcIvn,
      "the unique minimally non-outerplanar case");
  add(t, "Z2 x Z2", kIv, 0, kSrcIvn, "covered by the closing zero case");
  add(t, "Z3 x Z3", kIv, 0, kSrcIvn, "covered by the closing zero case");
  add(t, "Z2 x GF(4)", kIv, 0, kSrcIvn, "covered by the closing zero case");
  add(t, "Z25", kIv, 0, kSrcIvn,
      "the closing zero case assigns all remaining planar rings inner "
      "vertex number 0, but every planar embedding of this octahedral line "
      "graph keeps three vertices off the outer face",
      true);
  add(t, "Z5[x]/(x^2)", kIv, 0, kSrcIvn,
      "the closing zero case assigns all remaining planar rings inner "
      "vertex number 0, but every planar embedding of this octahedral line "
      "graph keeps three vertices off the outer face",
      true);

  // Genus one.
  add(t, "Z3 x Z5", kGe, 1, kSrcGenus1);
  add(t, "GF(4) x GF(4)", kGe, 1, kSrcGenus1);
  add(t, "Z2 x Z7", kGe, 1, kSrcGenus1);
  add(t, "Z2 x GF(8)", kGe, 1, kSrcGenus1);

  // Genus two.
  add(t, "Z2 x GF(9)", kGe, 2, kSrcGenus2);
  add(t, "Z3 x Z7", kGe, 2, kSrcGenus2);
  add(t, "GF(4) x Z5", kGe, 2, kSrcGenus2);

  // Crosscap one and two.
  add(t, "Z2 x Z7", kCr, 1, kSrcCross1);
  add(t, "GF(4) x GF(4)", kCr, 1, kSrcCross1);
  add(t, "Z3 x Z5", kCr, 2, kSrcCross2);

  // Spot lower bounds from the worked examples.
  add(t, "Z3 x Z4", kGe, 3, kSrcSpot, "", false, ClaimRelation::kAtLeast);
  add(t, "Z3 x Z4", kCr, 3, kSrcSpot, "", false, ClaimRelation::kAtLeast);
  add(t, "Z2 x Z2 x Z3", kGe, 3, kSrcSpot, "", false,
      ClaimRelation::kAtLeast);
  add(t, "Z2 x Z2 x Z3", kCr, 3, kSrcSpot, "", false,
      ClaimRelation::kAtLeast);

  // Book thickness, planar line graphs: zero (path line graphs).
  add(t, "Z4", kBt, 0, kSrcBtPlanar);
  add(t, "Z2[x]/(x^2)", kBt, 0, kSrcBtPlanar);
  add(t, "Z9", kBt, 0, kSrcBtPlanar);
  add(t, "Z3[x]/(x^3)", kBt, 0, kSrcBtPlanar, kNoteX3Literal, true);
  add(t, "Z3[x]/(x^2)", kBt, 0, kSrcBtPlanar, kNoteX3Fix);
  add(t, "Z2 x Z2", kBt, 0, kSrcBtPlanar);
  add(t, "Z2 x Z3", kBt, 0, kSrcBtPlanar);

  // Book thickness one (outerplanar, not a path).
  add(t, "Z8", kBt, 1, kSrcBtPlanar);
  add(t, "Z2[x]/(x^2)", kBt, 1, kSrcBtPlanar,
      "the book thickness one list repeats Z2[x]/(x^2), whose line graph "
      "is a single vertex already covered by the zero case; the companion "
      "entry Z2[x]/(x^3) fits",
      true);
  add(t, "Z2[x]/(x^3)", kBt, 1, kSrcBtPlanar, kNoteDupFix);
  add(t, "Z4[x]/(2x, x^2+2)", kBt, 1, kSrcBtPlanar);
  add(t, "GF(4)[x]/(x^2)", kBt, 1, kSrcBtPlanar);
  add(t, "Z4[x]/(x^2+x+1)", kBt, 1, kSrcBtPlanar);
  add(t, "Z4[x]/(x, 2)", kBt, 1, kSrcBtPlanar,
      "transcribed literally; the relations collapse the quotient to the "
      "two-element field, whose line graph is empty and has book thickness "
      "0; Z4[x]/(2x, x^2) fits the surrounding list",
      true);
  add(t, "Z4[x]/(2x, x^2)", kBt, 1, kSrcBtPlanar, kNoteCollapseFix);
  add(t, "Z2[x,y]/(x^2, xy, y^2)", kBt, 1, kSrcBtPlanar);
  add(t, "Z3 x Z3", kBt, 1, kSrcBtPlanar);
  add(t, "Z2 x GF(4)", kBt, 1, kSrcBtPlanar);

  // Book thickness two (planar, not outerplanar).
  add(t, "Z25", kBt, 2, kSrcBtPlanar);
  add(t, "Z5[x]/(x^2)", kBt, 2, kSrcBtPlanar);
  add(t, "Z2 x Z5", kBt, 2, kSrcBtPlanar);
  add(t, "Z3 x GF(4)", kBt, 2, kSrcBtPlanar);
  add(t, "Z2 x Z4", kBt, 2, kSrcBtPlanar);
  add(t, "Z2 x Z2[x]/(x^2)", kBt, 2, kSrcBtPlanar);
  add(t, "Z2 x Z2 x Z2", kBt, 2, kSrcBtPlanar);

  // Book thickness, toroidal line graphs.
  add(t, "Z3 x Z5", kBt, 3, kSrcBtTorus);
  add(t, "GF(4) x GF(4)", kBt, 3, kSrcBtTorus);
  add(t, "Z2 x Z7", kBt, 3, kSrcBtTorus);
  add(t, "Z2 x GF(8)", kBt, 4, kSrcBtTorus);
  add(t, "Z2 x Z8", kBt, 4, kSrcBtTorus,
      "named once in the supporting argument where the parallel statement "
      "has Z2 x GF(8); kept as a separate entry, though its line graph is "
      "outside the exact book thickness range");

  return t;
}

}  // namespace

const std::vector<ClaimEntry>& claim_catalog() {
  static const std::vector<ClaimEntry> table = build_catalog();
  return table;
}

}  // namespace rtl
