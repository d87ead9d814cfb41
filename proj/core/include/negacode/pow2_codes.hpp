#pragma once

#include <string>
#include <vector>

#include "negacode/errors.hpp"
#include "negacode/oracle.hpp"
#include "negacode/poly.hpp"

namespace negacode {

// Case tags of the length-2^k classification.  Type 0 covers the trivial
// ideals, Type 1 the <u(x+1)^m>, Type 2 the principal monic-plus-u-part
// ideals (split by the shape of the u-part), Type 3 the two-generator
// ideals (second generator u(x+1)^m or 2u(x+1)^{m1}).
enum class TypeTag {
  T0_zero,
  T0_unit,
  T1,
  T2_0,
  T2_1,
  T2_2,
  T2_3,
  T3_0,
  T3_1,
  T3_2,
  T3_3,
  T3_4,
  T3_5,
};

constexpr int kNumTypes = 13;

const char* type_name(TypeTag t);            // "T2_1" style
TypeTag type_from_name(const std::string&);  // BadParameters

// Shape of the u-part of the monic generator: zero, a unit h, 2h, or the
// mixed form 2h1 + (x+1)^l h2.
enum class HClass { Zero, Unit, Two, Mixed };

// One classified code of length n = 2^k.  h/h1/h2 are F2 bitmasks in the
// (x+1)-basis (bit i = coefficient of (x+1)^i); nonzero masks have bit 0
// set (units are canonicalized to constant term 1).
struct CodeDescriptor {
  TypeTag type = TypeTag::T0_zero;
  int n = 0;
  int s = 0;
  int t = 0;
  int m = 0;
  int m1 = 0;
  int l = 0;
  unsigned h = 0;
  unsigned h1 = 0;
  unsigned h2 = 0;

  bool operator==(const CodeDescriptor&) const = default;
};

// deterministic order: (type, s, t, m, m1, l, h, h1, h2)
bool descriptor_less(const CodeDescriptor& a, const CodeDescriptor& b);

// Compact text form, e.g. "zero", "one", "T1(m=0)", "T2.1(s=2,t=0,h=1)",
// "T3.4(s=5,t=0,l=2,m=3,h1=1,h2=11)"; h masks print LSB-first, t prints
// only when some mask is nonzero.
std::string to_string(const CodeDescriptor& d);
CodeDescriptor parse_descriptor(const std::string& text, int n);  // BadParameters

HClass h_class(const CodeDescriptor& d);

// Smallest T with u(x+1)^T in the principal ideal <(x+1)^s + u-part>, and
// smallest T1 with 2u(x+1)^{T1} in it, by the case formulas.
int compute_T(int s, int t, HClass hc, int l, int n);   // BadParameters
int compute_T1(int s, int t, HClass hc, int l, int n);  // BadParameters

// The same minima over the full (possibly two-generator) span of d.
int descriptor_T(const CodeDescriptor& d);
int descriptor_T1(const CodeDescriptor& d);

// Materialized generators; absent generators are zero residues.
struct GeneratorPair {
  Residue gen1;
  Residue gen2;
};

GeneratorPair generators(const CodeDescriptor& d);
std::string generators_text(const CodeDescriptor& d);  // "<(x+1)^3+2u, u(x+1)>" style
IdealSpan span_of(const CodeDescriptor& d);

// All candidate descriptors from the per-type parameter grids, sorted by
// descriptor_less; may contain span duplicates.
std::vector<CodeDescriptor> enumerate_descriptors(int n);  // UnsupportedLength, TooLarge

// Candidates deduplicated by canonical span (first in sort order kept).
std::vector<CodeDescriptor> enumerate_codes(int n, int cap = 8);  // UnsupportedLength, TooLarge

// Annihilator by the case formulas: generator elements, and the matching
// canonical descriptor of the formula span.  annihilator_agrees reports
// whether the formula span equals the oracle annihilator of span_of(d).
std::vector<Residue> ann_formula_gens(const CodeDescriptor& d);  // BadParameters
CodeDescriptor annihilator(const CodeDescriptor& d);             // BadParameters, UnsupportedLength
bool annihilator_agrees(const CodeDescriptor& d);

// Dual span: reciprocal image of the oracle annihilator.
IdealSpan dual(const CodeDescriptor& d);

// Canonical descriptor of an enumerated span (inverse of span_of).
CodeDescriptor descriptor_of_span(const IdealSpan& s);  // UnsupportedLength, Error

unsigned long long cardinality(const CodeDescriptor& d);  // BadParameters, TooLarge

// Case-formula matchers; the *_semantic forms are the oracle answers
// (C == C-dual, C inside C-dual) and are authoritative in reports.
bool is_self_dual(const CodeDescriptor& d);
bool is_self_orthogonal(const CodeDescriptor& d);
bool is_self_dual_semantic(const CodeDescriptor& d);
bool is_self_orthogonal_semantic(const CodeDescriptor& d);

// ---- embedded reference table for n = 2 ----
// The published 24-row table of ideals of R[x]/(x^2+1): generator text,
// claimed annihilator row, claimed size, plus materialized generators.
struct TableRow {
  int row = 0;                       // printed 1-based row number
  std::string generator_text;
  int printed_ann = 0;               // printed annihilator row number
  unsigned long long printed_size = 0;
  std::vector<Residue> gens;
};

const std::vector<TableRow>& reference_table_n2();

// ---- verification report ----

struct ReportRow {
  int index = 0;  // 0-based position in enumerate_codes order
  CodeDescriptor desc;
  std::string descriptor;
  std::string generators;
  unsigned long long size = 0;
  int ann_index = -1;   // oracle annihilator's position
  int dual_index = -1;  // oracle dual's position
  bool self_orthogonal = false;  // semantic
  bool self_dual = false;        // semantic
  bool agrees = true;            // no formula-vs-oracle mismatch on this row
};

struct Discrepancy {
  std::string kind;  // ann-formula | selfdual-flag | selforthogonal-flag |
                     // descriptor-collision | cardinality | T-witness |
                     // table-annihilator | table-duplicate-row | table-count
  std::string code;  // descriptor text or table row label
  std::string detail;
};

struct DiscrepancyReport {
  int n = 0;
  std::vector<ReportRow> rows;
  std::vector<Discrepancy> discrepancies;
};

// Full formula-vs-oracle adjudication at n in {2, 4}; at n = 2 the
// embedded reference table is rechecked row by row.
DiscrepancyReport verify(int n);  // UnsupportedLength

}  // namespace negacode
