#pragma once

// Charts of W^P (word, lambda_w, n_w) and product tables for the four
// maximal parabolics, their comparison against the reference fixtures, and
// Markdown/JSON export.

#include "d4/golden.hpp"
#include "d4/schubert.hpp"

#include <string>
#include <vector>

namespace d4 {

/// Labels b_k^j in the published naming. P1 and P2 come from the reference
/// charts (matched by group element); P3 and P4 are transported from P1 along
/// (1 3) and (1 4).
std::vector<std::string> class_labels(Parabolic p,
                                      const golden::Fixtures& fixtures = golden::Fixtures::embedded());

struct ChartRow {
  std::size_t index;       // class index in schubert_ring(p)
  std::vector<int> word;   // reduced word as printed
};

/// Row order and reduced words of the reference charts; P3 and P4 are the
/// P1 layout pushed through (1 3) and (1 4). Classes missing from a chart
/// follow at the end with their lex-smallest word.
std::vector<ChartRow> chart_layout(Parabolic p, const golden::Fixtures& fixtures = golden::Fixtures::embedded());

/// Parses "b_3^1 + 2b_4" (or "0") into a cohomology element.
CohomologyElement parse_class_sum(Parabolic p, const std::string& text, const std::vector<std::string>& labels);

struct TableDiff {
  int parabolic;
  std::string location;
  std::string expected;
  std::string computed;
};

struct TablesReport {
  std::vector<TableDiff> diffs;
  std::size_t chart_rows_checked = 0;
  std::size_t table_entries_checked = 0;
  std::size_t unprinted_zero_pairs = 0;
  bool ok() const { return diffs.empty(); }
};

/// Recomputes both published charts and odot_0 tables and lists every
/// disagreement with the fixtures.
TablesReport verify_tables(const golden::Fixtures& fixtures = golden::Fixtures::embedded());

/// Differences between the table of P_node (node 3 or 4) and the image of the
/// P1 table under the automorphism swapping 1 and node.
std::vector<TableDiff> dynkin_transport_diffs(int node);

std::string chart_markdown(Parabolic p);
std::string chart_json(Parabolic p);
std::string table_markdown(Parabolic p, Product kind);
std::string table_json(Parabolic p, Product kind);

/// Reader for table_json output: entries[u][v] in canonical W^P order.
std::vector<std::vector<CohomologyElement>> read_table_json(const std::string& text);

}  // namespace d4
