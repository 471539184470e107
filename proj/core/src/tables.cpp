#include "d4/tables.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace d4 {

using nlohmann::json;

namespace {

std::string chart_file(int node) { return "p" + std::to_string(node) + "_chart.json"; }
std::string table_file(int node) { return "p" + std::to_string(node) + "_table.json"; }

WeylElement word_element(const json& word) {
  std::vector<int> letters = word.get<std::vector<int>>();
  return WeylElement::from_word(letters);
}

std::vector<std::string> labels_from_chart(Parabolic p, const golden::Fixtures& fixtures) {
  const SchubertRing& ring = schubert_ring(p);
  const json chart = json::parse(fixtures.content(chart_file(p.node())));
  std::vector<std::string> labels(ring.size());
  for (const auto& row : chart.at("rows")) {
    const WeylElement w = word_element(row.at("word"));
    if (!is_min_coset_rep(w, p)) continue;  // reported by verify_tables
    auto& slot = labels[ring.index_of(w)];
    if (slot.empty()) slot = row.at("label").get<std::string>();
  }
  const auto fallback = ring.canonical_labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i].empty()) labels[i] = fallback[i] + "?";
  return labels;
}

json fraction_array(const Weight& v) {
  json a = json::array();
  for (int i = 0; i < 4; ++i) a.push_back(to_fraction_string(v[i]));
  return a;
}

}  // namespace

std::vector<std::string> class_labels(Parabolic p, const golden::Fixtures& fixtures) {
  if (p.node() <= 2) return labels_from_chart(p, fixtures);
  const Parabolic p1(1);
  const auto base = labels_from_chart(p1, fixtures);
  const auto g = DiagramAutomorphism::transposition(1, p.node());
  const SchubertRing& r1 = schubert_ring(p1);
  const SchubertRing& ring = schubert_ring(p);
  std::vector<std::string> labels(ring.size());
  for (std::size_t i = 0; i < r1.size(); ++i) labels[ring.index_of(g.apply(r1.reps()[i]))] = base[i];
  return labels;
}

std::vector<ChartRow> chart_layout(Parabolic p, const golden::Fixtures& fixtures) {
  const SchubertRing& ring = schubert_ring(p);
  std::vector<ChartRow> rows;
  if (p.node() <= 2) {
    const json chart = json::parse(fixtures.content(chart_file(p.node())));
    for (const auto& row : chart.at("rows")) {
      const WeylElement w = word_element(row.at("word"));
      if (!is_min_coset_rep(w, p)) continue;
      rows.push_back({ring.index_of(w), row.at("word").get<std::vector<int>>()});
    }
  } else {
    const auto g = DiagramAutomorphism::transposition(1, p.node());
    for (auto row : chart_layout(Parabolic(1), fixtures)) {
      row.index = ring.index_of(g.apply(schubert_ring(Parabolic(1)).reps()[row.index]));
      for (int& letter : row.word) letter = g(letter);
      rows.push_back(std::move(row));
    }
  }
  std::vector<bool> seen(ring.size());
  std::vector<ChartRow> out;
  for (auto& row : rows)
    if (!seen[row.index]) {
      seen[row.index] = true;
      out.push_back(std::move(row));
    }
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (!seen[i]) out.push_back({i, ring.reps()[i].reduced_word()});
  return out;
}

CohomologyElement parse_class_sum(Parabolic p, const std::string& text, const std::vector<std::string>& labels) {
  std::vector<Integer> coeffs(labels.size());
  if (text == "0") return CohomologyElement(p, coeffs);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(" + ", pos);
    if (end == std::string::npos) end = text.size();
    const std::string term = text.substr(pos, end - pos);
    std::size_t k = 0;
    while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
    const Integer c = k == 0 ? Integer(1) : Integer(term.substr(0, k));
    const std::string label = term.substr(k);
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) fail(ErrorCode::kParse, "unknown class label '" + label + "' in '" + text + "'");
    coeffs[static_cast<std::size_t>(it - labels.begin())] += c;
    pos = end + 3;
  }
  return CohomologyElement(p, coeffs);
}

TablesReport verify_tables(const golden::Fixtures& fixtures) {
  TablesReport report;
  for (int node : {1, 2}) {
    const Parabolic p(node);
    const SchubertRing& ring = schubert_ring(p);
    const auto labels = class_labels(p, fixtures);
    auto diff = [&](std::string where, std::string expected, std::string computed) {
      report.diffs.push_back({node, std::move(where), std::move(expected), std::move(computed)});
    };

    // Chart: every row names a distinct element of W^P with the printed lambda and n.
    const json chart = json::parse(fixtures.content(chart_file(node)));
    std::set<std::size_t> seen;
    for (const auto& row : chart.at("rows")) {
      ++report.chart_rows_checked;
      const std::string label = row.at("label").get<std::string>();
      const std::string where = chart_file(node) + " row " + label;
      const WeylElement w = word_element(row.at("word"));
      const auto word_len = row.at("word").size();
      if (!is_min_coset_rep(w, p)) {
        diff(where + " word", "element of W^P", w.word_string() + " is not a minimal coset representative");
        continue;
      }
      const std::size_t i = ring.index_of(w);
      if (static_cast<int>(word_len) != ring.degree(i))
        diff(where + " word", "reduced word", "length " + std::to_string(ring.degree(i)));
      if (!seen.insert(i).second) diff(where, "distinct class", "repeats " + labels[i]);
      if (labels[i] != label) diff(where + " label", label, labels[i]);
      Weight printed;
      const auto& lam = row.at("lambda");
      for (int k = 0; k < 4; ++k) printed[k] = parse_fraction(lam.at(static_cast<std::size_t>(k)).get<std::string>());
      if (!(printed == ring.lambda(i))) diff(where + " lambda", printed.str(), ring.lambda(i).str());
      const Rational n = parse_fraction(row.at("n").get<std::string>());
      if (n != ring.level(i)) diff(where + " n", to_fraction_string(n), to_fraction_string(ring.level(i)));
    }
    if (seen.size() != ring.size())
      diff(chart_file(node), std::to_string(ring.size()) + " classes", std::to_string(seen.size()) + " distinct rows");
    if (chart.contains("dual_pairs")) {
      for (const auto& pr : chart.at("dual_pairs")) {
        const auto a = pr.at(0).get<std::string>(), b = pr.at(1).get<std::string>();
        auto ia = std::find(labels.begin(), labels.end(), a), ib = std::find(labels.begin(), labels.end(), b);
        if (ia == labels.end() || ib == labels.end()) {
          diff(chart_file(node) + " dual pair " + a + "/" + b, "known labels", "unknown label");
          continue;
        }
        const std::size_t d = ring.poincare_dual(static_cast<std::size_t>(ia - labels.begin()));
        if (labels[d] != b) diff(chart_file(node) + " dual of " + a, b, labels[d]);
      }
    }

    // Table: lower triangle as printed; everything not printed must vanish.
    const json table = json::parse(fixtures.content(table_file(node)));
    const auto columns = table.at("columns").get<std::vector<std::string>>();
    auto index_of_label = [&](const std::string& l) -> std::optional<std::size_t> {
      auto it = std::find(labels.begin(), labels.end(), l);
      if (it == labels.end()) return std::nullopt;
      return static_cast<std::size_t>(it - labels.begin());
    };
    std::set<std::pair<std::size_t, std::size_t>> printed_pairs;
    for (const auto& row : table.at("rows")) {
      const std::string rl = row.at("row").get<std::string>();
      const auto ri = index_of_label(rl);
      const auto& entries = row.at("entries");
      for (std::size_t j = 0; j < entries.size(); ++j) {
        const std::string where = table_file(node) + " [" + rl + ", " + (j < columns.size() ? columns[j] : "?") + "]";
        const auto cj = j < columns.size() ? index_of_label(columns[j]) : std::nullopt;
        if (!ri || !cj) {
          diff(where, "known labels", "unknown row or column label");
          continue;
        }
        ++report.table_entries_checked;
        printed_pairs.insert({std::min(*ri, *cj), std::max(*ri, *cj)});
        const std::string text = entries.at(j).get<std::string>();
        const CohomologyElement& got = ring.odot(*ri, *cj);
        try {
          const CohomologyElement expected = parse_class_sum(p, text, labels);
          if (!(expected == got)) diff(where, text, got.format(labels));
        } catch (const Error& e) {
          diff(where, text, std::string("unparseable: ") + e.what());
        }
      }
    }
    for (std::size_t u = 0; u < ring.size(); ++u)
      for (std::size_t v = u; v < ring.size(); ++v) {
        if (u == ring.identity() || v == ring.identity() || printed_pairs.count({u, v})) continue;
        if (ring.odot(u, v).is_zero())
          ++report.unprinted_zero_pairs;
        else
          diff(table_file(node) + " [" + labels[u] + ", " + labels[v] + "]", "not printed (zero)",
               ring.odot(u, v).format(labels));
      }
  }
  return report;
}

std::vector<TableDiff> dynkin_transport_diffs(int node) {
  ensure(node == 3 || node == 4, "transport is defined for P3 and P4");
  const auto g = DiagramAutomorphism::transposition(1, node);
  const Parabolic p1(1), pt(node);
  const SchubertRing& r1 = schubert_ring(p1);
  const SchubertRing& rt = schubert_ring(pt);
  std::vector<std::size_t> image(r1.size());
  for (std::size_t i = 0; i < r1.size(); ++i) image[i] = rt.index_of(g.apply(r1.reps()[i]));
  const auto labels = class_labels(pt);
  std::vector<TableDiff> diffs;
  for (Product kind : {Product::kOdot, Product::kCup}) {
    for (std::size_t u = 0; u < r1.size(); ++u)
      for (std::size_t v = 0; v < r1.size(); ++v) {
        std::vector<Integer> moved(rt.size());
        const auto& src = r1.product(kind, u, v);
        for (std::size_t w = 0; w < r1.size(); ++w) moved[image[w]] = src[w];
        const CohomologyElement expected(pt, moved);
        const CohomologyElement& got = rt.product(kind, image[u], image[v]);
        if (!(expected == got))
          diffs.push_back({node, "[" + labels[image[u]] + ", " + labels[image[v]] + "]", expected.format(labels),
                           got.format(labels)});
      }
    for (std::size_t w = 0; w < r1.size(); ++w)
      if (!(g.apply(r1.lambda(w)) == rt.lambda(image[w])))
        diffs.push_back({node, "lambda of " + labels[image[w]], g.apply(r1.lambda(w)).str(), rt.lambda(image[w]).str()});
  }
  return diffs;
}

std::string chart_markdown(Parabolic p) {
  const SchubertRing& ring = schubert_ring(p);
  const auto labels = class_labels(p);
  std::ostringstream out;
  out << "### W^P for P" << p.node() << "\n\n";
  out << "| class | w | lambda_w | n_w | dual |\n|---|---|---|---|---|\n";
  for (const auto& [i, word] : chart_layout(p)) {
    std::string w;
    for (int letter : word) w += "s" + std::to_string(letter);
    out << "| " << labels[i] << " | " << (w.empty() ? "e" : w) << " | " << ring.lambda(i).str() << " | "
        << to_fraction_string(ring.level(i)) << " | " << labels[ring.poincare_dual(i)] << " |\n";
  }
  return out.str();
}

std::string chart_json(Parabolic p) {
  const SchubertRing& ring = schubert_ring(p);
  const auto labels = class_labels(p);
  json rows = json::array();
  for (const auto& [i, word] : chart_layout(p))
    rows.push_back({{"label", labels[i]},
                    {"word", word},
                    {"lambda", fraction_array(ring.lambda(i))},
                    {"n", to_fraction_string(ring.level(i))},
                    {"dual", labels[ring.poincare_dual(i)]}});
  return json({{"parabolic", p.node()}, {"rows", rows}}).dump(2) + "\n";
}

std::string table_markdown(Parabolic p, Product kind) {
  const SchubertRing& ring = schubert_ring(p);
  const auto labels = class_labels(p);
  std::ostringstream out;
  std::vector<std::size_t> order;
  for (const auto& row : chart_layout(p))
    if (row.index != ring.identity()) order.push_back(row.index);
  out << "### " << (kind == Product::kOdot ? "odot_0" : "cup") << " product on G/P" << p.node() << "\n\n|   |";
  for (std::size_t v : order) out << " " << labels[v] << " |";
  out << "\n|---|";
  for (std::size_t k = 0; k < order.size(); ++k) out << "---|";
  out << "\n";
  for (std::size_t u : order) {
    out << "| " << labels[u] << " |";
    for (std::size_t v : order) out << " " << ring.product(kind, u, v).format(labels) << " |";
    out << "\n";
  }
  return out.str();
}

std::string table_json(Parabolic p, Product kind) {
  const SchubertRing& ring = schubert_ring(p);
  const auto labels = class_labels(p);
  std::vector<std::size_t> order;
  json ordered_labels = json::array();
  for (const auto& row : chart_layout(p)) {
    order.push_back(row.index);
    ordered_labels.push_back(labels[row.index]);
  }
  json entries = json::array();
  for (std::size_t u : order) {
    json row = json::array();
    for (std::size_t v : order) row.push_back(ring.product(kind, u, v).format(labels));
    entries.push_back(row);
  }
  return json({{"parabolic", p.node()},
               {"product", kind == Product::kOdot ? "odot0" : "cup"},
               {"labels", ordered_labels},
               {"entries", entries}})
             .dump(2) +
         "\n";
}

std::vector<std::vector<CohomologyElement>> read_table_json(const std::string& text) {
  const json j = json::parse(text);
  const Parabolic p(j.at("parabolic").get<int>());
  const auto labels = class_labels(p);
  const auto file_labels = j.at("labels").get<std::vector<std::string>>();
  ensure(file_labels.size() == labels.size(), "table has the wrong number of classes");
  std::vector<std::size_t> index;
  for (const auto& l : file_labels) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) fail(ErrorCode::kParse, "unknown class label '" + l + "'");
    index.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  std::vector<std::vector<CohomologyElement>> out(labels.size(), std::vector<CohomologyElement>(labels.size(), CohomologyElement(p)));
  const auto& entries = j.at("entries");
  ensure(entries.size() == labels.size(), "table has the wrong number of rows");
  for (std::size_t u = 0; u < entries.size(); ++u) {
    ensure(entries[u].size() == labels.size(), "table row has the wrong length");
    for (std::size_t v = 0; v < entries[u].size(); ++v)
      out[index[u]][index[v]] = parse_class_sum(p, entries[u][v].get<std::string>(), labels);
  }
  return out;
}

}  // namespace d4
