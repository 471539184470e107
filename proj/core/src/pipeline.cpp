#include "d4/pipeline.hpp"

#include "d4/cone.hpp"
#include "d4/hilbert.hpp"
#include "d4/reptensor.hpp"
#include "d4/tables.hpp"
#include "d4/triangles.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

namespace d4 {

using nlohmann::json;

void StageResult::check(bool ok, const std::string& what) {
  if (!ok) {
    pass = false;
    failures.push_back(what);
  }
}

namespace {

std::string j(const json& v) { return v.dump(); }


IntVector read_ints(const json& a) {
  IntVector out;
  for (const auto& c : a) out.emplace_back(c.get<long>());
  return out;
}


}  // namespace

StageResult check_tables(const golden::Fixtures& fixtures) {
  StageResult r;
  r.name = "tables";
  const TablesReport rep = verify_tables(fixtures);
  r.fact("chart_rows_checked", j(rep.chart_rows_checked));
  r.fact("table_entries_checked", j(rep.table_entries_checked));
  r.fact("unprinted_pairs_zero", j(rep.unprinted_zero_pairs));
  r.fact("diffs", j(rep.diffs.size()));
  for (const auto& d : rep.diffs)
    r.check(false, "P" + std::to_string(d.parabolic) + " " + d.location + ": expected " + d.expected + ", computed " +
                       d.computed);
  for (int node : {3, 4}) {
    const auto diffs = dynkin_transport_diffs(node);
    r.fact("p" + std::to_string(node) + "_transport_diffs", j(diffs.size()));
    r.check(diffs.empty(), "P" + std::to_string(node) + " table differs from the transported P1 table");
  }
  return r;
}

StageResult check_inequalities(const golden::Fixtures& fixtures) {
  StageResult r;
  r.name = "inequalities";
  const auto& sys = full_system();
  const json g = json::parse(fixtures.content("inequalities.json"));
  const auto& counts = g.at("counts");
  std::map<std::string, std::size_t> computed;
  for (int p = 1; p <= 4; ++p) {
    const std::size_t n = static_cast<std::size_t>(
        std::count_if(sys.begin(), sys.end(), [&](const LinearInequality& i) { return i.parabolic() == p; }));
    computed["P" + std::to_string(p)] = n;
  }
  computed["chamber"] = chamber_inequalities().size();
  computed["total"] = sys.size();
  json breakdown;
  for (const auto& [k, v] : computed) {
    breakdown[k] = v;
    r.check(counts.at(k).get<std::size_t>() == v,
            "count " + k + ": expected " + counts.at(k).dump() + ", computed " + std::to_string(v));
  }
  r.fact("counts", j(breakdown));

  // Printed representatives and orbit sizes.
  std::size_t printed = 0;
  json orbit_sizes;
  for (const auto& group : g.at("groups")) {
    const std::string name = group.at("name").get<std::string>();
    const int p = group.at("parabolic").get<int>();
    const InequalityKind kind = group.at("kind").get<std::string>() == "ETI" ? InequalityKind::kETI : InequalityKind::kWTI;
    const SymmetryGroup sg = group.at("orbit_group").get<std::string>() == "S3" ? SymmetryGroup::kS3 : SymmetryGroup::kS3xF;
    const auto subset = select(sys, p, kind);
    const OrbitDecomposition dec = orbit_decompose(subset, sg);
    std::vector<std::size_t> sizes = dec.sizes();
    std::sort(sizes.begin(), sizes.end());
    orbit_sizes[name] = sizes;
    const auto labels = class_labels(Parabolic(p), fixtures);
    std::vector<std::size_t> printed_sizes;
    for (const auto& item : group.at("items")) {
      ++printed;
      const IntVector c = primitive(std::span<const Integer>(read_ints(item.at("coefficients"))));
      const std::string text = format_functional(c);
      auto it = std::find_if(subset.begin(), subset.end(), [&](const LinearInequality& i) { return i.coefficients() == c; });
      r.check(it != subset.end(), name + ": printed inequality " + text + " not generated");
      if (it == subset.end()) continue;
      if (item.contains("classes")) {
        ClassTriple t{};
        bool known = true;
        for (std::size_t k = 0; k < 3; ++k) {
          const auto l = item.at("classes").at(k).get<std::string>();
          auto pos = std::find(labels.begin(), labels.end(), l);
          known = known && pos != labels.end();
          if (pos != labels.end()) t[k] = static_cast<std::size_t>(pos - labels.begin());
        }
        r.check(known, name + ": unknown class label in " + item.at("classes").dump());
        if (known) {
          const auto triples = enumerate_deepest_triples(Parabolic(p));
          r.check(std::find(triples.begin(), triples.end(), t) != triples.end(),
                  name + ": class triple " + item.at("classes").dump() + " is not a deepest triple");
          r.check(inequality_of(Parabolic(p), t).coefficients() == c,
                  name + ": class triple " + item.at("classes").dump() + " does not give " + text);
        }
      }
      if (item.contains("orbit_size")) {
        const std::size_t expected = item.at("orbit_size").get<std::size_t>();
        printed_sizes.push_back(expected);
        const std::size_t idx = static_cast<std::size_t>(it - subset.begin());
        for (const auto& o : dec.orbits)
          if (std::find(o.members.begin(), o.members.end(), idx) != o.members.end())
            r.check(o.size() == expected, name + ": orbit of " + text + " has size " + std::to_string(o.size()) +
                                              ", printed " + std::to_string(expected));
      }
    }
    r.check(dec.orbits.size() == group.at("items").size(),
            name + ": " + std::to_string(dec.orbits.size()) + " orbits, " + std::to_string(group.at("items").size()) +
                " printed representatives");
    if (!printed_sizes.empty()) {
      std::sort(printed_sizes.begin(), printed_sizes.end());
      r.check(printed_sizes == sizes, name + ": orbit sizes " + json(sizes).dump() + " vs printed " +
                                          json(printed_sizes).dump());
    }
  }
  r.fact("printed_inequalities_found", j(printed));
  r.fact("orbit_sizes", j(orbit_sizes));

  // P3 and P4 systems are the images of the P1 system.
  for (int node : {3, 4}) {
    const auto g1 = DiagramAutomorphism::transposition(1, node);
    std::set<IntVector, IntVectorLess> image, direct;
    for (const auto& i : sys) {
      if (i.parabolic() == 1) image.insert(act_on_functional({{0, 1, 2}, g1}, i.coefficients()));
      if (i.parabolic() == node) direct.insert(i.coefficients());
    }
    r.check(image == direct, "P" + std::to_string(node) + " system is not the image of the P1 system");
  }
  return r;
}

StageResult check_cone() {
  StageResult r;
  r.name = "cone";
  const EigenconeData& d = eigencone_data();
  const std::size_t dim = cone_dimension(d.eps_rays);
  const FacetAnalysis fa = facets(d.eps_cone, d.eps_rays);
  const IrredundancyCertificate cert = is_irredundant(d.eps_cone, d.eps_rays);
  r.fact("functionals", j(d.eps_cone.functionals.size()));
  r.fact("extremal_rays", j(d.eps_rays.rays.size()));
  r.fact("lineality_dim", j(d.eps_rays.lineality.size()));
  r.fact("dimension", j(dim));
  r.fact("facets", j(fa.facets.size()));
  r.fact("irredundant", j(cert.irredundant));
  r.check(d.eps_rays.rays.size() == 81, "expected 81 extremal rays");
  r.check(d.eps_rays.lineality.empty(), "expected a pointed cone");
  r.check(dim == 12, "expected dimension 12");
  r.check(fa.facets.size() == 306, "expected 306 facets");
  r.check(cert.irredundant, "system is redundant");
  return r;
}

StageResult check_hilbert(const golden::Fixtures& fixtures) {
  StageResult r;
  r.name = "hilbert";
  const EigenconeData& d = eigencone_data();
  const json g = json::parse(fixtures.content("hilbert.json"));
  r.fact("elements", j(d.basis.elements.size()));
  r.fact("extremal_rays", j(d.basis.rays.size()));
  r.fact("simplicial_cones", j(d.basis.simplicial_cones));
  r.fact("candidates", j(d.basis.candidates));
  r.fact("orbits", j(d.orbits.size()));
  r.check(d.basis.elements.size() == g.at("hilbert_basis_size").get<std::size_t>(),
          "Hilbert basis size " + std::to_string(d.basis.elements.size()));
  r.check(d.basis.rays.size() == g.at("extremal_rays").get<std::size_t>(), "extremal ray count");

  std::set<IntVector, IntVectorLess> computed, printed;
  for (const auto& o : d.orbits) computed.insert(o.representative);
  for (const auto& rep : g.at("representatives")) {
    IntVector a;
    for (const auto& slot : rep.at("triple"))
      for (const auto& c : slot) a.emplace_back(c.get<long>());
    printed.insert(canonical_form(triple_from_fundamental(a), SymmetryGroup::kS3xF));
  }
  r.check(d.orbits.size() == printed.size(), "number of orbits");
  r.check(computed == printed, "orbit representatives differ from the printed list");
  json reps = json::array();
  for (const auto& o : d.orbits)
    reps.push_back({{"triple", triple_string(triple_from_fundamental(o.representative))}, {"size", o.size()}});
  r.fact("orbit_representatives", j(reps));
  json non_ray = json::array();
  for (std::size_t i : d.basis.non_ray_elements()) non_ray.push_back(triple_string(d.basis_triples[i]));
  r.fact("non_ray_elements", j(non_ray));
  r.check(d.basis.non_ray_elements().size() == 1, "expected exactly one element that is not an extremal ray");
  return r;
}

StageResult check_generators(const golden::Fixtures& fixtures) {
  StageResult r;
  r.name = "generators";
  const json g = json::parse(fixtures.content("hilbert.json"));
  std::vector<DominantTriple> reps;
  for (const auto& rep : g.at("representatives")) {
    DominantTriple t;
    for (std::size_t s = 0; s < 3; ++s)
      for (std::size_t i = 0; i < 4; ++i) t[s].a[i] = rep.at("triple").at(s).at(i).get<int>();
    reps.push_back(t);
  }
  const GeneratorReport rep = verify_generators(reps);
  json values = json::array();
  for (const auto& c : rep.checks) {
    const std::string name = triple_string(to_weight_triple(c.triple));
    values.push_back({{"triple", name}, {"invariant_dim", c.invariant_dim}});
    r.check(c.invariant_dim > 0, name + " has no invariant");
  }
  r.fact("invariants", j(values));
  r.check(rep.checks.size() == 10, "expected 10 representatives");
  return r;
}

StageResult check_saturation(std::size_t samples, int bound, std::uint64_t seed) {
  StageResult r;
  r.name = "saturation";
  r.fact("seed", j(seed));
  r.fact("samples", j(samples));
  r.fact("bound", j(bound));
  if (samples == 0) {
    r.fact("skipped", "true");
    return r;
  }
  const SaturationReport rep = saturation_sample(samples, bound, seed, eigencone_data().eps_cone);
  r.fact("in_cone", j(rep.in_cone_count()));
  r.fact("violations", j(rep.violations().size()));
  for (const auto& v : rep.violations())
    r.check(false, triple_string(to_weight_triple(v.triple)) + ": in_cone=" + (v.in_cone ? "true" : "false") +
                       ", invariant_dim=" + std::to_string(v.invariant_dim));
  return r;
}

std::vector<InequalityRecord> inequality_records(const golden::Fixtures& fixtures) {
  const auto& sys = full_system();
  std::vector<InequalityRecord> out(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    auto& rec = out[i];
    for (const auto& c : sys[i].coefficients()) rec.coefficients.push_back(c.get_si());
    rec.parabolic = sys[i].parabolic();
    rec.kind = to_string(sys[i].kind());
    if (const auto* t = std::get_if<TriangleSource>(&sys[i].source())) {
      const auto labels = class_labels(Parabolic(t->parabolic), fixtures);
      std::map<std::size_t, std::string> words;
      for (const auto& row : chart_layout(Parabolic(t->parabolic), fixtures)) {
        std::string w;
        for (int letter : row.word) w += "s" + std::to_string(letter);
        words[row.index] = w.empty() ? "e" : w;
      }
      for (std::size_t k : t->classes) {
        rec.triple_words.push_back(words.at(k));
        rec.classes.push_back(labels[k]);
      }
    } else {
      rec.orbit_id = "chamber";
    }
  }
  for (int p = 1; p <= 4; ++p)
    for (InequalityKind kind : {InequalityKind::kETI, InequalityKind::kWTI}) {
      std::vector<std::size_t> index;
      for (std::size_t i = 0; i < sys.size(); ++i)
        if (sys[i].parabolic() == p && sys[i].kind() == kind) index.push_back(i);
      const auto subset = select(sys, p, kind);
      const auto dec = orbit_decompose(subset, p == 2 ? SymmetryGroup::kS3xF : SymmetryGroup::kS3);
      for (std::size_t o = 0; o < dec.orbits.size(); ++o)
        for (std::size_t m : dec.orbits[o].members) {
          out[index[m]].orbit_id = to_string(kind) + "(" + std::to_string(p) + ")#" + std::to_string(o);
          out[index[m]].orbit_size = dec.orbits[o].size();
        }
    }
  return out;
}

std::string inequalities_json(const golden::Fixtures& fixtures) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : inequality_records(fixtures)) {
    nlohmann::ordered_json e;
    e["coefficients"] = r.coefficients;
    e["parabolic"] = r.parabolic;
    e["triple_words"] = r.triple_words;
    e["classes"] = r.classes;
    e["kind"] = r.kind;
    e["orbit_id"] = r.orbit_id;
    e["orbit_size"] = r.orbit_size;
    out.push_back(e);
  }
  return out.dump(1) + "\n";
}

std::vector<InequalityRecord> read_inequalities_json(const std::string& text) {
  std::vector<InequalityRecord> out;
  for (const auto& e : json::parse(text)) {
    InequalityRecord r;
    r.coefficients = e.at("coefficients").get<std::vector<long>>();
    r.parabolic = e.at("parabolic").get<int>();
    r.triple_words = e.at("triple_words").get<std::vector<std::string>>();
    r.classes = e.value("classes", std::vector<std::string>{});
    r.kind = e.at("kind").get<std::string>();
    r.orbit_id = e.at("orbit_id").get<std::string>();
    r.orbit_size = e.value("orbit_size", std::size_t{0});
    out.push_back(std::move(r));
  }
  return out;
}

std::string inequalities_markdown(const golden::Fixtures& fixtures) {
  const auto recs = inequality_records(fixtures);
  std::ostringstream md;
  md << "# Inequalities of the D4 eigencone\n\n" << recs.size() << " inequalities in a^3 = Q^12, coordinates "
     << "x1 y1 z1 w1 | x2 y2 z2 w2 | x3 y3 z3 w3.\n";
  for (int p = 1; p <= 4; ++p)
    for (const char* kind : {"ETI", "WTI"}) {
      const std::string head = std::string(kind) + "(" + std::to_string(p) + ")";
      std::map<std::string, const InequalityRecord*> reps;
      std::size_t n = 0;
      for (const auto& r : recs) {
        if (r.parabolic != p || r.kind != kind) continue;
        ++n;
        if (!reps.count(r.orbit_id)) reps[r.orbit_id] = &r;
      }
      md << "\n## " << head << "\n\n" << n << " inequalities, " << reps.size() << " orbits under "
         << (p == 2 ? "S3 x F" : "S3") << ".\n\n| orbit | size | classes | inequality |\n|---|---|---|---|\n";
      std::vector<const InequalityRecord*> ordered;
      for (const auto& [id, r] : reps) ordered.push_back(r);
      std::sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) {
        return std::stoi(a->orbit_id.substr(a->orbit_id.find('#') + 1)) <
               std::stoi(b->orbit_id.substr(b->orbit_id.find('#') + 1));
      });
      for (const auto* r : ordered) {
        IntVector c(r->coefficients.begin(), r->coefficients.end());
        md << "| " << r->orbit_id << " | " << r->orbit_size << " | (" << r->classes[0] << ", " << r->classes[1] << ", "
           << r->classes[2] << ") | " << format_functional(c) << " |\n";
      }
    }
  md << "\n## Chamber\n\n";
  for (const auto& r : recs)
    if (r.kind == "CHAMBER") md << "- " << format_functional(IntVector(r.coefficients.begin(), r.coefficients.end())) << "\n";
  return md.str();
}

bool PipelineReport::pass() const {
  return std::all_of(stages.begin(), stages.end(), [](const StageResult& s) { return s.pass; });
}

std::optional<std::string> PipelineReport::first_failing_stage() const {
  for (const auto& s : stages)
    if (!s.pass) return s.name;
  return std::nullopt;
}

std::string PipelineReport::json() const {
  nlohmann::ordered_json out;
  out["seed"] = seed;
  out["samples"] = samples;
  out["bound"] = bound;
  out["pass"] = pass();
  out["stages"] = nlohmann::ordered_json::array();
  for (const auto& s : stages) {
    nlohmann::ordered_json st;
    st["name"] = s.name;
    st["pass"] = s.pass;
    nlohmann::ordered_json facts;
    for (const auto& [k, v] : s.facts) facts[k] = nlohmann::ordered_json::parse(v);
    st["facts"] = facts;
    st["failures"] = s.failures;
    out["stages"].push_back(st);
  }
  return out.dump(2) + "\n";
}

std::string PipelineReport::markdown() const {
  std::ostringstream out;
  out << "# d4sat verification report\n\nseed " << seed << ", samples " << samples << ", bound " << bound
      << "\n\n| stage | result |\n|---|---|\n";
  for (const auto& s : stages) out << "| " << s.name << " | " << (s.pass ? "PASS" : "FAIL") << " |\n";
  for (const auto& s : stages) {
    out << "\n## " << s.name << "\n\n";
    for (const auto& [k, v] : s.facts) out << "- " << k << ": `" << v << "`\n";
    for (const auto& f : s.failures) out << "- FAILURE: " << f << "\n";
  }
  return out.str();
}

std::string PipelineReport::timings_json() const {
  nlohmann::ordered_json t;
  for (const auto& s : stages) t[s.name] = s.seconds;
  return t.dump(2) + "\n";
}

PipelineReport run_pipeline(const PipelineOptions& options) {
  const golden::Fixtures& fixtures = options.fixtures ? *options.fixtures : golden::Fixtures::embedded();
  PipelineReport report;
  report.seed = options.seed;
  report.samples = options.samples;
  report.bound = options.bound;
  auto timed = [&](auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    StageResult s = fn();
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.stages.push_back(std::move(s));
  };
  timed([&] { return check_tables(fixtures); });
  timed([&] { return check_inequalities(fixtures); });
  timed([&] { return check_cone(); });
  timed([&] { return check_hilbert(fixtures); });
  timed([&] { return check_generators(fixtures); });
  timed([&] { return check_saturation(options.samples, options.bound, options.seed); });
  return report;
}

}  // namespace d4
