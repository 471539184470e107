// d4sat: tables, inequalities, cone, Hilbert basis, invariants and the full
// verification run.
//
// Exit status: 0 ok, 2 a reference value was not reproduced, 1 internal
// error or corrupted fixture.

#include "d4/cone.hpp"
#include "d4/golden.hpp"
#include "d4/hilbert.hpp"
#include "d4/pipeline.hpp"
#include "d4/reptensor.hpp"
#include "d4/tables.hpp"
#include "d4/triangles.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kMismatch = 2;

struct Common {
  std::string format = "json";
  std::string out_dir = "d4sat-out";
  std::string golden_dir;
};

struct FixtureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

d4::golden::Fixtures read_fixtures(const Common& c) {
  return c.golden_dir.empty() ? d4::golden::Fixtures::embedded() : d4::golden::Fixtures::from_directory(c.golden_dir);
}

d4::golden::Fixtures load_fixtures(const Common& c) {
  d4::golden::Fixtures f = read_fixtures(c);
  const auto problems = f.checksum_problems();
  if (!problems.empty()) {
    std::string msg = "corrupted reference fixtures:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw FixtureError(msg);
  }
  return f;
}

void write_file(const fs::path& dir, const std::string& name, const std::string& text) {
  fs::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  out << text;
  std::cout << "wrote " << (dir / name).string() << "\n";
}

std::string ext(const Common& c) { return c.format == "md" ? ".md" : ".json"; }

// A corrupted fixture still gets compared, so the message can point at the
// entry that changed.
void locate_table_diffs(const Common& c) {
  try {
    for (const auto& d : d4::verify_tables(read_fixtures(c)).diffs)
      std::cerr << "DIFF P" << d.parabolic << " " << d.location << ": fixture says " << d.expected << ", computed "
                << d.computed << "\n";
  } catch (const std::exception& e) {
    std::cerr << "fixture unreadable: " << e.what() << "\n";
  }
}

int cmd_tables(const Common& c, std::vector<int> parabolics) {
  if (!read_fixtures(c).intact()) locate_table_diffs(c);
  const auto fixtures = load_fixtures(c);
  if (parabolics.empty()) parabolics = {1, 2};
  for (int p : parabolics) {
    const d4::Parabolic par(p);
    const std::string stem = "p" + std::to_string(p);
    write_file(c.out_dir, stem + "_chart" + ext(c), c.format == "md" ? d4::chart_markdown(par) : d4::chart_json(par));
    write_file(c.out_dir, stem + "_table" + ext(c),
               c.format == "md" ? d4::table_markdown(par, d4::Product::kOdot) : d4::table_json(par, d4::Product::kOdot));
  }
  bool ok = true;
  const auto rep = d4::verify_tables(fixtures);
  for (const auto& d : rep.diffs) {
    if (std::find(parabolics.begin(), parabolics.end(), d.parabolic) == parabolics.end()) continue;
    std::cerr << "DIFF P" << d.parabolic << " " << d.location << ": expected " << d.expected << ", computed "
              << d.computed << "\n";
    ok = false;
  }
  for (int p : parabolics)
    if (p == 3 || p == 4) {
      for (const auto& d : d4::dynkin_transport_diffs(p))
        std::cerr << "DIFF P" << p << " transport " << d.location << ": expected " << d.expected << ", computed "
                  << d.computed << "\n";
      ok = ok && d4::dynkin_transport_diffs(p).empty();
    }
  std::cout << "checked " << rep.chart_rows_checked << " chart rows, " << rep.table_entries_checked
            << " table entries: " << (ok ? "match" : "MISMATCH") << "\n";
  return ok ? kOk : kMismatch;
}

int cmd_inequalities(const Common& c) {
  const auto fixtures = load_fixtures(c);
  write_file(c.out_dir, "inequalities" + ext(c),
             c.format == "md" ? d4::inequalities_markdown(fixtures) : d4::inequalities_json(fixtures));
  const d4::StageResult r = d4::check_inequalities(fixtures);
  for (const auto& [k, v] : r.facts) std::cout << k << ": " << v << "\n";
  for (const auto& f : r.failures) std::cerr << "DIFF " << f << "\n";
  return r.pass ? kOk : kMismatch;
}

int cmd_cone(const Common& c) {
  load_fixtures(c);
  const auto& d = d4::eigencone_data();
  write_file(c.out_dir, "cone_functionals.json", d4::hrep_json(d.eps_cone));
  write_file(c.out_dir, "cone_rays.json", d4::vrep_json(d.eps_rays));
  const auto cert = d4::is_irredundant(d.eps_cone, d.eps_rays);
  write_file(c.out_dir, "irredundancy.txt", cert.text(d.eps_cone, d.eps_rays));
  const d4::StageResult r = d4::check_cone();
  for (const auto& [k, v] : r.facts) std::cout << k << ": " << v << "\n";
  for (const auto& f : r.failures) std::cerr << "DIFF " << f << "\n";
  return r.pass ? kOk : kMismatch;
}

int cmd_hilbert(const Common& c) {
  const auto fixtures = load_fixtures(c);
  const auto& d = d4::eigencone_data();
  write_file(c.out_dir, "hilbert" + ext(c), c.format == "md" ? d4::hilbert_markdown(d) : d4::hilbert_json(d));
  const d4::StageResult r = d4::check_hilbert(fixtures);
  for (const auto& [k, v] : r.facts) std::cout << k << ": " << v << "\n";
  for (const auto& f : r.failures) std::cerr << "DIFF " << f << "\n";
  return r.pass ? kOk : kMismatch;
}

// "1,0,0,0/0,1,0,0/0,0,1,1" -> dominant triple (';' also separates weights)
d4::DominantTriple parse_triple(std::string text) {
  d4::DominantTriple t;
  std::replace(text.begin(), text.end(), '/', ';');
  std::stringstream ss(text);
  std::string slot;
  std::size_t s = 0;
  while (std::getline(ss, slot, ';')) {
    if (s >= 3) throw CLI::ValidationError("--triple", "expected three weights");
    std::stringstream ws(slot);
    std::string num;
    std::size_t i = 0;
    while (std::getline(ws, num, ',')) {
      if (i >= 4) throw CLI::ValidationError("--triple", "expected four coordinates per weight");
      int v = 0;
      const auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
      if (ec != std::errc() || end != num.data() + num.size())
        throw CLI::ValidationError("--triple", "'" + num + "' is not an integer");
      t[s].a[i++] = v;
    }
    if (i != 4) throw CLI::ValidationError("--triple", "expected four coordinates per weight");
    ++s;
  }
  if (s != 3) throw CLI::ValidationError("--triple", "expected three weights");
  for (const auto& w : t)
    for (int v : w.a)
      if (v < 0) throw CLI::ValidationError("--triple", "coordinates must be non-negative");
  return t;
}

int cmd_invariants(const Common& c, const std::vector<std::string>& triples) {
  const auto fixtures = load_fixtures(c);
  if (triples.empty()) {
    const d4::StageResult r = d4::check_generators(fixtures);
    for (const auto& [k, v] : r.facts) std::cout << k << ": " << v << "\n";
    for (const auto& f : r.failures) std::cerr << "DIFF " << f << "\n";
    return r.pass ? kOk : kMismatch;
  }
  const auto& cone = d4::eigencone_data().eps_cone;
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& text : triples) {
    const auto t = parse_triple(text);
    const auto wt = d4::to_weight_triple(t);
    const auto dim = d4::invariant_dim(t[0], t[1], t[2]);
    const auto flat = d4::flatten(wt);
    const bool in_cone = d4::contains(cone, std::span<const d4::Rational>(flat));
    if (c.format == "md")
      std::cout << "| " << d4::triple_string(wt) << " | " << dim << " | " << (in_cone ? "yes" : "no") << " |\n";
    else
      out.push_back({{"triple", d4::triple_string(wt)}, {"invariant_dim", dim}, {"in_cone", in_cone}});
  }
  if (c.format != "md") std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const Common& c, std::uint64_t seed, std::size_t samples, int bound) {
  const auto fixtures = load_fixtures(c);
  d4::PipelineOptions opt;
  opt.seed = seed;
  opt.samples = samples;
  opt.bound = bound;
  opt.fixtures = &fixtures;
  const d4::PipelineReport rep = d4::run_pipeline(opt);
  write_file(c.out_dir, "report.json", rep.json());
  write_file(c.out_dir, "report.md", rep.markdown());
  write_file(c.out_dir, "timings.json", rep.timings_json());
  for (const auto& s : rep.stages) {
    std::cout << (s.pass ? "PASS " : "FAIL ") << s.name << "\n";
    for (const auto& f : s.failures) std::cerr << "  " << f << "\n";
  }
  if (const auto first = rep.first_failing_stage()) std::cerr << "first failing stage: " << *first << "\n";
  return rep.pass() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"D4 eigencone and saturation toolkit"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool formats) {
    if (formats) sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "md"}));
    sub->add_option("--out", common.out_dir, "Output directory");
    sub->add_option("--golden-dir", common.golden_dir, "Read reference fixtures from this directory")
        ->check(CLI::ExistingDirectory);
  };

  std::vector<int> parabolics;
  auto* tables = app.add_subcommand("tables", "Charts and odot_0 tables of G/P");
  add_common(tables, true);
  tables->add_option("--parabolic", parabolics, "Maximal parabolic 1..4 (default: 1 and 2)")->check(CLI::Range(1, 4));

  auto* ineq = app.add_subcommand("inequalities", "The 306 inequalities with orbit labels");
  add_common(ineq, true);

  auto* cone = app.add_subcommand("cone", "Extremal rays and irredundancy certificate");
  add_common(cone, false);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of the eigencone semigroup");
  add_common(hilbert, true);

  std::vector<std::string> triples;
  auto* inv = app.add_subcommand("invariants", "Invariant dimensions of triple tensor products");
  add_common(inv, true);
  inv->add_option("--triple", triples, "Fundamental coordinates, e.g. 1,0,0,0/1,0,0,0/0,0,0,0 (default: generators)");

  std::uint64_t seed = 20240601;
  std::size_t samples = 500;
  int bound = 4;
  auto* verify = app.add_subcommand("verify", "Run every check and write a report");
  add_common(verify, false);
  verify->add_option("--seed", seed, "Seed for saturation sampling");
  verify->add_option("--samples", samples, "Number of sampled triples");
  verify->add_option("--bound", bound, "Largest fundamental coordinate in samples")->check(CLI::Range(0, 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInternal;
  }

  try {
    if (*tables) return cmd_tables(common, parabolics);
    if (*ineq) return cmd_inequalities(common);
    if (*cone) return cmd_cone(common);
    if (*hilbert) return cmd_hilbert(common);
    if (*inv) return cmd_invariants(common, triples);
    if (*verify) return cmd_verify(common, seed, samples, bound);
  } catch (const FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
