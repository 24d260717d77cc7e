// knotsurf command-line front end. Every subcommand reads a corpus (a file,
// `-` for stdin, or a single --code line) and writes one JSON object per
// entry.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "knotsurf/report.hpp"

using namespace knotsurf;

namespace {

struct Input {
  std::string path;
  std::string code;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("input", in.path, "Corpus file, or - for stdin");
  cmd->add_option("--code", in.code, "A single corpus line, e.g. \"pd: X(1,4,2,5) ...\"");
}

std::vector<CorpusEntry> read(const Input& in) {
  if (!in.code.empty()) {
    std::istringstream s(in.code);
    return parse_corpus(s);
  }
  if (in.path.empty()) throw Error(ErrorKind::IoError, "no input: give a corpus path, - or --code");
  return load_corpus(in.path);
}

int emit(const std::vector<Json>& reports, bool pretty) {
  write_reports(std::cout, reports, pretty);
  bool bad = false;
  for (const auto& r : reports) bad = bad || has_violation(r);
  return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot diagrams on surfaces: checkerboard identities, Turaev genus, torus curves"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indented JSON array instead of JSON lines");

  Input in;
  auto* parse = app.add_subcommand("parse", "Parse and summarise diagrams");
  auto* analyze = app.add_subcommand("analyze", "Full report per entry");
  auto* identity = app.add_subcommand("identity-check", "Check the checkerboard Euler identity");
  auto* turaev = app.add_subcommand("turaev", "Kauffman state counts and Turaev genus");
  auto* rcx = app.add_subcommand("r-complexity", "Least meeting of a compressing curve with the diagram");
  auto* convert = app.add_subcommand("convert", "Almost-alternating diagram to torus diagram, or back");
  auto* verify = app.add_subcommand("verify", "Compare reports with the corpus goldens");
  for (auto* cmd : {parse, analyze, identity, turaev, rcx, convert, verify}) {
    add_input(cmd, in);
    cmd->add_flag("--pretty", pretty, "Indented JSON array instead of JSON lines");
  }

  std::string compressing = "1,0;0,1";
  bool compressing_set = false;
  rcx->add_option("--compressing", compressing, "Disc-bounding classes as p,q;p,q")
      ->each([&](const std::string&) { compressing_set = true; });

  int dealternator = 0;
  bool reverse = false;
  convert->add_option("--dealternator", dealternator, "1-based PD crossing to change")
      ->check(CLI::PositiveNumber);
  convert->add_flag("--reverse", reverse, "Read a JSON torus diagram and write a PD code");

  CLI11_PARSE(app, argc, argv);

  try {
    auto entries = read(in);
    if (parse->parsed()) return emit(map_entries(entries, parse_summary), pretty);
    if (analyze->parsed()) {
      const auto run = run_analyze(entries);
      write_reports(std::cout, run.reports, pretty);
      return run.exit_status;
    }
    if (identity->parsed()) return emit(map_entries(entries, identity_summary), pretty);
    if (turaev->parsed()) return emit(map_entries(entries, turaev_summary), pretty);
    if (rcx->parsed()) {
      // Without the flag a diagram's own compressing classes take precedence.
      const auto classes = compressing_set ? parse_classes(compressing) : std::vector<CurveClass>{};
      return emit(map_entries(entries, [&](const CorpusEntry& e) { return r_summary(e, classes); }),
                  pretty);
    }
    if (convert->parsed()) {
      if (dealternator > 0) {
        for (auto& e : entries) e.dealternator = dealternator;
      }
      // a conversion entry is only meaningful against its own planar crossing ids
      for (const auto& e : entries) {
        if (!reverse && e.dealternator && (!e.pd || *e.dealternator > e.pd->crossing_count())) {
          throw Error(ErrorKind::PreconditionViolated, e.name + ": dealternator needs a planar code with that crossing");
        }
      }
      const auto out = map_entries(entries, [&](const CorpusEntry& e) { return convert_entry(e, reverse); });
      int status = emit(out, pretty);
      for (const auto& r : out) status = r.contains("error") ? std::max(status, 1) : status;
      return status;
    }
    const auto run = run_verify(entries);
    if (run.empty) {
      std::cerr << "warning: empty corpus, nothing to verify\n";
      return 0;
    }
    if (!run.diffs.empty()) std::cout << diff_table(run);
    if (!run.mismatched.empty()) {
      std::string names;
      for (const auto& n : run.mismatched) names += (names.empty() ? "" : ", ") + n;
      std::cerr << Error(ErrorKind::GoldenMismatch, names).what() << "\n";
    }
    for (const auto& n : run.violations) std::cerr << "violation: " << n << "\n";
    if (run.exit_status == 0) {
      std::cout << "ok: " << entries.size() << " entries, " << run.checked << " golden values\n";
    }
    return run.exit_status;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
