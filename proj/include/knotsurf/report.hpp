#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "knotsurf/codes.hpp"
#include "knotsurf/embedded.hpp"
#include "knotsurf/json_io.hpp"
#include "knotsurf/torus_curves.hpp"

namespace knotsurf {

/// One line of a corpus file:
///
///   [name] <gauss|pd|dt|json>: <code> [; key=value ...]
///
/// Options are `dealternator=N` (analyse the torus conversion at PD crossing
/// N), `surface=turaev` (analyse the Turaev embedding) and golden values
/// for the report keys listed in kReportKeys.
struct CorpusEntry {
  std::string name;
  std::string format;
  std::string code;
  int line = 0;
  std::optional<int> dealternator;
  bool turaev_surface = false;
  nlohmann::json expected = nlohmann::json::object();

  /// The parsed input diagram; pd is set when it is planar and undecorated.
  EmbeddedDiagram input;
  std::optional<PlanarDiagramCode> pd;
};

extern const std::vector<std::string> kReportKeys;

/// Throws ParseError naming the line, IoError for unreadable paths.
std::vector<CorpusEntry> parse_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus(const std::string& path);
CorpusEntry parse_entry(const std::string& line, int line_number = 1);

/// The diagram an entry asks to analyse (after conversion or Turaev
/// embedding if requested).
EmbeddedDiagram target_diagram(const CorpusEntry& e);

/// Full analysis. Library errors are reported in an "error" member; identity
/// and lemma violations also land in "violations".
Json analyze_entry(const CorpusEntry& e);
Json parse_summary(const CorpusEntry& e);
Json identity_summary(const CorpusEntry& e);
Json turaev_summary(const CorpusEntry& e);
Json r_summary(const CorpusEntry& e, const std::vector<CurveClass>& compressing);
Json convert_entry(const CorpusEntry& e, bool reverse);

Json to_json(const DualCycle& c);

/// Parses "p,q;p,q;..."; throws ParseError.
std::vector<CurveClass> parse_classes(const std::string& text);

/// Worker count: KNOTSURF_THREADS if set to a positive integer, else the
/// hardware concurrency.
int thread_count();

/// Applies f to every entry on thread_count() workers; results keep input
/// order.
std::vector<Json> map_entries(const std::vector<CorpusEntry>& entries,
                              const std::function<Json(const CorpusEntry&)>& f);

/// True when a report records an identity or lemma violation.
bool has_violation(const Json& report);

struct AnalyzeRun {
  std::vector<Json> reports;
  int exit_status = 0;
};
AnalyzeRun run_analyze(const std::vector<CorpusEntry>& entries);

struct GoldenDiff {
  std::string entry;
  std::string key;
  std::string expected;
  std::string actual;
};

struct VerifyRun {
  std::vector<GoldenDiff> diffs;
  std::vector<std::string> mismatched;  // entry names, corpus order
  std::vector<std::string> violations;
  int checked = 0;
  int exit_status = 0;
  bool empty = false;
};
VerifyRun run_verify(const std::vector<CorpusEntry>& entries);
std::string diff_table(const VerifyRun& run);

/// Writes reports as JSON lines, or one indented array with pretty.
void write_reports(std::ostream& out, const std::vector<Json>& reports, bool pretty);

}  // namespace knotsurf
