#include "knotsurf/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "knotsurf/checkerboard.hpp"
#include "knotsurf/ribbon.hpp"
#include "knotsurf/turaev.hpp"

namespace knotsurf {

const std::vector<std::string> kReportKeys = {
    "crossings",  "alternating",   "colorable",       "chi_shaded", "chi_unshaded",
    "i_half",     "howie_invariant", "ambient_chi",   "bigons",     "genus",
    "turaev_genus", "r",           "annuli",          "incident"};

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::optional<long> to_int(const std::string& s) {
  long v = 0;
  const auto* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) return std::nullopt;
  return v;
}

// Splits at ';' outside brackets, so a json code stays in one piece.
std::vector<std::string> split_options(const std::string& s) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char ch : s) {
    if (ch == '[' || ch == '{') ++depth;
    if (ch == ']' || ch == '}') --depth;
    if (ch == ';' && depth == 0) {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  return out;
}

void build_input(CorpusEntry& e) {
  if (e.format == "json") {
    e.input = embedded_from_json(nlohmann::json::parse(e.code));
  } else if (e.format == "pd") {
    const auto pd = parse_pd(e.code);
    e.input = {to_ribbon(pd), {}, {}};
  } else if (e.format == "gauss") {
    e.input = {to_ribbon(parse_gauss(e.code)), {}, {}};
  } else {
    e.input = {to_ribbon(parse_dt(e.code)), {}, {}};
  }
  if (e.input.is_cellular() && e.input.ribbon.euler_characteristic() == 2) {
    e.pd = e.format == "pd" ? parse_pd(e.code) : to_pd(e.input.ribbon);
  }
}

}  // namespace

CorpusEntry parse_entry(const std::string& raw, int line) {
  CorpusEntry e;
  e.line = line;
  std::string text = trim(raw);
  if (!text.empty() && text.front() == '[') {
    const auto close = text.find(']');
    if (close == std::string::npos) parse_fail(line, "unterminated entry name");
    e.name = trim(std::string_view(text).substr(1, close - 1));
    text = trim(std::string_view(text).substr(close + 1));
  }
  if (e.name.empty()) e.name = "line" + std::to_string(line);
  const auto colon = text.find(':');
  if (colon == std::string::npos) parse_fail(line, "missing format prefix");
  e.format = trim(std::string_view(text).substr(0, colon));
  if (e.format != "gauss" && e.format != "pd" && e.format != "dt" && e.format != "json") {
    parse_fail(line, "unknown format '" + e.format + "'");
  }
  auto parts = split_options(text.substr(colon + 1));
  e.code = trim(parts[0]);
  if (e.code.empty()) parse_fail(line, "empty code");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string opt = trim(parts[i]);
    if (opt.empty()) continue;
    const auto eq = opt.find('=');
    if (eq == std::string::npos) parse_fail(line, "option '" + opt + "' is not key=value");
    const std::string key = trim(std::string_view(opt).substr(0, eq));
    const std::string value = trim(std::string_view(opt).substr(eq + 1));
    if (key == "dealternator") {
      const auto v = to_int(value);
      if (!v || *v < 1) parse_fail(line, "dealternator must be a positive crossing id");
      e.dealternator = static_cast<int>(*v);
    } else if (key == "surface") {
      if (value != "turaev") parse_fail(line, "unknown surface '" + value + "'");
      e.turaev_surface = true;
    } else if (std::find(kReportKeys.begin(), kReportKeys.end(), key) != kReportKeys.end()) {
      if (value == "true" || value == "false") {
        e.expected[key] = value == "true";
      } else if (value == "null") {
        e.expected[key] = nullptr;
      } else if (const auto v = to_int(value)) {
        e.expected[key] = *v;
      } else {
        parse_fail(line, "value of '" + key + "' must be an integer, true, false or null");
      }
    } else {
      parse_fail(line, "unknown key '" + key + "'");
    }
  }
  if (e.dealternator && e.turaev_surface) {
    parse_fail(line, "dealternator and surface=turaev are exclusive");
  }
  try {
    build_input(e);
  } catch (const Error& err) {
    parse_fail(line, err.what());
  } catch (const nlohmann::json::exception& err) {
    parse_fail(line, err.what());
  }
  if ((e.dealternator || e.turaev_surface) && !e.pd) {
    parse_fail(line, "conversion options need a planar diagram");
  }
  if (e.dealternator && *e.dealternator > e.pd->crossing_count()) {
    parse_fail(line, "dealternator out of range");
  }
  return e;
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    const auto hash = line.find('#');
    // '#' starts a comment except inside a JSON code
    const auto brace = line.find('{');
    if (hash != std::string::npos && (brace == std::string::npos || hash < brace)) {
      line.erase(hash);
    }
    if (trim(line).empty()) continue;
    auto e = parse_entry(line, n);
    if (!names.insert(e.name).second) parse_fail(n, "duplicate entry name '" + e.name + "'");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  if (path == "-") return parse_corpus(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  return parse_corpus(in);
}

EmbeddedDiagram target_diagram(const CorpusEntry& e) {
  if (e.dealternator) return almost_alternating_to_torus(*e.pd, *e.dealternator);
  if (e.turaev_surface) return build_turaev_embedding(*e.pd);
  return e.input;
}

Json to_json(const DualCycle& c) {
  Json j;
  j["nodes"] = c.nodes;
  j["links"] = c.links;
  j["directions"] = c.directions;
  j["weight"] = c.weight;
  j["class"] = to_json(c.cls);
  return j;
}

namespace {

Json head(const CorpusEntry& e) {
  Json j;
  j["schema"] = 1;
  j["name"] = e.name;
  return j;
}

Json error_json(const Error& err) {
  return {{"kind", std::string(to_string(err.kind()))}, {"message", err.what()}};
}

bool is_violation(ErrorKind k) {
  return k == ErrorKind::IdentityViolation || k == ErrorKind::LemmaViolation;
}

// Runs body and folds a library error into the report.
Json guarded(const CorpusEntry& e, const std::function<void(Json&)>& body) {
  Json j = head(e);
  try {
    body(j);
  } catch (const Error& err) {
    if (is_violation(err.kind())) j["violations"].push_back(std::string(to_string(err.kind())));
    j["error"] = error_json(err);
  }
  return j;
}

bool alternating(const EmbeddedDiagram& d) { return d.ribbon.is_alternating(); }

}  // namespace

Json analyze_entry(const CorpusEntry& e) {
  return guarded(e, [&](Json& j) {
    for (const auto& k : kReportKeys) j[k] = nullptr;
    const auto d = target_diagram(e);
    const int chi = euler_characteristic(d);
    j["crossings"] = d.ribbon.vertex_count();
    j["alternating"] = alternating(d);
    j["ambient_chi"] = chi;
    j["genus"] = genus(d);
    j["bigons"] = find_diagrammatic_bigons(d).size();
    const auto cb = checkerboard_coloring(d);
    j["colorable"] = cb.has_value();
    if (cb) {
      j["chi_shaded"] = cb->chi_shaded;
      j["chi_unshaded"] = cb->chi_unshaded;
      j["i_half"] = cb->boundary_intersections / 2;
      j["howie_invariant"] = howie_invariant(d, *cb);
    }
    if (!e.dealternator && e.pd) j["turaev_genus"] = turaev_genus(*e.pd);
    if (genus(d) == 1) {
      const auto rep = r_report(d);
      j["r"] = rep.r;
      if (rep.r >= 2) {
        j["annuli"] = region_census(d, rep.r).annuli;
      } else {
        int annuli = 0;
        for (const auto& reg : regions(d)) annuli += reg.kind == RegionKind::Annulus;
        j["annuli"] = annuli;
      }
      if (annular_core(d)) j["incident"] = meridian_bigon_check(d).incident;
    }
  });
}

Json parse_summary(const CorpusEntry& e) {
  return guarded(e, [&](Json& j) {
    const auto& d = e.input;
    j["format"] = e.format;
    j["crossings"] = d.ribbon.vertex_count();
    j["faces"] = d.ribbon.face_count();
    j["genus"] = genus(d);
    j["alternating"] = alternating(d);
    j["gauss"] = render_gauss(to_gauss(d.ribbon));
    j["pd"] = e.pd ? Json(render_pd(*e.pd)) : Json(nullptr);
  });
}

Json identity_summary(const CorpusEntry& e) {
  return guarded(e, [&](Json& j) {
    const auto d = target_diagram(e);
    j["ambient_chi"] = euler_characteristic(d);
    const auto cb = checkerboard_coloring(d);
    j["colorable"] = cb.has_value();
    j["howie_invariant"] = cb ? Json(howie_invariant(d, *cb)) : Json(nullptr);
    j["holds"] = true;
  });
}

Json turaev_summary(const CorpusEntry& e) {
  return guarded(e, [&](Json& j) {
    if (!e.pd) throw Error(ErrorKind::PreconditionViolated, "Turaev data needs a planar diagram");
    const auto t = turaev_data(*e.pd);
    j["c"] = t.crossings;
    j["sA"] = t.s_a;
    j["sB"] = t.s_b;
    j["genus"] = t.genus;
  });
}

Json r_summary(const CorpusEntry& e, const std::vector<CurveClass>& compressing) {
  return guarded(e, [&](Json& j) {
    const auto rep = r_report(target_diagram(e), compressing);
    j["r"] = rep.r;
    Json per = Json::array();
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
      per.push_back({{"class", to_json(rep.classes[i])}, {"min", rep.per_class[i]}});
    }
    j["per_class"] = per;
    j["witness"] = rep.witness ? to_json(*rep.witness) : Json(nullptr);
  });
}

Json convert_entry(const CorpusEntry& e, bool reverse) {
  return guarded(e, [&](Json& j) {
    if (reverse) {
      j["pd"] = render_pd(torus_to_almost_alternating(e.input));
      return;
    }
    if (!e.dealternator) {
      throw Error(ErrorKind::PreconditionViolated, "convert needs a dealternator");
    }
    const Json doc = to_json(target_diagram(e));
    for (const auto& [k, v] : doc.items()) {
      if (k != "schema") j[k] = v;
    }
  });
}

std::vector<CurveClass> parse_classes(const std::string& text) {
  std::vector<CurveClass> out;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto comma = item.find(',');
    const auto p = comma == std::string::npos ? std::nullopt : to_int(trim(item.substr(0, comma)));
    const auto q = comma == std::string::npos ? std::nullopt : to_int(trim(item.substr(comma + 1)));
    if (!p || !q || (*p == 0 && *q == 0)) {
      throw Error(ErrorKind::ParseError, "bad curve class '" + item + "'");
    }
    out.push_back({static_cast<int>(*p), static_cast<int>(*q), true});
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "no curve classes given");
  return out;
}

int thread_count() {
  if (const char* env = std::getenv("KNOTSURF_THREADS")) {
    if (const auto v = to_int(env); v && *v > 0) return static_cast<int>(*v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Json> map_entries(const std::vector<CorpusEntry>& entries,
                              const std::function<Json(const CorpusEntry&)>& f) {
  std::vector<Json> out(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < entries.size();) out[i] = f(entries[i]);
  };
  const int n = std::min<int>(thread_count(), static_cast<int>(entries.size()));
  std::vector<std::jthread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  return out;
}

bool has_violation(const Json& report) {
  return report.contains("violations") && !report["violations"].empty();
}

AnalyzeRun run_analyze(const std::vector<CorpusEntry>& entries) {
  AnalyzeRun run{map_entries(entries, analyze_entry), 0};
  for (const auto& r : run.reports)
    if (has_violation(r)) run.exit_status = 1;
  return run;
}

VerifyRun run_verify(const std::vector<CorpusEntry>& entries) {
  VerifyRun run;
  run.empty = entries.empty();
  const auto reports = map_entries(entries, analyze_entry);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const auto& rep = reports[i];
    if (has_violation(rep)) run.violations.push_back(e.name);
    bool bad = false;
    for (const auto& [key, want] : e.expected.items()) {
      ++run.checked;
      const Json got = rep.contains(key) ? rep[key] : Json(nullptr);
      if (got != Json(want)) {
        run.diffs.push_back({e.name, key, want.dump(), got.dump()});
        bad = true;
      }
    }
    if (bad) run.mismatched.push_back(e.name);
  }
  run.exit_status = run.mismatched.empty() && run.violations.empty() ? 0 : 1;
  return run;
}

std::string diff_table(const VerifyRun& run) {
  std::size_t w[3] = {5, 3, 8};
  for (const auto& d : run.diffs) {
    w[0] = std::max(w[0], d.entry.size());
    w[1] = std::max(w[1], d.key.size());
    w[2] = std::max(w[2], d.expected.size());
  }
  auto pad = [](const std::string& s, std::size_t n) { return s + std::string(n - s.size() + 2, ' '); };
  std::string out = pad("entry", w[0]) + pad("key", w[1]) + pad("expected", w[2]) + "actual\n";
  for (const auto& d : run.diffs) {
    out += pad(d.entry, w[0]) + pad(d.key, w[1]) + pad(d.expected, w[2]) + d.actual + "\n";
  }
  return out;
}

void write_reports(std::ostream& out, const std::vector<Json>& reports, bool pretty) {
  if (pretty) {
    out << Json(reports).dump(2) << "\n";
    return;
  }
  for (const auto& r : reports) out << r.dump() << "\n";
}

}  // namespace knotsurf
