#include "knotsurf/codes.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "knotsurf/ribbon.hpp"

namespace knotsurf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::LabelCountMismatch: return "LabelCountMismatch";
    case ErrorKind::PassageMismatch: return "PassageMismatch";
    case ErrorKind::MalformedTuple: return "MalformedTuple";
    case ErrorKind::ArcCountMismatch: return "ArcCountMismatch";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::MultipleComponents: return "MultipleComponents";
    case ErrorKind::OddLength: return "OddLength";
    case ErrorKind::NonRealizable: return "NonRealizable";
    case ErrorKind::NonRealizableRotation: return "NonRealizableRotation";
    case ErrorKind::OddEuler: return "OddEuler";
    case ErrorKind::BadDecoration: return "BadDecoration";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotGenusOne: return "NotGenusOne";
    case ErrorKind::NotCellular: return "NotCellular";
    case ErrorKind::ClassUnreachable: return "ClassUnreachable";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::NotAlmostAlternating: return "NotAlmostAlternating";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::GoldenMismatch: return "GoldenMismatch";
  }
  return "Unknown";
}

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// Accepts the unicode minus sign that shows up in copied tables.
std::string normalise_minus(std::string_view text) {
  std::string s(text);
  const std::string uminus = "\xE2\x88\x92";
  for (auto pos = s.find(uminus); pos != std::string::npos;
       pos = s.find(uminus, pos)) {
    s.replace(pos, uminus.size(), "-");
  }
  return s;
}

}  // namespace

void validate(const SignedGaussCode& code) {
  if (code.entries.empty() || code.entries.size() % 2 != 0) {
    throw Error(ErrorKind::LabelCountMismatch,
                "a knot code needs an even, non-zero number of passages");
  }
  std::map<int, std::vector<const GaussEntry*>> seen;
  for (const auto& e : code.entries) {
    if (e.label <= 0) {
      throw Error(ErrorKind::MalformedToken, "labels must be positive");
    }
    if (e.sign != 1 && e.sign != -1) {
      throw Error(ErrorKind::MalformedToken, "sign must be +1 or -1");
    }
    seen[e.label].push_back(&e);
  }
  for (const auto& [label, uses] : seen) {
    if (uses.size() != 2) {
      throw Error(ErrorKind::LabelCountMismatch,
                  "crossing " + std::to_string(label) + " occurs " +
                      std::to_string(uses.size()) + " times");
    }
    if (uses[0]->passage == uses[1]->passage || uses[0]->sign != uses[1]->sign) {
      throw Error(ErrorKind::PassageMismatch,
                  "crossing " + std::to_string(label) +
                      " needs one Over and one Under with equal signs");
    }
  }
}

SignedGaussCode parse_gauss(std::string_view text) {
  static const std::regex token_re(R"(^([OoUu])([+-]?)(\d+)([+-]?)$)");
  SignedGaussCode code;
  for (const auto& tok : split_tokens(normalise_minus(text))) {
    std::smatch m;
    if (!std::regex_match(tok, m, token_re) || (m[2].length() > 0) == (m[4].length() > 0)) {
      throw Error(ErrorKind::MalformedToken, "bad Gauss token '" + tok + "'");
    }
    GaussEntry e;
    e.passage = (m[1] == "O" || m[1] == "o") ? Passage::Over : Passage::Under;
    e.label = std::stoi(m[3]);
    const std::string s = m[2].length() > 0 ? m[2].str() : m[4].str();
    e.sign = s == "-" ? -1 : 1;
    code.entries.push_back(e);
  }
  validate(code);
  return code;
}

void validate(const PlanarDiagramCode& code) {
  if (code.crossings.empty()) {
    throw Error(ErrorKind::ArcCountMismatch, "empty PD code");
  }
  std::map<int, int> count;
  for (const auto& x : code.crossings) {
    for (int a : x) ++count[a];
  }
  for (const auto& [arc, n] : count) {
    if (n != 2) {
      throw Error(ErrorKind::ArcCountMismatch,
                  "arc " + std::to_string(arc) + " occurs " +
                      std::to_string(n) + " times");
    }
  }
  if (count.size() != 2 * code.crossings.size()) {
    throw Error(ErrorKind::ArcCountMismatch, "expected 2n distinct arcs");
  }
  // Connectivity of the crossing graph.
  const int n = code.crossing_count();
  std::map<int, std::vector<int>> where;
  for (int i = 0; i < n; ++i) {
    for (int a : code.crossings[i]) where[a].push_back(i);
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [arc, xs] : where) parent[find(xs[0])] = find(xs[1]);
  for (int i = 1; i < n; ++i) {
    if (find(i) != find(0)) {
      throw Error(ErrorKind::Disconnected, "PD code has several pieces");
    }
  }
}

PlanarDiagramCode parse_pd(std::string_view text) {
  static const std::regex tuple_re(
      R"(X\s*[\[\(]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\]\)])");
  std::string s(text);
  // Strip an optional PD[...] wrapper.
  static const std::regex wrapper_re(R"(^\s*PD\s*[\[\(](.*)[\]\)]\s*$)");
  std::smatch wm;
  if (std::regex_match(s, wm, wrapper_re)) s = wm[1].str();

  PlanarDiagramCode code;
  std::string rest;
  auto begin = std::sregex_iterator(s.begin(), s.end(), tuple_re);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    rest += s.substr(last, it->position() - last);
    last = it->position() + it->length();
    const auto& m = *it;
    code.crossings.push_back({std::stoi(m[1]), std::stoi(m[2]),
                              std::stoi(m[3]), std::stoi(m[4])});
  }
  rest += s.substr(last);
  for (char ch : rest) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',') {
      throw Error(ErrorKind::MalformedTuple,
                  "unexpected text outside X(...) tuples: '" + rest + "'");
    }
  }
  if (code.crossings.empty()) {
    throw Error(ErrorKind::MalformedTuple, "no X(...) tuples found");
  }
  validate(code);
  return code;
}

namespace {

SignedGaussCode dt_with_signs(const std::vector<int>& partner,
                              const std::vector<bool>& odd_over,
                              const std::vector<int>& signs) {
  // partner is 1-based over 2n passages; crossing k owns passages 2k-1 and
  // partner[2k-1].
  const int n = static_cast<int>(signs.size());
  SignedGaussCode code;
  code.entries.resize(2 * n);
  for (int k = 0; k < n; ++k) {
    const int odd = 2 * k + 1;
    const int even = partner[odd];
    code.entries[odd - 1] = {k + 1, odd_over[k] ? Passage::Over : Passage::Under,
                             signs[k]};
    code.entries[even - 1] = {k + 1, odd_over[k] ? Passage::Under : Passage::Over,
                              signs[k]};
  }
  return code;
}

}  // namespace

SignedGaussCode parse_dt(std::string_view text) {
  std::vector<int> values;
  for (const auto& tok : split_tokens(normalise_minus(text))) {
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0') {
      throw Error(ErrorKind::MalformedToken, "bad DT entry '" + tok + "'");
    }
    values.push_back(static_cast<int>(v));
  }
  const int n = static_cast<int>(values.size());
  if (n < 2) {
    throw Error(ErrorKind::OddLength,
                "a DT sequence needs at least two entries");
  }
  std::vector<int> partner(2 * n + 1, 0);
  std::vector<bool> odd_over(n);
  for (int k = 0; k < n; ++k) {
    const int a = std::abs(values[k]);
    if (a % 2 != 0 || a < 2 || a > 2 * n || partner[a] != 0) {
      throw Error(ErrorKind::NonRealizable,
                  "DT entries must be distinct even numbers in 2.." +
                      std::to_string(2 * n));
    }
    partner[2 * k + 1] = a;
    partner[a] = 2 * k + 1;
    odd_over[k] = values[k] > 0;
  }
  // A Gauss word determines the planar embedding up to the choice of crossing
  // handedness; search for an assignment that closes up on the sphere.
  constexpr int kMaxSearch = 22;
  if (n > kMaxSearch) {
    throw Error(ErrorKind::NonRealizable, "DT code too large to realise");
  }
  std::vector<int> signs(n, 1);
  const unsigned long long total = 1ULL << (n - 1);
  for (unsigned long long mask = 0; mask < total; ++mask) {
    for (int k = 1; k < n; ++k) signs[k] = (mask >> (k - 1)) & 1 ? -1 : 1;
    const auto code = dt_with_signs(partner, odd_over, signs);
    try {
      if (to_ribbon(code).euler_characteristic() == 2) return code;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::NonRealizable, "DT code has no planar realisation");
}

SignedGaussCode canonical(const SignedGaussCode& code) {
  std::map<int, int> relabel;
  SignedGaussCode out = code;
  for (auto& e : out.entries) {
    auto [it, inserted] =
        relabel.emplace(e.label, static_cast<int>(relabel.size()) + 1);
    e.label = it->second;
  }
  return out;
}

std::string render_gauss(const SignedGaussCode& code) {
  std::ostringstream os;
  const auto c = canonical(code);
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& e = c.entries[i];
    if (i) os << ' ';
    os << (e.passage == Passage::Over ? 'O' : 'U') << e.label
       << (e.sign > 0 ? '+' : '-');
  }
  return os.str();
}

std::string render_pd(const PlanarDiagramCode& code) {
  std::ostringstream os;
  for (std::size_t i = 0; i < code.crossings.size(); ++i) {
    const auto& x = code.crossings[i];
    if (i) os << ' ';
    os << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  return os.str();
}

bool is_alternating(const SignedGaussCode& code) {
  const auto& e = code.entries;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].passage == e[(i + 1) % e.size()].passage) return false;
  }
  return true;
}

SignedGaussCode switch_crossing(const SignedGaussCode& code, int label) {
  SignedGaussCode out = code;
  bool found = false;
  for (auto& e : out.entries) {
    if (e.label != label) continue;
    found = true;
    e.passage = e.passage == Passage::Over ? Passage::Under : Passage::Over;
    e.sign = -e.sign;
  }
  if (!found) {
    throw Error(ErrorKind::PreconditionViolated,
                "no crossing labelled " + std::to_string(label));
  }
  return out;
}

}  // namespace knotsurf
