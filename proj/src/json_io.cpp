#include "knotsurf/json_io.hpp"

#include <algorithm>
#include <map>

namespace knotsurf {

Json to_json(const CurveClass& c) { return Json::array({c.p, c.q}); }

Json to_json(const EmbeddedDiagram& d) {
  const auto& r = d.ribbon;
  Json j;
  j["schema"] = 1;
  j["ambient_genus"] = genus(d);
  Json sigma = Json::array(), alpha = Json::array(), over = Json::array();
  for (int v = 0; v < r.vertex_count(); ++v) {
    Json cycle = Json::array();
    int h = 4 * v;
    for (int k = 0; k < 4; ++k, h = r.sigma(h)) cycle.push_back(h);
    sigma.push_back(cycle);
    Json o = Json::array();
    for (int x = 4 * v; x < 4 * v + 4; ++x)
      if (r.is_over(x)) o.push_back(x);
    over.push_back(o);
  }
  for (int h = 0; h < r.half_edge_count(); ++h)
    if (h < r.alpha(h)) alpha.push_back({h, r.alpha(h)});
  j["sigma"] = sigma;
  j["alpha"] = alpha;
  j["over"] = over;
  Json decs = Json::array();
  for (const auto& dec : d.decorations) {
    Json x;
    if (dec.kind == Decoration::Kind::Handle) {
      x["kind"] = "handle";
      x["face"] = dec.face;
      x["genus"] = dec.genus;
    } else {
      x["kind"] = "tube";
      x["faces"] = {dec.face, dec.other_face};
      x["framing"] = dec.framing;
    }
    decs.push_back(x);
  }
  j["decorations"] = decs;
  Json comp = Json::array();
  for (const auto& c : d.compressing) comp.push_back(to_json(c));
  j["side_data"] = {{"compressing", comp}};
  return j;
}

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::ParseError, "surface diagram JSON: " + what);
}

}  // namespace

EmbeddedDiagram embedded_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) bad("expected an object");
    const auto& sig = j.at("sigma");
    const int n = static_cast<int>(sig.size());
    if (n == 0) bad("no crossings");
    std::map<int, int> id;
    for (int v = 0; v < n; ++v) {
      std::vector<int> hs = sig[v].get<std::vector<int>>();
      if (hs.size() != 4) bad("sigma cycle " + std::to_string(v) + " does not have 4 entries");
      std::sort(hs.begin(), hs.end());
      for (int k = 0; k < 4; ++k) {
        if (!id.emplace(hs[k], 4 * v + k).second) bad("half-edge repeated in sigma");
      }
    }
    auto map_id = [&](int h) {
      const auto it = id.find(h);
      if (it == id.end()) bad("unknown half-edge " + std::to_string(h));
      return it->second;
    };
    std::vector<int> sigma(4 * n), alpha(4 * n, -1);
    std::vector<bool> over(4 * n, false);
    for (int v = 0; v < n; ++v) {
      const auto hs = sig[v].get<std::vector<int>>();
      for (int k = 0; k < 4; ++k) sigma[map_id(hs[k])] = map_id(hs[(k + 1) % 4]);
    }
    for (const auto& pr : j.at("alpha")) {
      const auto ab = pr.get<std::vector<int>>();
      if (ab.size() != 2) bad("alpha entries must be pairs");
      const int a = map_id(ab[0]), b = map_id(ab[1]);
      if (alpha[a] >= 0 || alpha[b] >= 0) bad("half-edge paired twice");
      alpha[a] = b;
      alpha[b] = a;
    }
    if (std::count(alpha.begin(), alpha.end(), -1)) bad("unpaired half-edge");
    const auto& ov = j.at("over");
    if (static_cast<int>(ov.size()) != n) bad("over needs one entry per crossing");
    for (const auto& o : ov)
      for (int h : o.get<std::vector<int>>()) over[map_id(h)] = true;
    EmbeddedDiagram d{RibbonDiagram(std::move(sigma), std::move(alpha), std::move(over)), {}, {}};
    if (j.contains("decorations")) {
      for (const auto& x : j["decorations"]) {
        const auto kind = x.at("kind").get<std::string>();
        if (kind == "handle") {
          d.decorations.push_back(Decoration::handle(x.at("face"), x.value("genus", 1)));
        } else if (kind == "tube") {
          const auto f = x.at("faces").get<std::vector<int>>();
          if (f.size() != 2) bad("tube needs two faces");
          d.decorations.push_back(Decoration::tube(f[0], f[1], x.value("framing", 0)));
        } else {
          bad("unknown decoration kind " + kind);
        }
      }
    }
    if (j.contains("side_data") && j["side_data"].contains("compressing")) {
      for (const auto& c : j["side_data"]["compressing"]) {
        const auto pq = c.get<std::vector<int>>();
        if (pq.size() != 2) bad("classes are [p, q] pairs");
        d.compressing.push_back({pq[0], pq[1], true});
      }
    }
    validate(d);
    if (j.contains("ambient_genus") && j["ambient_genus"].get<int>() != genus(d)) {
      bad("ambient_genus does not match the decorated ribbon");
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

}  // namespace knotsurf
