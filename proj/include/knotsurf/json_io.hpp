#pragma once

#include <json.hpp>

#include "knotsurf/embedded.hpp"

namespace knotsurf {

using Json = nlohmann::ordered_json;

/// Surface-diagram document: sigma as 4-cycles (one per crossing), alpha as
/// pairs, the over half-edges of each crossing, decorations and the declared
/// compressing classes.
Json to_json(const EmbeddedDiagram& d);

/// Inverse of to_json. Half-edge ids may be arbitrary integers: crossing i
/// is the i-th cycle and its ids, in increasing order, become 4i..4i+3.
/// side_data classes are read in the homology basis of that numbering, so
/// a renaming that reorders ids within a crossing changes their meaning.
/// Throws ParseError on malformed documents.
EmbeddedDiagram embedded_from_json(const nlohmann::json& j);

Json to_json(const CurveClass& c);

}  // namespace knotsurf
