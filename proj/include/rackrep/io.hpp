#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rackrep/enveloping.hpp"
#include "rackrep/reps.hpp"

namespace rackrep::io {

using nlohmann::json;

/// Parses a file as JSON. Throws InvalidInput on unreadable or malformed files.
json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const json &doc, bool pretty);

/// {"name"?: string, "size": k, "table": [[int; k]; k]}. Unknown keys and
/// wrong shapes are rejected with InvalidInput.
json rack_to_json(const Rack &rack);
Rack rack_from_json(const json &doc);

/// {"size": m, "table": [[int]], "labels"?: [string], "generators"?: [int]}
json group_to_json(const FiniteGroup &g);
FiniteGroup group_from_json(const json &doc);

enum class RepKind { rack, group };

struct RepFile {
  RepKind kind = RepKind::rack;
  std::vector<CMatrix> matrices;
};

/// {"kind": "rack"|"group", "dimension": d, "matrices": [[[[re, im]]]]}
json rep_to_json(RepKind kind, const std::vector<CMatrix> &matrices);
RepFile rep_from_json(const json &doc);

json matrix_to_json(const CMatrix &m);
json complex_to_json(Complex z);

/// Summary of an enveloping group: order, eta, common order, kernel, center
/// and inner automorphism group sizes.
json envelope_sidecar(const EnvelopingGroup &env);

} // namespace rackrep::io
