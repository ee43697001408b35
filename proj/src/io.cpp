#include "rackrep/io.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace rackrep::io {

namespace {

void require_keys(const json &doc, const char *what, std::set<std::string> required,
                  const std::set<std::string> &optional) {
  if (!doc.is_object())
    throw InvalidInput(std::string(what) + " JSON must be an object");
  for (const auto &[key, _] : doc.items()) {
    if (required.erase(key) == 0 && !optional.contains(key))
      throw InvalidInput(std::string(what) + " JSON has unexpected key \"" + key + "\"");
  }
  if (!required.empty())
    throw InvalidInput(std::string(what) + " JSON is missing \"" + *required.begin() + "\"");
}

std::size_t positive_size(const json &v, const char *what) {
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw InvalidInput(std::string(what) + " must be a positive integer");
  return v.get<std::size_t>();
}

std::vector<std::vector<long long>> int_table(const json &v, std::size_t n, const char *what) {
  if (!v.is_array() || v.size() != n)
    throw InvalidInput(std::string(what) + " table must have " + std::to_string(n) + " rows");
  std::vector<std::vector<long long>> out;
  for (const auto &row : v) {
    if (!row.is_array() || row.size() != n)
      throw InvalidInput(std::string(what) + " table rows must have " + std::to_string(n) +
                         " entries");
    auto &r = out.emplace_back();
    for (const auto &e : row) {
      if (!e.is_number_integer())
        throw InvalidInput(std::string(what) + " table entries must be integers");
      r.push_back(e.get<long long>());
    }
  }
  return out;
}

// Rounds to 1e-12 so exact values print exactly; far inside every tolerance.
double tidy(double v) {
  const double r = std::round(v * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

Complex complex_from_json(const json &v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw InvalidInput("complex entries must be [re, im] pairs of numbers");
  const Complex z{v[0].get<double>(), v[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidInput("matrix entries must be finite");
  return z;
}

} // namespace

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_json_file(const std::string &path, const json &doc, bool pretty) {
  std::ofstream out(path);
  if (!out)
    throw InvalidInput("cannot write " + path);
  out << doc.dump(pretty ? 2 : -1) << '\n';
}

json rack_to_json(const Rack &rack) {
  json doc;
  if (!rack.name().empty())
    doc["name"] = rack.name();
  doc["size"] = rack.size();
  doc["table"] = rack.table();
  return doc;
}

Rack rack_from_json(const json &doc) {
  require_keys(doc, "rack", {"size", "table"}, {"name"});
  const std::size_t k = positive_size(doc["size"], "rack size");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw InvalidInput("rack name must be a string");
    name = doc["name"].get<std::string>();
  }
  return validate_rack(int_table(doc["table"], k, "rack"), std::move(name));
}

json group_to_json(const FiniteGroup &g) {
  json doc;
  doc["size"] = g.size();
  doc["table"] = g.table();
  if (!g.labels().empty())
    doc["labels"] = g.labels();
  doc["generators"] = std::vector<Index>(g.generators().begin(), g.generators().end());
  return doc;
}

FiniteGroup group_from_json(const json &doc) {
  require_keys(doc, "group", {"size", "table"}, {"labels", "generators"});
  const std::size_t m = positive_size(doc["size"], "group size");
  auto table = int_table(doc["table"], m, "group");
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto &l = doc["labels"];
    if (!l.is_array() || l.size() != m)
      throw InvalidInput("group labels must be an array with one string per element");
    for (const auto &s : l) {
      if (!s.is_string())
        throw InvalidInput("group labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  std::optional<std::vector<Index>> gens;
  if (doc.contains("generators")) {
    const auto &gv = doc["generators"];
    if (!gv.is_array())
      throw InvalidInput("group generators must be an array");
    gens.emplace();
    for (const auto &e : gv) {
      if (!e.is_number_integer() || e.get<long long>() < 0 ||
          e.get<unsigned long long>() >= m)
        throw InvalidInput("group generator out of range");
      gens->push_back(e.get<Index>());
    }
  }
  return FiniteGroup::from_table(table, std::move(labels), std::move(gens));
}

json complex_to_json(Complex z) { return json::array({tidy(z.real()), tidy(z.imag())}); }

json matrix_to_json(const CMatrix &m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json rep_to_json(RepKind kind, const std::vector<CMatrix> &matrices) {
  json doc;
  doc["kind"] = kind == RepKind::rack ? "rack" : "group";
  doc["dimension"] = matrices.empty() ? 0 : matrices.front().rows();
  doc["matrices"] = json::array();
  for (const auto &m : matrices)
    doc["matrices"].push_back(matrix_to_json(m));
  return doc;
}

RepFile rep_from_json(const json &doc) {
  require_keys(doc, "representation", {"kind", "dimension", "matrices"}, {});
  RepFile out;
  const auto &kind = doc["kind"];
  if (kind == "rack")
    out.kind = RepKind::rack;
  else if (kind == "group")
    out.kind = RepKind::group;
  else
    throw InvalidInput("representation kind must be \"rack\" or \"group\"");
  const std::size_t d = positive_size(doc["dimension"], "representation dimension");
  const auto &mats = doc["matrices"];
  if (!mats.is_array() || mats.empty())
    throw InvalidInput("representation needs a non-empty matrix list");
  for (const auto &m : mats) {
    if (!m.is_array() || m.size() != d)
      throw DimensionMismatch("every matrix must have " + std::to_string(d) + " rows");
    CMatrix cm(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) {
      if (!m[i].is_array() || m[i].size() != d)
        throw DimensionMismatch("every matrix row must have " + std::to_string(d) + " entries");
      for (std::size_t j = 0; j < d; ++j)
        cm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            complex_from_json(m[i][j]);
    }
    out.matrices.push_back(std::move(cm));
  }
  return out;
}

json envelope_sidecar(const EnvelopingGroup &env) {
  json doc;
  doc["order"] = env.group->size();
  doc["eta"] = env.eta;
  doc["common_order"] = env.common_order;
  doc["kernel_size"] = env.kernel.size();
  doc["center_size"] = env.center.size();
  doc["inn_order"] = env.inn.perm.group.size();
  doc["conjugacy_classes"] = conjugacy_classes(*env.group).size();
  return doc;
}

} // namespace rackrep::io
