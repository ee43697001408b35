#include "rackrep/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "rackrep/decompose.hpp"
#include "rackrep/io.hpp"

namespace rackrep::cli {

namespace {

using io::json;

struct Options {
  std::string output;
  std::size_t max_cosets = 1'000'000;
  std::size_t max_len = 6;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  bool pretty = false;

  Config config() const {
    Config c;
    c.max_cosets = max_cosets;
    c.seed = seed;
    c.tol.eps = tolerance;
    return c;
  }
};

std::vector<std::string> split_on(const std::string &s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    parts.push_back(item);
  if (!s.empty() && s.back() == sep)
    parts.emplace_back();
  return parts;
}

std::size_t parse_count(const std::string &s, const char *what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidInput(std::string("bad ") + what + " \"" + s + "\"");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range &) {
    throw InvalidInput(std::string(what) + " \"" + s + "\" is too large");
  }
}

std::vector<Index> parse_index_list(const std::string &s, const char *what) {
  std::vector<Index> out;
  for (const auto &p : split_on(s, ','))
    out.push_back(parse_count(p, what));
  return out;
}

// S3, Z5, D4 (case-insensitive) or a path to a group JSON file.
FiniteGroup resolve_group(const std::string &spec) {
  if (spec.size() >= 2 && std::isalpha(static_cast<unsigned char>(spec[0])) &&
      std::all_of(spec.begin() + 1, spec.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const std::size_t n = parse_count(spec.substr(1), "group parameter");
    switch (std::toupper(static_cast<unsigned char>(spec[0]))) {
    case 'S':
      if (n < 1 || n > 6)
        throw InvalidInput("symmetric group degree must be in [1,6]");
      return groups::symmetric(n);
    case 'Z':
      if (n < 1)
        throw InvalidInput("cyclic group order must be positive");
      return groups::cyclic(n);
    case 'D':
      if (n < 1)
        throw InvalidInput("dihedral group parameter must be positive");
      return groups::dihedral(n);
    default:
      break;
    }
  }
  if (!std::filesystem::exists(spec))
    throw InvalidInput("unknown group \"" + spec + "\" (expected S<n>, Z<n>, D<n> or a file)");
  return io::group_from_json(io::read_json_file(spec));
}

Rack make_rack(const std::string &spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "trivial") {
    const std::size_t k = parse_count(rest, "size");
    if (k == 0)
      throw InvalidInput("trivial rack needs a positive size");
    return builtin::trivial(k);
  }
  if (kind == "takasaki") {
    const std::size_t m = parse_count(rest, "modulus");
    if (m == 0)
      throw InvalidInput("takasaki modulus must be positive");
    return builtin::takasaki(m);
  }
  if (kind == "permutation") {
    const std::size_t n = parse_count(rest, "degree");
    if (n < 3)
      throw InvalidInput("permutation quandle needs n >= 3");
    return builtin::permutation_quandle(n);
  }
  if (kind == "cyclic") {
    const auto c2 = rest.find(':');
    if (c2 == std::string::npos)
      throw InvalidInput("cyclic spec is cyclic:k:i0,i1,...");
    const std::size_t k = parse_count(rest.substr(0, c2), "size");
    const auto images = parse_index_list(rest.substr(c2 + 1), "image");
    if (images.size() != k)
      throw InvalidInput("cyclic rack needs exactly k images");
    return builtin::cyclic(Permutation(images));
  }
  if (kind == "conj")
    return builtin::conj(resolve_group(rest));
  if (kind == "core")
    return builtin::core(resolve_group(rest));
  if (kind == "conjclass") {
    const auto c2 = rest.rfind(':');
    if (c2 == std::string::npos)
      throw InvalidInput("conjclass spec is conjclass:G:element");
    const auto g = resolve_group(rest.substr(0, c2));
    const std::size_t e = parse_count(rest.substr(c2 + 1), "element");
    if (e >= g.size())
      throw InvalidInput("element index out of range");
    return builtin::conj_class(g, e);
  }
  throw InvalidInput("unknown rack spec \"" + spec + "\"");
}

std::shared_ptr<const Rack> load_rack(const std::string &path) {
  return std::make_shared<const Rack>(io::rack_from_json(io::read_json_file(path)));
}

io::RepFile load_rep(const std::string &path) { return io::rep_from_json(io::read_json_file(path)); }

json complex_list(const ClassFunction &chi) {
  json out = json::array();
  for (auto z : chi)
    out.push_back(io::complex_to_json(z));
  return out;
}

json matrices_json(const std::vector<CMatrix> &mats) {
  json out = json::array();
  for (const auto &m : mats)
    out.push_back(io::matrix_to_json(m));
  return out;
}

class Runner {
public:
  Runner(std::ostream &out, std::ostream &err) : out_(out), err_(err) {}

  int run(const std::vector<std::string> &args);

private:
  void emit(const json &doc) { out_ << doc.dump(opt_.pretty ? 2 : -1) << '\n'; }

  // Writes to -o when given, otherwise to stdout.
  void emit_or_write(const json &doc) {
    if (opt_.output.empty())
      emit(doc);
    else
      io::write_json_file(opt_.output, doc, opt_.pretty);
  }

  const EnvelopingGroup &envelope(const std::shared_ptr<const Rack> &rack) {
    if (!env_ || env_->rack != rack)
      env_ = enveloping_group(rack, opt_.config());
    return *env_;
  }

  RackRep rack_rep(const std::shared_ptr<const Rack> &rack, const io::RepFile &f) {
    if (f.kind != io::RepKind::rack)
      throw InvalidInput("expected a rack representation");
    return validate_rack_rep(rack, f.matrices, opt_.config().tol);
  }

  GroupRep group_rep(const std::shared_ptr<const Rack> &rack, const io::RepFile &f) {
    if (f.kind != io::RepKind::group)
      throw InvalidInput("expected a group representation");
    return validate_group_rep(envelope(rack).group, f.matrices, opt_.config().tol);
  }

  int rack_check();
  int rack_inn();
  int rack_envelope();
  int rack_stab();
  int rack_hom();
  int rep_check();
  int rep_strong();
  int rep_irreducible();
  int rep_equiv();
  int rep_decompose();
  int rep_inventory();
  int counterexample();

  std::ostream &out_;
  std::ostream &err_;
  Options opt_;
  std::string spec_, rack_path_, rep_path_, rep_b_path_, map_, target_, scalar_;
  std::string sidecar_;
  bool bruteforce_ = false;
  std::optional<EnvelopingGroup> env_;
};

int Runner::rack_check() {
  const auto rack = load_rack(rack_path_);
  const auto cls = classify(*rack);
  json doc;
  doc["size"] = rack->size();
  doc["is_quandle"] = cls.is_quandle;
  doc["is_involutive"] = cls.is_involutive;
  doc["is_connected"] = cls.is_connected;
  doc["left_orders"] = cls.left_orders;
  doc["common_order"] = cls.common_order ? json(*cls.common_order) : json(nullptr);
  doc["orbits"] = orbits(*rack);
  emit(doc);
  return 0;
}

int Runner::rack_inn() {
  const auto rack = load_rack(rack_path_);
  const auto inn = inn_group(*rack);
  json doc;
  doc["order"] = inn.perm.group.size();
  doc["left_index"] = inn.left_index;
  json perms = json::array();
  for (Index x = 0; x < rack->size(); ++x)
    perms.push_back(left_mult(*rack, x).images());
  doc["left_multiplications"] = perms;
  emit(doc);
  if (!opt_.output.empty())
    io::write_json_file(opt_.output, io::group_to_json(inn.perm.group), opt_.pretty);
  return 0;
}

int Runner::rack_envelope() {
  const auto rack = load_rack(rack_path_);
  const auto &env = envelope(rack);
  const json side = io::envelope_sidecar(env);
  emit(side);
  if (!opt_.output.empty())
    io::write_json_file(opt_.output, io::group_to_json(*env.group), opt_.pretty);
  if (!sidecar_.empty())
    io::write_json_file(sidecar_, side, opt_.pretty);
  return 0;
}

int Runner::rack_stab() {
  const auto rack = load_rack(rack_path_);
  const auto fams = enumerate_stabilizing_families(*rack, opt_.max_len);
  json list = json::array();
  for (const auto &f : fams)
    list.push_back(f.word);
  emit({{"max_len", opt_.max_len}, {"count", fams.size()}, {"families", list}});
  return 0;
}

int Runner::rack_hom() {
  const auto source = load_rack(rack_path_);
  const auto target = load_rack(rep_path_);
  const auto map = parse_index_list(map_, "map entry");
  if (map.size() != source->size())
    throw InvalidInput("map needs one image per source element");
  for (Index v : map)
    if (v >= target->size())
      throw InvalidInput("map image out of range");
  const auto h = check_hom(*source, *target, map);
  emit({{"is_hom", h.is_hom}, {"is_iso", h.is_iso}});
  return h.is_hom ? 0 : 1;
}

int Runner::rep_check() {
  const auto rack = load_rack(rack_path_);
  const auto f = load_rep(rep_path_);
  try {
    if (f.kind == io::RepKind::rack)
      rack_rep(rack, f);
    else
      group_rep(rack, f);
  } catch (const NotInvertible &e) {
    emit({{"valid", false}, {"reason", e.what()}});
    return 1;
  } catch (const AxiomViolation &e) {
    emit({{"valid", false}, {"reason", e.what()}, {"residual", e.residual}});
    return 1;
  } catch (const NotAHomomorphism &e) {
    emit({{"valid", false}, {"reason", e.what()}});
    return 1;
  }
  emit({{"valid", true}, {"kind", f.kind == io::RepKind::rack ? "rack" : "group"},
        {"dimension", f.matrices.front().rows()}});
  return 0;
}

int Runner::rep_strong() {
  const auto rack = load_rack(rack_path_);
  const auto rep = rack_rep(rack, load_rep(rep_path_));
  const bool connected = classify(*rack).is_connected;
  json doc;
  bool strong = false;
  if (bruteforce_ || !connected) {
    Config c = opt_.config();
    strong = is_strong_bruteforce(rep, opt_.max_len, c);
    doc["method"] = "bruteforce";
    doc["max_len"] = opt_.max_len;
  } else {
    strong = is_strong(envelope(rack), rep, opt_.config().tol);
    doc["method"] = "kernel";
  }
  doc["strong"] = strong;
  emit(doc);
  return strong ? 0 : 1;
}

int Runner::rep_irreducible() {
  const auto rack = load_rack(rack_path_);
  const auto f = load_rep(rep_path_);
  const auto mats = f.kind == io::RepKind::rack ? rack_rep(rack, f).matrices
                                                : group_rep(rack, f).matrices;
  const std::size_t d = static_cast<std::size_t>(mats.front().rows());
  const std::size_t span = algebra_span_dimension(mats, d);
  const bool irr = span == d * d;
  emit({{"irreducible", irr}, {"dimension", d}, {"algebra_span_dimension", span}});
  return irr ? 0 : 1;
}

int Runner::rep_equiv() {
  const auto rack = load_rack(rack_path_);
  const auto fa = load_rep(rep_path_);
  const auto fb = load_rep(rep_b_path_);
  if (fa.kind != fb.kind)
    throw InvalidInput("both representations must have the same kind");
  std::optional<CMatrix> t;
  if (fa.kind == io::RepKind::rack)
    t = are_equivalent(rack_rep(rack, fa), rack_rep(rack, fb), opt_.config());
  else
    t = are_equivalent(group_rep(rack, fa), group_rep(rack, fb), opt_.config());
  json doc{{"equivalent", t.has_value()}};
  if (t)
    doc["intertwiner"] = io::matrix_to_json(*t);
  emit(doc);
  return t ? 0 : 1;
}

int Runner::rep_decompose() {
  const auto rack = load_rack(rack_path_);
  const auto f = load_rep(rep_path_);
  const auto &env = envelope(rack);
  const auto tol = opt_.config().tol;
  const GroupRep grep =
      f.kind == io::RepKind::rack ? lift(env, rack_rep(rack, f), tol) : group_rep(rack, f);
  const auto report = decompose(grep, opt_.config());
  json blocks = json::array();
  for (const auto &b : report.blocks) {
    blocks.push_back({{"dimension", b.irrep.dimension()},
                      {"multiplicity", b.multiplicity},
                      {"character", complex_list(b.character)},
                      {"rack_matrices", matrices_json(project(env, b.irrep, tol).matrices)}});
  }
  emit({{"blocks", blocks},
        {"residual", report.residual},
        {"basis_change", io::matrix_to_json(report.basis_change)}});
  return 0;
}

int Runner::rep_inventory() {
  const auto rack = load_rack(rack_path_);
  const auto inv = enumerate_strong_irreps(envelope(rack), opt_.config());
  json doc;
  doc["count"] = inv.reps.size();
  json dims = json::array(), chars = json::array(), files = json::array();
  for (std::size_t i = 0; i < inv.reps.size(); ++i) {
    dims.push_back(inv.reps[i].dimension());
    chars.push_back(complex_list(inv.characters[i]));
    const json rep = io::rep_to_json(io::RepKind::rack, inv.reps[i].matrices);
    if (!opt_.output.empty()) {
      std::filesystem::create_directories(opt_.output);
      const auto path =
          (std::filesystem::path(opt_.output) / ("irrep_" + std::to_string(i) + ".json")).string();
      io::write_json_file(path, rep, opt_.pretty);
      files.push_back(path);
    } else {
      files.push_back(rep);
    }
  }
  doc["dimensions"] = dims;
  doc["characters"] = chars;
  doc["exact"] = inv.exact;
  doc["bound"] = inv.bound;
  doc[opt_.output.empty() ? "reps" : "files"] = files;
  emit(doc);
  return 0;
}

int Runner::counterexample() {
  std::size_t n = 0;
  if (target_ == "p3")
    n = 3;
  else if (target_.starts_with("pn:"))
    n = parse_count(target_.substr(3), "degree");
  else
    throw InvalidInput("counterexample target is p3 or pn:<n>");
  if (n < 3 || n > 5)
    throw InvalidInput("pn:n needs 3 <= n <= 5");

  const auto rack = std::make_shared<const Rack>(builtin::permutation_quandle(n));
  const auto cls = classify(*rack);
  const auto &env = envelope(rack);
  const Config config = opt_.config();
  const auto inv = enumerate_strong_irreps(env, config);

  json doc;
  doc["target"] = target_;
  doc["rack"] = {{"name", rack->name()}, {"size", rack->size()}};
  doc["finite"] = true;
  doc["connected"] = cls.is_connected;
  doc["involutive"] = cls.is_involutive;
  doc["quandle"] = cls.is_quandle;
  doc["enveloping_order"] = env.group->size();
  doc["center_size"] = env.center.size();
  doc["claim"] = "strong irreducible representations of finite connected involutive racks "
                 "are one-dimensional";

  const RackRep *witness = nullptr;
  for (const auto &r : inv.reps)
    if (r.dimension() >= 2 && (!witness || r.dimension() < witness->dimension()))
      witness = &r;
  if (!witness || !cls.is_connected || !cls.is_involutive) {
    doc["refuted"] = false;
    emit(doc);
    return 1;
  }
  const std::size_t d = witness->dimension();
  const bool kernel = is_strong(env, *witness, config.tol);
  const bool brute = is_strong_bruteforce(*witness, opt_.max_len, config);
  const std::size_t span = algebra_span_dimension(witness->matrices, d);
  const bool irreducible = span == d * d;
  const bool refuted = kernel && brute && irreducible;
  doc["refuted"] = refuted;
  doc["witness"] = {{"dimension", d},
                    {"matrices", matrices_json(witness->matrices)},
                    {"strong_kernel_criterion", kernel},
                    {"strong_bruteforce", brute},
                    {"bruteforce_max_len", opt_.max_len},
                    {"algebra_span_dimension", span},
                    {"irreducible", irreducible}};
  emit(doc);
  return refuted ? 0 : 1;
}

int Runner::run(const std::vector<std::string> &args) {
  CLI::App app{"Finite racks, their enveloping groups and representations", "rackrep"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-o,--output", opt_.output, "Output file (directory for rep inventory)");
  app.add_option("--max-cosets", opt_.max_cosets, "Coset enumeration limit")->capture_default_str();
  app.add_option("--max-len", opt_.max_len, "Longest word for exhaustive scans")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt_.seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--tolerance", opt_.tolerance, "Entrywise residual tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_flag("--pretty", opt_.pretty, "Indent JSON output");

  std::function<int()> action;
  auto bind = [&](CLI::App *cmd, int (Runner::*fn)()) {
    cmd->callback([&action, this, fn] { action = [this, fn] { return (this->*fn)(); }; });
  };

  auto *rack = app.add_subcommand("rack", "Rack construction and structure");
  rack->require_subcommand(1);
  auto *make = rack->add_subcommand("make", "Build a builtin rack");
  make->add_option("spec", spec_,
                   "trivial:k | cyclic:k:i0,i1,.. | takasaki:m | permutation:n | conj:G | "
                   "core:G | conjclass:G:element  (G = S<n>, Z<n>, D<n> or a group file)")
      ->required();
  make->callback([&] {
    action = [this] {
      emit_or_write(io::rack_to_json(make_rack(spec_)));
      return 0;
    };
  });
  auto *check = rack->add_subcommand("check", "Classify a rack");
  check->add_option("rack", rack_path_)->required();
  bind(check, &Runner::rack_check);
  auto *inn = rack->add_subcommand("inn", "Inner automorphism group");
  inn->add_option("rack", rack_path_)->required();
  bind(inn, &Runner::rack_inn);
  auto *env = rack->add_subcommand("envelope", "Finite enveloping group");
  env->add_option("rack", rack_path_)->required();
  env->add_option("--sidecar", sidecar_, "Also write the summary to this file");
  bind(env, &Runner::rack_envelope);
  auto *stab = rack->add_subcommand("stab", "Stabilizing families up to --max-len");
  stab->add_option("rack", rack_path_)->required();
  bind(stab, &Runner::rack_stab);
  auto *hom = rack->add_subcommand("hom", "Check a map between racks");
  hom->add_option("source", rack_path_)->required();
  hom->add_option("target", rep_path_)->required();
  hom->add_option("map", map_, "Comma-separated images, e.g. 2,1,0")->required();
  bind(hom, &Runner::rack_hom);

  auto *rep = app.add_subcommand("rep", "Representations");
  rep->require_subcommand(1);
  auto *regular = rep->add_subcommand("regular", "Regular representation");
  regular->add_option("rack", rack_path_)->required();
  regular->callback([&] {
    action = [this] {
      const auto r = regular_rep(load_rack(rack_path_));
      emit_or_write(io::rep_to_json(io::RepKind::rack, r.matrices));
      return 0;
    };
  });
  auto *scalar = rep->add_subcommand("scalar", "One-dimensional representation x -> c");
  scalar->add_option("rack", rack_path_)->required();
  scalar->add_option("value", scalar_, "c as re or re,im")->required();
  scalar->callback([&] {
    action = [this] {
      const auto parts = split_on(scalar_, ',');
      Complex c;
      try {
        if (parts.size() == 1)
          c = std::stod(parts[0]);
        else if (parts.size() == 2)
          c = {std::stod(parts[0]), std::stod(parts[1])};
        else
          throw InvalidInput("scalar is re or re,im");
      } catch (const std::logic_error &) {
        throw InvalidInput("bad scalar \"" + scalar_ + "\"");
      }
      const auto r = scalar_rep(load_rack(rack_path_), c);
      emit_or_write(io::rep_to_json(io::RepKind::rack, r.matrices));
      return 0;
    };
  });
  auto *rcheck = rep->add_subcommand("check", "Validate a representation");
  rcheck->add_option("rack", rack_path_)->required();
  rcheck->add_option("rep", rep_path_)->required();
  bind(rcheck, &Runner::rep_check);
  auto *strong = rep->add_subcommand("strong", "Strongness of a rack representation");
  strong->add_option("rack", rack_path_)->required();
  strong->add_option("rep", rep_path_)->required();
  strong->add_flag("--bruteforce", bruteforce_, "Scan words up to --max-len instead");
  bind(strong, &Runner::rep_strong);
  auto *irr = rep->add_subcommand("irreducible", "Irreducibility test");
  irr->add_option("rack", rack_path_)->required();
  irr->add_option("rep", rep_path_)->required();
  bind(irr, &Runner::rep_irreducible);
  auto *equiv = rep->add_subcommand("equiv", "Search for an invertible intertwiner");
  equiv->add_option("rack", rack_path_)->required();
  equiv->add_option("a", rep_path_)->required();
  equiv->add_option("b", rep_b_path_)->required();
  bind(equiv, &Runner::rep_equiv);
  auto *lift_cmd = rep->add_subcommand("lift", "Rack representation to enveloping group");
  lift_cmd->add_option("rack", rack_path_)->required();
  lift_cmd->add_option("rep", rep_path_)->required();
  lift_cmd->callback([&] {
    action = [this] {
      const auto rk = load_rack(rack_path_);
      const auto g = lift(envelope(rk), rack_rep(rk, load_rep(rep_path_)), opt_.config().tol);
      emit_or_write(io::rep_to_json(io::RepKind::group, g.matrices));
      return 0;
    };
  });
  auto *project_cmd = rep->add_subcommand("project", "Enveloping group representation to rack");
  project_cmd->add_option("rack", rack_path_)->required();
  project_cmd->add_option("rep", rep_path_)->required();
  project_cmd->callback([&] {
    action = [this] {
      const auto rk = load_rack(rack_path_);
      const auto r = project(envelope(rk), group_rep(rk, load_rep(rep_path_)), opt_.config().tol);
      emit_or_write(io::rep_to_json(io::RepKind::rack, r.matrices));
      return 0;
    };
  });
  auto *dec = rep->add_subcommand("decompose", "Decompose into irreducibles");
  dec->add_option("rack", rack_path_)->required();
  dec->add_option("rep", rep_path_)->required();
  bind(dec, &Runner::rep_decompose);
  auto *inventory = rep->add_subcommand("inventory", "All strong irreducible representations");
  inventory->add_option("rack", rack_path_)->required();
  bind(inventory, &Runner::rep_inventory);

  auto *cx = app.add_subcommand("counterexample", "Strong irreducible witness of dimension >= 2");
  cx->add_option("target", target_, "p3 or pn:<n> with n <= 5")->required();
  bind(cx, &Runner::counterexample);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out_ << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err_ << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    return action();
  } catch (const InvalidInput &e) {
    err_ << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimit &e) {
    err_ << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const Error &e) {
    emit({{"error", e.what()}});
    err_ << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::bad_alloc &) {
    err_ << "resource limit: out of memory\n";
    return 3;
  }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  return Runner(out, err).run(args);
}

} // namespace rackrep::cli
