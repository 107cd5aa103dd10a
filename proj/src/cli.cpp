#include "talg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "talg/algebra.hpp"
#include "talg/families.hpp"
#include "talg/io.hpp"
#include "talg/relational.hpp"
#include "talg/rough.hpp"
#include "talg/spectrum.hpp"
#include "talg/verify.hpp"

namespace talg::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write file: " + path);
  f << content;
}

json violations_json(const ValidationReport& r) {
  json arr = json::array();
  for (const auto& v : r.violations)
    arr.push_back({{"law", v.law}, {"witness", v.witness}, {"detail", v.detail}});
  return arr;
}

json morphism_json(const MorphismReport& m) {
  json arr = json::array();
  for (const auto& v : m.violations)
    arr.push_back({{"op", v.op}, {"args", v.args}, {"expected", v.expected}, {"actual", v.actual}});
  return {{"is_homomorphism", m.is_homomorphism},
          {"is_injective", m.is_injective},
          {"is_surjective", m.is_surjective},
          {"violations", arr}};
}

json point_set_json(Bits s) { return json(bit_indices(s)); }

json pairs_json(const RelationElement& r) {
  json arr = json::array();
  for (auto [p, q] : r.pairs) arr.push_back(json::array({p, q}));
  return arr;
}

json filters_json(const std::vector<PrimeFilter>& filters) {
  json arr = json::array();
  for (const auto& f : filters) arr.push_back(bit_indices(f.members));
  return arr;
}

json envelope(const std::string& command, const std::string& digest) {
  return {{"schema", 1}, {"command", command}, {"input_digest", digest}};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

// ----- check ---------------------------------------------------------------

int do_check(const Algebra& alg, const std::string& digest, std::ostream& out, std::ostream& err) {
  const FiniteLattice& l = lattice_of(alg);
  json sections = json::object();
  json counterexamples = json::array();
  bool failed = false;
  const json skipped = {{"skipped", true}};

  auto add = [&](const std::string& name, const ValidationReport& r) {
    sections[name] = {{"pass", r.ok()}, {"violations", violations_json(r)}};
    failed |= !r.ok();
    for (const auto& v : r.violations)
      counterexamples.push_back({{"section", name}, {"law", v.law}, {"witness", v.witness}});
  };

  auto lat = check_distributive_lattice(l);
  add("lattice-laws", lat);

  if (const auto* t = std::get_if<TStructure>(&alg)) {
    if (lat.ok()) {
      add("t-axioms", check_t_axioms(*t));
      add("derived-properties", check_derived_props(*t));
    } else {
      sections["t-axioms"] = skipped;
      sections["derived-properties"] = skipped;
    }
  } else if (const auto* h = std::get_if<HTAlgebra>(&alg)) {
    if (lat.ok()) {
      auto hey = check_heyting_law(*h);
      add("heyting-law", hey);
      if (hey.ok()) {
        auto ax = check_ht_axioms(*h);
        add("ht-axioms", ax);
        add("prelinearity", check_prelinearity(*h));
        if (ax.ok())
          add("s2-double-negation", check_s2_double_negation(*h));
        else
          sections["s2-double-negation"] = skipped;
        if (l.n <= kSubsetEnumerationGuard)
          add("maximality", check_maximality_equivalence(*h));
        else
          sections["maximality"] = skipped;
      } else {
        for (const char* name : {"ht-axioms", "prelinearity", "s2-double-negation", "maximality"})
          sections[name] = skipped;
      }
    } else {
      for (const char* name :
           {"heyting-law", "ht-axioms", "prelinearity", "s2-double-negation", "maximality"})
        sections[name] = skipped;
    }
  }

  json doc = envelope("check", digest);
  doc["kind"] = kind_name(kind_of(alg));
  doc["n"] = l.n;
  doc["degenerate"] = l.degenerate();
  doc["sections"] = sections;
  doc["counterexamples"] = counterexamples;
  doc["verdict"] = failed ? "fail" : "pass";
  emit(out, doc);
  err << "check: kind=" << kind_name(kind_of(alg)) << " n=" << l.n << " -> "
      << (failed ? "FAIL" : "PASS") << "\n";
  return failed ? 1 : 0;
}

// ----- convert ----------------------------------------------------------------

int do_convert(const Algebra& alg, const std::string& to, const std::string& digest,
               const std::string& emit_path, std::ostream& out, std::ostream& err) {
  if (kind_of(alg) == Kind::lattice)
    throw UsageError("convert requires an algebra of kind 't' or 'ht'");

  json sections = json::object();
  bool failed = false;
  auto add = [&](const std::string& name, const ValidationReport& r) {
    sections[name] = {{"pass", r.ok()}, {"violations", violations_json(r)}};
    failed |= !r.ok();
  };

  Algebra result = alg;
  if (const auto* t = std::get_if<TStructure>(&alg)) {
    auto lat = check_distributive_lattice(t->lattice);
    add("lattice-laws", lat);
    if (lat.ok()) add("t-axioms", check_t_axioms(*t));
    if (!failed && to == "ht") result = to_ht(*t);
  } else {
    const auto& h = std::get<HTAlgebra>(alg);
    auto lat = check_distributive_lattice(h.lattice);
    add("lattice-laws", lat);
    if (lat.ok()) {
      auto hey = check_heyting_law(h);
      add("heyting-law", hey);
      if (hey.ok()) add("ht-axioms", check_ht_axioms(h));
    }
    if (!failed && to == "t") result = to_t(h);
  }

  json doc = envelope("convert", digest);
  doc["to"] = to;
  doc["sections"] = sections;
  doc["verdict"] = failed ? "fail" : "pass";
  if (!failed) {
    std::string text = save_algebra(result);
    doc["algebra"] = json::parse(text);
    if (!emit_path.empty()) write_file(emit_path, text);
  }
  emit(out, doc);
  err << "convert --to " << to << ": " << (failed ? "FAIL (input invalid)" : "ok") << "\n";
  return failed ? 1 : 0;
}

// ----- spectrum -------------------------------------------------------------

int do_spectrum(const Algebra& alg, const std::string& digest, std::ostream& out,
                std::ostream& err) {
  const FiniteLattice& l = lattice_of(alg);
  auto lat = check_distributive_lattice(l);
  json doc = envelope("spectrum", digest);
  if (!lat.ok()) {
    doc["sections"] = {{"lattice-laws", {{"pass", false}, {"violations", violations_json(lat)}}}};
    doc["verdict"] = "fail";
    emit(out, doc);
    err << "spectrum: input is not a distributive lattice\n";
    return 1;
  }

  Spectrum spec = chain_decomposition(l);
  json chains = json::array();
  for (const auto& block : spec.blocks)
    chains.push_back({{"filters", block.filters},
                      {"is_chain", block.is_chain},
                      {"oversized", block.oversized()}});
  doc["filters"] = filters_json(spec.filters);
  doc["chains"] = chains;
  doc["chains_within_bound"] = spec.chains_of_at_most_two();
  doc["verdict"] = "pass";
  emit(out, doc);
  err << "spectrum: " << spec.filters.size() << " prime filters in " << spec.blocks.size()
      << " blocks\n";
  return 0;
}

// ----- represent ------------------------------------------------------------

HTAlgebra heyting_input(const Algebra& alg, json& sections, bool& failed) {
  auto add = [&](const std::string& name, const ValidationReport& r) {
    sections[name] = {{"pass", r.ok()}, {"violations", violations_json(r)}};
    failed |= !r.ok();
  };
  if (const auto* t = std::get_if<TStructure>(&alg)) {
    auto lat = check_distributive_lattice(t->lattice);
    add("lattice-laws", lat);
    if (!lat.ok()) return {};
    auto ax = check_t_axioms(*t);
    add("t-axioms", ax);
    if (!ax.ok()) return {};
    return to_ht(*t);
  }
  const auto& h = std::get<HTAlgebra>(alg);
  auto lat = check_distributive_lattice(h.lattice);
  add("lattice-laws", lat);
  if (!lat.ok()) return {};
  auto hey = check_heyting_law(h);
  add("heyting-law", hey);
  if (!hey.ok()) return {};
  auto ax = check_ht_axioms(h);
  add("ht-axioms", ax);
  if (!ax.ok()) return {};
  return h;
}

int do_represent(const Algebra& alg, const std::string& mode, const std::string& digest,
                 std::ostream& out, std::ostream& err) {
  if (kind_of(alg) == Kind::lattice)
    throw UsageError("represent requires an algebra of kind 't' or 'ht'");
  if (lattice_of(alg).degenerate())
    throw UsageError("represent: the degenerate one-element algebra has no representation");

  json sections = json::object();
  bool failed = false;
  HTAlgebra h = heyting_input(alg, sections, failed);

  json doc = envelope("represent", digest);
  doc["mode"] = mode;
  doc["sections"] = sections;
  if (failed) {
    doc["verdict"] = "fail";
    emit(out, doc);
    err << "represent: input fails its axioms\n";
    return 1;
  }

  if (mode == "rough") {
    RoughRepresentation rep = represent_rough(h);
    json classes = json::array();
    for (const auto& cls : rep.space.classes) classes.push_back(cls);
    json map = json::array();
    for (const auto& p : rep.image)
      map.push_back(json::array({point_set_json(p.lower), point_set_json(p.upper)}));
    doc["filters"] = filters_json(rep.spectrum.filters);
    doc["space"] = {{"points", rep.space.points}, {"classes", classes}};
    doc["map"] = map;
    doc["image_size"] = static_cast<int>(rep.algebra.carrier.size());
    doc["morphism"] = morphism_json(rep.morphism);
    doc["isomorphism"] = rep.isomorphism;
  } else {
    RelationalRepresentation rep = represent_relational(h);
    json map = json::array();
    for (const auto& r : rep.image) map.push_back(pairs_json(r));
    json steps = json::array();
    for (int i = 1; i <= 4; ++i)
      steps.push_back({{"step", i}, {"pass", !rep.preservation.has("s2-step-" + std::to_string(i))}});
    doc["filters"] = filters_json(rep.spectrum.filters);
    doc["g"] = rep.g.map;
    doc["G"] = pairs_json(rep.g_relation);
    doc["map"] = map;
    doc["preservation"] = {{"s1", !rep.preservation.has("s1-preservation")},
                           {"c", !rep.preservation.has("c-preservation")},
                           {"s2_steps", steps}};
    doc["image_size"] = static_cast<int>(rep.algebra.carrier.size());
    doc["morphism"] = morphism_json(rep.morphism);
    doc["isomorphism"] = rep.isomorphism;
  }
  doc["verdict"] = "pass";
  emit(out, doc);
  err << "represent --mode " << mode << ": embedding verified\n";
  return 0;
}

// ----- examples / enumerate ---------------------------------------------------

Algebra example_by_name(const std::string& name) {
  if (name == "bt") return make_bt();
  if (name == "b") return make_b();
  if (name == "btxb") return direct_product(make_bt(), make_b());
  if (name == "btxbt") return direct_product(make_bt(), make_bt());
  if (name == "bxb") return direct_product(make_b(), make_b());
  if (name.rfind("rough:", 0) == 0) {
    std::vector<std::vector<int>> classes;
    int next = 0;
    std::stringstream ss(name.substr(6));
    std::string part;
    while (std::getline(ss, part, ',')) {
      int size = 0;
      try {
        size = std::stoi(part);
      } catch (...) {
        throw UsageError("examples: bad partition '" + name + "'");
      }
      if (size < 1) throw UsageError("examples: class sizes must be positive");
      std::vector<int> cls;
      for (int i = 0; i < size; ++i) cls.push_back(next++);
      classes.push_back(std::move(cls));
    }
    if (classes.empty()) throw UsageError("examples: empty partition");
    return from_approximation_space(classes).structure;
  }
  throw UsageError("examples: unknown name '" + name +
                   "' (expected bt, b, btxb, btxbt, bxb or rough:<sizes>)");
}

int do_examples(const std::string& name, const std::string& emit_path, std::ostream& out,
                std::ostream& err) {
  Algebra alg = example_by_name(name);
  std::string text = save_algebra(alg);
  out << text;
  if (!emit_path.empty()) write_file(emit_path, text);
  err << "examples --name " << name << ": kind=" << kind_name(kind_of(alg))
      << " n=" << element_count(alg) << "\n";
  return 0;
}

int do_enumerate(int size, const std::string& emit_path, std::ostream& out, std::ostream& err) {
  auto structures = enumerate_t_structures(size);
  json algebras = json::array();
  for (const auto& t : structures) algebras.push_back(json::parse(save_algebra(t)));

  json doc = envelope("enumerate", content_digest("size=" + std::to_string(size)));
  doc["n"] = size;
  doc["count"] = static_cast<int>(structures.size());
  doc["algebras"] = algebras;
  doc["verdict"] = "pass";
  emit(out, doc);

  if (!emit_path.empty()) {
    std::filesystem::create_directories(emit_path);
    for (size_t i = 0; i < structures.size(); ++i)
      write_file(emit_path + "/t" + std::to_string(size) + "_" + std::to_string(i) + ".json",
                 save_algebra(structures[i]));
  }
  err << "enumerate --size " << size << ": " << structures.size() << " structures\n";
  return 0;
}

// ----- verify-paper -----------------------------------------------------------

int do_verify(int bound, std::ostream& out, std::ostream& err) {
  RunReport rep = verify_theorems(bound);

  json sections = json::array();
  for (const auto& s : rep.sections)
    sections.push_back(
        {{"name", s.name}, {"pass", s.pass}, {"checks", s.checks}, {"failures", s.failures}});

  json doc = envelope("verify-paper", content_digest("bound=" + std::to_string(bound)));
  doc["bound"] = bound;
  doc["corpus_size"] = rep.corpus_size;
  doc["sections"] = sections;
  doc["counterexamples"] = rep.counterexamples;
  doc["verdict"] = rep.pass() ? "pass" : "fail";
  emit(out, doc);

  for (const auto& s : rep.sections)
    err << "  [" << (s.pass ? "PASS" : "FAIL") << "] " << s.name << " (" << s.checks
        << " checks)\n";
  err << "verify-paper --bound " << bound << ": " << (rep.pass() ? "PASS" : "FAIL") << "\n";
  return rep.pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for finite three-valued structures and their representations", "talg"};
  app.require_subcommand(1);

  std::string file, emit_path, to, mode, name;
  int size = 3, bound = 4;

  auto* cmd_check = app.add_subcommand("check", "validate an algebra file against its axioms");
  cmd_check->add_option("file", file, "algebra file")->required();

  auto* cmd_convert = app.add_subcommand("convert", "convert between the two presentations");
  cmd_convert->add_option("file", file, "algebra file")->required();
  cmd_convert->add_option("--to", to, "target kind")
      ->required()
      ->check(CLI::IsMember({"t", "ht"}));
  cmd_convert->add_option("--emit", emit_path, "write the result as an algebra file");

  auto* cmd_spectrum = app.add_subcommand("spectrum", "prime filters and chain decomposition");
  cmd_spectrum->add_option("file", file, "algebra file")->required();

  auto* cmd_represent = app.add_subcommand("represent", "run a representation construction");
  cmd_represent->add_option("file", file, "algebra file")->required();
  cmd_represent->add_option("--mode", mode, "construction")
      ->required()
      ->check(CLI::IsMember({"rough", "relational"}));

  auto* cmd_examples = app.add_subcommand("examples", "emit a named example algebra");
  cmd_examples->add_option("--name", name, "bt | b | btxb | btxbt | bxb | rough:<sizes>")
      ->required();
  cmd_examples->add_option("--emit", emit_path, "write the algebra file");

  auto* cmd_enumerate = app.add_subcommand("enumerate", "all structures of a size, up to isomorphism");
  cmd_enumerate->add_option("--size", size, "carrier size")->required();
  cmd_enumerate->add_option("--emit", emit_path, "directory for the algebra files");

  auto* cmd_verify = app.add_subcommand("verify-paper", "run the full verification suite");
  cmd_verify->add_option("--bound", bound, "enumeration bound for the corpus (default 4)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_examples->parsed()) return do_examples(name, emit_path, out, err);
    if (cmd_enumerate->parsed()) return do_enumerate(size, emit_path, out, err);
    if (cmd_verify->parsed()) return do_verify(bound, out, err);

    const std::string text = read_file(file);
    const std::string digest = content_digest(text);
    const Algebra alg = load_algebra(text);
    if (cmd_check->parsed()) return do_check(alg, digest, out, err);
    if (cmd_convert->parsed()) return do_convert(alg, to, digest, emit_path, out, err);
    if (cmd_spectrum->parsed()) return do_spectrum(alg, digest, out, err);
    if (cmd_represent->parsed()) return do_represent(alg, mode, digest, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace talg::cli
