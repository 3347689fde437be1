#include "ainf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <sstream>

#include "ainf/cohomology.hpp"
#include "ainf/directed.hpp"
#include "ainf/error.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/io.hpp"
#include "ainf/massey.hpp"

namespace ainf {

namespace {

using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInput = 2;

struct Emitter {
  std::ostream& out;
  bool as_json = false;

  void emit(const json& report, const std::string& text) const {
    if (as_json) {
      out << report.dump(2) << "\n";
    } else {
      out << text;
    }
  }
};

json dense(const Vec& v, std::size_t n) {
  json out = json::array();
  for (const Scalar& s : v.dense(n)) out.push_back(s.to_string());
  return out;
}

json report_json(const Category& c, const Report& r) {
  json failures = json::array();
  for (const Failure& f : r.failures) {
    failures.push_back({{"arity", f.arity}, {"chain", describe_chain(c, f.args)}, {"what", f.what}});
  }
  return {{"verdict", to_string(r.verdict)},
          {"checked_up_to", r.checked_up_to},
          {"checks", r.checks},
          {"failure_count", r.failure_count},
          {"failures", std::move(failures)}};
}

std::shared_ptr<TwCategory> singletons(std::shared_ptr<const Category> base) {
  std::vector<std::vector<Summand>> objs;
  for (std::size_t o = 0; o < base->object_count(); ++o) objs.push_back({Summand{0, o}});
  return free_category(std::move(base), objs);
}

// Base category plus the singleton embedding, extended by a Tw file if given.
std::shared_ptr<TwCategory> tw_over(std::shared_ptr<const AInftyCategory> base, const std::string& tw_path) {
  auto T = singletons(base);
  if (tw_path.empty()) return T;
  return T->with_objects(parse_tw(*base, read_file(tw_path)));
}

int cmd_verify(const Emitter& em, const std::string& file, std::optional<int> arity) {
  auto c = load_category(file);
  const int k = arity.value_or(c->max_arity());
  const Report units = verify_units(*c, k);
  const Report rel = verify_relations(*c, k);
  json j{{"command", "verify"}, {"arity", k}, {"units", report_json(*c, units)}, {"relations", report_json(*c, rel)}};
  std::ostringstream text;
  if (units.ok() && rel.ok()) {
    text << "all relations hold up to arity " << k << "\n";
  } else {
    text << "units: " << to_string(units.verdict) << ", relations: " << to_string(rel.verdict) << " (checked up to arity "
         << rel.checked_up_to << ")\n";
    for (const Report* r : {&units, &rel}) {
      for (const Failure& f : r->failures) text << "  arity " << f.arity << ": " << describe_chain(*c, f.args) << " " << f.what << "\n";
    }
    if (rel.verdict == Verdict::unknown) text << "  arity " << k << " exceeds max_arity " << c->max_arity() << "\n";
  }
  em.emit(j, text.str());
  return units.ok() && rel.ok() ? kOk : kFalse;
}

int cmd_cohomology(const Emitter& em, const std::string& file) {
  auto c = load_category(file);
  json homs = json::object();
  std::ostringstream text;
  for (std::size_t x = 0; x < c->object_count(); ++x) {
    for (std::size_t y = 0; y < c->object_count(); ++y) {
      if (c->hom(x, y).dim() == 0) continue;
      HomCohomology H(*c, x, y);
      const std::string key = c->object_name(x) + "->" + c->object_name(y);
      json dims = json::object();
      text << key << ":";
      for (auto [d, n] : H.dims()) {
        if (n == 0) continue;
        dims[std::to_string(d)] = n;
        text << " H^" << d << "=" << n;
      }
      if (dims.empty()) text << " 0";
      text << "\n";
      homs[key] = std::move(dims);
    }
  }
  em.emit({{"command", "cohomology"}, {"homs", std::move(homs)}}, text.str());
  return kOk;
}

int cmd_cone(const Emitter& em, const std::string& file, const std::string& tw_path, const std::string& map_path,
             const std::string& name) {
  auto base = load_category(file);
  auto T = tw_over(base, tw_path);
  const Morphism f = parse_tw_map(*T, read_file(map_path));
  ConeData cd = cone(*T, f, name);
  auto T2 = T->with_objects({cd.cone});
  const std::size_t c = T2->object_count() - 1;
  const Morphism i = T2->morphism(f.dst, c, 0, cd.i);
  const Morphism p = T2->morphism(c, f.src, 1, cd.p);
  const std::string tw_doc = format_tw(*base, {cd.cone});
  const std::string i_doc = format_tw_map(*T2, i);
  const std::string p_doc = format_tw_map(*T2, p);
  json j{{"command", "cone"},
         {"cone", json::parse(tw_doc)["objects"][0]},
         {"i", json::parse(i_doc)},
         {"p", json::parse(p_doc)}};
  em.emit(j, "cone:\n" + tw_doc + "i:\n" + i_doc + "p:\n" + p_doc);
  return kOk;
}

json massey_json(const Category& c, const CohomologyCache& H, const MasseyResult& r) {
  json gens = json::array();
  for (const Vec& v : r.indeterminacy) gens.push_back(dense(v, r.ambient_dim));
  const Morphism rep{r.src, r.dst, 0, H(r.src, r.dst).lift(0, r.representative)};
  return {{"src", c.object_name(r.src)},
          {"dst", c.object_name(r.dst)},
          {"h0_dim", r.ambient_dim},
          {"representative", dense(r.representative, r.ambient_dim)},
          {"representative_cycle", format_element(c, rep)},
          {"indeterminacy", std::move(gens)}};
}

std::string massey_text(const Category& c, const CohomologyCache& H, const MasseyResult& r) {
  std::ostringstream s;
  const Morphism rep{r.src, r.dst, 0, H(r.src, r.dst).lift(0, r.representative)};
  s << "representative: " << format_element(c, rep) << "\n";
  s << "indeterminacy: " << r.indeterminacy.size() << " generator(s) in H^0 of dimension " << r.ambient_dim << "\n";
  for (const Vec& v : r.indeterminacy) {
    const Morphism g{r.src, r.dst, 0, H(r.src, r.dst).lift(0, v)};
    s << "  " << format_element(c, g) << "\n";
  }
  return s.str();
}

int cmd_massey(const Emitter& em, const std::string& file, const std::string& tw_path, const std::string& fs,
               const std::string& gs, const std::string& hs, bool triangulated) {
  auto base = load_category(file);
  auto T = tw_over(base, tw_path);
  const Category& c = (triangulated || !tw_path.empty()) ? static_cast<const Category&>(*T) : *base;
  const Morphism f = parse_element(c, fs), g = parse_element(c, gs), h = parse_element(c, hs);
  CohomologyCache H(c);
  const MasseyResult r = triangulated ? massey_triangulated(*T, f, g, h) : massey_ainfty(H, f, g, h);
  json j = massey_json(c, H, r);
  j["command"] = "massey";
  j["method"] = triangulated ? "triangulated" : "ainfty";
  em.emit(j, massey_text(c, H, r));
  return kOk;
}

int cmd_triangle(const Emitter& em, const std::string& file, const std::string& tw_path, const std::string& fs,
                 const std::string& gs, const std::string& hs, bool standard) {
  auto base = load_category(file);
  auto T = tw_over(base, tw_path);
  Morphism f = parse_element(*T, fs);
  Morphism g, h;
  if (standard) {
    ConeData cd = cone(*T, f);
    T = T->with_objects({cd.cone});
    const std::size_t c = T->object_count() - 1;
    g = T->morphism(f.dst, c, 0, cd.i);
    h = T->morphism(c, f.src, 1, cd.p);
  } else {
    if (gs.empty() || hs.empty()) throw InputError("--g/--h", "required unless --standard is given");
    g = parse_element(*T, gs);
    h = parse_element(*T, hs);
  }
  CohomologyCache H(*T);
  const bool yes = is_distinguished(H, f, g, h);
  const MasseyResult r = massey_ainfty(H, f, g, h);
  const std::string x = T->object_name(f.src);
  const std::string evidence = yes ? "id_" + x + " in Massey coset" : "id_" + x + " not in Massey coset";
  json j = massey_json(*T, H, r);
  j["command"] = "triangle-check";
  j["distinguished"] = yes;
  j["evidence"] = evidence;
  em.emit(j, std::string(yes ? "distinguished" : "not distinguished") + ": " + evidence + "\n" + massey_text(*T, H, r));
  return yes ? kOk : kFalse;
}

int cmd_directed(const Emitter& em, const std::string& file) {
  auto c = load_category(file);
  bool minimal = true;
  for_each_chain(*c, 1, [&](std::span<const Arg> a) {
    if (!c->b(a).is_zero()) minimal = false;
  });
  std::shared_ptr<const Category> H = c;
  if (!minimal) H = cohomology_category(*c).category;
  const DirectedStructure d = analyze_directed(*H);
  json j{{"command", "directed"}, {"directed", d.directed}, {"exhaustive", d.exhaustive}, {"on_cohomology", !minimal}};
  std::ostringstream text;
  if (!minimal) text << "(analysed on the cohomology category)\n";
  if (d.directed) {
    json blocks = json::array();
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
      json names = json::array();
      text << "O_" << b << ":";
      for (std::size_t o : d.blocks[b]) {
        names.push_back(H->object_name(o));
        text << " " << H->object_name(o);
      }
      text << "\n";
      blocks.push_back(std::move(names));
    }
    text << "directed of length " << d.length << "\n";
    j["blocks"] = std::move(blocks);
    j["length"] = d.length;
  } else {
    j["witness"] = format_element(*H, *d.witness);
    j["reason"] = d.reason;
    text << "not directed: " << d.reason << "\nwitness " << format_element(*H, *d.witness) << "\n";
  }
  if (!d.exhaustive) text << "note: some hom components were sampled, not enumerated\n";
  em.emit(j, text.str());
  return d.directed ? kOk : kFalse;
}

int cmd_truncate(const Emitter& em, const std::string& tw_path, int q, std::string category) {
  const std::string text_in = read_file(tw_path);
  if (category.empty()) {
    category = tw_category_ref(text_in);
    if (category.empty()) throw InputError(tw_path, "no base category: pass --category or set \"category\"");
    category = (std::filesystem::path(tw_path).parent_path() / category).string();
  }
  auto base = load_category(category);
  const auto objects = parse_tw(*base, text_in);
  bool all = true;
  json list = json::array();
  std::ostringstream text;
  for (const TwObject& x : objects) {
    const TruncationWitness w = truncation_check(x, q);
    all = all && w.accepted;
    list.push_back({{"name", x.name}, {"accepted", w.accepted}, {"blocks", w.blocks()}, {"block_starts", w.block_starts}});
    text << x.name << ": " << (w.accepted ? "in" : "not in") << " Tw_<=" << q << " (" << w.blocks()
         << " block(s), starts";
    for (auto s : w.block_starts) text << " " << s;
    text << ")\n";
  }
  em.emit({{"command", "truncate"}, {"q", q}, {"objects", std::move(list)}, {"accepted", all}}, text.str());
  return all ? kOk : kFalse;
}

int cmd_export(std::ostream& out, const std::string& name, const FixtureParams& params, const std::string& output) {
  auto c = make_fixture(name, params);
  const std::string doc = format_category(*c);
  if (output.empty()) {
    out << doc;
  } else {
    write_file(output, doc);
  }
  return kOk;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"A-infinity categories, twisted complexes and Massey products"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured output");

  std::string file, tw, map, fs, gs, hs, name, output, category, field = "Q";
  std::optional<int> arity;
  int q = 0;
  bool triangulated = false, standard = false;
  FixtureParams params;

  auto* verify = app.add_subcommand("verify", "Check units and the A-infinity relations");
  verify->add_option("file", file)->required();
  verify->add_option("--arity", arity, "Highest arity to check");

  auto* coh = app.add_subcommand("cohomology", "Cohomology dimensions per hom and degree");
  coh->add_option("file", file)->required();

  auto* cone_cmd = app.add_subcommand("cone", "Cone of a closed degree-0 map of twisted complexes");
  cone_cmd->add_option("file", file)->required();
  cone_cmd->add_option("--tw", tw, "Twisted complexes over the category");
  cone_cmd->add_option("--map", map, "The map f")->required();
  cone_cmd->add_option("--name", name, "Name of the cone object");

  auto* massey = app.add_subcommand("massey", "Massey product <h, g, f>");
  massey->set_help_flag("--help", "Print this help message and exit");
  massey->add_option("file", file)->required();
  massey->add_option("--tw", tw, "Extra twisted complexes");
  massey->add_option("--f", fs)->required();
  massey->add_option("--g", gs)->required();
  massey->add_option("--h", hs)->required();
  massey->add_flag("--triangulated", triangulated, "Use the cone construction");

  auto* tri = app.add_subcommand("triangle-check", "Is X -f-> Y -g-> Z -h-> X distinguished");
  tri->set_help_flag("--help", "Print this help message and exit");
  tri->add_option("file", file)->required();
  tri->add_option("--tw", tw, "Extra twisted complexes");
  tri->add_option("--f", fs)->required();
  tri->add_option("--g", gs);
  tri->add_option("--h", hs);
  tri->add_flag("--standard", standard, "Use the standard triangle of f");

  auto* dir = app.add_subcommand("directed", "Directed block structure");
  dir->add_option("file", file)->required();

  auto* trunc = app.add_subcommand("truncate", "Membership in Tw_<=q");
  trunc->add_option("twfile", tw)->required();
  trunc->add_option("--q", q)->required()->check(CLI::NonNegativeNumber);
  trunc->add_option("--category", category, "Base category file");

  auto* fixtures = app.add_subcommand("fixtures", "Built-in example categories");
  fixtures->require_subcommand(1);
  auto* exp = fixtures->add_subcommand("export", "Write a fixture as a category file");
  std::string names;
  for (const auto& n : fixture_names()) names += (names.empty() ? "" : ", ") + n;
  exp->add_option("name", name, names)->required();
  exp->add_option("--N", params.N);
  exp->add_option("--d", params.d);
  exp->add_option("--field", field);
  exp->add_option("--seed", params.seed);
  exp->add_option("--max-arity", params.max_arity);
  exp->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInput;
  }

  const Emitter em{out, as_json};
  try {
    if (*verify) return cmd_verify(em, file, arity);
    if (*coh) return cmd_cohomology(em, file);
    if (*cone_cmd) return cmd_cone(em, file, tw, map, name);
    if (*massey) return cmd_massey(em, file, tw, fs, gs, hs, triangulated);
    if (*tri) return cmd_triangle(em, file, tw, fs, gs, hs, standard);
    if (*dir) return cmd_directed(em, file);
    if (*trunc) return cmd_truncate(em, tw, q, category);
    if (*exp) {
      params.field = parse_field(field);
      return cmd_export(out, name, params, output);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}

}  // namespace ainf
