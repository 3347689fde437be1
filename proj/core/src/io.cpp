#include "ainf/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ainf/error.hpp"

namespace ainf {

namespace {

using json = nlohmann::json;

// A JSON node together with its location, for diagnostics.
struct Node {
  const json& j;
  std::string where;

  [[noreturn]] void fail(const std::string& what) const { throw InputError(where.empty() ? "/" : where, what); }

  bool has(const char* key) const { return j.is_object() && j.contains(key); }

  Node at(const char* key) const {
    if (!j.is_object()) fail("expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
    return {*it, where + "/" + key};
  }
  Node at(std::size_t i) const { return {j.at(i), where + "/" + std::to_string(i)}; }

  std::vector<Node> items() const {
    if (!j.is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(at(i));
    return out;
  }
  std::string str() const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  long integer() const {
    if (!j.is_number_integer()) fail("expected an integer");
    return j.get<long>();
  }
  std::size_t index() const {
    const long v = integer();
    if (v < 0) fail("expected a non-negative integer");
    return static_cast<std::size_t>(v);
  }
  Scalar scalar(FieldSpec field) const {
    try {
      if (j.is_number_integer()) return Scalar(field, j.get<long>());
      if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    } catch (const FieldError& e) {
      fail(e.what());
    }
    fail("expected a coefficient (integer or \"p/q\" string)");
  }
};

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::size_t object_named(const Category& c, const Node& n) {
  const std::string name = n.str();
  auto o = c.find_object(name);
  if (!o) n.fail("unknown object \"" + name + "\"");
  return *o;
}

std::size_t label_in(const GradedSpace& h, const Node& n) {
  const std::string label = n.str();
  auto k = h.find(label);
  if (!k) n.fail("unknown basis label \"" + label + "\"");
  return *k;
}

// [{label, coeff}] in the given hom.
Vec parse_terms(FieldSpec field, const GradedSpace& h, const Node& n) {
  Vec v(field);
  for (const Node& t : n.items()) v.add_term(label_in(h, t.at("label")), t.at("coeff").scalar(field));
  return v;
}

json format_terms(const GradedSpace& h, const Vec& v) {
  json out = json::array();
  for (const auto& [k, c] : v) out.push_back({{"label", h[k].label}, {"coeff", c.to_string()}});
  return out;
}

std::string hom_key(const Category& c, std::size_t x, std::size_t y) {
  return c.object_name(x) + "->" + c.object_name(y);
}

bool is_strict_unit_entry(const AInftyCategory& c, const std::vector<Arg>& args, const Vec& v) {
  if (args.size() != 2) return false;
  for (int side = 0; side < 2; ++side) {
    const Arg& u = args[side];
    const Arg& g = args[1 - side];
    if (u.src == u.dst && c.unit_index(u.src) == u.index && v == Vec::basis(c.field(), g.index)) return true;
  }
  return false;
}

}  // namespace

FieldSpec parse_field(std::string_view text) {
  if (text == "Q") return FieldSpec::rationals();
  if (text.size() > 2 && text.substr(0, 2) == "F_") {
    const std::string digits(text.substr(2));
    if (std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) &&
        digits.size() < 20) {
      return FieldSpec::prime(std::stoull(digits));
    }
  }
  throw FieldError("unknown field \"" + std::string(text) + "\" (expected Q or F_p)");
}

std::shared_ptr<AInftyCategory> parse_category(std::string_view text) {
  const json doc = parse_json(text);
  const Node root{doc, ""};

  FieldSpec field = FieldSpec::rationals();
  {
    const Node f = root.at("field");
    try {
      if (f.j.is_object()) {
        field = FieldSpec::prime(static_cast<std::uint64_t>(f.at("Fp").index()));
      } else {
        field = parse_field(f.str());
      }
    } catch (const FieldError& e) {
      f.fail(e.what());
    }
  }
  const Node ma = root.at("max_arity");
  const long max_arity = ma.integer();
  if (max_arity < 2) ma.fail("max_arity must be at least 2");
  auto c = std::make_shared<AInftyCategory>(field, static_cast<int>(max_arity));

  for (const Node& o : root.at("objects").items()) {
    const std::string name = o.str();
    if (name.empty() || name.find("->") != std::string::npos) o.fail("invalid object name \"" + name + "\"");
    if (c->find_object(name)) o.fail("duplicate object \"" + name + "\"");
    c->add_object(name);
  }

  const Node homs = root.at("homs");
  if (!homs.j.is_object()) homs.fail("expected an object");
  for (auto it = homs.j.begin(); it != homs.j.end(); ++it) {
    const Node h{it.value(), homs.where + "/" + it.key()};
    const std::string& key = it.key();
    const auto arrow = key.find("->");
    if (arrow == std::string::npos) h.fail("hom key must read \"SRC->DST\"");
    auto x = c->find_object(key.substr(0, arrow));
    auto y = c->find_object(key.substr(arrow + 2));
    if (!x || !y) h.fail("hom key names an unknown object");
    std::set<std::string> seen;
    for (const Node& b : h.items()) {
      const std::string label = b.at("label").str();
      if (label.empty() || !seen.insert(label).second) b.at("label").fail("empty or duplicate label");
      c->add_basis(*x, *y, label, static_cast<int>(b.at("degree").integer()));
    }
  }

  if (root.has("units")) {
    const Node units = root.at("units");
    if (!units.j.is_object()) units.fail("expected an object");
    for (auto it = units.j.begin(); it != units.j.end(); ++it) {
      const Node u{it.value(), units.where + "/" + it.key()};
      auto o = c->find_object(it.key());
      if (!o) u.fail("unknown object");
      try {
        if (u.j.is_null()) {
          c->set_zero_unit(*o);
        } else {
          const auto k = label_in(c->hom(*o, *o), u);
          if (c->hom(*o, *o)[k].degree != 0) u.fail("unit must have degree 0");
          c->set_unit(*o, k);
        }
      } catch (const PreconditionError& e) {
        u.fail(e.what());
      }
    }
  }
  c->complete_units();

  if (root.has("ops")) {
    for (const Node& op : root.at("ops").items()) {
      const long arity = op.at("arity").integer();
      const auto chain = op.at("chain").items();
      const auto inputs = op.at("inputs").items();
      if (arity < 1 || arity > max_arity) op.at("arity").fail("arity out of range");
      if (inputs.size() != static_cast<std::size_t>(arity)) op.at("inputs").fail("length differs from arity");
      if (chain.size() != inputs.size() + 1) op.at("chain").fail("chain must list arity + 1 objects");
      std::vector<std::size_t> objs;
      for (const Node& n : chain) objs.push_back(object_named(*c, n));
      // chain reads target first: inputs[t] maps chain[t + 1] -> chain[t].
      std::vector<Arg> args;
      for (std::size_t t = 0; t < inputs.size(); ++t) {
        const std::size_t src = objs[t + 1], dst = objs[t];
        args.push_back(Arg{src, dst, label_in(c->hom(src, dst), inputs[t])});
      }
      const Node out = op.at("output");
      Vec v = parse_terms(field, c->hom(objs.back(), objs.front()), out);
      try {
        c->set_m(std::move(args), std::move(v));
      } catch (const PreconditionError& e) {
        out.fail(e.what());
      }
    }
  }
  return c;
}

std::string format_category(const AInftyCategory& c) {
  json doc;
  if (c.field().is_rational()) {
    doc["field"] = "Q";
  } else {
    doc["field"] = {{"Fp", c.field().characteristic()}};
  }
  doc["max_arity"] = c.max_arity();
  json objects = json::array();
  json homs = json::object();
  json units = json::object();
  const std::size_t n = c.object_count();
  for (std::size_t x = 0; x < n; ++x) {
    objects.push_back(c.object_name(x));
    if (c.has_zero_unit(x)) {
      units[c.object_name(x)] = nullptr;
    } else if (auto u = c.unit_index(x)) {
      units[c.object_name(x)] = c.hom(x, x)[*u].label;
    }
    for (std::size_t y = 0; y < n; ++y) {
      const GradedSpace& h = c.hom(x, y);
      if (h.dim() == 0) continue;
      json list = json::array();
      for (std::size_t k = 0; k < h.dim(); ++k) list.push_back({{"label", h[k].label}, {"degree", h[k].degree}});
      homs[hom_key(c, x, y)] = std::move(list);
    }
  }
  std::vector<const AInftyCategory::Table::value_type*> entries;
  for (const auto& e : c.table()) {
    if (!is_strict_unit_entry(c, e.first, e.second)) entries.push_back(&e);
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](auto* a, auto* b) { return a->first.size() < b->first.size(); });
  json ops = json::array();
  for (const auto* e : entries) {
    const auto& args = e->first;
    json chain = json::array();
    json inputs = json::array();
    chain.push_back(c.object_name(args.front().dst));
    for (const Arg& a : args) {
      chain.push_back(c.object_name(a.src));
      inputs.push_back(c.hom(a.src, a.dst)[a.index].label);
    }
    ops.push_back({{"arity", args.size()},
                   {"chain", std::move(chain)},
                   {"inputs", std::move(inputs)},
                   {"output", format_terms(c.hom(args.back().src, args.front().dst), e->second)}});
  }
  doc["objects"] = std::move(objects);
  doc["homs"] = std::move(homs);
  doc["ops"] = std::move(ops);
  doc["units"] = std::move(units);
  return dump(doc);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path.string(), "cannot write file");
  out << text;
}

std::shared_ptr<AInftyCategory> load_category(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_category(text);
  } catch (const InputError& e) {
    throw InputError(path.string() + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

std::vector<TwObject> parse_tw(const Category& base, std::string_view text) {
  const json doc = parse_json(text);
  const Node root{doc, ""};
  std::vector<TwObject> out;
  std::set<std::string> names;
  for (const Node& o : root.at("objects").items()) {
    TwObject x;
    x.name = o.at("name").str();
    if (x.name.empty() || !names.insert(x.name).second) o.at("name").fail("empty or duplicate name");
    for (const Node& s : o.at("summands").items()) {
      x.summands.push_back(Summand{static_cast<int>(s.at("shift").integer()), object_named(base, s.at("object"))});
    }
    if (o.has("delta")) {
      for (const Node& e : o.at("delta").items()) {
        const std::size_t row = e.at("row").index(), col = e.at("col").index();
        if (row >= x.summands.size() || col >= x.summands.size()) e.fail("entry outside the summand range");
        if (x.delta.contains({row, col})) e.fail("duplicate entry");
        Vec v = parse_terms(base.field(), base.hom(x.summands[col].object, x.summands[row].object), e.at("terms"));
        if (!v.is_zero()) x.delta.emplace(std::make_pair(row, col), std::move(v));
      }
    }
    try {
      check_tw_object(base, x);
    } catch (const PreconditionError& e) {
      o.fail(e.what());
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::string tw_category_ref(std::string_view text) {
  const json doc = parse_json(text);
  const Node root{doc, ""};
  return root.has("category") ? root.at("category").str() : std::string();
}

namespace {

json format_entries(const Category& base, const TwObject& src, const TwObject& dst, const EntryMatrix& m) {
  json list = json::array();
  for (const auto& [rc, v] : m) {
    if (v.is_zero()) continue;
    const auto& h = base.hom(src.summands[rc.second].object, dst.summands[rc.first].object);
    list.push_back({{"row", rc.first}, {"col", rc.second}, {"terms", format_terms(h, v)}});
  }
  return list;
}

}  // namespace

std::string format_tw(const Category& base, const std::vector<TwObject>& objects) {
  json list = json::array();
  for (const TwObject& x : objects) {
    json summands = json::array();
    for (const Summand& s : x.summands) summands.push_back({{"object", base.object_name(s.object)}, {"shift", s.shift}});
    list.push_back({{"name", x.name}, {"summands", std::move(summands)}, {"delta", format_entries(base, x, x, x.delta)}});
  }
  json doc;
  doc["objects"] = std::move(list);
  return dump(doc);
}

Morphism parse_tw_map(const TwCategory& tw, std::string_view text) {
  const json doc = parse_json(text);
  const Node root{doc, ""};
  const std::size_t x = object_named(tw, root.at("src"));
  const std::size_t y = object_named(tw, root.at("dst"));
  const int degree = static_cast<int>(root.at("degree").integer());
  const TwObject& sx = tw.object(x);
  const TwObject& sy = tw.object(y);
  EntryMatrix m;
  for (const Node& e : root.at("entries").items()) {
    const std::size_t row = e.at("row").index(), col = e.at("col").index();
    if (row >= sy.summands.size() || col >= sx.summands.size()) e.fail("entry outside the summand range");
    if (m.contains({row, col})) e.fail("duplicate entry");
    m.emplace(std::make_pair(row, col),
              parse_terms(tw.field(), tw.base().hom(sx.summands[col].object, sy.summands[row].object), e.at("terms")));
  }
  try {
    return tw.morphism(x, y, degree, m);
  } catch (const PreconditionError& e) {
    root.fail(e.what());
  }
}

std::string format_tw_map(const TwCategory& tw, const Morphism& f) {
  json doc;
  doc["src"] = tw.object_name(f.src);
  doc["dst"] = tw.object_name(f.dst);
  doc["degree"] = f.degree;
  doc["entries"] = format_entries(tw.base(), tw.object(f.src), tw.object(f.dst), tw.entries(f));
  return dump(doc);
}

Morphism parse_element(const Category& c, std::string_view text) {
  const std::string where(text);
  const auto colon = text.find(':');
  const auto arrow = text.find("->");
  if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow > colon) {
    throw InputError(where, "expected SRC->DST:terms");
  }
  std::string_view dst_part = text.substr(arrow + 2, colon - arrow - 2);
  std::optional<int> degree;
  if (auto at = dst_part.find('@'); at != std::string_view::npos) {
    try {
      degree = std::stoi(std::string(dst_part.substr(at + 1)));
    } catch (const std::exception&) {
      throw InputError(where, "malformed degree");
    }
    dst_part = dst_part.substr(0, at);
  }
  auto x = c.find_object(text.substr(0, arrow));
  auto y = c.find_object(dst_part);
  if (!x || !y) throw InputError(where, "unknown object");
  const GradedSpace& h = c.hom(*x, *y);
  Vec v(c.field());
  std::string body(text.substr(colon + 1));
  body.erase(std::remove(body.begin(), body.end(), ' '), body.end());
  if (body != "0") {
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t plus = body.find('+', start);
      if (plus == start) throw InputError(where, "empty term");
      const std::string term = body.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
      Scalar coeff(c.field(), 1);
      std::string label = term;
      if (auto star = term.find('*'); star != std::string::npos) {
        try {
          coeff = Scalar::parse(c.field(), term.substr(0, star));
        } catch (const FieldError& e) {
          throw InputError(where, e.what());
        }
        label = term.substr(star + 1);
      } else if (!term.empty() && term[0] == '-') {
        coeff = Scalar(c.field(), -1);
        label = term.substr(1);
      }
      auto k = h.find(label);
      if (!k) throw InputError(where, "unknown basis label \"" + label + "\"");
      if (degree && h[*k].degree != *degree) throw InputError(where, "inhomogeneous element");
      degree = h[*k].degree;
      v.add_term(*k, coeff);
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
  }
  return Morphism{*x, *y, degree.value_or(0), std::move(v)};
}

std::string format_element(const Category& c, const Morphism& f) {
  std::string s = c.object_name(f.src) + "->" + c.object_name(f.dst);
  if (f.coords.is_zero()) return s + "@" + std::to_string(f.degree) + ":0";
  s += ":";
  bool first = true;
  for (const auto& [k, coeff] : f.coords) {
    if (!first) s += "+";
    first = false;
    s += coeff.to_string() + "*" + c.hom(f.src, f.dst)[k].label;
  }
  return s;
}

}  // namespace ainf
