#include "commtop/spec_io.hpp"

#include "commtop/catalog.hpp"
#include "commtop/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace commtop {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError((field.empty() ? std::string("document") : field) + ": " + what);
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& member(const json& obj, const std::string& field, const std::string& key) {
  if (!obj.is_object()) fail(field, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

std::string join(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }
std::string index(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

std::string get_string(const json& v, const std::string& field) {
  if (!v.is_string()) fail(field, "expected a string");
  return v.get<std::string>();
}

long long get_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(field, "expected an integer");
  return v.get<long long>();
}

std::size_t get_count(const json& v, const std::string& field) {
  long long n = get_int(v, field);
  if (n < 0) fail(field, "expected a nonnegative integer");
  return static_cast<std::size_t>(n);
}

const json& get_array(const json& v, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array");
  return v;
}

Rational get_rational(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) fail(field, "expected a rational string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

RationalVector get_rational_vector(const json& v, const std::string& field, std::size_t length) {
  const json& a = get_array(v, field);
  if (a.size() != length) fail(field, "expected " + std::to_string(length) + " entries, got " + std::to_string(a.size()));
  RationalVector out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(get_rational(a[i], index(field, i)));
  return out;
}

Element get_element(const json& v, const std::string& field, const FiniteGroup& g) {
  std::string name = get_string(v, field);
  auto e = g.find(name);
  if (!e) fail(field, "unknown element \"" + name + "\"");
  return *e;
}

std::vector<std::string> get_names(const json& v, const std::string& field) {
  std::vector<std::string> out;
  const json& a = get_array(v, field);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(get_string(a[i], index(field, i)));
  return out;
}

template <class F>
auto checked(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    throw InvalidArgument((field.empty() ? std::string("document") : field) + ": " + e.what());
  }
}

FiniteGroup group_from_json(const json& doc, const std::string& field) {
  std::string format = get_string(member(doc, field, "format"), join(field, "format"));
  std::string label;
  if (doc.contains("label")) label = get_string(doc["label"], join(field, "label"));
  if (format == "catalog") {
    std::string name = get_string(member(doc, field, "name"), join(field, "name"));
    FiniteGroup g = [&] {
      try {
        return catalog::group(name);
      } catch (const ParseError& e) {
        fail(join(field, "name"), e.what());
      }
    }();
    return label.empty() ? g : g.relabeled(label);
  }
  if (format == "table") {
    std::size_t order = get_count(member(doc, field, "order"), join(field, "order"));
    const std::string tf = join(field, "table");
    const json& rows = get_array(member(doc, field, "table"), tf);
    if (rows.size() != order) fail(tf, "expected " + std::to_string(order) + " rows");
    std::vector<Element> table;
    for (std::size_t i = 0; i < order; ++i) {
      const json& row = get_array(rows[i], index(tf, i));
      if (row.size() != order) fail(index(tf, i), "expected " + std::to_string(order) + " entries");
      for (std::size_t j = 0; j < order; ++j) {
        std::size_t x = get_count(row[j], index(index(tf, i), j));
        if (x >= order) fail(index(index(tf, i), j), "entry out of range");
        table.push_back(static_cast<Element>(x));
      }
    }
    std::vector<std::string> names;
    if (doc.contains("names")) names = get_names(doc["names"], join(field, "names"));
    return checked(field, [&] { return FiniteGroup(order, std::move(table), std::move(names), label); });
  }
  if (format == "perm") {
    std::size_t degree = get_count(member(doc, field, "degree"), join(field, "degree"));
    const std::string gf = join(field, "generators");
    const json& gens = get_array(member(doc, field, "generators"), gf);
    std::vector<std::vector<std::uint32_t>> images;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const json& img = get_array(gens[i], index(gf, i));
      if (img.size() != degree) fail(index(gf, i), "expected " + std::to_string(degree) + " images");
      std::vector<std::uint32_t> perm;
      for (std::size_t j = 0; j < degree; ++j) {
        std::size_t x = get_count(img[j], index(index(gf, i), j));
        if (x >= degree) fail(index(index(gf, i), j), "image out of range");
        perm.push_back(static_cast<std::uint32_t>(x));
      }
      images.push_back(std::move(perm));
    }
    std::vector<std::string> names;
    if (doc.contains("generator_names")) {
      names = get_names(doc["generator_names"], join(field, "generator_names"));
      if (names.size() != images.size()) fail(join(field, "generator_names"), "one name per generator expected");
    }
    return checked(field, [&] { return FiniteGroup::from_permutations(degree, images, names, label); });
  }
  fail(join(field, "format"), "expected \"catalog\", \"table\" or \"perm\", got \"" + format + "\"");
}

IntMatrix matrix_from_json(const json& v, const std::string& field, std::size_t k) {
  const json& rows = get_array(v, field);
  if (rows.size() != k) fail(field, "expected a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const json& row = get_array(rows[i], index(field, i));
    if (row.size() != k) fail(index(field, i), "expected " + std::to_string(k) + " entries");
    for (std::size_t j = 0; j < k; ++j) m(i, j) = BigInt(static_cast<long>(get_int(row[j], index(index(field, i), j))));
  }
  return m;
}

PLPath path_from_json(const json& v, const std::string& field, const TorusExtension& e) {
  const json& pts = get_array(v, field);
  if (pts.empty()) fail(field, "expected breakpoints");
  std::vector<PLPoint> points;
  std::optional<Element> f;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string pf = index(field, i);
    Rational time = get_rational(member(pts[i], pf, "time"), pf + ".time");
    RationalVector t = get_rational_vector(member(pts[i], pf, "t"), pf + ".t", e.rank());
    Element g = get_element(member(pts[i], pf, "f"), pf + ".f", e.finite());
    if (f && *f != g) fail(pf + ".f", "the F part must be constant along an arc");
    f = g;
    points.push_back({time, std::move(t)});
  }
  return checked(field, [&] { return PLPath(std::move(points), *f); });
}

json rational_json(const Rational& r) { return format_rational(r); }

json vector_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

json group_json(const FiniteGroup& g) {
  json doc;
  doc["format"] = "table";
  doc["order"] = g.order();
  json rows = json::array();
  for (Element a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (Element b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  doc["table"] = std::move(rows);
  json names = json::array();
  for (Element a = 0; a < g.order(); ++a) names.push_back(g.name(a));
  doc["names"] = std::move(names);
  if (!g.label().empty()) doc["label"] = g.label();
  return doc;
}

json path_json(const PLPath& p, const FiniteGroup& f) {
  json a = json::array();
  for (const auto& pt : p.points())
    a.push_back(json{{"time", rational_json(pt.time)}, {"t", vector_json(pt.lift)}, {"f", f.name(p.f())}});
  return a;
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view text) { return group_from_json(parse_document(text), ""); }

TorusExtension parse_extension_spec(std::string_view text) {
  json doc = parse_document(text);
  if (doc.is_object() && doc.contains("format")) {
    std::string format = get_string(doc["format"], "format");
    if (format != "catalog") fail("format", "extension specs accept only \"catalog\" here");
    std::string name = get_string(member(doc, "", "name"), "name");
    try {
      return extension_catalog::extension(name);
    } catch (const Error& e) {
      fail("name", e.what());
    }
  }
  std::size_t k = get_count(member(doc, "", "rank"), "rank");
  FiniteGroup f = group_from_json(member(doc, "", "finite"), "finite");
  std::vector<std::pair<Element, IntMatrix>> images;
  if (doc.contains("action")) {
    const json& act = doc["action"];
    if (!act.is_object()) fail("action", "expected an object mapping element names to matrices");
    for (auto it = act.begin(); it != act.end(); ++it) {
      const std::string af = "action." + it.key();
      auto g = f.find(it.key());
      if (!g) fail(af, "unknown element \"" + it.key() + "\"");
      images.emplace_back(*g, matrix_from_json(it.value(), af, k));
    }
  }
  std::vector<std::pair<RationalVector, Element>> quotient;
  if (doc.contains("quotient")) {
    const json& q = get_array(doc["quotient"], "quotient");
    for (std::size_t i = 0; i < q.size(); ++i) {
      const std::string qf = index("quotient", i);
      RationalVector t = get_rational_vector(member(q[i], qf, "t"), qf + ".t", k);
      Element g = get_element(member(q[i], qf, "f"), qf + ".f", f);
      quotient.emplace_back(std::move(t), g);
    }
  }
  std::string label;
  if (doc.contains("label")) label = get_string(doc["label"], "label");
  return checked("", [&] {
    return TorusExtension::from_generator_action(k, std::move(f), images, std::move(quotient), label);
  });
}

PatchCocycle parse_cocycle_spec(std::string_view text, const TorusExtension& e) {
  json doc = parse_document(text);
  if (!doc.is_object()) fail("", "expected an object");
  std::string construction = "arcs";
  if (doc.contains("construction")) construction = get_string(doc["construction"], "construction");
  const FiniteGroup& f = e.finite();
  if (construction == "arcs") {
    return {path_from_json(member(doc, "", "a12"), "a12", e), path_from_json(member(doc, "", "a13"), "a13", e),
            path_from_json(member(doc, "", "a23"), "a23", e)};
  }
  if (construction == "alpha") {
    Element p = get_element(member(doc, "", "p"), "p", f);
    Element q = get_element(member(doc, "", "q"), "q", f);
    CircleData circle;
    for (const auto& [key, dest] : {std::pair{"u", &circle.u}, std::pair{"v", &circle.v}}) {
      const json& a = get_array(member(doc, "", key), key);
      if (a.size() != e.rank()) fail(key, "expected " + std::to_string(e.rank()) + " entries");
      for (std::size_t i = 0; i < a.size(); ++i) dest->push_back(BigInt(static_cast<long>(get_int(a[i], index(key, i)))));
    }
    if (doc.contains("end")) circle.end = get_rational(doc["end"], "end");
    return checked("", [&] { return build_alpha_cocycle(e, p, q, circle); });
  }
  if (construction == "qx") {
    Element q = get_element(member(doc, "", "q"), "q", f);
    PLPath x = path_from_json(member(doc, "", "x"), "x", e);
    return checked("", [&] { return build_qx_cocycle(e, q, x).cocycle; });
  }
  fail("construction", "expected \"arcs\", \"alpha\" or \"qx\", got \"" + construction + "\"");
}

std::string group_spec(const FiniteGroup& g) { return group_json(g).dump(2); }

std::string extension_spec(const TorusExtension& e) {
  json doc;
  doc["rank"] = e.rank();
  doc["finite"] = group_json(e.finite());
  json act = json::object();
  for (Element g = 0; g < e.finite().order(); ++g) {
    json rows = json::array();
    const IntMatrix& m = e.action(g);
    for (std::size_t i = 0; i < e.rank(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < e.rank(); ++j) row.push_back(m(i, j).get_si());
      rows.push_back(std::move(row));
    }
    act[e.finite().name(g)] = std::move(rows);
  }
  doc["action"] = std::move(act);
  json q = json::array();
  for (const auto& [t, g] : e.quotient_generators()) q.push_back(json{{"t", vector_json(t)}, {"f", e.finite().name(g)}});
  doc["quotient"] = std::move(q);
  if (!e.label().empty()) doc["label"] = e.label();
  return doc.dump(2);
}

std::string cocycle_spec(const PatchCocycle& c, const TorusExtension& e) {
  json doc;
  doc["a12"] = path_json(c.a12, e.finite());
  doc["a13"] = path_json(c.a13, e.finite());
  doc["a23"] = path_json(c.a23, e.finite());
  return doc.dump(2);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace commtop
