#include "gon/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "gon/error.hpp"
#include "json.hpp"

namespace gon {
namespace {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kMaxDim = 8;

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InvalidInput(path + ": " + what); }

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string field(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

Rational read_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  }
}

Integer read_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (!j.is_string()) fail(path, "expected an integer");
  try {
    return parse_integer(j.get<std::string>());
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  }
}

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(field(path, key), "missing");
  return *it;
}

void require_array(const Json& j, std::size_t size, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != size) fail(path, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
}

QVector read_vector(const Json& j, std::size_t dim, const std::string& path) {
  require_array(j, dim, path);
  QVector v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(read_rational(j[i], at(path, i)));
  return v;
}

ZVector read_int_vector(const Json& j, std::size_t dim, const std::string& path) {
  require_array(j, dim, path);
  ZVector v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(read_integer(j[i], at(path, i)));
  return v;
}

QMatrix read_matrix(const Json& j, std::size_t dim, const std::string& path) {
  require_array(j, dim, path);
  QMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const QVector row = read_vector(j[r], dim, at(path, r));
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = row[c];
  }
  return m;
}

QMatrix read_form(const Json& j, std::size_t dim, const std::string& path) {
  QMatrix m = read_matrix(j, dim, path);
  if (!is_symmetric(m)) fail(path, "form is not symmetric");
  if (!is_positive_definite(m)) fail(path, "form is not positive definite");
  return m;
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> known, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) fail(field(path, key), "unknown field");
  }
}

Json write_rational(const Rational& q) { return to_string(q); }

Json write_vector(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(write_rational(x));
  return out;
}

Json write_matrix(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(write_vector(m.row(r)));
  return out;
}

Json write_int_vector(const ZVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

Lattice Instance::lattice() const { return Lattice(lattice_basis); }

InnerProductSpace Instance::space() const {
  if (const auto* e = std::get_if<EllipsoidBody>(&body); e && e->form) return InnerProductSpace(*e->form);
  return form ? InnerProductSpace(*form) : InnerProductSpace::euclidean(dim);
}

std::vector<Ball> Instance::balls() const {
  const InnerProductSpace s = space();
  std::vector<Ball> out;
  if (const auto* e = std::get_if<EllipsoidBody>(&body)) {
    out.emplace_back(s, e->center, e->radius_sq ? *e->radius_sq : Rational(1));
  } else {
    for (const auto& sp : std::get<std::vector<SphereSpec>>(body)) out.emplace_back(s, sp.center, sp.radius * sp.radius);
  }
  return out;
}

SpherePack Instance::pack() const {
  const auto* spheres = std::get_if<std::vector<SphereSpec>>(&body);
  if (!spheres) throw InvalidInput("body: expected spheres");
  std::vector<QVector> centers;
  std::vector<Rational> radii;
  for (const auto& s : *spheres) {
    centers.push_back(s.center);
    radii.push_back(s.radius);
  }
  return SpherePack(space(), lattice(), centers, radii);
}

Instance parse_instance(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("json: ") + e.what());
  }
  if (!root.is_object()) fail("json", "top level must be an object");
  reject_unknown(root, {"dim", "lattice_basis", "form", "body", "q_override", "flag"}, "");

  Instance inst;
  const Json& dim = require(root, "dim", "");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) fail("dim", "expected a positive integer");
  inst.dim = dim.get<std::size_t>();
  if (inst.dim > kMaxDim) fail("dim", "at most " + std::to_string(kMaxDim) + " is supported");
  const std::size_t d = inst.dim;

  inst.lattice_basis = read_matrix(require(root, "lattice_basis", ""), d, "lattice_basis");
  if (determinant(inst.lattice_basis) == 0) fail("lattice_basis", "basis is singular");
  if (root.contains("form")) inst.form = read_form(root["form"], d, "form");

  const Json& body = require(root, "body", "");
  if (!body.is_object() || body.size() != 1) fail("body", "expected exactly one of \"ellipsoid\" or \"spheres\"");
  if (body.contains("ellipsoid")) {
    const Json& e = body["ellipsoid"];
    const std::string path = "body.ellipsoid";
    if (!e.is_object()) fail(path, "expected an object");
    reject_unknown(e, {"center", "radius_sq", "form"}, path);
    EllipsoidBody eb;
    eb.center = read_vector(require(e, "center", path), d, field(path, "center"));
    if (e.contains("radius_sq") == e.contains("form")) fail(path, "expected exactly one of radius_sq or form");
    if (e.contains("radius_sq")) {
      eb.radius_sq = read_rational(e["radius_sq"], field(path, "radius_sq"));
      if (*eb.radius_sq < 0) fail(field(path, "radius_sq"), "must be non-negative");
    } else {
      if (inst.form) fail(field(path, "form"), "conflicts with the top-level form");
      eb.form = read_form(e["form"], d, field(path, "form"));
    }
    inst.body = std::move(eb);
  } else if (body.contains("spheres")) {
    const Json& s = body["spheres"];
    const std::string path = "body.spheres";
    if (!s.is_array() || s.empty()) fail(path, "expected a nonempty array");
    std::vector<SphereSpec> spheres;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string p = at(path, i);
      if (!s[i].is_object()) fail(p, "expected an object");
      reject_unknown(s[i], {"center", "radius"}, p);
      SphereSpec sp;
      sp.center = read_vector(require(s[i], "center", p), d, field(p, "center"));
      sp.radius = read_rational(require(s[i], "radius", p), field(p, "radius"));
      if (sp.radius <= 0) fail(field(p, "radius"), "must be positive");
      spheres.push_back(std::move(sp));
    }
    inst.body = std::move(spheres);
  } else {
    fail("body", "expected exactly one of \"ellipsoid\" or \"spheres\"");
  }

  if (root.contains("q_override")) {
    const Json& q = root["q_override"];
    if (!q.is_array() || (q.size() != d && q.size() != d + 1)) fail("q_override", "expected d or d + 1 integers");
    std::vector<Integer> qs;
    for (std::size_t i = 0; i < q.size(); ++i) {
      qs.push_back(read_integer(q[i], at("q_override", i)));
      if (qs.back() < 1) fail(at("q_override", i), "must be at least 1");
      if (i > 0 && qs[i] > qs[i - 1]) fail(at("q_override", i), "q must be non-increasing");
    }
    inst.q_override = std::move(qs);
  }
  if (root.contains("flag")) {
    const Json& f = root["flag"];
    require_array(f, d, "flag");
    std::vector<ZVector> flag;
    for (std::size_t i = 0; i < d; ++i) flag.push_back(read_int_vector(f[i], d, at("flag", i)));
    ZMatrix e(d, d);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) e(r, c) = flag[c][r];
    const Integer det = determinant(e);
    if (det != 1 && det != -1) fail("flag", "vectors do not form a lattice basis");
    inst.flag = std::move(flag);
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("input: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string serialize_instance(const Instance& inst) {
  Json root;
  root["dim"] = inst.dim;
  root["lattice_basis"] = write_matrix(inst.lattice_basis);
  if (inst.form) root["form"] = write_matrix(*inst.form);
  Json body;
  if (const auto* e = std::get_if<EllipsoidBody>(&inst.body)) {
    Json ej;
    ej["center"] = write_vector(e->center);
    if (e->radius_sq) ej["radius_sq"] = write_rational(*e->radius_sq);
    if (e->form) ej["form"] = write_matrix(*e->form);
    body["ellipsoid"] = ej;
  } else {
    Json arr = Json::array();
    for (const auto& s : std::get<std::vector<SphereSpec>>(inst.body)) {
      Json sj;
      sj["center"] = write_vector(s.center);
      sj["radius"] = write_rational(s.radius);
      arr.push_back(sj);
    }
    body["spheres"] = arr;
  }
  root["body"] = body;
  if (inst.q_override) root["q_override"] = write_int_vector(*inst.q_override);
  if (inst.flag) {
    Json arr = Json::array();
    for (const auto& v : *inst.flag) arr.push_back(write_int_vector(v));
    root["flag"] = arr;
  }
  return root.dump(2) + "\n";
}

}  // namespace gon
