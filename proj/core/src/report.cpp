#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "gon/error.hpp"
#include "gon/reduction.hpp"

namespace gon::io {
namespace {

const Ball& single_ball(const Instance& inst, std::vector<Ball>& storage) {
  if (!inst.is_ellipsoid()) throw InvalidInput("body: this command needs an ellipsoid body");
  storage = inst.balls();
  return storage.front();
}

Json error_report(const char* kind, const std::exception& e) {
  Json j;
  j["error"] = {{"kind", kind}, {"message", e.what()}};
  return j;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        out << pad << key << ": " << scalar_text(value) << "\n";
      } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar)) {
        out << pad << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar_text(value[i]);
        out << "]\n";
      } else {
        out << pad << key << ":\n";
        render(value, indent + 1, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (is_scalar(item)) {
        out << pad << "- " << scalar_text(item) << "\n";
      } else if (item.is_array() && std::all_of(item.begin(), item.end(), is_scalar)) {
        out << pad << "- [";
        for (std::size_t i = 0; i < item.size(); ++i) out << (i ? ", " : "") << scalar_text(item[i]);
        out << "]\n";
      } else {
        out << pad << "-\n";
        render(item, indent + 1, out);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

Json to_json(const Rational& q) { return gon::to_string(q); }
Json to_json(const Integer& z) { return z.get_str(); }

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const ZVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const LambdaSq& l) { return l.is_infinite() ? Json("inf") : to_json(*l.value); }

Json to_json(const MinimaProfile& m) {
  Json j;
  j["lambda_sq"] = Json::array();
  for (const auto& l : m.lambda_sq) j["lambda_sq"].push_back(to_json(l));
  j["witnesses"] = Json::array();
  for (const auto& w : m.witnesses) j["witnesses"].push_back(to_json(w));
  return j;
}

Json to_json(const BhwReport& r) {
  Json j;
  j["count"] = to_json(r.count);
  j["minima"] = to_json(r.minima);
  j["q"] = to_json(r.q.q);
  j["bound"] = to_json(r.bound);
  j["first_theorem_bound"] = to_json(r.first_theorem_bound);
  j["holds"] = r.holds;
  j["holds_first"] = r.holds_first;
  return j;
}

Json to_json(const LevelTrace& t) {
  Json j;
  j["dim"] = t.dim;
  j["balls"] = t.balls;
  j["q"] = to_json(t.q);
  j["shifts"] = Json::array();
  for (const auto& s : t.shifts) j["shifts"].push_back(to_json(s));
  j["direct_count"] = to_json(t.direct_count);
  j["total"] = to_json(t.total);
  j["bound"] = to_json(t.bound);
  j["passed"] = t.passed();
  j["checks"] = Json::array();
  for (const auto& c : t.checks) {
    Json cj{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    j["checks"].push_back(cj);
  }
  j["residues"] = Json::array();
  for (const auto& r : t.residues) {
    Json rj;
    rj["residue"] = to_json(r.residue);
    rj["slices"] = r.slices;
    rj["sum"] = to_json(r.sum);
    rj["bound"] = to_json(r.bound);
    rj["child"] = r.child ? to_json(*r.child) : Json(nullptr);
    j["residues"].push_back(rj);
  }
  return j;
}

Json to_json(const StrongReport& r) {
  Json j;
  j["total"] = to_json(r.total);
  j["bound"] = to_json(r.bound);
  j["passed"] = r.passed;
  j["trace"] = to_json(r.root);
  return j;
}

Json to_json(const ViaStrongReport& r) {
  Json j;
  j["bhw"] = to_json(r.bhw);
  j["flag"] = Json::array();
  for (const auto& e : r.flag) j["flag"].push_back(to_json(e));
  j["c1_holds"] = r.c1_holds;
  j["count_matches"] = r.count_matches;
  j["passed"] = r.passed;
  j["strong"] = r.strong ? to_json(*r.strong) : Json(nullptr);
  return j;
}

Json to_json(const TranslationResult& r) {
  Json j;
  j["u"] = Json::array();
  for (const auto& u : r.u) j["u"].push_back(to_json(u));
  j["d_sq"] = to_json(r.d_sq);
  j["certified_all_t"] = r.certified_all_t;
  return j;
}

Json to_json(const TranslationReport& r) {
  Json j;
  j["first_row_optimal"] = r.first_row_optimal;
  j["passed"] = r.passed();
  j["pairs"] = Json::array();
  for (const auto& p : r.pairs) {
    Json pj;
    pj["i"] = p.i;
    pj["j"] = p.j;
    pj["d_sq"] = to_json(p.d_sq);
    pj["certified"] = p.certified;
    pj["midpoint_minimal"] = p.midpoint_minimal;
    pj["parallelogram"] = p.parallelogram;
    pj["samples"] = Json::array();
    for (const auto& s : p.samples) {
      pj["samples"].push_back(
          {{"t", to_json(s.t)}, {"dt_sq", to_json(s.dt_sq)}, {"at_least_d", s.at_least_d}, {"separated", s.separated}});
    }
    j["pairs"].push_back(pj);
  }
  return j;
}

Outcome run_count(const Instance& inst) {
  const Lattice lattice = inst.lattice();
  const InnerProductSpace space = inst.space();
  Outcome out;
  Integer total = 0;
  out.report["counts"] = Json::array();
  for (const auto& b : inst.balls()) {
    const Integer c = count_ball(lattice, space, b);
    total += c;
    out.report["counts"].push_back(to_json(c));
  }
  out.report["total"] = to_json(total);
  return out;
}

Outcome run_minima(const Instance& inst) {
  std::vector<Ball> storage;
  const Ball& ball = single_ball(inst, storage);
  const MinimaProfile lat = successive_minima(gram(inst.lattice(), inst.space()));
  Outcome out;
  out.report["lattice_minima"] = to_json(lat);
  out.report["body_minima"] = to_json(body_minima(lat, ball.radius_sq()));
  return out;
}

Outcome run_qvalues(const Instance& inst) {
  std::vector<Ball> storage;
  const Ball& ball = single_ball(inst, storage);
  const MinimaProfile body = body_minima(successive_minima(gram(inst.lattice(), inst.space())), ball.radius_sq());
  const QValues q = q_values(body);
  Outcome out;
  out.report["lambda_sq"] = to_json(body)["lambda_sq"];
  out.report["q"] = to_json(q.q);
  out.report["product"] = to_json(q.product());
  return out;
}

Outcome run_verify_bhw(const Instance& inst, bool via_strong) {
  std::vector<Ball> storage;
  const Ball& ball = single_ball(inst, storage);
  const Lattice lattice = inst.lattice();
  const InnerProductSpace space = inst.space();
  Outcome out;
  bool ok = true;
  if (via_strong) {
    const ViaStrongReport r = verify_theorem1_via_strong(lattice, space, ball);
    out.report = to_json(r);
    ok = r.passed;
  } else {
    const BhwReport r = verify_theorem1(lattice, space, ball);
    out.report = to_json(r);
    ok = r.holds && r.holds_first;
  }
  if (ball.radius_sq() > 0) {
    const MinkowskiTerms m = minkowski_second_terms(lattice, space, ball);
    const bool holds = check_minkowski_second(lattice, space, ball);
    out.report["minkowski"] = {{"volume_ratio", m.volume_ratio}, {"bound", m.bound}, {"holds", holds}};
    ok = ok && holds;
  }
  out.status = ok ? Status::pass : Status::verification_failure;
  return out;
}

Outcome run_translate(const Instance& inst, const std::vector<Rational>& t_samples) {
  for (const auto& t : t_samples) {
    if (t < 1) throw InvalidInput("t-samples: every t must be at least 1");
  }
  const SpherePack pack = inst.pack();
  const TranslationResult result = translate_spheres(pack);
  const TranslationReport report = verify_translation(result, pack, t_samples);
  Outcome out;
  out.report["translation"] = to_json(result);
  out.report["verification"] = to_json(report);
  out.status = report.passed() ? Status::pass : Status::verification_failure;
  return out;
}

Outcome run_verify_strong(const Instance& inst) {
  const Lattice lattice = inst.lattice();
  const InnerProductSpace space = inst.space();
  const std::vector<Ball> balls = inst.balls();
  const std::size_t d = inst.dim;
  const MinimaProfile lat = successive_minima(gram(lattice, space));

  FlagBasis flag = [&] {
    if (!inst.flag) return extend_to_flag_basis(lattice, lat.witnesses);
    ZMatrix e(d, d);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) e(r, c) = (*inst.flag)[c][r];
    return FlagBasis(lattice, e, *inst.flag);
  }();

  std::vector<Integer> q;
  if (inst.q_override) {
    q = *inst.q_override;
  } else {
    Rational largest = 0;
    for (const auto& b : balls) largest = std::max(largest, b.radius_sq());
    q = q_values(body_minima(lat, largest)).q;
  }
  if (q.size() == d) q.push_back(std::min(q.back(), Integer(1)));

  const StrongInstance instance(lattice, space, balls, flag, q);
  const StrongReport r = verify_strong(instance);
  Outcome out;
  out.report["q"] = to_json(q);
  out.report["flag"] = Json::array();
  for (std::size_t i = 0; i < d; ++i) out.report["flag"].push_back(to_json(flag.vector(i)));
  const Json body = to_json(r);
  for (const auto& [key, value] : body.items()) out.report[key] = value;
  out.status = r.passed ? Status::pass : Status::verification_failure;
  return out;
}

Outcome run_oracle_diff(const Instance& inst, std::uint64_t capacity) {
  const Lattice lattice = inst.lattice();
  Outcome out;
  Integer enumerated = 0;
  Integer oracle = 0;
  out.report["balls"] = Json::array();
  for (const auto& b : inst.balls()) {
    const CoefficientBall cb = to_coefficients(lattice, b);
    // The oracle goes first so an oversized box fails before any enumeration.
    const Integer o = oracle_count(cb.gram, cb.center, cb.radius_sq, capacity);
    const Integer e = Enumerator(cb.gram).count(cb.center, cb.radius_sq);
    enumerated += e;
    oracle += o;
    out.report["balls"].push_back({{"enumeration", to_json(e)},
                                   {"oracle", to_json(o)},
                                   {"box_size", to_json(oracle_box_size(cb.gram, cb.center, cb.radius_sq))}});
  }
  out.report["enumeration"] = to_json(enumerated);
  out.report["oracle"] = to_json(oracle);
  out.report["agree"] = enumerated == oracle;
  out.status = enumerated == oracle ? Status::pass : Status::verification_failure;
  return out;
}

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const VerificationFailure& e) {
    return {Status::verification_failure, error_report("verification_failure", e)};
  } catch (const HypothesisViolation& e) {
    return {Status::hypothesis_violation, error_report("hypothesis_violation", e)};
  } catch (const CapacityError& e) {
    return {Status::invalid_input, error_report("capacity", e)};
  } catch (const InvalidInput& e) {
    return {Status::invalid_input, error_report("invalid_input", e)};
  }
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

}  // namespace gon::io
