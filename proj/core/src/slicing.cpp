#include "gon/slicing.hpp"

#include <map>
#include <string>
#include <utility>

#include "gon/error.hpp"
#include "gon/reduction.hpp"

namespace gon {

Slicer::Slicer(const QMatrix& gram) {
  const std::size_t d = gram.rows();
  if (d < 2) throw InvalidInput("slicing needs dimension >= 2");
  ldlt(gram);
  sub_gram_ = leading_block(gram, d - 1);
  QVector g(d - 1);
  for (std::size_t i = 0; i + 1 < d; ++i) g[i] = gram(i, d - 1);
  offset_ = multiply(inverse(sub_gram_), g);
  schur_ = gram(d - 1, d - 1) - dot(g, offset_);
}

Slice Slicer::slice(const Sphere& ball, const Integer& height, std::size_t parent) const {
  const std::size_t d = offset_.size() + 1;
  if (ball.center.size() != d) throw InvalidInput("dimension mismatch: sliced ball");
  const Rational h = Rational(height) - ball.center[d - 1];
  Slice s;
  s.parent = parent;
  s.height = height;
  s.center.resize(d - 1);
  for (std::size_t i = 0; i + 1 < d; ++i) s.center[i] = ball.center[i] - h * offset_[i];
  s.radius_sq = ball.radius_sq - h * h * schur_;
  return s;
}

IntRange Slicer::heights(const Sphere& ball) const {
  return integer_range(ball.center.back(), ball.radius_sq / schur_);
}

Slice slice_ball(const QMatrix& gram, const Sphere& ball, const Integer& height) {
  return Slicer(gram).slice(ball, height);
}

C1Result check_c1(const Enumerator& form, const std::vector<Sphere>& balls, const std::vector<Integer>& q) {
  const std::size_t d = form.dim();
  if (q.size() < d) throw InvalidInput("(C1) needs q_1..q_d");
  const QVector origin(d);
  for (std::size_t j = 0; j < balls.size(); ++j) {
    for (std::size_t i = 1; i <= d; ++i) {
      // q_i l ∈ DS_j  <=>  q_i^2 ||l||^2 <= 4 R_j.
      const Rational bound = 4 * balls[j].radius_sq / (Rational(q[i - 1]) * Rational(q[i - 1]));
      std::optional<ZVector> bad;
      form.for_each(origin, bound, [&](const ZVector& l, const Rational&) {
        if (bad) return;
        for (std::size_t k = i - 1; k < d; ++k) {
          if (l[k] != 0) {
            bad = l;
            return;
          }
        }
      });
      if (bad) return {false, C1Violation{j, i, *bad}};
    }
  }
  return {};
}

C2Result check_c2(const Enumerator& form, const std::vector<Sphere>& balls, const Integer& scale) {
  for (std::size_t j = 0; j < balls.size(); ++j) {
    for (std::size_t k = j + 1; k < balls.size(); ++k) {
      const Rational dist = coset_distance_sq(form, subtract(balls[j].center, balls[k].center), Rational(scale));
      if (!separated(dist, balls[j].radius_sq, balls[k].radius_sq)) return {false, C2Violation{j, k, dist}};
    }
  }
  return {};
}

StrongInstance::StrongInstance(Lattice lattice, InnerProductSpace space, std::vector<Ball> balls, FlagBasis flag,
                               std::vector<Integer> q)
    : lattice_(std::move(lattice)),
      space_(std::move(space)),
      balls_(std::move(balls)),
      flag_(std::move(flag)),
      q_(std::move(q)) {
  const std::size_t d = lattice_.dim();
  if (space_.dim() != d) throw InvalidInput("dimension mismatch: lattice and space");
  if (!(flag_.lattice() == lattice_)) throw InvalidInput("flag basis belongs to a different lattice");
  if (balls_.empty()) throw InvalidInput("strong instance needs at least one ball");
  for (const auto& b : balls_)
    if (!(b.space() == space_)) throw InvalidInput("ball lives in a different inner product space");
  if (q_.size() != d + 1) throw InvalidInput("q must list q_1..q_{d+1}");
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (q_[i] < 1) throw InvalidInput("q values must be positive integers");
    if (i > 0 && q_[i] > q_[i - 1]) throw InvalidInput("q values must be non-increasing");
  }
}

QMatrix StrongInstance::flag_gram() const {
  const QMatrix e = to_rational(flag_.coefficients());
  return multiply(transpose(e), multiply(gram(lattice_, space_), e));
}

std::vector<Sphere> StrongInstance::flag_spheres() const {
  const QMatrix e_inv = to_rational(unimodular_inverse(flag_.coefficients()));
  std::vector<Sphere> out;
  for (const auto& b : balls_) out.push_back({multiply(e_inv, lattice_.to_coefficients(b.center())), b.radius_sq()});
  return out;
}

C1Result check_c1(const StrongInstance& instance) {
  return check_c1(Enumerator(instance.flag_gram()), instance.flag_spheres(), instance.q());
}

C2Result check_c2(const StrongInstance& instance, const Integer& scale) {
  return check_c2(Enumerator(instance.flag_gram()), instance.flag_spheres(), scale);
}

bool LevelTrace::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  for (const auto& r : residues)
    if (!r.child || !r.child->passed()) return false;
  return true;
}

std::size_t LevelTrace::node_count() const {
  std::size_t n = 1;
  for (const auto& r : residues)
    if (r.child) n += r.child->node_count();
  return n;
}

std::optional<ProofCheck> LevelTrace::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c;
  for (const auto& r : residues) {
    if (!r.child) return ProofCheck{"residue " + to_string(r.residue) + ": missing sub-level", false, ""};
    if (auto f = r.child->first_failure()) return f;
  }
  return std::nullopt;
}

namespace {

Integer product(const std::vector<Integer>& q, std::size_t count) {
  Integer p = 1;
  for (std::size_t i = 0; i < count; ++i) p *= q[i];
  return p;
}

std::string describe(const C1Result& r) {
  if (r.holds) return "";
  const auto& v = *r.violation;
  std::string s = "ball " + std::to_string(v.ball + 1) + ", i = " + std::to_string(v.index) + ", lattice vector (";
  for (std::size_t k = 0; k < v.lattice_vector.size(); ++k) s += (k ? "," : "") + to_string(v.lattice_vector[k]);
  return s + ")";
}

std::string describe(const C2Result& r) {
  if (r.holds) return "";
  const auto& v = *r.violation;
  return "balls " + std::to_string(v.first + 1) + " and " + std::to_string(v.second + 1) +
         ", coset distance^2 " + to_string(v.dist_sq);
}

class Replay {
 public:
  LevelTrace run(const QMatrix& gram, std::vector<Sphere> balls, const std::vector<Integer>& q) const {
    const std::size_t d = gram.rows();
    LevelTrace trace;
    trace.dim = d;
    trace.balls = balls.size();
    trace.q = q;
    trace.bound = product(q, d);
    const Enumerator form(gram);
    auto check = [&](std::string name, bool ok, std::string detail = {}) {
      trace.checks.push_back({std::move(name), ok, std::move(detail)});
      return ok;
    };

    const C1Result c1 = check_c1(form, balls, q);
    check("(C1)", c1.holds, describe(c1));
    const C2Result c2 = check_c2(form, balls, q[d]);
    check("(C2) at scale q_{d+1} = " + to_string(q[d]), c2.holds, describe(c2));

    trace.direct_count = count_all(form, balls);
    if (d == 1) {
      trace.total = trace.direct_count;
      check("base: sum of counts <= q_1", trace.total <= q[0],
            to_string(trace.total) + " <= " + to_string(q[0]));
      return trace;
    }
    if (!c2.holds) return trace;  // translation has no hypothesis to work with

    // Step 1: translate by q_{d+1}Λ so that (C2) holds at every t >= q_{d+1}.
    const Rational step(q[d]);
    const CoefficientTranslation moved = translate_spheres(form, balls, step);
    for (std::size_t j = 0; j < balls.size(); ++j) {
      trace.shifts.push_back(to_integer(subtract(moved.u[j], balls[j].center)));
      balls[j].center = moved.u[j];
    }
    const Integer moved_count = count_all(form, balls);
    check("translation: lattice-point total invariant", moved_count == trace.direct_count,
          to_string(moved_count) + " vs " + to_string(trace.direct_count));
    check("translation: (C1) invariant", check_c1(form, balls, q).holds);
    check("translation: all-t certificate", moved.certified_all_t);
    const C2Result strengthened = check_c2(form, balls, q[d - 1]);
    check("translation: (C2) at scale q_d = " + to_string(q[d - 1]), strengthened.holds, describe(strengthened));

    // Step 2: slice along e_d and group by height mod q_d.
    const Slicer slicer(gram);
    const Enumerator sub_form(slicer.sub_gram());
    std::map<Integer, std::vector<Sphere>> classes;
    bool partition_ok = true;
    bool inclusion_ok = true;
    for (std::size_t j = 0; j < balls.size(); ++j) {
      const IntRange range = slicer.heights(balls[j]);
      Integer sliced = 0;
      for (Integer m = range.lo; m <= range.hi; ++m) {
        const Slice s = slicer.slice(balls[j], m, j);
        if (s.empty()) {
          partition_ok = false;
          continue;
        }
        if (s.radius_sq > balls[j].radius_sq) inclusion_ok = false;
        sliced += sub_form.count(s.center, s.radius_sq);
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), m.get_mpz_t(), q[d - 1].get_mpz_t());
        classes[r].push_back({s.center, s.radius_sq});
      }
      if (sliced != form.count(balls[j].center, balls[j].radius_sq)) partition_ok = false;
    }
    check("slicing: sum over heights equals ball count", partition_ok);
    check("slicing: DS_{j,m} within DS_j", inclusion_ok);

    // Step 3: each residue class is a (d-1)-instance with q_1..q_d.
    const std::vector<Integer> sub_q(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(d));
    const Integer residue_bound = product(q, d - 1);
    trace.total = 0;
    bool residues_ok = true;
    for (auto& [residue, slices] : classes) {
      ResidueTrace rt;
      rt.residue = residue;
      rt.slices = slices.size();
      rt.bound = residue_bound;
      auto child = std::make_shared<LevelTrace>(run(slicer.sub_gram(), std::move(slices), sub_q));
      rt.sum = child->total;
      rt.child = std::move(child);
      if (rt.sum > rt.bound) residues_ok = false;
      trace.total += rt.sum;
      trace.residues.push_back(std::move(rt));
    }
    check("residue sums <= prod_{i<d} q_i", residues_ok);
    check("sum over residues equals direct count", trace.total == trace.direct_count,
          to_string(trace.total) + " vs " + to_string(trace.direct_count));
    check("total <= prod_{i<=d} q_i", trace.total <= trace.bound,
          to_string(trace.total) + " <= " + to_string(trace.bound));
    return trace;
  }

 private:
  static Integer count_all(const Enumerator& form, const std::vector<Sphere>& balls) {
    Integer n = 0;
    for (const auto& b : balls) n += form.count(b.center, b.radius_sq);
    return n;
  }
};

}  // namespace

StrongReport verify_strong(const StrongInstance& instance) {
  const QMatrix g = instance.flag_gram();
  const std::vector<Sphere> balls = instance.flag_spheres();
  const Enumerator form(g);
  const C1Result c1 = check_c1(form, balls, instance.q());
  if (!c1.holds) throw HypothesisViolation("(C1) fails: " + describe(c1));
  const C2Result c2 = check_c2(form, balls, instance.q().back());
  if (!c2.holds) throw HypothesisViolation("(C2) fails: " + describe(c2));

  StrongReport report;
  report.root = Replay().run(g, balls, instance.q());
  report.total = report.root.total;
  report.bound = report.root.bound;
  report.passed = report.root.passed();
  return report;
}

ViaStrongReport verify_theorem1_via_strong(const Lattice& lattice, const InnerProductSpace& space, const Ball& ball) {
  ViaStrongReport out;
  out.bhw = verify_theorem1(lattice, space, ball);
  const FlagBasis flag = extend_to_flag_basis(lattice, out.bhw.minima.witnesses);
  for (std::size_t i = 0; i < flag.dim(); ++i) out.flag.push_back(flag.vector(i));
  std::vector<Integer> q = out.bhw.q.q;
  q.push_back(1);
  const StrongInstance instance(lattice, space, {ball}, flag, q);
  out.c1_holds = check_c1(instance).holds;
  // q_i > 2 / lambda_i forces (C1); a miss is reported as a failure.
  if (!out.c1_holds) return out;
  out.strong = verify_strong(instance);
  out.count_matches = out.strong->total == out.bhw.count;
  out.passed = out.bhw.holds && out.strong->passed && out.count_matches && out.strong->bound == out.bhw.bound;
  return out;
}

}  // namespace gon
