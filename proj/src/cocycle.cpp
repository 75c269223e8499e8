#include "commtop/cocycle.hpp"

#include "commtop/error.hpp"

#include <algorithm>
#include <set>

namespace commtop {

namespace {

RationalVector add(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector act(const TorusExtension& e, Element f, const RationalVector& t) {
  return e.action(f).apply(std::span<const Rational>(t));
}

bool integral(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
}

void check_path(const TorusExtension& e, const PLPath& a, const char* what) {
  if (a.rank() != e.rank())
    throw InvalidArgument(std::string(what) + " has rank " + std::to_string(a.rank()) + ", extension rank is " +
                          std::to_string(e.rank()));
  if (a.f() >= e.finite().order()) throw InvalidArgument(std::string(what) + " has an unknown F label");
}

const Rational kZero = 0;
const Rational kOne = 1;

}  // namespace

std::string vector_to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_rational(v[i]);
  }
  return s + ")";
}

PLPath::PLPath(std::vector<PLPoint> points, Element f) : points_(std::move(points)), f_(f) {
  if (points_.size() < 2) throw InvalidArgument("a PL path needs breakpoints at 0 and 1");
  if (points_.front().time != 0 || points_.back().time != 1)
    throw InvalidArgument("PL path times must start at 0 and end at 1");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1].time < points_[i].time)) throw InvalidArgument("PL path times must increase strictly");
    if (points_[i].lift.size() != points_[0].lift.size()) throw InvalidArgument("PL path lifts differ in length");
  }
}

PLPath PLPath::constant(RationalVector lift, Element f) {
  return PLPath({{0, lift}, {1, lift}}, f);
}

PLPath PLPath::linear(RationalVector from, RationalVector to, Element f) {
  return PLPath({{0, std::move(from)}, {1, std::move(to)}}, f);
}

RationalVector PLPath::lift_at(const Rational& time) const {
  if (time < 0 || time > 1) throw InvalidArgument("PL path parameter outside [0,1]");
  auto it = std::lower_bound(points_.begin(), points_.end(), time,
                             [](const PLPoint& p, const Rational& x) { return p.time < x; });
  if (it->time == time) return it->lift;
  const PLPoint& hi = *it;
  const PLPoint& lo = *(it - 1);
  Rational s = (time - lo.time) / (hi.time - lo.time);
  RationalVector out(lo.lift.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lo.lift[i] + s * (hi.lift[i] - lo.lift[i]);
  return out;
}

bool PLPath::is_closed() const { return integral(sub(end(), start())); }

PLPath PLPath::reversed() const {
  std::vector<PLPoint> pts;
  for (auto it = points_.rbegin(); it != points_.rend(); ++it) pts.push_back({1 - it->time, it->lift});
  return PLPath(std::move(pts), f_);
}

PLPath PLPath::translated(const RationalVector& shift) const {
  std::vector<PLPoint> pts = points_;
  for (auto& p : pts) p.lift = add(p.lift, shift);
  return PLPath(std::move(pts), f_);
}

PLPath path_multiply(const TorusExtension& e, const PLPath& a, const PLPath& b) {
  check_path(e, a, "left factor");
  check_path(e, b, "right factor");
  std::set<Rational> times;
  for (const auto& p : a.points()) times.insert(p.time);
  for (const auto& p : b.points()) times.insert(p.time);
  std::vector<PLPoint> pts;
  for (const auto& t : times) pts.push_back({t, add(a.lift_at(t), act(e, a.f(), b.lift_at(t)))});
  return PLPath(std::move(pts), e.finite().mul(a.f(), b.f()));
}

PLPath path_inverse(const TorusExtension& e, const PLPath& a) {
  check_path(e, a, "path");
  const Element finv = e.finite().inv(a.f());
  std::vector<PLPoint> pts;
  for (const auto& p : a.points()) {
    RationalVector t = act(e, finv, p.lift);
    for (auto& x : t) x = -x;
    pts.push_back({p.time, std::move(t)});
  }
  return PLPath(std::move(pts), finv);
}

ExtElement path_value(const TorusExtension& e, const PLPath& a, const Rational& time) {
  check_path(e, a, "path");
  return e.element(a.lift_at(time), a.f());
}

std::string CocycleDiagnostics::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.condition + " fails at " + c.location + ": " + c.detail;
  return {};
}

CocycleDiagnostics validate(const TorusExtension& e, const PatchCocycle& c) {
  CocycleDiagnostics out;
  const FiniteGroup& f = e.finite();
  for (const auto& [time, location] : {std::pair{kZero, "front"}, std::pair{kOne, "back"}}) {
    ExtElement v12 = path_value(e, c.a12, time), v13 = path_value(e, c.a13, time), v23 = path_value(e, c.a23, time);
    ExtElement product = e.multiply(v12, v23);
    CocycleCheck eq{"cocycle equation a12*a23 = a13", location, product == v13, ""};
    if (!eq.pass) eq.detail = "a12*a23 = " + to_string(product, f) + ", a13 = " + to_string(v13, f);
    out.checks.push_back(eq);
    auto commute = [&](const char* name, const ExtElement& x, const ExtElement& y) {
      ExtElement k = e.commutator(x, y);
      CocycleCheck check{name, location, k == e.identity(), ""};
      if (!check.pass) check.detail = "commutator = " + to_string(k, f);
      out.checks.push_back(check);
    };
    commute("a12 commutes with a13", v12, v13);
    commute("a12 commutes with a23", v12, v23);
    commute("a13 commutes with a23", v13, v23);
  }
  out.ok = std::all_of(out.checks.begin(), out.checks.end(), [](const CocycleCheck& k) { return k.pass; });
  return out;
}

PatchCocycle invert(const TorusExtension& e, const PatchCocycle& c) {
  auto diag = validate(e, c);
  if (!diag.ok) throw InvalidArgument("invert needs a commutative cocycle: " + diag.first_failure());
  return {path_inverse(e, c.a12), path_inverse(e, c.a13), path_inverse(e, c.a23)};
}

ClutchResult clutch(const TorusExtension& e, const PatchCocycle& c) {
  const FiniteGroup& f = e.finite();
  PLPath a = path_multiply(e, c.a12, c.a23);
  const PLPath& b = c.a13;
  check_path(e, b, "a13");
  for (const auto& [time, location] : {std::pair{kZero, "front"}, std::pair{kOne, "back"}}) {
    ExtElement va = path_value(e, a, time), vb = path_value(e, b, time);
    if (!(va == vb))
      throw InvariantViolation(std::string("non-closing loop at ") + location + ": a12*a23 = " + to_string(va, f) +
                               ", a13 = " + to_string(vb, f));
  }
  // The closing condition at one point already forces the F labels to agree modulo Z.
  const RationalVector d1 = sub(a.end(), b.end());
  const RationalVector d0 = sub(a.start(), b.start());

  std::vector<PLPoint> pts;
  for (const auto& p : a.points()) pts.push_back({p.time / 2, p.lift});
  const auto& bp = b.points();
  for (std::size_t i = bp.size() - 1; i-- > 0;) pts.push_back({1 - bp[i].time / 2, add(bp[i].lift, d1)});
  ClutchResult out{PLPath(std::move(pts), a.f()), true, sub(d1, d0), ""};

  if (a.f() != kIdentity) {
    // Move the loop into the identity component through Z if possible.
    const ExtElement* shift = nullptr;
    for (const auto& z : e.central_subgroup())
      if (f.mul(a.f(), z.f) == kIdentity) {
        shift = &z;
        break;
      }
    if (shift) {
      std::vector<PLPoint> moved = out.loop.points();
      RationalVector offset = act(e, a.f(), shift->t);
      for (auto& p : moved) p.lift = add(p.lift, offset);
      out.loop = PLPath(std::move(moved), kIdentity);
    } else {
      out.identity_component = false;
      out.winding.clear();
      out.marker = "not in identity-component loop";
    }
  }
  return out;
}

QxResult build_qx_cocycle(const TorusExtension& e, Element q, const PLLoop& x) {
  check_path(e, x, "loop x");
  if (q >= e.finite().order()) throw InvalidArgument("q is not an element of F");
  if (x.f() != kIdentity) throw InvalidArgument("loop x must lie in the torus");
  if (!integral(x.start())) throw InvalidArgument("loop x is not based at the identity");
  if (!x.is_closed()) throw InvalidArgument("loop x does not close up");

  bool affine = true;
  const PLPath qbar = PLPath::constant(RationalVector(e.rank(), 0), q);
  const PLPath one = PLPath::constant(RationalVector(e.rank(), 0));
  for (const Rational& time : {kZero, kOne}) {
    ExtElement h = path_value(e, x, time), qv = e.lift(q);
    ExtElement g1 = e.multiply(e.inverse(h), qv), g2 = e.inverse(qv);
    if (!(e.commutator(g1, g2) == e.identity())) affine = false;
  }
  PLPath xinv = path_inverse(e, x), qinv = path_inverse(e, qbar);
  PatchCocycle c{path_multiply(e, path_multiply(e, xinv, qinv), path_multiply(e, x, qbar)), one, one};
  ClutchResult r = clutch(e, c);
  QxResult out{affine, std::move(c), std::move(r)};
  return out;
}

PatchCocycle build_alpha_cocycle(const TorusExtension& e, Element p, Element q, const CircleData& circle) {
  if (circle.u.size() != e.rank() || circle.v.size() != e.rank())
    throw InvalidArgument("circle direction vectors must have length " + std::to_string(e.rank()));
  if (p >= e.finite().order() || q >= e.finite().order()) throw InvalidArgument("p, q must be elements of F");
  RationalVector xend(e.rank()), yend(e.rank()), zero(e.rank(), 0);
  for (std::size_t i = 0; i < e.rank(); ++i) {
    xend[i] = circle.end * Rational(circle.u[i]);
    yend[i] = circle.end * Rational(circle.v[i]);
  }
  PLPath px = path_multiply(e, PLPath::constant(zero, p), PLPath::linear(zero, xend));
  PLPath qy = path_multiply(e, PLPath::constant(zero, q), PLPath::linear(zero, yend));
  const FiniteGroup& f = e.finite();
  for (const auto& [time, label] : {std::pair{kZero, "x(0)"}, std::pair{kOne, "x(end)"}}) {
    ExtElement k = e.commutator(path_value(e, px, time), path_value(e, qy, time));
    if (!(k == e.identity()))
      throw InvalidArgument("endpoint commutation fails: [p " + std::string(label) + ", q " +
                            (time == 0 ? "y(0)" : "y(end)") + "] = " + to_string(k, f));
  }
  return {path_multiply(e, px, qy), px, path_inverse(e, qy)};
}

std::string to_string(const PLPath& path, const FiniteGroup& f) {
  std::string s = f.name(path.f()) + ":";
  for (const auto& p : path.points()) s += " " + format_rational(p.time) + "->" + vector_to_string(p.lift);
  return s;
}

}  // namespace commtop
