#include "toricfold/singularity.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace toricfold {

std::string to_string(TerminalMethod m) {
  switch (m) {
    case TerminalMethod::Box: return "box";
    case TerminalMethod::Fiber: return "fiber";
    case TerminalMethod::Skipped: return "skipped";
  }
  return "unknown";
}

namespace {

using C = Checked64;

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// x in conv(0, rays) by exact LP.
bool in_hull_with_origin(const std::vector<IntVector>& rays, const IntVector& x) {
  const std::size_t r = rays.size();
  std::vector<LinearConstraint> cs;
  for (std::size_t i = 0; i < r; ++i) {
    LinearConstraint c{std::vector<Rational>(r, Rational(0)), Relation::GreaterEqual, 0};
    c.coeffs[i] = 1;
    cs.push_back(std::move(c));
  }
  cs.push_back({std::vector<Rational>(r, Rational(1)), Relation::LessEqual, 1});
  for (std::size_t k = 0; k < x.size(); ++k) {
    LinearConstraint c{std::vector<Rational>(r), Relation::Equal, Rational(x[k])};
    for (std::size_t i = 0; i < r; ++i) c.coeffs[i] = rays[i][k];
    cs.push_back(std::move(c));
  }
  return rational_feasible(r, cs).has_value();
}

std::int64_t to_i64(const Integer& x) {
  if (!x.fits_slong_p()) throw OverflowError("integer does not fit in 64 bits");
  return x.get_si();
}

// Vertex of the arrangement {<m, x> in Z}, stored as (px, py) / den with
// 0 <= px, py < den and the fraction reduced.
struct Vertex {
  std::int64_t px, py, den;
  auto operator<=>(const Vertex&) const = default;
};

Vertex normalize_vertex(std::int64_t px, std::int64_t py, std::int64_t den) {
  px = (C(px) - floor_div<C>(px, den) * C(den)).value();
  py = (C(py) - floor_div<C>(py, den) * C(den)).value();
  std::int64_t g = gcd_of<C>(gcd_of<C>(px, py), den).value();
  return {px / g, py / g, den / g};
}

// Points of {x : <a, x>, <b, x> in Z} modulo Z^2. With U M V = S the set is
// V * diag(1/s1, 1/s2) Z^2.
void pair_vertices(const Vec2& a, const Vec2& b, std::set<Vertex>& out) {
  Matrix<C> m = Matrix<C>::from_rows({{a[0], a[1]}, {b[0], b[1]}});
  auto f = smith_normal_form(m);
  const std::int64_t s1 = f.S(0, 0).value(), s2 = f.S(1, 1).value();
  if (s1 == 0 || s2 == 0) return;
  const std::int64_t ratio = s2 / s1;
  for (std::int64_t i = 0; i < s1; ++i)
    for (std::int64_t j = 0; j < s2; ++j) {
      C t0 = C(i) * C(ratio), t1 = C(j);
      C px = f.V(0, 0) * t0 + f.V(0, 1) * t1;
      C py = f.V(1, 0) * t0 + f.V(1, 1) * t1;
      out.insert(normalize_vertex(px.value(), py.value(), s2));
    }
}

}  // namespace

std::optional<std::vector<IntVector>> box_offenders(const std::vector<IntVector>& rays,
                                                    const std::vector<IntVector>& vertex_list,
                                                    const std::vector<IntVector>& facets,
                                                    const std::optional<IntVector>& certificate,
                                                    std::size_t point_limit) {
  if (rays.empty()) return std::vector<IntVector>{};
  const std::size_t n = rays.front().size();
  IntVector lo(n, Integer(0)), hi(n, Integer(0));
  for (const auto& r : rays)
    for (std::size_t k = 0; k < n; ++k) {
      if (r[k] < lo[k]) lo[k] = r[k];
      if (r[k] > hi[k]) hi[k] = r[k];
    }
  Integer volume = 1;
  for (std::size_t k = 0; k < n; ++k) volume *= hi[k] - lo[k] + 1;
  const bool shortcut = certificate.has_value() && !facets.empty();
  if (volume > static_cast<unsigned long>(point_limit)) return std::nullopt;
  if (!shortcut && volume > static_cast<unsigned long>(kBoxLpPointLimit)) return std::nullopt;

  const std::set<IntVector> vertices(vertex_list.begin(), vertex_list.end());
  std::vector<IntVector> out;
  IntVector x = lo;
  for (;;) {
    if (!is_zero(x) && !vertices.count(x)) {
      bool member;
      if (shortcut) {
        // On sigma the certificate is positive away from 0, so the lattice
        // points of the polytope other than 0 sit at height exactly 1.
        member = dot(*certificate, x) == 1 &&
                 std::all_of(facets.begin(), facets.end(), [&](const IntVector& f) { return dot(f, x) >= 0; });
      } else {
        member = in_hull_with_origin(rays, x);
      }
      if (member) out.push_back(x);
    }
    std::size_t k = 0;
    while (k < n && x[k] == hi[k]) x[k] = lo[k], ++k;
    if (k == n) break;
    x[k] += 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<IntVector>> fiber_offenders(const QuotientCone& q, const WeightDecomposition& w) {
  if (q.nprime_rank == 0) return std::vector<IntVector>{};
  if (w.weight_sum() != Vec2{0, 0} || !primitivity_audit(q)) return std::nullopt;
  if (static_cast<std::size_t>(w.total_dim()) != q.preimages.size()) return std::nullopt;

  const std::size_t d = q.preimages.size(), n = q.nprime_rank;
  std::vector<std::vector<std::int64_t>> A(n, std::vector<std::int64_t>(d));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < d; ++c) A[r][c] = to_i64(q.A(r, c));
  const auto extreme = q.extreme_generators();
  const std::set<IntVector> vertices(extreme.begin(), extreme.end());
  std::set<IntVector> offenders;

  // Images of basis vectors that are not on extreme rays are lattice points
  // of height one in the relative interior of a face.
  for (std::size_t i = 0; i < d; ++i)
    if (!q.ray_extreme[q.preimages[i].ray]) offenders.insert(q.image(i));

  const auto& entries = w.entries();
  std::set<Vertex> verts;
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = a + 1; b < entries.size(); ++b)
      if (det2(entries[a].weight, entries[b].weight) != 0) pair_vertices(entries[a].weight, entries[b].weight, verts);

  std::vector<std::int64_t> val(entries.size());
  std::vector<std::int64_t> floors(entries.size());
  for (const auto& v : verts) {
    std::vector<Vec2> dirs;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const Vec2& m = entries[k].weight;
      val[k] = (C(m[0]) * C(v.px) + C(m[1]) * C(v.py)).value();
      if (val[k] % v.den == 0) {
        Vec2 perp{-m[1], m[0]};
        std::int64_t g = gcd_of<C>(perp[0], perp[1]).value();
        perp = {perp[0] / g, perp[1] / g};
        dirs.push_back(perp);
        dirs.push_back(neg2(perp));
      }
    }
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    std::vector<Vec2> probes{{0, 0}};
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      probes.push_back(dirs[k]);
      probes.push_back(add2(dirs[k], dirs[(k + 1) % dirs.size()]));
    }
    for (const auto& delta : probes) {
      // floor(<m, v + eps * delta>) for small eps > 0
      C total = 0;
      for (std::size_t k = 0; k < entries.size(); ++k) {
        std::int64_t fl = floor_div<C>(val[k], v.den).value();
        if (val[k] % v.den == 0 && dot2(entries[k].weight, delta) < 0) fl -= 1;
        floors[k] = fl;
        total += C(fl) * C(entries[k].multiplicity);
      }
      // The lattice point -A floor(B x) has height -sum(floor); height one
      // is the slice of the polytope.
      if (total != C(-1)) continue;
      IntVector y(n);
      for (std::size_t r = 0; r < n; ++r) {
        C s = 0;
        for (std::size_t k = 0; k < entries.size(); ++k) {
          if (floors[k] == 0) continue;
          for (std::int64_t c = 0; c < entries[k].multiplicity; ++c)
            s -= C(A[r][w.offset(k) + static_cast<std::size_t>(c)]) * C(floors[k]);
        }
        y[r] = static_cast<long>(s.value());
      }
      if (!vertices.count(y)) offenders.insert(std::move(y));
    }
  }
  return std::vector<IntVector>(offenders.begin(), offenders.end());
}

namespace {

struct Certificates {
  std::optional<std::vector<Rational>> rational;
  std::optional<IntVector> integral;
};

Certificates unit_functional(const std::vector<IntVector>& rays, std::size_t dim) {
  if (rays.empty()) return {std::vector<Rational>(dim), IntVector(dim, Integer(0))};
  IntMatrix G = IntMatrix::from_rows(rays);
  IntVector ones(rays.size(), Integer(1));
  Certificates c;
  c.rational = solve_rational(G, ones);
  if (c.rational) c.integral = solve_integer(G, ones);
  return c;
}

void fill_certificates(SingularityReport& rep, const std::vector<IntVector>& generators,
                       const std::vector<IntVector>& extreme, std::size_t dim) {
  auto gen = unit_functional(generators, dim);
  rep.rational_certificate = gen.rational;
  rep.q_gorenstein = gen.rational.has_value();
  rep.certificate = gen.integral;
  rep.gorenstein = gen.integral.has_value();
  rep.generators_extreme = generators.size() == extreme.size();
  auto cone = rep.generators_extreme ? gen : unit_functional(extreme, dim);
  rep.cone_q_gorenstein = cone.rational.has_value();
  rep.cone_certificate = cone.integral;
  rep.cone_gorenstein = cone.integral.has_value();

  if (extreme.empty()) {
    rep.simplicial = rep.smooth = true;
    return;
  }
  auto snf = smith_normal_form(IntMatrix::from_rows(extreme));
  rep.simplicial = snf.rank() == extreme.size();
  rep.smooth = rep.simplicial;
  for (const auto& s : snf.invariant_factors())
    if (s != 1) rep.smooth = false;
}

// Vertices of conv(0, generators) other than 0. With every generator at height
// one these are the extreme rays; otherwise test each generator against the
// hull of the rest.
std::vector<IntVector> hull_vertices(const std::vector<IntVector>& generators, const std::vector<IntVector>& extreme,
                                     bool level) {
  if (level) return extreme;
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < generators.size(); ++j)
      if (j != i) others.push_back(generators[j]);
    if (!in_hull_with_origin(others, generators[i])) out.push_back(generators[i]);
  }
  return out;
}

void finish(SingularityReport& rep, std::optional<std::vector<IntVector>> offenders, TerminalMethod method) {
  if (offenders) {
    rep.offenders = std::move(*offenders);
    rep.only_vertices = rep.offenders.empty();
    rep.method = method;
  } else {
    rep.method = TerminalMethod::Skipped;
  }
  rep.terminal = rep.q_gorenstein && rep.only_vertices.value_or(false);
  if (rep.gorenstein && !rep.q_gorenstein) throw IntegrityError("Gorenstein cone without a rational certificate");
  if (rep.q_gorenstein && !rep.cone_q_gorenstein)
    throw IntegrityError("generators admit a unit functional but the extreme rays do not");
  if (rep.generators_extreme && (rep.gorenstein != rep.cone_gorenstein))
    throw IntegrityError("generator and cone Gorenstein tests disagree on extreme generators");
  if (rep.smooth && rep.generators_extreme && !rep.terminal && rep.method != TerminalMethod::Skipped)
    throw IntegrityError("smooth cone reported as non-terminal");
}

}  // namespace

SingularityReport cone_singularities(const std::vector<IntVector>& input) {
  SingularityReport rep;
  const std::size_t dim = input.empty() ? 0 : input.front().size();
  std::set<IntVector> dirs;
  for (const auto& g : input)
    if (!is_zero(g)) dirs.insert(primitive_part(g));
  const std::vector<IntVector> generators(dirs.begin(), dirs.end());
  const std::vector<IntVector> extreme = extreme_rays(generators);
  fill_certificates(rep, generators, extreme, dim);
  rep.vertices = hull_vertices(generators, extreme, rep.q_gorenstein);
  std::vector<IntVector> facets;
  if (!extreme.empty() && rank_of(IntMatrix::from_rows(extreme)) == dim && dim <= kFacetRankLimit &&
      extreme.size() <= kFacetRayLimit)
    facets = dual_facets(extreme);
  finish(rep, box_offenders(generators, rep.vertices, facets, rep.certificate), TerminalMethod::Box);
  return rep;
}

SingularityReport singularity_report(const QuotientCone& q, const WeightDecomposition& w) {
  SingularityReport rep;
  rep.weight_sum = w.weight_sum();
  const auto extreme = q.extreme_generators();
  fill_certificates(rep, q.rays, extreme, q.nprime_rank);
  if (q.nprime_rank == 0) {
    finish(rep, std::vector<IntVector>{}, TerminalMethod::Box);
    return rep;
  }

  // With every A(e_i) primitive, the functional 1 on Z^d descends to N'
  // exactly when it kills the image of N, i.e. when the weights sum to 0.
  if (primitivity_audit(q) && (*rep.weight_sum == Vec2{0, 0}) != rep.gorenstein)
    throw IntegrityError("weight sum and Gorenstein certificate disagree");
  rep.vertices = hull_vertices(q.rays, extreme, rep.q_gorenstein);

  std::optional<std::vector<IntVector>> offenders;
  TerminalMethod method = TerminalMethod::Box;
  if (q.facets_computed) {
    offenders = box_offenders(q.rays, rep.vertices, q.facets, rep.certificate);
  }
  if (!offenders) {
    offenders = fiber_offenders(q, w);
    method = TerminalMethod::Fiber;
  }
  if (!offenders && !rep.gorenstein) {
    offenders = box_offenders(q.rays, rep.vertices, {}, std::nullopt);
    method = TerminalMethod::Box;
  }
  finish(rep, std::move(offenders), method);
  return rep;
}

}  // namespace toricfold
