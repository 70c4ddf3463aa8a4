#include "toricfold/classify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace toricfold {

std::string to_string(CscK c) {
  switch (c) {
    case CscK::YesByFoldability: return "yes-by-foldability";
    case CscK::RigidClassical: return "rigid-classical";
    case CscK::Unknown: return "unknown";
  }
  return "unknown";
}

const std::vector<std::string>& minimal_model_names() {
  static const std::vector<std::string> names = {"P2", "P1xP1", "Bl3P2", "Y2", "Y3", "Y4"};
  return names;
}

std::vector<Vec2> rotation_orbit(const Mat2& g, const Vec2& v) {
  std::vector<Vec2> out{v};
  for (Vec2 x = g * v; x != v; x = g * x) {
    out.push_back(x);
    if (out.size() > 12) throw IntegrityError("rotation orbit longer than 12");
  }
  return out;
}

namespace {

bool is_automorphism(const Fan2D& f, const Mat2& g) {
  return std::all_of(f.rays().begin(), f.rays().end(), [&](const Vec2& u) { return f.contains(g * u); });
}

struct Contraction {
  std::vector<Vec2> orbit;
  Fan2D result;
};

// Orbits are tried in order of their least member's position in the sorted
// list of (-1)-rays; an orbit counts only if its members can be blown down
// one after another.
std::optional<Contraction> next_contraction(const Fan2D& f, const std::optional<Mat2>& rotation) {
  const auto a = self_intersections(f);
  std::vector<Vec2> candidates;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (a[i] == -1) candidates.push_back(f.rays()[i]);
  std::sort(candidates.begin(), candidates.end());
  for (const auto& v : candidates) {
    auto orbit = rotation ? rotation_orbit(*rotation, v) : std::vector<Vec2>{v};
    Fan2D g = f;
    bool ok = true;
    for (const auto& u : orbit) {
      auto idx = g.index_of(u);
      if (!idx) throw IntegrityError("rotation witness does not preserve the fan");
      try {
        g = blow_down(g, *idx);
      } catch (const NotContractibleError&) {
        ok = false;
      } catch (const FanError&) {
        ok = false;
      }
      if (!ok) break;
    }
    if (!ok) continue;
    if (rotation && !is_automorphism(g, *rotation))
      throw IntegrityError("equivariant blow-down lost the rotation symmetry");
    return Contraction{std::move(orbit), g.with_name("")};
  }
  return std::nullopt;
}

}  // namespace

Fan2D replay_blowups(const Fan2D& minimal, const std::vector<BlowdownStep>& steps) {
  Fan2D cur = minimal;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    std::vector<Vec2> rays = cur.rays();
    rays.insert(rays.end(), it->orbit.begin(), it->orbit.end());
    Fan2D next;
    try {
      next = Fan2D::validate(rays);
    } catch (const FanError& e) {
      throw IntegrityError(std::string("replayed blow-up is not a fan: ") + e.what());
    }
    for (const auto& u : it->orbit) {
      auto i = static_cast<std::ptrdiff_t>(*next.index_of(u));
      if (add2(next.ray(i - 1), next.ray(i + 1)) != u) {
        std::ostringstream os;
        os << "ray " << u << " is not the sum of its neighbours after the replay";
        throw IntegrityError(os.str());
      }
    }
    cur = next;
  }
  return cur;
}

CscK csck_flag(const ClassificationResult& c) {
  // The three rigid surfaces carry classical cscK metrics whether or not one
  // also reads them as foldable.
  const bool rigid_model =
      c.minimal_model == "P2" || c.minimal_model == "P1xP1" || c.minimal_model == "Bl3P2";
  if (c.blowdown_sequence.empty() && rigid_model) return CscK::RigidClassical;
  if (c.foldable) return CscK::YesByFoldability;
  return CscK::Unknown;
}

ClassificationResult minimal_model(const Fan2D& f) {
  ClassificationResult c;
  const auto witness = foldability(f);
  c.foldable = witness.foldable;
  c.p = witness.p;
  c.rotation = witness.rotation;

  Fan2D cur = f.with_name("");
  while (auto step = next_contraction(cur, c.rotation)) {
    if (c.foldable && step->orbit.size() != static_cast<std::size_t>(c.p))
      throw IntegrityError("rotation orbit size differs from the witness order");
    c.blowdown_sequence.push_back({std::move(step->orbit)});
    cur = std::move(step->result);
  }

  c.minimal_model = "other";
  for (const auto& name : minimal_model_names()) {
    if (auto g = fans_isomorphic(cur, catalog(name))) {
      c.minimal_model = name;
      c.model_isomorphism = g;
      break;
    }
  }
  c.minimal = cur.with_name(c.minimal_model);
  if (!(replay_blowups(cur, c.blowdown_sequence) == f)) throw IntegrityError("blow-up replay does not return the input");
  c.rigid = weight_decomposition(f).empty();
  c.csck = csck_flag(c);
  return c;
}

Fan2D random_foldable_fan(const RandomFanOptions& opts) {
  static const std::set<std::string> bases = {"Y2", "Y3", "Y4", "P1xP1", "P2", "Bl3P2"};
  if (!bases.count(opts.base)) throw InvalidBase("base must be one of Y2, Y3, Y4, P1xP1, P2, Bl3P2");
  if (opts.rounds < 0) throw InvalidArgument("rounds must be non-negative");
  Fan2D f = catalog(opts.base);

  Mat2 rotation;
  if (opts.order == 0) {
    rotation = *foldability(f).rotation;
  } else {
    bool found = false;
    for (const auto& g : lattice_automorphisms(f).elements)
      if (g.det() == 1 && g != Mat2::identity() && element_order(g) == opts.order) {
        rotation = g;
        found = true;
        break;
      }
    if (!found)
      throw InvalidArgument(opts.base + " has no rotation of order " + std::to_string(opts.order));
  }

  std::mt19937_64 rng(opts.seed);
  for (int round = 0; round < opts.rounds; ++round) {
    std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
    const std::size_t corner = pick(rng);
    const Vec2 u = f.rays()[corner];
    const Vec2 v = f.ray(static_cast<std::ptrdiff_t>(corner) + 1);
    std::vector<Vec2> rays = f.rays();
    Vec2 a = u, b = v;
    const int order = element_order(rotation);
    for (int k = 0; k < order; ++k) {
      rays.push_back(add2(a, b));
      a = rotation * a;
      b = rotation * b;
    }
    if (rays.size() > opts.max_rays) continue;
    f = Fan2D::validate(std::move(rays));
  }
  return f.with_name("");
}

FullReport full_report(const Fan2D& f) {
  FullReport r;
  r.fan = f;
  r.self_intersections = self_intersections(f);
  r.group = lattice_automorphisms(f);
  r.foldability = foldability(r.group);
  r.roots = demazure_roots(f);
  r.aut0_torus = aut0_is_torus(f);
  r.weights = weight_decomposition(f);
  r.oracle_dimension = oracle_dimension(f);
  if (r.oracle_dimension != r.weights.total_dim())
    throw IntegrityError("weight enumeration disagrees with the self-intersection count");

  if (!r.weights.empty()) {
    try {
      r.quotient = build_quotient(r.weights);
      r.primitive_images = primitivity_audit(*r.quotient);
    } catch (const QuotientError& e) {
      r.quotient_failure = e.mode;
      r.quotient_error = e.what();
    }
  }
  if (r.quotient) {
    try {
      r.singularity = singularity_report(*r.quotient, r.weights);
    } catch (const Error& e) {
      r.singularity_error = e.what();
    }
    try {
      r.descended_group = descend_group_action(f, r.group, *r.quotient, r.weights);
    } catch (const Error& e) {
      r.descent_error = e.what();
    }
  }
  try {
    r.classification = minimal_model(f);
  } catch (const Error& e) {
    r.classification_error = e.what();
  }
  return r;
}

}  // namespace toricfold
