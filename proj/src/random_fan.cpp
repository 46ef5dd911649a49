#include "toric/random_fan.hpp"

#include <algorithm>
#include <random>

namespace toric {

namespace {

using Rng = std::mt19937_64;

long rnd_range(Rng& rng, long lo, long hi) {
  return lo + long(rng() % std::uint64_t(hi - lo + 1));
}

// strict angular order on nonzero integer vectors in the plane
bool angle_less(const Vec& a, const Vec& b) {
  auto half = [](const Vec& v) {  // 0: upper half (incl. +x axis), 1: lower
    if (v[1] != 0) return v[1] > 0 ? 0 : 1;
    return v[0] > 0 ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Int cross = a[0] * b[1] - a[1] * b[0];
  if (cross != 0) return cross > 0;
  return false;
}

Vec vec2(long x, long y) { return Vec{Int(x), Int(y)}; }

std::vector<Vec> random_planar_rays(Rng& rng, std::size_t want) {
  std::vector<Vec> rays;
  std::size_t guard = 0;
  while (rays.size() < want && guard < 500) {
    ++guard;
    long x = rnd_range(rng, -5, 5), y = rnd_range(rng, -5, 5);
    if (x == 0 && y == 0) continue;
    Vec r = primitive_ray(vec2(x, y));
    if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(r);
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  return rays;
}

// ensure consecutive angular gaps are < pi so consecutive pairs are sharp
void fill_gaps(std::vector<Vec>& rays) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const Vec& a = rays[i];
      const Vec& b = rays[(i + 1) % rays.size()];
      Int cross = a[0] * b[1] - a[1] * b[0];
      if (cross > 0) continue;
      // gap >= pi: insert a bisector
      Vec mid = (cross == 0 && a[0] * b[0] + a[1] * b[1] < 0)
                    ? Vec{-a[1], a[0]}  // opposite rays: perpendicular
                    : primitive_ray(Vec{-(a[0] + b[0]), -(a[1] + b[1])});
      if (is_zero(Vec{mid[0], mid[1]})) mid = Vec{-a[1], a[0]};
      if (std::find(rays.begin(), rays.end(), mid) == rays.end()) {
        rays.push_back(mid);
        std::sort(rays.begin(), rays.end(), angle_less);
        changed = true;
        break;
      } else {
        throw Error("random fan: cannot fill angular gap");
      }
    }
  }
}

Fan planar_fan(Rng& rng, std::size_t max_rays, bool force_complete) {
  std::size_t want = std::max<std::size_t>(3, 3 + rng() % std::max<std::size_t>(1, max_rays - 2));
  std::vector<Vec> rays = random_planar_rays(rng, want);
  if (rays.size() < 3) rays = {vec2(1, 0), vec2(0, 1), vec2(-1, -1)};
  std::sort(rays.begin(), rays.end(), angle_less);
  fill_gaps(rays);
  std::vector<Cone> wheel;
  for (std::size_t i = 0; i < rays.size(); ++i)
    wheel.push_back(Cone::from_generators(2, {rays[i], rays[(i + 1) % rays.size()]}));
  if (force_complete) return validate_fan(2, wheel);
  switch (rng() % 4) {
    case 0:
      return validate_fan(2, wheel);
    case 1: {  // random subset of the wheel
      std::vector<Cone> sub;
      for (const Cone& c : wheel)
        if (rng() % 2) sub.push_back(c);
      if (sub.empty()) sub.push_back(wheel[0]);
      return validate_fan(2, sub);
    }
    case 2: {  // skeleton: rays only
      std::vector<Cone> sub;
      for (const Vec& r : rays)
        if (rng() % 2) sub.push_back(Cone::from_generators(2, {r}));
      if (sub.empty()) sub.push_back(Cone::from_generators(2, {rays[0]}));
      return validate_fan(2, sub);
    }
    default: {  // one maximal 2-cone plus some stray rays
      std::vector<Cone> sub{wheel[rng() % wheel.size()]};
      for (const Vec& r : rays)
        if (rng() % 3 == 0) sub.push_back(Cone::from_generators(2, {r}));
      return validate_fan(2, sub);
    }
  }
}

IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::size_t ops = 3 + rng() % 4;
  for (std::size_t t = 0; t < ops; ++t) {
    std::size_t i = rng() % n, j = rng() % n;
    switch (rng() % 3) {
      case 0:
        if (i != j) u.add_row(i, j, Int(rnd_range(rng, -2, 2)));
        break;
      case 1:
        u.swap_rows(i, j);
        break;
      default:
        u.negate_row(i);
        break;
    }
  }
  return u;
}

std::vector<Cone> stock_complete_3d(Rng& rng) {
  Vec e1{Int(1), Int(0), Int(0)}, e2{Int(0), Int(1), Int(0)}, e3{Int(0), Int(0), Int(1)};
  auto neg = [](const Vec& v) { return scale(Int(-1), v); };
  switch (rng() % 4) {
    case 0: {  // orthants
      std::vector<Cone> cs;
      for (int sx : {1, -1})
        for (int sy : {1, -1})
          for (int sz : {1, -1})
            cs.push_back(Cone::from_generators(
                3, {scale(Int(sx), e1), scale(Int(sy), e2), scale(Int(sz), e3)}));
      return cs;
    }
    case 1: {  // face fan of the standard simplex
      Vec w = neg(add(add(e1, e2), e3));
      return {Cone::from_generators(3, {e1, e2, e3}),
              Cone::from_generators(3, {e1, e2, w}),
              Cone::from_generators(3, {e1, e3, w}),
              Cone::from_generators(3, {e2, e3, w})};
    }
    case 2: {  // weighted apex: often simplicial but not regular
      Vec w{Int(-rnd_range(rng, 1, 3)), Int(-rnd_range(rng, 1, 3)),
            Int(-rnd_range(rng, 1, 3))};
      return {Cone::from_generators(3, {e1, e2, e3}),
              Cone::from_generators(3, {e1, e2, w}),
              Cone::from_generators(3, {e1, e3, w}),
              Cone::from_generators(3, {e2, e3, w})};
    }
    default: {  // face fan of the cube: complete, not simplicial
      std::vector<Cone> cs;
      auto v = [&](int a, int b, int c) { return Vec{Int(a), Int(b), Int(c)}; };
      cs.push_back(Cone::from_generators(3, {v(1, 1, 1), v(1, -1, 1), v(1, 1, -1), v(1, -1, -1)}));
      cs.push_back(Cone::from_generators(3, {v(-1, 1, 1), v(-1, -1, 1), v(-1, 1, -1), v(-1, -1, -1)}));
      cs.push_back(Cone::from_generators(3, {v(1, 1, 1), v(-1, 1, 1), v(1, 1, -1), v(-1, 1, -1)}));
      cs.push_back(Cone::from_generators(3, {v(1, -1, 1), v(-1, -1, 1), v(1, -1, -1), v(-1, -1, -1)}));
      cs.push_back(Cone::from_generators(3, {v(1, 1, 1), v(-1, 1, 1), v(1, -1, 1), v(-1, -1, 1)}));
      cs.push_back(Cone::from_generators(3, {v(1, 1, -1), v(-1, 1, -1), v(1, -1, -1), v(-1, -1, -1)}));
      return cs;
    }
  }
}

Fan spatial_fan(Rng& rng, bool force_complete) {
  std::vector<Cone> base = stock_complete_3d(rng);
  IntMatrix u = random_unimodular(rng, 3);
  std::vector<Cone> mapped;
  for (const Cone& c : base) {
    std::vector<Vec> rs;
    for (const Vec& r : c.rays()) rs.push_back(mul_vec(u, r));
    mapped.push_back(Cone::from_generators(3, rs));
  }
  if (force_complete) return validate_fan(3, mapped);
  switch (rng() % 3) {
    case 0:
      return validate_fan(3, mapped);
    case 1: {  // subset of maximal cones
      std::vector<Cone> sub;
      for (const Cone& c : mapped)
        if (rng() % 2) sub.push_back(c);
      if (sub.empty()) sub.push_back(mapped[0]);
      return validate_fan(3, sub);
    }
    default: {  // 2-skeleton pieces of one cone plus strays
      Fan whole = validate_fan(3, mapped);
      std::vector<Cone> sub;
      for (const Cone& c : whole.cones())
        if (c.dim() >= 1 && c.dim() <= 2 && rng() % 3 == 0) sub.push_back(c);
      if (sub.empty()) sub.push_back(mapped[0]);
      return validate_fan(3, sub);
    }
  }
}

Fan embed_fan(Rng& rng, const Fan& low, std::size_t dim) {
  IntMatrix u = random_unimodular(rng, dim);
  std::vector<Cone> mapped;
  for (std::size_t s : low.max_cones()) {
    std::vector<Vec> rs;
    for (const Vec& r : low.cones()[s].rays()) {
      Vec lifted(dim);
      for (std::size_t i = 0; i < r.size(); ++i) lifted[i] = r[i];
      rs.push_back(mul_vec(u, lifted));
    }
    mapped.push_back(Cone::from_generators(dim, rs));
  }
  return validate_fan(dim, mapped);
}

}  // namespace

Fan generate_random_fan(std::uint64_t seed, std::size_t dim, std::size_t max_rays,
                        const RandomFanOptions& opts) {
  if (dim < 1 || dim > 3) throw Error("generate_random_fan: dim must be 1, 2 or 3");
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + dim);
  rng.discard(7);
  if (opts.force_non_full) {
    if (dim < 2) throw Error("generate_random_fan: non-full needs dim >= 2");
    std::size_t low_dim = 1 + rng() % (dim - 1);
    Fan low = generate_random_fan(seed ^ 0x5bf03635ULL, low_dim, max_rays, {});
    return embed_fan(rng, low, dim);
  }
  switch (dim) {
    case 1: {
      Vec plus{Int(1)}, minus{Int(-1)};
      if (opts.force_complete)
        return validate_fan(1, {Cone::from_generators(1, {plus}),
                                Cone::from_generators(1, {minus})});
      switch (rng() % 3) {
        case 0:
          return validate_fan(1, {});
        case 1:
          return validate_fan(1, {Cone::from_generators(1, {plus})});
        default:
          return validate_fan(1, {Cone::from_generators(1, {plus}),
                                  Cone::from_generators(1, {minus})});
      }
    }
    case 2:
      return planar_fan(rng, max_rays, opts.force_complete);
    default:
      return spatial_fan(rng, opts.force_complete);
  }
}

}  // namespace toric
