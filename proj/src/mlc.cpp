#include "cara/mlc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cara/raster.hpp"

namespace cara {

MLCTable::MLCTable(std::vector<int> g, std::optional<int> extension_pad)
    : g_(std::move(g)), pad_(extension_pad) {
  if (g_.empty()) throw std::invalid_argument("MLC table needs at least g(0)");
  for (int v : g_) {
    if (v < 0) throw std::invalid_argument("MLC table values must be non-negative");
  }
}

MLCTable MLCTable::linear(int kmax, int pad) {
  if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
  std::vector<int> g(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) g[k] = std::max(0, k + pad);
  return MLCTable(std::move(g), pad);
}

bool MLCTable::covers(long k) const { return k >= 0 && (k <= kmax() || pad_.has_value()); }

long MLCTable::at(long k) const {
  if (!covers(k)) throw std::out_of_range("MLC table does not cover k");
  if (k <= kmax()) return g_[static_cast<std::size_t>(k)];
  return std::max(0L, k + *pad_);
}

MLCTable MLCTable::with_linear_extension() const {
  return MLCTable(g_, g_.back() - kmax());
}

bool MLCTable::is_increasing() const {
  return std::is_sorted(g_.begin(), g_.end());
}

namespace {

struct Sample {
  CurvePoint where;
  Point point;
};

// Uniform perimeter samples merged with every vertex, in traversal order.
// Because all vertices are present, the samples between two indices form
// exactly the polyline subarc between them.
std::vector<Sample> sample_curve(const JordanCurve& curve, int resolution) {
  const double total = curve.perimeter();
  const auto n_uniform = static_cast<std::size_t>(std::ceil(resolution * total));
  const double step = total / static_cast<double>(n_uniform);
  std::vector<Sample> out;
  out.reserve(n_uniform + curve.size());
  std::size_t m = 0;
  for (std::size_t e = 0; e < curve.size(); ++e) {
    const double s0 = curve.arc_position({e, 0.0});
    const double s1 = (e + 1 == curve.size()) ? total : curve.arc_position({e + 1, 0.0});
    out.push_back({{e, 0.0}, curve.vertex(e)});
    while (m < n_uniform && m * step <= s0) ++m;
    for (; m < n_uniform && m * step < s1; ++m) {
      const double t = (m * step - s0) / (s1 - s0);
      if (t <= 0.0 || t >= 1.0) continue;
      const CurvePoint cp{e, t};
      out.push_back({cp, curve.at(cp)});
    }
  }
  return out;
}

// Bounding-box tree over the sample sequence repeated twice, so that every
// cyclic arc is a contiguous index range.
class BoxTree {
 public:
  explicit BoxTree(const std::vector<Point>& pts) : pts_(pts) {
    size_ = 1;
    while (size_ < pts.size()) size_ *= 2;
    boxes_.assign(2 * size_, Box{1.0, 1.0, -1.0, -1.0});
    for (std::size_t i = 0; i < pts.size(); ++i) {
      boxes_[size_ + i] = {pts[i].x, pts[i].y, pts[i].x, pts[i].y};
    }
    for (std::size_t i = size_ - 1; i >= 1; --i) {
      const Box& l = boxes_[2 * i];
      const Box& r = boxes_[2 * i + 1];
      if (l.xmin > l.xmax) {
        boxes_[i] = r;
      } else if (r.xmin > r.xmax) {
        boxes_[i] = l;
      } else {
        boxes_[i] = {std::min(l.xmin, r.xmin), std::min(l.ymin, r.ymin),
                     std::max(l.xmax, r.xmax), std::max(l.ymax, r.ymax)};
      }
    }
  }

  /// Every point with index in [lo, hi] lies within distance `limit` of x.
  bool all_within(std::size_t lo, std::size_t hi, Point x, double limit) const {
    return within(1, 0, size_ - 1, lo, hi, x, limit);
  }

 private:
  bool within(std::size_t node, std::size_t nl, std::size_t nr, std::size_t lo, std::size_t hi,
              Point x, double limit) const {
    if (nr < lo || nl > hi) return true;
    const Box& b = boxes_[node];
    if (b.xmin > b.xmax) return true;
    const double fx = std::max(std::abs(x.x - b.xmin), std::abs(x.x - b.xmax));
    const double fy = std::max(std::abs(x.y - b.ymin), std::abs(x.y - b.ymax));
    if (std::hypot(fx, fy) <= limit) return true;
    if (nl == nr) return false;
    if (lo <= nl && nr <= hi) {
      const double gx = std::max({b.xmin - x.x, 0.0, x.x - b.xmax});
      const double gy = std::max({b.ymin - x.y, 0.0, x.y - b.ymax});
      if (std::hypot(gx, gy) > limit) return false;
    }
    const std::size_t mid = (nl + nr) / 2;
    return within(2 * node, nl, mid, lo, hi, x, limit) &&
           within(2 * node + 1, mid + 1, nr, lo, hi, x, limit);
  }

  const std::vector<Point>& pts_;
  std::size_t size_ = 1;
  std::vector<Box> boxes_;
};

class PairSampler {
 public:
  PairSampler(const JordanCurve& curve, int resolution)
      : curve_(curve), samples_(sample_curve(curve, resolution)) {
    doubled_.reserve(2 * samples_.size());
    for (int rep = 0; rep < 2; ++rep) {
      for (const Sample& s : samples_) doubled_.push_back(s.point);
    }
    tree_ = std::make_unique<BoxTree>(doubled_);
  }

  std::size_t size() const { return samples_.size(); }

  // forward_[i]: last index j in [i, i + n - 1] with diam(samples i..j) <= limit.
  void compute_reach(double limit) {
    const std::size_t n = size();
    forward_.assign(n, 0);
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
      j = std::max(j, i);
      while (j + 1 <= i + n - 1 && tree_->all_within(i, j, doubled_[j + 1], limit)) ++j;
      forward_[i] = j;
    }
  }

  std::optional<MLCWitness> find_violation(double pair_limit, int k) const {
    const std::size_t n = size();
    const double extent = std::max(curve_.bbox().extent(), 1e-300);
    const double cell = std::max(pair_limit, extent * std::ldexp(1.0, -20));
    const auto key = [&](Point p) {
      const auto ix = static_cast<std::int64_t>(std::floor((p.x - curve_.bbox().xmin) / cell));
      const auto iy = static_cast<std::int64_t>(std::floor((p.y - curve_.bbox().ymin) / cell));
      return std::pair{ix, iy};
    };
    const auto pack = [](std::int64_t ix, std::int64_t iy) {
      return static_cast<std::uint64_t>(ix) * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(iy);
    };
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [ix, iy] = key(samples_[i].point);
      buckets[pack(ix, iy)].push_back(i);
    }

    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t reach = forward_[a] - a;
      const std::size_t back = backward_span(a);
      if (reach + back >= n - 1) continue;
      // Indices not joined to a by a short arc: cyclic range (a + reach, a - back).
      const std::size_t u0 = (a + reach + 1) % n;
      const std::size_t u1 = (a + n - back - 1) % n;

      const Point pa = samples_[a].point;
      const auto [cx, cy] = key(pa);
      std::optional<std::size_t> best;
      double best_d = 0.0;
      const auto consider = [&](const std::vector<std::size_t>& list, std::size_t lo, std::size_t hi) {
        auto it = std::lower_bound(list.begin(), list.end(), lo);
        for (; it != list.end() && *it <= hi; ++it) {
          const double d = distance(pa, samples_[*it].point);
          if (d > 0.0 && d <= pair_limit && (!best || d < best_d || (d == best_d && *it < *best))) {
            best = *it;
            best_d = d;
          }
        }
      };
      for (std::int64_t dx = -1; dx <= 1; ++dx) {
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
          auto found = buckets.find(pack(cx + dx, cy + dy));
          if (found == buckets.end()) continue;
          if (u0 <= u1) {
            consider(found->second, u0, u1);
          } else {
            consider(found->second, u0, n - 1);
            consider(found->second, 0, u1);
          }
        }
      }
      if (best) {
        MLCWitness w;
        w.p = samples_[a].where;
        w.q = samples_[*best].where;
        w.k = k;
        w.pair_distance = best_d;
        const SubarcPair arcs = split_at(curve_, w.p, w.q);
        w.best_arc_diameter = std::min(subarc_diameter(arcs.arc1), subarc_diameter(arcs.arc2));
        return w;
      }
    }
    return std::nullopt;
  }

 private:
  // a - b for the smallest b in (a - n, a] whose forward reach contains a.
  // Reach is non-decreasing in b, so this is a binary search on the
  // extended index.
  std::size_t backward_span(std::size_t a) const {
    const std::size_t n = size();
    const auto reach_ext = [&](std::size_t b_shifted) {
      // b_shifted = b + n, with b in (a - n, a]
      if (b_shifted >= n) return forward_[b_shifted - n] + n;
      return forward_[b_shifted];
    };
    std::size_t lo = a + 1;  // (a - n + 1) + n
    std::size_t hi = a + n;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (reach_ext(mid) >= a + n) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return a + n - lo;
  }

  const JordanCurve& curve_;
  std::vector<Sample> samples_;
  std::vector<Point> doubled_;
  std::unique_ptr<BoxTree> tree_;
  std::vector<std::size_t> forward_;
};

double arc_limit(int k) { return std::ldexp(1.0, -k) - 1e-12; }

}  // namespace

std::optional<MLCWitness> check_mlc(const JordanCurve& curve, const MLCTable& table, int k,
                                    int resolution) {
  if (k < 0 || k > table.kmax()) throw std::out_of_range("k outside the MLC table");
  if (resolution < 64) throw std::invalid_argument("resolution must be at least 64");
  PairSampler sampler(curve, resolution);
  sampler.compute_reach(arc_limit(k));
  return sampler.find_violation(std::ldexp(1.0, -table.values()[k]), k);
}

std::vector<int> estimate_mlc_raw(const JordanCurve& curve, int kmax, int resolution) {
  if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
  if (resolution < 64) throw std::invalid_argument("resolution must be at least 64");
  PairSampler sampler(curve, resolution);
  std::vector<int> raw(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    sampler.compute_reach(arc_limit(k));
    int g = 0;
    while (g <= 64 && sampler.find_violation(std::ldexp(1.0, -g), k)) ++g;
    if (g > 64) throw std::runtime_error("curve appears not locally connected at resolution");
    raw[k] = g;
  }
  return raw;
}

MLCTable estimate_mlc(const JordanCurve& curve, int kmax, int resolution) {
  std::vector<int> g = estimate_mlc_raw(curve, kmax, resolution);
  for (std::size_t k = 0; k < g.size(); ++k) {
    g[k] += 1;
    if (k > 0) g[k] = std::max(g[k], g[k - 1]);
  }
  return MLCTable(std::move(g));
}

bool verify_membership_theorem(const JordanCurve& curve, const MLCTable& table,
                               const Circle& disk, Point z0, CurvePoint zeta0, int k,
                               int grid_n) {
  if (k < 0 || k > table.kmax()) throw std::out_of_range("k outside the MLC table");
  const auto require = [](bool ok, const char* clause) {
    if (!ok) throw std::invalid_argument(std::string("theorem hypotheses not met: ") + clause);
  };
  const double g_radius = std::ldexp(1.0, -static_cast<int>(table.at(k)));
  const Point zeta = curve.at(zeta0);
  const auto depth = [&](Point p) { return disk.radius() - distance(p, disk.center()); };

  require(disk.strictly_inside(zeta), "zeta0 is not inside the disk");
  require(std::any_of(curve.vertices().begin(), curve.vertices().end(),
                      [&](Point v) { return distance(v, disk.center()) > disk.radius(); }),
          "disk boundary does not separate two points of the curve");
  require(disk.strictly_inside(z0), "z0 is not inside the disk");
  require(curve.distance_to(z0) > kGeomTol, "z0 lies on the curve");
  require(distance(z0, zeta) < g_radius, "|z0 - zeta0| is not below 2^-g(k)");
  require(std::ldexp(1.0, -k) + g_radius <= std::max(depth(zeta), depth(z0)),
          "2^-k + 2^-g(k) exceeds the distance to the disk boundary");
  if (grid_n < 16) throw std::invalid_argument("grid_n must be at least 16");

  const Point c = disk.center();
  const double r = disk.radius();
  const Grid grid = Grid::covering({c.x - r, c.y - r, c.x + r, c.y + r}, grid_n);
  CellMask member(grid.cell_count(), 0);
  for (std::size_t i = 0; i < member.size(); ++i) member[i] = disk.strictly_inside(grid.center(i));

  std::vector<Segment> edges;
  for (const Segment& s : polygon_edges(curve)) {
    if (segment_distance(c, s.a, s.b) < r + grid.cell) edges.push_back(s);
  }
  AdjacencyCuts cuts(grid);
  add_cuts(grid, edges, cuts);
  const Labeling labels = label_components(grid, member, cuts);

  const auto reachable = [&](std::size_t idx) {
    if (!member[idx]) return false;
    const Point ctr = grid.center(idx);
    return std::none_of(edges.begin(), edges.end(),
                        [&](const Segment& s) { return segments_intersect(z0, ctr, s.a, s.b); });
  };
  std::optional<std::size_t> seed;
  if (auto home = grid.locate(z0)) {
    const int hx = static_cast<int>(*home % grid.nx);
    const int hy = static_cast<int>(*home / grid.nx);
    for (int d = 0; d <= 1 && !seed; ++d) {
      for (int dy = -d; dy <= d && !seed; ++dy) {
        for (int dx = -d; dx <= d && !seed; ++dx) {
          const int x = hx + dx;
          const int y = hy + dy;
          if (x < 0 || y < 0 || x >= grid.nx || y >= grid.ny) continue;
          if (reachable(grid.index(x, y))) seed = grid.index(x, y);
        }
      }
    }
  }
  if (!seed) throw std::runtime_error("grid too coarse to seed the component of z0");

  const int comp = labels.label[*seed];
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    if (labels.label[i] != comp || !cuts.any(grid, i)) continue;
    if (distance(grid.center(i), zeta) <= 2.0 * grid.cell) return true;
  }
  return false;
}

}  // namespace cara
