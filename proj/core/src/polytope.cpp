#include <sdres/polytope.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace sdres {

namespace {

Rat det(std::vector<std::vector<Rat>> m)
{
  int n = static_cast<int>(m.size());
  Rat result(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (sgn(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      return Rat(0);
    if (pivot != c) {
      std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(c)]);
      result = -result;
    }
    const Rat pv = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    result *= pv;
    for (int r = c + 1; r < n; ++r) {
      const Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] / pv;
      if (sgn(f) == 0)
        continue;
      for (int j = c; j < n; ++j)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
            f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
    }
  }
  return result;
}

// normal of the affine hyperplane through d points in R^d (zero vector when
// the points are affinely dependent), via cofactors of the edge matrix
Point hyperplane_normal(const std::vector<Point>& pts, const std::vector<int>& idx, int d)
{
  Point normal(static_cast<std::size_t>(d), Rat(0));
  // rows: pts[idx[k]] - pts[idx[0]], k = 1..d-1
  std::vector<std::vector<Rat>> edges;
  for (int k = 1; k < d; ++k) {
    std::vector<Rat> row(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
      row[static_cast<std::size_t>(j)] =
          pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])][static_cast<std::size_t>(j)] -
          pts[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(j)];
    edges.push_back(std::move(row));
  }
  for (int j = 0; j < d; ++j) {
    std::vector<std::vector<Rat>> minor;
    for (const auto& row : edges) {
      std::vector<Rat> r;
      for (int c = 0; c < d; ++c)
        if (c != j)
          r.push_back(row[static_cast<std::size_t>(c)]);
      minor.push_back(std::move(r));
    }
    Rat v = minor.empty() ? Rat(1) : det(minor);
    normal[static_cast<std::size_t>(j)] = (j % 2 == 0) ? v : -v;
  }
  return normal;
}

Rat dot(const Point& a, const Point& b)
{
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

void canonicalize_direction(Point& n, Rat& offset)
{
  for (const auto& v : n) {
    if (sgn(v) == 0)
      continue;
    Rat scale = Rat(1) / v;
    if (sgn(scale) < 0)
      scale = -scale;
    // keep orientation; only normalize magnitude deterministically
    for (auto& w : n)
      w *= scale;
    offset *= scale;
    return;
  }
}

// triangulation of conv(points): list of (d+1)-tuples of point indices
std::vector<std::vector<int>> triangulate(const std::vector<Point>& pts, int d);

// facets as (canonical oriented hyperplane) -> on-facet point indices
std::vector<std::vector<int>> hull_facet_point_sets(const std::vector<Point>& pts, int d,
                                                    std::vector<Point>* normals_out,
                                                    std::vector<Rat>* offsets_out)
{
  int n = static_cast<int>(pts.size());
  if (n < d + 1)
    return {};
  // enumerate candidate hyperplanes spanned by d points
  std::vector<int> sel(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    sel[static_cast<std::size_t>(i)] = i;
  std::set<std::pair<std::vector<std::string>, std::string>> seen;
  std::vector<std::vector<int>> facets;
  auto consider = [&](const std::vector<int>& idx) {
    Point normal = hyperplane_normal(pts, idx, d);
    bool zero = true;
    for (const auto& v : normal)
      if (sgn(v) != 0)
        zero = false;
    if (zero)
      return;
    Rat offset = dot(normal, pts[static_cast<std::size_t>(idx[0])]);
    // supporting test: all points on one side
    int side = 0;
    for (int i = 0; i < n; ++i) {
      Rat s = dot(normal, pts[static_cast<std::size_t>(i)]) - offset;
      if (sgn(s) == 0)
        continue;
      if (side == 0)
        side = sgn(s);
      else if (side != sgn(s))
        return;  // cuts through the set
    }
    if (side > 0) {
      for (auto& v : normal)
        v = -v;
      offset = -offset;
    }
    Point cn = normal;
    Rat coff = offset;
    canonicalize_direction(cn, coff);
    std::vector<std::string> key;
    for (const auto& v : cn)
      key.push_back(v.get_str());
    if (!seen.insert({key, coff.get_str()}).second)
      return;
    std::vector<int> on;
    for (int i = 0; i < n; ++i)
      if (sgn(dot(normal, pts[static_cast<std::size_t>(i)]) - offset) == 0)
        on.push_back(i);
    facets.push_back(std::move(on));
    if (normals_out)
      normals_out->push_back(normal);
    if (offsets_out)
      offsets_out->push_back(offset);
  };
  // combinations
  for (;;) {
    consider(sel);
    int i = d - 1;
    while (i >= 0 && sel[static_cast<std::size_t>(i)] == n - d + i)
      --i;
    if (i < 0)
      break;
    ++sel[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j)
      sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
  }
  return facets;
}

std::vector<std::vector<int>> triangulate(const std::vector<Point>& pts, int d)
{
  std::vector<std::vector<int>> simplices;
  if (d == 0) {
    if (!pts.empty())
      simplices.push_back({0});
    return simplices;
  }
  if (d == 1) {
    // segment between extreme coordinates
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
      if (pts[static_cast<std::size_t>(i)][0] < pts[static_cast<std::size_t>(lo)][0])
        lo = i;
      if (pts[static_cast<std::size_t>(i)][0] > pts[static_cast<std::size_t>(hi)][0])
        hi = i;
    }
    if (lo != hi)
      simplices.push_back({lo, hi});
    return simplices;
  }
  // apex: lexicographically smallest point
  int apex = 0;
  for (int i = 1; i < static_cast<int>(pts.size()); ++i)
    if (pts[static_cast<std::size_t>(i)] < pts[static_cast<std::size_t>(apex)])
      apex = i;
  std::vector<Point> normals;
  std::vector<Rat> offsets;
  auto facets = hull_facet_point_sets(pts, d, &normals, &offsets);
  for (std::size_t f = 0; f < facets.size(); ++f) {
    bool apex_on = false;
    for (int i : facets[f])
      if (i == apex)
        apex_on = true;
    if (apex_on)
      continue;
    // project the facet to d-1 coordinates (drop one with nonzero normal)
    int drop = 0;
    for (int j = 0; j < d; ++j)
      if (sgn(normals[f][static_cast<std::size_t>(j)]) != 0)
        drop = j;
    std::vector<Point> proj;
    for (int i : facets[f]) {
      Point q;
      for (int j = 0; j < d; ++j)
        if (j != drop)
          q.push_back(pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      proj.push_back(std::move(q));
    }
    for (const auto& sub : triangulate(proj, d - 1)) {
      std::vector<int> simplex{apex};
      for (int local : sub)
        simplex.push_back(facets[f][static_cast<std::size_t>(local)]);
      simplices.push_back(std::move(simplex));
    }
  }
  return simplices;
}

}  // namespace

Polytope make_polytope(int dim, std::vector<Point> points)
{
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("point dimension mismatch");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Polytope q;
  q.dim = dim;
  q.points = std::move(points);
  return q;
}

Polytope reduce_to_vertices(const Polytope& p)
{
  int d = p.dim;
  if (static_cast<int>(p.points.size()) < d + 2)
    return p;
  // the vertex criterion below needs a full-dimensional hull
  {
    std::vector<std::vector<Rat>> diffs;
    for (std::size_t i = 1; i < p.points.size(); ++i) {
      std::vector<Rat> row(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j)
        row[static_cast<std::size_t>(j)] = p.points[i][static_cast<std::size_t>(j)] - p.points[0][static_cast<std::size_t>(j)];
      diffs.push_back(std::move(row));
    }
    int rank = 0;
    std::vector<std::vector<Rat>> basis;
    for (auto row : diffs) {
      for (const auto& b : basis) {
        int lead = -1;
        for (int j = 0; j < d; ++j)
          if (sgn(b[static_cast<std::size_t>(j)]) != 0) {
            lead = j;
            break;
          }
        if (lead < 0 || sgn(row[static_cast<std::size_t>(lead)]) == 0)
          continue;
        Rat f = row[static_cast<std::size_t>(lead)] / b[static_cast<std::size_t>(lead)];
        for (int j = 0; j < d; ++j)
          row[static_cast<std::size_t>(j)] -= f * b[static_cast<std::size_t>(j)];
      }
      bool nonzero = false;
      for (const auto& v : row)
        if (sgn(v) != 0)
          nonzero = true;
      if (nonzero) {
        basis.push_back(std::move(row));
        ++rank;
      }
    }
    if (rank < d)
      return p;  // lower-dimensional: keep the deduplicated generators
  }
  std::vector<Point> normals;
  std::vector<Rat> offsets;
  auto facets = hull_facet_point_sets(p.points, d, &normals, &offsets);
  if (facets.empty())
    return p;
  // a point is a vertex iff the normals of its incident facets span R^d
  std::vector<Point> keep;
  for (int i = 0; i < static_cast<int>(p.points.size()); ++i) {
    std::vector<std::vector<Rat>> incident;
    for (std::size_t f = 0; f < facets.size(); ++f)
      for (int on : facets[f])
        if (on == i)
          incident.push_back(normals[f]);
    // rank of the incident normals
    int rank = 0;
    std::vector<std::vector<Rat>> basis;
    for (auto row : incident) {
      for (const auto& b : basis) {
        // eliminate with the first nonzero entry of b
        int lead = -1;
        for (int j = 0; j < d; ++j)
          if (sgn(b[static_cast<std::size_t>(j)]) != 0) {
            lead = j;
            break;
          }
        if (lead < 0 || sgn(row[static_cast<std::size_t>(lead)]) == 0)
          continue;
        Rat f2 = row[static_cast<std::size_t>(lead)] / b[static_cast<std::size_t>(lead)];
        for (int j = 0; j < d; ++j)
          row[static_cast<std::size_t>(j)] -= f2 * b[static_cast<std::size_t>(j)];
      }
      bool nonzero = false;
      for (const auto& v : row)
        if (sgn(v) != 0)
          nonzero = true;
      if (nonzero) {
        basis.push_back(std::move(row));
        ++rank;
      }
      if (rank == d)
        break;
    }
    if (rank == d)
      keep.push_back(p.points[static_cast<std::size_t>(i)]);
  }
  Polytope out;
  out.dim = d;
  out.points = std::move(keep);
  return out;
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b)
{
  if (a.dim != b.dim)
    throw std::invalid_argument("dimension mismatch in Minkowski sum");
  std::vector<Point> pts;
  pts.reserve(a.points.size() * b.points.size());
  for (const auto& p : a.points)
    for (const auto& q : b.points) {
      Point s(p);
      for (std::size_t i = 0; i < s.size(); ++i)
        s[i] += q[i];
      pts.push_back(std::move(s));
    }
  return make_polytope(a.dim, std::move(pts));
}

Rat polytope_volume(const Polytope& p)
{
  int d = p.dim;
  if (static_cast<int>(p.points.size()) < d + 1)
    return Rat(0);
  Int fact(1);
  for (int i = 2; i <= d; ++i)
    fact *= i;
  Rat vol(0);
  for (const auto& simplex : triangulate(p.points, d)) {
    std::vector<std::vector<Rat>> edges;
    for (int k = 1; k <= d; ++k) {
      std::vector<Rat> row(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j)
        row[static_cast<std::size_t>(j)] =
            p.points[static_cast<std::size_t>(simplex[static_cast<std::size_t>(k)])]
                    [static_cast<std::size_t>(j)] -
            p.points[static_cast<std::size_t>(simplex[0])][static_cast<std::size_t>(j)];
      edges.push_back(std::move(row));
    }
    Rat v = det(edges);
    if (sgn(v) < 0)
      v = -v;
    vol += v / Rat(fact);
  }
  return vol;
}

Int mixed_volume(const std::vector<Polytope>& qs)
{
  int n = static_cast<int>(qs.size());
  if (n == 0)
    throw std::invalid_argument("mixed volume of no polytopes");
  for (const auto& q : qs)
    if (q.dim != n)
      throw std::invalid_argument("mixed volume needs N polytopes in Q^N");
  auto term = [&](std::uint32_t mask) {
    Polytope sum;
    bool first = true;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j)))
        continue;
      sum = first ? qs[static_cast<std::size_t>(j)] : minkowski_sum(sum, qs[static_cast<std::size_t>(j)]);
      first = false;
    }
    Rat v = polytope_volume(sum);
    if ((n - __builtin_popcount(mask)) % 2 == 1)
      v = -v;
    return v;
  };

  // inclusion-exclusion terms evaluate independently; the reduction order
  // is fixed by mask so the result is schedule-independent
  unsigned threads = 1;
  if (const char* env = std::getenv("SDRES_THREADS")) {
    long t = std::strtol(env, nullptr, 10);
    if (t > 1)
      threads = static_cast<unsigned>(std::min<long>(t, std::thread::hardware_concurrency()));
  }
  std::uint32_t nmask = (1u << n) - 1;
  std::vector<Rat> values(nmask + 1, Rat(0));
  if (threads <= 1 || nmask < 4) {
    for (std::uint32_t mask = 1; mask <= nmask; ++mask)
      values[mask] = term(mask);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<std::uint32_t> next{1};
    for (unsigned t = 0; t < threads; ++t)
      futs.push_back(std::async(std::launch::async, [&]() {
        for (;;) {
          std::uint32_t mask = next.fetch_add(1);
          if (mask > nmask)
            return;
          values[mask] = term(mask);
        }
      }));
    for (auto& f : futs)
      f.get();
  }
  Rat total(0);
  for (std::uint32_t mask = 1; mask <= nmask; ++mask)
    total += values[mask];
  if (total.get_den() != 1)
    throw std::logic_error("mixed volume of lattice polytopes must be an integer");
  if (sgn(total) < 0)
    throw std::logic_error("mixed volume must be nonnegative");
  return total.get_num();
}

}  // namespace sdres
