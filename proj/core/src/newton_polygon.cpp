#include <polycert/newton_polygon.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <polycert/primality.hpp>

namespace polycert {

namespace {

// Exact orientation of (a -> b -> c); positive means b lies strictly below
// the chord ac (a left turn when walking the lower hull).
Int cross(const ValuationPoint& a, const ValuationPoint& b, const ValuationPoint& c) {
  return Int(b.index - a.index) * Int(c.val - a.val) -
         Int(b.val - a.val) * Int(c.index - a.index);
}

std::int64_t valuation_unchecked(const Int& n, const Int& p) {
  Int m = abs_int(n);
  std::int64_t v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace

NewtonPolygon::NewtonPolygon(Int prime, std::vector<ValuationPoint> vertices)
    : prime_(std::move(prime)), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("NewtonPolygon: no vertices");
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (vertices_[i - 1].index >= vertices_[i].index)
      throw std::invalid_argument("NewtonPolygon: vertex indices not increasing");
  for (std::size_t i = 2; i < vertices_.size(); ++i)
    if (cross(vertices_[i - 2], vertices_[i - 1], vertices_[i]) <= 0)
      throw std::invalid_argument("NewtonPolygon: slopes not strictly increasing");
}

std::vector<PolygonEdge> NewtonPolygon::edges() const {
  std::vector<PolygonEdge> out;
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    out.push_back({vertices_[i - 1], vertices_[i]});
  return out;
}

std::int64_t p_adic_valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::domain_error("p_adic_valuation: v_p(0) is infinite");
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("p_adic_valuation: p is not prime");
  return valuation_unchecked(n, p);
}

NewtonPolygon newton_polygon(const Polynomial& f, const Int& p) {
  if (f.is_zero()) throw std::domain_error("newton_polygon: zero polynomial");
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("newton_polygon: p is not prime");

  std::vector<ValuationPoint> points;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    points.push_back({static_cast<std::int64_t>(i), valuation_unchecked(f.coeffs()[i], p)});
  }

  // Monotone chain, lower hull only; points already sorted by index.
  // Popping on cross <= 0 drops collinear interior points.
  std::vector<ValuationPoint> hull;
  for (const auto& q : points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), q) <= 0)
      hull.pop_back();
    hull.push_back(q);
  }
  return NewtonPolygon(p, std::move(hull));
}

std::vector<SegmentVector> segment_vectors(const NewtonPolygon& np) {
  std::vector<SegmentVector> out;
  for (const auto& e : np.edges()) {
    std::int64_t g = std::gcd(e.dx(), std::abs(e.dy()));
    out.push_back({e.dx() / g, e.dy() / g, g});
  }
  return merge_segment_vectors(std::move(out), {});
}

std::vector<SegmentVector> merge_segment_vectors(std::vector<SegmentVector> a,
                                                 const std::vector<SegmentVector>& b) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> merged;
  for (const auto& list : {a, b})
    for (const auto& v : list) merged[{v.dx, v.dy}] += v.multiplicity;
  std::vector<SegmentVector> out;
  for (const auto& [dir, mult] : merged) out.push_back({dir.first, dir.second, mult});
  std::sort(out.begin(), out.end(), [](const SegmentVector& u, const SegmentVector& v) {
    // ascending slope dy/dx, exact via cross-multiplication (dx > 0)
    return static_cast<__int128>(u.dy) * v.dx < static_cast<__int128>(v.dy) * u.dx;
  });
  return out;
}

std::int64_t lattice_points_on_segment(std::int64_t x1, std::int64_t y1,
                                       std::int64_t x2, std::int64_t y2) {
  return std::gcd(std::abs(x1 - x2), std::abs(y1 - y2)) + 1;
}

std::vector<PolygonEdge> negative_slope_segments(const NewtonPolygon& np) {
  std::vector<PolygonEdge> out;
  for (const auto& e : np.edges())
    if (e.negative_slope()) out.push_back(e);
  return out;
}

bool verify_dumas(const Polynomial& g, const Polynomial& h, const Int& p) {
  if (g.is_zero() || h.is_zero())
    throw std::domain_error("verify_dumas: zero polynomial");
  auto product_vectors = segment_vectors(newton_polygon(multiply(g, h), p));
  auto factor_union = merge_segment_vectors(segment_vectors(newton_polygon(g, p)),
                                            segment_vectors(newton_polygon(h, p)));
  return product_vectors == factor_union;
}

}  // namespace polycert
