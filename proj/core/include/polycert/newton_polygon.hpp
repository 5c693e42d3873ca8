#ifndef POLYCERT_NEWTON_POLYGON_HPP
#define POLYCERT_NEWTON_POLYGON_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include <polycert/polynomial.hpp>

namespace polycert {

// One point (i, v_p(a_i)) of the valuation diagram; only defined for a_i != 0.
struct ValuationPoint {
  std::int64_t index = 0;
  std::int64_t val = 0;
  friend auto operator<=>(const ValuationPoint&, const ValuationPoint&) = default;
};

// Directed hull edge, left to right.
struct PolygonEdge {
  ValuationPoint from;
  ValuationPoint to;
  std::int64_t dx() const { return to.index - from.index; }
  std::int64_t dy() const { return to.val - from.val; }
  bool negative_slope() const { return dy() < 0; }
  friend bool operator==(const PolygonEdge&, const PolygonEdge&) = default;
};

// Primitive lattice direction with multiplicity: an edge (dx, dy) contributes
// (dx/g, dy/g) with multiplicity g = gcd(dx, |dy|).
struct SegmentVector {
  std::int64_t dx = 1;
  std::int64_t dy = 0;
  std::int64_t multiplicity = 1;
  friend auto operator<=>(const SegmentVector&, const SegmentVector&) = default;
};

// Lower convex hull of the valuation points of a polynomial for a fixed
// prime.  Vertices run left to right with strictly increasing slopes.
class NewtonPolygon {
 public:
  NewtonPolygon(Int prime, std::vector<ValuationPoint> vertices);

  const Int& prime() const noexcept { return prime_; }
  const std::vector<ValuationPoint>& vertices() const noexcept { return vertices_; }
  std::vector<PolygonEdge> edges() const;

 private:
  Int prime_;
  std::vector<ValuationPoint> vertices_;
};

// Largest k with p^k | n.  Throws std::domain_error for n = 0 (infinite
// valuation) and std::invalid_argument when p is not prime.
std::int64_t p_adic_valuation(const Int& n, const Int& p);

// Lower hull of {(i, v_p(a_i)) : a_i != 0} by monotone chain; zero
// coefficients contribute no point.  Requires f nonzero and p prime.
NewtonPolygon newton_polygon(const Polynomial& f, const Int& p);

// Primitive-direction multiset of all hull edges, sorted by slope.
std::vector<SegmentVector> segment_vectors(const NewtonPolygon& np);

// Multiset union, merging equal primitive directions.
std::vector<SegmentVector> merge_segment_vectors(std::vector<SegmentVector> a,
                                                 const std::vector<SegmentVector>& b);

// Number of integer points on the closed segment AB:
// gcd(|x1-x2|, |y1-y2|) + 1, and 1 for a degenerate segment.
std::int64_t lattice_points_on_segment(std::int64_t x1, std::int64_t y1,
                                       std::int64_t x2, std::int64_t y2);

// Hull edges with negative slope, left to right.
std::vector<PolygonEdge> negative_slope_segments(const NewtonPolygon& np);

// Instance check of the product rule: the segment-vector multiset of g*h
// equals the union of the multisets of g and h.  A false return indicates an
// implementation bug.
bool verify_dumas(const Polynomial& g, const Polynomial& h, const Int& p);

}  // namespace polycert

#endif
