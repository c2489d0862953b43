use serde::Serialize;

/// Geographic point, longitude/latitude in degrees.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Point {
    pub lon: f64,
    pub lat: f64,
}

impl Point {
    pub fn new(lon: f64, lat: f64) -> Self {
        Point { lon, lat }
    }

    pub fn in_valid_range(&self) -> bool {
        self.lon.is_finite()
            && self.lat.is_finite()
            && (-180.0..=180.0).contains(&self.lon)
            && (-90.0..=90.0).contains(&self.lat)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundingBox {
    pub min_lon: f64,
    pub min_lat: f64,
    pub max_lon: f64,
    pub max_lat: f64,
}

impl BoundingBox {
    pub fn empty() -> Self {
        BoundingBox {
            min_lon: f64::INFINITY,
            min_lat: f64::INFINITY,
            max_lon: f64::NEG_INFINITY,
            max_lat: f64::NEG_INFINITY,
        }
    }

    pub fn extend(&mut self, p: Point) {
        self.min_lon = self.min_lon.min(p.lon);
        self.min_lat = self.min_lat.min(p.lat);
        self.max_lon = self.max_lon.max(p.lon);
        self.max_lat = self.max_lat.max(p.lat);
    }

    pub fn merge(&self, other: &BoundingBox) -> BoundingBox {
        BoundingBox {
            min_lon: self.min_lon.min(other.min_lon),
            min_lat: self.min_lat.min(other.min_lat),
            max_lon: self.max_lon.max(other.max_lon),
            max_lat: self.max_lat.max(other.max_lat),
        }
    }

    pub fn contains_point(&self, p: Point) -> bool {
        p.lon >= self.min_lon && p.lon <= self.max_lon && p.lat >= self.min_lat && p.lat <= self.max_lat
    }

    pub fn intersects(&self, other: &BoundingBox) -> bool {
        self.min_lon <= other.max_lon
            && other.min_lon <= self.max_lon
            && self.min_lat <= other.max_lat
            && other.min_lat <= self.max_lat
    }

    /// Grown by `pad` degrees on every side.
    pub fn padded(&self, pad: f64) -> BoundingBox {
        BoundingBox {
            min_lon: self.min_lon - pad,
            min_lat: self.min_lat - pad,
            max_lon: self.max_lon + pad,
            max_lat: self.max_lat + pad,
        }
    }

    pub fn center(&self) -> Point {
        Point::new(
            0.5 * (self.min_lon + self.max_lon),
            0.5 * (self.min_lat + self.max_lat),
        )
    }
}

/// Closed ring of vertices. The closing vertex is stored implicitly: the
/// constructor drops a repeated last point if present.
#[derive(Clone, Debug, PartialEq)]
pub struct Ring(Vec<Point>);

impl Ring {
    pub fn new(mut points: Vec<Point>) -> Self {
        if points.len() > 1 && points.first() == points.last() {
            points.pop();
        }
        Ring(points)
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Edges as (start, end) pairs, including the closing edge.
    pub fn segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i], self.0[(i + 1) % n]))
    }

    pub fn bbox(&self) -> BoundingBox {
        let mut b = BoundingBox::empty();
        for &p in &self.0 {
            b.extend(p);
        }
        b
    }

    /// Planar shoelace area in degree² (signed; CCW positive).
    pub fn signed_area_deg2(&self) -> f64 {
        let n = self.0.len();
        if n < 3 {
            return 0.0;
        }
        let mut acc = 0.0;
        for i in 0..n {
            let a = self.0[i];
            let b = self.0[(i + 1) % n];
            acc += a.lon * b.lat - b.lon * a.lat;
        }
        acc / 2.0
    }

    /// Planar shoelace centroid; falls back to the vertex mean for
    /// degenerate (zero-area) rings.
    pub fn centroid(&self) -> Point {
        let n = self.0.len();
        let area2 = 2.0 * self.signed_area_deg2();
        if area2.abs() < 1e-30 {
            let (mut sx, mut sy) = (0.0, 0.0);
            for p in &self.0 {
                sx += p.lon;
                sy += p.lat;
            }
            return Point::new(sx / n as f64, sy / n as f64);
        }
        let (mut cx, mut cy) = (0.0, 0.0);
        for i in 0..n {
            let a = self.0[i];
            let b = self.0[(i + 1) % n];
            let cross = a.lon * b.lat - b.lon * a.lat;
            cx += (a.lon + b.lon) * cross;
            cy += (a.lat + b.lat) * cross;
        }
        Point::new(cx / (3.0 * area2), cy / (3.0 * area2))
    }

    /// Unsigned geodesic area in km² on the WGS84 spheroid.
    ///
    /// Green's theorem on the ellipsoid: the area integrand M(φ)N(φ)cosφ has
    /// the closed-form meridional antiderivative `F` below, so the area is
    /// the line integral ∮ F(φ) dλ. Edges are linear in lon/lat, matching
    /// how the source geometry is defined, and each edge segment is
    /// integrated by 8-point Gauss–Legendre quadrature (machine precision at
    /// sub-degree edge lengths).
    pub fn geodesic_area_km2(&self) -> f64 {
        let mut total = 0.0;
        for (a, b) in self.segments() {
            let dlam = (b.lon - a.lon).to_radians();
            if dlam == 0.0 {
                continue;
            }
            let ph1 = a.lat.to_radians();
            let ph2 = b.lat.to_radians();
            let mid = 0.5 * (ph1 + ph2);
            let half = 0.5 * (ph2 - ph1);
            let mut edge = 0.0;
            for (x, w) in GAUSS_LEGENDRE_8 {
                edge += w * wgs84_meridional_antiderivative(mid + half * x);
            }
            total += dlam * edge / 2.0;
        }
        total.abs() / 1.0e6
    }

    /// `true` if the point lies exactly on a ring edge.
    pub fn on_boundary(&self, p: Point) -> bool {
        self.segments().any(|(a, b)| point_on_segment(p, a, b))
    }

    /// Number of ring edges crossed by the ray from `p` toward +lon.
    /// Used by even-odd containment; boundary points are handled separately.
    pub(crate) fn crossings(&self, p: Point) -> usize {
        let mut count = 0;
        for (a, b) in self.segments() {
            if (a.lat > p.lat) != (b.lat > p.lat) {
                let x = a.lon + (p.lat - a.lat) / (b.lat - a.lat) * (b.lon - a.lon);
                if p.lon < x {
                    count += 1;
                }
            }
        }
        count
    }
}

/// WGS84 semi-major axis (m).
const WGS84_A: f64 = 6_378_137.0;
/// WGS84 flattening.
const WGS84_F: f64 = 1.0 / 298.257_223_563;

/// ∫ M(φ)·N(φ)·cosφ dφ in m², evaluated in closed form.
fn wgs84_meridional_antiderivative(phi: f64) -> f64 {
    let e2 = WGS84_F * (2.0 - WGS84_F);
    let e = e2.sqrt();
    let s = phi.sin();
    WGS84_A * WGS84_A * (1.0 - e2)
        * (s / (2.0 * (1.0 - e2 * s * s)) + ((1.0 + e * s) / (1.0 - e * s)).ln() / (4.0 * e))
}

/// Abscissae/weights for 8-point Gauss–Legendre on [-1, 1].
const GAUSS_LEGENDRE_8: [(f64, f64); 8] = [
    (-0.960_289_856_497_536_2, 0.101_228_536_290_376_26),
    (-0.796_666_477_413_626_7, 0.222_381_034_453_374_47),
    (-0.525_532_409_916_329, 0.313_706_645_877_887_3),
    (-0.183_434_642_495_649_8, 0.362_683_783_378_362),
    (0.183_434_642_495_649_8, 0.362_683_783_378_362),
    (0.525_532_409_916_329, 0.313_706_645_877_887_3),
    (0.796_666_477_413_626_7, 0.222_381_034_453_374_47),
    (0.960_289_856_497_536_2, 0.101_228_536_290_376_26),
];

fn point_on_segment(p: Point, a: Point, b: Point) -> bool {
    let cross = (b.lon - a.lon) * (p.lat - a.lat) - (b.lat - a.lat) * (p.lon - a.lon);
    if cross != 0.0 {
        return false;
    }
    let dot = (p.lon - a.lon) * (b.lon - a.lon) + (p.lat - a.lat) * (b.lat - a.lat);
    let len2 = (b.lon - a.lon).powi(2) + (b.lat - a.lat).powi(2);
    if len2 == 0.0 {
        return p == a;
    }
    (0.0..=len2).contains(&dot)
}

/// Polygon with an exterior ring and zero or more holes.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon {
    pub exterior: Ring,
    pub holes: Vec<Ring>,
}

impl Polygon {
    pub fn new(exterior: Ring, holes: Vec<Ring>) -> Self {
        Polygon { exterior, holes }
    }

    pub fn bbox(&self) -> BoundingBox {
        self.exterior.bbox()
    }

    pub fn rings(&self) -> impl Iterator<Item = &Ring> {
        std::iter::once(&self.exterior).chain(self.holes.iter())
    }

    /// Even-odd containment, boundary inclusive (points on any ring edge,
    /// including hole edges, count as contained).
    pub fn contains(&self, p: Point) -> bool {
        if !self.bbox().contains_point(p) {
            return false;
        }
        if self.rings().any(|r| r.on_boundary(p)) {
            return true;
        }
        let crossings: usize = self.rings().map(|r| r.crossings(p)).sum();
        crossings % 2 == 1
    }

    pub fn geodesic_area_km2(&self) -> f64 {
        let ext = self.exterior.geodesic_area_km2();
        let holes: f64 = self.holes.iter().map(Ring::geodesic_area_km2).sum();
        (ext - holes).max(0.0)
    }

    /// Planar unsigned area in degree², holes subtracted. Used for centroid
    /// weighting and degeneracy checks.
    pub fn planar_area_deg2(&self) -> f64 {
        let ext = self.exterior.signed_area_deg2().abs();
        let holes: f64 = self.holes.iter().map(|h| h.signed_area_deg2().abs()).sum();
        (ext - holes).max(0.0)
    }

    /// Area-weighted centroid (exterior minus holes) in coordinate space.
    pub fn centroid(&self) -> Point {
        let ea = self.exterior.signed_area_deg2().abs();
        let ec = self.exterior.centroid();
        let mut wx = ea * ec.lon;
        let mut wy = ea * ec.lat;
        let mut wsum = ea;
        for h in &self.holes {
            let ha = h.signed_area_deg2().abs();
            let hc = h.centroid();
            wx -= ha * hc.lon;
            wy -= ha * hc.lat;
            wsum -= ha;
        }
        if wsum.abs() < 1e-30 {
            return ec;
        }
        Point::new(wx / wsum, wy / wsum)
    }
}

/// Tract geometry: polygon or multi-part polygon in geographic coordinates.
#[derive(Clone, Debug, PartialEq)]
pub enum Geometry {
    Polygon(Polygon),
    MultiPolygon(Vec<Polygon>),
}

impl Geometry {
    pub fn parts(&self) -> &[Polygon] {
        match self {
            Geometry::Polygon(p) => std::slice::from_ref(p),
            Geometry::MultiPolygon(ps) => ps,
        }
    }

    pub fn bbox(&self) -> BoundingBox {
        let mut b = BoundingBox::empty();
        for part in self.parts() {
            b = b.merge(&part.bbox());
        }
        b
    }

    pub fn contains(&self, p: Point) -> bool {
        self.parts().iter().any(|poly| poly.contains(p))
    }

    pub fn geodesic_area_km2(&self) -> f64 {
        self.parts().iter().map(Polygon::geodesic_area_km2).sum()
    }

    /// Area-weighted centroid across all parts.
    pub fn centroid(&self) -> Point {
        let parts = self.parts();
        if parts.len() == 1 {
            return parts[0].centroid();
        }
        let (mut wx, mut wy, mut wsum) = (0.0, 0.0, 0.0);
        for poly in parts {
            let a = poly.planar_area_deg2();
            let c = poly.centroid();
            wx += a * c.lon;
            wy += a * c.lat;
            wsum += a;
        }
        if wsum < 1e-30 {
            // All parts degenerate; average part centroids.
            let n = parts.len() as f64;
            let (sx, sy) = parts
                .iter()
                .map(Polygon::centroid)
                .fold((0.0, 0.0), |(x, y), c| (x + c.lon, y + c.lat));
            return Point::new(sx / n, sy / n);
        }
        Point::new(wx / wsum, wy / wsum)
    }

    /// Degenerate when every part has (planar) zero area.
    pub fn is_degenerate(&self) -> bool {
        self.parts().iter().all(|p| p.planar_area_deg2() == 0.0)
    }

    /// All boundary segments of all rings of all parts.
    pub fn boundary_segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.parts()
            .iter()
            .flat_map(|poly| poly.rings().flat_map(|r| r.segments()))
    }
}

/// Axis-aligned rectangle polygon; handy for fixtures and the synthetic grid.
pub fn rect(min_lon: f64, min_lat: f64, max_lon: f64, max_lat: f64) -> Polygon {
    Polygon::new(
        Ring::new(vec![
            Point::new(min_lon, min_lat),
            Point::new(max_lon, min_lat),
            Point::new(max_lon, max_lat),
            Point::new(min_lon, max_lat),
        ]),
        vec![],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // Expected geodesic areas computed independently by adaptive quadrature
    // of the WGS84 area integrand ∬ M(φ)N(φ)cosφ dλ dφ over each region.
    #[test]
    fn geodesic_area_squares() {
        let eq = rect(0.0, 0.0, 0.01, 0.01);
        assert_relative_eq!(eq.geodesic_area_km2(), 1.230907202, epsilon = 1e-6);

        let mid = rect(10.0, 45.0, 10.01, 45.01);
        assert_relative_eq!(mid.geodesic_area_km2(), 0.876163449, epsilon = 1e-6);

        let high = rect(25.0, 70.0, 25.01, 70.01);
        assert_relative_eq!(high.geodesic_area_km2(), 0.425914964, epsilon = 1e-6);
    }

    #[test]
    fn geodesic_area_triangle() {
        let tri = Polygon::new(
            Ring::new(vec![
                Point::new(-118.30, 34.00),
                Point::new(-118.28, 34.00),
                Point::new(-118.29, 34.02),
            ]),
            vec![],
        );
        assert_relative_eq!(tri.geodesic_area_km2(), 2.049350276, epsilon = 1e-6);
    }

    #[test]
    fn geodesic_area_orientation_invariant() {
        let ccw = rect(0.0, 0.0, 0.01, 0.01);
        let mut pts: Vec<Point> = ccw.exterior.points().to_vec();
        pts.reverse();
        let cw = Polygon::new(Ring::new(pts), vec![]);
        assert_relative_eq!(
            ccw.geodesic_area_km2(),
            cw.geodesic_area_km2(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn hole_subtracts_area() {
        let outer = Ring::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.01, 0.0),
            Point::new(0.01, 0.01),
            Point::new(0.0, 0.01),
        ]);
        let hole = Ring::new(vec![
            Point::new(0.004, 0.004),
            Point::new(0.006, 0.004),
            Point::new(0.006, 0.006),
            Point::new(0.004, 0.006),
        ]);
        let with_hole = Polygon::new(outer.clone(), vec![hole]);
        let solid = Polygon::new(outer, vec![]);
        assert!(with_hole.geodesic_area_km2() < solid.geodesic_area_km2());
        // Hole is 4% of the outer square.
        assert_relative_eq!(
            with_hole.geodesic_area_km2() / solid.geodesic_area_km2(),
            0.96,
            epsilon = 1e-9
        );
    }

    #[test]
    fn containment_basic() {
        let sq = rect(0.0, 0.0, 1.0, 1.0);
        assert!(sq.contains(Point::new(0.5, 0.5)));
        assert!(!sq.contains(Point::new(1.5, 0.5)));
        assert!(!sq.contains(Point::new(-0.5, 0.5)));
    }

    #[test]
    fn containment_boundary_inclusive() {
        let sq = rect(0.0, 0.0, 1.0, 1.0);
        assert!(sq.contains(Point::new(0.0, 0.5))); // edge
        assert!(sq.contains(Point::new(1.0, 1.0))); // vertex
        assert!(sq.contains(Point::new(0.5, 0.0))); // bottom edge
    }

    #[test]
    fn containment_hole_excluded_interior_boundary_included() {
        let outer = Ring::new(vec![
            Point::new(0.0, 0.0),
            Point::new(10.0, 0.0),
            Point::new(10.0, 10.0),
            Point::new(0.0, 10.0),
        ]);
        let hole = Ring::new(vec![
            Point::new(4.0, 4.0),
            Point::new(6.0, 4.0),
            Point::new(6.0, 6.0),
            Point::new(4.0, 6.0),
        ]);
        let p = Polygon::new(outer, vec![hole]);
        assert!(p.contains(Point::new(1.0, 1.0)));
        assert!(!p.contains(Point::new(5.0, 5.0))); // inside the hole
        assert!(p.contains(Point::new(4.0, 5.0))); // hole edge is boundary
    }

    #[test]
    fn centroid_of_square() {
        let sq = rect(2.0, 4.0, 4.0, 8.0);
        let c = sq.centroid();
        assert_relative_eq!(c.lon, 3.0, epsilon = 1e-12);
        assert_relative_eq!(c.lat, 6.0, epsilon = 1e-12);
    }

    #[test]
    fn multipolygon_centroid_weighted_by_area() {
        // Two squares, one 4x the area of the other.
        let small = rect(0.0, 0.0, 1.0, 1.0);
        let big = rect(10.0, 0.0, 12.0, 2.0);
        let geom = Geometry::MultiPolygon(vec![small, big]);
        let c = geom.centroid();
        // Weighted: (0.5*1 + 11*4)/5 = 8.9
        assert_relative_eq!(c.lon, 8.9, epsilon = 1e-12);
        assert_relative_eq!(c.lat, 0.9, epsilon = 1e-12);
    }

    #[test]
    fn degenerate_ring_flagged() {
        let line = Polygon::new(
            Ring::new(vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(2.0, 0.0)]),
            vec![],
        );
        assert!(Geometry::Polygon(line).is_degenerate());
        assert!(!Geometry::Polygon(rect(0.0, 0.0, 1.0, 1.0)).is_degenerate());
    }
}
