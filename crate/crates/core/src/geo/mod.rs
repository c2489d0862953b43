//! Spatial primitives: polygon geometry in geographic (lon/lat) coordinates,
//! great-circle distance, a bounding-box tree, and the listing→tract spatial
//! join.
//!
//! Containment uses planar even-odd semantics on lon/lat coordinates; tracts
//! are small enough that the geodesic containment error is far below
//! geocoding noise. Areas are geodesic on the WGS84 spheroid.

mod index;
mod join;
mod polygon;

pub use index::SpatialIndex;
pub use join::{spatial_join, JoinResult};
pub use polygon::{BoundingBox, Geometry, Point, Polygon, Ring};

/// Mean Earth radius (km), IUGG value.
pub const EARTH_RADIUS_KM: f64 = 6371.0088;

/// Great-circle distance in km between two lon/lat points on the
/// mean-radius sphere.
pub fn haversine_km(a: Point, b: Point) -> f64 {
    let lat1 = a.lat.to_radians();
    let lat2 = b.lat.to_radians();
    let dlat = (b.lat - a.lat).to_radians();
    let dlon = (b.lon - a.lon).to_radians();
    let s = (dlat / 2.0).sin().powi(2) + lat1.cos() * lat2.cos() * (dlon / 2.0).sin().powi(2);
    2.0 * EARTH_RADIUS_KM * s.sqrt().min(1.0).asin()
}
