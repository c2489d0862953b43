use crate::error::{Error, Result};

use super::polygon::{BoundingBox, Geometry, Point};

const LEAF_CAPACITY: usize = 16;
const NODE_FANOUT: usize = 16;

#[derive(Clone, Copy, Debug)]
struct Node {
    bbox: BoundingBox,
    /// Offset into `entries` for leaves, into `nodes` for inner nodes.
    first: u32,
    count: u32,
    leaf: bool,
}

/// Static bounding-box tree over tract geometries, bulk-loaded with
/// sort-tile-recursive packing. Immutable after build and safely shareable
/// across workers.
#[derive(Clone, Debug)]
pub struct SpatialIndex {
    entries: Vec<(BoundingBox, u32)>,
    nodes: Vec<Node>,
    root: usize,
    /// Tracts whose geometry has zero planar area; indexed anyway.
    degenerate: Vec<usize>,
}

impl SpatialIndex {
    pub fn build(geometries: &[Geometry]) -> Result<Self> {
        if geometries.is_empty() {
            return Err(Error::Validation(
                "cannot build a spatial index over an empty tract set".into(),
            ));
        }
        let degenerate: Vec<usize> = geometries
            .iter()
            .enumerate()
            .filter(|(_, g)| g.is_degenerate())
            .map(|(i, _)| i)
            .collect();
        for (i, d) in degenerate.iter().enumerate().take(8) {
            log::warn!("tract at position {d} has degenerate (zero-area) geometry");
            if i == 7 {
                log::warn!("... ({} degenerate geometries total)", degenerate.len());
            }
        }

        let mut entries: Vec<(BoundingBox, u32)> = geometries
            .iter()
            .enumerate()
            .map(|(i, g)| (g.bbox(), i as u32))
            .collect();

        // STR packing: slice vertically by center lon, then pack each slice
        // by center lat into leaves of fixed capacity.
        let n = entries.len();
        let n_leaves = n.div_ceil(LEAF_CAPACITY);
        let n_slices = (n_leaves as f64).sqrt().ceil() as usize;
        let slice_len = n.div_ceil(n_slices.max(1));
        entries.sort_by(|a, b| {
            a.0.center()
                .lon
                .total_cmp(&b.0.center().lon)
                .then_with(|| a.1.cmp(&b.1))
        });
        for slice in entries.chunks_mut(slice_len.max(1)) {
            slice.sort_by(|a, b| {
                a.0.center()
                    .lat
                    .total_cmp(&b.0.center().lat)
                    .then_with(|| a.1.cmp(&b.1))
            });
        }

        let mut nodes: Vec<Node> = Vec::new();
        let mut level: Vec<usize> = Vec::new();
        let mut offset = 0usize;
        while offset < n {
            let count = LEAF_CAPACITY.min(n - offset);
            let bbox = entries[offset..offset + count]
                .iter()
                .fold(BoundingBox::empty(), |acc, (b, _)| acc.merge(b));
            nodes.push(Node {
                bbox,
                first: offset as u32,
                count: count as u32,
                leaf: true,
            });
            level.push(nodes.len() - 1);
            offset += count;
        }
        while level.len() > 1 {
            let mut next = Vec::with_capacity(level.len().div_ceil(NODE_FANOUT));
            for group in level.chunks(NODE_FANOUT) {
                let bbox = group
                    .iter()
                    .fold(BoundingBox::empty(), |acc, &i| acc.merge(&nodes[i].bbox));
                // Level construction is contiguous, so a group is a range.
                nodes.push(Node {
                    bbox,
                    first: group[0] as u32,
                    count: group.len() as u32,
                    leaf: false,
                });
                next.push(nodes.len() - 1);
            }
            level = next;
        }
        let root = level[0];
        Ok(SpatialIndex {
            entries,
            nodes,
            root,
            degenerate,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn degenerate(&self) -> &[usize] {
        &self.degenerate
    }

    /// Indices of tracts whose bounding box contains the point: a superset
    /// of the tracts containing it.
    pub fn query_point(&self, p: Point) -> Vec<usize> {
        let mut out = Vec::new();
        self.walk(self.root, &mut |bbox| bbox.contains_point(p), &mut out);
        out.sort_unstable();
        out
    }

    /// Indices of tracts whose bounding box intersects the rectangle.
    pub fn query_bbox(&self, rect: &BoundingBox) -> Vec<usize> {
        let mut out = Vec::new();
        self.walk(self.root, &mut |bbox| bbox.intersects(rect), &mut out);
        out.sort_unstable();
        out
    }

    fn walk(&self, node: usize, pred: &mut impl FnMut(&BoundingBox) -> bool, out: &mut Vec<usize>) {
        let n = self.nodes[node];
        if !pred(&n.bbox) {
            return;
        }
        if n.leaf {
            for (bbox, idx) in &self.entries[n.first as usize..(n.first + n.count) as usize] {
                if pred(bbox) {
                    out.push(*idx as usize);
                }
            }
        } else {
            for child in n.first as usize..(n.first + n.count) as usize {
                self.walk(child, pred, out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geo::polygon::rect;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn single_square_query() {
        let geoms = vec![Geometry::Polygon(rect(0.0, 0.0, 1.0, 1.0))];
        let index = SpatialIndex::build(&geoms).unwrap();
        assert_eq!(index.query_point(Point::new(0.5, 0.5)), vec![0]);
        assert!(index.query_point(Point::new(2.0, 2.0)).is_empty());
    }

    #[test]
    fn disjoint_squares_gap_query() {
        let geoms = vec![
            Geometry::Polygon(rect(0.0, 0.0, 1.0, 1.0)),
            Geometry::Polygon(rect(3.0, 0.0, 4.0, 1.0)),
        ];
        let index = SpatialIndex::build(&geoms).unwrap();
        // Point in the gap overlaps neither bounding box.
        assert!(index.query_point(Point::new(2.0, 0.5)).is_empty());
    }

    #[test]
    fn empty_input_rejected() {
        assert!(SpatialIndex::build(&[]).is_err());
    }

    #[test]
    fn degenerate_geometry_indexed_and_flagged() {
        let line = Geometry::Polygon(crate::geo::Polygon::new(
            crate::geo::Ring::new(vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)]),
            vec![],
        ));
        let geoms = vec![Geometry::Polygon(rect(2.0, 2.0, 3.0, 3.0)), line];
        let index = SpatialIndex::build(&geoms).unwrap();
        assert_eq!(index.degenerate(), &[1]);
        assert_eq!(index.query_point(Point::new(0.5, 0.0)), vec![1]);
    }

    // Oracle: brute-force scan over all bounding boxes.
    #[test]
    fn candidates_match_brute_force_on_random_rectangles() {
        let mut rng = StdRng::seed_from_u64(7);
        let geoms: Vec<Geometry> = (0..1000)
            .map(|_| {
                let x = rng.gen_range(-50.0..50.0);
                let y = rng.gen_range(-50.0..50.0);
                let w = rng.gen_range(0.1..3.0);
                let h = rng.gen_range(0.1..3.0);
                Geometry::Polygon(rect(x, y, x + w, y + h))
            })
            .collect();
        let index = SpatialIndex::build(&geoms).unwrap();
        for _ in 0..2000 {
            let p = Point::new(rng.gen_range(-55.0..55.0), rng.gen_range(-55.0..55.0));
            let mut expected: Vec<usize> = geoms
                .iter()
                .enumerate()
                .filter(|(_, g)| g.bbox().contains_point(p))
                .map(|(i, _)| i)
                .collect();
            expected.sort_unstable();
            assert_eq!(index.query_point(p), expected);
        }
    }
}
