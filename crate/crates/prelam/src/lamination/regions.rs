//! Region decomposition of the disc by a non-crossing chord system.
//!
//! Implemented as a half-edge (rotation system) traversal: vertices are
//! the chord endpoints on the circle, edges are the chords plus the circle
//! arcs between consecutive endpoints, and faces are recovered by walking
//! each half-edge to the clockwise predecessor of its twin. For `n` chords
//! the disc always splits into exactly `n + 1` regions.

use super::{FiniteLamination, LaminationError};
use crate::circle::{chords_cross, Arc, Chord, Pt};
use serde::Serialize;

/// One item of a region boundary: a chord or a circle arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BoundaryItem {
    Chord(Chord),
    Arc(Arc),
}

/// Structural classification of a region of a bare chord system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegionClass {
    /// At most one chord on the boundary.
    ArcGap,
    /// Two or more chords, no annotation information available.
    UnannotatedPolygon,
}

/// One complementary region of the disc minus the chord system.
#[derive(Debug, Clone, Serialize)]
pub struct RegionReport {
    /// Boundary chords, sorted.
    pub chords: Vec<Chord>,
    /// Cyclic alternation of chords and merged circle arcs.
    pub boundary: Vec<BoundaryItem>,
    pub classification: RegionClass,
}

/// A face of the internal subdivision, by chord indices.
#[derive(Debug, Clone)]
pub(crate) struct Face {
    /// Indices into the chord list, sorted.
    pub chord_ids: Vec<usize>,
    /// Boundary walk (chords by index, arcs merged).
    pub items: Vec<FaceItem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum FaceItem {
    Chord(usize),
    Arc(Pt, Pt),
}

/// Planar subdivision of the disc by a non-crossing chord system.
#[derive(Debug, Clone)]
pub(crate) struct Subdivision {
    pub chords: Vec<Chord>,
    pub faces: Vec<Face>,
    /// For each chord, the two adjacent face indices.
    pub chord_faces: Vec<[usize; 2]>,
}

impl Subdivision {
    /// The face on the other side of chord `cid` from face `fid`.
    pub fn across(&self, cid: usize, fid: usize) -> usize {
        let [x, y] = self.chord_faces[cid];
        if x == fid {
            y
        } else {
            x
        }
    }

    /// Index of the face whose boundary chord set equals `set` (sorted ids).
    pub fn face_with_chords(&self, set: &[usize]) -> Option<usize> {
        self.faces.iter().position(|f| f.chord_ids == set)
    }
}

/// Builds the subdivision, validating that the chords are distinct and
/// pairwise non-crossing.
pub(crate) fn subdivide(chords: &[Chord]) -> Result<Subdivision, LaminationError> {
    for (i, &c1) in chords.iter().enumerate() {
        for &c2 in &chords[i + 1..] {
            if c1 == c2 {
                return Err(LaminationError::DuplicateLeaf(c1));
            }
            if chords_cross(c1, c2) {
                return Err(LaminationError::Crossing(c1, c2));
            }
        }
    }
    Ok(subdivide_unchecked(chords))
}

/// Subdivision without the pairwise validation pass; callers must know the
/// chords are distinct and non-crossing.
pub(crate) fn subdivide_unchecked(chords: &[Chord]) -> Subdivision {
    let n = chords.len();
    if n == 0 {
        let zero = Pt::new(crate::rat::rat(0, 1));
        return Subdivision {
            chords: Vec::new(),
            faces: vec![Face {
                chord_ids: Vec::new(),
                items: vec![FaceItem::Arc(zero, zero)],
            }],
            chord_faces: Vec::new(),
        };
    }

    // Vertices: distinct endpoints in counterclockwise order.
    let mut verts: Vec<Pt> = chords.iter().flat_map(|c| c.endpoints()).collect();
    verts.sort();
    verts.dedup();
    let m = verts.len();
    let vid = |p: Pt| verts.binary_search(&p).expect("endpoint is a vertex");

    // Half-edge layout: arc edge i joins v_i to v_{i+1 mod m}
    // (halves 2i forward/ccw, 2i+1 backward); chord j has halves
    // 2m+2j (a -> b) and 2m+2j+1 (b -> a). twin(h) = h ^ 1.
    let h_total = 2 * m + 2 * n;
    let head = |h: usize| -> usize {
        if h < 2 * m {
            let i = h / 2;
            if h % 2 == 0 {
                (i + 1) % m
            } else {
                i
            }
        } else {
            let j = (h - 2 * m) / 2;
            if h % 2 == 0 {
                vid(chords[j].b())
            } else {
                vid(chords[j].a())
            }
        }
    };

    // Rotation (counterclockwise order of outgoing half-edges) at each
    // vertex: the ccw arc direction first, then chords by increasing
    // counterclockwise distance to the far endpoint, then the cw arc.
    let mut out: Vec<Vec<(Pt, usize)>> = vec![Vec::new(); m];
    for (j, c) in chords.iter().enumerate() {
        out[vid(c.a())].push((c.b(), 2 * m + 2 * j));
        out[vid(c.b())].push((c.a(), 2 * m + 2 * j + 1));
    }
    let mut rot: Vec<Vec<usize>> = Vec::with_capacity(m);
    for (v, list) in out.iter_mut().enumerate() {
        let base = verts[v];
        list.sort_by_key(|&(other, _)| base.ccw_distance(other));
        let mut r = Vec::with_capacity(list.len() + 2);
        r.push(2 * v);
        r.extend(list.iter().map(|&(_, h)| h));
        r.push(2 * ((v + m - 1) % m) + 1);
        rot.push(r);
    }
    let mut pos = vec![usize::MAX; h_total];
    for r in &rot {
        for (i, &h) in r.iter().enumerate() {
            pos[h] = i;
        }
    }
    // Face successor: the clockwise predecessor of the twin at the head.
    let next = |h: usize| -> usize {
        let v = head(h);
        let r = &rot[v];
        let p = pos[h ^ 1];
        r[(p + r.len() - 1) % r.len()]
    };

    // Collect face orbits; identify the outer face by a clockwise arc.
    let mut face_of = vec![usize::MAX; h_total];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for h0 in 0..h_total {
        if face_of[h0] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = Vec::new();
        let mut h = h0;
        loop {
            face_of[h] = id;
            orbit.push(h);
            h = next(h);
            if h == h0 {
                break;
            }
        }
        orbits.push(orbit);
    }
    let outer = face_of[1];

    let mut faces = Vec::new();
    let mut face_index = vec![usize::MAX; orbits.len()];
    for (oid, orbit) in orbits.iter().enumerate() {
        if oid == outer {
            continue;
        }
        face_index[oid] = faces.len();
        let mut items: Vec<FaceItem> = Vec::new();
        let mut chord_ids: Vec<usize> = Vec::new();
        for &h in orbit {
            if h < 2 * m {
                let tail = verts[head(h ^ 1)];
                let tip = verts[head(h)];
                // Merge runs of consecutive arcs.
                if let Some(FaceItem::Arc(_, end)) = items.last_mut() {
                    if *end == tail {
                        *end = tip;
                        continue;
                    }
                }
                items.push(FaceItem::Arc(tail, tip));
            } else {
                let j = (h - 2 * m) / 2;
                chord_ids.push(j);
                items.push(FaceItem::Chord(j));
            }
        }
        // Merge a leading and trailing arc across the cyclic wrap.
        if items.len() > 1 {
            if let (Some(&FaceItem::Arc(s_first, e_first)), Some(&FaceItem::Arc(s_last, e_last))) =
                (items.first(), items.last())
            {
                if e_last == s_first {
                    items[0] = FaceItem::Arc(s_last, e_first);
                    items.pop();
                }
            }
        }
        chord_ids.sort_unstable();
        faces.push(Face { chord_ids, items });
    }

    let mut chord_faces = vec![[usize::MAX; 2]; n];
    for j in 0..n {
        let f0 = face_index[face_of[2 * m + 2 * j]];
        let f1 = face_index[face_of[2 * m + 2 * j + 1]];
        debug_assert!(f0 != usize::MAX && f1 != usize::MAX && f0 != f1);
        chord_faces[j] = [f0, f1];
    }

    Subdivision {
        chords: chords.to_vec(),
        faces,
        chord_faces,
    }
}

/// All complementary regions of the chord system; for `n` chords there are
/// exactly `n + 1` of them.
pub fn regions(l: &FiniteLamination) -> Result<Vec<RegionReport>, LaminationError> {
    let sub = subdivide(l.leaves())?;
    Ok(sub
        .faces
        .iter()
        .map(|f| {
            let chords: Vec<Chord> = f.chord_ids.iter().map(|&j| sub.chords[j]).collect();
            let boundary = f
                .items
                .iter()
                .map(|it| match *it {
                    FaceItem::Chord(j) => BoundaryItem::Chord(sub.chords[j]),
                    FaceItem::Arc(s, e) => BoundaryItem::Arc(Arc::new(s, e)),
                })
                .collect();
            let classification = if chords.len() <= 1 {
                RegionClass::ArcGap
            } else {
                RegionClass::UnannotatedPolygon
            };
            RegionReport {
                chords,
                boundary,
                classification,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::chord;
    use crate::rat::rat;

    fn lam(pairs: &[(i128, i128, i128, i128)]) -> FiniteLamination {
        FiniteLamination::new(
            pairs
                .iter()
                .map(|&(a, b, c, d)| chord(rat(a, b), rat(c, d)).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn empty_disc_is_one_region() {
        let r = regions(&FiniteLamination::empty()).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].chords.is_empty());
    }

    #[test]
    fn ideal_triangle_gives_four_regions() {
        let l = lam(&[(0, 1, 1, 3), (1, 3, 2, 3), (2, 3, 1, 1)]);
        let r = regions(&l).unwrap();
        assert_eq!(r.len(), 4);
        let center = r.iter().filter(|x| x.chords.len() == 3).count();
        let gaps = r.iter().filter(|x| x.chords.len() == 1).count();
        assert_eq!((center, gaps), (1, 3));
    }

    #[test]
    fn nested_pair_gives_three_regions() {
        let l = lam(&[(0, 1, 1, 2), (1, 8, 3, 8)]);
        let r = regions(&l).unwrap();
        assert_eq!(r.len(), 3);
        // The middle region sees both chords.
        assert!(r.iter().any(|x| x.chords.len() == 2));
    }

    #[test]
    fn count_is_always_n_plus_one() {
        let l = lam(&[
            (0, 1, 1, 2),
            (1, 16, 7, 16),
            (1, 8, 3, 8),
            (9, 16, 15, 16),
            (5, 8, 7, 8),
            (1, 2, 15, 16),
        ]);
        assert_eq!(regions(&l).unwrap().len(), 7);
    }

    #[test]
    fn crossing_is_rejected() {
        let leaves = vec![
            chord(rat(0, 1), rat(1, 2)).unwrap(),
            chord(rat(1, 4), rat(3, 4)).unwrap(),
        ];
        assert!(FiniteLamination::new(leaves).is_err());
    }
}
