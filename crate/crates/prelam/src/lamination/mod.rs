//! Finite and annotated pre-laminations of the circle.
//!
//! A [`FiniteLamination`] is a finite set of pairwise non-crossing chords.
//! An [`AnnotatedLamination`] adds shell and star annotations: the finite,
//! desk-scale stand-in for a dense pre-lamination, where annotations carry
//! the accumulation data a dense object would exhibit in the limit.

mod classify;
mod complete;
mod interval;
mod regions;

pub use classify::{
    check_few_common_ends, check_no_bad_accumulation, classify, PropertyReport, Verdict, Witness,
};
pub use complete::complete;
pub use interval::interval_along;
pub use regions::{regions, BoundaryItem, RegionClass, RegionReport};

pub(crate) use regions::{subdivide, Subdivision};

use crate::circle::{chords_cross, in_open_arc, Chord, Pt};
use crate::rat::Rat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A finite set of pairwise non-crossing chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLamination {
    leaves: Vec<Chord>,
}

impl FiniteLamination {
    /// Builds a lamination, sorting the leaves and rejecting duplicates
    /// and crossings.
    pub fn new(mut leaves: Vec<Chord>) -> Result<Self, LaminationError> {
        leaves.sort();
        for w in leaves.windows(2) {
            if w[0] == w[1] {
                return Err(LaminationError::DuplicateLeaf(w[0]));
            }
        }
        for (i, &c1) in leaves.iter().enumerate() {
            for &c2 in &leaves[i + 1..] {
                if chords_cross(c1, c2) {
                    return Err(LaminationError::Crossing(c1, c2));
                }
            }
        }
        Ok(FiniteLamination { leaves })
    }

    pub fn empty() -> Self {
        FiniteLamination { leaves: Vec::new() }
    }

    /// The leaves, sorted by `(a, b)`.
    pub fn leaves(&self) -> &[Chord] {
        &self.leaves
    }

    pub fn contains(&self, c: Chord) -> bool {
        self.leaves.binary_search(&c).is_ok()
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    /// Rotates every leaf counterclockwise by `amount` turns.
    pub fn rotate(&self, amount: Rat) -> Self {
        let mut leaves: Vec<Chord> = self.leaves.iter().map(|c| c.rotate(amount)).collect();
        leaves.sort();
        FiniteLamination { leaves }
    }
}

/// A shell annotation: a complementary region exactly one of whose
/// boundary geodesics (the root) is not a leaf.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellSpec {
    /// The unique non-leaf boundary component.
    pub root: Chord,
    /// The leaf boundary components, listed in clockwise order along the
    /// arc joining the root's endpoints on the boundary side.
    pub boundary: Vec<Chord>,
}

impl ShellSpec {
    /// The open arc between the root endpoints containing the boundary,
    /// as `(from, to)` traversed counterclockwise. `None` if the boundary
    /// is empty or inconsistent.
    pub fn side_arc(&self) -> Option<(Pt, Pt)> {
        let first = self.boundary.first()?;
        let [a, b] = self.root.endpoints();
        if in_open_arc(first.a(), a, b) || in_open_arc(first.b(), a, b) {
            Some((a, b))
        } else {
            Some((b, a))
        }
    }

    /// All region boundary chords: the root plus the leaf components.
    pub fn all_components(&self) -> Vec<Chord> {
        let mut v = vec![self.root];
        v.extend_from_slice(&self.boundary);
        v
    }

    pub fn rotate(&self, amount: Rat) -> Self {
        ShellSpec {
            root: self.root.rotate(amount),
            boundary: self.boundary.iter().map(|c| c.rotate(amount)).collect(),
        }
    }
}

/// A star annotation: a region bounded by an ideal polygon of `k >= 3`
/// leaves whose consecutive edges share endpoints; models a k-prong
/// singularity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarSpec {
    /// Polygon edges in counterclockwise circular order.
    pub polygon: Vec<Chord>,
}

impl StarSpec {
    pub fn degree(&self) -> usize {
        self.polygon.len()
    }

    /// The shared endpoint of edges `i` and `i+1` (cyclically).
    pub fn vertex(&self, i: usize) -> Option<Pt> {
        let k = self.polygon.len();
        let e = self.polygon[i % k];
        let f = self.polygon[(i + 1) % k];
        for p in e.endpoints() {
            if f.has_endpoint(p) {
                return Some(p);
            }
        }
        None
    }

    /// Canonical rotation: start the edge list at the smallest chord.
    pub fn canonicalize(&mut self) {
        if let Some(min_pos) = self
            .polygon
            .iter()
            .enumerate()
            .min_by_key(|(_, c)| **c)
            .map(|(i, _)| i)
        {
            self.polygon.rotate_left(min_pos);
        }
    }

    pub fn rotate(&self, amount: Rat) -> Self {
        let mut s = StarSpec {
            polygon: self.polygon.iter().map(|c| c.rotate(amount)).collect(),
        };
        s.canonicalize();
        s
    }
}

/// An annotated lamination: base leaves plus shell/star annotations and an
/// explicit budget for "up to finitely many" exception clauses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedLamination {
    pub base: FiniteLamination,
    pub shells: Vec<ShellSpec>,
    pub stars: Vec<StarSpec>,
    pub exceptions: u32,
}

/// One entry of the virtual annotation of a raw lamination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VirtualEntry {
    /// An accumulated non-leaf geodesic forming its own empty-interior
    /// region; completion turns it into a leaf.
    Isolated(Chord),
    /// The full chord boundary of one complementary region; the non-leaf
    /// members are its virtual (accumulated, non-leaf) components.
    Region(Vec<Chord>),
}

/// An annotated lamination together with virtual boundary data: the input
/// of the completion procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawAnnotatedLamination {
    pub base: FiniteLamination,
    pub shells: Vec<ShellSpec>,
    pub stars: Vec<StarSpec>,
    pub exceptions: u32,
    pub virtuals: Vec<VirtualEntry>,
}

/// Errors raised across the lamination module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaminationError {
    #[error("chords {0} and {1} cross")]
    Crossing(Chord, Chord),
    #[error("duplicate leaf {0}")]
    DuplicateLeaf(Chord),
    #[error("shell root {0} is a leaf")]
    RootIsLeaf(Chord),
    #[error("shell boundary chord {0} is not a leaf")]
    ShellBoundaryNotLeaf(Chord),
    #[error("shell with root {root} has empty boundary")]
    ShellEmptyBoundary { root: Chord },
    #[error("shell boundary chord {chord} has an endpoint outside the root arc of {root}")]
    ShellBoundaryOutsideArc { root: Chord, chord: Chord },
    #[error("star polygon has {0} edges; at least 3 required")]
    StarTooSmall(usize),
    #[error("star edge {0} is not a leaf")]
    StarEdgeNotLeaf(Chord),
    #[error("star edges {0} and {1} do not share exactly one endpoint")]
    StarEdgesNotAdjacent(Chord, Chord),
    #[error("star vertices are not distinct in counterclockwise order")]
    StarVerticesNotCyclic,
    #[error("virtual chord {0} is a leaf")]
    VirtualIsLeaf(Chord),
    #[error("virtual region entry does not bound a single region: {0:?}")]
    NotARegion(Vec<String>),
    #[error("region with all-leaf boundary cannot be completed: {0:?}")]
    PreconditionViolated(Vec<String>),
    #[error("point {point} collides with an endpoint of {chord}")]
    EndpointCollision { chord: Chord, point: Pt },
    #[error("transversal crosses no leaf")]
    EmptyInterval,
}

impl AnnotatedLamination {
    /// Builds and structurally validates an annotated lamination.
    ///
    /// Validation covers non-crossing, root/leaf disjointness, boundary
    /// membership and sidedness, and polygon shape. Property-level facts
    /// (coverage, declared orders, star uniqueness, accumulation, common
    /// ends) are the business of [`classify`] and carry witnesses instead
    /// of being rejected here.
    pub fn new(
        base: FiniteLamination,
        mut shells: Vec<ShellSpec>,
        mut stars: Vec<StarSpec>,
        exceptions: u32,
    ) -> Result<Self, LaminationError> {
        // Roots must be fresh chords, non-crossing with everything.
        let mut extra: Vec<Chord> = Vec::new();
        for sh in &shells {
            if base.contains(sh.root) {
                return Err(LaminationError::RootIsLeaf(sh.root));
            }
            for &l in base.leaves() {
                if chords_cross(sh.root, l) {
                    return Err(LaminationError::Crossing(sh.root, l));
                }
            }
            for &r in &extra {
                if chords_cross(sh.root, r) {
                    return Err(LaminationError::Crossing(sh.root, r));
                }
            }
            extra.push(sh.root);
            if sh.boundary.is_empty() {
                return Err(LaminationError::ShellEmptyBoundary { root: sh.root });
            }
            for &c in &sh.boundary {
                if !base.contains(c) {
                    return Err(LaminationError::ShellBoundaryNotLeaf(c));
                }
            }
            // All boundary endpoints strictly inside one open root arc.
            let [a, b] = sh.root.endpoints();
            let first = sh.boundary[0];
            let side_ab = in_open_arc(first.a(), a, b);
            for &c in &sh.boundary {
                for p in c.endpoints() {
                    if in_open_arc(p, a, b) != side_ab || sh.root.has_endpoint(p) {
                        return Err(LaminationError::ShellBoundaryOutsideArc {
                            root: sh.root,
                            chord: c,
                        });
                    }
                }
            }
        }
        for st in &mut stars {
            let k = st.polygon.len();
            if k < 3 {
                return Err(LaminationError::StarTooSmall(k));
            }
            for &c in &st.polygon {
                if !base.contains(c) {
                    return Err(LaminationError::StarEdgeNotLeaf(c));
                }
            }
            let mut verts = Vec::with_capacity(k);
            for i in 0..k {
                let e = st.polygon[i];
                let f = st.polygon[(i + 1) % k];
                let shared: Vec<Pt> = e
                    .endpoints()
                    .into_iter()
                    .filter(|&p| f.has_endpoint(p))
                    .collect();
                if shared.len() != 1 {
                    return Err(LaminationError::StarEdgesNotAdjacent(e, f));
                }
                verts.push(shared[0]);
            }
            let distinct: BTreeSet<Pt> = verts.iter().copied().collect();
            if distinct.len() != k || !is_ccw_cyclic(&verts) {
                return Err(LaminationError::StarVerticesNotCyclic);
            }
            st.canonicalize();
        }
        shells.sort_by_key(|s| s.root);
        stars.sort_by(|s, t| s.polygon.cmp(&t.polygon));
        Ok(AnnotatedLamination {
            base,
            shells,
            stars,
            exceptions,
        })
    }

    /// All chords of the region-defining system: leaves plus shell roots.
    pub fn system_chords(&self) -> Vec<Chord> {
        let mut v = self.base.leaves().to_vec();
        v.extend(self.shells.iter().map(|s| s.root));
        v
    }

    /// True when `c` is a shell root.
    pub fn is_root(&self, c: Chord) -> bool {
        self.shells.iter().any(|s| s.root == c)
    }

    /// Index of the star having `c` as a polygon edge, if any.
    pub fn star_of_edge(&self, c: Chord) -> Option<usize> {
        self.stars.iter().position(|s| s.polygon.contains(&c))
    }

    /// Rotates the whole structure counterclockwise by `amount` turns.
    pub fn rotate(&self, amount: Rat) -> Self {
        AnnotatedLamination::new(
            self.base.rotate(amount),
            self.shells.iter().map(|s| s.rotate(amount)).collect(),
            self.stars.iter().map(|s| s.rotate(amount)).collect(),
            self.exceptions,
        )
        .expect("rotation preserves structural validity")
    }

    /// Re-expresses the lamination as completion input: each shell becomes
    /// a region entry whose only non-leaf member is its root.
    pub fn to_raw(&self) -> RawAnnotatedLamination {
        let virtuals = self
            .shells
            .iter()
            .map(|s| VirtualEntry::Region(s.all_components()))
            .collect();
        RawAnnotatedLamination {
            base: self.base.clone(),
            shells: Vec::new(),
            stars: self.stars.clone(),
            exceptions: self.exceptions,
            virtuals,
        }
    }
}

impl RawAnnotatedLamination {
    /// Structural validation of the virtual entries on top of the
    /// annotated-lamination checks.
    pub fn validate(&self) -> Result<(), LaminationError> {
        let al = AnnotatedLamination::new(
            self.base.clone(),
            self.shells.clone(),
            self.stars.clone(),
            self.exceptions,
        )?;
        let mut non_leaf: Vec<Chord> = al.shells.iter().map(|s| s.root).collect();
        let mut check_fresh = |c: Chord, non_leaf: &mut Vec<Chord>| -> Result<(), LaminationError> {
            if self.base.contains(c) {
                return Err(LaminationError::VirtualIsLeaf(c));
            }
            for &l in self.base.leaves() {
                if chords_cross(c, l) {
                    return Err(LaminationError::Crossing(c, l));
                }
            }
            for &o in non_leaf.iter() {
                if o != c && chords_cross(c, o) {
                    return Err(LaminationError::Crossing(c, o));
                }
            }
            non_leaf.push(c);
            Ok(())
        };
        for entry in &self.virtuals {
            match entry {
                VirtualEntry::Isolated(c) => check_fresh(*c, &mut non_leaf)?,
                VirtualEntry::Region(chords) => {
                    for &c in chords {
                        if !self.base.contains(c) {
                            check_fresh(c, &mut non_leaf)?;
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// True when the point sequence is in strictly counterclockwise circular
/// order (some rotation is sorted ascending).
pub(crate) fn is_ccw_cyclic(pts: &[Pt]) -> bool {
    let n = pts.len();
    if n < 3 {
        return true;
    }
    let mut descents = 0;
    for i in 0..n {
        if pts[(i + 1) % n] <= pts[i] {
            descents += 1;
        }
    }
    descents == 1
}

// --- JSON file form -------------------------------------------------------

/// Serialization form of a lamination file: leaves plus annotations, with
/// virtual entries for completion inputs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LaminationFile {
    pub leaves: Vec<Chord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub shells: Vec<ShellSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub stars: Vec<StarSpec>,
    #[serde(default, rename = "virtual", skip_serializing_if = "Vec::is_empty")]
    pub virtuals: Vec<VirtualEntry>,
    #[serde(default)]
    pub exceptions: u32,
}

impl From<&AnnotatedLamination> for LaminationFile {
    fn from(al: &AnnotatedLamination) -> Self {
        LaminationFile {
            leaves: al.base.leaves().to_vec(),
            shells: al.shells.clone(),
            stars: al.stars.clone(),
            virtuals: Vec::new(),
            exceptions: al.exceptions,
        }
    }
}

impl From<&RawAnnotatedLamination> for LaminationFile {
    fn from(raw: &RawAnnotatedLamination) -> Self {
        LaminationFile {
            leaves: raw.base.leaves().to_vec(),
            shells: raw.shells.clone(),
            stars: raw.stars.clone(),
            virtuals: raw.virtuals.clone(),
            exceptions: raw.exceptions,
        }
    }
}

impl LaminationFile {
    pub fn into_annotated(self) -> Result<AnnotatedLamination, LaminationError> {
        AnnotatedLamination::new(
            FiniteLamination::new(self.leaves)?,
            self.shells,
            self.stars,
            self.exceptions,
        )
    }

    pub fn into_raw(self) -> Result<RawAnnotatedLamination, LaminationError> {
        let raw = RawAnnotatedLamination {
            base: FiniteLamination::new(self.leaves)?,
            shells: self.shells,
            stars: self.stars,
            exceptions: self.exceptions,
            virtuals: self.virtuals,
        };
        raw.validate()?;
        Ok(raw)
    }
}
