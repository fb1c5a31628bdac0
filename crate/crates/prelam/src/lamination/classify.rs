//! The property suite of annotated laminations: density at a resolution,
//! region coverage by shells/stars, star uniqueness, accumulation shape,
//! and the common-ends ordering condition.

use super::regions::{subdivide, Subdivision};
use super::{AnnotatedLamination, LaminationError, ShellSpec};
use crate::circle::{Arc, Chord, Pt};
use crate::rat::{format_rat, Rat};
use serde::Serialize;
use std::collections::BTreeMap;

/// Outcome of a single property check; a failing verdict always carries
/// concrete witnesses.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub pass: bool,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            pass: true,
            witnesses: Vec::new(),
        }
    }

    fn from_witnesses(witnesses: Vec<Witness>) -> Self {
        Verdict {
            pass: witnesses.is_empty(),
            witnesses,
        }
    }
}

/// A concrete witness of a failing property.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// An arc of at least the requested length with no leaf endpoint.
    ArcWithoutEndpoint { arc: Arc, length: String },
    /// A multi-chord region claimed by no shell or star and adjacent to
    /// no shell root.
    UncoveredRegion { chords: Vec<Chord> },
    /// A shell whose root+boundary set bounds no region.
    ShellNotARegion { root: Chord },
    /// A star whose polygon bounds no region.
    StarNotARegion { polygon: Vec<Chord> },
    /// Two annotations claiming the same region.
    DuplicateClaim { chords: Vec<Chord> },
    /// A shell whose declared boundary order differs from the clockwise
    /// order along its root arc.
    ShellOrderMismatch {
        root: Chord,
        declared: Vec<Chord>,
        expected: Vec<Chord>,
    },
    /// A leaf belonging to two star polygons.
    SharedStarEdge { chord: Chord },
    /// A shell with a long component whose root is not among the two
    /// longest boundary components.
    ShellBadAccumulation { root: Chord, root_gap: String },
    /// A star whose two longest edges are not adjacent.
    StarBadAccumulation { polygon: Vec<Chord> },
    /// Successive leaves at a common endpoint joined by no shell or star.
    UnjoinedCommonEndPair { theta: Pt, pair: [Chord; 2] },
    /// A shell contributing more than two components at one endpoint.
    ShellTooManyCommonEnds { theta: Pt, root: Chord, chords: Vec<Chord> },
}

/// Aggregated report of the full property suite.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub density: Verdict,
    pub countability: Verdict,
    pub coverage: Verdict,
    pub star_uniqueness: Verdict,
    pub no_bad_accumulation: Verdict,
    pub few_common_ends: Verdict,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.density.pass
            && self.countability.pass
            && self.coverage.pass
            && self.star_uniqueness.pass
            && self.no_bad_accumulation.pass
            && self.few_common_ends.pass
    }
}

/// Classification of one region of the system `leaves ∪ roots`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum AnnClass {
    Shell(usize),
    Star(usize),
    /// Adjacent to a shell root from the root's non-shell side: the finite
    /// stand-in for the dense zone of leaves accumulating that root.
    Accumulation,
    ArcGap,
    Unannotated,
}

/// The region decomposition of `leaves ∪ roots` with per-face annotation
/// classification.
pub(crate) struct AnnRegions {
    pub sub: Subdivision,
    pub class: Vec<AnnClass>,
    /// Face claimed by each shell, if its components bound one.
    pub shell_face: Vec<Option<usize>>,
    pub star_face: Vec<Option<usize>>,
}

pub(crate) fn annotated_regions(al: &AnnotatedLamination) -> Result<AnnRegions, LaminationError> {
    let system = al.system_chords();
    let sub = subdivide(&system)?;
    let chord_id: BTreeMap<Chord, usize> = system
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();
    let ids_of = |chords: &[Chord]| -> Option<Vec<usize>> {
        let mut v: Vec<usize> = chords
            .iter()
            .map(|c| chord_id.get(c).copied())
            .collect::<Option<_>>()?;
        v.sort_unstable();
        v
            .windows(2)
            .all(|w| w[0] != w[1])
            .then_some(v)
    };

    let root_ids: Vec<usize> = al.shells.iter().map(|s| chord_id[&s.root]).collect();
    let mut class = vec![AnnClass::Unannotated; sub.faces.len()];
    let mut shell_face = Vec::with_capacity(al.shells.len());
    for sh in &al.shells {
        let face = ids_of(&sh.all_components()).and_then(|ids| sub.face_with_chords(&ids));
        if let Some(f) = face {
            class[f] = AnnClass::Shell(shell_face.len());
        }
        shell_face.push(face);
    }
    let mut star_face = Vec::with_capacity(al.stars.len());
    for st in &al.stars {
        let face = ids_of(&st.polygon).and_then(|ids| sub.face_with_chords(&ids));
        if let Some(f) = face {
            class[f] = AnnClass::Star(star_face.len());
        }
        star_face.push(face);
    }
    for (f, face) in sub.faces.iter().enumerate() {
        if class[f] != AnnClass::Unannotated {
            continue;
        }
        if face.chord_ids.len() <= 1 {
            class[f] = AnnClass::ArcGap;
        } else if face.chord_ids.iter().any(|id| root_ids.contains(id)) {
            class[f] = AnnClass::Accumulation;
        }
    }
    Ok(AnnRegions {
        sub,
        class,
        shell_face,
        star_face,
    })
}

/// Clockwise position key of a boundary chord along the shell arc: the
/// larger counterclockwise distance of its endpoints from the arc start.
/// Clockwise traversal visits decreasing keys.
fn shell_pos_key(from: Pt, c: Chord) -> Rat {
    let u = from.ccw_distance(c.a());
    let v = from.ccw_distance(c.b());
    if u > v {
        u
    } else {
        v
    }
}

/// The canonical clockwise order of a shell's boundary components along
/// its root arc (the branch order of the shell, before separatrix
/// expansion).
pub(crate) fn canonical_shell_order(sh: &ShellSpec) -> Vec<Chord> {
    let Some((from, _)) = sh.side_arc() else {
        return sh.boundary.clone();
    };
    let mut v = sh.boundary.clone();
    v.sort_by(|&c1, &c2| shell_pos_key(from, c2).cmp(&shell_pos_key(from, c1)));
    v
}

/// Runs the full property suite at resolution `eps` and accumulation
/// threshold `delta`.
pub fn classify(
    al: &AnnotatedLamination,
    eps: Rat,
    delta: Rat,
) -> Result<PropertyReport, LaminationError> {
    let ann = annotated_regions(al)?;
    Ok(PropertyReport {
        density: check_density(al, eps),
        countability: Verdict::pass(),
        coverage: check_coverage(al, &ann),
        star_uniqueness: check_star_uniqueness(al),
        no_bad_accumulation: check_no_bad_accumulation(al, delta),
        few_common_ends: check_few_common_ends(al),
    })
}

/// Density at resolution `eps`: every arc of length at least `eps` must
/// contain a leaf endpoint.
fn check_density(al: &AnnotatedLamination, eps: Rat) -> Verdict {
    let mut pts: Vec<Pt> = al
        .base
        .leaves()
        .iter()
        .flat_map(|c| c.endpoints())
        .collect();
    pts.sort();
    pts.dedup();
    let mut witnesses = Vec::new();
    if pts.is_empty() {
        if eps <= Rat::from_integer(1) {
            let zero = Pt::new(Rat::from_integer(0));
            witnesses.push(Witness::ArcWithoutEndpoint {
                arc: Arc::new(zero, zero),
                length: format_rat(Rat::from_integer(1)),
            });
        }
        return Verdict::from_witnesses(witnesses);
    }
    for i in 0..pts.len() {
        let a = pts[i];
        let b = pts[(i + 1) % pts.len()];
        let g = a.ccw_distance(b);
        let g = if pts.len() == 1 { Rat::from_integer(1) } else { g };
        if g > eps {
            witnesses.push(Witness::ArcWithoutEndpoint {
                arc: Arc::new(a, b),
                length: format_rat(g),
            });
        }
    }
    Verdict::from_witnesses(witnesses)
}

/// Coverage: every multi-chord region is claimed by exactly one shell or
/// star (regions standing in for a root's accumulation zone are exempt),
/// and each claimed shell's declared order matches the clockwise order.
fn check_coverage(al: &AnnotatedLamination, ann: &AnnRegions) -> Verdict {
    let mut witnesses = Vec::new();
    let mut claimed = vec![false; ann.sub.faces.len()];
    for (i, sh) in al.shells.iter().enumerate() {
        match ann.shell_face[i] {
            None => witnesses.push(Witness::ShellNotARegion { root: sh.root }),
            Some(f) => {
                if claimed[f] {
                    witnesses.push(Witness::DuplicateClaim {
                        chords: sh.all_components(),
                    });
                }
                claimed[f] = true;
                let expected = canonical_shell_order(sh);
                if sh.boundary != expected {
                    witnesses.push(Witness::ShellOrderMismatch {
                        root: sh.root,
                        declared: sh.boundary.clone(),
                        expected,
                    });
                }
            }
        }
    }
    for (i, st) in al.stars.iter().enumerate() {
        match ann.star_face[i] {
            None => witnesses.push(Witness::StarNotARegion {
                polygon: st.polygon.clone(),
            }),
            Some(f) => {
                if claimed[f] {
                    witnesses.push(Witness::DuplicateClaim {
                        chords: st.polygon.clone(),
                    });
                }
                claimed[f] = true;
            }
        }
    }
    for (f, class) in ann.class.iter().enumerate() {
        if *class == AnnClass::Unannotated {
            witnesses.push(Witness::UncoveredRegion {
                chords: ann.sub.faces[f]
                    .chord_ids
                    .iter()
                    .map(|&j| ann.sub.chords[j])
                    .collect(),
            });
        }
    }
    Verdict::from_witnesses(witnesses)
}

/// No leaf may belong to two star polygons.
fn check_star_uniqueness(al: &AnnotatedLamination) -> Verdict {
    let mut seen: BTreeMap<Chord, usize> = BTreeMap::new();
    let mut witnesses = Vec::new();
    for st in &al.stars {
        for &c in &st.polygon {
            *seen.entry(c).or_insert(0) += 1;
        }
    }
    for (c, n) in seen {
        if n > 1 {
            witnesses.push(Witness::SharedStarEdge { chord: c });
        }
    }
    Verdict::from_witnesses(witnesses)
}

/// Accumulation shape at threshold `delta`: a shell with a component
/// longer than `delta` must have its root among the two longest
/// components; a star with an edge longer than `delta` must have its two
/// longest edges adjacent. Violations beyond the exceptions budget fail.
pub fn check_no_bad_accumulation(al: &AnnotatedLamination, delta: Rat) -> Verdict {
    let mut witnesses = Vec::new();
    for sh in &al.shells {
        let root_gap = crate::circle::minor_arc_gap(sh.root);
        let gaps: Vec<Rat> = sh
            .boundary
            .iter()
            .map(|&c| crate::circle::minor_arc_gap(c))
            .collect();
        let max_gap = gaps.iter().copied().fold(root_gap, |a, b| a.max(b));
        if max_gap <= delta {
            continue;
        }
        let longer = gaps.iter().filter(|&&g| g > root_gap).count();
        if longer > 1 {
            witnesses.push(Witness::ShellBadAccumulation {
                root: sh.root,
                root_gap: format_rat(root_gap),
            });
        }
    }
    for st in &al.stars {
        let gaps: Vec<Rat> = st
            .polygon
            .iter()
            .map(|&c| crate::circle::minor_arc_gap(c))
            .collect();
        let k = gaps.len();
        let mut sorted = gaps.clone();
        sorted.sort();
        let v1 = sorted[k - 1];
        if v1 <= delta {
            continue;
        }
        let v2 = sorted[k - 2];
        let adjacent_top = (0..k).any(|i| {
            let a = gaps[i];
            let b = gaps[(i + 1) % k];
            (a == v1 && b == v2) || (a == v2 && b == v1)
        });
        if !adjacent_top {
            witnesses.push(Witness::StarBadAccumulation {
                polygon: st.polygon.clone(),
            });
        }
    }
    Verdict {
        pass: witnesses.len() <= al.exceptions as usize,
        witnesses,
    }
}

/// Common-ends condition: at every circle point, the leaves ending there,
/// sorted by their other endpoint, must be pairwise joined by shells
/// (successive boundary components) or stars (separatrixes), with each
/// shell contributing at most two components per endpoint.
pub fn check_few_common_ends(al: &AnnotatedLamination) -> Verdict {
    let mut witnesses = Vec::new();
    let mut by_end: BTreeMap<Pt, Vec<Chord>> = BTreeMap::new();
    for &c in al.base.leaves() {
        for p in c.endpoints() {
            by_end.entry(p).or_default().push(c);
        }
    }
    let shell_orders: Vec<Vec<Chord>> = al.shells.iter().map(canonical_shell_order).collect();
    for (&theta, group) in &by_end {
        for (sh, order) in al.shells.iter().zip(&shell_orders) {
            let here: Vec<Chord> = order
                .iter()
                .copied()
                .filter(|c| c.has_endpoint(theta))
                .collect();
            if here.len() > 2 {
                witnesses.push(Witness::ShellTooManyCommonEnds {
                    theta,
                    root: sh.root,
                    chords: here,
                });
            }
        }
        if group.len() < 2 {
            continue;
        }
        let mut sorted = group.clone();
        sorted.sort_by_key(|c| {
            let other = c.other_endpoint(theta).expect("leaf ends at theta");
            theta.ccw_distance(other)
        });
        for w in sorted.windows(2) {
            let (f, g) = (w[0], w[1]);
            let shell_joined = shell_orders.iter().any(|order| {
                order
                    .windows(2)
                    .any(|p| (p[0] == f && p[1] == g) || (p[0] == g && p[1] == f))
            });
            let star_joined = al.stars.iter().any(|st| {
                let k = st.polygon.len();
                (0..k).any(|i| {
                    let (a, b) = (st.polygon[i], st.polygon[(i + 1) % k]);
                    (a == f && b == g) || (a == g && b == f)
                })
            });
            if !shell_joined && !star_joined {
                witnesses.push(Witness::UnjoinedCommonEndPair {
                    theta,
                    pair: [f, g],
                });
            }
        }
    }
    Verdict::from_witnesses(witnesses)
}
