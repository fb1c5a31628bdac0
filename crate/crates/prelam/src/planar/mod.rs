//! Finite presentations of (singular) planar structures.
//!
//! A presentation is a port graph: open edges, branch switches (one trunk
//! side and an ordered list of branch slots, each carrying one branch
//! point or a separatrix pair), and declared cyclic branchings (cyclic
//! point lists with a side flag). The load-bearing representation decision
//! is the switch-tree convention: at a branching, any path between two
//! branch edges passes through the trunk side; at a cyclic branching,
//! consecutive free sides are glued through the separatrix point between
//! them, forming a ring.

mod iso;
mod orient;

pub use iso::{isomorphic, PresentationIsomorphism};
pub use orient::{orientations, OrientationReport};

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

pub type PointId = usize;
pub type EdgeId = usize;
pub type SwitchId = usize;
pub type CyclicId = usize;

/// What an edge end is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PortTarget {
    /// A free end of the structure.
    Dangle,
    /// The trunk side of a switch.
    Trunk(SwitchId),
    /// Branch slot `1` of switch `0`.
    Branch(SwitchId, usize),
    /// Gap `1` of cyclic branching `0`: the free side between cyclic
    /// points `i` and `i+1` (mod k).
    Gap(CyclicId, usize),
}

/// An open edge; samples are interior marked points ordered from
/// `ports[0]` to `ports[1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub ports: [PortTarget; 2],
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub samples: Vec<PointId>,
}

/// The points carried by one branch slot of a switch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchPoints {
    /// An ordinary branch point between the trunk side and the slot edge.
    Plain(PointId),
    /// Two separatrix points of a cyclic branching, in branch order; the
    /// slot edge leads to the free side between them.
    Pair(PointId, PointId),
}

impl BranchPoints {
    pub fn points(self) -> Vec<PointId> {
        match self {
            BranchPoints::Plain(p) => vec![p],
            BranchPoints::Pair(p, q) => vec![p, q],
        }
    }
}

/// A branch switch: one trunk port plus ordered branch slots. The branch
/// order of the switch (its branching, read left to right) is the
/// concatenation of the slot points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Switch {
    pub branches: Vec<BranchPoints>,
}

impl Switch {
    /// The flattened ordered branching of the switch.
    pub fn branch_order(&self) -> Vec<PointId> {
        self.branches.iter().flat_map(|b| b.points()).collect()
    }
}

/// Chirality flag of a cyclic branching: the side on which the branching
/// lies when a chart crosses a separatrix point in declared list order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
}

/// A declared cyclic branching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cyclic {
    pub points: Vec<PointId>,
    pub side: Side,
}

/// A finite presentation of a (singular) planar structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarPresentation {
    /// Display labels, one per point.
    pub points: Vec<String>,
    pub edges: Vec<Edge>,
    pub switches: Vec<Switch>,
    pub cyclics: Vec<Cyclic>,
}

/// Errors of the planar module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlanarError {
    #[error("structural error: {0}")]
    Structural(String),
    #[error("unknown point id {0}")]
    UnknownPoint(PointId),
    #[error("presentation exceeds the size bound ({0} points)")]
    SizeExceeded(usize),
}

/// Verdict of the axiom check with witnesses.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub pass: bool,
    pub failures: Vec<AxiomFailure>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AxiomFailure {
    /// Two cyclic branchings share a point.
    CyclicsNotDisjoint { cyclics: [CyclicId; 2], point: PointId },
    /// A cyclic branching of size below three.
    CyclicTooSmall { cyclic: CyclicId, size: usize },
    /// A switch branching meets a cyclic branching other than in two
    /// consecutive, successor-aligned points.
    BadSwitchCyclicIntersection {
        switch: SwitchId,
        cyclic: CyclicId,
        points: Vec<PointId>,
    },
    /// Removing a full cyclic branching of size k did not give k parts.
    CyclicRemovalCount {
        cyclic: CyclicId,
        expected: usize,
        got: usize,
    },
    /// Removing a non-separatrix point did not give two parts.
    PointRemovalCount { point: PointId, got: usize },
}

impl PlanarPresentation {
    /// Structural validation: port discipline (every declared switch and
    /// cyclic port consumed by exactly one edge end), well-formed point
    /// occurrences, and connectivity.
    pub fn validate(&self) -> Result<(), PlanarError> {
        let err = |m: String| Err(PlanarError::Structural(m));
        let np = self.points.len();
        // Collect all declared ports and count their uses by edge ends.
        let mut port_uses: BTreeMap<PortTarget, usize> = BTreeMap::new();
        for (s, sw) in self.switches.iter().enumerate() {
            port_uses.insert(PortTarget::Trunk(s), 0);
            for j in 0..sw.branches.len() {
                port_uses.insert(PortTarget::Branch(s, j), 0);
            }
        }
        for (c, cy) in self.cyclics.iter().enumerate() {
            for i in 0..cy.points.len() {
                port_uses.insert(PortTarget::Gap(c, i), 0);
            }
        }
        for (e, edge) in self.edges.iter().enumerate() {
            for &p in &edge.samples {
                if p >= np {
                    return Err(PlanarError::UnknownPoint(p));
                }
            }
            for &port in &edge.ports {
                match port {
                    PortTarget::Dangle => {}
                    other => match port_uses.get_mut(&other) {
                        None => return err(format!("edge {e} attaches to undeclared port {other:?}")),
                        Some(u) => *u += 1,
                    },
                }
            }
        }
        for (port, uses) in &port_uses {
            if *uses != 1 {
                return err(format!("port {port:?} used {uses} times; expected exactly once"));
            }
        }
        // Point occurrence discipline.
        let mut as_sample = vec![0usize; np];
        let mut in_switches = vec![0usize; np];
        let mut in_cyclics = vec![0usize; np];
        for edge in &self.edges {
            for &p in &edge.samples {
                as_sample[p] += 1;
            }
        }
        for sw in &self.switches {
            let order = sw.branch_order();
            let set: BTreeSet<_> = order.iter().collect();
            if set.len() != order.len() {
                return err("switch repeats a branch point".into());
            }
            for p in order {
                if p >= np {
                    return Err(PlanarError::UnknownPoint(p));
                }
                in_switches[p] += 1;
            }
        }
        for cy in &self.cyclics {
            let set: BTreeSet<_> = cy.points.iter().collect();
            if set.len() != cy.points.len() {
                return err("cyclic repeats a point".into());
            }
            for &p in &cy.points {
                if p >= np {
                    return Err(PlanarError::UnknownPoint(p));
                }
                in_cyclics[p] += 1;
            }
        }
        for p in 0..np {
            if as_sample[p] > 1 {
                return err(format!("point {p} is a sample of several edges"));
            }
            if as_sample[p] == 1 && (in_switches[p] > 0 || in_cyclics[p] > 0) {
                return err(format!("point {p} is both an edge sample and a junction point"));
            }
            if in_switches[p] > 2 {
                return err(format!("point {p} appears in more than two switches"));
            }
            if in_cyclics[p] > 1 {
                return err(format!("point {p} appears in more than one cyclic branching"));
            }
            if as_sample[p] + in_switches[p] + in_cyclics[p] == 0 {
                return err(format!("point {p} appears nowhere"));
            }
        }
        // Connectivity.
        if self.component_count(&BTreeSet::new()) > 1 {
            return err("presentation is not connected".into());
        }
        Ok(())
    }

    /// Number of connected components after removing the point set `A`.
    pub fn components_after_removal(&self, a: &[PointId]) -> Result<usize, PlanarError> {
        for &p in a {
            if p >= self.points.len() {
                return Err(PlanarError::UnknownPoint(p));
            }
        }
        Ok(self.component_count(&a.iter().copied().collect()))
    }

    /// Connectivity nodes: points, switch centers, cyclic gaps, and edge
    /// segments (one per sample-free stretch of an edge).
    fn component_count(&self, removed: &BTreeSet<PointId>) -> usize {
        // Node numbering: points | switch centers | cyclic gap nodes |
        // edge segments.
        let np = self.points.len();
        let ns = self.switches.len();
        let gap_base = np + ns;
        let mut gap_index: Vec<usize> = Vec::with_capacity(self.cyclics.len());
        let mut next = gap_base;
        for cy in &self.cyclics {
            gap_index.push(next);
            next += cy.points.len();
        }
        let seg_base = next;
        let mut seg_index: Vec<usize> = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            seg_index.push(next);
            if !self.is_fictitious(e) {
                next += e.samples.len() + 1;
            }
        }
        let total = next;

        let mut dsu = Dsu::new(total);
        let mut alive = vec![true; total];
        for &p in removed {
            alive[p] = false;
        }

        let mut link = |dsu: &mut Dsu, alive: &[bool], x: usize, y: usize| {
            if alive[x] && alive[y] {
                dsu.union(x, y);
            }
        };

        // Switch internals: plain branch points link to the center.
        for (s, sw) in self.switches.iter().enumerate() {
            for b in &sw.branches {
                if let BranchPoints::Plain(p) = *b {
                    link(&mut dsu, &alive, p, np + s);
                }
            }
        }
        // Cyclic rings: point i - gap i - point i+1.
        for (c, cy) in self.cyclics.iter().enumerate() {
            let k = cy.points.len();
            for i in 0..k {
                let g = gap_index[c] + i;
                link(&mut dsu, &alive, cy.points[i], g);
                link(&mut dsu, &alive, cy.points[(i + 1) % k], g);
            }
        }
        // Edges.
        for (e, edge) in self.edges.iter().enumerate() {
            if self.is_fictitious(edge) {
                continue;
            }
            let s0 = seg_index[e];
            // Chain of segments through the samples.
            for (i, &p) in edge.samples.iter().enumerate() {
                link(&mut dsu, &alive, s0 + i, p);
                link(&mut dsu, &alive, p, s0 + i + 1);
            }
            let last = s0 + edge.samples.len();
            for (end, &port) in edge.ports.iter().enumerate() {
                let seg = if end == 0 { s0 } else { last };
                match port {
                    PortTarget::Dangle => {}
                    PortTarget::Trunk(s) => link(&mut dsu, &alive, seg, np + s),
                    PortTarget::Branch(s, j) => match self.switches[s].branches[j] {
                        // Through a plain branch point; through the center
                        // directly for a separatrix pair (the pair's
                        // connectivity lives on its ring).
                        BranchPoints::Plain(p) => link(&mut dsu, &alive, seg, p),
                        BranchPoints::Pair(_, _) => link(&mut dsu, &alive, seg, np + s),
                    },
                    PortTarget::Gap(c, i) => link(&mut dsu, &alive, seg, gap_index[c] + i),
                }
            }
        }

        (0..total).filter(|&x| alive[x] && dsu.find(x) == x).count()
    }

    /// An edge with no interior: zero samples, both ends attached to
    /// branch slots carrying the same plain point (a leaf non-separated
    /// on both sides). Such an edge only restates the gluing the shared
    /// point already provides.
    fn is_fictitious(&self, e: &Edge) -> bool {
        if !e.samples.is_empty() {
            return false;
        }
        let slot_point = |port: PortTarget| -> Option<PointId> {
            match port {
                PortTarget::Branch(s, j) => match self.switches[s].branches[j] {
                    BranchPoints::Plain(p) => Some(p),
                    BranchPoints::Pair(_, _) => None,
                },
                _ => None,
            }
        };
        match (slot_point(e.ports[0]), slot_point(e.ports[1])) {
            (Some(p), Some(q)) => p == q,
            _ => false,
        }
    }

    /// Checks the five disconnection/order axioms of a singular planar
    /// structure presentation.
    pub fn check_axioms(&self) -> Result<AxiomReport, PlanarError> {
        self.validate()?;
        let mut failures = Vec::new();
        // (1) cyclics pairwise disjoint.
        for c1 in 0..self.cyclics.len() {
            for c2 in c1 + 1..self.cyclics.len() {
                let s1: BTreeSet<_> = self.cyclics[c1].points.iter().collect();
                if let Some(&&p) = self.cyclics[c2].points.iter().find(|p| s1.contains(p)).as_ref() {
                    failures.push(AxiomFailure::CyclicsNotDisjoint {
                        cyclics: [c1, c2],
                        point: p,
                    });
                }
            }
        }
        // (2) size at least three.
        for (c, cy) in self.cyclics.iter().enumerate() {
            if cy.points.len() < 3 {
                failures.push(AxiomFailure::CyclicTooSmall {
                    cyclic: c,
                    size: cy.points.len(),
                });
            }
        }
        // (3) switch-cyclic intersections: empty, or exactly two
        // branch-consecutive points whose branch successor matches the
        // cyclic successor direction given by the side flag.
        for (s, sw) in self.switches.iter().enumerate() {
            let order = sw.branch_order();
            for (c, cy) in self.cyclics.iter().enumerate() {
                let inter: Vec<usize> = order
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| cy.points.contains(p))
                    .map(|(i, _)| i)
                    .collect();
                if inter.is_empty() {
                    continue;
                }
                let bad = || AxiomFailure::BadSwitchCyclicIntersection {
                    switch: s,
                    cyclic: c,
                    points: inter.iter().map(|&i| order[i]).collect(),
                };
                if inter.len() != 2 || inter[1] != inter[0] + 1 {
                    failures.push(bad());
                    continue;
                }
                let (x, y) = (order[inter[0]], order[inter[1]]);
                let k = cy.points.len();
                let ix = cy.points.iter().position(|&p| p == x).expect("member");
                let expected_succ = match cy.side {
                    Side::L => cy.points[(ix + 1) % k],
                    Side::R => cy.points[(ix + k - 1) % k],
                };
                if y != expected_succ {
                    failures.push(bad());
                }
            }
        }
        // (4) removing a full cyclic of size k gives k components.
        for (c, cy) in self.cyclics.iter().enumerate() {
            let got = self.components_after_removal(&cy.points)?;
            if got != cy.points.len() {
                failures.push(AxiomFailure::CyclicRemovalCount {
                    cyclic: c,
                    expected: cy.points.len(),
                    got,
                });
            }
        }
        // (5) removing a non-separatrix point gives two components.
        let in_cyclic: BTreeSet<PointId> = self
            .cyclics
            .iter()
            .flat_map(|cy| cy.points.iter().copied())
            .collect();
        for p in 0..self.points.len() {
            if in_cyclic.contains(&p) {
                continue;
            }
            let got = self.components_after_removal(&[p])?;
            if got != 2 {
                failures.push(AxiomFailure::PointRemovalCount { point: p, got });
            }
        }
        Ok(AxiomReport {
            pass: failures.is_empty(),
            failures,
        })
    }
}

/// Plain union-find.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        // Splitting-path variant; also used immutably at count time via
        // fully compressed roots, so compress eagerly here.
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let nxt = self.parent[c];
            self.parent[c] = r;
            c = nxt;
        }
        r
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx.max(ry)] = rx.min(ry);
        }
    }
}
