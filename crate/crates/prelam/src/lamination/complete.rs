//! Completion: turning accumulated non-leaf boundary geodesics into
//! leaves and shell roots so that every complementary region becomes a
//! shell or star.
//!
//! Isolated virtual chords (empty-interior regions accumulated on both
//! sides) become leaves outright. In every declared region, all virtual
//! components but one are promoted to leaves; the excluded one — the
//! component of largest minor arc gap, ties broken by smallest endpoint
//! pair — becomes the root of a new shell. A declared region with no
//! virtual component at all cannot be completed.

use super::classify::canonical_shell_order;
use super::regions::subdivide;
use super::{
    AnnotatedLamination, FiniteLamination, LaminationError, RawAnnotatedLamination, ShellSpec,
    VirtualEntry,
};
use crate::circle::{minor_arc_gap, Chord};
use std::collections::BTreeMap;

/// Runs the completion procedure.
///
/// Errors with [`LaminationError::PreconditionViolated`] when a declared
/// region has an all-leaf boundary, and with
/// [`LaminationError::NotARegion`] when a region entry does not bound a
/// face of the subdivision by leaves and virtual chords.
pub fn complete(raw: &RawAnnotatedLamination) -> Result<AnnotatedLamination, LaminationError> {
    raw.validate()?;

    let mut new_leaves: Vec<Chord> = raw.base.leaves().to_vec();
    let mut region_entries: Vec<&Vec<Chord>> = Vec::new();
    for entry in &raw.virtuals {
        match entry {
            VirtualEntry::Isolated(c) => new_leaves.push(*c),
            VirtualEntry::Region(chords) => region_entries.push(chords),
        }
    }

    // The subdivision the region entries refer to: leaves, isolated
    // chords, existing roots, and every virtual component.
    let mut system: Vec<Chord> = new_leaves.clone();
    system.extend(raw.shells.iter().map(|s| s.root));
    for chords in &region_entries {
        for &c in chords.iter() {
            if !system.contains(&c) {
                system.push(c);
            }
        }
    }
    let sub = subdivide(&system)?;
    let chord_id: BTreeMap<Chord, usize> = system
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();

    let is_leaf = |c: Chord| raw.base.contains(c) || matches!(
        raw.virtuals.iter().find(|e| matches!(e, VirtualEntry::Isolated(x) if *x == c)),
        Some(_)
    );

    let mut new_shells: Vec<ShellSpec> = raw.shells.clone();
    for chords in region_entries {
        let fmt = || chords.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        if chords.len() < 2 {
            return Err(LaminationError::NotARegion(fmt()));
        }
        let mut ids: Vec<usize> = chords.iter().map(|c| chord_id[c]).collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != chords.len() || sub.face_with_chords(&ids).is_none() {
            return Err(LaminationError::NotARegion(fmt()));
        }
        let virtuals: Vec<Chord> = chords.iter().copied().filter(|&c| !is_leaf(c)).collect();
        if virtuals.is_empty() {
            return Err(LaminationError::PreconditionViolated(fmt()));
        }
        // Exclusion policy: keep the largest-gap component as the root;
        // ties break toward the smallest endpoint pair.
        let root = *virtuals
            .iter()
            .max_by(|&&x, &&y| minor_arc_gap(x).cmp(&minor_arc_gap(y)).then(y.cmp(&x)))
            .expect("nonempty");
        for &c in &virtuals {
            if c != root {
                new_leaves.push(c);
            }
        }
        let boundary: Vec<Chord> = chords.iter().copied().filter(|&c| c != root).collect();
        let mut shell = ShellSpec { root, boundary };
        shell.boundary = canonical_shell_order(&shell);
        new_shells.push(shell);
    }

    new_leaves.sort();
    new_leaves.dedup();
    AnnotatedLamination::new(
        FiniteLamination::new(new_leaves)?,
        new_shells,
        raw.stars.clone(),
        raw.exceptions,
    )
}
