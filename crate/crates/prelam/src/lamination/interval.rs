//! Transversal intervals: the leaves crossed by one chord, in traversal
//! order. The crossed set is totally ordered by separation, the finite
//! shadow of an interval of the leaf space.

use super::{AnnotatedLamination, LaminationError};
use crate::circle::{chords_cross, in_open_arc, Chord};

/// Returns the leaves crossed by the transversal `t`, ordered from the
/// `t.a` end to the `t.b` end.
///
/// Errors with `EndpointCollision` if a transversal endpoint coincides
/// with a leaf endpoint, and `EmptyInterval` when no leaf is crossed.
pub fn interval_along(
    al: &AnnotatedLamination,
    t: Chord,
) -> Result<Vec<Chord>, LaminationError> {
    let (p, q) = (t.a(), t.b());
    for &c in al.base.leaves() {
        for x in [p, q] {
            if c.has_endpoint(x) {
                return Err(LaminationError::EndpointCollision { chord: c, point: x });
            }
        }
    }
    let mut crossed: Vec<(Chord, crate::rat::Rat, crate::rat::Rat)> = Vec::new();
    for &c in al.base.leaves() {
        if !chords_cross(t, c) {
            continue;
        }
        // One endpoint on each side of t; u on the arc (p -> q).
        let (u, v) = if in_open_arc(c.a(), p, q) {
            (c.a(), c.b())
        } else {
            (c.b(), c.a())
        };
        crossed.push((c, p.ccw_distance(u), q.ccw_distance(v)));
    }
    if crossed.is_empty() {
        return Err(LaminationError::EmptyInterval);
    }
    // Traversal order from p: primary key is the side-arc position of the
    // (p -> q)-side endpoint; leaves hanging off a shared endpoint are
    // tie-broken by the far endpoint, nearer to p first.
    crossed.sort_by(|x, y| x.1.cmp(&y.1).then(y.2.cmp(&x.2)));
    Ok(crossed.into_iter().map(|(c, _, _)| c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::chord;
    use crate::lamination::{AnnotatedLamination, FiniteLamination};
    use crate::rat::rat;

    fn al(pairs: &[(i128, i128, i128, i128)]) -> AnnotatedLamination {
        AnnotatedLamination::new(
            FiniteLamination::new(
                pairs
                    .iter()
                    .map(|&(a, b, c, d)| chord(rat(a, b), rat(c, d)).unwrap())
                    .collect(),
            )
            .unwrap(),
            Vec::new(),
            Vec::new(),
            0,
        )
        .unwrap()
    }

    #[test]
    fn nested_chain_ordered_outermost_first() {
        let l = al(&[(0, 1, 1, 2), (1, 8, 3, 8), (3, 16, 5, 16)]);
        let t = chord(rat(1, 4), rat(3, 4)).unwrap();
        let order = interval_along(&l, t).unwrap();
        // From t.a = 1/4 (innermost side) outward to t.b = 3/4.
        assert_eq!(
            order,
            vec![
                chord(rat(3, 16), rat(5, 16)).unwrap(),
                chord(rat(1, 8), rat(3, 8)).unwrap(),
                chord(rat(0, 1), rat(1, 2)).unwrap(),
            ]
        );
    }

    #[test]
    fn separation_is_respected_between_any_triple() {
        let l = al(&[(0, 1, 1, 2), (1, 8, 3, 8), (3, 16, 5, 16)]);
        let t = chord(rat(1, 4), rat(3, 4)).unwrap();
        let order = interval_along(&l, t).unwrap();
        for i in 0..order.len() {
            for k in i + 2..order.len() {
                for j in i + 1..k {
                    let mid = order[j];
                    let sep = crate::circle::separates(mid, order[i].a(), order[k].a())
                        .unwrap_or(true);
                    assert!(sep, "middle leaf must separate the outer two");
                }
            }
        }
    }

    #[test]
    fn empty_and_collision_errors() {
        let l = al(&[(0, 1, 1, 4)]);
        let t = chord(rat(1, 2), rat(3, 4)).unwrap();
        assert!(matches!(
            interval_along(&l, t),
            Err(LaminationError::EmptyInterval)
        ));
        let t2 = chord(rat(0, 1), rat(1, 2)).unwrap();
        assert!(matches!(
            interval_along(&l, t2),
            Err(LaminationError::EndpointCollision { .. })
        ));
    }
}
