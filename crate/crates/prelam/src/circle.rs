//! Points, arcs, and chords of the unit circle, with exact predicates.
//!
//! A circle point is an exact rational angle in `[0, 1)` (full turns).
//! All comparisons are decided by rational arithmetic; chord length is
//! always measured combinatorially via [`minor_arc_gap`], never through
//! trigonometry.

use crate::rat::{format_rat, mod_one, parse_rat, Rat};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A point of the unit circle, stored as a rational angle in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pt(Rat);

impl Pt {
    /// Creates a point, reducing the angle modulo one.
    pub fn new(angle: Rat) -> Self {
        Pt(mod_one(angle))
    }

    /// The reduced angle in `[0, 1)`.
    pub fn angle(self) -> Rat {
        self.0
    }

    /// Counterclockwise rotation by `amount` turns.
    pub fn rotate(self, amount: Rat) -> Self {
        Pt::new(self.0 + amount)
    }

    /// Counterclockwise distance from `self` to `other`, in `[0, 1)`.
    pub fn ccw_distance(self, other: Pt) -> Rat {
        mod_one(other.0 - self.0)
    }
}

impl std::fmt::Display for Pt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", format_rat(self.0))
    }
}

impl Serialize for Pt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rat(self.0))
    }
}

impl<'de> Deserialize<'de> for Pt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        let r = parse_rat(&s).map_err(D::Error::custom)?;
        Ok(Pt::new(r))
    }
}

/// A counterclockwise arc from `start` to `end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub start: Pt,
    pub end: Pt,
}

impl Arc {
    pub fn new(start: Pt, end: Pt) -> Self {
        Arc { start, end }
    }

    /// Arc length in turns; zero when the endpoints coincide.
    pub fn length(self) -> Rat {
        self.start.ccw_distance(self.end)
    }

    /// True when `p` lies strictly inside the arc.
    pub fn contains_open(self, p: Pt) -> bool {
        in_open_arc(p, self.start, self.end)
    }
}

/// An unordered pair of distinct circle points; the geodesic joining them.
///
/// Stored with `a < b` so that equal chords compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    a: Pt,
    b: Pt,
}

impl Chord {
    /// Creates the chord joining two distinct points.
    pub fn new(x: Pt, y: Pt) -> Result<Self, CircleError> {
        if x == y {
            return Err(CircleError::DegenerateChord(x));
        }
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        Ok(Chord { a, b })
    }

    /// The smaller endpoint.
    pub fn a(self) -> Pt {
        self.a
    }

    /// The larger endpoint.
    pub fn b(self) -> Pt {
        self.b
    }

    pub fn endpoints(self) -> [Pt; 2] {
        [self.a, self.b]
    }

    pub fn has_endpoint(self, p: Pt) -> bool {
        self.a == p || self.b == p
    }

    /// The endpoint other than `p`, if `p` is an endpoint.
    pub fn other_endpoint(self, p: Pt) -> Option<Pt> {
        if p == self.a {
            Some(self.b)
        } else if p == self.b {
            Some(self.a)
        } else {
            None
        }
    }

    /// Rotates both endpoints counterclockwise by `amount` turns.
    pub fn rotate(self, amount: Rat) -> Self {
        Chord::new(self.a.rotate(amount), self.b.rotate(amount)).expect("rotation preserves distinctness")
    }

    /// The two open arcs cut out by the chord, as `(a -> b, b -> a)`.
    pub fn sides(self) -> (Arc, Arc) {
        (Arc::new(self.a, self.b), Arc::new(self.b, self.a))
    }
}

impl std::fmt::Display for Chord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl Serialize for Chord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Chord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [x, y]: [Pt; 2] = <[Pt; 2]>::deserialize(deserializer)?;
        Chord::new(x, y).map_err(D::Error::custom)
    }
}

/// Errors raised by circle-level predicates and constructors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CircleError {
    #[error("degenerate chord: both endpoints equal {0}")]
    DegenerateChord(Pt),
    #[error("point {point} is an endpoint of chord {chord}")]
    EndpointOfChord { chord: Chord, point: Pt },
}

/// Sign of the cyclic (counterclockwise) order of three points:
/// `+1` when `b` is met strictly before `c` walking counterclockwise
/// from `a`, `-1` for the opposite order, `0` when any two coincide.
pub fn cyclic_order(a: Pt, b: Pt, c: Pt) -> i8 {
    if a == b || b == c || a == c {
        return 0;
    }
    if a.ccw_distance(b) < a.ccw_distance(c) {
        1
    } else {
        -1
    }
}

/// True when `p` lies strictly inside the counterclockwise arc `from -> to`.
///
/// With `from == to` the open arc is the whole circle minus the point.
pub fn in_open_arc(p: Pt, from: Pt, to: Pt) -> bool {
    if p == from || p == to {
        return false;
    }
    if from == to {
        return true;
    }
    from.ccw_distance(p) < from.ccw_distance(to)
}

/// True when the two chords cross in the open disc.
///
/// Chords sharing an endpoint meet only on the boundary and do not cross;
/// crossing is equivalent to the endpoint pairs interleaving on the circle.
pub fn chords_cross(c1: Chord, c2: Chord) -> bool {
    if c1.has_endpoint(c2.a) || c1.has_endpoint(c2.b) {
        return false;
    }
    in_open_arc(c2.a, c1.a, c1.b) != in_open_arc(c2.b, c1.a, c1.b)
}

/// True when the chord separates `p` from `q` in the closed disc,
/// i.e. the two points lie on opposite open sides.
///
/// Errors if `p` or `q` is an endpoint of the chord.
pub fn separates(c: Chord, p: Pt, q: Pt) -> Result<bool, CircleError> {
    for x in [p, q] {
        if c.has_endpoint(x) {
            return Err(CircleError::EndpointOfChord { chord: c, point: x });
        }
    }
    Ok(in_open_arc(p, c.a, c.b) != in_open_arc(q, c.a, c.b))
}

/// Length of the shorter of the two arcs cut out by the chord.
///
/// This is the crate's combinatorial stand-in for chord length.
pub fn minor_arc_gap(c: Chord) -> Rat {
    let d = c.a.ccw_distance(c.b);
    let e = c.b.ccw_distance(c.a);
    if d < e {
        d
    } else {
        e
    }
}

/// Convenience constructor from raw rationals.
pub fn chord(x: Rat, y: Rat) -> Result<Chord, CircleError> {
    Chord::new(Pt::new(x), Pt::new(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p(n: i128, d: i128) -> Pt {
        Pt::new(rat(n, d))
    }

    #[test]
    fn cyclic_order_signs() {
        assert_eq!(cyclic_order(p(0, 1), p(1, 3), p(2, 3)), 1);
        assert_eq!(cyclic_order(p(0, 1), p(2, 3), p(1, 3)), -1);
        assert_eq!(cyclic_order(p(1, 2), p(1, 2), p(2, 3)), 0);
        // Wrap-around: from 3/4 counterclockwise, 1/8 comes before 1/2.
        assert_eq!(cyclic_order(p(3, 4), p(1, 8), p(1, 2)), 1);
    }

    #[test]
    fn crossing_is_interleaving() {
        let c1 = chord(rat(0, 1), rat(1, 2)).unwrap();
        let c2 = chord(rat(1, 4), rat(3, 4)).unwrap();
        let c3 = chord(rat(1, 8), rat(3, 8)).unwrap();
        assert!(chords_cross(c1, c2));
        assert!(!chords_cross(c1, c3));
        // Shared endpoint: touching on the boundary is not crossing.
        let c4 = chord(rat(0, 1), rat(3, 4)).unwrap();
        assert!(!chords_cross(c1, c4));
    }

    #[test]
    fn separation() {
        let c = chord(rat(0, 1), rat(1, 2)).unwrap();
        assert!(separates(c, p(1, 4), p(3, 4)).unwrap());
        assert!(!separates(c, p(1, 4), p(3, 8)).unwrap());
        assert!(matches!(
            separates(c, p(0, 1), p(3, 4)),
            Err(CircleError::EndpointOfChord { .. })
        ));
    }

    #[test]
    fn minor_arc() {
        assert_eq!(minor_arc_gap(chord(rat(0, 1), rat(1, 3)).unwrap()), rat(1, 3));
        assert_eq!(minor_arc_gap(chord(rat(0, 1), rat(2, 3)).unwrap()), rat(1, 3));
        assert_eq!(minor_arc_gap(chord(rat(0, 1), rat(1, 2)).unwrap()), rat(1, 2));
    }
}
