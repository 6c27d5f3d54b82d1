//! Planar diagrams assembled crossing by crossing from twist words.
//!
//! Nothing here touches fraction arithmetic: a tangle diagram is a set of
//! crossings plus a perfect matching of their ends, and the moves act on that
//! matching directly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tangle::{Corner, Move, TwistWord};

pub const DEFAULT_CROSSING_CAP: usize = 16;


/// A strand end: a boundary point of the tangle ball, one of the four ends
/// of a crossing (counter-clockwise, ends 0 and 2 on the under-strand), or a
/// scratch point used while gluing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum End {
    Boundary(Corner),
    Crossing(usize, u8),
    Glue(u8),
}

/// A 4-ended tangle diagram.
#[derive(Clone, Debug)]
pub struct TangleDiagram {
    crossings: usize,
    arcs: BTreeMap<End, End>,
    loops: usize,
}

impl TangleDiagram {
    fn from_pairs(pairs: &[(End, End)]) -> Self {
        let mut d = Self { crossings: 0, arcs: BTreeMap::new(), loops: 0 };
        for &(a, b) in pairs {
            d.join(a, b);
        }
        d
    }

    /// Two vertical arcs, NW–SW and NE–SE.
    pub fn infinity() -> Self {
        use Corner::*;
        Self::from_pairs(&[(End::Boundary(NW), End::Boundary(SW)), (End::Boundary(NE), End::Boundary(SE))])
    }

    /// Two horizontal arcs, NW–NE and SW–SE.
    pub fn zero() -> Self {
        use Corner::*;
        Self::from_pairs(&[(End::Boundary(NW), End::Boundary(NE)), (End::Boundary(SW), End::Boundary(SE))])
    }

    /// Applies a twist word to the vertical tangle, rightmost letter first.
    pub fn from_word(w: &TwistWord) -> Self {
        let mut d = Self::infinity();
        for m in w.moves().iter().rev() {
            match *m {
                Move::H(k) => d.twist(k),
                Move::V(k) => {
                    d.reflect();
                    d.twist(k);
                    d.reflect();
                }
                Move::R => d.reflect(),
            }
        }
        d
    }

    /// Diagram of `T(p/q)` from an expansion computed locally.
    pub fn rational(p: i64, q: i64) -> Self {
        Self::from_word(&TwistWord::from_coefficients(&crate::rational::TwistCoefficients(euclid_terms(p, q))))
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings
    }

    /// The corner joined to `start` by a string of the tangle.
    pub fn strand_end(&self, start: Corner) -> Corner {
        let mut at = self.partner(End::Boundary(start));
        loop {
            match at {
                End::Boundary(c) => return c,
                End::Crossing(c, k) => at = self.partner(End::Crossing(c, (k + 2) % 4)),
                End::Glue(_) => unreachable!("glue points only exist during a sum"),
            }
        }
    }

    fn join(&mut self, a: End, b: End) {
        self.arcs.insert(a, b);
        self.arcs.insert(b, a);
    }

    fn partner(&self, a: End) -> End {
        self.arcs[&a]
    }

    fn detach(&mut self, a: End) -> End {
        let b = self.arcs.remove(&a).expect("end is attached");
        self.arcs.remove(&b);
        b
    }

    /// Glues two free ends together with a trivial arc.
    fn fuse(&mut self, x: End, y: End) {
        let px = self.partner(x);
        if px == y {
            self.detach(x);
            self.loops += 1;
            return;
        }
        let py = self.partner(y);
        self.detach(x);
        self.detach(y);
        self.join(px, py);
    }

    /// `k` half-twists of the two eastern ends; `k > 0` twists positively.
    pub fn twist(&mut self, k: i64) {
        for _ in 0..k.unsigned_abs() {
            self.half_twist(k > 0);
        }
    }

    fn half_twist(&mut self, positive: bool) {
        use Corner::*;
        let c = self.crossings;
        self.crossings += 1;
        // counter-clockwise positions around the new crossing
        let (ul, ll, lr, ur) = if positive { (3, 0, 1, 2) } else { (0, 1, 2, 3) };
        let x = |k| End::Crossing(c, k);
        let a = self.detach(End::Boundary(NE));
        if a == End::Boundary(SE) {
            self.join(x(ul), x(ll));
        } else {
            let b = self.detach(End::Boundary(SE));
            self.join(a, x(ul));
            self.join(b, x(ll));
        }
        self.join(End::Boundary(NE), x(ur));
        self.join(End::Boundary(SE), x(lr));
    }

    /// Reflection in the plane through NW, SE and the projection axis: swaps
    /// NE with SW and reverses the cyclic order at every crossing.
    pub fn reflect(&mut self) {
        let flip = |e: End| match e {
            End::Boundary(Corner::NE) => End::Boundary(Corner::SW),
            End::Boundary(Corner::SW) => End::Boundary(Corner::NE),
            End::Crossing(c, 1) => End::Crossing(c, 3),
            End::Crossing(c, 3) => End::Crossing(c, 1),
            other => other,
        };
        self.arcs = std::mem::take(&mut self.arcs)
            .into_iter()
            .map(|(a, b)| (flip(a), flip(b)))
            .collect();
    }

    /// Swaps every crossing: the diagram of the mirror tangle.
    pub fn mirror(&mut self) {
        let rot = |e: End| match e {
            End::Crossing(c, k) => End::Crossing(c, (k + 1) % 4),
            other => other,
        };
        self.arcs = std::mem::take(&mut self.arcs)
            .into_iter()
            .map(|(a, b)| (rot(a), rot(b)))
            .collect();
    }

    /// Tangle sum: `self` on the left, `other` on the right.
    pub fn sum(&self, other: &TangleDiagram) -> TangleDiagram {
        let n = self.crossings;
        let left = |e: End| match e {
            End::Boundary(Corner::NE) => End::Glue(0),
            End::Boundary(Corner::SE) => End::Glue(1),
            other => other,
        };
        let right = |e: End| match e {
            End::Boundary(Corner::NW) => End::Glue(2),
            End::Boundary(Corner::SW) => End::Glue(3),
            End::Crossing(c, k) => End::Crossing(c + n, k),
            other => other,
        };
        let mut out = TangleDiagram {
            crossings: n + other.crossings,
            arcs: BTreeMap::new(),
            loops: self.loops + other.loops,
        };
        for (&a, &b) in &self.arcs {
            out.arcs.insert(left(a), left(b));
        }
        for (&a, &b) in &other.arcs {
            out.arcs.insert(right(a), right(b));
        }
        out.fuse(End::Glue(0), End::Glue(2));
        out.fuse(End::Glue(1), End::Glue(3));
        out
    }

    /// `N(·)`: join NW to NE and SW to SE.
    pub fn numerator(&self) -> PlanarDiagram {
        let mut d = self.clone();
        d.fuse(End::Boundary(Corner::NW), End::Boundary(Corner::NE));
        d.fuse(End::Boundary(Corner::SW), End::Boundary(Corner::SE));
        PlanarDiagram::from_closed(&d)
    }

    /// `D(·)`: join NW to SW and NE to SE.
    pub fn denominator(&self) -> PlanarDiagram {
        let mut d = self.clone();
        d.fuse(End::Boundary(Corner::NW), End::Boundary(Corner::SW));
        d.fuse(End::Boundary(Corner::NE), End::Boundary(Corner::SE));
        PlanarDiagram::from_closed(&d)
    }
}

/// Euclidean expansion used by the oracle, kept apart from the engine's own.
pub(crate) fn euclid_terms(p: i64, q: i64) -> Vec<i64> {
    if q == 0 {
        return Vec::new();
    }
    let (p, q, sign) = if (p < 0) != (q < 0) && p != 0 {
        (p.abs(), q.abs(), -1)
    } else {
        (p.abs(), q.abs(), 1)
    };
    let (mut a, mut b) = (p, q);
    let mut out = Vec::new();
    while b != 0 {
        out.push(sign * (a / b));
        (a, b) = (b, a % b);
    }
    out
}

/// Which closure turns a tangle diagram into a link diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    Numerator,
    Denominator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub id: usize,
    /// Sign with respect to the orientation found by traversal.
    pub sign: i8,
    /// Edge ids counter-clockwise; ends 0 and 2 lie on the under-strand.
    pub ends: [usize; 4],
}

/// A closed link diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
    components: usize,
    #[serde(skip)]
    edge_ends: Vec<[(usize, u8); 2]>,
}

impl PlanarDiagram {
    fn from_closed(t: &TangleDiagram) -> Self {
        let mut edge_of = vec![[usize::MAX; 4]; t.crossings];
        let mut edge_ends = Vec::new();
        for (&a, &b) in &t.arcs {
            let (End::Crossing(ca, ka), End::Crossing(cb, kb)) = (a, b) else {
                unreachable!("closed diagram has only crossing ends")
            };
            if (ca, ka) < (cb, kb) {
                let e = edge_ends.len();
                edge_ends.push([(ca, ka), (cb, kb)]);
                edge_of[ca][ka as usize] = e;
                edge_of[cb][kb as usize] = e;
            }
        }
        let crossings = edge_of
            .iter()
            .enumerate()
            .map(|(id, ends)| Crossing { id, sign: 0, ends: *ends })
            .collect();
        let mut d = PlanarDiagram { crossings, free_loops: t.loops, components: 0, edge_ends };
        d.orient();
        d
    }

    /// Walks every strand, counting components and fixing crossing signs.
    fn orient(&mut self) {
        let n_edges = self.edge_ends.len();
        let mut seen = vec![false; n_edges];
        let mut entered: Vec<[Option<u8>; 2]> = vec![[None; 2]; self.crossings.len()];
        let mut cycles = 0;
        for start in 0..n_edges {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut e = start;
            let mut from = self.edge_ends[e][0];
            while !seen[e] {
                seen[e] = true;
                let (c, k) = self.other_end(e, from);
                entered[c][(k % 2) as usize] = Some(k);
                let out = (k + 2) % 4;
                e = self.crossings[c].ends[out as usize];
                from = (c, out);
            }
        }
        for (x, ins) in self.crossings.iter_mut().zip(&entered) {
            let under = ins[0].expect("under strand traversed");
            let over = ins[1].expect("over strand traversed");
            x.sign = if over == (under + 3) % 4 { 1 } else { -1 };
        }
        self.components = cycles + self.free_loops;
    }

    fn other_end(&self, e: usize, from: (usize, u8)) -> (usize, u8) {
        let [a, b] = self.edge_ends[e];
        if a == from {
            b
        } else {
            a
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn edge_count(&self) -> usize {
        self.edge_ends.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub(crate) fn edge_ends(&self, e: usize) -> [(usize, u8); 2] {
        self.edge_ends[e]
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> Self {
        let mut out = self.clone();
        for x in &mut out.crossings {
            x.ends = [x.ends[1], x.ends[2], x.ends[3], x.ends[0]];
            x.sign = -x.sign;
        }
        for ends in &mut out.edge_ends {
            for (_, k) in ends.iter_mut() {
                *k = (*k + 3) % 4;
            }
        }
        out
    }

    /// Disjoint union with an unknotted circle.
    pub fn with_extra_unknot(&self) -> Self {
        let mut out = self.clone();
        out.free_loops += 1;
        out.components += 1;
        out
    }

    /// True when the crossings and strands form one connected plane graph.
    pub fn is_connected(&self) -> bool {
        let n = self.crossings.len();
        if n == 0 {
            return self.free_loops <= 1;
        }
        if self.free_loops > 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for &e in &self.crossings[c].ends {
                for (d, _) in self.edge_ends[e] {
                    if !seen[d] {
                        seen[d] = true;
                        stack.push(d);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Plain-text edge list: one `X id sign e0 e1 e2 e3` line per crossing,
    /// then `L count` for crossingless circles.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!(
            "# {} crossings, {} components\n",
            self.crossings.len(),
            self.components
        );
        for x in &self.crossings {
            let [a, b, c, d] = x.ends;
            let _ = writeln!(s, "X {} {:+} {a} {b} {c} {d}", x.id, x.sign);
        }
        let _ = writeln!(s, "L {}", self.free_loops);
        s
    }
}

/// Builds `N(w)` or `D(w)` for a twist word, rejecting diagrams over `cap` crossings.
pub fn diagram_from_twist_word(w: &TwistWord, closure: Closure, cap: usize) -> Result<PlanarDiagram> {
    let crossings = w.crossings() as usize;
    if crossings > cap {
        return Err(Error::CrossingCapExceeded { crossings, cap });
    }
    let t = TangleDiagram::from_word(w);
    Ok(match closure {
        Closure::Numerator => t.numerator(),
        Closure::Denominator => t.denominator(),
    })
}

/// Standard 4-plat diagram of `b(p,q)`, as the numerator closure of `T(p/q)`.
pub fn fourplat_diagram(p: i64, q: i64) -> PlanarDiagram {
    TangleDiagram::rational(p, q).numerator()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_closures() {
        let unknot = TangleDiagram::infinity().numerator();
        assert_eq!((unknot.crossing_count(), unknot.components()), (0, 1));
        let unlink = TangleDiagram::zero().numerator();
        assert_eq!((unlink.crossing_count(), unlink.components()), (0, 2));
        let mut t3 = TangleDiagram::zero();
        t3.twist(3);
        let trefoil = t3.numerator();
        assert_eq!((trefoil.crossing_count(), trefoil.components()), (3, 1));
        let mut t2 = TangleDiagram::zero();
        t2.twist(2);
        assert_eq!(t2.numerator().components(), 2);
        assert_eq!(t2.denominator().components(), 1);
    }

    #[test]
    fn word_crossings() {
        let w = TwistWord(vec![Move::H(2), Move::R, Move::H(1), Move::R]);
        let d = diagram_from_twist_word(&w, Closure::Numerator, DEFAULT_CROSSING_CAP).unwrap();
        assert_eq!(d.crossing_count(), 3);
        let empty = diagram_from_twist_word(&TwistWord::default(), Closure::Numerator, 16).unwrap();
        assert_eq!((empty.crossing_count(), empty.components()), (0, 1));
        let big = TwistWord(vec![Move::H(17)]);
        assert!(matches!(
            diagram_from_twist_word(&big, Closure::Numerator, 16),
            Err(Error::CrossingCapExceeded { crossings: 17, cap: 16 })
        ));
    }

    #[test]
    fn euclid_terms_signs() {
        assert_eq!(euclid_terms(7, 3), vec![2, 3]);
        assert_eq!(euclid_terms(-1, 2), vec![0, -2]);
        assert_eq!(euclid_terms(1, 0), Vec::<i64>::new());
        assert_eq!(euclid_terms(0, 1), vec![0]);
    }

    #[test]
    fn edge_list_export() {
        let d = fourplat_diagram(3, 1);
        let text = d.to_edge_list();
        assert_eq!(text.lines().filter(|l| l.starts_with("X ")).count(), 3);
        assert!(text.ends_with("L 0\n"));
    }
}
