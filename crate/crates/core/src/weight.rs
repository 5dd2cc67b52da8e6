//! Lattice geometry of weights: orbits, break offsets, support rectangles and
//! their Zariski closures.
//!
//! Supports are stored in lattice coordinates: an integer offset vector
//! `alpha` stands for the weight `a + alpha * b` (componentwise product), so
//! order comparisons happen in `Z`, never in the field.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{lattice_offset, GaussianRational};
use crate::gwa::GwaSpec;

/// A point `a` of `k^n`, identified with the maximal ideal `(T_1 - a_1, ..., T_n - a_n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightPoint(Vec<GaussianRational>);

impl WeightPoint {
    pub fn new(coords: Vec<GaussianRational>) -> Self {
        WeightPoint(coords)
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.0
    }

    pub fn coord(&self, i: usize) -> &GaussianRational {
        &self.0[i]
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `a + alpha * b`, the weight of `sigma^alpha(m_a)`.
    pub fn translate(&self, steps: &[GaussianRational], alpha: &[i64]) -> WeightPoint {
        WeightPoint(
            self.0
                .iter()
                .zip(steps)
                .zip(alpha)
                .map(|((a, b), &k)| a + &b.scale(&k.into()))
                .collect(),
        )
    }

    /// Lattice offset of `other` relative to `self`, if it lies in the same orbit.
    pub fn offset_to(&self, steps: &[GaussianRational], other: &WeightPoint) -> Option<Vec<i64>> {
        self.0
            .iter()
            .zip(&other.0)
            .zip(steps)
            .map(|((a, z), b)| lattice_offset(z, a, b))
            .collect()
    }
}

impl fmt::Display for WeightPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Closed integer interval with possibly infinite ends (`None`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl Interval {
    pub const FULL: Interval = Interval { lo: None, hi: None };

    pub fn new(lo: Option<i64>, hi: Option<i64>) -> Self {
        Interval { lo, hi }
    }

    pub fn finite(lo: i64, hi: i64) -> Self {
        Interval {
            lo: Some(lo),
            hi: Some(hi),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_some() && self.hi.is_some()
    }

    pub fn is_empty(&self) -> bool {
        matches!((self.lo, self.hi), (Some(l), Some(h)) if l > h)
    }

    pub fn contains(&self, k: i64) -> bool {
        self.lo.is_none_or(|l| l <= k) && self.hi.is_none_or(|h| k <= h)
    }

    pub fn shift(&self, d: i64) -> Interval {
        Interval {
            lo: self.lo.map(|l| l + d),
            hi: self.hi.map(|h| h + d),
        }
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let lo = match (self.lo, other.lo) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let hi = match (self.hi, other.hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Interval { lo, hi }
    }

    pub fn is_subset(&self, other: &Interval) -> bool {
        if self.is_empty() {
            return true;
        }
        let lo_ok = match (self.lo, other.lo) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a >= b,
        };
        let hi_ok = match (self.hi, other.hi) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a <= b,
        };
        lo_ok && hi_ok
    }

    /// Number of integers in the interval, `None` if infinite.
    pub fn len(&self) -> Option<u64> {
        match (self.lo, self.hi) {
            (Some(l), Some(h)) if l > h => Some(0),
            (Some(l), Some(h)) => Some((h - l) as u64 + 1),
            _ => None,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lo {
            Some(l) => write!(f, "[{l}, ")?,
            None => write!(f, "(-inf, ")?,
        }
        match self.hi {
            Some(h) => write!(f, "{h}]"),
            None => write!(f, "+inf)"),
        }
    }
}

/// Break offsets of the orbit through a base point, per direction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BreakData {
    offsets: Vec<Vec<i64>>,
}

impl BreakData {
    /// Sorted offsets `k` with `t_i(a_i + k b_i) = 0`.
    pub fn offsets(&self, i: usize) -> &[i64] {
        &self.offsets[i]
    }

    pub fn rank(&self) -> usize {
        self.offsets.len()
    }

    /// Smallest nonnegative break offset; `None` means `+inf`.
    pub fn k_up(&self, i: usize) -> Option<i64> {
        self.offsets[i].iter().copied().find(|&k| k >= 0)
    }

    /// Largest negative break offset; `None` means `-inf`.
    pub fn k_low(&self, i: usize) -> Option<i64> {
        self.offsets[i].iter().rev().copied().find(|&k| k < 0)
    }

    pub fn has_no_breaks(&self) -> bool {
        self.offsets.iter().all(|k| k.is_empty())
    }
}

pub fn break_positions(spec: &GwaSpec, a: &WeightPoint) -> BreakData {
    let offsets = (0..spec.rank())
        .map(|i| {
            let mut ks: Vec<i64> = spec
                .t(i)
                .distinct_roots()
                .iter()
                .filter_map(|z| lattice_offset(z, a.coord(i), spec.step(i)))
                .collect();
            ks.sort_unstable();
            ks.dedup();
            ks
        })
        .collect();
    BreakData { offsets }
}

/// `{a + alpha * b : alpha_i in intervals[i]}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportRect {
    base: WeightPoint,
    steps: Vec<GaussianRational>,
    intervals: Vec<Interval>,
}

impl SupportRect {
    pub fn new(base: WeightPoint, steps: Vec<GaussianRational>, intervals: Vec<Interval>) -> Self {
        assert_eq!(base.rank(), steps.len());
        assert_eq!(base.rank(), intervals.len());
        SupportRect {
            base,
            steps,
            intervals,
        }
    }

    pub fn base(&self) -> &WeightPoint {
        &self.base
    }

    pub fn steps(&self) -> &[GaussianRational] {
        &self.steps
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn interval(&self, i: usize) -> Interval {
        self.intervals[i]
    }

    pub fn rank(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.iter().any(Interval::is_empty)
    }

    pub fn is_finite(&self) -> bool {
        self.intervals.iter().all(Interval::is_finite)
    }

    pub fn contains_offset(&self, alpha: &[i64]) -> bool {
        self.intervals
            .iter()
            .zip(alpha)
            .all(|(iv, &k)| iv.contains(k))
    }

    pub fn contains(&self, x: &WeightPoint) -> bool {
        self.base
            .offset_to(&self.steps, x)
            .is_some_and(|alpha| self.contains_offset(&alpha))
    }

    /// Number of weights, `None` if infinite.
    pub fn size(&self) -> Option<u64> {
        self.intervals.iter().map(Interval::len).product()
    }

    pub fn weight_at(&self, alpha: &[i64]) -> WeightPoint {
        self.base.translate(&self.steps, alpha)
    }

    /// Field values `a_i + k b_i` for `k` in a finite direction interval.
    pub fn coordinate_values(&self, i: usize) -> Option<Vec<GaussianRational>> {
        let iv = self.intervals[i];
        let (lo, hi) = (iv.lo?, iv.hi?);
        Some(
            (lo..=hi)
                .map(|k| self.base.coord(i) + &self.steps[i].scale(&k.into()))
                .collect(),
        )
    }

    /// All lattice offsets, for finite rectangles.
    pub fn offsets(&self) -> Option<Vec<Vec<i64>>> {
        let mut out = vec![Vec::new()];
        for iv in &self.intervals {
            let (lo, hi) = (iv.lo?, iv.hi?);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (lo..=hi).map(move |k| {
                        let mut p = prefix.clone();
                        p.push(k);
                        p
                    })
                })
                .collect();
        }
        Some(out)
    }

    /// All weights, for finite rectangles, in lexicographic offset order.
    pub fn weights(&self) -> Option<Vec<WeightPoint>> {
        Some(
            self.offsets()?
                .iter()
                .map(|alpha| self.weight_at(alpha))
                .collect(),
        )
    }

    /// `g_i^low = a_i + (lo_i - 1) b_i`, the break just below the support.
    pub fn lower_break(&self, i: usize) -> Option<GaussianRational> {
        let lo = self.intervals[i].lo?;
        Some(self.base.coord(i) + &self.steps[i].scale(&(lo - 1).into()))
    }

    /// `g_i^up = a_i + hi_i b_i`, the top of the support.
    pub fn upper_break(&self, i: usize) -> Option<GaussianRational> {
        let hi = self.intervals[i].hi?;
        Some(self.base.coord(i) + &self.steps[i].scale(&hi.into()))
    }

    /// Subset test; rectangles on different lattice cosets are never nested
    /// unless the smaller one is empty.
    pub fn is_subset(&self, other: &SupportRect) -> bool {
        if self.is_empty() {
            return true;
        }
        match rebase(other, &self.base) {
            Some(ivs) => self.intervals.iter().zip(&ivs).all(|(a, b)| a.is_subset(b)),
            None => false,
        }
    }
}

/// Intervals of `s` re-expressed in offsets relative to `base`.
fn rebase(s: &SupportRect, base: &WeightPoint) -> Option<Vec<Interval>> {
    let d = base.offset_to(&s.steps, &s.base)?;
    Some(
        s.intervals
            .iter()
            .zip(&d)
            .map(|(iv, &k)| iv.shift(k))
            .collect(),
    )
}

/// Support of `M(m_a)`: the whole orbit `a + Z^n b`.
pub fn support_of_verma(spec: &GwaSpec, a: &WeightPoint) -> SupportRect {
    SupportRect::new(
        a.clone(),
        spec.steps().to_vec(),
        vec![Interval::FULL; spec.rank()],
    )
}

/// Support of `L(m_a)`: `alpha_i in [k_low_i + 1, k_up_i]`.
pub fn support_of_simple(spec: &GwaSpec, a: &WeightPoint) -> SupportRect {
    let breaks = break_positions(spec, a);
    let intervals = (0..spec.rank())
        .map(|i| Interval::new(breaks.k_low(i).map(|k| k + 1), breaks.k_up(i)))
        .collect();
    SupportRect::new(a.clone(), spec.steps().to_vec(), intervals)
}

/// `tau + s` for `tau` in `Z^n`, i.e. the base moves by `tau * b`.
pub fn support_translate(s: &SupportRect, tau: &[i64]) -> SupportRect {
    SupportRect::new(
        s.base.translate(&s.steps, tau),
        s.steps.clone(),
        s.intervals.clone(),
    )
}

/// Intersection of two rectangles, expressed relative to `s1`'s base.
/// `None` when the lattice cosets differ or the intersection is empty.
pub fn support_intersect(s1: &SupportRect, s2: &SupportRect) -> Option<SupportRect> {
    if s1.steps != s2.steps {
        return None;
    }
    let other = rebase(s2, &s1.base)?;
    let intervals: Vec<Interval> = s1
        .intervals
        .iter()
        .zip(&other)
        .map(|(a, b)| a.intersect(b))
        .collect();
    if intervals.iter().any(Interval::is_empty) {
        return None;
    }
    Some(SupportRect::new(
        s1.base.clone(),
        s1.steps.clone(),
        intervals,
    ))
}

/// One coordinate factor of a [`ClosedSet`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum ClosedCoord {
    FullLine,
    /// Sorted, deduplicated values.
    Finite(Vec<GaussianRational>),
}

impl ClosedCoord {
    pub fn finite(mut values: Vec<GaussianRational>) -> Self {
        values.sort();
        values.dedup();
        ClosedCoord::Finite(values)
    }

    pub fn is_full(&self) -> bool {
        matches!(self, ClosedCoord::FullLine)
    }

    pub fn values(&self) -> Option<&[GaussianRational]> {
        match self {
            ClosedCoord::FullLine => None,
            ClosedCoord::Finite(v) => Some(v),
        }
    }

    fn intersect(&self, other: &ClosedCoord) -> ClosedCoord {
        match (self, other) {
            (ClosedCoord::FullLine, x) | (x, ClosedCoord::FullLine) => x.clone(),
            (ClosedCoord::Finite(a), ClosedCoord::Finite(b)) => ClosedCoord::Finite(
                a.iter()
                    .filter(|z| b.binary_search(z).is_ok())
                    .cloned()
                    .collect(),
            ),
        }
    }

    fn is_subset(&self, other: &ClosedCoord) -> bool {
        match (self, other) {
            (_, ClosedCoord::FullLine) => true,
            (ClosedCoord::FullLine, ClosedCoord::Finite(_)) => false,
            (ClosedCoord::Finite(a), ClosedCoord::Finite(b)) => {
                a.iter().all(|z| b.binary_search(z).is_ok())
            }
        }
    }
}

/// Product `C_1 x ... x C_n` of full lines and finite value sets; the
/// canonical form of the Zariski closure of a support rectangle.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ClosedSet {
    coords: Vec<ClosedCoord>,
}

impl ClosedSet {
    pub fn new(coords: Vec<ClosedCoord>) -> Self {
        let coords = coords
            .into_iter()
            .map(|c| match c {
                ClosedCoord::Finite(v) => ClosedCoord::finite(v),
                full => full,
            })
            .collect();
        ClosedSet { coords }
    }

    pub fn everything(rank: usize) -> Self {
        ClosedSet {
            coords: vec![ClosedCoord::FullLine; rank],
        }
    }

    pub fn coords(&self) -> &[ClosedCoord] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &ClosedCoord {
        &self.coords[i]
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// The constrained index set `J = {i : C_i finite}`.
    pub fn constrained_directions(&self) -> Vec<usize> {
        (0..self.coords.len())
            .filter(|&i| !self.coords[i].is_full())
            .collect()
    }

    pub fn is_everything(&self) -> bool {
        self.coords.iter().all(ClosedCoord::is_full)
    }

    pub fn is_empty(&self) -> bool {
        self.coords
            .iter()
            .any(|c| matches!(c, ClosedCoord::Finite(v) if v.is_empty()))
    }

    pub fn contains(&self, x: &WeightPoint) -> bool {
        self.coords.iter().zip(x.coords()).all(|(c, z)| match c {
            ClosedCoord::FullLine => true,
            ClosedCoord::Finite(v) => v.binary_search(z).is_ok(),
        })
    }

    pub fn is_subset(&self, other: &ClosedSet) -> bool {
        self.is_empty()
            || self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| a.is_subset(b))
    }

    /// Pointwise translation by `tau * b`.
    pub fn translate(&self, steps: &[GaussianRational], tau: &[i64]) -> ClosedSet {
        ClosedSet::new(
            self.coords
                .iter()
                .zip(steps)
                .zip(tau)
                .map(|((c, b), &k)| match c {
                    ClosedCoord::FullLine => ClosedCoord::FullLine,
                    ClosedCoord::Finite(v) => {
                        let shift = b.scale(&k.into());
                        ClosedCoord::Finite(v.iter().map(|z| z + &shift).collect())
                    }
                })
                .collect(),
        )
    }
}

impl fmt::Display for ClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|c| match c {
                ClosedCoord::FullLine => "k".to_string(),
                ClosedCoord::Finite(v) => {
                    let vals: Vec<String> = v.iter().map(|z| z.to_string()).collect();
                    format!("{{{}}}", vals.join(", "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Zariski closure of a rectangle of lattice points: a direction stays finite
/// iff both interval ends are finite, otherwise it becomes the full line.
pub fn zariski_closure(s: &SupportRect) -> Result<ClosedSet> {
    if s.is_empty() {
        return Err(Error::InvalidInput("closure of an empty support".into()));
    }
    Ok(ClosedSet::new(
        (0..s.rank())
            .map(|i| match s.coordinate_values(i) {
                Some(values) => ClosedCoord::Finite(values),
                None => ClosedCoord::FullLine,
            })
            .collect(),
    ))
}

pub fn closed_intersect(x: &ClosedSet, y: &ClosedSet) -> ClosedSet {
    assert_eq!(x.rank(), y.rank(), "rank mismatch");
    ClosedSet {
        coords: x
            .coords
            .iter()
            .zip(&y.coords)
            .map(|(a, b)| a.intersect(b))
            .collect(),
    }
}

pub fn closed_equal(x: &ClosedSet, y: &ClosedSet) -> bool {
    x == y
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn pt(coords: &[&str]) -> WeightPoint {
        WeightPoint::new(coords.iter().map(|c| g(c)).collect())
    }

    fn weyl() -> GwaSpec {
        GwaSpec::from_roots(vec![g("1")], vec![vec![g("0")]]).unwrap()
    }

    fn two_breaks() -> GwaSpec {
        GwaSpec::from_roots(
            vec![g("1")],
            vec![vec![g("3"), g("2"), g("-2/3"), g("2+1i"), g("4+1i")]],
        )
        .unwrap()
    }

    fn rank2() -> GwaSpec {
        GwaSpec::from_roots(
            vec![g("1"), g("3/2")],
            vec![vec![g("-2"), g("1")], vec![g("-3"), g("3")]],
        )
        .unwrap()
    }

    #[test]
    fn break_examples() {
        let b = break_positions(&weyl(), &pt(&["2"]));
        assert_eq!(b.offsets(0), &[-2]);
        assert_eq!((b.k_low(0), b.k_up(0)), (Some(-2), None));

        let b = break_positions(&two_breaks(), &pt(&["1i"]));
        assert_eq!(b.offsets(0), &[2, 4]);
        assert_eq!((b.k_low(0), b.k_up(0)), (None, Some(2)));

        let b = break_positions(&weyl(), &pt(&["1/2"]));
        assert!(b.offsets(0).is_empty());
        assert!(b.has_no_breaks());
    }

    #[test]
    fn duplicate_roots_collapse() {
        let spec = GwaSpec::from_roots(vec![g("1")], vec![vec![g("1"), g("1"), g("3")]]).unwrap();
        assert_eq!(break_positions(&spec, &pt(&["0"])).offsets(0), &[1, 3]);
    }

    #[test]
    fn verma_supports() {
        let s = support_of_verma(&rank2(), &pt(&["0", "0"]));
        assert_eq!(s.intervals(), &[Interval::FULL, Interval::FULL]);
        assert!(s.contains(&pt(&["5", "-9/2"])));
        assert!(!s.contains(&pt(&["5", "1"])));
        let s = support_of_verma(&two_breaks(), &pt(&["7"]));
        assert!(s.contains(&pt(&["-3"])));
        assert_eq!(s.base(), &pt(&["7"]));
    }

    #[test]
    fn simple_supports() {
        let s = support_of_simple(&two_breaks(), &pt(&["3+1i"]));
        assert_eq!(s.interval(0), Interval::finite(0, 1));
        assert_eq!(s.weights().unwrap(), vec![pt(&["3+1i"]), pt(&["4+1i"])]);
        assert_eq!(s.lower_break(0), Some(g("2+1i")));
        assert_eq!(s.upper_break(0), Some(g("4+1i")));

        let s = support_of_simple(&weyl(), &pt(&["2"]));
        assert_eq!(s.interval(0), Interval::new(Some(-1), None));
        assert!(s.contains(&pt(&["1"])) && !s.contains(&pt(&["0"])));

        let s = support_of_simple(&weyl(), &pt(&["0"]));
        assert_eq!(s.interval(0), Interval::new(None, Some(0)));
        assert!(s.contains(&pt(&["-7"])) && !s.contains(&pt(&["1"])));
    }

    #[test]
    fn closure_examples() {
        let c = zariski_closure(&support_of_simple(&two_breaks(), &pt(&["3+1i"]))).unwrap();
        assert_eq!(c.coord(0), &ClosedCoord::finite(vec![g("3+1i"), g("4+1i")]));
        let c = zariski_closure(&support_of_simple(&weyl(), &pt(&["2"]))).unwrap();
        assert!(c.is_everything());
        let c = zariski_closure(&support_of_simple(&rank2(), &pt(&["0", "0"]))).unwrap();
        assert_eq!(
            c.coord(0),
            &ClosedCoord::finite(vec![g("-1"), g("0"), g("1")])
        );
        assert_eq!(
            c.coord(1),
            &ClosedCoord::finite(vec![g("-3/2"), g("0"), g("3/2"), g("3")])
        );
        assert_eq!(c.constrained_directions(), vec![0, 1]);
        let empty = SupportRect::new(pt(&["0"]), vec![g("1")], vec![Interval::finite(1, 0)]);
        assert!(zariski_closure(&empty).is_err());
    }

    #[test]
    fn closed_set_operations() {
        let full = ClosedSet::everything(1);
        let s = ClosedSet::new(vec![ClosedCoord::finite(vec![g("-1"), g("0"), g("1")])]);
        assert_eq!(closed_intersect(&full, &s), s);
        let t = ClosedSet::new(vec![ClosedCoord::finite(vec![g("0"), g("1"), g("2")])]);
        assert_eq!(
            closed_intersect(&s, &t),
            ClosedSet::new(vec![ClosedCoord::finite(vec![g("0"), g("1")])])
        );
        assert!(closed_equal(&s, &s.clone()));
        assert!(!closed_equal(&s, &t));
    }

    #[test]
    fn translate_and_intersect_instance() {
        let spec = two_breaks();
        let s = support_of_simple(&spec, &pt(&["3+1i"]));
        let moved = support_translate(&s, &[1]);
        let both = support_intersect(&moved, &s).unwrap();
        assert_eq!(both.weights().unwrap(), vec![pt(&["4+1i"])]);
        let lhs = zariski_closure(&both).unwrap();
        let rhs = closed_intersect(
            &zariski_closure(&moved).unwrap(),
            &zariski_closure(&s).unwrap(),
        );
        assert_eq!(lhs, rhs);
        assert!(support_intersect(&support_translate(&s, &[2]), &s).is_none());
        // different cosets never meet
        let other = support_of_simple(&spec, &pt(&["3"]));
        assert!(support_intersect(&s, &other).is_none());
    }

    #[test]
    fn closure_translation() {
        let spec = rank2();
        let s = support_of_simple(&spec, &pt(&["0", "0"]));
        let tau = [2, -1];
        let lhs = zariski_closure(&support_translate(&s, &tau)).unwrap();
        let rhs = zariski_closure(&s).unwrap().translate(spec.steps(), &tau);
        assert_eq!(lhs, rhs);
    }
}
