//! Models of `M(m_a)` and `L(m_a)`.
//!
//! Every weight space of `M(m_a)` is one-dimensional, spanned by `v_alpha`
//! (the class of `a^alpha`) of weight `a + alpha * b`. Submodules are therefore
//! determined by their supports. The break offsets cut the orbit into cells;
//! a submodule is a union of cells closed under the directed adjacency that
//! records which generator still acts nonzero across each break.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, RingElement};
use crate::gwa::{Generator, GwaElement, GwaSpec};
use crate::weight::{
    break_positions, support_of_simple, BreakData, Interval, SupportRect, WeightPoint,
};

/// Largest cell count for which submodules are enumerated.
pub const MAX_ENUMERATED_CELLS: usize = 20;

/// Largest number of basis vectors a window may hold.
pub const MAX_WINDOW_POINTS: usize = 250_000;

/// Coefficient `c` in `gen * v_alpha = c * v_(alpha +- e_i)` on `M(m_a)`.
///
/// `X_i` acts by `1` for `alpha_i >= 0` and by `t_i(a_i + alpha_i b_i)` below;
/// `Y_i` acts by `1` for `alpha_i <= 0` and by `t_i(a_i + (alpha_i - 1) b_i)` above.
pub fn action_coefficient(
    spec: &GwaSpec,
    a: &WeightPoint,
    alpha: &[i64],
    gen: Generator,
) -> GaussianRational {
    let i = gen.direction();
    let k = alpha[i];
    let at = |m: i64| {
        spec.t(i)
            .evaluate_at(&(a.coord(i) + &spec.step(i).scale(&m.into())))
    };
    match gen {
        Generator::X(_) if k >= 0 => GaussianRational::one(),
        Generator::X(_) => at(k),
        Generator::Y(_) if k <= 0 => GaussianRational::one(),
        Generator::Y(_) => at(k - 1),
    }
}

/// Cells of `M(m_a)` and the directed adjacency between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDecomposition {
    base: WeightPoint,
    breaks: BreakData,
    segments: Vec<Vec<Interval>>,
    cells: Vec<Vec<usize>>,
    center: usize,
    edges: Vec<(usize, usize)>,
}

impl CellDecomposition {
    pub fn base(&self) -> &WeightPoint {
        &self.base
    }

    pub fn breaks(&self) -> &BreakData {
        &self.breaks
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Segment choice per direction for each cell.
    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// Index of the cell containing `alpha = 0`.
    pub fn center(&self) -> usize {
        self.center
    }

    /// Directed edges `(from, to)`: some generator maps weight vectors of
    /// `from` onto weight vectors of `to` with a nonzero coefficient.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn intervals(&self, cell: usize) -> Vec<Interval> {
        self.cells[cell]
            .iter()
            .enumerate()
            .map(|(i, &s)| self.segments[i][s])
            .collect()
    }

    pub fn cell_of(&self, alpha: &[i64]) -> usize {
        let choice: Vec<usize> = alpha
            .iter()
            .enumerate()
            .map(|(i, &k)| self.breaks.offsets(i).iter().filter(|&&b| b < k).count())
            .collect();
        self.index_of(&choice)
    }

    fn index_of(&self, choice: &[usize]) -> usize {
        choice
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &s)| acc * self.segments[i].len() + s)
    }

    fn successor_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.cells.len()];
        for &(from, to) in &self.edges {
            masks[from] |= 1 << to;
        }
        masks
    }
}

pub fn cells(spec: &GwaSpec, a: &WeightPoint) -> CellDecomposition {
    let breaks = break_positions(spec, a);
    let n = spec.rank();
    let segments: Vec<Vec<Interval>> = (0..n)
        .map(|i| {
            let ks = breaks.offsets(i);
            let mut segs = Vec::with_capacity(ks.len() + 1);
            let mut lo = None;
            for &k in ks {
                segs.push(Interval::new(lo, Some(k)));
                lo = Some(k + 1);
            }
            segs.push(Interval::new(lo, None));
            segs
        })
        .collect();

    let mut cells_list: Vec<Vec<usize>> = vec![Vec::new()];
    for segs in &segments {
        cells_list = cells_list
            .into_iter()
            .flat_map(|prefix| {
                (0..segs.len()).map(move |s| {
                    let mut p = prefix.clone();
                    p.push(s);
                    p
                })
            })
            .collect();
    }

    let mut decomposition = CellDecomposition {
        base: a.clone(),
        breaks,
        segments,
        cells: cells_list,
        center: 0,
        edges: Vec::new(),
    };
    decomposition.center = decomposition.cell_of(&vec![0; n]);

    let mut edges = Vec::new();
    for (c, choice) in decomposition.cells.iter().enumerate() {
        for i in 0..n {
            let s = choice[i];
            if s + 1 >= decomposition.segments[i].len() {
                continue;
            }
            let k = decomposition.breaks.offsets(i)[s];
            let mut upper = choice.clone();
            upper[i] = s + 1;
            let u = decomposition.index_of(&upper);
            // X_i dies going up across a negative break, Y_i dies going down
            // across a nonnegative one.
            if k >= 0 {
                edges.push((c, u));
            } else {
                edges.push((u, c));
            }
        }
    }
    edges.sort_unstable();
    decomposition.edges = edges;
    decomposition
}

/// All submodules of `M(m_a)`, each given by the set of cells in its support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleLattice {
    cell_count: usize,
    masks: Vec<u64>,
}

impl SubmoduleLattice {
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.cell_count
    }

    /// Composition length of `M(m_a)`: one simple subquotient per cell.
    pub fn composition_length(&self) -> usize {
        self.cell_count
    }

    /// Cell sets, ordered by size and then lexicographically by bitmask.
    pub fn submodules(&self) -> Vec<Vec<usize>> {
        self.masks
            .iter()
            .map(|&m| {
                (0..self.cell_count)
                    .filter(|&c| m & (1 << c) != 0)
                    .collect()
            })
            .collect()
    }

    /// Whether submodule `i` is contained in submodule `j`.
    pub fn includes(&self, i: usize, j: usize) -> bool {
        self.masks[i] & !self.masks[j] == 0
    }

    /// Covering pairs `(i, j)` of the inclusion order (`i` maximal below `j`).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.masks.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.includes(i, j) {
                    continue;
                }
                let between =
                    (0..n).any(|k| k != i && k != j && self.includes(i, k) && self.includes(k, j));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Exhaustive enumeration of reachability-closed cell sets.
pub fn enumerate_submodules(spec: &GwaSpec, a: &WeightPoint) -> Result<SubmoduleLattice> {
    lattice_of(&cells(spec, a))
}

pub fn lattice_of(decomposition: &CellDecomposition) -> Result<SubmoduleLattice> {
    let count = decomposition.len();
    if count > MAX_ENUMERATED_CELLS {
        return Err(Error::TooLarge(format!(
            "{count} cells exceed the enumeration limit of {MAX_ENUMERATED_CELLS}"
        )));
    }
    let succ = decomposition.successor_masks();
    let mut masks: Vec<u64> = (0u64..(1u64 << count))
        .filter(|&m| (0..count).all(|c| m & (1 << c) == 0 || succ[c] & !m == 0))
        .collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    Ok(SubmoduleLattice {
        cell_count: count,
        masks,
    })
}

/// Supports of the simple subquotients of `M(m_a)`, one per cell.
pub fn simple_subquotients(spec: &GwaSpec, a: &WeightPoint) -> Vec<SupportRect> {
    let decomposition = cells(spec, a);
    (0..decomposition.len())
        .map(|c| SupportRect::new(a.clone(), spec.steps().to_vec(), decomposition.intervals(c)))
        .collect()
}

/// `L(m_a)` is a highest weight module iff its support is bounded above in
/// every direction.
pub fn is_highest_weight_module(spec: &GwaSpec, a: &WeightPoint) -> bool {
    let breaks = break_positions(spec, a);
    (0..spec.rank()).all(|i| breaks.k_up(i).is_some())
}

/// `m_a` itself is a highest weight of `L(m_a)` iff `t_i(a_i) = 0` for all `i`.
pub fn has_highest_weight_generator(spec: &GwaSpec, a: &WeightPoint) -> bool {
    let breaks = break_positions(spec, a);
    (0..spec.rank()).all(|i| breaks.k_up(i) == Some(0))
}

/// Offset of the highest weight of `L(m_a)`, if it is a highest weight module.
pub fn top_offset(spec: &GwaSpec, a: &WeightPoint) -> Option<Vec<i64>> {
    let breaks = break_positions(spec, a);
    (0..spec.rank()).map(|i| breaks.k_up(i)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleVariant {
    /// `M(m_a)`.
    Verma,
    /// `L(m_a)`: basis restricted to its support.
    Simple,
}

/// Sparse vector in a window, keyed by lattice offset.
pub type WindowVector = BTreeMap<Vec<i64>, GaussianRational>;

/// A finite box of weight spaces with the exact actions of `X_i`, `Y_i`, `T_i`.
#[derive(Clone, Debug)]
pub struct WindowModule {
    spec: GwaSpec,
    base: WeightPoint,
    bounds: Vec<(i64, i64)>,
    variant: ModuleVariant,
    support: SupportRect,
    basis: Vec<Vec<i64>>,
    x_coeffs: Vec<BTreeMap<Vec<i64>, GaussianRational>>,
    y_coeffs: Vec<BTreeMap<Vec<i64>, GaussianRational>>,
}

impl WindowModule {
    pub fn variant(&self) -> ModuleVariant {
        self.variant
    }

    pub fn base(&self) -> &WeightPoint {
        &self.base
    }

    pub fn bounds(&self) -> &[(i64, i64)] {
        &self.bounds
    }

    /// Offsets of the basis vectors, in lexicographic order.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Support of the module (whole orbit for the Verma variant).
    pub fn support(&self) -> &SupportRect {
        &self.support
    }

    pub fn contains(&self, alpha: &[i64]) -> bool {
        self.in_box(alpha) && self.support.contains_offset(alpha)
    }

    fn in_box(&self, alpha: &[i64]) -> bool {
        alpha
            .iter()
            .zip(&self.bounds)
            .all(|(&k, &(lo, hi))| lo <= k && k <= hi)
    }

    pub fn weight(&self, alpha: &[i64]) -> WeightPoint {
        self.base.translate(self.spec.steps(), alpha)
    }

    pub fn basis_vector(&self, alpha: &[i64]) -> WindowVector {
        let mut v = WindowVector::new();
        v.insert(alpha.to_vec(), GaussianRational::one());
        v
    }

    /// Stored coefficient of `gen` on `v_alpha`; zero when the image leaves
    /// the support of the module.
    pub fn coefficient(&self, alpha: &[i64], gen: Generator) -> GaussianRational {
        let table = match gen {
            Generator::X(i) => &self.x_coeffs[i],
            Generator::Y(i) => &self.y_coeffs[i],
        };
        table.get(alpha).cloned().unwrap_or_default()
    }

    pub fn apply_generator(&self, gen: Generator, v: &WindowVector) -> Result<WindowVector> {
        let i = gen.direction();
        let mut out = WindowVector::new();
        for (alpha, c) in v {
            if !self.contains(alpha) {
                return Err(Error::InvalidInput(format!(
                    "{alpha:?} is not a basis offset of the window"
                )));
            }
            let coeff = self.coefficient(alpha, gen);
            if coeff.is_zero() {
                continue;
            }
            let mut target = alpha.clone();
            target[i] += if matches!(gen, Generator::X(_)) {
                1
            } else {
                -1
            };
            if !self.in_box(&target) {
                return Err(Error::WindowOverflow(format!(
                    "{gen} maps offset {alpha:?} outside the window"
                )));
            }
            add_to(&mut out, target, c * &coeff);
        }
        Ok(out)
    }

    /// Multiplication by `r in R`, acting on `v_alpha` by `r(a + alpha * b)`.
    pub fn apply_ring(&self, r: &RingElement, v: &WindowVector) -> WindowVector {
        let mut out = WindowVector::new();
        for (alpha, c) in v {
            let value = r.evaluate(self.weight(alpha).coords());
            add_to(&mut out, alpha.clone(), c * &value);
        }
        out
    }

    /// Action of a normal-form element: `sum r_beta a^beta` with `a^beta`
    /// applied right to left.
    pub fn apply_element(&self, u: &GwaElement, v: &WindowVector) -> Result<WindowVector> {
        let mut out = WindowVector::new();
        for (beta, r) in u.components() {
            let mut w = v.clone();
            for i in (0..beta.len()).rev() {
                let gen = if beta[i] >= 0 {
                    Generator::X(i)
                } else {
                    Generator::Y(i)
                };
                for _ in 0..beta[i].unsigned_abs() {
                    w = self.apply_generator(gen, &w)?;
                }
            }
            for (alpha, c) in self.apply_ring(r, &w) {
                add_to(&mut out, alpha, c);
            }
        }
        Ok(out)
    }

    /// Basis offsets killed by every `X_i`; for a simple highest weight module
    /// whose top lies in the window this is exactly the top weight.
    pub fn x_kernel(&self) -> Vec<Vec<i64>> {
        let n = self.bounds.len();
        self.basis
            .iter()
            .filter(|alpha| (0..n).all(|i| self.coefficient(alpha, Generator::X(i)).is_zero()))
            .cloned()
            .collect()
    }

    /// Basis offsets at distance at least one from every face of the box.
    pub fn interior(&self) -> Vec<Vec<i64>> {
        self.basis
            .iter()
            .filter(|alpha| {
                alpha
                    .iter()
                    .zip(&self.bounds)
                    .all(|(k, (lo, hi))| lo < k && k < hi)
            })
            .cloned()
            .collect()
    }

    /// Checks the defining relations on every interior basis vector:
    /// `Y_i X_i = t_i`, `X_i Y_i = t_i(T_i - b_i)` at the weight, and all
    /// commutators of generators in distinct directions (plus `[X_i, X_j]`,
    /// `[Y_i, Y_j]`). Returns one message per failure.
    pub fn relation_failures(&self) -> Vec<String> {
        let n = self.bounds.len();
        let mut failures = Vec::new();
        let compose = |g: Generator, h: Generator, v: &WindowVector| -> Result<WindowVector> {
            self.apply_generator(g, &self.apply_generator(h, v)?)
        };
        for alpha in self.interior() {
            let v = self.basis_vector(&alpha);
            let weight = self.weight(&alpha);
            for i in 0..n {
                let t = self.spec.t(i);
                let at = t.evaluate_at(weight.coord(i));
                let shifted = t.evaluate_at(&(weight.coord(i) - self.spec.step(i)));
                for (g, h, expected, name) in [
                    (Generator::Y(i), Generator::X(i), at, "Y X = t"),
                    (Generator::X(i), Generator::Y(i), shifted, "X Y = sigma(t)"),
                ] {
                    let mut want = WindowVector::new();
                    add_to(&mut want, alpha.clone(), expected);
                    match compose(g, h, &v) {
                        Ok(got) if got == want => {}
                        Ok(_) => failures
                            .push(format!("{name} fails in direction {} at {alpha:?}", i + 1)),
                        Err(e) => failures.push(format!("{name} at {alpha:?}: {e}")),
                    }
                }
                for j in (0..n).filter(|&j| j != i) {
                    let mut pairs = vec![(Generator::X(i), Generator::Y(j))];
                    if i < j {
                        pairs.push((Generator::X(i), Generator::X(j)));
                        pairs.push((Generator::Y(i), Generator::Y(j)));
                    }
                    for (g, h) in pairs {
                        match (compose(g, h, &v), compose(h, g, &v)) {
                            (Ok(l), Ok(r)) if l == r => {}
                            _ => failures.push(format!("[{g}, {h}] != 0 at {alpha:?}")),
                        }
                    }
                }
            }
        }
        failures
    }
}

fn add_to(v: &mut WindowVector, alpha: Vec<i64>, c: GaussianRational) {
    if c.is_zero() {
        return;
    }
    let sum = match v.remove(&alpha) {
        Some(old) => &old + &c,
        None => c,
    };
    if !sum.is_zero() {
        v.insert(alpha, sum);
    }
}

/// Window that contains every break of the orbit: the support box padded by
/// two in finite directions, and at least radius ten in infinite directions.
pub fn default_box(spec: &GwaSpec, a: &WeightPoint, variant: ModuleVariant) -> Vec<(i64, i64)> {
    let breaks = break_positions(spec, a);
    let support = support_of_simple(spec, a);
    (0..spec.rank())
        .map(|i| {
            let ks = breaks.offsets(i);
            let kmin = ks.first().copied().unwrap_or(0);
            let kmax = ks.last().copied().unwrap_or(0);
            let iv = match variant {
                ModuleVariant::Simple => support.interval(i),
                ModuleVariant::Verma => Interval::FULL,
            };
            let lo = match iv.lo {
                Some(l) => l - 2,
                None => (-10).min(kmin - 2),
            };
            let hi = match iv.hi {
                Some(h) => h + 2,
                None => 10.max(kmax + 3),
            };
            (lo, hi)
        })
        .collect()
}

pub fn realize_window(
    spec: &GwaSpec,
    a: &WeightPoint,
    bounds: &[(i64, i64)],
    variant: ModuleVariant,
) -> Result<WindowModule> {
    let n = spec.rank();
    if bounds.len() != n {
        return Err(Error::InvalidInput(format!(
            "window has {} directions, expected {n}",
            bounds.len()
        )));
    }
    if let Some(&(lo, hi)) = bounds.iter().find(|(lo, hi)| lo > hi) {
        return Err(Error::InvalidInput(format!("empty window range {lo}:{hi}")));
    }
    let size = bounds
        .iter()
        .try_fold(1usize, |acc, (lo, hi)| {
            usize::try_from(hi - lo + 1)
                .ok()
                .and_then(|w| acc.checked_mul(w))
        })
        .filter(|&s| s <= MAX_WINDOW_POINTS)
        .ok_or_else(|| Error::TooLarge(format!("window exceeds {MAX_WINDOW_POINTS} points")))?;

    let support = match variant {
        ModuleVariant::Verma => crate::weight::support_of_verma(spec, a),
        ModuleVariant::Simple => support_of_simple(spec, a),
    };
    let mut basis: Vec<Vec<i64>> = Vec::with_capacity(size);
    let mut stack: Vec<Vec<i64>> = vec![Vec::new()];
    for &(lo, hi) in bounds {
        stack = stack
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    basis.extend(
        stack
            .into_iter()
            .filter(|alpha| support.contains_offset(alpha)),
    );

    let mut x_coeffs = vec![BTreeMap::new(); n];
    let mut y_coeffs = vec![BTreeMap::new(); n];
    for alpha in &basis {
        for i in 0..n {
            for (gen, table, step) in [
                (Generator::X(i), &mut x_coeffs[i], 1i64),
                (Generator::Y(i), &mut y_coeffs[i], -1i64),
            ] {
                let mut target = alpha.clone();
                target[i] += step;
                let c = if support.contains_offset(&target) {
                    action_coefficient(spec, a, alpha, gen)
                } else {
                    GaussianRational::zero()
                };
                if !c.is_zero() {
                    table.insert(alpha.clone(), c);
                }
            }
        }
    }

    Ok(WindowModule {
        spec: spec.clone(),
        base: a.clone(),
        bounds: bounds.to_vec(),
        variant,
        support,
        basis,
        x_coeffs,
        y_coeffs,
    })
}

/// Highest weight reached from `v` by the constructive argument: raise with
/// each `X_i` while the result stays nonzero, then peel off linear factors of
/// `t_i` until a vector killed by some `T_i - z` remains.
pub fn find_top_vector(
    spec: &GwaSpec,
    a: &WeightPoint,
    w: &WindowModule,
    v: &WindowVector,
) -> Result<WeightPoint> {
    if w.variant != ModuleVariant::Simple {
        return Err(Error::Unsupported(
            "top vector search needs a simple-module window".into(),
        ));
    }
    if w.base() != a {
        return Err(Error::Unsupported(
            "window belongs to a different base point".into(),
        ));
    }
    let top = top_offset(spec, a)
        .ok_or_else(|| Error::Unsupported(format!("L(m_{a}) is not a highest weight module")))?;
    if !w.contains(&top) {
        return Err(Error::Unsupported(
            "window does not contain the highest weight".into(),
        ));
    }
    if v.values().all(GaussianRational::is_zero) {
        return Err(Error::Unsupported("start vector is zero".into()));
    }

    let n = spec.rank();
    let mut current = v.clone();
    for i in 0..n {
        loop {
            let raised = w.apply_generator(Generator::X(i), &current)?;
            if raised.is_empty() {
                break;
            }
            current = raised;
        }
    }

    let mut coords = Vec::with_capacity(n);
    for i in 0..n {
        let roots = spec.t(i).roots();
        let mut found = None;
        for z in roots.iter().rev() {
            let factor = RingElement::variable(n, i).sub(&RingElement::constant(n, z.clone()));
            let next = w.apply_ring(&factor, &current);
            if next.is_empty() {
                found = Some(z.clone());
                break;
            }
            current = next;
        }
        // t_i kills an X-saturated vector, so some factor must vanish.
        coords.push(found.ok_or_else(|| {
            Error::Unsupported(format!(
                "no linear factor of t_{} annihilates the raised vector",
                i + 1
            ))
        })?);
    }

    let weight = WeightPoint::new(coords);
    match current.keys().collect::<Vec<_>>().as_slice() {
        [alpha] if w.weight(alpha) == weight => Ok(weight),
        _ => Err(Error::Unsupported(
            "raised vector is not a single weight vector".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gwa::multiply;

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
    fn coefficient_examples() {
        assert!(action_coefficient(&weyl(), &pt(&["2"]), &[-2], Generator::X(0)).is_zero());
        assert!(action_coefficient(&rank2(), &pt(&["0", "0"]), &[3, -4], Generator::X(0)).is_one());
        assert!(action_coefficient(&two_breaks(), &pt(&["1i"]), &[3], Generator::Y(0)).is_zero());
        assert!(!action_coefficient(&two_breaks(), &pt(&["1i"]), &[2], Generator::Y(0)).is_zero());
    }

    #[test]
    fn coefficient_zeros_match_breaks() {
        // X_i dies on alpha iff alpha_i < 0 and t_i(a_i + alpha_i b_i) = 0;
        // Y_i dies on alpha iff alpha_i > 0 and t_i(a_i + (alpha_i - 1) b_i) = 0.
        let spec = two_breaks();
        for a in ["1i", "3+1i", "5+1i", "0", "3", "-2/3", "1/2"] {
            let a = pt(&[a]);
            let ks = break_positions(&spec, &a);
            for k in -8..8 {
                let x_dead = action_coefficient(&spec, &a, &[k], Generator::X(0)).is_zero();
                assert_eq!(x_dead, k < 0 && ks.offsets(0).contains(&k));
                let y_dead = action_coefficient(&spec, &a, &[k], Generator::Y(0)).is_zero();
                assert_eq!(y_dead, k > 0 && ks.offsets(0).contains(&(k - 1)));
            }
        }
    }

    #[test]
    fn submodule_counts() {
        let l = enumerate_submodules(&weyl(), &pt(&["2"])).unwrap();
        assert_eq!((l.cell_count(), l.len()), (2, 3));
        let d = cells(&weyl(), &pt(&["2"]));
        // the proper submodule lives on alpha <= -2
        let sub = &l.submodules()[1];
        assert_eq!(sub.len(), 1);
        assert_eq!(d.intervals(sub[0]), vec![Interval::new(None, Some(-2))]);

        let l = enumerate_submodules(&two_breaks(), &pt(&["1i"])).unwrap();
        assert_eq!((l.cell_count(), l.len()), (3, 4));
        let l = enumerate_submodules(&two_breaks(), &pt(&["3+1i"])).unwrap();
        assert_eq!((l.cell_count(), l.len()), (3, 5));
        let l = enumerate_submodules(&rank2(), &pt(&["0", "0"])).unwrap();
        assert_eq!(l.cell_count(), 9);
    }

    #[test]
    fn lattice_order() {
        let l = enumerate_submodules(&two_breaks(), &pt(&["3+1i"])).unwrap();
        let subs = l.submodules();
        assert!(subs[0].is_empty());
        assert_eq!(subs.last().unwrap().len(), 3);
        assert!(l.includes(0, 4));
        assert!(!l.includes(1, 2));
        // 0 < low, up < low+up < all
        assert_eq!(l.covers().len(), 5);
    }

    #[test]
    fn subquotients() {
        let subs = simple_subquotients(&rank2(), &pt(&["0", "0"]));
        assert_eq!(subs.len(), 9);
        let d = cells(&rank2(), &pt(&["0", "0"]));
        assert_eq!(
            subs[d.center()],
            support_of_simple(&rank2(), &pt(&["0", "0"]))
        );

        let subs = simple_subquotients(&weyl(), &pt(&["2"]));
        assert_eq!(subs[0].interval(0), Interval::new(None, Some(-2)));
        assert_eq!(subs[1].interval(0), Interval::new(Some(-1), None));

        let subs = simple_subquotients(&weyl(), &pt(&["1/3"]));
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].interval(0), Interval::FULL);
    }

    #[test]
    fn too_many_cells() {
        let roots: Vec<GaussianRational> = (0..21).map(GaussianRational::from_integer).collect();
        let spec = GwaSpec::from_roots(vec![g("1")], vec![roots]).unwrap();
        assert!(matches!(
            enumerate_submodules(&spec, &pt(&["0"])),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn highest_weight_flags() {
        assert!(is_highest_weight_module(&weyl(), &pt(&["0"])));
        assert!(has_highest_weight_generator(&weyl(), &pt(&["0"])));
        assert!(!is_highest_weight_module(&weyl(), &pt(&["2"])));
        assert!(!has_highest_weight_generator(&weyl(), &pt(&["2"])));
        assert!(is_highest_weight_module(&two_breaks(), &pt(&["3+1i"])));
        assert!(!has_highest_weight_generator(&two_breaks(), &pt(&["3+1i"])));
        assert_eq!(top_offset(&two_breaks(), &pt(&["3+1i"])), Some(vec![1]));
    }

    #[test]
    fn window_relations_on_weight_vectors() {
        let spec = rank2();
        let a = pt(&["1/2", "0"]);
        let w = realize_window(&spec, &a, &[(-4, 4), (-4, 4)], ModuleVariant::Verma).unwrap();
        let x1 = GwaElement::generator(2, Generator::X(0));
        let y1 = GwaElement::generator(2, Generator::Y(0));
        let y2 = GwaElement::generator(2, Generator::Y(1));
        let alpha = vec![1, -2];
        let weight = w.weight(&alpha);
        let v = w.basis_vector(&alpha);

        let yx = multiply(&spec, &y1, &x1).unwrap();
        let got = w.apply_element(&yx, &v).unwrap();
        assert_eq!(got.get(&alpha), Some(&spec.t(0).evaluate(weight.coords())));

        let xy = multiply(&spec, &x1, &y1).unwrap();
        let got = w.apply_element(&xy, &v).unwrap();
        let shifted = weight.coord(0) - spec.step(0);
        assert_eq!(got.get(&alpha), Some(&spec.t(0).evaluate_at(&shifted)));

        let comm = multiply(&spec, &x1, &y2)
            .unwrap()
            .sub(&multiply(&spec, &y2, &x1).unwrap());
        assert!(w.apply_element(&comm, &v).unwrap().is_empty());
    }

    #[test]
    fn relation_sweep_on_windows() {
        for (spec, a) in [
            (rank2(), pt(&["0", "0"])),
            (rank2(), pt(&["1/2", "3"])),
            (two_breaks(), pt(&["1i"])),
            (weyl(), pt(&["2"])),
        ] {
            for variant in [ModuleVariant::Verma, ModuleVariant::Simple] {
                let w =
                    realize_window(&spec, &a, &default_box(&spec, &a, variant), variant).unwrap();
                assert!(!w.interior().is_empty());
                assert_eq!(
                    w.relation_failures(),
                    Vec::<String>::new(),
                    "{a} {variant:?}"
                );
            }
        }
    }

    #[test]
    fn window_overflow() {
        let spec = weyl();
        let a = pt(&["1/2"]);
        let w = realize_window(&spec, &a, &[(-2, 2)], ModuleVariant::Verma).unwrap();
        let v = w.basis_vector(&[2]);
        assert!(matches!(
            w.apply_generator(Generator::X(0), &v),
            Err(Error::WindowOverflow(_))
        ));
    }

    #[test]
    fn simple_window_drops_actions_leaving_support() {
        let spec = two_breaks();
        let a = pt(&["3+1i"]);
        let w = realize_window(
            &spec,
            &a,
            &default_box(&spec, &a, ModuleVariant::Simple),
            ModuleVariant::Simple,
        )
        .unwrap();
        assert_eq!(w.basis(), &[vec![0], vec![1]]);
        assert!(w
            .apply_generator(Generator::X(0), &w.basis_vector(&[1]))
            .unwrap()
            .is_empty());
        assert!(w
            .apply_generator(Generator::Y(0), &w.basis_vector(&[0]))
            .unwrap()
            .is_empty());
        assert_eq!(w.x_kernel(), vec![vec![1]]);
    }

    #[test]
    fn top_vector_examples() {
        let spec = weyl();
        let a = pt(&["0"]);
        let w = realize_window(
            &spec,
            &a,
            &default_box(&spec, &a, ModuleVariant::Simple),
            ModuleVariant::Simple,
        )
        .unwrap();
        assert_eq!(
            find_top_vector(&spec, &a, &w, &w.basis_vector(&[-3])).unwrap(),
            pt(&["0"])
        );
        assert_eq!(
            find_top_vector(&spec, &a, &w, &w.basis_vector(&[0])).unwrap(),
            pt(&["0"])
        );

        let spec = two_breaks();
        let a = pt(&["3+1i"]);
        let w = realize_window(
            &spec,
            &a,
            &default_box(&spec, &a, ModuleVariant::Simple),
            ModuleVariant::Simple,
        )
        .unwrap();
        assert_eq!(
            find_top_vector(&spec, &a, &w, &w.basis_vector(&[0])).unwrap(),
            pt(&["4+1i"])
        );

        let spec = weyl();
        let a = pt(&["2"]);
        let w = realize_window(&spec, &a, &[(-1, 5)], ModuleVariant::Simple).unwrap();
        assert!(matches!(
            find_top_vector(&spec, &a, &w, &w.basis_vector(&[0])),
            Err(Error::Unsupported(_))
        ));
    }
}
