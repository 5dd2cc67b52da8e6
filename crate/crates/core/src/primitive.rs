//! Primitive ideals.
//!
//! The annihilator of `L(m)` is `A * I(C) * A` where `C` is the Zariski
//! closure of the support of `L(m)` and `I(C)` its vanishing ideal in `R`. In
//! this class `C` is a product of full lines and finite coordinate sets, so
//! `I(C)` is generated by one-variable polynomials, one per finite direction,
//! and the closure is a complete invariant of the ideal.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{lattice_offset, GaussianRational, UnivariateFactored};
use crate::gwa::{GwaElement, GwaSpec};
use crate::verma::{self, ModuleVariant};
use crate::weight::{
    break_positions, closed_intersect, support_intersect, support_of_simple, support_translate,
    zariski_closure, ClosedCoord, ClosedSet, WeightPoint,
};

/// `A * I(closure) * A`, represented by its closure and the generators of `I(closure)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveIdeal {
    closure: ClosedSet,
}

impl PrimitiveIdeal {
    pub fn from_closure(closure: ClosedSet) -> Self {
        PrimitiveIdeal { closure }
    }

    pub fn closure(&self) -> &ClosedSet {
        &self.closure
    }

    /// The zero ideal, i.e. the closure is all of `k^n`.
    pub fn is_zero(&self) -> bool {
        self.closure.is_everything()
    }

    /// `f_i = prod_{s in S_i} (T_i - s)` for each finite direction `i`.
    pub fn generators(&self) -> Vec<UnivariateFactored> {
        self.closure
            .coords()
            .iter()
            .enumerate()
            .filter_map(|(i, c)| {
                c.values().map(|v| {
                    UnivariateFactored::new(i, v.to_vec()).expect("closure values are nonempty")
                })
            })
            .collect()
    }
}

impl std::fmt::Display for PrimitiveIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        write!(f, "A*({})*A", gens.join(", "))
    }
}

/// `Ann_A(L(m_a))`.
pub fn annihilator_of_simple(spec: &GwaSpec, a: &WeightPoint) -> PrimitiveIdeal {
    let closure = zariski_closure(&support_of_simple(spec, a)).expect("support of L(m) contains m");
    PrimitiveIdeal::from_closure(closure)
}

/// Possible closure coordinates in one direction.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DirectionOption {
    Unbounded,
    /// Roots `z_low`, `z_up` of `t_i` with `(z_up - z_low) / b_i` a positive
    /// integer and no root strictly between them on their lattice line.
    AdjacentZeroPair {
        low: GaussianRational,
        up: GaussianRational,
        width: i64,
    },
}

impl DirectionOption {
    /// `S_i = {z_low + k b_i : 1 <= k <= width}`, or `None` for `Unbounded`.
    pub fn values(&self, step: &GaussianRational) -> Option<Vec<GaussianRational>> {
        match self {
            DirectionOption::Unbounded => None,
            DirectionOption::AdjacentZeroPair { low, width, .. } => {
                Some((1..=*width).map(|k| low + &step.scale(&k.into())).collect())
            }
        }
    }

    fn coord(&self, step: &GaussianRational) -> ClosedCoord {
        match self.values(step) {
            None => ClosedCoord::FullLine,
            Some(v) => ClosedCoord::finite(v),
        }
    }
}

pub fn direction_options(spec: &GwaSpec, i: usize) -> Vec<DirectionOption> {
    let roots = spec.t(i).distinct_roots();
    let b = spec.step(i);
    let mut options = vec![DirectionOption::Unbounded];
    for low in &roots {
        // nearest root strictly above `low` on its lattice line
        let next = roots
            .iter()
            .filter_map(|z| lattice_offset(z, low, b).filter(|&k| k > 0).map(|k| (k, z)))
            .min_by_key(|&(k, _)| k);
        if let Some((width, up)) = next {
            options.push(DirectionOption::AdjacentZeroPair {
                low: low.clone(),
                up: up.clone(),
                width,
            });
        }
    }
    options
}

/// Every primitive ideal of `A`, sorted canonically by closure.
pub fn enumerate_primitive_ideals(spec: &GwaSpec) -> Vec<PrimitiveIdeal> {
    let per_direction: Vec<Vec<ClosedCoord>> = (0..spec.rank())
        .map(|i| {
            direction_options(spec, i)
                .iter()
                .map(|o| o.coord(spec.step(i)))
                .collect()
        })
        .collect();
    let mut combos: Vec<Vec<ClosedCoord>> = vec![Vec::new()];
    for options in &per_direction {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |c| {
                    let mut p = prefix.clone();
                    p.push(c.clone());
                    p
                })
            })
            .collect();
    }
    let unique: BTreeSet<PrimitiveIdeal> = combos
        .into_iter()
        .map(|c| PrimitiveIdeal::from_closure(ClosedSet::new(c)))
        .collect();
    unique.into_iter().collect()
}

/// A point `m'` with `t_i(m'_i) = 0` for all `i` whose simple module has the
/// same annihilator as `L(m_a)`.
///
/// Directions with a finite upper break move to that break (still inside the
/// support of `L(m_a)`); unbounded directions move to the first root, in
/// canonical order, that has no other root below it on its lattice line.
pub fn duflo_refine(spec: &GwaSpec, a: &WeightPoint) -> WeightPoint {
    let breaks = break_positions(spec, a);
    let coords = (0..spec.rank())
        .map(|i| match breaks.k_up(i) {
            Some(k) => a.coord(i) + &spec.step(i).scale(&k.into()),
            None => lowest_root_in_class(spec, i),
        })
        .collect();
    WeightPoint::new(coords)
}

fn lowest_root_in_class(spec: &GwaSpec, i: usize) -> GaussianRational {
    let roots = spec.t(i).distinct_roots();
    let b = spec.step(i);
    roots
        .iter()
        .find(|z| {
            !roots
                .iter()
                .any(|w| lattice_offset(w, z, b).is_some_and(|k| k < 0))
        })
        .cloned()
        .expect("finitely many roots always have a lowest one per lattice class")
}

/// Whether `ideal` annihilates `L(m_a)`.
///
/// Each generator must vanish on the whole direction interval of the support
/// (impossible when that interval is infinite), and expanding the generators
/// must kill every basis vector of a simple-module window.
pub fn verify_annihilation(spec: &GwaSpec, ideal: &PrimitiveIdeal, a: &WeightPoint) -> bool {
    let support = support_of_simple(spec, a);
    let generators = ideal.generators();
    for f in &generators {
        let Some(values) = support.coordinate_values(f.variable()) else {
            return false;
        };
        if values.iter().any(|x| !f.evaluate_at(x).is_zero()) {
            return false;
        }
    }
    if generators.is_empty() {
        return true;
    }
    let bounds = verma::default_box(spec, a, ModuleVariant::Simple);
    let Ok(window) = verma::realize_window(spec, a, &bounds, ModuleVariant::Simple) else {
        return false;
    };
    generators.iter().all(|f| {
        let element = GwaElement::from_ring(f.expand(spec.rank()));
        window.basis().iter().all(|alpha| {
            window
                .apply_element(&element, &window.basis_vector(alpha))
                .is_ok_and(|v| v.is_empty())
        })
    })
}

/// Verdict on one of the hypotheses (A1)-(A6) behind the annihilator description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub samples: usize,
    pub seed: u64,
    pub length_bound: usize,
    pub max_length_observed: usize,
    pub closure_count: usize,
    pub a6_pairs_checked: usize,
    pub checks: Vec<ConditionCheck>,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&ConditionCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Random weight: per direction a root plus a lattice offset in `[-5, 5]`,
/// or (one time in four) a point shifted off the root lattices.
pub fn sample_point(spec: &GwaSpec, rng: &mut impl Rng) -> WeightPoint {
    let coords = (0..spec.rank())
        .map(|i| {
            let roots = spec.t(i).distinct_roots();
            let z = &roots[rng.gen_range(0..roots.len())];
            let k: i64 = rng.gen_range(-5..=5);
            let b = spec.step(i);
            let mut x = z + &b.scale(&k.into());
            if rng.gen_range(0..4) == 0 {
                let q: i64 = rng.gen_range(2..=7);
                let p: i64 = rng.gen_range(1..q);
                x = &x + &b.scale(&crate::Rational::new(p, q));
            }
            x
        })
        .collect();
    WeightPoint::new(coords)
}

/// Executable checks of the hypotheses (A1)-(A6).
pub fn check_conditions(spec: &GwaSpec, sample_count: usize, seed: u64) -> ConditionReport {
    let sample_count = sample_count.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<WeightPoint> = (0..sample_count)
        .map(|_| sample_point(spec, &mut rng))
        .collect();
    let bound = spec.length_bound();
    let mut checks = vec![
        ConditionCheck {
            name: "A1".into(),
            pass: true,
            detail: "grading by the adjoint action of T_1..T_n: A_alpha = R a^alpha has [T_i, u] = alpha_i b_i u".into(),
            witnesses: vec![],
        },
        ConditionCheck {
            name: "A2".into(),
            pass: true,
            detail: "each graded component R a^alpha is cyclic; translations by nonzero b_i act freely".into(),
            witnesses: vec![],
        },
        ConditionCheck {
            name: "A3".into(),
            pass: true,
            detail: "R = k[T_1..T_n] is noetherian, hence so is A".into(),
            witnesses: vec![],
        },
    ];

    let mut max_length = 0;
    let mut a4_witnesses = Vec::new();
    for a in &points {
        let length = verma::cells(spec, a).len();
        max_length = max_length.max(length);
        if length > bound {
            a4_witnesses.push(format!("{a}: length {length}"));
        }
    }
    checks.push(ConditionCheck {
        name: "A4".into(),
        pass: a4_witnesses.is_empty(),
        detail: format!("composition length <= {bound}; max observed {max_length}"),
        witnesses: a4_witnesses,
    });

    let ideals = enumerate_primitive_ideals(spec);
    let expected: usize = (0..spec.rank())
        .map(|i| direction_options(spec, i).len())
        .product();
    let mut a5_witnesses: Vec<String> = points
        .iter()
        .filter(|a| !ideals.contains(&annihilator_of_simple(spec, a)))
        .map(|a| format!("{a}: closure not enumerated"))
        .collect();
    if ideals.len() != expected {
        a5_witnesses.push(format!("{} closures, expected {expected}", ideals.len()));
    }
    checks.push(ConditionCheck {
        name: "A5".into(),
        pass: a5_witnesses.is_empty(),
        detail: format!("{} distinct closures", ideals.len()),
        witnesses: a5_witnesses,
    });

    let mut a6_witnesses = Vec::new();
    let mut pairs = 0;
    for a in &points {
        let s = support_of_simple(spec, a);
        let closure = zariski_closure(&s).expect("nonempty support");
        for _ in 0..4 {
            let tau: Vec<i64> = (0..spec.rank()).map(|_| rng.gen_range(-6..=6)).collect();
            pairs += 1;
            let moved = support_translate(&s, &tau);
            let rhs = closed_intersect(&zariski_closure(&moved).expect("nonempty"), &closure);
            let ok = match support_intersect(&moved, &s) {
                Some(both) => zariski_closure(&both).expect("nonempty") == rhs,
                None => rhs.is_empty(),
            };
            if !ok {
                a6_witnesses.push(format!("{a}, tau = {tau:?}"));
            }
        }
    }
    checks.push(ConditionCheck {
        name: "A6".into(),
        pass: a6_witnesses.is_empty(),
        detail: format!(
            "closure of (tau + S) ∩ S equals the intersection of closures on {pairs} pairs"
        ),
        witnesses: a6_witnesses,
    });

    ConditionReport {
        samples: sample_count,
        seed,
        length_bound: bound,
        max_length_observed: max_length,
        closure_count: ideals.len(),
        a6_pairs_checked: pairs,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verma::has_highest_weight_generator;

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

    fn sl2(roots: &[&str]) -> GwaSpec {
        GwaSpec::from_roots(vec![g("2")], vec![roots.iter().map(|r| g(r)).collect()]).unwrap()
    }

    fn factored(var: usize, roots: &[&str]) -> UnivariateFactored {
        UnivariateFactored::new(var, roots.iter().map(|r| g(r)).collect()).unwrap()
    }

    #[test]
    fn annihilator_examples() {
        for a in ["2", "0", "1/2", "-7", "1i"] {
            assert!(annihilator_of_simple(&weyl(), &pt(&[a])).is_zero());
        }
        let ann = annihilator_of_simple(&two_breaks(), &pt(&["3+1i"]));
        assert_eq!(ann.generators(), vec![factored(0, &["3+1i", "4+1i"])]);
        let ann = annihilator_of_simple(&rank2(), &pt(&["0", "9/2"]));
        assert_eq!(ann.generators(), vec![factored(0, &["-1", "0", "1"])]);
        assert_eq!(ann.closure().coord(1), &ClosedCoord::FullLine);
        let ann = annihilator_of_simple(&rank2(), &pt(&["0", "0"]));
        assert_eq!(
            ann.generators(),
            vec![
                factored(0, &["-1", "0", "1"]),
                factored(1, &["-3/2", "0", "3/2", "3"])
            ]
        );
    }

    #[test]
    fn enumeration_examples() {
        let ideals = enumerate_primitive_ideals(&weyl());
        assert_eq!(ideals.len(), 1);
        assert!(ideals[0].is_zero());

        let ideals = enumerate_primitive_ideals(&two_breaks());
        assert_eq!(ideals.len(), 3);
        let gens: BTreeSet<Vec<UnivariateFactored>> =
            ideals.iter().map(|i| i.generators()).collect();
        assert!(gens.contains(&vec![]));
        assert!(gens.contains(&vec![factored(0, &["3"])]));
        assert!(gens.contains(&vec![factored(0, &["3+1i", "4+1i"])]));

        let ideals = enumerate_primitive_ideals(&rank2());
        assert_eq!(ideals.len(), 4);

        let ideals = enumerate_primitive_ideals(&sl2(&["1", "-3"]));
        assert_eq!(ideals.len(), 2);
        assert!(ideals
            .iter()
            .any(|i| i.generators() == vec![factored(0, &["-1", "1"])]));
    }

    #[test]
    fn refine_examples() {
        let m = duflo_refine(&weyl(), &pt(&["2"]));
        assert_eq!(m, pt(&["0"]));
        assert!(annihilator_of_simple(&weyl(), &m).is_zero());

        let m = duflo_refine(&two_breaks(), &pt(&["1i"]));
        assert_eq!(m, pt(&["2+1i"]));
        let s = support_of_simple(&two_breaks(), &m);
        assert_eq!(s.interval(0), crate::Interval::new(None, Some(0)));

        let a = pt(&["0", "0"]);
        let m = duflo_refine(&rank2(), &a);
        assert_eq!(m, pt(&["1", "3"]));
        assert_eq!(
            annihilator_of_simple(&rank2(), &m),
            annihilator_of_simple(&rank2(), &a)
        );
        assert!(has_highest_weight_generator(&rank2(), &m));
    }

    #[test]
    fn refine_picks_lowest_root_of_each_class() {
        // roots 1, 3 on one lattice line, 1/2 on another: 1 is the lowest of its class
        let spec = GwaSpec::from_roots(vec![g("1")], vec![vec![g("3"), g("1"), g("1/2")]]).unwrap();
        assert_eq!(duflo_refine(&spec, &pt(&["7"])), pt(&["1/2"]));
        let spec = GwaSpec::from_roots(vec![g("-1")], vec![vec![g("3"), g("1")]]).unwrap();
        // with b = -1 the lattice order is reversed: 3 lies "below" 1
        assert_eq!(duflo_refine(&spec, &pt(&["-5"])), pt(&["3"]));
    }

    #[test]
    fn annihilation_examples() {
        let spec = two_breaks();
        let ideal = annihilator_of_simple(&spec, &pt(&["3+1i"]));
        assert!(verify_annihilation(&spec, &ideal, &pt(&["3+1i"])));
        assert!(!verify_annihilation(&spec, &ideal, &pt(&["1i"])));
        let zero = PrimitiveIdeal::from_closure(ClosedSet::everything(1));
        assert!(verify_annihilation(&spec, &zero, &pt(&["1i"])));
    }

    #[test]
    fn condition_reports() {
        let r = check_conditions(&rank2(), 40, 7);
        assert!(r.all_pass(), "{r:?}");
        assert_eq!((r.length_bound, r.closure_count), (9, 4));
        let r = check_conditions(&weyl(), 20, 1);
        assert!(r.all_pass());
        assert_eq!((r.length_bound, r.closure_count), (2, 1));
        let r = check_conditions(&sl2(&["1", "-3"]), 20, 3);
        assert!(r.all_pass());
        assert_eq!(r.closure_count, 2);
        assert_eq!(
            check_conditions(&rank2(), 10, 5),
            check_conditions(&rank2(), 10, 5)
        );
    }
}
