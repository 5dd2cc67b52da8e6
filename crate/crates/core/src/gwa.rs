//! Generalized Weyl algebras `R(sigma, t)` over `R = k[T_1, ..., T_n]` with
//! translations `sigma_i(T_j) = T_j - delta_ij b_i` and one-variable `t_i`.
//!
//! Elements are stored in the normal form `sum_alpha r_alpha a^alpha` where
//! `a^alpha = a_1^alpha_1 ... a_n^alpha_n` and `a_i^k` is `X_i^k` for `k >= 0`
//! and `Y_i^|k|` for `k < 0`. The monomials `a^alpha` form a free left
//! `R`-basis, so the normal form is unique.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, RingElement, UnivariateFactored};

/// Defining data of a GWA in the translation class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GwaSpec {
    steps: Vec<GaussianRational>,
    t: Vec<UnivariateFactored>,
}

impl GwaSpec {
    /// `steps[i]` is `b_i`; `t[i]` must be a polynomial in the `i`-th variable.
    pub fn new(steps: Vec<GaussianRational>, t: Vec<UnivariateFactored>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidInput("rank must be positive".into()));
        }
        if steps.len() != t.len() {
            return Err(Error::InvalidInput(format!(
                "rank mismatch: {} steps but {} defining polynomials",
                steps.len(),
                t.len()
            )));
        }
        for (i, b) in steps.iter().enumerate() {
            if b.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "b_{} must be nonzero (b_i ≠ 0)",
                    i + 1
                )));
            }
        }
        for (i, ti) in t.iter().enumerate() {
            if ti.variable() != i {
                return Err(Error::InvalidInput(format!(
                    "t_{} must be a polynomial in T_{} only",
                    i + 1,
                    i + 1
                )));
            }
        }
        Ok(GwaSpec { steps, t })
    }

    /// Convenience constructor from root lists, `roots[i]` being the roots of `t_{i+1}`.
    pub fn from_roots(
        steps: Vec<GaussianRational>,
        roots: Vec<Vec<GaussianRational>>,
    ) -> Result<Self> {
        let t = roots
            .into_iter()
            .enumerate()
            .map(|(i, r)| UnivariateFactored::new(i, r))
            .collect::<Result<Vec<_>>>()?;
        GwaSpec::new(steps, t)
    }

    pub fn rank(&self) -> usize {
        self.steps.len()
    }

    pub fn steps(&self) -> &[GaussianRational] {
        &self.steps
    }

    pub fn step(&self, i: usize) -> &GaussianRational {
        &self.steps[i]
    }

    pub fn t(&self, i: usize) -> &UnivariateFactored {
        &self.t[i]
    }

    pub fn defining_polynomials(&self) -> &[UnivariateFactored] {
        &self.t
    }

    /// `prod_i (1 + deg t_i)`, the uniform bound on the length of `M(m)`.
    pub fn length_bound(&self) -> usize {
        self.t.iter().map(|t| 1 + t.degree()).product()
    }

    /// `sigma_i^k(r)`, i.e. `T_i -> T_i - k b_i`.
    pub fn sigma_pow(&self, r: &RingElement, i: usize, k: i64) -> RingElement {
        if k == 0 {
            return r.clone();
        }
        let c = self.steps[i].scale(&k.into());
        r.shift_substitute(i, &c)
    }

    /// `sigma^alpha(r)`.
    pub fn sigma_multi(&self, r: &RingElement, alpha: &[i64]) -> RingElement {
        alpha
            .iter()
            .enumerate()
            .fold(r.clone(), |acc, (i, &k)| self.sigma_pow(&acc, i, k))
    }

    pub fn t_expanded(&self, i: usize) -> RingElement {
        self.t[i].expand(self.rank())
    }

    /// `a_i^p * a_i^q = c * a_i^(p+q)`; returns `c`.
    ///
    /// Reduced one generator at a time with `X_i Y_i = sigma_i(t_i)` and
    /// `Y_i X_i = t_i`, moving coefficients left with `X_i r = sigma_i(r) X_i`.
    fn pair_coefficient(&self, i: usize, p: i64, q: i64) -> RingElement {
        if p == 0 || q == 0 || (p > 0) == (q > 0) {
            return RingElement::one(self.rank());
        }
        if p > 0 {
            // X^p Y^m = X^(p-1) sigma(t) Y^(m-1) = sigma^p(t) X^(p-1) Y^(m-1)
            let head = self.sigma_pow(&self.t_expanded(i), i, p);
            head.mul(&self.pair_coefficient(i, p - 1, q + 1))
        } else {
            // Y^m X^q = Y^(m-1) t X^(q-1) = sigma^-(m-1)(t) Y^(m-1) X^(q-1)
            let head = self.sigma_pow(&self.t_expanded(i), i, p + 1);
            head.mul(&self.pair_coefficient(i, p + 1, q - 1))
        }
    }
}

/// A generator `X_i` or `Y_i` (0-based direction).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Generator {
    X(usize),
    Y(usize),
}

impl Generator {
    pub fn direction(self) -> usize {
        match self {
            Generator::X(i) | Generator::Y(i) => i,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::X(i) => write!(f, "X{}", i + 1),
            Generator::Y(i) => write!(f, "Y{}", i + 1),
        }
    }
}

/// Element `sum r_alpha a^alpha` of the algebra, in normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GwaElement {
    rank: usize,
    components: BTreeMap<Vec<i64>, RingElement>,
}

impl GwaElement {
    pub fn zero(rank: usize) -> Self {
        GwaElement {
            rank,
            components: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        GwaElement::from_ring(RingElement::one(rank))
    }

    pub fn from_ring(r: RingElement) -> Self {
        GwaElement::monomial(r.clone(), vec![0; r.nvars()])
    }

    /// `r * a^alpha`.
    pub fn monomial(r: RingElement, alpha: Vec<i64>) -> Self {
        assert_eq!(r.nvars(), alpha.len(), "degree vector has wrong length");
        let mut out = GwaElement::zero(alpha.len());
        out.add_component(alpha, r);
        out
    }

    pub fn generator(rank: usize, g: Generator) -> Self {
        let mut alpha = vec![0; rank];
        match g {
            Generator::X(i) => alpha[i] = 1,
            Generator::Y(i) => alpha[i] = -1,
        }
        GwaElement::monomial(RingElement::one(rank), alpha)
    }

    /// The coordinate function `T_{i+1}` as a degree-zero element.
    pub fn coordinate(rank: usize, i: usize) -> Self {
        GwaElement::from_ring(RingElement::variable(rank, i))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<i64>, &RingElement)> {
        self.components.iter()
    }

    fn add_component(&mut self, alpha: Vec<i64>, r: RingElement) {
        if r.is_zero() {
            return;
        }
        let sum = match self.components.remove(&alpha) {
            Some(old) => old.add(&r),
            None => r,
        };
        if !sum.is_zero() {
            self.components.insert(alpha, sum);
        }
    }

    pub fn add(&self, rhs: &GwaElement) -> GwaElement {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (alpha, r) in &rhs.components {
            out.add_component(alpha.clone(), r.clone());
        }
        out
    }

    pub fn neg(&self) -> GwaElement {
        GwaElement {
            rank: self.rank,
            components: self
                .components
                .iter()
                .map(|(a, r)| (a.clone(), r.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &GwaElement) -> GwaElement {
        self.add(&rhs.neg())
    }

    /// The component of degree `alpha`, as an element.
    pub fn homogeneous_component(&self, alpha: &[i64]) -> GwaElement {
        match self.components.get(alpha) {
            Some(r) => GwaElement::monomial(r.clone(), alpha.to_vec()),
            None => GwaElement::zero(self.rank),
        }
    }

    /// The degree when the element is nonzero and homogeneous.
    pub fn degree(&self) -> Option<Vec<i64>> {
        if self.components.len() == 1 {
            self.components.keys().next().cloned()
        } else {
            None
        }
    }
}

impl fmt::Display for GwaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(alpha, r)| {
                let word: Vec<String> = alpha
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k != 0)
                    .map(|(i, &k)| {
                        let g = if k > 0 { 'X' } else { 'Y' };
                        if k.abs() == 1 {
                            format!("{g}{}", i + 1)
                        } else {
                            format!("{g}{}^{}", i + 1, k.abs())
                        }
                    })
                    .collect();
                if word.is_empty() {
                    format!("({r})")
                } else {
                    format!("({r})*{}", word.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GwaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Normal-form product `u * v`.
pub fn multiply(spec: &GwaSpec, u: &GwaElement, v: &GwaElement) -> Result<GwaElement> {
    let n = spec.rank();
    if u.rank != n || v.rank != n {
        return Err(Error::InvalidInput(format!(
            "rank mismatch: spec has rank {n}, operands have ranks {} and {}",
            u.rank, v.rank
        )));
    }
    let mut out = GwaElement::zero(n);
    for (alpha, r) in &u.components {
        for (beta, s) in &v.components {
            // r a^alpha s a^beta = r sigma^alpha(s) a^alpha a^beta
            let mut coeff = r.mul(&spec.sigma_multi(s, alpha));
            let mut gamma = Vec::with_capacity(n);
            for i in 0..n {
                // Directions commute and sigma_j fixes T_i for j != i, so the
                // per-direction coefficients can be collected on the left.
                coeff = coeff.mul(&spec.pair_coefficient(i, alpha[i], beta[i]));
                gamma.push(alpha[i] + beta[i]);
            }
            out.add_component(gamma, coeff);
        }
    }
    Ok(out)
}

/// Product of a word of elements, left to right.
pub fn multiply_all<'a>(
    spec: &GwaSpec,
    factors: impl IntoIterator<Item = &'a GwaElement>,
) -> Result<GwaElement> {
    factors
        .into_iter()
        .try_fold(GwaElement::one(spec.rank()), |acc, f| {
            multiply(spec, &acc, f)
        })
}

/// One defining relation, written as `lhs - rhs`, together with its verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Evaluates every defining relation as a normal-form identity.
pub fn verify_relations(spec: &GwaSpec) -> RelationReport {
    let n = spec.rank();
    let x = |i| GwaElement::generator(n, Generator::X(i));
    let y = |i| GwaElement::generator(n, Generator::Y(i));
    let mul = |a: &GwaElement, b: &GwaElement| multiply(spec, a, b).expect("same rank");
    let mut checks = Vec::new();
    let mut record = |relation: String, diff: GwaElement| {
        checks.push(RelationCheck {
            relation,
            pass: diff.is_zero(),
        })
    };

    for i in 0..n {
        let t = spec.t_expanded(i);
        let sigma_t = spec.sigma_pow(&t, i, 1);
        record(
            format!("X{0}*Y{0} - sigma{0}(t{0})", i + 1),
            mul(&x(i), &y(i)).sub(&GwaElement::from_ring(sigma_t)),
        );
        record(
            format!("Y{0}*X{0} - t{0}", i + 1),
            mul(&y(i), &x(i)).sub(&GwaElement::from_ring(t)),
        );
        for j in 0..n {
            let tj = RingElement::variable(n, j);
            let tj_elem = GwaElement::from_ring(tj.clone());
            let lhs = mul(&x(i), &tj_elem);
            let rhs = mul(&GwaElement::from_ring(spec.sigma_pow(&tj, i, 1)), &x(i));
            record(
                format!(
                    "X{}*T{} - sigma{}(T{})*X{}",
                    i + 1,
                    j + 1,
                    i + 1,
                    j + 1,
                    i + 1
                ),
                lhs.sub(&rhs),
            );
            let lhs = mul(&y(i), &tj_elem);
            let rhs = mul(&GwaElement::from_ring(spec.sigma_pow(&tj, i, -1)), &y(i));
            record(
                format!(
                    "Y{}*T{} - sigma{}^-1(T{})*Y{}",
                    i + 1,
                    j + 1,
                    i + 1,
                    j + 1,
                    i + 1
                ),
                lhs.sub(&rhs),
            );
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if i < j {
                record(
                    format!("[X{}, X{}]", i + 1, j + 1),
                    mul(&x(i), &x(j)).sub(&mul(&x(j), &x(i))),
                );
                record(
                    format!("[Y{}, Y{}]", i + 1, j + 1),
                    mul(&y(i), &y(j)).sub(&mul(&y(j), &y(i))),
                );
            }
            record(
                format!("[X{}, Y{}]", i + 1, j + 1),
                mul(&x(i), &y(j)).sub(&mul(&y(j), &x(i))),
            );
        }
    }
    RelationReport { checks }
}
