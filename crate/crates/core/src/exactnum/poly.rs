use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{GaussianRational, Rational};

/// Sparse polynomial in `k[T_1, ..., T_n]` with Gaussian rational coefficients.
///
/// Exponent vectors have length `nvars`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, GaussianRational>,
}

impl RingElement {
    pub fn zero(nvars: usize) -> Self {
        RingElement {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        let mut r = RingElement::zero(nvars);
        r.add_term(vec![0; nvars], c);
        r
    }

    pub fn one(nvars: usize) -> Self {
        RingElement::constant(nvars, GaussianRational::one())
    }

    /// The coordinate function `T_{var+1}` (variables are 0-based here).
    pub fn variable(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[var] = 1;
        let mut r = RingElement::zero(nvars);
        r.add_term(e, GaussianRational::one());
        r
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, GaussianRational)>,
    ) -> Self {
        let mut r = RingElement::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector has wrong length");
            r.add_term(e, c);
        }
        r
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the element lies in the ground field.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&d| d == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in a single variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn coefficient(&self, exponent: &[u32]) -> GaussianRational {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, e: Vec<u32>, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &RingElement) -> RingElement {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> RingElement {
        RingElement {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &RingElement) -> RingElement {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, k: &GaussianRational) -> RingElement {
        if k.is_zero() {
            return RingElement::zero(self.nvars);
        }
        RingElement {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, rhs: &RingElement) -> RingElement {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = RingElement::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.nvars, "point has wrong dimension");
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &d) in point.iter().zip(e) {
                if d > 0 {
                    term = &term * &x.pow(d);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Substitutes `T_var -> T_var - c`.
    ///
    /// With `c = k * b_var` this is the automorphism `sigma_var^k`.
    pub fn shift_substitute(&self, var: usize, c: &GaussianRational) -> RingElement {
        assert!(var < self.nvars, "variable index out of range");
        if c.is_zero() {
            return self.clone();
        }
        let neg_c = -c;
        let mut out = RingElement::zero(self.nvars);
        for (e, coeff) in &self.terms {
            let d = e[var];
            // (T - c)^d = sum_k binom(d, k) T^k (-c)^(d-k)
            let mut binom = BigInt::one();
            for k in 0..=d {
                let scalar = GaussianRational::from(
                    Rational::from_big(binom.clone(), BigInt::one()).expect("nonzero denominator"),
                ) * neg_c.pow(d - k);
                let mut exp = e.clone();
                exp[var] = k;
                out.add_term(exp, coeff * &scalar);
                binom = binom * BigInt::from(d - k) / BigInt::from(k + 1);
            }
        }
        out
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(i, &d)| {
                    if d == 1 {
                        format!("T{}", i + 1)
                    } else {
                        format!("T{}^{}", i + 1, d)
                    }
                })
                .collect();
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if c.re().is_zero() || c.im().is_zero() {
                c.to_string()
            } else {
                format!("({c})")
            };
            if monomial.is_empty() {
                write!(f, "{coeff}")?;
            } else if c.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monic one-variable polynomial `prod (T_var - z)` given by its root multiset.
///
/// Roots are kept in canonical (sorted) order, so equal multisets compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct UnivariateFactored {
    variable: usize,
    roots: Vec<GaussianRational>,
}

impl UnivariateFactored {
    /// `variable` is 0-based. The root multiset must be nonempty.
    pub fn new(variable: usize, mut roots: Vec<GaussianRational>) -> crate::Result<Self> {
        if roots.is_empty() {
            return Err(crate::Error::InvalidInput(format!(
                "t_{} must have at least one root (t_i must not be a constant)",
                variable + 1
            )));
        }
        roots.sort();
        Ok(UnivariateFactored { variable, roots })
    }

    pub fn variable(&self) -> usize {
        self.variable
    }

    pub fn roots(&self) -> &[GaussianRational] {
        &self.roots
    }

    /// Distinct roots in canonical order.
    pub fn distinct_roots(&self) -> Vec<GaussianRational> {
        let mut r = self.roots.clone();
        r.dedup();
        r
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Value at a single coordinate `x` of the variable.
    pub fn evaluate_at(&self, x: &GaussianRational) -> GaussianRational {
        self.roots
            .iter()
            .fold(GaussianRational::one(), |acc, z| &acc * &(x - z))
    }

    /// Value at a full point of `k^n`.
    pub fn evaluate(&self, point: &[GaussianRational]) -> GaussianRational {
        self.evaluate_at(&point[self.variable])
    }

    pub fn expand(&self, nvars: usize) -> RingElement {
        let t = RingElement::variable(nvars, self.variable);
        self.roots.iter().fold(RingElement::one(nvars), |acc, z| {
            acc.mul(&t.sub(&RingElement::constant(nvars, z.clone())))
        })
    }
}

/// Factored display, e.g. `(T1 + 1)*T1*(T1 - 1)`.
impl fmt::Display for UnivariateFactored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = format!("T{}", self.variable + 1);
        let factors: Vec<String> = self
            .roots
            .iter()
            .map(|z| {
                if z.is_zero() {
                    var.clone()
                } else if z.im().is_zero() && z.re().is_negative() {
                    format!("({var} + {})", z.re().abs())
                } else if z.im().is_zero() || z.re().is_zero() {
                    format!("({var} - {z})")
                } else {
                    format!("({var} - ({z}))")
                }
            })
            .collect();
        write!(f, "{}", factors.join("*"))
    }
}
