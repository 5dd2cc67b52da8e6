//! Exact arithmetic over the rationals and the Gaussian rationals, together
//! with the polynomial types used for the base ring `k[T_1, ..., T_n]`.

mod gaussian;
mod poly;
mod rational;

pub use gaussian::GaussianRational;
pub use poly::{RingElement, UnivariateFactored};
pub use rational::Rational;

/// Arithmetic operation selector for [`gr_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Binary field operation on Gaussian rationals. Division by zero is an error.
pub fn gr_arith(
    a: &GaussianRational,
    b: &GaussianRational,
    op: ArithOp,
) -> crate::Result<GaussianRational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

/// Returns `k` with `z = base + k * step` when `(z - base) / step` is a rational
/// integer, `None` otherwise.
///
/// A zero `step` never has a lattice, so it yields `None` as well.
pub fn lattice_offset(
    z: &GaussianRational,
    base: &GaussianRational,
    step: &GaussianRational,
) -> Option<i64> {
    let q = (z - base).checked_div(step).ok()?;
    if !q.im().is_zero() {
        return None;
    }
    q.re().to_integer_i64()
}
