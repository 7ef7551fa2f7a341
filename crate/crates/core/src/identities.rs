//! Generating-function identities checked coefficient by coefficient.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::factorial;
use crate::counting::pk_count;
use crate::error::Result;
use crate::generalized::metasylvester_multipark;
use crate::permutation::PatternSet;
use crate::series::{first_mismatch, lagrange_coefficient, solve_fixed_point, PowerSeries};

fn big(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `sum_n pk_n(P) x^n` from the counting module, with `pk_0 = 1`.
pub fn pk_series(patterns: &PatternSet, order: usize) -> PowerSeries {
    PowerSeries::from_bigints((0..=order).map(|n| BigInt::from(pk_count(n, patterns).value)), order)
}

/// `x^2 P P' + x P^2 - P + 1` for `P = sum pk_n(132) x^n`; zero when the
/// counts satisfy the Chini equation.
pub fn chini_residual(order: usize) -> PowerSeries {
    let p = pk_series(&"132".parse().expect("valid pattern"), order);
    let x = PowerSeries::x(order);
    let x2 = x.mul(&x);
    x2.mul(&p).mul(&p.derivative())
        .add(&x.mul(&p).mul(&p))
        .sub(&p)
        .add(&PowerSeries::one(order))
}

/// Both sides of `x/(1-x) = sum_{n>=1} p_n x^n (1-x)^n / prod_{l<=n} (1 + m l x)`
/// with `p_n` the metasylvester multiparking counts.
pub fn metasylvester_identity(m: usize, order: usize) -> Result<(PowerSeries, PowerSeries)> {
    let x = PowerSeries::x(order);
    let one_minus_x = PowerSeries::one(order).sub(&x);
    let lhs = x.mul(&one_minus_x.reciprocal()?);
    let mut rhs = PowerSeries::zero(order);
    let mut term = PowerSeries::one(order);
    for n in 1..=order {
        let denom = PowerSeries::one(order).add(&x.scale(&big((m * n) as u64)));
        term = term.mul(&x).mul(&one_minus_x).mul(&denom.reciprocal()?);
        rhs = rhs.add(&term.scale(&big(metasylvester_multipark(n, m))));
    }
    Ok((lhs, rhs))
}

/// Both sides of `exp(x/(1-x)) = sum_n pk_n(312,321) x^n / n!`.
pub fn exponential_312_321(order: usize) -> Result<(PowerSeries, PowerSeries)> {
    let x = PowerSeries::x(order);
    let lhs = x.mul(&PowerSeries::geometric(order)).exp()?;
    let set: PatternSet = "312,321".parse().expect("valid patterns");
    let rhs = PowerSeries::new(
        (0..=order)
            .map(|n| BigRational::new(BigInt::from(pk_count(n, &set).value), BigInt::from(factorial(n))))
            .collect(),
        order,
    );
    Ok((lhs, rhs))
}

/// First `n` in `1..=order` where the Lagrange coefficient differs from
/// `[x^n] psi(P)` with `P = x phi(P)` found by iteration.
pub fn lagrange_mismatch(phi: &PowerSeries, psi: &PowerSeries, order: usize) -> Result<Option<usize>> {
    let p = solve_fixed_point(phi, order)?;
    let composed = psi.truncate(order).compose(&p)?;
    for n in 1..=order {
        if &lagrange_coefficient(phi, psi, n)? != composed.coeff(n) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// `None` when the series is zero to its order, else the first nonzero index.
pub fn first_nonzero(s: &PowerSeries) -> Option<usize> {
    first_mismatch(s, &PowerSeries::zero(s.order()))
}

/// The fixed point of `phi(x) = 1 + x/(1-x)^2` gives `pk_n(123)` at `x^(n+1)`.
pub fn pk123_by_lagrange(n: usize) -> Result<BigRational> {
    let order = n + 1;
    let x = PowerSeries::x(order);
    let g = PowerSeries::geometric(order);
    let phi = PowerSeries::one(order).add(&x.mul(&g).mul(&g));
    lagrange_coefficient(&phi, &x, order)
}
