//! Truncated formal power series with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A power series known modulo `x^(order + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl PowerSeries {
    /// Series with the given leading coefficients, padded with zeros up to `order`.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        PowerSeries::new(coeffs.iter().take(order + 1).map(|&c| rat(c)).collect(), order)
    }

    pub fn from_bigints(coeffs: impl IntoIterator<Item = BigInt>, order: usize) -> Self {
        PowerSeries::new(
            coeffs.into_iter().take(order + 1).map(BigRational::from_integer).collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        PowerSeries::new(vec![c], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        PowerSeries::from_integers(&[0, 1], order)
    }

    /// `1 / (1 - x)`.
    pub fn geometric(order: usize) -> Self {
        PowerSeries::new(vec![BigRational::one(); order + 1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`; zero beyond the known order is *not* implied, so this panics there.
    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the known order");
        PowerSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, other: &PowerSeries) -> Self {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &PowerSeries) -> Self {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &PowerSeries) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    /// Multiplies by `x`; the known order goes up by one.
    pub fn shift(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries { coeffs }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = PowerSeries::one(self.order());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal derivative; known to one order less (order 0 stays order 0 with
    /// an unknown, reported-as-zero coefficient).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return PowerSeries::zero(0);
        }
        PowerSeries {
            coeffs: (1..self.coeffs.len())
                .map(|i| &self.coeffs[i] * rat(i as i64))
                .collect(),
        }
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order();
        let inv0 = a0.recip();
        let mut b: Vec<BigRational> = Vec::with_capacity(order + 1);
        b.push(inv0.clone());
        for n in 1..=order {
            let mut s = BigRational::zero();
            for k in 1..=n {
                s += &self.coeffs[k] * &b[n - k];
            }
            b.push(-s * &inv0);
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &PowerSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Domain("inner series must have zero constant term".into()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = PowerSeries::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner).add(&PowerSeries::constant(c.clone(), order));
        }
        Ok(acc)
    }

    /// `exp(self)` for a series with zero constant term, as the power sum
    /// `sum_{k <= order} self^k / k!`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("exp needs a zero constant term".into()));
        }
        let order = self.order();
        let mut acc = PowerSeries::one(order);
        let mut term = PowerSeries::one(order);
        for k in 1..=order {
            term = term.mul(self).scale(&rat(k as i64).recip());
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// The unique `P` with `P(0) = 0` and `P = x * phi(P)`, to the given order,
/// found by iterating `P <- x * phi(P)`.
pub fn solve_fixed_point(phi: &PowerSeries, order: usize) -> Result<PowerSeries> {
    if phi.coeff(0).is_zero() {
        return Err(Error::DegenerateFixedPoint);
    }
    if phi.order() + 1 < order {
        return Err(Error::Domain(format!(
            "phi known to order {} cannot determine P to order {order}",
            phi.order()
        )));
    }
    let mut p = PowerSeries::zero(order);
    // each pass fixes at least one more coefficient
    for _ in 0..order {
        let phi_p = phi.truncate(order.saturating_sub(1).min(phi.order())).compose(&p.truncate(order.saturating_sub(1)))?;
        p = phi_p.shift().truncate(order);
    }
    Ok(p)
}

/// `(1/n) [x^(n-1)] psi'(x) phi(x)^n`, which is `[x^n] psi(P)` for `P = x phi(P)`.
pub fn lagrange_coefficient(phi: &PowerSeries, psi: &PowerSeries, n: usize) -> Result<BigRational> {
    if n < 1 {
        return Err(Error::Domain("Lagrange coefficient needs n >= 1".into()));
    }
    if phi.coeff(0).is_zero() {
        return Err(Error::DegenerateFixedPoint);
    }
    if phi.order() + 1 < n || psi.order() < n {
        return Err(Error::Domain("series not known to a high enough order".into()));
    }
    let order = n - 1;
    let prod = psi.derivative().truncate(order).mul(&phi.truncate(order).pow(n));
    Ok(prod.coeff(order) / rat(n as i64))
}

/// Coefficient-wise equality up to the smaller of the two orders.
pub fn check_identity(lhs: &PowerSeries, rhs: &PowerSeries) -> bool {
    first_mismatch(lhs, rhs).is_none()
}

/// Index of the first differing coefficient, if any, up to the common order.
pub fn first_mismatch(lhs: &PowerSeries, rhs: &PowerSeries) -> Option<usize> {
    let order = lhs.order().min(rhs.order());
    (0..=order).find(|&i| lhs.coeff(i) != rhs.coeff(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_operations() {
        let one_minus_x = PowerSeries::from_integers(&[1, -1], 6);
        let inv = one_minus_x.reciprocal().unwrap();
        assert_eq!(inv, PowerSeries::geometric(6));
        assert!(check_identity(&one_minus_x.mul(&inv), &PowerSeries::one(6)));
        let x2 = PowerSeries::from_integers(&[0, 0, 1], 4);
        assert_eq!(x2.derivative(), PowerSeries::from_integers(&[0, 2], 3));
        assert_eq!(PowerSeries::x(3).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn fixed_points() {
        let catalan = solve_fixed_point(&PowerSeries::geometric(6), 6).unwrap();
        assert_eq!(catalan.coeff(3), &rat(2));
        assert_eq!(solve_fixed_point(&PowerSeries::one(5), 5).unwrap(), PowerSeries::x(5));
        let phi = PowerSeries::from_integers(&[1, 1], 6)
            .mul(&PowerSeries::from_integers(&[1, -1], 6).pow(2).reciprocal().unwrap());
        // (1/2)[x] phi^2 = (1/2) * 2 * 3
        assert_eq!(solve_fixed_point(&phi, 6).unwrap().coeff(2), &rat(3));
        assert_eq!(solve_fixed_point(&PowerSeries::x(4), 4), Err(Error::DegenerateFixedPoint));
    }

    #[test]
    fn lagrange_examples() {
        let order = 8;
        let geo = PowerSeries::geometric(order);
        let phi = PowerSeries::one(order).add(&PowerSeries::x(order).mul(&geo).mul(&geo));
        let x = PowerSeries::x(order);
        assert_eq!(lagrange_coefficient(&phi, &x, 4).unwrap(), rat(10));
        assert_eq!(lagrange_coefficient(&phi, &x, 3).unwrap(), rat(3));
        let facts: Vec<i64> = vec![1, 1, 2, 6, 24, 120, 720, 5040, 40320];
        let phi = PowerSeries::from_integers(&facts, order);
        assert_eq!(lagrange_coefficient(&phi, &x, 4).unwrap(), rat(13));
        let one = PowerSeries::one(order);
        for n in 2..6 {
            assert_eq!(lagrange_coefficient(&one, &x, n).unwrap(), rat(0));
        }
        assert!(lagrange_coefficient(&one, &x, 0).is_err());
    }
}
