//! Exact arithmetic in `Z[ζ_p]`.
//!
//! Values are stored in the basis `1, ζ, …, ζ^(p-2)`; `ζ^(p-1)` is always
//! rewritten as `-(1 + ζ + … + ζ^(p-2))`, so two values are equal exactly when
//! their coordinate vectors are.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    p: u32,
    coords: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn zero(p: u32) -> Self {
        CyclotomicInt { p, coords: vec![BigInt::zero(); p as usize - 1] }
    }

    pub fn from_integer(p: u32, k: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(p);
        out.coords[0] = k.into();
        out
    }

    pub fn one(p: u32) -> Self {
        Self::from_integer(p, 1)
    }

    /// `ζ_p^e`.
    pub fn root_power(p: u32, e: u32) -> Self {
        let mut counts = vec![0i64; p as usize];
        counts[(e % p) as usize] = 1;
        Self::from_exponent_counts(p, &counts)
    }

    /// `Σ counts[e] · ζ^e` over `e < p`.
    pub fn from_exponent_counts<T>(p: u32, counts: &[T]) -> Self
    where
        T: Clone + Into<BigInt>,
    {
        assert_eq!(counts.len(), p as usize, "need one count per exponent");
        let raw: Vec<BigInt> = counts.iter().cloned().map(Into::into).collect();
        Self::reduce(p, raw)
    }

    /// Canonical form of a length-`p` coefficient vector on `1, ζ, …, ζ^(p-1)`.
    fn reduce(p: u32, mut raw: Vec<BigInt>) -> Self {
        debug_assert_eq!(raw.len(), p as usize);
        let top = raw.pop().expect("p >= 2");
        if !top.is_zero() {
            for c in raw.iter_mut() {
                *c -= &top;
            }
        }
        CyclotomicInt { p, coords: raw }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn to_integer(&self) -> Result<BigInt> {
        if self.is_rational() {
            Ok(self.coords[0].clone())
        } else {
            Err(Error::NotRationalInteger(self.to_string()))
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::CyclotomicMismatch { left: self.p, right: other.p })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(CyclotomicInt { p: self.p, coords })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let p = self.p as usize;
        let mut raw = vec![BigInt::zero(); p];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    raw[(i + j) % p] += a * b;
                }
            }
        }
        Ok(Self::reduce(self.p, raw))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        CyclotomicInt { p: self.p, coords: self.coords.iter().map(|c| c * k).collect() }
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn neg(self) -> CyclotomicInt {
        CyclotomicInt { p: self.p, coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;

    /// Panics if the operands live in different rings; see [`CyclotomicInt::try_add`].
    fn add(self, rhs: Self) -> CyclotomicInt {
        self.try_add(rhs).expect("cyclotomic ring mismatch")
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn sub(self, rhs: Self) -> CyclotomicInt {
        self.try_sub(rhs).expect("cyclotomic ring mismatch")
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn mul(self, rhs: Self) -> CyclotomicInt {
        self.try_mul(rhs).expect("cyclotomic ring mismatch")
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}·")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[ζ_{}]({self})", self.p)
    }
}
