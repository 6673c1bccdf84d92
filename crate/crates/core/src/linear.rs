//! Linear groupoids `x ∗ y = a·x + b·y + c` over `Z_m`.

use std::fmt;

use crate::groupoid::Groupoid;
use crate::{Error, Result};

/// Coefficients `(a, b, c)` reduced modulo `modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearCoeffs {
    modulus: u32,
    a: u32,
    b: u32,
    c: u32,
}

impl LinearCoeffs {
    pub fn new(modulus: u32, a: u64, b: u64, c: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let m = modulus as u64;
        Ok(LinearCoeffs {
            modulus,
            a: (a % m) as u32,
            b: (b % m) as u32,
            c: (c % m) as u32,
        })
    }

    /// `(1, 0, 0)`: the left-zero semigroup, identity of the box product.
    pub fn identity(modulus: u32) -> Result<Self> {
        Self::new(modulus, 1, 0, 0)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coefficients(&self) -> (u32, u32, u32) {
        (self.a, self.b, self.c)
    }

    pub fn eval(&self, x: u64, y: u64) -> u64 {
        let m = self.modulus as u64;
        (self.a as u64 * (x % m) + self.b as u64 * (y % m) + self.c as u64) % m
    }

    pub fn to_table(&self) -> Result<Groupoid> {
        let m = self.modulus as usize;
        if m > crate::MAX_ORDER {
            return Err(Error::OrderTooLarge(m));
        }
        Groupoid::from_fn(m, |x, y| self.eval(x as u64, y as u64) as usize)
    }

    /// Coefficients of `inner □ outer`. With `inner = (a, b, c)` and
    /// `outer = (d, e, f)`:
    /// `d(ax + by + c) + e(ay + bx + c) + f = (da + eb)x + (db + ea)y + (d + e)c + f`.
    pub fn compose(&self, outer: &LinearCoeffs) -> Result<LinearCoeffs> {
        if self.modulus != outer.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: outer.modulus,
            });
        }
        let (a, b, c) = (self.a as u64, self.b as u64, self.c as u64);
        let (d, e, f) = (outer.a as u64, outer.b as u64, outer.c as u64);
        LinearCoeffs::new(self.modulus, d * a + e * b, d * b + e * a, (d + e) * c + f)
    }

    /// Every coefficient triple over `Z_modulus`, `a` varying fastest.
    pub fn all(modulus: u32) -> Result<impl Iterator<Item = LinearCoeffs>> {
        LinearCoeffs::identity(modulus)?;
        let m = modulus as u64;
        Ok((0..m * m * m).map(move |i| LinearCoeffs {
            modulus,
            a: (i % m) as u32,
            b: (i / m % m) as u32,
            c: (i / (m * m)) as u32,
        }))
    }
}

impl fmt::Display for LinearCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.a, self.b, self.c)
    }
}
