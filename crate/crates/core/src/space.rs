//! Indexed enumerations of groupoid families and seeded random draws.
//!
//! Each family is numbered `0..size`; `nth` decodes an index into a table, so
//! exhaustive scans can be split across workers by index range.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::groupoid::Groupoid;
use crate::{Error, Result};

/// Largest family size the indexed enumerations accept.
const MAX_FAMILY: u128 = 1 << 40;

fn checked_size(
    base: usize,
    digits: usize,
    operation: &'static str,
    order: usize,
) -> Result<usize> {
    let mut size: u128 = 1;
    for _ in 0..digits {
        size *= base as u128;
        if size > MAX_FAMILY {
            return Err(Error::GuardExceeded {
                operation,
                order,
                limit: order - 1,
            });
        }
    }
    Ok(size as usize)
}

/// All of `Bin(X)` for `|X| = n`: `n^(n²)` tables, entry `p` of table `i` is
/// base-`n` digit `p` of `i` (least significant first).
#[derive(Debug, Clone, Copy)]
pub struct AllGroupoids {
    order: usize,
    size: usize,
}

impl AllGroupoids {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let size = checked_size(order, order * order, "enumerating Bin(X)", order)?;
        Ok(AllGroupoids { order, size })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn nth(&self, mut index: usize) -> Groupoid {
        let n = self.order;
        let mut table = vec![0u8; n * n];
        for slot in table.iter_mut() {
            *slot = (index % n) as u8;
            index /= n;
        }
        Groupoid::from_raw(n, table)
    }

    pub fn iter(&self) -> impl Iterator<Item = Groupoid> + '_ {
        (0..self.size).map(|i| self.nth(i))
    }
}

/// Groupoids with the orientation property: one bit per ordered pair
/// `x ≠ y` (row-major), `0` meaning `x • y = x` and `1` meaning `x • y = y`.
#[derive(Debug, Clone, Copy)]
pub struct OrientedGroupoids {
    order: usize,
    size: usize,
}

impl OrientedGroupoids {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let size = checked_size(2, order * (order - 1), "enumerating OP(X)", order)?;
        Ok(OrientedGroupoids { order, size })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn nth(&self, index: usize) -> Groupoid {
        let n = self.order;
        let mut bit = 0;
        let mut table = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = if x == y {
                    x as u8
                } else {
                    let right = index >> bit & 1 == 1;
                    bit += 1;
                    if right {
                        y as u8
                    } else {
                        x as u8
                    }
                };
            }
        }
        Groupoid::from_raw(n, table)
    }

    pub fn iter(&self) -> impl Iterator<Item = Groupoid> + '_ {
        (0..self.size).map(|i| self.nth(i))
    }
}

/// Commutative groupoids `Ab(X)`: base-`n` digits fill the upper triangle
/// (diagonal included) row by row, mirrored below.
#[derive(Debug, Clone, Copy)]
pub struct CommutativeGroupoids {
    order: usize,
    size: usize,
}

impl CommutativeGroupoids {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let size = checked_size(order, order * (order + 1) / 2, "enumerating Ab(X)", order)?;
        Ok(CommutativeGroupoids { order, size })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn nth(&self, mut index: usize) -> Groupoid {
        let n = self.order;
        let mut table = vec![0u8; n * n];
        for x in 0..n {
            for y in x..n {
                let v = (index % n) as u8;
                index /= n;
                table[x * n + y] = v;
                table[y * n + x] = v;
            }
        }
        Groupoid::from_raw(n, table)
    }
}

/// Deterministic generator for sample `case` of a run seeded with `seed`.
/// Each case owns its own stream, so samples do not depend on how cases are
/// distributed across workers.
pub fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case as u64);
    rng
}

/// Uniform over all tables: each entry independently uniform in `0..order`.
pub fn random_groupoid<R: Rng + ?Sized>(rng: &mut R, order: usize) -> Groupoid {
    let table = (0..order * order)
        .map(|_| rng.random_range(0..order) as u8)
        .collect();
    Groupoid::from_raw(order, table)
}

pub fn random_oriented<R: Rng + ?Sized>(rng: &mut R, order: usize) -> Groupoid {
    let n = order;
    let table = (0..n * n)
        .map(|p| {
            let (x, y) = (p / n, p % n);
            if rng.random::<bool>() {
                y as u8
            } else {
                x as u8
            }
        })
        .collect();
    Groupoid::from_raw(n, table)
}

pub fn random_commutative<R: Rng + ?Sized>(rng: &mut R, order: usize) -> Groupoid {
    let n = order;
    let mut table = vec![0u8; n * n];
    for x in 0..n {
        for y in x..n {
            let v = rng.random_range(0..n) as u8;
            table[x * n + y] = v;
            table[y * n + x] = v;
        }
    }
    Groupoid::from_raw(n, table)
}
