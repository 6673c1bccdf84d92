//! The center of `(Bin(X), □)` and its locally-zero description.
//!
//! A groupoid that commutes with every element of `Bin(X)` is *locally-zero*:
//! idempotent, with each two-element restriction a left-zero or a right-zero
//! semigroup. A locally-zero groupoid is fixed by one L/R flag per unordered
//! pair, which is what [`PairMask`] stores, and on such groupoids the box
//! product is flagwise exclusive-or.
//!
//! The converse does not hold once there are three elements. The brute-force
//! scan finds only the left-zero and right-zero tables central at orders 2
//! and 3: `(x ∗ y) • (y ∗ x)` consults the orientation of whichever pair
//! `{x ∗ y, y ∗ x}` happens to be, so a mixed mask always has a partner it
//! fails to commute with.

use std::fmt;

use itertools::Itertools;

use crate::exec::Strategy;
use crate::groupoid::{box_commutes, Groupoid};
use crate::space::{case_rng, random_groupoid, AllGroupoids};
use crate::{Error, Result};

/// Largest order the brute-force center scan accepts (`3^9` partners).
pub const BRUTEFORCE_MAX_ORDER: usize = 3;
/// Largest pair count `enumerate_locally_zero` accepts.
pub const ENUMERATE_MAX_PAIRS: usize = 30;
pub const ISOMORPHISM_MAX_ORDER: usize = 8;
pub const ISO_CLASSES_MAX_ORDER: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubtableKind {
    LeftZero,
    RightZero,
    Neither,
}

/// Classifies the restriction of `g` to `{x, y}`. Diagonal entries are not
/// consulted.
pub fn subtable_kind(g: &Groupoid, x: usize, y: usize) -> Result<SubtableKind> {
    g.apply(x, y)?;
    if x == y {
        return Err(Error::DiagonalPair(x));
    }
    Ok(kind_unchecked(g, x, y))
}

fn kind_unchecked(g: &Groupoid, x: usize, y: usize) -> SubtableKind {
    match (g.get(x, y), g.get(y, x)) {
        (a, b) if a == x && b == y => SubtableKind::LeftZero,
        (a, b) if a == y && b == x => SubtableKind::RightZero,
        _ => SubtableKind::Neither,
    }
}

pub fn is_locally_zero(g: &Groupoid) -> bool {
    let n = g.order();
    g.is_idempotent()
        && (0..n).all(|x| (x + 1..n).all(|y| kind_unchecked(g, x, y) != SubtableKind::Neither))
}

pub fn pair_count(order: usize) -> usize {
    order * order.saturating_sub(1) / 2
}

/// Position of the unordered pair `{x, y}`, `x < y`, in canonical order:
/// `(0,1), (0,2), .., (0,n-1), (1,2), ..`.
#[inline]
pub fn pair_index(order: usize, x: usize, y: usize) -> usize {
    debug_assert!(x < y && y < order);
    x * order - x * (x + 1) / 2 + (y - x - 1)
}

/// One flag per unordered pair: clear for a left-zero restriction, set for a
/// right-zero one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairMask {
    order: usize,
    words: Vec<u64>,
}

impl PairMask {
    pub fn all_left(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if order > crate::MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        Ok(PairMask {
            order,
            words: vec![0; pair_count(order).div_ceil(64)],
        })
    }

    pub fn all_right(order: usize) -> Result<Self> {
        let mut m = Self::all_left(order)?;
        for p in 0..m.len() {
            m.set(p, true);
        }
        Ok(m)
    }

    /// The mask whose flag `p` is bit `p` of `index`.
    pub fn from_index(order: usize, index: u64) -> Result<Self> {
        let mut m = Self::all_left(order)?;
        let len = m.len();
        if len < 64 && index >> len != 0 || len > 64 {
            return Err(Error::GuardExceeded {
                operation: "numeric mask index",
                order,
                limit: 11,
            });
        }
        if len > 0 {
            m.words[0] = index;
        }
        Ok(m)
    }

    /// Inverse of [`PairMask::from_index`], when the mask fits in 64 bits.
    pub fn to_index(&self) -> Option<u64> {
        match self.words.as_slice() {
            [] => Some(0),
            [w] => Some(*w),
            _ => None,
        }
    }

    pub fn from_flags(order: usize, flags: &[bool]) -> Result<Self> {
        let mut m = Self::all_left(order)?;
        if flags.len() != m.len() {
            return Err(Error::MaskLength {
                order,
                expected: m.len(),
                found: flags.len(),
            });
        }
        for (p, &f) in flags.iter().enumerate() {
            m.set(p, f);
        }
        Ok(m)
    }

    /// Parses the `L`/`R` string form for the given order.
    pub fn parse(order: usize, text: &str) -> Result<Self> {
        let flags = text
            .chars()
            .map(|c| match c {
                'L' => Ok(false),
                'R' => Ok(true),
                other => Err(Error::MaskFlag(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_flags(order, &flags)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of flags, `C(order, 2)`.
    pub fn len(&self) -> usize {
        pair_count(self.order)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn get(&self, pair: usize) -> bool {
        self.words[pair / 64] >> (pair % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, pair: usize, right: bool) {
        let bit = 1u64 << (pair % 64);
        if right {
            self.words[pair / 64] |= bit;
        } else {
            self.words[pair / 64] &= !bit;
        }
    }

    /// Orientation of `{x, y}`; `x ≠ y` in either order.
    pub fn kind(&self, x: usize, y: usize) -> SubtableKind {
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        if self.get(pair_index(self.order, lo, hi)) {
            SubtableKind::RightZero
        } else {
            SubtableKind::LeftZero
        }
    }

    pub fn is_all_left(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_all_right(&self) -> bool {
        (0..self.len()).all(|p| self.get(p))
    }

    pub fn count_right(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl fmt::Display for PairMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.len() {
            f.write_str(if self.get(p) { "R" } else { "L" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for PairMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairMask({}:{})", self.order, self)
    }
}

pub fn to_mask(g: &Groupoid) -> Result<PairMask> {
    if !g.is_idempotent() {
        return Err(Error::NotLocallyZero);
    }
    let n = g.order();
    let mut m = PairMask::all_left(n)?;
    let mut p = 0;
    for x in 0..n {
        for y in x + 1..n {
            match kind_unchecked(g, x, y) {
                SubtableKind::LeftZero => {}
                SubtableKind::RightZero => m.set(p, true),
                SubtableKind::Neither => return Err(Error::NotLocallyZero),
            }
            p += 1;
        }
    }
    Ok(m)
}

pub fn from_mask(m: &PairMask) -> Groupoid {
    let n = m.order();
    let mut table = vec![0u8; n * n];
    for x in 0..n {
        table[x * n + x] = x as u8;
    }
    let mut p = 0;
    for x in 0..n {
        for y in x + 1..n {
            let (xy, yx) = if m.get(p) { (y, x) } else { (x, y) };
            table[x * n + y] = xy as u8;
            table[y * n + x] = yx as u8;
            p += 1;
        }
    }
    Groupoid::from_raw(n, table)
}

/// The box product in mask coordinates: flagwise exclusive-or.
pub fn mask_box(first: &PairMask, second: &PairMask) -> Result<PairMask> {
    if first.order != second.order {
        return Err(Error::OrderMismatch {
            left: first.order,
            right: second.order,
        });
    }
    Ok(PairMask {
        order: first.order,
        words: first
            .words
            .iter()
            .zip(&second.words)
            .map(|(a, b)| a ^ b)
            .collect(),
    })
}

/// Every locally-zero groupoid of the given order, by ascending mask index.
pub fn enumerate_locally_zero(order: usize) -> Result<impl Iterator<Item = Groupoid>> {
    let pairs = pair_count(order);
    if pairs > ENUMERATE_MAX_PAIRS {
        return Err(Error::GuardExceeded {
            operation: "enumerate_locally_zero",
            order,
            limit: 8,
        });
    }
    PairMask::all_left(order)?;
    Ok((0..1u64 << pairs).map(move |i| from_mask(&PairMask::from_index(order, i).unwrap())))
}

fn bruteforce_guard(order: usize, operation: &'static str) -> Result<AllGroupoids> {
    if order > BRUTEFORCE_MAX_ORDER {
        return Err(Error::GuardExceeded {
            operation,
            order,
            limit: BRUTEFORCE_MAX_ORDER,
        });
    }
    AllGroupoids::new(order)
}

/// First `h` in `Bin(X)` with `g □ h ≠ h □ g`, if any. The probe groupoids
/// are tried before the full enumeration; every table is still visited when
/// `g` is central.
pub fn center_witness(g: &Groupoid) -> Result<Option<Groupoid>> {
    let all = bruteforce_guard(g.order(), "is_in_center_bruteforce")?;
    first_noncommuting(g, &all, &probe_groupoids(g.order())?)
}

fn first_noncommuting(
    g: &Groupoid,
    all: &AllGroupoids,
    probes: &[Groupoid],
) -> Result<Option<Groupoid>> {
    if let Some(p) = probes.iter().find(|h| !box_commutes(g, h)) {
        return Ok(Some(p.clone()));
    }
    Ok((0..all.len())
        .map(|i| all.nth(i))
        .find(|h| !box_commutes(g, h)))
}

/// Compares `g` against every groupoid of its order.
pub fn is_in_center_bruteforce(g: &Groupoid) -> Result<bool> {
    center_witness(g).map(|w| w.is_none())
}

/// The deterministic partners used by the sampled screen: every constant
/// groupoid, then the min and max semilattices.
pub fn probe_groupoids(order: usize) -> Result<Vec<Groupoid>> {
    let mut probes = (0..order)
        .map(|a| Groupoid::constant(order, a))
        .collect::<Result<Vec<_>>>()?;
    probes.push(Groupoid::min(order)?);
    probes.push(Groupoid::max(order)?);
    Ok(probes)
}

/// Necessary-condition screen: commutation with the probes and `trials`
/// seeded random groupoids. `false` is definitive; `true` only means no
/// witness turned up.
pub fn is_in_center_sampled(g: &Groupoid, trials: usize, seed: u64) -> Result<bool> {
    let n = g.order();
    if !probe_groupoids(n)?.iter().all(|h| box_commutes(g, h)) {
        return Ok(false);
    }
    Ok((0..trials).all(|t| box_commutes(g, &random_groupoid(&mut case_rng(seed, t), n))))
}

pub fn center_bruteforce(order: usize) -> Result<Vec<Groupoid>> {
    center_bruteforce_with(order, Strategy::default())
}

/// All central groupoids of the given order, in enumeration order.
pub fn center_bruteforce_with(order: usize, strategy: Strategy) -> Result<Vec<Groupoid>> {
    let all = bruteforce_guard(order, "center_bruteforce")?;
    let probes = probe_groupoids(order)?;
    Ok(strategy.filter_map(all.len(), |i| {
        let g = all.nth(i);
        first_noncommuting(&g, &all, &probes)
            .ok()?
            .is_none()
            .then_some(g)
    }))
}

fn permutations(order: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..order).permutations(order)
}

/// Full permutation search for `φ` with `φ(x • y) = φ(x) ∘ φ(y)`.
pub fn are_isomorphic(g: &Groupoid, h: &Groupoid) -> Result<bool> {
    let n = g.order();
    if h.order() != n {
        return Err(Error::OrderMismatch {
            left: n,
            right: h.order(),
        });
    }
    if n > ISOMORPHISM_MAX_ORDER {
        return Err(Error::GuardExceeded {
            operation: "are_isomorphic",
            order: n,
            limit: ISOMORPHISM_MAX_ORDER,
        });
    }
    Ok(permutations(n)
        .any(|phi| (0..n).all(|x| (0..n).all(|y| phi[g.get(x, y)] == h.get(phi[x], phi[y])))))
}

/// For each permutation `φ`, where pair `p` lands under `{x, y} ↦ {φx, φy}`.
///
/// The L/R type of a pair is symmetric in its endpoints, so relabelling a
/// locally-zero table moves flags between pairs without changing them.
pub fn pair_actions(order: usize) -> Vec<Vec<usize>> {
    permutations(order)
        .map(|phi| {
            let mut image = Vec::with_capacity(pair_count(order));
            for x in 0..order {
                for y in x + 1..order {
                    let (a, b) = (phi[x].min(phi[y]), phi[x].max(phi[y]));
                    image.push(pair_index(order, a, b));
                }
            }
            image
        })
        .collect()
}

#[inline]
fn act(image: &[usize], mask: u64) -> u64 {
    image
        .iter()
        .enumerate()
        .fold(0, |acc, (p, &q)| acc | (mask >> p & 1) << q)
}

pub fn count_iso_classes(order: usize) -> Result<usize> {
    count_iso_classes_with(order, Strategy::default())
}

/// Orbits of masks under relabelling: a mask is counted when it is the
/// smallest index in its own orbit.
pub fn count_iso_classes_with(order: usize, strategy: Strategy) -> Result<usize> {
    if order > ISO_CLASSES_MAX_ORDER {
        return Err(Error::GuardExceeded {
            operation: "count_iso_classes",
            order,
            limit: ISO_CLASSES_MAX_ORDER,
        });
    }
    PairMask::all_left(order)?;
    let actions = pair_actions(order);
    let masks = 1usize << pair_count(order);
    Ok(strategy.count(masks, |m| {
        actions.iter().all(|image| act(image, m as u64) >= m as u64)
    }))
}
