//! Cayley tables of finite groupoids and the box product.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// Largest supported order; entries are stored as `u8`.
pub const MAX_ORDER: usize = 256;

/// A binary operation on `{0, .., order-1}`, stored row-major:
/// `x • y` lives at position `x * order + y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Groupoid {
    order: usize,
    table: Vec<u8>,
}

fn check_order(order: usize) -> Result<()> {
    match order {
        0 => Err(Error::ZeroOrder),
        n if n > MAX_ORDER => Err(Error::OrderTooLarge(n)),
        _ => Ok(()),
    }
}

impl Groupoid {
    pub fn new(order: usize, entries: &[usize]) -> Result<Self> {
        check_order(order)?;
        if entries.len() != order * order {
            return Err(Error::LengthMismatch {
                order,
                expected: order * order,
                found: entries.len(),
            });
        }
        let table = entries
            .iter()
            .enumerate()
            .map(|(position, &value)| {
                if value < order {
                    Ok(value as u8)
                } else {
                    Err(Error::EntryOutOfRange {
                        order,
                        position,
                        value,
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Groupoid { order, table })
    }

    /// Builds the table `x • y = op(x, y)`.
    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        check_order(order)?;
        let entries: Vec<usize> = (0..order * order)
            .map(|p| op(p / order, p % order))
            .collect();
        Self::new(order, &entries)
    }

    // Internal constructor for tables whose entries are known to be in range.
    pub(crate) fn from_raw(order: usize, table: Vec<u8>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!(table.iter().all(|&v| (v as usize) < order));
        Groupoid { order, table }
    }

    pub fn left_zero(order: usize) -> Result<Self> {
        Self::from_fn(order, |x, _| x)
    }

    pub fn right_zero(order: usize) -> Result<Self> {
        Self::from_fn(order, |_, y| y)
    }

    pub fn constant(order: usize, value: usize) -> Result<Self> {
        check_order(order)?;
        if value >= order {
            return Err(Error::ElementOutOfRange {
                order,
                element: value,
            });
        }
        Self::from_fn(order, |_, _| value)
    }

    /// `x • y = min(x, y)` under the natural order of indices.
    pub fn min(order: usize) -> Result<Self> {
        Self::from_fn(order, usize::min)
    }

    pub fn max(order: usize) -> Result<Self> {
        Self::from_fn(order, usize::max)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `x • y`, range-checked.
    pub fn apply(&self, x: usize, y: usize) -> Result<usize> {
        for element in [x, y] {
            if element >= self.order {
                return Err(Error::ElementOutOfRange {
                    order: self.order,
                    element,
                });
            }
        }
        Ok(self.get(x, y))
    }

    /// `x • y` without the range check. Panics on out-of-range indices.
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    /// The flattened row-major table.
    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.table.iter().map(|&v| v as usize)
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.order).all(|x| self.get(x, x) == x)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.get(x, y) == self.get(y, x)))
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    /// Lexicographically first `(x, y, z)` with `(x•y)•z ≠ x•(y•z)`.
    pub fn associativity_witness(&self) -> Option<[usize; 3]> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    if self.get(xy, z) != self.get(x, self.get(y, z)) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_left_zero(&self) -> bool {
        let n = self.order;
        (0..n * n).all(|p| self.table[p] as usize == p / n)
    }

    pub fn is_right_zero(&self) -> bool {
        let n = self.order;
        (0..n * n).all(|p| self.table[p] as usize == p % n)
    }

    /// `x • y ∈ {x, y}` for all `x, y`.
    pub fn has_orientation_property(&self) -> bool {
        let n = self.order;
        (0..n * n).all(|p| {
            let v = self.table[p] as usize;
            v == p / n || v == p % n
        })
    }

    /// Both travel-groupoid axioms: `(u•v)•u = u`, and `(u•v)•v = u`
    /// implies `u = v`, for every ordered pair.
    pub fn is_travel_groupoid(&self) -> bool {
        let n = self.order;
        (0..n).all(|u| {
            (0..n).all(|v| {
                let uv = self.get(u, v);
                self.get(uv, u) == u && (self.get(uv, v) != u || u == v)
            })
        })
    }

    /// The digraph `{(u, v) : u ≠ v, u • v = v}` of an oriented groupoid.
    pub fn digraph(&self) -> Result<Digraph> {
        if !self.has_orientation_property() {
            return Err(Error::NotOriented);
        }
        let n = self.order;
        let edges = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && self.get(u, v) == v)
            .collect();
        Ok(Digraph { order: n, edges })
    }

    /// Relabels elements through `perm`: the result maps `perm[x], perm[y]`
    /// to `perm[x • y]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::OrderMismatch {
                left: n,
                right: perm.len(),
            });
        }
        let mut table = vec![0u8; n * n];
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::ElementOutOfRange {
                    order: n,
                    element: p,
                });
            }
        }
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.get(x, y)] as u8;
            }
        }
        Ok(Groupoid::from_raw(n, table))
    }
}

impl fmt::Debug for Groupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Groupoid({}; ", self.order)?;
        for (row, chunk) in self.table.chunks(self.order).enumerate() {
            if row > 0 {
                f.write_str(" | ")?;
            }
            for (i, v) in chunk.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        f.write_str(")")
    }
}

/// `(X,∗)□(X,•)` with `first = ∗` and `second = •`:
/// `x □ y = (x ∗ y) • (y ∗ x)`.
pub fn box_product(first: &Groupoid, second: &Groupoid) -> Result<Groupoid> {
    if first.order != second.order {
        return Err(Error::OrderMismatch {
            left: first.order,
            right: second.order,
        });
    }
    Ok(box_unchecked(first, second))
}

pub(crate) fn box_unchecked(first: &Groupoid, second: &Groupoid) -> Groupoid {
    let n = first.order;
    let inner = &first.table;
    let outer = &second.table;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let a = inner[x * n + y] as usize;
            let b = inner[y * n + x] as usize;
            table.push(outer[a * n + b]);
        }
    }
    Groupoid::from_raw(n, table)
}

/// Whether `g □ h = h □ g`, compared entrywise without building either table.
pub fn box_commutes(g: &Groupoid, h: &Groupoid) -> bool {
    let n = g.order;
    if h.order != n {
        return false;
    }
    let (gt, ht) = (&g.table, &h.table);
    (0..n).all(|x| {
        (0..n).all(|y| {
            let gh = ht[gt[x * n + y] as usize * n + gt[y * n + x] as usize];
            let hg = gt[ht[x * n + y] as usize * n + ht[y * n + x] as usize];
            gh == hg
        })
    })
}

/// Edge set extracted from an oriented groupoid. Loops never appear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    pub order: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn is_symmetric(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| self.edges.contains(&(v, u)))
    }

    /// Every ordered pair of distinct vertices is an edge.
    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.order * (self.order - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_2_6() -> Groupoid {
        Groupoid::new(3, &[0, 0, 2, 1, 1, 1, 0, 2, 2]).unwrap()
    }

    #[test]
    fn make_groupoid_examples() {
        let lz = Groupoid::new(2, &[0, 0, 1, 1]).unwrap();
        assert_eq!(lz, Groupoid::left_zero(2).unwrap());
        assert_eq!(example_2_6().get(0, 2), 2);
        assert_eq!(
            Groupoid::new(2, &[0, 0, 1, 2]),
            Err(Error::EntryOutOfRange {
                order: 2,
                position: 3,
                value: 2
            })
        );
        assert!(matches!(
            Groupoid::new(2, &[0, 0, 1]),
            Err(Error::LengthMismatch { .. })
        ));
        assert_eq!(Groupoid::new(0, &[]), Err(Error::ZeroOrder));
        assert_eq!(
            Groupoid::left_zero(MAX_ORDER + 1),
            Err(Error::OrderTooLarge(MAX_ORDER + 1))
        );
    }

    #[test]
    fn apply_examples() {
        assert_eq!(example_2_6().apply(0, 2), Ok(2));
        assert_eq!(Groupoid::left_zero(3).unwrap().apply(1, 2), Ok(1));
        assert_eq!(Groupoid::min(3).unwrap().apply(2, 1), Ok(1));
        assert!(example_2_6().apply(3, 0).is_err());
        let g = example_2_6();
        for x in 0..3 {
            assert_eq!(g.apply(x, x), Ok(x));
        }
    }

    #[test]
    fn constructors() {
        let flat = |g: Groupoid| g.entries().collect::<Vec<_>>();
        assert_eq!(flat(Groupoid::left_zero(2).unwrap()), [0, 0, 1, 1]);
        assert_eq!(flat(Groupoid::right_zero(2).unwrap()), [0, 1, 0, 1]);
        assert_eq!(flat(Groupoid::constant(2, 0).unwrap()), [0, 0, 0, 0]);
        assert_eq!(flat(Groupoid::min(2).unwrap()), [0, 0, 0, 1]);
        assert_eq!(flat(Groupoid::max(2).unwrap()), [0, 1, 1, 1]);
        assert!(Groupoid::constant(2, 2).is_err());
    }

    #[test]
    fn box_examples() {
        let g = example_2_6();
        let lz = Groupoid::left_zero(3).unwrap();
        let rz = Groupoid::right_zero(3).unwrap();
        assert_eq!(box_product(&lz, &g).unwrap(), g);
        assert_eq!(box_product(&g, &lz).unwrap(), g);
        assert_eq!(box_product(&rz, &rz).unwrap(), lz);
        assert_eq!(box_product(&g, &g).unwrap(), lz);
        assert!(box_product(&g, &Groupoid::left_zero(2).unwrap()).is_err());
    }

    #[test]
    fn box_is_not_commutative_in_general() {
        let c = Groupoid::constant(2, 0).unwrap();
        let m = Groupoid::constant(2, 1).unwrap();
        assert_ne!(box_product(&c, &m).unwrap(), box_product(&m, &c).unwrap());
        assert!(!box_commutes(&c, &m));
    }

    #[test]
    fn predicates() {
        assert_eq!(example_2_6().associativity_witness(), Some([0, 1, 2]));
        assert!(!Groupoid::constant(2, 0).unwrap().is_idempotent());
        assert!(Groupoid::left_zero(5).unwrap().is_left_zero());
        assert!(!Groupoid::left_zero(5).unwrap().is_right_zero());
        assert!(Groupoid::min(4).unwrap().is_commutative());
        assert!(Groupoid::min(4).unwrap().is_associative());
        assert!(!example_2_6().is_commutative());
        let single = Groupoid::new(1, &[0]).unwrap();
        assert!(single.is_left_zero() && single.is_right_zero());
    }

    #[test]
    fn orientation_and_travel() {
        assert!(example_2_6().has_orientation_property());
        assert!(!Groupoid::constant(3, 0).unwrap().has_orientation_property());
        assert!(Groupoid::min(5).unwrap().has_orientation_property());

        assert!(Groupoid::right_zero(3).unwrap().is_travel_groupoid());
        assert!(!Groupoid::left_zero(2).unwrap().is_travel_groupoid());
        assert!(Groupoid::new(1, &[0]).unwrap().is_travel_groupoid());
        assert!(!example_2_6().is_travel_groupoid());
    }

    #[test]
    fn digraph_examples() {
        let complete = Groupoid::right_zero(3).unwrap().digraph().unwrap();
        assert_eq!(complete.edges.len(), 6);
        assert!(complete.is_complete() && complete.is_symmetric());
        assert!(Groupoid::left_zero(3)
            .unwrap()
            .digraph()
            .unwrap()
            .edges
            .is_empty());
        let ex = example_2_6().digraph().unwrap();
        assert_eq!(ex.edges, BTreeSet::from([(0, 2), (2, 0)]));
        assert_eq!(
            Groupoid::constant(3, 0).unwrap().digraph(),
            Err(Error::NotOriented)
        );
    }

    #[test]
    fn relabel_round_trips() {
        let lz = Groupoid::left_zero(3).unwrap();
        assert_eq!(lz.relabel(&[2, 0, 1]).unwrap(), lz);
        assert!(lz.relabel(&[0, 0, 1]).is_err());
        let g = example_2_6();
        let back = g.relabel(&[1, 2, 0]).unwrap().relabel(&[2, 0, 1]).unwrap();
        assert_eq!(back, g);
    }
}
