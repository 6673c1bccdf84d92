//! Executable checks for each numbered result about `(Bin(X), □)`.
//!
//! Every [`TheoremId`] maps to one check with a fixed feasibility table
//! ([`scope`]). A check either enumerates its whole tuple space (exhaustive)
//! or draws `budget` seeded cases (sampled), and returns a [`TheoremReport`]
//! with the exact number of cases tested and, on failure, the first
//! counterexample in index order. Reports are deterministic in
//! `(id, order, mode, budget, seed)` whatever the [`Strategy`].

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::center::{
    self, from_mask, is_locally_zero, mask_box, pair_count, probe_groupoids, subtable_kind,
    PairMask, SubtableKind,
};
use crate::exec::Strategy;
use crate::groupoid::{box_product, Groupoid};
use crate::linear::LinearCoeffs;
use crate::space::{
    case_rng, random_commutative, random_groupoid, random_oriented, AllGroupoids,
    CommutativeGroupoids, OrientedGroupoids,
};
use crate::{Error, Result};

/// Budget used by [`run_all`] for checks it runs in sampled mode.
pub const DEFAULT_BUDGET: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    BoxAssociative,
    BoxIdentity,
    LinearClosure,
    OrientedClosure,
    OrientedTravelComplete,
    ZeroSemigroupsCentral,
    CenterIdempotent,
    CenterPairsSwap,
    CenterSubtables,
    LocallyZeroCentral,
    ExampleTable,
    CommutativeAbsorbs,
    CenterIsLocallyZero,
    LocallyZeroCount,
    MaskComposition,
    NonAssociativeExample,
    AssociativeLocallyZero,
    SelfComposition,
    RightZeroInvolution,
}

impl TheoremId {
    pub const ALL: [TheoremId; 19] = [
        TheoremId::BoxAssociative,
        TheoremId::BoxIdentity,
        TheoremId::LinearClosure,
        TheoremId::OrientedClosure,
        TheoremId::OrientedTravelComplete,
        TheoremId::ZeroSemigroupsCentral,
        TheoremId::CenterIdempotent,
        TheoremId::CenterPairsSwap,
        TheoremId::CenterSubtables,
        TheoremId::LocallyZeroCentral,
        TheoremId::ExampleTable,
        TheoremId::CommutativeAbsorbs,
        TheoremId::CenterIsLocallyZero,
        TheoremId::LocallyZeroCount,
        TheoremId::MaskComposition,
        TheoremId::NonAssociativeExample,
        TheoremId::AssociativeLocallyZero,
        TheoremId::SelfComposition,
        TheoremId::RightZeroInvolution,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TheoremId::BoxAssociative => "T1.1-assoc",
            TheoremId::BoxIdentity => "T1.1-identity",
            TheoremId::LinearClosure => "E1.2-linear",
            TheoremId::OrientedClosure => "E1.3-op-closure",
            TheoremId::OrientedTravelComplete => "E1.3-travel-complete",
            TheoremId::ZeroSemigroupsCentral => "P2.1",
            TheoremId::CenterIdempotent => "P2.2",
            TheoremId::CenterPairsSwap => "T2.3",
            TheoremId::CenterSubtables => "P2.4",
            TheoremId::LocallyZeroCentral => "P2.5",
            TheoremId::ExampleTable => "E2.6",
            TheoremId::CommutativeAbsorbs => "P2.7",
            TheoremId::CenterIsLocallyZero => "T3.1",
            TheoremId::LocallyZeroCount => "C3.2",
            TheoremId::MaskComposition => "C3.3",
            TheoremId::NonAssociativeExample => "P3.4",
            TheoremId::AssociativeLocallyZero => "P3.5",
            TheoremId::SelfComposition => "P3.6",
            TheoremId::RightZeroInvolution => "RZ-involution",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled => "sampled",
        })
    }
}

/// Orders at which a check can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scope {
    /// Largest order for exhaustive mode.
    pub exhaustive: Option<usize>,
    /// Largest order for sampled mode.
    pub sampled: Option<usize>,
    /// Checks about one specific table run at this order whatever is asked.
    pub fixed_order: Option<usize>,
}

const fn range(exhaustive: Option<usize>, sampled: Option<usize>) -> Scope {
    Scope {
        exhaustive,
        sampled,
        fixed_order: None,
    }
}

pub fn scope(id: TheoremId) -> Scope {
    use TheoremId::*;
    match id {
        BoxAssociative => range(Some(2), Some(16)),
        BoxIdentity => range(Some(3), Some(16)),
        LinearClosure => range(Some(5), Some(crate::MAX_ORDER)),
        OrientedClosure => range(Some(3), Some(16)),
        OrientedTravelComplete => range(Some(4), None),
        ZeroSemigroupsCentral => range(Some(3), Some(16)),
        CenterIdempotent => range(Some(3), None),
        CenterPairsSwap => range(Some(5), None),
        CenterSubtables => range(Some(3), None),
        LocallyZeroCentral => range(Some(3), Some(16)),
        ExampleTable | NonAssociativeExample => Scope {
            exhaustive: Some(3),
            sampled: None,
            fixed_order: Some(3),
        },
        CommutativeAbsorbs => range(Some(3), Some(16)),
        CenterIsLocallyZero => range(Some(3), None),
        LocallyZeroCount => range(Some(5), None),
        MaskComposition => range(Some(4), Some(16)),
        AssociativeLocallyZero => range(Some(5), None),
        SelfComposition => range(Some(5), Some(16)),
        RightZeroInvolution => range(Some(16), None),
    }
}

/// One side of a violated relation, or one of its inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Table(Groupoid),
    Mask(PairMask),
    Coeffs(LinearCoeffs),
    Element(usize),
    Pair(usize, usize),
    Triple([usize; 3]),
    Kind(SubtableKind),
    Flag(bool),
    Count(u64),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Table(g) => {
                let n = g.order();
                f.write_str("[")?;
                for x in 0..n {
                    if x > 0 {
                        f.write_str(" |")?;
                    }
                    for y in 0..n {
                        if x > 0 || y > 0 {
                            f.write_str(" ")?;
                        }
                        write!(f, "{}", g.get(x, y))?;
                    }
                }
                f.write_str("]")
            }
            Value::Mask(m) => write!(f, "{}:{}", m.order(), m),
            Value::Coeffs(c) => {
                let (a, b, cc) = c.coefficients();
                write!(f, "({a},{b},{cc}) mod {}", c.modulus())
            }
            Value::Element(x) => write!(f, "{x}"),
            Value::Pair(x, y) => write!(f, "({x}, {y})"),
            Value::Triple([x, y, z]) => write!(f, "({x}, {y}, {z})"),
            Value::Kind(k) => write!(f, "{k:?}"),
            Value::Flag(b) => f.write_str(if *b { "yes" } else { "no" }),
            Value::Count(c) => write!(f, "{c}"),
            Value::Text(t) => f.write_str(t),
        }
    }
}

/// The inputs of a failing case and both sides of the relation they break.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub relation: String,
    pub inputs: Vec<Value>,
    pub lhs: Value,
    pub rhs: Value,
}

impl Counterexample {
    fn new(relation: &str, inputs: Vec<Value>, lhs: Value, rhs: Value) -> Self {
        Counterexample {
            relation: relation.to_string(),
            inputs,
            lhs,
            rhs,
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails for", self.relation)?;
        for (i, v) in self.inputs.iter().enumerate() {
            write!(f, "{} {v}", if i == 0 { "" } else { "," })?;
        }
        write!(f, ": lhs = {}, rhs = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub order: usize,
    pub mode: Mode,
    pub cases_checked: u64,
    /// Present exactly for sampled runs.
    pub seed: Option<u64>,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    /// Extra facts gathered along the way (sizes, counts, witnesses).
    pub detail: Option<String>,
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} n={} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.order,
            self.mode
        )?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        write!(f, " cases={}", self.cases_checked)?;
        if let Some(detail) = &self.detail {
            write!(f, " ({detail})")?;
        }
        if let Some(cx) = &self.counterexample {
            write!(f, "\n  counterexample: {cx}")?;
        }
        Ok(())
    }
}

/// Cases tested so far and the first failure, if any.
struct Outcome {
    cases: u64,
    counterexample: Option<Counterexample>,
    detail: Option<String>,
}

impl Outcome {
    fn pass(cases: u64) -> Self {
        Outcome {
            cases,
            counterexample: None,
            detail: None,
        }
    }

    fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    /// Runs `next` only if nothing has failed yet, accumulating cases.
    fn then(self, next: impl FnOnce() -> Result<Outcome>) -> Result<Outcome> {
        if self.failed() {
            return Ok(self);
        }
        let more = next()?;
        Ok(Outcome {
            cases: self.cases + more.cases,
            counterexample: more.counterexample,
            detail: self.detail.or(more.detail),
        })
    }

    fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}

/// Table-level product `(first, second) ↦ first □ second` used by the checks.
pub type Product = fn(&Groupoid, &Groupoid) -> Groupoid;

/// The box product, for operands of equal order.
pub fn standard_product(first: &Groupoid, second: &Groupoid) -> Groupoid {
    box_product(first, second).expect("checks only compose tables of equal order")
}

fn random_mask<R: Rng + ?Sized>(rng: &mut R, order: usize) -> PairMask {
    let flags: Vec<bool> = (0..pair_count(order)).map(|_| rng.random()).collect();
    PairMask::from_flags(order, &flags).expect("flag count matches order")
}

fn all_masks(order: usize) -> impl Fn(usize) -> PairMask {
    move |i| PairMask::from_index(order, i as u64).expect("mask index in range")
}

fn pairs(order: usize) -> Vec<(usize, usize)> {
    (0..order)
        .flat_map(|x| (x + 1..order).map(move |y| (x, y)))
        .collect()
}

/// The order-3 table `a a c / b b b / a c c` with `a, b, c = 0, 1, 2`.
pub fn example_table() -> Groupoid {
    Groupoid::new(3, &[0, 0, 2, 1, 1, 1, 0, 2, 2]).expect("valid table")
}

/// Runs theorem checks with a given product and execution strategy.
///
/// The product is pluggable so that mutation tests can confirm a check
/// notices a wrong implementation of `□`.
#[derive(Debug, Clone, Copy)]
pub struct Verifier {
    product: Product,
    strategy: Strategy,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            product: standard_product,
            strategy: Strategy::default(),
        }
    }
}

impl Verifier {
    pub fn with_product(mut self, product: Product) -> Self {
        self.product = product;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    fn scan<F>(&self, len: usize, f: F) -> Outcome
    where
        F: Fn(usize) -> Option<Counterexample> + Sync + Send,
    {
        match self.strategy.find_map_first(len, f) {
            None => Outcome::pass(len as u64),
            Some((i, cx)) => Outcome {
                cases: i as u64 + 1,
                counterexample: Some(cx),
                detail: None,
            },
        }
    }

    fn prod(&self, first: &Groupoid, second: &Groupoid) -> Groupoid {
        (self.product)(first, second)
    }

    /// `first □ second` vs `second □ first`, as a counterexample when they differ.
    fn commutation(&self, g: &Groupoid, h: &Groupoid) -> Option<Counterexample> {
        let gh = self.prod(g, h);
        let hg = self.prod(h, g);
        (gh != hg).then(|| {
            Counterexample::new(
                "g □ h = h □ g",
                vec![Value::Table(g.clone()), Value::Table(h.clone())],
                Value::Table(gh),
                Value::Table(hg),
            )
        })
    }

    pub fn run_check(
        &self,
        id: TheoremId,
        order: usize,
        mode: Mode,
        budget: usize,
        seed: u64,
    ) -> Result<TheoremReport> {
        let sc = scope(id);
        let limit = match mode {
            Mode::Exhaustive => sc.exhaustive,
            Mode::Sampled => sc.sampled,
        };
        let feasible =
            order >= 1 && limit.is_some_and(|max| sc.fixed_order.is_some() || order <= max);
        if !feasible {
            return Err(Error::Infeasible { id, mode, order });
        }
        if mode == Mode::Sampled && budget == 0 {
            return Err(Error::EmptyBudget);
        }
        let n = sc.fixed_order.unwrap_or(order);
        let sampled = mode == Mode::Sampled;
        use TheoremId::*;
        let outcome = match id {
            BoxAssociative => self.box_associative(n, sampled, budget, seed)?,
            BoxIdentity => self.box_identity(n, sampled, budget, seed)?,
            LinearClosure => self.linear_closure(n, sampled, budget, seed)?,
            OrientedClosure => self.oriented_closure(n, sampled, budget, seed)?,
            OrientedTravelComplete => self.oriented_travel(n)?,
            ZeroSemigroupsCentral => self.zero_semigroups_central(n, sampled, budget, seed)?,
            CenterIdempotent => self.center_idempotent(n)?,
            CenterPairsSwap => self.center_pairs_swap(n)?,
            CenterSubtables => self.center_subtables(n)?,
            LocallyZeroCentral => self.locally_zero_central(n, sampled, budget, seed)?,
            ExampleTable => self.example_table_check()?,
            CommutativeAbsorbs => self.commutative_absorbs(n, sampled, budget, seed)?,
            CenterIsLocallyZero => self.center_is_locally_zero(n)?,
            LocallyZeroCount => self.locally_zero_count(n)?,
            MaskComposition => self.mask_composition(n, sampled, budget, seed)?,
            NonAssociativeExample => self.non_associative_example()?,
            AssociativeLocallyZero => self.associative_locally_zero(n)?,
            SelfComposition => self.self_composition(n, sampled, budget, seed)?,
            RightZeroInvolution => self.right_zero_involution(n)?,
        };
        Ok(TheoremReport {
            id,
            order: n,
            mode,
            cases_checked: outcome.cases,
            seed: sampled.then_some(seed),
            passed: outcome.counterexample.is_none(),
            counterexample: outcome.counterexample,
            detail: outcome.detail,
        })
    }

    /// Every check at its largest feasible scope up to `n_max`, in
    /// [`TheoremId::ALL`] order. Exhaustive mode is preferred; a check whose
    /// exhaustive limit is below `n_max` runs sampled with `budget` cases if it
    /// has a sampled mode.
    pub fn run_all_with_budget(
        &self,
        n_max: usize,
        seed: u64,
        budget: usize,
    ) -> Result<Vec<TheoremReport>> {
        if n_max < 2 {
            return Err(Error::Infeasible {
                id: TheoremId::BoxAssociative,
                mode: Mode::Exhaustive,
                order: n_max,
            });
        }
        TheoremId::ALL
            .into_iter()
            .map(|id| {
                let (mode, order) = plan(id, n_max);
                self.run_check(id, order, mode, budget, seed)
            })
            .collect()
    }

    pub fn run_all(&self, n_max: usize, seed: u64) -> Result<Vec<TheoremReport>> {
        self.run_all_with_budget(n_max, seed, DEFAULT_BUDGET)
    }

    fn box_associative(
        &self,
        n: usize,
        sampled: bool,
        budget: usize,
        seed: u64,
    ) -> Result<Outcome> {
        let check = |f: Groupoid, g: Groupoid, h: Groupoid| {
            let lhs = self.prod(&self.prod(&f, &g), &h);
            let rhs = self.prod(&f, &self.prod(&g, &h));
            (lhs != rhs).then(|| {
                Counterexample::new(
                    "(f □ g) □ h = f □ (g □ h)",
                    vec![Value::Table(f), Value::Table(g), Value::Table(h)],
                    Value::Table(lhs),
                    Value::Table(rhs),
                )
            })
        };
        if sampled {
            return Ok(self.scan(budget, |i| {
                let rng = &mut case_rng(seed, i);
                let f = random_groupoid(rng, n);
                let g = random_groupoid(rng, n);
                let h = random_groupoid(rng, n);
                check(f, g, h)
            }));
        }
        let all = AllGroupoids::new(n)?;
        let k = all.len();
        Ok(self.scan(k * k * k, |i| {
            check(all.nth(i / (k * k)), all.nth(i / k % k), all.nth(i % k))
        }))
    }

    fn box_identity(&self, n: usize, sampled: bool, budget: usize, seed: u64) -> Result<Outcome> {
        let lz = Groupoid::left_zero(n)?;
        let check = |g: Groupoid| {
            let left = self.prod(&lz, &g);
            if left != g {
                return Some(Counterexample::new(
                    "left-zero □ g = g",
                    vec![Value::Table(g.clone())],
                    Value::Table(left),
                    Value::Table(g),
                ));
            }
            let right = self.prod(&g, &lz);
            (right != g).then(|| {
                Counterexample::new(
                    "g □ left-zero = g",
                    vec![Value::Table(g.clone())],
                    Value::Table(right),
                    Value::Table(g),
                )
            })
        };
        if sampled {
            return Ok(self.scan(budget, |i| {
                check(random_groupoid(&mut case_rng(seed, i), n))
            }));
        }
        let all = AllGroupoids::new(n)?;
        Ok(self.scan(all.len(), |i| check(all.nth(i))))
    }

    fn right_zero_involution(&self, n: usize) -> Result<Outcome> {
        Ok(self.scan(n, |i| {
            let k = i + 1;
            let rz = Groupoid::right_zero(k).ok()?;
            let lz = Groupoid::left_zero(k).ok()?;
            let sq = self.prod(&rz, &rz);
            (sq != lz).then(|| {
                Counterexample::new(
                    "right-zero □ right-zero = left-zero",
                    vec![Value::Table(rz)],
                    Value::Table(sq),
                    Value::Table(lz),
                )
            })
        }))
    }

    fn linear_closure(&self, n: usize, sampled: bool, budget: usize, seed: u64) -> Result<Outcome> {
        let m = n as u32;
        let hom = |p: LinearCoeffs, q: LinearCoeffs| -> Option<Counterexample> {
            let composed = p.compose(&q).ok()?.to_table().ok()?;
            let boxed = self.prod(&p.to_table().ok()?, &q.to_table().ok()?);
            (composed != boxed).then(|| {
                Counterexample::new(
                    "table(compose(p, q)) = table(p) □ table(q)",
                    vec![Value::Coeffs(p), Value::Coeffs(q)],
                    Value::Table(composed),
                    Value::Table(boxed),
                )
            })
        };
        let assoc = |p: LinearCoeffs, q: LinearCoeffs, r: LinearCoeffs| -> Option<Counterexample> {
            let lhs = p.compose(&q).ok()?.compose(&r).ok()?;
            let rhs = p.compose(&q.compose(&r).ok()?).ok()?;
            (lhs != rhs).then(|| {
                Counterexample::new(
                    "compose(compose(p, q), r) = compose(p, compose(q, r))",
                    vec![Value::Coeffs(p), Value::Coeffs(q), Value::Coeffs(r)],
                    Value::Coeffs(lhs),
                    Value::Coeffs(rhs),
                )
            })
        };
        let id = LinearCoeffs::identity(m)?;
        let rz = LinearCoeffs::new(m, 0, 1, 0)?;
        let involution = move || -> Result<Outcome> {
            let sq = rz.compose(&rz)?;
            Ok(if sq == id {
                Outcome::pass(1)
            } else {
                Outcome {
                    cases: 1,
                    counterexample: Some(Counterexample::new(
                        "compose((0,1,0), (0,1,0)) = (1,0,0)",
                        vec![Value::Coeffs(rz)],
                        Value::Coeffs(sq),
                        Value::Coeffs(id),
                    )),
                    detail: None,
                }
            })
        };

        if sampled {
            let draw = move |rng: &mut rand_chacha::ChaCha8Rng| {
                let m64 = m as u64;
                LinearCoeffs::new(
                    m,
                    rng.random_range(0..m64),
                    rng.random_range(0..m64),
                    rng.random_range(0..m64),
                )
                .expect("positive modulus")
            };
            return self
                .scan(budget, |i| {
                    let rng = &mut case_rng(seed, i);
                    hom(draw(rng), draw(rng))
                })
                .then(|| {
                    Ok(self.scan(budget, |i| {
                        let rng = &mut case_rng(seed, budget + i);
                        assoc(draw(rng), draw(rng), draw(rng))
                    }))
                })?
                .then(involution);
        }

        let coeffs: Vec<LinearCoeffs> = LinearCoeffs::all(m)?.collect();
        let k = coeffs.len();
        self.scan(k * k, |i| hom(coeffs[i / k], coeffs[i % k]))
            .then(|| {
                Ok(self.scan(k * k * k, |i| {
                    assoc(coeffs[i / (k * k)], coeffs[i / k % k], coeffs[i % k])
                }))
            })?
            .then(|| {
                Ok(self.scan(k, |i| {
                    let q = coeffs[i];
                    let left = id.compose(&q).ok()?;
                    let right = q.compose(&id).ok()?;
                    (left != q || right != q).then(|| {
                        Counterexample::new(
                            "compose(identity, q) = q = compose(q, identity)",
                            vec![Value::Coeffs(q)],
                            Value::Coeffs(left),
                            Value::Coeffs(right),
                        )
                    })
                }))
            })?
            .then(involution)
    }

    fn oriented_closure(
        &self,
        n: usize,
        sampled: bool,
        budget: usize,
        seed: u64,
    ) -> Result<Outcome> {
        let check = |f: Groupoid, g: Groupoid| {
            let product = self.prod(&f, &g);
            (!product.has_orientation_property()).then(|| {
                Counterexample::new(
                    "f □ g has the orientation property",
                    vec![Value::Table(f), Value::Table(g)],
                    Value::Table(product),
                    Value::Text("a table with x • y ∈ {x, y}".into()),
                )
            })
        };
        if sampled {
            return Ok(self.scan(budget, |i| {
                let rng = &mut case_rng(seed, i);
                let f = random_oriented(rng, n);
                check(f, random_oriented(rng, n))
            }));
        }
        let op = OrientedGroupoids::new(n)?;
        let k = op.len();
        Ok(self.scan(k * k, |i| check(op.nth(i / k), op.nth(i % k))))
    }

    fn oriented_travel(&self, n: usize) -> Result<Outcome> {
        let op = OrientedGroupoids::new(n)?;
        let travel = self
            .strategy
            .count(op.len(), |i| op.nth(i).is_travel_groupoid());
        let outcome = self.scan(op.len(), |i| {
            let g = op.nth(i);
            if !g.is_travel_groupoid() {
                return None;
            }
            let graph = g.digraph().ok()?;
            (!graph.is_symmetric() || !graph.is_complete()).then(|| {
                Counterexample::new(
                    "oriented travel groupoid has a symmetric complete digraph",
                    vec![Value::Table(g)],
                    Value::Count(graph.edges.len() as u64),
                    Value::Count((n * (n - 1)) as u64),
                )
            })
        });
        Ok(outcome.with_detail(format!("{travel} oriented travel groupoids")))
    }

    fn zero_semigroups_central(
        &self,
        n: usize,
        sampled: bool,
        budget: usize,
        seed: u64,
    ) -> Result<Outcome> {
        let targets = [Groupoid::left_zero(n)?, Groupoid::right_zero(n)?];
        if sampled {
            let probes = probe_groupoids(n)?;
            let per = probes.len() + budget;
            return Ok(self.scan(2 * per, |i| {
                let (t, j) = (&targets[i / per], i % per);
                let h = match probes.get(j) {
                    Some(p) => p.clone(),
                    None => random_groupoid(&mut case_rng(seed, j - probes.len()), n),
                };
                self.commutation(t, &h)
            }));
        }
        let all = AllGroupoids::new(n)?;
        let k = all.len();
        Ok(self.scan(2 * k, |i| {
            self.commutation(&targets[i / k], &all.nth(i % k))
        }))
    }

    fn center_idempotent(&self, n: usize) -> Result<Outcome> {
        let k = AllGroupoids::new(n)?.len() as u64;
        let members = center::center_bruteforce_with(n, self.strategy)?;
        let bad = members.iter().find_map(|g| {
            (0..n).find(|&x| g.get(x, x) != x).map(|x| {
                Counterexample::new(
                    "x • x = x",
                    vec![Value::Table(g.clone()), Value::Element(x)],
                    Value::Element(g.get(x, x)),
                    Value::Element(x),
                )
            })
        });
        Ok(Outcome {
            cases: k,
            counterexample: bad,
            detail: Some(format!("center size {}", members.len())),
        })
    }

    /// Center members: brute force where feasible, else the locally-zero set.
    fn center_members(&self, n: usize) -> Result<(Vec<Groupoid>, &'static str)> {
        if n <= center::BRUTEFORCE_MAX_ORDER {
            Ok((
                center::center_bruteforce_with(n, self.strategy)?,
                "brute-force center",
            ))
        } else {
            Ok((
                center::enumerate_locally_zero(n)?.collect(),
                "locally-zero enumeration, a superset of the center",
            ))
        }
    }

    fn center_pairs_swap(&self, n: usize) -> Result<Outcome> {
        let (members, source) = self.center_members(n)?;
        let ps = pairs(n);
        let k = ps.len();
        let outcome = self.scan(members.len() * k, |i| {
            let g = &members[i / k];
            let (x, y) = ps[i % k];
            let (a, b) = (g.get(x, y), g.get(y, x));
            let ok = (a == x && b == y) || (a == y && b == x);
            (!ok).then(|| {
                Counterexample::new(
                    "{x • y, y • x} = {x, y}",
                    vec![Value::Table(g.clone()), Value::Pair(x, y)],
                    Value::Pair(a, b),
                    Value::Pair(x, y),
                )
            })
        });
        Ok(outcome.with_detail(format!("{} members from {source}", members.len())))
    }

    fn center_subtables(&self, n: usize) -> Result<Outcome> {
        let members = center::center_bruteforce_with(n, self.strategy)?;
        let ps = pairs(n);
        let k = ps.len();
        Ok(self.scan(members.len() * k, |i| {
            let g = &members[i / k];
            let (x, y) = ps[i % k];
            let kind = subtable_kind(g, x, y).ok()?;
            (kind == SubtableKind::Neither).then(|| {
                Counterexample::new(
                    "restriction to {x, y} is a left-zero or right-zero semigroup",
                    vec![Value::Table(g.clone()), Value::Pair(x, y)],
                    Value::Kind(kind),
                    Value::Text("LeftZero or RightZero".into()),
                )
            })
        }))
    }

    fn locally_zero_central(
        &self,
        n: usize,
        sampled: bool,
        budget: usize,
        seed: u64,
    ) -> Result<Outcome> {
        if sampled {
            return Ok(self.scan(budget, |i| {
                let rng = &mut case_rng(seed, i);
                let g = from_mask(&random_mask(rng, n));
                self.commutation(&g, &random_groupoid(rng, n))
            }));
        }
        let all = AllGroupoids::new(n)?;
        let k = all.len();
        let masks = 1usize << pair_count(n);
        let mask = all_masks(n);
        Ok(self.scan(masks * k, |i| {
            self.commutation(&from_mask(&mask(i / k)), &all.nth(i % k))
        }))
    }

    fn example_table_check(&self) -> Result<Outcome> {
        let g = example_table();
        let flag = |relation: &str, actual: bool, expected: bool| {
            (actual != expected).then(|| {
                Counterexample::new(
                    relation,
                    vec![Value::Table(g.clone())],
                    Value::Flag(actual),
                    Value::Flag(expected),
                )
            })
        };
        let kinds = [
            ((0, 1), SubtableKind::LeftZero),
            ((0, 2), SubtableKind::RightZero),
            ((1, 2), SubtableKind::LeftZero),
        ];
        let mut checks: Vec<Option<Counterexample>> = vec![
            flag("table is left-zero", g.is_left_zero(), false),
            flag("table is right-zero", g.is_right_zero(), false),
        ];
        for ((x, y), expected) in kinds {
            let kind = subtable_kind(&g, x, y)?;
            checks.push((kind != expected).then(|| {
                Counterexample::new(
                    "restriction kind",
                    vec![Value::Table(g.clone()), Value::Pair(x, y)],
                    Value::Kind(kind),
                    Value::Kind(expected),
                )
            }));
        }
        checks.push(flag("table is locally-zero", is_locally_zero(&g), true));
        let fixed = checks.len() as u64;
        if let Some((i, cx)) = checks
            .into_iter()
            .enumerate()
            .find_map(|(i, c)| c.map(|c| (i, c)))
        {
            return Ok(Outcome {
                cases: i as u64 + 1,
                counterexample: Some(cx),
                detail: None,
            });
        }
        let outcome = Outcome::pass(fixed);
        let all = AllGroupoids::new(3)?;
        outcome
            .then(|| Ok(self.scan(all.len(), |i| self.commutation(&g, &all.nth(i)))))
            .map(|o| o.with_detail("neither left- nor right-zero, mask LRL".into()))
    }

    fn commutative_absorbs(
        &self,
        n: usize,
        sampled: bool,
        budget: usize,
        seed: u64,
    ) -> Result<Outcome> {
        let check = |star: &Groupoid, bullet: &Groupoid| {
            let product = self.prod(star, bullet);
            if !product.is_commutative() {
                return Some(Counterexample::new(
                    "commutative □ central is commutative",
                    vec![Value::Table(star.clone()), Value::Table(bullet.clone())],
                    Value::Table(product),
                    Value::Text("a commutative table".into()),
                ));
            }
            (product != *star).then(|| {
                Counterexample::new(
                    "commutative □ central = commutative",
                    vec![Value::Table(star.clone()), Value::Table(bullet.clone())],
                    Value::Table(product),
                    Value::Table(star.clone()),
                )
            })
        };
        if sampled {
            return Ok(self.scan(budget, |i| {
                let rng = &mut case_rng(seed, i);
                let star = random_commutative(rng, n);
                check(&star, &from_mask(&random_mask(rng, n)))
            }));
        }
        // The right operand ranges over every locally-zero table, which
        // contains the brute-force center.
        let ab = CommutativeGroupoids::new(n)?;
        let members: Vec<Groupoid> = center::enumerate_locally_zero(n)?.collect();
        let central = center::center_bruteforce_with(n, self.strategy)?.len();
        let z = members.len();
        let outcome = self.scan(ab.len() * z, |i| check(&ab.nth(i / z), &members[i % z]));
        Ok(outcome.with_detail(format!(
            "{} commutative x {z} locally-zero, {central} of them central",
            ab.len()
        )))
    }

    fn center_is_locally_zero(&self, n: usize) -> Result<Outcome> {
        let all = AllGroupoids::new(n)?;
        center::center_witness(&all.nth(0))?;
        let outcome = self.scan(all.len(), |i| {
            let g = all.nth(i);
            let c = center::center_witness(&g).ok()?.is_none();
            let lz = is_locally_zero(&g);
            (c != lz).then(|| {
                Counterexample::new(
                    "central ⟺ locally-zero",
                    vec![Value::Table(g)],
                    Value::Flag(c),
                    Value::Flag(lz),
                )
            })
        });
        let size = center::center_bruteforce_with(n, self.strategy)?.len() as u64;
        if outcome.failed() {
            return Ok(outcome.with_detail(format!("center size {size}")));
        }
        let expected = 1u64 << pair_count(n);
        let outcome = if size == expected {
            outcome
        } else {
            Outcome {
                cases: outcome.cases,
                counterexample: Some(Counterexample::new(
                    "|center| = 2^C(n,2)",
                    vec![Value::Element(n)],
                    Value::Count(size),
                    Value::Count(expected),
                )),
                detail: None,
            }
        };
        Ok(outcome.with_detail(format!("center size {size}")))
    }

    fn locally_zero_count(&self, n: usize) -> Result<Outcome> {
        let masks = 1usize << pair_count(n);
        let mask = all_masks(n);
        let outcome = self.scan(masks, |i| {
            let g = from_mask(&mask(i));
            let back = center::to_mask(&g).ok().and_then(|m| m.to_index());
            (!is_locally_zero(&g) || back != Some(i as u64)).then(|| {
                Counterexample::new(
                    "from_mask is a bijection onto locally-zero groupoids",
                    vec![Value::Mask(mask(i))],
                    Value::Table(g),
                    Value::Text("a locally-zero table with the same mask".into()),
                )
            })
        });
        let enumerated = center::enumerate_locally_zero(n)?.count() as u64;
        let classes = center::count_iso_classes_with(n, self.strategy)?;
        let detail = format!("{enumerated} groupoids, {classes} isomorphism classes");
        if outcome.failed() || enumerated == masks as u64 {
            return Ok(outcome.with_detail(detail));
        }
        Ok(Outcome {
            cases: outcome.cases,
            counterexample: Some(Counterexample::new(
                "enumeration size = 2^C(n,2)",
                vec![Value::Element(n)],
                Value::Count(enumerated),
                Value::Count(masks as u64),
            )),
            detail: Some(detail),
        })
    }

    fn mask_composition(
        &self,
        n: usize,
        sampled: bool,
        budget: usize,
        seed: u64,
    ) -> Result<Outcome> {
        let check = |a: PairMask, b: PairMask| {
            let product = self.prod(&from_mask(&a), &from_mask(&b));
            let expected = mask_box(&a, &b).ok()?;
            match center::to_mask(&product) {
                Ok(m) if m == expected => None,
                Ok(m) => Some(Counterexample::new(
                    "mask(g □ h) = mask(g) xor mask(h)",
                    vec![Value::Mask(a), Value::Mask(b)],
                    Value::Mask(m),
                    Value::Mask(expected),
                )),
                Err(_) => Some(Counterexample::new(
                    "locally-zero □ locally-zero is locally-zero",
                    vec![Value::Mask(a), Value::Mask(b)],
                    Value::Table(product),
                    Value::Mask(expected),
                )),
            }
        };
        if sampled {
            return Ok(self.scan(budget, |i| {
                let rng = &mut case_rng(seed, i);
                let a = random_mask(rng, n);
                check(a, random_mask(rng, n))
            }));
        }
        let masks = 1usize << pair_count(n);
        let mask = all_masks(n);
        Ok(self.scan(masks * masks, |i| check(mask(i / masks), mask(i % masks))))
    }

    fn non_associative_example(&self) -> Result<Outcome> {
        let g = example_table();
        if !is_locally_zero(&g) {
            return Ok(Outcome {
                cases: 1,
                counterexample: Some(Counterexample::new(
                    "table is locally-zero",
                    vec![Value::Table(g)],
                    Value::Flag(false),
                    Value::Flag(true),
                )),
                detail: None,
            });
        }
        Ok(match g.associativity_witness() {
            Some([x, y, z]) => Outcome::pass(1).with_detail(format!(
                "witness ({x}, {y}, {z}): ({x}•{y})•{z} = {}, {x}•({y}•{z}) = {}",
                g.get(g.get(x, y), z),
                g.get(x, g.get(y, z))
            )),
            None => Outcome {
                cases: 1,
                counterexample: Some(Counterexample::new(
                    "locally-zero table is not associative",
                    vec![Value::Table(g)],
                    Value::Flag(true),
                    Value::Flag(false),
                )),
                detail: None,
            },
        })
    }

    fn associative_locally_zero(&self, n: usize) -> Result<Outcome> {
        let masks = 1usize << pair_count(n);
        let mask = all_masks(n);
        let associative = self
            .strategy
            .count(masks, |i| from_mask(&mask(i)).is_associative());
        let outcome = self.scan(masks, |i| {
            let m = mask(i);
            let assoc = from_mask(&m).is_associative();
            let uniform = m.is_all_left() || m.is_all_right();
            (assoc != uniform).then(|| {
                Counterexample::new(
                    "associative ⟺ all-L or all-R",
                    vec![Value::Mask(m)],
                    Value::Flag(assoc),
                    Value::Flag(uniform),
                )
            })
        });
        Ok(outcome.with_detail(format!("{associative} of {masks} associative")))
    }

    fn self_composition(
        &self,
        n: usize,
        sampled: bool,
        budget: usize,
        seed: u64,
    ) -> Result<Outcome> {
        let lz = Groupoid::left_zero(n)?;
        let check = |m: PairMask| {
            let squared = mask_box(&m, &m).ok()?;
            if !squared.is_all_left() {
                return Some(Counterexample::new(
                    "mask(g) xor mask(g) = all-L",
                    vec![Value::Mask(m)],
                    Value::Mask(squared),
                    Value::Text("all-L".into()),
                ));
            }
            let g = from_mask(&m);
            let product = self.prod(&g, &g);
            (product != lz).then(|| {
                Counterexample::new(
                    "g □ g = left-zero",
                    vec![Value::Mask(m)],
                    Value::Table(product),
                    Value::Table(lz.clone()),
                )
            })
        };
        if sampled {
            return Ok(self.scan(budget, |i| check(random_mask(&mut case_rng(seed, i), n))));
        }
        let mask = all_masks(n);
        Ok(self.scan(1usize << pair_count(n), |i| check(mask(i))))
    }
}

/// The mode and order [`Verifier::run_all`] uses for `id` under `n_max`.
pub fn plan(id: TheoremId, n_max: usize) -> (Mode, usize) {
    let sc = scope(id);
    if let Some(fixed) = sc.fixed_order {
        return (Mode::Exhaustive, fixed);
    }
    let ex = sc.exhaustive.unwrap_or(0);
    match sc.sampled {
        _ if ex >= n_max => (Mode::Exhaustive, n_max),
        Some(s) if s > ex => (Mode::Sampled, n_max.min(s)),
        _ => (Mode::Exhaustive, ex),
    }
}

pub fn run_check(
    id: TheoremId,
    order: usize,
    mode: Mode,
    budget: usize,
    seed: u64,
) -> Result<TheoremReport> {
    Verifier::default().run_check(id, order, mode, budget, seed)
}

pub fn run_all(n_max: usize, seed: u64) -> Result<Vec<TheoremReport>> {
    Verifier::default().run_all(n_max, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.label().parse::<TheoremId>(), Ok(id));
        }
        assert!("T9.9".parse::<TheoremId>().is_err());
        assert_eq!(
            "t3.1".parse::<TheoremId>(),
            Ok(TheoremId::CenterIsLocallyZero)
        );
    }

    #[test]
    fn infeasible_scopes_are_errors() {
        assert!(matches!(
            run_check(TheoremId::BoxAssociative, 3, Mode::Exhaustive, 1, 0),
            Err(Error::Infeasible { .. })
        ));
        assert!(matches!(
            run_check(TheoremId::CenterIsLocallyZero, 4, Mode::Exhaustive, 1, 0),
            Err(Error::Infeasible { .. })
        ));
        assert!(matches!(
            run_check(TheoremId::CenterIsLocallyZero, 3, Mode::Sampled, 10, 0),
            Err(Error::Infeasible { .. })
        ));
        assert_eq!(
            run_check(TheoremId::BoxAssociative, 3, Mode::Sampled, 0, 0),
            Err(Error::EmptyBudget)
        );
        assert!(run_check(TheoremId::BoxIdentity, 0, Mode::Exhaustive, 1, 0).is_err());
    }

    #[test]
    fn plan_prefers_exhaustive() {
        assert_eq!(plan(TheoremId::BoxAssociative, 2), (Mode::Exhaustive, 2));
        assert_eq!(plan(TheoremId::BoxAssociative, 3), (Mode::Sampled, 3));
        assert_eq!(
            plan(TheoremId::CenterIsLocallyZero, 6),
            (Mode::Exhaustive, 3)
        );
        assert_eq!(plan(TheoremId::ExampleTable, 2), (Mode::Exhaustive, 3));
        assert_eq!(plan(TheoremId::SelfComposition, 40), (Mode::Sampled, 16));
    }

    #[test]
    fn small_reports() {
        let r = run_check(TheoremId::SelfComposition, 4, Mode::Exhaustive, 1, 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.cases_checked, 64);
        assert_eq!(r.seed, None);

        let r = run_check(TheoremId::NonAssociativeExample, 3, Mode::Exhaustive, 1, 0).unwrap();
        assert!(r.passed);
        assert!(r.detail.unwrap().starts_with("witness (0, 1, 2)"));

        let r = run_check(TheoremId::BoxAssociative, 2, Mode::Exhaustive, 1, 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.cases_checked, 4096);

        let r = run_check(TheoremId::MaskComposition, 8, Mode::Sampled, 200, 3).unwrap();
        assert!(r.passed);
        assert_eq!((r.cases_checked, r.seed), (200, Some(3)));
    }

    #[test]
    fn report_text() {
        let r = run_check(TheoremId::AssociativeLocallyZero, 4, Mode::Exhaustive, 1, 0).unwrap();
        assert_eq!(
            r.to_string(),
            "PASS P3.5 n=4 exhaustive cases=64 (2 of 64 associative)"
        );
    }

    fn broken_product(first: &Groupoid, second: &Groupoid) -> Groupoid {
        // Drops the transposed argument: x □ y = (x ∗ y) • (x ∗ y).
        let n = first.order();
        Groupoid::from_fn(n, |x, y| {
            let a = first.get(x, y);
            second.get(a, a)
        })
        .unwrap()
    }

    #[test]
    fn broken_product_is_caught_with_a_reproducible_witness() {
        let v = Verifier::default().with_product(broken_product);
        let r = v
            .run_check(TheoremId::RightZeroInvolution, 3, Mode::Exhaustive, 1, 0)
            .unwrap();
        assert!(!r.passed);
        let cx = r.counterexample.unwrap();
        let Value::Table(rz) = &cx.inputs[0] else {
            panic!()
        };
        assert_eq!(Value::Table(broken_product(rz, rz)), cx.lhs);
        assert_ne!(cx.lhs, cx.rhs);
    }
}
