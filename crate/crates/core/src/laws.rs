//! Seedable law suites over every exact structure.
//!
//! Each law runs a fixed number of randomized or exhaustive cases and
//! records the first counterexample. Randomness comes from one ChaCha8
//! stream per law, so a report depends only on `(suite, level, seed, cases)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::embedding::{bullet, embed_int, embed_nat, embed_rat, exp_omega, ln_omega, power_tower, TowerOutcome};
use crate::error::{Error, Result};
use crate::fields::LeveledRat;
use crate::hereditary::{decode, encode, HereditaryTerm, Scale};
use crate::integers::{LeveledInt, NatPair};
use crate::kernel::{exp_base, literal_hyper, log_base, Budget, Natural};
use crate::leveled::LeveledNat;
use crate::paths::{exp_path, hyper_path, hyper_path_literal, PathIndex, PathNat, PathValues};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Semiring,
    Indexed,
    Integers,
    Fields,
    Embedding,
    Hereditary,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = [
        "semiring",
        "indexed",
        "integers",
        "fields",
        "embedding",
        "hereditary",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "semiring" => Suite::Semiring,
            "indexed" => Suite::Indexed,
            "integers" => Suite::Integers,
            "fields" => Suite::Fields,
            "embedding" => Suite::Embedding,
            "hereditary" => Suite::Hereditary,
            "all" => Suite::All,
            other => {
                return Err(Error::DomainError(format!(
                    "unknown suite {other:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = *self as usize;
        f.write_str(Suite::NAMES[i])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: String,
    /// Cases actually checked.
    pub cases: u64,
    /// Cases abandoned because an oracle ran out of budget.
    pub skipped: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub level: u32,
    pub seed: u64,
    pub cases: u64,
    pub laws: Vec<LawResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawResult::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &LawResult> {
        self.laws.iter().filter(|l| !l.passed())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} level {} seed {} cases {}",
            self.suite, self.level, self.seed, self.cases
        )?;
        for law in &self.laws {
            let tag = if law.passed() { "PASS" } else { "FAIL" };
            write!(f, "{tag}  {} ({} cases", law.law, law.cases)?;
            if law.skipped > 0 {
                write!(f, ", {} over budget", law.skipped)?;
            }
            if law.failures > 0 {
                write!(f, ", {} failures", law.failures)?;
            }
            write!(f, ")")?;
            if let Some(c) = &law.counterexample {
                write!(f, " first counterexample: {c}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failed().count();
        if failed == 0 {
            write!(f, "all {} laws passed", self.laws.len())
        } else {
            write!(f, "{failed} of {} laws failed", self.laws.len())
        }
    }
}

/// Collects law results; hands out one independent stream per law.
pub struct Runner {
    seed: u64,
    stream: u64,
    results: Vec<LawResult>,
}

impl Runner {
    pub fn new(seed: u64) -> Self {
        Runner {
            seed,
            stream: 0,
            results: Vec::new(),
        }
    }

    pub fn into_results(self) -> Vec<LawResult> {
        self.results
    }

    fn next_rng(&mut self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        self.stream += 1;
        rng
    }

    /// `cases` randomized instances drawn by `gen`.
    pub fn random<T, G, C>(&mut self, law: impl Into<String>, cases: u64, mut gen: G, check: C)
    where
        T: fmt::Debug,
        G: FnMut(&mut ChaCha8Rng) -> T,
        C: Fn(&T) -> Result<bool>,
    {
        let mut rng = self.next_rng();
        let inputs = (0..cases).map(|_| gen(&mut rng)).collect::<Vec<_>>();
        self.exhaustive(law, inputs, check);
    }

    /// Every instance in `inputs`.
    pub fn exhaustive<T, I, C>(&mut self, law: impl Into<String>, inputs: I, check: C)
    where
        T: fmt::Debug,
        I: IntoIterator<Item = T>,
        C: Fn(&T) -> Result<bool>,
    {
        let mut result = LawResult {
            law: law.into(),
            cases: 0,
            skipped: 0,
            failures: 0,
            counterexample: None,
        };
        for input in inputs {
            let failure = match check(&input) {
                Ok(true) => None,
                Ok(false) => Some(format!("{input:?}")),
                Err(Error::BudgetExceeded(_)) => {
                    result.skipped += 1;
                    continue;
                }
                Err(e) => Some(format!("{input:?}: {e}")),
            };
            result.cases += 1;
            if let Some(c) = failure {
                result.failures += 1;
                result.counterexample.get_or_insert(c);
            }
        }
        self.results.push(result);
    }
}

/// A commutative semiring under test.
pub trait SemiringCarrier {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn name(&self) -> String;
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
}

/// Commutative semiring axioms with exact equality.
pub fn semiring_laws<C: SemiringCarrier>(runner: &mut Runner, c: &C, cases: u64) {
    let name = c.name();
    let pair = |rng: &mut ChaCha8Rng| (c.sample(rng), c.sample(rng));
    let triple = |rng: &mut ChaCha8Rng| (c.sample(rng), c.sample(rng), c.sample(rng));
    runner.random(format!("{name}: addition commutes"), cases, pair, |(a, b)| {
        Ok(c.add(a, b)? == c.add(b, a)?)
    });
    runner.random(format!("{name}: addition associates"), cases, triple, |(a, b, d)| {
        Ok(c.add(&c.add(a, b)?, d)? == c.add(a, &c.add(b, d)?)?)
    });
    runner.random(
        format!("{name}: additive identity"),
        cases,
        |rng| c.sample(rng),
        |a| Ok(c.add(a, &c.zero())? == *a),
    );
    runner.random(format!("{name}: multiplication commutes"), cases, pair, |(a, b)| {
        Ok(c.mul(a, b)? == c.mul(b, a)?)
    });
    runner.random(
        format!("{name}: multiplication associates"),
        cases,
        triple,
        |(a, b, d)| Ok(c.mul(&c.mul(a, b)?, d)? == c.mul(a, &c.mul(b, d)?)?),
    );
    runner.random(
        format!("{name}: multiplicative identity"),
        cases,
        |rng| c.sample(rng),
        |a| Ok(c.mul(a, &c.one())? == *a),
    );
    runner.random(
        format!("{name}: zero annihilates"),
        cases,
        |rng| c.sample(rng),
        |a| Ok(c.mul(a, &c.zero())? == c.zero()),
    );
    runner.random(format!("{name}: distributivity"), cases, triple, |(a, b, d)| {
        Ok(c.mul(a, &c.add(b, d)?)? == c.add(&c.mul(a, b)?, &c.mul(a, d)?)?)
    });
}

struct LeveledCarrier {
    level: u32,
    base: Natural,
}

impl SemiringCarrier for LeveledCarrier {
    type Elem = LeveledNat;

    fn name(&self) -> String {
        format!("(N^{}, F{}, F{}) base {}", self.level, self.level, self.level + 1, self.base)
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> LeveledNat {
        let coord: u64 = rng.gen();
        LeveledNat::new(self.level, coord, self.base.clone()).expect("valid base")
    }

    fn zero(&self) -> LeveledNat {
        LeveledNat::zero(self.level, &self.base).expect("valid base")
    }

    fn one(&self) -> LeveledNat {
        LeveledNat::one(self.level, &self.base).expect("valid base")
    }

    fn add(&self, a: &LeveledNat, b: &LeveledNat) -> Result<LeveledNat> {
        a.f_add(b)
    }

    fn mul(&self, a: &LeveledNat, b: &LeveledNat) -> Result<LeveledNat> {
        a.f_mul(b)
    }
}

struct PathCarrier {
    path: PathIndex,
    budget: Budget,
}

impl SemiringCarrier for PathCarrier {
    type Elem = PathNat;

    fn name(&self) -> String {
        format!("([{}:1], [{}:2])", self.path, self.path)
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> PathNat {
        self.path.element(rng.gen::<u32>())
    }

    fn zero(&self) -> PathNat {
        self.path.element(0u32)
    }

    fn one(&self) -> PathNat {
        self.path.element(1u32)
    }

    fn add(&self, a: &PathNat, b: &PathNat) -> Result<PathNat> {
        hyper_path(1, a, b, &self.budget)
    }

    fn mul(&self, a: &PathNat, b: &PathNat) -> Result<PathNat> {
        hyper_path(2, a, b, &self.budget)
    }
}

/// Runs one named suite.
pub fn run_suite(suite: Suite, level: u32, seed: u64, cases: u64) -> SuiteReport {
    let mut runner = Runner::new(seed);
    match suite {
        Suite::Semiring => semiring_suite(&mut runner, level, cases),
        Suite::Indexed => indexed_suite(&mut runner, level, cases),
        Suite::Integers => integer_suite(&mut runner, level, cases),
        Suite::Fields => field_suite(&mut runner, level, cases),
        Suite::Embedding => embedding_suite(&mut runner, level, cases),
        Suite::Hereditary => hereditary_suite(&mut runner, level, cases),
        Suite::All => {
            semiring_suite(&mut runner, level, cases);
            indexed_suite(&mut runner, level, cases);
            integer_suite(&mut runner, level, cases);
            field_suite(&mut runner, level, cases);
            embedding_suite(&mut runner, level, cases);
            hereditary_suite(&mut runner, level, cases);
        }
    }
    SuiteReport {
        suite,
        level,
        seed,
        cases,
        laws: runner.into_results(),
    }
}

fn nat(level: u32, coord: impl Into<Natural>) -> LeveledNat {
    LeveledNat::new(level, coord, 2u32).expect("base 2")
}

/// `F_n` unfolded literally through the kernel's `E` and `L`.
fn f_literal(n: u32, a: &Natural, b: &Natural, budget: &Budget) -> Result<Natural> {
    let two = Natural::from(2u32);
    match n {
        0 => return Ok(a + b),
        1 => return Ok(a * b),
        _ => {}
    }
    let inner = f_literal(n - 1, &log_base(a, &two)?, &log_base(b, &two)?, budget)?;
    exp_base(&inner, &two, budget)
}

fn semiring_suite(runner: &mut Runner, level: u32, cases: u64) {
    for base in [2u32, 3] {
        let carrier = LeveledCarrier {
            level,
            base: Natural::from(base),
        };
        semiring_laws(runner, &carrier, cases);
    }
    let budget = Budget::default();
    let small = |rng: &mut ChaCha8Rng| (rng.gen_range(0..40u32), rng.gen_range(0..40u32));
    if level >= 1 {
        runner.random(
            format!("level {level}: F{level} restricted to N^{level} is multiplication below"),
            cases,
            small,
            |&(x, y)| {
                let (a, b) = (nat(level, x), nat(level, y));
                Ok(a.f_add(&b)?.lower(&budget)? == a.lower(&budget)?.f_mul(&b.lower(&budget)?)?)
            },
        );
    }
    runner.random(
        format!("level {level}: order is transported by E"),
        cases,
        small,
        |&(x, y)| {
            let (a, b) = (nat(level, x), nat(level, y));
            Ok(a.compare(&b)? == x.cmp(&y) && a.exp().compare(&b.exp())? == x.cmp(&y))
        },
    );
    let grid = (0..=5u32).flat_map(|x| (0..=5u32).map(move |y| (x, y)));
    runner.exhaustive(
        format!("level {level}: F{level} and F{} match their literal definition", level + 1),
        grid,
        |&(x, y)| {
            let (a, b) = (nat(level, x), nat(level, y));
            let (va, vb) = (a.materialize(&budget)?, b.materialize(&budget)?);
            Ok(a.f_add(&b)?.materialize(&budget)? == f_literal(level, &va, &vb, &budget)?
                && a.f_mul(&b)?.materialize(&budget)? == f_literal(level + 1, &va, &vb, &budget)?)
        },
    );
}

fn indexed_suite(runner: &mut Runner, level: u32, cases: u64) {
    let budget = Budget::default();
    for steps in [vec![level], vec![level, 1], vec![1, level, 2]] {
        let carrier = PathCarrier {
            path: PathIndex::with_steps(2u32, &steps).expect("base 2"),
            budget,
        };
        semiring_laws(runner, &carrier, cases.min(500));
    }
    path_identities(runner);
}

/// Budget for the value-level path oracles.
fn oracle_budget() -> Budget {
    Budget::new(1 << 13, 50_000)
}

fn single(n: u32) -> PathIndex {
    PathIndex::with_steps(2u32, &[n]).expect("base 2")
}

fn values(path: &PathIndex) -> PathValues {
    PathValues::new(path, &oracle_budget())
}

fn two() -> Natural {
    Natural::from(2u32)
}

fn grid2(max: u32) -> impl Iterator<Item = (u32, u32)> + Clone {
    (0..=max).flat_map(move |x| (0..=max).map(move |y| (x, y)))
}

fn identity<T, C, V>(runner: &mut Runner, name: &str, inputs: Vec<T>, coords: C, vals: V)
where
    T: fmt::Debug + Clone,
    C: Fn(&T) -> Result<bool>,
    V: Fn(&T) -> Result<bool>,
{
    runner.exhaustive(format!("{name} (coordinates)"), inputs.clone(), coords);
    runner.exhaustive(format!("{name} (values)"), inputs, vals);
}

/// Exact identities between hyperoperations on neighbouring Peano systems.
///
/// Every identity is checked twice: on coordinates, where the fast path is
/// also compared with the symbolic literal recursion, and on materialized
/// values, where each side is evaluated by literal recursion from the
/// successor alone. Value cases whose result exceeds the oracle budget are
/// reported as skipped.
pub fn path_identities(runner: &mut Runner) {
    let b = Budget::default();
    let ob = oracle_budget();
    let grid = |ns: std::ops::RangeInclusive<u32>, ms: std::ops::RangeInclusive<u32>, coords: u32| {
        ns.flat_map(move |n| {
            ms.clone()
                .flat_map(move |m| grid2(coords).map(move |(x, y)| (n, m, x, y)))
        })
        .collect::<Vec<_>>()
    };
    let agrees = |p: &PathIndex, m: u32, x: u32, y: u32| -> Result<PathNat> {
        let fast = hyper_path(m, &p.element(x), &p.element(y), &b)?;
        if fast != hyper_path_literal(m, &p.element(x), &p.element(y), &b)? {
            return Err(Error::DomainError(format!("fast path disagrees with literal recursion on {p}")));
        }
        Ok(fast)
    };

    identity(
        runner,
        "oxford: [n:m] = E([n-1:m](L a, L b))",
        grid(1..=2, 0..=3, 4),
        |&(n, m, x, y)| {
            let lhs = agrees(&single(n), m, x, y)?;
            Ok(lhs.coord() == agrees(&single(n - 1), m, x, y)?.coord())
        },
        |&(n, m, x, y)| {
            let expected = hyper_path(m, &single(n).element(x), &single(n).element(y), &b)?
                .materialize(&ob)?;
            let (hi, lo) = (values(&single(n)), values(&single(n - 1)));
            let (a, c) = (hi.value_of(&x.into())?, hi.value_of(&y.into())?);
            let lhs = literal_hyper(&hi, m, &a, &c, &ob)?;
            let inner = literal_hyper(&lo, m, &log_base(&a, &two())?, &log_base(&c, &two())?, &ob)?;
            Ok(lhs == exp_base(&inner, &two(), &ob)? && lhs == expected)
        },
    );

    identity(
        runner,
        "cromwell: [n:2] = F(n+1)",
        grid(0..=2, 2..=2, 4),
        |&(n, m, x, y)| Ok(agrees(&single(n), m, x, y)?.coord() == nat(n, x).f_mul(&nat(n, y))?.coord()),
        |&(n, m, x, y)| {
            let expected = nat(n, x).f_mul(&nat(n, y))?.materialize(&ob)?;
            let v = values(&single(n));
            let (a, c) = (v.value_of(&x.into())?, v.value_of(&y.into())?);
            let lhs = literal_hyper(&v, m, &a, &c, &ob)?;
            Ok(lhs == f_literal(n + 1, &a, &c, &ob)? && lhs == expected)
        },
    );

    identity(
        runner,
        "manchester: [n:1] = F(n)",
        grid(0..=2, 1..=1, 4),
        |&(n, m, x, y)| Ok(agrees(&single(n), m, x, y)?.coord() == nat(n, x).f_add(&nat(n, y))?.coord()),
        |&(n, m, x, y)| {
            let expected = nat(n, x).f_add(&nat(n, y))?.materialize(&ob)?;
            let v = values(&single(n));
            let (a, c) = (v.value_of(&x.into())?, v.value_of(&y.into())?);
            let lhs = literal_hyper(&v, m, &a, &c, &ob)?;
            Ok(lhs == f_literal(n, &a, &c, &ob)? && lhs == expected)
        },
    );

    identity(
        runner,
        "janeiro: [n:2] = [n+1:1] on N^(n+1)",
        grid(0..=1, 0..=0, 4),
        |&(n, _, x, y)| {
            // a, b in N^(n+1) have coordinates 2^x, 2^y in N^n.
            let (ex, ey) = (exp_base(&x.into(), &two(), &b)?, exp_base(&y.into(), &two(), &b)?);
            let low = hyper_path(2, &single(n).element(ex), &single(n).element(ey), &b)?;
            let high = agrees(&single(n + 1), 1, x, y)?;
            Ok(*low.coord() == exp_base(high.coord(), &two(), &b)?)
        },
        |&(n, _, x, y)| {
            let expected = hyper_path(1, &single(n + 1).element(x), &single(n + 1).element(y), &b)?
                .materialize(&ob)?;
            let (lo, hi) = (values(&single(n)), values(&single(n + 1)));
            let (a, c) = (hi.value_of(&x.into())?, hi.value_of(&y.into())?);
            let lhs = literal_hyper(&lo, 2, &a, &c, &ob)?;
            Ok(lhs == literal_hyper(&hi, 1, &a, &c, &ob)? && lhs == expected)
        },
    );

    identity(
        runner,
        "3to2: a [n:3] b = a [n+1:2] E(b)",
        grid(0..=1, 0..=0, 3),
        |&(n, _, x, y)| {
            let ex = exp_base(&x.into(), &two(), &b)?;
            let low = hyper_path(3, &single(n).element(ex), &single(n).element(y), &b)?;
            let high = agrees(&single(n + 1), 2, x, y)?;
            Ok(*low.coord() == exp_base(high.coord(), &two(), &b)?)
        },
        |&(n, _, x, y)| {
            // E(b) in N^(n+1) has the coordinate y of b in N^n.
            let expected = hyper_path(2, &single(n + 1).element(x), &single(n + 1).element(y), &b)?
                .materialize(&ob)?;
            let (lo, hi) = (values(&single(n)), values(&single(n + 1)));
            let a = hi.value_of(&x.into())?;
            let c = lo.value_of(&y.into())?;
            let lhs = literal_hyper(&lo, 3, &a, &c, &ob)?;
            let rhs = literal_hyper(&hi, 2, &a, &exp_base(&c, &two(), &ob)?, &ob)?;
            Ok(lhs == rhs && lhs == expected)
        },
    );

    let cornell: Vec<(u32, u32, u32)> = (1..=2u32)
        .flat_map(|n| grid2(if n == 1 { 3 } else { 2 }).map(move |(x, y)| (n, x, y)))
        .collect();
    identity(
        runner,
        "cornell: [n:1] is an iterated [n-1:1]",
        cornell,
        |&(n, x, y)| {
            // L^(n-1)(b) = E(y) copies of a, whose coordinate below is 2^x.
            let q = single(n - 1);
            let ax = exp_base(&x.into(), &two(), &b)?;
            let mut acc = q.element(ax.clone());
            for _ in 1..(1u64 << y) {
                acc = hyper_path(1, &q.element(ax.clone()), &acc, &b)?;
            }
            let direct = agrees(&single(n), 1, x, y)?;
            Ok(*acc.coord() == exp_base(direct.coord(), &two(), &b)?)
        },
        |&(n, x, y)| {
            let expected = hyper_path(1, &single(n).element(x), &single(n).element(y), &b)?
                .materialize(&ob)?;
            let (hi, lo) = (values(&single(n)), values(&single(n - 1)));
            let (a, c) = (hi.value_of(&x.into())?, hi.value_of(&y.into())?);
            let mut copies = c.clone();
            for _ in 0..n - 1 {
                copies = log_base(&copies, &two())?;
            }
            let mut acc = a.clone();
            let mut i = Natural::one();
            while i < copies {
                acc = literal_hyper(&lo, 1, &a, &acc, &ob)?;
                i += 1u32;
            }
            Ok(literal_hyper(&hi, 1, &a, &c, &ob)? == acc && acc == expected)
        },
    );

    let two_step: Vec<Vec<u32>> = vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![0, 1], vec![1, 0]];
    let path_cases: Vec<(Vec<u32>, u32, u32, u32)> = two_step
        .iter()
        .flat_map(|s| grid(0..=0, 0..=3, 3).into_iter().map(move |(_, m, x, y)| (s.clone(), m, x, y)))
        .collect();

    identity(
        runner,
        "canada: one path step collapses to the prefix operation",
        path_cases.clone(),
        |(s, m, x, y)| {
            agrees(&PathIndex::with_steps(2u32, s)?, *m, *x, *y)?;
            Ok(true)
        },
        |(s, m, x, y)| {
            let p = PathIndex::with_steps(2u32, s)?;
            let expected = hyper_path(*m, &p.element(*x), &p.element(*y), &b)?.materialize(&ob)?;
            let prefix = p.prefix().expect("two steps");
            let (v, pv) = (values(&p), values(&prefix));
            let (a, c) = (v.value_of(&(*x).into())?, v.value_of(&(*y).into())?);
            let lhs = literal_hyper(&v, *m, &a, &c, &ob)?;
            let k = s[1];
            let (mut la, mut lc) = (a, c);
            for _ in 0..k {
                la = pv.log(&la)?;
                lc = pv.log(&lc)?;
            }
            let mut rhs = literal_hyper(&pv, *m, &la, &lc, &ob)?;
            for _ in 0..k {
                rhs = pv.exp(&rhs)?;
            }
            Ok(lhs == rhs && lhs == expected)
        },
    );

    let august: Vec<(Vec<u32>, u32)> = [vec![1], vec![2], vec![1, 1], vec![1, 2], vec![2, 1]]
        .iter()
        .flat_map(|s| (0..=4u32).map(move |x| (s.clone(), x)))
        .collect();
    identity(
        runner,
        "august: default bases give E(n_k) = E(n_(k-1))",
        august,
        |(s, x)| {
            let p = PathIndex::with_steps(2u32, s)?;
            let a = p.element(*x);
            let below = a.to_prefix(&b)?.expect("nonempty");
            let lhs = exp_path(&a, &b)?.to_prefix(&b)?.expect("nonempty");
            Ok(lhs == exp_path(&below, &b)?)
        },
        |(s, x)| {
            let p = PathIndex::with_steps(2u32, s)?;
            let expected = exp_path(&p.element(*x), &ob)?.materialize(&ob)?;
            let (v, pv) = (values(&p), values(&p.prefix().expect("nonempty")));
            let a = v.value_of(&(*x).into())?;
            let lhs = v.exp(&a)?;
            Ok(lhs == pv.exp(&a)? && lhs == expected)
        },
    );

    identity(
        runner,
        "collapse: path (n, k) equals path (n + k)",
        path_cases,
        |(s, m, x, y)| {
            let p = PathIndex::with_steps(2u32, s)?;
            let merged = PathIndex::with_steps(2u32, &[s[0] + s[1]])?;
            let same_carrier = p.element(*x).materialize(&b)? == merged.element(*x).materialize(&b)?;
            Ok(same_carrier && agrees(&p, *m, *x, *y)?.coord() == agrees(&merged, *m, *x, *y)?.coord())
        },
        |(s, m, x, y)| {
            let p = PathIndex::with_steps(2u32, s)?;
            let merged = PathIndex::with_steps(2u32, &[s[0] + s[1]])?;
            let expected = hyper_path(*m, &p.element(*x), &p.element(*y), &b)?.materialize(&ob)?;
            let (v, w) = (values(&p), values(&merged));
            let (a, c) = (v.value_of(&(*x).into())?, v.value_of(&(*y).into())?);
            if a != w.value_of(&(*x).into())? || c != w.value_of(&(*y).into())? {
                return Ok(false);
            }
            let value = literal_hyper(&v, *m, &a, &c, &ob)?;
            Ok(value == expected && value == literal_hyper(&w, *m, &a, &c, &ob)?)
        },
    );
}

fn int(level: u32, c: i64) -> LeveledInt {
    LeveledInt::new(level, c, 2u32).expect("base 2")
}

fn random_int(level: u32) -> impl Fn(&mut ChaCha8Rng) -> LeveledInt {
    move |rng| {
        let c: i64 = if rng.gen_bool(0.1) { 0 } else { rng.gen() };
        int(level, c)
    }
}

fn integer_suite(runner: &mut Runner, level: u32, cases: u64) {
    let r = random_int(level);
    let pair = |rng: &mut ChaCha8Rng| (r(rng), r(rng));
    let triple = |rng: &mut ChaCha8Rng| (r(rng), r(rng), r(rng));
    let base = two();
    let zero = LeveledInt::zero(level, &base).expect("base 2");
    let one = LeveledInt::one(level, &base).expect("base 2");
    let tag = format!("Z level {level}");

    runner.random(format!("{tag}: addition commutes"), cases, pair, |(a, b)| {
        Ok(a.z_add(b)? == b.z_add(a)?)
    });
    runner.random(format!("{tag}: addition associates"), cases, triple, |(a, b, c)| {
        Ok(a.z_add(b)?.z_add(c)? == a.z_add(&b.z_add(c)?)?)
    });
    runner.random(format!("{tag}: additive identity"), cases, &r, |a| {
        Ok(a.z_add(&zero)? == *a)
    });
    runner.random(format!("{tag}: additive inverse"), cases, &r, |a| {
        Ok(a.z_add(&a.z_neg())? == zero)
    });
    runner.random(format!("{tag}: multiplication commutes"), cases, pair, |(a, b)| {
        Ok(a.z_mul(b)? == b.z_mul(a)?)
    });
    runner.random(format!("{tag}: multiplication associates"), cases, triple, |(a, b, c)| {
        Ok(a.z_mul(b)?.z_mul(c)? == a.z_mul(&b.z_mul(c)?)?)
    });
    runner.random(format!("{tag}: multiplicative identity"), cases, &r, |a| {
        Ok(a.z_mul(&one)? == *a)
    });
    runner.random(format!("{tag}: distributivity"), cases, triple, |(a, b, c)| {
        Ok(a.z_mul(&b.z_add(c)?)? == a.z_mul(b)?.z_add(&a.z_mul(c)?)?)
    });
    runner.random(format!("{tag}: no zero divisors"), cases, pair, |(a, b)| {
        Ok(!a.z_mul(b)?.is_zero() || a.is_zero() || b.is_zero())
    });
    runner.exhaustive(
        format!("{tag}: no zero divisors, |coords| <= 8"),
        (-8..=8i64).flat_map(|x| (-8..=8i64).map(move |y| (x, y))),
        |&(x, y)| {
            let p = int(level, x).z_mul(&int(level, y))?;
            Ok(!p.is_zero() || x == 0 || y == 0)
        },
    );
    runner.random(format!("{tag}: T is an involution"), cases, &r, |a| {
        Ok(a.z_neg().z_neg() == *a)
    });
    runner.random(format!("{tag}: T distributes over addition"), cases, pair, |(a, b)| {
        Ok(a.z_neg().z_add(&b.z_neg())? == a.z_add(b)?.z_neg())
    });
    runner.random(format!("{tag}: T moves through multiplication"), cases, pair, |(a, b)| {
        let t = a.z_mul(b)?.z_neg();
        Ok(a.z_neg().z_mul(b)? == t && a.z_mul(&b.z_neg())? == t)
    });
    runner.random(format!("{tag}: T cancels in products"), cases, pair, |(a, b)| {
        Ok(a.z_neg().z_mul(&b.z_neg())? == a.z_mul(b)?)
    });
    runner.random(format!("{tag}: negative unit flips sign"), cases, &r, |a| {
        Ok(one.z_neg().z_mul(a)? == a.z_neg())
    });
    runner.random(format!("{tag}: E transports the ring"), cases, pair, |(a, b)| {
        Ok(a.z_add(b)?.z_exp() == a.z_exp().z_add(&b.z_exp())?
            && a.z_mul(b)?.z_exp() == a.z_exp().z_mul(&b.z_exp())?
            && a.z_exp().z_log()? == *a)
    });
    runner.random(format!("{tag}: order is translation invariant"), cases, triple, |(a, b, c)| {
        Ok(a.z_compare(b)? == a.z_add(c)?.z_compare(&b.z_add(c)?)?)
    });
    pair_oracle::integers(runner, level);
}

fn random_rat(level: u32) -> impl Fn(&mut ChaCha8Rng) -> LeveledRat {
    move |rng| {
        let num: i64 = if rng.gen_bool(0.1) {
            0
        } else {
            rng.gen_range(-(1 << 40)..=(1 << 40))
        };
        let den: i64 = rng.gen_range(1..=(1 << 40));
        LeveledRat::new(level, num, den, 2u32).expect("nonzero denominator")
    }
}

fn field_suite(runner: &mut Runner, level: u32, cases: u64) {
    let r = random_rat(level);
    let pair = |rng: &mut ChaCha8Rng| (r(rng), r(rng));
    let triple = |rng: &mut ChaCha8Rng| (r(rng), r(rng), r(rng));
    let base = two();
    let zero = LeveledRat::zero(level, &base).expect("base 2");
    let one = LeveledRat::one(level, &base).expect("base 2");
    let tag = format!("Q level {level}");

    runner.random(format!("{tag}: addition commutes"), cases, pair, |(a, b)| {
        Ok(a.q_add(b)? == b.q_add(a)?)
    });
    runner.random(format!("{tag}: addition associates"), cases, triple, |(a, b, c)| {
        Ok(a.q_add(b)?.q_add(c)? == a.q_add(&b.q_add(c)?)?)
    });
    runner.random(format!("{tag}: additive identity"), cases, &r, |a| {
        Ok(a.q_add(&zero)? == *a)
    });
    runner.random(format!("{tag}: additive inverse"), cases, &r, |a| {
        Ok(a.q_add(&a.q_neg())? == zero)
    });
    runner.random(format!("{tag}: multiplication commutes"), cases, pair, |(a, b)| {
        Ok(a.q_mul(b)? == b.q_mul(a)?)
    });
    runner.random(format!("{tag}: multiplication associates"), cases, triple, |(a, b, c)| {
        Ok(a.q_mul(b)?.q_mul(c)? == a.q_mul(&b.q_mul(c)?)?)
    });
    runner.random(format!("{tag}: multiplicative identity"), cases, &r, |a| {
        Ok(a.q_mul(&one)? == *a)
    });
    runner.random(format!("{tag}: multiplicative inverse"), cases, &r, |a| {
        if a.is_zero() {
            return Ok(a.q_inv() == Err(Error::DivisionByZero));
        }
        Ok(a.q_mul(&a.q_inv()?)? == one)
    });
    runner.random(format!("{tag}: distributivity"), cases, triple, |(a, b, c)| {
        Ok(a.q_mul(&b.q_add(c)?)? == a.q_mul(b)?.q_add(&a.q_mul(c)?)?)
    });
    runner.random(format!("{tag}: order is total and antisymmetric"), cases, pair, |(a, b)| {
        let ab = a.q_compare(b)?;
        Ok(ab == b.q_compare(a)?.reverse() && (ab == Ordering::Equal) == (a == b))
    });
    runner.random(format!("{tag}: order is translation invariant"), cases, triple, |(a, b, c)| {
        Ok(a.q_compare(b)? == a.q_add(c)?.q_compare(&b.q_add(c)?)?)
    });
    runner.random(format!("{tag}: positive factors preserve order"), cases, triple, |(a, b, c)| {
        let c = c.q_abs();
        if c.is_zero() {
            return Ok(true);
        }
        Ok(a.q_compare(b)? == a.q_mul(&c)?.q_compare(&b.q_mul(&c)?)?)
    });
    runner.random(format!("{tag}: distance identity"), cases, pair, |(a, b)| {
        Ok(a.q_dist(a)?.is_zero() && (a.q_dist(b)?.is_zero() == (a == b)))
    });
    runner.random(format!("{tag}: distance symmetry"), cases, pair, |(a, b)| {
        Ok(a.q_dist(b)? == b.q_dist(a)?)
    });
    runner.random(format!("{tag}: triangle inequality"), cases, triple, |(a, b, c)| {
        let direct = a.q_dist(c)?;
        let detour = a.q_dist(b)?.q_add(&b.q_dist(c)?)?;
        Ok(direct.q_compare(&detour)? != Ordering::Greater)
    });
    runner.random(format!("{tag}: involutions"), cases, pair, |(a, b)| {
        let mut ok = a.q_neg().q_neg() == *a;
        if !a.is_zero() {
            ok &= a.q_inv()?.q_inv()? == *a;
        }
        if !a.is_zero() && !b.is_zero() {
            ok &= a.q_mul(b)?.q_inv()? == a.q_inv()?.q_mul(&b.q_inv()?)?;
        }
        Ok(ok)
    });
    runner.random(format!("{tag}: E transports the field"), cases, pair, |(a, b)| {
        Ok(a.q_add(b)?.q_exp() == a.q_exp().q_add(&b.q_exp())?
            && a.q_mul(b)?.q_exp() == a.q_exp().q_mul(&b.q_exp())?
            && a.q_exp().q_log()? == *a)
    });
    pair_oracle::rationals(runner, level);
}

/// `exp_ω^n ∘ f ∘ ln_ω^n`: with `f` negation this is the additive inverse
/// of `(R_n, •n, •n+1)`, with `f` reciprocal the multiplicative one.
fn conjugate(n: u32, x: f64, omega: f64, f: impl Fn(f64) -> f64) -> Result<f64> {
    let mut y = x;
    for _ in 0..n {
        y = ln_omega(y, omega)?;
    }
    let mut y = f(y);
    for _ in 0..n {
        y = exp_omega(y, omega)?;
    }
    Ok(y)
}

fn close(x: f64, y: f64, rel: f64) -> bool {
    (x - y).abs() <= rel * x.abs().max(y.abs()).max(f64::MIN_POSITIVE)
}

/// Maps float overflow to a skip so unrepresentable draws are not failures.
fn fits<T>(r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Overflow(m) => Error::BudgetExceeded(format!("f64 overflow: {m}")),
        other => other,
    })
}

fn embedding_suite(runner: &mut Runner, level: u32, cases: u64) {
    let n = level.min(2);
    let tag = format!("embedding level {n}");
    // Draws whose exact images overflow f64 are redrawn.
    let coords = |rng: &mut ChaCha8Rng| loop {
        let (x, y) = (rng.gen_range(0..=20u32), rng.gen_range(0..=20u32));
        let (a, b) = (nat(n, x), nat(n, y));
        let images = [a.clone(), b.clone(), a.f_add(&b).expect("same level"), a.f_mul(&b).expect("same level")];
        if images.iter().all(|v| embed_nat(v).is_ok()) {
            break (x, y);
        }
    };
    let cases = cases.min(500);
    runner.random(format!("{tag}: F{n} maps to bullet {n}"), cases, coords, |&(x, y)| {
        let (a, b) = (nat(n, x), nat(n, y));
        let lhs = embed_nat(&a.f_add(&b)?)?;
        let rhs = bullet(n as i32, embed_nat(&a)?, embed_nat(&b)?, 2.0)?;
        Ok(close(lhs, rhs, 1e-9))
    });
    runner.random(
        format!("{tag}: F{} maps to bullet {}", n + 1, n + 1),
        cases,
        coords,
        |&(x, y)| {
            let (a, b) = (nat(n, x), nat(n, y));
            let lhs = embed_nat(&a.f_mul(&b)?)?;
            let rhs = bullet(n as i32 + 1, embed_nat(&a)?, embed_nat(&b)?, 2.0)?;
            Ok(close(lhs, rhs, 1e-9))
        },
    );
    let small = |rng: &mut ChaCha8Rng| (rng.gen_range(-6..=6i64), rng.gen_range(1..=6i64));
    runner.random(format!("{tag}: embedding commutes with E"), cases, small, |&(p, q)| {
        let z = int(n, p);
        let r = LeveledRat::new(n, p, q, 2u32)?;
        Ok(close(fits(embed_int(&z.z_exp()))?, exp_omega(embed_int(&z)?, 2.0)?, 1e-9)
            && close(fits(embed_rat(&r.q_exp()))?, exp_omega(embed_rat(&r)?, 2.0)?, 1e-9))
    });
    runner.random(format!("{tag}: involutions are transported"), cases, small, |&(p, q)| {
        let r = LeveledRat::new(n, p, q, 2u32)?;
        let x = embed_rat(&r)?;
        let mut ok = close(embed_rat(&r.q_neg())?, conjugate(n, x, 2.0, |y| -y)?, 1e-9);
        if !r.is_zero() {
            ok &= close(embed_rat(&r.q_inv()?)?, conjugate(n, x, 2.0, f64::recip)?, 1e-9);
        }
        Ok(ok)
    });
    let omega = 100f64.exp();
    runner.random(
        "tropical limit: bullet -1 is within ln 2 / ln ω of max",
        cases.min(100),
        |rng| (rng.gen_range(-10.0..=10.0f64), rng.gen_range(-10.0..=10.0f64)),
        |&(a, b)| Ok((bullet(-1, a, b, omega)? - a.max(b)).abs() <= 0.01),
    );
    runner.random(
        "probability semiring: positive reals are closed",
        cases,
        |rng| (rng.gen_range(1e-6..1e6f64), rng.gen_range(1e-6..1e6f64)),
        |&(a, b)| Ok(bullet(0, a, b, 2.0)? > 0.0 && bullet(1, a, b, 2.0)? > 0.0),
    );
    runner.random(
        "power tower is a fixed point of exp_ω inside the convergence interval",
        cases.min(50),
        |rng| rng.gen_range(0.07..1.44f64),
        |&x| match power_tower(x, 1e-13, 1_000_000)? {
            TowerOutcome::Converged(h) => Ok((exp_omega(h, x)? - h).abs() <= 1e-9),
            TowerOutcome::Diverged { .. } => Ok(false),
        },
    );
    runner.exhaustive(
        "power tower diverges outside the convergence interval",
        [1.5f64, 2.0, 0.06, 0.01],
        |&x| {
            Ok(matches!(
                power_tower(x, 1e-12, 100_000)?,
                TowerOutcome::Diverged { .. }
            ))
        },
    );
}

fn hereditary_suite(runner: &mut Runner, level: u32, cases: u64) {
    let budget = Budget::default();
    for w in [2u32, 3, 5] {
        let tag = format!("hereditary level {level} base {w}");
        let gen = |rng: &mut ChaCha8Rng| {
            let coord: u64 = if rng.gen_bool(0.5) {
                rng.gen_range(0..2048)
            } else {
                rng.gen()
            };
            LeveledNat::new(level, coord, w).expect("valid base")
        };
        runner.random(format!("{tag}: decode inverts encode"), cases, gen, |a| {
            Ok(decode(&encode(a), a.base(), &budget)? == *a)
        });
        runner.random(format!("{tag}: encoding is canonical"), cases, gen, |a| {
            let t = encode(a);
            let json = t.to_json();
            let back = HereditaryTerm::from_json(&json)?;
            Ok(encode(&decode(&back, a.base(), &budget)?) == t && back.to_json() == json)
        });
        runner.random(format!("{tag}: digits lie in (0, w)"), cases, gen, |a| {
            Ok(digits_in_range(&encode(a), a.base()))
        });
    }
}

fn digits_in_range(t: &HereditaryTerm, w: &Natural) -> bool {
    t.entries.iter().all(|e| {
        !e.digit.is_zero()
            && e.digit < *w
            && match &e.scale {
                Scale::Literal(_) => true,
                Scale::Nested(inner) => digits_in_range(inner, w),
            }
    })
}

/// The literal pair and congruence semantics of the integers and the
/// fields of quotients, used as an oracle for the canonical coordinates.
mod pair_oracle {
    use super::*;

    type Pair = (LeveledNat, LeveledNat);

    fn class(p: &Pair) -> LeveledInt {
        LeveledInt::from_pair(&NatPair::new(p.0.clone(), p.1.clone()).expect("same level"))
    }

    /// `(x, y) □ (u, v)` iff `F_n(x, v) = F_n(y, u)`.
    fn same(p: &Pair, q: &Pair) -> Result<bool> {
        Ok(p.0.f_add(&q.1)? == p.1.f_add(&q.0)?)
    }

    fn add(p: &Pair, q: &Pair) -> Result<Pair> {
        Ok((p.0.f_add(&q.0)?, p.1.f_add(&q.1)?))
    }

    fn mul(p: &Pair, q: &Pair) -> Result<Pair> {
        let (x, y) = p;
        let (u, v) = q;
        Ok((
            x.f_mul(u)?.f_add(&y.f_mul(v)?)?,
            x.f_mul(v)?.f_add(&y.f_mul(u)?)?,
        ))
    }

    fn less(p: &Pair, q: &Pair) -> Result<bool> {
        Ok(p.0.f_add(&q.1)?.compare(&p.1.f_add(&q.0)?)? == Ordering::Less)
    }

    pub(super) fn integers(runner: &mut Runner, level: u32) {
        let pairs: Vec<Pair> = grid2(8).map(|(x, y)| (nat(level, x), nat(level, y))).collect();
        let quads: Vec<(Pair, Pair)> = pairs
            .iter()
            .flat_map(|p| pairs.iter().map(move |q| (p.clone(), q.clone())))
            .collect();
        let tag = format!("Z level {level} pair oracle");
        runner.exhaustive(
            format!("{tag}: class equality is the congruence"),
            quads.clone(),
            |(p, q)| Ok((class(p) == class(q)) == same(p, q)?),
        );
        runner.exhaustive(format!("{tag}: addition"), quads.clone(), |(p, q)| {
            Ok(class(&add(p, q)?) == class(p).z_add(&class(q))?)
        });
        runner.exhaustive(format!("{tag}: multiplication"), quads.clone(), |(p, q)| {
            Ok(class(&mul(p, q)?) == class(p).z_mul(&class(q))?)
        });
        runner.exhaustive(format!("{tag}: order"), quads.clone(), |(p, q)| {
            Ok((class(p).z_compare(&class(q))? == Ordering::Less) == less(p, q)?)
        });
        runner.exhaustive(format!("{tag}: negation swaps"), pairs.clone(), |p| {
            Ok(class(&(p.1.clone(), p.0.clone())) == class(p).z_neg())
        });
        runner.exhaustive(
            format!("{tag}: E acts componentwise"),
            pairs.clone(),
            |p| Ok(class(&(p.0.exp(), p.1.exp())) == class(p).z_exp()),
        );
        runner.exhaustive(
            format!("{tag}: T identities on pairs"),
            quads,
            |(p, q)| {
                let t = |r: &Pair| (r.1.clone(), r.0.clone());
                Ok(same(&t(&t(p)), p)?
                    && same(&add(&t(p), &t(q))?, &t(&add(p, q)?))?
                    && same(&mul(&t(p), q)?, &t(&mul(p, q)?))?
                    && same(&mul(p, &t(q))?, &t(&mul(p, q)?))?
                    && same(&mul(&t(p), &t(q))?, &mul(p, q)?)?)
            },
        );
    }

    type Frac = (LeveledInt, LeveledInt);

    fn rat(f: &Frac) -> Result<LeveledRat> {
        LeveledRat::q_from(&f.0, &f.1)
    }

    /// `(x, y) ⊠ (u, v)` iff `x ⊗ v = u ⊗ y`.
    fn equiv(f: &Frac, g: &Frac) -> Result<bool> {
        Ok(f.0.z_mul(&g.1)? == g.0.z_mul(&f.1)?)
    }

    fn fadd(f: &Frac, g: &Frac) -> Result<Frac> {
        Ok((f.0.z_mul(&g.1)?.z_add(&g.0.z_mul(&f.1)?)?, f.1.z_mul(&g.1)?))
    }

    fn fmul(f: &Frac, g: &Frac) -> Result<Frac> {
        Ok((f.0.z_mul(&g.0)?, f.1.z_mul(&g.1)?))
    }

    /// Sign of `(x v - u y) y v`, which carries the sign of `f - g`.
    fn fless(f: &Frac, g: &Frac) -> Result<bool> {
        let diff = f.0.z_mul(&g.1)?.z_add(&g.0.z_mul(&f.1)?.z_neg())?;
        let s = diff.z_mul(&f.1.z_mul(&g.1)?)?;
        Ok(s.z_compare(&LeveledInt::zero(s.level(), s.base())?)? == Ordering::Less)
    }

    fn fracs(level: u32, max: i64) -> Vec<Frac> {
        (-max..=max)
            .flat_map(|x| (-max..=max).filter(|y| *y != 0).map(move |y| (x, y)))
            .map(|(x, y)| (int(level, x), int(level, y)))
            .collect()
    }

    pub(super) fn rationals(runner: &mut Runner, level: u32) {
        let all = fracs(level, 5);
        let quads: Vec<(Frac, Frac)> = all
            .iter()
            .flat_map(|f| all.iter().map(move |g| (f.clone(), g.clone())))
            .collect();
        let tag = format!("Q level {level} pair oracle");
        runner.exhaustive(
            format!("{tag}: class equality is the cross relation"),
            quads.clone(),
            |(f, g)| Ok((rat(f)? == rat(g)?) == equiv(f, g)?),
        );
        runner.exhaustive(format!("{tag}: addition"), quads.clone(), |(f, g)| {
            Ok(rat(&fadd(f, g)?)? == rat(f)?.q_add(&rat(g)?)?)
        });
        runner.exhaustive(format!("{tag}: multiplication"), quads.clone(), |(f, g)| {
            Ok(rat(&fmul(f, g)?)? == rat(f)?.q_mul(&rat(g)?)?)
        });
        runner.exhaustive(format!("{tag}: order"), quads, |(f, g)| {
            Ok((rat(f)?.q_compare(&rat(g)?)? == Ordering::Less) == fless(f, g)?)
        });
        runner.exhaustive(format!("{tag}: involutions"), all.clone(), |f| {
            let neg = rat(&(f.0.z_neg(), f.1.clone()))? == rat(f)?.q_neg();
            let inv = if f.0.is_zero() {
                rat(f)?.q_inv() == Err(Error::DivisionByZero)
            } else {
                rat(&(f.1.clone(), f.0.clone()))? == rat(f)?.q_inv()?
            };
            Ok(neg && inv)
        });
        let small = fracs(level, 4);
        let related: Vec<(Frac, Frac)> = small
            .iter()
            .flat_map(|f| small.iter().map(move |g| (f.clone(), g.clone())))
            .filter(|(f, g)| equiv(f, g).unwrap_or(false))
            .collect();
        runner.exhaustive(
            format!("{tag}: cross relation is transitive and compatible"),
            related,
            |(f, g)| {
                for h in &small {
                    if equiv(g, h)? && !equiv(f, h)? {
                        return Ok(false);
                    }
                    if !equiv(&fadd(f, h)?, &fadd(g, h)?)? || !equiv(&fmul(f, h)?, &fmul(g, h)?)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        );
    }
}
