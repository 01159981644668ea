//! Path-indexed Peano systems `N̂^{n_k}` and their regular hyperoperations.
//!
//! A [`PathIndex`] records the steps `(n₁, …, n_k)` together with the base
//! of every step's exponential. Each base after the first is stored as a
//! coordinate on its own path, i.e. as the preimage under the composed
//! isomorphism from `N`. A [`PathNat`] is likewise stored by coordinate,
//! so every `[n_k : m]` acts on coordinates as plain `H_m`.
//!
//! [`PathValues`] rebuilds the same systems on materialized naturals from
//! the recursive successor definition alone; it is the independent oracle
//! for everything coordinate-based here.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::{
    exp_base, hyper, literal_hyper, log_base, require_base, Budget, Natural, PeanoSystem,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathIndex {
    steps: Vec<u32>,
    /// `bases[j]` is the coordinate of `w_j` on the length-`j` prefix;
    /// `bases[0]` is the plain natural `w₀`. Always one longer than `steps`.
    bases: Vec<Natural>,
}

impl PathIndex {
    /// The base system `(N, 0, S)` with exponential base `w0`.
    pub fn root(w0: impl Into<Natural>) -> Result<Self> {
        let w0 = w0.into();
        require_base(&w0)?;
        Ok(PathIndex {
            steps: Vec::new(),
            bases: vec![w0],
        })
    }

    /// Appends step `n_next` with exponential base `w_next` (a coordinate on
    /// the extended path). Without an explicit base the previous base's
    /// coordinate is reused, which is the choice `L^{n_k}(w_k) = w_{k-1}`
    /// that makes consecutive exponentials coincide.
    pub fn extend(&self, n_next: u32, w_next: Option<Natural>) -> Result<Self> {
        let w = w_next.unwrap_or_else(|| self.exp_base().clone());
        if w <= Natural::one() {
            return Err(Error::InvalidBase(format!(
                "step base coordinate {w} denotes 0̂ or 1̂"
            )));
        }
        let mut next = self.clone();
        next.steps.push(n_next);
        next.bases.push(w);
        Ok(next)
    }

    /// Builds a path from explicit steps with every base left at its default.
    pub fn with_steps(w0: impl Into<Natural>, steps: &[u32]) -> Result<Self> {
        steps
            .iter()
            .try_fold(Self::root(w0)?, |p, &n| p.extend(n, None))
    }

    pub fn steps(&self) -> &[u32] {
        &self.steps
    }

    pub fn bases(&self) -> &[Natural] {
        &self.bases
    }

    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    /// Coordinate of this path's own exponential base `w_k`.
    pub fn exp_base(&self) -> &Natural {
        self.bases.last().expect("bases is never empty")
    }

    /// `n_{k-1}`-path: the last step removed.
    pub fn prefix(&self) -> Option<PathIndex> {
        let mut p = self.clone();
        p.steps.pop()?;
        p.bases.pop();
        Some(p)
    }

    /// `n_k + delta` with everything else unchanged.
    fn shift_last(&self, delta: i64) -> Option<PathIndex> {
        let mut p = self.clone();
        let last = p.steps.last_mut()?;
        *last = u32::try_from(i64::from(*last) + delta).ok()?;
        Some(p)
    }

    pub fn element(&self, coord: impl Into<Natural>) -> PathNat {
        PathNat {
            path: self.clone(),
            coord: coord.into(),
        }
    }
}

impl fmt::Display for PathIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathNat {
    path: PathIndex,
    coord: Natural,
}

impl PathNat {
    pub fn path(&self) -> &PathIndex {
        &self.path
    }

    pub fn coord(&self) -> &Natural {
        &self.coord
    }

    fn same_path(&self, other: &PathNat) -> Result<()> {
        if self.path != other.path {
            return Err(Error::LevelPathMismatch(format!(
                "{} vs {}",
                self.path, other.path
            )));
        }
        Ok(())
    }

    /// The same element seen on the prefix path: `E_{n_{k-1}}^{n_k}` on
    /// coordinates.
    pub fn to_prefix(&self, budget: &Budget) -> Result<Option<PathNat>> {
        let Some(prefix) = self.path.prefix() else {
            return Ok(None);
        };
        let base = prefix.exp_base().clone();
        let mut coord = self.coord.clone();
        for _ in 0..*self.path.steps.last().expect("nonempty path") {
            coord = exp_base(&coord, &base, budget)?;
        }
        Ok(Some(PathNat {
            path: prefix,
            coord,
        }))
    }

    /// Denoted natural number, via the coordinate route.
    pub fn materialize(&self, budget: &Budget) -> Result<Natural> {
        let mut cur = self.clone();
        while let Some(next) = cur.to_prefix(budget)? {
            cur = next;
        }
        Ok(cur.coord)
    }
}

/// `S_{n_k}`.
pub fn succ_path(a: &PathNat) -> PathNat {
    PathNat {
        path: a.path.clone(),
        coord: &a.coord + 1u32,
    }
}

/// `a [n_k : m] b`, computed as `H_m` on coordinates.
pub fn hyper_path(m: u32, a: &PathNat, b: &PathNat, budget: &Budget) -> Result<PathNat> {
    a.same_path(b)?;
    Ok(PathNat {
        path: a.path.clone(),
        coord: hyper(m, &a.coord, &b.coord, budget)?,
    })
}

/// `E_{n_k}(a) = w_k [n_k : 3] a`.
pub fn exp_path(a: &PathNat, budget: &Budget) -> Result<PathNat> {
    let w = a.path.exp_base();
    if *w <= Natural::one() {
        return Err(Error::InvalidBase(format!("{w}")));
    }
    Ok(PathNat {
        path: a.path.clone(),
        coord: hyper(3, w, &a.coord, budget)?,
    })
}

pub fn extend_path(p: &PathIndex, n_next: u32, w_next: Option<Natural>) -> Result<PathIndex> {
    p.extend(n_next, w_next)
}

/// The path's Peano system on coordinates, successor [`succ_path`].
impl PeanoSystem for PathIndex {
    type Elem = PathNat;

    fn zero(&self) -> Result<PathNat> {
        Ok(self.element(Natural::zero()))
    }

    fn succ(&self, x: &PathNat) -> Result<PathNat> {
        Ok(succ_path(x))
    }

    fn pred(&self, x: &PathNat) -> Result<Option<PathNat>> {
        Ok((!x.coord.is_zero()).then(|| x.path.element(&x.coord - 1u32)))
    }
}

/// `a [n_k : m] b` by unfolding the recursive definition with [`succ_path`].
pub fn hyper_path_literal(m: u32, a: &PathNat, b: &PathNat, budget: &Budget) -> Result<PathNat> {
    a.same_path(b)?;
    literal_hyper(&a.path, m, a, b, budget)
}

/// A path's Peano system on materialized naturals, built only from the
/// recursive successor `S_{n_k}(a) = E_{n_{k-1}}(S_{n_k-1}(L_{n_{k-1}}(a)))`,
/// with `E_{n_j}(a) = w_j [n_j : 3] a` unfolded literally below the root.
#[derive(Debug, Clone)]
pub struct PathValues {
    path: PathIndex,
    budget: Budget,
    cache: Rc<RefCell<HashMap<PathIndex, ExpCache>>>,
}

/// Memoized `E` images per path. `ascending` lists carrier elements from
/// `0̂` upward with their images, which increase strictly.
#[derive(Debug, Default)]
struct ExpCache {
    exp: HashMap<Natural, Natural>,
    ascending: Vec<(Natural, Natural)>,
}

impl PathValues {
    pub fn new(path: &PathIndex, budget: &Budget) -> Self {
        PathValues {
            path: path.clone(),
            budget: *budget,
            cache: Rc::default(),
        }
    }

    fn on(&self, path: PathIndex) -> PathValues {
        PathValues {
            path,
            budget: self.budget,
            cache: Rc::clone(&self.cache),
        }
    }

    fn cached<T>(&self, f: impl FnOnce(&mut ExpCache) -> T) -> T {
        f(self.cache.borrow_mut().entry(self.path.clone()).or_default())
    }

    fn prefix(&self) -> Option<PathValues> {
        self.path.prefix().map(|p| self.on(p))
    }

    /// `S^coord(0̂)`.
    pub fn value_of(&self, coord: &Natural) -> Result<Natural> {
        let mut x = self.zero()?;
        let mut i = Natural::zero();
        while i < *coord {
            x = self.succ(&x)?;
            i += 1u32;
        }
        Ok(x)
    }

    /// Number of predecessors down to `0̂`.
    pub fn coord_of(&self, value: &Natural) -> Result<Natural> {
        let mut count = Natural::zero();
        let mut cur = value.clone();
        while let Some(p) = self.pred(&cur)? {
            count += 1u32;
            cur = p;
        }
        if cur != self.zero()? {
            return Err(Error::NotInImage(format!("{value} on path {}", self.path)));
        }
        Ok(count)
    }

    /// Value of this path's exponential base `w_k`.
    pub fn base_value(&self) -> Result<Natural> {
        self.value_of(self.path.exp_base())
    }

    /// `E_{n_k}`.
    pub fn exp(&self, x: &Natural) -> Result<Natural> {
        if self.path.depth() == 0 {
            return exp_base(x, self.path.exp_base(), &self.budget);
        }
        if let Some(v) = self.cached(|c| c.exp.get(x).cloned()) {
            return Ok(v);
        }
        let v = literal_hyper(self, 3, &self.base_value()?, x, &self.budget)?;
        self.cached(|c| c.exp.insert(x.clone(), v.clone()));
        Ok(v)
    }

    /// `L_{n_k}` by ascending search through the carrier.
    pub fn log(&self, x: &Natural) -> Result<Natural> {
        if self.path.depth() == 0 {
            return log_base(x, self.path.exp_base());
        }
        loop {
            let (found, last) = self.cached(|c| {
                let i = c.ascending.partition_point(|(_, image)| image < x);
                let found = c.ascending.get(i).map(|(arg, image)| (arg.clone(), image == x));
                (found, c.ascending.last().cloned())
            });
            match found {
                Some((arg, true)) => return Ok(arg),
                Some((_, false)) => {
                    return Err(Error::NotInImage(format!("{x} on path {}", self.path)))
                }
                None => {}
            }
            let candidate = match last {
                None => self.zero()?,
                Some((arg, _)) => self.succ(&arg)?,
            };
            let image = self.exp(&candidate)?;
            self.cached(|c| c.ascending.push((candidate, image)));
        }
    }
}

impl PeanoSystem for PathValues {
    type Elem = Natural;

    fn zero(&self) -> Result<Natural> {
        let Some(prefix) = self.prefix() else {
            return Ok(Natural::zero());
        };
        let mut x = prefix.zero()?;
        for _ in 0..*self.path.steps.last().expect("nonempty") {
            x = prefix.exp(&x)?;
        }
        Ok(x)
    }

    fn succ(&self, x: &Natural) -> Result<Natural> {
        let Some(prefix) = self.prefix() else {
            return Ok(x + 1u32);
        };
        match self.path.shift_last(-1) {
            None => prefix.succ(x),
            Some(down) => prefix.exp(&self.on(down).succ(&prefix.log(x)?)?),
        }
    }

    fn pred(&self, x: &Natural) -> Result<Option<Natural>> {
        let Some(prefix) = self.prefix() else {
            return Ok((!x.is_zero()).then(|| x - 1u32));
        };
        match self.path.shift_last(-1) {
            None => prefix.pred(x),
            Some(down) => match self.on(down).pred(&prefix.log(x)?)? {
                None => Ok(None),
                Some(p) => Ok(Some(prefix.exp(&p)?)),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> Natural {
        Natural::from(x)
    }

    #[test]
    fn successor_examples() {
        let root = PathIndex::root(2u32).unwrap();
        assert_eq!(succ_path(&root.element(4u32)).coord(), &n(5));
        let one = PathIndex::with_steps(2u32, &[1]).unwrap();
        let s = succ_path(&one.element(2u32));
        assert_eq!(s.coord(), &n(3));
        assert_eq!(s.materialize(&Budget::default()).unwrap(), n(8));
        let oo = PathIndex::with_steps(2u32, &[1, 1]).unwrap();
        assert_eq!(succ_path(&oo.element(0u32)).coord(), &n(1));
    }

    #[test]
    fn hyper_examples() {
        let b = Budget::default();
        let p = PathIndex::with_steps(2u32, &[1]).unwrap();
        let r = hyper_path(1, &p.element(2u32), &p.element(4u32), &b).unwrap();
        assert_eq!(r.coord(), &n(6));
        assert_eq!(r.materialize(&b).unwrap(), n(64));
        let r = hyper_path(2, &p.element(1u32), &p.element(2u32), &b).unwrap();
        assert_eq!(r.coord(), &n(2));
        assert_eq!(r.materialize(&b).unwrap(), n(4));
        let x = p.element(7u32);
        assert_eq!(hyper_path(0, &x, &p.element(3u32), &b).unwrap(), p.element(4u32));
        let q = PathIndex::with_steps(2u32, &[2]).unwrap();
        assert!(matches!(
            hyper_path(1, &x, &q.element(1u32), &b),
            Err(Error::LevelPathMismatch(_))
        ));
    }

    #[test]
    fn exp_examples() {
        let b = Budget::default();
        let root = PathIndex::root(2u32).unwrap();
        assert_eq!(exp_path(&root.element(3u32), &b).unwrap().coord(), &n(8));
        // w₁ = 4 = E(w₀), coordinate 2 on path (1).
        let p = PathIndex::root(2u32).unwrap().extend(1, Some(n(2))).unwrap();
        assert_eq!(p.element(2u32).materialize(&b).unwrap(), n(4));
        let e = exp_path(&p.element(2u32), &b).unwrap();
        assert_eq!(e.materialize(&b).unwrap(), n(16));
        let e = exp_path(&p.element(4u32), &b).unwrap();
        assert_eq!(e.materialize(&b).unwrap(), n(1) << 16);
    }

    #[test]
    fn extension_rules() {
        let root = PathIndex::root(2u32).unwrap();
        let one = extend_path(&root, 1, Some(n(2))).unwrap();
        assert_eq!(one.steps(), &[1]);
        let one_zero = extend_path(&one, 0, None).unwrap();
        assert_eq!(one_zero.steps(), &[1, 0]);
        let b = Budget::default();
        for x in 0..4u64 {
            for y in 0..4u64 {
                for m in 0..=3 {
                    let lhs = hyper_path(m, &one_zero.element(x), &one_zero.element(y), &b)
                        .unwrap()
                        .materialize(&b)
                        .unwrap();
                    let rhs = hyper_path(m, &one.element(x), &one.element(y), &b)
                        .unwrap()
                        .materialize(&b)
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        let two_one = extend_path(&PathIndex::with_steps(2u32, &[2]).unwrap(), 1, Some(n(3)))
            .unwrap();
        assert_eq!(two_one.steps(), &[2, 1]);
        assert!(matches!(extend_path(&one, 1, Some(n(1))), Err(Error::InvalidBase(_))));
        assert!(matches!(extend_path(&one, 2, Some(n(0))), Err(Error::InvalidBase(_))));
        assert!(matches!(PathIndex::root(1u32), Err(Error::InvalidBase(_))));
    }

    #[test]
    fn value_systems_match_coordinates() {
        let b = Budget::default();
        for steps in [&[][..], &[1], &[2], &[1, 0], &[1, 1], &[0, 2]] {
            let p = PathIndex::with_steps(2u32, steps).unwrap();
            let sys = PathValues::new(&p, &b);
            for c in 0..=3u64 {
                let v = sys.value_of(&n(c)).unwrap();
                assert_eq!(v, p.element(c).materialize(&b).unwrap(), "{p} coord {c}");
                assert_eq!(sys.coord_of(&v).unwrap(), n(c));
            }
        }
    }

    #[test]
    fn literal_base_reading_collapses_to_unit() {
        // Reading the base condition as w₁ = w₀ [(1):4] 2 inside N̂^{(1)}:
        // w₀ = 2 and 2 are both coordinate 1 there, and H_4(1, 1) = 1.
        let p = PathIndex::with_steps(2u32, &[1]).unwrap();
        let b = Budget::default();
        let w = hyper_path(4, &p.element(1u32), &p.element(1u32), &b).unwrap();
        assert_eq!(w.coord(), &n(1));
        assert!(matches!(p.extend(1, Some(w.coord().clone())), Err(Error::InvalidBase(_))));
    }
}
