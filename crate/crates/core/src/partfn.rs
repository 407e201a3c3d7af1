//! Coefficient extraction from products of geometric series over root lists.
//!
//! `pq` is the q-Kostant partition function of a root system, `coeff_bcd`
//! counts decompositions into the generators of `L_B`, `L_C`, `L_D`, and
//! `fq`/`Fq` are the coefficients of the two mixed products defining the
//! q-multiplicities.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qpoly::LaurentPoly;
use crate::weyl::{RootSystem, Weight};

/// The generating products the engine knows how to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ListKind {
    /// Positive roots of a root system, each with q-degree 1.
    Positive(RootSystem),
    /// Generators of `L_B`, `L_C` or `L_D`, each with q-degree 0.
    Lattice(BcdKind),
    /// `x_i / x_j` (i < j) and `1 / (x_i x_j)` (i < j), q-degree 1.
    SmallF,
    /// As `SmallF` with `i <= j` in the second family.
    BigF,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BcdKind {
    B,
    C,
    D,
}

impl std::str::FromStr for BcdKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b" | "B" => Ok(BcdKind::B),
            "c" | "C" => Ok(BcdKind::C),
            "d" | "D" => Ok(BcdKind::D),
            other => Err(Error::Parse(format!("unknown lattice kind {other:?}"))),
        }
    }
}

/// An ordered list of generators with a common q-degree.
#[derive(Clone, Debug)]
pub struct RootList {
    pub roots: Vec<Vec<i64>>,
    pub qdeg: i64,
    /// A linear functional positive on every root; bounds multiplicities.
    pub height: Vec<i64>,
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn pair(n: usize, i: usize, j: usize, si: i64, sj: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] += si;
    v[j] += sj;
    v
}

impl RootList {
    pub fn new(kind: ListKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        let mut roots = Vec::new();
        let descending: Vec<i64> = (1..=n as i64).rev().collect();
        let (qdeg, height) = match kind {
            ListKind::Positive(sys) => {
                for i in 0..n {
                    for j in i + 1..n {
                        roots.push(pair(n, i, j, 1, -1));
                        if sys != RootSystem::A {
                            roots.push(pair(n, i, j, 1, 1));
                        }
                    }
                    match sys {
                        RootSystem::B => roots.push(unit(n, i)),
                        RootSystem::C => roots.push(pair(n, i, i, 1, 1)),
                        _ => {}
                    }
                }
                (1, descending)
            }
            ListKind::Lattice(k) => {
                for i in 0..n {
                    for j in i..n {
                        if i < j || k == BcdKind::C {
                            roots.push(pair(n, i, j, 1, 1));
                        }
                    }
                    if k == BcdKind::B {
                        roots.push(unit(n, i));
                    }
                }
                (0, vec![1; n])
            }
            ListKind::SmallF | ListKind::BigF => {
                for i in 0..n {
                    for j in i..n {
                        if i < j {
                            roots.push(pair(n, i, j, 1, -1));
                        }
                        if i < j || kind == ListKind::BigF {
                            roots.push(pair(n, i, j, -1, -1));
                        }
                    }
                }
                (1, (1..=n as i64).map(|i| -i).collect())
            }
        };
        Ok(Self { roots, qdeg, height })
    }

    pub fn rank(&self) -> usize {
        self.height.len()
    }

    fn h(&self, v: &[i64]) -> i64 {
        v.iter().zip(&self.height).map(|(a, b)| a * b).sum()
    }
}

/// Memoized backward recursion over `(root index, residual)`.
struct Engine {
    list: RootList,
    /// `can_pos[i][c]`: some root at index `>= i` has a positive entry in
    /// coordinate `c`; likewise `can_neg`.
    can_pos: Vec<Vec<bool>>,
    can_neg: Vec<Vec<bool>>,
    root_h: Vec<i64>,
    memo: HashMap<(usize, Vec<i64>), Rc<LaurentPoly>>,
}

impl Engine {
    fn new(list: RootList) -> Self {
        let n = list.rank();
        let m = list.roots.len();
        let mut can_pos = vec![vec![false; n]; m + 1];
        let mut can_neg = vec![vec![false; n]; m + 1];
        for i in (0..m).rev() {
            for c in 0..n {
                let x = list.roots[i][c];
                can_pos[i][c] = can_pos[i + 1][c] || x > 0;
                can_neg[i][c] = can_neg[i + 1][c] || x < 0;
            }
        }
        let root_h = list.roots.iter().map(|r| list.h(r)).collect();
        Self {
            list,
            can_pos,
            can_neg,
            root_h,
            memo: HashMap::new(),
        }
    }

    fn feasible(&self, i: usize, r: &[i64]) -> bool {
        r.iter().enumerate().all(|(c, &x)| {
            (x <= 0 || self.can_pos[i][c]) && (x >= 0 || self.can_neg[i][c])
        })
    }

    fn count(&mut self, i: usize, r: &[i64]) -> Rc<LaurentPoly> {
        if i == self.list.roots.len() {
            return Rc::new(if r.iter().all(|&x| x == 0) {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            });
        }
        if !self.feasible(i, r) || self.list.h(r) < 0 {
            return Rc::new(LaurentPoly::zero());
        }
        let key = (i, r.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let max_mult = self.list.h(r) / self.root_h[i];
        let mut acc = LaurentPoly::zero();
        let mut cur = r.to_vec();
        for m in 0..=max_mult {
            let sub = self.count(i + 1, &cur);
            if !sub.is_zero() {
                acc += &sub.shift(m * self.list.qdeg);
            }
            for (c, x) in cur.iter_mut().enumerate() {
                *x -= self.list.roots[i][c];
            }
        }
        let out = Rc::new(acc);
        self.memo.insert(key, out.clone());
        out
    }
}

thread_local! {
    static ENGINES: RefCell<HashMap<(ListKind, usize), Engine>> = RefCell::new(HashMap::new());
}

/// Coefficient of `x^beta` in the product attached to `kind`.
pub fn coefficient(kind: ListKind, beta: &[i64]) -> Result<LaurentPoly> {
    let n = beta.len();
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    ENGINES.with(|engines| {
        let mut engines = engines.borrow_mut();
        let engine = match engines.entry((kind, n)) {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(Engine::new(RootList::new(kind, n)?))
            }
        };
        Ok((*engine.count(0, beta)).clone())
    })
}

/// Drops all thread-local memo tables.
pub fn clear_caches() {
    ENGINES.with(|e| e.borrow_mut().clear());
}

/// `P_q^phi(beta)` for an integral weight.
pub fn pq(system: RootSystem, beta: &Weight) -> Result<LaurentPoly> {
    pq_int(system, &beta.to_integers()?)
}

pub fn pq_int(system: RootSystem, beta: &[i64]) -> Result<LaurentPoly> {
    coefficient(ListKind::Positive(system), beta)
}

/// `b(delta)`, `c(delta)` or `d(delta)`.
pub fn coeff_bcd(kind: BcdKind, delta: &[i64]) -> Result<BigInt> {
    Ok(coefficient(ListKind::Lattice(kind), delta)?.coeff(0))
}

/// Elements of `N^n` with the given coordinate sum.
pub fn compositions(total: i64, n: usize) -> Vec<Vec<i64>> {
    fn rec(rem: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=rem).rev() {
            cur.push(x);
            rec(rem - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total < 0 || n == 0 {
        return out;
    }
    rec(total, n, &mut Vec::new(), &mut out);
    out
}

/// Nonzero elements of `L_kind` of size `total` with their multiplicities.
pub fn lattice_elements(kind: BcdKind, total: i64, n: usize) -> Result<Vec<(Vec<i64>, BigInt)>> {
    let mut out = Vec::new();
    for delta in compositions(total, n) {
        let c = coeff_bcd(kind, &delta)?;
        if c != BigInt::from(0) {
            out.push((delta, c));
        }
    }
    Ok(out)
}

fn f_via_convolution(kind: BcdKind, beta: &[i64]) -> Result<LaurentPoly> {
    let size: i64 = beta.iter().sum();
    if size > 0 || size % 2 != 0 {
        return Ok(LaurentPoly::zero());
    }
    let mut acc = LaurentPoly::zero();
    for (delta, c) in lattice_elements(kind, -size, beta.len())? {
        let shifted: Vec<i64> = beta.iter().zip(&delta).map(|(b, d)| b + d).collect();
        let pa = pq_int(RootSystem::A, &shifted)?;
        if !pa.is_zero() {
            acc += &pa.shift(-size / 2).scale(&c);
        }
    }
    Ok(acc)
}

/// `f_q(beta)`: pairs `P_q^A` with the strict-pair coefficients `d`.
pub fn fq(beta: &[i64]) -> Result<LaurentPoly> {
    f_via_convolution(BcdKind::D, beta)
}

/// `F_q(beta)`: pairs `P_q^A` with the coefficients `c`.
#[allow(non_snake_case)]
pub fn Fq(beta: &[i64]) -> Result<LaurentPoly> {
    f_via_convolution(BcdKind::C, beta)
}

/// Independent oracles: forward truncated expansion of the generating
/// products, without memoized recursion.
pub mod oracle {
    use super::*;

    /// All coefficients `x^beta` with `height(beta) <= cap`. Truncating by
    /// height is exact because every generator has positive height, so
    /// every partial product of a term has height at most the term's.
    pub fn expand(kind: ListKind, n: usize, cap: i64) -> Result<HashMap<Vec<i64>, LaurentPoly>> {
        let list = RootList::new(kind, n)?;
        let mut terms: HashMap<Vec<i64>, LaurentPoly> = HashMap::new();
        terms.insert(vec![0; n], LaurentPoly::one());
        for root in &list.roots {
            let rh = list.h(root);
            let mut next: HashMap<Vec<i64>, LaurentPoly> = HashMap::new();
            for (beta, p) in &terms {
                let mut cur = beta.clone();
                let mut m = 0;
                while list.h(&cur) <= cap {
                    *next.entry(cur.clone()).or_insert_with(LaurentPoly::zero) +=
                        &p.shift(m * list.qdeg);
                    for (c, x) in cur.iter_mut().enumerate() {
                        *x += root[c];
                    }
                    m += 1;
                    debug_assert!(rh > 0);
                }
            }
            terms = next;
        }
        Ok(terms)
    }

    /// `P_q^phi(beta)` by truncated expansion, refusing when `beta` would
    /// need terms beyond `cap`.
    pub fn pq_brute_oracle(system: RootSystem, beta: &[i64], cap: i64) -> Result<LaurentPoly> {
        direct(ListKind::Positive(system), beta, cap)
    }

    /// Coefficient of `x^beta` for any list kind by truncated expansion.
    pub fn direct(kind: ListKind, beta: &[i64], cap: i64) -> Result<LaurentPoly> {
        let list = RootList::new(kind, beta.len())?;
        let need = list.h(beta);
        if need > cap {
            return Err(Error::CapExceeded(format!(
                "height {need} of {beta:?} exceeds cap {cap}"
            )));
        }
        if need < 0 {
            return Ok(LaurentPoly::zero());
        }
        let terms = expand(kind, beta.len(), need)?;
        Ok(terms.get(beta).cloned().unwrap_or_else(LaurentPoly::zero))
    }

    /// Height of `beta` under the functional used by `kind`.
    pub fn height(kind: ListKind, beta: &[i64]) -> Result<i64> {
        Ok(RootList::new(kind, beta.len())?.h(beta))
    }
}
