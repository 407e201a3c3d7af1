//! Root-system data for types A, B, C and D: weights, partitions, half sums of
//! positive roots and the Weyl groups realised as signed permutations.
//!
//! Weights are stored in doubled coordinates so the half-integral weights of
//! types B and D (for instance `rho_B = (n - 1/2, ..., 1/2)`) are exact.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Root system labels used throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootSystem {
    A,
    B,
    C,
    D,
}

impl RootSystem {
    /// The Weyl group of the root system as a group of signed permutations.
    pub fn weyl_group(self) -> WeylGroup {
        match self {
            RootSystem::A => WeylGroup::A,
            RootSystem::B | RootSystem::C => WeylGroup::BC,
            RootSystem::D => WeylGroup::D,
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootSystem::A => "A",
            RootSystem::B => "B",
            RootSystem::C => "C",
            RootSystem::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for RootSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(RootSystem::A),
            "B" | "b" => Ok(RootSystem::B),
            "C" | "c" => Ok(RootSystem::C),
            "D" | "d" => Ok(RootSystem::D),
            other => Err(Error::Parse(format!("unknown root system {other:?}"))),
        }
    }
}

/// The three signed-permutation groups: `S_n`, the hyperoctahedral group
/// `W_{B_n} = W_{C_n}` and its even-sign subgroup `W_{D_n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeylGroup {
    A,
    BC,
    D,
}

/// Which half sum of positive roots to build with [`rho`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoKind {
    B,
    C,
    D,
    /// `rho_n = (n, ..., 1)`, used by the restricted sums over `S_n`.
    Restricted,
}

impl RhoKind {
    /// The half sum attached to a root system. Type A uses `rho_n`; any
    /// vector differing from it by a multiple of `(1, ..., 1)` gives the
    /// same alternating sums over `S_n`.
    pub fn of(system: RootSystem) -> Self {
        match system {
            RootSystem::A => RhoKind::Restricted,
            RootSystem::B => RhoKind::B,
            RootSystem::C => RhoKind::C,
            RootSystem::D => RhoKind::D,
        }
    }
}

/// A weight stored in doubled coordinates: entry `v` represents `v / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords2: Vec<i64>,
}

impl Weight {
    pub fn from_doubled(coords2: Vec<i64>) -> Self {
        Self { coords2 }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self {
            coords2: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self { coords2: vec![0; n] }
    }

    pub fn rank(&self) -> usize {
        self.coords2.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.coords2
    }

    pub fn is_integral(&self) -> bool {
        self.coords2.iter().all(|c| c % 2 == 0)
    }

    /// Integer coordinates; fails with [`Error::Parity`] on a half-integral entry.
    pub fn to_integers(&self) -> Result<Vec<i64>> {
        if !self.is_integral() {
            return Err(Error::Parity(self.coords2.clone()));
        }
        Ok(self.coords2.iter().map(|c| c / 2).collect())
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        check_rank(self.rank(), other.rank())?;
        Ok(Weight::from_doubled(
            self.coords2.iter().zip(&other.coords2).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        check_rank(self.rank(), other.rank())?;
        Ok(Weight::from_doubled(
            self.coords2.iter().zip(&other.coords2).map(|(a, b)| a - b).collect(),
        ))
    }

    /// `|v| = v_1 + ... + v_n`, doubled.
    pub fn size2(&self) -> i64 {
        self.coords2.iter().sum()
    }

    /// `||v|| = sum_i (n - i) v_i`, doubled.
    pub fn norm2(&self) -> i64 {
        let n = self.rank() as i64;
        self.coords2
            .iter()
            .enumerate()
            .map(|(i, v)| (n - 1 - i as i64) * v)
            .sum()
    }
}

/// Renders half-integers as `3/2`, e.g. `(3/2, 1/2)`.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords2.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if c % 2 == 0 {
                write!(f, "{}", c / 2)?;
            } else {
                write!(f, "{c}/2")?;
            }
        }
        f.write_str(")")
    }
}

fn check_rank(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::LengthMismatch { left: a, right: b });
    }
    Ok(())
}

/// A partition of declared length `n`; trailing zeros are explicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) || !is_decreasing(&parts) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty(n: usize) -> Self {
        Self { parts: vec![0; n] }
    }

    /// `(1, ..., 1)` of length `n`.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn nonzero_len(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// Transpose of the Young diagram at the same declared length.
    ///
    /// Fails when the first part exceeds the declared length, since the
    /// conjugate would not fit.
    pub fn conjugate(&self) -> Result<Partition> {
        self.conjugate_with_len(self.len())
    }

    pub fn conjugate_with_len(&self, len: usize) -> Result<Partition> {
        let first = self.parts.first().copied().unwrap_or(0);
        if first as usize > len {
            return Err(Error::Hypothesis(format!(
                "conjugate of {:?} does not fit in length {len}",
                self.parts
            )));
        }
        let parts = (1..=len as i64)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as i64)
            .collect();
        Ok(Partition { parts })
    }

    /// Pads or trims (zero parts only) to length `len`.
    pub fn with_len(&self, len: usize) -> Result<Partition> {
        if self.nonzero_len() > len {
            return Err(Error::Hypothesis(format!(
                "{:?} has more than {len} nonzero parts",
                self.parts
            )));
        }
        let mut parts = self.parts.clone();
        parts.resize(len, 0);
        Ok(Partition { parts })
    }

    /// All rows of even length.
    pub fn rows_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// All columns of even length.
    pub fn cols_even(&self) -> bool {
        let first = self.parts.first().copied().unwrap_or(0);
        (1..=first).all(|j| self.parts.iter().filter(|&&p| p >= j).count() % 2 == 0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        self.len() == other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_int_list(s)?)
    }
}

/// Parses `"3,1,0"` (or `"3, -1"`) into integers.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
        })
        .collect()
}

pub fn is_decreasing(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

pub fn check_decreasing(v: &[i64]) -> Result<()> {
    if !is_decreasing(v) {
        return Err(Error::NotDecreasing(v.to_vec()));
    }
    Ok(())
}

/// `kappa_n = (1, ..., 1)`.
pub fn kappa(n: usize) -> Vec<i64> {
    vec![1; n]
}

/// `v + k * kappa_n`.
pub fn translate(v: &[i64], k: i64) -> Vec<i64> {
    v.iter().map(|x| x + k).collect()
}

pub fn size(v: &[i64]) -> i64 {
    v.iter().sum()
}

/// Half sums of positive roots, in doubled coordinates.
///
/// `rho_B = (n-1/2, ..., 1/2)`, `rho_C = rho_n = (n, ..., 1)`,
/// `rho_D = (n-1, ..., 0)`.
pub fn rho(kind: RhoKind, n: usize) -> Result<Weight> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let n = n as i64;
    let coords2 = (0..n)
        .map(|i| match kind {
            RhoKind::B => 2 * (n - i) - 1,
            RhoKind::C | RhoKind::Restricted => 2 * (n - i),
            RhoKind::D => 2 * (n - 1 - i),
        })
        .collect();
    Ok(Weight::from_doubled(coords2))
}

/// `rho_n = (n, ..., 1)` as plain integers.
pub fn rho_restricted(n: usize) -> Vec<i64> {
    (1..=n as i64).rev().collect()
}

/// The involution `I(b_1, ..., b_n) = (-b_n, ..., -b_1)`.
pub fn involution_i(v: &[i64]) -> Vec<i64> {
    v.iter().rev().map(|x| -x).collect()
}

/// `(lambda_hat, mu_hat)` with `m = max(lambda_1, mu_1)` and
/// `lambda_hat = (m - lambda_n, ..., m - lambda_1)`.
pub fn hat(lambda: &Partition, mu: &Partition) -> Result<(Partition, Partition)> {
    check_rank(lambda.len(), mu.len())?;
    let m = lambda
        .parts()
        .first()
        .copied()
        .unwrap_or(0)
        .max(mu.parts().first().copied().unwrap_or(0));
    let flip = |p: &Partition| {
        Partition::new(p.parts().iter().rev().map(|x| m - x).collect())
    };
    Ok((flip(lambda)?, flip(mu)?))
}

/// An element of the hyperoctahedral group: `image[i-1] = w(i)`, a signed
/// value in `{-n..-1, 1..n}` with `w(-i) = -w(i)`.
///
/// Composition follows `(u * v)(i) = u(v(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    image: Vec<i32>,
}

impl SignedPerm {
    pub fn new(image: Vec<i32>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidSignedPerm(image));
            }
            seen[a - 1] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (1..=n as i32).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[i32] {
        &self.image
    }

    /// `w(i)` for a signed index `i`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.image[(i.unsigned_abs() - 1) as usize];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm> {
        check_rank(self.rank(), other.rank())?;
        Ok(SignedPerm {
            image: other.image.iter().map(|&i| self.apply(i)).collect(),
        })
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut image = vec![0; self.rank()];
        for (i, &x) in self.image.iter().enumerate() {
            let target = (x.unsigned_abs() - 1) as usize;
            image[target] = if x < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        SignedPerm { image }
    }

    pub fn negatives(&self) -> usize {
        self.image.iter().filter(|&&x| x < 0).count()
    }

    pub fn is_unsigned(&self) -> bool {
        self.negatives() == 0
    }

    /// `(-1)^{l(w)}`, the determinant of the signed permutation matrix.
    pub fn sign(&self) -> i64 {
        let n = self.rank();
        let mut visited = vec![false; n];
        let mut parity = self.negatives() % 2;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !visited[j] {
                visited[j] = true;
                j = (self.image[j].unsigned_abs() - 1) as usize;
                len += 1;
            }
            parity += len - 1;
        }
        if parity.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The action on coordinate vectors: entry `i` of the result is `v_{w(i)}`
    /// when `w(i) > 0` and `-v_{|w(i)|}` otherwise.
    ///
    /// With composition `(uv)(i) = u(v(i))` this is a right action:
    /// `act(u, act(v, x)) = act(v * u, x)`.
    pub fn act(&self, v: &[i64]) -> Result<Vec<i64>> {
        check_rank(self.rank(), v.len())?;
        Ok(self.act_unchecked(v))
    }

    pub(crate) fn act_unchecked(&self, v: &[i64]) -> Vec<i64> {
        self.image
            .iter()
            .map(|&w| {
                let x = v[(w.unsigned_abs() - 1) as usize];
                if w < 0 {
                    -x
                } else {
                    x
                }
            })
            .collect()
    }

    pub fn act_weight(&self, v: &Weight) -> Result<Weight> {
        Ok(Weight::from_doubled(self.act(v.doubled())?))
    }

    /// The dot action `w(v + rho) - rho`.
    pub fn dot_act(&self, v: &Weight, rho: &Weight) -> Result<Weight> {
        self.act_weight(&v.checked_add(rho)?)?.checked_sub(rho)
    }
}

fn permutations(n: usize) -> Vec<Vec<i32>> {
    // Lexicographic order via the standard next-permutation step.
    let mut cur: Vec<i32> = (1..=n as i32).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

/// Every element of the group, each exactly once, in a fixed order.
///
/// Orders are `n!`, `2^n n!` and `2^{n-1} n!`.
pub fn enumerate(group: WeylGroup, n: usize) -> Result<Vec<SignedPerm>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let perms = permutations(n);
    if group == WeylGroup::A {
        return Ok(perms.into_iter().map(|image| SignedPerm { image }).collect());
    }
    let mut out = Vec::with_capacity(perms.len() << n);
    for p in &perms {
        for mask in 0u32..(1 << n) {
            if group == WeylGroup::D && mask.count_ones() % 2 == 1 {
                continue;
            }
            let image = p
                .iter()
                .enumerate()
                .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                .collect();
            out.push(SignedPerm { image });
        }
    }
    Ok(out)
}

/// Group elements with their signs, cached per thread.
pub(crate) fn group_with_signs(group: WeylGroup, n: usize) -> std::rc::Rc<Vec<(SignedPerm, i64)>> {
    use std::cell::RefCell;
    use std::collections::HashMap;
    use std::rc::Rc;
    thread_local! {
        static GROUPS: RefCell<HashMap<(WeylGroup, usize), Rc<Vec<(SignedPerm, i64)>>>> =
            RefCell::new(HashMap::new());
    }
    GROUPS.with(|g| {
        g.borrow_mut()
            .entry((group, n))
            .or_insert_with(|| {
                Rc::new(
                    enumerate(group, n)
                        .expect("rank checked by caller")
                        .into_iter()
                        .map(|w| {
                            let s = w.sign();
                            (w, s)
                        })
                        .collect(),
                )
            })
            .clone()
    })
}

/// Partitions of exactly `size` with at most `n` nonzero parts, padded to
/// length `n`, in reverse lexicographic order.
pub fn partitions_of(size: i64, n: usize) -> Vec<Partition> {
    fn rec(rem: i64, max: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rem == 0 {
            let mut v = cur.clone();
            v.resize(v.len() + slots, 0);
            out.push(v);
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size < 0 {
        return Vec::new();
    }
    rec(size, size, n, &mut Vec::new(), &mut out);
    out.into_iter().map(|parts| Partition { parts }).collect()
}

/// All partitions of length `n` with size at most `max_size`.
pub fn partitions_up_to(max_size: i64, n: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|s| partitions_of(s, n)).collect()
}

/// All partitions of length `n` with every part at most `max_part`.
pub fn partitions_in_box(n: usize, max_part: i64) -> Vec<Partition> {
    fn rec(n: usize, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if cur.len() == n {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (0..=max).rev() {
            cur.push(p);
            rec(n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rho_values() {
        assert_eq!(rho(RhoKind::B, 2).unwrap().doubled(), &[3, 1]);
        assert_eq!(rho(RhoKind::B, 2).unwrap().to_string(), "(3/2, 1/2)");
        assert_eq!(rho(RhoKind::C, 3).unwrap().to_integers().unwrap(), vec![3, 2, 1]);
        assert_eq!(rho(RhoKind::D, 1).unwrap().to_integers().unwrap(), vec![0]);
        assert_eq!(rho(RhoKind::Restricted, 3).unwrap().to_integers().unwrap(), vec![3, 2, 1]);
        assert_eq!(rho(RhoKind::C, 0), Err(Error::ZeroRank));
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate(WeylGroup::A, 3).unwrap().len(), 6);
        assert_eq!(enumerate(WeylGroup::BC, 2).unwrap().len(), 8);
        assert_eq!(enumerate(WeylGroup::D, 2).unwrap().len(), 4);
        assert_eq!(enumerate(WeylGroup::BC, 4).unwrap().len(), 384);
        assert_eq!(enumerate(WeylGroup::D, 4).unwrap().len(), 192);
        for n in 1..=4 {
            let all = enumerate(WeylGroup::BC, n).unwrap();
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
            for w in enumerate(WeylGroup::D, n).unwrap() {
                assert_eq!(w.negatives() % 2, 0);
                assert!(all.contains(&w));
            }
            for w in enumerate(WeylGroup::A, n).unwrap() {
                assert!(w.is_unsigned());
                assert!(all.contains(&w));
            }
        }
    }

    #[test]
    fn sign_examples() {
        assert_eq!(SignedPerm::identity(4).sign(), 1);
        // s_n = (n, n-bar)
        assert_eq!(SignedPerm::new(vec![1, 2, -3]).unwrap().sign(), -1);
        // s_n' swaps n-1 and n with both signs flipped
        assert_eq!(SignedPerm::new(vec![1, -3, -2]).unwrap().sign(), -1);
        assert_eq!(SignedPerm::new(vec![2, 1, 3]).unwrap().sign(), -1);
        assert_eq!(SignedPerm::new(vec![2, 3, 1]).unwrap().sign(), 1);
    }

    #[test]
    fn action_examples() {
        let v = [7, -2, 5];
        assert_eq!(SignedPerm::identity(3).act(&v).unwrap(), v.to_vec());
        assert_eq!(SignedPerm::new(vec![-1]).unwrap().act(&[5]).unwrap(), vec![-5]);
        assert_eq!(SignedPerm::new(vec![2, -1]).unwrap().act(&[3, 8]).unwrap(), vec![8, -3]);
        assert!(SignedPerm::identity(2).act(&[1, 2, 3]).is_err());
    }

    #[test]
    fn dot_action_examples() {
        let r = rho(RhoKind::C, 1).unwrap();
        let w = SignedPerm::new(vec![-1]).unwrap();
        let v = Weight::from_integers(&[2]);
        assert_eq!(w.dot_act(&v, &r).unwrap().to_integers().unwrap(), vec![-4]);
        let rb = rho(RhoKind::B, 3).unwrap();
        let x = Weight::from_integers(&[2, 1, 0]);
        assert_eq!(SignedPerm::identity(3).dot_act(&x, &rb).unwrap(), x);
        let w = SignedPerm::new(vec![3, -1, 2]).unwrap();
        let zero = Weight::zero(3);
        assert_eq!(
            w.dot_act(&zero, &rb).unwrap(),
            w.act_weight(&rb).unwrap().checked_sub(&rb).unwrap()
        );
    }

    #[test]
    fn conjugate_examples() {
        let p = |v: Vec<i64>| Partition::new(v).unwrap();
        assert_eq!(p(vec![2, 1, 0]).conjugate().unwrap(), p(vec![2, 1, 0]));
        assert_eq!(p(vec![3, 0, 0]).conjugate().unwrap(), p(vec![1, 1, 1]));
        assert_eq!(p(vec![0, 0, 0]).conjugate().unwrap(), p(vec![0, 0, 0]));
        assert!(p(vec![4, 0, 0]).conjugate().is_err());
        assert_eq!(p(vec![4, 2, 1]).conjugate_with_len(4).unwrap(), p(vec![3, 2, 1, 1]));
    }

    #[test]
    fn involution_and_hat() {
        assert_eq!(involution_i(&[2, 1, 0]), vec![0, -1, -2]);
        assert_eq!(involution_i(&involution_i(&[5, 3, -1])), vec![5, 3, -1]);
        assert_eq!(involution_i(&[0, 0]), vec![0, 0]);
        let p = |v: Vec<i64>| Partition::new(v).unwrap();
        assert_eq!(hat(&p(vec![1, 0]), &p(vec![1, 1])).unwrap(), (p(vec![1, 0]), p(vec![0, 0])));
        assert_eq!(hat(&p(vec![0, 0]), &p(vec![0, 0])).unwrap(), (p(vec![0, 0]), p(vec![0, 0])));
        assert_eq!(hat(&p(vec![2, 2]), &p(vec![2, 2])).unwrap(), (p(vec![0, 0]), p(vec![0, 0])));
    }

    #[test]
    fn even_rows_and_columns() {
        let p = |v: Vec<i64>| Partition::new(v).unwrap();
        assert!(p(vec![2, 2]).rows_even() && p(vec![2, 2]).cols_even());
        assert!(!p(vec![1, 1]).rows_even() && p(vec![1, 1]).cols_even());
        assert!(p(vec![0, 0]).rows_even() && p(vec![0, 0]).cols_even());
        assert!(p(vec![2, 0]).rows_even() && !p(vec![2, 0]).cols_even());
    }

    #[test]
    fn parsing() {
        assert_eq!("3,1,0".parse::<Partition>().unwrap().parts(), &[3, 1, 0]);
        assert!("1,3".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
        assert_eq!(parse_int_list("0,-1,-2").unwrap(), vec![0, -1, -2]);
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions_of(4, 2).len(), 3);
        assert_eq!(partitions_of(6, 3).len(), 7);
        assert_eq!(partitions_up_to(6, 3).len(), 23);
        assert_eq!(partitions_in_box(3, 3).len(), 20);
        assert_eq!(partitions_of(0, 2), vec![Partition::empty(2)]);
    }

    fn arb_signed(n: usize) -> impl Strategy<Value = SignedPerm> {
        (Just(n), any::<prop::sample::Index>()).prop_map(|(n, idx)| {
            let all = enumerate(WeylGroup::BC, n).unwrap();
            all[idx.index(all.len())].clone()
        })
    }

    proptest! {
        #[test]
        fn sign_is_a_homomorphism((u, v) in (1usize..=4).prop_flat_map(|n| (arb_signed(n), arb_signed(n)))) {
            let uv = u.compose(&v).unwrap();
            prop_assert_eq!(uv.sign(), u.sign() * v.sign());
            prop_assert_eq!(u.inverse().compose(&u).unwrap(), SignedPerm::identity(u.rank()));
        }

        #[test]
        fn action_is_a_right_action(
            (u, v, x) in (1usize..=4).prop_flat_map(|n| (arb_signed(n), arb_signed(n), prop::collection::vec(-9i64..9, n)))
        ) {
            let lhs = u.act(&v.act(&x).unwrap()).unwrap();
            prop_assert_eq!(lhs, v.compose(&u).unwrap().act(&x).unwrap());
        }
    }
}
