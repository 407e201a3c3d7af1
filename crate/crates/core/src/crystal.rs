//! Letter crystals of types `A_{2n-1}` and `C_n` on the alphabet
//! `1 < ... < n < n-bar < ... < 1-bar`, their tensor powers, the energy
//! statistic and one-dimension sums at `mu = (1^n)`, and oscillating tableaux.
//!
//! Letters are encoded as `k` and `-k` for `k` and `k-bar`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qpoly::LaurentPoly;
use crate::weyl::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrystalType {
    A,
    C,
}

impl std::str::FromStr for CrystalType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(CrystalType::A),
            "C" | "c" => Ok(CrystalType::C),
            other => Err(Error::Parse(format!("unknown crystal type {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    E,
    F,
}

/// Position of a letter in the total order, `0..2n`.
pub fn order_index(letter: i32, n: usize) -> usize {
    if letter > 0 {
        letter as usize - 1
    } else {
        2 * n - letter.unsigned_abs() as usize
    }
}

fn from_index(idx: usize, n: usize) -> i32 {
    if idx < n {
        idx as i32 + 1
    } else {
        -((2 * n - idx) as i32)
    }
}

pub fn check_letter(letter: i32, n: usize) -> Result<()> {
    if letter == 0 || letter.unsigned_abs() as usize > n {
        return Err(Error::InvalidLetter { letter, rank: n });
    }
    Ok(())
}

/// A word `x_1 (x) ... (x) x_L` in the tensor power of the letter crystal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrystalWord {
    n: usize,
    letters: Vec<i32>,
}

impl CrystalWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        for &x in &letters {
            check_letter(x, n)?;
        }
        Ok(Self { n, letters })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `(#i - #i-bar)_{i = 1..n}`.
    pub fn weight_c(&self) -> Vec<i64> {
        let mut w = vec![0; self.n];
        for &x in &self.letters {
            let k = x.unsigned_abs() as usize - 1;
            w[k] += if x > 0 { 1 } else { -1 };
        }
        w
    }

    /// Letter counts in the order `1, ..., n, n-bar, ..., 1-bar`.
    pub fn weight_a(&self) -> Vec<i64> {
        let mut w = vec![0; 2 * self.n];
        for &x in &self.letters {
            w[order_index(x, self.n)] += 1;
        }
        w
    }

    /// Parses `"1 2 -1"` or `"1,2,-1"`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, letters)
    }
}

impl fmt::Display for CrystalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&x| if x > 0 { x.to_string() } else { format!("{}b", -x) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Number of operator indices: `2n - 1` for type A, `n` for type C.
pub fn index_count(ty: CrystalType, n: usize) -> usize {
    match ty {
        CrystalType::A => 2 * n - 1,
        CrystalType::C => n,
    }
}

fn check_index(ty: CrystalType, n: usize, i: usize) -> Result<()> {
    if i == 0 || i > index_count(ty, n) {
        return Err(Error::InvalidIndex { index: i, rank: n });
    }
    Ok(())
}

/// Signature of one letter at index `i`: `+1` if `f_i` acts on it, `-1` if
/// `e_i` does, `0` otherwise.
fn letter_sign(ty: CrystalType, n: usize, i: usize, x: i32) -> i8 {
    match ty {
        CrystalType::A => {
            let a = order_index(x, n) + 1;
            if a == i {
                1
            } else if a == i + 1 {
                -1
            } else {
                0
            }
        }
        CrystalType::C => {
            let i = i as i32;
            if i < n as i32 {
                if x == i || x == -(i + 1) {
                    1
                } else if x == i + 1 || x == -i {
                    -1
                } else {
                    0
                }
            } else if x == i {
                1
            } else if x == -i {
                -1
            } else {
                0
            }
        }
    }
}

fn letter_f(ty: CrystalType, n: usize, i: usize, x: i32) -> i32 {
    match ty {
        CrystalType::A => from_index(order_index(x, n) + 1, n),
        // i -> i+1 and (i+1)-bar -> i-bar below n; n -> n-bar at n.
        CrystalType::C if i < n => x + 1,
        CrystalType::C => -x,
    }
}

fn letter_e(ty: CrystalType, n: usize, i: usize, x: i32) -> i32 {
    match ty {
        CrystalType::A => from_index(order_index(x, n) - 1, n),
        CrystalType::C if i < n => x - 1,
        CrystalType::C => -x,
    }
}

/// Uncancelled positions after bracketing: a `-` cancels the nearest
/// unmatched `+` to its left. Returns (uncancelled minus, uncancelled plus)
/// positions, both in increasing order.
fn reduced_signature(ty: CrystalType, n: usize, i: usize, letters: &[i32]) -> (Vec<usize>, Vec<usize>) {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (pos, &x) in letters.iter().enumerate() {
        match letter_sign(ty, n, i, x) {
            1 => plus.push(pos),
            -1 if plus.pop().is_none() => minus.push(pos),
            _ => {}
        }
    }
    (minus, plus)
}

/// `e_i` or `f_i` via the signature rule; `None` when the operator kills `b`.
pub fn crystal_op(ty: CrystalType, op: Op, i: usize, b: &CrystalWord) -> Result<Option<CrystalWord>> {
    let n = b.n;
    check_index(ty, n, i)?;
    let (minus, plus) = reduced_signature(ty, n, i, &b.letters);
    let mut letters = b.letters.clone();
    match op {
        Op::F => {
            let Some(&pos) = plus.first() else {
                return Ok(None);
            };
            letters[pos] = letter_f(ty, n, i, letters[pos]);
        }
        Op::E => {
            let Some(&pos) = minus.last() else {
                return Ok(None);
            };
            letters[pos] = letter_e(ty, n, i, letters[pos]);
        }
    }
    Ok(Some(CrystalWord { n, letters }))
}

/// Killed by every `e_i`.
pub fn is_highest_weight(ty: CrystalType, b: &CrystalWord) -> bool {
    (1..=index_count(ty, b.n)).all(|i| reduced_signature(ty, b.n, i, &b.letters).0.is_empty())
}

/// All highest weight words of the given length, optionally with a given
/// weight (`wt^C` for type C, `wt^A` for type A). Every prefix of a highest
/// weight word is highest weight, so the search extends prefixes only.
pub fn highest_weight_words(
    ty: CrystalType,
    n: usize,
    len: usize,
    weight: Option<&[i64]>,
) -> Result<Vec<CrystalWord>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let indices = index_count(ty, n);
    let alphabet: Vec<i32> = (0..2 * n).map(|k| from_index(k, n)).collect();
    let mut out = Vec::new();
    let mut open = vec![0usize; indices + 1];
    let mut word = Vec::with_capacity(len);

    #[allow(clippy::too_many_arguments)]
    fn rec(
        ty: CrystalType,
        n: usize,
        len: usize,
        alphabet: &[i32],
        open: &mut Vec<usize>,
        word: &mut Vec<i32>,
        weight: Option<&[i64]>,
        out: &mut Vec<CrystalWord>,
    ) {
        if word.len() == len {
            let b = CrystalWord { n, letters: word.clone() };
            let ok = match (weight, ty) {
                (None, _) => true,
                (Some(w), CrystalType::C) => b.weight_c() == w,
                (Some(w), CrystalType::A) => b.weight_a() == w,
            };
            if ok {
                out.push(b);
            }
            return;
        }
        'letters: for &x in alphabet {
            let mut touched = Vec::new();
            for i in 1..open.len() {
                match letter_sign(ty, n, i, x) {
                    1 => touched.push((i, 1i64)),
                    -1 => {
                        if open[i] == 0 {
                            continue 'letters;
                        }
                        touched.push((i, -1));
                    }
                    _ => {}
                }
            }
            for &(i, d) in &touched {
                open[i] = (open[i] as i64 + d) as usize;
            }
            word.push(x);
            rec(ty, n, len, alphabet, open, word, weight, out);
            word.pop();
            for &(i, d) in &touched {
                open[i] = (open[i] as i64 - d) as usize;
            }
        }
    }

    rec(ty, n, len, &alphabet, &mut open, &mut word, weight, &mut out);
    Ok(out)
}

/// Highest weight words by filtering every word; an oracle for the search.
pub fn highest_weight_words_brute(ty: CrystalType, n: usize, len: usize) -> Result<Vec<CrystalWord>> {
    Ok(all_words(n, len)?
        .into_iter()
        .filter(|b| is_highest_weight(ty, b))
        .collect())
}

/// Every word of the given length, lexicographic in the letter order.
pub fn all_words(n: usize, len: usize) -> Result<Vec<CrystalWord>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let total = (2 * n).pow(len as u32);
    Ok((0..total)
        .map(|mut code| {
            let mut letters = vec![0; len];
            for slot in letters.iter_mut().rev() {
                *slot = from_index(code % (2 * n), n);
                code /= 2 * n;
            }
            CrystalWord { n, letters }
        })
        .collect())
}

/// `H(x (x) y) = 1` iff `x >= y` in the letter order.
pub fn local_energy(x: i32, y: i32, n: usize) -> i64 {
    (order_index(x, n) >= order_index(y, n)) as i64
}

/// `xi_i = 1` iff `x_i >= x_{i+1}`, for `i = 1..L-1`.
pub fn xi_class(b: &CrystalWord) -> Vec<u8> {
    b.letters
        .windows(2)
        .map(|w| local_energy(w[0], w[1], b.n) as u8)
        .collect()
}

/// `H(b) = sum_{i=1}^{L-1} (L - i) H(x_i (x) x_{i+1})`.
pub fn energy_h(b: &CrystalWord) -> i64 {
    let len = b.letters.len() as i64;
    xi_class(b)
        .iter()
        .enumerate()
        .map(|(i, &x)| (len - 1 - i as i64) * x as i64)
        .sum()
}

/// `X_{lambda, (1^n)}(q)`: `q^H` summed over type C highest weight words of
/// length `n` and weight `lambda`.
pub fn one_dim_sum_x(lambda: &Partition) -> Result<LaurentPoly> {
    let n = lambda.len();
    let mut acc = LaurentPoly::zero();
    for b in highest_weight_words(CrystalType::C, n, n, Some(lambda.parts()))? {
        acc.add_term(energy_h(&b), BigInt::from(1));
    }
    Ok(acc)
}

/// A sequence of Young diagrams, consecutive ones differing by one box.
/// Each diagram is stored as row lengths of declared length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OscillatingTableau {
    diagrams: Vec<Vec<i64>>,
}

impl OscillatingTableau {
    pub fn diagrams(&self) -> &[Vec<i64>] {
        &self.diagrams
    }

    /// Each diagram replaced by its conjugate.
    pub fn conjugate(&self) -> Result<OscillatingTableau> {
        let diagrams = self
            .diagrams
            .iter()
            .map(|d| Ok(Partition::new(d.clone())?.conjugate()?.parts().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Ok(OscillatingTableau { diagrams })
    }

    /// Reads a word back: a box added to row `k` gives `k`, a box removed
    /// from row `k` gives `k-bar`.
    pub fn to_word(&self) -> Result<CrystalWord> {
        let n = self.diagrams.first().map(|d| d.len()).unwrap_or(0);
        let mut prev = vec![0; n];
        let mut letters = Vec::with_capacity(self.diagrams.len());
        for (step, d) in self.diagrams.iter().enumerate() {
            let diffs: Vec<(usize, i64)> = d
                .iter()
                .zip(&prev)
                .enumerate()
                .filter(|(_, (a, b))| a != b)
                .map(|(k, (a, b))| (k, a - b))
                .collect();
            match diffs.as_slice() {
                [(k, 1)] => letters.push(*k as i32 + 1),
                [(k, -1)] => letters.push(-(*k as i32 + 1)),
                _ => return Err(Error::InvalidStep(step + 1)),
            }
            prev = d.clone();
        }
        CrystalWord::new(n, letters)
    }
}

impl fmt::Display for OscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .diagrams
            .iter()
            .map(|d| {
                let nz: Vec<String> = d.iter().filter(|&&x| x > 0).map(|x| x.to_string()).collect();
                format!("({})", nz.join(","))
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// `Q(b) = (Q_1, ..., Q_L)` with `Q_1` a single box and `Q_{i+1}` obtained
/// from `Q_i` by adding a box in row `k` for `x_{i+1} = k` or deleting one
/// for `x_{i+1} = k-bar`.
pub fn oscillating_tableau(b: &CrystalWord) -> Result<OscillatingTableau> {
    let n = b.n;
    let mut cur = vec![0i64; n];
    let mut diagrams = Vec::with_capacity(b.len());
    for (step, &x) in b.letters.iter().enumerate() {
        let k = x.unsigned_abs() as usize - 1;
        if step == 0 && x != 1 {
            return Err(Error::InvalidStep(1));
        }
        if x > 0 {
            if k > 0 && cur[k - 1] <= cur[k] {
                return Err(Error::InvalidStep(step + 1));
            }
            cur[k] += 1;
        } else {
            if cur[k] == 0 || (k + 1 < n && cur[k + 1] >= cur[k]) {
                return Err(Error::InvalidStep(step + 1));
            }
            cur[k] -= 1;
        }
        diagrams.push(cur.clone());
    }
    Ok(OscillatingTableau { diagrams })
}

/// The highest weight word whose oscillating tableau is the conjugate of
/// that of `b`.
pub fn conjugate_word(b: &CrystalWord) -> Result<CrystalWord> {
    let q = oscillating_tableau(b)?;
    let qc = q.conjugate()?;
    qc.to_word()
}

/// Schensted recording tableau of the letters, compared in the letter order.
pub fn rsk_q(b: &CrystalWord) -> Vec<Vec<usize>> {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in b.letters.iter().enumerate() {
        let mut v = order_index(x, b.n);
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![v]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > v) {
                Some(pos) => {
                    v = std::mem::replace(&mut p[row][pos], v);
                    row += 1;
                }
                None => {
                    p[row].push(v);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    q
}

/// Components of the crystal graph of words of length `len` generated from
/// the highest weight words (optionally of a given weight), as DOT.
pub fn crystal_dot(ty: CrystalType, n: usize, len: usize, weight: Option<&[i64]>) -> Result<String> {
    let roots = highest_weight_words(ty, n, len, weight)?;
    let mut seen: BTreeSet<CrystalWord> = roots.iter().cloned().collect();
    let mut queue: VecDeque<CrystalWord> = roots.into_iter().collect();
    let mut edges = Vec::new();
    while let Some(b) = queue.pop_front() {
        for i in 1..=index_count(ty, n) {
            if let Some(c) = crystal_op(ty, Op::F, i, &b)? {
                edges.push((b.clone(), i, c.clone()));
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }
    edges.sort();
    let mut out = String::new();
    let _ = writeln!(out, "digraph crystal {{");
    for v in &seen {
        let _ = writeln!(out, "  \"{v}\";");
    }
    for (a, i, b) in &edges {
        let _ = writeln!(out, "  \"{a}\" -> \"{b}\" [label=\"{i}\"];");
    }
    out.push_str("}\n");
    Ok(out)
}

/// `sum_{i in Z_b} (n - i)(1 - 2 H(x_i (x) x_{i+1}))` where `Z_b` holds the
/// positions whose two letters differ in being barred.
pub fn mixed_energy_sum(b: &CrystalWord) -> i64 {
    let len = b.letters.len() as i64;
    b.letters
        .windows(2)
        .enumerate()
        .filter(|(_, w)| (w[0] > 0) != (w[1] > 0))
        .map(|(i, w)| (len - 1 - i as i64) * (1 - 2 * local_energy(w[0], w[1], b.n)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::partitions_of;

    fn w(n: usize, s: &[i32]) -> CrystalWord {
        CrystalWord::new(n, s.to_vec()).unwrap()
    }

    #[test]
    fn single_letter_arrows() {
        let f = |ty, n, i, s: &[i32]| crystal_op(ty, Op::F, i, &w(n, s)).unwrap();
        assert_eq!(f(CrystalType::C, 2, 1, &[1]), Some(w(2, &[2])));
        assert_eq!(f(CrystalType::C, 2, 2, &[2]), Some(w(2, &[-2])));
        assert_eq!(f(CrystalType::C, 2, 1, &[-2]), Some(w(2, &[-1])));
        assert_eq!(f(CrystalType::C, 1, 1, &[1]), Some(w(1, &[-1])));
        assert_eq!(f(CrystalType::C, 2, 1, &[-1]), None);
        assert_eq!(f(CrystalType::A, 2, 2, &[2]), Some(w(2, &[-2])));
        assert_eq!(f(CrystalType::A, 2, 3, &[-2]), Some(w(2, &[-1])));
        assert!(crystal_op(CrystalType::C, Op::F, 3, &w(2, &[1])).is_err());
        assert!(crystal_op(CrystalType::A, Op::F, 4, &w(2, &[1])).is_err());
    }

    #[test]
    fn e_and_f_are_partial_inverses() {
        for ty in [CrystalType::A, CrystalType::C] {
            for n in 1..=3 {
                for b in all_words(n, 3).unwrap() {
                    for i in 1..=index_count(ty, n) {
                        if let Some(c) = crystal_op(ty, Op::F, i, &b).unwrap() {
                            assert_eq!(crystal_op(ty, Op::E, i, &c).unwrap(), Some(b.clone()));
                        }
                        if let Some(c) = crystal_op(ty, Op::E, i, &b).unwrap() {
                            assert_eq!(crystal_op(ty, Op::F, i, &c).unwrap(), Some(b.clone()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn highest_weight_search_matches_filter() {
        for ty in [CrystalType::A, CrystalType::C] {
            for n in 1..=4 {
                let mut a = highest_weight_words(ty, n, n, None).unwrap();
                let mut b = highest_weight_words_brute(ty, n, n).unwrap();
                a.sort();
                b.sort();
                assert_eq!(a, b, "{ty:?} n={n}");
            }
        }
        assert_eq!(highest_weight_words(CrystalType::C, 1, 1, None).unwrap(), vec![w(1, &[1])]);
        assert_eq!(
            highest_weight_words(CrystalType::C, 2, 2, Some(&[0, 0])).unwrap(),
            vec![w(2, &[1, -1])]
        );
    }

    #[test]
    fn energy_examples() {
        assert_eq!(energy_h(&w(4, &[1, 2, 3, 4])), 0);
        assert_eq!(energy_h(&w(4, &[1, 1, 1, 1])), 6);
        assert_eq!(energy_h(&w(2, &[1, -1])), 0);
        assert_eq!(xi_class(&w(3, &[1, 1, 1])), vec![1, 1]);
        assert_eq!(xi_class(&w(3, &[1, 2, 3])), vec![0, 0]);
    }

    #[test]
    fn one_dim_sum_examples() {
        let p = |v: &[i64]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(one_dim_sum_x(&p(&[3, 0, 0])).unwrap(), LaurentPoly::q_pow(3));
        assert_eq!(one_dim_sum_x(&p(&[0, 0])).unwrap(), LaurentPoly::one());
        for n in 1..=5usize {
            for lam in partitions_of(n as i64, n) {
                let k = crate::kostka::kostka_a(lam.parts(), &vec![1; n]).unwrap();
                assert_eq!(one_dim_sum_x(&lam).unwrap(), k, "{lam}");
            }
        }
    }

    #[test]
    fn oscillating_tableau_examples() {
        let q = oscillating_tableau(&w(3, &[1, 2, 3])).unwrap();
        assert_eq!(q.diagrams().last().unwrap(), &vec![1, 1, 1]);
        let q = oscillating_tableau(&w(3, &[1, 1, 1])).unwrap();
        assert_eq!(q.diagrams(), &[vec![1, 0, 0], vec![2, 0, 0], vec![3, 0, 0]]);
        let q = oscillating_tableau(&w(2, &[1, -1])).unwrap();
        assert_eq!(q.diagrams(), &[vec![1, 0], vec![0, 0]]);
        assert_eq!(conjugate_word(&w(3, &[1, 1, 1])).unwrap(), w(3, &[1, 2, 3]));
        assert!(matches!(oscillating_tableau(&w(2, &[1, -2])), Err(Error::InvalidStep(2))));
    }

    #[test]
    fn rsk_shapes() {
        assert_eq!(rsk_q(&w(3, &[1, 2, 3])), vec![vec![1, 2, 3]]);
        assert_eq!(rsk_q(&w(3, &[3, 2, 1])), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn rsk_census() {
        // Words of length 3 over 2n letters, grouped by recording tableau:
        // each class has the size of the SSYT count of its shape.
        let n = 2;
        let mut classes: std::collections::BTreeMap<Vec<Vec<usize>>, usize> = Default::default();
        for b in all_words(n, 3).unwrap() {
            *classes.entry(rsk_q(&b)).or_default() += 1;
        }
        let ssyt = |shape: &[usize]| -> usize {
            let mut parts: Vec<i64> = shape.iter().map(|&x| x as i64).collect();
            parts.resize(2 * n, 0);
            let mut total = 0;
            for comp in crate::partfn::compositions(3, 2 * n) {
                total += crate::kostka::semistandard_tableaux(&parts, &comp).len();
            }
            total
        };
        for (q, count) in classes {
            let shape: Vec<usize> = q.iter().map(|r| r.len()).collect();
            assert_eq!(count, ssyt(&shape));
        }
        assert_eq!(highest_weight_words(CrystalType::A, 2, 3, None).unwrap().len(), 4);
    }

    #[test]
    fn xi_is_invariant_under_both_crystal_structures() {
        for n in 1..=3 {
            for b in all_words(n, n).unwrap() {
                let xi = xi_class(&b);
                for ty in [CrystalType::A, CrystalType::C] {
                    for i in 1..=index_count(ty, n) {
                        for op in [Op::E, Op::F] {
                            if let Some(c) = crystal_op(ty, op, i, &b).unwrap() {
                                assert_eq!(xi_class(&c), xi);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_identities_small() {
        for n in 1..=4 {
            for b in highest_weight_words(CrystalType::C, n, n, None).unwrap() {
                let c = conjugate_word(&b).unwrap();
                assert!(is_highest_weight(CrystalType::C, &c));
                assert_eq!(conjugate_word(&c).unwrap(), b);
                let lam = Partition::new(b.weight_c()).unwrap();
                assert_eq!(c.weight_c(), lam.conjugate().unwrap().parts());
                for i in 0..n {
                    assert_eq!(b.letters[i] > 0, c.letters[i] > 0);
                }
                let s = lam.size();
                assert_eq!(2 * mixed_energy_sum(&b), n as i64 - s, "{b}");
            }
        }
    }
}
