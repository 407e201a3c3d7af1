//! q-multiplicities `u`, `U` of tensor products of one-row modules, their
//! branching decompositions and the derived families `V`, `K1`, `K11`, `K2`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::kostka::{kostka_a, kostka_tilde};
use crate::lrbranch::{branch_alt_shifted, branch_stable, stable_shift};
use crate::partfn::{fq, Fq};
use crate::qpoly::{LaurentPoly, Substitution};
use crate::weyl::{
    check_decreasing, group_with_signs, hat, involution_i, partitions_of, rho_restricted, size,
    Partition, RootSystem, WeylGroup,
};

fn alternating_f(lambda: &[i64], mu: &[i64], f: fn(&[i64]) -> Result<LaurentPoly>) -> Result<LaurentPoly> {
    if lambda.len() != mu.len() {
        return Err(Error::LengthMismatch { left: lambda.len(), right: mu.len() });
    }
    if lambda.is_empty() {
        return Err(Error::ZeroRank);
    }
    check_decreasing(lambda)?;
    check_decreasing(mu)?;
    if size(lambda) > size(mu) {
        return Ok(LaurentPoly::zero());
    }
    let n = lambda.len();
    let r = rho_restricted(n);
    let top: Vec<i64> = lambda.iter().zip(&r).map(|(a, b)| a + b).collect();
    let bottom: Vec<i64> = mu.iter().zip(&r).map(|(a, b)| a + b).collect();
    let mut acc = LaurentPoly::zero();
    for (w, sign) in group_with_signs(WeylGroup::A, n).iter() {
        let beta: Vec<i64> = w.act_unchecked(&top).iter().zip(&bottom).map(|(a, b)| a - b).collect();
        let p = f(&beta)?;
        if !p.is_zero() {
            if *sign > 0 {
                acc += &p;
            } else {
                acc = &acc - &p;
            }
        }
    }
    Ok(acc)
}

/// `u_{lambda, mu}(q) = sum_{S_n} (-1)^{l(sigma)} f_q(sigma(lambda + rho_n) - mu - rho_n)`.
pub fn u(lambda: &[i64], mu: &[i64]) -> Result<LaurentPoly> {
    alternating_f(lambda, mu, fq)
}

/// `U_{lambda, mu}(q)`, the same sum with `F_q`.
#[allow(non_snake_case)]
pub fn U(lambda: &[i64], mu: &[i64]) -> Result<LaurentPoly> {
    alternating_f(lambda, mu, Fq)
}

/// `q^{(|mu| - |lambda|)/2} sum_nu coeff(nu) K^A(nu, mu)` over partitions
/// `nu` of `|mu|`; zero on a parity mismatch or `|lambda| > |mu|`.
fn branch_sum<F>(lambda: &Partition, mu: &Partition, mut coeff: F) -> Result<LaurentPoly>
where
    F: FnMut(&Partition) -> Result<BigInt>,
{
    if lambda.len() != mu.len() {
        return Err(Error::LengthMismatch { left: lambda.len(), right: mu.len() });
    }
    let diff = mu.size() - lambda.size();
    if diff < 0 || diff % 2 != 0 {
        return Ok(LaurentPoly::zero());
    }
    let mut acc = LaurentPoly::zero();
    for nu in partitions_of(mu.size(), mu.len()) {
        let c = coeff(&nu)?;
        if c != BigInt::from(0) {
            acc += &kostka_a(nu.parts(), mu.parts())?.scale(&c);
        }
    }
    Ok(acc.shift(diff / 2))
}

/// `u` via `sum_nu sum_{gamma in P^(1,1)} c^nu_{gamma, lambda} K^A(nu, mu)`.
pub fn u_via_branch(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    branch_sum(lambda, mu, |nu| Ok(branch_stable(RootSystem::D, lambda, nu)?.into()))
}

/// `U` via `sum_nu sum_{gamma in P^(2)} c^nu_{gamma, lambda} K^A(nu, mu)`.
#[allow(non_snake_case)]
pub fn U_via_branch(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    branch_sum(lambda, mu, |nu| Ok(branch_stable(RootSystem::C, lambda, nu)?.into()))
}

/// `u` via the branching multiplicities `[V^A(lambda) : V^D(nu)]` taken from
/// the alternating Weyl group formula at a stable shift.
pub fn u_via_restriction(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    branch_sum(lambda, mu, |nu| branch_alt_shifted(RootSystem::D, lambda, nu, stable_shift(lambda, nu)))
}

/// `U` via `[V^A(lambda) : V^C(nu)]` from the alternating formula.
#[allow(non_snake_case)]
pub fn U_via_restriction(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    branch_sum(lambda, mu, |nu| branch_alt_shifted(RootSystem::C, lambda, nu, stable_shift(lambda, nu)))
}

/// `V_{lambda, mu}(q) = K~^B_{I(lambda), I(mu)}(q)`.
#[allow(non_snake_case)]
pub fn V(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    kostka_tilde(RootSystem::B, &involution_i(lambda.parts()), &involution_i(mu.parts()))
}

/// `K^(1)_{lambda, mu}(q) = q^{|mu| - |lambda|} sum_nu sum_gamma c^nu_{gamma, lambda} K^A(nu, mu)(q^2)`.
#[allow(non_snake_case)]
pub fn K1(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    if lambda.len() != mu.len() {
        return Err(Error::LengthMismatch { left: lambda.len(), right: mu.len() });
    }
    let diff = mu.size() - lambda.size();
    if diff < 0 {
        return Ok(LaurentPoly::zero());
    }
    let mut acc = LaurentPoly::zero();
    for nu in partitions_of(mu.size(), mu.len()) {
        let c = branch_stable(RootSystem::B, lambda, &nu)?;
        if c != 0 {
            acc += &kostka_a(nu.parts(), mu.parts())?.scale(&c.into());
        }
    }
    Ok(acc.substitute(Substitution::Square).shift(diff))
}

/// `K^(1,1)_{lambda, mu}(q) = u_{lambda, mu}(q^2)`.
#[allow(non_snake_case)]
pub fn K11(lambda: &[i64], mu: &[i64]) -> Result<LaurentPoly> {
    Ok(u(lambda, mu)?.substitute(Substitution::Square))
}

/// `K^(2)_{lambda, mu}(q) = U_{lambda, mu}(q^2)`.
#[allow(non_snake_case)]
pub fn K2(lambda: &[i64], mu: &[i64]) -> Result<LaurentPoly> {
    Ok(U(lambda, mu)?.substitute(Substitution::Square))
}

/// Both sides of `u = K~^D(hat lambda, hat mu)` and `U = K~^C(hat lambda, hat mu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualHat {
    pub u: LaurentPoly,
    pub ktilde_d: LaurentPoly,
    pub big_u: LaurentPoly,
    pub ktilde_c: LaurentPoly,
}

impl DualHat {
    pub fn holds(&self) -> bool {
        self.u == self.ktilde_d && self.big_u == self.ktilde_c
    }
}

pub fn dual_hat(lambda: &Partition, mu: &Partition) -> Result<DualHat> {
    let (lh, mh) = hat(lambda, mu)?;
    Ok(DualHat {
        u: u(lambda.parts(), mu.parts())?,
        ktilde_d: kostka_tilde(RootSystem::D, lh.parts(), mh.parts())?,
        big_u: U(lambda.parts(), mu.parts())?,
        ktilde_c: kostka_tilde(RootSystem::C, lh.parts(), mh.parts())?,
    })
}

pub fn check_dual_hat(lambda: &Partition, mu: &Partition) -> Result<bool> {
    Ok(dual_hat(lambda, mu)?.holds())
}

/// The four polynomials compared by the conjugation duality at `mu = (1^n)`:
/// `U_{lambda', 1^n}` against `q^e u_{lambda, 1^n}(q^-1)` and
/// `u_{lambda', 1^n}` against `q^e U_{lambda, 1^n}(q^-1)`,
/// with `e = n(n-1)/2 + n - |lambda|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjDuality {
    pub big_u_conj: LaurentPoly,
    pub u_reflected: LaurentPoly,
    pub u_conj: LaurentPoly,
    pub big_u_reflected: LaurentPoly,
}

impl ConjDuality {
    pub fn holds(&self) -> bool {
        self.big_u_conj == self.u_reflected && self.u_conj == self.big_u_reflected
    }
}

pub fn conj_duality(lambda: &Partition, n: usize) -> Result<ConjDuality> {
    let s = lambda.size();
    if (n as i64) < s {
        return Err(Error::Hypothesis(format!("conjugation duality needs n >= |lambda|, got n={n}, |lambda|={s}")));
    }
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let lam = lambda.with_len(n)?;
    let conj = lam.conjugate()?;
    let ones = vec![1; n];
    let e = (n * (n - 1) / 2) as i64 + n as i64 - s;
    let reflect = |p: LaurentPoly| p.substitute(Substitution::Invert).shift(e);
    Ok(ConjDuality {
        big_u_conj: U(conj.parts(), &ones)?,
        u_reflected: reflect(u(lam.parts(), &ones)?),
        u_conj: u(conj.parts(), &ones)?,
        big_u_reflected: reflect(U(lam.parts(), &ones)?),
    })
}

pub fn check_conj_duality(lambda: &Partition, n: usize) -> Result<bool> {
    Ok(conj_duality(lambda, n)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{partitions_in_box, partitions_up_to};

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn small_values() {
        assert_eq!(u(&[2, 1], &[2, 1]).unwrap(), LaurentPoly::one());
        assert_eq!(U(&[2, 1], &[2, 1]).unwrap(), LaurentPoly::one());
        // Equal sizes leave only the type A term.
        assert_eq!(u(&[2, 0], &[1, 1]).unwrap(), kostka_a(&[2, 0], &[1, 1]).unwrap());
        assert_eq!(u(&[0, 0], &[1, 1]).unwrap(), poly(&[(1, 1)]));
        // F_q admits 1/x_1^2 and 1/x_2^2 as well, so U picks up an extra
        // factor of q relative to u here.
        assert_eq!(U(&[0, 0], &[1, 1]).unwrap(), poly(&[(2, 1)]));
        assert_eq!(K2(&[0, 0], &[1, 1]).unwrap(), poly(&[(4, 1)]));
        assert_eq!(K11(&[0, 0], &[1, 1]).unwrap(), poly(&[(2, 1)]));
        assert!(u(&[3, 0], &[1, 1]).unwrap().is_zero());
    }

    #[test]
    fn worked_example() {
        let l = p(&[1, 0, 0]);
        let m = p(&[1, 1, 1]);
        let k1 = K1(&l, &m).unwrap();
        assert_eq!(k1, poly(&[(8, 1), (6, 2), (4, 2), (2, 1)]));
        let v2 = V(&l, &m).unwrap().substitute(Substitution::Square);
        assert_eq!(v2, poly(&[(10, 1), (8, 1), (6, 2), (4, 1), (2, 1)]));
        assert_ne!(k1, v2);
        assert_eq!(k1.eval_one(), V(&l, &m).unwrap().eval_one());
    }

    #[test]
    fn padding_invariance() {
        for lam in partitions_up_to(3, 2) {
            for mu in partitions_up_to(4, 2) {
                let pad = |x: &Partition| x.with_len(3).unwrap();
                assert_eq!(u(lam.parts(), mu.parts()).unwrap(), u(pad(&lam).parts(), pad(&mu).parts()).unwrap());
            }
        }
    }

    #[test]
    fn paths_agree_on_small_sweep() {
        for n in 1..=2usize {
            let parts = partitions_up_to(4, n);
            for lam in &parts {
                for mu in &parts {
                    let a = u(lam.parts(), mu.parts()).unwrap();
                    let b = U(lam.parts(), mu.parts()).unwrap();
                    assert_eq!(a, u_via_branch(lam, mu).unwrap(), "{lam} {mu}");
                    assert_eq!(b, U_via_branch(lam, mu).unwrap(), "{lam} {mu}");
                    assert_eq!(a, u_via_restriction(lam, mu).unwrap());
                    assert_eq!(b, U_via_restriction(lam, mu).unwrap());
                    assert!(K11(lam.parts(), mu.parts()).unwrap().all_exponents_even());
                }
            }
        }
    }

    #[test]
    fn dual_hat_small() {
        for n in 1..=2usize {
            let parts = partitions_in_box(n, 2);
            for lam in &parts {
                for mu in &parts {
                    assert!(check_dual_hat(lam, mu).unwrap(), "{lam} {mu}");
                }
            }
        }
        let d = dual_hat(&p(&[0, 0]), &p(&[1, 1])).unwrap();
        assert_eq!(d.ktilde_c, poly(&[(2, 1)]));
    }

    #[test]
    fn conjugation_duality_small() {
        for n in 1..=4usize {
            for s in 0..=n as i64 {
                for lam in partitions_of(s, n) {
                    assert!(check_conj_duality(&lam, n).unwrap(), "{lam} n={n}");
                }
            }
        }
        assert!(check_conj_duality(&p(&[2, 1]), 2).is_err());
    }
}
