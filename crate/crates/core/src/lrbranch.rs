//! Littlewood-Richardson coefficients and the multiplicities relating
//! `GL_n`-modules to modules of types B, C and D.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partfn::{coeff_bcd, BcdKind};
use crate::weyl::{
    check_decreasing, group_with_signs, partitions_of, rho, Partition, RhoKind, RootSystem,
};

fn padded(p: &[i64], len: usize) -> Vec<i64> {
    let mut v = p.to_vec();
    v.resize(len, 0);
    v
}

/// `c^nu_{gamma, lambda}`: LR tableaux of shape `nu / lambda` and weight
/// `gamma`. Declared lengths may differ; shorter inputs are zero-padded.
pub fn lr_coeff(nu: &Partition, lambda: &Partition, gamma: &Partition) -> u64 {
    let len = nu.len().max(lambda.len()).max(gamma.len());
    let nu = padded(nu.parts(), len);
    let lambda = padded(lambda.parts(), len);
    let gamma = padded(gamma.parts(), len);
    if nu.iter().zip(&lambda).any(|(a, b)| a < b)
        || nu.iter().sum::<i64>() != lambda.iter().sum::<i64>() + gamma.iter().sum::<i64>()
    {
        return 0;
    }
    // Cells in reverse reading order: rows top to bottom, right to left.
    let cells: Vec<(usize, usize)> = (0..len)
        .flat_map(|r| {
            let (lo, hi) = (lambda[r] as usize, nu[r] as usize);
            (lo..hi).rev().map(move |c| (r, c))
        })
        .collect();
    let mut filling: Vec<Vec<usize>> = nu.iter().map(|&w| vec![0; w as usize]).collect();
    let mut counts = vec![0i64; len + 1];
    let gamma_len = gamma.iter().take_while(|&&g| g > 0).count();

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        lambda: &[i64],
        nu: &[i64],
        gamma: &[i64],
        gamma_len: usize,
        filling: &mut Vec<Vec<usize>>,
        counts: &mut Vec<i64>,
    ) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else {
            return 1;
        };
        let mut total = 0;
        // Row-weak: at most the entry to the right.
        let right = if c + 1 < nu[r] as usize { filling[r][c + 1] } else { gamma_len };
        // Column-strict: above entry in the skew shape.
        let above = if r > 0 && c >= lambda[r - 1] as usize { filling[r - 1][c] } else { 0 };
        for x in (above + 1)..=right.min(gamma_len) {
            if counts[x] >= gamma[x - 1] || (x > 1 && counts[x] >= counts[x - 1]) {
                continue;
            }
            counts[x] += 1;
            filling[r][c] = x;
            total += rec(idx + 1, cells, lambda, nu, gamma, gamma_len, filling, counts);
            counts[x] -= 1;
        }
        filling[r][c] = 0;
        total
    }

    rec(0, &cells, &lambda, &nu, &gamma, gamma_len, &mut filling, &mut counts)
}

/// The family of partitions `gamma` summed over in the stable rules.
pub fn gamma_family(system: RootSystem, gamma: &Partition) -> bool {
    match system {
        RootSystem::B | RootSystem::A => true,
        RootSystem::C => gamma.rows_even(),
        RootSystem::D => gamma.cols_even(),
    }
}

/// `[V^A(lambda) : V^phi(nu)] = sum_gamma c^nu_{gamma, lambda}` with `gamma`
/// over all partitions (B), even rows (C) or even columns (D).
pub fn branch_stable(system: RootSystem, lambda: &Partition, nu: &Partition) -> Result<u64> {
    if lambda.len() != nu.len() {
        return Err(Error::LengthMismatch { left: lambda.len(), right: nu.len() });
    }
    let diff = nu.size() - lambda.size();
    if diff < 0 {
        return Ok(0);
    }
    Ok(partitions_of(diff, nu.len())
        .iter()
        .filter(|g| g.parts()[0] <= nu.parts()[0] && gamma_family(system, g))
        .map(|g| lr_coeff(nu, lambda, g))
        .sum())
}

fn lattice_of(system: RootSystem) -> Result<BcdKind> {
    match system {
        RootSystem::B => Ok(BcdKind::B),
        RootSystem::C => Ok(BcdKind::C),
        RootSystem::D => Ok(BcdKind::D),
        RootSystem::A => Err(Error::Hypothesis("type A has no lattice coefficients".into())),
    }
}

/// `[V^A(gamma) : V^phi(lambda)] = sum_{w in W} (-1)^{l(w)} b/c/d(w o lambda - gamma)`
/// with the dot action taken with the type's own `rho`.
pub fn branch_alt(system: RootSystem, gamma: &[i64], lambda: &Partition) -> Result<BigInt> {
    let n = lambda.len();
    if gamma.len() != n {
        return Err(Error::LengthMismatch { left: gamma.len(), right: n });
    }
    check_decreasing(gamma)?;
    let kind = lattice_of(system)?;
    let rho2 = rho(RhoKind::of(system), n)?;
    let rho2 = rho2.doubled();
    let shifted: Vec<i64> = lambda.parts().iter().zip(rho2).map(|(l, r)| 2 * l + r).collect();
    let mut total = BigInt::zero();
    for (w, sign) in group_with_signs(system.weyl_group(), n).iter() {
        let image = w.act_unchecked(&shifted);
        let mut delta = Vec::with_capacity(n);
        for i in 0..n {
            let d2 = image[i] - rho2[i] - 2 * gamma[i];
            if d2 % 2 != 0 {
                return Err(Error::Parity(image));
            }
            delta.push(d2 / 2);
        }
        if delta.iter().any(|&d| d < 0) {
            continue;
        }
        let c = coeff_bcd(kind, &delta)?;
        if *sign > 0 {
            total += c;
        } else {
            total -= c;
        }
    }
    Ok(total)
}

/// `branch_alt` evaluated at `lambda + k kappa`, `nu + k kappa`, which for
/// large `k` recovers `branch_stable(system, lambda, nu)`.
pub fn branch_alt_shifted(system: RootSystem, lambda: &Partition, nu: &Partition, k: i64) -> Result<BigInt> {
    let gamma: Vec<i64> = lambda.parts().iter().map(|x| x + k).collect();
    let shifted = Partition::new(nu.parts().iter().map(|x| x + k).collect())?;
    branch_alt(system, &gamma, &shifted)
}

/// A shift large enough for [`branch_alt_shifted`] to stabilise.
pub fn stable_shift(lambda: &Partition, nu: &Partition) -> i64 {
    lambda.size() + nu.size() + lambda.len() as i64
}

/// `[V^D(nu) : V^B(lambda)] = sum_{w in W_B} (-1)^{l(w)} 1_N(w o lambda - nu)`.
pub fn restrict_b_to_d(nu: &Partition, lambda: &Partition) -> Result<i64> {
    let n = lambda.len();
    if nu.len() != n {
        return Err(Error::LengthMismatch { left: nu.len(), right: n });
    }
    let rho2 = rho(RhoKind::B, n)?;
    let rho2 = rho2.doubled();
    let shifted: Vec<i64> = lambda.parts().iter().zip(rho2).map(|(l, r)| 2 * l + r).collect();
    let mut total = 0;
    for (w, sign) in group_with_signs(RootSystem::B.weyl_group(), n).iter() {
        let image = w.act_unchecked(&shifted);
        let mut ok = true;
        for i in 0..n {
            let d2 = image[i] - rho2[i] - 2 * nu.parts()[i];
            if d2 % 2 != 0 {
                return Err(Error::Parity(image));
            }
            if d2 < 0 {
                ok = false;
                break;
            }
        }
        if ok {
            total += sign;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::partitions_up_to;
    use proptest::prelude::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[2, 1]), &p(&[0, 0])), 1);
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coeff(&p(&[2, 2]), &p(&[1]), &p(&[1])), 0);
        assert_eq!(lr_coeff(&p(&[2, 1, 0]), &p(&[1, 0, 0]), &p(&[1, 0, 0])), 0);
        assert_eq!(lr_coeff(&p(&[1, 1, 0]), &p(&[1, 0, 0]), &p(&[1, 0, 0])), 1);
        assert_eq!(lr_coeff(&p(&[3, 2, 1]), &p(&[2, 1, 0]), &p(&[2, 1, 0])), 2);
    }

    #[test]
    fn lr_sums_to_pieri_and_dimension_counts() {
        // s_(1)^k expands with coefficients f^nu; s_(1) s_lambda sums over
        // addable corners.
        for lam in partitions_up_to(5, 4) {
            let corners = (0..4)
                .filter(|&i| i == 0 || lam.parts()[i - 1] > lam.parts()[i])
                .count() as u64;
            let total: u64 = partitions_of(lam.size() + 1, 4)
                .iter()
                .map(|nu| lr_coeff(nu, &lam, &p(&[1, 0, 0, 0])))
                .sum();
            assert_eq!(total, corners, "{lam}");
        }
    }

    #[test]
    fn branching_examples() {
        for sys in [RootSystem::B, RootSystem::C, RootSystem::D] {
            let l = p(&[2, 1, 0]);
            assert_eq!(branch_stable(sys, &l, &l).unwrap(), 1);
            assert_eq!(branch_alt(sys, l.parts(), &l).unwrap(), 1.into());
            assert_eq!(restrict_b_to_d(&l, &l).unwrap(), 1);
        }
        assert_eq!(branch_stable(RootSystem::C, &p(&[0, 0]), &p(&[1, 1])).unwrap(), 0);
        assert_eq!(branch_stable(RootSystem::D, &p(&[0, 0]), &p(&[1, 1])).unwrap(), 1);
        assert_eq!(branch_stable(RootSystem::B, &p(&[0, 0]), &p(&[1, 0])).unwrap(), 1);
        assert_eq!(restrict_b_to_d(&p(&[0, 0]), &p(&[1, 0])).unwrap(), 1);
    }

    #[test]
    fn alternating_rule_stabilises_to_stable_rule() {
        for n in 1..=3 {
            let parts = partitions_up_to(4, n);
            for lam in &parts {
                for nu in &parts {
                    let k = stable_shift(lam, nu);
                    for sys in [RootSystem::B, RootSystem::C, RootSystem::D] {
                        let stable = BigInt::from(branch_stable(sys, lam, nu).unwrap());
                        let alt = branch_alt_shifted(sys, lam, nu, k).unwrap();
                        let alt1 = branch_alt_shifted(sys, lam, nu, k + 1).unwrap();
                        assert_eq!(alt, stable, "{sys} {lam} {nu}");
                        assert_eq!(alt1, stable, "{sys} {lam} {nu}");
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_is_nonnegative() {
        for n in 1..=3 {
            let parts = partitions_up_to(5, n);
            for lam in &parts {
                for nu in &parts {
                    assert!(restrict_b_to_d(nu, lam).unwrap() >= 0);
                }
            }
        }
    }

    fn arb_triple() -> impl Strategy<Value = (Partition, Partition, Partition)> {
        (0i64..=4, 0i64..=4).prop_flat_map(|(a, b)| {
            let la = partitions_of(a, 4);
            let ga = partitions_of(b, 4);
            let nus = partitions_of(a + b, 4);
            (
                prop::sample::select(nus),
                prop::sample::select(la),
                prop::sample::select(ga),
            )
        })
    }

    proptest! {
        #[test]
        fn lr_symmetry_and_conjugation((nu, lam, gam) in arb_triple()) {
            let c = lr_coeff(&nu, &lam, &gam);
            prop_assert_eq!(c, lr_coeff(&nu, &gam, &lam));
            let conj = |x: &Partition| x.conjugate_with_len(8).unwrap();
            prop_assert_eq!(c, lr_coeff(&conj(&nu), &conj(&lam), &conj(&gam)));
        }

        #[test]
        fn lr_translation_stability((nu, lam, gam) in arb_triple(), k in 0i64..3) {
            let shift = |x: &Partition| Partition::new(x.parts().iter().map(|v| v + k).collect()).unwrap();
            prop_assert_eq!(lr_coeff(&nu, &lam, &gam), lr_coeff(&shift(&nu), &shift(&lam), &gam));
        }
    }
}
