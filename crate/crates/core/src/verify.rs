//! Identity sweeps. Each suite evaluates both sides of a family of identities
//! over a range of inputs and reports every disagreement.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::{
    self, conjugate_word, crystal_op, energy_h, highest_weight_words, highest_weight_words_brute,
    index_count, is_highest_weight, local_energy, mixed_energy_sum, one_dim_sum_x, xi_class,
    CrystalType, Op,
};
use crate::error::{Error, Result};
use crate::kostka::{
    decomposition_coefficients, kostka_a, kostka_a_charge_oracle, kostka_full, kostka_number,
    kostka_tilde, ktilde_b_via_d, ktilde_via_decomposition, translation_shift,
};
use crate::lrbranch::{branch_alt_shifted, branch_stable, lr_coeff, restrict_b_to_d, stable_shift};
use crate::partfn::{coefficient, coeff_bcd, compositions, fq, lattice_elements, oracle, pq_int, BcdKind, Fq, ListKind};
use crate::qmult::{self, conj_duality, dual_hat, u_via_branch, u_via_restriction, U_via_branch, U_via_restriction, K1, V};
use crate::qpoly::{LaurentPoly, Substitution};
use crate::weyl::{partitions_in_box, partitions_of, partitions_up_to, translate, Partition, RootSystem};

/// One disagreement between two computations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub identity: String,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySuiteReport {
    pub suite: String,
    pub statement: String,
    pub instances: usize,
    pub checks: usize,
    pub failures: Vec<Failure>,
    /// Instance keys, in sweep order.
    pub checked: Vec<String>,
    #[serde(serialize_with = "ser_secs")]
    pub wall_time: Duration,
}

fn ser_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerifySuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Sweep bounds shared by all suites; each suite reads the ones it needs.
#[derive(Clone, Copy, Debug)]
pub struct SuiteParams {
    pub n: usize,
    pub max_size: i64,
    pub max_entry: i64,
}

impl SuiteParams {
    /// The bounds used when a suite is run without overrides.
    pub fn defaults(suite: Suite) -> Self {
        let (n, max_size) = match suite {
            Suite::PartitionFnOracle => (3, 6),
            Suite::KtildeTranslation => (3, 6),
            Suite::DualitiesHat => (3, 9),
            Suite::Decompositions => (3, 6),
            Suite::ConjDuality => (5, 5),
            Suite::XEqualsU | Suite::XEqualsBigU => (6, 6),
            Suite::WorkedExample => (3, 3),
            Suite::ChargeOracle => (6, 6),
            Suite::CrystalIdentities => (6, 6),
            Suite::Branching => (3, 4),
        };
        Self { n, max_size, max_entry: 3 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    PartitionFnOracle,
    KtildeTranslation,
    DualitiesHat,
    Decompositions,
    ConjDuality,
    XEqualsU,
    XEqualsBigU,
    WorkedExample,
    ChargeOracle,
    CrystalIdentities,
    Branching,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::PartitionFnOracle,
        Suite::KtildeTranslation,
        Suite::DualitiesHat,
        Suite::Decompositions,
        Suite::ConjDuality,
        Suite::XEqualsU,
        Suite::XEqualsBigU,
        Suite::WorkedExample,
        Suite::ChargeOracle,
        Suite::CrystalIdentities,
        Suite::Branching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PartitionFnOracle => "partition-fn-oracle",
            Suite::KtildeTranslation => "lemma-ktilde",
            Suite::DualitiesHat => "dualities-hat",
            Suite::Decompositions => "decompositions",
            Suite::ConjDuality => "conj-duality",
            Suite::XEqualsU => "x-equals-u",
            Suite::XEqualsBigU => "x-equals-U",
            Suite::WorkedExample => "paper-example",
            Suite::ChargeOracle => "charge-oracle",
            Suite::CrystalIdentities => "crystal-identities",
            Suite::Branching => "branching",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Suite::PartitionFnOracle => {
                "q-partition functions, b/c/d coefficients, f_q and F_q against truncated expansion; \
                 P^C and P^D over P^A; P^B over P^D"
            }
            Suite::KtildeTranslation => "K~^phi(lambda, mu) = K^phi(lambda + k kappa, mu + k kappa) for k = k0, k0 + 1",
            Suite::DualitiesHat => "u(lambda, mu) = K~^D(hat lambda, hat mu) and U(lambda, mu) = K~^C(hat lambda, hat mu)",
            Suite::Decompositions => {
                "K~^C, K~^D via type A; K~^B via K~^D; u and U via LR sums and via restriction \
                 multiplicities; positivity"
            }
            Suite::ConjDuality => "U(lambda', 1^n) = q^e u(lambda, 1^n)(1/q) and u(lambda', 1^n) = q^e U(lambda, 1^n)(1/q)",
            Suite::XEqualsU => "u(lambda, 1^n) = q^{(n - |lambda|)/2} X(lambda, 1^n)",
            Suite::XEqualsBigU => "U(lambda, 1^n) = q^{n - |lambda|} X(lambda, 1^n)",
            Suite::WorkedExample => "K^(1)((1,0,0), (1,1,1)) = q^8 + 2q^6 + 2q^4 + q^2 and V(q^2) = q^10 + q^8 + 2q^6 + q^4 + q^2",
            Suite::ChargeOracle => "K^A = sum of q^charge over SSYT; K^A(nu', 1^n) = q^{n(n-1)/2} K^A(nu, 1^n)(1/q)",
            Suite::CrystalIdentities => {
                "Xi invariant under e_i, f_i; prefix-pruned highest weight search; conjugate words; \
                 mixed energy sum = (n - |lambda|)/2; X(lambda') reflection"
            }
            Suite::Branching => "alternating branching = stable branching after shift; LR symmetry and conjugation; B to D restriction >= 0",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "dualities" {
            return Ok(Suite::DualitiesHat);
        }
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Collects checks made for one instance.
#[derive(Default)]
struct Ctx {
    checks: usize,
    failures: Vec<Failure>,
}

impl Ctx {
    fn eq(&mut self, id: &str, inputs: &str, lhs: Result<LaurentPoly>, rhs: Result<LaurentPoly>) {
        self.checks += 1;
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => {}
            (a, b) => self.failures.push(Failure {
                identity: id.to_string(),
                inputs: inputs.to_string(),
                lhs: show(a),
                rhs: show(b),
            }),
        }
    }

    fn holds(&mut self, id: &str, inputs: &str, ok: Result<bool>, detail: impl FnOnce() -> String) {
        self.checks += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => self.failures.push(Failure {
                identity: id.to_string(),
                inputs: inputs.to_string(),
                lhs: detail(),
                rhs: "holds".into(),
            }),
            Err(e) => self.failures.push(Failure {
                identity: id.to_string(),
                inputs: inputs.to_string(),
                lhs: format!("error: {e}"),
                rhs: "holds".into(),
            }),
        }
    }

    fn nonneg(&mut self, id: &str, inputs: &str, p: &Result<LaurentPoly>) {
        let shown = match p {
            Ok(p) => p.to_string(),
            Err(e) => format!("error: {e}"),
        };
        let ok = p.as_ref().map(|p| p.has_nonnegative_coeffs()).map_err(|e| e.clone());
        self.holds(id, inputs, ok, || shown);
    }
}

fn show(p: Result<LaurentPoly>) -> String {
    match p {
        Ok(p) => p.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn vec_key(v: &[i64]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

/// Runs every instance through `check` in parallel, merging in sweep order.
fn sweep<T, F>(suite: Suite, instances: Vec<T>, key: impl Fn(&T) -> String + Sync, check: F) -> VerifySuiteReport
where
    T: Send + Sync,
    F: Fn(&T, &mut Ctx) + Sync + Send,
{
    let start = Instant::now();
    let results: Vec<(String, Ctx)> = instances
        .par_iter()
        .map(|inst| {
            let mut ctx = Ctx::default();
            check(inst, &mut ctx);
            (key(inst), ctx)
        })
        .collect();
    let mut report = VerifySuiteReport {
        suite: suite.name().to_string(),
        statement: suite.statement().to_string(),
        instances: results.len(),
        checks: 0,
        failures: Vec::new(),
        checked: Vec::with_capacity(results.len()),
        wall_time: Duration::ZERO,
    };
    for (k, ctx) in results {
        report.checks += ctx.checks;
        report.failures.extend(ctx.failures);
        report.checked.push(k);
    }
    report.wall_time = start.elapsed();
    report
}

pub fn run_suite(suite: Suite, params: SuiteParams) -> Result<VerifySuiteReport> {
    if params.n == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(match suite {
        Suite::PartitionFnOracle => partition_fn_oracle(params),
        Suite::KtildeTranslation => ktilde_translation(params),
        Suite::DualitiesHat => dualities_hat(params),
        Suite::Decompositions => decompositions(params),
        Suite::ConjDuality => conj_duality_suite(params),
        Suite::XEqualsU => x_equals(params, false),
        Suite::XEqualsBigU => x_equals(params, true),
        Suite::WorkedExample => paper_example(),
        Suite::ChargeOracle => charge_oracle(params),
        Suite::CrystalIdentities => crystal_identities(params),
        Suite::Branching => branching(params),
    })
}

fn pairs(n: usize, max_size: i64) -> Vec<(Partition, Partition)> {
    let parts = partitions_up_to(max_size, n);
    let mut out = Vec::new();
    for l in &parts {
        for m in &parts {
            out.push((l.clone(), m.clone()));
        }
    }
    out
}

fn pairs_up_to_rank(n: usize, max_size: i64) -> Vec<(Partition, Partition)> {
    (1..=n).flat_map(|k| pairs(k, max_size)).collect()
}

fn pair_key(p: &(Partition, Partition)) -> String {
    format!("{} {}", p.0, p.1)
}

fn box_vectors(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let side = 2 * bound + 1;
    (0..side.pow(n as u32))
        .map(|mut code| {
            let mut v = vec![0; n];
            for x in v.iter_mut() {
                *x = code % side - bound;
                code /= side;
            }
            v
        })
        .collect()
}

fn partition_fn_oracle(p: SuiteParams) -> VerifySuiteReport {
    let kinds = [
        ListKind::Positive(RootSystem::A),
        ListKind::Positive(RootSystem::B),
        ListKind::Positive(RootSystem::C),
        ListKind::Positive(RootSystem::D),
        ListKind::Lattice(BcdKind::B),
        ListKind::Lattice(BcdKind::C),
        ListKind::Lattice(BcdKind::D),
        ListKind::SmallF,
        ListKind::BigF,
    ];
    let instances: Vec<(usize, ListKind)> = (1..=p.n).flat_map(|n| kinds.map(|k| (n, k))).collect();
    let bound = p.max_size;
    sweep(
        Suite::PartitionFnOracle,
        instances,
        |(n, k)| format!("n={n} {k:?}"),
        |&(n, kind), ctx| {
            let cap = bound * n as i64;
            let table = match oracle::expand(kind, n, cap) {
                Ok(t) => t,
                Err(e) => {
                    ctx.holds("oracle-expansion", &format!("n={n}"), Err(e), String::new);
                    return;
                }
            };
            for beta in box_vectors(n, bound) {
                if beta.iter().map(|x| x.abs()).sum::<i64>() > bound {
                    continue;
                }
                let h = oracle::height(kind, &beta).unwrap_or(i64::MAX);
                if h > cap {
                    continue;
                }
                let key = format!("{kind:?} {}", vec_key(&beta));
                let expected = table.get(&beta).cloned().unwrap_or_else(LaurentPoly::zero);
                ctx.eq("engine = truncated expansion", &key, coefficient(kind, &beta), Ok(expected));
                ctx.nonneg("nonnegative coefficients", &key, &coefficient(kind, &beta));
                let size: i64 = beta.iter().sum();
                match kind {
                    ListKind::SmallF => ctx.eq("f_q via convolution", &key, fq(&beta), coefficient(kind, &beta)),
                    ListKind::BigF => ctx.eq("F_q via convolution", &key, Fq(&beta), coefficient(kind, &beta)),
                    ListKind::Positive(sys @ (RootSystem::C | RootSystem::D)) => {
                        let lk = if sys == RootSystem::C { BcdKind::C } else { BcdKind::D };
                        let rhs = (|| -> Result<LaurentPoly> {
                            let mut acc = LaurentPoly::zero();
                            if size >= 0 && size % 2 == 0 {
                                for (delta, c) in lattice_elements(lk, size, n)? {
                                    let rest: Vec<i64> = beta.iter().zip(&delta).map(|(b, d)| b - d).collect();
                                    acc += &pq_int(RootSystem::A, &rest)?.shift(size / 2).scale(&c);
                                }
                            }
                            Ok(acc)
                        })();
                        ctx.eq("P^phi = sum q^{|delta|/2} c(delta) P^A(beta - delta)", &key, pq_int(sys, &beta), rhs);
                    }
                    ListKind::Positive(RootSystem::B) => {
                        let rhs = (|| -> Result<LaurentPoly> {
                            let mut acc = LaurentPoly::zero();
                            for s in 0..=size.max(0) {
                                for delta in compositions(s, n) {
                                    let rest: Vec<i64> = beta.iter().zip(&delta).map(|(b, d)| b - d).collect();
                                    acc += &pq_int(RootSystem::D, &rest)?.shift(s);
                                }
                            }
                            Ok(acc)
                        })();
                        ctx.eq("P^B = sum q^{|delta|} P^D(beta - delta)", &key, pq_int(RootSystem::B, &beta), rhs);
                    }
                    ListKind::Lattice(lk) => {
                        let mut sorted = beta.clone();
                        sorted.sort_unstable();
                        let a = coeff_bcd(lk, &beta).map(LaurentPoly::from);
                        let b = coeff_bcd(lk, &sorted).map(LaurentPoly::from);
                        ctx.eq("lattice coefficient symmetry", &key, a, b);
                    }
                    _ => {}
                }
                if matches!(kind, ListKind::SmallF | ListKind::BigF) && size > 0 {
                    ctx.holds("f vanishes for |beta| > 0", &key, coefficient(kind, &beta).map(|x| x.is_zero()), || "nonzero".into());
                }
            }
        },
    )
}

fn ktilde_translation(p: SuiteParams) -> VerifySuiteReport {
    let instances: Vec<(RootSystem, Partition, Partition)> = pairs_up_to_rank(p.n, p.max_size)
        .into_iter()
        .flat_map(|(l, m)| [RootSystem::B, RootSystem::C, RootSystem::D].map(|s| (s, l.clone(), m.clone())))
        .collect();
    sweep(
        Suite::KtildeTranslation,
        instances,
        |(s, l, m)| format!("{s} {l} {m}"),
        |(sys, lam, mu), ctx| {
            let key = format!("{sys} {lam} {mu}");
            let kt = kostka_tilde(*sys, lam.parts(), mu.parts());
            let k0 = translation_shift(lam.parts(), mu.parts());
            for k in [k0, k0 + 1] {
                let rhs = Partition::new(translate(lam.parts(), k))
                    .and_then(|l| Ok((l, Partition::new(translate(mu.parts(), k))?)))
                    .and_then(|(l, m)| kostka_full(*sys, &l, &m));
                ctx.eq(&format!("K~ = K at k={k}"), &key, kt.clone(), rhs);
            }
            ctx.eq(
                "K~ translation invariance",
                &key,
                kt.clone(),
                kostka_tilde(*sys, &translate(lam.parts(), -2), &translate(mu.parts(), -2)),
            );
            ctx.nonneg("K~ nonnegative", &key, &kt);
        },
    )
}

fn dualities_hat(p: SuiteParams) -> VerifySuiteReport {
    let instances: Vec<(Partition, Partition)> = (1..=p.n)
        .flat_map(|n| {
            let parts = partitions_in_box(n, p.max_entry);
            let mut v = Vec::new();
            for l in &parts {
                for m in &parts {
                    v.push((l.clone(), m.clone()));
                }
            }
            v
        })
        .collect();
    sweep(Suite::DualitiesHat, instances, pair_key, |(lam, mu), ctx| {
        let key = format!("{lam} {mu}");
        match dual_hat(lam, mu) {
            Ok(d) => {
                ctx.eq("u = K~^D(hat)", &key, Ok(d.u), Ok(d.ktilde_d));
                ctx.eq("U = K~^C(hat)", &key, Ok(d.big_u), Ok(d.ktilde_c));
            }
            Err(e) => ctx.holds("dual hat", &key, Err(e), String::new),
        }
    })
}

fn decompositions(p: SuiteParams) -> VerifySuiteReport {
    let instances = pairs_up_to_rank(p.n, p.max_size);
    sweep(Suite::Decompositions, instances, pair_key, |(lam, mu), ctx| {
        let key = format!("{lam} {mu}");
        let (l, m) = (lam.parts(), mu.parts());
        if lam.size() >= mu.size() {
            for sys in [RootSystem::C, RootSystem::D] {
                let direct = kostka_tilde(sys, l, m);
                ctx.nonneg(&format!("K~^{sys} nonnegative"), &key, &direct);
                ctx.eq(&format!("K~^{sys} via type A"), &key, direct, ktilde_via_decomposition(sys, l, m));
                if (lam.size() - mu.size()) % 2 == 0 {
                    let coeffs = decomposition_coefficients(sys, l, mu.size());
                    ctx.holds(
                        &format!("K~^{sys} decomposition coefficients nonnegative"),
                        &key,
                        coeffs.as_ref().map(|c| c.iter().all(|(_, x)| *x >= 0.into())).map_err(|e| e.clone()),
                        || format!("{coeffs:?}"),
                    );
                }
            }
            let direct = kostka_tilde(RootSystem::B, l, m);
            ctx.nonneg("K~^B nonnegative", &key, &direct);
            ctx.eq("K~^B via K~^D", &key, direct, ktilde_b_via_d(lam, mu));
        }
        let u = qmult::u(l, m);
        let big_u = qmult::U(l, m);
        ctx.nonneg("u nonnegative", &key, &u);
        ctx.nonneg("U nonnegative", &key, &big_u);
        if lam.size() > mu.size() {
            ctx.holds("u = U = 0 for |lambda| > |mu|", &key,
                Ok(u.as_ref().map(|x| x.is_zero()).unwrap_or(false) && big_u.as_ref().map(|x| x.is_zero()).unwrap_or(false)),
                || format!("{} / {}", show(u.clone()), show(big_u.clone())));
        }
        ctx.eq("u via LR over P^(1,1)", &key, u.clone(), u_via_branch(lam, mu));
        ctx.eq("u via [V^A : V^D]", &key, u.clone(), u_via_restriction(lam, mu));
        ctx.eq("U via LR over P^(2)", &key, big_u.clone(), U_via_branch(lam, mu));
        ctx.eq("U via [V^A : V^C]", &key, big_u.clone(), U_via_restriction(lam, mu));
        ctx.holds(
            "u(1) <= U(1)",
            &key,
            Ok(matches!((&u, &big_u), (Ok(a), Ok(b)) if a.eval_one() <= b.eval_one())),
            || format!("{} / {}", show(u.clone()), show(big_u.clone())),
        );
    })
}

fn conj_duality_suite(p: SuiteParams) -> VerifySuiteReport {
    let instances: Vec<(usize, Partition)> = (1..=p.n)
        .flat_map(|n| (0..=n as i64).flat_map(move |s| partitions_of(s, n).into_iter().map(move |l| (n, l))))
        .collect();
    sweep(
        Suite::ConjDuality,
        instances,
        |(n, l)| format!("n={n} {l}"),
        |(n, lam), ctx| {
            let key = format!("n={n} {lam}");
            match conj_duality(lam, *n) {
                Ok(c) => {
                    ctx.eq("U(lambda') = q^e u(lambda)(1/q)", &key, Ok(c.big_u_conj), Ok(c.u_reflected));
                    ctx.eq("u(lambda') = q^e U(lambda)(1/q)", &key, Ok(c.u_conj), Ok(c.big_u_reflected));
                }
                Err(e) => ctx.holds("conjugation duality", &key, Err(e), String::new),
            }
        },
    )
}

fn x_equals(p: SuiteParams, big: bool) -> VerifySuiteReport {
    let suite = if big { Suite::XEqualsBigU } else { Suite::XEqualsU };
    let instances: Vec<(usize, Partition)> = (1..=p.n)
        .flat_map(|n| (0..=n as i64).flat_map(move |s| partitions_of(s, n).into_iter().map(move |l| (n, l))))
        .collect();
    sweep(
        suite,
        instances,
        |(n, l)| format!("n={n} {l}"),
        move |(n, lam), ctx| {
            let key = format!("n={n} {lam}");
            let ones = vec![1; *n];
            let x = one_dim_sum_x(lam);
            let gap = *n as i64 - lam.size();
            if gap % 2 != 0 {
                ctx.holds("X = 0 off parity", &key, x.map(|x| x.is_zero()), || "nonzero".into());
                return;
            }
            if big {
                ctx.eq("U = q^{n-|lambda|} X", &key, qmult::U(lam.parts(), &ones), x.map(|x| x.shift(gap)));
            } else {
                ctx.eq("u = q^{(n-|lambda|)/2} X", &key, qmult::u(lam.parts(), &ones), x.map(|x| x.shift(gap / 2)));
            }
        },
    )
}

fn paper_example() -> VerifySuiteReport {
    sweep(Suite::WorkedExample, vec![()], |_| "(1,0,0) (1,1,1)".into(), |_, ctx| {
        let key = "(1,0,0) (1,1,1)";
        let lam = Partition::new(vec![1, 0, 0]).expect("partition");
        let mu = Partition::new(vec![1, 1, 1]).expect("partition");
        let k1 = K1(&lam, &mu);
        let v = V(&lam, &mu);
        let v2 = v.clone().map(|p| p.substitute(Substitution::Square));
        ctx.eq("K^(1)", key, k1.clone(), Ok(LaurentPoly::from_terms([(8, 1), (6, 2), (4, 2), (2, 1)])));
        ctx.eq("V(q^2)", key, v2.clone(), Ok(LaurentPoly::from_terms([(10, 1), (8, 1), (6, 2), (4, 1), (2, 1)])));
        ctx.holds("K^(1) != V(q^2)", key, Ok(matches!((&k1, &v2), (Ok(a), Ok(b)) if a != b)), || "equal".into());
        ctx.eq(
            "K^(1)(1) = V(1)",
            key,
            k1.map(|p| LaurentPoly::from(p.eval_one())),
            v.map(|p| LaurentPoly::from(p.eval_one())),
        );
    })
}

fn charge_oracle(p: SuiteParams) -> VerifySuiteReport {
    let mut instances: Vec<(Partition, Partition)> = Vec::new();
    for s in 0..=p.max_size {
        let n = (s.max(1) as usize).min(p.n.max(1));
        let n = n.max(1);
        for l in partitions_of(s, n) {
            for m in partitions_of(s, n) {
                instances.push((l.clone(), m));
            }
        }
    }
    let mut report = sweep(Suite::ChargeOracle, instances, pair_key, |(lam, mu), ctx| {
        let key = format!("{lam} {mu}");
        let direct = kostka_a(lam.parts(), mu.parts());
        ctx.eq("K^A = sum q^charge", &key, direct.clone(), kostka_a_charge_oracle(lam, mu));
        ctx.eq(
            "K^A(1) = Kostka number",
            &key,
            direct.map(|p| LaurentPoly::from(p.eval_one())),
            Ok(LaurentPoly::from(kostka_number(lam.parts(), mu.parts()) as i64)),
        );
    });
    let conj: Vec<(usize, Partition)> = (1..=p.n)
        .flat_map(|n| partitions_of(n as i64, n).into_iter().map(move |l| (n, l)))
        .collect();
    let extra = sweep(Suite::ChargeOracle, conj, |(n, l)| format!("n={n} {l}'"), |(n, nu), ctx| {
        let key = format!("n={n} {nu}");
        let ones = vec![1; *n];
        let lhs = nu.conjugate().and_then(|c| kostka_a(c.parts(), &ones));
        let e = (*n * (*n - 1) / 2) as i64;
        let rhs = kostka_a(nu.parts(), &ones).map(|p| p.substitute(Substitution::Invert).shift(e));
        ctx.eq("K^A(nu', 1^n) = q^{n(n-1)/2} K^A(nu, 1^n)(1/q)", &key, lhs, rhs);
    });
    merge(&mut report, extra);
    report
}

fn merge(into: &mut VerifySuiteReport, other: VerifySuiteReport) {
    into.instances += other.instances;
    into.checks += other.checks;
    into.failures.extend(other.failures);
    into.checked.extend(other.checked);
    into.wall_time += other.wall_time;
}

fn crystal_identities(p: SuiteParams) -> VerifySuiteReport {
    // Exhaustive operator checks stop at rank 4; word-level checks go to n.
    let small: Vec<usize> = (1..=p.n.min(4)).collect();
    let mut report = sweep(Suite::CrystalIdentities, small, |n| format!("all words n={n}"), |&n, ctx| {
        let key = format!("n={n}");
        let words = match crystal::all_words(n, n) {
            Ok(w) => w,
            Err(e) => return ctx.holds("words", &key, Err(e), String::new),
        };
        let mut bad = None;
        for b in &words {
            let xi = xi_class(b);
            for ty in [CrystalType::A, CrystalType::C] {
                for i in 1..=index_count(ty, n) {
                    for op in [Op::E, Op::F] {
                        if let Ok(Some(c)) = crystal_op(ty, op, i, b) {
                            if xi_class(&c) != xi && bad.is_none() {
                                bad = Some(format!("{ty:?} {op:?}_{i} {b} -> {c}"));
                            }
                        }
                    }
                }
            }
        }
        ctx.holds("Xi invariant under crystal operators", &key, Ok(bad.is_none()), || bad.clone().unwrap_or_default());
        for ty in [CrystalType::A, CrystalType::C] {
            let a = highest_weight_words(ty, n, n, None).map(|mut v| { v.sort(); v });
            let b = highest_weight_words_brute(ty, n, n).map(|mut v| { v.sort(); v });
            ctx.holds(
                &format!("{ty:?} prefix search = filter"),
                &key,
                Ok(matches!((&a, &b), (Ok(x), Ok(y)) if x == y)),
                || "mismatch".into(),
            );
        }
    });
    let ranks: Vec<usize> = (1..=p.n).collect();
    let words = sweep(Suite::CrystalIdentities, ranks, |n| format!("highest weight n={n}"), |&n, ctx| {
        let hw = match highest_weight_words(CrystalType::C, n, n, None) {
            Ok(w) => w,
            Err(e) => return ctx.holds("words", "", Err(e), String::new),
        };
        for b in &hw {
            let key = format!("n={n} {b}");
            let lam = b.weight_c();
            let size: i64 = lam.iter().sum();
            ctx.holds("prefixes are highest weight", &key, Ok((1..=n).all(|k| {
                crystal::CrystalWord::new(n, b.letters()[..k].to_vec()).map(|w| is_highest_weight(CrystalType::C, &w)).unwrap_or(false)
            })), || "prefix fails".into());
            let c = conjugate_word(b);
            let c = match c {
                Ok(c) => c,
                Err(e) => {
                    ctx.holds("conjugate word", &key, Err(e), String::new);
                    continue;
                }
            };
            ctx.holds("conjugate word is highest weight", &key, Ok(is_highest_weight(CrystalType::C, &c)), || c.to_string());
            ctx.holds("conjugation is an involution", &key, conjugate_word(&c).map(|d| &d == b), || c.to_string());
            let conj_lam = Partition::new(lam.clone()).and_then(|l| l.conjugate());
            ctx.holds("weight of b' is lambda'", &key, conj_lam.map(|l| l.parts() == c.weight_c()), || c.to_string());
            let same_bars = b.letters().iter().zip(c.letters()).all(|(x, y)| (*x > 0) == (*y > 0));
            ctx.holds("x_i and x_i' barred together", &key, Ok(same_bars), || c.to_string());
            let h_rule = (0..n.saturating_sub(1)).all(|i| {
                let (x, y) = (b.letters()[i], b.letters()[i + 1]);
                let (xc, yc) = (c.letters()[i], c.letters()[i + 1]);
                let h = local_energy(x, y, n);
                let hc = local_energy(xc, yc, n);
                if (x > 0) == (y > 0) { hc == 1 - h } else { hc == h }
            });
            ctx.holds("local energy of b' flips on same-kind pairs", &key, Ok(h_rule), || c.to_string());
            ctx.holds(
                "mixed energy sum = (n - |lambda|)/2",
                &key,
                Ok(2 * mixed_energy_sum(b) == n as i64 - size),
                || mixed_energy_sum(b).to_string(),
            );
            let total = (n * (n - 1) / 2) as i64;
            ctx.holds(
                "H(b') = n(n-1)/2 - (n-|lambda|)/2 - H(b)",
                &key,
                Ok(2 * energy_h(&c) == 2 * total - (n as i64 - size) - 2 * energy_h(b)),
                || format!("{} vs {}", energy_h(&c), energy_h(b)),
            );
        }
    });
    merge(&mut report, words);
    let xs: Vec<(usize, Partition)> = (1..=p.n)
        .flat_map(|n| (0..=n as i64).flat_map(move |s| partitions_of(s, n).into_iter().map(move |l| (n, l))))
        .filter(|(n, l)| (*n as i64 - l.size()) % 2 == 0)
        .collect();
    let refl = sweep(Suite::CrystalIdentities, xs, |(n, l)| format!("X n={n} {l}"), |(n, lam), ctx| {
        let key = format!("n={n} {lam}");
        let e = (*n * (*n - 1) / 2) as i64 - (*n as i64 - lam.size()) / 2;
        let lhs = lam.conjugate().and_then(|c| one_dim_sum_x(&c));
        let rhs = one_dim_sum_x(lam).map(|x| x.substitute(Substitution::Invert).shift(e));
        ctx.eq("X(lambda') = q^e X(lambda)(1/q)", &key, lhs, rhs);
    });
    merge(&mut report, refl);
    report
}

fn branching(p: SuiteParams) -> VerifySuiteReport {
    let instances = pairs_up_to_rank(p.n, p.max_size);
    let mut report = sweep(Suite::Branching, instances, pair_key, |(lam, nu), ctx| {
        let key = format!("{lam} {nu}");
        for sys in [RootSystem::B, RootSystem::C, RootSystem::D] {
            let stable = branch_stable(sys, lam, nu).map(|x| LaurentPoly::from(num_bigint::BigInt::from(x)));
            let k = stable_shift(lam, nu);
            for k in [k, k + 1] {
                let alt = branch_alt_shifted(sys, lam, nu, k).map(LaurentPoly::from);
                ctx.eq(&format!("{sys} alternating = stable at k={k}"), &key, alt, stable.clone());
            }
        }
        ctx.holds("B to D restriction nonnegative", &key, restrict_b_to_d(nu, lam).map(|x| x >= 0), || "negative".into());
    });
    let triples: Vec<(Partition, Partition, Partition)> = {
        let mut v = Vec::new();
        let len = 2 * p.max_size.max(1) as usize;
        for a in 0..=p.max_size {
            for b in 0..=p.max_size - a {
                for l in partitions_of(a, len) {
                    for g in partitions_of(b, len) {
                        for nu in partitions_of(a + b, len) {
                            v.push((nu, l.clone(), g.clone()));
                        }
                    }
                }
            }
        }
        v
    };
    let lr = sweep(Suite::Branching, triples, |(n, l, g)| format!("c^{n}_{g},{l}"), |(nu, lam, gam), ctx| {
        let key = format!("{nu} {lam} {gam}");
        let c = lr_coeff(nu, lam, gam) as i64;
        ctx.eq("LR symmetry", &key, Ok(c.into()), Ok((lr_coeff(nu, gam, lam) as i64).into()));
        let conj = |x: &Partition| x.conjugate_with_len(x.len());
        let cc = (|| -> Result<i64> { Ok(lr_coeff(&conj(nu)?, &conj(lam)?, &conj(gam)?) as i64) })();
        ctx.eq("LR conjugation", &key, Ok(c.into()), cc.map(LaurentPoly::from));
    });
    merge(&mut report, lr);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("dualities".parse::<Suite>().unwrap(), Suite::DualitiesHat);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn mismatches_are_recorded() {
        let mut ctx = Ctx::default();
        ctx.eq("same", "a", Ok(LaurentPoly::q_pow(1)), Ok(LaurentPoly::q_pow(1)));
        ctx.eq("differ", "b", Ok(LaurentPoly::q_pow(1)), Ok(LaurentPoly::q_pow(2)));
        ctx.eq("error", "c", Err(Error::ZeroRank), Ok(LaurentPoly::zero()));
        ctx.nonneg("sign", "d", &Ok(LaurentPoly::monomial(3, -1)));
        assert_eq!(ctx.checks, 4);
        let ids: Vec<_> = ctx.failures.iter().map(|f| f.identity.as_str()).collect();
        assert_eq!(ids, ["differ", "error", "sign"]);
        assert_eq!(ctx.failures[0].rhs, "q^2");
    }

    #[test]
    fn small_sweeps_pass() {
        for s in Suite::ALL {
            let mut p = SuiteParams::defaults(s);
            p.n = p.n.min(2);
            p.max_size = p.max_size.min(3);
            p.max_entry = 2;
            let r = run_suite(s, p).unwrap();
            assert!(r.passed(), "{}: {:?}", s.name(), r.failures.first());
            assert!(r.checks > 0);
        }
    }
}
