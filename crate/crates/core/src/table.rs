//! Tables of a polynomial family over all pairs of partitions in a size range.

use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::crystal::one_dim_sum_x;
use crate::error::{Error, Result};
use crate::kostka::{kostka_a, kostka_tilde};
use crate::qmult;
use crate::qpoly::LaurentPoly;
use crate::weyl::{partitions_of, Partition, RootSystem};

/// Largest rank a table may be requested for.
pub const MAX_TABLE_RANK: usize = 6;
/// Largest partition size a table may be requested for.
pub const MAX_TABLE_SIZE: i64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    KostkaA,
    KtildeB,
    KtildeC,
    KtildeD,
    SmallU,
    BigU,
    V,
    K1,
    K11,
    K2,
    X,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::KostkaA,
        Family::KtildeB,
        Family::KtildeC,
        Family::KtildeD,
        Family::SmallU,
        Family::BigU,
        Family::V,
        Family::K1,
        Family::K11,
        Family::K2,
        Family::X,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::KostkaA => "kostka-a",
            Family::KtildeB => "ktilde-b",
            Family::KtildeC => "ktilde-c",
            Family::KtildeD => "ktilde-d",
            Family::SmallU => "u",
            Family::BigU => "U",
            Family::V => "V",
            Family::K1 => "K1",
            Family::K11 => "K11",
            Family::K2 => "K2",
            Family::X => "x",
        }
    }

    fn eval(self, lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
        let (l, m) = (lambda.parts(), mu.parts());
        match self {
            Family::KostkaA => kostka_a(l, m),
            Family::KtildeB => kostka_tilde(RootSystem::B, l, m),
            Family::KtildeC => kostka_tilde(RootSystem::C, l, m),
            Family::KtildeD => kostka_tilde(RootSystem::D, l, m),
            Family::SmallU => qmult::u(l, m),
            Family::BigU => qmult::U(l, m),
            Family::V => qmult::V(lambda, mu),
            Family::K1 => qmult::K1(lambda, mu),
            Family::K11 => qmult::K11(l, m),
            Family::K2 => qmult::K2(l, m),
            Family::X => one_dim_sum_x(lambda),
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub polynomial: LaurentPoly,
    #[serde(serialize_with = "ser_bigint")]
    pub at_one: BigInt,
}

fn ser_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    let n: serde_json::Number = x.to_string().parse().map_err(serde::ser::Error::custom)?;
    n.serialize(s)
}

/// Rows for every pair `(lambda, mu)` of partitions with `n` parts and sizes in
/// `min_size..=max_size`, sorted by `lambda` then `mu`. The `x` family has one
/// row per `lambda` with `mu = (1^n)`; `kostka-a` keeps `|lambda| = |mu|`.
pub fn table_rows(family: Family, n: usize, min_size: i64, max_size: i64) -> Result<Vec<Row>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > MAX_TABLE_RANK {
        return Err(Error::CapExceeded(format!("rank {n} exceeds {MAX_TABLE_RANK}")));
    }
    if max_size > MAX_TABLE_SIZE {
        return Err(Error::CapExceeded(format!("size {max_size} exceeds {MAX_TABLE_SIZE}")));
    }
    let parts: Vec<Partition> = (min_size.max(0)..=max_size).flat_map(|s| partitions_of(s, n)).collect();
    let mut pairs: Vec<(Partition, Partition)> = match family {
        Family::X => parts
            .iter()
            .filter(|l| l.size() <= n as i64)
            .map(|l| (l.clone(), Partition::ones(n)))
            .collect(),
        _ => parts
            .iter()
            .flat_map(|l| parts.iter().map(move |m| (l.clone(), m.clone())))
            .filter(|(l, m)| family != Family::KostkaA || l.size() == m.size())
            .collect(),
    };
    pairs.sort_by(|a, b| (a.0.parts(), a.1.parts()).cmp(&(b.0.parts(), b.1.parts())));
    pairs
        .par_iter()
        .map(|(l, m)| {
            let p = family.eval(l, m)?;
            Ok(Row { lambda: l.parts().to_vec(), mu: m.parts().to_vec(), at_one: p.eval_one(), polynomial: p })
        })
        .collect()
}

fn list(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Writes rows as CSV (`lambda,mu,polynomial,at_one`, parts separated by
/// spaces) or as a JSON array.
pub fn write_table<W: Write>(rows: &[Row], format: Format, out: W) -> Result<()> {
    let io = |e: std::io::Error| Error::Parse(e.to_string());
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let csv_err = |e: csv::Error| Error::Parse(e.to_string());
            w.write_record(["lambda", "mu", "polynomial", "at_one"]).map_err(csv_err)?;
            for r in rows {
                w.write_record([list(&r.lambda), list(&r.mu), r.polynomial.to_string(), r.at_one.to_string()])
                    .map_err(csv_err)?;
            }
            w.flush().map_err(io)?;
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows).map_err(|e| Error::Parse(e.to_string()))?;
            writeln!(out).map_err(io)?;
        }
    }
    Ok(())
}

/// Computes and writes a table.
pub fn emit_table<W: Write>(family: Family, n: usize, min_size: i64, max_size: i64, format: Format, out: W) -> Result<()> {
    let rows = table_rows(family, n, min_size, max_size)?;
    write_table(&rows, format, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kostka_table_is_sorted_and_diagonal_one() {
        let rows = table_rows(Family::KostkaA, 3, 0, 3).unwrap();
        assert!(rows.windows(2).all(|w| (&w[0].lambda, &w[0].mu) < (&w[1].lambda, &w[1].mu)));
        for r in &rows {
            if r.lambda == r.mu {
                assert!(r.polynomial.is_one());
            }
        }
    }

    #[test]
    fn empty_range_is_header_only() {
        let mut buf = Vec::new();
        emit_table(Family::SmallU, 2, 3, 2, Format::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "lambda,mu,polynomial,at_one\n");
        let mut buf = Vec::new();
        emit_table(Family::SmallU, 2, 3, 2, Format::Json, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().trim(), "[]");
    }

    #[test]
    fn caps() {
        assert!(matches!(table_rows(Family::BigU, 7, 0, 1), Err(Error::CapExceeded(_))));
        assert!(matches!(table_rows(Family::BigU, 2, 0, 13), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn json_round_trips() {
        let rows = table_rows(Family::X, 3, 0, 3).unwrap();
        let mut buf = Vec::new();
        write_table(&rows, Format::Json, &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v.as_array().unwrap().len(), rows.len());
        let back: LaurentPoly = serde_json::from_value(v[0]["polynomial"].clone()).unwrap();
        assert_eq!(back, rows[0].polynomial);
    }
}
