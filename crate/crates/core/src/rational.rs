//! Exact rational scalars and the few bits of linear algebra we need over them.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// The scalar field used everywhere in this crate.
pub type Q = Rational64;

/// Shorthand for `p/q`.
#[inline]
pub fn q(p: i64, d: i64) -> Q {
    Q::new(p, d)
}

/// Shorthand for an integer-valued rational.
#[inline]
pub fn qi(p: i64) -> Q {
    Q::from_integer(p)
}

/// A rational that (de)serializes as a `"p/q"` string (or `"p"` for integers).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ratio(pub Q);

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a rational number: {0:?}")]
pub struct ParseRationalError(pub String);

impl FromStr for Ratio {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s).map(Ratio)
    }
}

/// Parses `"p"`, `"p/q"` or a finite decimal such as `"12.5"`.
pub fn parse_rational(s: &str) -> Result<Q, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| err())?;
        let d: i64 = d.trim().parse().map_err(|_| err())?;
        if d == 0 {
            return Err(err());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 15 {
            return Err(err());
        }
        let negative = int.starts_with('-');
        let whole: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().map_err(|_| err())?
        };
        let denom = 10i64.pow(frac.len() as u32);
        let num: i64 = frac.parse().map_err(|_| err())?;
        let frac_part = Q::new(num, denom);
        let whole = Q::from_integer(whole.abs());
        let v = whole + frac_part;
        return Ok(if negative { -v } else { v });
    }
    t.parse::<i64>().map(Q::from_integer).map_err(|_| err())
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Ratio {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Rank of a dense rational matrix given as rows.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.iter().map(Vec::len).max().unwrap_or(0);
    for row in &mut m {
        row.resize(ncols, Q::zero());
    }
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col];
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col] / p;
                for c in col..ncols {
                    let sub = f * m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Solves `sum_i x_i * columns[i] = target` exactly; `None` if inconsistent.
/// The columns must be linearly independent.
pub fn solve_columns(columns: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let n = columns.len();
    let m = target.len();
    // augmented matrix, rows = coordinates
    let mut a: Vec<Vec<Q>> = (0..m)
        .map(|r| {
            let mut row: Vec<Q> = columns.iter().map(|c| c[r]).collect();
            row.push(target[r]);
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(n);
    let mut row = 0;
    for col in 0..n {
        let p = (row..m).find(|&r| !a[r][col].is_zero())?;
        a.swap(row, p);
        let pv = a[row][col];
        for c in col..=n {
            a[row][c] /= pv;
        }
        for r in 0..m {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in col..=n {
                    let sub = f * a[row][c];
                    a[r][c] -= sub;
                }
            }
        }
        pivots.push(row);
        row += 1;
    }
    if a[row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| a[r][n]).collect())
}
