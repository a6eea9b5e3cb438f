//! Exact rank computations over the rationals and over prime fields.
//!
//! Rational ranks use fraction-free (Bareiss) elimination: first over
//! `i128` with overflow checks, falling back to big integers when an
//! intermediate minor grows too large. No floating point anywhere.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// The coefficient field for homology ranks: exact rationals (default) or
/// a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// Parses `q` or `gf:<p>`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        if let Some(p) = text.strip_prefix("gf:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::PreconditionViolated(format!("invalid field spec {text:?}")))?;
            if !is_prime(p) {
                return Err(Error::PreconditionViolated(format!("{p} is not prime")));
            }
            return Ok(FieldSpec::Prime(p));
        }
        Err(Error::PreconditionViolated(format!(
            "invalid field spec {text:?}, expected `q` or `gf:<p>`"
        )))
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of the span of the given vectors over the chosen field.
pub fn rank(field: FieldSpec, vectors: &[Vec<i64>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Rational => {
            let rows: Vec<Vec<i128>> = vectors
                .iter()
                .map(|r| r.iter().map(|&x| x as i128).collect())
                .collect();
            match bareiss_rank_i128(rows) {
                Some(r) => r,
                None => {
                    let rows: Vec<Vec<BigInt>> = vectors
                        .iter()
                        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                        .collect();
                    bareiss_rank_big(rows)
                }
            }
        }
        FieldSpec::Prime(p) => {
            let rows: Vec<Vec<u64>> = vectors
                .iter()
                .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
                .collect();
            gauss_rank_mod_p(rows, p)
        }
    }
}

/// Whether `target` lies in the span of `vectors`.
pub fn in_span(field: FieldSpec, vectors: &[Vec<i64>], target: &[i64]) -> bool {
    let base = rank(field, vectors);
    let mut extended = vectors.to_vec();
    extended.push(target.to_vec());
    rank(field, &extended) == base
}

/// Fraction-free elimination over `i128`; `None` signals overflow.
fn bareiss_rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = m.len();
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    let mut col = 0;
    while rank < nrows && col < ncols {
        // Prefer a pivot of minimal magnitude to slow entry growth.
        let pivot_row = (rank..nrows)
            .filter(|&r| m[r][col] != 0)
            .min_by_key(|&r| m[r][col].unsigned_abs());
        let Some(pr) = pivot_row else {
            col += 1;
            continue;
        };
        m.swap(rank, pr);
        let pivot = m[rank][col];
        for r in rank + 1..nrows {
            let factor = m[r][col];
            if factor == 0 && pivot == prev {
                continue;
            }
            for c in col..ncols {
                let t1 = m[r][c].checked_mul(pivot)?;
                let t2 = m[rank][c].checked_mul(factor)?;
                m[r][c] = t1.checked_sub(t2)? / prev;
            }
        }
        prev = pivot;
        rank += 1;
        col += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot_row = (rank..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs());
        let Some(pr) = pivot_row else {
            col += 1;
            continue;
        };
        m.swap(rank, pr);
        let pivot = m[rank][col].clone();
        for r in rank + 1..nrows {
            let factor = m[r][col].clone();
            for c in col..ncols {
                let t = &m[r][c] * &pivot - &m[rank][c] * &factor;
                m[r][c] = t / &prev;
            }
        }
        prev = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

fn gauss_rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let nrows = m.len();
    let ncols = m[0].len();
    let mulp = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let Some(pr) = (rank..nrows).find(|&r| m[r][col] % p != 0) else {
            col += 1;
            continue;
        };
        m.swap(rank, pr);
        let inv = mod_inverse(m[rank][col], p);
        for c in col..ncols {
            m[rank][c] = mulp(m[rank][c], inv);
        }
        for r in rank + 1..nrows {
            let factor = m[r][col];
            if factor == 0 {
                continue;
            }
            for c in col..ncols {
                let sub = mulp(factor, m[rank][c]);
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid; p is prime and a is nonzero mod p.
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i128) as u64
}
