//! Exact rank over the rationals of sparse integer matrices.
//!
//! Rows are reduced fraction-free: combining two rows multiplies by the
//! leading coefficients and divides out the row content, so the row space
//! over Q is preserved exactly. Elimination first runs in `i128`; if any
//! intermediate overflows it restarts with arbitrary precision integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

/// Sparse row: `(column, value)` pairs sorted by column, no zero values.
pub(crate) type SparseRow = Vec<(usize, i64)>;

pub(crate) fn rank(rows: &[SparseRow]) -> usize {
    match eliminate::<i128>(rows) {
        Some(r) => r,
        None => eliminate::<BigInt>(rows).expect("arbitrary precision elimination cannot overflow"),
    }
}

trait Scalar: Clone + Integer + Signed {
    fn from_i64(v: i64) -> Self;
    /// `a * x - b * y`, or `None` on overflow.
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
}

impl Scalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }

    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
}

fn eliminate<T: Scalar>(rows: &[SparseRow]) -> Option<usize> {
    let mut pivots: BTreeMap<usize, Vec<(usize, T)>> = BTreeMap::new();
    for row in rows {
        let mut current: Vec<(usize, T)> =
            row.iter().map(|&(c, v)| (c, T::from_i64(v))).collect();
        normalize(&mut current);
        while let Some((lead, _)) = current.first() {
            match pivots.get(lead) {
                Some(pivot) => current = reduce(&current, pivot)?,
                None => {
                    pivots.insert(*lead, current);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Cancels the leading entry of `row` against `pivot` (same leading column).
fn reduce<T: Scalar>(row: &[(usize, T)], pivot: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let p = &pivot[0].1;
    let r = &row[0].1;
    let g = p.gcd(r);
    let a = p.clone() / g.clone();
    let b = r.clone() / g;
    let zero = T::zero();
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = pivot.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (col, value) = if ci == cj {
            let v = T::combine(&a, &row[i].1, &b, &pivot[j].1)?;
            i += 1;
            j += 1;
            (ci, v)
        } else if ci < cj {
            let v = T::combine(&a, &row[i].1, &b, &zero)?;
            i += 1;
            (ci, v)
        } else {
            let v = T::combine(&a, &zero, &b, &pivot[j].1)?;
            j += 1;
            (cj, v)
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    normalize(&mut out);
    Some(out)
}

fn normalize<T: Scalar>(row: &mut [(usize, T)]) {
    let content = row
        .iter()
        .fold(T::zero(), |acc, (_, v)| acc.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for (_, v) in row.iter_mut() {
            *v = v.clone() / content.clone();
        }
    }
}
