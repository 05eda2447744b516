//! Smith normal form over the integers.
//!
//! Each round moves the nonzero entry of least absolute value to the pivot,
//! clears its row and column by Euclidean steps, and restores the
//! divisibility chain by folding offending rows into the pivot row.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::{Dense, Entry, IntegerMatrix};

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal,
/// `d_1 | d_2 | … | d_r`, all `d_i > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SnfResult {
    /// The nonzero diagonal entries of `D`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        diagonal(&self.d)
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn diagonal(d: &IntegerMatrix) -> Vec<BigInt> {
    (0..d.rows().min(d.cols()))
        .map(|i| d.get(i, i).clone())
        .take_while(|x| !x.is_zero())
        .collect()
}

struct Transforms<'a, S> {
    u: &'a mut Dense<S>,
    v: &'a mut Dense<S>,
}

fn min_abs_in<S: Entry>(
    a: &Dense<S>,
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, j) in cells {
        let x = a.at(i, j);
        if x.is_nil() {
            continue;
        }
        match best {
            Some((bi, bj)) if !x.abs_lt(a.at(bi, bj)) => {}
            _ => best = Some((i, j)),
        }
    }
    best
}

/// Diagonalises `a` in place. Returns `None` if an intermediate value
/// overflowed `S`; the matrices are then garbage.
fn eliminate<S: Entry>(a: &mut Dense<S>, mut tr: Option<Transforms<'_, S>>) -> Option<()> {
    let (rows, cols) = (a.rows, a.cols);
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) =
            min_abs_in(a, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))))
        else {
            break;
        };
        swap_rows(a, &mut tr, t, pi);
        swap_cols(a, &mut tr, t, pj);
        loop {
            let pivot = a.at(t, t).clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if a.at(i, t).is_nil() {
                    continue;
                }
                let q = a.at(i, t).div_trunc(&pivot)?;
                row_sub(a, &mut tr, i, &q, t)?;
                dirty |= !a.at(i, t).is_nil();
            }
            for j in t + 1..cols {
                if a.at(t, j).is_nil() {
                    continue;
                }
                let q = a.at(t, j).div_trunc(&pivot)?;
                col_sub(a, &mut tr, j, &q, t)?;
                dirty |= !a.at(t, j).is_nil();
            }
            if dirty {
                let cells = (t + 1..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                let (i, j) = min_abs_in(a, cells).expect("a remainder is nonzero");
                if j == t {
                    swap_rows(a, &mut tr, t, i);
                } else {
                    swap_cols(a, &mut tr, t, j);
                }
                continue;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !pivot.divides(a.at(i, j))));
            match offender {
                Some(i) => add_row(a, &mut tr, t, i)?,
                None => break,
            }
        }
        if a.at(t, t).is_negative() {
            a.negate_row(t)?;
            if let Some(tr) = tr.as_mut() {
                tr.u.negate_row(t)?;
            }
        }
    }
    Some(())
}

fn swap_rows<S: Entry>(a: &mut Dense<S>, tr: &mut Option<Transforms<'_, S>>, x: usize, y: usize) {
    a.swap_rows(x, y);
    if let Some(tr) = tr.as_mut() {
        tr.u.swap_rows(x, y);
    }
}

fn swap_cols<S: Entry>(a: &mut Dense<S>, tr: &mut Option<Transforms<'_, S>>, x: usize, y: usize) {
    a.swap_cols(x, y);
    if let Some(tr) = tr.as_mut() {
        tr.v.swap_cols(x, y);
    }
}

fn row_sub<S: Entry>(
    a: &mut Dense<S>,
    tr: &mut Option<Transforms<'_, S>>,
    dst: usize,
    q: &S,
    src: usize,
) -> Option<()> {
    a.row_sub(dst, q, src)?;
    if let Some(tr) = tr.as_mut() {
        tr.u.row_sub(dst, q, src)?;
    }
    Some(())
}

fn col_sub<S: Entry>(
    a: &mut Dense<S>,
    tr: &mut Option<Transforms<'_, S>>,
    dst: usize,
    q: &S,
    src: usize,
) -> Option<()> {
    a.col_sub(dst, q, src)?;
    if let Some(tr) = tr.as_mut() {
        tr.v.col_sub(dst, q, src)?;
    }
    Some(())
}

/// `row[dst] += row[src]`
fn add_row<S: Entry>(
    a: &mut Dense<S>,
    tr: &mut Option<Transforms<'_, S>>,
    dst: usize,
    src: usize,
) -> Option<()> {
    let minus_one = S::unit().neg()?;
    row_sub(a, tr, dst, &minus_one, src)
}

/// Full Smith normal form with unimodular transforms.
pub fn smith_normal_form(a: &IntegerMatrix) -> SnfResult {
    let mut d = a.to_dense();
    let mut u = Dense::<BigInt>::identity(a.rows());
    let mut v = Dense::<BigInt>::identity(a.cols());
    eliminate(&mut d, Some(Transforms { u: &mut u, v: &mut v }))
        .expect("big-integer elimination cannot overflow");
    SnfResult {
        u: IntegerMatrix::from_dense(u),
        d: IntegerMatrix::from_dense(d),
        v: IntegerMatrix::from_dense(v),
    }
}

fn factors_of<S: Entry + Into<BigInt>>(d: Dense<S>) -> Vec<BigInt> {
    let r = d.rows.min(d.cols);
    let mut out = Vec::new();
    let mut data = d.data;
    let cols = d.cols;
    for i in 0..r {
        let x = std::mem::replace(&mut data[i * cols + i], S::nil());
        if x.is_nil() {
            break;
        }
        out.push(x.into());
    }
    out
}

/// Nonzero invariant factors only. Tries machine words first and falls back
/// to big integers on overflow.
pub(crate) fn invariant_factors_dense(a: Dense<i64>) -> Vec<BigInt> {
    let mut work = a.clone();
    if eliminate(&mut work, None).is_some() {
        return factors_of(work);
    }
    let mut big = Dense {
        rows: a.rows,
        cols: a.cols,
        data: a.data.into_iter().map(BigInt::from).collect(),
    };
    eliminate(&mut big, None).expect("big-integer elimination cannot overflow");
    factors_of(big)
}

/// Nonzero invariant factors of `a` (the diagonal of its Smith form).
pub fn invariant_factors(a: &IntegerMatrix) -> Vec<BigInt> {
    match a.to_dense_i64() {
        Some(d) => invariant_factors_dense(d),
        None => {
            let mut big = a.to_dense();
            eliminate(&mut big, None).expect("big-integer elimination cannot overflow");
            factors_of(big)
        }
    }
}

/// Checks every postcondition of a Smith form against its input.
pub fn verify_snf(a: &IntegerMatrix, snf: &SnfResult) -> Result<(), String> {
    let SnfResult { u, d, v } = snf;
    if u.rows() != a.rows() || u.cols() != a.rows() || v.rows() != a.cols() || v.cols() != a.cols()
    {
        return Err("transform shapes do not match the input".into());
    }
    if u.mul(a).mul(v) != *d {
        return Err("U·A·V differs from D".into());
    }
    for (name, m) in [("U", u), ("V", v)] {
        if m.determinant().abs() != BigInt::one() {
            return Err(format!("{name} is not unimodular"));
        }
    }
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            if i != j && !d.get(i, j).is_zero() {
                return Err(format!("off-diagonal entry at ({i},{j})"));
            }
        }
    }
    let diag: Vec<BigInt> = (0..d.rows().min(d.cols())).map(|i| d.get(i, i).clone()).collect();
    let r = diag.iter().take_while(|x| !x.is_zero()).count();
    if diag[r..].iter().any(|x| !x.is_zero()) {
        return Err("zero diagonal entry precedes a nonzero one".into());
    }
    if diag[..r].iter().any(Signed::is_negative) {
        return Err("negative invariant factor".into());
    }
    for w in diag[..r].windows(2) {
        if !(&w[1] % &w[0]).is_zero() {
            return Err(format!("{} does not divide {}", w[0], w[1]));
        }
    }
    Ok(())
}
