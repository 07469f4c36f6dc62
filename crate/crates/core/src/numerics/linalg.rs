use dashu::base::Abs;
use dashu::float::DBig;
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

use super::number::{pow10, real, Number};
use crate::error::{Error, Result};

/// Solves `matrix · x = rhs`.
///
/// All-rational input goes through fraction-free (Bareiss) elimination and the
/// answer is exact. If any entry is real, everything is rounded to the widest
/// precision present and solved by Gaussian elimination with partial pivoting;
/// a pivot at or below `10^(5 - digits)` times the largest entry is singular.
pub fn solve_linear_system(matrix: &[Vec<Number>], rhs: &[Number]) -> Result<Vec<Number>> {
    let n = matrix.len();
    if rhs.len() != n {
        return Err(Error::Shape(format!(
            "{n} rows but {} right-hand side entries",
            rhs.len()
        )));
    }
    if let Some(row) = matrix.iter().find(|row| row.len() != n) {
        return Err(Error::Shape(format!(
            "matrix is not square: row of length {} in a {n}-row system",
            row.len()
        )));
    }
    let widest = matrix
        .iter()
        .flatten()
        .chain(rhs)
        .filter_map(Number::precision)
        .max();
    match widest {
        None => {
            let a: Vec<Vec<RBig>> = matrix
                .iter()
                .map(|row| row.iter().map(|v| v.as_rational().unwrap().clone()).collect())
                .collect();
            let b: Vec<RBig> = rhs.iter().map(|v| v.as_rational().unwrap().clone()).collect();
            Ok(solve_exact(a, b)?.into_iter().map(Number::Rational).collect())
        }
        Some(p) => {
            let a: Vec<Vec<DBig>> = matrix
                .iter()
                .map(|row| row.iter().map(|v| v.to_real(p)).collect())
                .collect();
            let b: Vec<DBig> = rhs.iter().map(|v| v.to_real(p)).collect();
            Ok(solve_real(a, b, p)?.into_iter().map(Number::Real).collect())
        }
    }
}

fn lcm(a: &UBig, b: &UBig) -> UBig {
    let g = dashu::base::Gcd::gcd(a, b);
    a / &g * b
}

/// Bareiss elimination on the integer system obtained by clearing each row's
/// denominators, then rational back substitution.
fn solve_exact(a: Vec<Vec<RBig>>, b: Vec<RBig>) -> Result<Vec<RBig>> {
    let n = a.len();
    // augmented integer matrix
    let mut m: Vec<Vec<IBig>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs);
            let scale = row
                .iter()
                .fold(UBig::ONE, |acc, v| lcm(&acc, v.denominator()));
            row.into_iter()
                .map(|v| {
                    let (num, den) = v.into_parts();
                    num * IBig::from(&scale / den)
                })
                .collect()
        })
        .collect();

    let mut prev = IBig::ONE;
    for k in 0..n {
        let pivot_row = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| m[i][k].clone().abs())
            .ok_or(Error::SingularMatrix { column: k })?;
        m.swap(k, pivot_row);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = IBig::ZERO;
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![RBig::ZERO; n];
    for i in (0..n).rev() {
        let mut acc = RBig::from(m[i][n].clone());
        for j in i + 1..n {
            acc -= RBig::from(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / RBig::from(m[i][i].clone());
    }
    Ok(x)
}

fn solve_real(mut a: Vec<Vec<DBig>>, mut b: Vec<DBig>, digits: usize) -> Result<Vec<DBig>> {
    let n = a.len();
    let scale = a
        .iter()
        .flatten()
        .map(|v| v.clone().abs())
        .max()
        .unwrap_or(DBig::ZERO);
    let cutoff = real(pow10(5 - digits as isize), digits) * scale;

    for k in 0..n {
        let pivot_row = (k..n)
            .max_by(|&i, &j| a[i][k].clone().abs().cmp(&a[j][k].clone().abs()))
            .expect("non-empty range");
        if a[pivot_row][k].clone().abs() <= cutoff {
            return Err(Error::SingularMatrix { column: k });
        }
        a.swap(k, pivot_row);
        b.swap(k, pivot_row);
        for i in k + 1..n {
            let factor = &a[i][k] / &a[k][k];
            for j in k + 1..n {
                let v = &a[i][j] - &factor * &a[k][j];
                a[i][j] = v;
            }
            let v = &b[i] - &factor * &b[k];
            b[i] = v;
            a[i][k] = DBig::ZERO;
        }
    }

    let mut x = vec![DBig::ZERO; n];
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for j in i + 1..n {
            acc -= &a[i][j] * &x[j];
        }
        x[i] = acc / &a[i][i];
    }
    Ok(x)
}
