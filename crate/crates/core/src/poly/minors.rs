//! Minor ideals of polynomial matrices.

use super::coeff::Coeff;
use super::error::PolyError;
use super::polynomial::Polynomial;

/// Determinant by cofactor expansion along the first row; fine at the
/// matrix sizes presentation matrices have here.
fn determinant<C: Coeff>(rows: &[Vec<&Polynomial<C>>]) -> Polynomial<C> {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let ring = rows[0][0].ring().clone();
    let mut acc = Polynomial::zero(&ring);
    for (j, entry) in rows[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<&Polynomial<C>>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| *e)
                    .collect()
            })
            .collect();
        let cofactor = entry.try_mul(&determinant(&minor)).expect("same ring");
        acc = if j % 2 == 0 {
            acc.try_add(&cofactor).expect("same ring")
        } else {
            acc.try_sub(&cofactor).expect("same ring")
        };
    }
    acc
}

/// All `k x k` minors of a square polynomial matrix, with duplicates and
/// zeros removed. The `k = n-1` case is the first Fitting ideal of the
/// module the matrix presents.
pub fn minors_ideal<C: Coeff>(
    matrix: &[Vec<Polynomial<C>>],
    k: usize,
) -> Result<Vec<Polynomial<C>>, PolyError> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) || n == 0 {
        return Err(PolyError::NonSquareMatrix);
    }
    if k == 0 || k > n {
        return Err(PolyError::MinorSize { k, n });
    }
    let ring = matrix[0][0].ring();
    for row in matrix {
        for entry in row {
            if entry.ring() != ring {
                return Err(PolyError::RingMismatch(
                    ring.to_string(),
                    entry.ring().to_string(),
                ));
            }
        }
    }

    let mut minors = Vec::new();
    let rows = combinations(n, k);
    let cols = combinations(n, k);
    for r in &rows {
        for c in &cols {
            let sub: Vec<Vec<&Polynomial<C>>> = r
                .iter()
                .map(|&i| c.iter().map(|&j| &matrix[i][j]).collect())
                .collect();
            let det = determinant(&sub);
            if !det.is_zero() && !minors.contains(&det) {
                minors.push(det);
            }
        }
    }
    Ok(minors)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}
