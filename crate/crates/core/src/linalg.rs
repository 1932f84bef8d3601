//! Exact linear algebra over the rationals.
//!
//! Matrices are small (rank at most a few dozen) so everything goes through
//! `BigRational` row reduction, plus a fraction-free Bareiss determinant for
//! minors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of an integer matrix given as rows.
pub fn rank(m: &[Vec<i64>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let mut q = to_rational(m);
    rref(&mut q).len()
}

/// Determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// True iff every leading principal minor of the (symmetric) matrix is
/// positive, i.e. the matrix is positive definite.
pub fn is_positive_definite(m: &[Vec<i64>]) -> bool {
    (1..=m.len()).all(|k| {
        let minor: Vec<Vec<i64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        determinant(&minor).is_positive()
    })
}

/// A basis of the right kernel `{x : M x = 0}` over the rationals.
pub fn kernel(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut q = to_rational(m);
    let pivots = rref(&mut q);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -q[r][f].clone();
            }
            v
        })
        .collect()
}

/// Scales a rational vector to the primitive integer vector with the same
/// direction (first nonzero entry keeps its sign).
pub fn primitive_integer(v: &[BigRational]) -> Option<Vec<i64>> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return None;
    }
    ints.iter().map(|x| (x / &g).to_i64()).collect()
}

/// Solves `C x = b` where the columns of `C` are `cols[j]`.
///
/// Returns `None` when no solution exists; when the columns are dependent
/// one particular solution is returned.
pub fn solve_columns(cols: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    let m = cols.len();
    let n = b.len();
    let mut aug: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = cols
                .iter()
                .map(|c| BigRational::from_integer(c[i].into()))
                .collect();
            row.push(BigRational::from_integer(b[i].into()));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&m) {
        return None;
    }
    let mut x = vec![BigRational::zero(); m];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][m].clone();
    }
    Some(x)
}

/// Integer vector from rationals, if every entry is integral.
pub fn integral(v: &[BigRational]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![2, -1], vec![-1, 2]]), BigInt::from(3));
        assert_eq!(determinant(&[vec![2, -2], vec![-2, 2]]), BigInt::from(0));
        assert_eq!(
            determinant(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]]),
            BigInt::from(-5)
        );
        // Å1 = A1++
        assert_eq!(
            determinant(&[vec![2, -2, 0], vec![-2, 2, -1], vec![0, -1, 2]]),
            BigInt::from(-2)
        );
    }

    #[test]
    fn kernel_of_affine_a1() {
        let k = kernel(&[vec![2, -2], vec![-2, 2]]);
        assert_eq!(k.len(), 1);
        assert_eq!(primitive_integer(&k[0]), Some(vec![1, 1]));
    }

    #[test]
    fn rank_and_solve() {
        assert_eq!(rank(&[vec![1, 0], vec![0, 1], vec![1, 1]]), 2);
        let x = solve_columns(&[vec![1, 0, 1], vec![0, 1, 1]], &[2, 3, 5]).unwrap();
        assert_eq!(integral(&x), Some(vec![2, 3]));
        assert!(solve_columns(&[vec![1, 0, 1]], &[0, 1, 0]).is_none());
    }
}
