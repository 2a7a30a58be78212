//! Fraction-free symbolic determinants.

use crate::error::Error;
use crate::poly::Polynomial;
use crate::Result;
use alloc::vec::Vec;

/// Exact determinant of a square matrix of polynomials by cofactor expansion,
/// skipping zero entries. Stays inside the polynomial ring (no division), so
/// it is valid over the dual numbers as well.
pub fn symbolic_det(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = m.len();
    if n == 0 || m.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquareMatrix);
    }
    let ring = m[0][0].ring();
    for row in m {
        for e in row {
            if e.ring() != ring && **e.ring() != **ring {
                return Err(Error::RingMismatch);
            }
        }
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(expand(m, 0, &cols))
}

/// Expand along row `row` over the still-available columns.
fn expand(m: &[Vec<Polynomial>], row: usize, cols: &[usize]) -> Polynomial {
    let ring = m[0][0].ring();
    if cols.is_empty() {
        return Polynomial::one(ring);
    }
    let mut acc = Polynomial::zero(ring);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&other| other != c)
            .collect();
        let sub = expand(m, row + 1, &rest);
        let contrib = entry * &sub;
        acc = if pos % 2 == 0 {
            &acc + &contrib
        } else {
            &acc - &contrib
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldElement, FieldKind};
    use crate::monomial::MonomialOrder;
    use crate::poly::RingCtx;
    use alloc::string::String;
    use alloc::sync::Arc;
    use alloc::vec;
    use proptest::prelude::*;

    fn toeplitz_ring(n: usize) -> Arc<RingCtx> {
        let vars: Vec<String> = (0..n).map(|i| alloc::format!("c{i}")).collect();
        RingCtx::new(vars, MonomialOrder::GrevLex, FieldKind::Rational)
    }

    /// Lower-triangular Toeplitz matrix with symbolic first column c0..c_{n−1}.
    fn toeplitz(ring: &Arc<RingCtx>, n: usize) -> Vec<Vec<Polynomial>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if j <= i {
                            Polynomial::var(ring, &alloc::format!("c{}", i - j)).unwrap()
                        } else {
                            Polynomial::zero(ring)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn identity_has_det_one() {
        for n in 1..=6 {
            let ring = toeplitz_ring(n);
            let m: Vec<Vec<Polynomial>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                Polynomial::one(&ring)
                            } else {
                                Polynomial::zero(&ring)
                            }
                        })
                        .collect()
                })
                .collect();
            assert_eq!(symbolic_det(&m).unwrap(), Polynomial::one(&ring));
        }
    }

    #[test]
    fn toeplitz_law_up_to_six() {
        // det of the lower-triangular Toeplitz block is c0^n
        for n in 1..=6 {
            let ring = toeplitz_ring(n);
            let c0 = Polynomial::var(&ring, "c0").unwrap();
            assert_eq!(symbolic_det(&toeplitz(&ring, n)).unwrap(), c0.pow(n));
        }
    }

    #[test]
    fn dual_number_kernel_determinant() {
        // [[t−ε, 0], [0, t−ε]] has determinant t² − 2εt (ε² = 0)
        for p in [3u64, 5] {
            let ring = RingCtx::new(
                vec![String::from("t")],
                MonomialOrder::GrevLex,
                FieldKind::dual_fp(p).unwrap(),
            );
            let t = Polynomial::var(&ring, "t").unwrap();
            let eps = Polynomial::constant(&ring, FieldElement::eps(p));
            let entry = &t - &eps;
            let z = Polynomial::zero(&ring);
            let m = vec![
                vec![entry.clone(), z.clone()],
                vec![z.clone(), entry.clone()],
            ];
            let det = symbolic_det(&m).unwrap();
            let expected = &t.pow(2) - &(&t * &eps).scale(&FieldElement::dual(2, 0, p));
            assert_eq!(det, expected);
        }
    }

    #[test]
    fn rejects_non_square() {
        let ring = toeplitz_ring(2);
        let m = vec![vec![Polynomial::one(&ring)], vec![Polynomial::one(&ring)]];
        assert_eq!(symbolic_det(&m), Err(Error::NonSquareMatrix));
        assert_eq!(symbolic_det(&[]), Err(Error::NonSquareMatrix));
    }

    proptest! {
        #[test]
        fn det_is_multiplicative_2x2(
            a in proptest::collection::vec(-4i64..=4, 8),
            b in proptest::collection::vec(-4i64..=4, 8),
        ) {
            // entries are random linear forms in two variables over F_5
            let ring = RingCtx::new(
                vec![String::from("x"), String::from("y")],
                MonomialOrder::GrevLex,
                FieldKind::fp(5).unwrap(),
            );
            let x = Polynomial::var(&ring, "x").unwrap();
            let y = Polynomial::var(&ring, "y").unwrap();
            let lin = |c: &[i64]| -> Polynomial {
                &x.scale(&FieldElement::fp(c[0], 5)) + &y.scale(&FieldElement::fp(c[1], 5))
            };
            let ma = vec![
                vec![lin(&a[0..2]), lin(&a[2..4])],
                vec![lin(&a[4..6]), lin(&a[6..8])],
            ];
            let mb = vec![
                vec![lin(&b[0..2]), lin(&b[2..4])],
                vec![lin(&b[4..6]), lin(&b[6..8])],
            ];
            // matrix product
            let mut prod = vec![vec![Polynomial::zero(&ring); 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        let term = &ma[i][k] * &mb[k][j];
                        prod[i][j] = &prod[i][j] + &term;
                    }
                }
            }
            let lhs = symbolic_det(&prod).unwrap();
            let rhs = &symbolic_det(&ma).unwrap() * &symbolic_det(&mb).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
