//! Monomials (exponent vectors) and monomial orders.

use alloc::vec::Vec;
use core::cmp::Ordering;

/// A power product, stored as an exponent vector with its total degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    /// The monomial 1 in a ring with `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: alloc::vec![0; nvars],
            deg: 0,
        }
    }

    /// `x_idx^e`.
    pub fn var(nvars: usize, idx: usize, e: u32) -> Self {
        let mut exps = alloc::vec![0; nvars];
        exps[idx] = e;
        Monomial { exps, deg: e }
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), rhs.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| a + b)
                .collect(),
            deg: self.deg + rhs.deg,
        }
    }

    /// `self / rhs` when divisible.
    pub fn try_div(&self, rhs: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.exps.len(), rhs.exps.len());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&rhs.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial::new(exps))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, rhs: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| (*a).max(*b))
                .collect(),
        )
    }

    /// True when the supports are disjoint.
    pub fn coprime(&self, rhs: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&rhs.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the variables with positive exponent (needs ≤ 64 variables).
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, e) in self.exps.iter().enumerate() {
            if *e > 0 {
                m |= 1 << i;
            }
        }
        m
    }
}

/// Total degree, then reverse-lexicographic tie break on a slice.
fn grevlex_slice(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing slot wins
            return if x < y { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

/// Supported monomial orders. All are total, multiplicative well-orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    GrevLex,
    /// Pure lexicographic.
    Lex,
    /// Elimination order: the first `head` variables form a dominant block
    /// compared by grevlex; ties fall through to grevlex on the rest.
    Block { head: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::GrevLex => grevlex_slice(a.exps(), b.exps()),
            MonomialOrder::Lex => {
                for (x, y) in a.exps().iter().zip(b.exps()) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { head } => {
                let k = *head;
                match grevlex_slice(&a.exps()[..k], &b.exps()[..k]) {
                    Ordering::Equal => grevlex_slice(&a.exps()[k..], &b.exps()[k..]),
                    o => o,
                }
            }
        }
    }

    /// Degree-compatible orders keep homogenization of a Gröbner basis exact.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}
