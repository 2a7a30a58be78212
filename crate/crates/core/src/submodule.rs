//! Finite modules over the truncated ring `F_q[t]/(t^N)`.
//!
//! A point of the punctual Quot scheme fiber `F_n` over `F_q` is a
//! t-invariant subspace of `(F_q[t]/(t^n))^r` of colength `n`, kept in
//! canonical reduced row-echelon form so that subspace equality is byte
//! equality. The fixed global coordinate order is
//! `e_1⊗1, e_1⊗t, …, e_1⊗t^{N−1}, e_2⊗1, …` (component major, power minor).
//!
//! Enumeration iterates canonical echelon bases of the required dimension
//! and filters by t-invariance — the simplest provably exhaustive method,
//! guarded to desk scale (`N·r ≤ 12`, `q ∈ {2,3,5}`).

use crate::arith::inv_mod;
use crate::error::Error;
use crate::groebner::combinations;
use crate::Result;
use alloc::format;
use alloc::vec::Vec;

/// Maximal number of echelon candidates an enumeration may visit.
const MAX_CANDIDATES: u128 = 4_000_000;

/// Partition type `(n_1 ≥ … ≥ n_l)` of a finite torsion module.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Parts are sorted descending; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let max = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=max)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }
}

impl core::fmt::Display for Partition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Number of parts `l` of the partition — the dimension of the t-torsion
/// subspace (socle) of a module of that type.
pub fn socle_parts(lambda: &Partition) -> usize {
    lambda.len()
}

/// A t-invariant subspace of `(F_q[t]/(t^level))^r` in canonical reduced
/// row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Submodule {
    r: usize,
    q: u64,
    level: usize,
    colength: usize,
    /// RREF rows over F_q, each of length `level · r`.
    basis: Vec<Vec<u64>>,
}

impl Submodule {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn colength(&self) -> usize {
        self.colength
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.level * self.r
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Build from spanning rows; canonicalizes and verifies t-invariance.
    pub fn from_rows(r: usize, q: u64, level: usize, rows: Vec<Vec<u64>>) -> Result<Submodule> {
        let dim = level * r;
        let mut rows = rows;
        for row in &mut rows {
            if row.len() != dim {
                return Err(Error::Guard(format!(
                    "row length {} does not match ambient dimension {dim}",
                    row.len()
                )));
            }
            for x in row.iter_mut() {
                *x %= q;
            }
        }
        let basis = rref(rows, q);
        let sub = Submodule {
            r,
            q,
            level,
            colength: dim - basis.len(),
            basis,
        };
        if !sub.is_t_invariant() {
            return Err(Error::Guard(
                "rows do not span a t-invariant subspace".into(),
            ));
        }
        Ok(sub)
    }

    /// Multiplication by t in the global coordinate order:
    /// `e_a⊗t^j ↦ e_a⊗t^{j+1}`, dropping the top power.
    pub fn t_shift(&self, row: &[u64]) -> Vec<u64> {
        t_shift_row(row, self.r, self.level)
    }

    pub fn is_t_invariant(&self) -> bool {
        self.basis
            .iter()
            .all(|row| in_span(&self.basis, &self.t_shift(row), self.q))
    }

    pub fn contains(&self, row: &[u64]) -> bool {
        in_span(&self.basis, row, self.q)
    }

    /// Does `self` contain `other` as a subspace (same ambient)?
    pub fn contains_submodule(&self, other: &Submodule) -> bool {
        self.level == other.level
            && self.r == other.r
            && other.basis.iter().all(|row| self.contains(row))
    }

    /// Full preimage under the reduction `(F_q[t]/(t^N'))^r → (F_q[t]/(t^N))^r`.
    /// Colength is preserved.
    pub fn lift_preimage(&self, to_level: usize) -> Result<Submodule> {
        if to_level < self.level {
            return Err(Error::Guard(format!(
                "cannot lift from level {} down to {to_level}",
                self.level
            )));
        }
        guard_enumeration(to_level, self.r, self.q)?;
        let new_dim = to_level * self.r;
        let mut rows: Vec<Vec<u64>> = Vec::new();
        // re-embed existing rows
        for row in &self.basis {
            let mut new_row = alloc::vec![0u64; new_dim];
            for a in 0..self.r {
                for j in 0..self.level {
                    new_row[a * to_level + j] = row[a * self.level + j];
                }
            }
            rows.push(new_row);
        }
        // the kernel of the reduction: all coordinates of power ≥ old level
        for a in 0..self.r {
            for j in self.level..to_level {
                let mut row = alloc::vec![0u64; new_dim];
                row[a * to_level + j] = 1;
                rows.push(row);
            }
        }
        let basis = rref(rows, self.q);
        let out = Submodule {
            r: self.r,
            q: self.q,
            level: to_level,
            colength: new_dim - basis.len(),
            basis,
        };
        debug_assert_eq!(out.colength, self.colength);
        debug_assert!(out.is_t_invariant());
        Ok(out)
    }

    /// The image of multiplication by the maximal ideal: maps a point of
    /// `F_{n−1}` (colength `n−1`, rank 2) to `t · (preimage at level n+1)`,
    /// a point of `F_{n+1}` in the non-cyclic stratum.
    pub fn m_embed(&self) -> Result<Submodule> {
        if self.r != 2 {
            return Err(Error::Guard(format!(
                "m-multiplication embedding requires rank 2, got {}",
                self.r
            )));
        }
        let n = self.colength + 1;
        if self.level > n + 1 {
            return Err(Error::ColengthMismatch {
                expected: n - 1,
                actual: self.colength,
            });
        }
        let lifted = self.lift_preimage(n + 1)?;
        let rows: Vec<Vec<u64>> = lifted.basis.iter().map(|row| lifted.t_shift(row)).collect();
        let basis = rref(rows, self.q);
        let out = Submodule {
            r: self.r,
            q: self.q,
            level: n + 1,
            colength: (n + 1) * self.r - basis.len(),
            basis,
        };
        if out.colength != n + 1 {
            return Err(Error::ColengthMismatch {
                expected: n + 1,
                actual: out.colength,
            });
        }
        debug_assert!(out.is_t_invariant());
        debug_assert!(out.quotient_type().len() >= 2);
        Ok(out)
    }

    /// Partition type of the quotient `B = ambient / self`, via the conjugate
    /// dimensions `m_i = dim t^i B / t^{i+1} B`.
    pub fn quotient_type(&self) -> Partition {
        let mut ms = Vec::new();
        let mut prev = self.quotient_image_dim(0);
        for i in 1..=self.level {
            let cur = self.quotient_image_dim(i);
            ms.push(prev - cur);
            prev = cur;
        }
        Partition::new(ms).conjugate()
    }

    /// dim of the image of `t^i · ambient` in the quotient by `self`.
    fn quotient_image_dim(&self, i: usize) -> usize {
        if i >= self.level {
            return 0;
        }
        // rank of basis(self) ∪ {e_a ⊗ t^j : j ≥ i} minus dim(self)
        let dim = self.ambient_dim();
        let mut rows: Vec<Vec<u64>> = self.basis.clone();
        for a in 0..self.r {
            for j in i..self.level {
                let mut row = alloc::vec![0u64; dim];
                row[a * self.level + j] = 1;
                rows.push(row);
            }
        }
        rref(rows, self.q).len() - self.dim()
    }
}

fn t_shift_row(row: &[u64], r: usize, level: usize) -> Vec<u64> {
    let mut out = alloc::vec![0u64; row.len()];
    if level == 0 {
        return out;
    }
    for a in 0..r {
        for j in 0..(level - 1) {
            out[a * level + j + 1] = row[a * level + j];
        }
    }
    out
}

/// Reduced row echelon form over F_q; drops zero rows. The result is the
/// canonical basis of the row space.
pub fn rref(mut rows: Vec<Vec<u64>>, q: u64) -> Vec<Vec<u64>> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == rows.len() {
            break;
        }
        let Some(src) = (pivot_row..rows.len()).find(|&i| rows[i][col] % q != 0) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = inv_mod(rows[pivot_row][col] % q, q).expect("pivot is a unit");
        for x in rows[pivot_row].iter_mut() {
            *x = *x % q * inv % q;
        }
        for i in 0..rows.len() {
            if i != pivot_row && rows[i][col] % q != 0 {
                let f = rows[i][col] % q;
                for c in 0..ncols {
                    let sub = f * rows[pivot_row][c] % q;
                    rows[i][c] = (rows[i][c] % q + q - sub) % q;
                }
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    rows
}

/// Is `row` in the span of RREF `basis`?
fn in_span(basis: &[Vec<u64>], row: &[u64], q: u64) -> bool {
    let mut row: Vec<u64> = row.iter().map(|&x| x % q).collect();
    for b in basis {
        let pivot = match b.iter().position(|&x| x != 0) {
            Some(p) => p,
            None => continue,
        };
        let f = row[pivot];
        if f != 0 {
            for (x, y) in row.iter_mut().zip(b) {
                *x = (*x + q - f * (*y % q) % q) % q;
            }
        }
    }
    row.iter().all(|&x| x == 0)
}

fn guard_enumeration(level: usize, r: usize, q: u64) -> Result<()> {
    if !crate::arith::is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if !matches!(q, 2 | 3 | 5) {
        return Err(Error::Guard(format!(
            "field size {q} outside the supported set {{2,3,5}}"
        )));
    }
    if level * r > 12 {
        return Err(Error::Guard(format!(
            "ambient dimension {} exceeds the enumeration bound 12",
            level * r
        )));
    }
    Ok(())
}

/// All t-invariant subspaces of `(F_q[t]/(t^level))^r` of the given
/// colength, as a complete duplicate-free list in canonical echelon order.
pub fn enumerate_submodules(
    level: usize,
    r: usize,
    q: u64,
    colength: usize,
) -> Result<Vec<Submodule>> {
    guard_enumeration(level, r, q)?;
    let ambient = level * r;
    if colength > ambient {
        return Err(Error::ColengthMismatch {
            expected: ambient,
            actual: colength,
        });
    }
    let dim = ambient - colength;

    // candidate count = gaussian binomial [ambient choose dim]_q
    let mut total: u128 = 0;
    for pivots in combinations(ambient, dim) {
        let free = free_slots(&pivots, ambient).len();
        total = total.saturating_add((q as u128).saturating_pow(free as u32));
        if total > MAX_CANDIDATES {
            return Err(Error::Guard(format!(
                "echelon candidate count exceeds {MAX_CANDIDATES}"
            )));
        }
    }

    let mut out = Vec::new();
    for pivots in combinations(ambient, dim) {
        let free = free_slots(&pivots, ambient);
        let mut assignment = alloc::vec![0u64; free.len()];
        loop {
            let mut basis = alloc::vec![alloc::vec![0u64; ambient]; dim];
            for (k, &p) in pivots.iter().enumerate() {
                basis[k][p] = 1;
            }
            for (v, &(row, col)) in assignment.iter().zip(&free) {
                basis[row][col] = *v;
            }
            let candidate = Submodule {
                r,
                q,
                level,
                colength,
                basis,
            };
            if candidate.is_t_invariant() {
                out.push(candidate);
            }
            if !advance(&mut assignment, q) {
                break;
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Advance a little-endian odometer; false on wrap-around to all zeros.
fn advance(digits: &mut [u64], q: u64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < q {
            return true;
        }
        *d = 0;
    }
    false
}

/// Entries of an echelon matrix not forced to 0 or 1: right of the row's
/// pivot and not in a pivot column.
fn free_slots(pivots: &[usize], ambient: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (row, &p) in pivots.iter().enumerate() {
        for col in (p + 1)..ambient {
            if !pivots.contains(&col) {
                out.push((row, col));
            }
        }
    }
    out
}

/// A nested pair `A_{n+1} ⊂ A_n` inside `(F_q[t]/(t^{n+1}))^r`: `upper` is the
/// preimage-lift of a colength-`n` submodule, `lower` has colength `n+1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IncidencePair {
    upper: Submodule,
    lower: Submodule,
}

impl IncidencePair {
    pub fn upper(&self) -> &Submodule {
        &self.upper
    }

    pub fn lower(&self) -> &Submodule {
        &self.lower
    }
}

/// All incidence pairs between colength `n` and colength `n+1` over F_q.
pub fn incidence_pairs(n: usize, r: usize, q: u64) -> Result<Vec<IncidencePair>> {
    guard_enumeration(n + 1, r, q)?;
    let upper_layer = enumerate_submodules(n, r, q, n)?;
    let lower_layer = enumerate_submodules(n + 1, r, q, n + 1)?;
    let mut out = Vec::new();
    for a_n in &upper_layer {
        let lifted = a_n.lift_preimage(n + 1)?;
        for a_n1 in &lower_layer {
            if lifted.contains_submodule(a_n1) {
                out.push(IncidencePair {
                    upper: lifted.clone(),
                    lower: a_n1.clone(),
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;
    use alloc::vec;
    use proptest::prelude::*;

    /// Number of F_q-points of P^d.
    fn proj_points(q: u64, d: usize) -> usize {
        (0..=d).map(|i| (q as usize).pow(i as u32)).sum()
    }

    #[test]
    fn projective_line_at_level_one() {
        // colength-1 submodules of F_2² are the 3 points of P¹(F_2)
        let subs = enumerate_submodules(1, 2, 2, 1).unwrap();
        assert_eq!(subs.len(), 3);
        let subs3 = enumerate_submodules(1, 2, 3, 1).unwrap();
        assert_eq!(subs3.len(), 4);
    }

    #[test]
    fn quadric_cone_point_count() {
        // 7 t-invariant colength-2 subspaces of (F_2[t]/t²)²
        let subs = enumerate_submodules(2, 2, 2, 2).unwrap();
        assert_eq!(subs.len(), 7);
        for s in &subs {
            assert!(s.is_t_invariant());
            assert_eq!(s.quotient_type().weight(), 2);
        }
        // exactly one non-cyclic point (the vertex tM)
        let non_cyclic: Vec<_> = subs
            .iter()
            .filter(|s| s.quotient_type().len() >= 2)
            .collect();
        assert_eq!(non_cyclic.len(), 1);
        assert_eq!(non_cyclic[0].quotient_type(), Partition::new(vec![1, 1]));
    }

    #[test]
    fn level_three_strata() {
        // 15 points split 12 cyclic + 3 of type (2,1)
        let subs = enumerate_submodules(3, 2, 2, 3).unwrap();
        assert_eq!(subs.len(), 15);
        let mut strata: BTreeMap<Partition, usize> = BTreeMap::new();
        for s in &subs {
            *strata.entry(s.quotient_type()).or_insert(0) += 1;
        }
        assert_eq!(strata.get(&Partition::new(vec![3])), Some(&12));
        assert_eq!(strata.get(&Partition::new(vec![2, 1])), Some(&3));
        assert_eq!(strata.get(&Partition::new(vec![1, 1, 1])), None);
    }

    #[test]
    fn colength_one_is_always_type_one() {
        for (level, r, q) in [(2usize, 2usize, 2u64), (2, 2, 3), (1, 3, 2)] {
            for s in enumerate_submodules(level, r, q, 1).unwrap() {
                assert_eq!(s.quotient_type(), Partition::new(vec![1]));
            }
        }
    }

    #[test]
    fn tm_has_type_one_one() {
        // A = t·M ⊂ (F_q[t]/t²)²: B = M/tM ≅ k², type (1,1)
        let rows = vec![
            vec![0, 1, 0, 0], // e1⊗t
            vec![0, 0, 0, 1], // e2⊗t
        ];
        let s = Submodule::from_rows(2, 2, 2, rows).unwrap();
        assert_eq!(s.colength(), 2);
        assert_eq!(s.quotient_type(), Partition::new(vec![1, 1]));
        assert_eq!(socle_parts(&s.quotient_type()), 2);
    }

    #[test]
    fn socle_counts() {
        assert_eq!(socle_parts(&Partition::new(vec![4])), 1);
        assert_eq!(socle_parts(&Partition::new(vec![3, 1])), 2);
        assert_eq!(socle_parts(&Partition::new(vec![1, 1, 1])), 3);
    }

    #[test]
    fn lift_preserves_colength() {
        for s in enumerate_submodules(2, 2, 2, 2).unwrap() {
            let lifted = s.lift_preimage(3).unwrap();
            assert_eq!(lifted.colength(), 2);
            assert_eq!(lifted.level(), 3);
            assert!(lifted.is_t_invariant());
            // the lift contains t²·(level-3 ambient)
            for a in 0..2 {
                let mut row = vec![0u64; 6];
                row[a * 3 + 2] = 1;
                assert!(lifted.contains(&row));
            }
        }
        // lifting everything gives everything
        let all = Submodule::from_rows(2, 2, 1, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let lifted = all.lift_preimage(2).unwrap();
        assert_eq!(lifted.colength(), 0);
        assert_eq!(lifted.dim(), 4);
    }

    #[test]
    fn m_embed_hits_the_vertex() {
        // the unique point of F_0 maps to tM, the type-(1,1) vertex
        let f0 = enumerate_submodules(0, 2, 2, 0).unwrap();
        assert_eq!(f0.len(), 1);
        let image = f0[0].m_embed().unwrap();
        assert_eq!(image.level(), 2);
        assert_eq!(image.colength(), 2);
        assert_eq!(image.quotient_type(), Partition::new(vec![1, 1]));
    }

    #[test]
    fn m_embed_is_injective_into_noncyclic() {
        for q in [2u64, 3] {
            let f1 = enumerate_submodules(1, 2, q, 1).unwrap();
            let images: Vec<Submodule> = f1.iter().map(|s| s.m_embed().unwrap()).collect();
            // pairwise distinct
            let mut dedup = images.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), f1.len());
            for img in &images {
                assert_eq!(img.colength(), 3);
                assert!(img.quotient_type().len() >= 2);
            }
            // exactly the non-cyclic stratum of F_3
            let f3_noncyclic: Vec<Submodule> = enumerate_submodules(3, 2, q, 3)
                .unwrap()
                .into_iter()
                .filter(|s| s.quotient_type().len() >= 2)
                .collect();
            assert_eq!(dedup, f3_noncyclic);
        }
    }

    #[test]
    fn incidence_counts_level_one() {
        // 3 points of F_1 × fibers of size 3 = 9 pairs
        let pairs = incidence_pairs(1, 2, 2).unwrap();
        assert_eq!(pairs.len(), 9);
        // fibers of the second projection: six 1s and one 3 over the vertex
        let mut lower_fibers: BTreeMap<&Submodule, usize> = BTreeMap::new();
        for p in &pairs {
            *lower_fibers.entry(p.lower()).or_insert(0) += 1;
        }
        let mut sizes: Vec<usize> = lower_fibers.values().copied().collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 1, 1, 1, 3]);
    }

    #[test]
    fn incidence_from_the_point_fiber() {
        // F_{0,1}: a single fiber of size (q^r − 1)/(q − 1)
        for (r, q) in [(2usize, 2u64), (3, 2), (2, 3)] {
            let pairs = incidence_pairs(0, r, q).unwrap();
            let expected = ((q as usize).pow(r as u32) - 1) / (q as usize - 1);
            assert_eq!(pairs.len(), expected);
        }
    }

    #[test]
    fn fiber_laws_at_level_two() {
        let pairs = incidence_pairs(2, 2, 2).unwrap();
        // every first-projection fiber has (q²−1)/(q−1) = 3 elements
        let mut upper_fibers: BTreeMap<&Submodule, usize> = BTreeMap::new();
        let mut lower_fibers: BTreeMap<&Submodule, usize> = BTreeMap::new();
        for p in &pairs {
            *upper_fibers.entry(p.upper()).or_insert(0) += 1;
            *lower_fibers.entry(p.lower()).or_insert(0) += 1;
        }
        assert!(upper_fibers.values().all(|&c| c == 3));
        // second-projection fibers follow the socle of the quotient type
        for (lower, count) in lower_fibers {
            let l = socle_parts(&lower.quotient_type());
            let expected = (2usize.pow(l as u32) - 1) / (2 - 1);
            assert_eq!(count, expected, "fiber over type {}", lower.quotient_type());
        }
    }

    #[test]
    fn guards_reject_out_of_range_requests() {
        assert!(matches!(
            enumerate_submodules(7, 2, 2, 7),
            Err(Error::Guard(_))
        ));
        assert!(matches!(
            enumerate_submodules(2, 2, 4, 2),
            Err(Error::NotPrime(4))
        ));
        assert!(matches!(
            enumerate_submodules(2, 2, 7, 2),
            Err(Error::Guard(_))
        ));
    }

    #[test]
    fn stratum_sum_matches_total() {
        for q in [2u64, 3] {
            let subs = enumerate_submodules(2, 3, q, 2).unwrap();
            let mut strata: BTreeMap<Partition, usize> = BTreeMap::new();
            for s in &subs {
                let ty = s.quotient_type();
                assert!(ty.len() <= 3, "at most r parts");
                assert_eq!(ty.weight(), 2);
                *strata.entry(ty).or_insert(0) += 1;
            }
            assert_eq!(strata.values().sum::<usize>(), subs.len());
            assert!(strata.get(&Partition::new(vec![2])).copied().unwrap_or(0) > 0);
        }
    }

    #[test]
    fn rank_one_fiber_is_a_point() {
        let subs = enumerate_submodules(2, 1, 2, 2).unwrap();
        assert_eq!(subs.len(), 1);
    }

    #[test]
    fn rref_is_canonical() {
        // two spanning sets of the same subspace give the same basis
        let a = rref(vec![vec![1, 1, 0, 1], vec![0, 1, 1, 1]], 2);
        let b = rref(vec![vec![1, 0, 1, 0], vec![0, 1, 1, 1]], 2);
        assert_eq!(a, b);
    }

    #[test]
    fn projective_space_sizes_match() {
        // level-1 enumeration counts hyperplanes of F_q^r
        for (r, q) in [(2usize, 2u64), (2, 3), (3, 2), (2, 5)] {
            let subs = enumerate_submodules(1, r, q, 1).unwrap();
            assert_eq!(subs.len(), proj_points(q, r - 1));
        }
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(parts in proptest::collection::vec(1usize..6, 0..5)) {
            let p = Partition::new(parts);
            prop_assert_eq!(p.conjugate().conjugate(), p.clone());
            prop_assert_eq!(p.conjugate().weight(), p.weight());
        }

        #[test]
        fn enumerated_submodules_are_invariant_with_consistent_type(which in 0usize..4) {
            let (level, r, q) = [(2usize, 2usize, 2u64), (2, 2, 3), (3, 2, 2), (2, 3, 2)][which];
            for colength in 0..=(level * r).min(4) {
                let subs = enumerate_submodules(level, r, q, colength).unwrap();
                for s in &subs {
                    prop_assert!(s.is_t_invariant());
                    let ty = s.quotient_type();
                    prop_assert_eq!(ty.weight(), colength);
                    prop_assert!(ty.len() <= r);
                }
            }
        }
    }
}
