//! The Plücker-coordinate model of the punctual Quot scheme fiber `F_n`.
//!
//! `F_n` embeds into the Grassmannian of n-dimensional quotients of the
//! `nr`-dimensional space `(k[t]/(t^n))^r`. On the dense chart where the
//! first component generates, the embedding is given by an `n × nr` matrix
//! of lower-triangular Toeplitz blocks in the chart coordinates `a_{i,j}`;
//! its maximal minors are the Plücker coordinates. Eliminating the chart
//! coordinates from the graph ideal yields the defining ideal of the chart,
//! and homogenizing a grevlex basis yields the projective closure — the
//! defining ideal of `F_n` itself.
//!
//! Column convention: `e_i ⊗ t^j ↦` column `(i−1)·n + j + 1` (component
//! major, power minor), matching the submodule coordinate order. Minor rows
//! are taken in natural order and subsets are listed lexicographically; the
//! first nonzero coordinate in that order is normalized to 1.

use crate::error::Error;
use crate::field::{FieldElement, FieldKind};
use crate::groebner::{self, combinations, eliminate, krull_dim, projective_closure, Ideal};
use crate::matrix::symbolic_det;
use crate::monomial::MonomialOrder;
use crate::poly::{Polynomial, RingCtx};
use crate::submodule::{rref, Submodule};
use crate::Result;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

/// Chart-parameter instances currently supported by the elimination route.
pub const IMAGE_IDEAL_INSTANCES: [(usize, usize); 6] =
    [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)];

/// Largest ambient Plücker coordinate count for the elimination route.
pub const MAX_AMBIENT: usize = 70;

/// Variable name for the chart coordinate `a_{i,j}`.
pub fn chart_var_name(i: usize, j: usize) -> String {
    format!("a_{{{i},{j}}}")
}

/// Variable name for the Plücker coordinate indexed by a sorted column set.
pub fn plucker_var_name(subset: &[usize]) -> String {
    let mut s = String::from("p_{");
    for (k, c) in subset.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        s.push_str(&c.to_string());
    }
    s.push('}');
    s
}

/// Sorted n-element subsets of `{1, …, nr}` in lexicographic order.
pub fn plucker_subsets(nr: usize, n: usize) -> Vec<Vec<usize>> {
    combinations(nr, n)
        .into_iter()
        .map(|s| s.into_iter().map(|c| c + 1).collect())
        .collect()
}

/// Binomial coefficient, saturating at usize::MAX.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// The `n × nr` chart matrix `(A_1 A_2 … A_r)`: `A_1` the identity, each
/// `A_i` (i ≥ 2) lower-triangular Toeplitz with first column
/// `a_{i,0}, …, a_{i,n−1}`.
#[derive(Debug, Clone)]
pub struct ChartMatrix {
    n: usize,
    r: usize,
    ring: Arc<RingCtx>,
    entries: Vec<Vec<Polynomial>>,
}

impl ChartMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Ring of the chart coordinates `a_{i,j}` (grevlex).
    pub fn ring(&self) -> &Arc<RingCtx> {
        &self.ring
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    /// The block `A_i` (1-based) as an `n × n` matrix.
    pub fn block(&self, i: usize) -> Vec<Vec<Polynomial>> {
        let offset = (i - 1) * self.n;
        self.entries
            .iter()
            .map(|row| row[offset..offset + self.n].to_vec())
            .collect()
    }
}

/// Names of the chart coordinates of the `(n, r)` chart, in ring order.
pub fn chart_var_names(n: usize, r: usize) -> Vec<String> {
    let mut vars = Vec::with_capacity(n * (r - 1));
    for i in 2..=r {
        for j in 0..n {
            vars.push(chart_var_name(i, j));
        }
    }
    vars
}

/// Build the chart matrix over the given coefficient field.
pub fn chart_matrix(n: usize, r: usize, field: FieldKind) -> Result<ChartMatrix> {
    if n < 1 || r < 2 {
        return Err(Error::Guard(format!(
            "chart matrix needs n ≥ 1 and r ≥ 2, got ({n}, {r})"
        )));
    }
    let ring = RingCtx::new(chart_var_names(n, r), MonomialOrder::GrevLex, field);
    let mut entries = Vec::with_capacity(n);
    for k in 0..n {
        let mut row = Vec::with_capacity(n * r);
        for i in 1..=r {
            for j in 0..n {
                let entry = if i == 1 {
                    if k == j {
                        Polynomial::one(&ring)
                    } else {
                        Polynomial::zero(&ring)
                    }
                } else if k >= j {
                    // row k is the t^k coefficient of t^j · β(e_i)
                    Polynomial::var(&ring, &chart_var_name(i, k - j))?
                } else {
                    Polynomial::zero(&ring)
                };
                row.push(entry);
            }
        }
        entries.push(row);
    }
    Ok(ChartMatrix { n, r, ring, entries })
}

/// Maximal minors of the chart matrix, one per sorted n-subset of columns,
/// in lexicographic subset order. The first minor (columns `1..n`) is 1.
pub fn plucker_minors(m: &ChartMatrix) -> Result<Vec<(Vec<usize>, Polynomial)>> {
    let mut out = Vec::new();
    for subset in plucker_subsets(m.n * m.r, m.n) {
        let sub: Vec<Vec<Polynomial>> = m
            .entries
            .iter()
            .map(|row| subset.iter().map(|&c| row[c - 1].clone()).collect())
            .collect();
        out.push((subset, symbolic_det(&sub)?));
    }
    Ok(out)
}

/// The symbolic divisor certificates `(det A_1, det A_2)`: the first is the
/// Plücker coordinate of the chart columns (identically 1), the second is
/// the coordinate on columns `n+1..2n`, which cuts the chart in
/// `n · {a_{2,0} = 0}`.
pub fn divisor_witness(n: usize, r: usize, field: FieldKind) -> Result<(Polynomial, Polynomial)> {
    let m = chart_matrix(n, r, field)?;
    let d1 = symbolic_det(&m.block(1))?;
    let d2 = symbolic_det(&m.block(2))?;
    Ok((d1, d2))
}

/// Defining ideals of `F_n` in Plücker coordinates: the affine chart ideal
/// (chart coordinates eliminated) and its projective closure.
#[derive(Debug, Clone)]
pub struct QuotIdeal {
    n: usize,
    r: usize,
    ambient: usize,
    chart_dim: i64,
    chart: Ideal,
    closure: Ideal,
}

impl QuotIdeal {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of Plücker coordinates of the ambient Grassmannian.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Krull dimension of the affine chart ideal.
    pub fn chart_dim(&self) -> i64 {
        self.chart_dim
    }

    /// Affine chart ideal in the coordinates `p_S`, `S ≠ {1..n}` (grevlex),
    /// with its reduced basis cached.
    pub fn chart(&self) -> &Ideal {
        &self.chart
    }

    pub fn chart_mut(&mut self) -> &mut Ideal {
        &mut self.chart
    }

    /// Homogeneous closure ideal in all Plücker coordinates, `p_{1..n}`
    /// first.
    pub fn closure(&self) -> &Ideal {
        &self.closure
    }

    pub fn closure_mut(&mut self) -> &mut Ideal {
        &mut self.closure
    }

    /// Name of the homogenization variable `p_{1..n}`.
    pub fn hvar(&self) -> String {
        plucker_var_name(&(1..=self.n).collect::<Vec<_>>())
    }
}

/// Compute the defining ideal of `F_n ⊂ Gr(nr, n)` by graph-ideal
/// elimination of the chart coordinates, then projective closure.
pub fn image_ideal(n: usize, r: usize, field: FieldKind) -> Result<QuotIdeal> {
    if !IMAGE_IDEAL_INSTANCES.contains(&(n, r)) {
        return Err(Error::Guard(format!(
            "image ideal supported for (n, r) in {IMAGE_IDEAL_INSTANCES:?}, got ({n}, {r})"
        )));
    }
    let ambient = binomial(n * r, n);
    if ambient > MAX_AMBIENT {
        return Err(Error::Guard(format!(
            "ambient Plücker coordinate count {ambient} exceeds {MAX_AMBIENT}"
        )));
    }
    if !field.is_field() {
        return Err(Error::NotAField);
    }

    let chart = chart_matrix(n, r, field.clone())?;
    let minors = plucker_minors(&chart)?;
    debug_assert!(minors[0].1.is_constant());

    // graph ring: chart coordinates first (the elimination block), then the
    // affine Plücker coordinates
    let a_names = chart_var_names(n, r);
    let mut vars = a_names.clone();
    for (subset, _) in minors.iter().skip(1) {
        vars.push(plucker_var_name(subset));
    }
    let graph_ring = RingCtx::new(
        vars,
        MonomialOrder::Block { head: a_names.len() },
        field,
    );
    let mut gens = Vec::with_capacity(minors.len() - 1);
    for (subset, minor) in minors.iter().skip(1) {
        let p_var = Polynomial::var(&graph_ring, &plucker_var_name(subset))?;
        let gen = p_var.checked_sub(&minor.embed(&graph_ring)?)?;
        gens.push(gen);
    }
    let mut graph = Ideal::new(&graph_ring, gens);
    let drop: Vec<&str> = a_names.iter().map(|s| s.as_str()).collect();
    let mut chart_ideal = eliminate(&mut graph, &drop)?;
    let chart_dim = krull_dim(chart_ideal.groebner(MonomialOrder::GrevLex)?);

    let hvar = plucker_var_name(&(1..=n).collect::<Vec<_>>());
    let closure = projective_closure(&mut chart_ideal, &hvar)?;
    debug_assert_eq!(closure.ring().nvars(), ambient);

    // round trip: dehomogenizing the closure regenerates the chart ideal
    #[cfg(debug_assertions)]
    {
        let gb = chart_ideal.groebner_cached().unwrap();
        for g in closure.generators() {
            let back = g.dehomogenize(&hvar).unwrap();
            let back = strip_var(&back, &hvar, chart_ideal.ring()).unwrap();
            assert!(groebner::normal_form(&back, gb).unwrap().is_zero());
        }
    }

    Ok(QuotIdeal {
        n,
        r,
        ambient,
        chart_dim,
        chart: chart_ideal,
        closure,
    })
}

/// Drop an unused variable from a polynomial's ring.
#[cfg(debug_assertions)]
fn strip_var(p: &Polynomial, var: &str, target: &Arc<RingCtx>) -> Result<Polynomial> {
    let _ = var;
    p.embed(target)
}

/// A normalized projective point in Plücker coordinates, indexed by the
/// lexicographically sorted n-subsets of columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PluckerPoint {
    n: usize,
    r: usize,
    q: u64,
    /// Values aligned with `plucker_subsets(n·r, n)`, first nonzero = 1.
    coords: Vec<u64>,
}

impl PluckerPoint {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn field_elements(&self) -> Vec<FieldElement> {
        self.coords
            .iter()
            .map(|&v| FieldElement::fp(v as i64, self.q))
            .collect()
    }

    /// Build from raw minor values; fails when all coordinates vanish.
    pub fn from_coords(n: usize, r: usize, q: u64, mut coords: Vec<u64>) -> Result<PluckerPoint> {
        for c in coords.iter_mut() {
            *c %= q;
        }
        let lead = coords
            .iter()
            .position(|&c| c != 0)
            .ok_or_else(|| Error::Guard("all Plücker coordinates vanish".into()))?;
        let inv = crate::arith::inv_mod(coords[lead], q).expect("unit");
        for c in coords.iter_mut() {
            *c = *c * inv % q;
        }
        Ok(PluckerPoint { n, r, q, coords })
    }

    /// Coordinate of an arbitrary (possibly unsorted) index tuple, with the
    /// antisymmetric sign; tuples with repeats give 0. `subsets` is the
    /// sorted lexicographic list indexing `coords`.
    fn signed_coord(&self, tuple: &[usize], subsets: &[Vec<usize>]) -> i64 {
        let mut sorted = tuple.to_vec();
        // bubble sort counting swaps keeps the sign exact
        let mut swaps = 0usize;
        for i in 0..sorted.len() {
            for j in 0..sorted.len() - 1 - i {
                if sorted[j] > sorted[j + 1] {
                    sorted.swap(j, j + 1);
                    swaps += 1;
                }
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return 0;
        }
        let idx = subsets.binary_search(&sorted).expect("subset in range");
        let v = self.coords[idx] as i64;
        if swaps % 2 == 0 {
            v
        } else {
            -v
        }
    }

    /// Check the quadratic (shuffle) relations of the ambient Grassmannian:
    /// for every (n−1)-subset α and (n+1)-subset β,
    /// Σ_k (−1)^k · p(α ∪ β_k) · p(β \ β_k) = 0.
    pub fn satisfies_plucker_relations(&self) -> bool {
        let nr = self.n * self.r;
        let subsets = plucker_subsets(nr, self.n);
        let q = self.q as i64;
        for alpha in plucker_subsets(nr, self.n - 1) {
            for beta in plucker_subsets(nr, self.n + 1) {
                let mut acc: i64 = 0;
                for (k, &b) in beta.iter().enumerate() {
                    let mut left = alpha.clone();
                    left.push(b);
                    let right: Vec<usize> = beta
                        .iter()
                        .enumerate()
                        .filter(|(m, _)| *m != k)
                        .map(|(_, &c)| c)
                        .collect();
                    let term =
                        self.signed_coord(&left, &subsets) * self.signed_coord(&right, &subsets);
                    let signed = if k % 2 == 0 { term } else { -term };
                    acc = (acc + signed).rem_euclid(q);
                }
                if acc != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Plücker coordinates of a point of `F_n(F_q)`: the maximal minors of any
/// matrix whose kernel is the submodule. The result does not depend on the
/// choice of that matrix.
pub fn plucker_of_submodule(a: &Submodule) -> Result<PluckerPoint> {
    if a.colength() != a.level() {
        return Err(Error::ColengthMismatch {
            expected: a.level(),
            actual: a.colength(),
        });
    }
    let n = a.colength();
    let q = a.q();
    let quotient = annihilator_basis(a);
    debug_assert_eq!(quotient.len(), n);
    let mut coords = Vec::new();
    for subset in plucker_subsets(a.ambient_dim(), n) {
        let minor: Vec<Vec<u64>> = quotient
            .iter()
            .map(|row| subset.iter().map(|&c| row[c - 1]).collect())
            .collect();
        coords.push(fq_det(minor, q));
    }
    PluckerPoint::from_coords(n, a.r(), q, coords)
}

/// Rows spanning the annihilator of the submodule's row space — the matrix
/// of the quotient map the submodule is the kernel of.
fn annihilator_basis(a: &Submodule) -> Vec<Vec<u64>> {
    let dim = a.ambient_dim();
    let q = a.q();
    let basis = rref(a.basis().to_vec(), q);
    let pivots: Vec<usize> = basis
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).unwrap())
        .collect();
    let mut out = Vec::new();
    for free in (0..dim).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![0u64; dim];
        v[free] = 1;
        for (k, &p) in pivots.iter().enumerate() {
            // v[p] = −basis[k][free]
            v[p] = (q - basis[k][free] % q) % q;
        }
        out.push(v);
    }
    out
}

/// Determinant over F_q by Gaussian elimination.
fn fq_det(mut m: Vec<Vec<u64>>, q: u64) -> u64 {
    let n = m.len();
    let mut det: u64 = 1 % q;
    for col in 0..n {
        let pivot = match (col..n).find(|&r| m[r][col] % q != 0) {
            Some(p) => p,
            None => return 0,
        };
        if pivot != col {
            m.swap(col, pivot);
            det = (q - det) % q;
        }
        det = det * (m[col][col] % q) % q;
        let inv = crate::arith::inv_mod(m[col][col] % q, q).expect("unit");
        for r in (col + 1)..n {
            let f = m[r][col] % q * inv % q;
            if f == 0 {
                continue;
            }
            for c in col..n {
                let sub = f * (m[col][c] % q) % q;
                m[r][c] = (m[r][c] % q + q - sub) % q;
            }
        }
    }
    det
}

/// A polynomial over F_p compiled to flat coefficient/exponent lists for
/// fast repeated evaluation at `u64` points.
#[derive(Debug, Clone)]
pub struct CompiledFpPoly {
    p: u64,
    terms: Vec<(u64, Vec<(usize, u32)>)>,
}

impl CompiledFpPoly {
    pub fn new(poly: &Polynomial) -> Result<CompiledFpPoly> {
        let p = match poly.ring().field() {
            FieldKind::Fp(p) => *p,
            _ => return Err(Error::NotAField),
        };
        let mut terms = Vec::with_capacity(poly.terms().len());
        for (m, c) in poly.terms() {
            let val = match c {
                FieldElement::Fp { val, .. } => *val,
                _ => unreachable!("Fp ring"),
            };
            let exps: Vec<(usize, u32)> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i, e))
                .collect();
            terms.push((val, exps));
        }
        Ok(CompiledFpPoly { p, terms })
    }

    pub fn eval(&self, point: &[u64]) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for (c, exps) in &self.terms {
            let mut v = *c;
            for &(i, e) in exps {
                if v == 0 {
                    break;
                }
                v = v * crate::arith::pow_mod(point[i], e as u64, p) % p;
            }
            acc = (acc + v) % p;
        }
        acc
    }
}

/// All projective F_q-points of the common zero locus of `gens`, as
/// normalized coordinate vectors (first nonzero entry 1) in lexicographic
/// order. Guarded by a cap on the number of candidate points.
pub fn projective_solutions(
    gens: &[Polynomial],
    q: u64,
    max_points: u128,
) -> Result<Vec<Vec<u64>>> {
    if gens.is_empty() {
        return Err(Error::Guard(
            "refusing to enumerate the full projective space of an empty system".into(),
        ));
    }
    let nvars = gens[0].ring().nvars();
    let mut candidates: u128 = 0;
    for lead in 0..nvars {
        candidates =
            candidates.saturating_add((q as u128).saturating_pow((nvars - lead - 1) as u32));
    }
    if candidates > max_points {
        return Err(Error::Guard(format!(
            "projective point count {candidates} exceeds the scan bound {max_points}"
        )));
    }
    let mut compiled = Vec::with_capacity(gens.len());
    for g in gens {
        compiled.push(CompiledFpPoly::new(g)?);
    }
    // cheap generators first makes the early-exit scan effective
    compiled.sort_by_key(|c| c.terms.len());

    let mut out = Vec::new();
    let mut point = alloc::vec![0u64; nvars];
    for lead in 0..nvars {
        for slot in point.iter_mut() {
            *slot = 0;
        }
        point[lead] = 1;
        loop {
            if compiled.iter().all(|c| c.eval(&point) == 0) {
                out.push(point.clone());
            }
            // odometer over the coordinates after the leading 1
            let mut k = nvars;
            let mut carried = true;
            while k > lead + 1 {
                k -= 1;
                point[k] += 1;
                if point[k] < q {
                    carried = false;
                    break;
                }
                point[k] = 0;
            }
            if carried {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The zero locus of the system restricted to the candidate points — used to
/// check that enumerated Plücker images satisfy an ideal.
pub fn vanishes_at(gens: &[Polynomial], point: &PluckerPoint) -> Result<bool> {
    let elems = point.field_elements();
    for g in gens {
        if !g.evaluate(&elems)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
