//! Buchberger-based Gröbner bases and the ideal-theoretic toolbox built on
//! them: normal forms, elimination ideals, combinatorial Krull dimension,
//! projective closures, Jacobian singular ideals and quadric ranks.
//!
//! The engine is deliberately plain: normal pair selection (minimal lcm
//! degree first) with Buchberger's coprimality and chain criteria, full
//! inter-reduction at the end, and an S-polynomial zero-reduction certificate
//! run on every basis before it is returned. Identical inputs produce
//! byte-identical bases.

use crate::error::Error;
use crate::field::FieldElement;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, RingCtx};
use crate::Result;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// An ideal with an optional cached reduced Gröbner basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<RingCtx>,
    generators: Vec<Polynomial>,
    cached: Option<GroebnerBasis>,
}

impl Ideal {
    /// Zero generators are dropped on construction.
    pub fn new(ring: &Arc<RingCtx>, generators: Vec<Polynomial>) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring: ring.clone(),
            generators,
            cached: None,
        }
    }

    pub fn ring(&self) -> &Arc<RingCtx> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis under `order`, computed on demand and cached.
    pub fn groebner(&mut self, order: MonomialOrder) -> Result<&GroebnerBasis> {
        let stale = match &self.cached {
            Some(gb) => gb.order() != order,
            None => true,
        };
        if stale {
            let gb = buchberger(self, order)?;
            self.cached = Some(gb);
        }
        Ok(self.cached.as_ref().unwrap())
    }

    pub fn groebner_cached(&self) -> Option<&GroebnerBasis> {
        self.cached.as_ref()
    }

    pub(crate) fn with_cached(mut self, gb: GroebnerBasis) -> Self {
        self.cached = Some(gb);
        self
    }
}

/// A reduced, monic Gröbner basis together with the order it was computed
/// under. Unique for a given ideal and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<RingCtx>,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<RingCtx> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True when the basis contains a nonzero constant.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    /// Re-check the Buchberger certificate: every S-polynomial of basis pairs
    /// reduces to zero, leading monomials are pairwise non-divisible, all
    /// elements are monic and all tails are reduced.
    pub fn certify(&self) -> bool {
        for g in &self.elements {
            match g.leading() {
                None => return false,
                Some((_, c)) => {
                    if !c.is_one() {
                        return false;
                    }
                }
            }
        }
        for (i, g) in self.elements.iter().enumerate() {
            for (j, h) in self.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lm_h = h.leading_monomial().unwrap();
                // no term of g (leading or not) may be divisible by LM(h)
                if g.terms().iter().any(|(m, _)| lm_h.divides(m)) {
                    return false;
                }
            }
        }
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j]);
                if !reduce(&s, &self.elements, &self.ring).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    // both monic by construction
    let lm_f = f.leading_monomial().expect("nonzero");
    let lm_g = g.leading_monomial().expect("nonzero");
    let lcm = lm_f.lcm(lm_g);
    let uf = lcm.try_div(lm_f).unwrap();
    let ug = lcm.try_div(lm_g).unwrap();
    &f.mul_monomial(&uf) - &g.mul_monomial(&ug)
}

/// Remainder of `p` on division by the basis. No term of the result is
/// divisible by any basis leading monomial; the result is zero exactly when
/// `p` lies in the ideal. Reducers are chosen deterministically: smallest
/// leading monomial under the active order, then first in the basis list.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if p.ring().vars() != gb.ring.vars() || p.ring().field() != gb.ring.field() {
        return Err(Error::RingMismatch);
    }
    let p = p.with_ring(&gb.ring)?;
    Ok(reduce(&p, &gb.elements, &gb.ring))
}

fn reduce(p: &Polynomial, basis: &[Polynomial], ring: &Arc<RingCtx>) -> Polynomial {
    let order = ring.order();
    let mut f = p.clone();
    let mut rem: Vec<(Monomial, FieldElement)> = Vec::new();
    while let Some((lm, lc)) = f.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let mut best: Option<usize> = None;
        for (i, g) in basis.iter().enumerate() {
            let glm = match g.leading_monomial() {
                Some(m) => m,
                None => continue,
            };
            if glm.divides(&lm) {
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        let blm = basis[b].leading_monomial().unwrap();
                        if order.cmp(glm, blm) == Ordering::Less {
                            best = Some(i);
                        }
                    }
                }
            }
        }
        if let Some(i) = best {
            let g = &basis[i];
            let quo = lm.try_div(g.leading_monomial().unwrap()).unwrap();
            // g is monic: f -= lc · quo · g
            f = &f - &g.mul_monomial(&quo).scale(&lc);
            continue;
        }
        rem.push((lm, lc));
        f = f.tail();
    }
    // remainder monomials were appended in strictly descending order
    Polynomial::from_terms(ring, rem)
}

/// Reduced Gröbner basis of `ideal` under `order` by Buchberger's algorithm.
/// The zero ideal yields the empty basis. Requires field coefficients.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis> {
    if !ideal.ring().field().is_field() {
        return Err(Error::NotAField);
    }
    let ring = if ideal.ring().order() == order {
        ideal.ring().clone()
    } else {
        ideal.ring().with_order(order)
    };
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        if g.is_zero() {
            continue;
        }
        basis.push(g.with_ring(&ring)?.monic()?);
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();

    while !pairs.is_empty() {
        // normal selection strategy: minimal lcm degree, then the lcm under
        // the order, then indices
        let mut sel = 0;
        let mut sel_key = pair_lcm(&basis, pairs[0]);
        for idx in 1..pairs.len() {
            let key = pair_lcm(&basis, pairs[idx]);
            let better = match key.deg().cmp(&sel_key.deg()) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => match order.cmp(&key, &sel_key) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => pairs[idx] < pairs[sel],
                },
            };
            if better {
                sel = idx;
                sel_key = key;
            }
        }
        let (i, j) = pairs.remove(sel);
        done.insert((i, j));

        let lm_i = basis[i].leading_monomial().unwrap();
        let lm_j = basis[j].leading_monomial().unwrap();
        // first criterion: coprime leading monomials
        if lm_i.coprime(lm_j) {
            continue;
        }
        // chain criterion: an already-treated third element divides the lcm
        let lcm = lm_i.lcm(lm_j);
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            if g.leading_monomial().unwrap().divides(&lcm)
                && done.contains(&pair_key(i, k))
                && done.contains(&pair_key(j, k))
            {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce(&s, &basis, &ring);
        if !r.is_zero() {
            let r = r.monic()?;
            let t = basis.len();
            basis.push(r);
            for k in 0..t {
                pairs.push((k, t));
            }
        }
    }

    let elements = reduce_basis(basis, &ring);
    let gb = GroebnerBasis { ring, elements };
    assert!(gb.certify(), "S-polynomial certificate failed");
    Ok(gb)
}

fn pair_key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn pair_lcm(basis: &[Polynomial], (i, j): (usize, usize)) -> Monomial {
    basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap())
}

/// Minimalize (drop elements whose leading monomial is divisible by another)
/// and inter-reduce tails, producing the unique reduced basis sorted by
/// ascending leading monomial.
fn reduce_basis(mut basis: Vec<Polynomial>, ring: &Arc<RingCtx>) -> Vec<Polynomial> {
    let order = ring.order();
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| {
        order.cmp(
            a.leading_monomial().unwrap(),
            b.leading_monomial().unwrap(),
        )
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            continue;
        }
        minimal.push(g);
    }
    let n = minimal.len();
    let mut reduced: Vec<Polynomial> = minimal.clone();
    for i in 0..n {
        let others: Vec<Polynomial> = reduced
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        reduced[i] = reduce(&minimal[i], &others, ring);
    }
    reduced
}

/// Elimination ideal: intersect with the subring of the trailing variables.
/// The ring must carry a block-elimination order whose dominant block is
/// exactly `drop_vars`; the result lives in a fresh grevlex ring on the
/// remaining variables and comes with its (inherited) reduced basis cached.
pub fn eliminate(ideal: &mut Ideal, drop_vars: &[&str]) -> Result<Ideal> {
    let ring = ideal.ring().clone();
    let head = match ring.order() {
        MonomialOrder::Block { head } => head,
        _ => return Err(Error::OrderMismatch),
    };
    if head != drop_vars.len() {
        return Err(Error::OrderMismatch);
    }
    let dropped: BTreeSet<&str> = drop_vars.iter().copied().collect();
    for name in &ring.vars()[..head] {
        if !dropped.contains(name.as_str()) {
            return Err(Error::OrderMismatch);
        }
    }

    let gb = ideal.groebner(ring.order())?;
    let kept: Vec<String> = ring.vars()[head..].to_vec();
    let sub_ring = RingCtx::new(kept, MonomialOrder::GrevLex, ring.field().clone());
    let mut kept_polys = Vec::new();
    for g in gb.elements() {
        if (0..head).all(|i| g.free_of(i)) {
            kept_polys.push(g.embed(&sub_ring)?);
        }
    }
    // the dominant block makes the surviving elements a reduced grevlex basis
    // of the elimination ideal
    let cached = GroebnerBasis {
        ring: sub_ring.clone(),
        elements: kept_polys.clone(),
    };
    debug_assert!(cached.certify());
    Ok(Ideal::new(&sub_ring, kept_polys).with_cached(cached))
}

/// Krull dimension of the quotient ring by the staircase method: the maximal
/// size of a variable set containing no basis leading monomial. Returns −1
/// for the unit ideal.
pub fn krull_dim(gb: &GroebnerBasis) -> i64 {
    let v = gb.ring.nvars();
    assert!(v <= 64, "staircase method limited to 64 variables");
    let lm_masks: Vec<u64> = gb
        .elements
        .iter()
        .map(|g| g.leading_monomial().unwrap().support_mask())
        .collect();

    // depth-first over variable subsets; independence is hereditary
    fn grow(idx: usize, v: usize, mask: u64, count: i64, lm: &[u64], best: &mut i64) {
        if count + (v - idx) as i64 <= *best {
            return;
        }
        if idx == v {
            if count > *best {
                *best = count;
            }
            return;
        }
        let with = mask | (1 << idx);
        if lm.iter().all(|&m| m & !with != 0) {
            grow(idx + 1, v, with, count + 1, lm, best);
        }
        grow(idx + 1, v, mask, count, lm, best);
    }

    let mut best: i64 = -1;
    // the empty set is independent unless some leading monomial is constant
    if lm_masks.iter().all(|&m| m != 0) {
        best = 0;
        grow(0, v, 0, 0, &lm_masks, &mut best);
    }
    best
}

/// Projective closure of an affine ideal: homogenize every element of a
/// grevlex reduced basis with `hvar`. When `hvar` is not a ring variable it
/// is added in front; dehomogenizing the output at `hvar = 1` recovers the
/// input ideal.
pub fn projective_closure(affine: &mut Ideal, hvar: &str) -> Result<Ideal> {
    let ring = affine.ring().clone();
    if !ring.order().is_graded() {
        return Err(Error::OrderMismatch);
    }
    let target = match ring.var_index(hvar) {
        Some(idx) => {
            for g in affine.generators() {
                if !g.free_of(idx) {
                    return Err(Error::HomogenizationVarPresent(hvar.to_string()));
                }
            }
            ring.clone()
        }
        None => {
            let mut vars = Vec::with_capacity(ring.nvars() + 1);
            vars.push(hvar.to_string());
            vars.extend(ring.vars().iter().cloned());
            RingCtx::new(vars, MonomialOrder::GrevLex, ring.field().clone())
        }
    };
    let gb = affine.groebner(MonomialOrder::GrevLex)?;
    let mut homogenized = Vec::with_capacity(gb.len());
    for g in gb.elements() {
        homogenized.push(g.embed(&target)?.homogenize(hvar)?);
    }
    Ok(Ideal::new(&target, homogenized))
}

/// Ideal of the singular locus by the Jacobian criterion: the input ideal
/// together with the `codim × codim` minors of the Jacobian matrix of its
/// generators.
///
/// Computed from the reduced grevlex basis. Its linear elements have distinct
/// leading variables with unit coefficient, and the remaining elements do not
/// involve those variables at all, so Laplace expansion along the constant
/// Jacobian rows of the linear part turns the full minor set into the
/// `(codim − l) × (codim − l)` minors of the nonlinear block — the same
/// ideal with far fewer generators. The minor set is inter-reduced before it
/// is returned.
pub fn singular_ideal(homog: &mut Ideal, codim: usize) -> Result<Ideal> {
    let ring = homog.ring().clone();
    for g in homog.generators() {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
    }
    let generators = homog.generators().to_vec();
    let gb = homog.groebner(MonomialOrder::GrevLex)?;
    let gb_ring = gb.ring().clone();

    let mut linear: Vec<&Polynomial> = Vec::new();
    let mut nonlinear: Vec<&Polynomial> = Vec::new();
    for g in gb.elements() {
        if g.total_deg() <= 1 {
            linear.push(g);
        } else {
            nonlinear.push(g);
        }
    }
    if codim < linear.len() {
        return Err(Error::CodimOutOfRange {
            codim,
            linear: linear.len(),
        });
    }
    let m = codim - linear.len();
    if m == 0 {
        // linear variety: empty singular locus
        let mut gens = generators;
        gens.push(Polynomial::one(&ring));
        let unit = GroebnerBasis {
            ring: ring.with_order(MonomialOrder::GrevLex),
            elements: alloc::vec![Polynomial::one(&ring)],
        };
        return Ok(Ideal::new(&ring, gens).with_cached(unit));
    }

    let lead_vars: BTreeSet<usize> = linear
        .iter()
        .map(|g| {
            let lm = g.leading_monomial().unwrap();
            lm.exps().iter().position(|&e| e > 0).unwrap()
        })
        .collect();
    let kept: Vec<usize> = (0..gb_ring.nvars())
        .filter(|i| !lead_vars.contains(i))
        .collect();
    debug_assert!(nonlinear
        .iter()
        .all(|g| lead_vars.iter().all(|&i| g.free_of(i))));

    // Jacobian of the nonlinear part over the kept columns
    let jac: Vec<Vec<Polynomial>> = nonlinear
        .iter()
        .map(|g| kept.iter().map(|&c| g.derivative(c)).collect())
        .collect();

    let mut minors: Vec<Polynomial> = Vec::new();
    let rows = jac.len();
    let cols = kept.len();
    if rows >= m && cols >= m {
        for row_set in combinations(rows, m) {
            for col_set in combinations(cols, m) {
                let sub: Vec<Vec<Polynomial>> = row_set
                    .iter()
                    .map(|&r| col_set.iter().map(|&c| jac[r][c].clone()).collect())
                    .collect();
                let d = crate::matrix::symbolic_det(&sub)?;
                if !d.is_zero() {
                    let r = normal_form(&d, gb)?;
                    if !r.is_zero() {
                        minors.push(r);
                    }
                }
            }
        }
    }
    let minors = autoreduce(minors, &gb_ring)?;
    let mut gens: Vec<Polynomial> = generators;
    for p in minors {
        gens.push(p.embed(&ring)?);
    }
    Ok(Ideal::new(&ring, gens))
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // rightmost slot that can still advance
        let mut i = k;
        while i > 0 {
            i -= 1;
            if cur[i] != i + n - k {
                cur[i] += 1;
                for j in (i + 1)..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
    }
}

/// Inter-reduce a generating set (not necessarily a basis): repeatedly
/// replace each element by its normal form modulo the others, dropping zeros,
/// until stable. Keeps the generated ideal.
fn autoreduce(polys: Vec<Polynomial>, ring: &Arc<RingCtx>) -> Result<Vec<Polynomial>> {
    let order = ring.order();
    let mut set: Vec<Polynomial> = Vec::new();
    for p in polys {
        if !p.is_zero() {
            set.push(p.monic()?);
        }
    }
    set.sort_by(|a, b| {
        order.cmp(
            a.leading_monomial().unwrap(),
            b.leading_monomial().unwrap(),
        )
    });
    set.dedup();
    loop {
        let mut changed = false;
        let mut next: Vec<Polynomial> = Vec::new();
        for i in 0..set.len() {
            let others: Vec<Polynomial> = next
                .iter()
                .chain(set[(i + 1)..].iter())
                .cloned()
                .collect();
            let r = reduce(&set[i], &others, ring);
            if r != set[i] {
                changed = true;
            }
            if !r.is_zero() {
                next.push(r.monic()?);
            }
        }
        next.sort_by(|a, b| {
            order.cmp(
                a.leading_monomial().unwrap(),
                b.leading_monomial().unwrap(),
            )
        });
        next.dedup();
        let stable = !changed && next == set;
        set = next;
        if stable {
            return Ok(set);
        }
    }
}

/// Rank of the symmetric Gram matrix of a homogeneous quadric. Defined over
/// ℚ and F_p with p ≠ 2; rejects characteristic 2 and dual coefficients.
pub fn quadric_rank(q: &Polynomial) -> Result<usize> {
    let ring = q.ring().clone();
    let field = ring.field().clone();
    if !field.is_field() {
        return Err(Error::NotAField);
    }
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if q.is_zero() || !q.is_homogeneous() || q.total_deg() != 2 {
        return Err(Error::NotQuadratic);
    }
    let n = ring.nvars();
    let half = FieldElement::from_int(&field, 2).inv()?;
    let mut gram = alloc::vec![alloc::vec![field.zero(); n]; n];
    for (m, c) in q.terms() {
        let support: Vec<(usize, u32)> = m
            .exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
            .collect();
        match support.as_slice() {
            [(i, 2)] => gram[*i][*i] = c.clone(),
            [(i, 1), (j, 1)] => {
                let h = c.mul(&half);
                gram[*i][*j] = h.clone();
                gram[*j][*i] = h;
            }
            _ => unreachable!("degree-2 homogeneous term"),
        }
    }
    Ok(matrix_rank(gram))
}

/// Row rank over a field by Gauss-Jordan elimination.
pub fn matrix_rank(mut m: Vec<Vec<FieldElement>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let pivot = match (row..rows).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        m.swap(row, pivot);
        let inv = m[row][col].inv().expect("nonzero pivot in a field");
        for c in 0..cols {
            m[row][c] = m[row][c].mul(&inv);
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..cols {
                    let sub = m[row][c].mul(&factor);
                    m[r][c] = m[r][c].sub(&sub);
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldKind;
    use alloc::vec;

    fn ring(vars: &[&str], order: MonomialOrder, field: FieldKind) -> Arc<RingCtx> {
        RingCtx::new(vars.iter().map(|v| v.to_string()).collect(), order, field)
    }

    fn v(r: &Arc<RingCtx>, name: &str) -> Polynomial {
        Polynomial::var(r, name).unwrap()
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let r = ring(&["x", "y"], MonomialOrder::GrevLex, FieldKind::Rational);
        let g = &v(&r, "x") - &v(&r, "y");
        let mut i = Ideal::new(&r, vec![g.clone()]);
        let gb = i.groebner(MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.elements(), &[g]);
    }

    #[test]
    fn zero_ideal_gives_empty_basis() {
        let r = ring(&["x"], MonomialOrder::GrevLex, FieldKind::Rational);
        let mut i = Ideal::new(&r, vec![Polynomial::zero(&r)]);
        let gb = i.groebner(MonomialOrder::GrevLex).unwrap();
        assert!(gb.is_empty());
        assert_eq!(krull_dim(gb), 1);
    }

    #[test]
    fn twisted_cubic_elimination() {
        // eliminate t from ⟨x − t², y − t³⟩: the image is y² − x³
        let r = ring(
            &["t", "x", "y"],
            MonomialOrder::Block { head: 1 },
            FieldKind::Rational,
        );
        let g1 = &v(&r, "x") - &v(&r, "t").pow(2);
        let g2 = &v(&r, "y") - &v(&r, "t").pow(3);
        let mut i = Ideal::new(&r, vec![g1, g2]);
        let mut elim = eliminate(&mut i, &["t"]).unwrap();
        let er = elim.ring().clone();
        let expected = &v(&er, "y").pow(2) - &v(&er, "x").pow(3);
        let gb = elim.groebner(MonomialOrder::GrevLex).unwrap();
        assert!(normal_form(&expected, gb).unwrap().is_zero());
        assert_eq!(gb.len(), 1);
        // oracle: each surviving generator vanishes under the parametrization
        let tr = ring(&["t"], MonomialOrder::GrevLex, FieldKind::Rational);
        let t = v(&tr, "t");
        let mut b = alloc::collections::BTreeMap::new();
        b.insert("x".to_string(), crate::poly::Binding::Poly(t.pow(2)));
        b.insert("y".to_string(), crate::poly::Binding::Poly(t.pow(3)));
        for g in elim.generators() {
            assert!(g.substitute(&b, &tr).unwrap().is_zero());
        }
    }

    #[test]
    fn free_variable_eliminates_to_zero() {
        // ⟨x − t⟩ ∩ k[x] = 0
        let r = ring(
            &["t", "x"],
            MonomialOrder::Block { head: 1 },
            FieldKind::Rational,
        );
        let g = &v(&r, "x") - &v(&r, "t");
        let mut i = Ideal::new(&r, vec![g]);
        let elim = eliminate(&mut i, &["t"]).unwrap();
        assert!(elim.generators().is_empty());
    }

    #[test]
    fn eliminate_requires_matching_block() {
        let r = ring(&["t", "x"], MonomialOrder::GrevLex, FieldKind::Rational);
        let mut i = Ideal::new(&r, vec![v(&r, "x")]);
        assert!(matches!(eliminate(&mut i, &["t"]), Err(Error::OrderMismatch)));
    }

    #[test]
    fn grassmannian_slice_reduces_to_cone_quadric() {
        // ⟨p24, p14 + p23, p12·p34 − p13·p24 + p14·p23⟩ equals
        // ⟨p24, p14 + p23, p12·p34 − p14²⟩
        let names = ["p12", "p13", "p14", "p23", "p24", "p34"];
        let r = ring(&names, MonomialOrder::GrevLex, FieldKind::Rational);
        let rel = &(&(&v(&r, "p12") * &v(&r, "p34")) - &(&v(&r, "p13") * &v(&r, "p24")))
            + &(&v(&r, "p14") * &v(&r, "p23"));
        let mut i = Ideal::new(
            &r,
            vec![v(&r, "p24"), &v(&r, "p14") + &v(&r, "p23"), rel],
        );
        let gb = i.groebner(MonomialOrder::GrevLex).unwrap().clone();
        assert_eq!(gb.len(), 3);
        let quadric = &(&v(&r, "p12") * &v(&r, "p34")) - &v(&r, "p14").pow(2);
        for g in [&v(&r, "p24"), &(&v(&r, "p14") + &v(&r, "p23")), &quadric] {
            assert!(normal_form(g, &gb).unwrap().is_zero());
        }
        // membership of the generators, non-membership of 1
        for g in i.generators() {
            assert!(normal_form(g, &gb).unwrap().is_zero());
        }
        assert!(!normal_form(&Polynomial::one(&r), &gb).unwrap().is_zero());
    }

    #[test]
    fn krull_dim_examples() {
        // ⟨xy⟩ has dimension 1; the zero ideal in 2 variables has dimension 2
        let r = ring(&["x", "y"], MonomialOrder::GrevLex, FieldKind::Rational);
        let mut i = Ideal::new(&r, vec![&v(&r, "x") * &v(&r, "y")]);
        assert_eq!(krull_dim(i.groebner(MonomialOrder::GrevLex).unwrap()), 1);
        let mut z = Ideal::new(&r, vec![]);
        assert_eq!(krull_dim(z.groebner(MonomialOrder::GrevLex).unwrap()), 2);
        let mut unit = Ideal::new(&r, vec![Polynomial::one(&r)]);
        assert_eq!(krull_dim(unit.groebner(MonomialOrder::GrevLex).unwrap()), -1);
    }

    #[test]
    fn closure_of_parabola() {
        // closure of ⟨p34 − p14²⟩ with hvar p12 is ⟨p12·p34 − p14²⟩
        let r = ring(&["p14", "p34"], MonomialOrder::GrevLex, FieldKind::Rational);
        let mut affine = Ideal::new(&r, vec![&v(&r, "p34") - &v(&r, "p14").pow(2)]);
        let closure = projective_closure(&mut affine, "p12").unwrap();
        let cr = closure.ring().clone();
        assert_eq!(cr.vars()[0], "p12");
        // monic form: the leading monomial is p14²
        let expected = &v(&cr, "p14").pow(2) - &(&v(&cr, "p12") * &v(&cr, "p34"));
        assert_eq!(closure.generators(), core::slice::from_ref(&expected));
        // round trip: dehomogenizing regenerates the affine ideal
        let mut back = Vec::new();
        for g in closure.generators() {
            back.push(g.dehomogenize("p12").unwrap());
        }
        let mut affine2 = Ideal::new(&cr, back);
        let gb2 = affine2.groebner(MonomialOrder::GrevLex).unwrap().clone();
        for g in affine.generators() {
            assert!(normal_form(&g.embed(&cr).unwrap(), &gb2).unwrap().is_zero());
        }
    }

    #[test]
    fn closure_fixes_homogeneous_input() {
        let r = ring(&["h", "x", "y"], MonomialOrder::GrevLex, FieldKind::Rational);
        let lin = vec![v(&r, "x"), &v(&r, "y") + &v(&r, "x")];
        let mut affine = Ideal::new(&r, lin.clone());
        let closure = projective_closure(&mut affine, "h").unwrap();
        let mut c = Ideal::new(closure.ring(), closure.generators().to_vec());
        let gb = c.groebner(MonomialOrder::GrevLex).unwrap().clone();
        for g in &lin {
            assert!(normal_form(g, &gb).unwrap().is_zero());
        }
        let mut zero = Ideal::new(&r, vec![]);
        let closure0 = projective_closure(&mut zero, "h").unwrap();
        assert!(closure0.generators().is_empty());
    }

    #[test]
    fn singular_locus_of_quadric_cone() {
        // the cone p12·p34 − p14² inside {p24 = p14 + p23 = 0} ⊂ P⁵ is
        // singular exactly at [0:1:0:0:0:0]
        let names = ["p12", "p13", "p14", "p23", "p24", "p34"];
        let r = ring(&names, MonomialOrder::GrevLex, FieldKind::Rational);
        let quadric = &(&v(&r, "p12") * &v(&r, "p34")) - &v(&r, "p14").pow(2);
        let mut i = Ideal::new(
            &r,
            vec![v(&r, "p24"), &v(&r, "p14") + &v(&r, "p23"), quadric],
        );
        let mut sing = singular_ideal(&mut i, 3).unwrap();
        let gb = sing.groebner(MonomialOrder::GrevLex).unwrap();
        // the reduced basis is every coordinate except p13
        let mut got: Vec<String> = gb.elements().iter().map(|g| alloc::format!("{g}")).collect();
        got.sort();
        assert_eq!(got, vec!["p12", "p14", "p23", "p24", "p34"]);
        assert_eq!(krull_dim(sing.groebner_cached().unwrap()), 1);
    }

    #[test]
    fn smooth_quadric_has_empty_singular_locus() {
        let r = ring(
            &["x", "y", "z", "w"],
            MonomialOrder::GrevLex,
            FieldKind::Rational,
        );
        let q = &(&(&v(&r, "x").pow(2) + &v(&r, "y").pow(2)) + &v(&r, "z").pow(2))
            + &v(&r, "w").pow(2);
        let mut i = Ideal::new(&r, vec![q]);
        let mut sing = singular_ideal(&mut i, 1).unwrap();
        let gb = sing.groebner(MonomialOrder::GrevLex).unwrap();
        // only the irrelevant origin survives
        assert_eq!(krull_dim(gb), 0);
    }

    #[test]
    fn linear_ideal_is_smooth() {
        let r = ring(&["x", "y", "z"], MonomialOrder::GrevLex, FieldKind::Rational);
        let mut i = Ideal::new(&r, vec![v(&r, "x"), &v(&r, "y") + &v(&r, "z")]);
        let mut sing = singular_ideal(&mut i, 2).unwrap();
        let gb = sing.groebner(MonomialOrder::GrevLex).unwrap();
        assert!(gb.is_unit_ideal());
        assert_eq!(krull_dim(gb), -1);
    }

    #[test]
    fn quadric_ranks() {
        let r = ring(
            &["x", "y", "z", "w"],
            MonomialOrder::GrevLex,
            FieldKind::Rational,
        );
        let diag = &(&(&v(&r, "x").pow(2) + &v(&r, "y").pow(2)) + &v(&r, "z").pow(2))
            + &v(&r, "w").pow(2);
        assert_eq!(quadric_rank(&diag).unwrap(), 4);
        let hyp = &v(&r, "x") * &v(&r, "y");
        assert_eq!(quadric_rank(&hyp).unwrap(), 2);
        // the cone quadric in 6 coordinates still has rank 3
        let names = ["p12", "p13", "p14", "p23", "p24", "p34"];
        let r6 = ring(&names, MonomialOrder::GrevLex, FieldKind::Rational);
        let cone = &(&v(&r6, "p12") * &v(&r6, "p34")) - &v(&r6, "p14").pow(2);
        assert_eq!(quadric_rank(&cone).unwrap(), 3);
        // characteristic 2 is rejected
        let r2 = ring(&["x", "y"], MonomialOrder::GrevLex, FieldKind::fp(2).unwrap());
        let q2 = &v(&r2, "x") * &v(&r2, "y");
        assert_eq!(quadric_rank(&q2), Err(Error::CharacteristicTwo));
        // non-quadrics are rejected
        assert_eq!(quadric_rank(&v(&r, "x")), Err(Error::NotQuadratic));
    }

    #[test]
    fn normal_form_requires_matching_context() {
        let r1 = ring(&["x"], MonomialOrder::GrevLex, FieldKind::Rational);
        let r2 = ring(&["y"], MonomialOrder::GrevLex, FieldKind::Rational);
        let mut i = Ideal::new(&r1, vec![v(&r1, "x")]);
        let gb = i.groebner(MonomialOrder::GrevLex).unwrap();
        assert_eq!(normal_form(&v(&r2, "y"), gb), Err(Error::RingMismatch));
    }

    #[test]
    fn determinism_byte_identical() {
        let names = ["p12", "p13", "p14", "p23", "p24", "p34"];
        let r = ring(&names, MonomialOrder::GrevLex, FieldKind::fp(32003).unwrap());
        let rel = &(&(&v(&r, "p12") * &v(&r, "p34")) - &(&v(&r, "p13") * &v(&r, "p24")))
            + &(&v(&r, "p14") * &v(&r, "p23"));
        let gens = vec![v(&r, "p24"), &v(&r, "p14") + &v(&r, "p23"), rel];
        let mut i1 = Ideal::new(&r, gens.clone());
        let mut i2 = Ideal::new(&r, gens);
        let s1: Vec<String> = i1
            .groebner(MonomialOrder::GrevLex)
            .unwrap()
            .elements()
            .iter()
            .map(|g| alloc::format!("{g}"))
            .collect();
        let s2: Vec<String> = i2
            .groebner(MonomialOrder::GrevLex)
            .unwrap()
            .elements()
            .iter()
            .map(|g| alloc::format!("{g}"))
            .collect();
        assert_eq!(s1, s2);
    }

    #[test]
    fn combinations_enumerate_lexicographically() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
