//! buchberger's algorithm with gebauer-moeller pair pruning, plus the radical
//! membership test used by the rank certificates.
//!
//! bases are reduced and monic, so the basis of an ideal is canonical and two
//! ideals are equal iff their reduced bases are equal.

use std::cell::OnceCell;

use crate::limits::{Limits, ResourceError};
use crate::poly::{Monomial, Poly};
use crate::scalar::Scalar;

/// polynomial ideal with a lazily computed reduced groebner basis.
#[derive(Debug, Clone)]
pub struct Ideal<S> {
    arity: usize,
    gens: Vec<Poly<S>>,
    basis: OnceCell<Vec<Poly<S>>>,
}

impl<S: Scalar> Ideal<S> {
    /// build from generators, dropping zeros and duplicates.
    pub fn new(arity: usize, gens: impl IntoIterator<Item = Poly<S>>) -> Self {
        let mut kept: Vec<Poly<S>> = Vec::new();
        for g in gens {
            assert_eq!(g.arity(), arity, "generator arity mismatch");
            if g.is_zero() {
                continue;
            }
            let g = g.monic();
            if !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ideal { arity, gens: kept, basis: OnceCell::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Poly<S>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// reduced groebner basis, cached after the first successful run.
    pub fn groebner_basis(&self, limits: &Limits) -> Result<&[Poly<S>], ResourceError> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = buchberger(self.arity, &self.gens, limits)?;
        let _ = self.basis.set(b);
        Ok(self.basis.get().expect("basis just set"))
    }

    /// unique remainder of `p` modulo the ideal.
    pub fn normal_form(&self, p: &Poly<S>, limits: &Limits) -> Result<Poly<S>, ResourceError> {
        let basis = self.groebner_basis(limits)?;
        Ok(reduce_full(p, basis))
    }

    pub fn contains(&self, p: &Poly<S>, limits: &Limits) -> Result<bool, ResourceError> {
        Ok(self.normal_form(p, limits)?.is_zero())
    }

    /// whether the ideal is the whole ring.
    pub fn is_unit_ideal(&self, limits: &Limits) -> Result<bool, ResourceError> {
        let basis = self.groebner_basis(limits)?;
        Ok(basis.len() == 1 && basis[0].is_constant() && !basis[0].is_zero())
    }

    /// radical membership by the rabinowitsch trick: `p` vanishes on the whole
    /// vanishing locus (over the algebraic closure) iff `1` lies in
    /// `self + <1 - t p>` with `t` a fresh variable.
    pub fn radical_contains(&self, p: &Poly<S>, limits: &Limits) -> Result<bool, ResourceError> {
        assert_eq!(p.arity(), self.arity, "polynomial arity mismatch");
        if p.is_zero() {
            return Ok(true);
        }
        let ext = self.arity + 1;
        let mut gens: Vec<Poly<S>> = self.gens.iter().map(|g| g.extended(ext)).collect();
        let t = Poly::var(ext, ext - 1);
        gens.push(Poly::one(ext).sub(&t.mul(&p.extended(ext))));
        Ideal::new(ext, gens).is_unit_ideal(limits)
    }

    /// true iff the vanishing locus over the algebraic closure is contained in
    /// the origin, i.e. every variable lies in the radical.
    pub fn vanishes_only_at_origin(&self, limits: &Limits) -> Result<bool, ResourceError> {
        for i in 0..self.arity {
            if !self.radical_contains(&Poly::var(self.arity, i), limits)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// per-variable radical membership, for certificate reporting.
    pub fn variable_memberships(&self, limits: &Limits) -> Result<Vec<bool>, ResourceError> {
        (0..self.arity)
            .map(|i| self.radical_contains(&Poly::var(self.arity, i), limits))
            .collect()
    }

    /// ideal equality through reduced bases.
    pub fn same_ideal(&self, other: &Ideal<S>, limits: &Limits) -> Result<bool, ResourceError> {
        if self.arity != other.arity {
            return Ok(false);
        }
        Ok(self.groebner_basis(limits)? == other.groebner_basis(limits)?)
    }
}

/// fully reduce `p` by `basis`: no term of the result is divisible by any
/// basis leading monomial.
fn reduce_full<S: Scalar>(p: &Poly<S>, basis: &[Poly<S>]) -> Poly<S> {
    let arity = p.arity();
    let mut rem = p.clone();
    let mut out = Poly::zero(arity);
    'outer: while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
        for b in basis {
            let (bm, bc) = b.leading().expect("basis elements are nonzero");
            if bm.divides(&rm) {
                let qm = bm.div_into(&rm);
                let qc = rc.clone() / bc.clone();
                rem = rem.sub(&b.mul_term(&qm, &qc));
                continue 'outer;
            }
        }
        // leading term irreducible; move it to the result
        out.add_term(rm.clone(), rc.clone());
        let mut single = Poly::zero(arity);
        single.add_term(rm, rc);
        rem = rem.sub(&single);
    }
    out
}

fn spoly<S: Scalar>(f: &Poly<S>, g: &Poly<S>) -> Poly<S> {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.div_into(&l), &(S::one() / fc.clone()));
    let b = g.mul_term(&gm.div_into(&l), &(S::one() / gc.clone()));
    a.sub(&b)
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// gebauer-moeller update: prune the pending pair set after appending the
/// basis element with index `t`.
fn update_pairs<S: Scalar>(pairs: &mut Vec<Pair>, basis: &[Poly<S>], t: usize) {
    let lm = |k: usize| basis[k].leading().expect("nonzero").0;
    let lt = lm(t).clone();
    // candidate pairs with the new element, pruned among themselves: keep only
    // minimal lcms, and of equal lcms keep one representative.
    let cand: Vec<Pair> = (0..t)
        .map(|i| Pair { i, j: t, lcm: lm(i).lcm(&lt) })
        .collect();
    let mut keep: Vec<Pair> = Vec::new();
    for (n, p) in cand.iter().enumerate() {
        let dominated = cand.iter().enumerate().any(|(m, q)| {
            if m == n {
                return false;
            }
            if q.lcm == p.lcm {
                // equal lcms: keep the first
                m < n
            } else {
                q.lcm.divides(&p.lcm)
            }
        });
        if !dominated {
            keep.push(p.clone());
        }
    }
    // product criterion: coprime leading monomials reduce to zero anyway
    keep.retain(|p| !lm(p.i).is_coprime_with(&lt));
    // chain criterion on the old pairs
    pairs.retain(|p| {
        !(lt.divides(&p.lcm) && lm(p.i).lcm(&lt) != p.lcm && lm(p.j).lcm(&lt) != p.lcm)
    });
    pairs.extend(keep);
}

/// reduced groebner basis of the given generators.
pub fn buchberger<S: Scalar>(
    arity: usize,
    gens: &[Poly<S>],
    limits: &Limits,
) -> Result<Vec<Poly<S>>, ResourceError> {
    let mut basis: Vec<Poly<S>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut reductions = 0usize;

    let mut pending: Vec<Poly<S>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    // feeding small generators first keeps reducers cheap
    pending.sort_by(|a, b| {
        let la = a.leading().expect("nonzero").0;
        let lb = b.leading().expect("nonzero").0;
        la.cmp(lb)
    });

    for g in pending {
        let r = reduce_full(&g, &basis);
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic());
        let t = basis.len() - 1;
        update_pairs(&mut pairs, &basis, t);
        if let Some(one) = unit_shortcut(&basis) {
            return Ok(one);
        }

        while let Some(best) = select_pair(&pairs) {
            let p = pairs.swap_remove(best);
            reductions += 1;
            if reductions > limits.max_spairs {
                return Err(ResourceError::new("s-polynomial reductions", limits.max_spairs));
            }
            let r = reduce_full(&spoly(&basis[p.i], &basis[p.j]), &basis);
            if r.is_zero() {
                continue;
            }
            basis.push(r.monic());
            let t = basis.len() - 1;
            update_pairs(&mut pairs, &basis, t);
            if let Some(one) = unit_shortcut(&basis) {
                return Ok(one);
            }
        }
    }

    Ok(reduce_basis(arity, basis))
}

/// once a nonzero constant appears the ideal is the whole ring.
fn unit_shortcut<S: Scalar>(basis: &[Poly<S>]) -> Option<Vec<Poly<S>>> {
    basis
        .iter()
        .any(|b| b.is_constant() && !b.is_zero())
        .then(|| vec![Poly::one(basis[0].arity())])
}

/// normal selection: smallest lcm in the monomial order.
fn select_pair(pairs: &[Pair]) -> Option<usize> {
    pairs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.lcm.cmp(&b.lcm))
        .map(|(n, _)| n)
}

/// minimalize and autoreduce, yielding the canonical reduced basis sorted by
/// leading monomial.
fn reduce_basis<S: Scalar>(arity: usize, mut basis: Vec<Poly<S>>) -> Vec<Poly<S>> {
    // drop elements whose leading monomial another element divides
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let li = basis[i].leading().expect("nonzero").0;
            let lj = basis[j].leading().expect("nonzero").0;
            if lj.divides(li) && (lj != li || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Poly<S>> =
        basis.drain(..).zip(keep).filter_map(|(b, k)| k.then_some(b)).collect();
    // reduce each element by the others until stable
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Poly<S>> = minimal
                .iter()
                .enumerate()
                .filter_map(|(j, b)| (j != i).then(|| b.clone()))
                .collect();
            let r = reduce_full(&minimal[i], &others).monic();
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        minimal.retain(|b| !b.is_zero());
        if !changed {
            break;
        }
    }
    minimal.sort_by(|a, b| {
        a.leading().expect("nonzero").0.cmp(b.leading().expect("nonzero").0)
    });
    let _ = arity;
    minimal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rint, Rat};

    fn x() -> Poly<Rat> {
        Poly::var(2, 0)
    }

    fn y() -> Poly<Rat> {
        Poly::var(2, 1)
    }

    fn default_limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn basis_of_principal_ideal() {
        let i = Ideal::new(2, vec![x().mul(&x()).scale(&rint(3))]);
        let b = i.groebner_basis(&default_limits()).unwrap();
        assert_eq!(b, &[x().mul(&x())]); // monic
    }

    #[test]
    fn membership_in_monomial_ideal() {
        let i = Ideal::new(2, vec![x().mul(&x()), y().mul(&y())]);
        let l = default_limits();
        let p = x().mul(&x()).mul(&y()).add(&y().mul(&y())); // x^2 y + y^2
        assert!(i.contains(&p, &l).unwrap());
        assert!(!i.contains(&x().mul(&y()), &l).unwrap());
    }

    #[test]
    fn normal_form_is_reduced() {
        let i = Ideal::new(2, vec![x().mul(&x()), y().mul(&y())]);
        let l = default_limits();
        let p = x().mul(&x()).add(&x().mul(&y())).add(&y());
        let nf = i.normal_form(&p, &l).unwrap();
        assert_eq!(nf, x().mul(&y()).add(&y()));
    }

    #[test]
    fn radical_membership_by_rabinowitsch() {
        // (x + y)^3 lies in <x^2, y^2>, so x + y lies in the radical
        let i = Ideal::new(2, vec![x().mul(&x()), y().mul(&y())]);
        let l = default_limits();
        let s = x().add(&y());
        assert!(i.contains(&s.mul(&s).mul(&s), &l).unwrap());
        assert!(i.radical_contains(&s, &l).unwrap());
        assert!(i.radical_contains(&x(), &l).unwrap());
        assert!(!i.radical_contains(&x().add(&Poly::one(2)), &l).unwrap());
    }

    #[test]
    fn vanishing_locus_tests() {
        let l = default_limits();
        // <x^2, y^2> vanishes only at the origin
        let i = Ideal::new(2, vec![x().mul(&x()), y().mul(&y())]);
        assert!(i.vanishes_only_at_origin(&l).unwrap());
        // <x> vanishes on the whole y-axis
        let j = Ideal::new(2, vec![x()]);
        assert!(!j.vanishes_only_at_origin(&l).unwrap());
        assert_eq!(j.variable_memberships(&l).unwrap(), vec![true, false]);
        // the zero ideal vanishes everywhere
        let z = Ideal::<Rat>::new(2, Vec::new());
        assert!(!z.vanishes_only_at_origin(&l).unwrap());
    }

    #[test]
    fn resource_limit_reported() {
        let tight = Limits { max_minors: 0, max_spairs: 0 };
        // this ideal needs at least one s-pair reduction
        let i = Ideal::new(2, vec![x().mul(&x()).add(&y()), x().mul(&y()).add(&x())]);
        match i.groebner_basis(&tight) {
            Err(ResourceError::Limit { .. }) => {}
            other => panic!("expected resource limit, got {other:?}"),
        }
    }

    #[test]
    fn reduced_basis_is_canonical() {
        // <x^2 - 1, xy - 1> has reduced basis {x - y, y^2 - 1}
        let l = default_limits();
        let g1 = x().mul(&x()).sub(&Poly::one(2));
        let g2 = x().mul(&y()).sub(&Poly::one(2));
        let i = Ideal::new(2, vec![g1, g2]);
        let b = i.groebner_basis(&l).unwrap();
        let expected = vec![x().sub(&y()), y().mul(&y()).sub(&Poly::one(2))];
        assert_eq!(b, expected.as_slice());
        // same ideal from a different generating set
        let j = Ideal::new(2, vec![expected[0].clone(), expected[1].clone()]);
        assert!(i.same_ideal(&j, &l).unwrap());
    }
}
