//! matrices of polynomials in named coefficient variables.
//!
//! the central object is the one-parameter family `sum_i v_i * A_i` obtained
//! from a tuple of scalar matrices; rank questions about the family become
//! polynomial questions: the generic rank comes from fraction-free gaussian
//! elimination over the polynomial ring, and rank drops are cut out by ideals
//! of minors.

use std::collections::BTreeMap;

use crate::limits::{Limits, ResourceError};
use crate::linalg::SparseMatrix;
use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicOperator<S> {
    rows: usize,
    cols: usize,
    vars: Vec<String>,
    entries: BTreeMap<(usize, usize), Poly<S>>,
}

impl<S: Scalar> SymbolicOperator<S> {
    pub fn zero(rows: usize, cols: usize, vars: Vec<String>) -> Self {
        SymbolicOperator { rows, cols, vars, entries: BTreeMap::new() }
    }

    /// the family `sum_i vars[i] * mats[i]`.
    pub fn linear_combination(vars: Vec<String>, mats: &[&SparseMatrix<S>]) -> Self {
        assert_eq!(vars.len(), mats.len(), "one matrix per variable");
        assert!(!mats.is_empty(), "need at least one matrix");
        let rows = mats[0].rows();
        let cols = mats[0].cols();
        let arity = vars.len();
        let mut op = Self::zero(rows, cols, vars);
        for (i, m) in mats.iter().enumerate() {
            assert_eq!((m.rows(), m.cols()), (rows, cols), "matrix shapes differ");
            for (r, c, v) in m.entries() {
                let mut term = Poly::zero(arity);
                term.add_term(crate::poly::Monomial::var(arity, i), v.clone());
                op.add_to_entry(r, c, &term);
            }
        }
        op
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Poly<S> {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.vars.len()))
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly<S>) {
        assert!(r < self.rows && c < self.cols, "entry outside matrix");
        assert_eq!(p.arity(), self.vars.len(), "entry arity mismatch");
        if p.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), p);
        }
    }

    fn add_to_entry(&mut self, r: usize, c: usize, p: &Poly<S>) {
        let cur = self.get(r, c);
        self.set(r, c, cur.add(p));
    }

    pub fn is_identically_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// specialize the variables to scalars.
    pub fn evaluate(&self, point: &[S]) -> SparseMatrix<S> {
        assert_eq!(point.len(), self.vars.len(), "wrong number of coordinates");
        let mut m = SparseMatrix::zero(self.rows, self.cols);
        for (&(r, c), p) in &self.entries {
            let v = p.eval(point);
            if !v.is_zero() {
                let cur = m.get(r, c);
                m.set(r, c, cur + v);
            }
        }
        m
    }

    /// polynomial matrix product `self * other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "composition shape mismatch");
        assert_eq!(self.vars, other.vars, "composition variable mismatch");
        let mut out = Self::zero(self.rows, other.cols, self.vars.clone());
        for (&(r, k), a) in &self.entries {
            for (&(k2, c), b) in &other.entries {
                if k == k2 {
                    out.add_to_entry(r, c, &a.mul(b));
                }
            }
        }
        out
    }

    pub fn rows_with_entries(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self.entries.keys().map(|&(r, _)| r).collect();
        rows.sort_unstable();
        rows.dedup();
        rows
    }

    pub fn cols_with_entries(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.entries.keys().map(|&(_, c)| c).collect();
        cols.sort_unstable();
        cols.dedup();
        cols
    }

    /// rank over the rational function field in the coefficient variables:
    /// the rank attained on a dense open set of parameter values, and an upper
    /// bound for the rank at every value. computed by fraction-free
    /// (bareiss) elimination, so the answer is exact.
    pub fn generic_rank(&self) -> usize {
        self.generic_rank_capped(&Limits::unbounded())
            .expect("unbounded elimination cannot hit a cap")
    }

    /// rank over the rational function field in the operator's variables,
    /// by fraction-free elimination; an upper bound for the rank at every
    /// point. aborts with [`ResourceError`] when the accumulated polynomial
    /// work exceeds the elimination budget.
    pub fn generic_rank_capped(&self, limits: &Limits) -> Result<usize, ResourceError> {
        let budget = limits.elimination_work();
        let mut work: usize = 0;
        // work on the structurally nonzero block only
        let rs = self.rows_with_entries();
        let cs = self.cols_with_entries();
        let mut a: Vec<Vec<Poly<S>>> = rs
            .iter()
            .map(|&r| cs.iter().map(|&c| self.get(r, c)).collect())
            .collect();
        let n = rs.len();
        let m = cs.len();
        let mut prev = Poly::one(self.vars.len());
        let mut rank = 0;
        while rank < n && rank < m {
            // pivot: any nonzero entry in the trailing block, smallest first
            let mut pivot: Option<(usize, usize)> = None;
            for i in rank..n {
                for j in rank..m {
                    if !a[i][j].is_zero() {
                        let better = match pivot {
                            None => true,
                            Some((pi, pj)) => {
                                a[i][j].num_terms() < a[pi][pj].num_terms()
                            }
                        };
                        if better {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap(rank, pi);
            for row in a.iter_mut() {
                row.swap(rank, pj);
            }
            let piv = a[rank][rank].clone();
            for i in rank + 1..n {
                for j in rank + 1..m {
                    work = work
                        .saturating_add(piv.num_terms() * a[i][j].num_terms())
                        .saturating_add(a[i][rank].num_terms() * a[rank][j].num_terms());
                    if work > budget {
                        return Err(ResourceError::new(
                            "fraction-free elimination work",
                            budget,
                        ));
                    }
                    let num = piv.mul(&a[i][j]).sub(&a[i][rank].mul(&a[rank][j]));
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("bareiss updates divide exactly");
                }
                a[i][rank] = Poly::zero(self.vars.len());
            }
            prev = piv;
            rank += 1;
        }
        Ok(rank)
    }

    /// determinant of a square polynomial matrix; cofactor expansion for
    /// small sizes, fraction-free elimination beyond.
    pub fn determinant(&self) -> Poly<S> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let arity = self.vars.len();
        if n == 0 {
            return Poly::one(arity);
        }
        if n <= 3 {
            return self.det_cofactor();
        }
        self.det_bareiss()
    }

    fn det_cofactor(&self) -> Poly<S> {
        let n = self.rows;
        let arity = self.vars.len();
        match n {
            1 => self.get(0, 0),
            2 => self
                .get(0, 0)
                .mul(&self.get(1, 1))
                .sub(&self.get(0, 1).mul(&self.get(1, 0))),
            3 => {
                let mut acc = Poly::zero(arity);
                let perms: [([usize; 3], bool); 6] = [
                    ([0, 1, 2], true),
                    ([1, 2, 0], true),
                    ([2, 0, 1], true),
                    ([2, 1, 0], false),
                    ([1, 0, 2], false),
                    ([0, 2, 1], false),
                ];
                for (p, pos) in perms {
                    let prod = self.get(0, p[0]).mul(&self.get(1, p[1])).mul(&self.get(2, p[2]));
                    acc = if pos { acc.add(&prod) } else { acc.sub(&prod) };
                }
                acc
            }
            _ => unreachable!(),
        }
    }

    fn det_bareiss(&self) -> Poly<S> {
        let n = self.rows;
        let arity = self.vars.len();
        let mut a: Vec<Vec<Poly<S>>> =
            (0..n).map(|r| (0..n).map(|c| self.get(r, c)).collect()).collect();
        let mut prev = Poly::one(arity);
        let mut sign_flip = false;
        for k in 0..n {
            if a[k][k].is_zero() {
                // row swap to bring in a nonzero pivot
                let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Poly::zero(arity);
                };
                a.swap(k, swap);
                sign_flip = !sign_flip;
            }
            let piv = a[k][k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = piv.mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num.div_exact(&prev).expect("bareiss updates divide exactly");
                }
                a[i][k] = Poly::zero(arity);
            }
            prev = piv;
        }
        let det = a[n - 1][n - 1].clone();
        if sign_flip {
            det.neg()
        } else {
            det
        }
    }

    /// ideal generated by all `k x k` minors, restricted to structurally
    /// nonzero rows and columns (minors through an identically zero row or
    /// column vanish). errors when the enumeration would exceed the cap.
    pub fn minors_ideal(&self, k: usize, limits: &Limits) -> Result<crate::groebner::Ideal<S>, ResourceError> {
        let arity = self.vars.len();
        if k == 0 {
            // the empty minor is 1, so rank >= 0 holds everywhere
            return Ok(crate::groebner::Ideal::new(arity, vec![Poly::one(arity)]));
        }
        let rs = self.rows_with_entries();
        let cs = self.cols_with_entries();
        if rs.len() < k || cs.len() < k {
            return Ok(crate::groebner::Ideal::new(arity, Vec::new()));
        }
        let count = binomial(rs.len(), k).saturating_mul(binomial(cs.len(), k));
        if count > limits.max_minors {
            return Err(ResourceError::new(
                format!("{k}x{k} minors of a {}x{} family", self.rows, self.cols),
                limits.max_minors,
            ));
        }
        let mut gens = Vec::new();
        for row_set in combinations(rs.len(), k) {
            let rows: Vec<usize> = row_set.iter().map(|&i| rs[i]).collect();
            for col_set in combinations(cs.len(), k) {
                let cols: Vec<usize> = col_set.iter().map(|&j| cs[j]).collect();
                let mut sub = SymbolicOperator::zero(k, k, self.vars.clone());
                for (i, &r) in rows.iter().enumerate() {
                    for (j, &c) in cols.iter().enumerate() {
                        sub.set(i, j, self.get(r, c));
                    }
                }
                let d = sub.determinant();
                if !d.is_zero() {
                    gens.push(d);
                }
            }
        }
        Ok(crate::groebner::Ideal::new(arity, gens))
    }

    /// number of minors the `minors_ideal` call would enumerate.
    pub fn minor_count(&self, k: usize) -> usize {
        if k == 0 {
            return 1;
        }
        let rs = self.rows_with_entries().len();
        let cs = self.cols_with_entries().len();
        if rs < k || cs < k {
            return 0;
        }
        binomial(rs, k).saturating_mul(binomial(cs, k))
    }

    pub fn display_entries(&self) -> String {
        let names: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let mut out = String::new();
        for r in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|c| self.get(r, c).display_with(&names)).collect();
            out.push_str(&format!("[{}]\n", row.join(", ")));
        }
        out
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// all k-subsets of 0..n in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 <= n - (k - i) {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rint, Rat};

    fn mat(rows: &[&[i64]]) -> SparseMatrix<Rat> {
        let dense: Vec<Vec<Rat>> =
            rows.iter().map(|r| r.iter().map(|&x| rint(x)).collect()).collect();
        SparseMatrix::from_dense(&dense)
    }

    fn ab_vars() -> Vec<String> {
        vec!["a".into(), "b".into()]
    }

    #[test]
    fn evaluation_matches_combination() {
        let x = mat(&[&[0, 0], &[1, 0]]);
        let y = mat(&[&[0, 1], &[0, 0]]);
        let op = SymbolicOperator::linear_combination(ab_vars(), &[&x, &y]);
        let at = op.evaluate(&[rint(2), rint(3)]);
        assert_eq!(at, mat(&[&[0, 3], &[2, 0]]));
    }

    #[test]
    fn generic_rank_of_families() {
        let x = mat(&[&[0, 0], &[1, 0]]);
        let y = mat(&[&[0, 1], &[0, 0]]);
        // a*x + b*y is invertible generically
        let op = SymbolicOperator::linear_combination(ab_vars(), &[&x, &y]);
        assert_eq!(op.generic_rank(), 2);
        // a single nilpotent direction has generic rank 1
        let only_x = SymbolicOperator::linear_combination(vec!["a".into()], &[&x]);
        assert_eq!(only_x.generic_rank(), 1);
        let zero = SymbolicOperator::<Rat>::zero(3, 3, ab_vars());
        assert_eq!(zero.generic_rank(), 0);
    }

    #[test]
    fn generic_rank_bounds_point_ranks() {
        let x = mat(&[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]]);
        let y = mat(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let op = SymbolicOperator::linear_combination(ab_vars(), &[&x, &y]);
        let g = op.generic_rank();
        for (a, b) in [(1, 0), (0, 1), (1, 1), (2, -3), (5, 7)] {
            assert!(op.evaluate(&[rint(a), rint(b)]).rank() <= g);
        }
        assert_eq!(op.evaluate(&[rint(0), rint(1)]).rank(), g);
    }

    #[test]
    fn determinant_small_and_large_agree() {
        // a*I + b*P for the 4-cycle permutation P; eigenvalues of P are the
        // fourth roots of unity, so det = (a^2 - b^2)(a^2 + b^2) = a^4 - b^4
        let a = Poly::<Rat>::var(2, 0);
        let b = Poly::<Rat>::var(2, 1);
        let mut op = SymbolicOperator::zero(4, 4, ab_vars());
        for i in 0..4 {
            op.set(i, i, a.clone());
        }
        for j in 0..4 {
            op.set((j + 1) % 4, j, b.clone());
        }
        let d = op.determinant();
        let a4 = a.mul(&a).mul(&a).mul(&a);
        let b4 = b.mul(&b).mul(&b).mul(&b);
        assert_eq!(d, a4.sub(&b4));
        // and the 3x3 cofactor path agrees with a triangular elimination path
        let mut three = SymbolicOperator::zero(3, 3, ab_vars());
        three.set(0, 0, a.clone());
        three.set(1, 1, a.clone());
        three.set(2, 2, a.clone());
        three.set(0, 2, b.clone());
        assert_eq!(three.determinant(), a.mul(&a).mul(&a));
    }

    #[test]
    fn minors_ideal_of_zigzag_family() {
        // rows [[a, b, 0], [0, a, b]]: 2-minors are a^2, ab, b^2
        let x = mat(&[&[1, 0, 0], &[0, 1, 0]]);
        let y = mat(&[&[0, 1, 0], &[0, 0, 1]]);
        let op = SymbolicOperator::linear_combination(ab_vars(), &[&x, &y]);
        let l = Limits::default();
        let i = op.minors_ideal(2, &l).unwrap();
        let a = Poly::<Rat>::var(2, 0);
        let b = Poly::<Rat>::var(2, 1);
        let expected = crate::groebner::Ideal::new(
            2,
            vec![a.mul(&a), a.mul(&b), b.mul(&b)],
        );
        assert!(i.same_ideal(&expected, &l).unwrap());
        assert!(i.vanishes_only_at_origin(&l).unwrap());
    }

    #[test]
    fn minor_cap_is_enforced() {
        let x = mat(&[&[1, 1, 1, 1], &[1, 1, 1, 1], &[1, 1, 1, 1], &[1, 1, 1, 1]]);
        let op = SymbolicOperator::linear_combination(vec!["a".into()], &[&x]);
        let tight = Limits { max_minors: 3, max_spairs: 5000 };
        assert!(op.minors_ideal(2, &tight).is_err());
        assert_eq!(op.minor_count(2), 36);
    }

    #[test]
    fn combinations_enumerate_subsets() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(2, 3), Vec::<Vec<usize>>::new());
        assert_eq!(binomial(14, 6), 3003);
    }

    #[test]
    fn composition_detects_square_zero() {
        let x = mat(&[&[0, 0], &[1, 0]]);
        let op = SymbolicOperator::linear_combination(vec!["a".into()], &[&x]);
        assert!(op.compose(&op).is_identically_zero());
        let y = mat(&[&[0, 1], &[0, 0]]);
        let fam = SymbolicOperator::linear_combination(ab_vars(), &[&x, &y]);
        // (a x + b y)^2 = ab (xy + yx) = ab * identity here
        assert!(!fam.compose(&fam).is_identically_zero());
    }
}
