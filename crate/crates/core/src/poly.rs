//! multivariate polynomials with the graded reverse lexicographic order.
//!
//! a monomial stores one exponent per variable; the variable order is the
//! order in which the coefficient variables were declared. polynomials keep
//! their terms in a map ordered by the monomial order, so the leading term is
//! the last entry.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// monomial as an exponent vector; total order is grevlex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial { exps: vec![0; arity] }
    }

    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index out of range");
        let mut exps = vec![0; arity];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.arity() == other.arity()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// quotient `other / self`; caller must ensure divisibility.
    pub fn div_into(&self, other: &Self) -> Self {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// same exponents with extra trailing variables of exponent zero.
    pub fn extended(&self, arity: usize) -> Self {
        assert!(arity >= self.arity());
        let mut exps = self.exps.clone();
        exps.resize(arity, 0);
        Monomial { exps }
    }

    pub fn display_with(&self, names: &[&str]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].to_string()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    /// graded reverse lexicographic: higher total degree wins; on equal
    /// degree, the monomial with the smaller exponent at the last differing
    /// variable is the larger one.
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.exps.len()).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// polynomial over `S`; term map never stores zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<S> {
    arity: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(arity: usize) -> Self {
        Poly { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, S::one())
    }

    pub fn constant(arity: usize, c: S) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(Monomial::one(arity), c);
        p
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(Monomial::var(arity, i), S::one());
        p
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// leading term in grevlex; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<(&Monomial, &S)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        assert_eq!(m.arity(), self.arity, "term arity mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(S::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "polynomial arity mismatch");
        let mut p = self.clone();
        for (m, c) in other.terms() {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut p = Self::zero(self.arity);
        for (m, c) in self.terms() {
            p.add_term(m.clone(), S::zero() - c.clone());
        }
        p
    }

    pub fn scale(&self, k: &S) -> Self {
        let mut p = Self::zero(self.arity);
        for (m, c) in self.terms() {
            p.add_term(m.clone(), c.clone() * k.clone());
        }
        p
    }

    pub fn mul_term(&self, m: &Monomial, c: &S) -> Self {
        let mut p = Self::zero(self.arity);
        for (mm, cc) in self.terms() {
            p.add_term(mm.mul(m), cc.clone() * c.clone());
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "polynomial arity mismatch");
        let mut p = Self::zero(self.arity);
        for (m, c) in other.terms() {
            p = p.add(&self.mul_term(m, c));
        }
        p
    }

    /// leading-coefficient-one rescaling; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = S::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.arity, "evaluation point arity mismatch");
        let mut acc = S::zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// exact quotient `self / divisor`; `None` when the division leaves a
    /// remainder. used by fraction-free elimination where exactness is a
    /// structural guarantee.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.arity, divisor.arity, "polynomial arity mismatch");
        if divisor.is_zero() {
            return None;
        }
        let (dm, dc) = divisor.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Self::zero(self.arity);
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.div_into(rm);
            let qc = rc.clone() / dc.clone();
            quot.add_term(qm.clone(), qc.clone());
            rem = rem.sub(&divisor.mul_term(&qm, &qc));
        }
        Some(quot)
    }

    /// same polynomial viewed in a ring with extra trailing variables.
    pub fn extended(&self, arity: usize) -> Self {
        let mut p = Self::zero(arity);
        for (m, c) in self.terms() {
            p.add_term(m.extended(arity), c.clone());
        }
        p
    }

    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // print leading term first
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_is_one = abs.is_one();
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if coeff_is_one {
                out.push_str(&m.display_with(names));
            } else {
                out.push_str(&format!("{}*{}", abs, m.display_with(names)));
            }
        }
        out
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.arity).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.display_with(&refs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rint, Rat};
    use num_traits::Zero;

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn grevlex_orders_degree_first() {
        assert!(mono(&[2, 0]) > mono(&[0, 1]));
        assert!(mono(&[0, 0]) < mono(&[1, 0]));
    }

    #[test]
    fn grevlex_on_equal_degrees() {
        // x > y > z and x^2 > xy > y^2 > xz > yz > z^2
        let order = [
            mono(&[2, 0, 0]),
            mono(&[1, 1, 0]),
            mono(&[0, 2, 0]),
            mono(&[1, 0, 1]),
            mono(&[0, 1, 1]),
            mono(&[0, 0, 2]),
        ];
        for w in order.windows(2) {
            assert!(w[0] > w[1], "{:?} should exceed {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn monomial_arithmetic() {
        let a = mono(&[1, 2]);
        let b = mono(&[0, 1]);
        assert_eq!(a.mul(&b), mono(&[1, 3]));
        assert!(b.divides(&a));
        assert_eq!(b.div_into(&a), mono(&[1, 1]));
        assert_eq!(a.lcm(&b), mono(&[1, 2]));
        assert!(mono(&[1, 0]).is_coprime_with(&mono(&[0, 3])));
    }

    fn x() -> Poly<Rat> {
        Poly::var(2, 0)
    }

    fn y() -> Poly<Rat> {
        Poly::var(2, 1)
    }

    #[test]
    fn polynomial_arithmetic() {
        // (x + y)^2 = x^2 + 2xy + y^2
        let s = x().add(&y());
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&mono(&[2, 0])), rint(1));
        assert_eq!(sq.coeff(&mono(&[1, 1])), rint(2));
        assert_eq!(sq.coeff(&mono(&[0, 2])), rint(1));
        assert_eq!(sq.num_terms(), 3);
        assert!(sq.sub(&sq).is_zero());
    }

    #[test]
    fn leading_term_is_grevlex_max() {
        let p = x().mul(&y()).add(&Poly::var(2, 1).mul(&y())); // xy + y^2
        let (m, _) = p.leading().unwrap();
        assert_eq!(*m, mono(&[1, 1]));
    }

    #[test]
    fn evaluation() {
        let p = x().mul(&x()).sub(&y()); // x^2 - y
        assert_eq!(p.eval(&[rint(3), rint(4)]), rint(5));
        assert!(p.eval(&[rint(2), rint(4)]).is_zero());
    }

    #[test]
    fn exact_division() {
        let p = x().mul(&x()).sub(&y().mul(&y())); // x^2 - y^2
        let d = x().sub(&y());
        let q = p.div_exact(&d).unwrap();
        assert_eq!(q, x().add(&y()));
        assert_eq!(x().div_exact(&y()), None);
    }

    #[test]
    fn extension_pads_trailing_variables() {
        let p = x().mul(&y());
        let q = p.extended(3);
        assert_eq!(q.arity(), 3);
        assert_eq!(q.coeff(&mono(&[1, 1, 0])), rint(1));
    }

    #[test]
    fn display_is_readable() {
        let p = x().mul(&x()).sub(&y().scale(&rint(2)));
        assert_eq!(p.display_with(&["a", "b"]), "a^2 - 2*b");
        assert_eq!(Poly::<Rat>::zero(2).display_with(&["a", "b"]), "0");
    }
}
