//! the square-zero operator θ of an exterior-algebra module over the
//! coordinate ring of its odd space, fibers at rational points, the
//! constant-fiber-rank (vector bundle) certificate, and graded
//! kernel/image dimension windows.
//!
//! θ acts on m ⊗ k[Y₁..Y_s] by v ⊗ f ↦ Σ_g (z_g·v) ⊗ Y_g f, raising
//! polynomial degree by one; θ² = 0 because the generator actions square
//! to zero and anticommute. specializing the Y's at a point recovers the
//! point operator, so "constant fiber dimension" is exactly the strong
//! constant-Jordan-type condition and is certified by the same minors
//! ideal.

use std::collections::BTreeMap;

use crate::algebra::{
    symbolic_operator, AlgebraSpec, Matrix, ModuleError, OddPoint, SuperDim, Supermodule,
};
use crate::jordan::{
    check_cjt, jordan_type_at, CjtReport, CjtVerdict, Method,
};
use crate::limits::Limits;
use crate::scalar::Rat;
use crate::symbolic::SymbolicOperator;

/// the symbolic square-zero operator of an exterior-algebra module. each
/// application raises the polynomial degree of coefficients by one.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaOperator {
    module: Supermodule,
    matrix: SymbolicOperator<Rat>,
}

impl ThetaOperator {
    pub fn module(&self) -> &Supermodule {
        &self.module
    }

    /// entry (i, j) = Σ_g (A_g)_{ij}·Y_g.
    pub fn matrix(&self) -> &SymbolicOperator<Rat> {
        &self.matrix
    }

    /// specialization at a point; equals the point operator of the module.
    pub fn evaluate(&self, p: &OddPoint) -> Result<Matrix, ModuleError> {
        if p.algebra() != self.module.algebra() {
            return Err(ModuleError::AlgebraMismatch {
                expected: self.module.algebra().to_string(),
                found: p.algebra().to_string(),
            });
        }
        Ok(self.matrix.evaluate(p.coeffs()))
    }

    /// θ∘θ as a matrix of polynomials; identically zero for valid modules.
    pub fn square(&self) -> SymbolicOperator<Rat> {
        self.matrix.compose(&self.matrix)
    }
}

/// exterior modules pass through; principal-block modules over products of
/// sl(1|1) factors are reinterpreted over the exterior algebra on their
/// odd generators.
fn over_exterior(m: &Supermodule) -> Result<Supermodule, ModuleError> {
    m.as_exterior()
}

/// assemble θ for an exterior-algebra module (or a principal-block module
/// viewed as one).
pub fn build_theta(m: &Supermodule) -> Result<ThetaOperator, ModuleError> {
    let me = over_exterior(m)?;
    me.ensure_valid()?;
    let matrix = symbolic_operator(&me);
    let theta = ThetaOperator { module: me, matrix };
    debug_assert!(theta.square().is_identically_zero());
    Ok(theta)
}

/// fiber data of θ at one rational point.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberReport {
    pub point: OddPoint,
    /// graded dimensions of Ker/Im at the point.
    pub f1_dims: SuperDim,
    /// rank of the evaluated operator (the image already sits inside the
    /// kernel, so the second functor is the image itself).
    pub f2_dim: usize,
}

/// fibers of the two functors at a nonzero point: f1 = graded dims of
/// Ker/Im, f2 = rank.
pub fn fiber_functors(m: &Supermodule, p: &OddPoint) -> Result<FiberReport, ModuleError> {
    let t = jordan_type_at(m, p)?;
    Ok(FiberReport { point: p.clone(), f1_dims: t.fiber(), f2_dim: t.a2 })
}

#[derive(Debug, Clone, PartialEq)]
pub enum BundleVerdict {
    /// constant fiber dimensions across the punctured odd space: the two
    /// functors are locally free of the reported ranks.
    Bundle { f1: SuperDim, f2: usize },
    /// two points with differing fibers.
    NotBundle { witness1: FiberReport, witness2: FiberReport },
    Inconclusive { reason: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BundleReport {
    pub verdict: BundleVerdict,
    /// the underlying constancy certificate.
    pub cjt: CjtReport,
}

/// certify constant fiber rank through the strong-cone constancy
/// certificate: a constant type (a_ev|a_od)[1] + a₂[2] yields fiber ranks
/// f1 = (a_ev|a_od), f2 = a₂ at every nonzero point.
pub fn certify_bundle(m: &Supermodule, limits: &Limits) -> Result<BundleReport, ModuleError> {
    let me = over_exterior(m)?;
    let cjt = check_cjt(&me, crate::algebra::Cone::Strong, Method::Certified, limits)?;
    let verdict = match &cjt.verdict {
        CjtVerdict::Constant(t) => BundleVerdict::Bundle { f1: t.fiber(), f2: t.a2 },
        CjtVerdict::NotConstant { witness1, type1, witness2, type2 } => BundleVerdict::NotBundle {
            witness1: FiberReport {
                point: witness1.clone(),
                f1_dims: type1.fiber(),
                f2_dim: type1.a2,
            },
            witness2: FiberReport {
                point: witness2.clone(),
                f1_dims: type2.fiber(),
                f2_dim: type2.a2,
            },
        },
        CjtVerdict::Inconclusive { reason } => {
            BundleVerdict::Inconclusive { reason: reason.clone() }
        }
    };
    Ok(BundleReport { verdict, cjt })
}

/// one row of the graded dimension table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowRow {
    pub degree: usize,
    /// dim Ker θ_d on m ⊗ (degree-d polynomials).
    pub ker_dim: usize,
    /// dim Im θ_d inside degree d+1.
    pub im_dim: usize,
    /// graded piece of Ker θ / Im θ in degree d: ker(d) − im(d−1), the
    /// image from below landing inside the kernel because θ² = 0.
    pub f1_dim: usize,
}

/// largest admissible window endpoint.
pub const MAX_WINDOW_DEGREE: usize = 8;

/// monomials of total degree d in s variables, as exponent vectors in a
/// fixed (lexicographic) order.
fn monomials(s: usize, d: usize) -> Vec<Vec<u32>> {
    fn rec(s: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if s == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(s - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if s == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(s, d as u32, &mut Vec::new(), &mut out);
    out
}

/// matrix of θ_d: m ⊗ S^d → m ⊗ S^{d+1}, basis index = monomial·dim + i.
fn theta_degree_matrix(me: &Supermodule, d: usize) -> Matrix {
    let AlgebraSpec::Exterior { s } = me.algebra() else {
        unreachable!("caller converts to exterior first")
    };
    let s = *s;
    let n = me.dim();
    let dom = monomials(s, d);
    let cod = monomials(s, d + 1);
    let cod_index: BTreeMap<&Vec<u32>, usize> =
        cod.iter().zip(0..).map(|(m, i)| (m, i)).collect();
    let mut triplets: Vec<(usize, usize, Rat)> = Vec::new();
    for (mu_idx, mu) in dom.iter().enumerate() {
        for g in 0..s {
            let a = me.action(&format!("z{}", g + 1));
            let mut nu = mu.clone();
            nu[g] += 1;
            let nu_idx = cod_index[&nu];
            for (i, j, v) in a.entries() {
                triplets.push((nu_idx * n + i, mu_idx * n + j, v.clone()));
            }
        }
    }
    Matrix::from_triplets(cod.len() * n, dom.len() * n, triplets)
        .expect("indices in range by construction")
}

/// kernel and image dimensions of θ per degree over a window `lo..=hi`
/// inside [0, 8], with the induced graded fiber dimension.
pub fn graded_window_dims(
    m: &Supermodule,
    lo: usize,
    hi: usize,
) -> Result<Vec<WindowRow>, ModuleError> {
    if lo > hi {
        return Ok(Vec::new());
    }
    if hi > MAX_WINDOW_DEGREE {
        return Err(ModuleError::RangeTooLarge(format!(
            "degrees up to {hi} requested; the window must stay within [0, {MAX_WINDOW_DEGREE}]"
        )));
    }
    let me = over_exterior(m)?;
    me.ensure_valid()?;
    let mut rows = Vec::with_capacity(hi - lo + 1);
    let mut prev_im = if lo == 0 {
        0
    } else {
        let below = theta_degree_matrix(&me, lo - 1);
        below.rank()
    };
    for d in lo..=hi {
        let mat = theta_degree_matrix(&me, d);
        let cols = mat.cols();
        let rank = mat.rank();
        let ker = cols - rank;
        rows.push(WindowRow { degree: d, ker_dim: ker, im_dim: rank, f1_dim: ker - prev_im });
        prev_im = rank;
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Parity;
    use crate::construct::{free_module, kac0, omega, trivial, w_module};
    use crate::sample::PointSampler;
    use crate::scalar::rint;

    fn e2_point(a: i64, b: i64) -> OddPoint {
        OddPoint::new(AlgebraSpec::exterior(2), vec![rint(a), rint(b)]).unwrap()
    }

    #[test]
    fn theta_of_trivial_is_zero() {
        let t = build_theta(&trivial(AlgebraSpec::exterior(2), Parity::Even)).unwrap();
        assert!(t.matrix().is_identically_zero());
        assert_eq!(t.matrix().rows(), 1);
    }

    #[test]
    fn theta_of_kac_module_is_one_edge() {
        // over the exterior view, the only action edge is the second
        // generator sending the highest vector onto the socle
        let t = build_theta(&kac0()).unwrap();
        let entry = t.matrix().get(1, 0);
        use crate::poly::Poly;
        assert_eq!(entry, Poly::<Rat>::var(2, 1));
        assert_eq!(t.matrix().display_entries().matches("Y2").count(), 1);
        // every other entry vanishes
        let nonzero: Vec<(usize, usize)> = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .filter(|&(i, j)| !t.matrix().get(i, j).is_zero())
            .collect();
        assert_eq!(nonzero, vec![(1, 0)]);
    }

    #[test]
    fn theta_squares_to_zero_symbolically() {
        for m in [
            free_module(&AlgebraSpec::exterior(2), 1, Parity::Even),
            w_module(4),
            omega(&trivial(AlgebraSpec::exterior(2), Parity::Even), 1).unwrap(),
        ] {
            let t = build_theta(&m).unwrap();
            assert!(t.square().is_identically_zero());
        }
    }

    #[test]
    fn evaluation_matches_point_operator() {
        let m = w_module(3);
        let t = build_theta(&m).unwrap();
        for p in [e2_point(1, 0), e2_point(2, -3), e2_point(0, 5)] {
            let ev = t.evaluate(&p).unwrap();
            let po = crate::algebra::point_operator(&m, &p).unwrap();
            assert_eq!(ev, po);
        }
    }

    #[test]
    fn fiber_reports() {
        let w = w_module(3);
        let mut sampler = PointSampler::new(7);
        let mut reports = Vec::new();
        for _ in 0..100 {
            let p = sampler.strong_point(w.algebra());
            let r = fiber_functors(&w, &p).unwrap();
            assert_eq!(2 * r.f2_dim + r.f1_dims.dim(), w.dim());
            reports.push((r.f1_dims, r.f2_dim));
        }
        assert!(reports.iter().all(|&(f1, f2)| f1 == SuperDim { even: 1, odd: 0 } && f2 == 2));
        // trivial module: everything is fiber
        let k = trivial(AlgebraSpec::exterior(2), Parity::Even);
        let r = fiber_functors(&k, &e2_point(4, 1)).unwrap();
        assert_eq!(r.f1_dims, SuperDim { even: 1, odd: 0 });
        assert_eq!(r.f2_dim, 0);
        // free module: no fiber at all
        let f = free_module(&AlgebraSpec::exterior(2), 1, Parity::Even);
        let r = fiber_functors(&f, &e2_point(1, 1)).unwrap();
        assert_eq!(r.f1_dims, SuperDim { even: 0, odd: 0 });
        assert_eq!(r.f2_dim, 2);
    }

    #[test]
    fn bundle_certificates() {
        let limits = Limits::default();
        let r = certify_bundle(&w_module(3), &limits).unwrap();
        match r.verdict {
            BundleVerdict::Bundle { f1, f2 } => {
                assert_eq!(f1, SuperDim { even: 1, odd: 0 });
                assert_eq!(f2, 2);
            }
            other => panic!("expected bundle, got {other:?}"),
        }
        assert!(r.cjt.strata.iter().all(|c| c.vanishes_only_at_origin));

        let r = certify_bundle(&kac0(), &limits).unwrap();
        match r.verdict {
            BundleVerdict::NotBundle { witness1, witness2 } => {
                assert_ne!(
                    (witness1.f1_dims, witness1.f2_dim),
                    (witness2.f1_dims, witness2.f2_dim)
                );
            }
            other => panic!("expected not a bundle, got {other:?}"),
        }

        let o = omega(&trivial(AlgebraSpec::exterior(2), Parity::Even), 1).unwrap();
        let r = certify_bundle(&o, &limits).unwrap();
        match r.verdict {
            BundleVerdict::Bundle { f1, f2 } => {
                assert_eq!(f1, SuperDim { even: 0, odd: 1 });
                assert_eq!(f2, 1);
            }
            other => panic!("expected bundle, got {other:?}"),
        }
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(2, 0).len(), 1);
        assert_eq!(monomials(2, 3).len(), 4);
        assert_eq!(monomials(4, 2).len(), 10);
        assert_eq!(monomials(1, 5), vec![vec![5]]);
        // all distinct, right degree
        let ms = monomials(3, 4);
        assert_eq!(ms.len(), 15);
        assert!(ms.iter().all(|m| m.iter().sum::<u32>() == 4));
    }

    #[test]
    fn window_of_trivial_module() {
        let k = trivial(AlgebraSpec::exterior(2), Parity::Even);
        let rows = graded_window_dims(&k, 0, 2).unwrap();
        let expect = [(0, 1, 0, 1), (1, 2, 0, 2), (2, 3, 0, 3)];
        for (row, (d, ker, im, f1)) in rows.iter().zip(expect) {
            assert_eq!((row.degree, row.ker_dim, row.im_dim, row.f1_dim), (d, ker, im, f1));
        }
    }

    #[test]
    fn window_of_free_module() {
        // kernel in degree 0 is the one-dimensional socle; everything else
        // maps injectively into degree 1
        let f = free_module(&AlgebraSpec::exterior(2), 1, Parity::Even);
        let rows = graded_window_dims(&f, 0, 3).unwrap();
        assert_eq!(rows[0].ker_dim, 1);
        assert_eq!(rows[0].im_dim, 3);
        assert_eq!(rows[0].f1_dim, 1);
        // θ² = 0 at the graded level: im(d) ≤ ker(d+1)
        for pair in rows.windows(2) {
            assert!(pair[0].im_dim <= pair[1].ker_dim);
            assert_eq!(pair[1].f1_dim, pair[1].ker_dim - pair[0].im_dim);
        }
    }

    #[test]
    fn window_not_starting_at_zero_subtracts_the_image_from_below() {
        let w = w_module(3);
        let all = graded_window_dims(&w, 0, 4).unwrap();
        let tail = graded_window_dims(&w, 2, 4).unwrap();
        assert_eq!(&all[2..], &tail[..]);
    }

    #[test]
    fn window_bounds() {
        let k = trivial(AlgebraSpec::exterior(2), Parity::Even);
        assert!(graded_window_dims(&k, 3, 2).unwrap().is_empty());
        assert!(matches!(
            graded_window_dims(&k, 0, 9),
            Err(ModuleError::RangeTooLarge(_))
        ));
    }
}
