//! Jordan types of square-zero point operators, constancy verdicts with
//! algebraic certificates, projectivity, endotriviality, stable
//! equivalence, and indecomposability.
//!
//! a nonzero self-commuting odd point acts by a parity-reversing operator
//! N with N² = 0, so its Jordan form has blocks of size 1 and 2 only; the
//! type is written (a_ev|a_od)[1] + a₂[2], where the 1-blocks are graded
//! by the parity of the fiber Ker N / Im N and a₂ = rank N.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{
    point_operator, strata, stratum_operator, stratum_point, AlgebraSpec, Cone, Matrix,
    ModuleError, OddPoint, Parity, Stratum, SuperDim, Supermodule,
};
use crate::construct::{hom, submodule};
use crate::limits::{Limits, ResourceError};
use crate::poly::Poly;
use crate::sample::PointSampler;
use crate::scalar::Rat;

/// fixed seed for the deterministic sampling inside certified runs and
/// their fallbacks; reports stay byte-identical across runs.
pub const CERT_SEED: u64 = 1729;

/// how many sampled points back a certificate fallback.
pub const FALLBACK_SAMPLES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JordanType {
    pub a_ev: usize,
    pub a_od: usize,
    pub a2: usize,
}

impl JordanType {
    /// stable (projective-free) block count.
    pub fn a1(&self) -> usize {
        self.a_ev + self.a_od
    }

    pub fn dim(&self) -> usize {
        self.a1() + 2 * self.a2
    }

    pub fn fiber(&self) -> SuperDim {
        SuperDim { even: self.a_ev, odd: self.a_od }
    }

    /// equality of the stable parts (a_ev|a_od), disregarding [2]-blocks.
    pub fn stable_equivalent(&self, other: &JordanType) -> bool {
        self.a_ev == other.a_ev && self.a_od == other.a_od
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})[1] + {}[2]", self.a_ev, self.a_od, self.a2)
    }
}

/// equality of stable parts; convenience form of [`JordanType::stable_equivalent`].
pub fn stable_equivalent(t1: &JordanType, t2: &JordanType) -> bool {
    t1.stable_equivalent(t2)
}

fn check_point(m: &Supermodule, p: &OddPoint) -> Result<(), ModuleError> {
    if p.algebra() != m.algebra() {
        return Err(ModuleError::AlgebraMismatch {
            expected: m.algebra().to_string(),
            found: p.algebra().to_string(),
        });
    }
    if p.is_zero() {
        return Err(ModuleError::ZeroPoint);
    }
    if !p.in_weak_cone() && !m.is_principal_block() {
        return Err(ModuleError::ConeViolation(format!(
            "{p} has a factor with both coordinates nonzero and the module is not \
             principal-block"
        )));
    }
    Ok(())
}

/// Jordan type of the action of a nonzero point. over f_r the point must
/// self-commute unless the module is principal-block (where the whole odd
/// space acts by square-zero operators).
pub fn jordan_type_at(m: &Supermodule, p: &OddPoint) -> Result<JordanType, ModuleError> {
    check_point(m, p)?;
    let n = point_operator(m, p)?;
    debug_assert!(n.mul(&n).expect("square matrix").is_zero(), "point operator must square to zero");
    Ok(type_from_operator(m, &n))
}

/// graded dimensions of Ker/Im of the point's action.
pub fn fiber_at(m: &Supermodule, p: &OddPoint) -> Result<SuperDim, ModuleError> {
    Ok(jordan_type_at(m, p)?.fiber())
}

/// type of a parity-reversing square-zero operator on m: the even and odd
/// fiber dimensions each drop by the full rank because the operator's two
/// parity blocks contribute a kernel cut in one parity and an image cut in
/// the other.
fn type_from_operator(m: &Supermodule, n: &Matrix) -> JordanType {
    let a2 = n.rank();
    let sd = m.superdim();
    JordanType { a_ev: sd.even - a2, a_od: sd.odd - a2, a2 }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Method {
    Certified,
    Sampled { samples: usize, seed: u64 },
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Certified => write!(f, "certified"),
            Method::Sampled { samples, seed } => write!(f, "sampled({samples}, seed {seed})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CjtVerdict {
    Constant(JordanType),
    NotConstant {
        witness1: OddPoint,
        type1: JordanType,
        witness2: OddPoint,
        type2: JordanType,
    },
    Inconclusive { reason: String },
}

/// per-chart outcome of the rank-constancy certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct StratumCertificate {
    pub label: String,
    pub generic_rank: usize,
    /// generators of the ideal of full-rank minors (empty when the chart
    /// family is identically zero).
    pub minors: Vec<Poly<Rat>>,
    /// the common zero locus of the minors is the origin alone, so the
    /// rank never drops on the punctured chart.
    pub vanishes_only_at_origin: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CjtReport {
    pub cone: Cone,
    pub method: Method,
    pub verdict: CjtVerdict,
    /// common generic rank when certified and constant.
    pub generic_rank: Option<usize>,
    pub strata: Vec<StratumCertificate>,
}

impl CjtReport {
    pub fn constant_type(&self) -> Option<JordanType> {
        match &self.verdict {
            CjtVerdict::Constant(t) => Some(*t),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self.verdict, CjtVerdict::Constant(_))
    }
}

fn strata_for(
    m: &Supermodule,
    cone: Cone,
) -> Result<Vec<Stratum>, ModuleError> {
    if cone == Cone::Strong && !m.algebra().is_exterior() && !m.is_principal_block() {
        return Err(ModuleError::NotPrincipalBlock);
    }
    Ok(strata(m.algebra(), cone))
}

/// sampled types across all charts: `samples` seeded points per chart.
fn sampled_types(
    m: &Supermodule,
    charts: &[Stratum],
    samples: usize,
    seed: u64,
) -> Result<Vec<(OddPoint, JordanType)>, ModuleError> {
    let mut sampler = PointSampler::new(seed);
    let mut out = Vec::with_capacity(samples * charts.len());
    for chart in charts {
        for _ in 0..samples {
            let p = sampler.point_in(m.algebra(), chart);
            let t = jordan_type_at(m, &p)?;
            out.push((p, t));
        }
    }
    Ok(out)
}

fn verdict_from_samples(points: Vec<(OddPoint, JordanType)>) -> CjtVerdict {
    let Some((p0, t0)) = points.first().cloned() else {
        return CjtVerdict::Inconclusive { reason: "no samples drawn".to_string() };
    };
    for (p, t) in &points {
        if *t != t0 {
            return CjtVerdict::NotConstant {
                witness1: p0,
                type1: t0,
                witness2: p.clone(),
                type2: *t,
            };
        }
    }
    CjtVerdict::Constant(t0)
}

/// resource-limit fallback: exact types at seeded points decide
/// not-constant outright or downgrade honestly to inconclusive.
fn fallback_after_limit(
    m: &Supermodule,
    charts: &[Stratum],
    what: &ResourceError,
) -> Result<CjtVerdict, ModuleError> {
    let per_chart = (FALLBACK_SAMPLES / charts.len().max(1)).max(1);
    let samples = sampled_types(m, charts, per_chart, CERT_SEED)?;
    let total = samples.len();
    match verdict_from_samples(samples) {
        CjtVerdict::Constant(t) => Ok(CjtVerdict::Inconclusive {
            reason: format!(
                "{what}; {total} sampled points all agree on type {t}, but no certificate"
            ),
        }),
        nc @ CjtVerdict::NotConstant { .. } => Ok(nc),
        inc => Ok(inc),
    }
}

/// a rational point of the chart where the family drops below its generic
/// rank: chart axes first, then a small integer grid, then seeded samples.
fn find_drop_point(
    m: &Supermodule,
    chart: &Stratum,
    generic: usize,
) -> Result<Option<(OddPoint, JordanType)>, ModuleError> {
    let k = chart.gen_indices.len();
    let test = |coords: &[Rat]| -> Result<Option<(OddPoint, JordanType)>, ModuleError> {
        if coords.iter().all(Rat::is_zero) {
            return Ok(None);
        }
        let p = stratum_point(m, chart, coords)?;
        let t = jordan_type_at(m, &p)?;
        Ok((t.a2 < generic).then_some((p, t)))
    };
    // axes
    for i in 0..k {
        let mut coords = vec![Rat::zero(); k];
        coords[i] = Rat::one();
        if let Some(hit) = test(&coords)? {
            return Ok(Some(hit));
        }
    }
    // small grid, capped
    let radius: i64 = 2;
    let width = (2 * radius + 1) as u64;
    let total = width.checked_pow(k as u32).unwrap_or(u64::MAX);
    if total <= 20_000 {
        let mut coords = vec![Rat::zero(); k];
        for idx in 0..total {
            let mut rest = idx;
            for c in coords.iter_mut() {
                *c = crate::scalar::rint(rest as i64 % width as i64 - radius);
                rest /= width;
            }
            if let Some(hit) = test(&coords)? {
                return Ok(Some(hit));
            }
        }
    }
    // seeded randoms
    let mut sampler = PointSampler::new(CERT_SEED);
    for _ in 0..FALLBACK_SAMPLES {
        if let Some(hit) = test(&sampler.coords(k))? {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

/// a rational chart point realizing the generic rank.
fn find_generic_point(
    m: &Supermodule,
    chart: &Stratum,
    generic: usize,
) -> Result<Option<(OddPoint, JordanType)>, ModuleError> {
    let mut sampler = PointSampler::new(CERT_SEED ^ 0x9e3779b9);
    for _ in 0..200 {
        let p = sampler.point_in(m.algebra(), chart);
        let t = jordan_type_at(m, &p)?;
        if t.a2 == generic {
            return Ok(Some((p, t)));
        }
    }
    Ok(None)
}

/// decide whether the Jordan type is the same at every nonzero point of
/// the chosen cone.
///
/// certified runs prove, per chart: the rank of the symbolic family over
/// the function field (an everywhere upper bound) is attained away from
/// the origin because the ideal of full-rank minors vanishes only at the
/// origin. constant rank forces constant fiber parities, so equal ranks
/// across charts certify a constant type. resource caps degrade to an
/// exact sampled consistency check reported as inconclusive.
pub fn check_cjt(
    m: &Supermodule,
    cone: Cone,
    method: Method,
    limits: &Limits,
) -> Result<CjtReport, ModuleError> {
    m.ensure_valid()?;
    let charts = strata_for(m, cone)?;
    if m.dim() == 0 {
        return Ok(CjtReport {
            cone,
            method,
            verdict: CjtVerdict::Constant(JordanType { a_ev: 0, a_od: 0, a2: 0 }),
            generic_rank: Some(0),
            strata: Vec::new(),
        });
    }
    match method {
        Method::Sampled { samples, seed } => {
            let points = sampled_types(m, &charts, samples, seed)?;
            Ok(CjtReport {
                cone,
                method: Method::Sampled { samples, seed },
                verdict: verdict_from_samples(points),
                generic_rank: None,
                strata: Vec::new(),
            })
        }
        Method::Certified => {
            let mut certs: Vec<StratumCertificate> = Vec::new();
            let mut types: Vec<JordanType> = Vec::new();
            for chart in &charts {
                let family = stratum_operator(m, chart);
                let g = match family.generic_rank_capped(limits) {
                    Ok(g) => g,
                    Err(e) => {
                        let verdict = fallback_after_limit(m, &charts, &e)?;
                        return Ok(CjtReport {
                            cone,
                            method: Method::Certified,
                            verdict,
                            generic_rank: None,
                            strata: certs,
                        });
                    }
                };
                let ideal = match family.minors_ideal(g, limits) {
                    Ok(i) => i,
                    Err(e) => {
                        let verdict = fallback_after_limit(m, &charts, &e)?;
                        return Ok(CjtReport {
                            cone,
                            method: Method::Certified,
                            verdict,
                            generic_rank: None,
                            strata: certs,
                        });
                    }
                };
                let voao = match ideal.vanishes_only_at_origin(limits) {
                    Ok(v) => v,
                    Err(e) => {
                        let verdict = fallback_after_limit(m, &charts, &e)?;
                        return Ok(CjtReport {
                            cone,
                            method: Method::Certified,
                            verdict,
                            generic_rank: None,
                            strata: certs,
                        });
                    }
                };
                certs.push(StratumCertificate {
                    label: chart.label.clone(),
                    generic_rank: g,
                    minors: ideal.generators().to_vec(),
                    vanishes_only_at_origin: voao,
                });
                if !voao {
                    // the rank drops somewhere off the origin (over the
                    // closure); produce rational witnesses when they exist
                    if let Some((pd, td)) = find_drop_point(m, chart, g)? {
                        if let Some((pg, tg)) = find_generic_point(m, chart, g)? {
                            return Ok(CjtReport {
                                cone,
                                method: Method::Certified,
                                verdict: CjtVerdict::NotConstant {
                                    witness1: pg,
                                    type1: tg,
                                    witness2: pd,
                                    type2: td,
                                },
                                generic_rank: None,
                                strata: certs,
                            });
                        }
                    }
                    return Ok(CjtReport {
                        cone,
                        method: Method::Certified,
                        verdict: CjtVerdict::Inconclusive {
                            reason: format!(
                                "rank drops on chart {} only at points with no rational \
                                 witness in the search range",
                                chart.label
                            ),
                        },
                        generic_rank: None,
                        strata: certs,
                    });
                }
                let sd = m.superdim();
                types.push(JordanType { a_ev: sd.even - g, a_od: sd.odd - g, a2: g });
            }
            // all charts certified internally constant; compare across charts
            let t0 = types[0];
            if let Some(i) = types.iter().position(|t| *t != t0) {
                let w1 = find_generic_point(m, &charts[0], types[0].a2)?;
                let w2 = find_generic_point(m, &charts[i], types[i].a2)?;
                let verdict = match (w1, w2) {
                    (Some((p1, t1)), Some((p2, t2))) => CjtVerdict::NotConstant {
                        witness1: p1,
                        type1: t1,
                        witness2: p2,
                        type2: t2,
                    },
                    _ => CjtVerdict::Inconclusive {
                        reason: format!(
                            "charts {} and {} have generic ranks {} and {}, but no \
                             rational generic witness was sampled",
                            charts[0].label, charts[i].label, types[0].a2, types[i].a2
                        ),
                    },
                };
                return Ok(CjtReport {
                    cone,
                    method: Method::Certified,
                    verdict,
                    generic_rank: None,
                    strata: certs,
                });
            }
            Ok(CjtReport {
                cone,
                method: Method::Certified,
                verdict: CjtVerdict::Constant(t0),
                generic_rank: Some(t0.a2),
                strata: certs,
            })
        }
    }
}

/// module viewed over an exterior algebra: exterior modules pass through,
/// principal-block f_r modules are reinterpreted over exterior(2r).
fn over_exterior(m: &Supermodule) -> Result<Supermodule, ModuleError> {
    m.as_exterior()
}

/// exact freeness test over exterior(s): the product of all generator
/// actions has rank equal to the number of free rank-one summands, and the
/// module is free precisely when 2^s times that rank is the dimension.
pub fn is_projective(m: &Supermodule) -> Result<bool, ModuleError> {
    let me = over_exterior(m)?;
    let AlgebraSpec::Exterior { s } = me.algebra() else { unreachable!() };
    Ok((1usize << *s) * free_rank_exterior(&me) == me.dim())
}

/// number of free rank-one summands in a Krull–Schmidt decomposition: the
/// rank of the product of all generator actions, which annihilates every
/// summand without a free complement.
pub fn free_rank(m: &Supermodule) -> Result<usize, ModuleError> {
    Ok(free_rank_exterior(&over_exterior(m)?))
}

fn free_rank_exterior(me: &Supermodule) -> usize {
    let AlgebraSpec::Exterior { s } = me.algebra() else {
        unreachable!("caller converts to exterior first")
    };
    let dim = me.dim();
    if dim == 0 {
        return 0;
    }
    let mut top = Matrix::identity(dim);
    for i in 1..=*s {
        top = me.action(&format!("z{i}")).mul(&top).expect("square matrices");
    }
    top.rank()
}

#[derive(Debug, Clone, PartialEq)]
pub struct EndotrivialReport {
    pub endotrivial: bool,
    /// verdict of the constant-type route: constant stable type 1.
    pub cjt_route: bool,
    /// whether the constant-type route had to fall back to sampling.
    pub probabilistic: bool,
    /// verdict of the direct route: Hom(m, m) ≅ k ⊕ projective.
    pub hom_route: bool,
    /// sanity: superdim(hom(m,m)) = superdim(m)².
    pub sdim_squares: bool,
    /// the underlying constancy report of the module.
    pub cjt_report: CjtReport,
}

/// hom modules beyond this dimension skip the explicit kernel-of-trace
/// submodule and use the equivalent free-rank count directly.
const HOM_SPLIT_DIM_CAP: usize = 400;

/// decide endotriviality two ways: constant stable type 1 on the strong
/// cone, and the direct decomposition Hom(m,m) ≅ k ⊕ projective via the
/// supertrace splitting.
pub fn is_endotrivial(m: &Supermodule, limits: &Limits) -> Result<EndotrivialReport, ModuleError> {
    let me = over_exterior(m)?;
    let report = check_cjt(&me, Cone::Strong, Method::Certified, limits)?;
    let (cjt_route, probabilistic, final_report) = match &report.verdict {
        CjtVerdict::Constant(t) => (t.a1() == 1, false, report),
        CjtVerdict::NotConstant { .. } => (false, false, report),
        CjtVerdict::Inconclusive { .. } => {
            let sampled = check_cjt(
                &me,
                Cone::Strong,
                Method::Sampled { samples: FALLBACK_SAMPLES, seed: CERT_SEED },
                limits,
            )?;
            let ok = sampled.constant_type().map(|t| t.a1() == 1).unwrap_or(false);
            (ok, true, sampled)
        }
    };

    let sdim = me.superdim().sdim();
    let mut sdim_squares = true;
    let hom_route = if me.dim() == 0 || sdim.abs() != 1 {
        false
    } else {
        let h = hom(&me, &me)?;
        sdim_squares = h.superdim().sdim() == sdim * sdim;
        let n = me.dim();
        if h.dim() <= HOM_SPLIT_DIM_CAP {
            // supertrace functional in the coordinates of hom = m ⊗ m*,
            // where basis vector (i, j) is the rank-one map e_j ↦ e_i
            let mut strvec = Matrix::zero(1, h.dim());
            for i in 0..n {
                let v = match me.parity()[i] {
                    Parity::Even => Rat::one(),
                    Parity::Odd => -Rat::one(),
                };
                strvec.set(0, i * n + i, v);
            }
            let ker = strvec.kernel();
            let (complement, _) = submodule(&h, &ker)?;
            is_projective(&complement)?
        } else {
            // same predicate through dimensions: hom ≅ k ⊕ projective iff
            // the non-free part is exactly one dimensional (and sdim 1
            // forces it to be the even trivial module)
            let AlgebraSpec::Exterior { s } = h.algebra() else { unreachable!() };
            h.dim() == 1 + (1usize << *s) * free_rank_exterior(&h) && h.superdim().sdim() == 1
        }
    };

    Ok(EndotrivialReport {
        endotrivial: cjt_route,
        cjt_route,
        probabilistic,
        hom_route,
        sdim_squares,
        cjt_report: final_report,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum IndecompVerdict {
    Indecomposable,
    Decomposable {
        /// verified nontrivial even idempotent commuting with the action.
        idempotent: Matrix,
    },
    Inconclusive { reason: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndecomposabilityReport {
    pub end_dim: usize,
    pub radical_dim: usize,
    pub verdict: IndecompVerdict,
}

/// basis of the even endomorphism algebra: parity-preserving matrices
/// commuting with every generator action.
fn even_commutant(m: &Supermodule) -> Vec<Matrix> {
    let n = m.dim();
    // unknown positions: parity-preserving entries
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if m.parity()[r] == m.parity()[c] {
                unknowns.push((r, c));
            }
        }
    }
    let index: std::collections::BTreeMap<(usize, usize), usize> =
        unknowns.iter().cloned().zip(0..).collect();
    let mut triplets: Vec<(usize, usize, Rat)> = Vec::new();
    let mut row = 0;
    for (_, a) in m.actions() {
        if a.is_zero() {
            continue;
        }
        // constraint (X a − a X)_{rc} = 0 at each position
        let mut coeffs: std::collections::BTreeMap<(usize, usize), Vec<(usize, Rat)>> =
            std::collections::BTreeMap::new();
        for (k, c, v) in a.entries() {
            // X_{r k} a_{k c} contributes to position (r, c)
            for r in 0..n {
                if let Some(&u) = index.get(&(r, k)) {
                    coeffs.entry((r, c)).or_default().push((u, v.clone()));
                }
            }
        }
        for (r, k, v) in a.entries() {
            // −a_{r k} X_{k c} contributes to position (r, c)
            for c in 0..n {
                if let Some(&u) = index.get(&(k, c)) {
                    coeffs.entry((r, c)).or_default().push((u, -v.clone()));
                }
            }
        }
        for (_pos, terms) in coeffs {
            let mut acc: std::collections::BTreeMap<usize, Rat> = std::collections::BTreeMap::new();
            for (u, v) in terms {
                let e = acc.entry(u).or_insert_with(Rat::zero);
                *e += v;
            }
            let mut any = false;
            for (u, v) in acc {
                if !v.is_zero() {
                    triplets.push((row, u, v));
                    any = true;
                }
            }
            if any {
                row += 1;
            }
        }
    }
    let system = Matrix::from_triplets(row.max(1), unknowns.len(), triplets)
        .expect("constraint triplets are in range");
    let kernel = system.kernel();
    kernel
        .basis()
        .iter()
        .map(|sol| {
            let mut x = Matrix::zero(n, n);
            for (u, &(r, c)) in unknowns.iter().enumerate() {
                if !sol[u].is_zero() {
                    x.set(r, c, sol[u].clone());
                }
            }
            x
        })
        .collect()
}

fn flatten(x: &Matrix) -> Vec<Rat> {
    let n = x.rows();
    let mut v = vec![Rat::zero(); n * n];
    for (r, c, val) in x.entries() {
        v[r * n + c] = val.clone();
    }
    v
}

/// trace of a matrix product, computed sparsely.
fn trace_of_product(a: &Matrix, b: &Matrix) -> Rat {
    let mut t = Rat::zero();
    for (r, c, v) in a.entries() {
        let w = b.get(c, r);
        if !w.is_zero() {
            t += v * &w;
        }
    }
    t
}

/// monic minimal polynomial coefficients (low to high degree).
fn minimal_polynomial(b: &Matrix) -> Vec<Rat> {
    let n = b.rows();
    let mut powers: Vec<Vec<Rat>> = vec![flatten(&Matrix::identity(n))];
    let mut cur = Matrix::identity(n);
    loop {
        // solve for a dependency among the powers collected so far
        let rows = powers.len();
        let cols = n * n;
        let mut tr: Vec<(usize, usize, Rat)> = Vec::new();
        for (i, p) in powers.iter().enumerate() {
            for (j, v) in p.iter().enumerate() {
                if !v.is_zero() {
                    tr.push((j, i, v.clone()));
                }
            }
        }
        let mat = Matrix::from_triplets(cols, rows, tr).expect("triplets in range");
        if mat.rank() < rows {
            // the last power is dependent on the earlier ones
            let ker = mat.kernel();
            let dep = ker
                .basis()
                .iter()
                .find(|v| !v[rows - 1].is_zero())
                .expect("dependency must involve the top power")
                .clone();
            let lead = dep[rows - 1].clone();
            let mut coeffs: Vec<Rat> = dep.iter().map(|c| c / &lead).collect();
            coeffs.truncate(rows);
            return coeffs;
        }
        cur = cur.mul(b).expect("square matrices");
        powers.push(flatten(&cur));
    }
}

fn eval_poly_at(coeffs: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// rational roots of a monic rational polynomial, by clearing denominators
/// and scanning small divisors of the constant and leading coefficients.
fn rational_roots(coeffs: &[Rat]) -> Vec<Rat> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut roots = Vec::new();
    if coeffs.iter().all(Rat::is_zero) {
        return roots;
    }
    // strip zero roots
    let mut c = coeffs.to_vec();
    if c[0].is_zero() {
        roots.push(Rat::zero());
        while c[0].is_zero() && c.len() > 1 {
            c.remove(0);
        }
    }
    // clear denominators to integer coefficients
    let mut lcm = BigInt::one();
    for q in &c {
        lcm = lcm.lcm(q.denom());
    }
    let ints: Vec<BigInt> = c.iter().map(|q| q.numer() * &lcm / q.denom()).collect();
    let a0 = ints[0].magnitude().clone();
    let ad = ints.last().expect("nonempty").magnitude().clone();
    let small_divisors = |v: &num_bigint::BigUint| -> Vec<i64> {
        let mut out = vec![1];
        if let Ok(n) = i64::try_from(v.clone()) {
            let n = n.abs();
            let mut d = 2;
            while d * d <= n && d <= 10_000 {
                if n % d == 0 {
                    out.push(d);
                    out.push(n / d);
                }
                d += 1;
            }
            if n > 1 {
                out.push(n);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    };
    let ps = small_divisors(&a0);
    let qs = small_divisors(&ad);
    for p in &ps {
        for q in &qs {
            for sign in [1i64, -1] {
                let cand = crate::scalar::rat(sign * p, *q);
                if eval_poly_at(&c, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand.clone());
                }
            }
        }
    }
    roots
}

/// divide a monic polynomial by (x − root) as often as it stays exact;
/// returns (multiplicity, quotient).
fn peel_root(coeffs: &[Rat], root: &Rat) -> (usize, Vec<Rat>) {
    let mut c = coeffs.to_vec();
    let mut mult = 0;
    loop {
        if c.len() <= 1 || !eval_poly_at(&c, root).is_zero() {
            return (mult, c);
        }
        // synthetic division by (x − root)
        let mut q = vec![Rat::zero(); c.len() - 1];
        let mut carry = c.last().expect("nonempty").clone();
        for i in (0..c.len() - 1).rev() {
            q[i] = carry.clone();
            carry = &c[i] + carry * root;
        }
        debug_assert!(carry.is_zero());
        c = q;
        mult += 1;
    }
}

/// polynomial of a matrix.
fn apply_poly(coeffs: &[Rat], b: &Matrix) -> Matrix {
    let n = b.rows();
    let mut acc = Matrix::zero(n, n);
    for c in coeffs.iter().rev() {
        acc = acc.mul(b).expect("square matrices");
        if !c.is_zero() {
            acc = acc.add(&Matrix::identity(n).scale(c)).expect("same shape");
        }
    }
    acc
}

/// multiply two coefficient vectors.
fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// extended euclid on coefficient vectors: (g, u, v) with u·a + v·b = g.
fn poly_xgcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    fn deg(p: &[Rat]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let dd = deg(den).expect("division by zero polynomial");
        let mut rem = num.to_vec();
        let mut quo = vec![Rat::zero(); num.len().saturating_sub(dd).max(1)];
        while let Some(dn) = deg(&rem) {
            if dn < dd {
                break;
            }
            let f = &rem[dn] / &den[dd];
            quo[dn - dd] = f.clone();
            for i in 0..=dd {
                let delta = &den[i] * &f;
                rem[i + dn - dd] -= delta;
            }
        }
        (quo, rem)
    }
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut u0, mut u1) = (vec![Rat::one()], vec![Rat::zero()]);
    let (mut v0, mut v1) = (vec![Rat::zero()], vec![Rat::one()]);
    while deg(&r1).is_some() {
        let (q, r) = divmod(&r0, &r1);
        let next_u = sub_vec(&u0, &poly_mul(&q, &u1));
        let next_v = sub_vec(&v0, &poly_mul(&q, &v1));
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, next_u);
        v0 = std::mem::replace(&mut v1, next_v);
    }
    (r0, u0, v0)
}

fn sub_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

/// try to split an idempotent out of a commutant element with a rational
/// eigenvalue whose factor is proper.
fn idempotent_from(b: &Matrix) -> Option<Matrix> {
    let n = b.rows();
    let minpoly = minimal_polynomial(b);
    if minpoly.len() <= 2 {
        return None; // scalar: no splitting
    }
    for root in rational_roots(&minpoly) {
        let (mult, quotient) = peel_root(&minpoly, &root);
        if mult == 0 || quotient.len() <= 1 {
            continue; // not a root, or the whole minimal polynomial
        }
        // minpoly = f1 · f2 with f1 = (x − root)^mult, f2 = quotient, coprime
        let mut f1 = vec![Rat::one()];
        let lin = vec![-root.clone(), Rat::one()];
        for _ in 0..mult {
            f1 = poly_mul(&f1, &lin);
        }
        let (g, u, _v) = poly_xgcd(&f1, &quotient);
        // normalize gcd to 1
        let g0 = g.iter().rposition(|c| !c.is_zero()).map(|i| g[i].clone())?;
        let u: Vec<Rat> = u.iter().map(|c| c / &g0).collect();
        let e = apply_poly(&poly_mul(&u, &f1), b);
        let e2 = e.mul(&e).expect("square matrices");
        if e2 == e && !e.is_zero() && e != Matrix::identity(n) {
            return Some(e);
        }
    }
    None
}

/// decide indecomposability through the even endomorphism algebra: the
/// verdict is indecomposable exactly when E modulo its trace-form radical
/// is one dimensional; otherwise a rational idempotent is searched for and
/// the outcome reported honestly.
pub fn indecomposability(m: &Supermodule) -> Result<IndecomposabilityReport, ModuleError> {
    let me = over_exterior(m)?;
    let n = me.dim();
    if n == 0 {
        return Ok(IndecomposabilityReport {
            end_dim: 0,
            radical_dim: 0,
            verdict: IndecompVerdict::Decomposable { idempotent: Matrix::zero(0, 0) },
        });
    }
    let basis = even_commutant(&me);
    let d = basis.len();
    let mut gram: Vec<(usize, usize, Rat)> = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let t = trace_of_product(&basis[i], &basis[j]);
            if !t.is_zero() {
                gram.push((i, j, t));
            }
        }
    }
    let gram = Matrix::from_triplets(d, d, gram).expect("gram triplets in range");
    let radical_dim = d - gram.rank();
    if d - radical_dim == 1 {
        return Ok(IndecomposabilityReport {
            end_dim: d,
            radical_dim,
            verdict: IndecompVerdict::Indecomposable,
        });
    }
    // hunt a rational idempotent among basis elements and simple combos
    let mut candidates: Vec<Matrix> = basis.clone();
    for i in 0..d.min(12) {
        for j in (i + 1)..d.min(12) {
            candidates.push(basis[i].add(&basis[j]).expect("same shape"));
        }
    }
    for b in &candidates {
        // direct hit: an idempotent basis vector
        let bb = b.mul(b).expect("square matrices");
        if bb == *b && !b.is_zero() && *b != Matrix::identity(n) {
            return Ok(IndecomposabilityReport {
                end_dim: d,
                radical_dim,
                verdict: IndecompVerdict::Decomposable { idempotent: b.clone() },
            });
        }
        if let Some(e) = idempotent_from(b) {
            return Ok(IndecomposabilityReport {
                end_dim: d,
                radical_dim,
                verdict: IndecompVerdict::Decomposable { idempotent: e },
            });
        }
    }
    Ok(IndecomposabilityReport {
        end_dim: d,
        radical_dim,
        verdict: IndecompVerdict::Inconclusive {
            reason: "semisimple quotient has dimension > 1 but no rational idempotent \
                     was found"
                .to_string(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        direct_sum, dual, dual_kac0, free_module, kac0, omega, parity_shift, tensor, trivial,
        w_module,
    };
    use crate::groebner::Ideal;
    use crate::scalar::rint;

    fn sl11_point(a: i64, b: i64) -> OddPoint {
        OddPoint::new(AlgebraSpec::sl11(), vec![rint(a), rint(b)]).unwrap()
    }

    fn e2_point(a: i64, b: i64) -> OddPoint {
        OddPoint::new(AlgebraSpec::exterior(2), vec![rint(a), rint(b)]).unwrap()
    }

    #[test]
    fn types_at_points_of_the_kac_modules() {
        let k = kac0();
        let tx = jordan_type_at(&k, &sl11_point(1, 0)).unwrap();
        assert_eq!(tx, JordanType { a_ev: 1, a_od: 1, a2: 0 });
        assert_eq!(tx.to_string(), "(1|1)[1] + 0[2]");
        let ty = jordan_type_at(&k, &sl11_point(0, 1)).unwrap();
        assert_eq!(ty, JordanType { a_ev: 0, a_od: 0, a2: 1 });
        // scaling invariance
        assert_eq!(jordan_type_at(&k, &sl11_point(0, -7)).unwrap(), ty);
        // dual Kac module mirrors the axes
        let kd = dual_kac0();
        assert_eq!(
            jordan_type_at(&kd, &sl11_point(0, 1)).unwrap(),
            JordanType { a_ev: 1, a_od: 1, a2: 0 }
        );
    }

    #[test]
    fn point_errors() {
        let k = kac0();
        let zero = OddPoint::new(AlgebraSpec::sl11(), vec![rint(0), rint(0)]).unwrap();
        assert!(matches!(jordan_type_at(&k, &zero), Err(ModuleError::ZeroPoint)));
        // strong point on a principal block module is fine
        assert_eq!(
            jordan_type_at(&k, &sl11_point(1, 1)).unwrap(),
            JordanType { a_ev: 0, a_od: 0, a2: 1 }
        );
        // strong point on a non-principal module is rejected
        let mut actions = std::collections::BTreeMap::new();
        actions.insert("t1".to_string(), Matrix::identity(2));
        let bad = Supermodule::new(
            AlgebraSpec::sl11(),
            vec![Parity::Even, Parity::Even],
            actions,
        )
        .unwrap();
        assert!(matches!(
            jordan_type_at(&bad, &sl11_point(1, 1)),
            Err(ModuleError::ConeViolation(_))
        ));
    }

    #[test]
    fn fiber_identities() {
        let s = direct_sum(&kac0(), &dual_kac0()).unwrap();
        for p in [sl11_point(1, 0), sl11_point(0, 1), sl11_point(2, 0)] {
            let t = jordan_type_at(&s, &p).unwrap();
            assert_eq!(t.dim(), s.dim());
            assert_eq!(t.a_ev as i64 - t.a_od as i64, s.superdim().sdim());
            assert_eq!(fiber_at(&s, &p).unwrap(), t.fiber());
        }
    }

    #[test]
    fn example_one_weak_constant_strong_not() {
        let s = direct_sum(&kac0(), &dual_kac0()).unwrap();
        let limits = Limits::default();
        let weak = check_cjt(&s, Cone::Weak, Method::Certified, &limits).unwrap();
        assert_eq!(
            weak.constant_type(),
            Some(JordanType { a_ev: 1, a_od: 1, a2: 1 })
        );
        assert_eq!(weak.generic_rank, Some(1));
        assert_eq!(weak.strata.len(), 2);
        assert!(weak.strata.iter().all(|c| c.vanishes_only_at_origin));
        let strong = check_cjt(&s, Cone::Strong, Method::Certified, &limits).unwrap();
        match &strong.verdict {
            CjtVerdict::NotConstant { type1, type2, witness1, witness2 } => {
                let mut types = [type1, type2];
                types.sort_by_key(|t| t.a2);
                assert_eq!(*types[0], JordanType { a_ev: 1, a_od: 1, a2: 1 });
                assert_eq!(*types[1], JordanType { a_ev: 0, a_od: 0, a2: 2 });
                assert!(!witness1.is_zero() && !witness2.is_zero());
            }
            other => panic!("expected not constant, got {other:?}"),
        }
    }

    #[test]
    fn kac_module_alone_is_not_weak_constant() {
        let limits = Limits::default();
        let r = check_cjt(&kac0(), Cone::Weak, Method::Certified, &limits).unwrap();
        match &r.verdict {
            CjtVerdict::NotConstant { witness1, witness2, .. } => {
                // witnesses come from the two axis charts
                let on_axis = |p: &OddPoint| {
                    p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
                };
                assert!(on_axis(witness1) && on_axis(witness2));
            }
            other => panic!("expected not constant, got {other:?}"),
        }
    }

    #[test]
    fn zigzag_strong_certificate() {
        let limits = Limits::default();
        let r = check_cjt(&w_module(3), Cone::Strong, Method::Certified, &limits).unwrap();
        assert_eq!(
            r.constant_type(),
            Some(JordanType { a_ev: 1, a_od: 0, a2: 2 })
        );
        let cert = &r.strata[0];
        assert!(cert.vanishes_only_at_origin);
        assert_eq!(cert.generic_rank, 2);
        // the certificate ideal is exactly ⟨a², ab, b²⟩
        let a = Poly::<Rat>::var(2, 0);
        let b = Poly::<Rat>::var(2, 1);
        let expected = Ideal::new(2, vec![a.mul(&a), a.mul(&b), b.mul(&b)]);
        let got = Ideal::new(2, cert.minors.iter().cloned());
        assert!(got.same_ideal(&expected, &limits).unwrap());
    }

    #[test]
    fn sampled_method_agrees_on_small_cases() {
        let limits = Limits::default();
        let s = direct_sum(&kac0(), &dual_kac0()).unwrap();
        let r = check_cjt(
            &s,
            Cone::Weak,
            Method::Sampled { samples: 40, seed: 5 },
            &limits,
        )
        .unwrap();
        assert_eq!(
            r.constant_type(),
            Some(JordanType { a_ev: 1, a_od: 1, a2: 1 })
        );
        assert!(r.strata.is_empty());
        let strong = check_cjt(
            &s,
            Cone::Strong,
            Method::Sampled { samples: 1000, seed: 5 },
            &limits,
        )
        .unwrap();
        assert!(matches!(strong.verdict, CjtVerdict::NotConstant { .. }));
    }

    #[test]
    fn zero_module_is_constant_and_projective() {
        let z = Supermodule::zero_module(AlgebraSpec::exterior(2));
        let limits = Limits::default();
        let r = check_cjt(&z, Cone::Strong, Method::Certified, &limits).unwrap();
        assert_eq!(r.constant_type(), Some(JordanType { a_ev: 0, a_od: 0, a2: 0 }));
        assert!(is_projective(&z).unwrap());
        assert!(matches!(
            indecomposability(&z).unwrap().verdict,
            IndecompVerdict::Decomposable { .. }
        ));
    }

    #[test]
    fn projectivity_classifications() {
        let e2 = AlgebraSpec::exterior(2);
        assert!(is_projective(&free_module(&e2, 1, Parity::Even)).unwrap());
        assert!(is_projective(&free_module(&e2, 3, Parity::Odd)).unwrap());
        assert!(!is_projective(&kac0()).unwrap());
        assert!(!is_projective(&trivial(e2.clone(), Parity::Even)).unwrap());
        // tensor of the two Kac modules is projective
        let t = tensor(&kac0(), &dual_kac0()).unwrap();
        assert!(is_projective(&t).unwrap());
        // agreement with the certified constant-type route on small cases
        let limits = Limits::default();
        for m in [
            free_module(&e2, 1, Parity::Even),
            trivial(e2.clone(), Parity::Even),
            w_module(2),
        ] {
            let cert = check_cjt(&m, Cone::Strong, Method::Certified, &limits).unwrap();
            let by_type = cert.constant_type().map(|t| t.a1() == 0).unwrap_or(false);
            assert_eq!(by_type, is_projective(&m).unwrap());
        }
    }

    #[test]
    fn endotrivial_verdicts() {
        let limits = Limits::default();
        let e2 = AlgebraSpec::exterior(2);
        let kev = trivial(e2.clone(), Parity::Even);
        let r = is_endotrivial(&kev, &limits).unwrap();
        assert!(r.endotrivial && r.cjt_route && r.hom_route && !r.probabilistic);
        assert!(r.sdim_squares);
        let o = omega(&kev, 1).unwrap();
        let r = is_endotrivial(&o, &limits).unwrap();
        assert!(r.endotrivial && r.cjt_route && r.hom_route);
        let sum = direct_sum(&kac0(), &dual_kac0()).unwrap();
        let r = is_endotrivial(&sum, &limits).unwrap();
        assert!(!r.endotrivial && !r.cjt_route && !r.hom_route);
        let f = free_module(&e2, 1, Parity::Even);
        let r = is_endotrivial(&f, &limits).unwrap();
        assert!(!r.endotrivial && !r.cjt_route && !r.hom_route);
    }

    #[test]
    fn stable_equivalence_is_stable_part_only() {
        let t1 = JordanType { a_ev: 1, a_od: 0, a2: 2 };
        let t2 = JordanType { a_ev: 1, a_od: 0, a2: 7 };
        let t3 = JordanType { a_ev: 0, a_od: 1, a2: 2 };
        assert!(stable_equivalent(&t1, &t2));
        assert!(!stable_equivalent(&t1, &t3));
        // the first syzygy flips the stable parity of the trivial module
        let kev = trivial(AlgebraSpec::exterior(2), Parity::Even);
        let o = omega(&kev, 1).unwrap();
        let p = e2_point(3, -2);
        let to = jordan_type_at(&o, &p).unwrap();
        let tp = jordan_type_at(&parity_shift(&kev), &p).unwrap();
        assert!(to.stable_equivalent(&tp));
    }

    #[test]
    fn indecomposability_verdicts() {
        // the Kac module has scalar even endomorphisms
        let r = indecomposability(&kac0()).unwrap();
        assert_eq!(r.end_dim, 1);
        assert_eq!(r.radical_dim, 0);
        assert!(matches!(r.verdict, IndecompVerdict::Indecomposable));
        // a direct sum splits with a visible projection
        let e2 = AlgebraSpec::exterior(2);
        let two = direct_sum(&trivial(e2.clone(), Parity::Even), &trivial(e2, Parity::Even))
            .unwrap();
        let r = indecomposability(&two).unwrap();
        assert_eq!(r.end_dim, 4);
        match &r.verdict {
            IndecompVerdict::Decomposable { idempotent } => {
                let sq = idempotent.mul(idempotent).unwrap();
                assert_eq!(&sq, idempotent);
                assert!(!idempotent.is_zero());
                assert_ne!(*idempotent, Matrix::identity(2));
            }
            other => panic!("expected decomposable, got {other:?}"),
        }
        // free rank one is indecomposable
        let f = free_module(&AlgebraSpec::exterior(2), 1, Parity::Even);
        assert!(matches!(
            indecomposability(&f).unwrap().verdict,
            IndecompVerdict::Indecomposable
        ));
        // zigzags are indecomposable
        assert!(matches!(
            indecomposability(&w_module(4)).unwrap().verdict,
            IndecompVerdict::Indecomposable
        ));
    }

    #[test]
    fn mixed_sum_splits_with_an_idempotent() {
        // k_ev ⊕ K(0): summands are non-isomorphic, the split is found
        let s = direct_sum(&trivial(AlgebraSpec::sl11(), Parity::Even), &kac0()).unwrap();
        let r = indecomposability(&s).unwrap();
        match &r.verdict {
            IndecompVerdict::Decomposable { idempotent } => {
                assert_eq!(idempotent.mul(idempotent).unwrap(), *idempotent);
            }
            other => panic!("expected decomposable, got {other:?}"),
        }
    }

    #[test]
    fn dual_preserves_types_at_points() {
        let w = w_module(3);
        let d = dual(&w);
        for p in [e2_point(1, 0), e2_point(0, 1), e2_point(2, 5)] {
            let tw = jordan_type_at(&w, &p).unwrap();
            let td = jordan_type_at(&d, &p).unwrap();
            assert_eq!(tw.fiber(), td.fiber());
            assert_eq!(tw.a2, td.a2);
        }
    }

    #[test]
    fn certified_never_contradicted_by_sampling() {
        let limits = Limits::default();
        let modules = [
            w_module(2),
            w_module(4),
            omega(&trivial(AlgebraSpec::exterior(2), Parity::Even), 2).unwrap(),
            free_module(&AlgebraSpec::exterior(2), 1, Parity::Odd),
        ];
        for m in &modules {
            let cert = check_cjt(m, Cone::Strong, Method::Certified, &limits).unwrap();
            let t = cert.constant_type().expect("these are constant type modules");
            let sampled = check_cjt(
                m,
                Cone::Strong,
                Method::Sampled { samples: 1000, seed: 99 },
                &limits,
            )
            .unwrap();
            assert_eq!(sampled.constant_type(), Some(t));
        }
    }
}
