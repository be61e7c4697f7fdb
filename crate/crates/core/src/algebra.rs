//! the supported superalgebras and the supermodules over them.
//!
//! two families are supported: `f_r`, the r-fold product of sl(1|1) (with
//! `sl11` the r = 1 case), whose generators are t_i (even), x_i, y_i (odd)
//! with the single nontrivial bracket [x_i, y_i] = x_i y_i + y_i x_i = t_i;
//! and `exterior(s)`, the purely odd abelian superalgebra on z_1..z_s whose
//! modules are exterior-algebra modules.
//!
//! action matrices act on coordinate columns from the left, so `A_u * A_v`
//! is the action of the word "v then u".

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::linalg::SparseMatrix;
use crate::scalar::Rat;
use crate::symbolic::SymbolicOperator;

pub type Matrix = SparseMatrix<Rat>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("action of {gen} has shape {rows}x{cols}, expected {dim}x{dim}")]
    ActionShape { gen: String, rows: usize, cols: usize, dim: usize },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("module is not valid: {0}")]
    Invalid(String),
    #[error("point belongs to {found}, module is over {expected}")]
    AlgebraMismatch { expected: String, found: String },
    #[error("the zero point is excluded here")]
    ZeroPoint,
    #[error("point lies outside the self-commuting cone: {0}")]
    ConeViolation(String),
    #[error("generators do not span a supported subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("module is not in the principal block (some t_i acts nonzero)")]
    NotPrincipalBlock,
    #[error("operation requires an exterior algebra, got {0}")]
    NotExterior(String),
    #[error("subspace is not graded: {0}")]
    NotGraded(String),
    #[error("subspace is not stable under the action: {0}")]
    NotStable(String),
    #[error("modules live over different algebras: {0} vs {1}")]
    DifferentAlgebras(String, String),
    #[error("degree window out of range: {0}")]
    RangeTooLarge(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// +1 for even, -1 for odd.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "ev",
            Parity::Odd => "od",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "ev" | "even" | "0" => Some(Parity::Even),
            "od" | "odd" | "1" => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn combine(self, other: Self) -> Self {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// graded dimension pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub fn dim(&self) -> usize {
        self.even + self.odd
    }

    pub fn sdim(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

/// which algebra a module lives over. `F { r: 1 }` is sl(1|1) itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AlgebraSpec {
    /// r-fold product of sl(1|1); generators t1..tr, x1..xr, y1..yr.
    F { r: usize },
    /// purely odd abelian algebra on z1..zs.
    Exterior { s: usize },
}

impl AlgebraSpec {
    pub fn sl11() -> Self {
        AlgebraSpec::F { r: 1 }
    }

    pub fn f(r: usize) -> Self {
        assert!(r >= 1, "need at least one factor");
        AlgebraSpec::F { r }
    }

    pub fn exterior(s: usize) -> Self {
        assert!(s >= 1, "need at least one generator");
        AlgebraSpec::Exterior { s }
    }

    pub fn is_exterior(&self) -> bool {
        matches!(self, AlgebraSpec::Exterior { .. })
    }

    /// generator names in canonical order with parities.
    pub fn generators(&self) -> Vec<(String, Parity)> {
        match self {
            AlgebraSpec::F { r } => {
                let mut g = Vec::with_capacity(3 * r);
                for i in 1..=*r {
                    g.push((format!("t{i}"), Parity::Even));
                }
                for i in 1..=*r {
                    g.push((format!("x{i}"), Parity::Odd));
                }
                for i in 1..=*r {
                    g.push((format!("y{i}"), Parity::Odd));
                }
                g
            }
            AlgebraSpec::Exterior { s } => {
                (1..=*s).map(|i| (format!("z{i}"), Parity::Odd)).collect()
            }
        }
    }

    /// odd generators in canonical order (x1..xr, y1..yr or z1..zs). this
    /// order fixes the meaning of point coordinates and coefficient
    /// variables.
    pub fn odd_generators(&self) -> Vec<String> {
        self.generators()
            .into_iter()
            .filter_map(|(n, p)| (p == Parity::Odd).then_some(n))
            .collect()
    }

    pub fn even_generators(&self) -> Vec<String> {
        self.generators()
            .into_iter()
            .filter_map(|(n, p)| (p == Parity::Even).then_some(n))
            .collect()
    }

    pub fn generator_parity(&self, name: &str) -> Option<Parity> {
        self.generators().into_iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    /// bracket of two generators: `Some(t_i)` for the pairs {x_i, y_i},
    /// otherwise `None` meaning zero.
    pub fn bracket(&self, a: &str, b: &str) -> Option<String> {
        let AlgebraSpec::F { r } = self else { return None };
        for i in 1..=*r {
            let x = format!("x{i}");
            let y = format!("y{i}");
            if (a == x && b == y) || (a == y && b == x) {
                return Some(format!("t{i}"));
            }
        }
        None
    }

    /// coefficient variable per odd generator: a_i for x_i, b_i for y_i
    /// (plain a, b when r = 1), Y_i for z_i.
    pub fn coeff_var_names(&self) -> Vec<String> {
        match self {
            AlgebraSpec::F { r: 1 } => vec!["a".to_string(), "b".to_string()],
            AlgebraSpec::F { r } => {
                let mut v: Vec<String> = (1..=*r).map(|i| format!("a{i}")).collect();
                v.extend((1..=*r).map(|i| format!("b{i}")));
                v
            }
            AlgebraSpec::Exterior { s } => (1..=*s).map(|i| format!("Y{i}")).collect(),
        }
    }

    pub fn num_odd(&self) -> usize {
        match self {
            AlgebraSpec::F { r } => 2 * r,
            AlgebraSpec::Exterior { s } => *s,
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::F { r: 1 } => write!(f, "sl11"),
            AlgebraSpec::F { r } => write!(f, "f_{r}"),
            AlgebraSpec::Exterior { s } => write!(f, "exterior({s})"),
        }
    }
}

impl AlgebraSpec {
    /// inverse of `Display`: "sl11", "f_r", "exterior(s)".
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if text == "sl11" {
            return Some(AlgebraSpec::sl11());
        }
        if let Some(rest) = text.strip_prefix("f_") {
            let r: usize = rest.parse().ok()?;
            return (r >= 1).then_some(AlgebraSpec::F { r });
        }
        if let Some(rest) = text.strip_prefix("exterior(") {
            let inner = rest.strip_suffix(')')?;
            let s: usize = inner.trim().parse().ok()?;
            return (s >= 1).then_some(AlgebraSpec::Exterior { s });
        }
        None
    }
}

/// finite dimensional supermodule: a parity per basis coordinate and one
/// action matrix per generator.
#[derive(Debug, Clone, PartialEq)]
pub struct Supermodule {
    algebra: AlgebraSpec,
    parity: Vec<Parity>,
    actions: BTreeMap<String, Matrix>,
}

impl Supermodule {
    /// assemble a module, checking names and shapes; generators without an
    /// entry act by zero. relation checking is separate (`validate`).
    pub fn new(
        algebra: AlgebraSpec,
        parity: Vec<Parity>,
        actions: BTreeMap<String, Matrix>,
    ) -> Result<Self, ModuleError> {
        let dim = parity.len();
        let names: Vec<String> = algebra.generators().into_iter().map(|(n, _)| n).collect();
        for name in actions.keys() {
            if !names.iter().any(|n| n == name) {
                return Err(ModuleError::UnknownGenerator(name.clone()));
            }
        }
        let mut full = BTreeMap::new();
        for name in names {
            let m = actions.get(&name).cloned().unwrap_or_else(|| Matrix::zero(dim, dim));
            if m.rows() != dim || m.cols() != dim {
                return Err(ModuleError::ActionShape {
                    gen: name,
                    rows: m.rows(),
                    cols: m.cols(),
                    dim,
                });
            }
            full.insert(name, m);
        }
        Ok(Supermodule { algebra, parity, actions: full })
    }

    pub fn zero_module(algebra: AlgebraSpec) -> Self {
        Supermodule::new(algebra, Vec::new(), BTreeMap::new()).expect("zero module is well formed")
    }

    pub fn algebra(&self) -> &AlgebraSpec {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[Parity] {
        &self.parity
    }

    pub fn action(&self, gen: &str) -> &Matrix {
        self.actions.get(gen).expect("generator validated at construction")
    }

    pub fn actions(&self) -> impl Iterator<Item = (&String, &Matrix)> {
        self.actions.iter()
    }

    pub fn superdim(&self) -> SuperDim {
        let even = self.parity.iter().filter(|p| **p == Parity::Even).count();
        SuperDim { even, odd: self.dim() - even }
    }

    pub fn even_coords(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity[i] == Parity::Even).collect()
    }

    pub fn odd_coords(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity[i] == Parity::Odd).collect()
    }

    /// all violations of the parity grading and the bracket relations; an
    /// empty list means the module is valid.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        // parity compatibility of each action block
        for (name, parity) in self.algebra.generators() {
            let a = self.action(&name);
            for (r, c, _) in a.entries() {
                let ok = match parity {
                    Parity::Even => self.parity[r] == self.parity[c],
                    Parity::Odd => self.parity[r] != self.parity[c],
                };
                if !ok {
                    out.push(format!(
                        "action of {name} violates the parity grading at ({r}, {c})"
                    ));
                }
            }
        }
        // bracket relations, including squares of odd generators
        let gens = self.algebra.generators();
        for (i, (u, pu)) in gens.iter().enumerate() {
            for (v, pv) in gens.iter().skip(i) {
                let au = self.action(u);
                let av = self.action(v);
                let uv = au.mul(av).expect("square matrices");
                let vu = av.mul(au).expect("square matrices");
                let lhs = if *pu == Parity::Odd && *pv == Parity::Odd {
                    uv.add(&vu).expect("same shape")
                } else {
                    uv.sub(&vu).expect("same shape")
                };
                let rhs = match self.algebra.bracket(u, v) {
                    Some(t) => self.action(&t).clone(),
                    None => Matrix::zero(self.dim(), self.dim()),
                };
                if lhs != rhs {
                    out.push(format!("bracket relation [{u}, {v}] fails"));
                }
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<(), ModuleError> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(ModuleError::Invalid(violations.join("; ")))
        }
    }

    /// true iff every even generator acts by zero; vacuously true over
    /// exterior algebras.
    pub fn is_principal_block(&self) -> bool {
        self.algebra.even_generators().iter().all(|t| self.action(t).is_zero())
    }

    /// reinterpret a principal-block f_r module as an exterior(2r) module
    /// (z_i = x_i, z_{r+i} = y_i); exterior modules pass through unchanged.
    pub fn as_exterior(&self) -> Result<Supermodule, ModuleError> {
        match &self.algebra {
            AlgebraSpec::Exterior { .. } => Ok(self.clone()),
            AlgebraSpec::F { .. } => {
                if !self.is_principal_block() {
                    return Err(ModuleError::NotPrincipalBlock);
                }
                let odd = self.algebra.odd_generators();
                let target = AlgebraSpec::exterior(odd.len());
                let mut actions = BTreeMap::new();
                for (i, g) in odd.iter().enumerate() {
                    actions.insert(format!("z{}", i + 1), self.action(g).clone());
                }
                Supermodule::new(target, self.parity.clone(), actions)
            }
        }
    }
}

/// rational point of the odd part, stored in the canonical odd-generator
/// order of its algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct OddPoint {
    algebra: AlgebraSpec,
    coeffs: Vec<Rat>,
}

impl OddPoint {
    pub fn new(algebra: AlgebraSpec, coeffs: Vec<Rat>) -> Result<Self, ModuleError> {
        if coeffs.len() != algebra.num_odd() {
            return Err(ModuleError::AlgebraMismatch {
                expected: format!("{} odd coordinates", algebra.num_odd()),
                found: format!("{}", coeffs.len()),
            });
        }
        Ok(OddPoint { algebra, coeffs })
    }

    /// the point "1 * generator", e.g. the x-axis point of sl11.
    pub fn on_generator(algebra: AlgebraSpec, gen: &str) -> Result<Self, ModuleError> {
        use num_traits::{One, Zero};
        let odd = algebra.odd_generators();
        let Some(i) = odd.iter().position(|g| g == gen) else {
            return Err(ModuleError::UnknownGenerator(gen.to_string()));
        };
        let mut coeffs = vec![Rat::zero(); odd.len()];
        coeffs[i] = Rat::one();
        OddPoint::new(algebra, coeffs)
    }

    pub fn algebra(&self) -> &AlgebraSpec {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// the self-commuting condition: over f_r the x- and y-coordinates of
    /// each factor may not both be nonzero; over exterior algebras every
    /// point self-commutes.
    pub fn in_weak_cone(&self) -> bool {
        use num_traits::Zero;
        match &self.algebra {
            AlgebraSpec::Exterior { .. } => true,
            AlgebraSpec::F { r } => (0..*r)
                .all(|i| self.coeffs[i].is_zero() || self.coeffs[r + i].is_zero()),
        }
    }

    pub fn scale(&self, k: &Rat) -> OddPoint {
        OddPoint {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

impl fmt::Display for OddPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::{One, Signed, Zero};
        let odd = self.algebra.odd_generators();
        let mut first = true;
        for (c, g) in self.coeffs.iter().zip(&odd) {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if abs.is_one() {
                write!(f, "{g}")?;
            } else {
                write!(f, "{abs}*{g}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// the operator by which the point acts: the coefficient-weighted sum of the
/// odd generator actions.
pub fn point_operator(m: &Supermodule, p: &OddPoint) -> Result<Matrix, ModuleError> {
    if p.algebra() != m.algebra() {
        return Err(ModuleError::AlgebraMismatch {
            expected: m.algebra().to_string(),
            found: p.algebra().to_string(),
        });
    }
    use num_traits::Zero;
    let mut acc = Matrix::zero(m.dim(), m.dim());
    for (c, g) in p.coeffs().iter().zip(m.algebra().odd_generators()) {
        if !c.is_zero() {
            acc = acc.add(&m.action(&g).scale(c)).expect("same shape");
        }
    }
    Ok(acc)
}

/// a chart of the self-commuting cone: the linear subspace spanned by the
/// listed odd generators. the weak cone of f_r is covered by the 2^r charts
/// choosing x_i or y_i per factor; the strong cone (and every exterior cone)
/// is one full chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub gen_indices: Vec<usize>,
    pub label: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cone {
    Weak,
    Strong,
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cone::Weak => "weak",
            Cone::Strong => "strong",
        })
    }
}

/// the charts covering the chosen cone.
pub fn strata(algebra: &AlgebraSpec, cone: Cone) -> Vec<Stratum> {
    match (algebra, cone) {
        (AlgebraSpec::Exterior { s }, _) => vec![Stratum {
            gen_indices: (0..*s).collect(),
            label: "full".to_string(),
        }],
        (AlgebraSpec::F { r }, Cone::Strong) => vec![Stratum {
            gen_indices: (0..2 * r).collect(),
            label: "full".to_string(),
        }],
        (AlgebraSpec::F { r }, Cone::Weak) => {
            let odd = algebra.odd_generators();
            let mut out = Vec::with_capacity(1 << r);
            for mask in 0..(1u64 << r) {
                // bit i set: pick y_i, else x_i
                let gen_indices: Vec<usize> = (0..*r)
                    .map(|i| if mask >> i & 1 == 1 { r + i } else { i })
                    .collect();
                let label = gen_indices
                    .iter()
                    .map(|&g| odd[g].clone())
                    .collect::<Vec<_>>()
                    .join(",");
                out.push(Stratum { gen_indices, label });
            }
            out
        }
    }
}

/// symbolic family of point operators over one chart: one variable per
/// chart generator, entries linear.
pub fn stratum_operator(m: &Supermodule, stratum: &Stratum) -> SymbolicOperator<Rat> {
    let odd = m.algebra().odd_generators();
    let names = m.algebra().coeff_var_names();
    let vars: Vec<String> = stratum.gen_indices.iter().map(|&i| names[i].clone()).collect();
    let mats: Vec<&Matrix> =
        stratum.gen_indices.iter().map(|&i| m.action(&odd[i])).collect();
    SymbolicOperator::linear_combination(vars, &mats)
}

/// the full-chart symbolic operator in all odd coefficient variables.
pub fn symbolic_operator(m: &Supermodule) -> SymbolicOperator<Rat> {
    let full = Stratum {
        gen_indices: (0..m.algebra().num_odd()).collect(),
        label: "full".to_string(),
    };
    stratum_operator(m, &full)
}

/// lift chart coordinates to a point of the full odd space.
pub fn stratum_point(
    m: &Supermodule,
    stratum: &Stratum,
    coords: &[Rat],
) -> Result<OddPoint, ModuleError> {
    use num_traits::Zero;
    assert_eq!(coords.len(), stratum.gen_indices.len(), "one coordinate per chart generator");
    let mut full = vec![Rat::zero(); m.algebra().num_odd()];
    for (&g, c) in stratum.gen_indices.iter().zip(coords) {
        full[g] = c.clone();
    }
    OddPoint::new(m.algebra().clone(), full)
}

/// restrict to the subalgebra spanned by the named generators. supported
/// shapes: whole factors {t_i, x_i, y_i} of f_r (giving f_{r'}), an
/// anticommuting set of odd f_r generators (giving exterior(s')), or any
/// subset of exterior generators. generator order in the result follows the
/// canonical order of the original algebra.
pub fn restrict_to_subalgebra(
    m: &Supermodule,
    gens: &[String],
) -> Result<Supermodule, ModuleError> {
    let all = m.algebra().generators();
    let mut seen = Vec::new();
    for g in gens {
        if !all.iter().any(|(n, _)| n == g) {
            return Err(ModuleError::UnknownGenerator(g.clone()));
        }
        if seen.contains(g) {
            return Err(ModuleError::NotSubalgebra(format!("generator {g} listed twice")));
        }
        seen.push(g.clone());
    }
    let has = |name: &str| gens.iter().any(|g| g == name);

    match m.algebra() {
        AlgebraSpec::Exterior { s } => {
            let chosen: Vec<String> = (1..=*s)
                .map(|i| format!("z{i}"))
                .filter(|z| has(z))
                .collect();
            let target = AlgebraSpec::exterior(chosen.len().max(1));
            if chosen.is_empty() {
                return Err(ModuleError::NotSubalgebra("empty generator set".to_string()));
            }
            let mut actions = BTreeMap::new();
            for (j, z) in chosen.iter().enumerate() {
                actions.insert(format!("z{}", j + 1), m.action(z).clone());
            }
            Supermodule::new(target, m.parity().to_vec(), actions)
        }
        AlgebraSpec::F { r } => {
            // bracket closure: x_i and y_i together force t_i
            for i in 1..=*r {
                if has(&format!("x{i}")) && has(&format!("y{i}")) && !has(&format!("t{i}")) {
                    return Err(ModuleError::NotSubalgebra(format!(
                        "x{i} and y{i} bracket to t{i}, which is missing"
                    )));
                }
            }
            let all_odd = gens.iter().all(|g| g.starts_with('x') || g.starts_with('y'));
            if all_odd {
                // anticommuting odd set -> exterior algebra
                let odd = m.algebra().odd_generators();
                let chosen: Vec<&String> = odd.iter().filter(|g| has(g)).collect();
                if chosen.is_empty() {
                    return Err(ModuleError::NotSubalgebra("empty generator set".to_string()));
                }
                let target = AlgebraSpec::exterior(chosen.len());
                let mut actions = BTreeMap::new();
                for (j, g) in chosen.iter().enumerate() {
                    actions.insert(format!("z{}", j + 1), m.action(g).clone());
                }
                return Supermodule::new(target, m.parity().to_vec(), actions);
            }
            // otherwise require whole factors
            let mut factors = Vec::new();
            for i in 1..=*r {
                let t = has(&format!("t{i}"));
                let x = has(&format!("x{i}"));
                let y = has(&format!("y{i}"));
                match (t, x, y) {
                    (true, true, true) => factors.push(i),
                    (false, false, false) => {}
                    _ => {
                        return Err(ModuleError::NotSubalgebra(format!(
                            "factor {i} is only partially included; take {{t{i}, x{i}, y{i}}} \
                             or odd generators alone"
                        )))
                    }
                }
            }
            if factors.is_empty() {
                return Err(ModuleError::NotSubalgebra("empty generator set".to_string()));
            }
            let target = AlgebraSpec::f(factors.len());
            let mut actions = BTreeMap::new();
            for (j, &i) in factors.iter().enumerate() {
                let k = j + 1;
                actions.insert(format!("t{k}"), m.action(&format!("t{i}")).clone());
                actions.insert(format!("x{k}"), m.action(&format!("x{i}")).clone());
                actions.insert(format!("y{k}"), m.action(&format!("y{i}")).clone());
            }
            Supermodule::new(target, m.parity().to_vec(), actions)
        }
    }
}
