//! module constructions: trivial modules, parity shift, direct sums,
//! Koszul-signed tensor products, duals, hom modules, the Kac modules of
//! the trivial module, free modules, radical/socle/head machinery,
//! projective covers and syzygies, the zigzag family w_module, and seeded
//! random square-zero modules.
//!
//! every function returns a module whose bracket relations hold by
//! construction; `validate` is empty on all outputs.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraSpec, Matrix, ModuleError, Parity, Supermodule};
use crate::linalg::Subspace;
use crate::scalar::Rat;

pub type Space = Subspace<Rat>;

/// the one dimensional module with all actions zero.
pub fn trivial(algebra: AlgebraSpec, parity: Parity) -> Supermodule {
    Supermodule::new(algebra, vec![parity], BTreeMap::new())
        .expect("trivial module is well formed")
}

/// flip every coordinate parity; action matrices are untouched.
pub fn parity_shift(m: &Supermodule) -> Supermodule {
    let parity = m.parity().iter().map(|p| p.flip()).collect();
    let actions: BTreeMap<String, Matrix> =
        m.actions().map(|(n, a)| (n.clone(), a.clone())).collect();
    Supermodule::new(m.algebra().clone(), parity, actions)
        .expect("shifted module keeps its shape")
}

fn same_algebra(a: &Supermodule, b: &Supermodule) -> Result<(), ModuleError> {
    if a.algebra() != b.algebra() {
        return Err(ModuleError::DifferentAlgebras(
            a.algebra().to_string(),
            b.algebra().to_string(),
        ));
    }
    Ok(())
}

/// block diagonal sum; coordinates of `a` come first.
pub fn direct_sum(a: &Supermodule, b: &Supermodule) -> Result<Supermodule, ModuleError> {
    same_algebra(a, b)?;
    let da = a.dim();
    let dim = da + b.dim();
    let mut parity = a.parity().to_vec();
    parity.extend_from_slice(b.parity());
    let mut actions = BTreeMap::new();
    for (name, _) in a.algebra().generators() {
        let mut m = Matrix::zero(dim, dim);
        for (r, c, v) in a.action(&name).entries() {
            m.set(r, c, v.clone());
        }
        for (r, c, v) in b.action(&name).entries() {
            m.set(da + r, da + c, v.clone());
        }
        actions.insert(name, m);
    }
    Supermodule::new(a.algebra().clone(), parity, actions)
}

/// tensor product with the Koszul rule g.(u ⊗ v) = g.u ⊗ v + (−1)^{|u|} u ⊗ g.v
/// for odd g; basis vector e_i ⊗ f_j sits at index i·dim(b) + j.
pub fn tensor(a: &Supermodule, b: &Supermodule) -> Result<Supermodule, ModuleError> {
    same_algebra(a, b)?;
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;
    let mut parity = Vec::with_capacity(dim);
    for pa in a.parity() {
        for pb in b.parity() {
            parity.push(pa.combine(*pb));
        }
    }
    let mut actions = BTreeMap::new();
    for (name, gp) in a.algebra().generators() {
        let mut m = Matrix::zero(dim, dim);
        // A ⊗ I
        for (r, c, v) in a.action(&name).entries() {
            for j in 0..db {
                m.set(r * db + j, c * db + j, v.clone());
            }
        }
        // σ ⊗ B, the sign read off the source coordinate of the left factor
        for (r, c, v) in b.action(&name).entries() {
            for i in 0..da {
                let signed = if gp == Parity::Odd && a.parity()[i] == Parity::Odd {
                    -v.clone()
                } else {
                    v.clone()
                };
                let prev = m.get(i * db + r, i * db + c);
                m.set(i * db + r, i * db + c, prev + signed);
            }
        }
        actions.insert(name, m);
    }
    Supermodule::new(a.algebra().clone(), parity, actions)
}

/// dual module on the dual basis, with (g.f)(v) = −(−1)^{|g||f|} f(g.v);
/// the dual basis vector keeps the parity of its source vector. on
/// matrices: even g ↦ −Aᵀ, odd g ↦ −Aᵀ·σ with σ the parity sign.
pub fn dual(m: &Supermodule) -> Supermodule {
    let dim = m.dim();
    let mut actions = BTreeMap::new();
    for (name, gp) in m.algebra().generators() {
        let t = m.action(&name).transpose().neg();
        let a = match gp {
            Parity::Even => t,
            Parity::Odd => {
                let mut signed = Matrix::zero(dim, dim);
                for (r, c, v) in t.entries() {
                    let w = if m.parity()[c] == Parity::Odd { -v.clone() } else { v.clone() };
                    signed.set(r, c, w);
                }
                signed
            }
        };
        actions.insert(name, a);
    }
    Supermodule::new(m.algebra().clone(), m.parity().to_vec(), actions)
        .expect("dual module keeps its shape")
}

/// Hom_k(m, n), realized through the canonical isomorphism with n ⊗ m*.
pub fn hom(m: &Supermodule, n: &Supermodule) -> Result<Supermodule, ModuleError> {
    same_algebra(m, n)?;
    tensor(n, &dual(m))
}

/// Kac module of the trivial module over sl11: v even, w odd, y.v = w.
pub fn kac0() -> Supermodule {
    let mut y = Matrix::zero(2, 2);
    y.set(1, 0, Rat::one());
    let mut actions = BTreeMap::new();
    actions.insert("y1".to_string(), y);
    Supermodule::new(AlgebraSpec::sl11(), vec![Parity::Even, Parity::Odd], actions)
        .expect("Kac module is well formed")
}

/// dual Kac module of the trivial module over sl11: u odd, z even, x.u = z.
pub fn dual_kac0() -> Supermodule {
    let mut x = Matrix::zero(2, 2);
    x.set(1, 0, Rat::one());
    let mut actions = BTreeMap::new();
    actions.insert("x1".to_string(), x);
    Supermodule::new(AlgebraSpec::sl11(), vec![Parity::Odd, Parity::Even], actions)
        .expect("dual Kac module is well formed")
}

/// left multiplication matrices of the exterior algebra on a free module
/// whose generators carry the given parities. basis: generator j with the
/// square-free word S sits at index j·2^s + S (S a bitmask), with parity
/// parities[j] + |S|.
fn free_on_parities(s: usize, parities: &[Parity]) -> (Vec<Parity>, Vec<Matrix>) {
    let words = 1usize << s;
    let dim = parities.len() * words;
    let mut parity = Vec::with_capacity(dim);
    for p in parities {
        for mask in 0..words {
            let len_parity =
                if (mask as u32).count_ones() % 2 == 0 { Parity::Even } else { Parity::Odd };
            parity.push(p.combine(len_parity));
        }
    }
    let mut mats = Vec::with_capacity(s);
    for i in 0..s {
        let bit = 1usize << i;
        let mut m = Matrix::zero(dim, dim);
        for (j, _) in parities.iter().enumerate() {
            for mask in 0..words {
                if mask & bit != 0 {
                    continue;
                }
                // z_i moves past the generators of smaller index already in
                // the word
                let below = (mask & (bit - 1)).count_ones();
                let sign = if below % 2 == 0 { Rat::one() } else { -Rat::one() };
                m.set(j * words + (mask | bit), j * words + mask, sign);
            }
        }
        mats.push(m);
    }
    (parity, mats)
}

fn exterior_rank(algebra: &AlgebraSpec) -> usize {
    algebra.num_odd()
}

/// free module of the given rank, all generators in the stated parity. over
/// f_r the result is the principal-block projective with x_i, y_i acting as
/// the 2r exterior left multiplications and t_i ≡ 0.
pub fn free_module(algebra: &AlgebraSpec, rank: usize, parity: Parity) -> Supermodule {
    let s = exterior_rank(algebra);
    let (pv, mats) = free_on_parities(s, &vec![parity; rank]);
    let odd = algebra.odd_generators();
    let mut actions = BTreeMap::new();
    for (g, m) in odd.into_iter().zip(mats) {
        actions.insert(g, m);
    }
    Supermodule::new(algebra.clone(), pv, actions).expect("free module is well formed")
}

/// the submodule generated by all generator images, Σ_g im(A_g). over a
/// local algebra (exterior, or f_r on the principal block) this is the
/// radical of the module.
pub fn radical(m: &Supermodule) -> Space {
    let mut vectors = Vec::new();
    for (_, a) in m.actions() {
        for row in a.image().basis() {
            vectors.push(row.clone());
        }
    }
    Space::from_spanning(m.dim(), vectors)
}

/// the joint kernel ∩_g ker(A_g), the socle in the local setting.
pub fn socle(m: &Supermodule) -> Space {
    let mut acc = Space::full(m.dim());
    for (_, a) in m.actions() {
        acc = acc.intersect(&a.kernel()).expect("same ambient space");
    }
    acc
}

fn graded_split(m: &Supermodule, w: &Space) -> Result<(Space, Space), ModuleError> {
    let n = m.dim();
    let pure = |coords: &[usize]| {
        let rows: Vec<Vec<Rat>> = coords
            .iter()
            .map(|&i| {
                let mut v = vec![Rat::zero(); n];
                v[i] = Rat::one();
                v
            })
            .collect();
        Space::from_spanning(n, rows)
    };
    let even = pure(&m.even_coords());
    let odd = pure(&m.odd_coords());
    let we = w.intersect(&even).expect("same ambient space");
    let wo = w.intersect(&odd).expect("same ambient space");
    if we.dim() + wo.dim() != w.dim() {
        return Err(ModuleError::NotGraded(format!(
            "even and odd parts have dimensions {} + {} but the subspace has dimension {}",
            we.dim(),
            wo.dim(),
            w.dim()
        )));
    }
    Ok((we, wo))
}

/// carve out the module structure on a graded, action-stable subspace.
/// returns the submodule together with the inclusion matrix (columns are
/// the chosen basis: even part first, then odd part).
pub fn submodule(m: &Supermodule, w: &Space) -> Result<(Supermodule, Matrix), ModuleError> {
    let (we, wo) = graded_split(m, w)?;
    let n = m.dim();
    let d = w.dim();
    let mut basis: Vec<Vec<Rat>> = Vec::with_capacity(d);
    let mut pivots: Vec<usize> = Vec::with_capacity(d);
    let mut parity = Vec::with_capacity(d);
    for (part, p) in [(&we, Parity::Even), (&wo, Parity::Odd)] {
        for (row, piv) in part.basis().iter().zip(part.pivots()) {
            basis.push(row.clone());
            pivots.push(*piv);
            parity.push(p);
        }
    }
    let mut include = Matrix::zero(n, d);
    for (k, row) in basis.iter().enumerate() {
        for (i, v) in row.iter().enumerate() {
            if !v.is_zero() {
                include.set(i, k, v.clone());
            }
        }
    }
    // coordinates in this basis can be read off the pivot positions because
    // each pivot column is zero in every other basis vector
    let coords = |v: &[Rat]| -> Result<Vec<Rat>, ModuleError> {
        let x: Vec<Rat> = pivots.iter().map(|&p| v[p].clone()).collect();
        let mut check = vec![Rat::zero(); n];
        for (xk, row) in x.iter().zip(&basis) {
            for (i, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    check[i] += xk * r;
                }
            }
        }
        if check != v {
            return Err(ModuleError::NotStable(
                "a generator maps the subspace outside itself".to_string(),
            ));
        }
        Ok(x)
    };
    let mut actions = BTreeMap::new();
    for (name, _) in m.algebra().generators() {
        let a = m.action(&name);
        let mut sub = Matrix::zero(d, d);
        for (k, row) in basis.iter().enumerate() {
            let img = a.apply(row).expect("ambient dimensions agree");
            for (i, c) in coords(&img)?.into_iter().enumerate() {
                if !c.is_zero() {
                    sub.set(i, k, c);
                }
            }
        }
        actions.insert(name, sub);
    }
    let out = Supermodule::new(m.algebra().clone(), parity, actions)?;
    debug_assert!(out.validate().is_empty());
    Ok((out, include))
}

/// quotient by a graded, action-stable subspace. returns the quotient
/// module together with the projection matrix; the quotient basis is the
/// image of the ambient coordinates away from the subspace pivots.
pub fn quotient(m: &Supermodule, w: &Space) -> Result<(Supermodule, Matrix), ModuleError> {
    graded_split(m, w)?;
    let n = m.dim();
    for row in w.basis() {
        for (_, a) in m.actions() {
            let img = a.apply(row).expect("ambient dimensions agree");
            if !w.contains(&img) {
                return Err(ModuleError::NotStable(
                    "a generator maps the subspace outside itself".to_string(),
                ));
            }
        }
    }
    let cols = w.complement_coords();
    let d = cols.len();
    let parity: Vec<Parity> = cols.iter().map(|&c| m.parity()[c]).collect();
    let mut proj = Matrix::zero(d, n);
    for j in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[j] = Rat::one();
        let r = w.reduce(&e);
        for (i, &c) in cols.iter().enumerate() {
            if !r[c].is_zero() {
                proj.set(i, j, r[c].clone());
            }
        }
    }
    let mut actions = BTreeMap::new();
    for (name, _) in m.algebra().generators() {
        let a = m.action(&name);
        // lift quotient coordinate i to the ambient coordinate cols[i]
        let mut q = Matrix::zero(d, d);
        for (k, &c) in cols.iter().enumerate() {
            let mut e = vec![Rat::zero(); n];
            e[c] = Rat::one();
            let img = a.apply(&e).expect("ambient dimensions agree");
            let img = proj.apply(&img).expect("projection applies");
            for (i, v) in img.into_iter().enumerate() {
                if !v.is_zero() {
                    q.set(i, k, v);
                }
            }
        }
        actions.insert(name, q);
    }
    let out = Supermodule::new(m.algebra().clone(), parity, actions)?;
    debug_assert!(out.validate().is_empty());
    Ok((out, proj))
}

/// m / radical(m).
pub fn head(m: &Supermodule) -> Supermodule {
    quotient(m, &radical(m)).expect("radical is graded and stable").0
}

/// m / socle(m).
pub fn quotient_by_socle(m: &Supermodule) -> Supermodule {
    quotient(m, &socle(m)).expect("socle is graded and stable").0
}

fn require_exterior(m: &Supermodule) -> Result<usize, ModuleError> {
    match m.algebra() {
        AlgebraSpec::Exterior { s } => Ok(*s),
        other => Err(ModuleError::NotExterior(other.to_string())),
    }
}

/// free cover of m on a lifted basis of its head, with the covering map.
/// the cover is minimal: it restricts to an isomorphism on heads.
pub fn projective_cover(m: &Supermodule) -> Result<(Supermodule, Matrix), ModuleError> {
    let s = require_exterior(m)?;
    let rad = radical(m);
    let lifts = rad.complement_coords();
    let head_parities: Vec<Parity> = lifts.iter().map(|&c| m.parity()[c]).collect();
    let (pv, mats) = free_on_parities(s, &head_parities);
    let mut actions = BTreeMap::new();
    for (i, a) in mats.into_iter().enumerate() {
        actions.insert(format!("z{}", i + 1), a);
    }
    let cover_src = Supermodule::new(m.algebra().clone(), pv, actions)?;
    // column for generator j with word S is A_{z_S} applied to the lift,
    // built by peeling the lowest letter of S
    let words = 1usize << s;
    let n = m.dim();
    let mut cover = Matrix::zero(n, cover_src.dim());
    for (j, &c) in lifts.iter().enumerate() {
        let mut images: Vec<Vec<Rat>> = Vec::with_capacity(words);
        let mut e = vec![Rat::zero(); n];
        e[c] = Rat::one();
        images.push(e);
        for mask in 1..words {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            let v = m
                .action(&format!("z{}", low + 1))
                .apply(&images[rest])
                .expect("ambient dimensions agree");
            images.push(v);
        }
        for (mask, v) in images.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    cover.set(i, j * words + mask, x.clone());
                }
            }
        }
    }
    debug_assert_eq!(cover.rank(), n, "cover map must be onto");
    Ok((cover_src, cover))
}

/// syzygy functor: n = 1 is the kernel of the projective cover, n = −1 the
/// dual construction, n = 0 strips projective summands, larger |n| by
/// iteration. exterior algebras only.
pub fn omega(m: &Supermodule, n: i64) -> Result<Supermodule, ModuleError> {
    require_exterior(m)?;
    match n {
        0 => {
            let co = omega(m, -1)?;
            omega(&co, 1)
        }
        1 => {
            let (cover_src, cover) = projective_cover(m)?;
            let ker = cover.kernel();
            Ok(submodule(&cover_src, &ker)?.0)
        }
        -1 => Ok(dual(&omega(&dual(m), 1)?)),
        n if n > 1 => omega(&omega(m, 1)?, n - 1),
        n => omega(&omega(m, -1)?, n + 1),
    }
}

/// zigzag module over exterior(2) of dimension 2n−1: even basis m_1..m_n,
/// odd basis s_1..s_{n−1}, with z1.m_i = s_i and z2.m_{i+1} = s_i.
/// w_module(1) is the trivial even module.
pub fn w_module(n: usize) -> Supermodule {
    assert!(n >= 1, "the zigzag family starts at 1");
    let dim = 2 * n - 1;
    let mut parity = vec![Parity::Even; n];
    parity.extend(vec![Parity::Odd; n - 1]);
    let mut z1 = Matrix::zero(dim, dim);
    let mut z2 = Matrix::zero(dim, dim);
    for i in 0..n - 1 {
        z1.set(n + i, i, Rat::one());
        z2.set(n + i, i + 1, Rat::one());
    }
    let mut actions = BTreeMap::new();
    actions.insert("z1".to_string(), z1);
    actions.insert("z2".to_string(), z2);
    Supermodule::new(AlgebraSpec::exterior(2), parity, actions)
        .expect("zigzag module is well formed")
}

/// seeded random module with Rad² = 0: a random parity split and a random
/// two-layer filtration, every generator mapping the top layer into the
/// bottom and the bottom to zero. deterministic in (algebra, dim, seed).
pub fn random_module(
    algebra: &AlgebraSpec,
    dim: usize,
    seed: u64,
) -> Result<Supermodule, ModuleError> {
    match algebra {
        AlgebraSpec::Exterior { .. } => {}
        other => return Err(ModuleError::NotExterior(other.to_string())),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parity: Vec<Parity> = (0..dim)
        .map(|_| if rng.gen::<bool>() { Parity::Odd } else { Parity::Even })
        .collect();
    let bottom = if dim == 0 { 0 } else { rng.gen_range(0..=dim) };
    let mut actions = BTreeMap::new();
    for g in algebra.odd_generators() {
        let mut a = Matrix::zero(dim, dim);
        for r in 0..bottom {
            for c in bottom..dim {
                if parity[r] != parity[c] {
                    let v: i64 = rng.gen_range(-2..=2);
                    if v != 0 {
                        a.set(r, c, crate::scalar::rint(v));
                    }
                }
            }
        }
        actions.insert(g, a);
    }
    let m = Supermodule::new(algebra.clone(), parity, actions)?;
    debug_assert!(m.validate().is_empty());
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{point_operator, OddPoint, SuperDim};
    use crate::scalar::rint;

    fn sl11_point(a: i64, b: i64) -> OddPoint {
        OddPoint::new(AlgebraSpec::sl11(), vec![rint(a), rint(b)]).unwrap()
    }

    #[test]
    fn trivial_and_shift() {
        let kev = trivial(AlgebraSpec::sl11(), Parity::Even);
        assert_eq!(kev.superdim(), SuperDim { even: 1, odd: 0 });
        let kod = parity_shift(&kev);
        assert_eq!(kod.superdim(), SuperDim { even: 0, odd: 1 });
        assert_eq!(parity_shift(&kod), kev);
        assert!(kod.validate().is_empty());
    }

    #[test]
    fn kac_modules() {
        assert!(kac0().validate().is_empty());
        assert!(dual_kac0().validate().is_empty());
        assert_eq!(kac0().superdim().sdim(), 0);
        // y kills the dual Kac module
        assert!(dual_kac0().action("y1").is_zero());
        assert!(!dual_kac0().action("x1").is_zero());
    }

    #[test]
    fn direct_sum_blocks() {
        let s = direct_sum(&kac0(), &dual_kac0()).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.validate().is_empty());
        assert_eq!(s.action("y1").get(1, 0), rint(1));
        assert_eq!(s.action("x1").get(3, 2), rint(1));
        let zero = Supermodule::zero_module(AlgebraSpec::sl11());
        assert_eq!(direct_sum(&kac0(), &zero).unwrap(), kac0());
        let e = direct_sum(&kac0(), &trivial(AlgebraSpec::exterior(1), Parity::Even));
        assert!(matches!(e, Err(ModuleError::DifferentAlgebras(_, _))));
    }

    #[test]
    fn tensor_koszul_sign_is_explicit() {
        // K(0) ⊗ K(0): y acts by A⊗I + σ⊗A with one sign flip through the
        // odd left coordinate
        let t = tensor(&kac0(), &kac0()).unwrap();
        assert!(t.validate().is_empty());
        let y = t.action("y1");
        assert_eq!(y.get(2, 0), rint(1)); // v⊗v -> w⊗v
        assert_eq!(y.get(1, 0), rint(1)); // v⊗v -> v⊗w
        assert_eq!(y.get(3, 1), rint(1)); // v⊗w -> w⊗w
        assert_eq!(y.get(3, 2), rint(-1)); // w⊗v -> -w⊗w
        assert_eq!(y.nnz(), 4);
        assert_eq!(y.rank(), 2);
    }

    #[test]
    fn tensor_units_and_associativity() {
        let kev = trivial(AlgebraSpec::sl11(), Parity::Even);
        let m = kac0();
        assert_eq!(tensor(&kev, &m).unwrap(), m);
        assert_eq!(tensor(&m, &kev).unwrap(), m);
        let n = dual_kac0();
        let left = tensor(&tensor(&m, &n).unwrap(), &m).unwrap();
        let right = tensor(&m, &tensor(&n, &m).unwrap()).unwrap();
        assert_eq!(left, right);
        assert!(left.validate().is_empty());
    }

    #[test]
    fn tensor_superdim_multiplies() {
        let a = direct_sum(&kac0(), &trivial(AlgebraSpec::sl11(), Parity::Even)).unwrap();
        let b = dual_kac0();
        let t = tensor(&a, &b).unwrap();
        assert_eq!(
            t.superdim().sdim(),
            a.superdim().sdim() * b.superdim().sdim()
        );
        assert_eq!(t.dim(), a.dim() * b.dim());
    }

    #[test]
    fn dual_matrices_and_involution() {
        let d = dual(&kac0());
        assert!(d.validate().is_empty());
        // y on the dual of K(0) sends w* to v* with the signs cancelling
        assert_eq!(d.action("y1").get(0, 1), rint(1));
        assert_eq!(d.action("y1").nnz(), 1);
        assert_eq!(d.superdim(), kac0().superdim());
        // double dual conjugates odd actions by the parity sign, which
        // negates them; the parity sign matrix is the identifying map
        let dd = dual(&d);
        assert_eq!(dd.action("y1").neg(), *kac0().action("y1"));
        assert!(dd.validate().is_empty());
        let kev = trivial(AlgebraSpec::sl11(), Parity::Even);
        assert_eq!(dual(&kev), kev);
    }

    #[test]
    fn hom_unit_law() {
        let kev = trivial(AlgebraSpec::sl11(), Parity::Even);
        let m = kac0();
        assert_eq!(hom(&kev, &m).unwrap(), m);
        let h = hom(&m, &m).unwrap();
        assert_eq!(h.dim(), 4);
        assert_eq!(
            h.superdim().sdim(),
            m.superdim().sdim() * m.superdim().sdim()
        );
        assert!(h.validate().is_empty());
    }

    #[test]
    fn free_module_structure() {
        let f = free_module(&AlgebraSpec::exterior(2), 1, Parity::Even);
        assert_eq!(f.dim(), 4);
        assert_eq!(f.superdim(), SuperDim { even: 2, odd: 2 });
        assert!(f.validate().is_empty());
        // z2·z1 = −z1z2 shows up as a sign in the left multiplication
        assert_eq!(f.action("z2").get(2, 0), rint(1));
        assert_eq!(f.action("z2").get(3, 1), rint(-1));
        assert_eq!(f.action("z1").get(3, 2), rint(1));
        let g = free_module(&AlgebraSpec::exterior(2), 2, Parity::Odd);
        assert_eq!(g.dim(), 8);
        assert_eq!(g.superdim(), SuperDim { even: 4, odd: 4 });
        // free over f_1 realizes the principal block projective
        let p = free_module(&AlgebraSpec::sl11(), 1, Parity::Even);
        assert_eq!(p.dim(), 4);
        assert!(p.validate().is_empty());
        assert!(p.is_principal_block());
    }

    #[test]
    fn radical_socle_head() {
        let f = free_module(&AlgebraSpec::exterior(2), 1, Parity::Even);
        let soc = socle(&f);
        assert_eq!(soc.dim(), 1);
        assert!(soc.contains(&[rint(0), rint(0), rint(0), rint(1)]));
        assert_eq!(radical(&f).dim(), 3);
        let h = head(&f);
        assert_eq!(h.dim(), 1);
        assert_eq!(h.superdim(), SuperDim { even: 1, odd: 0 });
        // height two: radical equals socle on the Kac module seen over
        // exterior(2)
        let k = kac0().as_exterior().unwrap();
        assert_eq!(radical(&k).basis(), socle(&k).basis());
        assert_eq!(radical(&k).dim(), 1);
    }

    #[test]
    fn submodule_and_quotient_round_trip() {
        let f = free_module(&AlgebraSpec::exterior(2), 1, Parity::Even);
        let rad = radical(&f);
        let (sub, include) = submodule(&f, &rad).unwrap();
        assert_eq!(sub.dim(), 3);
        assert!(sub.validate().is_empty());
        // inclusion intertwines the actions
        for g in ["z1", "z2"] {
            let left = f.action(g).mul(&include).unwrap();
            let right = include.mul(sub.action(g)).unwrap();
            assert_eq!(left, right);
        }
        let (q, proj) = quotient(&f, &rad).unwrap();
        assert_eq!(q.dim(), 1);
        for g in ["z1", "z2"] {
            let left = q.action(g).mul(&proj).unwrap();
            let right = proj.mul(f.action(g)).unwrap();
            assert_eq!(left, right);
        }
        // a non-stable subspace is rejected
        let span_top = Space::from_spanning(4, vec![vec![rint(1), rint(0), rint(0), rint(0)]]);
        assert!(matches!(
            submodule(&f, &span_top),
            Err(ModuleError::NotStable(_))
        ));
        // an ungraded subspace is rejected
        let mixed = Space::from_spanning(4, vec![vec![rint(1), rint(1), rint(0), rint(0)]]);
        assert!(matches!(
            submodule(&f, &mixed),
            Err(ModuleError::NotGraded(_))
        ));
    }

    #[test]
    fn cover_and_first_syzygy_of_the_trivial_module() {
        let kev = trivial(AlgebraSpec::exterior(2), Parity::Even);
        let (cover_src, cover) = projective_cover(&kev).unwrap();
        assert_eq!(cover_src.dim(), 4);
        assert_eq!(cover.rank(), 1);
        assert_eq!(cover_src.dim(), kev.dim() + omega(&kev, 1).unwrap().dim());
        let o = omega(&kev, 1).unwrap();
        assert_eq!(o.dim(), 3);
        assert_eq!(o.superdim(), SuperDim { even: 1, odd: 2 });
        assert_eq!(o.superdim().sdim(), -1);
        assert!(o.validate().is_empty());
        // the syzygy is the radical: z1, z2, z1z2 with one relationful sign
        let p = OddPoint::new(AlgebraSpec::exterior(2), vec![rint(3), rint(5)]).unwrap();
        assert_eq!(point_operator(&o, &p).unwrap().rank(), 1);
    }

    #[test]
    fn syzygies_of_projectives_vanish() {
        let f = free_module(&AlgebraSpec::exterior(2), 2, Parity::Even);
        assert_eq!(omega(&f, 1).unwrap().dim(), 0);
        assert_eq!(omega(&f, 0).unwrap().dim(), 0);
    }

    #[test]
    fn omega_signs_and_iteration() {
        let kev = trivial(AlgebraSpec::exterior(2), Parity::Even);
        for n in -3i64..=3 {
            let o = omega(&kev, n).unwrap();
            let expect = if n >= 0 { 2 * n + 1 } else { -2 * n + 1 };
            assert_eq!(o.dim() as i64, expect, "dimension of the {n}-th syzygy");
            assert_eq!(o.superdim().sdim(), if n % 2 == 0 { 1 } else { -1 });
            assert!(o.validate().is_empty());
        }
        // omega(·, 0) strips the free summand
        let mixed = direct_sum(&kev, &free_module(&AlgebraSpec::exterior(2), 1, Parity::Odd))
            .unwrap();
        let core = omega(&mixed, 0).unwrap();
        assert_eq!(core.dim(), 1);
        assert_eq!(core.superdim(), SuperDim { even: 1, odd: 0 });
    }

    #[test]
    fn zigzag_family() {
        assert_eq!(w_module(1), trivial(AlgebraSpec::exterior(2), Parity::Even));
        let w3 = w_module(3);
        assert_eq!(w3.dim(), 5);
        assert_eq!(w3.superdim(), SuperDim { even: 3, odd: 2 });
        assert!(w3.validate().is_empty());
        assert_eq!(w3.action("z1").get(3, 0), rint(1));
        assert_eq!(w3.action("z1").get(4, 1), rint(1));
        assert_eq!(w3.action("z2").get(3, 1), rint(1));
        assert_eq!(w3.action("z2").get(4, 2), rint(1));
        // rank two at every sampled nonzero point
        for (a, b) in [(1, 0), (0, 1), (2, -3), (-1, -1)] {
            let p = OddPoint::new(AlgebraSpec::exterior(2), vec![rint(a), rint(b)]).unwrap();
            assert_eq!(point_operator(&w3, &p).unwrap().rank(), 2);
        }
    }

    #[test]
    fn random_modules_are_valid_and_deterministic() {
        let e2 = AlgebraSpec::exterior(2);
        assert_eq!(random_module(&e2, 0, 7).unwrap().dim(), 0);
        let a = random_module(&e2, 6, 42).unwrap();
        let b = random_module(&e2, 6, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.validate().is_empty());
        let c = random_module(&e2, 6, 43).unwrap();
        assert!(a != c || a.dim() == 0);
        for seed in 0..20 {
            let m = random_module(&AlgebraSpec::exterior(3), 7, seed).unwrap();
            assert!(m.validate().is_empty(), "seed {seed}");
        }
        assert!(matches!(
            random_module(&AlgebraSpec::sl11(), 4, 1),
            Err(ModuleError::NotExterior(_))
        ));
    }

    #[test]
    fn example_one_sum_matches_the_axis_ranks() {
        let s = direct_sum(&kac0(), &dual_kac0()).unwrap();
        let at_x = point_operator(&s, &sl11_point(1, 0)).unwrap();
        let at_y = point_operator(&s, &sl11_point(0, 1)).unwrap();
        assert_eq!(at_x.rank(), 1);
        assert_eq!(at_y.rank(), 1);
        let at_both = point_operator(&s, &sl11_point(1, 1)).unwrap();
        assert_eq!(at_both.rank(), 2);
    }
}
