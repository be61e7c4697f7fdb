//! seeded rational point sampling on cone charts.
//!
//! coordinates are drawn uniformly from the integers in [−17, 17], with the
//! all-zero draw rejected, so every sampled point is nonzero and every run
//! with the same seed reproduces the same points.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraSpec, OddPoint, Stratum};
use crate::scalar::{rint, Rat};

pub const COORD_BOUND: i64 = 17;

/// deterministic stream of nonzero integer coordinate vectors.
pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        PointSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// a nonzero vector of `k` coordinates in [−17, 17].
    pub fn coords(&mut self, k: usize) -> Vec<Rat> {
        assert!(k > 0, "cannot sample a nonzero vector with no coordinates");
        loop {
            let v: Vec<Rat> = (0..k)
                .map(|_| rint(self.rng.gen_range(-COORD_BOUND..=COORD_BOUND)))
                .collect();
            if v.iter().any(|c| !c.is_zero()) {
                return v;
            }
        }
    }

    /// a nonzero point in the given chart of the algebra's cone.
    pub fn point_in(&mut self, algebra: &AlgebraSpec, stratum: &Stratum) -> OddPoint {
        let coords = self.coords(stratum.gen_indices.len());
        stratum_point_for(algebra, stratum, &coords)
    }

    /// a nonzero point of the full odd space (strong chart).
    pub fn strong_point(&mut self, algebra: &AlgebraSpec) -> OddPoint {
        let coords = self.coords(algebra.num_odd());
        OddPoint::new(algebra.clone(), coords).expect("coordinate count matches")
    }
}

/// lift chart coordinates without needing a module in hand.
pub fn stratum_point_for(algebra: &AlgebraSpec, stratum: &Stratum, coords: &[Rat]) -> OddPoint {
    let mut full = vec![Rat::zero(); algebra.num_odd()];
    for (&g, c) in stratum.gen_indices.iter().zip(coords) {
        full[g] = c.clone();
    }
    OddPoint::new(algebra.clone(), full).expect("coordinate count matches")
}

/// `count` seeded points in one chart.
pub fn sample_points(
    algebra: &AlgebraSpec,
    stratum: &Stratum,
    count: usize,
    seed: u64,
) -> Vec<OddPoint> {
    let mut s = PointSampler::new(seed);
    (0..count).map(|_| s.point_in(algebra, stratum)).collect()
}
