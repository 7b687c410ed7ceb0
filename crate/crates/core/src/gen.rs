//! Seeded random inputs for property suites, tests and benchmarks.
//!
//! Every case draws from its own ChaCha stream keyed by `(seed, case)`, so a
//! case is reproducible on its own and results do not depend on evaluation
//! order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{BirthDeathPair, PersistenceDiagram};
use crate::metrics::FiniteMetric;
use crate::scalar::Scalar;

pub type CaseRng = ChaCha8Rng;

pub fn case_rng(seed: u64, case: u64) -> CaseRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

/// Shape of random diagrams: up to `max_points` pairs with coordinates
/// `k / 2^denom_exp` in `[0, hi]`.
#[derive(Clone, Copy, Debug)]
pub struct DiagramSpec {
    pub max_points: usize,
    pub hi: i64,
    pub denom_exp: u32,
    /// Chance that a new pair repeats an earlier one.
    pub repeat_prob: f64,
}

impl Default for DiagramSpec {
    fn default() -> Self {
        DiagramSpec {
            max_points: 8,
            hi: 16,
            denom_exp: 2,
            repeat_prob: 0.15,
        }
    }
}

impl DiagramSpec {
    pub fn with_max_points(mut self, n: usize) -> Self {
        self.max_points = n;
        self
    }
}

pub fn random_diagram(rng: &mut CaseRng, spec: &DiagramSpec) -> PersistenceDiagram {
    let n = rng.gen_range(0..=spec.max_points);
    let top = spec.hi << spec.denom_exp;
    let mut points: Vec<BirthDeathPair> = Vec::with_capacity(n);
    for _ in 0..n {
        if !points.is_empty() && rng.gen_bool(spec.repeat_prob) {
            let p = points.choose(rng).expect("non-empty").clone();
            points.push(p);
            continue;
        }
        let b = rng.gen_range(0..top);
        let d = rng.gen_range(b + 1..=top);
        points.push(
            BirthDeathPair::new(Scalar::dyadic(b, spec.denom_exp), Scalar::dyadic(d, spec.denom_exp))
                .expect("b < d"),
        );
    }
    PersistenceDiagram::from_points(points)
}

pub fn random_nonempty_diagram(rng: &mut CaseRng, spec: &DiagramSpec) -> PersistenceDiagram {
    loop {
        let y = random_diagram(rng, spec);
        if !y.is_empty() {
            return y;
        }
    }
}

/// Birth-zero diagram with up to `max_points` deaths `k / 4` in `(0, hi]`.
pub fn random_birth_zero(rng: &mut CaseRng, max_points: usize, hi: i64) -> PersistenceDiagram {
    let n = rng.gen_range(0..=max_points);
    PersistenceDiagram::from_points((0..n).map(|_| {
        let d = rng.gen_range(1..=hi * 4);
        BirthDeathPair::new(Scalar::zero(), Scalar::new(d, 4)).expect("positive death")
    }))
}

/// Dyadic value in `[0, hi]` with denominator `2^denom_exp`.
pub fn random_dyadic(rng: &mut CaseRng, hi: i64, denom_exp: u32) -> Scalar {
    Scalar::dyadic(rng.gen_range(0..=(hi << denom_exp)), denom_exp)
}

/// Uniform `num / den` with `|num| < den`, i.e. a rational in `(-1, 1)`.
fn unit_fraction(rng: &mut CaseRng, den: i64) -> Scalar {
    Scalar::new(rng.gen_range(-(den - 1)..den), den)
}

/// Moves every pair of `y` by less than `reach` in each coordinate and adds up
/// to `extra` pairs of persistence below `2 * reach`. Pairs that would cross
/// the diagonal are left in place.
pub fn perturb(rng: &mut CaseRng, y: &PersistenceDiagram, reach: &Scalar, extra: usize) -> PersistenceDiagram {
    let mut out = Vec::new();
    for p in y.points() {
        let db = reach * unit_fraction(rng, 16);
        let dd = reach * unit_fraction(rng, 16);
        let moved = BirthDeathPair::new(p.birth() + &db, p.death() + &dd);
        out.push(moved.unwrap_or(p));
    }
    let span = y
        .entries()
        .iter()
        .map(|(p, _)| p.death().clone())
        .max()
        .unwrap_or_else(|| Scalar::from_int(16));
    for _ in 0..rng.gen_range(0..=extra) {
        let b = &span * Scalar::new(rng.gen_range(0..=64), 64);
        let pers = (reach + reach) * Scalar::new(rng.gen_range(1..16), 16);
        out.push(BirthDeathPair::new(b.clone(), &b + &pers).expect("positive persistence"));
    }
    PersistenceDiagram::from_points(out)
}

/// A metric on `n` points: random positive rational edge weights closed under
/// shortest paths.
pub fn random_metric(rng: &mut CaseRng, n: usize) -> FiniteMetric {
    let mut d = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let w = Scalar::new(rng.gen_range(1..=48), rng.gen_range(1..=6));
            d[i][j] = w.clone();
            d[j][i] = w;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = &d[i][k] + &d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    FiniteMetric::new(d).expect("shortest-path closure is a metric")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_case() {
        let spec = DiagramSpec::default();
        let a = random_diagram(&mut case_rng(7, 3), &spec);
        let b = random_diagram(&mut case_rng(7, 3), &spec);
        assert_eq!(a, b);
    }

    #[test]
    fn generated_metrics_are_valid() {
        for case in 0..20 {
            let m = random_metric(&mut case_rng(1, case), 1 + case as usize % 6);
            assert_eq!(m.len(), 1 + case as usize % 6);
        }
    }

    #[test]
    fn perturbation_stays_within_reach() {
        let spec = DiagramSpec::default();
        for case in 0..50 {
            let mut rng = case_rng(11, case);
            let y = random_nonempty_diagram(&mut rng, &spec);
            let r = y.local_radius().unwrap();
            let z = perturb(&mut rng, &y, &r, 3);
            assert!(crate::metrics::bottleneck_distance(&y, &z) < r);
        }
    }
}
