//! Brute-force reference computations for testing `erodist`.
//!
//! Nothing here calls into the algorithms being checked. Diagrams and
//! landscapes are read as plain coordinate lists and every quantity is
//! recomputed from its definition: matchings by exhaustive enumeration, ranks
//! by counting, landscapes by sampling tents on a grid. Exponential in places;
//! only use on small inputs.

use std::fmt;

use erodist::{LandscapeSequence, PersistenceDiagram, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { size: usize, limit: usize },
    BadGrid(String),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { size, limit } => {
                write!(f, "{size} points in total, brute force is limited to {limit}")
            }
            OracleError::BadGrid(msg) => write!(f, "bad grid: {msg}"),
        }
    }
}

impl std::error::Error for OracleError {}

pub const BRUTEFORCE_LIMIT: usize = 12;

type Pt = (Scalar, Scalar);

/// The pairs of `y` with repetition, as bare coordinates.
pub fn coords(y: &PersistenceDiagram) -> Vec<Pt> {
    y.points()
        .iter()
        .map(|p| (p.birth().clone(), p.death().clone()))
        .collect()
}

fn max(a: Scalar, b: Scalar) -> Scalar {
    if a >= b {
        a
    } else {
        b
    }
}

fn to_diag(p: &Pt) -> Scalar {
    (&p.1 - &p.0) / Scalar::from_int(2)
}

fn linf(p: &Pt, q: &Pt) -> Scalar {
    max((&p.0 - &q.0).abs(), (&p.1 - &q.1).abs())
}

/// Minimum over all partial matchings of the largest cost, where a matched
/// pair costs its l-infinity distance and an unmatched point its distance to
/// the diagonal. Every injective partial map from `y` to `z` is enumerated.
pub fn bottleneck_bruteforce(y: &PersistenceDiagram, z: &PersistenceDiagram) -> Result<Scalar, OracleError> {
    let (a, b) = (coords(y), coords(z));
    if a.len() + b.len() > BRUTEFORCE_LIMIT {
        return Err(OracleError::TooLarge {
            size: a.len() + b.len(),
            limit: BRUTEFORCE_LIMIT,
        });
    }
    let mut used = vec![false; b.len()];
    let mut best: Option<Scalar> = None;
    enumerate(&a, &b, 0, &mut used, Scalar::zero(), &mut best);
    Ok(best.unwrap_or_else(Scalar::zero))
}

fn enumerate(a: &[Pt], b: &[Pt], i: usize, used: &mut [bool], cost: Scalar, best: &mut Option<Scalar>) {
    if let Some(bst) = best {
        if cost >= *bst {
            return;
        }
    }
    if i == a.len() {
        let rest = b
            .iter()
            .zip(used.iter())
            .filter(|(_, u)| !**u)
            .fold(cost, |acc, (q, _)| max(acc, to_diag(q)));
        if best.as_ref().is_none_or(|bst| rest < *bst) {
            *best = Some(rest);
        }
        return;
    }
    enumerate(a, b, i + 1, used, max(cost.clone(), to_diag(&a[i])), best);
    for j in 0..b.len() {
        if !used[j] {
            used[j] = true;
            enumerate(a, b, i + 1, used, max(cost.clone(), linf(&a[i], &b[j])), best);
            used[j] = false;
        }
    }
}

/// Number of pairs with `birth <= b` and `d < death`.
pub fn literal_rank(pairs: &[Pt], b: &Scalar, d: &Scalar) -> usize {
    pairs.iter().filter(|(pb, pd)| pb <= b && d < pd).count()
}

/// Evenly spaced values `lo, lo + step, ..., hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    lo: Scalar,
    hi: Scalar,
    step: Scalar,
}

impl GridSpec {
    pub fn new(lo: Scalar, hi: Scalar, step: Scalar) -> Result<Self, OracleError> {
        if lo >= hi {
            return Err(OracleError::BadGrid(format!("lo {lo} is not below hi {hi}")));
        }
        if !step.is_positive() {
            return Err(OracleError::BadGrid(format!("step {step} is not positive")));
        }
        let count = (&hi - &lo) / &step;
        if Scalar::from_big(count.as_big().floor()) != count {
            return Err(OracleError::BadGrid(format!("step {step} does not divide {}", &hi - &lo)));
        }
        Ok(GridSpec { lo, hi, step })
    }

    /// A grid with the given step reaching at least one unit beyond every
    /// coordinate of the diagrams. `step` should divide 1.
    pub fn covering(diagrams: &[&PersistenceDiagram], step: Scalar) -> Result<Self, OracleError> {
        let all: Vec<Scalar> = diagrams
            .iter()
            .flat_map(|y| coords(y))
            .flat_map(|(b, d)| [b, d])
            .collect();
        let lo = all.iter().min().cloned().unwrap_or_else(Scalar::zero) - Scalar::one();
        let hi = all.iter().max().cloned().unwrap_or_else(Scalar::zero) + Scalar::one();
        let lo = Scalar::from_big(lo.as_big().floor());
        let hi = Scalar::from_big(hi.as_big().ceil());
        GridSpec::new(lo, hi, step)
    }

    pub fn lo(&self) -> &Scalar {
        &self.lo
    }

    pub fn hi(&self) -> &Scalar {
        &self.hi
    }

    pub fn step(&self) -> &Scalar {
        &self.step
    }

    pub fn values(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        let mut v = self.lo.clone();
        while v <= self.hi {
            out.push(v.clone());
            v = &v + &self.step;
        }
        out
    }
}

/// Checks `rank[Y](b - eps, d + eps) <= rank[Y'](b, d)` and the same with the
/// roles swapped, at every grid point with `b <= d`.
pub fn rank_grid_check(y: &PersistenceDiagram, z: &PersistenceDiagram, eps: &Scalar, grid: &GridSpec) -> bool {
    let (a, b) = (coords(y), coords(z));
    let vals = grid.values();
    for (i, lo) in vals.iter().enumerate() {
        for hi in &vals[i..] {
            let (gl, gh) = (lo - eps, hi + eps);
            if literal_rank(&a, &gl, &gh) > literal_rank(&b, lo, hi)
                || literal_rank(&b, &gl, &gh) > literal_rank(&a, lo, hi)
            {
                return false;
            }
        }
    }
    true
}

/// `rank[Y] <= rank[Y']` at every grid point with `b <= d`.
pub fn rank_leq_grid(y: &PersistenceDiagram, z: &PersistenceDiagram, grid: &GridSpec) -> bool {
    let (a, b) = (coords(y), coords(z));
    let vals = grid.values();
    vals.iter().enumerate().all(|(i, lo)| {
        vals[i..]
            .iter()
            .all(|hi| literal_rank(&a, lo, hi) <= literal_rank(&b, lo, hi))
    })
}

fn tent(p: &Pt, t: &Scalar) -> Scalar {
    let up = t - &p.0;
    let down = &p.1 - t;
    let h = if up < down { up } else { down };
    if h.is_negative() {
        Scalar::zero()
    } else {
        h
    }
}

/// k-th largest tent value at `t` (k from 1), zero when there are fewer
/// than k pairs.
pub fn landscape_kmax(y: &PersistenceDiagram, k: usize, t: &Scalar) -> Scalar {
    let mut vals: Vec<Scalar> = coords(y).iter().map(|p| tent(p, t)).collect();
    vals.sort_by(|a, b| b.cmp(a));
    vals.get(k.wrapping_sub(1)).cloned().unwrap_or_else(Scalar::zero)
}

/// Value of a piecewise-linear curve given by its breakpoints; zero outside.
pub fn interpolate(points: &[Pt], t: &Scalar) -> Scalar {
    for w in points.windows(2) {
        let ((t0, h0), (t1, h1)) = (&w[0], &w[1]);
        if t0 <= t && t <= t1 {
            return h0 + &((h1 - h0) * (t - t0) / (t1 - t0));
        }
    }
    Scalar::zero()
}

/// Largest `|lambda_k(t) - mu_k(t)|` over all curve indices and grid values.
pub fn landscape_grid_supnorm(lambda: &LandscapeSequence, mu: &LandscapeSequence, grid: &GridSpec) -> Scalar {
    let (lc, mc) = (lambda.curves(), mu.curves());
    let depth = lc.len().max(mc.len());
    let empty: &[Pt] = &[];
    let mut best = Scalar::zero();
    for k in 0..depth {
        let a = lc.get(k).map_or(empty, |c| c.breakpoints());
        let b = mc.get(k).map_or(empty, |c| c.breakpoints());
        for t in grid.values() {
            best = max(best, (interpolate(a, &t) - interpolate(b, &t)).abs());
        }
    }
    best
}

/// All breakpoint abscissas of both sequences, sorted and deduplicated.
pub fn merged_breakpoints(lambda: &LandscapeSequence, mu: &LandscapeSequence) -> Vec<Scalar> {
    let mut ts: Vec<Scalar> = lambda
        .curves()
        .iter()
        .chain(mu.curves())
        .flat_map(|c| c.breakpoints().iter().map(|(t, _)| t.clone()))
        .collect();
    ts.sort();
    ts.dedup();
    ts
}

/// Birth-zero distance from deaths sorted in decreasing order, padded with
/// zeros: the largest `min(|d - d'|, max(d, d') / 2)` over positions.
pub fn birthzero_closed_form(y: &PersistenceDiagram, z: &PersistenceDiagram) -> Scalar {
    let sorted = |y: &PersistenceDiagram| {
        let mut d: Vec<Scalar> = coords(y).into_iter().map(|(_, d)| d).collect();
        d.sort_by(|a, b| b.cmp(a));
        d
    };
    let (a, b) = (sorted(y), sorted(z));
    let n = a.len().max(b.len());
    let at = |v: &[Scalar], i: usize| v.get(i).cloned().unwrap_or_else(Scalar::zero);
    (0..n).fold(Scalar::zero(), |acc, i| {
        let (x, w) = (at(&a, i), at(&b, i));
        let gap = (&x - &w).abs();
        let half = max(x, w) / Scalar::from_int(2);
        max(acc, if gap < half { gap } else { half })
    })
}
