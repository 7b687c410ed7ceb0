//! Seeded property suites checking the identities relating diagrams,
//! landscapes and the distances, each by two independent computations.
//!
//! Cases are independent and run through [`map_indices`]; the reported
//! counterexample is always the lowest failing case, so reports are
//! byte-identical across execution modes.

use std::fmt;

use crate::diagram::PersistenceDiagram;
use crate::exec::{map_indices, Execution};
use crate::gen::{self, CaseRng, DiagramSpec};
use crate::landscape::{invert_by_degree, invert_by_peeling, LandscapeSequence};
use crate::metrics::{
    birthzero_distance, bottleneck_distance, dv_distance, embed_finite_metric, erosion,
    erosion_direct, erosion_path_length, DeathVector,
};
use crate::scalar::Scalar;
use rand::Rng;

type CaseResult = Result<(), String>;

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    check: fn(&mut CaseRng) -> CaseResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// Lowest failing case and its counterexample.
    pub counterexample: Option<(usize, String)>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} cases", self.name, self.cases)?;
        if self.failures > 0 {
            write!(f, ", {} failing", self.failures)?;
        }
        write!(f, ")")
    }
}

fn show(parts: &[(&str, &PersistenceDiagram)], reason: impl fmt::Display) -> String {
    let mut out = String::new();
    for (label, y) in parts {
        out.push_str(&format!("# {label}\n{y}"));
    }
    out.push_str(&format!("# {reason}\n"));
    out
}

fn ensure(cond: bool, parts: &[(&str, &PersistenceDiagram)], reason: impl fmt::Display) -> CaseResult {
    if cond {
        Ok(())
    } else {
        Err(show(parts, reason))
    }
}

fn spec() -> DiagramSpec {
    DiagramSpec::default()
}

fn random_eps(rng: &mut CaseRng) -> Scalar {
    Scalar::new(rng.gen_range(0..=32), 8)
}

fn landscape_erosion(rng: &mut CaseRng) -> CaseResult {
    let y = gen::random_diagram(rng, &spec());
    let z = gen::random_diagram(rng, &spec());
    let e = erosion(&y, &z);
    let (lo, hi) = erosion_direct(&y, &z, &Scalar::dyadic(1, 20)).map_err(|e| e.to_string())?;
    ensure(
        lo <= e && e <= hi,
        &[("Y", &y), ("Y'", &z)],
        format!("landscape distance {e} outside rank-condition bracket [{lo}, {hi}]"),
    )
}

fn structure(rng: &mut CaseRng) -> CaseResult {
    let y = gen::random_diagram(rng, &spec());
    let lam = LandscapeSequence::from_diagram(&y);
    ensure(lam.violations().is_empty(), &[("Y", &y)], "landscape of Y is not a landscape sequence")?;
    let by_degree = invert_by_degree(&lam);
    ensure(by_degree == y, &[("Y", &y), ("degree inverse", &by_degree)], "degree inversion differs")?;
    let by_peeling = invert_by_peeling(&lam).map_err(|e| show(&[("Y", &y)], e))?;
    ensure(by_peeling == y, &[("Y", &y), ("peeling inverse", &by_peeling)], "peeling inversion differs")
}

fn decomposition(rng: &mut CaseRng) -> CaseResult {
    let y = gen::random_diagram(rng, &spec());
    let sum = y.points().iter().fold(LandscapeSequence::empty(), |acc, p| {
        acc.direct_sum(&LandscapeSequence::tent(p.birth(), p.death()).expect("valid pair"))
    });
    ensure(
        sum == LandscapeSequence::from_diagram(&y),
        &[("Y", &y)],
        "direct sum of tents differs from the landscape",
    )
}

fn coflow(rng: &mut CaseRng) -> CaseResult {
    let y = gen::random_diagram(rng, &spec());
    let (e1, e2) = (random_eps(rng), random_eps(rng));
    let parts = [("Y", &y)];
    let shrink = |d: &PersistenceDiagram, e: &Scalar| d.shrink(e).expect("eps >= 0");
    ensure(shrink(&y, &Scalar::zero()) == y, &parts, "shrink by 0 is not the identity")?;
    ensure(shrink(&y, &e1).leq(&y), &parts, format!("shrink by {e1} is not below Y"))?;
    ensure(
        shrink(&shrink(&y, &e2), &e1) == shrink(&y, &(&e1 + &e2)),
        &parts,
        format!("shrink is not additive for {e1}, {e2}"),
    )?;
    let lam = LandscapeSequence::from_diagram(&y);
    let flow = |l: &LandscapeSequence, e: &Scalar| l.flow(e).expect("eps >= 0");
    ensure(flow(&lam, &Scalar::zero()) == lam, &parts, "flow by 0 is not the identity")?;
    ensure(flow(&lam, &e1).leq(&lam), &parts, format!("flow by {e1} is not below the landscape"))?;
    ensure(
        flow(&flow(&lam, &e2), &e1) == flow(&lam, &(&e1 + &e2)),
        &parts,
        format!("flow is not additive for {e1}, {e2}"),
    )?;
    ensure(
        LandscapeSequence::from_diagram(&shrink(&y, &e1)) == flow(&lam, &e1),
        &parts,
        format!("landscape of shrink differs from flow of landscape at {e1}"),
    )
}

fn order(rng: &mut CaseRng) -> CaseResult {
    let y = gen::random_diagram(rng, &spec());
    let z = if rng.gen_bool(0.5) {
        gen::random_diagram(rng, &spec())
    } else {
        y.shrink(&random_eps(rng)).expect("eps >= 0")
    };
    let (ly, lz) = (LandscapeSequence::from_diagram(&y), LandscapeSequence::from_diagram(&z));
    let parts = [("Y", &y), ("Y'", &z)];
    ensure(z.leq(&y) == lz.leq(&ly), &parts, "order on diagrams and on landscapes disagree (Y' vs Y)")?;
    ensure(y.leq(&z) == ly.leq(&lz), &parts, "order on diagrams and on landscapes disagree (Y vs Y')")
}

fn distances(rng: &mut CaseRng) -> CaseResult {
    let y = gen::random_diagram(rng, &spec());
    let z = gen::random_diagram(rng, &spec());
    let w = gen::random_diagram(rng, &spec());
    let parts = [("Y", &y), ("Y'", &z), ("Y''", &w)];
    let (de, db) = (erosion(&y, &z), bottleneck_distance(&y, &z));
    ensure(de <= db, &parts[..2], format!("erosion {de} exceeds bottleneck {db}"))?;
    ensure(de == erosion(&z, &y), &parts[..2], "erosion is not symmetric")?;
    ensure(db == bottleneck_distance(&z, &y), &parts[..2], "bottleneck is not symmetric")?;
    ensure(
        erosion(&y, &w) <= &de + &erosion(&z, &w),
        &parts,
        "erosion violates the triangle inequality",
    )?;
    ensure(
        bottleneck_distance(&y, &w) <= &db + &bottleneck_distance(&z, &w),
        &parts,
        "bottleneck violates the triangle inequality",
    )
}

fn local_isometry(rng: &mut CaseRng) -> CaseResult {
    let y = gen::random_nonempty_diagram(rng, &spec().with_max_points(6));
    let r = y.local_radius().expect("non-empty");
    // reach up to 2r so that some cases leave the ball
    let reach = &r * Scalar::new(rng.gen_range(1..=8), 4);
    let z = gen::perturb(rng, &y, &reach, 3);
    let (db, de) = (bottleneck_distance(&y, &z), erosion(&y, &z));
    let parts = [("Y", &y), ("Y'", &z)];
    if db < r || de < r {
        ensure(db == de, &parts, format!("inside radius {r}: bottleneck {db} != erosion {de}"))?;
    }
    let in_u = y.open_ball_contains(&z, &r);
    ensure(
        (db < r) == (de < r) && (de < r) == in_u,
        &parts,
        format!("ball membership at r = {r} disagrees: d_B {db}, d_E {de}, U {in_u}"),
    )
}

fn birth_zero(rng: &mut CaseRng) -> CaseResult {
    let y = gen::random_birth_zero(rng, 6, 8);
    let z = gen::random_birth_zero(rng, 6, 8);
    let parts = [("Y", &y), ("Y'", &z)];
    let closed = birthzero_distance(&y, &z).expect("birth-zero");
    let db = bottleneck_distance(&y, &z);
    let de = erosion(&y, &z);
    ensure(closed == db && db == de, &parts, format!("closed form {closed}, bottleneck {db}, erosion {de}"))?;
    let dv = dv_distance(
        &DeathVector::from_diagram(&y).expect("birth-zero"),
        &DeathVector::from_diagram(&z).expect("birth-zero"),
    );
    ensure(
        closed <= dv && dv <= &closed + &closed,
        &parts,
        format!("death-vector distance {dv} not within [{closed}, 2·{closed}]"),
    )
}

fn embedding(rng: &mut CaseRng) -> CaseResult {
    let n = rng.gen_range(1..=6);
    let metric = gen::random_metric(rng, n);
    let out = embed_finite_metric(&metric);
    for i in 0..n {
        for j in 0..n {
            let d = birthzero_distance(&out[i], &out[j]).expect("birth-zero");
            if &d != metric.dist(i, j) {
                return Err(format!(
                    "# metric\n{metric}# points {i}, {j}: embedded distance {d}, expected {}\n",
                    metric.dist(i, j)
                ));
            }
        }
    }
    Ok(())
}

fn path_length(rng: &mut CaseRng) -> CaseResult {
    let small = spec().with_max_points(4);
    let y = gen::random_diagram(rng, &small);
    let z = gen::random_diagram(rng, &small);
    let parts = [("Y", &y), ("Y'", &z)];
    let mut prev = erosion(&y, &z);
    for segments in [1usize, 2, 4, 8] {
        let len = erosion_path_length(&y, &z, segments).map_err(|e| show(&parts, e))?;
        ensure(len >= prev, &parts, format!("path length decreased at {segments} segments"))?;
        prev = len;
    }
    let db = bottleneck_distance(&y, &z);
    ensure(prev <= db, &parts, format!("path length {prev} exceeds bottleneck {db}"))
}

pub fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "landscape-erosion", description: "landscape distance lies in the erosion bisection bracket", check: landscape_erosion },
        Suite { name: "structure", description: "both inverse maps recover the diagram", check: structure },
        Suite { name: "decomposition", description: "direct sum of tents equals the landscape", check: decomposition },
        Suite { name: "coflow", description: "coflow axioms for shrink and flow, equivariance", check: coflow },
        Suite { name: "order", description: "diagram order matches landscape order", check: order },
        Suite { name: "distances", description: "d_E <= d_B, symmetry, triangle inequality", check: distances },
        Suite { name: "local-isometry", description: "d_B = d_E near a diagram; open-ball agreement", check: local_isometry },
        Suite { name: "birth-zero", description: "closed form = d_B = d_E; death-vector sandwich", check: birth_zero },
        Suite { name: "embedding", description: "finite metrics embed isometrically", check: embedding },
        Suite { name: "path-length", description: "erosion length grows with refinement up to d_B", check: path_length },
    ]
}

pub fn run_suite(suite: &Suite, seed: u64, cases: usize, exec: Execution) -> SuiteOutcome {
    let results = map_indices(cases, exec, |case| {
        let mut rng = gen::case_rng(seed, case as u64);
        (suite.check)(&mut rng)
    });
    let failures = results.iter().filter(|r| r.is_err()).count();
    let counterexample = results
        .into_iter()
        .enumerate()
        .find_map(|(i, r)| r.err().map(|msg| (i, msg)));
    SuiteOutcome {
        name: suite.name,
        cases,
        failures,
        counterexample,
    }
}

pub fn run_all(seed: u64, cases: usize, exec: Execution) -> Vec<SuiteOutcome> {
    suites()
        .iter()
        .map(|s| run_suite(s, seed, cases, exec))
        .collect()
}
