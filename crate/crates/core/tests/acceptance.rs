//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! Runs with `harness = false`; `cargo test --test acceptance` prints the
//! table. Cases are seeded and fan out over rayon where available.

use std::process::ExitCode;
use std::time::Instant;

use erodist::exec::{map_indices, Execution};
use erodist::gen::{self, DiagramSpec};
use erodist::landscape::{invert_by_degree, invert_by_peeling};
use erodist::metrics::{
    birthzero_distance, bottleneck_distance, dv_distance, embed_finite_metric, erosion,
    erosion_direct, erosion_path_length, gap_example, DeathVector,
};
use erodist::{erosion_feasible, LandscapeSequence, PersistenceDiagram, Scalar};
use erodist_oracles as oracle;
use rand::Rng;

const SEED: u64 = 0x5eed_2024;

type Check = Result<String, String>;

fn sample() -> PersistenceDiagram {
    PersistenceDiagram::from_ints(&[(1, 7), (3, 8), (2, 5), (2, 5), (9, 10)]).unwrap()
}

fn crossing() -> (PersistenceDiagram, PersistenceDiagram) {
    (
        PersistenceDiagram::from_ints(&[(0, 10), (1, 11)]).unwrap(),
        PersistenceDiagram::from_ints(&[(0, 11), (1, 10)]).unwrap(),
    )
}

fn pair_text(y: &PersistenceDiagram, z: &PersistenceDiagram) -> String {
    format!("Y:\n{y}Y':\n{z}")
}

/// Runs `n` seeded cases for `tag`, reporting the lowest failing case.
fn cases<F>(tag: u64, n: usize, f: F) -> Result<(), String>
where
    F: Fn(&mut gen::CaseRng) -> Result<(), String> + Sync + Send,
{
    let results = map_indices(n, Execution::Parallel, |i| {
        f(&mut gen::case_rng(SEED ^ tag, i as u64))
    });
    match results.into_iter().enumerate().find_map(|(i, r)| r.err().map(|e| (i, e))) {
        Some((i, e)) => Err(format!("case {i}:\n{e}")),
        None => Ok(()),
    }
}

fn c1_landscape_erosion() -> Check {
    let tol = Scalar::dyadic(1, 20);
    let start = Instant::now();
    cases(1, 1000, |rng| {
        let y = gen::random_diagram(rng, &DiagramSpec::default());
        let z = gen::random_diagram(rng, &DiagramSpec::default());
        let e = erosion(&y, &z);
        let (lo, hi) = erosion_direct(&y, &z, &tol).map_err(|e| e.to_string())?;
        if &hi - &lo > tol || e < lo || e > hi {
            return Err(format!("{}erosion {e}, bracket [{lo}, {hi}]", pair_text(&y, &z)));
        }
        Ok(())
    })?;
    let secs = start.elapsed().as_secs_f64();
    if secs >= 60.0 {
        return Err(format!("took {secs:.1}s"));
    }
    Ok(format!("1000 pairs in {secs:.2}s"))
}

fn c2_structure() -> Check {
    cases(2, 1000, |rng| {
        let y = gen::random_diagram(rng, &DiagramSpec::default());
        let lam = LandscapeSequence::from_diagram(&y);
        let by_degree = invert_by_degree(&lam);
        let by_peeling = invert_by_peeling(&lam).map_err(|e| e.to_string())?;
        if by_degree != y || by_peeling != y {
            return Err(format!("Y:\n{y}degree:\n{by_degree}peeling:\n{by_peeling}"));
        }
        Ok(())
    })?;
    let lam = LandscapeSequence::from_diagram(&sample());
    if lam.depth() != 4 {
        return Err(format!("sample diagram has {} nonzero curves", lam.depth()));
    }
    Ok("1000 diagrams; sample diagram has 4 curves".into())
}

fn tent_sum(y: &PersistenceDiagram) -> LandscapeSequence {
    y.points().iter().fold(LandscapeSequence::empty(), |acc, p| {
        acc.direct_sum(&LandscapeSequence::tent(p.birth(), p.death()).unwrap())
    })
}

fn c3_decomposition() -> Check {
    cases(3, 1000, |rng| {
        let y = gen::random_diagram(rng, &DiagramSpec::default());
        if tent_sum(&y) != LandscapeSequence::from_diagram(&y) {
            return Err(format!("Y:\n{y}"));
        }
        Ok(())
    })?;
    let expected = "\
1 1:0 4:3 5:2 11/2:5/2 8:0 9:0 19/2:1/2 10:0
2 2:0 7/2:3/2 4:1 5:2 7:0
3 2:0 7/2:3/2 5:0
4 3:0 4:1 5:0
";
    let got = tent_sum(&sample()).to_string();
    if got != expected {
        return Err(format!("sample decomposition:\n{got}"));
    }
    Ok("1000 diagrams; sample decomposition matches".into())
}

fn c4_coflow() -> Check {
    cases(4, 500, |rng| {
        let y = gen::random_diagram(rng, &DiagramSpec::default());
        let e1 = Scalar::new(rng.gen_range(0..=32), 8);
        let e2 = Scalar::new(rng.gen_range(0..=32), 8);
        let lam = LandscapeSequence::from_diagram(&y);
        let s = |d: &PersistenceDiagram, e: &Scalar| d.shrink(e).unwrap();
        let f = |l: &LandscapeSequence, e: &Scalar| l.flow(e).unwrap();
        let sum = &e1 + &e2;
        let ok = s(&y, &Scalar::zero()) == y
            && s(&y, &e1).leq(&y)
            && s(&s(&y, &e2), &e1) == s(&y, &sum)
            && f(&lam, &Scalar::zero()) == lam
            && f(&lam, &e1).leq(&lam)
            && f(&f(&lam, &e2), &e1) == f(&lam, &sum)
            && LandscapeSequence::from_diagram(&s(&y, &e1)) == f(&lam, &e1);
        if !ok {
            return Err(format!("Y:\n{y}eps {e1}, {e2}"));
        }
        Ok(())
    })?;
    Ok("500 cases".into())
}

fn c5_order() -> Check {
    cases(5, 500, |rng| {
        let y = gen::random_diagram(rng, &DiagramSpec::default());
        let z = if rng.gen_bool(0.5) {
            gen::random_diagram(rng, &DiagramSpec::default())
        } else {
            y.shrink(&Scalar::new(rng.gen_range(0..=16), 4)).unwrap()
        };
        let (ly, lz) = (LandscapeSequence::from_diagram(&y), LandscapeSequence::from_diagram(&z));
        if z.leq(&y) != lz.leq(&ly) || y.leq(&z) != ly.leq(&lz) {
            return Err(pair_text(&y, &z));
        }
        Ok(())
    })?;
    Ok("500 pairs, half of them forced comparable".into())
}

fn c6_gap() -> Check {
    cases(6, 1000, |rng| {
        let y = gen::random_diagram(rng, &DiagramSpec::default());
        let z = gen::random_diagram(rng, &DiagramSpec::default());
        if erosion(&y, &z) > bottleneck_distance(&y, &z) {
            return Err(pair_text(&y, &z));
        }
        Ok(())
    })?;
    let g = gap_example();
    let brute = oracle::bottleneck_bruteforce(&g.left, &g.right).map_err(|e| e.to_string())?;
    let (lo, hi) = erosion_direct(&g.left, &g.right, &Scalar::dyadic(1, 20)).map_err(|e| e.to_string())?;
    let half = Scalar::new(1, 2);
    let grid = oracle::GridSpec::covering(&[&g.left, &g.right], Scalar::new(1, 8)).unwrap();
    let ok = g.bottleneck == Scalar::one()
        && brute == Scalar::one()
        && g.erosion == half
        && lo <= half
        && half <= hi
        && erosion_feasible(&g.left, &g.right, &half).unwrap()
        && !oracle::rank_grid_check(&g.left, &g.right, &Scalar::new(3, 8), &grid);
    if !ok {
        return Err(format!(
            "{}d_B {} (brute force {brute}), d_E {} in [{lo}, {hi}]",
            pair_text(&g.left, &g.right),
            g.bottleneck,
            g.erosion
        ));
    }
    Ok("1000 pairs; witness d_B = 1, d_E = 1/2".into())
}

/// Perturbs within the local radius and checks d_B = d_E, then perturbs
/// further and checks that both balls and the box-and-band region agree.
/// `extra` bounds the number of added pairs of half-persistence below `r`.
fn local_isometry_case(rng: &mut gen::CaseRng, extra: usize) -> Result<(), String> {
    let y = gen::random_nonempty_diagram(rng, &DiagramSpec::default().with_max_points(6));
    let r = y.local_radius().map_err(|e| e.to_string())?;
    let inside = gen::perturb(rng, &y, &r, extra);
    let (db, de) = (bottleneck_distance(&y, &inside), erosion(&y, &inside));
    if db >= r || db != de || !y.open_ball_contains(&inside, &r) {
        return Err(format!("{}r {r}, d_B {db}, d_E {de}", pair_text(&y, &inside)));
    }
    let reach = &r * Scalar::new(rng.gen_range(4..=12), 4);
    let wide = gen::perturb(rng, &y, &reach, extra);
    let (db, de) = (bottleneck_distance(&y, &wide), erosion(&y, &wide));
    let in_u = y.open_ball_contains(&wide, &r);
    if (db < r) != in_u || (de < r) != in_u {
        return Err(format!("{}r {r}, d_B {db}, d_E {de}, U {in_u}", pair_text(&y, &wide)));
    }
    Ok(())
}

fn c7_local_isometry() -> Check {
    let moved = map_indices(200, Execution::Parallel, |i| {
        local_isometry_case(&mut gen::case_rng(SEED ^ 70, i as u64), 0)
    });
    let moved_fail = moved.iter().filter(|r| r.is_err()).count();
    let banded = map_indices(200, Execution::Parallel, |i| {
        local_isometry_case(&mut gen::case_rng(SEED ^ 7, i as u64), 3)
    });
    let band_fail = banded.iter().filter(|r| r.is_err()).count();
    let summary = format!(
        "points moved only: {moved_fail}/200 failing; with added band pairs: {band_fail}/200 failing"
    );
    match moved.into_iter().chain(banded).find_map(Result::err) {
        Some(e) => Err(format!("{summary}\nfirst counterexample:\n{e}")),
        None => Ok(summary),
    }
}

fn c8_birth_zero() -> Check {
    cases(8, 500, |rng| {
        let y = gen::random_birth_zero(rng, 6, 8);
        let z = gen::random_birth_zero(rng, 6, 8);
        let closed = birthzero_distance(&y, &z).map_err(|e| e.to_string())?;
        let dv = dv_distance(
            &DeathVector::from_diagram(&y).unwrap(),
            &DeathVector::from_diagram(&z).unwrap(),
        );
        let ok = closed == bottleneck_distance(&y, &z)
            && closed == erosion(&y, &z)
            && closed == oracle::birthzero_closed_form(&y, &z)
            && closed <= dv
            && dv <= &closed + &closed;
        if !ok {
            return Err(format!("{}closed form {closed}, dv {dv}", pair_text(&y, &z)));
        }
        Ok(())
    })?;
    let a = PersistenceDiagram::from_ints(&[(0, 1)]).unwrap();
    let b = PersistenceDiagram::from_ratios(&[((0, 1), (1, 8))]).unwrap();
    let d = birthzero_distance(&a, &b).unwrap();
    let dv = dv_distance(&DeathVector::from_diagram(&a).unwrap(), &DeathVector::from_diagram(&b).unwrap());
    if d != Scalar::new(1, 2) || dv != Scalar::new(7, 8) {
        return Err(format!("tightness pair: d {d}, dv {dv}"));
    }
    Ok("500 pairs; tightness pair 1/2 and 7/8".into())
}

fn c9_embedding() -> Check {
    cases(9, 100, |rng| {
        let n = rng.gen_range(1..=6);
        let m = gen::random_metric(rng, n);
        let out = embed_finite_metric(&m);
        for i in 0..n {
            for j in 0..n {
                let d = birthzero_distance(&out[i], &out[j]).map_err(|e| e.to_string())?;
                if &d != m.dist(i, j) {
                    return Err(format!("{m}points {i}, {j}: got {d}"));
                }
            }
        }
        Ok(())
    })?;
    Ok("100 metrics".into())
}

fn c10_path_length() -> Check {
    let (y, z) = crossing();
    let mut lengths = Vec::new();
    for k in 0..=6 {
        lengths.push(erosion_path_length(&y, &z, 1 << k).map_err(|e| e.to_string())?);
    }
    let monotone = lengths.windows(2).all(|w| w[0] <= w[1]);
    let d_b = bottleneck_distance(&y, &z);
    if !monotone || lengths[6] != d_b || d_b != Scalar::one() {
        let shown: Vec<String> = lengths.iter().map(|l| l.to_string()).collect();
        return Err(format!("lengths {}, d_B {d_b}", shown.join(" ")));
    }
    let g = gap_example();
    let gap_len = erosion_path_length(&g.left, &g.right, 64).map_err(|e| e.to_string())?;
    Ok(format!("64 segments give {}; on the gap witness 64 segments give {gap_len}", lengths[6]))
}

fn c11_bruteforce() -> Check {
    cases(11, 400, |rng| {
        let y = gen::random_diagram(rng, &DiagramSpec::default().with_max_points(6));
        let z = gen::random_diagram(rng, &DiagramSpec::default().with_max_points(6));
        let fast = bottleneck_distance(&y, &z);
        let slow = oracle::bottleneck_bruteforce(&y, &z).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("{}Hopcroft-Karp {fast}, brute force {slow}", pair_text(&y, &z)));
        }
        Ok(())
    })?;
    Ok("400 pairs".into())
}

type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("landscape distance equals erosion", c1_landscape_erosion),
        ("inverse maps recover the diagram", c2_structure),
        ("direct sum of tents", c3_decomposition),
        ("coflow axioms and equivariance", c4_coflow),
        ("order preservation", c5_order),
        ("erosion below bottleneck, strict gap", c6_gap),
        ("local isometry and open ball", c7_local_isometry),
        ("birth-zero distances and death vectors", c8_birth_zero),
        ("finite metric embedding", c9_embedding),
        ("erosion path length", c10_path_length),
        ("bottleneck against brute force", c11_bruteforce),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(note) => println!("criterion {:>2} PASS  {name}: {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}\n{why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
