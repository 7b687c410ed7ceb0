use std::collections::VecDeque;

use crate::diagram::{BirthDeathPair, PersistenceDiagram};
use crate::matching::PartialMatching;
use crate::scalar::Scalar;

const FREE: usize = usize::MAX;

/// Maximum bipartite matching by shortest augmenting paths in phases.
/// Returns `mate_left[i]` (`FREE` when unmatched).
fn hopcroft_karp(adj: &[Vec<usize>], right: usize) -> Vec<usize> {
    let left = adj.len();
    let mut mate_left = vec![FREE; left];
    let mut mate_right = vec![FREE; right];
    let mut dist = vec![0usize; left];
    loop {
        let mut queue = VecDeque::new();
        for i in 0..left {
            if mate_left[i] == FREE {
                dist[i] = 0;
                queue.push_back(i);
            } else {
                dist[i] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                match mate_right[j] {
                    FREE => found = true,
                    k if dist[k] == usize::MAX => {
                        dist[k] = dist[i] + 1;
                        queue.push_back(k);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            return mate_left;
        }
        for i in 0..left {
            if mate_left[i] == FREE {
                augment(i, adj, &mut mate_left, &mut mate_right, &mut dist);
            }
        }
    }
}

fn augment(
    i: usize,
    adj: &[Vec<usize>],
    mate_left: &mut [usize],
    mate_right: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &j in &adj[i] {
        let k = mate_right[j];
        let ok = k == FREE
            || (dist[k] == dist[i] + 1 && augment(k, adj, mate_left, mate_right, dist));
        if ok {
            mate_left[i] = j;
            mate_right[j] = i;
            return true;
        }
    }
    dist[i] = usize::MAX;
    false
}

/// The diagonal-augmented graph at threshold `delta`. Left vertices are the
/// points of `a` followed by one diagonal slot per point of `b`; right
/// vertices are the points of `b` followed by one diagonal slot per point of
/// `a`. A perfect matching exists iff some partial matching costs `<= delta`.
fn threshold_graph(a: &[BirthDeathPair], b: &[BirthDeathPair], delta: &Scalar) -> Vec<Vec<usize>> {
    let (n, m) = (a.len(), b.len());
    let mut adj = vec![Vec::new(); n + m];
    for (i, p) in a.iter().enumerate() {
        for (j, q) in b.iter().enumerate() {
            if p.linf(q) <= *delta {
                adj[i].push(j);
            }
        }
        if p.diagonal_cost() <= *delta {
            adj[i].push(m + i);
        }
    }
    for (j, q) in b.iter().enumerate() {
        if q.diagonal_cost() <= *delta {
            adj[n + j].push(j);
        }
        // diagonal to diagonal is free
        adj[n + j].extend(m..m + n);
    }
    adj
}

fn matching_at(a: &[BirthDeathPair], b: &[BirthDeathPair], delta: &Scalar) -> Option<PartialMatching> {
    let (n, m) = (a.len(), b.len());
    let adj = threshold_graph(a, b, delta);
    let mate = hopcroft_karp(&adj, n + m);
    if mate.contains(&FREE) {
        return None;
    }
    let mut matched = Vec::new();
    let mut unmatched_left = Vec::new();
    let mut matched_right = vec![false; m];
    for (i, &j) in mate.iter().enumerate().take(n) {
        if j < m {
            matched.push((i, j));
            matched_right[j] = true;
        } else {
            unmatched_left.push(i);
        }
    }
    let unmatched_right = (0..m).filter(|&j| !matched_right[j]).collect();
    Some(PartialMatching::new(matched, unmatched_left, unmatched_right))
}

/// Exact bottleneck distance with an optimal partial matching.
///
/// The optimum is attained at one of the pairwise `l∞` distances, the
/// half-persistences, or zero, so a binary search over that sorted candidate
/// set with a perfect-matching feasibility test is exact.
pub fn bottleneck(a: &PersistenceDiagram, b: &PersistenceDiagram) -> (Scalar, PartialMatching) {
    let pa = a.points();
    let pb = b.points();
    let mut candidates: Vec<Scalar> = Vec::with_capacity(pa.len() * pb.len() + pa.len() + pb.len() + 1);
    candidates.push(Scalar::zero());
    for p in &pa {
        candidates.push(p.diagonal_cost());
        for q in &pb {
            candidates.push(p.linf(q));
        }
    }
    candidates.extend(pb.iter().map(|q| q.diagonal_cost()));
    candidates.sort();
    candidates.dedup();

    // the largest candidate is always feasible (everything to the diagonal)
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    let mut best = matching_at(&pa, &pb, &candidates[hi]).expect("all-diagonal matching");
    while lo < hi {
        let mid = (lo + hi) / 2;
        match matching_at(&pa, &pb, &candidates[mid]) {
            Some(found) => {
                best = found;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    (candidates[hi].clone(), best)
}

/// The bottleneck distance alone.
pub fn bottleneck_distance(a: &PersistenceDiagram, b: &PersistenceDiagram) -> Scalar {
    bottleneck(a, b).0
}
