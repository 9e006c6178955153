use super::shift::shift_map;
use super::{certify, CertifiedConstruction, ConstructionStep, ConstructionTree, JoinTree};
use crate::complex::{simplex_boundary, OrientedComplex};
use crate::error::{Error, Result};
use crate::map::{
    collapse_map_logged, compose, constant_map, degree, identity, join_maps, transposition, wrap_map,
    SimplicialMap,
};

/// Join of wrap maps `cycle(3 k_i) -> cycle(3)`, padded with the identity on
/// a simplex boundary when the dimension is even or exceeds `2h - 1`, and
/// collapsed onto the boundary of the `(n+1)`-simplex. Degree `∏ k_i`.
pub fn multi_circle_map(n: usize, factors: &[usize]) -> Result<CertifiedConstruction> {
    let (map, tree, log) = multi_circle_parts(n, factors)?;
    let h = factors.len();
    let bound = 3 * factors.iter().sum::<usize>() + if n > 2 * h - 1 { n - 2 * h + 2 } else { 0 };
    let d = factors.iter().map(|&k| k as i64).product();
    certify(map, tree, d, bound, log)
}

/// `multi_circle_map` with two factors, `n ≥ 3`: `3k₁ + 3k₂` vertices for
/// `n = 3` and `3k₁ + 3k₂ + n - 2` above.
pub fn base_map(n: usize, k1: usize, k2: usize) -> Result<CertifiedConstruction> {
    if n < 3 {
        return Err(Error::Construction(format!("base maps need dimension at least 3, got {n}")));
    }
    multi_circle_map(n, &[k1, k2])
}

type Parts = (SimplicialMap, ConstructionTree, Vec<ConstructionStep>);

fn multi_circle_parts(n: usize, factors: &[usize]) -> Result<Parts> {
    let h = factors.len();
    if h == 0 || 2 * h - 1 > n {
        return Err(Error::Construction(format!("{h} circle factors do not fit in dimension {n}")));
    }
    if let Some(k) = factors.iter().find(|&&k| k == 0) {
        return Err(Error::Construction(format!("circle factor must be positive, got {k}")));
    }
    let mut log = vec![ConstructionStep::Factors { factors: factors.to_vec() }];
    let mut map = wrap_map(3 * factors[0], 3)?;
    let mut dim = 1;
    for &k in &factors[1..] {
        map = join_maps(&map, &wrap_map(3 * k, 3)?);
        map = collapse_onto(map, dim, 1, &mut log)?;
        dim += 2;
    }
    let mut leaves: Vec<JoinTree> = factors.iter().map(|&k| JoinTree::Cycle { m: 3 * k }).collect();
    if n > dim {
        let p = n - dim - 1;
        log.push(ConstructionStep::Pad { dim: p });
        map = join_maps(&map, &identity(&simplex_boundary(p)));
        map = collapse_onto(map, dim, p, &mut log)?;
        leaves.push(JoinTree::SimplexBoundary { n: p });
    }
    let tree = ConstructionTree::new(JoinTree::join_all(leaves).expect("at least one factor"));
    let (source, target, assignment) = map.into_parts();
    let target = if n == 1 { simplex_boundary(1) } else { target };
    map = SimplicialMap::new(source.with_labels(tree.base.labels()), target, assignment)?;
    Ok((map, tree, log))
}

fn collapse_onto(map: SimplicialMap, k: usize, m: usize, log: &mut Vec<ConstructionStep>) -> Result<SimplicialMap> {
    let (collapse, swap) = collapse_map_logged(k, m);
    log.push(ConstructionStep::Collapse { k, m, swap });
    compose(&map, &collapse)
}

/// Orientation-reversing automorphism of the source: reflection of the first
/// cycle factor, or a swap of two vertices of a simplex boundary.
fn reversal(source: &OrientedComplex, tree: &JoinTree, log: &mut Vec<ConstructionStep>) -> Result<SimplicialMap> {
    let mut leaf = tree;
    while let JoinTree::Join { left, .. } = leaf {
        leaf = left;
    }
    match *leaf {
        JoinTree::Cycle { m } => {
            log.push(ConstructionStep::Reflect { cycle_len: m });
            let assignment = (0..source.num_vertices()).map(|i| if i < m { (m - i) % m } else { i }).collect();
            SimplicialMap::new(source.clone(), source.clone(), assignment)
        }
        _ => {
            log.push(ConstructionStep::Transposition { a: 0, b: 1 });
            transposition(source, 0, 1)
        }
    }
}

/// Positive and negative facet counts after one unit of degree change in the
/// direction `delta`, and the number of vertices it costs.
fn simulate_step(pos: u64, neg: u64, n: u64, delta: i8) -> (u64, u64, usize) {
    let (good, other) = if delta > 0 { (neg, pos) } else { (pos, neg) };
    let (good, other, cost) = if good > 0 {
        (good - 1, other + n + 1, 1)
    } else {
        // subdivide one facet the wrong way, then two of its cone facets
        (n + 1 - 2, other - 1 + 2 * (n + 1), 3)
    };
    if delta > 0 {
        (other, good, cost)
    } else {
        (good, other, cost)
    }
}

fn shift_cost(mut pos: u64, mut neg: u64, n: usize, from: u64, to: u64) -> usize {
    let delta: i8 = if to > from { 1 } else { -1 };
    let mut cost = 0;
    for _ in 0..from.abs_diff(to) {
        let (p, q, c) = simulate_step(pos, neg, n as u64, delta);
        pos = p;
        neg = q;
        cost += c;
    }
    cost
}

fn ceil_sqrt(d: u64) -> u64 {
    let mut r = (d as f64).sqrt() as u64;
    while r * r > d {
        r -= 1;
    }
    while r * r < d {
        r += 1;
    }
    r
}

fn floor_sqrt(d: u64) -> u64 {
    let r = ceil_sqrt(d);
    if r * r > d {
        r - 1
    } else {
        r
    }
}

fn base_vertices(n: usize, k1: u64, k2: u64) -> usize {
    (3 * (k1 + k2)) as usize + if n > 3 { n - 2 } else { 0 }
}

/// The guaranteed vertex bound for degree `d` in dimension `n`: exact
/// formulas for `n ≤ 2` and small degrees, otherwise the best base map of
/// degree at most `|d|` plus three vertices per missing unit of degree, or
/// the identity followed by such shifts.
pub fn paper_bound(n: usize, d: i64) -> usize {
    let a = d.unsigned_abs();
    if a <= 1 {
        return n + 2;
    }
    match n {
        1 => 3 * a as usize,
        2 => 3 * a as usize + 2,
        _ => {
            let mut best = n + 2 + 3 * (a as usize - 1);
            for k1 in 1..=floor_sqrt(a) {
                let k2 = a / k1;
                best = best.min(base_vertices(n, k1, k2) + 3 * (a - k1 * k2) as usize);
            }
            best
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Seed {
    Base(u64, u64),
    Identity,
}

/// Candidate seeds in search order with their simulated vertex cost.
fn candidates(n: usize, a: u64) -> Result<Vec<(Seed, usize)>> {
    let unit = degree(&multi_circle_parts(n, &[1, 1])?.0)?;
    let (p1, n1) = (unit.positive_total(), unit.negative_total());
    let mut out = Vec::new();
    for k1 in 1..=ceil_sqrt(a) {
        let lo = a / k1;
        for k2 in [lo, lo + u64::from(!a.is_multiple_of(k1))] {
            if k2 == 0 || out.iter().any(|&(s, _)| s == Seed::Base(k1, k2)) {
                continue;
            }
            let m = k1 * k2;
            let cost = base_vertices(n, k1, k2) + shift_cost(p1 * m, n1 * m, n, m, a);
            out.push((Seed::Base(k1, k2), cost));
        }
    }
    out.push((Seed::Identity, n + 2 + shift_cost(n as u64 + 2, 0, n, 1, a)));
    Ok(out)
}

/// A sphere of dimension `n` with a map of degree `d` onto the boundary of
/// the `(n+1)`-simplex, using few vertices.
pub fn construct(n: usize, d: i64) -> Result<CertifiedConstruction> {
    if n == 0 {
        return Err(Error::Construction("dimension must be at least 1".into()));
    }
    let a = d.unsigned_abs();
    let bound = paper_bound(n, d);
    if a <= 1 {
        let b = simplex_boundary(n);
        let tree = ConstructionTree::new(JoinTree::SimplexBoundary { n });
        let mut log = Vec::new();
        let map = match d {
            0 => {
                log.push(ConstructionStep::Seed { map: "constant".into() });
                constant_map(&b, &b, 0)?
            }
            1 => {
                log.push(ConstructionStep::Seed { map: "identity".into() });
                identity(&b)
            }
            _ => {
                log.push(ConstructionStep::Seed { map: "identity".into() });
                identity(&b).precompose(&reversal(&b, &tree.base, &mut log)?)?
            }
        };
        return certify(map, tree, d, bound, log);
    }
    if n <= 2 {
        let (mut map, tree, mut log) = multi_circle_parts(n, &[a as usize])?;
        if d < 0 {
            let r = reversal(map.source(), &tree.base, &mut log)?;
            map = map.precompose(&r)?;
        }
        if n == 2 {
            log.push(ConstructionStep::Note {
                text: format!("known optimum for dimension 2 is {} vertices (not constructed)", 2 * a + 2),
            });
        }
        return certify(map, tree, d, bound, log);
    }
    let cands = candidates(n, a)?;
    let (seed, _) = cands
        .iter()
        .copied()
        .reduce(|best, c| if c.1 < best.1 { c } else { best })
        .expect("candidate list is never empty");
    let (mut map, mut tree, mut log, start) = match seed {
        Seed::Base(k1, k2) => {
            let (m, t, l) = multi_circle_parts(n, &[k1 as usize, k2 as usize])?;
            (m, t, l, k1 * k2)
        }
        Seed::Identity => {
            let b = simplex_boundary(n);
            let log = vec![ConstructionStep::Seed { map: "identity".into() }];
            (identity(&b), ConstructionTree::new(JoinTree::SimplexBoundary { n }), log, 1)
        }
    };
    if d < 0 {
        let r = reversal(map.source(), &tree.base, &mut log)?;
        map = map.precompose(&r)?;
    }
    let sign: i8 = if d > 0 { 1 } else { -1 };
    let delta = if a > start { sign } else { -sign };
    for _ in 0..a.abs_diff(start) {
        map = shift_map(&map, delta, &mut tree, &mut log)?;
    }
    certify(map, tree, d, bound, log)
}
