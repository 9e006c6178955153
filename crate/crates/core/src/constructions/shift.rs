use super::{certify, CertifiedConstruction, ConstructionStep, ConstructionTree};
use crate::complex::{Simplex, VertexId};
use crate::error::{Error, Result};
use crate::map::{FacetLookup, SimplicialMap};

/// Changes the degree of a certified map by `delta = ±1` through central
/// subdivisions, then certifies the result again.
pub fn degree_shift(c: &CertifiedConstruction, delta: i8) -> Result<CertifiedConstruction> {
    if delta != 1 && delta != -1 {
        return Err(Error::Construction(format!("degree shift must be +1 or -1, got {delta}")));
    }
    let mut tree = c.source_tree.clone();
    let mut log = c.construction_log.clone();
    let map = shift_map(&c.map, delta, &mut tree, &mut log)?;
    certify(map, tree, c.d + i64::from(delta), c.paper_bound + 3, log)
}

/// One unit of degree change. Subdividing a facet of sign `s` changes the
/// degree by `-s`, so `delta` asks for a facet of sign `-delta`; without one,
/// a facet of sign `delta` is subdivided first, which leaves `n + 1` facets of
/// the needed sign, and two of those are subdivided next.
pub(crate) fn shift_map(
    map: &SimplicialMap,
    delta: i8,
    tree: &mut ConstructionTree,
    log: &mut Vec<ConstructionStep>,
) -> Result<SimplicialMap> {
    if let Some(idx) = smallest_facet_with_sign(map, -delta)? {
        log.push(ConstructionStep::Shift { delta, cost: 1 });
        return subdivide(map, idx, tree, log);
    }
    let Some(idx) = smallest_facet_with_sign(map, delta)? else {
        return Err(Error::NoUsableFacet("every source facet has a degenerate image".into()));
    };
    log.push(ConstructionStep::Shift { delta, cost: 3 });
    let mut m = subdivide(map, idx, tree, log)?;
    for _ in 0..2 {
        let idx = smallest_facet_with_sign(&m, -delta)?
            .ok_or_else(|| Error::Construction("cone facets lost their sign".into()))?;
        m = subdivide(&m, idx, tree, log)?;
    }
    Ok(m)
}

fn smallest_facet_with_sign(map: &SimplicialMap, sign: i8) -> Result<Option<usize>> {
    let lookup = FacetLookup::new(map.target());
    let mut best: Option<usize> = None;
    let facets = map.source().facets();
    for i in 0..facets.len() {
        if lookup.sign_of(map, i)?.0 == sign && best.is_none_or(|b| facets[i] < facets[b]) {
            best = Some(i);
        }
    }
    Ok(best)
}

/// The new vertex goes to the one target vertex missing from the image of
/// the facet, so every cone facet maps onto a target facet.
fn subdivide(
    map: &SimplicialMap,
    idx: usize,
    tree: &mut ConstructionTree,
    log: &mut Vec<ConstructionStep>,
) -> Result<SimplicialMap> {
    let target = map.target();
    if target.num_vertices() != target.dim() + 2 {
        return Err(Error::Construction("degree shifts need a simplex boundary as target".into()));
    }
    let facet: &Simplex = &map.source().facets()[idx];
    let sign = FacetLookup::new(target).sign_of(map, idx)?.0;
    let mut hit = vec![false; target.num_vertices()];
    for &v in facet.vertices() {
        hit[map.image_of(v)] = true;
    }
    let image: VertexId = hit
        .iter()
        .position(|h| !h)
        .ok_or_else(|| Error::Construction(format!("facet {facet} has a degenerate image")))?;
    let (source, apex) = map.source().central_subdivision_at(idx)?;
    tree.subdivisions.push(facet.clone());
    log.push(ConstructionStep::Subdivide { facet: facet.clone(), sign, apex, image });
    let mut assignment = map.assignment().to_vec();
    assignment.push(image);
    SimplicialMap::new(source, target.clone(), assignment)
}
