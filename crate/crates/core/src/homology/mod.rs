//! Integer simplicial homology, used as an independent check on degrees and
//! on the sphere property of constructed complexes.

mod boundary;
mod integer;
mod snf;
mod sphere;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use boundary::{boundary_matrix, BoundaryMatrix, FaceIndex};
pub use integer::Integer;
pub use snf::{smith_normal_form, IntMatrix, SnfResult};
pub use sphere::{verify_sphere_evidence, EvidenceEntry, SphereEvidence};

use crate::complex::{permutation_sign, OrientedComplex, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::map::SimplicialMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub betti: usize,
    #[serde(with = "bigint_strings")]
    pub torsion: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroups {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyGroups {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(k, g)| if k % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }

    /// Homology of `S^n`: `Z` in degrees 0 and n, or `Z^2` in degree 0 when
    /// `n = 0`; no torsion.
    pub fn is_sphere(&self) -> bool {
        let n = self.groups.len() - 1;
        self.groups.iter().enumerate().all(|(k, g)| {
            let want = match (n, k) {
                (0, 0) => 2,
                (_, 0) => 1,
                (_, k) if k == n => 1,
                _ => 0,
            };
            g.betti == want && g.torsion.is_empty()
        })
    }
}

impl fmt::Display for HomologyGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|g| {
                let mut terms: Vec<String> = Vec::new();
                match g.betti {
                    0 => {}
                    1 => terms.push("Z".into()),
                    b => terms.push(format!("Z^{b}")),
                }
                terms.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `H_k = Z^{f_k - rank ∂_k - rank ∂_{k+1}} ⊕ torsion(∂_{k+1})`.
pub fn homology(k: &SimplicialComplex) -> HomologyGroups {
    let idx = FaceIndex::new(k);
    let n = k.dim();
    // rank and factors of ∂_j for j = 1..=n
    let mut ranks = vec![0usize; n + 2];
    let mut torsion: Vec<Vec<BigInt>> = vec![Vec::new(); n + 2];
    for j in 1..=n {
        let d = boundary::boundary_from_index(&idx, j);
        let (rank, factors) = snf::sparse_invariant_factors(&d.to_sparse());
        ranks[j] = rank;
        torsion[j] = factors.into_iter().filter(|x| *x > BigInt::from(1)).collect();
    }
    let groups = (0..=n)
        .map(|j| HomologyGroup {
            betti: idx.faces(j).len() - ranks[j] - ranks[j + 1],
            torsion: torsion[j + 1].clone(),
        })
        .collect();
    HomologyGroups { groups }
}

/// An n-chain on the facets of a complex, keyed by sorted vertex set.
pub type Chain = HashMap<Simplex, Integer>;

/// `Σ sign(σ) σ`, checked to be a cycle. In dimension 0 the reduced boundary
/// (sum of coefficients) must vanish.
pub fn fundamental_class(k: &OrientedComplex) -> Result<Chain> {
    let chain: Chain = k
        .facets()
        .iter()
        .zip(k.signs())
        .map(|(f, &s)| (f.clone(), Integer::from(s as i64)))
        .collect();
    let n = k.dim();
    if n == 0 {
        let total = chain.values().fold(Integer::zero(), |a, c| &a + c);
        if !total.is_zero() {
            return Err(Error::Homology(format!("0-chain has augmentation {total}")));
        }
        return Ok(chain);
    }
    let idx = FaceIndex::new(k.base());
    let d = boundary::boundary_from_index(&idx, n);
    let coeffs: Vec<Integer> = idx.faces(n).iter().map(|f| chain[f].clone()).collect();
    let bd = d.apply(&coeffs);
    if let Some(r) = bd.iter().position(|c| !c.is_zero()) {
        return Err(Error::Homology(format!(
            "fundamental chain has boundary coefficient {} at ridge {}",
            bd[r],
            idx.faces(n - 1)[r]
        )));
    }
    Ok(chain)
}

/// Degree read off the induced map on top homology: push the source
/// fundamental class forward along the chain map and write the image as a
/// multiple of the target fundamental class.
pub fn degree_via_homology(f: &SimplicialMap) -> Result<i64> {
    let (sd, td) = (f.source().dim(), f.target().dim());
    if sd != td {
        return Err(Error::DimensionMismatch { source_dim: sd, target_dim: td });
    }
    let valid = f.validate();
    if !valid.passed {
        return Err(Error::InvalidMap(valid.detail));
    }
    let src = fundamental_class(f.source())?;
    let tgt = fundamental_class(f.target())?;
    let mut image: Chain = HashMap::new();
    for (sigma, c) in &src {
        let ordered: Vec<VertexId> = sigma.vertices().iter().map(|&v| f.image_of(v)).collect();
        let par = permutation_sign(&ordered);
        if par == 0 {
            continue;
        }
        let mut sorted = ordered;
        sorted.sort_unstable();
        let key = Simplex::new(sorted)?;
        let term = if par > 0 { c.clone() } else { -c };
        let slot = image.entry(key).or_insert_with(Integer::zero);
        *slot = &*slot + &term;
    }
    let mut multiple: Option<Integer> = None;
    for (tau, t) in &tgt {
        let c = image.remove(tau).unwrap_or_else(Integer::zero);
        // t is ±1, so c / t = c * t
        let m = &c * t;
        match &multiple {
            None => multiple = Some(m),
            Some(prev) if *prev == m => {}
            Some(prev) => {
                return Err(Error::Homology(format!(
                    "image is not a multiple of the target class: {prev} vs {m} at {tau}"
                )))
            }
        }
    }
    if let Some((tau, c)) = image.iter().find(|(_, c)| !c.is_zero()) {
        return Err(Error::Homology(format!("image has coefficient {c} on {tau}, outside the target")));
    }
    let d = multiple.unwrap_or_else(Integer::zero);
    d.to_i64().ok_or_else(|| Error::Homology(format!("degree {d} exceeds 64 bits")))
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}
