mod common;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use simplimap::complex::{simplex_boundary, FVector, Simplex};
use simplimap::constructions::{ConstructionTree, JoinTree};
use simplimap::homology::{degree_via_homology, homology, smith_normal_form, IntMatrix};
use simplimap::io::{to_json, ComplexFile};
use simplimap::map::{compose, degree, join_maps, reflect, wrap_map, SimplicialMap};
use simplimap::realization::{realize_construction, verify_polytope};

fn leaf() -> impl Strategy<Value = JoinTree> {
    prop_oneof![
        (3usize..7).prop_map(|m| JoinTree::Cycle { m }),
        (0usize..3).prop_map(|n| JoinTree::SimplexBoundary { n }),
    ]
}

/// Join trees of dimension at most `max_dim`.
fn join_tree(max_dim: usize) -> impl Strategy<Value = JoinTree> {
    prop::collection::vec(leaf(), 1..4)
        .prop_map(move |leaves| {
            let mut kept = Vec::new();
            let mut dim: Option<usize> = None;
            for l in leaves {
                let next = dim.map_or(l.dim(), |d| d + l.dim() + 1);
                if next <= max_dim {
                    dim = Some(next);
                    kept.push(l);
                }
            }
            JoinTree::join_all(kept)
        })
        .prop_filter("some leaf fits", Option::is_some)
        .prop_map(Option::unwrap)
}

/// A join tree with up to `max_subs` subdivisions at arbitrary facets.
fn construction(max_dim: usize, max_subs: usize) -> impl Strategy<Value = ConstructionTree> {
    (join_tree(max_dim), prop::collection::vec(any::<prop::sample::Index>(), 0..=max_subs)).prop_map(
        |(base, picks)| {
            let mut t = ConstructionTree::new(base);
            let mut k = t.build().unwrap();
            let picks = if k.dim() == 0 { Vec::new() } else { picks };
            for p in picks {
                let f = k.facets()[p.index(k.num_facets())].clone();
                k = k.central_subdivision(&f).unwrap().0;
                t.subdivisions.push(f);
            }
            t
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn join_f_vector_is_product(a in join_tree(3), b in join_tree(2)) {
        let ka = a.build().unwrap();
        let kb = b.build().unwrap();
        let j = ka.base().join(kb.base());
        prop_assert_eq!(j.f_vector(), ka.base().f_vector().join_product(&kb.base().f_vector()));
        prop_assert_eq!(JoinTree::join(a, b).f_vector(), j.f_vector());
    }

    #[test]
    fn subdivision_invariants(t in construction(4, 4)) {
        let k = t.build().unwrap();
        let base = t.base.build().unwrap();
        prop_assert_eq!(k.base().euler_characteristic(), base.base().euler_characteristic());
        prop_assert_eq!(k.base().f_vector(), t.f_vector());
        prop_assert_eq!(k.num_vertices(), base.num_vertices() + t.subdivisions.len());
        prop_assert!(k.base().is_closed_pseudomanifold().passed);
        prop_assert!(k.check_coherent().passed);
    }

    #[test]
    fn homology_of_spheres(t in construction(3, 3)) {
        let k = t.build().unwrap();
        prop_assert!(homology(k.base()).is_sphere());
    }

    /// Into a simplex boundary every vertex assignment is simplicial, so
    /// random assignments give random maps of every degree.
    #[test]
    fn signed_count_matches_homology(t in construction(3, 3), seed in prop::collection::vec(0usize..64, 64)) {
        let source = t.build().unwrap();
        let n = source.dim();
        let target = simplex_boundary(n);
        let assignment = (0..source.num_vertices()).map(|v| seed[v % seed.len()] % (n + 2)).collect();
        let f = SimplicialMap::new(source, target, assignment).unwrap();
        let r = degree(&f).unwrap();
        prop_assert!(r.consistent);
        prop_assert_eq!(degree_via_homology(&f).unwrap(), r.degree);
    }

    #[test]
    fn degree_is_multiplicative(a in 1usize..5, b in 1usize..4, c in 1usize..4, flip in any::<bool>()) {
        let m = 3;
        let f = wrap_map(m * a * b, m * b).unwrap();
        let g = wrap_map(m * b, m).unwrap();
        prop_assert_eq!(degree(&compose(&f, &g).unwrap()).unwrap().degree, (a * b) as i64);
        let h = if flip { reflect(3 * c).unwrap().then(&wrap_map(3 * c, 3).unwrap()).unwrap() } else { wrap_map(3 * c, 3).unwrap() };
        let j = join_maps(&g, &h);
        let want = (b * c) as i64 * if flip { -1 } else { 1 };
        prop_assert_eq!(degree(&j).unwrap().degree, want);
        prop_assert_eq!(degree_via_homology(&j).unwrap(), want);
    }

    #[test]
    fn complex_json_round_trip(t in construction(3, 3)) {
        let k = t.build().unwrap();
        let file = ComplexFile::from_oriented(&k).with_construction(&t);
        let text = to_json(&file).unwrap();
        let back: ComplexFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(to_json(&back).unwrap(), text);
        let k2 = back.to_oriented().unwrap();
        prop_assert!(k2.same_oriented(&k));
        prop_assert_eq!(back.construction.as_ref(), Some(&t));
    }

    #[test]
    fn f_vector_json_round_trip(counts in prop::collection::vec(any::<u64>(), 1..6)) {
        let f = FVector::from_u64s(&counts);
        let back: FVector = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn realizations_verify(t in construction(3, 3)) {
        let k = t.build().unwrap();
        let r = realize_construction(&t).unwrap();
        let cert = verify_polytope(&r, k.base()).unwrap();
        prop_assert_eq!(cert.facets.len(), k.num_facets());
        if r.num_vertices() <= 14 {
            let mut hull = common::hull_facets_brute_force(&r);
            hull.sort();
            let mut facets: Vec<Simplex> = k.facets().to_vec();
            facets.sort();
            prop_assert_eq!(hull, facets);
        }
    }
}

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-5i64..=5, n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn snf_divisibility_and_transforms(rows in matrix(5)) {
        let m = IntMatrix::from_rows(&rows);
        let r = smith_normal_form(&m);
        prop_assert_eq!(r.invariant_factors.len(), r.rank);
        for w in r.invariant_factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert!(r.invariant_factors.iter().all(|x| x.is_positive()));
        let (p, q) = r.transforms.clone().unwrap();
        let d = p.mul(&m).mul(&q);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j && i < r.rank { r.invariant_factors[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(d.get(i, j).to_bigint(), want);
            }
        }
    }

    #[test]
    fn snf_determinant(rows in square(6)) {
        let r = smith_normal_form(&IntMatrix::from_rows(&rows));
        let det = common::cofactor_det(&rows).abs();
        let prod: BigInt = if r.rank == rows.len() { r.invariant_factors.iter().product() } else { BigInt::zero() };
        prop_assert_eq!(prod, BigInt::from(det));
    }
}
