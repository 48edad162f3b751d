use std::collections::BTreeSet;
use std::sync::Arc;

use gqlrc_core::codes::{ag_code, dual_lemma_vector, words_of_weight, Codeword, SyndromeTable};
use gqlrc_core::egg::{elementary_egg_from_oval, elementary_egg_from_ovoid, EggAxiom};
use gqlrc_core::gf::{Elem, Field};
use gqlrc_core::gq::*;
use gqlrc_core::pgeom::*;
use proptest::prelude::*;

fn field(p: u32, h: u32) -> Arc<Field> {
    Arc::new(Field::new(p, h).unwrap())
}

/// Every nonzero vector, normalized, deduplicated.
fn brute_points(f: &Field, dim: usize) -> BTreeSet<Vec<u32>> {
    let q = f.order() as usize;
    let n = dim + 1;
    let mut out = BTreeSet::new();
    for idx in 1..q.pow(n as u32) {
        let mut rest = idx;
        let v: Vec<Elem> = (0..n)
            .map(|_| {
                let d = rest % q;
                rest /= q;
                Elem(d as u32)
            })
            .collect();
        let p = ProjectivePoint::new(f, v).unwrap();
        out.insert(p.coords().iter().map(|e| e.value()).collect());
    }
    out
}

#[test]
fn point_enumeration_matches_brute_force() {
    for (p, h, dim) in [(2, 1, 3), (3, 1, 2), (2, 2, 2), (5, 1, 2), (2, 1, 5)] {
        let f = field(p, h);
        let space = ProjectiveSpace::new(f.clone(), dim);
        let brute = brute_points(&f, dim);
        assert_eq!(space.point_count(), brute.len());
        let listed: BTreeSet<Vec<u32>> = space
            .points()
            .iter()
            .map(|p| p.coords().iter().map(|e| e.value()).collect())
            .collect();
        assert_eq!(listed, brute);
        for (i, pt) in space.points().iter().enumerate() {
            assert_eq!(space.index_of(pt), i);
        }
    }
}

/// Dot products of `v` with every line of the space, mod p.
fn orthogonal_to_all_lines(space: &ProjectiveSpace, v: &Codeword) -> bool {
    let p = space.field().characteristic();
    space.subspaces_of_dim(1).iter().all(|l| {
        let s: u32 = space
            .subspace_point_indices(l)
            .iter()
            .map(|&i| v.entries()[i] as u32)
            .sum();
        s.is_multiple_of(p)
    })
}

#[test]
fn every_lemma_vector_in_pg32_is_a_dual_word() {
    let f = field(2, 1);
    let space = ProjectiveSpace::new(f, 3);
    let h = space.hyperplane_at_infinity();
    let lines_at_inf: Vec<Subspace> = space
        .subspaces_of_dim(1)
        .into_iter()
        .filter(|l| space.contains(&h, l))
        .collect();
    assert_eq!(lines_at_inf.len(), 7);
    let affine = space.affine_point_indices();
    for u in &lines_at_inf {
        for t in &lines_at_inf {
            for &ri in &affine {
                let v = dual_lemma_vector(&space, u, t, &space.point_at(ri)).unwrap();
                assert!(orthogonal_to_all_lines(&space, &v));
            }
        }
    }
}

fn conic_te(p: u32) -> IncidenceStructure {
    let f = field(p, 1);
    let emb = SubfieldEmbedding::new(f.clone(), f.clone()).unwrap();
    build_te(&elementary_egg_from_oval(&conic(&f), &emb).unwrap()).unwrap()
}

/// Axiom 4 by explicit set intersections.
fn brute_alpha(g: &IncidenceStructure) -> BTreeSet<usize> {
    let sets: Vec<BTreeSet<usize>> = g
        .lines()
        .iter()
        .map(|l| l.iter().copied().collect())
        .collect();
    let mut alphas = BTreeSet::new();
    for pt in 0..g.num_points() {
        for l in &sets {
            if l.contains(&pt) {
                continue;
            }
            let count = sets
                .iter()
                .filter(|m| m.contains(&pt) && !m.is_disjoint(l))
                .count();
            alphas.insert(count);
        }
    }
    alphas
}

#[test]
fn shipped_structures_have_consistent_counts() {
    let f2 = field(2, 1);
    let emb2 = SubfieldEmbedding::new(f2.clone(), f2.clone()).unwrap();
    let mut instances = [
        conic_te(2),
        conic_te(3),
        build_te(&elementary_egg_from_ovoid(&elliptic_quadric(&f2), &emb2).unwrap()).unwrap(),
        build_t2star(&field(2, 2), &hyperoval(&field(2, 2)).unwrap()).unwrap(),
        build_classical(ClassicalKind::W3, &f2).unwrap(),
        build_classical(ClassicalKind::Q4, &field(3, 1)).unwrap(),
        build_classical(ClassicalKind::H3, &field(2, 2)).unwrap(),
    ];
    for g in instances.iter_mut() {
        let GeometryParams { s, t, alpha } = g.verify_partial_geometry().unwrap();
        assert_eq!(alpha, 1, "{}", g.name());
        assert_eq!(g.num_points(), (s + 1) * (s * t + 1), "{}", g.name());
        assert_eq!(g.num_lines(), (t + 1) * (s * t + 1), "{}", g.name());
        let m = g.incidence_matrix();
        assert!(m.row_weights().iter().all(|&w| w == s + 1));
        assert!(m.column_weights().iter().all(|&w| w == t + 1));
        assert_eq!(brute_alpha(g), BTreeSet::from([1]), "{}", g.name());
    }
}

#[test]
fn field_reduced_oval_egg() {
    let emb = SubfieldEmbedding::new(field(2, 2), field(2, 1)).unwrap();
    let egg = elementary_egg_from_oval(&conic(&field(2, 2)), &emb).unwrap();
    assert_eq!((egg.n(), egg.m(), egg.len()), (2, 2, 5));
    let report = egg.verify();
    assert!(report.passed());
    for ax in [
        EggAxiom::Cardinality,
        EggAxiom::ElementDimension,
        EggAxiom::TripleSpan,
        EggAxiom::Tangent,
    ] {
        assert!(report.check(ax).unwrap().passed());
    }
    let mut g = build_te(&egg).unwrap();
    assert_eq!((g.num_points(), g.num_lines()), (85, 85));
    assert_eq!(
        g.verify_partial_geometry().unwrap(),
        GeometryParams {
            s: 4,
            t: 4,
            alpha: 1
        }
    );
    g.block_matrix(Ordering::TeBlock)
        .unwrap()
        .check_te_properties(4)
        .unwrap();
}

#[test]
fn quadric_and_egg_constructions_agree_on_profiles() {
    let f2 = field(2, 1);
    let emb = SubfieldEmbedding::new(f2.clone(), f2.clone()).unwrap();
    let mut a =
        build_te(&elementary_egg_from_ovoid(&elliptic_quadric(&f2), &emb).unwrap()).unwrap();
    let mut b = build_classical(ClassicalKind::Q5, &f2).unwrap();
    assert_eq!(a.verify_partial_geometry(), b.verify_partial_geometry());
    assert_eq!(a.degree_profile(), b.degree_profile());
    for p in [2, 3] {
        let mut a = conic_te(p);
        let mut b = build_classical(ClassicalKind::Q4, &field(p, 1)).unwrap();
        assert_eq!(a.verify_partial_geometry(), b.verify_partial_geometry());
        assert_eq!(a.degree_profile(), b.degree_profile());
    }
}

proptest! {
    #[test]
    fn spans_are_canonical(idx in prop::collection::vec(0usize..40, 1..5), shuffle in any::<u64>()) {
        let space = ProjectiveSpace::new(field(3, 1), 3);
        let pts: Vec<Subspace> = idx.iter().map(|&i| space.point_subspace(&space.point_at(i))).collect();
        let refs: Vec<&Subspace> = pts.iter().collect();
        let a = space.span(&refs).unwrap();
        let mut rev = refs.clone();
        rev.rotate_left((shuffle as usize) % refs.len());
        rev.reverse();
        let b = space.span(&rev).unwrap();
        prop_assert_eq!(&a, &b);
        let members = space.subspace_point_indices(&a);
        prop_assert_eq!(members.len(), gaussian_count(3, a.rank()));
        for &i in &idx {
            prop_assert!(members.contains(&i));
        }
    }
}

/// Every F_3 combination of the twelve lines of AG(2,3), built from
/// `ax + by = c` without the projective machinery.
fn brute_ag23_weights() -> [usize; 10] {
    let pts: Vec<(u32, u32)> = (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).collect();
    let mut lines: Vec<Vec<u8>> = Vec::new();
    for (a, b) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
        for c in 0..3 {
            lines.push(
                pts.iter()
                    .map(|&(x, y)| ((a * x + b * y) % 3 == c) as u8)
                    .collect(),
            );
        }
    }
    let mut words = BTreeSet::new();
    for idx in 0..3usize.pow(lines.len() as u32) {
        let mut rest = idx;
        let mut w = vec![0u8; 9];
        for l in &lines {
            let c = (rest % 3) as u8;
            rest /= 3;
            for (wi, li) in w.iter_mut().zip(l) {
                *wi = (*wi + c * li) % 3;
            }
        }
        words.insert(w);
    }
    let mut dist = [0usize; 10];
    for w in &words {
        dist[w.iter().filter(|&&x| x != 0).count()] += 1;
    }
    dist
}

#[test]
fn ag23_has_words_of_weight_four() {
    let dist = brute_ag23_weights();
    assert_eq!(&dist[..5], &[1, 0, 0, 24, 108]);
    let space = ProjectiveSpace::new(field(3, 1), 2);
    let code = ag_code(&space, 1).unwrap();
    let table = SyndromeTable::new(&code);
    for (w, &count) in dist.iter().enumerate().skip(1) {
        assert_eq!(words_of_weight(&table, w, 0..9).len(), count, "weight {w}");
    }
}
