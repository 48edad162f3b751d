//! Eggs `E_{n,m}` of `PG(2n+m-1, q)`.
//!
//! An egg is a set of `q^m + 1` subspaces of dimension `n - 1` such that any
//! three span a `(3n-1)`-space, each element `E` lying in a tangent space
//! `T_E` of dimension `n + m - 1` disjoint from the other elements.
//! Elementary eggs come from field-reducing an oval (`m = n`) or an ovoid
//! (`m = 2n`); their tangent spaces are the field-reduced tangent lines or
//! tangent planes.

use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::pgeom::{is_arc, ProjectivePoint, ProjectiveSpace, SubfieldEmbedding, Subspace};

#[derive(Debug, Clone)]
pub struct Egg {
    n: usize,
    m: usize,
    field: Arc<Field>,
    elements: Vec<Subspace>,
    tangents: Vec<Subspace>,
}

/// The four defining properties of an egg.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EggAxiom {
    /// `|E| = q^m + 1`
    Cardinality,
    /// every element has projective dimension `n - 1`
    ElementDimension,
    /// any three elements span a `(3n-1)`-space
    TripleSpan,
    /// `T_E ⊇ E`, `dim T_E = n + m - 1`, `T_E` disjoint from the other elements
    Tangent,
}

/// First violation found for an axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EggWitness {
    Count { expected: usize, found: usize },
    Element(usize),
    Triple(usize, usize, usize),
    TangentDimension(usize),
    TangentMissesElement(usize),
    TangentMeets { tangent: usize, element: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: EggAxiom,
    pub witness: Option<EggWitness>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EggReport {
    pub checks: Vec<AxiomCheck>,
}

impl EggReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, axiom: EggAxiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

impl Egg {
    /// Assembles an egg from elements and their tangent spaces (in matching
    /// order). Only shapes are validated here; see [`Egg::verify`].
    pub fn new(
        field: Arc<Field>,
        n: usize,
        m: usize,
        elements: Vec<Subspace>,
        tangents: Vec<Subspace>,
    ) -> Result<Egg> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParameter(format!(
                "egg parameters must be positive, got n = {n}, m = {m}"
            )));
        }
        if elements.len() != tangents.len() {
            return Err(Error::InvalidEgg(format!(
                "{} elements but {} tangent spaces",
                elements.len(),
                tangents.len()
            )));
        }
        let ambient = 2 * n + m - 1;
        for s in elements.iter().chain(&tangents) {
            if s.ambient_dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: s.ambient_dim(),
                });
            }
        }
        Ok(Egg {
            n,
            m,
            field,
            elements,
            tangents,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn tangents(&self) -> &[Subspace] {
        &self.tangents
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `PG(2n+m-1, q)`.
    pub fn space(&self) -> ProjectiveSpace {
        ProjectiveSpace::new(self.field.clone(), 2 * self.n + self.m - 1)
    }

    /// Checks all four axioms exhaustively, recording the first witness of
    /// each violation.
    pub fn verify(&self) -> EggReport {
        let space = self.space();
        let (n, m) = (self.n, self.m);
        let q = self.field.order() as usize;
        let expected = q.pow(m as u32) + 1;
        let count = AxiomCheck {
            axiom: EggAxiom::Cardinality,
            witness: (self.elements.len() != expected).then_some(EggWitness::Count {
                expected,
                found: self.elements.len(),
            }),
        };

        let dims = AxiomCheck {
            axiom: EggAxiom::ElementDimension,
            witness: self
                .elements
                .iter()
                .position(|e| e.proj_dim() != n - 1)
                .map(EggWitness::Element),
        };

        let k = self.elements.len();
        let mut triple = None;
        'outer: for i in 0..k {
            for j in i + 1..k {
                let ij = space
                    .span(&[&self.elements[i], &self.elements[j]])
                    .expect("same ambient space");
                for l in j + 1..k {
                    let s = space
                        .span(&[&ij, &self.elements[l]])
                        .expect("same ambient space");
                    if s.rank() != 3 * n {
                        triple = Some(EggWitness::Triple(i, j, l));
                        break 'outer;
                    }
                }
            }
        }
        let triples = AxiomCheck {
            axiom: EggAxiom::TripleSpan,
            witness: triple,
        };

        let mut tangent = None;
        'tangents: for (i, t) in self.tangents.iter().enumerate() {
            if t.proj_dim() != n + m - 1 {
                tangent = Some(EggWitness::TangentDimension(i));
                break;
            }
            if !space.contains(t, &self.elements[i]) {
                tangent = Some(EggWitness::TangentMissesElement(i));
                break;
            }
            for (j, e) in self.elements.iter().enumerate() {
                if j != i && !space.is_disjoint(t, e) {
                    tangent = Some(EggWitness::TangentMeets {
                        tangent: i,
                        element: j,
                    });
                    break 'tangents;
                }
            }
        }
        let tangents = AxiomCheck {
            axiom: EggAxiom::Tangent,
            witness: tangent,
        };

        EggReport {
            checks: vec![count, dims, triples, tangents],
        }
    }

    /// `(element, tangent)` pairs in canonical order.
    fn canonical_pairs(&self) -> Vec<(&Subspace, &Subspace)> {
        let mut v: Vec<_> = self.elements.iter().zip(&self.tangents).collect();
        v.sort();
        v
    }
}

impl PartialEq for Egg {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.m == other.m
            && self.field == other.field
            && self.canonical_pairs() == other.canonical_pairs()
    }
}

impl Eq for Egg {}

/// Tangent lines at `set[at]`: lines through the point meeting `set` only there.
pub fn tangent_lines(space: &ProjectiveSpace, set: &[ProjectivePoint], at: usize) -> Vec<Subspace> {
    let mut in_set = vec![false; space.point_count()];
    for p in set {
        in_set[space.index_of(p)] = true;
    }
    let p = &set[at];
    let p_idx = space.index_of(p);
    let mut seen: Vec<Subspace> = Vec::new();
    let mut out = Vec::new();
    for qi in 0..space.point_count() {
        if qi == p_idx || in_set[qi] {
            continue;
        }
        let line = space
            .span_with_point(&space.point_subspace(p), &space.point_at(qi))
            .expect("distinct points");
        if seen.contains(&line) {
            continue;
        }
        let meets_only_p = space
            .subspace_point_indices(&line)
            .into_iter()
            .all(|i| i == p_idx || !in_set[i]);
        if meets_only_p {
            out.push(line.clone());
        }
        seen.push(line);
    }
    out
}

/// Elementary egg `E_{n,n}` from an oval of `PG(2, q^n)`.
pub fn elementary_egg_from_oval(oval: &[ProjectivePoint], emb: &SubfieldEmbedding) -> Result<Egg> {
    let plane = ProjectiveSpace::new(emb.big().clone(), 2);
    check_dims(oval, 2)?;
    is_arc(&plane, oval)?;
    let mut tangents = Vec::with_capacity(oval.len());
    for i in 0..oval.len() {
        let t = tangent_lines(&plane, oval, i);
        let Some(line) = t.into_iter().next() else {
            return Err(Error::NoTangent(i));
        };
        tangents.push(line);
    }
    let expected = emb.big().order() as usize + 1;
    if oval.len() != expected {
        return Err(Error::WrongCardinality {
            expected,
            found: oval.len(),
        });
    }
    let n = emb.degree();
    let elements = emb.field_reduce(oval)?;
    let tangents = tangents
        .iter()
        .map(|t| emb.reduce_subspace(t))
        .collect::<Result<Vec<_>>>()?;
    Egg::new(emb.small().clone(), n, n, elements, tangents)
}

/// Elementary egg `E_{n,2n}` from an ovoid of `PG(3, q^n)`.
pub fn elementary_egg_from_ovoid(
    ovoid: &[ProjectivePoint],
    emb: &SubfieldEmbedding,
) -> Result<Egg> {
    let space = ProjectiveSpace::new(emb.big().clone(), 3);
    check_dims(ovoid, 3)?;
    let big_q = emb.big().order() as usize;
    let expected = big_q * big_q + 1;
    if ovoid.len() != expected {
        return Err(Error::WrongCardinality {
            expected,
            found: ovoid.len(),
        });
    }
    is_arc(&space, ovoid)?;
    let mut planes = Vec::with_capacity(ovoid.len());
    for i in 0..ovoid.len() {
        let lines = tangent_lines(&space, ovoid, i);
        if lines.is_empty() {
            return Err(Error::NoTangent(i));
        }
        let refs: Vec<&Subspace> = lines.iter().collect();
        let plane = space.span(&refs)?;
        if plane.proj_dim() != 2 {
            return Err(Error::InvalidEgg(format!(
                "tangent lines at ovoid point {i} span a space of dimension {}",
                plane.proj_dim()
            )));
        }
        planes.push(plane);
    }
    let n = emb.degree();
    let elements = emb.field_reduce(ovoid)?;
    let tangents = planes
        .iter()
        .map(|t| emb.reduce_subspace(t))
        .collect::<Result<Vec<_>>>()?;
    Egg::new(emb.small().clone(), n, 2 * n, elements, tangents)
}

fn check_dims(points: &[ProjectivePoint], dim: usize) -> Result<()> {
    match points.iter().find(|p| p.ambient_dim() != dim) {
        Some(p) => Err(Error::DimensionMismatch {
            expected: dim,
            found: p.ambient_dim(),
        }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pgeom::{conic, elliptic_quadric, hyperoval};

    fn f(p: u32, h: u32) -> Arc<Field> {
        Arc::new(Field::new(p, h).unwrap())
    }

    fn conic_egg(p: u32, h: u32) -> Egg {
        let field = f(p, h);
        let emb = SubfieldEmbedding::new(field.clone(), field.clone()).unwrap();
        elementary_egg_from_oval(&conic(&field), &emb).unwrap()
    }

    #[test]
    fn conic_egg_passes() {
        let egg = conic_egg(2, 1);
        assert_eq!((egg.n(), egg.m(), egg.len()), (1, 1, 3));
        assert!(egg.verify().passed());
        assert!(conic_egg(3, 1).verify().passed());
    }

    #[test]
    fn ovoid_eggs_pass() {
        for (p, expected) in [(2, 5), (3, 10)] {
            let field = f(p, 1);
            let emb = SubfieldEmbedding::new(field.clone(), field.clone()).unwrap();
            let egg = elementary_egg_from_ovoid(&elliptic_quadric(&field), &emb).unwrap();
            assert_eq!((egg.n(), egg.m()), (1, 2));
            assert_eq!(egg.len(), expected);
            assert!(egg.verify().passed());
        }
    }

    #[test]
    fn field_reduced_oval_egg() {
        let big = f(2, 2);
        let emb = SubfieldEmbedding::new(big.clone(), f(2, 1)).unwrap();
        let egg = elementary_egg_from_oval(&conic(&big), &emb).unwrap();
        assert_eq!((egg.n(), egg.m(), egg.len()), (2, 2, 5));
        assert_eq!(egg.space().dim(), 5);
        let report = egg.verify();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn collinear_fake_egg_fails_triple_axiom() {
        let field = f(2, 1);
        let plane = ProjectiveSpace::new(field.clone(), 2);
        let line = plane.subspaces_of_dim(1).remove(0);
        let elements: Vec<Subspace> = plane
            .subspace_points(&line)
            .iter()
            .map(|p| plane.point_subspace(p))
            .collect();
        let tangents = vec![line.clone(), line.clone(), line];
        let egg = Egg::new(field, 1, 1, elements, tangents).unwrap();
        let report = egg.verify();
        assert!(!report.passed());
        assert_eq!(
            report.check(EggAxiom::TripleSpan).unwrap().witness,
            Some(EggWitness::Triple(0, 1, 2))
        );
        assert!(report.check(EggAxiom::Cardinality).unwrap().passed());
    }

    #[test]
    fn hyperoval_has_no_tangents() {
        let field = f(2, 2);
        let emb = SubfieldEmbedding::new(field.clone(), field.clone()).unwrap();
        let err = elementary_egg_from_oval(&hyperoval(&field).unwrap(), &emb).unwrap_err();
        assert!(matches!(err, Error::NoTangent(_)));
    }

    #[test]
    fn conic_is_not_an_ovoid() {
        let field = f(2, 1);
        let emb = SubfieldEmbedding::new(field.clone(), field.clone()).unwrap();
        let pts: Vec<ProjectivePoint> = conic(&field)
            .into_iter()
            .map(|p| {
                let mut c = p.into_coords();
                c.push(crate::gf::Elem::ZERO);
                ProjectivePoint::new(&field, c).unwrap()
            })
            .collect();
        assert_eq!(
            elementary_egg_from_ovoid(&pts, &emb).unwrap_err(),
            Error::WrongCardinality {
                expected: 5,
                found: 3
            }
        );
    }

    #[test]
    fn egg_equality_ignores_order() {
        let a = conic_egg(3, 1);
        let mut els = a.elements().to_vec();
        let mut tans = a.tangents().to_vec();
        els.reverse();
        tans.reverse();
        let b = Egg::new(a.field().clone(), 1, 1, els, tans).unwrap();
        assert_eq!(a, b);
    }
}
