//! Classical point sets: conics, hyperovals, elliptic quadrics, Hermitian
//! varieties and the symplectic polarity of `PG(3, q)`.
//!
//! Coordinates are fixed:
//! - conic `X0 X2 = X1^2`, with nucleus `(0,1,0)` when `q` is even;
//! - elliptic quadric `X0 X1 + X2^2 + b X2 X3 + c X3^2` where `x^2 + b x + c`
//!   is the least irreducible monic quadratic;
//! - Hermitian variety `Σ X_i^{√q + 1}`;
//! - symplectic form `X0 Y1 - X1 Y0 + X2 Y3 - X3 Y2`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{ProjectivePoint, ProjectiveSpace, Subspace};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// A quadratic form `Σ c · X_i X_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    pub nvars: usize,
    pub terms: Vec<(usize, usize, Elem)>,
}

impl QuadraticForm {
    pub fn eval(&self, field: &Field, x: &[Elem]) -> Elem {
        self.terms.iter().fold(Elem::ZERO, |acc, &(i, j, c)| {
            field.add(acc, field.mul(c, field.mul(x[i], x[j])))
        })
    }

    /// Points of `PG(nvars - 1, q)` where the form vanishes.
    pub fn zeros(&self, space: &ProjectiveSpace) -> Vec<ProjectivePoint> {
        space
            .points()
            .into_iter()
            .filter(|p| self.eval(space.field(), p.coords()).is_zero())
            .collect()
    }

    /// `X0^2 + X1 X2 + X3 X4`.
    pub fn parabolic_q4() -> Self {
        QuadraticForm {
            nvars: 5,
            terms: vec![(0, 0, Elem::ONE), (1, 2, Elem::ONE), (3, 4, Elem::ONE)],
        }
    }
}

/// Least `(b, c)` (in element encoding order) with `x^2 + b x + c`
/// irreducible over `F_q`.
pub fn irreducible_quadratic(field: &Field) -> (Elem, Elem) {
    for b in field.elements() {
        for c in field.elements().skip(1) {
            let has_root = field.elements().any(|x| {
                let v = field.add(field.mul(x, x), field.add(field.mul(b, x), c));
                v.is_zero()
            });
            if !has_root {
                return (b, c);
            }
        }
    }
    unreachable!("every finite field has an irreducible quadratic")
}

/// Elliptic quadratic form on `2k` variables:
/// `X0 X1 + … + X_{2k-4} X_{2k-3} + X_{2k-2}^2 + b X_{2k-2} X_{2k-1} + c X_{2k-1}^2`.
pub fn elliptic_quadric_form(field: &Field, nvars: usize) -> Result<QuadraticForm> {
    if nvars < 2 || nvars % 2 == 1 {
        return Err(Error::InvalidParameter(alloc::format!(
            "elliptic quadrics live in odd projective dimension, got {} variables",
            nvars
        )));
    }
    let (b, c) = irreducible_quadratic(field);
    let mut terms: Vec<(usize, usize, Elem)> = (0..nvars / 2 - 1)
        .map(|i| (2 * i, 2 * i + 1, Elem::ONE))
        .collect();
    let (u, v) = (nvars - 2, nvars - 1);
    terms.push((u, u, Elem::ONE));
    if !b.is_zero() {
        terms.push((u, v, b));
    }
    terms.push((v, v, c));
    Ok(QuadraticForm { nvars, terms })
}

/// The conic `X0 X2 = X1^2` of `PG(2, q)`; `q + 1` points.
pub fn conic(field: &Arc<Field>) -> Vec<ProjectivePoint> {
    let space = ProjectiveSpace::new(field.clone(), 2);
    let form = QuadraticForm {
        nvars: 3,
        terms: vec![(0, 2, Elem::ONE), (1, 1, field.neg(Elem::ONE))],
    };
    form.zeros(&space)
}

/// The conic together with its nucleus `(0,1,0)`; requires `q` even.
pub fn hyperoval(field: &Arc<Field>) -> Result<Vec<ProjectivePoint>> {
    if field.characteristic() != 2 {
        return Err(Error::OddOrder(field.order()));
    }
    let mut pts = conic(field);
    pts.push(ProjectivePoint::new(
        field,
        vec![Elem::ZERO, Elem::ONE, Elem::ZERO],
    )?);
    pts.sort();
    Ok(pts)
}

/// The elliptic quadric of `PG(3, q)`; `q^2 + 1` points.
pub fn elliptic_quadric(field: &Arc<Field>) -> Vec<ProjectivePoint> {
    let space = ProjectiveSpace::new(field.clone(), 3);
    elliptic_quadric_form(field, 4)
        .expect("4 variables")
        .zeros(&space)
}

/// Points of the Hermitian variety `Σ X_i^{√q+1} = 0` in `PG(dim, q)`.
pub fn hermitian_variety(field: &Arc<Field>, dim: usize) -> Result<Vec<ProjectivePoint>> {
    if !field.has_square_order() {
        return Err(Error::NotSquareOrder(field.order()));
    }
    if !(2..=4).contains(&dim) {
        return Err(Error::InvalidParameter(alloc::format!(
            "Hermitian variety of dimension {dim} is not supported"
        )));
    }
    let space = ProjectiveSpace::new(field.clone(), dim);
    let root = field.characteristic().pow(field.degree() / 2) as u64;
    Ok(space
        .points()
        .into_iter()
        .filter(|p| {
            p.coords()
                .iter()
                .fold(Elem::ZERO, |acc, &x| field.add(acc, field.pow(x, root + 1)))
                .is_zero()
        })
        .collect())
}

/// `X0 Y1 - X1 Y0 + X2 Y3 - X3 Y2`.
pub fn symplectic_form(field: &Field, x: &[Elem], y: &[Elem]) -> Elem {
    let t0 = field.sub(field.mul(x[0], y[1]), field.mul(x[1], y[0]));
    let t1 = field.sub(field.mul(x[2], y[3]), field.mul(x[3], y[2]));
    field.add(t0, t1)
}

/// Totally isotropic lines of `W(3, q)`.
pub fn symplectic_lines(field: &Arc<Field>) -> Vec<Subspace> {
    let space = ProjectiveSpace::new(field.clone(), 3);
    let all: Vec<usize> = (0..space.point_count()).collect();
    lines_in_point_set(&space, &all, |line| {
        symplectic_form(field, &line.basis()[0], &line.basis()[1]).is_zero()
    })
    .into_iter()
    .map(|(l, _)| l)
    .collect()
}

/// Lines of `space` spanned by two points of `members` that lie entirely in
/// `members` and satisfy `accept`; each line is reported once with its sorted
/// point indices, in order of first discovery.
pub fn lines_in_point_set(
    space: &ProjectiveSpace,
    members: &[usize],
    accept: impl Fn(&Subspace) -> bool,
) -> Vec<(Subspace, Vec<usize>)> {
    let npts = space.point_count();
    let mut in_set = vec![false; npts];
    for &i in members {
        in_set[i] = true;
    }
    let mut sorted: Vec<usize> = members.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let pos_of = |i: usize| sorted.binary_search(&i).ok();
    let m = sorted.len();
    let mut covered = vec![false; m * m];
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            if covered[a * m + b] {
                continue;
            }
            let pa = space.point_subspace(&space.point_at(sorted[a]));
            let pb = space.point_subspace(&space.point_at(sorted[b]));
            let line = space.span(&[&pa, &pb]).expect("distinct points");
            let pts = space.subspace_point_indices(&line);
            let ok = pts.iter().all(|&i| in_set[i]) && accept(&line);
            let positions: Vec<usize> = pts.iter().filter_map(|&i| pos_of(i)).collect();
            for &x in &positions {
                for &y in &positions {
                    covered[x * m + y] = true;
                }
            }
            if ok {
                out.push((line, pts));
            }
        }
    }
    out
}

/// Checks that no three points are collinear; returns the first collinear
/// triple of positions otherwise.
pub fn is_arc(space: &ProjectiveSpace, points: &[ProjectivePoint]) -> Result<()> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let rows = vec![
                    points[i].coords().to_vec(),
                    points[j].coords().to_vec(),
                    points[k].coords().to_vec(),
                ];
                if crate::linalg::rank(space.field(), &rows) < 3 {
                    return Err(Error::CollinearTriple(i, j, k));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u32, h: u32) -> Arc<Field> {
        Arc::new(Field::new(p, h).unwrap())
    }

    #[test]
    fn conic_sizes() {
        for (p, h) in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3)] {
            let f = field(p, h);
            let c = conic(&f);
            assert_eq!(c.len(), f.order() as usize + 1);
            is_arc(&ProjectiveSpace::new(f.clone(), 2), &c).unwrap();
        }
    }

    #[test]
    fn hyperoval_needs_even_q() {
        assert_eq!(hyperoval(&field(2, 2)).unwrap().len(), 6);
        assert_eq!(hyperoval(&field(3, 1)), Err(Error::OddOrder(3)));
        let f = field(2, 2);
        is_arc(&ProjectiveSpace::new(f.clone(), 2), &hyperoval(&f).unwrap()).unwrap();
    }

    #[test]
    fn elliptic_quadric_is_a_cap() {
        for (p, h) in [(2, 1), (3, 1), (2, 2)] {
            let f = field(p, h);
            let e = elliptic_quadric(&f);
            let q = f.order() as usize;
            assert_eq!(e.len(), q * q + 1);
            is_arc(&ProjectiveSpace::new(f.clone(), 3), &e).unwrap();
        }
    }

    #[test]
    fn hermitian_counts() {
        let f = field(2, 2);
        // (q^2 + 1)(q^3 + 1) with q = 2 in PG(3, 4)
        assert_eq!(hermitian_variety(&f, 3).unwrap().len(), 45);
        // (q^5 + 1)(q^2 + 1) with q = 2 in PG(4, 4)
        assert_eq!(hermitian_variety(&f, 4).unwrap().len(), 165);
        assert!(hermitian_variety(&field(2, 1), 3).is_err());
    }

    #[test]
    fn symplectic_line_count() {
        // (q + 1)(q^2 + 1)
        assert_eq!(symplectic_lines(&field(2, 1)).len(), 15);
        assert_eq!(symplectic_lines(&field(3, 1)).len(), 40);
    }

    #[test]
    fn collinear_points_are_not_an_arc() {
        let f = field(2, 1);
        let s = ProjectiveSpace::new(f.clone(), 2);
        let line = s.subspaces_of_dim(1).remove(0);
        let pts = s.subspace_points(&line);
        assert_eq!(is_arc(&s, &pts), Err(Error::CollinearTriple(0, 1, 2)));
    }
}
