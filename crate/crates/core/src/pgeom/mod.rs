//! Projective and affine spaces over `F_q`.
//!
//! Points are stored normalized (first nonzero coordinate equal to 1) and
//! subspaces by their reduced row echelon basis, so equality of geometric
//! objects is equality of their coordinates. Points of `PG(N, q)` are indexed
//! in lexicographic order of their coordinate lists. The hyperplane at
//! infinity is always `X_N = 0`.

mod reduction;
mod varieties;

pub use reduction::SubfieldEmbedding;
pub use varieties::{
    conic, elliptic_quadric, elliptic_quadric_form, hermitian_variety, hyperoval,
    irreducible_quadratic, is_arc, lines_in_point_set, symplectic_form, symplectic_lines,
    QuadraticForm,
};

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::rref;
use crate::matrix::BinaryMatrix;

/// A normalized point of `PG(N, q)`: first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint(Vec<Elem>);

impl ProjectivePoint {
    /// Normalizes `coords`; fails on the zero vector.
    pub fn new(field: &Field, mut coords: Vec<Elem>) -> Result<Self> {
        for &c in &coords {
            field.check(c)?;
        }
        let lead = coords
            .iter()
            .copied()
            .find(|c| !c.is_zero())
            .ok_or(Error::ZeroVector)?;
        if lead != Elem::ONE {
            let inv = field.inv(lead)?;
            for c in coords.iter_mut() {
                *c = field.mul(*c, inv);
            }
        }
        Ok(ProjectivePoint(coords))
    }

    pub fn coords(&self) -> &[Elem] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Elem> {
        self.0
    }

    /// Projective dimension of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.0.len() - 1
    }
}

/// A projective subspace given by its canonical (RREF) basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Elem>>,
}

impl Subspace {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    /// Vector dimension `k` (number of basis rows).
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Projective dimension `k - 1`.
    pub fn proj_dim(&self) -> usize {
        self.basis.len() - 1
    }
}

/// `PG(N, q)`.
#[derive(Debug, Clone)]
pub struct ProjectiveSpace {
    field: Arc<Field>,
    dim: usize,
}

impl ProjectiveSpace {
    pub fn new(field: Arc<Field>, dim: usize) -> Self {
        ProjectiveSpace { field, dim }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    /// Projective dimension `N`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    fn q(&self) -> usize {
        self.field.order() as usize
    }

    /// `(q^{N+1} - 1) / (q - 1)`.
    pub fn point_count(&self) -> usize {
        gaussian_count(self.q(), self.dim + 1)
    }

    /// Point with the given lexicographic index.
    pub fn point_at(&self, mut index: usize) -> ProjectivePoint {
        let q = self.q();
        let n = self.dim;
        // groups by leading position j = N, N-1, ..., 0; group j has q^{N-j} points
        let mut j = n;
        loop {
            let size = q.pow((n - j) as u32);
            if index < size {
                break;
            }
            index -= size;
            j -= 1;
        }
        let mut coords = vec![Elem::ZERO; n + 1];
        coords[j] = Elem::ONE;
        for pos in (j + 1..=n).rev() {
            coords[pos] = Elem((index % q) as u32);
            index /= q;
        }
        ProjectivePoint(coords)
    }

    /// Lexicographic index of a normalized point.
    pub fn index_of(&self, point: &ProjectivePoint) -> usize {
        self.index_of_normalized(point.coords())
    }

    /// Index of a coordinate vector that is already normalized.
    pub fn index_of_normalized(&self, coords: &[Elem]) -> usize {
        let q = self.q();
        let n = self.dim;
        let j = coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("normalized point is nonzero");
        let offset = gaussian_count(q, n - j);
        let tail = coords[j + 1..]
            .iter()
            .fold(0usize, |acc, c| acc * q + c.0 as usize);
        offset + tail
    }

    /// Index of an arbitrary nonzero vector after normalization.
    pub fn index_of_vector(&self, coords: &[Elem]) -> Result<usize> {
        let p = ProjectivePoint::new(&self.field, coords.to_vec())?;
        Ok(self.index_of(&p))
    }

    /// All points in lexicographic order.
    pub fn points(&self) -> Vec<ProjectivePoint> {
        (0..self.point_count()).map(|i| self.point_at(i)).collect()
    }

    /// Builds the subspace spanned by `rows` (zero rows are ignored).
    pub fn subspace(&self, rows: Vec<Vec<Elem>>) -> Result<Subspace> {
        for r in &rows {
            if r.len() != self.dim + 1 {
                return Err(Error::DimensionMismatch {
                    expected: self.dim + 1,
                    found: r.len(),
                });
            }
            for &c in r {
                self.field.check(c)?;
            }
        }
        let mut basis = rows;
        rref(&self.field, &mut basis);
        if basis.is_empty() {
            return Err(Error::ZeroVector);
        }
        Ok(Subspace {
            ambient_dim: self.dim,
            basis,
        })
    }

    pub fn point_subspace(&self, p: &ProjectivePoint) -> Subspace {
        Subspace {
            ambient_dim: self.dim,
            basis: vec![p.coords().to_vec()],
        }
    }

    /// Smallest subspace containing every generator.
    pub fn span(&self, generators: &[&Subspace]) -> Result<Subspace> {
        if generators.is_empty() {
            return Err(Error::EmptySpan);
        }
        let mut rows = Vec::new();
        for g in generators {
            if g.ambient_dim != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: g.ambient_dim,
                });
            }
            rows.extend(g.basis.iter().cloned());
        }
        self.subspace(rows)
    }

    /// `⟨S, P⟩`.
    pub fn span_with_point(&self, s: &Subspace, p: &ProjectivePoint) -> Result<Subspace> {
        let mut rows = s.basis.clone();
        rows.push(p.coords().to_vec());
        self.subspace(rows)
    }

    /// Points of `s` in the order induced by its basis coordinates.
    pub fn subspace_points(&self, s: &Subspace) -> Vec<ProjectivePoint> {
        let k = s.rank();
        let q = self.q();
        let mut out = Vec::with_capacity(gaussian_count(q, k));
        // combination vectors with first nonzero coefficient 1; the RREF basis
        // makes the resulting points already normalized
        for lead in 0..k {
            let free = k - lead - 1;
            for idx in 0..q.pow(free as u32) {
                let mut v = s.basis[lead].clone();
                let mut rest = idx;
                for row in (lead + 1..k).rev() {
                    let c = Elem((rest % q) as u32);
                    rest /= q;
                    if c.is_zero() {
                        continue;
                    }
                    for (x, &b) in v.iter_mut().zip(&s.basis[row]) {
                        *x = self.field.add(*x, self.field.mul(c, b));
                    }
                }
                out.push(ProjectivePoint(v));
            }
        }
        out
    }

    /// Sorted point indices of `s`.
    pub fn subspace_point_indices(&self, s: &Subspace) -> Vec<usize> {
        let mut idx: Vec<usize> = self
            .subspace_points(s)
            .iter()
            .map(|p| self.index_of(p))
            .collect();
        idx.sort_unstable();
        idx
    }

    /// True iff `inner ⊆ outer`.
    pub fn contains(&self, outer: &Subspace, inner: &Subspace) -> bool {
        let mut rows = outer.basis.clone();
        rows.extend(inner.basis.iter().cloned());
        crate::linalg::rank(&self.field, &rows) == outer.rank()
    }

    pub fn contains_point(&self, s: &Subspace, p: &ProjectivePoint) -> bool {
        let mut rows = s.basis.clone();
        rows.push(p.coords().to_vec());
        crate::linalg::rank(&self.field, &rows) == s.rank()
    }

    /// Vector dimension of `a ∩ b`.
    pub fn meet_rank(&self, a: &Subspace, b: &Subspace) -> usize {
        let mut rows = a.basis.clone();
        rows.extend(b.basis.iter().cloned());
        a.rank() + b.rank() - crate::linalg::rank(&self.field, &rows)
    }

    pub fn is_disjoint(&self, a: &Subspace, b: &Subspace) -> bool {
        self.meet_rank(a, b) == 0
    }

    /// Every subspace of projective dimension `t`, in order of pivot sets
    /// and then free entries.
    pub fn subspaces_of_dim(&self, t: usize) -> Vec<Subspace> {
        let n = self.dim + 1;
        let k = t + 1;
        let q = self.q();
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        for pivots in combinations(n, k) {
            // free positions: (row, col) with col > pivot[row] and col not a pivot
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let pv = &pivots;
                    (pv[r] + 1..n)
                        .filter(move |c| !pv.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            for idx in 0..q.pow(free.len() as u32) {
                let mut basis = vec![vec![Elem::ZERO; n]; k];
                for (r, &c) in pivots.iter().enumerate() {
                    basis[r][c] = Elem::ONE;
                }
                let mut rest = idx;
                for &(r, c) in free.iter().rev() {
                    basis[r][c] = Elem((rest % q) as u32);
                    rest /= q;
                }
                out.push(Subspace {
                    ambient_dim: self.dim,
                    basis,
                });
            }
        }
        out
    }

    /// True iff the point lies outside the hyperplane `X_N = 0`.
    pub fn is_affine(&self, p: &ProjectivePoint) -> bool {
        !p.coords()[self.dim].is_zero()
    }

    /// The hyperplane at infinity `X_N = 0`.
    pub fn hyperplane_at_infinity(&self) -> Subspace {
        let n = self.dim + 1;
        let basis = (0..n - 1)
            .map(|i| {
                let mut r = vec![Elem::ZERO; n];
                r[i] = Elem::ONE;
                r
            })
            .collect();
        Subspace {
            ambient_dim: self.dim,
            basis,
        }
    }

    /// Indices of the `q^N` affine points, in increasing order.
    pub fn affine_point_indices(&self) -> Vec<usize> {
        (0..self.point_count())
            .filter(|&i| self.is_affine(&self.point_at(i)))
            .collect()
    }

    /// Embeds `self` as the hyperplane `X_{N+1} = 0` of `PG(N+1, q)`.
    pub fn embed_in_hyperplane(&self) -> (ProjectiveSpace, Subspace) {
        let outer = ProjectiveSpace::new(self.field.clone(), self.dim + 1);
        let h = outer.hyperplane_at_infinity();
        (outer, h)
    }

    /// Image of an inner point under the hyperplane embedding.
    pub fn embed_point(&self, p: &ProjectivePoint) -> ProjectivePoint {
        let mut c = p.coords().to_vec();
        c.push(Elem::ZERO);
        ProjectivePoint(c)
    }

    /// Image of an inner subspace under the hyperplane embedding.
    pub fn embed_subspace(&self, s: &Subspace) -> Subspace {
        Subspace {
            ambient_dim: s.ambient_dim + 1,
            basis: s
                .basis
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.push(Elem::ZERO);
                    r
                })
                .collect(),
        }
    }

    /// Incidence matrix of points versus `t`-spaces: rows are subspaces in
    /// [`Self::subspaces_of_dim`] order, columns are points.
    pub fn incidence_matrix_spaces(&self, t: usize) -> Result<BinaryMatrix> {
        if t >= self.dim {
            return Err(Error::InvalidParameter(alloc::format!(
                "t = {t} must lie in [0, {}] for PG({}, q)",
                self.dim.saturating_sub(1),
                self.dim
            )));
        }
        let rows = self
            .subspaces_of_dim(t)
            .iter()
            .map(|s| self.subspace_point_indices(s))
            .collect();
        Ok(BinaryMatrix::from_supports(self.point_count(), rows))
    }

    /// Incidence matrix of affine points versus `t`-flats of `AG(N, q)`,
    /// realized as `PG(N, q)` minus `X_N = 0`. Columns follow
    /// [`Self::affine_point_indices`].
    pub fn affine_incidence_matrix_spaces(&self, t: usize) -> Result<BinaryMatrix> {
        if t == 0 || t >= self.dim {
            return Err(Error::InvalidParameter(alloc::format!(
                "t = {t} must lie in [1, {}] for AG({}, q)",
                self.dim.saturating_sub(1),
                self.dim
            )));
        }
        let affine = self.affine_point_indices();
        let mut column_of = vec![usize::MAX; self.point_count()];
        for (c, &i) in affine.iter().enumerate() {
            column_of[i] = c;
        }
        let h_inf = self.hyperplane_at_infinity();
        let rows = self
            .subspaces_of_dim(t)
            .iter()
            .filter(|s| !self.contains(&h_inf, s))
            .map(|s| {
                self.subspace_point_indices(s)
                    .into_iter()
                    .filter(|&i| column_of[i] != usize::MAX)
                    .map(|i| column_of[i])
                    .collect()
            })
            .collect();
        Ok(BinaryMatrix::from_supports(affine.len(), rows))
    }
}

/// `(q^k - 1) / (q - 1)`: number of points of a `(k-1)`-dimensional space.
pub fn gaussian_count(q: usize, k: usize) -> usize {
    (0..k).map(|i| q.pow(i as u32)).sum()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if c[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pg(p: u32, h: u32, n: usize) -> ProjectiveSpace {
        ProjectiveSpace::new(Arc::new(Field::new(p, h).unwrap()), n)
    }

    #[test]
    fn point_counts() {
        assert_eq!(pg(2, 1, 2).points().len(), 7);
        assert_eq!(pg(3, 1, 0).points().len(), 1);
        assert_eq!(pg(2, 1, 3).points().len(), 15);
    }

    #[test]
    fn index_roundtrip_and_order() {
        let s = pg(3, 1, 3);
        let pts = s.points();
        for (i, p) in pts.iter().enumerate() {
            assert_eq!(s.index_of(p), i);
        }
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn spans_and_subspace_points() {
        let s = pg(2, 1, 2);
        let a = s.point_subspace(&s.point_at(0));
        let b = s.point_subspace(&s.point_at(1));
        let line = s.span(&[&a, &b]).unwrap();
        assert_eq!(line.proj_dim(), 1);
        assert_eq!(s.subspace_points(&line).len(), 3);
        assert_eq!(s.span(&[]), Err(Error::EmptySpan));

        let s3 = pg(3, 1, 3);
        let plane = s3.subspaces_of_dim(2).remove(0);
        assert_eq!(s3.subspace_points(&plane).len(), 13);
    }

    #[test]
    fn subspace_counts_are_gaussian_binomials() {
        assert_eq!(pg(2, 1, 3).subspaces_of_dim(1).len(), 35);
        assert_eq!(pg(2, 1, 4).subspaces_of_dim(1).len(), 155);
        assert_eq!(pg(2, 2, 3).subspaces_of_dim(1).len(), 357);
    }

    #[test]
    fn hyperplane_embedding() {
        let inner = pg(2, 1, 2);
        let (outer, h) = inner.embed_in_hyperplane();
        assert_eq!(outer.dim(), 3);
        assert_eq!(outer.affine_point_indices().len(), 8);
        for p in inner.points() {
            let e = inner.embed_point(&p);
            assert!(outer.contains_point(&h, &e));
        }
        let (outer4, _) = pg(2, 1, 3).embed_in_hyperplane();
        assert_eq!(outer4.affine_point_indices().len(), 16);
    }

    #[test]
    fn incidence_matrices() {
        let fano = pg(2, 1, 2).incidence_matrix_spaces(1).unwrap();
        assert_eq!((fano.nrows(), fano.ncols()), (7, 7));
        assert!(fano.row_weights().iter().all(|&w| w == 3));

        let ag = pg(2, 1, 3).affine_incidence_matrix_spaces(1).unwrap();
        assert!(ag.row_weights().iter().all(|&w| w == 2));
        assert_eq!(ag.nrows(), 28);

        let pts = pg(2, 1, 1).incidence_matrix_spaces(0).unwrap();
        let mut cols: Vec<usize> = pts
            .rows()
            .iter()
            .map(|r| {
                assert_eq!(r.len(), 1);
                r[0]
            })
            .collect();
        cols.sort_unstable();
        assert_eq!(cols, vec![0, 1, 2]);

        assert!(pg(2, 1, 2).incidence_matrix_spaces(2).is_err());
        assert!(pg(2, 1, 2).affine_incidence_matrix_spaces(0).is_err());
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }
}
