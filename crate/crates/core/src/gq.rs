//! Point-line incidence structures: the translation quadrangle `T(E)` of an
//! egg, `T2*(O)` of a hyperoval, and the classical quadrangles.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::ops::Range;

use crate::egg::Egg;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matrix::BinaryMatrix;
use crate::pgeom::{
    elliptic_quadric_form, hermitian_variety, is_arc, lines_in_point_set, symplectic_lines,
    ProjectivePoint, ProjectiveSpace, QuadraticForm, Subspace,
};

/// Point type tags. `T(E)` uses the first three; everything else is `Plain`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointKind {
    /// type (i): a point of `Π \ H∞`
    Affine,
    /// type (ii): an `(n+m)`-space meeting `H∞` in the tangent space of an egg element
    Tangent {
        element: usize,
    },
    /// type (iii): the point `(∞)`
    Infinity,
    Plain,
}

/// Line type tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LineKind {
    /// type (a): an `n`-space meeting `H∞` in an egg element
    Affine {
        element: usize,
    },
    /// type (b): an egg element
    EggElement {
        element: usize,
    },
    Plain,
}

impl PointKind {
    pub fn tag(&self) -> &'static str {
        match self {
            PointKind::Affine => "i",
            PointKind::Tangent { .. } => "ii",
            PointKind::Infinity => "iii",
            PointKind::Plain => "point",
        }
    }
}

impl LineKind {
    pub fn tag(&self) -> &'static str {
        match self {
            LineKind::Affine { .. } => "a",
            LineKind::EggElement { .. } => "b",
            LineKind::Plain => "line",
        }
    }
}

/// `(s, t, α)` of a partial geometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeometryParams {
    pub s: usize,
    pub t: usize,
    pub alpha: usize,
}

impl GeometryParams {
    pub fn is_gq(&self) -> bool {
        self.alpha == 1
    }
}

impl fmt::Display for GeometryParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.s, self.t, self.alpha)
    }
}

/// First axiom violation found by [`IncidenceStructure::verify_partial_geometry`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryViolation {
    Empty,
    /// axiom 1: two lines share two points
    SharedPair {
        lines: (usize, usize),
        points: (usize, usize),
    },
    /// axiom 2
    LineSize {
        line: usize,
        expected: usize,
        found: usize,
    },
    /// axiom 3
    PointDegree {
        point: usize,
        expected: usize,
        found: usize,
    },
    /// axiom 4
    Transversals {
        point: usize,
        line: usize,
        expected: usize,
        found: usize,
    },
}

impl GeometryViolation {
    pub fn axiom(&self) -> usize {
        match self {
            GeometryViolation::Empty | GeometryViolation::SharedPair { .. } => 1,
            GeometryViolation::LineSize { .. } => 2,
            GeometryViolation::PointDegree { .. } => 3,
            GeometryViolation::Transversals { .. } => 4,
        }
    }
}

impl fmt::Display for GeometryViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryViolation::Empty => write!(f, "structure has no points or lines"),
            GeometryViolation::SharedPair { lines, points } => write!(
                f,
                "axiom 1: lines {} and {} share points {} and {}",
                lines.0, lines.1, points.0, points.1
            ),
            GeometryViolation::LineSize {
                line,
                expected,
                found,
            } => {
                write!(
                    f,
                    "axiom 2: line {line} has {found} points, expected {expected}"
                )
            }
            GeometryViolation::PointDegree {
                point,
                expected,
                found,
            } => {
                write!(
                    f,
                    "axiom 3: point {point} is on {found} lines, expected {expected}"
                )
            }
            GeometryViolation::Transversals {
                point,
                line,
                expected,
                found,
            } => write!(
                f,
                "axiom 4: point {point} has {found} lines meeting line {line}, expected {expected}"
            ),
        }
    }
}

/// Points and lines with incidence given by sorted point lists per line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    name: String,
    characteristic: u32,
    points: Vec<PointKind>,
    lines: Vec<LineKind>,
    incidence: Vec<Vec<usize>>,
    params: Option<GeometryParams>,
}

impl IncidenceStructure {
    /// Assembles a structure; `incidence[l]` lists the points of line `l`.
    pub fn new(
        name: impl Into<String>,
        characteristic: u32,
        points: Vec<PointKind>,
        lines: Vec<LineKind>,
        incidence: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if lines.len() != incidence.len() {
            return Err(Error::InvalidParameter(format!(
                "{} line tags for {} lines",
                lines.len(),
                incidence.len()
            )));
        }
        let npts = points.len();
        let incidence: Vec<Vec<usize>> = incidence
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        if let Some(bad) = incidence.iter().flatten().find(|&&p| p >= npts) {
            return Err(Error::PositionOutOfRange(*bad));
        }
        Ok(IncidenceStructure {
            name: name.into(),
            characteristic,
            points,
            lines,
            incidence,
            params: None,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The prime `p` of the code alphabet.
    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn point_kinds(&self) -> &[PointKind] {
        &self.points
    }

    pub fn line_kinds(&self) -> &[LineKind] {
        &self.lines
    }

    /// Sorted points of line `l`.
    pub fn line(&self, l: usize) -> &[usize] {
        &self.incidence[l]
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    pub fn params(&self) -> Option<GeometryParams> {
        self.params
    }

    /// Lines through each point.
    pub fn lines_through(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.points.len()];
        for (l, pts) in self.incidence.iter().enumerate() {
            for &p in pts {
                out[p].push(l);
            }
        }
        out
    }

    pub fn is_translation_gq(&self) -> bool {
        !self.points.is_empty() && self.points.iter().all(|k| !matches!(k, PointKind::Plain))
    }

    /// Sorted point degrees and sorted line sizes: an isomorphism invariant.
    pub fn degree_profile(&self) -> (Vec<usize>, Vec<usize>) {
        let mut deg: Vec<usize> = self.lines_through().iter().map(Vec::len).collect();
        let mut sizes: Vec<usize> = self.incidence.iter().map(Vec::len).collect();
        deg.sort_unstable();
        sizes.sort_unstable();
        (deg, sizes)
    }

    /// Checks the four partial geometry axioms exhaustively and records the
    /// parameters on success.
    pub fn verify_partial_geometry(
        &mut self,
    ) -> core::result::Result<GeometryParams, GeometryViolation> {
        let params = check_partial_geometry(self.points.len(), &self.incidence)?;
        self.params = Some(params);
        Ok(params)
    }

    /// Rows are lines, columns are points, in construction order.
    pub fn incidence_matrix(&self) -> BinaryMatrix {
        BinaryMatrix::from_supports(self.points.len(), self.incidence.clone())
    }

    /// Incidence matrix in the requested ordering.
    pub fn block_matrix(&self, ordering: Ordering) -> Result<BlockMatrix> {
        match ordering {
            Ordering::Canonical => Ok(BlockMatrix {
                matrix: self.incidence_matrix(),
                point_order: (0..self.points.len()).collect(),
                line_order: (0..self.lines.len()).collect(),
                blocks: None,
            }),
            Ordering::TeBlock => self.te_block_matrix(),
        }
    }

    fn te_block_matrix(&self) -> Result<BlockMatrix> {
        if !self.is_translation_gq() {
            return Err(Error::NotTranslationGq);
        }
        let rank_point = |k: &PointKind| match k {
            PointKind::Affine => (0, 0),
            PointKind::Tangent { element } => (1, *element),
            _ => (2, 0),
        };
        let rank_line = |k: &LineKind| match k {
            LineKind::Affine { element } => (0, *element),
            LineKind::EggElement { element } => (1, *element),
            LineKind::Plain => (2, 0),
        };
        let mut point_order: Vec<usize> = (0..self.points.len()).collect();
        point_order.sort_by_key(|&i| rank_point(&self.points[i]));
        let mut line_order: Vec<usize> = (0..self.lines.len()).collect();
        line_order.sort_by_key(|&i| rank_line(&self.lines[i]));

        let mut column_of = vec![0; self.points.len()];
        for (c, &p) in point_order.iter().enumerate() {
            column_of[p] = c;
        }
        let rows = line_order
            .iter()
            .map(|&l| self.incidence[l].iter().map(|&p| column_of[p]).collect())
            .collect();
        let n_affine = self
            .points
            .iter()
            .filter(|k| matches!(k, PointKind::Affine))
            .count();
        let n_tangent = self
            .points
            .iter()
            .filter(|k| matches!(k, PointKind::Tangent { .. }))
            .count();
        let n_type_a = self
            .lines
            .iter()
            .filter(|k| matches!(k, LineKind::Affine { .. }))
            .count();
        Ok(BlockMatrix {
            matrix: BinaryMatrix::from_supports(self.points.len(), rows),
            point_order,
            line_order,
            blocks: Some(TeBlocks {
                affine_columns: 0..n_affine,
                tangent_columns: n_affine..n_affine + n_tangent,
                infinity_column: n_affine + n_tangent,
                type_a_rows: 0..n_type_a,
                type_b_rows: n_type_a..self.lines.len(),
            }),
        })
    }
}

fn check_partial_geometry(
    npts: usize,
    lines: &[Vec<usize>],
) -> core::result::Result<GeometryParams, GeometryViolation> {
    if npts == 0 || lines.is_empty() {
        return Err(GeometryViolation::Empty);
    }
    // axiom 1: each pair of points on at most one line
    const NONE: u32 = u32::MAX;
    let mut joining = vec![NONE; npts * npts];
    for (l, pts) in lines.iter().enumerate() {
        for (a, &x) in pts.iter().enumerate() {
            for &y in &pts[a + 1..] {
                let slot = &mut joining[x * npts + y];
                if *slot != NONE {
                    return Err(GeometryViolation::SharedPair {
                        lines: (*slot as usize, l),
                        points: (x, y),
                    });
                }
                *slot = l as u32;
                joining[y * npts + x] = l as u32;
            }
        }
    }
    // axiom 2
    let size = lines[0].len();
    if let Some((l, pts)) = lines.iter().enumerate().find(|(_, p)| p.len() != size) {
        return Err(GeometryViolation::LineSize {
            line: l,
            expected: size,
            found: pts.len(),
        });
    }
    // axiom 3
    let mut degree = vec![0usize; npts];
    for pts in lines {
        for &p in pts {
            degree[p] += 1;
        }
    }
    let deg = degree[0];
    if let Some((p, &d)) = degree.iter().enumerate().find(|(_, &d)| d != deg) {
        return Err(GeometryViolation::PointDegree {
            point: p,
            expected: deg,
            found: d,
        });
    }
    if size < 2 || deg < 1 {
        return Err(GeometryViolation::LineSize {
            line: 0,
            expected: 2,
            found: size,
        });
    }
    // axiom 4: lines through P meeting L correspond to points of L collinear with P
    let mut alpha = None;
    let mut on_line = vec![false; npts];
    for (l, pts) in lines.iter().enumerate() {
        for &x in pts {
            on_line[x] = true;
        }
        for p in 0..npts {
            if on_line[p] {
                continue;
            }
            let found = pts
                .iter()
                .filter(|&&x| joining[p * npts + x] != NONE)
                .count();
            match alpha {
                None => alpha = Some(found),
                Some(a) if a != found => {
                    return Err(GeometryViolation::Transversals {
                        point: p,
                        line: l,
                        expected: a,
                        found,
                    })
                }
                _ => {}
            }
        }
        for &x in pts {
            on_line[x] = false;
        }
    }
    Ok(GeometryParams {
        s: size - 1,
        t: deg - 1,
        // every point on every line: no non-incident pairs
        alpha: alpha.unwrap_or(0),
    })
}

/// Column/row orderings for [`IncidenceStructure::block_matrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ordering {
    /// construction order
    Canonical,
    /// type (i), (ii), (iii) points and type (a), (b) lines
    TeBlock,
}

/// Block boundaries of `N = [[A, B, 0], [O, D, 1]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeBlocks {
    pub affine_columns: Range<usize>,
    pub tangent_columns: Range<usize>,
    pub infinity_column: usize,
    pub type_a_rows: Range<usize>,
    pub type_b_rows: Range<usize>,
}

/// An incidence matrix with the permutations that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMatrix {
    pub matrix: BinaryMatrix,
    /// `point_order[c]` is the point in column `c`
    pub point_order: Vec<usize>,
    /// `line_order[r]` is the line in row `r`
    pub line_order: Vec<usize>,
    pub blocks: Option<TeBlocks>,
}

impl BlockMatrix {
    /// Checks the block properties of `N` for `T(E)` of order `(q^n, q^m)`:
    /// rows of `A` and `D` have weight `s = q^n`, rows of `B` weight 1, rows
    /// of `D` pairwise disjoint, `O = 0`, and the last column is `(0…0 1…1)`.
    pub fn check_te_properties(&self, s: usize) -> core::result::Result<(), String> {
        let b = self
            .blocks
            .as_ref()
            .ok_or_else(|| String::from("no block structure"))?;
        let weight_in =
            |row: &[usize], cols: &Range<usize>| row.iter().filter(|c| cols.contains(c)).count();
        let mut d_seen = vec![false; self.matrix.ncols()];
        for r in 0..self.matrix.nrows() {
            let row = self.matrix.row(r);
            let a = weight_in(row, &b.affine_columns);
            let t = weight_in(row, &b.tangent_columns);
            let inf = row.contains(&b.infinity_column);
            if b.type_a_rows.contains(&r) {
                if a != s {
                    return Err(format!("row {r} of A has weight {a}, expected {s}"));
                }
                if t != 1 {
                    return Err(format!("row {r} of B has weight {t}, expected 1"));
                }
                if inf {
                    return Err(format!("type (a) row {r} meets (∞)"));
                }
            } else {
                if a != 0 {
                    return Err(format!("row {r} of O is nonzero"));
                }
                if t != s {
                    return Err(format!("row {r} of D has weight {t}, expected {s}"));
                }
                if !inf {
                    return Err(format!("type (b) row {r} misses (∞)"));
                }
                for &c in row.iter().filter(|c| b.tangent_columns.contains(c)) {
                    if d_seen[c] {
                        return Err(format!("rows of D overlap in column {c}"));
                    }
                    d_seen[c] = true;
                }
            }
        }
        Ok(())
    }
}

/// `T(E)`: points of type (i) in index order, then type (ii) grouped by egg
/// element, then `(∞)`; lines of type (a) grouped by egg element, then (b).
pub fn build_te(egg: &Egg) -> Result<IncidenceStructure> {
    let report = egg.verify();
    if let Some(fail) = report.failures().next() {
        return Err(Error::InvalidEgg(format!(
            "{:?} violated: {:?}",
            fail.axiom, fail.witness
        )));
    }
    build_te_unverified(egg)
}

/// [`build_te`] without checking the egg axioms; the result is a partial
/// geometry only when they hold.
pub fn build_te_unverified(egg: &Egg) -> Result<IncidenceStructure> {
    let inner = egg.space();
    let (pi, _) = inner.embed_in_hyperplane();
    let affine = pi.affine_point_indices();
    let mut id_of = vec![usize::MAX; pi.point_count()];
    for (id, &i) in affine.iter().enumerate() {
        id_of[i] = id;
    }
    let affine_pts: Vec<ProjectivePoint> = affine.iter().map(|&i| pi.point_at(i)).collect();

    let mut points = vec![PointKind::Affine; affine.len()];
    let mut lines = Vec::new();
    let mut incidence: Vec<Vec<usize>> = Vec::new();
    let mut tangent_points_of: Vec<Vec<usize>> = Vec::new();

    for (j, (e, t)) in egg.elements().iter().zip(egg.tangents()).enumerate() {
        let e = inner.embed_subspace(e);
        let t = inner.embed_subspace(t);
        let mut tangent_ids: BTreeMap<Subspace, usize> = BTreeMap::new();
        let mut type_ii_of_r = Vec::with_capacity(affine_pts.len());
        for r in &affine_pts {
            let s = pi.span_with_point(&t, r)?;
            let next = points.len();
            let id = *tangent_ids.entry(s).or_insert(next);
            if id == next {
                points.push(PointKind::Tangent { element: j });
            }
            type_ii_of_r.push(id);
        }
        let mut seen: BTreeMap<Subspace, ()> = BTreeMap::new();
        for (ri, r) in affine_pts.iter().enumerate() {
            let l = pi.span_with_point(&e, r)?;
            if seen.contains_key(&l) {
                continue;
            }
            let mut pts: Vec<usize> = pi
                .subspace_point_indices(&l)
                .into_iter()
                .filter(|&i| id_of[i] != usize::MAX)
                .map(|i| id_of[i])
                .collect();
            pts.push(type_ii_of_r[ri]);
            seen.insert(l, ());
            lines.push(LineKind::Affine { element: j });
            incidence.push(pts);
        }
        let mut ids: Vec<usize> = tangent_ids.into_values().collect();
        ids.sort_unstable();
        tangent_points_of.push(ids);
    }
    let infinity = points.len();
    points.push(PointKind::Infinity);
    for (j, ids) in tangent_points_of.into_iter().enumerate() {
        let mut pts = ids;
        pts.push(infinity);
        lines.push(LineKind::EggElement { element: j });
        incidence.push(pts);
    }
    let q = egg.field().order();
    let name = format!(
        "T(E) n={} m={} q={} ({} elements)",
        egg.n(),
        egg.m(),
        q,
        egg.len()
    );
    IncidenceStructure::new(name, egg.field().characteristic(), points, lines, incidence)
}

/// `T2*(O)` for a hyperoval `O` of `PG(2, q)`, `q` even.
pub fn build_t2star(
    field: &Arc<Field>,
    hyperoval: &[ProjectivePoint],
) -> Result<IncidenceStructure> {
    if field.characteristic() != 2 {
        return Err(Error::OddOrder(field.order()));
    }
    let q = field.order() as usize;
    if hyperoval.len() != q + 2 {
        return Err(Error::WrongCardinality {
            expected: q + 2,
            found: hyperoval.len(),
        });
    }
    let plane = ProjectiveSpace::new(field.clone(), 2);
    is_arc(&plane, hyperoval)?;
    let (pi, _) = plane.embed_in_hyperplane();
    let affine = pi.affine_point_indices();
    let mut id_of = vec![usize::MAX; pi.point_count()];
    for (id, &i) in affine.iter().enumerate() {
        id_of[i] = id;
    }
    let mut lines = Vec::new();
    for o in hyperoval {
        let o = pi.point_subspace(&plane.embed_point(o));
        let mut seen: BTreeMap<Subspace, ()> = BTreeMap::new();
        for &ri in &affine {
            let l = pi.span_with_point(&o, &pi.point_at(ri))?;
            if seen.insert(l.clone(), ()).is_some() {
                continue;
            }
            lines.push(
                pi.subspace_point_indices(&l)
                    .into_iter()
                    .filter(|&i| id_of[i] != usize::MAX)
                    .map(|i| id_of[i])
                    .collect(),
            );
        }
    }
    let nlines = lines.len();
    IncidenceStructure::new(
        format!("T2*(O) q={q}"),
        2,
        vec![PointKind::Plain; affine.len()],
        vec![LineKind::Plain; nlines],
        lines,
    )
}

/// The classical generalised quadrangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalKind {
    /// `W(3, q)`, order `(q, q)`
    W3,
    /// `Q(4, q)`, order `(q, q)`
    Q4,
    /// `Q(5, q)`, order `(q, q^2)`
    Q5,
    /// `H(3, q^2)`, order `(q^2, q)`
    H3,
    /// `H(4, q^2)`, order `(q^2, q^3)`
    H4,
}

impl ClassicalKind {
    pub fn label(&self) -> &'static str {
        match self {
            ClassicalKind::W3 => "W(3,q)",
            ClassicalKind::Q4 => "Q(4,q)",
            ClassicalKind::Q5 => "Q(5,q)",
            ClassicalKind::H3 => "H(3,q^2)",
            ClassicalKind::H4 => "H(4,q^2)",
        }
    }
}

/// Builds a classical quadrangle from its form. `field` is `F_q` for W3,
/// Q4, Q5 and `F_{q^2}` for H3, H4. Points are in lexicographic order.
pub fn build_classical(kind: ClassicalKind, field: &Arc<Field>) -> Result<IncidenceStructure> {
    let (space, members): (ProjectiveSpace, Vec<usize>) = match kind {
        ClassicalKind::W3 => {
            let space = ProjectiveSpace::new(field.clone(), 3);
            let all = (0..space.point_count()).collect();
            (space, all)
        }
        ClassicalKind::Q4 => quadric_points(field, 4, &QuadraticForm::parabolic_q4()),
        ClassicalKind::Q5 => quadric_points(field, 5, &elliptic_quadric_form(field, 6)?),
        ClassicalKind::H3 | ClassicalKind::H4 => {
            let dim = if kind == ClassicalKind::H3 { 3 } else { 4 };
            let space = ProjectiveSpace::new(field.clone(), dim);
            let pts = hermitian_variety(field, dim)?;
            let idx = pts.iter().map(|p| space.index_of(p)).collect();
            (space, idx)
        }
    };
    let raw_lines: Vec<Vec<usize>> = if kind == ClassicalKind::W3 {
        symplectic_lines(field)
            .iter()
            .map(|l| space.subspace_point_indices(l))
            .collect()
    } else {
        lines_in_point_set(&space, &members, |_| true)
            .into_iter()
            .map(|(_, pts)| pts)
            .collect()
    };
    let mut id_of = vec![usize::MAX; space.point_count()];
    for (id, &i) in members.iter().enumerate() {
        id_of[i] = id;
    }
    let lines: Vec<Vec<usize>> = raw_lines
        .into_iter()
        .map(|l| l.into_iter().map(|i| id_of[i]).collect())
        .collect();
    let nlines = lines.len();
    let q = field.order();
    IncidenceStructure::new(
        format!("{} over F_{q}", kind.label()),
        field.characteristic(),
        vec![PointKind::Plain; members.len()],
        vec![LineKind::Plain; nlines],
        lines,
    )
}

fn quadric_points(
    field: &Arc<Field>,
    dim: usize,
    form: &QuadraticForm,
) -> (ProjectiveSpace, Vec<usize>) {
    let space = ProjectiveSpace::new(field.clone(), dim);
    let idx = form
        .zeros(&space)
        .iter()
        .map(|p| space.index_of(p))
        .collect();
    (space, idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::egg::{elementary_egg_from_oval, elementary_egg_from_ovoid};
    use crate::pgeom::{conic, elliptic_quadric, hyperoval, SubfieldEmbedding};

    fn f(p: u32, h: u32) -> Arc<Field> {
        Arc::new(Field::new(p, h).unwrap())
    }

    fn conic_te(p: u32) -> IncidenceStructure {
        let field = f(p, 1);
        let emb = SubfieldEmbedding::new(field.clone(), field.clone()).unwrap();
        build_te(&elementary_egg_from_oval(&conic(&field), &emb).unwrap()).unwrap()
    }

    #[test]
    fn te_from_conic_q2() {
        let mut gq = conic_te(2);
        let kinds = gq.point_kinds();
        assert_eq!(kinds.iter().filter(|k| **k == PointKind::Affine).count(), 8);
        assert_eq!(
            kinds
                .iter()
                .filter(|k| matches!(k, PointKind::Tangent { .. }))
                .count(),
            6
        );
        assert_eq!(gq.num_lines(), 15);
        assert_eq!(
            gq.line_kinds()
                .iter()
                .filter(|k| matches!(k, LineKind::EggElement { .. }))
                .count(),
            3
        );
        assert_eq!(
            gq.verify_partial_geometry(),
            Ok(GeometryParams {
                s: 2,
                t: 2,
                alpha: 1
            })
        );
    }

    #[test]
    fn te_from_ovoid_q2() {
        let field = f(2, 1);
        let emb = SubfieldEmbedding::new(field.clone(), field.clone()).unwrap();
        let egg = elementary_egg_from_ovoid(&elliptic_quadric(&field), &emb).unwrap();
        let mut gq = build_te(&egg).unwrap();
        assert_eq!((gq.num_points(), gq.num_lines()), (27, 45));
        assert_eq!(
            gq.verify_partial_geometry(),
            Ok(GeometryParams {
                s: 2,
                t: 4,
                alpha: 1
            })
        );
    }

    #[test]
    fn t2star_orders() {
        let mut g = build_t2star(&f(2, 2), &hyperoval(&f(2, 2)).unwrap()).unwrap();
        assert_eq!((g.num_points(), g.num_lines()), (64, 96));
        assert_eq!(
            g.verify_partial_geometry(),
            Ok(GeometryParams {
                s: 3,
                t: 5,
                alpha: 1
            })
        );
        let mut g2 = build_t2star(&f(2, 1), &hyperoval(&f(2, 1)).unwrap()).unwrap();
        assert_eq!((g2.num_points(), g2.num_lines()), (8, 16));
        assert_eq!(
            g2.verify_partial_geometry(),
            Ok(GeometryParams {
                s: 1,
                t: 3,
                alpha: 1
            })
        );
        assert_eq!(build_t2star(&f(3, 1), &[]).unwrap_err(), Error::OddOrder(3));
    }

    #[test]
    fn classical_small() {
        let mut w = build_classical(ClassicalKind::W3, &f(2, 1)).unwrap();
        assert_eq!((w.num_points(), w.num_lines()), (15, 15));
        assert_eq!(
            w.verify_partial_geometry().unwrap(),
            GeometryParams {
                s: 2,
                t: 2,
                alpha: 1
            }
        );
        let mut h = build_classical(ClassicalKind::H3, &f(2, 2)).unwrap();
        assert_eq!((h.num_points(), h.num_lines()), (45, 27));
        assert_eq!(
            h.verify_partial_geometry().unwrap(),
            GeometryParams {
                s: 4,
                t: 2,
                alpha: 1
            }
        );
        let mut q5 = build_classical(ClassicalKind::Q5, &f(2, 1)).unwrap();
        assert_eq!(
            q5.verify_partial_geometry().unwrap(),
            GeometryParams {
                s: 2,
                t: 4,
                alpha: 1
            }
        );
        assert!(build_classical(ClassicalKind::H3, &f(3, 1)).is_err());
    }

    #[test]
    fn shared_pair_is_axiom_one_violation() {
        let mut s = IncidenceStructure::new(
            "degenerate",
            2,
            vec![PointKind::Plain; 3],
            vec![LineKind::Plain; 2],
            vec![vec![0, 1, 2], vec![0, 1]],
        )
        .unwrap();
        let v = s.verify_partial_geometry().unwrap_err();
        assert_eq!(v.axiom(), 1);
        assert_eq!(
            v,
            GeometryViolation::SharedPair {
                lines: (0, 1),
                points: (0, 1)
            }
        );
    }

    #[test]
    fn te_block_shape() {
        let gq = conic_te(2);
        let bm = gq.block_matrix(Ordering::TeBlock).unwrap();
        assert_eq!((bm.matrix.nrows(), bm.matrix.ncols()), (15, 15));
        assert!(bm.matrix.row_weights().iter().all(|&w| w == 3));
        bm.check_te_properties(2).unwrap();
        let w = build_classical(ClassicalKind::W3, &f(2, 1)).unwrap();
        assert_eq!(
            w.block_matrix(Ordering::TeBlock).unwrap_err(),
            Error::NotTranslationGq
        );
    }

    #[test]
    fn q4_profile_matches_conic_te() {
        for p in [2, 3] {
            let mut a = conic_te(p);
            let mut b = build_classical(ClassicalKind::Q4, &f(p, 1)).unwrap();
            assert_eq!(a.verify_partial_geometry(), b.verify_partial_geometry());
            assert_eq!(a.degree_profile(), b.degree_profile());
        }
    }
}
