//! Codes of projective and affine spaces and the dual-code vectors built
//! from pairs of subspaces.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;

use super::{
    classify_against, min_weight_sweep, words_of_weight, Codeword, LinearCode, SyndromeTable,
};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::pgeom::{ProjectivePoint, ProjectiveSpace, Subspace};

/// `C_t(PG(N, q))` over the prime subfield: points versus `t`-spaces.
pub fn pg_code(space: &ProjectiveSpace, t: usize) -> Result<LinearCode> {
    LinearCode::from_binary_matrix(
        &space.incidence_matrix_spaces(t)?,
        space.field().characteristic(),
    )
}

/// `C_t(AG(N, q))`: affine points versus `t`-flats.
pub fn ag_code(space: &ProjectiveSpace, t: usize) -> Result<LinearCode> {
    LinearCode::from_binary_matrix(
        &space.affine_incidence_matrix_spaces(t)?,
        space.field().characteristic(),
    )
}

/// Incidence vector of `a` minus that of `b`, indexed by the points of `space`.
pub fn subspace_difference(space: &ProjectiveSpace, a: &Subspace, b: &Subspace) -> Codeword {
    let p = space.field().characteristic();
    let mut v = vec![0u8; space.point_count()];
    for i in space.subspace_point_indices(a) {
        v[i] = 1;
    }
    for i in space.subspace_point_indices(b) {
        v[i] = ((v[i] as u32 + p - 1) % p) as u8;
    }
    Codeword::new(v)
}

/// `inc⟨U, r⟩ - inc⟨T, r⟩` for subspaces `U`, `T` of equal dimension in the
/// hyperplane at infinity and an affine point `r`.
pub fn dual_lemma_vector(
    space: &ProjectiveSpace,
    u: &Subspace,
    t: &Subspace,
    r: &ProjectivePoint,
) -> Result<Codeword> {
    for s in [u, t] {
        if s.ambient_dim() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                found: s.ambient_dim(),
            });
        }
    }
    if r.ambient_dim() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            found: r.ambient_dim(),
        });
    }
    if u.rank() != t.rank() {
        return Err(Error::InvalidParameter(format!(
            "subspaces of dimensions {} and {}",
            u.proj_dim(),
            t.proj_dim()
        )));
    }
    let h = space.hyperplane_at_infinity();
    if !space.contains(&h, u) || !space.contains(&h, t) {
        return Err(Error::InvalidParameter(
            "subspace not contained in the hyperplane at infinity".into(),
        ));
    }
    if !space.is_affine(r) {
        return Err(Error::InvalidParameter(
            "point lies in the hyperplane at infinity".into(),
        ));
    }
    let a = space.span_with_point(u, r)?;
    let b = space.span_with_point(t, r)?;
    Ok(subspace_difference(space, &a, &b))
}

/// Minimum weight of one code against its closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatMinimum {
    pub expected: usize,
    pub d: Option<usize>,
    pub min_words: usize,
    /// every minimum word is a multiple of a flat's incidence vector
    pub words_are_flats: bool,
    /// number of words of weight `expected + 1`, when checked
    pub next_weight_words: Option<usize>,
}

impl FlatMinimum {
    pub fn passed(&self) -> bool {
        self.d == Some(self.expected)
            && self.words_are_flats
            && self.next_weight_words.unwrap_or(0) == 0
    }
}

/// Minimum weights of `C_t(PG(n, q))` and `C_t(AG(n, q))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimaReport {
    pub n: usize,
    pub q: u32,
    pub t: usize,
    pub pg: FlatMinimum,
    pub ag: FlatMinimum,
}

impl MinimaReport {
    pub fn passed(&self) -> bool {
        self.pg.passed() && self.ag.passed()
    }
}

/// Sweeps both codes up to their predicted minimum weights
/// `(q^{t+1}-1)/(q-1)` and `q^t`, and checks that no affine word has weight
/// `q^t + 1`.
pub fn verify_pg_ag_minima(n: usize, q: u32, t: usize, budget: u128) -> Result<MinimaReport> {
    let field = Arc::new(Field::with_order(q)?);
    let space = ProjectiveSpace::new(field, n);
    let qs = q as usize;

    let pg_rows = space.incidence_matrix_spaces(t)?;
    let pg = pg_code(&space, t)?;
    let expected = (0..=t).map(|i| qs.pow(i as u32)).sum();
    let report = min_weight_sweep(&pg, expected, budget)?;
    let pg_check = FlatMinimum {
        expected,
        d: report.d,
        min_words: report.words.len(),
        words_are_flats: classify_against(&report.words, pg_rows.rows()).all_line_multiples,
        next_weight_words: None,
    };

    let ag_rows = space.affine_incidence_matrix_spaces(t)?;
    let ag = ag_code(&space, t)?;
    let expected = qs.pow(t as u32);
    let report = min_weight_sweep(&ag, expected + 1, budget)?;
    let (d, words) = (report.d, report.words);
    let gap = if d == Some(expected) {
        words_of_weight(&SyndromeTable::new(&ag), expected + 1, 0..ag.length()).len()
    } else {
        0
    };
    let ag_check = FlatMinimum {
        expected,
        d,
        min_words: words.len(),
        words_are_flats: classify_against(&words, ag_rows.rows()).all_line_multiples,
        next_weight_words: Some(gap),
    };
    Ok(MinimaReport {
        n,
        q,
        t,
        pg: pg_check,
        ag: ag_check,
    })
}
