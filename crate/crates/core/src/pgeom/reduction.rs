//! Field reduction `PG(k-1, q^e) → PG(ke-1, q)`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{ProjectivePoint, ProjectiveSpace, Subspace};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// `F_q ⊂ F_{q^e}` together with the `F_q`-basis `1, ω, …, ω^{e-1}` of
/// `F_{q^e}`, where `ω` is the primitive element of the large field.
#[derive(Debug, Clone)]
pub struct SubfieldEmbedding {
    big: Arc<Field>,
    small: Arc<Field>,
    degree: usize,
    embed: Vec<Elem>,
    /// coordinates over the small field, indexed by big element encoding
    coords: Vec<Vec<Elem>>,
}

impl SubfieldEmbedding {
    pub fn new(big: Arc<Field>, small: Arc<Field>) -> Result<Self> {
        if big.characteristic() != small.characteristic()
            || !big.degree().is_multiple_of(small.degree())
        {
            return Err(Error::IncompatibleFields(format!(
                "F_{} is not a subfield of F_{}",
                small.order(),
                big.order()
            )));
        }
        let degree = (big.degree() / small.degree()) as usize;
        let embed = subfield_images(&big, &small);

        let omega = big.primitive_element();
        let basis: Vec<Elem> = (0..degree).map(|j| big.pow(omega, j as u64)).collect();
        let mut coords = vec![Vec::new(); big.order() as usize];
        let qs = small.order() as usize;
        for idx in 0..qs.pow(degree as u32) {
            let mut rest = idx;
            let mut c = vec![Elem::ZERO; degree];
            let mut value = Elem::ZERO;
            for j in 0..degree {
                c[j] = Elem((rest % qs) as u32);
                rest /= qs;
                value = big.add(value, big.mul(embed[c[j].0 as usize], basis[j]));
            }
            coords[value.0 as usize] = c;
        }
        Ok(SubfieldEmbedding {
            big,
            small,
            degree,
            embed,
            coords,
        })
    }

    pub fn big(&self) -> &Arc<Field> {
        &self.big
    }

    pub fn small(&self) -> &Arc<Field> {
        &self.small
    }

    /// Extension degree `e`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Image of a small-field element in the large field.
    pub fn embed(&self, a: Elem) -> Elem {
        self.embed[a.0 as usize]
    }

    /// Coordinates of a large-field element over the small field.
    pub fn coordinates(&self, a: Elem) -> &[Elem] {
        &self.coords[a.0 as usize]
    }

    fn expand(&self, v: &[Elem]) -> Vec<Elem> {
        v.iter()
            .flat_map(|&x| self.coords[x.0 as usize].iter().copied())
            .collect()
    }

    /// Rows `ω^j · v` for `j < e`, written over the small field.
    fn reduced_rows(&self, v: &[Elem]) -> Vec<Vec<Elem>> {
        let omega = self.big.primitive_element();
        (0..self.degree)
            .map(|j| {
                let w = self.big.pow(omega, j as u64);
                let scaled: Vec<Elem> = v.iter().map(|&x| self.big.mul(w, x)).collect();
                self.expand(&scaled)
            })
            .collect()
    }

    /// The target space `PG(ke-1, q)` for source dimension `k - 1`.
    pub fn target_space(&self, source_dim: usize) -> ProjectiveSpace {
        ProjectiveSpace::new(self.small.clone(), (source_dim + 1) * self.degree - 1)
    }

    /// Field-reduces one point to an `(e-1)`-dimensional subspace.
    pub fn reduce_point(&self, p: &ProjectivePoint) -> Result<Subspace> {
        let target = self.target_space(p.ambient_dim());
        target.subspace(self.reduced_rows(p.coords()))
    }

    /// Field-reduces a subspace of projective dimension `d` to one of
    /// dimension `(d+1)e - 1`.
    pub fn reduce_subspace(&self, s: &Subspace) -> Result<Subspace> {
        let target = self.target_space(s.ambient_dim());
        let rows = s
            .basis()
            .iter()
            .flat_map(|b| self.reduced_rows(b))
            .collect();
        target.subspace(rows)
    }

    /// Field-reduces a point set.
    pub fn field_reduce(&self, points: &[ProjectivePoint]) -> Result<Vec<Subspace>> {
        points.iter().map(|p| self.reduce_point(p)).collect()
    }
}

/// Maps each small-field element (by encoding) to the large field.
fn subfield_images(big: &Field, small: &Field) -> Vec<Elem> {
    if small.is_prime_field() {
        return small.elements().collect();
    }
    // the multiplicative group of the subfield is generated by
    // g = ω^{(Q-1)/(q-1)}; pick the least power of g that is a root of the
    // small modulus (g itself when both moduli are Conway polynomials)
    let qb = big.order() as u64;
    let qs = small.order() as u64;
    let g = big.pow(big.primitive_element(), (qb - 1) / (qs - 1));
    let is_root = |y: Elem| {
        small
            .modulus()
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| big.add(big.mul(acc, y), Elem(c)))
            .is_zero()
    };
    let root = (1..qs - 1)
        .map(|j| big.pow(g, j))
        .find(|&y| is_root(y))
        .expect("the subfield contains the roots of its modulus");
    let mut images = vec![Elem::ZERO; qs as usize];
    let xs = small.primitive_element();
    let mut a = Elem::ONE;
    let mut b = Elem::ONE;
    for _ in 0..qs - 1 {
        images[a.0 as usize] = b;
        a = small.mul(a, xs);
        b = big.mul(b, root);
    }
    images
}
