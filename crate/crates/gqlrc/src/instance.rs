//! Named quadrangle constructions with their parameters.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use gqlrc_core::egg::{elementary_egg_from_oval, elementary_egg_from_ovoid, Egg};
use gqlrc_core::gf::{prime_power, Field};
use gqlrc_core::gq::{
    build_classical, build_t2star, build_te, build_te_unverified, ClassicalKind, GeometryParams,
    IncidenceStructure,
};
use gqlrc_core::pgeom::{conic, elliptic_quadric, hyperoval, SubfieldEmbedding};

use crate::formats;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GqKind {
    W3,
    Q4,
    Q5,
    H3,
    H4,
    T2star,
    TeConic,
    TeOvoid,
    EggFile,
}

impl GqKind {
    pub const ALL: [GqKind; 9] = [
        GqKind::W3,
        GqKind::Q4,
        GqKind::Q5,
        GqKind::H3,
        GqKind::H4,
        GqKind::T2star,
        GqKind::TeConic,
        GqKind::TeOvoid,
        GqKind::EggFile,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GqKind::W3 => "w3",
            GqKind::Q4 => "q4",
            GqKind::Q5 => "q5",
            GqKind::H3 => "h3",
            GqKind::H4 => "h4",
            GqKind::T2star => "t2star",
            GqKind::TeConic => "te-conic",
            GqKind::TeOvoid => "te-ovoid",
            GqKind::EggFile => "egg-file",
        }
    }
}

impl fmt::Display for GqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GqKind {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        GqKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| anyhow!("unknown quadrangle kind `{s}`"))
    }
}

/// How `q4` and `q5` are built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Construction {
    /// `T(E)` of an elementary egg
    #[default]
    Egg,
    /// zeros of a quadratic form
    Form,
}

/// A quadrangle descriptor.
///
/// `q` (or `p` and `h`) is the base field order. `h3` and `h4` live over
/// `F_{q^2}`. `te-conic` and `te-ovoid` field-reduce an oval of `PG(2, q^n)`
/// or an ovoid of `PG(3, q^n)` to an egg over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InstanceSpec {
    pub kind: Option<GqKind>,
    pub q: Option<u32>,
    pub p: Option<u32>,
    pub h: Option<u32>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub input: Option<PathBuf>,
    pub construction: Construction,
    /// reject egg files that violate the egg axioms instead of warning
    pub strict: bool,
}

impl InstanceSpec {
    pub fn new(kind: GqKind, q: u32) -> Self {
        InstanceSpec {
            kind: Some(kind),
            q: Some(q),
            ..Default::default()
        }
    }

    fn order(&self) -> Result<u32> {
        match (self.q, self.p, self.h) {
            (Some(q), None, None) => Ok(q),
            (Some(q), Some(p), h) => {
                let h = h.unwrap_or(1);
                if p.checked_pow(h) != Some(q) {
                    bail!("--q {q} disagrees with --p {p} --h {h}");
                }
                Ok(q)
            }
            (Some(q), None, Some(h)) => {
                let (_, hq) = prime_power(q).ok_or_else(|| anyhow!("{q} is not a prime power"))?;
                if hq != h {
                    bail!("--q {q} disagrees with --h {h}");
                }
                Ok(q)
            }
            (None, Some(p), h) => p
                .checked_pow(h.unwrap_or(1))
                .ok_or_else(|| anyhow!("field order overflows")),
            (None, None, _) => bail!("missing field order: pass --q or --p/--h"),
        }
    }

    fn field(&self, order: u32) -> Result<Arc<Field>> {
        Ok(Arc::new(Field::with_order(order)?))
    }

    fn reject_nm(&self, kind: GqKind) -> Result<()> {
        if self.n.is_some() || self.m.is_some() {
            bail!("{kind} takes no --n/--m");
        }
        Ok(())
    }
}

/// A constructed and verified quadrangle.
#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub kind: GqKind,
    pub structure: IncidenceStructure,
    pub params: GeometryParams,
    pub egg: Option<Egg>,
}

/// An unverified structure; `warnings` lists egg axiom failures tolerated
/// without `strict`.
#[derive(Debug, Clone)]
pub struct Built {
    pub kind: GqKind,
    pub structure: IncidenceStructure,
    pub egg: Option<Egg>,
    pub warnings: Vec<String>,
}

/// Builds the quadrangle and checks the partial geometry axioms.
pub fn build_instance(spec: &InstanceSpec) -> Result<Instance> {
    let b = build_structure(spec)?;
    finish(b.kind, b.structure, b.egg)
}

/// Builds the quadrangle without checking the partial geometry axioms.
pub fn build_structure(spec: &InstanceSpec) -> Result<Built> {
    let kind = spec.kind.ok_or_else(|| anyhow!("missing --gq"))?;
    let mut warnings = Vec::new();
    let mut egg = None;
    let structure = match kind {
        GqKind::W3 | GqKind::H3 | GqKind::H4 => {
            spec.reject_nm(kind)?;
            let q = spec.order()?;
            let (ck, order) = match kind {
                GqKind::W3 => (ClassicalKind::W3, q),
                GqKind::H3 => (ClassicalKind::H3, q * q),
                _ => (ClassicalKind::H4, q * q),
            };
            build_classical(ck, &spec.field(order)?)?
        }
        GqKind::Q4 | GqKind::Q5 => {
            spec.reject_nm(kind)?;
            let field = spec.field(spec.order()?)?;
            match spec.construction {
                Construction::Form => {
                    let ck = if kind == GqKind::Q4 {
                        ClassicalKind::Q4
                    } else {
                        ClassicalKind::Q5
                    };
                    build_classical(ck, &field)?
                }
                Construction::Egg => {
                    let e = elementary(&field, 1, kind == GqKind::Q5)?;
                    let g = build_te(&e)?;
                    egg = Some(e);
                    g
                }
            }
        }
        GqKind::T2star => {
            spec.reject_nm(kind)?;
            let q = spec.order()?;
            let field = spec.field(q)?;
            if field.characteristic() != 2 {
                bail!("T2*(O) needs q even, got q = {q}");
            }
            build_t2star(&field, &hyperoval(&field)?)?
        }
        GqKind::TeConic | GqKind::TeOvoid => {
            let ovoid = kind == GqKind::TeOvoid;
            let n = spec.n.unwrap_or(1);
            let m = if ovoid { 2 * n } else { n };
            if let Some(given) = spec.m {
                if given != m {
                    bail!("{kind} with n = {n} has m = {m}, not {given}");
                }
            }
            let field = spec.field(spec.order()?)?;
            let e = elementary(&field, n, ovoid)?;
            let g = build_te(&e)?;
            egg = Some(e);
            g
        }
        GqKind::EggFile => {
            let path = spec
                .input
                .as_ref()
                .ok_or_else(|| anyhow!("egg-file needs --in"))?;
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let e = formats::parse_egg(&text)?;
            if spec.n.is_some_and(|n| n != e.n()) || spec.m.is_some_and(|m| m != e.m()) {
                bail!("egg file has n = {}, m = {}", e.n(), e.m());
            }
            let report = e.verify();
            for fail in report.failures() {
                let msg = format!("egg axiom {:?} violated: {:?}", fail.axiom, fail.witness);
                if spec.strict {
                    bail!("{msg}");
                }
                warnings.push(msg);
            }
            let g = build_te_unverified(&e)?;
            egg = Some(e);
            g
        }
    };
    Ok(Built {
        kind,
        structure,
        egg,
        warnings,
    })
}

/// Wraps an already built structure, e.g. one loaded from a file.
pub fn finish(
    kind: GqKind,
    mut structure: IncidenceStructure,
    egg: Option<Egg>,
) -> Result<Instance> {
    let params = structure
        .verify_partial_geometry()
        .map_err(|v| anyhow!("{}: {v}", structure.name()))?;
    Ok(Instance {
        label: structure.name().to_string(),
        kind,
        structure,
        params,
        egg,
    })
}

/// Elementary egg over `field` from an oval of `PG(2, q^n)` or an ovoid of
/// `PG(3, q^n)`.
pub fn elementary(field: &Arc<Field>, n: usize, ovoid: bool) -> Result<Egg> {
    if n == 0 {
        bail!("--n must be positive");
    }
    let degree = field.degree() * n as u32;
    let big = Arc::new(Field::new(field.characteristic(), degree)?);
    let emb = SubfieldEmbedding::new(big.clone(), field.clone())?;
    let egg = if ovoid {
        elementary_egg_from_ovoid(&elliptic_quadric(&big), &emb)?
    } else {
        elementary_egg_from_oval(&conic(&big), &emb)?
    };
    Ok(egg)
}
