//! JSON group and representation specifications, and the catalog
//! representations.

use std::sync::Arc;

use num_traits::Zero;
use serde::Deserialize;

use crate::characters::{install_character_table, ClassFunction};
use crate::cyclotomic::{parse_rational, Cyclotomic};
use crate::error::{Error, Result};
use crate::group::{catalog, cycle_notation, Family, FiniteGroup, DEFAULT_CLOSURE_CAP};

/// A scalar in JSON input: an integer, a string such as `"1/2"` or
/// `"E(3)+E(3)^2"`, or a `{"conductor", "coeffs"}` object.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ScalarSpec {
    Int(i64),
    Text(String),
    Exact(Cyclotomic),
}

impl ScalarSpec {
    pub fn value(&self) -> Result<Cyclotomic> {
        match self {
            ScalarSpec::Int(n) => Ok(Cyclotomic::from_int(*n)),
            ScalarSpec::Text(s) => match parse_rational(s) {
                Ok(q) => Ok(Cyclotomic::from_rational(q)),
                Err(_) => s.parse(),
            },
            ScalarSpec::Exact(z) => Ok(z.clone()),
        }
    }
}

/// A permutation given by its images (0- or 1-based) or in cycle notation.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum PermSpec {
    Images(Vec<usize>),
    Cycles(String),
}

impl PermSpec {
    /// 0-based images. Image lists containing `0` are read as 0-based,
    /// otherwise as 1-based.
    pub fn images(&self, degree: usize) -> Result<Vec<usize>> {
        match self {
            PermSpec::Images(v) => {
                if v.contains(&0) {
                    Ok(v.clone())
                } else {
                    Ok(v.iter().map(|&x| x - 1).collect())
                }
            }
            PermSpec::Cycles(s) => parse_cycles(s, degree),
        }
    }
}

fn parse_cycles(s: &str, degree: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let bad = || Error::Parse(format!("malformed cycle notation `{s}`"));
    let body = s.trim();
    if body == "()" || body.is_empty() {
        return Ok(perm);
    }
    for cyc in body.split(')').filter(|c| !c.trim().is_empty()) {
        let inner = cyc.trim().strip_prefix('(').ok_or_else(bad)?;
        let points: Vec<usize> = inner
            .split(|c: char| c == ' ' || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if points.iter().any(|&p| p == 0 || p > degree) {
            return Err(bad());
        }
        let mut c: Vec<usize> = (0..degree).collect();
        for w in 0..points.len() {
            c[points[w] - 1] = points[(w + 1) % points.len()] - 1;
        }
        perm = crate::group::compose(&perm, &c);
    }
    Ok(perm)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default)]
        character_table: Option<Vec<Vec<ScalarSpec>>>,
    },
    Perm {
        degree: usize,
        generators: Vec<PermSpec>,
        #[serde(default)]
        character_table: Option<Vec<Vec<ScalarSpec>>>,
    },
    Catalog {
        name: String,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<Arc<FiniteGroup>> {
        self.build_capped(DEFAULT_CLOSURE_CAP)
    }

    pub fn build_capped(&self, closure_cap: usize) -> Result<Arc<FiniteGroup>> {
        let (g, table) = match self {
            GroupSpec::Table {
                table,
                character_table,
            } => (FiniteGroup::from_table(table.clone())?, character_table),
            GroupSpec::Perm {
                degree,
                generators,
                character_table,
            } => {
                let gens = generators
                    .iter()
                    .map(|p| p.images(*degree))
                    .collect::<Result<Vec<_>>>()?;
                (
                    FiniteGroup::from_permutations_capped(*degree, &gens, closure_cap)?,
                    character_table,
                )
            }
            GroupSpec::Catalog { name } => return catalog(name),
        };
        if let Some(rows) = table {
            let rows = rows
                .iter()
                .map(|r| r.iter().map(ScalarSpec::value).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            install_character_table(&g, rows)?;
        }
        Ok(g)
    }

    /// Accepts `catalog:NAME`, a bare catalog name, or inline JSON.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(name) = s.strip_prefix("catalog:") {
            return Ok(GroupSpec::Catalog { name: name.into() });
        }
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        Ok(GroupSpec::Catalog { name: s.into() })
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RepSpec {
    Character { values_by_class: Vec<ScalarSpec> },
    CatalogRep { name: String },
    Zero,
}

impl RepSpec {
    pub fn build(&self, g: &Arc<FiniteGroup>) -> Result<ClassFunction> {
        match self {
            RepSpec::Character { values_by_class } => {
                let values = values_by_class
                    .iter()
                    .map(ScalarSpec::value)
                    .collect::<Result<Vec<_>>>()?;
                let chi = ClassFunction::new(g.clone(), values)?;
                validate_character(&chi)?;
                Ok(chi)
            }
            RepSpec::CatalogRep { name } => catalog_rep(g, name),
            RepSpec::Zero => Ok(ClassFunction::zero(g)),
        }
    }

    /// Accepts `catalog:NAME`, a bare name, `zero`, or inline JSON.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
        }
        let name = s.strip_prefix("catalog:").unwrap_or(s);
        if name == "zero" || name == "0" {
            return Ok(RepSpec::Zero);
        }
        Ok(RepSpec::CatalogRep { name: name.into() })
    }
}

/// Rejects class functions that are not characters of representations.
pub fn validate_character(chi: &ClassFunction) -> Result<()> {
    match chi.degree().to_integer() {
        Some(d) if d >= 0.into() => {}
        _ => {
            return Err(Error::Invalid(
                "character value at the identity must be a non-negative integer".into(),
            ))
        }
    }
    if !chi.is_genuine()? {
        return Err(Error::Invalid(
            "values do not decompose into non-negative integer multiplicities of irreducibles"
                .into(),
        ));
    }
    Ok(())
}

fn zeta_sum(n: usize, k: usize) -> Cyclotomic {
    let n = n as u64;
    &Cyclotomic::root_of_unity(n, k as i64) + &Cyclotomic::root_of_unity(n, -(k as i64))
}

/// Named representations: `trivial`, `zero`, `regular`, `perm`, `std`,
/// `sign`, `sl2` (the defining 2-dimensional representation of an ADE
/// group), and sums such as `std+trivial` or `2*sl2`.
pub fn catalog_rep(g: &Arc<FiniteGroup>, name: &str) -> Result<ClassFunction> {
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.contains('+') {
        let mut acc = ClassFunction::zero(g);
        for part in compact.split('+') {
            acc = acc.add(&catalog_rep(g, part)?);
        }
        return Ok(acc);
    }
    if let Some((k, rest)) = compact.split_once('*') {
        let k: i64 = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad multiplicity in `{name}`")))?;
        if k < 0 {
            return Err(Error::Invalid(
                "representation multiplicities are non-negative".into(),
            ));
        }
        return Ok(catalog_rep(g, rest)?.scale(&Cyclotomic::from_int(k)));
    }
    let unknown = || Error::UnknownCatalog(format!("representation `{name}`"));
    let family = g.family().copied();
    let chi = match compact.as_str() {
        "trivial" => ClassFunction::trivial(g),
        "zero" | "0" => ClassFunction::zero(g),
        "regular" => ClassFunction::regular(g),
        "sl2" | "defining" => match family {
            Some(Family::Cyclic(n)) => ClassFunction::from_fn(g, |x| zeta_sum(n, x)),
            Some(Family::BinaryDihedral(n)) => binary_dihedral_defining(g, n),
            Some(Family::Quaternion8) => binary_dihedral_defining(g, 2),
            _ => return Err(unknown()),
        },
        "perm" => {
            if g.degree().is_none() {
                return Err(unknown());
            }
            ClassFunction::from_fn(g, |x| Cyclotomic::from_int(fixed_points(g, x)))
        }
        "std" | "3dim" | "2dim" => match family {
            Some(Family::Dihedral(n)) => ClassFunction::from_fn(g, |x| {
                if x < n {
                    zeta_sum(n, x)
                } else {
                    Cyclotomic::zero()
                }
            }),
            Some(Family::Cyclic(_) | Family::BinaryDihedral(_) | Family::Quaternion8)
                if compact == "2dim" =>
            {
                catalog_rep(g, "sl2")?
            }
            _ if g.degree().is_some() => {
                ClassFunction::from_fn(g, |x| Cyclotomic::from_int(fixed_points(g, x) - 1))
            }
            _ => return Err(unknown()),
        },
        "sign" => {
            if g.degree().is_none() {
                return Err(unknown());
            }
            ClassFunction::from_fn(g, |x| {
                let p = g.permutation(x).expect("permutation group");
                let cycles = cycle_notation(p).matches('(').count();
                let moved = p.iter().enumerate().filter(|(i, &y)| *i != y).count();
                // parity of a permutation = (moved points - nontrivial cycles) mod 2
                let odd = (moved - if moved == 0 { 0 } else { cycles }) % 2 == 1;
                Cyclotomic::from_int(if odd { -1 } else { 1 })
            })
        }
        _ => return Err(unknown()),
    };
    Ok(chi)
}

fn binary_dihedral_defining(g: &Arc<FiniteGroup>, n: usize) -> ClassFunction {
    let m = 2 * n;
    ClassFunction::from_fn(g, |x| {
        if x < m {
            zeta_sum(m, x)
        } else {
            Cyclotomic::zero()
        }
    })
}

fn fixed_points(g: &FiniteGroup, x: usize) -> i64 {
    g.permutation(x)
        .map(|p| p.iter().enumerate().filter(|(i, &y)| *i == y).count() as i64)
        .unwrap_or(0)
}

/// The distinguished representation of an ADE catalog group.
pub fn distinguished_rep(g: &Arc<FiniteGroup>) -> Option<ClassFunction> {
    match g.family() {
        Some(f) if f.is_ade() => catalog_rep(g, "sl2").ok(),
        _ => None,
    }
}
