//! Class functions with cyclotomic values and the representation-ring
//! operations built on them.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::dixon;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// Groups above this order need a user-supplied character table.
pub const DEFAULT_TABLE_CAP: usize = 512;

fn rational(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A function on the conjugacy classes of a group, one value per class in
/// the group's class order.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "ClassFunction[{}]", vals.join(", "))
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

impl ClassFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::Invalid(format!(
                "class function needs {} values, got {}",
                group.num_classes(),
                values.len()
            )));
        }
        Ok(ClassFunction { group, values })
    }

    /// Evaluates `f` at each class representative.
    pub fn from_fn(group: &Arc<FiniteGroup>, f: impl Fn(usize) -> Cyclotomic) -> Self {
        let values = group
            .conjugacy()
            .representatives
            .iter()
            .map(|&r| f(r))
            .collect();
        ClassFunction {
            group: group.clone(),
            values,
        }
    }

    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        Self::constant(group, Cyclotomic::zero())
    }

    pub fn constant(group: &Arc<FiniteGroup>, c: Cyclotomic) -> Self {
        ClassFunction {
            group: group.clone(),
            values: vec![c; group.num_classes()],
        }
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        Self::constant(group, Cyclotomic::one())
    }

    pub fn regular(group: &Arc<FiniteGroup>) -> Self {
        let n = group.order() as i64;
        Self::from_fn(group, |g| Cyclotomic::from_int(if g == 0 { n } else { 0 }))
    }

    /// Indicator of a single class.
    pub fn class_indicator(group: &Arc<FiniteGroup>, class: usize) -> Self {
        let mut v = Self::zero(group);
        v.values[class] = Cyclotomic::one();
        v
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Cyclotomic> {
        self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at a group element.
    pub fn at(&self, element: usize) -> &Cyclotomic {
        &self.values[self.group.class_of(element)]
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn rank(&self) -> Option<Rational> {
        self.values[0].to_rational()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    fn same_group(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.group, &other.group),
            "class functions live on different groups"
        );
    }

    fn zip(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Self {
        self.same_group(other);
        ClassFunction {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise product (tensor product of representations).
    pub fn mul(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        self.map(|v| v * c)
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.map(|v| v.scale(q))
    }

    pub fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    /// Complex conjugate, the character of the dual representation.
    pub fn dual(&self) -> Self {
        self.map(|v| v.conj())
    }

    /// `ψ^j(χ)(g) = χ(g^j)`.
    pub fn adams(&self, j: i64) -> Self {
        let e = self.group.exponent() as i64;
        let power = &self.group.conjugacy().power_map;
        let jj = j.rem_euclid(e) as usize;
        ClassFunction {
            group: self.group.clone(),
            values: (0..self.values.len())
                .map(|c| self.values[power[c][jj]].clone())
                .collect(),
        }
    }

    /// `(1/|G|) Σ_g a(g) conj(b(g))`.
    pub fn inner_product(&self, other: &Self) -> Cyclotomic {
        self.same_group(other);
        let conj = self.group.conjugacy();
        let mut s = Cyclotomic::zero();
        for c in 0..self.values.len() {
            let term = &self.values[c] * &other.values[c].conj();
            s += &term.scale(&rational(conj.class_size(c)));
        }
        s.scale(&(Rational::one() / rational(self.group.order())))
    }

    /// Average over the group, `⟨χ, 1⟩`.
    pub fn invariants(&self) -> Cyclotomic {
        self.inner_product(&ClassFunction::trivial(&self.group))
    }

    pub fn restrict(&self, sub: &Subgroup) -> Self {
        let reps = sub.class_representatives();
        ClassFunction {
            group: sub.group.clone(),
            values: reps.iter().map(|&r| self.at(r).clone()).collect(),
        }
    }

    /// Induction from `sub` (on which `self` lives) to its ambient group.
    pub fn induce(&self, sub: &Subgroup) -> Self {
        assert!(Arc::ptr_eq(&self.group, &sub.group));
        let parent = &sub.ambient();
        let h = sub.group.conjugacy();
        let g = parent.conjugacy();
        let mut values = vec![Cyclotomic::zero(); g.len()];
        let scale_h = Rational::one() / rational(sub.order());
        for d in 0..h.len() {
            if self.values[d].is_zero() {
                continue;
            }
            let c = parent.class_of(sub.parent(h.representatives[d]));
            let w = rational(h.class_size(d) * g.centralizers[c].len()) * &scale_h;
            values[c] += &self.values[d].scale(&w);
        }
        ClassFunction {
            group: parent.clone(),
            values,
        }
    }

    /// Moves a class function on `from` to `to = h from h^-1`: the result at
    /// `z` is the original value at `h^-1 z h`.
    pub fn transport(&self, from: &Subgroup, to: &Subgroup, h: usize) -> Result<Self> {
        let g = from.ambient();
        let image: Vec<usize> = {
            let mut v: Vec<usize> = from.elements.iter().map(|&x| g.conjugate(h, x)).collect();
            v.sort_unstable();
            v
        };
        if image != to.elements {
            return Err(Error::Invalid(
                "conjugator does not carry the source subgroup onto the target".into(),
            ));
        }
        let hinv = g.inv(h);
        Ok(ClassFunction {
            group: to.group.clone(),
            values: to
                .class_representatives()
                .iter()
                .map(|&z| {
                    let local = from.local(g.conjugate(hinv, z)).expect("image checked");
                    self.values[from.group.class_of(local)].clone()
                })
                .collect(),
        })
    }

    /// Restriction between two subgroups of the same ambient group,
    /// `to ⊂ from`, with `self` living on `from`.
    pub fn restrict_between(&self, from: &Subgroup, to: &Subgroup) -> Result<Self> {
        let values = to
            .class_representatives()
            .iter()
            .map(|&p| {
                from.local(p)
                    .map(|l| self.at(l).clone())
                    .ok_or_else(|| Error::Invalid("target is not contained in the source".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction {
            group: to.group.clone(),
            values,
        })
    }

    /// Induction from `from` to `to`, two subgroups of one ambient group with
    /// `from ⊆ to`.
    pub fn induce_between(&self, from: &Subgroup, to: &Subgroup) -> Result<Self> {
        assert!(Arc::ptr_eq(&self.group, &from.group));
        let h = from.group.conjugacy();
        let g = to.group.conjugacy();
        let mut values = vec![Cyclotomic::zero(); g.len()];
        let scale_h = Rational::one() / rational(from.order());
        for d in 0..h.len() {
            if self.values[d].is_zero() {
                continue;
            }
            let p = from.parent(h.representatives[d]);
            let c = to.class_of_parent(p).ok_or_else(|| {
                Error::Invalid("source subgroup is not contained in the target".into())
            })?;
            let w = rational(h.class_size(d) * g.centralizers[c].len()) * &scale_h;
            values[c] += &self.values[d].scale(&w);
        }
        Ok(ClassFunction {
            group: to.group.clone(),
            values,
        })
    }

    /// Multiplicities of the eigenvalues `ζ_o^k` of an element of order `o`
    /// in class `class`, for a genuine character.
    pub fn eigen_multiplicities(&self, class: usize) -> Vec<Cyclotomic> {
        let conj = self.group.conjugacy();
        let e = self.group.exponent();
        let o = self.group.element_order(conj.representatives[class]);
        let inv_o = Rational::one() / rational(o);
        (0..o)
            .map(|k| {
                let mut s = Cyclotomic::zero();
                for j in 0..o {
                    let v = &self.values[conj.power_map[class][j % e]];
                    s += &(v * &Cyclotomic::root_of_unity(o as u64, -((j * k) as i64)));
                }
                s.scale(&inv_o)
            })
            .collect()
    }

    /// Multiplicities over the irreducibles in table order.
    pub fn decompose(&self, table: &CharacterTable) -> Vec<Cyclotomic> {
        table
            .irreducibles
            .iter()
            .map(|chi| self.inner_product(chi))
            .collect()
    }

    /// Multiplicities as integers, or `None` when some multiplicity is not a
    /// rational integer.
    pub fn integer_multiplicities(&self) -> Result<Option<Vec<BigInt>>> {
        let table = character_table(&self.group)?;
        Ok(self
            .decompose(&table)
            .iter()
            .map(|m| m.to_integer())
            .collect())
    }

    /// True when all multiplicities are non-negative integers.
    pub fn is_genuine(&self) -> Result<bool> {
        Ok(match self.integer_multiplicities()? {
            Some(m) => m.iter().all(|x| !x.is_negative()),
            None => false,
        })
    }

    pub fn ensure_genuine(&self, what: &str) -> Result<()> {
        if self.is_genuine()? {
            Ok(())
        } else {
            Err(Error::Invalid(format!("{what} is not a genuine character")))
        }
    }

    /// `λ_{-1}(V*)`, the class function `g ↦ det(1 - g | V*)`, from the
    /// eigenvalue multiplicities of each class.
    pub fn lambda_minus_one_dual(&self) -> Result<Self> {
        self.ensure_genuine("argument of λ_{-1}")?;
        Ok(self.lambda_minus_one_dual_unchecked())
    }

    pub(crate) fn lambda_minus_one_dual_unchecked(&self) -> Self {
        let conj = self.group.conjugacy();
        let values = (0..conj.len())
            .map(|c| {
                let o = self.group.element_order(conj.representatives[c]) as u64;
                let mut v = Cyclotomic::one();
                for (k, n) in self.eigen_multiplicities(c).iter().enumerate() {
                    let n = n
                        .to_integer()
                        .expect("genuine characters have integral eigenspaces");
                    if n.is_zero() {
                        continue;
                    }
                    let n: u32 = n.try_into().expect("multiplicity fits in u32");
                    let factor = &Cyclotomic::one() - &Cyclotomic::root_of_unity(o, -(k as i64));
                    v = &v * &factor.pow(n);
                }
                v
            })
            .collect();
        ClassFunction {
            group: self.group.clone(),
            values,
        }
    }

    /// `Σ_{k ≤ max} (-1)^k λ^k(V*)` via Newton's identities
    /// `k λ^k = Σ_{i=1}^k (-1)^{i-1} ψ^i λ^{k-i}`. Agrees with
    /// [`Self::lambda_minus_one_dual`] for genuine characters once `max`
    /// reaches the rank.
    pub fn lambda_minus_one_dual_newton(&self, max: usize) -> Self {
        let dual = self.dual();
        let adams: Vec<ClassFunction> = (0..=max).map(|i| dual.adams(i as i64)).collect();
        let mut lambdas = vec![ClassFunction::trivial(&self.group)];
        for k in 1..=max {
            let mut acc = ClassFunction::zero(&self.group);
            for i in 1..=k {
                let term = adams[i].mul(&lambdas[k - i]);
                acc = if i % 2 == 1 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            lambdas.push(acc.scale_rational(&(Rational::one() / rational(k))));
        }
        lambdas
            .iter()
            .enumerate()
            .fold(ClassFunction::zero(&self.group), |acc, (k, l)| {
                if k % 2 == 0 {
                    acc.add(l)
                } else {
                    acc.sub(l)
                }
            })
    }
}

/// A rational-coefficient class function, e.g. a logarithmic trace. The flag
/// records whether it is known to be an integral virtual character.
#[derive(Clone, Debug)]
pub struct QClassFunction {
    pub function: ClassFunction,
    pub integral: bool,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: Arc<FiniteGroup>,
    pub irreducibles: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn degrees(&self) -> Vec<BigInt> {
        self.irreducibles
            .iter()
            .map(|c| c.degree().to_integer().expect("degrees are integers"))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    /// Index of the trivial character.
    pub fn trivial_index(&self) -> usize {
        0
    }

    /// `Σ_i m_i χ_i` for integer multiplicities.
    pub fn combine(&self, mult: &[BigInt]) -> ClassFunction {
        let mut acc = ClassFunction::zero(&self.group);
        for (m, chi) in mult.iter().zip(&self.irreducibles) {
            if !m.is_zero() {
                acc = acc.add(&chi.scale_rational(&Rational::from_integer(m.clone())));
            }
        }
        acc
    }
}

fn row_cmp(a: &[Cyclotomic], b: &[Cyclotomic]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.canonical_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn sort_rows(rows: &mut [Vec<Cyclotomic>]) {
    rows.sort_by(|a, b| {
        let da = a[0].to_integer().unwrap_or_default();
        let db = b[0].to_integer().unwrap_or_default();
        da.cmp(&db).then_with(|| row_cmp(a, b))
    });
}

pub fn character_table(g: &Arc<FiniteGroup>) -> Result<CharacterTable> {
    character_table_capped(g, DEFAULT_TABLE_CAP)
}

/// Character table by Dixon's method, cached on the group. Irreducibles are
/// sorted by degree, then by values class by class.
pub fn character_table_capped(g: &Arc<FiniteGroup>, cap: usize) -> Result<CharacterTable> {
    let rows = match g.character_values.get() {
        Some(rows) => rows.clone(),
        None => {
            if g.order() > cap {
                return Err(Error::SizeCap {
                    what: "character table",
                    size: g.order(),
                    cap,
                });
            }
            let mut rows = dixon::dixon_table(g)?;
            sort_rows(&mut rows);
            dixon::validate_table(g, &rows)?;
            let _ = g.character_values.set(rows.clone());
            rows
        }
    };
    Ok(CharacterTable {
        group: g.clone(),
        irreducibles: rows
            .into_iter()
            .map(|values| ClassFunction {
                group: g.clone(),
                values,
            })
            .collect(),
    })
}

/// Installs a user-supplied table after exact validation.
pub fn install_character_table(g: &Arc<FiniteGroup>, mut rows: Vec<Vec<Cyclotomic>>) -> Result<()> {
    dixon::validate_table(g, &rows)?;
    sort_rows(&mut rows);
    if let Some(existing) = g.character_values.get() {
        if *existing != rows {
            return Err(Error::CharacterTable(
                "supplied table disagrees with the computed one".into(),
            ));
        }
        return Ok(());
    }
    let _ = g.character_values.set(rows);
    Ok(())
}
