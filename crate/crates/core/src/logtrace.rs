//! Eigencharacters, logarithmic traces, ages, and the logarithmic
//! restriction `V(m) = Σ L(m_i)(V) + V^m - V` with its consistency checks.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::characters::{character_table, ClassFunction, QClassFunction};
use crate::cyclotomic::{rational_string, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

fn rational(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The ambient group of a character on `G`.
fn group_of(v: &ClassFunction) -> &Arc<FiniteGroup> {
    v.group()
}

fn check_centralizes(g: &FiniteGroup, z: &Subgroup, elems: &[usize]) -> Result<()> {
    if z.elements
        .iter()
        .all(|&x| elems.iter().all(|&m| g.commute(x, m)))
    {
        Ok(())
    } else {
        Err(Error::Invalid(
            "subgroup does not centralize the acting elements".into(),
        ))
    }
}

/// Eigenspace characters `V_k` of an element `g` of order `o`, as
/// characters of a subgroup `Z` centralizing `g`; `V_k` is the
/// `ζ_o^k`-eigenspace.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub element: usize,
    pub order: usize,
    pub parts: Vec<ClassFunction>,
}

impl EigenDecomposition {
    pub fn sum(&self) -> ClassFunction {
        let mut it = self.parts.iter();
        let first = it.next().expect("order is positive").clone();
        it.fold(first, |acc, p| acc.add(p))
    }
}

/// `V_k(z) = (1/o) Σ_j ζ_o^{-jk} V(g^j z)`.
pub fn eigen_characters(v: &ClassFunction, g: usize, z: &Subgroup) -> Result<EigenDecomposition> {
    let grp = group_of(v);
    check_centralizes(grp, z, &[g])?;
    v.ensure_genuine("representation")?;
    Ok(eigen_characters_unchecked(v, g, z))
}

pub(crate) fn eigen_characters_unchecked(
    v: &ClassFunction,
    g: usize,
    z: &Subgroup,
) -> EigenDecomposition {
    let grp = group_of(v);
    let o = grp.element_order(g);
    let reps = z.class_representatives();
    let inv_o = Rational::one() / rational(o);
    let powers: Vec<usize> = (0..o).map(|j| grp.pow(g, j as i64)).collect();
    let parts = (0..o)
        .map(|k| {
            let values = reps
                .iter()
                .map(|&x| {
                    let mut s = Cyclotomic::zero();
                    for (j, &gj) in powers.iter().enumerate() {
                        let val = v.at(grp.mul(gj, x));
                        if !val.is_zero() {
                            let root = Cyclotomic::root_of_unity(o as u64, -((j * k) as i64));
                            s += &(val * &root);
                        }
                    }
                    s.scale(&inv_o)
                })
                .collect();
            ClassFunction::new(z.group.clone(), values).expect("one value per class")
        })
        .collect();
    EigenDecomposition {
        element: g,
        order: o,
        parts,
    }
}

#[derive(Clone, Debug)]
pub struct LogTraceClass {
    pub class: QClassFunction,
    pub age: Rational,
}

/// `L(g)(V) = Σ_k (k/o) V_k` on `Z`; its rank is the age of `g`.
pub fn log_trace(v: &ClassFunction, g: usize, z: &Subgroup) -> Result<LogTraceClass> {
    check_centralizes(group_of(v), z, &[g])?;
    v.ensure_genuine("representation")?;
    Ok(log_trace_unchecked(v, g, z))
}

pub(crate) fn log_trace_unchecked(v: &ClassFunction, g: usize, z: &Subgroup) -> LogTraceClass {
    let eig = eigen_characters_unchecked(v, g, z);
    let o = eig.order;
    let mut acc = ClassFunction::zero(&z.group);
    for (k, part) in eig.parts.iter().enumerate().skip(1) {
        acc = acc.add(&part.scale_rational(&Rational::new(BigInt::from(k), BigInt::from(o))));
    }
    let age = acc
        .rank()
        .expect("rank of a rational combination is rational");
    let integral = acc
        .values()
        .iter()
        .all(|x| x.to_rational().is_some_and(|q| q.is_integer()));
    LogTraceClass {
        class: QClassFunction {
            function: acc,
            integral,
        },
        age,
    }
}

/// Age of `g` on `V`: `Σ_k (k/o) dim V_k`.
pub fn age(v: &ClassFunction, g: usize) -> Rational {
    let grp = group_of(v);
    let o = grp.element_order(g);
    let mults = v.eigen_multiplicities(grp.class_of(g));
    let mut a = Rational::zero();
    for (k, n) in mults.iter().enumerate() {
        let n = n
            .to_rational()
            .expect("eigenvalue multiplicities are rational");
        a += n * Rational::new(BigInt::from(k), BigInt::from(o));
    }
    a
}

/// Character of the invariants of `H = ⟨m⟩` as a `Z`-module:
/// `z ↦ (1/|H|) Σ_{h ∈ H} V(hz)`.
pub fn invariants_char(v: &ClassFunction, tuple: &[usize], z: &Subgroup) -> Result<ClassFunction> {
    check_centralizes(group_of(v), z, tuple)?;
    Ok(invariants_unchecked(v, tuple, z))
}

pub(crate) fn invariants_unchecked(
    v: &ClassFunction,
    tuple: &[usize],
    z: &Subgroup,
) -> ClassFunction {
    let grp = group_of(v);
    let h = grp.generated_subgroup(tuple);
    let inv_h = Rational::one() / rational(h.len());
    let values = z
        .class_representatives()
        .iter()
        .map(|&x| {
            let mut s = Cyclotomic::zero();
            for &y in &h {
                s += v.at(grp.mul(y, x));
            }
            s.scale(&inv_h)
        })
        .collect();
    ClassFunction::new(z.group.clone(), values).expect("one value per class")
}

/// Dimension of `V^⟨m⟩`.
pub fn invariant_dimension(v: &ClassFunction, tuple: &[usize]) -> Rational {
    let grp = group_of(v);
    let h = grp.generated_subgroup(tuple);
    let mut s = Cyclotomic::zero();
    for &y in &h {
        s += v.at(y);
    }
    s.scale(&(Rational::one() / rational(h.len())))
        .to_rational()
        .expect("dimensions are rational")
}

/// A logarithmic restriction `V(m)` on `Z(m)`.
#[derive(Clone, Debug)]
pub struct TwistedClass {
    /// The tuple as given; for a twisted pullback this omits the closing
    /// inverse.
    pub tuple: Vec<usize>,
    pub centralizer: Arc<Subgroup>,
    pub class: ClassFunction,
    /// Multiplicities over the irreducibles of the centralizer.
    pub multiplicities: Vec<BigInt>,
    pub rank: BigInt,
}

/// `V(m) = Σ L(m_i)(V) + V^m - V` over `Z(m)` for a tuple with product 1.
/// The result is checked against the canonical isotypic representative
/// `Σ_E r_E V_E`, `r_E = Σ_i L(m_i)(E) - dim E + dim E^m`, and must be a
/// genuine character.
pub fn log_restriction(v: &ClassFunction, tuple: &[usize]) -> Result<TwistedClass> {
    let grp = group_of(v);
    if grp.product(tuple) != 0 {
        return Err(Error::Invalid("tuple product is not the identity".into()));
    }
    v.ensure_genuine("representation")?;
    let z = grp.centralizer_subgroup(tuple);
    let class = log_restriction_on(v, tuple, &z);
    let canonical = canonical_representative(v, tuple, &z)?;
    if canonical != class {
        return Err(Error::TheoremViolation(format!(
            "logarithmic restriction of {:?} differs from its isotypic representative",
            tuple
        )));
    }
    let table = character_table(&z.group)?;
    let mults = class
        .decompose(&table)
        .iter()
        .map(|m| m.to_integer())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| {
            Error::TheoremViolation(format!(
                "logarithmic restriction of {tuple:?} is not integral"
            ))
        })?;
    if mults.iter().any(|m| m.is_negative()) {
        return Err(Error::TheoremViolation(format!(
            "logarithmic restriction of {tuple:?} has a negative multiplicity"
        )));
    }
    let rank = class
        .degree()
        .to_integer()
        .expect("integral class has integral rank");
    Ok(TwistedClass {
        tuple: tuple.to_vec(),
        centralizer: z,
        class,
        multiplicities: mults,
        rank,
    })
}

/// The defining formula evaluated on a subgroup `z` centralizing the tuple.
pub(crate) fn log_restriction_on(
    v: &ClassFunction,
    tuple: &[usize],
    z: &Subgroup,
) -> ClassFunction {
    let mut acc = invariants_unchecked(v, tuple, z).sub(&v.restrict(z));
    for &m in tuple {
        acc = acc.add(&log_trace_unchecked(v, m, z).class.function);
    }
    acc
}

fn canonical_representative(
    v: &ClassFunction,
    tuple: &[usize],
    z: &Subgroup,
) -> Result<ClassFunction> {
    let grp = group_of(v);
    let h = grp.subgroup(&grp.generated_subgroup(tuple))?;
    let table = character_table(&h.group)?;
    let inv_h = Rational::one() / rational(h.order());
    let zreps = z.class_representatives();
    let mut acc = ClassFunction::zero(&z.group);
    for (idx, e) in table.irreducibles.iter().enumerate() {
        // r_E from the ages of the tuple on E
        let mut r = Rational::zero();
        for &m in tuple {
            r += age(e, h.local(m).expect("tuple generates H"));
        }
        r -= e.degree().to_rational().expect("degree");
        if idx == table.trivial_index() {
            r += Rational::one();
        }
        if r.is_zero() {
            continue;
        }
        let values = zreps
            .iter()
            .map(|&x| {
                let mut s = Cyclotomic::zero();
                for (l, &y) in h.elements.iter().enumerate() {
                    let ev = e.at(l);
                    if !ev.is_zero() {
                        s += &(v.at(grp.mul(x, y)) * &ev.conj());
                    }
                }
                s.scale(&inv_h)
            })
            .collect();
        let ve = ClassFunction::new(z.group.clone(), values)?;
        acc = acc.add(&ve.scale_rational(&r));
    }
    Ok(acc)
}

/// `V^tw(m_1, ..., m_l) = V(m_1, ..., m_l, (m_1 ⋯ m_l)^-1)`, living on
/// `Z(m_1, ..., m_l)`.
pub fn twisted_pullback(v: &ClassFunction, tuple: &[usize]) -> Result<TwistedClass> {
    if tuple.is_empty() {
        return Err(Error::Invalid(
            "twisted pullback needs a non-empty tuple".into(),
        ));
    }
    let grp = group_of(v);
    let mut padded = tuple.to_vec();
    padded.push(grp.inv(grp.product(tuple)));
    let mut t = log_restriction(v, &padded)?;
    t.tuple = tuple.to_vec();
    Ok(t)
}

#[derive(Clone, Debug, Serialize)]
pub struct FwReport {
    #[serde(serialize_with = "ser_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational,
    pub holds: bool,
    pub integral: bool,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(q))
}

/// Falbel–Wentworth: for a tuple with product 1, `Σ age(m_i)` is an integer
/// and at least `dim V - dim V^m`.
pub fn fw_check(v: &ClassFunction, tuple: &[usize]) -> Result<FwReport> {
    let grp = group_of(v);
    if grp.product(tuple) != 0 {
        return Err(Error::Invalid("tuple product is not the identity".into()));
    }
    let lhs: Rational = tuple.iter().map(|&m| age(v, m)).sum();
    let dim = v
        .rank()
        .ok_or_else(|| Error::Invalid("rank is not rational".into()))?;
    let rhs = dim - invariant_dimension(v, tuple);
    Ok(FwReport {
        holds: lhs >= rhs,
        integral: lhs.is_integer(),
        lhs,
        rhs,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VIdentityReport {
    pub tuple: Vec<usize>,
    /// `V(m_{1,2}) + V(m_{12,3}) = Σ L(m_i) + V^{m_{1,2}} + V^{m_{12,3}} - V^{m_1m_2} - V`.
    pub first: bool,
    /// The `(2,3)` / `(1,23)` counterpart.
    pub second: bool,
    /// `V(m) = V(m_1, m_2, m^-1) + V(m, m_3, m_4) + E_2(V)(m)` with `m = m_1 m_2`.
    pub split: bool,
    pub holds: bool,
}

/// Checks the identity family on `Z(m_1, m_2, m_3)` for `m_4 = (m_1m_2m_3)^-1`.
/// Left sides come from logarithmic restrictions on their own centralizers,
/// restricted to `Z`; right sides are evaluated directly on `Z`.
pub fn v_identity_check(v: &ClassFunction, triple: [usize; 3]) -> Result<VIdentityReport> {
    let grp = group_of(v);
    let [m1, m2, m3] = triple;
    let m12 = grp.mul(m1, m2);
    let m23 = grp.mul(m2, m3);
    let m4 = grp.inv(grp.product(&triple));
    let z = grp.centralizer_subgroup(&triple);

    let restricted = |t: &[usize]| -> Result<ClassFunction> {
        let tc = log_restriction(v, t)?;
        tc.class.restrict_between(&tc.centralizer, &z)
    };
    let inv = |t: &[usize]| invariants_unchecked(v, t, &z);
    let mut sum_l = ClassFunction::zero(&z.group);
    for m in [m1, m2, m3, m4] {
        sum_l = sum_l.add(&log_trace_unchecked(v, m, &z).class.function);
    }
    let vz = v.restrict(&z);

    let t12 = [m1, m2, grp.inv(m12)];
    let t12_3 = [m12, m3, m4];
    let lhs = restricted(&t12)?.add(&restricted(&t12_3)?);
    let rhs = sum_l
        .add(&inv(&t12))
        .add(&inv(&t12_3))
        .sub(&inv(&[m12]))
        .sub(&vz);
    let first = lhs == rhs;

    let t23 = [m2, m3, grp.inv(m23)];
    let t1_23 = [m1, m23, m4];
    let lhs = restricted(&t23)?.add(&restricted(&t1_23)?);
    let rhs = sum_l
        .add(&inv(&t23))
        .add(&inv(&t1_23))
        .sub(&inv(&[m23]))
        .sub(&vz);
    let second = lhs == rhs;

    let full = [m1, m2, m3, m4];
    let excess = inv(&full)
        .sub(&inv(&t12))
        .sub(&inv(&t12_3))
        .add(&inv(&[m12]));
    let lhs = restricted(&full)?;
    let rhs = restricted(&t12)?.add(&restricted(&t12_3)?).add(&excess);
    let split = lhs == rhs;

    Ok(VIdentityReport {
        tuple: triple.to_vec(),
        first,
        second,
        split,
        holds: first && second && split,
    })
}

/// `L(g)(V) + L(g^-1)(V) = V - V^g` on `Z`.
pub fn inverse_pair_identity(v: &ClassFunction, g: usize, z: &Subgroup) -> Result<bool> {
    let grp = group_of(v);
    check_centralizes(grp, z, &[g])?;
    let lhs = log_trace_unchecked(v, g, z)
        .class
        .function
        .add(&log_trace_unchecked(v, grp.inv(g), z).class.function);
    let rhs = v.restrict(z).sub(&invariants_unchecked(v, &[g], z));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;
    use crate::input::catalog_rep;

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_int(n)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn eigen_parts() {
        let g = catalog("cyclic(2)").unwrap();
        let v = catalog_rep(&g, "sl2").unwrap();
        let whole = g.whole();
        let e = eigen_characters(&v, 1, &whole).unwrap();
        assert!(e.parts[0].is_zero());
        assert_eq!(e.parts[1].values(), &[c(2), c(-2)]);
        let id = eigen_characters(&v, 0, &whole).unwrap();
        assert_eq!(id.parts.len(), 1);
        assert_eq!(id.parts[0], v);

        let s3 = catalog("symmetric(3)").unwrap();
        let std = catalog_rep(&s3, "std").unwrap();
        let c3 = s3.parse_element("(1 2 3)").unwrap();
        let z = s3.centralizer_subgroup(&[c3]);
        let e = eigen_characters(&std, c3, &z).unwrap();
        assert!(e.parts[0].is_zero());
        assert_eq!(e.parts[1].degree(), &c(1));
        assert_eq!(e.parts[2].degree(), &c(1));
        assert_ne!(e.parts[1], e.parts[2]);
        assert_eq!(e.sum(), std.restrict(&z));
    }

    #[test]
    fn log_traces_and_ages() {
        let g = catalog("cyclic(2)").unwrap();
        let v = catalog_rep(&g, "sl2").unwrap();
        let l = log_trace(&v, 1, &g.whole()).unwrap();
        assert_eq!(l.age, q(1, 1));
        assert_eq!(l.class.function.values(), &[c(1), c(-1)]);
        assert_eq!(log_trace(&v, 0, &g.whole()).unwrap().age, q(0, 1));

        let s3 = catalog("symmetric(3)").unwrap();
        let std = catalog_rep(&s3, "std").unwrap();
        let t = s3.parse_element("(1 2)").unwrap();
        assert_eq!(age(&std, t), q(1, 2));
        assert_eq!(
            log_trace(&std, t, &s3.centralizer_subgroup(&[t]))
                .unwrap()
                .age,
            q(1, 2)
        );
    }

    #[test]
    fn invariants_examples() {
        let g = catalog("cyclic(2)").unwrap();
        let v = catalog_rep(&g, "sl2").unwrap();
        assert!(invariants_char(&v, &[1], &g.whole()).unwrap().is_zero());
        assert_eq!(invariants_char(&v, &[0], &g.whole()).unwrap(), v);
        let s3 = catalog("symmetric(3)").unwrap();
        let std = catalog_rep(&s3, "std").unwrap();
        let a = s3.parse_element("(1 2)").unwrap();
        let b = s3.parse_element("(2 3)").unwrap();
        let z = s3.centralizer_subgroup(&[a, b]);
        assert!(invariants_char(&std, &[a, b], &z).unwrap().is_zero());
    }

    #[test]
    fn log_restriction_examples() {
        let g = catalog("cyclic(3)").unwrap();
        let v = catalog_rep(&g, "sl2").unwrap();
        let gen = g.parse_element("g").unwrap();
        let t = log_restriction(&v, &[gen, gen, gen]).unwrap();
        assert_eq!(t.rank, BigInt::from(1));
        // the ζ_3^2-eigenline
        let line = eigen_characters(&v, gen, &g.whole()).unwrap().parts[2].clone();
        assert_eq!(t.class, line);

        for m in 0..3 {
            let t = log_restriction(&v, &[0, m, g.inv(m)]).unwrap();
            assert!(t.class.is_zero());
        }
        let z2 = catalog("cyclic(2)").unwrap();
        let w = catalog_rep(&z2, "sl2").unwrap();
        let t = twisted_pullback(&w, &[1, 1]).unwrap();
        assert!(t.class.is_zero());
        assert!(log_restriction(&w, &[1]).is_err());
    }

    #[test]
    fn twisted_pullback_ranks_in_sl2() {
        for n in 2..=6usize {
            let g = catalog(&format!("cyclic({n})")).unwrap();
            let v = catalog_rep(&g, "sl2").unwrap();
            for a in 1..n {
                for b in 1..n {
                    let t = twisted_pullback(&v, &[a, b]).unwrap();
                    let expected = if (a + b) % n == 0 { 0 } else { 1 };
                    assert_eq!(t.rank, BigInt::from(expected), "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn fw_examples() {
        let s3 = catalog("symmetric(3)").unwrap();
        let std = catalog_rep(&s3, "std").unwrap();
        let a = s3.parse_element("(1 2)").unwrap();
        let b = s3.parse_element("(2 3)").unwrap();
        let c3 = s3.inv(s3.mul(a, b));
        let r = fw_check(&std, &[a, b, c3]).unwrap();
        assert_eq!(r.lhs, q(2, 1));
        assert_eq!(r.rhs, q(2, 1));
        assert!(r.holds && r.integral);
        let r = fw_check(&std, &[0, 0]).unwrap();
        assert!(r.holds && r.lhs.is_zero());
    }

    #[test]
    fn identity_family() {
        let z2 = catalog("cyclic(2)").unwrap();
        let v = catalog_rep(&z2, "sl2").unwrap();
        assert!(v_identity_check(&v, [1, 1, 1]).unwrap().holds);
        assert!(v_identity_check(&v, [0, 0, 0]).unwrap().holds);
        let q8 = catalog("quaternion8").unwrap();
        let w = catalog_rep(&q8, "sl2").unwrap();
        let [i, j, k] = ["i", "j", "k"].map(|s| q8.parse_element(s).unwrap());
        assert!(v_identity_check(&w, [i, j, k]).unwrap().holds);
        assert!(inverse_pair_identity(&w, i, &q8.centralizer_subgroup(&[i])).unwrap());
    }
}
