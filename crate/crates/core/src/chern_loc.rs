//! The orbifold Chern character and the product `⋆_𝕋` on class functions of
//! `G`, the complexified model of `K_G(X)`.
//!
//! A class function splits by support into components `α_Ψ`. The map `f^!`
//! sends `α_Ψ` to the `Z(h)`-class function supported at the identity with
//! value `α(h) / λ_{-1}(N*)(h)`, `N = V - V^h`; `f_* ∘ t` undoes it.

use std::sync::Arc;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::characters::ClassFunction;
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::logtrace::invariants_unchecked;
use crate::rings::{CheckOutcome, GradedAlgebra, Orbifold, RingKind};

/// `𝔠𝔥` on a K-ring element: the rank of its component in each sector.
pub fn orbifold_chern(k: &GradedAlgebra, f: &[Rational]) -> Vec<Rational> {
    let sectors = k.basis.iter().map(|b| b.sector + 1).max().unwrap_or(0);
    let mut out = vec![Rational::zero(); sectors];
    for (i, c) in f.iter().enumerate() {
        if !c.is_zero() {
            out[k.basis[i].sector] += c * &k.ranks[i];
        }
    }
    out
}

/// `𝔠𝔥(a ⋆_K b) = 𝔠𝔥(a) ⋆_c 𝔠𝔥(b)` on all pairs of K-ring basis elements.
pub fn check_chern_homomorphism(k: &GradedAlgebra, chow: &GradedAlgebra) -> CheckOutcome {
    assert_eq!(k.kind, RingKind::K);
    let mut out = CheckOutcome::new("riemann-roch");
    let ch: Vec<Vec<Rational>> = (0..k.dim())
        .map(|i| orbifold_chern(k, &k.basis_vector(i)))
        .collect();
    for i in 0..k.dim() {
        for j in 0..k.dim() {
            let lhs = orbifold_chern(k, &k.product_of_basis(i, j));
            let rhs = chow.multiply(&ch[i], &ch[j]);
            out.record(lhs == rhs, || format!("ch(e{i} e{j})"));
        }
    }
    out
}

/// `1_Ψ α`: `α` on the class `class`, zero elsewhere.
pub fn support_project(alpha: &ClassFunction, class: usize) -> ClassFunction {
    let g = alpha.group().clone();
    ClassFunction::from_fn(&g, |x| {
        if g.class_of(x) == class {
            alpha.at(x).clone()
        } else {
            Cyclotomic::zero()
        }
    })
}

pub fn support_decomposition(alpha: &ClassFunction) -> Vec<ClassFunction> {
    (0..alpha.group().num_classes())
        .map(|c| support_project(alpha, c))
        .collect()
}

/// `t_h(α)(z) = α(hz)` for `h` central in the group of `α`.
pub fn mult_twist(alpha: &ClassFunction, h: usize) -> Result<ClassFunction> {
    let g = alpha.group().clone();
    if !(0..g.order()).all(|x| g.commute(h, x)) {
        return Err(Error::Invalid("twisting element is not central".into()));
    }
    Ok(ClassFunction::from_fn(&g, |z| {
        alpha.at(g.mul(h, z)).clone()
    }))
}

/// `f^!`, `f_* ∘ t` and `⋆_𝕋` for one pair `(G, V)`.
pub struct Localization<'a> {
    pub orbifold: &'a Orbifold,
    pub k: GradedAlgebra,
    /// `λ_{-1}(N*)` on `Z(h)` per sector.
    pub normals: Vec<ClassFunction>,
    /// `λ_{-1}(N*)(h)` per sector.
    pub denominators: Vec<Cyclotomic>,
}

impl<'a> Localization<'a> {
    pub fn new(orbifold: &'a Orbifold) -> Result<Self> {
        let v = &orbifold.rep;
        let mut normals = Vec::new();
        let mut denominators = Vec::new();
        for s in &orbifold.sectors.sectors {
            let z = &s.centralizer;
            let n = v.restrict(z).sub(&invariants_unchecked(v, &[s.rep], z));
            let lam = n.lambda_minus_one_dual_unchecked();
            let d = lam
                .at(z.local(s.rep).expect("rep lies in its centralizer"))
                .clone();
            if d.is_zero() {
                return Err(Error::TheoremViolation(format!(
                    "λ_-1 of the normal class vanishes at {}",
                    orbifold.group.label(s.rep)
                )));
            }
            normals.push(lam);
            denominators.push(d);
        }
        Ok(Localization {
            orbifold,
            k: orbifold.k_ring()?,
            normals,
            denominators,
        })
    }

    fn group(&self) -> &Arc<crate::group::FiniteGroup> {
        &self.orbifold.group
    }

    /// Per sector, a class function on `Z(h)`.
    pub fn f_shriek(&self, alpha: &ClassFunction) -> Result<Vec<ClassFunction>> {
        self.orbifold
            .sectors
            .sectors
            .iter()
            .enumerate()
            .map(|(s, sec)| {
                let z = &sec.centralizer;
                let h = z.local(sec.rep).expect("rep lies in its centralizer");
                let restricted = alpha.restrict(z);
                let projected = support_project(&restricted, z.group.class_of(h));
                let inv = self.denominators[s].inv()?;
                mult_twist(&projected.scale(&inv), h)
            })
            .collect()
    }

    /// `f_* ∘ t`: twist back to support `h`, multiply by `λ_{-1}(N*)`, and
    /// induce to `G`.
    pub fn f_push_twist(&self, components: &[ClassFunction]) -> Result<ClassFunction> {
        let g = self.group();
        let mut acc = ClassFunction::zero(g);
        for (s, (sec, beta)) in self
            .orbifold
            .sectors
            .sectors
            .iter()
            .zip(components)
            .enumerate()
        {
            let z = &sec.centralizer;
            let hinv = z.local(g.inv(sec.rep)).expect("centralizer is a group");
            let moved = mult_twist(beta, hinv)?.mul(&self.normals[s]);
            acc = acc.add(&moved.induce(z));
        }
        Ok(acc)
    }

    /// Coordinates over the K-ring basis.
    pub fn to_k(&self, components: &[ClassFunction]) -> Vec<Cyclotomic> {
        components
            .iter()
            .zip(&self.orbifold.tables)
            .flat_map(|(beta, table)| {
                table
                    .irreducibles
                    .iter()
                    .map(move |chi| beta.inner_product(chi))
            })
            .collect()
    }

    pub fn from_k(&self, coords: &[Cyclotomic]) -> Vec<ClassFunction> {
        let offsets = self.orbifold.k_offsets();
        self.orbifold
            .sectors
            .sectors
            .iter()
            .zip(&self.orbifold.tables)
            .enumerate()
            .map(|(s, (sec, table))| {
                let mut acc = ClassFunction::zero(&sec.centralizer.group);
                for (x, chi) in table.irreducibles.iter().enumerate() {
                    let c = &coords[offsets[s] + x];
                    if !c.is_zero() {
                        acc = acc.add(&chi.scale(c));
                    }
                }
                acc
            })
            .collect()
    }

    /// `α ⋆_𝕋 β = f_* t(f^!α ⋆_K f^!β)`.
    pub fn star_t(&self, alpha: &ClassFunction, beta: &ClassFunction) -> Result<ClassFunction> {
        let a = self.to_k(&self.f_shriek(alpha)?);
        let b = self.to_k(&self.f_shriek(beta)?);
        let product = self.from_k(&self.k.multiply_cyclotomic(&a, &b));
        self.f_push_twist(&product)
    }

    /// The projection of the trivial class to the identity-supported summand.
    pub fn identity(&self) -> ClassFunction {
        support_project(&ClassFunction::trivial(self.group()), 0)
    }

    /// Class indicators `1_Ψ`, a basis of class functions on `G`.
    pub fn indicator_basis(&self) -> Vec<ClassFunction> {
        (0..self.group().num_classes())
            .map(|c| ClassFunction::class_indicator(self.group(), c))
            .collect()
    }

    /// `(f_* t) ∘ f^! = id` on class functions of `G` and `f^! ∘ (f_* t) = id`
    /// on identity-supported sector components.
    pub fn check_round_trip(&self) -> Result<CheckOutcome> {
        let mut out = CheckOutcome::new("round-trip");
        for (c, alpha) in self.indicator_basis().iter().enumerate() {
            let back = self.f_push_twist(&self.f_shriek(alpha)?)?;
            out.record(&back == alpha, || format!("f_* t f^! on class {c}"));
        }
        let sectors = &self.orbifold.sectors.sectors;
        for (s, sec) in sectors.iter().enumerate() {
            let components: Vec<ClassFunction> = sectors
                .iter()
                .map(|other| {
                    if other.index == s {
                        ClassFunction::class_indicator(&sec.centralizer.group, 0)
                    } else {
                        ClassFunction::zero(&other.centralizer.group)
                    }
                })
                .collect();
            let back = self.f_shriek(&self.f_push_twist(&components)?)?;
            out.record(back == components, || format!("f^! f_* t on sector {s}"));
        }
        Ok(out)
    }

    /// Products `1_Ψ ⋆_𝕋 1_Ψ'` as value vectors, i.e. coordinates in the
    /// indicator basis.
    pub fn star_t_table(&self) -> Result<Vec<Vec<Vec<Cyclotomic>>>> {
        let basis = self.indicator_basis();
        basis
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| Ok(self.star_t(a, b)?.into_values()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect()
    }

    /// Identity, commutativity and associativity of `⋆_𝕋` on the indicator
    /// basis.
    pub fn check_star_t(&self) -> Result<Vec<CheckOutcome>> {
        let g = self.group().clone();
        let table = self.star_t_table()?;
        let n = table.len();
        let as_fn =
            |v: &[Cyclotomic]| ClassFunction::new(g.clone(), v.to_vec()).expect("class values");
        let times = |v: &[Cyclotomic], c: usize| -> Vec<Cyclotomic> {
            // v ⋆ 1_c, expanded in the indicator basis
            let mut out = vec![Cyclotomic::zero(); n];
            for (a, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for (k, y) in table[a][c].iter().enumerate() {
                    out[k] += &(x * y);
                }
            }
            out
        };

        let mut identity = CheckOutcome::new("star-t-identity");
        let one = self.identity();
        for (c, alpha) in self.indicator_basis().iter().enumerate() {
            identity.record(&self.star_t(&one, alpha)? == alpha, || format!("1 ⋆ 1_{c}"));
        }
        let mut commutativity = CheckOutcome::new("star-t-commutativity");
        let mut associativity = CheckOutcome::new("star-t-associativity");
        for a in 0..n {
            for b in 0..n {
                commutativity.record(table[a][b] == table[b][a], || format!("1_{a} ⋆ 1_{b}"));
                for c in 0..n {
                    let left = times(&table[a][b], c);
                    // 1_a ⋆ (1_b ⋆ 1_c) = Σ_k (1_b ⋆ 1_c)_k (1_a ⋆ 1_k)
                    let mut right = vec![Cyclotomic::zero(); n];
                    for (k, y) in table[b][c].iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                        for (l, z) in table[a][k].iter().enumerate() {
                            right[l] += &(y * z);
                        }
                    }
                    associativity.record(as_fn(&left) == as_fn(&right), || {
                        format!("(1_{a} 1_{b}) 1_{c}")
                    });
                }
            }
        }
        Ok(vec![identity, commutativity, associativity])
    }

    pub fn star_t_json(&self) -> Result<Value> {
        let g = self.group();
        let table = self.star_t_table()?;
        let mut entries = Vec::new();
        for (i, row) in table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let terms: Vec<Value> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| json!({"k": k, "c": c.to_string()}))
                    .collect();
                if !terms.is_empty() {
                    entries.push(json!({"i": i, "j": j, "terms": terms}));
                }
            }
        }
        let identity: Vec<String> = self
            .identity()
            .values()
            .iter()
            .map(|c| c.to_string())
            .collect();
        Ok(json!({
            "kind": "star-t",
            "scalars": "cyclotomic",
            "basis": (0..g.num_classes()).map(|c| json!({
                "sector": c,
                "generator": 0,
                "name": format!("1[{}]", g.label(g.conjugacy().representatives[c])),
            })).collect::<Vec<_>>(),
            "identity_values": identity,
            "denominators": self.denominators.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "table": entries,
        }))
    }
}

/// `𝔠𝔥` of every K-ring basis element, for output.
pub fn chern_json(k: &GradedAlgebra) -> Value {
    let rows: Vec<Value> = (0..k.dim())
        .map(|i| {
            json!({
                "basis": k.basis[i].name,
                "ch": orbifold_chern(k, &k.basis_vector(i))
                    .iter()
                    .map(crate::cyclotomic::rational_string)
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!(rows)
}

/// `Σ_k ζ_o^k V_k` for the eigenspaces of a central `h`; equal to `t_h(V)`.
pub fn eigen_weighted_sum(v: &ClassFunction, h: usize) -> Result<ClassFunction> {
    let g = v.group();
    let whole = g.whole();
    let dec = crate::logtrace::eigen_characters(v, h, &whole)?;
    let mut acc = ClassFunction::zero(g);
    for (k, part) in dec.parts.iter().enumerate() {
        acc = acc.add(&part.scale(&Cyclotomic::root_of_unity(dec.order as u64, k as i64)));
    }
    Ok(acc)
}
