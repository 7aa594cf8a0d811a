//! Orbifold product rings: `⋆_c` on rational Chow groups and `⋆_K` on
//! equivariant K-theory of the inertia, the pairing `η`, and the axiom checks.
//!
//! For finite `G` acting linearly on `V`, every sector `[V^g/Z(g)]` has
//! rational Chow group `ℚ` in degree 0 and K-group `Rep(Z(g))`, so both rings
//! have finite bases: one generator per sector for Chow, one irreducible of
//! `Z(g)` per basis element for K.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::characters::{character_table, CharacterTable, ClassFunction};
use crate::cyclotomic::{rational_string, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup, EAGER_ORDER_CAP};
use crate::inertia::{
    build_double_sectors_with_cap, build_sectors, triple_sectors, DoubleSector, DoubleSectorIndex,
    SectorIndex,
};
use crate::logtrace::{
    age, invariant_dimension, invariants_unchecked, twisted_pullback, TwistedClass,
};

fn rational(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    Chow,
    K,
    OtherAssoc,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::Chow => "chow",
            RingKind::K => "k",
            RingKind::OtherAssoc => "otherassoc",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BasisLabel {
    pub sector: usize,
    /// Index of the irreducible of `Z(rep)` (always 0 on the Chow side).
    pub generator: usize,
    pub name: String,
}

/// A finite-dimensional commutative algebra with a distinguished basis and
/// sparse structure constants `e_i e_j = Σ_k c_ijk e_k`.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    pub kind: RingKind,
    pub basis: Vec<BasisLabel>,
    pub grading: Vec<Rational>,
    /// Rank of each basis element; 1 on the Chow side.
    pub ranks: Vec<Rational>,
    pub table: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    pub integral: bool,
    pub identity: usize,
    pub verified: BTreeMap<String, bool>,
}

impl GradedAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.table
            .get(&(i, j))
            .and_then(|terms| terms.iter().find(|(t, _)| *t == k))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        if let Some(terms) = self.table.get(&(i, j)) {
            for (k, c) in terms {
                v[*k] += c;
            }
        }
        v
    }

    pub fn multiply(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                if let Some(terms) = self.table.get(&(i, j)) {
                    let xy = x * y;
                    for (k, c) in terms {
                        out[*k] += &xy * c;
                    }
                }
            }
        }
        out
    }

    pub fn multiply_cyclotomic(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let mut out = vec![Cyclotomic::zero(); self.dim()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                if let Some(terms) = self.table.get(&(i, j)) {
                    let xy = x * y;
                    for (k, c) in terms {
                        out[*k] += &xy.scale(c);
                    }
                }
            }
        }
        out
    }

    /// A copy with one structure constant shifted by `delta`.
    pub fn perturbed(&self, i: usize, j: usize, k: usize, delta: &Rational) -> Self {
        let mut out = self.clone();
        out.verified.clear();
        let terms = out.table.entry((i, j)).or_default();
        match terms.iter_mut().find(|(t, _)| *t == k) {
            Some((_, c)) => *c += delta,
            None => terms.push((k, delta.clone())),
        }
        terms.retain(|(_, c)| !c.is_zero());
        if terms.is_empty() {
            out.table.remove(&(i, j));
        }
        out
    }

    pub fn check_identity(&self) -> CheckOutcome {
        let mut out = CheckOutcome::new("identity");
        for i in 0..self.dim() {
            let e = self.basis_vector(i);
            out.record(
                self.product_of_basis(self.identity, i) == e
                    && self.product_of_basis(i, self.identity) == e,
                || format!("1 * e{i}"),
            );
        }
        out
    }

    pub fn check_commutativity(&self) -> CheckOutcome {
        let mut out = CheckOutcome::new("commutativity");
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                out.record(
                    self.product_of_basis(i, j) == self.product_of_basis(j, i),
                    || format!("e{i} e{j} != e{j} e{i}"),
                );
            }
        }
        out
    }

    pub fn check_associativity(&self) -> CheckOutcome {
        let mut out = CheckOutcome::new("associativity");
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.product_then(&self.terms(i, j), k);
                    let right = self.then_product(i, &self.terms(j, k));
                    out.record(left == right, || {
                        format!("(e{i} e{j}) e{k} != e{i} (e{j} e{k})")
                    });
                }
            }
        }
        out
    }

    fn terms(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        self.table.get(&(i, j)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `(Σ c_m e_m) e_k` for sparse terms.
    pub fn product_then(&self, terms: &[(usize, Rational)], k: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (m, c) in terms {
            for (l, d) in self.terms(*m, k) {
                out[*l] += c * d;
            }
        }
        out
    }

    /// `e_i (Σ c_m e_m)` for sparse terms.
    pub fn then_product(&self, i: usize, terms: &[(usize, Rational)]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (m, c) in terms {
            for (l, d) in self.terms(i, *m) {
                out[*l] += c * d;
            }
        }
        out
    }

    /// Every product `e_i e_j`, split by target sector, has zero rank in
    /// sectors whose grade is not `grade(i) + grade(j)`. On the Chow side this
    /// is the strict condition on each nonzero constant.
    pub fn check_grading(&self) -> CheckOutcome {
        let mut out = CheckOutcome::new("grading");
        for ((i, j), terms) in &self.table {
            let expected = &self.grading[*i] + &self.grading[*j];
            let mut by_sector: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, c) in terms {
                if self.grading[*k] != expected {
                    *by_sector
                        .entry(self.basis[*k].sector)
                        .or_insert_with(Rational::zero) += c * &self.ranks[*k];
                }
            }
            let ok = by_sector.values().all(|r| r.is_zero());
            out.record(ok, || {
                format!(
                    "e{i} e{j} has rank outside degree {}",
                    rational_string(&expected)
                )
            });
        }
        out
    }

    pub fn check_frobenius(&self, eta: &PairingMatrix) -> CheckOutcome {
        let mut out = CheckOutcome::new("frobenius");
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ab = self.product_of_basis(i, j);
                for k in 0..n {
                    let bc = self.product_of_basis(j, k);
                    let left = eta.pair(&ab, &self.basis_vector(k));
                    let right = eta.pair(&self.basis_vector(i), &bc);
                    out.record(left == right, || {
                        format!("η(e{i} e{j}, e{k}) != η(e{i}, e{j} e{k})")
                    });
                }
            }
        }
        out
    }

    /// Structure constants are integers and non-negative.
    pub fn check_nonnegative_integral(&self) -> CheckOutcome {
        let mut out = CheckOutcome::new("nonnegative-integral");
        for ((i, j), terms) in &self.table {
            for (k, c) in terms {
                out.record(c.is_integer() && *c >= Rational::zero(), || {
                    format!("c({i},{j},{k}) = {}", rational_string(c))
                });
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let table: Vec<Value> = self
            .table
            .iter()
            .map(|((i, j), terms)| {
                json!({
                    "i": i,
                    "j": j,
                    "terms": terms
                        .iter()
                        .map(|(k, c)| json!({"k": k, "c": rational_string(c)}))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "kind": self.kind.name(),
            "scalars": if self.integral { "integer" } else { "rational" },
            "basis": self.basis.iter().map(|b| json!({
                "sector": b.sector,
                "generator": b.generator,
                "name": b.name,
            })).collect::<Vec<_>>(),
            "grading": self.grading.iter().map(rational_string).collect::<Vec<_>>(),
            "identity": self.identity,
            "table": table,
            "verified": self.verified,
        })
    }
}

/// Result of one exhaustive check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

const REPORTED_FAILURES: usize = 5;

impl CheckOutcome {
    pub fn new(name: &str) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: true,
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            if self.failures.len() < REPORTED_FAILURES {
                self.failures.push(what());
            }
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
        })
    }
}

/// Symmetric pairing on a ring basis.
#[derive(Debug, Clone)]
pub struct PairingMatrix {
    pub entries: Vec<Vec<Rational>>,
}

impl PairingMatrix {
    pub fn pair(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                s += x * y * &self.entries[i][j];
            }
        }
        s
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .entries
            .iter()
            .map(|r| r.iter().map(rational_string).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

/// Inputs to a Chow obstruction class `c` for one double sector.
pub struct PairContext<'a> {
    pub sector: &'a DoubleSector,
    pub twisted: &'a TwistedClass,
    /// `dim V^⟨m_1, m_2⟩`.
    pub fixed_pair: &'a Rational,
    /// `dim V^{m_1 m_2}`.
    pub fixed_product: &'a Rational,
    /// `[Z(m_1 m_2) : Z(m_1, m_2)]`.
    pub index: usize,
}

/// The pushed-forward weight `μ_*(c)` of an inertial class `c` on a double
/// sector, as a multiple of the target sector's fundamental class.
pub trait ObstructionClass {
    fn weight(&self, ctx: &PairContext) -> Rational;
}

/// `c = ε(𝕋^tw)`: survives rationally only when the twisted class has rank 0
/// and `V^⟨m_1,m_2⟩ = V^{m_1 m_2}`.
pub struct EulerTwisted;

impl ObstructionClass for EulerTwisted {
    fn weight(&self, ctx: &PairContext) -> Rational {
        if ctx.twisted.rank.is_zero() && ctx.fixed_pair == ctx.fixed_product {
            rational(ctx.index)
        } else {
            Rational::zero()
        }
    }
}

/// The degenerate class: untwisted products only.
pub struct Degenerate;

impl ObstructionClass for Degenerate {
    fn weight(&self, ctx: &PairContext) -> Rational {
        let (a, b) = ctx.sector.rep();
        if a == 0 || b == 0 {
            EulerTwisted.weight(ctx)
        } else {
            Rational::zero()
        }
    }
}

/// Values of `χ` (on `source ⊆ G`) pulled back along `z ↦ h z h^-1` to
/// `target`, which `h` conjugates into `source`.
fn pull(
    g: &FiniteGroup,
    chi: &ClassFunction,
    source: &Subgroup,
    target: &Subgroup,
    h: usize,
) -> ClassFunction {
    let values = target
        .class_representatives()
        .iter()
        .map(|&z| {
            let l = source
                .local(g.conjugate(h, z))
                .expect("alignment conjugator maps the centralizer into the source");
            chi.at(l).clone()
        })
        .collect();
    ClassFunction::new(target.group.clone(), values).expect("one value per class")
}

/// Per-tuple data shared by the binary and one-shot products.
struct TupleData {
    twisted: TwistedClass,
    fixed_tuple: Rational,
    fixed_product: Rational,
    /// `λ_{-1}(𝕋^tw*) λ_{-1}(N*)` on `Z(m)`, `N = V^{m_1⋯m_l} - V^⟨m⟩`.
    k_factor: ClassFunction,
}

fn tuple_data(v: &ClassFunction, tuple: &[usize], z: &Subgroup) -> Result<TupleData> {
    let g = v.group();
    let twisted = twisted_pullback(v, tuple)?;
    if !Arc::ptr_eq(&twisted.centralizer.group, &z.group) {
        return Err(Error::TheoremViolation("centralizer mismatch".into()));
    }
    let p = g.product(tuple);
    let fixed_tuple = invariant_dimension(v, tuple);
    let fixed_product = invariant_dimension(v, &[p]);
    let normal = invariants_unchecked(v, &[p], z).sub(&invariants_unchecked(v, tuple, z));
    let k_factor = twisted
        .class
        .lambda_minus_one_dual_unchecked()
        .mul(&normal.lambda_minus_one_dual_unchecked());
    Ok(TupleData {
        twisted,
        fixed_tuple,
        fixed_product,
        k_factor,
    })
}

/// Everything needed to build the rings for one pair `(G, V)`.
pub struct Orbifold {
    pub group: Arc<FiniteGroup>,
    pub rep: ClassFunction,
    pub sectors: SectorIndex,
    pub doubles: DoubleSectorIndex,
    pub ages: Vec<Rational>,
    pub tables: Vec<CharacterTable>,
    pair_data: Vec<TupleData>,
}

impl Orbifold {
    pub fn new(g: &Arc<FiniteGroup>, v: &ClassFunction) -> Result<Self> {
        Self::with_eager_cap(g, v, EAGER_ORDER_CAP)
    }

    pub fn with_eager_cap(
        g: &Arc<FiniteGroup>,
        v: &ClassFunction,
        eager_cap: usize,
    ) -> Result<Self> {
        if !Arc::ptr_eq(v.group(), g) {
            return Err(Error::Invalid(
                "representation lives on a different group".into(),
            ));
        }
        v.ensure_genuine("representation")?;
        let sectors = build_sectors(g);
        let doubles = build_double_sectors_with_cap(g, eager_cap);
        let ages = sectors.sectors.iter().map(|s| age(v, s.rep)).collect();
        let tables = sectors
            .sectors
            .iter()
            .map(|s| character_table(&s.centralizer.group))
            .collect::<Result<Vec<_>>>()?;
        let pair_data = doubles
            .sectors
            .iter()
            .map(|d| {
                let (a, b) = d.rep();
                tuple_data(v, &[a, b], &d.centralizer)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Orbifold {
            group: g.clone(),
            rep: v.clone(),
            sectors,
            doubles,
            ages,
            tables,
            pair_data,
        })
    }

    pub fn is_point(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn twisted_class(&self, double: usize) -> &TwistedClass {
        &self.pair_data[double].twisted
    }

    fn product_index(&self, d: &DoubleSector) -> usize {
        let (a, b) = d.rep();
        let z = self.group.tuple_centralizer(&[self.group.mul(a, b)]);
        z.len() / d.centralizer.order()
    }

    pub fn chow_ring(&self) -> GradedAlgebra {
        self.chow_ring_with(RingKind::Chow, &EulerTwisted)
    }

    pub fn otherassoc_ring(&self) -> GradedAlgebra {
        self.chow_ring_with(RingKind::OtherAssoc, &Degenerate)
    }

    /// `x_[m_1] ⋆ x_[m_2] = Σ_Φ μ_*(c(Φ)) x_[m_1 m_2]` for a pluggable `c`.
    pub fn chow_ring_with(&self, kind: RingKind, c: &dyn ObstructionClass) -> GradedAlgebra {
        let mut table: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
        for (d, data) in self.doubles.sectors.iter().zip(&self.pair_data) {
            let ctx = PairContext {
                sector: d,
                twisted: &data.twisted,
                fixed_pair: &data.fixed_tuple,
                fixed_product: &data.fixed_product,
                index: self.product_index(d),
            };
            let w = c.weight(&ctx);
            if w.is_zero() {
                continue;
            }
            *table
                .entry((d.e1().target, d.e2().target))
                .or_default()
                .entry(d.mu().target)
                .or_insert_with(Rational::zero) += w;
        }
        let basis = self
            .sectors
            .sectors
            .iter()
            .map(|s| BasisLabel {
                sector: s.index,
                generator: 0,
                name: format!("x[{}]", self.group.label(s.rep)),
            })
            .collect::<Vec<_>>();
        GradedAlgebra {
            kind,
            ranks: vec![Rational::one(); basis.len()],
            basis,
            grading: self.ages.clone(),
            table: sparse(table),
            integral: false,
            identity: 0,
            verified: BTreeMap::new(),
        }
    }

    /// First basis index of each sector in the K ring.
    pub fn k_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.tables.len());
        let mut n = 0;
        for t in &self.tables {
            offsets.push(n);
            n += t.len();
        }
        offsets
    }

    /// `χ ⋆ ψ = Σ_Φ Ind_{Z(m)}^{Z(m_1 m_2)}(e_1^*χ · e_2^*ψ · λ_{-1}(𝕋^tw*) ·
    /// λ_{-1}(N*))`, transported to the stored representative of the
    /// product class and decomposed over its irreducibles. `N` is the normal
    /// class of `V^⟨m_1,m_2⟩` in `V^{m_1 m_2}`.
    pub fn k_ring(&self) -> Result<GradedAlgebra> {
        let g = &self.group;
        let offsets = self.k_offsets();
        let mut table: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
        for (d, data) in self.doubles.sectors.iter().zip(&self.pair_data) {
            if data.k_factor.is_zero() {
                continue;
            }
            let (e1, e2, mu) = (d.e1(), d.e2(), d.mu());
            let (s1, s2, s3) = (
                &self.sectors.sectors[e1.target],
                &self.sectors.sectors[e2.target],
                &self.sectors.sectors[mu.target],
            );
            let (a, b) = d.rep();
            let zp = g.centralizer_subgroup(&[g.mul(a, b)]);
            let left: Vec<ClassFunction> = self.tables[e1.target]
                .irreducibles
                .iter()
                .map(|chi| pull(g, chi, &s1.centralizer, &d.centralizer, e1.conjugator))
                .collect();
            let right: Vec<ClassFunction> = self.tables[e2.target]
                .irreducibles
                .iter()
                .map(|psi| pull(g, psi, &s2.centralizer, &d.centralizer, e2.conjugator))
                .collect();
            for (x, l) in left.iter().enumerate() {
                let lf = l.mul(&data.k_factor);
                for (y, r) in right.iter().enumerate() {
                    let f = lf.mul(r).induce_between(&d.centralizer, &zp)?;
                    let f = f.transport(&zp, &s3.centralizer, mu.conjugator)?;
                    let entry = table
                        .entry((offsets[e1.target] + x, offsets[e2.target] + y))
                        .or_default();
                    for (w, m) in f.decompose(&self.tables[mu.target]).iter().enumerate() {
                        let m = m.to_integer().ok_or_else(|| {
                            Error::TheoremViolation(format!(
                                "K-theoretic structure constant {m} is not an integer"
                            ))
                        })?;
                        if !m.is_zero() {
                            *entry
                                .entry(offsets[mu.target] + w)
                                .or_insert_with(Rational::zero) += Rational::from_integer(m);
                        }
                    }
                }
            }
        }
        let mut basis = Vec::new();
        let mut grading = Vec::new();
        let mut ranks = Vec::new();
        for (s, t) in self.sectors.sectors.iter().zip(&self.tables) {
            for (x, chi) in t.irreducibles.iter().enumerate() {
                basis.push(BasisLabel {
                    sector: s.index,
                    generator: x,
                    name: format!("[{}]:chi{}", g.label(s.rep), x),
                });
                grading.push(self.ages[s.index].clone());
                ranks.push(chi.degree().to_rational().expect("degrees are integers"));
            }
        }
        Ok(GradedAlgebra {
            kind: RingKind::K,
            basis,
            grading,
            ranks,
            table: sparse(table),
            integral: true,
            identity: 0,
            verified: BTreeMap::new(),
        })
    }

    /// `η` on the basis of a ring built from this data; only defined when
    /// `X` is a point.
    pub fn eta_pairing(&self, ring: &GradedAlgebra) -> Result<PairingMatrix> {
        if !self.is_point() {
            return Err(Error::Invalid(
                "the pairing needs a complete quotient; use the zero representation".into(),
            ));
        }
        let g = &self.group;
        let n = ring.dim();
        let mut entries = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            let bi = &ring.basis[i];
            let s = &self.sectors.sectors[bi.sector];
            for j in 0..n {
                let bj = &ring.basis[j];
                if bj.sector != s.inverse {
                    continue;
                }
                entries[i][j] = match ring.kind {
                    RingKind::Chow | RingKind::OtherAssoc => {
                        Rational::one() / rational(s.centralizer.order())
                    }
                    RingKind::K => {
                        let t = &self.sectors.sectors[bj.sector];
                        let h = g.conjugacy().to_rep[g.inv(s.rep)];
                        let chi = &self.tables[s.index].irreducibles[bi.generator];
                        let psi = pull(
                            g,
                            &self.tables[t.index].irreducibles[bj.generator],
                            &t.centralizer,
                            &s.centralizer,
                            h,
                        );
                        chi.mul(&psi).invariants().to_rational().ok_or_else(|| {
                            Error::TheoremViolation("pairing is not rational".into())
                        })?
                    }
                };
            }
        }
        Ok(PairingMatrix { entries })
    }

    /// One-shot `v_1 ⋆ v_2 ⋆ v_3 = μ_*(e_1^*v_1 e_2^*v_2 e_3^*v_3 · c)` over
    /// the length-3 sectors, with `c` from the length-3 twisted pullback.
    /// Returns the table `(i, j, k) ↦ product vector`.
    pub fn triple_products(
        &self,
        ring: &GradedAlgebra,
    ) -> Result<BTreeMap<(usize, usize, usize), Vec<Rational>>> {
        let g = &self.group;
        let n = ring.dim();
        let triples = triple_sectors(g, &self.doubles)?;
        let offsets = self.k_offsets();
        let mut out: BTreeMap<(usize, usize, usize), Vec<Rational>> = BTreeMap::new();
        for t in &triples {
            let m = &t.class.rep;
            let data = tuple_data(&self.rep, m, &t.centralizer)?;
            let p = g.product(m);
            let target = Aligned3::of(g, p);
            let st = &self.sectors.sectors[target.class];
            match ring.kind {
                RingKind::Chow => {
                    if !(data.twisted.rank.is_zero() && data.fixed_tuple == data.fixed_product) {
                        continue;
                    }
                    let index = g.tuple_centralizer(&[p]).len() / t.centralizer.order();
                    let key = (
                        t.class.evaluations[0].target,
                        t.class.evaluations[1].target,
                        t.class.evaluations[2].target,
                    );
                    out.entry(key).or_insert_with(|| vec![Rational::zero(); n])[target.class] +=
                        rational(index);
                }
                RingKind::K => {
                    if data.k_factor.is_zero() {
                        continue;
                    }
                    let zp = g.centralizer_subgroup(&[p]);
                    let pulled: Vec<Vec<ClassFunction>> = (0..3)
                        .map(|slot| {
                            let e = t.class.evaluations[slot];
                            let s = &self.sectors.sectors[e.target];
                            self.tables[e.target]
                                .irreducibles
                                .iter()
                                .map(|chi| {
                                    pull(g, chi, &s.centralizer, &t.centralizer, e.conjugator)
                                })
                                .collect()
                        })
                        .collect();
                    for (x, f1) in pulled[0].iter().enumerate() {
                        let f1 = f1.mul(&data.k_factor);
                        for (y, f2) in pulled[1].iter().enumerate() {
                            let f12 = f1.mul(f2);
                            for (w, f3) in pulled[2].iter().enumerate() {
                                let f = f12.mul(f3).induce_between(&t.centralizer, &zp)?;
                                let f = f.transport(&zp, &st.centralizer, target.conjugator)?;
                                let key = (
                                    offsets[t.class.evaluations[0].target] + x,
                                    offsets[t.class.evaluations[1].target] + y,
                                    offsets[t.class.evaluations[2].target] + w,
                                );
                                let slot =
                                    out.entry(key).or_insert_with(|| vec![Rational::zero(); n]);
                                for (r, c) in
                                    f.decompose(&self.tables[target.class]).iter().enumerate()
                                {
                                    let c = c.to_rational().ok_or_else(|| {
                                        Error::TheoremViolation(
                                            "triple product is not rational".into(),
                                        )
                                    })?;
                                    slot[offsets[target.class] + r] += c;
                                }
                            }
                        }
                    }
                }
                RingKind::OtherAssoc => {
                    return Err(Error::Invalid(
                        "the one-shot triple formula is defined for the Chow and K rings".into(),
                    ))
                }
            }
        }
        Ok(out)
    }

    /// Iterated binary products against the one-shot triple formula on all
    /// basis triples.
    pub fn check_multiproduct(&self, ring: &GradedAlgebra) -> Result<CheckOutcome> {
        let one_shot = self.triple_products(ring)?;
        let mut out = CheckOutcome::new("multiproduct");
        let n = ring.dim();
        let zero = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..n {
                let ab = ring.terms(i, j).to_vec();
                for k in 0..n {
                    let iterated = ring.product_then(&ab, k);
                    let direct = one_shot.get(&(i, j, k)).unwrap_or(&zero);
                    out.record(&iterated == direct, || format!("e{i} e{j} e{k}"));
                }
            }
        }
        Ok(out)
    }

    /// `i`-swap and `τ` invariance of the twisted class, compared after
    /// transport through the stored conjugators.
    pub fn check_symmetries(&self) -> Result<CheckOutcome> {
        let mut out = CheckOutcome::new("symmetries");
        for (d, data) in self.doubles.sectors.iter().zip(&self.pair_data) {
            for (label, aligned) in [("swap", d.swap), ("tau", d.tau)] {
                let other = &self.doubles.sectors[aligned.target];
                let moved = data.twisted.class.transport(
                    &d.centralizer,
                    &other.centralizer,
                    aligned.conjugator,
                )?;
                let target = &self.pair_data[aligned.target].twisted.class;
                out.record(&moved == target, || format!("{label} on {:?}", d.rep()));
            }
        }
        Ok(out)
    }

    /// The selected checks; Frobenius only runs when `X` is a point.
    pub fn verify(
        &self,
        ring: &mut GradedAlgebra,
        checks: &[RingCheck],
    ) -> Result<Vec<CheckOutcome>> {
        let mut outcomes = Vec::new();
        for check in checks {
            let outcome = match check {
                RingCheck::Identity => ring.check_identity(),
                RingCheck::Commutativity => ring.check_commutativity(),
                RingCheck::Associativity => ring.check_associativity(),
                RingCheck::Grading => ring.check_grading(),
                RingCheck::Frobenius => {
                    if !self.is_point() {
                        continue;
                    }
                    let eta = self.eta_pairing(ring)?;
                    let mut o = ring.check_frobenius(&eta);
                    o.record(eta.is_symmetric(), || "η is not symmetric".into());
                    o
                }
                RingCheck::MultiProduct => {
                    if ring.kind == RingKind::OtherAssoc {
                        continue;
                    }
                    self.check_multiproduct(ring)?
                }
            };
            ring.verified.insert(outcome.name.clone(), outcome.passed);
            outcomes.push(outcome);
        }
        Ok(outcomes)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingCheck {
    Identity,
    Commutativity,
    Associativity,
    Grading,
    Frobenius,
    MultiProduct,
}

impl RingCheck {
    pub const ALL: [RingCheck; 6] = [
        RingCheck::Identity,
        RingCheck::Commutativity,
        RingCheck::Associativity,
        RingCheck::Grading,
        RingCheck::Frobenius,
        RingCheck::MultiProduct,
    ];
}

/// Class of an element with the conjugator onto its representative.
struct Aligned3 {
    class: usize,
    conjugator: usize,
}

impl Aligned3 {
    fn of(g: &FiniteGroup, x: usize) -> Self {
        let conj = g.conjugacy();
        Aligned3 {
            class: conj.class_of[x],
            conjugator: conj.to_rep[x],
        }
    }
}

fn sparse(
    table: BTreeMap<(usize, usize), BTreeMap<usize, Rational>>,
) -> BTreeMap<(usize, usize), Vec<(usize, Rational)>> {
    table
        .into_iter()
        .filter_map(|(key, terms)| {
            let terms: Vec<(usize, Rational)> =
                terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            (!terms.is_empty()).then_some((key, terms))
        })
        .collect()
}

pub fn chow_ring(g: &Arc<FiniteGroup>, v: &ClassFunction) -> Result<GradedAlgebra> {
    Ok(Orbifold::new(g, v)?.chow_ring())
}

pub fn k_ring(g: &Arc<FiniteGroup>, v: &ClassFunction) -> Result<GradedAlgebra> {
    Orbifold::new(g, v)?.k_ring()
}

pub fn otherassoc_ring(g: &Arc<FiniteGroup>, v: &ClassFunction) -> Result<GradedAlgebra> {
    Ok(Orbifold::new(g, v)?.otherassoc_ring())
}

/// The `V = 0` K ring on `K_G(G)`.
pub fn lusztig_ring(g: &Arc<FiniteGroup>) -> Result<GradedAlgebra> {
    k_ring(g, &ClassFunction::zero(g))
}

/// Class-sum multiplication in the center of `ℚ[G]`: `K_i K_j = Σ_k a_ijk K_k`
/// with `a_ijk = #{(x, y) ∈ C_i × C_j : xy = z_k}`.
pub fn class_sum_constants(g: &FiniteGroup) -> Vec<Vec<Vec<usize>>> {
    let conj = g.conjugacy();
    let k = conj.len();
    let mut a = vec![vec![vec![0; k]; k]; k];
    for (l, &z) in conj.representatives.iter().enumerate() {
        for x in 0..g.order() {
            let y = g.mul(g.inv(x), z);
            a[conj.class_of[x]][conj.class_of[y]][l] += 1;
        }
    }
    a
}
