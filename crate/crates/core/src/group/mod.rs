//! Finite groups as multiplication tables, with conjugacy data computed at
//! construction.
//!
//! Permutations compose right to left: `(p * q)(x) = p(q(x))`. The identity
//! is always element 0, and element order is deterministic for a given input.

mod catalog;
pub(crate) mod diag;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, Weak};

pub use catalog::{catalog, Family};
pub use diag::{diag_classes, Aligned, DiagClass, TupleClasses, EAGER_ORDER_CAP};

use crate::error::{Error, Result};

/// Default cap on the order of a group produced by permutation closure.
pub const DEFAULT_CLOSURE_CAP: usize = 20_000;

#[derive(Debug, Clone)]
pub struct ConjugacyData {
    /// Element indices of each class, sorted ascending.
    pub classes: Vec<Vec<usize>>,
    /// Smallest element of each class.
    pub representatives: Vec<usize>,
    /// Centralizer of each representative, sorted.
    pub centralizers: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// For every element `g`, an `h` with `h g h^-1 = representative(class_of(g))`.
    pub to_rep: Vec<usize>,
    /// `power_map[c][j]` is the class of `rep_c^j` for `0 <= j < exponent`.
    pub power_map: Vec<Vec<usize>>,
    /// Class of inverses.
    pub inverse_class: Vec<usize>,
}

impl ConjugacyData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }
}

pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
    element_orders: Vec<usize>,
    exponent: usize,
    labels: Vec<String>,
    generators: Vec<(String, usize)>,
    permutations: Option<(usize, Vec<Vec<usize>>)>,
    family: Option<Family>,
    conj: ConjugacyData,
    subgroups: Mutex<HashMap<Vec<usize>, Arc<Subgroup>>>,
    pub(crate) character_values: OnceLock<Vec<Vec<crate::cyclotomic::Cyclotomic>>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("classes", &self.conj.len())
            .field("family", &self.family)
            .finish()
    }
}

/// Builder-side description of a group before conjugacy data is computed.
struct RawGroup {
    table: Vec<u32>,
    order: usize,
    labels: Vec<String>,
    generators: Vec<(String, usize)>,
    permutations: Option<(usize, Vec<Vec<usize>>)>,
    family: Option<Family>,
}

/// How much of the associativity check to perform on table input.
const FULL_ASSOCIATIVITY_LIMIT: usize = 512;

impl FiniteGroup {
    /// Builds a group from a Cayley table. Element 0 must be the identity.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Arc<Self>> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Invalid("empty multiplication table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(Error::Invalid("multiplication table is not square".into()));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::Invalid(format!("table entry {x} out of range")));
                }
                flat.push(x as u32);
            }
        }
        let labels = (0..n).map(|i| format!("#{i}")).collect();
        Self::build(RawGroup {
            table: flat,
            order: n,
            labels,
            generators: Vec::new(),
            permutations: None,
            family: None,
        })
    }

    /// Closure of a set of permutations of `{0, ..., degree-1}` (images listed
    /// 0-based). Elements are ordered breadth-first by word length, identity
    /// first.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Arc<Self>> {
        Self::from_permutations_capped(degree, generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_permutations_capped(
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Arc<Self>> {
        let names = (1..=generators.len())
            .map(|i| format!("s{i}"))
            .collect::<Vec<_>>();
        Self::from_named_permutations(degree, generators, &names, cap, None)
    }

    pub(crate) fn from_named_permutations(
        degree: usize,
        generators: &[Vec<usize>],
        names: &[String],
        cap: usize,
        family: Option<Family>,
    ) -> Result<Arc<Self>> {
        for g in generators {
            validate_permutation(degree, g)?;
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0;
        while head < elements.len() {
            let e = elements[head].clone();
            for g in generators {
                let p = compose(&e, g);
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(Error::SizeCap {
                            what: "permutation closure",
                            size: elements.len() + 1,
                            cap,
                        });
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            head += 1;
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&compose(a, b)] as u32);
            }
        }
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        let gens = names
            .iter()
            .zip(generators)
            .map(|(name, g)| (name.clone(), index[g]))
            .collect();
        Self::build(RawGroup {
            table,
            order: n,
            labels,
            generators: gens,
            permutations: Some((degree, elements)),
            family,
        })
    }

    pub(crate) fn from_raw_table(
        table: Vec<u32>,
        labels: Vec<String>,
        generators: Vec<(String, usize)>,
        family: Option<Family>,
    ) -> Result<Arc<Self>> {
        let order = labels.len();
        Self::build(RawGroup {
            table,
            order,
            labels,
            generators,
            permutations: None,
            family,
        })
    }

    fn build(raw: RawGroup) -> Result<Arc<Self>> {
        let n = raw.order;
        let t = &raw.table;
        let mul = |a: usize, b: usize| t[a * n + b] as usize;
        // Latin square
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[mul(a, b)] = true;
                col[mul(b, a)] = true;
            }
            if row.iter().any(|x| !x) || col.iter().any(|x| !x) {
                return Err(Error::Invalid(format!(
                    "multiplication table is not a Latin square at element {a}"
                )));
            }
        }
        if (0..n).any(|a| mul(0, a) != a || mul(a, 0) != a) {
            return Err(Error::Invalid("element 0 is not the identity".into()));
        }
        let check_triple = |a: usize, b: usize, c: usize| mul(mul(a, b), c) == mul(a, mul(b, c));
        let associative = if n <= FULL_ASSOCIATIVITY_LIMIT {
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| check_triple(a, b, c))))
        } else {
            // deterministic spot check
            let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            (0..20_000).all(|_| {
                let (a, b, c) = (next(), next(), next());
                check_triple(a, b, c)
            })
        };
        if !associative {
            return Err(Error::Invalid(
                "multiplication table is not associative".into(),
            ));
        }
        let inverse: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| mul(a, b) == 0).expect("Latin square"))
            .collect();
        let element_orders: Vec<usize> = (0..n)
            .map(|a| {
                let mut k = 1;
                let mut x = a;
                while x != 0 {
                    x = mul(x, a);
                    k += 1;
                }
                k
            })
            .collect();
        let exponent = element_orders
            .iter()
            .fold(1usize, |acc, &o| num_integer::lcm(acc, o));
        let conj = compute_conjugacy(n, t, &inverse, exponent);
        Ok(Arc::new(FiniteGroup {
            order: n,
            table: raw.table,
            inverse,
            element_orders,
            exponent,
            labels: raw.labels,
            generators: raw.generators,
            permutations: raw.permutations,
            family: raw.family,
            conj,
            subgroups: Mutex::new(HashMap::new()),
            character_values: OnceLock::new(),
        }))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `h a h^-1`.
    #[inline]
    pub fn conjugate(&self, h: usize, a: usize) -> usize {
        self.mul(self.mul(h, a), self.inverse[h])
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let o = self.element_orders[a] as i64;
        let e = e.rem_euclid(o);
        let mut x = 0;
        for _ in 0..e {
            x = self.mul(x, a);
        }
        x
    }

    pub fn product(&self, elems: &[usize]) -> usize {
        elems.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a]
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    pub fn family(&self) -> Option<&Family> {
        self.family.as_ref()
    }

    pub fn permutation(&self, a: usize) -> Option<&[usize]> {
        self.permutations.as_ref().map(|(_, p)| p[a].as_slice())
    }

    pub fn degree(&self) -> Option<usize> {
        self.permutations.as_ref().map(|(d, _)| *d)
    }

    pub fn conjugacy(&self) -> &ConjugacyData {
        &self.conj
    }

    pub fn num_classes(&self) -> usize {
        self.conj.len()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.conj.class_of[a]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// `Z_G(m_1) ∩ ... ∩ Z_G(m_l)` as a sorted element list.
    pub fn tuple_centralizer(&self, tuple: &[usize]) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| tuple.iter().all(|&m| self.commute(z, m)))
            .collect()
    }

    /// The subgroup generated by the tuple, sorted.
    pub fn generated_subgroup(&self, tuple: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut elems = vec![0];
        let mut head = 0;
        while head < elems.len() {
            let e = elems[head];
            for &g in tuple {
                let p = self.mul(e, g);
                if !seen[p] {
                    seen[p] = true;
                    elems.push(p);
                }
            }
            head += 1;
        }
        elems.sort_unstable();
        elems
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &e in elems {
            if e >= self.order {
                return false;
            }
            member[e] = true;
        }
        member[0]
            && elems
                .iter()
                .all(|&a| member[self.inv(a)] && elems.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// The subgroup on the given element set, cached by element set.
    pub fn subgroup(self: &Arc<Self>, elems: &[usize]) -> Result<Arc<Subgroup>> {
        let mut elems = elems.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.len() == self.order {
            return Ok(Arc::new(Subgroup::whole(self.clone())));
        }
        if let Some(s) = self.subgroups.lock().unwrap().get(&elems) {
            return Ok(s.clone());
        }
        if !self.is_subgroup(&elems) {
            return Err(Error::Invalid("element set is not a subgroup".into()));
        }
        let mut position = vec![u32::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            position[e] = i as u32;
        }
        let k = elems.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &elems {
            for &b in &elems {
                table.push(position[self.mul(a, b)]);
            }
        }
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        let group = Self::build(RawGroup {
            table,
            order: k,
            labels,
            generators: Vec::new(),
            permutations: self
                .permutations
                .as_ref()
                .map(|(d, p)| (*d, elems.iter().map(|&e| p[e].clone()).collect())),
            family: None,
        })?;
        let sub = Arc::new(Subgroup {
            elements: elems.clone(),
            group,
            ambient: Arc::downgrade(self),
            position,
        });
        self.subgroups.lock().unwrap().insert(elems, sub.clone());
        Ok(sub)
    }

    pub fn whole(self: &Arc<Self>) -> Arc<Subgroup> {
        Arc::new(Subgroup::whole(self.clone()))
    }

    pub fn centralizer_subgroup(self: &Arc<Self>, tuple: &[usize]) -> Arc<Subgroup> {
        self.subgroup(&self.tuple_centralizer(tuple))
            .expect("centralizers are subgroups")
    }

    /// Parses an element reference: a label, `#index`, a word in the named
    /// generators such as `a^2*x`, `1`/`e` for the identity, or cycle
    /// notation like `(1 2 3)(4 5)` (points 1-based) for permutation groups.
    pub fn parse_element(&self, s: &str) -> Result<usize> {
        let s = s.trim();
        if let Some(i) = self.labels.iter().position(|l| l == s) {
            return Ok(i);
        }
        if let Some(rest) = s.strip_prefix('#') {
            let i: usize = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad element index `{s}`")))?;
            if i >= self.order {
                return Err(Error::Parse(format!("element index {i} out of range")));
            }
            return Ok(i);
        }
        if s.starts_with('(') {
            return self.parse_cycles(s);
        }
        if s == "1" || s == "e" || s == "id" {
            return Ok(0);
        }
        let mut acc = 0;
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            let base = if name == "1" || name == "e" {
                0
            } else if let Some(i) = self.labels.iter().position(|l| l == name) {
                i
            } else if let Some((_, g)) = self.generators.iter().find(|(n, _)| n == name) {
                *g
            } else {
                return Err(Error::Parse(format!(
                    "unknown element or generator `{name}`"
                )));
            };
            acc = self.mul(acc, self.pow(base, exp));
        }
        Ok(acc)
    }

    fn parse_cycles(&self, s: &str) -> Result<usize> {
        let Some((degree, perms)) = &self.permutations else {
            return Err(Error::Parse(format!(
                "cycle notation `{s}` needs a permutation group"
            )));
        };
        let mut perm: Vec<usize> = (0..*degree).collect();
        let body = s.replace(')', ")\n");
        for cyc in body.lines().filter(|c| !c.trim().is_empty()) {
            let inner = cyc
                .trim()
                .strip_prefix('(')
                .and_then(|c| c.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("malformed cycle in `{s}`")))?;
            let points: Vec<usize> = if inner.contains(' ') || inner.contains(',') {
                inner
                    .split(|c: char| c == ' ' || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Parse(format!("malformed cycle in `{s}`")))?
            } else {
                inner
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::Parse(format!("malformed cycle in `{s}`")))?
            };
            if points.iter().any(|&p| p == 0 || p > *degree) {
                return Err(Error::Parse(format!("cycle point out of range in `{s}`")));
            }
            let mut cycle_perm: Vec<usize> = (0..*degree).collect();
            for w in 0..points.len() {
                cycle_perm[points[w] - 1] = points[(w + 1) % points.len()] - 1;
            }
            // cycles written left to right compose right to left
            perm = compose(&perm, &cycle_perm);
        }
        perms
            .iter()
            .position(|p| *p == perm)
            .ok_or_else(|| Error::Parse(format!("permutation `{s}` is not in the group")))
    }
}

/// A subgroup of a parent group, itself carried as a group with local
/// indices. Local index `i` corresponds to parent element `elements[i]`.
#[derive(Debug)]
pub struct Subgroup {
    pub elements: Vec<usize>,
    pub group: Arc<FiniteGroup>,
    ambient: Weak<FiniteGroup>,
    position: Vec<u32>,
}

impl Subgroup {
    fn whole(g: Arc<FiniteGroup>) -> Self {
        let n = g.order();
        Subgroup {
            elements: (0..n).collect(),
            position: (0..n as u32).collect(),
            ambient: Arc::downgrade(&g),
            group: g,
        }
    }

    /// The group this is a subgroup of.
    pub fn ambient(&self) -> Arc<FiniteGroup> {
        self.ambient
            .upgrade()
            .expect("ambient group outlives its subgroups")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn local(&self, parent: usize) -> Option<usize> {
        match self.position.get(parent) {
            Some(&p) if p != u32::MAX => Some(p as usize),
            _ => None,
        }
    }

    pub fn parent(&self, local: usize) -> usize {
        self.elements[local]
    }

    pub fn contains(&self, parent: usize) -> bool {
        self.local(parent).is_some()
    }

    /// Local class index of a parent element lying in the subgroup.
    pub fn class_of_parent(&self, parent: usize) -> Option<usize> {
        self.local(parent).map(|l| self.group.class_of(l))
    }

    /// Parent index of each local class representative.
    pub fn class_representatives(&self) -> Vec<usize> {
        self.group
            .conjugacy()
            .representatives
            .iter()
            .map(|&r| self.elements[r])
            .collect()
    }
}

fn compute_conjugacy(n: usize, t: &[u32], inverse: &[usize], exponent: usize) -> ConjugacyData {
    let mul = |a: usize, b: usize| t[a * n + b] as usize;
    let mut assigned = vec![usize::MAX; n];
    let mut to_rep = vec![0usize; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for r in 0..n {
        if assigned[r] != usize::MAX {
            continue;
        }
        let id = raw.len();
        let mut members = Vec::new();
        for x in 0..n {
            let y = mul(mul(x, r), inverse[x]);
            if assigned[y] == usize::MAX {
                assigned[y] = id;
                to_rep[y] = inverse[x];
                members.push(y);
            }
        }
        members.sort_unstable();
        raw.push(members);
    }
    // identity first, then by size, then by representative
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&c| (raw[c].len(), raw[c][0]));
    let mut relabel = vec![0; raw.len()];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new;
    }
    let classes: Vec<Vec<usize>> = order.iter().map(|&c| raw[c].clone()).collect();
    let class_of: Vec<usize> = assigned.iter().map(|&c| relabel[c]).collect();
    let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let centralizers = representatives
        .iter()
        .map(|&r| (0..n).filter(|&z| mul(z, r) == mul(r, z)).collect())
        .collect();
    let power_map = representatives
        .iter()
        .map(|&r| {
            let mut x = 0;
            let mut row = Vec::with_capacity(exponent);
            for _ in 0..exponent {
                row.push(class_of[x]);
                x = mul(x, r);
            }
            row
        })
        .collect();
    let inverse_class = representatives
        .iter()
        .map(|&r| class_of[inverse[r]])
        .collect();
    ConjugacyData {
        classes,
        representatives,
        centralizers,
        class_of,
        to_rep,
        power_map,
        inverse_class,
    }
}

/// `(p * q)(x) = p(q(x))`.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

fn validate_permutation(degree: usize, p: &[usize]) -> Result<()> {
    if p.len() != degree {
        return Err(Error::Invalid(format!(
            "permutation has {} images, degree is {degree}",
            p.len()
        )));
    }
    let mut seen = vec![false; degree];
    for &x in p {
        if x >= degree || seen[x] {
            return Err(Error::Invalid(format!("{p:?} is not a permutation")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Cycle notation with 1-based points, `()` for the identity.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    let sep = if p.len() > 9 { " " } else { "" };
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.join(sep));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    #[test]
    fn closure_orders() {
        let z2 = FiniteGroup::from_permutations(2, &[vec![1, 0]]).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(s3().order(), 6);
        let triv = FiniteGroup::from_permutations(3, &[]).unwrap();
        assert_eq!(triv.order(), 1);
    }

    #[test]
    fn closure_cap() {
        let gens = vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]];
        let err = FiniteGroup::from_permutations_capped(5, &gens, 100).unwrap_err();
        assert!(matches!(err, Error::SizeCap { cap: 100, .. }));
    }

    #[test]
    fn composition_is_right_to_left() {
        let g = s3();
        let a = g.parse_element("(1 2)").unwrap();
        let b = g.parse_element("(2 3)").unwrap();
        // (1 2)(2 3): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
        assert_eq!(g.label(g.mul(a, b)), "(123)");
        assert_eq!(g.parse_element("(12)(23)").unwrap(), g.mul(a, b));
    }

    #[test]
    fn conjugacy_of_s3() {
        let g = s3();
        let c = g.conjugacy();
        assert_eq!(c.len(), 3);
        let sizes: Vec<_> = (0..3).map(|i| c.class_size(i)).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        let cent: Vec<_> = c.centralizers.iter().map(|z| z.len()).collect();
        assert_eq!(cent, vec![6, 3, 2]);
        for (i, cl) in c.classes.iter().enumerate() {
            for &x in cl {
                assert_eq!(g.conjugate(c.to_rep[x], x), c.representatives[i]);
            }
        }
    }

    #[test]
    fn table_validation() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]).is_err());
        let z2 = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.exponent(), 2);
    }

    #[test]
    fn tuple_centralizers_and_generation() {
        let g = s3();
        let t12 = g.parse_element("(12)").unwrap();
        let t13 = g.parse_element("(13)").unwrap();
        let t23 = g.parse_element("(23)").unwrap();
        let c123 = g.parse_element("(123)").unwrap();
        assert_eq!(g.tuple_centralizer(&[0]).len(), 6);
        assert_eq!(g.tuple_centralizer(&[t12, t13]), vec![0]);
        assert_eq!(g.generated_subgroup(&[0]), vec![0]);
        assert_eq!(g.generated_subgroup(&[c123]).len(), 3);
        assert_eq!(g.generated_subgroup(&[t12, t23]).len(), 6);
    }

    #[test]
    fn subgroup_embedding() {
        let g = s3();
        let c123 = g.parse_element("(123)").unwrap();
        let h = g.subgroup(&g.generated_subgroup(&[c123])).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.group.num_classes(), 3);
        assert!(h.contains(c123));
        assert!(!h.contains(g.parse_element("(12)").unwrap()));
        assert!(g.subgroup(&[0, 1]).is_err() || g.is_subgroup(&[0, 1]));
    }
}
