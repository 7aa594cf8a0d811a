//! Diagonal conjugacy classes: orbits of simultaneous conjugation on tuples.
//!
//! Each orbit is represented by its lexicographically smallest tuple. The
//! conjugator stored for a tuple `t` is `x^-1`, where `x` is the first element
//! in element order with `x rep x^-1 = t`. Both the eager table and lazy
//! resolution use this choice, so their outputs agree.

use std::sync::Arc;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Group orders above this are resolved lazily instead of tabulating `G^l`.
pub const EAGER_ORDER_CAP: usize = 200;

/// A map target together with the conjugator that aligns the image onto the
/// target's stored representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Aligned {
    pub target: usize,
    pub conjugator: usize,
}

#[derive(Debug, Clone)]
pub struct DiagClass {
    pub index: usize,
    pub rep: Vec<usize>,
    pub orbit_size: usize,
    /// `Z(m_1) ∩ ... ∩ Z(m_l)`, sorted.
    pub centralizer: Vec<usize>,
    /// `e_j`: class of `m_j`.
    pub evaluations: Vec<Aligned>,
    /// `μ_i`: class of `(m_1, ..., m_i m_{i+1}, ..., m_l)` among the
    /// `(l-1)`-tuple classes (conjugacy classes when `l = 2`).
    pub multiplications: Vec<Aligned>,
}

enum Lookup {
    Eager { class_of: Vec<u32>, conj: Vec<u32> },
    Lazy,
}

/// All diagonal classes of a fixed length, with tuple resolution.
pub struct TupleClasses {
    group: Arc<FiniteGroup>,
    length: usize,
    reps: Vec<Vec<usize>>,
    lookup: Lookup,
}

impl TupleClasses {
    pub fn new(group: &Arc<FiniteGroup>, length: usize) -> Self {
        Self::with_cap(group, length, EAGER_ORDER_CAP)
    }

    pub fn with_cap(group: &Arc<FiniteGroup>, length: usize, eager_cap: usize) -> Self {
        assert!(length >= 1);
        if group.order() <= eager_cap {
            Self::eager(group, length)
        } else {
            Self::lazy(group, length)
        }
    }

    fn eager(group: &Arc<FiniteGroup>, length: usize) -> Self {
        let n = group.order();
        let total = n.pow(length as u32);
        let mut class_of = vec![u32::MAX; total];
        let mut conj = vec![0u32; total];
        let mut reps = Vec::new();
        let mut t = vec![0usize; length];
        for flat in 0..total {
            if class_of[flat] != u32::MAX {
                continue;
            }
            unflatten(flat, n, &mut t);
            let id = reps.len() as u32;
            for x in 0..n {
                let y = flatten(t.iter().map(|&m| group.conjugate(x, m)), n);
                if class_of[y] == u32::MAX {
                    class_of[y] = id;
                    conj[y] = group.inv(x) as u32;
                }
            }
            reps.push(t.clone());
        }
        TupleClasses {
            group: group.clone(),
            length,
            reps,
            lookup: Lookup::Eager { class_of, conj },
        }
    }

    fn lazy(group: &Arc<FiniteGroup>, length: usize) -> Self {
        let all: Vec<usize> = (0..group.order()).collect();
        let mut reps: Vec<Vec<usize>> = orbit_generators(group, &all, length)
            .into_iter()
            .map(|t| canonical(group, &t))
            .collect();
        reps.sort();
        TupleClasses {
            group: group.clone(),
            length,
            reps,
            lookup: Lookup::Lazy,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, i: usize) -> &[usize] {
        &self.reps[i]
    }

    pub fn reps(&self) -> &[Vec<usize>] {
        &self.reps
    }

    /// Class index of `t` and an `h` with `h t h^-1 = rep`.
    pub fn resolve(&self, t: &[usize]) -> Aligned {
        assert_eq!(t.len(), self.length);
        let g = &self.group;
        match &self.lookup {
            Lookup::Eager { class_of, conj } => {
                let f = flatten(t.iter().copied(), g.order());
                Aligned {
                    target: class_of[f] as usize,
                    conjugator: conj[f] as usize,
                }
            }
            Lookup::Lazy => {
                let rep = canonical(g, t);
                let target = self
                    .reps
                    .binary_search(&rep)
                    .expect("every tuple has a class");
                let x = (0..g.order())
                    .find(|&x| rep.iter().zip(t).all(|(&r, &m)| g.conjugate(x, r) == m))
                    .expect("tuple lies in the orbit of its representative");
                Aligned {
                    target,
                    conjugator: g.inv(x),
                }
            }
        }
    }
}

fn flatten(t: impl Iterator<Item = usize>, n: usize) -> usize {
    t.fold(0, |acc, m| acc * n + m)
}

fn unflatten(mut flat: usize, n: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = flat % n;
        flat /= n;
    }
}

/// Lexicographically smallest tuple in the simultaneous-conjugation orbit.
pub(crate) fn canonical(g: &FiniteGroup, t: &[usize]) -> Vec<usize> {
    (0..g.order())
        .map(|x| t.iter().map(|&m| g.conjugate(x, m)).collect::<Vec<_>>())
        .min()
        .expect("group is non-empty")
}

/// One tuple per orbit of `acting` (a subgroup, as an element list) on
/// `G^length`: the smallest element `a` of each orbit on the first slot,
/// followed by the orbits of the stabilizer of `a` on the remaining slots.
fn orbit_generators(g: &FiniteGroup, acting: &[usize], length: usize) -> Vec<Vec<usize>> {
    if length == 0 {
        return vec![Vec::new()];
    }
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        for &x in acting {
            seen[g.conjugate(x, a)] = true;
        }
        let stabilizer: Vec<usize> = acting
            .iter()
            .copied()
            .filter(|&x| g.commute(x, a))
            .collect();
        for rest in orbit_generators(g, &stabilizer, length - 1) {
            let mut t = vec![a];
            t.extend(rest);
            out.push(t);
        }
    }
    out
}

/// Diagonal classes of length 2 or 3 with evaluation and multiplication
/// targets aligned.
pub fn diag_classes(g: &Arc<FiniteGroup>, length: usize) -> Result<Vec<DiagClass>> {
    match length {
        2 => {
            let pairs = TupleClasses::new(g, 2);
            Ok(build_diag(g, &pairs, None))
        }
        3 => {
            let pairs = TupleClasses::new(g, 2);
            let triples = TupleClasses::new(g, 3);
            Ok(build_diag(g, &triples, Some(&pairs)))
        }
        _ => Err(Error::Invalid(format!(
            "diagonal classes are enumerated for lengths 2 and 3, not {length}"
        ))),
    }
}

pub(crate) fn build_diag(
    g: &Arc<FiniteGroup>,
    classes: &TupleClasses,
    shorter: Option<&TupleClasses>,
) -> Vec<DiagClass> {
    let conj = g.conjugacy();
    classes
        .reps()
        .iter()
        .enumerate()
        .map(|(index, rep)| {
            let centralizer = g.tuple_centralizer(rep);
            let evaluations = rep
                .iter()
                .map(|&m| Aligned {
                    target: conj.class_of[m],
                    conjugator: conj.to_rep[m],
                })
                .collect();
            let multiplications = (0..rep.len() - 1)
                .map(|i| {
                    let mut t = rep[..i].to_vec();
                    t.push(g.mul(rep[i], rep[i + 1]));
                    t.extend_from_slice(&rep[i + 2..]);
                    if t.len() == 1 {
                        Aligned {
                            target: conj.class_of[t[0]],
                            conjugator: conj.to_rep[t[0]],
                        }
                    } else {
                        shorter
                            .expect("shorter tuple classes supplied for length > 2")
                            .resolve(&t)
                    }
                })
                .collect();
            DiagClass {
                index,
                orbit_size: g.order() / centralizer.len(),
                rep: rep.clone(),
                centralizer,
                evaluations,
                multiplications,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    fn conj_tuple(g: &FiniteGroup, h: usize, t: &[usize]) -> Vec<usize> {
        t.iter().map(|&m| g.conjugate(h, m)).collect()
    }

    #[test]
    fn pair_class_counts() {
        assert_eq!(
            diag_classes(&catalog("klein4").unwrap(), 2).unwrap().len(),
            16
        );
        assert_eq!(
            diag_classes(&catalog("symmetric(3)").unwrap(), 2)
                .unwrap()
                .len(),
            11
        );
        // Burnside: average number of fixed pairs
        let q8 = catalog("quaternion8").unwrap();
        let pairs = TupleClasses::new(&q8, 2);
        let burnside: usize = (0..8)
            .map(|x| {
                (0..64)
                    .filter(|&f| {
                        let (a, b) = (f / 8, f % 8);
                        q8.conjugate(x, a) == a && q8.conjugate(x, b) == b
                    })
                    .count()
            })
            .sum::<usize>()
            / 8;
        assert_eq!(pairs.len(), burnside);
    }

    #[test]
    fn alignment_and_orbits() {
        for name in ["symmetric(3)", "quaternion8", "dihedral(4)"] {
            let g = catalog(name).unwrap();
            for class in diag_classes(&g, 3).unwrap() {
                assert_eq!(class.orbit_size * class.centralizer.len(), g.order());
                for (j, e) in class.evaluations.iter().enumerate() {
                    let rep = g.conjugacy().representatives[e.target];
                    assert_eq!(g.conjugate(e.conjugator, class.rep[j]), rep);
                }
            }
            let pairs = TupleClasses::new(&g, 2);
            for class in diag_classes(&g, 3).unwrap() {
                let m = &class.rep;
                let a = class.multiplications[0];
                let image = vec![g.mul(m[0], m[1]), m[2]];
                assert_eq!(conj_tuple(&g, a.conjugator, &image), pairs.rep(a.target));
                let b = class.multiplications[1];
                let image = vec![m[0], g.mul(m[1], m[2])];
                assert_eq!(conj_tuple(&g, b.conjugator, &image), pairs.rep(b.target));
            }
        }
    }

    #[test]
    fn identity_pairs_multiply_to_their_class() {
        let g = catalog("symmetric(4)").unwrap();
        let pairs = TupleClasses::new(&g, 2);
        for m in 0..g.order() {
            let a = pairs.resolve(&[0, m]);
            let class = &diag_classes(&g, 2).unwrap()[a.target];
            assert_eq!(class.multiplications[0].target, g.class_of(m));
        }
    }

    #[test]
    fn swapped_products_are_conjugate() {
        let g = catalog("alternating(4)").unwrap();
        for c in diag_classes(&g, 2).unwrap() {
            let ab = g.mul(c.rep[0], c.rep[1]);
            let ba = g.mul(c.rep[1], c.rep[0]);
            assert_eq!(g.class_of(ab), g.class_of(ba));
        }
    }

    #[test]
    fn lazy_matches_eager() {
        for name in ["symmetric(3)", "quaternion8", "alternating(4)"] {
            let g = catalog(name).unwrap();
            for l in 1..=3 {
                let eager = TupleClasses::with_cap(&g, l, usize::MAX);
                let lazy = TupleClasses::with_cap(&g, l, 0);
                assert_eq!(eager.reps(), lazy.reps(), "{name} l={l}");
                let n = g.order();
                let mut t = vec![0; l];
                for f in (0..n.pow(l as u32)).step_by(7) {
                    unflatten(f, n, &mut t);
                    assert_eq!(eager.resolve(&t), lazy.resolve(&t));
                }
            }
        }
    }
}
