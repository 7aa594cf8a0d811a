//! Sectors of the inertia and double inertia of `[X/G]` for `X` a point or a
//! linear representation: every conjugacy class and every diagonal class
//! contributes, since the origin is fixed by everything.

use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::group::diag::build_diag;
use crate::group::{Aligned, DiagClass, FiniteGroup, Subgroup, TupleClasses, EAGER_ORDER_CAP};

#[derive(Debug, Clone)]
pub struct Sector {
    pub index: usize,
    pub rep: usize,
    pub class_size: usize,
    pub centralizer: Arc<Subgroup>,
    /// Sector of the inverse class.
    pub inverse: usize,
}

#[derive(Debug, Clone)]
pub struct SectorIndex {
    pub group: Arc<FiniteGroup>,
    pub sectors: Vec<Sector>,
}

impl SectorIndex {
    pub fn len(&self) -> usize {
        self.sectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn sigma(&self, s: usize) -> usize {
        self.sectors[s].inverse
    }
}

/// One sector per conjugacy class, in class order.
pub fn build_sectors(g: &Arc<FiniteGroup>) -> SectorIndex {
    let conj = g.conjugacy();
    let sectors = (0..conj.len())
        .map(|c| {
            let rep = conj.representatives[c];
            Sector {
                index: c,
                rep,
                class_size: conj.class_size(c),
                centralizer: g
                    .subgroup(&conj.centralizers[c])
                    .expect("centralizers are subgroups"),
                inverse: conj.inverse_class[c],
            }
        })
        .collect();
    SectorIndex {
        group: g.clone(),
        sectors,
    }
}

#[derive(Debug, Clone)]
pub struct DoubleSector {
    pub class: DiagClass,
    pub centralizer: Arc<Subgroup>,
    /// `i(m_1, m_2) = (m_2, m_1)`.
    pub swap: Aligned,
    /// `τ(m_1, m_2) = (m_2, (m_1 m_2)^-1)`.
    pub tau: Aligned,
}

impl DoubleSector {
    pub fn rep(&self) -> (usize, usize) {
        (self.class.rep[0], self.class.rep[1])
    }

    pub fn e1(&self) -> Aligned {
        self.class.evaluations[0]
    }

    pub fn e2(&self) -> Aligned {
        self.class.evaluations[1]
    }

    pub fn mu(&self) -> Aligned {
        self.class.multiplications[0]
    }
}

pub struct DoubleSectorIndex {
    pub group: Arc<FiniteGroup>,
    /// Orders above this resolve tuples lazily.
    pub eager_cap: usize,
    pub pairs: TupleClasses,
    pub sectors: Vec<DoubleSector>,
}

impl DoubleSectorIndex {
    pub fn len(&self) -> usize {
        self.sectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn resolve(&self, a: usize, b: usize) -> Aligned {
        self.pairs.resolve(&[a, b])
    }
}

pub fn build_double_sectors(g: &Arc<FiniteGroup>) -> DoubleSectorIndex {
    build_double_sectors_with_cap(g, EAGER_ORDER_CAP)
}

pub fn build_double_sectors_with_cap(g: &Arc<FiniteGroup>, eager_cap: usize) -> DoubleSectorIndex {
    let pairs = TupleClasses::with_cap(g, 2, eager_cap);
    let classes = build_diag(g, &pairs, None);
    let sectors = classes
        .into_iter()
        .map(|class| {
            let (a, b) = (class.rep[0], class.rep[1]);
            let centralizer = g
                .subgroup(&class.centralizer)
                .expect("tuple centralizers are subgroups");
            let swap = pairs.resolve(&[b, a]);
            let tau = pairs.resolve(&[b, g.inv(g.mul(a, b))]);
            DoubleSector {
                class,
                centralizer,
                swap,
                tau,
            }
        })
        .collect();
    DoubleSectorIndex {
        group: g.clone(),
        eager_cap,
        pairs,
        sectors,
    }
}

#[derive(Debug, Clone)]
pub struct TripleSector {
    pub class: DiagClass,
    pub centralizer: Arc<Subgroup>,
    /// Pair classes of `(m_1, m_2)`, `(m_2, m_3)` and `(m_1, m_3)`.
    pub pair_evaluations: [Aligned; 3],
}

impl TripleSector {
    /// `μ_{12,3}`: the pair class of `(m_1 m_2, m_3)`.
    pub fn mu_12_3(&self) -> Aligned {
        self.class.multiplications[0]
    }

    /// `μ_{1,23}`: the pair class of `(m_1, m_2 m_3)`.
    pub fn mu_1_23(&self) -> Aligned {
        self.class.multiplications[1]
    }
}

/// All length-3 classes with their aligned maps into sectors and double
/// sectors.
pub fn triple_sectors(
    g: &Arc<FiniteGroup>,
    doubles: &DoubleSectorIndex,
) -> Result<Vec<TripleSector>> {
    let triples = TupleClasses::with_cap(g, 3, doubles.eager_cap);
    Ok(build_diag(g, &triples, Some(&doubles.pairs))
        .into_iter()
        .map(|class| {
            let m = class.rep.clone();
            let pair_evaluations = [
                doubles.pairs.resolve(&[m[0], m[1]]),
                doubles.pairs.resolve(&[m[1], m[2]]),
                doubles.pairs.resolve(&[m[0], m[2]]),
            ];
            let centralizer = g
                .subgroup(&class.centralizer)
                .expect("tuple centralizers are subgroups");
            TripleSector {
                class,
                centralizer,
                pair_evaluations,
            }
        })
        .collect())
}

/// Sector listing for JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct SectorJson {
    pub index: usize,
    pub representative: usize,
    pub label: String,
    pub class_size: usize,
    pub centralizer_order: usize,
    pub inverse: usize,
}

impl SectorIndex {
    pub fn to_json(&self) -> Vec<SectorJson> {
        self.sectors
            .iter()
            .map(|s| SectorJson {
                index: s.index,
                representative: s.rep,
                label: self.group.label(s.rep).to_string(),
                class_size: s.class_size,
                centralizer_order: s.centralizer.order(),
                inverse: s.inverse,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    #[test]
    fn sector_counts() {
        assert_eq!(build_sectors(&catalog("cyclic(1)").unwrap()).len(), 1);
        assert_eq!(build_sectors(&catalog("symmetric(3)").unwrap()).len(), 3);
        let q8 = build_sectors(&catalog("quaternion8").unwrap());
        assert_eq!(q8.len(), 5);
        for s in 0..q8.len() {
            assert_eq!(q8.sigma(q8.sigma(s)), s);
        }
    }

    #[test]
    fn klein_double_sectors() {
        let d = build_double_sectors(&catalog("klein4").unwrap());
        assert_eq!(d.len(), 16);
        let fixed = d
            .sectors
            .iter()
            .filter(|s| s.swap.target == s.class.index)
            .count();
        assert_eq!(fixed, 4);
    }

    #[test]
    fn swap_and_tau_laws() {
        for name in [
            "symmetric(3)",
            "quaternion8",
            "alternating(4)",
            "dihedral(4)",
        ] {
            let g = catalog(name).unwrap();
            let d = build_double_sectors(&g);
            for s in &d.sectors {
                let i = &d.sectors[s.swap.target];
                assert_eq!(d.sectors[i.swap.target].class.index, s.class.index);
                assert_eq!(i.e1().target, s.e2().target);
                assert_eq!(i.mu().target, s.mu().target);
                let t1 = &d.sectors[s.tau.target];
                let t2 = &d.sectors[t1.tau.target];
                assert_eq!(t2.tau.target, s.class.index);
                // e_2 = e_1 ∘ τ
                assert_eq!(t1.e1().target, s.e2().target);
                // alignment conjugators land on the stored representatives
                let (a, b) = s.rep();
                let h = s.swap.conjugator;
                assert_eq!((g.conjugate(h, b), g.conjugate(h, a)), i.rep());
            }
        }
        let s3 = catalog("symmetric(3)").unwrap();
        assert_eq!(build_double_sectors(&s3).len(), 11);
    }

    #[test]
    fn triple_maps_agree() {
        let g = catalog("symmetric(3)").unwrap();
        let d = build_double_sectors(&g);
        let triples = triple_sectors(&g, &d).unwrap();
        // (216 + 3 * 8 + 2 * 27) / 6 orbits on triples
        assert_eq!(triples.len(), 49);
        for t in &triples {
            let m = &t.class.rep;
            // both association paths end in the class of m1 m2 m3
            let p = g.product(m);
            assert_eq!(d.sectors[t.mu_12_3().target].mu().target, g.class_of(p));
            assert_eq!(d.sectors[t.mu_1_23().target].mu().target, g.class_of(p));
        }
        let id = triples
            .iter()
            .find(|t| t.class.rep == vec![0, 0, 0])
            .unwrap();
        assert!(id.class.evaluations.iter().all(|e| e.target == 0));

        let k = catalog("klein4").unwrap();
        let dk = build_double_sectors(&k);
        for t in triple_sectors(&k, &dk).unwrap() {
            let m = &t.class.rep;
            assert_eq!(
                dk.sectors[t.mu_12_3().target].rep(),
                (k.mul(m[0], m[1]), m[2])
            );
        }
    }

    #[test]
    fn lazy_resolution_matches_eager() {
        for name in ["symmetric(3)", "quaternion8", "dihedral(5)"] {
            let g = catalog(name).unwrap();
            let eager = build_double_sectors(&g);
            let lazy = build_double_sectors_with_cap(&g, 0);
            assert_eq!(eager.len(), lazy.len());
            let mut map = vec![None; eager.len()];
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let e = eager.resolve(a, b);
                    let l = lazy.resolve(a, b);
                    let h = l.conjugator;
                    assert_eq!(
                        (g.conjugate(h, a), g.conjugate(h, b)),
                        lazy.sectors[l.target].rep()
                    );
                    // the two indexings induce the same partition
                    assert_eq!(*map[e.target].get_or_insert(l.target), l.target);
                }
            }
        }
    }

    #[test]
    fn automorphism_relabeling() {
        // swapping the generators of klein4 permutes sectors and double
        // sectors, preserving orbit sizes and product targets
        let g = catalog("klein4").unwrap();
        let phi = |x: usize| [0, 2, 1, 3][x];
        let d = build_double_sectors(&g);
        let mut images: Vec<usize> = d
            .sectors
            .iter()
            .map(|s| {
                let (a, b) = s.rep();
                let img = d.resolve(phi(a), phi(b));
                let t = &d.sectors[img.target];
                assert_eq!(t.class.orbit_size, s.class.orbit_size);
                assert_eq!(t.mu().target, g.class_of(phi(g.mul(a, b))));
                img.target
            })
            .collect();
        images.sort();
        assert_eq!(images, (0..16).collect::<Vec<_>>());

        let s3 = catalog("symmetric(3)").unwrap();
        let t = s3.parse_element("(1 2)").unwrap();
        let d = build_double_sectors(&s3);
        let mut images: Vec<usize> = d
            .sectors
            .iter()
            .map(|s| {
                let (a, b) = s.rep();
                d.resolve(s3.conjugate(t, a), s3.conjugate(t, b)).target
            })
            .collect();
        images.sort();
        assert_eq!(images, (0..d.len()).collect::<Vec<_>>());
    }
}
