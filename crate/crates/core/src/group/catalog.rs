//! Named groups. Table-built families index their elements by normal form:
//! `g^k` is `k` in `cyclic(n)`, `r^a s^b` is `a + n b` in `dihedral(n)`, and
//! `a^k x^b` is `k + 2n b` in `binary_dihedral(n)`.

use std::sync::Arc;

use super::{FiniteGroup, DEFAULT_CLOSURE_CAP};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic(usize),
    /// Order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    /// Order `4n`; `a` of order `2n`, `x^2 = a^n`, `x a x^-1 = a^-1`.
    BinaryDihedral(usize),
    Quaternion8,
    Klein4,
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::Cyclic(n) => format!("cyclic({n})"),
            Family::Dihedral(n) => format!("dihedral({n})"),
            Family::Symmetric(n) => format!("symmetric({n})"),
            Family::Alternating(n) => format!("alternating({n})"),
            Family::BinaryDihedral(n) => format!("binary_dihedral({n})"),
            Family::Quaternion8 => "quaternion8".into(),
            Family::Klein4 => "klein4".into(),
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = compact.to_ascii_lowercase();
        let unknown = || Error::UnknownCatalog(name.to_string());
        match lower.as_str() {
            "quaternion8" | "q8" => return Ok(Family::Quaternion8),
            "klein4" | "v4" => return Ok(Family::Klein4),
            _ => {}
        }
        let (head, arg) = lower
            .strip_suffix(')')
            .and_then(|s| s.split_once('('))
            .ok_or_else(unknown)?;
        let n: usize = arg.parse().map_err(|_| unknown())?;
        if n == 0 {
            return Err(unknown());
        }
        match head {
            "cyclic" => Ok(Family::Cyclic(n)),
            "dihedral" => Ok(Family::Dihedral(n)),
            "symmetric" if n <= 6 => Ok(Family::Symmetric(n)),
            "alternating" if n <= 6 => Ok(Family::Alternating(n)),
            "binary_dihedral" if n >= 2 => Ok(Family::BinaryDihedral(n)),
            _ => Err(unknown()),
        }
    }

    /// True for the finite subgroups of SL_2 that come with a defining
    /// 2-dimensional representation.
    pub fn is_ade(&self) -> bool {
        matches!(
            self,
            Family::Cyclic(_) | Family::BinaryDihedral(_) | Family::Quaternion8
        )
    }

    pub fn build(&self) -> Result<Arc<FiniteGroup>> {
        match *self {
            Family::Cyclic(n) => {
                let table = (0..n)
                    .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
                    .collect();
                let labels = (0..n).map(|k| power_label("g", k)).collect();
                let gens = if n > 1 { vec![("g".into(), 1)] } else { vec![] };
                FiniteGroup::from_raw_table(table, labels, gens, Some(*self))
            }
            Family::Dihedral(n) => {
                let idx = |a: usize, b: usize| a + n * b;
                let mut table = Vec::with_capacity(4 * n * n);
                for x in 0..2 * n {
                    let (a, b) = (x % n, x / n);
                    for y in 0..2 * n {
                        let (c, d) = (y % n, y / n);
                        let rot = if b == 0 { a + c } else { a + n - c };
                        table.push(idx(rot % n, (b + d) % 2) as u32);
                    }
                }
                let labels = (0..2 * n)
                    .map(|x| word_label(&power_label("r", x % n), "s", x / n))
                    .collect();
                let gens = vec![("r".into(), idx(1 % n, 0)), ("s".into(), idx(0, 1))];
                FiniteGroup::from_raw_table(table, labels, gens, Some(*self))
            }
            Family::BinaryDihedral(n) => binary_dihedral(n, *self),
            Family::Quaternion8 => binary_dihedral(2, *self),
            Family::Klein4 => {
                let table = (0..4u32)
                    .flat_map(|a| (0..4u32).map(move |b| a ^ b))
                    .collect();
                let labels = vec!["1".into(), "a".into(), "b".into(), "a*b".into()];
                let gens = vec![("a".into(), 1), ("b".into(), 2)];
                FiniteGroup::from_raw_table(table, labels, gens, Some(*self))
            }
            Family::Symmetric(n) => {
                let mut gens = Vec::new();
                let mut names = Vec::new();
                if n >= 2 {
                    let mut t: Vec<usize> = (0..n).collect();
                    t.swap(0, 1);
                    gens.push(t);
                    names.push("t".to_string());
                }
                if n >= 3 {
                    gens.push((0..n).map(|i| (i + 1) % n).collect());
                    names.push("c".to_string());
                }
                FiniteGroup::from_named_permutations(
                    n,
                    &gens,
                    &names,
                    DEFAULT_CLOSURE_CAP,
                    Some(*self),
                )
            }
            Family::Alternating(n) => {
                // generated by the 3-cycles (1 2 k)
                let mut gens = Vec::new();
                let mut names = Vec::new();
                for k in 2..n {
                    let mut p: Vec<usize> = (0..n).collect();
                    p[0] = 1;
                    p[1] = k;
                    p[k] = 0;
                    gens.push(p);
                    names.push(format!("c{}", k - 1));
                }
                FiniteGroup::from_named_permutations(
                    n,
                    &gens,
                    &names,
                    DEFAULT_CLOSURE_CAP,
                    Some(*self),
                )
            }
        }
    }
}

fn binary_dihedral(n: usize, family: Family) -> Result<Arc<FiniteGroup>> {
    let m = 2 * n;
    let mut table = Vec::with_capacity(16 * n * n);
    for x in 0..2 * m {
        let (k, b) = (x % m, x / m);
        for y in 0..2 * m {
            let (l, c) = (y % m, y / m);
            let mut e = if b == 0 { k + l } else { k + m - l };
            if b == 1 && c == 1 {
                e += n;
            }
            table.push(((e % m) + m * ((b + c) % 2)) as u32);
        }
    }
    let (labels, gens): (Vec<String>, _) = if family == Family::Quaternion8 {
        (
            ["1", "i", "-1", "-i", "j", "k", "-j", "-k"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            vec![("i".to_string(), 1), ("j".to_string(), 4)],
        )
    } else {
        (
            (0..2 * m)
                .map(|x| word_label(&power_label("a", x % m), "x", x / m))
                .collect(),
            vec![("a".to_string(), 1), ("x".to_string(), m)],
        )
    };
    FiniteGroup::from_raw_table(table, labels, gens, Some(family))
}

fn power_label(name: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => name.into(),
        _ => format!("{name}^{k}"),
    }
}

fn word_label(prefix: &str, letter: &str, present: usize) -> String {
    match (prefix, present) {
        (p, 0) => p.into(),
        ("1", _) => letter.into(),
        (p, _) => format!("{p}*{letter}"),
    }
}

/// Looks up a catalog group by name, e.g. `symmetric(3)` or `quaternion8`.
pub fn catalog(name: &str) -> Result<Arc<FiniteGroup>> {
    Family::parse(name)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(g: &FiniteGroup) -> Vec<usize> {
        let c = g.conjugacy();
        (0..c.len()).map(|i| c.class_size(i)).collect()
    }

    #[test]
    fn orders_and_class_counts() {
        let cases = [
            ("cyclic(3)", 3, 3),
            ("dihedral(4)", 8, 5),
            ("dihedral(3)", 6, 3),
            ("symmetric(3)", 6, 3),
            ("symmetric(4)", 24, 5),
            ("alternating(4)", 12, 4),
            ("alternating(5)", 60, 5),
            ("quaternion8", 8, 5),
            ("binary_dihedral(3)", 12, 6),
            ("klein4", 4, 4),
            ("symmetric(1)", 1, 1),
        ];
        for (name, order, classes) in cases {
            let g = catalog(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert_eq!(g.num_classes(), classes, "{name}");
        }
    }

    #[test]
    fn class_equation() {
        for name in [
            "symmetric(4)",
            "alternating(5)",
            "binary_dihedral(4)",
            "dihedral(5)",
        ] {
            let g = catalog(name).unwrap();
            let c = g.conjugacy();
            let total: usize = c.centralizers.iter().map(|z| g.order() / z.len()).sum();
            assert_eq!(total, g.order());
            for i in 0..c.len() {
                assert_eq!(c.class_size(i) * c.centralizers[i].len(), g.order());
                assert_eq!(c.inverse_class[c.inverse_class[i]], i);
            }
        }
    }

    #[test]
    fn s3_class_sizes_and_q8_inverses() {
        let s3 = catalog("symmetric(3)").unwrap();
        let mut s = sizes(&s3);
        s.sort();
        assert_eq!(s, vec![1, 2, 3]);

        let q8 = catalog("quaternion8").unwrap();
        let c = q8.conjugacy();
        assert!((0..c.len()).all(|i| c.inverse_class[i] == i));
        let minus_one = q8.parse_element("-1").unwrap();
        assert_eq!(c.class_size(q8.class_of(minus_one)), 1);
        assert_eq!(
            q8.parse_element("i*j").unwrap(),
            q8.parse_element("k").unwrap()
        );
        assert_eq!(q8.parse_element("i^2").unwrap(), minus_one);
        let i = q8.parse_element("i").unwrap();
        let j = q8.parse_element("j").unwrap();
        assert_eq!(q8.tuple_centralizer(&[i, j]), vec![0, minus_one]);
    }

    #[test]
    fn cyclic4_inverse_classes() {
        let g = catalog("cyclic(4)").unwrap();
        let c = g.conjugacy();
        assert_eq!(c.len(), 4);
        let g1 = g.class_of(1);
        let g3 = g.class_of(3);
        assert_eq!(c.inverse_class[g1], g3);
    }

    #[test]
    fn binary_dihedral_relations() {
        let g = catalog("binary_dihedral(3)").unwrap();
        let a = g.parse_element("a").unwrap();
        let x = g.parse_element("x").unwrap();
        assert_eq!(g.element_order(a), 6);
        assert_eq!(g.mul(x, x), g.pow(a, 3));
        assert_eq!(g.conjugate(x, a), g.inv(a));
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(catalog("foo(3)"), Err(Error::UnknownCatalog(_))));
        assert!(catalog("symmetric(7)").is_err());
        assert!(catalog("cyclic(0)").is_err());
    }
}
