//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary so the
//! report is always printed.

use std::sync::Arc;
use std::time::Instant;

use num_traits::Zero;
use orbring::chern_loc::{check_chern_homomorphism, Localization};
use orbring::cyclotomic::{rat, Cyclotomic, Rational};
use orbring::group::catalog;
use orbring::input::{catalog_rep, RepSpec};
use orbring::logtrace::{fw_check, twisted_pullback, v_identity_check};
use orbring::rings::{lusztig_ring, Orbifold, RingCheck};
use orbring::{character_table, ClassFunction, FiniteGroup};

type Outcome = Result<(), String>;

/// Every (group, representation) pair the ring criteria range over.
const PAIRS: &[(&str, &str)] = &[
    ("cyclic(2)", "sl2"),
    ("cyclic(3)", "sl2"),
    ("cyclic(4)", "sl2"),
    ("cyclic(5)", "sl2"),
    ("cyclic(6)", "sl2"),
    ("symmetric(3)", "std"),
    ("quaternion8", "2dim"),
    ("alternating(4)", "3dim"),
    ("symmetric(3)", "zero"),
    ("dihedral(4)", "zero"),
    ("quaternion8", "zero"),
    ("alternating(4)", "zero"),
];

fn pair(group: &str, rep: &str) -> (Arc<FiniteGroup>, ClassFunction) {
    let g = catalog(group).expect("catalog group");
    let v = catalog_rep(&g, rep).expect("catalog representation");
    (g, v)
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn c(n: i64) -> Cyclotomic {
    Cyclotomic::from_int(n)
}

fn character_tables() -> Outcome {
    let mut groups: Vec<(String, Option<Vec<i64>>)> = vec![
        ("symmetric(3)".into(), Some(vec![1, 1, 2])),
        ("dihedral(4)".into(), Some(vec![1, 1, 1, 1, 2])),
        ("quaternion8".into(), Some(vec![1, 1, 1, 1, 2])),
        ("alternating(4)".into(), Some(vec![1, 1, 1, 3])),
    ];
    for n in 1..=12 {
        groups.push((format!("cyclic({n})"), Some(vec![1; n])));
    }
    for (name, degrees) in groups {
        let g = catalog(&name).map_err(|e| e.to_string())?;
        let table = character_table(&g).map_err(|e| e.to_string())?;
        let conj = g.conjugacy();
        let k = conj.len();
        let rows: Vec<&[Cyclotomic]> = table.irreducibles.iter().map(|x| x.values()).collect();
        ensure(rows.len() == k, || {
            format!("{name}: {} rows for {k} classes", rows.len())
        })?;
        for a in 0..k {
            for b in 0..k {
                let mut s = Cyclotomic::zero();
                for cl in 0..k {
                    s += &(&rows[a][cl] * &rows[b][cl].conj())
                        .scale(&rat(conj.class_size(cl) as i64, 1));
                }
                let expected = if a == b { g.order() as i64 } else { 0 };
                ensure(s == c(expected), || {
                    format!("{name}: rows {a},{b} not orthonormal")
                })?;
                let mut t = Cyclotomic::zero();
                for r in &rows {
                    t += &(&r[a] * &r[b].conj());
                }
                let expected = if a == b {
                    conj.centralizers[a].len() as i64
                } else {
                    0
                };
                ensure(t == c(expected), || {
                    format!("{name}: columns {a},{b} not orthogonal")
                })?;
            }
        }
        let mut degs: Vec<i64> = rows
            .iter()
            .map(|r| {
                r[0].to_integer()
                    .and_then(|d| i64::try_from(d).ok())
                    .unwrap_or(-1)
            })
            .collect();
        ensure(
            degs.iter().map(|d| d * d).sum::<i64>() == g.order() as i64,
            || format!("{name}: squared degrees do not sum to the order"),
        )?;
        degs.sort();
        if let Some(expected) = degrees {
            ensure(degs == expected, || format!("{name}: degrees {degs:?}"))?;
        }
    }
    Ok(())
}

fn fw_pairs() -> Vec<(&'static str, &'static str)> {
    let mut v: Vec<_> = PAIRS[..5].to_vec();
    v.extend([
        ("cyclic(1)", "sl2"),
        ("symmetric(3)", "std"),
        ("quaternion8", "2dim"),
        ("alternating(4)", "3dim"),
    ]);
    v
}

fn falbel_wentworth() -> Outcome {
    for (gname, rname) in fw_pairs() {
        let (g, v) = pair(gname, rname);
        let n = g.order();
        let mut tuples: Vec<Vec<usize>> = vec![vec![0]];
        for a in 0..n {
            tuples.push(vec![a, g.inv(a)]);
            for b in 0..n {
                tuples.push(vec![a, b, g.inv(g.mul(a, b))]);
            }
        }
        for t in tuples {
            let r = fw_check(&v, &t).map_err(|e| e.to_string())?;
            ensure(r.holds && r.integral && r.lhs >= Rational::zero(), || {
                format!("{gname}/{rname} {t:?}: lhs {} rhs {}", r.lhs, r.rhs)
            })?;
        }
    }
    Ok(())
}

fn twisted_nonnegativity() -> Outcome {
    for &(gname, rname) in PAIRS {
        let (g, v) = pair(gname, rname);
        let o = Orbifold::new(&g, &v).map_err(|e| e.to_string())?;
        for (idx, d) in o.doubles.sectors.iter().enumerate() {
            let (a, b) = d.rep();
            let tw = o.twisted_class(idx);
            ensure(tw.multiplicities.iter().all(|m| *m >= 0.into()), || {
                format!("{gname}/{rname} ({a},{b}): negative multiplicity")
            })?;
            if d.class.orbit_size == 1 {
                continue;
            }
            let x = (0..g.order())
                .find(|&x| (g.conjugate(x, a), g.conjugate(x, b)) != (a, b))
                .expect("orbit has another member");
            let other = [g.conjugate(x, a), g.conjugate(x, b)];
            let tw2 = twisted_pullback(&v, &other).map_err(|e| e.to_string())?;
            let moved = tw
                .class
                .transport(&tw.centralizer, &tw2.centralizer, x)
                .map_err(|e| e.to_string())?;
            ensure(moved == tw2.class && tw.rank == tw2.rank, || {
                format!("{gname}/{rname} ({a},{b}): representative dependence")
            })?;
        }
    }
    Ok(())
}

fn identity_family() -> Outcome {
    for (gname, rname) in [("symmetric(3)", "std"), ("quaternion8", "2dim")] {
        let (g, v) = pair(gname, rname);
        let n = g.order();
        let mut count = 0;
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    let r = v_identity_check(&v, [a, b, d]).map_err(|e| e.to_string())?;
                    ensure(r.first && r.second && r.split, || {
                        format!("{gname} ({a},{b},{d}): {r:?}")
                    })?;
                    count += 1;
                }
            }
        }
        ensure(count == n * n * n, || "triple count".into())?;
    }
    Ok(())
}

fn ring_axioms() -> Outcome {
    let checks = [
        RingCheck::Identity,
        RingCheck::Commutativity,
        RingCheck::Associativity,
        RingCheck::Grading,
        RingCheck::MultiProduct,
    ];
    for &(gname, rname) in PAIRS {
        let (g, v) = pair(gname, rname);
        let o = Orbifold::new(&g, &v).map_err(|e| e.to_string())?;
        let mut chow = o.chow_ring();
        let mut k = o.k_ring().map_err(|e| e.to_string())?;
        for ring in [&mut chow, &mut k] {
            for out in o.verify(ring, &checks).map_err(|e| e.to_string())? {
                ensure(out.passed, || {
                    format!(
                        "{gname}/{rname} {}: {} {:?}",
                        ring.kind.name(),
                        out.name,
                        out.failures
                    )
                })?;
            }
        }
    }
    Ok(())
}

/// `a[i][j][k] = #{(x, y) ∈ C_i × C_j : xy = z_k}` computed from the
/// multiplication table.
fn class_sum_oracle(g: &FiniteGroup) -> Vec<Vec<Vec<i64>>> {
    let n = g.order();
    let k = g.num_classes();
    let mut class = vec![0; n];
    let mut reps = vec![usize::MAX; k];
    for x in 0..n {
        class[x] = g.class_of(x);
        if reps[class[x]] == usize::MAX {
            reps[class[x]] = x;
        }
    }
    let mut a = vec![vec![vec![0i64; k]; k]; k];
    for x in 0..n {
        for y in 0..n {
            let z = g.mul(x, y);
            if reps[class[z]] == z {
                a[class[x]][class[y]][class[z]] += 1;
            }
        }
    }
    a
}

fn oracle_equivalence() -> Outcome {
    for gname in [
        "symmetric(3)",
        "dihedral(4)",
        "quaternion8",
        "alternating(4)",
    ] {
        let (g, v) = pair(gname, "zero");
        let chow = Orbifold::new(&g, &v)
            .map_err(|e| e.to_string())?
            .chow_ring();
        let a = class_sum_oracle(&g);
        let k = g.num_classes();
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    ensure(chow.constant(i, j, l) == rat(a[i][j][l], 1), || {
                        format!("{gname}: constant ({i},{j},{l})")
                    })?;
                }
            }
        }
    }
    let (g, v) = pair("symmetric(3)", "zero");
    let chow = Orbifold::new(&g, &v)
        .map_err(|e| e.to_string())?
        .chow_ring();
    let t = g.class_of(g.parse_element("(1 2)").unwrap());
    let cyc = g.class_of(g.parse_element("(1 2 3)").unwrap());
    let sq = chow.product_of_basis(t, t);
    ensure(
        sq[0] == rat(3, 1) && sq[cyc] == rat(3, 1) && sq[t].is_zero(),
        || "x_t^2 != 3 x_1 + 3 x_c".into(),
    )
}

fn lusztig_corner() -> Outcome {
    let g = catalog("symmetric(3)").unwrap();
    let ring = lusztig_ring(&g).map_err(|e| e.to_string())?;
    ensure(ring.dim() == 8, || {
        format!("basis has {} elements", ring.dim())
    })?;
    let nonneg = ring.check_nonnegative_integral();
    ensure(nonneg.passed, || format!("{:?}", nonneg.failures))?;
    let assoc = ring.check_associativity();
    ensure(assoc.passed, || format!("{:?}", assoc.failures))
}

fn frobenius() -> Outcome {
    for gname in ["symmetric(3)", "quaternion8"] {
        let (g, v) = pair(gname, "zero");
        let o = Orbifold::new(&g, &v).map_err(|e| e.to_string())?;
        let mut chow = o.chow_ring();
        let eta = o.eta_pairing(&chow).map_err(|e| e.to_string())?;
        ensure(eta.entries[0][0] == rat(1, g.order() as i64), || {
            format!("{gname}: η(1,1)")
        })?;
        let mut k = o.k_ring().map_err(|e| e.to_string())?;
        for ring in [&mut chow, &mut k] {
            for out in o
                .verify(ring, &[RingCheck::Frobenius])
                .map_err(|e| e.to_string())?
            {
                ensure(out.passed, || {
                    format!("{gname} {}: {:?}", ring.kind.name(), out.failures)
                })?;
            }
        }
    }
    Ok(())
}

fn riemann_roch() -> Outcome {
    for &(gname, rname) in PAIRS {
        let (g, v) = pair(gname, rname);
        let o = Orbifold::new(&g, &v).map_err(|e| e.to_string())?;
        let k = o.k_ring().map_err(|e| e.to_string())?;
        let out = check_chern_homomorphism(&k, &o.chow_ring());
        ensure(out.passed, || {
            format!("{gname}/{rname}: {:?}", out.failures)
        })?;
    }
    Ok(())
}

fn localization() -> Outcome {
    for (gname, rname) in [
        ("symmetric(3)", "zero"),
        ("symmetric(3)", "std"),
        ("cyclic(4)", "sl2"),
    ] {
        let (g, v) = pair(gname, rname);
        let o = Orbifold::new(&g, &v).map_err(|e| e.to_string())?;
        let loc = Localization::new(&o).map_err(|e| e.to_string())?;
        let round = loc.check_round_trip().map_err(|e| e.to_string())?;
        ensure(round.passed, || {
            format!("{gname}/{rname}: {:?}", round.failures)
        })?;
        for out in loc.check_star_t().map_err(|e| e.to_string())? {
            ensure(out.passed, || {
                format!("{gname}/{rname} {}: {:?}", out.name, out.failures)
            })?;
        }
    }
    Ok(())
}

fn negative_controls() -> Outcome {
    let (g, v) = pair("symmetric(3)", "zero");
    let o = Orbifold::new(&g, &v).map_err(|e| e.to_string())?;
    let chow = o.chow_ring();
    ensure(chow.check_associativity().passed, || {
        "unperturbed table fails".into()
    })?;
    let t = g.class_of(g.parse_element("(1 2)").unwrap());
    let bad = chow.perturbed(t, t, 0, &rat(1, 1));
    ensure(!bad.check_associativity().passed, || {
        "perturbed table passes associativity".into()
    })?;

    // |χ(g)| > χ(1) cannot come from a unitary representation
    let rep = RepSpec::parse(r#"{"kind": "character", "values_by_class": [2, 5, 0]}"#)
        .map_err(|e| e.to_string())?;
    ensure(rep.build(&g).is_err(), || {
        "inconsistent character accepted".into()
    })?;
    let rep = RepSpec::parse(r#"{"kind": "character", "values_by_class": [1, 0, 0]}"#)
        .map_err(|e| e.to_string())?;
    ensure(rep.build(&g).is_err(), || {
        "non-integral character accepted".into()
    })
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("character tables", character_tables),
        ("falbel-wentworth inequality", falbel_wentworth),
        ("twisted pullback non-negativity", twisted_nonnegativity),
        ("identity family", identity_family),
        ("ring axioms and multi-product", ring_axioms),
        ("class-sum oracle", oracle_equivalence),
        ("lusztig product", lusztig_corner),
        ("frobenius property", frobenius),
        ("chern character homomorphism", riemann_roch),
        ("localized product", localization),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2} {name}: PASS ({secs:.1}s)", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({secs:.1}s): {why}", n + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
