//! Dixon's method: split the class-algebra structure matrices over a prime
//! field `F_p` with `p ≡ 1 mod exp(G)`, then lift each character value from
//! its eigenvalue multiplicities.

use num_rational::BigRational;
use num_traits::Zero;

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Primes are searched below this bound.
const PRIME_SEARCH_LIMIT: u64 = 1 << 31;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Smallest prime `p ≡ 1 mod exponent` with `p > 2 sqrt(order)`.
pub fn choose_prime(order: usize, exponent: usize) -> Result<u64> {
    let e = exponent as u64;
    let mut p = e + 1;
    while p < PRIME_SEARCH_LIMIT {
        if (p * p) > 4 * order as u64 && is_prime(p) {
            return Ok(p);
        }
        p += e;
    }
    Err(Error::CharacterTable(format!(
        "no prime ≡ 1 mod {exponent} below {PRIME_SEARCH_LIMIT}"
    )))
}

fn primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Basis of the nullspace of a `rows x cols` matrix over `F_p`.
fn nullspace(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[i][f]) % p;
            }
            v
        })
        .collect()
}

/// Irreducible character values, one row per irreducible, in discovery
/// order.
pub fn dixon_table(g: &FiniteGroup) -> Result<Vec<Vec<Cyclotomic>>> {
    let n = g.order();
    let conj = g.conjugacy();
    let k = conj.len();
    let e = g.exponent();
    let p = choose_prime(n, e)?;
    let sizes: Vec<u64> = (0..k).map(|c| conj.class_size(c) as u64).collect();

    // a[j][i][l] = #{x in C_j : x^-1 z_l in C_i}, z_l the representative of C_l
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (l, &z) in conj.representatives.iter().enumerate() {
        for x in 0..n {
            let j = conj.class_of[x];
            let i = conj.class_of[g.mul(g.inv(x), z)];
            a[j][i][l] += 1;
        }
    }

    // common eigenvectors of M_j = (a[j][i][l])_{i,l}, acting on column vectors
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0; k];
            v[i] = 1;
            v
        })
        .collect()];
    for j in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let d = basis.len();
            // image of each basis vector under M_j
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|v| {
                    (0..k)
                        .map(|i| (0..k).fold(0, |acc, l| (acc + a[j][i][l] % p * v[l]) % p))
                        .collect()
                })
                .collect();
            let mut found = 0;
            for lambda in 0..p {
                // (M_j - λ) Σ c_t v_t = 0, solve for c
                let m: Vec<Vec<u64>> = (0..k)
                    .map(|i| {
                        (0..d)
                            .map(|t| (images[t][i] + p - lambda * basis[t][i] % p) % p)
                            .collect()
                    })
                    .collect();
                let null = nullspace(m, d, p);
                if null.is_empty() {
                    continue;
                }
                found += null.len();
                next.push(
                    null.iter()
                        .map(|c| {
                            (0..k)
                                .map(|i| (0..d).fold(0, |acc, t| (acc + c[t] * basis[t][i]) % p))
                                .collect()
                        })
                        .collect(),
                );
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(Error::CharacterTable(format!(
                    "class matrix {j} is not diagonalizable mod {p}"
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::CharacterTable(
            "class matrices did not split into one-dimensional eigenspaces".into(),
        ));
    }

    let root = pow_mod(primitive_root(p), (p - 1) / e as u64, p);
    let mut rows = Vec::with_capacity(k);
    for space in spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::CharacterTable(
                "eigenvector vanishes at identity".into(),
            ));
        }
        let s = inv_mod(v[0], p);
        let w: Vec<u64> = v.iter().map(|x| x * s % p).collect();
        let mut sum = 0;
        for c in 0..k {
            let term = w[c] * w[conj.inverse_class[c]] % p * inv_mod(sizes[c] % p, p) % p;
            sum = (sum + term) % p;
        }
        if sum == 0 {
            return Err(Error::CharacterTable("degenerate norm".into()));
        }
        let d2 = n as u64 % p * inv_mod(sum, p) % p;
        let degree = (1..=n as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::CharacterTable("no integral degree".into()))?;
        let values: Vec<u64> = (0..k)
            .map(|c| degree * w[c] % p * inv_mod(sizes[c] % p, p) % p)
            .collect();
        let mut row = Vec::with_capacity(k);
        for c in 0..k {
            let o = g.element_order(conj.representatives[c]);
            let zo = pow_mod(root, (e / o) as u64, p);
            let inv_o = inv_mod(o as u64 % p, p);
            let mut value = Cyclotomic::zero();
            let mut total = 0;
            for s in 0..o {
                let mut mu = 0;
                for l in 0..o {
                    let chi = values[conj.power_map[c][l % e]];
                    let twist = pow_mod(zo, ((o - s) * l % o) as u64, p);
                    mu = (mu + chi * twist) % p;
                }
                mu = mu * inv_o % p;
                if mu > degree {
                    return Err(Error::CharacterTable(format!(
                        "eigenvalue multiplicity {mu} exceeds degree {degree}"
                    )));
                }
                total += mu;
                if mu != 0 {
                    value += &Cyclotomic::root_of_unity(o as u64, s as i64)
                        .scale(&Rational::from_integer((mu as i64).into()));
                }
            }
            if total != degree {
                return Err(Error::CharacterTable(
                    "eigenvalue multiplicities do not sum to the degree".into(),
                ));
            }
            row.push(value);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Exact orthogonality and degree-sum checks on a candidate table.
pub fn validate_table(g: &FiniteGroup, rows: &[Vec<Cyclotomic>]) -> Result<()> {
    let conj = g.conjugacy();
    let k = conj.len();
    if rows.len() != k || rows.iter().any(|r| r.len() != k) {
        return Err(Error::CharacterTable(format!(
            "table must be {k} x {k} for a group with {k} classes"
        )));
    }
    let order = BigRational::from_integer((g.order() as i64).into());
    for (a, ra) in rows.iter().enumerate() {
        for (b, rb) in rows.iter().enumerate().skip(a) {
            let mut s = Cyclotomic::zero();
            for c in 0..k {
                let w = Rational::from_integer((conj.class_size(c) as i64).into());
                s += &(&ra[c] * &rb[c].conj()).scale(&w);
            }
            let expected = if a == b {
                order.clone()
            } else {
                Rational::zero()
            };
            if s != Cyclotomic::from_rational(expected) {
                return Err(Error::CharacterTable(format!(
                    "rows {a} and {b} are not orthonormal"
                )));
            }
        }
    }
    for c in 0..k {
        for d in c..k {
            let mut s = Cyclotomic::zero();
            for r in rows {
                s += &(&r[c] * &r[d].conj());
            }
            let expected = if c == d {
                conj.centralizers[c].len() as i64
            } else {
                0
            };
            if s != Cyclotomic::from_int(expected) {
                return Err(Error::CharacterTable(format!(
                    "columns {c} and {d} violate column orthogonality"
                )));
            }
        }
    }
    for (i, r) in rows.iter().enumerate() {
        match r[0].to_integer() {
            Some(d) if d > 0.into() => {}
            _ => {
                return Err(Error::CharacterTable(format!(
                    "row {i} has no positive integer degree"
                )))
            }
        }
    }
    Ok(())
}
