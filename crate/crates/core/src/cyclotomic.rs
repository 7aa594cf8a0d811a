//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! An element is stored in the power basis `{1, x, ..., x^(phi(N)-1)}` of
//! `Q[x]/(Phi_N(x))` with `x = zeta_N = exp(2 pi i / N)`. Binary operations
//! lift both operands to the lcm of their conductors; results are left at
//! that conductor. Equality is decided at the common conductor, where the
//! power-basis representation is unique. [`Cyclotomic::minimal`] produces the
//! canonical minimal-conductor form used for display, ordering and JSON.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Renders a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn rational_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Cached data for one conductor: `Phi_N` and the reductions of `x^k` for
/// `0 <= k < N`.
struct PowerBasis {
    phi: usize,
    /// Monic `Phi_N`, coefficients from low to high degree.
    poly: Vec<BigInt>,
    powers: Vec<Vec<BigInt>>,
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qlen = num.len() - dn;
    let mut q = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if !c.is_zero() {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

fn cyclotomic_poly_uncached(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by Phi_d for every proper divisor d of n
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            let pd = basis(d);
            num = poly_div_exact(&num, &pd.poly);
        }
    }
    num
}

fn basis(n: u64) -> Arc<PowerBasis> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<PowerBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&n) {
        return b.clone();
    }
    let poly = cyclotomic_poly_uncached(n);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x and reduce
        let top = cur[phi - 1].clone();
        let mut next = vec![BigInt::zero(); phi];
        for i in (1..phi).rev() {
            next[i] = cur[i - 1].clone();
        }
        if !top.is_zero() {
            for i in 0..phi {
                next[i] -= &top * &poly[i];
            }
        }
        cur = next;
    }
    let b = Arc::new(PowerBasis { phi, poly, powers });
    cache.lock().unwrap().insert(n, b.clone());
    b
}

/// The cyclotomic polynomial `Phi_n`, coefficients from low to high degree.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    basis(n).poly.clone()
}

/// An exact element of `Q(zeta_N)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// Builds an element from power-basis coefficients at conductor `n`.
    pub fn from_coeffs(n: u64, coeffs: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("conductor must be positive".into()));
        }
        let phi = basis(n).phi;
        if coeffs.len() != phi {
            return Err(Error::Invalid(format!(
                "conductor {n} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Cyclotomic {
            conductor: n,
            coeffs,
        })
    }

    /// `zeta_n^k = exp(2 pi i k / n)`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "root_of_unity needs n >= 1");
        let b = basis(n);
        let e = k.rem_euclid(n as i64) as usize;
        Cyclotomic {
            conductor: n,
            coeffs: b.powers[e]
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect(),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Re-expresses the element in `Q(zeta_m)`; `m` must be a multiple of the
    /// current conductor.
    pub fn lift(&self, m: u64) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        assert!(m % self.conductor == 0, "lift target must be a multiple");
        let step = (m / self.conductor) as usize;
        let b = basis(m);
        let mut out = vec![Rational::zero(); b.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&b.powers[i * step]) {
                if !p.is_zero() {
                    *o += c * Rational::from_integer(p.clone());
                }
            }
        }
        Cyclotomic {
            conductor: m,
            coeffs: out,
        }
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let l = self.conductor.lcm(&other.conductor);
        (self.lift(l), other.lift(l))
    }

    /// Reduces a polynomial in `x` of any length modulo `Phi_n`.
    fn reduce(n: u64, mut poly: Vec<Rational>) -> Self {
        let b = basis(n);
        let phi = b.phi;
        if poly.len() < phi {
            poly.resize(phi, Rational::zero());
        }
        for d in (phi..poly.len()).rev() {
            let c = std::mem::replace(&mut poly[d], Rational::zero());
            if c.is_zero() {
                continue;
            }
            for i in 0..phi {
                if !b.poly[i].is_zero() {
                    poly[d - phi + i] -= &c * Rational::from_integer(b.poly[i].clone());
                }
            }
        }
        poly.truncate(phi);
        Cyclotomic {
            conductor: n,
            coeffs: poly,
        }
    }

    /// Applies the field automorphism `zeta_N -> zeta_N^j`.
    pub fn galois(&self, j: i64) -> Result<Self> {
        let n = self.conductor as i64;
        if j.gcd(&n) != 1 {
            return Err(Error::Invalid(format!(
                "galois exponent {j} is not coprime to conductor {n}"
            )));
        }
        Ok(self.galois_unchecked(j))
    }

    fn galois_unchecked(&self, j: i64) -> Self {
        let n = self.conductor;
        let b = basis(n);
        let mut out = vec![Rational::zero(); b.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((i as i64) * j).rem_euclid(n as i64) as usize;
            for (o, p) in out.iter_mut().zip(&b.powers[e]) {
                if !p.is_zero() {
                    *o += c * Rational::from_integer(p.clone());
                }
            }
        }
        Cyclotomic {
            conductor: n,
            coeffs: out,
        }
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        self.galois_unchecked(-1)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::from_int(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the product of the non-trivial Galois
    /// conjugates divided by the (rational) norm.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.conductor as i64;
        let mut others = Cyclotomic::from_int(1);
        for j in 2..n.max(2) {
            if j.gcd(&n) == 1 {
                others = &others * &self.galois_unchecked(j);
            }
        }
        let norm = (self * &others)
            .to_rational()
            .expect("field norm is rational");
        Ok(others.scale(&(Rational::one() / norm)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Whether the element lies in `Q(zeta_d)` for a divisor `d` of the
    /// conductor, tested by invariance under `Gal(Q(zeta_N)/Q(zeta_d))`.
    fn lies_in(&self, d: u64) -> bool {
        let n = self.conductor as i64;
        let d = d as i64;
        (1..n)
            .filter(|j| j % d == 1 % d && j.gcd(&n) == 1)
            .all(|j| {
                let g = self.galois_unchecked(j);
                g.coeffs == self.coeffs
            })
    }

    /// Canonical form at the smallest conductor whose field contains the
    /// element.
    pub fn minimal(&self) -> Self {
        if self.to_rational().is_some() {
            return Cyclotomic::from_rational(self.coeffs[0].clone());
        }
        for d in divisors(self.conductor) {
            if d == self.conductor {
                break;
            }
            if self.lies_in(d) {
                return self.descend(d);
            }
        }
        self.clone()
    }

    /// Solves for the coordinates in `Q(zeta_d)`; assumes membership.
    fn descend(&self, d: u64) -> Self {
        let n = self.conductor;
        let bn = basis(n);
        let bd = basis(d);
        let step = (n / d) as usize;
        // columns: lifted basis vectors of Q(zeta_d)
        let cols: Vec<&Vec<BigInt>> = (0..bd.phi).map(|i| &bn.powers[i * step]).collect();
        let rows = bn.phi;
        let mut m: Vec<Vec<Rational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rational> = cols
                    .iter()
                    .map(|c| Rational::from_integer(c[r].clone()))
                    .collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let ncols = bd.phi;
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..ncols {
            let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, p);
            let inv = Rational::one() / m[pivot_row][col].clone();
            for x in m[pivot_row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..rows {
                if r != pivot_row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..=ncols {
                        let v = &m[pivot_row][c] * &f;
                        m[r][c] -= v;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let mut out = vec![Rational::zero(); ncols];
        for (r, &c) in pivots.iter().enumerate() {
            out[c] = m[r][ncols].clone();
        }
        Cyclotomic {
            conductor: d,
            coeffs: out,
        }
    }

    /// Total order on canonical forms: minimal conductor ascending, then
    /// power-basis coefficients descending.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let a = self.minimal();
        let b = other.minimal();
        a.conductor.cmp(&b.conductor).then_with(|| {
            for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
                match y.cmp(x) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    /// Floating-point embedding, for diagnostics only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let n = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (i, c)| {
                let v = c.to_f64().unwrap_or(f64::NAN);
                let t = 2.0 * std::f64::consts::PI * i as f64 / n;
                (re + v * t.cos(), im + v * t.sin())
            })
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_int(0)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_int(1)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.conductor == 1 {
            let mut out = self.clone();
            out.coeffs[0] += &rhs.coeffs[0];
            return out;
        }
        if self.conductor == 1 {
            return rhs + self;
        }
        if self.conductor == rhs.conductor {
            return Cyclotomic {
                conductor: self.conductor,
                coeffs: self
                    .coeffs
                    .iter()
                    .zip(&rhs.coeffs)
                    .map(|(a, b)| a + b)
                    .collect(),
            };
        }
        let (a, b) = self.common(rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return Cyclotomic {
                conductor: self.conductor,
                coeffs: self
                    .coeffs
                    .iter()
                    .zip(&rhs.coeffs)
                    .map(|(a, b)| a - b)
                    .collect(),
            };
        }
        let (a, b) = self.common(rhs);
        &a - &b
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.conductor == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.conductor == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if self.conductor != rhs.conductor {
            let (a, b) = self.common(rhs);
            return &a * &b;
        }
        if self.conductor == 1 {
            return Cyclotomic::from_rational(&self.coeffs[0] * &rhs.coeffs[0]);
        }
        let n = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Cyclotomic::reduce(self.conductor, prod)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a -= b;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl fmt::Display for Cyclotomic {
    /// GAP-style rendering `a + b*E(N)^k + ...` of the minimal form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.minimal();
        if m.conductor == 1 {
            return write!(f, "{}", rational_string(&m.coeffs[0]));
        }
        let mut first = true;
        for (i, c) in m.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let term = match (i, a.is_one()) {
                (0, _) => rational_string(&a),
                (1, true) => format!("E({})", m.conductor),
                (_, true) => format!("E({})^{}", m.conductor, i),
                (1, false) => format!("{}*E({})", rational_string(&a), m.conductor),
                (_, false) => format!("{}*E({})^{}", rational_string(&a), m.conductor, i),
            };
            write!(f, "{sep}{term}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Cyclotomic {
    type Err = Error;

    /// Parses the GAP-style form produced by `Display`, e.g.
    /// `-1/2 + 3*E(12)^5 - E(4)`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty cyclotomic".into()));
        }
        let bytes: Vec<char> = compact.chars().collect();
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == '+' || bytes[i] == '-') && !matches!(bytes[i - 1], '^' | '*' | '(') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = Cyclotomic::zero();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, term.strip_prefix('+').unwrap_or(term)),
            };
            let bad = || Error::Parse(format!("malformed cyclotomic term `{term}`"));
            let value = match body.find("E(") {
                None => Cyclotomic::from_rational(parse_rational(body)?),
                Some(pos) => {
                    let coeff = if pos == 0 {
                        Rational::one()
                    } else {
                        parse_rational(body[..pos].strip_suffix('*').ok_or_else(bad)?)?
                    };
                    let rest = &body[pos + 2..];
                    let close = rest.find(')').ok_or_else(bad)?;
                    let n: u64 = rest[..close].parse().map_err(|_| bad())?;
                    if n == 0 {
                        return Err(bad());
                    }
                    let k: i64 = match &rest[close + 1..] {
                        "" => 1,
                        e => e
                            .strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse()
                            .map_err(|_| bad())?,
                    };
                    Cyclotomic::root_of_unity(n, k).scale(&coeff)
                }
            };
            acc = if neg { &acc - &value } else { &acc + &value };
        }
        Ok(acc)
    }
}

/// JSON form `{"conductor": N, "coeffs": ["p/q", ...]}` at minimal conductor.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicJson {
    pub conductor: u64,
    pub coeffs: Vec<String>,
}

impl From<&Cyclotomic> for CyclotomicJson {
    fn from(z: &Cyclotomic) -> Self {
        let m = z.minimal();
        CyclotomicJson {
            conductor: m.conductor,
            coeffs: m.coeffs.iter().map(rational_string).collect(),
        }
    }
}

impl TryFrom<&CyclotomicJson> for Cyclotomic {
    type Error = Error;
    fn try_from(j: &CyclotomicJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Cyclotomic::from_coeffs(j.conductor, coeffs)
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = CyclotomicJson::deserialize(d)?;
        Cyclotomic::try_from(&j).map_err(serde::de::Error::custom)
    }
}
