//! Exact coefficient fields.
//!
//! Every computation in this crate is parameterised by a [`Field`] object that
//! owns the arithmetic; elements are plain values and carry no context. This is
//! the same split as a ring object in most computer algebra libraries: the
//! rationals have no runtime parameter, prime fields carry their modulus, and
//! small extension fields carry their defining polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::FieldError;

/// Exact field arithmetic.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Image of the rational `num/den`; fails when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem, FieldError>;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;
    fn format(&self, a: &Self::Elem) -> String;
    /// Short human name, e.g. `Q` or `F_5`.
    fn name(&self) -> String;

    /// Canonical representative in `0..p` for elements of a prime field.
    fn residue(&self, _a: &Self::Elem) -> Option<u64> {
        None
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `acc += a * b`
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let prod = self.mul(a, b);
        *acc = self.add(acc, &prod);
    }

    fn add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem) {
        *acc = self.add(acc, a);
    }

    fn sign(&self, negative: bool) -> Self::Elem {
        if negative {
            self.neg(&self.one())
        } else {
            self.one()
        }
    }
}

/// The field of rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational, FieldError> {
        if den.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn name(&self) -> String {
        "Q".to_string()
    }
    fn add_assign(&self, acc: &mut BigRational, a: &BigRational) {
        *acc += a;
    }
    fn mul_add_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        *acc += a * b;
    }
}

/// Residues modulo a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

/// Element of a [`PrimeField`], always reduced into `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp(pub u64);

impl PrimeField {
    pub const MAX_MODULUS: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= Self::MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = ((v % &m) + &m) % &m;
        r.to_u64().expect("residue fits in u64")
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        Fp(0)
    }
    fn one(&self) -> Fp {
        Fp(1 % self.p)
    }
    fn is_zero(&self, a: &Fp) -> bool {
        a.0 == 0
    }
    fn add(&self, a: &Fp, b: &Fp) -> Fp {
        Fp((a.0 + b.0) % self.p)
    }
    fn sub(&self, a: &Fp, b: &Fp) -> Fp {
        Fp((a.0 + self.p - b.0) % self.p)
    }
    fn mul(&self, a: &Fp, b: &Fp) -> Fp {
        Fp(a.0 * b.0 % self.p)
    }
    fn neg(&self, a: &Fp) -> Fp {
        Fp((self.p - a.0) % self.p)
    }
    fn inv(&self, a: &Fp) -> Option<Fp> {
        if a.0 == 0 {
            None
        } else {
            Some(Fp(self.pow(a.0, self.p - 2)))
        }
    }
    fn from_i64(&self, v: i64) -> Fp {
        Fp(v.rem_euclid(self.p as i64) as u64)
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Fp, FieldError> {
        let d = self.reduce_big(den);
        if d == 0 {
            return Err(FieldError::DenominatorVanishes {
                den: den.to_string(),
                p: self.p,
            });
        }
        let n = self.reduce_big(num);
        Ok(self.mul(&Fp(n), &self.inv(&Fp(d)).expect("nonzero")))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> Option<u64> {
        Some(self.p)
    }
    fn format(&self, a: &Fp) -> String {
        a.0.to_string()
    }
    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
    fn residue(&self, a: &Fp) -> Option<u64> {
        Some(a.0)
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The finite field `F_p[X]/(m(X))` for a monic irreducible `m` of degree `k`.
///
/// Only used to get enough distinct evaluation nodes when a prime field is too
/// small for a deterministic polynomial identity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionField {
    base: PrimeField,
    /// Coefficients of the monic modulus, lowest degree first, length `k + 1`.
    modulus: Vec<u64>,
}

impl ExtensionField {
    /// Smallest extension of `F_p` with strictly more than `min_size` elements.
    pub fn with_more_than(base: PrimeField, min_size: u64) -> Self {
        let p = base.modulus();
        let mut k = 1u32;
        while p.saturating_pow(k) <= min_size {
            k += 1;
        }
        Self::of_degree(base, k as usize)
    }

    pub fn of_degree(base: PrimeField, k: usize) -> Self {
        assert!(k >= 1);
        let p = base.modulus();
        // enumerate monic polynomials of degree k, lexicographically by coefficients
        let mut coeffs = vec![0u64; k + 1];
        coeffs[k] = 1;
        loop {
            if is_irreducible(&coeffs, p) {
                return Self {
                    base,
                    modulus: coeffs,
                };
            }
            let mut i = 0;
            loop {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
                assert!(i < k, "an irreducible polynomial of every degree exists");
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    /// Constant polynomial with the given residue.
    pub fn embed(&self, r: u64) -> Vec<u64> {
        let mut v = vec![0; self.degree()];
        v[0] = r % self.base.modulus();
        v
    }

    /// The `j`-th element in a fixed enumeration (base-`p` digits of `j`).
    pub fn element(&self, mut j: u64) -> Vec<u64> {
        let p = self.base.modulus();
        let mut v = vec![0; self.degree()];
        for slot in v.iter_mut() {
            *slot = j % p;
            j /= p;
        }
        v
    }

    fn size(&self) -> u64 {
        self.base.modulus().pow(self.degree() as u32)
    }
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let dm = m.len() - 1;
    let lead_inv = PrimeField { p }.inv(&Fp(m[dm])).expect("nonzero lead").0;
    while r.len() > dm {
        let top = *r.last().unwrap();
        if top != 0 {
            let factor = top * lead_inv % p;
            let shift = r.len() - 1 - dm;
            for (i, &mi) in m.iter().enumerate() {
                let sub = factor * mi % p;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    if k == 1 {
        return true;
    }
    // trial division by every monic polynomial of degree 1..=k/2
    for d in 1..=k / 2 {
        let mut f = vec![0u64; d + 1];
        f[d] = 1;
        loop {
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
            let mut i = 0;
            let mut done = false;
            loop {
                f[i] += 1;
                if f[i] < p {
                    break;
                }
                f[i] = 0;
                i += 1;
                if i == d {
                    done = true;
                    break;
                }
            }
            if done {
                break;
            }
        }
    }
    true
}

impl Field for ExtensionField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.degree()]
    }
    fn one(&self) -> Vec<u64> {
        self.embed(1)
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.base.modulus();
        a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.base.modulus();
        a.iter().zip(b).map(|(x, y)| (x + p - y) % p).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.base.modulus();
        let k = self.degree();
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, p);
        r.resize(k, 0);
        r
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        let p = self.base.modulus();
        a.iter().map(|x| (p - x) % p).collect()
    }
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        // a^(q-2) in a field of order q
        let mut exp = self.size() - 2;
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        Some(acc)
    }
    fn from_i64(&self, v: i64) -> Vec<u64> {
        self.embed(self.base.from_i64(v).0)
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Vec<u64>, FieldError> {
        Ok(self.embed(self.base.from_ratio(num, den)?.0))
    }
    fn characteristic(&self) -> u64 {
        self.base.modulus()
    }
    fn order(&self) -> Option<u64> {
        Some(self.size())
    }
    fn format(&self, a: &Vec<u64>) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}X"),
                _ => format!("{c}X^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
    fn name(&self) -> String {
        format!("F_{}^{}", self.base.modulus(), self.degree())
    }
}

/// Runtime choice of coefficient field, as read from input files and flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<Self, FieldError> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "q" | "rationals" | "rational" | "0" => Ok(Self::Rationals),
            other => {
                let digits = other.strip_prefix("prime").unwrap_or(other).trim();
                let digits = digits.strip_prefix("f_").unwrap_or(digits);
                let p: u64 = digits
                    .parse()
                    .map_err(|_| FieldError::Unrecognised(t.to_string()))?;
                PrimeField::new(p)?;
                Ok(Self::Prime(p))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rationals => write!(f, "Q"),
            Self::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// Parse `n` or `n/d` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let bad = || FieldError::BadScalar(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(FieldError::ZeroDenominator);
    }
    if d.is_negative() {
        return Ok(BigRational::new(-n, -d));
    }
    Ok(BigRational::new(n, d))
}
