use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::FieldError;

/// Which ground field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    /// Default characteristic for spot checks.
    pub const DEFAULT_PRIME: u64 = 32003;

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p < 2 || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(FieldError::PrimeTooLarge(p));
        }
        Ok(FieldSpec::Prime { p })
    }

    /// Short label used in reports: `"Q"` or `"F_p"`.
    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rational => "Q".to_string(),
            FieldSpec::Prime { p } => format!("F_{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field, passed by reference into every arithmetic call.
///
/// Elements carry no field pointer; the context value performs the
/// arithmetic. This keeps prime-field elements at four bytes.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Fails when the denominator vanishes in the field.
    fn from_ratio(&self, r: &BigRational) -> Result<Self::Elem, FieldError>;
    /// Canonical representative as a rational (residues map to `0..p`).
    fn to_ratio(&self, a: &Self::Elem) -> BigRational;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `"num/den"` or a bare integer.
    fn format(&self, a: &Self::Elem) -> String {
        format_ratio(&self.to_ratio(a))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    /// `acc += x * y`
    fn mul_add_assign(&self, acc: &mut Self::Elem, x: &Self::Elem, y: &Self::Elem) {
        let t = self.mul(x, y);
        self.add_assign(acc, &t);
    }

    /// Rank of a dense matrix. Fields may override with a specialised
    /// elimination.
    fn dense_rank(&self, m: &super::Matrix<Self::Elem>) -> usize {
        super::dense::rref(self, m).pivots.len()
    }
}

pub fn format_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"n"`, `"-n"`, or `"n/d"`.
pub fn parse_ratio(s: &str) -> Result<BigRational, FieldError> {
    let s = s.trim();
    let bad = || FieldError::BadScalar(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(FieldError::ZeroDenominator);
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
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
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(&self, r: &BigRational) -> Result<BigRational, FieldError> {
        Ok(r.clone())
    }
    fn to_ratio(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
    fn add_assign(&self, a: &mut BigRational, b: &BigRational) {
        *a += b;
    }

    fn dense_rank(&self, m: &super::Matrix<BigRational>) -> usize {
        bareiss_rank(m)
    }
}

/// Fraction-free (Bareiss) rank: rows are scaled to integers first, then
/// eliminated with exact divisions so intermediate entries stay bounded
/// by minors of the input.
fn bareiss_rank(m: &super::Matrix<BigRational>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let row = m.row(i);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&a[rank][c] * &a[r][j] - &a[r][c] * &a[rank][j]) / &prev;
                a[r][j] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Integers modulo a prime `p < 2^31`, stored as canonical residues.
#[derive(Clone)]
pub struct PrimeField {
    p: u32,
    inverses: Option<Arc<Vec<u32>>>,
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeField({})", self.p)
    }
}

impl PartialEq for PrimeField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
    }
}

const INVERSE_TABLE_LIMIT: u32 = 1 << 20;

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        FieldSpec::prime(p)?;
        let p = p as u32;
        let inverses = (p <= INVERSE_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; p as usize];
            if p > 1 {
                t[1] = 1;
            }
            for i in 2..p as u64 {
                // inv(i) = -(p / i) * inv(p mod i)
                let q = p as u64 / i;
                let r = (p as u64 % i) as usize;
                t[i as usize] = ((p as u64 - q) * t[r] as u64 % p as u64) as u32;
            }
            Arc::new(t)
        });
        Ok(PrimeField { p, inverses })
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    fn pow(&self, mut b: u32, mut e: u64) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        let mut base = b as u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        b = acc as u32;
        b
    }

    fn reduce_big(&self, n: &BigInt) -> u32 {
        let p = BigInt::from(self.p);
        n.mod_floor(&p).to_u32().expect("residue fits")
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime { p: self.p as u64 }
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a + *b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        (*a as u64 * *b as u64 % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        Some(match &self.inverses {
            Some(t) => t[*a as usize],
            None => self.pow(*a, self.p as u64 - 2),
        })
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn from_ratio(&self, r: &BigRational) -> Result<u32, FieldError> {
        let num = self.reduce_big(r.numer());
        let den = self.reduce_big(r.denom());
        let inv = self.inv(&den).ok_or(FieldError::DenominatorVanishes {
            value: format_ratio(r),
            p: self.p as u64,
        })?;
        Ok(self.mul(&num, &inv))
    }
    fn to_ratio(&self, a: &u32) -> BigRational {
        BigRational::from_integer(BigInt::from(*a))
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
}
