//! Exact scalar fields: prime fields GF(p) and the rationals.
//!
//! Every structure in the crate is generic over a [`Field`] value. The field
//! value carries its own parameters (the modulus for GF(p)), so all scalars
//! touched by one computation share one descriptor.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly;

/// Default characteristic for all acceptance computations.
pub const DEFAULT_PRIME: u64 = 32003;

/// Runtime tag naming a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldDescriptor {
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "rational"),
            FieldDescriptor::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rational") || s == "Q" {
            return Ok(FieldDescriptor::Rational);
        }
        let digits = s
            .strip_prefix("gf:")
            .or_else(|| s.strip_prefix("GF:"))
            .ok_or_else(|| Error::InvalidField(s.to_string()))?;
        let p: u64 = digits.parse().map_err(|_| Error::InvalidField(s.to_string()))?;
        PrimeField::new(p)?;
        Ok(FieldDescriptor::Prime(p))
    }
}

pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn descriptor(&self) -> FieldDescriptor;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// A random element; used only through explicitly seeded generators.
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem;
    /// Deterministic enumeration of distinct elements `0, 1, 2, ...`
    /// (wrapping modulo p).
    fn nth(&self, i: u64) -> Self::Elem;

    /// Sign and absolute value in the balanced representation, for printing.
    fn signed_repr(&self, a: &Self::Elem) -> (bool, String);

    /// Some root of the polynomial (coefficients low degree first), if one
    /// exists in the field.
    fn find_root(&self, poly: &[Self::Elem]) -> Option<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    fn format(&self, a: &Self::Elem) -> String {
        let (neg, abs) = self.signed_repr(a);
        if neg {
            format!("-{abs}")
        } else {
            abs
        }
    }
}

/// The prime field GF(p), elements stored as canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1 << 62)).contains(&p) || !is_prime_u64(p) {
            return Err(Error::InvalidField(format!("gf:{p}")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Symmetric lift into `(-p/2, p/2]`.
    pub fn lift(&self, a: u64) -> i128 {
        if a > self.p / 2 {
            a as i128 - self.p as i128
        } else {
            a as i128
        }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime(self.p)
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }

    fn from_rational(&self, q: &BigRational) -> Result<u64> {
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p).to_u64().unwrap_or(0);
        let den = q.denom().mod_floor(&p).to_u64().unwrap_or(0);
        if den == 0 {
            return Err(Error::ScalarNotInField(q.to_string()));
        }
        Ok(self.mul(&num, &self.pow(den, self.p - 2)))
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if self.p < (1 << 32) {
            a * b % self.p
        } else {
            ((*a as u128 * *b as u128) % self.p as u128) as u64
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn sample(&self, rng: &mut dyn RngCore) -> u64 {
        rng.next_u64() % self.p
    }

    fn nth(&self, i: u64) -> u64 {
        i % self.p
    }

    fn signed_repr(&self, a: &u64) -> (bool, String) {
        let l = self.lift(*a);
        (l < 0, l.unsigned_abs().to_string())
    }

    fn find_root(&self, poly: &[u64]) -> Option<u64> {
        poly::prime_roots(self, poly).into_iter().next()
    }
}

/// The rationals, with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalField;

/// Mersenne prime used for modular root search over the rationals.
const ROOT_SEARCH_PRIME: u64 = (1 << 61) - 1;

impl Field for RationalField {
    type Elem = BigRational;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rational
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> BigRational {
        self.from_i64((rng.next_u64() % 19) as i64 - 9)
    }

    fn nth(&self, i: u64) -> BigRational {
        BigRational::from_integer(BigInt::from(i))
    }

    fn signed_repr(&self, a: &BigRational) -> (bool, String) {
        (a.is_negative(), a.abs().to_string())
    }

    /// Rational roots are found by clearing denominators, making the
    /// polynomial monic by the substitution `t -> t / lead`, locating integer
    /// roots modulo a 61-bit prime and verifying each lift exactly. Roots whose
    /// lift exceeds the modulus bound are not found.
    fn find_root(&self, poly: &[BigRational]) -> Option<BigRational> {
        let mut coeffs: Vec<BigRational> = poly.to_vec();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return None;
        }
        if coeffs[0].is_zero() {
            return Some(BigRational::zero());
        }
        let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let d = ints.len() - 1;
        let lead = ints[d].clone();
        // g(t) = lead^(d-1) f(t / lead) is monic with integer coefficients
        let mut monic = Vec::with_capacity(d + 1);
        for (k, c) in ints.iter().enumerate() {
            if k == d {
                monic.push(BigInt::one());
            } else {
                monic.push(c * num_traits::pow(lead.clone(), d - 1 - k));
            }
        }
        let bound = monic.iter().map(|c| c.abs()).max().unwrap() + BigInt::one();
        let fp = PrimeField::new(ROOT_SEARCH_PRIME).expect("Mersenne prime");
        if bound * BigInt::from(2) >= BigInt::from(ROOT_SEARCH_PRIME) {
            return None;
        }
        let pm = BigInt::from(ROOT_SEARCH_PRIME);
        let reduced: Vec<u64> = monic.iter().map(|c| c.mod_floor(&pm).to_u64().unwrap()).collect();
        for r in poly::prime_roots(&fp, &reduced) {
            let cand = BigInt::from(fp.lift(r));
            let mut acc = BigInt::zero();
            for c in monic.iter().rev() {
                acc = acc * &cand + c;
            }
            if acc.is_zero() {
                return Some(BigRational::new(cand, lead.clone()));
            }
        }
        None
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
