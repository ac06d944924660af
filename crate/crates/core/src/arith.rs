//! Valuations, binomial gcds and exact coefficient fields.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f <= n / f {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// Largest `i` with `p^i | n`.
pub fn nu_p(p: u64, n: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::ZeroValuation);
    }
    let mut n = n;
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    Ok(v)
}

/// Valuation of a big integer; `None` for zero.
pub fn nu_p_big(p: u64, n: &BigUint) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

/// `l_p(n)`: the least `i` with `p^i > n`, or negative infinity at `n = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EllP {
    NegInfinity,
    Finite(u32),
}

impl PartialOrd for EllP {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EllP {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (EllP::NegInfinity, EllP::NegInfinity) => Ordering::Equal,
            (EllP::NegInfinity, _) => Ordering::Less,
            (_, EllP::NegInfinity) => Ordering::Greater,
            (EllP::Finite(a), EllP::Finite(b)) => a.cmp(b),
        }
    }
}

impl EllP {
    /// Whether the integer `v` is at least this value.
    pub fn le_int(self, v: u32) -> bool {
        self <= EllP::Finite(v)
    }
}

impl fmt::Display for EllP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EllP::NegInfinity => write!(f, "-inf"),
            EllP::Finite(v) => write!(f, "{v}"),
        }
    }
}

pub fn ell_p(p: u64, n: u64) -> Result<EllP> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Ok(EllP::NegInfinity);
    }
    let mut power: u128 = 1;
    let mut i = 0;
    while power <= n as u128 {
        power *= p as u128;
        i += 1;
    }
    Ok(EllP::Finite(i))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn check_sequence(a: &[u64]) -> Result<()> {
    if a.contains(&0) || a.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDecreasing(a.to_vec()));
    }
    Ok(())
}

/// `gcd{ C(a_i, k) : 1 <= k <= a_{i+1} - 1 }`, or 0 when no binomial is in range.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarnirContent(BigUint);

impl GarnirContent {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn is_divisible_by(&self, p: u64) -> bool {
        (&self.0 % BigUint::from(p)).is_zero()
    }
}

impl fmt::Display for GarnirContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn garnir_content(a: &[u64]) -> Result<GarnirContent> {
    check_sequence(a)?;
    let mut g = BigUint::zero();
    for w in a.windows(2) {
        for k in 1..w[1] {
            g = g.gcd(&binomial(w[0], k));
        }
    }
    Ok(GarnirContent(g))
}

/// `p | Gc(a)` via the valuation test `nu_p(a_i) >= l_p(a_{i+1} - 1)`.
pub fn p_divides_gc(p: u64, a: &[u64]) -> Result<bool> {
    check_sequence(a)?;
    for w in a.windows(2) {
        let need = ell_p(p, w[1] - 1)?;
        if !need.le_int(nu_p(p, w[0])?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact arithmetic in a field of characteristic 0 or `p`.
// `from_*` needs the field instance for the modulus.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + PartialEq + Eq + Send + Sync + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync;

    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_biguint(&self, n: &BigUint) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_biguint(&self, n: &BigUint) -> BigRational {
        BigRational::from_integer(BigInt::from(n.clone()))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
}

/// `Z/pZ` with elements stored as canonical representatives in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn pow(&self, a: u64, mut exp: u64) -> u64 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
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
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn from_biguint(&self, n: &BigUint) -> u64 {
        (n % BigUint::from(self.p)).to_u64().expect("residue fits in u64")
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

/// The field chosen at run time: `Q` or `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub enum CoefficientField {
    Rationals,
    Prime(PrimeField),
}

impl CoefficientField {
    /// 0 selects `Q`; a prime `p` selects `F_p`.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        match c {
            0 => Ok(CoefficientField::Rationals),
            p if is_prime(p) => Ok(CoefficientField::Prime(PrimeField::new(p)?)),
            other => Err(Error::InvalidCharacteristic(other)),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Rationals => 0,
            CoefficientField::Prime(f) => f.p(),
        }
    }

    /// Whether the integer `n` maps to zero.
    pub fn kills(&self, n: &BigUint) -> bool {
        match self {
            CoefficientField::Rationals => n.is_zero(),
            CoefficientField::Prime(f) => (n % BigUint::from(f.p())).is_zero(),
        }
    }
}

impl TryFrom<u64> for CoefficientField {
    type Error = Error;

    fn try_from(c: u64) -> Result<Self> {
        CoefficientField::from_characteristic(c)
    }
}

impl From<CoefficientField> for u64 {
    fn from(f: CoefficientField) -> u64 {
        f.characteristic()
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "Q"),
            CoefficientField::Prime(p) => write!(f, "F_{}", p.p()),
        }
    }
}

/// Run `$body` with `$f` bound to the concrete field behind a [`CoefficientField`].
#[macro_export]
macro_rules! with_field {
    ($field:expr, $f:ident => $body:expr) => {
        match $field {
            $crate::arith::CoefficientField::Rationals => {
                let $f = $crate::arith::Rationals;
                $body
            }
            $crate::arith::CoefficientField::Prime(prime) => {
                let $f = prime;
                $body
            }
        }
    };
}

/// Render a rational as `n` or `n/d`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(nu_p(3, 9), Ok(2));
        assert_eq!(nu_p(3, 10), Ok(0));
        assert_eq!(nu_p(3, 0), Err(Error::ZeroValuation));
        assert_eq!(nu_p(4, 8), Err(Error::NotPrime(4)));
        assert_eq!(ell_p(3, 2), Ok(EllP::Finite(1)));
        assert_eq!(ell_p(3, 3), Ok(EllP::Finite(2)));
        assert_eq!(ell_p(5, 0), Ok(EllP::NegInfinity));
        assert!(EllP::NegInfinity < EllP::Finite(0));
        assert!(EllP::NegInfinity.le_int(0));
    }

    #[test]
    fn garnir_contents() {
        let gc = |a: &[u64]| garnir_content(a).unwrap().value().clone();
        assert_eq!(gc(&[5]), BigUint::zero());
        assert_eq!(gc(&[2, 2]), BigUint::from(2u32));
        assert_eq!(gc(&[4, 3]), BigUint::from(2u32));
        assert_eq!(gc(&[3, 1, 1]), BigUint::zero());
        assert!(garnir_content(&[1, 2]).is_err());
        assert!(garnir_content(&[2, 0]).is_err());
    }

    #[test]
    fn valuation_criterion() {
        assert_eq!(p_divides_gc(3, &[3, 2]), Ok(true));
        assert_eq!(p_divides_gc(3, &[5]), Ok(true));
        assert_eq!(p_divides_gc(3, &[2, 2]), Ok(false));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(200, 100).to_string().len(), 59);
    }

    #[test]
    fn prime_field_axioms() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            assert_eq!(f.add(&a, &f.neg(&a)), 0);
            // Frobenius
            assert_eq!(f.pow(a, 7), a);
        }
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_i64(-1), 6);
    }

    #[test]
    fn rational_axioms() {
        let q = Rationals;
        let a = q.from_i64(-3);
        assert_eq!(q.mul(&a, &q.inv(&a).unwrap()), q.one());
        assert!(q.is_zero(&q.add(&a, &q.neg(&a))));
        assert_eq!(format_rational(&q.inv(&a).unwrap()), "-1/3");
    }

    #[test]
    fn field_selection() {
        assert_eq!(CoefficientField::from_characteristic(0), Ok(CoefficientField::Rationals));
        assert_eq!(CoefficientField::from_characteristic(5).unwrap().characteristic(), 5);
        assert_eq!(CoefficientField::from_characteristic(6), Err(Error::InvalidCharacteristic(6)));
        let two = with_field!(CoefficientField::from_characteristic(2).unwrap(), f => f.is_zero(&f.from_i64(2)));
        assert!(two);
    }
}
