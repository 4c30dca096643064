//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.
//!
//! Every scalar in this crate -- quantum integers, twists, S-matrix entries,
//! Frobenius-Perron dimensions -- is a [`Cyc`]: a rational linear combination
//! of powers of a primitive `m`-th root of unity, kept in canonical form by
//! reduction modulo the `m`-th cyclotomic polynomial. No floating point is
//! stored; complex embeddings are computed on demand for display and
//! tolerance checks.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

fn phi_cache() -> &'static RwLock<HashMap<u32, Vec<BigInt>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Integer Euler totient.
pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients (low degree first) of the m-th cyclotomic polynomial.
///
/// Computed by repeatedly dividing `x^m - 1` by the cyclotomic polynomials of
/// the proper divisors of `m`; results are memoised process-wide.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    if let Some(p) = phi_cache().read().unwrap().get(&m) {
        return p.clone();
    }
    let poly = if m == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^m - 1
        let mut num = vec![BigInt::zero(); (m + 1) as usize];
        num[0] = BigInt::from(-1);
        num[m as usize] = BigInt::one();
        for d in 1..m {
            if m % d == 0 {
                let div = cyclotomic_polynomial(d);
                num = poly_div_exact(&num, &div);
            }
        }
        num
    };
    phi_cache().write().unwrap().insert(m, poly.clone());
    poly
}

/// Exact division of integer polynomials (low degree first); panics if the
/// division leaves a remainder, which cannot happen for cyclotomic factors.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone() / den[dd].clone();
        quot[k] = c.clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "polynomial division not exact");
    quot
}

/// An exact element of the cyclotomic field `Q(zeta_m)`.
///
/// Stored as a polynomial in `zeta_m` of degree below `phi(m)`, reduced
/// modulo the m-th cyclotomic polynomial: that representation is unique per
/// conductor, so equality lifts both sides to the least common conductor and
/// compares canonical forms there.
#[derive(Clone)]
pub struct Cyc {
    conductor: u32,
    /// exponent -> coefficient, all exponents `< phi(conductor)`, no zeros.
    coeffs: BTreeMap<u32, BigRational>,
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let l = num::integer::lcm(self.conductor, other.conductor);
        self.lift(l).coeffs == other.lift(l).coeffs
    }
}
impl Eq for Cyc {}

impl Cyc {
    pub fn zero(m: u32) -> Self {
        Cyc { conductor: m.max(1), coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Cyc::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyc { conductor: 1, coeffs }
    }

    pub fn from_integer(n: i64) -> Self {
        Cyc::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Cyc::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// `zeta_m^e` in canonical form.
    pub fn root_of_unity(m: u32, e: i64) -> Self {
        assert!(m >= 1, "conductor must be positive");
        let e = e.rem_euclid(m as i64) as u32;
        let mut raw = BTreeMap::new();
        raw.insert(e, BigRational::one());
        Cyc { conductor: m, coeffs: raw }.reduced()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
            && self.coeffs.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.keys().all(|&e| e == 0)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_rational() {
            return self.coeffs.get(&0).cloned();
        }
        // The canonical form at this conductor may still hide a rational
        // value (e.g. zeta_3 + zeta_3^2 = -1 is already reduced; sums are
        // not). Reduction keeps degree < phi(m), so non-rational canonical
        // forms are genuinely irrational.
        None
    }

    /// Reduce the stored polynomial modulo the cyclotomic polynomial.
    fn reduced(mut self) -> Self {
        let m = self.conductor;
        let deg = euler_phi(m);
        // First fold exponents mod m.
        let mut folded: BTreeMap<u32, BigRational> = BTreeMap::new();
        for (e, c) in std::mem::take(&mut self.coeffs) {
            if c.is_zero() {
                continue;
            }
            *folded.entry(e % m).or_insert_with(BigRational::zero) += c;
        }
        let max_e = folded.keys().next_back().copied().unwrap_or(0);
        if max_e < deg {
            folded.retain(|_, c| !c.is_zero());
            self.coeffs = folded;
            return self;
        }
        let phi = cyclotomic_polynomial(m);
        let mut dense = vec![BigRational::zero(); (max_e + 1) as usize];
        for (e, c) in folded {
            dense[e as usize] = c;
        }
        // Polynomial remainder by phi (monic of degree `deg`).
        for k in (deg as usize..dense.len()).rev() {
            if dense[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut dense[k], BigRational::zero());
            for (j, pj) in phi.iter().enumerate().take(deg as usize) {
                if !pj.is_zero() {
                    dense[k - deg as usize + j] -= &c * BigRational::from_integer(pj.clone());
                }
            }
        }
        let mut coeffs = BTreeMap::new();
        for (e, c) in dense.into_iter().enumerate().take(deg as usize) {
            if !c.is_zero() {
                coeffs.insert(e as u32, c);
            }
        }
        self.coeffs = coeffs;
        self
    }

    /// Re-express in the larger conductor `m2` (requires `conductor | m2`).
    pub fn lift(&self, m2: u32) -> Self {
        assert!(m2 % self.conductor == 0, "lift target must be a multiple of the conductor");
        if m2 == self.conductor {
            return self.clone();
        }
        let k = m2 / self.conductor;
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, c)| (e * k, c.clone()))
            .collect();
        Cyc { conductor: m2, coeffs }.reduced()
    }

    fn common(a: &Cyc, b: &Cyc) -> (Cyc, Cyc) {
        if a.conductor == b.conductor {
            return (a.clone(), b.clone());
        }
        let l = num::integer::lcm(a.conductor, b.conductor);
        (a.lift(l), b.lift(l))
    }

    pub fn add(&self, other: &Cyc) -> Cyc {
        let (mut a, b) = Cyc::common(self, other);
        for (e, c) in b.coeffs {
            let entry = a.coeffs.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        a.coeffs.retain(|_, c| !c.is_zero());
        a
    }

    pub fn sub(&self, other: &Cyc) -> Cyc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyc {
        let coeffs = self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect();
        Cyc { conductor: self.conductor, coeffs }
    }

    pub fn mul(&self, other: &Cyc) -> Cyc {
        let (a, b) = Cyc::common(self, other);
        let mut raw: BTreeMap<u32, BigRational> = BTreeMap::new();
        for (&ea, ca) in &a.coeffs {
            for (&eb, cb) in &b.coeffs {
                let e = (ea + eb) % a.conductor;
                *raw.entry(e).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        Cyc { conductor: a.conductor, coeffs: raw }.reduced()
    }

    pub fn scale(&self, r: &BigRational) -> Cyc {
        if r.is_zero() {
            return Cyc::zero(self.conductor);
        }
        let coeffs = self.coeffs.iter().map(|(&e, c)| (e, c * r)).collect();
        Cyc { conductor: self.conductor, coeffs }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// `Q[x]/(Phi_m)`. Panics on zero.
    pub fn inv(&self) -> Cyc {
        assert!(!self.is_zero(), "division by zero cyclotomic value");
        let m = self.conductor;
        let deg = euler_phi(m) as usize;
        let phi: Vec<BigRational> = cyclotomic_polynomial(m)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let mut a = vec![BigRational::zero(); deg + 1];
        a[..].clone_from_slice(&phi[..deg + 1]);
        let mut b = vec![BigRational::zero(); deg.max(1)];
        for (&e, c) in &self.coeffs {
            b[e as usize] = c.clone();
        }
        // extended gcd: s*phi + t*b = gcd; we want t with t*b = 1 mod phi
        let (_g, _s, t) = poly_ext_gcd(&a, &b);
        let mut coeffs = BTreeMap::new();
        for (e, c) in t.into_iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(e as u32, c);
            }
        }
        let cand = Cyc { conductor: m, coeffs }.reduced();
        let check = cand.mul(self);
        // gcd was a nonzero constant; normalise so the product is exactly 1.
        let scale = check
            .as_rational()
            .expect("gcd of an element with the cyclotomic polynomial must be a constant");
        cand.scale(&scale.recip())
    }

    pub fn pow(&self, n: i64) -> Cyc {
        if n == 0 {
            return Cyc::one();
        }
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut acc = Cyc::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// The Galois automorphism `zeta_m -> zeta_m^k` (requires `gcd(k, m) = 1`).
    pub fn galois(&self, k: u32) -> Cyc {
        let m = self.conductor;
        assert!(num::integer::gcd(k % m, m) == 1 || m == 1, "galois exponent must be coprime");
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, c)| ((e as u64 * k as u64 % m as u64) as u32, c.clone()))
            .fold(BTreeMap::new(), |mut acc: BTreeMap<u32, BigRational>, (e, c)| {
                *acc.entry(e).or_insert_with(BigRational::zero) += c;
                acc
            });
        Cyc { conductor: m, coeffs }.reduced()
    }

    /// Complex conjugation (`zeta -> zeta^room{-1}`).
    pub fn conj(&self) -> Cyc {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    /// Complex embedding under `zeta_m -> exp(2*pi*i/m)`.
    pub fn embed(&self) -> (f64, f64) {
        let m = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (&e, c) in &self.coeffs {
            let cf = rational_to_f64(c);
            let theta = 2.0 * std::f64::consts::PI * (e as f64) / m;
            re += cf * theta.cos();
            im += cf * theta.sin();
        }
        (re, im)
    }

    /// Magnitude of the complex embedding.
    pub fn abs_embed(&self) -> f64 {
        let (re, im) = self.embed();
        (re * re + im * im).sqrt()
    }

    /// Exact sign of a real cyclotomic value. Panics if the value is not
    /// real (imaginary part of the embedding detectably nonzero) or if the
    /// numeric evaluation cannot separate it from zero.
    pub fn real_sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let (re, im) = self.embed();
        // conservative error bound: |coeffs|_1 * eps per trig evaluation
        let l1: f64 = self.coeffs.values().map(rational_to_f64).map(f64::abs).sum();
        let bound = l1 * 1e-12 + 1e-300;
        assert!(
            im.abs() <= bound.max(1e-9),
            "real_sign called on a non-real value (im = {im})"
        );
        assert!(
            re.abs() > bound,
            "real_sign could not separate value from zero (re = {re}, bound = {bound})"
        );
        if re > 0.0 {
            1
        } else {
            -1
        }
    }

    /// Textual form `cyc(m; e0:c0, e1:c1, ...)` with rational coefficients.
    pub fn serialize(&self) -> String {
        let body = self
            .coeffs
            .iter()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect::<Vec<_>>()
            .join(", ");
        format!("cyc({}; {})", self.conductor, body)
    }

    /// Inverse of [`Cyc::serialize`]; exact round trip.
    pub fn parse(s: &str) -> Result<Cyc, CycParseError> {
        let s = s.trim();
        let inner = s
            .strip_prefix("cyc(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or(CycParseError::Shape)?;
        let (m_str, rest) = inner.split_once(';').ok_or(CycParseError::Shape)?;
        let m: u32 = m_str.trim().parse().map_err(|_| CycParseError::Number)?;
        let mut coeffs = BTreeMap::new();
        for part in rest.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (e_str, c_str) = part.split_once(':').ok_or(CycParseError::Shape)?;
            let e: u32 = e_str.trim().parse().map_err(|_| CycParseError::Number)?;
            let c = parse_rational(c_str.trim()).ok_or(CycParseError::Number)?;
            if !c.is_zero() {
                coeffs.insert(e, c);
            }
        }
        Ok(Cyc { conductor: m.max(1), coeffs }.reduced())
    }
}

/// Extended Euclid over `Q[x]` (dense, low degree first):
/// returns `(g, s, t)` with `s*a + t*b = g`.
fn poly_ext_gcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    fn deg(p: &[BigRational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
        while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
            p.pop();
        }
        p
    }
    fn poly_sub_mul(r: &mut Vec<BigRational>, q: &[BigRational], d: &[BigRational]) {
        // r -= q * d
        let need = q.len() + d.len();
        if r.len() < need {
            r.resize(need, BigRational::zero());
        }
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, dj) in d.iter().enumerate() {
                if !dj.is_zero() {
                    r[i + j] -= qi * dj;
                }
            }
        }
    }
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    let mut s0 = vec![BigRational::one()];
    let mut s1 = vec![BigRational::zero()];
    let mut t0 = vec![BigRational::zero()];
    let mut t1 = vec![BigRational::one()];
    while deg(&r1).is_some() {
        let d1 = deg(&r1).unwrap();
        let d0 = match deg(&r0) {
            Some(d) => d,
            None => break,
        };
        if d0 < d1 {
            std::mem::swap(&mut r0, &mut r1);
            std::mem::swap(&mut s0, &mut s1);
            std::mem::swap(&mut t0, &mut t1);
            continue;
        }
        // long division r0 = q*r1 + rem
        let mut rem = r0.clone();
        let mut q = vec![BigRational::zero(); d0 - d1 + 1];
        for k in (0..=d0 - d1).rev() {
            if rem.len() <= k + d1 || rem[k + d1].is_zero() {
                continue;
            }
            let c = &rem[k + d1] / &r1[d1];
            q[k] = c.clone();
            let mono = {
                let mut m = vec![BigRational::zero(); k + 1];
                m[k] = c;
                m
            };
            poly_sub_mul(&mut rem, &mono, &r1);
        }
        let rem = trim(rem);
        // (s0,t0),(s1,t1) update
        let mut s2 = s0.clone();
        poly_sub_mul(&mut s2, &q, &s1);
        let mut t2 = t0.clone();
        poly_sub_mul(&mut t2, &q, &t1);
        r0 = r1;
        r1 = if rem.iter().all(|c| c.is_zero()) { vec![BigRational::zero()] } else { rem };
        s0 = s1;
        s1 = trim(s2);
        t0 = t1;
        t1 = trim(t2);
    }
    (r0, s0, t0)
}

fn parse_rational(s: &str) -> Option<BigRational> {
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        Some(BigRational::new(p, q))
    } else {
        let p: BigInt = s.trim().parse().ok()?;
        Some(BigRational::from_integer(p))
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    // good enough for our magnitudes; numerators stay well under 10^300
    let n = r.numer();
    let d = r.denom();
    let nf = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
    nf / df
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CycParseError {
    #[error("expected cyc(m; e:c, ...)")]
    Shape,
    #[error("malformed number")]
    Number,
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.serialize())
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        write!(f, "{}", self.serialize())
    }
}

impl std::ops::Add for &Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        Cyc::add(self, rhs)
    }
}
impl std::ops::Sub for &Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        Cyc::sub(self, rhs)
    }
}
impl std::ops::Mul for &Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        Cyc::mul(self, rhs)
    }
}
impl std::ops::Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc::neg(self)
    }
}

/// A Galois automorphism `zeta_m -> zeta_m^k` of `Q(zeta_m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaloisMap {
    pub conductor: u32,
    pub exponent: u32,
}

impl GaloisMap {
    pub fn new(conductor: u32, exponent: u32) -> Result<Self, GaloisError> {
        let e = exponent % conductor.max(1);
        if conductor == 0 {
            return Err(GaloisError::BadConductor);
        }
        if conductor > 1 && num::integer::gcd(e, conductor) != 1 {
            return Err(GaloisError::NotCoprime { conductor, exponent });
        }
        Ok(GaloisMap { conductor, exponent: if conductor == 1 { 0 } else { e } })
    }

    pub fn identity(conductor: u32) -> Self {
        GaloisMap { conductor, exponent: 1 % conductor.max(2) }
    }

    pub fn compose(&self, other: &GaloisMap) -> Result<Self, GaloisError> {
        if self.conductor != other.conductor {
            return Err(GaloisError::ConductorMismatch);
        }
        GaloisMap::new(
            self.conductor,
            ((self.exponent as u64 * other.exponent as u64) % self.conductor as u64) as u32,
        )
    }

    pub fn apply(&self, x: &Cyc) -> Cyc {
        assert!(
            self.conductor % x.conductor() == 0,
            "value must live in a subfield of the map's field; lift first"
        );
        let lifted = x.lift(self.conductor);
        lifted.galois(self.exponent)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GaloisError {
    #[error("conductor must be positive")]
    BadConductor,
    #[error("exponent {exponent} not invertible modulo {conductor}")]
    NotCoprime { conductor: u32, exponent: u32 },
    #[error("maps act on different fields")]
    ConductorMismatch,
}

/// The quantum integer `[n]_q = (q^n - q^-n)/(q - q^-1)`.
///
/// Errors when `q = q^-1` (i.e. `q = +-1`), where the defining ratio is
/// singular.
pub fn quantum_integer(n: i64, q: &Cyc) -> Result<Cyc, QuantumError> {
    let qinv = q.inv();
    let den = q.sub(&qinv);
    if den.is_zero() {
        return Err(QuantumError::DivisionByZero);
    }
    let num = q.pow(n).sub(&qinv.pow(n));
    Ok(num.mul(&den.inv()))
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum QuantumError {
    #[error("quantum integer undefined at q = +-1")]
    DivisionByZero,
}

/// `2 cos(2*pi*k/m)` as an exact cyclotomic value: `zeta_m^k + zeta_m^-k`.
pub fn two_cos(m: u32, k: i64) -> Cyc {
    Cyc::root_of_unity(m, k).add(&Cyc::root_of_unity(m, -k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i_unit() -> Cyc {
        Cyc::root_of_unity(4, 1)
    }

    #[test]
    fn root_of_unity_basics() {
        assert!(Cyc::root_of_unity(1, 0).is_one());
        let i = i_unit();
        assert_eq!(i.mul(&i), Cyc::from_integer(-1));
        // q of the E6-centre presentation: e^{i pi/12} = zeta_24
        let z = Cyc::root_of_unity(24, 1);
        let (re, im) = z.embed();
        assert!((re - (std::f64::consts::PI / 12.0).cos()).abs() < 1e-12);
        assert!((im - (std::f64::consts::PI / 12.0).sin()).abs() < 1e-12);
        assert!(z.pow(24).is_one());
        assert_eq!(Cyc::root_of_unity(48, 2), z);
    }

    #[test]
    fn quantum_integer_examples() {
        let q = Cyc::root_of_unity(24, 1); // e^{i pi/12}
        assert!(quantum_integer(1, &q).unwrap().is_one());
        // [2]_{e^{i pi/12}} ~ 1.932
        let two = quantum_integer(2, &q).unwrap();
        assert!((two.embed().0 - 1.932).abs() < 1e-3);
        // [3]_{e^{i pi/4}} = 1 by the direct formula
        let q8 = Cyc::root_of_unity(8, 1);
        let three = quantum_integer(3, &q8).unwrap();
        let direct = q8.pow(3).sub(&q8.pow(-3)).mul(&q8.sub(&q8.inv()).inv());
        assert_eq!(three, direct);
        assert!(three.is_one());
        assert_eq!(
            quantum_integer(5, &Cyc::from_integer(1)),
            Err(QuantumError::DivisionByZero)
        );
    }

    #[test]
    fn embed_examples() {
        assert!((Cyc::one().embed().0 - 1.0).abs() < 1e-14);
        let q8 = Cyc::root_of_unity(16, 1);
        let v = quantum_integer(2, &q8.pow(2)).unwrap();
        assert!((v.embed().0 - 1.414).abs() < 1e-3);
        let q24 = Cyc::root_of_unity(24, 1);
        let four = quantum_integer(4, &q24).unwrap();
        assert!((four.embed().0 - 3.346).abs() < 1e-3);
    }

    #[test]
    fn galois_examples() {
        let x = quantum_integer(2, &Cyc::root_of_unity(10, 1)).unwrap();
        let id = GaloisMap::identity(10);
        assert_eq!(id.apply(&x), x);
        // conjugation sends i to -i
        let i = i_unit();
        assert_eq!(i.conj(), i.neg());
        // k = 3 on conductor 10: [2] at e^{i pi/5} -> [2] at e^{3 i pi/5}
        let sigma = GaloisMap::new(10, 3).unwrap();
        let conj = sigma.apply(&x);
        let expect = quantum_integer(2, &Cyc::root_of_unity(10, 3)).unwrap();
        assert_eq!(conj, expect);
    }

    #[test]
    fn galois_composition_law() {
        let a = GaloisMap::new(15, 2).unwrap();
        let b = GaloisMap::new(15, 4).unwrap();
        let c = a.compose(&b).unwrap();
        assert_eq!(c.exponent, 8);
        let x = Cyc::root_of_unity(15, 1).add(&Cyc::root_of_unity(15, 7));
        assert_eq!(c.apply(&x), a.apply(&b.apply(&x)));
    }

    #[test]
    fn field_laws() {
        let a = Cyc::root_of_unity(12, 1).add(&Cyc::ratio(1, 2));
        let b = Cyc::root_of_unity(12, 5).sub(&Cyc::from_integer(3));
        let c = Cyc::root_of_unity(12, 7);
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert_eq!(a.mul(&a.inv()), Cyc::one());
        assert_eq!(b.mul(&b.inv()), Cyc::one());
    }

    #[test]
    fn quantum_recurrence() {
        // [n+1] = [2][n] - [n-1] at assorted roots
        for (m, k) in [(10u32, 1i64), (14, 3), (24, 1), (16, 3), (36, 1), (18, 5), (20, 3), (30, 7), (22, 1), (26, 3)] {
            let q = Cyc::root_of_unity(m, k);
            if q.sub(&q.inv()).is_zero() {
                continue;
            }
            let two = quantum_integer(2, &q).unwrap();
            for n in 1..=30i64 {
                let lhs = quantum_integer(n + 1, &q).unwrap();
                let rhs = two
                    .mul(&quantum_integer(n, &q).unwrap())
                    .sub(&quantum_integer(n - 1, &q).unwrap());
                assert_eq!(lhs, rhs, "recurrence failed at m={m} k={k} n={n}");
            }
        }
    }

    #[test]
    fn serialization_round_trip() {
        let x = Cyc::root_of_unity(20, 3)
            .scale(&BigRational::new(BigInt::from(7), BigInt::from(3)))
            .add(&Cyc::ratio(-1, 2));
        let s = x.serialize();
        assert_eq!(Cyc::parse(&s).unwrap(), x);
        assert!(Cyc::parse("nope").is_err());
    }

    #[test]
    fn lift_preserves_value_and_equality_crosses_conductors() {
        let x = Cyc::root_of_unity(6, 1);
        let y = x.lift(24);
        assert_eq!(x, y);
        assert_eq!(x.add(&Cyc::zero(8)), x);
    }

    #[test]
    fn real_sign_works() {
        let sqrt3 = two_cos(12, 1); // 2cos(pi/6) = sqrt(3)
        assert_eq!(sqrt3.real_sign(), 1);
        assert_eq!(sqrt3.neg().real_sign(), -1);
        assert_eq!(Cyc::zero(5).real_sign(), 0);
    }
}
