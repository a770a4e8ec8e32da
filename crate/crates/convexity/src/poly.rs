//! Exact polynomials over the rationals, with Sturm-sequence root counting.
//!
//! Everything here is exact: coefficients are `BigRational`, Euclidean
//! division and gcds stay in `Q[t]`, and real-rootedness is decided by sign
//! variations of a Sturm chain rather than by floating-point root finding.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

/// A polynomial in one variable `t` with rational coefficients.
///
/// `coeffs[k]` is the coefficient of `t^k`; trailing zeros are trimmed, so the
/// zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Poly {
        Poly::constant(rat(1))
    }

    pub fn constant(c: BigRational) -> Poly {
        Poly::new(vec![c])
    }

    /// `t` itself.
    pub fn t() -> Poly {
        Poly::from_int_coeffs(&[0, 1])
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigint_coeffs(coeffs: &[BigInt]) -> Poly {
        Poly::new(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&rat(x))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_int(&self, c: &BigInt) -> Poly {
        self.scale(&BigRational::from_integer(c.clone()))
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    /// Substitutes `t -> -t`.
    pub fn compose_neg(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division: returns `(q, r)` with `self = q*div + r` and
    /// `deg r < deg div`.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            quo[k] = c.clone();
            for (i, b) in div.coeffs.iter().enumerate() {
                let v = rem[k + i].clone() - &c * b;
                rem[k + i] = v;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly::new(quo), Poly::new(rem))
    }

    /// Monic gcd of `self` and `other`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_one() => {
                let inv = BigRational::one() / l;
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn squarefree_part(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return Ok(self.clone());
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        Ok(q)
    }

    /// Binomial coefficient `C(t, j)` as a polynomial in `t`.
    pub fn binomial_t(j: usize) -> Poly {
        let mut p = Poly::one();
        for i in 0..j {
            p = p.mul(&Poly::from_int_coeffs(&[-(i as i64), 1]));
        }
        let mut fact = BigRational::one();
        for i in 1..=j {
            fact *= rat(i as i64);
        }
        p.scale(&(BigRational::one() / fact))
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if k == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn sign_at_plus_infinity(p: &Poly) -> i32 {
    match p.leading() {
        None => 0,
        Some(l) => {
            if l.is_positive() {
                1
            } else {
                -1
            }
        }
    }
}

fn sign_at_minus_infinity(p: &Poly) -> i32 {
    let s = sign_at_plus_infinity(p);
    match p.degree() {
        Some(d) if d % 2 == 1 => -s,
        _ => s,
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0i32;
    let mut v = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Sturm chain of a squarefree polynomial (the caller is responsible for
/// squarefreeness; use [`Poly::squarefree_part`]).
fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(r.neg());
    }
}

/// Number of distinct real roots of `p`, counted exactly.
///
/// ```
/// use convexity::poly::{real_root_count, Poly};
/// let p = Poly::from_int_coeffs(&[-2, 0, 1]); // t^2 - 2
/// assert_eq!(real_root_count(&p).unwrap(), 2);
/// let q = Poly::from_int_coeffs(&[1, 0, 1]); // t^2 + 1
/// assert_eq!(real_root_count(&q).unwrap(), 0);
/// ```
pub fn real_root_count(p: &Poly) -> Result<usize> {
    let sf = p.squarefree_part()?;
    if sf.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(&sf);
    let lo = variations(chain.iter().map(sign_at_minus_infinity));
    let hi = variations(chain.iter().map(sign_at_plus_infinity));
    Ok(lo - hi)
}

/// True when every complex root of `p` is real (multiplicity is irrelevant:
/// the test runs on the squarefree part).  Nonzero constants are vacuously
/// real-rooted; the zero polynomial is rejected.
///
/// ```
/// use convexity::poly::{is_real_rooted, Poly};
/// assert!(is_real_rooted(&Poly::from_int_coeffs(&[1, 15, 15, 1])).unwrap());
/// assert!(!is_real_rooted(&Poly::from_int_coeffs(&[1, 0, 1])).unwrap());
/// ```
pub fn is_real_rooted(p: &Poly) -> Result<bool> {
    let sf = p.squarefree_part()?;
    let deg = sf.degree().unwrap();
    Ok(real_root_count(&sf)? == deg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_int_coeffs(coeffs)
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = p(&[1, 2, 3]);
        let b = p(&[0, -1, 0, 4]);
        let s = a.add(&b);
        assert_eq!(s.sub(&b), a);
        let m = a.mul(&b);
        let (q, r) = m.div_rem(&a);
        assert_eq!(q, b);
        assert!(r.is_zero());
    }

    #[test]
    fn evaluation_and_derivative() {
        let f = p(&[1, -3, 0, 2]); // 2t^3 - 3t + 1
        assert_eq!(f.eval_int(2), rat(11));
        assert_eq!(f.derivative(), p(&[-3, 0, 6]));
        assert_eq!(f.compose_neg(), p(&[1, 3, 0, -2]));
    }

    #[test]
    fn binomial_t_interpolates_binomials() {
        let c3 = Poly::binomial_t(3);
        for m in 0..8i64 {
            let expect = if m >= 3 { m * (m - 1) * (m - 2) / 6 } else { 0 };
            assert_eq!(c3.eval_int(m), rat(expect));
        }
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = p(&[-1, 0, 1]); // (t-1)(t+1)
        let g = p(&[1, 1]); // t+1
        let sq = f.mul(&g); // (t-1)(t+1)^2
        assert_eq!(sq.gcd(&g), g.scale(&BigRational::one()));
        assert_eq!(sq.squarefree_part().unwrap(), f.mul(&g).div_rem(&g).0);
        assert!(Poly::zero().squarefree_part().is_err());
    }

    #[test]
    fn sturm_counts_known_roots() {
        assert_eq!(real_root_count(&p(&[0, -1, 0, 1])).unwrap(), 3); // t^3 - t
        assert_eq!(real_root_count(&p(&[1, 0, 0, 1])).unwrap(), 1); // t^3 + 1
        assert_eq!(real_root_count(&p(&[2, 1])).unwrap(), 1);
        assert_eq!(real_root_count(&p(&[5])).unwrap(), 0);
        // repeated roots are counted once
        assert_eq!(real_root_count(&p(&[1, 2, 1])).unwrap(), 1); // (t+1)^2
    }

    // A frozen suite of polynomials with known factorizations, exercising
    // irrational roots, repeated roots, complex pairs, and constants.
    #[test]
    fn real_rootedness_matches_factorizations() {
        let suite: Vec<(Poly, bool)> = vec![
            (p(&[1, 15, 15, 1]), true), // (1+t)(1+14t+t^2)
            (p(&[1, 0, 1]), false),     // t^2+1
            (p(&[0, 1]), true),
            (p(&[7]), true),
            (p(&[1, 2, 1]), true),               // (t+1)^2
            (p(&[-2, 0, 1]), true),              // t^2-2
            (p(&[0, 1, 0, 1]), false),           // t(t^2+1)
            (p(&[1, 0, 2, 0, 1]), false),        // (t^2+1)^2
            (p(&[-6, 11, -6, 1]), true),         // (t-1)(t-2)(t-3)
            (p(&[1, 0, 0, 0, 1]), false),        // t^4+1
            (p(&[1, -3, 0, 1]), true),           // t^3-3t+1, three irrational roots
            (p(&[1, 3, 2]), true),               // (2t+1)(t+2)
            (p(&[1, 1, 1]), false),              // t^2+t+1
            (p(&[-1, 0, 0, 1]), false),          // t^3-1: one real, two complex roots
            (p(&[4, 0, -5, 0, 1]), true),        // (t^2-1)(t^2-4)
            (p(&[4, 0, -4, 0, 1]), true),        // (t^2-2)^2
            (p(&[-1, 0, 0, 0, 0, 0, 1]), false), // t^6-1
            (p(&[0, 0, 1]), true),               // t^2
            (p(&[-1, 15]), true),                // 15t-1
            (p(&[6, 5, 1]), true),               // (t+2)(t+3)
        ];
        assert_eq!(suite.len(), 20);
        for (k, (poly, expect)) in suite.iter().enumerate() {
            assert_eq!(
                is_real_rooted(poly).unwrap(),
                *expect,
                "polynomial #{k}: {poly}"
            );
        }
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[1, 15, 15, 1]).to_string(), "1 + 15*t + 15*t^2 + t^3");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
