//! Hilbert function, Hilbert polynomial, and index of regularity of a
//! monomial ideal, computed from a minimal involutive basis.
//!
//! The involutive cones of a minimal basis partition the ideal's monomials,
//! so the number of degree-s monomials inside the ideal is the sum of the
//! cone counts C(s - deg(u) + k_u - 1, k_u - 1) over the basis, with k_u the
//! number of multiplicative variables of u.  The Hilbert function counts the
//! standard monomials of the quotient: HF(s) = C(s+n-1, n-1) minus the ideal
//! count.  Everything is exact integer or rational arithmetic.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{BigUint, One, Signed, Zero};

use crate::completion::CompletionResult;
use crate::monomial::MonomialSet;

/// Cone data extracted from a completed basis: arity plus one
/// (degree, multiplicative-count) pair per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    arity: usize,
    cones: Vec<(u32, u32)>,
}

impl HilbertData {
    /// Reads the cones off a completion result.  The basis must be a minimal
    /// involutive basis with its separations, so that the cones are disjoint
    /// and jointly cover the ideal.
    pub fn from_result(result: &CompletionResult) -> Self {
        let cones = result
            .basis
            .iter()
            .zip(result.separations.iter())
            .map(|(u, sep)| (u.degree(), sep.multiplicative_count()))
            .collect();
        HilbertData { arity: result.basis.arity(), cones }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of degree-s monomials of the ideal.
    pub fn ideal_count(&self, s: u32) -> BigUint {
        let mut total = BigInt::zero();
        for &(deg, k) in &self.cones {
            total += cone_count(s, deg, k);
        }
        total.to_biguint().expect("cone counts are non-negative")
    }

    /// The Hilbert function: number of degree-s monomials outside the ideal.
    pub fn hilbert_function(&self, s: u32) -> BigUint {
        let n = self.arity as u32;
        let ambient = binomial(s as i64 + n as i64 - 1, n as i64 - 1);
        let standard = ambient - BigInt::from(self.ideal_count(s));
        standard
            .to_biguint()
            .expect("disjoint cones never exceed the ambient count")
    }

    /// Hilbert function values for s = 0..=bound.
    pub fn table(&self, bound: u32) -> Vec<BigUint> {
        (0..=bound).map(|s| self.hilbert_function(s)).collect()
    }

    /// The Hilbert polynomial and the index of regularity: the least degree
    /// from which the polynomial agrees with the Hilbert function.
    pub fn hilbert_polynomial(&self) -> (HilbertPolynomial, u32) {
        let n = self.arity;
        // P(s) = C(s+n-1, n-1) - sum of cone polynomials.  A cone with k = 0
        // contributes a single monomial, which a polynomial cannot see.
        let mut poly = binomial_polynomial(n as i64 - 1, n as i64 - 1);
        for &(deg, k) in &self.cones {
            if k > 0 {
                let cone = binomial_polynomial(k as i64 - 1 - deg as i64, k as i64 - 1);
                for (c, d) in poly.coeffs.iter_mut().zip(&cone.coeffs) {
                    *c -= d;
                }
            }
        }
        poly.trim();

        // Beyond every cone's agreement threshold the polynomial provably
        // matches; walk downwards to find the least such degree.
        let start = self
            .cones
            .iter()
            .map(|&(deg, k)| if k == 0 { deg + 1 } else { (deg + 1).saturating_sub(k) })
            .max()
            .unwrap_or(0);
        let mut regularity = start;
        for s in (0..start).rev() {
            if poly.eval(s) == BigInt::from(self.hilbert_function(s)) {
                regularity = s;
            } else {
                break;
            }
        }
        (poly, regularity)
    }
}

/// Monomials of degree s in the cone of an element of degree `deg` with `k`
/// multiplicative variables.  A zero-dimensional cone holds exactly its tip.
fn cone_count(s: u32, deg: u32, k: u32) -> BigInt {
    if s < deg {
        return BigInt::zero();
    }
    if k == 0 {
        return if s == deg { BigInt::one() } else { BigInt::zero() };
    }
    binomial((s - deg) as i64 + k as i64 - 1, k as i64 - 1)
}

/// C(a, b) with C(a, b) = 0 for a < b or b < 0, C(a, 0) = 1 for a >= 0.
fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    num::integer::binomial(BigInt::from(a), BigInt::from(b))
}

/// The polynomial s -> C(s + shift, m) of degree m, exact rational
/// coefficients.
fn binomial_polynomial(shift: i64, m: i64) -> HilbertPolynomial {
    assert!(m >= 0);
    // C(s + shift, m) = (s + shift)(s + shift - 1)...(s + shift - m + 1) / m!
    let mut coeffs = vec![BigRational::one()];
    for j in 0..m {
        let root = BigRational::from(BigInt::from(shift - j));
        // multiply by (s + shift - j)
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] += c * &root;
        }
        coeffs = next;
    }
    let mut factorial = BigRational::one();
    for j in 1..=m {
        factorial *= BigRational::from(BigInt::from(j));
    }
    for c in &mut coeffs {
        *c /= &factorial;
    }
    let mut poly = HilbertPolynomial { coeffs };
    poly.trim();
    poly
}

/// A polynomial in s with exact rational coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    pub coeffs: Vec<BigRational>,
}

impl HilbertPolynomial {
    pub fn zero() -> Self {
        HilbertPolynomial { coeffs: Vec::new() }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Exact evaluation; Hilbert polynomials take integer values at
    /// integers.
    pub fn eval(&self, s: u32) -> BigInt {
        let s = BigRational::from(BigInt::from(s));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &s + c;
        }
        assert!(acc.is_integer(), "Hilbert polynomial is integer-valued");
        acc.to_integer()
    }
}

/// Readable form like `s^2/2 + 3*s/2 + 1`, exact fractions throughout.
impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = if c.is_negative() { -c } else { c.clone() };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let numer = magnitude.numer();
            let denom = magnitude.denom();
            if power == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            let var = if power == 1 { "s".to_string() } else { format!("s^{power}") };
            match (numer.is_one(), denom.is_one()) {
                (true, true) => write!(f, "{var}")?,
                (false, true) => write!(f, "{numer}*{var}")?,
                (true, false) => write!(f, "{var}/{denom}")?,
                (false, false) => write!(f, "{numer}*{var}/{denom}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The brute-force counting oracle refuses absurdly large enumerations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("enumeration of C({} + {} - 1, {} - 1) = {count} monomials exceeds the 10^7 guard", .s, .n, .n)]
pub struct EnumerationTooLarge {
    pub s: u32,
    pub n: usize,
    pub count: BigUint,
}

/// Counts the degree-s monomials not conventionally divisible by any element
/// of U, by direct enumeration.  Independent of separations and cones; used
/// as the oracle for [`HilbertData::hilbert_function`].
pub fn brute_force_hf(set: &MonomialSet, s: u32) -> Result<u64, EnumerationTooLarge> {
    let n = set.arity();
    let total = binomial(s as i64 + n as i64 - 1, n as i64 - 1)
        .to_biguint()
        .expect("binomial is non-negative");
    if total > BigUint::from(10_000_000u64) {
        return Err(EnumerationTooLarge { s, n, count: total });
    }
    let divisors: Vec<&[u32]> = set.iter().map(|u| u.exponents()).collect();
    let mut prefix = vec![0u32; n];
    Ok(count_standard(&divisors, &mut prefix, 0, s))
}

/// Recursive enumeration over exponent prefixes.  `alive` keeps the
/// divisors still compatible with the chosen prefix; once none remain the
/// whole subtree is standard and counted in closed form, and a divisor with
/// no remaining positive exponents kills the subtree.
fn count_standard(alive: &[&[u32]], prefix: &mut [u32], var: usize, remaining: u32) -> u64 {
    let n = prefix.len();
    if alive
        .iter()
        .any(|d| d[var..].iter().all(|&e| e == 0) && fits(d, prefix, var))
    {
        return 0;
    }
    let still: Vec<&[u32]> = alive
        .iter()
        .copied()
        .filter(|d| fits(d, prefix, var))
        .collect();
    if still.is_empty() {
        // Everything below is standard: compositions of `remaining` into the
        // free positions.
        let free = (n - var) as u64;
        return compositions(remaining as u64, free);
    }
    if var == n - 1 {
        prefix[var] = remaining;
        let standard = !still.iter().any(|d| d[var] <= remaining);
        prefix[var] = 0;
        return standard as u64;
    }
    let mut count = 0;
    for e in 0..=remaining {
        prefix[var] = e;
        count += count_standard(&still, prefix, var + 1, remaining - e);
    }
    prefix[var] = 0;
    count
}

fn fits(divisor: &[u32], prefix: &[u32], upto: usize) -> bool {
    divisor[..upto].iter().zip(prefix).all(|(&d, &p)| d <= p)
}

/// Number of ways to write `total` as an ordered sum of `parts` non-negative
/// integers.
fn compositions(total: u64, parts: u64) -> u64 {
    if parts == 0 {
        return (total == 0) as u64;
    }
    // C(total + parts - 1, parts - 1) is guarded to stay below 10^7.
    let mut num = 1u64;
    for i in 0..(parts - 1) {
        num = num * (total + parts - 1 - i) / (i + 1);
    }
    num
}
