//! Exact arithmetic in the ring `Z[x]/(psi)`, where `psi` is the minimal
//! polynomial of `x = 2cos(pi/L)`.
//!
//! Every value `2cos(pi/m)` with `m | L` is the Dickson polynomial `D_{L/m}`
//! evaluated at `x`, so root coordinates of a Coxeter system never leave the
//! integer ring. Signs are decided with a certified floating-point fast path
//! and an exact dyadic bisection fallback.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
#[allow(unused_imports)]
use num_traits::float::FloatCore;
use num_traits::{Signed, Zero};
use smallvec::SmallVec;

type Coeffs = SmallVec<[i64; 4]>;

/// An element of `Z[x]/(psi)`, stored as `degree` integer coefficients,
/// lowest power first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(Coeffs);

impl Scalar {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `Some(c)` when the scalar is the integer constant `c`.
    pub fn as_integer(&self) -> Option<i64> {
        if self.0[1..].iter().all(|&c| c == 0) {
            Some(self.0[0])
        } else {
            None
        }
    }

    pub fn add_assign(&mut self, other: &Scalar) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a = checked(a.checked_add(*b));
        }
    }

    pub fn sub_assign(&mut self, other: &Scalar) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a = checked(a.checked_sub(*b));
        }
    }

    pub fn neg(&self) -> Scalar {
        Scalar(self.0.iter().map(|&c| checked(c.checked_neg())).collect())
    }

    pub fn scale(&self, k: i64) -> Scalar {
        Scalar(self.0.iter().map(|&c| checked(c.checked_mul(k))).collect())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_integer() {
            return write!(f, "{c}");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{a}x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[inline]
fn checked(v: Option<i64>) -> i64 {
    v.expect("root coefficient overflowed i64")
}

/// Dyadic isolating interval `[lo, hi] / 2^shift` for the generator `x`.
#[derive(Clone, Debug)]
struct Isolation {
    lo: BigInt,
    hi: BigInt,
    shift: u32,
}

/// The coefficient ring `Z[x]/(psi)` with `x = 2cos(pi/L)`.
#[derive(Clone, Debug)]
pub struct Ring {
    level: u32,
    /// Monic minimal polynomial, lowest power first, length `degree + 1`.
    modulus: Vec<i64>,
    approx: f64,
    isolation: Isolation,
}

/// Error bound on `|x - approx|`, certified against the isolating interval.
const APPROX_EPS: f64 = 1.0 / (1u64 << 40) as f64;

impl Ring {
    /// Ring for `x = 2cos(pi/level)`. `level <= 1` gives the rational ring
    /// `Z` (modulus `x`).
    pub fn new(level: u32) -> Ring {
        let modulus = if level <= 1 {
            vec![0, 1]
        } else {
            minimal_polynomial_2cos(level)
        };
        let approx = if level <= 1 {
            0.0
        } else {
            2.0 * libm_cos(core::f64::consts::PI / level as f64)
        };
        let isolation = isolate(&modulus, approx);
        Ring {
            level: level.max(1),
            modulus,
            approx,
            isolation,
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    pub fn zero(&self) -> Scalar {
        Scalar(SmallVec::from_elem(0, self.degree()))
    }

    pub fn integer(&self, c: i64) -> Scalar {
        let mut z = self.zero();
        z.0[0] = c;
        z
    }

    pub fn one(&self) -> Scalar {
        self.integer(1)
    }

    /// The value `2cos(pi/m)`, or `None` when it does not lie in this ring.
    /// `m = 0` encodes infinity and yields `2`.
    pub fn two_cos_pi_over(&self, m: u32) -> Option<Scalar> {
        match m {
            0 => return Some(self.integer(2)),
            1 => return Some(self.integer(-2)),
            2 => return Some(self.zero()),
            3 => return Some(self.one()),
            _ => {}
        }
        if self.level % m != 0 {
            return None;
        }
        Some(self.reduce(dickson(self.level / m)))
    }

    /// Reduces an arbitrary integer polynomial modulo the minimal polynomial.
    pub fn reduce(&self, mut poly: Vec<i64>) -> Scalar {
        let d = self.degree();
        while poly.len() > d {
            let top = poly.pop().unwrap();
            if top != 0 {
                let off = poly.len() - d;
                for (i, &m) in self.modulus[..d].iter().enumerate() {
                    poly[off + i] = checked(poly[off + i].checked_sub(checked(top.checked_mul(m))));
                }
            }
        }
        poly.resize(d, 0);
        Scalar(poly.into_iter().collect())
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let d = self.degree();
        if d == 1 {
            return Scalar(SmallVec::from_elem(checked(a.0[0].checked_mul(b.0[0])), 1));
        }
        let mut prod = vec![0i64; 2 * d - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = checked(prod[i + j].checked_add(checked(x.checked_mul(y))));
            }
        }
        self.reduce(prod)
    }

    /// `acc += a * b`.
    pub fn mul_add(&self, acc: &mut Scalar, a: &Scalar, b: &Scalar) {
        if self.degree() == 1 {
            acc.0[0] = checked(acc.0[0].checked_add(checked(a.0[0].checked_mul(b.0[0]))));
        } else {
            acc.add_assign(&self.mul(a, b));
        }
    }

    /// Floating-point value, for display and diagnostics only.
    pub fn approx(&self, a: &Scalar) -> f64 {
        horner_f64(&a.0, self.approx)
    }

    /// Exact sign: `-1`, `0` or `1`.
    pub fn sign(&self, a: &Scalar) -> i32 {
        if a.is_zero() {
            return 0;
        }
        if let Some(c) = a.as_integer() {
            return c.signum() as i32;
        }
        let v = horner_f64(&a.0, self.approx);
        let mut bound = 0.0f64;
        let mut lipschitz = 0.0f64;
        for (i, &c) in a.0.iter().enumerate() {
            let c = (c as f64).abs();
            bound += c * pow_f64(2.0, i as i32) * ((i + 4) as f64);
            lipschitz += c * (i as f64) * pow_f64(3.0, i as i32 - 1);
        }
        let err = bound * f64::EPSILON * 4.0 + lipschitz * APPROX_EPS * 2.0;
        if v.abs() > err {
            return if v > 0.0 { 1 } else { -1 };
        }
        self.exact_sign(a)
    }

    fn exact_sign(&self, a: &Scalar) -> i32 {
        let d = self.degree();
        let coeffs: Vec<BigInt> = a.0.iter().map(|&c| BigInt::from(c)).collect();
        let lipschitz: BigInt = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.abs() * BigInt::from(i) * BigInt::from(3).pow(i as u32 - 1))
            .sum();
        let modulus: Vec<BigInt> = self.modulus.iter().map(|&c| BigInt::from(c)).collect();
        let Isolation {
            mut lo,
            mut hi,
            mut shift,
        } = self.isolation.clone();
        let sign_lo = eval_dyadic(&modulus, &lo, shift).signum();
        loop {
            let mid = &lo + &hi; // at shift + 1
            let mshift = shift + 1;
            // a(mid) * 2^(mshift * (d-1))
            let val = eval_dyadic(&coeffs, &mid, mshift);
            // |a(x) - a(mid)| <= L * width / 2, width = (hi - lo) / 2^shift
            let lhs = val.abs() << (shift + 1);
            let rhs = &lipschitz * (&hi - &lo) << (mshift * (d as u32 - 1));
            if lhs > rhs {
                return if val.is_positive() { 1 } else { -1 };
            }
            let sm = eval_dyadic(&modulus, &mid, mshift).signum();
            lo <<= 1;
            hi <<= 1;
            shift = mshift;
            if sm.is_zero() {
                // x is dyadic: impossible for an irreducible modulus of degree > 1
                unreachable!("minimal polynomial has a dyadic root");
            } else if sm == sign_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
}

/// `sum c_i (num / 2^shift)^i * 2^(shift * (len - 1))`.
fn eval_dyadic(coeffs: &[BigInt], num: &BigInt, shift: u32) -> BigInt {
    let n = coeffs.len();
    let mut acc = BigInt::zero();
    for (i, c) in coeffs.iter().enumerate().rev() {
        acc = acc * num + (c << (shift * (n - 1 - i) as u32));
    }
    acc
}

fn isolate(modulus: &[i64], approx: f64) -> Isolation {
    let shift = 48u32;
    let scale = (1u64 << shift) as f64;
    let centre = (approx * scale).round() as i64;
    let half = (APPROX_EPS * scale) as i64;
    let lo = BigInt::from(centre - half);
    let hi = BigInt::from(centre + half);
    let m: Vec<BigInt> = modulus.iter().map(|&c| BigInt::from(c)).collect();
    let slo = eval_dyadic(&m, &lo, shift).signum();
    let shi = eval_dyadic(&m, &hi, shift).signum();
    assert!(
        slo != shi && !slo.is_zero() && !shi.is_zero(),
        "failed to isolate 2cos(pi/L)"
    );
    Isolation { lo, hi, shift }
}

fn horner_f64(coeffs: &[i64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
}

fn pow_f64(base: f64, exp: i32) -> f64 {
    if exp <= 0 {
        return 1.0;
    }
    (0..exp).fold(1.0, |acc, _| acc * base)
}

/// Cosine without `std`: argument reduction is unnecessary because the only
/// inputs are in `(0, pi/2]`.
fn libm_cos(x: f64) -> f64 {
    // Taylor series; |x| <= pi/2 converges to machine precision in 20 terms.
    let x2 = x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=20 {
        term *= -x2 / ((2 * k - 1) * (2 * k)) as f64;
        sum += term;
    }
    sum
}

/// Dickson polynomial `D_k` with `D_k(z + 1/z) = z^k + z^-k`, lowest power
/// first.
pub fn dickson(k: u32) -> Vec<i64> {
    let mut prev = vec![2i64];
    if k == 0 {
        return prev;
    }
    let mut cur = vec![0i64, 1];
    for _ in 1..k {
        let mut next = vec![0i64; cur.len() + 1];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

fn poly_divexact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = *den.last().unwrap();
    let mut quot = vec![0i64; num.len() + 1 - dl];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dl - 1] / lead;
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Cyclotomic polynomial `Phi_n`, lowest power first.
pub fn cyclotomic(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = poly_divexact(&num, &cyclotomic(d));
        }
    }
    num
}

/// Minimal polynomial of `2cos(pi/level)` over `Q` (monic, integral).
pub fn minimal_polynomial_2cos(level: u32) -> Vec<i64> {
    let phi = cyclotomic(2 * level);
    let m = (phi.len() - 1) / 2;
    let mut psi = vec![0i64; m + 1];
    psi[0] = phi[m];
    for k in 1..=m {
        let c = phi[m + k];
        if c == 0 {
            continue;
        }
        for (i, &dk) in dickson(k as u32).iter().enumerate() {
            psi[i] += c * dk;
        }
    }
    psi
}
