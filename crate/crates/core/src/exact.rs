//! Exact arithmetic for index values.
//!
//! Every GG, NGG and ABC value is a finite sum `sum_s c_s * sqrt(s)` with
//! rational `c_s` and distinct square-free `s`. Square roots of distinct
//! square-free integers are linearly independent over the rationals, so
//! two values are equal iff their reduced coefficient maps coincide.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurdSum {
    terms: BTreeMap<u64, BigRational>,
}

impl SurdSum {
    pub fn zero() -> Self {
        SurdSum::default()
    }

    /// `coeff / den * sqrt(radicand)`.
    pub fn term(coeff: i64, den: i64, radicand: u64) -> Self {
        let mut s = SurdSum::zero();
        s.add_scaled_sqrt(BigRational::new(coeff.into(), den.into()), radicand);
        s
    }

    /// Adds `coeff * sqrt(num / den)`.
    pub fn add_sqrt_ratio(&mut self, num: u64, den: u64, coeff: i64) {
        assert!(den > 0, "zero denominator under the square root");
        if num == 0 || coeff == 0 {
            return;
        }
        // sqrt(num/den) = sqrt(num*den) / den
        let (square_free, root) = split_square(u128::from(num) * u128::from(den));
        let c = BigRational::new(BigInt::from(coeff) * BigInt::from(root), BigInt::from(den));
        self.add_scaled_sqrt(c, square_free);
    }

    fn add_scaled_sqrt(&mut self, c: BigRational, radicand: u64) {
        if c.is_zero() || radicand == 0 {
            return;
        }
        let (square_free, root) = split_square(u128::from(radicand));
        let c = c * BigRational::from_integer(BigInt::from(root));
        let entry = self.terms.entry(square_free).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&square_free);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &SurdSum) -> SurdSum {
        let mut out = self.clone();
        for (&s, c) in &other.terms {
            out.add_scaled_sqrt(-c.clone(), s);
        }
        out
    }

    pub fn add(&self, other: &SurdSum) -> SurdSum {
        let mut out = self.clone();
        for (&s, c) in &other.terms {
            out.add_scaled_sqrt(c.clone(), s);
        }
        out
    }

    /// Sign of the value. Exact for up to two distinct radicands (by
    /// squaring); otherwise decided in double-double arithmetic and
    /// `None` when the magnitude is below that precision.
    pub fn signum(&self) -> Option<Ordering> {
        let terms: Vec<(&u64, &BigRational)> = self.terms.iter().collect();
        match terms.as_slice() {
            [] => Some(Ordering::Equal),
            [(_, c)] => Some(sign(c)),
            [(s1, c1), (s2, c2)] => {
                let (a, b) = (sign(c1), sign(c2));
                if a == b {
                    return Some(a);
                }
                // c1*sqrt(s1) + c2*sqrt(s2), opposite signs: compare squares.
                let m1 = *c1 * *c1 * BigRational::from_integer(BigInt::from(**s1));
                let m2 = *c2 * *c2 * BigRational::from_integer(BigInt::from(**s2));
                Some(match m1.cmp(&m2) {
                    Ordering::Greater => a,
                    Ordering::Less => b,
                    Ordering::Equal => Ordering::Equal,
                })
            }
            _ => {
                let mut total = Dd::ZERO;
                let mut magnitude = 0.0f64;
                for (&s, c) in &self.terms {
                    let t = rational_to_dd(c).mul(Dd::from(s as f64).sqrt());
                    magnitude += t.hi.abs();
                    total = total.add(t);
                }
                let v = total.hi + total.lo;
                if v.abs() > magnitude * 1e-28 {
                    Some(v.partial_cmp(&0.0).expect("finite"))
                } else {
                    None
                }
            }
        }
    }

    /// Exact comparison where [`signum`](Self::signum) can decide it.
    pub fn compare(&self, other: &SurdSum) -> Option<Ordering> {
        self.sub(other).signum()
    }

    pub fn to_f64(&self) -> f64 {
        let mut total = Dd::ZERO;
        for (&s, c) in &self.terms {
            total = total.add(rational_to_dd(c).mul(Dd::from(s as f64).sqrt()));
        }
        total.hi + total.lo
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let c = c.abs();
            match (*s == 1, c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "sqrt({s})")?,
                (false, false) => write!(f, "{c}*sqrt({s})")?,
            }
        }
        Ok(())
    }
}

fn sign(c: &BigRational) -> Ordering {
    c.cmp(&BigRational::zero())
}

/// Writes `x = s * r^2` with `s` square-free; returns `(s, r)`.
fn split_square(mut x: u128) -> (u64, u64) {
    let mut square_free: u128 = 1;
    let mut root: u128 = 1;
    let mut p: u128 = 2;
    while p * p <= x {
        let mut e = 0;
        while x.is_multiple_of(p) {
            x /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            root *= p;
        }
        if e % 2 == 1 {
            square_free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    square_free *= x;
    (
        u64::try_from(square_free).expect("square-free part fits in u64"),
        u64::try_from(root).expect("root fits in u64"),
    )
}

fn bigint_to_dd(x: &BigInt) -> Dd {
    let hi = x.to_f64().expect("finite");
    let rest = x - BigInt::from_f64(hi).expect("finite");
    Dd::new(hi, rest.to_f64().expect("finite"))
}

fn rational_to_dd(c: &BigRational) -> Dd {
    bigint_to_dd(c.numer()).div(bigint_to_dd(c.denom()))
}

/// Double-double number `hi + lo`, about 106 bits of precision.
#[derive(Clone, Copy, Debug)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    fn new(a: f64, b: f64) -> Self {
        let s = a + b;
        Dd { hi: s, lo: b - (s - a) }
    }

    fn two_sum(a: f64, b: f64) -> (f64, f64) {
        let s = a + b;
        let bb = s - a;
        (s, (a - (s - bb)) + (b - bb))
    }

    fn add(self, o: Dd) -> Dd {
        let (s, e) = Self::two_sum(self.hi, o.hi);
        let e = e + self.lo + o.lo;
        Dd::new(s, e)
    }

    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        let e = e + self.hi * o.lo + self.lo * o.hi;
        Dd::new(p, e)
    }

    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.add(o.mul(Dd::from(-q1)));
        let q2 = r.hi / o.hi;
        let r = r.add(o.mul(Dd::from(-q2)));
        let q3 = r.hi / o.hi;
        Dd::new(q1, q2).add(Dd::from(q3))
    }

    fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let s = self.hi.sqrt();
        // One Newton step: s + (x - s^2) / (2s).
        let sq = Dd::from(s).mul(Dd::from(s));
        let resid = self.add(Dd::new(-sq.hi, -sq.lo));
        Dd::from(s).add(Dd::from(resid.hi / (2.0 * s)))
    }
}
