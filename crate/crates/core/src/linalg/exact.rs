use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// An exact real of the form `(a + b√r) / c`.
///
/// Values are kept normalized: `c > 0`, `r` square-free and at least 2
/// whenever `b != 0` (and `r == 0` exactly when `b == 0`), and
/// `gcd(a, b, c) == 1`. Integers collapse to [`ExactValue::Integer`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SurdParts", try_from = "SurdParts")]
pub enum ExactValue {
    Integer(i64),
    Surd { a: i64, b: i64, r: u64, c: u64 },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct SurdParts {
    a: i64,
    b: i64,
    r: u64,
    c: u64,
}

impl From<ExactValue> for SurdParts {
    fn from(v: ExactValue) -> Self {
        let (a, b, r, c) = v.parts();
        SurdParts { a, b, r, c }
    }
}

impl TryFrom<SurdParts> for ExactValue {
    type Error = String;

    fn try_from(p: SurdParts) -> Result<Self, String> {
        ExactValue::surd(p.a, p.b, p.r, p.c as i64).ok_or_else(|| "invalid surd".to_string())
    }
}

impl ExactValue {
    pub fn int(k: i64) -> Self {
        ExactValue::Integer(k)
    }

    /// Normalized `(a + b√r) / c`; `None` when `c == 0` or a component
    /// overflows during normalization.
    pub fn surd(a: i64, b: i64, r: u64, c: i64) -> Option<Self> {
        Self::normalize(a as i128, b as i128, r as u128, c as i128)
    }

    fn normalize(mut a: i128, mut b: i128, mut r: u128, mut c: i128) -> Option<Self> {
        if c == 0 {
            return None;
        }
        if c < 0 {
            a = -a;
            b = -b;
            c = -c;
        }
        if b == 0 || r == 0 {
            b = 0;
            r = 0;
        } else {
            let mut k: u128 = 2;
            while k * k <= r {
                while r % (k * k) == 0 {
                    r /= k * k;
                    b = b.checked_mul(k as i128)?;
                }
                k += 1;
            }
            if r == 1 {
                a = a.checked_add(b)?;
                b = 0;
                r = 0;
            }
        }
        let g = a.gcd(&b).gcd(&c);
        if g > 1 {
            a /= g;
            b /= g;
            c /= g;
        }
        let a = i64::try_from(a).ok()?;
        let b = i64::try_from(b).ok()?;
        if b == 0 && c == 1 {
            return Some(ExactValue::Integer(a));
        }
        Some(ExactValue::Surd { a, b, r: u64::try_from(r).ok()?, c: u64::try_from(c).ok()? })
    }

    /// `(a, b, r, c)` with integers reported as `(k, 0, 0, 1)`.
    pub fn parts(&self) -> (i64, i64, u64, u64) {
        match *self {
            ExactValue::Integer(k) => (k, 0, 0, 1),
            ExactValue::Surd { a, b, r, c } => (a, b, r, c),
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, ExactValue::Integer(_))
    }

    pub fn to_f64(&self) -> f64 {
        let (a, b, r, c) = self.parts();
        if b == 0 {
            return a as f64 / c as f64;
        }
        let root = (r as f64).sqrt();
        // (a + b√r) suffers cancellation when a ≈ -b√r; use the conjugate form
        let sum = a as f64 + b as f64 * root;
        let conj = a as f64 - b as f64 * root;
        let norm = a as i128 * a as i128 - b as i128 * b as i128 * r as i128;
        if sum.abs() < conj.abs() && conj != 0.0 {
            norm as f64 / conj / c as f64
        } else {
            sum / c as f64
        }
    }

    pub fn neg(&self) -> Self {
        let (a, b, r, c) = self.parts();
        Self::normalize(-(a as i128), -(b as i128), r as u128, c as i128).expect("negation stays in range")
    }

    pub fn scale(&self, k: i64) -> Option<Self> {
        let (a, b, r, c) = self.parts();
        Self::normalize(a as i128 * k as i128, b as i128 * k as i128, r as u128, c as i128)
    }

    /// Exact product, defined when both values share the radicand (or
    /// either is rational).
    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let (a1, b1, r1, c1) = self.parts();
        let (a2, b2, r2, c2) = other.parts();
        let r = match (r1, r2) {
            (0, r) | (r, 0) => r,
            (x, y) if x == y => x,
            _ => return None,
        };
        let (a1, b1, a2, b2) = (a1 as i128, b1 as i128, a2 as i128, b2 as i128);
        let a = a1.checked_mul(a2)?.checked_add(b1.checked_mul(b2)?.checked_mul(r as i128)?)?;
        let b = a1.checked_mul(b2)?.checked_add(b1.checked_mul(a2)?)?;
        Self::normalize(a, b, r as u128, (c1 as i128).checked_mul(c2 as i128)?)
    }
}

impl PartialOrd for ExactValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.to_f64().partial_cmp(&other.to_f64())
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ExactValue::Integer(k) => write!(f, "{k}"),
            ExactValue::Surd { a, b: 0, c, .. } => write!(f, "{a}/{c}"),
            ExactValue::Surd { a, b, r, c } => {
                let root = match b.abs() {
                    1 => format!("√{r}"),
                    m => format!("{m}√{r}"),
                };
                let body = match (a, b < 0) {
                    (0, false) => root,
                    (0, true) => format!("-{root}"),
                    (a, neg) => format!("{a}{}{root}", if neg { "-" } else { "+" }),
                };
                if c == 1 {
                    write!(f, "{body}")
                } else {
                    write!(f, "({body})/{c}")
                }
            }
        }
    }
}
