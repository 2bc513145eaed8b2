//! Exact evaluation of the tower-shaped right-hand sides.
//!
//! Values up to [`EXACT_BITS`] bits are materialized as big integers. Larger
//! values keep only a lower bound of the form `2^k`, with `k` itself exact or
//! bounded the same way, which is enough to certify `lhs <= rhs` for any
//! machine-sized `lhs`. A lower bound is never used to conclude a failure.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const EXACT_BITS: u64 = 1 << 16;

/// A bound expression over the naturals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Pow(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, u64),
}

impl Expr {
    pub fn int(v: u64) -> Expr {
        Expr::Int(v)
    }

    pub fn pow(self, e: Expr) -> Expr {
        Expr::Pow(Box::new(self), Box::new(e))
    }

    pub fn times(self, other: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(other))
    }

    pub fn minus(self, c: u64) -> Expr {
        Expr::Sub(Box::new(self), c)
    }

    pub fn eval(&self) -> Result<Value> {
        match self {
            Expr::Int(v) => Ok(Value::Exact(BigUint::from(*v))),
            Expr::Pow(b, e) => pow(b.eval()?, e.eval()?),
            Expr::Mul(a, b) => Ok(mul(a.eval()?, b.eval()?)),
            Expr::Sub(a, c) => sub(a.eval()?, *c),
        }
    }

    /// `log2` of the value in floating point, for display only.
    pub fn approx_log2(&self) -> f64 {
        match self {
            Expr::Int(v) => (*v as f64).log2(),
            Expr::Pow(b, e) => {
                let lb = b.approx_log2();
                if lb == f64::NEG_INFINITY {
                    return if e.approx_log2() == f64::NEG_INFINITY { 0.0 } else { f64::NEG_INFINITY };
                }
                lb * e.approx_log2().exp2()
            }
            Expr::Mul(a, b) => a.approx_log2() + b.approx_log2(),
            Expr::Sub(a, c) => {
                let la = a.approx_log2();
                if la > 60.0 {
                    la
                } else {
                    (la.exp2() - *c as f64).log2()
                }
            }
        }
    }

    fn fmt_arg(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(_) => write!(f, "{self}"),
            _ => write!(f, "({self})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Pow(b, e) => {
                b.fmt_arg(f)?;
                write!(f, "^")?;
                e.fmt_arg(f)
            }
            Expr::Mul(a, b) => {
                a.fmt_arg(f)?;
                write!(f, "*")?;
                b.fmt_arg(f)
            }
            Expr::Sub(a, c) => write!(f, "{a}-{c}"),
        }
    }
}

/// Result of evaluating an [`Expr`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Exact(BigUint),
    /// At least `2^k`.
    AtLeastPow2(Box<Value>),
}

impl Value {
    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            Value::Exact(v) => Some(v),
            Value::AtLeastPow2(_) => None,
        }
    }

    /// Whether `lhs <= self` is certain. `None` means the lower bound is too
    /// weak to decide, which cannot happen for values built by [`Expr::eval`]
    /// and `lhs` below `2^64`.
    pub fn ge(&self, lhs: &BigUint) -> Option<bool> {
        match self {
            Value::Exact(v) => Some(lhs <= v),
            Value::AtLeastPow2(k) => {
                let bits = BigUint::from(lhs.bits());
                match k.as_ref() {
                    Value::Exact(k) if &bits <= k => Some(true),
                    Value::Exact(_) => None,
                    Value::AtLeastPow2(_) => (lhs.bits() < EXACT_BITS).then_some(true),
                }
            }
        }
    }
}

fn huge(k: BigUint) -> Value {
    Value::AtLeastPow2(Box::new(Value::Exact(k)))
}

fn pow(b: Value, e: Value) -> Result<Value> {
    match (b, e) {
        (Value::Exact(b), Value::Exact(e)) => {
            if e.is_zero() {
                return Ok(Value::Exact(BigUint::one()));
            }
            if b <= BigUint::one() {
                return Ok(Value::Exact(b));
            }
            let bits = b.bits();
            match e.to_u64() {
                Some(e64) if e64.checked_mul(bits).is_some_and(|t| t <= EXACT_BITS) => {
                    Ok(Value::Exact(b.pow(e64 as u32)))
                }
                _ => Ok(huge(e * BigUint::from(bits - 1))),
            }
        }
        (Value::Exact(b), e @ Value::AtLeastPow2(_)) => {
            if b <= BigUint::one() {
                Ok(Value::Exact(b))
            } else {
                Ok(Value::AtLeastPow2(Box::new(e)))
            }
        }
        (Value::AtLeastPow2(_), Value::Exact(e)) if e.is_zero() => Ok(Value::Exact(BigUint::one())),
        (Value::AtLeastPow2(k), e) => Ok(Value::AtLeastPow2(Box::new(mul(*k, e)))),
    }
}

fn mul(a: Value, b: Value) -> Value {
    match (a, b) {
        (Value::Exact(a), Value::Exact(b)) => {
            if a.is_zero() || b.is_zero() {
                return Value::Exact(BigUint::zero());
            }
            if a.bits() + b.bits() <= EXACT_BITS {
                Value::Exact(a * b)
            } else {
                huge(BigUint::from(a.bits() + b.bits() - 2))
            }
        }
        (Value::Exact(a), h) | (h, Value::Exact(a)) => {
            if a.is_zero() {
                Value::Exact(a)
            } else {
                h
            }
        }
        (h, Value::AtLeastPow2(_)) => h,
    }
}

fn sub(a: Value, c: u64) -> Result<Value> {
    match a {
        Value::Exact(a) => {
            let c = BigUint::from(c);
            if a < c {
                return Err(Error::Degenerate("negative exponent in bound".into()));
            }
            Ok(Value::Exact(a - c))
        }
        Value::AtLeastPow2(k) => Ok(Value::AtLeastPow2(Box::new(sub(*k, 1)?))),
    }
}
