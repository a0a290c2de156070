//! Euclid's parameterization of Pythagorean triples, its inverse, and
//! enumeration of primitive triples by hypotenuse bound.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::intcore::{gcd, is_coprime, opposite_parity, perfect_square_root, square, Scalar};

/// Generator coordinates `(m, n, k)`: `m > n >= 1`, coprime, of opposite
/// parity, with scale `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleParams<T> {
    pub m: T,
    pub n: T,
    pub k: T,
}

impl<T: Scalar> TripleParams<T> {
    pub fn new(m: T, n: T, k: T) -> Result<Self> {
        if n.is_zero() || m <= n {
            return Err(Error::InvalidParams("need m > n >= 1"));
        }
        if !is_coprime(&m, &n) {
            return Err(Error::InvalidParams("m and n must be coprime"));
        }
        if !opposite_parity(&m, &n) {
            return Err(Error::InvalidParams("m and n must have opposite parity"));
        }
        if k.is_zero() {
            return Err(Error::InvalidParams("scale k must be at least 1"));
        }
        Ok(TripleParams { m, n, k })
    }

    pub fn primitive(m: T, n: T) -> Result<Self> {
        Self::new(m, n, T::one())
    }
}

/// A Pythagorean triple with `a^2 + b^2 = c^2`.
///
/// `a` is the leg of the form `k(m^2 - n^2)` and `b` the leg `2kmn`; for a
/// primitive triple that means the odd leg comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PythTriple<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> PythTriple<T> {
    /// Validates and canonicalizes leg order.
    pub fn new(x: T, y: T, c: T) -> Result<Self> {
        if x.is_zero() || y.is_zero() || c.is_zero() {
            return Err(Error::NotATriple);
        }
        if square(&x) + square(&y) != square(&c) {
            return Err(Error::NotATriple);
        }
        let g = gcd(&x, &y);
        let (a, b) = if (y.clone() / g).is_odd() {
            (y, x)
        } else {
            (x, y)
        };
        Ok(PythTriple { a, b, c })
    }

    pub fn scaled(&self, k: &T) -> PythTriple<T> {
        PythTriple {
            a: self.a.clone() * k.clone(),
            b: self.b.clone() * k.clone(),
            c: self.c.clone() * k.clone(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for PythTriple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

pub fn triple_from_params<T: Scalar>(p: &TripleParams<T>) -> PythTriple<T> {
    let m2 = square(&p.m);
    let n2 = square(&p.n);
    PythTriple {
        a: p.k.clone() * (m2.clone() - n2.clone()),
        b: p.k.clone() * T::from_small(2) * p.m.clone() * p.n.clone(),
        c: p.k.clone() * (m2 + n2),
    }
}

/// Recovers `(m, n, 1)` from a primitive triple via
/// `m^2 = (c + a)/2`, `n^2 = (c - a)/2` on the odd leg `a`.
pub fn params_from_primitive<T: Scalar>(t: &PythTriple<T>) -> Result<TripleParams<T>> {
    let t = PythTriple::new(t.a.clone(), t.b.clone(), t.c.clone())?;
    if !is_primitive(&t) {
        return Err(Error::NotPrimitive);
    }
    let two = T::from_small(2);
    let m2 = (t.c.clone() + t.a.clone()) / two.clone();
    let n2 = (t.c.clone() - t.a.clone()) / two;
    let m = perfect_square_root(&m2).ok_or(Error::NotATriple)?;
    let n = perfect_square_root(&n2).ok_or(Error::NotATriple)?;
    TripleParams::primitive(m, n)
}

pub fn triple_area<T: Scalar>(t: &PythTriple<T>) -> T {
    t.a.clone() * t.b.clone() / T::from_small(2)
}

pub fn is_primitive<T: Scalar>(t: &PythTriple<T>) -> bool {
    gcd(&t.a, &gcd(&t.b, &t.c)).is_one()
}

/// Iterator over primitive triples with `c <= c_max`, ascending `m` then `n`.
#[derive(Debug, Clone)]
pub struct PrimitiveTriples<T> {
    c_max: T,
    m: T,
    m_end: T,
    n: T,
}

impl<T: Scalar> Iterator for PrimitiveTriples<T> {
    type Item = (TripleParams<T>, PythTriple<T>);

    fn next(&mut self) -> Option<Self::Item> {
        let two = T::from_small(2);
        loop {
            if self.m >= self.m_end {
                return None;
            }
            let m2 = square(&self.m);
            if m2.clone() + T::one() > self.c_max {
                return None;
            }
            if self.n >= self.m || m2 + square(&self.n) > self.c_max {
                self.m = self.m.clone() + T::one();
                self.n = if self.m.is_even() {
                    T::one()
                } else {
                    two.clone()
                };
                continue;
            }
            let n = self.n.clone();
            self.n = self.n.clone() + two.clone();
            if is_coprime(&self.m, &n) {
                let params = TripleParams {
                    m: self.m.clone(),
                    n,
                    k: T::one(),
                };
                let triple = triple_from_params(&params);
                return Some((params, triple));
            }
        }
    }
}

pub fn enumerate_primitive_triples<T: Scalar>(c_max: &T) -> PrimitiveTriples<T> {
    let m_end = crate::intcore::isqrt(c_max) + T::one();
    primitive_triples_in(T::from_small(2)..m_end, c_max)
}

/// Primitive triples whose generator `m` lies in `m_range`.
pub fn primitive_triples_in<T: Scalar>(m_range: Range<T>, c_max: &T) -> PrimitiveTriples<T> {
    let start = m_range.start.max(T::from_small(2));
    let n = if start.is_even() {
        T::one()
    } else {
        T::from_small(2)
    };
    PrimitiveTriples {
        c_max: c_max.clone(),
        m: start,
        m_end: m_range.end,
        n,
    }
}

/// Every triple with `c <= c_max`, each primitive followed by its scalings
/// `k = 2, 3, ...` in ascending order.
pub fn enumerate_scaled_triples<T: Scalar>(
    c_max: &T,
) -> impl Iterator<Item = (TripleParams<T>, PythTriple<T>)> + '_ {
    enumerate_primitive_triples(c_max).flat_map(move |(params, prim)| {
        let k_max = c_max.clone() / prim.c.clone();
        std::iter::successors(Some(T::one()), |k| Some(k.clone() + T::one()))
            .take_while(move |k| *k <= k_max)
            .map(move |k| {
                let triple = prim.scaled(&k);
                (
                    TripleParams {
                        k,
                        ..params.clone()
                    },
                    triple,
                )
            })
    })
}
