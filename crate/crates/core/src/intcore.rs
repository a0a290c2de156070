//! Exact integer primitives shared by every other module.
//!
//! Everything here is generic over [`Scalar`], a non-negative integer type.
//! [`crate::Natural`] (arbitrary precision) is the default; fixed-width
//! `u64`/`u128` are accepted for hot sweeps where the caller knows the
//! magnitudes involved fit.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{FromPrimitive, ToPrimitive, Unsigned};

/// A non-negative integer type the library can compute with exactly.
pub trait Scalar:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Integer
    + Unsigned
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Number of significant bits (0 for zero).
    fn bits(&self) -> u64;

    fn from_small(v: u32) -> Self {
        Self::from_u32(v).expect("every scalar type holds u32 values")
    }
}

macro_rules! prim_scalar {
    ($($t:ty)*) => ($(
        impl Scalar for $t {
            fn bits(&self) -> u64 {
                (<$t>::BITS - self.leading_zeros()) as u64
            }
        }
    )*)
}

prim_scalar!(u32 u64 u128 usize);

impl Scalar for BigUint {
    fn bits(&self) -> u64 {
        BigUint::bits(self)
    }
}

pub fn gcd<T: Scalar>(a: &T, b: &T) -> T {
    // num-integer's gcd already returns 0 for (0, 0)
    a.gcd(b)
}

pub fn is_coprime<T: Scalar>(a: &T, b: &T) -> bool {
    gcd(a, b).is_one()
}

/// Floor of the square root, by integer Newton iteration.
pub fn isqrt<T: Scalar>(n: &T) -> T {
    let two = T::from_small(2);
    if *n < two {
        return n.clone();
    }
    // 2^ceil(bits/2) is never below the true root, so the iteration
    // decreases monotonically onto the floor.
    let half_bits = n.bits().div_ceil(2);
    let mut x = num_traits::pow(two.clone(), half_bits as usize);
    loop {
        let y = (x.clone() + n.clone() / x.clone()) / two.clone();
        if y >= x {
            return x;
        }
        x = y;
    }
}

// Squares mod 64 hit only 12 residues; rejects ~81% of inputs without a root.
const SQUARE_MOD_64: u64 = {
    let mut mask = 0u64;
    let mut i = 0;
    while i < 64 {
        mask |= 1 << ((i * i) % 64);
        i += 1;
    }
    mask
};

/// Returns the root when `n` is a perfect square.
pub fn perfect_square_root<T: Scalar>(n: &T) -> Option<T> {
    let low = (n.clone() % T::from_small(64))
        .to_u64()
        .expect("residue below 64");
    if SQUARE_MOD_64 & (1 << low) == 0 {
        return None;
    }
    let root = isqrt(n);
    if root.clone() * root.clone() == *n {
        Some(root)
    } else {
        None
    }
}

pub fn is_perfect_square<T: Scalar>(n: &T) -> bool {
    perfect_square_root(n).is_some()
}

/// True iff exactly one of `m`, `n` is even.
pub fn opposite_parity<T: Scalar>(m: &T, n: &T) -> bool {
    m.is_even() != n.is_even()
}

/// `|a - b|` without leaving the unsigned domain.
pub fn abs_diff<T: Scalar>(a: &T, b: &T) -> T {
    if a >= b {
        a.clone() - b.clone()
    } else {
        b.clone() - a.clone()
    }
}

pub fn square<T: Scalar>(v: &T) -> T {
    v.clone() * v.clone()
}

/// Prime factorization by trial division. Only used on sweep-sized inputs.
pub(crate) fn factorize<T: Scalar>(n: &T) -> Vec<(T, u32)> {
    let mut out = Vec::new();
    let mut rest = n.clone();
    if rest.is_zero() {
        return out;
    }
    let mut p = T::from_small(2);
    while p.clone() * p.clone() <= rest {
        let mut e = 0;
        while (rest.clone() % p.clone()).is_zero() {
            rest = rest / p.clone();
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p = if p == T::from_small(2) {
            T::from_small(3)
        } else {
            p + T::from_small(2)
        };
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    out
}

/// All divisors of `n²`, ascending.
pub(crate) fn divisors_of_square<T: Scalar>(n: &T) -> Vec<T> {
    let mut divs = vec![T::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(divs.len() * (2 * e as usize + 1));
        for d in &divs {
            let mut pk = T::one();
            for _ in 0..=2 * e {
                next.push(d.clone() * pk.clone());
                pk = pk * p.clone();
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}
