//! The four-way coprime split of `mn = uv`, the descent step on a claimed
//! solution of `a^2 + b^2 = c^2`, `b^2 + c^2 = d^2`, and the bounded sweeps
//! showing no such solution (and no square-area right triangle) exists.

use std::fmt;
use std::ops::Range;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::intcore::{
    divisors_of_square, gcd, is_coprime, is_perfect_square, isqrt, square, Scalar,
};
use crate::report::{Tally, VerificationReport};
use crate::shard;
use crate::triples::{
    params_from_primitive, primitive_triples_in, triple_area, PythTriple, TripleParams,
};

/// Pairwise coprime `w, x, y, z >= 1` with `m = wx`, `n = yz`, `u = wy`,
/// `v = xz`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FourSplit<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> FourSplit<T> {
    pub fn product(&self) -> T {
        self.w.clone() * self.x.clone() * self.y.clone() * self.z.clone()
    }

    /// Swaps `x <-> z` and `w <-> y` together. This exchanges the roles of
    /// `m` and `n` and leaves `u`, `v` fixed.
    pub fn swapped(self) -> Self {
        FourSplit {
            w: self.y,
            x: self.z,
            y: self.w,
            z: self.x,
        }
    }
}

/// Splits coprime factorizations `mn = uv` into `w = gcd(m, u)`,
/// `x = gcd(m, v)`, `y = gcd(n, u)`, `z = gcd(n, v)`.
pub fn four_split<T: Scalar>(m: &T, n: &T, u: &T, v: &T) -> Result<FourSplit<T>> {
    if m.is_zero() || n.is_zero() || u.is_zero() || v.is_zero() {
        return Err(Error::InvalidParams("split inputs must be positive"));
    }
    if !is_coprime(m, n) || !is_coprime(u, v) {
        return Err(Error::InvalidParams("need gcd(m, n) = gcd(u, v) = 1"));
    }
    if m.clone() * n.clone() != u.clone() * v.clone() {
        return Err(Error::InvalidParams("need m * n = u * v"));
    }
    let split = FourSplit {
        w: gcd(m, u),
        x: gcd(m, v),
        y: gcd(n, u),
        z: gcd(n, v),
    };
    debug_assert!(split.w.clone() * split.x.clone() == *m);
    debug_assert!(split.y.clone() * split.z.clone() == *n);
    debug_assert!(split.w.clone() * split.y.clone() == *u);
    debug_assert!(split.x.clone() * split.z.clone() == *v);
    Ok(split)
}

/// Four integers claimed to satisfy `a^2 + b^2 = c^2` and `b^2 + c^2 = d^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CongruumCandidate<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: fmt::Display> fmt::Display for CongruumCandidate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    /// Some entry is zero.
    Degenerate,
    /// `a^2 + b^2 != c^2`
    FirstEquation,
    /// `b^2 + c^2 != d^2`
    SecondEquation,
    /// A structural fact that holds for every genuine solution failed
    /// after validation.
    Inconsistent(&'static str),
}

impl RejectReason {
    pub fn code(&self) -> &'static str {
        match self {
            RejectReason::Degenerate => "degenerate",
            RejectReason::FirstEquation => "first-equation",
            RejectReason::SecondEquation => "second-equation",
            RejectReason::Inconsistent(_) => "inconsistent",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DescentOutcome<T> {
    Rejected(RejectReason),
    Descended(CongruumCandidate<T>),
}

impl<T> DescentOutcome<T> {
    pub fn is_rejected(&self) -> bool {
        matches!(self, DescentOutcome::Rejected(_))
    }
}

/// Checks a claimed solution and, if it holds, produces a strictly smaller
/// one.
///
/// Validation runs first and reports the first equation that fails. A
/// validated candidate is reduced to primitive form, both triples
/// `(a, b, c)` and `(c, b, d)` are inverted to `(m, n)` and `(u, v)`, and
/// [`descend_from_params`] builds the smaller candidate.
pub fn descent_step<T: Scalar>(cand: &CongruumCandidate<T>) -> DescentOutcome<T> {
    use DescentOutcome::Rejected;

    let CongruumCandidate { a, b, c, d } = cand;
    if a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero() {
        return Rejected(RejectReason::Degenerate);
    }
    if square(a) + square(b) != square(c) {
        return Rejected(RejectReason::FirstEquation);
    }
    if square(b) + square(c) != square(d) {
        return Rejected(RejectReason::SecondEquation);
    }

    let g = gcd(&gcd(a, b), &gcd(c, d));
    let (a, b, c, d) = (
        a.clone() / g.clone(),
        b.clone() / g.clone(),
        c.clone() / g.clone(),
        d.clone() / g,
    );
    if b.is_odd() {
        return Rejected(RejectReason::Inconsistent("reduced b is odd"));
    }
    let first = PythTriple {
        a,
        b: b.clone(),
        c: c.clone(),
    };
    let second = PythTriple {
        a: c,
        b: b.clone(),
        c: d,
    };
    let (Ok(mn), Ok(uv)) = (
        params_from_primitive(&first),
        params_from_primitive(&second),
    ) else {
        return Rejected(RejectReason::Inconsistent(
            "a reduced triple is not primitive",
        ));
    };
    match descend_from_params(&mn, &uv) {
        Some(smaller) if smaller.b < b => DescentOutcome::Descended(smaller),
        Some(_) => Rejected(RejectReason::Inconsistent("descended b is not smaller")),
        None => Rejected(RejectReason::Inconsistent("generators do not split")),
    }
}

/// Given generators `(m, n)` of `(a, b, c)` and `(u, v)` of `(c, b, d)`,
/// splits `mn = uv` and returns `(z, x, y, w)`, arranged so that the even
/// one of `x, z` is the middle term. On a genuine solution this satisfies
/// `x^2 + z^2 = y^2` and `x^2 + y^2 = w^2` with `0 < x <= wxyz < b`.
///
/// Returns `None` when `mn != uv` or a pair is not coprime.
pub fn descend_from_params<T: Scalar>(
    mn: &TripleParams<T>,
    uv: &TripleParams<T>,
) -> Option<CongruumCandidate<T>> {
    let mut split = four_split(&mn.m, &mn.n, &uv.m, &uv.n).ok()?;
    if split.x.is_odd() {
        split = split.swapped();
    }
    let FourSplit { w, x, y, z } = split;
    Some(CongruumCandidate {
        a: z,
        b: x,
        c: y,
        d: w,
    })
}

/// Candidates `(a, b, c, d?)` with `b` in `b_range`: every `a` with
/// `a^2 + b^2 = c^2`, from divisor pairs `e * f = b^2` of equal parity,
/// `a = (f - e)/2`, `c = (f + e)/2`. `d` is `isqrt(b^2 + c^2)`.
pub fn descent_candidates_in<T: Scalar>(b_range: Range<T>) -> Vec<CongruumCandidate<T>> {
    let two = T::from_small(2);
    let mut out = Vec::new();
    let mut b = b_range.start.max(T::one());
    while b < b_range.end {
        let b2 = square(&b);
        for e in divisors_of_square(&b) {
            if e >= b {
                break;
            }
            let f = b2.clone() / e.clone();
            if e.is_even() != f.is_even() {
                continue;
            }
            let a = (f.clone() - e.clone()) / two.clone();
            let c = (f + e) / two.clone();
            let d = isqrt(&(b2.clone() + square(&c)));
            out.push(CongruumCandidate {
                a,
                b: b.clone(),
                c,
                d,
            });
        }
        b = b + T::one();
    }
    out
}

/// Runs [`descent_step`] on every candidate with `b` in `b_range`. Anything
/// not rejected, or any candidate whose `b^2 + c^2` is square, is a
/// counterexample.
pub fn descent_tally_in<T: Scalar>(b_range: Range<T>) -> Tally<CongruumCandidate<T>> {
    let mut tally = Tally::default();
    for cand in descent_candidates_in(b_range) {
        tally.checked += 1;
        let solves = is_perfect_square(&(square(&cand.b) + square(&cand.c)));
        if solves || !descent_step(&cand).is_rejected() {
            tally.counterexamples.push(cand);
        }
    }
    tally
}

pub fn verify_descent_bound<T: Scalar>(
    b_max: &T,
    jobs: usize,
) -> VerificationReport<CongruumCandidate<T>> {
    let started = Instant::now();
    let range = T::one()..b_max.clone() + T::one();
    let shards = shard::partition(range, shard::shard_count(jobs));
    let parts = shard::run_sharded(jobs, shards, descent_tally_in);
    Tally::merge_all(parts).into_report("descent", b_max, started.elapsed())
}

/// A right triangle whose area is a perfect square.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareArea<T> {
    pub params: TripleParams<T>,
    pub triple: PythTriple<T>,
    pub area: T,
}

/// Checks every triple (all scalings) with `c <= c_max` whose primitive
/// generator `m` is in `m_range`.
pub fn square_areas_in<T: Scalar>(m_range: Range<T>, c_max: &T) -> Tally<SquareArea<T>> {
    let mut tally = Tally::default();
    for (params, prim) in primitive_triples_in(m_range, c_max) {
        let base = triple_area(&prim);
        let k_max = c_max.clone() / prim.c.clone();
        let mut k = T::one();
        while k <= k_max {
            tally.checked += 1;
            let area = square(&k) * base.clone();
            if is_perfect_square(&area) {
                tally.counterexamples.push(SquareArea {
                    params: TripleParams {
                        k: k.clone(),
                        ..params.clone()
                    },
                    triple: prim.scaled(&k),
                    area,
                });
            }
            k = k + T::one();
        }
    }
    tally
}

pub fn verify_no_square_area<T: Scalar>(
    c_max: &T,
    jobs: usize,
) -> VerificationReport<SquareArea<T>> {
    let started = Instant::now();
    let range = T::from_small(2)..isqrt(c_max) + T::one();
    let shards = shard::partition(range, shard::shard_count(jobs));
    let parts = shard::run_sharded(jobs, shards, |r| square_areas_in(r, c_max));
    Tally::merge_all(parts).into_report("no-square-area", c_max, started.elapsed())
}
