//! Arithmetic progressions of three squares `a^2, c^2, d^2` and their
//! common difference (the congruum).
//!
//! Two independent generators are kept side by side: [`enumerate_congruums`]
//! builds witnesses from the closed form `r = 4 s^2 mn(m^2 - n^2)`, while
//! [`brute_force_congruums`] scans `(c, a)` pairs and keeps those where
//! `2c^2 - a^2` is a square. Agreement of the two is the main check on the
//! closed form. The same module carries the `a^2 + 2b^2 = d^2`
//! parameterization and the sweep over `4m^4 + n^4 = c^2`, `m^4 + 4n^4 = c^2`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::intcore::{
    abs_diff, is_coprime, is_perfect_square, isqrt, perfect_square_root, square, Scalar,
};
use crate::report::{Tally, VerificationReport};
use crate::shard;

/// Three squares in arithmetic progression, `c^2 - a^2 = d^2 - c^2 = r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Progression<T> {
    pub a: T,
    pub c: T,
    pub d: T,
    pub r: T,
}

impl<T: fmt::Display> fmt::Display for Progression<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}; r = {})", self.a, self.c, self.d, self.r)
    }
}

/// A progression together with the generator `(m, n, s)` that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CongruumWitness<T> {
    pub m: T,
    pub n: T,
    pub s: T,
    pub a: T,
    pub c: T,
    pub d: T,
    pub r: T,
}

impl<T: Scalar> CongruumWitness<T> {
    pub fn progression(&self) -> Progression<T> {
        Progression {
            a: self.a.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
            r: self.r.clone(),
        }
    }
}

/// Builds the progression
/// `a = s|m^2 - n^2 - 2mn|`, `c = s(m^2 + n^2)`, `d = s(m^2 - n^2 + 2mn)`
/// with congruum `r = 4 s^2 mn(m^2 - n^2)`.
pub fn congruum_from_params<T: Scalar>(m: &T, n: &T, s: &T) -> Result<CongruumWitness<T>> {
    if n.is_zero() || m <= n {
        return Err(Error::InvalidParams("need m > n >= 1"));
    }
    if !is_coprime(m, n) {
        return Err(Error::InvalidParams("m and n must be coprime"));
    }
    if s.is_zero() {
        return Err(Error::InvalidParams("scale s must be at least 1"));
    }
    let m2 = square(m);
    let n2 = square(n);
    let two_mn = T::from_small(2) * m.clone() * n.clone();
    let diff = m2.clone() - n2.clone();
    let a = s.clone() * abs_diff(&diff, &two_mn);
    if a.is_zero() {
        return Err(Error::DegenerateProgression);
    }
    let c = s.clone() * (m2 + n2);
    let d = s.clone() * (diff.clone() + two_mn.clone());
    let r = square(s) * T::from_small(2) * two_mn * diff;
    Ok(CongruumWitness {
        m: m.clone(),
        n: n.clone(),
        s: s.clone(),
        a,
        c,
        d,
        r,
    })
}

/// Range of generator `m` values that can produce `r <= r_max`.
pub fn formula_m_range<T: Scalar>(r_max: &T) -> Range<T> {
    // smallest congruum for a given m is at n = 1: 4m(m^2 - 1)
    let mut m = T::from_small(2);
    while T::from_small(4) * m.clone() * (square(&m) - T::one()) <= *r_max {
        m = m + T::one();
    }
    T::from_small(2)..m
}

/// Formula witnesses with generator `m` in `m_range` and `r <= r_max`,
/// unsorted and possibly duplicated.
pub fn congruums_in<T: Scalar>(m_range: Range<T>, r_max: &T) -> Vec<CongruumWitness<T>> {
    let mut out = Vec::new();
    let mut m = m_range.start.max(T::from_small(2));
    while m < m_range.end {
        let m2 = square(&m);
        let mut n = T::one();
        while n < m {
            if is_coprime(&m, &n) {
                let base = T::from_small(4) * m.clone() * n.clone() * (m2.clone() - square(&n));
                let mut s = T::one();
                while base.clone() * square(&s) <= *r_max {
                    if let Ok(w) = congruum_from_params(&m, &n, &s) {
                        out.push(w);
                    }
                    s = s + T::one();
                }
            }
            n = n + T::one();
        }
        m = m + T::one();
    }
    out
}

/// Sorts by `(r, a)` and keeps one witness per progression `(a, c, d)`,
/// the one with the smallest `(m, n, s)`.
pub fn finish_congruums<T: Scalar>(mut all: Vec<CongruumWitness<T>>) -> Vec<CongruumWitness<T>> {
    all.sort_by(|x, y| (&x.r, &x.a, &x.m, &x.n, &x.s).cmp(&(&y.r, &y.a, &y.m, &y.n, &y.s)));
    // (r, a) determines c and d, so equal progressions are adjacent
    all.dedup_by(|later, earlier| later.a == earlier.a && later.r == earlier.r);
    all
}

/// Every distinct progression with congruum `r <= r_max` from the closed form.
pub fn enumerate_congruums<T: Scalar>(r_max: &T) -> Vec<CongruumWitness<T>> {
    finish_congruums(congruums_in(formula_m_range(r_max), r_max))
}

pub fn enumerate_congruums_sharded<T: Scalar>(r_max: &T, jobs: usize) -> Vec<CongruumWitness<T>> {
    let shards = shard::partition(formula_m_range(r_max), shard::shard_count(jobs));
    let parts = shard::run_sharded(jobs, shards, |range| congruums_in(range, r_max));
    finish_congruums(parts.into_iter().flatten().collect())
}

/// Range of outer-loop `c` values the oracle must visit for `r <= r_max`.
pub fn oracle_c_range<T: Scalar>(r_max: &T) -> Range<T> {
    // c^2 - (c-1)^2 = 2c - 1 is the least difference available at c
    let c_end = (r_max.clone() + T::one()) / T::from_small(2) + T::one();
    T::from_small(2)..c_end.max(T::from_small(2))
}

/// Oracle restricted to `c` in `c_range`, ascending `c` then `a`.
pub fn brute_force_congruums_in<T: Scalar>(c_range: Range<T>, r_max: &T) -> Vec<Progression<T>> {
    let mut out = Vec::new();
    let mut c = c_range.start.max(T::from_small(2));
    while c < c_range.end {
        let c2 = square(&c);
        // least a with c^2 - a^2 <= r_max
        let mut a = if c2 <= *r_max {
            T::one()
        } else {
            isqrt(&(c2.clone() - r_max.clone() - T::one())) + T::one()
        };
        while a < c {
            let a2 = square(&a);
            let d2 = T::from_small(2) * c2.clone() - a2.clone();
            if let Some(d) = perfect_square_root(&d2) {
                out.push(Progression {
                    a: a.clone(),
                    c: c.clone(),
                    d,
                    r: c2.clone() - a2,
                });
            }
            a = a + T::one();
        }
        c = c + T::one();
    }
    out
}

/// All `1 <= a < c < d` with `c^2 - a^2 = d^2 - c^2 <= r_max`, by exhaustive scan.
pub fn brute_force_congruums<T: Scalar>(r_max: &T) -> BTreeSet<Progression<T>> {
    brute_force_congruums_in(oracle_c_range(r_max), r_max)
        .into_iter()
        .collect()
}

pub fn brute_force_congruums_sharded<T: Scalar>(
    r_max: &T,
    jobs: usize,
) -> BTreeSet<Progression<T>> {
    let shards = shard::partition(oracle_c_range(r_max), shard::shard_count(jobs));
    shard::run_sharded(jobs, shards, |range| brute_force_congruums_in(range, r_max))
        .into_iter()
        .flatten()
        .collect()
}

/// Oracle pass over `c_range` that only tallies: every congruum found is
/// checked for squareness and squares are kept as counterexamples.
pub fn square_congruums_in<T: Scalar>(c_range: Range<T>, r_max: &T) -> Tally<Progression<T>> {
    let found = brute_force_congruums_in(c_range, r_max);
    let checked = found.len() as u64;
    let counterexamples = found
        .into_iter()
        .filter(|p| is_perfect_square(&p.r))
        .collect();
    Tally {
        checked,
        counterexamples,
    }
}

/// Exhaustively confirms no congruum `r <= r_max` is a perfect square.
pub fn verify_no_square_congruum<T: Scalar>(
    r_max: &T,
    jobs: usize,
) -> VerificationReport<Progression<T>> {
    let started = Instant::now();
    let shards = shard::partition(oracle_c_range(r_max), shard::shard_count(jobs));
    let parts = shard::run_sharded(jobs, shards, |range| square_congruums_in(range, r_max));
    Tally::merge_all(parts).into_report("no-square-congruum", r_max, started.elapsed())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AbdForm {
    /// `a = 2m^2 - n^2`, `d = 2m^2 + n^2`
    Sol1,
    /// `a = m^2 - 2n^2`, `d = m^2 + 2n^2`
    Sol2,
}

impl AbdForm {
    pub fn name(self) -> &'static str {
        match self {
            AbdForm::Sol1 => "sol1",
            AbdForm::Sol2 => "sol2",
        }
    }
}

impl std::str::FromStr for AbdForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sol1" | "1" => Ok(AbdForm::Sol1),
            "sol2" | "2" => Ok(AbdForm::Sol2),
            _ => Err(Error::InvalidParams("form must be sol1 or sol2")),
        }
    }
}

/// A solution of `a^2 + 2b^2 = d^2` in one of the two `(m, n)` forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbdSolution<T> {
    pub m: T,
    pub n: T,
    pub form: AbdForm,
    pub a: T,
    pub b: T,
    pub d: T,
}

pub fn abd_from_params<T: Scalar>(m: &T, n: &T, form: AbdForm) -> Result<AbdSolution<T>> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::InvalidParams("need m, n >= 1"));
    }
    if !is_coprime(m, n) {
        return Err(Error::InvalidParams("m and n must be coprime"));
    }
    let two = T::from_small(2);
    let (big, small) = match form {
        AbdForm::Sol1 => (two.clone() * square(m), square(n)),
        AbdForm::Sol2 => (square(m), two.clone() * square(n)),
    };
    Ok(AbdSolution {
        m: m.clone(),
        n: n.clone(),
        form,
        a: abs_diff(&big, &small),
        b: two * m.clone() * n.clone(),
        d: big + small,
    })
}

/// A coprime `(m, n)` for which one of the fourth-power equations has an
/// integer `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourthPowerHit<T> {
    pub m: T,
    pub n: T,
    pub form: AbdForm,
    pub c: T,
}

/// Tests `4m^4 + n^4` and `m^4 + 4n^4` for squareness over coprime pairs
/// with `m` in `m_range` and `1 <= n <= mn_max`.
pub fn fourth_power_hits_in<T: Scalar>(m_range: Range<T>, mn_max: &T) -> Tally<FourthPowerHit<T>> {
    let four = T::from_small(4);
    let mut tally = Tally::default();
    let mut m = m_range.start.max(T::one());
    while m < m_range.end {
        let m4 = square(&square(&m));
        let mut n = T::one();
        while n <= *mn_max {
            if is_coprime(&m, &n) {
                let n4 = square(&square(&n));
                let sums = [
                    (AbdForm::Sol1, four.clone() * m4.clone() + n4.clone()),
                    (AbdForm::Sol2, m4.clone() + four.clone() * n4),
                ];
                for (form, value) in sums {
                    tally.checked += 1;
                    if let Some(c) = perfect_square_root(&value) {
                        tally.counterexamples.push(FourthPowerHit {
                            m: m.clone(),
                            n: n.clone(),
                            form,
                            c,
                        });
                    }
                }
            }
            n = n + T::one();
        }
        m = m + T::one();
    }
    tally
}

/// Sweeps every coprime `1 <= m, n <= mn_max`. No exclusions are applied;
/// any hit is reported.
pub fn check_fourth_power_equations<T: Scalar>(
    mn_max: &T,
    jobs: usize,
) -> VerificationReport<FourthPowerHit<T>> {
    let started = Instant::now();
    let range = T::one()..mn_max.clone() + T::one();
    let shards = shard::partition(range, shard::shard_count(jobs));
    let parts = shard::run_sharded(jobs, shards, |r| fourth_power_hits_in(r, mn_max));
    Tally::merge_all(parts).into_report("fourth-powers", mn_max, started.elapsed())
}
