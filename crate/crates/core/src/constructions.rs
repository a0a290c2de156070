//! Pythagorean quadruples, exact Heron areas, and the square-area triangle
//! built from a sum-of-three-squares witness `u^2 = m^2 + n^2 + v^2`.

use std::fmt;

use crate::error::{Error, Result};
use crate::intcore::{abs_diff, perfect_square_root, square, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadParams<T> {
    pub m: T,
    pub n: T,
    pub p: T,
    pub q: T,
}

impl<T: Scalar> QuadParams<T> {
    /// Requires `m + n + p + q` odd.
    pub fn new(m: T, n: T, p: T, q: T) -> Result<Self> {
        let sum = m.clone() + n.clone() + p.clone() + q.clone();
        if sum.is_even() {
            return Err(Error::InvalidParity);
        }
        Ok(QuadParams { m, n, p, q })
    }
}

/// `a^2 + b^2 + c^2 = d^2`. Zero components are allowed; `d` is not.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PythQuadruple<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Scalar> PythQuadruple<T> {
    pub fn holds(&self) -> bool {
        square(&self.a) + square(&self.b) + square(&self.c) == square(&self.d)
    }
}

/// `a = |m^2 + n^2 - p^2 - q^2|`, `b = 2(mq + np)`, `c = 2|nq - mp|`,
/// `d = m^2 + n^2 + p^2 + q^2`.
pub fn quadruple_from_params<T: Scalar>(params: &QuadParams<T>) -> Result<PythQuadruple<T>> {
    let QuadParams { m, n, p, q } = params;
    let sum = m.clone() + n.clone() + p.clone() + q.clone();
    if sum.is_even() {
        return Err(Error::InvalidParity);
    }
    let two = T::from_small(2);
    let plus = square(m) + square(n);
    let minus = square(p) + square(q);
    let d = plus.clone() + minus.clone();
    if d.is_zero() {
        return Err(Error::DegenerateQuadruple);
    }
    Ok(PythQuadruple {
        a: abs_diff(&plus, &minus),
        b: two.clone() * (m.clone() * q.clone() + n.clone() * p.clone()),
        c: two * abs_diff(&(n.clone() * q.clone()), &(m.clone() * p.clone())),
        d,
    })
}

/// Triangle with integer side lengths satisfying the strict triangle
/// inequality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangle<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> Triangle<T> {
    pub fn new(x: T, y: T, z: T) -> Result<Self> {
        let ok =
            x.clone() + y.clone() > z && y.clone() + z.clone() > x && x.clone() + z.clone() > y;
        // strict inequality also rules out zero sides
        if !ok {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Triangle { x, y, z })
    }

    pub fn perimeter(&self) -> T {
        self.x.clone() + self.y.clone() + self.z.clone()
    }

    fn sorted(&self) -> [T; 3] {
        let mut s = [self.x.clone(), self.y.clone(), self.z.clone()];
        s.sort();
        s
    }
}

impl<T: fmt::Display> fmt::Display for Triangle<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// `16 A^2 = (x+y+z)(-x+y+z)(x-y+z)(x+y-z)`, Heron's formula cleared of
/// fractions.
pub fn heron_area_squared_16<T: Scalar>(t: &Triangle<T>) -> Result<T> {
    let Triangle { x, y, z } = Triangle::new(t.x.clone(), t.y.clone(), t.z.clone())?;
    let p = x.clone() + y.clone() + z.clone();
    Ok(p.clone()
        * (y.clone() + z.clone() - x.clone())
        * (x.clone() + z.clone() - y.clone())
        * (x + y - z))
}

/// The area itself, when it is an integer.
pub fn heron_area<T: Scalar>(t: &Triangle<T>) -> Result<Option<T>> {
    let sixteen_a2 = heron_area_squared_16(t)?;
    let four = T::from_small(4);
    Ok(perfect_square_root(&sixteen_a2).and_then(|four_a| {
        let (area, rem) = four_a.div_rem(&four);
        rem.is_zero().then_some(area)
    }))
}

/// True iff the squares of the two shorter sides sum to the square of the
/// longest.
pub fn is_right_triangle<T: Scalar>(t: &Triangle<T>) -> bool {
    let [s0, s1, s2] = t.sorted();
    square(&s0) + square(&s1) == square(&s2)
}

/// `u^2 = m^2 + n^2 + v^2` with `m, n, v >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadSumWitness<T> {
    pub m: T,
    pub n: T,
    pub v: T,
    pub u: T,
}

impl<T: Scalar> QuadSumWitness<T> {
    pub fn new(m: T, n: T, v: T, u: T) -> Result<Self> {
        if m.is_zero() || n.is_zero() || v.is_zero() {
            return Err(Error::InvalidWitness);
        }
        if square(&m) + square(&n) + square(&v) != square(&u) {
            return Err(Error::InvalidWitness);
        }
        Ok(QuadSumWitness { m, n, v, u })
    }
}

/// Triangle `(u^2 - m^2, u^2 - n^2, u^2 - v^2)` and its area `umnv`.
///
/// The side sum is `3u^2 - (m^2 + n^2 + v^2) = 2u^2`, so the semiperimeter
/// is `u^2` and Heron's radicand collapses to `u^2 m^2 n^2 v^2`.
pub fn proof3_triangle<T: Scalar>(w: &QuadSumWitness<T>) -> Result<(Triangle<T>, T)> {
    let w = QuadSumWitness::new(w.m.clone(), w.n.clone(), w.v.clone(), w.u.clone())?;
    let u2 = square(&w.u);
    let tri = Triangle::new(
        u2.clone() - square(&w.m),
        u2.clone() - square(&w.n),
        u2 - square(&w.v),
    )?;
    let area = w.u * w.m * w.n * w.v;
    Ok((tri, area))
}

/// All witnesses with `m <= n <= v < u <= u_max`, ascending `(u, m, n)`.
pub fn enumerate_quad_sum_witnesses<T: Scalar>(u_max: &T) -> Vec<QuadSumWitness<T>> {
    let mut out = Vec::new();
    let mut u = T::from_small(2);
    while u <= *u_max {
        let u2 = square(&u);
        let mut m = T::one();
        while T::from_small(3) * square(&m) <= u2 {
            let mut n = m.clone();
            while square(&m) + T::from_small(2) * square(&n) <= u2 {
                let rest = u2.clone() - square(&m) - square(&n);
                if let Some(v) = perfect_square_root(&rest) {
                    if v >= n {
                        out.push(QuadSumWitness {
                            m: m.clone(),
                            n: n.clone(),
                            v,
                            u: u.clone(),
                        });
                    }
                }
                n = n + T::one();
            }
            m = m + T::one();
        }
        u = u + T::one();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triples::{enumerate_scaled_triples, PythTriple};
    use proptest::prelude::*;

    fn tri(x: u64, y: u64, z: u64) -> Triangle<u64> {
        Triangle::new(x, y, z).unwrap()
    }

    #[test]
    fn quadruple_examples() {
        let q = quadruple_from_params(&QuadParams::new(1u64, 1, 1, 0).unwrap()).unwrap();
        assert_eq!((q.a, q.b, q.c, q.d), (1, 2, 2, 3));
        let q = quadruple_from_params(&QuadParams::new(1u64, 0, 0, 0).unwrap()).unwrap();
        assert_eq!((q.a, q.b, q.c, q.d), (1, 0, 0, 1));
        let q = quadruple_from_params(&QuadParams::new(2u64, 1, 0, 0).unwrap()).unwrap();
        assert_eq!((q.a, q.b, q.c, q.d), (5, 0, 0, 5));
        assert_eq!(QuadParams::new(1u64, 1, 0, 0), Err(Error::InvalidParity));
        let bad = QuadParams {
            m: 1u64,
            n: 1,
            p: 1,
            q: 1,
        };
        assert_eq!(quadruple_from_params(&bad), Err(Error::InvalidParity));
    }

    #[test]
    fn heron_examples() {
        assert_eq!(heron_area_squared_16(&tri(3, 4, 5)), Ok(576));
        assert_eq!(heron_area(&tri(3, 4, 5)), Ok(Some(6)));
        assert_eq!(heron_area_squared_16(&tri(5, 5, 8)), Ok(2304));
        assert_eq!(heron_area(&tri(5, 5, 8)), Ok(Some(12)));
        assert_eq!(Triangle::new(1u64, 1, 3), Err(Error::DegenerateTriangle));
        let raw = Triangle {
            x: 1u64,
            y: 1,
            z: 3,
        };
        assert_eq!(heron_area_squared_16(&raw), Err(Error::DegenerateTriangle));
        assert_eq!(Triangle::new(1u64, 2, 3), Err(Error::DegenerateTriangle));
        assert_eq!(Triangle::new(0u64, 2, 2), Err(Error::DegenerateTriangle));
    }

    #[test]
    fn heron_area_non_integral() {
        // equilateral side 2: 16A^2 = 48
        assert_eq!(heron_area_squared_16(&tri(2, 2, 2)), Ok(48));
        assert_eq!(heron_area(&tri(2, 2, 2)), Ok(None));
        // (2, 3, 3): 16A^2 = 8*4*2*2 = 128, not a square
        assert_eq!(heron_area(&tri(2, 3, 3)), Ok(None));
    }

    #[test]
    fn proof3_examples() {
        let (t, area) = proof3_triangle(&QuadSumWitness::new(1u64, 2, 2, 3).unwrap()).unwrap();
        assert_eq!((t.x, t.y, t.z, area), (8, 5, 5, 12));
        let (t, area) = proof3_triangle(&QuadSumWitness::new(2u64, 2, 1, 3).unwrap()).unwrap();
        assert_eq!((t.x, t.y, t.z, area), (5, 5, 8, 12));
        let (t, area) = proof3_triangle(&QuadSumWitness::new(2u64, 3, 6, 7).unwrap()).unwrap();
        assert_eq!((t.x, t.y, t.z, area), (45, 40, 13, 252));
        assert_eq!(heron_area(&t), Ok(Some(252)));
        assert_eq!(t.perimeter(), 98);
        assert_eq!(
            QuadSumWitness::new(1u64, 2, 2, 4),
            Err(Error::InvalidWitness)
        );
        assert_eq!(
            QuadSumWitness::new(0u64, 3, 4, 5),
            Err(Error::InvalidWitness)
        );
        let raw = QuadSumWitness {
            m: 1u64,
            n: 1,
            v: 1,
            u: 2,
        };
        assert_eq!(proof3_triangle(&raw), Err(Error::InvalidWitness));
    }

    #[test]
    fn right_triangle_examples() {
        assert!(is_right_triangle(&tri(3, 4, 5)));
        assert!(is_right_triangle(&tri(5, 3, 4)));
        assert!(!is_right_triangle(&tri(8, 5, 5)));
        assert!(!is_right_triangle(&tri(45, 40, 13)));
    }

    #[test]
    fn witness_enumeration_matches_brute_force() {
        let found = enumerate_quad_sum_witnesses(&40u64);
        let mut brute = Vec::new();
        for u in 2u64..=40 {
            for m in 1..u {
                for n in m..u {
                    for v in n..u {
                        if m * m + n * n + v * v == u * u {
                            brute.push(QuadSumWitness { m, n, v, u });
                        }
                    }
                }
            }
        }
        assert_eq!(found, brute);
        assert_eq!(
            found[0],
            QuadSumWitness {
                m: 1,
                n: 2,
                v: 2,
                u: 3
            }
        );
    }

    #[test]
    fn proof3_identities_up_to_100() {
        let witnesses = enumerate_quad_sum_witnesses(&100u64);
        assert!(!witnesses.is_empty());
        for w in witnesses {
            let (t, area) = proof3_triangle(&w).unwrap();
            assert_eq!(t.perimeter(), 2 * w.u * w.u);
            assert_eq!(heron_area_squared_16(&t).unwrap(), 16 * area * area);
            assert!(!is_right_triangle(&t), "{w:?}");
        }
    }

    #[test]
    fn heron_agrees_on_right_triangles() {
        for (_, PythTriple { a, b, c }) in enumerate_scaled_triples(&2000u64) {
            let t = tri(a, b, c);
            assert_eq!(
                heron_area_squared_16(&t).unwrap(),
                (2 * a * b) * (2 * a * b)
            );
            assert!(is_right_triangle(&t));
        }
    }

    proptest! {
        #[test]
        fn quadruple_identity(m in 0u64..1 << 30, n in 0u64..1 << 30, p in 0u64..1 << 30, q in 0u64..1 << 30) {
            prop_assume!((m + n + p + q) % 2 == 1);
            let params = QuadParams::new(m as u128, n as u128, p as u128, q as u128).unwrap();
            let quad = quadruple_from_params(&params).unwrap();
            prop_assert!(quad.holds());
        }

        #[test]
        fn heron_is_symmetric(x in 1u64..100_000, y in 1u64..100_000, z in 1u64..100_000) {
            if let Ok(t) = Triangle::new(x as u128, y as u128, z as u128) {
                let h = heron_area_squared_16(&t).unwrap();
                let swapped = Triangle::new(z as u128, x as u128, y as u128).unwrap();
                prop_assert_eq!(heron_area_squared_16(&swapped).unwrap(), h);
            }
        }
    }
}
