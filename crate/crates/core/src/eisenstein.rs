//! Arithmetic in the hexagonal lattice ring Z[j] with j = e^(i*pi/6 * 2) —
//! that is, j a primitive sixth root of unity, so j^2 = j - 1. This differs
//! from the common convention built on the cube root w = e^(2i*pi/3); the two
//! are related by w = j^2.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EisensteinError {
    #[error("zero has no lattice class or factorization")]
    ZeroInput,
}

/// The element k + l*j of the hexagonal lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisensteinInt {
    pub k: i64,
    pub l: i64,
}

/// Residue class modulo (1+j): A is the ideal (1+j) itself, B the class of 1,
/// Bj the class of j.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeClass {
    A,
    B,
    Bj,
}

pub const ZERO: EisensteinInt = EisensteinInt { k: 0, l: 0 };
pub const ONE: EisensteinInt = EisensteinInt { k: 1, l: 0 };
pub const J: EisensteinInt = EisensteinInt { k: 0, l: 1 };

impl EisensteinInt {
    pub fn new(k: i64, l: i64) -> Self {
        EisensteinInt { k, l }
    }

    pub fn is_zero(&self) -> bool {
        self.k == 0 && self.l == 0
    }

    pub fn add(self, o: Self) -> Self {
        EisensteinInt::new(self.k + o.k, self.l + o.l)
    }

    pub fn sub(self, o: Self) -> Self {
        EisensteinInt::new(self.k - o.k, self.l - o.l)
    }

    pub fn neg(self) -> Self {
        EisensteinInt::new(-self.k, -self.l)
    }

    /// Product under j^2 = j - 1.
    pub fn mul(self, o: Self) -> Self {
        EisensteinInt::new(
            self.k * o.k - self.l * o.l,
            self.k * o.l + self.l * o.k + self.l * o.l,
        )
    }

    /// Complex conjugate: conj(j) = 1 - j.
    pub fn conj(self) -> Self {
        EisensteinInt::new(self.k + self.l, -self.l)
    }

    pub fn norm(self) -> i64 {
        self.k * self.k + self.k * self.l + self.l * self.l
    }

    /// Multiplication by the unit j (rotation by 60 degrees).
    pub fn mul_j(self) -> Self {
        self.mul(J)
    }

    pub fn mul_j_pow(self, e: u32) -> Self {
        let mut z = self;
        for _ in 0..(e % 6) {
            z = z.mul_j();
        }
        z
    }

    /// Exact division; `None` when `o` does not divide `self`.
    pub fn div_exact(self, o: Self) -> Option<Self> {
        let n = o.norm();
        if n == 0 {
            return None;
        }
        let num = self.mul(o.conj());
        if num.k % n != 0 || num.l % n != 0 {
            return None;
        }
        Some(EisensteinInt::new(num.k / n, num.l / n))
    }

    /// Cross product of the two lattice vectors viewed in the plane; positive
    /// when `o` lies counterclockwise of `self`. In the (k,l) basis this is
    /// k1*l2 - l1*k2, which has the same sign as the geometric cross product.
    pub fn cross(self, o: Self) -> i64 {
        self.k * o.l - self.l * o.k
    }

    pub fn lattice_class(self) -> Result<LatticeClass, EisensteinError> {
        if self.is_zero() {
            return Err(EisensteinError::ZeroInput);
        }
        Ok(match (self.k - self.l).rem_euclid(3) {
            0 => LatticeClass::A,
            1 => LatticeClass::B,
            _ => LatticeClass::Bj,
        })
    }

    /// Canonical representative of {z, z*j^2, z*j^4} with k > 0 and l >= 0.
    pub fn canonical_j2(self) -> Self {
        let mut best: Option<EisensteinInt> = None;
        let mut z = self;
        for _ in 0..3 {
            if z.k > 0 && z.l >= 0 {
                match best {
                    Some(b) if (z.l, z.k) >= (b.l, b.k) => {}
                    _ => best = Some(z),
                }
            }
            z = z.mul_j_pow(2);
        }
        best.unwrap_or(self)
    }

    /// Write z = (1+j)^s * z' * j^u with z' in class B and s maximal,
    /// up to a factor j^(2m). Returns (s, u, z').
    pub fn factor(self) -> Result<(u32, u8, EisensteinInt), EisensteinError> {
        if self.is_zero() {
            return Err(EisensteinError::ZeroInput);
        }
        let one_plus_j = EisensteinInt::new(1, 1);
        let mut s = 0;
        let mut z = self;
        while let Some(q) = z.div_exact(one_plus_j) {
            z = q;
            s += 1;
        }
        let (u, zb) = match z.lattice_class().unwrap() {
            LatticeClass::B => (0, z),
            LatticeClass::Bj => (1, z.div_exact(J).unwrap()),
            LatticeClass::A => unreachable!("all factors of 1+j removed"),
        };
        Ok((s, u, zb.canonical_j2()))
    }
}

impl std::fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn one_plus_j_squared_is_3j() {
        let z = EisensteinInt::new(1, 1);
        assert_eq!(z.mul(z), EisensteinInt::new(0, 3));
    }

    #[test]
    fn identity_element() {
        let z = EisensteinInt::new(7, -4);
        assert_eq!(ONE.mul(z), z);
    }

    #[test]
    fn classes() {
        assert_eq!(
            EisensteinInt::new(2, 1).lattice_class().unwrap(),
            LatticeClass::B
        );
        assert_eq!(
            EisensteinInt::new(1, 1).lattice_class().unwrap(),
            LatticeClass::A
        );
        assert_eq!(
            EisensteinInt::new(1, 0).lattice_class().unwrap(),
            LatticeClass::B
        );
        assert!(ZERO.lattice_class().is_err());
    }

    #[test]
    fn factor_examples() {
        let (s, u, z) = EisensteinInt::new(1, 1).factor().unwrap();
        assert_eq!((s, u, z), (1, 0, ONE));
        let (s, u, z) = EisensteinInt::new(2, 1).factor().unwrap();
        assert_eq!((s, u, z), (0, 0, EisensteinInt::new(2, 1)));
        let (s, u, z) = EisensteinInt::new(3, 0).factor().unwrap();
        assert_eq!((s, u, z), (2, 1, ONE));
    }

    #[test]
    fn factor_reconstruction_small_exhaustive() {
        // every nonzero z of small norm reconstructs up to j^2
        let opj = EisensteinInt::new(1, 1);
        for k in -4..=4i64 {
            for l in -4..=4i64 {
                let z = EisensteinInt::new(k, l);
                if z.is_zero() {
                    continue;
                }
                let (s, u, zb) = z.factor().unwrap();
                assert_eq!(zb.lattice_class().unwrap(), LatticeClass::B);
                let mut w = zb.mul_j_pow(u as u32);
                for _ in 0..s {
                    w = w.mul(opj);
                }
                // equality up to j^2 multiplication
                let matches = (0..3).any(|m| w.mul_j_pow(2 * m) == z);
                assert!(matches, "{z} != (1+j)^{s} j^{u} {zb}");
                // the (1+j)-valuation shows up in the norm
                assert_eq!(z.norm() % 3_i64.pow(s), 0);
                if s > 0 || z.norm() % 3 == 0 {
                    assert!(z.norm() % 3_i64.pow(s) != 0 || z.norm() % 3_i64.pow(s + 1) != 0);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn norm_multiplicative(k1 in -50i64..50, l1 in -50i64..50, k2 in -50i64..50, l2 in -50i64..50) {
            let a = EisensteinInt::new(k1, l1);
            let b = EisensteinInt::new(k2, l2);
            prop_assert_eq!(a.mul(b).norm(), a.norm() * b.norm());
        }

        #[test]
        fn class_a_iff_divisible(k in -30i64..30, l in -30i64..30) {
            let z = EisensteinInt::new(k, l);
            prop_assume!(!z.is_zero());
            let divisible = z.div_exact(EisensteinInt::new(1, 1)).is_some();
            prop_assert_eq!(divisible, z.lattice_class().unwrap() == LatticeClass::A);
        }

        #[test]
        fn conj_norm(k in -50i64..50, l in -50i64..50) {
            let z = EisensteinInt::new(k, l);
            prop_assert_eq!(z.mul(z.conj()), EisensteinInt::new(z.norm(), 0));
        }
    }
}
