//! Arithmetic in GF(16) = GF(2)[x] / (x^4 + x + 1).
//!
//! Elements are 4-bit polynomials: bit `i` is the coefficient of `x^i`.
//! Addition is XOR.

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// x^4 + x + 1 with the leading term included.
const MODULUS: u8 = 0b1_0011;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf16(u8);

impl Gf16 {
    pub const ZERO: Gf16 = Gf16(0);
    pub const ONE: Gf16 = Gf16(1);
    /// The element `x`, a generator of the multiplicative group.
    pub const GENERATOR: Gf16 = Gf16(0b0010);

    pub fn new(bits: u8) -> Result<Gf16> {
        if bits < 16 {
            Ok(Gf16(bits))
        } else {
            Err(Error::Domain(format!("{bits} is not a 4-bit field element")))
        }
    }

    #[inline]
    pub const fn bits(self) -> u8 {
        self.0
    }

    pub fn elements() -> impl Iterator<Item = Gf16> {
        (0..16).map(Gf16)
    }

    pub fn nonzero() -> impl Iterator<Item = Gf16> {
        (1..16).map(Gf16)
    }

    /// Carry-less product reduced modulo x^4 + x + 1.
    pub const fn mul(self, rhs: Gf16) -> Gf16 {
        let mut a = self.0;
        let mut b = rhs.0;
        let mut acc = 0u8;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & 0b1_0000 != 0 {
                a ^= MODULUS;
            }
        }
        Gf16(acc)
    }

    /// `self^e`; `0^0` is rejected.
    pub fn pow(self, e: u32) -> Result<Gf16> {
        if self == Gf16::ZERO && e == 0 {
            return Err(Error::Domain("0^0 is undefined".into()));
        }
        let mut acc = Gf16::ONE;
        for _ in 0..e {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Multiplicative inverse of a nonzero element (`a^14`).
    pub fn inverse(self) -> Option<Gf16> {
        (self != Gf16::ZERO).then(|| self.pow(14).expect("nonzero base"))
    }
}

impl Add for Gf16 {
    type Output = Gf16;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf16) -> Gf16 {
        Gf16(self.0 ^ rhs.0)
    }
}

impl Mul for Gf16 {
    type Output = Gf16;

    fn mul(self, rhs: Gf16) -> Gf16 {
        Gf16::mul(self, rhs)
    }
}

impl fmt::Debug for Gf16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf16({:#06b})", self.0)
    }
}

impl fmt::Display for Gf16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Full 16x16 multiplication table, `table[a][b] = a * b`.
pub fn mul_table() -> [[Gf16; 16]; 16] {
    let mut table = [[Gf16::ZERO; 16]; 16];
    for a in Gf16::elements() {
        for b in Gf16::elements() {
            table[a.0 as usize][b.0 as usize] = a * b;
        }
    }
    table
}
