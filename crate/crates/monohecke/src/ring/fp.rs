use std::fmt;

use super::Ring;

/// Residues modulo the prime `2^61 - 1`; used for rank bounds at random
/// specializations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp(pub u64);

pub const P: u64 = (1 << 61) - 1;

impl Fp {
    pub fn new(n: i128) -> Fp {
        Fp(n.rem_euclid(P as i128) as u64)
    }

    fn mulmod(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }
}

impl Ring for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(n: i64) -> Self {
        Fp::new(n as i128)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn plus(&self, o: &Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
    fn times(&self, o: &Self) -> Self {
        Fp(Fp::mulmod(self.0, o.0))
    }
    fn negate(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        Some(Fp(Fp::powmod(self.0, P - 2)))
    }
}

impl Fp {
    fn powmod(a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = Fp::mulmod(acc, base);
            }
            base = Fp::mulmod(base, base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for n in [1i64, 2, 3, 12345, -7] {
            let a = Fp::from_i64(n);
            assert!(a.times(&a.inverse().unwrap()).is_one());
        }
    }
}
