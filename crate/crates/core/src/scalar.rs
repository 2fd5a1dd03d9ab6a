//! Scalar types the counting engines can run over.
//!
//! Every count is a natural number, so the engines only need a commutative
//! semiring with cheap in-place addition. Fixed-width integers are useful
//! for small cases and for tallies; [`BigUint`] is the default carrier.

use std::fmt::{Debug, Display};
use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact natural-number scalar used by state matrices and count vectors.
pub trait Natural:
    Clone + Debug + Display + PartialEq + Zero + One + Send + Sync + for<'a> AddAssign<&'a Self>
{
    fn from_u64(value: u64) -> Self;

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self);

    /// `self *= 4`
    fn quadruple(&mut self);

    fn to_biguint(&self) -> BigUint;
}

macro_rules! natural_prim {
    ($($t:ty),*) => {$(
        impl Natural for $t {
            fn from_u64(value: u64) -> Self {
                <$t>::try_from(value).expect("value does not fit the scalar type")
            }

            fn add_product(&mut self, a: &Self, b: &Self) {
                *self += a * b;
            }

            fn quadruple(&mut self) {
                *self *= 4;
            }

            fn to_biguint(&self) -> BigUint {
                BigUint::from(*self)
            }
        }
    )*};
}

natural_prim!(u32, u64, u128);

impl Natural for BigUint {
    fn from_u64(value: u64) -> Self {
        BigUint::from(value)
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += a * b;
    }

    fn quadruple(&mut self) {
        *self <<= 2u32;
    }

    fn to_biguint(&self) -> BigUint {
        self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check<T: Natural>() {
        let mut acc = T::from_u64(3);
        acc.add_product(&T::from_u64(5), &T::from_u64(7));
        assert_eq!(acc, T::from_u64(38));
        acc.quadruple();
        assert_eq!(acc.to_biguint(), BigUint::from(152u32));
    }

    #[test]
    fn all_carriers_agree() {
        check::<u32>();
        check::<u64>();
        check::<u128>();
        check::<BigUint>();
    }
}
