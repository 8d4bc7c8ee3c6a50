//! Truncated polynomials over a count type.

use crate::Count;

/// Coefficients `c_0..=c_cap`; products drop every term above `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Count> Polynomial<C> {
    pub fn zero(cap: usize) -> Self {
        Polynomial { coeffs: vec![C::zero(); cap + 1] }
    }

    pub fn one(cap: usize) -> Self {
        let mut p = Self::zero(cap);
        p.coeffs[0] = C::one();
        p
    }

    /// Takes `coeffs`, padded with zeros or cut to length `cap + 1`.
    pub fn from_coeffs(mut coeffs: Vec<C>, cap: usize) -> Self {
        coeffs.resize(cap + 1, C::zero());
        Polynomial { coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.clone() + b.clone();
        }
    }

    /// Adds `c` to coefficient `i` (ignored above the cap).
    pub fn add_at(&mut self, i: usize, c: C) {
        if let Some(slot) = self.coeffs.get_mut(i) {
            *slot = slot.clone() + c;
        }
    }

    /// Truncated product with the cap of `self`.
    pub fn mul_truncated(&self, other: &Self) -> Self {
        let cap = self.cap();
        let mut out = Self::zero(cap);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cap + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        out
    }

    /// Multiplies by `x^by`, truncating.
    pub fn shift_up(&self, by: usize) -> Self {
        let cap = self.cap();
        let mut out = Self::zero(cap);
        for i in 0..=cap {
            if i + by <= cap {
                out.coeffs[i + by] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// Divides by `x^by`, dropping the low terms.
    pub fn shift_down(&self, by: usize) -> Self {
        let cap = self.cap();
        let mut out = Self::zero(cap);
        for i in by..=cap {
            out.coeffs[i - by] = self.coeffs[i].clone();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type P = Polynomial<u64>;

    #[test]
    fn product_truncates() {
        let a = P::from_coeffs(vec![1, 2, 3], 2);
        let b = P::from_coeffs(vec![4, 5], 2);
        assert_eq!(a.mul_truncated(&b).coeffs(), &[4, 13, 22]);
        assert_eq!(a.shift_up(1).coeffs(), &[0, 1, 2]);
        assert_eq!(a.shift_down(1).coeffs(), &[2, 3, 0]);
        assert!(P::zero(3).is_zero());
    }

    proptest! {
        #[test]
        fn product_matches_naive(a in prop::collection::vec(0u64..50, 1..6),
                                 b in prop::collection::vec(0u64..50, 1..6),
                                 cap in 0usize..6) {
            let pa = P::from_coeffs(a.clone(), cap);
            let pb = P::from_coeffs(b.clone(), cap);
            let got = pa.mul_truncated(&pb);
            for d in 0..=cap {
                let mut want = 0u64;
                for i in 0..=d {
                    want += a.get(i).copied().unwrap_or(0) * b.get(d - i).copied().unwrap_or(0);
                }
                prop_assert_eq!(got.coeff(d), want);
            }
        }
    }
}
