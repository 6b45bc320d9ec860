use std::ops::Add;

use serde::{Deserialize, Serialize};

/// An element of Z_2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Whether `(-1)^{|a||b|}` is negative.
    pub fn sign_negative(a: Parity, b: Parity) -> bool {
        a.is_odd() && b.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A Z_2-graded space with basis `0..p` even and `p..p+q` odd.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    even_dim: usize,
    odd_dim: usize,
    basis_names: Vec<String>,
}

impl SuperSpace {
    /// Default names `e0, e1, ...` for even and `o0, o1, ...` for odd vectors.
    pub fn new(even_dim: usize, odd_dim: usize) -> Self {
        let basis_names = (0..even_dim).map(|i| format!("e{i}")).chain((0..odd_dim).map(|i| format!("o{i}"))).collect();
        SuperSpace { even_dim, odd_dim, basis_names }
    }

    pub fn with_names(even_dim: usize, odd_dim: usize, basis_names: Vec<String>) -> crate::Result<Self> {
        if basis_names.len() != even_dim + odd_dim {
            return Err(crate::Error::Format(format!(
                "{} basis names for dimension ({even_dim}|{odd_dim})",
                basis_names.len()
            )));
        }
        Ok(SuperSpace { even_dim, odd_dim, basis_names })
    }

    pub fn even_dim(&self) -> usize {
        self.even_dim
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_dim
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.even_dim, self.odd_dim)
    }

    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    pub fn parity(&self, i: usize) -> Parity {
        debug_assert!(i < self.dim());
        if i < self.even_dim {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis_names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    /// Whether a vector's nonzero entries are all of one parity.
    pub fn is_homogeneous(&self, v: &[crate::Scalar]) -> bool {
        let even = v[..self.even_dim].iter().any(|x| !x.is_zero());
        let odd = v[self.even_dim..].iter().any(|x| !x.is_zero());
        !(even && odd)
    }

    /// Positions of this space's and `other`'s basis vectors inside their direct sum,
    /// laid out as (self even, other even, self odd, other odd).
    pub fn sum_positions(&self, other: &SuperSpace) -> (Vec<usize>, Vec<usize>) {
        let (p1, q1) = self.dims();
        let (p2, _) = other.dims();
        let first = (0..self.dim()).map(|i| if i < p1 { i } else { p1 + p2 + (i - p1) }).collect();
        let second = (0..other.dim()).map(|i| if i < p2 { p1 + i } else { p1 + p2 + q1 + (i - p2) }).collect();
        (first, second)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_addition_is_mod_two() {
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
        assert_eq!(Parity::Odd + Parity::Even, Parity::Odd);
        assert!(Parity::sign_negative(Parity::Odd, Parity::Odd));
        assert!(!Parity::sign_negative(Parity::Even, Parity::Odd));
    }

    #[test]
    fn sum_positions_keep_even_block_first() {
        let a = SuperSpace::new(1, 1);
        let b = SuperSpace::new(2, 1);
        let (x, y) = a.sum_positions(&b);
        assert_eq!(x, vec![0, 3]);
        assert_eq!(y, vec![1, 2, 4]);
    }
}
