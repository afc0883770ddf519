//! Group-ring elements of ℤ[G] and their convolution product.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::GroupTable;

/// An element Σ a_g·g of ℤ[G], coefficients in flat-index order.
///
/// For the order-18 groups the first 9 coefficients are f(X,Y) and the last
/// 9 are g(X,Y) of the decomposition F = f + Zg.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    coeffs: Vec<BigInt>,
}

impl GroupRingElement {
    pub fn new(table: &GroupTable, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != table.order() {
            return Err(Error::CoefficientCount { expected: table.order(), got: coeffs.len() });
        }
        Ok(GroupRingElement { coeffs })
    }

    pub fn from_i64(table: &GroupTable, coeffs: &[i64]) -> Result<Self> {
        Self::new(table, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The identity of ℤ[G]: coefficient 1 on the group identity.
    pub fn identity(table: &GroupTable) -> Self {
        let mut coeffs = vec![BigInt::zero(); table.order()];
        coeffs[0] = BigInt::from(1);
        GroupRingElement { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The f-block: coefficients of the Z-free coset.
    pub fn f_block(&self) -> &[BigInt] {
        &self.coeffs[..self.coeffs.len() / 2]
    }

    /// The g-block: coefficients of the Z-coset.
    pub fn g_block(&self) -> &[BigInt] {
        &self.coeffs[self.coeffs.len() / 2..]
    }

    /// Exchanges f and g; negates the determinant on the order-18 groups.
    pub fn swap_blocks(&self) -> Self {
        let n = self.coeffs.len() / 2;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.extend_from_slice(&self.coeffs[n..]);
        coeffs.extend_from_slice(&self.coeffs[..n]);
        GroupRingElement { coeffs }
    }

    /// The antipode F̄ with coefficients a_{g⁻¹}; its regular matrix is the
    /// transpose of F's.
    pub fn antipode(&self, table: &GroupTable) -> Self {
        let coeffs = (0..self.coeffs.len()).map(|g| self.coeffs[table.inv(g)].clone()).collect();
        GroupRingElement { coeffs }
    }

    /// Convolution product in ℤ[G]: (F₁·F₂)[k] = Σ_{mult(i,j)=k} F₁[i]·F₂[j].
    pub fn convolve(&self, other: &Self, table: &GroupTable) -> Self {
        let n = table.order();
        let mut coeffs = vec![BigInt::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[table.mul(i, j)] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        GroupRingElement { coeffs }
    }

    /// Parses the canonical text form: order-many comma-separated integers.
    pub fn parse(table: &GroupTable, text: &str) -> Result<Self> {
        let coeffs: Vec<BigInt> = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::BadCoefficients(format!("cannot parse {:?}", t.trim())))
            })
            .collect::<Result<_>>()?;
        Self::new(table, coeffs)
    }
}

impl fmt::Display for GroupRingElement {
    /// Canonical text form: comma-separated decimal coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}
