//! Multiplication structure for semidirect products H ⋊ ℤ₂ with abelian H.
//!
//! Elements are written X₁^{i₁}⋯X_r^{i_r} Z^k and indexed in mixed radix with
//! the Z-part as the high digit, so the first |H| flat indices are the
//! Z-free coset and index 0 is the identity.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The three supported order-18 groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupId {
    /// SmallGroup(18,4) = Dih(ℤ₃×ℤ₃): Z inverts both X and Y.
    G18_4,
    /// SmallGroup(18,3) = ℤ₃×D₆: Z inverts X and fixes Y.
    Z3xD6,
    /// SmallGroup(18,1) = D₁₈ = Dih(ℤ₉).
    D18,
}

impl GroupId {
    pub const ALL: [GroupId; 3] = [GroupId::G18_4, GroupId::Z3xD6, GroupId::D18];

    pub fn name(self) -> &'static str {
        match self {
            GroupId::G18_4 => "g18-4",
            GroupId::Z3xD6 => "z3xd6",
            GroupId::D18 => "d18",
        }
    }

    pub fn spec(self) -> GroupSpec {
        match self {
            GroupId::G18_4 => GroupSpec::dihedralized(&[3, 3], self),
            GroupId::Z3xD6 => {
                let h = AbelianGroup::new(&[3, 3]);
                // (d,e) -> (-d,e)
                let sigma = (0..h.order())
                    .map(|a| {
                        let p = h.decompose(a);
                        h.compose(&[(3 - p[0]) % 3, p[1]])
                    })
                    .collect();
                GroupSpec::new(h, sigma, Some(self)).expect("builtin sigma")
            }
            GroupId::D18 => GroupSpec::dihedralized(&[9], self),
        }
    }

    pub fn table(self) -> GroupTable {
        build_group(self.spec()).expect("builtin group spec")
    }
}

impl FromStr for GroupId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g18-4" => Ok(GroupId::G18_4),
            "z3xd6" => Ok(GroupId::Z3xD6),
            "d18" => Ok(GroupId::D18),
            _ => Err(Error::UnknownGroup(s.to_string())),
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Finite abelian group ℤ_{m₁}×⋯×ℤ_{m_r} with mixed-radix element indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    moduli: Vec<u32>,
    order: usize,
}

impl AbelianGroup {
    pub fn new(moduli: &[u32]) -> Self {
        assert!(moduli.iter().all(|&m| m > 0));
        let order = moduli.iter().map(|&m| m as usize).product();
        AbelianGroup { moduli: moduli.to_vec(), order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn decompose(&self, mut flat: usize) -> Vec<u32> {
        debug_assert!(flat < self.order);
        self.moduli
            .iter()
            .map(|&m| {
                let d = (flat % m as usize) as u32;
                flat /= m as usize;
                d
            })
            .collect()
    }

    pub fn compose(&self, parts: &[u32]) -> usize {
        debug_assert_eq!(parts.len(), self.moduli.len());
        let mut flat = 0;
        let mut radix = 1;
        for (&p, &m) in parts.iter().zip(&self.moduli) {
            debug_assert!(p < m);
            flat += p as usize * radix;
            radix *= m as usize;
        }
        flat
    }

    pub fn checked_compose(&self, parts: &[u32]) -> Result<usize> {
        if parts.len() != self.moduli.len() {
            return Err(Error::CoefficientCount { expected: self.moduli.len(), got: parts.len() });
        }
        for (&p, &m) in parts.iter().zip(&self.moduli) {
            if p >= m {
                return Err(Error::ComponentOutOfRange { value: p, modulus: m });
            }
        }
        Ok(self.compose(parts))
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (pa, pb) = (self.decompose(a), self.decompose(b));
        let sum: Vec<u32> = pa
            .iter()
            .zip(&pb)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect();
        self.compose(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let parts: Vec<u32> =
            self.decompose(a).iter().zip(&self.moduli).map(|(&x, &m)| (m - x) % m).collect();
        self.compose(&parts)
    }

    /// Pointwise negation map, the inversion automorphism as a table.
    pub fn inversion_table(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.neg(a)).collect()
    }
}

/// A semidirect product H ⋊ ℤ₂ determined by H and an involutive
/// automorphism σ of H (given as a table on flat H-indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    h: AbelianGroup,
    sigma: Vec<usize>,
    id: Option<GroupId>,
}

impl GroupSpec {
    pub fn new(h: AbelianGroup, sigma: Vec<usize>, id: Option<GroupId>) -> Result<Self> {
        let n = h.order();
        if sigma.len() != n {
            return Err(Error::SigmaNotPermutation);
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(Error::SigmaNotPermutation);
            }
            seen[s] = true;
        }
        for a in 0..n {
            if sigma[sigma[a]] != a {
                return Err(Error::SigmaNotInvolution(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if sigma[h.add(a, b)] != h.add(sigma[a], sigma[b]) {
                    return Err(Error::SigmaNotAutomorphism { a, b });
                }
            }
        }
        Ok(GroupSpec { h, sigma, id })
    }

    /// Dih(H): σ is inversion.
    pub fn dihedralized(moduli: &[u32], id: GroupId) -> Self {
        let h = AbelianGroup::new(moduli);
        let sigma = h.inversion_table();
        GroupSpec::new(h, sigma, Some(id)).expect("inversion is an involutive automorphism")
    }

    pub fn h(&self) -> &AbelianGroup {
        &self.h
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn id(&self) -> Option<GroupId> {
        self.id
    }

    pub fn order(&self) -> usize {
        2 * self.h.order()
    }
}

/// Dense multiplication and inverse tables over flat element indices.
#[derive(Debug, Clone)]
pub struct GroupTable {
    spec: GroupSpec,
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
}

/// Builds the full multiplication table from the rule
/// (h₁,k₁)·(h₂,k₂) = (h₁ + σ^{k₁}(h₂), k₁⊕k₂).
pub fn build_group(spec: GroupSpec) -> Result<GroupTable> {
    let hn = spec.h.order();
    let order = spec.order();
    let mut mult = vec![0usize; order * order];
    for g1 in 0..order {
        let (h1, k1) = (g1 % hn, g1 / hn);
        for g2 in 0..order {
            let (h2, k2) = (g2 % hn, g2 / hn);
            let h2 = if k1 == 1 { spec.sigma[h2] } else { h2 };
            mult[g1 * order + g2] = spec.h.add(h1, h2) + hn * (k1 ^ k2);
        }
    }
    let mut inv = vec![0usize; order];
    for g in 0..order {
        inv[g] = (0..order).find(|&x| mult[g * order + x] == 0).expect("Latin square row");
    }
    Ok(GroupTable { spec, order, mult, inv })
}

impl GroupTable {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn h_order(&self) -> usize {
        self.spec.h.order()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Flat index of X₁^{i₁}⋯X_r^{i_r} Z^k.
    pub fn index_of(&self, h_parts: &[u32], z: u8) -> Result<usize> {
        if z > 1 {
            return Err(Error::ComponentOutOfRange { value: z as u32, modulus: 2 });
        }
        Ok(self.spec.h.checked_compose(h_parts)? + self.h_order() * z as usize)
    }

    /// Inverse of [`index_of`]: (h-parts, z-part) of a flat index.
    pub fn element_of(&self, flat: usize) -> Result<(Vec<u32>, u8)> {
        if flat >= self.order {
            return Err(Error::ComponentOutOfRange { value: flat as u32, modulus: self.order as u32 });
        }
        let hn = self.h_order();
        Ok((self.spec.h.decompose(flat % hn), (flat / hn) as u8))
    }
}
