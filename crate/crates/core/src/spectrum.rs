//! Membership of an integer in the determinant spectrum S(G), and explicit
//! group-ring witnesses via the achieving families.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{GroupId, GroupTable};
use crate::ring::GroupRingElement;

/// The residue/valuation class of a spectrum member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ClassTag {
    /// gcd(D,6)=1, D ≡ ±1 mod 18
    CoprimeSix,
    /// 2|D, 3∤D: D = 2²(9m±2)
    TwoNotThree,
    /// 3|D, 2∤D: odd multiple of 3^e
    ThreeNotTwo,
    /// 6|D: multiple of 2²·3^e
    DivSix,
    NotMember,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassTag::CoprimeSix => "coprime-six",
            ClassTag::TwoNotThree => "two-not-three",
            ClassTag::ThreeNotTwo => "three-not-two",
            ClassTag::DivSix => "div-six",
            ClassTag::NotMember => "not-member",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Sign::Plus { "+" } else { "-" })
    }
}

/// Classification of an integer with the witness parameters needed to
/// instantiate an achieving family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipForm {
    pub class: ClassTag,
    pub sign: Option<Sign>,
    pub m: Option<BigInt>,
    pub family: Option<&'static str>,
}

impl MembershipForm {
    pub fn is_member(&self) -> bool {
        self.class != ClassTag::NotMember
    }

    fn not_member() -> Self {
        MembershipForm { class: ClassTag::NotMember, sign: None, m: None, family: None }
    }
}

/// 3-exponent of the theorem for a group: 3⁹ for Dih(ℤ₃×ℤ₃), 3⁶ for ℤ₃×D₆.
pub fn three_exponent(group: GroupId) -> Result<u32> {
    match group {
        GroupId::G18_4 => Ok(9),
        GroupId::Z3xD6 => Ok(6),
        GroupId::D18 => Err(Error::UnsupportedGroup(group.name().to_string())),
    }
}

fn pow3(e: u32) -> BigInt {
    BigInt::from(3).pow(e)
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(d: &BigInt, p: u32) -> u32 {
    assert!(!d.is_zero());
    let p = BigInt::from(p);
    let mut v = 0;
    let mut d = d.abs();
    loop {
        let (q, r) = d.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        d = q;
        v += 1;
    }
}

/// Decides membership of D in S(G) and, for the two theorem groups,
/// selects the achieving family and its parameter m.
///
/// For d18 the decision uses the published spectrum formula; no witness
/// parameters are produced.
pub fn classify(d: &BigInt, group: GroupId) -> MembershipForm {
    if group == GroupId::D18 {
        return classify_d18(d);
    }
    let e = three_exponent(group).expect("theorem group");
    let two = d.is_even();
    let three = d.mod_floor(&BigInt::from(3)).is_zero();
    match (two, three) {
        (false, false) => {
            let r = d.mod_floor(&BigInt::from(18));
            if r == BigInt::one() {
                MembershipForm {
                    class: ClassTag::CoprimeSix,
                    sign: Some(Sign::Plus),
                    m: Some((d - 1) / 18),
                    family: Some("coprime+"),
                }
            } else if r == BigInt::from(17) {
                MembershipForm {
                    class: ClassTag::CoprimeSix,
                    sign: Some(Sign::Minus),
                    m: Some((-d - 1) / 18),
                    family: Some("coprime-"),
                }
            } else {
                MembershipForm::not_member()
            }
        }
        (true, false) => {
            let (k, r4) = d.div_rem(&BigInt::from(4));
            if !r4.is_zero() {
                return MembershipForm::not_member();
            }
            let r = k.mod_floor(&BigInt::from(9));
            if r == BigInt::from(2) {
                MembershipForm {
                    class: ClassTag::TwoNotThree,
                    sign: Some(Sign::Plus),
                    m: Some((&k - 2) / 9),
                    family: Some("2not3+"),
                }
            } else if r == BigInt::from(7) {
                MembershipForm {
                    class: ClassTag::TwoNotThree,
                    sign: Some(Sign::Minus),
                    m: Some((-&k - 2) / 9),
                    family: Some("2not3-"),
                }
            } else {
                MembershipForm::not_member()
            }
        }
        (false, true) => {
            let (t, r) = d.div_rem(&pow3(e));
            if !r.is_zero() {
                return MembershipForm::not_member();
            }
            let (t3, r3) = t.div_rem(&BigInt::from(3));
            if r3.is_zero() {
                // odd multiple of 3^{e+1}: t/3 = 1+2m
                MembershipForm {
                    class: ClassTag::ThreeNotTwo,
                    sign: None,
                    m: Some((t3 - 1) / 2),
                    family: Some("3not2-odd3"),
                }
            } else if t.mod_floor(&BigInt::from(6)) == BigInt::one() {
                MembershipForm {
                    class: ClassTag::ThreeNotTwo,
                    sign: Some(Sign::Plus),
                    m: Some((&t - 1) / 6),
                    family: Some("3not2+"),
                }
            } else {
                MembershipForm {
                    class: ClassTag::ThreeNotTwo,
                    sign: Some(Sign::Minus),
                    m: Some((-&t - 1) / 6),
                    family: Some("3not2-"),
                }
            }
        }
        (true, true) => {
            let (t, r) = d.div_rem(&(pow3(e) * 4));
            if !r.is_zero() {
                return MembershipForm::not_member();
            }
            let (t3, r3) = t.div_rem(&BigInt::from(3));
            if r3.is_zero() {
                MembershipForm {
                    class: ClassTag::DivSix,
                    sign: None,
                    m: Some(t3),
                    family: Some("div6-x3"),
                }
            } else if t.mod_floor(&BigInt::from(3)) == BigInt::one() {
                MembershipForm {
                    class: ClassTag::DivSix,
                    sign: Some(Sign::Plus),
                    m: Some((&t - 1) / 3),
                    family: Some("div6+"),
                }
            } else {
                MembershipForm {
                    class: ClassTag::DivSix,
                    sign: Some(Sign::Minus),
                    m: Some((-&t - 1) / 3),
                    family: Some("div6-"),
                }
            }
        }
    }
}

// S(D₁₈) = { 2^a 3^b m : a=0 or a≥2, b=0 or b≥5, gcd(m,6)=1 }, plus 0.
fn classify_d18(d: &BigInt) -> MembershipForm {
    if d.is_zero() {
        return MembershipForm { class: ClassTag::DivSix, sign: None, m: None, family: None };
    }
    let a = valuation(d, 2);
    let b = valuation(d, 3);
    if (a == 0 || a >= 2) && (b == 0 || b >= 5) {
        let class = match (a > 0, b > 0) {
            (false, false) => ClassTag::CoprimeSix,
            (true, false) => ClassTag::TwoNotThree,
            (false, true) => ClassTag::ThreeNotTwo,
            (true, true) => ClassTag::DivSix,
        };
        MembershipForm { class, sign: None, m: None, family: None }
    } else {
        MembershipForm::not_member()
    }
}

/// One achieving family: base polynomials plus the m·h drift, where
/// h(x,y) = (1+x+x²)(1+y+y²) has all nine coefficients equal to 1.
#[derive(Debug, Clone, Copy)]
pub struct FamilySpec {
    pub id: &'static str,
    f: [i64; 9],
    g: [i64; 9],
    /// sign of the m·h term added to f (resp. g)
    mf: i64,
    mg: i64,
    /// construct as the f↔g swap of the base element
    swap: bool,
}

// Coefficient index is i+3j for x^i y^j.
const G18_4_FAMILIES: [FamilySpec; 10] = [
    // 1+18m
    FamilySpec { id: "coprime+", f: [1, 0, 0, 0, 0, 0, 0, 0, 0], g: [0; 9], mf: 1, mg: 1, swap: false },
    FamilySpec { id: "coprime-", f: [1, 0, 0, 0, 0, 0, 0, 0, 0], g: [0; 9], mf: 1, mg: 1, swap: true },
    // 2²(2+9m): f = 1+x+x²+y−y²x², g = 1+x+yx−y²(x+x²)
    FamilySpec {
        id: "2not3+",
        f: [1, 1, 1, 1, 0, 0, 0, 0, -1],
        g: [1, 1, 0, 0, 1, 0, 0, -1, -1],
        mf: 1, mg: 1, swap: false,
    },
    FamilySpec {
        id: "2not3-",
        f: [1, 1, 1, 1, 0, 0, 0, 0, -1],
        g: [1, 1, 0, 0, 1, 0, 0, -1, -1],
        mf: 1, mg: 1, swap: true,
    },
    // 2²·3¹⁰m: f = 1+x−yx²−y²(1+x) − mh, g = 1+y−y²(1+x+x²) + mh
    FamilySpec {
        id: "div6-x3",
        f: [1, 1, 0, 0, 0, -1, -1, -1, 0],
        g: [1, 0, 0, 1, 0, 0, -1, -1, -1],
        mf: -1, mg: 1, swap: false,
    },
    // 2²·3⁹(1+3m): f = 1+x+x²+y(1+x)−y²x², g = (1+x²)(1+y−y²)
    FamilySpec {
        id: "div6+",
        f: [1, 1, 1, 1, 1, 0, 0, 0, -1],
        g: [1, 0, 1, 1, 0, 1, -1, 0, -1],
        mf: 1, mg: 1, swap: false,
    },
    FamilySpec {
        id: "div6-",
        f: [1, 1, 1, 1, 1, 0, 0, 0, -1],
        g: [1, 0, 1, 1, 0, 1, -1, 0, -1],
        mf: 1, mg: 1, swap: true,
    },
    // 3¹⁰(1+2m): f = 1+x+x²+y(1+x+x²)+y²(1−x−x²), g = 1+x+x²+y(1+x)+y²(1−x−x²)
    FamilySpec {
        id: "3not2-odd3",
        f: [1, 1, 1, 1, 1, 1, 1, -1, -1],
        g: [1, 1, 1, 1, 1, 0, 1, -1, -1],
        mf: 1, mg: 1, swap: false,
    },
    // 3⁹(1+6m): f = 1+x+x²+y(1+x)−y²(1+x+x²), g = 1+x+x²+y(1+x−x²)−y²(1+x+x²)
    FamilySpec {
        id: "3not2+",
        f: [1, 1, 1, 1, 1, 0, -1, -1, -1],
        g: [1, 1, 1, 1, 1, -1, -1, -1, -1],
        mf: 1, mg: 1, swap: false,
    },
    FamilySpec {
        id: "3not2-",
        f: [1, 1, 1, 1, 1, 0, -1, -1, -1],
        g: [1, 1, 1, 1, 1, -1, -1, -1, -1],
        mf: 1, mg: 1, swap: true,
    },
];

const Z3XD6_FAMILIES: [FamilySpec; 10] = [
    // 1+18m
    FamilySpec { id: "coprime+", f: [1, 0, 0, 0, 0, 0, 0, 0, 0], g: [0; 9], mf: 1, mg: 1, swap: false },
    FamilySpec { id: "coprime-", f: [1, 0, 0, 0, 0, 0, 0, 0, 0], g: [0; 9], mf: 1, mg: 1, swap: true },
    // 2²(2+9m): f = (1+x−x²)+yx²+y²x², g = (1+x−x²)+y(−x+x²)+y²(−1+x²)
    FamilySpec {
        id: "2not3+",
        f: [1, 1, -1, 0, 0, 1, 0, 0, 1],
        g: [1, 1, -1, 0, -1, 1, -1, 0, 1],
        mf: 1, mg: 1, swap: false,
    },
    FamilySpec {
        id: "2not3-",
        f: [1, 1, -1, 0, 0, 1, 0, 0, 1],
        g: [1, 1, -1, 0, -1, 1, -1, 0, 1],
        mf: 1, mg: 1, swap: true,
    },
    // 2²·3⁷m: f = (1+x−x²)+y(1−x²)+y²(1−x²) + mh, g = (1−x²)+y(1+x−x²)+y²(x−x²) − mh
    FamilySpec {
        id: "div6-x3",
        f: [1, 1, -1, 1, 0, -1, 1, 0, -1],
        g: [1, 0, -1, 1, 1, -1, 0, 1, -1],
        mf: 1, mg: -1, swap: false,
    },
    // 2²·3⁶(1+3m): f = (1+x)+y+y², g = 1+y
    FamilySpec {
        id: "div6+",
        f: [1, 1, 0, 1, 0, 0, 1, 0, 0],
        g: [1, 0, 0, 1, 0, 0, 0, 0, 0],
        mf: 1, mg: 1, swap: false,
    },
    FamilySpec {
        id: "div6-",
        f: [1, 1, 0, 1, 0, 0, 1, 0, 0],
        g: [1, 0, 0, 1, 0, 0, 0, 0, 0],
        mf: 1, mg: 1, swap: true,
    },
    // 3⁷(2m+1): f = (1+x)+y(1+x)+y²(1+x−x²), g = (1+x)+y(1+x−x²)+y²
    FamilySpec {
        id: "3not2-odd3",
        f: [1, 1, 0, 1, 1, 0, 1, 1, -1],
        g: [1, 1, 0, 1, 1, -1, 1, 0, 0],
        mf: 1, mg: 1, swap: false,
    },
    // 3⁶(1+6m): f = 1+y, g = 1
    FamilySpec {
        id: "3not2+",
        f: [1, 0, 0, 1, 0, 0, 0, 0, 0],
        g: [1, 0, 0, 0, 0, 0, 0, 0, 0],
        mf: 1, mg: 1, swap: false,
    },
    FamilySpec {
        id: "3not2-",
        f: [1, 0, 0, 1, 0, 0, 0, 0, 0],
        g: [1, 0, 0, 0, 0, 0, 0, 0, 0],
        mf: 1, mg: 1, swap: true,
    },
];

pub fn families(group: GroupId) -> Result<&'static [FamilySpec]> {
    match group {
        GroupId::G18_4 => Ok(&G18_4_FAMILIES),
        GroupId::Z3xD6 => Ok(&Z3XD6_FAMILIES),
        GroupId::D18 => Err(Error::UnsupportedGroup(group.name().to_string())),
    }
}

/// The determinant a family attains at parameter m.
pub fn family_value(group: GroupId, family_id: &str, m: &BigInt) -> Result<BigInt> {
    let e = three_exponent(group)?;
    let base: BigInt = match family_id.trim_end_matches(['+', '-']) {
        "coprime" => BigInt::one() + 18 * m,
        "2not3" => 4 * (BigInt::from(2) + 9 * m),
        "div6" => 4 * pow3(e) * (BigInt::one() + 3 * m),
        "div6-x3" => return Ok(4 * pow3(e + 1) * m),
        "3not2" => pow3(e) * (BigInt::one() + 6 * m),
        "3not2-odd3" => return Ok(pow3(e + 1) * (BigInt::one() + 2 * m)),
        _ => return Err(Error::UnknownFamily(family_id.to_string())),
    };
    if family_id.ends_with('-') {
        Ok(-base)
    } else {
        Ok(base)
    }
}

/// Instantiates the cited (f, g) pair at parameter m as a coefficient vector.
pub fn family_element(
    table: &GroupTable,
    family_id: &str,
    m: &BigInt,
) -> Result<GroupRingElement> {
    let group = table
        .spec()
        .id()
        .ok_or_else(|| Error::UnsupportedGroup("custom".to_string()))?;
    let fam = families(group)?
        .iter()
        .find(|f| f.id == family_id)
        .ok_or_else(|| Error::UnknownFamily(family_id.to_string()))?;
    let mut coeffs = Vec::with_capacity(18);
    for &c in &fam.f {
        coeffs.push(BigInt::from(c) + fam.mf * m);
    }
    for &c in &fam.g {
        coeffs.push(BigInt::from(c) + fam.mg * m);
    }
    let elem = GroupRingElement::new(table, coeffs)?;
    Ok(if fam.swap { elem.swap_blocks() } else { elem })
}

/// A group-ring element whose determinant is exactly D, or `NotInSpectrum`.
pub fn achieve(table: &GroupTable, d: &BigInt) -> Result<GroupRingElement> {
    let group = table
        .spec()
        .id()
        .ok_or_else(|| Error::UnsupportedGroup("custom".to_string()))?;
    three_exponent(group)?; // rejects d18: witnesses are only cited there
    let form = classify(d, group);
    if !form.is_member() {
        return Err(Error::NotInSpectrum(d.clone(), group.name().to_string()));
    }
    let family = form.family.expect("member of a theorem group has a family");
    let m = form.m.expect("member of a theorem group has a parameter");
    family_element(table, family, &m)
}

/// Membership report for the subgroup spectra cited in the paper.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SubgroupSpectra {
    pub in_d18: bool,
    pub in_z3xz3: bool,
    pub in_d6: bool,
}

/// Checks D against S(D₁₈), S(ℤ₃×ℤ₃) and S(D₆).
pub fn classify_subgroup_spectra(d: &BigInt) -> SubgroupSpectra {
    if d.is_zero() {
        return SubgroupSpectra { in_d18: true, in_z3xz3: true, in_d6: true };
    }
    let a = valuation(d, 2);
    let b = valuation(d, 3);
    let r9 = d.mod_floor(&BigInt::from(9));
    SubgroupSpectra {
        in_d18: (a == 0 || a >= 2) && (b == 0 || b >= 5),
        in_z3xz3: r9 == BigInt::one() || r9 == BigInt::from(8) || b >= 6,
        in_d6: (a == 0 || a >= 2) && (b == 0 || b >= 3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::det::det_via_reduction;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn classify_paper_examples() {
        let f = classify(&big(17), GroupId::G18_4);
        assert_eq!(f.class, ClassTag::CoprimeSix);
        assert_eq!(f.sign, Some(Sign::Minus));
        assert_eq!(f.m, Some(big(-1))); // 17 = -(1+18m) at m=-1

        let f = classify(&big(8), GroupId::G18_4);
        assert_eq!(f.class, ClassTag::TwoNotThree);
        assert_eq!(f.m, Some(big(0)));

        assert!(!classify(&big(12), GroupId::G18_4).is_member());

        // 3⁶·5 = 3⁶(2m+1) at m=2; the family parameterization writes it as
        // −3⁶(1+6m) at m=−1
        let f = classify(&(pow3(6) * 5), GroupId::Z3xD6);
        assert_eq!(f.class, ClassTag::ThreeNotTwo);
        assert_eq!(f.family, Some("3not2-"));
        assert_eq!(f.m, Some(big(-1)));
        assert_eq!(family_value(GroupId::Z3xD6, "3not2-", &big(-1)).unwrap(), pow3(6) * 5);

        assert!(!classify(&(pow3(6) * 5), GroupId::G18_4).is_member());
    }

    #[test]
    fn classify_zero_is_div_six() {
        for g in [GroupId::G18_4, GroupId::Z3xD6] {
            let f = classify(&big(0), g);
            assert_eq!(f.class, ClassTag::DivSix);
            assert_eq!(f.m, Some(big(0)));
        }
    }

    #[test]
    fn classify_m_matches_family_value() {
        for g in [GroupId::G18_4, GroupId::Z3xD6] {
            for d in -30000..=30000i64 {
                let d = big(d);
                let form = classify(&d, g);
                if let (Some(fam), Some(m)) = (form.family, form.m.as_ref()) {
                    assert_eq!(family_value(g, fam, m).unwrap(), d, "{g} {fam} {m}");
                }
            }
        }
    }

    #[test]
    fn achieve_examples() {
        let t = GroupId::G18_4.table();
        let one = achieve(&t, &big(1)).unwrap();
        assert_eq!(det_via_reduction(&t, &one), big(1));
        assert_eq!(one, GroupRingElement::identity(&t));

        let w = achieve(&t, &big(19)).unwrap();
        assert_eq!(det_via_reduction(&t, &w), big(19));

        let w = achieve(&t, &big(-1)).unwrap();
        assert_eq!(w, GroupRingElement::identity(&t).swap_blocks());

        assert!(matches!(achieve(&t, &big(7)), Err(Error::NotInSpectrum(_, _))));

        let w = achieve(&t, &(-pow3(9))).unwrap();
        assert_eq!(det_via_reduction(&t, &w), -pow3(9));

        let t = GroupId::Z3xD6.table();
        let d = pow3(6) * 4;
        let w = achieve(&t, &d).unwrap();
        assert_eq!(det_via_reduction(&t, &w), d);
    }

    #[test]
    fn achieve_unsupported_for_d18() {
        let t = GroupId::D18.table();
        assert!(matches!(achieve(&t, &big(1)), Err(Error::UnsupportedGroup(_))));
    }

    #[test]
    fn family_round_trip_small_m() {
        for g in [GroupId::G18_4, GroupId::Z3xD6] {
            let t = g.table();
            for fam in families(g).unwrap() {
                for m in -3..=3i64 {
                    let m = big(m);
                    let e = family_element(&t, fam.id, &m).unwrap();
                    assert_eq!(
                        det_via_reduction(&t, &e),
                        family_value(g, fam.id, &m).unwrap(),
                        "{g} family {} at m={m}",
                        fam.id
                    );
                }
            }
        }
    }

    #[test]
    fn swap_families_negate_partner() {
        for g in [GroupId::G18_4, GroupId::Z3xD6] {
            let t = g.table();
            for fam in families(g).unwrap().iter().filter(|f| f.swap) {
                let partner = fam.id.replace('-', "+");
                let partner = families(g)
                    .unwrap()
                    .iter()
                    .find(|f| f.id == partner && !f.swap)
                    .unwrap();
                for m in -4..=4i64 {
                    let m = big(m);
                    let a = det_via_reduction(&t, &family_element(&t, fam.id, &m).unwrap());
                    let b = det_via_reduction(&t, &family_element(&t, partner.id, &m).unwrap());
                    assert_eq!(a, -b);
                }
            }
        }
    }

    #[test]
    fn d18_classification_uses_published_formula() {
        assert!(classify(&big(1), GroupId::D18).is_member());
        assert!(classify(&big(5), GroupId::D18).is_member());
        assert!(!classify(&big(2), GroupId::D18).is_member());
        assert!(classify(&big(4), GroupId::D18).is_member());
        assert!(!classify(&big(3), GroupId::D18).is_member());
        assert!(!classify(&(pow3(4) * 5), GroupId::D18).is_member());
        assert!(classify(&(pow3(5) * 5), GroupId::D18).is_member());
        assert!(classify(&big(0), GroupId::D18).is_member());
        assert_eq!(classify(&(pow3(5) * 4), GroupId::D18).class, ClassTag::DivSix);
    }

    #[test]
    fn subgroup_spectra_examples() {
        let r = classify_subgroup_spectra(&big(1));
        assert!(r.in_d18 && r.in_z3xz3 && r.in_d6);

        let r = classify_subgroup_spectra(&big(10));
        assert!(r.in_z3xz3);
        assert!(!r.in_d6); // even but not a multiple of 4

        // 540 = 2²·3³·5
        let r = classify_subgroup_spectra(&big(540));
        assert!(r.in_d6);
        assert!(!r.in_d18);
    }

    #[test]
    fn theorem_classes_partition_member_set() {
        // predicate disjointness and union over a window, against a direct
        // residue/valuation restatement of the theorems
        for g in [GroupId::G18_4, GroupId::Z3xD6] {
            let e = three_exponent(g).unwrap();
            for d in -200_000..=200_000i64 {
                let bd = big(d);
                let form = classify(&bd, g);
                let expected = direct_membership(d, e);
                assert_eq!(form.is_member(), expected.is_some(), "{g} D={d}");
                if let Some(class) = expected {
                    assert_eq!(form.class, class, "{g} D={d}");
                }
            }
        }
    }

    // test-local restatement of the theorem sets, independent of classify
    fn direct_membership(d: i64, e: u32) -> Option<ClassTag> {
        let p3 = 3i64.pow(e);
        if d % 6 == 0 || (d % 2 == 0 && d % 3 == 0) {
            return if d % (4 * p3) == 0 { Some(ClassTag::DivSix) } else { None };
        }
        if d % 2 == 0 {
            let r = (d / 4).rem_euclid(9);
            return if d % 4 == 0 && (r == 2 || r == 7) { Some(ClassTag::TwoNotThree) } else { None };
        }
        if d % 3 == 0 {
            return if d % p3 == 0 { Some(ClassTag::ThreeNotTwo) } else { None };
        }
        let r = d.rem_euclid(18);
        if r == 1 || r == 17 {
            Some(ClassTag::CoprimeSix)
        } else {
            None
        }
    }
}
