//! Enumeration/sampling of group-ring elements with empirical verification
//! of the theorems and congruence lemmas.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::det::{det_via_reduction, factor_profile, FactorProfile};
use crate::error::{Error, Result};
use crate::group::{GroupId, GroupTable};
use crate::ring::GroupRingElement;
use crate::spectrum::{classify, classify_subgroup_spectra, three_exponent, ClassTag};

pub const DEFAULT_BUDGET: u64 = 100_000_000;
const MAX_STORED_VIOLATIONS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchConfig {
    pub group: GroupIdName,
    pub lo: i64,
    pub hi: i64,
    /// flat positions allowed to be nonzero; empty means all 18
    pub support: Vec<usize>,
    pub mode: SearchMode,
    pub samples: u64,
    pub seed: u64,
    pub budget: u64,
}

/// Serializable wrapper so reports carry the group by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupIdName(pub GroupId);

impl Serialize for GroupIdName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.0.name())
    }
}

impl SearchConfig {
    pub fn new(group: GroupId, lo: i64, hi: i64, mode: SearchMode) -> Self {
        SearchConfig {
            group: GroupIdName(group),
            lo,
            hi,
            support: Vec::new(),
            mode,
            samples: 0,
            seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }

    fn support_positions(&self, order: usize) -> Vec<usize> {
        if self.support.is_empty() {
            (0..order).collect()
        } else {
            self.support.clone()
        }
    }

    fn validate(&self, order: usize) -> Result<u64> {
        if self.lo > self.hi {
            return Err(Error::BadCoefficients(format!("empty range {}..{}", self.lo, self.hi)));
        }
        for &p in &self.support {
            if p >= order {
                return Err(Error::BadCoefficients(format!("support position {p} out of range")));
            }
        }
        match self.mode {
            SearchMode::Random => {
                if self.samples > self.budget {
                    return Err(Error::BudgetExceeded {
                        required: self.samples as u128,
                        budget: self.budget,
                    });
                }
                Ok(self.samples)
            }
            SearchMode::Exhaustive => {
                let base = (self.hi - self.lo + 1) as u128;
                let positions = self.support_positions(order).len() as u32;
                let total = base.checked_pow(positions).unwrap_or(u128::MAX);
                if total > self.budget as u128 {
                    return Err(Error::BudgetExceeded { required: total, budget: self.budget });
                }
                Ok(total as u64)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub coeffs: Vec<i64>,
    pub det: String,
    pub predicate: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ClassCounts {
    pub coprime_six: u64,
    pub two_not_three: u64,
    pub three_not_two: u64,
    pub div_six: u64,
    pub not_member: u64,
}

/// Deterministic summary of a sweep; identical (config, seed) pairs yield
/// identical reports regardless of parallelism.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub total: u64,
    pub classes: ClassCounts,
    pub violations: Vec<Violation>,
    pub residues_mod_18: Vec<u32>,
    pub residues_mod_36: Vec<u32>,
    pub residues_mod_4x3e: Vec<u64>,
    pub min_det: String,
    pub max_det: String,
}

struct Partial {
    classes: ClassCounts,
    violations: Vec<Violation>,
    res18: u32,  // bitmask
    res36: u64,  // bitmask
    res4x3e: std::collections::BTreeSet<u64>,
    min: Option<BigInt>,
    max: Option<BigInt>,
}

impl Partial {
    fn empty() -> Self {
        Partial {
            classes: ClassCounts::default(),
            violations: Vec::new(),
            res18: 0,
            res36: 0,
            res4x3e: std::collections::BTreeSet::new(),
            min: None,
            max: None,
        }
    }

    fn absorb_det(&mut self, d: &BigInt, modulus_4x3e: u64) {
        self.res18 |= 1 << u32::try_from(d.mod_floor(&BigInt::from(18))).unwrap();
        self.res36 |= 1 << u64::try_from(d.mod_floor(&BigInt::from(36))).unwrap();
        self.res4x3e
            .insert(u64::try_from(d.mod_floor(&BigInt::from(modulus_4x3e))).unwrap());
        if self.min.as_ref().is_none_or(|m| d < m) {
            self.min = Some(d.clone());
        }
        if self.max.as_ref().is_none_or(|m| d > m) {
            self.max = Some(d.clone());
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.classes.coprime_six += other.classes.coprime_six;
        self.classes.two_not_three += other.classes.two_not_three;
        self.classes.three_not_two += other.classes.three_not_two;
        self.classes.div_six += other.classes.div_six;
        self.classes.not_member += other.classes.not_member;
        self.violations.extend(other.violations);
        self.res18 |= other.res18;
        self.res36 |= other.res36;
        self.res4x3e.extend(other.res4x3e);
        self.min = match (self.min, other.min) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.max = match (self.max, other.max) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

fn coeffs_for_index(cfg: &SearchConfig, positions: &[usize], order: usize, mut idx: u64) -> Vec<i64> {
    let base = (cfg.hi - cfg.lo + 1) as u64;
    let mut c = vec![0i64; order];
    for &p in positions {
        c[p] = cfg.lo + (idx % base) as i64;
        idx /= base;
    }
    c
}

// Per-sample substream: one ChaCha stream per sample index, so the sweep is
// reproducible under any parallel split.
fn coeffs_for_sample(cfg: &SearchConfig, positions: &[usize], order: usize, idx: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(idx);
    let mut c = vec![0i64; order];
    for &p in positions {
        c[p] = rng.gen_range(cfg.lo..=cfg.hi);
    }
    c
}

fn finish(cfg: &SearchConfig, total: u64, mut p: Partial, _modulus_4x3e: u64) -> SearchReport {
    p.violations.sort();
    p.violations.truncate(MAX_STORED_VIOLATIONS);
    SearchReport {
        config: cfg.clone(),
        total,
        classes: p.classes,
        violations: p.violations,
        residues_mod_18: (0..18).filter(|&r| p.res18 & (1 << r) != 0).collect(),
        residues_mod_36: (0..36).filter(|&r| p.res36 & (1 << r) != 0).collect(),
        residues_mod_4x3e: p.res4x3e.into_iter().collect(),
        min_det: p.min.map_or_else(String::new, |d| d.to_string()),
        max_det: p.max.map_or_else(String::new, |d| d.to_string()),
    }
}

fn sweep<F>(cfg: &SearchConfig, table: &GroupTable, check: F) -> Result<SearchReport>
where
    F: Fn(&[i64], &BigInt, &mut Vec<Violation>) -> ClassTag + Sync,
{
    let order = table.order();
    let total = cfg.validate(order)?;
    let positions = cfg.support_positions(order);
    let e = three_exponent(cfg.group.0).unwrap_or(9);
    let modulus = 4 * 3u64.pow(e);

    let partial = (0..total)
        .into_par_iter()
        .fold(Partial::empty, |mut acc, idx| {
            let c = match cfg.mode {
                SearchMode::Exhaustive => coeffs_for_index(cfg, &positions, order, idx),
                SearchMode::Random => coeffs_for_sample(cfg, &positions, order, idx),
            };
            let elem = GroupRingElement::from_i64(table, &c).expect("coeff arity");
            let d = det_via_reduction(table, &elem);
            acc.absorb_det(&d, modulus);
            let class = check(&c, &d, &mut acc.violations);
            match class {
                ClassTag::CoprimeSix => acc.classes.coprime_six += 1,
                ClassTag::TwoNotThree => acc.classes.two_not_three += 1,
                ClassTag::ThreeNotTwo => acc.classes.three_not_two += 1,
                ClassTag::DivSix => acc.classes.div_six += 1,
                ClassTag::NotMember => acc.classes.not_member += 1,
            }
            acc
        })
        .reduce(Partial::empty, Partial::merge);

    Ok(finish(cfg, total, partial, modulus))
}

fn push_violation(out: &mut Vec<Violation>, coeffs: &[i64], d: &BigInt, predicate: &str) {
    // over-collect locally; the merged list is sorted and truncated at the end
    if out.len() < 2 * MAX_STORED_VIOLATIONS {
        out.push(Violation {
            coeffs: coeffs.to_vec(),
            det: d.to_string(),
            predicate: predicate.to_string(),
        });
    }
}

/// Evaluates every configured element, classifies its determinant against
/// the theorem spectrum and the cited subgroup spectra, and records any
/// contradiction as a violation.
pub fn run_search(cfg: &SearchConfig, table: &GroupTable) -> Result<SearchReport> {
    let group = cfg.group.0;
    // only the two theorem groups contain both Z3xZ3 and D6 subgroups
    let check_subgroups = group != GroupId::D18;
    sweep(cfg, table, |coeffs, d, out| {
        let form = classify(d, group);
        if !form.is_member() {
            push_violation(out, coeffs, d, "spectrum-membership");
        }
        if check_subgroups {
            let sub = classify_subgroup_spectra(d);
            if !sub.in_z3xz3 {
                push_violation(out, coeffs, d, "subgroup-z3xz3");
            }
            if !sub.in_d6 {
                push_violation(out, coeffs, d, "subgroup-d6");
            }
        }
        form.class
    })
}

/// Checks the congruence lemmas on every configured element: even
/// determinants are multiples of 4, multiples of 3 are multiples of 3^e,
/// and the factor components satisfy their mod-3 congruences.
pub fn verify_congruence_lemmas(cfg: &SearchConfig, table: &GroupTable) -> Result<SearchReport> {
    let group = cfg.group.0;
    let e = three_exponent(group)?;
    let p3e = BigInt::from(3).pow(e);
    sweep(cfg, table, |coeffs, d, out| {
        if d.is_even() && !d.mod_floor(&BigInt::from(4)).is_zero() {
            push_violation(out, coeffs, d, "even-implies-div4");
        }
        if d.mod_floor(&BigInt::from(3)).is_zero() && !d.mod_floor(&p3e).is_zero() {
            push_violation(out, coeffs, d, "div3-implies-div3e");
        }
        let elem = GroupRingElement::from_i64(table, coeffs).expect("coeff arity");
        let profile = factor_profile(table, &elem).expect("theorem group profile");
        let three = BigInt::from(3);
        match &profile {
            FactorProfile::G18_4 { a, b } => {
                let ra = a.mod_floor(&three);
                for (i, bi) in b.iter().enumerate() {
                    if bi.mod_floor(&three) != ra {
                        push_violation(out, coeffs, d, &format!("b{}-cong-a-mod3", i + 1));
                    }
                }
            }
            FactorProfile::Z3xD6 { a } => {
                let r1 = a[0].mod_floor(&three);
                let r1sq = (&r1 * &r1).mod_floor(&three);
                if a[1].mod_floor(&three) != r1 {
                    push_violation(out, coeffs, d, "a2-cong-a1-mod3");
                }
                if a[2].mod_floor(&three) != r1sq {
                    push_violation(out, coeffs, d, "a3-cong-a1sq-mod3");
                }
                if a[3].mod_floor(&three) != r1sq {
                    push_violation(out, coeffs, d, "a4-cong-a1sq-mod3");
                }
            }
        }
        if *d != profile.product() {
            push_violation(out, coeffs, d, "profile-product-agreement");
        }
        classify(d, group).class
    })
}

/// Stable-key-order JSON rendering of a report.
pub fn report_to_json(report: &SearchReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialization")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(g: GroupId) -> GroupTable {
        g.table()
    }

    #[test]
    fn empty_support_zero_range_is_single_zero_element() {
        let t = table(GroupId::G18_4);
        let mut cfg = SearchConfig::new(GroupId::G18_4, 0, 0, SearchMode::Exhaustive);
        cfg.support = vec![0];
        let r = run_search(&cfg, &t).unwrap();
        assert_eq!(r.total, 1);
        assert_eq!(r.classes.div_six, 1); // det 0 is in the divisible-by-six class
        assert!(r.violations.is_empty());
        assert_eq!(r.min_det, "0");
    }

    #[test]
    fn exhaustive_f_block_binary_sweep_has_no_violations() {
        let t = table(GroupId::G18_4);
        let mut cfg = SearchConfig::new(GroupId::G18_4, 0, 1, SearchMode::Exhaustive);
        cfg.support = (0..9).collect();
        let r = run_search(&cfg, &t).unwrap();
        assert_eq!(r.total, 512);
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.classes.not_member, 0);
    }

    #[test]
    fn random_sweeps_have_no_violations() {
        for g in [GroupId::G18_4, GroupId::Z3xD6] {
            let t = table(g);
            let mut cfg = SearchConfig::new(g, -2, 2, SearchMode::Random);
            cfg.samples = 2_000;
            cfg.seed = 1;
            let r = run_search(&cfg, &t).unwrap();
            assert!(r.violations.is_empty());
            let r = verify_congruence_lemmas(&cfg, &t).unwrap();
            assert!(r.violations.is_empty(), "{:?}", r.violations);
        }
    }

    #[test]
    fn reports_are_deterministic_across_thread_counts() {
        let g = GroupId::Z3xD6;
        let t = table(g);
        let mut cfg = SearchConfig::new(g, -2, 2, SearchMode::Random);
        cfg.samples = 500;
        cfg.seed = 99;
        let baseline = report_to_json(&run_search(&cfg, &t).unwrap());
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| report_to_json(&run_search(&cfg, &t).unwrap()));
        assert_eq!(baseline, single);
    }

    #[test]
    fn counts_sum_to_total() {
        let g = GroupId::G18_4;
        let t = table(g);
        let mut cfg = SearchConfig::new(g, -1, 1, SearchMode::Random);
        cfg.samples = 300;
        cfg.seed = 5;
        let r = run_search(&cfg, &t).unwrap();
        let sum = r.classes.coprime_six
            + r.classes.two_not_three
            + r.classes.three_not_two
            + r.classes.div_six
            + r.classes.not_member;
        assert_eq!(sum, r.total);
    }

    #[test]
    fn budget_is_enforced() {
        let t = table(GroupId::G18_4);
        let mut cfg = SearchConfig::new(GroupId::G18_4, -3, 3, SearchMode::Exhaustive);
        cfg.budget = 1_000;
        assert!(matches!(
            run_search(&cfg, &t),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn congruence_lemmas_reject_d18() {
        let t = table(GroupId::D18);
        let cfg = SearchConfig::new(GroupId::D18, 0, 1, SearchMode::Exhaustive);
        assert!(matches!(
            verify_congruence_lemmas(&cfg, &t),
            Err(Error::UnsupportedGroup(_))
        ));
    }

    #[test]
    fn d18_membership_sweep() {
        let t = table(GroupId::D18);
        let mut cfg = SearchConfig::new(GroupId::D18, -1, 1, SearchMode::Random);
        cfg.samples = 1_000;
        cfg.seed = 7;
        let r = run_search(&cfg, &t).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
    }
}
