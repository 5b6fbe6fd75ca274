//! The injection `PA(n) -> PA(n+1)` behind the strict monotonicity of
//! `pa(n)`, and an exhaustive verifier for it.
//!
//! Every PA partition falls into exactly one case, decided by its smallest
//! part `v` and the parts just above it:
//!
//! | case | shape of the tail | image |
//! |------|-------------------|-------|
//! | `LastEven` | `v` even | append `1` |
//! | `LastOne` | `v = 1` | append `1` |
//! | `LastOdd5Repeated` | `v >= 5` odd, repeated | last `v` becomes `(v+1)/2` twos |
//! | `LastOdd5SingleM2` | `v >= 5` odd, single, `v = 2 mod 3` | `v` becomes `(v+1)/3` threes |
//! | `LastOdd5SingleM0` | same, `v = 0 mod 3` | `(v-3)/3` threes then `2,2` |
//! | `LastOdd5SingleM1` | same, `v = 1 mod 3` | `(v-1)/3` threes then `2` |
//! | `ThreeTail4` | at least four trailing 3's | last `3,3,3,3` becomes `3,2,2,2,2,2` |
//! | `ThreeTail3No4` | exactly three trailing 3's, no part 4 | `3,3,3` becomes `5,5` |
//! | `ThreeTail3With4` | exactly three trailing 3's, 4 is a part | `3,3,3` becomes `4,3,3` |
//! | `ThreeTail2` | exactly two trailing 3's | `3,3` becomes `3,2,2` |
//! | `ThreeTail1Eq` | one trailing 3, `l1 = l2` | `l1 += 1` |
//! | `ThreeTail1Neq` | one trailing 3, `l1 != l2` | drop the 3, `l1 += 4` |
//!
//! Injectivity is only claimed for `n >= 13`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_pa_capped, is_pa, Partition, DEFAULT_ENUMERATION_CAP};

/// Smallest `n` for which the injection is claimed.
pub const INJECTION_MIN_N: u64 = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseId {
    LastEven,
    LastOne,
    LastOdd5Repeated,
    #[serde(rename = "LAST_ODD5_SINGLE_m2")]
    LastOdd5SingleM2,
    #[serde(rename = "LAST_ODD5_SINGLE_m0")]
    LastOdd5SingleM0,
    #[serde(rename = "LAST_ODD5_SINGLE_m1")]
    LastOdd5SingleM1,
    ThreeTail4,
    ThreeTail3No4,
    ThreeTail3With4,
    ThreeTail2,
    ThreeTail1Eq,
    ThreeTail1Neq,
}

impl CaseId {
    pub const ALL: [CaseId; 12] = [
        CaseId::LastEven,
        CaseId::LastOne,
        CaseId::LastOdd5Repeated,
        CaseId::LastOdd5SingleM2,
        CaseId::LastOdd5SingleM0,
        CaseId::LastOdd5SingleM1,
        CaseId::ThreeTail4,
        CaseId::ThreeTail3No4,
        CaseId::ThreeTail3With4,
        CaseId::ThreeTail2,
        CaseId::ThreeTail1Eq,
        CaseId::ThreeTail1Neq,
    ];
}

fn trailing_count(parts: &[u64], v: u64) -> usize {
    parts.iter().rev().take_while(|&&p| p == v).count()
}

/// The one case that applies to `p`.
///
/// Each arm tests a disjoint condition on the smallest part; the error arm
/// only fires for inputs outside `PA(n)`, n >= 1.
pub fn classify_case(p: &Partition) -> Result<CaseId> {
    let parts = p.parts();
    let no_case = || Error::NoCase {
        parts: parts.to_vec(),
    };
    if !is_pa(p) {
        return Err(no_case());
    }
    let v = p.smallest().ok_or_else(no_case)?;
    let case = match v {
        _ if v % 2 == 0 => CaseId::LastEven,
        1 => CaseId::LastOne,
        3 => match trailing_count(parts, 3) {
            1 => {
                if parts.len() >= 2 && parts[0] == parts[1] {
                    CaseId::ThreeTail1Eq
                } else {
                    CaseId::ThreeTail1Neq
                }
            }
            2 => CaseId::ThreeTail2,
            3 => {
                if p.contains_part(4) {
                    CaseId::ThreeTail3With4
                } else {
                    CaseId::ThreeTail3No4
                }
            }
            _ => CaseId::ThreeTail4,
        },
        _ => {
            if trailing_count(parts, v) >= 2 {
                CaseId::LastOdd5Repeated
            } else {
                match v % 3 {
                    2 => CaseId::LastOdd5SingleM2,
                    0 => CaseId::LastOdd5SingleM0,
                    _ => CaseId::LastOdd5SingleM1,
                }
            }
        }
    };
    Ok(case)
}

/// Whether the defining condition of `case` holds for the PA partition `p`,
/// tested on its own and not through [`classify_case`].
pub fn case_condition(case: CaseId, p: &Partition) -> bool {
    let parts = p.parts();
    let Some(v) = p.smallest() else {
        return false;
    };
    let reps = trailing_count(parts, v);
    let odd5 = v >= 5 && v % 2 == 1;
    let top_equal = parts.len() >= 2 && parts[0] == parts[1];
    match case {
        CaseId::LastEven => v % 2 == 0,
        CaseId::LastOne => v == 1,
        CaseId::LastOdd5Repeated => odd5 && reps >= 2,
        CaseId::LastOdd5SingleM2 => odd5 && reps == 1 && v % 3 == 2,
        CaseId::LastOdd5SingleM0 => odd5 && reps == 1 && v % 3 == 0,
        CaseId::LastOdd5SingleM1 => odd5 && reps == 1 && v % 3 == 1,
        CaseId::ThreeTail4 => v == 3 && reps >= 4,
        CaseId::ThreeTail3No4 => v == 3 && reps == 3 && !p.contains_part(4),
        CaseId::ThreeTail3With4 => v == 3 && reps == 3 && p.contains_part(4),
        CaseId::ThreeTail2 => v == 3 && reps == 2,
        CaseId::ThreeTail1Eq => v == 3 && reps == 1 && top_equal,
        CaseId::ThreeTail1Neq => v == 3 && reps == 1 && !top_equal,
    }
}

/// Every case whose condition holds for `p`.
pub fn matching_cases(p: &Partition) -> Vec<CaseId> {
    CaseId::ALL
        .into_iter()
        .filter(|&c| case_condition(c, p))
        .collect()
}

/// Applies the rule of `classify_case(p)`. The result partitions `n + 1`.
///
/// For `p = (3)` the rule "drop the 3, add 4 to the largest part" leaves no
/// largest part; the image is then `(4)`.
pub fn phi(p: &Partition) -> Result<Partition> {
    let case = classify_case(p)?;
    Ok(apply_case(p, case))
}

fn apply_case(p: &Partition, case: CaseId) -> Partition {
    let mut parts = p.parts().to_vec();
    let v = *parts.last().expect("classified partitions are nonempty");
    let repeat = |parts: &mut Vec<u64>, x: u64, k: u64| {
        parts.extend(std::iter::repeat_n(x, k as usize));
    };
    match case {
        CaseId::LastEven | CaseId::LastOne => parts.push(1),
        CaseId::LastOdd5Repeated => {
            parts.pop();
            repeat(&mut parts, 2, v.div_ceil(2));
        }
        CaseId::LastOdd5SingleM2 => {
            parts.pop();
            repeat(&mut parts, 3, (v + 1) / 3);
        }
        CaseId::LastOdd5SingleM0 => {
            parts.pop();
            repeat(&mut parts, 3, (v - 3) / 3);
            repeat(&mut parts, 2, 2);
        }
        CaseId::LastOdd5SingleM1 => {
            parts.pop();
            repeat(&mut parts, 3, (v - 1) / 3);
            parts.push(2);
        }
        CaseId::ThreeTail4 => {
            parts.truncate(parts.len() - 4);
            parts.push(3);
            repeat(&mut parts, 2, 5);
        }
        CaseId::ThreeTail3No4 => {
            parts.truncate(parts.len() - 3);
            parts.extend([5, 5]);
        }
        CaseId::ThreeTail3With4 => {
            parts.truncate(parts.len() - 3);
            parts.extend([4, 3, 3]);
        }
        CaseId::ThreeTail2 => {
            parts.truncate(parts.len() - 2);
            parts.extend([3, 2, 2]);
        }
        CaseId::ThreeTail1Eq => parts[0] += 1,
        CaseId::ThreeTail1Neq => {
            parts.pop();
            match parts.first_mut() {
                Some(first) => *first += 4,
                None => parts.push(4),
            }
        }
    }
    Partition::from_sorted(parts)
}

/// What each case's image is supposed to end with.
pub fn tail_shape_holds(case: CaseId, image: &Partition) -> bool {
    let parts = image.parts();
    let len = parts.len();
    let count = |v| trailing_count(parts, v);
    // the part right before the trailing run of `v`, if any
    let before = |v| {
        let k = count(v);
        if k < len {
            Some(parts[len - 1 - k])
        } else {
            None
        }
    };
    let run_before = |v: u64, w: u64| -> usize {
        let k = count(v);
        parts[..len - k]
            .iter()
            .rev()
            .take_while(|&&p| p == w)
            .count()
    };
    match case {
        CaseId::LastEven => count(1) == 1,
        CaseId::LastOne => count(1) >= 2,
        CaseId::LastOdd5Repeated => {
            count(2) >= 3 && matches!(before(2), Some(x) if x >= 5 && x % 2 == 1)
        }
        // A single part v has no predecessor; the image is then all 3's.
        CaseId::LastOdd5SingleM2 => count(3) >= 2 && before(3).is_none_or(|x| x >= 6 && x % 2 == 0),
        CaseId::LastOdd5SingleM0 => count(2) == 2 && run_before(2, 3) >= 2,
        CaseId::LastOdd5SingleM1 => count(2) == 1 && run_before(2, 3) >= 2,
        CaseId::ThreeTail4 => count(2) == 5 && run_before(2, 3) >= 1,
        CaseId::ThreeTail3No4 => count(5) == 2,
        CaseId::ThreeTail3With4 => count(3) == 2 && run_before(3, 4) >= 2,
        CaseId::ThreeTail2 => count(2) == 2 && run_before(2, 3) == 1,
        CaseId::ThreeTail1Eq => count(3) == 1,
        CaseId::ThreeTail1Neq => matches!(image.smallest(), Some(x) if x >= 4 && x % 2 == 0),
    }
}

/// The partition of `m` the injection `PA(m-1) -> PA(m)` never reaches:
/// all 2's for even `m`, `3` followed by 2's for odd `m`.
pub fn witness(m: u64) -> Partition {
    let mut parts = Vec::new();
    if m % 2 == 1 {
        parts.push(3);
    }
    let twos = if m % 2 == 1 { (m - 3) / 2 } else { m / 2 };
    parts.extend(std::iter::repeat_n(2, twos as usize));
    Partition::from_sorted(parts)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InjectionReport {
    pub n: u64,
    pub domain_size: usize,
    pub image_size: usize,
    pub case_counts: BTreeMap<CaseId, usize>,
    /// Exactly one case condition held for every element of the domain.
    pub classification_unique: bool,
    pub image_valid: bool,
    pub injective: bool,
    pub witness_absent: bool,
    pub tail_shapes_hold: bool,
    pub collisions: Vec<(Partition, Partition)>,
}

impl InjectionReport {
    pub fn passed(&self) -> bool {
        self.classification_unique
            && self.image_valid
            && self.injective
            && self.witness_absent
            && self.tail_shapes_hold
    }
}

pub fn verify_injection(n: u64) -> Result<InjectionReport> {
    verify_injection_capped(n, DEFAULT_ENUMERATION_CAP)
}

/// Applies `phi` to every element of `PA(n)` and audits the image.
///
/// Collisions are collected rather than treated as errors.
pub fn verify_injection_capped(n: u64, cap: u64) -> Result<InjectionReport> {
    if n < INJECTION_MIN_N {
        return Err(Error::Domain(format!(
            "injection is only claimed for n >= {INJECTION_MIN_N}, got {n}"
        )));
    }
    let domain = enumerate_pa_capped(n, cap)?;
    let mut case_counts = BTreeMap::new();
    let mut seen: HashMap<Partition, Partition> = HashMap::with_capacity(domain.len());
    let mut collisions = Vec::new();
    let mut image_valid = true;
    let mut classification_unique = true;
    let mut tail_shapes_hold = true;
    for p in &domain {
        let case = classify_case(p)?;
        if matching_cases(p) != [case] {
            classification_unique = false;
        }
        *case_counts.entry(case).or_insert(0) += 1;
        let img = apply_case(p, case);
        if img.n() != n + 1 || !is_pa(&img) {
            image_valid = false;
        }
        if !tail_shape_holds(case, &img) {
            tail_shapes_hold = false;
        }
        if let Some(prev) = seen.insert(img, p.clone()) {
            collisions.push((prev, p.clone()));
        }
    }
    let witness_absent = !seen.contains_key(&witness(n + 1));
    Ok(InjectionReport {
        n,
        domain_size: domain.len(),
        image_size: seen.len(),
        case_counts,
        classification_unique,
        image_valid,
        injective: collisions.is_empty() && seen.len() == domain.len(),
        witness_absent,
        tail_shapes_hold,
        collisions,
    })
}
