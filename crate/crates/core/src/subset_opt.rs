//! The two minimisations behind the closed formula.
//!
//! * `s1 = min { f(I) : f(I) >= p }`, the cheapest way to p-dominate with
//!   whole parts.
//! * `s2 = min { demand(I) : I admissible }` where
//!   `demand(I) = ceil((p - f(I)) / (t - |I| - 1))` and `I` is admissible when
//!   `|I| <= t - 2`, `f(I) < p` and every part outside `I` has at least
//!   `demand(I)` vertices.
//!
//! Witnesses are canonical: among optimal subsets the smallest cardinality
//! wins, then the lexicographically smallest ascending member list.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::parts::{weight_unchecked, PartSet, PartSizes};
use crate::reach::SuffixReach;

/// Part counts up to which exhaustive subset enumeration is the default.
pub const ENUMERATION_MAX_PARTS: usize = 20;

/// Hard ceiling for any `2^t` enumeration.
pub const ENUMERATION_HARD_LIMIT: usize = 30;

/// A positive demand, or infinity when the admissible family is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DemandValue {
    Finite(u64),
    Infinite,
}

impl DemandValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            DemandValue::Finite(v) => Some(v),
            DemandValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == DemandValue::Infinite
    }

    /// `p + self`, where anything plus infinity (or an overflowing sum) is
    /// infinite.
    pub fn plus(self, p: u64) -> DemandValue {
        match self {
            DemandValue::Finite(v) => p
                .checked_add(v)
                .map_or(DemandValue::Infinite, DemandValue::Finite),
            DemandValue::Infinite => DemandValue::Infinite,
        }
    }
}

impl fmt::Display for DemandValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DemandValue::Finite(v) => write!(f, "{v}"),
            DemandValue::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for DemandValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DemandValue::Finite(v) => serializer.serialize_u64(*v),
            DemandValue::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for DemandValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct DemandVisitor;

        impl Visitor<'_> for DemandVisitor {
            type Value = DemandValue;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a positive integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<DemandValue, E> {
                Ok(DemandValue::Finite(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<DemandValue, E> {
                u64::try_from(v)
                    .map(DemandValue::Finite)
                    .map_err(|_| E::custom("demand must be nonnegative"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<DemandValue, E> {
                if v == "inf" {
                    Ok(DemandValue::Infinite)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }

        deserializer.deserialize_any(DemandVisitor)
    }
}

fn check_p(p: u64) -> Result<()> {
    if p == 0 {
        Err(Error::invalid("p must be at least 1"))
    } else {
        Ok(())
    }
}

/// Orders witnesses: smaller cardinality first, then ascending member list.
fn canonical_cmp(a: &PartSet, b: &PartSet) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.members().cmp(b.members()))
}

fn enumeration_guard(parts: &PartSizes) -> Result<()> {
    if parts.len() > ENUMERATION_HARD_LIMIT {
        return Err(Error::limit(
            "subset enumeration parts",
            parts.len() as u128,
            ENUMERATION_HARD_LIMIT as u128,
        ));
    }
    Ok(())
}

fn mask_weight(sizes: &[u64], mask: u64) -> u64 {
    let mut m = mask;
    let mut w = 0;
    while m != 0 {
        w += sizes[m.trailing_zeros() as usize];
        m &= m - 1;
    }
    w
}

/// `s1` together with its canonical witness.
///
/// Enumerates all `2^t` subsets for `t <= 20`, and otherwise runs a
/// subset-sum reachability DP.
pub fn min_sum_at_least(parts: &PartSizes, p: u64) -> Result<(u64, PartSet)> {
    if parts.len() <= ENUMERATION_MAX_PARTS {
        min_sum_at_least_enumerate(parts, p)
    } else {
        min_sum_at_least_dp(parts, p)
    }
}

fn check_s1_pre(parts: &PartSizes, p: u64) -> Result<()> {
    check_p(p)?;
    if parts.total() < p {
        return Err(Error::precondition(format!(
            "no part subset reaches p = {p}: total size is {}",
            parts.total()
        )));
    }
    Ok(())
}

pub fn min_sum_at_least_enumerate(parts: &PartSizes, p: u64) -> Result<(u64, PartSet)> {
    check_s1_pre(parts, p)?;
    enumeration_guard(parts)?;
    let sizes = parts.sizes();
    let mut best: Option<(u64, PartSet)> = None;
    for mask in 0u64..1 << parts.len() {
        let w = mask_weight(sizes, mask);
        if w < p {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bw, _)) if w != *bw => w < *bw,
            Some((_, bs)) => canonical_cmp(&PartSet::from_mask(mask), bs).is_lt(),
        };
        if better {
            best = Some((w, PartSet::from_mask(mask)));
        }
    }
    Ok(best.expect("the full part set reaches p"))
}

pub fn min_sum_at_least_dp(parts: &PartSizes, p: u64) -> Result<(u64, PartSet)> {
    check_s1_pre(parts, p)?;
    let sizes = parts.sizes();
    let t = parts.len();
    // A minimal qualifying subset loses qualification when any member is
    // dropped, so s1 < p + max n_i.
    let max_n = *sizes.iter().max().expect("nonempty");
    let cap = parts.total().min(p.saturating_add(max_n - 1));
    let table = SuffixReach::build(sizes, cap, t)?;
    let (s1, count) = (0..=t)
        .filter_map(|c| table.row(0, c).min_at_least(p as usize).map(|s| (s as u64, c)))
        .min()
        .expect("the full part set reaches p");
    let members = table
        .lex_min(count, s1, s1)
        .expect("a subset with the optimal weight exists");
    Ok((s1, PartSet::from_sorted(members)))
}

/// `ceil((p - f(I)) / (t - |I| - 1))` for `|I| <= t - 2` and `f(I) < p`.
pub fn demand(parts: &PartSizes, p: u64, set: &PartSet) -> Result<u64> {
    check_p(p)?;
    parts.check_set(set)?;
    let t = parts.len();
    if set.len() + 2 > t {
        return Err(Error::invalid(format!(
            "demand needs |I| <= t - 2, got |I| = {} with t = {t}",
            set.len()
        )));
    }
    let f = weight_unchecked(parts, set);
    if f >= p {
        return Err(Error::invalid(format!("demand needs f(I) < p, got f(I) = {f}, p = {p}")));
    }
    Ok(raw_demand(p, f, t, set.len()))
}

fn raw_demand(p: u64, weight: u64, t: usize, k: usize) -> u64 {
    (p - weight).div_ceil((t - k - 1) as u64)
}

/// Membership in the admissible family for `p`.
pub fn is_admissible(parts: &PartSizes, p: u64, set: &PartSet) -> Result<bool> {
    check_p(p)?;
    parts.check_set(set)?;
    Ok(admissible_demand(parts, p, set).is_some())
}

/// The demand of `set` when it is admissible.
fn admissible_demand(parts: &PartSizes, p: u64, set: &PartSet) -> Option<u64> {
    let t = parts.len();
    if set.len() + 2 > t {
        return None;
    }
    let f = weight_unchecked(parts, set);
    if f >= p {
        return None;
    }
    let d = raw_demand(p, f, t, set.len());
    let min_out = set.complement(t).map(|i| parts.size(i)).min()?;
    (d <= min_out).then_some(d)
}

fn check_s2_pre(parts: &PartSizes, p: u64) -> Result<()> {
    check_p(p)?;
    if parts.len() < 2 {
        return Err(Error::precondition("s2 needs at least two parts"));
    }
    if parts.total() <= p {
        return Err(Error::precondition(format!(
            "s2 needs total size > p, got {} <= {p}",
            parts.total()
        )));
    }
    Ok(())
}

/// Every admissible subset, in canonical order (by size, then
/// lexicographically).
pub fn admissible_family(parts: &PartSizes, p: u64) -> Result<Vec<PartSet>> {
    check_p(p)?;
    enumeration_guard(parts)?;
    let mut family: Vec<PartSet> = (0u64..1 << parts.len())
        .map(PartSet::from_mask)
        .filter(|s| admissible_demand(parts, p, s).is_some())
        .collect();
    family.sort_by(canonical_cmp);
    Ok(family)
}

/// `s2` by enumerating all `2^t` part subsets.
///
/// The witness minimises demand, then cardinality, then the ascending
/// member list. Returns `(Infinite, None)` when no subset is admissible.
pub fn min_demand(parts: &PartSizes, p: u64) -> Result<(DemandValue, Option<PartSet>)> {
    check_s2_pre(parts, p)?;
    enumeration_guard(parts)?;
    let mut best: Option<(u64, PartSet)> = None;
    for mask in 0u64..1 << parts.len() {
        let set = PartSet::from_mask(mask);
        let Some(d) = admissible_demand(parts, p, &set) else {
            continue;
        };
        let better = match &best {
            None => true,
            Some((bd, bs)) => d.cmp(bd).then_with(|| canonical_cmp(&set, bs)).is_lt(),
        };
        if better {
            best = Some((d, set));
        }
    }
    Ok(match best {
        Some((d, set)) => (DemandValue::Finite(d), Some(set)),
        None => (DemandValue::Infinite, None),
    })
}

/// `s2` without enumerating subsets.
///
/// Parts are sorted by `(size, index)`. Each admissible `I` has a unique
/// smallest excluded part in that order (the pivot): everything before the
/// pivot is in `I`, and the pivot size bounds the demand. For each pivot and
/// each cardinality a subset-sum table over the parts after the pivot gives
/// the largest weight not exceeding `p - 1`, which minimises the demand for
/// that cardinality.
///
/// Once the optimal `(demand, |I|)` is known the canonical witness is the
/// lexicographically smallest subset of that cardinality that contains all
/// parts smaller than the demand and whose weight falls in the band that
/// yields exactly that demand. It coincides with the witness of
/// [`min_demand`].
pub fn min_demand_fast(parts: &PartSizes, p: u64) -> Result<(DemandValue, Option<PartSet>)> {
    check_s2_pre(parts, p)?;
    let t = parts.len();
    let sizes = parts.sizes();
    let mut order: Vec<usize> = (0..t).collect();
    order.sort_by_key(|&i| (sizes[i], i));
    let sorted: Vec<u64> = order.iter().map(|&i| sizes[i]).collect();

    let table = SuffixReach::build(&sorted, p - 1, t - 2)?;
    let mut best: Option<(u64, usize)> = None;
    let mut prefix = 0u64;
    for pivot in 0..=t - 2 {
        if pivot > 0 {
            prefix += sorted[pivot - 1];
        }
        if prefix >= p {
            break;
        }
        let room = p - 1 - prefix;
        for extra in 0..=(t - 2 - pivot).min(table.max_count()) {
            let Some(s) = table.row(pivot + 1, extra).max_at_most(room as usize) else {
                continue;
            };
            let k = pivot + extra;
            let d = raw_demand(p, prefix + s as u64, t, k);
            if d <= sorted[pivot] && best.is_none_or(|b| (d, k) < b) {
                best = Some((d, k));
            }
        }
    }

    let Some((d, k)) = best else {
        return Ok((DemandValue::Infinite, None));
    };
    let witness = demand_band_witness(parts, p, d, k)?;
    Ok((DemandValue::Finite(d), Some(witness)))
}

/// Lexicographically smallest `I` with `|I| = k`, demand exactly `d`, and
/// every part smaller than `d` inside `I`.
fn demand_band_witness(parts: &PartSizes, p: u64, d: u64, k: usize) -> Result<PartSet> {
    let t = parts.len();
    let slots = (t - k - 1) as u64;
    let lo = p.saturating_sub(d.saturating_mul(slots));
    let hi = p - 1 - (d - 1) * slots;

    let (forced, free): (Vec<usize>, Vec<usize>) = (0..t).partition(|&i| parts.size(i) < d);
    let forced_weight: u64 = forced.iter().map(|&i| parts.size(i)).sum();
    let need = k - forced.len();
    let free_weights: Vec<u64> = free.iter().map(|&i| parts.size(i)).collect();
    let (lo, hi) = (lo.saturating_sub(forced_weight), hi - forced_weight);
    let table = SuffixReach::build(&free_weights, hi, need)?;
    let picked = table
        .lex_min(need, lo, hi)
        .expect("an optimal admissible subset exists");
    let mut members = forced;
    members.extend(picked.into_iter().map(|j| free[j]));
    members.sort_unstable();
    Ok(PartSet::from_sorted(members))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table_parts() -> PartSizes {
        PartSizes::new(vec![2, 2, 10, 17]).unwrap()
    }

    fn set(m: &[usize]) -> PartSet {
        PartSet::new(m.to_vec()).unwrap()
    }

    #[test]
    fn s1_examples() {
        let parts = table_parts();
        assert_eq!(min_sum_at_least(&parts, 5).unwrap(), (10, set(&[2])));
        assert_eq!(min_sum_at_least(&parts, 11).unwrap(), (12, set(&[0, 2])));
        assert_eq!(min_sum_at_least(&parts, 13).unwrap(), (14, set(&[0, 1, 2])));
        let single = PartSizes::new(vec![7]).unwrap();
        assert_eq!(min_sum_at_least(&single, 7).unwrap(), (7, set(&[0])));
    }

    #[test]
    fn s1_dp_agrees_on_examples() {
        let parts = table_parts();
        for p in 1..=31 {
            assert_eq!(
                min_sum_at_least_dp(&parts, p).unwrap(),
                min_sum_at_least_enumerate(&parts, p).unwrap(),
                "p = {p}"
            );
        }
    }

    #[test]
    fn s1_precondition() {
        let parts = table_parts();
        assert!(matches!(min_sum_at_least(&parts, 32), Err(Error::Precondition(_))));
        assert!(matches!(min_sum_at_least_dp(&parts, 32), Err(Error::Precondition(_))));
        assert!(matches!(min_sum_at_least(&parts, 0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn demand_examples() {
        let parts = table_parts();
        assert_eq!(demand(&parts, 6, &set(&[])).unwrap(), 2);
        assert_eq!(demand(&parts, 14, &set(&[2])).unwrap(), 2);
        let two = PartSizes::new(vec![3, 3]).unwrap();
        assert_eq!(demand(&two, 2, &set(&[])).unwrap(), 2);
    }

    #[test]
    fn demand_rejects_violations() {
        let parts = table_parts();
        assert!(demand(&parts, 6, &set(&[0, 1, 2])).is_err());
        assert!(demand(&parts, 6, &set(&[2])).is_err());
        assert!(demand(&parts, 6, &set(&[9])).is_err());
    }

    #[test]
    fn admissibility_examples() {
        let parts = table_parts();
        assert!(is_admissible(&parts, 5, &set(&[0, 1])).unwrap());
        assert!(!is_admissible(&parts, 7, &set(&[])).unwrap());
        assert!(!is_admissible(&parts, 15, &set(&[2])).unwrap());
        assert!(is_admissible(&parts, 5, &set(&[7])).is_err());
    }

    #[test]
    fn s2_examples() {
        let parts = table_parts();
        assert_eq!(
            min_demand(&parts, 5).unwrap(),
            (DemandValue::Finite(1), Some(set(&[0, 1])))
        );
        assert_eq!(min_demand(&parts, 15).unwrap(), (DemandValue::Infinite, None));
        assert_eq!(
            min_demand(&parts, 1).unwrap(),
            (DemandValue::Finite(1), Some(set(&[])))
        );
        assert_eq!(min_demand_fast(&parts, 6).unwrap().0, DemandValue::Finite(2));
        assert_eq!(min_demand_fast(&parts, 13).unwrap().0, DemandValue::Finite(1));
    }

    #[test]
    fn s2_fast_matches_reference_on_table_graph() {
        let parts = table_parts();
        for p in 1..31 {
            assert_eq!(min_demand_fast(&parts, p).unwrap(), min_demand(&parts, p).unwrap());
        }
    }

    #[test]
    fn s2_preconditions() {
        let one = PartSizes::new(vec![5]).unwrap();
        assert!(matches!(min_demand(&one, 2), Err(Error::Precondition(_))));
        let parts = table_parts();
        assert!(matches!(min_demand(&parts, 31), Err(Error::Precondition(_))));
        assert!(matches!(min_demand_fast(&parts, 31), Err(Error::Precondition(_))));
    }

    #[test]
    fn family_is_canonically_ordered() {
        let parts = table_parts();
        let fam = admissible_family(&parts, 13).unwrap();
        let want: Vec<PartSet> = [&[2][..], &[0, 1], &[0, 2], &[1, 2]]
            .iter()
            .map(|m| set(m))
            .collect();
        assert_eq!(fam, want);
    }

    #[test]
    fn demand_value_order_and_serde() {
        assert!(DemandValue::Finite(u64::MAX) < DemandValue::Infinite);
        assert_eq!(DemandValue::Finite(3).plus(4), DemandValue::Finite(7));
        assert_eq!(DemandValue::Infinite.plus(4), DemandValue::Infinite);
        assert_eq!(DemandValue::Finite(u64::MAX).plus(1), DemandValue::Infinite);
        assert_eq!(serde_json::to_string(&DemandValue::Infinite).unwrap(), "\"inf\"");
        assert_eq!(
            serde_json::from_str::<DemandValue>("4").unwrap(),
            DemandValue::Finite(4)
        );
        assert!(serde_json::from_str::<DemandValue>("\"nan\"").is_err());
    }
}
