use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parts::{PartSet, PartSizes};
use crate::subset_opt::{self, DemandValue, ENUMERATION_MAX_PARTS};

/// Which branch of the formula produced `gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Case {
    /// `t = 1` or `f(N_t) <= p`: every vertex has degree below `p`.
    AllVertices,
    /// `gamma = s1`; ties with `p + s2` land here.
    FullParts,
    /// `gamma = p + s2 < s1`.
    Balanced,
}

impl Case {
    pub fn as_str(self) -> &'static str {
        match self {
            Case::AllVertices => "all-vertices",
            Case::FullParts => "full-parts",
            Case::Balanced => "balanced",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all-vertices" => Ok(Case::AllVertices),
            "full-parts" => Ok(Case::FullParts),
            "balanced" => Ok(Case::Balanced),
            other => Err(Error::invalid(format!("unknown case {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaBreakdown {
    pub gamma: u64,
    pub p: u64,
    pub case: Case,
    pub s1: Option<u64>,
    pub s2: Option<DemandValue>,
    pub s1_witness: Option<PartSet>,
    pub s2_witness: Option<PartSet>,
}

/// The p-domination number of `K(parts)` with both minimisations spelled
/// out.
pub fn compute_gamma(parts: &PartSizes, p: u64) -> Result<GammaBreakdown> {
    if p == 0 {
        return Err(Error::invalid("p must be at least 1"));
    }
    if parts.len() == 1 || parts.total() <= p {
        return Ok(GammaBreakdown {
            gamma: parts.total(),
            p,
            case: Case::AllVertices,
            s1: None,
            s2: None,
            s1_witness: None,
            s2_witness: None,
        });
    }

    let (s1, s1_witness) = subset_opt::min_sum_at_least(parts, p)?;
    let (s2, s2_witness) = if parts.len() <= ENUMERATION_MAX_PARTS {
        subset_opt::min_demand(parts, p)?
    } else {
        subset_opt::min_demand_fast(parts, p)?
    };

    let (gamma, case) = match s2.plus(p) {
        DemandValue::Finite(balanced) if balanced < s1 => (balanced, Case::Balanced),
        _ => (s1, Case::FullParts),
    };
    Ok(GammaBreakdown {
        gamma,
        p,
        case,
        s1: Some(s1),
        s2: Some(s2),
        s1_witness: Some(s1_witness),
        s2_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table_parts() -> PartSizes {
        PartSizes::new(vec![2, 2, 10, 17]).unwrap()
    }

    #[test]
    fn balanced_row() {
        let b = compute_gamma(&table_parts(), 6).unwrap();
        assert_eq!(b.gamma, 8);
        assert_eq!(b.s1, Some(10));
        assert_eq!(b.s2, Some(DemandValue::Finite(2)));
        assert_eq!(b.case, Case::Balanced);
    }

    #[test]
    fn infinite_demand_row() {
        let b = compute_gamma(&table_parts(), 15).unwrap();
        assert_eq!(b.gamma, 17);
        assert_eq!(b.s1, Some(17));
        assert_eq!(b.s2, Some(DemandValue::Infinite));
        assert_eq!(b.s2_witness, None);
        assert_eq!(b.case, Case::FullParts);
    }

    #[test]
    fn ties_go_to_full_parts() {
        // p = 1: s1 = 2 = p + s2.
        let b = compute_gamma(&table_parts(), 1).unwrap();
        assert_eq!((b.gamma, b.case), (2, Case::FullParts));
    }

    #[test]
    fn trivial_cases() {
        let b = compute_gamma(&table_parts(), 31).unwrap();
        assert_eq!((b.gamma, b.case), (31, Case::AllVertices));
        assert!(b.s1.is_none() && b.s2.is_none());
        let single = PartSizes::new(vec![5]).unwrap();
        let b = compute_gamma(&single, 2).unwrap();
        assert_eq!((b.gamma, b.case), (5, Case::AllVertices));
        // f(N_t) <= p with t = 3 is also trivial
        let small = PartSizes::new(vec![1, 1, 1]).unwrap();
        assert_eq!(compute_gamma(&small, 3).unwrap().case, Case::AllVertices);
    }

    #[test]
    fn rejects_p_zero() {
        assert!(matches!(
            compute_gamma(&table_parts(), 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn large_t_uses_dp_paths() {
        let sizes: Vec<u64> = (0..26).map(|i| 1 + (i * 7 % 5)).collect();
        let parts = PartSizes::new(sizes).unwrap();
        for p in [1, 5, 17, 40, 70] {
            let b = compute_gamma(&parts, p).unwrap();
            assert!(b.gamma >= p.min(parts.total()) && b.gamma <= parts.total());
            if let Some(w) = &b.s2_witness {
                assert!(subset_opt::is_admissible(&parts, p, w).unwrap());
            }
        }
    }

    #[test]
    fn case_strings_round_trip() {
        for c in [Case::AllVertices, Case::FullParts, Case::Balanced] {
            assert_eq!(c.as_str().parse::<Case>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{c}\""));
        }
    }
}
