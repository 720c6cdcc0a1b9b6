//! Explicit minimum p-dominating sets.
//!
//! Vertices inside a part are interchangeable, so a set is described by how
//! many vertices it takes from each part ([`WitnessCounts`]) and realised on
//! the blockwise vertex numbering by [`realize`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{compute_gamma, Case};
use crate::oracle::VertexSet;
use crate::parts::{weight_unchecked, PartSet, PartSizes};
use crate::subset_opt;

/// Number of selected vertices in each part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WitnessCounts {
    counts: Vec<u64>,
}

impl WitnessCounts {
    /// Counts checked against `parts`: same length and `c_i <= n_i`.
    pub fn new(parts: &PartSizes, counts: Vec<u64>) -> Result<Self> {
        let w = WitnessCounts { counts };
        w.check(parts)?;
        Ok(w)
    }

    /// Counts without validation; use [`WitnessCounts::check`] before
    /// relying on them.
    pub fn from_vec(counts: Vec<u64>) -> Self {
        WitnessCounts { counts }
    }

    pub fn check(&self, parts: &PartSizes) -> Result<()> {
        if self.counts.len() != parts.len() {
            return Err(Error::invalid(format!(
                "{} counts for {} parts",
                self.counts.len(),
                parts.len()
            )));
        }
        for (i, (&c, &n)) in self.counts.iter().zip(parts.sizes()).enumerate() {
            if c > n {
                return Err(Error::invalid(format!("count {c} exceeds size {n} of part {i}")));
            }
        }
        Ok(())
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Whether the represented set p-dominates `K(parts)`.
    ///
    /// A vertex of part `i` outside the set sees every selected vertex except
    /// those of its own part, so the condition is `total - c_i >= p` for each
    /// part that is not fully selected.
    pub fn dominates(&self, parts: &PartSizes, p: u64) -> bool {
        let total = self.total();
        self.counts
            .iter()
            .zip(parts.sizes())
            .all(|(&c, &n)| c == n || total - c >= p)
    }
}

/// Quotient/remainder split of `p - f(I)` over the `t - |I| - 1` excluded
/// parts that are not the last one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedFillParams {
    pub set: PartSet,
    pub k: usize,
    pub q: u64,
    pub r: u64,
}

impl BalancedFillParams {
    pub fn new(parts: &PartSizes, p: u64, set: &PartSet) -> Result<Self> {
        if !subset_opt::is_admissible(parts, p, set)? {
            return Err(Error::invalid(format!("{set} is not admissible for p = {p}")));
        }
        let k = set.len();
        let slots = (parts.len() - k - 1) as u64;
        let rest = p - weight_unchecked(parts, set);
        Ok(BalancedFillParams {
            set: set.clone(),
            k,
            q: rest / slots,
            r: rest % slots,
        })
    }
}

/// A p-dominating set of size `p + demand(I)` for admissible `I`.
///
/// Parts in `I` are taken whole. The excluded parts, in ascending index
/// order, get `q + 1` vertices for the first `r`, `q` for the next
/// `t - k - 1 - r`, and the last one gets `demand(I)`.
pub fn balanced_fill(parts: &PartSizes, p: u64, set: &PartSet) -> Result<WitnessCounts> {
    let params = BalancedFillParams::new(parts, p, set)?;
    let s2 = subset_opt::demand(parts, p, set)?;
    let excluded: Vec<usize> = set.complement(parts.len()).collect();
    let (last, rest) = excluded.split_last().expect("at least two excluded parts");

    let mut counts = vec![0; parts.len()];
    for &i in set.members() {
        counts[i] = parts.size(i);
    }
    for (pos, &i) in rest.iter().enumerate() {
        counts[i] = if (pos as u64) < params.r {
            params.q + 1
        } else {
            params.q
        };
    }
    counts[*last] = s2;
    Ok(WitnessCounts { counts })
}

/// Counts of a minimum p-dominating set of `K(parts)`.
pub fn build_witness(parts: &PartSizes, p: u64) -> Result<WitnessCounts> {
    let b = compute_gamma(parts, p)?;
    let counts = match b.case {
        Case::AllVertices => WitnessCounts {
            counts: parts.sizes().to_vec(),
        },
        Case::FullParts => {
            let set = b.s1_witness.as_ref().expect("s1 witness present");
            let mut counts = vec![0; parts.len()];
            for &i in set.members() {
                counts[i] = parts.size(i);
            }
            WitnessCounts { counts }
        }
        Case::Balanced => {
            let set = b.s2_witness.as_ref().expect("balanced case has an s2 witness");
            balanced_fill(parts, p, set)?
        }
    };
    debug_assert_eq!(counts.total(), b.gamma);
    Ok(counts)
}

/// Lowest `c_i` vertex ids of each part's block.
pub fn realize(parts: &PartSizes, counts: &WitnessCounts) -> Result<VertexSet> {
    counts.check(parts)?;
    let ids = usize::try_from(counts.total())
        .map_err(|_| Error::invalid("witness too large to realise"))?;
    let mut members = Vec::with_capacity(ids);
    let mut offset = 0u64;
    for (&c, &n) in counts.counts.iter().zip(parts.sizes()) {
        members.extend((offset..offset + c).map(|v| v as usize));
        offset += n;
    }
    Ok(VertexSet::new(members))
}
