//! Part sizes of a complete multipartite graph and subsets of part indices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sizes `n_0, .., n_{t-1}` of the parts of `K(n_0, .., n_{t-1})`.
///
/// Every size is at least one and the total vertex count fits in a `u64`,
/// so every subset weight does as well.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PartSizes {
    sizes: Vec<u64>,
    total: u64,
}

impl PartSizes {
    pub fn new(sizes: Vec<u64>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::invalid("a multipartite graph needs at least one part"));
        }
        if let Some(i) = sizes.iter().position(|&n| n == 0) {
            return Err(Error::invalid(format!("part {i} has size 0")));
        }
        let total = sizes
            .iter()
            .try_fold(0u64, |acc, &n| acc.checked_add(n))
            .ok_or_else(|| Error::invalid("total vertex count overflows u64"))?;
        Ok(PartSizes { sizes, total })
    }

    /// Number of parts `t`.
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn size(&self, i: usize) -> u64 {
        self.sizes[i]
    }

    /// Total vertex count `f(N_t)`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// First vertex id of part `i` under the blockwise numbering.
    pub fn offset(&self, i: usize) -> u64 {
        self.sizes[..i].iter().sum()
    }

    /// Part containing vertex `v` under the blockwise numbering.
    pub fn part_of(&self, v: u64) -> Option<usize> {
        let mut end = 0u64;
        for (i, &n) in self.sizes.iter().enumerate() {
            end += n;
            if v < end {
                return Some(i);
            }
        }
        None
    }

    pub(crate) fn check_set(&self, set: &PartSet) -> Result<()> {
        match set.max() {
            Some(i) if i >= self.len() => Err(Error::invalid(format!(
                "part index {i} out of range for {} parts",
                self.len()
            ))),
            _ => Ok(()),
        }
    }

    /// Reorders the parts: part `i` of the result is part `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<PartSizes> {
        let mut seen = vec![false; self.len()];
        if perm.len() != self.len() {
            return Err(Error::invalid("permutation length differs from part count"));
        }
        for &j in perm {
            if j >= self.len() || std::mem::replace(&mut seen[j], true) {
                return Err(Error::invalid("not a permutation of the part indices"));
            }
        }
        PartSizes::new(perm.iter().map(|&j| self.sizes[j]).collect())
    }
}

impl TryFrom<Vec<u64>> for PartSizes {
    type Error = Error;

    fn try_from(sizes: Vec<u64>) -> Result<Self> {
        PartSizes::new(sizes)
    }
}

impl From<PartSizes> for Vec<u64> {
    fn from(parts: PartSizes) -> Self {
        parts.sizes
    }
}

impl fmt::Display for PartSizes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K(")?;
        for (i, n) in self.sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

/// A set of part indices, kept sorted ascending without duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PartSet {
    members: Vec<usize>,
}

impl PartSet {
    pub fn empty() -> Self {
        PartSet::default()
    }

    /// Builds a set from indices in any order; duplicates are rejected.
    pub fn new(mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate part index {}", w[0])));
        }
        Ok(PartSet { members })
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        PartSet { members }
    }

    /// Bit `i` of `mask` selects part `i`.
    pub fn from_mask(mask: u64) -> Self {
        let members = (0..64).filter(|&i| mask >> i & 1 == 1).collect();
        PartSet { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    /// Indices in `0..t` not in the set.
    pub fn complement(&self, t: usize) -> impl Iterator<Item = usize> + '_ {
        (0..t).filter(move |&i| !self.contains(i))
    }

    /// Image of the set under `i -> map[i]`.
    pub fn mapped(&self, map: &[usize]) -> PartSet {
        let mut members: Vec<usize> = self.members.iter().map(|&i| map[i]).collect();
        members.sort_unstable();
        PartSet { members }
    }

    /// 1-based rendering, e.g. `{1,2}`.
    pub fn one_based(&self) -> String {
        let inner: Vec<String> = self.members.iter().map(|i| (i + 1).to_string()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl TryFrom<Vec<usize>> for PartSet {
    type Error = Error;

    fn try_from(members: Vec<usize>) -> Result<Self> {
        PartSet::new(members)
    }
}

impl From<PartSet> for Vec<usize> {
    fn from(set: PartSet) -> Self {
        set.members
    }
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.members.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

/// `f(I)`: the total size of the parts indexed by `set`.
pub fn subset_weight(parts: &PartSizes, set: &PartSet) -> Result<u64> {
    parts.check_set(set)?;
    Ok(weight_unchecked(parts, set))
}

pub(crate) fn weight_unchecked(parts: &PartSizes, set: &PartSet) -> u64 {
    set.members().iter().map(|&i| parts.size(i)).sum()
}
