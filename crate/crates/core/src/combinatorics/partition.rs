use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::GroupParams;

/// An integer partition. Parts are weakly decreasing and trailing zeros are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!("partition parts must be weakly decreasing: {parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(m)`, or the empty partition when `m = 0`.
    pub fn row(m: usize) -> Self {
        Partition::new(vec![m]).expect("single part")
    }

    /// The single-column partition `(1^m)`.
    pub fn column(m: usize) -> Self {
        Partition { parts: vec![1; m] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (zero-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols).map(|j| self.parts.iter().take_while(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// Parts padded with zeros to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Result<Vec<usize>> {
        if self.length() > n {
            return Err(Error::InvalidArgument(format!("partition {self} has more than {n} parts")));
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// `mu_1 - mu_n` with `mu` read as an `n`-tuple.
    pub fn spread(&self, n: usize) -> usize {
        let last = if self.length() >= n { self.part(n - 1) } else { 0 };
        self.first() - last
    }

    /// All partitions of `size`, in reverse lexicographic order.
    pub fn all(size: usize) -> Vec<Partition> {
        Partition::all_bounded(size, size)
    }

    /// All partitions of `size` with at most `max_len` parts.
    pub fn all_bounded(size: usize, max_len: usize) -> Vec<Partition> {
        fn go(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            for part in (1..=cap.min(rest)).rev() {
                cur.push(part);
                go(rest - part, part, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }
}

/// Dominance order: `mu <= nu` iff every partial sum of `mu` is at most the
/// corresponding partial sum of `nu`. Both partitions must have equal size.
pub fn dominance_leq(mu: &Partition, nu: &Partition) -> Result<bool> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: mu.to_string(),
            left_size: mu.size(),
            right: nu.to_string(),
            right_size: nu.size(),
        });
    }
    let len = mu.length().max(nu.length());
    let (mut sm, mut sn) = (0, 0);
    for j in 0..len {
        sm += mu.part(j);
        sn += nu.part(j);
        if sm > sn {
            return Ok(false);
        }
    }
    Ok(true)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses a comma list such as `2,1,1`; the empty string and `()` give the
/// empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad partition part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A dominant weight of `GL_n`: exactly `n` weakly decreasing integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    entries: Vec<i64>,
}

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("a weight needs at least one entry".into()));
        }
        if !entries.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!("weight {entries:?} is not dominant")));
        }
        Ok(DominantWeight { entries })
    }

    pub(crate) fn new_unchecked(entries: Vec<i64>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] >= w[1]));
        DominantWeight { entries }
    }

    pub fn zero(n: usize) -> Self {
        DominantWeight { entries: vec![0; n] }
    }

    pub fn from_partition(mu: &Partition, n: usize) -> Result<Self> {
        let entries = mu.padded(n)?.into_iter().map(|p| p as i64).collect();
        Ok(DominantWeight { entries })
    }

    /// The partition with the same entries, if all entries are nonnegative.
    pub fn to_partition(&self) -> Result<Partition> {
        if self.last() < 0 {
            return Err(Error::InvalidArgument(format!("weight {self} has a negative entry")));
        }
        Partition::new(self.entries.iter().map(|&e| e as usize).collect())
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn size(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn last(&self) -> i64 {
        *self.entries.last().expect("nonempty")
    }

    /// Membership in `X_r`: `0 <= lambda_n < q` and consecutive differences `< q`.
    pub fn q_restricted(&self, params: &GroupParams) -> bool {
        let q = params.q();
        self.entries.len() == params.n()
            && (0..q).contains(&self.last())
            && self.entries.windows(2).all(|w| w[0] - w[1] < q)
    }

    /// Adds `c * omega_n`.
    pub fn shift_det(&self, c: i64) -> DominantWeight {
        DominantWeight { entries: self.entries.iter().map(|e| e + c).collect() }
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn conjugate_is_an_involution() {
        for size in 0..=20 {
            for mu in Partition::all(size) {
                assert_eq!(mu.conjugate().conjugate(), mu);
                assert_eq!(mu.conjugate().size(), size);
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 1, 1]), &p(&[3, 1])).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[2, 2])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(matches!(dominance_leq(&p(&[3]), &p(&[2])), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for size in 0..=8 {
            let all = Partition::all(size);
            for a in &all {
                assert!(dominance_leq(a, a).unwrap());
                for b in &all {
                    let ab = dominance_leq(a, b).unwrap();
                    let ba = dominance_leq(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &all {
                        if dominance_leq(b, c).unwrap() {
                            assert!(dominance_leq(a, c).unwrap(), "{a} {b} {c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|s| Partition::all(s).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::all_bounded(6, 2).len(), 4);
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let mu = p(&[2, 1, 0, 0]);
        assert_eq!(mu.length(), 2);
        assert_eq!(mu.padded(4).unwrap(), vec![2, 1, 0, 0]);
        assert!(mu.padded(1).is_err());
        assert_eq!(mu.spread(2), 1);
        assert_eq!(mu.spread(3), 2);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn parse_partitions() {
        assert_eq!("2,1,1".parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn q_restricted_weights() {
        let g = GroupParams::new(2, 3, 1).unwrap();
        assert!(DominantWeight::new(vec![2, 1]).unwrap().q_restricted(&g));
        assert!(!DominantWeight::new(vec![4, 1]).unwrap().q_restricted(&g));
        assert!(!DominantWeight::new(vec![1, -1]).unwrap().q_restricted(&g));
        assert!(DominantWeight::new(vec![0, 1]).is_err());
    }
}
