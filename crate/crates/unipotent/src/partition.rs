use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Zero parts are never stored, so two partitions are equal exactly when
/// their part lists are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// The two parity classes used to classify orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityClass {
    /// Every even part has even multiplicity.
    P1,
    /// Every odd part has even multiplicity.
    Pm1,
}

/// Collapse flavours: B and D land in `P1`, C lands in `Pm1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CollapseKind {
    B,
    C,
    D,
}

impl CollapseKind {
    pub fn class(self) -> ParityClass {
        match self {
            CollapseKind::B | CollapseKind::D => ParityClass::P1,
            CollapseKind::C => ParityClass::Pm1,
        }
    }

    /// Required parity of the total (1 = odd).
    pub fn total_parity(self) -> usize {
        match self {
            CollapseKind::B => 1,
            CollapseKind::C | CollapseKind::D => 0,
        }
    }
}

impl FromStr for CollapseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" => Ok(CollapseKind::B),
            "C" => Ok(CollapseKind::C),
            "D" => Ok(CollapseKind::D),
            _ => Err(Error::Parse(format!("unknown collapse family `{s}`"))),
        }
    }
}

impl ParityClass {
    /// Parity of the parts that must come in pairs.
    fn paired_parity(self) -> usize {
        match self {
            ParityClass::P1 => 0,
            ParityClass::Pm1 => 1,
        }
    }
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing.
    /// Trailing zeros are dropped; a zero followed by a positive part is rejected.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts the input and strips zeros.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Entry `i`, or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, d: usize) -> usize {
        self.parts.iter().filter(|&&p| p == d).count()
    }

    /// Distinct part sizes, largest first.
    pub fn distinct(&self) -> Vec<usize> {
        let mut out = self.parts.clone();
        out.dedup();
        out
    }

    /// Parts in increasing order.
    pub fn increasing(&self) -> Vec<usize> {
        self.parts.iter().rev().copied().collect()
    }

    /// `result[j] = #{i : parts[i] > j}`.
    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    pub fn in_class(&self, class: ParityClass) -> bool {
        self.violators(class).is_empty()
    }

    /// Values of the paired parity that occur an odd number of times, largest first.
    fn violators(&self, class: ParityClass) -> Vec<usize> {
        self.distinct()
            .into_iter()
            .filter(|&d| d % 2 == class.paired_parity() && self.multiplicity(d) % 2 == 1)
            .collect()
    }

    /// One greedy step on the violator `r`: remove 1 from the last block of
    /// size `r`, add 1 to the first block smaller than `r - 1` (or open a new
    /// block of size 1).
    fn collapse_step(parts: &mut Vec<usize>, r: usize) {
        let last = parts.iter().rposition(|&p| p == r).expect("violator is a part");
        parts[last] -= 1;
        match parts.iter().position(|&p| p + 1 < r) {
            Some(j) => parts[j] += 1,
            None => parts.push(1),
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
    }

    /// Largest member of the target parity class dominated by `self`.
    pub fn collapse(&self, kind: CollapseKind) -> Result<Partition> {
        if self.total() % 2 != kind.total_parity() {
            return Err(Error::InvalidInput(format!(
                "{kind:?}-collapse needs a total of parity {}, got {}",
                kind.total_parity(),
                self.total()
            )));
        }
        let class = kind.class();
        let mut current = self.clone();
        while let Some(&r) = current.violators(class).first() {
            Partition::collapse_step(&mut current.parts, r);
        }
        Ok(current)
    }

    /// The metaplectic variant: C-collapse steps on a partition of odd total,
    /// stopping when only the value 1 is left with odd multiplicity; one block 1
    /// is then removed.
    pub(crate) fn mp_collapse(&self) -> Partition {
        debug_assert!(self.total() % 2 == 1);
        let mut current = self.clone();
        loop {
            let r = *current
                .violators(ParityClass::Pm1)
                .first()
                .expect("odd total always has an odd part of odd multiplicity");
            if r == 1 {
                current.parts.pop();
                return current;
            }
            Partition::collapse_step(&mut current.parts, r);
        }
    }

    /// Prefix-sum comparison.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.total() != other.total() {
            return Err(Error::InvalidInput(format!(
                "dominance needs equal totals, got {} and {}",
                self.total(),
                other.total()
            )));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Adds `amount` to the first `count` entries (padding with zeros).
    pub fn add_to_prefix(&self, count: usize, amount: usize) -> Partition {
        let len = self.len().max(count);
        Partition::from_unsorted((0..len).map(|i| self.part(i) + if i < count { amount } else { 0 }))
    }

    /// Union of two multisets of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_unsorted(self.parts.iter().chain(other.parts.iter()).copied())
    }

    /// Removes one copy of each listed part; `None` if one is missing.
    pub fn remove_parts(&self, remove: &[usize]) -> Option<Partition> {
        let mut parts = self.parts.clone();
        for r in remove {
            let i = parts.iter().position(|p| p == r)?;
            parts.remove(i);
        }
        Some(Partition { parts })
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Parses `a,b,c` (optionally bracketed). Out-of-order input is rejected.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidInput("parts must be positive".into()));
        }
        Partition::new(parts)
    }
}
