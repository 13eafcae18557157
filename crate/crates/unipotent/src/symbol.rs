use std::fmt;

use crate::error::{Error, Result};
use crate::gf2;
use crate::orbit::{Case, Orbit};
use crate::partition::Partition;

/// The symbol of a good-parity orbit, kept as the merged sequence
/// `x_0 <= x_1 <= ...`; the top row holds the even positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symbol {
    case: Case,
    entries: Vec<i64>,
}

/// Two merged positions `(first, second)` of a symbol, `first < second`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pair {
    pub first: usize,
    pub second: usize,
    pub values: (i64, i64),
    /// Parts of the padded partition the two entries come from.
    pub parts: (usize, usize),
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairStructure {
    /// Pairs in left-to-right order.
    pub pairs: Vec<Pair>,
    /// Positions not in any pair.
    pub unpaired: Vec<usize>,
}

impl PairStructure {
    pub fn unequal(&self) -> impl Iterator<Item = &Pair> {
        self.pairs.iter().filter(|p| !p.equal)
    }

    pub fn rank(&self) -> usize {
        self.unequal().count()
    }
}

/// Parity of `e_k` at position `k`, which only depends on the case.
fn e_parity(case: Case, k: usize) -> i64 {
    let k = k as i64;
    match case {
        Case::Cn | Case::Dn | Case::Mpn => (k + 1) % 2,
        Case::Bn => k % 2,
    }
}

fn e_shift(case: Case) -> usize {
    if case == Case::Mpn {
        1
    } else {
        0
    }
}

/// Parts listed increasingly, zero-padded to the length parity the case needs.
pub(crate) fn padded_increasing(p: &Partition, case: Case) -> Vec<usize> {
    let mut parts = p.increasing();
    let want_odd = case != Case::Dn;
    if (parts.len() % 2 == 1) != want_odd {
        parts.insert(0, 0);
    }
    parts
}

impl Symbol {
    pub fn of(o: &Orbit, case: Case) -> Result<Symbol> {
        if !o.has_good_parity(case) {
            return Err(Error::InvalidInput(format!(
                "{} orbit {} does not have good parity for {case}",
                o.family(),
                o.partition()
            )));
        }
        Ok(Symbol::of_partition(o.partition(), case))
    }

    /// The recipe without the parity check.
    pub(crate) fn of_partition(p: &Partition, case: Case) -> Symbol {
        let entries = padded_increasing(p, case)
            .iter()
            .enumerate()
            .map(|(k, &d)| ((d + k + e_shift(case)) / 2) as i64)
            .collect();
        Symbol { case, entries }
    }

    /// Rebuilds a symbol from its rows, checking it comes from a good-parity partition.
    pub fn from_rows(case: Case, top: &[i64], bottom: &[i64]) -> Result<Symbol> {
        let ok_shape = match case {
            Case::Dn => top.len() == bottom.len(),
            _ => top.len() == bottom.len() + 1,
        };
        if !ok_shape {
            return Err(Error::InvalidInput("row lengths do not fit the case".into()));
        }
        let mut entries = Vec::with_capacity(top.len() + bottom.len());
        for i in 0..top.len() {
            entries.push(top[i]);
            if let Some(&b) = bottom.get(i) {
                entries.push(b);
            }
        }
        let s = Symbol { case, entries };
        let parts = s.source_parts().ok_or_else(|| Error::InvalidInput("rows do not come from a partition".into()))?;
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput("rows do not interleave".into()));
        }
        Ok(s)
    }

    pub fn case(&self) -> Case {
        self.case
    }

    /// `x_0, x_1, ...`
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn top(&self) -> Vec<i64> {
        self.entries.iter().step_by(2).copied().collect()
    }

    pub fn bottom(&self) -> Vec<i64> {
        self.entries.iter().skip(1).step_by(2).copied().collect()
    }

    /// Padded increasing parts the entries come from.
    pub fn source_parts(&self) -> Option<Vec<usize>> {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, &x)| {
                let v = 2 * x + e_parity(self.case, k) - k as i64 - e_shift(self.case) as i64;
                (v >= 0 && (v == 0 || v % 2 == self.case.good_parity() as i64)).then_some(v as usize)
            })
            .collect()
    }

    pub fn pair_structure(&self) -> PairStructure {
        let len = self.entries.len();
        let parts = self.source_parts().expect("symbol entries come from parts");
        let (starts, unpaired): (Vec<usize>, Vec<usize>) = match self.case {
            Case::Cn | Case::Mpn => ((1..len).step_by(2).collect(), vec![0]),
            Case::Bn => ((0..len - 1).step_by(2).collect(), vec![len - 1]),
            Case::Dn if len == 0 => (vec![], vec![]),
            Case::Dn => ((1..len - 1).step_by(2).collect(), vec![0, len - 1]),
        };
        let pairs = starts
            .into_iter()
            .map(|i| Pair {
                first: i,
                second: i + 1,
                values: (self.entries[i], self.entries[i + 1]),
                parts: (parts[i], parts[i + 1]),
                equal: self.entries[i] == self.entries[i + 1],
            })
            .collect();
        PairStructure { pairs, unpaired }
    }

    /// Number of unequal pairs.
    pub fn lusztig_rank(&self) -> usize {
        self.pair_structure().rank()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: Vec<i64>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "({} / {})", row(self.top()), row(self.bottom()))
    }
}

/// Rank of the metaplectic quotient: one generator per part (equal parts
/// identified), with `e_i e_{i+1} = 1` for even `i` and `e_{t+1} = 1`.
pub fn abar_mp_rank(p: &Partition) -> Result<usize> {
    if p.parts().iter().any(|d| d % 2 == 1) {
        return Err(Error::InvalidInput(format!("{p} has odd parts")));
    }
    let distinct = p.distinct();
    let bit = |i: usize| -> u64 {
        // 1-based position i in the decreasing list; beyond the end is the identity
        match p.parts().get(i - 1) {
            Some(d) => 1 << distinct.iter().position(|x| x == d).unwrap(),
            None => 0,
        }
    };
    let relations: Vec<u64> = (2..=p.len()).step_by(2).map(|i| bit(i) ^ bit(i + 1)).collect();
    Ok(distinct.len() - gf2::rank(&relations))
}

/// Presentation of the component group `A(U)` as a quotient of `F_2^a`,
/// one generator `z_d` per distinct part `d` (largest first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGroup {
    pub generators: Vec<usize>,
    /// Only words with an even number of generators lie in the group.
    pub even_words_only: bool,
    /// The central element quotiented out, if any.
    pub central: Option<u64>,
    pub rank: usize,
}

impl ComponentGroup {
    /// One representative functional per character of the group.
    pub fn characters(&self) -> Vec<u64> {
        let a = self.generators.len();
        let last = if a == 0 { 0 } else { 1u64 << (a - 1) };
        (0..(1u64 << a))
            .filter(|&f| !self.even_words_only || f & last == 0)
            .filter(|&f| self.central.is_none_or(|c| (f & c).count_ones() % 2 == 0))
            .collect()
    }

    pub fn order(&self) -> usize {
        1 << self.rank
    }
}

pub fn component_group(o: &Orbit, case: Case) -> Result<ComponentGroup> {
    if !o.has_good_parity(case) {
        return Err(Error::InvalidInput(format!("{o} does not have good parity for {case}")));
    }
    let p = o.partition();
    let generators = p.distinct();
    let a = generators.len();
    let odd_mult: u64 = generators
        .iter()
        .enumerate()
        .filter(|(_, &d)| p.multiplicity(d) % 2 == 1)
        .map(|(i, _)| 1u64 << i)
        .sum();
    let (even_words_only, central) = match case {
        Case::Cn => (true, None),
        Case::Bn => (false, Some(odd_mult)),
        Case::Dn => (true, Some(odd_mult)),
        Case::Mpn => (false, None),
    };
    let central = central.filter(|&c| c != 0);
    let rank = a - usize::from(even_words_only && a > 0) - usize::from(central.is_some());
    Ok(ComponentGroup { generators, even_words_only, central, rank })
}

/// Characters of `A(U)` spanning the characters of the quotient; one per
/// unequal pair, first the rightmost pair, then the metaplectic sign when
/// `x_0 != 0` in the `Mpn` case. The character attached to a pair is
/// `z_d -> [d >= h]` with `h` the larger part the pair comes from.
pub fn abar_characters(o: &Orbit, case: Case) -> Result<Vec<u64>> {
    let group = component_group(o, case)?;
    let s = Symbol::of(o, case)?;
    let mask = |h: usize| -> u64 {
        group
            .generators
            .iter()
            .enumerate()
            .filter(|(_, &d)| d >= h)
            .map(|(i, _)| 1u64 << i)
            .sum()
    };
    let mut out: Vec<u64> = s.pair_structure().unequal().map(|p| mask(p.parts.1)).collect();
    out.reverse();
    if case == Case::Mpn && s.entries()[0] != 0 {
        out.push(mask(1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbit(case: Case, v: &[usize]) -> Orbit {
        Orbit::new(case.dual_family(), Partition::new(v.to_vec()).unwrap(), None).unwrap()
    }

    fn rows(case: Case, v: &[usize]) -> (Vec<i64>, Vec<i64>) {
        let s = Symbol::of(&orbit(case, v), case).unwrap();
        (s.top(), s.bottom())
    }

    #[test]
    fn printed_symbols() {
        assert_eq!(rows(Case::Cn, &[9, 5, 5, 5, 3, 1, 1]), (vec![0, 2, 4, 7], vec![1, 4, 5]));
        assert_eq!(rows(Case::Bn, &[8, 4, 4, 4, 2]), (vec![1, 3, 6], vec![2, 3]));
        assert_eq!(rows(Case::Dn, &[11, 7, 7, 7, 3, 3]), (vec![1, 4, 5], vec![2, 5, 8]));
        assert_eq!(rows(Case::Mpn, &[12, 8, 4, 4, 4, 2]), (vec![0, 3, 4, 9], vec![2, 4, 7]));
        assert_eq!(rows(Case::Mpn, &[8, 8, 4, 4, 4, 2]), (vec![0, 3, 4, 7], vec![2, 4, 7]));
        assert_eq!(rows(Case::Mpn, &[12, 8, 4, 4, 2]), (vec![1, 3, 8], vec![3, 6]));
    }

    #[test]
    fn pairs_and_ranks() {
        let s = Symbol::from_rows(Case::Cn, &[0, 2, 4, 7], &[1, 4, 5]).unwrap();
        let ps = s.pair_structure();
        let vals: Vec<_> = ps.pairs.iter().map(|p| (p.values, p.equal)).collect();
        assert_eq!(vals, vec![((1, 2), false), ((4, 4), true), ((5, 7), false)]);
        assert_eq!(ps.unpaired, vec![0]);
        assert_eq!(s.lusztig_rank(), 2);

        let s = Symbol::from_rows(Case::Bn, &[1, 3, 6], &[2, 3]).unwrap();
        let vals: Vec<_> = s.pair_structure().pairs.iter().map(|p| (p.values, p.equal)).collect();
        assert_eq!(vals, vec![((1, 2), false), ((3, 3), true)]);
        assert_eq!(s.lusztig_rank(), 1);

        let s = Symbol::from_rows(Case::Dn, &[1, 4, 5], &[2, 5, 8]).unwrap();
        let ps = s.pair_structure();
        let vals: Vec<_> = ps.pairs.iter().map(|p| (p.values, p.equal)).collect();
        assert_eq!(vals, vec![((2, 4), false), ((5, 5), true)]);
        assert_eq!(ps.unpaired, vec![0, 5]);
        assert_eq!(s.lusztig_rank(), 1);

        assert_eq!(Symbol::from_rows(Case::Dn, &[0, 3, 6], &[2, 4, 8]).unwrap().lusztig_rank(), 2);
        assert_eq!(Symbol::from_rows(Case::Dn, &[1, 3], &[3, 6]).unwrap().lusztig_rank(), 0);
        assert!(Symbol::from_rows(Case::Cn, &[0, 2], &[1, 4]).is_err());
    }

    #[test]
    fn metaplectic_ranks() {
        let r = |v: &[usize]| abar_mp_rank(&Partition::new(v.to_vec()).unwrap()).unwrap();
        assert_eq!(r(&[12, 8, 4, 4, 4, 2]), 2);
        assert_eq!(r(&[8, 8, 4, 4, 4, 2]), 1);
        assert_eq!(r(&[12, 8, 4, 4, 2]), 2);
        assert!(abar_mp_rank(&Partition::new(vec![3, 3]).unwrap()).is_err());
    }

    #[test]
    fn component_groups() {
        let g = component_group(&orbit(Case::Cn, &[9, 5, 5, 5, 3, 1, 1]), Case::Cn).unwrap();
        assert_eq!(g.generators, vec![9, 5, 3, 1]);
        assert_eq!(g.rank, 3);
        assert_eq!(g.characters().len(), 8);
        let g = component_group(&orbit(Case::Bn, &[8, 4, 4, 4, 2]), Case::Bn).unwrap();
        assert_eq!(g.central, Some(0b111));
        assert_eq!(g.rank, 2);
        let g = component_group(&orbit(Case::Cn, &[7]), Case::Cn).unwrap();
        assert_eq!(g.rank, 0);
        let g = component_group(&orbit(Case::Bn, &[2, 2]), Case::Bn).unwrap();
        assert_eq!(g.rank, 1);
        assert!(component_group(&orbit(Case::Bn, &[3, 3]), Case::Bn).is_err());
    }
}
