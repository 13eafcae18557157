use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{CollapseKind, ParityClass, Partition};

/// Classical Lie algebra families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    SoOdd,
    Sp,
    SoEven,
}

/// The group whose packets are being described; the orbits live in the Lie
/// algebra of its dual group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    Cn,
    Bn,
    Dn,
    Mpn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    I,
    II,
}

impl Family {
    pub fn class(self) -> ParityClass {
        match self {
            Family::SoOdd | Family::SoEven => ParityClass::P1,
            Family::Sp => ParityClass::Pm1,
        }
    }

    pub fn collapse_kind(self) -> CollapseKind {
        match self {
            Family::SoOdd => CollapseKind::B,
            Family::Sp => CollapseKind::C,
            Family::SoEven => CollapseKind::D,
        }
    }

    pub fn ambient_is_odd(self) -> bool {
        self == Family::SoOdd
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::SoOdd => "SoOdd",
            Family::Sp => "Sp",
            Family::SoEven => "SoEven",
        }
    }
}

impl Case {
    pub const ALL: [Case; 4] = [Case::Cn, Case::Bn, Case::Dn, Case::Mpn];

    /// Family of the dual Lie algebra, where parameters live.
    pub fn dual_family(self) -> Family {
        match self {
            Case::Cn => Family::SoOdd,
            Case::Bn | Case::Mpn => Family::Sp,
            Case::Dn => Family::SoEven,
        }
    }

    /// Family of the Lie algebra of the group itself.
    pub fn group_family(self) -> Family {
        match self {
            Case::Cn | Case::Mpn => Family::Sp,
            Case::Bn => Family::SoOdd,
            Case::Dn => Family::SoEven,
        }
    }

    /// Parity of the good-parity blocks.
    pub fn good_parity(self) -> usize {
        match self {
            Case::Cn | Case::Dn => 1,
            Case::Bn | Case::Mpn => 0,
        }
    }

    /// Size of the standard representation of the dual group.
    pub fn dual_ambient(self, rank: usize) -> usize {
        match self {
            Case::Cn => 2 * rank + 1,
            _ => 2 * rank,
        }
    }

    pub fn rank_from_dual_ambient(self, n: usize) -> usize {
        n / 2
    }

    pub fn name(self) -> &'static str {
        match self {
            Case::Cn => "Cn",
            Case::Bn => "Bn",
            Case::Dn => "Dn",
            Case::Mpn => "Mpn",
        }
    }

    /// Weyl group of the group has only even sign changes.
    pub fn weyl_is_d(self) -> bool {
        self == Case::Dn
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Cn" | "C" => Ok(Case::Cn),
            "Bn" | "B" => Ok(Case::Bn),
            "Dn" | "D" => Ok(Case::Dn),
            "Mpn" | "Mp" => Ok(Case::Mpn),
            _ => Err(Error::Parse(format!("unknown case `{s}`"))),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "SoOdd" => Ok(Family::SoOdd),
            "Sp" => Ok(Family::Sp),
            "SoEven" => Ok(Family::SoEven),
            _ => Err(Error::Parse(format!("unknown family `{s}`"))),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(Label::I),
            "II" => Ok(Label::II),
            _ => Err(Error::Parse(format!("unknown label `{s}`"))),
        }
    }
}

/// A nilpotent orbit of a classical Lie algebra, given by its Jordan type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit {
    family: Family,
    partition: Partition,
    label: Option<Label>,
}

fn very_even(family: Family, p: &Partition) -> bool {
    family == Family::SoEven && !p.is_empty() && p.parts().iter().all(|d| d % 2 == 0)
}

impl Orbit {
    /// Validates the partition against the family and the I/II labelling rule.
    pub fn new(family: Family, partition: Partition, label: Option<Label>) -> Result<Orbit> {
        if (partition.total() % 2 == 1) != family.ambient_is_odd() {
            return Err(Error::InvalidPartition(format!(
                "{partition} has the wrong total for {family}"
            )));
        }
        if !partition.in_class(family.class()) {
            return Err(Error::InvalidPartition(format!(
                "{partition} is not in the parity class of {family}"
            )));
        }
        match (very_even(family, &partition), label) {
            (true, None) => Err(Error::Label(format!("{partition} is very even and needs a label I or II"))),
            (false, Some(_)) => Err(Error::Label(format!("{partition} is not very even and takes no label"))),
            _ => Ok(Orbit { family, partition, label }),
        }
    }

    /// Like `new`, but supplies label I to very even orbits when none is given.
    pub fn with_default_label(family: Family, partition: Partition, label: Option<Label>) -> Result<Orbit> {
        let label = if very_even(family, &partition) { Some(label.unwrap_or(Label::I)) } else { None };
        Orbit::new(family, partition, label)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn label(&self) -> Option<Label> {
        self.label
    }

    pub fn ambient(&self) -> usize {
        self.partition.total()
    }

    pub fn is_very_even(&self) -> bool {
        very_even(self.family, &self.partition)
    }

    /// All parts share one parity.
    pub fn is_even(&self) -> bool {
        let parts = self.partition.parts();
        parts.iter().all(|d| d % 2 == 0) || parts.iter().all(|d| d % 2 == 1)
    }

    /// Every part has the good parity for `case`.
    pub fn has_good_parity(&self, case: Case) -> bool {
        self.family == case.dual_family() && self.partition.parts().iter().all(|d| d % 2 == case.good_parity())
    }

    /// Every part has the bad parity for `case`.
    pub fn has_bad_parity(&self, case: Case) -> bool {
        self.family == case.dual_family()
            && !self.partition.is_empty()
            && self.partition.parts().iter().all(|d| d % 2 != case.good_parity())
    }

    /// All orbits of `family` in dimension `ambient`, very even ones twice.
    pub fn enumerate(family: Family, ambient: usize) -> Vec<Orbit> {
        let mut out = Vec::new();
        if (ambient % 2 == 1) != family.ambient_is_odd() {
            return out;
        }
        for p in Partition::all(ambient) {
            if !p.in_class(family.class()) {
                continue;
            }
            if very_even(family, &p) {
                out.push(Orbit { family, partition: p.clone(), label: Some(Label::I) });
                out.push(Orbit { family, partition: p, label: Some(Label::II) });
            } else {
                out.push(Orbit { family, partition: p, label: None });
            }
        }
        out
    }

    fn check_case(&self, case: Case) -> Result<()> {
        let ok = match case {
            Case::Cn | Case::Bn => matches!(self.family, Family::Sp | Family::SoOdd),
            Case::Dn => self.family == Family::SoEven,
            Case::Mpn => self.family == Family::Sp,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("{} orbit does not belong to case {case}", self.family)))
        }
    }

    /// Lusztig-Spaltenstein duality. For Cn and Bn the direction is read off
    /// the family (Sp goes to SoOdd and back); Dn stays in SoEven; Mpn is the
    /// metaplectic self-duality of Sp.
    pub fn dual(&self, case: Case) -> Result<Orbit> {
        self.check_case(case)?;
        let p = &self.partition;
        let (family, q) = match (case, self.family) {
            (Case::Mpn, _) => (Family::Sp, p.union(&Partition::from_unsorted([1])).transpose().mp_collapse()),
            (_, Family::Sp) => (
                Family::SoOdd,
                p.union(&Partition::from_unsorted([1])).transpose().collapse(CollapseKind::B)?,
            ),
            (_, Family::SoOdd) => {
                let t = p.transpose();
                let mut parts = t.parts().to_vec();
                *parts.last_mut().expect("so_odd partition is nonempty") -= 1;
                (Family::Sp, Partition::from_unsorted(parts).collapse(CollapseKind::C)?)
            }
            (_, Family::SoEven) => (Family::SoEven, p.transpose().collapse(CollapseKind::D)?),
        };
        Orbit::with_default_label(family, q, self.label)
    }

    /// Double dual.
    pub fn special_closure(&self, case: Case) -> Result<Orbit> {
        self.dual(case)?.dual(case)
    }

    pub fn is_special(&self, case: Case) -> Result<bool> {
        let case = if case == Case::Mpn { Case::Cn } else { case };
        Ok(&self.special_closure(case)? == self)
    }

    /// Equal to its metaplectic bidual.
    pub fn is_antispecial(&self) -> Result<bool> {
        if self.family != Family::Sp {
            return Err(Error::InvalidInput("antispecial is defined for Sp orbits only".into()));
        }
        Ok(&self.special_closure(Case::Mpn)? == self)
    }

    /// Special for the standard duality, or antispecial for `Mpn`.
    pub fn is_special_for(&self, case: Case) -> Result<bool> {
        if case == Case::Mpn {
            self.is_antispecial()
        } else {
            self.is_special(case)
        }
    }

    /// Induction from a Levi with GL factors of the given sizes: for each size
    /// `a`, add 2 to the first `a` blocks and collapse.
    pub fn induce(&self, gl_sizes: &[usize]) -> Result<Orbit> {
        let mut p = self.partition.clone();
        for &a in gl_sizes {
            if a == 0 {
                return Err(Error::InvalidInput("GL factor sizes must be positive".into()));
            }
            p = p.add_to_prefix(a, 2).collapse(self.family.collapse_kind())?;
        }
        Orbit::with_default_label(self.family, p, self.label)
    }

    /// Adds the parts of `extra` (which must keep the parity class).
    pub fn add_blocks(&self, extra: &[usize]) -> Result<Orbit> {
        let p = self.partition.union(&Partition::from_unsorted(extra.iter().copied()));
        Orbit::with_default_label(self.family, p, self.label)
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        if let Some(l) = self.label {
            write!(f, "{l:?}")?;
        }
        Ok(())
    }
}
