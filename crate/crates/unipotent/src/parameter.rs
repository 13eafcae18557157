use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbit::{Case, Orbit};
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::symbol::{component_group, ComponentGroup};

/// The character `z -> z^a zbar^b` of the Weil group of the complex numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Character {
    pub a: Scalar,
    pub b: Scalar,
}

impl Character {
    pub const TRIV: Character = Character { a: Scalar::ZERO, b: Scalar::ZERO };

    pub fn new(a: Scalar, b: Scalar) -> Character {
        Character { a, b }
    }

    pub fn inverse(self) -> Character {
        Character { a: -self.a, b: -self.b }
    }

    pub fn is_trivial(self) -> bool {
        self == Character::TRIV
    }

    /// `a - b` is a rational integer.
    pub fn is_well_defined(self) -> bool {
        (self.a - self.b).is_integer()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            write!(f, "Triv")
        } else {
            write!(f, "chi({},{})", self.a, self.b)
        }
    }
}

/// `chi ⊠ R_dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Summand {
    pub chi: Character,
    pub dim: usize,
}

impl Summand {
    pub fn new(chi: Character, dim: usize) -> Summand {
        Summand { chi, dim }
    }

    pub fn triv(dim: usize) -> Summand {
        Summand { chi: Character::TRIV, dim }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}xR{}", self.chi, self.dim)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Group {
    pub case: Case,
    pub rank: usize,
}

impl Group {
    pub fn new(case: Case, rank: usize) -> Group {
        Group { case, rank }
    }

    /// Size of the standard representation of the dual group.
    pub fn dual_dim(&self) -> usize {
        self.case.dual_ambient(self.rank)
    }
}

/// A multiset of summands for a group; summands are kept sorted, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArthurParameter {
    pub group: Group,
    summands: Vec<Summand>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ZeroDimension,
    Dimension { expected: usize, found: usize },
    NonIntegral(Summand),
    NotSelfDual(Summand),
    NotUnitary(Summand),
    Parity { dim: usize, multiplicity: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroDimension => write!(f, "a summand has dimension 0"),
            Violation::Dimension { expected, found } => {
                write!(f, "total dimension {found}, expected {expected}")
            }
            Violation::NonIntegral(s) => write!(f, "{s}: a - b is not an integer"),
            Violation::NotSelfDual(s) => write!(f, "{s}: the inverse summand is missing"),
            Violation::NotUnitary(s) => write!(f, "{s}: character is not unitary"),
            Violation::Parity { dim, multiplicity } => {
                write!(f, "TrivxR{dim} has bad parity and odd multiplicity {multiplicity}")
            }
        }
    }
}

/// The three pieces of a validated parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// One summand from each inverse pair, and half of each bad-parity group.
    pub rho: Vec<Summand>,
    /// Dimensions of the good-parity unipotent summands, largest first.
    pub psi_u_bp: Vec<usize>,
    /// One dimension per pair of bad-parity unipotent summands.
    pub bad_parity_pairs: Vec<usize>,
}

fn counts(summands: &[Summand]) -> BTreeMap<Summand, usize> {
    let mut m = BTreeMap::new();
    for s in summands {
        *m.entry(*s).or_insert(0) += 1;
    }
    m
}

/// `(c + (r-1)/2, ..., c - (r-1)/2)`.
pub fn segment(c: Scalar, r: usize) -> Vec<Scalar> {
    (0..r).map(|i| c + Scalar::half(r as i64 - 1 - 2 * i as i64)).collect()
}

/// Positive entries and half of the zeros of the self-dual segments of the
/// given dimensions, sorted decreasingly.
pub fn unipotent_half(dims: &[usize]) -> Vec<Scalar> {
    let all: Vec<Scalar> = dims.iter().flat_map(|&d| segment(Scalar::ZERO, d)).collect();
    let zeros = all.iter().filter(|x| x.is_zero()).count();
    let mut out: Vec<Scalar> = all.into_iter().filter(|x| x.is_positive()).collect();
    out.extend(std::iter::repeat_n(Scalar::ZERO, zeros / 2));
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Absolute values, sorted decreasingly.
pub fn dominant(v: Vec<Scalar>) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = v.into_iter().map(Scalar::abs).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Concatenated segments of a list of summands.
pub fn gl_param(summands: &[Summand]) -> (Vec<Scalar>, Vec<Scalar>) {
    let lambda = summands.iter().flat_map(|s| segment(s.chi.a, s.dim)).collect();
    let mu = summands.iter().flat_map(|s| segment(s.chi.b, s.dim)).collect();
    (lambda, mu)
}

/// No two coordinates are equal up to sign, and no coordinate is fixed by a
/// sign change; in type D one zero is allowed.
pub fn is_regular(values: &[Scalar], weyl_d: bool) -> bool {
    let mut abs: Vec<Scalar> = values.iter().map(|x| x.abs()).collect();
    abs.sort_unstable();
    let distinct = abs.windows(2).all(|w| w[0] != w[1]);
    let zeros = abs.iter().filter(|x| x.is_zero()).count();
    distinct && (zeros == 0 || (weyl_d && zeros == 1))
}

impl ArthurParameter {
    pub fn new(group: Group, mut summands: Vec<Summand>) -> ArthurParameter {
        summands.sort_unstable_by(|a, b| b.cmp(a));
        ArthurParameter { group, summands }
    }

    /// The unipotent parameter attached to a partition.
    pub fn unipotent(case: Case, dims: &Partition) -> ArthurParameter {
        let rank = case.rank_from_dual_ambient(dims.total());
        ArthurParameter::new(Group::new(case, rank), dims.parts().iter().map(|&d| Summand::triv(d)).collect())
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn case(&self) -> Case {
        self.group.case
    }

    fn bad_parity(&self, d: usize) -> bool {
        d % 2 != self.group.case.good_parity()
    }

    /// All violations of the dimension, self-duality, unitarity and parity
    /// conditions; empty means valid. With `almost_unitary`, `|Re(a+b)| < 1/2`
    /// replaces `Re(a+b) = 0`.
    pub fn validate(&self, almost_unitary: bool) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.summands.iter().any(|s| s.dim == 0) {
            out.push(Violation::ZeroDimension);
        }
        let found: usize = self.summands.iter().map(|s| s.dim).sum();
        if found != self.group.dual_dim() {
            out.push(Violation::Dimension { expected: self.group.dual_dim(), found });
        }
        let c = counts(&self.summands);
        for (s, &n) in &c {
            if !s.chi.is_well_defined() {
                out.push(Violation::NonIntegral(*s));
            }
            let re = (s.chi.a + s.chi.b).re();
            let unitary = if almost_unitary { re.abs() < Rational64::new(1, 2) } else { re == 0.into() };
            if !unitary {
                out.push(Violation::NotUnitary(*s));
            }
            if s.chi.is_trivial() {
                if self.bad_parity(s.dim) && n % 2 == 1 {
                    out.push(Violation::Parity { dim: s.dim, multiplicity: n });
                }
            } else {
                let inv = Summand::new(s.chi.inverse(), s.dim);
                if c.get(&inv).copied().unwrap_or(0) != n {
                    out.push(Violation::NotSelfDual(*s));
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate(false).is_empty()
    }

    fn require_valid(&self) -> Result<()> {
        match self.validate(false).first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidInput(v.to_string())),
        }
    }

    /// Splits into `rho`, the good-parity unipotent part and the bad-parity pairs.
    pub fn decompose(&self) -> Result<Decomposition> {
        self.require_valid()?;
        let mut rho = Vec::new();
        let mut psi_u_bp = Vec::new();
        let mut bad_parity_pairs = Vec::new();
        for (s, n) in counts(&self.summands) {
            if s.chi.is_trivial() {
                if self.bad_parity(s.dim) {
                    bad_parity_pairs.extend(std::iter::repeat_n(s.dim, n / 2));
                    rho.extend(std::iter::repeat_n(s, n / 2));
                } else {
                    psi_u_bp.extend(std::iter::repeat_n(s.dim, n));
                }
            } else if s.chi > s.chi.inverse() {
                rho.extend(std::iter::repeat_n(s, n));
            }
        }
        rho.sort_unstable_by(|a, b| b.cmp(a));
        psi_u_bp.sort_unstable_by(|a, b| b.cmp(a));
        bad_parity_pairs.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Decomposition { rho, psi_u_bp, bad_parity_pairs })
    }

    /// `rho + rho^* + psi_u_bp` as one multiset.
    pub fn reassemble(group: Group, d: &Decomposition) -> ArthurParameter {
        let mut s: Vec<Summand> = d.psi_u_bp.iter().map(|&n| Summand::triv(n)).collect();
        for r in &d.rho {
            s.push(*r);
            s.push(Summand::new(r.chi.inverse(), r.dim));
        }
        ArthurParameter::new(group, s)
    }

    /// Orbit of the good-parity unipotent part, in the dual Lie algebra.
    pub fn good_parity_orbit(&self) -> Result<Orbit> {
        let d = self.decompose()?;
        Orbit::new(self.case().dual_family(), Partition::from_unsorted(d.psi_u_bp), None)
    }

    /// Orbit of a unipotent parameter.
    pub fn orbit_of_unipotent(&self) -> Result<Orbit> {
        if let Some(s) = self.summands.iter().find(|s| !s.chi.is_trivial()) {
            return Err(Error::InvalidInput(format!("{s} is not unipotent")));
        }
        let p = Partition::from_unsorted(self.summands.iter().map(|s| s.dim));
        Orbit::with_default_label(self.case().dual_family(), p, None)
    }

    /// `(lambda, mu)`, each as its dominant representative.
    pub fn infinitesimal_character(&self) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
        let d = self.decompose()?;
        let (mut lambda, mut mu) = gl_param(&d.rho);
        let half = unipotent_half(&d.psi_u_bp);
        lambda.extend(half.iter().copied());
        mu.extend(half);
        Ok((dominant(lambda), dominant(mu)))
    }

    pub fn has_regular_infinitesimal_character(&self) -> Result<bool> {
        let (l, m) = self.infinitesimal_character()?;
        let d = self.case().weyl_is_d();
        Ok(is_regular(&l, d) && is_regular(&m, d))
    }

    pub fn component_group(&self) -> Result<ComponentGroup> {
        component_group(&self.good_parity_orbit()?, self.case())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ParameterFile::from(self)).expect("parameter serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<ArthurParameter> {
        let f: ParameterFile = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(f.into())
    }
}

impl fmt::Display for ArthurParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} rank {}: ", self.group.case, self.group.rank)?;
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    family: Case,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SummandFile {
    a: Scalar,
    b: Scalar,
    dim: usize,
}

/// On-disk form: `{"group":{"family":"Cn","rank":3},"summands":[{"a":"0","b":"0","dim":7}]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParameterFile {
    group: GroupFile,
    summands: Vec<SummandFile>,
}

impl From<&ArthurParameter> for ParameterFile {
    fn from(p: &ArthurParameter) -> ParameterFile {
        ParameterFile {
            group: GroupFile { family: p.group.case, rank: p.group.rank },
            summands: p.summands.iter().map(|s| SummandFile { a: s.chi.a, b: s.chi.b, dim: s.dim }).collect(),
        }
    }
}

impl From<ParameterFile> for ArthurParameter {
    fn from(f: ParameterFile) -> ArthurParameter {
        ArthurParameter::new(
            Group::new(f.group.family, f.group.rank),
            f.summands.into_iter().map(|s| Summand::new(Character::new(s.a, s.b), s.dim)).collect(),
        )
    }
}
