use crate::error::{Error, Result};
use crate::orbit::{Case, Orbit};
use crate::parameter::{ArthurParameter, Character, Summand};
use crate::partition::Partition;
use crate::scalar::Scalar;

/// Wavefront orbit: the dual of the good-parity orbit, induced along the
/// GL blocks of `rho`.
pub fn wavefront(psi: &ArthurParameter) -> Result<Orbit> {
    let case = psi.case();
    let d = psi.decompose()?;
    let u = psi.good_parity_orbit()?;
    if !u.is_special_for(case)? {
        return Err(Error::Unsupported(format!("good-parity part {u} is not special")));
    }
    let sizes: Vec<usize> = d.rho.iter().map(|s| s.dim).collect();
    u.dual(case)?.induce(&sizes)
}

fn half_shift() -> Character {
    Character::new(Scalar::half(1), Scalar::half(-1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpAnalysis {
    pub psi_bp: Vec<Summand>,
    /// Bad-parity block sizes whose doubling leaves the special orbits.
    pub exchangeable: Vec<usize>,
    pub u0: Orbit,
    pub u_sp: Orbit,
    pub psi_sp: ArthurParameter,
}

/// Orbit of the given blocks in the dual algebra of `case`.
fn dual_orbit(case: Case, dims: impl IntoIterator<Item = usize>) -> Result<Orbit> {
    Orbit::with_default_label(case.dual_family(), Partition::from_unsorted(dims), None)
}

pub fn psi_sp(psi: &ArthurParameter) -> Result<SpAnalysis> {
    psi.decompose()?;
    let case = psi.case();
    let bad = |d: usize| d % 2 != case.good_parity();
    let (psi_bp, rest): (Vec<Summand>, Vec<Summand>) = psi.summands().iter().partition(|s| {
        s.chi.is_trivial() || (bad(s.dim) && (s.chi == half_shift() || s.chi == half_shift().inverse()))
    });
    let u0 = dual_orbit(case, psi_bp.iter().map(|s| s.dim))?;
    let good: Vec<usize> = u0.partition().parts().iter().copied().filter(|&d| !bad(d)).collect();
    let mut exchangeable = Vec::new();
    for a in u0.partition().distinct().into_iter().filter(|&a| bad(a)) {
        if !dual_orbit(case, good.iter().copied().chain([a, a]))?.is_special_for(case)? {
            exchangeable.push(a);
        }
    }
    let u_sp = u0.special_closure(case)?;
    let p = u_sp.partition();
    let mut summands = rest;
    for d in p.distinct() {
        let n = p.multiplicity(d);
        if bad(d) {
            summands.extend(std::iter::repeat_n(Summand::new(half_shift(), d), n / 2));
            summands.extend(std::iter::repeat_n(Summand::new(half_shift().inverse(), d), n / 2));
        } else {
            summands.extend(std::iter::repeat_n(Summand::triv(d), n));
        }
    }
    let psi_sp = ArthurParameter::new(psi.group, summands);
    Ok(SpAnalysis { psi_bp, exchangeable, u0, u_sp, psi_sp })
}

/// The partition of `u_sp` predicted by the block rewrite: one pair `a, a`
/// of each exchangeable size becomes `a + 1, a - 1`.
pub fn rewrite_partition(analysis: &SpAnalysis) -> Partition {
    let mut parts = analysis.u0.partition().parts().to_vec();
    for &a in &analysis.exchangeable {
        let i = parts.iter().position(|&d| d == a).expect("exchangeable block is present");
        parts[i] = a + 1;
        parts[i + 1] = a - 1;
    }
    Partition::from_unsorted(parts)
}

/// Necessary condition for two packets to meet.
pub fn same_sp_class(psi1: &ArthurParameter, psi2: &ArthurParameter) -> Result<bool> {
    if psi1.group != psi2.group {
        return Err(Error::InvalidInput(format!(
            "parameters for different groups: {} rank {} and {} rank {}",
            psi1.group.case, psi1.group.rank, psi2.group.case, psi2.group.rank
        )));
    }
    Ok(psi_sp(psi1)?.psi_sp == psi_sp(psi2)?.psi_sp)
}
