use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2;
use crate::orbit::{Case, Orbit};
use crate::parameter::{gl_param, segment, unipotent_half, ArthurParameter, Character};
use crate::scalar::Scalar;
use crate::symbol::{abar_characters, component_group, Symbol};

/// A Langlands parameter `(lambda, mu)`; `lambda[i] - mu[i]` is an integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LanglandsParam {
    pub lambda: Vec<Scalar>,
    pub mu: Vec<Scalar>,
}

/// Canonical representative of a Weyl group orbit of parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub pairs: Vec<(Scalar, Scalar)>,
    /// Type D only: parity of the sign changes used, unless a `(0, 0)` pair absorbs it.
    pub parity: Option<bool>,
}

impl LanglandsParam {
    pub fn new(lambda: Vec<Scalar>, mu: Vec<Scalar>) -> Result<LanglandsParam> {
        if lambda.len() != mu.len() {
            return Err(Error::InvalidInput(format!(
                "lambda has {} coordinates, mu has {}",
                lambda.len(),
                mu.len()
            )));
        }
        if let Some(i) = (0..lambda.len()).find(|&i| !(lambda[i] - mu[i]).is_integer()) {
            return Err(Error::InvalidInput(format!(
                "coordinate {i}: {} - {} is not an integer",
                lambda[i], mu[i]
            )));
        }
        Ok(LanglandsParam { lambda, mu })
    }

    pub fn empty() -> LanglandsParam {
        LanglandsParam { lambda: Vec::new(), mu: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    pub fn concat(&self, other: &LanglandsParam) -> LanglandsParam {
        let mut out = self.clone();
        out.lambda.extend(other.lambda.iter().copied());
        out.mu.extend(other.mu.iter().copied());
        out
    }

    /// `(mu, lambda)`.
    pub fn swap(&self) -> LanglandsParam {
        LanglandsParam { lambda: self.mu.clone(), mu: self.lambda.clone() }
    }

    pub fn exponents(&self) -> Vec<Character> {
        self.lambda.iter().zip(&self.mu).map(|(&a, &b)| Character::new(a, b)).collect()
    }

    pub fn normal_form(&self, weyl_d: bool) -> NormalForm {
        let mut flips = 0usize;
        let mut has_zero = false;
        let mut pairs: Vec<(Scalar, Scalar)> = self
            .lambda
            .iter()
            .zip(&self.mu)
            .map(|(&l, &m)| {
                if l.is_zero() && m.is_zero() {
                    has_zero = true;
                }
                if (-(l + m), -(l - m)) > (l + m, l - m) {
                    flips += 1;
                    (-l, -m)
                } else {
                    (l, m)
                }
            })
            .collect();
        pairs.sort_unstable_by(|a, b| b.cmp(a));
        let parity = (weyl_d && !has_zero).then_some(flips % 2 == 1);
        NormalForm { pairs, parity }
    }

    pub fn equivalent(&self, other: &LanglandsParam, weyl_d: bool) -> bool {
        self.len() == other.len() && self.normal_form(weyl_d) == other.normal_form(weyl_d)
    }
}

impl NormalForm {
    /// A parameter in this class.
    pub fn to_param(&self) -> LanglandsParam {
        let mut lambda: Vec<Scalar> = self.pairs.iter().map(|p| p.0).collect();
        let mut mu: Vec<Scalar> = self.pairs.iter().map(|p| p.1).collect();
        if self.parity == Some(true) {
            let last = lambda.len() - 1;
            lambda[last] = -lambda[last];
            mu[last] = -mu[last];
        }
        LanglandsParam { lambda, mu }
    }
}

/// Zero is `None`.
pub fn equivalent(p: Option<&LanglandsParam>, q: Option<&LanglandsParam>, weyl_d: bool) -> bool {
    match (p, q) {
        (None, None) => true,
        (Some(p), Some(q)) => p.equivalent(q, weyl_d),
        _ => false,
    }
}

fn fmt_vec(f: &mut fmt::Formatter<'_>, v: &[Scalar]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

impl fmt::Display for LanglandsParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_vec(f, &self.lambda)?;
        write!(f, ",")?;
        fmt_vec(f, &self.mu)?;
        write!(f, ")")
    }
}

/// Sizes of the Levi factor: a classical factor of rank `m0_rank` and GL
/// factors, the first one attached to the rightmost symbol pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviData {
    pub m0_rank: usize,
    pub gl_sizes: Vec<usize>,
}

/// The Levi data together with the strings cut out of the infinitesimal character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BvData {
    pub m0_rank: usize,
    pub gl_sizes: Vec<usize>,
    pub lambda0: Vec<Scalar>,
    pub f: Vec<Vec<Scalar>>,
    /// Present exactly for unequal pairs.
    pub ftilde: Vec<Option<Vec<Scalar>>>,
    /// `Mpn` with `x_0 != 0`: one more sign, carried by `lambda0`.
    pub metaplectic: bool,
}

fn nonneg(v: i64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::Unsupported(format!("negative Levi size {v}")))
}

fn levi_of_symbol(s: &Symbol) -> Result<LeviData> {
    let x = s.entries();
    let len = x.len();
    if len == 0 {
        return Ok(LeviData { m0_rank: 0, gl_sizes: Vec::new() });
    }
    let (k, m0) = match s.case() {
        Case::Cn | Case::Mpn => ((len - 1) / 2, x[0]),
        Case::Bn => {
            let k = (len - 1) / 2;
            (k, x[2 * k] - k as i64)
        }
        Case::Dn => {
            let k = (len - 2) / 2;
            (k, x[2 * k + 1] + x[0] - k as i64)
        }
    };
    let ki = k as i64;
    let gl_sizes = (1..=k)
        .map(|j| {
            let ji = j as i64;
            let size = match s.case() {
                Case::Cn => x[2 * k - 2 * j + 2] + x[2 * k - 2 * j + 1] - 2 * ki + 2 * ji - 1,
                Case::Mpn => x[2 * k - 2 * j + 2] + x[2 * k - 2 * j + 1] - 2 * (ki - ji + 1),
                Case::Bn => x[2 * k - 2 * j + 1] + x[2 * k - 2 * j] - 2 * (ki - ji),
                Case::Dn => x[2 * k - 2 * j + 2] + x[2 * k - 2 * j + 1] - 2 * (ki - ji) - 1,
            };
            nonneg(size)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LeviData { m0_rank: nonneg(m0)?, gl_sizes })
}

pub fn bv_levi_data(o: &Orbit, case: Case) -> Result<LeviData> {
    levi_of_symbol(&Symbol::of(o, case)?)
}

/// Multiset of scalars.
struct Pool(BTreeMap<Scalar, usize>);

impl Pool {
    fn new(values: &[Scalar]) -> Pool {
        let mut m = BTreeMap::new();
        for v in values {
            *m.entry(*v).or_insert(0) += 1;
        }
        Pool(m)
    }

    fn take(&mut self, v: Scalar) -> bool {
        match self.0.get_mut(&v) {
            Some(n) => {
                *n -= 1;
                if *n == 0 {
                    self.0.remove(&v);
                }
                true
            }
            None => false,
        }
    }

    /// Maximal run `v, v-1, ...` starting at the largest entry.
    fn take_run(&mut self) -> Vec<Scalar> {
        let mut out = Vec::new();
        let Some(&start) = self.0.keys().next_back() else {
            return out;
        };
        let mut v = start;
        while self.take(v) {
            out.push(v);
            v = v - Scalar::int(1);
        }
        out
    }

    /// Continues a run below zero with negatives of remaining entries.
    fn extend_negative(&mut self, run: &mut Vec<Scalar>) {
        while let Some(&last) = run.last() {
            let next = last - Scalar::int(1);
            if next.re() < 0.into() && self.take(-next) {
                run.push(next);
            } else {
                break;
            }
        }
    }

    fn drain(self) -> Vec<Scalar> {
        let mut out: Vec<Scalar> =
            self.0.into_iter().flat_map(|(v, n)| std::iter::repeat_n(v, n)).collect();
        out.reverse();
        out
    }
}

/// Flip the smallest positive coordinate whose negative is absent.
fn tilde(f: &[Scalar]) -> Vec<Scalar> {
    let mut out = f.to_vec();
    let pos = out
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_positive() && !f.contains(&-**v))
        .min_by_key(|(_, v)| **v)
        .map(|(i, _)| i);
    if let Some(i) = pos {
        out[i] = -out[i];
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn bv_strings(o: &Orbit, case: Case) -> Result<BvData> {
    let s = Symbol::of(o, case)?;
    let levi = levi_of_symbol(&s)?;
    let mut pool = Pool::new(&unipotent_half(o.partition().parts()));
    let k = levi.gl_sizes.len();
    let take_strings = |pool: &mut Pool| -> Vec<Vec<Scalar>> {
        (0..k)
            .map(|_| {
                let mut run = pool.take_run();
                pool.extend_negative(&mut run);
                run
            })
            .collect()
    };
    let (f, lambda0) = match case {
        Case::Cn | Case::Mpn => {
            let f = take_strings(&mut pool);
            (f, pool.drain())
        }
        Case::Bn => {
            let l0 = pool.take_run();
            let f = take_strings(&mut pool);
            let rest = pool.drain();
            if !rest.is_empty() {
                return Err(Error::Unsupported(format!("{o}: entries left over after extraction")));
            }
            (f, l0)
        }
        Case::Dn => {
            let mut l0 = pool.take_run();
            let f = take_strings(&mut pool);
            l0.extend(pool.drain().into_iter().rev().map(|v| -v));
            (f, l0)
        }
    };
    let lengths: Vec<usize> = f.iter().map(|v| v.len()).collect();
    if lengths != levi.gl_sizes || lambda0.len() != levi.m0_rank {
        return Err(Error::Unsupported(format!(
            "{o}: extracted strings of lengths {lengths:?} + {}, Levi sizes {:?} + {}",
            lambda0.len(),
            levi.gl_sizes,
            levi.m0_rank
        )));
    }
    let pairs = s.pair_structure().pairs;
    let ftilde = (0..k).map(|j| (!pairs[k - 1 - j].equal).then(|| tilde(&f[j]))).collect();
    let metaplectic = case == Case::Mpn && s.entries()[0] != 0;
    Ok(BvData { m0_rank: levi.m0_rank, gl_sizes: levi.gl_sizes, lambda0, f, ftilde, metaplectic })
}

/// A packet member with its sign vector (`1` or `-1` per free coordinate).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Member {
    pub eps: Vec<i8>,
    pub param: LanglandsParam,
}

impl BvData {
    /// Number of free signs.
    pub fn sign_count(&self) -> usize {
        self.ftilde.iter().filter(|t| t.is_some()).count() + usize::from(self.metaplectic)
    }

    pub fn member(&self, eps: &[i8]) -> Result<LanglandsParam> {
        if eps.len() != self.sign_count() || eps.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::InvalidInput(format!(
                "expected {} signs of value 1 or -1, got {eps:?}",
                self.sign_count()
            )));
        }
        let mut lambda = Vec::new();
        let mut mu = Vec::new();
        let mut signs = eps.iter();
        for (f, t) in self.f.iter().zip(&self.ftilde) {
            lambda.extend(f.iter().copied());
            match t {
                Some(t) if *signs.next().unwrap() == -1 => mu.extend(t.iter().copied()),
                _ => mu.extend(f.iter().copied()),
            }
        }
        lambda.extend(self.lambda0.iter().copied());
        let mut mu0 = self.lambda0.clone();
        if self.metaplectic && *signs.next().unwrap() == -1 {
            let last = mu0.len() - 1;
            mu0[last] = -mu0[last];
        }
        mu.extend(mu0);
        LanglandsParam::new(lambda, mu)
    }
}

/// All sign vectors of length `m`, the first sign varying slowest.
fn sign_vectors(m: usize) -> impl Iterator<Item = Vec<i8>> {
    (0..1u64 << m).map(move |s| (0..m).map(|i| if s >> (m - 1 - i) & 1 == 1 { -1 } else { 1 }).collect())
}

fn check_supported(o: &Orbit, case: Case) -> Result<()> {
    if o.family() != case.dual_family() {
        return Err(Error::InvalidInput(format!("{o} is a {} orbit, {case} needs {}", o.family(), case.dual_family())));
    }
    if !o.is_even() {
        return Err(Error::Unsupported(format!("{o} is not even")));
    }
    if !o.is_special_for(case)? {
        let what = if case == Case::Mpn { "antispecial" } else { "special" };
        return Err(Error::Unsupported(format!("{o} is not {what}")));
    }
    Ok(())
}

/// The unipotent packet attached to an even special orbit of the dual algebra.
pub fn bv_packet(o: &Orbit, case: Case) -> Result<Vec<Member>> {
    check_supported(o, case)?;
    if o.has_good_parity(case) {
        let data = bv_strings(o, case)?;
        return sign_vectors(data.sign_count())
            .map(|eps| Ok(Member { param: data.member(&eps)?, eps }))
            .collect();
    }
    let p = o.partition();
    let halves: Vec<usize> = p.distinct().into_iter().flat_map(|d| std::iter::repeat_n(d, p.multiplicity(d) / 2)).collect();
    let lambda: Vec<Scalar> = halves.iter().flat_map(|&d| segment(Scalar::ZERO, d)).collect();
    Ok(vec![Member { eps: Vec::new(), param: LanglandsParam::new(lambda.clone(), lambda)? }])
}

/// The member indexed by a character `eta` of `A(U)` (bit `i` is the value on
/// the `i`-th generator); `None` when `eta` does not factor through the quotient.
pub fn bv_packet_member(o: &Orbit, case: Case, eta: u64) -> Result<Option<LanglandsParam>> {
    check_supported(o, case)?;
    let group = component_group(o, case)?;
    let a = group.generators.len();
    if a < 64 && eta >> a != 0 {
        return Err(Error::InvalidInput(format!("character {eta:#b} has more than {a} bits")));
    }
    let mut eta = eta;
    if group.even_words_only && a > 0 && eta >> (a - 1) & 1 == 1 {
        eta ^= (1u64 << a) - 1;
    }
    if group.central.is_some_and(|c| (eta & c).count_ones() % 2 == 1) {
        return Err(Error::InvalidInput(format!("{eta:#b} is not trivial on the central element")));
    }
    let Some(coeffs) = gf2::solve(&abar_characters(o, case)?, eta) else {
        return Ok(None);
    };
    let data = bv_strings(o, case)?;
    let eps: Vec<i8> = (0..data.sign_count()).map(|i| if coeffs >> i & 1 == 1 { -1 } else { 1 }).collect();
    data.member(&eps).map(Some)
}

/// A member of an Arthur packet: a character of the component group of the
/// good-parity part and its parameter in normal form (`None` for zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArthurMember {
    pub character: u64,
    pub param: Option<LanglandsParam>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArthurPacket {
    pub generators: Vec<usize>,
    pub members: Vec<ArthurMember>,
}

impl ArthurPacket {
    /// Members that are not zero.
    pub fn nonzero(&self) -> impl Iterator<Item = &LanglandsParam> {
        self.members.iter().filter_map(|m| m.param.as_ref())
    }
}

pub fn arthur_packet(psi: &ArthurParameter) -> Result<ArthurPacket> {
    let case = psi.case();
    let d = psi.decompose()?;
    let u = psi.good_parity_orbit()?;
    if !u.is_special_for(case)? {
        return Err(Error::Unsupported(format!("good-parity part {u} is not special")));
    }
    let (lambda, mu) = gl_param(&d.rho);
    let outer = LanglandsParam::new(lambda, mu)?;
    let group = component_group(&u, case)?;
    let members = group
        .characters()
        .into_iter()
        .map(|eta| {
            let param = bv_packet_member(&u, case, eta)?
                .map(|m| outer.concat(&m).normal_form(case.weyl_is_d()).to_param());
            Ok(ArthurMember { character: eta, param })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ArthurPacket { generators: group.generators, members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn orbit(case: Case, v: &[usize]) -> Orbit {
        Orbit::new(case.dual_family(), Partition::new(v.to_vec()).unwrap(), None).unwrap()
    }

    fn h(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::half(x)).collect()
    }

    fn z(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::int(x)).collect()
    }

    #[test]
    fn normal_form_rules() {
        let p = LanglandsParam::new(z(&[-2, 1]), z(&[-1, 1])).unwrap();
        let nf = p.normal_form(false);
        assert_eq!(nf.pairs, vec![(Scalar::int(2), Scalar::int(1)), (Scalar::int(1), Scalar::int(1))]);
        let q = LanglandsParam::new(z(&[1, 2]), z(&[1, 1])).unwrap();
        assert!(p.equivalent(&q, false));
        assert!(!p.equivalent(&q, true));
        let r = LanglandsParam::new(z(&[1, 0]), z(&[1, 0])).unwrap();
        let s = LanglandsParam::new(z(&[-1, 0]), z(&[-1, 0])).unwrap();
        assert!(r.equivalent(&s, true));
        let nf = p.normal_form(true);
        assert_eq!(nf.to_param().normal_form(true), nf);
    }

    #[test]
    fn levi_examples() {
        let l = bv_levi_data(&orbit(Case::Cn, &[9, 5, 5, 5, 3, 1, 1]), Case::Cn).unwrap();
        assert_eq!((l.m0_rank, l.gl_sizes), (0, vec![7, 5, 2]));
        let l = bv_levi_data(&orbit(Case::Bn, &[8, 4, 4, 4, 2]), Case::Bn).unwrap();
        assert_eq!((l.m0_rank, l.gl_sizes), (4, vec![4, 3]));
        let l = bv_levi_data(&orbit(Case::Dn, &[11, 7, 7, 7, 3, 3]), Case::Dn).unwrap();
        assert_eq!((l.m0_rank, l.gl_sizes), (7, vec![7, 5]));
    }

    #[test]
    fn string_examples() {
        let b = bv_strings(&orbit(Case::Cn, &[9, 5, 5, 5, 3, 1, 1]), Case::Cn).unwrap();
        assert_eq!(b.f, vec![z(&[4, 3, 2, 1, 0, -1, -2]), z(&[2, 1, 0, -1, -2]), z(&[1, 0])]);
        assert_eq!(b.ftilde, vec![Some(z(&[4, 2, 1, 0, -1, -2, -3])), None, Some(z(&[0, -1]))]);
        assert!(b.lambda0.is_empty());

        let b = bv_strings(&orbit(Case::Bn, &[8, 4, 4, 4, 2]), Case::Bn).unwrap();
        assert_eq!(b.lambda0, h(&[7, 5, 3, 1]));
        assert_eq!(b.f, vec![h(&[3, 1, -1, -3]), h(&[3, 1, -1])]);
        assert_eq!(b.ftilde, vec![None, Some(h(&[1, -1, -3]))]);

        let b = bv_strings(&orbit(Case::Dn, &[11, 9, 5, 5, 3, 1]), Case::Dn).unwrap();
        assert_eq!(b.lambda0, z(&[5, 4, 3, 2, 1, 0]));
        assert_eq!(b.f, vec![z(&[4, 3, 2, 1, 0, -1, -2]), z(&[2, 1, 0, -1])]);
        assert_eq!(b.ftilde, vec![Some(z(&[4, 2, 1, 0, -1, -2, -3])), Some(z(&[1, 0, -1, -2]))]);
    }

    #[test]
    fn small_packets() {
        let pk = bv_packet(&orbit(Case::Cn, &[7, 3, 3]), Case::Cn).unwrap();
        assert_eq!(pk.len(), 2);
        assert_eq!(pk[0].param, LanglandsParam::new(z(&[3, 2, 1, 0, -1, 1]), z(&[3, 2, 1, 0, -1, 1])).unwrap());
        assert_eq!(pk[1].param, LanglandsParam::new(z(&[3, 2, 1, 0, -1, 1]), z(&[3, 1, 0, -1, -2, 1])).unwrap());

        let pk = bv_packet(&orbit(Case::Bn, &[6, 4, 2]), Case::Bn).unwrap();
        let lambda = h(&[5, 3, 1, 3, 1, -1]);
        let expected = [
            LanglandsParam::new(lambda.clone(), lambda.clone()).unwrap(),
            LanglandsParam::new(lambda.clone(), h(&[5, 3, 1, 1, -1, -3])).unwrap(),
        ];
        assert_eq!(pk.len(), 2);
        for (m, e) in pk.iter().zip(&expected) {
            assert!(m.param.equivalent(e, false), "{} vs {e}", m.param);
        }
    }

    #[test]
    fn bad_parity_singleton() {
        let pk = bv_packet(&orbit(Case::Bn, &[3, 3]), Case::Bn).unwrap();
        assert_eq!(pk.len(), 1);
        assert_eq!(pk[0].param.lambda, z(&[1, 0, -1]));
        assert!(bv_packet(&orbit(Case::Bn, &[4, 1, 1]), Case::Bn).is_err());
    }

    #[test]
    fn members_by_character() {
        let o = orbit(Case::Bn, &[8, 4, 4, 4, 2]);
        let g = component_group(&o, Case::Bn).unwrap();
        let members: Vec<_> = g.characters().into_iter().map(|e| bv_packet_member(&o, Case::Bn, e).unwrap()).collect();
        assert_eq!(members.len(), 4);
        assert_eq!(members.iter().filter(|m| m.is_none()).count(), 2);
        assert_eq!(members[0], Some(bv_packet(&o, Case::Bn).unwrap()[0].param.clone()));
    }
}
