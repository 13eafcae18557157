//! Brute-force oracles and small-rank generators shared by the test targets.
#![allow(dead_code)]

use unipotent::parameter::{ArthurParameter, Character, Group, Summand};
use unipotent::{Case, CollapseKind, LanglandsParam, Orbit, Partition, Scalar};

/// Maximal element of the parity class among partitions dominated by `p`.
pub fn brute_collapse(p: &Partition, kind: CollapseKind) -> Partition {
    let below: Vec<Partition> = Partition::all(p.total())
        .into_iter()
        .filter(|q| q.in_class(kind.class()) && p.dominates(q).unwrap())
        .collect();
    let top: Vec<&Partition> = below
        .iter()
        .filter(|q| below.iter().all(|r| q.dominates(r).unwrap()))
        .collect();
    assert_eq!(top.len(), 1, "no unique maximum below {p}");
    top[0].clone()
}

/// Orbits of the dual algebra of `case` whose packet is built from strings,
/// for every rank up to `max_rank`.
pub fn good_parity_orbits(case: Case, max_rank: usize) -> Vec<Orbit> {
    let first = usize::from(case == Case::Cn);
    (first..=max_rank)
        .flat_map(|n| Orbit::enumerate(case.dual_family(), case.dual_ambient(n)))
        .filter(|o| o.has_good_parity(case))
        .collect()
}

/// Good-parity orbits carrying a packet (special, or antispecial for `Mpn`).
pub fn packet_orbits(case: Case, max_rank: usize) -> Vec<Orbit> {
    good_parity_orbits(case, max_rank)
        .into_iter()
        .filter(|o| o.is_special_for(case).unwrap())
        .collect()
}

/// The `n` largest eigenvalues of the principal SL2 on the given blocks.
pub fn infchar_oracle(dims: &[usize], n: usize) -> Vec<Scalar> {
    let mut all: Vec<Scalar> = dims
        .iter()
        .flat_map(|&d| (0..d).map(move |i| Scalar::half(d as i64 - 1 - 2 * i as i64)))
        .collect();
    all.sort_unstable_by(|a, b| b.cmp(a));
    all.truncate(n);
    all
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Searches the Weyl group for an element carrying `p` to `q`.
pub fn weyl_equivalent(p: &LanglandsParam, q: &LanglandsParam, weyl_d: bool) -> bool {
    let n = p.len();
    if n != q.len() {
        return false;
    }
    for perm in permutations(n) {
        for signs in 0..(1u32 << n) {
            if weyl_d && signs.count_ones() % 2 == 1 {
                continue;
            }
            let ok = (0..n).all(|i| {
                let (l, m) = (p.lambda[perm[i]], p.mu[perm[i]]);
                let (l, m) = if signs >> i & 1 == 1 { (-l, -m) } else { (l, m) };
                l == q.lambda[i] && m == q.mu[i]
            });
            if ok {
                return true;
            }
        }
    }
    false
}

pub fn triv(case: Case, dims: &[usize]) -> ArthurParameter {
    ArthurParameter::unipotent(case, &Partition::from_unsorted(dims.iter().copied()))
}

/// Characters used for the non-unipotent blocks of generated parameters.
pub fn test_characters() -> Vec<Character> {
    vec![
        Character::new(Scalar::half(1), Scalar::half(-1)),
        Character::new(Scalar::int(1), Scalar::int(-1)),
        Character::new("0+1/2i".parse().unwrap(), "0+1/2i".parse().unwrap()),
    ]
}

#[derive(Clone, Copy)]
enum Token {
    Good(usize),
    BadPair(usize),
    Pair(usize, usize),
}

/// Every valid parameter of rank `n` built from good-parity unipotent
/// blocks, bad-parity unipotent pairs and inverse pairs of the test characters.
pub fn parameters(case: Case, n: usize) -> Vec<ArthurParameter> {
    let total = case.dual_ambient(n);
    let chars = test_characters();
    let mut tokens = Vec::new();
    for d in 1..=total {
        if d % 2 == case.good_parity() {
            tokens.push((d, Token::Good(d)));
        } else {
            tokens.push((2 * d, Token::BadPair(d)));
        }
        for c in 0..chars.len() {
            tokens.push((2 * d, Token::Pair(c, d)));
        }
    }
    fn rec(
        rest: usize,
        from: usize,
        tokens: &[(usize, Token)],
        cur: &mut Vec<Token>,
        out: &mut Vec<Vec<Token>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for i in from..tokens.len() {
            if tokens[i].0 <= rest {
                cur.push(tokens[i].1);
                rec(rest - tokens[i].0, i, tokens, cur, out);
                cur.pop();
            }
        }
    }
    let mut shapes = Vec::new();
    rec(total, 0, &tokens, &mut Vec::new(), &mut shapes);
    shapes
        .into_iter()
        .map(|shape| {
            let mut s = Vec::new();
            for t in shape {
                match t {
                    Token::Good(d) => s.push(Summand::triv(d)),
                    Token::BadPair(d) => s.extend([Summand::triv(d), Summand::triv(d)]),
                    Token::Pair(c, d) => {
                        s.push(Summand::new(chars[c], d));
                        s.push(Summand::new(chars[c].inverse(), d));
                    }
                }
            }
            let psi = ArthurParameter::new(Group::new(case, n), s);
            assert!(psi.is_valid(), "{psi}");
            psi
        })
        .collect()
}

/// `x_i`, with `-inf` before the symbol and `+inf` after it.
pub fn entry(x: &[i64], i: i64) -> i64 {
    if i < 0 {
        i64::MIN / 4
    } else {
        x.get(i as usize).copied().unwrap_or(i64::MAX / 4)
    }
}

/// Ratio `|packet(U + {q, q})| / |packet(U)|` read off the symbol of `U`.
pub fn predicted_ratio(case: Case, x: &[i64], q: usize) -> usize {
    if x.is_empty() {
        // both new entries end up unpaired
        return 1;
    }
    let len = x.len() as i64;
    let (two, one) = match case {
        Case::Bn => {
            let m = (q / 2) as i64;
            let two = (0..=len).any(|j| entry(x, 2 * j) < m + j && m + j < entry(x, 2 * j + 1));
            let one = (0..=len).any(|j| {
                (entry(x, 2 * j) < m + j && m + j == entry(x, 2 * j + 1))
                    || (entry(x, 2 * j - 1) < m + j - 1 && m + j <= entry(x, 2 * j))
            });
            (two, one)
        }
        _ => {
            let m = ((q - 1) / 2) as i64;
            let two = (0..=len).any(|j| entry(x, 2 * j - 1) < m + j && m + j < entry(x, 2 * j));
            let one = (0..=len).any(|j| entry(x, 2 * j) <= m + j && m + j < entry(x, 2 * j + 1));
            (two, one)
        }
    };
    assert!(two != one, "{case} {x:?} + {q}: both or neither case applies");
    if two {
        2
    } else {
        1
    }
}
