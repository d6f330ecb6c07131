//! Concrete groups used as recognition templates and test fixtures.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Perm;

pub fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::from_fn(n, |a, b| (a + b) % n).expect("cyclic group")
}

/// `C_{d₁} × … × C_{d_k}` in mixed radix, first factor least significant.
pub fn abelian(factors: &[usize]) -> FiniteGroup {
    let n: usize = factors.iter().product();
    FiniteGroup::from_fn(n, |a, b| {
        let (mut a, mut b, mut out, mut scale) = (a, b, 0, 1);
        for &d in factors {
            out += ((a % d + b % d) % d) * scale;
            a /= d;
            b /= d;
            scale *= d;
        }
        out
    })
    .expect("abelian group")
}

pub fn elementary_abelian(p: usize, k: usize) -> FiniteGroup {
    abelian(&vec![p; k])
}

/// Dihedral group of order `2m`; `r^i s^e` is element `e·m + i`.
pub fn dihedral(m: usize) -> FiniteGroup {
    FiniteGroup::from_fn(2 * m, |x, y| {
        let (i, e) = (x % m, x / m);
        let (j, f) = (y % m, y / m);
        let k = if e == 0 { (i + j) % m } else { (i + m - j) % m };
        ((e + f) % 2) * m + k
    })
    .expect("dihedral group")
}

/// Quaternion group of order 8; `a^i b^e` is element `4e + i`.
pub fn quaternion() -> FiniteGroup {
    FiniteGroup::from_fn(8, |x, y| {
        let (i, e) = (x % 4, x / 4);
        let (j, f) = (y % 4, y / 4);
        match (e, f) {
            (0, _) => 4 * f + (i + j) % 4,
            (1, 0) => 4 + (i + 4 - j) % 4,
            _ => (i + 4 - j + 2) % 4,
        }
    })
    .expect("quaternion group")
}

/// Symmetric group on `k` letters. Elements are listed in lexicographic
/// order of their image arrays (identity first) and multiplied left to
/// right: `a·b` applies `a` first.
pub fn symmetric(k: usize) -> (FiniteGroup, Vec<Perm>) {
    let perms = all_permutations(k);
    let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let g = FiniteGroup::from_fn(perms.len(), |a, b| index[&perms[a].then(&perms[b])])
        .expect("symmetric group");
    (g, perms)
}

/// Alternating group on `k` letters, same conventions as [`symmetric`].
pub fn alternating(k: usize) -> (FiniteGroup, Vec<Perm>) {
    let perms: Vec<Perm> = all_permutations(k).into_iter().filter(is_even).collect();
    let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let g = FiniteGroup::from_fn(perms.len(), |a, b| index[&perms[a].then(&perms[b])])
        .expect("alternating group");
    (g, perms)
}

fn is_even(p: &Perm) -> bool {
    p.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
}

/// All permutations of `0..k` in lexicographic order.
pub fn all_permutations(k: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(Perm::from_images(cur.clone()).expect("permutation"));
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Upper unitriangular 3×3 matrices over `𝔽_p`: `(a,b,c)` is element
/// `a + pb + p²c` with `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`.
pub fn heisenberg(p: usize) -> FiniteGroup {
    let dec = |x: usize| (x % p, (x / p) % p, x / (p * p));
    FiniteGroup::from_fn(p * p * p, |x, y| {
        let (a, b, c) = dec(x);
        let (a2, b2, c2) = dec(y);
        (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)
    })
    .expect("heisenberg group")
}

/// `C_{p²} ⋊ C_p` with the generator acting as `x ↦ (1+p)x`; `(x, y)` is element `x + p²y`.
pub fn m3(p: usize) -> FiniteGroup {
    let q = p * p;
    let twist = |y: usize| (0..y).fold(1, |acc, _| acc * (1 + p) % q);
    FiniteGroup::from_fn(q * p, |s, t| {
        let (x1, y1) = (s % q, s / q);
        let (x2, y2) = (t % q, t / q);
        (x1 + twist(y1) * x2) % q + q * ((y1 + y2) % p)
    })
    .expect("M3(p)")
}

/// One representative of every isomorphism class of groups of order `n ≤ 12`.
pub fn groups_of_order(n: usize) -> Result<Vec<FiniteGroup>> {
    let groups = match n {
        1 | 2 | 3 | 5 | 7 | 11 => vec![cyclic(n)],
        4 => vec![cyclic(4), elementary_abelian(2, 2)],
        6 => vec![cyclic(6), dihedral(3)],
        8 => vec![cyclic(8), abelian(&[2, 4]), elementary_abelian(2, 3), dihedral(4), quaternion()],
        9 => vec![cyclic(9), elementary_abelian(3, 2)],
        10 => vec![cyclic(10), dihedral(5)],
        12 => {
            let c3 = cyclic(3);
            let c4 = cyclic(4);
            let inv = Perm::from_images(vec![0, 2, 1]).expect("inversion");
            let id = Perm::identity(3);
            let dic = FiniteGroup::semidirect_product(&c3, &c4, &[id.clone(), inv.clone(), id, inv])
                .expect("dicyclic group");
            vec![cyclic(12), abelian(&[2, 6]), alternating(4).0, dihedral(6), dic]
        }
        _ => return Err(Error::UnsupportedParameter(format!("no group list for order {n}"))),
    };
    Ok(groups)
}
