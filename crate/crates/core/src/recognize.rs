//! Naming small groups up to isomorphism.

use std::fmt;

use crate::aut::{are_isomorphic, SearchBudget};
use crate::group::FiniteGroup;
use crate::templates;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    Trivial,
    Cyclic(usize),
    /// `C_p^k` with `k ≥ 2`.
    ElementaryAbelian { p: usize, rank: usize },
    /// Any other abelian group, by invariant factors `d₁ | d₂ | …`.
    Abelian(Vec<usize>),
    /// Dihedral group of order `2m`, `m ≥ 3`.
    Dihedral(usize),
    Quaternion,
    /// Nonabelian of order `p³` and exponent `p`.
    Heisenberg(usize),
    /// Nonabelian of order `p³` and exponent `p²`, with `p` odd.
    M3(usize),
    S4,
    Unrecognized { order: usize },
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Trivial => write!(f, "C1"),
            GroupName::Cyclic(n) => write!(f, "C{n}"),
            GroupName::ElementaryAbelian { p, rank } => write!(f, "C{p}^{rank}"),
            GroupName::Abelian(factors) => {
                let parts: Vec<String> = factors.iter().map(|d| format!("C{d}")).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupName::Dihedral(3) => write!(f, "S3"),
            GroupName::Dihedral(m) => write!(f, "D{}", 2 * m),
            GroupName::Quaternion => write!(f, "Q8"),
            GroupName::Heisenberg(p) => write!(f, "Heis({p})"),
            GroupName::M3(p) => write!(f, "M3({p})"),
            GroupName::S4 => write!(f, "S4"),
            GroupName::Unrecognized { order } => write!(f, "unrecognized(order {order})"),
        }
    }
}

fn factorize(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factors of an abelian group from its element orders.
pub fn abelian_invariants(g: &FiniteGroup) -> Vec<usize> {
    let orders = g.element_orders();
    let mut primary: Vec<Vec<usize>> = Vec::new();
    for (p, k) in factorize(g.order()) {
        // ranks[j-1] = number of cyclic factors of order ≥ p^j
        let divides = |j: u32| orders.iter().filter(|&&o| p.pow(j) % o == 0).count();
        let mut ranks = Vec::new();
        for j in 1..=k as u32 {
            let mut ratio = divides(j) / divides(j - 1);
            let mut rank = 0;
            while ratio > 1 {
                ratio /= p;
                rank += 1;
            }
            if rank == 0 {
                break;
            }
            ranks.push(rank);
        }
        let mut powers = Vec::new();
        for (j, &r) in ranks.iter().enumerate() {
            let longer = ranks.get(j + 1).copied().unwrap_or(0);
            powers.extend(std::iter::repeat_n(p.pow(j as u32 + 1), r - longer));
        }
        primary.push(powers);
    }
    // powers are ascending; align them on the right and multiply across primes
    let len = primary.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1usize; len];
    for powers in primary {
        let offset = len - powers.len();
        for (i, q) in powers.into_iter().enumerate() {
            factors[offset + i] *= q;
        }
    }
    factors
}

/// Identifies the isomorphism type of `g` where it falls in the supported catalog.
pub fn recognize(g: &FiniteGroup) -> GroupName {
    let n = g.order();
    if n == 1 {
        return GroupName::Trivial;
    }
    let exponent = g.exponent();
    if g.is_abelian() {
        if exponent == n {
            return GroupName::Cyclic(n);
        }
        let factors = abelian_invariants(g);
        let f = factorize(n);
        if f.len() == 1 && exponent == f[0].0 {
            return GroupName::ElementaryAbelian { p: f[0].0, rank: f[0].1 };
        }
        return GroupName::Abelian(factors);
    }
    let budget = SearchBudget::default();
    let iso = |t: &FiniteGroup| matches!(are_isomorphic(g, t, budget), Ok(Some(_)));
    let f = factorize(n);
    if f.len() == 1 && f[0].1 == 3 && f[0].0 > 2 {
        let p = f[0].0;
        if exponent == p && iso(&templates::heisenberg(p)) {
            return GroupName::Heisenberg(p);
        }
        if exponent == p * p && iso(&templates::m3(p)) {
            return GroupName::M3(p);
        }
    }
    if n == 8 && g.order_profile().iter().filter(|&&o| o == 2).count() == 1 && iso(&templates::quaternion()) {
        return GroupName::Quaternion;
    }
    if n.is_multiple_of(2) && n >= 6 {
        let m = n / 2;
        if g.element_orders().contains(&m) && iso(&templates::dihedral(m)) {
            return GroupName::Dihedral(m);
        }
    }
    if n == 24 && exponent == 12 && g.center().len() == 1 && iso(&templates::symmetric(4).0) {
        return GroupName::S4;
    }
    GroupName::Unrecognized { order: n }
}
