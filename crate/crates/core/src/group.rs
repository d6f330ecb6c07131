//! Finite groups as validated multiplication tables.
//!
//! Elements are the indices `0..n` and the identity is always `0`. Tables are
//! stored flat as `u16`, which bounds the order by [`MAX_ORDER`].

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Largest supported group order.
pub const MAX_ORDER: usize = 1024;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u16>,
    inv: Vec<u16>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.n)
    }
}

/// Structural checks short of associativity. Returns the identity index.
pub(crate) fn check_table_shape(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return Err(Error::EmptyTable);
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    for (r, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare { row: r, len: row.len(), expected: n });
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::EntryOutOfRange { row: r, col: c, value: v });
            }
        }
    }
    let mut seen = vec![usize::MAX; n];
    for (r, row) in table.iter().enumerate() {
        for &v in row {
            if seen[v] == r {
                return Err(Error::NotBijectiveRow(r));
            }
            seen[v] = r;
        }
    }
    let mut seen = vec![usize::MAX; n];
    for c in 0..n {
        for row in table {
            let v = row[c];
            if seen[v] == c {
                return Err(Error::NotBijectiveColumn(c));
            }
            seen[v] = c;
        }
    }
    (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or(Error::NoIdentity)
}

/// Relabels by the transposition `(e 0)` so that `e` becomes index 0.
pub(crate) fn move_identity_to_zero(table: &[Vec<usize>], e: usize) -> Vec<u16> {
    let n = table.len();
    let swap = |x: usize| {
        if x == e {
            0
        } else if x == 0 {
            e
        } else {
            x
        }
    };
    let mut flat = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            flat[swap(a) * n + swap(b)] = swap(table[a][b]) as u16;
        }
    }
    flat
}

impl FiniteGroup {
    /// Validates a multiplication table (`table[g][h] = g·h`), moving the
    /// identity to index 0 if it sits elsewhere.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        let e = check_table_shape(table)?;
        let flat = move_identity_to_zero(table, e);
        Self::from_flat_with_identity_zero(table.len(), flat)
    }

    /// `flat` must already have identity 0 and bijective rows and columns.
    pub(crate) fn from_flat_with_identity_zero(n: usize, flat: Vec<u16>) -> Result<Self> {
        let mut inv = vec![0u16; n];
        for a in 0..n {
            let row = &flat[a * n..(a + 1) * n];
            let b = row.iter().position(|&v| v == 0).ok_or(Error::NoIdentity)?;
            inv[a] = b as u16;
        }
        let g = FiniteGroup { n, table: flat, inv };
        if let Some((a, b, c)) = g.first_non_associative() {
            return Err(Error::NotAssociative(a, b, c));
        }
        Ok(g)
    }

    /// Builds a group from a product closure over `0..n` with identity 0.
    pub(crate) fn from_fn(n: usize, mul: impl Fn(usize, usize) -> usize + Sync) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let rows: Vec<Vec<usize>> =
            (0..n).into_par_iter().map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        Self::from_table(&rows)
    }

    fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                let ab = self.mul(a, b);
                let row_a = &self.table[a * n..(a + 1) * n];
                let row_ab = &self.table[ab * n..(ab + 1) * n];
                let row_b = &self.table[b * n..(b + 1) * n];
                for c in 0..n {
                    if row_ab[c] != row_a[row_b[c] as usize] {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub(crate) fn row(&self, a: usize) -> &[u16] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    pub(crate) fn flat(&self) -> &[u16] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| self.row(a).iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn pow(&self, g: usize, k: u64) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Least `k ≥ 1` with `g^k = e`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.n).map(|g| self.element_order(g)).collect()
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v = self.element_orders();
        v.sort_unstable();
        v
    }

    pub fn exponent(&self) -> usize {
        self.element_orders().into_iter().fold(1, lcm)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n).filter(|&z| (0..self.n).all(|g| self.mul(z, g) == self.mul(g, z))).collect()
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let t = self.mul(self.inv(a), self.inv(b));
        self.mul(self.mul(t, a), b)
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comms: Vec<usize> = Vec::new();
        let mut hit = vec![false; self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                let c = self.commutator(a, b);
                if !hit[c] {
                    hit[c] = true;
                    comms.push(c);
                }
            }
        }
        self.subgroup_generated(&comms)
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut hit = vec![false; self.n];
        hit[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !hit[y] {
                    hit[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.n).filter(|&x| hit[x]).collect()
    }

    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let mut inside = vec![false; self.n];
        for &s in subset {
            if s >= self.n {
                return false;
            }
            inside[s] = true;
        }
        inside[0]
            && subset.iter().all(|&a| inside[self.inv(a)] && subset.iter().all(|&b| inside[self.mul(a, b)]))
    }

    pub fn is_normal(&self, subset: &[usize]) -> bool {
        let mut inside = vec![false; self.n];
        for &s in subset {
            inside[s] = true;
        }
        self.is_subgroup(subset)
            && (0..self.n).all(|g| subset.iter().all(|&h| inside[self.mul(self.mul(g, h), self.inv(g))]))
    }

    /// The subgroup on `elems` (which must contain 0 and be closed) as a group
    /// in its own right; element `i` of the result is `elems[i]`.
    pub fn subgroup_as_group(&self, elems: &[usize]) -> Result<FiniteGroup> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        let rows: Vec<Vec<usize>> = elems
            .iter()
            .map(|&a| {
                elems
                    .iter()
                    .map(|&b| {
                        let p = pos[self.mul(a, b)];
                        if p == usize::MAX {
                            elems.len()
                        } else {
                            p
                        }
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(&rows)
    }

    /// Componentwise product; the pair `(g, h)` is element `g·|H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.n;
        FiniteGroup::from_fn(self.n * m, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
        .expect("direct product of groups is a group")
    }

    /// `H ⋊ J` with `(h₁,j₁)(h₂,j₂) = (h₁·action[j₁](h₂), j₁j₂)`; the pair
    /// `(h, j)` is element `h·|J| + j`. `action[j]` must be an automorphism
    /// of `H` and `j ↦ action[j]` a homomorphism under composition.
    pub fn semidirect_product(h: &FiniteGroup, j: &FiniteGroup, action: &[Perm]) -> Result<FiniteGroup> {
        if action.len() != j.n {
            return Err(Error::ActionSize { got: action.len(), expected: j.n });
        }
        for (idx, a) in action.iter().enumerate() {
            if a.degree() != h.n || !h.is_automorphism(a) {
                return Err(Error::ActionNotAutomorphism(idx));
            }
        }
        for j1 in 0..j.n {
            for j2 in 0..j.n {
                if action[j.mul(j1, j2)] != action[j1].compose(&action[j2]) {
                    return Err(Error::ActionNotHomomorphism(j1, j2));
                }
            }
        }
        let m = j.n;
        FiniteGroup::from_fn(h.n * m, |x, y| {
            let (h1, j1) = (x / m, x % m);
            let (h2, j2) = (y / m, y % m);
            h.mul(h1, action[j1].apply(h2)) * m + j.mul(j1, j2)
        })
    }

    /// `g ∘ h = h · g`.
    pub fn opposite(&self) -> FiniteGroup {
        FiniteGroup::from_fn(self.n, |a, b| self.mul(b, a)).expect("opposite group")
    }

    /// The same group with every element `a` renamed `sigma(a)`; `sigma` must fix 0.
    pub fn relabel(&self, sigma: &Perm) -> FiniteGroup {
        assert_eq!(sigma.apply(0), 0, "relabeling must fix the identity");
        let n = self.n;
        let mut flat = vec![0u16; n * n];
        let mut inv = vec![0u16; n];
        for a in 0..n {
            inv[sigma.apply(a)] = sigma.apply(self.inv(a)) as u16;
            for b in 0..n {
                flat[sigma.apply(a) * n + sigma.apply(b)] = sigma.apply(self.mul(a, b)) as u16;
            }
        }
        FiniteGroup { n, table: flat, inv }
    }

    pub fn is_automorphism(&self, p: &Perm) -> bool {
        p.degree() == self.n
            && (0..self.n).all(|a| (0..self.n).all(|b| p.apply(self.mul(a, b)) == self.mul(p.apply(a), p.apply(b))))
    }

    /// `λ(g): x ↦ g·x`.
    pub fn left_translation(&self, g: usize) -> Perm {
        Perm::from_raw(self.row(g).to_vec())
    }

    /// `ρ(g): x ↦ x·g⁻¹`.
    pub fn right_translation(&self, g: usize) -> Perm {
        let gi = self.inv(g);
        Perm::from_raw((0..self.n).map(|x| self.mul(x, gi) as u16).collect())
    }

    /// The left regular representation `g ↦ λ(g)` into `Sym(G)`.
    pub fn left_regular(&self) -> Vec<Perm> {
        (0..self.n).map(|g| self.left_translation(g)).collect()
    }
}

/// A homomorphism between two tabled groups, given by its image array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, images: Vec<usize>) -> Option<Self> {
        if images.len() != source.order() || images.first() != Some(&0) || images.iter().any(|&i| i >= target.order()) {
            return None;
        }
        let ok = (0..source.order()).all(|a| {
            (0..source.order()).all(|b| images[source.mul(a, b)] == target.mul(images[a], images[b]))
        });
        ok.then_some(GroupHom { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        GroupHom { images }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images.iter().all(|&i| i < seen.len() && !std::mem::replace(&mut seen[i], true))
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::templates;

    fn cyclic_rows(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn addition_mod_three() {
        let g = FiniteGroup::from_table(&cyclic_rows(3)).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 3);
        assert_eq!(g.inv(1), 2);
    }

    #[test]
    fn degenerate_two_by_two() {
        let err = FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotBijectiveRow(1) | Error::NoIdentity), "{err:?}");
    }

    #[test]
    fn identity_is_moved_to_zero() {
        // addition mod 3 with labels shifted so that 0 is "1"
        let rows: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b + 2) % 3).collect()).collect();
        let g = FiniteGroup::from_table(&rows).unwrap();
        assert!((0..3).all(|x| g.mul(0, x) == x && g.mul(x, 0) == x));
    }

    #[test]
    fn non_associative_witness() {
        // a Latin square with identity that is not a group (order 5 loop)
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&rows), Err(Error::NotAssociative(..))));
    }

    #[test]
    fn products() {
        let c3 = templates::cyclic(3);
        let c2 = templates::cyclic(2);
        let p = c3.direct_product(&c2);
        assert_eq!((p.order(), p.exponent()), (6, 6));
        assert!(p.is_abelian());
        let trivial = templates::cyclic(1);
        assert_eq!(c3.direct_product(&trivial).rows(), c3.rows());

        let s3 = templates::symmetric(3).0;
        let c4 = templates::cyclic(4);
        let s3c4 = s3.direct_product(&c4);
        assert_eq!(s3c4.order(), 24);
        assert!(!s3c4.is_abelian());
    }

    #[test]
    fn semidirect_products() {
        let c3 = templates::cyclic(3);
        let c2 = templates::cyclic(2);
        let inversion = Perm::from_images(vec![0, 2, 1]).unwrap();
        let s3 = FiniteGroup::semidirect_product(&c3, &c2, &[Perm::identity(3), inversion.clone()]).unwrap();
        assert!(!s3.is_abelian());
        assert_eq!(s3.order(), 6);
        let c6 = FiniteGroup::semidirect_product(&c3, &c2, &[Perm::identity(3), Perm::identity(3)]).unwrap();
        assert!(c6.is_abelian());
        assert_eq!(c6.exponent(), 6);

        let not_aut = Perm::from_images(vec![1, 0, 2]).unwrap();
        assert_eq!(
            FiniteGroup::semidirect_product(&c3, &c2, &[Perm::identity(3), not_aut]),
            Err(Error::ActionNotAutomorphism(1))
        );
        let c4 = templates::cyclic(4);
        let bad = vec![Perm::identity(3), inversion.clone(), inversion, Perm::identity(3)];
        assert!(matches!(
            FiniteGroup::semidirect_product(&c3, &c4, &bad),
            Err(Error::ActionNotHomomorphism(..))
        ));
    }

    #[test]
    fn orders_and_exponents() {
        let c9 = templates::cyclic(9);
        assert_eq!(c9.element_order(0), 1);
        assert_eq!(c9.element_order(1), 9);
        let heis = templates::heisenberg(3);
        assert!((1..27).all(|g| heis.element_order(g) == 3));
        assert_eq!(heis.exponent(), 3);
        assert_eq!(heis.center().len(), 3);
        assert_eq!(heis.derived_subgroup().len(), 3);
    }

    #[test]
    fn left_regular_is_regular() {
        for g in [templates::symmetric(3).0, templates::heisenberg(3), templates::cyclic(8)] {
            let lam = g.left_regular();
            for (a, p) in lam.iter().enumerate().skip(1) {
                assert!(!p.fixes_any(), "λ({a}) has a fixed point");
            }
            for a in 0..g.order() {
                for b in 0..g.order() {
                    assert_eq!(lam[g.mul(a, b)], lam[a].compose(&lam[b]));
                }
            }
        }
    }
}
