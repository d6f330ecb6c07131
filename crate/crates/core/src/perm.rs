//! Permutations of `0..degree` and permutation groups.
//!
//! Two products are provided and the distinction matters. [`Perm::compose`]
//! is function composition (`(p ∘ q)(x) = p(q(x))`), used for regular
//! representations, automorphism groups and holomorphs. [`Perm::then`] applies
//! `self` first, which is the left-to-right convention used for the symmetric
//! groups built by [`crate::templates::symmetric`].
//!
//! Cycle notation is 1-based, disjoint cycles, fixed points omitted, and the
//! identity is written `()`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u16).collect())
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::BadPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Perm(images.into_iter().map(|i| i as u16).collect()))
    }

    pub(crate) fn from_raw(images: Vec<u16>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Perm(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        other.compose(self)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u16;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    pub fn fixes_any(&self) -> bool {
        self.0.iter().enumerate().any(|(i, &v)| v as usize == i)
    }

    /// Disjoint cycles (0-based), each starting at its least point, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Formats in 1-based disjoint-cycle notation, e.g. `(132)` or `(13)(24)`.
    /// Letters are separated by spaces only when the degree exceeds 9.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let sep = if self.degree() > 9 { " " } else { "" };
        cycles
            .iter()
            .map(|c| {
                let letters: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", letters.join(sep))
            })
            .collect()
    }

    /// Parses 1-based cycle notation on `degree` letters. Accepts `(1234)`,
    /// `(1 2 3 4)`, `(1,2,3,4)` and products of disjoint cycles; `()` is the identity.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Perm> {
        let bad = |msg: &str| Error::BadPermutation(format!("`{s}`: {msg}"));
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body_end = rest.find(')').ok_or_else(|| bad("unbalanced parenthesis"))?;
            if !rest.starts_with('(') {
                return Err(bad("expected `(`"));
            }
            let body = &rest[1..body_end];
            rest = rest[body_end + 1..].trim_start();
            let letters: Vec<usize> = if body.contains(|c: char| c == ',' || c.is_whitespace()) {
                body.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| bad("bad letter")))
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad("bad letter")))
                    .collect::<Result<_>>()?
            };
            for (k, &l) in letters.iter().enumerate() {
                if l == 0 || l > degree {
                    return Err(bad("letter out of range"));
                }
                if moved[l - 1] {
                    return Err(bad("cycles are not disjoint"));
                }
                moved[l - 1] = true;
                images[l - 1] = letters[(k + 1) % letters.len()] - 1;
            }
        }
        Perm::from_images(images)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

/// A finite group of permutations, stored as its full sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    elements: Vec<Perm>,
}

impl PermutationGroup {
    /// Closure of `gens` under composition. The identity is always included.
    pub fn generate(degree: usize, gens: &[Perm]) -> Self {
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        PermutationGroup { degree, elements }
    }

    /// Wraps an element list, checking that it is closed and contains the identity.
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let set: HashSet<&Perm> = elements.iter().collect();
        if !set.contains(&Perm::identity(degree)) {
            return Err(Error::BadPermutation("element list lacks the identity".into()));
        }
        for a in &elements {
            if a.degree() != degree {
                return Err(Error::BadPermutation("mixed degrees".into()));
            }
            for b in &elements {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::BadPermutation("element list is not closed".into()));
                }
            }
        }
        Ok(PermutationGroup { degree, elements })
    }

    pub(crate) fn from_sorted_unchecked(degree: usize, elements: Vec<Perm>) -> Self {
        PermutationGroup { degree, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Transitive with trivial point stabilizers.
    pub fn is_regular(&self) -> bool {
        if self.order() != self.degree {
            return false;
        }
        let mut hit = vec![false; self.degree];
        for p in &self.elements {
            let x = p.apply(0);
            if hit[x] {
                return false;
            }
            hit[x] = true;
        }
        true
    }

    /// The abstract group, with element `i` of the table being `elements()[i]`
    /// and product given by function composition. The identity sorts first,
    /// so it lands on index 0.
    pub fn to_group(&self) -> FiniteGroup {
        let n = self.order();
        let index = |p: &Perm| self.elements.binary_search(p).expect("closed");
        let table: Vec<Vec<usize>> = self
            .elements
            .iter()
            .map(|a| self.elements.iter().map(|b| index(&a.compose(b))).collect())
            .collect();
        debug_assert_eq!(table.len(), n);
        FiniteGroup::from_table(&table).expect("permutation group table is a group")
    }
}
