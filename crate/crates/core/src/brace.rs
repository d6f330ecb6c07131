//! Skew braces: one carrier, two group tables.
//!
//! For a brace `(B, ∘, ⋆)` with `⋆` additive the defining relation is
//!
//! ```text
//! a ∘ (b ⋆ c) = (a ∘ b) ⋆ a⁻¹ ⋆ (a ∘ c)        (a⁻¹ the ⋆-inverse)
//! ```
//!
//! A [`SkewBrace`] stores `star` and `circ` and the outcome of checking this
//! relation with `star` additive. Structures that fail are still representable
//! so that counterexamples can be built and inspected.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::aut::{automorphism_group, EmbeddingSearch, SearchBudget};
use crate::error::{Error, Result};
use crate::group::{check_table_shape, move_identity_to_zero, FiniteGroup};
use crate::perm::Perm;

/// Which of the two operations plays the additive role.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Additive {
    Star,
    Circ,
}

/// A failing triple for the brace relation, with both sides evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub lhs: usize,
    pub rhs: usize,
}

/// `𝓛_b` fails to be an additive automorphism: `𝓛_b(x ⋆ y) ≠ 𝓛_b(x) ⋆ 𝓛_b(y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HolomorphWitness {
    pub b: usize,
    pub x: usize,
    pub y: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBrace {
    star: FiniteGroup,
    circ: FiniteGroup,
    status: std::result::Result<(), Counterexample>,
}

impl SkewBrace {
    /// Builds a structure from two raw tables. Group-table errors are
    /// returned; failing the brace relation is recorded in [`Self::status`].
    pub fn from_tables(star: &[Vec<usize>], circ: &[Vec<usize>]) -> Result<Self> {
        if star.len() != circ.len() {
            return Err(Error::SizeMismatch(star.len(), circ.len()));
        }
        let e_star = check_table_shape(star)?;
        let e_circ = check_table_shape(circ)?;
        if e_star != e_circ {
            return Err(Error::IdentityMismatch(e_star, e_circ));
        }
        let n = star.len();
        let star = FiniteGroup::from_flat_with_identity_zero(n, move_identity_to_zero(star, e_star))?;
        let circ = FiniteGroup::from_flat_with_identity_zero(n, move_identity_to_zero(circ, e_circ))?;
        Self::from_groups(star, circ)
    }

    pub fn from_groups(star: FiniteGroup, circ: FiniteGroup) -> Result<Self> {
        if star.order() != circ.order() {
            return Err(Error::SizeMismatch(star.order(), circ.order()));
        }
        let status = first_failure(&star, &circ);
        Ok(SkewBrace { star, circ, status })
    }

    /// `∘ = ⋆ = G`.
    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_groups(g.clone(), g.clone()).expect("same carrier")
    }

    /// `⋆ = G` and `g ∘ h = h ⋆ g`.
    pub fn opposite(g: &FiniteGroup) -> Self {
        Self::from_groups(g.clone(), g.opposite()).expect("same carrier")
    }

    pub fn order(&self) -> usize {
        self.star.order()
    }

    pub fn star(&self) -> &FiniteGroup {
        &self.star
    }

    pub fn circ(&self) -> &FiniteGroup {
        &self.circ
    }

    /// Outcome of [`Self::validate_direct`] with `⋆` additive, cached at construction.
    pub fn status(&self) -> std::result::Result<(), Counterexample> {
        self.status
    }

    pub fn is_valid(&self) -> bool {
        self.status.is_ok()
    }

    /// The same carrier with the roles of the operations exchanged.
    pub fn swapped(&self) -> SkewBrace {
        Self::from_groups(self.circ.clone(), self.star.clone()).expect("same carrier")
    }

    fn roles(&self, additive: Additive) -> (&FiniteGroup, &FiniteGroup) {
        match additive {
            Additive::Star => (&self.star, &self.circ),
            Additive::Circ => (&self.circ, &self.star),
        }
    }

    /// Checks all `n³` triples, returning the lexicographically first failure.
    pub fn validate_direct(&self, additive: Additive) -> std::result::Result<(), Counterexample> {
        match additive {
            Additive::Star => self.status,
            Additive::Circ => first_failure(&self.circ, &self.star),
        }
    }

    /// Checks that every `𝓛_b = λ_add(b)⁻¹ λ_other(b)` is an automorphism of
    /// the additive group, i.e. that `λ_other` lands in `Hol(B, add)`.
    pub fn validate_via_holomorph(&self, additive: Additive) -> std::result::Result<(), HolomorphWitness> {
        let (add, other) = self.roles(additive);
        let n = self.order();
        (0..n)
            .into_par_iter()
            .find_map_first(|b| {
                let lb = l_map(add, other, b);
                for x in 0..n {
                    let row = add.row(x);
                    let lx = lb[x] as usize;
                    for y in 0..n {
                        if lb[row[y] as usize] as usize != add.mul(lx, lb[y] as usize) {
                            return Some(HolomorphWitness { b, x, y });
                        }
                    }
                }
                None
            })
            .map_or(Ok(()), Err)
    }

    /// Valid with either operation additive.
    pub fn is_biskew(&self) -> bool {
        self.is_valid() && self.validate_direct(Additive::Circ).is_ok()
    }

    /// The permutations `𝓛_b`, `b ∈ B`, with `⋆` additive.
    pub fn l_maps(&self) -> Vec<Perm> {
        (0..self.order()).map(|b| Perm::from_raw(l_map(&self.star, &self.circ, b))).collect()
    }

    /// Bijections that are automorphisms of both `(B, ⋆)` and `(B, ∘)`,
    /// found by filtering `Aut(B, ∘)`.
    pub fn automorphism_group(&self, budget: SearchBudget) -> Result<BraceAutGroup> {
        if !self.is_valid() && self.validate_direct(Additive::Circ).is_err() {
            return Err(Error::NotABrace);
        }
        let aut_circ = automorphism_group(&self.circ, budget)?;
        let elements: Vec<Perm> = aut_circ
            .elements()
            .iter()
            .filter(|p| self.star.is_automorphism(p))
            .cloned()
            .collect();
        Ok(BraceAutGroup { elements })
    }

    /// Checks `(a ⋆ b) ∘ c = (a ∘ c) ⋆ c⁻¹ ⋆ (b ∘ c)` for all triples.
    /// Requires an abelian additive group.
    pub fn is_two_sided(&self) -> Result<bool> {
        if !self.star.is_abelian() {
            return Err(Error::AdditiveNotAbelian);
        }
        let (s, c) = (&self.star, &self.circ);
        let n = self.order();
        Ok((0..n).into_par_iter().all(|a| {
            (0..n).all(|b| {
                (0..n).all(|z| {
                    let lhs = c.mul(s.mul(a, b), z);
                    let rhs = s.mul(s.mul(c.mul(a, z), s.inv(z)), c.mul(b, z));
                    lhs == rhs
                })
            })
        }))
    }

    /// Per-element orders under both operations.
    pub fn exponent_compare(&self) -> ExponentReport {
        let star = self.star.element_orders();
        let circ = self.circ.element_orders();
        let rows: Vec<(usize, usize, usize)> =
            (0..self.order()).map(|b| (b, star[b], circ[b])).collect();
        ExponentReport {
            all_equal: rows.iter().all(|&(_, s, c)| s == c),
            star_exponent: self.star.exponent(),
            circ_exponent: self.circ.exponent(),
            rows,
        }
    }

    /// Elements with `b ∘ b = b ⋆ b`.
    pub fn square_agreement_set(&self) -> Vec<usize> {
        (0..self.order()).filter(|&b| self.circ.mul(b, b) == self.star.mul(b, b)).collect()
    }

    /// Transports both tables along a bijection fixing 0.
    pub fn relabel(&self, sigma: &Perm) -> SkewBrace {
        Self::from_groups(self.star.relabel(sigma), self.circ.relabel(sigma)).expect("same carrier")
    }

    /// A single bijection that is an isomorphism for both tables at once.
    pub fn isomorphism_to(&self, other: &SkewBrace, budget: SearchBudget) -> Result<Option<Perm>> {
        if self.order() != other.order() {
            return Ok(None);
        }
        let circ_src = self.circ.element_orders();
        let circ_dst = other.circ.element_orders();
        let search = EmbeddingSearch::new(&self.star, &other.star, budget);
        let mut found = None;
        search.run(&|x, y| circ_src[x] == circ_dst[y], &mut |m| {
            let n = m.len();
            let ok = (0..n).all(|a| (0..n).all(|b| m[self.circ.mul(a, b)] == other.circ.mul(m[a], m[b])));
            if ok {
                found = Some(Perm::from_raw(m.iter().map(|&v| v as u16).collect()));
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        Ok(found)
    }
}

/// `x ↦ b⁻¹ ⋆ (b ∘ x)`.
fn l_map(add: &FiniteGroup, other: &FiniteGroup, b: usize) -> Vec<u16> {
    let binv = add.row(add.inv(b));
    other.row(b).iter().map(|&bx| binv[bx as usize]).collect()
}

/// First triple (lexicographic) violating `a ∘ (b ⋆ c) = (a ∘ b) ⋆ a⁻¹ ⋆ (a ∘ c)`.
fn first_failure(add: &FiniteGroup, other: &FiniteGroup) -> std::result::Result<(), Counterexample> {
    let n = add.order();
    (0..n)
        .into_par_iter()
        .find_map_first(|a| {
            let a_row = other.row(a);
            let ainv = add.inv(a);
            for b in 0..n {
                let left = add.row(add.mul(a_row[b] as usize, ainv));
                let b_row = add.row(b);
                for c in 0..n {
                    let lhs = a_row[b_row[c] as usize] as usize;
                    let rhs = left[a_row[c] as usize] as usize;
                    if lhs != rhs {
                        return Some(Counterexample { a, b, c, lhs, rhs });
                    }
                }
            }
            None
        })
        .map_or(Ok(()), Err)
}

/// `Aut_sb(B)`: simultaneous automorphisms of both operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceAutGroup {
    elements: Vec<Perm>,
}

impl BraceAutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentReport {
    /// `(element, ⋆-order, ∘-order)`
    pub rows: Vec<(usize, usize, usize)>,
    pub all_equal: bool,
    pub star_exponent: usize,
    pub circ_exponent: usize,
}
