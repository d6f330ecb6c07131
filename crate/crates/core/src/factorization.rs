//! Exact factorizations `G = G_L · G_R` and the braces they induce.
//!
//! Every `g` decomposes uniquely as `g = l·r` with `l ∈ G_L`, `r ∈ G_R`.
//! Writing the same element as `g_L g_R⁻¹` (so `g_R = r⁻¹`), the map
//! `(g_L, g_R) ↦ (x ↦ g_L · x · g_R⁻¹)` is a regular embedding of
//! `G_L × G_R` into `Hol(G)`, and reading it off at the identity gives the
//! circle operation `x ∘ y = x_L · y · x_R⁻¹ = l(x) · y · r(x)`.

use crate::aut::{are_isomorphic, SearchBudget};
use crate::brace::{Additive, Counterexample, SkewBrace};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::{Perm, PermutationGroup};
use crate::templates;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactFactorization {
    group: FiniteGroup,
    left: Vec<usize>,
    right: Vec<usize>,
    /// `decomposition[g] = (l, r)` with `g = l·r`.
    decomposition: Vec<(usize, usize)>,
}

impl ExactFactorization {
    pub fn new(group: FiniteGroup, left: &[usize], right: &[usize]) -> Result<Self> {
        let mut left = left.to_vec();
        let mut right = right.to_vec();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        if !group.is_subgroup(&left) {
            return Err(Error::NotSubgroup(Side::Left));
        }
        if !group.is_subgroup(&right) {
            return Err(Error::NotSubgroup(Side::Right));
        }
        if left.iter().filter(|x| right.binary_search(x).is_ok()).count() != 1 {
            return Err(Error::IntersectionNontrivial);
        }
        if left.len() * right.len() != group.order() {
            return Err(Error::OrderMismatch { left: left.len(), right: right.len(), order: group.order() });
        }
        let mut decomposition = vec![(usize::MAX, usize::MAX); group.order()];
        for &l in &left {
            for &r in &right {
                decomposition[group.mul(l, r)] = (l, r);
            }
        }
        debug_assert!(decomposition.iter().all(|&(l, _)| l != usize::MAX));
        Ok(ExactFactorization { group, left, right, decomposition })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    /// `(l, r)` with `g = l·r`.
    pub fn decompose(&self, g: usize) -> (usize, usize) {
        self.decomposition[g]
    }

    /// `G_L` normal in `G`, i.e. `G = G_L ⋊ G_R`.
    pub fn is_semidirect(&self) -> bool {
        self.group.is_normal(&self.left)
    }

    /// `G_L × G_R` as an abstract group; `(i, j)` is element `i·|G_R| + j`
    /// where `i`, `j` index [`Self::left`] and [`Self::right`].
    pub fn factor_product(&self) -> FiniteGroup {
        let l = self.group.subgroup_as_group(&self.left).expect("subgroup");
        let r = self.group.subgroup_as_group(&self.right).expect("subgroup");
        l.direct_product(&r)
    }

    /// `β(g_L, g_R) = λ(g_L) ρ(g_R): x ↦ g_L · x · g_R⁻¹`, checked to be an
    /// injective homomorphism with regular image inside `Hol(G)`.
    pub fn byott_embedding(&self) -> ByottEmbedding {
        let g = &self.group;
        let m = self.right.len();
        let images: Vec<Perm> = (0..self.left.len() * m)
            .map(|k| {
                let (gl, gr) = (self.left[k / m], self.right[k % m]);
                g.left_translation(gl).compose(&g.right_translation(gr))
            })
            .collect();
        let emb = ByottEmbedding { domain: self.factor_product(), images };
        assert!(emb.is_homomorphism(), "β is not a homomorphism");
        assert!(emb.image().is_regular(), "β does not have regular image");
        assert!(emb.lands_in_holomorph(g), "β leaves the holomorph");
        emb
    }

    /// The brace with the ambient product additive and `x ∘ y = l(x)·y·r(x)`.
    pub fn circle_brace(&self) -> SkewBrace {
        let g = &self.group;
        let circ = FiniteGroup::from_fn(g.order(), |x, y| {
            let (l, r) = self.decomposition[x];
            g.mul(g.mul(l, y), r)
        })
        .expect("induced circle operation is a group");
        SkewBrace::from_groups(g.clone(), circ).expect("same carrier")
    }
}

#[derive(Clone, Debug)]
pub struct ByottEmbedding {
    domain: FiniteGroup,
    images: Vec<Perm>,
}

impl ByottEmbedding {
    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    pub fn is_homomorphism(&self) -> bool {
        let n = self.domain.order();
        (0..n).all(|a| (0..n).all(|b| self.images[self.domain.mul(a, b)] == self.images[a].compose(&self.images[b])))
    }

    pub fn is_injective(&self) -> bool {
        let mut v = self.images.clone();
        v.sort();
        v.dedup();
        v.len() == self.images.len()
    }

    pub fn image(&self) -> PermutationGroup {
        let degree = self.images.first().map_or(0, Perm::degree);
        PermutationGroup::from_elements(degree, self.images.clone()).expect("image of a homomorphism")
    }

    /// Each image is a left translation followed by an automorphism.
    pub fn lands_in_holomorph(&self, g: &FiniteGroup) -> bool {
        self.images.iter().all(|p| {
            let shift = g.left_translation(p.apply(0)).inverse();
            g.is_automorphism(&shift.compose(p))
        })
    }

    /// The image is isomorphic to `G_L × G_R`.
    pub fn image_matches_domain(&self, budget: SearchBudget) -> Result<bool> {
        Ok(are_isomorphic(&self.image().to_group(), &self.domain, budget)?.is_some())
    }
}

/// The S₄ = S₃·C₄ example evaluated at `x = (1234)`, `y = (12)`, `z = (13)(24)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S4Report {
    pub x: String,
    pub y: String,
    pub z: String,
    /// `x ⋆ (y ∘ z)` in cycle notation.
    pub lhs: String,
    /// `(x ⋆ y) ∘ x̄ ∘ (x ⋆ z)` in cycle notation.
    pub rhs: String,
    /// `(S₄, ∘, ⋆)` with the usual product additive.
    pub star_additive_valid: bool,
    /// `(S₄, ⋆, ∘)` with the induced product additive.
    pub circ_additive_valid: bool,
    pub semidirect: bool,
    /// First failing triple of the swapped orientation, in cycle notation
    /// `(a, b, c, lhs, rhs)`.
    pub first_failure: Option<[String; 5]>,
}

/// `S₄` with `G_L = Sym{1,2,3}` and `G_R = ⟨(1234)⟩`, products left to right.
pub fn s4_factorization() -> (ExactFactorization, Vec<Perm>) {
    let (s4, perms) = templates::symmetric(4);
    let left: Vec<usize> = (0..perms.len()).filter(|&i| perms[i].apply(3) == 3).collect();
    let four_cycle = Perm::parse_cycles("(1234)", 4).expect("cycle");
    let c = perms.iter().position(|p| *p == four_cycle).expect("present");
    let right = s4.subgroup_generated(&[c]);
    (ExactFactorization::new(s4, &left, &right).expect("S4 = S3·C4"), perms)
}

pub fn demo_s4() -> S4Report {
    let (f, perms) = s4_factorization();
    let brace = f.circle_brace();
    let (star, circ) = (brace.star(), brace.circ());
    let idx = |s: &str| {
        let p = Perm::parse_cycles(s, 4).expect("cycle");
        perms.iter().position(|q| *q == p).expect("present")
    };
    let name = |i: usize| perms[i].to_cycle_string();
    let (x, y, z) = (idx("(1234)"), idx("(12)"), idx("(13)(24)"));
    let lhs = star.mul(x, circ.mul(y, z));
    let xbar = circ.inv(x);
    let rhs = circ.mul(circ.mul(star.mul(x, y), xbar), star.mul(x, z));
    let failure = brace.validate_direct(Additive::Circ).err();
    S4Report {
        x: name(x),
        y: name(y),
        z: name(z),
        lhs: name(lhs),
        rhs: name(rhs),
        star_additive_valid: brace.is_valid(),
        circ_additive_valid: failure.is_none(),
        semidirect: f.is_semidirect(),
        first_failure: failure.map(|Counterexample { a, b, c, lhs, rhs }| {
            [name(a), name(b), name(c), name(lhs), name(rhs)]
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3_factorization() -> ExactFactorization {
        let (s3, perms) = templates::symmetric(3);
        let at = |s: &str| perms.iter().position(|p| *p == Perm::parse_cycles(s, 3).unwrap()).unwrap();
        let left = s3.subgroup_generated(&[at("(123)")]);
        let right = s3.subgroup_generated(&[at("(12)")]);
        ExactFactorization::new(s3, &left, &right).unwrap()
    }

    #[test]
    fn s3_is_semidirect_and_biskew() {
        let f = s3_factorization();
        assert!(f.is_semidirect());
        let b = f.circle_brace();
        assert!(b.is_valid() && b.is_biskew());
        assert!(b.circ().is_abelian());
        for g in 0..6 {
            let (l, r) = f.decompose(g);
            assert_eq!(f.group().mul(l, r), g);
        }
    }

    #[test]
    fn degenerate_factorizations() {
        let c4 = templates::cyclic(4);
        assert_eq!(ExactFactorization::new(c4.clone(), &[0, 2], &[0, 2]), Err(Error::IntersectionNontrivial));
        assert_eq!(ExactFactorization::new(c4.clone(), &[0, 1], &[0]), Err(Error::NotSubgroup(Side::Left)));
        assert!(matches!(ExactFactorization::new(c4, &[0, 2], &[0]), Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn trivial_factorization() {
        let g = templates::dihedral(4);
        let f = ExactFactorization::new(g.clone(), &(0..8).collect::<Vec<_>>(), &[0]).unwrap();
        let b = f.circle_brace();
        assert_eq!(b.circ().rows(), g.rows());
        let emb = f.byott_embedding();
        assert_eq!(emb.images(), &g.left_regular()[..]);
    }

    #[test]
    fn s4_orientation() {
        let (f, _) = s4_factorization();
        assert!(!f.is_semidirect());
        let b = f.circle_brace();
        assert!(b.is_valid());
        assert!(!b.is_biskew());
    }
}
