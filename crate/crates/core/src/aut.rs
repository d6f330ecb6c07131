//! Automorphisms, isomorphisms and holomorphs by backtracking over the
//! images of a generating sequence.
//!
//! A map is fixed by where it sends each generator. For a prefix of the
//! generating sequence the candidate map is extended to the subgroup that
//! prefix generates (along a breadth-first word tree) and checked against
//! every generator edge of that subgroup; a prefix that fails is never
//! extended further.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom};
use crate::perm::{Perm, PermutationGroup};

/// Environment variable that overrides [`SearchBudget::default`].
pub const BUDGET_ENV: &str = "BRACELAB_BUDGET";

/// Maximum number of search nodes a single backtracking run may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 50_000_000 }
    }
}

impl SearchBudget {
    pub fn new(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }

    /// The default budget, or the value of `BRACELAB_BUDGET` when set and numeric.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(SearchBudget::new)
            .unwrap_or_default()
    }
}

/// Greedy generating sequence: repeatedly add the element that enlarges the
/// generated subgroup the most (ties go to the smaller index).
pub fn generating_sequence(g: &FiniteGroup) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = vec![0usize];
    while span.len() < g.order() {
        let mut inside = vec![false; g.order()];
        for &s in &span {
            inside[s] = true;
        }
        let mut best: Option<(usize, Vec<usize>)> = None;
        for x in (0..g.order()).filter(|&x| !inside[x]) {
            gens.push(x);
            let sub = g.subgroup_generated(&gens);
            gens.pop();
            if best.as_ref().is_none_or(|(_, b)| sub.len() > b.len()) {
                let full = sub.len() == g.order();
                best = Some((x, sub));
                if full {
                    break;
                }
            }
        }
        let (x, sub) = best.expect("a non-member exists");
        gens.push(x);
        span = sub;
    }
    gens
}

/// One breadth-first word tree per prefix of the generating sequence.
struct WordTrees {
    gens: Vec<usize>,
    /// `levels[i]` lists `(element, parent, generator)` for `⟨gens[..=i]⟩`,
    /// in an order where every parent precedes its children.
    levels: Vec<Vec<(usize, usize, usize)>>,
}

impl WordTrees {
    fn new(g: &FiniteGroup, gens: Vec<usize>) -> Self {
        let mut levels = Vec::with_capacity(gens.len());
        for i in 0..gens.len() {
            let mut seen = vec![false; g.order()];
            seen[0] = true;
            let mut tree = vec![(0usize, 0usize, usize::MAX)];
            let mut head = 0;
            while head < tree.len() {
                let x = tree[head].0;
                head += 1;
                for (k, &s) in gens[..=i].iter().enumerate() {
                    let y = g.mul(x, s);
                    if !seen[y] {
                        seen[y] = true;
                        tree.push((y, x, k));
                    }
                }
            }
            levels.push(tree);
        }
        WordTrees { gens, levels }
    }
}

/// Backtracking search for injective homomorphisms `src → dst` that are
/// bijective when `|src| = |dst|`.
pub(crate) struct EmbeddingSearch<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    trees: WordTrees,
    src_orders: Vec<usize>,
    dst_orders: Vec<usize>,
    budget: SearchBudget,
}

impl<'a> EmbeddingSearch<'a> {
    pub(crate) fn new(src: &'a FiniteGroup, dst: &'a FiniteGroup, budget: SearchBudget) -> Self {
        let gens = generating_sequence(src);
        EmbeddingSearch {
            src,
            dst,
            trees: WordTrees::new(src, gens),
            src_orders: src.element_orders(),
            dst_orders: dst.element_orders(),
            budget,
        }
    }

    /// Visits every complete map. `allow(x, y)` may veto sending `x` to `y`
    /// for generators and derived elements alike; `leaf` returns `Break` to stop.
    pub(crate) fn run(
        &self,
        allow: &dyn Fn(usize, usize) -> bool,
        leaf: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<()> {
        let n = self.src.order();
        if n != self.dst.order() {
            return Ok(());
        }
        if self.trees.gens.is_empty() {
            let _ = leaf(&[0]);
            return Ok(());
        }
        let mut images = vec![usize::MAX; self.trees.gens.len()];
        let mut map = vec![usize::MAX; n];
        let mut nodes = 0u64;
        self.descend(0, &mut images, &mut map, &mut nodes, allow, leaf).map(|_| ())
    }

    fn descend(
        &self,
        level: usize,
        images: &mut [usize],
        map: &mut [usize],
        nodes: &mut u64,
        allow: &dyn Fn(usize, usize) -> bool,
        leaf: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let gen = self.trees.gens[level];
        let want = self.src_orders[gen];
        for cand in 0..self.dst.order() {
            if self.dst_orders[cand] != want || !allow(gen, cand) {
                continue;
            }
            *nodes += 1;
            if *nodes > self.budget.max_nodes {
                return Err(Error::SearchLimitExceeded(self.budget.max_nodes));
            }
            images[level] = cand;
            if !self.extend(level, images, map, allow) {
                continue;
            }
            if level + 1 == images.len() {
                if leaf(map).is_break() {
                    return Ok(ControlFlow::Break(()));
                }
            } else if self.descend(level + 1, images, map, nodes, allow, leaf)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// Extends the generator images to `⟨gens[..=level]⟩`; false if the
    /// extension is not a well-defined injective homomorphism.
    fn extend(&self, level: usize, images: &[usize], map: &mut [usize], allow: &dyn Fn(usize, usize) -> bool) -> bool {
        let tree = &self.trees.levels[level];
        for &(x, _, _) in tree {
            map[x] = usize::MAX;
        }
        let mut used = vec![false; self.dst.order()];
        map[0] = 0;
        used[0] = true;
        for &(x, parent, k) in &tree[1..] {
            let y = self.dst.mul(map[parent], images[k]);
            if used[y] || self.src_orders[x] != self.dst_orders[y] || !allow(x, y) {
                return false;
            }
            used[y] = true;
            map[x] = y;
        }
        for &(x, _, _) in tree {
            for (k, &s) in self.trees.gens[..=level].iter().enumerate() {
                if map[self.src.mul(x, s)] != self.dst.mul(map[x], images[k]) {
                    return false;
                }
            }
        }
        true
    }
}

/// All automorphisms of `g` as permutations of its elements.
pub fn automorphism_group(g: &FiniteGroup, budget: SearchBudget) -> Result<PermutationGroup> {
    let search = EmbeddingSearch::new(g, g, budget);
    let mut found: Vec<Perm> = Vec::new();
    search.run(&|_, _| true, &mut |m| {
        found.push(Perm::from_raw(m.iter().map(|&v| v as u16).collect()));
        ControlFlow::Continue(())
    })?;
    found.sort();
    Ok(PermutationGroup::from_sorted_unchecked(g.order(), found))
}

/// Cheap isomorphism invariants: order multiset, center order, abelianness,
/// derived-subgroup order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInvariants {
    pub order_profile: Vec<usize>,
    pub center_order: usize,
    pub abelian: bool,
    pub derived_order: usize,
}

impl GroupInvariants {
    pub fn of(g: &FiniteGroup) -> Self {
        GroupInvariants {
            order_profile: g.order_profile(),
            center_order: g.center().len(),
            abelian: g.is_abelian(),
            derived_order: g.derived_subgroup().len(),
        }
    }
}

/// A witness isomorphism `g → h`, or `None` when the groups are not isomorphic.
pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup, budget: SearchBudget) -> Result<Option<GroupHom>> {
    if g.order() != h.order() || GroupInvariants::of(g) != GroupInvariants::of(h) {
        return Ok(None);
    }
    let search = EmbeddingSearch::new(g, h, budget);
    let mut witness = None;
    search.run(&|_, _| true, &mut |m| {
        witness = Some(m.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(witness.map(GroupHom::from_images_unchecked))
}

/// `Hol(G)`: the subgroup of `Sym(G)` generated by left translations and automorphisms.
pub fn holomorph(g: &FiniteGroup, budget: SearchBudget) -> Result<PermutationGroup> {
    let aut = automorphism_group(g, budget)?;
    let aut_abstract = aut.to_group();
    let mut gens: Vec<Perm> = generating_sequence(g).into_iter().map(|x| g.left_translation(x)).collect();
    gens.extend(generating_sequence(&aut_abstract).into_iter().map(|i| aut.elements()[i].clone()));
    Ok(PermutationGroup::generate(g.order(), &gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::templates;

    fn aut_order(g: &FiniteGroup) -> usize {
        automorphism_group(g, SearchBudget::default()).unwrap().order()
    }

    #[test]
    fn small_automorphism_orders() {
        assert_eq!(aut_order(&templates::symmetric(3).0), 6);
        assert_eq!(aut_order(&templates::elementary_abelian(2, 3)), 168);
        assert_eq!(aut_order(&templates::cyclic(1)), 1);
        assert_eq!(aut_order(&templates::cyclic(9)), 6);
        assert_eq!(aut_order(&templates::quaternion()), 24);
        assert_eq!(aut_order(&templates::dihedral(4)), 8);
    }

    #[test]
    fn automorphisms_are_automorphisms() {
        let g = templates::dihedral(5);
        let aut = automorphism_group(&g, SearchBudget::default()).unwrap();
        assert_eq!(aut.order(), 20);
        assert!(aut.elements().iter().all(|p| g.is_automorphism(p)));
        assert!(PermutationGroup::from_elements(g.order(), aut.elements().to_vec()).is_ok());
    }

    #[test]
    fn budget_is_enforced() {
        let g = templates::elementary_abelian(2, 3);
        assert_eq!(
            automorphism_group(&g, SearchBudget::new(10)),
            Err(Error::SearchLimitExceeded(10))
        );
    }

    #[test]
    fn isomorphism_examples() {
        let b = SearchBudget::default();
        assert!(are_isomorphic(&templates::cyclic(4), &templates::elementary_abelian(2, 2), b).unwrap().is_none());
        let c6 = templates::cyclic(6);
        let c3c2 = templates::cyclic(3).direct_product(&templates::cyclic(2));
        let w = are_isomorphic(&c6, &c3c2, b).unwrap().expect("CRT");
        assert!(w.is_bijective());
        assert!(GroupHom::new(&c6, &c3c2, w.images().to_vec()).is_some());
        assert!(are_isomorphic(&templates::heisenberg(3), &templates::m3(3), b).unwrap().is_none());
        assert!(are_isomorphic(&templates::dihedral(4), &templates::quaternion(), b).unwrap().is_none());
    }

    #[test]
    fn holomorph_orders() {
        let b = SearchBudget::default();
        assert_eq!(holomorph(&templates::cyclic(3), b).unwrap().order(), 6);
        let hol = holomorph(&templates::elementary_abelian(2, 2), b).unwrap();
        assert_eq!(hol.order(), 24);
        assert_eq!(hol.elements().len(), templates::all_permutations(4).len());
    }
}
