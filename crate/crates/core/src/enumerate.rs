//! All skew braces with a given additive group.
//!
//! A regular subgroup `N ≤ Hol(G)` contains exactly one `n_a` with
//! `n_a(0) = a` for each `a`, and `a ∘ x = n_a(x)` is a brace on `G`.
//! Two braces on the same additive group are isomorphic exactly when an
//! automorphism of `G` carries one circle table to the other.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::aut::{automorphism_group, SearchBudget};
use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Perm;
use crate::recognize::{recognize, GroupName};
use crate::templates;

pub const DEFAULT_CAP: usize = 12;

/// Largest order accepted by [`oracle_tables`].
pub const ORACLE_CAP: usize = 6;

/// A circle table on `0..n`, row-major.
pub type CircTable = Vec<u16>;

/// Regular subgroups of `Hol(G)`, each given by its circle table, sorted.
pub fn regular_subgroups_of_holomorph(g: &FiniteGroup, cap: usize, budget: SearchBudget) -> Result<Vec<CircTable>> {
    let n = g.order();
    if n > cap {
        return Err(Error::CapExceeded { order: n, cap });
    }
    let aut = automorphism_group(g, budget)?;
    if n == 1 {
        return Ok(vec![vec![0]]);
    }
    let search = Search { g, aut: aut.elements(), seen: Mutex::new(HashSet::new()) };
    let start = Slots::identity(n);
    let found: Vec<BTreeSet<CircTable>> = search
        .candidates(1)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|gen| {
            let mut out = BTreeSet::new();
            if let Some(next) = start.extend(&gen) {
                search.grow(next, &mut out);
            }
            out
        })
        .collect();
    let all: BTreeSet<CircTable> = found.into_iter().flatten().collect();
    Ok(all.into_iter().collect())
}

struct Search<'a> {
    g: &'a FiniteGroup,
    aut: &'a [Perm],
    seen: Mutex<HashSet<Vec<u16>>>,
}

impl Search<'_> {
    /// `x ↦ a·φ(x)` for every automorphism `φ`.
    fn candidates(&self, a: usize) -> impl Iterator<Item = Perm> + '_ {
        let lambda = self.g.left_translation(a);
        self.aut.iter().map(move |phi| lambda.compose(phi))
    }

    fn grow(&self, slots: Slots, out: &mut BTreeSet<CircTable>) {
        if !self.seen.lock().expect("poisoned").insert(slots.key()) {
            return;
        }
        let Some(a) = slots.first_gap() else {
            out.insert(slots.key());
            return;
        };
        for gen in self.candidates(a) {
            if let Some(next) = slots.extend(&gen) {
                self.grow(next, out);
            }
        }
    }
}

/// A semiregular permutation group indexed by where each element sends 0.
#[derive(Clone)]
struct Slots(Vec<Option<Perm>>);

impl Slots {
    fn identity(n: usize) -> Self {
        let mut v = vec![None; n];
        v[0] = Some(Perm::identity(n));
        Slots(v)
    }

    fn first_gap(&self) -> Option<usize> {
        self.0.iter().position(Option::is_none)
    }

    /// Flattened images, with `u16::MAX` rows for empty slots.
    fn key(&self) -> Vec<u16> {
        let n = self.0.len();
        let mut k = Vec::with_capacity(n * n);
        for s in &self.0 {
            match s {
                Some(p) => k.extend_from_slice(p.images()),
                None => k.extend(std::iter::repeat_n(u16::MAX, n)),
            }
        }
        k
    }

    /// Closure with `gen` added, or `None` if some non-identity element fixes a point.
    fn extend(&self, gen: &Perm) -> Option<Slots> {
        let mut slots = self.clone();
        let mut queue: Vec<Perm> = slots.0.iter().flatten().cloned().collect();
        let mut gens: Vec<Perm> = queue.clone();
        gens.push(gen.clone());
        if !slots.place(gen)? {
            return Some(slots);
        }
        queue.push(gen.clone());
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head].clone();
            head += 1;
            for s in &gens {
                let y = x.compose(s);
                if slots.place(&y)? {
                    queue.push(y);
                }
            }
        }
        Some(slots)
    }

    /// `Some(true)` if newly placed, `Some(false)` if already present,
    /// `None` if its slot holds a different permutation.
    fn place(&mut self, p: &Perm) -> Option<bool> {
        let slot = &mut self.0[p.apply(0)];
        match slot {
            Some(q) if q == p => Some(false),
            Some(_) => None,
            None => {
                *slot = Some(p.clone());
                Some(true)
            }
        }
    }
}

/// Every circle table making a brace with `⋆ = G`, by transporting each
/// group of order `|G|` along each bijection fixing 0.
pub fn oracle_tables(g: &FiniteGroup) -> Result<Vec<CircTable>> {
    let n = g.order();
    if n > ORACLE_CAP {
        return Err(Error::CapExceeded { order: n, cap: ORACLE_CAP });
    }
    let groups = templates::groups_of_order(n)?;
    let bijections: Vec<Perm> = templates::all_permutations(n)
        .into_iter()
        .filter(|p| p.apply(0) == 0)
        .collect();
    let mut out = BTreeSet::new();
    for h in &groups {
        for sigma in &bijections {
            let circ = h.relabel(sigma);
            if SkewBrace::from_groups(g.clone(), circ.clone())?.is_valid() {
                out.insert(circ.flat().to_vec());
            }
        }
    }
    Ok(out.into_iter().collect())
}

pub fn brace_from_table(g: &FiniteGroup, circ: &CircTable) -> SkewBrace {
    let n = g.order();
    let circ = FiniteGroup::from_fn(n, |a, b| circ[a * n + b] as usize).expect("circle table is a group");
    SkewBrace::from_groups(g.clone(), circ).expect("same carrier")
}

/// The smallest circle table over all relabelings by `Aut(⋆)`.
fn canonical(b: &SkewBrace, aut: &[Perm]) -> CircTable {
    aut.iter()
        .map(|s| b.circ().relabel(s).flat().to_vec())
        .min()
        .expect("identity is an automorphism")
}

#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub brace: SkewBrace,
    pub circle_type: GroupName,
    pub aut_sb: usize,
    /// `|Aut(B, ∘)| / |Aut_sb|`.
    pub e: usize,
    pub biskew: bool,
}

#[derive(Clone, Debug)]
pub struct BraceCensus {
    pub additive: FiniteGroup,
    pub additive_type: GroupName,
    pub entries: Vec<CensusEntry>,
    /// Number of braces supplied before removing isomorphic copies.
    pub raw_count: usize,
}

/// Groups braces on a common additive group up to isomorphism, one
/// canonical representative per class, sorted by circle table.
pub fn classify_braces(braces: &[SkewBrace], budget: SearchBudget) -> Result<BraceCensus> {
    let additive = match braces.first() {
        Some(b) => b.star().clone(),
        None => return Err(Error::EmptyTable),
    };
    if braces.iter().any(|b| b.star() != &additive) {
        return Err(Error::AdditiveMismatch);
    }
    let aut = automorphism_group(&additive, budget)?;
    let mut classes: BTreeSet<CircTable> = BTreeSet::new();
    for b in braces {
        if !b.is_valid() {
            return Err(Error::NotABrace);
        }
        classes.insert(canonical(b, aut.elements()));
    }
    let entries = classes
        .into_iter()
        .map(|t| {
            let brace = brace_from_table(&additive, &t);
            let aut_circ = automorphism_group(brace.circ(), budget)?.order();
            let aut_sb = brace.automorphism_group(budget)?.order();
            Ok(CensusEntry {
                circle_type: recognize(brace.circ()),
                aut_sb,
                e: aut_circ / aut_sb,
                biskew: brace.is_biskew(),
                brace,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BraceCensus { additive_type: recognize(&additive), additive, entries, raw_count: braces.len() })
}

/// Enumerates and classifies all braces with additive group `g`.
pub fn census(g: &FiniteGroup, cap: usize, budget: SearchBudget) -> Result<BraceCensus> {
    let tables = regular_subgroups_of_holomorph(g, cap, budget)?;
    let braces: Vec<SkewBrace> = tables.iter().map(|t| brace_from_table(g, t)).collect();
    classify_braces(&braces, budget)
}

impl BraceCensus {
    pub fn summary_lines(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| {
                format!(
                    "{:<10} {:<16} {:>6} {:>6} {}",
                    self.additive_type.to_string(),
                    e.circle_type.to_string(),
                    e.aut_sb,
                    e.e,
                    if e.biskew { "bi-skew" } else { "-" }
                )
            })
            .collect()
    }

    /// Number of classes per circle type.
    pub fn by_circle_type(&self) -> BTreeMap<String, usize> {
        let mut m = BTreeMap::new();
        for e in &self.entries {
            *m.entry(e.circle_type.to_string()).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for BraceCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "additive {} (order {}): {} regular subgroups, {} classes", self.additive_type, self.additive.order(), self.raw_count, self.entries.len())?;
        writeln!(f, "{:<10} {:<16} {:>6} {:>6} ", "additive", "circle", "Aut_sb", "e")?;
        for line in self.summary_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
