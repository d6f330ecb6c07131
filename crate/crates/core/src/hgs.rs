//! Hopf–Galois structure counts from braces.
//!
//! For a brace `B` with `⋆` additive, a Galois extension with group
//! `Γ = (B, ∘)` carries `e = |Aut(B, ∘)| / |Aut_sb(B)|` Hopf–Galois
//! structures of type `G = (B, ⋆)` coming from `B`.

use std::fmt;

use crate::aut::{automorphism_group, SearchBudget};
use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::recognize::{recognize, GroupName};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HgsCountReport {
    pub label: String,
    /// Type of `(B, ∘)`, the Galois group.
    pub gamma_type: GroupName,
    /// Type of `(B, ⋆)`, the Hopf–Galois type.
    pub g_type: GroupName,
    pub aut_circ: usize,
    pub aut_star: usize,
    pub aut_sb: usize,
    pub e: usize,
}

impl HgsCountReport {
    /// `key=value` lines in a fixed order.
    pub fn to_kv(&self) -> String {
        format!(
            "label={}\ngamma_type={}\ng_type={}\naut_circ={}\naut_star={}\naut_sb={}\ne={}\n",
            self.label, self.gamma_type, self.g_type, self.aut_circ, self.aut_star, self.aut_sb, self.e
        )
    }
}

impl fmt::Display for HgsCountReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = [
            ("brace", self.label.clone()),
            ("Galois group (B,o)", self.gamma_type.to_string()),
            ("type (B,*)", self.g_type.to_string()),
            ("|Aut(B,o)|", self.aut_circ.to_string()),
            ("|Aut(B,*)|", self.aut_star.to_string()),
            ("|Aut_sb|", self.aut_sb.to_string()),
            ("e", self.e.to_string()),
        ];
        for (k, v) in rows {
            writeln!(f, "{k:<20} {v}")?;
        }
        Ok(())
    }
}

/// Computes `e_B(Γ, [G])` with `⋆` additive.
pub fn count_hgs(b: &SkewBrace, label: &str, budget: SearchBudget) -> Result<HgsCountReport> {
    if !b.is_valid() {
        return Err(Error::NotABrace);
    }
    let aut_circ = automorphism_group(b.circ(), budget)?.order();
    let aut_star = automorphism_group(b.star(), budget)?.order();
    let aut_sb = b.automorphism_group(budget)?.order();
    debug_assert_eq!(aut_circ % aut_sb, 0);
    Ok(HgsCountReport {
        label: label.to_string(),
        gamma_type: recognize(b.circ()),
        g_type: recognize(b.star()),
        aut_circ,
        aut_star,
        aut_sb,
        e: aut_circ / aut_sb,
    })
}

/// Both sides of `e_B(Γ,[G])·|Aut G| = e_B(G,[Γ])·|Aut Γ|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityReport {
    /// `⋆` additive: Galois group `(B, ∘)`.
    pub forward: HgsCountReport,
    /// `∘` additive: Galois group `(B, ⋆)`.
    pub backward: HgsCountReport,
    pub lhs: usize,
    pub rhs: usize,
}

impl ReciprocityReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn to_kv(&self) -> String {
        format!(
            "e_forward={}\ne_backward={}\naut_star={}\naut_circ={}\naut_sb={}\nlhs={}\nrhs={}\nholds={}\n",
            self.forward.e,
            self.backward.e,
            self.forward.aut_star,
            self.forward.aut_circ,
            self.forward.aut_sb,
            self.lhs,
            self.rhs,
            self.holds()
        )
    }
}

impl fmt::Display for ReciprocityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (g, gamma) = (&self.forward.g_type, &self.forward.gamma_type);
        writeln!(f, "e(Gamma={gamma}, [{g}]) * |Aut {g}| = {} * {} = {}", self.forward.e, self.forward.aut_star, self.lhs)?;
        writeln!(f, "e(Gamma={g}, [{gamma}]) * |Aut {gamma}| = {} * {} = {}", self.backward.e, self.forward.aut_circ, self.rhs)?;
        writeln!(f, "{}", if self.holds() { "holds" } else { "FAILS" })
    }
}

pub fn reciprocity_check(b: &SkewBrace, label: &str, budget: SearchBudget) -> Result<ReciprocityReport> {
    if !b.is_biskew() {
        return Err(Error::NotBiskew);
    }
    let forward = count_hgs(b, label, budget)?;
    let backward = count_hgs(&b.swapped(), label, budget)?;
    let lhs = forward.e * forward.aut_star;
    let rhs = backward.e * forward.aut_circ;
    Ok(ReciprocityReport { forward, backward, lhs, rhs })
}
