//! Worked examples, each reduced to a list of named values.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{catalog, CatalogEntry};
use crate::aut::{automorphism_group, SearchBudget};
use crate::error::{Error, Result};
use crate::factorization::demo_s4;
use crate::hgs::reciprocity_check;
use crate::recognize::recognize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Demo {
    S4,
    Heisenberg,
    Ratio,
    Exponent,
    Sixdim,
}

impl Demo {
    pub const ALL: [Demo; 5] = [Demo::S4, Demo::Heisenberg, Demo::Ratio, Demo::Exponent, Demo::Sixdim];

    pub fn name(self) -> &'static str {
        match self {
            Demo::S4 => "s4",
            Demo::Heisenberg => "heisenberg",
            Demo::Ratio => "ratio",
            Demo::Exponent => "exponent",
            Demo::Sixdim => "sixdim",
        }
    }

    pub fn run(self, budget: SearchBudget) -> Result<Report> {
        match self {
            Demo::S4 => Ok(s4()),
            Demo::Heisenberg => heisenberg(),
            Demo::Ratio => ratio(budget),
            Demo::Exponent => exponent(),
            Demo::Sixdim => sixdim(),
        }
    }
}

impl FromStr for Demo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Demo::ALL.into_iter().find(|d| d.name() == s).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Ordered `key = value` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub fields: Vec<(String, String)>,
}

impl Report {
    fn new(title: &str) -> Self {
        Report { title: title.to_string(), fields: Vec::new() }
    }

    fn push(&mut self, key: &str, value: impl ToString) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn to_kv(&self) -> String {
        self.fields.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.fields {
            writeln!(f, "  {k:<width$}  {v}")?;
        }
        Ok(())
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "valid"
    } else {
        "invalid"
    }
}

fn dims(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn s4() -> Report {
    let r = demo_s4();
    let mut out = Report::new("S4 = S3 . C4, swapped relation at x=(1234), y=(12), z=(13)(24)");
    out.push("x", &r.x);
    out.push("y", &r.y);
    out.push("z", &r.z);
    out.push("lhs", &r.lhs);
    out.push("rhs", &r.rhs);
    out.push("sides_agree", r.lhs == r.rhs);
    out.push("product_additive", verdict(r.star_additive_valid));
    out.push("circle_additive", verdict(r.circ_additive_valid));
    out.push("semidirect", r.semidirect);
    if let Some([a, b, c, lhs, rhs]) = &r.first_failure {
        out.push("failure_x", a);
        out.push("failure_y", b);
        out.push("failure_z", c);
        out.push("failure_lhs", lhs);
        out.push("failure_rhs", rhs);
    }
    out
}

/// The circle group of `A⁰₍₃,₄₎` over `𝔽₃` checked against
/// `(x₁ + x₂ + z₁y₂, y₁ + y₂, z₁ + z₂)`.
pub fn heisenberg() -> Result<Report> {
    let p = 3u32;
    let a = catalog(CatalogEntry::DeGraafA340, p)?;
    let b = a.to_brace()?;
    let n = b.order();
    let formula = (0..n).all(|i| {
        (0..n).all(|j| {
            let (u, v) = (a.decode(i), a.decode(j));
            let want = [(u[0] + v[0] + u[2] * v[1]) % p, (u[1] + v[1]) % p, (u[2] + v[2]) % p];
            b.circ().mul(i, j) == a.encode(&want)
        })
    });
    let mut out = Report::new("A340 over F_3: circle group");
    out.push("pairs_checked", n * n);
    out.push("formula_holds", formula);
    out.push("circle_type", recognize(b.circ()));
    out.push("circle_order", n);
    out.push("circle_exponent", b.circ().exponent());
    out.push("circle_abelian", b.circ().is_abelian());
    out.push("additive_type", recognize(b.star()));
    out.push("power_ideal_dims", dims(&a.power_ideal_dims()));
    out.push("left_brace", b.is_valid());
    out.push("biskew", b.is_biskew());
    out.push("two_sided", b.is_two_sided()?);
    Ok(out)
}

/// Automorphism orders behind the `p³ − 1` ratio at `p = 3`.
pub fn ratio(budget: SearchBudget) -> Result<Report> {
    let p = 3usize;
    let b = catalog(CatalogEntry::DeGraafA340, p as u32)?.to_brace()?;
    let r = reciprocity_check(&b, "degraaf_A340", budget)?;
    let aut_additive = automorphism_group(b.star(), budget)?.order();
    let aut_circle = automorphism_group(b.circ(), budget)?.order();
    let (e_abelian, e_heis) = (r.backward.e, r.forward.e);
    let mut out = Report::new("A340 at p=3: Hopf-Galois counts in both directions");
    out.push("additive_type", &r.forward.g_type);
    out.push("circle_type", &r.forward.gamma_type);
    out.push("aut_additive", aut_additive);
    out.push("aut_circle", aut_circle);
    out.push("aut_sb", r.forward.aut_sb);
    out.push("e_galois_abelian", e_abelian);
    out.push("e_galois_heisenberg", e_heis);
    out.push("ratio", e_abelian / e_heis);
    out.push("ratio_exact", e_abelian % e_heis == 0);
    out.push("p3_minus_1", p.pow(3) - 1);
    out.push("closed_form_without_p3", (p.pow(3) - 1) * (p.pow(2) - 1) * (p - 1));
    out.push("closed_form_heisenberg", p.pow(3) * (p.pow(2) - 1) * (p - 1));
    out.push("reciprocity_lhs", r.lhs);
    out.push("reciprocity_rhs", r.rhs);
    out.push("reciprocity_holds", r.holds());
    Ok(out)
}

/// Orders under `+` and `∘` for two radical algebras.
pub fn exponent() -> Result<Report> {
    let t = catalog(CatalogEntry::TruncatedPoly { m: 2 }, 2)?.to_brace()?;
    let tr = t.exponent_compare();
    let d = catalog(CatalogEntry::DeGraafA340, 5)?.to_brace()?;
    let dr = d.exponent_compare();
    let mut out = Report::new("exponents of (A,+) and (A,o)");
    out.push("truncated_poly_2_p2_additive_exponent", tr.star_exponent);
    out.push("truncated_poly_2_p2_circle_exponent", tr.circ_exponent);
    out.push("truncated_poly_2_p2_circle_type", recognize(t.circ()));
    out.push("truncated_poly_2_p2_all_equal", tr.all_equal);
    out.push("degraaf_A340_p5_additive_exponent", dr.star_exponent);
    out.push("degraaf_A340_p5_circle_exponent", dr.circ_exponent);
    out.push("degraaf_A340_p5_all_equal", dr.all_equal);
    Ok(out)
}

/// `b ∘ b = b + b` on the six-dimensional algebra over `𝔽₃`.
pub fn sixdim() -> Result<Report> {
    let a = catalog(CatalogEntry::SixDimWedge, 3)?;
    let b = a.to_brace()?;
    let set = b.square_agreement_set();
    let predicted: Vec<usize> = (0..b.order())
        .filter(|&i| a.decode(i)[..3].iter().filter(|&&c| c == 0).count() >= 2)
        .collect();
    let mut out = Report::new("six-dimensional algebra over F_3");
    out.push("order", b.order());
    out.push("power_ideal_dims", dims(&a.power_ideal_dims()));
    out.push("cube_vanishes", a.cube_vanishes());
    out.push("biskew", b.is_biskew());
    out.push("square_agreement_count", set.len());
    out.push("matches_two_of_rst_zero", set == predicted);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for d in Demo::ALL {
            assert_eq!(d.name().parse::<Demo>().unwrap(), d);
        }
        assert!("nope".parse::<Demo>().is_err());
    }

    #[test]
    fn exponent_values() {
        let r = exponent().unwrap();
        assert_eq!(r.get("truncated_poly_2_p2_additive_exponent"), Some("2"));
        assert_eq!(r.get("truncated_poly_2_p2_circle_exponent"), Some("4"));
        assert_eq!(r.get("degraaf_A340_p5_all_equal"), Some("true"));
    }

    #[test]
    fn kv_is_one_pair_per_line() {
        let r = s4();
        assert_eq!(r.to_kv().lines().count(), r.fields.len());
        assert!(r.to_kv().lines().all(|l| l.contains('=')));
    }
}
