//! Plain-text formats for groups, braces and algebras.
//!
//! ```text
//! group 3          brace 2          algebra 3 3        cyclicring 3 1
//! 0 1 2            0 1              2 1 -> 1 0 0
//! 1 2 0            1 0
//! 2 0 1
//!                  0 1
//!                  1 0
//! ```
//!
//! Lines starting with `#` are ignored. Elements are indices and the
//! identity must be element 0.

use std::fmt::Write as _;

use crate::algebra::NilpotentAlgebra;
use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(s: &'a str) -> Self {
        Lines { inner: s.lines().enumerate().peekable(), last: 0 }
    }

    /// Next non-empty, non-comment line with its 1-based number.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (i, l) in self.inner.by_ref() {
            let t = l.trim();
            if !t.is_empty() && !t.starts_with('#') {
                self.last = i + 1;
                return Some((i + 1, t));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.next().ok_or_else(|| Error::Parse { line: self.last + 1, msg: format!("expected {what}, found end of input") })
    }

    fn finish(&mut self) -> Result<()> {
        match self.next() {
            Some((line, _)) => Err(Error::Parse { line, msg: "unexpected trailing content".into() }),
            None => Ok(()),
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers<T: std::str::FromStr>(line: usize, s: &str) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|w| w.parse().map_err(|_| err(line, format!("not a number: {w:?}"))))
        .collect()
}

fn header<'a>(lines: &mut Lines<'a>, keyword: &str, arity: usize) -> Result<(usize, Vec<usize>)> {
    let (line, text) = lines.expect(&format!("`{keyword}` header"))?;
    let mut words = text.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(err(line, format!("expected `{keyword}` header")));
    }
    let args: Vec<usize> = numbers(line, &words.collect::<Vec<_>>().join(" "))?;
    if args.len() != arity {
        return Err(err(line, format!("`{keyword}` takes {arity} argument(s)")));
    }
    Ok((line, args))
}

fn table(lines: &mut Lines<'_>, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, text) = lines.expect("table row")?;
        let row: Vec<usize> = numbers(line, text)?;
        if row.len() != n {
            return Err(err(line, format!("row has {} entries, expected {n}", row.len())));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(err(line, format!("entry {v} out of range")));
        }
        rows.push(row);
    }
    Ok(rows)
}

fn identity_at_zero(line: usize, rows: &[Vec<usize>]) -> Result<()> {
    let ok = rows.iter().enumerate().all(|(i, r)| r[0] == i) && rows[0].iter().enumerate().all(|(i, &v)| v == i);
    if ok {
        Ok(())
    } else {
        Err(err(line, "element 0 is not the identity"))
    }
}

pub fn parse_group(s: &str) -> Result<FiniteGroup> {
    let mut lines = Lines::new(s);
    let (line, args) = header(&mut lines, "group", 1)?;
    if args[0] == 0 {
        return Err(err(line, "empty group"));
    }
    let rows = table(&mut lines, args[0])?;
    lines.finish()?;
    identity_at_zero(line + 1, &rows)?;
    FiniteGroup::from_table(&rows)
}

pub fn write_group(g: &FiniteGroup) -> String {
    let mut s = format!("group {}\n", g.order());
    write_rows(&mut s, &g.rows());
    s
}

fn write_rows(s: &mut String, rows: &[Vec<usize>]) {
    for r in rows {
        let words: Vec<String> = r.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "{}", words.join(" "));
    }
}

pub fn parse_brace(s: &str) -> Result<SkewBrace> {
    let mut lines = Lines::new(s);
    let (line, args) = header(&mut lines, "brace", 1)?;
    if args[0] == 0 {
        return Err(err(line, "empty brace"));
    }
    let star = table(&mut lines, args[0])?;
    let circ_line = lines.last + 1;
    let circ = table(&mut lines, args[0])?;
    lines.finish()?;
    identity_at_zero(line + 1, &star)?;
    identity_at_zero(circ_line, &circ)?;
    SkewBrace::from_tables(&star, &circ)
}

pub fn write_brace(b: &SkewBrace) -> String {
    let mut s = format!("brace {}\n", b.order());
    write_rows(&mut s, &b.star().rows());
    s.push('\n');
    write_rows(&mut s, &b.circ().rows());
    s
}

pub fn parse_algebra(s: &str) -> Result<NilpotentAlgebra> {
    let mut lines = Lines::new(s);
    let (line, text) = lines.expect("`algebra` or `cyclicring` header")?;
    let keyword = text.split_whitespace().next().unwrap_or("");
    let args: Vec<u32> = numbers(line, text.trim_start_matches(keyword))?;
    match (keyword, args.as_slice()) {
        ("cyclicring", &[p, r]) => {
            lines.finish()?;
            NilpotentAlgebra::cyclic(p, r)
        }
        ("algebra", &[p, n]) => {
            let n = n as usize;
            let mut products = Vec::new();
            while let Some((line, text)) = lines.next() {
                let (lhs, rhs) = text.split_once("->").ok_or_else(|| err(line, "expected `i j -> v0 ... v{n-1}`"))?;
                let ij: Vec<usize> = numbers(line, lhs)?;
                let v: Vec<u32> = numbers(line, rhs)?;
                if ij.len() != 2 || ij.iter().any(|&i| i >= n) {
                    return Err(err(line, "expected two basis indices below the dimension"));
                }
                if v.len() != n {
                    return Err(err(line, format!("product has {} coordinates, expected {n}", v.len())));
                }
                products.push(((ij[0], ij[1]), v));
            }
            NilpotentAlgebra::new(p, n, products)
        }
        ("cyclicring", _) | ("algebra", _) => Err(err(line, format!("`{keyword}` takes 2 arguments"))),
        _ => Err(err(line, "expected `algebra` or `cyclicring` header")),
    }
}

pub fn write_algebra(a: &NilpotentAlgebra) -> String {
    if let Some(r) = a.cyclic_level() {
        return format!("cyclicring {} {}\n", a.prime(), r);
    }
    let mut s = format!("algebra {} {}\n", a.prime(), a.dimension());
    for ((i, j), v) in a.products() {
        let words: Vec<String> = v.iter().map(u32::to_string).collect();
        let _ = writeln!(s, "{i} {j} -> {}", words.join(" "));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, CatalogEntry};
    use crate::templates;

    #[test]
    fn group_round_trip() {
        let g = templates::dihedral(4);
        assert_eq!(parse_group(&write_group(&g)).unwrap(), g);
    }

    #[test]
    fn brace_round_trip() {
        let b = SkewBrace::opposite(&templates::symmetric(3).0);
        let parsed = parse_brace(&write_brace(&b)).unwrap();
        assert_eq!(parsed, b);
    }

    #[test]
    fn algebra_round_trip() {
        for e in [CatalogEntry::DeGraafA340, CatalogEntry::SixDimWedge, CatalogEntry::Cyclic { r: 2 }] {
            let a = catalog(e, 3).unwrap();
            assert_eq!(parse_algebra(&write_algebra(&a)).unwrap(), a);
        }
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(
            parse_group("group 2\n0 1\n1 5\n"),
            Err(Error::Parse { line: 3, msg: "entry 5 out of range".into() })
        );
        assert!(matches!(parse_group("# c\ngroup 2\n1 0\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_group("grp 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_group("group 2\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_algebra("algebra 3 2\n0 0 -> 1\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_algebra("cyclicring 4 1\n"), Err(Error::BadPrime(4)));
    }
}
