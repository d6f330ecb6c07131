//! Finite nilpotent algebras and their circle groups.
//!
//! Two kinds are supported: algebras over `𝔽_p` given by structure
//! constants on a basis `e₀ … e_{n-1}`, and the cyclic rings `ℤ/p³` with
//! product `x·y = p^r·x·y`. Either way the circle operation is
//! `a ∘ b = a + b + a·b`, and nilpotency makes it a group.
//!
//! Elements are encoded as indices by reading the coordinate vector in base
//! `p` (first coordinate least significant); the cyclic ring uses the residue
//! itself.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    /// Nonzero basis products `e_i · e_j`.
    Structure { n: usize, products: BTreeMap<(usize, usize), Vec<u32>> },
    /// `ℤ/p³` with `x·y = p^r x y`.
    Cyclic { r: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentAlgebra {
    p: u32,
    kind: Kind,
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn pow_u64(base: u64, exp: u32) -> u64 {
    (0..exp).fold(1, |acc, _| acc * base)
}

impl NilpotentAlgebra {
    /// An `𝔽_p`-algebra of dimension `n` from its nonzero basis products.
    /// Checks associativity on all basis triples and nilpotency through the
    /// chain of power ideals.
    pub fn new(p: u32, n: usize, products: impl IntoIterator<Item = ((usize, usize), Vec<u32>)>) -> Result<Self> {
        let alg = Self::structure_unvalidated(p, n, products)?;
        alg.check_associative()?;
        alg.power_ideal_chain()?;
        Ok(alg)
    }

    fn structure_unvalidated(
        p: u32,
        n: usize,
        products: impl IntoIterator<Item = ((usize, usize), Vec<u32>)>,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        let mut map = BTreeMap::new();
        for ((i, j), v) in products {
            if i >= n || j >= n || v.len() != n || v.iter().any(|&c| c >= p) {
                return Err(Error::ConstantOutOfRange(format!("e{i}·e{j} -> {v:?}")));
            }
            if v.iter().any(|&c| c != 0) {
                map.insert((i, j), v);
            }
        }
        Ok(NilpotentAlgebra { p, kind: Kind::Structure { n, products: map } })
    }

    /// The ring `ℤ/p³` with `x·y = p^r x y`; nilpotent exactly when `r ≥ 1`.
    pub fn cyclic(p: u32, r: u32) -> Result<Self> {
        let alg = Self::cyclic_unvalidated(p, r)?;
        alg.power_ideal_chain()?;
        Ok(alg)
    }

    /// Like [`Self::cyclic`] but skips the nilpotency check, so that a
    /// non-radical ring can reach [`Self::circle_group`].
    pub fn cyclic_unvalidated(p: u32, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(NilpotentAlgebra { p, kind: Kind::Cyclic { r } })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    /// `log_p` of the number of elements.
    pub fn dimension(&self) -> usize {
        match &self.kind {
            Kind::Structure { n, .. } => *n,
            Kind::Cyclic { .. } => 3,
        }
    }

    pub fn is_cyclic_ring(&self) -> bool {
        matches!(self.kind, Kind::Cyclic { .. })
    }

    /// Number of elements, or `None` if it overflows.
    pub fn size(&self) -> Option<usize> {
        (self.p as usize).checked_pow(self.dimension() as u32)
    }

    /// Nonzero basis products (empty for the cyclic ring).
    pub fn products(&self) -> Vec<((usize, usize), Vec<u32>)> {
        match &self.kind {
            Kind::Structure { products, .. } => products.iter().map(|(k, v)| (*k, v.clone())).collect(),
            Kind::Cyclic { .. } => Vec::new(),
        }
    }

    /// `Some(r)` for the cyclic ring.
    pub fn cyclic_level(&self) -> Option<u32> {
        match self.kind {
            Kind::Cyclic { r } => Some(r),
            Kind::Structure { .. } => None,
        }
    }

    fn modulus(&self) -> u64 {
        match self.kind {
            Kind::Structure { .. } => self.p as u64,
            Kind::Cyclic { .. } => pow_u64(self.p as u64, 3),
        }
    }

    fn coords(&self) -> usize {
        match &self.kind {
            Kind::Structure { n, .. } => *n,
            Kind::Cyclic { .. } => 1,
        }
    }

    pub fn encode(&self, v: &[u32]) -> usize {
        let m = self.modulus() as usize;
        v.iter().rev().fold(0, |acc, &c| acc * m + c as usize)
    }

    pub fn decode(&self, mut x: usize) -> Vec<u32> {
        let m = self.modulus() as usize;
        (0..self.coords())
            .map(|_| {
                let c = x % m;
                x /= m;
                c as u32
            })
            .collect()
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let m = self.modulus();
        a.iter().zip(b).map(|(&x, &y)| ((x as u64 + y as u64) % m) as u32).collect()
    }

    pub fn neg(&self, a: &[u32]) -> Vec<u32> {
        let m = self.modulus();
        a.iter().map(|&x| ((m - x as u64) % m) as u32).collect()
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let m = self.modulus();
        match &self.kind {
            Kind::Structure { n, products } => {
                let mut out = vec![0u64; *n];
                for (&(i, j), v) in products {
                    let s = a[i] as u64 * b[j] as u64 % m;
                    if s != 0 {
                        for (o, &c) in out.iter_mut().zip(v) {
                            *o = (*o + s * c as u64) % m;
                        }
                    }
                }
                out.into_iter().map(|x| x as u32).collect()
            }
            Kind::Cyclic { r } => {
                let scale = pow_u64(self.p as u64, *r) % m;
                vec![(scale * a[0] as u64 % m * b[0] as u64 % m) as u32]
            }
        }
    }

    /// `a ∘ b = a + b + a·b`.
    pub fn circle(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        self.add(&self.add(a, b), &self.mul(a, b))
    }

    fn basis(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.coords()];
        v[i] = 1;
        v
    }

    fn check_associative(&self) -> Result<()> {
        let Kind::Structure { n, .. } = &self.kind else { return Ok(()) };
        for i in 0..*n {
            for j in 0..*n {
                let eij = self.mul(&self.basis(i), &self.basis(j));
                for k in 0..*n {
                    let ek = self.basis(k);
                    let left = self.mul(&eij, &ek);
                    let right = self.mul(&self.basis(i), &self.mul(&self.basis(j), &ek));
                    if left != right {
                        return Err(Error::AlgebraNotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// `log_p |A^k|` for `k = 1, 2, …`, ending at the first 0. For
    /// structure-constant algebras these are the `𝔽_p`-dimensions.
    pub fn power_ideal_dims(&self) -> Vec<usize> {
        self.power_ideal_chain().expect("validated algebra is nilpotent")
    }

    fn power_ideal_chain(&self) -> Result<Vec<usize>> {
        match &self.kind {
            Kind::Cyclic { r } => {
                if *r == 0 {
                    return Err(Error::NotNilpotent(3));
                }
                let mut dims = Vec::new();
                let mut k = 0u32;
                loop {
                    let d = 3usize.saturating_sub((k * r) as usize);
                    dims.push(d);
                    if d == 0 {
                        return Ok(dims);
                    }
                    k += 1;
                }
            }
            Kind::Structure { n, .. } => {
                let mut span: Vec<Vec<u32>> = (0..*n).map(|i| self.basis(i)).collect();
                let mut dims = vec![span.len()];
                while !span.is_empty() {
                    let products: Vec<Vec<u32>> = span
                        .iter()
                        .flat_map(|u| (0..*n).map(move |j| (u, j)))
                        .map(|(u, j)| self.mul(u, &self.basis(j)))
                        .collect();
                    let next = row_reduce(products, self.p);
                    if next.len() == span.len() {
                        return Err(Error::NotNilpotent(next.len()));
                    }
                    dims.push(next.len());
                    span = next;
                }
                if dims.len() == 1 {
                    dims.push(0);
                }
                Ok(dims)
            }
        }
    }

    /// True when every product of three elements vanishes.
    pub fn cube_vanishes(&self) -> bool {
        self.power_ideal_dims().get(2).is_none_or(|&d| d == 0)
    }

    /// `ā = Σ_{k≥1} (−a)^k`, which terminates when `a` is nilpotent.
    pub fn quasi_inverse(&self, a: &[u32]) -> Result<Vec<u32>> {
        let neg = self.neg(a);
        let mut term = neg.clone();
        let mut sum = vec![0; a.len()];
        // a^k = 0 for k > log_p |A| in a nilpotent algebra
        for _ in 0..=self.dimension() + 1 {
            if term.iter().all(|&c| c == 0) {
                return Ok(sum);
            }
            sum = self.add(&sum, &term);
            term = self.mul(&term, &neg);
        }
        Err(Error::QuasiInverseMissing(self.encode(a)))
    }

    /// `(A, +)` as a table.
    pub fn additive_group(&self) -> Result<FiniteGroup> {
        let n = self.table_size()?;
        let elems: Vec<Vec<u32>> = (0..n).map(|x| self.decode(x)).collect();
        FiniteGroup::from_fn(n, |a, b| self.encode(&self.add(&elems[a], &elems[b])))
    }

    /// `(A, ∘)` as a table. Fails with `QuasiInverseMissing` when some element
    /// has no circle inverse, which happens only for non-radical rings.
    pub fn circle_group(&self) -> Result<FiniteGroup> {
        let n = self.table_size()?;
        let elems: Vec<Vec<u32>> = (0..n).map(|x| self.decode(x)).collect();
        for e in &elems {
            self.quasi_inverse(e)?;
        }
        FiniteGroup::from_fn(n, |a, b| self.encode(&self.circle(&elems[a], &elems[b])))
    }

    fn table_size(&self) -> Result<usize> {
        match self.size() {
            Some(n) if n <= MAX_ORDER => Ok(n),
            Some(n) => Err(Error::TooLarge(n)),
            None => Err(Error::TooLarge(usize::MAX)),
        }
    }

    /// The left brace `(A, ∘, +)`.
    pub fn to_brace(&self) -> Result<SkewBrace> {
        SkewBrace::from_groups(self.additive_group()?, self.circle_group()?)
    }
}

/// Echelon basis of the row space over `𝔽_p`.
pub(crate) fn row_reduce(mut rows: Vec<Vec<u32>>, p: u32) -> Vec<Vec<u32>> {
    let p = p as u64;
    let inv = |a: u64| -> u64 { (1..p).find(|&x| a * x % p == 1).expect("unit") };
    let width = rows.first().map_or(0, Vec::len);
    let mut basis: Vec<Vec<u32>> = Vec::new();
    for col in 0..width {
        let Some(pos) = rows.iter().position(|r| r[col] != 0) else { continue };
        let mut pivot = rows.swap_remove(pos);
        let s = inv(pivot[col] as u64);
        for c in pivot.iter_mut() {
            *c = (*c as u64 * s % p) as u32;
        }
        for r in rows.iter_mut() {
            let f = r[col] as u64;
            if f != 0 {
                for (x, &y) in r.iter_mut().zip(&pivot) {
                    *x = ((*x as u64 + p * p - f * y as u64 % p) % p) as u32;
                }
            }
        }
        basis.push(pivot);
    }
    basis
}

/// Named algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogEntry {
    /// Basis `x, y, z` with `z·y = x`, all other basis products zero.
    DeGraafA340,
    /// Basis `x, y, z, a, b, c` with `xy = a`, `yz = b`, `zx = c`.
    SixDimWedge,
    /// `x𝔽_p[x]/(x^{m+1})` on the basis `x, x², …, x^m`.
    TruncatedPoly { m: usize },
    /// `ℤ/p³` with `x·y = p^r x y`.
    Cyclic { r: u32 },
    /// Zero multiplication on `𝔽_p^n`.
    Zero { n: usize },
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogEntry::DeGraafA340 => write!(f, "degraaf_A340"),
            CatalogEntry::SixDimWedge => write!(f, "sixdim_wedge"),
            CatalogEntry::TruncatedPoly { m } => write!(f, "truncated_poly({m})"),
            CatalogEntry::Cyclic { r } => write!(f, "cyclic({r})"),
            CatalogEntry::Zero { n } => write!(f, "zero({n})"),
        }
    }
}

impl FromStr for CatalogEntry {
    type Err = Error;

    /// Accepts `degraaf_A340`, `sixdim_wedge`, `truncated_poly(m)`, `cyclic(r)`, `zero(n)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let arg = |name: &str| -> Option<Result<usize>> {
            let rest = s.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(rest.trim().parse().map_err(|_| Error::UnsupportedParameter(s.to_string())))
        };
        match s {
            "degraaf_A340" => return Ok(CatalogEntry::DeGraafA340),
            "sixdim_wedge" => return Ok(CatalogEntry::SixDimWedge),
            _ => {}
        }
        if let Some(m) = arg("truncated_poly") {
            return Ok(CatalogEntry::TruncatedPoly { m: m? });
        }
        if let Some(r) = arg("cyclic") {
            return Ok(CatalogEntry::Cyclic { r: r? as u32 });
        }
        if let Some(n) = arg("zero") {
            return Ok(CatalogEntry::Zero { n: n? });
        }
        Err(Error::UnknownName(s.to_string()))
    }
}

/// Builds a named algebra over `𝔽_p` (or `ℤ/p³`). Supported primes are 2, 3, 5, 7.
pub fn catalog(entry: CatalogEntry, p: u32) -> Result<NilpotentAlgebra> {
    if ![2, 3, 5, 7].contains(&p) {
        return Err(Error::UnsupportedParameter(format!("p = {p} (expected 2, 3, 5 or 7)")));
    }
    let unit = |n: usize, k: usize| {
        let mut v = vec![0u32; n];
        v[k] = 1;
        v
    };
    match entry {
        CatalogEntry::DeGraafA340 => NilpotentAlgebra::new(p, 3, [((2, 1), unit(3, 0))]),
        CatalogEntry::SixDimWedge => NilpotentAlgebra::new(
            p,
            6,
            [((0, 1), unit(6, 3)), ((1, 2), unit(6, 4)), ((2, 0), unit(6, 5))],
        ),
        CatalogEntry::TruncatedPoly { m } => {
            if m == 0 {
                return Err(Error::UnsupportedParameter("truncated_poly needs m ≥ 1".into()));
            }
            // basis index i stands for x^{i+1}
            let products = (0..m)
                .flat_map(|i| (0..m).map(move |j| (i, j)))
                .filter(|&(i, j)| i + j + 1 < m)
                .map(|(i, j)| ((i, j), unit(m, i + j + 1)));
            NilpotentAlgebra::new(p, m, products)
        }
        CatalogEntry::Cyclic { r } => NilpotentAlgebra::cyclic(p, r),
        CatalogEntry::Zero { n } => {
            if n == 0 {
                return Err(Error::UnsupportedParameter("zero algebra needs n ≥ 1".into()));
            }
            NilpotentAlgebra::new(p, n, [])
        }
    }
}
