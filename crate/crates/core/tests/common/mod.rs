#![allow(dead_code)]

use bracelab::{templates, Error, FiniteGroup, NilpotentAlgebra, Perm};
use rand_chacha::ChaCha8Rng;
use rand::seq::SliceRandom;
use rand::Rng;

/// `a ∘ (b ⋆ c) = (a ∘ b) ⋆ a⁻¹ ⋆ (a ∘ c)` straight from the row tables.
pub fn naive_is_brace(star: &[Vec<usize>], circ: &[Vec<usize>]) -> bool {
    let n = star.len();
    let inv = |a: usize| (0..n).find(|&x| star[a][x] == 0).unwrap();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = circ[a][star[b][c]];
                let rhs = star[star[circ[a][b]][inv(a)]][circ[a][c]];
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Bijections fixing 0 that preserve the table, by trying all of them.
pub fn brute_force_aut_count(rows: &[Vec<usize>]) -> usize {
    let n = rows.len();
    let mut rest: Vec<usize> = (1..n).collect();
    let mut count = 0;
    permute(&mut rest, 0, &mut |p| {
        let f = |x: usize| if x == 0 { 0 } else { p[x - 1] };
        if (0..n).all(|a| (0..n).all(|b| f(rows[a][b]) == rows[f(a)][f(b)])) {
            count += 1;
        }
    });
    count
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Number of invertible `k×k` matrices over `𝔽_p`, by enumerating all of them.
pub fn invertible_matrix_count(p: usize, k: usize) -> usize {
    let total = p.pow((k * k) as u32);
    (0..total)
        .filter(|&code| {
            let mut m: Vec<Vec<usize>> = (0..k)
                .map(|i| (0..k).map(|j| code / p.pow((i * k + j) as u32) % p).collect())
                .collect();
            rank_mod_p(&mut m, p) == k
        })
        .count()
}

pub fn rank_mod_p(m: &mut [Vec<usize>], p: usize) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] % p != 0) else { continue };
        m.swap(rank, piv);
        let inv = (1..p).find(|&x| m[rank][c] * x % p == 1).unwrap();
        for j in 0..cols {
            m[rank][j] = m[rank][j] * inv % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for j in 0..cols {
                    m[r][j] = (m[r][j] + p * p - f * m[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A random group of order `n` from the template list, relabeled by a random
/// bijection fixing 0.
pub fn random_group<R: Rng>(rng: &mut R, n: usize) -> FiniteGroup {
    let groups = templates::groups_of_order(n).unwrap();
    let g = groups.choose(rng).unwrap();
    let mut rest: Vec<usize> = (1..n).collect();
    rest.shuffle(rng);
    let mut images = vec![0];
    images.extend(rest);
    g.relabel(&Perm::from_images(images).unwrap())
}

pub type Consts = Vec<Vec<Vec<usize>>>;

pub fn mul(c: &Consts, p: usize, a: &[usize], b: &[usize]) -> Vec<usize> {
    let n = a.len();
    let mut out = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            let s = a[i] * b[j] % p;
            if s != 0 {
                for k in 0..n {
                    out[k] = (out[k] + s * c[i][j][k]) % p;
                }
            }
        }
    }
    out
}

pub fn unit(n: usize, i: usize) -> Vec<usize> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn cube_vanishes(c: &Consts, p: usize) -> bool {
    let n = c.len();
    (0..n).all(|i| {
        (0..n).all(|j| (0..n).all(|k| mul(c, p, &mul(c, p, &unit(n, i), &unit(n, j)), &unit(n, k)).iter().all(|&x| x == 0)))
    })
}

pub fn inverse_mod_p(m: &[Vec<usize>], p: usize) -> Option<Vec<Vec<usize>>> {
    let n = m.len();
    let mut aug: Vec<Vec<usize>> = (0..n).map(|i| m[i].iter().copied().chain(unit(n, i)).collect()).collect();
    if rank_mod_p(&mut aug, p) < n || (0..n).any(|i| aug[i][i] != 1) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Strictly triangular constants in a random basis, or `None` when the draw
/// is rejected for a singular basis change.
pub fn random_constants(rng: &mut ChaCha8Rng, p: usize, n: usize) -> Option<Consts> {
    let mut c = vec![vec![vec![0; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in (i.max(j) + 1)..n {
                c[i][j][k] = rng.gen_range(0..p);
            }
        }
    }
    let m: Vec<Vec<usize>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
    let minv = inverse_mod_p(&m, p)?;
    let mut out = vec![vec![vec![0; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let x = mul(&c, p, &m[i], &m[j]);
            for t in 0..n {
                out[i][j][t] = (0..n).map(|s| x[s] * minv[s][t]).sum::<usize>() % p;
            }
        }
    }
    Some(out)
}

pub fn build(c: &Consts, p: usize) -> Result<NilpotentAlgebra, Error> {
    let n = c.len();
    let products = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| c[i][j].iter().any(|&x| x != 0))
        .map(|(i, j)| ((i, j), c[i][j].iter().map(|&x| x as u32).collect()));
    NilpotentAlgebra::new(p as u32, n, products)
}

