mod common;

use bracelab::enumerate::{brace_from_table, regular_subgroups_of_holomorph};
use bracelab::{
    automorphism_group, catalog, templates, Additive, CatalogEntry, Error, FiniteGroup, SearchBudget, SkewBrace,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn budget() -> SearchBudget {
    SearchBudget::default()
}

/// Braces from holomorph enumeration on every group of order ≤ 6, plus a few named ones.
fn suite() -> Vec<SkewBrace> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for g in templates::groups_of_order(n).unwrap() {
            for t in regular_subgroups_of_holomorph(&g, 12, budget()).unwrap() {
                out.push(brace_from_table(&g, &t));
            }
        }
    }
    out.push(SkewBrace::opposite(&templates::quaternion()));
    out.push(SkewBrace::trivial(&templates::heisenberg(3)));
    out.push(catalog(CatalogEntry::DeGraafA340, 3).unwrap().to_brace().unwrap());
    out.push(catalog(CatalogEntry::Cyclic { r: 1 }, 3).unwrap().to_brace().unwrap());
    out.push(bracelab::factorization::s4_factorization().0.circle_brace());
    out
}

fn agree(b: &SkewBrace) {
    for add in [Additive::Star, Additive::Circ] {
        let direct = b.validate_direct(add).is_ok();
        assert_eq!(direct, b.validate_via_holomorph(add).is_ok());
        let (s, c) = match add {
            Additive::Star => (b.star().rows(), b.circ().rows()),
            Additive::Circ => (b.circ().rows(), b.star().rows()),
        };
        if s.len() <= 27 {
            assert_eq!(direct, common::naive_is_brace(&s, &c));
        }
    }
}

#[test]
fn validators_agree_on_suite() {
    for b in suite() {
        agree(&b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1200))]
    #[test]
    fn validators_agree_on_random_pairs(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let star = common::random_group(&mut rng, n);
        let circ = common::random_group(&mut rng, n);
        let b = SkewBrace::from_groups(star, circ).unwrap();
        agree(&b);
    }
}

#[test]
fn counterexample_is_lexicographically_first() {
    let b = bracelab::factorization::s4_factorization().0.circle_brace();
    let w = b.validate_direct(Additive::Circ).unwrap_err();
    let (s, c) = (b.circ().rows(), b.star().rows());
    let inv = |a: usize| (0..24).find(|&x| s[a][x] == 0).unwrap();
    let fails = |a: usize, x: usize, y: usize| c[a][s[x][y]] != s[s[c[a][x]][inv(a)]][c[a][y]];
    assert!(fails(w.a, w.b, w.c));
    for a in 0..24 {
        for x in 0..24 {
            for y in 0..24 {
                if (a, x, y) < (w.a, w.b, w.c) {
                    assert!(!fails(a, x, y));
                }
            }
        }
    }
}

#[test]
fn l_maps_form_a_homomorphism() {
    for b in suite().into_iter().filter(SkewBrace::is_valid) {
        let l = b.l_maps();
        for p in &l {
            assert!(b.star().is_automorphism(p));
        }
        for x in 0..b.order() {
            for y in 0..b.order() {
                assert_eq!(l[b.circ().mul(x, y)], l[x].compose(&l[y]));
            }
        }
    }
}

#[test]
fn biskew_is_symmetric() {
    for b in suite() {
        assert_eq!(b.is_biskew(), b.swapped().is_biskew());
    }
}

#[test]
fn brace_automorphisms_divide_both() {
    for b in suite().into_iter().filter(|b| b.is_valid() && b.order() <= 27) {
        let sb = b.automorphism_group(budget()).unwrap().order();
        let s = automorphism_group(b.star(), budget()).unwrap().order();
        let c = automorphism_group(b.circ(), budget()).unwrap().order();
        assert_eq!(s % sb, 0);
        assert_eq!(c % sb, 0);
    }
}

#[test]
fn trivial_and_opposite() {
    let s3 = templates::symmetric(3).0;
    let op = SkewBrace::opposite(&s3);
    assert!(op.is_valid() && op.is_biskew());
    assert_ne!(op.star(), op.circ());
    assert_eq!(op.automorphism_group(budget()).unwrap().order(), 6);
    assert_eq!(op.square_agreement_set().len(), 6);
    assert_eq!(op.is_two_sided(), Err(Error::AdditiveNotAbelian));

    let c6 = templates::cyclic(6);
    let op6 = SkewBrace::opposite(&c6);
    assert_eq!(op6.star(), op6.circ());

    let h = templates::heisenberg(3);
    let t = SkewBrace::trivial(&h);
    assert!(t.is_valid() && t.is_biskew());
    assert_eq!(t.automorphism_group(budget()).unwrap().order(), 432);
    assert!(t.exponent_compare().all_equal);
    assert_eq!(t.square_agreement_set().len(), 27);

    let c2 = templates::elementary_abelian(2, 3);
    assert_eq!(SkewBrace::trivial(&c2).is_two_sided(), Ok(true));
}

#[test]
fn radical_braces_are_two_sided() {
    for (e, p) in [
        (CatalogEntry::DeGraafA340, 3),
        (CatalogEntry::TruncatedPoly { m: 3 }, 2),
        (CatalogEntry::TruncatedPoly { m: 2 }, 5),
        (CatalogEntry::Cyclic { r: 1 }, 3),
        (CatalogEntry::Cyclic { r: 2 }, 3),
        (CatalogEntry::Zero { n: 2 }, 3),
    ] {
        let b = catalog(e, p).unwrap().to_brace().unwrap();
        assert!(b.is_valid());
        assert_eq!(b.is_two_sided(), Ok(true), "{e}");
    }
}

#[test]
fn table_errors() {
    let c3 = templates::cyclic(3).rows();
    let c2 = templates::cyclic(2).rows();
    assert_eq!(SkewBrace::from_tables(&c3, &c2), Err(Error::SizeMismatch(3, 2)));
    // identities at different positions
    let shifted = vec![vec![1, 0], vec![0, 1]];
    assert!(matches!(SkewBrace::from_tables(&c2, &shifted), Err(Error::IdentityMismatch(0, 1))));
    assert!(FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]]).is_err());
}

#[test]
fn non_braces_are_representable() {
    let s = bracelab::factorization::s4_factorization().0.circle_brace().swapped();
    assert!(!s.is_valid());
    assert!(s.status().is_err());
}
