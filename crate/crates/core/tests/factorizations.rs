use bracelab::factorization::{demo_s4, s4_factorization};
use bracelab::{are_isomorphic, automorphism_group, holomorph, templates, Error, ExactFactorization, FiniteGroup, Perm, SearchBudget, Side};

fn budget() -> SearchBudget {
    SearchBudget::default()
}

/// `H ⋊ J` with `G_L = H × {e}` and `G_R = {e} × J`.
fn semidirect(h: &FiniteGroup, j: &FiniteGroup, action: &[Perm]) -> ExactFactorization {
    let g = FiniteGroup::semidirect_product(h, j, action).unwrap();
    let m = j.order();
    let left: Vec<usize> = (0..h.order()).map(|x| x * m).collect();
    let right: Vec<usize> = (0..m).collect();
    ExactFactorization::new(g, &left, &right).unwrap()
}

fn units_action(p: usize, generator: usize) -> (FiniteGroup, Vec<Perm>) {
    // C_{p-1} acting on C_p through powers of a primitive root
    let j = templates::cyclic(p - 1);
    let action = (0..p - 1)
        .map(|k| {
            let u = (0..k).fold(1, |acc, _| acc * generator % p);
            Perm::from_images((0..p).map(|x| x * u % p).collect()).unwrap()
        })
        .collect();
    (j, action)
}

fn semidirect_suite() -> Vec<(&'static str, ExactFactorization)> {
    let c3 = templates::cyclic(3);
    let inv3 = Perm::from_images(vec![0, 2, 1]).unwrap();
    let (c4, act5) = units_action(5, 2);
    let heis = templates::heisenberg(3);
    // (a, b, c) ↦ (-a, -b, c)
    let flip = Perm::from_images(
        (0..27)
            .map(|x| {
                let (a, b, c) = (x % 3, x / 3 % 3, x / 9);
                (3 - a) % 3 + 3 * ((3 - b) % 3) + 9 * c
            })
            .collect(),
    )
    .unwrap();
    let s3 = templates::symmetric(3).0;
    let aut = automorphism_group(&s3, budget()).unwrap();
    vec![
        ("C3 x| C2", semidirect(&c3, &templates::cyclic(2), &[Perm::identity(3), inv3])),
        ("C5 x| C4", semidirect(&templates::cyclic(5), &c4, &act5)),
        ("Heis3 x| C2", semidirect(&heis, &templates::cyclic(2), &[Perm::identity(27), flip])),
        ("S3 x| Aut(S3)", semidirect(&s3, &aut.to_group(), aut.elements())),
    ]
}

#[test]
fn semidirect_factorizations_give_biskew_braces() {
    for (name, f) in semidirect_suite() {
        assert!(f.is_semidirect(), "{name}");
        let b = f.circle_brace();
        assert!(b.is_valid(), "{name}");
        assert!(b.is_biskew(), "{name}");
        let lr = f.factor_product();
        assert!(are_isomorphic(b.circ(), &lr, budget()).unwrap().is_some(), "{name}");
        if name == "C3 x| C2" || name == "C5 x| C4" {
            assert!(b.circ().is_abelian(), "{name}");
        }
        if name == "S3 x| Aut(S3)" {
            assert_eq!(b.order(), 36);
            assert!(!b.star().is_abelian() && !b.circ().is_abelian());
        }
    }
}

#[test]
fn byott_embedding_invariants() {
    let mut all = semidirect_suite();
    all.push(("S4", s4_factorization().0));
    for (name, f) in all {
        let g = f.group();
        for x in 0..g.order() {
            let (l, r) = f.decompose(x);
            assert_eq!(g.mul(l, r), x, "{name}");
            assert!(f.left().contains(&l) && f.right().contains(&r));
        }
        let emb = f.byott_embedding();
        assert!(emb.is_injective(), "{name}");
        assert!(emb.is_homomorphism(), "{name}");
        let image = emb.image();
        assert!(image.is_regular(), "{name}");
        if g.order() <= 24 {
            let hol = holomorph(g, budget()).unwrap();
            assert!(image.elements().iter().all(|p| hol.contains(p)), "{name}");
        }
        assert!(emb.image_matches_domain(budget()).unwrap(), "{name}");
        // carrier element of (g_L, g_R) is g_L g_R⁻¹
        let m = f.right().len();
        for (k, p) in emb.images().iter().enumerate() {
            let (gl, gr) = (f.left()[k / m], f.right()[k % m]);
            assert_eq!(p.apply(0), g.mul(gl, g.inv(gr)));
        }
    }
}

#[test]
fn s3_embedding_is_cyclic() {
    let (s3, perms) = templates::symmetric(3);
    let at = |s: &str| perms.iter().position(|p| *p == Perm::parse_cycles(s, 3).unwrap()).unwrap();
    let f = ExactFactorization::new(s3.clone(), &s3.subgroup_generated(&[at("(123)")]), &s3.subgroup_generated(&[at("(12)")])).unwrap();
    let img = f.byott_embedding().image().to_group();
    assert!(are_isomorphic(&img, &templates::cyclic(6), budget()).unwrap().is_some());
    assert!(are_isomorphic(f.circle_brace().circ(), &templates::cyclic(6), budget()).unwrap().is_some());
}

#[test]
fn s4_is_not_semidirect() {
    let (f, _) = s4_factorization();
    assert_eq!((f.left().len(), f.right().len()), (6, 4));
    assert!(!f.is_semidirect());
    let b = f.circle_brace();
    assert!(b.is_valid());
    assert!(!b.is_biskew());
    let s3c4 = templates::symmetric(3).0.direct_product(&templates::cyclic(4));
    assert!(are_isomorphic(b.circ(), &s3c4, budget()).unwrap().is_some());
    assert!(are_isomorphic(&f.byott_embedding().image().to_group(), &s3c4, budget()).unwrap().is_some());
}

#[test]
fn s4_report_values() {
    let r = demo_s4();
    assert_eq!((r.x.as_str(), r.y.as_str(), r.z.as_str()), ("(1234)", "(12)", "(13)(24)"));
    assert_eq!(r.lhs, "(132)");
    assert!(r.star_additive_valid);
    assert!(!r.circ_additive_valid);
    assert!(r.first_failure.is_some());
}

#[test]
fn trivial_factorization_is_trivial_brace() {
    let g = templates::quaternion();
    let f = ExactFactorization::new(g.clone(), &(0..8).collect::<Vec<_>>(), &[0]).unwrap();
    assert_eq!(f.circle_brace(), bracelab::SkewBrace::trivial(&g));
    assert_eq!(f.byott_embedding().images(), &g.left_regular()[..]);
}

#[test]
fn invalid_factorizations() {
    let c4 = templates::cyclic(4);
    assert_eq!(ExactFactorization::new(c4.clone(), &[0, 2], &[0, 2]), Err(Error::IntersectionNontrivial));
    assert_eq!(ExactFactorization::new(c4.clone(), &[0], &[0, 3]), Err(Error::NotSubgroup(Side::Right)));
    assert_eq!(
        ExactFactorization::new(c4, &[0], &[0, 2]),
        Err(Error::OrderMismatch { left: 1, right: 2, order: 4 })
    );
}
