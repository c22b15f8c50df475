//! Cross-checks of the production enumerators against the independent
//! implementations in `common`.

mod common;

use skewbrace::{fixtures, BraceIso};

fn member_lists(subs: &[skewbrace::Subgroup]) -> Vec<Vec<usize>> {
    subs.iter().map(|s| s.members().to_vec()).collect()
}

#[test]
fn subgroups_match_subset_enumeration_on_tiny_groups() {
    let groups = vec![
        ("z4", fixtures::cyclic_group(4).unwrap()),
        ("z6", fixtures::cyclic_group(6).unwrap()),
        ("z12", fixtures::cyclic_group(12).unwrap()),
        ("d4", fixtures::dihedral_group(4).unwrap()),
        ("d6", fixtures::dihedral_group(6).unwrap()),
        ("s3", fixtures::symmetric_group(3).unwrap()),
        ("rump8_star", fixtures::rump8().star().clone()),
        (
            "v4",
            fixtures::cyclic_group(2)
                .unwrap()
                .direct_product(&fixtures::cyclic_group(2).unwrap()),
        ),
    ];
    for (name, g) in groups {
        let fast = member_lists(&g.subgroups().unwrap());
        let brute = common::brute_force_subgroups(&g);
        assert_eq!(fast, brute, "{name}");
    }
}

#[test]
fn subgroups_match_naive_pairwise_join() {
    let groups = vec![
        ("heis3", fixtures::heisenberg(3).unwrap()),
        ("f27", fixtures::elementary_abelian(3, 3).unwrap()),
        ("s4", fixtures::symmetric_group(4).unwrap()),
        ("a35_circle", fixtures::a35(3).unwrap().circle_group()),
        ("zp_hol7_star", fixtures::zp_hol(7, None).unwrap().0.star().clone()),
    ];
    for (name, g) in groups {
        let fast = member_lists(&g.subgroups().unwrap());
        let naive = common::naive_pairwise_join_subgroups(&g);
        assert_eq!(fast, naive, "{name}");
    }
}

#[test]
fn automorphisms_match_brute_force() {
    let groups = vec![
        ("z4", fixtures::cyclic_group(4).unwrap()),
        ("z5", fixtures::cyclic_group(5).unwrap()),
        ("z6", fixtures::cyclic_group(6).unwrap()),
        ("z8", fixtures::cyclic_group(8).unwrap()),
        ("s3", fixtures::symmetric_group(3).unwrap()),
        ("d4", fixtures::dihedral_group(4).unwrap()),
        (
            "v4",
            fixtures::cyclic_group(2)
                .unwrap()
                .direct_product(&fixtures::cyclic_group(2).unwrap()),
        ),
        ("c2_cubed", fixtures::rump8().star().clone()),
    ];
    for (name, g) in groups {
        let fast: Vec<Vec<usize>> = g
            .automorphism_group()
            .unwrap()
            .elements()
            .iter()
            .map(|p| p.images().to_vec())
            .collect();
        let brute = common::brute_force_automorphisms(&g);
        assert_eq!(fast, brute, "{name}");
    }
}

#[test]
fn automorphism_counts_frozen_from_oracle() {
    // |Aut(V4)| = 6, |Aut(C2^3)| = 168, |Aut(D4)| = 8, |Aut(S3)| = 6.
    let v4 = fixtures::cyclic_group(2)
        .unwrap()
        .direct_product(&fixtures::cyclic_group(2).unwrap());
    assert_eq!(v4.automorphism_group().unwrap().order(), 6);
    assert_eq!(
        fixtures::rump8().star().automorphism_group().unwrap().order(),
        168
    );
    assert_eq!(
        fixtures::dihedral_group(4).unwrap().automorphism_group().unwrap().order(),
        8
    );
    assert_eq!(
        fixtures::symmetric_group(3).unwrap().automorphism_group().unwrap().order(),
        6
    );
}

#[test]
fn circ_stability_matches_conjugation_definition() {
    for (name, brace, _) in fixtures::braces_with_isos(32).unwrap() {
        for s in brace.star().subgroups().unwrap() {
            let by_formula = brace.is_circ_stable(&s).unwrap();
            let by_conjugation = common::circ_stable_by_conjugation(&brace, &s);
            assert_eq!(by_formula, by_conjugation, "{name} {:?}", s.members());
        }
    }
}

#[test]
fn stable_counts_match_alpha_normalizer_counts() {
    for (name, brace, iso) in fixtures::braces_with_isos(32).unwrap() {
        let stable = brace.circ_stable_subgroups().unwrap().len();
        let iso = iso.unwrap_or_else(|| BraceIso::identity(brace.clone()));
        assert_eq!(stable, common::stable_count_via_alpha(&iso), "{name}");
    }
}
