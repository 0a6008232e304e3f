use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use freeknot::bracket::{bracket_of, certify_minimal, fuzz_invariance, FuzzConfig};
use freeknot::construct::{realize, oddify, pair_and_frame, qr_diagram, random_cubic, virtual_to_free};
use freeknot::diagram::{all_diagrams_up_to, canonical_word, parse_dow, same_diagram, ChordDiagram};
use freeknot::framed::{
    chord_diagram_to_framed, component_count, framed_to_chord_diagram, isomorphic, FramedFourGraph,
};
use freeknot::moves::{apply_move, apply_move_with_inverse, find_moves, reduce_r2, reduce_r2_checked};
use freeknot::parity::{interlacement, is_irreducibly_odd, is_odd, linked_ids};

/// A random double-occurrence word with `n` chords.
fn random_word(n: usize, seed: u64) -> ChordDiagram {
    let mut ids: Vec<u32> = (0..n as u32).flat_map(|c| [c, c]).collect();
    ids.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    ChordDiagram::from_ids(&ids).unwrap()
}

fn rotate_reflect(cd: &ChordDiagram, shift: usize, flip: bool) -> ChordDiagram {
    let labels: Vec<&str> = cd.word().iter().map(|&c| cd.label(c)).collect();
    let mut t: Vec<&str> = if labels.is_empty() {
        vec![]
    } else {
        let s = shift % labels.len();
        labels[s..].iter().chain(&labels[..s]).copied().collect()
    };
    if flip {
        t.reverse();
    }
    ChordDiagram::from_labels(&t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_rotation_and_reflection(n in 0usize..7, seed: u64, shift in 0usize..14, flip: bool) {
        let d = random_word(n, seed);
        let e = rotate_reflect(&d, shift, flip);
        prop_assert_eq!(canonical_word(&d), canonical_word(&e));
        prop_assert_eq!(canonical_word(&canonical_word(&d)), canonical_word(&d));
        prop_assert!(same_diagram(&d, &e));
    }

    #[test]
    fn framed_round_trip(n in 0usize..8, seed: u64) {
        let d = random_word(n, seed);
        let g = chord_diagram_to_framed(&d);
        prop_assert_eq!(component_count(&g), 1);
        let back = framed_to_chord_diagram(&g).unwrap();
        prop_assert!(same_diagram(&back, &d));
        let parsed = FramedFourGraph::parse_fg(&g.to_fg()).unwrap();
        prop_assert_eq!(parsed.edges(), g.edges());
        prop_assert!(isomorphic(&g, &chord_diagram_to_framed(&rotate_reflect(&d, seed as usize, seed % 2 == 0))));
    }

    #[test]
    fn moves_have_inverses(n in 0usize..5, seed: u64, pick: usize) {
        let d = random_word(n, seed);
        let sites = find_moves(&d);
        let site = &sites[pick % sites.len()];
        let (after, inverse) = apply_move_with_inverse(&d, site).unwrap();
        prop_assert_eq!(canonical_word(&apply_move(&after, &inverse).unwrap()), canonical_word(&d));
    }

    #[test]
    fn bracket_survives_random_moves(n in 0usize..6, seed: u64, moves in 1usize..40) {
        let d = random_word(n, seed);
        let r = fuzz_invariance(&d, &FuzzConfig::new(&d, moves, seed)).unwrap();
        prop_assert!(r.passed(), "{:?}", r.mismatch);
    }

    #[test]
    fn r2_reduction_is_confluent(n in 0usize..7, seed: u64) {
        let d = random_word(n, seed);
        let r = reduce_r2_checked(&d).unwrap();
        prop_assert_eq!(&r, &reduce_r2(&d));
        prop_assert_eq!(r.chord_count() % 2, d.chord_count() % 2);
    }

    #[test]
    fn bracket_summands_are_r2_minimal(n in 0usize..7, seed: u64) {
        let d = random_word(n, seed);
        for c in &bracket_of(&d).unwrap().classes {
            prop_assert_eq!(&reduce_r2(c), c);
        }
    }

    #[test]
    fn oddify_links_small_chords_to_their_host_only(n in 1usize..8, seed: u64) {
        let d = random_word(n, seed);
        if let Ok(out) = oddify(&d) {
            prop_assert!(is_irreducibly_odd(&out.gamma));
            prop_assert!(out.gamma.chord_count() <= 3 * n);
            let ig = interlacement(&out.gamma);
            for (host, small) in &out.small_chords {
                let h = out.gamma.chord(host).unwrap();
                for s in small {
                    let s = out.gamma.chord(s).unwrap();
                    prop_assert_eq!(ig.degree(s), 1);
                    prop_assert!(linked_ids(&out.gamma, h, s));
                }
            }
            let smoothed = out.smooth_small().unwrap();
            prop_assert!(isomorphic(&smoothed, &chord_diagram_to_framed(&d)));
        }
    }

    #[test]
    fn pair_and_frame_is_one_component(half in 2usize..7, seed: u64) {
        let l = random_cubic(2 * half, seed).unwrap();
        let gp = pair_and_frame(&l, seed).unwrap();
        prop_assert_eq!(gp.chord_count(), 2 * half);
        prop_assert_eq!(component_count(&chord_diagram_to_framed(&gp)), 1);
        prop_assert_eq!(&gp, &pair_and_frame(&l, seed).unwrap());
    }

    #[test]
    fn gauss_import_forgets_decorations(n in 0usize..7, seed: u64) {
        let d = random_word(n, seed);
        let mut first = vec![true; n];
        let code: Vec<String> = d.word().iter().enumerate().map(|(i, &c)| {
            let layer = if std::mem::replace(&mut first[c as usize], false) == (seed >> (c % 64) & 1 == 0) { "O" } else { "U" };
            let sign = if (seed >> ((i + 7) % 64)) & 1 == 0 { "+" } else { "-" };
            format!("{layer}{}{sign}", d.label(c))
        }).collect();
        prop_assert_eq!(virtual_to_free(&code.join(" ")).unwrap(), d);
    }
}

#[test]
fn qr_family_counts() {
    for p in (7u64..=97).filter(|&p| freeknot::construct::is_prime(p)) {
        assert_eq!(qr_diagram(p).unwrap().chord_count() as u64, (p - 3) / 2, "p = {p}");
    }
    assert_eq!(canonical_word(&qr_diagram(7).unwrap()).to_string(), "1 2 1 2");
}

#[test]
fn all_even_diagrams_collapse() {
    for d in all_diagrams_up_to(5) {
        let par = freeknot::parity::parities(&d);
        if par.iter().all(|p| *p == freeknot::Parity::Even) {
            let b = bracket_of(&d).unwrap();
            assert!(b.is_circle(), "{d}");
            assert_eq!(b.summands % 2, 1, "{d}");
        }
    }
}

#[test]
fn irreducibly_odd_diagrams_are_fixed_points() {
    let found: Vec<_> = all_diagrams_up_to(6).into_iter().filter(is_irreducibly_odd).collect();
    assert!(found.iter().any(|d| !d.is_empty()));
    for d in found {
        assert!(is_odd(&d));
        assert!(bracket_of(&d).unwrap().is_singleton_of(&d));
        assert!(certify_minimal(&d).unwrap().reverify());
    }
}

#[test]
fn realize_on_random_cubics() {
    for seed in 0..10 {
        let n = 4 + 2 * (seed as usize % 5);
        let l = random_cubic(n, seed).unwrap();
        let out = realize(&l, seed).unwrap();
        assert!(is_irreducibly_odd(&out.gamma));
        assert!(out.gamma.chord_count() <= 3 * n);
    }
}

#[test]
fn parse_rejects_bad_words() {
    assert!(parse_dow("A B A").is_err());
    assert!(parse_dow("A A A A").is_err());
    assert_eq!(parse_dow("").unwrap(), ChordDiagram::empty());
}
