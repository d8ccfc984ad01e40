use monodisk::families::{
    build_c, build_ctilde, build_d, build_d31, default_ctilde_groove, edge_word_of, s_curve_side, tile_disk_radial,
    validate_tiling, validate_tiling_with, Chirality, CtildeVariant, Edge, EdgeWord, Orientation, Tiling,
    ValidationOptions,
};
use monodisk::geometry::{congruent, Path, PathSegment, Point};
use proptest::prelude::*;

fn quick(t: &Tiling) -> monodisk::families::TilingReport {
    validate_tiling_with(t, ValidationOptions { samples: 2_000, seed: 42 })
}

fn flips(n: u32, k: u32, u: u32) -> EdgeWord {
    let mut edges = vec![Edge::Long; u as usize];
    edges.extend(vec![Edge::Short; ((2 * n - u) * k) as usize]);
    EdgeWord::new(edges)
}

fn assert_sound(label: &str, t: &Tiling, tiles: usize) {
    let r = quick(t);
    assert!(r.valid && r.monohedral, "{label}: {:?}", r.failures);
    assert_eq!(r.tile_count, tiles, "{label}");
}

#[test]
fn radial_tilings_have_n_tiles() {
    let straight = Path::from_segments(Point::ORIGIN, vec![PathSegment::line(Point::ORIGIN, Point::new(1.0, 0.0))]);
    for n in 2..=8 {
        assert_sound(&format!("symradial {n}"), &tile_disk_radial(&straight, n).unwrap(), n as usize);
    }
    for n in 5..=8 {
        assert_sound(&format!("radgen {n}"), &tile_disk_radial(&s_curve_side(), n).unwrap(), n as usize);
    }
}

#[test]
fn d_tilings_have_4n_tiles() {
    for n in [3u32, 5, 7] {
        for t in [0.0, 0.3, 0.8] {
            for ch in [Chirality::A, Chirality::B] {
                assert_sound(&format!("D {n} {t}"), &build_d(n, t, ch).unwrap(), 4 * n as usize);
            }
        }
    }
    assert_sound("D31", &build_d31(Chirality::B).unwrap(), 12);
}

#[test]
fn subdivided_tilings_have_2nk_tiles() {
    for n in [3u32, 5] {
        for k in [1u32, 2, 3] {
            let groove = default_ctilde_groove(n, 0.3).unwrap();
            for v in CtildeVariant::ALL {
                assert_sound(&format!("Ctilde {n} {k} {v:?}"), &build_ctilde(n, k, &groove, v).unwrap(), (2 * n * k) as usize);
            }
        }
    }
}

#[test]
fn each_flip_frees_k_minus_one_tiles_from_the_center() {
    for n in [3u32, 5] {
        for k in [1u32, 2, 3] {
            for u in 0..=2 * n {
                let t = build_c(n, k, 0.3, &flips(n, k, u), Chirality::A).unwrap();
                let r = quick(&t);
                assert!(r.valid && r.monohedral, "n={n} k={k} u={u}: {:?}", r.failures);
                assert_eq!(r.tile_count, (2 * n * k) as usize);
                assert_eq!(r.center_touch_count, (2 * n * k - u * (k - 1)) as usize, "n={n} k={k} u={u}");
            }
        }
    }
}

#[test]
fn d_boundary_touch_is_2n_for_n_at_least_5() {
    for n in [5u32, 7] {
        for t in [0.0, 0.3, 0.8] {
            assert_eq!(quick(&build_d(n, t, Chirality::A).unwrap()).boundary_touch_count, 2 * n as usize);
        }
    }
}

#[test]
fn d_tiles_fall_into_two_mirror_classes() {
    for n in [3u32, 5] {
        let t = build_d(n, 0.3, Chirality::A).unwrap();
        let (pos, neg): (Vec<_>, Vec<_>) = t.tiles.iter().partition(|x| x.orientation == Orientation::Positive);
        assert_eq!((pos.len(), neg.len()), (2 * n as usize, 2 * n as usize));
        for a in &t.tiles {
            for b in &t.tiles {
                let g = congruent(&a.contour, &b.contour).expect("congruent");
                assert_eq!(g.preserves_orientation(), a.orientation == b.orientation, "tiles {} {}", a.id, b.id);
            }
        }
    }
}

#[test]
fn mirror_images_stay_valid() {
    let groove = default_ctilde_groove(5, 0.3).unwrap();
    let samples = [
        build_d(5, 0.3, Chirality::A).unwrap(),
        build_d31(Chirality::A).unwrap(),
        build_c(3, 2, 0.3, &"LSSSLSSSSS".parse().unwrap(), Chirality::A).unwrap(),
        build_ctilde(5, 2, &groove, CtildeVariant::ALL[2]).unwrap(),
        tile_disk_radial(&s_curve_side(), 6).unwrap(),
    ];
    for t in samples {
        let r = validate_tiling(&t.mirrored());
        assert!(r.valid && r.monohedral, "{:?}: {:?}", t.tag, r.failures);
    }
}

fn random_word() -> impl Strategy<Value = (u32, u32, f64, EdgeWord)> {
    (prop::sample::select(vec![3u32, 5]), 1u32..4, prop::sample::select(vec![0.0, 0.3])).prop_flat_map(|(n, k, t)| {
        (0..=2 * n).prop_flat_map(move |u| {
            Just(flips(n, k, u).edges().to_vec())
                .prop_shuffle()
                .prop_map(move |edges| (n, k, t, EdgeWord::new(edges)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn edge_word_round_trips((n, k, t, word) in random_word()) {
        let tiling = build_c(n, k, t, &word, Chirality::A).unwrap();
        let read = edge_word_of(&tiling).unwrap();
        if k == 1 {
            // With k = 1 every wedge reads as one edge; flips only change tags.
            prop_assert_eq!(read.len(), word.len());
        }
        prop_assert!(read.cyclically_equal(&word), "{} read as {}", word, read);
        let mirrored = edge_word_of(&tiling.mirrored()).unwrap();
        prop_assert!(mirrored.cyclically_equal(&word.reversed()));
    }
}
