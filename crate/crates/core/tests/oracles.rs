mod common;

use proptest::prelude::*;
use symhodge::symprod::{sym_epoly, sym_mhp_cheah, sym_mhp_det, sym_mhp_partition, sym_poincare};
use symhodge::{ExteriorPresentation, GeneratorFamily, Preset, Specialization};

use common::*;

fn presentation(families: &[(u32, u32, u32, u32)]) -> ExteriorPresentation {
    ExteriorPresentation::new(
        None,
        families.iter().map(|&(d, p, q, r)| GeneratorFamily { d, p, q, r }),
    )
    .unwrap()
}

#[test]
fn invariant_subspace_oracle_small_presentations() {
    let cases = [
        Preset::Gl { m: 2 }.presentation().unwrap(),
        Preset::Lie { gens: vec![(3, 1), (5, 1)] }.presentation().unwrap(),
        Preset::Lag { r: vec![2, 1] }.presentation().unwrap(),
        presentation(&[(1, 1, 0, 1), (3, 0, 2, 1), (5, 2, 1, 1)]),
    ];
    for pres in cases {
        for n in 1..=3 {
            assert_eq!(
                sym_mhp_det(&pres, n).unwrap().poly,
                invariant_subspace_dims(&pres, n),
                "{pres:?} n = {n}"
            );
        }
    }
}

#[test]
fn naive_sum_for_weightless_and_mixed_presentations() {
    let cases = [
        Preset::Lie { gens: vec![(3, 2), (1, 1)] }.presentation().unwrap(),
        presentation(&[(1, 1, 0, 1), (3, 0, 2, 2)]),
    ];
    for pres in cases {
        for n in 0..=4 {
            assert_eq!(sym_mhp_det(&pres, n).unwrap().poly, naive_sym_mhp(&pres, n));
        }
    }
}

fn arb_presentation() -> impl Strategy<Value = ExteriorPresentation> {
    prop::collection::vec((0u32..3, 0u32..3, 0u32..3, 1u32..3), 0..4).prop_map(|fams| {
        presentation(&fams.iter().map(|&(h, p, q, r)| (2 * h + 1, p, q, r)).collect::<Vec<_>>())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn three_paths_agree(pres in arb_presentation(), n in 0usize..=4) {
        let det = sym_mhp_det(&pres, n).unwrap().poly;
        prop_assert_eq!(&det, &sym_mhp_partition(&pres, n).unwrap().poly);
        prop_assert_eq!(&det, &sym_mhp_cheah(&pres, n).unwrap().poly);
        prop_assert!(det.is_nonnegative());
        prop_assert_eq!(sym_poincare(&pres, n).unwrap(), det.specialize(Specialization::POINCARE));
        prop_assert_eq!(sym_epoly(&pres, n).unwrap(), det.specialize(Specialization::E_POLY));
    }

    #[test]
    fn presentation_json_round_trip(pres in arb_presentation()) {
        let back = ExteriorPresentation::from_json(&pres.to_json()).unwrap();
        prop_assert_eq!(back, pres);
    }
}

#[test]
fn three_paths_agree_for_all_presets_up_to_six() {
    let presets = [
        Preset::Lag { r: vec![1, 2] },
        Preset::Lie { gens: vec![(3, 1), (7, 1)] },
        Preset::Torus { d: 3 },
    ];
    for p in presets {
        let pres = p.presentation().unwrap();
        for n in 0..=6 {
            let det = sym_mhp_det(&pres, n).unwrap().poly;
            assert_eq!(det, sym_mhp_partition(&pres, n).unwrap().poly, "{p:?} n = {n}");
            assert_eq!(det, sym_mhp_cheah(&pres, n).unwrap().poly, "{p:?} n = {n}");
        }
    }
}
