use pbosc::closure::{closure, closure_with, ladder_seed, structure_constants, CLOSURE_TOL};
use pbosc::gellmann::standard_gellmann;
use pbosc::mass::{full_spectrum, lepton_mass, SpectrumInputs};
use pbosc::operators::{derived_generators, verify_commutator_table, Cutoff};
use pbosc::susy::{build_jc_realization, nprime_eigenvalue, safe_doublet_spectrum, SusyConfig};
use pbosc::{Exec, C64};
use proptest::prelude::*;

fn factorial(n: u64) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

#[test]
fn su3_structure_constants_match_tabulated_values() {
    let g = standard_gellmann(3).unwrap();
    let h = 3f64.sqrt() / 2.0;
    // nonzero f_ijk for i<j<k, one-based
    let table = [
        ((1, 2, 3), 1.0),
        ((1, 4, 7), 0.5),
        ((1, 5, 6), -0.5),
        ((2, 4, 6), 0.5),
        ((2, 5, 7), 0.5),
        ((3, 4, 5), 0.5),
        ((3, 6, 7), -0.5),
        ((4, 5, 8), h),
        ((6, 7, 8), h),
    ];
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let mut idx = [i + 1, j + 1, k + 1];
                let mut sign = 1.0;
                // sort with parity tracking
                for a in 0..3 {
                    for b in 0..2 - a {
                        if idx[b] > idx[b + 1] {
                            idx.swap(b, b + 1);
                            sign = -sign;
                        }
                    }
                }
                let want = table
                    .iter()
                    .find(|(t, _)| *t == (idx[0], idx[1], idx[2]))
                    .map_or(0.0, |(_, v)| sign * v);
                let got = g.structure_constant(i, j, k);
                assert!((got - want).abs() < 1e-14, "f[{i}{j}{k}] = {got}, want {want}");
            }
        }
    }
}

#[test]
fn doublet_coefficients_match_factorials() {
    for k in 1..=4u64 {
        for m in 0..=20u64 {
            let want = factorial(m + k) / (factorial(m) * factorial(k));
            assert_eq!(nprime_eigenvalue(m, k).unwrap() as f64, want.round());
        }
    }
}

#[test]
fn doublet_spectrum_is_plus_minus_root_c() {
    let alg = build_jc_realization(SusyConfig::new(2, 12).unwrap());
    let g = C64::new(0.6, 0.8);
    let eps = safe_doublet_spectrum(&alg, g).unwrap();
    let mut want: Vec<f64> = (0..alg.safe_dim() as u64)
        .flat_map(|m| {
            let r = (nprime_eigenvalue(m, 2).unwrap() as f64).sqrt() * g.norm();
            [-r, r]
        })
        .collect();
    want.sort_by(f64::total_cmp);
    assert_eq!(eps.len(), want.len());
    for (a, b) in eps.iter().zip(&want) {
        assert!((a - b).abs() < 1e-10, "{a} vs {b}");
    }
}

#[test]
fn closure_is_idempotent_and_mode_independent() {
    for s in 1..=4 {
        let seed = ladder_seed(Cutoff::new(s).unwrap());
        let seq = closure_with(&seed, CLOSURE_TOL, Exec::Sequential).unwrap();
        let par = closure_with(&seed, CLOSURE_TOL, Exec::Parallel).unwrap();
        assert_eq!(seq, par);
        let again = closure(&seq.basis, CLOSURE_TOL).unwrap();
        assert_eq!(again.algebra_dim(), seq.algebra_dim());
        assert_eq!(again.rounds, 1);
    }
}

#[test]
fn structure_constants_reconstruct_brackets() {
    let b = closure(&ladder_seed(Cutoff::new(3).unwrap()), CLOSURE_TOL).unwrap();
    let sc = structure_constants(&b);
    let d = b.algebra_dim();
    let dense = sc.dense();
    for i in 0..d {
        for j in 0..d {
            let br = pbosc::matrix::commutator(&b.basis[i], &b.basis[j]).unwrap();
            let mut rebuilt = pbosc::ComplexMatrix::zeros(b.dim_space);
            for k in 0..d {
                rebuilt = &rebuilt + &b.basis[k].scale(dense[(i * d + j) * d + k]);
            }
            assert!((&br - &rebuilt).max_abs() < 1e-12);
        }
    }
}

#[test]
fn generators_are_traceless() {
    for s in 1..=8 {
        let g = derived_generators(Cutoff::new(s).unwrap());
        for (name, m) in g.named() {
            assert!(pbosc::matrix::trace(m).norm() < 1e-12, "{name} at s={s}");
        }
    }
}

proptest! {
    #[test]
    fn mass_is_linear_in_electron_mass(c in 0.01..100.0f64, alpha_inv in 50.0..200.0f64) {
        let base = SpectrumInputs::new(alpha_inv, 0.511).unwrap();
        let scaled = SpectrumInputs::new(alpha_inv, 0.511 * c).unwrap();
        for n in 0..=3 {
            let a = lepton_mass(n, &base).unwrap() * c;
            let b = lepton_mass(n, &scaled).unwrap();
            prop_assert!((a - b).abs() <= 1e-12 * b.abs());
        }
        let t = full_spectrum(&scaled);
        prop_assert_eq!(t.mass(0), Some(0.511 * c));
    }

    #[test]
    fn mass_is_affine_in_alpha_inv(a in 50.0..200.0f64, b in 50.0..200.0f64) {
        let mid = 0.5 * (a + b);
        for n in 0..=3 {
            let f = |x: f64| lepton_mass(n, &SpectrumInputs::new(x, 0.511).unwrap()).unwrap();
            prop_assert!((f(mid) - 0.5 * (f(a) + f(b))).abs() <= 1e-9 * f(mid));
        }
    }

    #[test]
    fn commutator_table_holds_for_larger_cutoffs(s in 2usize..40) {
        let r = verify_commutator_table(Cutoff::new(s).unwrap(), 1e-11);
        prop_assert!(r.pass, "s={}: {:?}", s, r.failures().collect::<Vec<_>>());
    }
}
