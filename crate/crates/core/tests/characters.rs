use std::collections::BTreeMap;

use limitchain::characters::{
    character, dimension, ssyt_character, stable_tensor_multiplicity, tensor_decompose, weight_multiplicities,
    littlewood_richardson,
};
use limitchain::kernel::chain_rng;
use limitchain::{Family, FamilyRank, Partition};
use num_rational::Rational64;
use rand_core::Rng;

fn fr(f: Family, r: usize) -> FamilyRank {
    FamilyRank::new(f, r).unwrap()
}

fn shapes(max: u32) -> Vec<Partition> {
    (0..=max).flat_map(Partition::all_of_size).collect()
}

#[test]
fn freudenthal_equals_tableaux() {
    for lam in shapes(6) {
        for r in lam.len().max(1)..=4 {
            let f = weight_multiplicities(&lam, fr(Family::A, r)).unwrap();
            assert_eq!(f.entries, ssyt_character(&lam, r).unwrap().entries, "{lam} gl{r}");
        }
    }
}

#[test]
fn weyl_dimension_formula() {
    for f in Family::ALL {
        for r in f.min_rank()..=4 {
            let fr = fr(f, r);
            let rho = fr.rho();
            for lam in shapes(4).into_iter().filter(|l| l.len() <= r) {
                let shifted = &limitchain::WeightVec::from_ints(&lam.padded(r).unwrap()) + &rho;
                let expected = fr
                    .positive_roots()
                    .iter()
                    .fold(Rational64::from_integer(1), |acc, a| acc * shifted.dot(a) / rho.dot(a));
                assert!(expected.is_integer());
                assert_eq!(dimension(&lam, fr).unwrap() as i64, expected.to_integer(), "{fr} {lam}");
            }
        }
    }
}

#[test]
fn tensor_dimensions_add_up() {
    for f in Family::ALL {
        for r in f.min_rank()..=4 {
            let fr = fr(f, r);
            let fits: Vec<Partition> = shapes(4).into_iter().filter(|l| l.len() <= r).collect();
            for lam in &fits {
                for delta in fits.iter().filter(|d| !d.is_empty() && d.size() <= 2) {
                    let dec = tensor_decompose(lam, delta, fr).unwrap();
                    let total: u128 = dec
                        .iter()
                        .map(|(mu, m)| u128::from(m) * character(mu, fr).unwrap().dimension())
                        .sum();
                    let want = dimension(lam, fr).unwrap() * dimension(delta, fr).unwrap();
                    assert_eq!(total, want, "{fr}: {lam} ⊗ {delta}");
                    for (mu, _) in dec.iter() {
                        assert!(mu.size() <= lam.size() + delta.size());
                        if f == Family::A {
                            assert_eq!(mu.size(), lam.size() + delta.size());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn so4_mirrored_component_is_recorded() {
    let dec = tensor_decompose(&"1".parse().unwrap(), &"1".parse().unwrap(), fr(Family::D, 2)).unwrap();
    assert_eq!(dec.get(&"1,-1".parse().unwrap()), 1);
    assert_eq!(dec.discarded_nonpartition_mass(), 1);
}

#[test]
fn stable_multiplicities_are_littlewood_richardson() {
    for lam in shapes(3) {
        for delta in shapes(3).into_iter().filter(|d| !d.is_empty()) {
            for mu in Partition::all_of_size((lam.size() + delta.size()) as u32) {
                let lr = littlewood_richardson(&lam, &delta, &mu);
                for f in Family::ALL {
                    assert_eq!(stable_tensor_multiplicity(&lam, &delta, &mu, f).unwrap(), lr, "{f} {lam} {delta} {mu}");
                }
            }
        }
    }
}

/// A uniformly random element of W, as a permutation and sign changes.
fn random_weyl(r: usize, f: Family, rng: &mut impl Rng) -> (Vec<usize>, Vec<i64>) {
    let mut perm: Vec<usize> = (0..r).collect();
    for i in (1..r).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    let mut signs = vec![1i64; r];
    if f != Family::A {
        for s in signs.iter_mut() {
            if rng.next_u64() & 1 == 1 {
                *s = -1;
            }
        }
        if f == Family::D && signs.iter().filter(|&&s| s < 0).count() % 2 == 1 {
            signs[0] = -signs[0];
        }
    }
    (perm, signs)
}

fn apply((perm, signs): &(Vec<usize>, Vec<i64>), v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    for (i, &x) in v.iter().enumerate() {
        out[perm[i]] = signs[i] * x;
    }
    out
}

#[test]
fn weight_systems_are_weyl_invariant() {
    let mut rng = chain_rng(7);
    for f in Family::ALL {
        let fr = fr(f, 3);
        for lam in ["1", "2", "1,1", "2,1", "1,1,1", "3,2"] {
            let map = weight_multiplicities(&lam.parse().unwrap(), fr).unwrap();
            for _ in 0..50 {
                let w = random_weyl(3, f, &mut rng);
                let image: BTreeMap<Vec<i64>, u64> = map.entries.iter().map(|(v, &m)| (apply(&w, v), m)).collect();
                assert_eq!(image, map.entries, "{fr} {lam}");
            }
        }
    }
}
