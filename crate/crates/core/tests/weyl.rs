use limitchain::{Family, FamilyRank, WeightVec};
use num_rational::Rational64;
use proptest::prelude::*;

/// Every element of W as (permutation, signs, det), by brute force.
fn weyl_group(f: Family, r: usize) -> Vec<(Vec<usize>, Vec<i64>, i8)> {
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..r {
        let mut next = Vec::new();
        for p in &perms {
            for i in (0..r).filter(|i| !p.contains(i)) {
                let mut q = p.clone();
                q.push(i);
                next.push(q);
            }
        }
        perms = next;
    }
    let mut out = Vec::new();
    for p in perms {
        let inversions = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let perm_sign: i8 = if inversions % 2 == 0 { 1 } else { -1 };
        let masks: Vec<u32> = match f {
            Family::A => vec![0],
            _ => (0..1u32 << r).collect(),
        };
        for mask in masks {
            let flips = mask.count_ones() as usize;
            if f == Family::D && flips % 2 == 1 {
                continue;
            }
            let signs: Vec<i64> = (0..r).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            // each sign change is a reflection for C and B, while for D the
            // flips come in pairs of even determinant
            let det = match f {
                Family::C | Family::B if flips % 2 == 1 => -perm_sign,
                _ => perm_sign,
            };
            out.push((p.clone(), signs, det));
        }
    }
    out
}

fn apply(w: &(Vec<usize>, Vec<i64>, i8), v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    for (i, &x) in v.iter().enumerate() {
        out[w.0[i]] = w.1[i] * x;
    }
    out
}

fn on_wall(fr: FamilyRank, v: &[i64]) -> bool {
    let v = WeightVec::from_ints(v);
    fr.positive_roots().iter().any(|a| v.dot(a) == Rational64::from_integer(0))
}

fn check(f: Family, r: usize, v: Vec<i64>) {
    let fr = FamilyRank::new(f, r).unwrap();
    let (dom, sign) = fr.dominant_reflect_shifted(&WeightVec::from_ints(&v));
    assert!(fr.is_dominant(&dom), "{fr} {v:?} ↦ {dom}");
    let dom = dom.to_ints().unwrap();
    let group = weyl_group(f, r);
    let hits: Vec<_> = group.iter().filter(|w| apply(w, &v) == dom).collect();
    assert!(!hits.is_empty(), "{fr}: {dom:?} not in the orbit of {v:?}");
    if on_wall(fr, &v) {
        assert_eq!(sign, 0, "{fr} {v:?}");
    } else {
        assert_eq!(hits.len(), 1, "regular weight fixed by a non-identity element");
        assert_eq!(sign, hits[0].2, "{fr} {v:?}");
    }
}

proptest! {
    #[test]
    fn reflection_matches_brute_force(
        fam in 0usize..4,
        r in 1usize..=3,
        raw in proptest::collection::vec(-4i64..=4, 3),
    ) {
        let f = Family::ALL[fam];
        prop_assume!(r >= f.min_rank());
        check(f, r, raw[..r].to_vec());
    }
}

#[test]
fn group_orders() {
    let order = |f, r| weyl_group(f, r).len();
    assert_eq!(order(Family::A, 3), 6);
    assert_eq!(order(Family::C, 3), 48);
    assert_eq!(order(Family::B, 2), 8);
    assert_eq!(order(Family::D, 3), 24);
}
