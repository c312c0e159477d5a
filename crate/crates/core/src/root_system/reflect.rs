//! Weyl group action by (signed) permutations.
//!
//! W is S_r for A, the hyperoctahedral group for C and B, and the subgroup of
//! evenly signed permutations for D.

use std::ops::Neg;

use num_traits::Zero;

use super::Family;

/// Moves `v` into the closed dominant chamber in place and returns det(w) of
/// the element used, or 0 when `v` is fixed by some reflection of W.
pub(crate) fn reflect_into_chamber<T>(v: &mut [T], family: Family) -> i8
where
    T: Copy + Ord + Neg<Output = T> + Zero,
{
    let mut sign: i8 = 1;
    let mut singular = false;
    if family != Family::A {
        let mut negatives = 0usize;
        for x in v.iter_mut() {
            if *x < T::zero() {
                *x = -*x;
                negatives += 1;
            } else if x.is_zero() && family != Family::D {
                // fixed by the reflection along ε_i (B) or 2ε_i (C)
                singular = true;
            }
        }
        if family != Family::D && negatives % 2 == 1 {
            sign = -sign;
        }
        if family == Family::D && negatives % 2 == 1 && !v.iter().any(|x| x.is_zero()) {
            // odd sign changes are not in W(D): leave the smallest entry negative
            sort_descending(v, &mut sign);
            let last = v.len() - 1;
            v[last] = -v[last];
            if has_repeat_abs(v) {
                return 0;
            }
            return sign;
        }
    }
    sort_descending(v, &mut sign);
    if singular || has_repeat(v, family) {
        0
    } else {
        sign
    }
}

fn sort_descending<T: Copy + Ord>(v: &mut [T], sign: &mut i8) {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] < v[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 1 {
        *sign = -*sign;
    }
    v.sort_unstable_by(|a, b| b.cmp(a));
}

fn has_repeat<T: Copy + Ord + Neg<Output = T> + Zero>(v: &[T], family: Family) -> bool {
    match family {
        Family::A => v.windows(2).any(|w| w[0] == w[1]),
        _ => has_repeat_abs(v),
    }
}

fn has_repeat_abs<T: Copy + Ord + Neg<Output = T> + Zero>(v: &[T]) -> bool {
    let abs = |x: T| if x < T::zero() { -x } else { x };
    v.windows(2).any(|w| abs(w[0]) == abs(w[1]))
}

/// Dominant representative of the W-orbit of an integral weight.
pub(crate) fn dominant_rep(v: &[i64], family: Family) -> Vec<i64> {
    let mut out = v.to_vec();
    reflect_into_chamber(&mut out, family);
    out
}

pub(crate) fn is_dominant_int(v: &[i64], family: Family) -> bool {
    let r = v.len();
    if r == 0 {
        return true;
    }
    if !v.windows(2).all(|w| w[0] >= w[1]) {
        return false;
    }
    match family {
        Family::A => true,
        Family::C | Family::B => v[r - 1] >= 0,
        Family::D => r < 2 || v[r - 2] >= v[r - 1].abs(),
    }
}

/// Every element of the W-orbit of a dominant integral weight, each once.
pub(crate) fn orbit(dominant: &[i64], family: Family) -> Vec<Vec<i64>> {
    let signed = family != Family::A;
    let mut base: Vec<i64> = if signed {
        dominant.iter().map(|x| x.abs()).collect()
    } else {
        dominant.to_vec()
    };
    base.sort_unstable();
    // parity constraint on the number of negated entries (D without zeros)
    let parity = if family == Family::D && !base.contains(&0) {
        Some(dominant.iter().filter(|&&x| x < 0).count() % 2)
    } else {
        None
    };
    let mut out = Vec::new();
    loop {
        if signed {
            let nonzero: Vec<usize> = (0..base.len()).filter(|&i| base[i] != 0).collect();
            for mask in 0u64..(1u64 << nonzero.len()) {
                if let Some(p) = parity {
                    if (mask.count_ones() as usize) % 2 != p {
                        continue;
                    }
                }
                let mut w = base.clone();
                for (bit, &i) in nonzero.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        w[i] = -w[i];
                    }
                }
                out.push(w);
            }
        } else {
            out.push(base.clone());
        }
        if !next_permutation(&mut base) {
            break;
        }
    }
    out
}

/// |W·μ| for a dominant integral weight, without enumerating the orbit.
pub(crate) fn orbit_size(dominant: &[i64], family: Family) -> u128 {
    let signed = family != Family::A;
    let mut vals: Vec<i64> = if signed {
        dominant.iter().map(|x| x.abs()).collect()
    } else {
        dominant.to_vec()
    };
    vals.sort_unstable();
    let mut size = factorial(vals.len());
    let mut i = 0;
    while i < vals.len() {
        let mut j = i;
        while j < vals.len() && vals[j] == vals[i] {
            j += 1;
        }
        size /= factorial(j - i);
        i = j;
    }
    if signed {
        let nonzero = vals.iter().filter(|&&x| x != 0).count();
        size <<= nonzero;
        if family == Family::D && nonzero == vals.len() && nonzero > 0 {
            size >>= 1;
        }
    }
    size
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Lexicographic successor; returns false after the last permutation.
fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn orbit_sizes_match_enumeration() {
        let cases: &[&[i64]] = &[&[2, 1, 0], &[1, 1, 0, 0], &[3, 2, 1], &[2, 2, -2], &[0, 0], &[4, 1, 1, 1]];
        for fam in Family::ALL {
            for &c in cases {
                if !is_dominant_int(c, fam) {
                    continue;
                }
                let orb = orbit(c, fam);
                let set: HashSet<_> = orb.iter().cloned().collect();
                assert_eq!(set.len(), orb.len(), "{fam:?} {c:?}");
                assert_eq!(orbit_size(c, fam), orb.len() as u128, "{fam:?} {c:?}");
                for w in &orb {
                    assert_eq!(dominant_rep(w, fam), c.to_vec());
                }
            }
        }
    }

    #[test]
    fn d_orbit_keeps_sign_class() {
        let orb = orbit(&[1, 1, -1], Family::D);
        assert!(orb.iter().all(|w| w.iter().filter(|&&x| x < 0).count() % 2 == 1));
        assert_eq!(orb.len(), 4);
    }

    #[test]
    fn d_dominance_allows_negative_tail() {
        assert!(is_dominant_int(&[2, -1], Family::D));
        assert!(!is_dominant_int(&[2, -1], Family::C));
        assert!(!is_dominant_int(&[1, -2], Family::D));
        assert!(is_dominant_int(&[3, 1, 0], Family::A));
    }
}
