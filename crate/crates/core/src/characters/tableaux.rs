//! Type-A oracles built directly on tableaux, sharing no code with the
//! Freudenthal and Racah–Speiser routes.

use std::collections::BTreeMap;

use super::WeightMultiplicityMap;
use crate::error::{Error, Result};
use crate::root_system::{Family, FamilyRank};
use crate::shape::{HighestWeight, Partition};

/// Weight multiplicities of V(λ) for gl_r by enumerating semistandard Young
/// tableaux of shape λ over {1..r}; the weight of a tableau is its content.
pub fn ssyt_character(lambda: &Partition, rank: usize) -> Result<WeightMultiplicityMap> {
    let fr = FamilyRank::new(Family::A, rank)?;
    if lambda.len() > rank {
        return Err(Error::domain(format!("{lambda} has more than {rank} parts")));
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0i64; rank];
    let mut entries = BTreeMap::new();
    fill_ssyt(&cells, 0, rank, &mut filling, &mut content, &mut entries);
    Ok(WeightMultiplicityMap {
        highest: HighestWeight::from(lambda),
        fr,
        entries,
    })
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    k: usize,
    rank: usize,
    filling: &mut [Vec<usize>],
    content: &mut [i64],
    out: &mut BTreeMap<Vec<i64>, u64>,
) {
    let Some(&(i, j)) = cells.get(k) else {
        *out.entry(content.to_vec()).or_insert(0) += 1;
        return;
    };
    let mut lo = 1;
    if j > 0 {
        lo = lo.max(filling[i][j - 1]);
    }
    if i > 0 {
        lo = lo.max(filling[i - 1][j] + 1);
    }
    for v in lo..=rank {
        filling[i][j] = v;
        content[v - 1] += 1;
        fill_ssyt(cells, k + 1, rank, filling, content, out);
        content[v - 1] -= 1;
    }
}

/// The Littlewood–Richardson coefficient c^μ_{λδ}: the number of
/// semistandard fillings of μ/λ with content δ whose reverse reading word is
/// a lattice word.
pub fn littlewood_richardson(lambda: &Partition, delta: &Partition, mu: &Partition) -> u64 {
    if mu.size() != lambda.size() + delta.size() || lambda.len() > mu.len() {
        return 0;
    }
    let inner: Vec<usize> = (0..mu.len())
        .map(|i| lambda.parts().get(i).map_or(0, |&p| p as usize))
        .collect();
    let outer: Vec<usize> = mu.parts().iter().map(|&p| p as usize).collect();
    if inner.iter().zip(&outer).any(|(a, b)| a > b) {
        return 0;
    }
    // reading order: rows top to bottom, each row right to left
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|i| (inner[i]..outer[i]).rev().map(move |j| (i, j)))
        .collect();
    let content: Vec<usize> = delta.parts().iter().map(|&p| p as usize).collect();
    let mut filling: Vec<Vec<usize>> = outer.iter().map(|&len| vec![0; len]).collect();
    let mut used = vec![0usize; content.len()];
    count_lr(&cells, 0, &inner, &outer, &content, &mut filling, &mut used)
}

fn count_lr(
    cells: &[(usize, usize)],
    k: usize,
    inner: &[usize],
    outer: &[usize],
    content: &[usize],
    filling: &mut [Vec<usize>],
    used: &mut [usize],
) -> u64 {
    let Some(&(i, j)) = cells.get(k) else {
        return 1;
    };
    let mut total = 0;
    for v in 1..=content.len() {
        if used[v - 1] == content[v - 1] {
            continue;
        }
        // lattice condition on the reading word so far
        if v > 1 && used[v - 1] + 1 > used[v - 2] {
            continue;
        }
        // rows weakly increase: the cell to the right is already filled
        if j + 1 < outer[i] && filling[i][j + 1] < v {
            continue;
        }
        // columns strictly increase
        if i > 0 && j >= inner[i - 1] && filling[i - 1][j] >= v {
            continue;
        }
        filling[i][j] = v;
        used[v - 1] += 1;
        total += count_lr(cells, k + 1, inner, outer, content, filling, used);
        used[v - 1] -= 1;
        filling[i][j] = 0;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn ssyt_examples() {
        let one = ssyt_character(&p("1"), 2).unwrap();
        assert_eq!(one.entries.len(), 2);
        assert_eq!(one.dimension(), 2);
        assert_eq!(ssyt_character(&p("2,1"), 3).unwrap().dimension(), 8);
        let two = ssyt_character(&p("2"), 2).unwrap();
        let want: BTreeMap<Vec<i64>, u64> =
            [(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)].into_iter().collect();
        assert_eq!(two.entries, want);
        assert_eq!(ssyt_character(&p("2,1"), 3).unwrap().multiplicity(&[1, 1, 1]), 2);
    }

    #[test]
    fn lr_small_values() {
        assert_eq!(littlewood_richardson(&p("1"), &p("1"), &p("2")), 1);
        assert_eq!(littlewood_richardson(&p("1"), &p("1"), &p("1,1")), 1);
        assert_eq!(littlewood_richardson(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
        assert_eq!(littlewood_richardson(&p("2,1"), &p("2,1"), &p("4,2")), 1);
        assert_eq!(littlewood_richardson(&p("2,1"), &p("2,1"), &p("2,2,2")), 1);
        assert_eq!(littlewood_richardson(&p("1"), &p("1"), &p("0")), 0);
        assert_eq!(littlewood_richardson(&Partition::empty(), &p("3,1"), &p("3,1")), 1);
    }

    #[test]
    fn lr_sum_reproduces_dimension_products() {
        // Σ_μ c^μ_{λδ} f^μ = C(|μ|, |λ|) f^λ f^δ with f the number of standard tableaux
        fn standard(l: &Partition) -> u64 {
            let n = l.size();
            let mut hooks = 1u64;
            let parts = l.parts();
            for (i, &row) in parts.iter().enumerate() {
                for j in 0..row as usize {
                    let arm = row as usize - j - 1;
                    let leg = parts[i + 1..].iter().filter(|&&r| r as usize > j).count();
                    hooks *= (arm + leg + 1) as u64;
                }
            }
            (1..=n).product::<u64>() / hooks
        }
        let lam = p("2,1");
        let del = p("2");
        let total: u64 = Partition::all_of_size(5)
            .iter()
            .map(|mu| littlewood_richardson(&lam, &del, mu) * standard(mu))
            .sum();
        assert_eq!(total, 10 * standard(&lam) * standard(&del));
    }
}
