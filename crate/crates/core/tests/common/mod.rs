//! Independent reference computations used as oracles. Nothing here calls
//! into the library's linear algebra or lattice code.

#![allow(dead_code)]

use hyperarr::Arrangement;
use num_traits::ToPrimitive;

/// Rank by fraction-free (Bareiss) elimination over i128.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(p) = (rank..n_rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..n_rows {
            for c in col + 1..n_cols {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    rank
}

pub fn int_rows(a: &Arrangement) -> Vec<Vec<i64>> {
    a.forms()
        .iter()
        .map(|f| f.coeffs().iter().map(|c| c.to_i64().unwrap()).collect())
        .collect()
}

/// `chi(t) = sum over subsets S of (-1)^|S| t^(l - rank S)`, coefficients
/// indexed by the power of t.
pub fn whitney_chi(rows: &[Vec<i64>], dim: usize) -> Vec<i64> {
    assert!(rows.len() <= 16, "subset enumeration is exponential");
    let mut chi = vec![0i64; dim + 1];
    for mask in 0u32..(1 << rows.len()) {
        let sub: Vec<Vec<i64>> = (0..rows.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| rows[i].clone())
            .collect();
        let r = if sub.is_empty() {
            0
        } else {
            bareiss_rank(&sub)
        };
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        chi[dim - r] += sign;
    }
    chi
}

/// Points of F_q^l on no hyperplane, by enumeration.
pub fn brute_count(rows: &[Vec<i64>], dim: usize, q: u64) -> u64 {
    let q = q as i64;
    let total = (q as u64).pow(dim as u32);
    let mut count = 0;
    let mut point = vec![0i64; dim];
    for _ in 0..total {
        if rows.iter().all(|r| {
            r.iter()
                .zip(&point)
                .map(|(a, x)| a * x)
                .sum::<i64>()
                .rem_euclid(q)
                != 0
        }) {
            count += 1;
        }
        for c in point.iter_mut() {
            *c += 1;
            if *c < q {
                break;
            }
            *c = 0;
        }
    }
    count
}

pub fn eval_coeffs(coeffs: &[i64], t: i64) -> i128 {
    coeffs
        .iter()
        .rev()
        .fold(0i128, |acc, &c| acc * t as i128 + c as i128)
}

pub fn chi_coeffs(a: &Arrangement) -> Vec<i64> {
    let chi = hyperarr::char_data(a).chi;
    (0..=a.dim())
        .map(|k| chi.coeff(k).to_i64().unwrap())
        .collect()
}
