//! Reduced simplicial homology of induced subcomplexes of a Stanley–Reisner
//! complex, over a prime field.

use std::collections::HashMap;

use super::ideal::{Monomial, SquarefreeIdeal};
use crate::error::{Error, Result};

/// Prime fields the oracle accepts. Arithmetic is done in `u64`, so any prime
/// below 2^31 is safe.
pub fn check_prime(p: u64) -> Result<()> {
    let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    if !is_prime || p >= 1 << 31 {
        return Err(Error::Input(format!("{p} is not a supported prime")));
    }
    Ok(())
}

fn inverse(a: u64, p: u64) -> u64 {
    // Fermat
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over GF(p) of the matrix whose columns are given as sparse
/// `(row, value)` lists with values already reduced mod `p`.
pub fn rank_mod_p(columns: Vec<Vec<(u32, u64)>>, p: u64) -> usize {
    // column reduction keyed by the largest row index
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for mut col in columns {
        col.retain(|&(_, v)| v != 0);
        col.sort_unstable_by_key(|&(r, _)| r);
        while let Some(&(low, coeff)) = col.last() {
            let Some(piv) = pivots.get(&low) else { break };
            let pc = piv.last().expect("stored pivots are non-empty").1;
            let factor = coeff * inverse(pc, p) % p;
            col = axpy(&col, piv, p - factor, p);
        }
        if let Some(&(low, _)) = col.last() {
            pivots.insert(low, col);
        }
    }
    pivots.len()
}

/// `a + factor * b` on sorted sparse vectors, dropping zeros.
fn axpy(a: &[(u32, u64)], b: &[(u32, u64)], factor: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        let (row, val) = if take_a {
            i += 1;
            a[i - 1]
        } else if take_b {
            j += 1;
            (b[j - 1].0, b[j - 1].1 * factor % p)
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, (a[i - 1].1 + b[j - 1].1 * factor) % p)
        };
        if val != 0 {
            out.push((row, val));
        }
    }
    out
}

/// Faces of the induced subcomplex on `w`, grouped by size (index 0 holds the
/// empty face).
pub fn faces_by_size(ideal: &SquarefreeIdeal, w: Monomial) -> Vec<Vec<Monomial>> {
    let gens: Vec<Monomial> = ideal.generators().iter().copied().filter(|&g| g & w == g).collect();
    let vars: Vec<u32> = (0..64).filter(|&i| w >> i & 1 == 1).collect();
    let mut levels: Vec<Vec<Monomial>> = vec![vec![0]];
    loop {
        let prev = levels.last().expect("at least the empty level");
        let mut next = Vec::new();
        for &f in prev {
            let top = if f == 0 { -1 } else { 63 - f.leading_zeros() as i32 };
            for &x in vars.iter().filter(|&&x| x as i32 > top) {
                let g = f | 1 << x;
                if !gens.iter().any(|&m| m >> x & 1 == 1 && m & g == m) {
                    next.push(g);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    levels
}

/// Reduced homology dimensions of the induced subcomplex on `w` over GF(p).
/// Entry `k` is the dimension of `H̃_{k-1}`; the complex `{∅}` (for `w = 0`)
/// gives `[1]`.
pub fn homology_dims(ideal: &SquarefreeIdeal, w: Monomial, p: u64) -> Result<Vec<usize>> {
    check_prime(p)?;
    if ideal.num_vars() < 64 && w >> ideal.num_vars() != 0 {
        return Err(Error::Input(format!("subset {w:#x} uses variables beyond {}", ideal.num_vars())));
    }
    Ok(homology_of_faces(&faces_by_size(ideal, w), p))
}

pub(crate) fn homology_of_faces(levels: &[Vec<Monomial>], p: u64) -> Vec<usize> {
    // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces
    let mut ranks = vec![0usize; levels.len() + 1];
    for k in 1..levels.len() {
        ranks[k] = boundary_rank(&levels[k - 1], &levels[k], p);
    }
    (0..levels.len()).map(|k| levels[k].len() - ranks[k] - ranks[k + 1]).collect()
}

fn boundary_rank(lower: &[Monomial], upper: &[Monomial], p: u64) -> usize {
    let index: HashMap<Monomial, u32> = lower.iter().enumerate().map(|(i, &f)| (f, i as u32)).collect();
    let columns = upper
        .iter()
        .map(|&f| {
            let mut rest = f;
            let mut sign_odd = false;
            let mut col = Vec::with_capacity(f.count_ones() as usize);
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                let val = if sign_odd { p - 1 } else { 1 };
                col.push((index[&(f & !bit)], val));
                sign_odd = !sign_odd;
                rest &= rest - 1;
            }
            col
        })
        .collect();
    rank_mod_p(columns, p)
}
